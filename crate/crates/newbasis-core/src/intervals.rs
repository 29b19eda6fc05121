//! Interval combinatorics on `[1,D]`: the strict-nesting relation, the
//! non-touching relation, the inductive family `S_D` for even `D`, the
//! characterizing axioms P0/P1/P2, counting statistics and the singleton
//! move `B[i]`.

use std::collections::BTreeSet;
use std::fmt;

/// A nonempty integer interval `[a,b]` inside `[1,D]`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Interval {
    pub a: u32,
    pub b: u32,
}

impl Interval {
    pub fn new(a: u32, b: u32) -> Self {
        assert!(1 <= a && a <= b, "invalid interval [{},{}]", a, b);
        Interval { a, b }
    }

    pub fn len(&self) -> u32 {
        self.b - self.a + 1
    }

    pub fn is_odd(&self) -> bool {
        self.len() % 2 == 1
    }

    pub fn contains(&self, i: u32) -> bool {
        self.a <= i && i <= self.b
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.a <= other.a && other.b <= self.b
    }

    /// Digit-run rendering used by the tables: `[1,3]` prints as `123`.
    pub fn digits(&self) -> String {
        if self.b <= 9 {
            (self.a..=self.b).map(|i| i.to_string()).collect()
        } else {
            format!("{}-{}", self.a, self.b)
        }
    }
}

/// `I ≺ I'` iff `a' < a ≤ b < b'` (strict nesting at both ends).
pub fn is_prec(i1: &Interval, i2: &Interval) -> bool {
    i2.a < i1.a && i1.b < i2.b
}

/// `I ♠ I'` iff the gap between them is at least 2.
pub fn is_nontouching(i1: &Interval, i2: &Interval) -> bool {
    i2.a >= i1.b + 2 || i1.a >= i2.b + 2
}

/// A finite set of intervals of `[1,d]`, kept sorted and duplicate-free.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct IntervalSet {
    d: u32,
    items: Vec<Interval>,
}

impl IntervalSet {
    pub fn new(d: u32, mut items: Vec<Interval>) -> Self {
        for iv in &items {
            assert!(iv.b <= d, "interval [{},{}] exceeds D={}", iv.a, iv.b, d);
        }
        items.sort();
        items.dedup();
        IntervalSet { d, items }
    }

    pub fn empty(d: u32) -> Self {
        IntervalSet { d, items: Vec::new() }
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn items(&self) -> &[Interval] {
        &self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn contains(&self, iv: &Interval) -> bool {
        self.items.binary_search(iv).is_ok()
    }

    pub fn contains_singleton(&self, i: u32) -> bool {
        self.contains(&Interval::new(i, i))
    }

    /// Members of length ≡ h (mod 2); `B^0` for h = 0, `B^1` for h = 1.
    pub fn parity_part(&self, h: u32) -> Vec<Interval> {
        self.items
            .iter()
            .copied()
            .filter(|iv| iv.len() % 2 == h)
            .collect()
    }

    pub fn even_part(&self) -> Vec<Interval> {
        self.parity_part(0)
    }

    pub fn odd_part(&self) -> Vec<Interval> {
        self.parity_part(1)
    }

    /// `B¹` as an interval set over the same `d`.
    pub fn odd_part_set(&self) -> IntervalSet {
        IntervalSet::new(self.d, self.odd_part())
    }

    /// `B^h_j = {I ∈ B^h : j ∈ I}` cardinality.
    pub fn count_through(&self, h: u32, j: u32) -> usize {
        self.items
            .iter()
            .filter(|iv| iv.len() % 2 == h && iv.contains(j))
            .count()
    }

    /// Paper-style rendering with members in canonical order, e.g. `<2,123>`
    /// prints here as `<123,2>`-free canonical form `<2,123>` only when the
    /// canonical sort matches; table fixtures carry their own member order.
    pub fn display_with_order(&self, order: &[Interval]) -> String {
        let body: Vec<String> = order.iter().map(Interval::digits).collect();
        format!("<{}>", body.join(","))
    }

    pub fn json(&self) -> String {
        let ivs: Vec<String> = self
            .items
            .iter()
            .map(|iv| format!("[{},{}]", iv.a, iv.b))
            .collect();
        format!("{{\"d\":{},\"intervals\":[{}]}}", self.d, ivs.join(","))
    }

    /// Parse a digit-run list like `<2,123>` over ambient size `d`.
    pub fn parse(d: u32, text: &str) -> Option<IntervalSet> {
        let inner = text.strip_prefix('<')?.strip_suffix('>')?;
        let mut items = Vec::new();
        if !inner.is_empty() {
            for run in inner.split(',') {
                let digits: Vec<u32> = run.chars().map(|c| c.to_digit(10)).collect::<Option<_>>()?;
                if digits.is_empty() {
                    return None;
                }
                let a = digits[0];
                let b = *digits.last().unwrap();
                for (k, &v) in digits.iter().enumerate() {
                    if v != a + k as u32 {
                        return None;
                    }
                }
                items.push(Interval::new(a, b));
            }
        }
        Some(IntervalSet::new(d, items))
    }
}

impl fmt::Display for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with_order(&self.items))
    }
}

/// `X_B[a,b]`: union of the odd-length members of `B` contained in `[a,b]`.
pub fn xcal(b: &IntervalSet, a: u32, bnd: u32) -> BTreeSet<u32> {
    let mut out = BTreeSet::new();
    for iv in b.odd_part() {
        if a <= iv.a && iv.b <= bnd {
            out.extend(iv.a..=iv.b);
        }
    }
    out
}

/// The injective map `ξ_i : I_{D-2} → I_D`.
pub fn xi_i(d: u32, i: u32, iv: &Interval) -> Interval {
    assert!(d >= 2 && (1..=d).contains(&i));
    assert!(iv.b <= d - 2);
    if i <= iv.a {
        Interval::new(iv.a + 2, iv.b + 2)
    } else if i >= iv.b + 2 {
        *iv
    } else {
        Interval::new(iv.a, iv.b + 2)
    }
}

/// `t_i : R_{D-2} → R_D`, `B' ↦ {ξ_i(I')} ⊔ {i}`.
pub fn t_i(d: u32, i: u32, bprime: &IntervalSet) -> IntervalSet {
    assert_eq!(bprime.d(), d - 2);
    let mut items: Vec<Interval> = bprime.items().iter().map(|iv| xi_i(d, i, iv)).collect();
    items.push(Interval::new(i, i));
    IntervalSet::new(d, items)
}

/// The nested chains `{[1,D],[2,D-1],…,[k,D+1-k]}`, k = 0..D/2 (even D).
pub fn primitive_sets(d: u32) -> Vec<IntervalSet> {
    assert_eq!(d % 2, 0, "primitive_sets needs even D");
    (0..=d / 2)
        .map(|k| {
            let items = (1..=k).map(|j| Interval::new(j, d + 1 - j)).collect();
            IntervalSet::new(d, items)
        })
        .collect()
}

/// The family `S_D` for even `D`, by the inductive definition.
pub fn enumerate_s(d: u32) -> Vec<IntervalSet> {
    assert_eq!(d % 2, 0, "enumerate_s needs even D; see the odd module");
    let mut out: BTreeSet<IntervalSet> = primitive_sets(d).into_iter().collect();
    if d >= 2 {
        for bp in enumerate_s(d - 2) {
            for i in 1..=d {
                out.insert(t_i(d, i, &bp));
            }
        }
    }
    out.into_iter().collect()
}

/// Per-axiom outcome of the P0/P1/P2 check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub p0: bool,
    pub p1: bool,
    pub p2: bool,
}

impl AxiomReport {
    pub fn all(&self) -> bool {
        self.p0 && self.p1 && self.p2
    }
}

pub fn check_axioms(b: &IntervalSet) -> AxiomReport {
    let p0 = check_p0(b);
    let p1 = check_p1(b);
    let p2 = h_sequence(b).is_some() && check_p2_density(b);
    AxiomReport { p0, p1, p2 }
}

fn check_p0(b: &IntervalSet) -> bool {
    let items = b.items();
    for (n, i1) in items.iter().enumerate() {
        for i2 in &items[n + 1..] {
            if !(is_nontouching(i1, i2) || is_prec(i1, i2) || is_prec(i2, i1)) {
                return false;
            }
        }
    }
    true
}

fn check_p1(b: &IntervalSet) -> bool {
    for iv in b.odd_part() {
        if iv.len() >= 3 {
            let x = xcal(b, iv.a + 1, iv.b - 1);
            let mut need = iv.a + 1;
            while need < iv.b {
                if !x.contains(&need) {
                    return false;
                }
                need += 2;
            }
        }
    }
    true
}

/// The `(P_2)` ladder `0 = h_0 < … < h_{2k+1} = D+1` attached to `B^0`,
/// or `None` when no valid ladder exists.
pub fn h_sequence(b: &IntervalSet) -> Option<Vec<u32>> {
    let d = b.d();
    let mut evens = b.even_part();
    evens.sort_by_key(|iv| iv.a);
    let k = evens.len();
    // B^0 must be [h_1,h_2k] ⊃ [h_2,h_{2k-1}] ⊃ … ⊃ [h_k,h_{k+1}]
    let mut h = Vec::with_capacity(2 * k + 2);
    h.push(0);
    for iv in &evens {
        h.push(iv.a);
    }
    for iv in evens.iter().rev() {
        h.push(iv.b);
    }
    h.push(d + 1);
    for w in h.windows(2) {
        if w[0] >= w[1] {
            return None;
        }
    }
    for (j, &hj) in h.iter().enumerate() {
        if hj % 2 != (j as u32) % 2 {
            return None;
        }
    }
    Some(h)
}

fn check_p2_density(b: &IntervalSet) -> bool {
    let h = match h_sequence(b) {
        Some(h) => h,
        None => return false,
    };
    let k = (h.len() - 2) / 2;
    if k == 0 {
        return true;
    }
    for j in 0..=2 * k {
        if j == k || h[j + 1] < h[j] + 3 {
            continue;
        }
        let (lo, hi) = if j < k {
            (h[j] + 1, h[j + 1] - 2)
        } else {
            (h[j] + 2, h[j + 1] - 1)
        };
        let x = xcal(b, lo, hi);
        let mut need = lo;
        while need <= hi {
            if !x.contains(&need) {
                return false;
            }
            need += 2;
        }
    }
    true
}

/// The involution induced by `i ↦ D+1-i`.
pub fn tau(b: &IntervalSet) -> IntervalSet {
    let d = b.d();
    let items = b
        .items()
        .iter()
        .map(|iv| Interval::new(d + 1 - iv.b, d + 1 - iv.a))
        .collect();
    IntervalSet::new(d, items)
}

/// The counting functions `f_j(B) = |B¹_j| - |B⁰_j| - κ` and the bits
/// `ε_j(B) = f_j(f_j+1)/2 mod 2`, for `j = 1..D`.
pub fn f_eps(b: &IntervalSet) -> (Vec<i64>, Vec<u8>) {
    let d = b.d();
    let kappa = (b.even_part().len() % 2) as i64;
    let mut f = Vec::with_capacity(d as usize);
    let mut eps = Vec::with_capacity(d as usize);
    for j in 1..=d {
        let fj = b.count_through(1, j) as i64 - b.count_through(0, j) as i64 - kappa;
        let m = fj.rem_euclid(4);
        f.push(fj);
        eps.push(if m == 1 || m == 2 { 1 } else { 0 });
    }
    (f, eps)
}

#[derive(Debug)]
pub enum MoveError {
    NotASingleton(u32),
    ContractViolation(&'static str),
}

impl fmt::Display for MoveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MoveError::NotASingleton(i) => write!(f, "{{{}}} is not a member of the set", i),
            MoveError::ContractViolation(m) => write!(f, "move contract violation: {}", m),
        }
    }
}

impl std::error::Error for MoveError {}

/// The move `C = B[i]` defined case by case for `{i} ∈ B`, `B ∈ S_D`.
///
/// Writing `Z_i` for the odd members strictly surrounding `i` and `h` for
/// the `(P_2)` ladder with `h_s < i < h_{s+1}`:
/// in the middle gap (`s = k`) the singleton is deleted (`Z_i` empty) or the
/// minimal member of `Z_i` is split at `i`; in any other gap the split also
/// applies whenever `Z_i` is nonempty, and when `Z_i` is empty the even
/// member ending at the gap is stretched to `i` with a new odd interval
/// filling the rest of the gap.
pub fn move_singleton(b: &IntervalSet, i: u32) -> Result<IntervalSet, MoveError> {
    if !b.contains_singleton(i) {
        return Err(MoveError::NotASingleton(i));
    }
    let d = b.d();
    let h = h_sequence(b).ok_or(MoveError::ContractViolation("no valid h-sequence"))?;
    let k = (h.len() - 2) / 2;
    let singleton = Interval::new(i, i);
    let z_i: Vec<Interval> = b
        .odd_part()
        .into_iter()
        .filter(|iv| iv.a < i && i < iv.b)
        .collect();
    let z_min = z_i.iter().min_by_key(|iv| iv.len()).copied();
    let s = match h.windows(2).position(|w| w[0] < i && i < w[1]) {
        Some(s) => s,
        None => return Err(MoveError::ContractViolation("i lies on the h-ladder")),
    };

    let split = |cut: Interval| -> Vec<Interval> {
        let mut items: Vec<Interval> = b
            .items()
            .iter()
            .copied()
            .filter(|iv| *iv != cut && *iv != singleton)
            .collect();
        items.push(Interval::new(cut.a, i - 1));
        items.push(Interval::new(i + 1, cut.b));
        items
    };

    let items: Vec<Interval> = if s == k {
        match z_min {
            None => b
                .items()
                .iter()
                .copied()
                .filter(|iv| *iv != singleton)
                .collect(),
            Some(cut) => split(cut),
        }
    } else if s < k {
        if i % 2 == (s as u32) % 2 {
            let cut = z_min.ok_or(MoveError::ContractViolation("Z_i empty in case (iii)"))?;
            split(cut)
        } else if let Some(cut) = z_min {
            split(cut)
        } else {
            // stretch [h_{s+1}, h_{2k-s}] down to i, fill (i, h_{s+1}) oddly
            let old = Interval::new(h[s + 1], h[2 * k - s]);
            if !b.contains(&old) {
                return Err(MoveError::ContractViolation("missing even member (vii)"));
            }
            let mut items: Vec<Interval> = b
                .items()
                .iter()
                .copied()
                .filter(|iv| *iv != old && *iv != singleton)
                .collect();
            items.push(Interval::new(i, h[2 * k - s]));
            items.push(Interval::new(i + 1, h[s + 1] - 1));
            items
        }
    } else {
        if i % 2 == (s as u32 + 1) % 2 {
            let cut = z_min.ok_or(MoveError::ContractViolation("Z_i empty in case (v)"))?;
            split(cut)
        } else if let Some(cut) = z_min {
            split(cut)
        } else {
            // mirror of (vii): stretch [h_{2k+1-s}, h_s] up to i
            let old = Interval::new(h[2 * k + 1 - s], h[s]);
            if !b.contains(&old) {
                return Err(MoveError::ContractViolation("missing even member (viii)"));
            }
            let mut items: Vec<Interval> = b
                .items()
                .iter()
                .copied()
                .filter(|iv| *iv != old && *iv != singleton)
                .collect();
            items.push(Interval::new(h[2 * k + 1 - s], i));
            items.push(Interval::new(h[s] + 1, i - 1));
            items
        }
    };
    Ok(IntervalSet::new(d, items))
}

/// `|S^m_D|` for m = 0..D/2, computed by enumeration.
pub fn count_by_m(d: u32) -> Vec<u64> {
    let mut counts = vec![0u64; (d / 2 + 1) as usize];
    for b in enumerate_s(d) {
        counts[b.even_part().len()] += 1;
    }
    counts
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r = 1u64;
    for j in 0..k {
        r = r * (n - j) / (j + 1);
    }
    r
}

/// Test-only independent oracle for `S'_D`: depth-first enumeration of all
/// P0-compatible families (P0 is hereditary, so the search tree visits each
/// family once), filtered by P1 and P2. Exponential; intended for D ≤ 8.
pub mod oracle {
    use super::*;

    pub fn enumerate_s_prime(d: u32) -> Vec<IntervalSet> {
        let mut all: Vec<Interval> = Vec::new();
        for a in 1..=d {
            for b in a..=d {
                all.push(Interval::new(a, b));
            }
        }
        let mut found = Vec::new();
        let mut chosen: Vec<Interval> = Vec::new();
        dfs(d, &all, 0, &mut chosen, &mut found);
        found.sort();
        found
    }

    fn dfs(d: u32, all: &[Interval], start: usize, chosen: &mut Vec<Interval>, out: &mut Vec<IntervalSet>) {
        let cand = IntervalSet::new(d, chosen.clone());
        let rep = check_axioms(&cand);
        debug_assert!(rep.p0);
        if rep.all() {
            out.push(cand);
        }
        for idx in start..all.len() {
            let iv = all[idx];
            let ok = chosen
                .iter()
                .all(|c| is_nontouching(c, &iv) || is_prec(c, &iv) || is_prec(&iv, c));
            if ok {
                chosen.push(iv);
                dfs(d, all, idx + 1, chosen, out);
                chosen.pop();
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(d: u32, items: &[(u32, u32)]) -> IntervalSet {
        IntervalSet::new(d, items.iter().map(|&(a, b)| Interval::new(a, b)).collect())
    }

    #[test]
    fn prec_and_nontouching() {
        assert!(is_prec(&Interval::new(2, 3), &Interval::new(1, 4)));
        assert!(!is_prec(&Interval::new(1, 4), &Interval::new(1, 4)));
        assert!(!is_prec(&Interval::new(1, 2), &Interval::new(2, 5)));
        assert!(is_nontouching(&Interval::new(1, 2), &Interval::new(4, 5)));
        assert!(!is_nontouching(&Interval::new(1, 2), &Interval::new(3, 4)));
        assert!(!is_nontouching(&Interval::new(1, 3), &Interval::new(2, 5)));
    }

    #[test]
    fn xcal_examples() {
        let b = set(4, &[(2, 2), (1, 3)]);
        assert_eq!(xcal(&b, 2, 2), BTreeSet::from([2]));
        let b = set(4, &[(1, 4), (2, 3)]);
        assert!(xcal(&b, 2, 3).is_empty());
        let b = set(5, &[(1, 3), (5, 5)]);
        assert_eq!(xcal(&b, 1, 5), BTreeSet::from([1, 2, 3, 5]));
    }

    #[test]
    fn xi_cases() {
        assert_eq!(xi_i(4, 2, &Interval::new(1, 1)), Interval::new(1, 3));
        assert_eq!(xi_i(4, 1, &Interval::new(1, 2)), Interval::new(3, 4));
        assert_eq!(xi_i(4, 4, &Interval::new(1, 2)), Interval::new(1, 2));
    }

    #[test]
    fn t_i_examples() {
        assert_eq!(t_i(2, 1, &IntervalSet::empty(0)), set(2, &[(1, 1)]));
        assert_eq!(t_i(4, 2, &set(2, &[(1, 1)])), set(4, &[(2, 2), (1, 3)]));
        // ξ_3 stretches {2} to [2,4] (2 < 3 < 4); the image is the set
        // rendered <3,234,12345> in the D=6 table
        assert_eq!(
            t_i(6, 3, &set(4, &[(2, 2), (1, 3)])),
            set(6, &[(1, 5), (2, 4), (3, 3)])
        );
    }

    #[test]
    fn primitives() {
        assert_eq!(
            primitive_sets(4),
            vec![set(4, &[]), set(4, &[(1, 4)]), set(4, &[(1, 4), (2, 3)])]
        );
        assert_eq!(primitive_sets(0), vec![IntervalSet::empty(0)]);
        let p6 = primitive_sets(6);
        assert_eq!(p6.len(), 4);
        assert_eq!(p6[3], set(6, &[(1, 6), (2, 5), (3, 4)]));
    }

    #[test]
    fn enumeration_counts() {
        for d in [0u32, 2, 4, 6, 8] {
            assert_eq!(enumerate_s(d).len(), 1usize << d, "|S_{}|", d);
        }
    }

    #[test]
    fn axioms_examples() {
        assert!(check_axioms(&set(4, &[(1, 4), (2, 3)])).all());
        let rep = check_axioms(&set(4, &[(1, 1), (2, 2)]));
        assert!(!rep.p0);
        // {[1,3]} over d=4 fails P1 at X_B[2,2]
        let rep = check_axioms(&set(4, &[(1, 3)]));
        assert!(rep.p0 && !rep.p1);
    }

    #[test]
    fn h_sequence_examples() {
        assert_eq!(h_sequence(&set(4, &[(1, 4), (2, 3)])), Some(vec![0, 1, 2, 3, 4, 5]));
        assert_eq!(h_sequence(&set(4, &[])), Some(vec![0, 5]));
        assert_eq!(h_sequence(&set(4, &[(2, 2), (1, 3)])), Some(vec![0, 5]));
    }

    #[test]
    fn tau_examples() {
        assert_eq!(tau(&set(4, &[(1, 1)])), set(4, &[(4, 4)]));
        assert_eq!(tau(&set(4, &[(1, 4), (2, 3)])), set(4, &[(1, 4), (2, 3)]));
        assert_eq!(tau(&set(4, &[(2, 2), (1, 3)])), set(4, &[(3, 3), (2, 4)]));
        for b in enumerate_s(6) {
            assert_eq!(tau(&tau(&b)), b);
            assert!(check_axioms(&tau(&b)).all());
        }
    }

    #[test]
    fn f_eps_examples() {
        let (f, e) = f_eps(&set(4, &[(2, 2), (1, 3)]));
        assert_eq!(f, vec![1, 2, 1, 0]);
        assert_eq!(e, vec![1, 1, 1, 0]);
        let (f, e) = f_eps(&set(4, &[(1, 4), (2, 3)]));
        assert_eq!(f, vec![-1, -2, -2, -1]);
        assert_eq!(e, vec![0, 1, 1, 0]);
        let (f, e) = f_eps(&IntervalSet::empty(4));
        assert_eq!(f, vec![0, 0, 0, 0]);
        assert_eq!(e, vec![0, 0, 0, 0]);
    }

    #[test]
    fn move_examples() {
        let b = set(2, &[(1, 1)]);
        assert_eq!(move_singleton(&b, 1).unwrap(), IntervalSet::empty(2));
        let b = set(4, &[(2, 2), (1, 3)]);
        assert_eq!(move_singleton(&b, 2).unwrap(), set(4, &[(1, 1), (3, 3)]));
        assert!(move_singleton(&set(4, &[(1, 4)]), 2).is_err());
    }

    #[test]
    fn move_stays_in_family_and_shifts_eps() {
        for d in [2u32, 4, 6] {
            let family: BTreeSet<IntervalSet> = enumerate_s(d).into_iter().collect();
            for b in &family {
                for i in 1..=d {
                    if !b.contains_singleton(i) {
                        continue;
                    }
                    let c = move_singleton(b, i).unwrap();
                    assert!(family.contains(&c), "B[i] left S_{} for {:?} [{}]", d, b, i);
                    let (_, eb) = f_eps(b);
                    let (_, ec) = f_eps(&c);
                    for j in 1..=d as usize {
                        let expect = if j as u32 == i {
                            eb[j - 1] ^ 1
                        } else {
                            eb[j - 1]
                        };
                        assert_eq!(ec[j - 1], expect, "eps shift failed at j={}", j);
                    }
                    assert_eq!(
                        c.even_part().len(),
                        b.even_part().len(),
                        "move must preserve |B^0|"
                    );
                }
            }
        }
    }

    #[test]
    fn counts_match_binomials() {
        for d in [0u32, 2, 4, 6, 8] {
            let counts = count_by_m(d);
            for (m, &c) in counts.iter().enumerate() {
                let expect = binomial(d as u64 + 1, d as u64 / 2 - m as u64);
                assert_eq!(c, expect, "|S^{}_{}|", m, d);
            }
        }
        assert_eq!(count_by_m(4), vec![10, 5, 1]);
        assert_eq!(count_by_m(6), vec![35, 21, 7, 1]);
        assert_eq!(count_by_m(0), vec![1]);
    }

    #[test]
    fn odd_part_lands_in_s0_and_restricts_to_bijection() {
        for d in [2u32, 4, 6] {
            let family: BTreeSet<IntervalSet> = enumerate_s(d).into_iter().collect();
            let s0: BTreeSet<IntervalSet> = family
                .iter()
                .filter(|b| b.even_part().is_empty())
                .cloned()
                .collect();
            let mut image = BTreeSet::new();
            for b in &family {
                let b1 = b.odd_part_set();
                assert!(s0.contains(&b1), "B^1 left S^0_{}", d);
                if b.len() == (d / 2) as usize {
                    assert!(image.insert(b1), "odd-part map not injective on |B| = D/2");
                }
            }
            assert_eq!(image, s0);
        }
    }

    #[test]
    fn inductive_family_equals_axiom_family() {
        for d in [0u32, 2, 4, 6] {
            let inductive = enumerate_s(d);
            let filtered = oracle::enumerate_s_prime(d);
            assert_eq!(inductive, filtered, "S_D != S'_D at D={}", d);
        }
    }

    #[test]
    fn nesting_facts() {
        // no even member inside an odd one: no even member inside an odd member; inner odd-member count: |X(I)| count
        for d in [2u32, 4, 6, 8] {
            for b in enumerate_s(d) {
                let odd = b.odd_part();
                for i in &odd {
                    for j in b.even_part() {
                        assert!(!i.contains_interval(&j), "even inside odd in {:?}", b);
                    }
                    let inside = odd.iter().filter(|x| i.contains_interval(x)).count() as u32;
                    assert_eq!(inside, (i.b - i.a + 2) / 2);
                }
                // odd members sit inside ladder gaps: odd members live strictly inside one ladder gap
                let h = h_sequence(&b).unwrap();
                for iv in &odd {
                    assert!(h
                        .windows(2)
                        .any(|w| w[0] < iv.a && iv.b < w[1]));
                }
                // singleton factorization: singletons come from t_i
                for i in 1..=d {
                    if b.contains_singleton(i) {
                        let mut rest = Vec::new();
                        for iv in b.items() {
                            if *iv == Interval::new(i, i) {
                                continue;
                            }
                            rest.push(unshift(i, iv));
                        }
                        let bp = IntervalSet::new(d - 2, rest);
                        assert!(check_axioms(&bp).all());
                        assert_eq!(t_i(d, i, &bp), b);
                    }
                }
            }
        }
    }

    /// Inverse of ξ_i on intervals not containing the singleton slot.
    fn unshift(i: u32, iv: &Interval) -> Interval {
        if iv.a > i {
            Interval::new(iv.a - 2, iv.b - 2)
        } else if iv.b < i {
            *iv
        } else {
            Interval::new(iv.a, iv.b - 2)
        }
    }

    #[test]
    fn t_i_count_bookkeeping() {
        // insertion count bookkeeping for all (B', i), even D ≤ 8
        for d in [2u32, 4, 6, 8] {
            for bp in enumerate_s(d - 2) {
                for i in 1..=d {
                    let b = t_i(d, i, &bp);
                    assert_eq!(b.even_part().len(), bp.even_part().len());
                    for h in [0u32, 1] {
                        for r in 1..=(d - 2) {
                            let lhs = bp.count_through(h, r);
                            if r <= i.saturating_sub(2) {
                                assert_eq!(lhs, b.count_through(h, r));
                            }
                            if r >= i {
                                assert_eq!(lhs, b.count_through(h, r + 2));
                            }
                        }
                        if 1 < i && i < d {
                            let prev = bp.count_through(h, i - 1);
                            assert_eq!(b.count_through(h, i - 1), prev);
                            assert_eq!(b.count_through(h, i + 1), prev);
                            assert_eq!(b.count_through(h, i), prev + h as usize);
                        }
                        if i == d {
                            assert_eq!(b.count_through(h, i - 1), 0);
                        }
                        if i == 1 {
                            assert_eq!(b.count_through(h, 2), 0);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn parse_round_trip() {
        let b = IntervalSet::parse(4, "<2,123>").unwrap();
        assert_eq!(b, set(4, &[(2, 2), (1, 3)]));
        assert_eq!(b.json(), "{\"d\":4,\"intervals\":[[1,3],[2,2]]}");
        assert_eq!(IntervalSet::parse(4, "<>").unwrap(), IntervalSet::empty(4));
    }
}
