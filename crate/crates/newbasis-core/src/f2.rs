//! The symplectic F2-space `V` with basis `e_1..e_D`, the embeddings `T_i`,
//! the vector `ε(B)` and subspace `⟨B⟩` attached to an interval set, the
//! interval decomposition of vectors with its `u`-statistic, the vertex sets
//! `V(s)`, the graph on `V`, and the partial order transported from `S_D`.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use crate::intervals::{enumerate_s, f_eps, Interval, IntervalSet};

/// A vector of `V`, stored as a bitmask (bit `i-1` is the coefficient of
/// `e_i`). Supports `D ≤ 64`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct F2Vector {
    pub d: u32,
    pub bits: u64,
}

impl F2Vector {
    pub fn zero(d: u32) -> Self {
        F2Vector { d, bits: 0 }
    }

    pub fn basis(d: u32, i: u32) -> Self {
        assert!((1..=d).contains(&i));
        F2Vector { d, bits: 1 << (i - 1) }
    }

    pub fn from_bits(d: u32, bits: u64) -> Self {
        assert!(d == 64 || bits < (1u64 << d));
        F2Vector { d, bits }
    }

    pub fn get(&self, i: u32) -> bool {
        (self.bits >> (i - 1)) & 1 == 1
    }

    pub fn add(&self, other: &F2Vector) -> F2Vector {
        assert_eq!(self.d, other.d);
        F2Vector { d: self.d, bits: self.bits ^ other.bits }
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    /// Digit-string rendering: `e_1+e_2+e_3+e_5` prints as `"1235"`,
    /// zero as `"0"`.
    pub fn digits(&self) -> String {
        if self.bits == 0 {
            return "0".to_string();
        }
        if self.d <= 9 {
            (1..=self.d).filter(|&i| self.get(i)).map(|i| i.to_string()).collect()
        } else {
            let parts: Vec<String> = (1..=self.d)
                .filter(|&i| self.get(i))
                .map(|i| i.to_string())
                .collect();
            parts.join(",")
        }
    }

    pub fn parse(d: u32, text: &str) -> Option<F2Vector> {
        if text == "0" {
            return Some(F2Vector::zero(d));
        }
        let mut bits = 0u64;
        for c in text.chars() {
            let i = c.to_digit(10)?;
            if i < 1 || i > d {
                return None;
            }
            bits |= 1 << (i - 1);
        }
        Some(F2Vector { d, bits })
    }

    pub fn json(&self) -> String {
        let s: String = (1..=self.d)
            .map(|i| if self.get(i) { '1' } else { '0' })
            .collect();
        format!("{{\"d\":{},\"bits\":\"{}\"}}", self.d, s)
    }

    /// The unique expression as a sum of pairwise non-touching interval
    /// indicators: the maximal runs of consecutive set bits.
    pub fn decompose(&self) -> Vec<Interval> {
        let mut parts = Vec::new();
        let mut i = 1;
        while i <= self.d {
            if self.get(i) {
                let a = i;
                while i < self.d && self.get(i + 1) {
                    i += 1;
                }
                parts.push(Interval::new(a, i));
            }
            i += 1;
        }
        parts
    }
}

impl fmt::Display for F2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.digits())
    }
}

/// The symplectic form: `(e_i, e_j) = 1` iff `|i-j| = 1`.
pub fn pairing(x: &F2Vector, y: &F2Vector) -> u8 {
    assert_eq!(x.d, y.d, "pairing dimension mismatch");
    let n = (x.bits & (y.bits << 1)).count_ones() + (x.bits & (y.bits >> 1)).count_ones();
    (n % 2) as u8
}

pub fn e_of_interval(d: u32, iv: &Interval) -> F2Vector {
    assert!(iv.b <= d);
    let bits = ((1u64 << iv.len()) - 1) << (iv.a - 1);
    F2Vector { d, bits }
}

/// The form-preserving embedding `T_i : V' → V`.
pub fn t_map(d: u32, i: u32, xp: &F2Vector) -> F2Vector {
    assert!(d >= 2 && (1..=d).contains(&i));
    assert_eq!(xp.d, d - 2);
    let mut out = F2Vector::zero(d);
    for j in 1..=d - 2 {
        if !xp.get(j) {
            continue;
        }
        let img = if i == 1 {
            F2Vector::basis(d, j + 2)
        } else if j <= i - 2 {
            // covers i == d, where every j is at most i-2
            F2Vector::basis(d, j)
        } else if j == i - 1 {
            let mut v = F2Vector::basis(d, i - 1);
            v = v.add(&F2Vector::basis(d, i));
            v.add(&F2Vector::basis(d, i + 1))
        } else {
            F2Vector::basis(d, j + 2)
        };
        out = out.add(&img);
    }
    out
}

/// `ε(B) = Σ ε_i(B) e_i`.
pub fn eps_vector(b: &IntervalSet) -> F2Vector {
    let (_, eps) = f_eps(b);
    let mut bits = 0u64;
    for (j, &e) in eps.iter().enumerate() {
        if e == 1 {
            bits |= 1 << j;
        }
    }
    F2Vector { d: b.d(), bits }
}

/// A subspace of `V` held as a reduced row-echelon basis (pivots are the
/// lowest set bits, rows sorted).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct F2Subspace {
    pub d: u32,
    rows: Vec<u64>,
}

impl F2Subspace {
    pub fn from_vectors(d: u32, vecs: &[F2Vector]) -> Self {
        let mut rows: Vec<u64> = Vec::new();
        for v in vecs {
            assert_eq!(v.d, d);
            Self::insert_row(&mut rows, v.bits);
        }
        rows.sort_unstable();
        F2Subspace { d, rows }
    }

    fn insert_row(rows: &mut Vec<u64>, mut v: u64) {
        for &r in rows.iter() {
            let pivot = r & r.wrapping_neg();
            if v & pivot != 0 {
                v ^= r;
            }
        }
        if v != 0 {
            let pivot = v & v.wrapping_neg();
            for r in rows.iter_mut() {
                if *r & pivot != 0 {
                    *r ^= v;
                }
            }
            rows.push(v);
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn contains(&self, v: &F2Vector) -> bool {
        let mut x = v.bits;
        for &r in &self.rows {
            let pivot = r & r.wrapping_neg();
            if x & pivot != 0 {
                x ^= r;
            }
        }
        x == 0
    }

    /// All `2^dim` member vectors, sorted by bit pattern.
    pub fn elements(&self) -> Vec<F2Vector> {
        let k = self.rows.len();
        let mut out: Vec<F2Vector> = (0..1u64 << k)
            .map(|mask| {
                let mut bits = 0u64;
                for (j, &r) in self.rows.iter().enumerate() {
                    if (mask >> j) & 1 == 1 {
                        bits ^= r;
                    }
                }
                F2Vector { d: self.d, bits }
            })
            .collect();
        out.sort();
        out
    }

    pub fn is_isotropic(&self) -> bool {
        for (n, &r) in self.rows.iter().enumerate() {
            let x = F2Vector { d: self.d, bits: r };
            if pairing(&x, &x) != 0 {
                return false;
            }
            for &s in &self.rows[n + 1..] {
                if pairing(&x, &F2Vector { d: self.d, bits: s }) != 0 {
                    return false;
                }
            }
        }
        true
    }

    /// Orthogonal complement under the symplectic form.
    pub fn perp(&self) -> F2Subspace {
        let mut vecs = Vec::new();
        for bits in 0..1u64 << self.d {
            let v = F2Vector { d: self.d, bits };
            if self
                .rows
                .iter()
                .all(|&r| pairing(&v, &F2Vector { d: self.d, bits: r }) == 0)
            {
                vecs.push(v);
            }
        }
        F2Subspace::from_vectors(self.d, &vecs)
    }
}

/// `⟨B⟩`: the span of the interval indicators of `B`.
pub fn span(b: &IntervalSet) -> F2Subspace {
    let vecs: Vec<F2Vector> = b.items().iter().map(|iv| e_of_interval(b.d(), iv)).collect();
    F2Subspace::from_vectors(b.d(), &vecs)
}

/// Signed interval-parity statistic of the signed run statistic.
pub fn u_stat(x: &F2Vector) -> i64 {
    let mut u = 0i64;
    for part in x.decompose() {
        match (part.a % 2, part.b % 2) {
            (0, 1) => u += 1,
            (1, 0) => u -= 1,
            _ => {}
        }
    }
    u
}

/// Folded nonnegative version: `2u` if `u ≥ 0`, else `-2u - 1`.
pub fn utilde(x: &F2Vector) -> u64 {
    let u = u_stat(x);
    if u >= 0 {
        2 * u as u64
    } else {
        (-2 * u - 1) as u64
    }
}

/// Membership in `V(s)`: exactly `t` non-touching parts (`t = s/2` rounded
/// up), all starting ≡ s and ending ≡ s+1 mod 2.
pub fn in_v_s(x: &F2Vector, s: u32) -> bool {
    let t = s.div_ceil(2);
    let parts = x.decompose();
    if parts.len() != t as usize {
        return false;
    }
    parts
        .iter()
        .all(|p| p.a % 2 == s % 2 && p.b % 2 == (s + 1) % 2)
}

pub fn v_s_members(d: u32, s: u32) -> Vec<F2Vector> {
    (0..1u64 << d)
        .map(|bits| F2Vector { d, bits })
        .filter(|x| in_v_s(x, s))
        .collect()
}

/// Graph adjacency: `x ⋄ x'` iff `x + x' = e_i` with `(x, e_i) = 0`.
pub fn graph_adjacent(x: &F2Vector, y: &F2Vector) -> bool {
    assert_eq!(x.d, y.d);
    let diff = x.bits ^ y.bits;
    if diff == 0 || diff.count_ones() != 1 {
        return false;
    }
    let i = diff.trailing_zeros() + 1;
    pairing(x, &F2Vector::basis(x.d, i)) == 0
}

/// Connected components of the graph on `V`, each sorted, listed by their
/// least member.
pub fn components(d: u32) -> Vec<Vec<F2Vector>> {
    let n = 1u64 << d;
    let mut seen = vec![false; n as usize];
    let mut comps = Vec::new();
    for start in 0..n {
        if seen[start as usize] {
            continue;
        }
        let mut comp = Vec::new();
        let mut queue = VecDeque::from([start]);
        seen[start as usize] = true;
        while let Some(cur) = queue.pop_front() {
            let x = F2Vector { d, bits: cur };
            comp.push(x);
            for i in 1..=d {
                let e = F2Vector::basis(d, i);
                if pairing(&x, &e) == 0 {
                    let next = cur ^ e.bits;
                    if !seen[next as usize] {
                        seen[next as usize] = true;
                        queue.push_back(next);
                    }
                }
            }
        }
        comp.sort();
        comps.push(comp);
    }
    comps
}

/// Shared context for the counting partial order on `S_D` and on `V`: the
/// ε-inverse table is materialized from the enumeration once.
pub struct SdOrder {
    pub d: u32,
    pub sets: Vec<IntervalSet>,
    pub f: Vec<Vec<i64>>,
    pub k: Vec<usize>,
    pub eps_bits: Vec<u64>,
    index_of_eps: HashMap<u64, usize>,
}

impl SdOrder {
    pub fn new(d: u32) -> Self {
        let sets = enumerate_s(d);
        let mut f = Vec::with_capacity(sets.len());
        let mut k = Vec::with_capacity(sets.len());
        let mut eps_bits = Vec::with_capacity(sets.len());
        let mut index_of_eps = HashMap::new();
        for (n, b) in sets.iter().enumerate() {
            let (fv, _) = f_eps(b);
            f.push(fv);
            k.push(b.even_part().len());
            let e = eps_vector(b).bits;
            eps_bits.push(e);
            let prev = index_of_eps.insert(e, n);
            assert!(prev.is_none(), "ε is not injective on S_{}", d);
        }
        assert_eq!(index_of_eps.len(), 1usize << d, "ε is not surjective");
        SdOrder { d, sets, f, k, eps_bits, index_of_eps }
    }

    pub fn eps_inverse(&self, x: &F2Vector) -> &IntervalSet {
        &self.sets[self.index_of_eps[&x.bits]]
    }

    pub fn index_of(&self, x: &F2Vector) -> usize {
        self.index_of_eps[&x.bits]
    }

    /// `B ≤ B'` in the counting order, by set index.
    pub fn le_idx(&self, i: usize, j: usize) -> bool {
        if self.k[i] < self.k[j] {
            return true;
        }
        if self.k[i] > self.k[j] {
            return false;
        }
        self.f[i].iter().zip(&self.f[j]).all(|(a, b)| a <= b)
    }

    pub fn le_vec(&self, x: &F2Vector, y: &F2Vector) -> bool {
        self.le_idx(self.index_of(x), self.index_of(y))
    }

    pub fn le_sets(&self, b1: &IntervalSet, b2: &IntervalSet) -> bool {
        let i = self.sets.binary_search(b1).expect("set not in S_D");
        let j = self.sets.binary_search(b2).expect("set not in S_D");
        self.le_idx(i, j)
    }

    /// `ν(x)` for every `x`: the largest r with a chain `0 = x_0 < … < x_r = x`.
    pub fn nu_all(&self) -> BTreeMap<F2Vector, u64> {
        let n = self.sets.len();
        // longest path in the strict-order DAG, processed in a topological
        // order refined by (k, Σf)
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| (self.k[i], self.f[i].iter().sum::<i64>()));
        let mut nu = vec![0u64; n];
        for (pos, &i) in order.iter().enumerate() {
            for &j in &order[pos + 1..] {
                if i != j && self.le_idx(i, j) && nu[i] + 1 > nu[j] {
                    nu[j] = nu[i] + 1;
                }
            }
        }
        (0..n)
            .map(|i| (F2Vector { d: self.d, bits: self.eps_bits[i] }, nu[i]))
            .collect()
    }
}
