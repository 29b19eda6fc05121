//! Concrete finite permutation groups: explicit element lists, conjugacy
//! classes with canonical representatives, centralizers, subgroup and
//! quotient construction, and the catalog of groups used by the Fourier
//! calculus (S_1..S_5, products, the dihedral group of order 10 and the
//! named subgroups of S_4 and S_5).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// A permutation of `{1..n}`, stored 0-based.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    map: Vec<u8>,
}

impl Perm {
    pub fn identity(n: u32) -> Self {
        Perm { map: (0..n as u8).collect() }
    }

    /// Build from the 0-based image list.
    pub fn from_map(map: Vec<u8>) -> Self {
        let mut check: Vec<u8> = map.clone();
        check.sort_unstable();
        assert!(check.iter().enumerate().all(|(i, &j)| i as u8 == j), "not a permutation");
        Perm { map }
    }

    /// Build from disjoint 1-based cycles.
    pub fn from_cycles(n: u32, cycles: &[&[u8]]) -> Self {
        let mut map: Vec<u8> = (0..n as u8).collect();
        for cyc in cycles {
            for w in 0..cyc.len() {
                let from = cyc[w] - 1;
                let to = cyc[(w + 1) % cyc.len()] - 1;
                map[from as usize] = to;
            }
        }
        Perm { map }
    }

    pub fn degree(&self) -> u32 {
        self.map.len() as u32
    }

    pub fn apply(&self, i: u8) -> u8 {
        self.map[i as usize]
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.map.len(), other.map.len());
        Perm { map: other.map.iter().map(|&i| self.map[i as usize]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut map = vec![0u8; self.map.len()];
        for (i, &j) in self.map.iter().enumerate() {
            map[j as usize] = i as u8;
        }
        Perm { map }
    }

    /// `g · self · g^{-1}`.
    pub fn conjugate_by(&self, g: &Perm) -> Perm {
        g.compose(self).compose(&g.inverse())
    }

    pub fn order(&self) -> u32 {
        let mut p = self.clone();
        let id = Perm::identity(self.degree());
        let mut n = 1;
        while p != id {
            p = p.compose(self);
            n += 1;
        }
        n
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &j)| i as u8 == j)
    }

    pub fn pow(&self, k: u32) -> Perm {
        let mut out = Perm::identity(self.degree());
        for _ in 0..k {
            out = out.compose(self);
        }
        out
    }

    /// Nontrivial cycle lengths, descending.
    pub fn cycle_type(&self) -> Vec<u32> {
        let n = self.map.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cur = self.map[cur] as usize;
                len += 1;
            }
            if len > 1 {
                out.push(len);
            }
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    pub fn cycles_string(&self) -> String {
        let n = self.map.len();
        let mut seen = vec![false; n];
        let mut out = String::new();
        for start in 0..n {
            if seen[start] || self.map[start] as usize == start {
                seen[start] = true;
                continue;
            }
            out.push('(');
            let mut cur = start;
            let mut first = true;
            while !seen[cur] {
                seen[cur] = true;
                if !first {
                    out.push(' ');
                }
                first = false;
                out.push_str(&(cur + 1).to_string());
                cur = self.map[cur] as usize;
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycles_string())
    }
}

/// A conjugacy class with its canonical representative.
#[derive(Clone, Debug)]
pub struct ConjClass {
    pub label: String,
    pub rep: Perm,
    pub members: Vec<Perm>,
}

/// An explicit finite permutation group.
#[derive(Clone, PartialEq, Eq)]
pub struct PermGroup {
    pub degree: u32,
    pub name: String,
    /// Sorted, duplicate-free, closed under composition and inverse.
    pub elements: Vec<Perm>,
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(order {})", self.name, self.elements.len())
    }
}

impl PermGroup {
    pub fn generate(degree: u32, gens: &[Perm], name: &str) -> Self {
        let id = Perm::identity(degree);
        let mut set: BTreeSet<Perm> = BTreeSet::new();
        set.insert(id.clone());
        let mut frontier: Vec<Perm> = vec![id];
        while let Some(g) = frontier.pop() {
            for h in gens {
                let next = h.compose(&g);
                if set.insert(next.clone()) {
                    frontier.push(next);
                }
            }
        }
        PermGroup { degree, name: name.to_string(), elements: set.into_iter().collect() }
    }

    pub fn from_elements(degree: u32, elements: Vec<Perm>, name: &str) -> Self {
        let set: BTreeSet<Perm> = elements.into_iter().collect();
        PermGroup { degree, name: name.to_string(), elements: set.into_iter().collect() }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    pub fn index_of(&self, p: &Perm) -> usize {
        self.elements.binary_search(p).expect("element not in group")
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.elements.iter().all(|g| other.contains(g))
    }

    pub fn is_normal_in(&self, other: &PermGroup) -> bool {
        self.is_subgroup_of(other)
            && other.elements.iter().all(|g| {
                self.elements.iter().all(|h| self.contains(&h.conjugate_by(g)))
            })
    }

    /// Centralizer of `x` inside this group.
    pub fn centralizer(&self, x: &Perm) -> PermGroup {
        let elements: Vec<Perm> = self
            .elements
            .iter()
            .filter(|g| g.compose(x) == x.compose(g))
            .cloned()
            .collect();
        PermGroup::from_elements(
            self.degree,
            elements,
            &format!("Z_{}({})", self.name, x.cycles_string()),
        )
    }

    /// Conjugacy classes, sorted by (element order, class size, least rep);
    /// the representative is the least member.
    pub fn conjugacy_classes(&self) -> Vec<ConjClass> {
        let mut remaining: BTreeSet<Perm> = self.elements.iter().cloned().collect();
        let mut classes = Vec::new();
        while let Some(x) = remaining.iter().next().cloned() {
            let members: BTreeSet<Perm> =
                self.elements.iter().map(|g| x.conjugate_by(g)).collect();
            for m in &members {
                remaining.remove(m);
            }
            let members: Vec<Perm> = members.into_iter().collect();
            let rep = members[0].clone();
            classes.push(ConjClass { label: String::new(), rep, members });
        }
        classes.sort_by(|a, b| {
            (a.rep.order(), a.members.len(), &a.rep).cmp(&(b.rep.order(), b.members.len(), &b.rep))
        });
        for c in &mut classes {
            c.label = c.rep.cycles_string();
        }
        classes
    }

    /// An element conjugating `x` to `y`, if one exists.
    pub fn conjugator(&self, x: &Perm, y: &Perm) -> Option<Perm> {
        self.elements.iter().find(|g| x.conjugate_by(g) == *y).cloned()
    }

    /// Coset space modulo a normal subgroup, as a permutation group on the
    /// cosets, with projection data.
    pub fn quotient(&self, normal: &PermGroup) -> Quotient {
        assert!(
            normal.is_normal_in(self),
            "{} not normal in {}",
            normal.name,
            self.name
        );
        let mut cosets: Vec<BTreeSet<Perm>> = Vec::new();
        let mut coset_of: BTreeMap<Perm, usize> = BTreeMap::new();
        for g in &self.elements {
            if coset_of.contains_key(g) {
                continue;
            }
            let coset: BTreeSet<Perm> = normal.elements.iter().map(|h| g.compose(h)).collect();
            let idx = cosets.len();
            for m in &coset {
                coset_of.insert(m.clone(), idx);
            }
            cosets.push(coset);
        }
        let reps: Vec<Perm> = cosets.iter().map(|c| c.iter().next().unwrap().clone()).collect();
        let q = Quotient { group: PermGroup { degree: 0, name: String::new(), elements: vec![] }, coset_of, reps };
        let elements: BTreeSet<Perm> = self.elements.iter().map(|g| q.project(g)).collect();
        let group = PermGroup {
            degree: cosets.len() as u32,
            name: format!("{}/{}", self.name, normal.name),
            elements: elements.into_iter().collect(),
        };
        assert_eq!(group.order(), self.order() / normal.order());
        Quotient { group, coset_of: q.coset_of, reps: q.reps }
    }

    /// Direct product on disjoint points; `other`'s points shift up by
    /// `self.degree`.
    pub fn direct_product(&self, other: &PermGroup, name: &str) -> PermGroup {
        let degree = self.degree + other.degree;
        let mut elements = Vec::with_capacity(self.order() * other.order());
        for a in &self.elements {
            for b in &other.elements {
                let mut map: Vec<u8> = Vec::with_capacity(degree as usize);
                map.extend(a.map.iter().copied());
                map.extend(b.map.iter().map(|&j| j + self.degree as u8));
                elements.push(Perm { map });
            }
        }
        PermGroup::from_elements(degree, elements, name)
    }
}

/// A quotient `G/N` with its projection map.
pub struct Quotient {
    pub group: PermGroup,
    coset_of: BTreeMap<Perm, usize>,
    reps: Vec<Perm>,
}

impl Quotient {
    pub fn project(&self, g: &Perm) -> Perm {
        let map: Vec<u8> = self
            .reps
            .iter()
            .map(|r| self.coset_of[&g.compose(r)] as u8)
            .collect();
        Perm { map }
    }

    /// Elements of the numerator lying over a quotient element.
    pub fn fiber(&self, q: &Perm) -> Vec<Perm> {
        let mut out: Vec<Perm> = self
            .coset_of
            .keys()
            .filter(|g| self.project(g) == *q)
            .cloned()
            .collect();
        out.sort();
        out
    }
}

/// Find an isomorphism `a → b` by backtracking over generator images.
/// Isomorphisms differing by an inner automorphism induce the same map on
/// conjugacy data, which is all the Fourier calculus consumes.
pub fn find_isomorphism(a: &PermGroup, b: &PermGroup) -> Option<BTreeMap<Perm, Perm>> {
    if a.order() != b.order() {
        return None;
    }
    let mut gens: Vec<Perm> = Vec::new();
    let mut closure = PermGroup::generate(a.degree, &[], "tmp");
    while closure.order() < a.order() {
        let g = a
            .elements
            .iter()
            .find(|g| !closure.contains(g))
            .expect("generation stalled")
            .clone();
        gens.push(g);
        closure = PermGroup::generate(a.degree, &gens, "tmp");
    }
    let mut images: Vec<Perm> = Vec::new();
    backtrack_iso(a, b, &gens, &mut images)
}

fn backtrack_iso(
    a: &PermGroup,
    b: &PermGroup,
    gens: &[Perm],
    images: &mut Vec<Perm>,
) -> Option<BTreeMap<Perm, Perm>> {
    if images.len() == gens.len() {
        return build_hom(a, b, gens, images);
    }
    let want = gens[images.len()].order();
    for cand in &b.elements {
        if cand.order() != want {
            continue;
        }
        images.push(cand.clone());
        if let Some(hom) = backtrack_iso(a, b, gens, images) {
            return Some(hom);
        }
        images.pop();
    }
    None
}

fn build_hom(
    a: &PermGroup,
    b: &PermGroup,
    gens: &[Perm],
    images: &[Perm],
) -> Option<BTreeMap<Perm, Perm>> {
    let mut map: BTreeMap<Perm, Perm> = BTreeMap::new();
    map.insert(Perm::identity(a.degree), Perm::identity(b.degree));
    let mut frontier = vec![Perm::identity(a.degree)];
    while let Some(g) = frontier.pop() {
        let img = map[&g].clone();
        for (gen, gen_img) in gens.iter().zip(images) {
            let next = gen.compose(&g);
            let next_img = gen_img.compose(&img);
            match map.get(&next) {
                Some(existing) => {
                    if *existing != next_img {
                        return None;
                    }
                }
                None => {
                    map.insert(next.clone(), next_img.clone());
                    frontier.push(next);
                }
            }
        }
    }
    if map.len() != a.order() {
        return None;
    }
    let image_set: BTreeSet<&Perm> = map.values().collect();
    if image_set.len() != b.order() {
        return None;
    }
    for (x, xi) in &map {
        for (y, yi) in &map {
            if map[&x.compose(y)] != xi.compose(yi) {
                return None;
            }
        }
    }
    Some(map)
}

fn s_n(n: u32) -> PermGroup {
    let mut gens = Vec::new();
    for i in 1..n as u8 {
        gens.push(Perm::from_cycles(n, &[&[i, i + 1]]));
    }
    PermGroup::generate(n, &gens, &format!("S{}", n))
}

/// The group catalog. Subgroup names follow the recipe tables, with
/// concrete point sets fixed once and for all.
pub fn build_group(spec: &str) -> PermGroup {
    match spec {
        "S1" => PermGroup::generate(1, &[], "S1"),
        "S2" => s_n(2),
        "S3" => s_n(3),
        "S4" => s_n(4),
        "S5" => s_n(5),
        "S2xS2" => s_n(2).direct_product(&s_n(2), "S2xS2"),
        "S3xS2" => s_n(3).direct_product(&s_n(2), "S3xS2"),
        // dihedral of order 10 inside S5: rotation (1 2 3 4 5), reflection
        // (2 5)(3 4)
        "D10" => PermGroup::generate(
            5,
            &[
                Perm::from_cycles(5, &[&[1, 2, 3, 4, 5]]),
                Perm::from_cycles(5, &[&[2, 5], &[3, 4]]),
            ],
            "D10",
        ),
        // subgroups of S4
        "H31@S4" => PermGroup::generate(
            4,
            &[Perm::from_cycles(4, &[&[1, 2]]), Perm::from_cycles(4, &[&[1, 2, 3]])],
            "H31",
        ),
        "H22@S4" | "tH22@S4" => PermGroup::generate(
            4,
            &[Perm::from_cycles(4, &[&[1, 2]]), Perm::from_cycles(4, &[&[3, 4]])],
            "H22",
        ),
        "H211@S4" => PermGroup::generate(4, &[Perm::from_cycles(4, &[&[1, 2]])], "H211"),
        "tH211@S4" => PermGroup::generate(4, &[Perm::from_cycles(4, &[&[3, 4]])], "tH211"),
        // Sylow 2-subgroup fixed as the centralizer of (1 2)(3 4)
        "tH@S4" => PermGroup::generate(
            4,
            &[
                Perm::from_cycles(4, &[&[1, 2]]),
                Perm::from_cycles(4, &[&[3, 4]]),
                Perm::from_cycles(4, &[&[1, 3], &[2, 4]]),
            ],
            "tH",
        ),
        // subgroups of S5
        "H41@S5" => PermGroup::generate(
            5,
            &[Perm::from_cycles(5, &[&[1, 2]]), Perm::from_cycles(5, &[&[1, 2, 3, 4]])],
            "H41",
        ),
        "H32@S5" => PermGroup::generate(
            5,
            &[
                Perm::from_cycles(5, &[&[1, 2]]),
                Perm::from_cycles(5, &[&[1, 2, 3]]),
                Perm::from_cycles(5, &[&[4, 5]]),
            ],
            "H32",
        ),
        "H311@S5" | "tH311@S5" => PermGroup::generate(
            5,
            &[Perm::from_cycles(5, &[&[1, 2]]), Perm::from_cycles(5, &[&[1, 2, 3]])],
            "H311",
        ),
        "H221@S5" => PermGroup::generate(
            5,
            &[Perm::from_cycles(5, &[&[1, 2]]), Perm::from_cycles(5, &[&[3, 4]])],
            "H221",
        ),
        "H2111@S5" => PermGroup::generate(5, &[Perm::from_cycles(5, &[&[1, 2]])], "H2111"),
        "tH2111@S5" => PermGroup::generate(5, &[Perm::from_cycles(5, &[&[4, 5]])], "tH2111"),
        // realization of tH2111 sitting inside H221
        "tH2111b@S5" => PermGroup::generate(5, &[Perm::from_cycles(5, &[&[3, 4]])], "tH2111b"),
        "tH221@S5" => PermGroup::generate(
            5,
            &[Perm::from_cycles(5, &[&[1, 2]]), Perm::from_cycles(5, &[&[3, 4]])],
            "tH221",
        ),
        "tH@S5" => PermGroup::generate(
            5,
            &[
                Perm::from_cycles(5, &[&[1, 2]]),
                Perm::from_cycles(5, &[&[3, 4]]),
                Perm::from_cycles(5, &[&[1, 3], &[2, 4]]),
            ],
            "tH",
        ),
        "1@S4" => PermGroup::generate(4, &[], "1"),
        "1@S5" => PermGroup::generate(5, &[], "1"),
        "1@S3" => PermGroup::generate(3, &[], "1"),
        "1@S2" => PermGroup::generate(2, &[], "1"),
        "H21@S3" => PermGroup::generate(3, &[Perm::from_cycles(3, &[&[1, 2]])], "H21"),
        _ => panic!("unknown group spec: {}", spec),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_group_orders() {
        assert_eq!(build_group("S3").order(), 6);
        assert_eq!(build_group("S4").order(), 24);
        assert_eq!(build_group("S5").order(), 120);
        assert_eq!(build_group("S2xS2").order(), 4);
        assert_eq!(build_group("S3xS2").order(), 12);
    }

    #[test]
    fn s3_classes() {
        let g = build_group("S3");
        let classes = g.conjugacy_classes();
        assert_eq!(classes.len(), 3);
        let sizes: Vec<usize> = classes.iter().map(|c| c.members.len()).collect();
        assert_eq!(sizes, vec![1, 3, 2]);
    }

    #[test]
    fn s4_and_s5_class_counts() {
        assert_eq!(build_group("S4").conjugacy_classes().len(), 5);
        assert_eq!(build_group("S5").conjugacy_classes().len(), 7);
    }

    #[test]
    fn d10_structure() {
        let h = build_group("D10");
        assert_eq!(h.order(), 10);
        let classes = h.conjugacy_classes();
        assert_eq!(classes.len(), 4);
        let mut cent_orders: Vec<usize> = classes
            .iter()
            .map(|c| h.centralizer(&c.rep).order())
            .collect();
        cent_orders.sort_unstable();
        assert_eq!(cent_orders, vec![2, 5, 5, 10]);
    }

    #[test]
    fn orbit_stabilizer() {
        for spec in ["S3", "S4", "S5", "D10", "S3xS2"] {
            let g = build_group(spec);
            for c in g.conjugacy_classes() {
                assert_eq!(
                    c.members.len() * g.centralizer(&c.rep).order(),
                    g.order(),
                    "orbit-stabilizer fails in {}",
                    spec
                );
            }
        }
    }

    #[test]
    fn quotient_of_h22_by_diagonal() {
        let h22 = build_group("H22@S4");
        let diag =
            PermGroup::generate(4, &[Perm::from_cycles(4, &[&[1, 2], &[3, 4]])], "diag");
        let q = h22.quotient(&diag);
        assert_eq!(q.group.order(), 2);
        let g = Perm::from_cycles(4, &[&[1, 2]]);
        assert!(!q.project(&g).is_identity());
        assert!(q
            .project(&Perm::from_cycles(4, &[&[1, 2], &[3, 4]]))
            .is_identity());
        assert_eq!(q.fiber(&q.project(&g)).len(), 2);
    }

    #[test]
    fn normality_checks() {
        let s4 = build_group("S4");
        let th = build_group("tH@S4");
        let h22 = build_group("H22@S4");
        assert!(th.is_subgroup_of(&s4));
        assert!(h22.is_normal_in(&th));
        assert!(!h22.is_normal_in(&s4));
    }

    #[test]
    fn iso_search_small() {
        let q = build_group("H22@S4").quotient(&build_group("tH211@S4"));
        let iso = find_isomorphism(&build_group("S2"), &q.group).unwrap();
        assert_eq!(iso.len(), 2);
        let h32 = build_group("H32@S5");
        let t = build_group("tH2111@S5");
        let q = h32.quotient(&t);
        let iso = find_isomorphism(&build_group("S3"), &q.group).unwrap();
        assert_eq!(iso.len(), 6);
    }
}
