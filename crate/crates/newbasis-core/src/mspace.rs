//! The set `M(Γ)` of pairs (conjugacy class, centralizer irreducible), the
//! vector space `C[M(Γ)]` with its non-abelian Fourier transform, the maps
//! `i_{H,Γ}`, `p_{H,Γ}` and their composite `ss_{H,H'}`, the library of
//! distinguished bipositive Λ-elements, and the builders for the
//! exceptional-case bases with their property checks.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::chartab::{induce_values, CharTable};
use crate::exact::{rat, CycloNumber, Rational};
use crate::perm::{build_group, find_isomorphism, ConjClass, Perm, PermGroup, Quotient};

/// M-space context of a concrete group: classes with canonical reps and
/// labeled centralizer tables.
pub struct MContext {
    pub group: PermGroup,
    pub classes: Vec<ConjClass>,
    pub class_labels: Vec<String>,
    pub cents: Vec<PermGroup>,
    pub tables: Vec<CharTable>,
    pub irrep_labels: Vec<Vec<String>>,
    /// flattened (class, irrep) list
    pub pairs: Vec<(usize, usize)>,
}

/// The kind of catalog group, driving the labeling conventions.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Kind {
    Sym(u32),
    Dihedral10,
    /// direct product acting on disjoint point runs
    Product(u32, u32),
    Plain,
}

pub fn kind_of(name: &str) -> Kind {
    match name {
        "S1" => Kind::Sym(1),
        "S2" => Kind::Sym(2),
        "S3" => Kind::Sym(3),
        "S4" => Kind::Sym(4),
        "S5" => Kind::Sym(5),
        "D10" => Kind::Dihedral10,
        "S2xS2" => Kind::Product(2, 2),
        "S3xS2" => Kind::Product(3, 2),
        _ => Kind::Plain,
    }
}

impl MContext {
    pub fn new(group: &PermGroup, kind: Kind) -> MContext {
        let classes = group.conjugacy_classes();
        let cents: Vec<PermGroup> = classes.iter().map(|c| group.centralizer(&c.rep)).collect();
        let tables: Vec<CharTable> = cents.iter().map(CharTable::build).collect();
        let class_labels = classes
            .iter()
            .map(|c| class_label(kind, c))
            .collect::<Vec<_>>();
        let irrep_labels: Vec<Vec<String>> = classes
            .iter()
            .enumerate()
            .map(|(i, c)| irrep_labels(kind, group, &c.rep, &cents[i], &tables[i]))
            .collect();
        let mut pairs = Vec::new();
        for (ci, t) in tables.iter().enumerate() {
            for ii in 0..t.n_irreps() {
                pairs.push((ci, ii));
            }
        }
        MContext { group: group.clone(), classes, class_labels, cents, tables, irrep_labels, pairs }
    }

    pub fn catalog(name: &str) -> MContext {
        MContext::new(&build_group(name), kind_of(name))
    }

    pub fn n_pairs(&self) -> usize {
        self.pairs.len()
    }

    pub fn pair_index(&self, class: usize, irrep: usize) -> usize {
        self.pairs
            .iter()
            .position(|&(c, i)| c == class && i == irrep)
            .expect("pair out of range")
    }

    pub fn pair_label(&self, idx: usize) -> String {
        let (c, i) = self.pairs[idx];
        format!("({},{})", self.class_labels[c], self.irrep_labels[c][i])
    }

    pub fn pair_by_labels(&self, class_label: &str, irrep_label: &str) -> usize {
        let c = self
            .class_labels
            .iter()
            .position(|l| l == class_label)
            .unwrap_or_else(|| panic!("no class labeled {}", class_label));
        let i = self.irrep_labels[c]
            .iter()
            .position(|l| l == irrep_label)
            .unwrap_or_else(|| {
                panic!(
                    "no irrep labeled {} at class {} (have {:?})",
                    irrep_label, class_label, self.irrep_labels[c]
                )
            });
        self.pair_index(c, i)
    }

    /// Canonicalize a pair (y, χ), χ given by its values at arbitrary
    /// elements of `Z_Γ(y)`: conjugate `y` to its class rep and decompose
    /// the transported class function into irreducibles.
    pub fn canonicalize<F>(&self, y: &Perm, chi: F) -> Vec<(usize, Rational)>
    where
        F: Fn(&Perm) -> CycloNumber,
    {
        let ci = PermGroup::class_index(&self.classes, y);
        let y0 = &self.classes[ci].rep;
        let gamma = self
            .group
            .conjugator(y, y0)
            .expect("class member not conjugate to rep");
        let ginv = gamma.inverse();
        let values: Vec<CycloNumber> = self.tables[ci]
            .classes
            .iter()
            .map(|zc| chi(&zc.rep.conjugate_by(&ginv)))
            .collect();
        let mut out = Vec::new();
        for ii in 0..self.tables[ci].n_irreps() {
            let m = self.tables[ci].multiplicity(&values, ii);
            if !m.is_zero() {
                out.push((self.pair_index(ci, ii), m));
            }
        }
        out
    }

    /// The (1,1) basis vector.
    pub fn one_one(&self) -> MVector {
        let id = Perm::identity(self.group.degree);
        let ci = PermGroup::class_index(&self.classes, &id);
        let ii = (0..self.tables[ci].n_irreps())
            .find(|&i| self.tables[ci].chars[i].iter().all(|v| *v == CycloNumber::one()))
            .expect("no trivial character");
        MVector::basis(self, self.pair_index(ci, ii))
    }
}

/// A vector of `C[M(Γ)]`, coefficients indexed by the context's pair list.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MVector {
    pub coeffs: Vec<CycloNumber>,
}

impl MVector {
    pub fn zero(ctx: &MContext) -> MVector {
        MVector { coeffs: vec![CycloNumber::zero(); ctx.n_pairs()] }
    }

    pub fn basis(ctx: &MContext, idx: usize) -> MVector {
        let mut v = Self::zero(ctx);
        v.coeffs[idx] = CycloNumber::one();
        v
    }

    pub fn from_labeled_terms(ctx: &MContext, terms: &[(&str, &str, i64)]) -> MVector {
        let mut v = Self::zero(ctx);
        for &(cl, il, c) in terms {
            let idx = ctx.pair_by_labels(cl, il);
            v.coeffs[idx] = &v.coeffs[idx] + &CycloNumber::from_int(c);
        }
        v
    }

    pub fn add(&self, other: &MVector) -> MVector {
        MVector {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &MVector) -> MVector {
        MVector {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, q: &Rational) -> MVector {
        MVector { coeffs: self.coeffs.iter().map(|c| c.scale(q)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(CycloNumber::is_zero)
    }

    /// All coefficients real and ≥ 0 (exact).
    pub fn is_ge0(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_real() && c.sign_real() >= 0)
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.coeffs.len()).filter(|&i| !self.coeffs[i].is_zero()).collect()
    }

    pub fn display(&self, ctx: &MContext) -> String {
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let label = ctx.pair_label(i);
            if *c == CycloNumber::one() {
                parts.push(label);
            } else if let Some(q) = c.as_rational() {
                parts.push(format!("{}{}", q, label));
            } else {
                parts.push(format!("({}){}", c, label));
            }
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

/// The non-abelian Fourier transform matrix over the pair basis:
/// `{(x,σ),(y,τ)} = |Z(x)|^{-1}|Z(y)|^{-1} Σ_{g: x(gyg^{-1})=(gyg^{-1})x}
/// σ(gyg^{-1}) conj(τ(g^{-1}xg))`.
pub fn fourier_matrix(ctx: &MContext) -> Vec<Vec<CycloNumber>> {
    let n = ctx.n_pairs();
    let mut m = vec![vec![CycloNumber::zero(); n]; n];
    for (row, &(cx, sx)) in ctx.pairs.iter().enumerate() {
        let x = &ctx.classes[cx].rep;
        let zx_order = ctx.cents[cx].order() as i64;
        for (col, &(cy, sy)) in ctx.pairs.iter().enumerate() {
            let y = &ctx.classes[cy].rep;
            let zy_order = ctx.cents[cy].order() as i64;
            let mut acc = CycloNumber::zero();
            for g in &ctx.group.elements {
                let ygy = y.conjugate_by(g);
                if x.compose(&ygy) != ygy.compose(x) {
                    continue;
                }
                let xg = x.conjugate_by(&g.inverse());
                let a = ctx.tables[cx].value(sx, &ygy);
                let b = ctx.tables[cy].value(sy, &xg).conj();
                acc += &(a * &b);
            }
            m[row][col] = acc.scale(&rat(1, zx_order * zy_order));
        }
    }
    m
}

/// Apply the transform: `A(x,σ) = Σ_{(y,τ)} {(x,σ),(y,τ)} (y,τ)`.
pub fn fourier_apply(matrix: &[Vec<CycloNumber>], f: &MVector) -> MVector {
    let n = matrix.len();
    let mut out = vec![CycloNumber::zero(); n];
    for (row, m_row) in matrix.iter().enumerate() {
        if f.coeffs[row].is_zero() {
            continue;
        }
        for (col, item) in out.iter_mut().enumerate() {
            if !m_row[col].is_zero() {
                *item += &(&m_row[col] * &f.coeffs[row]);
            }
        }
    }
    MVector { coeffs: out }
}

/// `i_{H,Γ} : C[M(H)] → C[M(Γ)]`, `(x,σ) ↦ (x, Ind_{Z_H(x)}^{Z_Γ(x)} σ)`.
pub fn i_map(gamma: &MContext, h: &MContext, f: &MVector) -> MVector {
    assert!(h.group.is_subgroup_of(&gamma.group));
    let mut out = MVector::zero(gamma);
    for (idx, coeff) in f.coeffs.iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        let (hc, hi) = h.pairs[idx];
        let y = &h.classes[hc].rep;
        let zg = gamma.group.centralizer(y);
        let zg_classes = zg.conjugacy_classes();
        let ind = induce_values(
            &zg,
            &zg_classes,
            &h.cents[hc],
            &h.tables[hc],
            &h.tables[hc].chars[hi],
        );
        for (pair, mult) in
            gamma.canonicalize(y, |z| ind[PermGroup::class_index(&zg_classes, z)].clone())
        {
            out.coeffs[pair] += &coeff.scale(&mult);
        }
    }
    out
}

/// `p_{H,Γ}` for `H` normal in the ambient group of `hp`, with quotient
/// data `quot`:
/// `(x,σ) ↦ Σ_{y∈π^{-1}(x)} Σ_τ |Z_Γ(y)||Z_{Γ/H}(x)|^{-1}|Γ|^{-1}|Γ/H| (τ:σ∘π)(y,τ)`.
pub fn p_map(hp: &MContext, quot: &Quotient, qctx: &MContext, f: &MVector) -> MVector {
    let mut out = MVector::zero(hp);
    let hp_order = hp.group.order() as i64;
    let q_order = qctx.group.order() as i64;
    for (idx, coeff) in f.coeffs.iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        let (qc, qi) = qctx.pairs[idx];
        let xbar = qctx.classes[qc].rep.clone();
        let zq_order = qctx.cents[qc].order() as i64;
        for y in quot.fiber(&xbar) {
            let zy = hp.group.centralizer(&y);
            let factor = rat(zy.order() as i64 * q_order, zq_order * hp_order);
            let table = &qctx.tables[qc];
            for (pair, mult) in
                hp.canonicalize(&y, |z| table.value(qi, &quot.project(z)).clone())
            {
                out.coeffs[pair] += &coeff.scale(&(&mult * &factor));
            }
        }
    }
    out
}

/// Transport a vector along a group isomorphism `src.group → tgt.group`.
/// Isomorphisms differing by an inner automorphism give the same map on
/// M-sets, so the deterministic backtracking choice is immaterial.
pub fn transport(src: &MContext, tgt: &MContext, f: &MVector) -> MVector {
    if src.group.elements == tgt.group.elements {
        return f.clone();
    }
    let iso = find_isomorphism(&src.group, &tgt.group)
        .unwrap_or_else(|| panic!("{} is not isomorphic to {}", src.group.name, tgt.group.name));
    let inv: BTreeMap<Perm, Perm> = iso.iter().map(|(a, b)| (b.clone(), a.clone())).collect();
    let mut out = MVector::zero(tgt);
    for (idx, coeff) in f.coeffs.iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        let (sc, si) = src.pairs[idx];
        let y = iso[&src.classes[sc].rep].clone();
        let table = &src.tables[sc];
        let terms = tgt.canonicalize(&y, |z| table.value(si, &inv[z]).clone());
        assert_eq!(terms.len(), 1, "isomorphism transport must stay irreducible");
        assert!(terms[0].1.is_one());
        out.coeffs[terms[0].0] += coeff;
    }
    out
}

/// `f1 ⊠ f2 ∈ C[M(Γ1×Γ2)]`, the product acting on the disjoint union of
/// the factors' points.
pub fn tensor(
    c1: &MContext,
    c2: &MContext,
    prod: &MContext,
    f1: &MVector,
    f2: &MVector,
) -> MVector {
    let d1 = c1.group.degree;
    let mut out = MVector::zero(prod);
    for (i1, a) in f1.coeffs.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let (cc1, ii1) = c1.pairs[i1];
        for (i2, b) in f2.coeffs.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            let (cc2, ii2) = c2.pairs[i2];
            let y = embed_pair(&c1.classes[cc1].rep, &c2.classes[cc2].rep);
            let coeff = a * b;
            let t1 = &c1.tables[cc1];
            let t2 = &c2.tables[cc2];
            for (pair, mult) in prod.canonicalize(&y, |z| {
                let (z1, z2) = split_perm(z, d1);
                t1.value(ii1, &z1) * t2.value(ii2, &z2)
            }) {
                out.coeffs[pair] += &coeff.scale(&mult);
            }
        }
    }
    out
}

fn embed_pair(a: &Perm, b: &Perm) -> Perm {
    let d1 = a.degree();
    let mut map: Vec<u8> = Vec::with_capacity((d1 + b.degree()) as usize);
    for i in 0..d1 as u8 {
        map.push(a.apply(i));
    }
    for i in 0..b.degree() as u8 {
        map.push(b.apply(i) + d1 as u8);
    }
    Perm::from_map(map)
}

fn split_perm(z: &Perm, d1: u32) -> (Perm, Perm) {
    let deg = z.degree();
    let mut m1 = Vec::with_capacity(d1 as usize);
    let mut m2 = Vec::with_capacity((deg - d1) as usize);
    for i in 0..d1 as u8 {
        m1.push(z.apply(i));
    }
    for i in d1 as u8..deg as u8 {
        m2.push(z.apply(i) - d1 as u8);
    }
    (Perm::from_map(m1), Perm::from_map(m2))
}

// ---------------------------------------------------------------------------
// labeling
// ---------------------------------------------------------------------------

fn class_label(kind: Kind, class: &ConjClass) -> String {
    match kind {
        Kind::Sym(_) => sym_class_label(&class.rep),
        Kind::Dihedral10 => {
            let g5 = Perm::from_cycles(5, &[&[1, 2, 3, 4, 5]]);
            if class.rep.is_identity() {
                "1".into()
            } else if class.rep.order() == 2 {
                "g_2".into()
            } else if class.members.binary_search(&g5).is_ok() {
                "g_5".into()
            } else {
                "g_5^2".into()
            }
        }
        Kind::Product(d1, _) => {
            let (a, b) = split_perm(&class.rep, d1);
            format!("({},{})", sym_class_label(&a), sym_class_label(&b))
        }
        Kind::Plain => class.label.clone(),
    }
}

fn sym_class_label(rep: &Perm) -> String {
    match rep.cycle_type().as_slice() {
        [] => "1".into(),
        [2] => "g_2".into(),
        [2, 2] => "g'_2".into(),
        [3] => "g_3".into(),
        [3, 2] => "g_6".into(),
        [4] => "g_4".into(),
        [5] => "g_5".into(),
        t => format!("g{:?}", t),
    }
}

/// [ORA]-style labels for the irreducibles of the centralizer of `point`
/// inside a catalog group.
fn irrep_labels(
    kind: Kind,
    group: &PermGroup,
    point: &Perm,
    cent: &PermGroup,
    table: &CharTable,
) -> Vec<String> {
    if point.is_identity() {
        return group_irrep_labels(kind, group, table);
    }
    let n = table.n_irreps();
    if cent.order() as u32 == point.order() {
        // cyclic centralizer generated by the point: label by value at it
        return (0..n)
            .map(|i| cyclic_label(point.order(), table.value(i, point)))
            .collect();
    }
    match (kind, cent.order()) {
        // Z(g_2) in S4: the Klein group <(12)> x <(34)>
        (Kind::Sym(4), 4) => {
            let other = cent
                .elements
                .iter()
                .find(|g| g.cycle_type() == vec![2] && *g != point)
                .expect("complementary transposition")
                .clone();
            (0..n)
                .map(|i| {
                    let at_x = table.value(i, point).as_rational().unwrap() == rat(1, 1);
                    let at_w = table.value(i, &other).as_rational().unwrap() == rat(1, 1);
                    match (at_x, at_w) {
                        (true, true) => "1".into(),
                        (false, true) => "eps'".into(),
                        (true, false) => "eps''".into(),
                        (false, false) => "eps".into(),
                    }
                })
                .collect()
        }
        // Z(g'_2) in S4 or S5: dihedral of order 8 centered at the point
        (Kind::Sym(4), 8) | (Kind::Sym(5), 8) => (0..n)
            .map(|i| {
                if table.degree(i) == 2 {
                    return "r".to_string();
                }
                let transposition = cent
                    .elements
                    .iter()
                    .find(|g| g.cycle_type() == vec![2])
                    .expect("reflection");
                let other_klein = cent
                    .elements
                    .iter()
                    .find(|g| g.cycle_type() == vec![2, 2] && *g != point)
                    .expect("other klein member");
                let at_t = table.value(i, transposition).as_rational().unwrap() == rat(1, 1);
                let at_v = table.value(i, other_klein).as_rational().unwrap() == rat(1, 1);
                match (at_t, at_v) {
                    (true, true) => "1".into(),
                    (true, false) => "eps''".into(),
                    (false, true) => "eps'".into(),
                    (false, false) => "eps".into(),
                }
            })
            .collect(),
        // Z(g_2) in S5: <(12)> x S({3,4,5})
        (Kind::Sym(5), 12) if point.order() == 2 => {
            let t = cent
                .elements
                .iter()
                .find(|g| g.cycle_type() == vec![2] && disjoint_support(g, point))
                .expect("transposition in the complementary factor")
                .clone();
            (0..n)
                .map(|i| {
                    let deg = table.degree(i);
                    let plus = table.value(i, point).as_rational().unwrap() == rat(deg, 1);
                    let part = if deg == 2 {
                        "r".to_string()
                    } else if table.value(i, &t).as_rational().unwrap() == rat(1, 1) {
                        "1".to_string()
                    } else {
                        "eps".to_string()
                    };
                    if plus {
                        part
                    } else if part == "1" {
                        "-1".to_string()
                    } else {
                        format!("-{}", part)
                    }
                })
                .collect()
        }
        // Z(g_3) in S5: <(123)> x <(45)>, base point of order 3
        (Kind::Sym(5), 6) if point.order() == 3 => {
            let s = cent
                .elements
                .iter()
                .find(|g| g.order() == 2)
                .expect("involution in Z(g_3)")
                .clone();
            (0..n)
                .map(|i| {
                    let theta_part = cyclic_label(3, table.value(i, point));
                    let twisted = table.value(i, &s).as_rational().unwrap() == rat(-1, 1);
                    match (twisted, theta_part.as_str()) {
                        (false, p) => p.to_string(),
                        (true, "1") => "eps".to_string(),
                        (true, p) => format!("eps*{}", p),
                    }
                })
                .collect()
        }
        // centralizers inside direct products split over the factors
        (Kind::Product(d1, d2), _) => {
            let (p1, p2) = split_perm(point, d1);
            let g1 = symmetric_of(d1);
            let g2 = symmetric_of(d2);
            let z1 = g1.centralizer(&p1);
            let z2 = g2.centralizer(&p2);
            let t1 = CharTable::build(&z1);
            let t2 = CharTable::build(&z2);
            let l1 = irrep_labels(Kind::Sym(d1), &g1, &p1, &z1, &t1);
            let l2 = irrep_labels(Kind::Sym(d2), &g2, &p2, &z2, &t2);
            product_labels(d1, table, &t1, &t2, &l1, &l2)
        }
        _ => (0..n).map(|i| format!("x{}", i)).collect(),
    }
}

/// Match each irreducible of a product centralizer to its tensor factors
/// by comparing values.
fn product_labels(
    d1: u32,
    table: &CharTable,
    t1: &CharTable,
    t2: &CharTable,
    l1: &[String],
    l2: &[String],
) -> Vec<String> {
    (0..table.n_irreps())
        .map(|i| {
            for (a, la) in l1.iter().enumerate() {
                for (b, lb) in l2.iter().enumerate() {
                    let matches = table.classes.iter().enumerate().all(|(k, kc)| {
                        let (za, zb) = split_perm(&kc.rep, d1);
                        let want = t1.value(a, &za) * t2.value(b, &zb);
                        want == table.chars[i][k]
                    });
                    if matches {
                        return format!("{}*{}", la, lb);
                    }
                }
            }
            panic!("product irreducible does not factor")
        })
        .collect()
}

fn disjoint_support(a: &Perm, b: &Perm) -> bool {
    for i in 0..a.degree() as u8 {
        if a.apply(i) != i && b.apply(i) != i {
            return false;
        }
    }
    true
}

/// The full symmetric group on its own `size` points.
fn symmetric_of(size: u32) -> PermGroup {
    let mut gens = Vec::new();
    for i in 1..size as u8 {
        gens.push(Perm::from_cycles(size, &[&[i, i + 1]]));
    }
    PermGroup::generate(size, &gens, "factor")
}

fn cyclic_label(order: u32, value: &CycloNumber) -> String {
    for m in 0..order as i64 {
        if *value == CycloNumber::root_of_unity(order, m) {
            return match (order, m) {
                (_, 0) => "1".into(),
                (2, 1) => "eps".into(),
                (3, 1) => "theta".into(),
                (3, 2) => "theta^2".into(),
                (4, 1) => "i".into(),
                (4, 2) => "-1".into(),
                (4, 3) => "-i".into(),
                (5, _) => format!("zeta^{}", m),
                (6, 1) => "-theta^2".into(),
                (6, 2) => "theta".into(),
                (6, 3) => "-1".into(),
                (6, 4) => "theta^2".into(),
                (6, 5) => "-theta".into(),
                _ => format!("w{}^{}", order, m),
            };
        }
    }
    panic!("value is not an order-{} root of unity", order)
}

fn transposition_in(group: &PermGroup) -> Perm {
    group
        .elements
        .iter()
        .find(|g| g.cycle_type() == vec![2])
        .expect("no transposition in symmetric-type group")
        .clone()
}

fn group_irrep_labels(kind: Kind, group: &PermGroup, table: &CharTable) -> Vec<String> {
    let n = table.n_irreps();
    match kind {
        Kind::Sym(1) => vec!["1".into()],
        Kind::Sym(2) => {
            let g2 = transposition_in(group);
            (0..n)
                .map(|i| {
                    if table.value(i, &g2).as_rational().unwrap() == rat(1, 1) {
                        "1".into()
                    } else {
                        "eps".into()
                    }
                })
                .collect()
        }
        Kind::Sym(3) => {
            let g2 = transposition_in(group);
            (0..n)
                .map(|i| match table.degree(i) {
                    2 => "r".into(),
                    _ => {
                        if table.value(i, &g2).as_rational().unwrap() == rat(1, 1) {
                            "1".into()
                        } else {
                            "eps".into()
                        }
                    }
                })
                .collect()
        }
        Kind::Sym(4) => (0..n)
            .map(|i| {
                let g2 = transposition_in(group);
                let at_g2 = table.value(i, &g2).as_rational().unwrap();
                match (table.degree(i), at_g2 == rat(1, 1)) {
                    (1, true) => "1".into(),
                    (1, false) => "lambda^3".into(),
                    (2, _) => "sigma".into(),
                    (3, _) if at_g2 == rat(1, 1) => "lambda^1".into(),
                    (3, _) => "lambda^2".into(),
                    _ => unreachable!("S4 degree"),
                }
            })
            .collect(),
        Kind::Sym(5) => (0..n)
            .map(|i| {
                let g2 = transposition_in(group);
                let at_g2 = table.value(i, &g2).as_rational().unwrap();
                match table.degree(i) {
                    1 => {
                        if at_g2 == rat(1, 1) {
                            "1".into()
                        } else {
                            "lambda^4".into()
                        }
                    }
                    4 => {
                        if at_g2 == rat(2, 1) {
                            "lambda^1".into()
                        } else {
                            "lambda^3".into()
                        }
                    }
                    5 => {
                        if at_g2 == rat(1, 1) {
                            "nu".into()
                        } else {
                            "nu'".into()
                        }
                    }
                    6 => "lambda^2".into(),
                    _ => unreachable!("S5 degree"),
                }
            })
            .collect(),
        Kind::Dihedral10 => {
            let g5 = Perm::from_cycles(5, &[&[1, 2, 3, 4, 5]]);
            let g2 = Perm::from_cycles(5, &[&[2, 5], &[3, 4]]);
            let bracket1 =
                &CycloNumber::root_of_unity(5, 1) + &CycloNumber::root_of_unity(5, -1);
            (0..n)
                .map(|i| match table.degree(i) {
                    1 => {
                        if table.value(i, &g2).as_rational().unwrap() == rat(1, 1) {
                            "1".into()
                        } else {
                            "eps".into()
                        }
                    }
                    2 => {
                        if *table.value(i, &g5) == bracket1 {
                            "r".into()
                        } else {
                            "r'".into()
                        }
                    }
                    _ => unreachable!("D10 degree"),
                })
                .collect()
        }
        Kind::Product(d1, d2) => {
            let g1 = symmetric_of(d1);
            let g2 = symmetric_of(d2);
            let t1 = CharTable::build(&g1);
            let t2 = CharTable::build(&g2);
            let l1 = group_irrep_labels(Kind::Sym(d1), &g1, &t1);
            let l2 = group_irrep_labels(Kind::Sym(d2), &g2, &t2);
            product_labels(d1, table, &t1, &t2, &l1, &l2)
        }
        _ => (0..n).map(|i| format!("x{}", i)).collect(),
    }
}
