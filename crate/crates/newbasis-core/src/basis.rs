//! The function space on `V`, its two bases `{ψ_x}` and `{Ψ_B}`, the
//! unitriangular membership and change-of-basis matrices relating them, the
//! subspace bijection `e`, and the symplectic Fourier transform.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use crate::exact::{rat, Rational};
use crate::f2::{pairing, span, t_map, F2Subspace, F2Vector, SdOrder};
use crate::intervals::IntervalSet;

/// A function `V → Q`, dense over all `2^d` points.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VFunction {
    pub d: u32,
    values: Vec<Rational>,
}

impl VFunction {
    pub fn zero(d: u32) -> Self {
        VFunction { d, values: vec![Rational::zero(); 1 << d] }
    }

    /// Characteristic function of the point `x`.
    pub fn psi(x: &F2Vector) -> Self {
        let mut f = Self::zero(x.d);
        f.values[x.bits as usize] = Rational::one();
        f
    }

    /// Characteristic function of `⟨B⟩`.
    pub fn psi_cap(b: &IntervalSet) -> Self {
        Self::of_subspace(&span(b))
    }

    pub fn of_subspace(sp: &F2Subspace) -> Self {
        let mut f = Self::zero(sp.d);
        for x in sp.elements() {
            f.values[x.bits as usize] = Rational::one();
        }
        f
    }

    pub fn eval(&self, x: &F2Vector) -> &Rational {
        &self.values[x.bits as usize]
    }

    pub fn set(&mut self, x: &F2Vector, v: Rational) {
        self.values[x.bits as usize] = v;
    }

    pub fn add(&self, other: &VFunction) -> VFunction {
        assert_eq!(self.d, other.d);
        VFunction {
            d: self.d,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, q: &Rational) -> VFunction {
        VFunction {
            d: self.d,
            values: self.values.iter().map(|a| a * q).collect(),
        }
    }

    pub fn is_nonneg(&self) -> bool {
        self.values.iter().all(|v| !v.is_negative())
    }

    pub fn support(&self) -> Vec<F2Vector> {
        (0..self.values.len())
            .filter(|&i| !self.values[i].is_zero())
            .map(|i| F2Vector { d: self.d, bits: i as u64 })
            .collect()
    }
}

/// The lift `θ_i : F' → F`: `(θ_i f')(T_i(x') + c e_i) = f'(x')`, zero off
/// `e_i^⊥`.
pub fn theta_i(d: u32, i: u32, fp: &VFunction) -> VFunction {
    assert_eq!(fp.d, d - 2);
    let mut out = VFunction::zero(d);
    for bits in 0..1u64 << (d - 2) {
        let xp = F2Vector { d: d - 2, bits };
        let v = fp.eval(&xp);
        if v.is_zero() {
            continue;
        }
        let base = t_map(d, i, &xp);
        for c in 0..2u64 {
            let y = F2Vector { d, bits: base.bits ^ (c << (i - 1)) };
            out.set(&y, v.clone());
        }
    }
    out
}

/// The involutive symplectic Fourier transform
/// `(Af)(y) = 2^{-d/2} Σ_x (-1)^{(x,y)} f(x)`.
pub fn symplectic_fourier(f: &VFunction) -> VFunction {
    let d = f.d;
    assert_eq!(d % 2, 0, "the transform is normalized for even d");
    let norm = rat(1, 1 << (d / 2));
    let mut out = VFunction::zero(d);
    for yb in 0..1u64 << d {
        let y = F2Vector { d, bits: yb };
        let mut acc = Rational::zero();
        for xb in 0..1u64 << d {
            let v = &f.values[xb as usize];
            if v.is_zero() {
                continue;
            }
            if pairing(&F2Vector { d, bits: xb }, &y) == 0 {
                acc += v;
            } else {
                acc -= v;
            }
        }
        out.values[yb as usize] = acc * &norm;
    }
    out
}

/// A square integer matrix indexed by `V` in a fixed linear extension of
/// the counting order.
pub struct BasisMatrix {
    pub d: u32,
    /// Vectors in row/column order (a linear extension of ≤).
    pub order: Vec<F2Vector>,
    pub entries: Vec<Vec<i64>>,
}

impl BasisMatrix {
    pub fn is_unitriangular_for(&self, ord: &SdOrder) -> bool {
        for (r, x) in self.order.iter().enumerate() {
            if self.entries[r][r] != 1 {
                return false;
            }
            for (c, y) in self.order.iter().enumerate() {
                if self.entries[r][c] != 0 && !ord.le_vec(y, x) {
                    return false;
                }
            }
        }
        true
    }

    pub fn csv(&self) -> String {
        let mut out = String::from("x");
        for y in &self.order {
            out.push(',');
            out.push_str(&y.digits());
        }
        out.push('\n');
        for (r, x) in self.order.iter().enumerate() {
            out.push_str(&x.digits());
            for c in 0..self.order.len() {
                out.push(',');
                out.push_str(&self.entries[r][c].to_string());
            }
            out.push('\n');
        }
        out
    }
}

/// A linear extension of the counting order on `V`: sort by `(|B^0|, Σf, bits)`.
/// The first two keys strictly increase along the order, so this is a valid
/// extension.
pub fn linear_extension(ord: &SdOrder) -> Vec<F2Vector> {
    let mut idx: Vec<usize> = (0..ord.sets.len()).collect();
    idx.sort_by_key(|&i| (ord.k[i], ord.f[i].iter().sum::<i64>(), ord.eps_bits[i]));
    idx.iter()
        .map(|&i| F2Vector { d: ord.d, bits: ord.eps_bits[i] })
        .collect()
}

/// The membership matrix `d_{x,x̃} = [x̃ ∈ ⟨ε^{-1}(x)⟩]`.
pub fn membership_matrix(ord: &SdOrder) -> BasisMatrix {
    let order = linear_extension(ord);
    let entries = order
        .iter()
        .map(|x| {
            let sp = span(ord.eps_inverse(x));
            order
                .iter()
                .map(|y| i64::from(sp.contains(y)))
                .collect()
        })
        .collect();
    BasisMatrix { d: ord.d, order, entries }
}

/// The inverse matrix `c_{x,x̃}`, expressing `ψ_x = Σ c_{x,x̃} Ψ_{ε^{-1}(x̃)}`.
/// Exact integer inversion of a lower unitriangular matrix by forward
/// substitution.
pub fn change_of_basis(ord: &SdOrder) -> BasisMatrix {
    let m = membership_matrix(ord);
    let n = m.order.len();
    let mut inv = vec![vec![0i64; n]; n];
    for r in 0..n {
        inv[r][r] = 1;
        for c in (0..r).rev() {
            let mut acc = 0i64;
            for j in c + 1..=r {
                acc += inv[r][j] * m.entries[j][c];
            }
            inv[r][c] = -acc;
        }
    }
    BasisMatrix { d: m.d, order: m.order, entries: inv }
}

/// The bijection `e : V → F(V)`, `x ↦ ⟨ε^{-1}(x)⟩`. Injectivity of the
/// subspace assignment and `x ∈ e(x)` are asserted; together with the
/// membership triangularity triangularity this pins `e` as the unique such bijection.
pub fn e_bijection(ord: &SdOrder) -> BTreeMap<F2Vector, F2Subspace> {
    let mut out = BTreeMap::new();
    let mut seen: Vec<Vec<F2Vector>> = Vec::new();
    for (n, b) in ord.sets.iter().enumerate() {
        let x = F2Vector { d: ord.d, bits: ord.eps_bits[n] };
        let sp = span(b);
        assert!(sp.contains(&x), "x ∉ e(x) for {:?}", b);
        let key = sp.elements();
        assert!(!seen.contains(&key), "subspace map not injective");
        seen.push(key);
        out.insert(x, sp);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::f2::eps_vector;
    use crate::intervals::{enumerate_s, t_i, Interval};

    fn set(d: u32, items: &[(u32, u32)]) -> IntervalSet {
        IntervalSet::new(d, items.iter().map(|&(a, b)| Interval::new(a, b)).collect())
    }

    #[test]
    fn psi_cap_examples() {
        assert_eq!(
            VFunction::psi_cap(&IntervalSet::empty(4)),
            VFunction::psi(&F2Vector::zero(4))
        );
        let f = VFunction::psi_cap(&set(4, &[(1, 1), (3, 3)]));
        let sup: Vec<String> = f.support().iter().map(F2Vector::digits).collect();
        assert_eq!(sup, vec!["0", "1", "3", "13"]);
        for d in [2u32, 4, 6] {
            for b in enumerate_s(d) {
                assert!(VFunction::psi_cap(&b).eval(&eps_vector(&b)).is_one());
            }
        }
    }

    #[test]
    fn theta_examples() {
        let f = theta_i(2, 1, &VFunction::psi(&F2Vector::zero(0)));
        assert_eq!(
            f,
            VFunction::psi(&F2Vector::zero(2)).add(&VFunction::psi(&F2Vector::basis(2, 1)))
        );
        let f = theta_i(4, 2, &VFunction::psi(&F2Vector::basis(2, 1)));
        let expect = VFunction::psi(&F2Vector::parse(4, "123").unwrap())
            .add(&VFunction::psi(&F2Vector::parse(4, "13").unwrap()));
        assert_eq!(f, expect);
        for d in [2u32, 4, 6] {
            for bp in enumerate_s(d - 2) {
                for i in 1..=d {
                    assert_eq!(
                        theta_i(d, i, &VFunction::psi_cap(&bp)),
                        VFunction::psi_cap(&t_i(d, i, &bp))
                    );
                }
            }
        }
    }

    #[test]
    fn fourier_involution_and_isotropic_images() {
        let d = 2;
        // span{e_1} is its own perp in dimension 2
        let l = F2Subspace::from_vectors(d, &[F2Vector::basis(d, 1)]);
        let f = VFunction::of_subspace(&l);
        assert_eq!(symplectic_fourier(&f), f);
        for d in [2u32, 4] {
            for bits in 0..1u64 << d {
                let f = VFunction::psi(&F2Vector { d, bits });
                assert_eq!(symplectic_fourier(&symplectic_fourier(&f)), f);
            }
        }
        // A(Ψ_B) = 2^{m-d/2} x indicator of ⟨B⟩^⊥
        for d in [2u32, 4, 6] {
            for b in enumerate_s(d) {
                let sp = span(&b);
                let af = symplectic_fourier(&VFunction::psi_cap(&b));
                let scale = rat(1 << sp.dim() as i64, 1 << (d / 2) as i64);
                let expect = VFunction::of_subspace(&sp.perp()).scale(&scale);
                assert_eq!(af, expect);
                assert!(af.is_nonneg(), "A(Ψ_B) has a negative value for {:?}", b);
            }
        }
    }

    #[test]
    fn membership_and_inverse_are_unitriangular() {
        for d in [2u32, 4, 6] {
            let ord = SdOrder::new(d);
            let m = membership_matrix(&ord);
            assert!(m.is_unitriangular_for(&ord), "d-matrix fails membership triangularity");
            let c = change_of_basis(&ord);
            assert!(c.is_unitriangular_for(&ord), "c-matrix not unitriangular");
            let n = m.order.len();
            for r in 0..n {
                for col in 0..n {
                    let mut acc = 0i64;
                    for j in 0..n {
                        acc += c.entries[r][j] * m.entries[j][col];
                    }
                    assert_eq!(acc, i64::from(r == col), "c·d ≠ I");
                }
            }
        }
    }

    #[test]
    fn membership_small_example() {
        // D=2 in the order (0, 1, 2, 12): rows {0}, {0,1}, {0,2}, {0,12}
        let ord = SdOrder::new(2);
        let m = membership_matrix(&ord);
        let labels: Vec<String> = m.order.iter().map(F2Vector::digits).collect();
        assert_eq!(labels, vec!["0", "1", "2", "12"]);
        assert_eq!(m.entries[0], vec![1, 0, 0, 0]);
        assert_eq!(m.entries[1], vec![1, 1, 0, 0]);
        assert_eq!(m.entries[2], vec![1, 0, 1, 0]);
        assert_eq!(m.entries[3], vec![1, 0, 0, 1]);
    }

    #[test]
    fn psi_expands_in_cap_basis() {
        // ψ_x = Σ c_{x,x̃} Ψ_{ε^{-1}(x̃)}, checked functionally
        for d in [2u32, 4] {
            let ord = SdOrder::new(d);
            let c = change_of_basis(&ord);
            for (r, x) in c.order.iter().enumerate() {
                let mut f = VFunction::zero(d);
                for (j, y) in c.order.iter().enumerate() {
                    if c.entries[r][j] != 0 {
                        let term = VFunction::psi_cap(ord.eps_inverse(y))
                            .scale(&rat(c.entries[r][j], 1));
                        f = f.add(&term);
                    }
                }
                assert_eq!(f, VFunction::psi(x));
            }
        }
        // D=2: ψ_{e_1} = Ψ_{<1>} - Ψ_{∅}
        let ord = SdOrder::new(2);
        let c = change_of_basis(&ord);
        let r = c.order.iter().position(|x| x.digits() == "1").unwrap();
        let col0 = c.order.iter().position(|x| x.digits() == "0").unwrap();
        assert_eq!(c.entries[r][r], 1);
        assert_eq!(c.entries[r][col0], -1);
    }

    #[test]
    fn e_bijection_props() {
        for d in [2u32, 4, 6] {
            let ord = SdOrder::new(d);
            let e = e_bijection(&ord);
            assert_eq!(e.len(), 1 << d);
            assert_eq!(e[&F2Vector::zero(d)].dim(), 0);
        }
        let ord = SdOrder::new(4);
        let e = e_bijection(&ord);
        let x = F2Vector::parse(4, "123").unwrap();
        assert_eq!(e[&x], span(&set(4, &[(2, 2), (1, 3)])));
    }
}
