//! Exact irreducible character tables by the Burnside-Dixon method: class
//! matrices are simultaneously diagonalized over F_61 (61 ≡ 1 mod 60, so a
//! fixed primitive root realizes every needed root of unity), degrees and
//! character values are recovered mod 61 and lifted exactly into Q(ζ_60)
//! through the multiplicity transform. Row and column orthogonality are
//! verified on every table.

use crate::exact::{rat, CycloNumber, Rational};
use crate::perm::{ConjClass, Perm, PermGroup};
use num_traits::Zero;

const P: u64 = 61;
/// A fixed primitive 60th root of unity mod 61 (2 has order 60).
const THETA: u64 = 2;

fn mod_pow(mut b: u64, mut e: u64) -> u64 {
    let mut acc = 1u64;
    b %= P;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % P;
        }
        b = b * b % P;
        e >>= 1;
    }
    acc
}

fn mod_inv(a: u64) -> u64 {
    mod_pow(a, P - 2)
}

/// An exact character table.
#[derive(Clone, Debug)]
pub struct CharTable {
    pub group: PermGroup,
    pub classes: Vec<ConjClass>,
    /// `chars[r][c]` = value of irreducible r on class c. Rows sorted by
    /// (degree, value signature); relabeled by the catalog layer.
    pub chars: Vec<Vec<CycloNumber>>,
    pub labels: Vec<String>,
}

impl CharTable {
    pub fn build(group: &PermGroup) -> CharTable {
        let classes = group.conjugacy_classes();
        let r = classes.len();
        let order = group.order() as u64;
        assert!(order % P != 0);

        // membership index
        let class_of: Vec<usize> = group
            .elements
            .iter()
            .map(|g| PermGroup::class_index(&classes, g))
            .collect();
        let inv_class: Vec<usize> = classes
            .iter()
            .map(|c| PermGroup::class_index(&classes, &c.rep.inverse()))
            .collect();

        // class constants a_{ijk}: number of (u,v) in C_i x C_j with uv = w_k
        let mut a = vec![vec![vec![0u64; r]; r]; r];
        for i in 0..r {
            for (k, ck) in classes.iter().enumerate() {
                let wk = &ck.rep;
                for u in &classes[i].members {
                    let v = u.inverse().compose(wk);
                    let j = class_of[group.index_of(&v)];
                    a[i][j][k] += 1;
                }
            }
        }

        // simultaneous eigenspaces of the class matrices over F_61
        let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..r)
            .map(|i| {
                let mut v = vec![0u64; r];
                v[i] = 1;
                v
            })
            .collect()];
        for i in 0..r {
            let m: Vec<Vec<u64>> = (0..r)
                .map(|k| (0..r).map(|j| a[i][j][k] % P).collect())
                .collect();
            let mut next = Vec::new();
            for space in spaces {
                if space.len() == 1 {
                    next.push(space);
                    continue;
                }
                next.extend(split_space(&m, &space));
            }
            spaces = next;
        }
        assert!(spaces.iter().all(|s| s.len() == 1), "class algebra did not split");
        assert_eq!(spaces.len(), r);

        // central characters: omega[chi][i] = eigenvalue of M_i
        let mut omegas: Vec<Vec<u64>> = Vec::with_capacity(r);
        for space in &spaces {
            let v = &space[0];
            let pivot = v.iter().position(|&x| x != 0).unwrap();
            let mut om = Vec::with_capacity(r);
            for i in 0..r {
                // (M_i v)_pivot / v_pivot
                let mut acc = 0u64;
                for j in 0..r {
                    acc = (acc + a[i][j][pivot] % P * v[j]) % P;
                }
                om.push(acc * mod_inv(v[pivot]) % P);
            }
            omegas.push(om);
        }

        // degrees
        let h: Vec<u64> = classes.iter().map(|c| c.members.len() as u64).collect();
        let mut degrees: Vec<u64> = Vec::with_capacity(r);
        for om in &omegas {
            let mut s = 0u64;
            for i in 0..r {
                s = (s + om[i] * om[inv_class[i]] % P * mod_inv(h[i])) % P;
            }
            let d2 = order % P * mod_inv(s) % P;
            let d = (1..=11)
                .find(|d| d * d % P == d2)
                .expect("no integer degree matches");
            degrees.push(d);
        }
        let degsq: u64 = degrees.iter().map(|d| d * d).sum();
        assert_eq!(degsq, order, "sum of squared degrees");

        // character values mod p, then exact lift
        let mut chars: Vec<Vec<CycloNumber>> = Vec::with_capacity(r);
        for (chi, om) in omegas.iter().enumerate() {
            let d = degrees[chi];
            let modp: Vec<u64> = (0..r).map(|i| d * om[i] % P * mod_inv(h[i]) % P).collect();
            let mut row = Vec::with_capacity(r);
            for (i, class) in classes.iter().enumerate() {
                row.push(lift_value(group, &classes, &class_of, &modp, class, i, d));
            }
            chars.push(row);
        }

        // canonical row order: trivial first, then degree, then a
        // deterministic value signature
        let mut idx: Vec<usize> = (0..r).collect();
        idx.sort_by_key(|&i| {
            let trivial = chars[i].iter().all(|v| *v == CycloNumber::one());
            (!trivial, degrees[i], signature(&chars[i]))
        });
        let chars: Vec<Vec<CycloNumber>> = idx.into_iter().map(|i| chars[i].clone()).collect();
        let labels = (0..r).map(|i| format!("x{}", i)).collect();

        let table = CharTable { group: group.clone(), classes, chars, labels };
        table.validate();
        table
    }

    fn validate(&self) {
        let r = self.classes.len();
        let order = self.group.order() as i64;
        assert!(self.chars[0].iter().all(|v| *v == CycloNumber::one()));
        // row orthogonality
        for i in 0..r {
            for j in 0..r {
                let mut acc = CycloNumber::zero();
                for (k, class) in self.classes.iter().enumerate() {
                    let term = &self.chars[i][k] * &self.chars[j][k].conj();
                    acc += &term.scale(&rat(class.members.len() as i64, 1));
                }
                let expect = if i == j { rat(order, 1) } else { Rational::zero() };
                assert_eq!(acc.as_rational(), Some(expect), "row orthogonality fails");
            }
        }
        // column orthogonality
        for k in 0..r {
            for l in 0..r {
                let mut acc = CycloNumber::zero();
                for i in 0..r {
                    acc += &(&self.chars[i][k] * &self.chars[i][l].conj());
                }
                let expect = if k == l {
                    rat(order / self.classes[k].members.len() as i64, 1)
                } else {
                    Rational::zero()
                };
                assert_eq!(acc.as_rational(), Some(expect), "column orthogonality fails");
            }
        }
    }

    pub fn n_irreps(&self) -> usize {
        self.chars.len()
    }

    pub fn degree(&self, i: usize) -> i64 {
        self.chars[i][0]
            .as_rational()
            .unwrap()
            .to_integer()
            .try_into()
            .unwrap()
    }

    pub fn class_index(&self, x: &Perm) -> usize {
        PermGroup::class_index(&self.classes, x)
    }

    pub fn value(&self, irrep: usize, x: &Perm) -> &CycloNumber {
        &self.chars[irrep][self.class_index(x)]
    }

    /// Exact multiplicity `(irrep : values)` of an irreducible in a class
    /// function given by its values on the table's classes.
    pub fn multiplicity(&self, values: &[CycloNumber], irrep: usize) -> Rational {
        let mut acc = CycloNumber::zero();
        for (k, class) in self.classes.iter().enumerate() {
            let term = &values[k] * &self.chars[irrep][k].conj();
            acc += &term.scale(&rat(class.members.len() as i64, 1));
        }
        let q = acc
            .as_rational()
            .expect("inner product of characters must be rational");
        q / rat(self.group.order() as i64, 1)
    }

    /// Decompose a class function into irreducibles; multiplicities must be
    /// nonnegative integers or the input was not a character.
    pub fn decompose(&self, values: &[CycloNumber]) -> Vec<(usize, u64)> {
        let mut out = Vec::new();
        for i in 0..self.n_irreps() {
            let m = self.multiplicity(values, i);
            if m.is_zero() {
                continue;
            }
            assert!(m.is_integer(), "non-integer multiplicity: not a character");
            let m: i64 = m.to_integer().try_into().unwrap();
            assert!(m > 0, "negative multiplicity: not a character");
            out.push((i, m as u64));
        }
        out
    }

    /// The unique irreducible whose value at `x` equals `want` and which is
    /// trivial-or-not per the provided filter; returns the row index.
    pub fn find_irrep<F>(&self, pred: F) -> Option<usize>
    where
        F: Fn(usize) -> bool,
    {
        let hits: Vec<usize> = (0..self.n_irreps()).filter(|&i| pred(i)).collect();
        if hits.len() == 1 {
            Some(hits[0])
        } else {
            None
        }
    }
}

impl PermGroup {
    pub fn class_index(classes: &[ConjClass], x: &Perm) -> usize {
        classes
            .iter()
            .position(|c| c.members.binary_search(x).is_ok())
            .expect("element not covered by classes")
    }
}

/// Kernel-based eigenspace splitting of `space` under matrix `m` (mod P).
fn split_space(m: &[Vec<u64>], space: &[Vec<u64>]) -> Vec<Vec<Vec<u64>>> {
    let r = m.len();
    let dim = space.len();
    // restriction of m to the subspace in its own coordinates: solve
    // m*b_i = sum_j c_ji b_j for each basis vector b_i
    let mut images: Vec<Vec<u64>> = Vec::with_capacity(dim);
    for b in space {
        let mut img = vec![0u64; r];
        for (row, img_v) in img.iter_mut().enumerate() {
            let mut acc = 0u64;
            for col in 0..r {
                acc = (acc + m[row][col] * b[col]) % P;
            }
            *img_v = acc;
        }
        images.push(img);
    }
    let coords = express_in_basis(space, &images);
    let mut out = Vec::new();
    for lambda in 0..P {
        // kernel of (restricted - lambda I)
        let mut mat: Vec<Vec<u64>> = vec![vec![0u64; dim]; dim];
        for i in 0..dim {
            for j in 0..dim {
                // restricted matrix entry: coefficient of b_i in m*b_j
                mat[i][j] = coords[j][i];
            }
            mat[i][i] = (mat[i][i] + P - lambda % P) % P;
        }
        let kernel = null_space(&mat);
        if kernel.is_empty() {
            continue;
        }
        let vecs: Vec<Vec<u64>> = kernel
            .iter()
            .map(|k| {
                let mut v = vec![0u64; r];
                for (j, b) in space.iter().enumerate() {
                    for (col, item) in v.iter_mut().enumerate() {
                        *item = (*item + k[j] * b[col]) % P;
                    }
                }
                v
            })
            .collect();
        out.push(vecs);
    }
    let total: usize = out.iter().map(|s| s.len()).sum();
    assert_eq!(total, dim, "eigenspace split lost dimensions");
    out
}

/// Coordinates of each image vector in the given basis (Gaussian solve).
fn express_in_basis(basis: &[Vec<u64>], vecs: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let r = basis[0].len();
    let dim = basis.len();
    // row-reduce [basis^T | vecs^T]
    let mut aug: Vec<Vec<u64>> = Vec::with_capacity(r);
    for row in 0..r {
        let mut line = Vec::with_capacity(dim + vecs.len());
        for b in basis {
            line.push(b[row]);
        }
        for v in vecs {
            line.push(v[row]);
        }
        aug.push(line);
    }
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..dim {
        if let Some(p) = (rank..r).find(|&i| aug[i][col] != 0) {
            aug.swap(rank, p);
            let inv = mod_inv(aug[rank][col]);
            for item in aug[rank].iter_mut() {
                *item = *item * inv % P;
            }
            for i in 0..r {
                if i != rank && aug[i][col] != 0 {
                    let f = aug[i][col];
                    for j in 0..aug[i].len() {
                        aug[i][j] = (aug[i][j] + P - f * aug[rank][j] % P) % P;
                    }
                }
            }
            pivots.push(col);
            rank += 1;
        }
    }
    assert_eq!(rank, dim, "basis not independent");
    vecs.iter()
        .enumerate()
        .map(|(vi, _)| {
            let mut coord = vec![0u64; dim];
            for (row, &col) in pivots.iter().enumerate() {
                coord[col] = aug[row][dim + vi];
            }
            coord
        })
        .collect()
}

fn null_space(mat: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let n = mat.len();
    let mut m: Vec<Vec<u64>> = mat.to_vec();
    let mut pivot_cols = Vec::new();
    let mut rank = 0;
    for col in 0..n {
        if let Some(p) = (rank..n).find(|&i| m[i][col] != 0) {
            m.swap(rank, p);
            let inv = mod_inv(m[rank][col]);
            for item in m[rank].iter_mut() {
                *item = *item * inv % P;
            }
            for i in 0..n {
                if i != rank && m[i][col] != 0 {
                    let f = m[i][col];
                    for j in 0..n {
                        m[i][j] = (m[i][j] + P - f * m[rank][j] % P) % P;
                    }
                }
            }
            pivot_cols.push(col);
            rank += 1;
        }
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivot_cols.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0u64; n];
            v[fc] = 1;
            for (row, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = (P - m[row][fc]) % P;
            }
            v
        })
        .collect()
}

/// Dixon lift: recover the exact value of χ on a class from its mod-p
/// values on the power classes, via the multiplicity transform.
fn lift_value(
    group: &PermGroup,
    classes: &[ConjClass],
    class_of: &[usize],
    modp: &[u64],
    class: &ConjClass,
    _i: usize,
    degree: u64,
) -> CycloNumber {
    let n = class.rep.order() as u64;
    let z = mod_pow(THETA, 60 / n); // primitive n-th root mod p
    let zinv = mod_inv(z);
    let ninv = mod_inv(n % P);
    let mut out = CycloNumber::zero();
    for l in 0..n {
        let mut acc = 0u64;
        for t in 0..n {
            let pow = class.rep.pow(t as u32);
            let cls = class_of[group.index_of(&pow)];
            acc = (acc + modp[cls] * mod_pow(zinv, t * l % 60)) % P;
        }
        let nu = acc * ninv % P;
        assert!(nu <= degree, "multiplicity lift out of range");
        if nu != 0 {
            out += &CycloNumber::root_of_unity(n as u32, l as i64).scale(&rat(nu as i64, 1));
        }
    }
    let _ = classes;
    out
}

/// Deterministic value signature used to sort table rows.
fn signature(row: &[CycloNumber]) -> String {
    row.iter().map(|v| format!("{};", v)).collect()
}

/// Frobenius induction: values of `Ind_K^G χ` on the classes of `G`, where
/// `χ` is given by its values on the classes of `K` (a subgroup of `G`).
pub fn induce_values(
    g: &PermGroup,
    g_classes: &[ConjClass],
    k: &PermGroup,
    k_table: &CharTable,
    chi: &[CycloNumber],
) -> Vec<CycloNumber> {
    assert!(k.is_subgroup_of(g), "{} is not a subgroup of {}", k.name, g.name);
    let korder = rat(k.order() as i64, 1);
    g_classes
        .iter()
        .map(|gc| {
            let mut acc = CycloNumber::zero();
            for t in &g.elements {
                let conj = gc.rep.conjugate_by(&t.inverse());
                if k.contains(&conj) {
                    acc += &chi[k_table.class_index(&conj)];
                }
            }
            acc.scale(&korder.recip())
        })
        .collect()
}
