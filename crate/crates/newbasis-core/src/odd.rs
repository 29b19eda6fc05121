//! The odd-`D` variant: the family `S_D` with its own primitives, the
//! quotient space `V̄ = V / F2·ζ`, the subspace bijection `α`, the unique
//! point bijection `e : V̄ → F(V)`, and the comparison with `S_{D-1}`.

use std::collections::{BTreeMap, BTreeSet};

use crate::f2::{eps_vector, span, F2Vector, SdOrder};
use crate::intervals::{enumerate_s, t_i, Interval, IntervalSet};

/// The primitive sets of the odd world: `∅` and the nested chains
/// `{[1,D-1],[2,D-2],…,[k,D-k]}` for odd `k ≤ (D-1)/2`.
pub fn primitive_sets_odd(d: u32) -> Vec<IntervalSet> {
    assert_eq!(d % 2, 1, "primitive_sets_odd needs odd D");
    let mut out = vec![IntervalSet::empty(d)];
    let mut k = 1;
    while k <= (d - 1) / 2 {
        let items = (1..=k).map(|j| Interval::new(j, d - j)).collect();
        out.push(IntervalSet::new(d, items));
        k += 2;
    }
    out
}

/// `S_D` for odd `D`: primitives, plus `t_i(B')` for `B' ∈ S_{D-2}` where
/// `i` ranges over `[1,D]` when `|B'^0| ≠ 0` and over `[1,D-1]` when
/// `|B'^0| = 0`.
pub fn enumerate_s_odd(d: u32) -> Vec<IntervalSet> {
    assert_eq!(d % 2, 1);
    let mut out: BTreeSet<IntervalSet> = primitive_sets_odd(d).into_iter().collect();
    if d >= 3 {
        for bp in enumerate_s_odd(d - 2) {
            let top = if bp.even_part().is_empty() { d - 1 } else { d };
            for i in 1..=top {
                out.insert(t_i(d, i, &bp));
            }
        }
    }
    out.into_iter().collect()
}

/// The radical generator `ζ = e_1 + e_3 + … + e_D`.
pub fn zeta(d: u32) -> F2Vector {
    assert_eq!(d % 2, 1);
    let mut bits = 0u64;
    let mut i = 1;
    while i <= d {
        bits |= 1 << (i - 1);
        i += 2;
    }
    F2Vector { d, bits }
}

/// Canonical representative of the coset `{x, x + ζ}`: the smaller bitmask.
pub fn coset_rep(x: &F2Vector) -> F2Vector {
    let z = zeta(x.d);
    let other = x.bits ^ z.bits;
    F2Vector { d: x.d, bits: x.bits.min(other) }
}

/// A subspace of `V̄`, stored as the sorted list of canonical coset reps.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct QSubspace {
    pub d: u32,
    pub reps: Vec<F2Vector>,
}

impl QSubspace {
    pub fn dim(&self) -> u32 {
        self.reps.len().trailing_zeros()
    }

    pub fn contains(&self, rep: &F2Vector) -> bool {
        self.reps.binary_search(rep).is_ok()
    }
}

/// `α(B) = π(⟨B⟩)`, as a set of canonical coset representatives.
pub fn alpha(b: &IntervalSet) -> QSubspace {
    let mut reps: BTreeSet<F2Vector> = BTreeSet::new();
    for x in span(b).elements() {
        reps.insert(coset_rep(&x));
    }
    let out = QSubspace { d: b.d(), reps: reps.into_iter().collect() };
    // π is injective on ⟨B⟩ (ζ ∉ ⟨B⟩), so |reps| = 2^{|B|}
    assert_eq!(out.reps.len(), 1 << b.len(), "π not injective on ⟨B⟩");
    out
}

/// All canonical coset representatives of `V̄`, sorted.
pub fn quotient_points(d: u32) -> Vec<F2Vector> {
    let mut out: BTreeSet<F2Vector> = BTreeSet::new();
    for bits in 0..1u64 << d {
        out.insert(coset_rep(&F2Vector { d, bits }));
    }
    out.into_iter().collect()
}

/// The unique bijection `e : V̄ → F(V)` with `x ∈ e(x)`, found as the unique
/// perfect matching of the membership relation (peeling by forced pairs).
/// Errors if the matching is not unique or does not exist, which would
/// falsify the uniqueness claim.
pub fn e_bijection_odd(d: u32) -> Result<BTreeMap<F2Vector, IntervalSet>, String> {
    let sets = enumerate_s_odd(d);
    let points = quotient_points(d);
    if sets.len() != points.len() {
        return Err(format!("|S_{}| = {} but |V̄| = {}", d, sets.len(), points.len()));
    }
    let subspaces: Vec<QSubspace> = sets.iter().map(alpha).collect();
    // adjacency: point index -> set indices whose subspace contains it
    let point_idx: BTreeMap<F2Vector, usize> =
        points.iter().enumerate().map(|(i, p)| (*p, i)).collect();
    let mut of_point: Vec<Vec<usize>> = vec![Vec::new(); points.len()];
    let mut of_set: Vec<Vec<usize>> = vec![Vec::new(); sets.len()];
    for (si, sp) in subspaces.iter().enumerate() {
        for rep in &sp.reps {
            let pi = point_idx[rep];
            of_point[pi].push(si);
            of_set[si].push(pi);
        }
    }
    let mut point_match: Vec<Option<usize>> = vec![None; points.len()];
    let mut set_done = vec![false; sets.len()];
    let mut remaining = sets.len();
    while remaining > 0 {
        let mut progressed = false;
        for pi in 0..points.len() {
            if point_match[pi].is_some() {
                continue;
            }
            let live: Vec<usize> = of_point[pi].iter().copied().filter(|&s| !set_done[s]).collect();
            if live.len() == 1 {
                point_match[pi] = Some(live[0]);
                set_done[live[0]] = true;
                remaining -= 1;
                progressed = true;
            }
        }
        for si in 0..sets.len() {
            if set_done[si] {
                continue;
            }
            let live: Vec<usize> = of_set[si]
                .iter()
                .copied()
                .filter(|&p| point_match[p].is_none())
                .collect();
            if live.len() == 1 {
                point_match[live[0]] = Some(si);
                set_done[si] = true;
                remaining -= 1;
                progressed = true;
            }
        }
        if !progressed {
            return Err("membership relation admits no unique perfect matching".into());
        }
    }
    Ok(points
        .iter()
        .enumerate()
        .map(|(pi, p)| (*p, sets[point_match[pi].unwrap()].clone()))
        .collect())
}

/// Check that the directed relation `x' ∈ e(x), x' ≠ x` is acyclic, and
/// return one topological order of `V̄` witnessing the triangularity of the
/// membership matrix.
pub fn triangular_order(d: u32) -> Result<Vec<F2Vector>, String> {
    let e = e_bijection_odd(d)?;
    let points = quotient_points(d);
    let idx: BTreeMap<F2Vector, usize> = points.iter().enumerate().map(|(i, p)| (*p, i)).collect();
    // edge x' -> x when x' ∈ e(x), x' ≠ x (x' must come first)
    let mut indeg = vec![0usize; points.len()];
    let mut succ: Vec<Vec<usize>> = vec![Vec::new(); points.len()];
    for (x, b) in &e {
        let xi = idx[x];
        for rep in &alpha(b).reps {
            let pi = idx[rep];
            if pi != xi {
                succ[pi].push(xi);
                indeg[xi] += 1;
            }
        }
    }
    let mut queue: Vec<usize> = (0..points.len()).filter(|&i| indeg[i] == 0).collect();
    queue.sort();
    let mut order = Vec::new();
    while let Some(i) = queue.pop() {
        order.push(points[i]);
        for &j in &succ[i] {
            indeg[j] -= 1;
            if indeg[j] == 0 {
                queue.push(j);
            }
        }
    }
    if order.len() != points.len() {
        return Err("membership relation is cyclic".into());
    }
    Ok(order)
}

/// The iso `ι : V^{(D-1)} → V̄`, `e_i ↦ π(e_i)`: embed the `(D-1)`-bit
/// vector and take the canonical rep. Its inverse uses the fact that `ζ`
/// has bit `D` set, so exactly one coset member has bit `D` clear.
pub fn iota(d: u32, w: &F2Vector) -> F2Vector {
    assert_eq!(w.d, d - 1);
    coset_rep(&F2Vector { d, bits: w.bits })
}

pub fn iota_inv(d: u32, rep: &F2Vector) -> F2Vector {
    let z = zeta(d);
    let clear = if rep.get(d) { rep.bits ^ z.bits } else { rep.bits };
    F2Vector { d: d - 1, bits: clear }
}

/// The comparison bijection `α^{-1} ∘ e ∘ ē^{-1} ∘ ᾱ : S_{D-1} → S_D`.
pub fn compare_bijection(d: u32) -> Result<BTreeMap<IntervalSet, IntervalSet>, String> {
    assert_eq!(d % 2, 1);
    let even_ord = SdOrder::new(d - 1);
    let e_odd = e_bijection_odd(d)?;
    let mut out = BTreeMap::new();
    for b_even in enumerate_s(d - 1) {
        // ᾱ(B) ∈ F(V̄): transport ⟨B⟩ along ι
        let image: BTreeSet<F2Vector> = span(&b_even)
            .elements()
            .iter()
            .map(|w| iota(d, w))
            .collect();
        // ē^{-1}: the even-world e-bijection inverse, transported along ι
        let xbar = iota(d, &eps_vector(&b_even));
        debug_assert!(image.contains(&xbar));
        let _ = &even_ord;
        // e(xbar) ∈ F(V): pick the odd set matched to xbar
        let b_odd = e_odd
            .get(&xbar)
            .ok_or_else(|| "point missing from odd e-bijection".to_string())?;
        out.insert(b_even, b_odd.clone());
    }
    Ok(out)
}
