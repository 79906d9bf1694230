use crate::field::{Element, FieldCtx};
use crate::planarity::PlanarCandidate;
use std::collections::{BTreeSet, HashMap};

type Key = (u32, Vec<u32>);

fn key(c: &PlanarCandidate) -> Key {
    (c.a.index(), c.ell.coeffs().iter().map(|e| e.index()).collect())
}

/// Candidates inequivalent under `f ↦ μ·f(λx)` with `λ ∈ F^*`, `μ ∈ F_q^*`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalingClass {
    /// Lexicographically least orbit element, ordered by `(a, ℓ coefficients)` indices.
    pub representative: PlanarCandidate,
    /// Input positions that fall in this class.
    pub members: Vec<usize>,
    pub orbit_size: usize,
}

/// The full orbit of `cand`, sorted by key.
pub fn scaling_orbit(ctx: &FieldCtx, cand: &PlanarCandidate) -> Vec<PlanarCandidate> {
    let mus: Vec<Element> = ctx.base_elements().into_iter().filter(|m| !m.is_zero()).collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for lambda in ctx.nonzero_elements() {
        let s = cand.substitute(ctx, lambda);
        for &mu in &mus {
            let t = s.scale(ctx, mu);
            if seen.insert(key(&t)) {
                out.push(t);
            }
        }
    }
    out.sort_by_key(key);
    out
}

/// Groups `cands` into scaling classes, ordered by first appearance.
pub fn dedup_by_scaling(ctx: &FieldCtx, cands: &[PlanarCandidate]) -> Vec<ScalingClass> {
    let mut canon: HashMap<Key, usize> = HashMap::new();
    let mut classes: Vec<ScalingClass> = Vec::new();
    let group = (ctx.size() as usize - 1) * (ctx.q() as usize - 1);
    for (pos, c) in cands.iter().enumerate() {
        if let Some(&ci) = canon.get(&key(c)) {
            classes[ci].members.push(pos);
            continue;
        }
        let orbit = scaling_orbit(ctx, c);
        assert_eq!(group % orbit.len(), 0, "orbit size must divide the group order");
        let ci = classes.len();
        for o in &orbit {
            canon.insert(key(o), ci);
        }
        classes.push(ScalingClass { representative: orbit[0].clone(), members: vec![pos], orbit_size: orbit.len() });
    }
    classes
}
