#![allow(dead_code)]

use zerodim::datum::omega_group;
use zerodim::rat::{qi, q_to_i64};
use zerodim::rootsys::CartanType;
use zerodim::{CoxeterDatum, RatVec, RootDatum};

/// Dominant `μ = Σ m_i ω_i^∨` with `<μ, 2ρ> ≤ bound`.
pub fn small_mus(rd: &RootDatum, bound: i64) -> Vec<RatVec> {
    let r = rd.rank();
    let weights: Vec<i64> = (0..r)
        .map(|i| q_to_i64(&(rd.pair_rho(&rd.fundamental_coweight(i)) * qi(2))))
        .collect();
    let mut out = Vec::new();
    let mut m = vec![0i64; r];
    fn rec(k: usize, left: i64, w: &[i64], m: &mut Vec<i64>, out: &mut Vec<RatVec>) {
        if k == w.len() {
            out.push(RatVec::from_ints(m));
            return;
        }
        let mut c = 0;
        while c * w[k] <= left {
            m[k] = c;
            rec(k + 1, left - c * w[k], w, m, out);
            c += 1;
        }
        m[k] = 0;
    }
    rec(0, bound, &weights, &mut m, &mut out);
    out
}

/// Every adjoint datum of the given types with all `σ₀`, all `τ ∈ Ω` and `<μ, 2ρ> ≤ bound`.
pub fn sweep(types: &[(CartanType, usize)], bound: i64) -> Vec<CoxeterDatum> {
    let mut out = Vec::new();
    for &(ty, n) in types {
        let rd = RootDatum::irreducible(ty, n).unwrap();
        let mus = small_mus(&rd, bound);
        for s in rd.diagram_automorphisms() {
            for t in omega_group(&rd) {
                for mu in &mus {
                    out.push(CoxeterDatum::new(rd.clone(), s.clone(), t.clone(), mu.clone()).unwrap());
                }
            }
        }
    }
    out
}

pub fn main_sweep_types() -> Vec<(CartanType, usize)> {
    use CartanType::*;
    vec![(A, 1), (A, 2), (A, 3), (A, 4), (A, 5), (B, 2), (B, 3), (C, 2), (C, 3), (D, 4), (D, 5)]
}
