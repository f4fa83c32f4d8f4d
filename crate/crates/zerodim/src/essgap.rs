//! Essential gap and its lattice-point decomposition.

use num_traits::Zero;
use serde::Serialize;

use crate::bg::{best_integral_approx, lattice_orbits, length, BgMuPoset, SigmaClass};
use crate::datum::CoxeterDatum;
use crate::error::{Error, Result};
use crate::rat::{is_int, q_to_i64, qi, RatVec};

/// Every count involved in `Ess-gap([b₁],[b₂])`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GapReport {
    pub ess_gap: i64,
    pub b1: i64,
    pub b2: i64,
    pub i: i64,
    pub length: i64,
    /// `<ν₂ − ν₁, 2ρ>`.
    pub two_rho_pairing: i64,
}

/// Orbits `o` with `<v, ω_o> = 0`.
pub fn zero_orbits(datum: &CoxeterDatum, v: &RatVec) -> Vec<bool> {
    datum.sigma0_orbits().iter().map(|o| datum.pair_orbit(v, o).is_zero()).collect()
}

/// Lattice orbits of `c` outside `J(ν₂ − ν₁)`.
fn boundary_count(datum: &CoxeterDatum, c: &SigmaClass, gap_zero: &[bool]) -> i64 {
    lattice_orbits(datum, c)
        .iter()
        .zip(gap_zero)
        .filter(|(&lat, &z)| lat && !z)
        .count() as i64
}

pub fn ess_gap(datum: &CoxeterDatum, c1: &SigmaClass, c2: &SigmaClass) -> Result<GapReport> {
    let len = length(datum, c1, c2)? as i64;
    let diff = &c2.nu - &c1.nu;
    let two_rho = datum.roots().pair_rho(&diff) * qi(2);
    if !is_int(&two_rho) {
        return Err(Error::Internal(format!("<nu2 - nu1, 2 rho> = {two_rho} is not integral")));
    }
    let two_rho = q_to_i64(&two_rho);
    let jz = zero_orbits(datum, &diff);
    let b1 = boundary_count(datum, c1, &jz);
    let b2 = boundary_count(datum, c2, &jz);
    Ok(GapReport { ess_gap: two_rho - len, b1, b2, i: len - b2, length: len, two_rho_pairing: two_rho })
}

/// `Ess-gap([b],[b_max])`.
pub fn gap_to_max(datum: &CoxeterDatum, poset: &BgMuPoset, c: &SigmaClass) -> Result<GapReport> {
    if !poset.contains(c) {
        return Err(Error::NotInPoset);
    }
    ess_gap(datum, c, poset.max())
}

/// Orbit pairings of the best integral approximation that agree with `ν`.
pub fn touching_orbits(datum: &CoxeterDatum, c: &SigmaClass) -> Vec<bool> {
    let approx = best_integral_approx(datum, c);
    datum
        .sigma0_orbits()
        .iter()
        .zip(&approx.pairings)
        .map(|(o, a)| &datum.pair_orbit(&c.nu, o) == a)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bg::enumerate_bg_mu;

    #[test]
    fn gl8_pair_counts() {
        let d = CoxeterDatum::from_json(r#"{"type":"GL8","mu":[3,1,1,1,0,0,0,0]}"#).unwrap();
        let k = d.kappa_target();
        let n1 = RatVec::from_fracs(&[(5, 4), (5, 4), (5, 4), (5, 4), (1, 4), (1, 4), (1, 4), (1, 4)]);
        let n2 = RatVec::from_fracs(&[(3, 1), (1, 1), (1, 2), (1, 2), (1, 2), (1, 2), (0, 1), (0, 1)]);
        let g = ess_gap(&d, &SigmaClass::new(n1, k.clone()), &SigmaClass::new(n2, k)).unwrap();
        assert_eq!((g.b1, g.b2, g.i, g.ess_gap, g.length, g.two_rho_pairing), (0, 4, 3, 3, 7, 10));
    }

    #[test]
    fn self_gap_is_zero() {
        let d = CoxeterDatum::from_json(r#"{"type":"B2","mu":"w2"}"#).unwrap();
        let p = enumerate_bg_mu(&d).unwrap();
        for c in p.elements() {
            let g = ess_gap(&d, c, c).unwrap();
            assert_eq!((g.ess_gap, g.b1, g.b2, g.i, g.length), (0, 0, 0, 0, 0));
        }
    }

    #[test]
    fn gl5_example_has_no_gap() {
        let d = CoxeterDatum::from_json(r#"{"type":"GL5","mu":[2,1,0,-1,-1]}"#).unwrap();
        let p = enumerate_bg_mu(&d).unwrap();
        let nu = RatVec::from_fracs(&[(3, 2), (3, 2), (-2, 3), (-2, 3), (-2, 3)]);
        let c = p.by_nu(&nu).expect("class exists").clone();
        let g = gap_to_max(&d, &p, &c).unwrap();
        assert_eq!((g.i, g.b1, g.ess_gap), (0, 0, 0));
        let outside = SigmaClass::new(RatVec::from_ints(&[3, 0, 0, -1, -1]), d.kappa_target());
        assert_eq!(gap_to_max(&d, &p, &outside), Err(Error::NotInPoset));
    }
}
