//! Hodge–Newton decomposition and the standalone Levi datum `(M_J, σ₀^M, τ_J, μ_P)`.

use num_traits::{Signed, Zero};

use crate::affine::AffineWeylElement;
use crate::bg::{BgMuPoset, SigmaClass};
use crate::datum::{CoxeterDatum, OmegaElement};
use crate::error::{Error, Result};
use crate::rat::RatVec;
use crate::rootsys::WeylElement;

fn check_stable(datum: &CoxeterDatum, j: &[usize]) -> Result<()> {
    if j.iter().any(|&i| i >= datum.rank() || !j.contains(&datum.sigma0()[i])) {
        return Err(Error::NotSigmaStable(j.to_vec()));
    }
    Ok(())
}

/// `I(ν) ⊆ J` and `μ^◇ − ν ∈ Σ_{j∈J} ℝ_{≥0} α_j^∨`.
pub fn is_hn_decomposable(datum: &CoxeterDatum, c: &SigmaClass, j: &[usize]) -> Result<bool> {
    check_stable(datum, j)?;
    let rd = datum.roots();
    if rd.centralizer_type(&c.nu).iter().any(|i| !j.contains(i)) {
        return Ok(false);
    }
    let diff = &datum.mu_diamond() - &c.nu;
    if !rd.central_part(&diff).is_zero() {
        return Ok(false);
    }
    let coords = rd.coroot_coords(&diff);
    Ok(coords
        .iter()
        .enumerate()
        .all(|(i, x)| if j.contains(&i) { !x.is_negative() } else { x.is_zero() }))
}

/// `I(ν) ∪ { i : <μ^◇ − ν, ω_i> ≠ 0 }`, sorted.
pub fn minimal_j(datum: &CoxeterDatum, c: &SigmaClass) -> Vec<usize> {
    let rd = datum.roots();
    let diff = &datum.mu_diamond() - &c.nu;
    let mut j = rd.centralizer_type(&c.nu);
    for i in 0..rd.rank() {
        if !rd.pair_weight(&diff, i).is_zero() && !j.contains(&i) {
            j.push(i);
        }
    }
    j.sort();
    j
}

/// Whether `minimal_J(c) = S`.
pub fn is_hn_indecomposable(datum: &CoxeterDatum, c: &SigmaClass) -> bool {
    minimal_j(datum, c).len() == datum.rank()
}

/// Index of the largest Hodge–Newton indecomposable class.
pub fn indec_index(datum: &CoxeterDatum, poset: &BgMuPoset) -> Result<usize> {
    let cand: Vec<usize> = (0..poset.len())
        .filter(|&a| is_hn_indecomposable(datum, &poset.elements()[a]))
        .collect();
    cand.iter()
        .copied()
        .find(|&a| {
            cand.iter()
                .all(|&b| crate::bg::leq(datum, &poset.elements()[b], &poset.elements()[a]))
        })
        .ok_or_else(|| Error::Internal("no unique maximal indecomposable class".into()))
}

pub fn indec_max(poset: &BgMuPoset) -> SigmaClass {
    poset.indec().clone()
}

/// The Levi datum attached to a σ₀-stable `J`.
#[derive(Clone, Debug)]
pub struct LeviDatum {
    pub j: Vec<usize>,
    /// Minimal length representative with `z^{-1} τ σ₀(z) ∈ W̃_J`.
    pub z: WeylElement,
    /// `z^{-1} τ σ₀(z)` in the coordinates of the ambient datum.
    pub tau_j: AffineWeylElement,
    /// `z(μ)`.
    pub mu_p: RatVec,
    /// Adjoint `M_J` on the labels of `J` with `σ₀|_J`, `τ_J` and `μ`.
    pub inner: CoxeterDatum,
}

/// All valid `z ∈ W^J` in order of increasing length, with the resulting Levi data.
pub fn levi_data(datum: &CoxeterDatum, j: &[usize], limit: usize) -> Result<Vec<LeviDatum>> {
    check_stable(datum, j)?;
    let rd = datum.roots();
    let mut j = j.to_vec();
    j.sort();
    let (p, pinv) = datum.frobenius_matrix();
    let tau = &datum.tau().element;
    let mut out = Vec::new();
    for z in rd.min_coset_reps(&j) {
        let zs = z.conjugate_by(p, pinv);
        let y = z.inverse().compose(&tau.finite).compose(&zs);
        if !rd.in_parabolic(&y, &j) {
            continue;
        }
        let za = AffineWeylElement::from_finite(z.clone());
        let tau_j = za.inverse().compose(tau).compose(&AffineWeylElement::from_finite(zs));
        let shifted = datum_with_tau(datum, tau_j.clone())?;
        let inner = shifted.restrict_to_labels(&j, true)?;
        if inner.tau().element.length(inner.roots()) != 0 {
            return Err(Error::Internal("tau_J does not have length zero".into()));
        }
        out.push(LeviDatum { j: j.clone(), mu_p: z.apply(datum.mu()), z, tau_j, inner });
        if out.len() >= limit {
            break;
        }
    }
    Ok(out)
}

/// Copy of `datum` with `τ` replaced, without re-validating the alcove condition.
fn datum_with_tau(datum: &CoxeterDatum, tau: AffineWeylElement) -> Result<CoxeterDatum> {
    Ok(datum.clone_with_tau(OmegaElement { element: tau, nodes: Vec::new() }))
}

/// Levi datum for the first valid `z` (smallest length).
pub fn build_levi_datum(datum: &CoxeterDatum, j: &[usize]) -> Result<LeviDatum> {
    levi_data(datum, j, 1)?
        .into_iter()
        .next()
        .ok_or_else(|| Error::Internal(format!("no z in W^J for J = {j:?}")))
}

/// The class of `M_J` attached to a Hodge–Newton decomposable class of `G`.
pub fn restrict_class(datum: &CoxeterDatum, levi: &LeviDatum, c: &SigmaClass) -> Result<SigmaClass> {
    if !is_hn_decomposable(datum, c, &levi.j)? {
        return Err(Error::NotHnDecomposable(levi.j.clone()));
    }
    let nu = crate::datum::project_coweight(datum.roots(), &levi.j, &c.nu);
    Ok(SigmaClass::new(nu, levi.inner.kappa_target()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bg::enumerate_bg_mu;

    fn datum(json: &str) -> CoxeterDatum {
        CoxeterDatum::from_json(json).unwrap()
    }

    #[test]
    fn example_a3_flip_levi() {
        let d = datum(r#"{"type":"A3","sigma0":"flip","mu":"w2"}"#);
        let p = enumerate_bg_mu(&d).unwrap();
        let b1 = &p.elements()[1];
        assert_eq!(minimal_j(&d, b1), vec![1]);
        assert!(is_hn_decomposable(&d, b1, &[1]).unwrap());
        assert!(!is_hn_decomposable(&d, p.basic(), &[1]).unwrap());
        assert!(is_hn_decomposable(&d, p.basic(), &[0, 1, 2]).unwrap());
        assert!(is_hn_decomposable(&d, b1, &[0]).is_err());
        let levi = build_levi_datum(&d, &[1]).unwrap();
        assert!(levi.z.is_identity());
        assert_eq!(levi.inner.label(), "(A1, id, id, w1)");
        assert_eq!(p.indec(), p.basic());
    }

    #[test]
    fn restriction_requires_decomposability() {
        let d = datum(r#"{"type":"A3","sigma0":"flip","mu":"w2"}"#);
        let p = enumerate_bg_mu(&d).unwrap();
        let levi = build_levi_datum(&d, &[1]).unwrap();
        assert_eq!(restrict_class(&d, &levi, p.basic()), Err(Error::NotHnDecomposable(vec![1])));
        assert!(restrict_class(&d, &levi, p.max()).is_err());
        // ν(b₁) is central in M_J, so b₁ restricts to the basic class of the Levi
        let m = restrict_class(&d, &levi, &p.elements()[1]).unwrap();
        let lp = enumerate_bg_mu(&levi.inner).unwrap();
        assert_eq!(&m, lp.basic());
        assert_eq!(lp.len(), 2);
    }

    #[test]
    fn lubin_tate_indec_is_basic() {
        let d = datum(r#"{"type":"GL4","mu":[1,0,0,0]}"#);
        let p = enumerate_bg_mu(&d).unwrap();
        assert_eq!(p.indec(), p.basic());
        let d = datum(r#"{"type":"GL4","mu":[2,0,0,0]}"#);
        let p = enumerate_bg_mu(&d).unwrap();
        // the polygon through (1,1) and (4,2) meets the Hodge polygon only at its endpoints
        assert_eq!(p.indec().nu, RatVec::from_fracs(&[(1, 1), (1, 3), (1, 3), (1, 3)]));
        assert_ne!(p.indec(), p.basic());
    }
}
