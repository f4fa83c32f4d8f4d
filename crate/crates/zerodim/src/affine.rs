//! Extended affine Weyl group `X_* ⋊ W` acting on lattice coordinates.

use std::collections::HashSet;
use std::fmt;

use crate::rootsys::{dot_i, RootDatum, WeylElement};

/// Element `t^λ w` acting by `v -> λ + w v`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AffineWeylElement {
    pub translation: Vec<i64>,
    pub finite: WeylElement,
}

impl fmt::Debug for AffineWeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t^{:?}·{:?}", self.translation, self.finite)
    }
}

impl AffineWeylElement {
    pub fn identity(d: usize) -> Self {
        AffineWeylElement { translation: vec![0; d], finite: WeylElement::identity(d) }
    }

    pub fn translation(lambda: Vec<i64>) -> Self {
        let d = lambda.len();
        AffineWeylElement { translation: lambda, finite: WeylElement::identity(d) }
    }

    pub fn from_finite(w: WeylElement) -> Self {
        AffineWeylElement { translation: vec![0; w.dim()], finite: w }
    }

    pub fn new(translation: Vec<i64>, finite: WeylElement) -> Self {
        AffineWeylElement { translation, finite }
    }

    pub fn is_identity(&self) -> bool {
        self.translation.iter().all(|&x| x == 0) && self.finite.is_identity()
    }

    /// `(λ, w)(μ, v) = (λ + wμ, wv)`.
    pub fn compose(&self, other: &AffineWeylElement) -> AffineWeylElement {
        let wm = self.finite.apply_int(&other.translation);
        AffineWeylElement {
            translation: self.translation.iter().zip(&wm).map(|(a, b)| a + b).collect(),
            finite: self.finite.compose(&other.finite),
        }
    }

    pub fn inverse(&self) -> AffineWeylElement {
        let winv = self.finite.inverse();
        let t = winv.apply_int(&self.translation);
        AffineWeylElement { translation: t.into_iter().map(|x| -x).collect(), finite: winv }
    }

    pub fn pow(&self, k: usize) -> AffineWeylElement {
        let mut acc = AffineWeylElement::identity(self.translation.len());
        for _ in 0..k {
            acc = acc.compose(self);
        }
        acc
    }

    /// Image under a lattice automorphism `p` (with inverse `pinv`), e.g. the Frobenius `σ₀`.
    pub fn transform(&self, p: &[i64], pinv: &[i64]) -> AffineWeylElement {
        let d = self.translation.len();
        let t = (0..d)
            .map(|i| (0..d).map(|j| p[i * d + j] * self.translation[j]).sum())
            .collect();
        AffineWeylElement { translation: t, finite: self.finite.conjugate_by(p, pinv) }
    }

    /// Length via the Iwahori–Matsumoto formula.
    pub fn length(&self, rd: &RootDatum) -> usize {
        let mut total = 0i64;
        for r in rd.positive_roots() {
            let k = dot_i(&self.translation, &r.root);
            let back = self.finite.act_functional_inv(&r.root);
            if rd.is_positive_root(&back) {
                total += k.abs();
            } else {
                total += (k - 1).abs();
            }
        }
        total as usize
    }
}

/// Affine simple reflections: the finite ones `s_1..s_r` followed by one `s_0 = t^{θ^∨} s_θ` per block.
pub fn affine_simple_reflections(rd: &RootDatum) -> Vec<AffineWeylElement> {
    let mut out: Vec<AffineWeylElement> = (0..rd.rank())
        .map(|i| AffineWeylElement::from_finite(rd.simple_reflection(i)))
        .collect();
    for theta in rd.highest_roots() {
        out.push(AffineWeylElement::new(theta.coroot.clone(), rd.reflection(&theta)));
    }
    out
}

/// Writes `x = ω · s_{a_k} ⋯ s_{a_1}` with `ℓ(ω) = 0`; returns `(ω, [a_k, ..., a_1])`.
pub fn reduced_decomposition(
    rd: &RootDatum,
    simples: &[AffineWeylElement],
    x: &AffineWeylElement,
) -> (AffineWeylElement, Vec<usize>) {
    let mut cur = x.clone();
    let mut len = cur.length(rd);
    let mut word = Vec::new();
    'outer: while len > 0 {
        for (k, s) in simples.iter().enumerate() {
            let y = cur.compose(s);
            let ly = y.length(rd);
            if ly < len {
                cur = y;
                len = ly;
                word.push(k);
                continue 'outer;
            }
        }
        unreachable!("positive length element without a descent");
    }
    word.reverse();
    (cur, word)
}

/// Bruhat lower ideal `{y : y ≤ x}`.
pub fn lower_ideal(
    rd: &RootDatum,
    simples: &[AffineWeylElement],
    x: &AffineWeylElement,
) -> HashSet<AffineWeylElement> {
    let (omega, word) = reduced_decomposition(rd, simples, x);
    let mut ideal: HashSet<AffineWeylElement> = HashSet::from([omega]);
    for k in word {
        let extra: Vec<AffineWeylElement> = ideal.iter().map(|y| y.compose(&simples[k])).collect();
        ideal.extend(extra);
    }
    ideal
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{CartanType, RootDatum};

    #[test]
    fn simple_reflections_have_length_one() {
        for (ty, n) in [(CartanType::A, 3), (CartanType::B, 3), (CartanType::G, 2), (CartanType::D, 4)] {
            let rd = RootDatum::irreducible(ty, n).unwrap();
            for s in affine_simple_reflections(&rd) {
                assert_eq!(s.length(&rd), 1);
                assert!(s.compose(&s).is_identity());
            }
        }
    }

    #[test]
    fn gl2_admissible_set_has_three_elements() {
        let rd = RootDatum::gl(2).unwrap();
        let simples = affine_simple_reflections(&rd);
        let mut adm = HashSet::new();
        for lam in [vec![1, 0], vec![0, 1]] {
            adm.extend(lower_ideal(&rd, &simples, &AffineWeylElement::translation(lam)));
        }
        assert_eq!(adm.len(), 3);
    }

    #[test]
    fn inverse_and_length_are_compatible() {
        let rd = RootDatum::irreducible(CartanType::C, 2).unwrap();
        let simples = affine_simple_reflections(&rd);
        let x = simples[0].compose(&simples[2]).compose(&simples[0]).compose(&simples[1]);
        assert_eq!(x.length(&rd), 4);
        assert_eq!(x.inverse().length(&rd), 4);
        assert!(x.compose(&x.inverse()).is_identity());
    }
}
