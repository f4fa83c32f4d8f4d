//! σ-conjugacy classes as `(ν, κ)` pairs and the finite ranked poset `B(G, {μ})`.
//!
//! Newton vectors are stored on the group side (`ν ≤ μ^◇`). The Kottwitz
//! invariant is stored on the quasi-split side, `κ(b) + κ(τ)`, so that every
//! class of `B(G, {μ})` carries [`CoxeterDatum::kappa_target`].

use std::collections::{HashMap, HashSet};
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::affine::{affine_simple_reflections, lower_ideal, AffineWeylElement};
use crate::datum::{CoxeterDatum, KappaValue};
use crate::error::{Error, Result};
use crate::linalg::{inverse, mat_vec};
use crate::rat::{ceil, floor, frac, is_int, qi, RatVec, Q};
use crate::rootsys::weyl_orbit;

/// A σ-conjugacy class: dominant σ₀-invariant Newton vector and Kottwitz invariant.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SigmaClass {
    pub nu: RatVec,
    pub kappa: KappaValue,
}

impl fmt::Debug for SigmaClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} | {}]", self.nu, self.kappa)
    }
}

impl SigmaClass {
    pub fn new(nu: RatVec, kappa: KappaValue) -> Self {
        SigmaClass { nu, kappa }
    }
}

/// `ν` on the quasi-split side: `ν + ν_τ`.
pub fn nu_tilde(datum: &CoxeterDatum, c: &SigmaClass) -> RatVec {
    &c.nu + &datum.nu_tau()
}

/// `κ₁ = κ₂` and `ν₁ ≤ ν₂`.
pub fn leq(datum: &CoxeterDatum, c1: &SigmaClass, c2: &SigmaClass) -> bool {
    c1.kappa == c2.kappa && datum.roots().cone_leq(&c1.nu, &c2.nu)
}

/// Whether `<λ_ref − ν, ω_o>` is an integer, per σ₀-orbit.
pub fn lattice_orbits(datum: &CoxeterDatum, c: &SigmaClass) -> Vec<bool> {
    let diff = &datum.lambda_ref() - &c.nu;
    datum
        .sigma0_orbits()
        .iter()
        .map(|o| is_int(&datum.pair_orbit(&diff, o)))
        .collect()
}

/// Number of σ₀-orbits where `ν` is not at a lattice height.
pub fn defect(datum: &CoxeterDatum, c: &SigmaClass) -> usize {
    lattice_orbits(datum, c).iter().filter(|&&b| !b).count()
}

pub fn is_basic(datum: &CoxeterDatum, c: &SigmaClass) -> bool {
    datum.roots().is_central(&c.nu)
}

pub fn is_superbasic(datum: &CoxeterDatum, c: &SigmaClass) -> bool {
    defect(datum, c) == datum.sigma0_orbits().len()
}

/// Best integral approximation `λ([b])`, described by its orbit pairings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralApprox {
    /// A representative in `V` with the same central part as `ν`.
    pub vector: RatVec,
    /// `<λ([b]), ω_o>` per σ₀-orbit.
    pub pairings: Vec<Q>,
}

pub fn best_integral_approx(datum: &CoxeterDatum, c: &SigmaClass) -> IntegralApprox {
    let rd = datum.roots();
    let lam = datum.lambda_ref();
    let z = rd.central_part(&c.nu);
    let mut coords = vec![Q::zero(); rd.rank()];
    let mut pairings = Vec::new();
    for o in datum.sigma0_orbits() {
        let nv = datum.pair_orbit(&c.nu, o);
        let off = frac(&datum.pair_orbit(&lam, o));
        // largest a ≡ off (mod 1) with a ≤ nv
        let a = Q::from_integer(floor(&(&nv - &off))) + &off;
        let share = (&a - &datum.pair_orbit(&z, o)) / qi(o.len() as i64);
        for &i in o {
            coords[i] = share.clone();
        }
        pairings.push(a);
    }
    IntegralApprox { vector: &z + &rd.from_coroot_coords(&coords), pairings }
}

/// `length([b₁],[b₂])` by the ceiling formula; requires `c₁ ≤ c₂`.
pub fn length(datum: &CoxeterDatum, c1: &SigmaClass, c2: &SigmaClass) -> Result<usize> {
    if !leq(datum, c1, c2) {
        return Err(Error::NotComparable);
    }
    Ok(length_with_reference(datum, &datum.lambda_ref(), c1, c2))
}

/// Ceiling formula with an explicit reference coweight (any `λ` in the right κ-coset).
pub fn length_with_reference(datum: &CoxeterDatum, lam: &RatVec, c1: &SigmaClass, c2: &SigmaClass) -> usize {
    let d1 = lam - &c1.nu;
    let d2 = lam - &c2.nu;
    let total: num_bigint::BigInt = datum
        .sigma0_orbits()
        .iter()
        .map(|o| ceil(&datum.pair_orbit(&d1, o)) - ceil(&datum.pair_orbit(&d2, o)))
        .sum();
    crate::rat::to_i64(&total) as usize
}

/// `<ν₂ − ν₁, ρ> + ½ def(b₁) − ½ def(b₂)`.
pub fn length_closed_form(datum: &CoxeterDatum, c1: &SigmaClass, c2: &SigmaClass) -> Q {
    let rd = datum.roots();
    rd.pair_rho(&(&c2.nu - &c1.nu)) + Q::new(1.into(), 2.into()) * qi(defect(datum, c1) as i64)
        - Q::new(1.into(), 2.into()) * qi(defect(datum, c2) as i64)
}

/// Newton point and Kottwitz invariant of `ẇ` under `σ = Ad(τ)∘σ₀`.
pub fn newton_point(datum: &CoxeterDatum, w: &AffineWeylElement) -> SigmaClass {
    let rd = datum.roots();
    let (p, pinv) = datum.frobenius_matrix();
    let x = w.compose(&datum.tau().element);
    let m = datum.frobenius_order();
    let mut prod = AffineWeylElement::identity(rd.dim());
    let mut cur = x.clone();
    for _ in 0..m {
        prod = prod.compose(&cur);
        cur = cur.transform(p, pinv);
    }
    let mut power = prod.clone();
    let mut k = 1i64;
    while !power.finite.is_identity() {
        power = power.compose(&prod);
        k += 1;
    }
    let eta = RatVec::from_ints(&power.translation).scale(&Q::new(1.into(), (k * m as i64).into()));
    let (nu_h, _) = rd.dominantize(&eta);
    SigmaClass { nu: &nu_h - &datum.nu_tau(), kappa: datum.kappa_of_int(&x.translation) }
}

/// `Adm({μ}) = { w : w ≤ t^{x(μ)} for some x ∈ W }`.
pub fn admissible_set(datum: &CoxeterDatum) -> Vec<AffineWeylElement> {
    let rd = datum.roots();
    let simples = affine_simple_reflections(rd);
    let mut adm: HashSet<AffineWeylElement> = HashSet::new();
    for lam in weyl_orbit(rd, datum.mu()) {
        let t = AffineWeylElement::translation(lam.to_ints());
        if adm.contains(&t) {
            continue;
        }
        adm.extend(lower_ideal(rd, &simples, &t));
    }
    let mut out: Vec<AffineWeylElement> = adm.into_iter().collect();
    out.sort_by(|a, b| (&a.translation, a.finite.matrix()).cmp(&(&b.translation, b.finite.matrix())));
    out
}

/// `{ [ẇ] : w ∈ Adm({μ}) }`, sorted.
pub fn enumerate_oracle(datum: &CoxeterDatum) -> Vec<SigmaClass> {
    let set: HashSet<SigmaClass> = admissible_set(datum).iter().map(|w| newton_point(datum, w)).collect();
    let mut out: Vec<SigmaClass> = set.into_iter().collect();
    sort_classes(datum, &mut out);
    out
}

fn sort_classes(datum: &CoxeterDatum, v: &mut [SigmaClass]) {
    let rd = datum.roots();
    v.sort_by(|a, b| (rd.pair_rho(&a.nu), &a.nu).cmp(&(rd.pair_rho(&b.nu), &b.nu)));
}

/// Linear constraint `Σ coef_o x_o + constant` on the orbit variables.
struct Linear {
    coef: Vec<Q>,
    constant: Q,
}

impl Linear {
    fn eval(&self, x: &[Q]) -> Q {
        self.coef.iter().zip(x).map(|(a, b)| a * b).sum::<Q>() + &self.constant
    }

    /// Upper bound given the first `k` variables fixed and the rest in `[lo, hi]`.
    fn max_bound(&self, x: &[Q], k: usize, lo: &[Q], hi: &[Q]) -> Q {
        let mut acc = self.constant.clone();
        for (o, c) in self.coef.iter().enumerate() {
            if o < k {
                acc += c * &x[o];
            } else if c.is_positive() {
                acc += c * &hi[o];
            } else {
                acc += c * &lo[o];
            }
        }
        acc
    }

    fn min_bound(&self, x: &[Q], k: usize, lo: &[Q], hi: &[Q]) -> Q {
        let mut acc = self.constant.clone();
        for (o, c) in self.coef.iter().enumerate() {
            if o < k {
                acc += c * &x[o];
            } else if c.is_positive() {
                acc += c * &lo[o];
            } else {
                acc += c * &hi[o];
            }
        }
        acc
    }
}

/// Candidate enumeration: for each σ₀-stable `J`, Newton vectors with `I(ν) = J`
/// central in `M_J` and at lattice heights on the orbits outside `J`.
pub fn enumerate_candidates(datum: &CoxeterDatum) -> Vec<SigmaClass> {
    let rd = datum.roots();
    let r = rd.rank();
    let orbits = datum.sigma0_orbits();
    let z = rd.central_part(datum.mu());
    let mu_d = datum.mu_diamond();
    let cmu = rd.coroot_coords(&mu_d);
    let lam = datum.lambda_ref();
    let kappa = datum.kappa_target();
    let cartan = rd.cartan();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << orbits.len()) {
        let in_j: Vec<bool> = {
            let mut v = vec![false; r];
            for (k, o) in orbits.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    for &i in o {
                        v[i] = true;
                    }
                }
            }
            v
        };
        let jl: Vec<usize> = (0..r).filter(|&i| in_j[i]).collect();
        let free: Vec<usize> = (0..orbits.len()).filter(|&k| mask >> k & 1 == 0).collect();
        let nf = free.len();
        // c_i as linear forms in the orbit variables x_f (f indexes `free`)
        let mut cform: Vec<Vec<Q>> = vec![vec![Q::zero(); nf]; r];
        for (f, &k) in free.iter().enumerate() {
            let share = Q::one() / qi(orbits[k].len() as i64);
            for &i in &orbits[k] {
                cform[i][f] = share.clone();
            }
        }
        if !jl.is_empty() {
            // A_JJ^T c_J = -(A^T)_{JF} c_F
            let ajj: Vec<Vec<Q>> =
                jl.iter().map(|&a| jl.iter().map(|&b| qi(cartan[b][a])).collect()).collect();
            let inv = inverse(&ajj).expect("Levi Cartan matrix is invertible");
            for f in 0..nf {
                let rhs: Vec<Q> = jl
                    .iter()
                    .map(|&j| {
                        -(0..r)
                            .filter(|&i| !in_j[i])
                            .map(|i| qi(cartan[i][j]) * &cform[i][f])
                            .sum::<Q>()
                    })
                    .collect();
                let sol = mat_vec(&inv, &rhs);
                for (t, &j) in jl.iter().enumerate() {
                    cform[j][f] = sol[t].clone();
                }
            }
        }
        // constraints: strict positivity g_i > 0 for i outside J, and c_j ≤ c_j(μ^◇) on J
        let mut positive = Vec::new();
        for i in (0..r).filter(|&i| !in_j[i]) {
            let coef = (0..nf).map(|f| (0..r).map(|k| &cform[k][f] * qi(cartan[k][i])).sum()).collect();
            positive.push(Linear { coef, constant: Q::zero() });
        }
        let mut bounded = Vec::new();
        for &j in &jl {
            bounded.push(Linear { coef: cform[j].clone(), constant: -cmu[j].clone() });
        }
        let mut lo = Vec::new();
        let mut hi = Vec::new();
        for &k in &free {
            let o = &orbits[k];
            let off = frac(&datum.pair_orbit(&(&lam - &z), o));
            let top = datum.pair_orbit(&(&mu_d - &z), o);
            lo.push(off);
            hi.push(top);
        }
        if (0..nf).any(|f| lo[f] > hi[f]) {
            continue;
        }
        let mut x: Vec<Q> = lo.clone();
        search(&mut x, 0, &lo, &hi, &positive, &bounded, &mut |x| {
            let c: Vec<Q> = (0..r)
                .map(|i| cform[i].iter().zip(x).map(|(a, b)| a * b).sum())
                .collect();
            let nu = &z + &rd.from_coroot_coords(&c);
            out.push(SigmaClass { nu, kappa: kappa.clone() });
        });
    }
    sort_classes(datum, &mut out);
    out.dedup();
    out
}

fn search(
    x: &mut Vec<Q>,
    k: usize,
    lo: &[Q],
    hi: &[Q],
    positive: &[Linear],
    bounded: &[Linear],
    emit: &mut dyn FnMut(&[Q]),
) {
    // prune on interval bounds
    if positive.iter().any(|g| !g.max_bound(x, k, lo, hi).is_positive()) {
        return;
    }
    if bounded.iter().any(|g| g.min_bound(x, k, lo, hi).is_positive()) {
        return;
    }
    if k == x.len() {
        if positive.iter().all(|g| g.eval(x).is_positive())
            && bounded.iter().all(|g| !g.eval(x).is_positive())
        {
            emit(x);
        }
        return;
    }
    let mut v = lo[k].clone();
    while v <= hi[k] {
        x[k] = v.clone();
        search(x, k + 1, lo, hi, positive, bounded, emit);
        v += Q::one();
    }
    x[k] = lo[k].clone();
}

/// The finite ranked poset `B(G, {μ})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BgMuPoset {
    elements: Vec<SigmaClass>,
    basic: usize,
    max: usize,
    indec: usize,
}

impl BgMuPoset {
    pub fn elements(&self) -> &[SigmaClass] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn basic(&self) -> &SigmaClass {
        &self.elements[self.basic]
    }

    pub fn max(&self) -> &SigmaClass {
        &self.elements[self.max]
    }

    pub fn indec(&self) -> &SigmaClass {
        &self.elements[self.indec]
    }

    pub fn index_of(&self, c: &SigmaClass) -> Option<usize> {
        self.elements.iter().position(|e| e == c)
    }

    pub fn contains(&self, c: &SigmaClass) -> bool {
        self.index_of(c).is_some()
    }

    /// Finds the element with the given Newton vector.
    pub fn by_nu(&self, nu: &RatVec) -> Option<&SigmaClass> {
        self.elements.iter().find(|e| &e.nu == nu)
    }

    /// Strict order relation as an adjacency matrix.
    pub fn less_than(&self, datum: &CoxeterDatum) -> Vec<Vec<bool>> {
        let n = self.len();
        (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| a != b && leq(datum, &self.elements[a], &self.elements[b]))
                    .collect()
            })
            .collect()
    }

    /// Cover relations `(a, b)` with `a ⋖ b`.
    pub fn covers(&self, datum: &CoxeterDatum) -> Vec<(usize, usize)> {
        let lt = self.less_than(datum);
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if lt[a][b] && !(0..n).any(|m| lt[a][m] && lt[m][b]) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Minimal and maximal number of cover steps between every comparable pair.
    pub fn chain_lengths(&self, datum: &CoxeterDatum) -> HashMap<(usize, usize), (usize, usize)> {
        let n = self.len();
        let covers = self.covers(datum);
        let mut succ = vec![Vec::new(); n];
        for &(a, b) in &covers {
            succ[a].push(b);
        }
        // elements are sorted by <ν, ρ>, which is a linear extension
        let mut out = HashMap::new();
        for a in 0..n {
            let mut best: Vec<Option<(usize, usize)>> = vec![None; n];
            best[a] = Some((0, 0));
            for u in a..n {
                if let Some((lo, hi)) = best[u] {
                    for &v in &succ[u] {
                        best[v] = Some(match best[v] {
                            None => (lo + 1, hi + 1),
                            Some((l, h)) => (l.min(lo + 1), h.max(hi + 1)),
                        });
                    }
                }
            }
            for (b, v) in best.into_iter().enumerate() {
                if let Some(v) = v {
                    out.insert((a, b), v);
                }
            }
        }
        out
    }
}

fn build_poset(datum: &CoxeterDatum, elements: Vec<SigmaClass>) -> Result<BgMuPoset> {
    if elements.is_empty() {
        return Err(Error::Internal("empty B(G, mu)".into()));
    }
    let find_extreme = |is_min: bool| -> Result<usize> {
        (0..elements.len())
            .find(|&a| {
                elements.iter().all(|e| {
                    if is_min {
                        leq(datum, &elements[a], e)
                    } else {
                        leq(datum, e, &elements[a])
                    }
                })
            })
            .ok_or_else(|| Error::Internal("B(G, mu) has no unique extreme element".into()))
    };
    let basic = find_extreme(true)?;
    let max = find_extreme(false)?;
    let mut poset = BgMuPoset { elements, basic, max, indec: basic };
    poset.indec = crate::hodgenewton::indec_index(datum, &poset)?;
    Ok(poset)
}

/// `B(G, {μ})` by candidate enumeration.
pub fn enumerate_bg_mu(datum: &CoxeterDatum) -> Result<BgMuPoset> {
    build_poset(datum, enumerate_candidates(datum))
}

/// `B(G, {μ})` as the image of the admissible set.
pub fn enumerate_bg_mu_oracle(datum: &CoxeterDatum) -> Result<BgMuPoset> {
    build_poset(datum, enumerate_oracle(datum))
}
