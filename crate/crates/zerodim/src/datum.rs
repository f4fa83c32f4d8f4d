//! Coxeter data `(roots, σ₀, τ, μ)`, σ₀-orbits, averages and the Kottwitz map.

use std::fmt;

use num_traits::Zero;
use serde::Deserialize;

use crate::affine::{affine_simple_reflections, AffineWeylElement};
use crate::error::{Error, Result};
use crate::linalg::smith_left;
use crate::rat::{qi, RatVec, Q};
use crate::rootsys::{parse_type, CartanType, RootDatum};

/// Canonical coordinates of an element of `π₁(G)_Γ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct KappaValue(pub Vec<i64>);

impl KappaValue {
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }
}

impl fmt::Display for KappaValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "{}", parts.join(":"))
    }
}

/// The group `X_* / (Q^∨ + (σ₀ − 1) X_*)` in Smith coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KappaGroup {
    rows: Vec<Vec<i128>>,
    moduli: Vec<i128>,
}

impl KappaGroup {
    fn new(rd: &RootDatum, frob: &[i64]) -> Self {
        let d = rd.dim();
        // generators as columns
        let mut gens: Vec<Vec<i64>> = (0..rd.rank()).map(|i| rd.simple_coroot(i).to_vec()).collect();
        for k in 0..d {
            gens.push((0..d).map(|i| frob[i * d + k] - i64::from(i == k)).collect());
        }
        let a: Vec<Vec<i64>> = (0..d).map(|i| gens.iter().map(|g| g[i]).collect()).collect();
        let (u, diag) = smith_left(&a);
        let mut rows = Vec::new();
        let mut moduli = Vec::new();
        for (row, m) in u.into_iter().zip(diag) {
            if m != 1 {
                rows.push(row);
                moduli.push(m);
            }
        }
        KappaGroup { rows, moduli }
    }

    pub fn moduli(&self) -> &[i128] {
        &self.moduli
    }

    pub fn kappa(&self, lam: &[i64]) -> KappaValue {
        KappaValue(
            self.rows
                .iter()
                .zip(&self.moduli)
                .map(|(row, &m)| {
                    let x: i128 = row.iter().zip(lam).map(|(a, &b)| a * b as i128).sum();
                    (if m == 0 { x } else { x.rem_euclid(m) }) as i64
                })
                .collect(),
        )
    }

    pub fn add(&self, a: &KappaValue, b: &KappaValue) -> KappaValue {
        KappaValue(
            a.0.iter()
                .zip(&b.0)
                .zip(&self.moduli)
                .map(|((x, y), &m)| if m == 0 { x + y } else { (x + y).rem_euclid(m as i64) })
                .collect(),
        )
    }

    pub fn neg(&self, a: &KappaValue) -> KappaValue {
        KappaValue(
            a.0.iter()
                .zip(&self.moduli)
                .map(|(x, &m)| if m == 0 { -x } else { (-x).rem_euclid(m as i64) })
                .collect(),
        )
    }
}

/// A length-zero element of the extended affine Weyl group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OmegaElement {
    pub element: AffineWeylElement,
    /// One-based minuscule node labels (or the rotation amount for `GL_n`); empty for the identity.
    pub nodes: Vec<usize>,
}

impl OmegaElement {
    pub fn identity(d: usize) -> Self {
        OmegaElement { element: AffineWeylElement::identity(d), nodes: Vec::new() }
    }

    pub fn is_identity(&self) -> bool {
        self.element.is_identity()
    }

    pub fn translation(&self) -> &[i64] {
        &self.element.translation
    }

    pub fn label(&self) -> String {
        if self.nodes.is_empty() {
            "id".into()
        } else {
            let parts: Vec<String> = self.nodes.iter().map(|k| format!("tau{k}")).collect();
            parts.join("*")
        }
    }
}

/// `τ_i = t^{ω_i^∨} w_0^{S_b − {i}} w_0^{S_b}` for a minuscule node `i` of block `S_b`.
pub fn omega_for_node(rd: &RootDatum, node: usize) -> AffineWeylElement {
    let lam = rd.fundamental_coweight(node).to_ints();
    AffineWeylElement::new(lam, rd.omega_finite_part(node))
}

/// Minuscule nodes (zero-based) of a block, in increasing label order.
pub fn minuscule_nodes(rd: &RootDatum, block: usize) -> Vec<usize> {
    let theta = &rd.highest_roots()[block];
    let coeff = rd.root_coefficients(&theta.root);
    let mut out: Vec<usize> =
        rd.blocks()[block].labels.iter().copied().filter(|&i| coeff[i] == 1).collect();
    out.sort();
    out
}

/// All of `Ω` for an adjoint datum (product over blocks), identity first.
pub fn omega_group(rd: &RootDatum) -> Vec<OmegaElement> {
    let d = rd.dim();
    let mut out = vec![OmegaElement::identity(d)];
    if rd.gl_n().is_some() {
        let n = d;
        for i in 1..n {
            out.push(OmegaElement { element: omega_for_node(rd, i - 1), nodes: vec![i] });
        }
        return out;
    }
    for b in 0..rd.blocks().len() {
        let nodes = minuscule_nodes(rd, b);
        let mut next = Vec::new();
        for o in &out {
            next.push(o.clone());
            for &k in &nodes {
                let mut ns = o.nodes.clone();
                ns.push(k + 1);
                next.push(OmegaElement { element: o.element.compose(&omega_for_node(rd, k)), nodes: ns });
            }
        }
        out = next;
    }
    out
}

/// Coxeter datum: root datum, Frobenius `σ₀`, twist `τ ∈ Ω`, dominant `μ`.
#[derive(Clone, Debug)]
pub struct CoxeterDatum {
    roots: RootDatum,
    sigma0: Vec<usize>,
    frob: Vec<i64>,
    frob_inv: Vec<i64>,
    frob_order: usize,
    tau: OmegaElement,
    mu: RatVec,
    kappa_group: KappaGroup,
    orbits: Vec<Vec<usize>>,
}

impl CoxeterDatum {
    pub fn new(roots: RootDatum, sigma0: Vec<usize>, tau: OmegaElement, mu: RatVec) -> Result<Self> {
        let r = roots.rank();
        let d = roots.dim();
        let mut sorted = sigma0.clone();
        sorted.sort();
        if sorted != (0..r).collect::<Vec<_>>() {
            return Err(Error::InvalidDatum("sigma0 is not a permutation of S".into()));
        }
        let c = roots.cartan();
        for i in 0..r {
            for j in 0..r {
                if c[sigma0[i]][sigma0[j]] != c[i][j] {
                    return Err(Error::InvalidDatum("sigma0 is not a diagram automorphism".into()));
                }
            }
        }
        if roots.gl_n().is_some() && sigma0.iter().enumerate().any(|(i, &j)| i != j) {
            return Err(Error::Unsupported("GL_n data must be split (sigma0 = id)".into()));
        }
        let mut frob = vec![0i64; d * d];
        if roots.gl_n().is_some() {
            for k in 0..d {
                frob[k * d + k] = 1;
            }
        } else {
            for k in 0..d {
                frob[sigma0[k] * d + k] = 1;
            }
        }
        let frob_inv: Vec<i64> = (0..d * d).map(|x| frob[(x % d) * d + x / d]).collect();
        let mut frob_order = 1;
        let mut p = sigma0.clone();
        while p.iter().enumerate().any(|(i, &j)| i != j) {
            p = p.iter().map(|&j| sigma0[j]).collect();
            frob_order += 1;
        }
        if mu.len() != d {
            return Err(Error::DimensionMismatch { expected: d, got: mu.len() });
        }
        if !mu.is_integral() {
            return Err(Error::NotInLattice(mu.to_string()));
        }
        if !roots.is_dominant(&mu) {
            return Err(Error::NotDominant(mu.to_string()));
        }
        if tau.element.translation.len() != d || tau.element.length(&roots) != 0 {
            return Err(Error::InvalidDatum("tau is not a length-zero element".into()));
        }
        let kappa_group = KappaGroup::new(&roots, &frob);
        let mut seen = vec![false; r];
        let mut orbits = Vec::new();
        for s in 0..r {
            if seen[s] {
                continue;
            }
            let mut o = vec![s];
            seen[s] = true;
            let mut k = sigma0[s];
            while k != s {
                seen[k] = true;
                o.push(k);
                k = sigma0[k];
            }
            o.sort();
            orbits.push(o);
        }
        let datum = CoxeterDatum { roots, sigma0, frob, frob_inv, frob_order, tau, mu, kappa_group, orbits };
        datum.delta_permutation()?;
        Ok(datum)
    }

    /// Quasi-split datum with `τ = 1`.
    pub fn quasi_split(roots: RootDatum, sigma0: Vec<usize>, mu: RatVec) -> Result<Self> {
        let d = roots.dim();
        Self::new(roots, sigma0, OmegaElement::identity(d), mu)
    }

    pub fn roots(&self) -> &RootDatum {
        &self.roots
    }

    pub fn sigma0(&self) -> &[usize] {
        &self.sigma0
    }

    pub fn tau(&self) -> &OmegaElement {
        &self.tau
    }

    pub fn mu(&self) -> &RatVec {
        &self.mu
    }

    pub fn rank(&self) -> usize {
        self.roots.rank()
    }

    pub fn dim(&self) -> usize {
        self.roots.dim()
    }

    pub fn kappa_group(&self) -> &KappaGroup {
        &self.kappa_group
    }

    pub fn frobenius_matrix(&self) -> (&[i64], &[i64]) {
        (&self.frob, &self.frob_inv)
    }

    pub fn frobenius_order(&self) -> usize {
        self.frob_order
    }

    pub fn is_split(&self) -> bool {
        self.sigma0.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// σ₀-orbits on `S`, each sorted, ordered by smallest element.
    pub fn sigma0_orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    pub fn frobenius(&self, v: &RatVec) -> RatVec {
        let d = self.dim();
        RatVec(
            (0..d)
                .map(|i| {
                    (0..d)
                        .filter(|&j| self.frob[i * d + j] != 0)
                        .map(|j| &v.0[j] * qi(self.frob[i * d + j]))
                        .sum()
                })
                .collect(),
        )
    }

    /// Average of the σ₀-orbit of `v`.
    pub fn diamond(&self, v: &RatVec) -> RatVec {
        let mut acc = RatVec::zeros(self.dim());
        let mut cur = v.clone();
        for _ in 0..self.frob_order {
            acc = &acc + &cur;
            cur = self.frobenius(&cur);
        }
        acc.scale(&Q::new(1.into(), (self.frob_order as i64).into()))
    }

    pub fn mu_diamond(&self) -> RatVec {
        self.diamond(&self.mu)
    }

    /// `ω_o = Σ_{i∈o} ω_i`.
    pub fn omega_orbit_weight(&self, o: &[usize]) -> RatVec {
        let mut acc = RatVec::zeros(self.dim());
        for &i in o {
            acc = &acc + self.roots.fundamental_weight(i);
        }
        acc
    }

    /// `<v, ω_o>`.
    pub fn pair_orbit(&self, v: &RatVec, o: &[usize]) -> Q {
        o.iter().map(|&i| self.roots.pair_weight(v, i)).sum()
    }

    pub fn kappa_of(&self, lam: &RatVec) -> Result<KappaValue> {
        if lam.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), got: lam.len() });
        }
        if !lam.is_integral() {
            return Err(Error::NotInLattice(lam.to_string()));
        }
        Ok(self.kappa_group.kappa(&lam.to_ints()))
    }

    pub fn kappa_of_int(&self, lam: &[i64]) -> KappaValue {
        self.kappa_group.kappa(lam)
    }

    pub fn kappa_tau(&self) -> KappaValue {
        self.kappa_of_int(self.tau.translation())
    }

    /// `κ(μ) + κ(τ)`: the Kottwitz invariant of every class of `B(G, {μ})`, read on the quasi-split side.
    pub fn kappa_target(&self) -> KappaValue {
        let km = self.kappa_of_int(&self.mu.to_ints());
        self.kappa_group.add(&km, &self.kappa_tau())
    }

    /// Whether the inner twist is non-trivial, i.e. `κ(τ) ≠ 0` in the coinvariants.
    pub fn is_quasi_split(&self) -> bool {
        self.kappa_tau().is_zero()
    }

    /// Central part of the translation of `τ` (the Newton point of `τ`).
    pub fn nu_tau(&self) -> RatVec {
        self.roots.central_part(&RatVec::from_ints(self.tau.translation()))
    }

    /// `σ(0)`: the translation of `τ`, normalized to have no central part.
    pub fn sigma_zero_point(&self) -> RatVec {
        &RatVec::from_ints(self.tau.translation()) - &self.nu_tau()
    }

    /// Reference coweight `μ + σ(0)` used for integrality tests.
    pub fn lambda_ref(&self) -> RatVec {
        &self.mu + &self.sigma_zero_point()
    }

    /// `δ = Ad(τ)∘σ₀` as a permutation of the affine simple reflections
    /// (finite ones `0..r`, then one affine node per block).
    pub fn delta_permutation(&self) -> Result<Vec<usize>> {
        let simples = affine_simple_reflections(&self.roots);
        let t = &self.tau.element;
        let tinv = t.inverse();
        simples
            .iter()
            .map(|s| {
                let img = t.compose(&s.transform(&self.frob, &self.frob_inv)).compose(&tinv);
                simples
                    .iter()
                    .position(|x| *x == img)
                    .ok_or_else(|| Error::InvalidDatum("Ad(tau)∘sigma0 does not preserve the base alcove".into()))
            })
            .collect()
    }

    /// Same datum with another twist; the caller is responsible for validity.
    pub(crate) fn clone_with_tau(&self, tau: OmegaElement) -> Self {
        let mut d = self.clone();
        d.tau = tau;
        d
    }

    /// Adjoint datum of the same group (identity for adjoint input).
    pub fn to_adjoint(&self) -> Result<CoxeterDatum> {
        if self.roots.is_adjoint() {
            return Ok(self.clone());
        }
        let labels: Vec<usize> = (0..self.rank()).collect();
        let rd = RootDatum::from_cartan(self.roots.cartan());
        let tau = transport(&self.roots, &labels, &rd, &self.tau.element, true)?;
        let mu = project_coweight(&self.roots, &labels, &self.mu);
        CoxeterDatum::new(rd, self.sigma0.clone(), OmegaElement { element: tau, nodes: self.tau.nodes.clone() }, mu)
    }

    /// The sub-datum on a σ₀-stable union of blocks (adjoint input only).
    pub fn restrict_to_blocks(&self, blocks: &[usize]) -> Result<CoxeterDatum> {
        let mut labels: Vec<usize> = blocks
            .iter()
            .flat_map(|&b| self.roots.blocks()[b].labels.iter().copied())
            .collect();
        labels.sort();
        self.restrict_to_labels(&labels, false)
    }

    /// Sub-datum on the labels `J` (kept in increasing order), with `τ` and `μ` projected.
    pub(crate) fn restrict_to_labels(&self, labels: &[usize], strict: bool) -> Result<CoxeterDatum> {
        if labels.iter().any(|&j| !labels.contains(&self.sigma0[j])) {
            return Err(Error::NotSigmaStable(labels.to_vec()));
        }
        let rd = RootDatum::from_cartan(&self.roots.levi_cartan(labels));
        let sigma: Vec<usize> = labels
            .iter()
            .map(|&j| labels.iter().position(|&k| k == self.sigma0[j]).unwrap())
            .collect();
        let tau = transport(&self.roots, labels, &rd, &self.tau.element, strict)?;
        let mu = project_coweight(&self.roots, labels, &self.mu);
        CoxeterDatum::new(rd, sigma, OmegaElement { element: tau, nodes: Vec::new() }, mu)
    }

    /// Short description such as `(A3, flip, id, w2)`.
    pub fn label(&self) -> String {
        format!(
            "({}, {}, {}, {})",
            self.roots.type_name(),
            sigma_label(&self.roots, &self.sigma0),
            self.tau.label(),
            mu_label(&self.roots, &self.mu)
        )
    }

    /// Display coordinates of a vector of `V`.
    pub fn display(&self, v: &RatVec) -> RatVec {
        self.roots.to_display(v)
    }
}

impl fmt::Display for CoxeterDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// `m_k = <v, α_{J[k]}>`: the image of `v` in the adjoint Levi on the labels `J`.
pub fn project_coweight(rd: &RootDatum, labels: &[usize], v: &RatVec) -> RatVec {
    RatVec(labels.iter().map(|&j| rd.pair_root(v, j)).collect())
}

/// Transports an element of `X_* ⋊ W_J` to the adjoint datum on the labels `J`.
///
/// With `strict`, letters of the finite part outside `J` are an error; otherwise they are dropped
/// (which is correct when `J` is a union of blocks).
pub fn transport(
    src: &RootDatum,
    labels: &[usize],
    dst: &RootDatum,
    x: &AffineWeylElement,
    strict: bool,
) -> Result<AffineWeylElement> {
    let lam = RatVec::from_ints(&x.translation);
    let t = project_coweight(src, labels, &lam).to_ints();
    let mut word = Vec::new();
    for i in src.reduced_word(&x.finite) {
        match labels.iter().position(|&j| j == i) {
            Some(k) => word.push(k),
            None if strict => {
                return Err(Error::Internal(format!("finite part leaves W_J at s{}", i + 1)))
            }
            None => {}
        }
    }
    Ok(AffineWeylElement::new(t, dst.from_word(&word)))
}

/// `id`, `flip` or the explicit one-based permutation.
pub fn sigma_label(rd: &RootDatum, sigma0: &[usize]) -> String {
    if sigma0.iter().enumerate().all(|(i, &j)| i == j) {
        return "id".into();
    }
    if let Ok(f) = named_automorphism(rd, "flip") {
        if f == sigma0 {
            return "flip".into();
        }
    }
    let parts: Vec<String> = sigma0.iter().map(|j| (j + 1).to_string()).collect();
    format!("[{}]", parts.join(","))
}

/// `w1`, `w1+w3`, `2w2` or `0` for adjoint data; the vector itself for `GL_n`.
pub fn mu_label(rd: &RootDatum, mu: &RatVec) -> String {
    if rd.gl_n().is_some() {
        return mu.to_string();
    }
    let mut parts = Vec::new();
    for (k, m) in mu.iter().enumerate() {
        if m.is_zero() {
            continue;
        }
        let c = crate::rat::fmt_q(m);
        if c == "1" {
            parts.push(format!("w{}", k + 1));
        } else {
            parts.push(format!("{c}w{}", k + 1));
        }
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join("+")
    }
}

/// The non-trivial automorphisms with a name: `flip` (A, D, E6) and `triality` (D4).
pub fn named_automorphism(rd: &RootDatum, name: &str) -> Result<Vec<usize>> {
    let r = rd.rank();
    let bad = || Error::Parse(format!("sigma0 {name:?} is not defined for {}", rd.type_name()));
    if name == "id" {
        return Ok((0..r).collect());
    }
    if rd.blocks().len() != 1 || rd.gl_n().is_some() {
        return Err(bad());
    }
    let b = &rd.blocks()[0];
    let mut p: Vec<usize> = (0..r).collect();
    let at = |k: usize| b.labels[k];
    match (name, b.ty) {
        ("flip", CartanType::A) if r >= 2 => {
            for k in 0..r {
                p[at(k)] = at(r - 1 - k);
            }
        }
        ("flip", CartanType::D) => {
            p[at(r - 2)] = at(r - 1);
            p[at(r - 1)] = at(r - 2);
        }
        ("flip", CartanType::E) if r == 6 => {
            for (x, y) in [(0, 5), (2, 4)] {
                p[at(x)] = at(y);
                p[at(y)] = at(x);
            }
        }
        ("triality", CartanType::D) if r == 4 => {
            p[at(0)] = at(2);
            p[at(2)] = at(3);
            p[at(3)] = at(0);
        }
        _ => return Err(bad()),
    }
    Ok(p)
}

#[derive(Deserialize)]
#[serde(untagged)]
enum SigmaSpec {
    Name(String),
    Perm(Vec<usize>),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RotateSpec {
    rotate: usize,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum TauSpec {
    Index(usize),
    PerBlock(Vec<usize>),
    Rotate(RotateSpec),
}

#[derive(Deserialize)]
#[serde(untagged)]
enum MuSpec {
    Coords(Vec<i64>),
    Label(String),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DatumSpec {
    #[serde(rename = "type")]
    ty: String,
    #[serde(default)]
    sigma0: Option<SigmaSpec>,
    #[serde(default)]
    tau: Option<TauSpec>,
    mu: MuSpec,
}

/// Parses `A3`, `GL4` or a product such as `A1xA1`.
pub fn parse_root_datum(s: &str) -> Result<RootDatum> {
    let parts: Vec<&str> = s.split('x').map(str::trim).collect();
    if parts.len() == 1 {
        return parse_type(parts[0]);
    }
    let mut cartan: Vec<Vec<i64>> = Vec::new();
    for p in parts {
        let rd = parse_type(p)?;
        if rd.gl_n().is_some() {
            return Err(Error::Unsupported("products involving GL_n".into()));
        }
        let c = rd.cartan();
        let off = cartan.len();
        let n = off + c.len();
        for row in cartan.iter_mut() {
            row.resize(n, 0);
        }
        for row in c {
            let mut r = vec![0; off];
            r.extend(row.iter().copied());
            cartan.push(r);
        }
        if cartan.len() > 64 {
            return Err(Error::Parse("rank too large".into()));
        }
    }
    Ok(RootDatum::from_cartan(&cartan))
}

/// Parses `w2`, `w1+w3`, `2w1` or `0` into lattice coordinates of an adjoint datum.
pub fn parse_mu_label(rd: &RootDatum, s: &str) -> Result<RatVec> {
    let mut v = RatVec::zeros(rd.dim());
    let s = s.trim();
    if s == "0" {
        return Ok(v);
    }
    let bad = || Error::Parse(format!("bad coweight label {s:?}"));
    for term in s.split('+') {
        let term = term.trim();
        let (c, k) = term.split_once('w').ok_or_else(bad)?;
        let c: i64 = if c.is_empty() { 1 } else { c.parse().map_err(|_| bad())? };
        let k: usize = k.parse().map_err(|_| bad())?;
        if k == 0 || k > rd.rank() {
            return Err(bad());
        }
        let w = rd.fundamental_coweight(k - 1).scale(&qi(c));
        v = &v + &w;
    }
    Ok(v)
}

fn parse_perm(r: usize, p: &[usize]) -> Result<Vec<usize>> {
    let mut s = p.to_vec();
    s.sort();
    if s == (0..r).collect::<Vec<_>>() {
        Ok(p.to_vec())
    } else if s == (1..=r).collect::<Vec<_>>() {
        Ok(p.iter().map(|x| x - 1).collect())
    } else {
        Err(Error::Parse("sigma0 is not a permutation of the labels".into()))
    }
}

impl CoxeterDatum {
    /// Parses the JSON datum format (`type`, `sigma0`, `tau`, `mu`).
    pub fn from_json(text: &str) -> Result<CoxeterDatum> {
        let spec: DatumSpec =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("datum: {e}")))?;
        let rd = parse_root_datum(&spec.ty)?;
        let r = rd.rank();
        let sigma0 = match &spec.sigma0 {
            None => (0..r).collect(),
            Some(SigmaSpec::Name(n)) => named_automorphism(&rd, n)?,
            Some(SigmaSpec::Perm(p)) => parse_perm(r, p)?,
        };
        let tau = match (&spec.tau, rd.gl_n()) {
            (None, _) | (Some(TauSpec::Index(0)), _) => OmegaElement::identity(rd.dim()),
            (Some(TauSpec::Rotate(RotateSpec { rotate })), Some(n)) => {
                let i = rotate % n;
                if i == 0 {
                    OmegaElement::identity(n)
                } else {
                    OmegaElement { element: omega_for_node(&rd, i - 1), nodes: vec![i] }
                }
            }
            (Some(TauSpec::Index(k)), None) if rd.blocks().len() == 1 => {
                let nodes = minuscule_nodes(&rd, 0);
                let node = *nodes
                    .get(k - 1)
                    .ok_or_else(|| Error::Parse(format!("tau index {k} out of range")))?;
                OmegaElement { element: omega_for_node(&rd, node), nodes: vec![node + 1] }
            }
            (Some(TauSpec::PerBlock(ks)), None) if ks.len() == rd.blocks().len() => {
                let mut el = AffineWeylElement::identity(rd.dim());
                let mut ns = Vec::new();
                for (b, &k) in ks.iter().enumerate() {
                    if k == 0 {
                        continue;
                    }
                    let nodes = minuscule_nodes(&rd, b);
                    let node = *nodes
                        .get(k - 1)
                        .ok_or_else(|| Error::Parse(format!("tau index {k} out of range")))?;
                    el = el.compose(&omega_for_node(&rd, node));
                    ns.push(node + 1);
                }
                OmegaElement { element: el, nodes: ns }
            }
            _ => return Err(Error::Parse("tau does not match the type".into())),
        };
        let mu = match &spec.mu {
            MuSpec::Label(s) => {
                if rd.gl_n().is_some() {
                    return Err(Error::Parse("GL_n mu must be an integer vector".into()));
                }
                parse_mu_label(&rd, s)?
            }
            MuSpec::Coords(v) => {
                let v = RatVec::from_ints(v);
                if v.len() == rd.dim() {
                    v
                } else if rd.blocks().len() == 1
                    && rd.blocks()[0].ty == CartanType::A
                    && v.len() == rd.rank() + 1
                {
                    RatVec((0..rd.rank()).map(|j| &v.0[j] - &v.0[j + 1]).collect())
                } else {
                    return Err(Error::DimensionMismatch { expected: rd.dim(), got: v.len() });
                }
            }
        };
        CoxeterDatum::new(rd, sigma0, tau, mu)
    }
}
