//! Zero-dimensionality of `X(μ, b)`: μ-ordinariness of the maximum, extended Lubin–Tate
//! detection on Levi data, and the two equivalent combinatorial conditions per class.

use std::collections::HashMap;

use num_traits::Zero;

use crate::affine::AffineWeylElement;
use crate::bg::{enumerate_bg_mu, is_superbasic, leq, BgMuPoset, SigmaClass};
use crate::datum::{mu_label, named_automorphism, omega_group, sigma_label, CoxeterDatum, OmegaElement};
use crate::error::{Error, Result};
use crate::essgap::gap_to_max;
use crate::hodgenewton::{build_levi_datum, minimal_j};
use crate::rat::{ceil, is_int, qi, to_i64, RatVec};
use crate::rootsys::{CartanType, RootDatum};

/// `<σ(0), ω_o> ∈ ℤ` for every σ₀-orbit `o` outside `I(μ^◇)`.
pub fn mu_ordinary_criterion(datum: &CoxeterDatum) -> bool {
    let rd = datum.roots();
    let md = datum.mu_diamond();
    let s0 = datum.sigma_zero_point();
    datum
        .sigma0_orbits()
        .iter()
        .filter(|o| o.iter().any(|&i| !rd.pair_root(&md, i).is_zero()))
        .all(|o| is_int(&datum.pair_orbit(&s0, o)))
}

/// Whether the maximal class is μ-ordinary.
///
/// The orbit criterion is compared with `ν_max = μ^◇`; a disagreement is an error.
pub fn is_mu_ordinary_max(datum: &CoxeterDatum, poset: &BgMuPoset) -> Result<bool> {
    let crit = mu_ordinary_criterion(datum);
    let direct = poset.max().nu == datum.mu_diamond();
    if crit != direct {
        return Err(Error::Internal(format!(
            "mu-ordinary criterion gives {crit} but nu_max = {} and mu^diamond = {}",
            poset.max().nu,
            datum.mu_diamond()
        )));
    }
    Ok(crit)
}

/// One F-simple factor (a σ₀-orbit of blocks) of an adjoint datum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorSummary {
    /// Block indices of the ambient datum, in σ₀-cycle order.
    pub blocks: Vec<usize>,
    /// Type of one copy, e.g. `A2`.
    pub ty: String,
    /// Number of copies permuted by σ₀.
    pub d: usize,
    pub is_a_type: bool,
    /// `δ^d` on one copy: `id`, `flip`, `Ad(tau_k)` or `Ad(tau_k)∘flip`.
    pub delta: String,
    /// μ on each copy, in cycle order.
    pub mu_labels: Vec<String>,
    pub central: bool,
    pub fully_hn_dec: bool,
    pub basic_superbasic: bool,
    /// Shape test: type A, `δ^d = id`, μ an endpoint coweight on exactly one copy.
    pub diagram_route: bool,
    /// Computed test: fully Hodge–Newton decomposable with superbasic basic class.
    pub computed_route: bool,
}

impl FactorSummary {
    pub fn passes(&self) -> bool {
        self.diagram_route
    }

    pub fn routes_agree(&self) -> bool {
        self.diagram_route == self.computed_route
    }

    /// `(A1, id, w1)` or `Res_{F2/F}(A1, id), (w1, 0)`.
    pub fn label(&self) -> String {
        if self.d == 1 {
            format!("({}, {}, {})", self.ty, self.delta, self.mu_labels[0])
        } else {
            format!("Res_{{F{}/F}}({}, {}), ({})", self.d, self.ty, self.delta, self.mu_labels.join(", "))
        }
    }
}

/// Extended Lubin–Tate analysis of a datum, factor by factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LtReport {
    pub factors: Vec<FactorSummary>,
}

impl LtReport {
    pub fn is_extended_lubin_tate(&self) -> bool {
        self.factors.iter().all(FactorSummary::passes)
    }

    pub fn routes_agree(&self) -> bool {
        self.factors.iter().all(FactorSummary::routes_agree)
    }

    pub fn label(&self) -> String {
        if self.factors.is_empty() {
            return "T".into();
        }
        self.factors.iter().map(FactorSummary::label).collect::<Vec<_>>().join(" x ")
    }
}

fn compose_perm(p: &[usize], q: &[usize]) -> Vec<usize> {
    q.iter().map(|&i| p[i]).collect()
}

/// Names the automorphism `perm` of the affine diagram of block `b` as `Ad(ω)∘σ'`.
fn identify_block_twist(datum: &CoxeterDatum, b: usize, perm: &[usize]) -> Result<String> {
    let block = &datum.roots().blocks()[b];
    let r = datum.rank();
    let rd = RootDatum::irreducible(block.ty, block.rank)?;
    let to_global = |k: usize| if k == block.rank { r + b } else { block.labels[k] };
    for s in rd.diagram_automorphisms() {
        for w in omega_group(&rd) {
            let cand = match CoxeterDatum::new(rd.clone(), s.clone(), w.clone(), RatVec::zeros(rd.dim())) {
                Ok(c) => c,
                Err(_) => continue,
            };
            let dp = cand.delta_permutation()?;
            if (0..=block.rank).all(|k| perm[to_global(k)] == to_global(dp[k])) {
                let sl = sigma_label(&rd, &s);
                return Ok(match (w.is_identity(), sl == "id") {
                    (true, _) => sl,
                    (false, true) => format!("Ad({})", w.label()),
                    (false, false) => format!("Ad({})∘{sl}", w.label()),
                });
            }
        }
    }
    Err(Error::Internal(format!("unrecognized automorphism of the affine diagram of block {b}")))
}

/// Restriction of `μ` to one block, in that block's Bourbaki order.
fn block_mu(datum: &CoxeterDatum, b: usize) -> RatVec {
    let block = &datum.roots().blocks()[b];
    RatVec(block.labels.iter().map(|&l| datum.mu().0[l].clone()).collect())
}

/// Whether a block coweight is `ω₁^∨` or `ω_n^∨` of type `A_n`.
fn is_endpoint_coweight(m: &RatVec) -> bool {
    let n = m.len();
    let ones: Vec<usize> = (0..n).filter(|&k| !m.0[k].is_zero()).collect();
    ones.len() == 1 && m.0[ones[0]] == qi(1) && (ones[0] == 0 || ones[0] == n - 1)
}

fn factor_summary(datum: &CoxeterDatum, cycle: &[usize]) -> Result<FactorSummary> {
    let rd = datum.roots();
    let mut sorted = cycle.to_vec();
    sorted.sort();
    let f = datum.restrict_to_blocks(&sorted)?;
    // blocks of `f` follow the sorted order of `cycle`
    let local: Vec<usize> = cycle.iter().map(|b| sorted.iter().position(|x| x == b).unwrap()).collect();
    let d = cycle.len();
    let first = &rd.blocks()[cycle[0]];
    let is_a_type = f.roots().blocks().iter().all(|bl| bl.ty == CartanType::A);
    let perm = f.delta_permutation()?;
    let mut pd: Vec<usize> = (0..perm.len()).collect();
    for _ in 0..d {
        pd = compose_perm(&perm, &pd);
    }
    let delta = identify_block_twist(&f, local[0], &pd)?;
    let mus: Vec<RatVec> = local.iter().map(|&b| block_mu(&f, b)).collect();
    let mu_labels: Vec<String> = local
        .iter()
        .zip(&mus)
        .map(|(&b, m)| {
            let bl = &f.roots().blocks()[b];
            RootDatum::irreducible(bl.ty, bl.rank).map(|brd| mu_label(&brd, m))
        })
        .collect::<Result<_>>()?;
    let central = f.mu().is_zero();
    let (fully_hn_dec, basic_superbasic) = if central {
        (true, true)
    } else {
        let p = enumerate_bg_mu(&f)?;
        let fully = p
            .elements()
            .iter()
            .filter(|c| *c != p.basic())
            .all(|c| minimal_j(&f, c).len() < f.rank());
        (fully, is_superbasic(&f, p.basic()))
    };
    let diagram_route = central
        || (is_a_type
            && delta == "id"
            && mus.iter().filter(|m| !m.is_zero()).count() == 1
            && mus.iter().filter(|m| !m.is_zero()).all(is_endpoint_coweight));
    let computed_route = central || (fully_hn_dec && basic_superbasic);
    Ok(FactorSummary {
        blocks: cycle.to_vec(),
        ty: first.name(),
        d,
        is_a_type,
        delta,
        mu_labels,
        central,
        fully_hn_dec,
        basic_superbasic,
        diagram_route,
        computed_route,
    })
}

/// Per-factor extended Lubin–Tate analysis; non-adjoint data are first made adjoint.
pub fn extended_lubin_tate(datum: &CoxeterDatum) -> Result<LtReport> {
    let ad = datum.to_adjoint()?;
    let rd = ad.roots();
    let nb = rd.blocks().len();
    let mut seen = vec![false; nb];
    let mut factors = Vec::new();
    for b in 0..nb {
        if seen[b] {
            continue;
        }
        let mut cycle = vec![b];
        seen[b] = true;
        let mut k = rd.block_of(ad.sigma0()[rd.blocks()[b].labels[0]]);
        while k != b {
            seen[k] = true;
            cycle.push(k);
            k = rd.block_of(ad.sigma0()[rd.blocks()[k].labels[0]]);
        }
        factors.push(factor_summary(&ad, &cycle)?);
    }
    Ok(LtReport { factors })
}

pub fn is_extended_lubin_tate(datum: &CoxeterDatum) -> Result<bool> {
    Ok(extended_lubin_tate(datum)?.is_extended_lubin_tate())
}

/// Outcome of both conditions for one class of `B(G, {μ})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub index: usize,
    pub class: SigmaClass,
    /// Extended Lubin–Tate type of the Levi attached to `minimal_J`.
    pub cond2: bool,
    /// `[b_max]` μ-ordinary and `Ess-gap([b], [b_max]) = 0`.
    pub cond3: bool,
    pub agree: bool,
    pub minimal_j: Vec<usize>,
    pub levi_label: String,
    pub levi_summary: Vec<FactorSummary>,
    /// Both extended Lubin–Tate routes agree on every factor.
    pub lt_routes_agree: bool,
    pub ess_gap: i64,
    /// `<μ − ν_max, 2ρ> + Ess-gap([b], [b_max])`, rounded up.
    pub dim_lower_bound: i64,
}

/// `classify` together with the poset and the μ-ordinary flag.
#[derive(Clone, Debug)]
pub struct Classification {
    pub poset: BgMuPoset,
    pub mu_ordinary: bool,
    pub verdicts: Vec<Verdict>,
}

impl Classification {
    pub fn all_agree(&self) -> bool {
        self.verdicts.iter().all(|v| v.agree && v.lt_routes_agree)
    }

    /// Indices of the classes with zero-dimensional `X(μ, b)`.
    pub fn zero_dim(&self) -> Vec<usize> {
        self.verdicts.iter().filter(|v| v.cond3).map(|v| v.index).collect()
    }
}

pub fn classify(datum: &CoxeterDatum) -> Result<Vec<Verdict>> {
    Ok(classify_full(datum)?.verdicts)
}

pub fn classify_full(datum: &CoxeterDatum) -> Result<Classification> {
    let poset = enumerate_bg_mu(datum)?;
    classify_poset(datum, poset)
}

pub fn classify_poset(datum: &CoxeterDatum, poset: BgMuPoset) -> Result<Classification> {
    let mu_ordinary = is_mu_ordinary_max(datum, &poset)?;
    let rd = datum.roots();
    let base = rd.pair_rho(&(datum.mu() - &poset.max().nu)) * qi(2);
    let mut cache: HashMap<Vec<usize>, LtReport> = HashMap::new();
    let mut verdicts = Vec::with_capacity(poset.len());
    for (index, c) in poset.elements().iter().enumerate() {
        let j = minimal_j(datum, c);
        if !cache.contains_key(&j) {
            let levi = build_levi_datum(datum, &j)?;
            cache.insert(j.clone(), extended_lubin_tate(&levi.inner)?);
        }
        let report = &cache[&j];
        let gap = gap_to_max(datum, &poset, c)?;
        let cond2 = report.is_extended_lubin_tate();
        let cond3 = mu_ordinary && gap.ess_gap == 0;
        verdicts.push(Verdict {
            index,
            class: c.clone(),
            cond2,
            cond3,
            agree: cond2 == cond3,
            minimal_j: j,
            levi_label: report.label(),
            levi_summary: report.factors.clone(),
            lt_routes_agree: report.routes_agree(),
            ess_gap: gap.ess_gap,
            dim_lower_bound: to_i64(&ceil(&(&base + qi(gap.ess_gap)))),
        });
    }
    Ok(Classification { poset, mu_ordinary, verdicts })
}

/// Whether the classes marked zero-dimensional form an upward closed subset.
pub fn saturation_check(datum: &CoxeterDatum, poset: &BgMuPoset, verdicts: &[Verdict]) -> bool {
    let els = poset.elements();
    verdicts.iter().filter(|v| v.cond3).all(|v| {
        (0..els.len()).all(|b| !leq(datum, &els[v.index], &els[b]) || verdicts[b].cond3)
    })
}

/// Minimal elements of a subset of the poset.
pub fn minimal_elements(datum: &CoxeterDatum, poset: &BgMuPoset, set: &[usize]) -> Vec<usize> {
    let els = poset.elements();
    set.iter()
        .copied()
        .filter(|&a| !set.iter().any(|&b| b != a && leq(datum, &els[b], &els[a])))
        .collect()
}

/// Exhaustive check that no class strictly below `[b_max]` has zero gap, for `GL_n` twisted by `τ_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedScan {
    pub classes: usize,
    pub checked: usize,
    pub violations: Vec<SigmaClass>,
}

impl TwistedScan {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn gl_twisted(n: usize, i: usize, mu: &RatVec) -> Result<CoxeterDatum> {
    let rd = RootDatum::gl(n)?;
    let tau = omega_group(&rd)
        .into_iter()
        .nth(i % n)
        .ok_or_else(|| Error::InvalidDatum(format!("no rotation {i} for GL{n}")))?;
    CoxeterDatum::new(rd, (0..n - 1).collect(), tau, mu.clone())
}

pub fn no_gap_in_twisted_a(n: usize, i: usize, mu: &RatVec) -> Result<TwistedScan> {
    let datum = gl_twisted(n, i, mu)?;
    let poset = enumerate_bg_mu(&datum)?;
    if !is_mu_ordinary_max(&datum, &poset)? {
        return Err(Error::InvalidDatum(format!("{} : the maximal class is not mu-ordinary", datum.label())));
    }
    let mut violations = Vec::new();
    let mut checked = 0;
    for c in poset.elements().iter().filter(|c| *c != poset.max()) {
        checked += 1;
        if gap_to_max(&datum, &poset, c)?.ess_gap == 0 {
            violations.push(c.clone());
        }
    }
    Ok(TwistedScan { classes: poset.len(), checked, violations })
}

/// A row of the classification of non-quasi-split data with μ-ordinary maximum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableRow {
    /// `(Ã_{n−1}, Ad(τ_i))`, `1 ≤ i ≤ n/2`.
    ATau(usize),
    /// `(Ã_{n−1}, Ad(τ₁)∘ζ₀)`, `n` even.
    ATauFlip,
    BTau1,
    CTauN,
    /// `(D̃_n, Ad(τ₁))`, `n ≥ 5`.
    DTau1,
    DTauNOdd,
    DTauN4k2,
    DTauN4k,
    DTauNFlipOdd,
    DTauNFlipEven,
    E6Tau1,
    E7Tau7,
}

impl TableRow {
    /// Rows applicable to a type of the given rank (one-based Bourbaki nodes inside).
    fn rows_for(ty: CartanType, rank: usize) -> Vec<TableRow> {
        use TableRow::*;
        let n = rank;
        match ty {
            CartanType::A => {
                let m = rank + 1;
                let mut v: Vec<TableRow> = (1..=m / 2).map(ATau).collect();
                if m % 2 == 0 {
                    v.push(ATauFlip);
                }
                v
            }
            CartanType::B => vec![BTau1],
            CartanType::C => vec![CTauN],
            CartanType::D => {
                let mut v = Vec::new();
                if n >= 5 {
                    v.push(DTau1);
                }
                v.push(match n % 4 {
                    0 => DTauN4k,
                    2 => DTauN4k2,
                    _ => DTauNOdd,
                });
                v.push(if n % 2 == 1 { DTauNFlipOdd } else { DTauNFlipEven });
                v
            }
            CartanType::E if n == 6 => vec![E6Tau1],
            CartanType::E if n == 7 => vec![E7Tau7],
            _ => Vec::new(),
        }
    }

    /// `(σ₀ name, one-based τ node)`.
    fn canonical(self, rank: usize) -> (&'static str, usize) {
        use TableRow::*;
        match self {
            ATau(i) => ("id", i),
            ATauFlip => ("flip", 1),
            BTau1 | DTau1 | E6Tau1 => ("id", 1),
            CTauN | DTauNOdd | DTauN4k2 | DTauN4k => ("id", rank),
            DTauNFlipOdd | DTauNFlipEven => ("flip", rank),
            E7Tau7 => ("id", 7),
        }
    }

    /// The one-based nodes allowed in `S − I(μ^◇)`.
    fn allowed(self, rank: usize) -> Vec<usize> {
        use TableRow::*;
        let n = rank;
        let evens = |hi: usize| (2..=hi).step_by(2).collect::<Vec<usize>>();
        match self {
            ATau(i) => {
                let m = rank + 1;
                let d = num_integer::gcd(i, m);
                let r = m / d;
                (1..d).map(|k| k * r).collect()
            }
            ATauFlip => (1..=n).filter(|&k| k != n.div_ceil(2)).collect(),
            BTau1 => (1..n).collect(),
            CTauN => (1..=n).filter(|k| k % 2 == 0).collect(),
            DTau1 => (1..=n - 2).collect(),
            DTauNOdd => evens(n - 3),
            DTauN4k2 => {
                let mut v = evens(n - 2);
                v.push(n - 1);
                v
            }
            DTauN4k => {
                let mut v = evens(n - 2);
                v.push(n);
                v
            }
            DTauNFlipOdd => {
                let mut v = evens(n - 3);
                v.extend([n - 1, n]);
                v
            }
            DTauNFlipEven => evens(n.saturating_sub(2)),
            E6Tau1 => vec![2, 4],
            E7Tau7 => vec![1, 3, 4, 6],
        }
    }

    /// Printed condition.
    pub fn condition(self, rank: usize) -> String {
        use TableRow::*;
        let n = rank;
        match self {
            ATauFlip => format!("{} in I(mu^diamond)", n.div_ceil(2)),
            BTau1 => format!("{n} in I(mu)"),
            CTauN => "odd nodes in I(mu)".into(),
            DTau1 => format!("{{{},{}}} in I(mu)", n - 1, n),
            _ => {
                let a: Vec<String> = self.allowed(rank).iter().map(|k| k.to_string()).collect();
                let which = if matches!(self, DTauNFlipOdd | DTauNFlipEven) { "I(mu^diamond)" } else { "I(mu)" };
                format!("S - {which} in {{{}}}", a.join(","))
            }
        }
    }

    pub fn name(self) -> String {
        use TableRow::*;
        match self {
            ATau(i) => format!("A, Ad(tau{i})"),
            ATauFlip => "A, Ad(tau1)∘flip".into(),
            BTau1 => "B, Ad(tau1)".into(),
            CTauN => "C, Ad(taun)".into(),
            DTau1 => "D, Ad(tau1)".into(),
            DTauNOdd => "D, Ad(taun), n odd".into(),
            DTauN4k2 => "D, Ad(taun), n = 4k+2".into(),
            DTauN4k => "D, Ad(taun), n = 4k".into(),
            DTauNFlipOdd => "D, Ad(taun)∘flip, n odd".into(),
            DTauNFlipEven => "D, Ad(taun)∘flip, n even".into(),
            E6Tau1 => "E6, Ad(tau1)".into(),
            E7Tau7 => "E7, Ad(tau7)".into(),
        }
    }

    /// The predicate in the row's own labelling; `support` is `S − I(μ^◇)`, zero-based.
    fn predicate(self, rank: usize, support: &[usize]) -> bool {
        let allowed = self.allowed(rank);
        support.iter().all(|&k| allowed.contains(&(k + 1)))
    }
}

/// Reproduction of one `(type, σ₀, τ)` entry of the table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableEntry {
    pub ty: String,
    pub sigma0: String,
    pub tau: String,
    pub row: Option<TableRow>,
    pub condition: String,
    pub supports: usize,
    pub mu_ordinary: usize,
    /// Zero-based supports of `μ` where the computed criterion and the row disagree.
    pub mismatches: Vec<Vec<usize>>,
    /// Supports cross-checked against an enumerated poset.
    pub poset_checked: usize,
}

impl TableEntry {
    pub fn matches(&self) -> bool {
        self.row.is_some() && self.mismatches.is_empty()
    }
}

/// Index of `x` in `group`.
fn omega_index(group: &[OmegaElement], x: &AffineWeylElement) -> usize {
    group.iter().position(|w| &w.element == x).expect("Omega is closed under composition")
}

/// Image of `Ω` under a diagram automorphism `π`, as an index map.
fn omega_action(rd: &RootDatum, group: &[OmegaElement], pi: &[usize]) -> Result<Vec<usize>> {
    let probe = CoxeterDatum::quasi_split(rd.clone(), pi.to_vec(), RatVec::zeros(rd.dim()))?;
    let (p, pinv) = probe.frobenius_matrix();
    Ok(group.iter().map(|w| omega_index(group, &w.element.transform(p, pinv))).collect())
}

/// The σ₀-twisted conjugacy class `{ω τ σ₀(ω)^{-1}}` of `τ` in `Ω`.
fn twisted_class(group: &[OmegaElement], sigma_action: &[usize], t: usize) -> Vec<usize> {
    let mut out: Vec<usize> = group
        .iter()
        .enumerate()
        .map(|(k, w)| {
            let s = group[sigma_action[k]].element.inverse();
            omega_index(group, &w.element.compose(&group[t].element).compose(&s))
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

fn perm_inverse(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (i, &j) in p.iter().enumerate() {
        inv[j] = i;
    }
    inv
}

/// Finds a row and a diagram automorphism `π` (row labels to datum labels) matching `(σ₀, τ)`.
fn match_row(rd: &RootDatum, ty: CartanType, sigma0: &[usize], tau: usize) -> Result<Option<(TableRow, Vec<usize>)>> {
    let group = omega_group(rd);
    let autos = rd.diagram_automorphisms();
    let sigma_action = omega_action(rd, &group, sigma0)?;
    let class = twisted_class(&group, &sigma_action, tau);
    for row in TableRow::rows_for(ty, rd.rank()) {
        let (sname, node) = row.canonical(rd.rank());
        let srow = named_automorphism(rd, sname)?;
        let trow = group
            .iter()
            .position(|w| w.nodes == vec![node])
            .ok_or_else(|| Error::Internal(format!("no tau{node} in {}", rd.type_name())))?;
        for pi in &autos {
            // π σ_row π^{-1} = σ₀
            if (0..rd.rank()).any(|i| sigma0[pi[i]] != pi[srow[i]]) {
                continue;
            }
            let moved = omega_action(rd, &group, pi)?[trow];
            if class.contains(&moved) {
                return Ok(Some((row, pi.clone())));
            }
        }
    }
    Ok(None)
}

/// Types covered by the table search up to the given rank.
pub fn table_types(max_rank: usize) -> Vec<(CartanType, usize)> {
    let mut out = Vec::new();
    for n in 2..=max_rank {
        out.push((CartanType::A, n));
    }
    for n in 2..=max_rank {
        out.push((CartanType::B, n));
    }
    for n in 2..=max_rank {
        out.push((CartanType::C, n));
    }
    for n in 4..=max_rank {
        out.push((CartanType::D, n));
    }
    for n in [6, 7] {
        if n <= max_rank {
            out.push((CartanType::E, n));
        }
    }
    out
}

/// For every non-quasi-split `(type, σ₀, τ)` up to `max_rank`, compares the μ-ordinary criterion
/// on all `μ = Σ_{i∈T} ω_i^∨` with the matching table row. Ranks up to `poset_rank` are also
/// checked against the enumerated maximal class.
pub fn mu_ordinary_table(max_rank: usize, poset_rank: usize) -> Result<Vec<TableEntry>> {
    let mut out = Vec::new();
    for (ty, n) in table_types(max_rank) {
        let rd = RootDatum::irreducible(ty, n)?;
        let group = omega_group(&rd);
        for sigma0 in rd.diagram_automorphisms() {
            for (t, tau) in group.iter().enumerate() {
                let probe = CoxeterDatum::new(rd.clone(), sigma0.clone(), tau.clone(), RatVec::zeros(n))?;
                if probe.is_quasi_split() {
                    continue;
                }
                let found = match_row(&rd, ty, &sigma0, t)?;
                let mut entry = TableEntry {
                    ty: rd.type_name(),
                    sigma0: sigma_label(&rd, &sigma0),
                    tau: tau.label(),
                    row: found.as_ref().map(|f| f.0),
                    condition: found.as_ref().map(|f| f.0.condition(n)).unwrap_or_default(),
                    supports: 0,
                    mu_ordinary: 0,
                    mismatches: Vec::new(),
                    poset_checked: 0,
                };
                for mask in 0u32..(1 << n) {
                    let support: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
                    let mu = RatVec((0..n).map(|i| qi(i64::from(mask >> i & 1 == 1))).collect());
                    let datum = CoxeterDatum::new(rd.clone(), sigma0.clone(), tau.clone(), mu)?;
                    let computed = mu_ordinary_criterion(&datum);
                    if n <= poset_rank {
                        let poset = enumerate_bg_mu(&datum)?;
                        is_mu_ordinary_max(&datum, &poset)?;
                        entry.poset_checked += 1;
                    }
                    entry.supports += 1;
                    entry.mu_ordinary += usize::from(computed);
                    if let Some((row, pi)) = &found {
                        // support of μ^◇ in the row's labelling
                        let md = datum.mu_diamond();
                        let pinv = perm_inverse(pi);
                        let mut sup: Vec<usize> =
                            (0..n).filter(|&i| !md.0[i].is_zero()).map(|i| pinv[i]).collect();
                        sup.sort();
                        if row.predicate(n, &sup) != computed {
                            entry.mismatches.push(support);
                        }
                    }
                }
                out.push(entry);
            }
        }
    }
    Ok(out)
}
