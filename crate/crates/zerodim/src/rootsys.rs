//! Root-system kernel: Cartan data, Weyl group elements, pairings and dominance.
//!
//! Vectors of `V` are stored in *lattice coordinates*: for an adjoint datum
//! the basis is the fundamental coweights `w_1^v, ..., w_r^v` (so the `k`-th
//! coordinate of `v` is `<v, alpha_k>`), and for `GL_n` it is the standard
//! basis of `Z^n`. Simple roots and fundamental weights are linear functionals
//! given by their values on that basis. Orthogonal-coordinate realizations are
//! only used for display and for parsing user-facing vectors.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{inverse, to_qmat};
use crate::rat::{q, qi, RatVec, Q};

/// Irreducible Cartan types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CartanType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl CartanType {
    pub fn letter(self) -> char {
        match self {
            CartanType::A => 'A',
            CartanType::B => 'B',
            CartanType::C => 'C',
            CartanType::D => 'D',
            CartanType::E => 'E',
            CartanType::F => 'F',
            CartanType::G => 'G',
        }
    }

    pub fn valid_rank(self, rank: usize) -> bool {
        match self {
            CartanType::A => rank >= 1,
            CartanType::B | CartanType::C => rank >= 2,
            CartanType::D => rank >= 4,
            CartanType::E => (6..=8).contains(&rank),
            CartanType::F => rank == 4,
            CartanType::G => rank == 2,
        }
    }
}

/// An irreducible block of a root datum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub ty: CartanType,
    pub rank: usize,
    /// Global simple-root labels in Bourbaki order.
    pub labels: Vec<usize>,
    /// Orthogonal realization of the simple roots and coroots, if displayed that way.
    eps: Option<EpsRealization>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct EpsRealization {
    roots: Vec<RatVec>,
    coroots: Vec<RatVec>,
}

impl Block {
    pub fn name(&self) -> String {
        format!("{}{}", self.ty.letter(), self.rank)
    }

    /// Number of display coordinates used by this block.
    fn display_dim(&self) -> usize {
        match &self.eps {
            Some(e) => e.roots[0].len(),
            None => self.rank,
        }
    }
}

/// Element of the finite Weyl group, as an integer matrix on lattice coordinates.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    d: usize,
    mat: Vec<i64>,
    inv: Vec<i64>,
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W{:?}", self.mat)
    }
}

fn mat_mul(d: usize, a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut c = vec![0i64; d * d];
    for i in 0..d {
        for k in 0..d {
            let x = a[i * d + k];
            if x != 0 {
                for j in 0..d {
                    c[i * d + j] += x * b[k * d + j];
                }
            }
        }
    }
    c
}

impl WeylElement {
    pub fn identity(d: usize) -> Self {
        let mut mat = vec![0; d * d];
        for i in 0..d {
            mat[i * d + i] = 1;
        }
        WeylElement { d, mat: mat.clone(), inv: mat }
    }

    /// Wraps a matrix that squares to the identity.
    pub fn from_involution(d: usize, mat: Vec<i64>) -> Self {
        assert_eq!(mat.len(), d * d);
        WeylElement { d, mat: mat.clone(), inv: mat }
    }

    pub fn is_identity(&self) -> bool {
        *self == WeylElement::identity(self.d)
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    /// Raw matrix entries (row-major); used as a hashing key.
    pub fn matrix(&self) -> &[i64] {
        &self.mat
    }

    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        WeylElement {
            d: self.d,
            mat: mat_mul(self.d, &self.mat, &other.mat),
            inv: mat_mul(self.d, &other.inv, &self.inv),
        }
    }

    pub fn inverse(&self) -> WeylElement {
        WeylElement { d: self.d, mat: self.inv.clone(), inv: self.mat.clone() }
    }

    /// Conjugation by a lattice automorphism `p` (with inverse `pinv`): `p w p^-1`.
    pub fn conjugate_by(&self, p: &[i64], pinv: &[i64]) -> WeylElement {
        let d = self.d;
        WeylElement {
            d,
            mat: mat_mul(d, &mat_mul(d, p, &self.mat), pinv),
            inv: mat_mul(d, &mat_mul(d, p, &self.inv), pinv),
        }
    }

    pub fn apply_int(&self, v: &[i64]) -> Vec<i64> {
        let d = self.d;
        (0..d)
            .map(|i| (0..d).map(|j| self.mat[i * d + j] * v[j]).sum())
            .collect()
    }

    pub fn apply(&self, v: &RatVec) -> RatVec {
        let d = self.d;
        RatVec(
            (0..d)
                .map(|i| {
                    (0..d)
                        .filter(|&j| self.mat[i * d + j] != 0)
                        .map(|j| &v.0[j] * qi(self.mat[i * d + j]))
                        .sum()
                })
                .collect(),
        )
    }

    /// The functional `w(beta)`, i.e. `v -> beta(w^-1 v)`.
    pub fn act_functional(&self, beta: &[i64]) -> Vec<i64> {
        let d = self.d;
        (0..d)
            .map(|j| (0..d).map(|i| self.inv[i * d + j] * beta[i]).sum())
            .collect()
    }

    /// The functional `w^-1(beta)`, i.e. `v -> beta(w v)`.
    pub fn act_functional_inv(&self, beta: &[i64]) -> Vec<i64> {
        let d = self.d;
        (0..d)
            .map(|j| (0..d).map(|i| self.mat[i * d + j] * beta[i]).sum())
            .collect()
    }
}

/// A positive root together with its coroot.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Root {
    /// The root as a functional on lattice coordinates.
    pub root: Vec<i64>,
    /// The coroot in lattice coordinates.
    pub coroot: Vec<i64>,
}

/// A finite reduced root datum: either adjoint (cocharacter lattice `P^v`) or `GL_n`.
#[derive(Clone, Debug)]
pub struct RootDatum {
    dim: usize,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    roots: Vec<Vec<i64>>,
    coroots: Vec<Vec<i64>>,
    weights: Vec<RatVec>,
    gl: Option<usize>,
    blocks: Vec<Block>,
    block_of: Vec<usize>,
    positive: Vec<Root>,
    height_vec: Vec<i64>,
    /// Matrix taking `(<v, alpha_j>)_j` to the coroot coordinates of the semisimple part.
    coroot_solver: Vec<Vec<Q>>,
}

impl PartialEq for RootDatum {
    fn eq(&self, other: &Self) -> bool {
        self.cartan == other.cartan && self.gl == other.gl && self.dim == other.dim
    }
}

impl Eq for RootDatum {}

fn eps(dim: usize, entries: &[(usize, Q)]) -> RatVec {
    let mut v = RatVec::zeros(dim);
    for (i, x) in entries {
        v.0[*i] += x;
    }
    v
}

/// Bourbaki's orthogonal realization of the simple roots.
fn orthogonal_roots(ty: CartanType, n: usize) -> Vec<RatVec> {
    let one = || qi(1);
    let half = || q(1, 2);
    let mhalf = || q(-1, 2);
    let diff = |dim: usize, i: usize, j: usize| eps(dim, &[(i, one()), (j, qi(-1))]);
    match ty {
        CartanType::A => (0..n).map(|i| diff(n + 1, i, i + 1)).collect(),
        CartanType::B | CartanType::C | CartanType::D => {
            let mut r: Vec<RatVec> = (0..n - 1).map(|i| diff(n, i, i + 1)).collect();
            r.push(match ty {
                CartanType::B => eps(n, &[(n - 1, one())]),
                CartanType::C => eps(n, &[(n - 1, qi(2))]),
                _ => eps(n, &[(n - 2, one()), (n - 1, one())]),
            });
            r
        }
        CartanType::E => {
            let mut r = vec![
                eps(
                    8,
                    &[
                        (0, half()),
                        (7, half()),
                        (1, mhalf()),
                        (2, mhalf()),
                        (3, mhalf()),
                        (4, mhalf()),
                        (5, mhalf()),
                        (6, mhalf()),
                    ],
                ),
                eps(8, &[(0, one()), (1, one())]),
                diff(8, 1, 0),
            ];
            for k in 2..7 {
                r.push(diff(8, k, k - 1));
            }
            r.truncate(n);
            r
        }
        CartanType::F => vec![
            diff(4, 1, 2),
            diff(4, 2, 3),
            eps(4, &[(3, one())]),
            eps(4, &[(0, half()), (1, mhalf()), (2, mhalf()), (3, mhalf())]),
        ],
        CartanType::G => vec![
            diff(3, 0, 1),
            eps(3, &[(0, qi(-2)), (1, one()), (2, one())]),
        ],
    }
}

fn coroot_of(alpha: &RatVec) -> RatVec {
    let n2 = alpha.dot(alpha);
    alpha.scale(&(qi(2) / n2))
}

fn cartan_from_realization(roots: &[RatVec]) -> Vec<Vec<i64>> {
    let coroots: Vec<RatVec> = roots.iter().map(coroot_of).collect();
    coroots
        .iter()
        .map(|c| {
            roots
                .iter()
                .map(|a| crate::rat::q_to_i64(&c.dot(a)))
                .collect()
        })
        .collect()
}

/// Recognizes the type of a connected Dynkin diagram and returns its labels in Bourbaki order.
fn recognize(cartan: &[Vec<i64>], comp: &[usize]) -> (CartanType, Vec<usize>) {
    let n = comp.len();
    if n == 1 {
        return (CartanType::A, comp.to_vec());
    }
    let adj = |i: usize| -> Vec<usize> {
        comp.iter()
            .copied()
            .filter(|&j| j != i && cartan[i][j] != 0)
            .collect()
    };
    let bond = |i: usize, j: usize| cartan[i][j] * cartan[j][i];
    // i shorter than j iff |A_ij| > |A_ji|
    let shorter = |i: usize, j: usize| cartan[i][j].abs() > cartan[j][i].abs();
    let leaves: Vec<usize> = comp.iter().copied().filter(|&i| adj(i).len() == 1).collect();
    let branch: Vec<usize> = comp.iter().copied().filter(|&i| adj(i).len() == 3).collect();
    let walk = |start: usize, avoid: Option<usize>| -> Vec<usize> {
        let mut path = vec![start];
        let mut prev = avoid;
        let mut cur = start;
        loop {
            let next: Vec<usize> = adj(cur).into_iter().filter(|&x| Some(x) != prev).collect();
            if next.len() != 1 || branch.contains(&next[0]) {
                break;
            }
            prev = Some(cur);
            cur = next[0];
            path.push(cur);
        }
        path
    };
    if branch.is_empty() {
        // a path
        let mut ends = leaves.clone();
        ends.sort();
        let mut path = walk(ends[0], None);
        let multi: Vec<usize> = (0..n - 1).filter(|&k| bond(path[k], path[k + 1]) > 1).collect();
        if multi.is_empty() {
            return (CartanType::A, path);
        }
        let k = multi[0];
        if bond(path[k], path[k + 1]) == 3 {
            if !shorter(path[0], path[1]) {
                path.reverse();
            }
            return (CartanType::G, path);
        }
        if n == 4 && (k == 1) {
            // F4: long roots first
            if shorter(path[1], path[2]) {
                path.reverse();
            }
            return (CartanType::F, path);
        }
        if k == 0 && n > 2 {
            path.reverse();
        }
        let (a, b) = (path[n - 2], path[n - 1]);
        if n == 2 {
            // B2: alpha_2 short
            if !shorter(b, a) {
                path.reverse();
            }
            return (CartanType::B, path);
        }
        if shorter(b, a) {
            (CartanType::B, path)
        } else {
            (CartanType::C, path)
        }
    } else {
        let c = branch[0];
        let mut arms: Vec<Vec<usize>> = adj(c).into_iter().map(|s| walk(s, Some(c))).collect();
        arms.sort_by_key(|a| (a.len(), *a.last().unwrap()));
        let lens: Vec<usize> = arms.iter().map(Vec::len).collect();
        let rev = |a: &Vec<usize>| a.iter().rev().copied().collect::<Vec<usize>>();
        match (lens[0], lens[1]) {
            (1, 1) if lens[2] == 1 => {
                // D4: legs in increasing label order give the identity on a standard diagram
                (CartanType::D, vec![arms[0][0], c, arms[1][0], arms[2][0]])
            }
            (1, 1) => {
                let mut labels = rev(&arms[2]);
                labels.push(c);
                labels.push(arms[0][0]);
                labels.push(arms[1][0]);
                (CartanType::D, labels)
            }
            (1, 2) => {
                // E6, E7, E8: 1-3-4-5-..., 2 on 4
                let (a, b) = if lens[2] == 2 {
                    if arms[1].last() < arms[2].last() {
                        (arms[1].clone(), arms[2].clone())
                    } else {
                        (arms[2].clone(), arms[1].clone())
                    }
                } else {
                    (arms[1].clone(), arms[2].clone())
                };
                let mut labels = vec![a[1], arms[0][0], a[0], c];
                labels.extend(b.iter().copied());
                (CartanType::E, labels)
            }
            _ => panic!("unrecognized Dynkin diagram"),
        }
    }
}

impl RootDatum {
    /// Adjoint datum of an irreducible type.
    pub fn irreducible(ty: CartanType, rank: usize) -> Result<Self> {
        if !ty.valid_rank(rank) {
            return Err(Error::InvalidDatum(format!("no type {}{}", ty.letter(), rank)));
        }
        let roots = orthogonal_roots(ty, rank);
        let cartan = cartan_from_realization(&roots);
        Ok(Self::from_cartan(&cartan))
    }

    /// Adjoint datum attached to an arbitrary (possibly reducible) Cartan matrix.
    pub fn from_cartan(cartan: &[Vec<i64>]) -> Self {
        let r = cartan.len();
        let roots: Vec<Vec<i64>> = (0..r)
            .map(|j| (0..r).map(|k| i64::from(k == j)).collect())
            .collect();
        let coroots: Vec<Vec<i64>> = cartan.to_vec();
        let inv = inverse(&to_qmat(cartan)).expect("Cartan matrix is invertible");
        let weights = (0..r)
            .map(|j| RatVec((0..r).map(|k| inv[k][j].clone()).collect()))
            .collect();
        let height_vec = vec![1; r];
        let mut dat = RootDatum {
            dim: r,
            rank: r,
            cartan: cartan.to_vec(),
            roots,
            coroots,
            weights,
            gl: None,
            blocks: Vec::new(),
            block_of: vec![0; r],
            positive: Vec::new(),
            height_vec,
            coroot_solver: Vec::new(),
        };
        dat.finish();
        dat
    }

    /// The datum of `GL_n` with cocharacter lattice `Z^n`.
    pub fn gl(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidDatum("GL_n needs n >= 1".into()));
        }
        let r = n - 1;
        let diff = |i: usize| -> Vec<i64> {
            (0..n)
                .map(|k| if k == i { 1 } else if k == i + 1 { -1 } else { 0 })
                .collect()
        };
        let roots: Vec<Vec<i64>> = (0..r).map(diff).collect();
        let coroots = roots.clone();
        let cartan: Vec<Vec<i64>> = (0..r)
            .map(|i| (0..r).map(|j| dot_i(&coroots[i], &roots[j])).collect())
            .collect();
        let weights = (0..r)
            .map(|j| RatVec((0..n).map(|k| qi(i64::from(k <= j))).collect()))
            .collect();
        let height_vec = (0..n).map(|k| (n - 1 - k) as i64).collect();
        let mut dat = RootDatum {
            dim: n,
            rank: r,
            cartan,
            roots,
            coroots,
            weights,
            gl: Some(n),
            blocks: Vec::new(),
            block_of: vec![0; r],
            positive: Vec::new(),
            height_vec,
            coroot_solver: Vec::new(),
        };
        dat.finish();
        Ok(dat)
    }

    fn finish(&mut self) {
        let r = self.rank;
        // blocks = connected components
        let mut seen = vec![false; r];
        let mut blocks = Vec::new();
        for s in 0..r {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut k = 0;
            while k < comp.len() {
                let i = comp[k];
                for j in 0..r {
                    if !seen[j] && self.cartan[i][j] != 0 {
                        seen[j] = true;
                        comp.push(j);
                    }
                }
                k += 1;
            }
            comp.sort();
            let (ty, labels) = recognize(&self.cartan, &comp);
            let rank = labels.len();
            let eps = if ty == CartanType::E || self.gl.is_some() {
                None
            } else {
                let roots = orthogonal_roots(ty, rank);
                let expected = cartan_from_realization(&roots);
                let ok = (0..rank).all(|a| {
                    (0..rank).all(|b| expected[a][b] == self.cartan[labels[a]][labels[b]])
                });
                ok.then(|| EpsRealization {
                    coroots: roots.iter().map(coroot_of).collect(),
                    roots,
                })
            };
            blocks.push(Block { ty, rank, labels, eps });
        }
        for (b, blk) in blocks.iter().enumerate() {
            for &l in &blk.labels {
                self.block_of[l] = b;
            }
        }
        self.blocks = blocks;
        let at = to_qmat(&crate::linalg::transpose(&self.cartan));
        self.coroot_solver = if r == 0 { Vec::new() } else { inverse(&at).expect("invertible") };
        self.positive = self.generate_positive_roots();
    }

    fn generate_positive_roots(&self) -> Vec<Root> {
        let mut out: Vec<Root> = Vec::new();
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue: VecDeque<Root> = VecDeque::new();
        for i in 0..self.rank {
            let rt = Root { root: self.roots[i].clone(), coroot: self.coroots[i].clone() };
            seen.insert(rt.root.clone());
            queue.push_back(rt);
        }
        while let Some(rt) = queue.pop_front() {
            for i in 0..self.rank {
                let c = dot_i(&self.coroots[i], &rt.root);
                let root: Vec<i64> =
                    rt.root.iter().zip(&self.roots[i]).map(|(a, b)| a - c * b).collect();
                if self.height(&root) <= 0 || seen.contains(&root) {
                    continue;
                }
                let c2 = dot_i(&rt.coroot, &self.roots[i]);
                let coroot: Vec<i64> =
                    rt.coroot.iter().zip(&self.coroots[i]).map(|(a, b)| a - c2 * b).collect();
                seen.insert(root.clone());
                queue.push_back(Root { root, coroot });
            }
            out.push(rt);
        }
        out.sort_by_key(|r| (self.height(&r.root), r.root.clone()));
        out
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn gl_n(&self) -> Option<usize> {
        self.gl
    }

    pub fn is_adjoint(&self) -> bool {
        self.gl.is_none()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn block_of(&self, label: usize) -> usize {
        self.block_of[label]
    }

    pub fn simple_root(&self, i: usize) -> &[i64] {
        &self.roots[i]
    }

    pub fn simple_coroot(&self, i: usize) -> &[i64] {
        &self.coroots[i]
    }

    pub fn simple_coroot_vec(&self, i: usize) -> RatVec {
        RatVec::from_ints(&self.coroots[i])
    }

    pub fn fundamental_weight(&self, i: usize) -> &RatVec {
        &self.weights[i]
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    /// `<v, 2 rho>` style height of a root functional; positive iff the root is positive.
    pub fn height(&self, beta: &[i64]) -> i64 {
        dot_i(&self.height_vec, beta)
    }

    pub fn is_positive_root(&self, beta: &[i64]) -> bool {
        self.height(beta) > 0
    }

    /// Type string such as `A3`, `GL4` or `A1xA2`.
    pub fn type_name(&self) -> String {
        if let Some(n) = self.gl {
            return format!("GL{n}");
        }
        if self.blocks.is_empty() {
            return "T".into();
        }
        self.blocks.iter().map(Block::name).collect::<Vec<_>>().join("x")
    }

    /// Fundamental coweight `w_i^v` (for `GL_n`, the integral representative `(1^i, 0^{n-i})`).
    pub fn fundamental_coweight(&self, i: usize) -> RatVec {
        match self.gl {
            Some(n) => RatVec((0..n).map(|k| qi(i64::from(k <= i))).collect()),
            None => RatVec((0..self.rank).map(|k| qi(i64::from(k == i))).collect()),
        }
    }

    fn check_dim(&self, v: &RatVec) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: v.len() });
        }
        Ok(())
    }

    /// Pairing of a coweight with a weight functional.
    pub fn pair(&self, v: &RatVec, w: &RatVec) -> Result<Q> {
        self.check_dim(v)?;
        self.check_dim(w)?;
        Ok(v.dot(w))
    }

    /// `<v, alpha_i>`.
    pub fn pair_root(&self, v: &RatVec, i: usize) -> Q {
        v.dot_int(&self.roots[i])
    }

    /// `<v, omega_i>`.
    pub fn pair_weight(&self, v: &RatVec, i: usize) -> Q {
        v.dot(&self.weights[i])
    }

    /// `<v, rho>`.
    pub fn pair_rho(&self, v: &RatVec) -> Q {
        (0..self.rank).map(|i| self.pair_weight(v, i)).sum()
    }

    /// `<v, beta>` for a root functional.
    pub fn pair_functional(&self, v: &RatVec, beta: &[i64]) -> Q {
        v.dot_int(beta)
    }

    /// `rho = sum_i omega_i` as a functional.
    pub fn rho(&self) -> RatVec {
        let mut acc = RatVec::zeros(self.dim);
        for w in &self.weights {
            acc = &acc + w;
        }
        acc
    }

    /// Coroot coordinates `c` of the semisimple part: `v = z + sum c_i alpha_i^v` with `z` central.
    pub fn coroot_coords(&self, v: &RatVec) -> Vec<Q> {
        let m: Vec<Q> = (0..self.rank).map(|j| self.pair_root(v, j)).collect();
        crate::linalg::mat_vec(&self.coroot_solver, &m)
    }

    /// `sum_i c_i alpha_i^v`.
    pub fn from_coroot_coords(&self, c: &[Q]) -> RatVec {
        let mut v = RatVec::zeros(self.dim);
        for (i, ci) in c.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            for (k, &x) in self.coroots[i].iter().enumerate() {
                if x != 0 {
                    v.0[k] += ci * qi(x);
                }
            }
        }
        v
    }

    /// Central component of `v` (zero for adjoint data).
    pub fn central_part(&self, v: &RatVec) -> RatVec {
        let c = self.coroot_coords(v);
        v - &self.from_coroot_coords(&c)
    }

    /// Whether `v` lies in the cocharacter lattice.
    pub fn in_lattice(&self, v: &RatVec) -> bool {
        v.is_integral()
    }

    pub fn is_dominant(&self, v: &RatVec) -> bool {
        (0..self.rank).all(|i| !self.pair_root(v, i).is_negative())
    }

    /// `I(v) = { i : <v, alpha_i> = 0 }`.
    pub fn centralizer_type(&self, v: &RatVec) -> Vec<usize> {
        (0..self.rank).filter(|&i| self.pair_root(v, i).is_zero()).collect()
    }

    pub fn is_central(&self, v: &RatVec) -> bool {
        (0..self.rank).all(|i| self.pair_root(v, i).is_zero())
    }

    pub fn simple_reflection(&self, i: usize) -> WeylElement {
        let d = self.dim;
        let mut mat = vec![0i64; d * d];
        for r in 0..d {
            for c in 0..d {
                mat[r * d + c] = i64::from(r == c) - self.coroots[i][r] * self.roots[i][c];
            }
        }
        WeylElement { d, mat: mat.clone(), inv: mat }
    }

    /// Reflection `v -> v - <v, β> β^∨` in a root.
    pub fn reflection(&self, r: &Root) -> WeylElement {
        let d = self.dim;
        let mut mat = vec![0i64; d * d];
        for i in 0..d {
            for j in 0..d {
                mat[i * d + j] = i64::from(i == j) - r.coroot[i] * r.root[j];
            }
        }
        WeylElement::from_involution(d, mat)
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement::identity(self.dim)
    }

    /// Dominant representative of the Weyl orbit of `v`, with `w` such that `w(v)` is it.
    pub fn dominantize(&self, v: &RatVec) -> (RatVec, WeylElement) {
        let mut cur = v.clone();
        let mut w = self.identity();
        loop {
            let neg = (0..self.rank).find(|&i| self.pair_root(&cur, i).is_negative());
            match neg {
                None => return (cur, w),
                Some(i) => {
                    let s = self.simple_reflection(i);
                    cur = s.apply(&cur);
                    w = s.compose(&w);
                }
            }
        }
    }

    /// `v1 <= v2` in the dominance order: `v2 - v1` is a non-negative combination of simple coroots.
    pub fn dominance_leq(&self, v1: &RatVec, v2: &RatVec) -> Result<bool> {
        self.check_dim(v1)?;
        self.check_dim(v2)?;
        for v in [v1, v2] {
            if !self.is_dominant(v) {
                return Err(Error::NotDominant(v.to_string()));
            }
        }
        Ok(self.cone_leq(v1, v2))
    }

    /// Same as [`Self::dominance_leq`] without the dominance precondition.
    pub fn cone_leq(&self, v1: &RatVec, v2: &RatVec) -> bool {
        let d = v2 - v1;
        let c = self.coroot_coords(&d);
        if c.iter().any(Signed::is_negative) {
            return false;
        }
        (&d - &self.from_coroot_coords(&c)).is_zero()
    }

    /// Whether `w(alpha_i) < 0`.
    pub fn is_right_descent(&self, w: &WeylElement, i: usize) -> bool {
        !self.is_positive_root(&w.act_functional(&self.roots[i]))
    }

    /// A reduced word `i_1 ... i_k` with `w = s_{i_1} ... s_{i_k}`.
    pub fn reduced_word(&self, w: &WeylElement) -> Vec<usize> {
        let mut word = Vec::new();
        let mut cur = w.clone();
        while let Some(i) = (0..self.rank).find(|&i| self.is_right_descent(&cur, i)) {
            cur = cur.compose(&self.simple_reflection(i));
            word.push(i);
        }
        word.reverse();
        word
    }

    pub fn from_word(&self, word: &[usize]) -> WeylElement {
        word.iter()
            .fold(self.identity(), |acc, &i| acc.compose(&self.simple_reflection(i)))
    }

    pub fn length(&self, w: &WeylElement) -> usize {
        self.positive
            .iter()
            .filter(|r| !self.is_positive_root(&w.act_functional(&r.root)))
            .count()
    }

    /// Longest element of the parabolic subgroup `W_J`.
    pub fn longest(&self, j: &[usize]) -> WeylElement {
        let mut w = self.identity();
        while let Some(&i) = j.iter().find(|&&i| !self.is_right_descent(&w, i)) {
            w = w.compose(&self.simple_reflection(i));
        }
        w
    }

    /// Whether `w` lies in `W_J`.
    pub fn in_parabolic(&self, w: &WeylElement, j: &[usize]) -> bool {
        self.reduced_word(w).iter().all(|i| j.contains(i))
    }

    /// All elements of `W` (breadth first by length). Intended for small ranks.
    pub fn weyl_group(&self) -> Vec<WeylElement> {
        self.min_coset_reps(&[])
    }

    /// Minimal length representatives `W^J` of `W / W_J`, in order of increasing length.
    pub fn min_coset_reps(&self, j: &[usize]) -> Vec<WeylElement> {
        let mut out = vec![self.identity()];
        let mut seen: HashSet<WeylElement> = out.iter().cloned().collect();
        let mut k = 0;
        while k < out.len() {
            let z = out[k].clone();
            for i in 0..self.rank {
                let s = self.simple_reflection(i);
                let y = s.compose(&z);
                if seen.contains(&y) {
                    continue;
                }
                // length must go up and y must stay in W^J
                if self.is_positive_root(&z.inverse().act_functional(&self.roots[i]))
                    && j.iter().all(|&jj| self.is_positive_root(&y.act_functional(&self.roots[jj])))
                {
                    seen.insert(y.clone());
                    out.push(y);
                }
            }
            k += 1;
        }
        out
    }

    /// Highest root of each block.
    pub fn highest_roots(&self) -> Vec<Root> {
        (0..self.blocks.len())
            .map(|b| {
                self.positive
                    .iter()
                    .filter(|r| self.root_block(&r.root) == Some(b))
                    .max_by_key(|r| self.height(&r.root))
                    .cloned()
                    .expect("every block has a highest root")
            })
            .collect()
    }

    /// Simple-root coefficients of a root functional.
    pub fn root_coefficients(&self, beta: &[i64]) -> Vec<i64> {
        match self.gl {
            None => beta.to_vec(),
            Some(_) => (0..self.rank).map(|i| beta[..=i].iter().sum()).collect(),
        }
    }

    /// Block containing the support of a root.
    pub fn root_block(&self, beta: &[i64]) -> Option<usize> {
        let c = self.root_coefficients(beta);
        let mut blk = None;
        for (i, ci) in c.iter().enumerate() {
            if *ci != 0 {
                let b = self.block_of[i];
                if blk.is_some_and(|x| x != b) {
                    return None;
                }
                blk = Some(b);
            }
        }
        blk
    }

    /// Converts lattice coordinates to display coordinates (orthogonal where available).
    pub fn to_display(&self, v: &RatVec) -> RatVec {
        if self.gl.is_some() {
            return v.clone();
        }
        let c = self.coroot_coords(v);
        let mut out = Vec::new();
        for b in &self.blocks {
            match &b.eps {
                Some(e) => {
                    let mut acc = RatVec::zeros(b.display_dim());
                    for (k, &l) in b.labels.iter().enumerate() {
                        acc = &acc + &e.coroots[k].scale(&c[l]);
                    }
                    out.extend(acc.0);
                }
                None => out.extend(b.labels.iter().map(|&l| v.0[l].clone())),
            }
        }
        RatVec(out)
    }

    /// Number of display coordinates.
    pub fn display_dim(&self) -> usize {
        match self.gl {
            Some(n) => n,
            None => self.blocks.iter().map(Block::display_dim).sum(),
        }
    }

    /// Inverse of [`Self::to_display`].
    pub fn from_display(&self, v: &RatVec) -> Result<RatVec> {
        if self.gl.is_some() {
            self.check_dim(v)?;
            return Ok(v.clone());
        }
        if v.len() != self.display_dim() {
            return Err(Error::DimensionMismatch { expected: self.display_dim(), got: v.len() });
        }
        let mut out = RatVec::zeros(self.dim);
        let mut off = 0;
        for b in &self.blocks {
            let dd = b.display_dim();
            let part = RatVec(v.0[off..off + dd].to_vec());
            match &b.eps {
                Some(e) => {
                    for (k, &l) in b.labels.iter().enumerate() {
                        out.0[l] = part.dot(&e.roots[k]);
                    }
                }
                None => {
                    for (k, &l) in b.labels.iter().enumerate() {
                        out.0[l] = part.0[k].clone();
                    }
                }
            }
            off += dd;
        }
        Ok(out)
    }

    /// Diagram automorphisms (permutations of `S` preserving the Cartan matrix).
    pub fn diagram_automorphisms(&self) -> Vec<Vec<usize>> {
        let r = self.rank;
        let mut out = Vec::new();
        let mut perm = vec![usize::MAX; r];
        let mut used = vec![false; r];
        self.extend_automorphism(0, &mut perm, &mut used, &mut out);
        out.sort();
        out
    }

    fn extend_automorphism(
        &self,
        k: usize,
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let r = self.rank;
        if k == r {
            out.push(perm.clone());
            return;
        }
        for t in 0..r {
            if used[t] {
                continue;
            }
            let ok = (0..k).all(|j| {
                self.cartan[k][j] == self.cartan[t][perm[j]]
                    && self.cartan[j][k] == self.cartan[perm[j]][t]
            });
            if ok {
                perm[k] = t;
                used[t] = true;
                self.extend_automorphism(k + 1, perm, used, out);
                used[t] = false;
                perm[k] = usize::MAX;
            }
        }
    }

    /// Sub-datum on a subset of labels (adjoint datum of the Levi `M_J`), labels kept in order.
    pub fn levi_cartan(&self, j: &[usize]) -> Vec<Vec<i64>> {
        j.iter().map(|&a| j.iter().map(|&b| self.cartan[a][b]).collect()).collect()
    }
}

pub fn dot_i(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Parses `"A3"`, `"D5"`, `"E6"`, `"GL4"`.
pub fn parse_type(s: &str) -> Result<RootDatum> {
    let s = s.trim();
    let bad = || Error::Parse(format!("unknown type {s:?}"));
    if let Some(n) = s.strip_prefix("GL") {
        let n: usize = n.parse().map_err(|_| bad())?;
        if n == 0 || n > 64 {
            return Err(bad());
        }
        return RootDatum::gl(n);
    }
    let mut chars = s.chars();
    let ty = match chars.next().ok_or_else(bad)? {
        'A' => CartanType::A,
        'B' => CartanType::B,
        'C' => CartanType::C,
        'D' => CartanType::D,
        'E' => CartanType::E,
        'F' => CartanType::F,
        'G' => CartanType::G,
        _ => return Err(bad()),
    };
    let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
    if rank > 64 {
        return Err(bad());
    }
    RootDatum::irreducible(ty, rank)
}

/// Counts used by tests: `|Phi^+|` for each irreducible type.
pub fn positive_root_count(ty: CartanType, n: usize) -> usize {
    match ty {
        CartanType::A => n * (n + 1) / 2,
        CartanType::B | CartanType::C => n * n,
        CartanType::D => n * (n - 1),
        CartanType::E => match n {
            6 => 36,
            7 => 63,
            _ => 120,
        },
        CartanType::F => 24,
        CartanType::G => 6,
    }
}

/// Orbit of `v` under the Weyl group, by breadth-first search (small ranks only).
pub fn weyl_orbit(rd: &RootDatum, v: &RatVec) -> Vec<RatVec> {
    let mut seen: HashMap<RatVec, ()> = HashMap::new();
    let mut queue = VecDeque::from([v.clone()]);
    seen.insert(v.clone(), ());
    let mut out = Vec::new();
    while let Some(x) = queue.pop_front() {
        for i in 0..rd.rank() {
            let y = rd.simple_reflection(i).apply(&x);
            if seen.insert(y.clone(), ()).is_none() {
                queue.push_back(y);
            }
        }
        out.push(x);
    }
    out
}

impl RootDatum {
    /// `w_0^J w_0`-type finite part of the length-zero element attached to a minuscule coweight.
    pub fn omega_finite_part(&self, node: usize) -> WeylElement {
        let b = self.block_of[node];
        let block_labels = &self.blocks[b].labels;
        let others: Vec<usize> = block_labels.iter().copied().filter(|&l| l != node).collect();
        self.longest(&others).compose(&self.longest(block_labels))
    }

    /// Whether the pairing of `v` with every positive root is in `{0, 1}`.
    pub fn is_minuscule(&self, v: &RatVec) -> bool {
        self.positive.iter().all(|r| {
            let p = self.pair_functional(v, &r.root);
            p.is_zero() || p == Q::one()
        })
    }
}
