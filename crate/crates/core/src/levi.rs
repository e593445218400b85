//! t-roots of the Levi factor of a parabolic subalgebra.
//!
//! A parabolic is designated by the set of simple roots kept in its Levi
//! factor `m = t + s`. The complementary nodes `D` span `t*`, and every root
//! φ restricts to `φ_t`, the orthogonal projection of φ away from the span of
//! the kept simple roots. Because the projection kills exactly the kept
//! directions, `φ_t` is determined by the coefficients of φ on `D`; that
//! integer vector (a [`TKey`]) is the canonical identity of a t-root and the
//! rational projection is derived data.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::{project, Rat, RatMat, RatVec};
use crate::report::Report;
use crate::rootsys::{Root, RootId, RootSystem, SimpleType};

/// The simple roots kept in the Levi factor (0-based node indices) and the
/// deleted complement. The kept set must be proper; it may be empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParabolicDesignation {
    rank: usize,
    kept: Vec<usize>,
    deleted: Vec<usize>,
}

impl ParabolicDesignation {
    pub fn from_kept(rank: usize, kept: &[usize]) -> Result<ParabolicDesignation> {
        let mut mask = vec![false; rank];
        for &i in kept {
            if i >= rank {
                return Err(Error::InvalidNode { node: i + 1, rank });
            }
            if mask[i] {
                return Err(Error::InvalidDesignation(format!("node {} listed twice", i + 1)));
            }
            mask[i] = true;
        }
        if mask.iter().all(|&k| k) {
            return Err(Error::InvalidDesignation("keeping every node gives q = g, which has no nilradical".into()));
        }
        Ok(ParabolicDesignation {
            rank,
            kept: (0..rank).filter(|&i| mask[i]).collect(),
            deleted: (0..rank).filter(|&i| !mask[i]).collect(),
        })
    }

    pub fn from_deleted(rank: usize, deleted: &[usize]) -> Result<ParabolicDesignation> {
        let mut mask = vec![true; rank];
        for &i in deleted {
            if i >= rank {
                return Err(Error::InvalidNode { node: i + 1, rank });
            }
            if !mask[i] {
                return Err(Error::InvalidDesignation(format!("node {} listed twice", i + 1)));
            }
            mask[i] = false;
        }
        let kept: Vec<usize> = (0..rank).filter(|&i| mask[i]).collect();
        ParabolicDesignation::from_kept(rank, &kept)
    }

    /// Nothing kept: the Levi factor is the Cartan subalgebra.
    pub fn borel(rank: usize) -> ParabolicDesignation {
        ParabolicDesignation::from_kept(rank, &[]).expect("borel designation is always valid")
    }

    /// Only node `j` deleted.
    pub fn maximal(rank: usize, j: usize) -> Result<ParabolicDesignation> {
        ParabolicDesignation::from_deleted(rank, &[j])
    }

    /// All `2^rank - 1` proper designations, ordered by the bitmask of kept nodes.
    pub fn all(rank: usize) -> Vec<ParabolicDesignation> {
        (0u32..(1u32 << rank) - 1)
            .map(|mask| {
                let kept: Vec<usize> = (0..rank).filter(|&i| mask & (1 << i) != 0).collect();
                ParabolicDesignation::from_kept(rank, &kept).expect("proper subset")
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn kept(&self) -> &[usize] {
        &self.kept
    }

    pub fn deleted(&self) -> &[usize] {
        &self.deleted
    }

    /// ℓ(t), the dimension of the center of the Levi factor.
    pub fn t_rank(&self) -> usize {
        self.deleted.len()
    }

    /// ℓ(s), the rank of the semisimple part.
    pub fn s_rank(&self) -> usize {
        self.kept.len()
    }

    pub fn is_borel(&self) -> bool {
        self.kept.is_empty()
    }

    pub fn key_of(&self, root: &Root) -> TKey {
        TKey(self.deleted.iter().map(|&j| root.coeffs()[j]).collect())
    }
}

impl fmt::Display for ParabolicDesignation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one_based = |v: &[usize]| v.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(",");
        write!(f, "keep {{{}}} delete {{{}}}", one_based(&self.kept), one_based(&self.deleted))
    }
}

/// Coefficients of a t-weight over the simple t-roots, indexed by the deleted nodes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TKey(pub Vec<i64>);

impl TKey {
    pub fn zero(len: usize) -> TKey {
        TKey(vec![0; len])
    }

    pub fn unit(len: usize, j: usize) -> TKey {
        let mut k = TKey::zero(len);
        k.0[j] = 1;
        k
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// `+1` if nonzero with all entries ≥ 0, `-1` if nonzero with all ≤ 0, else 0.
    pub fn sign(&self) -> i64 {
        if self.is_zero() {
            0
        } else if self.0.iter().all(|&x| x >= 0) {
            1
        } else if self.0.iter().all(|&x| x <= 0) {
            -1
        } else {
            0
        }
    }

    pub fn is_positive(&self) -> bool {
        self.sign() > 0
    }

    /// `o(ν)`, the sum of the coefficients.
    pub fn order(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn add(&self, other: &TKey) -> TKey {
        TKey(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &TKey) -> TKey {
        TKey(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> TKey {
        TKey(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, k: i64) -> TKey {
        TKey(self.0.iter().map(|a| k * a).collect())
    }

    /// `self + k * other`.
    pub fn add_scaled(&self, k: i64, other: &TKey) -> TKey {
        TKey(self.0.iter().zip(&other.0).map(|(a, b)| a + k * b).collect())
    }
}

/// Ordered like roots: by order, then lexicographically.
impl Ord for TKey {
    fn cmp(&self, other: &TKey) -> std::cmp::Ordering {
        (self.order(), &self.0).cmp(&(other.order(), &other.0))
    }
}

impl PartialOrd for TKey {
    fn partial_cmp(&self, other: &TKey) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for TKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// A t-root: its key and its projection `φ_t` in simple-root coordinates.
/// Identity and ordering use the key only.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TRoot {
    pub key: TKey,
    pub vec: RatVec,
}

impl PartialEq for TRoot {
    fn eq(&self, other: &TRoot) -> bool {
        self.key == other.key
    }
}

impl Eq for TRoot {}

impl std::hash::Hash for TRoot {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.key.hash(state);
    }
}

impl Ord for TRoot {
    fn cmp(&self, other: &TRoot) -> std::cmp::Ordering {
        self.key.cmp(&other.key)
    }
}

impl PartialOrd for TRoot {
    fn partial_cmp(&self, other: &TRoot) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Orthogonal projection onto the orthogonal complement of the kept simple roots.
#[derive(Clone, Debug)]
pub struct Projector {
    kept: Vec<usize>,
    // inverse of the Gram matrix of the kept simple roots
    inv: RatMat,
}

impl Projector {
    pub fn new(rs: &RootSystem, des: &ParabolicDesignation) -> Result<Projector> {
        let kept = des.kept().to_vec();
        let span_gram = RatMat::from_ints(
            &kept.iter().map(|&a| kept.iter().map(|&b| rs.gram()[a][b]).collect()).collect::<Vec<_>>(),
        );
        let cols = (0..kept.len())
            .map(|i| project(&span_gram, &RatVec::unit(kept.len(), i)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Projector { kept, inv: RatMat(cols).transpose() })
    }

    /// `γ_t = γ - γ_s` for an integer vector γ.
    pub fn t_part(&self, rs: &RootSystem, coeffs: &[i64]) -> RatVec {
        let pairings = RatVec(
            self.kept
                .iter()
                .map(|&a| Rat::int((0..rs.rank()).map(|k| coeffs[k] * rs.gram()[k][a]).sum()))
                .collect(),
        );
        let c = self.inv.mul_vec(&pairings);
        let mut out = RatVec::from_ints(coeffs);
        for (&a, &ci) in self.kept.iter().zip(c.iter()) {
            out[a] = out[a] - ci;
        }
        out
    }
}

/// The t-root of φ, or `None` when φ lies in the Levi factor.
pub fn troot_of(rs: &RootSystem, des: &ParabolicDesignation, phi: &Root) -> Result<Option<TRoot>> {
    let key = des.key_of(phi);
    if key.is_zero() {
        return Ok(None);
    }
    let kept = des.kept();
    let span_gram = RatMat::from_ints(
        &kept.iter().map(|&a| kept.iter().map(|&b| rs.gram()[a][b]).collect()).collect::<Vec<_>>(),
    );
    let pairings = RatVec(kept.iter().map(|&a| Rat::int(rs.form_int(phi.coeffs(), &unit(rs.rank(), a)))).collect());
    let c = project(&span_gram, &pairings)?;
    let mut vec = phi.to_ratvec();
    for (&a, &ci) in kept.iter().zip(c.iter()) {
        vec[a] = vec[a] - ci;
    }
    Ok(Some(TRoot { key, vec }))
}

fn unit(len: usize, i: usize) -> Vec<i64> {
    let mut e = vec![0; len];
    e[i] = 1;
    e
}

/// Roots φ of the list with `φ + α ∉ Δ` for every kept simple α.
pub fn highest_weight_roots(rs: &RootSystem, roots: &[RootId], kept: &[usize]) -> Vec<RootId> {
    let simples: Vec<RootId> = kept.iter().map(|&i| rs.simple_root(i)).collect();
    roots.iter().copied().filter(|&phi| simples.iter().all(|&a| rs.sum(phi, a).is_none())).collect()
}

/// Roots φ of the list with `φ - α ∉ Δ` for every kept simple α.
pub fn lowest_weight_roots(rs: &RootSystem, roots: &[RootId], kept: &[usize]) -> Vec<RootId> {
    let simples: Vec<RootId> = kept.iter().map(|&i| rs.simple_root(i)).collect();
    roots.iter().copied().filter(|&phi| simples.iter().all(|&a| rs.diff(phi, a).is_none())).collect()
}

/// A t-root space `g_ν` as its set of roots with its irreducibility certificates.
#[derive(Clone, Debug)]
pub struct TRootSpace {
    pub nu: TRoot,
    pub roots: Vec<RootId>,
    pub highest: RootId,
    pub lowest: RootId,
}

impl TRootSpace {
    pub fn dim(&self) -> usize {
        self.roots.len()
    }

    pub fn key(&self) -> &TKey {
        &self.nu.key
    }
}

/// Endpoints of the ν-string through γ among `R ∪ {0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TRootString {
    pub p: i64,
    pub q: i64,
    /// Every `j` with `γ + jν ∈ R ∪ {0}`, ascending.
    pub members: Vec<i64>,
}

impl TRootString {
    pub fn is_interval(&self) -> bool {
        self.members.len() as i64 == self.q - self.p + 1
    }
}

/// The t-root system of a parabolic designation.
#[derive(Clone, Debug)]
pub struct TRootSystem<'a> {
    rs: &'a RootSystem,
    des: ParabolicDesignation,
    projector: Projector,
    spaces: Vec<TRootSpace>,
    index: HashMap<TKey, usize>,
    levi_roots: Vec<RootId>,
    simples: Vec<TRoot>,
    betas: Vec<RatVec>,
    // (β_j, β_k) = t_gram[j][k] / t_den
    t_gram: Vec<Vec<i64>>,
    t_den: i64,
    delta_n: RatVec,
}

/// Builds the t-root system of `des`, certifying irreducibility of every space.
pub fn troot_system<'a>(rs: &'a RootSystem, des: &ParabolicDesignation) -> Result<TRootSystem<'a>> {
    if des.rank() != rs.rank() {
        return Err(Error::InvalidDesignation(format!(
            "designation has rank {}, root system has rank {}",
            des.rank(),
            rs.rank()
        )));
    }
    let projector = Projector::new(rs, des)?;
    let tl = des.t_rank();

    let mut groups: BTreeMap<TKey, Vec<RootId>> = BTreeMap::new();
    let mut levi_roots = Vec::new();
    for id in rs.ids() {
        let key = des.key_of(rs.root(id));
        if key.is_zero() {
            levi_roots.push(id);
        } else {
            groups.entry(key).or_default().push(id);
        }
    }

    let mut spaces = Vec::with_capacity(groups.len());
    for (key, roots) in groups {
        let highest = highest_weight_roots(rs, &roots, des.kept());
        let lowest = lowest_weight_roots(rs, &roots, des.kept());
        if highest.len() != 1 || lowest.len() != 1 {
            return Err(Error::IrreducibilityViolation(format!(
                "{} {}: t-root {} has {} highest and {} lowest weight roots",
                rs.simple_type(),
                des,
                key,
                highest.len(),
                lowest.len()
            )));
        }
        let vec = projector.t_part(rs, rs.root(highest[0]).coeffs());
        spaces.push(TRootSpace { nu: TRoot { key, vec }, roots, highest: highest[0], lowest: lowest[0] });
    }
    let index = spaces.iter().enumerate().map(|(i, s)| (s.nu.key.clone(), i)).collect::<HashMap<_, _>>();

    let betas: Vec<RatVec> =
        des.deleted().iter().map(|&j| projector.t_part(rs, &unit(rs.rank(), j))).collect();
    let t_rat: Vec<Vec<Rat>> =
        betas.iter().map(|b| betas.iter().map(|c| crate::rootsys::form(rs, b, c)).collect()).collect();
    let t_den = t_rat.iter().flatten().fold(1i64, |acc, r| {
        let d = r.denom();
        acc / gcd(acc, d) * d
    });
    let t_gram: Vec<Vec<i64>> =
        t_rat.iter().map(|row| row.iter().map(|r| (*r * Rat::int(t_den)).numer()).collect()).collect();

    // indecomposable positive t-roots
    let positive_keys: Vec<&TKey> = spaces.iter().map(|s| &s.nu.key).filter(|k| k.is_positive()).collect();
    let simples: Vec<TRoot> = spaces
        .iter()
        .filter(|s| s.nu.key.is_positive())
        .filter(|s| {
            !positive_keys.iter().any(|mu| {
                let rest = s.nu.key.sub(mu);
                rest.is_positive() && index.contains_key(&rest)
            })
        })
        .map(|s| s.nu.clone())
        .collect();

    let delta_n = spaces
        .iter()
        .filter(|s| s.nu.key.is_positive())
        .fold(RatVec::zeros(rs.rank()), |acc, s| acc.axpy(Rat::int(s.dim() as i64), &s.nu.vec));

    debug_assert_eq!(betas.len(), tl);
    Ok(TRootSystem {
        rs,
        des: des.clone(),
        projector,
        spaces,
        index,
        levi_roots,
        simples,
        betas,
        t_gram,
        t_den,
        delta_n,
    })
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl<'a> TRootSystem<'a> {
    pub fn root_system(&self) -> &'a RootSystem {
        self.rs
    }

    pub fn designation(&self) -> &ParabolicDesignation {
        &self.des
    }

    pub fn projector(&self) -> &Projector {
        &self.projector
    }

    /// All t-root spaces, ordered by key.
    pub fn spaces(&self) -> &[TRootSpace] {
        &self.spaces
    }

    pub fn space(&self, key: &TKey) -> Option<&TRootSpace> {
        self.index.get(key).map(|&i| &self.spaces[i])
    }

    /// Membership in R.
    pub fn contains(&self, key: &TKey) -> bool {
        self.index.contains_key(key)
    }

    /// Membership in `R ∪ {0}`.
    pub fn contains_or_zero(&self, key: &TKey) -> bool {
        key.is_zero() || self.contains(key)
    }

    /// The spaces of `R_+ = R_n`, whose roots make up the nilradical.
    pub fn positive_spaces(&self) -> impl Iterator<Item = &TRootSpace> {
        self.spaces.iter().filter(|s| s.nu.key.is_positive())
    }

    /// Δ(n): positive roots outside the Levi factor.
    pub fn nilradical_roots(&self) -> BTreeSet<RootId> {
        self.positive_spaces().flat_map(|s| s.roots.iter().copied()).collect()
    }

    /// Δ(m): roots of the Levi factor.
    pub fn levi_roots(&self) -> &[RootId] {
        &self.levi_roots
    }

    /// Indecomposable elements of `R_+`, ordered by key.
    pub fn simples(&self) -> &[TRoot] {
        &self.simples
    }

    /// `β_j = (α_j)_t` for each deleted node `j`, in node order.
    pub fn betas(&self) -> &[RatVec] {
        &self.betas
    }

    /// Projection of a key through `Σ key_j β_j`.
    pub fn vec_of_key(&self, key: &TKey) -> RatVec {
        key.0
            .iter()
            .zip(&self.betas)
            .fold(RatVec::zeros(self.rs.rank()), |acc, (&k, b)| acc.axpy(Rat::int(k), b))
    }

    pub fn troot(&self, key: &TKey) -> Option<&TRoot> {
        self.space(key).map(|s| &s.nu)
    }

    /// `(μ, ν)` computed from the projected vectors.
    pub fn troot_inner(&self, mu: &TRoot, nu: &TRoot) -> Rat {
        self.rs.form(&mu.vec, &nu.vec)
    }

    /// `(μ, ν)` computed from keys through the Gram matrix of the β_j.
    pub fn inner_keys(&self, mu: &TKey, nu: &TKey) -> Rat {
        Rat::new(self.inner_keys_scaled(mu, nu), self.t_den)
    }

    /// Positive multiple of `(μ, ν)`; only its sign and vanishing are meaningful.
    fn inner_keys_scaled(&self, mu: &TKey, nu: &TKey) -> i64 {
        let mut acc = 0;
        for (j, &a) in mu.0.iter().enumerate() {
            if a != 0 {
                for (k, &b) in nu.0.iter().enumerate() {
                    acc += a * b * self.t_gram[j][k];
                }
            }
        }
        acc
    }

    pub fn delta_n(&self) -> &RatVec {
        &self.delta_n
    }

    /// Roots of `g_μ` bracketed with roots of `g_ν` that land on a root.
    pub fn bracket_image(&self, mu: &TKey, nu: &TKey) -> Result<BTreeSet<RootId>> {
        let (Some(a), Some(b)) = (self.space(mu), self.space(nu)) else {
            return Err(Error::InvalidPair(format!("{mu} or {nu} is not a t-root")));
        };
        if mu.add(nu).is_zero() {
            return Err(Error::InvalidPair(format!("{mu} + {nu} = 0 brackets into the Levi factor")));
        }
        let mut out = BTreeSet::new();
        for &x in &a.roots {
            for &y in &b.roots {
                if let Some(z) = self.rs.sum(x, y) {
                    out.insert(z);
                }
            }
        }
        Ok(out)
    }

    /// Sign rules relating `(μ, ν)` to membership of `μ ± ν` in R.
    pub fn sign_rule_check(&self, mu: &TKey, nu: &TKey) -> Report {
        let mut report = Report::new();
        let ip = self.inner_keys_scaled(mu, nu);
        let sum = mu.add(nu);
        let diff = mu.sub(nu);
        if ip < 0 && !sum.is_zero() {
            report.check(self.contains(&sum), || format!("({mu},{nu}) < 0 but {mu}+{nu} not in R"));
        }
        if ip > 0 && !diff.is_zero() {
            report.check(self.contains(&diff), || format!("({mu},{nu}) > 0 but {mu}-{nu} not in R"));
        }
        if ip == 0 {
            report.check(self.contains(&sum) == self.contains(&diff), || {
                format!("({mu},{nu}) = 0 but exactly one of {mu}±{nu} is in R")
            });
        }
        report
    }

    /// The ν-string through γ (γ = `None` stands for the zero weight).
    pub fn troot_string(&self, gamma: Option<&TKey>, nu: &TKey) -> TRootString {
        let zero = TKey::zero(self.des.t_rank());
        let gamma = gamma.unwrap_or(&zero);
        let bound = 2 * self.rs.marks().iter().copied().max().unwrap_or(1) + 1;
        let members: Vec<i64> =
            (-bound..=bound).filter(|&j| self.contains_or_zero(&gamma.add_scaled(j, nu))).collect();
        let p = members.first().copied().unwrap_or(0).min(0);
        let q = members.last().copied().unwrap_or(0).max(0);
        TRootString { p, q, members }
    }

    /// Interval, endpoint-sign and bracket non-vanishing laws of a string.
    pub fn string_contract(&self, gamma: Option<&TKey>, nu: &TKey) -> Report {
        let zero = TKey::zero(self.des.t_rank());
        let g = gamma.unwrap_or(&zero);
        let s = self.troot_string(gamma, nu);
        let mut report = Report::new();
        report.check(s.members.contains(&0), || format!("string of {nu} through {g} misses 0"));
        report.check(s.is_interval(), || format!("string of {nu} through {g} is not an interval: {:?}", s.members));
        let at = |j: i64| g.add_scaled(j, nu);
        if s.p == 0 && s.q == 0 {
            report.check(self.inner_keys_scaled(g, nu) == 0, || {
                format!("string of {nu} through {g} is trivial but ({g},{nu}) != 0")
            });
        }
        if s.p < s.q {
            report.check(self.inner_keys_scaled(&at(s.q), nu) > 0, || {
                format!("string of {nu} through {g}: (γ+qν, ν) <= 0 at q={}", s.q)
            });
            report.check(self.inner_keys_scaled(&at(s.p), nu) < 0, || {
                format!("string of {nu} through {g}: (γ+pν, ν) >= 0 at p={}", s.p)
            });
        }
        let neg_nu = nu.neg();
        for m in s.p..s.q {
            report.check(self.brackets_nonzero(nu, &at(m)), || {
                format!("[g_{nu}, g_(γ+{m}ν)] vanishes for γ={g}")
            });
        }
        for m in s.p + 1..=s.q {
            report.check(self.brackets_nonzero(&neg_nu, &at(m)), || {
                format!("[g_-{nu}, g_(γ+{m}ν)] vanishes for γ={g}")
            });
        }
        report
    }

    /// Whether `[g_a, g_b]` is nonzero at root level; `b = 0` means the Levi factor.
    fn brackets_nonzero(&self, a: &TKey, b: &TKey) -> bool {
        if b.is_zero() {
            // g_a is a nonzero h-module with nonzero weights
            return true;
        }
        let (Some(sa), Some(sb)) = (self.space(a), self.space(b)) else {
            return false;
        };
        sa.roots.iter().any(|&x| sb.roots.iter().any(|&y| y == self.rs.neg(x) || self.rs.sum(x, y).is_some()))
    }

    /// δ_n is positive on `R_+` and negative on `-R_+`.
    pub fn delta_n_check(&self) -> Report {
        let mut report = Report::new();
        for s in &self.spaces {
            let v = self.rs.form(&self.delta_n, &s.nu.vec);
            let want = s.nu.key.sign();
            report.check(v.signum() == want, || format!("(δ_n, {}) = {v} has the wrong sign", s.nu.key));
        }
        report
    }

    pub fn to_doc(&self) -> TRootSystemDoc {
        let root = |id: RootId| self.rs.root(id).clone();
        TRootSystemDoc {
            schema: TROOTS_SCHEMA.to_string(),
            simple_type: self.rs.simple_type(),
            kept: self.des.kept().iter().map(|i| i + 1).collect(),
            deleted: self.des.deleted().iter().map(|i| i + 1).collect(),
            spaces: self
                .spaces
                .iter()
                .map(|s| SpaceDoc {
                    key: s.nu.key.clone(),
                    vec: s.nu.vec.clone(),
                    dim: s.dim(),
                    roots: s.roots.iter().map(|&r| root(r)).collect(),
                    highest: root(s.highest),
                    lowest: root(s.lowest),
                })
                .collect(),
            simples: self.simples.iter().map(|t| t.key.clone()).collect(),
            delta_n: self.delta_n.clone(),
        }
    }
}

pub const TROOTS_SCHEMA: &str = "troot.troots/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceDoc {
    pub key: TKey,
    pub vec: RatVec,
    pub dim: usize,
    pub roots: Vec<Root>,
    pub highest: Root,
    pub lowest: Root,
}

/// JSON document emitted by `troot troots`. Node indices are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TRootSystemDoc {
    pub schema: String,
    #[serde(rename = "type")]
    pub simple_type: SimpleType,
    pub kept: Vec<usize>,
    pub deleted: Vec<usize>,
    pub spaces: Vec<SpaceDoc>,
    pub simples: Vec<TKey>,
    pub delta_n: RatVec,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::of_type(s.parse().unwrap()).unwrap()
    }

    fn ids(rs: &RootSystem, roots: &[&[i64]]) -> BTreeSet<RootId> {
        roots.iter().map(|c| rs.id_of(c).unwrap()).collect()
    }

    #[test]
    fn designation_validation() {
        assert!(ParabolicDesignation::from_kept(2, &[0, 1]).is_err());
        assert!(ParabolicDesignation::from_kept(2, &[2]).is_err());
        assert!(ParabolicDesignation::from_kept(2, &[1, 1]).is_err());
        assert!(ParabolicDesignation::from_deleted(2, &[]).is_err());
        let d = ParabolicDesignation::from_deleted(3, &[1]).unwrap();
        assert_eq!(d.kept(), &[0, 2]);
        assert_eq!(d.t_rank() + d.s_rank(), 3);
        assert_eq!(ParabolicDesignation::all(3).len(), 7);
    }

    #[test]
    fn troot_of_cases() {
        let a2 = rs("A2");
        let borel = ParabolicDesignation::borel(2);
        let a1 = Root::new(vec![1, 0]);
        let t = troot_of(&a2, &borel, &a1).unwrap().unwrap();
        assert_eq!(t.key, TKey(vec![1, 0]));
        assert_eq!(t.vec, RatVec::from_ints(&[1, 0]));

        let keep2 = ParabolicDesignation::from_kept(2, &[1]).unwrap();
        assert!(troot_of(&a2, &keep2, &Root::new(vec![0, 1])).unwrap().is_none());
        let t = troot_of(&a2, &keep2, &a1).unwrap().unwrap();
        assert_eq!(t.key, TKey(vec![1]));
        assert_eq!(t.vec, RatVec(vec![Rat::ONE, Rat::new(1, 2)]));
    }

    #[test]
    fn a2_keep_alpha2() {
        let a2 = rs("A2");
        let des = ParabolicDesignation::from_kept(2, &[1]).unwrap();
        let tr = troot_system(&a2, &des).unwrap();
        assert_eq!(tr.spaces().len(), 2);
        let beta = TKey(vec![1]);
        let g = tr.space(&beta).unwrap();
        assert_eq!(g.roots.iter().copied().collect::<BTreeSet<_>>(), ids(&a2, &[&[1, 0], &[1, 1]]));
        assert_eq!(a2.root(g.highest).coeffs(), &[1, 1]);
        assert_eq!(a2.root(g.lowest).coeffs(), &[1, 0]);
        assert_eq!(highest_weight_roots(&a2, &g.roots, des.kept()), vec![g.highest]);
        let nu = tr.troot(&beta).unwrap();
        assert_eq!(tr.troot_inner(nu, nu), Rat::new(3, 2));
        assert_eq!(tr.inner_keys(&beta, &beta), Rat::new(3, 2));
        // δ_n = 2β = 2α1 + α2, (δ_n, β) = 3
        assert_eq!(tr.delta_n(), &RatVec::from_ints(&[2, 1]));
        assert_eq!(tr.rs.form(tr.delta_n(), &nu.vec), Rat::int(3));
        assert_eq!(tr.simples().len(), 1);
        assert!(tr.delta_n_check().passed());
    }

    #[test]
    fn borel_a2() {
        let a2 = rs("A2");
        let tr = troot_system(&a2, &ParabolicDesignation::borel(2)).unwrap();
        assert_eq!(tr.spaces().len(), 6);
        assert!(tr.spaces().iter().all(|s| s.dim() == 1 && s.highest == s.roots[0]));
        let (a1, a2k) = (TKey(vec![1, 0]), TKey(vec![0, 1]));
        assert_eq!(tr.bracket_image(&a1, &a2k).unwrap(), ids(&a2, &[&[1, 1]]));
        assert!(tr.bracket_image(&a1, &a1).unwrap().is_empty());
        assert!(matches!(tr.bracket_image(&a1, &a1.neg()), Err(Error::InvalidPair(_))));
        assert!(tr.sign_rule_check(&a1, &a2k).passed());
        assert_eq!(tr.sign_rule_check(&a1, &a2k).checked, 1);
        assert_eq!(tr.sign_rule_check(&a1, &a1).checked, 0);
        let s = tr.troot_string(Some(&a1), &a2k);
        assert_eq!((s.p, s.q), (0, 1));
        let s0 = tr.troot_string(None, &a1);
        assert!(s0.p <= -1 && s0.q >= 1);
        assert!(tr.string_contract(Some(&a1), &a2k).passed());
        // δ_n = 2(α1+α2)
        assert_eq!(tr.delta_n(), &RatVec::from_ints(&[2, 2]));
        assert_eq!(tr.rs.form(tr.delta_n(), &RatVec::from_ints(&[1, 0])), Rat::int(2));
    }

    #[test]
    fn g2_mark_two_maximal_parabolic() {
        let g2 = rs("G2");
        // node 2 (long) has mark 2
        let des = ParabolicDesignation::maximal(2, 1).unwrap();
        let tr = troot_system(&g2, &des).unwrap();
        let keys: Vec<i64> = tr.spaces().iter().map(|s| s.key().0[0]).collect();
        assert_eq!(keys, vec![-2, -1, 1, 2]);
        let beta = TKey(vec![1]);
        let two = TKey(vec![2]);
        let image = tr.bracket_image(&beta, &beta).unwrap();
        assert_eq!(image, tr.space(&two).unwrap().roots.iter().copied().collect());
        let s = tr.troot_string(Some(&beta), &beta);
        assert_eq!((s.p, s.q), (-3, 1));
        assert!(tr.string_contract(Some(&beta), &beta).passed());
        assert_eq!(tr.space(&beta).unwrap().dim(), 4);
    }

    #[test]
    fn inner_routes_agree() {
        for (t, kept) in [("B3", vec![1]), ("F4", vec![0, 3]), ("E6", vec![1, 2, 4])] {
            let r = rs(t);
            let des = ParabolicDesignation::from_kept(r.rank(), &kept).unwrap();
            let tr = troot_system(&r, &des).unwrap();
            for a in tr.spaces() {
                assert_eq!(a.nu.vec, tr.vec_of_key(a.key()));
                for b in tr.spaces() {
                    assert_eq!(tr.troot_inner(&a.nu, &b.nu), tr.inner_keys(a.key(), b.key()));
                }
            }
        }
    }

    #[test]
    fn projection_route_matches_projector() {
        let r = rs("C4");
        let des = ParabolicDesignation::from_kept(4, &[1, 3]).unwrap();
        let p = Projector::new(&r, &des).unwrap();
        for root in r.roots() {
            let via_op = troot_of(&r, &des, root).unwrap().map(|t| t.vec);
            let via_cache = p.t_part(&r, root.coeffs());
            match via_op {
                Some(v) => assert_eq!(v, via_cache),
                None => assert!(via_cache.is_zero()),
            }
        }
    }

    #[test]
    fn doc_round_trips() {
        let a2 = rs("A2");
        let tr = troot_system(&a2, &ParabolicDesignation::from_kept(2, &[1]).unwrap()).unwrap();
        let doc = tr.to_doc();
        let back: TRootSystemDoc = serde_json::from_str(&serde_json::to_string(&doc).unwrap()).unwrap();
        assert_eq!(back, doc);
        assert_eq!(doc.kept, vec![2]);
        assert_eq!(doc.spaces.iter().map(|s| s.dim).collect::<Vec<_>>(), vec![2, 2]);
    }
}
