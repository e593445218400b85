//! Exhaustive verification sweeps, grouped by the law being checked.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bds::{
    classify, delete_node, extended_diagram, maximal_equal_rank, residue_bracket_check, residue_irreducibility,
    subalgebra_roots,
};
use crate::exactlin::{rank, Rat, RatVec};
use crate::levi::{troot_system, ParabolicDesignation, TKey, TRootSystem};
use crate::report::Report;
use crate::rootsys::{RootId, RootSystem, SimpleType};
use crate::series::series_check;

/// Failure messages kept per law; the count is always exact.
const MAX_EXAMPLES: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Law {
    /// t-root spaces partition Δ \ Δ(m), with Δ(g_-ν) = -Δ(g_ν).
    Partition,
    /// One highest and one lowest weight root per t-root space.
    Irreducibility,
    /// Simple t-roots are the β_j, independent, obtuse, and span R_+ over N.
    #[serde(rename = "simple_troots")]
    SimpleTRoots,
    /// [g_μ, g_ν] = g_{μ+ν}.
    BracketLaw,
    /// Sign of (μ, ν) versus membership of μ ± ν.
    SignRules,
    /// Strings are intervals with the endpoint signs and non-vanishing brackets.
    Strings,
    /// (δ_n, ν) > 0 on R_+.
    DeltaN,
    /// Closed-form central series equal their oracles.
    CentralSeries,
    /// Deleted extended diagram classifies like the subalgebra's own roots.
    BorelDeSiebenthal,
    /// Residue classes are irreducible and bracket additively.
    Residues,
    /// Prime-mark nodes give maximal subalgebras of full rank.
    MaximalEqualRank,
}

impl Law {
    pub const ALL: [Law; 11] = [
        Law::Partition,
        Law::Irreducibility,
        Law::SimpleTRoots,
        Law::BracketLaw,
        Law::SignRules,
        Law::Strings,
        Law::DeltaN,
        Law::CentralSeries,
        Law::BorelDeSiebenthal,
        Law::Residues,
        Law::MaximalEqualRank,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Law::Partition => "partition",
            Law::Irreducibility => "irreducibility",
            Law::SimpleTRoots => "simple_troots",
            Law::BracketLaw => "bracket_law",
            Law::SignRules => "sign_rules",
            Law::Strings => "strings",
            Law::DeltaN => "delta_n",
            Law::CentralSeries => "central_series",
            Law::BorelDeSiebenthal => "borel_de_siebenthal",
            Law::Residues => "residues",
            Law::MaximalEqualRank => "maximal_equal_rank",
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Per-law tally.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub checked: usize,
    pub failed: usize,
    pub examples: Vec<String>,
}

impl Tally {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    fn absorb(&mut self, report: Report) {
        self.checked += report.checked;
        self.failed += report.failures.len();
        let room = MAX_EXAMPLES.saturating_sub(self.examples.len());
        self.examples.extend(report.failures.into_iter().take(room));
    }

    fn merge(&mut self, other: Tally) {
        self.checked += other.checked;
        self.failed += other.failed;
        let room = MAX_EXAMPLES.saturating_sub(self.examples.len());
        self.examples.extend(other.examples.into_iter().take(room));
    }
}

pub type Tallies = BTreeMap<Law, Tally>;

fn record(t: &mut Tallies, law: Law, report: Report) {
    t.entry(law).or_default().absorb(report);
}

fn merge_all(into: &mut Tallies, from: Tallies) {
    for (law, tally) in from {
        into.entry(law).or_default().merge(tally);
    }
}

/// Every t-root law for one designation.
pub fn check_designation(rs: &RootSystem, des: &ParabolicDesignation) -> Tallies {
    let mut t = Tallies::new();
    let ctx = format!("{} {des}", rs.simple_type());
    let tr = match troot_system(rs, des) {
        Ok(tr) => tr,
        Err(e) => {
            let mut r = Report::new();
            r.check(false, || format!("{ctx}: {e}"));
            record(&mut t, Law::Irreducibility, r);
            return t;
        }
    };
    record(&mut t, Law::Partition, partition(&tr).context(&ctx));
    record(&mut t, Law::Irreducibility, irreducibility(&tr).context(&ctx));
    record(&mut t, Law::SimpleTRoots, simple_troots(&tr).context(&ctx));
    record(&mut t, Law::BracketLaw, bracket_law(&tr).context(&ctx));
    record(&mut t, Law::SignRules, sign_rules(&tr).context(&ctx));
    record(&mut t, Law::Strings, strings(&tr).context(&ctx));
    record(&mut t, Law::DeltaN, tr.delta_n_check().context(&ctx));
    record(&mut t, Law::CentralSeries, series_check(&tr).context(&ctx));
    t
}

fn partition(tr: &TRootSystem<'_>) -> Report {
    let rs = tr.root_system();
    let mut r = Report::new();
    let total: usize = tr.spaces().iter().map(|s| s.dim()).sum();
    r.check(total + tr.levi_roots().len() == rs.len(), || {
        format!("Σ dim g_ν + card Δ(m) = {} + {} != {}", total, tr.levi_roots().len(), rs.len())
    });
    let mut seen = BTreeSet::new();
    for s in tr.spaces() {
        for &phi in &s.roots {
            r.check(seen.insert(phi), || format!("{} lies in two t-root spaces", rs.root(phi)));
            r.check(tr.projector().t_part(rs, rs.root(phi).coeffs()) == s.nu.vec, || {
                format!("{} does not project to ν = {}", rs.root(phi), s.nu.vec)
            });
        }
        let neg: BTreeSet<RootId> = s.roots.iter().map(|&x| rs.neg(x)).collect();
        let other: Option<BTreeSet<RootId>> = tr.space(&s.key().neg()).map(|o| o.roots.iter().copied().collect());
        r.check(other.as_ref() == Some(&neg), || format!("Δ(g_-ν) != -Δ(g_ν) for ν = {}", s.key()));
        r.check(s.key().sign() != 0, || format!("t-root key {} is not sign-coherent", s.key()));
    }
    for &phi in tr.levi_roots() {
        r.check(tr.projector().t_part(rs, rs.root(phi).coeffs()).is_zero(), || {
            format!("Levi root {} has nonzero t-part", rs.root(phi))
        });
    }
    r
}

fn irreducibility(tr: &TRootSystem<'_>) -> Report {
    let rs = tr.root_system();
    let kept = tr.designation().kept();
    let mut r = Report::new();
    for s in tr.spaces() {
        let hi = crate::levi::highest_weight_roots(rs, &s.roots, kept);
        let lo = crate::levi::lowest_weight_roots(rs, &s.roots, kept);
        r.check(hi == [s.highest], || format!("ν = {}: highest weight roots {hi:?}", s.key()));
        r.check(lo == [s.lowest], || format!("ν = {}: lowest weight roots {lo:?}", s.key()));
        // h(s)-weights within a space have multiplicity one
        let weights: BTreeSet<Vec<i64>> =
            s.roots.iter().map(|&x| kept.iter().map(|&i| rs.root(x).coeffs()[i]).collect()).collect();
        r.check(weights.len() == s.dim(), || format!("ν = {}: repeated s-weight", s.key()));
        if tr.designation().is_borel() {
            r.check(s.dim() == 1, || format!("Borel t-root {} has dim {}", s.key(), s.dim()));
        }
    }
    r
}

fn simple_troots(tr: &TRootSystem<'_>) -> Report {
    let tl = tr.designation().t_rank();
    let mut r = Report::new();
    let simples = tr.simples();
    r.check(simples.len() == tl, || format!("card R_simp = {}, ℓ(t) = {tl}", simples.len()));
    let keys: BTreeSet<&TKey> = simples.iter().map(|s| &s.key).collect();
    let units: Vec<TKey> = (0..tl).map(|j| TKey::unit(tl, j)).collect();
    r.check(keys == units.iter().collect(), || format!("R_simp keys {keys:?} are not the unit keys"));
    for (j, unit) in units.iter().enumerate() {
        match tr.troot(unit) {
            Some(t) => r.check(t.vec == tr.betas()[j], || format!("(α_j)_t mismatch at deleted index {j}")),
            None => r.check(false, || format!("β_{} = {unit} is not a t-root", j + 1)),
        }
    }
    for (a, sa) in simples.iter().enumerate() {
        for sb in &simples[a + 1..] {
            let ip = tr.troot_inner(sa, sb);
            r.check(ip <= Rat::ZERO, || format!("({}, {}) = {ip} > 0", sa.key, sb.key));
        }
    }
    let vecs: Vec<RatVec> = simples.iter().map(|s| s.vec.clone()).collect();
    r.check(rank(&vecs) == tl, || format!("simple t-roots have rank {} < {tl}", rank(&vecs)));
    let key_rows: Vec<RatVec> = simples.iter().map(|s| RatVec::from_ints(&s.key.0)).collect();
    r.check(rank(&key_rows) == tl, || "key matrix of R_simp is singular".into());
    for s in tr.positive_spaces() {
        r.check(s.key().0.iter().all(|&x| x >= 0), || format!("{} has a negative coordinate", s.key()));
        r.check(tr.vec_of_key(s.key()) == s.nu.vec, || format!("ν = {} is not Σ n_j(ν) β_j", s.key()));
    }
    r
}

fn bracket_law(tr: &TRootSystem<'_>) -> Report {
    let mut r = Report::new();
    for a in tr.spaces() {
        for b in tr.spaces() {
            let sum = a.key().add(b.key());
            if sum.is_zero() {
                continue;
            }
            let image = tr.bracket_image(a.key(), b.key()).expect("both are t-roots");
            match tr.space(&sum) {
                Some(target) => r.check(image.iter().copied().eq(target.roots.iter().copied()), || {
                    format!("[g_{}, g_{}] covers {} of {} roots", a.key(), b.key(), image.len(), target.dim())
                }),
                None => r.check(image.is_empty(), || {
                    format!("[g_{}, g_{}] is nonzero but {sum} is not a t-root", a.key(), b.key())
                }),
            }
        }
    }
    r
}

fn sign_rules(tr: &TRootSystem<'_>) -> Report {
    let mut r = Report::new();
    for a in tr.spaces() {
        for b in tr.spaces() {
            r.merge(tr.sign_rule_check(a.key(), b.key()));
        }
    }
    r
}

fn strings(tr: &TRootSystem<'_>) -> Report {
    let mut r = Report::new();
    for nu in tr.spaces() {
        r.merge(tr.string_contract(None, nu.key()));
        for gamma in tr.spaces() {
            r.merge(tr.string_contract(Some(gamma.key()), nu.key()));
        }
    }
    r
}

/// Borel–de Siebenthal laws for every node of one type.
pub fn check_bds(rs: &RootSystem) -> Tallies {
    let mut t = Tallies::new();
    let ctx = rs.simple_type().to_string();
    let ext = extended_diagram(rs);
    let mut bds = Report::new();
    let mut res = Report::new();
    bds.check(ext.affine_determinant().is_zero(), || "affine Cartan matrix is nonsingular".into());
    bds.check(ext.links.iter().all(|&m| m >= 0), || "negative link".into());

    let mut sub_classes = BTreeMap::new();
    for j in 0..rs.rank() {
        let node = j + 1;
        let n = rs.marks()[j];
        let deleted = delete_node(&ext, j).and_then(|m| classify(&m));
        let model = match subalgebra_roots(rs, j) {
            Ok(m) => m,
            Err(e) => {
                bds.check(false, || format!("node {node}: {e}"));
                continue;
            }
        };
        let own = classify(&model.cartan_of_sub);
        bds.check(deleted.is_ok() && deleted == own, || {
            format!("node {node}: deleted diagram {deleted:?} but subalgebra roots give {own:?}")
        });
        if let Ok(c) = &own {
            bds.check(c.rank() == rs.rank(), || format!("node {node}: subalgebra rank {} != ℓ", c.rank()));
            sub_classes.insert(j, c.clone());
        }
        let intrinsic: BTreeSet<RootId> = model.intrinsic_simples.iter().copied().collect();
        let declared: BTreeSet<RootId> = model.simple_roots.iter().copied().collect();
        bds.check(intrinsic == declared, || format!("node {node}: intrinsic simple roots differ from Π[j]"));
        let residue_total: usize = model.residues.values().map(Vec::len).sum();
        bds.check(model.root_set.len() + residue_total == rs.len(), || {
            format!("node {node}: {} + {residue_total} != card Δ", model.root_set.len())
        });

        // the maximal parabolic at j through the t-root machinery
        let des = ParabolicDesignation::maximal(rs.rank(), j).expect("valid node");
        match troot_system(rs, &des) {
            Ok(tr) => {
                let keys: Vec<i64> = tr.spaces().iter().map(|s| s.key().0[0]).collect();
                let want: Vec<i64> = (-n..=n).filter(|&k| k != 0).collect();
                bds.check(keys == want, || format!("node {node}: R[j] keys {keys:?}, expected ±1..±{n}"));
                bds.check(tr.spaces().len() as i64 == 2 * n, || format!("node {node}: card R[j] != 2 n_j(ψ)"));
                bds.check(tr.positive_spaces().count() as i64 == n, || {
                    format!("node {node}: nilradical does not have n_j(ψ) irreducible summands")
                });
                for k in 1..n {
                    let expect: BTreeSet<RootId> = [TKey(vec![k]), TKey(vec![k - n])]
                        .iter()
                        .filter_map(|key| tr.space(key))
                        .flat_map(|s| s.roots.iter().copied())
                        .collect();
                    let got: BTreeSet<RootId> = model.residue(k).iter().copied().collect();
                    res.check(got == expect, || format!("node {node}: residue {k} != g_kβ + g_(k-n)β"));
                }
            }
            Err(e) => bds.check(false, || format!("node {node}: {e}")),
        }

        for k in 1..n {
            if let Err(e) = residue_irreducibility(rs, &model, k) {
                res.check(false, || e.to_string());
            } else {
                res.check(true, String::new);
            }
            for q in 1..n {
                if (k + q) % n != 0 {
                    res.merge(residue_bracket_check(rs, &model, k, q));
                }
            }
        }
    }
    record(&mut t, Law::BorelDeSiebenthal, bds.context(&ctx));
    record(&mut t, Law::Residues, res.context(&ctx));

    let mut max = Report::new();
    match maximal_equal_rank(rs) {
        Ok(list) => {
            let nodes: Vec<usize> = list.iter().map(|(j, _)| *j).collect();
            let primes: Vec<usize> = (0..rs.rank()).filter(|&j| [2, 3, 5].contains(&rs.marks()[j])).collect();
            max.check(nodes == primes, || format!("prime-mark nodes {nodes:?}, expected {primes:?}"));
            for (j, class) in &list {
                max.check(sub_classes.get(j) == Some(class), || format!("node {}: class {class}", j + 1));
                max.check(class.rank() == rs.rank(), || format!("node {}: not of full rank", j + 1));
            }
        }
        Err(e) => max.check(false, || e.to_string()),
    }
    record(&mut t, Law::MaximalEqualRank, max.context(&ctx));
    t
}

/// Which designations a type sweep covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scope {
    /// Borel plus every maximal parabolic.
    Standard,
    /// All `2^ℓ - 1` proper designations.
    AllParabolics,
}

pub fn designations(rank: usize, scope: Scope) -> Vec<ParabolicDesignation> {
    match scope {
        Scope::AllParabolics => ParabolicDesignation::all(rank),
        Scope::Standard => {
            let mut v = vec![ParabolicDesignation::borel(rank)];
            if rank > 1 {
                v.extend((0..rank).map(|j| ParabolicDesignation::maximal(rank, j).expect("valid node")));
            }
            v
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawResult {
    pub law: Law,
    pub passed: bool,
    #[serde(flatten)]
    pub tally: Tally,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeReport {
    #[serde(rename = "type")]
    pub simple_type: SimpleType,
    pub designations: usize,
    pub passed: bool,
    pub laws: Vec<LawResult>,
}

impl TypeReport {
    pub fn law(&self, law: Law) -> Option<&LawResult> {
        self.laws.iter().find(|l| l.law == law)
    }
}

/// Runs every law for one type. Designations fan out over the rayon pool;
/// results are merged in designation order.
pub fn check_type(rs: &RootSystem, scope: Scope) -> TypeReport {
    let des = designations(rs.rank(), scope);
    let per: Vec<Tallies> = des.par_iter().map(|d| check_designation(rs, d)).collect();
    let mut all = Tallies::new();
    for t in per {
        merge_all(&mut all, t);
    }
    merge_all(&mut all, check_bds(rs));
    let laws: Vec<LawResult> = Law::ALL
        .iter()
        .map(|&law| {
            let tally = all.remove(&law).unwrap_or_default();
            LawResult { law, passed: tally.passed(), tally }
        })
        .collect();
    TypeReport {
        simple_type: rs.simple_type(),
        designations: des.len(),
        passed: laws.iter().all(|l| l.passed),
        laws,
    }
}

pub const CHECK_SCHEMA: &str = "troot.check/1";

/// JSON document emitted by `troot check`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckDoc {
    pub schema: String,
    pub all_parabolics: bool,
    pub passed: bool,
    pub types: Vec<TypeReport>,
}

pub fn check_doc(systems: &[RootSystem], scope: Scope) -> CheckDoc {
    let types: Vec<TypeReport> = systems.par_iter().map(|rs| check_type(rs, scope)).collect();
    CheckDoc {
        schema: CHECK_SCHEMA.to_string(),
        all_parabolics: scope == Scope::AllParabolics,
        passed: types.iter().all(|t| t.passed),
        types,
    }
}
