//! The o(ν)-grading of the nilradical and its central series.
//!
//! `n(k)` is the sum of the positive t-root spaces with `o(ν) = k`. The upper
//! and lower central series are assembled from these levels in closed form
//! and compared against two brute-force oracles that work directly with root
//! sums and never look at the grading.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::levi::{TKey, TRootSystem};
use crate::report::Report;
use crate::rootsys::{Root, RootId, RootSystem};

pub type RootSet = BTreeSet<RootId>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grading {
    /// `k ↦` keys of the positive t-roots with `o(ν) = k`.
    pub levels: BTreeMap<i64, Vec<TKey>>,
    /// `Σ_{j∈D} n_j(ψ)`.
    pub k_cent: i64,
}

impl Grading {
    pub fn level(&self, k: i64) -> &[TKey] {
        self.levels.get(&k).map_or(&[], Vec::as_slice)
    }
}

pub fn grading(trsys: &TRootSystem<'_>) -> Grading {
    let mut levels: BTreeMap<i64, Vec<TKey>> = BTreeMap::new();
    for s in trsys.positive_spaces() {
        levels.entry(s.key().order()).or_default().push(s.key().clone());
    }
    let marks = trsys.root_system().marks();
    let k_cent = trsys.designation().deleted().iter().map(|&j| marks[j]).sum();
    Grading { levels, k_cent }
}

/// Roots of `n(k)`.
pub fn level_roots(trsys: &TRootSystem<'_>, grading: &Grading, k: i64) -> RootSet {
    grading
        .level(k)
        .iter()
        .flat_map(|key| trsys.space(key).expect("level key is a t-root").roots.iter().copied())
        .collect()
}

/// `[n(j), n(k)] ⊂ n(j+k)` at root level, plus the structural facts of the
/// grading: only levels `1..=k_cent` occur and the top level is `ψ_t` alone.
pub fn gradation_check(trsys: &TRootSystem<'_>, grading: &Grading) -> Report {
    let rs = trsys.root_system();
    let mut report = Report::new();
    let by_level: BTreeMap<i64, RootSet> =
        grading.levels.keys().map(|&k| (k, level_roots(trsys, grading, k))).collect();
    for (&j, a) in &by_level {
        for (&k, b) in &by_level {
            for &x in a {
                for &y in b {
                    if let Some(z) = rs.sum(x, y) {
                        report.check(by_level.get(&(j + k)).is_some_and(|c| c.contains(&z)), || {
                            format!("{} + {} leaves level {}", rs.root(x), rs.root(y), j + k)
                        });
                    }
                }
            }
        }
    }
    let top = grading.levels.keys().next_back().copied().unwrap_or(0);
    report.check(top == grading.k_cent, || format!("top level {top} != k_cent {}", grading.k_cent));
    report.check(grading.levels.keys().all(|&k| k >= 1), || "a level below 1".into());
    let psi_key = trsys.designation().key_of(rs.root(rs.psi()));
    report.check(grading.level(grading.k_cent) == [psi_key.clone()], || {
        format!("top level {:?} is not {{ψ_t = {psi_key}}}", grading.level(grading.k_cent))
    });
    report
}

/// Δ(n), derived from the deleted nodes alone.
fn nilradical(rs: &RootSystem, deleted: &[usize]) -> RootSet {
    rs.positive_ids().filter(|&id| deleted.iter().any(|&j| rs.root(id).coeffs()[j] > 0)).collect()
}

/// `S_1 = Δ(n)`, `S_i = {φ + φ' ∈ Δ : φ ∈ Δ(n), φ' ∈ S_{i-1}}`, until empty.
pub fn lower_series_oracle(trsys: &TRootSystem<'_>) -> Vec<RootSet> {
    let rs = trsys.root_system();
    let n = nilradical(rs, trsys.designation().deleted());
    let mut chain = vec![n.clone()];
    loop {
        let prev = chain.last().unwrap();
        let next: RootSet = n.iter().flat_map(|&x| prev.iter().filter_map(move |&y| rs.sum(x, y))).collect();
        if next.is_empty() {
            break;
        }
        chain.push(next);
    }
    chain
}

/// `U_1` = roots of Δ(n) whose sums with Δ(n) are never roots; `U_i` = roots
/// whose sums with Δ(n) stay inside `U_{i-1}`. Returns the increasing chain
/// ending at Δ(n).
pub fn upper_series_oracle(trsys: &TRootSystem<'_>) -> Vec<RootSet> {
    let rs = trsys.root_system();
    let n = nilradical(rs, trsys.designation().deleted());
    let mut chain: Vec<RootSet> = Vec::new();
    let mut prev = RootSet::new();
    loop {
        let next: RootSet = n
            .iter()
            .copied()
            .filter(|&x| n.iter().all(|&y| rs.sum(x, y).is_none_or(|z| prev.contains(&z))))
            .collect();
        if next == prev {
            // a nilpotent algebra always has a nonzero center, so this only
            // happens once Δ(n) is reached
            break;
        }
        chain.push(next.clone());
        if next == n {
            break;
        }
        prev = next;
    }
    chain
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralSeries {
    /// `n_1 ⊂ n_2 ⊂ … ⊂ n_d = n`
    pub upper: Vec<RootSet>,
    /// `n^1 = n ⊃ n^2 ⊃ … ⊃ n^d`
    pub lower: Vec<RootSet>,
    pub length: usize,
}

/// `n_i = Σ_{j=1}^{i} n(k_cent - j + 1)` and `n^i = Σ_{j=i}^{k_cent} n(j)`.
pub fn assemble_series(trsys: &TRootSystem<'_>, grading: &Grading) -> CentralSeries {
    let d = grading.k_cent;
    let levels: Vec<RootSet> = (1..=d).map(|k| level_roots(trsys, grading, k)).collect();
    let upper = (1..=d)
        .map(|i| (1..=i).flat_map(|j| levels[(d - j) as usize].iter().copied()).collect())
        .collect();
    let lower = (1..=d).map(|i| (i..=d).flat_map(|j| levels[(j - 1) as usize].iter().copied()).collect()).collect();
    CentralSeries { upper, lower, length: d as usize }
}

/// The closed-form series, verified set-for-set against both oracles.
pub fn closed_form_series(trsys: &TRootSystem<'_>, grading: &Grading) -> Result<CentralSeries> {
    let series = assemble_series(trsys, grading);
    let rs = trsys.root_system();
    let show = |chain: &[RootSet]| {
        chain
            .iter()
            .map(|s| s.iter().map(|&r| rs.root(r).to_string()).collect::<Vec<_>>().join(" "))
            .collect::<Vec<_>>()
            .join(" | ")
    };
    let upper = upper_series_oracle(trsys);
    if upper != series.upper {
        return Err(Error::SeriesMismatch(format!(
            "{} {}: upper closed form [{}] != oracle [{}]",
            rs.simple_type(),
            trsys.designation(),
            show(&series.upper),
            show(&upper)
        )));
    }
    let lower = lower_series_oracle(trsys);
    if lower != series.lower {
        return Err(Error::SeriesMismatch(format!(
            "{} {}: lower closed form [{}] != oracle [{}]",
            rs.simple_type(),
            trsys.designation(),
            show(&series.lower),
            show(&lower)
        )));
    }
    Ok(series)
}

/// Every structural law of the central series at root level.
pub fn series_check(trsys: &TRootSystem<'_>) -> Report {
    let rs = trsys.root_system();
    let g = grading(trsys);
    let mut report = gradation_check(trsys, &g);
    let series = match closed_form_series(trsys, &g) {
        Ok(s) => s,
        Err(e) => {
            report.check(false, || e.to_string());
            return report;
        }
    };
    report.check(series.length as i64 == g.k_cent, || "length != k_cent".into());
    report.check(series.upper.len() == series.length && series.lower.len() == series.length, || {
        format!("series lengths {} / {} != {}", series.upper.len(), series.lower.len(), series.length)
    });
    for i in 0..series.length {
        report.check(series.lower[i] == series.upper[series.length - 1 - i], || {
            format!("reversal fails at i = {}", i + 1)
        });
    }
    // the center is the top t-root space
    let psi_key = trsys.designation().key_of(rs.root(rs.psi()));
    let top: RootSet = trsys.space(&psi_key).map(|s| s.roots.iter().copied().collect()).unwrap_or_default();
    report.check(series.upper.first() == Some(&top), || "U_1 != Δ(g_ν(cent))".into());
    // each upper term is a union of whole t-root spaces
    for (i, term) in series.upper.iter().enumerate() {
        let whole = trsys
            .positive_spaces()
            .all(|s| s.roots.iter().all(|r| term.contains(r)) || s.roots.iter().all(|r| !term.contains(r)));
        report.check(whole, || format!("n_{} splits a t-root space", i + 1));
    }
    // step law [n(1), n(i-1)] = n(i)
    let level1 = level_roots(trsys, &g, 1);
    for i in 2..=g.k_cent {
        let below = level_roots(trsys, &g, i - 1);
        let image: RootSet =
            level1.iter().flat_map(|&x| below.iter().filter_map(move |&y| rs.sum(x, y))).collect();
        report.check(image == level_roots(trsys, &g, i), || format!("[n(1), n({})] != n({i})", i - 1));
    }
    // level 1 generates n
    let n = trsys.nilradical_roots();
    let mut span = level1.clone();
    loop {
        let grown: RootSet = span
            .iter()
            .copied()
            .chain(level1.iter().flat_map(|&x| span.iter().filter_map(move |&y| rs.sum(x, y))))
            .collect();
        if grown.len() == span.len() {
            break;
        }
        span = grown;
    }
    report.check(span == n, || "level 1 does not generate the nilradical".into());
    report
}

pub const SERIES_SCHEMA: &str = "troot.series/1";

/// JSON document emitted by `troot series`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesDoc {
    pub schema: String,
    #[serde(rename = "type")]
    pub simple_type: crate::rootsys::SimpleType,
    pub kept: Vec<usize>,
    pub deleted: Vec<usize>,
    pub k_cent: i64,
    pub levels: BTreeMap<i64, Vec<TKey>>,
    pub upper: Vec<Vec<Root>>,
    pub lower: Vec<Vec<Root>>,
}

pub fn series_doc(trsys: &TRootSystem<'_>) -> Result<SeriesDoc> {
    let g = grading(trsys);
    let series = closed_form_series(trsys, &g)?;
    let rs = trsys.root_system();
    let chain = |c: &[RootSet]| c.iter().map(|s| s.iter().map(|&r| rs.root(r).clone()).collect()).collect();
    Ok(SeriesDoc {
        schema: SERIES_SCHEMA.to_string(),
        simple_type: rs.simple_type(),
        kept: trsys.designation().kept().iter().map(|i| i + 1).collect(),
        deleted: trsys.designation().deleted().iter().map(|i| i + 1).collect(),
        k_cent: g.k_cent,
        levels: g.levels,
        upper: chain(&series.upper),
        lower: chain(&series.lower),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::levi::{troot_system, ParabolicDesignation};

    fn rs(s: &str) -> RootSystem {
        RootSystem::of_type(s.parse().unwrap()).unwrap()
    }

    fn set(rs: &RootSystem, roots: &[&[i64]]) -> RootSet {
        roots.iter().map(|c| rs.id_of(c).unwrap()).collect()
    }

    #[test]
    fn borel_a2() {
        let a2 = rs("A2");
        let tr = troot_system(&a2, &ParabolicDesignation::borel(2)).unwrap();
        let g = grading(&tr);
        assert_eq!(g.k_cent, 2);
        assert_eq!(g.level(1), &[TKey(vec![0, 1]), TKey(vec![1, 0])]);
        assert_eq!(g.level(2), &[TKey(vec![1, 1])]);
        let all = set(&a2, &[&[1, 0], &[0, 1], &[1, 1]]);
        let top = set(&a2, &[&[1, 1]]);
        assert_eq!(lower_series_oracle(&tr), vec![all.clone(), top.clone()]);
        assert_eq!(upper_series_oracle(&tr), vec![top.clone(), all.clone()]);
        let s = closed_form_series(&tr, &g).unwrap();
        assert_eq!(s.upper, vec![top.clone(), all.clone()]);
        assert_eq!(s.lower, vec![all, top]);
        assert!(series_check(&tr).passed());
    }

    #[test]
    fn abelian_nilradical() {
        let a2 = rs("A2");
        let tr = troot_system(&a2, &ParabolicDesignation::from_kept(2, &[1]).unwrap()).unwrap();
        let g = grading(&tr);
        assert_eq!(g.k_cent, 1);
        assert_eq!(g.level(1), &[TKey(vec![1])]);
        let n = tr.nilradical_roots();
        assert_eq!(lower_series_oracle(&tr), vec![n.clone()]);
        assert_eq!(upper_series_oracle(&tr), vec![n.clone()]);
        let s = closed_form_series(&tr, &g).unwrap();
        assert_eq!((s.upper.clone(), s.lower.clone()), (vec![n.clone()], vec![n]));
    }

    #[test]
    fn maximal_parabolic_levels_are_multiples() {
        for t in ["E8", "F4", "G2", "C5"] {
            let r = rs(t);
            for j in 0..r.rank() {
                let tr = troot_system(&r, &ParabolicDesignation::maximal(r.rank(), j).unwrap()).unwrap();
                let g = grading(&tr);
                assert_eq!(g.k_cent, r.marks()[j]);
                for k in 1..=g.k_cent {
                    assert_eq!(g.level(k), &[TKey(vec![k])], "{t} node {}", j + 1);
                }
                assert!(series_check(&tr).passed(), "{t} node {}", j + 1);
            }
        }
    }

    #[test]
    fn mismatch_is_reported() {
        let a2 = rs("A2");
        let tr = troot_system(&a2, &ParabolicDesignation::borel(2)).unwrap();
        let mut g = grading(&tr);
        // swap the two levels
        let l1 = g.levels.remove(&1).unwrap();
        let l2 = g.levels.remove(&2).unwrap();
        g.levels.insert(1, l2);
        g.levels.insert(2, l1);
        assert!(matches!(closed_form_series(&tr, &g), Err(Error::SeriesMismatch(_))));
    }
}
