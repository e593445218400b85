//! Block-matrix model of parabolic subalgebras of sl(n).
//!
//! A composition `δ = (d_1, …, d_k)` of `n` cuts an `n×n` matrix into blocks;
//! the t-root spaces are the off-diagonal blocks `(r, s)`, of dimension
//! `d_r d_s`, acted on by the `sl(d_r)` and `sl(d_s)` factors of the Levi
//! factor only. The table here is computed from interval combinatorics alone
//! and then compared with the general t-root machinery on `A_{n-1}`.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::levi::{troot_system, ParabolicDesignation, TKey};
use crate::report::Report;
use crate::rootsys::{Family, RootSystem, SimpleType};
use crate::series::grading;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Composition> {
        if parts.len() < 2 {
            return Err(Error::InvalidComposition(format!(
                "{parts:?} has fewer than 2 parts, which gives q = g"
            )));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(format!("{parts:?} has a zero part")));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn k(&self) -> usize {
        self.0.len()
    }

    pub fn n(&self) -> usize {
        self.0.iter().sum()
    }

    /// Partial sums `f_1 < … < f_k = n`.
    pub fn partial_sums(&self) -> Vec<usize> {
        self.0
            .iter()
            .scan(0, |acc, &d| {
                *acc += d;
                Some(*acc)
            })
            .collect()
    }

    /// Interval `I_q = (f_{q-1}, f_q]`, 1-based `q`.
    pub fn interval(&self, q: usize) -> std::ops::RangeInclusive<usize> {
        let f = self.partial_sums();
        let lo = if q == 1 { 0 } else { f[q - 2] };
        lo + 1..=f[q - 1]
    }

    /// Every composition of `n` with at least two parts.
    pub fn all_of(n: usize) -> Vec<Composition> {
        // bit i set = cut after position i + 1
        (1u32..(1u32 << (n - 1)))
            .map(|cuts| {
                let mut parts = Vec::new();
                let mut run = 1;
                for i in 0..n - 1 {
                    if cuts & (1 << i) != 0 {
                        parts.push(run);
                        run = 1;
                    } else {
                        run += 1;
                    }
                }
                parts.push(run);
                Composition(parts)
            })
            .collect()
    }
}

impl std::str::FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Composition> {
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| Error::InvalidComposition(format!("bad part {p:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts)
    }
}

/// Ambient type `A_{n-1}` and deleted nodes `{f_1, …, f_{k-1}}`.
pub fn designation_of(delta: &Composition) -> Result<(SimpleType, ParabolicDesignation)> {
    let n = delta.n();
    let t = SimpleType::new(Family::A, n - 1)?;
    let f = delta.partial_sums();
    let deleted: Vec<usize> = f[..f.len() - 1].iter().map(|&x| x - 1).collect();
    Ok((t, ParabolicDesignation::from_deleted(n - 1, &deleted)?))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockEntry {
    pub r: usize,
    pub s: usize,
    pub dim: usize,
    /// Blocks whose `sl(d_p)` acts nontrivially.
    pub acting: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BlockTRootTable {
    pub entries: Vec<BlockEntry>,
}

impl BlockTRootTable {
    pub fn get(&self, r: usize, s: usize) -> Option<&BlockEntry> {
        self.entries.iter().find(|e| e.r == r && e.s == s)
    }
}

pub fn block_table(delta: &Composition) -> BlockTRootTable {
    let d = delta.parts();
    let k = delta.k();
    let mut entries = Vec::new();
    for r in 1..=k {
        for s in 1..=k {
            if r == s {
                continue;
            }
            let mut acting: Vec<usize> = [r, s].into_iter().filter(|&p| d[p - 1] > 1).collect();
            acting.sort_unstable();
            entries.push(BlockEntry { r, s, dim: d[r - 1] * d[s - 1], acting });
        }
    }
    BlockTRootTable { entries }
}

/// The block pair `(r, s)` of a t-root key on `A_{n-1}`, if the key has the
/// shape of an interval indicator.
fn pair_of_key(key: &TKey) -> Option<(usize, usize)> {
    let sign = key.sign();
    let abs: Vec<i64> = key.0.iter().map(|x| x * sign).collect();
    let first = abs.iter().position(|&x| x != 0)?;
    let last = abs.iter().rposition(|&x| x != 0)?;
    if abs[first..=last].iter().any(|&x| x != 1) {
        return None;
    }
    // key entry q (0-based) is the coefficient of α_{f_{q+1}}
    let (r, s) = (first + 1, last + 2);
    Some(if sign > 0 { (r, s) } else { (s, r) })
}

/// Compares the block table with the t-root system of `designation_of(δ)`.
pub fn crosscheck(delta: &Composition) -> Result<Report> {
    let (t, des) = designation_of(delta)?;
    let rs = RootSystem::of_type(t)?;
    let tr = troot_system(&rs, &des)?;
    let table = block_table(delta);
    let k = delta.k();
    let mut report = Report::new();

    report.check(tr.spaces().len() == k * (k - 1), || {
        format!("card R = {}, expected k(k-1) = {}", tr.spaces().len(), k * (k - 1))
    });

    // kept nodes (0-based) internal to each block
    let block_nodes: Vec<Vec<usize>> =
        (1..=k).map(|p| delta.interval(p).filter(|&i| i < *delta.interval(p).end()).map(|i| i - 1).collect()).collect();

    let mut seen = BTreeSet::new();
    for space in tr.spaces() {
        let Some((r, s)) = pair_of_key(space.key()) else {
            report.check(false, || format!("t-root {} is not a block pair", space.key()));
            continue;
        };
        report.check(seen.insert((r, s)), || format!("block pair ({r},{s}) hit twice"));
        let Some(entry) = table.get(r, s) else {
            report.check(false, || format!("block pair ({r},{s}) missing from the table"));
            continue;
        };
        report.check(space.dim() == entry.dim, || {
            format!("dim g_ν({r},{s}) = {}, table says {}", space.dim(), entry.dim)
        });
        if r < s {
            report.check(space.key().order() == (s - r) as i64, || {
                format!("o(ν({r},{s})) = {}, expected {}", space.key().order(), s - r)
            });
        }
        // which blocks act: some kept simple root of the block pairs nontrivially
        let mut acting = Vec::new();
        for (p, nodes) in block_nodes.iter().enumerate() {
            let p = p + 1;
            let nontrivial = space.roots.iter().any(|&phi| {
                nodes.iter().any(|&i| {
                    let a = rs.simple_root(i);
                    rs.pairing(phi, a) != 0 || rs.sum(phi, a).is_some() || rs.diff(phi, a).is_some()
                })
            });
            if nontrivial {
                acting.push(p);
            }
        }
        report.check(acting == entry.acting, || {
            format!("blocks acting on ν({r},{s}): {acting:?}, table says {:?}", entry.acting)
        });
    }
    report.check(seen.len() == table.entries.len(), || {
        format!("{} of {} block pairs realized", seen.len(), table.entries.len())
    });

    let g = grading(&tr);
    report.check(g.k_cent == (k - 1) as i64, || format!("k_cent = {}, expected {}", g.k_cent, k - 1));
    Ok(report)
}

pub const SLN_SCHEMA: &str = "troot.sln/1";

/// JSON document emitted by `troot sln`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlnDoc {
    pub schema: String,
    pub composition: Composition,
    #[serde(rename = "type")]
    pub simple_type: SimpleType,
    pub deleted: Vec<usize>,
    pub table: BlockTRootTable,
    /// Dimension of each realized t-root space keyed by `"r,s"`.
    pub levi_dims: BTreeMap<String, usize>,
    pub crosscheck: Report,
}

pub fn sln_doc(delta: &Composition) -> Result<SlnDoc> {
    let (t, des) = designation_of(delta)?;
    let rs = RootSystem::of_type(t)?;
    let tr = troot_system(&rs, &des)?;
    let levi_dims = tr
        .spaces()
        .iter()
        .filter_map(|s| pair_of_key(s.key()).map(|(r, q)| (format!("{r},{q}"), s.dim())))
        .collect();
    Ok(SlnDoc {
        schema: SLN_SCHEMA.to_string(),
        composition: delta.clone(),
        simple_type: t,
        deleted: des.deleted().iter().map(|i| i + 1).collect(),
        table: block_table(delta),
        levi_dims,
        crosscheck: crosscheck(delta)?,
    })
}
