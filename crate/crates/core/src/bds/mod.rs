//! Extended Dynkin diagrams and Borel–de Siebenthal node deletion.
//!
//! Deleting node `j` from the extended diagram yields the Dynkin diagram of
//! the equal-rank subalgebra `g^{a_j}`. That subalgebra is modeled purely by
//! its roots, `{φ : n_j(φ) ∈ {0, ±n_j(ψ)}}`; the remaining roots are sorted
//! into residue classes of `n_j(φ)` modulo `n_j(ψ)`, one class per nontrivial
//! eigenvalue of the order-`n_j(ψ)` automorphism.

mod classify;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

pub use classify::{classify, DiagramClass};

use crate::error::{Error, Result};
use crate::exactlin::{determinant, rank, solve, Rat, RatMat, RatVec};
use crate::report::Report;
use crate::rootsys::{CartanMatrix, Root, RootId, RootSystem, SimpleType};

/// The diagram of `Π ∪ {α_0 = -ψ}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendedDiagram {
    /// Index of `α_0 = -ψ` in the root system.
    pub alpha0: RootId,
    /// `m_i = 2(α_i, ψ)/(α_i, α_i)` for `i = 1..=ℓ`.
    pub links: Vec<i64>,
    /// `2(x, y)/(y, y)` over nodes `α_0, α_1, …, α_ℓ`.
    pub affine: Vec<Vec<i64>>,
}

impl ExtendedDiagram {
    /// Root ids of nodes `0..=ℓ`.
    pub fn nodes(&self, rs: &RootSystem) -> Vec<RootId> {
        std::iter::once(self.alpha0).chain((0..rs.rank()).map(|i| rs.simple_root(i))).collect()
    }

    pub fn affine_determinant(&self) -> Rat {
        determinant(&RatMat::from_ints(&self.affine))
    }

    /// DOT rendering; `highlight` is a node index in `0..=ℓ`.
    pub fn to_dot(&self, rs: &RootSystem, highlight: Option<usize>) -> String {
        let nodes = self.nodes(rs);
        let marks: Vec<i64> = std::iter::once(1).chain(rs.marks().iter().copied()).collect();
        let mut out = String::new();
        let _ = writeln!(out, "digraph extended_{} {{", rs.simple_type());
        let _ = writeln!(out, "  rankdir=LR;");
        let _ = writeln!(out, "  node [shape=circle];");
        for (k, &id) in nodes.iter().enumerate() {
            let style = if highlight == Some(k) { ", style=filled, fillcolor=red" } else { "" };
            let _ = writeln!(
                out,
                "  a{k} [label=\"α{k}\\n{}\", xlabel=\"{}\"{style}];",
                marks[k],
                rs.root(id)
            );
        }
        for x in 0..nodes.len() {
            for y in x + 1..nodes.len() {
                let (axy, ayx) = (self.affine[x][y], self.affine[y][x]);
                if axy == 0 {
                    continue;
                }
                let lines = axy * ayx;
                // arrow points at the shorter root
                let dir = match axy.cmp(&ayx) {
                    std::cmp::Ordering::Equal if lines == 1 => "none",
                    std::cmp::Ordering::Equal => "both",
                    // |a_xy| > |a_yx| means y is shorter than x
                    std::cmp::Ordering::Less => "forward",
                    std::cmp::Ordering::Greater => "back",
                };
                let _ = writeln!(out, "  a{x} -> a{y} [dir={dir}, label=\"{lines}\", penwidth={lines}];");
            }
        }
        out.push_str("}\n");
        out
    }
}

pub fn extended_diagram(rs: &RootSystem) -> ExtendedDiagram {
    let alpha0 = rs.neg(rs.psi());
    let psi = rs.psi();
    let links = (0..rs.rank())
        .map(|i| {
            let a = rs.simple_root(i);
            let m = Rat::new(2 * rs.pairing(a, psi), rs.pairing(a, a));
            m.to_integer().expect("2(α_i, ψ)/(α_i, α_i) is an integer")
        })
        .collect();
    let nodes: Vec<RootId> = std::iter::once(alpha0).chain((0..rs.rank()).map(|i| rs.simple_root(i))).collect();
    let affine = nodes
        .iter()
        .map(|&x| {
            nodes
                .iter()
                .map(|&y| {
                    Rat::new(2 * rs.pairing(x, y), rs.pairing(y, y))
                        .to_integer()
                        .expect("Cartan integers of Π ∪ {-ψ} are integral")
                })
                .collect()
        })
        .collect();
    ExtendedDiagram { alpha0, links, affine }
}

/// Cartan matrix on `{α_0} ∪ Π \ {α_j}`, with `α_0` first and the remaining
/// simple roots in node order. `j` is 0-based.
pub fn delete_node(ext: &ExtendedDiagram, j: usize) -> Result<CartanMatrix> {
    let l = ext.links.len();
    if j >= l {
        return Err(Error::InvalidNode { node: j + 1, rank: l });
    }
    let keep: Vec<usize> = (0..=l).filter(|&k| k != j + 1).collect();
    CartanMatrix::new(keep.iter().map(|&x| keep.iter().map(|&y| ext.affine[x][y]).collect()).collect())
}

/// Root-level model of `g^{a_j}` and the residue decomposition of its complement.
#[derive(Clone, Debug)]
pub struct SubalgebraModel {
    /// 0-based node.
    pub j: usize,
    pub n_psi_j: i64,
    /// Δ(g^{a_j}), in root order.
    pub root_set: Vec<RootId>,
    /// `Π[j] = (Π \ {α_j}) ∪ {-ψ}`, with `-ψ` first.
    pub simple_roots: Vec<RootId>,
    /// Indecomposable positive roots of `root_set` under the order that makes
    /// `n_j`-negative roots positive; found without reference to `Π[j]`.
    pub intrinsic_simples: Vec<RootId>,
    /// Cartan matrix of `intrinsic_simples`.
    pub cartan_of_sub: CartanMatrix,
    /// `k ↦ {φ : n_j(φ) ≡ k mod n_j(ψ), n_j(φ) ∉ {0, ±n_j(ψ)}}` for `1 ≤ k < n_j(ψ)`.
    pub residues: BTreeMap<i64, Vec<RootId>>,
}

impl SubalgebraModel {
    pub fn residue(&self, k: i64) -> &[RootId] {
        self.residues.get(&k).map_or(&[], Vec::as_slice)
    }
}

/// Builds the subalgebra model at 0-based node `j` and certifies that
/// `Π[j]` is a simple system for it.
pub fn subalgebra_roots(rs: &RootSystem, j: usize) -> Result<SubalgebraModel> {
    let l = rs.rank();
    if j >= l {
        return Err(Error::InvalidNode { node: j + 1, rank: l });
    }
    let n = rs.marks()[j];
    let nj = |id: RootId| rs.root(id).coeffs()[j];

    let root_set: Vec<RootId> = rs.ids().filter(|&id| [0, n, -n].contains(&nj(id))).collect();
    let simple_roots: Vec<RootId> = std::iter::once(rs.neg(rs.psi()))
        .chain((0..l).filter(|&i| i != j).map(|i| rs.simple_root(i)))
        .collect();

    // every root of the subalgebra is a sign-coherent integer combination of Π[j]
    let columns = RatMat(simple_roots.iter().map(|&s| rs.root(s).to_ratvec()).collect()).transpose();
    if rank(&columns.0) != l {
        return Err(Error::SimpleSystemFailure(format!("Π[{}] has rank {} < {l}", j + 1, rank(&columns.0))));
    }
    for &phi in &root_set {
        let c = solve(&columns, &rs.root(phi).to_ratvec())
            .map_err(|e| Error::SimpleSystemFailure(format!("{}: {e}", rs.root(phi))))?;
        let integral = c.iter().all(Rat::is_integer);
        let coherent = c.iter().all(|x| *x >= 0) || c.iter().all(|x| *x <= 0);
        if !integral || !coherent {
            return Err(Error::SimpleSystemFailure(format!(
                "{} has coordinates {c} over Π[{}]",
                rs.root(phi),
                j + 1
            )));
        }
    }

    // positive system: n_j(φ) < 0 first, then ordinary height
    let positive = |id: RootId| nj(id) < 0 || (nj(id) == 0 && rs.root(id).is_positive());
    let members: BTreeSet<RootId> = root_set.iter().copied().collect();
    let pos: Vec<RootId> = root_set.iter().copied().filter(|&x| positive(x)).collect();
    let intrinsic_simples: Vec<RootId> = pos
        .iter()
        .copied()
        .filter(|&x| !pos.iter().any(|&y| rs.diff(x, y).is_some_and(|z| members.contains(&z) && positive(z))))
        .collect();
    let gram: Vec<Vec<i64>> = intrinsic_simples
        .iter()
        .map(|&x| intrinsic_simples.iter().map(|&y| rs.pairing(x, y)).collect())
        .collect();
    let cartan_of_sub = CartanMatrix::from_gram(&gram)?;

    let mut residues: BTreeMap<i64, Vec<RootId>> = (1..n).map(|k| (k, Vec::new())).collect();
    for id in rs.ids() {
        let c = nj(id);
        if ![0, n, -n].contains(&c) {
            residues.get_mut(&c.rem_euclid(n)).expect("residue in 1..n").push(id);
        }
    }

    Ok(SubalgebraModel { j, n_psi_j: n, root_set, simple_roots, intrinsic_simples, cartan_of_sub, residues })
}

/// The unique root of residue class `k` that no root of `Π[j]` raises.
pub fn residue_irreducibility(rs: &RootSystem, model: &SubalgebraModel, k: i64) -> Result<RootId> {
    if !(1..model.n_psi_j).contains(&k) {
        return Err(Error::InvalidPair(format!("residue {k} outside 1..{}", model.n_psi_j)));
    }
    let top: Vec<RootId> = model
        .residue(k)
        .iter()
        .copied()
        .filter(|&phi| model.simple_roots.iter().all(|&a| rs.sum(phi, a).is_none()))
        .collect();
    match top.as_slice() {
        [one] => Ok(*one),
        _ => Err(Error::IrreducibilityViolation(format!(
            "{} node {} residue {k}: {} highest weight roots",
            rs.simple_type(),
            model.j + 1,
            top.len()
        ))),
    }
}

/// `[g^p, g^q] = g^r` with `r ≡ p + q` at root level.
pub fn residue_bracket_check(rs: &RootSystem, model: &SubalgebraModel, p: i64, q: i64) -> Report {
    let n = model.n_psi_j;
    let mut report = Report::new();
    let r = (p + q).rem_euclid(n);
    if r == 0 {
        return report;
    }
    let image: BTreeSet<RootId> = model
        .residue(p)
        .iter()
        .flat_map(|&x| model.residue(q).iter().filter_map(move |&y| rs.sum(x, y)))
        .collect();
    let target: BTreeSet<RootId> = model.residue(r).iter().copied().collect();
    report.check(image == target, || {
        format!(
            "{} node {}: [g^{p}, g^{q}] covers {} of {} roots of g^{r}",
            rs.simple_type(),
            model.j + 1,
            image.intersection(&target).count(),
            target.len()
        )
    });
    report
}

fn is_prime(n: i64) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Nodes (0-based) with prime mark, with the class of the deleted diagram.
pub fn maximal_equal_rank(rs: &RootSystem) -> Result<Vec<(usize, DiagramClass)>> {
    let ext = extended_diagram(rs);
    (0..rs.rank())
        .filter(|&j| is_prime(rs.marks()[j]))
        .map(|j| Ok((j, classify(&delete_node(&ext, j)?)?)))
        .collect()
}

/// `v_j = x_j / n_j(ψ)` in the basis dual to the simple roots.
pub fn alcove_vertex(rs: &RootSystem, j: usize) -> RatVec {
    let mut v = RatVec::zeros(rs.rank());
    v[j] = Rat::new(1, rs.marks()[j]);
    v
}

pub const BDS_SCHEMA: &str = "troot.bds/1";
pub const MAXIMAL_SCHEMA: &str = "troot.maximal/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeDoc {
    /// 1-based; 0 is reserved for α_0.
    pub node: usize,
    pub mark: i64,
    pub prime: bool,
    pub deleted_class: DiagramClass,
    pub subalgebra_class: DiagramClass,
    pub subalgebra_roots: usize,
    pub simple_roots: Vec<Root>,
    pub residue_dims: BTreeMap<i64, usize>,
    pub certificates: BTreeMap<i64, Root>,
    pub alcove_vertex: RatVec,
}

/// JSON document emitted by `troot bds`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BdsDoc {
    pub schema: String,
    #[serde(rename = "type")]
    pub simple_type: SimpleType,
    pub marks: Vec<i64>,
    pub links: Vec<i64>,
    pub affine_cartan: Vec<Vec<i64>>,
    pub nodes: Vec<NodeDoc>,
}

pub fn node_doc(rs: &RootSystem, ext: &ExtendedDiagram, j: usize) -> Result<NodeDoc> {
    let model = subalgebra_roots(rs, j)?;
    let certificates = (1..model.n_psi_j)
        .map(|k| Ok((k, rs.root(residue_irreducibility(rs, &model, k)?).clone())))
        .collect::<Result<_>>()?;
    Ok(NodeDoc {
        node: j + 1,
        mark: model.n_psi_j,
        prime: is_prime(model.n_psi_j),
        deleted_class: classify(&delete_node(ext, j)?)?,
        subalgebra_class: classify(&model.cartan_of_sub)?,
        subalgebra_roots: model.root_set.len(),
        simple_roots: model.simple_roots.iter().map(|&r| rs.root(r).clone()).collect(),
        residue_dims: model.residues.iter().map(|(&k, v)| (k, v.len())).collect(),
        certificates,
        alcove_vertex: alcove_vertex(rs, j),
    })
}

pub fn bds_doc(rs: &RootSystem, node: Option<usize>) -> Result<BdsDoc> {
    let ext = extended_diagram(rs);
    let nodes: Vec<usize> = match node {
        Some(j) if j >= rs.rank() => return Err(Error::InvalidNode { node: j + 1, rank: rs.rank() }),
        Some(j) => vec![j],
        None => (0..rs.rank()).collect(),
    };
    Ok(BdsDoc {
        schema: BDS_SCHEMA.to_string(),
        simple_type: rs.simple_type(),
        marks: rs.marks().to_vec(),
        links: ext.links.clone(),
        affine_cartan: ext.affine.clone(),
        nodes: nodes.into_iter().map(|j| node_doc(rs, &ext, j)).collect::<Result<_>>()?,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaximalEntry {
    pub node: usize,
    pub mark: i64,
    pub class: DiagramClass,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaximalDoc {
    pub schema: String,
    #[serde(rename = "type")]
    pub simple_type: SimpleType,
    pub entries: Vec<MaximalEntry>,
}

pub fn maximal_doc(rs: &RootSystem) -> Result<MaximalDoc> {
    Ok(MaximalDoc {
        schema: MAXIMAL_SCHEMA.to_string(),
        simple_type: rs.simple_type(),
        entries: maximal_equal_rank(rs)?
            .into_iter()
            .map(|(j, class)| MaximalEntry { node: j + 1, mark: rs.marks()[j], class })
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::of_type(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn links_of_small_types() {
        assert_eq!(extended_diagram(&rs("A2")).links, vec![1, 1]);
        assert_eq!(extended_diagram(&rs("A1")).links, vec![2]);
        // G2: α0 attaches to the long node 2 only
        assert_eq!(extended_diagram(&rs("G2")).links, vec![0, 1]);
    }

    #[test]
    fn affine_matrices_are_singular() {
        for t in SimpleType::all_up_to(8) {
            let r = RootSystem::of_type(t).unwrap();
            let ext = extended_diagram(&r);
            assert_eq!(ext.affine_determinant(), Rat::ZERO, "{t}");
            assert!(ext.links.iter().filter(|&&m| m > 0).count() <= 3, "{t}");
            assert!(ext.links.iter().all(|&m| m >= 0));
        }
    }

    #[test]
    fn g2_deletions() {
        let g2 = rs("G2");
        let ext = extended_diagram(&g2);
        // node 1 has mark 3, node 2 has mark 2
        assert_eq!(classify(&delete_node(&ext, 0).unwrap()).unwrap().to_string(), "A2");
        assert_eq!(classify(&delete_node(&ext, 1).unwrap()).unwrap().to_string(), "A1+A1");
        let m = subalgebra_roots(&g2, 1).unwrap();
        let roots: Vec<&[i64]> = m.root_set.iter().map(|&r| g2.root(r).coeffs()).collect();
        assert_eq!(roots, vec![&[-3, -2][..], &[-1, 0], &[1, 0], &[3, 2]]);
        assert_eq!(m.residue(1).len(), 8);
        assert_eq!(classify(&m.cartan_of_sub).unwrap().to_string(), "A1+A1");
        let top = residue_irreducibility(&g2, &m, 1).unwrap();
        assert!(m.residue(1).contains(&top));
        // vacuous bracket check at modulus 2
        assert_eq!(residue_bracket_check(&g2, &m, 1, 1).checked, 0);

        let m3 = subalgebra_roots(&g2, 0).unwrap();
        assert_eq!(classify(&m3.cartan_of_sub).unwrap().to_string(), "A2");
        assert!(residue_bracket_check(&g2, &m3, 1, 1).passed());
        assert!(residue_bracket_check(&g2, &m3, 2, 2).passed());
    }

    #[test]
    fn type_a_deletion_is_whole_algebra() {
        let a4 = rs("A4");
        let ext = extended_diagram(&a4);
        for j in 0..4 {
            assert_eq!(classify(&delete_node(&ext, j).unwrap()).unwrap().to_string(), "A4");
            let m = subalgebra_roots(&a4, j).unwrap();
            assert_eq!(m.root_set.len(), a4.len());
            assert!(m.residues.is_empty());
        }
        assert!(maximal_equal_rank(&a4).unwrap().is_empty());
    }

    #[test]
    fn maximal_g2() {
        let list = maximal_equal_rank(&rs("G2")).unwrap();
        let names: Vec<(usize, String)> = list.into_iter().map(|(j, c)| (j + 1, c.to_string())).collect();
        assert_eq!(names, vec![(1, "A2".to_string()), (2, "A1+A1".to_string())]);
    }

    #[test]
    fn alcove_vertices() {
        let e8 = rs("E8");
        for j in 0..8 {
            let v = alcove_vertex(&e8, j);
            // <ψ, v_j> = n_j(ψ) / n_j(ψ)
            let pair: Rat = e8.marks().iter().zip(v.iter()).map(|(&m, &x)| Rat::int(m) * x).sum();
            assert_eq!(pair, Rat::ONE);
            for i in 0..8 {
                if i != j {
                    assert!(v[i].is_zero());
                }
            }
        }
        assert_eq!(alcove_vertex(&rs("A3"), 1), RatVec::unit(3, 1));
    }

    #[test]
    fn invalid_nodes() {
        let a2 = rs("A2");
        assert!(matches!(delete_node(&extended_diagram(&a2), 2), Err(Error::InvalidNode { .. })));
        assert!(subalgebra_roots(&a2, 5).is_err());
        assert!(bds_doc(&a2, Some(3)).is_err());
    }

    #[test]
    fn dot_mentions_every_node() {
        let g2 = rs("G2");
        let dot = extended_diagram(&g2).to_dot(&g2, Some(2));
        for k in 0..3 {
            assert!(dot.contains(&format!("a{k} [")));
        }
        assert!(dot.contains("fillcolor=red"));
        assert!(dot.contains("label=\"3\""));
    }
}
