//! Recognition of finite-type Cartan matrices.
//!
//! Each connected component is identified by a structural fingerprint: the
//! number of nodes, the bond multiplicities `a_ij a_ji`, the degree pattern
//! and, for a double bond, which end carries the short root. For connected
//! Dynkin diagrams this fingerprint is complete:
//!
//! | fingerprint | type |
//! |-------------|------|
//! | path, simple bonds | A_n |
//! | path, double bond at an end, the end node short | B_n |
//! | path, double bond at an end, the end node long | C_n |
//! | path of 2 nodes, double bond | B2 (= C2) |
//! | path of 4 nodes, double bond in the middle | F4 |
//! | 2 nodes, triple bond | G2 |
//! | one trivalent node, arms (1, 1, n-3) | D_n |
//! | one trivalent node, arms (1, 2, 2) / (1, 2, 3) / (1, 2, 4) | E6 / E7 / E8 |
//!
//! B2 ≅ C2 is always reported as B2. A graph shaped like D3 is a path and is
//! reported as A3. Anything else, or any component whose symmetrized form is
//! not positive definite, is rejected.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::{is_positive_definite, RatMat};
use crate::rootsys::{CartanMatrix, Family, SimpleType};

/// A Cartan matrix classified as a product of simple types, sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DiagramClass {
    pub components: Vec<SimpleType>,
}

impl DiagramClass {
    pub fn new(mut components: Vec<SimpleType>) -> DiagramClass {
        components.sort();
        DiagramClass { components }
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(|t| t.rank).sum()
    }

    /// The type, when there is exactly one component.
    pub fn single(&self) -> Option<SimpleType> {
        match self.components.as_slice() {
            [t] => Some(*t),
            _ => None,
        }
    }
}

impl fmt::Display for DiagramClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.components.iter().map(ToString::to_string).collect();
        write!(f, "{}", names.join("+"))
    }
}

pub fn classify(cartan: &CartanMatrix) -> Result<DiagramClass> {
    let comps = cartan
        .components()
        .into_iter()
        .map(|nodes| classify_connected(&cartan.restrict(&nodes)))
        .collect::<Result<Vec<_>>>()?;
    Ok(DiagramClass::new(comps))
}

fn classify_connected(a: &CartanMatrix) -> Result<SimpleType> {
    let n = a.rank();
    let not_finite = |why: &str| Error::NotFiniteType(format!("{why} in component {:?}", a.entries()));
    let d = a.symmetrizer()?;
    let gram = RatMat::from_ints(
        &(0..n).map(|i| (0..n).map(|j| a.get(i, j) * d[j]).collect()).collect::<Vec<Vec<i64>>>(),
    );
    if !is_positive_definite(&gram) {
        return Err(not_finite("form is not positive definite"));
    }
    if n == 1 {
        return SimpleType::new(Family::A, 1);
    }

    let mut edges = Vec::new();
    let mut adj = vec![Vec::new(); n];
    for i in 0..n {
        for j in i + 1..n {
            let m = a.get(i, j) * a.get(j, i);
            if m == 0 {
                continue;
            }
            if m > 3 {
                return Err(not_finite("bond of multiplicity > 3"));
            }
            edges.push((i, j, m));
            adj[i].push(j);
            adj[j].push(i);
        }
    }
    if edges.len() != n - 1 {
        return Err(not_finite("cycle"));
    }
    let multi: Vec<&(usize, usize, i64)> = edges.iter().filter(|e| e.2 > 1).collect();
    let branch: Vec<usize> = (0..n).filter(|&i| adj[i].len() >= 3).collect();

    match multi.as_slice() {
        [] => {}
        [&(_, _, 3)] if n == 2 => return SimpleType::new(Family::G, 2),
        [&(i, j, 2)] if branch.is_empty() => {
            if n == 2 {
                return SimpleType::new(Family::B, 2);
            }
            let path = walk_path(&adj);
            let pi = path.iter().position(|&x| x == i).unwrap();
            let pj = path.iter().position(|&x| x == j).unwrap();
            let (lo, hi) = (pi.min(pj), pi.max(pj));
            if lo == 0 || hi == n - 1 {
                let (leaf, inner) = if lo == 0 { (path[0], path[1]) } else { (path[n - 1], path[n - 2]) };
                let family = if d[leaf] < d[inner] { Family::B } else { Family::C };
                return SimpleType::new(family, n);
            }
            if n == 4 && lo == 1 {
                return SimpleType::new(Family::F, 4);
            }
            return Err(not_finite("double bond in an unexpected position"));
        }
        _ => return Err(not_finite("unsupported multiple bonds")),
    }

    match branch.as_slice() {
        [] => SimpleType::new(Family::A, n),
        [c] if adj[*c].len() == 3 => {
            let mut arms: Vec<usize> = adj[*c].iter().map(|&start| arm_length(&adj, *c, start)).collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, _] => SimpleType::new(Family::D, n),
                [1, 2, 2] => SimpleType::new(Family::E, 6),
                [1, 2, 3] => SimpleType::new(Family::E, 7),
                [1, 2, 4] => SimpleType::new(Family::E, 8),
                _ => Err(not_finite("branch arms do not match D or E")),
            }
        }
        _ => Err(not_finite("more than one branch node")),
    }
}

/// Nodes of a path graph in order from one end.
fn walk_path(adj: &[Vec<usize>]) -> Vec<usize> {
    let start = (0..adj.len()).find(|&i| adj[i].len() <= 1).unwrap_or(0);
    let mut path = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(&next) = adj[cur].iter().find(|&&x| x != prev) {
        path.push(next);
        prev = cur;
        cur = next;
    }
    path
}

fn arm_length(adj: &[Vec<usize>], center: usize, start: usize) -> usize {
    let mut len = 1;
    let (mut prev, mut cur) = (center, start);
    while let Some(&next) = adj[cur].iter().find(|&&x| x != prev) {
        len += 1;
        prev = cur;
        cur = next;
    }
    len
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cm(rows: &[&[i64]]) -> CartanMatrix {
        CartanMatrix::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn basic_cases() {
        assert_eq!(classify(&cm(&[&[2, -1], &[-1, 2]])).unwrap().to_string(), "A2");
        assert_eq!(classify(&cm(&[&[2, 0], &[0, 2]])).unwrap().to_string(), "A1+A1");
    }

    #[test]
    fn round_trips_every_type() {
        for t in SimpleType::all_up_to(12) {
            let class = classify(&CartanMatrix::of_type(t)).unwrap();
            let want = if t.family == Family::C && t.rank == 2 { "B2".parse().unwrap() } else { t };
            assert_eq!(class.single(), Some(want), "{t}");
        }
    }

    #[test]
    fn invariant_under_relabeling() {
        // reverse the node order of B3, C3, F4
        for t in ["B3", "C3", "F4", "E7"] {
            let m = CartanMatrix::of_type(t.parse().unwrap());
            let rev: Vec<usize> = (0..m.rank()).rev().collect();
            assert_eq!(classify(&m.restrict(&rev)).unwrap().to_string(), t);
        }
    }

    #[test]
    fn rejects_affine() {
        // affine A2 is a triangle
        assert!(matches!(
            classify(&cm(&[&[2, -1, -1], &[-1, 2, -1], &[-1, -1, 2]])),
            Err(Error::NotFiniteType(_))
        ));
        // affine A1
        assert!(classify(&cm(&[&[2, -2], &[-2, 2]])).is_err());
        // affine D4: four arms of length 1
        let d4aff = cm(&[
            &[2, -1, -1, -1, -1],
            &[-1, 2, 0, 0, 0],
            &[-1, 0, 2, 0, 0],
            &[-1, 0, 0, 2, 0],
            &[-1, 0, 0, 0, 2],
        ]);
        assert!(classify(&d4aff).is_err());
        // affine G2: 1 - 2 <=3 ... as a path of three with a triple bond
        assert!(classify(&cm(&[&[2, -1, 0], &[-1, 2, -1], &[0, -3, 2]])).is_err());
    }
}
