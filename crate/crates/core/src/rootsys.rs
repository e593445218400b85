//! Root systems of simple Lie algebras in simple-root coordinates.
//!
//! Node numbering follows Bourbaki:
//!
//! | type | diagram |
//! |------|---------|
//! | A_ℓ  | 1 - 2 - … - ℓ |
//! | B_ℓ  | 1 - 2 - … - (ℓ-1) => ℓ, node ℓ short |
//! | C_ℓ  | 1 - 2 - … - (ℓ-1) <= ℓ, node ℓ long |
//! | D_ℓ  | 1 - … - (ℓ-2) with ℓ-1 and ℓ both attached to ℓ-2 |
//! | E_ℓ  | 1 - 3 - 4 - 5 - … - ℓ with 2 attached to 4 |
//! | F_4  | 1 - 2 => 3 - 4, nodes 1, 2 long |
//! | G_2  | 1 <= 2, node 1 short |
//!
//! Roots are generated by closure over simple root strings: for a positive
//! root φ and a simple root α_i, `φ + α_i` is a root exactly when
//! `p - ⟨φ, α_i^∨⟩ > 0`, where `p` is the largest `k` with `φ - kα_i` a root.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::{Rat, RatMat, RatVec};

/// Largest rank accepted by default.
pub const DEFAULT_MAX_RANK: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleType {
    pub family: Family,
    pub rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<SimpleType> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(SimpleType { family, rank })
        } else {
            Err(Error::InvalidRank { family: family.letter(), rank })
        }
    }

    /// Number of roots (positive and negative).
    pub fn root_count(&self) -> usize {
        let l = self.rank;
        match self.family {
            Family::A => l * (l + 1),
            Family::B | Family::C => 2 * l * l,
            Family::D => 2 * l * (l - 1),
            Family::E => match l {
                6 => 72,
                7 => 126,
                _ => 240,
            },
            Family::F => 48,
            Family::G => 12,
        }
    }

    /// The name the diagram classifier reports for this type: C2 becomes B2.
    pub fn canonical(self) -> SimpleType {
        match (self.family, self.rank) {
            (Family::C, 2) => SimpleType { family: Family::B, rank: 2 },
            _ => self,
        }
    }

    /// Every simple type of rank at most `max_rank`, in the order A, B, C, D, E, F, G.
    pub fn all_up_to(max_rank: usize) -> Vec<SimpleType> {
        let mut out = Vec::new();
        for family in [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G] {
            for rank in 1..=max_rank {
                if let Ok(t) = SimpleType::new(family, rank) {
                    out.push(t);
                }
            }
        }
        out
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<SimpleType> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(Error::UnknownType(s.to_string())),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| Error::UnknownType(s.to_string()))?;
        SimpleType::new(family, rank)
    }
}

impl Serialize for SimpleType {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SimpleType {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<SimpleType, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Integer Cartan matrix, `a_ij = 2(α_i, α_j)/(α_j, α_j)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CartanMatrix(Vec<Vec<i64>>);

impl CartanMatrix {
    /// Checks the generalized Cartan matrix axioms and symmetrizability.
    pub fn new(entries: Vec<Vec<i64>>) -> Result<CartanMatrix> {
        let n = entries.len();
        if n == 0 {
            return Err(Error::InvalidCartan("empty matrix".into()));
        }
        for (i, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidCartan(format!("row {} has length {}, expected {n}", i + 1, row.len())));
            }
            if row[i] != 2 {
                return Err(Error::InvalidCartan(format!("diagonal entry {} is {}, expected 2", i + 1, row[i])));
            }
            for (j, &a) in row.iter().enumerate() {
                if i == j {
                    continue;
                }
                if a > 0 {
                    return Err(Error::InvalidCartan(format!("positive off-diagonal entry at ({}, {})", i + 1, j + 1)));
                }
                if (a == 0) != (entries[j][i] == 0) {
                    return Err(Error::InvalidCartan(format!(
                        "zero pattern not symmetric at ({}, {})",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        let m = CartanMatrix(entries);
        m.symmetrizer()?;
        Ok(m)
    }

    /// Cartan matrix of a simple type with Bourbaki numbering.
    pub fn of_type(t: SimpleType) -> CartanMatrix {
        let l = t.rank;
        let mut a = vec![vec![0i64; l]; l];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
            a[i - 1][j - 1] = aij;
            a[j - 1][i - 1] = aji;
        };
        match t.family {
            Family::A => (1..l).for_each(|i| link(i, i + 1, -1, -1)),
            Family::B => {
                (1..l - 1).for_each(|i| link(i, i + 1, -1, -1));
                link(l - 1, l, -2, -1);
            }
            Family::C => {
                (1..l - 1).for_each(|i| link(i, i + 1, -1, -1));
                link(l - 1, l, -1, -2);
            }
            Family::D => {
                (1..l - 1).for_each(|i| link(i, i + 1, -1, -1));
                link(l - 2, l, -1, -1);
            }
            Family::E => {
                link(1, 3, -1, -1);
                link(2, 4, -1, -1);
                (3..l).for_each(|i| link(i, i + 1, -1, -1));
            }
            Family::F => {
                link(1, 2, -1, -1);
                link(2, 3, -2, -1);
                link(3, 4, -1, -1);
            }
            Family::G => link(1, 2, -1, -3),
        }
        CartanMatrix(a)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.0
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.0[i][j]
    }

    /// Minimal positive integers `d` with `a_ij d_j = a_ji d_i`, computed per
    /// connected component.
    pub fn symmetrizer(&self) -> Result<Vec<i64>> {
        let n = self.rank();
        let mut d: Vec<Option<Rat>> = vec![None; n];
        for comp in self.components() {
            d[comp[0]] = Some(Rat::ONE);
            let mut stack = vec![comp[0]];
            while let Some(i) = stack.pop() {
                let di = d[i].unwrap();
                for j in 0..n {
                    if i == j || self.0[i][j] == 0 {
                        continue;
                    }
                    // a_ij d_j = a_ji d_i
                    let dj = di * Rat::int(self.0[j][i]) / Rat::int(self.0[i][j]);
                    match d[j] {
                        None => {
                            d[j] = Some(dj);
                            stack.push(j);
                        }
                        Some(prev) if prev != dj => {
                            return Err(Error::InvalidCartan("matrix is not symmetrizable".into()));
                        }
                        Some(_) => {}
                    }
                }
            }
            // clear denominators, then divide by the gcd
            let lcm = comp.iter().fold(1i64, |acc, &i| lcm(acc, d[i].unwrap().denom()));
            let ints: Vec<i64> = comp.iter().map(|&i| (d[i].unwrap() * Rat::int(lcm)).numer()).collect();
            let g = ints.iter().fold(0i64, |acc, &x| gcd(acc, x));
            for (&i, &x) in comp.iter().zip(&ints) {
                d[i] = Some(Rat::int(x / g));
            }
        }
        Ok(d.into_iter().map(|x| x.unwrap().numer()).collect())
    }

    /// Connected components of the Dynkin graph, each sorted, ordered by least node.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.rank();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut k = 0;
            while k < comp.len() {
                let i = comp[k];
                for j in 0..n {
                    if !seen[j] && self.0[i][j] != 0 {
                        seen[j] = true;
                        comp.push(j);
                    }
                }
                k += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Principal submatrix on the given nodes, in the given order.
    pub fn restrict(&self, nodes: &[usize]) -> CartanMatrix {
        CartanMatrix(nodes.iter().map(|&i| nodes.iter().map(|&j| self.0[i][j]).collect()).collect())
    }

    /// Cartan matrix of a family of vectors under a symmetric integer form.
    pub(crate) fn from_gram(gram: &[Vec<i64>]) -> Result<CartanMatrix> {
        let n = gram.len();
        let mut a = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                let num = 2 * gram[i][j];
                let den = gram[j][j];
                if den <= 0 || num % den != 0 {
                    return Err(Error::InvalidCartan(format!(
                        "2(x_{i},x_{j})/(x_{j},x_{j}) = {num}/{den} is not an integer",
                        i = i + 1,
                        j = j + 1
                    )));
                }
                a[i][j] = num / den;
            }
        }
        CartanMatrix::new(a)
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn lcm(a: i64, b: i64) -> i64 {
    a / gcd(a, b) * b
}

/// Cartan matrix of a simple type (Bourbaki numbering).
pub fn cartan_matrix(t: SimpleType) -> CartanMatrix {
    CartanMatrix::of_type(t)
}

/// A root as its integer coefficients over the simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root(Vec<i64>);

impl Root {
    pub fn new(coeffs: Vec<i64>) -> Root {
        Root(coeffs)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.height() > 0
    }

    pub fn to_ratvec(&self) -> RatVec {
        RatVec::from_ints(&self.0)
    }
}

/// Roots are ordered by height, then lexicographically by coefficients.
impl Ord for Root {
    fn cmp(&self, other: &Root) -> std::cmp::Ordering {
        (self.height(), &self.0).cmp(&(other.height(), &other.0))
    }
}

impl PartialOrd for Root {
    fn partial_cmp(&self, other: &Root) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Index of a root inside its [`RootSystem`]. Index order agrees with the
/// (height, lexicographic) order of the roots themselves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootId(pub u32);

impl RootId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// The complete root system of a simple Lie algebra.
#[derive(Clone, Debug)]
pub struct RootSystem {
    simple_type: SimpleType,
    cartan: CartanMatrix,
    d: Vec<i64>,
    gram: Vec<Vec<i64>>,
    roots: Vec<Root>,
    index: HashMap<Vec<i64>, RootId>,
    first_positive: usize,
    marks: Vec<i64>,
    neg: Vec<RootId>,
    // sums[a * n + b] = a + b when that is a root
    sums: Vec<Option<RootId>>,
    // pairings[a * n + b] = (a, b)
    pairings: Vec<i64>,
}

impl RootSystem {
    /// Root system of a simple type.
    pub fn of_type(t: SimpleType) -> Result<RootSystem> {
        let mut rs = generate(&CartanMatrix::of_type(t))?;
        // the classifier reports C2 as B2
        debug_assert_eq!(rs.simple_type, t.canonical());
        rs.simple_type = t;
        Ok(rs)
    }

    pub fn simple_type(&self) -> SimpleType {
        self.simple_type
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.d
    }

    /// Gram matrix `(α_i, α_j)` of the simple roots.
    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn root(&self, id: RootId) -> &Root {
        &self.roots[id.index()]
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn ids(&self) -> impl Iterator<Item = RootId> + '_ {
        (0..self.roots.len() as u32).map(RootId)
    }

    pub fn positive_ids(&self) -> impl Iterator<Item = RootId> + '_ {
        (self.first_positive as u32..self.roots.len() as u32).map(RootId)
    }

    pub fn positives(&self) -> &[Root] {
        &self.roots[self.first_positive..]
    }

    pub fn simple_root(&self, i: usize) -> RootId {
        let mut e = vec![0; self.rank()];
        e[i] = 1;
        self.index[&e]
    }

    pub fn id_of(&self, coeffs: &[i64]) -> Option<RootId> {
        self.index.get(coeffs).copied()
    }

    /// Membership in Δ; the zero vector is not a root.
    pub fn is_root(&self, coeffs: &[i64]) -> bool {
        coeffs.len() == self.rank() && self.index.contains_key(coeffs)
    }

    pub fn psi(&self) -> RootId {
        RootId(self.roots.len() as u32 - 1)
    }

    /// Coefficients `n_i(ψ)` of the highest root.
    pub fn marks(&self) -> &[i64] {
        &self.marks
    }

    pub fn neg(&self, id: RootId) -> RootId {
        self.neg[id.index()]
    }

    /// `a + b` when it is a root.
    pub fn sum(&self, a: RootId, b: RootId) -> Option<RootId> {
        self.sums[a.index() * self.roots.len() + b.index()]
    }

    /// `a - b` when it is a root.
    pub fn diff(&self, a: RootId, b: RootId) -> Option<RootId> {
        self.sum(a, self.neg(b))
    }

    /// `(a, b)` for two roots.
    pub fn pairing(&self, a: RootId, b: RootId) -> i64 {
        self.pairings[a.index() * self.roots.len() + b.index()]
    }

    /// The symmetrized form on integer coefficient vectors.
    pub fn form_int(&self, v: &[i64], w: &[i64]) -> i64 {
        let l = self.rank();
        let mut acc = 0i64;
        for i in 0..l {
            if v[i] == 0 {
                continue;
            }
            let row: i64 = (0..l).map(|j| self.gram[i][j] * w[j]).sum();
            acc += v[i] * row;
        }
        acc
    }

    /// The symmetrized form `Σ v_i w_j a_ij d_j` on rational vectors.
    pub fn form(&self, v: &RatVec, w: &RatVec) -> Rat {
        form(self, v, w)
    }

    /// Gram matrix of the symmetrized form as a rational matrix.
    pub fn gram_rat(&self) -> RatMat {
        RatMat::from_ints(&self.gram)
    }

    pub fn to_doc(&self) -> RootSystemDoc {
        RootSystemDoc {
            schema: ROOTS_SCHEMA.to_string(),
            simple_type: self.simple_type,
            cartan: self.cartan.clone(),
            d: self.d.clone(),
            positives: self.positives().to_vec(),
            psi: self.root(self.psi()).clone(),
            marks: self.marks.clone(),
        }
    }
}

/// The symmetrized bilinear form on simple-root coordinates.
pub fn form(rs: &RootSystem, v: &RatVec, w: &RatVec) -> Rat {
    let l = rs.rank();
    assert!(v.len() == l && w.len() == l, "vectors must have length {l}");
    let mut acc = Rat::ZERO;
    for i in 0..l {
        if v[i].is_zero() {
            continue;
        }
        for j in 0..l {
            if rs.gram[i][j] != 0 && !w[j].is_zero() {
                acc = acc + v[i] * w[j] * Rat::int(rs.gram[i][j]);
            }
        }
    }
    acc
}

pub fn is_root(rs: &RootSystem, coeffs: &[i64]) -> bool {
    rs.is_root(coeffs)
}

fn max_positive_roots(rank: usize) -> usize {
    match rank {
        2 => 6,
        4 => 24,
        7 => 63,
        8 => 120,
        l => l * l,
    }
}

/// Builds the full root system of an indecomposable finite-type Cartan matrix.
pub fn generate(cartan: &CartanMatrix) -> Result<RootSystem> {
    let l = cartan.rank();
    if cartan.components().len() != 1 {
        return Err(Error::InvalidCartan("matrix is decomposable; the ambient algebra must be simple".into()));
    }
    let d = cartan.symmetrizer()?;
    let bound = max_positive_roots(l);

    let unit = |i: usize| {
        let mut e = vec![0i64; l];
        e[i] = 1;
        e
    };
    let mut known: HashSet<Vec<i64>> = (0..l).map(unit).collect();
    let mut positives: Vec<Vec<i64>> = (0..l).map(unit).collect();
    let mut level: Vec<Vec<i64>> = positives.clone();
    while !level.is_empty() {
        let mut next: Vec<Vec<i64>> = Vec::new();
        for phi in &level {
            for i in 0..l {
                if *phi == unit(i) {
                    continue;
                }
                let mut p = 0;
                let mut down = phi.clone();
                loop {
                    down[i] -= 1;
                    if !known.contains(&down) {
                        break;
                    }
                    p += 1;
                }
                // <phi, alpha_i^vee> = sum_k phi_k a_ki
                let pair: i64 = (0..l).map(|k| phi[k] * cartan.get(k, i)).sum();
                if p - pair > 0 {
                    let mut up = phi.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        positives.extend(next.iter().cloned());
        if positives.len() > bound {
            return Err(Error::NotFiniteType(format!(
                "root closure exceeded {bound} positive roots at rank {l}"
            )));
        }
        level = next;
    }

    let simple_type = crate::bds::classify(cartan)?.single().ok_or_else(|| {
        Error::NotFiniteType("matrix does not classify as a single simple type".into())
    })?;
    if 2 * positives.len() != simple_type.root_count() {
        return Err(Error::NotFiniteType(format!(
            "closure produced {} roots, type {} has {}",
            2 * positives.len(),
            simple_type,
            simple_type.root_count()
        )));
    }

    let mut roots: Vec<Root> = positives
        .iter()
        .flat_map(|p| [Root(p.clone()), Root(p.iter().map(|x| -x).collect())])
        .collect();
    roots.sort();
    let n = roots.len();
    let index: HashMap<Vec<i64>, RootId> =
        roots.iter().enumerate().map(|(k, r)| (r.0.clone(), RootId(k as u32))).collect();
    let neg: Vec<RootId> = roots.iter().map(|r| index[&r.0.iter().map(|x| -x).collect::<Vec<_>>()]).collect();
    let first_positive = n / 2;
    let marks = roots[n - 1].0.clone();

    let gram: Vec<Vec<i64>> = (0..l).map(|i| (0..l).map(|j| cartan.get(i, j) * d[j]).collect()).collect();

    let mut sums = vec![None; n * n];
    let mut pairings = vec![0i64; n * n];
    let mut buf = vec![0i64; l];
    let mut rs = RootSystem {
        simple_type,
        cartan: cartan.clone(),
        d,
        gram,
        roots,
        index,
        first_positive,
        marks,
        neg,
        sums: Vec::new(),
        pairings: Vec::new(),
    };
    for a in 0..n {
        for b in 0..n {
            for k in 0..l {
                buf[k] = rs.roots[a].0[k] + rs.roots[b].0[k];
            }
            sums[a * n + b] = rs.index.get(&buf).copied();
            pairings[a * n + b] = rs.form_int(&rs.roots[a].0, &rs.roots[b].0);
        }
    }
    rs.sums = sums;
    rs.pairings = pairings;
    Ok(rs)
}

pub const ROOTS_SCHEMA: &str = "troot.roots/1";

/// JSON document emitted by `troot roots`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSystemDoc {
    pub schema: String,
    #[serde(rename = "type")]
    pub simple_type: SimpleType,
    pub cartan: CartanMatrix,
    pub d: Vec<i64>,
    pub positives: Vec<Root>,
    pub psi: Root,
    pub marks: Vec<i64>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::of_type(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn parse_types() {
        assert_eq!("e8".parse::<SimpleType>().unwrap().to_string(), "E8");
        assert!(matches!("D3".parse::<SimpleType>(), Err(Error::InvalidRank { .. })));
        assert!(matches!("E9".parse::<SimpleType>(), Err(Error::InvalidRank { .. })));
        assert!(matches!("G3".parse::<SimpleType>(), Err(Error::InvalidRank { .. })));
        assert!(matches!("B1".parse::<SimpleType>(), Err(Error::InvalidRank { .. })));
        assert!(matches!("X2".parse::<SimpleType>(), Err(Error::UnknownType(_))));
        assert!("B2".parse::<SimpleType>().is_ok() && "C2".parse::<SimpleType>().is_ok());
    }

    #[test]
    fn small_cartan_matrices() {
        assert_eq!(cartan_matrix("A2".parse().unwrap()).entries(), &[vec![2, -1], vec![-1, 2]]);
        assert_eq!(cartan_matrix("A1".parse().unwrap()).entries(), &[vec![2]]);
        let g2 = cartan_matrix("G2".parse().unwrap());
        assert_eq!(g2.get(0, 1) * g2.get(1, 0), 3);
        let d = g2.symmetrizer().unwrap();
        assert_eq!(d, vec![1, 3]);
        assert_eq!(g2.get(0, 1) * d[1], g2.get(1, 0) * d[0]);
    }

    #[test]
    fn rejects_bad_matrices() {
        assert!(CartanMatrix::new(vec![vec![2, 1], vec![1, 2]]).is_err());
        assert!(CartanMatrix::new(vec![vec![2, -1], vec![0, 2]]).is_err());
        assert!(CartanMatrix::new(vec![vec![1, -1], vec![-1, 2]]).is_err());
        // not symmetrizable: a 3-cycle with inconsistent ratios
        assert!(CartanMatrix::new(vec![vec![2, -1, -1], vec![-2, 2, -1], vec![-1, -1, 2]]).is_err());
        // affine A1
        let aff = CartanMatrix::new(vec![vec![2, -2], vec![-2, 2]]).unwrap();
        assert!(matches!(generate(&aff), Err(Error::NotFiniteType(_))));
        // decomposable
        let split = CartanMatrix::new(vec![vec![2, 0], vec![0, 2]]).unwrap();
        assert!(matches!(generate(&split), Err(Error::InvalidCartan(_))));
    }

    #[test]
    fn a2_roots() {
        let a2 = rs("A2");
        let pos: Vec<&[i64]> = a2.positives().iter().map(Root::coeffs).collect();
        assert_eq!(pos, vec![&[0, 1][..], &[1, 0], &[1, 1]]);
        assert_eq!(a2.root(a2.psi()).coeffs(), &[1, 1]);
        assert_eq!(a2.marks(), &[1, 1]);
        assert_eq!(a2.len(), 6);
        assert!(a2.is_root(&[1, 1]));
        assert!(!a2.is_root(&[0, 0]));
        assert!(!a2.is_root(&[2, 1]));
    }

    #[test]
    fn a1_roots() {
        let a1 = rs("A1");
        assert_eq!(a1.len(), 2);
        assert_eq!(a1.marks(), &[1]);
    }

    #[test]
    fn g2_roots() {
        let g2 = rs("G2");
        assert_eq!(g2.len(), 12);
        assert_eq!(g2.marks(), &[3, 2]);
    }

    #[test]
    fn highest_root_marks() {
        // Bourbaki plates
        let cases: &[(&str, &[i64])] = &[
            ("B4", &[1, 2, 2, 2]),
            ("C4", &[2, 2, 2, 1]),
            ("D6", &[1, 2, 2, 2, 1, 1]),
            ("E6", &[1, 2, 2, 3, 2, 1]),
            ("E7", &[2, 2, 3, 4, 3, 2, 1]),
            ("E8", &[2, 3, 4, 6, 5, 4, 3, 2]),
            ("F4", &[2, 3, 4, 2]),
        ];
        for (t, marks) in cases {
            assert_eq!(rs(t).marks(), *marks, "{t}");
        }
    }

    #[test]
    fn form_values() {
        let a2 = rs("A2");
        let a1 = RatVec::from_ints(&[1, 0]);
        let a2v = RatVec::from_ints(&[0, 1]);
        assert_eq!(form(&a2, &a1, &a2v), Rat::int(-1));
        assert_eq!(form(&a2, &a1, &a1), Rat::int(2));
    }

    #[test]
    fn root_counts_and_structure() {
        for t in SimpleType::all_up_to(8) {
            let r = rs(&t.to_string());
            assert_eq!(r.len(), t.root_count(), "{t}");
            assert_eq!(r.simple_type(), t);
            let psi = r.psi();
            let psi_len = r.pairing(psi, psi);
            for id in r.ids() {
                let root = r.root(id);
                let c = root.coeffs();
                assert!(c.iter().all(|&x| x >= 0) || c.iter().all(|&x| x <= 0), "{t} mixed {root}");
                assert_ne!(root.height(), 0);
                assert_eq!(r.root(r.neg(id)).coeffs(), c.iter().map(|x| -x).collect::<Vec<_>>());
                assert!(r.pairing(id, id) > 0);
                assert!(psi_len >= r.pairing(id, id));
                if root.is_positive() {
                    assert!(root.height() <= r.root(psi).height());
                    for (m, x) in r.marks().iter().zip(c) {
                        assert!(m >= x);
                    }
                }
            }
            assert!(r.marks().iter().all(|&m| m > 0));
            // psi is the unique root of maximal height
            let hmax = r.root(psi).height();
            assert_eq!(r.roots().iter().filter(|x| x.height() == hmax).count(), 1);
        }
    }

    #[test]
    fn sum_table_sign_consistency() {
        for t in ["B3", "G2", "F4"] {
            let r = rs(t);
            for a in r.ids() {
                for b in r.ids() {
                    if let Some(c) = r.sum(a, b) {
                        let (ra, rb, rc) = (r.root(a), r.root(b), r.root(c));
                        for k in 0..r.rank() {
                            assert_eq!(ra.coeffs()[k] + rb.coeffs()[k], rc.coeffs()[k]);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn doc_round_trips() {
        let doc = rs("G2").to_doc();
        let text = serde_json::to_string(&doc).unwrap();
        let back: RootSystemDoc = serde_json::from_str(&text).unwrap();
        assert_eq!(back, doc);
        assert!(text.contains("\"type\":\"G2\""));
    }
}
