//! Exact rational arithmetic and the small dense linear algebra used by the
//! rest of the crate.
//!
//! Every quantity is a fraction of two `i64`s kept in lowest terms. All
//! arithmetic is checked: an overflow panics instead of wrapping, since the
//! ranks (at most 12) and coefficients (marks at most 6) keep every value far
//! inside the 64-bit range.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Div, Index, IndexMut, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An exact rational number with positive denominator, always reduced.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rat(Ratio<i64>);

impl Rat {
    pub const ZERO: Rat = Rat(Ratio::new_raw(0, 1));
    pub const ONE: Rat = Rat(Ratio::new_raw(1, 1));

    /// Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Rat {
        assert!(den != 0, "zero denominator");
        Rat(Ratio::new(num, den))
    }

    pub fn int(n: i64) -> Rat {
        Rat(Ratio::from_integer(n))
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// The integer value, if the denominator is 1.
    pub fn to_integer(&self) -> Option<i64> {
        self.is_integer().then(|| self.numer())
    }

    pub fn signum(&self) -> i64 {
        self.numer().signum()
    }

    pub fn abs(&self) -> Rat {
        Rat(self.0.abs())
    }

    pub fn recip(&self) -> Rat {
        assert!(!self.is_zero(), "reciprocal of zero");
        Rat(self.0.recip())
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Rat {
        Rat::int(n)
    }
}

impl Add for Rat {
    type Output = Rat;
    fn add(self, rhs: Rat) -> Rat {
        Rat(self.0.checked_add(&rhs.0).expect("rational overflow in add"))
    }
}

impl Sub for Rat {
    type Output = Rat;
    fn sub(self, rhs: Rat) -> Rat {
        Rat(self.0.checked_sub(&rhs.0).expect("rational overflow in sub"))
    }
}

impl Mul for Rat {
    type Output = Rat;
    fn mul(self, rhs: Rat) -> Rat {
        Rat(self.0.checked_mul(&rhs.0).expect("rational overflow in mul"))
    }
}

impl Div for Rat {
    type Output = Rat;
    fn div(self, rhs: Rat) -> Rat {
        assert!(!rhs.is_zero(), "division by zero");
        Rat(self.0.checked_div(&rhs.0).expect("rational overflow in div"))
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        assert!(self.numer() != i64::MIN, "rational overflow in neg");
        Rat(-self.0)
    }
}

impl Sum for Rat {
    fn sum<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::ZERO, |a, b| a + b)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom() == 1 {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Rat, String> {
        let parse = |t: &str| t.trim().parse::<i64>().map_err(|e| format!("bad rational {s:?}: {e}"));
        match s.split_once('/') {
            Some((n, d)) => {
                let d = parse(d)?;
                if d == 0 {
                    return Err(format!("bad rational {s:?}: zero denominator"));
                }
                Ok(Rat::new(parse(n)?, d))
            }
            None => Ok(Rat::int(parse(s)?)),
        }
    }
}

// Rationals travel through JSON as strings ("3/2", "-1") so that they stay exact.
impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Rat, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A fixed-length vector of rationals, in simple-root coordinates unless
/// stated otherwise.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RatVec(pub Vec<Rat>);

impl RatVec {
    pub fn zeros(len: usize) -> RatVec {
        RatVec(vec![Rat::ZERO; len])
    }

    pub fn from_ints(v: &[i64]) -> RatVec {
        RatVec(v.iter().map(|&x| Rat::int(x)).collect())
    }

    pub fn unit(len: usize, i: usize) -> RatVec {
        let mut v = RatVec::zeros(len);
        v.0[i] = Rat::ONE;
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rat::is_zero)
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rat> {
        self.0.iter()
    }

    pub fn dot(&self, other: &RatVec) -> Rat {
        assert_eq!(self.len(), other.len(), "length mismatch");
        self.0.iter().zip(&other.0).map(|(&a, &b)| a * b).sum()
    }

    pub fn scale(&self, c: Rat) -> RatVec {
        RatVec(self.0.iter().map(|&x| x * c).collect())
    }

    /// `self + c * other`.
    pub fn axpy(&self, c: Rat, other: &RatVec) -> RatVec {
        assert_eq!(self.len(), other.len(), "length mismatch");
        RatVec(self.0.iter().zip(&other.0).map(|(&a, &b)| a + c * b).collect())
    }
}

impl Index<usize> for RatVec {
    type Output = Rat;
    fn index(&self, i: usize) -> &Rat {
        &self.0[i]
    }
}

impl IndexMut<usize> for RatVec {
    fn index_mut(&mut self, i: usize) -> &mut Rat {
        &mut self.0[i]
    }
}

impl Add for &RatVec {
    type Output = RatVec;
    fn add(self, rhs: &RatVec) -> RatVec {
        self.axpy(Rat::ONE, rhs)
    }
}

impl Sub for &RatVec {
    type Output = RatVec;
    fn sub(self, rhs: &RatVec) -> RatVec {
        self.axpy(-Rat::ONE, rhs)
    }
}

impl fmt::Display for RatVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Dense rational matrix stored by rows.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RatMat(pub Vec<RatVec>);

impl RatMat {
    pub fn identity(n: usize) -> RatMat {
        RatMat((0..n).map(|i| RatVec::unit(n, i)).collect())
    }

    pub fn from_ints(rows: &[Vec<i64>]) -> RatMat {
        RatMat(rows.iter().map(|r| RatVec::from_ints(r)).collect())
    }

    pub fn nrows(&self) -> usize {
        self.0.len()
    }

    pub fn ncols(&self) -> usize {
        self.0.first().map_or(0, RatVec::len)
    }

    pub fn is_square(&self) -> bool {
        self.0.iter().all(|r| r.len() == self.nrows())
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.nrows();
        self.is_square() && (0..n).all(|i| (0..i).all(|j| self.0[i][j] == self.0[j][i]))
    }

    pub fn mul_vec(&self, v: &RatVec) -> RatVec {
        RatVec(self.0.iter().map(|row| row.dot(v)).collect())
    }

    pub fn transpose(&self) -> RatMat {
        let (m, n) = (self.nrows(), self.ncols());
        RatMat((0..n).map(|j| RatVec((0..m).map(|i| self.0[i][j]).collect())).collect())
    }
}

/// Reduced row echelon form in place; returns the pivot columns.
fn row_reduce(rows: &mut [RatVec]) -> Vec<usize> {
    let m = rows.len();
    let n = rows.first().map_or(0, RatVec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        // first nonzero pivot
        let Some(p) = (r..m).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        rows[r] = rows[r].scale(inv);
        for i in 0..m {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c];
                rows[i] = rows[i].axpy(-f, &rows[r]);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Solves `gram · x = rhs` exactly.
pub fn solve(gram: &RatMat, rhs: &RatVec) -> Result<RatVec> {
    let n = gram.nrows();
    if !gram.is_square() || rhs.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} system with right-hand side of length {}",
            n,
            gram.ncols(),
            rhs.len()
        )));
    }
    let mut aug: Vec<RatVec> = gram
        .0
        .iter()
        .zip(rhs.iter())
        .map(|(row, &b)| {
            let mut r = row.0.clone();
            r.push(b);
            RatVec(r)
        })
        .collect();
    let pivots = row_reduce(&mut aug);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &c)| i != c) {
        return Err(Error::SingularMatrix);
    }
    Ok(RatVec(aug.iter().map(|r| r[n]).collect()))
}

/// Coefficients of the orthogonal projection of a vector onto the span of a
/// linearly independent family, given the family's Gram matrix and the
/// pairings of the vector with each family member.
///
/// An empty span yields an empty coefficient list.
pub fn project(span_gram: &RatMat, pairings: &RatVec) -> Result<RatVec> {
    if span_gram.nrows() == 0 && pairings.is_empty() {
        return Ok(RatVec::default());
    }
    solve(span_gram, pairings)
}

/// Rank of the row space.
pub fn rank(rows: &[RatVec]) -> usize {
    let mut work = rows.to_vec();
    row_reduce(&mut work).len()
}

pub fn determinant(mat: &RatMat) -> Rat {
    assert!(mat.is_square(), "determinant of a non-square matrix");
    let n = mat.nrows();
    let mut a = mat.0.clone();
    let mut det = Rat::ONE;
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Rat::ZERO;
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det = det * a[c][c];
        for i in c + 1..n {
            if !a[i][c].is_zero() {
                let f = a[i][c] / a[c][c];
                a[i] = a[i].axpy(-f, &a[c]);
            }
        }
    }
    det
}

/// Sylvester's criterion on leading principal minors.
pub fn is_positive_definite(mat: &RatMat) -> bool {
    if !mat.is_symmetric() {
        return false;
    }
    (1..=mat.nrows()).all(|k| {
        let minor = RatMat(mat.0[..k].iter().map(|r| RatVec(r.0[..k].to_vec())).collect());
        determinant(&minor) > Rat::ZERO
    })
}

impl PartialEq<i64> for Rat {
    fn eq(&self, other: &i64) -> bool {
        self.denom() == 1 && self.numer() == *other
    }
}

impl PartialOrd<i64> for Rat {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        Some(self.cmp(&Rat::int(*other)))
    }
}
