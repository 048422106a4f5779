//! Rational weight vectors.

use std::fmt;
use std::ops::{Add, AddAssign, Index, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Rational = Ratio<i64>;

/// Parses `p`, `-p` or `p/q` into a rational in lowest terms.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let r = Rational::from_str(t).map_err(|_| Error::Parse(format!("not a rational number: `{s}`")))?;
    Ok(r)
}

/// A vector of exact rationals in the fundamental-weight basis.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(Vec<Rational>);

impl Weight {
    pub fn new(coords: Vec<Rational>) -> Self {
        Weight(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![Rational::zero(); rank])
    }

    pub fn from_ints<I: IntoIterator<Item = i64>>(coords: I) -> Self {
        Weight(coords.into_iter().map(Rational::from_integer).collect())
    }

    /// Builds a weight from `(numerator, denominator)` pairs.
    pub fn from_fracs<I: IntoIterator<Item = (i64, i64)>>(coords: I) -> Self {
        Weight(coords.into_iter().map(|(p, q)| Rational::new(p, q)).collect())
    }

    /// Parses a comma-separated list of rationals, e.g. `1,-1/2,0`.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() {
            return Ok(Weight(Vec::new()));
        }
        t.split(',').map(parse_rational).collect::<Result<Vec<_>>>().map(Weight)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }

    pub fn scale(&self, k: Rational) -> Self {
        Weight(self.0.iter().map(|c| c * k).collect())
    }

    pub fn half(&self) -> Self {
        self.scale(Rational::new(1, 2))
    }

    /// Euclidean dot product of coordinate vectors (not the invariant form).
    pub fn dot(&self, other: &[Rational]) -> Rational {
        self.0.iter().zip(other).map(|(a, b)| a * b).sum()
    }

    /// Canonical string coordinates, `"p/q"` or `"p"`.
    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(|c| c.to_string()).collect()
    }

    pub fn from_strings<S: AsRef<str>>(coords: &[S]) -> Result<Self> {
        coords.iter().map(|s| parse_rational(s.as_ref())).collect::<Result<Vec<_>>>().map(Weight)
    }

    /// Index of the first strictly negative coordinate.
    pub fn first_negative(&self) -> Option<usize> {
        self.0.iter().position(|c| c.is_negative())
    }

    pub fn is_positive_integer_combination(&self) -> bool {
        self.0.iter().all(|c| c.is_integer() && !c.is_negative())
    }

    pub(crate) fn one_hot(rank: usize, i: usize) -> Self {
        let mut v = vec![Rational::zero(); rank];
        v[i] = Rational::one();
        Weight(v)
    }
}

impl Index<usize> for Weight {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl Add<&Weight> for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        debug_assert_eq!(self.rank(), rhs.rank());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub<&Weight> for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        debug_assert_eq!(self.rank(), rhs.rank());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        &self + &rhs
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        &self - &rhs
    }
}

impl AddAssign<&Weight> for Weight {
    fn add_assign(&mut self, rhs: &Weight) {
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a += b;
        }
    }
}

impl SubAssign<&Weight> for Weight {
    fn sub_assign(&mut self, rhs: &Weight) {
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a -= b;
        }
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|c| -c).collect())
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        -&self
    }
}

impl Mul<&Weight> for i64 {
    type Output = Weight;
    fn mul(self, rhs: &Weight) -> Weight {
        rhs.scale(Rational::from_integer(self))
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(deserializer)?;
        Weight::from_strings(&raw).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_prints_lowest_terms() {
        let w = Weight::parse("2/4, -3, 0").unwrap();
        assert_eq!(w.to_strings(), vec!["1/2", "-3", "0"]);
        assert_eq!(w.to_string(), "[1/2,-3,0]");
        assert_eq!(Weight::parse("").unwrap().rank(), 0);
        assert!(Weight::parse("1,x").is_err());
    }

    #[test]
    fn json_is_array_of_strings() {
        let w = Weight::from_fracs([(1, 2), (-6, 3)]);
        let s = serde_json::to_string(&w).unwrap();
        assert_eq!(s, r#"["1/2","-2"]"#);
        let back: Weight = serde_json::from_str(&s).unwrap();
        assert_eq!(back, w);
        assert!(serde_json::from_str::<Weight>("[1,2]").is_err());
    }

    #[test]
    fn ordering_is_numeric_lexicographic() {
        let a = Weight::from_ints([-1, 5]);
        let b = Weight::from_fracs([(-1, 2), (0, 1)]);
        assert!(a < b);
    }
}

/// Serde adapter writing a rational as its canonical `"p/q"` string.
pub mod rational_string {
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serializer};

    use super::{parse_rational, Rational};

    pub fn serialize<S: Serializer>(r: &Rational, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(deserializer)?;
        parse_rational(&s).map_err(D::Error::custom)
    }
}
