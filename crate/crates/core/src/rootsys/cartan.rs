use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::weight::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    fn from_char(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => Series::A,
            'B' => Series::B,
            'C' => Series::C,
            'D' => Series::D,
            'E' => Series::E,
            'F' => Series::F,
            'G' => Series::G,
            _ => return None,
        })
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        };
        write!(f, "{c}")
    }
}

/// One simple factor `X_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SimpleType {
    pub series: Series,
    pub rank: usize,
}

impl SimpleType {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let ok = match series {
            Series::A => rank >= 1,
            Series::B | Series::C => rank >= 2,
            Series::D => rank >= 3,
            Series::E => rank == 6,
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if !ok {
            let bound = match series {
                Series::A => "n >= 1",
                Series::B | Series::C => "n >= 2",
                Series::D => "n >= 3",
                Series::E => "n = 6",
                Series::F => "n = 4",
                Series::G => "n = 2",
            };
            return Err(Error::InvalidType {
                factor: format!("{series}{rank}"),
                reason: format!("series {series} requires {bound}"),
            });
        }
        Ok(SimpleType { series, rank })
    }

    /// Bourbaki-labelled Cartan matrix with `C[i][j] = <alpha_j, alpha_i^vee>`.
    pub fn cartan_matrix(&self) -> IntMatrix {
        let n = self.rank;
        let mut c = vec![vec![0i64; n]; n];
        for (i, row) in c.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            c[i][j] = -1;
            c[j][i] = -1;
        };
        match self.series {
            Series::A | Series::B | Series::C => (0..n - 1).for_each(|i| link(i, i + 1)),
            Series::D => {
                (0..n - 2).for_each(|i| link(i, i + 1));
                link(n - 3, n - 1);
            }
            Series::E => {
                link(0, 2);
                link(2, 3);
                link(3, 4);
                link(4, 5);
                link(1, 3);
            }
            Series::F => (0..3).for_each(|i| link(i, i + 1)),
            Series::G => link(0, 1),
        }
        match self.series {
            // alpha_n short
            Series::B => c[n - 1][n - 2] = -2,
            // alpha_n long
            Series::C => c[n - 2][n - 1] = -2,
            Series::F => c[2][1] = -2,
            Series::G => c[0][1] = -3,
            _ => {}
        }
        c
    }

    pub fn weyl_order(&self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.series {
            Series::A => fact(n + 1),
            Series::B | Series::C => (1u128 << n) * fact(n),
            Series::D => (1u128 << (n - 1)) * fact(n),
            Series::E => 51_840,
            Series::F => 1_152,
            Series::G => 12,
        }
    }

    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match self.series {
            Series::A => n * (n + 1) / 2,
            Series::B | Series::C => n * n,
            Series::D => n * (n - 1),
            Series::E => 36,
            Series::F => 24,
            Series::G => 6,
        }
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series, self.rank)
    }
}

/// A semisimple type: an ordered product of simple factors, written `A1xB2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CartanType {
    factors: Vec<SimpleType>,
}

impl CartanType {
    pub fn new(factors: Vec<SimpleType>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidType { factor: String::new(), reason: "empty type".into() });
        }
        Ok(CartanType { factors })
    }

    pub fn factors(&self) -> &[SimpleType] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().map(|f| f.rank).sum()
    }

    pub fn weyl_order(&self) -> u128 {
        self.factors.iter().map(SimpleType::weyl_order).product()
    }

    pub fn positive_root_count(&self) -> usize {
        self.factors.iter().map(SimpleType::positive_root_count).sum()
    }

    /// Block-diagonal Cartan matrix of the product.
    pub fn cartan_matrix(&self) -> IntMatrix {
        let n = self.rank();
        let mut c = vec![vec![0i64; n]; n];
        let mut off = 0;
        for f in &self.factors {
            let block = f.cartan_matrix();
            for (i, row) in block.iter().enumerate() {
                for (j, &x) in row.iter().enumerate() {
                    c[off + i][off + j] = x;
                }
            }
            off += f.rank;
        }
        c
    }

    /// `d_i = |alpha_i|^2 / 2`, normalised so long roots of every factor have
    /// squared length 2.
    pub fn root_lengths(&self) -> Vec<Rational> {
        let c = self.cartan_matrix();
        let n = c.len();
        let mut d: Vec<Option<Rational>> = vec![None; n];
        let mut off = 0;
        for f in &self.factors {
            let block = off..off + f.rank;
            d[off] = Some(Rational::one());
            // d_i C_ij = d_j C_ji along the connected diagram
            let mut changed = true;
            while changed {
                changed = false;
                for i in block.clone() {
                    for j in block.clone() {
                        if i != j && c[i][j] != 0 {
                            if let (Some(di), None) = (d[i], d[j]) {
                                d[j] = Some(di * Rational::from_integer(c[i][j]) / Rational::from_integer(c[j][i]));
                                changed = true;
                            }
                        }
                    }
                }
            }
            let max = block.clone().filter_map(|i| d[i]).fold(Rational::zero(), |m, x| if x > m { x } else { m });
            for di in d[block].iter_mut() {
                *di = di.map(|x| x / max);
            }
            off += f.rank;
        }
        d.into_iter().map(|x| x.expect("Dynkin diagram of a simple factor is connected")).collect()
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() {
            return Err(Error::InvalidType { factor: s.to_string(), reason: "empty type string".into() });
        }
        let factors = t
            .split(['x', 'X', '×', '+'])
            .map(|part| {
                let part = part.trim();
                let bad = |reason: &str| Error::InvalidType { factor: part.to_string(), reason: reason.to_string() };
                let mut chars = part.chars();
                let series = chars
                    .next()
                    .and_then(Series::from_char)
                    .ok_or_else(|| bad("series must be one of A, B, C, D, E, F, G"))?;
                let rank: usize = chars.as_str().parse().map_err(|_| bad("rank must be a positive integer"))?;
                SimpleType::new(series, rank)
            })
            .collect::<Result<Vec<_>>>()?;
        CartanType::new(factors)
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, factor) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "x")?;
            }
            write!(f, "{factor}")?;
        }
        Ok(())
    }
}

impl Serialize for CartanType {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for CartanType {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
