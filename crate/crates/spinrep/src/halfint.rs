//! Exact half-integer scalars and weight tuples.
//!
//! Every scalar entry of a highest weight or infinitesimal-character parameter
//! lies in (1/2)Z. `HalfInt` stores twice the value in an `i64`; equality of
//! doubled values is equality of scalars, so orbit and spectrum comparisons
//! are exact. All arithmetic is checked: overflow panics instead of wrapping.
//!
//! Text form per coordinate: `[-]digits[/2]`, e.g. `3`, `-1`, `5/2`, `-1/2`.
//! A weight is a comma-separated list of coordinates: `5/2,-1/2`. JSON uses
//! exactly this string form.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// A scalar in (1/2)Z, stored as twice its value.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfInt {
    twice: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { twice: 0 };
    pub const HALF: HalfInt = HalfInt { twice: 1 };
    pub const ONE: HalfInt = HalfInt { twice: 2 };

    /// Builds the scalar t/2 from its doubled value t.
    pub fn from_twice(twice: i64) -> Self {
        HalfInt { twice }
    }

    /// Builds an integer scalar.
    pub fn from_int(value: i64) -> Self {
        HalfInt {
            twice: value.checked_mul(2).expect("half-integer overflow"),
        }
    }

    /// Twice the value; the canonical internal encoding.
    pub fn twice(self) -> i64 {
        self.twice
    }

    pub fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    /// The integer value, if integral.
    pub fn as_integer(self) -> Option<i64> {
        if self.is_integer() {
            Some(self.twice / 2)
        } else {
            None
        }
    }

    pub fn abs(self) -> Self {
        HalfInt {
            twice: self.twice.checked_abs().expect("half-integer overflow"),
        }
    }

    pub fn is_zero(self) -> bool {
        self.twice == 0
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt {
            twice: self.twice.checked_add(rhs.twice).expect("half-integer overflow"),
        }
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt {
            twice: self.twice.checked_sub(rhs.twice).expect("half-integer overflow"),
        }
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt {
            twice: self.twice.checked_neg().expect("half-integer overflow"),
        }
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twice % 2 == 0 {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

impl fmt::Debug for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for HalfInt {
    type Err = Error;

    /// Parses `[-]digits[/2]`. `5/2` is 5/2; `5` is 5; `4/2` is accepted and
    /// equals 2 (display always emits the canonical form).
    fn from_str(s: &str) -> Result<HalfInt> {
        let bad = || Error::BadScalar(s.to_string());
        let (neg, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let (digits, halved) = match body.strip_suffix("/2") {
            Some(rest) => (rest, true),
            None => (body, false),
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let magnitude: i64 = digits.parse().map_err(|_| bad())?;
        let twice = if halved {
            magnitude
        } else {
            magnitude.checked_mul(2).ok_or_else(bad)?
        };
        Ok(HalfInt {
            twice: if neg { -twice } else { twice },
        })
    }
}

impl Serialize for HalfInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for HalfInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}

/// Which lattice coset a tuple of scalars occupies.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ParityClass {
    /// All coordinates in Z.
    Integral,
    /// All coordinates in 1/2 + Z.
    HalfIntegral,
    /// Coordinates from both cosets; rejected wherever a coset is required.
    Mixed,
}

impl ParityClass {
    /// Class of a single scalar.
    pub fn of(h: HalfInt) -> ParityClass {
        if h.is_integer() {
            ParityClass::Integral
        } else {
            ParityClass::HalfIntegral
        }
    }
}

/// An ordered tuple of half-integers; the coordinate form of a weight.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Weight {
    coords: Vec<HalfInt>,
}

impl Weight {
    pub fn new(coords: Vec<HalfInt>) -> Self {
        Weight { coords }
    }

    pub fn from_ints(values: &[i64]) -> Self {
        Weight {
            coords: values.iter().map(|&v| HalfInt::from_int(v)).collect(),
        }
    }

    /// Builds a weight directly from doubled coordinate values.
    pub fn from_twice(twice: &[i64]) -> Self {
        Weight {
            coords: twice.iter().map(|&t| HalfInt::from_twice(t)).collect(),
        }
    }

    pub fn coords(&self) -> &[HalfInt] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn get(&self, i: usize) -> HalfInt {
        self.coords[i]
    }

    pub fn parity_class(&self) -> ParityClass {
        let mut integral = false;
        let mut half = false;
        for &c in &self.coords {
            match ParityClass::of(c) {
                ParityClass::Integral => integral = true,
                _ => half = true,
            }
        }
        match (integral, half) {
            (true, true) => ParityClass::Mixed,
            (false, true) => ParityClass::HalfIntegral,
            // An empty tuple counts as integral; it never occurs for n >= 4.
            _ => ParityClass::Integral,
        }
    }

    /// Coordinatewise sum.
    pub fn add(&self, rhs: &Weight) -> Result<Weight> {
        if self.len() != rhs.len() {
            return Err(Error::RankMismatch);
        }
        Ok(Weight {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(&a, &b)| a + b)
                .collect(),
        })
    }

    /// Coordinatewise negation.
    pub fn negated(&self) -> Weight {
        Weight {
            coords: self.coords.iter().map(|&c| -c).collect(),
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Weight> {
        if s.is_empty() {
            return Err(Error::BadWeight {
                input: s.to_string(),
                reason: "empty".to_string(),
            });
        }
        let coords = s
            .split(',')
            .map(|part| {
                part.parse::<HalfInt>().map_err(|_| Error::BadWeight {
                    input: s.to_string(),
                    reason: format!("bad coordinate {part:?}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Weight { coords })
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}

/// Shorthand for weight literals in tests and tables: doubled values in, weight out.
#[macro_export]
macro_rules! wt {
    ($($t:expr),* $(,)?) => {
        $crate::halfint::Weight::from_twice(&[$($t),*])
    };
}
