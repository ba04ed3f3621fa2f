//! Elementary representations π(σ,ν) of Spin(n,1) and their infinitesimal
//! characters, reducibility, and unitarity.
//!
//! σ is an M-type and ν ∈ a* ≅ C is kept exact as a rational number, either
//! real or purely imaginary; every statement classified here concerns those
//! two lines. Reducibility happens only at real half-integral ν in the coset
//! determined by σ's parity, minus an explicit finite exception set.

use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::duals::MType;
use crate::halfint::{HalfInt, ParityClass, Weight};
use crate::weyl::{dominant_rep, RootFamily};
use crate::{Error, Result};

/// Exact rational scalar.
pub type Rat = num_rational::Rational64;

pub(crate) fn rat_of(h: HalfInt) -> Rat {
    Rat::new(h.twice(), 2)
}

fn rat_string(r: Rat) -> String {
    if r.denom() == &1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// The continuous parameter of an elementary representation: an exact
/// rational, real or purely imaginary. Imaginary zero is normalized to real
/// zero so each parameter has one form.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Nu {
    Real(Rat),
    /// The value t·i for a nonzero rational t.
    Imaginary(Rat),
}

impl Nu {
    pub fn real(value: Rat) -> Nu {
        Nu::Real(value)
    }

    pub fn imaginary(t: Rat) -> Nu {
        if t.is_zero() {
            Nu::Real(t)
        } else {
            Nu::Imaginary(t)
        }
    }

    pub fn from_half(h: HalfInt) -> Nu {
        Nu::Real(rat_of(h))
    }

    pub fn is_real(self) -> bool {
        matches!(self, Nu::Real(_))
    }

    pub fn is_zero(self) -> bool {
        matches!(self, Nu::Real(r) if r.is_zero())
    }

    /// The real value as a half-integer, when it is one.
    pub fn as_half(self) -> Result<HalfInt> {
        match self {
            Nu::Imaginary(_) => Err(Error::ImaginaryNu),
            Nu::Real(r) => {
                let doubled = r * Rat::from_integer(2);
                if doubled.is_integer() {
                    Ok(HalfInt::from_twice(doubled.to_integer()))
                } else {
                    Err(Error::NuNotHalfIntegral(rat_string(r)))
                }
            }
        }
    }
}

impl fmt::Display for Nu {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Nu::Real(r) => f.write_str(&rat_string(*r)),
            Nu::Imaginary(t) => write!(f, "{}i", rat_string(*t)),
        }
    }
}

impl FromStr for Nu {
    type Err = Error;

    /// Parses `[-]digits[/digits][i]`, plus the shorthands `i` and `-i`.
    fn from_str(s: &str) -> Result<Nu> {
        let bad = || Error::BadNu(s.to_string());
        let (body, imaginary) = match s.strip_suffix('i') {
            Some(rest) => (rest, true),
            None => (s, false),
        };
        let (neg, digits_part) = match body.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, body),
        };
        let magnitude = if digits_part.is_empty() {
            if !imaginary {
                return Err(bad());
            }
            Rat::from_integer(1)
        } else {
            let (numer, denom) = match digits_part.split_once('/') {
                Some((a, b)) => (a, b),
                None => (digits_part, "1"),
            };
            if numer.is_empty()
                || denom.is_empty()
                || !numer.bytes().all(|b| b.is_ascii_digit())
                || !denom.bytes().all(|b| b.is_ascii_digit())
            {
                return Err(bad());
            }
            let n: i64 = numer.parse().map_err(|_| bad())?;
            let d: i64 = denom.parse().map_err(|_| bad())?;
            if d == 0 {
                return Err(bad());
            }
            Rat::new(n, d)
        };
        let value = if neg { -magnitude } else { magnitude };
        Ok(if imaginary {
            Nu::imaginary(value)
        } else {
            Nu::Real(value)
        })
    }
}

impl Serialize for Nu {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Nu {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An elementary representation π(σ,ν): the principal-series member induced
/// from σ ⊗ e^ν on the minimal parabolic.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ElementaryRep {
    sigma: MType,
    nu: Nu,
}

/// A dominant infinitesimal-character parameter together with the Weyl family
/// that acts on it; two characters are equal iff these weights are equal.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct InfCharParam {
    pub n: usize,
    pub lambda: Weight,
    pub family: RootFamily,
}

impl ElementaryRep {
    pub fn new(sigma: MType, nu: Nu) -> ElementaryRep {
        ElementaryRep { sigma, nu }
    }

    pub fn n(&self) -> usize {
        self.sigma.n()
    }

    pub fn sigma(&self) -> &MType {
        &self.sigma
    }

    pub fn nu(&self) -> Nu {
        self.nu
    }

    fn k(&self) -> usize {
        self.n() / 2
    }

    /// The Weyl family of the complexified Lie algebra: B_k for n = 2k,
    /// D_{k+1} for n = 2k+1.
    pub fn family(&self) -> RootFamily {
        if self.n().is_multiple_of(2) {
            RootFamily::TypeB(self.k())
        } else {
            RootFamily::TypeD(self.k() + 1)
        }
    }

    /// The raw infinitesimal-character parameter:
    /// (n_1+k−3/2, …, n_{k−1}+1/2, ν) for n = 2k and
    /// (n_1+k−1, …, n_{k−1}+1, n_k, ν) for n = 2k+1.
    ///
    /// Needs real half-integral ν so the result lives on the weight lattice.
    pub fn lambda_param(&self) -> Result<Weight> {
        let nu = self.nu.as_half()?;
        let k = self.k() as i64;
        let s = self.sigma.coords();
        let mut coords: Vec<HalfInt> = Vec::new();
        if self.n().is_multiple_of(2) {
            for (j, &c) in s.iter().enumerate() {
                // n_j + k − j − 1/2, with j counted from 1.
                coords.push(c + HalfInt::from_twice(2 * (k - (j as i64 + 1)) - 1));
            }
        } else {
            for (j, &c) in s.iter().take(s.len() - 1).enumerate() {
                coords.push(c + HalfInt::from_int(k - (j as i64 + 1)));
            }
            coords.push(s[s.len() - 1]);
        }
        coords.push(nu);
        Ok(Weight::new(coords))
    }

    /// Dominant infinitesimal character λ(σ,ν): the unique point of the Weyl
    /// orbit of `lambda_param` in the closed dominant chamber.
    pub fn dominant_infchar(&self) -> Result<InfCharParam> {
        let lambda = dominant_rep(&self.lambda_param()?, self.family())?;
        Ok(InfCharParam {
            n: self.n(),
            lambda,
            family: self.family(),
        })
    }

    /// Exact reducibility test.
    ///
    /// Even n = 2k: reducible iff ν ∈ 1/2 + n_1 + Z and
    /// |ν| ∉ {n_s + k − s − 1/2 : 1 ≤ s ≤ k−1}.
    /// Odd n = 2k+1: reducible iff ν ∈ n_1 + Z, |ν| > |n_k|, and
    /// |ν| ∉ {n_s + k − s : 1 ≤ s ≤ k−1}.
    pub fn is_reducible(&self) -> bool {
        let r = match self.nu {
            Nu::Imaginary(_) => return false,
            Nu::Real(r) => r,
        };
        let s = self.sigma.coords();
        let k = self.k() as i64;
        let a = r.abs();
        if self.n().is_multiple_of(2) {
            let coset = (r - rat_of(s[0]) - Rat::new(1, 2)).is_integer();
            let exception = (0..s.len())
                .any(|j| a == rat_of(s[j]) + Rat::from_integer(k - (j as i64 + 1)) - Rat::new(1, 2));
            coset && !exception
        } else {
            let coset = (r - rat_of(s[0])).is_integer();
            let inner = a <= rat_of(s[s.len() - 1].abs());
            let exception = (0..s.len() - 1)
                .any(|j| a == rat_of(s[j]) + Rat::from_integer(k - (j as i64 + 1)));
            coset && !inner && !exception
        }
    }

    /// Unitarity of an irreducible elementary representation: true iff ν is
    /// purely imaginary (unitary principal series, including irreducible
    /// π(σ,0)) or real with |ν| < ν(σ) (complementary series).
    pub fn is_unitary_elementary(&self) -> Result<bool> {
        if self.is_reducible() {
            return Err(Error::Reducible);
        }
        let r = match self.nu {
            Nu::Imaginary(_) => return Ok(true),
            Nu::Real(r) => r,
        };
        if r.is_zero() {
            return Ok(true);
        }
        Ok(match nu_sigma(&self.sigma) {
            Some(bound) => r.abs() < rat_of(bound),
            None => false,
        })
    }
}

impl fmt::Display for ElementaryRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "pi(n={}; sigma=({}); nu={})", self.n(), self.sigma, self.nu)
    }
}

/// The first reducibility point ν(σ) = min{ν ≥ 0 : π(σ,ν) reducible}, which
/// bounds the complementary series.
///
/// Even n = 2k: 0 for half-integral σ; otherwise k − j₀ + 1/2 where j₀ is the
/// first index with n_{j₀} = 0 (j₀ = k when σ has no zero coordinate).
/// Odd n = 2k+1: defined only for σ with n_k = 0 (self-contragredient σ);
/// then k − j₀ + 1 with j₀ the first index with n_{j₀} = 0.
pub fn nu_sigma(sigma: &MType) -> Option<HalfInt> {
    let s = sigma.coords();
    let k = (sigma.n() / 2) as i64;
    if sigma.n().is_multiple_of(2) {
        if sigma.parity() == ParityClass::HalfIntegral {
            return Some(HalfInt::ZERO);
        }
        let j0 = s
            .iter()
            .position(|c| c.is_zero())
            .map(|p| p as i64 + 1)
            .unwrap_or(k);
        Some(HalfInt::from_twice(2 * (k - j0) + 1))
    } else {
        if !s[s.len() - 1].is_zero() {
            return None;
        }
        let j0 = s
            .iter()
            .position(|c| c.is_zero())
            .expect("last coordinate is zero") as i64
            + 1;
        Some(HalfInt::from_int(k - j0 + 1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::duals::enumerate_m_types;
    use crate::wt;

    fn rep(n: usize, sigma: &str, nu: &str) -> ElementaryRep {
        let sigma = MType::new(n, sigma.parse().unwrap()).unwrap();
        ElementaryRep::new(sigma, nu.parse().unwrap())
    }

    #[test]
    fn nu_parsing_and_display() {
        assert_eq!("3/2".parse::<Nu>().unwrap(), Nu::Real(Rat::new(3, 2)));
        assert_eq!("-2".parse::<Nu>().unwrap(), Nu::Real(Rat::from_integer(-2)));
        assert_eq!("5/2i".parse::<Nu>().unwrap(), Nu::Imaginary(Rat::new(5, 2)));
        assert_eq!("i".parse::<Nu>().unwrap(), Nu::Imaginary(Rat::from_integer(1)));
        assert_eq!("-i".parse::<Nu>().unwrap(), Nu::Imaginary(Rat::from_integer(-1)));
        assert_eq!("0i".parse::<Nu>().unwrap(), Nu::Real(Rat::from_integer(0)));
        assert_eq!("6/4".parse::<Nu>().unwrap(), Nu::Real(Rat::new(3, 2)));
        assert_eq!("3/2i".parse::<Nu>().unwrap().to_string(), "3/2i");
        assert_eq!("1i".parse::<Nu>().unwrap().to_string(), "1i");
        assert_eq!("-7/2".parse::<Nu>().unwrap().to_string(), "-7/2");
        for bad in ["", "-", "x", "1/0", "i2", "2.5", "1/-2", "+1"] {
            assert!(bad.parse::<Nu>().is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn lambda_param_examples() {
        assert_eq!(rep(4, "0", "3/2").lambda_param().unwrap(), wt![1, 3]);
        assert_eq!(rep(6, "2,1", "1/2").lambda_param().unwrap(), wt![7, 3, 1]);
        assert_eq!(rep(5, "1,0", "2").lambda_param().unwrap(), Weight::from_ints(&[2, 0, 2]));
        assert!(matches!(rep(4, "0", "1/4").lambda_param(), Err(Error::NuNotHalfIntegral(_))));
        assert!(matches!(rep(4, "0", "2i").lambda_param(), Err(Error::ImaginaryNu)));
    }

    #[test]
    fn reducibility_examples() {
        assert!(rep(4, "0", "3/2").is_reducible());
        assert!(!rep(4, "0", "1/2").is_reducible());
        assert!(!rep(4, "0", "1/4").is_reducible());
        assert!(!rep(5, "1,0", "2").is_reducible());
        assert!(rep(5, "1,0", "1").is_reducible());
        assert!(!rep(5, "1,0", "0").is_reducible());
        assert!(!rep(4, "0", "5/2i").is_reducible());
        // Half-integral odd sigma: coset 1/2+Z, inner bound |n_k|, outer point 3/2.
        assert!(!rep(5, "1/2,1/2", "1/2").is_reducible());
        assert!(!rep(5, "1/2,1/2", "3/2").is_reducible());
        assert!(rep(5, "1/2,1/2", "5/2").is_reducible());
    }

    #[test]
    fn reducibility_symmetry() {
        for n in [4usize, 5, 6, 7] {
            for sigma in enumerate_m_types(n, HalfInt::from_twice(3)).unwrap() {
                let mut t = -8i64;
                while t <= 8 {
                    let nu = Nu::Real(Rat::new(t, 2));
                    let fwd = ElementaryRep::new(sigma.clone(), nu).is_reducible();
                    let bwd = ElementaryRep::new(sigma.contragredient(), Nu::Real(Rat::new(-t, 2)))
                        .is_reducible();
                    assert_eq!(fwd, bwd, "n={n} sigma={sigma} t={t}");
                    t += 1;
                }
            }
        }
    }

    #[test]
    fn nu_sigma_closed_forms_match_first_reducible_point() {
        // Closed forms, then a brute-force minimum over the nu scan.
        assert_eq!(nu_sigma(&MType::new(4, wt![0]).unwrap()), Some(HalfInt::from_twice(3)));
        assert_eq!(nu_sigma(&MType::new(6, wt![2, 2]).unwrap()), Some(HalfInt::HALF));
        assert_eq!(nu_sigma(&MType::new(5, Weight::from_ints(&[0, 0])).unwrap()), Some(HalfInt::from_int(2)));
        assert_eq!(nu_sigma(&MType::new(5, Weight::from_ints(&[1, 0])).unwrap()), Some(HalfInt::ONE));
        assert_eq!(nu_sigma(&MType::new(5, Weight::from_ints(&[1, 1])).unwrap()), None);

        for n in [4usize, 5, 6, 7] {
            let k = (n / 2) as i64;
            for sigma in enumerate_m_types(n, HalfInt::from_twice(5)).unwrap() {
                let mut first = None;
                let top = 2 * (sigma.coords()[0].twice() / 2 + k + 3);
                let mut t = 0i64;
                while t <= top {
                    if ElementaryRep::new(sigma.clone(), Nu::Real(Rat::new(t, 2))).is_reducible() {
                        first = Some(HalfInt::from_twice(t));
                        break;
                    }
                    t += 1;
                }
                if let Some(bound) = nu_sigma(&sigma) {
                    assert_eq!(first, Some(bound), "n={n} sigma={sigma}");
                }
            }
        }
    }

    #[test]
    fn unitarity_examples() {
        assert!(rep(4, "0", "5/2i").is_unitary_elementary().unwrap());
        assert!(rep(4, "0", "1").is_unitary_elementary().unwrap());
        assert!(!rep(4, "0", "2").is_unitary_elementary().unwrap());
        assert!(rep(4, "0", "0").is_unitary_elementary().unwrap());
        assert!(rep(4, "0", "1/4").is_unitary_elementary().unwrap());
        assert!(matches!(rep(4, "0", "3/2").is_unitary_elementary(), Err(Error::Reducible)));
        // Odd sigma without nu(sigma): no complementary series off zero.
        assert!(!rep(5, "1,1", "1/2").is_unitary_elementary().unwrap());
        assert!(rep(5, "1,1", "0").is_unitary_elementary().unwrap());
    }

    #[test]
    fn dominant_infchar_examples() {
        assert_eq!(rep(4, "0", "3/2").dominant_infchar().unwrap().lambda, wt![3, 1]);
        let a = rep(5, "1,0", "1").dominant_infchar().unwrap();
        let b = rep(5, "0,0", "2").dominant_infchar().unwrap();
        assert_eq!(a.lambda, Weight::from_ints(&[2, 1, 0]));
        // Same character from different parameters; used as a coincidence probe.
        assert_eq!(a, b);
        assert_eq!(a.family, RootFamily::TypeD(3));
    }
}
