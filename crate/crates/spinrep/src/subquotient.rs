//! Irreducible subquotients of reducible elementary representations and
//! their K-spectra as exact constraint systems.
//!
//! Every reducible parameter |ν| falls into exactly one window determined by
//! σ: an a-window (small ν, three subquotients τ, ω₊, ω₋ for even n, or the
//! tail window for odd n), an interior b(j)-window, or the c-window (large ν,
//! with τ finite dimensional). The spectrum of each subquotient is the set of
//! K-types in σ's parity coset satisfying per-coordinate interval bounds, so
//! membership is O(k) and enumeration never materializes anything infinite.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::duals::{KType, MType};
use crate::elementary::{ElementaryRep, InfCharParam, Nu};
use crate::halfint::{HalfInt, ParityClass, Weight};
use crate::{Error, Result};

/// Which ν-window of the reducibility pattern a parameter falls into.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CaseTag {
    /// Even n, integral σ, 1/2 ≤ ν ≤ n_{k−1} − 1/2.
    EvenA1,
    /// Even n, half-integral σ, 1 ≤ ν ≤ n_{k−1} − 1/2.
    EvenA2,
    /// Even n, half-integral σ, ν = 0 (direct sum of two discrete series).
    EvenA3,
    /// Even n, n_j + k − j + 1/2 ≤ ν ≤ n_{j−1} + k − j − 1/2, j ∈ 2..k−1.
    EvenB(usize),
    /// Even n, ν ≥ n_1 + k − 1/2 (finite-dimensional τ).
    EvenC,
    /// Odd n, |n_k| + 1 ≤ ν ≤ n_{k−1}.
    OddTail,
    /// Odd n, n_j + k − j + 1 ≤ ν ≤ n_{j−1} + k − j, j ∈ 2..k−1.
    OddB(usize),
    /// Odd n, ν ≥ n_1 + k (finite-dimensional τ).
    OddC,
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseTag::EvenA1 => f.write_str("Even_a1"),
            CaseTag::EvenA2 => f.write_str("Even_a2"),
            CaseTag::EvenA3 => f.write_str("Even_a3"),
            CaseTag::EvenB(j) => write!(f, "Even_b{j}"),
            CaseTag::EvenC => f.write_str("Even_c"),
            CaseTag::OddTail => f.write_str("Odd_tail"),
            CaseTag::OddB(j) => write!(f, "Odd_b{j}"),
            CaseTag::OddC => f.write_str("Odd_c"),
        }
    }
}

impl Serialize for CaseTag {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Which irreducible subquotient of the decomposition.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum SubqLabel {
    Tau,
    Omega,
    OmegaPlus,
    OmegaMinus,
}

impl fmt::Display for SubqLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubqLabel::Tau => f.write_str("tau"),
            SubqLabel::Omega => f.write_str("omega"),
            SubqLabel::OmegaPlus => f.write_str("omega+"),
            SubqLabel::OmegaMinus => f.write_str("omega-"),
        }
    }
}

impl FromStr for SubqLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<SubqLabel> {
        match s {
            "tau" => Ok(SubqLabel::Tau),
            "omega" => Ok(SubqLabel::Omega),
            "omega+" => Ok(SubqLabel::OmegaPlus),
            "omega-" => Ok(SubqLabel::OmegaMinus),
            other => Err(Error::BadIndex(other.to_string())),
        }
    }
}

impl Serialize for SubqLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A closed (or upward-unbounded) interval for one spectrum coordinate.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct CoordRange {
    pub lo: HalfInt,
    /// None means unbounded above (only ever the first coordinate).
    pub hi: Option<HalfInt>,
}

impl CoordRange {
    fn contains(&self, v: HalfInt) -> bool {
        v >= self.lo && self.hi.is_none_or(|hi| v <= hi)
    }
}

/// A K-spectrum: the K-types in one parity coset whose coordinates satisfy
/// per-coordinate interval bounds.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SpectrumConstraint {
    n: usize,
    parity: ParityClass,
    ranges: Vec<CoordRange>,
}

impl SpectrumConstraint {
    pub(crate) fn new(n: usize, parity: ParityClass, ranges: Vec<CoordRange>) -> SpectrumConstraint {
        debug_assert!(parity != ParityClass::Mixed);
        debug_assert_eq!(ranges.len(), n / 2);
        SpectrumConstraint { n, parity, ranges }
    }

    /// The full K-spectrum of an (irreducible or not) elementary
    /// representation with parameter σ: the interlacing box.
    pub fn elementary(sigma: &MType) -> SpectrumConstraint {
        let n = sigma.n();
        let k = n / 2;
        let s = sigma.coords();
        let mut ranges = Vec::with_capacity(k);
        for i in 0..k - 1 {
            ranges.push(CoordRange {
                lo: s[i],
                hi: if i == 0 { None } else { Some(s[i - 1]) },
            });
        }
        let last = if n.is_multiple_of(2) {
            CoordRange {
                lo: -s[k - 2],
                hi: Some(s[k - 2]),
            }
        } else {
            CoordRange {
                lo: s[k - 1].abs(),
                hi: Some(s[k - 2]),
            }
        };
        ranges.push(last);
        // k = 2, even: the single head coordinate is m_1 with upper bound none;
        // the loop above already handles this since i = 0 is the only head index.
        SpectrumConstraint::new(n, sigma.parity(), ranges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn parity(&self) -> ParityClass {
        self.parity
    }

    pub fn ranges(&self) -> &[CoordRange] {
        &self.ranges
    }

    /// Whether the whole spectrum is a finite set (all coordinates bounded).
    pub fn is_finite(&self) -> bool {
        self.ranges.iter().all(|r| r.hi.is_some())
    }

    /// Exact membership; the weight must also be a K highest weight.
    pub fn contains_weight(&self, w: &Weight) -> bool {
        crate::duals::is_k_type(self.n, w).unwrap_or(false)
            && w.parity_class() == self.parity
            && w.coords()
                .iter()
                .zip(&self.ranges)
                .all(|(&c, r)| r.contains(c))
    }

    pub fn contains(&self, q: &KType) -> Result<bool> {
        if q.n() != self.n {
            return Err(Error::RankMismatch);
        }
        Ok(q.parity() == self.parity
            && q.coords()
                .iter()
                .zip(&self.ranges)
                .all(|(&c, r)| r.contains(c)))
    }

    /// All members with every |coordinate| ≤ height, in lexicographic order
    /// by doubled coordinates.
    pub fn enumerate(&self, height: HalfInt) -> Vec<KType> {
        let mut out = Vec::new();
        if height < HalfInt::ZERO {
            return out;
        }
        let mut coords: Vec<HalfInt> = Vec::with_capacity(self.ranges.len());
        self.enumerate_rec(height, &mut coords, &mut out);
        out
    }

    fn enumerate_rec(&self, height: HalfInt, coords: &mut Vec<HalfInt>, out: &mut Vec<KType>) {
        let i = coords.len();
        if i == self.ranges.len() {
            let w = Weight::new(coords.clone());
            if self.contains_weight(&w) {
                out.push(KType::new(self.n, w).expect("checked by contains_weight"));
            }
            return;
        }
        let r = &self.ranges[i];
        let step_start = {
            // Start at the smallest value ≥ max(lo, −height) in the parity class.
            let lo = if r.lo >= -height { r.lo } else { -height };
            let misaligned = (lo.twice() - parity_offset(self.parity)) % 2 != 0;
            if misaligned {
                lo + HalfInt::HALF
            } else {
                lo
            }
        };
        let stop = match r.hi {
            Some(hi) if hi <= height => hi,
            _ => height,
        };
        let mut v = step_start;
        while v <= stop {
            coords.push(v);
            self.enumerate_rec(height, coords, out);
            coords.pop();
            v = v + HalfInt::ONE;
        }
    }
}

fn parity_offset(p: ParityClass) -> i64 {
    match p {
        ParityClass::Integral => 0,
        _ => 1,
    }
}

/// One irreducible subquotient of a reducible elementary representation,
/// with the normalized parameters that name its spectrum chain.
#[derive(Clone, PartialEq, Debug)]
pub struct Subquotient {
    parent: ElementaryRep,
    sigma: MType,
    nu: HalfInt,
    case: CaseTag,
    label: SubqLabel,
    spectrum: SpectrumConstraint,
}

impl Subquotient {
    pub fn n(&self) -> usize {
        self.parent.n()
    }

    /// The elementary representation this arose from, as given by the caller.
    pub fn parent(&self) -> &ElementaryRep {
        &self.parent
    }

    /// Normalized σ (odd n: contragredient applied when the original ν < 0).
    pub fn sigma(&self) -> &MType {
        &self.sigma
    }

    /// Normalized ν ≥ 0.
    pub fn nu(&self) -> HalfInt {
        self.nu
    }

    /// Whether (σ, ν) differ from the parent's parameters.
    pub fn normalized(&self) -> bool {
        self.parent.sigma() != &self.sigma || self.parent.nu() != Nu::from_half(self.nu)
    }

    pub fn case(&self) -> CaseTag {
        self.case
    }

    pub fn label(&self) -> SubqLabel {
        self.label
    }

    pub fn spectrum(&self) -> &SpectrumConstraint {
        &self.spectrum
    }

    pub fn is_finite_dimensional(&self) -> bool {
        self.spectrum.is_finite()
    }

    pub fn dominant_infchar(&self) -> Result<InfCharParam> {
        self.parent.dominant_infchar()
    }

    /// Unitarity. The discrete series ω₊/ω₋ always are. A τ is unitary
    /// exactly at the end of the complementary series, ν = ν(σ). An ω from a
    /// b(j)- or c-window coincides with the τ one step further down its
    /// λ-family chain, so it is unitary exactly when σ vanishes from the
    /// window index on, for any ν in the window; a tail-window ω (odd n) is
    /// unitary exactly when ν = ν(σ), like τ.
    pub fn is_unitary(&self) -> bool {
        let at_cs_end = || crate::elementary::nu_sigma(&self.sigma) == Some(self.nu);
        match self.label {
            SubqLabel::OmegaPlus | SubqLabel::OmegaMinus => true,
            SubqLabel::Tau => at_cs_end(),
            SubqLabel::Omega => match self.case {
                CaseTag::OddTail => at_cs_end(),
                CaseTag::EvenB(j) | CaseTag::OddB(j) => self.sigma.coords()[j - 1].is_zero(),
                CaseTag::EvenC | CaseTag::OddC => self.sigma.coords()[0].is_zero(),
                _ => unreachable!("a-windows have no plain omega subquotient"),
            },
        }
    }
}

struct Chain {
    k: usize,
    sigma_coords: Vec<HalfInt>,
}

impl Chain {
    // Base interlacing intervals for coordinates 1..k−1 (0-based 0..k−2):
    // m_1 ∈ [n_1, ∞), m_i ∈ [n_i, n_{i−1}].
    fn base(&self) -> Vec<CoordRange> {
        (0..self.k - 1)
            .map(|i| CoordRange {
                lo: self.sigma_coords[i],
                hi: if i == 0 {
                    None
                } else {
                    Some(self.sigma_coords[i - 1])
                },
            })
            .collect()
    }
}

fn half(t: i64) -> HalfInt {
    HalfInt::from_twice(t)
}

/// Splits a reducible elementary representation into its 2 or 3 irreducible
/// subquotients. ν is normalized first (even n: ν ← |ν|; odd n: (σ,ν) ←
/// (σ̌,−ν) when ν < 0), which never changes the set of subquotients.
pub fn decompose(rep: &ElementaryRep) -> Result<Vec<Subquotient>> {
    if !rep.is_reducible() {
        return Err(Error::Irreducible);
    }
    let n = rep.n();
    let k = n / 2;
    // Reducibility forces real half-integral ν.
    let nu_raw = rep.nu().as_half().expect("reducible nu is real half-integral");
    let (sigma, nu) = if nu_raw < HalfInt::ZERO {
        if n.is_multiple_of(2) {
            (rep.sigma().clone(), -nu_raw)
        } else {
            (rep.sigma().contragredient(), -nu_raw)
        }
    } else {
        (rep.sigma().clone(), nu_raw)
    };

    let s = sigma.coords().to_vec();
    let chain = Chain {
        k,
        sigma_coords: s.clone(),
    };

    // Window dispatch on |ν|; the windows tile the reducible set, so exactly
    // one must match. That uniqueness is asserted, not assumed.
    let mut cases: Vec<CaseTag> = Vec::new();
    if n.is_multiple_of(2) {
        let top_a = s[k - 2] - HalfInt::HALF;
        match sigma.parity() {
            ParityClass::Integral => {
                if nu >= HalfInt::HALF && nu <= top_a {
                    cases.push(CaseTag::EvenA1);
                }
            }
            _ => {
                if nu.is_zero() {
                    cases.push(CaseTag::EvenA3);
                } else if nu >= HalfInt::ONE && nu <= top_a {
                    cases.push(CaseTag::EvenA2);
                }
            }
        }
        for j in 2..k {
            // n_j + k − j + 1/2 ≤ ν ≤ n_{j−1} + k − j − 1/2 (1-based j).
            let lo = s[j - 1] + half(2 * (k - j) as i64 + 1);
            let hi = s[j - 2] + half(2 * (k - j) as i64 - 1);
            if nu >= lo && nu <= hi {
                cases.push(CaseTag::EvenB(j));
            }
        }
        if nu >= s[0] + half(2 * k as i64 - 1) {
            cases.push(CaseTag::EvenC);
        }
    } else {
        let last = s[k - 1].abs();
        if s[k - 2] > last && nu >= last + HalfInt::ONE && nu <= s[k - 2] {
            cases.push(CaseTag::OddTail);
        }
        for j in 2..k {
            let lo = s[j - 1] + HalfInt::from_int((k - j) as i64 + 1);
            let hi = s[j - 2] + HalfInt::from_int((k - j) as i64);
            if nu >= lo && nu <= hi {
                cases.push(CaseTag::OddB(j));
            }
        }
        if nu >= s[0] + HalfInt::from_int(k as i64) {
            cases.push(CaseTag::OddC);
        }
    }
    assert_eq!(
        cases.len(),
        1,
        "reducible nu={nu} for sigma=({sigma}) must match exactly one window, got {cases:?}"
    );
    let case = cases[0];

    let parity = sigma.parity();
    let build = |label: SubqLabel, ranges: Vec<CoordRange>| Subquotient {
        parent: rep.clone(),
        sigma: sigma.clone(),
        nu,
        case,
        label,
        spectrum: SpectrumConstraint::new(n, parity, ranges),
    };

    let subs = if n.is_multiple_of(2) {
        match case {
            CaseTag::EvenA1 | CaseTag::EvenA2 | CaseTag::EvenA3 => {
                let mut out = Vec::new();
                if case != CaseTag::EvenA3 {
                    let mut r = chain.base();
                    r.push(CoordRange {
                        lo: -(nu - HalfInt::HALF),
                        hi: Some(nu - HalfInt::HALF),
                    });
                    out.push(build(SubqLabel::Tau, r));
                }
                let mut plus = chain.base();
                plus.push(CoordRange {
                    lo: nu + HalfInt::HALF,
                    hi: Some(s[k - 2]),
                });
                out.push(build(SubqLabel::OmegaPlus, plus));
                let mut minus = chain.base();
                minus.push(CoordRange {
                    lo: -s[k - 2],
                    hi: Some(-(nu + HalfInt::HALF)),
                });
                out.push(build(SubqLabel::OmegaMinus, minus));
                out
            }
            CaseTag::EvenB(j) => {
                let full_last = CoordRange {
                    lo: -s[k - 2],
                    hi: Some(s[k - 2]),
                };
                let mut tau = chain.base();
                tau[j - 1] = CoordRange {
                    lo: s[j - 1],
                    hi: Some(nu + half(2 * (j as i64 - k as i64) - 1)),
                };
                tau.push(full_last);
                let mut omega = chain.base();
                omega[j - 1] = CoordRange {
                    lo: nu + half(2 * (j as i64 - k as i64) + 1),
                    hi: Some(s[j - 2]),
                };
                omega.push(full_last);
                vec![build(SubqLabel::Tau, tau), build(SubqLabel::Omega, omega)]
            }
            CaseTag::EvenC => {
                let full_last = CoordRange {
                    lo: -s[k - 2],
                    hi: Some(s[k - 2]),
                };
                let mut tau = chain.base();
                tau[0] = CoordRange {
                    lo: s[0],
                    hi: Some(nu + half(1 - 2 * k as i64)),
                };
                tau.push(full_last);
                let mut omega = chain.base();
                omega[0] = CoordRange {
                    lo: nu + half(3 - 2 * k as i64),
                    hi: None,
                };
                omega.push(full_last);
                vec![build(SubqLabel::Tau, tau), build(SubqLabel::Omega, omega)]
            }
            _ => unreachable!("even window produced odd tag"),
        }
    } else {
        let last_abs = s[k - 1].abs();
        let full_last = CoordRange {
            lo: last_abs,
            hi: Some(s[k - 2]),
        };
        match case {
            CaseTag::OddTail => {
                let mut tau = chain.base();
                tau.push(CoordRange {
                    lo: last_abs,
                    hi: Some(nu - HalfInt::ONE),
                });
                let mut omega = chain.base();
                omega.push(CoordRange {
                    lo: nu,
                    hi: Some(s[k - 2]),
                });
                vec![build(SubqLabel::Tau, tau), build(SubqLabel::Omega, omega)]
            }
            CaseTag::OddB(j) => {
                let mut tau = chain.base();
                tau[j - 1] = CoordRange {
                    lo: s[j - 1],
                    hi: Some(nu + HalfInt::from_int(j as i64 - k as i64 - 1)),
                };
                tau.push(full_last);
                let mut omega = chain.base();
                omega[j - 1] = CoordRange {
                    lo: nu + HalfInt::from_int(j as i64 - k as i64),
                    hi: Some(s[j - 2]),
                };
                omega.push(full_last);
                vec![build(SubqLabel::Tau, tau), build(SubqLabel::Omega, omega)]
            }
            CaseTag::OddC => {
                let mut tau = chain.base();
                tau[0] = CoordRange {
                    lo: s[0],
                    hi: Some(nu - HalfInt::from_int(k as i64)),
                };
                tau.push(full_last);
                let mut omega = chain.base();
                omega[0] = CoordRange {
                    lo: nu + HalfInt::from_int(1 - k as i64),
                    hi: None,
                };
                omega.push(full_last);
                vec![build(SubqLabel::Tau, tau), build(SubqLabel::Omega, omega)]
            }
            _ => unreachable!("odd window produced even tag"),
        }
    };

    // Every interval must be non-empty; emptiness would mean a window bug.
    for sub in &subs {
        for r in sub.spectrum.ranges() {
            if let Some(hi) = r.hi {
                assert!(
                    r.lo <= hi,
                    "empty interval in {:?} of pi(sigma=({sigma}), nu={nu})",
                    sub.label
                );
            }
        }
    }
    Ok(subs)
}
