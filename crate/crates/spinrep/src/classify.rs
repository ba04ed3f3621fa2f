//! The λ-family organization of reducible parameters, the resulting classes
//! of irreducible non-elementary representations, and the parametrizations of
//! the unitary ones by K-types.
//!
//! Every reducible π(σ,ν) has a dominant infinitesimal character λ in the set
//! Λ of strictly decreasing unmixed weights; conversely each λ ∈ Λ carries a
//! finite list of parameter pairs (σ_j, ν_j), and the subquotients at those
//! pairs glue into the family's classes: the chain τ_1, …, τ_k (each inner
//! link realized twice, as an ω and as a τ with literally identical spectra)
//! plus ω₊/ω₋ (even n) or ω (odd n). Forward maps send unitary classes to
//! distinguished K-types (fundamental corners for even n, Vogan-minimal
//! K-types for odd n); the inverses reconstruct λ from the K-type by shifting
//! coordinates and packing the tail.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::corners::{corner_report, minimal_k_types};
use crate::duals::{KType, MType};
use crate::elementary::{ElementaryRep, Nu};
use crate::halfint::{HalfInt, ParityClass, Weight};
use crate::subquotient::{decompose, SpectrumConstraint, SubqLabel, Subquotient};
use crate::{Error, Result};

/// Where a weight sits relative to the reducibility parameter set Λ.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LambdaClass {
    NotInLambda,
    /// Strictly decreasing with nonzero last coordinate.
    LambdaStar,
    /// Integral with vanishing last coordinate.
    LambdaZero,
}

/// One parameter pair (σ, ν) of a λ-family.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct LambdaPair {
    pub sigma: MType,
    pub nu: HalfInt,
    pub reducible: bool,
}

/// Name of a class inside its λ-family.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum GhatIndex {
    TauJ(usize),
    OmegaPlus,
    OmegaMinus,
    Omega,
}

impl fmt::Display for GhatIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GhatIndex::TauJ(j) => write!(f, "tau{j}"),
            GhatIndex::OmegaPlus => f.write_str("omega+"),
            GhatIndex::OmegaMinus => f.write_str("omega-"),
            GhatIndex::Omega => f.write_str("omega"),
        }
    }
}

impl FromStr for GhatIndex {
    type Err = Error;

    fn from_str(s: &str) -> Result<GhatIndex> {
        match s {
            "omega+" => Ok(GhatIndex::OmegaPlus),
            "omega-" => Ok(GhatIndex::OmegaMinus),
            "omega" => Ok(GhatIndex::Omega),
            _ => {
                let j = s
                    .strip_prefix("tau")
                    .and_then(|d| d.parse::<usize>().ok())
                    .filter(|&j| j >= 1)
                    .ok_or_else(|| Error::BadIndex(s.to_string()))?;
                Ok(GhatIndex::TauJ(j))
            }
        }
    }
}

impl Serialize for GhatIndex {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// An irreducible non-elementary class: one member of a λ-family, carrying
/// every (σ,ν)-realization of itself.
#[derive(Clone, Debug)]
pub struct GhatClass {
    n: usize,
    lambda: Weight,
    lambda_class: LambdaClass,
    index: GhatIndex,
    realizations: Vec<Subquotient>,
}

impl GhatClass {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    pub fn lambda_class(&self) -> LambdaClass {
        self.lambda_class
    }

    pub fn index(&self) -> GhatIndex {
        self.index
    }

    /// All subquotient realizations; inner chain members have two, with
    /// identical spectra, the rest one.
    pub fn realizations(&self) -> &[Subquotient] {
        &self.realizations
    }

    /// The first realization, used whenever any single one will do.
    pub fn canonical(&self) -> &Subquotient {
        &self.realizations[0]
    }

    pub fn spectrum(&self) -> &SpectrumConstraint {
        self.canonical().spectrum()
    }

    pub fn is_unitary(&self) -> bool {
        self.canonical().is_unitary()
    }

    pub fn is_finite_dimensional(&self) -> bool {
        self.canonical().is_finite_dimensional()
    }
}

/// Whether a class is unitary (realization-independent).
pub fn is_unitary_class(c: &GhatClass) -> bool {
    c.is_unitary()
}

/// Number of λ-family preimages of a K-type under a fixed family index.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PreimageCount {
    Finite(u64),
    Infinite,
}

/// Closed-form versus brute-force preimage counts within a λ_1 window.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct PreimageReport {
    pub q: KType,
    pub index: GhatIndex,
    pub closed_form: PreimageCount,
    pub brute_force: u64,
    pub window: HalfInt,
    pub agree: bool,
}

/// Classifies a weight against Λ: strictly decreasing unmixed coordinates,
/// the last one dominated (≥ 0 for even n, < its neighbor in absolute value
/// for odd n).
pub fn lambda_class(n: usize, lambda: &Weight) -> Result<LambdaClass> {
    let k = crate::half_rank(n)?;
    let expected = if n.is_multiple_of(2) { k } else { k + 1 };
    if lambda.len() != expected {
        return Err(Error::WrongLength {
            n,
            expected,
            got: lambda.len(),
        });
    }
    if lambda.parity_class() == ParityClass::Mixed {
        return Ok(LambdaClass::NotInLambda);
    }
    let c = lambda.coords();
    let body = &c[..expected - 1];
    let last = c[expected - 1];
    let descending = body.windows(2).all(|w| w[0] > w[1]);
    let tail_ok = if n.is_multiple_of(2) {
        // Even: λ_{k−1} > λ_k ≥ 0.
        body.last().is_none_or(|&b| b > last) && last >= HalfInt::ZERO
    } else {
        // Odd: λ_k > |λ_{k+1}|, any sign on the last coordinate.
        body.last().is_some_and(|&b| b > last.abs())
    };
    if !descending || !tail_ok {
        return Ok(LambdaClass::NotInLambda);
    }
    Ok(if last.is_zero() {
        LambdaClass::LambdaZero
    } else {
        LambdaClass::LambdaStar
    })
}

fn mtype(n: usize, coords: Vec<HalfInt>) -> MType {
    MType::new(n, Weight::new(coords)).expect("family parameter is a dominant M-type")
}

/// The parameter pairs (σ_j, ν_j) of λ's family, reducible ones first in
/// chain order, then the irreducible pairs (odd n only).
pub fn pairs_for_lambda(n: usize, lambda: &Weight) -> Result<Vec<LambdaPair>> {
    if lambda_class(n, lambda)? == LambdaClass::NotInLambda {
        return Err(Error::NotInLambda(lambda.to_string()));
    }
    let k = n / 2;
    let l = lambda.coords();
    let mut pairs = Vec::new();
    if n.is_multiple_of(2) {
        if l[k - 1].is_zero() {
            // One pair at ν = 0; σ_s = λ_s − k + s + 1/2.
            let coords = (0..k - 1)
                .map(|s| l[s] + HalfInt::from_twice(2 * (s as i64 + 1 - k as i64) + 1))
                .collect();
            pairs.push(LambdaPair {
                sigma: mtype(n, coords),
                nu: HalfInt::ZERO,
                reducible: true,
            });
        } else {
            // k pairs: σ_j skips λ_j, shifted by s − k + 1/2 at position s.
            for j in 1..=k {
                let coords = (1..k)
                    .map(|s| {
                        let from = if s < j { l[s - 1] } else { l[s] };
                        from + HalfInt::from_twice(2 * (s as i64 - k as i64) + 1)
                    })
                    .collect();
                pairs.push(LambdaPair {
                    sigma: mtype(n, coords),
                    nu: l[j - 1],
                    reducible: true,
                });
            }
        }
    } else {
        // k reducible pairs: σ_j skips λ_j among λ_1..λ_k, shifted by s − k
        // at position s, and keeps λ_{k+1} as its last coordinate.
        for j in 1..=k {
            let mut coords: Vec<HalfInt> = (1..k)
                .map(|s| {
                    let from = if s < j { l[s - 1] } else { l[s] };
                    from + HalfInt::from_int(s as i64 - k as i64)
                })
                .collect();
            coords.push(l[k]);
            pairs.push(LambdaPair {
                sigma: mtype(n, coords),
                nu: l[j - 1],
                reducible: true,
            });
        }
        // Irreducible pairs: σ drops λ_{k+1} and ends in ±λ_k.
        let head: Vec<HalfInt> = (1..k)
            .map(|s| l[s - 1] + HalfInt::from_int(s as i64 - k as i64))
            .collect();
        let signs: &[i64] = if l[k].is_zero() {
            &[1, -1]
        } else if l[k] > HalfInt::ZERO {
            &[1]
        } else {
            &[-1]
        };
        for &sign in signs {
            let mut coords = head.clone();
            coords.push(if sign >= 0 { l[k - 1] } else { -l[k - 1] });
            pairs.push(LambdaPair {
                sigma: mtype(n, coords),
                nu: l[k].abs(),
                reducible: false,
            });
        }
    }
    // Postconditions: the stated reducibility and the shared infinitesimal
    // character are structural facts, so violations are bugs.
    for pair in &pairs {
        let rep = ElementaryRep::new(pair.sigma.clone(), Nu::from_half(pair.nu));
        assert_eq!(
            rep.is_reducible(),
            pair.reducible,
            "reducibility mismatch at ({}; {})",
            pair.sigma,
            pair.nu
        );
        let infchar = rep.dominant_infchar().expect("real half-integral nu");
        assert_eq!(
            &infchar.lambda,
            lambda,
            "pair ({}; {}) strays from the family character {lambda}",
            pair.sigma,
            pair.nu
        );
    }
    Ok(pairs)
}

fn find(subs: &[Subquotient], label: SubqLabel) -> Subquotient {
    subs.iter()
        .find(|s| s.label() == label)
        .unwrap_or_else(|| panic!("decomposition is missing its {label} part"))
        .clone()
}

/// The classes of λ's family in chain order: τ_1, …, τ_k, then ω₊/ω₋ (even)
/// or ω (odd); even λ with vanishing last coordinate has only ω₊/ω₋.
///
/// Inner chain classes carry two realizations; their spectra are asserted to
/// be literally identical constraint systems.
pub fn ghat_family(n: usize, lambda: &Weight) -> Result<Vec<GhatClass>> {
    let class = lambda_class(n, lambda)?;
    let pairs = pairs_for_lambda(n, lambda)?;
    let k = n / 2;
    let decomps: Vec<Vec<Subquotient>> = pairs
        .iter()
        .filter(|p| p.reducible)
        .map(|p| {
            decompose(&ElementaryRep::new(p.sigma.clone(), Nu::from_half(p.nu)))
                .expect("reducible pair decomposes")
        })
        .collect();
    let make = |index: GhatIndex, realizations: Vec<Subquotient>| {
        if let [a, b] = realizations.as_slice() {
            assert_eq!(
                a.spectrum(),
                b.spectrum(),
                "chain realizations of {index} in family {lambda} disagree on spectra"
            );
            assert_eq!(a.is_unitary(), b.is_unitary());
            assert_eq!(
                a.dominant_infchar().unwrap(),
                b.dominant_infchar().unwrap()
            );
        }
        GhatClass {
            n,
            lambda: lambda.clone(),
            lambda_class: class,
            index,
            realizations,
        }
    };

    let mut out = Vec::new();
    if n.is_multiple_of(2) && class == LambdaClass::LambdaZero {
        out.push(make(GhatIndex::OmegaPlus, vec![find(&decomps[0], SubqLabel::OmegaPlus)]));
        out.push(make(GhatIndex::OmegaMinus, vec![find(&decomps[0], SubqLabel::OmegaMinus)]));
        return Ok(out);
    }
    out.push(make(GhatIndex::TauJ(1), vec![find(&decomps[0], SubqLabel::Tau)]));
    for j in 2..=k {
        out.push(make(
            GhatIndex::TauJ(j),
            vec![
                find(&decomps[j - 2], SubqLabel::Omega),
                find(&decomps[j - 1], SubqLabel::Tau),
            ],
        ));
    }
    if n.is_multiple_of(2) {
        out.push(make(GhatIndex::OmegaPlus, vec![find(&decomps[k - 1], SubqLabel::OmegaPlus)]));
        out.push(make(GhatIndex::OmegaMinus, vec![find(&decomps[k - 1], SubqLabel::OmegaMinus)]));
    } else {
        out.push(make(GhatIndex::Omega, vec![find(&decomps[k - 1], SubqLabel::Omega)]));
    }
    Ok(out)
}

/// If the class is equivalent to an irreducible elementary representation,
/// returns that representation. Exactly the odd-n ω classes are: their
/// spectrum is the full interlacing box of the family's irreducible pair.
pub fn elementary_equivalent(c: &GhatClass) -> Result<Option<ElementaryRep>> {
    if c.n().is_multiple_of(2) || c.index() != GhatIndex::Omega {
        return Ok(None);
    }
    let k = c.n() / 2;
    let l = c.lambda().coords();
    let mut coords: Vec<HalfInt> = (1..k)
        .map(|s| l[s - 1] + HalfInt::from_int(s as i64 - k as i64))
        .collect();
    coords.push(if l[k] >= HalfInt::ZERO { l[k - 1] } else { -l[k - 1] });
    let sigma = mtype(c.n(), coords);
    let rep = ElementaryRep::new(sigma.clone(), Nu::from_half(l[k].abs()));
    assert!(!rep.is_reducible(), "witness for {} must be irreducible", c.lambda());
    assert_eq!(
        SpectrumConstraint::elementary(&sigma),
        *c.spectrum(),
        "omega spectrum of family {} is not the full box",
        c.lambda()
    );
    assert_eq!(
        rep.dominant_infchar().unwrap(),
        c.canonical().dominant_infchar().unwrap()
    );
    Ok(Some(rep))
}

/// Membership in the non-elementary unitary dual: unitary and not a copy of
/// an irreducible elementary representation.
pub fn in_ghat0(c: &GhatClass) -> Result<bool> {
    Ok(c.is_unitary() && elementary_equivalent(c)?.is_none())
}

/// The distinguished K-type of a unitary class for even n: its unique
/// distinct fundamental corner when there is exactly one, otherwise the
/// collapsed corner q1 = q2. Always equals the unique minimal K-type.
pub fn q_of_unitary_even(c: &GhatClass) -> Result<KType> {
    if !c.n().is_multiple_of(2) {
        return Err(Error::OddNoCorners(c.n()));
    }
    if !c.is_unitary() {
        return Err(Error::NotUnitary);
    }
    let report = corner_report(c.canonical())?;
    let q = match report.distinct_fundamental() {
        1 => report.fundamental()[0].0.clone(),
        0 => {
            assert_eq!(
                report.q1, report.q2,
                "unitary class {}/{} has separated non-fundamental corners",
                c.lambda(),
                c.index()
            );
            report.q1
        }
        _ => unreachable!("unitary class with two distinct fundamental corners"),
    };
    let minimal = minimal_k_types(c.canonical());
    assert_eq!(
        minimal,
        vec![q.clone()],
        "distinguished corner of {}/{} is not the unique minimal K-type",
        c.lambda(),
        c.index()
    );
    Ok(q)
}

/// Inverse of [`q_of_unitary_even`], defined on all of the K-dual: recovers
/// λ and the family index from the K-type, then returns the class.
pub fn inverse_q_even(q: &KType) -> Result<GhatClass> {
    let n = q.n();
    if !n.is_multiple_of(2) {
        return Err(Error::OddNoCorners(n));
    }
    let k = n / 2;
    let m = q.coords();
    let shift = |s: usize| HalfInt::from_twice(2 * (k as i64 - s as i64) - 1); // k − s − 1/2
    let (lambda, index) = if m[k - 1].is_zero() {
        let j = (0..k).position(|s| m[s].is_zero()).expect("last coordinate is zero") + 1;
        let coords: Vec<HalfInt> = (1..=k)
            .map(|s| {
                if s < j {
                    m[s - 1] + shift(s)
                } else {
                    // Packed tail: λ_s = k − s + 1/2.
                    HalfInt::from_twice(2 * (k as i64 - s as i64) + 1)
                }
            })
            .collect();
        (Weight::new(coords), GhatIndex::TauJ(j))
    } else {
        let positive = m[k - 1] > HalfInt::ZERO;
        let coords: Vec<HalfInt> = (1..=k)
            .map(|s| {
                let last = if positive { m[k - 1] } else { -m[k - 1] };
                let v = if s == k { last } else { m[s - 1] };
                v + shift(s)
            })
            .collect();
        let index = if positive {
            GhatIndex::OmegaPlus
        } else {
            GhatIndex::OmegaMinus
        };
        (Weight::new(coords), index)
    };
    let family = ghat_family(n, &lambda)?;
    let class = family
        .into_iter()
        .find(|c| c.index() == index)
        .expect("constructed index exists in its family");
    assert!(class.is_unitary(), "inverse of {q} landed on a non-unitary class");
    let roundtrip = q_of_unitary_even(&class)?;
    assert_eq!(&roundtrip, q, "corner of the inverse class differs from {q}");
    Ok(class)
}

/// The Vogan-minimal K-type of an odd-n class; unique for every class.
pub fn qv_class(c: &GhatClass) -> Result<KType> {
    if c.n().is_multiple_of(2) {
        return Err(Error::OutOfDomain(
            "the minimal K-type parametrization is for odd n".into(),
        ));
    }
    let minimal = minimal_k_types(c.canonical());
    assert_eq!(minimal.len(), 1, "odd-n class without a unique minimal K-type");
    Ok(minimal.into_iter().next().unwrap())
}

/// Forward map of the odd-n parametrization: defined on the non-elementary
/// unitary dual only.
pub fn unitary_map_odd(c: &GhatClass) -> Result<KType> {
    if !c.is_unitary() {
        return Err(Error::NotUnitary);
    }
    if elementary_equivalent(c)?.is_some() {
        return Err(Error::ElementaryClass);
    }
    qv_class(c)
}

/// Inverse of [`unitary_map_odd`]: defined on integral K-types with vanishing
/// last coordinate. Shifts the p nonzero coordinates and packs the rest.
pub fn inverse_qv_odd(q: &KType) -> Result<GhatClass> {
    let n = q.n();
    if n.is_multiple_of(2) {
        return Err(Error::OutOfDomain(
            "the minimal K-type parametrization is for odd n".into(),
        ));
    }
    if q.parity() != ParityClass::Integral || !q.coords()[n / 2 - 1].is_zero() {
        return Err(Error::OutOfDomain(format!(
            "{q} lies outside the image: it must be integral with last coordinate zero"
        )));
    }
    let k = n / 2;
    let m = q.coords();
    let p = m.iter().filter(|c| !c.is_zero()).count();
    let mut coords: Vec<HalfInt> = (1..=k)
        .map(|s| {
            if s <= p {
                m[s - 1] + HalfInt::from_int(k as i64 - s as i64)
            } else {
                HalfInt::from_int(k as i64 - s as i64 + 1)
            }
        })
        .collect();
    coords.push(HalfInt::ZERO);
    let lambda = Weight::new(coords);
    let family = ghat_family(n, &lambda)?;
    let class = family
        .into_iter()
        .find(|c| c.index() == GhatIndex::TauJ(p + 1))
        .expect("tau indices 1..=k exist in every odd family");
    assert!(in_ghat0(&class)?, "inverse of {q} left the unitary dual");
    let roundtrip = unitary_map_odd(&class)?;
    assert_eq!(&roundtrip, q, "minimal K-type of the inverse class differs from {q}");
    Ok(class)
}

/// Closed-form count of λ-family preimages of q under a fixed index, odd n.
///
/// For the ω index with integral last coordinate ≥ 2 this formula is known to
/// undercount the brute-force tally by one; [`brute_count_preimages`] measures
/// the truth and the verification sweeps report both.
pub fn count_preimages(q: &KType, index: GhatIndex) -> Result<PreimageCount> {
    let n = q.n();
    if n.is_multiple_of(2) {
        return Err(Error::OutOfDomain(
            "preimage counting applies to the odd-n parametrization".into(),
        ));
    }
    let k = n / 2;
    let m = q.coords();
    match index {
        GhatIndex::TauJ(1) => Ok(PreimageCount::Infinite),
        GhatIndex::TauJ(j) if (2..=k).contains(&j) => {
            let d = m[j - 2] - m[j - 1];
            if d.is_zero() {
                return Ok(PreimageCount::Finite(0));
            }
            let d = d.as_integer().expect("same-parity difference is integral") as u64;
            let doubled = if m[k - 1] > HalfInt::ZERO { 2 * d } else { d };
            Ok(PreimageCount::Finite(doubled))
        }
        GhatIndex::Omega => {
            let last = m[k - 1];
            if last <= HalfInt::HALF {
                Ok(PreimageCount::Finite(0))
            } else if last == HalfInt::ONE {
                Ok(PreimageCount::Finite(1))
            } else {
                // 2⌊m_k − 1/2⌋ with floor in whole integers.
                let floor2 = (last.twice() - 1) / 2 * 2; // doubled value of ⌊m_k − 1/2⌋
                Ok(PreimageCount::Finite(floor2 as u64))
            }
        }
        _ => Err(Error::BadIndex(index.to_string())),
    }
}

/// Brute-force preimage count: scans every λ ∈ Λ with λ_1 ≤ window.
pub fn brute_count_preimages(q: &KType, index: GhatIndex, window: HalfInt) -> Result<u64> {
    let n = q.n();
    if n.is_multiple_of(2) {
        return Err(Error::OutOfDomain(
            "preimage counting applies to the odd-n parametrization".into(),
        ));
    }
    let mut count = 0;
    for lambda in enumerate_lambda(n, window)? {
        let family = ghat_family(n, &lambda)?;
        if let Some(class) = family.iter().find(|c| c.index() == index) {
            if qv_class(class)? == *q {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// All λ ∈ Λ with λ_1 ≤ bound, both parities, ascending lexicographically.
pub fn enumerate_lambda(n: usize, bound: HalfInt) -> Result<Vec<Weight>> {
    let k = crate::half_rank(n)?;
    let len = if n.is_multiple_of(2) { k } else { k + 1 };
    let mut out: Vec<Weight> = Vec::new();
    let mut coords: Vec<HalfInt> = Vec::with_capacity(len);
    for offset in [HalfInt::ZERO, HalfInt::HALF] {
        descend(n, len, bound, offset, &mut coords, &mut out);
    }
    out.sort_by(|a, b| a.coords().cmp(b.coords()));
    Ok(out)
}

fn descend(
    n: usize,
    len: usize,
    bound: HalfInt,
    offset: HalfInt,
    coords: &mut Vec<HalfInt>,
    out: &mut Vec<Weight>,
) {
    let i = coords.len();
    if i == len - 1 {
        // Last coordinate: ≥ 0 below the neighbor (even), or below the
        // neighbor in absolute value with either sign (odd).
        let prev = coords[len - 2];
        let mut v = offset;
        while v < prev {
            if n.is_multiple_of(2) {
                coords.push(v);
                out.push(Weight::new(coords.clone()));
                coords.pop();
            } else {
                for w in [-v, v] {
                    coords.push(w);
                    out.push(Weight::new(coords.clone()));
                    coords.pop();
                    if w.is_zero() {
                        break;
                    }
                }
            }
            v = v + HalfInt::ONE;
        }
        return;
    }
    let hi = match coords.last() {
        Some(&prev) => prev - HalfInt::ONE,
        None => bound,
    };
    let mut v = offset;
    while v <= hi {
        coords.push(v);
        descend(n, len, bound, offset, coords, out);
        coords.pop();
        v = v + HalfInt::ONE;
    }
}

/// Every class of the non-elementary unitary dual whose family satisfies
/// λ_1 ≤ bound, ordered by (λ, family position).
pub fn enumerate_ghat0(n: usize, bound: HalfInt) -> Result<Vec<GhatClass>> {
    let mut out = Vec::new();
    for lambda in enumerate_lambda(n, bound)? {
        for class in ghat_family(n, &lambda)? {
            if in_ghat0(&class)? {
                out.push(class);
            }
        }
    }
    Ok(out)
}
