//! The duals of K = Spin(n) and M = Spin(n−1), and branching between them.
//!
//! With k = ⌊n/2⌋, a K-type is a dominant tuple of length k and an M-type one
//! of length k−1 (even n) or k (odd n); coordinates are all integral or all
//! half-integral. Restriction K ↓ M is multiplicity free and governed by an
//! interlacing chain, and by Frobenius reciprocity the K-spectrum of every
//! elementary representation π(σ,ν) is exactly the set of K-types whose
//! restriction contains σ, independently of ν.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::halfint::{HalfInt, ParityClass, Weight};
use crate::{half_rank, Error, Result};

/// A highest weight of K = Spin(n); length ⌊n/2⌋.
///
/// Even n = 2k: m_1 ≥ ⋯ ≥ m_{k−1} ≥ |m_k|. Odd n = 2k+1: m_1 ≥ ⋯ ≥ m_k ≥ 0.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KType {
    n: usize,
    weight: Weight,
}

/// A highest weight of M = Spin(n−1); length ⌊n/2⌋ − 1 (even n) or ⌊n/2⌋ (odd).
///
/// Even n = 2k: n_1 ≥ ⋯ ≥ n_{k−1} ≥ 0. Odd n = 2k+1: n_1 ≥ ⋯ ≥ n_{k−1} ≥ |n_k|.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MType {
    n: usize,
    weight: Weight,
}

fn descending(coords: &[HalfInt]) -> bool {
    coords.windows(2).all(|p| p[0] >= p[1])
}

/// Exact membership test for K̂.
pub fn is_k_type(n: usize, w: &Weight) -> Result<bool> {
    let k = half_rank(n)?;
    if w.len() != k {
        return Err(Error::WrongLength {
            n,
            expected: k,
            got: w.len(),
        });
    }
    if w.parity_class() == ParityClass::Mixed {
        return Ok(false);
    }
    let c = w.coords();
    let head = descending(&c[..k - 1]);
    let tail = if n.is_multiple_of(2) {
        c[k - 2] >= c[k - 1].abs()
    } else {
        c[k - 1] >= HalfInt::ZERO && c[k - 2] >= c[k - 1]
    };
    Ok(head && tail)
}

/// Exact membership test for M̂.
pub fn is_m_type(n: usize, w: &Weight) -> Result<bool> {
    let k = half_rank(n)?;
    let expected = if n.is_multiple_of(2) { k - 1 } else { k };
    if w.len() != expected {
        return Err(Error::WrongLength {
            n,
            expected,
            got: w.len(),
        });
    }
    if w.parity_class() == ParityClass::Mixed {
        return Ok(false);
    }
    let c = w.coords();
    let ok = if n.is_multiple_of(2) {
        descending(c) && c[expected - 1] >= HalfInt::ZERO
    } else {
        descending(&c[..expected - 1]) && c[expected - 2] >= c[expected - 1].abs()
    };
    Ok(ok)
}

impl KType {
    pub fn new(n: usize, weight: Weight) -> Result<KType> {
        if is_k_type(n, &weight)? {
            Ok(KType { n, weight })
        } else {
            Err(Error::NotKType(weight.to_string()))
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    pub fn coords(&self) -> &[HalfInt] {
        self.weight.coords()
    }

    pub fn parity(&self) -> ParityClass {
        self.weight.parity_class()
    }
}

impl MType {
    pub fn new(n: usize, weight: Weight) -> Result<MType> {
        if is_m_type(n, &weight)? {
            Ok(MType { n, weight })
        } else {
            Err(Error::NotMType(weight.to_string()))
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    pub fn coords(&self) -> &[HalfInt] {
        self.weight.coords()
    }

    pub fn parity(&self) -> ParityClass {
        self.weight.parity_class()
    }

    /// The contragredient parameter: negates the last coordinate (odd n only;
    /// even-n M-types are self-dual in this parametrization).
    pub fn contragredient(&self) -> MType {
        if self.n % 2 == 1 {
            let mut coords = self.weight.coords().to_vec();
            let last = coords.len() - 1;
            coords[last] = -coords[last];
            MType {
                n: self.n,
                weight: Weight::new(coords),
            }
        } else {
            self.clone()
        }
    }
}

impl fmt::Display for KType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.weight)
    }
}

impl fmt::Debug for KType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K({}; {})", self.n, self.weight)
    }
}

impl fmt::Display for MType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.weight)
    }
}

impl fmt::Debug for MType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M({}; {})", self.n, self.weight)
    }
}

impl Serialize for KType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.weight.serialize(s)
    }
}

impl Serialize for MType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.weight.serialize(s)
    }
}

/// The interlacing relation σ ≺ q governing M ⊂ K branching.
///
/// Even n = 2k: m_1 ≥ n_1 ≥ m_2 ≥ ⋯ ≥ m_{k−1} ≥ n_{k−1} ≥ |m_k|.
/// Odd n = 2k+1: m_1 ≥ n_1 ≥ m_2 ≥ ⋯ ≥ m_{k−1} ≥ n_{k−1} ≥ m_k ≥ |n_k|.
/// Both sides must lie in the same parity class.
pub fn interlaces(sigma: &MType, q: &KType) -> Result<bool> {
    if sigma.n() != q.n() {
        return Err(Error::RankMismatch);
    }
    if sigma.parity() != q.parity() {
        return Ok(false);
    }
    let m = q.coords();
    let s = sigma.coords();
    let k = m.len();
    if q.n().is_multiple_of(2) {
        for i in 0..k - 1 {
            let next = if i + 1 < k - 1 { m[i + 1] } else { m[k - 1].abs() };
            if !(m[i] >= s[i] && s[i] >= next) {
                return Ok(false);
            }
        }
    } else {
        for i in 0..k - 1 {
            if !(m[i] >= s[i] && s[i] >= m[i + 1]) {
                return Ok(false);
            }
        }
        if !(m[k - 1] >= s[k - 1].abs()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Full multiplicity-free restriction q|M: all σ with σ ≺ q, lexicographically
/// ordered by doubled coordinates.
pub fn branch_restrict(q: &KType) -> Vec<MType> {
    let m = q.coords();
    let k = m.len();
    let n = q.n();
    let mut out = Vec::new();
    let mut current: Vec<HalfInt> = Vec::new();

    // Coordinate i of sigma ranges over [lo_i, hi_i] in steps of 1 within the
    // parity class of q; the ranges below encode the interlacing chain.
    fn go(
        i: usize,
        count: usize,
        lows: &[HalfInt],
        highs: &[HalfInt],
        current: &mut Vec<HalfInt>,
        out: &mut Vec<Weight>,
    ) {
        if i == count {
            out.push(Weight::new(current.clone()));
            return;
        }
        let mut v = lows[i];
        while v <= highs[i] {
            current.push(v);
            go(i + 1, count, lows, highs, current, out);
            current.pop();
            v = v + HalfInt::ONE;
        }
    }

    let (lows, highs): (Vec<HalfInt>, Vec<HalfInt>) = if n.is_multiple_of(2) {
        // n_i ∈ [m_{i+1}, m_i] for i < k−1; n_{k−1} ∈ [|m_k|, m_{k−1}].
        (0..k - 1)
            .map(|i| {
                let lo = if i + 1 < k - 1 { m[i + 1] } else { m[k - 1].abs() };
                (lo, m[i])
            })
            .unzip()
    } else {
        // n_i ∈ [m_{i+1}, m_i] for i < k; n_k ∈ [−m_k, m_k].
        (0..k)
            .map(|i| {
                if i + 1 < k {
                    (m[i + 1], m[i])
                } else {
                    (-m[k - 1], m[k - 1])
                }
            })
            .unzip()
    };

    let mut weights = Vec::new();
    go(0, lows.len(), &lows, &highs, &mut current, &mut weights);
    weights.sort();
    for w in weights {
        out.push(MType::new(n, w).expect("interlacing chain yields valid M-types"));
    }
    out
}

/// Whether q occurs in π(σ,ν)|K; by Frobenius reciprocity this is σ ≺ q and
/// does not depend on ν.
pub fn elementary_spectrum_contains(sigma: &MType, q: &KType) -> Result<bool> {
    interlaces(sigma, q)
}

fn enumerate_box(rank: usize, max_abs: HalfInt, mut keep: impl FnMut(&Weight) -> bool) -> Vec<Weight> {
    let mut out = Vec::new();
    let mut coords: Vec<HalfInt> = Vec::new();
    fn go(
        rank: usize,
        max_abs: HalfInt,
        coords: &mut Vec<HalfInt>,
        keep: &mut dyn FnMut(&Weight) -> bool,
        out: &mut Vec<Weight>,
    ) {
        if coords.len() == rank {
            let w = Weight::new(coords.clone());
            if keep(&w) {
                out.push(w);
            }
            return;
        }
        let mut v = -max_abs;
        while v <= max_abs {
            coords.push(v);
            go(rank, max_abs, coords, keep, out);
            coords.pop();
            v = v + HalfInt::HALF;
        }
    }
    go(rank, max_abs, &mut coords, &mut keep, &mut out);
    out
}

/// All K-types with every |coordinate| ≤ max_abs, both parities, sorted
/// lexicographically by doubled coordinates.
pub fn enumerate_k_types(n: usize, max_abs: HalfInt) -> Result<Vec<KType>> {
    let rank = half_rank(n)?;
    let mut weights = enumerate_box(rank, max_abs, |w| is_k_type(n, w).unwrap_or(false));
    weights.sort();
    Ok(weights
        .into_iter()
        .map(|w| KType { n, weight: w })
        .collect())
}

/// All M-types with every |coordinate| ≤ max_abs, both parities, sorted
/// lexicographically by doubled coordinates.
pub fn enumerate_m_types(n: usize, max_abs: HalfInt) -> Result<Vec<MType>> {
    let k = half_rank(n)?;
    let rank = if n.is_multiple_of(2) { k - 1 } else { k };
    let mut weights = enumerate_box(rank, max_abs, |w| is_m_type(n, w).unwrap_or(false));
    weights.sort();
    Ok(weights
        .into_iter()
        .map(|w| MType { n, weight: w })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wt;

    fn k(n: usize, w: Weight) -> KType {
        KType::new(n, w).unwrap()
    }

    fn m(n: usize, w: Weight) -> MType {
        MType::new(n, w).unwrap()
    }

    #[test]
    fn k_type_membership() {
        assert!(is_k_type(4, &Weight::from_ints(&[1, -1])).unwrap());
        assert!(!is_k_type(5, &Weight::from_ints(&[1, -1])).unwrap());
        assert!(!is_k_type(4, &wt![1, 0]).unwrap());
        assert!(is_k_type(6, &wt![5, 3, -3]).unwrap());
        assert!(!is_k_type(6, &wt![5, 3, -5]).unwrap());
        assert!(is_k_type(7, &wt![5, 3, 1]).unwrap());
        assert!(matches!(
            is_k_type(4, &Weight::from_ints(&[1, 0, 0])),
            Err(Error::WrongLength { .. })
        ));
        assert!(matches!(is_k_type(3, &Weight::from_ints(&[1])), Err(Error::UnsupportedN(3))));
    }

    #[test]
    fn m_type_membership() {
        assert!(is_m_type(4, &Weight::from_ints(&[2])).unwrap());
        assert!(!is_m_type(4, &Weight::from_ints(&[-1])).unwrap());
        assert!(is_m_type(5, &Weight::from_ints(&[1, -1])).unwrap());
        assert!(!is_m_type(5, &Weight::from_ints(&[1, 2])).unwrap());
        assert!(is_m_type(7, &wt![3, 1, -1]).unwrap());
    }

    #[test]
    fn interlacing_examples() {
        assert!(interlaces(&m(4, wt![2]), &k(4, wt![4, -2])).unwrap());
        assert!(!interlaces(&m(4, wt![2]), &k(4, wt![0, 0])).unwrap());
        assert!(interlaces(&m(5, Weight::from_ints(&[1, 0])), &k(5, Weight::from_ints(&[1, 1]))).unwrap());
        assert!(!interlaces(&m(5, Weight::from_ints(&[1, 1])), &k(5, Weight::from_ints(&[1, 0]))).unwrap());
        // Parity mismatch is a negative answer, not an error.
        assert!(!interlaces(&m(4, wt![1]), &k(4, wt![2, 0])).unwrap());
    }

    #[test]
    fn branching_examples() {
        let got = branch_restrict(&k(4, Weight::from_ints(&[1, 0])));
        assert_eq!(got, vec![m(4, Weight::from_ints(&[0])), m(4, Weight::from_ints(&[1]))]);

        let got = branch_restrict(&k(4, wt![1, 1]));
        assert_eq!(got, vec![m(4, wt![1])]);

        let got = branch_restrict(&k(5, Weight::from_ints(&[1, 0])));
        assert_eq!(
            got,
            vec![m(5, Weight::from_ints(&[0, 0])), m(5, Weight::from_ints(&[1, 0]))]
        );
    }

    #[test]
    fn branching_reciprocity_box() {
        // |branch_restrict(q)| equals the chain's interval-length product, and
        // membership in the list coincides with interlaces, for small boxes.
        for n in [4usize, 5, 6, 7] {
            let k_rank = n / 2;
            for q in enumerate_k_types(n, HalfInt::from_int(2)).unwrap() {
                let sigmas = branch_restrict(&q);
                let mut expected: u64 = 1;
                let c = q.coords();
                if n % 2 == 0 {
                    for i in 0..k_rank - 1 {
                        let lo = if i + 1 < k_rank - 1 { c[i + 1] } else { c[k_rank - 1].abs() };
                        expected *= ((c[i] - lo).twice() / 2 + 1) as u64;
                    }
                } else {
                    for i in 0..k_rank {
                        let (lo, hi) = if i + 1 < k_rank {
                            (c[i + 1], c[i])
                        } else {
                            (-c[k_rank - 1], c[k_rank - 1])
                        };
                        expected *= ((hi - lo).twice() / 2 + 1) as u64;
                    }
                }
                assert_eq!(sigmas.len() as u64, expected, "count mismatch for {q:?}");
                let mut seen = sigmas.clone();
                seen.dedup();
                assert_eq!(seen.len(), sigmas.len(), "duplicate branch for {q:?}");
                for sigma in &sigmas {
                    assert!(interlaces(sigma, &q).unwrap());
                }
            }
        }
    }

    #[test]
    fn spectrum_examples() {
        assert!(elementary_spectrum_contains(&m(4, Weight::from_ints(&[0])), &k(4, Weight::from_ints(&[3, 0]))).unwrap());
        assert!(!elementary_spectrum_contains(&m(4, Weight::from_ints(&[0])), &k(4, Weight::from_ints(&[3, 1]))).unwrap());
        assert!(elementary_spectrum_contains(&m(5, Weight::from_ints(&[0, 0])), &k(5, Weight::from_ints(&[2, 0]))).unwrap());
    }

    #[test]
    fn enumerators_are_sorted_and_valid() {
        let ks = enumerate_k_types(4, HalfInt::from_int(1)).unwrap();
        // Integral: (0,0), (1,-1), (1,0), (1,1); half-integral: (1/2,±1/2).
        assert_eq!(ks.len(), 6);
        assert!(ks.windows(2).all(|p| p[0] < p[1]));
        let ms = enumerate_m_types(5, HalfInt::HALF).unwrap();
        for sigma in &ms {
            assert!(is_m_type(5, sigma.weight()).unwrap());
        }
        assert_eq!(ms.len(), 3); // (0,0) and (1/2,±1/2)
        assert!(ms.contains(&m(5, wt![1, -1])));
    }
}
