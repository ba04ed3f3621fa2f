//! Corners and fundamental corners of subquotient spectra (even n), the Vogan
//! norm, and minimal K-types.
//!
//! For even n every subquotient spectrum is an interval box inside one parity
//! coset, so it has two distinguished vertices: q1 (every coordinate at its
//! minimum) and q2 (same, but the last coordinate at its maximum). These are
//! the corners. A corner is fundamental for one of the two ρ_P-chambers D1, D2
//! when shifting it by ρ_K − ρ_P^D lands in the Weyl orbit of the parent's
//! infinitesimal character; that property singles out the minimal K-type of
//! every unitary subquotient.

use serde::Serialize;

use crate::duals::KType;
use crate::elementary::{rat_of, Rat};
use crate::halfint::{HalfInt, Weight};
use crate::subquotient::{SpectrumConstraint, Subquotient};
use crate::weyl::same_orbit;
use crate::{Error, Result};

/// The two chambers of ρ_P, differing in the sign of the last coordinate.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ChamberD {
    D1,
    D2,
}

impl std::fmt::Display for ChamberD {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ChamberD::D1 => "D1",
            ChamberD::D2 => "D2",
        })
    }
}

impl Serialize for ChamberD {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Both corners of a spectrum and their fundamentality in the matching
/// chamber (q1 with D1, q2 with D2).
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CornerReport {
    pub q1: KType,
    pub q2: KType,
    pub fundamental_q1: bool,
    pub fundamental_q2: bool,
}

impl CornerReport {
    /// Fundamental corners as (K-type, chamber) pairs; at most two entries,
    /// which may carry the same K-type when the corners coincide.
    pub fn fundamental(&self) -> Vec<(KType, ChamberD)> {
        let mut out = Vec::new();
        if self.fundamental_q1 {
            out.push((self.q1.clone(), ChamberD::D1));
        }
        if self.fundamental_q2 {
            out.push((self.q2.clone(), ChamberD::D2));
        }
        out
    }

    /// Number of distinct K-types among the fundamental corners.
    pub fn distinct_fundamental(&self) -> usize {
        match (self.fundamental_q1, self.fundamental_q2) {
            (false, false) => 0,
            (true, false) | (false, true) => 1,
            (true, true) => {
                if self.q1 == self.q2 {
                    1
                } else {
                    2
                }
            }
        }
    }
}

/// ρ_K − ρ_P^D for K = Spin(2k): (k − 3/2, k − 5/2, …, 1/2, ∓1/2), the last
/// coordinate −1/2 for D1 and +1/2 for D2.
pub fn rho_shift(d: ChamberD, k: usize) -> Weight {
    let mut coords: Vec<HalfInt> = (0..k - 1)
        .map(|i| HalfInt::from_twice(2 * (k as i64 - i as i64) - 3))
        .collect();
    coords.push(match d {
        ChamberD::D1 => -HalfInt::HALF,
        ChamberD::D2 => HalfInt::HALF,
    });
    Weight::new(coords)
}

fn corner_vertices(sub: &Subquotient) -> Result<(KType, KType)> {
    let n = sub.n();
    if !n.is_multiple_of(2) {
        return Err(Error::OddNoCorners(n));
    }
    let k = n / 2;
    let ranges = sub.spectrum().ranges();
    let head: Vec<HalfInt> = ranges[..k - 1].iter().map(|r| r.lo).collect();
    let last = ranges[k - 1];
    let hi = last.hi.expect("last coordinate of an even spectrum is bounded");
    let mut lo_coords = head.clone();
    lo_coords.push(last.lo);
    let mut hi_coords = head;
    hi_coords.push(hi);
    let q1 = KType::new(n, Weight::new(lo_coords)).expect("corner vertex is a K-type");
    let q2 = KType::new(n, Weight::new(hi_coords)).expect("corner vertex is a K-type");
    assert_corner(sub.spectrum(), &q1, false);
    assert_corner(sub.spectrum(), &q2, true);
    Ok((q1, q2))
}

// A corner must lie in the spectrum while its outward unit moves leave it:
// down in every coordinate, except up in the last one for q2.
fn assert_corner(spec: &SpectrumConstraint, q: &KType, last_at_max: bool) {
    assert!(spec.contains(q).unwrap(), "corner {q} escaped its spectrum");
    let coords = q.coords();
    let k = coords.len();
    for i in 0..k {
        let out = if last_at_max && i == k - 1 {
            HalfInt::ONE
        } else {
            -HalfInt::ONE
        };
        let mut probe = coords.to_vec();
        probe[i] = probe[i] + out;
        assert!(
            !spec.contains_weight(&Weight::new(probe)),
            "corner {q} admits an outward move in coordinate {i}"
        );
    }
}

fn orbit_test(sub: &Subquotient, q: &KType, d: ChamberD) -> Result<bool> {
    let k = sub.n() / 2;
    let shifted = q.weight().add(&rho_shift(d, k))?;
    let infchar = sub.dominant_infchar()?;
    same_orbit(&shifted, &infchar.lambda, infchar.family)
}

/// Corners of an even-n subquotient spectrum with their fundamentality.
pub fn corner_report(sub: &Subquotient) -> Result<CornerReport> {
    let (q1, q2) = corner_vertices(sub)?;
    let fundamental_q1 = orbit_test(sub, &q1, ChamberD::D1)?;
    let fundamental_q2 = orbit_test(sub, &q2, ChamberD::D2)?;
    Ok(CornerReport {
        q1,
        q2,
        fundamental_q1,
        fundamental_q2,
    })
}

/// Whether the given corner is fundamental in chamber d. The K-type must be
/// the d-corner of the subquotient (q1 for D1, q2 for D2).
pub fn is_fundamental_corner(sub: &Subquotient, q: &KType, d: ChamberD) -> Result<bool> {
    let (q1, q2) = corner_vertices(sub)?;
    let expected = match d {
        ChamberD::D1 => &q1,
        ChamberD::D2 => &q2,
    };
    if q != expected {
        return Err(Error::OutOfDomain(format!(
            "{q} is not the {d} corner of this subquotient (expected {expected})"
        )));
    }
    orbit_test(sub, q, d)
}

/// All fundamental corners of an even-n subquotient, as (K-type, chamber).
pub fn fundamental_corners(sub: &Subquotient) -> Result<Vec<(KType, ChamberD)>> {
    Ok(corner_report(sub)?.fundamental())
}

/// ‖q + 2ρ_K‖², the Vogan norm deciding minimality of K-types.
pub fn vogan_norm_sq(q: &KType) -> Rat {
    let n = q.n();
    let k = n / 2;
    let mut sum = Rat::from_integer(0);
    for (i, &m) in q.coords().iter().enumerate() {
        // 2ρ_K coordinate: 2(k − 1 − i) for even n, 2(k − 1 − i) + 1 for odd.
        let rho2 = 2 * (k as i64 - 1 - i as i64) + if n % 2 == 1 { 1 } else { 0 };
        let term = rat_of(m) + Rat::from_integer(rho2);
        sum += term * term;
    }
    sum
}

/// The K-types of lowest Vogan norm in the spectrum: the all-minima vertex
/// with the last coordinate moved to the feasible value(s) nearest zero.
/// One K-type, or two (±1/2 tie) exactly when the spectrum is half-integral
/// and its last interval straddles zero.
pub fn minimal_k_types(sub: &Subquotient) -> Vec<KType> {
    let n = sub.n();
    let k = n / 2;
    let ranges = sub.spectrum().ranges();
    let head: Vec<HalfInt> = ranges[..k - 1].iter().map(|r| r.lo).collect();
    let last = ranges[k - 1];
    let last_values: Vec<HalfInt> = if n % 2 == 1 || last.lo > HalfInt::ZERO {
        vec![last.lo]
    } else if last.hi.expect("even last coordinate is bounded") < HalfInt::ZERO {
        vec![last.hi.unwrap()]
    } else if sub.spectrum().parity() == crate::halfint::ParityClass::Integral {
        vec![HalfInt::ZERO]
    } else {
        vec![-HalfInt::HALF, HalfInt::HALF]
    };
    last_values
        .into_iter()
        .map(|v| {
            let mut coords = head.clone();
            coords.push(v);
            let q = KType::new(n, Weight::new(coords)).expect("minimal vertex is a K-type");
            assert!(
                sub.spectrum().contains(&q).unwrap(),
                "minimal K-type {q} escaped its spectrum"
            );
            q
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::duals::MType;
    use crate::elementary::ElementaryRep;
    use crate::subquotient::{decompose, SubqLabel};
    use crate::wt;

    fn subs(n: usize, sigma: &str, nu: &str) -> Vec<Subquotient> {
        let sigma = MType::new(n, sigma.parse().unwrap()).unwrap();
        decompose(&ElementaryRep::new(sigma, nu.parse().unwrap())).unwrap()
    }

    fn q(n: usize, w: Weight) -> KType {
        KType::new(n, w).unwrap()
    }

    #[test]
    fn rho_shift_values() {
        assert_eq!(rho_shift(ChamberD::D1, 2), wt![1, -1]);
        assert_eq!(rho_shift(ChamberD::D2, 2), wt![1, 1]);
        assert_eq!(rho_shift(ChamberD::D1, 3), wt![3, 1, -1]);
    }

    #[test]
    fn corners_of_discrete_series_realization() {
        // pi((2), 1/2) on n = 4 splits as tau, omega+, omega- in window a1.
        let parts = subs(4, "2", "1/2");
        assert_eq!(parts[1].label(), SubqLabel::OmegaPlus);
        let plus = corner_report(&parts[1]).unwrap();
        assert_eq!(plus.q1, q(4, wt![4, 2]));
        assert_eq!(plus.q2, q(4, wt![4, 4]));
        assert!(plus.fundamental_q1);
        assert!(!plus.fundamental_q2);
        assert_eq!(plus.fundamental(), vec![(q(4, wt![4, 2]), ChamberD::D1)]);

        let minus = corner_report(&parts[2]).unwrap();
        assert_eq!(minus.q1, q(4, wt![4, -4]));
        assert_eq!(minus.q2, q(4, wt![4, -2]));
        assert!(!minus.fundamental_q1);
        assert!(minus.fundamental_q2);
    }

    #[test]
    fn corners_collapse_for_unitary_tau() {
        let parts = subs(4, "2", "1/2");
        let tau = corner_report(&parts[0]).unwrap();
        assert_eq!(tau.q1, q(4, wt![4, 0]));
        assert_eq!(tau.q2, q(4, wt![4, 0]));
        assert!(tau.fundamental_q1 && tau.fundamental_q2);
        assert_eq!(tau.distinct_fundamental(), 1);
    }

    #[test]
    fn trivial_representation_has_no_fundamental_corner() {
        let tau = corner_report(&subs(4, "0", "3/2")[0]).unwrap();
        assert_eq!(tau.q1, q(4, wt![0, 0]));
        assert_eq!(tau.q2, q(4, wt![0, 0]));
        assert!(!tau.fundamental_q1 && !tau.fundamental_q2);
        assert_eq!(tau.distinct_fundamental(), 0);
    }

    #[test]
    fn fundamental_census_of_non_unitary_realizations() {
        // tau of pi((0), 5/2): spectrum {(0,0), (1,0)}, collapsed corners,
        // neither fundamental.
        let tau = corner_report(&subs(4, "0", "5/2")[0]).unwrap();
        assert_eq!(tau.q1, q(4, wt![0, 0]));
        assert_eq!(tau.q2, q(4, wt![0, 0]));
        assert_eq!(tau.distinct_fundamental(), 0);
        // A non-unitary tau in window a keeps both fundamental corners apart.
        let wide = corner_report(&subs(4, "3", "3/2")[0]).unwrap();
        assert_eq!(wide.q1, q(4, wt![6, -2]));
        assert_eq!(wide.q2, q(4, wt![6, 2]));
        assert_eq!(wide.distinct_fundamental(), 2);
    }

    #[test]
    fn odd_n_has_no_corners() {
        let err = corner_report(&subs(5, "1,0", "1")[0]).unwrap_err();
        assert_eq!(err, Error::OddNoCorners(5));
    }

    #[test]
    fn fundamental_corner_rejects_non_corner() {
        let parts = subs(4, "2", "1/2");
        let err = is_fundamental_corner(&parts[1], &q(4, wt![4, 4]), ChamberD::D1).unwrap_err();
        assert!(matches!(err, Error::OutOfDomain(_)));
        assert!(is_fundamental_corner(&parts[1], &q(4, wt![4, 2]), ChamberD::D1).unwrap());
        assert!(!is_fundamental_corner(&parts[1], &q(4, wt![4, 4]), ChamberD::D2).unwrap());
    }

    #[test]
    fn vogan_norm_values() {
        assert_eq!(vogan_norm_sq(&q(4, wt![0, 0])), Rat::from_integer(4));
        assert_eq!(vogan_norm_sq(&q(4, wt![4, 2])), Rat::from_integer(17));
        assert_eq!(vogan_norm_sq(&q(5, wt![0, 0])), Rat::from_integer(10));
    }

    #[test]
    fn minimal_k_types_even() {
        // Integral spectrum: unique minimal with last coordinate 0.
        let parts = subs(4, "2", "1/2");
        assert_eq!(minimal_k_types(&parts[0]), vec![q(4, wt![4, 0])]);
        // omega+ has its minimum at the lower corner.
        assert_eq!(minimal_k_types(&parts[1]), vec![q(4, wt![4, 2])]);
        // Half-integral spectrum straddling zero: a +-1/2 tie.
        let tau = &subs(4, "5/2", "1")[0];
        assert_eq!(
            minimal_k_types(tau),
            vec![q(4, wt![5, -1]), q(4, wt![5, 1])]
        );
    }

    #[test]
    fn minimal_k_types_odd() {
        let parts = subs(5, "1,0", "1");
        assert_eq!(minimal_k_types(&parts[0]), vec![q(5, wt![2, 0])]);
        assert_eq!(minimal_k_types(&parts[1]), vec![q(5, wt![2, 2])]);
    }

    #[test]
    fn minimal_k_types_minimize_vogan_norm() {
        for (n, sigma, nu) in [
            (4, "2", "1/2"),
            (4, "5/2", "1"),
            (4, "0", "5/2"),
            (5, "1,0", "1"),
            (5, "2,1", "4"),
            (6, "1,1", "1/2"),
            (7, "2,1,0", "3"),
        ] {
            for sub in subs(n, sigma, nu) {
                let mins = minimal_k_types(&sub);
                let norm = vogan_norm_sq(&mins[0]);
                for m in &mins {
                    assert_eq!(vogan_norm_sq(m), norm);
                }
                for other in sub.spectrum().enumerate(HalfInt::from_int(7)) {
                    assert!(
                        vogan_norm_sq(&other) >= norm,
                        "{other} beats claimed minimum in pi(({sigma}), {nu})"
                    );
                    if vogan_norm_sq(&other) == norm {
                        assert!(mins.contains(&other));
                    }
                }
            }
        }
    }
}
