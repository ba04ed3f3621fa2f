//! Property tests over randomly generated scalars, weights, and parameters.

use proptest::prelude::*;

use spinrep::duals::{branch_restrict, enumerate_m_types, interlaces, KType};
use spinrep::{
    decompose, dominant_rep, same_orbit, ElementaryRep, HalfInt, MType, Nu, Rat, RootFamily,
    Weight,
};

fn halfint() -> impl Strategy<Value = HalfInt> {
    (-60i64..=60).prop_map(HalfInt::from_twice)
}

/// Weights with all coordinates in one parity coset.
fn aligned_weight(rank: usize) -> impl Strategy<Value = Weight> {
    (prop::collection::vec(-6i64..=6, rank), any::<bool>()).prop_map(|(vals, half)| {
        let off = i64::from(half);
        Weight::from_twice(&vals.iter().map(|v| 2 * v + off).collect::<Vec<_>>())
    })
}

fn family_and_weight() -> impl Strategy<Value = (RootFamily, Weight)> {
    (1usize..=4, any::<bool>()).prop_flat_map(|(rank, type_b)| {
        let fam = if type_b {
            RootFamily::TypeB(rank)
        } else {
            RootFamily::TypeD(rank)
        };
        aligned_weight(rank).prop_map(move |w| (fam, w))
    })
}

/// Dominant K highest weights for n in {4,5,6,7}.
fn k_type() -> impl Strategy<Value = KType> {
    (4usize..=7, any::<bool>()).prop_flat_map(|(n, half)| {
        let k = n / 2;
        (prop::collection::vec(0i64..=5, k), any::<bool>()).prop_map(move |(mut vals, neg)| {
            let off = i64::from(half);
            vals.sort_unstable_by(|a, b| b.cmp(a));
            let mut doubled: Vec<i64> = vals.iter().map(|v| 2 * v + off).collect();
            if n % 2 == 0 && neg {
                doubled[k - 1] = -doubled[k - 1];
            }
            KType::new(n, Weight::from_twice(&doubled)).expect("construction is dominant")
        })
    })
}

/// M highest weights plus a half-integral nu grid point.
fn m_type_and_nu() -> impl Strategy<Value = (MType, HalfInt)> {
    (4usize..=7, any::<bool>()).prop_flat_map(|(n, half)| {
        let rank = if n % 2 == 0 { n / 2 - 1 } else { n / 2 };
        (
            prop::collection::vec(0i64..=4, rank),
            any::<bool>(),
            0i64..=12,
        )
            .prop_map(move |(mut vals, neg, nu_twice)| {
                let off = i64::from(half);
                vals.sort_unstable_by(|a, b| b.cmp(a));
                let mut doubled: Vec<i64> = vals.iter().map(|v| 2 * v + off).collect();
                if n % 2 != 0 && neg {
                    doubled[rank - 1] = -doubled[rank - 1];
                }
                let sigma =
                    MType::new(n, Weight::from_twice(&doubled)).expect("construction is dominant");
                (sigma, HalfInt::from_twice(nu_twice))
            })
    })
}

proptest! {
    #[test]
    fn halfint_display_parse_round_trip(h in halfint()) {
        prop_assert_eq!(h.to_string().parse::<HalfInt>().unwrap(), h);
    }

    #[test]
    fn halfint_arithmetic_matches_doubled_integers(a in halfint(), b in halfint()) {
        prop_assert_eq!((a + b).twice(), a.twice() + b.twice());
        prop_assert_eq!((a - b).twice(), a.twice() - b.twice());
        prop_assert_eq!((-a).twice(), -a.twice());
        prop_assert_eq!(a < b, a.twice() < b.twice());
    }

    #[test]
    fn weight_display_parse_round_trip(w in (1usize..=4).prop_flat_map(aligned_weight)) {
        prop_assert_eq!(w.to_string().parse::<Weight>().unwrap(), w);
    }

    #[test]
    fn nu_display_parse_round_trip(num in -40i64..=40, den in 1i64..=12, imag in any::<bool>()) {
        let nu = if imag {
            Nu::imaginary(Rat::new(num, den))
        } else {
            Nu::real(Rat::new(num, den))
        };
        prop_assert_eq!(nu.to_string().parse::<Nu>().unwrap(), nu);
    }

    #[test]
    fn dominant_rep_is_idempotent_and_stays_in_orbit((fam, w) in family_and_weight()) {
        let dom = dominant_rep(&w, fam).unwrap();
        prop_assert_eq!(dominant_rep(&dom, fam).unwrap(), dom.clone());
        prop_assert!(same_orbit(&w, &dom, fam).unwrap());
    }

    #[test]
    fn same_orbit_is_symmetric_and_matches_representatives(
        (fam, a) in family_and_weight(),
        seed in prop::collection::vec(-6i64..=6, 4),
    ) {
        // Build b in the same parity coset and rank as a.
        let off = a.coords()[0].twice().rem_euclid(2);
        let b = Weight::from_twice(
            &seed[..a.len()].iter().map(|v| 2 * v + off).collect::<Vec<_>>(),
        );
        let ab = same_orbit(&a, &b, fam).unwrap();
        prop_assert_eq!(ab, same_orbit(&b, &a, fam).unwrap());
        prop_assert_eq!(ab, dominant_rep(&a, fam).unwrap() == dominant_rep(&b, fam).unwrap());
    }

    #[test]
    fn branching_matches_interlacing(q in k_type()) {
        let restricted = branch_restrict(&q);
        prop_assert!(!restricted.is_empty());
        for sigma in &restricted {
            prop_assert!(interlaces(sigma, &q).unwrap());
        }
        // Every interlacing M-type in a covering box is listed exactly once.
        let bound = q.coords()[0] + HalfInt::ONE;
        let mut from_box: Vec<MType> = enumerate_m_types(q.n(), bound)
            .unwrap()
            .into_iter()
            .filter(|sigma| interlaces(sigma, &q).unwrap())
            .collect();
        let mut listed = restricted.clone();
        from_box.sort_by_key(|s| s.weight().clone());
        listed.sort_by_key(|s| s.weight().clone());
        prop_assert_eq!(listed, from_box);
    }

    #[test]
    fn spectrum_enumeration_agrees_with_membership((sigma, nu) in m_type_and_nu()) {
        let rep = ElementaryRep::new(sigma, Nu::from_half(nu));
        prop_assume!(rep.is_reducible());
        let height = HalfInt::from_int(4);
        for sub in decompose(&rep).unwrap() {
            let members = sub.spectrum().enumerate(height);
            for q in &members {
                prop_assert!(sub.spectrum().contains(q).unwrap());
                prop_assert!(q.coords().iter().all(|c| c.abs() <= height));
            }
            // Conversely, every K-type in the height box that the constraint
            // accepts is enumerated.
            let accepted = spinrep::duals::enumerate_k_types(sub.n(), height)
                .unwrap()
                .into_iter()
                .filter(|q| sub.spectrum().contains(q).unwrap())
                .count();
            prop_assert_eq!(accepted, members.len());
        }
    }
}
