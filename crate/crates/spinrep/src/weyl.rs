//! Weyl group actions for root systems of type B and type D.
//!
//! The complexified Lie algebra of Spin(2k,1) has Weyl group W(B_k): all
//! coordinate permutations combined with arbitrary sign changes. For
//! Spin(2k+1,1) it is W(D_{k+1}): permutations combined with evenly many sign
//! changes. Infinitesimal characters are W-orbits, so equality of characters
//! is equality of dominant representatives.

use serde::{Deserialize, Serialize};

use crate::halfint::{HalfInt, Weight};
use crate::{Error, Result};

/// Root system family acting on weight coordinates.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum RootFamily {
    /// B_rank: permutations and all sign changes.
    TypeB(usize),
    /// D_rank: permutations and evenly many sign changes.
    TypeD(usize),
}

impl RootFamily {
    pub fn rank(self) -> usize {
        match self {
            RootFamily::TypeB(r) | RootFamily::TypeD(r) => r,
        }
    }

    fn check_len(self, w: &Weight) -> Result<()> {
        if w.len() != self.rank() {
            return Err(Error::RankLength {
                rank: self.rank(),
                got: w.len(),
            });
        }
        Ok(())
    }
}

impl std::fmt::Display for RootFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RootFamily::TypeB(r) => write!(f, "B{r}"),
            RootFamily::TypeD(r) => write!(f, "D{r}"),
        }
    }
}

/// The unique orbit point in the closed dominant chamber.
///
/// Type B: absolute values sorted descending (chamber λ_1 ≥ ⋯ ≥ λ_r ≥ 0).
/// Type D: absolute values sorted descending, and when the input has an odd
/// number of strictly negative coordinates and no zero, the last coordinate is
/// negated (chamber λ_1 ≥ ⋯ ≥ λ_{r−1} ≥ |λ_r|). A zero coordinate absorbs the
/// sign parity, so such orbits get an all-non-negative representative.
pub fn dominant_rep(w: &Weight, fam: RootFamily) -> Result<Weight> {
    fam.check_len(w)?;
    let mut abs: Vec<HalfInt> = w.coords().iter().map(|&c| c.abs()).collect();
    abs.sort();
    abs.reverse();
    if let RootFamily::TypeD(_) = fam {
        let negatives = w.coords().iter().filter(|c| **c < HalfInt::ZERO).count();
        let has_zero = w.coords().iter().any(|c| c.is_zero());
        if negatives % 2 == 1 && !has_zero {
            let last = abs.last_mut().expect("rank >= 1");
            *last = -*last;
        }
    }
    Ok(Weight::new(abs))
}

/// Whether two weights lie on one W-orbit (equal infinitesimal characters).
pub fn same_orbit(a: &Weight, b: &Weight, fam: RootFamily) -> Result<bool> {
    Ok(dominant_rep(a, fam)? == dominant_rep(b, fam)?)
}

/// One signed permutation: `apply` sends w to the tuple with
/// coordinates permuted by `perm` and then signed by `flip`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupElement {
    perm: Vec<usize>,
    flip: Vec<bool>,
}

impl GroupElement {
    pub fn apply(&self, w: &Weight) -> Result<Weight> {
        if w.len() != self.perm.len() {
            return Err(Error::RankLength {
                rank: self.perm.len(),
                got: w.len(),
            });
        }
        let coords = self
            .perm
            .iter()
            .zip(&self.flip)
            .map(|(&from, &neg)| {
                let c = w.get(from);
                if neg {
                    -c
                } else {
                    c
                }
            })
            .collect();
        Ok(Weight::new(coords))
    }
}

/// Materializes the full group for small ranks; the exhaustive oracle behind
/// `dominant_rep`. Capped at rank 4 (|W(B_4)| = 384).
pub fn enumerate_group(fam: RootFamily) -> Result<Vec<GroupElement>> {
    let rank = fam.rank();
    if rank > 4 {
        return Err(Error::RankTooLarge(rank));
    }
    let mut elements = Vec::new();
    for perm in permutations(rank) {
        for mask in 0u32..(1 << rank) {
            let flips = mask.count_ones() as usize;
            if matches!(fam, RootFamily::TypeD(_)) && flips % 2 == 1 {
                continue;
            }
            let flip = (0..rank).map(|i| mask & (1 << i) != 0).collect();
            elements.push(GroupElement {
                perm: perm.clone(),
                flip,
            });
        }
    }
    Ok(elements)
}

fn permutations(rank: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..rank).collect();
    fn go(slots: &mut Vec<usize>, fixed: usize, out: &mut Vec<Vec<usize>>) {
        if fixed == slots.len() {
            out.push(slots.clone());
            return;
        }
        for i in fixed..slots.len() {
            slots.swap(fixed, i);
            go(slots, fixed + 1, out);
            slots.swap(fixed, i);
        }
    }
    go(&mut current, 0, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wt;

    #[test]
    fn dominant_rep_type_b() {
        assert_eq!(dominant_rep(&wt![-1, 3], RootFamily::TypeB(2)).unwrap(), wt![3, 1]);
        assert_eq!(
            dominant_rep(&Weight::from_ints(&[1, 2]), RootFamily::TypeB(2)).unwrap(),
            Weight::from_ints(&[2, 1])
        );
    }

    #[test]
    fn dominant_rep_type_d() {
        assert_eq!(
            dominant_rep(&Weight::from_ints(&[1, -2]), RootFamily::TypeD(2)).unwrap(),
            Weight::from_ints(&[2, -1])
        );
        assert_eq!(
            dominant_rep(&Weight::from_ints(&[0, -3]), RootFamily::TypeD(2)).unwrap(),
            Weight::from_ints(&[3, 0])
        );
        assert_eq!(
            dominant_rep(&Weight::from_ints(&[2, -1, -3]), RootFamily::TypeD(3)).unwrap(),
            Weight::from_ints(&[3, 2, 1])
        );
        assert_eq!(
            dominant_rep(&Weight::from_ints(&[2, 1, -3]), RootFamily::TypeD(3)).unwrap(),
            Weight::from_ints(&[3, 2, -1])
        );
    }

    #[test]
    fn orbit_equality() {
        let b = RootFamily::TypeB(2);
        let d = RootFamily::TypeD(2);
        let w12 = Weight::from_ints(&[1, 2]);
        let m21 = Weight::from_ints(&[-2, 1]);
        assert!(same_orbit(&w12, &m21, b).unwrap());
        assert!(!same_orbit(&w12, &m21, d).unwrap());
        assert!(same_orbit(&w12, &w12, d).unwrap());
    }

    #[test]
    fn group_sizes() {
        assert_eq!(enumerate_group(RootFamily::TypeB(1)).unwrap().len(), 2);
        assert_eq!(enumerate_group(RootFamily::TypeB(2)).unwrap().len(), 8);
        assert_eq!(enumerate_group(RootFamily::TypeD(2)).unwrap().len(), 4);
        assert_eq!(enumerate_group(RootFamily::TypeB(4)).unwrap().len(), 384);
        assert_eq!(enumerate_group(RootFamily::TypeD(4)).unwrap().len(), 192);
        assert!(enumerate_group(RootFamily::TypeB(5)).is_err());
    }

    #[test]
    fn dominant_rep_matches_exhaustive_minimum() {
        // Every orbit point maps to the same representative, and that
        // representative is the unique orbit point in the closed chamber.
        for fam in [RootFamily::TypeB(3), RootFamily::TypeD(3)] {
            let group = enumerate_group(fam).unwrap();
            for w in [wt![4, -1, 3], wt![0, -2, 2], wt![5, 5, -5]] {
                let rep = dominant_rep(&w, fam).unwrap();
                let mut chamber_points = Vec::new();
                for g in &group {
                    let moved = g.apply(&w).unwrap();
                    assert_eq!(dominant_rep(&moved, fam).unwrap(), rep);
                    if in_closed_chamber(&moved, fam) && !chamber_points.contains(&moved) {
                        chamber_points.push(moved);
                    }
                }
                assert_eq!(chamber_points, vec![rep]);
            }
        }
    }

    fn in_closed_chamber(w: &Weight, fam: RootFamily) -> bool {
        let c = w.coords();
        let descending = c.windows(2).all(|p| p[0] >= p[1]);
        match fam {
            RootFamily::TypeB(_) => descending && c[c.len() - 1] >= HalfInt::ZERO,
            RootFamily::TypeD(_) => {
                let head = c[..c.len() - 1].windows(2).all(|p| p[0] >= p[1]);
                head && c[c.len() - 2] >= c[c.len() - 1].abs()
            }
        }
    }
}
