//! Topology of the real part of a presented manifold.
//!
//! For even `n` the real part fibers over a subset of the base's real
//! components. Over each plus component it is a closed manifold that starts
//! out orientable and has its orientability toggled by every rank-1 real
//! transformation performed over that component, so the parity of the rank-1
//! real record count decides the status. Real records of rank above one
//! never arise in the reductions that track orientability and are refused
//! rather than guessed at.
//!
//! For odd `n` the real part fibers over all of the base's real locus with
//! connected fibers, so the number of its components equals `mu` and no
//! orientability bookkeeping is kept.
//!
//! Over an empty real base locus (even `n`) the remaining invariant is the
//! topology of the quotient of the manifold by its involution, captured
//! exactly by the integer-lifted degree mod `2n`, shifted by `n` for the
//! `C0Like` reference when the genus is even (for odd genus the two
//! references are interchangeable).

use serde::{Deserialize, Serialize};

use crate::curve::{CurveType, Epsilon};
use crate::error::Error;
use crate::presentation::{EmptyBaseLabel, Presentation, ReferenceStructure};

/// Orientability status of the real part over one real component of the
/// base.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ComponentStatus {
    /// No real points of the manifold over this component.
    None,
    Orientable,
    NonOrientable,
}

/// Per-component statuses together with the counts `t` of orientable and `k`
/// of non-orientable components of the real part.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealPartTopology {
    pub statuses: Vec<ComponentStatus>,
    pub t: u32,
    pub k: u32,
}

/// The topological type `(t, k, g, mu, eps)` of a real ruled manifold of
/// even fiber dimension over a base with real points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Quintuple {
    pub t: u32,
    pub k: u32,
    pub g: u32,
    pub mu: u32,
    pub eps: Epsilon,
}

impl Quintuple {
    pub fn curve(&self) -> CurveType {
        CurveType {
            g: self.g,
            mu: self.mu,
            eps: self.eps,
        }
    }
}

/// Quotient invariant of an empty-real-base presentation: the integer-lifted
/// degree mod `2n` (including the reference shift), and the derived bit `q`
/// telling which of the two classes sharing a degree this is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientClass {
    pub d2n: u32,
    pub q: u8,
}

/// Statuses of the real part over each real component, for even `n`.
///
/// Every rank-1 real record toggles its component's orientability; real
/// records of higher rank are refused with [`Error::UnsupportedRank`].
pub fn real_part_topology(p: &Presentation) -> Result<RealPartTopology, Error> {
    p.validate()?;
    if p.n % 2 != 0 {
        return Err(Error::OddDimension);
    }
    if p.has_higher_rank_real() {
        return Err(Error::UnsupportedRank);
    }
    let statuses: Vec<ComponentStatus> = (0..p.base.mu)
        .map(|c| {
            if !p.has_real_part_over(c) {
                ComponentStatus::None
            } else if p.real_rank1_count(c) % 2 == 0 {
                ComponentStatus::Orientable
            } else {
                ComponentStatus::NonOrientable
            }
        })
        .collect();
    let t = statuses
        .iter()
        .filter(|s| **s == ComponentStatus::Orientable)
        .count() as u32;
    let k = statuses
        .iter()
        .filter(|s| **s == ComponentStatus::NonOrientable)
        .count() as u32;
    Ok(RealPartTopology { statuses, t, k })
}

/// Number of components of the real part for odd `n`: one over each real
/// component of the base, whatever the transforms.
pub fn real_component_count(p: &Presentation) -> Result<u32, Error> {
    p.validate()?;
    if p.n % 2 == 0 {
        return Err(Error::EvenDimension);
    }
    Ok(p.base.mu)
}

/// Whether a quintuple is allowable: nonnegative counts with
/// `t + k <= mu` over a valid curve type.
pub fn allowable(q: &Quintuple) -> bool {
    q.curve().is_valid() && q.t + q.k <= q.mu
}

/// Whether a quintuple is realizable in even fiber dimension `n` with degree
/// `d`: allowable and `d = k (mod 2)`.
pub fn realizable(q: &Quintuple, n: u32, d: u32) -> bool {
    debug_assert!(n >= 2 && n % 2 == 0, "realizability applies to even n");
    allowable(q) && d % 2 == q.k % 2
}

/// Reference shift of the integer-lifted degree mod `2n`: the `C0Like`
/// reference sits `n` away from the `ConjLike` one when the genus is even,
/// and at the same place when the genus is odd.
pub(crate) fn empty_base_shift(label: EmptyBaseLabel, g: u32, n: u32) -> u32 {
    match label {
        EmptyBaseLabel::ConjLike => 0,
        EmptyBaseLabel::C0Like => n * ((g + 1) % 2),
    }
}

/// Quotient invariant for even `n` over an empty real base locus.
pub fn quotient_class(p: &Presentation) -> Result<QuotientClass, Error> {
    p.validate()?;
    if p.n % 2 != 0 {
        return Err(Error::OddDimension);
    }
    let label = match &p.structure {
        ReferenceStructure::EmptyBase { label } => *label,
        _ => return Err(Error::NotEmptyBase),
    };
    let two_n = u64::from(2 * p.n);
    let d2n =
        ((u64::from(empty_base_shift(label, p.base.g, p.n)) + p.degree_lift()) % two_n) as u32;
    let q = u8::from(d2n >= p.n);
    Ok(QuotientClass { d2n, q })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::ElemTransform;

    fn curve(g: u32, mu: u32, eps: Epsilon) -> CurveType {
        CurveType { g, mu, eps }
    }

    fn split(plus: &[u32]) -> ReferenceStructure {
        ReferenceStructure::SplitPm {
            plus_set: plus.iter().copied().collect(),
        }
    }

    fn empty(label: EmptyBaseLabel) -> ReferenceStructure {
        ReferenceStructure::EmptyBase { label }
    }

    #[test]
    fn parity_of_real_records_decides_orientability() {
        let base = curve(1, 2, Epsilon::NonDividing);
        let p = Presentation::new(
            base,
            2,
            split(&[0]),
            [(ElemTransform::real(0, 1), 2)],
        );
        let top = real_part_topology(&p).unwrap();
        assert_eq!(
            top.statuses,
            vec![ComponentStatus::Orientable, ComponentStatus::None]
        );
        assert_eq!((top.t, top.k), (1, 0));

        let q = Presentation::new(base, 2, split(&[0, 1]), [(ElemTransform::real(0, 1), 1)]);
        let top = real_part_topology(&q).unwrap();
        assert_eq!(
            top.statuses,
            vec![ComponentStatus::NonOrientable, ComponentStatus::Orientable]
        );
        assert_eq!((top.t, top.k), (1, 1));
    }

    #[test]
    fn higher_rank_real_records_are_refused() {
        let p = Presentation::new(
            curve(1, 1, Epsilon::NonDividing),
            4,
            split(&[0]),
            [(ElemTransform::real(0, 2), 1)],
        );
        assert_eq!(real_part_topology(&p), Err(Error::UnsupportedRank));
    }

    #[test]
    fn odd_dimension_component_count_is_mu() {
        let p = Presentation::new(
            curve(2, 3, Epsilon::NonDividing),
            3,
            ReferenceStructure::ProductConjOdd,
            [(ElemTransform::real(1, 1), 5), (ElemTransform::conj(2), 1)],
        );
        assert_eq!(real_component_count(&p), Ok(3));
        assert_eq!(real_part_topology(&p), Err(Error::OddDimension));

        let q = Presentation::reference(curve(1, 1, Epsilon::NonDividing), 2, split(&[0]));
        assert_eq!(real_component_count(&q), Err(Error::EvenDimension));
    }

    #[test]
    fn allowable_and_realizable() {
        let q = Quintuple {
            t: 2,
            k: 1,
            g: 2,
            mu: 3,
            eps: Epsilon::Dividing,
        };
        assert!(allowable(&q));
        assert!(realizable(&q, 4, 1));
        assert!(!realizable(&q, 4, 0));

        // t + k above mu.
        let too_many = Quintuple {
            t: 2,
            k: 1,
            g: 1,
            mu: 2,
            eps: Epsilon::NonDividing,
        };
        assert!(!allowable(&too_many));

        // Invalid underlying curve.
        let bad_curve = Quintuple {
            t: 0,
            k: 0,
            g: 0,
            mu: 2,
            eps: Epsilon::NonDividing,
        };
        assert!(!allowable(&bad_curve));

        let free = Quintuple {
            t: 0,
            k: 0,
            g: 1,
            mu: 2,
            eps: Epsilon::NonDividing,
        };
        assert!(realizable(&free, 4, 0));
        assert!(!realizable(&free, 4, 1));
    }

    #[test]
    fn quotient_reference_values() {
        let even_g = curve(2, 0, Epsilon::NonDividing);
        let conj = Presentation::reference(even_g, 2, empty(EmptyBaseLabel::ConjLike));
        assert_eq!(quotient_class(&conj).unwrap(), QuotientClass { d2n: 0, q: 0 });

        // One couple of rank n/2 shifts the lift by n.
        let shifted = Presentation::new(
            even_g,
            2,
            empty(EmptyBaseLabel::ConjLike),
            [(ElemTransform::conj(1), 1)],
        );
        assert_eq!(
            quotient_class(&shifted).unwrap(),
            QuotientClass { d2n: 2, q: 1 }
        );

        // For even genus the C0Like reference sits at the shifted spot.
        let c0 = Presentation::reference(even_g, 2, empty(EmptyBaseLabel::C0Like));
        assert_eq!(quotient_class(&c0).unwrap(), QuotientClass { d2n: 2, q: 1 });

        // For odd genus the two references share the base spot.
        let odd_g = curve(1, 0, Epsilon::NonDividing);
        let c0_odd = Presentation::reference(odd_g, 4, empty(EmptyBaseLabel::C0Like));
        assert_eq!(quotient_class(&c0_odd).unwrap(), QuotientClass { d2n: 0, q: 0 });
    }

    #[test]
    fn quotient_requires_even_n_and_empty_base() {
        let p = Presentation::reference(curve(1, 1, Epsilon::NonDividing), 2, split(&[0]));
        assert_eq!(quotient_class(&p), Err(Error::NotEmptyBase));
        let q = Presentation::reference(
            curve(1, 0, Epsilon::NonDividing),
            3,
            ReferenceStructure::ProductConjOdd,
        );
        assert_eq!(quotient_class(&q), Err(Error::OddDimension));
    }

    #[test]
    fn quotient_degree_compatibility() {
        // d2n mod n equals the presented degree.
        let base = curve(3, 0, Epsilon::NonDividing);
        for label in [EmptyBaseLabel::ConjLike, EmptyBaseLabel::C0Like] {
            for count in 0..6u32 {
                let p = Presentation::new(
                    base,
                    4,
                    empty(label),
                    [(ElemTransform::conj(1), count)],
                );
                let qc = quotient_class(&p).unwrap();
                assert_eq!(qc.d2n % 4, p.degree());
                assert_eq!(qc.q, u8::from(qc.d2n >= 4));
            }
        }
    }
}
