//! Deformation classes: complete invariants, equivalence, normal forms,
//! realization, and enumeration.
//!
//! The classification splits on the parity of the fiber rank `n`.
//!
//! * Odd `n`: the class of the presented manifold is determined by the
//!   topological type of the base curve together with the degree mod `n`.
//! * Even `n`, base with real points: the class is determined by the real
//!   part's topological type, recorded as the counts `(t, k)` of orientable
//!   and non-orientable pieces over the base's real components, together
//!   with the degree mod `n`. Not every combination occurs: `t + k` is at
//!   most the number of base components, and the degree must agree with `k`
//!   mod 2.
//! * Even `n`, empty real base locus: the real part is empty and the class
//!   is determined by the degree class mod `2n` of an integer lift that
//!   accounts for the reference structure; this is recorded as the degree
//!   `d` mod `n` plus one extra bit `q`.
//!
//! [`key_of`] computes the invariant, [`equivalent`] compares two
//! presentations through it, [`realize`] builds the canonical presentation
//! of a key, [`normal_form`] composes the two, and [`enumerate_classes`]
//! lists every key over a given base and fiber rank.

use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::curve::CurveType;
use crate::error::Error;
use crate::presentation::{ElemTransform, EmptyBaseLabel, Presentation, ReferenceStructure};
use crate::topology::{quotient_class, real_part_topology};

/// Complete deformation invariant of a presented real ruled manifold.
///
/// Two valid presentations present deformation-equivalent manifolds exactly
/// when their keys are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "variant", rename_all = "snake_case")]
pub enum ClassKey {
    /// Odd fiber rank: base type and degree mod `n`.
    OddDim { curve: CurveType, n: u32, d: u32 },
    /// Even fiber rank over a base with real points: real part counts
    /// `(t, k)` and degree mod `n`.
    EvenDimRealBase {
        curve: CurveType,
        n: u32,
        t: u32,
        k: u32,
        d: u32,
    },
    /// Even fiber rank over an empty real base locus: degree mod `n` and the
    /// quotient bit `q`.
    EvenDimEmptyBase {
        curve: CurveType,
        n: u32,
        d: u32,
        q: u8,
    },
}

impl ClassKey {
    /// The base curve type the key classifies over.
    pub fn curve(&self) -> CurveType {
        match *self {
            ClassKey::OddDim { curve, .. }
            | ClassKey::EvenDimRealBase { curve, .. }
            | ClassKey::EvenDimEmptyBase { curve, .. } => curve,
        }
    }

    /// The fiber rank.
    pub fn n(&self) -> u32 {
        match *self {
            ClassKey::OddDim { n, .. }
            | ClassKey::EvenDimRealBase { n, .. }
            | ClassKey::EvenDimEmptyBase { n, .. } => n,
        }
    }

    /// The degree mod `n`.
    pub fn d(&self) -> u32 {
        match *self {
            ClassKey::OddDim { d, .. }
            | ClassKey::EvenDimRealBase { d, .. }
            | ClassKey::EvenDimEmptyBase { d, .. } => d,
        }
    }

    /// Checks that the key names a class that actually occurs.
    pub fn validate(&self) -> Result<(), Error> {
        match *self {
            ClassKey::OddDim { curve, n, d } => {
                if n < 2 || n % 2 == 0 {
                    return Err(Error::InvalidKey(
                        "odd_dim needs an odd fiber rank n >= 3".into(),
                    ));
                }
                curve.validate()?;
                if d >= n {
                    return Err(Error::InvalidKey(format!("d = {d} must lie in 0..{n}")));
                }
                Ok(())
            }
            ClassKey::EvenDimRealBase { curve, n, t, k, d } => {
                if n < 2 || n % 2 != 0 {
                    return Err(Error::InvalidKey(
                        "even_dim_real_base needs an even fiber rank n >= 2".into(),
                    ));
                }
                curve.validate()?;
                if curve.mu == 0 {
                    return Err(Error::InvalidKey(
                        "even_dim_real_base needs a base with real points".into(),
                    ));
                }
                if t + k > curve.mu {
                    return Err(Error::InvalidKey(format!(
                        "t + k = {} exceeds mu = {}",
                        t + k,
                        curve.mu
                    )));
                }
                if d >= n {
                    return Err(Error::InvalidKey(format!("d = {d} must lie in 0..{n}")));
                }
                if d % 2 != k % 2 {
                    return Err(Error::InvalidKey("d != k mod 2".into()));
                }
                Ok(())
            }
            ClassKey::EvenDimEmptyBase { curve, n, d, q } => {
                if n < 2 || n % 2 != 0 {
                    return Err(Error::InvalidKey(
                        "even_dim_empty_base needs an even fiber rank n >= 2".into(),
                    ));
                }
                curve.validate()?;
                if curve.mu != 0 {
                    return Err(Error::InvalidKey(
                        "even_dim_empty_base needs an empty real base locus".into(),
                    ));
                }
                if d >= n || d % 2 != 0 {
                    return Err(Error::InvalidKey(format!(
                        "d = {d} must be even and lie in 0..{n}"
                    )));
                }
                if q > 1 {
                    return Err(Error::InvalidKey(format!("q = {q} must be 0 or 1")));
                }
                Ok(())
            }
        }
    }

    /// Sort tuple `(t, k, d, q)` used by [`enumerate_classes`]; the fields a
    /// variant lacks count as zero.
    fn sort_tuple(&self) -> (u32, u32, u32, u8) {
        match *self {
            ClassKey::OddDim { d, .. } => (0, 0, d, 0),
            ClassKey::EvenDimRealBase { t, k, d, .. } => (t, k, d, 0),
            ClassKey::EvenDimEmptyBase { d, q, .. } => (0, 0, d, q),
        }
    }
}

/// Computes the complete invariant of a valid presentation.
pub fn key_of(p: &Presentation) -> Result<ClassKey, Error> {
    if p.n % 2 != 0 {
        p.validate()?;
        return Ok(ClassKey::OddDim {
            curve: p.base,
            n: p.n,
            d: p.degree(),
        });
    }
    if p.base.mu > 0 {
        let top = real_part_topology(p)?;
        Ok(ClassKey::EvenDimRealBase {
            curve: p.base,
            n: p.n,
            t: top.t,
            k: top.k,
            d: p.degree(),
        })
    } else {
        let qc = quotient_class(p)?;
        Ok(ClassKey::EvenDimEmptyBase {
            curve: p.base,
            n: p.n,
            d: qc.d2n % p.n,
            q: qc.q,
        })
    }
}

/// Whether two presentations present deformation-equivalent manifolds.
/// Presentations over different base types or fiber ranks are inequivalent,
/// not erroneous.
pub fn equivalent(p: &Presentation, other: &Presentation) -> Result<bool, Error> {
    Ok(key_of(p)? == key_of(other)?)
}

/// A presentation in canonical form: the unique output of [`realize`] for
/// its key. Obtained only from [`realize`] or [`normal_form`], so equality
/// of canonical presentations is equality of classes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct CanonicalPresentation(Presentation);

impl Deref for CanonicalPresentation {
    type Target = Presentation;

    fn deref(&self) -> &Presentation {
        &self.0
    }
}

impl From<CanonicalPresentation> for Presentation {
    fn from(c: CanonicalPresentation) -> Presentation {
        c.0
    }
}

impl CanonicalPresentation {
    pub fn into_inner(self) -> Presentation {
        self.0
    }
}

/// Builds the canonical presentation of a class.
///
/// The canonical form keeps the record multiset as small and as uniform as
/// possible: conjugate couples of rank 1 carry the degree, real records of
/// rank 1 mark exactly the non-orientable components (which are taken first,
/// and the plus set is an initial segment), and over an empty real base
/// locus the label carries the quotient bit whenever the genus parity lets
/// it, with couples making up the lift otherwise.
pub fn realize(key: &ClassKey) -> Result<CanonicalPresentation, Error> {
    key.validate()?;
    let p = match *key {
        ClassKey::OddDim { curve, n, d } => {
            let e = if d % 2 == 0 { d } else { d + n };
            Presentation::new(
                curve,
                n,
                ReferenceStructure::ProductConjOdd,
                [(ElemTransform::conj(1), e / 2)],
            )
        }
        ClassKey::EvenDimRealBase { curve, n, t, k, d } => {
            let plus_set = (0..t + k).collect();
            let e = (i64::from(d) - i64::from(k)).rem_euclid(i64::from(n)) as u32;
            let mut records = vec![(ElemTransform::conj(1), e / 2)];
            for c in 0..k {
                records.push((ElemTransform::real(c, 1), 1));
            }
            Presentation::new(curve, n, ReferenceStructure::SplitPm { plus_set }, records)
        }
        ClassKey::EvenDimEmptyBase { curve, n, d, q } => {
            let (label, e) = if curve.g % 2 != 0 {
                // Odd genus: both labels sit at shift 0, so the couples must
                // carry the full lift mod 2n.
                (EmptyBaseLabel::ConjLike, d + n * u32::from(q))
            } else {
                // Even genus: the label choice carries the bit.
                let label = if q == 1 {
                    EmptyBaseLabel::C0Like
                } else {
                    EmptyBaseLabel::ConjLike
                };
                (label, d)
            };
            Presentation::new(
                curve,
                n,
                ReferenceStructure::EmptyBase { label },
                [(ElemTransform::conj(1), e / 2)],
            )
        }
    };
    debug_assert_eq!(key_of(&p).as_ref(), Ok(key));
    Ok(CanonicalPresentation(p))
}

/// Canonical form of a presentation: the canonical presentation of its
/// class. Two presentations are equivalent exactly when their normal forms
/// are equal, and normal forms are fixed points of this map.
pub fn normal_form(p: &Presentation) -> Result<CanonicalPresentation, Error> {
    realize(&key_of(p)?)
}

/// All deformation classes with base type `curve` and fiber rank `n`,
/// sorted by `(t, k, d, q)`.
///
/// There are `n` classes for odd `n`; for even `n` there are
/// `(mu + 1)(mu + 2) / 2 * n / 2` over a base with real points and `n` over
/// one without.
pub fn enumerate_classes(n: u32, curve: CurveType) -> Result<Vec<ClassKey>, Error> {
    curve.validate()?;
    if n < 2 {
        return Err(Error::InvalidPresentation(format!(
            "fiber rank n = {n} is below 2"
        )));
    }
    let mut keys = Vec::new();
    if n % 2 != 0 {
        for d in 0..n {
            keys.push(ClassKey::OddDim { curve, n, d });
        }
    } else if curve.mu > 0 {
        for t in 0..=curve.mu {
            for k in 0..=(curve.mu - t) {
                for d in 0..n {
                    if d % 2 == k % 2 {
                        keys.push(ClassKey::EvenDimRealBase { curve, n, t, k, d });
                    }
                }
            }
        }
    } else {
        for d in (0..n).step_by(2) {
            for q in 0..=1u8 {
                keys.push(ClassKey::EvenDimEmptyBase { curve, n, d, q });
            }
        }
    }
    keys.sort_by_key(ClassKey::sort_tuple);
    Ok(keys)
}
