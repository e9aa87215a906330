//! Topological types of real algebraic curves, labeled points with a
//! conjugation action, and exact integer divisors.
//!
//! A real curve is recorded purely topologically as `(g, mu, eps)`: genus,
//! number of real components, and whether the real locus divides the complex
//! locus. Points are opaque labels that are either real (pinned to a real
//! component) or one half of a complex-conjugate pair; divisors are finite
//! integer formal sums of labels. Everything downstream works with
//! representatives, never with linear-equivalence classes.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Dividing type of a real curve: `Dividing` when the real locus separates
/// the complex locus into two halves exchanged by conjugation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Epsilon {
    Dividing,
    NonDividing,
}

impl fmt::Display for Epsilon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Epsilon::Dividing => write!(f, "dividing"),
            Epsilon::NonDividing => write!(f, "nondividing"),
        }
    }
}

/// Topological type `(g, mu, eps)` of a compact real curve.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub struct CurveType {
    pub g: u32,
    pub mu: u32,
    pub eps: Epsilon,
}

impl CurveType {
    /// Checked constructor; see [`CurveType::is_valid`] for the predicate.
    pub fn new(g: u32, mu: u32, eps: Epsilon) -> Result<Self, Error> {
        let c = CurveType { g, mu, eps };
        c.validate()?;
        Ok(c)
    }

    /// Acceptance predicate for topological types:
    ///
    /// * `mu <= g + 1` (Harnack bound);
    /// * `eps = Dividing` requires `mu >= 1` and `mu = g + 1 (mod 2)`.
    ///
    /// `mu = 0` forces `NonDividing` as a consequence of the second rule.
    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    /// Same predicate as [`CurveType::is_valid`], reporting the violated rule.
    pub fn validate(&self) -> Result<(), Error> {
        if self.mu > self.g + 1 {
            return Err(Error::InvalidCurveType(format!(
                "mu = {} exceeds g + 1 = {}",
                self.mu,
                self.g + 1
            )));
        }
        if self.eps == Epsilon::Dividing {
            if self.mu == 0 {
                return Err(Error::InvalidCurveType(
                    "a dividing curve has at least one real component".into(),
                ));
            }
            if self.mu % 2 != (self.g + 1) % 2 {
                return Err(Error::InvalidCurveType(format!(
                    "a dividing type needs mu = g + 1 (mod 2); got mu = {}, g = {}",
                    self.mu, self.g
                )));
            }
        }
        Ok(())
    }
}

/// Whether a labeled point is real (on a given real component, indexed from
/// zero) or one member of a complex-conjugate pair (naming its partner).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PointKind {
    Real(u32),
    NonReal(String),
}

/// An opaque labeled point of the base curve.
///
/// Conjugation fixes real labels and swaps each non-real label with its named
/// partner; the partner relation must be a fixed-point-free involution on the
/// labels actually in use.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PointLabel {
    pub id: String,
    pub kind: PointKind,
}

impl PointLabel {
    pub fn real(id: impl Into<String>, component: u32) -> Self {
        PointLabel {
            id: id.into(),
            kind: PointKind::Real(component),
        }
    }

    pub fn non_real(id: impl Into<String>, partner: impl Into<String>) -> Self {
        PointLabel {
            id: id.into(),
            kind: PointKind::NonReal(partner.into()),
        }
    }

    pub fn is_real(&self) -> bool {
        matches!(self.kind, PointKind::Real(_))
    }

    /// Image of this label under the base conjugation.
    pub fn conj(&self) -> PointLabel {
        match &self.kind {
            PointKind::Real(_) => self.clone(),
            PointKind::NonReal(partner) => PointLabel {
                id: partner.clone(),
                kind: PointKind::NonReal(self.id.clone()),
            },
        }
    }
}

/// Serialized form of one divisor term.
#[derive(Debug, Clone, Serialize, Deserialize)]
struct DivisorEntry {
    point: PointLabel,
    coeff: i64,
}

/// An exact integer formal sum of labeled points.
///
/// Terms with coefficient zero are never stored, so structural equality is
/// equality of formal sums. The JSON form is an array of `{point, coeff}`
/// terms sorted by point id.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<DivisorEntry>", from = "Vec<DivisorEntry>")]
pub struct Divisor {
    terms: BTreeMap<PointLabel, i64>,
}

impl From<Divisor> for Vec<DivisorEntry> {
    fn from(d: Divisor) -> Self {
        d.terms
            .into_iter()
            .map(|(point, coeff)| DivisorEntry { point, coeff })
            .collect()
    }
}

impl From<Vec<DivisorEntry>> for Divisor {
    fn from(entries: Vec<DivisorEntry>) -> Self {
        Divisor::from_terms(entries.into_iter().map(|e| (e.point, e.coeff)))
    }
}

impl Divisor {
    /// The empty sum.
    pub fn zero() -> Self {
        Divisor::default()
    }

    /// Builds a divisor from terms, merging duplicate labels and dropping
    /// zero coefficients.
    pub fn from_terms(terms: impl IntoIterator<Item = (PointLabel, i64)>) -> Self {
        let mut d = Divisor::zero();
        for (p, c) in terms {
            d.add_term(p, c);
        }
        d
    }

    /// A single term `coeff * point`.
    pub fn point(p: PointLabel, coeff: i64) -> Self {
        Divisor::from_terms([(p, coeff)])
    }

    pub fn add_term(&mut self, p: PointLabel, coeff: i64) {
        let new = self.coeff(&p) + coeff;
        if new == 0 {
            self.terms.remove(&p);
        } else {
            self.terms.insert(p, new);
        }
    }

    pub fn coeff(&self, p: &PointLabel) -> i64 {
        self.terms.get(p).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PointLabel, i64)> {
        self.terms.iter().map(|(p, &c)| (p, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of coefficients.
    pub fn degree(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Image under the base conjugation, term by term.
    pub fn conj(&self) -> Divisor {
        Divisor::from_terms(self.terms().map(|(p, c)| (p.conj(), c)))
    }

    /// [`Divisor::conj`] after checking the labels against a curve type; the
    /// checked variant is what external inputs should go through.
    pub fn conj_checked(&self, curve: &CurveType) -> Result<Divisor, Error> {
        self.validate_for(curve)?;
        Ok(self.conj())
    }

    /// Checks that every label makes sense over `curve`: real components are
    /// in range and the partner relation is a fixed-point-free involution.
    pub fn validate_for(&self, curve: &CurveType) -> Result<(), Error> {
        for (p, _) in self.terms() {
            match &p.kind {
                PointKind::Real(component) => {
                    if *component >= curve.mu {
                        return Err(Error::MixedCurves(format!(
                            "label {:?} names real component {} but the curve has mu = {}",
                            p.id, component, curve.mu
                        )));
                    }
                }
                PointKind::NonReal(partner) => {
                    if *partner == p.id {
                        return Err(Error::MixedCurves(format!(
                            "label {:?} is its own conjugate partner",
                            p.id
                        )));
                    }
                    // If the partner label is itself present, the two must
                    // point at each other and agree on being non-real.
                    if let Some((q, _)) = self.terms().find(|(q, _)| q.id == *partner) {
                        match &q.kind {
                            PointKind::NonReal(back) if *back == p.id => {}
                            _ => {
                                return Err(Error::MixedCurves(format!(
                                    "labels {:?} and {:?} disagree about their pairing",
                                    p.id, partner
                                )));
                            }
                        }
                    }
                }
            }
        }
        // The same id must not appear with two different kinds.
        let mut seen: BTreeMap<&str, &PointLabel> = BTreeMap::new();
        for (p, _) in self.terms() {
            if let Some(prev) = seen.insert(p.id.as_str(), p) {
                if prev != p {
                    return Err(Error::MixedCurves(format!(
                        "label {:?} appears with two different kinds",
                        p.id
                    )));
                }
            }
        }
        Ok(())
    }

    /// `conj(D) = D`.
    pub fn is_invariant(&self) -> bool {
        self.conj() == *self
    }

    /// `conj(D) = -D`; forces every real label's coefficient to vanish.
    pub fn is_anti_invariant(&self) -> bool {
        self.conj() == -self
    }
}

impl Add for &Divisor {
    type Output = Divisor;
    fn add(self, rhs: &Divisor) -> Divisor {
        let mut out = self.clone();
        for (p, c) in rhs.terms() {
            out.add_term(p.clone(), c);
        }
        out
    }
}

impl Neg for &Divisor {
    type Output = Divisor;
    fn neg(self) -> Divisor {
        Divisor::from_terms(self.terms().map(|(p, c)| (p.clone(), -c)))
    }
}

impl Sub for &Divisor {
    type Output = Divisor;
    fn sub(self, rhs: &Divisor) -> Divisor {
        self + &-rhs
    }
}
