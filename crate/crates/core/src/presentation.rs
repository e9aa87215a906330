//! Finite presentations of real ruled manifolds.
//!
//! A presentation records the topological type of the base curve, the fiber
//! dimension parameter `n` (complex dimension of the fibers' ambient
//! projective space plus one, i.e. the rank of a defining bundle), a
//! reference real structure, and a finite multiset of elementary
//! transformation records applied to the reference.
//!
//! Reference structures, by parity of `n`:
//!
//! * odd `n`: the product structure on base x projective space, conjugation
//!   acting factorwise; its real part lies over every real component of the
//!   base. This is the only fibered reference needed in odd dimension.
//! * even `n`, nonempty real base locus: the split models, parameterized by
//!   the set of real components over which the real part of the manifold
//!   lives (the `plus_set`); the real part is orientable over each plus
//!   component before any transformation.
//! * even `n`, empty real base locus: two product-like references,
//!   distinguished by whether the fiberwise involution is plain conjugation
//!   (`ConjLike`) or conjugation composed with the extra fixed-point-free
//!   fiber involution (`C0Like`).
//!
//! A record is either a single transformation at a real point of the base
//! (pinned to a real component) or one couple of transformations at a pair of
//! complex-conjugate points, performed along conjugate centers. A rank-`r`
//! real record contributes `r` to the integer degree; a rank-`r` conjugate
//! couple contributes `2r`, once per member of the couple. The degree of the
//! presented manifold is the integer total modulo `n`; references have
//! degree zero.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::curve::CurveType;
use crate::error::Error;

/// Which product-like reference an empty-real-base presentation starts from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EmptyBaseLabel {
    ConjLike,
    C0Like,
}

impl EmptyBaseLabel {
    pub fn toggled(self) -> Self {
        match self {
            EmptyBaseLabel::ConjLike => EmptyBaseLabel::C0Like,
            EmptyBaseLabel::C0Like => EmptyBaseLabel::ConjLike,
        }
    }
}

/// Reference real structure of a presentation; see the module docs for the
/// three families and when each applies.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ReferenceStructure {
    /// Odd `n`: factorwise conjugation on the product.
    ProductConjOdd,
    /// Even `n`, `mu > 0`: split model with real part over `plus_set`.
    SplitPm { plus_set: BTreeSet<u32> },
    /// Even `n`, `mu = 0`: product-like reference tagged by its fiber
    /// involution.
    EmptyBase { label: EmptyBaseLabel },
}

/// Locus of one record: a real point on a given real component, or a
/// complex-conjugate pair of points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Locus {
    Real(u32),
    ConjPair,
}

/// One elementary transformation record.
///
/// `rank` is the rank of the blow-up center as a subbundle of the fiber
/// (dimension of the blown-up projective subspace plus one), constrained to
/// `1..=n-1`. For a `ConjPair` record the couple's two centers are conjugate
/// and share this rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ElemTransform {
    pub locus: Locus,
    pub rank: u32,
}

impl ElemTransform {
    pub fn real(component: u32, rank: u32) -> Self {
        ElemTransform {
            locus: Locus::Real(component),
            rank,
        }
    }

    pub fn conj(rank: u32) -> Self {
        ElemTransform {
            locus: Locus::ConjPair,
            rank,
        }
    }

    /// Contribution of one record to the integer-lifted degree: `rank` for a
    /// real record, `2 * rank` for a conjugate couple.
    pub fn degree_lift(&self) -> u64 {
        match self.locus {
            Locus::Real(_) => u64::from(self.rank),
            Locus::ConjPair => 2 * u64::from(self.rank),
        }
    }
}

/// Serialized form of one multiset entry.
#[derive(Debug, Clone, Serialize, Deserialize)]
struct TransformEntry {
    locus: Locus,
    rank: u32,
    count: u32,
}

/// Serialized form of a presentation.
#[derive(Debug, Clone, Serialize, Deserialize)]
struct PresentationJson {
    base: CurveType,
    n: u32,
    structure: ReferenceStructure,
    transforms: Vec<TransformEntry>,
}

/// A finite presentation of a real ruled manifold.
///
/// The transform multiset is kept canonical (no zero counts, entries sorted
/// with real loci by component then rank, conjugate-pair records last), so
/// structural equality of presentations is equality of presented data.
/// Construction does not enforce the domain invariants; call
/// [`Presentation::validate`] to check them.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "PresentationJson", from = "PresentationJson")]
pub struct Presentation {
    pub base: CurveType,
    pub n: u32,
    pub structure: ReferenceStructure,
    transforms: BTreeMap<ElemTransform, u32>,
}

impl From<Presentation> for PresentationJson {
    fn from(p: Presentation) -> Self {
        PresentationJson {
            base: p.base,
            n: p.n,
            structure: p.structure,
            transforms: p
                .transforms
                .into_iter()
                .map(|(rec, count)| TransformEntry {
                    locus: rec.locus,
                    rank: rec.rank,
                    count,
                })
                .collect(),
        }
    }
}

impl From<PresentationJson> for Presentation {
    fn from(j: PresentationJson) -> Self {
        Presentation::new(
            j.base,
            j.n,
            j.structure,
            j.transforms
                .into_iter()
                .map(|e| (ElemTransform { locus: e.locus, rank: e.rank }, e.count)),
        )
    }
}

impl Presentation {
    /// Builds a presentation, canonicalizing the multiset (merging duplicate
    /// records, dropping zero counts). Domain invariants are not checked
    /// here; see [`Presentation::validate`].
    pub fn new(
        base: CurveType,
        n: u32,
        structure: ReferenceStructure,
        transforms: impl IntoIterator<Item = (ElemTransform, u32)>,
    ) -> Self {
        let mut map: BTreeMap<ElemTransform, u32> = BTreeMap::new();
        for (rec, count) in transforms {
            if count == 0 {
                continue;
            }
            *map.entry(rec).or_insert(0) += count;
        }
        Presentation {
            base,
            n,
            structure,
            transforms: map,
        }
    }

    /// The untransformed reference.
    pub fn reference(base: CurveType, n: u32, structure: ReferenceStructure) -> Self {
        Presentation::new(base, n, structure, [])
    }

    /// Multiset entries in canonical order.
    pub fn transforms(&self) -> impl Iterator<Item = (ElemTransform, u32)> + '_ {
        self.transforms.iter().map(|(&rec, &count)| (rec, count))
    }

    /// Multiplicity of one record.
    pub fn count(&self, rec: ElemTransform) -> u32 {
        self.transforms.get(&rec).copied().unwrap_or(0)
    }

    /// Total number of records, counting multiplicity. A conjugate couple is
    /// one record.
    pub fn total_records(&self) -> u32 {
        self.transforms.values().sum()
    }

    /// Checks every structural invariant:
    ///
    /// * `n >= 2` and the base type is valid;
    /// * the reference matches the parity of `n` and the emptiness of the
    ///   real base locus, and `plus_set` names existing components;
    /// * every record has rank in `1..=n-1`, and every real record sits over
    ///   a component carrying real points of the manifold.
    pub fn validate(&self) -> Result<(), Error> {
        if self.n < 2 {
            return Err(Error::InvalidPresentation(format!(
                "n = {} but fibers need n >= 2",
                self.n
            )));
        }
        self.base.validate()?;
        match &self.structure {
            ReferenceStructure::ProductConjOdd => {
                if self.n % 2 == 0 {
                    return Err(Error::InvalidPresentation(
                        "the factorwise-conjugation reference applies to odd n".into(),
                    ));
                }
            }
            ReferenceStructure::SplitPm { plus_set } => {
                if self.n % 2 != 0 {
                    return Err(Error::InvalidPresentation(
                        "split references apply to even n".into(),
                    ));
                }
                if self.base.mu == 0 {
                    return Err(Error::InvalidPresentation(
                        "split references need a nonempty real base locus".into(),
                    ));
                }
                if let Some(&c) = plus_set.iter().find(|&&c| c >= self.base.mu) {
                    return Err(Error::InvalidPresentation(format!(
                        "plus_set names component {} but the base has mu = {}",
                        c, self.base.mu
                    )));
                }
            }
            ReferenceStructure::EmptyBase { .. } => {
                if self.n % 2 != 0 {
                    return Err(Error::InvalidPresentation(
                        "empty-base references apply to even n".into(),
                    ));
                }
                if self.base.mu != 0 {
                    return Err(Error::InvalidPresentation(
                        "empty-base references need mu = 0".into(),
                    ));
                }
            }
        }
        for (rec, _) in self.transforms() {
            self.validate_record(rec)?;
        }
        Ok(())
    }

    /// Checks one record against this presentation (rank range and real
    /// locus availability).
    pub fn validate_record(&self, rec: ElemTransform) -> Result<(), Error> {
        if rec.rank == 0 || rec.rank > self.n.saturating_sub(1) {
            return Err(Error::RankOutOfRange {
                rank: rec.rank,
                max: self.n.saturating_sub(1),
            });
        }
        if let Locus::Real(component) = rec.locus {
            if !self.has_real_part_over(component) {
                return Err(Error::RealLocusOutsideRealPart { component });
            }
        }
        Ok(())
    }

    /// Whether the presented manifold has real points over the given real
    /// component of the base: all components for the odd product reference,
    /// exactly the plus components for split references, none over an empty
    /// base locus.
    pub fn has_real_part_over(&self, component: u32) -> bool {
        if component >= self.base.mu {
            return false;
        }
        match &self.structure {
            ReferenceStructure::ProductConjOdd => true,
            ReferenceStructure::SplitPm { plus_set } => plus_set.contains(&component),
            ReferenceStructure::EmptyBase { .. } => false,
        }
    }

    /// Real components over which real records are admissible.
    pub fn real_components(&self) -> Vec<u32> {
        (0..self.base.mu)
            .filter(|&c| self.has_real_part_over(c))
            .collect()
    }

    /// Integer-lifted total degree of the transform multiset: each real
    /// record contributes its rank, each conjugate couple twice its rank.
    pub fn degree_lift(&self) -> u64 {
        self.transforms()
            .map(|(rec, count)| rec.degree_lift() * u64::from(count))
            .sum()
    }

    /// Degree of the presented manifold: the integer lift reduced mod `n`.
    /// References have degree zero.
    pub fn degree(&self) -> u32 {
        (self.degree_lift() % u64::from(self.n)) as u32
    }

    /// Adds one record, checking it against the presentation. The multiset
    /// is unordered, so any sequence of applications commutes.
    pub fn apply_transform(&self, rec: ElemTransform) -> Result<Presentation, Error> {
        self.validate_record(rec)?;
        Ok(self.with_added(rec, 1))
    }

    /// Number of rank-1 real records over a component.
    pub fn real_rank1_count(&self, component: u32) -> u32 {
        self.count(ElemTransform::real(component, 1))
    }

    /// Number of rank-1 conjugate-couple records.
    pub fn conj_rank1_count(&self) -> u32 {
        self.count(ElemTransform::conj(1))
    }

    /// Whether some real record has rank above one.
    pub fn has_higher_rank_real(&self) -> bool {
        self.transforms()
            .any(|(rec, _)| matches!(rec.locus, Locus::Real(_)) && rec.rank > 1)
    }

    pub(crate) fn with_added(&self, rec: ElemTransform, count: u32) -> Presentation {
        let mut out = self.clone();
        if count > 0 {
            *out.transforms.entry(rec).or_insert(0) += count;
        }
        out
    }

    pub(crate) fn with_removed(&self, rec: ElemTransform, count: u32) -> Result<Presentation, Error> {
        let have = self.count(rec);
        if have < count {
            return Err(Error::NotApplicable(format!(
                "needs {count} copies of {rec:?} but the presentation has {have}"
            )));
        }
        let mut out = self.clone();
        if have == count {
            out.transforms.remove(&rec);
        } else {
            out.transforms.insert(rec, have - count);
        }
        Ok(out)
    }

    pub(crate) fn with_structure(&self, structure: ReferenceStructure) -> Presentation {
        let mut out = self.clone();
        out.structure = structure;
        out
    }
}
