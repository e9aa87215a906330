//! Class-preserving rewrite moves between presentations.
//!
//! Each move rewrites the transform multiset (and possibly the reference
//! structure) without changing the deformation class of the presented
//! manifold, hence without changing any invariant computed by
//! [`crate::classify::key_of`]. The moves:
//!
//! * conversion: one rank-1 conjugate couple trades places with two rank-1
//!   real records on a component carrying real points of the manifold (the
//!   couple degenerates to a double real point and splits, or conversely);
//! * merge/split in a fiber: two records at the same locus combine into one
//!   whose rank is the sum once their points are brought into one fiber
//!   (conjugate pairs of fibers for couples), provided the sum stays below
//!   `n`; a sum of exactly `n` fills the fiber and the records disappear,
//!   since twisting by a full fiber does not change the manifold;
//! * full-twist removal/insertion: `n` rank-1 real records on one component,
//!   or conjugate couples of total rank `n`, or - for even `n` over a base
//!   with real points - conjugate couples of total rank `n/2` brought into a
//!   single real fiber, can be removed or inserted outright;
//! * real-pair cancellation: at `n = 2` two rank-1 real records on one
//!   component annihilate (the special case of a filled fiber);
//! * structure flip over an empty real base locus: for odd genus the two
//!   reference labels are interchangeable in place; for even genus toggling
//!   the label must be compensated by adding or removing one conjugate
//!   couple of rank `n/2`;
//! * component swap: relabeling the base's real components, carrying the
//!   plus set and the real records along, reflects a deformation of the base
//!   curve permuting its components.
//!
//! Merging two real records is exposed only for odd `n`: for even `n` the
//! result would carry a rank above one at a real locus, where orientability
//! bookkeeping is deliberately undefined, and the even-dimensional
//! reductions never need it.

use crate::error::Error;
use crate::presentation::{
    ElemTransform, EmptyBaseLabel, Locus, Presentation, ReferenceStructure,
};

/// Outcome of merging two record ranks inside one fiber.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MergeOutcome {
    /// The merged record, of rank `r1 + r2 < n`.
    Merged(u32),
    /// The ranks fill the fiber: both records disappear.
    FullRank,
}

/// Rank arithmetic of an in-fiber merge: `r1 + r2` strictly below `n` stays
/// a record, exactly `n` fills the fiber, more than `n` does not fit.
pub fn merge_in_fiber(r1: u32, r2: u32, n: u32) -> Result<MergeOutcome, Error> {
    let sum = r1 + r2;
    if r1 == 0 || r2 == 0 || r1 > n - 1 || r2 > n - 1 {
        return Err(Error::RankOutOfRange {
            rank: r1.max(r2),
            max: n - 1,
        });
    }
    if sum < n {
        Ok(MergeOutcome::Merged(sum))
    } else if sum == n {
        Ok(MergeOutcome::FullRank)
    } else {
        Err(Error::NotApplicable(format!(
            "ranks {r1} + {r2} exceed the fiber rank {n}"
        )))
    }
}

/// One rewrite move. `applicable_moves` enumerates the instances whose
/// preconditions hold on a given presentation; `Move::apply` performs one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Move {
    /// `n = 2` only: two rank-1 real records on `component` annihilate.
    CancelRealPair { component: u32 },
    /// One rank-1 couple becomes two rank-1 real records on `component`.
    ConjToReal { component: u32 },
    /// Two rank-1 real records on `component` become one rank-1 couple.
    RealToConj { component: u32 },
    /// Remove `n` rank-1 real records on `component` (a full twist).
    RemoveFullReal { component: u32 },
    /// Insert `n` rank-1 real records on `component`.
    AddFullReal { component: u32 },
    /// Remove `n` rank-1 couples (a full twist at a conjugate fiber pair).
    RemoveFullConj,
    /// Insert `n` rank-1 couples.
    AddFullConj,
    /// Even `n`, base with real points: remove `n/2` rank-1 couples by
    /// merging the couple points into one real fiber.
    RemoveConjHalf,
    /// Even `n`, base with real points: insert `n/2` rank-1 couples.
    AddConjHalf,
    /// Merge two couples of ranks `r1 <= r2`, `r1 + r2 <= n - 1`.
    MergeConj { r1: u32, r2: u32 },
    /// Merge two couples of ranks `r1 + r2 = n`: both disappear.
    MergeConjFull { r1: u32, r2: u32 },
    /// Split one couple of rank `rank` into ranks `part` and `rank - part`.
    SplitConj { rank: u32, part: u32 },
    /// Odd `n`: merge two real records on `component` (`r1 + r2 <= n - 1`).
    MergeReal { component: u32, r1: u32, r2: u32 },
    /// Odd `n`: two real records on `component` with `r1 + r2 = n` disappear.
    MergeRealFull { component: u32, r1: u32, r2: u32 },
    /// Odd `n`: split a real record on `component`.
    SplitReal { component: u32, rank: u32, part: u32 },
    /// Empty base locus, odd genus: toggle the reference label in place.
    FlipLabel,
    /// Empty base locus, even genus: toggle the label and add one couple of
    /// rank `n/2`.
    FlipLabelAdd,
    /// Empty base locus, even genus: toggle the label and remove one couple
    /// of rank `n/2`.
    FlipLabelRemove,
    /// Swap real components `a < b` of the base, relabeling the plus set and
    /// the real records.
    SwapComponents { a: u32, b: u32 },
}

impl Move {
    /// Applies the move, checking its precondition.
    pub fn apply(&self, p: &Presentation) -> Result<Presentation, Error> {
        match *self {
            Move::CancelRealPair { component } => cancel_real_pair(p, component),
            Move::ConjToReal { component } => conj_to_real(p, component),
            Move::RealToConj { component } => real_to_conj(p, component),
            Move::RemoveFullReal { component } => {
                require_real_locus(p, component)?;
                p.with_removed(ElemTransform::real(component, 1), p.n)
            }
            Move::AddFullReal { component } => {
                require_real_locus(p, component)?;
                Ok(p.with_added(ElemTransform::real(component, 1), p.n))
            }
            Move::RemoveFullConj => p.with_removed(ElemTransform::conj(1), p.n),
            Move::AddFullConj => Ok(p.with_added(ElemTransform::conj(1), p.n)),
            Move::RemoveConjHalf => {
                require_real_fiber_half(p)?;
                p.with_removed(ElemTransform::conj(1), p.n / 2)
            }
            Move::AddConjHalf => {
                require_real_fiber_half(p)?;
                Ok(p.with_added(ElemTransform::conj(1), p.n / 2))
            }
            Move::MergeConj { r1, r2 } => {
                match merge_in_fiber(r1, r2, p.n)? {
                    MergeOutcome::Merged(sum) => remove_two(p, ElemTransform::conj(r1),
                        ElemTransform::conj(r2))
                        .map(|q| q.with_added(ElemTransform::conj(sum), 1)),
                    MergeOutcome::FullRank => Err(Error::NotApplicable(
                        "ranks fill the fiber; this instance removes the records".into(),
                    )),
                }
            }
            Move::MergeConjFull { r1, r2 } => {
                if r1 + r2 != p.n {
                    return Err(Error::NotApplicable(format!(
                        "ranks {r1} + {r2} do not fill a rank-{} fiber",
                        p.n
                    )));
                }
                remove_two(p, ElemTransform::conj(r1), ElemTransform::conj(r2))
            }
            Move::SplitConj { rank, part } => {
                split_checked(p, ElemTransform::conj(rank), part, |r| ElemTransform::conj(r))
            }
            Move::MergeReal { component, r1, r2 } => {
                require_odd(p)?;
                match merge_in_fiber(r1, r2, p.n)? {
                    MergeOutcome::Merged(sum) => remove_two(
                        p,
                        ElemTransform::real(component, r1),
                        ElemTransform::real(component, r2),
                    )
                    .map(|q| q.with_added(ElemTransform::real(component, sum), 1)),
                    MergeOutcome::FullRank => Err(Error::NotApplicable(
                        "ranks fill the fiber; this instance removes the records".into(),
                    )),
                }
            }
            Move::MergeRealFull { component, r1, r2 } => {
                require_odd(p)?;
                if r1 + r2 != p.n {
                    return Err(Error::NotApplicable(format!(
                        "ranks {r1} + {r2} do not fill a rank-{} fiber",
                        p.n
                    )));
                }
                remove_two(
                    p,
                    ElemTransform::real(component, r1),
                    ElemTransform::real(component, r2),
                )
            }
            Move::SplitReal { component, rank, part } => {
                require_odd(p)?;
                split_checked(p, ElemTransform::real(component, rank), part, |r| {
                    ElemTransform::real(component, r)
                })
            }
            Move::FlipLabel => {
                let label = require_empty_base(p)?;
                if p.base.g % 2 == 0 {
                    return Err(Error::NotApplicable(
                        "for even genus a label toggle must carry a rank-n/2 couple".into(),
                    ));
                }
                Ok(p.with_structure(ReferenceStructure::EmptyBase {
                    label: label.toggled(),
                }))
            }
            Move::FlipLabelAdd => {
                let label = require_empty_base(p)?;
                if p.base.g % 2 != 0 {
                    return Err(Error::NotApplicable(
                        "for odd genus the labels are interchangeable in place".into(),
                    ));
                }
                Ok(p
                    .with_structure(ReferenceStructure::EmptyBase {
                        label: label.toggled(),
                    })
                    .with_added(ElemTransform::conj(p.n / 2), 1))
            }
            Move::FlipLabelRemove => {
                let label = require_empty_base(p)?;
                if p.base.g % 2 != 0 {
                    return Err(Error::NotApplicable(
                        "for odd genus the labels are interchangeable in place".into(),
                    ));
                }
                p.with_removed(ElemTransform::conj(p.n / 2), 1).map(|q| {
                    q.with_structure(ReferenceStructure::EmptyBase {
                        label: label.toggled(),
                    })
                })
            }
            Move::SwapComponents { a, b } => swap_components(p, a, b),
        }
    }
}

fn require_odd(p: &Presentation) -> Result<(), Error> {
    if p.n % 2 == 0 {
        Err(Error::NotApplicable(
            "real-record merges and splits are reserved for odd n".into(),
        ))
    } else {
        Ok(())
    }
}

fn require_real_locus(p: &Presentation, component: u32) -> Result<(), Error> {
    if p.has_real_part_over(component) {
        Ok(())
    } else {
        Err(Error::RealLocusOutsideRealPart { component })
    }
}

/// Precondition of the half-twist couple removal: even `n` and a real fiber
/// to merge the couple points into, i.e. a base with real points.
fn require_real_fiber_half(p: &Presentation) -> Result<(), Error> {
    if p.n % 2 != 0 {
        return Err(Error::NotApplicable(
            "half twists need an even fiber rank".into(),
        ));
    }
    if p.base.mu == 0 {
        return Err(Error::NotApplicable(
            "half twists need a real fiber, so the base must have real points".into(),
        ));
    }
    Ok(())
}

fn require_empty_base(p: &Presentation) -> Result<EmptyBaseLabel, Error> {
    match &p.structure {
        ReferenceStructure::EmptyBase { label } => Ok(*label),
        _ => Err(Error::NotApplicable(
            "structure flips apply over an empty real base locus".into(),
        )),
    }
}

fn remove_two(p: &Presentation, a: ElemTransform, b: ElemTransform) -> Result<Presentation, Error> {
    if a == b {
        p.with_removed(a, 2)
    } else {
        p.with_removed(a, 1)?.with_removed(b, 1)
    }
}

fn split_checked(
    p: &Presentation,
    rec: ElemTransform,
    part: u32,
    make: impl Fn(u32) -> ElemTransform,
) -> Result<Presentation, Error> {
    if part == 0 || part >= rec.rank {
        return Err(Error::NotApplicable(format!(
            "cannot split rank {} at {}",
            rec.rank, part
        )));
    }
    Ok(p.with_removed(rec, 1)?
        .with_added(make(part), 1)
        .with_added(make(rec.rank - part), 1))
}

fn swap_components(p: &Presentation, a: u32, b: u32) -> Result<Presentation, Error> {
    if a >= b || b >= p.base.mu {
        return Err(Error::NotApplicable(format!(
            "components {a}, {b} cannot be swapped on a base with mu = {}",
            p.base.mu
        )));
    }
    let structure = match &p.structure {
        ReferenceStructure::SplitPm { plus_set } => ReferenceStructure::SplitPm {
            plus_set: plus_set
                .iter()
                .map(|&c| if c == a { b } else if c == b { a } else { c })
                .collect(),
        },
        other => other.clone(),
    };
    let transforms = p.transforms().map(|(rec, count)| {
        let locus = match rec.locus {
            Locus::Real(c) if c == a => Locus::Real(b),
            Locus::Real(c) if c == b => Locus::Real(a),
            other => other,
        };
        (ElemTransform { locus, rank: rec.rank }, count)
    });
    Ok(Presentation::new(p.base, p.n, structure, transforms.collect::<Vec<_>>()))
}

/// At `n = 2`, two rank-1 real records on one component annihilate; this is
/// the filled-fiber removal in its lowest case. For other `n` a bare pair
/// removal would change the degree mod `n` and is refused; the conversion
/// moves cover the general reduction instead.
pub fn cancel_real_pair(p: &Presentation, component: u32) -> Result<Presentation, Error> {
    if p.n != 2 {
        return Err(Error::NotApplicable(format!(
            "a bare real pair cancels only at n = 2 (here n = {})",
            p.n
        )));
    }
    require_real_locus(p, component)?;
    p.with_removed(ElemTransform::real(component, 1), 2)
}

/// One rank-1 conjugate couple degenerates to a double real point over
/// `component` and splits into two rank-1 real records there. Needs real
/// points of the manifold over the component for the degenerate position to
/// exist.
pub fn conj_to_real(p: &Presentation, component: u32) -> Result<Presentation, Error> {
    require_real_locus(p, component)?;
    Ok(p.with_removed(ElemTransform::conj(1), 1)?
        .with_added(ElemTransform::real(component, 1), 2))
}

/// Inverse of [`conj_to_real`]: two rank-1 real records on one component
/// merge into a double point and move off the real locus as a conjugate
/// couple.
pub fn real_to_conj(p: &Presentation, component: u32) -> Result<Presentation, Error> {
    require_real_locus(p, component)?;
    Ok(p.with_removed(ElemTransform::real(component, 1), 2)?
        .with_added(ElemTransform::conj(1), 1))
}

/// Removes a full twist: the lexicographically first sub-multiset of
/// conjugate couples whose ranks sum to `n`, or failing that, for each
/// component in order, real records on that component whose ranks sum to
/// `n`. Returns `NotApplicable` when no such sub-multiset exists.
pub fn remove_full(p: &Presentation) -> Result<Presentation, Error> {
    let conj_pool: Vec<(u32, u32)> = p
        .transforms()
        .filter(|(rec, _)| rec.locus == Locus::ConjPair)
        .map(|(rec, count)| (rec.rank, count))
        .collect();
    if let Some(take) = subset_summing(&conj_pool, p.n) {
        let mut out = p.clone();
        for (rank, how_many) in take {
            out = out.with_removed(ElemTransform::conj(rank), how_many)?;
        }
        return Ok(out);
    }
    for component in 0..p.base.mu {
        let real_pool: Vec<(u32, u32)> = p
            .transforms()
            .filter(|(rec, _)| rec.locus == Locus::Real(component))
            .map(|(rec, count)| (rec.rank, count))
            .collect();
        if let Some(take) = subset_summing(&real_pool, p.n) {
            let mut out = p.clone();
            for (rank, how_many) in take {
                out = out.with_removed(ElemTransform::real(component, rank), how_many)?;
            }
            return Ok(out);
        }
    }
    Err(Error::NotApplicable(
        "no sub-multiset of records fills a fiber".into(),
    ))
}

/// First sub-multiset (in lexicographic order over the pool) whose ranks,
/// counted with the chosen multiplicities, sum to `target`.
fn subset_summing(pool: &[(u32, u32)], target: u32) -> Option<Vec<(u32, u32)>> {
    fn go(
        pool: &[(u32, u32)],
        idx: usize,
        remaining: u32,
        acc: &mut Vec<(u32, u32)>,
    ) -> bool {
        if remaining == 0 {
            return true;
        }
        if idx >= pool.len() {
            return false;
        }
        let (rank, count) = pool[idx];
        let max_take = (remaining / rank).min(count);
        for take in (0..=max_take).rev() {
            if take > 0 {
                acc.push((rank, take));
            }
            if go(pool, idx + 1, remaining - rank * take, acc) {
                return true;
            }
            if take > 0 {
                acc.pop();
            }
        }
        false
    }
    let mut acc = Vec::new();
    if go(pool, 0, target, &mut acc) {
        Some(acc)
    } else {
        None
    }
}

/// Toggles the reference label over an empty real base locus. For odd genus
/// the toggle stands alone; for even genus it removes one rank-`n/2` couple
/// when one is present and inserts one otherwise, keeping the quotient
/// invariant fixed either way.
pub fn structure_flip(p: &Presentation) -> Result<Presentation, Error> {
    let label = require_empty_base(p)?;
    let _ = label;
    if p.base.g % 2 != 0 {
        Move::FlipLabel.apply(p)
    } else if p.count(ElemTransform::conj(p.n / 2)) > 0 {
        Move::FlipLabelRemove.apply(p)
    } else {
        Move::FlipLabelAdd.apply(p)
    }
}

/// Enumerates every move instance whose precondition holds on `p`.
///
/// The list is the full rewrite vocabulary on the domain where invariants
/// are defined: for even `n` it never proposes real-record merges or splits,
/// since those leave the domain of orientability bookkeeping.
pub fn applicable_moves(p: &Presentation) -> Vec<Move> {
    let mut out = Vec::new();
    let n = p.n;
    let odd = n % 2 == 1;
    let conj_ranks: Vec<(u32, u32)> = p
        .transforms()
        .filter(|(rec, _)| rec.locus == Locus::ConjPair)
        .map(|(rec, count)| (rec.rank, count))
        .collect();

    for &component in &p.real_components() {
        let rank1 = p.real_rank1_count(component);
        if p.conj_rank1_count() >= 1 {
            out.push(Move::ConjToReal { component });
        }
        if rank1 >= 2 {
            out.push(Move::RealToConj { component });
            if n == 2 {
                out.push(Move::CancelRealPair { component });
            }
        }
        if rank1 >= n {
            out.push(Move::RemoveFullReal { component });
        }
        out.push(Move::AddFullReal { component });

        if odd {
            let real_ranks: Vec<(u32, u32)> = p
                .transforms()
                .filter(|(rec, _)| rec.locus == Locus::Real(component))
                .map(|(rec, count)| (rec.rank, count))
                .collect();
            push_merge_split(
                &mut out,
                &real_ranks,
                n,
                |r1, r2| Move::MergeReal { component, r1, r2 },
                |r1, r2| Move::MergeRealFull { component, r1, r2 },
                |rank, part| Move::SplitReal { component, rank, part },
            );
        }
    }

    if p.conj_rank1_count() >= n {
        out.push(Move::RemoveFullConj);
    }
    out.push(Move::AddFullConj);
    if !odd && p.base.mu >= 1 {
        if p.conj_rank1_count() >= n / 2 {
            out.push(Move::RemoveConjHalf);
        }
        out.push(Move::AddConjHalf);
    }
    push_merge_split(
        &mut out,
        &conj_ranks,
        n,
        |r1, r2| Move::MergeConj { r1, r2 },
        |r1, r2| Move::MergeConjFull { r1, r2 },
        |rank, part| Move::SplitConj { rank, part },
    );

    if let ReferenceStructure::EmptyBase { .. } = p.structure {
        if p.base.g % 2 != 0 {
            out.push(Move::FlipLabel);
        } else {
            out.push(Move::FlipLabelAdd);
            if p.count(ElemTransform::conj(n / 2)) > 0 {
                out.push(Move::FlipLabelRemove);
            }
        }
    }

    for a in 0..p.base.mu {
        for b in (a + 1)..p.base.mu {
            out.push(Move::SwapComponents { a, b });
        }
    }
    out
}

fn push_merge_split(
    out: &mut Vec<Move>,
    ranks: &[(u32, u32)],
    n: u32,
    merge: impl Fn(u32, u32) -> Move,
    merge_full: impl Fn(u32, u32) -> Move,
    split: impl Fn(u32, u32) -> Move,
) {
    for (i, &(r1, c1)) in ranks.iter().enumerate() {
        for &(r2, c2) in &ranks[i..] {
            let pair_available = if r1 == r2 { c1 >= 2 } else { c1 >= 1 && c2 >= 1 };
            if !pair_available || r1 > r2 {
                continue;
            }
            if r1 + r2 <= n - 1 {
                out.push(merge(r1, r2));
            } else if r1 + r2 == n {
                out.push(merge_full(r1, r2));
            }
        }
        if r1 >= 2 {
            for part in 1..=r1 / 2 {
                out.push(split(r1, part));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::{CurveType, Epsilon};

    fn curve(g: u32, mu: u32, eps: Epsilon) -> CurveType {
        CurveType { g, mu, eps }
    }

    fn split_ref(plus: &[u32]) -> ReferenceStructure {
        ReferenceStructure::SplitPm {
            plus_set: plus.iter().copied().collect(),
        }
    }

    fn empty_ref(label: EmptyBaseLabel) -> ReferenceStructure {
        ReferenceStructure::EmptyBase { label }
    }

    #[test]
    fn merge_rank_arithmetic() {
        assert_eq!(merge_in_fiber(1, 1, 4), Ok(MergeOutcome::Merged(2)));
        assert_eq!(merge_in_fiber(2, 2, 4), Ok(MergeOutcome::FullRank));
        assert!(matches!(
            merge_in_fiber(3, 2, 4),
            Err(Error::NotApplicable(_))
        ));
        assert!(matches!(
            merge_in_fiber(0, 1, 4),
            Err(Error::RankOutOfRange { .. })
        ));
    }

    #[test]
    fn cancel_real_pair_only_at_n2() {
        let base = curve(1, 1, Epsilon::NonDividing);
        let p = Presentation::new(base, 2, split_ref(&[0]), [(ElemTransform::real(0, 1), 2)]);
        let cancelled = cancel_real_pair(&p, 0).unwrap();
        assert_eq!(cancelled.total_records(), 0);

        // Distinct components never pair up.
        let two_comps = Presentation::new(
            curve(1, 2, Epsilon::NonDividing),
            2,
            split_ref(&[0, 1]),
            [(ElemTransform::real(0, 1), 1), (ElemTransform::real(1, 1), 1)],
        );
        assert!(cancel_real_pair(&two_comps, 0).is_err());

        // Above n = 2 a bare pair removal would shift the degree.
        let n4 = Presentation::new(
            curve(1, 1, Epsilon::NonDividing),
            4,
            split_ref(&[0]),
            [(ElemTransform::real(0, 1), 2)],
        );
        assert!(matches!(cancel_real_pair(&n4, 0), Err(Error::NotApplicable(_))));
    }

    #[test]
    fn conversion_round_trips() {
        let base = curve(2, 2, Epsilon::NonDividing);
        let p = Presentation::new(base, 4, split_ref(&[0]), [(ElemTransform::conj(1), 1)]);
        let reals = conj_to_real(&p, 0).unwrap();
        assert_eq!(reals.real_rank1_count(0), 2);
        assert_eq!(reals.degree(), p.degree());
        let back = real_to_conj(&reals, 0).unwrap();
        assert_eq!(back, p);

        // No real points over a minus component.
        assert!(matches!(
            conj_to_real(&p, 1),
            Err(Error::RealLocusOutsideRealPart { component: 1 })
        ));
    }

    #[test]
    fn remove_full_prefers_conj_then_searches_components() {
        let base = curve(0, 1, Epsilon::Dividing);
        // Three rank-1 couples at n = 3: a full twist at a conjugate pair.
        let p = Presentation::new(
            base,
            3,
            ReferenceStructure::ProductConjOdd,
            [(ElemTransform::conj(1), 3)],
        );
        let q = remove_full(&p).unwrap();
        assert_eq!(q.total_records(), 0);
        assert_eq!(q.degree(), p.degree());

        // Two rank-1 real records at n = 2.
        let r = Presentation::new(
            curve(1, 1, Epsilon::NonDividing),
            2,
            split_ref(&[0]),
            [(ElemTransform::real(0, 1), 2)],
        );
        assert_eq!(remove_full(&r).unwrap().total_records(), 0);

        // Two rank-1 couples at n = 4 total rank 2 < n: nothing fills a fiber.
        let s = Presentation::new(
            curve(1, 1, Epsilon::NonDividing),
            4,
            split_ref(&[0]),
            [(ElemTransform::conj(1), 2)],
        );
        assert!(matches!(remove_full(&s), Err(Error::NotApplicable(_))));

        // Mixed ranks summing to n: rank 2 + rank 1 at n = 3.
        let t = Presentation::new(
            curve(1, 1, Epsilon::NonDividing),
            3,
            ReferenceStructure::ProductConjOdd,
            [
                (ElemTransform::real(0, 2), 1),
                (ElemTransform::real(0, 1), 1),
            ],
        );
        assert_eq!(remove_full(&t).unwrap().total_records(), 0);
    }

    #[test]
    fn structure_flip_cases() {
        // Odd genus: toggle in place.
        let odd_g = Presentation::reference(
            curve(1, 0, Epsilon::NonDividing),
            2,
            empty_ref(EmptyBaseLabel::ConjLike),
        );
        let flipped = structure_flip(&odd_g).unwrap();
        assert_eq!(
            flipped.structure,
            empty_ref(EmptyBaseLabel::C0Like)
        );
        assert_eq!(flipped.total_records(), 0);

        // Even genus with no couple on hand: the toggle inserts one rank-n/2
        // couple, shifting the integer lift by n.
        let even_g = Presentation::reference(
            curve(2, 0, Epsilon::NonDividing),
            4,
            empty_ref(EmptyBaseLabel::ConjLike),
        );
        let flipped = structure_flip(&even_g).unwrap();
        assert_eq!(flipped.structure, empty_ref(EmptyBaseLabel::C0Like));
        assert_eq!(flipped.count(ElemTransform::conj(2)), 1);
        assert_eq!(flipped.degree_lift(), even_g.degree_lift() + 4);

        // With a couple on hand the toggle removes it instead.
        let back = structure_flip(&flipped).unwrap();
        assert_eq!(back, even_g);

        // Nonempty real base locus: no flip.
        let with_real = Presentation::reference(
            curve(1, 1, Epsilon::NonDividing),
            2,
            split_ref(&[0]),
        );
        assert!(matches!(structure_flip(&with_real), Err(Error::NotApplicable(_))));
    }

    #[test]
    fn swap_components_carries_plus_set_and_records() {
        let p = Presentation::new(
            curve(1, 2, Epsilon::NonDividing),
            2,
            split_ref(&[0]),
            [(ElemTransform::real(0, 1), 1)],
        );
        let swapped = Move::SwapComponents { a: 0, b: 1 }.apply(&p).unwrap();
        assert_eq!(swapped.structure, split_ref(&[1]));
        assert_eq!(swapped.real_rank1_count(1), 1);
        assert_eq!(swapped.real_rank1_count(0), 0);
        let back = Move::SwapComponents { a: 0, b: 1 }.apply(&swapped).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn real_merges_are_reserved_for_odd_n() {
        let p = Presentation::new(
            curve(1, 1, Epsilon::NonDividing),
            4,
            split_ref(&[0]),
            [(ElemTransform::real(0, 1), 2)],
        );
        assert!(matches!(
            Move::MergeReal { component: 0, r1: 1, r2: 1 }.apply(&p),
            Err(Error::NotApplicable(_))
        ));
        assert!(!applicable_moves(&p)
            .iter()
            .any(|m| matches!(m, Move::MergeReal { .. } | Move::SplitReal { .. })));

        let odd = Presentation::new(
            curve(1, 1, Epsilon::NonDividing),
            5,
            ReferenceStructure::ProductConjOdd,
            [(ElemTransform::real(0, 1), 2)],
        );
        let merged = Move::MergeReal { component: 0, r1: 1, r2: 1 }.apply(&odd).unwrap();
        assert_eq!(merged.count(ElemTransform::real(0, 2)), 1);
        assert_eq!(merged.degree(), odd.degree());
    }

    #[test]
    fn conj_merge_to_full_rank_drops_two_n_from_the_lift() {
        let p = Presentation::new(
            curve(1, 0, Epsilon::NonDividing),
            4,
            empty_ref(EmptyBaseLabel::ConjLike),
            [(ElemTransform::conj(2), 2)],
        );
        let q = Move::MergeConjFull { r1: 2, r2: 2 }.apply(&p).unwrap();
        assert_eq!(q.total_records(), 0);
        assert_eq!(p.degree_lift() - q.degree_lift(), 8);

        // A real merge to full rank drops n.
        let odd = Presentation::new(
            curve(1, 1, Epsilon::NonDividing),
            3,
            ReferenceStructure::ProductConjOdd,
            [
                (ElemTransform::real(0, 2), 1),
                (ElemTransform::real(0, 1), 1),
            ],
        );
        let reduced = Move::MergeRealFull { component: 0, r1: 1, r2: 2 }.apply(&odd).unwrap();
        assert_eq!(odd.degree_lift() - reduced.degree_lift(), 3);
    }

    #[test]
    fn half_twist_needs_even_n_and_a_real_base_point() {
        // Over an empty base locus the half twist must not exist: it would
        // shift the quotient invariant.
        let empty = Presentation::new(
            curve(1, 0, Epsilon::NonDividing),
            2,
            empty_ref(EmptyBaseLabel::ConjLike),
            [(ElemTransform::conj(1), 1)],
        );
        assert!(matches!(
            Move::RemoveConjHalf.apply(&empty),
            Err(Error::NotApplicable(_))
        ));

        // With a real base point one rank-1 couple is removable at n = 2.
        let with_real = Presentation::new(
            curve(1, 1, Epsilon::NonDividing),
            2,
            split_ref(&[]),
            [(ElemTransform::conj(1), 1)],
        );
        let reduced = Move::RemoveConjHalf.apply(&with_real).unwrap();
        assert_eq!(reduced.total_records(), 0);
    }
}
