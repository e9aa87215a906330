//! Shared fixtures for the integration suites: inventories of small base
//! types, bounded presentation universes, a move-orbit map, and a seeded
//! generator of random presentations.
//!
//! Randomized suites read their seed from `RULEDFORMS_SEED` (a decimal
//! `u64`) and fall back to a fixed default, so failures replay exactly.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ruledforms::moves::applicable_moves;
use ruledforms::{
    CurveType, ElemTransform, EmptyBaseLabel, Epsilon, Presentation, ReferenceStructure,
};

const DEFAULT_SEED: u64 = 0x72756c6564666f72;

/// Seeded RNG shared by the randomized suites.
pub fn rng() -> ChaCha8Rng {
    let seed = std::env::var("RULEDFORMS_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_SEED);
    ChaCha8Rng::seed_from_u64(seed)
}

/// Every valid base type with genus at most `max_g`.
pub fn small_curves(max_g: u32) -> Vec<CurveType> {
    let mut out = Vec::new();
    for g in 0..=max_g {
        for mu in 0..=(g + 1) {
            for eps in [Epsilon::Dividing, Epsilon::NonDividing] {
                let curve = CurveType { g, mu, eps };
                if curve.is_valid() {
                    out.push(curve);
                }
            }
        }
    }
    out
}

/// Every reference structure valid for the given base and fiber rank.
pub fn structures_for(base: &CurveType, n: u32) -> Vec<ReferenceStructure> {
    if n % 2 == 1 {
        return vec![ReferenceStructure::ProductConjOdd];
    }
    if base.mu == 0 {
        return vec![
            ReferenceStructure::EmptyBase {
                label: EmptyBaseLabel::ConjLike,
            },
            ReferenceStructure::EmptyBase {
                label: EmptyBaseLabel::C0Like,
            },
        ];
    }
    (0u32..(1 << base.mu))
        .map(|mask| ReferenceStructure::SplitPm {
            plus_set: (0..base.mu).filter(|c| mask & (1 << c) != 0).collect(),
        })
        .collect()
}

/// Record kinds admissible on `reference` that stay inside the domain where
/// every invariant is defined: for even `n` real records keep rank 1.
pub fn record_kinds(reference: &Presentation) -> Vec<ElemTransform> {
    let n = reference.n;
    let real_ranks: Vec<u32> = if n % 2 == 1 { (1..n).collect() } else { vec![1] };
    let mut kinds = Vec::new();
    for c in reference.real_components() {
        for &rank in &real_ranks {
            kinds.push(ElemTransform::real(c, rank));
        }
    }
    for rank in 1..n {
        kinds.push(ElemTransform::conj(rank));
    }
    kinds
}

fn fill_multisets(
    kinds: &[ElemTransform],
    budget: u32,
    acc: &mut Vec<(ElemTransform, u32)>,
    out: &mut Vec<Vec<(ElemTransform, u32)>>,
) {
    match kinds.split_first() {
        None => out.push(acc.clone()),
        Some((&kind, rest)) => {
            for take in 0..=budget {
                if take > 0 {
                    acc.push((kind, take));
                }
                fill_multisets(rest, budget - take, acc, out);
                if take > 0 {
                    acc.pop();
                }
            }
        }
    }
}

/// Every valid presentation over `base` with fiber rank `n` and at most
/// `bound` records (counting multiplicity), across all reference structures.
pub fn universe(base: CurveType, n: u32, bound: u32) -> Vec<Presentation> {
    let mut out = Vec::new();
    for structure in structures_for(&base, n) {
        let reference = Presentation::reference(base, n, structure);
        let kinds = record_kinds(&reference);
        let mut multisets = Vec::new();
        fill_multisets(&kinds, bound, &mut Vec::new(), &mut multisets);
        for records in multisets {
            let p = Presentation::new(base, n, reference.structure.clone(), records);
            assert!(p.validate().is_ok(), "universe member must validate: {p:?}");
            out.push(p);
        }
    }
    out
}

/// Connected components of the move graph on `universe`, where an edge is an
/// applicable move whose result stays within `bound` records. Returns the
/// component id of each presentation and the number of components.
///
/// Move results within the bound must themselves lie in the universe; a
/// result that escapes it would mean a move invented a record kind, so that
/// is asserted rather than skipped.
pub fn orbit_map(universe: &[Presentation], bound: u32) -> (HashMap<Presentation, usize>, usize) {
    let index: HashMap<&Presentation, usize> = universe
        .iter()
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect();
    let mut component = vec![usize::MAX; universe.len()];
    let mut components = 0;
    for start in 0..universe.len() {
        if component[start] != usize::MAX {
            continue;
        }
        component[start] = components;
        let mut queue = vec![start];
        while let Some(i) = queue.pop() {
            let p = &universe[i];
            for mv in applicable_moves(p) {
                let q = mv
                    .apply(p)
                    .unwrap_or_else(|e| panic!("{mv:?} listed on {p:?} but failed: {e}"));
                if q.total_records() > bound {
                    continue;
                }
                let j = *index
                    .get(&q)
                    .unwrap_or_else(|| panic!("{mv:?} left the universe: {q:?}"));
                if component[j] == usize::MAX {
                    component[j] = components;
                    queue.push(j);
                }
            }
        }
        components += 1;
    }
    let map = universe
        .iter()
        .cloned()
        .zip(component)
        .collect();
    (map, components)
}

/// A uniformly scattered valid presentation: base of genus at most 3, fiber
/// rank 2 through 6, any admissible structure, up to six records drawn from
/// [`record_kinds`].
pub fn random_presentation(rng: &mut ChaCha8Rng) -> Presentation {
    let curves = small_curves(3);
    let base = curves[rng.gen_range(0..curves.len())];
    let n = rng.gen_range(2..=6u32);
    let structure = if n % 2 == 1 {
        ReferenceStructure::ProductConjOdd
    } else if base.mu > 0 {
        let mut plus_set = BTreeSet::new();
        for c in 0..base.mu {
            if rng.gen_bool(0.6) {
                plus_set.insert(c);
            }
        }
        ReferenceStructure::SplitPm { plus_set }
    } else {
        ReferenceStructure::EmptyBase {
            label: if rng.gen_bool(0.5) {
                EmptyBaseLabel::ConjLike
            } else {
                EmptyBaseLabel::C0Like
            },
        }
    };
    let reference = Presentation::reference(base, n, structure);
    let kinds = record_kinds(&reference);
    let mut records = Vec::new();
    if !kinds.is_empty() {
        for _ in 0..rng.gen_range(0..=6u32) {
            records.push((kinds[rng.gen_range(0..kinds.len())], 1));
        }
    }
    Presentation::new(base, n, reference.structure.clone(), records)
}
