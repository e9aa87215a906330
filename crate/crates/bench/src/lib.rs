//! Deterministic input corpus for the benchmarks: no randomness, so runs
//! are comparable across machines and revisions.

use ruledforms::{
    CurveType, ElemTransform, EmptyBaseLabel, Epsilon, Presentation, ReferenceStructure,
};

/// Every valid base type with genus at most `max_g`.
pub fn curves(max_g: u32) -> Vec<CurveType> {
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

fn structure_for(base: &CurveType, n: u32) -> ReferenceStructure {
    if n % 2 == 1 {
        ReferenceStructure::ProductConjOdd
    } else if base.mu > 0 {
        ReferenceStructure::SplitPm {
            plus_set: (0..base.mu).collect(),
        }
    } else {
        ReferenceStructure::EmptyBase {
            label: EmptyBaseLabel::ConjLike,
        }
    }
}

/// A systematic spread of valid presentations: every base of genus at most
/// 3, fiber ranks 2 through 6, with record loads from the bare reference up
/// to mixed multisets touching every admissible kind.
pub fn corpus() -> Vec<Presentation> {
    let mut out = Vec::new();
    for n in 2..=6u32 {
        for base in curves(3) {
            let structure = structure_for(&base, n);
            let reference = Presentation::reference(base, n, structure.clone());
            out.push(reference);

            // Conjugate couples only, light and heavy.
            for couples in [1u32, 4, 9] {
                out.push(Presentation::new(
                    base,
                    n,
                    structure.clone(),
                    [(ElemTransform::conj(1), couples)],
                ));
            }
            if n > 2 {
                out.push(Presentation::new(
                    base,
                    n,
                    structure.clone(),
                    [(ElemTransform::conj(n - 1), 3), (ElemTransform::conj(1), 2)],
                ));
            }

            // Real records on every component, mixed with couples. For even
            // n real records keep rank 1, the domain of the invariants.
            if base.mu > 0 {
                let mut records = vec![(ElemTransform::conj(1), 2)];
                for c in 0..base.mu {
                    records.push((ElemTransform::real(c, 1), 1 + c % 2));
                }
                if n % 2 == 1 && n > 2 {
                    records.push((ElemTransform::real(0, n - 1), 2));
                }
                out.push(Presentation::new(base, n, structure.clone(), records));
            }
        }
    }
    out
}
