//! Exact combinatorial models for real ruled manifolds: a ruled manifold over
//! a real curve is presented by the topological type of its base, a reference
//! real structure, and a finite multiset of elementary-transformation records.
//! The library computes the complete deformation invariants of such a
//! presentation, decides deformation equivalence, reduces presentations to
//! canonical normal forms, realizes prescribed invariants, and enumerates all
//! deformation classes for a given fiber dimension and base type.
//!
//! All arithmetic is exact: degrees are integers or residues, divisors are
//! integer formal sums over labeled points, and every decision procedure is
//! deterministic.
//!
//! Modules are layered bottom-up:
//!
//! * [`curve`]: topological types of real curves, labeled points, divisors.
//! * [`pic`]: symbolic line-bundle classes and the ruled-surface Picard rules.
//! * [`presentation`]: the finite presentation of a real ruled manifold.
//! * [`moves`]: class-preserving rewrite moves between presentations.
//! * [`topology`]: orientability statuses, the topological quintuple, and the
//!   quotient invariant for empty real base loci.
//! * [`classify`]: deformation-class keys, equivalence, normal forms,
//!   realization, and enumeration.

pub mod classify;
pub mod curve;
pub mod error;
pub mod moves;
pub mod pic;
pub mod presentation;
pub mod topology;

pub use classify::{
    enumerate_classes, equivalent, key_of, normal_form, realize, CanonicalPresentation, ClassKey,
};
pub use curve::{CurveType, Divisor, Epsilon, PointKind, PointLabel};
pub use error::Error;
pub use moves::{
    applicable_moves, cancel_real_pair, conj_to_real, merge_in_fiber, real_to_conj, remove_full,
    structure_flip, MergeOutcome, Move,
};
pub use pic::{LineBundle, RealityConstraint, SurfaceClass};
pub use presentation::{
    ElemTransform, EmptyBaseLabel, Locus, Presentation, ReferenceStructure,
};
pub use topology::{
    allowable, quotient_class, real_component_count, real_part_topology, realizable,
    ComponentStatus, Quintuple, QuotientClass, RealPartTopology,
};
