//! Symbolic line bundles on the base curve and classes on a ruled surface
//! over it.
//!
//! A line bundle is carried as a divisor representative, never as a linear
//! equivalence class; tensor product is divisor addition and dual is
//! negation, both exact. On a ruled surface carrying a distinguished
//! zero-section class, every class we need is reduced to the canonical shape
//! `a * [section] + pullback(m)`: the section class of a twisted bundle
//! rewrites as the zero-section class plus the pullback of the dual twist,
//! and normal bundles of sections decompose summand by summand.

use serde::{Deserialize, Serialize};

use crate::curve::Divisor;
use crate::error::Error;

/// A line bundle on the base, recorded by an explicit divisor representative.
#[derive(
    Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct LineBundle {
    divisor: Divisor,
}

impl LineBundle {
    /// The trivial bundle, represented by the empty divisor.
    pub fn trivial() -> Self {
        LineBundle::default()
    }

    pub fn from_divisor(divisor: Divisor) -> Self {
        LineBundle { divisor }
    }

    pub fn divisor(&self) -> &Divisor {
        &self.divisor
    }

    pub fn degree(&self) -> i64 {
        self.divisor.degree()
    }

    /// Tensor product: addition of representatives.
    pub fn tensor(&self, other: &LineBundle) -> LineBundle {
        LineBundle {
            divisor: &self.divisor + &other.divisor,
        }
    }

    /// Dual bundle: negation of the representative.
    pub fn dual(&self) -> LineBundle {
        LineBundle {
            divisor: -&self.divisor,
        }
    }

    /// Whether the representative itself is the empty divisor. This is a
    /// statement about the representative, not about linear equivalence.
    pub fn is_trivial_rep(&self) -> bool {
        self.divisor.is_zero()
    }
}

/// Degree of `E tensor L` for a rank-`rank` bundle `E`:
/// `deg E + rank * deg L`.
pub fn tensor_degree(deg_e: i64, rank: u32, deg_l: i64) -> i64 {
    debug_assert!(rank >= 2, "ruled fibers need rank at least 2");
    deg_e + i64::from(rank) * deg_l
}

/// A class on a ruled surface in the canonical shape
/// `a * [zero-section] + pullback(m)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SurfaceClass {
    /// Coefficient of the zero-section class.
    pub a: i64,
    /// Line bundle pulled back from the base.
    pub m: LineBundle,
}

/// The section determined by a twist `L` of the rank-2 model, rewritten in
/// canonical shape: one zero-section class plus the pullback of `L` dual.
pub fn section_class(l: &LineBundle) -> SurfaceClass {
    SurfaceClass {
        a: 1,
        m: l.dual(),
    }
}

/// Normal bundle classes of the section determined by `L` inside the
/// projectivization of `F_1 + ... + F_r + L`: one canonical-shape class per
/// summand, with pullback part `F_j tensor L-dual`.
pub fn normal_bundle(l: &LineBundle, summands: &[LineBundle]) -> Result<Vec<SurfaceClass>, Error> {
    if summands.is_empty() {
        return Err(Error::EmptyF);
    }
    Ok(summands
        .iter()
        .map(|f| SurfaceClass {
            a: 1,
            m: f.tensor(&l.dual()),
        })
        .collect())
}

/// Condition imposed on the pullback part of a class by reality of the
/// surface class it belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RealityConstraint {
    /// The pullback divisor must equal its own conjugate. This is the
    /// condition cut out by normal bundles of real sub-ruled-surfaces.
    RequiresInvariant,
    /// The pullback divisor must equal minus its conjugate, the condition
    /// for the split rank-2 reference models to carry a real structure.
    RequiresAntiInvariant,
    /// No condition: the pullback part is trivial.
    None,
}

impl RealityConstraint {
    /// Whether a divisor satisfies the constraint.
    pub fn satisfied_by(&self, d: &Divisor) -> bool {
        match self {
            RealityConstraint::RequiresInvariant => d.is_invariant(),
            RealityConstraint::RequiresAntiInvariant => d.is_anti_invariant(),
            RealityConstraint::None => true,
        }
    }
}

/// The reality condition on `expr.m` when `expr` is the class of a normal
/// bundle of a real sub-ruled-surface: invariance of the pullback divisor,
/// vacuous when the pullback part is trivial.
pub fn reality_constraint(expr: &SurfaceClass) -> RealityConstraint {
    if expr.m.is_trivial_rep() {
        RealityConstraint::None
    } else {
        RealityConstraint::RequiresInvariant
    }
}
