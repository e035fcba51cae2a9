//! Deciding when a map of closed 3-manifolds is homotopic to a generic map
//! with a prescribed singular locus.
//!
//! A generic smooth map between 3-manifolds has three kinds of singular
//! points: fold surfaces, cusp curves inside them, and isolated swallowtail
//! points on the curves. Given triangulations of the source M and target N,
//! a simplicial map f, and a prescribed locus (a 2-cycle S, 1-cycle
//! components C' with swallowtail parities), this crate decides whether f is
//! homotopic to a generic map realizing exactly that locus. The decision is
//! a finite computation in mod-2 simplicial cohomology:
//!
//! 1. `w_1(M) = [S] + f*w_1(N)`,
//! 2. `w_2(M) = [C] + f*w_1(N) cup [S] + f*w_2(N)`,
//! 3. per curve component, `[C'] . [S]` equals the swallowtail count mod 2,
//!
//! where `[S]`, `[C]` are Poincare duals and the Stiefel-Whitney classes come
//! from the Wu construction. Conditions (1)-(2) are equivalent to an
//! isomorphism of rank-3 bundles, which over a 3-complex is detected by
//! `(w_1, w_2)` alone; the crate exposes both routes and tests their
//! agreement.
//!
//! Everything is exact: chains and cochains live over GF(2), the local
//! normal-form checks in [`morin`] run over arbitrary-precision rationals,
//! and there is not a single floating-point tolerance in the crate.
//!
//! See the `examples/` directory for a tour: each example exercises one
//! capability (Betti numbers, cup products, duality, characteristic classes,
//! twisted bundles, crossing words, Morin strata, full verdicts).

pub mod builtins;
pub mod classes;
pub mod cohomology;
pub mod complex;
pub mod error;
pub mod gf2;
pub mod locus;
pub mod morin;
pub mod verdict;

pub use classes::{bundle_iso, tangent_classes, twisted_classes, wu_v1, BundleClasses};
pub use cohomology::{CohomologyClass, CohomologyContext};
pub use complex::{SimplicialComplex3, SimplicialMap};
pub use error::{Error, Result};
pub use gf2::{Gf2Matrix, Gf2Vector};
pub use locus::{
    characteristic_field_exists, condition3, intersection_parity, pd_of_curve, pd_of_surface,
    CrossingEvent, CrossingWord, LocusSpec,
};
pub use morin::{
    jacobian, kernel_dim_at, second_order_symbol, third_order_symbol, PolyMap3, RationalPoint3,
};
pub use verdict::{
    check_theorem1_bundle, check_theorem2, pullback, InstanceDoc, ProblemInstance,
    RealizabilityVerdict,
};
