//! Stiefel-Whitney classes via Wu classes, the rank-3 bundle isomorphism
//! decision, and the twisted-tangent-bundle class formulas.
//!
//! For a closed 3-manifold the Wu class v_1 is the unique degree-1 class
//! with `<v_1 cup x, [M]> = <Sq^1 x, [M]>` for every x in H^2; Wu's theorem
//! gives w_1 = v_1. The degree-2 Wu class vanishes in dimension 3 (Sq^2
//! kills classes of degree < 2, and the duality pairing against H^1 then
//! forces v_2 = 0), so the Wu formula w = Sq(v) collapses to
//!
//! ```text
//! w_1 = v_1,    w_2 = Sq^1(v_1) + v_2 = v_1 cup v_1.
//! ```
//!
//! A rank-3 bundle over a 3-complex is determined up to isomorphism by
//! (w_1, w_2), so bundles are represented here by that pair alone and never
//! materialized as transition data. Regluing the tangent bundle along a
//! fold surface S with cusp curve C changes the pair by
//!
//! ```text
//! w_1 += [S],    w_2 += w_1 cup [S] + [S]^2 + [C],
//! ```
//!
//! independent of the swallowtail points and of the characteristic field
//! direction.

use crate::cohomology::{CohomologyClass, CohomologyContext};
use crate::error::{Error, Result};

/// The complete invariant of a rank-3 bundle over a 3-complex.
#[derive(Clone, Debug)]
pub struct BundleClasses {
    pub w1: CohomologyClass,
    pub w2: CohomologyClass,
}

impl BundleClasses {
    pub fn new(w1: CohomologyClass, w2: CohomologyClass) -> Result<Self> {
        if w1.degree() != 1 || w2.degree() != 2 {
            return Err(Error::DegreeMismatch {
                left: w1.degree(),
                right: w2.degree(),
            });
        }
        Ok(BundleClasses { w1, w2 })
    }
}

/// The Wu class v_1, found by solving the duality system over the H^1 basis.
///
/// Fails with `NoSolution` when the system is inconsistent or
/// underdetermined, which signals that the complex is not a closed manifold
/// mod 2 (the pseudomanifold check cannot see this).
pub fn wu_v1(ctx: &CohomologyContext) -> Result<CohomologyClass> {
    if !ctx.is_closed() {
        return Err(Error::NotClosed);
    }
    let h2 = ctx.basis_classes(2);
    let mut rhs = Vec::with_capacity(h2.len());
    for x in &h2 {
        let sq = ctx.sq1(x)?;
        rhs.push(ctx.evaluate_fundamental(&sq)?);
    }
    ctx.solve_against_pairing(1, &rhs)
}

/// Tangent bundle classes of a closed 3-manifold: (v_1, v_1 cup v_1).
pub fn tangent_classes(ctx: &CohomologyContext) -> Result<BundleClasses> {
    let v1 = wu_v1(ctx)?;
    let w2 = ctx.cup(&v1, &v1)?;
    Ok(BundleClasses { w1: v1, w2 })
}

/// Rank-3 bundle isomorphism over a common base: equality of (w_1, w_2) as
/// cohomology classes.
pub fn bundle_iso(ctx: &CohomologyContext, e1: &BundleClasses, e2: &BundleClasses) -> Result<bool> {
    Ok(ctx.cohomologous(&e1.w1, &e2.w1)? && ctx.cohomologous(&e1.w2, &e2.w2)?)
}

/// Classes of the tangent bundle reglued along a fold surface with dual
/// class `s_class` and cusp curve with dual class `c_class`:
///
/// ```text
/// (w_1 + [S],  w_2 + w_1 cup [S] + [S]^2 + [C])
/// ```
pub fn twisted_classes(
    ctx: &CohomologyContext,
    tangent: &BundleClasses,
    s_class: &CohomologyClass,
    c_class: &CohomologyClass,
) -> Result<BundleClasses> {
    if s_class.degree() != 1 {
        return Err(Error::DegreeMismatch {
            left: s_class.degree(),
            right: 1,
        });
    }
    if c_class.degree() != 2 {
        return Err(Error::DegreeMismatch {
            left: c_class.degree(),
            right: 2,
        });
    }
    let w1 = ctx.add(&tangent.w1, s_class)?;
    let w1_s = ctx.cup(&tangent.w1, s_class)?;
    let s_s = ctx.cup(s_class, s_class)?;
    let mut w2 = ctx.add(&tangent.w2, &w1_s)?;
    w2 = ctx.add(&w2, &s_s)?;
    w2 = ctx.add(&w2, c_class)?;
    Ok(BundleClasses { w1, w2 })
}
