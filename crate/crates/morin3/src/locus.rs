//! The prescribed singular locus: a fold surface S, cusp curves C inside it,
//! and swallowtail parities, together with their Poincare duals and the
//! characteristic-field existence test.
//!
//! S and C are mod-2 cycles in the ambient triangulation, never standalone
//! complexes; the decision procedure only ever reads their homology classes
//! and per-component intersection parities. Swallowtail points enter solely
//! through their count mod 2 on each curve component: a characteristic field
//! exists exactly when each component crosses S as often as it carries
//! swallowtails, and its existence depends on nothing else.

use crate::cohomology::{CohomologyClass, CohomologyContext};
use crate::complex::SimplicialComplex3;
use crate::error::{Error, Result};
use crate::gf2::Gf2Vector;

/// The prescribed locus: a 2-cycle for S, one 1-cycle per component of C,
/// and one swallowtail parity per component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocusSpec {
    surface_cycle: Gf2Vector,
    curve_components: Vec<Gf2Vector>,
    swallowtail_parities: Vec<bool>,
}

impl LocusSpec {
    /// The empty locus (no folds, no cusps, no swallowtails).
    pub fn empty(complex: &SimplicialComplex3) -> Self {
        LocusSpec {
            surface_cycle: Gf2Vector::zeros(complex.n(2)),
            curve_components: Vec::new(),
            swallowtail_parities: Vec::new(),
        }
    }

    /// Builds and validates a locus from simplex vertex tuples.
    pub fn new(
        complex: &SimplicialComplex3,
        surface_triangles: &[[u32; 3]],
        curve_components: &[Vec<[u32; 2]>],
        swallowtail_parities: &[bool],
    ) -> Result<Self> {
        let mut tri_indices = Vec::with_capacity(surface_triangles.len());
        for t in surface_triangles {
            let i = complex.index_of(t).ok_or_else(|| {
                Error::InvalidLocus(format!("surface triangle {t:?} is not in the complex"))
            })?;
            tri_indices.push(i);
        }
        let surface_cycle = Gf2Vector::from_support(complex.n(2), &tri_indices)?;

        let mut components = Vec::with_capacity(curve_components.len());
        for (ci, comp) in curve_components.iter().enumerate() {
            let mut edge_indices = Vec::with_capacity(comp.len());
            for e in comp {
                let i = complex.index_of(e).ok_or_else(|| {
                    Error::InvalidLocus(format!(
                        "curve component {ci} edge {e:?} is not in the complex"
                    ))
                })?;
                edge_indices.push(i);
            }
            components.push(Gf2Vector::from_support(complex.n(1), &edge_indices)?);
        }
        Self::from_vectors(complex, surface_cycle, components, swallowtail_parities.to_vec())
    }

    /// Validates a locus given directly as chain vectors.
    pub fn from_vectors(
        complex: &SimplicialComplex3,
        surface_cycle: Gf2Vector,
        curve_components: Vec<Gf2Vector>,
        swallowtail_parities: Vec<bool>,
    ) -> Result<Self> {
        if surface_cycle.len() != complex.n(2) {
            return Err(Error::DimensionMismatch {
                expected: complex.n(2),
                got: surface_cycle.len(),
            });
        }
        if !complex
            .boundary_matrix(2)
            .mul_vec(&surface_cycle)?
            .is_zero()
        {
            return Err(Error::NotACycle);
        }
        if curve_components.len() != swallowtail_parities.len() {
            return Err(Error::InvalidLocus(format!(
                "{} curve components but {} swallowtail parities",
                curve_components.len(),
                swallowtail_parities.len()
            )));
        }
        let boundary1 = complex.boundary_matrix(1);
        let mut seen_edges: Vec<usize> = Vec::new();
        for (ci, comp) in curve_components.iter().enumerate() {
            if comp.len() != complex.n(1) {
                return Err(Error::DimensionMismatch {
                    expected: complex.n(1),
                    got: comp.len(),
                });
            }
            if !boundary1.mul_vec(comp)?.is_zero() {
                return Err(Error::NotACycle);
            }
            for &e in comp.support() {
                if seen_edges.contains(&e) {
                    return Err(Error::InvalidLocus(format!(
                        "curve components overlap on edge index {e}"
                    )));
                }
                // C must lie inside the closure of S: every curve edge is a
                // face of some surface triangle.
                let on_surface = complex
                    .cofaces_of(1, e)
                    .iter()
                    .any(|&t| surface_cycle.get(t));
                if !on_surface {
                    return Err(Error::InvalidLocus(format!(
                        "curve component {ci} edge index {e} does not lie on the surface"
                    )));
                }
            }
            seen_edges.extend_from_slice(comp.support());
        }
        Ok(LocusSpec {
            surface_cycle,
            curve_components,
            swallowtail_parities,
        })
    }

    pub fn surface_cycle(&self) -> &Gf2Vector {
        &self.surface_cycle
    }

    pub fn curve_components(&self) -> &[Gf2Vector] {
        &self.curve_components
    }

    pub fn swallowtail_parities(&self) -> &[bool] {
        &self.swallowtail_parities
    }
}

/// Poincare dual of the fold surface: the unique class alpha in H^1 with
/// `<alpha cup beta, [M]> = <beta, S>` for every beta in the H^2 basis.
pub fn pd_of_surface(ctx: &CohomologyContext, locus: &LocusSpec) -> Result<CohomologyClass> {
    pd_of_2cycle(ctx, locus.surface_cycle())
}

/// Poincare dual of an arbitrary 2-cycle.
pub fn pd_of_2cycle(ctx: &CohomologyContext, cycle: &Gf2Vector) -> Result<CohomologyClass> {
    if !ctx
        .complex()
        .boundary_matrix(2)
        .mul_vec(cycle)?
        .is_zero()
    {
        return Err(Error::NotACycle);
    }
    let h2 = ctx.basis_classes(2);
    let mut rhs = Vec::with_capacity(h2.len());
    for beta in &h2 {
        rhs.push(ctx.evaluate(beta, cycle)?);
    }
    let alpha = ctx.solve_against_pairing(1, &rhs)?;
    debug_assert!({
        let mut ok = true;
        for (i, beta) in h2.iter().enumerate() {
            ok &= ctx.pairing(&alpha, beta)? == rhs[i];
        }
        ok
    });
    Ok(alpha)
}

/// Poincare dual of a cusp-curve component: the unique class gamma in H^2
/// with `<gamma cup beta, [M]> = <beta, C'>` for every beta in the H^1 basis.
pub fn pd_of_curve(ctx: &CohomologyContext, component: &Gf2Vector) -> Result<CohomologyClass> {
    if !ctx
        .complex()
        .boundary_matrix(1)
        .mul_vec(component)?
        .is_zero()
    {
        return Err(Error::NotACycle);
    }
    let h1 = ctx.basis_classes(1);
    let mut rhs = Vec::with_capacity(h1.len());
    for beta in &h1 {
        rhs.push(ctx.evaluate(beta, component)?);
    }
    ctx.solve_against_pairing(2, &rhs)
}

/// Homological intersection number of a curve component with the fold
/// surface, mod 2: the evaluation of the dual class of S on the 1-cycle.
/// Independent of the representative because the input is a cycle.
pub fn intersection_parity(
    ctx: &CohomologyContext,
    component: &Gf2Vector,
    s_class: &CohomologyClass,
) -> Result<bool> {
    if s_class.degree() != 1 {
        return Err(Error::DegreeMismatch {
            left: s_class.degree(),
            right: 1,
        });
    }
    if !ctx
        .complex()
        .boundary_matrix(1)
        .mul_vec(component)?
        .is_zero()
    {
        return Err(Error::NotACycle);
    }
    ctx.evaluate(s_class, component)
}

/// Per-component check that the intersection parity with S equals the
/// declared swallowtail parity. Returns one `(component index, holds)` pair
/// per component; the conjunction is the third condition of the decision.
pub fn condition3(
    ctx: &CohomologyContext,
    locus: &LocusSpec,
    s_class: &CohomologyClass,
) -> Result<Vec<(usize, bool)>> {
    let mut out = Vec::with_capacity(locus.curve_components().len());
    for (i, comp) in locus.curve_components().iter().enumerate() {
        let parity = intersection_parity(ctx, comp, s_class)?;
        out.push((i, parity == locus.swallowtail_parities()[i]));
    }
    Ok(out)
}

/// One event met while traversing a curve component: a swallowtail point
/// (the normal field must flip) or a transverse crossing of the pushed-off
/// curve with the fold surface (the side changes).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CrossingEvent {
    Flip,
    Cross,
}

/// Cyclic word of events around one curve component.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CrossingWord {
    pub events: Vec<CrossingEvent>,
}

impl CrossingWord {
    pub fn new(events: Vec<CrossingEvent>) -> Self {
        CrossingWord { events }
    }
}

/// Existence of a unit normal field along the component flipping at every
/// event: the parity criterion.
pub fn exists_by_parity(word: &CrossingWord) -> bool {
    word.events.len().is_multiple_of(2)
}

/// The same decision by literal propagation: walk the cyclic word carrying a
/// sign, flip it at every event, and require that it closes up.
pub fn exists_by_propagation(word: &CrossingWord) -> bool {
    let mut sign = 1i8;
    for _event in &word.events {
        sign = -sign;
    }
    sign == 1
}

/// Whether the triple (S, C', P) admits a characteristic field along this
/// component, decided by both routes.
pub fn characteristic_field_exists(word: &CrossingWord) -> bool {
    let parity = exists_by_parity(word);
    debug_assert_eq!(parity, exists_by_propagation(word));
    parity
}
