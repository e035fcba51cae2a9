//! The realizability decision: pullbacks along simplicial maps, the three
//! conditions for a map to be homotopic to a generic map with the prescribed
//! fold/cusp/swallowtail locus, the equivalent bundle-isomorphism route, and
//! the JSON problem format.
//!
//! A problem instance consists of closed source and target complexes M and
//! N, a simplicial map f between them given on vertices, and a locus (S, C,
//! parities) on M. The verdict holds three bits:
//!
//! 1. `w_1(M) = [S] + f*w_1(N)` in H^1(M),
//! 2. `w_2(M) = [C] + f*w_1(N) cup [S] + f*w_2(N)` in H^2(M),
//! 3. for every component C' of C, the intersection parity [C'].[S] equals
//!    the declared swallowtail parity.
//!
//! Conditions (1) and (2) together say exactly that the tangent bundle
//! reglued along the locus is isomorphic to the pullback of the tangent
//! bundle of N, which `check_theorem1_bundle` decides directly through
//! (w_1, w_2); the two routes agree on every instance.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::classes::{self, BundleClasses};
use crate::cohomology::{CohomologyClass, CohomologyContext};
use crate::complex::{SimplicialComplex3, SimplicialMap};
use crate::error::{Error, Result};
use crate::gf2::Gf2Vector;
use crate::locus::{self, LocusSpec};

/// Pullback of a degree-k cochain along a simplicial map: the value on a
/// source simplex is the value on its image when the image is nondegenerate,
/// and zero otherwise.
pub fn pullback_cochain(
    map: &SimplicialMap<'_>,
    u: &Gf2Vector,
    degree: usize,
) -> Result<Gf2Vector> {
    let source = map.source();
    let target = map.target();
    if u.len() != target.n(degree) {
        return Err(Error::DimensionMismatch {
            expected: target.n(degree),
            got: u.len(),
        });
    }
    let mut support = Vec::new();
    for i in 0..source.n(degree) {
        let sigma = source.simplex(degree, i);
        let image = map.image_vertices(sigma);
        if image.len() != degree + 1 {
            continue; // degenerate image
        }
        let Some(j) = target.index_of(&image) else {
            return Err(Error::InvalidMap(sigma.to_vec()));
        };
        if u.get(j) {
            support.push(i);
        }
    }
    Gf2Vector::from_support(source.n(degree), &support)
}

/// Pullback at class level: takes a cocycle on the target context to a
/// cocycle on the source context.
pub fn pullback(
    source_ctx: &CohomologyContext,
    target_ctx: &CohomologyContext,
    map: &SimplicialMap<'_>,
    u: &CohomologyClass,
) -> Result<CohomologyClass> {
    let rep = pullback_cochain(map, target_ctx.rep_of(u)?, u.degree())?;
    source_ctx.class(u.degree(), rep)
}

/// One condition of the verdict: the bit plus the two sides' representatives
/// as sorted simplex-index lists.
#[derive(Clone, Debug, Serialize)]
pub struct ConditionReport {
    pub holds: bool,
    pub lhs: Vec<usize>,
    pub rhs: Vec<usize>,
}

/// One curve component of condition (3).
#[derive(Clone, Debug, Serialize)]
pub struct ComponentReport {
    pub component: usize,
    pub intersection_parity: u8,
    pub declared_parity: u8,
    pub holds: bool,
}

/// Outcome of the full decision: per-condition truth values, the witnessing
/// class representatives, and a human-readable trace.
#[derive(Clone, Debug, Serialize)]
pub struct RealizabilityVerdict {
    pub realizable: bool,
    pub cond1: ConditionReport,
    pub cond2: ConditionReport,
    pub cond3: Vec<ComponentReport>,
    pub classes: BTreeMap<String, Vec<usize>>,
    pub diagnostics: Vec<String>,
}

/// A full problem: closed complexes M and N with their cohomology contexts,
/// a vertex map, and a locus on M.
#[derive(Debug)]
pub struct ProblemInstance {
    m_ctx: CohomologyContext,
    n_ctx: CohomologyContext,
    vertex_map: BTreeMap<u32, u32>,
    locus: LocusSpec,
}

impl ProblemInstance {
    /// Validates and assembles an instance: both complexes must be closed
    /// pseudomanifolds, the vertex map must be simplicial, and the locus must
    /// satisfy its structural invariants (checked by `LocusSpec`).
    pub fn new(
        m: SimplicialComplex3,
        n: SimplicialComplex3,
        vertex_map: BTreeMap<u32, u32>,
        locus: LocusSpec,
    ) -> Result<Self> {
        if !m.is_closed_pseudomanifold() {
            return Err(Error::NotClosed.at_stage("validating source complex M"));
        }
        if !n.is_closed_pseudomanifold() {
            return Err(Error::NotClosed.at_stage("validating target complex N"));
        }
        {
            let map = SimplicialMap::new(&m, &n, vertex_map.clone())
                .map_err(|e| e.at_stage("validating vertex map"))?;
            if let Some(bad) = map.first_invalid_simplex() {
                return Err(Error::InvalidMap(bad).at_stage("validating vertex map"));
            }
        }
        let m_ctx = CohomologyContext::new(m);
        let n_ctx = CohomologyContext::new(n);
        Ok(ProblemInstance {
            m_ctx,
            n_ctx,
            vertex_map,
            locus,
        })
    }

    pub fn source_ctx(&self) -> &CohomologyContext {
        &self.m_ctx
    }

    pub fn target_ctx(&self) -> &CohomologyContext {
        &self.n_ctx
    }

    pub fn locus(&self) -> &LocusSpec {
        &self.locus
    }

    pub fn map(&self) -> SimplicialMap<'_> {
        SimplicialMap::new(
            self.m_ctx.complex(),
            self.n_ctx.complex(),
            self.vertex_map.clone(),
        )
        .expect("map was validated at construction")
    }
}

/// The class-level core of conditions (1) and (2), shared by the decision
/// and by the bundle route so property tests can drive both with arbitrary
/// classes.
pub fn theorem2_conditions(
    ctx: &CohomologyContext,
    tangent_m: &BundleClasses,
    s_class: &CohomologyClass,
    c_class: &CohomologyClass,
    pulled_w1: &CohomologyClass,
    pulled_w2: &CohomologyClass,
) -> Result<(bool, bool)> {
    // (1)  w_1(M) = [S] + f*w_1(N)
    let rhs1 = ctx.add(s_class, pulled_w1)?;
    let cond1 = ctx.cohomologous(&tangent_m.w1, &rhs1)?;
    // (2)  w_2(M) = [C] + f*w_1(N) cup [S] + f*w_2(N)
    let cross = ctx.cup(pulled_w1, s_class)?;
    let mut rhs2 = ctx.add(c_class, &cross)?;
    rhs2 = ctx.add(&rhs2, pulled_w2)?;
    let cond2 = ctx.cohomologous(&tangent_m.w2, &rhs2)?;
    Ok((cond1, cond2))
}

/// Decides whether the twisted tangent bundle of M is isomorphic to the
/// pullback of the tangent bundle of N, through (w_1, w_2) alone.
pub fn check_theorem1_bundle(
    m_ctx: &CohomologyContext,
    twisted_m: &BundleClasses,
    map: &SimplicialMap<'_>,
    n_ctx: &CohomologyContext,
    tangent_n: &BundleClasses,
) -> Result<bool> {
    let pulled = BundleClasses {
        w1: pullback(m_ctx, n_ctx, map, &tangent_n.w1)?,
        w2: pullback(m_ctx, n_ctx, map, &tangent_n.w2)?,
    };
    classes::bundle_iso(m_ctx, twisted_m, &pulled)
}

fn stage<T>(r: Result<T>, name: &'static str) -> Result<T> {
    r.map_err(|e| e.at_stage(name))
}

/// Runs the full three-condition decision on an instance.
pub fn check_theorem2(inst: &ProblemInstance) -> Result<RealizabilityVerdict> {
    let ctx = inst.source_ctx();
    let nctx = inst.target_ctx();
    let map = inst.map();

    let tangent_m = stage(classes::tangent_classes(ctx), "tangent classes of M")?;
    let tangent_n = stage(classes::tangent_classes(nctx), "tangent classes of N")?;
    let pulled_w1 = stage(
        pullback(ctx, nctx, &map, &tangent_n.w1),
        "pullback of w1(N)",
    )?;
    let pulled_w2 = stage(
        pullback(ctx, nctx, &map, &tangent_n.w2),
        "pullback of w2(N)",
    )?;
    let s_class = stage(
        locus::pd_of_surface(ctx, inst.locus()),
        "Poincare dual of S",
    )?;
    let mut c_class = ctx.zero_class(2);
    for comp in inst.locus().curve_components() {
        let dual = stage(locus::pd_of_curve(ctx, comp), "Poincare dual of C")?;
        c_class = ctx.add(&c_class, &dual)?;
    }

    let (cond1, cond2) = theorem2_conditions(
        ctx, &tangent_m, &s_class, &c_class, &pulled_w1, &pulled_w2,
    )?;
    let comp_report = stage(
        locus::condition3(ctx, inst.locus(), &s_class),
        "component parities",
    )?;

    let rhs1 = ctx.add(&s_class, &pulled_w1)?;
    let cross = ctx.cup(&pulled_w1, &s_class)?;
    let rhs2 = ctx.add(&ctx.add(&c_class, &cross)?, &pulled_w2)?;

    let cond3: Vec<ComponentReport> = comp_report
        .iter()
        .map(|&(i, holds)| {
            let parity = locus::intersection_parity(
                ctx,
                &inst.locus().curve_components()[i],
                &s_class,
            )
            .expect("validated components are cycles");
            ComponentReport {
                component: i,
                intersection_parity: parity as u8,
                declared_parity: inst.locus().swallowtail_parities()[i] as u8,
                holds,
            }
        })
        .collect();

    let realizable = cond1 && cond2 && cond3.iter().all(|c| c.holds);

    let mut class_table = BTreeMap::new();
    let mut diagnostics = Vec::new();
    let mut record = |name: &str, class: &CohomologyClass| {
        class_table.insert(name.to_string(), class.support().to_vec());
        diagnostics.push(format!(
            "{name}: degree {} cocycle, support {:?}",
            class.degree(),
            class.support()
        ));
    };
    record("w1_M", &tangent_m.w1);
    record("w2_M", &tangent_m.w2);
    record("w1_N", &tangent_n.w1);
    record("w2_N", &tangent_n.w2);
    record("f_w1_N", &pulled_w1);
    record("f_w2_N", &pulled_w2);
    record("S_dual", &s_class);
    record("C_dual", &c_class);
    diagnostics.push(format!(
        "condition 1 ({}): w1(M) vs [S] + f*w1(N)",
        if cond1 { "holds" } else { "fails" }
    ));
    diagnostics.push(format!(
        "condition 2 ({}): w2(M) vs [C] + f*w1(N).[S] + f*w2(N)",
        if cond2 { "holds" } else { "fails" }
    ));
    for c in &cond3 {
        diagnostics.push(format!(
            "condition 3, component {}: intersection parity {} vs declared {} ({})",
            c.component,
            c.intersection_parity,
            c.declared_parity,
            if c.holds { "holds" } else { "fails" }
        ));
    }

    Ok(RealizabilityVerdict {
        realizable,
        cond1: ConditionReport {
            holds: cond1,
            lhs: tangent_m.w1.support().to_vec(),
            rhs: rhs1.support().to_vec(),
        },
        cond2: ConditionReport {
            holds: cond2,
            lhs: tangent_m.w2.support().to_vec(),
            rhs: rhs2.support().to_vec(),
        },
        cond3,
        classes: class_table,
        diagnostics,
    })
}

/// Bundle-route verdict for a whole instance: twist the tangent classes of M
/// by the locus duals and compare with the pulled-back tangent classes of N.
pub fn check_theorem1_for_instance(inst: &ProblemInstance) -> Result<bool> {
    let ctx = inst.source_ctx();
    let nctx = inst.target_ctx();
    let map = inst.map();
    let tangent_m = classes::tangent_classes(ctx)?;
    let tangent_n = classes::tangent_classes(nctx)?;
    let s_class = locus::pd_of_surface(ctx, inst.locus())?;
    let mut c_class = ctx.zero_class(2);
    for comp in inst.locus().curve_components() {
        let dual = locus::pd_of_curve(ctx, comp)?;
        c_class = ctx.add(&c_class, &dual)?;
    }
    let twisted = classes::twisted_classes(ctx, &tangent_m, &s_class, &c_class)?;
    check_theorem1_bundle(ctx, &twisted, &map, nctx, &tangent_n)
}

// ---------------------------------------------------------------------------
// JSON problem format
// ---------------------------------------------------------------------------

/// On-disk problem document. Chains are given by simplex vertex tuples, not
/// internal indices, so files stay portable across tools.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct InstanceDoc {
    pub m_facets: Vec<Vec<u32>>,
    #[serde(default)]
    pub n_facets: Option<Vec<Vec<u32>>>,
    /// Pairs [source vertex, target vertex]; must cover every source vertex
    /// exactly once.
    #[serde(default)]
    pub vertex_map: Option<Vec<[u32; 2]>>,
    #[serde(default)]
    pub surface_triangles: Vec<Vec<u32>>,
    #[serde(default)]
    pub curve_components: Vec<Vec<Vec<u32>>>,
    #[serde(default)]
    pub swallowtail_parities: Vec<u8>,
}

impl InstanceDoc {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidInput(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("document serializes")
    }

    /// The identity-map document for a single complex with empty locus.
    pub fn for_complex(facets: &[[u32; 4]]) -> Self {
        let complex = SimplicialComplex3::build(facets).expect("facets are valid");
        InstanceDoc {
            m_facets: facets.iter().map(|f| f.to_vec()).collect(),
            n_facets: Some(facets.iter().map(|f| f.to_vec()).collect()),
            vertex_map: Some(complex.vertices().iter().map(|&v| [v, v]).collect()),
            surface_triangles: Vec::new(),
            curve_components: Vec::new(),
            swallowtail_parities: Vec::new(),
        }
    }

    fn parse_facets(raw: &[Vec<u32>], which: &str) -> Result<Vec<[u32; 4]>> {
        raw.iter()
            .map(|f| {
                <[u32; 4]>::try_from(f.as_slice()).map_err(|_| {
                    Error::InvalidInput(format!("{which} facet {f:?} must have 4 vertices"))
                })
            })
            .collect()
    }

    /// Builds just the source complex (for `homology` and `classes`).
    pub fn build_m(&self) -> Result<SimplicialComplex3> {
        SimplicialComplex3::build(&Self::parse_facets(&self.m_facets, "m_facets")?)
    }

    /// Builds and validates the full instance (for `check`).
    pub fn build_instance(&self) -> Result<ProblemInstance> {
        let m = self.build_m()?;
        let n = match &self.n_facets {
            Some(raw) => SimplicialComplex3::build(&Self::parse_facets(raw, "n_facets")?)?,
            None => return Err(Error::InvalidInput("missing field n_facets".into())),
        };
        let Some(pairs) = &self.vertex_map else {
            return Err(Error::InvalidInput("missing field vertex_map".into()));
        };
        let mut vertex_map = BTreeMap::new();
        for &[s, t] in pairs {
            if vertex_map.insert(s, t).is_some() {
                return Err(Error::InvalidInput(format!(
                    "vertex_map lists source vertex {s} twice"
                )));
            }
        }
        let surface: Vec<[u32; 3]> = self
            .surface_triangles
            .iter()
            .map(|t| {
                <[u32; 3]>::try_from(t.as_slice()).map_err(|_| {
                    Error::InvalidInput(format!("surface triangle {t:?} must have 3 vertices"))
                })
            })
            .collect::<Result<_>>()?;
        let curves: Vec<Vec<[u32; 2]>> = self
            .curve_components
            .iter()
            .map(|comp| {
                comp.iter()
                    .map(|e| {
                        <[u32; 2]>::try_from(e.as_slice()).map_err(|_| {
                            Error::InvalidInput(format!("curve edge {e:?} must have 2 vertices"))
                        })
                    })
                    .collect()
            })
            .collect::<Result<_>>()?;
        let parities: Vec<bool> = self.swallowtail_parities.iter().map(|&p| p != 0).collect();
        let locus = LocusSpec::new(&m, &surface, &curves, &parities)?;
        ProblemInstance::new(m, n, vertex_map, locus)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins;
    use crate::classes::tangent_classes;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn identity_instance(name: &str, locus_of: impl Fn(&SimplicialComplex3) -> LocusSpec) -> ProblemInstance {
        let m = builtins::by_name(name).unwrap();
        let n = builtins::by_name(name).unwrap();
        let vm: BTreeMap<u32, u32> = m.vertices().iter().map(|&v| (v, v)).collect();
        let locus = locus_of(&m);
        ProblemInstance::new(m, n, vm, locus).unwrap()
    }

    #[test]
    fn pullback_along_identity_is_identity() {
        let c = builtins::t3();
        let map = SimplicialMap::identity(&c);
        let u = Gf2Vector::from_support(c.n(1), &[0, 5, 17]).unwrap();
        assert_eq!(pullback_cochain(&map, &u, 1).unwrap(), u);
    }

    #[test]
    fn pullback_along_constant_map_kills_positive_degrees() {
        let c = builtins::s3();
        let images: BTreeMap<u32, u32> = c.vertices().iter().map(|&v| (v, 0)).collect();
        let map = SimplicialMap::new(&c, &c, images).unwrap();
        for k in 1..=3usize {
            let u = Gf2Vector::ones(c.n(k));
            assert!(pullback_cochain(&map, &u, k).unwrap().is_zero());
        }
    }

    #[test]
    fn pullback_of_cocycle_is_cocycle() {
        // Collapse the x-coordinate of the torus: (i,j,k) -> (0,j,k).
        let c = builtins::t3();
        let images: BTreeMap<u32, u32> = c
            .vertices()
            .iter()
            .map(|&v| (v, v % 9))
            .collect();
        let map = SimplicialMap::new(&c, &c, images).unwrap();
        assert!(map.validate());
        let ctx = CohomologyContext::new(builtins::t3());
        let target_ctx = CohomologyContext::new(builtins::t3());
        for u in target_ctx.basis_classes(1) {
            let pulled = pullback(&ctx, &target_ctx, &map, &u).unwrap();
            // class() inside pullback would have failed if not a cocycle
            let _ = pulled;
        }
    }

    #[test]
    fn collapsing_map_kills_the_collapsed_class_only() {
        // The projection (i,j,k) -> (0,j,k) kills the class dual to the
        // x-coordinate torus and preserves the other two.
        let m = builtins::t3();
        let images: BTreeMap<u32, u32> = m.vertices().iter().map(|&v| (v, v % 9)).collect();
        let m_ctx = CohomologyContext::new(builtins::t3());
        let n_ctx = CohomologyContext::new(builtins::t3());
        let map = SimplicialMap::new(m_ctx.complex(), n_ctx.complex(), images).unwrap();

        // Duals of the three coordinate tori on the target.
        let mut pulled_zero = 0;
        let mut pulled_nonzero = 0;
        for axis in 0..3 {
            let tris = builtins::t3_coordinate_torus(axis);
            let locus = LocusSpec::new(n_ctx.complex(), &tris, &[], &[]).unwrap();
            let dual = locus::pd_of_surface(&n_ctx, &locus).unwrap();
            let pulled = pullback(&m_ctx, &n_ctx, &map, &dual).unwrap();
            if m_ctx.is_zero_class(&pulled).unwrap() {
                pulled_zero += 1;
            } else {
                pulled_nonzero += 1;
            }
        }
        // The x-torus class dies (its dual circle collapses); y and z
        // survive.
        assert_eq!(pulled_zero, 1);
        assert_eq!(pulled_nonzero, 2);
    }

    #[test]
    fn sphere_identity_with_empty_locus_is_realizable() {
        let inst = identity_instance("S3", LocusSpec::empty);
        let verdict = check_theorem2(&inst).unwrap();
        assert!(verdict.cond1.holds);
        assert!(verdict.cond2.holds);
        assert!(verdict.cond3.is_empty());
        assert!(verdict.realizable);
    }

    #[test]
    fn sphere_with_vertex_link_fold_is_realizable() {
        let inst = identity_instance("S3", |m| {
            LocusSpec::new(m, &m.vertex_link(0), &[], &[]).unwrap()
        });
        let verdict = check_theorem2(&inst).unwrap();
        assert!(verdict.realizable);
    }

    #[test]
    fn torus_with_nonseparating_surface_fails_condition1() {
        let inst = identity_instance("T3", |m| {
            LocusSpec::new(m, &builtins::t3_coordinate_torus(0), &[], &[]).unwrap()
        });
        let verdict = check_theorem2(&inst).unwrap();
        assert!(!verdict.cond1.holds);
        assert!(!verdict.realizable);
    }

    #[test]
    fn swallowtail_parity_decides_independently_of_the_bundle_route() {
        // Fold T3 along a vertex-link 2-sphere with a cusp circle bounding a
        // triangle of it. The sphere and the circle are nullhomologous, so
        // conditions 1 and 2 hold either way; the verdict hinges on the
        // declared swallowtail parity matching [C'].[S] = 0.
        for declared in [false, true] {
            let inst = identity_instance("T3", |m| {
                let link = m.vertex_link(0);
                let t = link[0];
                let curve = vec![[t[0], t[1]], [t[0], t[2]], [t[1], t[2]]];
                LocusSpec::new(m, &link, &[curve], &[declared]).unwrap()
            });
            let verdict = check_theorem2(&inst).unwrap();
            assert!(verdict.cond1.holds);
            assert!(verdict.cond2.holds);
            assert_eq!(verdict.cond3.len(), 1);
            assert_eq!(verdict.cond3[0].holds, !declared);
            assert_eq!(verdict.realizable, !declared);
            // The bundle route only sees conditions 1 and 2.
            assert!(check_theorem1_for_instance(&inst).unwrap());
        }
    }

    #[test]
    fn bundle_route_agrees_with_conditions_on_instances() {
        let instances = [
            identity_instance("S3", LocusSpec::empty),
            identity_instance("S3", |m| {
                LocusSpec::new(m, &m.vertex_link(0), &[], &[]).unwrap()
            }),
            identity_instance("T3", |m| {
                LocusSpec::new(m, &builtins::t3_coordinate_torus(0), &[], &[]).unwrap()
            }),
            identity_instance("RP2xS1", LocusSpec::empty),
        ];
        for inst in &instances {
            let verdict = check_theorem2(inst).unwrap();
            let bundle = check_theorem1_for_instance(inst).unwrap();
            assert_eq!(bundle, verdict.cond1.holds && verdict.cond2.holds);
            assert_eq!(
                verdict.realizable,
                verdict.cond1.holds
                    && verdict.cond2.holds
                    && verdict.cond3.iter().all(|c| c.holds)
            );
        }
    }

    #[test]
    fn empty_locus_reduces_to_plain_bundle_test() {
        for name in builtins::BUILTIN_NAMES {
            let inst = identity_instance(name, LocusSpec::empty);
            let verdict = check_theorem2(&inst).unwrap();
            let ctx = inst.source_ctx();
            let nctx = inst.target_ctx();
            let map = inst.map();
            let tm = tangent_classes(ctx).unwrap();
            let tn = tangent_classes(nctx).unwrap();
            let plain = check_theorem1_bundle(ctx, &tm, &map, nctx, &tn).unwrap();
            assert_eq!(plain, verdict.cond1.holds && verdict.cond2.holds, "{name}");
            assert!(verdict.realizable, "{name} identity with empty locus");
        }
    }

    #[test]
    fn random_class_scenarios_reduce_to_bundle_iso() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for name in builtins::BUILTIN_NAMES {
            let ctx = CohomologyContext::new(builtins::by_name(name).unwrap());
            let tangent = tangent_classes(&ctx).unwrap();
            for _ in 0..25 {
                let mut pick = |deg: usize| {
                    let mut rep = Gf2Vector::zeros(ctx.complex().n(deg));
                    for b in ctx.basis_reps(deg) {
                        if rng.gen_bool(0.5) {
                            rep = rep.add(b).unwrap();
                        }
                    }
                    ctx.class(deg, rep).unwrap()
                };
                let s = pick(1);
                let c = pick(2);
                let a = pick(1);
                let b = pick(2);
                let (c1, c2) =
                    theorem2_conditions(&ctx, &tangent, &s, &c, &a, &b).unwrap();
                let twisted =
                    classes::twisted_classes(&ctx, &tangent, &s, &c).unwrap();
                let pulled = BundleClasses {
                    w1: a.clone(),
                    w2: b.clone(),
                };
                let iso = classes::bundle_iso(&ctx, &twisted, &pulled).unwrap();
                assert_eq!(iso, c1 && c2, "{name}");
            }
        }
    }

    #[test]
    fn verdict_is_invariant_under_consistent_relabeling() {
        use rand::seq::SliceRandom;
        let mut rng = ChaCha8Rng::seed_from_u64(321);
        let facets = builtins::t3_facets();
        let tris = builtins::t3_coordinate_torus(0);

        let base = {
            let m = SimplicialComplex3::build(&facets).unwrap();
            let n = SimplicialComplex3::build(&facets).unwrap();
            let vm: BTreeMap<u32, u32> = m.vertices().iter().map(|&v| (v, v)).collect();
            let locus = LocusSpec::new(&m, &tris, &[], &[]).unwrap();
            ProblemInstance::new(m, n, vm, locus).unwrap()
        };
        let base_verdict = check_theorem2(&base).unwrap();

        for _ in 0..3 {
            let mut shuffled: Vec<u32> = (0..27).collect();
            shuffled.shuffle(&mut rng);
            let perm = |v: u32| shuffled[v as usize];
            let pfacets: Vec<[u32; 4]> = facets
                .iter()
                .map(|f| {
                    let mut g = f.map(perm);
                    g.sort_unstable();
                    g
                })
                .collect();
            let ptris: Vec<[u32; 3]> = tris
                .iter()
                .map(|t| {
                    let mut g = t.map(perm);
                    g.sort_unstable();
                    g
                })
                .collect();
            let m = SimplicialComplex3::build(&pfacets).unwrap();
            let n = SimplicialComplex3::build(&pfacets).unwrap();
            let vm: BTreeMap<u32, u32> = m.vertices().iter().map(|&v| (v, v)).collect();
            let locus = LocusSpec::new(&m, &ptris, &[], &[]).unwrap();
            let inst = ProblemInstance::new(m, n, vm, locus).unwrap();
            let verdict = check_theorem2(&inst).unwrap();
            assert_eq!(verdict.realizable, base_verdict.realizable);
            assert_eq!(verdict.cond1.holds, base_verdict.cond1.holds);
            assert_eq!(verdict.cond2.holds, base_verdict.cond2.holds);
        }
    }

    #[test]
    fn json_round_trip() {
        let doc = InstanceDoc::for_complex(&builtins::s3_facets());
        let text = doc.to_json();
        let parsed = InstanceDoc::from_json(&text).unwrap();
        let inst = parsed.build_instance().unwrap();
        let verdict = check_theorem2(&inst).unwrap();
        assert!(verdict.realizable);
    }

    #[test]
    fn malformed_json_is_invalid_input() {
        assert!(matches!(
            InstanceDoc::from_json("{ nope"),
            Err(Error::InvalidInput(_))
        ));
        let doc = InstanceDoc {
            m_facets: vec![vec![0, 1, 2]],
            n_facets: None,
            vertex_map: None,
            surface_triangles: vec![],
            curve_components: vec![],
            swallowtail_parities: vec![],
        };
        assert!(matches!(doc.build_m(), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn open_complex_is_rejected_with_stage() {
        let doc = InstanceDoc {
            m_facets: vec![vec![0, 1, 2, 3]],
            n_facets: Some(vec![vec![0, 1, 2, 3]]),
            vertex_map: Some(vec![[0, 0], [1, 1], [2, 2], [3, 3]]),
            surface_triangles: vec![],
            curve_components: vec![],
            swallowtail_parities: vec![],
        };
        let err = doc.build_instance().unwrap_err();
        assert!(matches!(err, Error::Stage { .. }));
    }
}
