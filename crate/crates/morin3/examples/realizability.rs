//! End-to-end realizability verdicts: can a map be homotoped to a generic
//! map whose fold surface, cusp curves and swallowtail points are exactly
//! the prescribed ones?
//!
//! ```bash
//! cargo run -p morin3 --example realizability
//! ```

use std::collections::BTreeMap;

use morin3::builtins;
use morin3::locus::LocusSpec;
use morin3::verdict::{self, ProblemInstance};
use morin3::SimplicialComplex3;

fn identity_instance(
    facets: &[[u32; 4]],
    locus_of: impl Fn(&SimplicialComplex3) -> LocusSpec,
) -> ProblemInstance {
    let m = SimplicialComplex3::build(facets).unwrap();
    let n = SimplicialComplex3::build(facets).unwrap();
    let vm: BTreeMap<u32, u32> = m.vertices().iter().map(|&v| (v, v)).collect();
    let locus = locus_of(&m);
    ProblemInstance::new(m, n, vm, locus).unwrap()
}

fn report(label: &str, inst: &ProblemInstance) {
    let v = verdict::check_theorem2(inst).unwrap();
    println!("== {label}");
    println!(
        "   condition 1 (w1):        {}",
        if v.cond1.holds { "holds" } else { "fails" }
    );
    println!(
        "   condition 2 (w2):        {}",
        if v.cond2.holds { "holds" } else { "fails" }
    );
    if v.cond3.is_empty() {
        println!("   condition 3 (parities):  vacuous (no cusp curve)");
    } else {
        for c in &v.cond3 {
            println!(
                "   condition 3, component {}: parity {} vs declared {} -> {}",
                c.component,
                c.intersection_parity,
                c.declared_parity,
                if c.holds { "holds" } else { "fails" }
            );
        }
    }
    println!(
        "   verdict: {}",
        if v.realizable {
            "realizable"
        } else {
            "not realizable"
        }
    );
    // The equivalent bundle formulation must agree with conditions 1 and 2.
    let bundle = verdict::check_theorem1_for_instance(inst).unwrap();
    assert_eq!(bundle, v.cond1.holds && v.cond2.holds);
    println!("   twisted bundle ~ pullback bundle: {bundle}\n");
}

fn main() {
    // The identity of the 3-sphere with no singular locus at all: a
    // diffeomorphism is already generic with empty fold surface.
    let inst = identity_instance(&builtins::s3_facets(), LocusSpec::empty);
    report("S3 identity, empty locus", &inst);

    // The identity of S3 with a fold along an equatorial 2-sphere (the link
    // of a vertex). The sphere is nullhomologous, so every condition holds:
    // the map folding S3 over a ball exists.
    let inst = identity_instance(&builtins::s3_facets(), |m| {
        LocusSpec::new(m, &m.vertex_link(0), &[], &[]).unwrap()
    });
    report("S3 identity, fold along a vertex-link sphere", &inst);

    // The identity of T3 with a fold along a coordinate 2-torus. The torus
    // is NOT nullhomologous: [S] != 0 = w1(M), so condition 1 fails and no
    // homotopy can realize this locus.
    let inst = identity_instance(&builtins::t3_facets(), |m| {
        LocusSpec::new(m, &builtins::t3_coordinate_torus(0), &[], &[]).unwrap()
    });
    report("T3 identity, fold along a nonseparating coordinate torus", &inst);

    // The same instance as a JSON document, ready for the CLI.
    let mut doc = verdict::InstanceDoc::for_complex(&builtins::t3_facets());
    doc.surface_triangles = builtins::t3_coordinate_torus(0)
        .iter()
        .map(|t| t.to_vec())
        .collect();
    println!(
        "the failing T3 instance as JSON (first 120 chars):\n{}...",
        &doc.to_json()[..120]
    );
}
