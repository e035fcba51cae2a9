//! Poincare duality: pairing matrices, dual classes of embedded cycles, and
//! intersection parities on the 3-torus.
//!
//! ```bash
//! cargo run -p morin3 --example poincare_duality
//! ```

use morin3::builtins::{self, BUILTIN_NAMES};
use morin3::gf2::{self, Gf2Vector};
use morin3::locus::{self, LocusSpec};
use morin3::CohomologyContext;

fn main() {
    println!("duality pairing ranks (rank / expected):");
    for name in BUILTIN_NAMES {
        let ctx = CohomologyContext::new(builtins::by_name(name).unwrap());
        print!("  {name}:");
        for k in 0..=3usize {
            let p = ctx.duality_pairing_matrix(k).unwrap();
            print!("  k={k}: {}/{}", gf2::rref(&p).rank, ctx.betti(k));
        }
        println!();
    }

    let ctx = CohomologyContext::new(builtins::t3());

    // Dual class of the x=0 coordinate 2-torus.
    let tris = builtins::t3_coordinate_torus(0);
    let surface = LocusSpec::new(ctx.complex(), &tris, &[], &[]).unwrap();
    let s_class = locus::pd_of_surface(&ctx, &surface).unwrap();
    println!(
        "\nT3: dual of the x=0 coordinate torus has edge support {:?}",
        s_class.support()
    );
    // Re-substitution: <alpha cup beta, [M]> = <beta, S> on the whole basis.
    for (i, beta) in ctx.basis_classes(2).iter().enumerate() {
        let lhs = ctx.pairing(&s_class, beta).unwrap();
        let rhs = ctx.evaluate(beta, surface.surface_cycle()).unwrap();
        println!("  basis beta_{i}: <alpha beta, [M]> = {} = <beta, S> = {}", lhs as u8, rhs as u8);
    }

    // Intersection parities with the three coordinate circles.
    for axis in 0..3 {
        let edges = builtins::t3_coordinate_circle(axis);
        let idx: Vec<usize> = edges
            .iter()
            .map(|e| ctx.complex().index_of(e).unwrap())
            .collect();
        let circle = Gf2Vector::from_support(ctx.complex().n(1), &idx).unwrap();
        let parity = locus::intersection_parity(&ctx, &circle, &s_class).unwrap();
        println!(
            "T3: [{}-circle] . [x=0 torus] = {}",
            ["x", "y", "z"][axis],
            parity as u8
        );
    }

    // The same bit through the other duality route.
    let x_edges = builtins::t3_coordinate_circle(0);
    let idx: Vec<usize> = x_edges
        .iter()
        .map(|e| ctx.complex().index_of(e).unwrap())
        .collect();
    let x_circle = Gf2Vector::from_support(ctx.complex().n(1), &idx).unwrap();
    let gamma = locus::pd_of_curve(&ctx, &x_circle).unwrap();
    let product = ctx.cup(&gamma, &s_class).unwrap();
    println!(
        "T3: <PD(x-circle) cup PD(x=0 torus), [M]> = {}",
        ctx.evaluate_fundamental(&product).unwrap() as u8
    );
}
