//! Stiefel-Whitney classes of the built-ins through the Wu construction,
//! cross-checked against orientation propagation, plus the failure mode on a
//! pseudomanifold that is not a manifold.
//!
//! ```bash
//! cargo run -p morin3 --example stiefel_whitney
//! ```

use morin3::builtins::{self, BUILTIN_NAMES};
use morin3::classes;
use morin3::{CohomologyContext, SimplicialComplex3};

fn main() {
    for name in BUILTIN_NAMES {
        let ctx = CohomologyContext::new(builtins::by_name(name).unwrap());
        let orientable = ctx.complex().is_orientable().unwrap();
        let tangent = classes::tangent_classes(&ctx).unwrap();
        let w1_zero = ctx.is_zero_class(&tangent.w1).unwrap();
        let w2_zero = ctx.is_zero_class(&tangent.w2).unwrap();
        println!(
            "{name}: orientable={orientable}  w1{}0  w2{}0",
            if w1_zero { "=" } else { "!=" },
            if w2_zero { "=" } else { "!=" },
        );
        assert_eq!(w1_zero, orientable);
    }

    // On RP2xS1 the Wu identity <v1 cup x, [M]> = <Sq1 x, [M]> is visibly
    // nontrivial: print both sides over the H^2 basis.
    let ctx = CohomologyContext::new(builtins::rp2xs1());
    let v1 = classes::wu_v1(&ctx).unwrap();
    println!("\nRP2xS1 Wu identity over the H^2 basis:");
    for (i, x) in ctx.basis_classes(2).iter().enumerate() {
        let lhs = ctx.pairing(&v1, x).unwrap();
        let sq = ctx.sq1(x).unwrap();
        let rhs = ctx.evaluate_fundamental(&sq).unwrap();
        println!("  x_{i}: <v1 x, [M]> = {}  <Sq1 x, [M]> = {}", lhs as u8, rhs as u8);
    }

    // The suspension of RP^2 is a closed pseudomanifold but not a manifold;
    // its duality pairing is degenerate and the Wu solve reports it.
    let mut facets = Vec::new();
    for t in builtins::rp2_triangles() {
        facets.push([t[0], t[1], t[2], 6]);
        facets.push([t[0], t[1], t[2], 7]);
    }
    let susp = SimplicialComplex3::build(&facets).unwrap();
    println!(
        "\nsuspension of RP^2: closed pseudomanifold = {}",
        susp.is_closed_pseudomanifold()
    );
    let bad_ctx = CohomologyContext::new(susp);
    match classes::wu_v1(&bad_ctx) {
        Ok(_) => println!("unexpected: Wu class found"),
        Err(e) => println!("Wu solve rejects it: {e}"),
    }
}
