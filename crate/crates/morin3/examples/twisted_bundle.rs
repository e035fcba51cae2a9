//! Regluing the tangent bundle along a fold surface: the twisted classes
//! (w1 + [S], w2 + w1.[S] + [S]^2 + [C]) and the rank-3 isomorphism
//! decision through (w1, w2).
//!
//! ```bash
//! cargo run -p morin3 --example twisted_bundle
//! ```

use morin3::builtins;
use morin3::classes::{self, BundleClasses};
use morin3::locus::{self, LocusSpec};
use morin3::CohomologyContext;

fn describe(ctx: &CohomologyContext, label: &str, b: &BundleClasses) {
    println!(
        "  {label}: w1 {} 0, w2 {} 0",
        if ctx.is_zero_class(&b.w1).unwrap() { "=" } else { "!=" },
        if ctx.is_zero_class(&b.w2).unwrap() { "=" } else { "!=" },
    );
}

fn main() {
    // T3: twist the (trivial) tangent classes along the x=0 coordinate
    // torus. The twisted bundle has w1 = x and w2 = x^2 = 0, so it is NOT
    // isomorphic to the tangent bundle.
    let ctx = CohomologyContext::new(builtins::t3());
    let tangent = classes::tangent_classes(&ctx).unwrap();
    let surface = LocusSpec::new(ctx.complex(), &builtins::t3_coordinate_torus(0), &[], &[]).unwrap();
    let s = locus::pd_of_surface(&ctx, &surface).unwrap();
    let twisted = classes::twisted_classes(&ctx, &tangent, &s, &ctx.zero_class(2)).unwrap();
    println!("T3 twisted along the x=0 torus:");
    describe(&ctx, "tangent", &tangent);
    describe(&ctx, "twisted", &twisted);
    println!(
        "  twisted ~ tangent: {}",
        classes::bundle_iso(&ctx, &twisted, &tangent).unwrap()
    );

    // The vertex-link sphere in S3 is nullhomologous, so twisting along it
    // does not change the isomorphism class.
    let ctx = CohomologyContext::new(builtins::s3());
    let tangent = classes::tangent_classes(&ctx).unwrap();
    let link = ctx.complex().vertex_link(0);
    let surface = LocusSpec::new(ctx.complex(), &link, &[], &[]).unwrap();
    let s = locus::pd_of_surface(&ctx, &surface).unwrap();
    let twisted = classes::twisted_classes(&ctx, &tangent, &s, &ctx.zero_class(2)).unwrap();
    println!("\nS3 twisted along a vertex-link 2-sphere:");
    describe(&ctx, "tangent", &tangent);
    describe(&ctx, "twisted", &twisted);
    println!(
        "  twisted ~ tangent: {}",
        classes::bundle_iso(&ctx, &twisted, &tangent).unwrap()
    );

    // On RP2xS1 take S dual to w1(M) itself: the twist cancels w1 but keeps
    // w2 = a^2, landing on a bundle isomorphic to neither the tangent bundle
    // nor the trivial one.
    let ctx = CohomologyContext::new(builtins::rp2xs1());
    let tangent = classes::tangent_classes(&ctx).unwrap();
    let twisted =
        classes::twisted_classes(&ctx, &tangent, &tangent.w1.clone(), &ctx.zero_class(2)).unwrap();
    let trivial = BundleClasses {
        w1: ctx.zero_class(1),
        w2: ctx.zero_class(2),
    };
    println!("\nRP2xS1 twisted along a surface dual to w1(M):");
    describe(&ctx, "tangent", &tangent);
    describe(&ctx, "twisted", &twisted);
    println!(
        "  twisted ~ tangent: {}, twisted ~ trivial: {}",
        classes::bundle_iso(&ctx, &twisted, &tangent).unwrap(),
        classes::bundle_iso(&ctx, &twisted, &trivial).unwrap()
    );
}
