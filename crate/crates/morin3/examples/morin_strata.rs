//! The three local normal forms of generic maps between 3-manifolds and
//! their singular strata, verified pointwise in exact rational arithmetic.
//!
//! ```bash
//! cargo run -p morin3 --example morin_strata
//! ```

use morin3::morin::{self, StratumClass};
use morin3::{PolyMap3, RationalPoint3};

fn main() {
    for model in ["fold", "cusp", "swallowtail"] {
        let report = morin::verify_model_on_grid(model, 5).unwrap();
        println!(
            "{model}: {} grid points + {} on-locus samples",
            report.grid_points, report.locus_samples
        );
        println!(
            "  counts: regular={} fold={} cusp={} swallowtail={}",
            report.regular, report.folds, report.cusps, report.swallowtails
        );
        println!(
            "  mismatches vs the explicit locus equations: {}",
            report.grid_mismatches + report.locus_mismatches
        );
        assert!(report.all_ok());
    }

    // Symbol prefixes at hand-picked points.
    println!("\nsymbol prefixes:");
    let fold = PolyMap3::fold();
    let p = RationalPoint3::from_ints(0, 5, -2);
    println!(
        "  fold at (0,5,-2): ker dim {} -> symbol {:?}",
        morin::kernel_dim_at(&fold, &p),
        morin::second_order_symbol(&fold, &p).unwrap()
    );
    let cusp = PolyMap3::cusp();
    let on_parabola = RationalPoint3::from_ints(1, -3, 0);
    let on_axis = RationalPoint3::from_ints(0, 0, 7);
    println!(
        "  cusp at (1,-3,0): {:?}; at (0,0,7): {:?}",
        morin::second_order_symbol(&cusp, &on_parabola).unwrap(),
        morin::third_order_symbol(&cusp, &on_axis).unwrap()
    );
    let st = PolyMap3::swallowtail();
    let origin = RationalPoint3::from_ints(0, 0, 0);
    println!(
        "  swallowtail at the origin: {:?} -> {:?}",
        morin::third_order_symbol(&st, &origin).unwrap(),
        morin::classify(&st, &origin).unwrap()
    );
    // Away from the origin the cusp curve of the swallowtail model stays a
    // cusp point.
    let nearby = RationalPoint3::from_ints(1, -6, 8);
    assert_eq!(morin::classify(&st, &nearby).unwrap(), StratumClass::Cusp);
    println!(
        "  swallowtail at (1,-6,8) on the cusp curve: {:?}",
        morin::classify(&st, &nearby).unwrap()
    );
}
