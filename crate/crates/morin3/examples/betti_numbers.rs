//! Mod-2 Betti numbers of the five built-in manifolds.
//!
//! ```bash
//! cargo run -p morin3 --example betti_numbers
//! ```

use morin3::builtins::{self, BUILTIN_NAMES};
use morin3::CohomologyContext;

fn main() {
    println!("{:<8} {:>4} {:>4} {:>4} {:>4}  {:>6}  {:>6}  betti (b0 b1 b2 b3)", "name", "V", "E", "F", "T", "chi", "orient");
    for name in BUILTIN_NAMES {
        let complex = builtins::by_name(name).unwrap();
        let chi = complex.euler_characteristic();
        let orientable = complex.is_orientable().unwrap();
        let ctx = CohomologyContext::new(complex);
        let c = ctx.complex();
        println!(
            "{:<8} {:>4} {:>4} {:>4} {:>4}  {:>6}  {:>6}  ({} {} {} {})",
            name,
            c.n(0),
            c.n(1),
            c.n(2),
            c.n(3),
            chi,
            orientable,
            ctx.betti(0),
            ctx.betti(1),
            ctx.betti(2),
            ctx.betti(3),
        );
    }
}
