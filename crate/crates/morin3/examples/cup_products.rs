//! Cup products on the built-in manifolds: the triple product on the
//! 3-torus and the square of the generator on RP^3.
//!
//! ```bash
//! cargo run -p morin3 --example cup_products
//! ```

use morin3::builtins;
use morin3::CohomologyContext;

fn main() {
    // On T^3 any basis x, y, z of H^1 satisfies <x y z, [M]> = 1: the triple
    // product form is the determinant form.
    let t3 = CohomologyContext::new(builtins::t3());
    let basis = t3.basis_classes(1);
    println!("T3: dim H^1 = {}", basis.len());
    let xy = t3.cup(&basis[0], &basis[1]).unwrap();
    let xyz = t3.cup(&xy, &basis[2]).unwrap();
    println!(
        "T3: <b0 cup b1 cup b2, [M]> = {}",
        t3.evaluate_fundamental(&xyz).unwrap() as u8
    );
    for (i, b) in basis.iter().enumerate() {
        let square = t3.cup(b, b).unwrap();
        println!(
            "T3: b{i}^2 is {} in H^2",
            if t3.is_zero_class(&square).unwrap() {
                "zero"
            } else {
                "nonzero"
            }
        );
    }

    // On RP^3 the generator a of H^1 has a^2 != 0 and a^3 pairs with the
    // fundamental class.
    let rp3 = CohomologyContext::new(builtins::rp3());
    let a = rp3.basis_classes(1).remove(0);
    let aa = rp3.cup(&a, &a).unwrap();
    let aaa = rp3.cup(&aa, &a).unwrap();
    println!(
        "RP3: a^2 is {} in H^2",
        if rp3.is_zero_class(&aa).unwrap() {
            "zero"
        } else {
            "nonzero"
        }
    );
    println!(
        "RP3: <a^3, [M]> = {}",
        rp3.evaluate_fundamental(&aaa).unwrap() as u8
    );

    // Sq^1 agrees with squaring in degree 1.
    let sq = rp3.sq1(&a).unwrap();
    println!(
        "RP3: Sq^1(a) cohomologous to a^2: {}",
        rp3.cohomologous(&sq, &aa).unwrap()
    );

    // Cup products commute at class level (mod 2 there is no sign).
    let rp2xs1 = CohomologyContext::new(builtins::rp2xs1());
    let h1 = rp2xs1.basis_classes(1);
    let uv = rp2xs1.cup(&h1[0], &h1[1]).unwrap();
    let vu = rp2xs1.cup(&h1[1], &h1[0]).unwrap();
    println!(
        "RP2xS1: [u cup v] = [v cup u]: {} (representatives equal: {})",
        rp2xs1.cohomologous(&uv, &vu).unwrap(),
        uv.support() == vu.support()
    );
}
