//! Pullbacks of cohomology classes along simplicial maps: identity, constant
//! and coordinate-collapsing maps of the 3-torus.
//!
//! ```bash
//! cargo run -p morin3 --example pullbacks
//! ```

use std::collections::BTreeMap;

use morin3::builtins;
use morin3::locus::{self, LocusSpec};
use morin3::verdict::pullback;
use morin3::{CohomologyContext, SimplicialMap};

fn main() {
    let m_ctx = CohomologyContext::new(builtins::t3());
    let n_ctx = CohomologyContext::new(builtins::t3());

    // Identity: pullback is the identity on cochains.
    let id = SimplicialMap::identity(m_ctx.complex());
    let u = n_ctx.basis_classes(1).remove(0);
    // The identity map of one complex; pull back through the same context.
    let pulled = pullback(&m_ctx, &m_ctx, &id, &m_ctx.basis_classes(1)[0]).unwrap();
    println!(
        "identity pullback keeps representatives: {}",
        pulled.support() == m_ctx.basis_classes(1)[0].support()
    );

    // Constant map: everything in positive degree dies.
    let constant: BTreeMap<u32, u32> = m_ctx.complex().vertices().iter().map(|&v| (v, 0)).collect();
    let c_map = SimplicialMap::new(m_ctx.complex(), n_ctx.complex(), constant).unwrap();
    let pulled = pullback(&m_ctx, &n_ctx, &c_map, &u).unwrap();
    println!(
        "constant map kills H^1: pulled class is zero: {}",
        m_ctx.is_zero_class(&pulled).unwrap()
    );

    // Collapse the x-coordinate: (i,j,k) -> (0,j,k). Exactly one of the
    // three coordinate classes dies.
    let collapse: BTreeMap<u32, u32> = m_ctx
        .complex()
        .vertices()
        .iter()
        .map(|&v| (v, v % 9))
        .collect();
    let map = SimplicialMap::new(m_ctx.complex(), n_ctx.complex(), collapse).unwrap();
    println!("collapse map is simplicial: {}", map.validate());
    for axis in 0..3 {
        let tris = builtins::t3_coordinate_torus(axis);
        let surface = LocusSpec::new(n_ctx.complex(), &tris, &[], &[]).unwrap();
        let dual = locus::pd_of_surface(&n_ctx, &surface).unwrap();
        let pulled = pullback(&m_ctx, &n_ctx, &map, &dual).unwrap();
        println!(
            "  pullback of the {}-coordinate class is {}",
            ["x", "y", "z"][axis],
            if m_ctx.is_zero_class(&pulled).unwrap() {
                "zero"
            } else {
                "nonzero"
            }
        );
    }
}
