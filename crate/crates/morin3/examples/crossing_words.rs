//! Characteristic fields along a cusp curve: walk the cyclic word of
//! swallowtail flips and surface crossings, and see when the normal field
//! closes up.
//!
//! ```bash
//! cargo run -p morin3 --example crossing_words
//! ```

use morin3::locus::{self, CrossingEvent, CrossingWord};

fn word(spec: &str) -> CrossingWord {
    CrossingWord::new(
        spec.chars()
            .map(|c| match c {
                'F' => CrossingEvent::Flip,
                'C' => CrossingEvent::Cross,
                _ => panic!("use F and C"),
            })
            .collect(),
    )
}

fn main() {
    let samples = ["", "F", "C", "FC", "FF", "CC", "FCF", "FCFC", "FFCC", "FCCCF"];
    println!("{:<8} {:>6} {:>6} {:>12} {:>12}", "word", "flips", "cross", "propagation", "parity");
    for spec in samples {
        let w = word(spec);
        let flips = w.events.iter().filter(|e| **e == CrossingEvent::Flip).count();
        let crosses = w.events.len() - flips;
        println!(
            "{:<8} {:>6} {:>6} {:>12} {:>12}",
            if spec.is_empty() { "(empty)" } else { spec },
            flips,
            crosses,
            locus::exists_by_propagation(&w),
            locus::exists_by_parity(&w),
        );
    }

    // Exhaustive agreement for all words up to length 12.
    let mut cases = 0u32;
    for len in 0..=12usize {
        for bits in 0u32..(1 << len) {
            let events: Vec<CrossingEvent> = (0..len)
                .map(|i| {
                    if bits >> i & 1 == 1 {
                        CrossingEvent::Flip
                    } else {
                        CrossingEvent::Cross
                    }
                })
                .collect();
            let w = CrossingWord::new(events);
            assert_eq!(locus::exists_by_parity(&w), locus::exists_by_propagation(&w));
            cases += 1;
        }
    }
    println!("\nagreement of the two routes on all {cases} words of length <= 12");
    println!("a field exists iff #flips + #crossings is even,");
    println!("i.e. iff [C'] . [S] = |P on C'| mod 2");
}
