//! List the eight derived equivalent presentations sharing a quipu, and
//! check a presentation with length-2 relations against them.
//!
//! ```sh
//! cargo run --example equivalence_family
//! ```

use std::collections::BTreeSet;

use quipu::translate::strip_length2;
use quipu::{derived_equivalent, equivalence_family, NakayamaPresentation};

fn main() {
    let seed: NakayamaPresentation = "A:13:[1,6,8]:[4,3,5]".parse().unwrap();
    println!("family of {seed}:");
    let family = equivalence_family(&seed).unwrap();
    for member in &family {
        println!("  {member}");
    }
    let distinct: BTreeSet<_> = family.iter().collect();
    println!("distinct members: {}", distinct.len());
    println!();

    // Length-2 relations never change the class.
    let decorated: NakayamaPresentation = "A:13:[1,4,5,6,8]:[4,2,2,3,5]".parse().unwrap();
    println!(
        "strip({decorated}) = {}",
        strip_length2(&decorated).unwrap()
    );
    println!(
        "equivalent to the seed: {}",
        derived_equivalent(&decorated, &seed).unwrap()
    );
}
