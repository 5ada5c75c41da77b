//! Explore the spellings of a quipu: the symmetry orbit, the canonical
//! representative, and the independent tree-isomorphism cross-check.
//!
//! ```sh
//! cargo run --example orbit_canonical
//! ```

use quipu::canonical::{ahu_isomorphic, canonical_form, symmetry_orbit, to_tree};
use quipu::QuipuShape;

fn main() {
    for text in ["Q:[2,1]:[1]", "Q:[1,4]:[2]", "Q:[1,2,0,1]:[2,1,3]"] {
        let shape: QuipuShape = text.parse().unwrap();
        let orbit = symmetry_orbit(&shape);
        println!("{shape} has {} spelling(s):", orbit.len());
        for member in &orbit {
            println!("  {member}");
            assert!(ahu_isomorphic(&to_tree(&shape), &to_tree(member)));
        }
        println!("  canonical: {}", canonical_form(&shape));
        println!();
    }

    // A cord hanging off the end of the main string is no branch at
    // all; the canonical form recognizes the path.
    let disguised: QuipuShape = "Q:[0,5]:[2]".parse().unwrap();
    println!("{disguised} is canonically {}", canonical_form(&disguised));
}
