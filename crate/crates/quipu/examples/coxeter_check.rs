//! Cross-examine claimed equivalences with the exact Coxeter-polynomial
//! oracle: equal polynomials are necessary for derived equivalence,
//! unequal polynomials refute it.
//!
//! ```sh
//! cargo run --example coxeter_check
//! ```

use quipu::invariants::{kupisch, verify_equivalence, BoundAlgebra};
use quipu::presentations::embed_quipu;
use quipu::{NakayamaPresentation, QuipuShape};

fn main() {
    let algebra: NakayamaPresentation = "A:4:[1]:[3]".parse().unwrap();
    println!("kupisch({algebra}) = {:?}", kupisch(&algebra));

    // The four-vertex star and its Nakayama partner.
    let star: QuipuShape = "Q:[1,1]:[1]".parse().unwrap();
    let report = verify_equivalence(
        &BoundAlgebra::Nakayama(algebra),
        &BoundAlgebra::Marked(embed_quipu(&star)),
    );
    println!("{report}");
    println!();

    // A single long relation against the relation-free algebra.
    let left: NakayamaPresentation = "A:8:[1]:[4]".parse().unwrap();
    let right: NakayamaPresentation = "A:8:[]:[]".parse().unwrap();
    let report = verify_equivalence(
        &BoundAlgebra::Nakayama(left),
        &BoundAlgebra::Nakayama(right),
    );
    println!("{report}");
}
