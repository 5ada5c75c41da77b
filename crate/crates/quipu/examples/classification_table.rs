//! Print the derived-equivalence classification of all linear Nakayama
//! algebras with almost separate relations of length at least 3, for
//! every algebra length up to 8.
//!
//! ```sh
//! cargo run --example classification_table
//! ```

use quipu::enumerate::{classify, emit, Format};

fn main() {
    for n in 1..=8 {
        println!("order {n}");
        print!("{}", emit(&classify(n, 3), Format::Text));
        println!();
    }
}
