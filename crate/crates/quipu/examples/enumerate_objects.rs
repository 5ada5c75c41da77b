//! Enumerate quipus and almost separate presentations of a given order,
//! the raw material of the classification.
//!
//! ```sh
//! cargo run --example enumerate_objects
//! ```

use quipu::enumerate::{enumerate_nakayama, enumerate_quipus, label};

fn main() {
    let n = 8;
    let quipus = enumerate_quipus(n);
    println!("{} quipus with {n} vertices:", quipus.len());
    for canonical in &quipus {
        println!("  {}  ({canonical})", label(canonical));
    }
    println!();

    for min_length in [3, 2] {
        let presentations = enumerate_nakayama(n, min_length);
        println!(
            "{} almost separate presentations of length {n} with relations of length >= {min_length}",
            presentations.len()
        );
    }
}
