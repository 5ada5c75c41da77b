//! Resolve every relation of a bound quiver into a cord, one swap of
//! the leftmost relation at a time, then compare with the closed-form
//! translation.
//!
//! ```sh
//! cargo run --example swap_walkthrough
//! ```

use quipu::crswap::cr_swap;
use quipu::presentations::embed_quipu;
use quipu::{nakayama_to_quipu, MarkedQuipuQuiver, NakayamaPresentation};

fn main() {
    let algebra: NakayamaPresentation = "A:9:[1,3,7]:[3,4,2]".parse().unwrap();
    let mut quiver: MarkedQuipuQuiver = quipu::embed_nakayama(&algebra).unwrap();
    println!("start: {quiver}");

    let mut swaps = 0;
    while !quiver.relations().is_empty() {
        quiver = cr_swap(&quiver, 0).unwrap();
        swaps += 1;
        println!("swap {swaps:>2}: {quiver}");
    }

    let shape = quiver.to_shape().unwrap();
    println!("resolved after {swaps} swaps: {shape}");

    let closed = embed_quipu(&nakayama_to_quipu(&algebra).unwrap());
    assert_eq!(quiver, closed);
    println!("closed-form translation agrees");
}
