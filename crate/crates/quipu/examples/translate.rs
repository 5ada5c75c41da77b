//! Translate a Nakayama presentation to its quipu shape and back.
//!
//! ```sh
//! cargo run --example translate
//! ```

use quipu::canonical::normalize;
use quipu::{nakayama_to_quipu, quipu_to_nakayama, NakayamaPresentation, QuipuShape};

fn main() {
    let algebra: NakayamaPresentation = "A:14:[2,7,11]:[4,5,3]".parse().unwrap();
    let shape = nakayama_to_quipu(&algebra).unwrap();
    println!("{algebra}  ->  {shape}");

    let back = quipu_to_nakayama(&shape).unwrap();
    println!("{shape}  ->  {back}");
    assert_eq!(back, algebra);

    // Length-2 relations become cords of length 0, which vanish under
    // normalization; the class is unchanged.
    let with_short: NakayamaPresentation = "A:9:[1,3,7]:[3,4,2]".parse().unwrap();
    let raw = nakayama_to_quipu(&with_short).unwrap();
    println!("{with_short}  ->  {raw}  (raw)");
    println!("{with_short}  ->  {}  (normalized)", normalize(&raw));

    // Relation-free algebras are path quipus.
    let path: NakayamaPresentation = "A:7:[]:[]".parse().unwrap();
    let line: QuipuShape = nakayama_to_quipu(&path).unwrap();
    println!("{path}  ->  {line}");
}
