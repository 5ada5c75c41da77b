//! Derived-equivalence classification of linear Nakayama algebras with
//! almost separate relations, by translation to quipus.
//!
//! A linear Nakayama algebra is a path algebra of the linearly oriented
//! type-A quiver modulo zero relations; its relations are *almost
//! separate* when any two overlap in at most one arrow. Such an algebra
//! is derived equivalent to the path algebra of a quipu, a tree of
//! maximum degree 3 whose branch vertices lie on one path. This crate
//! implements the translation in both directions, the cord/relation
//! swap rewrite connecting them, canonical forms for quipus, and an
//! exact-arithmetic Coxeter-polynomial oracle that cross-checks every
//! claimed equivalence.
//!
//! The pieces:
//!
//! * [`presentations`] - domain types, validation, text notation
//!   (`A:13:[1,6,8]:[4,3,5]`, `Q:[1,2,0,1]:[2,1,3]`, `M:9:[]:[(1,3)]`).
//! * [`canonical`] - trivial-cord removal, symmetry orbits, canonical
//!   quipus, and an AHU tree-isomorphism oracle.
//! * [`crswap`] - the cord/relation swap and the first-relation-to-cord
//!   procedure built from it.
//! * [`translate`] - closed-form translations, length-2 stripping, the
//!   eight-member equivalence family, and the equivalence decision.
//! * [`invariants`] - Kupisch series, Cartan matrices, Coxeter
//!   polynomials over exact integers.
//! * [`enumerate`] - exhaustive generation and the classification
//!   table with text, csv, json, latex, and dot emitters.
//!
//! The `examples/` directory shows one runnable program per capability;
//! the `quipu` binary exposes the same operations as subcommands.

pub mod canonical;
pub mod crswap;
pub mod enumerate;
pub mod invariants;
pub mod notation;
pub mod presentations;
pub mod translate;

pub use canonical::{canonical_form, is_isomorphic, CanonicalQuipu};
pub use enumerate::{classify, enumerate_nakayama, enumerate_quipus, EquivalenceClass};
pub use notation::{parse_object, Object, ParseError};
pub use presentations::{
    embed_nakayama, embed_quipu, MarkedQuipuQuiver, NakayamaPresentation, QuipuShape, Relation,
};
pub use translate::{derived_equivalent, equivalence_family, nakayama_to_quipu, quipu_to_nakayama};
