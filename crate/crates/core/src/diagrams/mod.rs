//! The Brauer algebra `B(n,N)`: diagrams, products with loop counting,
//! Jucys-Murphy elements and the partial closure map.

mod diagram;
mod element;
mod presentation;

pub use diagram::{
    parse_vertex_label, permutation_word, vertex_label, BrauerDiagram, Factorization, Generator,
};
pub use element::{jucys_murphy, power_sum, z_element, AlgebraElement};
pub use presentation::{
    relation_instances, verify_presentation, verify_presentation_with, Letter, RelationCheck, Word,
};
