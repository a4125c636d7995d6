//! Kazhdan–Lusztig polynomials `P_{w∘v, w∘w}(q)` of covexillary Schubert
//! varieties in the classical types A, B, C and D.
//!
//! Two combinatorial methods are provided and can be checked against a
//! brute-force implementation of the classical Kazhdan–Lusztig recursion:
//!
//! * [`capacity_tree::kl_via_trees`] — counting labelled trees whose edges
//!   come from the linked pairs of an αβ-word;
//! * [`inductive::kl_via_inductive`] — a Zelevinsky-style recursion that
//!   merges two columns of the 𝔥-matrix at a time and sums products of
//!   Gaussian binomials;
//! * [`oracle::KlTable`] — the classical descent recursion with μ-corrections.
//!
//! The pipeline is: a [`triples::Triple`] determines a vexillary element
//! `w(τ)`; a second element `v ≥ w(τ)` determines a
//! [`triples::WeakTriple`]; the two give the [`triples::ABMatrix`] pair
//! (𝔥, 𝔎) whose profiles determine a [`capacity_tree::Capacity`].

pub mod capacity_tree;
pub mod inductive;
pub mod oracle;
pub mod pipeline;
pub mod polyq;
pub mod sample;
pub mod triples;
pub mod weyl;

pub use polyq::{q_binomial, QPoly};
pub use weyl::{LieType, WeylElement};
