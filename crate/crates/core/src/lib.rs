//! Exact computational group and representation theory for the CPT groups of QED.
//!
//! The crate builds the finite groups Q×Z₂, Z₂³, D₄⋊Z₂ and their order-128 product,
//! computes conjugacy classes, irreducible representations and character tables by
//! two independent routes, and checks every table and group-theoretic statement in
//! the embedded reference fixtures.

pub mod cli;
pub mod cpt_models;
pub mod error;
pub mod exact_arith;
pub mod group_core;
pub mod repr_theory;

pub use error::{Error, Result};
