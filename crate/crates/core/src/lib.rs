//! Tools for certifying that graphs are rigid in `R^d`.
//!
//! The crate combines a randomized exact-rank rigidity test with the
//! combinatorial route through rigid partitions: colourings of the vertices
//! into `d + 1` parts whose pairwise colour classes are connected and whose
//! parts admit monochromatic cut hierarchies. A verified partition yields a
//! limit framework and a quantitative lower bound on the stiffness spectrum.
//! Around this core sit constructors for partitions, checkers for the
//! pseudo-random graph properties that guarantee them, seeded random graph
//! generators, greedy rigid-component growth and reproducible experiments.

// `!(x >= 0.0)` style guards deliberately reject NaN along with out-of-range values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod algebra;
pub mod cli;
pub mod component;
pub mod construct;
pub mod experiments;
pub mod generators;
pub mod graph;
pub mod partition;
pub mod properties;
pub mod report;
pub mod rigidity;
pub mod rng;
