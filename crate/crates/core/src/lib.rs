//! Decide whether a finite set of patterns is unavoidable for the members
//! of a graph class with path-width at most `k`.
//!
//! The search walks smooth path-decompositions bag by bag. A node is a pair
//! `(U, H)`: the current bag `U` and the graph `H` of everything introduced
//! so far, minus the edges inside `U`. Pairs that already contain a pattern,
//! or that no class member can contain, are dropped; the remaining pairs are
//! tried as counterexamples by adding edges inside `U`.

pub mod class;
pub mod containment;
pub mod decomposition;
pub mod graph;
pub mod named;
pub mod search;
pub mod symmetry;
