//! Canonical labelling and automorphism groups of vertex-coloured graphs.

mod canon;
mod group;
mod refine;

use thiserror::Error;

pub use canon::{
    canonical_form, canonical_key, is_isomorphic, pair_key, CanonicalForm, CanonicalKey, VertexColoring,
};
pub use group::{aut_fixing_bag, Perm, PermGroup, DEFAULT_GROUP_CAP};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymmetryError {
    #[error("automorphism group exceeds the cap of {cap} elements")]
    GroupTooLarge { cap: usize },
}
