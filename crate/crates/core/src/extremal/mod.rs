//! Graphs with small hopping throttling number from the grid
//! characterization, kangaroo families, and the forbidden induced subgraphs
//! for throttling numbers near `n`.

mod atlas;
mod forbidden;
mod kangaroo;

pub use atlas::{generate_th_eq, generate_th_le, grid_graph, CharParams, MAX_ATLAS_T};
pub use forbidden::{
    classify_extreme, forbidden_family, generate_gk, minimize_by_containment, minimize_pairwise, ExtremeVerdict,
};
pub use kangaroo::{
    check_kangaroo, compositions, generate_kangaroos, recognize_kangaroo, KangarooStructure, MAX_KANGAROO_VERTICES,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExtremalError {
    #[error("t = {t} is outside the supported range 1..={max}")]
    AtlasRange { t: usize, max: usize },
    #[error("forbidden families are generated for k in 0..=1, got {0}")]
    UnsupportedK(usize),
    #[error("composition parts must be positive and nonempty, got {0:?}")]
    BadComposition(Vec<usize>),
    #[error("kangaroos for {parts:?} need at least {min} vertices; the cap is {max}")]
    SizeCap { parts: Vec<usize>, min: usize, max: usize },
}
