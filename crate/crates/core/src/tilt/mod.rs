//! Approximations, Sub/Fac membership, tilting modules and the canonical
//! tilting chain.

mod approx;
mod search;
mod subfac;
mod tilting;

pub use approx::{AddCategory, Approximation, Side};
pub use search::{candidate_indecomposables, search_tilting, SearchConfig, SearchMode, SearchResult};
pub use subfac::{
    add_coresolution, add_resolution, fac_dim, i_dominant_dimension, in_fac, in_sub, sub_codim, AddCoresolution,
    AddResolution, Length,
};
pub use tilting::{
    chain_skeleton, ext_order_compare, is_cotilting, is_tilting, mutate, tilting_chain, ChainSkeleton, ExtOrder,
    TiltingCertificate, TiltingChain, TiltingRefusal,
};
