//! Minimal resolutions, homological dimensions and Ext.

mod ext;
mod resolution;

pub use ext::{ext, ext_dim, ext_dim_injective, ext_dims, ext_vanishes, ExtGroup};
pub use resolution::{gldim, id, min_inj_coresolution, min_proj_resolution, pd, Bounded, Coresolution, Resolution};
