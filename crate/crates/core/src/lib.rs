//! Exact computations with finite-dimensional bound quiver algebras and
//! their modules: resolutions, Ext, tilting modules, dominant dimension and
//! quasi-hereditary structures.

pub mod endo;
pub mod error;
pub mod classify;
pub mod exactla;
pub mod fixtures;
pub mod homo;
pub mod input;
pub mod pathalg;
pub mod qh;
pub mod repmod;
pub mod tilt;

pub use error::{Error, Result};
