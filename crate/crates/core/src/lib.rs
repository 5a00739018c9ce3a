//! Active Learning Method (ALM) modeling together with morphological S-norm and T-norm
//! operators.
//!
//! - [`morphology`]: hit-or-miss, thinning and thickening on binary images.
//! - [`string_matrix`]: square matrices of `{0,1,*}` strings with `Save`, `L`, `R`, `T`, `L'`.
//! - [`extended`]: Extended Thinning / Extended Thickening built from the two above.
//! - [`harness`]: randomized checks of the norm laws and De Morgan duality.
//! - [`alm`]: projection, Ink Drop Spread, center-of-gravity and skeleton narrow paths.
//! - [`datagen`]: synthetic datasets.

pub mod alm;
pub mod datagen;
pub mod error;
pub mod extended;
pub mod harness;
pub mod io;
pub mod morphology;
pub mod string_matrix;

pub use error::{Error, Result};
