//! Exact verification engine for germs of finite covers of smooth complex
//! surfaces: ramification divisors, branch curves, singularity types, braid
//! monodromies, fundamental-group presentations and monodromy groups, all
//! computed with exact arithmetic.

pub mod error;
pub mod germs;
pub mod homenum;
pub mod braid;
pub mod label;
pub mod perm;
pub mod present;
pub mod series;
pub mod singclass;

pub use error::{Error, Result};
