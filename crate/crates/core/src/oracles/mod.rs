//! Closed-form resolutions used to cross-check the engine: the standard
//! (bar) crossed resolution of any finite group and the small resolution of
//! a finite cyclic group.

mod bar;
mod cyclic;

pub use bar::{check_bar, BarResolution};
pub use cyclic::{cyclic_presentation, cyclic_resolution};
