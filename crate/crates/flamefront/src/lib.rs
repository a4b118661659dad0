//! Boundary-integral simulation of expanding premixed flame fronts in two
//! dimensions: a closed marker front separating fresh fuel from burnt gas,
//! with realistic density drop across the front, curvature/stretch correction
//! of the burning speed, an optional frozen synthetic turbulence field, and a
//! small-expansion cross-check solver.

pub mod error;
pub mod geometry;
pub mod spectral;

pub use error::{FlameError, Result};
pub use geometry::{build_frame, Curve, Frame};
