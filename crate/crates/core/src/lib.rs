//! Bound quiver algebras over prime fields.
//!
//! The crate builds `Λ = KQ/I` from a quiver with relations, tests for a
//! symmetrizing form, works with right modules given as quiver
//! representations, computes syzygies, Ω-periods and the Auslander–Reiten
//! translate, and classifies the symmetric algebras of finite type whose
//! simple modules have Ω-period dividing four.

pub mod algebra;
pub mod census;
pub mod classify;
pub mod error;
pub mod families;
pub mod linalg;
pub mod quiver;
pub mod rep;
pub mod specfile;
pub mod syzygy;

pub use error::{Error, Result};
