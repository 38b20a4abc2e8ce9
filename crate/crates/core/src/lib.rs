//! Exact combinatorics of universal localisations, wide subcategories and
//! support τ-tilting modules over Nakayama algebras.

pub mod algebra;
pub mod arcs;
pub mod battery;
pub mod error;
pub mod hasse;
pub mod localise;
pub mod modcat;
pub mod oracle;
pub mod subcats;
pub mod tautilt;
pub mod verify;

pub use algebra::{Component, NakayamaAlgebra, Quotient, Shape};
pub use error::{Error, Result};
pub use localise::Localisation;
pub use modcat::{Indec, Map, Orbit, ProjDim, ProjPresentation};
