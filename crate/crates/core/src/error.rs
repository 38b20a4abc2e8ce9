use thiserror::Error;

use crate::modcat::Indec;

/// Errors raised by the engine.
///
/// `StructureViolation` and `PropertyViolation` signal that a structural fact
/// the algorithms rely on did not hold for some input; they are never
/// expected on a valid algebra and are surfaced instead of being patched.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Kupisch series: {0}")]
    InvalidKupisch(String),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("{0} is not a module over this algebra")]
    InvalidModule(Indec),

    #[error("projective module {0} has no Auslander-Reiten translate")]
    ProjectiveHasNoTau(Indec),

    #[error("invalid map P{source_vertex} -> P{target_vertex} with shift {shift}: {reason}")]
    InvalidMap {
        source_vertex: usize,
        target_vertex: usize,
        shift: usize,
        reason: String,
    },

    #[error("not a wide subcategory: {0}")]
    NotWide(String),

    #[error("not a torsion class: {0}")]
    NotTorsion(String),

    #[error("property ({0}) violated: {1}")]
    PropertyViolation(String, String),

    #[error("structure violation: {0}")]
    StructureViolation(String),

    #[error("localisation does not annihilate any vertex")]
    NotAnnihilating,

    #[error("algebra is not one of the uniform families A_n^h / Ã_n^h")]
    NotUniformFamily,

    #[error("algebra is not a self-injective Ã_n^h with n, h >= 2")]
    NotSelfInjective,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
