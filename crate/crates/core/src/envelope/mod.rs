//! The universal enveloping algebra `U(g)` in a PBW basis, its Hopf
//! structure with triality, and `MH(U(Lie(O₀)))`.

mod checks;
mod mh;
mod pbw;

pub use checks::{
    adjoint_action, check_action_identity, check_ug_triality, circle, circle_words, p_span_check, ActionIdentityReport,
    PSpanReport, UgTrialityReport,
};
pub use mh::{check_envelope_relations, mh_envelope, CircleWord, EnvelopeRelationsReport, MhEnvelope, MhEnvelopeReport};
pub use pbw::{monomials_up_to, Envelope, LiftedAuto, Monomial, PbwElement, PbwTensor};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EnvelopeError {
    #[error("not a Lie algebra: {0}")]
    NotLie(String),
    #[error("matrix of size {rows}x{cols} does not act on a {expected}-dimensional algebra")]
    DimensionMismatch { expected: usize, rows: usize, cols: usize },
    #[error("not a bracket automorphism: fails on basis pair ({i}, {j})")]
    NotAutomorphism { i: usize, j: usize },
    #[error("matrix is singular")]
    Singular,
}
