//! Autotopies, pseudoautomorphisms, `W(Q)` and the triality on `Atp(Q)`.
//!
//! Operators act on the right, as in the loops module.

mod atp;
mod psaut;
mod triple;
mod w;

pub use atp::{
    autotopy_group, canonical_triples, check_atp_triality, left_triple, m_of_atp, m_triple, middle_triple,
    proof_equalities_witness, right_triple, u_op, AtpGroup, AtpTrialityReport, MAtpReport, MAX_LOOP_ORDER,
};
pub use psaut::{
    is_pseudoautomorphism, pseudoautomorphism_group, pseudoautomorphism_witness, psaut_from_atp, psaut_search,
    PsAutReport, Pseudoautomorphism,
};
pub use triple::{autotopy_witness, is_autotopy, AutotopyTriple};
pub use w::{
    check_w_group, decompose_autotopy, loop_commutator, psi, psi_iso, r_pair, t_pseudo, Decomposition, PsiReport,
    WElement, WGroup, WReport,
};

use crate::gtriality::GTrialityError;
use crate::loops::LoopError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AutotopyError {
    #[error(transparent)]
    Loop(#[from] LoopError),
    #[error(transparent)]
    Triality(#[from] GTrialityError),
    #[error("loop of order {order} exceeds the cap of {cap}")]
    TooLarge { order: usize, cap: usize },
    #[error("loop is not Moufang")]
    NotMoufang,
}
