//! Convolution loops `Mor(C, FQ)` over a group-like coalgebra, operators on
//! `FQ` indexed by `C`, and the group `Atp_C(FQ)` with its triality.

mod atpc;
mod coalgebra;

pub use atpc::{
    atpc_membership, atpc_triality_checks, ConvContext, ConvTriple, ConvTrialityReport, GElem, Lifts, MOR_PAIR_LIMIT,
};
pub use coalgebra::{
    convolution_loop, convolve, g_membership, morphism_at, morphism_index, morphisms, ConvOperator, GMembership,
    GroupLikeCoalgebra, Morphism, MAX_CONV_ORDER,
};

use crate::loops::LoopError;

#[derive(Debug, thiserror::Error)]
pub enum ConvError {
    #[error("convolution loop of order {order} exceeds the cap {cap}")]
    TooLarge { order: u128, cap: usize },
    #[error(transparent)]
    Loop(#[from] LoopError),
}
