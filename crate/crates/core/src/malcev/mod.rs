//! Malcev algebras, Cayley algebras, the orthogonal Lie algebra `o(O, n)`
//! with its triality, and the operator realization of `Lie(O₀)`.

pub mod cayley;
pub mod lie;
pub mod nalt;
pub mod of_malcev;
pub mod ortho;
pub mod structure;

pub use cayley::{build_cayley, unit_product, CayleyAlgebra};
pub use lie::{
    affine_line, check_lie_triality, eigen_one_criterion, eigenspace, sl2, trivial_triality, wreath, EigenOneReport,
    LieTrialityReport, LieWithTriality,
};
pub use nalt::{check_malcev, malcev_witness, nalt, nonflexible_plane};
pub use of_malcev::{lie_of_malcev, LieOfMalcev, LieOfMalcevReport};
pub use ortho::{derivations, ortho_lie, skew_space, triality_autos_o, OrthoLie, OrthoTriality, Part};
pub use structure::{ScJson, StructureConstants};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MalcevError {
    #[error("Cayley parameters must be nonzero")]
    ZeroParameter,
    #[error("alternative law fails on basis triple {witness:?}")]
    NotAlternative { witness: [usize; 3] },
    #[error("norm is not multiplicative on (e{i}, e{j})")]
    NormNotMultiplicative { i: usize, j: usize },
    #[error("not a Lie algebra: {0}")]
    NotLie(String),
    #[error("{which} is not an automorphism: fails on basis pair ({i}, {j})")]
    NotAutomorphism { which: String, i: usize, j: usize },
    #[error("rho and sigma do not satisfy sigma^2 = rho^3 = id, sigma rho = rho^2 sigma")]
    S3Relation,
    #[error("matrix of size {rows}x{cols} does not act on a {expected}-dimensional algebra")]
    DimensionMismatch { expected: usize, rows: usize, cols: usize },
    #[error("product leaves the subspace")]
    NotClosed,
    #[error("summands are not independent")]
    NotDirect,
    #[error("companion maps are not unique")]
    CompanionsNotUnique,
    #[error("no companion maps for basis element {0}")]
    CompanionsMissing(usize),
    #[error("relation failure: {0}")]
    RelationFailure(String),
    #[error("{0}")]
    Qcore(String),
    #[error("invalid JSON: {0}")]
    Json(String),
}
