//! Cocommutative Hopf algebras with triality, the Moufang–Hopf algebra
//! `MH(H)` and the relations of `Doro(U)` in concrete targets.

mod carriers;
mod doro;
mod linear;
mod mh;
mod moufang;
mod triality;

pub use carriers::{GroupAlgebra, LoopAlgebra};
pub use doro::{
    bundled_fixtures, check_mult_alg_identities, doro_relation_witness, multiplication_operators, verify_doro_target,
    doro_relation_failures, DoroFixture, DoroTargetReport, Matrices, MultAlgReport, MultiplicationOperators,
    OperatorAlgebra, RelationWitness, Symbol, Target, RELATION_PARTS,
};
pub use linear::{Lin, SparseEchelon};
pub use mh::{check_commutation, group_left, mh_matches_mloop, mh_subalgebra, MhReport, MhSubalgebra, StarAlgebra};
pub use moufang::{check_moufang_hopf, nonassociativity_witness, MoufangHopfReport};
pub use triality::{
    check_generator_independence, check_hopf_axioms, check_hopf_triality, Check, GeneratorIndependence, HopfAxiomReport,
    HopfTrialityReport, Regenerated, Regeneration,
};

use crate::qcore::Rational;
use std::fmt::Debug;
use std::hash::Hash;

pub type Tensor<B> = Lin<(B, B)>;

/// A unital bialgebra with antipode, given on a basis. The product need not
/// be associative.
pub trait Bialgebra {
    type Basis: Clone + Ord + Hash + Debug;

    fn unit_basis(&self) -> Self::Basis;
    fn mul_basis(&self, a: &Self::Basis, b: &Self::Basis) -> Lin<Self::Basis>;
    fn coproduct_basis(&self, a: &Self::Basis) -> Tensor<Self::Basis>;
    fn counit_basis(&self, a: &Self::Basis) -> Rational;
    fn antipode_basis(&self, a: &Self::Basis) -> Lin<Self::Basis>;

    fn one(&self) -> Lin<Self::Basis> {
        Lin::basis(self.unit_basis())
    }

    fn mul(&self, u: &Lin<Self::Basis>, v: &Lin<Self::Basis>) -> Lin<Self::Basis> {
        u.bilinear(v, |a, b| self.mul_basis(a, b))
    }

    fn coproduct(&self, u: &Lin<Self::Basis>) -> Tensor<Self::Basis> {
        u.map(|a| self.coproduct_basis(a))
    }

    /// `(Δ ⊗ id)Δ`.
    fn coproduct3(&self, u: &Lin<Self::Basis>) -> Lin<(Self::Basis, Self::Basis, Self::Basis)> {
        let mut out = Lin::zero();
        for ((a, b), c) in self.coproduct(u).iter() {
            for ((x, y), d) in self.coproduct_basis(a).iter() {
                out.add_term((x.clone(), y.clone(), b.clone()), &(c * d));
            }
        }
        out
    }

    fn counit(&self, u: &Lin<Self::Basis>) -> Rational {
        u.iter().map(|(a, c)| c * &self.counit_basis(a)).sum()
    }

    fn antipode(&self, u: &Lin<Self::Basis>) -> Lin<Self::Basis> {
        u.map(|a| self.antipode_basis(a))
    }

    /// `Σ f(u₁, u₂)` over the coproduct of `u`.
    fn sweedler<F>(&self, u: &Lin<Self::Basis>, mut f: F) -> Lin<Self::Basis>
    where
        F: FnMut(&Self::Basis, &Self::Basis) -> Lin<Self::Basis>,
    {
        let mut out = Lin::zero();
        for ((a, b), c) in self.coproduct(u).iter() {
            out.add_scaled(&f(a, b), c);
        }
        out
    }
}

/// A cocommutative Hopf algebra with automorphisms `ρ`, `σ`, written on the
/// left.
pub trait TrialityHopf: Bialgebra {
    fn rho_basis(&self, a: &Self::Basis) -> Lin<Self::Basis>;
    fn sigma_basis(&self, a: &Self::Basis) -> Lin<Self::Basis>;

    fn rho(&self, u: &Lin<Self::Basis>) -> Lin<Self::Basis> {
        u.map(|a| self.rho_basis(a))
    }

    fn sigma(&self, u: &Lin<Self::Basis>) -> Lin<Self::Basis> {
        u.map(|a| self.sigma_basis(a))
    }

    fn rho_pow(&self, u: &Lin<Self::Basis>, k: u32) -> Lin<Self::Basis> {
        (0..k % 3).fold(u.clone(), |acc, _| self.rho(&acc))
    }

    /// `P(u) = Σ σ(u₁)S(u₂)`.
    fn p_map(&self, u: &Lin<Self::Basis>) -> Lin<Self::Basis> {
        self.sweedler(u, |a, b| self.mul(&self.sigma_basis(a), &self.antipode_basis(b)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HopfError {
    #[error(transparent)]
    Loop(#[from] crate::loops::LoopError),
    #[error("loop is not Moufang: {0}")]
    NotMoufang(String),
    #[error("the two * formulas disagree on basis pair {0}")]
    FormulaMismatch(String),
}
