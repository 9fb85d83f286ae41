use super::{Bialgebra, HopfError, Lin, Tensor, TrialityHopf};
use crate::gtriality::TrialityGroupLike;
use crate::loops::{check_moufang, FiniteLoop};
use crate::qcore::Rational;

/// The group algebra `F[G]`: `Δ(g) = g ⊗ g`, `ε(g) = 1`, `S(g) = g⁻¹`, with
/// `ρ`, `σ` extended linearly.
#[derive(Clone, Debug)]
pub struct GroupAlgebra<G> {
    group: G,
}

impl<G: TrialityGroupLike> GroupAlgebra<G> {
    pub fn new(group: G) -> Self {
        GroupAlgebra { group }
    }

    pub fn group(&self) -> &G {
        &self.group
    }

    pub fn basis(&self) -> Vec<G::Elem> {
        self.group.elements()
    }
}

impl<G: TrialityGroupLike> Bialgebra for GroupAlgebra<G> {
    type Basis = G::Elem;

    fn unit_basis(&self) -> G::Elem {
        self.group.identity()
    }

    fn mul_basis(&self, a: &G::Elem, b: &G::Elem) -> Lin<G::Elem> {
        Lin::basis(self.group.mul(a, b))
    }

    fn coproduct_basis(&self, a: &G::Elem) -> Tensor<G::Elem> {
        Lin::basis((a.clone(), a.clone()))
    }

    fn counit_basis(&self, _: &G::Elem) -> Rational {
        Rational::one()
    }

    fn antipode_basis(&self, a: &G::Elem) -> Lin<G::Elem> {
        Lin::basis(self.group.inv(a))
    }
}

impl<G: TrialityGroupLike> TrialityHopf for GroupAlgebra<G> {
    fn rho_basis(&self, a: &G::Elem) -> Lin<G::Elem> {
        Lin::basis(self.group.rho(a))
    }

    fn sigma_basis(&self, a: &G::Elem) -> Lin<G::Elem> {
        Lin::basis(self.group.sigma(a))
    }
}

/// The loop algebra `F[Q]` of a Moufang loop, group-like on the basis `Q`.
#[derive(Clone, Debug)]
pub struct LoopAlgebra {
    q: FiniteLoop,
}

impl LoopAlgebra {
    pub fn new(q: FiniteLoop) -> Result<Self, HopfError> {
        let rep = check_moufang(&q, "loop");
        if let Some(c) = rep.first_failure() {
            return Err(HopfError::NotMoufang(format!("{} fails at {:?}", c.name, c.witness)));
        }
        Ok(LoopAlgebra { q })
    }

    pub fn loop_(&self) -> &FiniteLoop {
        &self.q
    }

    pub fn basis(&self) -> Vec<usize> {
        (0..self.q.order()).collect()
    }
}

impl Bialgebra for LoopAlgebra {
    type Basis = usize;

    fn unit_basis(&self) -> usize {
        self.q.unit()
    }

    fn mul_basis(&self, a: &usize, b: &usize) -> Lin<usize> {
        Lin::basis(self.q.mul(*a, *b))
    }

    fn coproduct_basis(&self, a: &usize) -> Tensor<usize> {
        Lin::basis((*a, *a))
    }

    fn counit_basis(&self, _: &usize) -> Rational {
        Rational::one()
    }

    fn antipode_basis(&self, a: &usize) -> Lin<usize> {
        Lin::basis(self.q.inv(*a))
    }
}
