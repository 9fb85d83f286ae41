use crate::loops::{FiniteLoop, Perm};
use serde::Serialize;

/// A triple of permutations `(A₁, A₂, A₃)` of a loop, multiplied
/// componentwise with right action.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct AutotopyTriple {
    pub a1: Perm,
    pub a2: Perm,
    pub a3: Perm,
}

impl AutotopyTriple {
    pub fn new(a1: Perm, a2: Perm, a3: Perm) -> Self {
        AutotopyTriple { a1, a2, a3 }
    }

    pub fn identity(n: usize) -> Self {
        let id = Perm::identity(n);
        AutotopyTriple { a1: id.clone(), a2: id.clone(), a3: id }
    }

    pub fn then(&self, other: &AutotopyTriple) -> AutotopyTriple {
        AutotopyTriple { a1: self.a1.then(&other.a1), a2: self.a2.then(&other.a2), a3: self.a3.then(&other.a3) }
    }

    pub fn inverse(&self) -> AutotopyTriple {
        AutotopyTriple { a1: self.a1.inverse(), a2: self.a2.inverse(), a3: self.a3.inverse() }
    }

    pub fn is_identity(&self) -> bool {
        self.a1.is_identity() && self.a2.is_identity() && self.a3.is_identity()
    }

    /// `(JA₂J, A₃, JA₁J)`.
    pub fn rho(&self, j: &Perm) -> AutotopyTriple {
        AutotopyTriple { a1: self.a2.conjugate_by(j), a2: self.a3.clone(), a3: self.a1.conjugate_by(j) }
    }

    /// `(A₃, JA₂J, A₁)`.
    pub fn sigma(&self, j: &Perm) -> AutotopyTriple {
        AutotopyTriple { a1: self.a3.clone(), a2: self.a2.conjugate_by(j), a3: self.a1.clone() }
    }

    pub fn components(&self) -> [&Perm; 3] {
        [&self.a1, &self.a2, &self.a3]
    }
}

/// First pair `(x, y)` with `(xy)A₁ ≠ (xA₂)(yA₃)`.
pub fn autotopy_witness(q: &FiniteLoop, t: &AutotopyTriple) -> Option<(usize, usize)> {
    let n = q.order();
    (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .find(|&(x, y)| t.a1.apply(q.mul(x, y)) != q.mul(t.a2.apply(x), t.a3.apply(y)))
}

pub fn is_autotopy(q: &FiniteLoop, t: &AutotopyTriple) -> bool {
    autotopy_witness(q, t).is_none()
}
