use super::{GTrialityError, TrialityGroupLike};
use crate::loops::{FiniteLoop, Perm};
use serde::{Deserialize, Serialize};

pub const MAX_GROUP_ORDER: usize = 512;

/// A finite group given by its table together with automorphisms `ρ, σ`
/// generating an action of `S₃`. Exponents compose on the right:
/// `g^{ρσ} = (g^ρ)^σ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrialityGroup {
    group: FiniteLoop,
    rho: Perm,
    sigma: Perm,
    inv: Vec<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TrialityGroupJson {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    pub rho: Vec<usize>,
    pub sigma: Vec<usize>,
}

impl TrialityGroup {
    pub fn new(group: FiniteLoop, rho: Perm, sigma: Perm) -> Result<Self, GTrialityError> {
        let n = group.order();
        if n > MAX_GROUP_ORDER {
            return Err(GTrialityError::TooLarge { order: n, cap: MAX_GROUP_ORDER });
        }
        if rho.degree() != n || sigma.degree() != n {
            return Err(GTrialityError::DegreeMismatch { order: n });
        }
        if let Some(w) = group.associativity_witness() {
            return Err(GTrialityError::NotAGroup { witness: w.map(|i| i + 1) });
        }
        for (name, p) in [("rho", &rho), ("sigma", &sigma)] {
            for a in 0..n {
                for b in 0..n {
                    if p.apply(group.mul(a, b)) != group.mul(p.apply(a), p.apply(b)) {
                        return Err(GTrialityError::NotAutomorphism { which: name, witness: [a + 1, b + 1] });
                    }
                }
            }
        }
        if !sigma.then(&sigma).is_identity() {
            return Err(GTrialityError::S3Relation("sigma^2 = 1"));
        }
        if !rho.pow(3).is_identity() {
            return Err(GTrialityError::S3Relation("rho^3 = 1"));
        }
        if sigma.then(&rho) != rho.then(&rho).then(&sigma) {
            return Err(GTrialityError::S3Relation("sigma rho = rho^2 sigma"));
        }
        let inv = (0..n).map(|g| group.inv(g)).collect();
        Ok(TrialityGroup { group, rho, sigma, inv })
    }

    pub fn group(&self) -> &FiniteLoop {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn rho_perm(&self) -> &Perm {
        &self.rho
    }

    pub fn sigma_perm(&self) -> &Perm {
        &self.sigma
    }

    pub fn from_json(j: &TrialityGroupJson) -> Result<Self, GTrialityError> {
        if j.table.len() != j.order {
            return Err(GTrialityError::Json(format!("order {} but {} table rows", j.order, j.table.len())));
        }
        let rows = j
            .table
            .iter()
            .map(|r| r.iter().map(|&v| v.checked_sub(1).ok_or_else(|| GTrialityError::Json("entries are 1-based".into()))).collect())
            .collect::<Result<Vec<Vec<usize>>, _>>()?;
        let group = FiniteLoop::from_table(rows)?;
        let perm = |v: &[usize], name: &str| {
            Perm::from_one_based(v).ok_or_else(|| GTrialityError::Json(format!("{name} is not a permutation")))
        };
        TrialityGroup::new(group, perm(&j.rho, "rho")?, perm(&j.sigma, "sigma")?)
    }

    pub fn to_json(&self) -> TrialityGroupJson {
        TrialityGroupJson {
            order: self.order(),
            table: self.group.rows().into_iter().map(|r| r.into_iter().map(|v| v + 1).collect()).collect(),
            rho: self.rho.to_one_based(),
            sigma: self.sigma.to_one_based(),
        }
    }

    pub fn parse(text: &str) -> Result<Self, GTrialityError> {
        let j: TrialityGroupJson = serde_json::from_str(text).map_err(|e| GTrialityError::Json(e.to_string()))?;
        Self::from_json(&j)
    }
}

impl TrialityGroupLike for TrialityGroup {
    type Elem = usize;

    fn identity(&self) -> usize {
        0
    }

    fn mul(&self, a: &usize, b: &usize) -> usize {
        self.group.mul(*a, *b)
    }

    fn inv(&self, a: &usize) -> usize {
        self.inv[*a]
    }

    fn rho(&self, a: &usize) -> usize {
        self.rho.apply(*a)
    }

    fn sigma(&self, a: &usize) -> usize {
        self.sigma.apply(*a)
    }

    fn elements(&self) -> Vec<usize> {
        (0..self.order()).collect()
    }
}
