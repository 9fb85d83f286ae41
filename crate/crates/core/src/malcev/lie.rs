use super::structure::StructureConstants;
use super::MalcevError;
use crate::qcore::{QMatrix, Rational, Subspace};
use serde::{Deserialize, Serialize};

/// A Lie algebra with automorphisms `ρ`, `σ` (matrices acting on
/// coordinate columns) generating a quotient of `S₃`.
#[derive(Clone, Debug)]
pub struct LieWithTriality {
    bracket: StructureConstants,
    rho: QMatrix,
    sigma: QMatrix,
}

impl LieWithTriality {
    pub fn new(bracket: StructureConstants, rho: QMatrix, sigma: QMatrix) -> Result<Self, MalcevError> {
        let g = Self::unchecked(bracket, rho, sigma)?;
        if let Some((i, j)) = g.bracket.anticommutativity_witness() {
            return Err(MalcevError::NotLie(format!("[e{i}, e{j}] is not anticommutative")));
        }
        if let Some([i, j, k]) = g.bracket.jacobi_witness() {
            return Err(MalcevError::NotLie(format!("Jacobi fails on (e{i}, e{j}, e{k})")));
        }
        for (name, m) in [("rho", &g.rho), ("sigma", &g.sigma)] {
            if let Some((i, j)) = g.bracket.automorphism_witness(m) {
                return Err(MalcevError::NotAutomorphism { which: name.into(), i, j });
            }
        }
        if !g.s3_relations_hold() {
            return Err(MalcevError::S3Relation);
        }
        Ok(g)
    }

    /// Only dimensions are checked; used for deliberately broken pairs.
    pub fn unchecked(bracket: StructureConstants, rho: QMatrix, sigma: QMatrix) -> Result<Self, MalcevError> {
        let n = bracket.dim();
        for m in [&rho, &sigma] {
            if m.rows() != n || m.cols() != n {
                return Err(MalcevError::DimensionMismatch { expected: n, rows: m.rows(), cols: m.cols() });
            }
        }
        Ok(LieWithTriality { bracket, rho, sigma })
    }

    pub fn dim(&self) -> usize {
        self.bracket.dim()
    }

    pub fn bracket(&self) -> &StructureConstants {
        &self.bracket
    }

    pub fn rho(&self) -> &QMatrix {
        &self.rho
    }

    pub fn sigma(&self) -> &QMatrix {
        &self.sigma
    }

    /// `σ² = ρ³ = id` and `σρ = ρ²σ`.
    pub fn s3_relations_hold(&self) -> bool {
        let id = QMatrix::identity(self.dim());
        let (r, s) = (&self.rho, &self.sigma);
        &(s * s) == &id && r.pow(3) == id && &(s * r) == &(&(r * r) * s)
    }

    /// `Σ sig(τ) τ` over `{id, ρ, ρ², σ, ρσ, ρ²σ}`, the operator of the
    /// six-term identity.
    pub fn six_term_operator(&self) -> QMatrix {
        let (r, s) = (&self.rho, &self.sigma);
        let r2 = r * r;
        let id = QMatrix::identity(self.dim());
        let pos = &(&id + r) + &r2;
        let neg = &(s + &(r * s)) + &(&r2 * s);
        &pos - &neg
    }

    /// The same sum enumerated as `σⁱρʲ`.
    pub fn signed_sum_operator(&self) -> QMatrix {
        let (r, s) = (&self.rho, &self.sigma);
        let mut acc = QMatrix::zeros(self.dim(), self.dim());
        for i in 0..2u32 {
            let si = s.pow(i);
            for j in 0..3u32 {
                let term = &si * &r.pow(j);
                acc = if i == 0 { &acc + &term } else { &acc - &term };
            }
        }
        acc
    }

    pub fn to_json_value(&self) -> LieTrialityJson {
        LieTrialityJson {
            structure: self.bracket.to_json_value(),
            rho: matrix_rows(&self.rho),
            sigma: matrix_rows(&self.sigma),
        }
    }

    pub fn from_json(text: &str) -> Result<Self, MalcevError> {
        let raw: LieTrialityJson = serde_json::from_str(text).map_err(|e| MalcevError::Json(e.to_string()))?;
        let bracket = raw.structure.into_constants()?;
        if !bracket.is_anticommutative() {
            return Err(MalcevError::Json("a Lie algebra needs a \"bracket\" table".into()));
        }
        let square = |rows: Vec<Vec<Rational>>| {
            if rows.iter().any(|r| r.len() != rows.len()) {
                return Err(MalcevError::Json("automorphism matrices must be square".into()));
            }
            Ok(if rows.is_empty() { QMatrix::zeros(0, 0) } else { QMatrix::from_rows(rows) })
        };
        Self::new(bracket, square(raw.rho)?, square(raw.sigma)?)
    }
}

fn matrix_rows(m: &QMatrix) -> Vec<Vec<Rational>> {
    (0..m.rows()).map(|i| m.row(i).to_vec()).collect()
}

/// JSON form: structure constants (flattened) plus `rho`, `sigma` as row lists.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LieTrialityJson {
    #[serde(flatten)]
    pub structure: super::structure::ScJson,
    pub rho: Vec<Vec<Rational>>,
    pub sigma: Vec<Vec<Rational>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LieTrialityReport {
    pub dim: usize,
    pub holds: bool,
    /// First basis vector `a` with `Σ sig(τ)τ(a) ≠ 0`.
    pub witness: Option<usize>,
    /// The `ρⁱσ` and `σⁱρʲ` enumerations give the same operator.
    pub forms_agree: bool,
}

pub fn check_lie_triality(g: &LieWithTriality) -> LieTrialityReport {
    let six = g.six_term_operator();
    let witness = (0..g.dim()).find(|&a| six.column(a).iter().any(|c| !c.is_zero()));
    LieTrialityReport {
        dim: g.dim(),
        holds: witness.is_none(),
        witness,
        forms_agree: six == g.signed_sum_operator(),
    }
}

/// `E(λ; m) = ker(m - λ)`.
pub fn eigenspace(m: &QMatrix, lambda: &Rational) -> Subspace {
    let shift = QMatrix::identity(m.rows()).scale(lambda);
    (m - &shift).kernel()
}

#[derive(Clone, Debug, Serialize)]
pub struct EigenOneReport {
    pub e1_rho_dim: usize,
    pub e1_sigma_dim: usize,
    pub included: bool,
}

/// Decides `E(1; ρ) ⊆ E(1; σ)`.
pub fn eigen_one_criterion(g: &LieWithTriality) -> EigenOneReport {
    let one = Rational::one();
    let er = eigenspace(&g.rho, &one);
    let es = eigenspace(&g.sigma, &one);
    EigenOneReport { e1_rho_dim: er.dim(), e1_sigma_dim: es.dim(), included: er.is_subspace_of(&es) }
}

/// `sl₂` on the basis `(e, f, h)`.
pub fn sl2() -> StructureConstants {
    let mut s = StructureConstants::zero(3, true);
    s.set(0, 1, 2, Rational::one());
    s.set(2, 0, 0, Rational::from_integer(2));
    s.set(2, 1, 1, Rational::from_integer(-2));
    s
}

/// The nonabelian 2-dimensional Lie algebra `[x, y] = y`.
pub fn affine_line() -> StructureConstants {
    let mut s = StructureConstants::zero(2, true);
    s.set(0, 1, 1, Rational::one());
    s
}

/// `s ⊕ s ⊕ s` with `ρ(a,b,c) = (c,a,b)` and `σ(a,b,c) = (b,a,c)`.
pub fn wreath(s: &StructureConstants) -> LieWithTriality {
    let d = s.dim();
    let bracket = s.direct_sum(s).direct_sum(s);
    let block = |perm: [usize; 3]| {
        // copy i of the input goes to copy perm[i]
        let mut m = QMatrix::zeros(3 * d, 3 * d);
        for (i, &p) in perm.iter().enumerate() {
            for k in 0..d {
                m[(p * d + k, i * d + k)] = Rational::one();
            }
        }
        m
    };
    LieWithTriality::new(bracket, block([1, 2, 0]), block([1, 0, 2])).expect("permuting summands is a triality")
}

pub fn trivial_triality(s: &StructureConstants) -> LieWithTriality {
    let id = QMatrix::identity(s.dim());
    LieWithTriality::new(s.clone(), id.clone(), id).expect("identity automorphisms")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_action_holds() {
        let g = trivial_triality(&sl2());
        let rep = check_lie_triality(&g);
        assert!(rep.holds && rep.forms_agree);
        assert!(eigen_one_criterion(&g).included);
    }

    #[test]
    fn wreath_algebras_hold() {
        for s in [sl2(), affine_line()] {
            let g = wreath(&s);
            let rep = check_lie_triality(&g);
            assert!(rep.holds && rep.forms_agree, "{rep:?}");
            assert!(eigen_one_criterion(&g).included);
        }
    }

    #[test]
    fn swapping_only_fails() {
        // ρ = id with σ a nontrivial swap: E(1;ρ) is everything, σ is not the identity
        let g = wreath(&affine_line());
        let id = QMatrix::identity(6);
        let h = LieWithTriality::new(g.bracket().clone(), id, g.sigma().clone()).unwrap();
        let rep = check_lie_triality(&h);
        assert!(!rep.holds);
        assert!(!eigen_one_criterion(&h).included);
    }

    #[test]
    fn rejects_non_automorphism() {
        let mut rho = QMatrix::identity(3);
        rho[(0, 0)] = Rational::from_integer(2);
        let err = LieWithTriality::new(sl2(), rho, QMatrix::identity(3)).unwrap_err();
        assert!(matches!(err, MalcevError::NotAutomorphism { .. }));
    }

    #[test]
    fn json_round_trip() {
        let g = wreath(&affine_line());
        let text = serde_json::to_string(&g.to_json_value()).unwrap();
        let back = LieWithTriality::from_json(&text).unwrap();
        assert_eq!(back.rho(), g.rho());
        assert_eq!(back.bracket(), g.bracket());
    }
}
