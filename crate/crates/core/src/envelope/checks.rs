use super::pbw::{Envelope, Monomial, PbwElement};
use crate::hopf::{check_hopf_triality, Bialgebra, Lin, SparseEchelon, TrialityHopf};
use crate::malcev::{eigenspace, LieWithTriality};
use crate::qcore::Rational;
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct UgTrialityReport {
    pub dim: usize,
    pub degree: usize,
    pub monomials: usize,
    pub passed: bool,
    pub witness: Option<String>,
}

/// The triality identity of `U(g)` on every PBW monomial of degree `≤ d`.
pub fn check_ug_triality(g: &LieWithTriality, d: usize) -> UgTrialityReport {
    let u = Envelope::with_triality(g);
    let basis = u.monomials(d);
    let rep = check_hopf_triality(&u, &basis);
    UgTrialityReport { dim: g.dim(), degree: d, monomials: basis.len(), passed: rep.passed, witness: rep.witness }
}

/// `x·a = Σ x₁ a S(x₂)`.
pub fn adjoint_action(u: &Envelope, x: &PbwElement, a: &PbwElement) -> PbwElement {
    u.sweedler(x, |p, q| u.mul(&u.mul(&Lin::basis(p.clone()), a), &u.antipode_basis(q)))
}

#[derive(Clone, Debug, Serialize)]
pub struct ActionIdentityReport {
    pub dim: usize,
    pub degree: usize,
    pub monomials: usize,
    pub passed: bool,
    /// `(x, a)` with `x` a monomial and `a` a basis index.
    pub witness: Option<String>,
}

/// `ε(x)a − P(x)·σ(a) + P(x)·ρ(a) − ρ²σ(P(x))·ρσ(a) + ρ²σ(P(x))·ρ²(a)
/// − ε(x)ρ²(σ(a)) = 0` for monomials `x` of degree `≤ d`.
pub fn check_action_identity(g: &LieWithTriality, d: usize) -> ActionIdentityReport {
    let u = Envelope::with_triality(g);
    let basis = u.monomials(d);
    let n = g.dim();
    let gens: Vec<PbwElement> = (0..n).map(|i| u.generator(i)).collect();
    let sig: Vec<PbwElement> = gens.iter().map(|a| u.sigma(a)).collect();
    let rho: Vec<PbwElement> = gens.iter().map(|a| u.rho(a)).collect();
    let rho_sig: Vec<PbwElement> = sig.iter().map(|a| u.rho(a)).collect();
    let rho2: Vec<PbwElement> = rho.iter().map(|a| u.rho(a)).collect();
    let rho2_sig: Vec<PbwElement> = rho_sig.iter().map(|a| u.rho(a)).collect();

    let mut witness = None;
    'outer: for x in &basis {
        let xl = Lin::basis(x.clone());
        let eps = u.counit(&xl);
        let p = u.p_map(&xl);
        let q = u.rho_pow(&u.sigma(&p), 2);
        for a in 0..n {
            let mut total = gens[a].scaled(&eps);
            total.add_scaled(&adjoint_action(&u, &p, &sig[a]), &Rational::from_integer(-1));
            total.add_assign(&adjoint_action(&u, &p, &rho[a]));
            total.add_scaled(&adjoint_action(&u, &q, &rho_sig[a]), &Rational::from_integer(-1));
            total.add_assign(&adjoint_action(&u, &q, &rho2[a]));
            total.add_scaled(&rho2_sig[a], &-eps.clone());
            if !total.is_zero() {
                witness = Some(format!("({x:?}, x{a})"));
                break 'outer;
            }
        }
    }
    ActionIdentityReport { dim: n, degree: d, monomials: basis.len(), passed: witness.is_none(), witness }
}

/// `a ∘ x = ax + xa`.
pub fn circle(u: &impl Bialgebra<Basis = Monomial>, a: &PbwElement, x: &PbwElement) -> PbwElement {
    u.mul(a, x).plus(&u.mul(x, a))
}

/// `a_n ∘ (⋯ (a₂ ∘ a₁))` for every word in `gens` of length `≤ d`, the
/// empty word giving `1`.
pub fn circle_words(u: &impl Bialgebra<Basis = Monomial>, gens: &[PbwElement], d: usize) -> Vec<Vec<PbwElement>> {
    let mut layers = vec![vec![u.one()]];
    for k in 0..d {
        let next = layers[k].iter().flat_map(|x| gens.iter().map(move |a| circle(u, a, x))).collect();
        layers.push(next);
    }
    layers
}

#[derive(Clone, Debug, Serialize)]
pub struct PSpanReport {
    pub degree: usize,
    pub e_minus_dim: usize,
    pub p_dim: usize,
    pub circle_dim: usize,
    pub p_in_circle: bool,
    pub circle_in_p: bool,
    /// A basis vector of `E(1; σ)` with `P(xa) ≠ 0` for some monomial `x`
    /// of degree `< d`.
    pub fixed_witness: Option<String>,
}

impl PSpanReport {
    pub fn passed(&self) -> bool {
        self.p_in_circle && self.circle_in_p && self.fixed_witness.is_none()
    }
}

/// Compares the span of `P(x)`, `x` of degree `≤ d`, with the span of
/// circle words of length `≤ d` in a basis of `E(-1; σ)`.
pub fn p_span_check(g: &LieWithTriality, d: usize) -> PSpanReport {
    let u = Envelope::with_triality(g);
    let basis = u.monomials(d);
    let p_vals: Vec<PbwElement> = basis.iter().map(|x| u.p_map(&Lin::basis(x.clone()))).collect();
    let minus = eigenspace(g.sigma(), &Rational::from_integer(-1));
    let gens: Vec<PbwElement> = minus.basis().iter().map(|v| u.from_vector(v)).collect();
    let words: Vec<PbwElement> = circle_words(&u, &gens, d).into_iter().flatten().collect();

    let span = |vs: &[PbwElement]| {
        let mut e = SparseEchelon::new();
        for v in vs {
            e.insert(v);
        }
        e
    };
    let (ps, cs) = (span(&p_vals), span(&words));

    let plus = eigenspace(g.sigma(), &Rational::one());
    let mut fixed_witness = None;
    'outer: for v in plus.basis() {
        let a = u.from_vector(v);
        for x in basis.iter().filter(|x| x.degree() < d.max(1)) {
            if !u.p_map(&u.mul(&Lin::basis(x.clone()), &a)).is_zero() {
                fixed_witness = Some(format!("({x:?}, {v:?})"));
                break 'outer;
            }
        }
    }
    PSpanReport {
        degree: d,
        e_minus_dim: minus.dim(),
        p_dim: ps.dim(),
        circle_dim: cs.dim(),
        p_in_circle: p_vals.iter().all(|p| cs.contains(p)),
        circle_in_p: words.iter().all(|w| ps.contains(w)),
        fixed_witness,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::malcev::{affine_line, check_lie_triality, lie_of_malcev, sl2, trivial_triality, wreath, CayleyAlgebra};
    use crate::qcore::QMatrix;

    #[test]
    fn degree_zero_is_trivial() {
        let g = wreath(&affine_line());
        let rep = check_ug_triality(&g, 0);
        assert!(rep.passed);
        assert_eq!(rep.monomials, 1);
    }

    #[test]
    fn wreath_degree_three() {
        let g = wreath(&affine_line());
        assert!(check_lie_triality(&g).holds);
        let rep = check_ug_triality(&g, 3);
        assert!(rep.passed, "{rep:?}");
        assert_eq!((rep.dim, rep.monomials), (6, 84));
        let sl = wreath(&sl2());
        assert!(check_ug_triality(&sl, 2).passed);
    }

    #[test]
    fn ortho_degree_two() {
        let l = lie_of_malcev(&CayleyAlgebra::octonions()).unwrap();
        let rep = check_ug_triality(l.lie(), 2);
        assert!(rep.passed, "{rep:?}");
        assert_eq!(rep.monomials, 435);
    }

    /// The line with `ρ = 1`, `σ = -1`: automorphisms satisfying the `S₃`
    /// relations but not the six-term identity.
    fn sign_line() -> LieWithTriality {
        let s = crate::malcev::StructureConstants::zero(1, true);
        LieWithTriality::new(s, QMatrix::identity(1), QMatrix::identity(1).scale(&Rational::from_integer(-1))).unwrap()
    }

    #[test]
    fn trivial_action_passes_and_sign_line_fails() {
        let g = trivial_triality(&sl2());
        assert!(check_lie_triality(&g).holds);
        assert!(check_ug_triality(&g, 2).passed);
        let bad = sign_line();
        assert!(!check_lie_triality(&bad).holds);
        let rep = check_ug_triality(&bad, 1);
        assert!(!rep.passed);
        assert_eq!(rep.witness.as_deref(), Some("x0"));
    }

    #[test]
    fn action_identity_base_case_is_six_term() {
        let g = wreath(&affine_line());
        let rep = check_action_identity(&g, 0);
        assert!(rep.passed);
        let rep = check_action_identity(&sign_line(), 0);
        assert!(!rep.passed);
        assert_eq!(rep.witness.as_deref(), Some("(1, x0)"));
    }

    #[test]
    fn action_identity_wreath() {
        let rep = check_action_identity(&wreath(&affine_line()), 2);
        assert!(rep.passed, "{rep:?}");
    }

    #[test]
    fn action_identity_ortho() {
        let l = lie_of_malcev(&CayleyAlgebra::octonions()).unwrap();
        let rep = check_action_identity(l.lie(), 1);
        assert!(rep.passed, "{rep:?}");
    }

    #[test]
    fn adjoint_action_of_primitive_is_bracket() {
        let u = Envelope::new(sl2()).unwrap();
        let (e, f) = (u.generator(0), u.generator(1));
        assert_eq!(adjoint_action(&u, &e, &f), u.generator(2));
    }

    #[test]
    fn p_on_generators() {
        let g = wreath(&affine_line());
        let u = Envelope::with_triality(&g);
        for i in 0..g.dim() {
            let a = u.generator(i);
            let p = u.p_map(&a);
            assert_eq!(p, u.sigma(&a).minus(&a));
            assert_eq!(u.sigma(&p), p.neg());
        }
    }

    #[test]
    fn p_span_wreath() {
        let g = wreath(&affine_line());
        let rep = p_span_check(&g, 2);
        assert!(rep.passed(), "{rep:?}");
        assert_eq!(rep.e_minus_dim, 2);
        assert_eq!(rep.p_dim, rep.circle_dim);
        let rep1 = p_span_check(&g, 1);
        assert!(rep1.passed());
        assert_eq!(rep1.p_dim, 1 + rep1.e_minus_dim);
    }

    #[test]
    fn p_span_ortho() {
        let l = lie_of_malcev(&CayleyAlgebra::octonions()).unwrap();
        let rep = p_span_check(l.lie(), 2);
        assert!(rep.passed(), "{rep:?}");
        assert_eq!(rep.e_minus_dim, 7);
        assert_eq!(rep.p_dim, 1 + 7 + 28);
    }

    #[test]
    fn fixed_vectors_do_not_generate() {
        let g = wreath(&affine_line());
        let u = Envelope::with_triality(&g);
        let ps: Vec<PbwElement> = u.monomials(2).iter().map(|x| u.p_map(&Lin::basis(x.clone()))).collect();
        let mut e = SparseEchelon::new();
        for p in &ps {
            e.insert(p);
        }
        let plus = eigenspace(g.sigma(), &Rational::one());
        let gens: Vec<PbwElement> = plus.basis().iter().map(|v| u.from_vector(v)).collect();
        let words = circle_words(&u, &gens, 1);
        assert!(words[1].iter().all(|w| !e.contains(w)));
    }
}
