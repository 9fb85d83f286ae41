use super::{Bialgebra, Lin, Tensor, TrialityHopf};
use crate::qcore::Rational;
use serde::Serialize;
use std::collections::HashMap;

/// One named identity with the first failing instance, if any.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub witness: Option<String>,
}

impl Check {
    pub fn new(name: &str, witness: Option<String>) -> Self {
        Check { name: name.to_string(), passed: witness.is_none(), witness }
    }
}

fn first<T, F: FnMut(&T) -> bool>(items: &[T], mut ok: F) -> Option<&T> {
    items.iter().find(|x| !ok(x))
}

fn swap<B: Ord + Clone>(t: &Tensor<B>) -> Tensor<B> {
    t.iter().map(|((a, b), c)| ((b.clone(), a.clone()), c.clone())).collect()
}

pub(crate) fn tensor_mul<H: Bialgebra + ?Sized>(h: &H, s: &Tensor<H::Basis>, t: &Tensor<H::Basis>) -> Tensor<H::Basis> {
    let mut out = Lin::zero();
    for ((a1, a2), x) in s.iter() {
        for ((b1, b2), y) in t.iter() {
            let left = h.mul_basis(a1, b1);
            let right = h.mul_basis(a2, b2);
            let xy = x * y;
            for (p, u) in left.iter() {
                for (q, v) in right.iter() {
                    out.add_term((p.clone(), q.clone()), &(&xy * &(u * v)));
                }
            }
        }
    }
    out
}

fn tensor_map<B: Ord + Clone, F: FnMut(&B) -> Lin<B>>(t: &Tensor<B>, mut f: F) -> Tensor<B> {
    let mut out = Lin::zero();
    for ((a, b), c) in t.iter() {
        let (fa, fb) = (f(a), f(b));
        for (p, u) in fa.iter() {
            for (q, v) in fb.iter() {
                out.add_term((p.clone(), q.clone()), &(c * &(u * v)));
            }
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct HopfAxiomReport {
    pub checks: Vec<Check>,
}

impl HopfAxiomReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }
}

/// Coalgebra, antipode, bialgebra and automorphism axioms on `basis`, with
/// two-argument identities on `pair_basis`.
pub fn check_hopf_axioms<H: TrialityHopf>(h: &H, basis: &[H::Basis], pair_basis: &[H::Basis]) -> HopfAxiomReport {
    let w1 = |x: Option<&H::Basis>| x.map(|a| format!("{a:?}"));
    let pairs: Vec<(H::Basis, H::Basis)> =
        pair_basis.iter().flat_map(|a| pair_basis.iter().map(move |b| (a.clone(), b.clone()))).collect();
    let w2 = |x: Option<&(H::Basis, H::Basis)>| x.map(|(a, b)| format!("({a:?}, {b:?})"));
    let one = h.one();
    let b = |a: &H::Basis| Lin::basis(a.clone());

    let coassoc = first(basis, |a| {
        let d = h.coproduct_basis(a);
        let mut left: Lin<(H::Basis, H::Basis, H::Basis)> = Lin::zero();
        let mut right = Lin::zero();
        for ((x, y), c) in d.iter() {
            for ((p, q), e) in h.coproduct_basis(x).iter() {
                left.add_term((p.clone(), q.clone(), y.clone()), &(c * e));
            }
            for ((p, q), e) in h.coproduct_basis(y).iter() {
                right.add_term((x.clone(), p.clone(), q.clone()), &(c * e));
            }
        }
        left == right
    });
    let cocomm = first(basis, |a| swap(&h.coproduct_basis(a)) == h.coproduct_basis(a));
    let counit = first(basis, |a| {
        let d = h.coproduct_basis(a);
        let l: Lin<H::Basis> = d.iter().map(|((x, y), c)| (y.clone(), c * &h.counit_basis(x))).collect();
        let r: Lin<H::Basis> = d.iter().map(|((x, y), c)| (x.clone(), c * &h.counit_basis(y))).collect();
        l == b(a) && r == b(a)
    });
    let antipode = first(basis, |a| {
        let e = one.scaled(&h.counit_basis(a));
        let l = h.sweedler(&b(a), |x, y| h.mul(&h.antipode_basis(x), &b(y)));
        let r = h.sweedler(&b(a), |x, y| h.mul(&b(x), &h.antipode_basis(y)));
        l == e && r == e
    });
    let unit = first(basis, |a| h.mul(&one, &b(a)) == b(a) && h.mul(&b(a), &one) == b(a));
    let bialg = first(&pairs, |(x, y)| {
        let p = h.mul_basis(x, y);
        h.coproduct(&p) == tensor_mul(h, &h.coproduct_basis(x), &h.coproduct_basis(y))
            && h.counit(&p) == h.counit_basis(x) * h.counit_basis(y)
    });
    let autos_mul = first(&pairs, |(x, y)| {
        let p = h.mul_basis(x, y);
        h.rho(&p) == h.mul(&h.rho_basis(x), &h.rho_basis(y)) && h.sigma(&p) == h.mul(&h.sigma_basis(x), &h.sigma_basis(y))
    });
    let autos_coalg = first(basis, |a| {
        let d = h.coproduct_basis(a);
        [h.rho_basis(a), h.sigma_basis(a)].iter().zip([0, 1]).all(|(img, which)| {
            let f = |x: &H::Basis| if which == 0 { h.rho_basis(x) } else { h.sigma_basis(x) };
            h.coproduct(img) == tensor_map(&d, f)
                && h.counit(img) == h.counit_basis(a)
                && h.antipode(img) == h.antipode_basis(a).map(f)
        })
    });
    let s3 = first(basis, |a| {
        let x = b(a);
        h.sigma(&h.sigma(&x)) == x && h.rho_pow(&h.rho(&x), 2) == x && h.sigma(&h.rho(&x)) == h.rho_pow(&h.sigma(&x), 2)
    });
    HopfAxiomReport {
        checks: vec![
            Check::new("coassociativity", w1(coassoc)),
            Check::new("cocommutativity", w1(cocomm)),
            Check::new("counit", w1(counit)),
            Check::new("antipode", w1(antipode)),
            Check::new("unit", w1(unit)),
            Check::new("bialgebra", w2(bialg)),
            Check::new("automorphisms_multiplicative", w2(autos_mul)),
            Check::new("automorphisms_coalgebra", w1(autos_coalg)),
            Check::new("s3_relations", w1(s3)),
        ],
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct HopfTrialityReport {
    pub checked: usize,
    pub passed: bool,
    /// First basis element where `Σ P(u₁)ρ(P(u₂))ρ²(P(u₃)) ≠ ε(u)1`.
    pub witness: Option<String>,
}

/// `Σ P(u₁)ρ(P(u₂))ρ²(P(u₃)) = ε(u)1` on every element of `basis`.
pub fn check_hopf_triality<H: TrialityHopf>(h: &H, basis: &[H::Basis]) -> HopfTrialityReport {
    type Images<B> = (Lin<B>, Lin<B>, Lin<B>);
    let mut cache: HashMap<H::Basis, Images<H::Basis>> = HashMap::new();
    let mut images = |a: &H::Basis| -> Images<H::Basis> {
        cache
            .entry(a.clone())
            .or_insert_with(|| {
                let p = h.p_map(&Lin::basis(a.clone()));
                let rp = h.rho(&p);
                let rrp = h.rho(&rp);
                (p, rp, rrp)
            })
            .clone()
    };
    let mut witness = None;
    for u in basis {
        let lhs = {
            let mut acc = Lin::zero();
            for ((a, b, c), x) in h.coproduct3(&Lin::basis(u.clone())).iter() {
                let (pa, _, _) = images(a);
                let (_, rpb, _) = images(b);
                let (_, _, rrpc) = images(c);
                acc.add_scaled(&h.mul(&h.mul(&pa, &rpb), &rrpc), x);
            }
            acc
        };
        if lhs != h.one().scaled(&h.counit_basis(u)) {
            witness = Some(format!("{u:?}"));
            break;
        }
    }
    HopfTrialityReport { checked: basis.len(), passed: witness.is_none(), witness }
}

/// Replacement generators of `S₃ = ⟨ρ, σ⟩`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Regeneration {
    /// `(ρ², σ)`.
    RhoSquared,
    /// `(ρ, ρσ)`.
    RhoSigma,
    /// `(ρ, ρ²σ)`.
    Rho2Sigma,
}

impl Regeneration {
    pub const ALL: [Regeneration; 3] = [Regeneration::RhoSquared, Regeneration::RhoSigma, Regeneration::Rho2Sigma];
}

/// The same Hopf algebra with `ρ`, `σ` replaced per a [`Regeneration`].
pub struct Regenerated<'a, H> {
    pub inner: &'a H,
    pub how: Regeneration,
}

impl<H: TrialityHopf> Bialgebra for Regenerated<'_, H> {
    type Basis = H::Basis;

    fn unit_basis(&self) -> H::Basis {
        self.inner.unit_basis()
    }

    fn mul_basis(&self, a: &H::Basis, b: &H::Basis) -> Lin<H::Basis> {
        self.inner.mul_basis(a, b)
    }

    fn coproduct_basis(&self, a: &H::Basis) -> Tensor<H::Basis> {
        self.inner.coproduct_basis(a)
    }

    fn counit_basis(&self, a: &H::Basis) -> Rational {
        self.inner.counit_basis(a)
    }

    fn antipode_basis(&self, a: &H::Basis) -> Lin<H::Basis> {
        self.inner.antipode_basis(a)
    }
}

impl<H: TrialityHopf> TrialityHopf for Regenerated<'_, H> {
    fn rho_basis(&self, a: &H::Basis) -> Lin<H::Basis> {
        let r = self.inner.rho_basis(a);
        match self.how {
            Regeneration::RhoSquared => self.inner.rho(&r),
            _ => r,
        }
    }

    fn sigma_basis(&self, a: &H::Basis) -> Lin<H::Basis> {
        let s = self.inner.sigma_basis(a);
        match self.how {
            Regeneration::RhoSquared => s,
            Regeneration::RhoSigma => self.inner.rho(&s),
            Regeneration::Rho2Sigma => self.inner.rho_pow(&s, 2),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GeneratorIndependence {
    pub original: bool,
    pub regenerated: Vec<(Regeneration, bool)>,
}

impl GeneratorIndependence {
    pub fn consistent(&self) -> bool {
        self.regenerated.iter().all(|(_, v)| *v == self.original)
    }
}

pub fn check_generator_independence<H: TrialityHopf>(h: &H, basis: &[H::Basis]) -> GeneratorIndependence {
    GeneratorIndependence {
        original: check_hopf_triality(h, basis).passed,
        regenerated: Regeneration::ALL
            .iter()
            .map(|&how| (how, check_hopf_triality(&Regenerated { inner: h, how }, basis).passed))
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gtriality::corpus::*;
    use crate::gtriality::TrialityGroupLike;
    use crate::hopf::GroupAlgebra;
    use crate::loops::generators::{cyclic_group, symmetric_group};

    fn r(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn trivial_group_is_one_dimensional() {
        let h = GroupAlgebra::new(trivial_action(cyclic_group(1)).unwrap());
        let b = h.basis();
        assert_eq!(b.len(), 1);
        assert!(check_hopf_axioms(&h, &b, &b).passed());
        assert!(check_hopf_triality(&h, &b).passed);
    }

    #[test]
    fn c2_antipode_is_identity() {
        let h = GroupAlgebra::new(trivial_action(cyclic_group(2)).unwrap());
        for g in h.basis() {
            assert_eq!(h.antipode_basis(&g), Lin::basis(g));
        }
    }

    #[test]
    fn wreath_axioms_hold() {
        let h = GroupAlgebra::new(s3_wreath());
        let b = h.basis();
        let rep = check_hopf_axioms(&h, &b, &b);
        assert!(rep.passed(), "{:?}", rep.first_failure());
    }

    #[test]
    fn p_on_group_likes() {
        let h = GroupAlgebra::new(s3_wreath());
        let g = h.group();
        assert_eq!(h.p_map(&h.one()), h.one());
        for x in h.basis() {
            let expected = g.mul(&g.sigma(&x), &g.inv(&x));
            assert_eq!(h.p_map(&Lin::basis(x)), Lin::basis(expected));
        }
        let (a, b) = (5usize, 77usize);
        let u: Lin<usize> = [(a, r(2)), (b, r(3))].into_iter().collect();
        let lhs = h.p_map(&u);
        let rhs = h.p_map(&Lin::basis(a)).scaled(&r(2)).plus(&h.p_map(&Lin::basis(b)).scaled(&r(3)));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn wreath_has_hopf_triality() {
        let h = GroupAlgebra::new(s3_wreath());
        let rep = check_hopf_triality(&h, &h.basis());
        assert!(rep.passed);
        assert_eq!(rep.checked, 216);
    }

    #[test]
    fn c4_inversion_fails_at_order_four() {
        let h = GroupAlgebra::new(c4_inversion());
        let rep = check_hopf_triality(&h, &h.basis());
        assert!(!rep.passed);
        let w: usize = rep.witness.unwrap().parse().unwrap();
        assert_eq!(h.group().group().element_order(w), 4);
    }

    #[test]
    fn identity_automorphisms_pass() {
        let h = GroupAlgebra::new(trivial_action(symmetric_group(3)).unwrap());
        assert!(check_hopf_triality(&h, &h.basis()).passed);
        let gi = check_generator_independence(&h, &h.basis());
        assert!(gi.original && gi.consistent());
    }

    #[test]
    fn generator_independence() {
        let h = GroupAlgebra::new(s3_wreath());
        let gi = check_generator_independence(&h, &h.basis());
        assert!(gi.original && gi.consistent());
        assert_eq!(gi.regenerated.len(), 3);
        let bad = GroupAlgebra::new(c4_inversion());
        let gi = check_generator_independence(&bad, &bad.basis());
        assert!(!gi.original && gi.consistent());
    }

    #[test]
    fn regenerated_generators_satisfy_s3() {
        let h = GroupAlgebra::new(s3_wreath());
        let b = h.basis();
        for how in Regeneration::ALL {
            let rg = Regenerated { inner: &h, how };
            let rep = check_hopf_axioms(&rg, &b, &b[..12]);
            assert!(rep.passed(), "{how:?}: {:?}", rep.first_failure());
        }
    }

    #[test]
    fn broken_sigma_breaks_s3_check() {
        struct Broken(GroupAlgebra<crate::gtriality::TrialityGroup>);
        impl Bialgebra for Broken {
            type Basis = usize;
            fn unit_basis(&self) -> usize {
                self.0.unit_basis()
            }
            fn mul_basis(&self, a: &usize, b: &usize) -> Lin<usize> {
                self.0.mul_basis(a, b)
            }
            fn coproduct_basis(&self, a: &usize) -> Tensor<usize> {
                self.0.coproduct_basis(a)
            }
            fn counit_basis(&self, a: &usize) -> Rational {
                self.0.counit_basis(a)
            }
            fn antipode_basis(&self, a: &usize) -> Lin<usize> {
                self.0.antipode_basis(a)
            }
        }
        impl TrialityHopf for Broken {
            fn rho_basis(&self, a: &usize) -> Lin<usize> {
                self.0.rho_basis(a)
            }
            fn sigma_basis(&self, a: &usize) -> Lin<usize> {
                self.0.rho_basis(a)
            }
        }
        let h = Broken(GroupAlgebra::new(s3_wreath()));
        let b = h.0.basis();
        let rep = check_hopf_axioms(&h, &b, &b[..4]);
        assert_eq!(rep.first_failure().unwrap().name, "s3_relations");
    }
}
