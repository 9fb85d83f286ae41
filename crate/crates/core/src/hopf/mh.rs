use super::moufang::{check_moufang_hopf, MoufangHopfReport};
use super::triality::tensor_mul;
use super::{Bialgebra, Check, GroupAlgebra, Lin, SparseEchelon, Tensor, TrialityHopf};
use crate::gtriality::{MLoop, TrialityGroupLike};
use crate::qcore::Rational;
use serde::Serialize;
use std::collections::BTreeMap;

/// `H` with the product `u*v = Σ ρ²(S(u₁)) v ρ(S(u₂))` and the coalgebra
/// structure and antipode of `H`.
pub struct StarAlgebra<'a, H> {
    pub inner: &'a H,
}

impl<H: TrialityHopf> StarAlgebra<'_, H> {
    /// `Σ ρ(S(v₁)) u ρ²(S(v₂))`.
    pub fn second_formula(&self, u: &Lin<H::Basis>, v: &Lin<H::Basis>) -> Lin<H::Basis> {
        let h = self.inner;
        h.sweedler(v, |a, b| {
            let left = h.rho(&h.antipode_basis(a));
            let right = h.rho_pow(&h.antipode_basis(b), 2);
            h.mul(&h.mul(&left, u), &right)
        })
    }
}

impl<H: TrialityHopf> Bialgebra for StarAlgebra<'_, H> {
    type Basis = H::Basis;

    fn unit_basis(&self) -> H::Basis {
        self.inner.unit_basis()
    }

    fn mul_basis(&self, a: &H::Basis, b: &H::Basis) -> Lin<H::Basis> {
        let h = self.inner;
        let v = Lin::basis(b.clone());
        h.sweedler(&Lin::basis(a.clone()), |x, y| {
            let left = h.rho_pow(&h.antipode_basis(x), 2);
            let right = h.rho(&h.antipode_basis(y));
            h.mul(&h.mul(&left, &v), &right)
        })
    }

    /// Same product, with `Δ(u)` grouped by its left factor and `v` kept
    /// whole.
    fn mul(&self, u: &Lin<H::Basis>, v: &Lin<H::Basis>) -> Lin<H::Basis> {
        let h = self.inner;
        let mut out = Lin::zero();
        for (x, rest) in group_left(&h.coproduct(u)) {
            let left = h.rho_pow(&h.antipode_basis(&x), 2);
            let right = h.rho(&h.antipode(&rest));
            out.add_assign(&h.mul(&h.mul(&left, v), &right));
        }
        out
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

/// `Σ x ⊗ y` as `x ↦ Σ y` over the distinct left factors.
pub fn group_left<B: Ord + Clone>(t: &Tensor<B>) -> BTreeMap<B, Lin<B>> {
    let mut out: BTreeMap<B, Lin<B>> = BTreeMap::new();
    for ((a, b), c) in t.iter() {
        out.entry(a.clone()).or_insert_with(Lin::zero).add_term(b.clone(), c);
    }
    out
}

/// `MH(H) = P(H)`, spanned by the images `P(x)` of a basis of `H`.
pub struct MhSubalgebra<'a, H: TrialityHopf> {
    star: StarAlgebra<'a, H>,
    basis: Vec<Lin<H::Basis>>,
    span: SparseEchelon<H::Basis>,
}

pub fn mh_subalgebra<'a, H: TrialityHopf>(h: &'a H, x_basis: &[H::Basis]) -> MhSubalgebra<'a, H> {
    let mut span = SparseEchelon::new();
    let mut basis = Vec::new();
    for x in x_basis {
        let p = h.p_map(&Lin::basis(x.clone()));
        if span.insert(&p) {
            basis.push(p);
        }
    }
    MhSubalgebra { star: StarAlgebra { inner: h }, basis, span }
}

impl<'a, H: TrialityHopf> MhSubalgebra<'a, H> {
    pub fn parent(&self) -> &'a H {
        self.star.inner
    }

    pub fn star(&self) -> &StarAlgebra<'a, H> {
        &self.star
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Lin<H::Basis>] {
        &self.basis
    }

    pub fn contains(&self, u: &Lin<H::Basis>) -> bool {
        self.span.contains(u)
    }

    pub fn mul(&self, u: &Lin<H::Basis>, v: &Lin<H::Basis>) -> Lin<H::Basis> {
        self.star.mul(u, v)
    }

    /// `t ∈ MH ⊗ MH`, tested on the slices against each dual basis label.
    pub fn contains_tensor(&self, t: &Tensor<H::Basis>) -> bool {
        let mut lefts: BTreeMap<H::Basis, Lin<H::Basis>> = BTreeMap::new();
        let mut rights: BTreeMap<H::Basis, Lin<H::Basis>> = BTreeMap::new();
        for ((a, b), c) in t.iter() {
            lefts.entry(b.clone()).or_insert_with(Lin::zero).add_term(a.clone(), c);
            rights.entry(a.clone()).or_insert_with(Lin::zero).add_term(b.clone(), c);
        }
        lefts.values().chain(rights.values()).all(|s| self.contains(s))
    }

    pub fn report(&self, x_basis: &[H::Basis], seed: u64) -> MhReport {
        let h = self.star.inner;
        let n = self.basis.len();
        let b = &self.basis;
        let pairs = || (0..n).flat_map(|i| (0..n).map(move |j| (i, j)));
        let w2 = |p: Option<(usize, usize)>| p.map(|(i, j)| format!("({i}, {j})"));
        let w1 = |p: Option<usize>| p.map(|i| format!("{i}"));

        let p_identity = x_basis
            .iter()
            .find(|x| {
                let p = h.p_map(&Lin::basis((*x).clone()));
                let s = h.antipode(&p);
                s != h.sigma(&p) || s != h.p_map(&h.sigma_basis(x))
            })
            .map(|x| format!("{x:?}"));
        let closure = pairs().find(|&(i, j)| !self.contains(&self.mul(&b[i], &b[j])));
        let formulas = pairs().find(|&(i, j)| self.mul(&b[i], &b[j]) != self.star.second_formula(&b[i], &b[j]));
        let one = h.one();
        let unit = if !self.contains(&one) {
            Some("1 is not in MH".to_string())
        } else {
            w1((0..n).find(|&i| self.mul(&one, &b[i]) != b[i] || self.mul(&b[i], &one) != b[i]))
        };
        let antipode_closed = (0..n).find(|&i| !self.contains(&h.antipode(&b[i])));
        let antipode_anti = pairs().find(|&(i, j)| {
            h.antipode(&self.mul(&b[i], &b[j])) != self.mul(&h.antipode(&b[j]), &h.antipode(&b[i]))
        });
        let coalgebra = pairs().find(|&(i, j)| {
            h.coproduct(&self.mul(&b[i], &b[j])) != tensor_mul(&self.star, &h.coproduct(&b[i]), &h.coproduct(&b[j]))
        });
        let subcoalgebra = (0..n).find(|&i| !self.contains_tensor(&h.coproduct(&b[i])));
        let mut checks = vec![
            Check::new("p_antipode_sigma", p_identity),
            Check::new("closure", w2(closure)),
            Check::new("formulas_agree", w2(formulas)),
            Check::new("unit", unit),
            Check::new("antipode_closed", w1(antipode_closed)),
            Check::new("antipode_reverses_product", w2(antipode_anti)),
            Check::new("coalgebra_morphism", w2(coalgebra)),
            Check::new("subcoalgebra", w1(subcoalgebra)),
        ];
        for (i, j) in [(1, 0), (2, 0), (2, 1)] {
            let bad = (0..n).find(|&k| !check_commutation(h, &b[k], i, j));
            checks.push(Check::new(&format!("commutation_{i}{j}"), w1(bad)));
        }
        MhReport { dim: n, checks, moufang: check_moufang_hopf(&self.star, b, seed) }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct MhReport {
    pub dim: usize,
    pub checks: Vec<Check>,
    pub moufang: MoufangHopfReport,
}

impl MhReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed) && self.moufang.passed()
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().chain(&self.moufang.checks).find(|c| c.name == name)
    }
}

/// `Σ ρⁱ(u₁)ρʲ(u₂) = Σ ρʲ(u₁)ρⁱ(u₂)`.
pub fn check_commutation<H: TrialityHopf>(h: &H, u: &Lin<H::Basis>, i: u32, j: u32) -> bool {
    let side = |p: u32, q: u32| {
        h.sweedler(u, |a, b| h.mul(&h.rho_pow(&Lin::basis(a.clone()), p), &h.rho_pow(&Lin::basis(b.clone()), q)))
    };
    side(i, j) == side(j, i)
}

/// Compares the `*` table of `MH(F[G])` with the table of `M(G)` under
/// `m ↦ m⁻¹`, which sends `g⁻¹g^σ` to `P(g⁻¹) = σ(g)⁻¹g`.
pub fn mh_matches_mloop<G: TrialityGroupLike>(mh: &MhSubalgebra<'_, GroupAlgebra<G>>, ml: &MLoop<G::Elem>) -> Check {
    let g = mh.parent().group();
    let image: Vec<Lin<G::Elem>> = ml.carrier.iter().map(|m| Lin::basis(g.inv(m))).collect();
    let witness = if mh.dim() != ml.order() {
        Some(format!("dim MH = {}, |M(G)| = {}", mh.dim(), ml.order()))
    } else if let Some(a) = (0..image.len()).find(|&a| !mh.contains(&image[a])) {
        Some(format!("carrier element {a} not in MH"))
    } else {
        let n = ml.order();
        (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .find(|&(a, b)| mh.mul(&image[a], &image[b]) != image[ml.table.mul(a, b)])
            .map(|(a, b)| format!("({a}, {b})"))
    };
    Check::new("mh_matches_mloop", witness)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gtriality::corpus::*;
    use crate::gtriality::moufang_from_triality;
    use crate::loops::generators::symmetric_group;
    use crate::sampling::DEFAULT_SEED;

    #[test]
    fn wreath_mh_is_loop_algebra_of_m() {
        let h = GroupAlgebra::new(s3_wreath());
        let b = h.basis();
        let mh = mh_subalgebra(&h, &b);
        assert_eq!(mh.dim(), 6);
        let rep = mh.report(&b, DEFAULT_SEED);
        assert!(rep.passed(), "{:?}", rep);
        assert!(rep.moufang.exhaustive);
        let ml = moufang_from_triality(h.group()).unwrap();
        assert!(ml.table.find_isomorphism(&symmetric_group(3)).is_some());
        assert!(mh_matches_mloop(&mh, &ml).passed);
    }

    #[test]
    fn unit_laws_on_mh_basis() {
        let h = GroupAlgebra::new(s3_wreath());
        let mh = mh_subalgebra(&h, &h.basis());
        let one = h.one();
        for u in mh.basis() {
            assert_eq!(&mh.mul(&one, u), u);
            assert_eq!(&mh.mul(u, &one), u);
        }
    }

    #[test]
    fn identity_matching_is_not_a_morphism() {
        let h = GroupAlgebra::new(s3_wreath());
        let mh = mh_subalgebra(&h, &h.basis());
        let ml = moufang_from_triality(h.group()).unwrap();
        let n = ml.order();
        let direct = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).all(|(a, b)| {
            mh.mul(&Lin::basis(ml.carrier[a]), &Lin::basis(ml.carrier[b])) == Lin::basis(ml.carrier[ml.table.mul(a, b)])
        });
        assert!(!direct);
    }

    #[test]
    fn commutation_cases() {
        let h = GroupAlgebra::new(s3_wreath());
        let mh = mh_subalgebra(&h, &h.basis());
        for u in mh.basis() {
            for i in 0..3 {
                assert!(check_commutation(&h, u, i, i));
            }
            assert!(check_commutation(&h, u, 1, 0));
        }
    }

    #[test]
    fn conjugation_action_mh() {
        let h = GroupAlgebra::new(s3_conjugation());
        let b = h.basis();
        let mh = mh_subalgebra(&h, &b);
        let rep = mh.report(&b, DEFAULT_SEED);
        assert!(rep.passed(), "{:?}", rep);
        let ml = moufang_from_triality(h.group()).unwrap();
        assert_eq!(mh.dim(), ml.order());
        assert!(mh_matches_mloop(&mh, &ml).passed);
    }
}
