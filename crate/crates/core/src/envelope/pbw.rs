use super::EnvelopeError;
use crate::hopf::{Bialgebra, Lin, Tensor, TrialityHopf};
use crate::malcev::{LieWithTriality, StructureConstants};
use crate::qcore::{QMatrix, Rational};
use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

/// A PBW monomial `x_{i₁}x_{i₂}⋯x_{i_r}` with `i₁ ≥ i₂ ≥ ⋯ ≥ i_r`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(Vec<u16>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn generator(i: usize) -> Self {
        Monomial(vec![i as u16])
    }

    /// Sorts `indices` into normal form; the factors of a monomial commute up
    /// to lower degree, so this is only a label, not a product.
    pub fn from_indices(indices: &[usize]) -> Self {
        let mut v: Vec<u16> = indices.iter().map(|&i| i as u16).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Monomial(v)
    }

    /// `exps[i]` is the exponent of `x_i`.
    pub fn from_exponents(exps: &[usize]) -> Self {
        let mut v = Vec::new();
        for (i, &e) in exps.iter().enumerate().rev() {
            v.extend(std::iter::repeat(i as u16).take(e));
        }
        Monomial(v)
    }

    pub fn exponents(&self, dim: usize) -> Vec<usize> {
        let mut e = vec![0; dim];
        for &i in &self.0 {
            e[i as usize] += 1;
        }
        e
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|&i| i as usize)
    }

    fn push(&self, i: u16) -> Self {
        let mut v = self.0.clone();
        v.push(i);
        Monomial(v)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for run in self.0.chunk_by(|a, b| a == b) {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "x{}", run[0])?;
            if run.len() > 1 {
                write!(f, "^{}", run.len())?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

pub type PbwElement = Lin<Monomial>;
pub type PbwTensor = Tensor<Monomial>;

/// All monomials of degree `≤ d` in `n` generators, by degree and then
/// lexicographically.
pub fn monomials_up_to(n: usize, d: usize) -> Vec<Monomial> {
    let mut out = vec![Monomial::one()];
    let mut layer = vec![Monomial::one()];
    for _ in 0..d {
        let mut next = Vec::new();
        for m in &layer {
            let top = m.0.last().map_or(n, |&i| i as usize + 1);
            for i in 0..top {
                next.push(m.push(i as u16));
            }
        }
        next.sort();
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// A Lie automorphism extended multiplicatively to `U(g)`.
pub struct LiftedAuto {
    images: Vec<PbwElement>,
    cache: Mutex<HashMap<Monomial, PbwElement>>,
}

impl LiftedAuto {
    fn new(m: &QMatrix) -> Self {
        let images = (0..m.cols())
            .map(|j| m.column(j).into_iter().enumerate().map(|(i, c)| (Monomial::generator(i), c)).collect())
            .collect();
        LiftedAuto { images, cache: Mutex::new(HashMap::new()) }
    }

    pub fn apply_basis(&self, env: &Envelope, m: &Monomial) -> PbwElement {
        if let Some(v) = self.cache.lock().unwrap().get(m) {
            return v.clone();
        }
        let v = m.indices().fold(env.one(), |acc, i| env.mul(&acc, &self.images[i]));
        self.cache.lock().unwrap().insert(m.clone(), v.clone());
        v
    }

    pub fn apply(&self, env: &Envelope, u: &PbwElement) -> PbwElement {
        u.map(|m| self.apply_basis(env, m))
    }
}

/// `U(g)` in the PBW basis of the ordered basis of `g`, with products
/// computed exactly by straightening.
pub struct Envelope {
    bracket: StructureConstants,
    rho: LiftedAuto,
    sigma: LiftedAuto,
    straighten: Mutex<HashMap<(Monomial, u16), PbwElement>>,
    antipodes: Mutex<HashMap<Monomial, PbwElement>>,
}

impl Envelope {
    /// `U(g)` with `ρ = σ = id`.
    pub fn new(bracket: StructureConstants) -> Result<Self, EnvelopeError> {
        if !bracket.is_anticommutative() {
            return Err(EnvelopeError::NotLie("the product is not declared anticommutative".into()));
        }
        if let Some([i, j, k]) = bracket.jacobi_witness() {
            return Err(EnvelopeError::NotLie(format!("Jacobi fails on (x{i}, x{j}, x{k})")));
        }
        let id = QMatrix::identity(bracket.dim());
        Ok(Self::build(bracket, &id, &id))
    }

    pub fn with_triality(g: &LieWithTriality) -> Self {
        Self::build(g.bracket().clone(), g.rho(), g.sigma())
    }

    fn build(bracket: StructureConstants, rho: &QMatrix, sigma: &QMatrix) -> Self {
        Envelope {
            bracket,
            rho: LiftedAuto::new(rho),
            sigma: LiftedAuto::new(sigma),
            straighten: Mutex::new(HashMap::new()),
            antipodes: Mutex::new(HashMap::new()),
        }
    }

    pub fn dim(&self) -> usize {
        self.bracket.dim()
    }

    pub fn bracket(&self) -> &StructureConstants {
        &self.bracket
    }

    pub fn generator(&self, i: usize) -> PbwElement {
        Lin::basis(Monomial::generator(i))
    }

    /// The element of `g ⊂ U(g)` with coordinates `v`.
    pub fn from_vector(&self, v: &[Rational]) -> PbwElement {
        v.iter().enumerate().map(|(i, c)| (Monomial::generator(i), c.clone())).collect()
    }

    /// Coordinates of a degree-one element, `None` if it has other terms.
    pub fn to_vector(&self, u: &PbwElement) -> Option<Vec<Rational>> {
        let mut v = vec![Rational::zero(); self.dim()];
        for (m, c) in u.iter() {
            if m.degree() != 1 {
                return None;
            }
            v[m.0[0] as usize] = c.clone();
        }
        Some(v)
    }

    pub fn monomials(&self, d: usize) -> Vec<Monomial> {
        monomials_up_to(self.dim(), d)
    }

    /// The multiplicative extension of `m`.
    pub fn lift_auto(&self, m: &QMatrix) -> Result<LiftedAuto, EnvelopeError> {
        let n = self.dim();
        if m.rows() != n || m.cols() != n {
            return Err(EnvelopeError::DimensionMismatch { expected: n, rows: m.rows(), cols: m.cols() });
        }
        if let Some((i, j)) = self.bracket.automorphism_witness(m) {
            return Err(EnvelopeError::NotAutomorphism { i, j });
        }
        if m.inverse().is_none() {
            return Err(EnvelopeError::Singular);
        }
        Ok(LiftedAuto::new(m))
    }

    pub fn rho_lift(&self) -> &LiftedAuto {
        &self.rho
    }

    pub fn sigma_lift(&self) -> &LiftedAuto {
        &self.sigma
    }

    /// `m · x_j` in normal form.
    fn mul_gen(&self, m: &Monomial, j: u16) -> PbwElement {
        let k = match m.0.last() {
            Some(&k) if k < j => k,
            _ => return Lin::basis(m.push(j)),
        };
        let key = (m.clone(), j);
        if let Some(v) = self.straighten.lock().unwrap().get(&key) {
            return v.clone();
        }
        // m' x_k x_j = (m' x_j) x_k + m' [x_k, x_j]
        let head = Monomial(m.0[..m.0.len() - 1].to_vec());
        let mut out = Lin::zero();
        for (t, c) in self.mul_gen(&head, j).iter() {
            out.add_scaled(&self.mul_gen(t, k), c);
        }
        for (l, c) in self.bracket.basis_product(k as usize, j as usize) {
            out.add_scaled(&self.mul_gen(&head, *l as u16), c);
        }
        self.straighten.lock().unwrap().insert(key, out.clone());
        out
    }

    fn mul_by_gen(&self, u: &PbwElement, j: u16) -> PbwElement {
        let mut out = Lin::zero();
        for (t, c) in u.iter() {
            out.add_scaled(&self.mul_gen(t, j), c);
        }
        out
    }

    pub fn straighten_cache_len(&self) -> usize {
        self.straighten.lock().unwrap().len()
    }
}

impl Bialgebra for Envelope {
    type Basis = Monomial;

    fn unit_basis(&self) -> Monomial {
        Monomial::one()
    }

    fn mul_basis(&self, a: &Monomial, b: &Monomial) -> PbwElement {
        b.0.iter().fold(Lin::basis(a.clone()), |acc, &j| self.mul_by_gen(&acc, j))
    }

    /// `Π (x ⊗ 1 + 1 ⊗ x)`; subwords of a normal word are normal.
    fn coproduct_basis(&self, a: &Monomial) -> PbwTensor {
        let r = a.degree();
        let mut out = Lin::zero();
        let one = Rational::one();
        for mask in 0u64..(1 << r) {
            let (mut left, mut right) = (Vec::new(), Vec::new());
            for (p, &i) in a.0.iter().enumerate() {
                if mask >> p & 1 == 1 {
                    left.push(i);
                } else {
                    right.push(i);
                }
            }
            out.add_term((Monomial(left), Monomial(right)), &one);
        }
        out
    }

    fn counit_basis(&self, a: &Monomial) -> Rational {
        if a.degree() == 0 {
            Rational::one()
        } else {
            Rational::zero()
        }
    }

    fn antipode_basis(&self, a: &Monomial) -> PbwElement {
        if let Some(v) = self.antipodes.lock().unwrap().get(a) {
            return v.clone();
        }
        let word = a.0.iter().rev().fold(self.one(), |acc, &j| self.mul_by_gen(&acc, j));
        let v = if a.degree() % 2 == 0 { word } else { word.neg() };
        self.antipodes.lock().unwrap().insert(a.clone(), v.clone());
        v
    }
}

impl TrialityHopf for Envelope {
    fn rho_basis(&self, a: &Monomial) -> PbwElement {
        self.rho.apply_basis(self, a)
    }

    fn sigma_basis(&self, a: &Monomial) -> PbwElement {
        self.sigma.apply_basis(self, a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::check_hopf_axioms;
    use crate::malcev::{affine_line, sl2, wreath};
    use crate::sampling::{rng, DEFAULT_SEED};
    use rand::Rng;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    fn mono(idx: &[usize]) -> PbwElement {
        Lin::basis(Monomial::from_indices(idx))
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(monomials_up_to(3, 3).len(), 20);
        assert_eq!(monomials_up_to(28, 2).len(), 1 + 28 + 406);
        assert_eq!(monomials_up_to(6, 3).len(), 84);
        let m = Monomial::from_exponents(&[1, 0, 2]);
        assert_eq!(m, Monomial::from_indices(&[0, 2, 2]));
        assert_eq!(m.exponents(3), vec![1, 0, 2]);
        assert_eq!(format!("{m:?}"), "x2^2 x0");
    }

    #[test]
    fn sl2_ef() {
        let u = Envelope::new(sl2()).unwrap();
        let (e, f, h) = (u.generator(0), u.generator(1), u.generator(2));
        // e·f is out of order, so it becomes f e + [e, f]
        let ef = u.mul(&e, &f);
        assert_eq!(ef, mono(&[1, 0]).plus(&h));
        assert_eq!(u.mul(&f, &e), mono(&[1, 0]));
        // h e = e h + 2e
        assert_eq!(u.mul(&e, &h), mono(&[2, 0]).minus(&e.scaled(&q(2))));
        assert_eq!(u.mul(&u.one(), &ef), ef);
    }

    #[test]
    fn sl2_casimir_is_central() {
        let u = Envelope::new(sl2()).unwrap();
        let (e, f, h) = (u.generator(0), u.generator(1), u.generator(2));
        let c = u.mul(&e, &f).plus(&u.mul(&f, &e)).plus(&u.mul(&h, &h).scaled(&Rational::new(1, 2)));
        for x in [&e, &f, &h] {
            assert_eq!(u.mul(x, &c), u.mul(&c, x));
        }
    }

    #[test]
    fn associativity_on_wreath() {
        let g = wreath(&affine_line());
        let u = Envelope::with_triality(&g);
        let basis = u.monomials(2);
        let mut r = rng(DEFAULT_SEED);
        for _ in 0..100 {
            let pick = |r: &mut rand_chacha::ChaCha8Rng| {
                let mut x = Lin::zero();
                for _ in 0..3 {
                    let m = basis[r.gen_range(0..basis.len())].clone();
                    x.add_term(m, &q(r.gen_range(-3..=3)));
                }
                x
            };
            let (a, b, c) = (pick(&mut r), pick(&mut r), pick(&mut r));
            assert_eq!(u.mul(&u.mul(&a, &b), &c), u.mul(&a, &u.mul(&b, &c)));
        }
        assert!(u.straighten_cache_len() > 0);
    }

    #[test]
    fn degree_is_filtered() {
        let u = Envelope::new(sl2()).unwrap();
        let b = u.monomials(2);
        for x in &b {
            for y in &b {
                let p = u.mul_basis(x, y);
                assert!(p.iter().all(|(m, _)| m.degree() <= x.degree() + y.degree()));
                let top: Lin<Monomial> = p.iter().filter(|(m, _)| m.degree() == x.degree() + y.degree()).map(|(m, c)| (m.clone(), c.clone())).collect();
                let mut idx: Vec<usize> = x.indices().chain(y.indices()).collect();
                idx.sort();
                assert_eq!(top, mono(&idx));
            }
        }
    }

    #[test]
    fn coproduct_examples() {
        let u = Envelope::new(sl2()).unwrap();
        let a = Monomial::generator(0);
        let one = Monomial::one();
        let mut expect = Lin::zero();
        expect.add_term((a.clone(), one.clone()), &q(1));
        expect.add_term((one.clone(), a.clone()), &q(1));
        assert_eq!(u.coproduct_basis(&a), expect);
        let a2 = Monomial::from_indices(&[0, 0]);
        let mut expect = Lin::zero();
        expect.add_term((a2.clone(), one.clone()), &q(1));
        expect.add_term((a.clone(), a.clone()), &q(2));
        expect.add_term((one, a2.clone()), &q(1));
        assert_eq!(u.coproduct_basis(&a2), expect);
    }

    #[test]
    fn antipode_axiom_sl2() {
        let u = Envelope::new(sl2()).unwrap();
        for m in u.monomials(3) {
            let x = Lin::basis(m.clone());
            let lhs = u.sweedler(&x, |a, b| u.mul(&u.antipode_basis(a), &Lin::basis(b.clone())));
            assert_eq!(lhs, u.one().scaled(&u.counit(&x)), "{m:?}");
        }
        assert_eq!(u.antipode(&u.generator(1)), u.generator(1).neg());
    }

    #[test]
    fn hopf_axioms_hold() {
        let u = Envelope::with_triality(&wreath(&affine_line()));
        let rep = check_hopf_axioms(&u, &u.monomials(3), &u.monomials(1));
        assert!(rep.passed(), "{:?}", rep.first_failure());
        let s = Envelope::new(sl2()).unwrap();
        let rep = check_hopf_axioms(&s, &s.monomials(3), &s.monomials(2));
        assert!(rep.passed(), "{:?}", rep.first_failure());
    }

    #[test]
    fn lift_auto_rules() {
        let u = Envelope::new(sl2()).unwrap();
        let id = u.lift_auto(&QMatrix::identity(3)).unwrap();
        for m in u.monomials(3) {
            assert_eq!(id.apply_basis(&u, &m), Lin::basis(m));
        }
        // e ↦ f, f ↦ e, h ↦ -h
        let swap = QMatrix::from_i64_rows(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, -1]]);
        let s = u.lift_auto(&swap).unwrap();
        for m in u.monomials(3) {
            let x = Lin::basis(m.clone());
            assert_eq!(s.apply(&u, &s.apply(&u, &x)), x, "{m:?}");
        }
        let b = u.monomials(2);
        for x in &b {
            for y in &b {
                let (x, y) = (Lin::basis(x.clone()), Lin::basis(y.clone()));
                assert_eq!(s.apply(&u, &u.mul(&x, &y)), u.mul(&s.apply(&u, &x), &s.apply(&u, &y)));
            }
        }
        let bad = QMatrix::from_i64_rows(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, 1]]);
        assert!(matches!(u.lift_auto(&bad), Err(EnvelopeError::NotAutomorphism { .. })));
        assert!(matches!(u.lift_auto(&QMatrix::identity(2)), Err(EnvelopeError::DimensionMismatch { .. })));
    }

    #[test]
    fn rejects_non_lie() {
        let mut s = StructureConstants::zero(3, true);
        s.set(0, 1, 0, q(1));
        s.set(1, 2, 1, q(1));
        s.set(0, 2, 2, q(1));
        assert!(s.jacobi_witness().is_some());
        assert!(Envelope::new(s).is_err());
    }
}
