use super::structure::StructureConstants;
use super::MalcevError;
use crate::qcore::{QMatrix, Rational, Subspace};
use num_traits::One;
use std::ops::{Mul, Neg};

/// Product of basis units `e_i e_j` in the Cayley–Dickson algebra of
/// dimension `2^mus.len()`, doubled with parameters `mus` in order.
///
/// Returns `(c, k)` with `e_i e_j = c e_k`. Doubling uses
/// `(a,b)(c,d) = (ac + μ d̄b, da + bc̄)`, so with all parameters `-1`:
/// `e₃ = e₁e₂`, `e₅ = e₁e₄`, `e₆ = e₂e₄`, `e₇ = e₃e₄`.
pub fn unit_product<T>(mus: &[T], i: usize, j: usize) -> (T, usize)
where
    T: Clone + One + Neg<Output = T> + Mul<Output = T>,
{
    let Some((mu, lower)) = mus.split_last() else {
        return (T::one(), 0);
    };
    let half = 1usize << lower.len();
    let (a, top_i) = (i % half, i >= half);
    let (c, top_j) = (j % half, j >= half);
    let conj = |x: usize, v: T| if x == 0 { v } else { -v };
    match (top_i, top_j) {
        (false, false) => unit_product(lower, a, c),
        (false, true) => {
            let (v, k) = unit_product(lower, c, a);
            (v, k + half)
        }
        (true, false) => {
            let (v, k) = unit_product(lower, a, c);
            (conj(c, v), k + half)
        }
        (true, true) => {
            let (v, k) = unit_product(lower, c, a);
            (conj(c, mu.clone() * v), k)
        }
    }
}

pub const LABELS: [&str; 8] = ["1", "e1", "e2", "e3", "e4", "e5", "e6", "e7"];

/// The Cayley–Dickson algebra `O(α, β, γ)` with its norm and the traceless
/// subspace `O₀`.
#[derive(Clone, Debug)]
pub struct CayleyAlgebra {
    params: [Rational; 3],
    product: StructureConstants,
    norm: QMatrix,
    trace0: Subspace,
}

pub fn build_cayley(alpha: Rational, beta: Rational, gamma: Rational) -> Result<CayleyAlgebra, MalcevError> {
    let params = [alpha, beta, gamma];
    if params.iter().any(Rational::is_zero) {
        return Err(MalcevError::ZeroParameter);
    }
    let product = StructureConstants::from_fn(8, false, |i, j| {
        let (c, k) = unit_product(&params, i, j);
        let mut v = vec![Rational::zero(); 8];
        v[k] = c;
        v
    });
    let conj = |v: &[Rational]| -> Vec<Rational> {
        v.iter().enumerate().map(|(i, x)| if i == 0 { x.clone() } else { -x }).collect()
    };
    let half = Rational::new(1, 2);
    let mut norm = QMatrix::zeros(8, 8);
    for i in 0..8 {
        for j in 0..8 {
            let (a, b) = (product.basis_vector(i), product.basis_vector(j));
            let s = &product.mul(&a, &conj(&b))[0] + &product.mul(&b, &conj(&a))[0];
            norm[(i, j)] = s * half.clone();
        }
    }
    let trace = QMatrix::from_rows(vec![(0..8).map(|i| {
        let e = product.basis_vector(i);
        let t: Vec<Rational> = e.iter().zip(conj(&e)).map(|(x, y)| x + &y).collect();
        t[0].clone()
    }).collect()]);
    let o = CayleyAlgebra { params, product, norm, trace0: trace.kernel() };
    if let Some(w) = o.alternative_witness() {
        return Err(MalcevError::NotAlternative { witness: w });
    }
    if let Some((i, j)) = o.norm_witness() {
        return Err(MalcevError::NormNotMultiplicative { i, j });
    }
    Ok(o)
}

impl CayleyAlgebra {
    pub fn octonions() -> CayleyAlgebra {
        let m = Rational::from_integer(-1);
        build_cayley(m.clone(), m.clone(), m).expect("valid parameters")
    }

    pub fn split_octonions() -> CayleyAlgebra {
        let p = Rational::one();
        build_cayley(p.clone(), p.clone(), p).expect("valid parameters")
    }

    pub fn params(&self) -> &[Rational; 3] {
        &self.params
    }

    pub fn product(&self) -> &StructureConstants {
        &self.product
    }

    /// Polar form of the norm: `n(x) = xᵀ N x`.
    pub fn norm_matrix(&self) -> &QMatrix {
        &self.norm
    }

    pub fn trace0(&self) -> &Subspace {
        &self.trace0
    }

    pub fn mul(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        self.product.mul(x, y)
    }

    pub fn norm(&self, x: &[Rational]) -> Rational {
        let nx = self.norm.mul_vec(x);
        x.iter().zip(&nx).map(|(a, b)| a * b).sum()
    }

    pub fn unit(&self) -> Vec<Rational> {
        self.product.basis_vector(0)
    }

    /// Malcev algebra `O₀` with the commutator bracket, in the basis of
    /// [`CayleyAlgebra::trace0`].
    pub fn traceless_malcev(&self) -> StructureConstants {
        self.product.commutator_algebra().restrict(&self.trace0).expect("O₀ is closed under commutators")
    }

    /// First basis triple violating a linearized alternative law:
    /// `a(by) + b(ay) = (ab + ba)y` or `(ya)b + (yb)a = y(ab + ba)`.
    pub fn alternative_witness(&self) -> Option<[usize; 3]> {
        let e = |i| self.product.basis_vector(i);
        for a in 0..8 {
            for b in a..8 {
                let ab_ba: Vec<Rational> =
                    self.mul(&e(a), &e(b)).iter().zip(self.mul(&e(b), &e(a))).map(|(x, y)| x + &y).collect();
                for y in 0..8 {
                    let left: Vec<Rational> = self
                        .mul(&e(a), &self.mul(&e(b), &e(y)))
                        .iter()
                        .zip(self.mul(&e(b), &self.mul(&e(a), &e(y))))
                        .map(|(x, z)| x + &z)
                        .collect();
                    if left != self.mul(&ab_ba, &e(y)) {
                        return Some([a, b, y]);
                    }
                    let right: Vec<Rational> = self
                        .mul(&self.mul(&e(y), &e(a)), &e(b))
                        .iter()
                        .zip(self.mul(&self.mul(&e(y), &e(b)), &e(a)))
                        .map(|(x, z)| x + &z)
                        .collect();
                    if right != self.mul(&e(y), &ab_ba) {
                        return Some([a, b, y]);
                    }
                }
            }
        }
        None
    }

    /// First basis pair with `n(eᵢeⱼ) ≠ n(eᵢ)n(eⱼ)`.
    pub fn norm_witness(&self) -> Option<(usize, usize)> {
        let e = |i| self.product.basis_vector(i);
        (0..8).flat_map(|i| (0..8).map(move |j| (i, j))).find(|&(i, j)| {
            self.norm(&self.mul(&e(i), &e(j))) != self.norm(&e(i)) * self.norm(&e(j))
        })
    }

    /// A nonzero element of norm zero with coefficients in `{-1, 0, 1}`, if any.
    pub fn isotropic_vector(&self) -> Option<Vec<Rational>> {
        let mut digits = [0i64; 8];
        for code in 1..3usize.pow(8) {
            let mut c = code;
            for d in digits.iter_mut() {
                *d = (c % 3) as i64 - 1;
                c /= 3;
            }
            if digits.iter().all(|&d| d == 0) {
                continue;
            }
            let v: Vec<Rational> = digits.iter().map(|&d| Rational::from_integer(d)).collect();
            if self.norm(&v).is_zero() {
                return Some(v);
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::loops::generators::octonion_unit_loop;
    use proptest::prelude::*;

    const TRIPLES: [[usize; 3]; 7] = [[1, 2, 3], [1, 4, 5], [6, 1, 7], [2, 4, 6], [2, 5, 7], [3, 4, 7], [5, 3, 6]];

    fn r(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn octonion_sign_table() {
        let o = CayleyAlgebra::octonions();
        let p = o.product();
        for i in 1..8 {
            assert_eq!(p.basis_product(i, i), &[(0, r(-1))]);
        }
        for t in TRIPLES {
            for s in 0..3 {
                let (i, j, k) = (t[s], t[(s + 1) % 3], t[(s + 2) % 3]);
                assert_eq!(p.basis_product(i, j), &[(k, r(1))], "e{i}e{j}");
                assert_eq!(p.basis_product(j, i), &[(k, r(-1))], "e{j}e{i}");
            }
        }
    }

    #[test]
    fn unit_closure_is_the_octonion_loop() {
        let o = CayleyAlgebra::octonions();
        let q = octonion_unit_loop();
        let signed = |idx: usize| {
            let mut v = o.product().basis_vector(idx / 2);
            if idx % 2 == 1 {
                v = v.iter().map(|x| -x).collect();
            }
            v
        };
        for a in 0..16 {
            for b in 0..16 {
                assert_eq!(o.mul(&signed(a), &signed(b)), signed(q.mul(a, b)));
            }
        }
    }

    #[test]
    fn zero_parameter_rejected() {
        assert_eq!(build_cayley(r(1), r(0), r(2)).unwrap_err(), MalcevError::ZeroParameter);
    }

    #[test]
    fn split_octonions_are_isotropic() {
        let s = CayleyAlgebra::split_octonions();
        let v = s.isotropic_vector().expect("split form");
        assert!(v.iter().any(|x| !x.is_zero()));
        assert!(s.norm(&v).is_zero());
        assert_eq!(CayleyAlgebra::octonions().isotropic_vector(), None);
    }

    #[test]
    fn norm_and_trace() {
        let o = build_cayley(r(2), r(-3), r(5)).unwrap();
        assert!(o.norm(&o.unit()).is_one());
        assert_eq!(o.trace0().dim(), 7);
        assert!(!o.trace0().contains(&o.unit()));
    }

    fn params() -> impl Strategy<Value = [i64; 3]> {
        prop::array::uniform3(prop_oneof![-3i64..=-1, 1i64..=3])
    }

    proptest! {
        #[test]
        fn norm_is_multiplicative(p in params(), x in prop::collection::vec(-4i64..=4, 8), y in prop::collection::vec(-4i64..=4, 8)) {
            let o = build_cayley(r(p[0]), r(p[1]), r(p[2])).unwrap();
            let x: Vec<Rational> = x.into_iter().map(r).collect();
            let y: Vec<Rational> = y.into_iter().map(r).collect();
            prop_assert_eq!(o.norm(&o.mul(&x, &y)), o.norm(&x) * o.norm(&y));
        }

        #[test]
        fn alternative_on_vectors(p in params(), x in prop::collection::vec(-3i64..=3, 8), y in prop::collection::vec(-3i64..=3, 8)) {
            let o = build_cayley(r(p[0]), r(p[1]), r(p[2])).unwrap();
            let x: Vec<Rational> = x.into_iter().map(r).collect();
            let y: Vec<Rational> = y.into_iter().map(r).collect();
            let xx = o.mul(&x, &x);
            prop_assert_eq!(o.mul(&x, &o.mul(&x, &y)), o.mul(&xx, &y));
            prop_assert_eq!(o.mul(&o.mul(&y, &x), &x), o.mul(&y, &xx));
        }
    }
}
