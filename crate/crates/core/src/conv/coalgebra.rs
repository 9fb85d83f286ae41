use super::ConvError;
use crate::hopf::{Bialgebra, Lin, LoopAlgebra, Tensor};
use crate::loops::{FiniteLoop, Perm};
use crate::qcore::{QMatrix, Rational};
use serde::Serialize;

/// Largest `|Q|^|X|` accepted by [`convolution_loop`].
pub const MAX_CONV_ORDER: usize = 4096;

/// The coalgebra spanned by a finite set `X` of group-like points.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroupLikeCoalgebra {
    points: usize,
}

impl GroupLikeCoalgebra {
    pub fn new(points: usize) -> Self {
        GroupLikeCoalgebra { points }
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn coproduct(&self, x: usize) -> Tensor<usize> {
        Lin::basis((x, x))
    }

    pub fn counit(&self, _: usize) -> Rational {
        Rational::one()
    }
}

/// A coalgebra morphism `X → FQ`, recorded by the group-like image of each
/// point.
pub type Morphism = Vec<usize>;

/// Index of `f` in the base-`|Q|` enumeration of `Q^X`.
pub fn morphism_index(f: &[usize], n: usize) -> usize {
    f.iter().rev().fold(0, |acc, &v| acc * n + v)
}

pub fn morphism_at(index: usize, n: usize, points: usize) -> Morphism {
    let mut f = Vec::with_capacity(points);
    let mut i = index;
    for _ in 0..points {
        f.push(i % n);
        i /= n;
    }
    f
}

/// Every coalgebra morphism, in index order.
pub fn morphisms(c: &GroupLikeCoalgebra, q: &FiniteLoop) -> Vec<Morphism> {
    let n = q.order();
    (0..n.pow(c.points() as u32)).map(|i| morphism_at(i, n, c.points())).collect()
}

/// `Mor(C, FQ)` with `c(f*g) = Σ (c₁f)(c₂g)`, as a loop on `Q^X`.
pub fn convolution_loop(c: &GroupLikeCoalgebra, q: &FiniteLoop) -> Result<FiniteLoop, ConvError> {
    let n = q.order();
    let order = (n as u128).pow(c.points() as u32);
    if order > MAX_CONV_ORDER as u128 {
        return Err(ConvError::TooLarge { order, cap: MAX_CONV_ORDER });
    }
    let k = c.points();
    Ok(FiniteLoop::from_fn(order as usize, |a, b| {
        let (f, g) = (morphism_at(a, n, k), morphism_at(b, n, k));
        let h: Vec<usize> = (0..k).map(|x| q.mul(f[x], g[x])).collect();
        morphism_index(&h, n)
    })?)
}

/// `c(f*g) = Σ (c₁f)(c₂g)` evaluated in `FQ` from the coproduct of each
/// point.
pub fn convolve(c: &GroupLikeCoalgebra, alg: &LoopAlgebra, f: &[Lin<usize>], g: &[Lin<usize>]) -> Vec<Lin<usize>> {
    (0..c.points())
        .map(|x| {
            let mut out = Lin::zero();
            for ((x1, x2), k) in c.coproduct(x).iter() {
                out.add_scaled(&alg.mul(&f[*x1], &g[*x2]), k);
            }
            out
        })
        .collect()
}

/// An element of `Hom(C, End(FQ))`: one matrix per point, whose column `y`
/// is `yA_x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvOperator {
    pub mats: Vec<QMatrix>,
}

impl ConvOperator {
    /// `x ↦ ε(x) Id`.
    pub fn identity(c: &GroupLikeCoalgebra, n: usize) -> Self {
        ConvOperator { mats: (0..c.points()).map(|x| QMatrix::identity(n).scale(&c.counit(x))).collect() }
    }

    pub fn from_perms(perms: &[Perm]) -> Self {
        let mats = perms
            .iter()
            .map(|p| {
                let n = p.degree();
                let mut m = QMatrix::zeros(n, n);
                for y in 0..n {
                    m[(p.apply(y), y)] = Rational::one();
                }
                m
            })
            .collect();
        ConvOperator { mats }
    }

    /// `yA_x` as an element of `FQ`.
    pub fn image(&self, x: usize, y: &Lin<usize>) -> Lin<usize> {
        let m = &self.mats[x];
        let mut out = Lin::zero();
        for (b, c) in y.iter() {
            for i in 0..m.rows() {
                let e = &m[(i, *b)];
                if !e.is_zero() {
                    out.add_term(i, &(c * e));
                }
            }
        }
        out
    }

    /// `(A*B)_x = Σ A_{x₁}B_{x₂}`; with operators on the right the matrix of
    /// `A_{x₁}B_{x₂}` is `M_B M_A`.
    pub fn conv(&self, other: &ConvOperator, c: &GroupLikeCoalgebra) -> ConvOperator {
        let n = self.mats[0].rows();
        let mats = (0..c.points())
            .map(|x| {
                let mut acc = QMatrix::zeros(n, n);
                for ((x1, x2), k) in c.coproduct(x).iter() {
                    acc = &acc + &(&other.mats[*x2] * &self.mats[*x1]).scale(k);
                }
                acc
            })
            .collect();
        ConvOperator { mats }
    }

    /// The permutation of `Q` carried by each matrix, if every matrix is a
    /// permutation matrix.
    pub fn to_perms(&self) -> Option<Vec<Perm>> {
        self.mats
            .iter()
            .map(|m| {
                let images: Option<Vec<usize>> = (0..m.cols())
                    .map(|y| {
                        let col = m.column(y);
                        let nz: Vec<usize> = (0..col.len()).filter(|&i| !col[i].is_zero()).collect();
                        (nz.len() == 1 && col[nz[0]].is_one()).then(|| nz[0])
                    })
                    .collect();
                Perm::from_images(images?)
            })
            .collect()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GMembership {
    pub invertible: Option<usize>,
    /// `(x, y)` with `ε(yA_x) ≠ ε(y)ε(x)`.
    pub counit: Option<(usize, usize)>,
    /// `(x, y)` with `Δ(yA_x) ≠ Σ y₁A_{x₁} ⊗ y₂A_{x₂}`.
    pub coproduct: Option<(usize, usize)>,
}

impl GMembership {
    pub fn member(&self) -> bool {
        self.invertible.is_none() && self.counit.is_none() && self.coproduct.is_none()
    }
}

/// Conditions (1)–(3) of `G(C, FQ)` on the basis `Q` and the points of `X`;
/// for group-like `C` invertibility in the convolution algebra is
/// invertibility of each matrix.
pub fn g_membership(c: &GroupLikeCoalgebra, alg: &LoopAlgebra, a: &ConvOperator) -> GMembership {
    let n = alg.loop_().order();
    let invertible = (0..c.points()).find(|&x| a.mats[x].inverse().is_none());
    let mut counit = None;
    let mut coproduct = None;
    for x in 0..c.points() {
        for y in 0..n {
            let yl = Lin::basis(y);
            let img = a.image(x, &yl);
            if counit.is_none() && alg.counit(&img) != &alg.counit(&yl) * &c.counit(x) {
                counit = Some((x, y));
            }
            if coproduct.is_none() {
                let mut rhs: Tensor<usize> = Lin::zero();
                for ((y1, y2), cy) in alg.coproduct(&yl).iter() {
                    for ((x1, x2), cx) in c.coproduct(x).iter() {
                        let (l, r) = (a.image(*x1, &Lin::basis(*y1)), a.image(*x2, &Lin::basis(*y2)));
                        let coeff = cy * cx;
                        for (p, cp) in l.iter() {
                            for (q, cq) in r.iter() {
                                rhs.add_term((*p, *q), &(&coeff * &(cp * cq)));
                            }
                        }
                    }
                }
                if alg.coproduct(&img) != rhs {
                    coproduct = Some((x, y));
                }
            }
        }
    }
    GMembership { invertible, counit, coproduct }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::loops::generators::*;
    use crate::loops::is_moufang;

    #[test]
    fn single_point_is_q() {
        let q = chein_loop(&symmetric_group(3)).unwrap();
        let l = convolution_loop(&GroupLikeCoalgebra::new(1), &q).unwrap();
        assert_eq!(l.rows(), q.rows());
    }

    #[test]
    fn two_points_chein_is_moufang_of_order_144() {
        let q = chein_loop(&symmetric_group(3)).unwrap();
        let l = convolution_loop(&GroupLikeCoalgebra::new(2), &q).unwrap();
        assert_eq!(l.order(), 144);
        assert!(is_moufang(&l));
        assert!(!l.is_associative());
        assert_eq!(l.unit(), morphism_index(&[q.unit(), q.unit()], 12));
    }

    #[test]
    fn groups_give_groups() {
        let l = convolution_loop(&GroupLikeCoalgebra::new(3), &symmetric_group(3)).unwrap();
        assert_eq!(l.order(), 216);
        assert!(l.is_associative());
    }

    #[test]
    fn size_cap() {
        let q = octonion_unit_loop();
        assert!(matches!(convolution_loop(&GroupLikeCoalgebra::new(4), &q), Err(ConvError::TooLarge { .. })));
    }

    #[test]
    fn table_matches_morphism_level_product() {
        let q = chein_loop(&symmetric_group(3)).unwrap();
        let c = GroupLikeCoalgebra::new(2);
        let l = convolution_loop(&c, &q).unwrap();
        let alg = LoopAlgebra::new(q.clone()).unwrap();
        let all = morphisms(&c, &q);
        let lift = |f: &Morphism| -> Vec<Lin<usize>> { f.iter().map(|&v| Lin::basis(v)).collect() };
        for (i, f) in all.iter().enumerate().step_by(7) {
            for (j, g) in all.iter().enumerate().step_by(5) {
                let h = convolve(&c, &alg, &lift(f), &lift(g));
                assert_eq!(h, lift(&all[l.mul(i, j)]));
            }
        }
    }

    #[test]
    fn conv_algebra_laws() {
        use crate::sampling::{rng, DEFAULT_SEED};
        use rand::Rng;
        let c = GroupLikeCoalgebra::new(2);
        let n = 3;
        let mut r = rng(DEFAULT_SEED);
        let random = |r: &mut rand_chacha::ChaCha8Rng| ConvOperator {
            mats: (0..2)
                .map(|_| {
                    QMatrix::from_flat(n, n, (0..n * n).map(|_| Rational::from_integer(r.gen_range(-2..=2))).collect())
                })
                .collect(),
        };
        let id = ConvOperator::identity(&c, n);
        for _ in 0..100 {
            let (a, b, d) = (random(&mut r), random(&mut r), random(&mut r));
            assert_eq!(a.conv(&b, &c).conv(&d, &c), a.conv(&b.conv(&d, &c), &c));
            assert_eq!(a.conv(&id, &c), a);
            assert_eq!(id.conv(&a, &c), a);
        }
        // group-like points: (A*B)_x is A_x then B_x
        let a = random(&mut r);
        let b = random(&mut r);
        let y = Lin::basis(1);
        assert_eq!(a.conv(&b, &c).image(0, &y), b.image(0, &a.image(0, &y)));
    }

    #[test]
    fn membership() {
        let q = chein_loop(&symmetric_group(3)).unwrap();
        let alg = LoopAlgebra::new(q.clone()).unwrap();
        let c = GroupLikeCoalgebra::new(2);
        assert!(g_membership(&c, &alg, &ConvOperator::identity(&c, 12)).member());
        let l = ConvOperator::from_perms(&[q.left_mult(3), q.left_mult(7)]);
        assert!(g_membership(&c, &alg, &l).member());
        assert_eq!(l.to_perms().unwrap(), vec![q.left_mult(3), q.left_mult(7)]);
        // y = 0 goes to (e0 + e1)/2, which is not group-like but has counit 1
        let mut bad = l.clone();
        let mut m = QMatrix::identity(12);
        m[(0, 0)] = Rational::new(1, 2);
        m[(1, 0)] = Rational::new(1, 2);
        bad.mats[1] = m;
        let rep = g_membership(&c, &alg, &bad);
        assert_eq!((rep.invertible, rep.counit, rep.coproduct), (None, None, Some((1, 0))));
        assert!(bad.to_perms().is_none());
    }
}
