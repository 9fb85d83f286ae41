use super::coalgebra::{convolution_loop, morphism_index, morphisms, ConvOperator, GroupLikeCoalgebra, Morphism};
use super::ConvError;
use crate::hopf::{Bialgebra, Check, Lin, LoopAlgebra};
use crate::loops::{FiniteLoop, Perm};
use crate::sampling::rng;
use rand::Rng;
use serde::Serialize;

/// An element of `G(C, FQ)` for group-like `C`: a bijection of `Q` at each
/// point, acting on the right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GElem(pub Vec<Perm>);

impl GElem {
    pub fn identity(points: usize, n: usize) -> Self {
        GElem(vec![Perm::identity(n); points])
    }

    /// `(A*B)_x = A_x B_x`.
    pub fn conv(&self, other: &GElem) -> GElem {
        GElem(self.0.iter().zip(&other.0).map(|(a, b)| a.then(b)).collect())
    }

    pub fn inverse(&self) -> GElem {
        GElem(self.0.iter().map(Perm::inverse).collect())
    }

    pub fn at(&self, x: usize) -> &Perm {
        &self.0[x]
    }

    pub fn to_operator(&self) -> ConvOperator {
        ConvOperator::from_perms(&self.0)
    }
}

/// `Q` with the operators `L`, `R`, `U` and `S` used by the lifts.
pub struct ConvContext<'a> {
    q: &'a FiniteLoop,
    points: usize,
    s: Perm,
}

/// `L_A`, `R_A`, `U_A` with their inverses, and `A^S`.
#[derive(Clone, Debug)]
pub struct Lifts {
    pub l: GElem,
    pub r: GElem,
    pub u: GElem,
    pub l_inv: GElem,
    pub r_inv: GElem,
    pub u_inv: GElem,
    pub s: GElem,
}

impl<'a> ConvContext<'a> {
    pub fn new(c: &GroupLikeCoalgebra, q: &'a FiniteLoop) -> Self {
        let s = Perm::from_fn(q.order(), |y| q.inv(y)).expect("inversion is a bijection");
        ConvContext { q, points: c.points(), s }
    }

    pub fn loop_(&self) -> &FiniteLoop {
        self.q
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn identity(&self) -> GElem {
        GElem::identity(self.points, self.q.order())
    }

    /// `x ↦ 1A_x`.
    pub fn theta(&self, a: &GElem) -> Morphism {
        a.0.iter().map(|p| p.apply(self.q.unit())).collect()
    }

    pub fn l_op(&self, x: usize) -> Perm {
        self.q.left_mult(x)
    }

    pub fn r_op(&self, x: usize) -> Perm {
        self.q.right_mult(x)
    }

    /// `yU_x = xyx`.
    pub fn u_op(&self, x: usize) -> Perm {
        Perm::from_fn(self.q.order(), |y| self.q.mul(self.q.mul(x, y), x)).expect("U_x is a bijection")
    }

    /// `L_θ: x ↦ L_{xθ}`.
    pub fn l_theta(&self, theta: &[usize]) -> GElem {
        GElem(theta.iter().map(|&t| self.l_op(t)).collect())
    }

    fn lift(&self, a: &GElem, op: impl Fn(usize) -> Perm, invert: bool) -> GElem {
        GElem(self.theta(a).into_iter().map(|t| op(if invert { self.q.inv(t) } else { t })).collect())
    }

    pub fn lifts(&self, a: &GElem) -> Lifts {
        Lifts {
            l: self.lift(a, |t| self.l_op(t), false),
            r: self.lift(a, |t| self.r_op(t), false),
            u: self.lift(a, |t| self.u_op(t), false),
            l_inv: self.lift(a, |t| self.l_op(t), true),
            r_inv: self.lift(a, |t| self.r_op(t), true),
            u_inv: self.lift(a, |t| self.u_op(t), true),
            s: self.s_conj(a),
        }
    }

    /// `A^S: x ↦ SA_xS`.
    pub fn s_conj(&self, a: &GElem) -> GElem {
        GElem(a.0.iter().map(|p| self.s.then(p).then(&self.s)).collect())
    }

    /// `(A, B, C)^ρ = (B^S, C, A^S)`.
    pub fn rho(&self, t: &ConvTriple) -> ConvTriple {
        ConvTriple { a: self.s_conj(&t.b), b: t.c.clone(), c: self.s_conj(&t.a) }
    }

    /// `(A, B, C)^σ = (C, B^S, A)`.
    pub fn sigma(&self, t: &ConvTriple) -> ConvTriple {
        ConvTriple { a: t.c.clone(), b: self.s_conj(&t.b), c: t.a.clone() }
    }

    /// The three triples `(L_A, U_A, L⁻¹_A)`, `(R_A, R⁻¹_A, U_A)`,
    /// `(U_A, L_A, R_A)`.
    pub fn canonical(&self, a: &GElem) -> [ConvTriple; 3] {
        let f = self.lifts(a);
        [
            ConvTriple { a: f.l.clone(), b: f.u.clone(), c: f.l_inv.clone() },
            ConvTriple { a: f.r.clone(), b: f.r_inv, c: f.u.clone() },
            ConvTriple { a: f.u, b: f.l, c: f.r },
        ]
    }

    /// `(L⁻¹_B, U⁻¹_B, L_B)`, the element of `M(Atp_C)` attached to `B`.
    pub fn m_element(&self, b: &GElem) -> ConvTriple {
        let f = self.lifts(b);
        ConvTriple { a: f.l_inv, b: f.u_inv, c: f.l }
    }

    /// `m·n = m^{-ρ} n m^{-ρ²}`.
    pub fn m_product(&self, m: &ConvTriple, n: &ConvTriple) -> ConvTriple {
        let mi = m.inverse();
        let r = self.rho(&mi);
        let rr = self.rho(&r);
        r.conv(n).conv(&rr)
    }

    /// First `(x, y, c)` with `(xy)A_c ≠ (xB_c)(yC_c)`.
    pub fn atpc_witness(&self, t: &ConvTriple) -> Option<(usize, usize, usize)> {
        let q = self.q;
        let n = q.order();
        for c in 0..self.points {
            let (a, b, cc) = (t.a.at(c), t.b.at(c), t.c.at(c));
            for x in 0..n {
                for y in 0..n {
                    if a.apply(q.mul(x, y)) != q.mul(b.apply(x), cc.apply(y)) {
                        return Some((x, y, c));
                    }
                }
            }
        }
        None
    }
}

/// A triple of elements of `G(C, FQ)`, multiplied componentwise.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConvTriple {
    pub a: GElem,
    pub b: GElem,
    pub c: GElem,
}

impl ConvTriple {
    pub fn conv(&self, o: &ConvTriple) -> ConvTriple {
        ConvTriple { a: self.a.conv(&o.a), b: self.b.conv(&o.b), c: self.c.conv(&o.c) }
    }

    pub fn inverse(&self) -> ConvTriple {
        ConvTriple { a: self.a.inverse(), b: self.b.inverse(), c: self.c.inverse() }
    }
}

/// `(xy)A_c = Σ (xB_{c₁})(yC_{c₂})` on all basis pairs and points, for
/// arbitrary operators.
pub fn atpc_membership(
    c: &GroupLikeCoalgebra,
    alg: &LoopAlgebra,
    a: &ConvOperator,
    b: &ConvOperator,
    cc: &ConvOperator,
) -> Option<(usize, usize, usize)> {
    let n = alg.loop_().order();
    for x in 0..c.points() {
        for i in 0..n {
            for j in 0..n {
                let lhs = a.image(x, &alg.mul(&Lin::basis(i), &Lin::basis(j)));
                let mut rhs = Lin::zero();
                for ((x1, x2), k) in c.coproduct(x).iter() {
                    rhs.add_scaled(&alg.mul(&b.image(*x1, &Lin::basis(i)), &cc.image(*x2, &Lin::basis(j))), k);
                }
                if lhs != rhs {
                    return Some((i, j, x));
                }
            }
        }
    }
    None
}

#[derive(Clone, Debug, Serialize)]
pub struct ConvTrialityReport {
    pub points: usize,
    pub loop_order: usize,
    pub seeds: usize,
    pub canonical: usize,
    pub samples: usize,
    pub seed: u64,
    /// The final isomorphism was checked on all pairs of morphisms.
    pub exhaustive: bool,
    pub checks: Vec<Check>,
}

impl ConvTrialityReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Largest `|Mor(C, FQ)|²` for which the final isomorphism is checked on all
/// pairs.
pub const MOR_PAIR_LIMIT: usize = 25_000;

fn random_perm(n: usize, r: &mut impl Rng) -> Perm {
    let mut v: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        v.swap(i, r.gen_range(0..=i));
    }
    Perm::from_images(v).expect("shuffle")
}

/// The triality suite on `Atp_C(FQ)`: canonical triples from every
/// `L_θ`-shaped and a few random elements of `G(C, FQ)`, and `samples`
/// seeded products of them.
pub fn atpc_triality_checks(
    c: &GroupLikeCoalgebra,
    q: &FiniteLoop,
    samples: usize,
    seed: u64,
) -> Result<ConvTrialityReport, ConvError> {
    let cx = ConvContext::new(c, q);
    let n = q.order();
    let k = c.points();
    let mors = morphisms(c, q);
    let mut r = rng(seed);

    let mut seeds: Vec<GElem> = mors.iter().map(|t| cx.l_theta(t)).collect();
    for _ in 0..8 {
        seeds.push(GElem((0..k).map(|_| random_perm(n, &mut r)).collect()));
    }
    let canonical: Vec<ConvTriple> = seeds.iter().flat_map(|a| cx.canonical(a)).collect();
    let mut elems = canonical.clone();
    for _ in 0..samples {
        let len = r.gen_range(2..=4);
        let mut t = canonical[r.gen_range(0..canonical.len())].clone();
        for _ in 1..len {
            let u = &canonical[r.gen_range(0..canonical.len())];
            t = if r.gen_bool(0.5) { t.conv(u) } else { t.conv(&u.inverse()) };
        }
        elems.push(t);
    }

    let id = cx.identity();
    let w3 = |t: usize, p: (usize, usize, usize)| format!("sample {t}: ({}, {}, {})", p.0, p.1, p.2);
    let first = |f: &dyn Fn(&ConvTriple) -> bool| elems.iter().position(|t| !f(t)).map(|i| format!("sample {i}"));

    // lifts of seed elements
    let lift_inverses = seeds
        .iter()
        .position(|a| {
            let f = cx.lifts(a);
            f.l.inverse() != f.l_inv || f.r.inverse() != f.r_inv || f.u.inverse() != f.u_inv
        })
        .map(|i| format!("seed {i}"));
    let s_involution = seeds
        .iter()
        .enumerate()
        .flat_map(|(i, a)| seeds.iter().take(16).map(move |b| (i, a, b)))
        .find(|(_, a, b)| cx.s_conj(&cx.s_conj(a)) != **a || cx.s_conj(&a.conv(b)) != cx.s_conj(a).conv(&cx.s_conj(b)))
        .map(|(i, _, _)| format!("seed {i}"));

    let membership = elems.iter().enumerate().find_map(|(i, t)| cx.atpc_witness(t).map(|p| w3(i, p)));
    let images = elems
        .iter()
        .enumerate()
        .find_map(|(i, t)| cx.atpc_witness(&cx.rho(t)).or_else(|| cx.atpc_witness(&cx.sigma(t))).map(|p| w3(i, p)));
    let s3 = first(&|t| {
        let r = cx.rho(t);
        let rr = cx.rho(&r);
        cx.sigma(&cx.sigma(t)) == *t && cx.rho(&rr) == *t && cx.rho(&cx.sigma(t)) == cx.sigma(&rr)
    });
    let eq3 = first(&|t| {
        let (a, b, cc) = (&t.a, &t.b, &t.c);
        let s = |g: &GElem| cx.s_conj(g);
        let (ai, bi, ci) = (a.inverse(), b.inverse(), cc.inverse());
        let chain = |fs: &[GElem]| fs.iter().fold(id.clone(), |acc, f| acc.conv(f));
        chain(&[ai.clone(), cc.clone(), s(&bi), b.clone(), s(&ci), s(a)]) == id
            && chain(&[bi.clone(), s(b), ci.clone(), a.clone(), s(&ai), s(cc)]) == id
            && chain(&[ci, a.clone(), s(&ai), s(cc), bi, s(b)]) == id
    });
    let generic = first(&|t| {
        let m = t.inverse().conv(&cx.sigma(t));
        let mr = cx.rho(&m);
        let mrr = cx.rho(&mr);
        let p = m.conv(&mr).conv(&mrr);
        p.a == id && p.b == id && p.c == id
    });
    let m_elements = first(&|t| t.inverse().conv(&cx.sigma(t)) == cx.m_element(&t.b));
    let middle = first(&|t| {
        let (fb, fc) = (cx.lifts(&t.b), cx.lifts(&t.c));
        t.a == t.b.conv(&fc.r) && t.a == t.c.conv(&fb.l)
    });
    let decomposition = first(&|t| {
        let fb = cx.lifts(&t.b);
        let d = t.b.conv(&fb.r_inv);
        let d1 = t.a.conv(&fb.r);
        let dd = ConvTriple { a: d1.clone(), b: d.clone(), c: d1.clone() };
        let tail = ConvTriple { a: fb.r_inv.clone(), b: fb.r.clone(), c: fb.u_inv.clone() };
        t.c.conv(&fb.u) == d1 && cx.s_conj(&d) == d && cx.atpc_witness(&dd).is_none() && dd.conv(&tail) == *t
    });

    let mut product = None;
    for i in 0..samples.min(1000) {
        let b1 = &seeds[r.gen_range(0..seeds.len())];
        let b2 = &seeds[r.gen_range(0..seeds.len())];
        let lhs = cx.m_product(&cx.m_element(b1), &cx.m_element(b2));
        let b3 = cx.lifts(b1).l.conv(&cx.lifts(b2).r);
        if lhs != cx.m_element(&b3) || cx.lifts(&b3).l != cx.lifts(&cx.lifts(b1).l.conv(&cx.lifts(b2).r)).l {
            product = Some(format!("draw {i}"));
            break;
        }
    }

    let (iso, exhaustive) = final_isomorphism(&cx, &mors, seed);
    Ok(ConvTrialityReport {
        points: k,
        loop_order: n,
        seeds: seeds.len(),
        canonical: canonical.len(),
        samples,
        seed,
        exhaustive,
        checks: vec![
            Check::new("lift_inverses", lift_inverses),
            Check::new("s_involutive_automorphism", s_involution),
            Check::new("membership", membership),
            Check::new("rho_sigma_images", images),
            Check::new("s3_relations", s3),
            Check::new("triality_equalities", eq3),
            Check::new("triality_generic", generic),
            Check::new("m_elements", m_elements),
            Check::new("middle_hopf", middle),
            Check::new("decomposition", decomposition),
            Check::new("product_formula", product),
            iso,
        ],
    })
}

/// `θ ↦ L_θ` is injective, `L_{L_θ} = L_θ`, and it carries convolution to
/// the product of `M(Atp_C)`; on all pairs when `|Mor|² ≤ MOR_PAIR_LIMIT`.
fn final_isomorphism(cx: &ConvContext<'_>, mors: &[Morphism], seed: u64) -> (Check, bool) {
    let n = cx.loop_().order();
    let c = GroupLikeCoalgebra::new(cx.points());
    let conv = convolution_loop(&c, cx.loop_()).ok();
    let elems: Vec<ConvTriple> = mors.iter().map(|t| cx.m_element(&cx.l_theta(t))).collect();
    let mut seen = std::collections::HashSet::new();
    if let Some(i) = mors.iter().position(|t| !seen.insert(cx.l_theta(t))) {
        return (Check::new("final_isomorphism", Some(format!("L_θ repeats at {i}"))), false);
    }
    if let Some(i) = mors.iter().position(|t| {
        let l = cx.l_theta(t);
        cx.lifts(&l).l != l
    }) {
        return (Check::new("final_isomorphism", Some(format!("L_(L_θ) ≠ L_θ at {i}"))), false);
    }
    let total = mors.len() * mors.len();
    let exhaustive = total <= MOR_PAIR_LIMIT;
    let pairs: Vec<(usize, usize)> = if exhaustive {
        (0..mors.len()).flat_map(|i| (0..mors.len()).map(move |j| (i, j))).collect()
    } else {
        let mut r = rng(seed ^ 0x5eed);
        (0..MOR_PAIR_LIMIT).map(|_| (r.gen_range(0..mors.len()), r.gen_range(0..mors.len()))).collect()
    };
    let q = cx.loop_();
    let witness = pairs.into_iter().find(|&(i, j)| {
        let prod: Morphism = mors[i].iter().zip(&mors[j]).map(|(&a, &b)| q.mul(a, b)).collect();
        let via_table = conv.as_ref().map_or(true, |l| l.mul(i, j) == morphism_index(&prod, n));
        !via_table || cx.m_product(&elems[i], &elems[j]) != cx.m_element(&cx.l_theta(&prod))
    });
    (Check::new("final_isomorphism", witness.map(|(i, j)| format!("({i}, {j})"))), exhaustive)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::autotopy::{is_autotopy, AutotopyTriple};
    use crate::hopf::LoopAlgebra;
    use crate::loops::generators::*;
    use crate::sampling::DEFAULT_SEED;

    fn chein() -> FiniteLoop {
        chein_loop(&symmetric_group(3)).unwrap()
    }

    #[test]
    fn identity_lifts() {
        let q = chein();
        let c = GroupLikeCoalgebra::new(2);
        let cx = ConvContext::new(&c, &q);
        let id = cx.identity();
        let f = cx.lifts(&id);
        for g in [&f.l, &f.r, &f.u, &f.l_inv, &f.r_inv, &f.u_inv, &f.s] {
            assert_eq!(*g, id);
        }
        let t = ConvTriple { a: id.clone(), b: id.clone(), c: id };
        assert_eq!(cx.atpc_witness(&t), None);
    }

    #[test]
    fn canonical_triples_are_members() {
        let q = chein();
        let c = GroupLikeCoalgebra::new(2);
        let cx = ConvContext::new(&c, &q);
        let alg = LoopAlgebra::new(q.clone()).unwrap();
        let a = GElem(vec![q.left_mult(5).then(&q.right_mult(2)), q.right_mult(9)]);
        for t in cx.canonical(&a) {
            assert_eq!(cx.atpc_witness(&t), None);
            let ops = [t.a.to_operator(), t.b.to_operator(), t.c.to_operator()];
            assert_eq!(atpc_membership(&c, &alg, &ops[0], &ops[1], &ops[2]), None);
        }
        let f = cx.lifts(&a);
        assert_eq!(cx.s_conj(&f.s), a);
        let bad = ConvTriple { a: f.l.clone(), b: f.u.clone(), c: f.l.clone() };
        assert!(cx.atpc_witness(&bad).is_some());
        let ops = [bad.a.to_operator(), bad.b.to_operator(), bad.c.to_operator()];
        assert!(atpc_membership(&c, &alg, &ops[0], &ops[1], &ops[2]).is_some());
    }

    #[test]
    fn single_point_matches_autotopies() {
        let q = chein();
        let c = GroupLikeCoalgebra::new(1);
        let cx = ConvContext::new(&c, &q);
        let j = Perm::from_fn(12, |y| q.inv(y)).unwrap();
        for x in 0..12 {
            for t in cx.canonical(&cx.l_theta(&[x])) {
                let at = AutotopyTriple::new(t.a.at(0).clone(), t.b.at(0).clone(), t.c.at(0).clone());
                assert!(is_autotopy(&q, &at));
                let r = cx.rho(&t);
                assert_eq!(at.rho(&j), AutotopyTriple::new(r.a.0[0].clone(), r.b.0[0].clone(), r.c.0[0].clone()));
                let s = cx.sigma(&t);
                assert_eq!(at.sigma(&j), AutotopyTriple::new(s.a.0[0].clone(), s.b.0[0].clone(), s.c.0[0].clone()));
            }
        }
    }

    #[test]
    fn single_point_chein_suite() {
        let rep = atpc_triality_checks(&GroupLikeCoalgebra::new(1), &chein(), 200, DEFAULT_SEED).unwrap();
        assert!(rep.passed(), "{rep:?}");
        assert!(rep.exhaustive);
    }

    #[test]
    fn two_points_c4_suite() {
        let rep = atpc_triality_checks(&GroupLikeCoalgebra::new(2), &cyclic_group(4), 300, DEFAULT_SEED).unwrap();
        assert!(rep.passed(), "{rep:?}");
        assert!(rep.exhaustive);
    }

    #[test]
    fn rho_needs_s_conjugation() {
        let q = chein();
        let c = GroupLikeCoalgebra::new(2);
        let cx = ConvContext::new(&c, &q);
        let a = GElem(vec![q.left_mult(7), q.left_mult(3)]);
        let [t, _, _] = cx.canonical(&a);
        assert_eq!(cx.atpc_witness(&cx.rho(&t)), None);
        let naive = ConvTriple { a: t.b.clone(), b: t.c.clone(), c: t.a.clone() };
        assert!(cx.atpc_witness(&naive).is_some());
    }

    #[test]
    fn trivial_case() {
        let rep = atpc_triality_checks(&GroupLikeCoalgebra::new(1), &cyclic_group(1), 10, DEFAULT_SEED).unwrap();
        assert!(rep.passed());
    }

    #[test]
    fn morphisms_are_fixed_by_l() {
        let q = chein();
        let c = GroupLikeCoalgebra::new(2);
        let cx = ConvContext::new(&c, &q);
        for t in morphisms(&c, &q).iter().step_by(11) {
            let l = cx.l_theta(t);
            assert_eq!(cx.theta(&l), *t);
            assert_eq!(cx.lifts(&l).l, l);
        }
    }
}
