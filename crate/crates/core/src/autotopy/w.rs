use super::atp::{right_triple, u_op, AtpGroup};
use super::psaut::{is_pseudoautomorphism, Pseudoautomorphism};
use super::triple::{is_autotopy, AutotopyTriple};
use crate::gtriality::{s3_relation_witness, triality_holds_at, TrialityGroupLike};
use crate::loops::{FiniteLoop, Perm};
use crate::sampling;
use serde::Serialize;
use std::collections::HashMap;

const PAIR_LIMIT: usize = 1_000_000;
const TRIPLE_LIMIT: usize = 2_000_000;

/// `[(A,a), x] ∈ PsAut(Q) × Q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct WElement {
    pub ps: Pseudoautomorphism,
    pub x: usize,
}

/// `R_{x,y} = R_x R_y R_{xy}⁻¹`.
pub fn r_pair(q: &FiniteLoop, x: usize, y: usize) -> Perm {
    q.right_mult(x).then(&q.right_mult(y)).then(&q.right_mult(q.mul(x, y)).inverse())
}

/// `u⁻¹v⁻¹uv`, bracketed left to right.
pub fn loop_commutator(q: &FiniteLoop, u: usize, v: usize) -> usize {
    q.mul(q.mul(q.mul(q.inv(u), q.inv(v)), u), v)
}

/// `(T_x, x⁻³)` with `T_x = L_x⁻¹R_x`.
pub fn t_pseudo(q: &FiniteLoop, x: usize) -> Pseudoautomorphism {
    Pseudoautomorphism { map: q.left_mult(x).inverse().then(&q.right_mult(x)), companion: q.pow(x, -3) }
}

/// `W(Q) = PsAut(Q) × Q` with its twisted product and triality.
#[derive(Clone, Debug)]
pub struct WGroup {
    q: FiniteLoop,
    psaut: Vec<Pseudoautomorphism>,
    elements: Vec<WElement>,
}

impl WGroup {
    /// Elements ordered lexicographically by (pseudoautomorphism, loop index).
    pub fn new(q: &FiniteLoop, mut psaut: Vec<Pseudoautomorphism>) -> Self {
        psaut.sort();
        let elements = psaut
            .iter()
            .flat_map(|p| (0..q.order()).map(move |x| WElement { ps: p.clone(), x }))
            .collect();
        WGroup { q: q.clone(), psaut, elements }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn list(&self) -> &[WElement] {
        &self.elements
    }

    pub fn contains(&self, w: &WElement) -> bool {
        w.x < self.q.order() && self.psaut.binary_search(&w.ps).is_ok()
    }

    pub fn position(&self, w: &WElement) -> Option<usize> {
        self.elements.binary_search(w).ok()
    }

    /// `[(A,a),x][(B,b),y] = [(A,a)(B,b)(C,c), xB·y]` with
    /// `(C,c) = (R_{b,xB}, [b, xB])(R_{xB,y}, [xB, y])`.
    pub fn product(&self, u: &WElement, v: &WElement) -> WElement {
        let q = &self.q;
        let (b, y) = (v.ps.companion, v.x);
        let xb = v.ps.map.apply(u.x);
        let c1 = Pseudoautomorphism { map: r_pair(q, b, xb), companion: loop_commutator(q, b, xb) };
        let c2 = Pseudoautomorphism { map: r_pair(q, xb, y), companion: loop_commutator(q, xb, y) };
        let ps = u.ps.then(q, &v.ps).then(q, &c1.then(q, &c2));
        WElement { ps, x: q.mul(xb, y) }
    }

    /// `[(A,a),x]^ρ = [(A,a),a][(T_x, x⁻³), x⁻²]`.
    pub fn rho_of(&self, w: &WElement) -> WElement {
        let q = &self.q;
        let left = WElement { ps: w.ps.clone(), x: w.ps.companion };
        let right = WElement { ps: t_pseudo(q, w.x), x: q.pow(w.x, -2) };
        self.product(&left, &right)
    }

    /// `[(A,a),x]^σ = [(A,a)(T_x, x⁻³), x⁻¹]`.
    pub fn sigma_of(&self, w: &WElement) -> WElement {
        let q = &self.q;
        WElement { ps: w.ps.then(q, &t_pseudo(q, w.x)), x: q.inv(w.x) }
    }
}

impl TrialityGroupLike for WGroup {
    type Elem = WElement;

    fn identity(&self) -> WElement {
        WElement { ps: Pseudoautomorphism::identity(self.q.order()), x: 0 }
    }

    fn mul(&self, a: &WElement, b: &WElement) -> WElement {
        self.product(a, b)
    }

    /// `a⁻¹ = a^{k-1}` where `k` is the order of `a`.
    fn inv(&self, a: &WElement) -> WElement {
        let e = self.identity();
        let mut prev = e.clone();
        let mut cur = a.clone();
        for _ in 0..=self.order() {
            if cur == e {
                return prev;
            }
            prev = cur.clone();
            cur = self.product(&cur, a);
        }
        panic!("powers of a W(Q) element never reach the identity")
    }

    fn rho(&self, a: &WElement) -> WElement {
        self.rho_of(a)
    }

    fn sigma(&self, a: &WElement) -> WElement {
        self.sigma_of(a)
    }

    fn elements(&self) -> Vec<WElement> {
        self.elements.clone()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct WReport {
    pub order: usize,
    pub companions_valid: bool,
    pub closed: bool,
    pub associativity_checked: usize,
    pub associativity_exhaustive: bool,
    pub associativity_failure: Option<[usize; 3]>,
    pub automorphism_failure: Option<(usize, usize)>,
    pub s3_relation: Option<String>,
    pub triality_failure: Option<usize>,
}

impl WReport {
    pub fn passed(&self) -> bool {
        self.companions_valid
            && self.closed
            && self.associativity_failure.is_none()
            && self.automorphism_failure.is_none()
            && self.s3_relation.is_none()
            && self.triality_failure.is_none()
    }
}

/// Verifies the group law, the automorphisms `ρ, σ`, the `S₃` relations and
/// the triality identity on `W(Q)`.
pub fn check_w_group(w: &WGroup, seed: u64) -> WReport {
    let q = &w.q;
    let n = w.order();
    let companions_valid = (0..q.order()).all(|x| is_pseudoautomorphism(q, &t_pseudo(q, x)))
        && (0..q.order()).all(|u| {
            (0..q.order()).all(|v| {
                is_pseudoautomorphism(q, &Pseudoautomorphism { map: r_pair(q, u, v), companion: loop_commutator(q, u, v) })
            })
        });
    let (pairs, _) = sampling::pair_coverage(n, PAIR_LIMIT, sampling::SAMPLE_COUNT, seed);
    let closed = pairs.iter().all(|&(i, j)| w.contains(&w.product(&w.elements[i], &w.elements[j])))
        && w.elements.iter().all(|e| w.contains(&w.rho_of(e)) && w.contains(&w.sigma_of(e)));
    let (triples, associativity_exhaustive) = sampling::triple_coverage(n, TRIPLE_LIMIT, sampling::SAMPLE_COUNT, seed);
    let associativity_failure = triples.iter().copied().find(|&[i, j, k]| {
        let (a, b, c) = (&w.elements[i], &w.elements[j], &w.elements[k]);
        w.product(&w.product(a, b), c) != w.product(a, &w.product(b, c))
    });
    let automorphism_failure = pairs.iter().copied().find(|&(i, j)| {
        let (a, b) = (&w.elements[i], &w.elements[j]);
        let ab = w.product(a, b);
        w.rho_of(&ab) != w.product(&w.rho_of(a), &w.rho_of(b))
            || w.sigma_of(&ab) != w.product(&w.sigma_of(a), &w.sigma_of(b))
    });
    let (idx, _) = sampling::coverage(n, seed);
    let elems: Vec<WElement> = idx.iter().map(|&i| w.elements[i].clone()).collect();
    let s3_relation = s3_relation_witness(w, &elems).map(|(r, _)| r.to_string());
    let triality_failure = idx.iter().copied().find(|&i| !triality_holds_at(w, &w.elements[i]));
    WReport {
        order: n,
        companions_valid,
        closed,
        associativity_checked: triples.len(),
        associativity_exhaustive,
        associativity_failure,
        automorphism_failure,
        s3_relation,
        triality_failure,
    }
}

/// `ψ(A₁,A₂,A₃) = [(A₂R_x⁻¹, (1A₁)·x), x]` with `x = 1A₂`.
pub fn psi(q: &FiniteLoop, t: &AutotopyTriple) -> WElement {
    let x = t.a2.apply(0);
    let map = t.a2.then(&q.right_mult(x).inverse());
    WElement { ps: Pseudoautomorphism { map, companion: q.mul(t.a1.apply(0), x) }, x }
}

#[derive(Clone, Debug, Serialize)]
pub struct PsiReport {
    pub atp_order: usize,
    pub w_order: usize,
    pub bijective: bool,
    pub pairs_checked: usize,
    pub pairs_exhaustive: bool,
    pub multiplicative_failure: Option<(usize, usize)>,
    pub equivariance_failure: Option<usize>,
}

impl PsiReport {
    pub fn passed(&self) -> bool {
        self.bijective && self.multiplicative_failure.is_none() && self.equivariance_failure.is_none()
    }
}

/// Checks that `ψ: Atp(Q) → W(Q)` is a bijective, multiplicative map
/// commuting with `ρ` and `σ`. Products are checked on all pairs up to a
/// million, otherwise on a seeded sample plus all pairs of canonical triples.
pub fn psi_iso(atp: &AtpGroup, w: &WGroup, seed: u64) -> PsiReport {
    let q = atp.loop_();
    let list = atp.list();
    let images: Vec<WElement> = list.iter().map(|t| psi(q, t)).collect();
    let mut seen: HashMap<&WElement, usize> = HashMap::new();
    for (i, im) in images.iter().enumerate() {
        seen.entry(im).or_insert(i);
    }
    let bijective =
        list.len() == w.order() && seen.len() == images.len() && images.iter().all(|im| w.contains(im));
    let (mut pairs, pairs_exhaustive) = sampling::pair_coverage(list.len(), PAIR_LIMIT, sampling::SAMPLE_COUNT, seed);
    if !pairs_exhaustive {
        let canon: Vec<usize> = (0..q.order())
            .flat_map(|x| {
                let r = right_triple(q, x);
                [atp.position(&r), atp.position(&r.inverse())]
            })
            .flatten()
            .collect();
        pairs.extend(canon.iter().flat_map(|&i| canon.iter().map(move |&j| (i, j))));
    }
    let multiplicative_failure = pairs.iter().copied().find(|&(i, j)| {
        let st = list[i].then(&list[j]);
        psi(q, &st) != w.product(&images[i], &images[j])
    });
    let equivariance_failure = (0..list.len()).find(|&i| {
        psi(q, &atp.rho(&list[i])) != w.rho_of(&images[i]) || psi(q, &atp.sigma(&list[i])) != w.sigma_of(&images[i])
    });
    PsiReport {
        atp_order: list.len(),
        w_order: w.order(),
        bijective,
        pairs_checked: pairs.len(),
        pairs_exhaustive,
        multiplicative_failure,
        equivariance_failure,
    }
}

/// `t = d·r` with `r = (R_x⁻¹, R_x, U_x⁻¹)`, `x = 1A₂`, and `d` of shape `(A′, A, A′)`.
#[derive(Clone, Debug, Serialize)]
pub struct Decomposition {
    pub d: AutotopyTriple,
    pub r: AutotopyTriple,
}

impl Decomposition {
    /// Recomposes, and checks the shape of `d` and that `JAJ = A`.
    pub fn verify(&self, q: &FiniteLoop, t: &AutotopyTriple, j: &Perm) -> bool {
        self.d.then(&self.r) == *t
            && is_autotopy(q, &self.d)
            && is_autotopy(q, &self.r)
            && self.d.a2.apply(0) == 0
            && self.d.a1 == self.d.a3
            && self.d.a2.conjugate_by(j) == self.d.a2
    }
}

pub fn decompose_autotopy(q: &FiniteLoop, t: &AutotopyTriple) -> Decomposition {
    let x = t.a2.apply(0);
    let rx = q.right_mult(x);
    let r = AutotopyTriple::new(rx.inverse(), rx, u_op(q, x).inverse());
    let d = t.then(&r.inverse());
    Decomposition { d, r }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::autotopy::psaut::psaut_search;
    use crate::loops::generators::*;
    use crate::loops::inversion_map;

    fn w_of(q: &FiniteLoop) -> WGroup {
        WGroup::new(q, psaut_search(q))
    }

    #[test]
    fn commutator_bracketing_is_irrelevant() {
        let q = chein_loop(&symmetric_group(3)).unwrap();
        for u in 0..12 {
            for v in 0..12 {
                let (ui, vi) = (q.inv(u), q.inv(v));
                let right = q.mul(ui, q.mul(vi, q.mul(u, v)));
                let paired = q.mul(q.mul(ui, vi), q.mul(u, v));
                let c = loop_commutator(&q, u, v);
                assert_eq!(c, right);
                assert_eq!(c, paired);
            }
            assert_eq!(q.pow(u, -3), q.mul(q.inv(u), q.mul(q.inv(u), q.inv(u))));
        }
    }

    #[test]
    fn trivial_loop() {
        let q = cyclic_group(1);
        let w = w_of(&q);
        assert_eq!(w.order(), 1);
        assert!(check_w_group(&w, 1).passed());
    }

    #[test]
    fn c4_is_exhaustively_associative() {
        let q = cyclic_group(4);
        let w = w_of(&q);
        let rep = check_w_group(&w, 1);
        assert!(rep.associativity_exhaustive);
        assert!(rep.passed(), "{rep:?}");
        let atp = AtpGroup::new(&q).unwrap();
        assert!(psi_iso(&atp, &w, 1).passed());
    }

    #[test]
    fn psi_of_identity() {
        let q = chein_loop(&symmetric_group(3)).unwrap();
        let w = psi(&q, &AutotopyTriple::identity(12));
        assert_eq!(w, WElement { ps: Pseudoautomorphism::identity(12), x: 0 });
    }

    #[test]
    fn psi_of_canonical_triple() {
        let q = chein_loop(&symmetric_group(3)).unwrap();
        for x in 0..12 {
            let rx = q.right_mult(x);
            let t = AutotopyTriple::new(rx.inverse(), rx.clone(), u_op(&q, x).inverse());
            let w = psi(&q, &t);
            // A = R_x R_x⁻¹ = id, a = (1R_x⁻¹)·x = x⁻¹x = 1
            assert_eq!(w.ps, Pseudoautomorphism::identity(12));
            assert_eq!(w.x, x);
        }
    }

    #[test]
    fn decomposition() {
        let q = chein_loop(&symmetric_group(3)).unwrap();
        let j = inversion_map(&q).unwrap();
        let id = AutotopyTriple::identity(12);
        let dec = decompose_autotopy(&q, &id);
        assert!(dec.d.is_identity() && dec.r.is_identity());
        for x in 0..12 {
            let rx = q.right_mult(x);
            let r = AutotopyTriple::new(rx.inverse(), rx, u_op(&q, x).inverse());
            let dec = decompose_autotopy(&q, &r);
            assert!(dec.d.is_identity());
            assert!(dec.verify(&q, &r, &j));
        }
        let atp = AtpGroup::new(&q).unwrap();
        for i in sampling::sample_indices(atp.order(), 50, 9) {
            let t = &atp.list()[i];
            assert!(decompose_autotopy(&q, t).verify(&q, t, &j));
        }
    }
}
