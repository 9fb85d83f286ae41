//! Groups with triality, the loop `M(G)`, the `S₃`-center and the
//! embedding of `G` into `Atp(M(G))`.

pub mod corpus;
mod embed;
mod group;
mod mloop;

pub use embed::{embed_into_autotopy, Embedding};
pub use group::{TrialityGroup, TrialityGroupJson, MAX_GROUP_ORDER};
pub use mloop::{moufang_from_triality, moufang_from_triality_scan, MLoop, ScanOrder};

use crate::loops::LoopError;
use std::fmt::Debug;
use std::hash::Hash;

/// A finite group carrying automorphisms `ρ, σ`, written as exponents on the
/// right.
pub trait TrialityGroupLike {
    type Elem: Clone + Eq + Hash + Ord + Debug;

    fn identity(&self) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn rho(&self, a: &Self::Elem) -> Self::Elem;
    fn sigma(&self, a: &Self::Elem) -> Self::Elem;
    /// Every element, in a fixed order.
    fn elements(&self) -> Vec<Self::Elem>;
}

/// The six elements of `S₃ = ⟨ρ, σ⟩`, as words applied left to right.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum S3Word {
    Id,
    Rho,
    Rho2,
    Sigma,
    RhoSigma,
    Rho2Sigma,
}

impl S3Word {
    pub const ALL: [S3Word; 6] = [S3Word::Id, S3Word::Rho, S3Word::Rho2, S3Word::Sigma, S3Word::RhoSigma, S3Word::Rho2Sigma];

    pub fn sign(self) -> i64 {
        match self {
            S3Word::Id | S3Word::Rho | S3Word::Rho2 => 1,
            _ => -1,
        }
    }

    pub fn apply<G: TrialityGroupLike + ?Sized>(self, g: &G, x: &G::Elem) -> G::Elem {
        match self {
            S3Word::Id => x.clone(),
            S3Word::Rho => g.rho(x),
            S3Word::Rho2 => g.rho(&g.rho(x)),
            S3Word::Sigma => g.sigma(x),
            S3Word::RhoSigma => g.sigma(&g.rho(x)),
            S3Word::Rho2Sigma => g.sigma(&g.rho(&g.rho(x))),
        }
    }
}

/// `g⁻¹g^σ`.
pub fn m_of<G: TrialityGroupLike + ?Sized>(g: &G, x: &G::Elem) -> G::Elem {
    g.mul(&g.inv(x), &g.sigma(x))
}

/// `m · m^ρ · m^{ρ²}` with `m = g⁻¹g^σ`.
pub fn triality_product<G: TrialityGroupLike + ?Sized>(g: &G, x: &G::Elem) -> G::Elem {
    let m = m_of(g, x);
    let mr = g.rho(&m);
    let mrr = g.rho(&mr);
    g.mul(&g.mul(&m, &mr), &mrr)
}

pub fn triality_holds_at<G: TrialityGroupLike + ?Sized>(g: &G, x: &G::Elem) -> bool {
    triality_product(g, x) == g.identity()
}

/// The first element (in `elements()` order) at which the triality identity fails.
pub fn triality_witness<G: TrialityGroupLike + ?Sized>(g: &G) -> Option<G::Elem> {
    g.elements().into_iter().find(|x| !triality_holds_at(g, x))
}

pub fn check_triality<G: TrialityGroupLike + ?Sized>(g: &G) -> bool {
    triality_witness(g).is_none()
}

/// First violation of `σ² = ρ³ = 1`, `σρ = ρ²σ` on elements.
pub fn s3_relation_witness<G: TrialityGroupLike + ?Sized>(g: &G, elems: &[G::Elem]) -> Option<(&'static str, G::Elem)> {
    for x in elems {
        if g.sigma(&g.sigma(x)) != *x {
            return Some(("sigma^2 = 1", x.clone()));
        }
        let r = g.rho(x);
        let rr = g.rho(&r);
        if g.rho(&rr) != *x {
            return Some(("rho^3 = 1", x.clone()));
        }
        if g.rho(&g.sigma(x)) != g.sigma(&rr) {
            return Some(("sigma rho = rho^2 sigma", x.clone()));
        }
    }
    None
}

/// `Z_S(G)`: elements fixed by `ρ` and `σ` that commute with every
/// `g⁻¹g^τ`, `τ ∈ S₃`.
pub fn s3_center<G: TrialityGroupLike + ?Sized>(g: &G) -> Vec<G::Elem> {
    let elems = g.elements();
    let fixed: Vec<G::Elem> = elems.iter().filter(|z| g.rho(z) == **z && g.sigma(z) == **z).cloned().collect();
    let mut twisted: Vec<G::Elem> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for x in &elems {
        let xi = g.inv(x);
        for t in S3Word::ALL {
            let c = g.mul(&xi, &t.apply(g, x));
            if seen.insert(c.clone()) {
                twisted.push(c);
            }
        }
    }
    let mut center: Vec<G::Elem> =
        fixed.into_iter().filter(|z| twisted.iter().all(|c| g.mul(z, c) == g.mul(c, z))).collect();
    center.sort();
    center
}

/// Checks that `h` is a normal subgroup of `g`.
pub fn is_normal_subgroup<G: TrialityGroupLike + ?Sized>(g: &G, h: &[G::Elem]) -> bool {
    let set: std::collections::HashSet<&G::Elem> = h.iter().collect();
    set.contains(&g.identity())
        && h.iter().all(|a| h.iter().all(|b| set.contains(&g.mul(a, b))))
        && g.elements().iter().all(|x| {
            let xi = g.inv(x);
            h.iter().all(|a| set.contains(&g.mul(&g.mul(&xi, a), x)))
        })
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GTrialityError {
    #[error(transparent)]
    Loop(#[from] LoopError),
    #[error("group of order {order} exceeds the cap of {cap}")]
    TooLarge { order: usize, cap: usize },
    #[error("automorphism degree does not match group order {order}")]
    DegreeMismatch { order: usize },
    #[error("not a group: associativity fails at {witness:?}")]
    NotAGroup { witness: [usize; 3] },
    #[error("{which} is not an automorphism: fails at {witness:?}")]
    NotAutomorphism { which: &'static str, witness: [usize; 2] },
    #[error("S3 relation {0} fails")]
    S3Relation(&'static str),
    #[error("the two product formulas disagree at loop elements ({m}, {n})")]
    FormulaMismatch { m: usize, n: usize },
    #[error("product of loop elements ({m}, {n}) leaves the carrier")]
    NotClosed { m: usize, n: usize },
    #[error("invalid triality group JSON: {0}")]
    Json(String),
}

#[cfg(test)]
mod tests {
    use super::corpus::*;
    use super::*;
    use crate::loops::generators::cyclic_group;

    #[test]
    fn trivial_action_is_triality() {
        let g = trivial_action(cyclic_group(5)).unwrap();
        assert!(check_triality(&g));
        assert_eq!(s3_center(&g).len(), 5);
    }

    #[test]
    fn c4_inversion_fails_at_a_generator() {
        let g = c4_inversion();
        let w = triality_witness(&g).unwrap();
        assert_eq!(g.group().element_order(w), 4);
        // m = g⁻², and ρ is trivial, so the product is g⁻⁶ = g⁻²
        assert_eq!(triality_product(&g, &w), g.group().pow(w, -2));
    }

    #[test]
    fn wreath_is_triality_with_trivial_center() {
        let g = s3_wreath();
        assert_eq!(g.order(), 216);
        assert!(check_triality(&g));
        assert_eq!(s3_center(&g), vec![0]);
    }

    #[test]
    fn central_factor_lies_in_center() {
        let g = wreath_times_c2();
        assert_eq!(g.order(), 432);
        assert!(check_triality(&g));
        let z = s3_center(&g);
        assert_eq!(z, vec![0, 1]);
        assert!(is_normal_subgroup(&g, &z));
    }

    #[test]
    fn json_round_trip() {
        let g = s3_conjugation();
        let back = TrialityGroup::parse(&serde_json::to_string(&g.to_json()).unwrap()).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn json_rejects_bad_actions() {
        let mut j = c4_inversion().to_json();
        j.rho = vec![1, 3, 2, 4];
        assert!(matches!(TrialityGroup::from_json(&j), Err(GTrialityError::NotAutomorphism { which: "rho", .. })));
        let mut j = c4_inversion().to_json();
        j.rho = vec![1, 4, 3, 2];
        assert!(matches!(TrialityGroup::from_json(&j), Err(GTrialityError::S3Relation(_))));
    }
}
