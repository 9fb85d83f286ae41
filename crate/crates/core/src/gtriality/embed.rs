use super::{moufang_from_triality, s3_center, GTrialityError, MLoop, TrialityGroupLike};
use crate::autotopy::{is_autotopy, AutotopyTriple};
use crate::loops::{inversion_map, Perm};
use std::collections::HashMap;

/// The map `G → Atp(M(G))`, `x ↦ (A₁(x), A₂(x), A₃(x))`, with the results
/// of checking it.
#[derive(Clone, Debug)]
pub struct Embedding<E> {
    pub mloop: MLoop<E>,
    pub elements: Vec<E>,
    /// `images[i]` is the triple of `elements[i]`.
    pub images: Vec<AutotopyTriple>,
    pub kernel: Vec<E>,
    pub center: Vec<E>,
    pub non_autotopy: Option<E>,
    pub non_homomorphic: Option<(E, E)>,
    pub non_equivariant: Option<E>,
}

impl<E: PartialEq> Embedding<E> {
    pub fn kernel_is_center(&self) -> bool {
        self.kernel == self.center
    }

    pub fn passed(&self) -> bool {
        self.non_autotopy.is_none()
            && self.non_homomorphic.is_none()
            && self.non_equivariant.is_none()
            && self.kernel_is_center()
    }
}

/// `A₁(x): m ↦ x^{-ρ²σ} m x^{ρ²}`, `A₂(x): m ↦ x⁻¹ m x^σ`,
/// `A₃(x): m ↦ x^{-ρ} m x^{ρσ}`, as permutations of `M(G)`.
pub fn embedding_triple<G: TrialityGroupLike + ?Sized>(g: &G, ml: &MLoop<G::Elem>, x: &G::Elem) -> AutotopyTriple {
    let xr = g.rho(x);
    let xrr = g.rho(&xr);
    let sandwich = |left: G::Elem, right: G::Elem| {
        Perm::from_fn(ml.order(), |i| {
            let m = g.mul(&g.mul(&left, &ml.carrier[i]), &right);
            ml.index_of(&m).expect("twisted conjugate stays in M(G)")
        })
        .expect("bijection of M(G)")
    };
    AutotopyTriple::new(
        sandwich(g.inv(&g.sigma(&xrr)), xrr.clone()),
        sandwich(g.inv(x), g.sigma(x)),
        sandwich(g.inv(&xr), g.sigma(&xr)),
    )
}

pub fn embed_into_autotopy<G: TrialityGroupLike + ?Sized>(g: &G) -> Result<Embedding<G::Elem>, GTrialityError> {
    let mloop = moufang_from_triality(g)?;
    let elements = g.elements();
    let pos: HashMap<&G::Elem, usize> = elements.iter().enumerate().map(|(i, x)| (x, i)).collect();
    let images: Vec<AutotopyTriple> = elements.iter().map(|x| embedding_triple(g, &mloop, x)).collect();
    let q = &mloop.table;
    let j = inversion_map(q)?;

    let non_autotopy = elements.iter().zip(&images).find(|(_, t)| !is_autotopy(q, t)).map(|(x, _)| x.clone());
    let mut non_homomorphic = None;
    'outer: for (a, ta) in elements.iter().zip(&images) {
        for (b, tb) in elements.iter().zip(&images) {
            if images[pos[&g.mul(a, b)]] != ta.then(tb) {
                non_homomorphic = Some((a.clone(), b.clone()));
                break 'outer;
            }
        }
    }
    let non_equivariant = elements
        .iter()
        .zip(&images)
        .find(|(x, t)| images[pos[&g.rho(x)]] != t.rho(&j) || images[pos[&g.sigma(x)]] != t.sigma(&j))
        .map(|(x, _)| x.clone());
    let mut kernel: Vec<G::Elem> =
        elements.iter().zip(&images).filter(|(_, t)| t.is_identity()).map(|(x, _)| x.clone()).collect();
    kernel.sort();
    let center = s3_center(g);
    Ok(Embedding { mloop, elements, images, kernel, center, non_autotopy, non_homomorphic, non_equivariant })
}
