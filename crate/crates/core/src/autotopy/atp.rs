use super::triple::{autotopy_witness, AutotopyTriple};
use super::AutotopyError;
use crate::gtriality::{moufang_from_triality, s3_center, s3_relation_witness, triality_holds_at, TrialityGroupLike};
use crate::loops::{inversion_map, is_moufang, FiniteLoop, Perm};
use crate::sampling;
use serde::Serialize;

pub const MAX_LOOP_ORDER: usize = 16;

/// `Atp(Q)` listed in sorted order, with the triality action
/// `(A₁,A₂,A₃)^ρ = (JA₂J, A₃, JA₁J)`, `(A₁,A₂,A₃)^σ = (A₃, JA₂J, A₁)`.
#[derive(Clone, Debug)]
pub struct AtpGroup {
    q: FiniteLoop,
    j: Perm,
    elements: Vec<AutotopyTriple>,
}

/// `U_x = L_x R_x`, i.e. `y ↦ (xy)x`.
pub fn u_op(q: &FiniteLoop, x: usize) -> Perm {
    q.left_mult(x).then(&q.right_mult(x))
}

/// `(L_x, U_x, L_x⁻¹)`.
pub fn left_triple(q: &FiniteLoop, x: usize) -> AutotopyTriple {
    let l = q.left_mult(x);
    AutotopyTriple::new(l.clone(), u_op(q, x), l.inverse())
}

/// `(R_x, R_x⁻¹, U_x)`.
pub fn right_triple(q: &FiniteLoop, x: usize) -> AutotopyTriple {
    let r = q.right_mult(x);
    AutotopyTriple::new(r.clone(), r.inverse(), u_op(q, x))
}

/// `(U_x, L_x, R_x)`.
pub fn middle_triple(q: &FiniteLoop, x: usize) -> AutotopyTriple {
    AutotopyTriple::new(u_op(q, x), q.left_mult(x), q.right_mult(x))
}

/// Every canonical triple of every element.
pub fn canonical_triples(q: &FiniteLoop) -> Vec<AutotopyTriple> {
    (0..q.order()).flat_map(|x| [left_triple(q, x), right_triple(q, x), middle_triple(q, x)]).collect()
}

/// Enumerates `Atp(Q)`.
///
/// With `a = 1A₂` and `b = 1A₃` an autotopy satisfies `A₁ = A₂R_b`,
/// `A₃ = A₁L_a⁻¹` and `(xy)A₂ = ((xA₂)·(a\((yA₂)·b)))/b`, so it is fixed by
/// `a`, `b` and the images of a generating set under `A₂`.
pub fn autotopy_group(q: &FiniteLoop) -> Result<Vec<AutotopyTriple>, AutotopyError> {
    let n = q.order();
    if n > MAX_LOOP_ORDER {
        return Err(AutotopyError::TooLarge { order: n, cap: MAX_LOOP_ORDER });
    }
    let gens = q.generators();
    let mut out = Vec::new();
    let mut images = vec![0usize; gens.len()];
    for a in 0..n {
        for b in 0..n {
            search(q, &gens, a, b, 0, &mut images, &mut out);
        }
    }
    out.sort();
    Ok(out)
}

fn search(
    q: &FiniteLoop,
    gens: &[usize],
    a: usize,
    b: usize,
    k: usize,
    images: &mut Vec<usize>,
    out: &mut Vec<AutotopyTriple>,
) {
    if k < gens.len() {
        for y in 0..q.order() {
            if y == a || images[..k].contains(&y) {
                continue;
            }
            images[k] = y;
            search(q, gens, a, b, k + 1, images, out);
        }
        return;
    }
    let Some(a2) = propagate(q, gens, images, a, b) else {
        return;
    };
    let a1 = a2.then(&q.right_mult(b));
    let a3 = a1.then(&q.left_mult(a).inverse());
    let t = AutotopyTriple::new(a1, a2, a3);
    if autotopy_witness(q, &t).is_none() {
        out.push(t);
    }
}

fn propagate(q: &FiniteLoop, gens: &[usize], images: &[usize], a: usize, b: usize) -> Option<Perm> {
    const UNSET: usize = usize::MAX;
    let n = q.order();
    let mut f = vec![UNSET; n];
    let mut used = vec![false; n];
    f[0] = a;
    used[a] = true;
    let mut known = vec![0];
    for (&g, &y) in gens.iter().zip(images) {
        if used[y] {
            return None;
        }
        f[g] = y;
        used[y] = true;
        known.push(g);
    }
    let mut i = 0;
    while i < known.len() {
        for jdx in 0..=i {
            for (x, y) in [(known[i], known[jdx]), (known[jdx], known[i])] {
                let xy = q.mul(x, y);
                let img = q.rdiv(q.mul(f[x], q.ldiv(a, q.mul(f[y], b))), b);
                if f[xy] == UNSET {
                    if used[img] {
                        return None;
                    }
                    f[xy] = img;
                    used[img] = true;
                    known.push(xy);
                } else if f[xy] != img {
                    return None;
                }
            }
        }
        i += 1;
    }
    Perm::from_images(f)
}

impl AtpGroup {
    pub fn new(q: &FiniteLoop) -> Result<Self, AutotopyError> {
        if !is_moufang(q) {
            return Err(AutotopyError::NotMoufang);
        }
        let j = inversion_map(q)?;
        let elements = autotopy_group(q)?;
        Ok(AtpGroup { q: q.clone(), j, elements })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn loop_(&self) -> &FiniteLoop {
        &self.q
    }

    pub fn j(&self) -> &Perm {
        &self.j
    }

    pub fn list(&self) -> &[AutotopyTriple] {
        &self.elements
    }

    pub fn position(&self, t: &AutotopyTriple) -> Option<usize> {
        self.elements.binary_search(t).ok()
    }

    pub fn contains(&self, t: &AutotopyTriple) -> bool {
        self.position(t).is_some()
    }
}

impl TrialityGroupLike for AtpGroup {
    type Elem = AutotopyTriple;

    fn identity(&self) -> AutotopyTriple {
        AutotopyTriple::identity(self.q.order())
    }

    fn mul(&self, a: &AutotopyTriple, b: &AutotopyTriple) -> AutotopyTriple {
        a.then(b)
    }

    fn inv(&self, a: &AutotopyTriple) -> AutotopyTriple {
        a.inverse()
    }

    fn rho(&self, a: &AutotopyTriple) -> AutotopyTriple {
        a.rho(&self.j)
    }

    fn sigma(&self, a: &AutotopyTriple) -> AutotopyTriple {
        a.sigma(&self.j)
    }

    fn elements(&self) -> Vec<AutotopyTriple> {
        self.elements.clone()
    }
}

/// The three operator identities equivalent to the triality identity on
/// `Atp(Q)`; returns the index (0, 1, 2) of the first that fails.
pub fn proof_equalities_witness(t: &AutotopyTriple, j: &Perm) -> Option<usize> {
    let (a1, a2, a3) = (&t.a1, &t.a2, &t.a3);
    let (i1, i2, i3) = (a1.inverse(), a2.inverse(), a3.inverse());
    let word = |w: &[&Perm]| w.iter().fold(Perm::identity(j.degree()), |acc, p| acc.then(p));
    let e1 = word(&[&i1, a3, j, &i2, j, a2, j, &i3, a1, j]);
    let e2 = word(&[&i2, j, a2, j, &i3, a1, j, &i1, a3, j]);
    let e3 = word(&[&i3, a1, j, &i1, a3, j, &i2, j, a2, j]);
    [e1, e2, e3].iter().position(|p| !p.is_identity())
}

#[derive(Clone, Debug, Serialize)]
pub struct AtpTrialityReport {
    pub order: usize,
    pub exhaustive: bool,
    pub checked: usize,
    pub non_autotopy: Option<AutotopyTriple>,
    pub not_closed: Option<AutotopyTriple>,
    pub s3_relation: Option<(String, AutotopyTriple)>,
    pub triality_failure: Option<AutotopyTriple>,
    pub proof_equality_failure: Option<(usize, AutotopyTriple)>,
    /// Whether the triality identity and the three equalities agree on every checked element.
    pub equivalence_holds: bool,
}

impl AtpTrialityReport {
    pub fn passed(&self) -> bool {
        self.non_autotopy.is_none()
            && self.not_closed.is_none()
            && self.s3_relation.is_none()
            && self.triality_failure.is_none()
            && self.proof_equality_failure.is_none()
            && self.equivalence_holds
    }
}

/// Checks the triality identity and the three equivalent operator
/// identities on `Atp(Q)`, exhaustively or on a seeded sample plus every
/// canonical triple.
pub fn check_atp_triality(atp: &AtpGroup, seed: u64) -> AtpTrialityReport {
    let (idx, exhaustive) = sampling::coverage(atp.order(), seed);
    let mut elems: Vec<AutotopyTriple> = idx.iter().map(|&i| atp.elements[i].clone()).collect();
    if !exhaustive {
        elems.extend(canonical_triples(&atp.q));
    }
    let q = &atp.q;
    let non_autotopy = elems.iter().find(|t| autotopy_witness(q, t).is_some()).cloned();
    let not_closed = elems
        .iter()
        .find(|t| !atp.contains(&atp.rho(t)) || !atp.contains(&atp.sigma(t)))
        .cloned();
    let s3_relation = s3_relation_witness(atp, &elems).map(|(r, t)| (r.to_string(), t));
    let mut triality_failure = None;
    let mut proof_equality_failure = None;
    let mut equivalence_holds = true;
    for t in &elems {
        let eq3 = triality_holds_at(atp, t);
        let proof = proof_equalities_witness(t, &atp.j);
        if eq3 != proof.is_none() {
            equivalence_holds = false;
        }
        if !eq3 && triality_failure.is_none() {
            triality_failure = Some(t.clone());
        }
        if let (Some(k), None) = (proof, &proof_equality_failure) {
            proof_equality_failure = Some((k, t.clone()));
        }
    }
    AtpTrialityReport {
        order: atp.order(),
        exhaustive,
        checked: elems.len(),
        non_autotopy,
        not_closed,
        s3_relation,
        triality_failure,
        proof_equality_failure,
        equivalence_holds,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct MAtpReport {
    pub atp_order: usize,
    pub m_order: usize,
    /// The carrier equals `{(L_a⁻¹, U_a⁻¹, L_a)}`.
    pub carrier_matches: bool,
    /// `(L_b⁻¹, U_b⁻¹, L_b) ↦ b` is a loop isomorphism `M(Atp(Q)) → Q`.
    pub isomorphism: bool,
    pub s3_center_order: usize,
}

impl MAtpReport {
    pub fn passed(&self) -> bool {
        self.carrier_matches && self.isomorphism && self.s3_center_order == 1
    }
}

/// `(L_a⁻¹, U_a⁻¹, L_a)`.
pub fn m_triple(q: &FiniteLoop, a: usize) -> AutotopyTriple {
    let l = q.left_mult(a);
    AutotopyTriple::new(l.inverse(), u_op(q, a).inverse(), l)
}

pub fn m_of_atp(atp: &AtpGroup) -> Result<MAtpReport, AutotopyError> {
    let q = &atp.q;
    let ml = moufang_from_triality(atp)?;
    let mut expected: Vec<AutotopyTriple> = (0..q.order()).map(|a| m_triple(q, a)).collect();
    expected.sort();
    let mut carrier = ml.carrier.clone();
    carrier.sort();
    let carrier_matches = carrier == expected;
    let f: Vec<usize> = ml.carrier.iter().map(|t| t.a3.apply(0)).collect();
    let isomorphism = carrier_matches && ml.table.is_isomorphism(q, &f);
    Ok(MAtpReport {
        atp_order: atp.order(),
        m_order: ml.order(),
        carrier_matches,
        isomorphism,
        s3_center_order: s3_center(atp).len(),
    })
}
