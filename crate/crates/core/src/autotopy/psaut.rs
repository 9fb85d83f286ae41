use super::atp::AtpGroup;
use super::triple::AutotopyTriple;
use crate::loops::{FiniteLoop, Perm};
use crate::sampling;
use serde::Serialize;

const PAIR_LIMIT: usize = 1_000_000;

/// A bijection `A` with right companion `a`:
/// `(xA)·(yA·a) = ((x·y)A)·a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Pseudoautomorphism {
    pub map: Perm,
    pub companion: usize,
}

impl Pseudoautomorphism {
    pub fn identity(n: usize) -> Self {
        Pseudoautomorphism { map: Perm::identity(n), companion: 0 }
    }

    /// `(A,a)(B,b) = (AB, aB·b)`.
    pub fn then(&self, q: &FiniteLoop, other: &Pseudoautomorphism) -> Pseudoautomorphism {
        Pseudoautomorphism {
            map: self.map.then(&other.map),
            companion: q.mul(other.map.apply(self.companion), other.companion),
        }
    }

    pub fn inverse(&self, q: &FiniteLoop) -> Pseudoautomorphism {
        let inv = self.map.inverse();
        let companion = q.inv(inv.apply(self.companion));
        Pseudoautomorphism { map: inv, companion }
    }
}

pub fn pseudoautomorphism_witness(q: &FiniteLoop, p: &Pseudoautomorphism) -> Option<(usize, usize)> {
    let n = q.order();
    let (f, a) = (&p.map, p.companion);
    (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .find(|&(x, y)| q.mul(f.apply(x), q.mul(f.apply(y), a)) != q.mul(f.apply(q.mul(x, y)), a))
}

pub fn is_pseudoautomorphism(q: &FiniteLoop, p: &Pseudoautomorphism) -> bool {
    pseudoautomorphism_witness(q, p).is_none()
}

/// `(A₁,A₂,A₃) ↦ (A₂, 1A₁)` on autotopies with `1A₂ = 1`.
pub fn psaut_of_stabilizer(t: &AutotopyTriple) -> Pseudoautomorphism {
    Pseudoautomorphism { map: t.a2.clone(), companion: t.a1.apply(0) }
}

/// `PsAut(Q)` read off from the stabilizer of `1` under `A₂` in `Atp(Q)`.
pub fn psaut_from_atp(atp: &AtpGroup) -> Vec<Pseudoautomorphism> {
    let mut v: Vec<Pseudoautomorphism> =
        atp.list().iter().filter(|t| t.a2.apply(0) == 0).map(psaut_of_stabilizer).collect();
    v.sort();
    v
}

/// `PsAut(Q)` found directly from the definition: `1A = 1`, and
/// `(xy)A = ((xA)·(yA·a))/a` fixes `A` from its values on generators.
pub fn psaut_search(q: &FiniteLoop) -> Vec<Pseudoautomorphism> {
    let gens = q.generators();
    let n = q.order();
    let mut out = Vec::new();
    let mut images = vec![0usize; gens.len()];
    for a in 0..n {
        search(q, &gens, a, 0, &mut images, &mut out);
    }
    out.sort();
    out
}

fn search(q: &FiniteLoop, gens: &[usize], a: usize, k: usize, images: &mut Vec<usize>, out: &mut Vec<Pseudoautomorphism>) {
    if k < gens.len() {
        for y in 1..q.order() {
            if !images[..k].contains(&y) {
                images[k] = y;
                search(q, gens, a, k + 1, images, out);
            }
        }
        return;
    }
    const UNSET: usize = usize::MAX;
    let n = q.order();
    let mut f = vec![UNSET; n];
    f[0] = 0;
    let mut known = vec![0];
    for (&g, &y) in gens.iter().zip(images.iter()) {
        f[g] = y;
        known.push(g);
    }
    let mut i = 0;
    while i < known.len() {
        for jdx in 0..=i {
            for (x, y) in [(known[i], known[jdx]), (known[jdx], known[i])] {
                let img = q.rdiv(q.mul(f[x], q.mul(f[y], a)), a);
                let xy = q.mul(x, y);
                if f[xy] == UNSET {
                    f[xy] = img;
                    known.push(xy);
                } else if f[xy] != img {
                    return;
                }
            }
        }
        i += 1;
    }
    let Some(map) = Perm::from_images(f) else {
        return;
    };
    let p = Pseudoautomorphism { map, companion: a };
    if is_pseudoautomorphism(q, &p) {
        out.push(p);
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PsAutReport {
    pub order: usize,
    pub routes_agree: bool,
    /// `|Atp(Q)| = |PsAut(Q)|·|Q|`.
    pub index_matches: bool,
    /// The stabilizer map respects products on every pair.
    pub homomorphism: bool,
    pub closed: bool,
}

impl PsAutReport {
    pub fn passed(&self) -> bool {
        self.routes_agree && self.index_matches && self.homomorphism && self.closed
    }
}

/// Computes `PsAut(Q)` by direct search and from `Atp(Q)`, comparing the
/// two. Group-law checks run on all pairs up to a million, else on a seeded
/// sample.
pub fn pseudoautomorphism_group(atp: &AtpGroup, seed: u64) -> (Vec<Pseudoautomorphism>, PsAutReport) {
    let q = atp.loop_();
    let from_atp = psaut_from_atp(atp);
    let direct = psaut_search(q);
    let stab: Vec<&AutotopyTriple> = atp.list().iter().filter(|t| t.a2.apply(0) == 0).collect();
    let (pairs, _) = sampling::pair_coverage(stab.len(), PAIR_LIMIT, sampling::SAMPLE_COUNT, seed);
    let homomorphism = pairs.iter().all(|&(i, j)| {
        let (s, t) = (stab[i], stab[j]);
        psaut_of_stabilizer(&s.then(t)) == psaut_of_stabilizer(s).then(q, &psaut_of_stabilizer(t))
    });
    let (pairs, _) = sampling::pair_coverage(direct.len(), PAIR_LIMIT, sampling::SAMPLE_COUNT, seed);
    let closed = pairs.iter().all(|&(i, j)| direct.binary_search(&direct[i].then(q, &direct[j])).is_ok());
    let report = PsAutReport {
        order: direct.len(),
        routes_agree: from_atp == direct,
        index_matches: atp.order() == direct.len() * q.order(),
        homomorphism,
        closed,
    };
    (direct, report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::loops::generators::*;

    #[test]
    fn trivial_loop() {
        let atp = AtpGroup::new(&cyclic_group(1)).unwrap();
        let (ps, rep) = pseudoautomorphism_group(&atp, 5);
        assert_eq!(ps.len(), 1);
        assert!(rep.passed());
    }

    #[test]
    fn group_automorphisms_have_unit_companion() {
        let q = symmetric_group(3);
        let ps = psaut_search(&q);
        // Aut(S₃) ≅ S₃, all inner
        let autos: Vec<_> = ps.iter().filter(|p| p.companion == 0).collect();
        assert_eq!(autos.len(), 6);
        for g in 0..6 {
            let conj = Perm::from_fn(6, |x| q.mul(q.mul(q.inv(g), x), g)).unwrap();
            assert!(ps.iter().any(|p| p.map == conj && p.companion == 0));
        }
        // in a group, (A, a) is a pseudoautomorphism exactly when A·(conjugation by a) is an automorphism
        for p in &ps {
            let twisted = Perm::from_fn(6, |x| q.mul(q.mul(q.inv(p.companion), p.map.apply(x)), p.companion)).unwrap();
            assert!((0..6).all(|x| (0..6).all(|y| twisted.apply(q.mul(x, y)) == q.mul(twisted.apply(x), twisted.apply(y)))));
        }
    }

    #[test]
    fn chein_routes_agree() {
        let q = chein_loop(&symmetric_group(3)).unwrap();
        let atp = AtpGroup::new(&q).unwrap();
        let (ps, rep) = pseudoautomorphism_group(&atp, 5);
        assert!(rep.passed(), "{rep:?}");
        assert_eq!(atp.order(), ps.len() * 12);
    }
}
