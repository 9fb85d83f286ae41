use super::{m_of, GTrialityError, TrialityGroupLike};
use crate::loops::FiniteLoop;
use std::collections::HashMap;

/// The loop `M(G) = {g⁻¹g^σ}` together with the group elements it lives on.
#[derive(Clone, Debug)]
pub struct MLoop<E> {
    /// Carrier elements; index 0 is the group identity.
    pub carrier: Vec<E>,
    /// For each carrier element `m`, some `g` with `g⁻¹g^σ = m`.
    pub section: Vec<E>,
    pub table: FiniteLoop,
    index: HashMap<E, usize>,
}

impl<E: Clone + Eq + std::hash::Hash> MLoop<E> {
    pub fn index_of(&self, m: &E) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn order(&self) -> usize {
        self.carrier.len()
    }
}

/// Which preimage is stored in the section when several exist.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScanOrder {
    Forward,
    Reverse,
}

pub fn moufang_from_triality<G: TrialityGroupLike + ?Sized>(g: &G) -> Result<MLoop<G::Elem>, GTrialityError> {
    moufang_from_triality_scan(g, ScanOrder::Forward)
}

/// Builds `M(G)` with product `m·n = m^{-ρ} n m^{-ρ²}`, checking on every
/// pair that it agrees with `n^{-ρ²} m n^{-ρ}` and stays in the carrier.
pub fn moufang_from_triality_scan<G: TrialityGroupLike + ?Sized>(
    g: &G,
    order: ScanOrder,
) -> Result<MLoop<G::Elem>, GTrialityError> {
    let mut elems = g.elements();
    if order == ScanOrder::Reverse {
        elems.reverse();
    }
    let mut pre: HashMap<G::Elem, G::Elem> = HashMap::new();
    for x in &elems {
        pre.entry(m_of(g, x)).or_insert_with(|| x.clone());
    }
    let e = g.identity();
    let mut carrier: Vec<G::Elem> = pre.keys().filter(|m| **m != e).cloned().collect();
    carrier.sort();
    carrier.insert(0, e);
    let index: HashMap<G::Elem, usize> = carrier.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let section = carrier.iter().map(|m| pre[m].clone()).collect();

    let n = carrier.len();
    // m^{-ρ} and m^{-ρ²}
    let inv_r: Vec<G::Elem> = carrier.iter().map(|m| g.inv(&g.rho(m))).collect();
    let inv_rr: Vec<G::Elem> = carrier.iter().map(|m| g.inv(&g.rho(&g.rho(m)))).collect();
    let mut rows = vec![vec![0usize; n]; n];
    for a in 0..n {
        for b in 0..n {
            let first = g.mul(&g.mul(&inv_r[a], &carrier[b]), &inv_rr[a]);
            let second = g.mul(&g.mul(&inv_rr[b], &carrier[a]), &inv_r[b]);
            if first != second {
                return Err(GTrialityError::FormulaMismatch { m: a + 1, n: b + 1 });
            }
            rows[a][b] = *index.get(&first).ok_or(GTrialityError::NotClosed { m: a + 1, n: b + 1 })?;
        }
    }
    let table = FiniteLoop::from_table(rows)?;
    Ok(MLoop { carrier, section, table, index })
}
