use super::checks::circle;
use super::pbw::{Envelope, PbwElement};
use crate::hopf::{group_left, nonassociativity_witness, Bialgebra, Check, Lin, SparseEchelon, StarAlgebra, TrialityHopf};
use crate::malcev::{LieOfMalcev, StructureConstants};
use crate::qcore::Rational;
use serde::Serialize;

/// `MH(U(Lie(m)))` for `m = O₀`, generated by `T_a = λ_a + ρ_a` inside the
/// PBW algebra of `Lie(m)`.
pub struct MhEnvelope<'a> {
    lom: &'a LieOfMalcev,
    env: Envelope,
    t: Vec<PbwElement>,
}

pub fn mh_envelope(lom: &LieOfMalcev) -> MhEnvelope<'_> {
    let env = Envelope::with_triality(lom.lie());
    let t = (0..lom.malcev().dim()).map(|a| env.from_vector(&lom.t_coords(a))).collect();
    MhEnvelope { lom, env, t }
}

/// A circle word `T_{i_n} ∘ (⋯ (T_{i_2} ∘ T_{i_1}))` with its index word.
#[derive(Clone, Debug)]
pub struct CircleWord {
    pub word: Vec<usize>,
    pub value: PbwElement,
}

impl<'a> MhEnvelope<'a> {
    pub fn envelope(&self) -> &Envelope {
        &self.env
    }

    pub fn star(&self) -> StarAlgebra<'_, Envelope> {
        StarAlgebra { inner: &self.env }
    }

    pub fn malcev(&self) -> &'a StructureConstants {
        self.lom.malcev()
    }

    pub fn generators(&self) -> &[PbwElement] {
        &self.t
    }

    /// `T_v = Σ vₖ T_k`.
    pub fn t_of(&self, v: &[Rational]) -> PbwElement {
        let mut out = Lin::zero();
        for (t, c) in self.t.iter().zip(v) {
            out.add_scaled(t, c);
        }
        out
    }

    pub fn mul(&self, u: &PbwElement, v: &PbwElement) -> PbwElement {
        self.star().mul(u, v)
    }

    /// Circle words of length `≤ d`; with `ordered`, only `i₁ ≤ ⋯ ≤ i_n`.
    pub fn circle_words(&self, d: usize, ordered: bool) -> Vec<CircleWord> {
        let mut out = vec![CircleWord { word: Vec::new(), value: self.env.one() }];
        let mut layer = out.clone();
        for _ in 0..d {
            let mut next = Vec::new();
            for w in &layer {
                let lo = if ordered { w.word.last().copied().unwrap_or(0) } else { 0 };
                for a in lo..self.t.len() {
                    let mut word = w.word.clone();
                    word.push(a);
                    next.push(CircleWord { word, value: circle(&self.env, &self.t[a], &w.value) });
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }

    pub fn report(&self, d: usize) -> MhEnvelopeReport {
        let n = self.t.len();
        let t = &self.t;
        let m = self.malcev();
        let pairs = || (0..n).flat_map(|a| (0..n).map(move |b| (a, b)));
        let w2 = |p: Option<(usize, usize)>| p.map(|(a, b)| format!("(T{a}, T{b})"));
        let one = self.env.one();

        let unit = (0..n).find(|&a| self.mul(&t[a], &one) != t[a] || self.mul(&one, &t[a]) != t[a]);
        let bracket = pairs().find(|&(a, b)| {
            let lhs = self.mul(&t[a], &t[b]).minus(&self.mul(&t[b], &t[a]));
            lhs != self.t_of(&m.mul(&m.basis_vector(a), &m.basis_vector(b))).neg()
        });

        let lower = self.circle_words(d.saturating_sub(1), false);
        let aux1 = (0..n)
            .flat_map(|a| lower.iter().map(move |w| (a, w)))
            .find(|(a, w)| {
                let u = &w.value;
                self.mul(&t[*a], u).plus(&self.mul(u, &t[*a])) != circle(&self.env, &t[*a], u)
            })
            .map(|(a, w)| format!("(T{a}, {:?})", w.word));

        let ordered = self.circle_words(d, true);
        let mut span = SparseEchelon::new();
        let dependent = ordered.iter().find(|w| !span.insert(&w.value)).map(|w| format!("{:?}", w.word));

        let closure = (0..n)
            .flat_map(|a| lower.iter().map(move |w| (a, w)))
            .find(|(a, w)| !span.contains(&self.mul(&t[*a], &w.value)) || !span.contains(&self.mul(&w.value, &t[*a])))
            .map(|(a, w)| format!("(T{a}, {:?})", w.word));
        let antipode = ordered
            .iter()
            .find(|w| self.env.antipode(&w.value) != self.env.sigma(&w.value))
            .map(|w| format!("{:?}", w.word));

        let degree_two: Vec<&CircleWord> = ordered.iter().filter(|w| w.word.len() == 2).collect();
        let left_primitive = (0..n)
            .flat_map(|a| pairs().map(move |(b, c)| (a, b, c)))
            .find(|&(a, b, c)| !self.left_moufang(&t[a], &t[b], &t[c]))
            .map(|(a, b, c)| format!("(T{a}, T{b}, T{c})"));
        let left_degree_two = degree_two
            .iter()
            .flat_map(|w| pairs().map(move |(b, c)| (*w, b, c)))
            .find(|(w, b, c)| !self.left_moufang(&w.value, &t[*b], &t[*c]))
            .map(|(w, b, c)| format!("({:?}, T{b}, T{c})", w.word));

        MhEnvelopeReport {
            dim_m: n,
            dim_lie: self.env.dim(),
            degree: d,
            ordered_words: ordered.len(),
            slice_dim: span.dim(),
            nonassociative: nonassociativity_witness(&self.star(), t),
            checks: vec![
                Check::new("unit", unit.map(|a| format!("T{a}"))),
                Check::new("bracket", w2(bracket)),
                Check::new("aux1", aux1),
                Check::new("independent", dependent),
                Check::new("closure", closure),
                Check::new("antipode_is_sigma", antipode),
                Check::new("left_moufang_primitive", left_primitive),
                Check::new("left_moufang_degree_two", left_degree_two),
            ],
        }
    }

    /// `Σ u₁(v(u₂w)) = Σ ((u₁v)u₂)w`, with `Δ(u)` grouped by `u₁`.
    pub fn left_moufang(&self, u: &PbwElement, v: &PbwElement, w: &PbwElement) -> bool {
        let (mut lhs, mut rhs) = (Lin::zero(), Lin::zero());
        for (a, rest) in group_left(&self.env.coproduct(u)) {
            let a = Lin::basis(a);
            lhs.add_assign(&self.mul(&a, &self.mul(v, &self.mul(&rest, w))));
            rhs.add_assign(&self.mul(&self.mul(&self.mul(&a, v), &rest), w));
        }
        lhs == rhs
    }

    /// `(a, x, y) = -(x, a, y) = (x, y, a)` for each generator `a`, `x` in
    /// `xs` and `y` in `ys`.
    pub fn nucleus_witness(&self, xs: &[PbwElement], ys: &[PbwElement]) -> Option<(usize, usize, usize)> {
        let assoc = |x: &PbwElement, y: &PbwElement, z: &PbwElement| {
            self.mul(&self.mul(x, y), z).minus(&self.mul(x, &self.mul(y, z)))
        };
        for (a, t) in self.t.iter().enumerate() {
            for (i, x) in xs.iter().enumerate() {
                for (j, y) in ys.iter().enumerate() {
                    let first = assoc(t, x, y);
                    if first != assoc(x, t, y).neg() || first != assoc(x, y, t) {
                        return Some((a, i, j));
                    }
                }
            }
        }
        None
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct MhEnvelopeReport {
    pub dim_m: usize,
    pub dim_lie: usize,
    pub degree: usize,
    pub ordered_words: usize,
    pub slice_dim: usize,
    pub nonassociative: Option<[usize; 3]>,
    pub checks: Vec<Check>,
}

impl MhEnvelopeReport {
    pub fn passed(&self) -> bool {
        self.nonassociative.is_some() && self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct EnvelopeRelationsReport {
    pub slice_dim: usize,
    pub checks: Vec<Check>,
}

impl EnvelopeRelationsReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// `[L_a,L_b] = L_{[a,b]} − 2[L_a,R_b]`, `[R_a,R_b] = −R_{[a,b]} − 2[L_a,R_b]`
/// and `[L_a,R_b] = [R_a,L_b]` for the multiplication operators of
/// `a ↦ −T_a`, evaluated on the ordered circle words of degree `≤ d`, with
/// `[a,b]` taken from `bracket`.
pub fn check_envelope_relations(mh: &MhEnvelope<'_>, bracket: &StructureConstants, d: usize) -> EnvelopeRelationsReport {
    let n = mh.generators().len();
    let gens: Vec<PbwElement> = mh.generators().iter().map(|t| t.neg()).collect();
    let slice: Vec<PbwElement> = mh.circle_words(d, true).into_iter().map(|w| w.value).collect();
    let two = Rational::from_integer(2);
    let brackets: Vec<Vec<Rational>> = (0..n * n)
        .map(|ab| bracket.mul(&bracket.basis_vector(ab / n), &bracket.basis_vector(ab % n)))
        .collect();
    let combine = |ops: &[PbwElement], c: &[Rational]| {
        let mut out = Lin::zero();
        for (x, k) in ops.iter().zip(c) {
            out.add_scaled(x, k);
        }
        out
    };
    let mut found = [None, None, None];
    for (k, y) in slice.iter().enumerate() {
        let ly: Vec<PbwElement> = gens.iter().map(|g| mh.mul(g, y)).collect();
        let ry: Vec<PbwElement> = gens.iter().map(|g| mh.mul(y, g)).collect();
        // ll[a][b] = L_aL_b y, and likewise for the other three
        let table = |outer: &dyn Fn(&PbwElement, &PbwElement) -> PbwElement, inner: &[PbwElement]| -> Vec<Vec<PbwElement>> {
            gens.iter().map(|g| inner.iter().map(|x| outer(g, x)).collect()).collect()
        };
        let ll = table(&|g, x| mh.mul(g, x), &ly);
        let lr = table(&|g, x| mh.mul(g, x), &ry);
        let rl = table(&|g, x| mh.mul(x, g), &ly);
        let rr = table(&|g, x| mh.mul(x, g), &ry);
        for a in 0..n {
            for b in 0..n {
                let c = &brackets[a * n + b];
                let la_rb = lr[a][b].minus(&rl[b][a]);
                let mut ll_rhs = combine(&ly, c);
                ll_rhs.add_scaled(&la_rb, &-two.clone());
                let mut rr_rhs = combine(&ry, c).neg();
                rr_rhs.add_scaled(&la_rb, &-two.clone());
                let ok = [
                    ll[a][b].minus(&ll[b][a]) == ll_rhs,
                    rr[a][b].minus(&rr[b][a]) == rr_rhs,
                    la_rb == rl[a][b].minus(&lr[b][a]),
                ];
                for (slot, ok) in found.iter_mut().zip(ok) {
                    if slot.is_none() && !ok {
                        *slot = Some(format!("(a{a}, a{b}, y{k})"));
                    }
                }
            }
        }
    }
    let [ll, rr, lr] = found;
    EnvelopeRelationsReport {
        slice_dim: slice.len(),
        checks: vec![Check::new("left_left", ll), Check::new("right_right", rr), Check::new("left_right", lr)],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::malcev::{lie_of_malcev, CayleyAlgebra};
    use std::sync::OnceLock;

    fn octonions() -> &'static LieOfMalcev {
        static L: OnceLock<LieOfMalcev> = OnceLock::new();
        L.get_or_init(|| lie_of_malcev(&CayleyAlgebra::octonions()).unwrap())
    }

    #[test]
    fn t_generators_are_primitive_and_in_mh() {
        let mh = mh_envelope(octonions());
        let h = mh.envelope();
        for t in mh.generators() {
            assert_eq!(h.counit(t), Rational::zero());
            assert_eq!(h.sigma(t), t.neg());
            assert_eq!(h.p_map(t), t.scaled(&Rational::from_integer(-2)));
            assert_eq!(mh.mul(t, &h.one()), *t);
        }
    }

    #[test]
    fn first_pair_recovers_bracket() {
        let mh = mh_envelope(octonions());
        let t = mh.generators();
        let m = mh.malcev();
        let lhs = mh.mul(&t[0], &t[1]).minus(&mh.mul(&t[1], &t[0]));
        let ab = m.mul(&m.basis_vector(0), &m.basis_vector(1));
        assert!(ab.iter().any(|c| !c.is_zero()));
        assert_eq!(lhs, mh.t_of(&ab).neg());
    }

    #[test]
    fn slice_report_degree_one() {
        let mh = mh_envelope(octonions());
        let rep = mh.report(1);
        assert!(rep.passed(), "{rep:?}");
        assert_eq!((rep.ordered_words, rep.slice_dim), (8, 8));
    }

    #[test]
    fn degree_two_words() {
        let mh = mh_envelope(octonions());
        let t = mh.generators();
        let words = mh.circle_words(2, true);
        assert_eq!(words.len(), 36);
        let mut span = SparseEchelon::new();
        assert!(words.iter().all(|w| span.insert(&w.value)));
        for w in words.iter().filter(|w| w.word.len() == 2).step_by(9) {
            assert!(mh.left_moufang(&w.value, &t[w.word[0]], &t[(w.word[1] + 3) % 7]), "{:?}", w.word);
            for a in [0, 4] {
                let sum = mh.mul(&t[a], &w.value).plus(&mh.mul(&w.value, &t[a]));
                assert_eq!(sum, circle(mh.envelope(), &t[a], &w.value));
            }
        }
    }

    #[test]
    fn nonassociativity_witness_is_real() {
        let mh = mh_envelope(octonions());
        let t = mh.generators();
        let [a, b, c] = nonassociativity_witness(&mh.star(), t).unwrap();
        assert_ne!(mh.mul(&mh.mul(&t[a], &t[b]), &t[c]), mh.mul(&t[a], &mh.mul(&t[b], &t[c])));
    }

    #[test]
    fn primitives_in_alternative_nucleus() {
        let mh = mh_envelope(octonions());
        let words = mh.circle_words(2, true);
        let low: Vec<PbwElement> = words[..8].iter().map(|w| w.value.clone()).collect();
        let high: Vec<PbwElement> = words[8..].iter().step_by(7).map(|w| w.value.clone()).collect();
        assert_eq!(mh.nucleus_witness(&low, &low), None);
        assert_eq!(mh.nucleus_witness(&low[1..3], &high), None);
        assert_eq!(mh.nucleus_witness(&high[..2], &low[1..3]), None);
    }

    #[test]
    fn relations_hold_and_perturbation_fails() {
        let lom = octonions();
        let mh = mh_envelope(lom);
        let rep = check_envelope_relations(&mh, lom.malcev(), 1);
        assert!(rep.passed(), "{rep:?}");
        let mut bad = lom.malcev().clone();
        let k = (0..7).find(|&k| !bad.coefficient(0, 1, k).is_zero()).unwrap();
        bad.set(0, 1, k, &bad.coefficient(0, 1, k) + &Rational::one());
        let rep = check_envelope_relations(&mh, &bad, 1);
        assert!(!rep.passed());
        assert!(rep.checks[0].witness.as_deref().unwrap().starts_with("(a0, a1"));
    }
}
