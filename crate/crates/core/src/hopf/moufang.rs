use super::{Bialgebra, Check, Lin};
use crate::sampling::{pair_coverage, triple_coverage, EXHAUSTIVE_LIMIT, SAMPLE_COUNT};
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct MoufangHopfReport {
    pub elements: usize,
    pub exhaustive: bool,
    pub checks: Vec<Check>,
}

impl MoufangHopfReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// `Σ f(u₁, u₂)` with the tensor factors promoted to elements.
fn sw<A: Bialgebra, F>(alg: &A, u: &Lin<A::Basis>, mut f: F) -> Lin<A::Basis>
where
    F: FnMut(Lin<A::Basis>, Lin<A::Basis>) -> Lin<A::Basis>,
{
    alg.sweedler(u, |a, b| f(Lin::basis(a.clone()), Lin::basis(b.clone())))
}

/// The left, middle and right Moufang–Hopf identities on triples and the
/// four antipode axioms on pairs of `elems`; all are multilinear, so a
/// spanning set suffices.
pub fn check_moufang_hopf<A: Bialgebra>(alg: &A, elems: &[Lin<A::Basis>], seed: u64) -> MoufangHopfReport {
    let m = |x: &Lin<A::Basis>, y: &Lin<A::Basis>| alg.mul(x, y);
    let n = elems.len();
    let (triples, t_ex) = triple_coverage(n, EXHAUSTIVE_LIMIT, SAMPLE_COUNT, seed);
    let (pairs, p_ex) = pair_coverage(n, EXHAUSTIVE_LIMIT, SAMPLE_COUNT, seed);

    let mut left = None;
    let mut middle = None;
    let mut right = None;
    for &[i, j, k] in &triples {
        let (u, v, w) = (&elems[i], &elems[j], &elems[k]);
        let w3 = || Some(format!("({i}, {j}, {k})"));
        if left.is_none() {
            let l = sw(alg, u, |a, b| m(&a, &m(v, &m(&b, w))));
            let r = sw(alg, u, |a, b| m(&m(&m(&a, v), &b), w));
            if l != r {
                left = w3();
            }
        }
        if middle.is_none() {
            let vw = m(v, w);
            let l = sw(alg, u, |a, b| m(&m(&a, &vw), &b));
            let r = sw(alg, u, |a, b| m(&m(&a, v), &m(w, &b)));
            if l != r {
                middle = w3();
            }
        }
        if right.is_none() {
            let l = sw(alg, u, |a, b| m(&m(&m(v, &a), w), &b));
            let r = sw(alg, u, |a, b| m(v, &m(&a, &m(w, &b))));
            if l != r {
                right = w3();
            }
        }
    }

    let mut antipode = [None, None, None, None];
    for &(i, j) in &pairs {
        let (u, v) = (&elems[i], &elems[j]);
        let ev = v.scaled(&alg.counit(u));
        let sides = [
            sw(alg, u, |a, b| m(&alg.antipode(&a), &m(&b, v))),
            sw(alg, u, |a, b| m(&a, &m(&alg.antipode(&b), v))),
            sw(alg, u, |a, b| m(&m(v, &a), &alg.antipode(&b))),
            sw(alg, u, |a, b| m(&m(v, &alg.antipode(&a)), &b)),
        ];
        for (slot, side) in antipode.iter_mut().zip(sides) {
            if slot.is_none() && side != ev {
                *slot = Some(format!("({i}, {j})"));
            }
        }
    }
    let [a1, a2, a3, a4] = antipode;
    MoufangHopfReport {
        elements: n,
        exhaustive: t_ex && p_ex,
        checks: vec![
            Check::new("left_moufang_hopf", left),
            Check::new("middle_moufang_hopf", middle),
            Check::new("right_moufang_hopf", right),
            Check::new("antipode_left_s_first", a1),
            Check::new("antipode_left_s_second", a2),
            Check::new("antipode_right_s_second", a3),
            Check::new("antipode_right_s_first", a4),
        ],
    }
}

/// First index triple with `(ab)c ≠ a(bc)`.
pub fn nonassociativity_witness<A: Bialgebra>(alg: &A, elems: &[Lin<A::Basis>]) -> Option<[usize; 3]> {
    let n = elems.len();
    for i in 0..n {
        for j in 0..n {
            let ij = alg.mul(&elems[i], &elems[j]);
            for k in 0..n {
                if alg.mul(&ij, &elems[k]) != alg.mul(&elems[i], &alg.mul(&elems[j], &elems[k])) {
                    return Some([i, j, k]);
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{LoopAlgebra, Tensor};
    use crate::loops::generators::*;
    use crate::loops::FiniteLoop;
    use crate::qcore::Rational;
    use crate::sampling::DEFAULT_SEED;

    fn elems(n: usize) -> Vec<Lin<usize>> {
        (0..n).map(Lin::basis).collect()
    }

    #[test]
    fn c2_is_associative() {
        let a = LoopAlgebra::new(cyclic_group(2)).unwrap();
        let rep = check_moufang_hopf(&a, &elems(2), DEFAULT_SEED);
        assert!(rep.passed() && rep.exhaustive);
        assert_eq!(nonassociativity_witness(&a, &elems(2)), None);
    }

    #[test]
    fn chein12_identities() {
        let a = LoopAlgebra::new(chein_loop(&symmetric_group(3)).unwrap()).unwrap();
        let rep = check_moufang_hopf(&a, &elems(12), DEFAULT_SEED);
        assert!(rep.passed(), "{rep:?}");
        assert!(rep.exhaustive);
        assert!(nonassociativity_witness(&a, &elems(12)).is_some());
    }

    #[test]
    fn o16_identities() {
        let a = LoopAlgebra::new(octonion_unit_loop()).unwrap();
        let rep = check_moufang_hopf(&a, &elems(16), DEFAULT_SEED);
        assert!(rep.passed(), "{rep:?}");
        let [i, j, k] = nonassociativity_witness(&a, &elems(16)).unwrap();
        let q = a.loop_();
        assert_ne!(q.mul(q.mul(i, j), k), q.mul(i, q.mul(j, k)));
    }

    #[test]
    fn non_moufang_loop_is_rejected() {
        let q = non_moufang_loop(5, DEFAULT_SEED).unwrap();
        assert!(LoopAlgebra::new(q).is_err());
    }

    struct Unchecked(FiniteLoop);

    impl Bialgebra for Unchecked {
        type Basis = usize;
        fn unit_basis(&self) -> usize {
            self.0.unit()
        }
        fn mul_basis(&self, a: &usize, b: &usize) -> Lin<usize> {
            Lin::basis(self.0.mul(*a, *b))
        }
        fn coproduct_basis(&self, a: &usize) -> Tensor<usize> {
            Lin::basis((*a, *a))
        }
        fn counit_basis(&self, _: &usize) -> Rational {
            Rational::one()
        }
        fn antipode_basis(&self, a: &usize) -> Lin<usize> {
            Lin::basis(self.0.inverse(*a).unwrap_or(*a))
        }
    }

    #[test]
    fn non_moufang_identities_fail() {
        let q = non_moufang_loop(5, DEFAULT_SEED).unwrap();
        let rep = check_moufang_hopf(&Unchecked(q), &elems(5), DEFAULT_SEED);
        assert!(!rep.check("left_moufang_hopf").unwrap().passed);
        assert!(!rep.passed());
    }
}
