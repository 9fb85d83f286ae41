use super::finite_loop::{FiniteLoop, IdentityCheck, LoopReport};
use super::perm::Perm;
use super::LoopError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OpKind {
    P,
    L,
    R,
}

/// The element an operator is indexed by, as a word in `x` and `y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Arg {
    One,
    X,
    Y,
    /// `(xy)x`
    Xyx,
    /// `y⁻¹x`
    YinvX,
    /// `xy⁻¹`
    XYinv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Factor {
    pub kind: OpKind,
    pub arg: Arg,
    pub inverse: bool,
}

const fn f(kind: OpKind, arg: Arg) -> Factor {
    Factor { kind, arg, inverse: false }
}

/// A relation `lhs = rhs` between words in the operators; words are read
/// left to right, first factor applied first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub family: &'static str,
    pub lhs: Vec<Factor>,
    pub rhs: Vec<Factor>,
}

impl Relation {
    fn new(family: &'static str, lhs: &[Factor], rhs: &[Factor]) -> Self {
        Relation { family, lhs: lhs.to_vec(), rhs: rhs.to_vec() }
    }

    /// Image under the substitution `P → L → R → P`.
    pub fn rho(&self) -> Relation {
        let map = |fa: &Factor| Factor {
            kind: match fa.kind {
                OpKind::P => OpKind::L,
                OpKind::L => OpKind::R,
                OpKind::R => OpKind::P,
            },
            ..*fa
        };
        Relation { family: self.family, lhs: self.lhs.iter().map(map).collect(), rhs: self.rhs.iter().map(map).collect() }
    }

    /// Image under `P ↦ P⁻¹, L ↦ R⁻¹, R ↦ L⁻¹`.
    pub fn sigma(&self) -> Relation {
        let map = |fa: &Factor| Factor {
            kind: match fa.kind {
                OpKind::P => OpKind::P,
                OpKind::L => OpKind::R,
                OpKind::R => OpKind::L,
            },
            arg: fa.arg,
            inverse: !fa.inverse,
        };
        Relation { family: self.family, lhs: self.lhs.iter().map(map).collect(), rhs: self.rhs.iter().map(map).collect() }
    }
}

/// The relation block satisfied by the operators of a Moufang loop.
pub fn doro_relations() -> Vec<Relation> {
    use Arg::*;
    use OpKind::*;
    vec![
        Relation::new("unit", &[f(P, One)], &[]),
        Relation::new("unit", &[f(L, One)], &[]),
        Relation::new("unit", &[f(R, One)], &[]),
        Relation::new("plr", &[f(P, X), f(L, X), f(R, X)], &[]),
        Relation::new("l_xyx", &[f(L, Xyx)], &[f(L, X), f(L, Y), f(L, X)]),
        Relation::new("r_xyx", &[f(R, Xyx)], &[f(R, X), f(R, Y), f(R, X)]),
        Relation::new("p_xyx", &[f(P, Xyx)], &[f(P, X), f(P, Y), f(P, X)]),
        Relation::new("l_yinv_x", &[f(L, YinvX)], &[f(R, Y), f(L, X), f(P, Y)]),
        Relation::new("r_yinv_x", &[f(R, YinvX)], &[f(P, Y), f(R, X), f(L, Y)]),
        Relation::new("p_yinv_x", &[f(P, YinvX)], &[f(L, Y), f(P, X), f(R, Y)]),
        Relation::new("l_x_yinv", &[f(L, XYinv)], &[f(P, Y), f(L, X), f(R, Y)]),
        Relation::new("r_x_yinv", &[f(R, XYinv)], &[f(L, Y), f(R, X), f(P, Y)]),
        Relation::new("p_x_yinv", &[f(P, XYinv)], &[f(R, Y), f(P, X), f(L, Y)]),
    ]
}

/// Every operator `L_a, R_a, P_a` of a loop with two-sided inverses.
pub struct OperatorTable<'a> {
    q: &'a FiniteLoop,
    l: Vec<Perm>,
    r: Vec<Perm>,
    p: Vec<Perm>,
}

impl<'a> OperatorTable<'a> {
    pub fn new(q: &'a FiniteLoop) -> Result<Self, LoopError> {
        for x in 0..q.order() {
            q.inverse(x).ok_or(LoopError::NoInverse { element: x + 1 })?;
        }
        let l: Vec<Perm> = (0..q.order()).map(|a| q.left_mult(a)).collect();
        let r: Vec<Perm> = (0..q.order()).map(|a| q.right_mult(a)).collect();
        let p = l.iter().zip(&r).map(|(la, ra)| ra.inverse().then(&la.inverse())).collect();
        Ok(OperatorTable { q, l, r, p })
    }

    pub fn arg(&self, a: Arg, x: usize, y: usize) -> usize {
        let q = self.q;
        match a {
            Arg::One => 0,
            Arg::X => x,
            Arg::Y => y,
            Arg::Xyx => q.mul(q.mul(x, y), x),
            Arg::YinvX => q.mul(q.inv(y), x),
            Arg::XYinv => q.mul(x, q.inv(y)),
        }
    }

    pub fn op(&self, kind: OpKind, a: usize) -> &Perm {
        match kind {
            OpKind::P => &self.p[a],
            OpKind::L => &self.l[a],
            OpKind::R => &self.r[a],
        }
    }

    pub fn word(&self, w: &[Factor], x: usize, y: usize) -> Perm {
        w.iter().fold(Perm::identity(self.q.order()), |acc, fa| {
            let p = self.op(fa.kind, self.arg(fa.arg, x, y));
            if fa.inverse {
                acc.then(&p.inverse())
            } else {
                acc.then(p)
            }
        })
    }

    /// First `(x, y)` at which `rel` fails.
    pub fn relation_witness(&self, rel: &Relation) -> Option<(usize, usize)> {
        let n = self.q.order();
        (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .find(|&(x, y)| self.word(&rel.lhs, x, y) != self.word(&rel.rhs, x, y))
    }
}

/// Checks every relation of the block for all `x, y`, plus the identity
/// `P_x = (y ↦ x⁻¹(yx⁻¹))`, one report entry per family.
pub fn verify_doro_relations(q: &FiniteLoop, loop_id: &str) -> Result<LoopReport, LoopError> {
    let ops = OperatorTable::new(q)?;
    let mut checks: Vec<IdentityCheck> = Vec::new();
    for rel in doro_relations() {
        let w = ops.relation_witness(&rel).map(|(x, y)| vec![x, y]);
        match checks.iter_mut().find(|c| c.name == rel.family) {
            Some(c) if c.passed && w.is_some() => *c = IdentityCheck::from_witness(rel.family, w),
            Some(_) => {}
            None => checks.push(IdentityCheck::from_witness(rel.family, w)),
        }
    }
    let n = q.order();
    let sandwich = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .find(|&(x, y)| {
            let xi = q.inv(x);
            ops.p[x].apply(y) != q.mul(xi, q.mul(y, xi))
        })
        .map(|(x, y)| vec![x, y]);
    checks.push(IdentityCheck::from_witness("p_sandwich", sandwich));
    Ok(LoopReport { loop_id: loop_id.to_string(), checks })
}

/// Checks that the `ρ`- and `σ`-images of every relation hold as well.
pub fn verify_doro_symmetry(q: &FiniteLoop, loop_id: &str) -> Result<LoopReport, LoopError> {
    let ops = OperatorTable::new(q)?;
    let rels = doro_relations();
    let mut checks = Vec::new();
    for (name, map) in [("rho_image", Relation::rho as fn(&Relation) -> Relation), ("sigma_image", Relation::sigma)] {
        let w = rels.iter().find_map(|r| ops.relation_witness(&map(r)).map(|(x, y)| vec![x, y]));
        checks.push(IdentityCheck::from_witness(name, w));
    }
    Ok(LoopReport { loop_id: loop_id.to_string(), checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::loops::generators::*;

    #[test]
    fn twelve_families() {
        let q = cyclic_group(1);
        let rep = verify_doro_relations(&q, "trivial").unwrap();
        assert_eq!(rep.checks.len(), 12);
        assert!(rep.passed());
    }

    #[test]
    fn moufang_corpus_satisfies_relations() {
        let corpus = [
            cyclic_group(4),
            symmetric_group(3),
            chein_loop(&symmetric_group(3)).unwrap(),
            octonion_unit_loop(),
        ];
        for q in &corpus {
            assert!(verify_doro_relations(q, "q").unwrap().passed());
            assert!(verify_doro_symmetry(q, "q").unwrap().passed());
        }
    }

    #[test]
    fn rho_cycles_with_period_three() {
        for rel in doro_relations() {
            assert_eq!(rel.rho().rho().rho(), rel);
            assert_eq!(rel.sigma().sigma(), rel);
        }
    }

    #[test]
    fn relations_fail_off_moufang() {
        let q = non_moufang_loop(5, 7).unwrap();
        match verify_doro_relations(&q, "nm") {
            Ok(rep) => {
                let fail = rep.first_failure().expect("some family fails");
                assert_eq!(fail.witness.as_ref().unwrap().len(), 2);
            }
            Err(e) => assert!(matches!(e, LoopError::NoInverse { .. })),
        }
    }
}
