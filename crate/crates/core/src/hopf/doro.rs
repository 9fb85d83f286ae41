use super::mh::mh_subalgebra;
use super::{Bialgebra, Check, GroupAlgebra, Lin, LoopAlgebra, TrialityHopf};
use crate::autotopy::{m_triple, AtpGroup};
use crate::gtriality::{corpus, moufang_from_triality, TrialityGroupLike};
use crate::loops::generators::cyclic_group;
use crate::qcore::{QMatrix, Rational};
use serde::Serialize;
use std::collections::HashMap;
use std::fmt::Debug;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Symbol {
    P,
    L,
    R,
}

impl Symbol {
    pub const ALL: [Symbol; 3] = [Symbol::P, Symbol::L, Symbol::R];

    /// The power of `ρ` taking `P` to this symbol.
    pub fn power(self) -> u32 {
        match self {
            Symbol::P => 0,
            Symbol::L => 1,
            Symbol::R => 2,
        }
    }

    /// `P → L → R → P`.
    pub fn rho(self) -> Symbol {
        match self {
            Symbol::P => Symbol::L,
            Symbol::L => Symbol::R,
            Symbol::R => Symbol::P,
        }
    }
}

/// A unital associative algebra in which the symbols are evaluated.
pub trait OperatorAlgebra {
    type Elem: Clone + PartialEq + Debug;

    fn identity(&self) -> Self::Elem;
    fn zero(&self) -> Self::Elem;
    fn compose(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn add_scaled(&self, acc: &mut Self::Elem, x: &Self::Elem, c: &Rational);
}

/// Square matrices of a fixed size.
pub struct Matrices(pub usize);

impl OperatorAlgebra for Matrices {
    type Elem = QMatrix;

    fn identity(&self) -> QMatrix {
        QMatrix::identity(self.0)
    }

    fn zero(&self) -> QMatrix {
        QMatrix::zeros(self.0, self.0)
    }

    fn compose(&self, a: &QMatrix, b: &QMatrix) -> QMatrix {
        a * b
    }

    fn add_scaled(&self, acc: &mut QMatrix, x: &QMatrix, c: &Rational) {
        *acc = &*acc + &x.scale(c);
    }
}

/// A Hopf algebra seen as an associative algebra.
pub struct Target<'a, H>(pub &'a H);

impl<H: Bialgebra> OperatorAlgebra for Target<'_, H> {
    type Elem = Lin<H::Basis>;

    fn identity(&self) -> Lin<H::Basis> {
        self.0.one()
    }

    fn zero(&self) -> Lin<H::Basis> {
        Lin::zero()
    }

    fn compose(&self, a: &Lin<H::Basis>, b: &Lin<H::Basis>) -> Lin<H::Basis> {
        self.0.mul(a, b)
    }

    fn add_scaled(&self, acc: &mut Lin<H::Basis>, x: &Lin<H::Basis>, c: &Rational) {
        acc.add_scaled(x, c);
    }
}

/// A failing relation with indices into the basis of `U`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationWitness {
    pub relation: &'static str,
    pub m: usize,
    pub n: Option<usize>,
}

/// The relation names, grouped by the part of the multiplication-algebra
/// lemma they belong to.
pub const RELATION_PARTS: [(&str, &[&str]); 5] = [
    ("i", &["unit"]),
    ("ii", &["plr"]),
    ("iii", &["iii_p", "iii_l", "iii_r"]),
    ("iv", &["iv_p", "iv_l", "iv_r"]),
    ("v", &["v_p", "v_l", "v_r"]),
];

struct Evaluator<'a, U: Bialgebra, A: OperatorAlgebra, F> {
    u: &'a U,
    alg: &'a A,
    assign: F,
    cache: HashMap<(Symbol, U::Basis), A::Elem>,
}

impl<U, A, F> Evaluator<'_, U, A, F>
where
    U: Bialgebra,
    A: OperatorAlgebra,
    F: FnMut(Symbol, &U::Basis) -> A::Elem,
{
    fn gen(&mut self, s: Symbol, b: &U::Basis) -> A::Elem {
        if let Some(x) = self.cache.get(&(s, b.clone())) {
            return x.clone();
        }
        let x = (self.assign)(s, b);
        self.cache.insert((s, b.clone()), x.clone());
        x
    }

    fn sym(&mut self, s: Symbol, v: &Lin<U::Basis>) -> A::Elem {
        let mut acc = self.alg.zero();
        for (b, c) in v.iter() {
            let x = self.gen(s, b);
            self.alg.add_scaled(&mut acc, &x, c);
        }
        acc
    }

    fn word(&mut self, w: &[(Symbol, &U::Basis)]) -> A::Elem {
        let mut acc = self.alg.identity();
        for (s, b) in w {
            let x = self.gen(*s, b);
            acc = self.alg.compose(&acc, &x);
        }
        acc
    }

    /// `Σ X_{m₁} Y_n Z_{m₂}`.
    fn sandwich(&mut self, m: &U::Basis, x: Symbol, y: Symbol, n: &U::Basis, z: Symbol) -> A::Elem {
        let mut acc = self.alg.zero();
        for ((a, b), c) in self.u.coproduct_basis(m).iter() {
            let w = self.word(&[(x, a), (y, n), (z, b)]);
            self.alg.add_scaled(&mut acc, &w, c);
        }
        acc
    }

    fn single(&mut self, m: &U::Basis) -> Vec<&'static str> {
        let mut bad = Vec::new();
        let u = self.u;
        let one = u.unit_basis();
        let id = self.alg.identity();
        if Symbol::ALL.iter().any(|&s| self.gen(s, &one) != id) {
            bad.push("unit");
        }
        let mut lhs = self.alg.zero();
        for ((a, b, c), k) in u.coproduct3(&Lin::basis(m.clone())).iter() {
            let w = self.word(&[(Symbol::P, a), (Symbol::L, b), (Symbol::R, c)]);
            self.alg.add_scaled(&mut lhs, &w, k);
        }
        let mut rhs = self.alg.zero();
        self.alg.add_scaled(&mut rhs, &id, &u.counit_basis(m));
        if lhs != rhs {
            bad.push("plr");
        }
        bad
    }

    fn pair(&mut self, m: &U::Basis, n: &U::Basis) -> Vec<&'static str> {
        use Symbol::*;
        let mut bad = Vec::new();
        let u = self.u;
        let nv = Lin::basis(n.clone());
        let conj: Lin<U::Basis> = {
            let mut acc = Lin::zero();
            for ((a, b), c) in u.coproduct_basis(m).iter() {
                let an = u.mul_basis(a, n);
                acc.add_scaled(&u.mul(&an, &Lin::basis(b.clone())), c);
            }
            acc
        };
        let sm = u.antipode_basis(m);
        let smn = u.mul(&sm, &nv);
        let nsm = u.mul(&nv, &sm);
        for (name, s) in [("iii_p", P), ("iii_l", L), ("iii_r", R)] {
            if self.sandwich(m, s, s, n, s) != self.sym(s, &conj) {
                bad.push(name);
            }
        }
        for (name, (x, y, z), s) in [("iv_p", (R, P, L), P), ("iv_l", (P, L, R), L), ("iv_r", (L, R, P), R)] {
            if self.sandwich(m, x, y, n, z) != self.sym(s, &smn) {
                bad.push(name);
            }
        }
        for (name, (x, y, z), s) in [("v_p", (L, P, R), P), ("v_l", (R, L, P), L), ("v_r", (P, R, L), R)] {
            if self.sandwich(m, x, y, n, z) != self.sym(s, &nsm) {
                bad.push(name);
            }
        }
        bad
    }
}

/// All failing relations of the `Doro(U)` block, at most one per relation
/// name, with `P_m, L_m, R_m ↦ assign(·, m)` on the basis of `U`.
pub fn doro_relation_failures<U, A, F>(u: &U, basis: &[U::Basis], alg: &A, assign: F) -> Vec<RelationWitness>
where
    U: Bialgebra,
    A: OperatorAlgebra,
    F: FnMut(Symbol, &U::Basis) -> A::Elem,
{
    let mut ev = Evaluator { u, alg, assign, cache: HashMap::new() };
    let mut out: Vec<RelationWitness> = Vec::new();
    let mut push = |w: RelationWitness| {
        if !out.iter().any(|x| x.relation == w.relation) {
            out.push(w);
        }
    };
    for (i, m) in basis.iter().enumerate() {
        for r in ev.single(m) {
            push(RelationWitness { relation: r, m: i, n: None });
        }
        for (j, n) in basis.iter().enumerate() {
            for r in ev.pair(m, n) {
                push(RelationWitness { relation: r, m: i, n: Some(j) });
            }
        }
    }
    out
}

/// The first failing relation, if any.
pub fn doro_relation_witness<U, A, F>(u: &U, basis: &[U::Basis], alg: &A, assign: F) -> Option<RelationWitness>
where
    U: Bialgebra,
    A: OperatorAlgebra,
    F: FnMut(Symbol, &U::Basis) -> A::Elem,
{
    doro_relation_failures(u, basis, alg, assign).into_iter().next()
}

/// `L_m`, `R_m` and `P_m = Σ R_{S(m₁)}L_{S(m₂)}` as matrices on `basis`,
/// which must span a subalgebra.
#[derive(Clone, Debug)]
pub struct MultiplicationOperators {
    pub l: Vec<QMatrix>,
    pub r: Vec<QMatrix>,
    pub p: Vec<QMatrix>,
}

impl MultiplicationOperators {
    pub fn get(&self, s: Symbol, i: usize) -> &QMatrix {
        match s {
            Symbol::P => &self.p[i],
            Symbol::L => &self.l[i],
            Symbol::R => &self.r[i],
        }
    }
}

pub fn multiplication_operators<U: Bialgebra>(u: &U, basis: &[U::Basis]) -> MultiplicationOperators {
    let n = basis.len();
    let index: HashMap<&U::Basis, usize> = basis.iter().enumerate().map(|(i, b)| (b, i)).collect();
    let coords = |v: &Lin<U::Basis>| {
        let mut c = vec![Rational::zero(); n];
        for (b, x) in v.iter() {
            c[*index.get(b).expect("product leaves the basis span")] = x.clone();
        }
        c
    };
    let op = |f: &dyn Fn(&U::Basis) -> Lin<U::Basis>| {
        QMatrix::from_columns(n, &basis.iter().map(|b| coords(&f(b))).collect::<Vec<_>>())
    };
    let l: Vec<QMatrix> = basis.iter().map(|m| op(&|x| u.mul_basis(m, x))).collect();
    let r: Vec<QMatrix> = basis.iter().map(|m| op(&|x| u.mul_basis(x, m))).collect();
    let lin_op = |ops: &[QMatrix], v: &Lin<U::Basis>| {
        let mut acc = QMatrix::zeros(n, n);
        for (b, c) in v.iter() {
            acc = &acc + &ops[index[b]].scale(c);
        }
        acc
    };
    let p = basis
        .iter()
        .map(|m| {
            let mut acc = QMatrix::zeros(n, n);
            for ((a, b), c) in u.coproduct_basis(m).iter() {
                let ra = lin_op(&r, &u.antipode_basis(a));
                let lb = lin_op(&l, &u.antipode_basis(b));
                acc = &acc + &(&ra * &lb).scale(c);
            }
            acc
        })
        .collect();
    MultiplicationOperators { l, r, p }
}

#[derive(Clone, Debug, Serialize)]
pub struct MultAlgReport {
    pub dim: usize,
    pub parts: Vec<Check>,
}

impl MultAlgReport {
    pub fn passed(&self) -> bool {
        self.parts.iter().all(|c| c.passed)
    }

    pub fn part(&self, name: &str) -> Option<&Check> {
        self.parts.iter().find(|c| c.name == name)
    }
}

fn group_by_part(failures: &[RelationWitness]) -> Vec<Check> {
    RELATION_PARTS
        .iter()
        .map(|(part, names)| {
            let w = failures
                .iter()
                .find(|f| names.contains(&f.relation))
                .map(|f| format!("{} at m = {}, n = {:?}", f.relation, f.m, f.n));
            Check::new(part, w)
        })
        .collect()
}

/// Parts i)–v) of the multiplication-algebra lemma as matrix identities on
/// every basis pair.
pub fn check_mult_alg_identities<U: Bialgebra>(u: &U, basis: &[U::Basis]) -> MultAlgReport {
    let ops = multiplication_operators(u, basis);
    let index: HashMap<&U::Basis, usize> = basis.iter().enumerate().map(|(i, b)| (b, i)).collect();
    let failures =
        doro_relation_failures(u, basis, &Matrices(basis.len()), |s, b| ops.get(s, index[b]).clone());
    MultAlgReport { dim: basis.len(), parts: group_by_part(&failures) }
}

#[derive(Clone, Debug, Serialize)]
pub struct DoroTargetReport {
    pub relations: Vec<Check>,
    pub equivariance: Check,
    pub coalgebra_morphism: Check,
    pub phi_in_mh: Check,
    /// `m ↦ φ̄(P_m)` respects `*`.
    pub multiplicative: Check,
    /// `m ↦ φ̄(P_m)` has linearly independent images.
    pub injective: Check,
}

impl DoroTargetReport {
    pub fn relations_hold(&self) -> bool {
        self.relations.iter().all(|c| c.passed)
    }

    pub fn passed(&self) -> bool {
        self.relations_hold()
            && [&self.equivariance, &self.coalgebra_morphism, &self.phi_in_mh, &self.multiplicative, &self.injective]
                .iter()
                .all(|c| c.passed)
    }
}

/// Checks the `Doro(U)` relations in `target` under
/// `P_m ↦ φ(m)`, `L_m ↦ ρ(φ(m))`, `R_m ↦ ρ²(φ(m))`, the equivariance of
/// this assignment, and that `φ` is a Moufang–Hopf morphism into `MH`.
pub fn verify_doro_target<U, H, F>(
    u: &U,
    u_basis: &[U::Basis],
    target: &H,
    target_basis: &[H::Basis],
    phi: F,
) -> DoroTargetReport
where
    U: Bialgebra,
    H: TrialityHopf,
    F: Fn(&U::Basis) -> Lin<H::Basis>,
{
    let phi_lin = |v: &Lin<U::Basis>| v.map(&phi);
    let bar = |s: Symbol, b: &U::Basis| target.rho_pow(&phi(b), s.power());
    let bar_lin = |s: Symbol, v: &Lin<U::Basis>| target.rho_pow(&phi_lin(v), s.power());
    let failures = doro_relation_failures(u, u_basis, &Target(target), bar);
    let relations = group_by_part(&failures);
    let idx = |i: usize| format!("{i}");

    let equivariance = u_basis.iter().position(|m| {
        let sm = u.antipode_basis(m);
        !Symbol::ALL.iter().all(|&s| {
            let x = bar(s, m);
            let sigma_sym = match s {
                Symbol::P => bar_lin(Symbol::P, &sm),
                Symbol::L => bar_lin(Symbol::R, &sm),
                Symbol::R => bar_lin(Symbol::L, &sm),
            };
            target.rho(&x) == bar(s.rho(), m) && target.sigma(&x) == sigma_sym
        })
    });
    let coalgebra = u_basis.iter().position(|m| {
        let img = phi(m);
        let pushed: Lin<(H::Basis, H::Basis)> = u.coproduct_basis(m).map(|(a, b)| {
            let (fa, fb) = (phi(a), phi(b));
            let mut t = Lin::zero();
            for (x, c) in fa.iter() {
                for (y, d) in fb.iter() {
                    t.add_term((x.clone(), y.clone()), &(c * d));
                }
            }
            t
        });
        target.coproduct(&img) != pushed
            || target.counit(&img) != u.counit_basis(m)
            || target.antipode(&img) != phi_lin(&u.antipode_basis(m))
    });

    let mh = mh_subalgebra(target, target_basis);
    let phi_in_mh = u_basis.iter().position(|m| !mh.contains(&phi(m)));
    let multiplicative = u_basis.iter().enumerate().find_map(|(i, m)| {
        u_basis
            .iter()
            .position(|n| mh.mul(&phi(m), &phi(n)) != phi_lin(&u.mul_basis(m, n)))
            .map(|j| format!("({i}, {j})"))
    });
    let mut span = super::SparseEchelon::new();
    let injective = u_basis.iter().position(|m| !span.insert(&phi(m)));

    DoroTargetReport {
        relations,
        equivariance: Check::new("equivariance", equivariance.map(idx)),
        coalgebra_morphism: Check::new("coalgebra_morphism", coalgebra.map(idx)),
        phi_in_mh: Check::new("phi_in_mh", phi_in_mh.map(idx)),
        multiplicative: Check::new("multiplicative", multiplicative),
        injective: Check::new("injective", injective.map(idx)),
    }
}

/// A bundled `(U, target, φ)` triple with the verdict it should produce.
#[derive(Clone, Copy)]
pub struct DoroFixture {
    pub name: &'static str,
    pub expect_pass: bool,
    run: fn() -> DoroTargetReport,
}

impl DoroFixture {
    pub fn run(&self) -> DoroTargetReport {
        (self.run)()
    }
}

impl Debug for DoroFixture {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("DoroFixture").field("name", &self.name).field("expect_pass", &self.expect_pass).finish()
    }
}

fn c4_into_atp() -> DoroTargetReport {
    let q = cyclic_group(4);
    let u = LoopAlgebra::new(q.clone()).expect("groups are Moufang");
    let h = GroupAlgebra::new(AtpGroup::new(&q).expect("Atp(C4)"));
    let hb = h.basis();
    verify_doro_target(&u, &u.basis(), &h, &hb, |&b| Lin::basis(m_triple(&q, b)))
}

fn wreath_fixture(corrupt: bool) -> DoroTargetReport {
    let g = corpus::s3_wreath();
    let ml = moufang_from_triality(&g).expect("M(G) of the wreath group");
    let u = LoopAlgebra::new(ml.table.clone()).expect("M(G) is Moufang");
    let mut images: Vec<usize> = ml.carrier.iter().map(|m| g.inv(m)).collect();
    if corrupt {
        images.swap(1, 2);
    }
    let h = GroupAlgebra::new(g);
    let hb = h.basis();
    verify_doro_target(&u, &u.basis(), &h, &hb, |&b| Lin::basis(images[b]))
}

pub fn bundled_fixtures() -> Vec<DoroFixture> {
    vec![
        DoroFixture { name: "c4_into_atp", expect_pass: true, run: c4_into_atp },
        DoroFixture { name: "m_wreath_into_wreath", expect_pass: true, run: || wreath_fixture(false) },
        DoroFixture { name: "m_wreath_swapped", expect_pass: false, run: || wreath_fixture(true) },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::loops::{OpKind, OperatorTable};
    use crate::loops::generators::*;
    use crate::loops::FiniteLoop;

    fn perm_matrix(p: &crate::loops::Perm) -> QMatrix {
        let n = p.degree();
        let mut m = QMatrix::zeros(n, n);
        for j in 0..n {
            m[(p.apply(j), j)] = Rational::one();
        }
        m
    }

    fn mult_alg(q: FiniteLoop) -> MultAlgReport {
        let u = LoopAlgebra::new(q).unwrap();
        check_mult_alg_identities(&u, &u.basis())
    }

    #[test]
    fn operators_match_loop_permutations() {
        let q = chein_loop(&symmetric_group(3)).unwrap();
        let u = LoopAlgebra::new(q.clone()).unwrap();
        let ops = multiplication_operators(&u, &u.basis());
        let table = OperatorTable::new(&q).unwrap();
        for a in 0..q.order() {
            assert_eq!(ops.l[a], perm_matrix(table.op(OpKind::L, a)));
            assert_eq!(ops.r[a], perm_matrix(table.op(OpKind::R, a)));
            assert_eq!(ops.p[a], perm_matrix(table.op(OpKind::P, a)));
        }
    }

    #[test]
    fn unit_operators_are_identity() {
        let u = LoopAlgebra::new(octonion_unit_loop()).unwrap();
        let ops = multiplication_operators(&u, &u.basis());
        for s in Symbol::ALL {
            assert_eq!(ops.get(s, 0), &QMatrix::identity(16));
        }
    }

    #[test]
    fn chein12_parts() {
        let rep = mult_alg(chein_loop(&symmetric_group(3)).unwrap());
        assert!(rep.passed(), "{rep:?}");
        assert_eq!(rep.parts.len(), 5);
    }

    #[test]
    fn o16_parts() {
        let rep = mult_alg(octonion_unit_loop());
        assert!(rep.part("iv").unwrap().passed && rep.part("v").unwrap().passed);
        assert!(rep.passed());
    }

    #[test]
    fn matrix_evaluation_detects_wrong_operators() {
        let q = chein_loop(&symmetric_group(3)).unwrap();
        let u = LoopAlgebra::new(q).unwrap();
        let ops = multiplication_operators(&u, &u.basis());
        let fails = doro_relation_failures(&u, &u.basis(), &Matrices(12), |s, &b| match s {
            Symbol::L => ops.r[b].clone(),
            Symbol::R => ops.l[b].clone(),
            Symbol::P => ops.p[b].clone(),
        });
        assert!(!fails.is_empty());
    }

    #[test]
    fn bundled_fixture_verdicts() {
        for fx in bundled_fixtures() {
            let rep = fx.run();
            assert_eq!(rep.passed(), fx.expect_pass, "{}: {rep:?}", fx.name);
        }
    }

    #[test]
    fn swapped_fixture_breaks_relations() {
        let fx = bundled_fixtures().into_iter().find(|f| !f.expect_pass).unwrap();
        assert!(!fx.run().relations_hold());
    }

    #[test]
    fn autotopy_images_need_inverted_argument() {
        let q = chein_loop(&symmetric_group(3)).unwrap();
        let u = LoopAlgebra::new(q.clone()).unwrap();
        let h = GroupAlgebra::new(AtpGroup::new(&q).unwrap());
        let hb = h.basis();
        let direct = verify_doro_target(&u, &u.basis(), &h, &hb, |&b| Lin::basis(m_triple(&q, b)));
        assert!(!direct.multiplicative.passed);
        let inverted = verify_doro_target(&u, &u.basis(), &h, &hb, |&b| Lin::basis(m_triple(&q, q.inv(b))));
        assert!(inverted.passed(), "{inverted:?}");
    }
}
