//! Every report-producing check, addressable by its `noun verb` name.

use crate::input::{check_order, load_constants, load_group, load_lie, load_loop};
use crate::report::{Input, Report, ReportBuilder};
use anyhow::{anyhow, bail, Result};
use serde_json::json;
use triality::autotopy::{
    check_atp_triality, check_w_group, m_of_atp, pseudoautomorphism_group, psi_iso, AtpGroup, WGroup,
};
use triality::conv::{atpc_triality_checks, convolution_loop, GroupLikeCoalgebra};
use triality::envelope::{check_action_identity, check_envelope_relations, check_ug_triality, mh_envelope, p_span_check};
use triality::gtriality::{
    embed_into_autotopy, is_normal_subgroup, moufang_from_triality, s3_center, s3_relation_witness, triality_witness,
    TrialityGroupLike,
};
use triality::hopf::{
    bundled_fixtures, check_generator_independence, check_hopf_triality, check_mult_alg_identities, mh_matches_mloop,
    mh_subalgebra, verify_doro_target, Check, GroupAlgebra, Lin, LoopAlgebra,
};
use triality::loops::{check_moufang, is_moufang, verify_doro_relations, verify_doro_symmetry, FiniteLoop, LoopReport};
use triality::malcev::{
    build_cayley, check_lie_triality, eigen_one_criterion, lie_of_malcev, malcev_witness, CayleyAlgebra,
};
use triality::qcore::Rational;

/// Every check name accepted by `suite run`.
pub const CHECKS: &[&str] = &[
    "loop check",
    "loop doro",
    "group check",
    "group mloop",
    "group center",
    "group embed",
    "atp compute",
    "atp mloop",
    "atp psi",
    "atp psaut",
    "hopf check",
    "hopf mh",
    "hopf multalg",
    "hopf doro-verify",
    "hopf doro-fixtures",
    "cayley check",
    "malcev check",
    "lie triality-check",
    "env triality-check",
    "env mh",
    "env action-check",
    "conv loop",
    "conv triality",
];

/// Flags shared by the checks; unset values take per-check defaults.
#[derive(Clone, Debug, Default)]
pub struct Params {
    pub seed: u64,
    pub degree: Option<usize>,
    pub samples: Option<usize>,
    pub max_order: Option<usize>,
    pub points: Option<usize>,
    pub cayley: Option<[Rational; 3]>,
    pub malcev: Option<String>,
}

pub fn run_check(name: &str, inputs: &[Input], p: &Params) -> Result<Report> {
    let want = |k: usize| -> Result<()> {
        if inputs.len() != k {
            bail!("{name} takes {k} input file(s), got {}", inputs.len());
        }
        Ok(())
    };
    let mut b = ReportBuilder::new(name, p.seed);
    match name {
        "loop check" => {
            want(1)?;
            let q = loop_input(&inputs[0], p)?;
            loop_report(&mut b, &check_moufang(&q, &inputs[0].name));
            b.count("order", q.order());
            b.detail("associativity_witness", &q.associativity_witness().map(one_based3));
        }
        "loop doro" => {
            want(1)?;
            let q = loop_input(&inputs[0], p)?;
            loop_report(&mut b, &verify_doro_relations(&q, &inputs[0].name)?);
            let sym = verify_doro_symmetry(&q, &inputs[0].name)?;
            b.check("symmetry", sym.passed(), sym.first_failure().map(|c| json!(c)));
            b.count("order", q.order()).count("pairs", q.order() * q.order());
        }
        "group check" => {
            want(1)?;
            let g = group_input(&inputs[0], p)?;
            let elems = g.elements();
            b.witness("s3_relations", s3_relation_witness(&g, &elems).map(|(r, x)| json!({ "relation": r, "element": x + 1 })));
            b.witness(
                "triality",
                triality_witness(&g).map(|x| json!({ "element": x + 1, "order": g.group().element_order(x) })),
            );
            b.count("order", g.order());
        }
        "group mloop" => {
            want(1)?;
            let g = group_input(&inputs[0], p)?;
            let ml = moufang_from_triality(&g)?;
            b.check("product_formulas_agree", true, None);
            loop_report(&mut b, &check_moufang(&ml.table, "M(G)"));
            b.witness("doro", verify_doro_relations(&ml.table, "M(G)")?.first_failure().cloned());
            b.count("order", g.order()).count("m_order", ml.order());
            b.detail("carrier", &ml.carrier.iter().map(|x| x + 1).collect::<Vec<_>>());
            b.detail("table", &one_based_rows(&ml.table));
        }
        "group center" => {
            want(1)?;
            let g = group_input(&inputs[0], p)?;
            let z = s3_center(&g);
            b.check("normal", is_normal_subgroup(&g, &z), None);
            b.count("order", g.order()).count("center_order", z.len());
            b.detail("center", &z.iter().map(|x| x + 1).collect::<Vec<_>>());
        }
        "group embed" => {
            want(1)?;
            let g = group_input(&inputs[0], p)?;
            let e = embed_into_autotopy(&g)?;
            b.witness("autotopy", e.non_autotopy.map(|x| x + 1));
            b.witness("homomorphism", e.non_homomorphic.map(|(x, y)| [x + 1, y + 1]));
            b.witness("equivariance", e.non_equivariant.map(|x| x + 1));
            b.check(
                "kernel_is_center",
                e.kernel_is_center(),
                Some(json!({ "kernel": e.kernel.len(), "center": e.center.len() })),
            );
            b.count("order", g.order()).count("kernel_order", e.kernel.len()).count("m_order", e.mloop.order());
        }
        "atp compute" => {
            want(1)?;
            let atp = atp_input(&inputs[0], p)?;
            let r = check_atp_triality(&atp, p.seed);
            b.witness("autotopy", r.non_autotopy.clone());
            b.witness("closure", r.not_closed.clone());
            b.witness("s3_relations", r.s3_relation.clone());
            b.witness("triality", r.triality_failure.clone());
            b.witness("proof_equalities", r.proof_equality_failure.clone());
            b.check("equivalence", r.equivalence_holds, None);
            b.count("order", atp.loop_().order()).count("atp_order", r.order).count("checked", r.checked);
            b.detail("exhaustive", &r.exhaustive);
        }
        "atp mloop" => {
            want(1)?;
            let atp = atp_input(&inputs[0], p)?;
            let r = m_of_atp(&atp)?;
            b.check("carrier", r.carrier_matches, None);
            b.check("isomorphism", r.isomorphism, None);
            b.expect_eq("s3_center_trivial", r.s3_center_order, 1);
            b.count("atp_order", r.atp_order).count("m_order", r.m_order);
        }
        "atp psaut" => {
            want(1)?;
            let atp = atp_input(&inputs[0], p)?;
            let (list, r) = pseudoautomorphism_group(&atp, p.seed);
            b.check("routes_agree", r.routes_agree, None);
            b.check("index", r.index_matches, Some(json!({ "atp": atp.order(), "psaut": r.order, "loop": atp.loop_().order() })));
            b.check("homomorphism", r.homomorphism, None);
            b.check("closed", r.closed, None);
            b.count("atp_order", atp.order()).count("psaut_order", list.len());
        }
        "atp psi" => {
            want(1)?;
            let atp = atp_input(&inputs[0], p)?;
            let (list, _) = pseudoautomorphism_group(&atp, p.seed);
            let w = WGroup::new(atp.loop_(), list);
            let wr = check_w_group(&w, p.seed);
            b.check("companions", wr.companions_valid, None);
            b.check("closed", wr.closed, None);
            b.witness("associativity", wr.associativity_failure);
            b.witness("automorphisms", wr.automorphism_failure);
            b.witness("s3_relations", wr.s3_relation.clone());
            b.witness("triality", wr.triality_failure);
            let pr = psi_iso(&atp, &w, p.seed);
            b.check("psi_bijective", pr.bijective, None);
            b.witness("psi_multiplicative", pr.multiplicative_failure);
            b.witness("psi_equivariant", pr.equivariance_failure);
            b.count("atp_order", pr.atp_order).count("w_order", pr.w_order);
            b.count("associativity_checked", wr.associativity_checked).count("pairs_checked", pr.pairs_checked);
            b.detail("associativity_exhaustive", &wr.associativity_exhaustive);
            b.detail("pairs_exhaustive", &pr.pairs_exhaustive);
        }
        "hopf check" => {
            want(1)?;
            let h = GroupAlgebra::new(group_input(&inputs[0], p)?);
            let basis = h.basis();
            let r = check_hopf_triality(&h, &basis);
            b.check("triality", r.passed, r.witness.clone().map(|w| json!(w)));
            let gi = check_generator_independence(&h, &basis);
            let disagree: Vec<String> =
                gi.regenerated.iter().filter(|(_, v)| *v != gi.original).map(|(g, _)| format!("{g:?}")).collect();
            b.witness("generator_independence", (!disagree.is_empty()).then_some(disagree));
            b.count("dim", basis.len()).count("checked", r.checked);
        }
        "hopf mh" => {
            want(1)?;
            let g = group_input(&inputs[0], p)?;
            let ml = moufang_from_triality(&g)?;
            let h = GroupAlgebra::new(g);
            let basis = h.basis();
            let mh = mh_subalgebra(&h, &basis);
            let r = mh.report(&basis, p.seed);
            checks(&mut b, "", &r.checks);
            checks(&mut b, "moufang_", &r.moufang.checks);
            checks(&mut b, "", &[mh_matches_mloop(&mh, &ml)]);
            b.expect_eq("dim_is_m_order", r.dim, ml.order());
            b.count("dim", r.dim).count("moufang_elements", r.moufang.elements);
            b.detail("moufang_exhaustive", &r.moufang.exhaustive);
        }
        "hopf multalg" => {
            want(1)?;
            let q = loop_input(&inputs[0], p)?;
            let u = LoopAlgebra::new(q)?;
            let r = check_mult_alg_identities(&u, &u.basis());
            checks(&mut b, "", &r.parts);
            b.count("dim", r.dim);
        }
        "hopf doro-verify" => {
            want(2)?;
            let q = loop_input(&inputs[0], p)?;
            let g = group_input(&inputs[1], p)?;
            let ml = moufang_from_triality(&g)?;
            if ml.order() != q.order() {
                bail!("|Q| = {} but |M(G)| = {}", q.order(), ml.order());
            }
            let u = LoopAlgebra::new(q)?;
            let h = GroupAlgebra::new(g);
            let carrier = ml.carrier.clone();
            let r = verify_doro_target(&u, &u.basis(), &h, &h.basis(), |m: &usize| Lin::basis(h.group().inv(&carrier[*m])));
            checks(&mut b, "", &r.relations);
            checks(&mut b, "", &[r.equivariance, r.coalgebra_morphism, r.phi_in_mh, r.multiplicative, r.injective]);
            b.count("loop_order", ml.order()).count("group_order", h.basis().len());
        }
        "hopf doro-fixtures" => {
            want(0)?;
            for f in bundled_fixtures() {
                let r = f.run();
                b.check(f.name, r.passed() == f.expect_pass, Some(json!({ "expected_pass": f.expect_pass })));
            }
        }
        "cayley check" => {
            want(0)?;
            let [a, bb, c] = p.cayley.clone().unwrap_or_else(default_params);
            let o = build_cayley(a, bb, c)?;
            b.witness("alternative", o.alternative_witness());
            b.witness("composition", o.norm_witness());
            b.witness("malcev_traceless", malcev_witness(&o.traceless_malcev()).map(|w| w.map(|x| x + 1)));
            b.count("dim", o.product().dim());
            b.detail("params", o.params());
        }
        "malcev check" => {
            want(1)?;
            let sc = load_constants(&inputs[0])?;
            b.witness("anticommutative", sc.anticommutativity_witness().map(|(i, j)| [i + 1, j + 1]));
            b.witness("malcev", malcev_witness(&sc).map(|w| w.map(|x| x + 1)));
            b.count("dim", sc.dim());
        }
        "lie triality-check" => {
            want(1)?;
            let g = load_lie(&inputs[0])?;
            b.check("s3_relations", g.s3_relations_hold(), None);
            let r = check_lie_triality(&g);
            b.witness("triality", r.witness.map(|a| a + 1));
            b.check("forms_agree", r.forms_agree, None);
            let e = eigen_one_criterion(&g);
            b.check("eigen_one_inclusion", e.included, Some(json!(e)));
            b.count("dim", g.dim());
        }
        "env triality-check" => {
            want(1)?;
            let g = load_lie(&inputs[0])?;
            let d = p.degree.unwrap_or(2);
            let r = check_ug_triality(&g, d);
            b.check("triality", r.passed, r.witness.clone().map(|w| json!(w)));
            b.count("dim", r.dim).count("degree", d).count("monomials", r.monomials);
        }
        "env action-check" => {
            want(1)?;
            let g = load_lie(&inputs[0])?;
            let d = p.degree.unwrap_or(2);
            let r = check_action_identity(&g, d);
            b.check("action_identity", r.passed, r.witness.clone().map(|w| json!(w)));
            let s = p_span_check(&g, d);
            b.check("p_in_circle_span", s.p_in_circle, None);
            b.check("circle_in_p_span", s.circle_in_p, None);
            b.witness("fixed_vectors_killed", s.fixed_witness.clone());
            b.count("dim", r.dim).count("degree", d).count("monomials", r.monomials);
            b.count("p_dim", s.p_dim).count("e_minus_dim", s.e_minus_dim);
        }
        "env mh" => {
            want(0)?;
            let o = match p.malcev.as_deref().unwrap_or("o0") {
                "o0" => CayleyAlgebra::octonions(),
                "split" => CayleyAlgebra::split_octonions(),
                other => bail!("unknown Malcev algebra {other:?}; expected o0 or split"),
            };
            let d = p.degree.unwrap_or(2);
            let lom = lie_of_malcev(&o)?;
            let mh = mh_envelope(&lom);
            let r = mh.report(d);
            checks(&mut b, "", &r.checks);
            b.witness("nonassociative", r.nonassociative.is_none().then_some("no witness triple found"));
            let rel = check_envelope_relations(&mh, lom.malcev(), d.min(2));
            checks(&mut b, "relations_", &rel.checks);
            b.count("dim_m", r.dim_m).count("dim_lie", r.dim_lie).count("degree", d);
            b.count("ordered_words", r.ordered_words).count("slice_dim", r.slice_dim);
            b.count("relations_slice_dim", rel.slice_dim);
            b.detail("nonassociativity_triple", &r.nonassociative);
        }
        "conv loop" => {
            want(1)?;
            let q = loop_input(&inputs[0], p)?;
            let k = p.points.unwrap_or(2);
            let l = convolution_loop(&GroupLikeCoalgebra::new(k), &q)?;
            loop_report(&mut b, &check_moufang(&l, "Mor(C,FQ)"));
            b.count("points", k).count("loop_order", q.order()).count("order", l.order());
            b.detail("associative", &l.is_associative());
        }
        "conv triality" => {
            want(1)?;
            let q = loop_input(&inputs[0], p)?;
            let k = p.points.unwrap_or(1);
            let r = atpc_triality_checks(&GroupLikeCoalgebra::new(k), &q, p.samples.unwrap_or(1000), p.seed)?;
            checks(&mut b, "", &r.checks);
            b.count("points", k).count("loop_order", r.loop_order).count("samples", r.samples);
            b.count("canonical", r.canonical);
            b.detail("isomorphism_exhaustive", &r.exhaustive);
        }
        other => return Err(anyhow!("unknown check {other:?}")),
    }
    Ok(b.finish(inputs))
}

pub fn default_params() -> [Rational; 3] {
    let m = || Rational::from_integer(-1);
    [m(), m(), m()]
}

fn loop_input(input: &Input, p: &Params) -> Result<FiniteLoop> {
    let q = load_loop(input)?;
    check_order(&input.name, q.order(), p.max_order)?;
    Ok(q)
}

fn group_input(input: &Input, p: &Params) -> Result<triality::gtriality::TrialityGroup> {
    let g = load_group(input)?;
    check_order(&input.name, g.order(), p.max_order)?;
    Ok(g)
}

fn atp_input(input: &Input, p: &Params) -> Result<AtpGroup> {
    let q = loop_input(input, p)?;
    if !is_moufang(&q) {
        bail!("{}: not a Moufang loop", input.name);
    }
    Ok(AtpGroup::new(&q)?)
}

fn loop_report(b: &mut ReportBuilder, r: &LoopReport) {
    for c in &r.checks {
        b.check(&c.name, c.passed, c.witness.as_ref().map(|w| json!(w)));
    }
}

fn checks(b: &mut ReportBuilder, prefix: &str, cs: &[Check]) {
    for c in cs {
        b.check(&format!("{prefix}{}", c.name), c.passed, c.witness.as_ref().map(|w| json!(w)));
    }
}

fn one_based3(w: [usize; 3]) -> [usize; 3] {
    w.map(|x| x + 1)
}

fn one_based_rows(q: &FiniteLoop) -> Vec<Vec<usize>> {
    q.rows().into_iter().map(|r| r.into_iter().map(|v| v + 1).collect()).collect()
}
