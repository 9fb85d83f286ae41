use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;
use triality::autotopy::{
    check_atp_triality, check_w_group, m_of_atp, pseudoautomorphism_group, psi_iso, AtpGroup, WGroup,
};
use triality::conv::{atpc_triality_checks, convolution_loop, GroupLikeCoalgebra};
use triality::envelope::{check_action_identity, check_envelope_relations, check_ug_triality, mh_envelope, p_span_check};
use triality::gtriality::corpus::{c4_inversion, s3_wreath};
use triality::gtriality::{
    check_triality, embed_into_autotopy, moufang_from_triality, moufang_from_triality_scan, s3_relation_witness,
    triality_witness, ScanOrder, TrialityGroupLike,
};
use triality::hopf::{
    bundled_fixtures, check_generator_independence, check_hopf_triality, check_mult_alg_identities, mh_matches_mloop,
    mh_subalgebra, GroupAlgebra, LoopAlgebra,
};
use triality::loops::generators::{
    chein_loop, cyclic_group, klein_four, non_moufang_loop, octonion_unit_loop, symmetric_group,
};
use triality::loops::{check_moufang, is_moufang, verify_doro_relations, FiniteLoop};
use triality::malcev::{
    affine_line, check_lie_triality, eigen_one_criterion, lie_of_malcev, ortho_lie, sl2, trivial_triality, wreath,
    CayleyAlgebra, LieWithTriality, StructureConstants,
};
use triality::qcore::{QMatrix, Rational};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn chein() -> FiniteLoop {
    chein_loop(&symmetric_group(3)).expect("Chein loop of S3")
}

fn moufang_corpus() -> Vec<(String, FiniteLoop)> {
    let mut v: Vec<(String, FiniteLoop)> = (2..=8).map(|n| (format!("C{n}"), cyclic_group(n))).collect();
    v.push(("S3".into(), symmetric_group(3)));
    v.push(("V4".into(), klein_four()));
    v.push(("Chein-12".into(), chein()));
    v.push(("O16".into(), octonion_unit_loop()));
    v
}

fn doro() -> Outcome {
    let start = Instant::now();
    let corpus = moufang_corpus();
    for (name, q) in &corpus {
        let r = verify_doro_relations(q, name).map_err(|e| e.to_string())?;
        ensure(r.checks.len() == 12, format!("{name}: {} relation families", r.checks.len()))?;
        ensure(r.passed(), format!("{name}: {:?}", r.first_failure()))?;
    }
    let t = start.elapsed();
    ensure(t.as_secs_f64() < 10.0, format!("took {t:?}"))?;
    Ok(format!("{} loops, {t:.2?}", corpus.len()))
}

fn moufang_equivalence() -> Outcome {
    let mut loops = moufang_corpus();
    loops.push(("nonmoufang5".into(), non_moufang_loop(5, 11).map_err(|e| e.to_string())?));
    for (name, q) in &loops {
        let r = check_moufang(q, name);
        let verdicts: Vec<bool> = r.checks.iter().map(|c| c.passed).collect();
        ensure(verdicts.len() == 3 && verdicts.iter().all(|&v| v == verdicts[0]), format!("{name}: {verdicts:?}"))?;
        ensure(r.checks.iter().all(|c| c.passed || c.witness.is_some()), format!("{name}: failure without witness"))?;
        ensure(verdicts[0] == (name != "nonmoufang5"), format!("{name}: verdict {}", verdicts[0]))?;
    }
    for (name, q) in &loops[loops.len() - 3..loops.len() - 1] {
        let w = q.associativity_witness().ok_or(format!("{name} is associative"))?;
        let [x, y, z] = w;
        ensure(q.mul(q.mul(x, y), z) != q.mul(x, q.mul(y, z)), format!("{name}: bad witness {w:?}"))?;
    }
    Ok(format!("{} loops", loops.len()))
}

fn group_triality() -> Outcome {
    let g = s3_wreath();
    ensure(check_triality(&g) && s3_relation_witness(&g, &g.elements()).is_none(), "wreath group fails")?;
    let c4 = c4_inversion();
    let x = triality_witness(&c4).ok_or("C4 with inversion passes")?;
    let ord = c4.group().element_order(x);
    ensure(ord == 4, format!("witness of order {ord}"))?;
    let ml = moufang_from_triality(&g).map_err(|e| e.to_string())?;
    let rev = moufang_from_triality_scan(&g, ScanOrder::Reverse).map_err(|e| e.to_string())?;
    ensure(ml.order() == 6 && is_moufang(&ml.table), format!("M(G) of order {}", ml.order()))?;
    ensure(ml.table.find_isomorphism(&symmetric_group(3)).is_some(), "M(G) not isomorphic to S3")?;
    ensure(rev.carrier == ml.carrier && rev.table == ml.table, "scan order changes M(G)")?;
    Ok(format!("|G| = {}, |M(G)| = 6, C4 witness order 4", g.order()))
}

fn autotopy_suite() -> Outcome {
    let q = chein();
    let atp = AtpGroup::new(&q).map_err(|e| e.to_string())?;
    let r = check_atp_triality(&atp, 0);
    ensure(r.passed(), format!("{r:?}"))?;
    let m = m_of_atp(&atp).map_err(|e| e.to_string())?;
    ensure(m.passed() && m.m_order == 12, format!("{m:?}"))?;
    let (ps, pr) = pseudoautomorphism_group(&atp, 0);
    ensure(pr.passed() && atp.order() == ps.len() * 12, format!("{pr:?}"))?;
    let e = embed_into_autotopy(&s3_wreath()).map_err(|e| e.to_string())?;
    ensure(e.passed() && e.kernel_is_center(), format!("kernel {} vs center {}", e.kernel.len(), e.center.len()))?;
    Ok(format!("|Atp| = {}, |PsAut| = {}, kernel = center of order {}", atp.order(), ps.len(), e.center.len()))
}

fn hall() -> Outcome {
    let mut out = Vec::new();
    for (name, q, exhaustive) in [("C4", cyclic_group(4), true), ("Chein-12", chein(), false)] {
        let atp = AtpGroup::new(&q).map_err(|e| e.to_string())?;
        let (list, _) = pseudoautomorphism_group(&atp, 0);
        let w = WGroup::new(&q, list);
        let wr = check_w_group(&w, 0);
        ensure(wr.passed(), format!("{name}: {wr:?}"))?;
        if exhaustive {
            ensure(wr.associativity_exhaustive, format!("{name}: associativity sampled"))?;
        } else {
            ensure(wr.associativity_checked >= 10_000, format!("{name}: {} triples", wr.associativity_checked))?;
        }
        let pr = psi_iso(&atp, &w, 0);
        ensure(pr.passed() && pr.atp_order == pr.w_order, format!("{name}: {pr:?}"))?;
        out.push(format!("{name} |W| = {} ({} triples)", pr.w_order, wr.associativity_checked));
    }
    Ok(out.join(", "))
}

fn hopf_group_algebra() -> Outcome {
    let g = s3_wreath();
    let ml = moufang_from_triality(&g).map_err(|e| e.to_string())?;
    let h = GroupAlgebra::new(g);
    let basis = h.basis();
    let r = check_hopf_triality(&h, &basis);
    ensure(r.passed && r.checked == basis.len(), format!("{r:?}"))?;
    let mh = mh_subalgebra(&h, &basis);
    let rep = mh.report(&basis, 0);
    ensure(rep.dim == 6 && rep.passed(), format!("{rep:?}"))?;
    ensure(rep.check("formulas_agree").is_some_and(|c| c.passed), "star formulas disagree")?;
    for name in ["left_moufang_hopf", "middle_moufang_hopf", "right_moufang_hopf"] {
        ensure(rep.check(name).is_some_and(|c| c.passed), name)?;
    }
    let m = mh_matches_mloop(&mh, &ml);
    ensure(m.passed, format!("{m:?}"))?;
    let gi = check_generator_independence(&h, &basis);
    ensure(gi.original && gi.consistent() && gi.regenerated.len() == 3, format!("{gi:?}"))?;
    Ok(format!("dim F[G] = {}, dim MH = {}", basis.len(), rep.dim))
}

fn multiplication_algebra() -> Outcome {
    for (name, q) in [("Chein-12", chein()), ("O16", octonion_unit_loop())] {
        let u = LoopAlgebra::new(q).map_err(|e| e.to_string())?;
        let r = check_mult_alg_identities(&u, &u.basis());
        ensure(r.passed() && r.parts.len() == 5, format!("{name}: {r:?}"))?;
    }
    let fixtures = bundled_fixtures();
    for f in &fixtures {
        ensure(f.run().passed() == f.expect_pass, format!("fixture {}", f.name))?;
    }
    ensure(fixtures.iter().filter(|f| !f.expect_pass).count() == 1, "expected one corrupted fixture")?;
    Ok(format!("F[Chein-12], F[O16], {} fixtures", fixtures.len()))
}

fn sign_line() -> LieWithTriality {
    let one = QMatrix::identity(1);
    LieWithTriality::unchecked(StructureConstants::zero(1, true), one.clone(), one.scale(&-Rational::one())).unwrap()
}

fn octonion_example() -> Outcome {
    let o = CayleyAlgebra::octonions();
    let g = ortho_lie(&o).map_err(|e| e.to_string())?;
    ensure(g.der().len() == 14 && g.dim() == 28, format!("dims {} and {}", g.der().len(), g.dim()))?;
    let lom = lie_of_malcev(&o).map_err(|e| e.to_string())?;
    let rep = lom.report();
    ensure(rep.closure_is_ortho, "L, R do not generate o(O, n)")?;
    ensure(rep.ortho.passed(), format!("{:?}", rep.ortho))?;
    let lie = lom.lie();
    let t = check_lie_triality(lie);
    ensure(t.holds && t.forms_agree, format!("{t:?}"))?;

    let mut broken_sigma = lie.sigma().clone();
    broken_sigma[(0, 0)] = -Rational::one();
    let broken = LieWithTriality::unchecked(lie.bracket().clone(), lie.rho().clone(), broken_sigma).unwrap();
    let corpus = [
        ("ortho", lie.clone(), true),
        ("wreath affine", wreath(&affine_line()), true),
        ("wreath sl2", wreath(&sl2()), true),
        ("trivial sl2", trivial_triality(&sl2()), true),
        ("sign line", sign_line(), false),
        ("broken sigma", broken, false),
    ];
    for (name, l, expect) in &corpus {
        let holds = check_lie_triality(l).holds;
        let included = eigen_one_criterion(l).included;
        ensure(holds == included && holds == *expect, format!("{name}: triality {holds}, inclusion {included}"))?;
    }

    let sc = o.product();
    let (zeta, eta) = g.companions().map_err(|e| e.to_string())?;
    let e: Vec<Vec<Rational>> = (0..8).map(|i| sc.basis_vector(i)).collect();
    for k in 0..g.dim() {
        let d1 = g.operator(k);
        let d2 = g.from_coordinates(&zeta.column(k));
        let d3 = g.from_coordinates(&eta.column(k));
        for x in &e {
            for y in &e {
                let lhs = d1.mul_vec(&sc.mul(x, y));
                let a = sc.mul(&d2.mul_vec(x), y);
                let b = sc.mul(x, &d3.mul_vec(y));
                let rhs: Vec<Rational> = a.iter().zip(&b).map(|(p, q)| p + q).collect();
                ensure(lhs == rhs, format!("companion identity fails for basis operator {k}"))?;
            }
        }
    }
    Ok(format!("dim Der = 14, dim o = 28, {} triality algebras, 64 pairs x {} operators", corpus.len(), g.dim()))
}

fn malcev_relations() -> Outcome {
    let lom = lie_of_malcev(&CayleyAlgebra::octonions()).map_err(|e| e.to_string())?;
    let r = lom.report();
    ensure(r.relations_hold(), "operator relations fail")?;
    ensure(r.sigma_lambda && r.rho_lambda, "images of lambda fail")?;
    ensure(r.pair_matches, "eta zeta pair mismatch")?;
    ensure(r.dim_lie_minus == 7 && r.t_to_a_iso, format!("dim Lie_- = {}", r.dim_lie_minus))?;
    ensure(r.passed(), format!("{r:?}"))?;
    Ok(format!("dim Lie = {}, dim Lie_- = {}", r.dim_lie, r.dim_lie_minus))
}

fn envelope_triality() -> Outcome {
    let wr = wreath(&affine_line());
    let lom = lie_of_malcev(&CayleyAlgebra::octonions()).map_err(|e| e.to_string())?;
    let mut out = Vec::new();
    for (name, g, d) in [("wreath", &wr, 3), ("ortho", lom.lie(), 2)] {
        let start = Instant::now();
        let u = check_ug_triality(g, d);
        ensure(u.passed, format!("{name}: {:?}", u.witness))?;
        let a = check_action_identity(g, d);
        ensure(a.passed, format!("{name}: action {:?}", a.witness))?;
        let s = p_span_check(g, 2);
        ensure(s.passed(), format!("{name}: P span {s:?}"))?;
        let t = start.elapsed();
        ensure(t.as_secs() < 600, format!("{name}: took {t:?}"))?;
        out.push(format!("{name} dim {} deg {d}: {} monomials, {t:.2?}", g.dim(), u.monomials));
    }
    Ok(out.join(", "))
}

fn malcev_envelope() -> Outcome {
    let lom = lie_of_malcev(&CayleyAlgebra::octonions()).map_err(|e| e.to_string())?;
    let mh = mh_envelope(&lom);
    let r = mh.report(3);
    for name in ["bracket", "aux1", "independent"] {
        ensure(r.check(name).is_some_and(|c| c.passed), format!("{name}: {:?}", r.check(name)))?;
    }
    ensure(r.nonassociative.is_some(), "no nonassociative triple")?;
    ensure(r.passed(), format!("{:?}", r.checks))?;
    let rel = check_envelope_relations(&mh, lom.malcev(), 2);
    ensure(rel.passed(), format!("{:?}", rel.checks))?;
    Ok(format!("{} ordered words of degree <= 3, relations on a slice of dim {}", r.ordered_words, rel.slice_dim))
}

fn convolution() -> Outcome {
    let q = chein();
    let l = convolution_loop(&GroupLikeCoalgebra::new(2), &q).map_err(|e| e.to_string())?;
    ensure(l.order() == 144 && is_moufang(&l), format!("Mor of order {}", l.order()))?;
    let two = atpc_triality_checks(&GroupLikeCoalgebra::new(2), &q, 1000, 0).map_err(|e| e.to_string())?;
    ensure(two.passed() && two.samples == 1000, format!("{:?}", two.checks.iter().find(|c| !c.passed)))?;
    let one = atpc_triality_checks(&GroupLikeCoalgebra::new(1), &q, 1000, 0).map_err(|e| e.to_string())?;
    ensure(one.passed() && one.exhaustive, format!("{:?}", one.checks.iter().find(|c| !c.passed)))?;
    Ok(format!("|Mor| = 144, {} canonical + {} products", two.canonical, two.samples))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("doro relations on Moufang loops", doro),
        ("Moufang identities agree", moufang_equivalence),
        ("group triality and M(G)", group_triality),
        ("autotopy group of Chein-12", autotopy_suite),
        ("psi: Atp(Q) -> W(Q)", hall),
        ("Hopf triality on F[G]", hopf_group_algebra),
        ("multiplication algebra identities", multiplication_algebra),
        ("octonion triality on o(O, n)", octonion_example),
        ("Malcev operator relations", malcev_relations),
        ("triality on U(g)", envelope_triality),
        ("Moufang-Hopf envelope", malcev_envelope),
        ("convolution loop and Atp_C", convolution),
    ];
    let total = Instant::now();
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let t = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} [{t:.2?}]", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} [{t:.2?}]", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass in {:.2?}", criteria.len() - failed, criteria.len(), total.elapsed());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
