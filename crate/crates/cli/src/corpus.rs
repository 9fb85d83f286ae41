//! The bundled corpus and its manifest.

use crate::suite::{Entry, Expect, Manifest};
use anyhow::{Context, Result};
use serde::Serialize;
use std::path::{Path, PathBuf};
use triality::gtriality::corpus::{c4_inversion, s3_wreath};
use triality::gtriality::TrialityGroup;
use triality::loops::generators::{chein_loop, cyclic_group, non_moufang_loop, octonion_unit_loop, symmetric_group};
use triality::loops::format_loop;
use triality::malcev::{affine_line, build_cayley, lie_of_malcev, sl2, wreath, CayleyAlgebra, LieWithTriality};
use triality::qcore::Rational;

/// Seed of the order-5 non-Moufang fixture.
pub const NON_MOUFANG_SEED: u64 = 11;

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serializable") + "\n"
}

fn group_json(g: &TrialityGroup) -> String {
    json(&g.to_json())
}

fn lie_json(g: &LieWithTriality) -> String {
    json(&g.to_json_value())
}

fn entry(check: &str, inputs: &[&str]) -> Entry {
    Entry { check: check.into(), inputs: inputs.iter().map(|s| s.to_string()).collect(), ..Entry::default() }
}

/// The manifest shipped with the corpus: every theorem-level check, plus
/// the broken `C₄` fixture as the single expected failure.
pub fn bundled_manifest() -> Manifest {
    let mut checks = Vec::new();
    for n in 2..=8 {
        checks.push(entry("loop check", &[&format!("c{n}.loop")]));
    }
    for f in ["s3.loop", "chein12.loop", "o16.loop"] {
        checks.push(entry("loop check", &[f]));
        checks.push(entry("loop doro", &[f]));
    }
    checks.push(entry("group check", &["s3_wreath.group.json"]));
    checks.push(Entry { expect: Expect::Fail, ..entry("group check", &["c4_inversion.group.json"]) });
    for c in ["group mloop", "group center", "group embed", "hopf check", "hopf mh"] {
        checks.push(entry(c, &["s3_wreath.group.json"]));
    }
    for c in ["atp compute", "atp mloop", "atp psaut", "atp psi"] {
        checks.push(entry(c, &["chein12.loop"]));
    }
    checks.push(entry("atp psi", &["c4.loop"]));
    checks.push(entry("hopf multalg", &["chein12.loop"]));
    checks.push(entry("hopf multalg", &["o16.loop"]));
    checks.push(entry("hopf doro-fixtures", &[]));
    checks.push(entry("cayley check", &[]));
    checks.push(entry("malcev check", &["o0.malcev.json"]));
    for f in ["ortho_o.lie.json", "wreath_affine.lie.json", "wreath_sl2.lie.json"] {
        checks.push(entry("lie triality-check", &[f]));
    }
    checks.push(Entry { degree: Some(3), ..entry("env triality-check", &["wreath_affine.lie.json"]) });
    checks.push(Entry { degree: Some(2), ..entry("env triality-check", &["wreath_sl2.lie.json"]) });
    checks.push(Entry { degree: Some(2), ..entry("env action-check", &["wreath_affine.lie.json"]) });
    checks.push(Entry { degree: Some(2), malcev: Some("o0".into()), ..entry("env mh", &[]) });
    checks.push(Entry { points: Some(2), ..entry("conv loop", &["chein12.loop"]) });
    checks.push(Entry { points: Some(1), samples: Some(1000), ..entry("conv triality", &["chein12.loop"]) });
    checks.push(Entry { points: Some(2), samples: Some(1000), ..entry("conv triality", &["chein12.loop"]) });
    Manifest { checks }
}

/// Every corpus file as `(name, contents)`, in a fixed order.
pub fn corpus_files() -> Result<Vec<(String, String)>> {
    let mut files = Vec::new();
    for n in 2..=8 {
        files.push((format!("c{n}.loop"), format_loop(&cyclic_group(n))));
    }
    let s3 = symmetric_group(3);
    files.push(("s3.loop".into(), format_loop(&s3)));
    files.push(("chein12.loop".into(), format_loop(&chein_loop(&s3)?)));
    files.push(("o16.loop".into(), format_loop(&octonion_unit_loop())));
    files.push(("nonmoufang5.loop".into(), format_loop(&non_moufang_loop(5, NON_MOUFANG_SEED)?)));
    files.push(("s3_wreath.group.json".into(), group_json(&s3_wreath())));
    files.push(("c4_inversion.group.json".into(), group_json(&c4_inversion())));
    let m = || Rational::from_integer(-1);
    let o = build_cayley(m(), m(), m())?;
    files.push(("cayley_m1m1m1.sc.json".into(), json(&o.product().to_json_value())));
    files.push(("o0.malcev.json".into(), json(&o.traceless_malcev().to_json_value())));
    let lom = lie_of_malcev(&CayleyAlgebra::octonions())?;
    files.push(("ortho_o.lie.json".into(), lie_json(lom.lie())));
    files.push(("wreath_affine.lie.json".into(), lie_json(&wreath(&affine_line()))));
    files.push(("wreath_sl2.lie.json".into(), lie_json(&wreath(&sl2()))));
    files.push(("manifest.json".into(), serde_json::to_string_pretty(&bundled_manifest())? + "\n"));
    Ok(files)
}

pub fn gen_corpus(outdir: &Path) -> Result<Vec<PathBuf>> {
    std::fs::create_dir_all(outdir).with_context(|| format!("cannot create {}", outdir.display()))?;
    let mut written = Vec::new();
    for (name, text) in corpus_files()? {
        let path = outdir.join(name);
        std::fs::write(&path, text).with_context(|| format!("cannot write {}", path.display()))?;
        written.push(path);
    }
    Ok(written)
}
