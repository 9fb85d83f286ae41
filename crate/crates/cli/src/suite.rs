//! Manifest-driven batches of checks.

use crate::checks::{run_check, Params, CHECKS};
use crate::input::{self, CORPUS_ENV};
use crate::report::{Report, Status};
use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};
use std::path::{Path, PathBuf};
use triality::qcore::Rational;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Expect {
    #[default]
    Pass,
    Fail,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Entry {
    pub check: String,
    #[serde(default)]
    pub inputs: Vec<String>,
    #[serde(default)]
    pub expect: Expect,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub malcev: Option<String>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    pub checks: Vec<Entry>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Pass,
    ExpectedFail,
    UnexpectedFail,
    UnexpectedPass,
    Error,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SummaryLine {
    pub index: usize,
    pub check: String,
    pub inputs: Vec<String>,
    pub expect: Expect,
    pub status: Status,
    pub outcome: Outcome,
    pub report: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Summary {
    pub manifest: String,
    pub seed: u64,
    pub total: usize,
    pub passed: usize,
    pub expected_failures: usize,
    pub unexpected: usize,
    pub errors: usize,
    pub entries: Vec<SummaryLine>,
}

impl Summary {
    /// 0 when every entry met its expectation, 2 on any error, else 1.
    pub fn exit_code(&self) -> i32 {
        if self.errors > 0 {
            2
        } else if self.unexpected > 0 {
            1
        } else {
            0
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for e in &self.entries {
            let outcome = serde_json::to_value(e.outcome).expect("outcome");
            s.push_str(&format!("{:>3} {:<16} {} {}\n", e.index, outcome.as_str().unwrap_or(""), e.check, e.inputs.join(" ")));
        }
        s.push_str(&format!(
            "{} checks: {} pass, {} expected-fail, {} unexpected, {} error\n",
            self.total, self.passed, self.expected_failures, self.unexpected, self.errors
        ));
        s
    }
}

pub fn parse_params(text: &str) -> Result<[Rational; 3]> {
    let v: Vec<Rational> =
        text.split(',').map(|t| t.trim().parse::<Rational>()).collect::<Result<_, _>>().context("bad --params")?;
    match <[Rational; 3]>::try_from(v) {
        Ok(a) => Ok(a),
        Err(v) => bail!("--params takes three rationals, got {}", v.len()),
    }
}

fn locate(base: &Path, name: &str) -> PathBuf {
    let p = Path::new(name);
    if p.is_absolute() {
        return p.to_path_buf();
    }
    let local = base.join(p);
    if local.exists() {
        local
    } else {
        input::resolve(p)
    }
}

fn slug(s: &str) -> String {
    s.chars().map(|c| if c.is_ascii_alphanumeric() { c } else { '-' }).collect()
}

/// Runs every manifest entry in order. With `outdir`, writes one JSON
/// report per entry and `summary.json`.
pub fn run_suite(manifest_path: &Path, outdir: Option<&Path>, seed: u64) -> Result<(Summary, Vec<Report>)> {
    let full = input::resolve(manifest_path);
    let text = std::fs::read_to_string(&full).with_context(|| format!("cannot read {}", full.display()))?;
    let manifest: Manifest = serde_json::from_str(&text)
        .with_context(|| format!("{}: manifest error at line {}", manifest_path.display(), line_of(&text)))?;
    if let Some(e) = manifest.checks.iter().find(|e| !CHECKS.contains(&e.check.as_str())) {
        bail!("unknown check name {:?}", e.check);
    }
    let base = full.parent().map(Path::to_path_buf).unwrap_or_default();
    if let Some(dir) = outdir {
        std::fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))?;
    }

    let mut reports = Vec::new();
    let mut entries = Vec::new();
    for (i, e) in manifest.checks.iter().enumerate() {
        let seed = e.seed.unwrap_or(seed);
        let report = run_entry(&base, e, seed).unwrap_or_else(|err| Report::error(&e.check, seed, e.inputs.clone(), &format!("{err:#}")));
        let outcome = match (report.status, e.expect) {
            (Status::Error, _) => Outcome::Error,
            (Status::Pass, Expect::Pass) => Outcome::Pass,
            (Status::Fail, Expect::Fail) => Outcome::ExpectedFail,
            (Status::Fail, Expect::Pass) => Outcome::UnexpectedFail,
            (Status::Pass, Expect::Fail) => Outcome::UnexpectedPass,
        };
        let file = format!("{:03}-{}.json", i + 1, slug(&e.check));
        if let Some(dir) = outdir {
            let path = dir.join(&file);
            std::fs::write(&path, serde_json::to_string_pretty(&report)? + "\n")
                .with_context(|| format!("cannot write {}", path.display()))?;
        }
        entries.push(SummaryLine {
            index: i + 1,
            check: e.check.clone(),
            inputs: e.inputs.clone(),
            expect: e.expect,
            status: report.status,
            outcome,
            report: file,
        });
        reports.push(report);
    }
    let count = |o: Outcome| entries.iter().filter(|e| e.outcome == o).count();
    let summary = Summary {
        manifest: manifest_path.display().to_string(),
        seed,
        total: entries.len(),
        passed: count(Outcome::Pass),
        expected_failures: count(Outcome::ExpectedFail),
        unexpected: count(Outcome::UnexpectedFail) + count(Outcome::UnexpectedPass),
        errors: count(Outcome::Error),
        entries,
    };
    if let Some(dir) = outdir {
        std::fs::write(dir.join("summary.json"), serde_json::to_string_pretty(&summary)? + "\n")?;
    }
    Ok((summary, reports))
}

fn run_entry(base: &Path, e: &Entry, seed: u64) -> Result<Report> {
    let inputs = e
        .inputs
        .iter()
        .map(|name| {
            let path = locate(base, name);
            let text = std::fs::read_to_string(&path).with_context(|| {
                format!("cannot read {name} (looked in {} and ${CORPUS_ENV})", base.display())
            })?;
            Ok(crate::report::Input { name: name.clone(), text })
        })
        .collect::<Result<Vec<_>>>()?;
    let params = Params {
        seed,
        degree: e.degree,
        samples: e.samples,
        max_order: None,
        points: e.points,
        cayley: e.params.as_deref().map(parse_params).transpose()?,
        malcev: e.malcev.clone(),
    };
    run_check(&e.check, &inputs, &params)
}

fn line_of(text: &str) -> usize {
    serde_json::from_str::<Manifest>(text).err().map_or(0, |e| e.line())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn params_parse() {
        let p = parse_params("-1, 1/2,3").unwrap();
        assert_eq!(p[1], Rational::new(1, 2));
        assert!(parse_params("1,2").is_err());
        assert!(parse_params("1,x,2").is_err());
    }

    #[test]
    fn empty_manifest() {
        let dir = std::env::temp_dir().join(format!("triality-suite-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let m = dir.join("m.json");
        std::fs::write(&m, r#"{"checks": []}"#).unwrap();
        let (s, r) = run_suite(&m, None, 0).unwrap();
        assert_eq!((s.total, s.exit_code()), (0, 0));
        assert!(r.is_empty());
        std::fs::write(&m, r#"{"checks": [{"check": "loop frobnicate"}]}"#).unwrap();
        assert!(run_suite(&m, None, 0).is_err());
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
