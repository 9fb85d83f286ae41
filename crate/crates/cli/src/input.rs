//! Reading corpus files and recognising their formats.

use crate::report::Input;
use anyhow::{anyhow, bail, Context, Result};
use serde_json::Value;
use std::path::{Path, PathBuf};
use triality::gtriality::TrialityGroup;
use triality::loops::{parse_loop, FiniteLoop};
use triality::malcev::{LieWithTriality, StructureConstants};

pub const CORPUS_ENV: &str = "TRIALITY_CORPUS";

/// `path` as given, or relative to `$TRIALITY_CORPUS` when it does not exist.
pub fn resolve(path: &Path) -> PathBuf {
    if path.exists() || path.is_absolute() {
        return path.to_path_buf();
    }
    match std::env::var_os(CORPUS_ENV) {
        Some(dir) if Path::new(&dir).join(path).exists() => Path::new(&dir).join(path),
        _ => path.to_path_buf(),
    }
}

pub fn read(path: &Path) -> Result<Input> {
    let full = resolve(path);
    let text = std::fs::read_to_string(&full).with_context(|| format!("cannot read {}", full.display()))?;
    Ok(Input { name: path.display().to_string(), text })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Loop,
    TrialityGroup,
    StructureConstants,
    LieTriality,
    Manifest,
}

impl Format {
    pub fn name(self) -> &'static str {
        match self {
            Format::Loop => "FiniteLoop",
            Format::TrialityGroup => "TrialityGroup",
            Format::StructureConstants => "StructureConstants",
            Format::LieTriality => "LieWithTriality",
            Format::Manifest => "Manifest",
        }
    }
}

fn json_value(input: &Input) -> Result<Value> {
    serde_json::from_str(&input.text)
        .map_err(|e| anyhow!("{}: JSON error at line {}, column {}: {e}", input.name, e.line(), e.column()))
}

/// Classifies a file by its first non-blank character and, for JSON, its
/// keys.
pub fn detect(input: &Input) -> Result<Format> {
    let trimmed = input.text.trim_start();
    if !trimmed.starts_with('{') {
        return Ok(Format::Loop);
    }
    let v = json_value(input)?;
    let has = |k: &str| v.get(k).is_some();
    Ok(if has("checks") {
        Format::Manifest
    } else if has("order") && has("table") {
        Format::TrialityGroup
    } else if has("dim") && has("rho") {
        Format::LieTriality
    } else if has("dim") && (has("bracket") || has("product")) {
        Format::StructureConstants
    } else {
        bail!("{}: unrecognised JSON document at line 1", input.name)
    })
}

/// First malformed line of a loop file, 1-based, with the reason.
pub fn loop_syntax_error(text: &str) -> Option<(usize, String)> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| {
        let t = l.trim();
        !t.is_empty() && !t.starts_with('#')
    });
    let Some((hl, header)) = lines.next() else {
        return Some((1, "empty input".into()));
    };
    let n: usize = match header.trim().parse() {
        Ok(n) if n > 0 => n,
        _ => return Some((hl + 1, format!("expected the order, found {:?}", header.trim()))),
    };
    let mut rows = 0;
    for (i, line) in lines {
        rows += 1;
        if rows > n {
            return Some((i + 1, format!("more than {n} rows")));
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if let Some(t) = toks.iter().find(|t| !matches!(t.parse::<usize>(), Ok(v) if (1..=n).contains(&v))) {
            return Some((i + 1, format!("entry {t:?} is not in 1..={n}")));
        }
        if toks.len() != n {
            return Some((i + 1, format!("{} entries, expected {n}", toks.len())));
        }
    }
    (rows < n).then(|| (text.lines().count().max(1), format!("expected {n} rows, found {rows}")))
}

pub fn load_loop(input: &Input) -> Result<FiniteLoop> {
    if let Some((line, msg)) = loop_syntax_error(&input.text) {
        bail!("{}: line {line}: {msg}", input.name);
    }
    parse_loop(&input.text).map_err(|e| anyhow!("{}: {e}", input.name))
}

pub fn load_group(input: &Input) -> Result<TrialityGroup> {
    json_value(input)?;
    TrialityGroup::parse(&input.text).map_err(|e| anyhow!("{}: {e}", input.name))
}

pub fn load_constants(input: &Input) -> Result<StructureConstants> {
    json_value(input)?;
    StructureConstants::from_json(&input.text).map_err(|e| anyhow!("{}: {e}", input.name))
}

pub fn load_lie(input: &Input) -> Result<LieWithTriality> {
    json_value(input)?;
    LieWithTriality::from_json(&input.text).map_err(|e| anyhow!("{}: {e}", input.name))
}

/// Rejects structures above `--max-order`.
pub fn check_order(name: &str, order: usize, max: Option<usize>) -> Result<()> {
    match max {
        Some(m) if order > m => bail!("{name}: order {order} exceeds --max-order {m}"),
        _ => Ok(()),
    }
}
