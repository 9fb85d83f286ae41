use crate::input::{detect, load_constants, load_group, load_lie, load_loop, Format};
use crate::report::{Input, Report, ReportBuilder};
use crate::suite::Manifest;
use anyhow::Result;
use triality::loops::is_moufang;

/// Type, size and applicable checks of a corpus file.
pub fn describe(input: &Input) -> Result<(String, Report)> {
    let format = detect(input)?;
    let mut b = ReportBuilder::new("describe", 0);
    let (size, checks): (String, Vec<&str>) = match format {
        Format::Loop => {
            let q = load_loop(input)?;
            b.count("order", q.order());
            let checks = if is_moufang(&q) { vec!["moufang", "doro", "atp", "multalg", "conv"] } else { vec!["moufang"] };
            (format!("order {}", q.order()), checks)
        }
        Format::TrialityGroup => {
            let g = load_group(input)?;
            b.count("order", g.order());
            (format!("order {}", g.order()), vec!["triality", "mloop", "center", "embed", "hopf", "mh"])
        }
        Format::StructureConstants => {
            let sc = load_constants(input)?;
            b.count("dim", sc.dim());
            let checks = if sc.is_anticommutative() { vec!["malcev"] } else { vec![] };
            (format!("dim {}", sc.dim()), checks)
        }
        Format::LieTriality => {
            let g = load_lie(input)?;
            b.count("dim", g.dim());
            (format!("dim {}", g.dim()), vec!["triality", "env-triality", "env-action"])
        }
        Format::Manifest => {
            let m: Manifest = serde_json::from_str(&input.text)
                .map_err(|e| anyhow::anyhow!("{}: manifest error at line {}: {e}", input.name, e.line()))?;
            b.count("checks", m.checks.len());
            (format!("{} entries", m.checks.len()), vec!["suite"])
        }
    };
    b.detail("format", &format.name()).detail("applicable", &checks);
    let line = if checks.is_empty() {
        format!("{}, {size}", format.name())
    } else {
        format!("{}, {size}, checks: {}", format.name(), checks.join(", "))
    };
    Ok((line, b.finish(std::slice::from_ref(input))))
}
