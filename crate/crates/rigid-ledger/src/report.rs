use std::fmt::Write as _;

use lie_rootsys::format_vec;

use crate::verify::CheckReport;

/// Output layout for [`emit_report`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    /// One row per case with the computable table columns.
    Table,
    /// Every check with its exact values.
    Detail,
}

fn verdict(passed: bool) -> &'static str {
    if passed {
        "PASS"
    } else {
        "FAIL"
    }
}

/// Renders reports in input order. The output depends only on the reports.
pub fn emit_report(reports: &[CheckReport], format: Format) -> String {
    match format {
        Format::Table => table(reports),
        Format::Detail => detail(reports),
    }
}

fn table(reports: &[CheckReport]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<6} {:<12} {:<4} {:>7} {:>7}  {:<40} status",
        "system", "label", "Γ", "|Φ⁺(0)|", "|Φ⁺(1)|", "2ρ_e"
    );
    for r in reports {
        let _ = writeln!(
            out,
            "{:<6} {:<12} {:<4} {:>7} {:>7}  {:<40} {}",
            r.system.to_string(),
            r.label,
            r.component_group,
            r.counts.0,
            r.counts.1,
            format_vec(&r.two_rho_e),
            verdict(r.passed())
        );
    }
    out
}

fn detail(reports: &[CheckReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let _ = writeln!(out, "[case {}] {}", r.case_id, verdict(r.passed()));
        let width = r.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &r.checks {
            let _ = writeln!(
                out,
                "  {:<8} {:<width$}  {}",
                c.status.to_string(),
                c.name,
                c.detail
            );
        }
        for t in &r.typo_flags {
            let _ = writeln!(out, "  note     {t}");
        }
    }
    out
}
