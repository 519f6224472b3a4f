//! Plain-text rendering of reports.

use std::fmt::Write;

use fano_hodge::VerificationReport;

fn timing(r: &VerificationReport, timings: bool) -> String {
    if timings {
        format!(" ({:.3} ms)", r.elapsed_ms())
    } else {
        String::new()
    }
}

/// Full report: status line, both sides, effectivity and notes.
pub fn report(r: &VerificationReport, timings: bool) -> String {
    let mut s = format!("{}: {}{}\n", r.label(), r.status(), timing(r, timings));
    let _ = writeln!(s, "  lhs: {}", r.lhs());
    let _ = writeln!(s, "  rhs: {}", r.rhs());
    if !r.effectivity().is_empty() {
        let checks: Vec<String> = r
            .effectivity()
            .iter()
            .map(|c| format!("M_{} {}", c.index, if c.effective { "yes" } else { "no" }))
            .collect();
        let _ = writeln!(s, "  effective: {}", checks.join(", "));
    }
    for note in r.notes() {
        let _ = writeln!(s, "  note: {note}");
    }
    s
}

/// One status line per report, then a count.
pub fn summary(reports: &[VerificationReport], timings: bool) -> String {
    let mut s = String::new();
    for r in reports {
        let _ = writeln!(s, "{:<8} {}{}", r.status(), r.label(), timing(r, timings));
    }
    let ok = reports.iter().filter(|r| r.is_verified()).count();
    let _ = writeln!(s, "{ok} of {} checks verified", reports.len());
    s
}
