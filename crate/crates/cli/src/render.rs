//! Plain-text table renderings of the CLI reports.  Output is fully
//! deterministic: identical inputs produce byte-identical text.

use crate::{
    fmt_kv, BoundsOutput, ClassifyOutput, CodeOutput, OrbitsReport, SearchOutput, SplittingReport,
    WedderburnOutput,
};
use ecid::codes::{DimMethod, DistanceOutcome};
use ecid::group::Group;
use std::fmt::Write as _;

const MAX_LISTED_ORBITS: usize = 30;
const MAX_LISTED_ENTRIES: usize = 200;

fn header(out: &mut String, title: &str) {
    let _ = writeln!(out, "{title}");
    let _ = writeln!(out, "{}", "-".repeat(title.len()));
}

pub fn orbits_table(report: &OrbitsReport, group: &Group) -> String {
    let mut out = String::new();
    header(&mut out, &format!("q-orbits of a group of order {} over {}", report.group.order, report.field));
    fmt_kv(&mut out, "exponent", report.group.exponent);
    fmt_kv(
        &mut out,
        "witness w",
        format!("{} (index {})", report.witness_label, report.witness),
    );
    fmt_kv(&mut out, "t_w", report.t_w);
    fmt_kv(&mut out, "l = lcm of all t_g", report.l);
    fmt_kv(&mut out, "orbit count", report.orbit_count);
    fmt_kv(&mut out, "associativity", &report.group.associativity_check);
    let _ = writeln!(out);
    let _ = writeln!(out, "{:>5}  {:>5}  {:<12}  members", "orbit", "size", "smallest");
    for (i, orbit) in report.orbits.iter().take(MAX_LISTED_ORBITS).enumerate() {
        let members: Vec<&str> = orbit.iter().map(|&m| group.label(m)).collect();
        let _ = writeln!(
            out,
            "{:>5}  {:>5}  {:<12}  {}",
            i,
            orbit.len(),
            group.label(orbit[0]),
            members.join(" ")
        );
    }
    if report.orbits.len() > MAX_LISTED_ORBITS {
        let _ = writeln!(
            out,
            "... {} further orbits omitted",
            report.orbits.len() - MAX_LISTED_ORBITS
        );
    }
    out
}

pub fn splitting_table(report: &SplittingReport) -> String {
    let mut out = String::new();
    header(&mut out, &format!("splitting tests over {}", report.field));
    fmt_kv(&mut out, "group order", report.group.order);
    fmt_kv(&mut out, "exp(H/H')", report.quotient_exponent);
    fmt_kv(
        &mut out,
        "necessary: exp(H/H') | q-1",
        report.necessary_condition,
    );
    if let Some(t) = report.t {
        fmt_kv(&mut out, "extension index t", t);
        fmt_kv(&mut out, "t_w", report.t_w.unwrap());
        fmt_kv(
            &mut out,
            "exp(G) | q^t - 1",
            report.exp_divides_qt_minus_1.unwrap(),
        );
        fmt_kv(&mut out, "t_w | t", report.tw_divides_t.unwrap());
        fmt_kv(&mut out, "splitting field", report.splitting.unwrap());
    }
    out
}

pub fn classify_table(output: &ClassifyOutput) -> String {
    let mut out = String::new();
    header(
        &mut out,
        &format!(
            "classification of {} G for |G| = {}",
            output.field, output.group.order
        ),
    );
    let verdict = serde_json::to_value(output.report.verdict)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default();
    fmt_kv(&mut out, "verdict", verdict);
    if let Some(rule) = &output.report.decided_by {
        fmt_kv(&mut out, "decided by", rule);
    }
    let q = &output.report.quantities;
    for (name, value) in [
        ("t_w", q.t_w),
        ("exponent", q.exponent),
        ("phi(exponent)", q.phi_exponent),
        ("gamma", q.gamma),
        ("b0", q.b0),
        ("floor(sqrt(gamma))", q.sqrt_gamma_floor),
        ("ceil(sqrt(gamma/s))", q.sqrt_gamma_over_s_ceil),
        ("components s", q.component_count),
        ("max n_j*d_j", q.max_component_dim),
    ] {
        if let Some(v) = value {
            fmt_kv(&mut out, name, v);
        }
    }
    let _ = writeln!(out);
    let _ = writeln!(out, "rules:");
    for rule in &output.report.rules {
        let _ = writeln!(
            out,
            "  [{}] {:<26} {}",
            if rule.holds { "x" } else { " " },
            rule.rule,
            rule.inputs
        );
    }
    if let Some(census) = &output.census {
        let _ = writeln!(out);
        fmt_kv(&mut out, "idempotents", census.idempotents);
        fmt_kv(&mut out, "primitive", census.primitive);
        let dims: Vec<String> = census
            .dims
            .iter()
            .map(|(d, c)| format!("dim {d}: {c}"))
            .collect();
        fmt_kv(&mut out, "dimension histogram", dims.join(", "));
    }
    out
}

pub fn wedderburn_table(output: &WedderburnOutput) -> String {
    let mut out = String::new();
    header(&mut out, "component arithmetic");
    fmt_kv(&mut out, "gamma", output.gamma);
    if let Some(b0) = output.b0 {
        fmt_kv(&mut out, "b0", b0);
        fmt_kv(&mut out, "floor(gamma/2)", output.gamma / 2);
    }
    fmt_kv(&mut out, "floor(sqrt(gamma))", output.sqrt_gamma_floor);
    if let Some(s) = output.s {
        fmt_kv(&mut out, "components s", s);
    }
    if let Some(lo) = output.sqrt_gamma_over_s_ceil {
        fmt_kv(&mut out, "ceil(sqrt(gamma/s))", lo);
    }
    if let Some(solutions) = &output.solutions {
        fmt_kv(&mut out, "solutions", solutions.len());
        for sol in solutions.iter().take(20) {
            let parts: Vec<String> = sol.iter().map(|n| n.to_string()).collect();
            let _ = writeln!(out, "  {{{}}}", parts.join(", "));
        }
        if solutions.len() > 20 {
            let _ = writeln!(out, "  ... {} more", solutions.len() - 20);
        }
    }
    out
}

pub fn code_table(output: &CodeOutput) -> String {
    let mut out = String::new();
    header(
        &mut out,
        &format!(
            "codes in {} G for |G| = {}",
            output.field, output.group.order
        ),
    );
    if let Some(c) = &output.classification {
        let verdict = serde_json::to_value(c.verdict)
            .ok()
            .and_then(|v| v.as_str().map(str::to_string))
            .unwrap_or_default();
        fmt_kv(&mut out, "algebra verdict", verdict);
    }
    // generator table: lambda_1, |H| lambda_1, D (singleton rows only)
    let singles: Vec<_> = output.rows.iter().filter(|r| r.lambda1.is_some()).collect();
    if !singles.is_empty() {
        let _ = writeln!(out);
        let _ = writeln!(
            out,
            "{:<10} {:>10} {:>14} {:>6}",
            "subset", "lambda_1", "|H|*lambda_1", "D"
        );
        for row in &singles {
            let _ = writeln!(
                out,
                "{:<10} {:>10} {:>14} {:>6}",
                row.subset,
                row.lambda1.as_deref().unwrap_or("-"),
                row.order_times_lambda1
                    .map(|v| v.to_string())
                    .unwrap_or_else(|| "-".into()),
                row.dim_formula
                    .map(|v| v.to_string())
                    .unwrap_or_else(|| "-".into()),
            );
        }
    }
    let _ = writeln!(out);
    let _ = writeln!(
        out,
        "{:<10} {:>5} {:>10} {:>10} {:>12} {:<14}",
        "subset", "dim", "|H|/dim", "distance", "primitivity", "method"
    );
    for row in &output.rows {
        let dim = row
            .report
            .dim
            .map(|d| d.to_string())
            .unwrap_or_else(|| "?".into());
        let ratio = row
            .order_over_dim
            .map(|r| r.to_string())
            .unwrap_or_else(|| "-".into());
        let dist = match row.report.distance {
            DistanceOutcome::Exact(d) => d.to_string(),
            DistanceOutcome::BoundsOnly => "bounds-only".into(),
        };
        let prim = serde_json::to_value(row.report.primitivity.verdict)
            .ok()
            .and_then(|v| v.as_str().map(str::to_string))
            .unwrap_or_default();
        let method = match row.report.dim_method {
            DimMethod::RankOracle => "rank-oracle",
            DimMethod::DimensionFormula => "dim-formula",
            DimMethod::CongruenceSet => "congruence",
        };
        let _ = writeln!(
            out,
            "{:<10} {:>5} {:>10} {:>10} {:>12} {:<14}",
            row.subset, dim, ratio, dist, prim, method
        );
    }
    let _ = writeln!(out);
    for row in &output.rows {
        if row.report.bounds.is_empty() {
            continue;
        }
        let bounds: Vec<String> = row
            .report
            .bounds
            .iter()
            .map(|b| format!("{} ({})", b.value, b.rule))
            .collect();
        let _ = writeln!(out, "bounds {:<8} {}", row.subset, bounds.join(", "));
    }
    for row in &output.rows {
        if row.report.idempotent == Some(false) {
            let _ = writeln!(
                out,
                "note {:<8} the input is not an idempotent; the row describes the ideal it generates",
                row.subset
            );
        }
    }
    out
}

pub fn search_table(output: &SearchOutput) -> String {
    let mut out = String::new();
    header(
        &mut out,
        &format!(
            "idempotent census of {} G for |G| = {}",
            output.field, output.group.order
        ),
    );
    fmt_kv(&mut out, "idempotents", output.census.idempotents);
    fmt_kv(&mut out, "primitive", output.census.primitive);
    let dims: Vec<String> = output
        .census
        .dims
        .iter()
        .map(|(d, c)| format!("dim {d}: {c}"))
        .collect();
    fmt_kv(&mut out, "dimension histogram", dims.join(", "));
    let _ = writeln!(out);
    let _ = writeln!(out, "{:>5}  {:>4}  {:<10}  element", "#", "dim", "primitive");
    for (i, row) in output.entries.iter().take(MAX_LISTED_ENTRIES).enumerate() {
        let _ = writeln!(
            out,
            "{:>5}  {:>4}  {:<10}  {}",
            i,
            row.dim,
            if row.primitive { "yes" } else { "no" },
            row.element
        );
    }
    if output.entries.len() > MAX_LISTED_ENTRIES {
        let _ = writeln!(
            out,
            "... {} further idempotents omitted",
            output.entries.len() - MAX_LISTED_ENTRIES
        );
    }
    out
}

pub fn bounds_table(output: &BoundsOutput) -> String {
    let mut out = String::new();
    header(
        &mut out,
        &format!(
            "bounds in {} G for |G| = {}",
            output.field, output.group.order
        ),
    );
    fmt_kv(&mut out, "idempotent", output.idempotent);
    if let Some(d) = output.dim {
        fmt_kv(&mut out, "dim (rank oracle)", d);
    }
    let _ = writeln!(out);
    let _ = writeln!(out, "{:<30} {:>10}  conditions", "rule", "value");
    for b in &output.bounds {
        let mut notes = b.conditions.join(", ");
        if b.assumes_primitive {
            if !notes.is_empty() {
                notes.push_str(", ");
            }
            notes.push_str("assumes primitive");
        }
        let _ = writeln!(out, "{:<30} {:>10}  {}", b.rule, b.value.to_string(), notes);
    }
    if let Some(c) = &output.congruence {
        let _ = writeln!(out);
        fmt_kv(&mut out, "congruence residue r", c.residue);
        let cands: Vec<String> = c.candidates.iter().map(|d| d.to_string()).collect();
        fmt_kv(&mut out, "dimension candidates", cands.join(", "));
        let bounds: Vec<String> = c.bounds.iter().map(|b| b.value.to_string()).collect();
        fmt_kv(&mut out, "paired bounds |H|/dim", bounds.join(", "));
    }
    out
}
