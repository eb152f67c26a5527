//! Report and table rendering.
//!
//! Machine formats (json, csv) serialize reals with 17 significant digits in
//! scientific notation, enough to round-trip every f64 bit-for-bit; text uses
//! 15 digits. Machine outputs are byte-reproducible across runs: the measured
//! wall time goes to stderr, and the `wall_time_ms` field is pinned to 0.

use kzeta::report::VerificationReport;

/// 17 significant digits, scientific; round-trips f64 exactly.
pub fn f17(x: f64) -> String {
    format!("{x:.16e}")
}

/// 15 significant digits for human-facing text.
pub fn f15(x: f64) -> String {
    format!("{x:.14e}")
}

pub fn json_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out
}

fn csv_quote(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\"\""))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

pub fn render_report(report: &VerificationReport, format: Format) -> String {
    match format {
        Format::Json => report_json(report),
        Format::Csv => report_csv(report),
        Format::Text => report_text(report),
    }
}

fn report_json(r: &VerificationReport) -> String {
    let mut out = String::new();
    out.push_str("{\n");
    out.push_str(&format!("  \"suite\": \"{}\",\n", json_escape(&r.suite)));
    out.push_str(&format!("  \"tolerance\": {},\n", f17(r.tolerance)));
    out.push_str("  \"entries\": [\n");
    for (i, e) in r.entries.iter().enumerate() {
        out.push_str(&format!(
            "    {{ \"name\": \"{}\", \"expected\": {}, \"computed\": {}, \"abs_error\": {}, \
             \"rel_error\": {}, \"pass\": {}, \"provenance\": \"{}\", \"note\": \"{}\" }}{}\n",
            json_escape(&e.name),
            f17(e.expected),
            f17(e.computed),
            f17(e.abs_error),
            f17(e.rel_error),
            e.pass,
            e.provenance.as_str(),
            json_escape(&e.note),
            if i + 1 < r.entries.len() { "," } else { "" }
        ));
    }
    out.push_str("  ],\n");
    out.push_str("  \"wall_time_ms\": 0\n");
    out.push_str("}\n");
    out
}

fn report_csv(r: &VerificationReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("# suite={}\n", r.suite));
    out.push_str(&format!("# tolerance={}\n", f17(r.tolerance)));
    out.push_str("# wall_time_ms=0\n");
    out.push_str("name,expected,computed,abs_error,rel_error,pass,provenance,note\n");
    for e in &r.entries {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            csv_quote(&e.name),
            f17(e.expected),
            f17(e.computed),
            f17(e.abs_error),
            f17(e.rel_error),
            e.pass,
            e.provenance.as_str(),
            csv_quote(&e.note),
        ));
    }
    out
}

fn report_text(r: &VerificationReport) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "suite: {}    tolerance: {}\n\n",
        r.suite,
        f15(r.tolerance)
    ));
    let name_width = r
        .entries
        .iter()
        .map(|e| e.name.len())
        .max()
        .unwrap_or(4)
        .max(4);
    out.push_str(&format!(
        "{:<name_width$}  {:>21}  {:>21}  {:>10}  {:>10}  {:<4}  {:<7}\n",
        "name", "expected", "computed", "abs_err", "rel_err", "pass", "prov"
    ));
    for e in &r.entries {
        out.push_str(&format!(
            "{:<name_width$}  {:>21}  {:>21}  {:>10.3e}  {:>10.3e}  {:<4}  {:<7}\n",
            e.name,
            f15(e.expected),
            f15(e.computed),
            e.abs_error,
            e.rel_error,
            if e.pass { "ok" } else { "FAIL" },
            e.provenance.as_str(),
        ));
    }
    let informational = r
        .entries
        .iter()
        .filter(|e| (r.suite == "audit" || e.name.starts_with("audit/")) && !e.pass)
        .count();
    out.push_str(&format!(
        "\n{} of {} entries passed",
        r.count_passed(),
        r.entries.len()
    ));
    if informational > 0 {
        out.push_str(&format!(
            " ({informational} audit mismatches are informational)"
        ));
    }
    out.push('\n');
    out
}

/// One row of a ξ table.
pub struct XiRow {
    pub s: f64,
    pub block_size: u32,
    pub series: f64,
    pub bridge: f64,
    pub closed_form: Option<f64>,
    pub series_bridge_gap: f64,
}

pub fn render_xi_table(title: &str, rows: &[XiRow], format: Format) -> String {
    match format {
        Format::Json => {
            let mut out = String::new();
            out.push_str("{\n");
            out.push_str(&format!("  \"table\": \"{}\",\n", json_escape(title)));
            out.push_str("  \"rows\": [\n");
            for (i, row) in rows.iter().enumerate() {
                let closed = row
                    .closed_form
                    .map(f17)
                    .unwrap_or_else(|| "null".to_string());
                out.push_str(&format!(
                    "    {{ \"s\": {}, \"J\": {}, \"series\": {}, \"bridge\": {}, \
                     \"closed_form\": {}, \"series_bridge_gap\": {} }}{}\n",
                    f17(row.s),
                    row.block_size,
                    f17(row.series),
                    f17(row.bridge),
                    closed,
                    f17(row.series_bridge_gap),
                    if i + 1 < rows.len() { "," } else { "" }
                ));
            }
            out.push_str("  ]\n}\n");
            out
        }
        Format::Csv => {
            let mut out = String::new();
            out.push_str(&format!("# table={title}\n"));
            out.push_str("s,J,series,bridge,closed_form,series_bridge_gap\n");
            for row in rows {
                let closed = row.closed_form.map(f17).unwrap_or_default();
                out.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    f17(row.s),
                    row.block_size,
                    f17(row.series),
                    f17(row.bridge),
                    closed,
                    f17(row.series_bridge_gap),
                ));
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            out.push_str(&format!("{title}\n\n"));
            out.push_str(&format!(
                "{:>4}  {:>3}  {:>21}  {:>21}  {:>21}  {:>10}\n",
                "s", "J", "series", "bridge", "closed form", "|gap|"
            ));
            for row in rows {
                let closed = row
                    .closed_form
                    .map(f15)
                    .unwrap_or_else(|| "-".to_string());
                out.push_str(&format!(
                    "{:>4}  {:>3}  {:>21}  {:>21}  {:>21}  {:>10.3e}\n",
                    row.s,
                    row.block_size,
                    f15(row.series),
                    f15(row.bridge),
                    closed,
                    row.series_bridge_gap,
                ));
            }
            out
        }
    }
}
