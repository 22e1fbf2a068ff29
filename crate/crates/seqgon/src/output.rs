//! Machine- and human-readable renderings of terms, areas, reports and
//! tables. Rationals are always written as exact `p/q` strings; markdown
//! may add a decimal approximation next to them.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;
use seqgon_core::verify::{
    rank_name, Check, PolygonalTable, TableEntry, ThirdOrderTable, VerificationReport,
};
use seqgon_core::Rational;

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Markdown,
}

/// Six significant digits, for display only.
pub fn approx(r: &Rational) -> String {
    let v = r.to_f64().unwrap_or(f64::NAN);
    if v == 0.0 {
        return "0".into();
    }
    let magnitude = v.abs().log10().floor() as i32;
    if !(-4..6).contains(&magnitude) {
        return format!("{v:.5e}");
    }
    let decimals = (5 - magnitude).max(0) as usize;
    let s = format!("{v:.decimals$}");
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

fn exact_with_approx(r: &Rational) -> String {
    if r.is_integer() {
        r.to_string()
    } else {
        format!("{r} (≈{})", approx(r))
    }
}

fn csv_string<F>(write: F) -> Result<String, CliError>
where
    F: FnOnce(&mut csv::Writer<Vec<u8>>) -> Result<(), CliError>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    write(&mut w)?;
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn json_string<T: Serialize>(value: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

pub fn terms(values: &[BigInt], format: Option<OutputFormat>) -> Result<String, CliError> {
    match format {
        None => Ok(values.iter().map(|v| format!("{v}\n")).collect()),
        Some(OutputFormat::Json) => {
            json_string(&values.iter().map(ToString::to_string).collect::<Vec<_>>())
        }
        Some(OutputFormat::Csv) => csv_string(|w| {
            w.write_record(["n", "term"])?;
            for (n, v) in values.iter().enumerate() {
                w.write_record([n.to_string(), v.to_string()])?;
            }
            Ok(())
        }),
        Some(OutputFormat::Markdown) => {
            let mut s = String::from("| n | term |\n|---|---|\n");
            for (n, v) in values.iter().enumerate() {
                let _ = writeln!(s, "| {n} | {v} |");
            }
            Ok(s)
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AreaRecord {
    pub family: String,
    pub n: u64,
    pub k: u64,
    pub m: u64,
    pub oracle: Option<String>,
    pub closed: Option<String>,
    pub verdict: Option<&'static str>,
}

impl AreaRecord {
    pub fn new(
        family: String,
        (n, k, m): (u64, u64, u64),
        oracle: Option<&Rational>,
        closed: Option<&Rational>,
    ) -> Self {
        let verdict = match (oracle, closed) {
            (Some(a), Some(b)) => Some(if a == b { "MATCH" } else { "MISMATCH" }),
            _ => None,
        };
        Self {
            family,
            n,
            k,
            m,
            oracle: oracle.map(ToString::to_string),
            closed: closed.map(ToString::to_string),
            verdict,
        }
    }
}

pub fn area(record: &AreaRecord, format: Option<OutputFormat>) -> Result<String, CliError> {
    let opt = |v: &Option<String>| v.clone().unwrap_or_default();
    match format {
        None => {
            let mut s = String::new();
            match (&record.oracle, &record.closed) {
                (Some(o), None) => s.push_str(&format!("{o}\n")),
                (None, Some(c)) => s.push_str(&format!("{c}\n")),
                _ => {
                    let _ = writeln!(s, "oracle {}", opt(&record.oracle));
                    let _ = writeln!(s, "closed {}", opt(&record.closed));
                }
            }
            if let Some(v) = record.verdict {
                let _ = writeln!(s, "{v}");
            }
            Ok(s)
        }
        Some(OutputFormat::Json) => json_string(record),
        Some(OutputFormat::Csv) => csv_string(|w| {
            w.serialize(record)?;
            Ok(())
        }),
        Some(OutputFormat::Markdown) => {
            let mut s = String::from("| family | n | k | m | oracle | closed | verdict |\n");
            s.push_str("|---|---|---|---|---|---|---|\n");
            let _ = writeln!(
                s,
                "| {} | {} | {} | {} | {} | {} | {} |",
                record.family,
                record.n,
                record.k,
                record.m,
                opt(&record.oracle),
                opt(&record.closed),
                record.verdict.unwrap_or("")
            );
            Ok(s)
        }
    }
}

fn check_name(check: Check) -> &'static str {
    match check {
        Check::ClosedForm => "closed-form",
        Check::Collinearity => "collinearity",
    }
}

#[derive(Serialize)]
struct GridJson {
    family: String,
    check: &'static str,
    n: [u64; 2],
    k: [u64; 2],
    m: [u64; 2],
}

#[derive(Serialize)]
struct CellJson {
    n: u64,
    k: u64,
    m: u64,
    oracle_area: String,
    closed_area: Option<String>,
    #[serde(rename = "match")]
    matched: bool,
    note: String,
}

#[derive(Serialize)]
struct ReportJson {
    grid: GridJson,
    cells: Vec<CellJson>,
    pass_count: usize,
    fail_count: usize,
}

#[derive(Serialize)]
struct CellCsv<'a> {
    family: &'a str,
    n: u64,
    k: u64,
    m: u64,
    oracle_area: String,
    closed_area: String,
    #[serde(rename = "match")]
    matched: bool,
    note: &'a str,
}

/// Serialize a report. Timing is deliberately absent so identical inputs
/// give identical bytes.
pub fn report(report: &VerificationReport, format: Option<OutputFormat>) -> Result<String, CliError> {
    let family = report.family.to_string();
    let g = &report.grid;
    match format {
        None => {
            let mut s = String::new();
            let _ = writeln!(s, "family: {family}");
            let _ = writeln!(s, "check: {}", check_name(report.check));
            let _ = writeln!(
                s,
                "grid: n {}..{}, k {}..{}, m {}..{}",
                g.n.start(),
                g.n.end(),
                g.k.start(),
                g.k.end(),
                g.m.start(),
                g.m.end()
            );
            let _ = writeln!(
                s,
                "cells: {}, pass: {}, fail: {}",
                report.cells.len(),
                report.pass_count,
                report.fail_count
            );
            for c in report.cells.iter().filter(|c| !c.matched) {
                let _ = writeln!(
                    s,
                    "FAIL n={} k={} m={} oracle={} closed={} {}",
                    c.spec.n,
                    c.spec.k,
                    c.spec.m,
                    c.oracle_area,
                    c.closed_area.as_ref().map(ToString::to_string).unwrap_or_default(),
                    c.note
                );
            }
            Ok(s)
        }
        Some(OutputFormat::Json) => json_string(&ReportJson {
            grid: GridJson {
                family,
                check: check_name(report.check),
                n: [*g.n.start(), *g.n.end()],
                k: [*g.k.start(), *g.k.end()],
                m: [*g.m.start(), *g.m.end()],
            },
            cells: report
                .cells
                .iter()
                .map(|c| CellJson {
                    n: c.spec.n,
                    k: c.spec.k,
                    m: c.spec.m,
                    oracle_area: c.oracle_area.to_string(),
                    closed_area: c.closed_area.as_ref().map(ToString::to_string),
                    matched: c.matched,
                    note: c.note.clone(),
                })
                .collect(),
            pass_count: report.pass_count,
            fail_count: report.fail_count,
        }),
        Some(OutputFormat::Csv) => csv_string(|w| {
            for c in &report.cells {
                w.serialize(CellCsv {
                    family: &family,
                    n: c.spec.n,
                    k: c.spec.k,
                    m: c.spec.m,
                    oracle_area: c.oracle_area.to_string(),
                    closed_area: c.closed_area.as_ref().map(ToString::to_string).unwrap_or_default(),
                    matched: c.matched,
                    note: &c.note,
                })?;
            }
            Ok(())
        }),
        Some(OutputFormat::Markdown) => {
            let mut s = String::new();
            let _ = writeln!(
                s,
                "**{family}** ({}): {} pass, {} fail\n",
                check_name(report.check),
                report.pass_count,
                report.fail_count
            );
            s.push_str("| n | k | m | oracle | closed | match | note |\n");
            s.push_str("|---|---|---|---|---|---|---|\n");
            for c in &report.cells {
                let _ = writeln!(
                    s,
                    "| {} | {} | {} | {} | {} | {} | {} |",
                    c.spec.n,
                    c.spec.k,
                    c.spec.m,
                    exact_with_approx(&c.oracle_area),
                    c.closed_area.as_ref().map(exact_with_approx).unwrap_or_default(),
                    if c.matched { "yes" } else { "NO" },
                    c.note
                );
            }
            Ok(s)
        }
    }
}

fn coefficient_cell(coefficient: &BigInt, published: Option<u64>) -> String {
    match published {
        Some(p) if BigInt::from(p) != *coefficient => {
            format!("{coefficient}k^4 [MISMATCH: published {p}k^4]")
        }
        _ => format!("{coefficient}k^4"),
    }
}

#[derive(Serialize)]
struct PolygonalCellJson {
    m: u64,
    rank: u32,
    coefficient: String,
    published: Option<u64>,
    status: &'static str,
}

fn polygonal_status(matches: Option<bool>) -> &'static str {
    match matches {
        Some(true) => "MATCH",
        Some(false) => "MISMATCH",
        None => "UNPUBLISHED",
    }
}

/// The `k⁴` coefficient table. Markdown is the canonical human layout.
pub fn polygonal_table(table: &PolygonalTable, format: Option<OutputFormat>) -> Result<String, CliError> {
    match format {
        None | Some(OutputFormat::Markdown) => {
            let mut s = String::from("| m |");
            for &rank in &table.ranks {
                let _ = write!(s, " {} |", rank_name(rank));
            }
            s.push_str("\n|---|");
            s.push_str(&"---|".repeat(table.ranks.len()));
            s.push('\n');
            for row in &table.rows {
                let _ = write!(s, "| {} |", row[0].m);
                for cell in row {
                    let _ = write!(s, " {} |", coefficient_cell(&cell.coefficient, cell.published));
                }
                s.push('\n');
            }
            Ok(s)
        }
        Some(OutputFormat::Json) => json_string(
            &table
                .rows
                .iter()
                .flatten()
                .map(|c| PolygonalCellJson {
                    m: c.m,
                    rank: c.rank,
                    coefficient: c.coefficient.to_string(),
                    published: c.published,
                    status: polygonal_status(c.matches_published()),
                })
                .collect::<Vec<_>>(),
        ),
        Some(OutputFormat::Csv) => csv_string(|w| {
            for c in table.rows.iter().flatten() {
                w.serialize(PolygonalCellJson {
                    m: c.m,
                    rank: c.rank,
                    coefficient: c.coefficient.to_string(),
                    published: c.published,
                    status: polygonal_status(c.matches_published()),
                })?;
            }
            Ok(())
        }),
    }
}

#[derive(Serialize)]
struct EntryJson {
    computed: String,
    published: Option<String>,
    status: &'static str,
}

impl From<&TableEntry> for EntryJson {
    fn from(e: &TableEntry) -> Self {
        Self {
            computed: e.computed.to_string(),
            published: e.published.as_ref().map(ToString::to_string),
            status: e.status.label(),
        }
    }
}

#[derive(Serialize)]
struct ThirdOrderRowJson {
    k: u64,
    tribonacci: EntryJson,
    perrin: EntryJson,
    padovan: EntryJson,
}

#[derive(Serialize)]
struct ThirdOrderJson {
    n: u64,
    padovan_initial: [i64; 3],
    rows: Vec<ThirdOrderRowJson>,
}

#[derive(Serialize)]
struct ThirdOrderCsv {
    k: u64,
    family: &'static str,
    computed: String,
    published: String,
    status: &'static str,
}

fn entry_markdown(e: &TableEntry) -> String {
    let value = exact_with_approx(&e.computed);
    match &e.published {
        Some(p) if e.status != seqgon_core::verify::EntryStatus::Match => {
            format!("{value} [{}: published {p}]", e.status.label())
        }
        _ => format!("{value} [{}]", e.status.label()),
    }
}

pub fn third_order_table(table: &ThirdOrderTable, format: Option<OutputFormat>) -> Result<String, CliError> {
    let [a, b, c] = table.padovan_initial;
    match format {
        None | Some(OutputFormat::Markdown) => {
            let mut s = String::new();
            let _ = writeln!(s, "Triangle areas at n = {}\n", table.n);
            let _ = writeln!(s, "| k | Tribonacci | Perrin | Padovan({a},{b},{c}) |");
            s.push_str("|---|---|---|---|\n");
            for row in &table.rows {
                let _ = writeln!(
                    s,
                    "| {} | {} | {} | {} |",
                    row.k,
                    entry_markdown(&row.tribonacci),
                    entry_markdown(&row.perrin),
                    entry_markdown(&row.padovan)
                );
            }
            Ok(s)
        }
        Some(OutputFormat::Json) => json_string(&ThirdOrderJson {
            n: table.n,
            padovan_initial: table.padovan_initial,
            rows: table
                .rows
                .iter()
                .map(|r| ThirdOrderRowJson {
                    k: r.k,
                    tribonacci: (&r.tribonacci).into(),
                    perrin: (&r.perrin).into(),
                    padovan: (&r.padovan).into(),
                })
                .collect(),
        }),
        Some(OutputFormat::Csv) => csv_string(|w| {
            for r in &table.rows {
                for (family, e) in [
                    ("tribonacci", &r.tribonacci),
                    ("perrin", &r.perrin),
                    ("padovan", &r.padovan),
                ] {
                    w.serialize(ThirdOrderCsv {
                        k: r.k,
                        family,
                        computed: e.computed.to_string(),
                        published: e.published.as_ref().map(ToString::to_string).unwrap_or_default(),
                        status: e.status.label(),
                    })?;
                }
            }
            Ok(())
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use seqgon_core::sequences::SequenceFamily;
    use seqgon_core::verify::{polygonal_table as build_polygonal, third_order_table as build_third, verify, Grid};

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn approximations() {
        assert_eq!(approx(&r(15, 2)), "7.5");
        assert_eq!(approx(&r(1, 3)), "0.333333");
        assert_eq!(approx(&r(31, 9)), "3.44444");
        assert_eq!(approx(&r(10049160, 1)), "1.00492e7");
        assert_eq!(approx(&r(0, 1)), "0");
        assert_eq!(approx(&r(-1629, 2)), "-814.5");
    }

    #[test]
    fn terms_formats() {
        let v: Vec<BigInt> = [0, 1, 1, 2].map(BigInt::from).to_vec();
        assert_eq!(terms(&v, None).unwrap(), "0\n1\n1\n2\n");
        assert_eq!(
            terms(&v, Some(OutputFormat::Json)).unwrap(),
            "[\n  \"0\",\n  \"1\",\n  \"1\",\n  \"2\"\n]\n"
        );
        assert!(terms(&v, Some(OutputFormat::Csv)).unwrap().starts_with("n,term\n0,0\n"));
    }

    #[test]
    fn area_formats() {
        let rec = AreaRecord::new("fibonacci".into(), (1, 2, 3), Some(&r(15, 2)), Some(&r(15, 2)));
        assert_eq!(area(&rec, None).unwrap(), "oracle 15/2\nclosed 15/2\nMATCH\n");
        let only = AreaRecord::new("jacobsthal".into(), (1, 1, 3), Some(&r(0, 1)), None);
        assert_eq!(area(&only, None).unwrap(), "0\n");
        let csv = area(&rec, Some(OutputFormat::Csv)).unwrap();
        assert_eq!(csv, "family,n,k,m,oracle,closed,verdict\nfibonacci,1,2,3,15/2,15/2,MATCH\n");
        let bad = AreaRecord::new("x".into(), (0, 1, 3), Some(&r(1, 2)), Some(&r(1, 1)));
        assert_eq!(bad.verdict, Some("MISMATCH"));
    }

    #[test]
    fn report_json_schema() {
        let grid = Grid::new(1..=1, 2..=2, 3..=3).unwrap();
        let rep = verify(&SequenceFamily::Fibonacci, &grid).unwrap();
        let text = report(&rep, Some(OutputFormat::Json)).unwrap();
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v.as_object().unwrap().len(), 4);
        let pos: Vec<_> = ["\"grid\"", "\"cells\"", "\"pass_count\"", "\"fail_count\""]
            .iter()
            .map(|k| text.find(k).unwrap())
            .collect();
        assert!(pos.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(v["cells"][0]["oracle_area"], "15/2");
        assert_eq!(v["cells"][0]["closed_area"], "15/2");
        assert_eq!(v["cells"][0]["match"], true);
        assert_eq!(v["grid"]["n"], serde_json::json!([1, 1]));
        assert_eq!(v["fail_count"], 0);
    }

    #[test]
    fn report_csv_quotes() {
        let grid = Grid::new(0..=0, 1..=1, 3..=3).unwrap();
        let rep = verify(&SequenceFamily::GeneralizedFibonacci { s: 1, t: 2 }, &grid).unwrap();
        let text = report(&rep, Some(OutputFormat::Csv)).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), "family,n,k,m,oracle_area,closed_area,match,note");
        // the family label contains a comma and must be quoted
        assert!(lines.next().unwrap().starts_with("\"generalized(s=1,t=2)\",0,1,3,"));
    }

    #[test]
    fn polygonal_markdown() {
        let table = build_polygonal(3..=4, 3..=4).unwrap();
        assert_eq!(
            polygonal_table(&table, Some(OutputFormat::Markdown)).unwrap(),
            "| m | Triangular | Square |\n|---|---|---|\n| 3 | 4k^4 | 16k^4 |\n| 4 | 16k^4 | 64k^4 |\n"
        );
        assert_eq!(coefficient_cell(&BigInt::from(5), Some(4)), "5k^4 [MISMATCH: published 4k^4]");
    }

    #[test]
    fn third_order_markdown_flags() {
        let table = build_third(1, 3, [1, 1, 1]).unwrap();
        let md = third_order_table(&table, None).unwrap();
        assert!(md.contains("| 1 | 3 [MATCH] | 9/2 (≈4.5) [MATCH] | 1/2 (≈0.5) [UNVERIFIED-CONVENTION: published 0] |"));
        assert!(md.contains("31/2 (≈15.5) [MISMATCH: published 31/9]"));
    }
}
