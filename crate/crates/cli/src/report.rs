//! Report types for every subcommand, with their JSON wire formats and the
//! table/CSV renderings.
//!
//! All numbers are exact "p/q" strings; there is no decimal output anywhere.
//! JSON reports round-trip: parsing and re-serializing a report reproduces it
//! byte-identically.

use hywall::divisors::{BoundaryDivisorClass, VitalCurve};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Serialize, Deserialize)]
pub struct WallsReport {
    pub genus: u32,
    pub rows: Vec<WallRowReport>,
}

#[derive(Serialize, Deserialize)]
pub struct WallRowReport {
    pub j: u32,
    pub alpha: String,
    pub class: BoundaryDivisorClass,
}

#[derive(Serialize, Deserialize)]
pub struct IntersectReport {
    pub genus: u32,
    pub divisor: BoundaryDivisorClass,
    pub curve: VitalCurve,
    pub pairing: String,
}

#[derive(Serialize, Deserialize)]
pub struct MuReport {
    pub family: String,
    pub b: u32,
    pub g: u32,
    pub m: String,
    pub mu: String,
    pub classification: String,
    pub oracle: Option<OracleReport>,
}

#[derive(Serialize, Deserialize)]
pub struct OracleReport {
    pub count: u64,
    pub weight_sum: u64,
}

#[derive(Serialize, Deserialize)]
pub struct NefScanReport {
    pub genus: u32,
    pub alpha: String,
    pub level: u32,
    pub class: BoundaryDivisorClass,
    pub min_pairing: String,
    pub negative: Vec<CurvePairing>,
    pub zero: Vec<VitalCurve>,
}

#[derive(Serialize, Deserialize)]
pub struct CurvePairing {
    pub curve: VitalCurve,
    pub pairing: String,
}

pub fn print_json<T: Serialize>(report: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(report).expect("reports serialize infallibly")
    );
}

fn class_cells(class: &BoundaryDivisorClass) -> Vec<(u32, String)> {
    class
        .indices()
        .map(|k| (k, class.coeff(k).expect("index in range").to_string()))
        .collect()
}

fn curve_cell(curve: &VitalCurve) -> String {
    let [a, b, c, d] = curve.parts();
    format!("{{{a},{b},{c},{d}}}")
}

pub fn print_walls(report: &WallsReport, format: Format) {
    match format {
        Format::Json => print_json(report),
        Format::Csv => {
            println!("j,alpha,k,coeff");
            for row in &report.rows {
                for (k, coeff) in class_cells(&row.class) {
                    println!("{},{},{k},{coeff}", row.j, row.alpha);
                }
            }
        }
        Format::Table => {
            println!("wall table for genus {}", report.genus);
            for row in &report.rows {
                println!("  j = {:<3} alpha = {}", row.j, row.alpha);
                for (k, coeff) in class_cells(&row.class) {
                    println!("      B~_{k:<3} {coeff}");
                }
            }
        }
    }
}

pub fn print_intersect(report: &IntersectReport, format: Format) {
    match format {
        Format::Json => print_json(report),
        Format::Csv => {
            println!("genus,curve,pairing");
            let [a, b, c, d] = report.curve.parts();
            println!("{},{a} {b} {c} {d},{}", report.genus, report.pairing);
        }
        Format::Table => {
            println!("{}", report.pairing);
        }
    }
}

pub fn print_mu(report: &MuReport, closed_weight: Option<&str>, format: Format) {
    match format {
        Format::Json => print_json(report),
        Format::Csv => {
            println!("family,b,g,m,mu,classification,oracle_count,oracle_weight_sum");
            let (count, weight_sum) = match &report.oracle {
                Some(o) => (o.count.to_string(), o.weight_sum.to_string()),
                None => (String::new(), String::new()),
            };
            println!(
                "{},{},{},{},{},{},{count},{weight_sum}",
                report.family, report.b, report.g, report.m, report.mu, report.classification
            );
        }
        Format::Table => {
            println!("family         = {}", report.family);
            println!("b              = {}", report.b);
            println!("genus          = {}", report.g);
            println!("m              = {}", report.m);
            println!("mu             = {}", report.mu);
            println!("classification = {}", report.classification);
            if let Some(oracle) = &report.oracle {
                println!("oracle count   = {}", oracle.count);
                println!("oracle weight  = {}", oracle.weight_sum);
                if let Some(closed) = closed_weight {
                    let tag = if closed == oracle.weight_sum.to_string() {
                        "agrees"
                    } else {
                        "DISAGREES"
                    };
                    println!("closed weight  = {closed} ({tag})");
                }
            }
        }
    }
}

pub fn print_nef_scan(report: &NefScanReport, format: Format) {
    match format {
        Format::Json => print_json(report),
        Format::Csv => {
            println!("kind,curve,pairing");
            println!("min,,{}", report.min_pairing);
            for item in &report.negative {
                let [a, b, c, d] = item.curve.parts();
                println!("negative,{a} {b} {c} {d},{}", item.pairing);
            }
            for curve in &report.zero {
                let [a, b, c, d] = curve.parts();
                println!("zero,{a} {b} {c} {d},0");
            }
        }
        Format::Table => {
            println!(
                "nef scan: genus {}, alpha = {}, level {}",
                report.genus, report.alpha, report.level
            );
            println!("  min pairing: {}", report.min_pairing);
            if report.negative.is_empty() {
                println!("  negative curves: none");
            } else {
                println!("  negative curves:");
                for item in &report.negative {
                    println!("    {}  ->  {}", curve_cell(&item.curve), item.pairing);
                }
            }
            if report.zero.is_empty() {
                println!("  zero curves: none");
            } else {
                println!("  zero curves (candidate extremal rays):");
                for curve in &report.zero {
                    println!("    {}", curve_cell(curve));
                }
            }
        }
    }
}
