//! `hywall` — exact wall-crossing and GIT stability calculator for the
//! moduli of hyperelliptic curves.
//!
//! Subcommands: `walls`, `intersect`, `mu`, `nef-scan`, `verify`. All numeric
//! input and output is exact `p/q`; exit codes are 0 on success, 1 on
//! verification failure, 2 on usage or domain errors.

mod report;
mod verify;

use clap::{ArgGroup, Parser, Subcommand};
use hywall::divisors::{intersect, make_l_alpha, nef_scan, BoundaryDivisorClass, VitalCurve};
use hywall::hilbert::{
    bridge_chart, bridge_weight_closed_form, classify, mu_bridge, mu_tail,
    standard_monomial_weights, tail_chart, tail_weight_closed_form, CurveChart,
};
use hywall::rat::{as_positive_int, parse_rat, Rat};
use hywall::walls::{alpha_of_m, in_stability_window, m_of_alpha, pullback_class, WallTable};
use report::{
    print_intersect, print_mu, print_nef_scan, print_walls, CurvePairing, Format, IntersectReport,
    MuReport, NefScanReport, OracleReport, WallRowReport, WallsReport,
};
use verify::{run_battery, VerifyConfig};

#[derive(Parser)]
#[command(
    name = "hywall",
    about = "Exact intersection-theory and GIT stability computations for hyperelliptic moduli",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
enum FamilyArg {
    Tail,
    Bridge,
}

#[derive(Subcommand)]
enum Command {
    /// Print the wall table of a genus: each level j with its critical value
    /// and the pullback class at the wall.
    Walls {
        #[arg(long)]
        genus: u32,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Pair a boundary divisor class with a vital curve.
    Intersect {
        #[arg(long)]
        genus: u32,
        /// "B<k>" for a pure boundary divisor, "L_alpha:<p/q>" for the
        /// log-canonical class, or a comma list of g coefficients.
        #[arg(long)]
        divisor: String,
        /// Four comma-separated positive parts summing to 2g+2.
        #[arg(long)]
        curve: String,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Hilbert-Mumford index and stability classification of a tail or
    /// bridge. Exactly one of --m / --alpha must be given; the other is
    /// derived through the degree correspondence.
    #[command(group(ArgGroup::new("parameter").required(true).args(["m", "alpha"])))]
    Mu {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        b: u32,
        #[arg(long)]
        genus: u32,
        /// Hilbert degree as an exact rational "p/q".
        #[arg(long)]
        m: Option<String>,
        /// Log-canonical parameter as an exact rational "p/q".
        #[arg(long)]
        alpha: Option<String>,
        /// Also run the brute-force standard-monomial oracle (integer m only).
        #[arg(long)]
        oracle: bool,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Pair a pullback class against every vital curve and report the
    /// minimum, negative, and zero pairings.
    NefScan {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        alpha: String,
        /// Contraction level j of the pullback class (2 = no contraction).
        #[arg(long, default_value_t = 2)]
        level: u32,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Run the full cross-module identity battery.
    Verify {
        /// Widen every parameter range.
        #[arg(long)]
        deep: bool,
        /// Negative control for the test suite: perturb the tail closed form
        /// so the oracle comparison must fail.
        #[arg(long, hide = true)]
        perturb_tail_closed_form: bool,
    },
}

fn main() {
    // die quietly when a downstream pipe closes (e.g. `hywall walls | head`)
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Walls { genus, format } => run_or_usage_error(cmd_walls(genus, format)),
        Command::Intersect {
            genus,
            divisor,
            curve,
            format,
        } => run_or_usage_error(cmd_intersect(genus, &divisor, &curve, format)),
        Command::Mu {
            family,
            b,
            genus,
            m,
            alpha,
            oracle,
            format,
        } => run_or_usage_error(cmd_mu(
            family,
            b,
            genus,
            m.as_deref(),
            alpha.as_deref(),
            oracle,
            format,
        )),
        Command::NefScan {
            genus,
            alpha,
            level,
            format,
        } => run_or_usage_error(cmd_nef_scan(genus, &alpha, level, format)),
        Command::Verify {
            deep,
            perturb_tail_closed_form,
        } => cmd_verify(VerifyConfig {
            deep,
            perturb_tail_closed_form,
        }),
    };
    std::process::exit(code);
}

fn run_or_usage_error(result: Result<(), String>) -> i32 {
    match result {
        Ok(()) => 0,
        Err(message) => {
            eprintln!("error: {message}");
            2
        }
    }
}

fn cmd_walls(genus: u32, format: Format) -> Result<(), String> {
    let table = WallTable::new(genus).map_err(|e| e.to_string())?;
    let report = WallsReport {
        genus: table.genus(),
        rows: table
            .rows()
            .iter()
            .map(|row| WallRowReport {
                j: row.j,
                alpha: row.alpha.to_string(),
                class: row.class.clone(),
            })
            .collect(),
    };
    print_walls(&report, format);
    Ok(())
}

fn parse_curve(genus: u32, text: &str) -> Result<VitalCurve, String> {
    let parts: Vec<u32> = text
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<u32>()
                .map_err(|_| format!("bad curve part {p:?}"))
        })
        .collect::<Result<_, _>>()?;
    let parts: [u32; 4] = parts
        .try_into()
        .map_err(|_| "curve needs exactly four parts".to_string())?;
    VitalCurve::new(genus, parts).map_err(|e| e.to_string())
}

fn parse_divisor(genus: u32, text: &str) -> Result<BoundaryDivisorClass, String> {
    if let Some(rest) = text.strip_prefix("L_alpha:") {
        let alpha = parse_rat(rest).map_err(|e| e.to_string())?;
        return make_l_alpha(genus, &alpha).map_err(|e| e.to_string());
    }
    if let Some(index) = text.strip_prefix('B') {
        if let Ok(k) = index.parse::<u32>() {
            return BoundaryDivisorClass::pure(genus, k).map_err(|e| e.to_string());
        }
    }
    let coeffs: Vec<Rat> = text
        .split(',')
        .map(|p| parse_rat(p.trim()).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    BoundaryDivisorClass::new(genus, coeffs).map_err(|e| e.to_string())
}

fn cmd_intersect(genus: u32, divisor: &str, curve: &str, format: Format) -> Result<(), String> {
    let class = parse_divisor(genus, divisor)?;
    let curve = parse_curve(genus, curve)?;
    let pairing = intersect(&class, &curve).map_err(|e| e.to_string())?;
    let report = IntersectReport {
        genus,
        divisor: class,
        curve,
        pairing: pairing.to_string(),
    };
    print_intersect(&report, format);
    Ok(())
}

fn family_chart(family: FamilyArg, b: u32) -> Result<CurveChart, String> {
    match family {
        FamilyArg::Tail => tail_chart(b).map_err(|e| e.to_string()),
        FamilyArg::Bridge => bridge_chart(b).map_err(|e| e.to_string()),
    }
}

fn cmd_mu(
    family: FamilyArg,
    b: u32,
    genus: u32,
    m_text: Option<&str>,
    alpha_text: Option<&str>,
    oracle: bool,
    format: Format,
) -> Result<(), String> {
    let m = match (m_text, alpha_text) {
        (Some(m), None) => parse_rat(m).map_err(|e| e.to_string())?,
        (None, Some(alpha)) => {
            let alpha = parse_rat(alpha).map_err(|e| e.to_string())?;
            m_of_alpha(&alpha).map_err(|e| e.to_string())?
        }
        // clap's argument group guarantees exactly one is present
        _ => unreachable!("argument group enforces exactly one of --m/--alpha"),
    };

    let mu = match family {
        FamilyArg::Tail => mu_tail(genus, b, &m),
        FamilyArg::Bridge => mu_bridge(genus, b, &m),
    }
    .map_err(|e| e.to_string())?;
    let verdict = classify(mu);

    let alpha = alpha_of_m(&m).map_err(|e| e.to_string())?;
    if !in_stability_window(&alpha) {
        eprintln!(
            "note: alpha = {alpha} lies outside the stability window (8/17, 7/10); \
             the index is exact but the wall trichotomy is not asserted there"
        );
    }

    let (oracle_report, closed_weight) = if oracle {
        let m_int = as_positive_int(&m)
            .ok_or_else(|| format!("--oracle needs a positive integer m, got {m}"))?;
        let chart = family_chart(family, b)?;
        let summary = standard_monomial_weights(chart.chart(), chart.rho(), m_int)
            .map_err(|e| e.to_string())?;
        let closed = match family {
            FamilyArg::Tail => tail_weight_closed_form(b, &m),
            FamilyArg::Bridge => bridge_weight_closed_form(b, &m),
        }
        .map_err(|e| e.to_string())?;
        (
            Some(OracleReport {
                count: summary.count,
                weight_sum: summary.weight_sum,
            }),
            Some(closed.to_string()),
        )
    } else {
        (None, None)
    };

    let report = MuReport {
        family: match family {
            FamilyArg::Tail => "tail".to_string(),
            FamilyArg::Bridge => "bridge".to_string(),
        },
        b,
        g: genus,
        m: m.to_string(),
        mu: verdict.mu.to_string(),
        classification: verdict.classification.to_string(),
        oracle: oracle_report,
    };
    print_mu(&report, closed_weight.as_deref(), format);
    Ok(())
}

fn cmd_nef_scan(genus: u32, alpha_text: &str, level: u32, format: Format) -> Result<(), String> {
    let alpha = parse_rat(alpha_text).map_err(|e| e.to_string())?;
    let class = pullback_class(genus, &alpha, level).map_err(|e| e.to_string())?;
    let scan = nef_scan(&class).map_err(|e| e.to_string())?;
    let report = NefScanReport {
        genus,
        alpha: alpha.to_string(),
        level,
        class,
        min_pairing: scan.min_pairing.to_string(),
        negative: scan
            .negative
            .into_iter()
            .map(|(curve, pairing)| CurvePairing {
                curve,
                pairing: pairing.to_string(),
            })
            .collect(),
        zero: scan.zero,
    };
    print_nef_scan(&report, format);
    Ok(())
}

fn cmd_verify(config: VerifyConfig) -> i32 {
    let reports = run_battery(&config);
    let mut failures = 0;
    for check in &reports {
        match &check.outcome {
            Ok(()) => println!("PASS {}", check.name),
            Err(detail) => {
                failures += 1;
                println!("FAIL {}: {detail}", check.name);
            }
        }
    }
    if failures == 0 {
        println!("PASS ({} check groups)", reports.len());
        0
    } else {
        println!("FAIL ({failures}/{} check groups failed)", reports.len());
        1
    }
}
