//! `kzeta`: verification front end for the selector/series/quadrature/
//! finite-part machinery.
//!
//! Exit codes: 0 all checks passed, 1 verification failure, 2 usage error.

// Domain guards are written `!(x > bound)` so NaN inputs fail them too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod output;

use clap::{Parser, Subcommand, ValueEnum};
use kzeta::fpi;
use kzeta::quadrature;
use kzeta::series::{self, XiVariant};
use kzeta::suites::{run_suite, Suite};
use output::{f15, f17, json_escape, render_report, render_xi_table, Format, XiRow};

#[derive(Parser)]
#[command(
    name = "kzeta",
    version,
    about = "Selector kernels, block-alternating zeta/beta sums, hyperbolic Mellin \
             integrals, and Hadamard finite parts - computed, cross-checked, reported"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Selectors,
    Series,
    Mellin,
    Bridge,
    Fpi,
    Em,
    Audit,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Selectors => Suite::Selectors,
            SuiteArg::Series => Suite::Series,
            SuiteArg::Mellin => Suite::Mellin,
            SuiteArg::Bridge => Suite::Bridge,
            SuiteArg::Fpi => Suite::Fpi,
            SuiteArg::Em => Suite::Em,
            SuiteArg::Audit => Suite::Audit,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableKind {
    XiCheckpoints,
    XiSweep,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KernelArg {
    Csch,
    Sech,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    Plain,
    Alternating,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite and report named checks.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        /// Pass tolerance (absolute or relative), within [1e-14, 1e-6].
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Reproduce the xi checkpoint table or sweep xi over block sizes.
    Table {
        #[arg(long, value_enum, default_value_t = TableKind::XiCheckpoints)]
        which: TableKind,
        /// Exponent s > 1 (xi-sweep only).
        #[arg(long, default_value_t = 3.0)]
        s: f64,
        /// Comma-separated block sizes (xi-sweep only).
        #[arg(long = "J", value_delimiter = ',', default_value = "1,2,4,8")]
        block_sizes: Vec<u32>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Hadamard finite part of x^p/sinh x or x^p/cosh x at the origin.
    Fpi {
        #[arg(long, value_enum)]
        kernel: KernelArg,
        /// Divergent power p <= -1 (csch takes odd p, sech even p).
        #[arg(long, allow_negative_numbers = true)]
        exponent: i32,
        /// Split point c > 0.
        #[arg(long, default_value_t = 1.0)]
        split: f64,
        /// Expansion order (defaults to |p| + 6).
        #[arg(long)]
        order: Option<i32>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Evaluate xi_s(J) by the direct series and the bridge integral.
    Xi {
        #[arg(long)]
        s: f64,
        #[arg(long = "J", value_delimiter = ',', default_value = "1,2,4,8")]
        block_sizes: Vec<u32>,
        #[arg(long, value_enum, default_value_t = VariantArg::Plain)]
        variant: VariantArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn main() {
    std::process::exit(real_main());
}

fn real_main() -> i32 {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify { suite, tol, format } => cmd_verify(suite.into(), tol, format),
        Command::Table {
            which,
            s,
            block_sizes,
            format,
        } => cmd_table(which, s, &block_sizes, format),
        Command::Fpi {
            kernel,
            exponent,
            split,
            order,
            format,
        } => cmd_fpi(kernel, exponent, split, order, format),
        Command::Xi {
            s,
            block_sizes,
            variant,
            format,
        } => cmd_xi(s, &block_sizes, variant, format),
    }
}

fn usage_error(msg: &str) -> i32 {
    eprintln!("error: {msg}");
    2
}

fn cmd_verify(suite: Suite, tol: f64, format: Format) -> i32 {
    if !(1e-14..=1e-6).contains(&tol) {
        return usage_error(&format!("--tol must lie in [1e-14, 1e-6], got {tol:e}"));
    }
    let report = run_suite(suite, tol);
    print!("{}", render_report(&report, format));
    eprintln!(
        "suite '{}' finished in {} ms ({} of {} entries passed)",
        report.suite,
        report.wall_time_ms,
        report.count_passed(),
        report.entries.len()
    );
    if report.passed() {
        0
    } else {
        1
    }
}

fn xi_row(s: f64, block_size: u32) -> Result<XiRow, kzeta::Error> {
    let series = series::xi(s, block_size, XiVariant::Plain)?;
    let bridge = quadrature::bridge_xi(s, block_size)?;
    let closed_form = series::xi_checkpoint(s, block_size).ok();
    Ok(XiRow {
        s,
        block_size,
        series: series.value,
        bridge: bridge.value,
        closed_form,
        series_bridge_gap: (series.value - bridge.value).abs(),
    })
}

fn cmd_table(which: TableKind, s: f64, block_sizes: &[u32], format: Format) -> i32 {
    let (title, pairs): (&str, Vec<(f64, u32)>) = match which {
        TableKind::XiCheckpoints => (
            "xi checkpoints",
            vec![(3.0, 1), (3.0, 2), (3.0, 4), (3.0, 8), (2.0, 1)],
        ),
        TableKind::XiSweep => {
            if !(s > 1.0) {
                return usage_error(&format!("--s must exceed 1, got {s}"));
            }
            if block_sizes.is_empty() {
                return usage_error("--J must list at least one block size");
            }
            ("xi sweep", block_sizes.iter().map(|&j| (s, j)).collect())
        }
    };
    let mut rows = Vec::new();
    for (s, j) in pairs {
        match xi_row(s, j) {
            Ok(row) => rows.push(row),
            Err(e) => return usage_error(&format!("xi({s}, {j}): {e}")),
        }
    }
    print!("{}", render_xi_table(title, &rows, format));
    0
}

fn cmd_fpi(kernel: KernelArg, exponent: i32, split: f64, order: Option<i32>, format: Format) -> i32 {
    let kernel = match kernel {
        KernelArg::Csch => fpi::HyperbolicKernel::Csch,
        KernelArg::Sech => fpi::HyperbolicKernel::Sech,
    };
    let order = order.unwrap_or_else(|| fpi::default_expansion_order(exponent));
    let result = match fpi::finite_part(kernel, exponent, split, order) {
        Ok(r) => r,
        Err(e) => return usage_error(&e.to_string()),
    };
    let kernel_name = match kernel {
        fpi::HyperbolicKernel::Csch => "csch",
        fpi::HyperbolicKernel::Sech => "sech",
    };
    match format {
        Format::Json => {
            let terms: Vec<String> = result
                .subtracted_terms
                .iter()
                .map(|(e, c)| format!("{{ \"exponent\": {e}, \"coefficient\": {} }}", f17(*c)))
                .collect();
            println!("{{");
            println!("  \"kernel\": \"{}\",", json_escape(kernel_name));
            println!("  \"power\": {exponent},");
            println!("  \"split_point\": {},", f17(result.split_point));
            println!("  \"value\": {},", f17(result.value));
            println!("  \"regular_part\": {},", f17(result.regular_part));
            println!("  \"compensation\": {},", f17(result.compensation));
            println!("  \"tail\": {},", f17(result.tail));
            println!("  \"subtracted_terms\": [{}]", terms.join(", "));
            println!("}}");
        }
        Format::Csv => {
            println!("kernel,power,split_point,value,regular_part,compensation,tail");
            println!(
                "{},{},{},{},{},{},{}",
                kernel_name,
                exponent,
                f17(result.split_point),
                f17(result.value),
                f17(result.regular_part),
                f17(result.compensation),
                f17(result.tail)
            );
        }
        Format::Text => {
            println!("finite part of x^{exponent}/{kernel_name}-kernel at the origin");
            println!("  split point   c = {}", f15(result.split_point));
            println!("  value           = {}", f15(result.value));
            println!("  regular part    = {}", f15(result.regular_part));
            println!("  compensation    = {}", f15(result.compensation));
            println!("  tail            = {}", f15(result.tail));
            print!("  subtracted      = ");
            let terms: Vec<String> = result
                .subtracted_terms
                .iter()
                .map(|(e, c)| format!("{} x^{}", f15(*c), e))
                .collect();
            println!("{}", terms.join("  +  "));
        }
    }
    0
}

fn cmd_xi(s: f64, block_sizes: &[u32], variant: VariantArg, format: Format) -> i32 {
    if block_sizes.is_empty() {
        return usage_error("--J must list at least one block size");
    }
    match variant {
        VariantArg::Plain => {
            let mut rows = Vec::new();
            for &j in block_sizes {
                match xi_row(s, j) {
                    Ok(row) => rows.push(row),
                    Err(e) => return usage_error(&format!("xi({s}, {j}): {e}")),
                }
            }
            print!("{}", render_xi_table("xi values", &rows, format));
            0
        }
        VariantArg::Alternating => {
            // no bridge route for the inner-alternating variant;
            // report the series values alone
            let mut lines = Vec::new();
            for &j in block_sizes {
                match series::xi(s, j, XiVariant::Alternating) {
                    Ok(r) => lines.push((j, r)),
                    Err(e) => return usage_error(&format!("xi({s}, {j}, alternating): {e}")),
                }
            }
            match format {
                Format::Json => {
                    println!("{{");
                    println!("  \"table\": \"xi alternating\",");
                    println!("  \"rows\": [");
                    for (i, (j, r)) in lines.iter().enumerate() {
                        println!(
                            "    {{ \"s\": {}, \"J\": {j}, \"value\": {}, \"error_estimate\": {} }}{}",
                            f17(s),
                            f17(r.value),
                            f17(r.error_estimate),
                            if i + 1 < lines.len() { "," } else { "" }
                        );
                    }
                    println!("  ]");
                    println!("}}");
                }
                Format::Csv => {
                    println!("s,J,value,error_estimate");
                    for (j, r) in &lines {
                        println!("{},{j},{},{}", f17(s), f17(r.value), f17(r.error_estimate));
                    }
                }
                Format::Text => {
                    println!("xi alternating (s = {s})\n");
                    println!("{:>4}  {:>21}  {:>10}", "J", "value", "err est");
                    for (j, r) in &lines {
                        println!("{j:>4}  {:>21}  {:>10.3e}", f15(r.value), r.error_estimate);
                    }
                }
            }
            0
        }
    }
}
