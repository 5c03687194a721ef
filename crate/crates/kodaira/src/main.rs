//! Command-line front end.
//!
//! Subcommands: `validate`, `report`, `search`, `refute`, `check`. Output is
//! deterministic; `--json` switches every subcommand to the stable schema
//! documented on [`kodaira::dossier`]. Exit codes: 0 success, 1 validation
//! or range failure (bad parameters, out-of-range twists, `k` too small for
//! a contradiction), 2 internal-invariant violation (a quantity that must be
//! an integer is not, a rank or direct-image check fails). Exit code 2
//! should never occur; it exists so that silent inconsistency is impossible.

use clap::{Args, Parser, Subcommand};
use kodaira::cohomology::{
    self, regularity_contradiction, scan_witnesses_z_ab, scan_witnesses_z_power, theorem_nonvan1,
    theorem_nonvan2, Witness,
};
use kodaira::dossier::{build_dossier, self_check, DossierError};
use kodaira::params::{enumerate_params, validate, ConstructionParams};
use kodaira::pushforward::refute_erroneous;
use serde::Serialize;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "kodaira",
    version,
    about = "Exact certificates for Kodaira-vanishing failure on cyclic covers of ruled surfaces",
    long_about = "Exact-arithmetic certificates for the cyclic-cover construction of \
                  characteristic-p counterexamples to Kodaira vanishing. Every number is \
                  computed over the rationals with integrality asserted; every claim is \
                  conditional on the existence of the underlying Tango curve."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct TripleArgs {
    /// Characteristic (a prime dividing 2g - 2).
    #[arg(long)]
    p: i64,
    /// Genus of the base curve (at least 2).
    #[arg(long)]
    g: i64,
    /// Degree of the cyclic cover (at least 2, dividing both (2g-2)/p and p+1).
    #[arg(long)]
    l: i64,
}

#[derive(Subcommand)]
enum Command {
    /// Check a parameter triple and print the derived scalars.
    Validate {
        #[command(flatten)]
        triple: TripleArgs,
        #[arg(long)]
        json: bool,
    },
    /// Full dossier for one triple: invariants, nonvanishing certificates,
    /// nef failure, Kollar violation, and the pushforward refutation.
    Report {
        #[command(flatten)]
        triple: TripleArgs,
        #[arg(long)]
        json: bool,
        /// Also run the exhaustive witness scanner outside the proven ranges
        /// (results are namespaced, never merged with proven certificates).
        #[arg(long = "beyond-range")]
        beyond_range: bool,
    },
    /// Enumerate every admissible triple within bounds and stream dossiers.
    Search {
        /// Upper bound on the characteristic.
        #[arg(long = "max-p")]
        max_p: i64,
        /// Upper bound on the genus.
        #[arg(long = "max-g")]
        max_g: i64,
        /// Stream one compact JSON dossier per line; the candidate count
        /// goes to standard error.
        #[arg(long)]
        json: bool,
        #[arg(long = "beyond-range")]
        beyond_range: bool,
    },
    /// Refute the erroneous pushforward formula by comparing exact Euler
    /// characteristics of the k-th thickenings.
    Refute {
        #[command(flatten)]
        triple: TripleArgs,
        /// Thickening multiple (the formulas provably disagree for k >= 2).
        #[arg(long, default_value_t = 2)]
        k: i64,
        #[arg(long)]
        json: bool,
    },
    /// Re-run the exact cross-checks for a triple, or certify one twist:
    /// --n for the diagonal family, --a/--b for the mixed family, --a/--b
    /// with --k for the regularity-contradiction demonstration.
    Check {
        #[command(flatten)]
        triple: TripleArgs,
        /// Diagonal twist: certify H^1(X, Z^(-n)) != 0.
        #[arg(long, conflicts_with_all = ["a", "b", "k"])]
        n: Option<i64>,
        /// Mixed twist: certify H^1(X, Z_(a,b)^(-1)) != 0 (with --b).
        #[arg(long, requires = "b")]
        a: Option<i64>,
        #[arg(long, requires = "a")]
        b: Option<i64>,
        /// With --a/--b: replay the regularity contradiction against the
        /// twist k * Z_(a,b) - K_X instead of certifying a witness.
        #[arg(long, requires = "a")]
        k: Option<i64>,
        #[arg(long)]
        json: bool,
        /// For out-of-range twists, scan for witnesses anyway; results are
        /// labeled as beyond the proven range, and certify nothing.
        #[arg(long = "beyond-range")]
        beyond_range: bool,
    },
}

/// Terminal failure: message for standard error plus the process exit code.
struct Failure {
    code: u8,
    message: String,
}

impl<E: Into<DossierError>> From<E> for Failure {
    fn from(e: E) -> Self {
        let e: DossierError = e.into();
        Failure { code: if e.is_internal() { 2 } else { 1 }, message: e.to_string() }
    }
}

fn parse_triple(t: &TripleArgs) -> Result<ConstructionParams, Failure> {
    validate(t.p, t.g, t.l).map_err(|e| Failure { code: 1, message: e.to_string() })
}

#[derive(Serialize)]
struct ValidateSummary {
    p: i64,
    g: i64,
    l: i64,
    deg_l: i64,
    deg_n: i64,
    m: i64,
    fiber_genus: i64,
    omega_x_ample: bool,
}

fn validate_summary(c: &ConstructionParams) -> ValidateSummary {
    ValidateSummary {
        p: c.p(),
        g: c.g(),
        l: c.l(),
        deg_l: c.deg_l(),
        deg_n: c.deg_n(),
        m: c.m(),
        fiber_genus: c.fiber_genus(),
        omega_x_ample: c.omega_x_ample(),
    }
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

fn cmd_validate(triple: &TripleArgs, json: bool) -> Result<(), Failure> {
    let c = parse_triple(triple)?;
    if json {
        print_json(&validate_summary(&c));
    } else {
        println!("params ok: p = {}, g = {}, l = {}", c.p(), c.g(), c.l());
        println!("  deg_L = {}, deg_N = {}, m = {}", c.deg_l(), c.deg_n(), c.m());
        println!("  fiber genus = {}", c.fiber_genus());
        println!("  omega_X ample: {}", c.omega_x_ample());
    }
    Ok(())
}

fn cmd_report(triple: &TripleArgs, json: bool, beyond_range: bool) -> Result<(), Failure> {
    let c = parse_triple(triple)?;
    let d = build_dossier(&c, beyond_range)?;
    if json {
        print!("{}", d.to_json());
    } else {
        print!("{}", d.render_text());
    }
    Ok(())
}

fn cmd_search(max_p: i64, max_g: i64, json: bool, beyond_range: bool) -> Result<(), Failure> {
    let candidates = enumerate_params(max_p, max_g);
    let count = candidates.len();
    for c in &candidates {
        let d = build_dossier(c, beyond_range)?;
        if json {
            println!("{}", d.to_json_compact());
        } else {
            let i = &d.invariants;
            println!(
                "p = {}, g = {}, l = {}: deg_L = {}, deg_N = {}, m = {}, fiber genus = {}, \
                 omega_X ample = {}, chi(O_X) = {}",
                c.p(),
                c.g(),
                c.l(),
                i.deg_l,
                i.deg_n,
                i.m,
                i.fiber_genus,
                i.omega_x_ample,
                i.chi_structure_sheaf
            );
        }
    }
    let summary = format!("{count} candidates");
    if json {
        eprintln!("{summary}");
    } else {
        println!("{summary}");
    }
    Ok(())
}

fn cmd_refute(triple: &TripleArgs, k: i64, json: bool) -> Result<(), Failure> {
    let c = parse_triple(triple)?;
    let report = refute_erroneous(k, &c)?;
    if json {
        print_json(&report);
        return Ok(());
    }
    println!(
        "refutation at k = {} for p = {}, g = {}, l = {}",
        report.k,
        c.p(),
        c.g(),
        c.l()
    );
    println!("corrected decomposition of psi_* O_X(-{}E~):", report.k);
    for s in &report.corrected.summands {
        println!("  {}", s.describe());
    }
    println!("erroneous decomposition O_P(-{}E) (+) M^1 (+) ... (+) M^(l-1):", report.k);
    for s in &report.erroneous.summands {
        println!("  {}", s.describe());
    }
    println!(
        "chi(O_(kE~)) = {} from the corrected route, chi(O_(kE)) = {} from the erroneous one",
        report.chi_thickening_cover, report.chi_thickening_base
    );
    println!(
        "decomposition chi sums: corrected {}, erroneous {}",
        report.corrected_chi_sum, report.erroneous_chi_sum
    );
    println!(
        "verdict: {}",
        if report.mismatch {
            "MISMATCH, the two formulas cannot both push forward the same sheaf"
        } else {
            "no contradiction at this k"
        }
    );
    Ok(())
}

fn witness_text(w: &Witness, twist: &str) {
    println!("witness for H^1(X, {twist}) != 0");
    println!("  summand index {}: {}", w.index, w.bundle().describe());
    match w.rule {
        cohomology::SectionRule::ExactMatch => {
            println!("  rule: exact match, n_exp = l * sym_deg ({} = {})", w.identity_lhs, w.identity_rhs);
        }
        cohomology::SectionRule::RrPositivity => {
            println!("  rule: positive Euler characteristic, chi = {}", w.h1_lower_bound);
        }
    }
    println!("  h^1 >= {}", w.h1_lower_bound);
    println!("  (conditional on the existence of the underlying Tango curve)");
}

/// Labeled output of the out-of-range scanner: nothing here is a theorem.
#[derive(Serialize)]
struct BeyondRangeScan {
    beyond_proven_range: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    a_b: Option<[i64; 2]>,
    witnesses: Vec<Witness>,
}

fn scan_output(scan: BeyondRangeScan, twist: &str, json: bool) {
    if json {
        print_json(&scan);
    } else {
        println!(
            "beyond proven range: scanner found {} candidate witness(es) for {twist}",
            scan.witnesses.len()
        );
        for w in &scan.witnesses {
            println!(
                "  summand index {}: {} ({})",
                w.index,
                w.bundle().describe(),
                match w.rule {
                    cohomology::SectionRule::ExactMatch => "exact match",
                    cohomology::SectionRule::RrPositivity => "positive Euler characteristic",
                }
            );
        }
        println!("nothing beyond the proven range is asserted as a theorem");
    }
}

fn check_diagonal(
    c: &ConstructionParams,
    n: i64,
    json: bool,
    beyond_range: bool,
) -> Result<(), Failure> {
    match theorem_nonvan1(n, c) {
        Ok(w) => {
            if json {
                print_json(&w);
            } else {
                witness_text(&w, &format!("Z^(-{n})"));
            }
            Ok(())
        }
        Err(cohomology::CohomologyError::OutOfProvenRange { .. }) if beyond_range && n >= 1 => {
            let scan = BeyondRangeScan {
                beyond_proven_range: true,
                n: Some(n),
                a_b: None,
                witnesses: scan_witnesses_z_power(n, c),
            };
            scan_output(scan, &format!("Z^(-{n})"), json);
            Ok(())
        }
        Err(e) => Err(e.into()),
    }
}

fn check_mixed(
    c: &ConstructionParams,
    a: i64,
    b: i64,
    json: bool,
    beyond_range: bool,
) -> Result<(), Failure> {
    match theorem_nonvan2(a, b, c) {
        Ok(w) => {
            if json {
                print_json(&w);
            } else {
                witness_text(&w, &format!("Z_({a},{b})^(-1)"));
            }
            Ok(())
        }
        Err(cohomology::CohomologyError::OutOfProvenRange { .. })
            if beyond_range && a >= 1 && b >= 1 =>
        {
            let scan = BeyondRangeScan {
                beyond_proven_range: true,
                n: None,
                a_b: Some([a, b]),
                witnesses: scan_witnesses_z_ab(a, b, c),
            };
            scan_output(scan, &format!("Z_({a},{b})^(-1)"), json);
            Ok(())
        }
        Err(e) => Err(e.into()),
    }
}

fn check_contradiction(c: &ConstructionParams, a: i64, b: i64, k: i64, json: bool) -> Result<(), Failure> {
    let report = regularity_contradiction(a, b, k, c)?;
    if json {
        print_json(&report);
        return Ok(());
    }
    println!(
        "regularity contradiction replay at (a, b) = ({a}, {b}), k = {k} on p = {}, g = {}, l = {}",
        c.p(),
        c.g(),
        c.l()
    );
    println!(
        "  twist k*Z_(a,b) - K_X = {} E~ + phi^*(degree {})",
        report.twist_et_coeff, report.twist_base_deg
    );
    println!("  numerically ample: {}", report.twist_ample);
    println!("  (a, b) inside the proven rectangle: {}", report.in_proven_rectangle);
    match &report.erroneous_route_witness {
        Some(w) => println!(
            "  erroneous route produces an exact-match witness at summand {} ({})",
            w.index,
            w.bundle().describe()
        ),
        None => println!("  erroneous route produces no exact-match witness"),
    }
    if report.contradiction_flagged {
        println!(
            "  CONTRADICTION: an ample twist would force vanishing, yet the erroneous \
             formula certifies h^1 >= 1; but the fibration gives q(X) >= {}",
            report.irregularity_lower_bound
        );
        println!("  this incompatibility is what refutes the erroneous range");
    } else {
        println!("  no contradiction can be assembled from this twist");
    }
    println!(
        "  proven rectangle at k = p - 1 never yields both twist coordinates positive: {}",
        report.rectangle_never_both_positive
    );
    Ok(())
}

fn check_battery(c: &ConstructionParams, json: bool) -> Result<(), Failure> {
    let results = self_check(c)?;
    let failed = results.iter().filter(|r| !r.passed).count();
    if json {
        print_json(&results);
    } else {
        for r in &results {
            println!("{} {}", if r.passed { "ok  " } else { "FAIL" }, r.name);
        }
        println!("self-check: {}/{} passed", results.len() - failed, results.len());
    }
    if failed > 0 {
        return Err(Failure {
            code: 2,
            message: format!("self-check failed {failed} of {} checks", results.len()),
        });
    }
    Ok(())
}

fn cmd_check(
    triple: &TripleArgs,
    n: Option<i64>,
    a: Option<i64>,
    b: Option<i64>,
    k: Option<i64>,
    json: bool,
    beyond_range: bool,
) -> Result<(), Failure> {
    let c = parse_triple(triple)?;
    match (n, a, b, k) {
        (Some(n), None, None, None) => check_diagonal(&c, n, json, beyond_range),
        (None, Some(a), Some(b), None) => check_mixed(&c, a, b, json, beyond_range),
        (None, Some(a), Some(b), Some(k)) => check_contradiction(&c, a, b, k, json),
        (None, None, None, None) => check_battery(&c, json),
        _ => unreachable!("clap enforces the flag combinations"),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Validate { triple, json } => cmd_validate(triple, *json),
        Command::Report { triple, json, beyond_range } => cmd_report(triple, *json, *beyond_range),
        Command::Search { max_p, max_g, json, beyond_range } => {
            cmd_search(*max_p, *max_g, *json, *beyond_range)
        }
        Command::Refute { triple, k, json } => cmd_refute(triple, *k, *json),
        Command::Check { triple, n, a, b, k, json, beyond_range } => {
            cmd_check(triple, *n, *a, *b, *k, *json, *beyond_range)
        }
    }
}

fn main() -> ExitCode {
    // flag misuse is a validation failure (exit 1); exit 2 stays reserved
    // for internal-invariant violations
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let for_stderr = e.use_stderr();
            let _ = e.print();
            return if for_stderr { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("{}", f.message);
            ExitCode::from(f.code)
        }
    }
}
