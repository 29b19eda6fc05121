//! `newbasis`: enumerate the interval-set families, render their tables and
//! basis matrices, run the non-abelian Fourier calculus on the group
//! catalog, build the exceptional-case bases, and run the verification
//! suites. Output is deterministic for fixed flags.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use newbasis_core::basis::{change_of_basis, membership_matrix, symplectic_fourier, VFunction};
use newbasis_core::exact::CycloNumber;
use newbasis_core::exc::{
    build_exceptional_basis, check_properties, expansions_fixture, lambda_library, matrix_fixture,
    render_expansions, render_matrix, Case,
};
use newbasis_core::f2::SdOrder;
use newbasis_core::intervals::{enumerate_s, oracle};
use newbasis_core::mspace::{fourier_apply, fourier_matrix, MContext};
use newbasis_core::odd::enumerate_s_odd;
use newbasis_core::tables::{
    fixture_text, parse_table, render_sd_odd_table, render_sd_table, verify_even_rows,
    verify_odd_rows,
};

#[derive(Parser)]
#[command(
    name = "newbasis",
    version,
    about = "interval-set families and the non-abelian Fourier calculus"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the family S_D (even or odd D)
    SdEnum {
        #[arg(long)]
        d: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Render the span table for even D
    SdTable {
        #[arg(long)]
        d: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Render the quotient span table for odd D
    SdOddTable {
        #[arg(long)]
        d: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Emit the membership or change-of-basis matrix for even D as CSV
    SdMatrix {
        #[arg(long)]
        d: u32,
        /// which matrix: "membership" (alias "d") or "change" (alias "c")
        #[arg(long, default_value = "membership")]
        which: String,
    },
    /// Emit the Fourier transform matrix of a catalog group
    MgFourier {
        #[arg(long)]
        group: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the distinguished bipositive library elements
    MgLambda {
        /// name such as "Lambda(-1)", "Lambda'(theta^1)", "Lambda(zeta^2)";
        /// prints the whole library when omitted
        #[arg(long)]
        name: Option<String>,
    },
    /// Build an exceptional-case basis and emit it
    Exc {
        #[arg(long)]
        case: String,
        /// what to emit: expansions, matrix or json
        #[arg(long, default_value = "expansions")]
        emit: String,
    },
    /// Run the verification suites (exit 1 on failure)
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 6)]
        max_d: u32,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {}", err);
            ExitCode::from(1)
        }
    }
}

fn run(cmd: Command) -> Result<(), String> {
    match cmd {
        Command::SdEnum { d, format } => {
            let sets = if d % 2 == 0 { enumerate_s(d) } else { enumerate_s_odd(d) };
            match format {
                Format::Json => {
                    let rows: Vec<String> = sets.iter().map(|b| b.json()).collect();
                    println!("[{}]", rows.join(","));
                }
                _ => {
                    for b in &sets {
                        println!("{}", b);
                    }
                }
            }
            Ok(())
        }
        Command::SdTable { d, format } => {
            if d % 2 != 0 {
                return Err("sd-table needs even --d; see sd-odd-table".into());
            }
            let text = render_sd_table(d)?;
            emit_table(d, text, format)
        }
        Command::SdOddTable { d, format } => {
            if d % 2 != 1 {
                return Err("sd-odd-table needs odd --d".into());
            }
            let text = render_sd_odd_table(d)?;
            emit_table(d, text, format)
        }
        Command::SdMatrix { d, which } => {
            if d % 2 != 0 {
                return Err("sd-matrix needs even --d".into());
            }
            let ord = SdOrder::new(d);
            let m = match which.as_str() {
                "membership" | "d" => membership_matrix(&ord),
                "change" | "c" => change_of_basis(&ord),
                other => return Err(format!("unknown matrix {:?}", other)),
            };
            print!("{}", m.csv());
            Ok(())
        }
        Command::MgFourier { group, format } => {
            let ctx = MContext::catalog(&group);
            let m = fourier_matrix(&ctx);
            match format {
                Format::Json => {
                    let mut rows = Vec::new();
                    for r in 0..ctx.n_pairs() {
                        let cells: Vec<String> = m[r].iter().map(cyclo_json).collect();
                        rows.push(format!(
                            "{{\"pair\":\"{}\",\"row\":[{}]}}",
                            ctx.pair_label(r),
                            cells.join(",")
                        ));
                    }
                    println!("{{\"group\":\"{}\",\"matrix\":[{}]}}", group, rows.join(","));
                }
                _ => {
                    for r in 0..ctx.n_pairs() {
                        let cells: Vec<String> = m[r].iter().map(|v| format!("{}", v)).collect();
                        println!("{}: {}", ctx.pair_label(r), cells.join(", "));
                    }
                }
            }
            Ok(())
        }
        Command::MgLambda { name } => {
            let lib = lambda_library();
            let wanted = name.as_deref().map(parse_lambda_name);
            let mut hit = false;
            for lam in &lib {
                if let Some(w) = &wanted {
                    if lam.name != *w {
                        continue;
                    }
                }
                hit = true;
                let ctx = MContext::catalog(&lam.group);
                println!(
                    "Lambda[{}] over {} = {}",
                    lam.name,
                    lam.group,
                    lam.vector.display(&ctx)
                );
            }
            if !hit {
                return Err(format!(
                    "no library element named {:?}",
                    name.unwrap_or_default()
                ));
            }
            Ok(())
        }
        Command::Exc { case, emit } => {
            let case = Case::parse(&case).ok_or(format!("unknown case {:?}", case))?;
            let basis = build_exceptional_basis(case);
            match emit.as_str() {
                "expansions" | "text" => {
                    print!("{}", render_expansions(&basis));
                    Ok(())
                }
                "matrix" => {
                    print!("{}", render_matrix(&basis)?);
                    Ok(())
                }
                "json" => {
                    let mut els = Vec::new();
                    for (t, v) in &basis.elements {
                        let mut terms = Vec::new();
                        for idx in v.support() {
                            terms.push(format!(
                                "{{\"pair\":\"{}\",\"coeff\":{}}}",
                                basis.ctx.pair_label(idx),
                                cyclo_json(&v.coeffs[idx])
                            ));
                        }
                        els.push(format!(
                            "{{\"label\":\"{}\",\"terms\":[{}]}}",
                            basis.ctx.pair_label(*t),
                            terms.join(",")
                        ));
                    }
                    println!("{{\"case\":\"{:?}\",\"elements\":[{}]}}", case, els.join(","));
                    Ok(())
                }
                other => Err(format!("unknown emit target {:?}", other)),
            }
        }
        Command::Verify { suite, max_d } => verify(&suite, max_d),
    }
}

fn emit_table(d: u32, text: String, format: Format) -> Result<(), String> {
    match format {
        Format::Json => {
            let rows = parse_table(d, &text)?;
            let mut out = Vec::new();
            for row in rows {
                let span: Vec<String> = row.entries.iter().map(|e| format!("\"{}\"", e)).collect();
                out.push(format!(
                    "{{\"set\":\"{}\",\"span\":[{}],\"boxed\":\"{}\"}}",
                    row.key,
                    span.join(","),
                    row.entries[row.boxed]
                ));
            }
            println!("{{\"rows\":[{}]}}", out.join(","));
        }
        _ => print!("{}", text),
    }
    Ok(())
}

fn cyclo_json(v: &CycloNumber) -> String {
    if let Some(q) = v.as_rational() {
        format!("\"{}\"", q)
    } else {
        let coeffs: Vec<String> = v.coeffs().iter().map(|c| format!("\"{}\"", c)).collect();
        format!("{{\"conductor\":60,\"coeffs\":[{}]}}", coeffs.join(","))
    }
}

/// Accept the human-facing constant names and map them to library names.
fn parse_lambda_name(text: &str) -> String {
    let t = text.trim();
    if let Some(inner) = t.strip_prefix("Lambda'(").and_then(|s| s.strip_suffix(')')) {
        return format!("'{}", normalize_lambda_arg(inner));
    }
    if let Some(inner) = t.strip_prefix("Lambda(").and_then(|s| s.strip_suffix(')')) {
        return normalize_lambda_arg(inner);
    }
    t.to_string()
}

fn normalize_lambda_arg(inner: &str) -> String {
    match inner {
        "z" | "zeta" => "zeta^1".to_string(),
        "z2" | "zeta,z2" | "z,z2" => "zeta^1".to_string(),
        "i" => "i^1".to_string(),
        "-i" => "i^3".to_string(),
        "theta" => "theta^1".to_string(),
        other => other.to_string(),
    }
}

fn verify(suite: &str, max_d: u32) -> Result<(), String> {
    let run_all = suite == "all";
    let mut failures = 0usize;
    let mut check = |name: &str, ok: Result<(), String>| match ok {
        Ok(()) => println!("{}: PASS", name),
        Err(e) => {
            failures += 1;
            println!("{}: FAIL - {}", name, e);
        }
    };

    if run_all || suite == "sd" {
        check("sd-enumeration", {
            let mut r = Ok(());
            for d in (0..=max_d).step_by(2) {
                if enumerate_s(d).len() != 1usize << d {
                    r = Err(format!("|S_{}| wrong", d));
                }
            }
            for d in (1..max_d).step_by(2) {
                if enumerate_s_odd(d).len() != 1usize << (d - 1) {
                    r = Err(format!("|S_{}| wrong", d));
                }
            }
            r
        });
        check("sd-axioms", {
            let mut r = Ok(());
            for d in (0..=max_d).step_by(2) {
                if enumerate_s(d) != oracle::enumerate_s_prime(d) {
                    r = Err(format!("family mismatch at D={}", d));
                }
            }
            r
        });
        check("sd-triangularity", {
            let mut r = Ok(());
            for d in (2..=max_d.min(6)).step_by(2) {
                let ord = SdOrder::new(d);
                if !membership_matrix(&ord).is_unitriangular_for(&ord)
                    || !change_of_basis(&ord).is_unitriangular_for(&ord)
                {
                    r = Err(format!("triangularity fails at D={}", d));
                }
            }
            r
        });
        check("sd-bipositivity", {
            let mut r = Ok(());
            for d in (2..=max_d).step_by(2) {
                for b in enumerate_s(d) {
                    if !symplectic_fourier(&VFunction::psi_cap(&b)).is_nonneg() {
                        r = Err(format!("negative transform at D={}", d));
                    }
                }
            }
            r
        });
    }
    if run_all || suite == "tables" {
        for d in [2u32, 4, 6] {
            if d > max_d {
                continue;
            }
            check(&format!("table-d{}", d), {
                render_sd_table(d).and_then(|text| {
                    let rows = parse_table(d, &text)?;
                    verify_even_rows(d, &rows)?;
                    if Some(text.as_str()) != fixture_text(d) {
                        return Err("fixture mismatch".into());
                    }
                    Ok(())
                })
            });
        }
        for d in [3u32, 5, 7] {
            if d > max_d + 1 {
                continue;
            }
            check(&format!("table-odd-d{}", d), {
                render_sd_odd_table(d).and_then(|text| {
                    let rows = parse_table(d, &text)?;
                    verify_odd_rows(d, &rows)?;
                    if Some(text.as_str()) != fixture_text(d) {
                        return Err("fixture mismatch".into());
                    }
                    Ok(())
                })
            });
        }
    }
    if run_all || suite == "fourier" {
        for name in ["S2", "S3", "S4", "S5", "S2xS2", "S3xS2", "D10"] {
            check(&format!("fourier-involution-{}", name), {
                let ctx = MContext::catalog(name);
                let m = fourier_matrix(&ctx);
                let n = ctx.n_pairs();
                let mut r = Ok(());
                'outer: for a in 0..n {
                    for b in 0..n {
                        let mut acc = CycloNumber::zero();
                        for (k, mak) in m[a].iter().enumerate() {
                            acc += &(mak * &m[k][b]);
                        }
                        let want =
                            if a == b { CycloNumber::one() } else { CycloNumber::zero() };
                        if acc != want {
                            r = Err(format!("A^2 != I at ({},{})", a, b));
                            break 'outer;
                        }
                    }
                }
                r
            });
        }
        check("fourier-library-ge0", {
            let lib = lambda_library();
            let mut r = Ok(());
            for lam in &lib {
                if !lam.vector.is_ge0() {
                    r = Err(format!("{} not >= 0", lam.name));
                }
            }
            r
        });
    }
    if run_all || suite == "exc" {
        for case in Case::all() {
            check(&format!("exc-{:?}", case), {
                let basis = build_exceptional_basis(case);
                let mut r = Ok(());
                if let Some(fix) = expansions_fixture(case) {
                    if render_expansions(&basis) != fix {
                        r = Err("expansion fixture mismatch".into());
                    }
                }
                if let Some(fix) = matrix_fixture(case) {
                    if render_matrix(&basis)? != fix {
                        r = Err("matrix fixture mismatch".into());
                    }
                }
                let report = check_properties(&basis);
                if !report.all() {
                    r = Err(format!("properties fail: {:?}", report.failures));
                }
                r
            });
        }
        check("exc-fourier-bipositive", {
            let lib = lambda_library();
            let mut r = Ok(());
            for case in [Case::C2, Case::G2, Case::E6] {
                let basis = build_exceptional_basis(case);
                let m = fourier_matrix(&basis.ctx);
                for (t, v) in &basis.elements {
                    if !fourier_apply(&m, v).is_ge0() {
                        r = Err(format!("A(hat {}) < 0", basis.ctx.pair_label(*t)));
                    }
                }
            }
            let _ = lib;
            r
        });
    }
    if failures == 0 {
        Ok(())
    } else {
        Err(format!("{} check(s) failed", failures))
    }
}
