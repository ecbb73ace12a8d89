use std::fs;
use std::io::Write;
use std::time::Instant;

use cpdist_core::closed_form::{
    kmn_det, kmn_formulas, tn_formulas, tn_rmat, tnb_det, tnb_inverse, tnb_inverse_unchecked, tnb_structured, tree_det,
    tree_inverse, StructuredKind,
};
use cpdist_core::lemmas::aibj_analysis;
use cpdist_core::spectra::{claimed_spectrum, principal_submatrix, verify_claim, Part};
use cpdist_core::{
    all_pairs_distances, build_family, det_exact, inverse_exact, laplacian, FamilySpec, Lcg, Rational, RationalMatrix,
};

use crate::args::{Cli, Command, Family, Kind};
use crate::suite::{run_suite, SuiteConfig};
use crate::{CliError, CliResult, Exit};

/// Orders above this skip the Gauss–Jordan side of `bench`.
pub const BENCH_ORACLE_LIMIT: usize = 200;

pub fn dispatch(cli: &Cli, out: &mut dyn Write) -> CliResult<Exit> {
    match cli.command {
        Command::Gen => gen(cli, out),
        Command::Det => det(cli, out),
        Command::Inv => inv(cli, out),
        Command::Verify => verify(cli, out),
        Command::Spectrum => spectrum(cli, out),
        Command::Bench => bench(cli, out),
    }
}

fn need(value: Option<usize>, flag: &str, family: &str) -> CliResult<usize> {
    value.ok_or_else(|| CliError::Usage(format!("--family {family} requires --{flag}")))
}

fn family(cli: &Cli) -> CliResult<Family> {
    cli.family.ok_or_else(|| CliError::Usage("--family is required".into()))
}

/// The book family with `b = 1` is the single block.
fn spec(cli: &Cli) -> CliResult<FamilySpec> {
    Ok(match family(cli)? {
        Family::Tn => FamilySpec::TnSingle {
            n: need(cli.n, "n", "tn")?,
        },
        Family::TnBook => {
            let n = need(cli.n, "n", "tn-book")?;
            match need(cli.b, "b", "tn-book")? {
                1 => FamilySpec::TnSingle { n },
                b => FamilySpec::TnBook { n, b },
            }
        }
        Family::Kmn => FamilySpec::CompleteBipartite {
            m: need(cli.m, "m", "kmn")?,
            n: need(cli.n, "n", "kmn")?,
        },
        Family::Star => FamilySpec::Star {
            n: need(cli.n, "n", "star")?,
        },
        Family::Tree => FamilySpec::random_tree(need(cli.n, "n", "tree")?, &mut Lcg::new(cli.seed)),
        Family::K4 => FamilySpec::K4,
    })
}

fn write_output(cli: &Cli, out: &mut dyn Write, text: &str) -> CliResult<()> {
    match &cli.out {
        Some(path) => fs::write(path, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn gen(cli: &Cli, out: &mut dyn Write) -> CliResult<Exit> {
    let spec = spec(cli)?;
    let m = match (cli.kind, &spec) {
        (Kind::Dist, _) => all_pairs_distances(&build_family(&spec)?)?,
        (Kind::Lap, _) => laplacian(&build_family(&spec)?),
        (Kind::Rmat, FamilySpec::TnSingle { n }) => tn_rmat(*n)?,
        (Kind::Rmat, FamilySpec::TnBook { n, b }) => tnb_structured(StructuredKind::Rmat, *n, *b)?.materialize(),
        (Kind::Rmat, _) => return Err(CliError::Usage("--kind rmat is defined for tn and tn-book only".into())),
    };
    write_output(cli, out, &m.to_csv())?;
    Ok(Exit::Success)
}

/// `D(K_4) = J − I = −I + 1·J`.
fn k4_analysis() -> CliResult<cpdist_core::lemmas::ScalarPlusOnesAnalysis> {
    Ok(aibj_analysis(&Rational::from(-1), &Rational::ONE, 4)?)
}

fn formula_det(spec: &FamilySpec) -> CliResult<Rational> {
    Ok(match spec {
        FamilySpec::TnSingle { n } => tn_formulas(*n)?.result.det,
        FamilySpec::TnBook { n, b } => tnb_det(*n, *b)?,
        FamilySpec::CompleteBipartite { m, n } => kmn_det(*m, *n)?,
        FamilySpec::Star { .. } | FamilySpec::Tree { .. } => tree_det(&build_family(spec)?)?,
        FamilySpec::K4 => k4_analysis()?.det,
    })
}

fn det(cli: &Cli, out: &mut dyn Write) -> CliResult<Exit> {
    let spec = spec(cli)?;
    let formula = formula_det(&spec)?;
    let oracle = det_exact(&all_pairs_distances(&build_family(&spec)?)?)?;
    let matches = formula == oracle;
    writeln!(out, "formula={formula} oracle={oracle} match={matches}")?;
    Ok(if matches {
        Exit::Success
    } else {
        Exit::VerificationFailed
    })
}

fn inv(cli: &Cli, out: &mut dyn Write) -> CliResult<Exit> {
    let spec = spec(cli)?;
    let inverse = match &spec {
        FamilySpec::TnSingle { n } => tn_formulas(*n)?.result.inverse,
        FamilySpec::TnBook { n, b } => Some(tnb_inverse(*n, *b)?),
        FamilySpec::CompleteBipartite { m, n } => kmn_formulas(*m, *n)?.inverse,
        FamilySpec::Star { .. } | FamilySpec::Tree { .. } => Some(tree_inverse(&build_family(&spec)?)?),
        FamilySpec::K4 => k4_analysis()?.inverse,
    };
    let inverse = inverse.ok_or_else(|| CliError::Singular("distance matrix has determinant 0".into()))?;
    write_output(cli, out, &inverse.to_csv())?;
    Ok(Exit::Success)
}

fn verify(cli: &Cli, out: &mut dyn Write) -> CliResult<Exit> {
    let threads = match std::env::var("CPDIST_THREADS") {
        Ok(v) => match v.parse::<usize>() {
            Ok(t) if t > 0 => Some(t),
            _ => {
                return Err(CliError::Usage(format!(
                    "CPDIST_THREADS must be a positive integer, got {v:?}"
                )))
            }
        },
        Err(_) => None,
    };
    let cfg = SuiteConfig {
        seed: cli.seed,
        inject_fault: cli.inject_fault,
        threads,
    };
    let report = run_suite(cli.suite, cfg);
    match cli.json.as_deref() {
        Some("-") => out.write_all(report.to_json()?.as_bytes())?,
        Some(path) => fs::write(path, report.to_json()?)?,
        None => {
            for f in &report.failures {
                writeln!(
                    out,
                    "FAIL {} at {}: expected {}, got {}",
                    serde_json::Value::Object(f.params.clone()),
                    f.location,
                    f.expected,
                    f.actual
                )?;
            }
        }
    }
    eprintln!(
        "suite={} cells={} passed={} failed={} wall_time_ms={}",
        report.suite,
        report.grid.len(),
        report.passed,
        report.failed,
        report.wall_time_ms
    );
    Ok(if report.is_success() {
        Exit::Success
    } else {
        Exit::VerificationFailed
    })
}

fn book_params(cli: &Cli) -> CliResult<(usize, usize)> {
    if !matches!(cli.family, None | Some(Family::TnBook)) {
        return Err(CliError::Usage(
            format!("{:?} is defined for tn-book only", cli.command).to_lowercase(),
        ));
    }
    Ok((need(cli.n, "n", "tn-book")?, need(cli.b, "b", "tn-book")?))
}

fn spectrum(cli: &Cli, out: &mut dyn Write) -> CliResult<Exit> {
    let (n, b) = book_params(cli)?;
    let part: Part = cli
        .part
        .ok_or_else(|| CliError::Usage("--part is required".into()))?
        .into();
    let claim = claimed_spectrum(part, n, b)?;
    let m = principal_submatrix(part, n, b)?;
    let check = verify_claim(&m, &claim)?;
    writeln!(out, "part={part} n={n} b={b} order={}", m.rows())?;
    writeln!(out, "claimed={claim}")?;
    writeln!(out, "claimed_poly={}", check.claimed)?;
    writeln!(out, "computed_poly={}", check.computed)?;
    writeln!(out, "match={}", check.matches)?;
    Ok(if check.matches {
        Exit::Success
    } else {
        Exit::VerificationFailed
    })
}

fn bench(cli: &Cli, out: &mut dyn Write) -> CliResult<Exit> {
    let (n, b) = book_params(cli)?;
    let start = Instant::now();
    let closed = tnb_inverse_unchecked(n, b)?;
    let closed_ms = start.elapsed().as_secs_f64() * 1e3;
    let order = closed.rows();
    writeln!(out, "family=tn-book n={n} b={b} order={order}")?;
    writeln!(out, "closed_form_ms={closed_ms:.3}")?;
    if order > BENCH_ORACLE_LIMIT {
        writeln!(out, "oracle_ms=skipped (order {order} > {BENCH_ORACLE_LIMIT})")?;
        return Ok(Exit::Success);
    }
    let d: RationalMatrix = tnb_structured(StructuredKind::Distance, n, b)?.materialize();
    let start = Instant::now();
    let oracle = inverse_exact(&d)?;
    let oracle_ms = start.elapsed().as_secs_f64() * 1e3;
    writeln!(out, "oracle_ms={oracle_ms:.3}")?;
    writeln!(out, "equal={}", oracle == closed)?;
    Ok(if oracle == closed {
        Exit::Success
    } else {
        Exit::VerificationFailed
    })
}
