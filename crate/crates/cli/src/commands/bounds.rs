//! `ghull bounds` / `ghull reproduce`: dimension-bound tables.

use std::process::ExitCode;

use galois_hulls::construct::{bound_comparison, dimension_bound, hermitian_bound};
use serde::Serialize;

use crate::{CliError, CliResult};

#[derive(Serialize)]
struct BoundRow {
    e_prime: u32,
    k_max: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    exceeds_hermitian: Option<bool>,
}

/// Frozen reference tables. The first is the [6561, k] family over
/// GF(3^8) with a constant certificate; the second is the [520, k]
/// family over GF(3^6) with a degree-7 certificate.
fn reference_table(which: &str) -> CliResult<(u64, u32, u64, u64, Vec<u32>)> {
    match which {
        "example1" => Ok((3, 8, 6561, 0, vec![1, 3, 5, 7])),
        "example5" => Ok((3, 6, 520, 7, vec![0, 2, 4])),
        other => Err(CliError::Parse(format!(
            "unknown table {other:?}; expected example1 or example5"
        ))),
    }
}

pub fn run_reproduce(which: &str, csv: bool, json: bool) -> CliResult<ExitCode> {
    let (p, h, n, deg_h, e_primes) = reference_table(which)?;
    emit(p, h, n, deg_h, &e_primes, csv, json)
}

#[allow(clippy::too_many_arguments)]
pub fn run(
    p: Option<u64>,
    h: Option<u32>,
    n: Option<u64>,
    deg_h: u64,
    e_prime: &[u32],
    reproduce: Option<&str>,
    csv: bool,
    json: bool,
) -> CliResult<ExitCode> {
    if let Some(which) = reproduce {
        return run_reproduce(which, csv, json);
    }
    let (p, n) = match (p, n) {
        (Some(p), Some(n)) => (p, n),
        _ => {
            return Err(CliError::Parse(
                "bounds needs --p and --n (plus --e-prime), or --reproduce".into(),
            ))
        }
    };
    if e_prime.is_empty() {
        return Err(CliError::Parse("no --e-prime values given".into()));
    }
    emit(p, h.unwrap_or(0), n, deg_h, e_prime, csv, json)
}

fn emit(
    p: u64,
    h: u32,
    n: u64,
    deg_h: u64,
    e_primes: &[u32],
    csv: bool,
    json: bool,
) -> CliResult<ExitCode> {
    let rows: Vec<BoundRow> = e_primes
        .iter()
        .map(|&e| BoundRow {
            e_prime: e,
            k_max: dimension_bound(p, e, n, deg_h),
            exceeds_hermitian: if h >= 2 && h.is_multiple_of(2) && e < h / 2 {
                bound_comparison(p, h, e, deg_h, n).ok()
            } else {
                None
            },
        })
        .collect();

    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&rows).expect("rows serialize")
        );
    } else if csv {
        println!("e_prime,k_max");
        for r in &rows {
            println!("{},{}", r.e_prime, r.k_max);
        }
    } else {
        println!(
            "bounds for p={p} n={n} deg_h={deg_h}{}",
            if h > 0 {
                format!(" h={h}")
            } else {
                String::new()
            }
        );
        for r in &rows {
            match r.exceeds_hermitian {
                Some(x) => println!(
                    "  e' = {:>2}  ->  1 <= k <= {}  (beats Hermitian cap {}: {})",
                    r.e_prime,
                    r.k_max,
                    hermitian_bound(p, h, n).unwrap_or(0),
                    x
                ),
                None => println!("  e' = {:>2}  ->  1 <= k <= {}", r.e_prime, r.k_max),
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
