//! `ghull enumerate`: stream admissible parameter families as CSV.
//!
//! Columns: class,p,h,q,e,e_prime,m,t,n,k_max,l_max. Classes 1-4 leave
//! m,t,n,k_max,l_max empty because length and dimension depend on the
//! seed's certificate; classes 5/6 list each achievable length with its
//! dimension cap.

use std::io::Write;
use std::process::ExitCode;

use galois_hulls::construct::{dimension_bound, mersenne_feasible};

use crate::{CliError, CliResult};

pub fn run(class: u32, q_bound: u64) -> CliResult<ExitCode> {
    if !(1..=6).contains(&class) {
        return Err(CliError::Parse(format!(
            "unknown class {class}; expected 1..=6"
        )));
    }
    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());
    match stream(&mut out, class, q_bound) {
        Ok(()) => {
            let _ = out.flush();
            Ok(ExitCode::SUCCESS)
        }
        // A closed pipe (e.g. `| head`) ends the stream, not the program.
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(ExitCode::SUCCESS),
        Err(e) => Err(e.into()),
    }
}

fn stream(out: &mut impl Write, class: u32, q_bound: u64) -> std::io::Result<()> {
    writeln!(out, "class,p,h,q,e,e_prime,m,t,n,k_max,l_max")?;
    for p in (2..=q_bound).filter(|&n| galois_hulls::field::is_prime(n)) {
        let mut h = 1u32;
        loop {
            h += 1;
            let q = match (p as u128).checked_pow(h) {
                Some(q) if q <= q_bound as u128 => q as u64,
                _ => break,
            };
            match class {
                1 | 2 => rescaled_rows(out, class, p, h, q)?,
                3 | 4 => hermitian_rows(out, class, p, h, q)?,
                5 | 6 => coset_rows(out, class, p, h, q)?,
                _ => unreachable!(),
            }
        }
    }
    Ok(())
}

/// gcd(e', h) = e with h/e even; q >= 5.
fn rescaled_rows(out: &mut impl Write, class: u32, p: u64, h: u32, q: u64) -> std::io::Result<()> {
    if q < 5 {
        return Ok(());
    }
    for e_prime in 1..h {
        let e = num_integer::gcd(e_prime, h);
        if (h / e).is_multiple_of(2) {
            writeln!(out, "{class},{p},{h},{q},{e},{e_prime},,,,,")?;
        }
    }
    Ok(())
}

/// q odd, h even, h/gcd(e', h) odd; the seed parameter is e = h/2.
fn hermitian_rows(out: &mut impl Write, class: u32, p: u64, h: u32, q: u64) -> std::io::Result<()> {
    if p == 2 || !h.is_multiple_of(2) {
        return Ok(());
    }
    let e = h / 2;
    for e_prime in 0..h {
        let g = num_integer::gcd(e_prime, h);
        if (h / g) % 2 == 1 {
            writeln!(out, "{class},{p},{h},{q},{e},{e_prime},,,,,")?;
        }
    }
    Ok(())
}

/// p odd; m | h, 2^t | h/m, 2^t = p^e + 1; lengths n = w p^(mz).
fn coset_rows(out: &mut impl Write, class: u32, p: u64, h: u32, q: u64) -> std::io::Result<()> {
    if p == 2 {
        return Ok(());
    }
    for m in 1..h {
        if !h.is_multiple_of(m) {
            continue;
        }
        let ratio = h / m;
        let pm = (p as u128).pow(m);
        for e in 0..h {
            let Some(t) = mersenne_feasible(p, e) else {
                continue;
            };
            if t >= 32 || !ratio.is_multiple_of(1u32 << t) {
                continue;
            }
            let mut lengths: Vec<u64> = Vec::new();
            for z in 1..ratio {
                let Some(block) = (pm as u64).checked_pow(z) else {
                    continue;
                };
                for w in 1..=pm as u64 {
                    let n = w.saturating_mul(block);
                    if n <= q {
                        lengths.push(n);
                    }
                }
            }
            lengths.sort_unstable();
            lengths.dedup();
            for n in lengths {
                let k_max = dimension_bound(p, e, n, 0);
                if k_max < 1 {
                    continue;
                }
                let l_max = if class == 6 { k_max - 1 } else { k_max };
                let shown_n = if class == 6 { n + 1 } else { n };
                writeln!(
                    out,
                    "{class},{p},{h},{q},{e},{e},{m},{t},{shown_n},{k_max},{l_max}"
                )?;
            }
        }
    }
    Ok(())
}
