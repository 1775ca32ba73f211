//! `ghull verify`: standalone oracle for a GRS spec.

use std::process::ExitCode;
use std::time::Instant;

use galois_hulls::json::{code_report, FieldJson, GrsSpecJson, WitnessJson};
use galois_hulls::{Fq, GrsSpec, MdsStrategy};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::commands::read_input;
use crate::report::VerifyReport;
use crate::{CliError, CliResult};

pub fn run(
    file: Option<&str>,
    e: u32,
    random: Option<&str>,
    field: Option<&str>,
    extended: bool,
    seed: u64,
) -> CliResult<ExitCode> {
    let started = Instant::now();
    let spec = match random {
        Some(nk) => random_spec(nk, field, extended, seed)?,
        None => {
            let text = read_input(file)?;
            let json: GrsSpecJson = serde_json::from_str(&text)?;
            json.to_spec()?
        }
    };
    let f = spec.field();
    let code = spec.generator_matrix();
    let report = code_report(&code, e, MdsStrategy::Auto);
    let self_orthogonal = spec.check_self_orthogonal(e);
    let witness = if self_orthogonal && !(spec.extended() && spec.k() < 2) {
        Some(WitnessJson::of(f, &spec.recover_witness(e)?))
    } else {
        None
    };
    let out = VerifyReport {
        spec: GrsSpecJson::of(&spec),
        e: e % f.h(),
        report,
        self_orthogonal,
        witness,
        wall_time_ms: started.elapsed().as_secs_f64() * 1e3,
    };
    println!(
        "{}",
        serde_json::to_string_pretty(&out).expect("report serializes")
    );
    Ok(ExitCode::SUCCESS)
}

/// Seeded random spec "n,k" over the given field (default GF(9)).
fn random_spec(nk: &str, field: Option<&str>, extended: bool, seed: u64) -> CliResult<GrsSpec> {
    let (n, k) = parse_pair(nk)?;
    let field = match field {
        Some(text) => parse_field(text)?,
        None => FieldJson {
            p: 3,
            h: 2,
            modulus: None,
        }
        .to_spec()?,
    };
    if (n as u64) > field.q() {
        return Err(CliError::Hypothesis(format!(
            "n = {n} exceeds the field size {}",
            field.q()
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pool: Vec<u64> = (0..field.q()).collect();
    pool.shuffle(&mut rng);
    let a: Vec<Fq> = pool[..n]
        .iter()
        .map(|&i| field.element(i))
        .collect::<Result<_, _>>()?;
    let v: Vec<Fq> = (0..n)
        .map(|_| field.element(rng.gen_range(1..field.q())))
        .collect::<Result<_, _>>()?;
    Ok(GrsSpec::new(field, a, v, k, extended)?)
}

fn parse_pair(text: &str) -> CliResult<(usize, usize)> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 2 {
        return Err(CliError::Parse("--random expects \"n,k\"".into()));
    }
    let n = parts[0]
        .trim()
        .parse()
        .map_err(|e| CliError::Parse(format!("bad n: {e}")))?;
    let k = parts[1]
        .trim()
        .parse()
        .map_err(|e| CliError::Parse(format!("bad k: {e}")))?;
    Ok((n, k))
}

/// "p,h" or "p,h,c_h,...,c_0" (modulus leading coefficient first).
pub fn parse_field(text: &str) -> CliResult<std::sync::Arc<galois_hulls::FieldSpec>> {
    let nums: Vec<u64> = text
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<u64>()
                .map_err(|e| CliError::Parse(format!("bad field component {t:?}: {e}")))
        })
        .collect::<CliResult<_>>()?;
    if nums.len() < 2 {
        return Err(CliError::Parse(
            "--field expects \"p,h[,modulus...]\"".into(),
        ));
    }
    let json = FieldJson {
        p: nums[0],
        h: nums[1] as u32,
        modulus: if nums.len() > 2 {
            Some(nums[2..].to_vec())
        } else {
            None
        },
    };
    Ok(json.to_spec()?)
}
