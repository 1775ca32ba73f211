//! Shared brute-force oracles for the integration suites. Everything
//! here works from definitions (inner products, full enumeration) and
//! stays independent of the row-reduction machinery it cross-checks.
#![allow(dead_code)] // each test target uses a different subset

use std::sync::Arc;

use galois_hulls::code::galois_inner;
use galois_hulls::{FieldSpec, Fq, LinearCode};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn gf(p: u64, h: u32) -> Arc<FieldSpec> {
    Arc::new(FieldSpec::new(p, h).unwrap())
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Definitional dual membership: x is e-orthogonal to every generator row.
pub fn in_dual(code: &LinearCode, x: &[Fq], e: u32) -> bool {
    (0..code.k()).all(|r| galois_inner(code.spec(), code.gen().row(r), x, e).is_zero())
}

/// Hull dimension by full codeword enumeration (q^k <= 10^4): counts the
/// codewords lying in the dual and takes log_q.
pub fn hull_dim_exhaustive(code: &LinearCode, e: u32) -> usize {
    let f = code.spec().clone();
    let q = f.q();
    let total = q.pow(code.k() as u32);
    assert!(total <= 10_000, "exhaustive oracle budget");
    let mut count = 0u64;
    for mut idx in 0..total {
        let mut word = vec![Fq::ZERO; code.n()];
        for r in 0..code.k() {
            let c = f.element(idx % q).unwrap();
            idx /= q;
            if c.is_zero() {
                continue;
            }
            for (j, slot) in word.iter_mut().enumerate() {
                *slot = f.add(*slot, f.mul(c, code.gen().get(r, j)));
            }
        }
        if in_dual(code, &word, e) {
            count += 1;
        }
    }
    let mut dim = 0;
    let mut power = 1u64;
    while power < count {
        power *= q;
        dim += 1;
    }
    assert_eq!(power, count, "dual-member count must be a power of q");
    dim
}

/// Every hull basis row must lie in the code and be orthogonal to it.
pub fn assert_hull_sound(code: &LinearCode, e: u32) {
    let rep = code.hull(e);
    for r in 0..rep.dim {
        let row = rep.basis.row(r);
        assert!(code.contains(row).unwrap(), "hull row outside the code");
        assert!(in_dual(code, row, e), "hull row not orthogonal");
    }
    assert!(rep.dim <= code.k().min(code.n() - code.k()));
}

/// n pairwise-distinct random field elements.
pub fn random_locators(r: &mut ChaCha8Rng, f: &Arc<FieldSpec>, n: usize) -> Vec<Fq> {
    let mut all: Vec<u64> = (0..f.q()).collect();
    all.shuffle(r);
    all[..n].iter().map(|&i| f.element(i).unwrap()).collect()
}

pub fn random_nonzero(r: &mut ChaCha8Rng, f: &Arc<FieldSpec>, n: usize) -> Vec<Fq> {
    (0..n)
        .map(|_| f.element(r.gen_range(1..f.q())).unwrap())
        .collect()
}
