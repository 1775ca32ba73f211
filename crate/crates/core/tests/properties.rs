//! Randomized invariants over the arithmetic and code machinery.

mod common;

use common::gf;
use galois_hulls::json::GrsSpecJson;
use galois_hulls::{FieldSpec, Fq, GrsSpec, LinearCode, Matrix, MdsStrategy, MdsVerdict};
use proptest::prelude::*;
use std::sync::Arc;

fn arb_field() -> impl Strategy<Value = Arc<FieldSpec>> {
    prop_oneof![
        Just(gf(2, 1)),
        Just(gf(2, 2)),
        Just(gf(3, 1)),
        Just(gf(5, 1)),
        Just(gf(3, 2)),
        Just(gf(3, 3)),
        Just(gf(3, 4)),
    ]
}

proptest! {
    #[test]
    fn frobenius_is_additive_and_multiplicative(
        f in arb_field(),
        i in 0u64..1_000_000,
        j in 0u64..1_000_000,
        e in 0u32..8,
    ) {
        let x = f.element(i % f.q()).unwrap();
        let y = f.element(j % f.q()).unwrap();
        prop_assert_eq!(f.frobenius(f.mul(x, y), e), f.mul(f.frobenius(x, e), f.frobenius(y, e)));
        prop_assert_eq!(f.frobenius(f.add(x, y), e), f.add(f.frobenius(x, e), f.frobenius(y, e)));
    }

    #[test]
    fn frobenius_composes_mod_h(
        f in arb_field(),
        i in 0u64..1_000_000,
        e1 in 0u32..8,
        e2 in 0u32..8,
    ) {
        let x = f.element(i % f.q()).unwrap();
        let once = f.frobenius(f.frobenius(x, e1), e2);
        prop_assert_eq!(once, f.frobenius(x, (e1 + e2) % f.h()));
        // h applications are the identity.
        let mut y = x;
        for _ in 0..f.h() {
            y = f.frobenius(y, 1);
        }
        prop_assert_eq!(y, x);
    }

    #[test]
    fn rank_nullity_random_matrices(
        f in arb_field(),
        rows in 1usize..=8,
        cols in 1usize..=8,
        seed in any::<u64>(),
    ) {
        let mut state = seed;
        let entries: Vec<Fq> = (0..rows * cols)
            .map(|_| {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                f.element((state >> 33) % f.q()).unwrap()
            })
            .collect();
        let m = Matrix::new(f.clone(), rows, cols, entries).unwrap();
        let k = m.kernel_basis();
        prop_assert_eq!(k.rows() + m.rank(), cols);
        prop_assert_eq!(k.cols(), cols);
        // Every kernel row is annihilated.
        for r in 0..k.rows() {
            for row in 0..rows {
                let mut acc = Fq::ZERO;
                for c in 0..cols {
                    acc = f.add(acc, f.mul(m.get(row, c), k.get(r, c)));
                }
                prop_assert_eq!(acc, Fq::ZERO);
            }
        }
    }

    #[test]
    fn intersection_dimension_formula(
        f in arb_field(),
        ra in 1usize..=4,
        rb in 1usize..=4,
        cols in 2usize..=4,
        seed in any::<u64>(),
    ) {
        let mut state = seed;
        let mut mk = |rows: usize| {
            let entries: Vec<Fq> = (0..rows * cols)
                .map(|_| {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(99991);
                    f.element((state >> 33) % f.q()).unwrap()
                })
                .collect();
            Matrix::new(f.clone(), rows, cols, entries).unwrap()
        };
        let a = mk(ra);
        let b = mk(rb);
        let inter = a.rowspace_intersection(&b).unwrap();
        prop_assert_eq!(inter.rows(), a.rank() + b.rank() - a.stack(&b).unwrap().rank());
        for r in 0..inter.rows() {
            prop_assert!(a.row_space_contains(inter.row(r)).unwrap());
            prop_assert!(b.row_space_contains(inter.row(r)).unwrap());
        }
    }

    #[test]
    fn random_grs_specs_generate_mds_codes(
        n in 2usize..=6,
        k in 1usize..=4,
        extended in any::<bool>(),
        seed in any::<u64>(),
    ) {
        let f = gf(3, 2);
        prop_assume!(k <= n);
        let mut state = seed;
        let mut next = |bound: u64| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(7);
            (state >> 33) % bound
        };
        let mut pool: Vec<u64> = (0..f.q()).collect();
        let mut a = Vec::with_capacity(n);
        for _ in 0..n {
            let i = next(pool.len() as u64) as usize;
            a.push(f.element(pool.swap_remove(i)).unwrap());
        }
        let v: Vec<Fq> = (0..n).map(|_| f.element(1 + next(f.q() - 1)).unwrap()).collect();
        let spec = GrsSpec::new(f.clone(), a, v, k, extended).unwrap();
        let code = spec.generator_matrix();
        prop_assert_eq!(code.k(), k);
        prop_assert_eq!(code.n(), n + usize::from(extended));
        prop_assert_eq!(code.is_mds(MdsStrategy::Auto), MdsVerdict::ProvedMds);
        // Hull dimension is bounded by min(k, n-k) at every parameter.
        for e in 0..f.h() {
            let rep = code.hull(e);
            prop_assert!(rep.dim <= code.k().min(code.n() - code.k()));
        }
    }

    #[test]
    fn spec_json_round_trip(
        n in 2usize..=6,
        k in 1usize..=4,
        extended in any::<bool>(),
        seed in any::<u64>(),
    ) {
        let f = gf(3, 3);
        prop_assume!(k <= n);
        let mut state = seed;
        let mut next = |bound: u64| {
            state = state.wrapping_mul(2862933555777941757).wrapping_add(3037000493);
            (state >> 33) % bound
        };
        let mut pool: Vec<u64> = (0..f.q()).collect();
        let mut a = Vec::with_capacity(n);
        for _ in 0..n {
            let i = next(pool.len() as u64) as usize;
            a.push(f.element(pool.swap_remove(i)).unwrap());
        }
        let v: Vec<Fq> = (0..n).map(|_| f.element(1 + next(f.q() - 1)).unwrap()).collect();
        let spec = GrsSpec::new(f.clone(), a, v, k, extended).unwrap();
        let text = serde_json::to_string(&GrsSpecJson::of(&spec)).unwrap();
        let parsed: GrsSpecJson = serde_json::from_str(&text).unwrap();
        let back = parsed.to_spec().unwrap();
        prop_assert_eq!(spec.locators(), back.locators());
        prop_assert_eq!(spec.multipliers(), back.multipliers());
        prop_assert_eq!(spec.k(), back.k());
        prop_assert_eq!(spec.extended(), back.extended());
    }

    #[test]
    fn matrix_text_round_trip(
        f in arb_field(),
        rows in 0usize..=4,
        cols in 1usize..=5,
        seed in any::<u64>(),
    ) {
        let mut state = seed;
        let entries: Vec<Fq> = (0..rows * cols)
            .map(|_| {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(12345);
                f.element((state >> 33) % f.q()).unwrap()
            })
            .collect();
        let m = Matrix::new(f.clone(), rows, cols, entries).unwrap();
        let back = Matrix::from_text(f.clone(), &m.to_text()).unwrap();
        prop_assert_eq!(m, back);
    }

    #[test]
    fn dual_is_a_complement_in_dimension(
        f in arb_field(),
        n in 1usize..=6,
        rows in 1usize..=6,
        e in 0u32..4,
        seed in any::<u64>(),
    ) {
        prop_assume!(rows <= n);
        let mut state = seed;
        let entries: Vec<Fq> = (0..rows * n)
            .map(|_| {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(888);
                f.element((state >> 33) % f.q()).unwrap()
            })
            .collect();
        let code = LinearCode::from_span(&Matrix::new(f.clone(), rows, n, entries).unwrap());
        let dual = code.galois_dual(e);
        prop_assert_eq!(code.k() + dual.k(), n);
    }
}
