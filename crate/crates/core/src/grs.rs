//! GRS and extended GRS codes over GF(q).
//!
//! A [`GrsSpec`] is the pair (a, v) of pairwise-distinct code locators
//! and nonzero column multipliers plus a dimension k. The code is
//! {(v_1 f(a_1), ..., v_n f(a_n)) : deg f <= k-1}; the extended variant
//! appends the coefficient of x^(k-1) as an extra coordinate.
//!
//! Self-orthogonality at Galois parameter e is certified by a
//! [`Witness`]: a monic polynomial h and scalar lambda with
//! lambda * u_i * h(a_i) = v_i^(p^e + 1) at every locator, where
//! u_i = prod_{j != i} (a_i - a_j)^{-1}. The witness is recovered by
//! Lagrange interpolation and is unique given (spec, e).

use std::sync::Arc;

use crate::code::LinearCode;
use crate::field::{check_distinct, FieldSpec, Fq};
use crate::linalg::Matrix;
use crate::poly::Poly;
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct GrsSpec {
    field: Arc<FieldSpec>,
    a: Vec<Fq>,
    v: Vec<Fq>,
    k: usize,
    extended: bool,
}

/// Certificate that a GRS spec is e-Galois self-orthogonal:
/// lambda * u_i * h(a_i) = v_i^(p^e+1) for all i, with h monic.
#[derive(Clone, Debug)]
pub struct Witness {
    pub h_poly: Poly,
    pub lambda: Fq,
    pub e: u32,
}

impl Witness {
    pub fn deg_h(&self) -> usize {
        self.h_poly
            .degree()
            .expect("witness polynomial is monic, never zero")
    }

    /// Checks the defining identity pointwise against `spec`.
    pub fn verify(&self, spec: &GrsSpec) -> bool {
        if !self.h_poly.is_monic() || self.lambda.is_zero() {
            return false;
        }
        let f = spec.field();
        let Ok(u) = compute_u(f, spec.locators()) else {
            return false;
        };
        let Ok(pe1) = power_exponent(f, self.e) else {
            return false;
        };
        spec.locators()
            .iter()
            .zip(&spec.v)
            .zip(&u)
            .all(|((&ai, &vi), &ui)| {
                let lhs = f.mul(self.lambda, f.mul(ui, self.h_poly.eval(f, ai)));
                lhs == f.pow(vi, pe1)
            })
    }
}

/// p^e + 1 as a u64 exponent; e is reduced mod h first.
pub(crate) fn power_exponent(f: &FieldSpec, e: u32) -> Result<u64> {
    let e = e % f.h();
    let mut pe = 1u64;
    for _ in 0..e {
        pe = pe
            .checked_mul(f.p())
            .ok_or_else(|| Error::TooLarge("p^e overflows".into()))?;
    }
    Ok(pe + 1)
}

/// u_i = prod_{j != i} (a_i - a_j)^{-1} for pairwise-distinct locators.
pub fn compute_u(f: &FieldSpec, a: &[Fq]) -> Result<Vec<Fq>> {
    if a.len() < 2 {
        return Err(Error::InvalidParameter(
            "locator products need at least two locators".into(),
        ));
    }
    check_distinct(a)?;
    let mut out = Vec::with_capacity(a.len());
    for (i, &ai) in a.iter().enumerate() {
        let mut prod = Fq::ONE;
        for (j, &aj) in a.iter().enumerate() {
            if i != j {
                prod = f.mul(prod, f.sub(ai, aj));
            }
        }
        out.push(f.inv(prod)?);
    }
    Ok(out)
}

impl GrsSpec {
    pub fn new(
        field: Arc<FieldSpec>,
        a: Vec<Fq>,
        v: Vec<Fq>,
        k: usize,
        extended: bool,
    ) -> Result<GrsSpec> {
        if a.len() != v.len() {
            return Err(Error::DimensionMismatch(
                "locators and multipliers must have equal length".into(),
            ));
        }
        check_distinct(&a)?;
        if a.iter().any(|x| x.index() >= field.q()) || v.iter().any(|x| x.index() >= field.q()) {
            return Err(Error::SpecMismatch);
        }
        if v.iter().any(|x| x.is_zero()) {
            return Err(Error::InvalidParameter(
                "column multipliers must be nonzero".into(),
            ));
        }
        let max_k = a.len() + usize::from(extended);
        if k == 0 || k > max_k {
            return Err(Error::InvalidParameter(format!(
                "dimension k = {k} out of range 1..={max_k}"
            )));
        }
        Ok(GrsSpec {
            field,
            a,
            v,
            k,
            extended,
        })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn field_arc(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    pub fn locators(&self) -> &[Fq] {
        &self.a
    }

    pub fn multipliers(&self) -> &[Fq] {
        &self.v
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn extended(&self) -> bool {
        self.extended
    }

    /// Number of locators (the code length is one more when extended).
    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn code_length(&self) -> usize {
        self.a.len() + usize::from(self.extended)
    }

    /// Same locators/multipliers with a different dimension.
    pub fn with_k(&self, k: usize) -> Result<GrsSpec> {
        GrsSpec::new(
            self.field.clone(),
            self.a.clone(),
            self.v.clone(),
            k,
            self.extended,
        )
    }

    /// The k x n (or k x (n+1)) generator matrix: row r is
    /// (v_1 a_1^r, ..., v_n a_n^r), plus the extra coordinate column
    /// (0, ..., 0, 1)^T when extended.
    pub fn generator_matrix(&self) -> LinearCode {
        let f = &*self.field;
        let cols = self.code_length();
        let mut entries = Vec::with_capacity(self.k * cols);
        let mut powers = vec![Fq::ONE; self.n()];
        for r in 0..self.k {
            for (&vi, &pw) in self.v.iter().zip(&powers) {
                entries.push(f.mul(vi, pw));
            }
            if self.extended {
                entries.push(if r + 1 == self.k { Fq::ONE } else { Fq::ZERO });
            }
            if r + 1 < self.k {
                for (pw, &ai) in powers.iter_mut().zip(&self.a) {
                    *pw = f.mul(*pw, ai);
                }
            }
        }
        let m = Matrix::new(self.field.clone(), self.k, cols, entries)
            .expect("entry count matches dimensions");
        LinearCode::new(m).expect("GRS generator matrices have full rank")
    }

    /// Codeword of the message polynomial (degree <= k-1).
    pub fn encode(&self, msg: &Poly) -> Result<Vec<Fq>> {
        if msg.degree().is_some_and(|d| d >= self.k) {
            return Err(Error::InvalidParameter(format!(
                "message degree must be below k = {}",
                self.k
            )));
        }
        let f = &*self.field;
        let mut word: Vec<Fq> = self
            .a
            .iter()
            .zip(&self.v)
            .map(|(&ai, &vi)| f.mul(vi, msg.eval(f, ai)))
            .collect();
        if self.extended {
            word.push(msg.coeff(self.k - 1));
        }
        Ok(word)
    }

    /// Dual-membership witness: the codeword of `msg` lies in the
    /// e-Galois dual of this code iff a polynomial g exists with
    /// u_i g(a_i) = v_i^(p^e+1) f^(p^e)(a_i) at every locator and
    /// deg g <= n-k-1 (plain), or deg g <= n-k with the coefficient of
    /// x^(n-k) equal to -f_{k-1}^(p^e) (extended). The candidate g is
    /// pinned down by Lagrange interpolation; this returns it when the
    /// degree (and leading-coefficient) conditions hold, `None` otherwise.
    pub fn dual_membership_witness(&self, msg: &Poly, e: u32) -> Result<Option<Poly>> {
        if msg.degree().is_some_and(|d| d >= self.k) {
            return Err(Error::InvalidParameter(format!(
                "message degree must be below k = {}",
                self.k
            )));
        }
        let f = &*self.field;
        let n = self.n();
        let e = e % f.h();
        let u = compute_u(f, &self.a)?;
        let pe1 = power_exponent(f, e)?;
        let ys: Vec<Fq> = (0..n)
            .map(|i| {
                let fv = f.frobenius(msg.eval(f, self.a[i]), e);
                let num = f.mul(f.pow(self.v[i], pe1), fv);
                f.div(num, u[i]).expect("u_i is nonzero")
            })
            .collect();
        let g = Poly::interpolate(f, &self.a, &ys)?;
        let fits = if self.extended {
            let bound_ok = g.degree().is_none_or(|d| d + self.k <= n);
            let lead_ok = g.coeff(n - self.k) == f.neg(f.frobenius(msg.coeff(self.k - 1), e));
            bound_ok && lead_ok
        } else {
            g.degree().is_none_or(|d| d + self.k < n)
        };
        Ok(fits.then_some(g))
    }

    /// True iff the code is e-Galois self-orthogonal, i.e. the Gram-like
    /// matrix G sigma(G)^T vanishes, where sigma raises entries to the
    /// p^e-th power.
    pub fn check_self_orthogonal(&self, e: u32) -> bool {
        let f = &*self.field;
        let e = e % f.h();
        let code = self.generator_matrix();
        let twisted = code.gen().map(|x| f.frobenius(x, e)).transpose();
        code.gen()
            .mul(&twisted)
            .expect("compatible dimensions")
            .is_zero()
    }

    /// Recovers the self-orthogonality certificate (h, lambda) at
    /// parameter e by interpolating through (a_i, u_i^{-1} v_i^(p^e+1)).
    /// The interpolant has degree <= n-k-1 whenever the code is
    /// self-orthogonal; a violation would contradict the certificate
    /// theory, so it is a hard assertion.
    pub fn recover_witness(&self, e: u32) -> Result<Witness> {
        let f = &*self.field;
        let e = e % f.h();
        if self.extended && self.k < 2 {
            return Err(Error::InvalidParameter(
                "extended witnesses require k >= 2".into(),
            ));
        }
        if !self.check_self_orthogonal(e) {
            return Err(Error::NotSelfOrthogonal { e });
        }
        let n = self.n();
        let u = compute_u(f, &self.a)?;
        let pe1 = power_exponent(f, e)?;
        let ys: Vec<Fq> = (0..n)
            .map(|i| f.div(f.pow(self.v[i], pe1), u[i]).expect("u_i nonzero"))
            .collect();
        let g = Poly::interpolate(f, &self.a, &ys)?;
        let d = g
            .degree()
            .expect("interpolant of nonzero values is nonzero");
        assert!(
            d + self.k < n,
            "self-orthogonal interpolant must have degree <= n-k-1"
        );
        let (h_poly, lambda) = g.monic(f)?;
        Ok(Witness { h_poly, lambda, e })
    }
}

/// Exhaustive multiplier search: the first (in deterministic order)
/// vector v making GRS_k(a, v) (or the extended variant) e-Galois
/// self-orthogonal, or `None` when no such v exists.
///
/// Self-orthogonality depends on v only through w_i = v_i^(p^e+1), so the
/// search runs coordinatewise over the subgroup of (p^e+1)-th powers and
/// lifts each solution through the deterministic root extractor.
pub fn find_self_orthogonal(
    field: &Arc<FieldSpec>,
    a: &[Fq],
    k: usize,
    e: u32,
    extended: bool,
) -> Result<Option<GrsSpec>> {
    let f = &**field;
    let n = a.len();
    check_distinct(a)?;
    if n < 2 || k == 0 || k > n + usize::from(extended) {
        return Err(Error::InvalidParameter("empty or overfull search".into()));
    }
    let e = e % f.h();
    let d = power_exponent(f, e)?;
    let m = f.q() - 1;
    let step = crate::field::gcd_u64(d % m, m).max(1);
    let subgroup: Vec<Fq> = (0..m / step)
        .map(|j| f.pow(f.generator(), j * step))
        .collect();

    // Conditions: sum_i w_i a_i^(r + s p^e) = rhs(r, s), with rhs = -1 on
    // the extended (k-1, k-1) condition and 0 elsewhere. Conflicting
    // right-hand sides on one exponent mean no solution at all.
    let pe = d - 1;
    let mut conds: Vec<(u64, Fq)> = Vec::new();
    for r in 0..k as u64 {
        for s in 0..k as u64 {
            let ex = r + s * pe;
            let rhs = if extended && r == k as u64 - 1 && s == k as u64 - 1 {
                f.neg(Fq::ONE)
            } else {
                Fq::ZERO
            };
            match conds.iter().find(|(x, _)| *x == ex) {
                Some((_, prev)) if *prev != rhs => return Ok(None),
                Some(_) => {}
                None => conds.push((ex, rhs)),
            }
        }
    }
    conds.sort_by_key(|&(ex, _)| ex);
    let coef: Vec<Vec<Fq>> = conds
        .iter()
        .map(|&(ex, _)| a.iter().map(|&ai| f.pow(ai, ex)).collect())
        .collect();

    let branching = (subgroup.len() as u128).checked_pow(n as u32 - 1);
    if branching.is_none_or(|b| b > 20_000_000) {
        return Err(Error::TooLarge(format!(
            "{}^{} search branches",
            subgroup.len(),
            n - 1
        )));
    }

    let searcher = Searcher {
        f,
        field,
        a,
        k,
        extended,
        subgroup: &subgroup,
        conds: &conds,
        coef: &coef,
        // The last coordinate can be solved from the first condition
        // whenever its coefficient is invertible.
        solve_last: !coef[0][n - 1].is_zero(),
        d,
    };
    let mut w = vec![Fq::ZERO; n];
    let mut partial = vec![Fq::ZERO; conds.len()];
    Ok(searcher.dfs(&mut w, &mut partial, 0))
}

struct Searcher<'a> {
    f: &'a FieldSpec,
    field: &'a Arc<FieldSpec>,
    a: &'a [Fq],
    k: usize,
    extended: bool,
    subgroup: &'a [Fq],
    conds: &'a [(u64, Fq)],
    coef: &'a [Vec<Fq>],
    solve_last: bool,
    d: u64,
}

impl Searcher<'_> {
    fn dfs(&self, w: &mut Vec<Fq>, partial: &mut Vec<Fq>, depth: usize) -> Option<GrsSpec> {
        let f = self.f;
        let n = self.a.len();
        let limit = if self.solve_last { n - 1 } else { n };
        if depth == limit {
            return self.try_leaf(w, partial);
        }
        for &cand in self.subgroup {
            w[depth] = cand;
            let saved = partial.clone();
            for (ci, p) in partial.iter_mut().enumerate() {
                *p = f.add(*p, f.mul(cand, self.coef[ci][depth]));
            }
            if let Some(hit) = self.dfs(w, partial, depth + 1) {
                return Some(hit);
            }
            *partial = saved;
        }
        None
    }

    fn try_leaf(&self, w: &mut [Fq], partial: &mut [Fq]) -> Option<GrsSpec> {
        let f = self.f;
        let n = self.a.len();
        if self.solve_last {
            let needed = f.sub(self.conds[0].1, partial[0]);
            let cand = f.div(needed, self.coef[0][n - 1]).ok()?;
            if cand.is_zero() || f.nth_root(cand, self.d).is_err() {
                return None;
            }
            w[n - 1] = cand;
            for (ci, p) in partial.iter_mut().enumerate() {
                *p = f.add(*p, f.mul(cand, self.coef[ci][n - 1]));
            }
        }
        if partial
            .iter()
            .zip(self.conds)
            .any(|(&got, &(_, rhs))| got != rhs)
        {
            if self.solve_last {
                for (ci, p) in partial.iter_mut().enumerate() {
                    *p = f.sub(*p, f.mul(w[n - 1], self.coef[ci][n - 1]));
                }
            }
            return None;
        }
        let v: Vec<Fq> = w
            .iter()
            .map(|&wi| {
                f.nth_root(wi, self.d)
                    .expect("w lies in the power subgroup")
            })
            .collect();
        if self.solve_last {
            for (ci, p) in partial.iter_mut().enumerate() {
                *p = f.sub(*p, f.mul(w[n - 1], self.coef[ci][n - 1]));
            }
        }
        let spec = GrsSpec::new(
            self.field.clone(),
            self.a.to_vec(),
            v,
            self.k,
            self.extended,
        )
        .expect("searched specs are well-formed");
        Some(spec)
    }
}

/// Hermitian self-orthogonal family on s cosets of the subgroup of order
/// sqrt(q) + 1: n = s (sqrt(q) + 1) locators, dimension s - 1. The
/// multipliers are found by searching monomial certificates h(x) = x^d
/// and scalars lambda until lambda u_i a_i^d is a (sqrt(q)+1)-th power
/// everywhere, then lifting by root extraction.
pub fn hermitian_coset_family(field: &Arc<FieldSpec>, s: u64) -> Result<(GrsSpec, Witness)> {
    let f = &**field;
    if !f.h().is_multiple_of(2) {
        return Err(Error::Hypothesis(
            "Hermitian constructions need an even extension degree".into(),
        ));
    }
    let sq = {
        let mut x = 1u64;
        for _ in 0..f.h() / 2 {
            x *= f.p();
        }
        x
    };
    if s < 2 || s > sq - 1 {
        return Err(Error::InvalidParameter(format!(
            "coset count s = {s} out of range 2..={}",
            sq - 1
        )));
    }
    let g = f.generator();
    let n = (s * (sq + 1)) as usize;
    // Union of the cosets g^c U for c = 0..s-1, U the subgroup of order sq+1.
    let mut a = Vec::with_capacity(n);
    for c in 0..s {
        for j in 0..=sq {
            a.push(f.pow(g, c + j * (sq - 1)));
        }
    }
    check_distinct(&a)?;
    let u = compute_u(f, &a)?;
    let k = (s - 1) as usize;
    let e = f.h() / 2;

    // lambda u_i a_i^d must land in the subgroup of (sq+1)-th powers,
    // which is exactly the kernel of x -> x^(sq-1) complement test below.
    let member = |x: Fq| -> bool { !x.is_zero() && f.pow(x, sq - 1) == Fq::ONE };
    for d in 0..=(2 * sq).min((n - k - 1) as u64) {
        if crate::construct::dimension_bound(f.p(), e, n as u64, d) < k as i64 {
            continue;
        }
        for lj in 0..f.q() - 1 {
            let lambda = f.pow(g, lj);
            let all_in = a
                .iter()
                .zip(&u)
                .all(|(&ai, &ui)| member(f.mul(lambda, f.mul(ui, f.pow(ai, d)))));
            if !all_in {
                continue;
            }
            let v: Vec<Fq> = a
                .iter()
                .zip(&u)
                .map(|(&ai, &ui)| {
                    let w = f.mul(lambda, f.mul(ui, f.pow(ai, d)));
                    f.nth_root(w, sq + 1).expect("membership was checked")
                })
                .collect();
            let spec = GrsSpec::new(field.clone(), a, v, k, false)?;
            let witness = Witness {
                h_poly: Poly::monomial(d as usize),
                lambda,
                e,
            };
            assert!(witness.verify(&spec), "constructed certificate must hold");
            assert!(spec.check_self_orthogonal(e));
            return Ok((spec, witness));
        }
    }
    Err(Error::Hypothesis(format!(
        "no monomial certificate found for s = {s} over GF({})",
        f.q()
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{galois_inner, MdsStrategy, MdsVerdict};

    fn gf(p: u64, h: u32) -> Arc<FieldSpec> {
        Arc::new(FieldSpec::new(p, h).unwrap())
    }

    fn els(f: &FieldSpec, ids: &[u64]) -> Vec<Fq> {
        ids.iter().map(|&i| f.element(i).unwrap()).collect()
    }

    #[test]
    fn locator_products_match_hand_computation() {
        // GF(5), a = (0,1,2): u = (3,4,3).
        let f5 = gf(5, 1);
        let u = compute_u(&f5, &els(&f5, &[0, 1, 2])).unwrap();
        assert_eq!(u, els(&f5, &[3, 4, 3]));

        // GF(3), a = (0,1): u = (2,1).
        let f3 = gf(3, 1);
        let u = compute_u(&f3, &els(&f3, &[0, 1])).unwrap();
        assert_eq!(u, els(&f3, &[2, 1]));
    }

    #[test]
    fn two_point_products_are_antisymmetric() {
        let f = gf(3, 2);
        for i in 0..f.q() {
            for j in 0..f.q() {
                if i == j {
                    continue;
                }
                let a = els(&f, &[i, j]);
                let u = compute_u(&f, &a).unwrap();
                assert_eq!(u[0], f.neg(u[1]));
                assert_eq!(u[0], f.inv(f.sub(a[0], a[1])).unwrap());
            }
        }
    }

    #[test]
    fn repeated_locators_rejected() {
        let f = gf(5, 1);
        assert!(compute_u(&f, &els(&f, &[1, 1, 2])).is_err());
        assert!(GrsSpec::new(f.clone(), els(&f, &[1, 1]), els(&f, &[1, 1]), 1, false).is_err());
    }

    #[test]
    fn lagrange_partition_of_unity() {
        // sum_i u_i prod_{j != i} (x - a_j) = 1 as polynomials.
        for (p, h) in [(5u64, 1u32), (3, 2)] {
            let f = gf(p, h);
            let a = els(&f, &[0, 1, 2, 3]);
            let u = compute_u(&f, &a).unwrap();
            let mut acc = Poly::zero();
            for i in 0..a.len() {
                let others: Vec<Fq> = a
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, &x)| x)
                    .collect();
                acc = acc.add(&f, &Poly::from_roots(&f, &others).scale(&f, u[i]));
            }
            assert_eq!(acc, Poly::one());
        }
    }

    #[test]
    fn generator_matrix_shapes_and_values() {
        let f = gf(5, 1);
        let spec = GrsSpec::new(
            f.clone(),
            els(&f, &[0, 1, 2]),
            els(&f, &[1, 1, 1]),
            2,
            false,
        )
        .unwrap();
        let code = spec.generator_matrix();
        assert_eq!(
            code.gen().row_vecs(),
            vec![els(&f, &[1, 1, 1]), els(&f, &[0, 1, 2])]
        );

        let ext =
            GrsSpec::new(f.clone(), els(&f, &[0, 1, 2]), els(&f, &[1, 1, 1]), 2, true).unwrap();
        let code = ext.generator_matrix();
        assert_eq!(
            code.gen().row_vecs(),
            vec![els(&f, &[1, 1, 1, 0]), els(&f, &[0, 1, 2, 1])]
        );
    }

    #[test]
    fn one_dimensional_generator_is_the_multiplier_row() {
        let f = gf(3, 2);
        let spec = GrsSpec::new(
            f.clone(),
            els(&f, &[0, 1, 3]),
            els(&f, &[4, 5, 7]),
            1,
            false,
        )
        .unwrap();
        assert_eq!(
            spec.generator_matrix().gen().row_vecs(),
            vec![els(&f, &[4, 5, 7])]
        );
    }

    #[test]
    fn grs_codes_are_mds() {
        let f = gf(3, 2);
        let spec = GrsSpec::new(
            f.clone(),
            els(&f, &[0, 1, 2, 3, 4]),
            els(&f, &[1, 2, 7, 5, 8]),
            3,
            false,
        )
        .unwrap();
        let code = spec.generator_matrix();
        assert_eq!(code.k(), 3);
        assert_eq!(code.is_mds(MdsStrategy::Auto), MdsVerdict::ProvedMds);
        let ext = GrsSpec::new(
            f.clone(),
            els(&f, &[0, 1, 2, 3, 4]),
            els(&f, &[1, 2, 7, 5, 8]),
            3,
            true,
        )
        .unwrap();
        assert_eq!(
            ext.generator_matrix().is_mds(MdsStrategy::Auto),
            MdsVerdict::ProvedMds
        );
    }

    #[test]
    fn zero_message_always_has_a_witness() {
        let f = gf(3, 2);
        let spec = GrsSpec::new(
            f.clone(),
            els(&f, &[0, 1, 2]),
            els(&f, &[1, 1, 1]),
            2,
            false,
        )
        .unwrap();
        for e in 0..2 {
            let g = spec.dual_membership_witness(&Poly::zero(), e).unwrap();
            assert_eq!(g, Some(Poly::zero()));
        }
    }

    #[test]
    fn non_orthogonal_unit_vector_has_no_witness() {
        // GF(3), a=(0,1), v=(1,1), k=1, e=0: the codeword (1,1) has self
        // inner product 2 != 0, so the constant message must fail.
        let f = gf(3, 1);
        let spec = GrsSpec::new(f.clone(), els(&f, &[0, 1]), els(&f, &[1, 1]), 1, false).unwrap();
        assert_eq!(spec.dual_membership_witness(&Poly::one(), 0).unwrap(), None);
        assert!(!spec.check_self_orthogonal(0));
    }

    #[test]
    fn witness_matches_dual_membership_exhaustively() {
        // For small specs, compare against the definitional dual check
        // over every message polynomial.
        let f = gf(3, 2);
        let spec = GrsSpec::new(
            f.clone(),
            els(&f, &[0, 1, 2, 3]),
            els(&f, &[1, 4, 2, 7]),
            2,
            false,
        )
        .unwrap();
        let ext = GrsSpec::new(
            f.clone(),
            els(&f, &[0, 1, 2, 3]),
            els(&f, &[1, 4, 2, 7]),
            2,
            true,
        )
        .unwrap();
        for sp in [&spec, &ext] {
            let code = sp.generator_matrix();
            for e in 0..2 {
                for c0 in 0..f.q() {
                    for c1 in 0..f.q() {
                        let msg = Poly::from_coeffs(els(&f, &[c0, c1]));
                        let word = sp.encode(&msg).unwrap();
                        let in_dual = (0..code.k())
                            .all(|r| galois_inner(&f, code.gen().row(r), &word, e).is_zero());
                        let witness = sp.dual_membership_witness(&msg, e).unwrap();
                        assert_eq!(witness.is_some(), in_dual, "e={e} c=({c0},{c1})");
                        if let Some(g) = witness {
                            let u = compute_u(&f, sp.locators()).unwrap();
                            for (i, &ai) in sp.locators().iter().enumerate() {
                                let lhs = f.mul(
                                    f.pow(sp.multipliers()[i], 3u64.pow(e) + 1),
                                    f.frobenius(msg.eval(&f, ai), e),
                                );
                                assert_eq!(lhs, f.mul(u[i], g.eval(&f, ai)));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn exhaustive_finder_and_witness_recovery_at_gf9() {
        // Hermitian parameter over GF(9) is e = 1. Search a length-4
        // dimension-1 spec and recover its certificate.
        let f = gf(3, 2);
        let a = els(&f, &[0, 1, 2, 3]);
        let spec = find_self_orthogonal(&f, &a, 1, 1, false)
            .unwrap()
            .expect("a Hermitian self-orthogonal spec exists at n=4, k=1");
        assert!(spec.check_self_orthogonal(1));
        let w = spec.recover_witness(1).unwrap();
        assert!(w.deg_h() <= 2);
        assert!(w.verify(&spec));
        let u = compute_u(&f, spec.locators()).unwrap();
        for (i, &ai) in spec.locators().iter().enumerate() {
            let lhs = f.mul(w.lambda, f.mul(u[i], w.h_poly.eval(&f, ai)));
            assert_eq!(lhs, f.pow(spec.multipliers()[i], 4));
        }
    }

    #[test]
    fn finder_is_deterministic() {
        let f = gf(3, 2);
        let a = els(&f, &[0, 1, 2, 3]);
        let s1 = find_self_orthogonal(&f, &a, 1, 1, false).unwrap().unwrap();
        let s2 = find_self_orthogonal(&f, &a, 1, 1, false).unwrap().unwrap();
        assert_eq!(s1.multipliers(), s2.multipliers());
    }

    #[test]
    fn self_orthogonality_is_full_hull() {
        // check_self_orthogonal agrees with "hull dimension = k" from the
        // row-reduction oracle across a sweep of small specs.
        let f = gf(3, 2);
        let a = els(&f, &[0, 1, 2]);
        for v0 in 1..f.q() {
            for v1 in 1..f.q() {
                let spec =
                    GrsSpec::new(f.clone(), a.clone(), els(&f, &[v0, v1, 1]), 1, false).unwrap();
                for e in 0..2 {
                    let full = spec.generator_matrix().hull(e).dim == 1;
                    assert_eq!(spec.check_self_orthogonal(e), full, "v=({v0},{v1},1) e={e}");
                }
            }
        }
    }

    #[test]
    fn grs_minimum_distance_is_singleton_optimal() {
        // [4, 2] over GF(5): d = n - k + 1 = 3 by full enumeration.
        let f = gf(5, 1);
        let spec = GrsSpec::new(
            f.clone(),
            els(&f, &[0, 1, 2, 3]),
            els(&f, &[1, 1, 1, 1]),
            2,
            false,
        )
        .unwrap();
        assert_eq!(
            spec.generator_matrix().min_distance_bruteforce().unwrap(),
            3
        );
    }

    #[test]
    fn recover_witness_requires_self_orthogonality() {
        let f = gf(3, 1);
        let spec = GrsSpec::new(f.clone(), els(&f, &[0, 1]), els(&f, &[1, 1]), 1, false).unwrap();
        assert!(matches!(
            spec.recover_witness(0),
            Err(Error::NotSelfOrthogonal { e: 0 })
        ));
    }

    #[test]
    fn hermitian_coset_family_over_gf9() {
        // s = 2: n = 8, k = 1 over GF(9).
        let f = gf(3, 2);
        let (spec, w) = hermitian_coset_family(&f, 2).unwrap();
        assert_eq!(spec.n(), 8);
        assert_eq!(spec.k(), 1);
        assert!(spec.check_self_orthogonal(1));
        assert!(w.verify(&spec));
        let recovered = spec.recover_witness(1).unwrap();
        assert!(recovered.verify(&spec));
    }
}
