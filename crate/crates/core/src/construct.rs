//! Construction of MDS (extended) GRS codes with prescribed Galois hull
//! dimension, plus the supporting number theory.
//!
//! Three routes produce a code whose hull at parameter e' has dimension
//! exactly l:
//!
//! * [`from_galois_seed`] — rescale a Galois self-orthogonal seed through
//!   a Bezout exponent so its certificate transfers from e to e', then
//!   break orthogonality on exactly s = k - l coordinates by an alpha
//!   twist;
//! * [`from_hermitian_seed`] — same idea starting from a Hermitian
//!   (e = h/2) self-orthogonal seed, via square roots and Bezout target 2;
//! * [`coset_points`] / [`coset_code`] — build evaluation points as cosets
//!   of an F_{p^m}-subspace; the locator products then normalize into the
//!   subfield and 2^t-th roots give multipliers directly, with
//!   2^t = p^e + 1.
//!
//! Every output is meant to be re-verified with the linear-algebra hull
//! oracle; the constructions themselves never trust the theory.

use std::collections::HashSet;
use std::sync::Arc;

use num_integer::Integer;

use crate::field::{checked_pow, FieldSpec, Fq};
use crate::grs::{compute_u, power_exponent, GrsSpec, Witness};
use crate::{Error, Result};

/// The multiplier modification lowering the hull dimension from k to l:
/// first `s` multipliers are scaled by `alpha`, whose (p^e'+1)-th power
/// `beta` differs from 1. `mu`, `nu` solve
/// mu (p^e' + 1) + nu (p^h - 1) = target exactly.
#[derive(Clone, Debug)]
pub struct TwistPlan {
    pub e_prime: u32,
    pub mu: i64,
    pub nu: i64,
    pub alpha: Fq,
    pub beta: Fq,
    pub s: usize,
}

/// A constructed spec together with the twist that produced it.
#[derive(Clone, Debug)]
pub struct ConstructionOutput {
    pub spec: GrsSpec,
    pub plan: TwistPlan,
}

/// gcd(p^r + 1, p^s - 1) by case analysis: 1 when s/gcd(r,s) is odd and
/// p is even, 2 when s/gcd(r,s) is odd and p is odd, and p^gcd(r,s) + 1
/// when s/gcd(r,s) is even.
pub fn galois_gcd(p: u64, r: u32, s: u32) -> u128 {
    assert!(s >= 1 && p >= 2);
    let g = num_integer::gcd(r as u64, s as u64);
    if (s as u64 / g) % 2 == 1 {
        if p.is_multiple_of(2) {
            1
        } else {
            2
        }
    } else {
        checked_pow(p, g as u32).expect("p^gcd(r,s) fits in u128") + 1
    }
}

/// Solves mu (p^e' + 1) + nu (p^h - 1) = target by the extended Euclidean
/// algorithm, canonicalized so 0 <= mu < (p^h - 1) / gcd.
pub fn bezout_twist(p: u64, h: u32, e_prime: u32, target: u128) -> Result<(i64, i64)> {
    let a = (checked_pow(p, e_prime)? + 1) as i128;
    let b = (checked_pow(p, h)? - 1) as i128;
    let ext = a.extended_gcd(&b);
    let g = ext.gcd;
    if target as i128 % g != 0 {
        return Err(Error::Hypothesis(format!(
            "target {target} is not a multiple of gcd(p^{e_prime}+1, p^{h}-1) = {g}"
        )));
    }
    let scale = target as i128 / g;
    let modulus = b / g;
    let mu = (ext.x * scale).rem_euclid(modulus);
    let nu = (target as i128 - mu * a) / b;
    debug_assert_eq!(mu * a + nu * b, target as i128);
    Ok((mu as i64, nu as i64))
}

/// floor((p^e' + n - 1 - deg_h) / (p^e' + 1)): the largest dimension the
/// seed-based constructions can reach. May be non-positive when deg_h is
/// large relative to n, meaning no dimension is achievable.
pub fn dimension_bound(p: u64, e_prime: u32, n: u64, deg_h: u64) -> i64 {
    let pe = checked_pow(p, e_prime).expect("p^e' fits in u128") as i128;
    let num = pe + n as i128 - 1 - deg_h as i128;
    Integer::div_floor(&num, &(pe + 1)) as i64
}

/// floor((sqrt(q) + n - 1) / (sqrt(q) + 1)), the dimension cap most
/// Hermitian self-orthogonality constructions obey. Requires h even.
pub fn hermitian_bound(p: u64, h: u32, n: u64) -> Result<i64> {
    if !h.is_multiple_of(2) {
        return Err(Error::Hypothesis("h must be even".into()));
    }
    Ok(dimension_bound(p, h / 2, n, 0))
}

/// Largest e' for which the second comparison condition can hold:
/// floor(log_p((sqrt(q)(n-3) - (sqrt(q)+1) deg_h - 1) / (sqrt(q)+n-1))),
/// or `None` when the ratio is below 1 (no admissible e' >= 0).
pub fn comparison_threshold(p: u64, h: u32, deg_h: u64, n: u64) -> Result<Option<u32>> {
    if !h.is_multiple_of(2) {
        return Err(Error::Hypothesis("h must be even".into()));
    }
    let sq = checked_pow(p, h / 2)? as i128;
    let num = sq * (n as i128 - 3) - (sq + 1) * deg_h as i128 - 1;
    let den = sq + n as i128 - 1;
    if num < den {
        return Ok(None);
    }
    let mut t = 0u32;
    let mut power = p as i128;
    while power * den <= num {
        t += 1;
        power *= p as i128;
    }
    Ok(Some(t))
}

/// True when the seed-based dimension cap provably exceeds the Hermitian
/// cap floor((sqrt(q)+n-1)/(sqrt(q)+1)): either deg_h = 0 with n >= 3, or
/// deg_h > 0 with e' below [`comparison_threshold`] and n large enough.
/// The exact floor comparison is conjoined because the closed conditions
/// admit floor ties at very small n.
pub fn bound_comparison(p: u64, h: u32, e_prime: u32, deg_h: u64, n: u64) -> Result<bool> {
    if !h.is_multiple_of(2) {
        return Err(Error::Hypothesis("h must be even".into()));
    }
    if e_prime >= h / 2 {
        return Err(Error::InvalidParameter(format!(
            "e' = {e_prime} must satisfy 0 <= e' < h/2 = {}",
            h / 2
        )));
    }
    let cond1 = deg_h == 0 && n >= 3;
    let cond2 = if deg_h > 0 {
        let sq = checked_pow(p, h / 2)? as i128;
        let n_min = ((4 * sq + (sq + 1) * deg_h as i128) / (sq - 1)) as u64;
        match comparison_threshold(p, h, deg_h, n)? {
            Some(t) => e_prime <= t && n >= n_min,
            None => false,
        }
    } else {
        false
    };
    let exceeds = dimension_bound(p, e_prime, n, deg_h) > hermitian_bound(p, h, n)?;
    Ok((cond1 || cond2) && exceeds)
}

/// t with 2^t = p^e + 1 when it exists. e = 0 always gives t = 1;
/// e = 1 needs p to be a Mersenne prime; even e >= 2 never works.
pub fn mersenne_feasible(p: u64, e: u32) -> Option<u32> {
    let v = checked_pow(p, e).ok()? + 1;
    if v.count_ones() == 1 {
        Some(v.trailing_zeros())
    } else {
        None
    }
}

fn check_l_range(k: usize, l: usize, extended: bool) -> Result<usize> {
    let max_l = if extended { k - 1 } else { k };
    if l > max_l {
        return Err(Error::Hypothesis(format!(
            "hull dimension l = {l} out of range 0..={max_l}"
        )));
    }
    Ok(k - l - usize::from(extended))
}

/// Applies the alpha twist to the first `s` of the given base
/// multipliers and packages the result.
#[allow(clippy::too_many_arguments)]
fn twist_and_build(
    field: &Arc<FieldSpec>,
    a: &[Fq],
    base: &[Fq],
    k: usize,
    extended: bool,
    e_prime: u32,
    mu: i64,
    nu: i64,
    s: usize,
) -> Result<ConstructionOutput> {
    let f = &**field;
    let alpha = f.find_alpha(e_prime)?;
    let beta = f.pow(alpha, power_exponent(f, e_prime)?);
    assert_ne!(beta, Fq::ONE, "alpha must break orthogonality");
    let v: Vec<Fq> = base
        .iter()
        .enumerate()
        .map(|(i, &vi)| if i < s { f.mul(alpha, vi) } else { vi })
        .collect();
    let spec = GrsSpec::new(field.clone(), a.to_vec(), v, k, extended)?;
    Ok(ConstructionOutput {
        spec,
        plan: TwistPlan {
            e_prime,
            mu,
            nu,
            alpha,
            beta,
            s,
        },
    })
}

/// Parameter-level admissibility of the Galois-seed route: q >= 5,
/// 1 <= e, e' <= h-1, gcd(e', h) = e and h/e even.
pub fn galois_route_admissible(q: u64, h: u32, e: u32, e_prime: u32) -> Result<()> {
    if q < 5 {
        return Err(Error::Hypothesis("q must be at least 5".into()));
    }
    if e == 0 || e >= h || e_prime == 0 || e_prime >= h {
        return Err(Error::Hypothesis("e and e' must lie in 1..=h-1".into()));
    }
    if num_integer::gcd(e_prime as u64, h as u64) != e as u64 {
        return Err(Error::Hypothesis(format!(
            "gcd(e', h) = gcd({e_prime}, {h}) must equal e = {e}"
        )));
    }
    if !(h / e).is_multiple_of(2) {
        return Err(Error::Hypothesis("h/e must be even".into()));
    }
    Ok(())
}

/// Parameter-level admissibility of the Hermitian-seed route: q odd,
/// h even, 0 <= e' <= h-1 and h/gcd(e', h) odd.
pub fn hermitian_route_admissible(p: u64, h: u32, e_prime: u32) -> Result<()> {
    if p.is_multiple_of(2) {
        return Err(Error::Hypothesis("q must be odd".into()));
    }
    if !h.is_multiple_of(2) {
        return Err(Error::Hypothesis("h must be even".into()));
    }
    if e_prime >= h {
        return Err(Error::Hypothesis("e' must lie in 0..=h-1".into()));
    }
    let g = num_integer::gcd(e_prime as u64, h as u64);
    if (h as u64 / g) % 2 != 1 {
        return Err(Error::Hypothesis(format!(
            "h/gcd(e', h) = {h}/{g} must be odd"
        )));
    }
    Ok(())
}

/// Hull-dimension construction from a Galois self-orthogonal seed.
///
/// The seed certificate (h, lambda) at parameter e = witness.e transfers
/// to e' when gcd(e', h) = e and h/e is even: then p^e + 1 =
/// gcd(p^e'+1, p^h-1) and a Bezout exponent mu turns
/// v_i^(p^e+1) = lambda u_i h(a_i) into (v_i^mu)^(p^e'+1) = lambda u_i
/// h(a_i). Twisting s = k - l coordinates (k - l - 1 when extended)
/// pins the e'-hull dimension to exactly l for any
/// 1 <= k <= floor((p^e' + n - 1 - deg h)/(p^e' + 1)).
pub fn from_galois_seed(
    seed: &GrsSpec,
    witness: &Witness,
    e_prime: u32,
    k: usize,
    l: usize,
) -> Result<ConstructionOutput> {
    let field = seed.field_arc().clone();
    let f = &*field;
    let (p, h) = (f.p(), f.h());
    let e = witness.e % h;
    galois_route_admissible(f.q(), h, e, e_prime)?;
    if seed.extended() && seed.k() < 2 {
        return Err(Error::Hypothesis(
            "extended seeds need dimension m >= 2".into(),
        ));
    }
    if !witness.verify(seed) {
        return Err(Error::NotSelfOrthogonal { e });
    }
    let deg_h = witness.deg_h();
    if deg_h + seed.k() + 1 > seed.n() {
        return Err(Error::Hypothesis(
            "certificate degree must satisfy deg h <= n - m - 1".into(),
        ));
    }
    let bound = dimension_bound(p, e_prime, seed.n() as u64, deg_h as u64);
    if k == 0 || (k as i64) > bound {
        return Err(Error::Hypothesis(format!(
            "k = {k} out of range 1..={bound}"
        )));
    }
    let s = check_l_range(k, l, seed.extended())?;
    let target = checked_pow(p, e)? + 1;
    let (mu, nu) = bezout_twist(p, h, e_prime, target)?;
    let base: Vec<Fq> = seed
        .multipliers()
        .iter()
        .map(|&vi| f.pow(vi, mu as u64))
        .collect();
    twist_and_build(
        &field,
        seed.locators(),
        &base,
        k,
        seed.extended(),
        e_prime,
        mu,
        nu,
        s,
    )
}

/// Hull-dimension construction from a Hermitian self-orthogonal seed.
///
/// Requires q odd, h even and h/gcd(e', h) odd, with the seed certified
/// at e = h/2. Then v_i^(sqrt(q)+1) lies in the subfield F_sqrt(q), hence
/// is a square v_i'^2; the Bezout exponent for target 2 turns the
/// certificate into one at e', and the alpha twist fixes the hull
/// dimension as in [`from_galois_seed`]. e' = 0 (Euclidean hulls) is
/// allowed.
pub fn from_hermitian_seed(
    seed: &GrsSpec,
    witness: &Witness,
    e_prime: u32,
    k: usize,
    l: usize,
) -> Result<ConstructionOutput> {
    let field = seed.field_arc().clone();
    let f = &*field;
    let (p, h) = (f.p(), f.h());
    hermitian_route_admissible(p, h, e_prime)?;
    if witness.e % h != h / 2 {
        return Err(Error::Hypothesis(
            "the seed certificate must be Hermitian (e = h/2)".into(),
        ));
    }
    if seed.extended() && seed.k() < 2 {
        return Err(Error::Hypothesis(
            "extended seeds need dimension m >= 2".into(),
        ));
    }
    if !witness.verify(seed) {
        return Err(Error::NotSelfOrthogonal { e: h / 2 });
    }
    let deg_h = witness.deg_h();
    if deg_h + seed.k() + 1 > seed.n() {
        return Err(Error::Hypothesis(
            "certificate degree must satisfy deg h <= n - m - 1".into(),
        ));
    }
    let bound = dimension_bound(p, e_prime, seed.n() as u64, deg_h as u64);
    if k == 0 || (k as i64) > bound {
        return Err(Error::Hypothesis(format!(
            "k = {k} out of range 1..={bound}"
        )));
    }
    let s = check_l_range(k, l, seed.extended())?;
    let sqrt_q1 = power_exponent(f, h / 2)?;
    let (mu, nu) = bezout_twist(p, h, e_prime, 2)?;
    let base: Vec<Fq> = seed
        .multipliers()
        .iter()
        .map(|&vi| {
            // v_i^(sqrt(q)+1) lives in F_sqrt(q), whose order sqrt(q)-1
            // divides (q-1)/2, so a square root always exists.
            let w = f.pow(vi, sqrt_q1);
            let root = f.nth_root(w, 2).expect("subfield elements are squares");
            f.pow(root, mu as u64)
        })
        .collect();
    twist_and_build(
        &field,
        seed.locators(),
        &base,
        k,
        seed.extended(),
        e_prime,
        mu,
        nu,
        s,
    )
}

/// Evaluation-point set for the coset construction: the union of w cosets
/// H + beta_j eta of an F_{p^m}-subspace H of dimension z inside F_{p^h}.
#[derive(Clone, Debug)]
pub struct CosetPointSet {
    field: Arc<FieldSpec>,
    pub m: u32,
    pub z: u32,
    pub w: u64,
    pub t: u32,
    /// F_{p^m}-basis of H: the first z canonical basis elements
    /// 1, gamma, ..., gamma^(z-1), gamma the spec generator.
    pub h_basis: Vec<Fq>,
    /// The shift direction eta = gamma^z, outside H.
    pub eta: Fq,
    /// The w coset labels: zero first, then by discrete log.
    pub beta_labels: Vec<Fq>,
    /// All n = w p^(mz) evaluation points, coset by coset.
    pub points: Vec<Fq>,
    /// epsilon = (prod_{x in H, x != 0} x) (prod_{x in H} (eta - x)^(w-1));
    /// epsilon u_i lies in F_{p^m}^* for every point.
    pub epsilon: Fq,
}

impl CosetPointSet {
    pub fn field_arc(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }
}

/// Builds the coset point set for parameters (m, z, w, t); requires
/// m | h, 1 <= z <= h/m - 1, 1 <= w <= p^m and 2^t | h/m.
pub fn coset_points(
    field: &Arc<FieldSpec>,
    m: u32,
    z: u32,
    w: u64,
    t: u32,
) -> Result<CosetPointSet> {
    let f = &**field;
    let h = f.h();
    if m == 0 || !h.is_multiple_of(m) {
        return Err(Error::Hypothesis(format!(
            "m = {m} must divide the extension degree h = {h}"
        )));
    }
    let ratio = h / m;
    if z == 0 || z > ratio - 1 {
        return Err(Error::Hypothesis(format!(
            "z = {z} out of range 1..={}",
            ratio.saturating_sub(1)
        )));
    }
    let pm = checked_pow(f.p(), m)? as u64;
    if w == 0 || w > pm {
        return Err(Error::Hypothesis(format!("w = {w} out of range 1..={pm}")));
    }
    if t == 0 || !ratio.is_multiple_of(1u32 << t.min(31)) {
        return Err(Error::Hypothesis(format!(
            "2^{t} must divide h/m = {ratio}"
        )));
    }

    let labels = f.subfield_elements(m)?;
    let beta_labels: Vec<Fq> = labels[..w as usize].to_vec();
    let gamma = f.generator();
    let h_basis: Vec<Fq> = (0..z as u64).map(|i| f.pow(gamma, i)).collect();
    let eta = f.pow(gamma, z as u64);

    // Enumerate H = F_{p^m}-span of the basis, first coordinate fastest.
    let hz = (pm as u128).pow(z) as u64;
    let mut subspace = Vec::with_capacity(hz as usize);
    for mut idx in 0..hz {
        let mut acc = Fq::ZERO;
        for &b in &h_basis {
            let c = labels[(idx % pm) as usize];
            idx /= pm;
            acc = f.add(acc, f.mul(c, b));
        }
        subspace.push(acc);
    }

    let mut points = Vec::with_capacity((w as usize) * subspace.len());
    for &beta in &beta_labels {
        let shift = f.mul(beta, eta);
        for &x in &subspace {
            points.push(f.add(x, shift));
        }
    }
    let distinct: HashSet<Fq> = points.iter().copied().collect();
    if distinct.len() != points.len() {
        return Err(Error::Internal(
            "coset points must be pairwise distinct".into(),
        ));
    }

    let mut epsilon = Fq::ONE;
    for &x in &subspace {
        if !x.is_zero() {
            epsilon = f.mul(epsilon, x);
        }
    }
    for &x in &subspace {
        epsilon = f.mul(epsilon, f.pow(f.sub(eta, x), w - 1));
    }

    // The normalization property behind the whole construction.
    let u = compute_u(f, &points)?;
    for &ui in &u {
        let val = f.mul(epsilon, ui);
        if val.is_zero() || !f.in_subfield(val, m)? {
            return Err(Error::Internal(
                "epsilon u_i must land in the subfield".into(),
            ));
        }
    }

    Ok(CosetPointSet {
        field: field.clone(),
        m,
        z,
        w,
        t,
        h_basis,
        eta,
        beta_labels,
        points,
        epsilon,
    })
}

/// Code with hull dimension exactly l on a coset point set, at the
/// parameter e with 2^t = p^e + 1. Multipliers are the deterministic
/// 2^t-th roots of epsilon u_i; with l = k the output is e-Galois
/// self-orthogonal with certificate (h = 1, lambda = epsilon) and can
/// seed [`from_galois_seed`].
pub fn coset_code(
    ps: &CosetPointSet,
    e: u32,
    k: usize,
    l: usize,
    extended: bool,
) -> Result<ConstructionOutput> {
    let field = ps.field_arc().clone();
    let f = &*field;
    let p = f.p();
    if p.is_multiple_of(2) {
        return Err(Error::Hypothesis("p must be an odd prime".into()));
    }
    let pe1 = checked_pow(p, e)? + 1;
    if pe1 != 1u128 << ps.t {
        return Err(Error::Hypothesis(format!(
            "2^t = 2^{} must equal p^e + 1 = {pe1}",
            ps.t
        )));
    }
    let n = ps.n() as u64;
    let bound = dimension_bound(p, e, n, 0);
    if k == 0 || (k as i64) > bound {
        return Err(Error::Hypothesis(format!(
            "k = {k} out of range 1..={bound}"
        )));
    }
    let s = check_l_range(k, l, extended)?;
    let u = compute_u(f, &ps.points)?;
    let base: Vec<Fq> = u
        .iter()
        .map(|&ui| {
            f.nth_root(f.mul(ps.epsilon, ui), pe1 as u64)
                .expect("subfield values have 2^t-th roots when 2^t | h/m")
        })
        .collect();
    // Target p^e+1 equals p^e'+1 here, so the Bezout pair is trivially
    // (1, 0).
    twist_and_build(&field, &ps.points, &base, k, extended, e, 1, 0, s)
}
