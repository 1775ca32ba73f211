//! Exact arithmetic in GF(p^h).
//!
//! A [`FieldSpec`] fixes the prime `p`, the extension degree `h`, a monic
//! irreducible modulus over GF(p) and a primitive element, and carries
//! exp/log tables for the full multiplicative group. Elements ([`Fq`]) are
//! indices into the power-basis ordering: the element with coordinates
//! `(c_{h-1}, ..., c_0)` (coefficient of `x^i` is `c_i`) has index
//! `sum c_i p^i`, so numeric order on indices is lexicographic order on
//! coordinate tuples, highest power first.
//!
//! An `Fq` value is only meaningful together with the spec that produced
//! it; all operations take the spec explicitly. Specs are immutable after
//! creation and safe to share across threads.

use std::collections::HashSet;
use std::sync::Arc;

use crate::{Error, Result};

/// Largest field for which exp/log tables are built. Larger fields are
/// rejected at creation time.
pub const TABLE_LIMIT: u64 = 1 << 20;

/// Element of GF(p^h), stored as its power-basis index.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Fq(u32);

impl Fq {
    pub const ZERO: Fq = Fq(0);
    pub const ONE: Fq = Fq(1);

    /// Power-basis index of this element.
    pub fn index(self) -> u64 {
        self.0 as u64
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// Immutable description of GF(p^h) together with its arithmetic tables.
#[derive(Debug, Clone)]
pub struct FieldSpec {
    p: u64,
    h: u32,
    q: u64,
    /// Modulus coefficients, constant term first, length h+1, leading 1.
    modulus: Vec<u64>,
    generator: Fq,
    /// exp[i] = g^i for 0 <= i < q-1.
    exp: Vec<u32>,
    /// log[x] defined for 1 <= x < q.
    log: Vec<u32>,
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.h == other.h && self.modulus == other.modulus
    }
}

impl Eq for FieldSpec {}

impl FieldSpec {
    /// Builds GF(p^h) with the canonical modulus: the lexicographically
    /// smallest monic irreducible of degree h (coefficient tuple ordering,
    /// constant term last). Deterministic: the same (p, h) always yields
    /// the same spec.
    pub fn new(p: u64, h: u32) -> Result<FieldSpec> {
        Self::create(p, h, None)
    }

    /// Builds GF(p^h) with a caller-supplied modulus, given leading
    /// coefficient first. The modulus must be monic of degree h and
    /// irreducible over GF(p).
    pub fn with_modulus(p: u64, h: u32, modulus_leading_first: &[u64]) -> Result<FieldSpec> {
        if modulus_leading_first.len() != h as usize + 1 {
            return Err(Error::BadModulus { expected: h, p });
        }
        let mut cf: Vec<u64> = modulus_leading_first.to_vec();
        cf.reverse();
        Self::create(p, h, Some(cf))
    }

    fn create(p: u64, h: u32, modulus_cf: Option<Vec<u64>>) -> Result<FieldSpec> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if h == 0 {
            return Err(Error::BadDegree);
        }
        let mut q: u64 = 1;
        for _ in 0..h {
            q = q
                .checked_mul(p)
                .filter(|&v| v <= TABLE_LIMIT)
                .ok_or(Error::TableLimit {
                    q: u64::MAX,
                    limit: TABLE_LIMIT,
                })?;
        }
        let modulus = match modulus_cf {
            Some(cf) => {
                if cf.len() != h as usize + 1 || cf[h as usize] != 1 || cf.iter().any(|&c| c >= p) {
                    return Err(Error::BadModulus { expected: h, p });
                }
                if !pf_is_irreducible(&cf, p) {
                    return Err(Error::ReducibleModulus { p });
                }
                cf
            }
            None => smallest_irreducible(p, h),
        };

        let generator = find_generator(p, h, q, &modulus);

        // exp/log tables over the whole multiplicative group.
        let m = (q - 1) as usize;
        let mut exp = vec![0u32; m];
        let mut log = vec![0u32; q as usize];
        let mut cur: u64 = 1;
        for (i, slot) in exp.iter_mut().enumerate() {
            *slot = cur as u32;
            log[cur as usize] = i as u32;
            cur = raw_mul(cur, generator, p, h, &modulus);
        }
        debug_assert_eq!(cur, 1, "generator order must be q-1");

        Ok(FieldSpec {
            p,
            h,
            q,
            modulus,
            generator: Fq(generator as u32),
            exp,
            log,
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn h(&self) -> u32 {
        self.h
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// The fixed primitive element: the least element (in power-basis
    /// lexicographic order) of multiplicative order q-1.
    pub fn generator(&self) -> Fq {
        self.generator
    }

    /// Modulus coefficients, leading coefficient first.
    pub fn modulus_leading_first(&self) -> Vec<u64> {
        let mut v = self.modulus.clone();
        v.reverse();
        v
    }

    pub fn same_field(&self, other: &FieldSpec) -> bool {
        self == other
    }

    pub fn element(&self, index: u64) -> Result<Fq> {
        if index < self.q {
            Ok(Fq(index as u32))
        } else {
            Err(Error::InvalidParameter(format!(
                "element index {index} out of range for field of size {}",
                self.q
            )))
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Fq> + '_ {
        (0..self.q).map(|i| Fq(i as u32))
    }

    /// Coordinates of `x`, highest power first (serialization order).
    pub fn digits(&self, x: Fq) -> Vec<u64> {
        let mut out = vec![0u64; self.h as usize];
        let mut v = x.index();
        for i in (0..self.h as usize).rev() {
            out[i] = v % self.p;
            v /= self.p;
        }
        out
    }

    /// Element from coordinates given highest power first.
    pub fn from_digits(&self, digits: &[u64]) -> Result<Fq> {
        if digits.len() != self.h as usize || digits.iter().any(|&d| d >= self.p) {
            return Err(Error::Parse(format!(
                "expected {} base-{} digits",
                self.h, self.p
            )));
        }
        let mut v = 0u64;
        for &d in digits {
            v = v * self.p + d;
        }
        Ok(Fq(v as u32))
    }

    pub fn add(&self, a: Fq, b: Fq) -> Fq {
        let (mut ia, mut ib) = (a.index(), b.index());
        let mut out = 0u64;
        let mut place = 1u64;
        for _ in 0..self.h {
            let s = (ia % self.p + ib % self.p) % self.p;
            out += s * place;
            place *= self.p;
            ia /= self.p;
            ib /= self.p;
        }
        Fq(out as u32)
    }

    pub fn neg(&self, a: Fq) -> Fq {
        let mut ia = a.index();
        let mut out = 0u64;
        let mut place = 1u64;
        for _ in 0..self.h {
            let d = ia % self.p;
            out += ((self.p - d) % self.p) * place;
            place *= self.p;
            ia /= self.p;
        }
        Fq(out as u32)
    }

    pub fn sub(&self, a: Fq, b: Fq) -> Fq {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Fq, b: Fq) -> Fq {
        if a.is_zero() || b.is_zero() {
            return Fq::ZERO;
        }
        let m = self.q - 1;
        let l = (self.log[a.0 as usize] as u64 + self.log[b.0 as usize] as u64) % m;
        Fq(self.exp[l as usize])
    }

    pub fn inv(&self, a: Fq) -> Result<Fq> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let m = self.q - 1;
        let l = (m - self.log[a.0 as usize] as u64) % m;
        Ok(Fq(self.exp[l as usize]))
    }

    pub fn div(&self, a: Fq, b: Fq) -> Result<Fq> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// a^e with the convention 0^0 = 1.
    pub fn pow(&self, a: Fq, e: u64) -> Fq {
        if a.is_zero() {
            return if e == 0 { Fq::ONE } else { Fq::ZERO };
        }
        let m = self.q - 1;
        let l = (self.log[a.0 as usize] as u64 * (e % m)) % m;
        Fq(self.exp[l as usize])
    }

    /// The Frobenius power x -> x^(p^e); e is reduced modulo h, so
    /// applying it h times in total is the identity.
    pub fn frobenius(&self, x: Fq, e: u32) -> Fq {
        let e = e % self.h;
        let mut pe = 1u64;
        for _ in 0..e {
            pe *= self.p;
        }
        self.pow(x, pe)
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: Fq) -> Result<u64> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let m = self.q - 1;
        Ok(m / gcd_u64(self.log[a.0 as usize] as u64, m))
    }

    /// Deterministic d-th root: the root with the smallest discrete log
    /// with respect to the spec generator. Zero has root zero for every
    /// d >= 1; a nonzero element that is not a d-th power is an error.
    pub fn nth_root(&self, x: Fq, d: u64) -> Result<Fq> {
        if d == 0 {
            return Err(Error::InvalidParameter("0-th root requested".into()));
        }
        if x.is_zero() {
            return Ok(Fq::ZERO);
        }
        let m = self.q - 1;
        let dr = d % m;
        let l = self.log[x.0 as usize] as u64;
        if dr == 0 {
            // v^d = 1 for every nonzero v; solvable only for x = 1.
            return if l == 0 {
                Ok(Fq::ONE)
            } else {
                Err(Error::NoRoot { d })
            };
        }
        let g = gcd_u64(dr, m);
        if !l.is_multiple_of(g) {
            return Err(Error::NoRoot { d });
        }
        let m1 = m / g;
        let root_log = if m1 == 1 {
            0
        } else {
            (l / g % m1) * mod_inv(dr / g % m1, m1) % m1
        };
        Ok(Fq(self.exp[root_log as usize]))
    }

    /// An element alpha with alpha^(p^e' + 1) != 1; deterministically the
    /// spec generator, which works exactly when (q-1) does not divide
    /// p^e' + 1.
    pub fn find_alpha(&self, e_prime: u32) -> Result<Fq> {
        let pe = checked_pow(self.p, e_prime)?;
        if (pe + 1) % ((self.q - 1) as u128) == 0 {
            return Err(Error::Hypothesis(format!(
                "every alpha^(p^{e_prime}+1) equals 1: q-1 = {} divides p^{e_prime}+1 = {}",
                self.q - 1,
                pe + 1
            )));
        }
        Ok(self.generator)
    }

    /// True iff x lies in the subfield F_{p^m}, i.e. x^(p^m) = x.
    pub fn in_subfield(&self, x: Fq, m: u32) -> Result<bool> {
        if m == 0 || !self.h.is_multiple_of(m) {
            return Err(Error::InvalidParameter(format!(
                "{m} does not divide the extension degree {}",
                self.h
            )));
        }
        Ok(self.frobenius(x, m) == x)
    }

    /// All p^m elements of the subfield F_{p^m}: zero first, then the
    /// nonzero elements in ascending discrete-log order.
    pub fn subfield_elements(&self, m: u32) -> Result<Vec<Fq>> {
        if m == 0 || !self.h.is_multiple_of(m) {
            return Err(Error::InvalidParameter(format!(
                "{m} does not divide the extension degree {}",
                self.h
            )));
        }
        let mut pm = 1u64;
        for _ in 0..m {
            pm *= self.p;
        }
        let mut out = Vec::with_capacity(pm as usize);
        out.push(Fq::ZERO);
        let step = (self.q - 1) / (pm - 1);
        for j in 0..pm - 1 {
            out.push(Fq(self.exp[(j * step) as usize]));
        }
        Ok(out)
    }

    /// One-line text form: `p h c_h c_{h-1} ... c_0`.
    pub fn to_line(&self) -> String {
        let mut s = format!("{} {}", self.p, self.h);
        for c in self.modulus_leading_first() {
            s.push(' ');
            s.push_str(&c.to_string());
        }
        s
    }

    pub fn from_line(line: &str) -> Result<FieldSpec> {
        let nums: Vec<u64> = line
            .split_whitespace()
            .map(|t| t.parse::<u64>().map_err(|e| Error::Parse(e.to_string())))
            .collect::<Result<_>>()?;
        if nums.len() < 3 {
            return Err(Error::Parse("expected `p h c_h ... c_0`".into()));
        }
        let (p, h) = (nums[0], nums[1] as u32);
        if nums.len() != h as usize + 3 {
            return Err(Error::Parse(format!(
                "expected {} modulus coefficients",
                h + 1
            )));
        }
        FieldSpec::with_modulus(p, h, &nums[2..])
    }

    /// Space-separated base-p digits, highest power first.
    pub fn format_element(&self, x: Fq) -> String {
        self.digits(x)
            .iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn parse_element(&self, s: &str) -> Result<Fq> {
        let digits: Vec<u64> = s
            .split_whitespace()
            .map(|t| t.parse::<u64>().map_err(|e| Error::Parse(e.to_string())))
            .collect::<Result<_>>()?;
        self.from_digits(&digits)
    }
}

/// Checks that all locators are pairwise distinct.
pub fn check_distinct(points: &[Fq]) -> Result<()> {
    let mut seen = HashSet::with_capacity(points.len());
    for &a in points {
        if !seen.insert(a) {
            return Err(Error::InvalidParameter(
                "locators must be pairwise distinct".into(),
            ));
        }
    }
    Ok(())
}

pub(crate) fn checked_pow(p: u64, e: u32) -> Result<u128> {
    (p as u128)
        .checked_pow(e)
        .ok_or_else(|| Error::TooLarge(format!("{p}^{e} overflows")))
}

pub(crate) fn gcd_u64(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

fn mod_inv(a: u64, m: u64) -> u64 {
    // m is small here (< 2^20); extended Euclid over i128.
    let e = num_integer::Integer::extended_gcd(&(a as i128), &(m as i128));
    debug_assert_eq!(e.gcd, 1);
    (e.x.rem_euclid(m as i128)) as u64
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

// ---------------------------------------------------------------------------
// Table-free element arithmetic, used while bootstrapping a spec.
// Elements are power-basis indices; the modulus is constant-first.
// ---------------------------------------------------------------------------

fn decode(idx: u64, p: u64, h: u32) -> Vec<u64> {
    let mut v = vec![0u64; h as usize];
    let mut x = idx;
    for slot in v.iter_mut() {
        *slot = x % p;
        x /= p;
    }
    v
}

fn encode(digits_low_first: &[u64], p: u64) -> u64 {
    let mut v = 0u64;
    for &d in digits_low_first.iter().rev() {
        v = v * p + d;
    }
    v
}

fn raw_mul(a: u64, b: u64, p: u64, h: u32, modulus_cf: &[u64]) -> u64 {
    let da = decode(a, p, h);
    let db = decode(b, p, h);
    let mut prod = vec![0u64; 2 * h as usize - 1];
    for (i, &ca) in da.iter().enumerate() {
        if ca == 0 {
            continue;
        }
        for (j, &cb) in db.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ca * cb) % p;
        }
    }
    // Reduce by the monic modulus.
    for i in (h as usize..prod.len()).rev() {
        let c = prod[i];
        if c == 0 {
            continue;
        }
        prod[i] = 0;
        let shift = i - h as usize;
        for (j, &mc) in modulus_cf.iter().enumerate().take(h as usize) {
            let idx = shift + j;
            prod[idx] = (prod[idx] + (p - mc % p) % p * c) % p;
        }
    }
    encode(&prod[..h as usize], p)
}

fn raw_pow(mut base: u64, mut e: u64, p: u64, h: u32, modulus_cf: &[u64]) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = raw_mul(acc, base, p, h, modulus_cf);
        }
        base = raw_mul(base, base, p, h, modulus_cf);
        e >>= 1;
    }
    acc
}

fn find_generator(p: u64, h: u32, q: u64, modulus_cf: &[u64]) -> u64 {
    let factors = distinct_prime_factors(q - 1);
    for idx in 1..q {
        if factors
            .iter()
            .all(|&r| raw_pow(idx, (q - 1) / r, p, h, modulus_cf) != 1)
        {
            return idx;
        }
    }
    unreachable!("every finite field has a primitive element")
}

// ---------------------------------------------------------------------------
// GF(p)[x] helpers for modulus selection and irreducibility (constant-first).
// ---------------------------------------------------------------------------

fn pf_trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn pf_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &ca) in a.iter().enumerate() {
        if ca == 0 {
            continue;
        }
        for (j, &cb) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + ca * cb) % p;
        }
    }
    pf_trim(out)
}

fn pf_rem(a: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    // f is monic.
    let mut r = a.to_vec();
    let df = f.len() - 1;
    while r.len() > df {
        let c = *r.last().unwrap();
        let shift = r.len() - 1 - df;
        if c != 0 {
            for (j, &fc) in f.iter().enumerate().take(df) {
                r[shift + j] = (r[shift + j] + (p - fc % p) % p * c) % p;
            }
        }
        r.pop();
        r = pf_trim(r);
        if r.len() <= df {
            break;
        }
    }
    pf_trim(r)
}

fn pf_mulmod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    pf_rem(&pf_mul(a, b, p), f, p)
}

fn pf_powmod(base: &[u64], mut e: u64, f: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = pf_rem(base, f, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = pf_mulmod(&acc, &b, f, p);
        }
        b = pf_mulmod(&b, &b, f, p);
        e >>= 1;
    }
    acc
}

fn pf_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out = vec![0u64; n];
    for (i, slot) in out.iter_mut().enumerate() {
        let ca = a.get(i).copied().unwrap_or(0);
        let cb = b.get(i).copied().unwrap_or(0);
        *slot = (ca + p - cb) % p;
    }
    pf_trim(out)
}

fn pf_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let (mut x, mut y) = (pf_trim(a.to_vec()), pf_trim(b.to_vec()));
    while !y.is_empty() {
        // Make y monic so pf_rem applies.
        let lead = *y.last().unwrap();
        let inv = mod_inv(lead, p);
        let monic: Vec<u64> = y.iter().map(|&c| c * inv % p).collect();
        let r = pf_rem(&x, &monic, p);
        x = monic;
        y = r;
    }
    x
}

/// Rabin irreducibility test for a monic polynomial over GF(p).
fn pf_is_irreducible(f_cf: &[u64], p: u64) -> bool {
    let f = pf_trim(f_cf.to_vec());
    let h = f.len() - 1;
    if h == 0 {
        return false;
    }
    let x = vec![0u64, 1];
    // x^(p^h) == x (mod f)
    let mut ph = 1u64;
    for _ in 0..h {
        ph *= p;
    }
    if pf_powmod(&x, ph, &f, p) != pf_rem(&x, &f, p) {
        return false;
    }
    for r in distinct_prime_factors(h as u64) {
        let mut pe = 1u64;
        for _ in 0..(h as u64 / r) {
            pe *= p;
        }
        let xr = pf_powmod(&x, pe, &f, p);
        let g = pf_gcd(&pf_sub(&xr, &pf_rem(&x, &f, p), p), &f, p);
        if g.len() > 1 {
            return false;
        }
    }
    true
}

fn smallest_irreducible(p: u64, h: u32) -> Vec<u64> {
    // Candidates ordered lexicographically on (c_{h-1}, ..., c_0), which is
    // plain counter order on sum c_i p^i.
    let mut total = 1u64;
    for _ in 0..h {
        total *= p;
    }
    for m in 0..total {
        let mut cf = decode(m, p, h);
        cf.push(1);
        if pf_is_irreducible(&cf, p) {
            return cf;
        }
    }
    unreachable!("monic irreducibles of every degree exist over GF(p)")
}

/// Convenience alias used throughout: specs are shared immutably.
pub type Field = Arc<FieldSpec>;
