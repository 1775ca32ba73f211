//! Dense polynomials over GF(q).
//!
//! Coefficients are stored constant term first with no trailing zeros;
//! the zero polynomial is the empty vector and has degree `None` (the
//! deg(0) = -infinity convention).

use crate::field::{FieldSpec, Fq};
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Poly {
    coeffs: Vec<Fq>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly {
            coeffs: vec![Fq::ONE],
        }
    }

    pub fn constant(c: Fq) -> Poly {
        Poly::from_coeffs(vec![c])
    }

    /// x^d
    pub fn monomial(d: usize) -> Poly {
        let mut coeffs = vec![Fq::ZERO; d + 1];
        coeffs[d] = Fq::ONE;
        Poly { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<Fq>) -> Poly {
        while coeffs.last() == Some(&Fq::ZERO) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Coefficients, constant term first.
    pub fn coeffs(&self) -> &[Fq] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Fq {
        self.coeffs.get(i).copied().unwrap_or(Fq::ZERO)
    }

    pub fn leading(&self) -> Option<Fq> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Some(Fq::ONE)
    }

    pub fn eval(&self, f: &FieldSpec, x: Fq) -> Fq {
        let mut acc = Fq::ZERO;
        for &c in self.coeffs.iter().rev() {
            acc = f.add(f.mul(acc, x), c);
        }
        acc
    }

    pub fn add(&self, f: &FieldSpec, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(f.add(self.coeff(i), other.coeff(i)));
        }
        Poly::from_coeffs(out)
    }

    pub fn sub(&self, f: &FieldSpec, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(f.sub(self.coeff(i), other.coeff(i)));
        }
        Poly::from_coeffs(out)
    }

    pub fn mul(&self, f: &FieldSpec, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Fq::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::from_coeffs(out)
    }

    pub fn scale(&self, f: &FieldSpec, c: Fq) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    /// Splits a nonzero polynomial into (monic part, leading coefficient).
    pub fn monic(&self, f: &FieldSpec) -> Result<(Poly, Fq)> {
        let lead = self.leading().ok_or(Error::DivisionByZero)?;
        Ok((self.scale(f, f.inv(lead)?), lead))
    }

    /// prod (x - r) over the given roots.
    pub fn from_roots(f: &FieldSpec, roots: &[Fq]) -> Poly {
        let mut acc = Poly::one();
        for &r in roots {
            acc = acc.mul(f, &Poly::from_coeffs(vec![f.neg(r), Fq::ONE]));
        }
        acc
    }

    /// Newton interpolation through (xs[i], ys[i]); the xs must be
    /// pairwise distinct. Returns the unique polynomial of degree < n.
    pub fn interpolate(f: &FieldSpec, xs: &[Fq], ys: &[Fq]) -> Result<Poly> {
        if xs.len() != ys.len() {
            return Err(Error::DimensionMismatch(
                "interpolation needs as many values as points".into(),
            ));
        }
        let n = xs.len();
        let mut dd = ys.to_vec();
        for j in 1..n {
            for i in (j..n).rev() {
                let denom = f.sub(xs[i], xs[i - j]);
                if denom.is_zero() {
                    return Err(Error::InvalidParameter(
                        "interpolation points must be pairwise distinct".into(),
                    ));
                }
                dd[i] = f.div(f.sub(dd[i], dd[i - 1]), denom)?;
            }
        }
        let mut acc = Poly::zero();
        let mut basis = Poly::one();
        for i in 0..n {
            acc = acc.add(f, &basis.scale(f, dd[i]));
            if i + 1 < n {
                basis = basis.mul(f, &Poly::from_coeffs(vec![f.neg(xs[i]), Fq::ONE]));
            }
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf9() -> FieldSpec {
        FieldSpec::new(3, 2).unwrap()
    }

    #[test]
    fn degree_conventions() {
        assert_eq!(Poly::zero().degree(), None);
        assert_eq!(Poly::one().degree(), Some(0));
        assert_eq!(Poly::monomial(3).degree(), Some(3));
        assert_eq!(Poly::from_coeffs(vec![Fq::ZERO, Fq::ZERO]).degree(), None);
    }

    #[test]
    fn eval_by_horner_matches_expansion() {
        let f = gf9();
        // p(x) = 2 + x + x^2 over GF(9) restricted to GF(3) points:
        // p(0)=2, p(1)=4=1, p(2)=8=2.
        let two = f.element(2).unwrap();
        let p = Poly::from_coeffs(vec![two, Fq::ONE, Fq::ONE]);
        assert_eq!(p.eval(&f, Fq::ZERO), two);
        assert_eq!(p.eval(&f, Fq::ONE), Fq::ONE);
        assert_eq!(p.eval(&f, two), two);
    }

    #[test]
    fn interpolation_recovers_every_small_polynomial() {
        let f = gf9();
        let xs: Vec<Fq> = (0..4).map(|i| f.element(i).unwrap()).collect();
        // All 9^3 polynomials of degree < 3 pass through their own values.
        for a in f.elements() {
            for b in f.elements() {
                for c in f.elements() {
                    let p = Poly::from_coeffs(vec![a, b, c]);
                    let ys: Vec<Fq> = xs.iter().map(|&x| p.eval(&f, x)).collect();
                    let q = Poly::interpolate(&f, &xs, &ys).unwrap();
                    assert_eq!(p, q);
                }
            }
        }
    }

    #[test]
    fn interpolation_rejects_repeated_points() {
        let f = gf9();
        let xs = vec![Fq::ONE, Fq::ONE];
        let ys = vec![Fq::ZERO, Fq::ONE];
        assert!(Poly::interpolate(&f, &xs, &ys).is_err());
    }

    #[test]
    fn from_roots_vanishes_exactly_on_roots() {
        let f = gf9();
        let roots: Vec<Fq> = (1..4).map(|i| f.element(i).unwrap()).collect();
        let p = Poly::from_roots(&f, &roots);
        assert!(p.is_monic());
        assert_eq!(p.degree(), Some(3));
        for x in f.elements() {
            assert_eq!(p.eval(&f, x).is_zero(), roots.contains(&x));
        }
    }

    #[test]
    fn monic_split() {
        let f = gf9();
        let two = f.element(2).unwrap();
        let p = Poly::from_coeffs(vec![Fq::ONE, two]);
        let (m, lead) = p.monic(&f).unwrap();
        assert_eq!(lead, two);
        assert!(m.is_monic());
        assert_eq!(m.scale(&f, lead), p);
    }
}
