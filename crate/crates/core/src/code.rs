//! Generic [n, k] linear codes over GF(q): Galois duals, hulls, MDS and
//! minimum-distance verification.
//!
//! The e-Galois inner product is (x, y)_e = sum_i x_i * y_i^(p^e). The
//! e-Galois dual is computed by Frobenius-twisting the Euclidean dual:
//! x lies in C^(perp_e) iff the entry-wise p^e-th power of x lies in
//! C^(perp_0), so applying x -> x^(p^(h-e)) to a Euclidean dual basis
//! spans the e-Galois dual.

use rayon::prelude::*;

use crate::field::{FieldSpec, Fq};
use crate::linalg::Matrix;
use crate::{Error, Result};

/// An [n, k] linear code presented by a full-rank k x n generator matrix.
#[derive(Clone, Debug)]
pub struct LinearCode {
    gen: Matrix,
}

/// Hull basis and dimension at a fixed Galois parameter.
#[derive(Clone, Debug)]
pub struct HullReport {
    pub e: u32,
    pub dim: usize,
    /// RREF-normalized basis of C ∩ C^(perp_e).
    pub basis: Matrix,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MdsStrategy {
    Auto,
    Minors,
    MinWeight,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MdsVerdict {
    ProvedMds,
    ProvedNotMds,
    Skipped,
}

impl MdsVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            MdsVerdict::ProvedMds => "proved-mds",
            MdsVerdict::ProvedNotMds => "proved-not-mds",
            MdsVerdict::Skipped => "skipped",
        }
    }
}

/// Enumeration budget for the minors strategy and for codeword
/// enumeration (minimum weight).
const ENUMERATION_LIMIT: u128 = 1_000_000;

impl LinearCode {
    /// Wraps a generator matrix, requiring full row rank.
    pub fn new(gen: Matrix) -> Result<LinearCode> {
        if gen.rank() != gen.rows() {
            return Err(Error::InvalidParameter(
                "generator matrix must have full row rank".into(),
            ));
        }
        Ok(LinearCode { gen })
    }

    /// The code spanned by the rows of `m` (any rank); the generator is
    /// the RREF basis of the row space.
    pub fn from_span(m: &Matrix) -> LinearCode {
        let (r, _, rank) = m.rref();
        if rank == 0 {
            return LinearCode {
                gen: Matrix::zero(m.spec().clone(), 0, m.cols()),
            };
        }
        let rows: Vec<Vec<Fq>> = (0..rank).map(|i| r.row(i).to_vec()).collect();
        let gen = Matrix::from_rows(m.spec().clone(), &rows).expect("uniform rows");
        LinearCode { gen }
    }

    pub fn spec(&self) -> &std::sync::Arc<FieldSpec> {
        self.gen.spec()
    }

    pub fn n(&self) -> usize {
        self.gen.cols()
    }

    pub fn k(&self) -> usize {
        self.gen.rows()
    }

    pub fn gen(&self) -> &Matrix {
        &self.gen
    }

    pub fn contains(&self, word: &[Fq]) -> Result<bool> {
        self.gen.row_space_contains(word)
    }

    /// Generator of the e-Galois dual; its dimension is always n - k.
    pub fn galois_dual(&self, e: u32) -> LinearCode {
        let f = self.spec().clone();
        let h = f.h();
        let e = e % h;
        let kernel = self.gen.kernel_basis();
        let twist = (h - e) % h;
        let twisted = kernel.map(|x| f.frobenius(x, twist));
        LinearCode::from_span(&twisted)
    }

    /// Hull report at parameter e: basis and dimension of C ∩ C^(perp_e),
    /// computed entirely by row reduction.
    pub fn hull(&self, e: u32) -> HullReport {
        let e = e % self.spec().h();
        let dual = self.galois_dual(e);
        let basis = self
            .gen
            .rowspace_intersection(dual.gen())
            .expect("code and dual share ambient dimension");
        let stacked = self
            .gen
            .stack(dual.gen())
            .expect("same ambient dimension")
            .rank();
        assert_eq!(
            basis.rows(),
            self.k() + dual.k() - stacked,
            "hull dimension disagrees with the rank formula"
        );
        HullReport {
            e,
            dim: basis.rows(),
            basis,
        }
    }

    /// MDS verification. `Minors` proves MDS iff every k x k submatrix of
    /// the generator is nonsingular; `MinWeight` enumerates all q^k - 1
    /// nonzero codewords and compares the minimum weight with n - k + 1.
    /// `Auto` picks minors when C(n, k) <= 10^6, else min-weight when
    /// q^k <= 10^6, else skips. A forced strategy over its budget also
    /// skips rather than hanging.
    pub fn is_mds(&self, strategy: MdsStrategy) -> MdsVerdict {
        let n = self.n();
        let k = self.k();
        if k == 0 {
            return MdsVerdict::Skipped;
        }
        let combos = binomial(n as u64, k as u64);
        let words = checked_q_pow(self.spec().q(), k as u32);
        let minors_ok = combos <= ENUMERATION_LIMIT;
        let weight_ok = words.is_some_and(|w| w <= ENUMERATION_LIMIT);
        let pick = match strategy {
            MdsStrategy::Minors if minors_ok => MdsStrategy::Minors,
            MdsStrategy::MinWeight if weight_ok => MdsStrategy::MinWeight,
            MdsStrategy::Auto if minors_ok => MdsStrategy::Minors,
            MdsStrategy::Auto if weight_ok => MdsStrategy::MinWeight,
            _ => return MdsVerdict::Skipped,
        };
        match pick {
            MdsStrategy::Minors => {
                if self.all_minors_nonsingular() {
                    MdsVerdict::ProvedMds
                } else {
                    MdsVerdict::ProvedNotMds
                }
            }
            MdsStrategy::MinWeight => {
                if self.enumerate_min_weight() == n - k + 1 {
                    MdsVerdict::ProvedMds
                } else {
                    MdsVerdict::ProvedNotMds
                }
            }
            MdsStrategy::Auto => unreachable!(),
        }
    }

    /// Exact minimum Hamming weight by full codeword enumeration.
    pub fn min_distance_bruteforce(&self) -> Result<usize> {
        if self.k() == 0 {
            return Err(Error::InvalidParameter(
                "minimum distance of the zero-dimensional code is undefined".into(),
            ));
        }
        match checked_q_pow(self.spec().q(), self.k() as u32) {
            Some(w) if w <= ENUMERATION_LIMIT => Ok(self.enumerate_min_weight()),
            _ => Err(Error::TooLarge(format!(
                "q^k = {}^{} exceeds the enumeration budget",
                self.spec().q(),
                self.k()
            ))),
        }
    }

    fn all_minors_nonsingular(&self) -> bool {
        let n = self.n() as u64;
        let k = self.k() as u64;
        let total = binomial(n, k) as u64;
        (0..total).into_par_iter().all(|rank_idx| {
            let cols = unrank_combination(rank_idx, n, k);
            self.submatrix_is_nonsingular(&cols)
        })
    }

    fn submatrix_is_nonsingular(&self, cols: &[usize]) -> bool {
        let k = self.k();
        let f = self.spec().clone();
        let mut m: Vec<Fq> = Vec::with_capacity(k * k);
        for r in 0..k {
            for &c in cols {
                m.push(self.gen.get(r, c));
            }
        }
        // In-place elimination; rank == k iff nonsingular.
        for col in 0..k {
            let Some(pivot) = (col..k).find(|&r| !m[r * k + col].is_zero()) else {
                return false;
            };
            if pivot != col {
                for j in 0..k {
                    m.swap(col * k + j, pivot * k + j);
                }
            }
            let inv = f.inv(m[col * k + col]).expect("nonzero pivot");
            for r in col + 1..k {
                let factor = f.mul(m[r * k + col], inv);
                if factor.is_zero() {
                    continue;
                }
                for j in col..k {
                    m[r * k + j] = f.sub(m[r * k + j], f.mul(factor, m[col * k + j]));
                }
            }
        }
        true
    }

    fn enumerate_min_weight(&self) -> usize {
        let f = self.spec().clone();
        let q = f.q();
        let k = self.k();
        let n = self.n();
        let total = q.pow(k as u32);
        (1..total)
            .into_par_iter()
            .map(|mut idx| {
                let mut msg = Vec::with_capacity(k);
                for _ in 0..k {
                    msg.push(f.element(idx % q).expect("in range"));
                    idx /= q;
                }
                let mut weight = 0usize;
                for c in 0..n {
                    let mut acc = Fq::ZERO;
                    for (r, &m) in msg.iter().enumerate() {
                        if !m.is_zero() {
                            acc = f.add(acc, f.mul(m, self.gen.get(r, c)));
                        }
                    }
                    if !acc.is_zero() {
                        weight += 1;
                    }
                }
                weight
            })
            .min()
            .expect("at least one nonzero codeword")
    }
}

/// The e-Galois inner product sum_i x_i * y_i^(p^e).
pub fn galois_inner(f: &FieldSpec, x: &[Fq], y: &[Fq], e: u32) -> Fq {
    debug_assert_eq!(x.len(), y.len());
    let mut acc = Fq::ZERO;
    for (&a, &b) in x.iter().zip(y) {
        acc = f.add(acc, f.mul(a, f.frobenius(b, e)));
    }
    acc
}

pub(crate) fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i + 1) as u128;
        if acc > ENUMERATION_LIMIT * 1_000 {
            return u128::MAX / 2;
        }
    }
    acc
}

pub(crate) fn checked_q_pow(q: u64, k: u32) -> Option<u128> {
    (q as u128).checked_pow(k)
}

/// Lexicographic unranking of k-subsets of {0..n-1}.
fn unrank_combination(mut rank: u64, n: u64, k: u64) -> Vec<usize> {
    let mut combo = Vec::with_capacity(k as usize);
    let mut x = 0u64;
    for j in 0..k {
        loop {
            let c = binomial(n - 1 - x, k - 1 - j) as u64;
            if rank < c {
                combo.push(x as usize);
                x += 1;
                break;
            }
            rank -= c;
            x += 1;
        }
    }
    combo
}
