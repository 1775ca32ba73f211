//! Exact dense linear algebra over GF(q).
//!
//! Row reduction, rank, kernels and row-space intersections over a shared
//! [`FieldSpec`]. This is the oracle machinery behind dual codes and
//! hulls: results are always RREF-normalized so bases are canonical and
//! comparable across runs. Exact arithmetic needs no pivoting strategy
//! beyond first-nonzero.

use std::sync::Arc;

use crate::field::{FieldSpec, Fq};
use crate::{Error, Result};

/// Dense row-major matrix over GF(q). Value-semantic; all operations are
/// pure functions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    spec: Arc<FieldSpec>,
    rows: usize,
    cols: usize,
    entries: Vec<Fq>,
}

impl Matrix {
    pub fn new(spec: Arc<FieldSpec>, rows: usize, cols: usize, entries: Vec<Fq>) -> Result<Matrix> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(Matrix {
            spec,
            rows,
            cols,
            entries,
        })
    }

    pub fn zero(spec: Arc<FieldSpec>, rows: usize, cols: usize) -> Matrix {
        Matrix {
            spec,
            rows,
            cols,
            entries: vec![Fq::ZERO; rows * cols],
        }
    }

    pub fn identity(spec: Arc<FieldSpec>, n: usize) -> Matrix {
        let mut m = Matrix::zero(spec, n, n);
        for i in 0..n {
            m.set(i, i, Fq::ONE);
        }
        m
    }

    pub fn from_rows(spec: Arc<FieldSpec>, rows: &[Vec<Fq>]) -> Result<Matrix> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let entries = rows.iter().flatten().copied().collect();
        Matrix::new(spec, rows.len(), cols, entries)
    }

    pub fn spec(&self) -> &Arc<FieldSpec> {
        &self.spec
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Fq {
        self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Fq) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Fq] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Fq>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zero(self.spec.clone(), self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c));
            }
        }
        out
    }

    /// Entry-wise map; used for Frobenius twists of bases.
    pub fn map(&self, mut f: impl FnMut(Fq) -> Fq) -> Matrix {
        Matrix {
            spec: self.spec.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|&x| f(x)).collect(),
        }
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_spec(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &*self.spec;
        let mut out = Matrix::zero(self.spec.clone(), self.rows, other.cols);
        for r in 0..self.rows {
            for i in 0..self.cols {
                let a = self.get(r, i);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let v = f.add(out.get(r, c), f.mul(a, other.get(i, c)));
                    out.set(r, c, v);
                }
            }
        }
        Ok(out)
    }

    pub fn stack(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_spec(other)?;
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "cannot stack {} columns on {} columns",
                other.cols, self.cols
            )));
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Matrix::new(
            self.spec.clone(),
            self.rows + other.rows,
            self.cols,
            entries,
        )
    }

    fn check_same_spec(&self, other: &Matrix) -> Result<()> {
        if self.spec.same_field(&other.spec) {
            Ok(())
        } else {
            Err(Error::SpecMismatch)
        }
    }

    /// Reduced row echelon form with first-nonzero pivoting. Returns the
    /// unique RREF together with the pivot columns (increasing) and rank.
    pub fn rref(&self) -> (Matrix, Vec<usize>, usize) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let rank = pivots.len();
        (m, pivots, rank)
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.spec.clone();
        let mut pivots = Vec::new();
        let mut pr = 0usize;
        for c in 0..self.cols {
            if pr == self.rows {
                break;
            }
            let Some(hit) = (pr..self.rows).find(|&r| !self.get(r, c).is_zero()) else {
                continue;
            };
            if hit != pr {
                for j in 0..self.cols {
                    let (a, b) = (self.get(pr, j), self.get(hit, j));
                    self.set(pr, j, b);
                    self.set(hit, j, a);
                }
            }
            let inv = f.inv(self.get(pr, c)).expect("pivot is nonzero");
            for j in 0..self.cols {
                let v = f.mul(self.get(pr, j), inv);
                self.set(pr, j, v);
            }
            for r in 0..self.rows {
                if r == pr {
                    continue;
                }
                let factor = self.get(r, c);
                if factor.is_zero() {
                    continue;
                }
                for j in 0..self.cols {
                    let v = f.sub(self.get(r, j), f.mul(factor, self.get(pr, j)));
                    self.set(r, j, v);
                }
            }
            pivots.push(c);
            pr += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().2
    }

    /// RREF basis of the right kernel {x : M x^T = 0}. Row count is
    /// cols - rank (rank-nullity).
    pub fn kernel_basis(&self) -> Matrix {
        let (r, pivots, rank) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let f = &*self.spec;
        let mut rows = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![Fq::ZERO; self.cols];
            v[fc] = Fq::ONE;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(r.get(i, fc));
            }
            rows.push(v);
        }
        debug_assert_eq!(rows.len(), self.cols - rank);
        if rows.is_empty() {
            return Matrix::zero(self.spec.clone(), 0, self.cols);
        }
        let m = Matrix::from_rows(self.spec.clone(), &rows).expect("kernel rows are uniform");
        m.rref().0
    }

    /// RREF basis of rowspace(self) ∩ rowspace(other), by the Zassenhaus
    /// block trick: row-reduce [[A A] [B 0]]; rows with zero left half
    /// carry intersection vectors in their right half.
    pub fn rowspace_intersection(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_spec(other)?;
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "row spaces live in different ambient dimensions: {} vs {}",
                self.cols, other.cols
            )));
        }
        let n = self.cols;
        let mut rows: Vec<Vec<Fq>> = Vec::with_capacity(self.rows + other.rows);
        for r in 0..self.rows {
            let mut v = self.row(r).to_vec();
            v.extend_from_slice(self.row(r));
            rows.push(v);
        }
        for r in 0..other.rows {
            let mut v = other.row(r).to_vec();
            v.extend(std::iter::repeat_n(Fq::ZERO, n));
            rows.push(v);
        }
        let block = Matrix::from_rows(self.spec.clone(), &rows)?;
        let (red, _, _) = block.rref();
        let mut inter_rows = Vec::new();
        for r in 0..red.rows {
            let left_zero = (0..n).all(|c| red.get(r, c).is_zero());
            let right = red.row(r)[n..].to_vec();
            if left_zero && right.iter().any(|x| !x.is_zero()) {
                inter_rows.push(right);
            }
        }
        let inter = if inter_rows.is_empty() {
            Matrix::zero(self.spec.clone(), 0, n)
        } else {
            Matrix::from_rows(self.spec.clone(), &inter_rows)?.rref().0
        };
        // dim(A∩B) = rank A + rank B - rank [A; B]
        let expect = self.rank() + other.rank() - self.stack(other)?.rank();
        assert_eq!(
            inter.rows, expect,
            "intersection dimension disagrees with the rank formula"
        );
        Ok(inter)
    }

    /// True iff v lies in the row space.
    pub fn row_space_contains(&self, v: &[Fq]) -> Result<bool> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(
                "vector length does not match column count".into(),
            ));
        }
        let vm = Matrix::from_rows(self.spec.clone(), &[v.to_vec()])?;
        Ok(self.stack(&vm)?.rank() == self.rank())
    }

    /// Row-space equality via canonical RREF comparison.
    pub fn row_space_eq(&self, other: &Matrix) -> bool {
        if !self.spec.same_field(&other.spec) || self.cols != other.cols {
            return false;
        }
        let a = self.rref();
        let b = other.rref();
        a.2 == b.2 && (0..a.2 * self.cols).all(|i| a.0.entries[i] == b.0.entries[i])
    }

    /// Text form: header `rows cols`, then one line per row with each
    /// entry serialized as its base-p digits.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.rows, self.cols);
        for r in 0..self.rows {
            let line: Vec<String> = self
                .row(r)
                .iter()
                .map(|&x| self.spec.format_element(x))
                .collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        s
    }

    pub fn from_text(spec: Arc<FieldSpec>, text: &str) -> Result<Matrix> {
        let mut lines = text.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty matrix text".into()))?;
        let dims: Vec<usize> = header
            .split_whitespace()
            .map(|t| {
                t.parse()
                    .map_err(|_| Error::Parse("bad matrix header".into()))
            })
            .collect::<Result<_>>()?;
        if dims.len() != 2 {
            return Err(Error::Parse("matrix header must be `rows cols`".into()));
        }
        let (rows, cols) = (dims[0], dims[1]);
        let h = spec.h() as usize;
        let mut entries = Vec::with_capacity(rows * cols);
        for _ in 0..rows {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse("missing matrix row".into()))?;
            let nums: Vec<u64> = line
                .split_whitespace()
                .map(|t| t.parse().map_err(|_| Error::Parse("bad digit".into())))
                .collect::<Result<_>>()?;
            if nums.len() != cols * h {
                return Err(Error::Parse(format!(
                    "expected {} digits per row, got {}",
                    cols * h,
                    nums.len()
                )));
            }
            for c in 0..cols {
                entries.push(spec.from_digits(&nums[c * h..(c + 1) * h])?);
            }
        }
        Matrix::new(spec, rows, cols, entries)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64, h: u32) -> Arc<FieldSpec> {
        Arc::new(FieldSpec::new(p, h).unwrap())
    }

    fn mat(spec: &Arc<FieldSpec>, rows: &[&[u64]]) -> Matrix {
        let rows: Vec<Vec<Fq>> = rows
            .iter()
            .map(|r| r.iter().map(|&i| spec.element(i).unwrap()).collect())
            .collect();
        Matrix::from_rows(spec.clone(), &rows).unwrap()
    }

    #[test]
    fn rref_of_identity_is_identity() {
        let f = gf(3, 1);
        let id = Matrix::identity(f, 2);
        let (r, pivots, rank) = id.rref();
        assert_eq!(r, id);
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(rank, 2);
    }

    #[test]
    fn rref_eliminates_dependent_rows() {
        let f = gf(3, 1);
        let m = mat(&f, &[&[1, 1], &[2, 2]]);
        let (r, pivots, rank) = m.rref();
        assert_eq!(rank, 1);
        assert_eq!(pivots, vec![0]);
        assert_eq!(r, mat(&f, &[&[1, 1], &[0, 0]]));
    }

    #[test]
    fn rref_of_zero_matrix() {
        let f = gf(3, 1);
        let z = Matrix::zero(f, 2, 3);
        let (r, pivots, rank) = z.rref();
        assert_eq!(r, z);
        assert!(pivots.is_empty());
        assert_eq!(rank, 0);
    }

    #[test]
    fn rref_is_idempotent() {
        let f = gf(3, 2);
        let m = mat(&f, &[&[3, 1, 7], &[4, 4, 0], &[1, 5, 7]]);
        let (r1, _, rank1) = m.rref();
        let (r2, _, rank2) = r1.rref();
        assert_eq!(r1, r2);
        assert_eq!(rank1, rank2);
    }

    #[test]
    fn kernel_of_all_ones_row_over_gf3() {
        let f = gf(3, 1);
        let m = mat(&f, &[&[1, 1, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k.rows(), 2);
        // The vectors (1,2,0) and (1,0,2) lie in the span: the kernel is
        // exactly {x : x1+x2+x3 = 0}, 9 of the 27 vectors.
        assert!(k
            .row_space_contains(&[
                f.element(1).unwrap(),
                f.element(2).unwrap(),
                f.element(0).unwrap()
            ])
            .unwrap());
        assert!(k
            .row_space_contains(&[
                f.element(1).unwrap(),
                f.element(0).unwrap(),
                f.element(2).unwrap()
            ])
            .unwrap());
    }

    #[test]
    fn kernel_of_full_rank_square_is_empty() {
        let f = gf(5, 1);
        let m = mat(&f, &[&[1, 2], &[3, 3]]);
        assert_eq!(m.rank(), 2);
        let k = m.kernel_basis();
        assert_eq!(k.rows(), 0);
        assert_eq!(k.cols(), 2);
    }

    #[test]
    fn kernel_of_zero_row_is_full_space() {
        let f = gf(3, 1);
        let m = Matrix::zero(f.clone(), 1, 3);
        let k = m.kernel_basis();
        assert_eq!(k.rows(), 3);
        assert_eq!(k, Matrix::identity(f, 3));
    }

    #[test]
    fn rank_nullity_exhaustive_small() {
        // rank + nullity = cols across random-ish small matrices over
        // several fields.
        for (p, h) in [(2u64, 1u32), (3, 1), (2, 2), (5, 1), (3, 2)] {
            let f = gf(p, h);
            let q = f.q();
            let mut seed = 1u64;
            for rows in 1..=4usize {
                for cols in 1..=4usize {
                    for _ in 0..8 {
                        let entries: Vec<Fq> = (0..rows * cols)
                            .map(|_| {
                                seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1);
                                f.element((seed >> 33) % q).unwrap()
                            })
                            .collect();
                        let m = Matrix::new(f.clone(), rows, cols, entries).unwrap();
                        assert_eq!(m.kernel_basis().rows() + m.rank(), cols);
                        assert!(m.rank() <= rows.min(cols));
                    }
                }
            }
        }
    }

    #[test]
    fn intersection_with_self_is_identity_operation() {
        let f = gf(3, 1);
        let a = mat(&f, &[&[1, 1, 1], &[1, 0, 0]]);
        let inter = a.rowspace_intersection(&a).unwrap();
        assert!(inter.row_space_eq(&a));
    }

    #[test]
    fn intersection_of_transverse_lines_is_zero() {
        let f = gf(3, 1);
        let a = mat(&f, &[&[1, 0]]);
        let b = mat(&f, &[&[0, 1]]);
        let inter = a.rowspace_intersection(&b).unwrap();
        assert_eq!(inter.rows(), 0);
    }

    #[test]
    fn intersection_of_planes_sharing_a_line() {
        let f = gf(3, 1);
        let a = mat(&f, &[&[1, 1, 1], &[1, 0, 0]]);
        let b = mat(&f, &[&[1, 1, 1], &[0, 1, 0]]);
        let inter = a.rowspace_intersection(&b).unwrap();
        assert_eq!(inter.rows(), 1);
        assert!(inter
            .row_space_contains(&[Fq::ONE, Fq::ONE, Fq::ONE])
            .unwrap());
    }

    #[test]
    fn intersection_matches_exhaustive_enumeration() {
        // Enumerate both row spaces fully and intersect as sets, for a
        // couple of fields and dimensions <= 3 in ambient dimension 4.
        use std::collections::HashSet;
        for (p, h) in [(2u64, 1u32), (3, 1), (3, 2)] {
            let f = gf(p, h);
            let q = f.q();
            let mut seed = 7u64;
            for _ in 0..12 {
                let mk = |seed: &mut u64| {
                    let rows = 1 + (*seed as usize) % 3;
                    let entries: Vec<Fq> = (0..rows * 4)
                        .map(|_| {
                            *seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1);
                            f.element((*seed >> 33) % q).unwrap()
                        })
                        .collect();
                    Matrix::new(f.clone(), rows, 4, entries).unwrap()
                };
                let a = mk(&mut seed);
                let b = mk(&mut seed);

                let span = |m: &Matrix| -> HashSet<Vec<Fq>> {
                    let (r, _, rank) = m.rref();
                    let mut set = HashSet::new();
                    let total = q.pow(rank as u32);
                    for mut idx in 0..total {
                        let mut v = vec![Fq::ZERO; 4];
                        for row in 0..rank {
                            let c = f.element(idx % q).unwrap();
                            idx /= q;
                            for j in 0..4 {
                                v[j] = f.add(v[j], f.mul(c, r.get(row, j)));
                            }
                        }
                        set.insert(v);
                    }
                    set
                };
                let expected: HashSet<Vec<Fq>> =
                    span(&a).intersection(&span(&b)).cloned().collect();
                let inter = a.rowspace_intersection(&b).unwrap();
                assert_eq!(span(&inter).len(), expected.len());
                assert!(span(&inter).is_subset(&expected));
            }
        }
    }

    #[test]
    fn spec_mismatch_is_rejected() {
        let f1 = gf(3, 1);
        let f2 = gf(5, 1);
        let a = Matrix::zero(f1, 1, 2);
        let b = Matrix::zero(f2, 1, 2);
        assert!(matches!(a.stack(&b), Err(Error::SpecMismatch)));
        assert!(matches!(
            a.rowspace_intersection(&b),
            Err(Error::SpecMismatch)
        ));
    }

    #[test]
    fn column_mismatch_is_rejected() {
        let f = gf(3, 1);
        let a = Matrix::zero(f.clone(), 1, 2);
        let b = Matrix::zero(f, 1, 3);
        assert!(a.rowspace_intersection(&b).is_err());
    }

    #[test]
    fn text_round_trip() {
        let f = gf(3, 2);
        let m = mat(&f, &[&[0, 1, 8], &[3, 4, 5]]);
        let t = m.to_text();
        assert!(t.starts_with("2 3\n"));
        let back = Matrix::from_text(f, &t).unwrap();
        assert_eq!(m, back);
    }
}
