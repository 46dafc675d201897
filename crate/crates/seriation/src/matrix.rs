//! Dense symmetric matrices, degree/Laplacian operators and Frobenius geometry.
//!
//! Everything downstream (signals, observations, Laplacians) lives in
//! [`SymMatrix`]: a dense, row-major `n x n` matrix that is symmetric by
//! construction. Symmetry is enforced when a matrix is built, not checked on
//! every access, so `entry(i, j) == entry(j, i)` holds exactly.

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Dense symmetric real matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    /// Zero matrix of dimension `n`.
    pub fn zeros(n: usize) -> Self {
        SymMatrix {
            n,
            data: vec![0.0; n * n],
        }
    }

    /// Build from a function of `(i, j)`. Only the upper triangle (`i <= j`)
    /// is evaluated; the lower triangle is mirrored from it.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = SymMatrix::zeros(n);
        for i in 0..n {
            for j in i..n {
                let v = f(i, j);
                m.data[i * n + j] = v;
                m.data[j * n + i] = v;
            }
        }
        m
    }

    /// Build from row-major entries, mirroring the upper triangle into the
    /// lower one. The lower triangle of `rows` is ignored.
    pub fn from_rows_mirrored(n: usize, rows: &[f64]) -> Result<Self> {
        if rows.len() != n * n {
            return Err(Error::DimensionMismatch {
                left: rows.len(),
                right: n * n,
            });
        }
        Ok(SymMatrix::from_fn(n, |i, j| rows[i * n + j]))
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    /// Row `i` as a contiguous slice (equal to column `i` by symmetry).
    #[inline]
    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    /// Set `A[i][j]` and `A[j][i]` simultaneously.
    pub fn set_sym(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] = v;
        self.data[j * self.n + i] = v;
    }

    pub(crate) fn as_slice(&self) -> &[f64] {
        &self.data
    }

    /// Degree vector `d_i = sum_j A[i][j]` (full row sum, diagonal included).
    pub fn degree_vector(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.row(i).iter().sum()).collect()
    }

    /// Laplacian `L = diag(d) - A` with `d` the degree vector. Every row of
    /// `L` sums to zero up to floating accumulation, so the all-ones vector
    /// is always in the kernel.
    pub fn laplacian(&self) -> SymMatrix {
        let d = self.degree_vector();
        let mut l = SymMatrix::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                l.data[i * self.n + j] = if i == j {
                    d[i] - self.entry(i, j)
                } else {
                    -self.entry(i, j)
                };
            }
        }
        l
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    /// Frobenius distance `||A - B||_F`.
    pub fn frobenius_dist(&self, other: &SymMatrix) -> Result<f64> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let s: f64 = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b) * (a - b))
            .sum();
        Ok(s.sqrt())
    }

    /// Conjugation by a permutation: the output matrix `M` satisfies
    /// `M[p(i)][p(j)] = A[i][j]`, i.e. row/column `i` is relabeled to `p(i)`.
    ///
    /// Conjugating by the identity is the identity map, and
    /// `conjugate(conjugate(A, p), p.inverse()) == A` exactly.
    pub fn conjugate(&self, p: &Permutation) -> Result<SymMatrix> {
        if self.n != p.len() {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: p.len(),
            });
        }
        let mut out = SymMatrix::zeros(self.n);
        for i in 0..self.n {
            let pi = p.image(i);
            for j in 0..self.n {
                out.data[pi * self.n + p.image(j)] = self.data[i * self.n + j];
            }
        }
        Ok(out)
    }

    /// Entrywise maximum absolute difference.
    pub fn max_abs_diff(&self, other: &SymMatrix) -> Result<f64> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max))
    }

    /// Serialize as plain-text CSV: `n` lines of `n` comma-separated values.
    /// Uses the shortest round-trip decimal form, so `from_csv_str` recovers
    /// the matrix bit-exactly.
    pub fn to_csv_string(&self) -> String {
        let mut s = String::new();
        for i in 0..self.n {
            for j in 0..self.n {
                if j > 0 {
                    s.push(',');
                }
                s.push_str(&format!("{}", self.entry(i, j)));
            }
            s.push('\n');
        }
        s
    }

    /// Parse a square CSV matrix. Asymmetry beyond `1e-9` relative to the
    /// Frobenius norm is rejected unless `symmetrize` is set, in which case
    /// the result is `(A + A^T) / 2`. Otherwise the upper triangle wins.
    pub fn from_csv_str(text: &str, symmetrize: bool) -> Result<SymMatrix> {
        let mut rows: Vec<Vec<f64>> = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let row: Vec<f64> = line
                .split(',')
                .map(|f| {
                    f.trim()
                        .parse::<f64>()
                        .map_err(|e| Error::Parse(format!("line {}: {}", lineno + 1, e)))
                })
                .collect::<Result<_>>()?;
            rows.push(row);
        }
        let n = rows.len();
        if n == 0 {
            return Err(Error::Parse("empty matrix".into()));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Parse(format!(
                    "row {} has {} fields, expected {}",
                    i + 1,
                    row.len(),
                    n
                )));
            }
        }
        let frob: f64 = rows
            .iter()
            .flat_map(|r| r.iter().map(|x| x * x))
            .sum::<f64>()
            .sqrt();
        if symmetrize {
            return Ok(SymMatrix::from_fn(n, |i, j| {
                0.5 * (rows[i][j] + rows[j][i])
            }));
        }
        let tol = 1e-9 * frob;
        for i in 0..n {
            for j in (i + 1)..n {
                let diff = (rows[i][j] - rows[j][i]).abs();
                if diff > tol {
                    return Err(Error::Asymmetric { i, j, diff });
                }
            }
        }
        Ok(SymMatrix::from_fn(n, |i, j| rows[i][j]))
    }

    /// Read a CSV matrix from a file. See [`SymMatrix::from_csv_str`].
    pub fn from_csv_file(path: &std::path::Path, symmetrize: bool) -> Result<SymMatrix> {
        let text = std::fs::read_to_string(path)?;
        SymMatrix::from_csv_str(&text, symmetrize)
    }

    pub fn to_csv_file(&self, path: &std::path::Path) -> Result<()> {
        std::fs::write(path, self.to_csv_string())?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signal::ToeplitzSignal;

    #[test]
    fn degree_zero_matrix() {
        let a = SymMatrix::zeros(3);
        assert_eq!(a.degree_vector(), vec![0.0, 0.0, 0.0]);
    }

    #[test]
    fn degree_all_ones() {
        let a = SymMatrix::from_fn(2, |_, _| 1.0);
        assert_eq!(a.degree_vector(), vec![2.0, 2.0]);
    }

    #[test]
    fn degree_tridiagonal_path() {
        // Path adjacency with unit weights: endpoints have degree 1.
        let a = ToeplitzSignal::tridiagonal(4, 1.0).to_dense();
        assert_eq!(a.degree_vector(), vec![1.0, 2.0, 2.0, 1.0]);
    }

    #[test]
    fn laplacian_all_ones_2x2() {
        let a = SymMatrix::from_fn(2, |_, _| 1.0);
        let l = a.laplacian();
        assert_eq!(l.entry(0, 0), 1.0);
        assert_eq!(l.entry(0, 1), -1.0);
        assert_eq!(l.entry(1, 0), -1.0);
        assert_eq!(l.entry(1, 1), 1.0);
    }

    #[test]
    fn laplacian_rows_sum_to_zero() {
        let a = ToeplitzSignal::setting(3, 12).unwrap().to_dense();
        let l = a.laplacian();
        let bound = 1e-9 * a.frobenius_norm();
        for i in 0..12 {
            let s: f64 = l.row(i).iter().sum();
            assert!(s.abs() <= bound, "row {} sums to {}", i, s);
        }
    }

    #[test]
    fn frobenius_basics() {
        let a = SymMatrix::from_fn(2, |i, j| if i != j { 1.0 } else { 0.0 });
        let z = SymMatrix::zeros(2);
        assert_eq!(a.frobenius_dist(&a).unwrap(), 0.0);
        assert!((a.frobenius_dist(&z).unwrap() - 2f64.sqrt()).abs() < 1e-15);
        let b = SymMatrix::zeros(3);
        assert!(a.frobenius_dist(&b).is_err());
    }

    #[test]
    fn conjugate_identity_and_roundtrip() {
        let a = ToeplitzSignal::setting(4, 7).unwrap().to_dense();
        let id = Permutation::identity(7);
        assert_eq!(a.conjugate(&id).unwrap(), a);

        let p = Permutation::from_one_based(&[3, 1, 7, 2, 5, 6, 4]).unwrap();
        let c = a.conjugate(&p).unwrap();
        let back = c.conjugate(&p.inverse()).unwrap();
        assert_eq!(back, a);
    }

    #[test]
    fn conjugate_fixes_flat_toeplitz() {
        // All off-diagonal values equal: any relabeling leaves the matrix unchanged.
        let s = ToeplitzSignal::new(vec![5.0, 2.0, 2.0, 2.0, 2.0]);
        let a = s.to_dense();
        let p = Permutation::from_one_based(&[4, 2, 5, 1, 3]).unwrap();
        assert_eq!(a.conjugate(&p).unwrap(), a);
    }

    #[test]
    fn conjugate_swap_on_path() {
        // Relabeling 2<->3 on the 4-path: edge (1,2) becomes (1,3).
        let a = ToeplitzSignal::tridiagonal(4, 1.0).to_dense();
        let p = Permutation::from_one_based(&[1, 3, 2, 4]).unwrap();
        let c = a.conjugate(&p).unwrap();
        assert_eq!(c.entry(0, 2), 1.0);
        assert_eq!(c.entry(0, 1), 0.0);
    }

    #[test]
    fn csv_roundtrip_and_asymmetry() {
        let a = ToeplitzSignal::setting(5, 6).unwrap().to_dense();
        let s = a.to_csv_string();
        let b = SymMatrix::from_csv_str(&s, false).unwrap();
        assert_eq!(a, b);

        let bad = "0,1\n0.5,0\n";
        assert!(SymMatrix::from_csv_str(bad, false).is_err());
        let sym = SymMatrix::from_csv_str(bad, true).unwrap();
        assert_eq!(sym.entry(0, 1), 0.75);
        assert_eq!(sym.entry(1, 0), 0.75);
    }
}
