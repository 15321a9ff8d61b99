use std::fmt;

/// Dense row-major integer matrix.
///
/// Laplacian entries are bounded by the number of faces, so `i64` storage is
/// ample; everything derived from it (char polys, ranks) is computed exactly.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.as_ref().len(), cols, "ragged matrix rows");
            data.extend_from_slice(r.as_ref());
        }
        IntMatrix { rows: rows.len(), cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn add(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "dimension mismatch in sum");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        IntMatrix { rows: self.rows, cols: self.cols, data }
    }

    /// Kronecker sum `A ⊗ I + I ⊗ B`, whose eigenvalues are all sums `λ + μ`.
    pub fn kronecker_sum(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
        assert!(a.is_square() && b.is_square());
        let (n, m) = (a.rows, b.rows);
        let mut out = Self::zeros(n * m, n * m);
        for i in 0..n {
            for j in 0..n {
                if a[(i, j)] != 0 {
                    for k in 0..m {
                        out[(i * m + k, j * m + k)] += a[(i, j)];
                    }
                }
            }
            for k in 0..m {
                for l in 0..m {
                    out[(i * m + k, i * m + l)] += b[(k, l)];
                }
            }
        }
        out
    }

    /// Largest absolute row sum; bounds every eigenvalue in absolute value.
    pub fn max_abs_row_sum(&self) -> u64 {
        (0..self.rows).map(|i| self.row(i).iter().map(|x| x.unsigned_abs()).sum::<u64>()).max().unwrap_or(0)
    }

    /// Connected components of the symmetric sparsity pattern, each sorted.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        assert!(self.is_square());
        let n = self.rows;
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            comp[s] = id;
            let mut stack = vec![s];
            let mut members = vec![];
            while let Some(u) = stack.pop() {
                members.push(u);
                for v in 0..n {
                    if comp[v] == usize::MAX && (self[(u, v)] != 0 || self[(v, u)] != 0) {
                        comp[v] = id;
                        stack.push(v);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn submatrix(&self, idx: &[usize]) -> IntMatrix {
        let mut m = Self::zeros(idx.len(), idx.len());
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                m[(a, b)] = self[(i, j)];
            }
        }
        m
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = i64;
    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries((0..self.rows).map(|i| self.row(i))).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_and_transpose() {
        let a = IntMatrix::from_rows(&[[1, 2, 0], [0, -1, 3]]);
        let ata = a.transpose().mul(&a);
        assert!(ata.is_symmetric());
        assert_eq!(ata.row(1), &[2, 5, -3]);
    }

    #[test]
    fn blocks_split_components() {
        let m = IntMatrix::from_rows(&[[1, 0, 1], [0, 2, 0], [1, 0, 1]]);
        assert_eq!(m.blocks(), vec![vec![0, 2], vec![1]]);
    }
}
