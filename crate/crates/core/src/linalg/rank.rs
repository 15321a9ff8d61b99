use num_bigint::BigInt;
use num_traits::Zero;

use super::IntMatrix;

/// Exact rank by fraction-free (Bareiss) elimination over the integers.
pub fn rank(a: &IntMatrix) -> usize {
    let (rows, cols) = (a.rows(), a.cols());
    let mut m: Vec<Vec<BigInt>> = (0..rows).map(|i| a.row(i).iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut prev = BigInt::from(1);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, piv);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = (&m[r][c] * &m[i][j] - &m[i][c] * &m[r][j]) / &prev;
                m[i][j] = v;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks() {
        assert_eq!(rank(&IntMatrix::zeros(3, 2)), 0);
        assert_eq!(rank(&IntMatrix::zeros(0, 4)), 0);
        assert_eq!(rank(&IntMatrix::from_rows(&[[1, 2], [2, 4]])), 1);
        assert_eq!(rank(&IntMatrix::from_rows(&[[0, 1, 1], [1, 0, 1], [1, 1, 0]])), 3);
        // the cycle's boundary matrix has a one-dimensional kernel
        let d1 = IntMatrix::from_rows(&[[-1, -1, 0], [1, 0, -1], [0, 1, 1]]);
        assert_eq!(rank(&d1), 2);
    }
}
