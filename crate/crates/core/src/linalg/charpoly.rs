//! Exact characteristic polynomials `det(xI - A)` of integer matrices.
//!
//! The working method reduces to Hessenberg form modulo a handful of 62-bit
//! primes and reconstructs the integer coefficients by CRT. Enough primes are
//! used to exceed twice the Gershgorin-style coefficient bound, so the result
//! is exact, not probabilistic. The Faddeev-LeVerrier recurrence over big
//! integers is kept as an independent reference implementation.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::IntMatrix;
use crate::poly::IntPoly;

/// `det(xI - A)`. The empty matrix has char poly 1.
pub fn char_poly(a: &IntMatrix) -> IntPoly {
    assert!(a.is_square(), "char poly of a non-square matrix");
    if a.rows() == 0 {
        return IntPoly::one();
    }
    a.blocks().iter().map(|b| char_poly_block(&a.submatrix(b))).product()
}

fn char_poly_block(a: &IntMatrix) -> IntPoly {
    let n = a.rows();
    if n == 1 {
        return IntPoly::linear(&BigInt::from(a[(0, 0)]));
    }
    // |c_k| <= C(n,k) R^k <= (1+R)^n, and we need the modulus to exceed twice that.
    let r = a.max_abs_row_sum() as f64;
    let bits_needed = (n as f64 * (1.0 + r).log2()).ceil() as usize + 4;
    let primes = primes();
    let mut modulus = BigInt::one();
    let mut acc: Vec<BigInt> = vec![BigInt::zero(); n + 1];
    let mut used = 0;
    while (modulus.bits() as usize) <= bits_needed {
        let p = primes[used];
        used += 1;
        let cp = char_poly_mod(a, p);
        let bp = BigInt::from(p);
        // Incremental CRT: acc ≡ old (mod modulus), acc ≡ cp (mod p).
        let m_mod_p = (&modulus % &bp).to_u64().unwrap();
        let inv = inv_mod(m_mod_p, p);
        for (k, c) in acc.iter_mut().enumerate() {
            let cur = (&*c % &bp + &bp).to_u64().unwrap() % p;
            let delta = mul_mod(sub_mod(cp[k], cur, p), inv, p);
            *c += &modulus * BigInt::from(delta);
        }
        modulus *= bp;
    }
    let half = &modulus >> 1;
    let coeffs = acc
        .into_iter()
        .map(|c| {
            let c = c.mod_floor(&modulus);
            if c > half {
                c - &modulus
            } else {
                c
            }
        })
        .collect();
    IntPoly::new(coeffs)
}

/// Char poly modulo `p` via reduction to upper Hessenberg form, ascending coefficients.
fn char_poly_mod(a: &IntMatrix, p: u64) -> Vec<u64> {
    let n = a.rows();
    let mut h: Vec<Vec<u64>> =
        (0..n).map(|i| a.row(i).iter().map(|&x| x.rem_euclid(p as i64) as u64).collect()).collect();

    for j in 0..n.saturating_sub(2) {
        let Some(piv) = (j + 1..n).find(|&i| h[i][j] != 0) else { continue };
        if piv != j + 1 {
            h.swap(piv, j + 1);
            for row in h.iter_mut() {
                row.swap(piv, j + 1);
            }
        }
        let inv = inv_mod(h[j + 1][j], p);
        for i in j + 2..n {
            if h[i][j] == 0 {
                continue;
            }
            let u = mul_mod(h[i][j], inv, p);
            let pivot = h[j + 1].clone();
            for (x, &y) in h[i].iter_mut().zip(&pivot) {
                *x = sub_mod(*x, mul_mod(u, y, p), p);
            }
            for row in h.iter_mut() {
                let t = mul_mod(u, row[i], p);
                row[j + 1] = add_mod(row[j + 1], t, p);
            }
        }
    }

    // p_m = (x - h_mm) p_{m-1} - Σ_{i<m} h_im (Π_{i<l<=m} h_{l,l-1}) p_{i-1}
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for m in 0..n {
        let prev = &polys[m];
        let mut next = vec![0u64; m + 2];
        for (k, &c) in prev.iter().enumerate() {
            next[k + 1] = add_mod(next[k + 1], c, p);
            next[k] = sub_mod(next[k], mul_mod(h[m][m], c, p), p);
        }
        let mut prod = 1u64;
        for i in (0..m).rev() {
            prod = mul_mod(prod, h[i + 1][i], p);
            if prod == 0 {
                break;
            }
            let coef = mul_mod(h[i][m], prod, p);
            if coef == 0 {
                continue;
            }
            for (k, &c) in polys[i].iter().enumerate() {
                next[k] = sub_mod(next[k], mul_mod(coef, c, p), p);
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

/// Reference implementation: the Faddeev-LeVerrier trace recurrence in big integers.
/// Every division is exact; a remainder indicates a bug and panics.
pub fn char_poly_faddeev_leverrier(a: &IntMatrix) -> IntPoly {
    assert!(a.is_square(), "char poly of a non-square matrix");
    let n = a.rows();
    let am: Vec<Vec<BigInt>> = (0..n).map(|i| a.row(i).iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    // M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        let mut next = big_mul(&am, &m);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &coeffs[n - k + 1];
        }
        m = next;
        let am_k = big_mul(&am, &m);
        let tr: BigInt = (0..n).map(|i| am_k[i][i].clone()).sum();
        let (q, r) = tr.div_rem(&BigInt::from(k));
        assert!(r.is_zero(), "inexact division in Faddeev-LeVerrier");
        coeffs[n - k] = -q;
    }
    IntPoly::new(coeffs)
}

fn big_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    let mut out = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
    }
    out
}

fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &w in &WITNESSES {
        if n.is_multiple_of(w) {
            return n == w;
        }
    }
    let (mut d, mut s) = (n - 1, 0);
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &w in &WITNESSES {
        let mut x = pow_mod(w, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes just below 2^62, largest first. 256 of them give over 15000 bits of modulus.
fn primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let mut out = Vec::with_capacity(256);
        let mut c = (1u64 << 62) - 1;
        while out.len() < 256 {
            if is_prime(c) {
                out.push(c);
            }
            c -= 2;
        }
        out
    })
}

/// Bound on |λ| for every eigenvalue λ of `a`.
pub fn eigenvalue_bound(a: &IntMatrix) -> BigInt {
    BigInt::from(a.max_abs_row_sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_cases() {
        let a = IntMatrix::from_rows(&[[2, -1], [-1, 2]]);
        assert_eq!(char_poly(&a), IntPoly::from_i64(&[3, -4, 1]));
        assert_eq!(char_poly(&IntMatrix::zeros(3, 3)), IntPoly::monomial(3));
        assert_eq!(char_poly(&IntMatrix::zeros(0, 0)), IntPoly::one());
    }

    #[test]
    fn path_graph_laplacian() {
        // x(x-2)(x^2-4x+2) = x^4 - 6x^3 + 10x^2 - 4x
        let l = IntMatrix::from_rows(&[[1, -1, 0, 0], [-1, 2, -1, 0], [0, -1, 2, -1], [0, 0, -1, 1]]);
        assert_eq!(char_poly(&l), IntPoly::from_i64(&[0, -4, 10, -6, 1]));
        assert_eq!(char_poly_faddeev_leverrier(&l), char_poly(&l));
    }

    #[test]
    fn large_coefficients_need_several_primes() {
        let n = 12;
        let mut a = IntMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                a[(i, j)] = ((i * 7 + j * 13) % 19) as i64 * 1_000_003 - 9_000_000;
            }
        }
        assert_eq!(char_poly(&a), char_poly_faddeev_leverrier(&a));
    }

    #[test]
    fn generated_primes_are_distinct_and_large() {
        let p = primes();
        assert!(p.windows(2).all(|w| w[0] > w[1]));
        assert!(p.iter().all(|&q| q > 1 << 61));
    }

    proptest! {
        #[test]
        fn agrees_with_faddeev_leverrier(n in 0usize..7, entries in prop::collection::vec(-4i64..5, 49)) {
            let mut a = IntMatrix::zeros(n, n);
            for i in 0..n {
                for j in 0..n {
                    a[(i, j)] = entries[i * 7 + j];
                }
            }
            prop_assert_eq!(char_poly(&a), char_poly_faddeev_leverrier(&a));
        }
    }
}
