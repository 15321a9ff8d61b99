//! Exact polynomials: univariate over big integers, and bivariate Laurent
//! polynomials in `t` and `q` with machine-integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Univariate integer polynomial, coefficients stored in ascending degree.
///
/// The representation is always trimmed: no trailing zero coefficients, and
/// the zero polynomial has an empty coefficient list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly { coeffs: vec![BigInt::one()] }
    }

    /// `x - root`
    pub fn linear(root: &BigInt) -> Self {
        IntPoly::new(vec![-root.clone(), BigInt::one()])
    }

    /// `x^k`
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        IntPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Returns `p(x + c)` (a Taylor shift). `p(x - 1)` is `shift(-1)`.
    pub fn shift(&self, c: i64) -> IntPoly {
        if c == 0 || self.coeffs.len() <= 1 {
            return self.clone();
        }
        let c = BigInt::from(c);
        let mut a = self.coeffs.clone();
        let n = a.len();
        // Repeated synthetic division by (x - c) evaluated in place.
        for i in 0..n {
            for j in (i..n - 1).rev() {
                let t = &a[j + 1] * &c;
                a[j] += t;
            }
        }
        IntPoly::new(a)
    }

    /// Exact division by `x - r`, returning `None` when `r` is not a root.
    pub fn div_linear(&self, r: &BigInt) -> Option<IntPoly> {
        let n = self.coeffs.len();
        if n == 0 {
            return Some(IntPoly::zero());
        }
        let mut quotient = vec![BigInt::zero(); n - 1];
        let mut carry = BigInt::zero();
        for k in (0..n).rev() {
            let v = &self.coeffs[k] + &carry * r;
            if k == 0 {
                if !v.is_zero() {
                    return None;
                }
            } else {
                quotient[k - 1] = v.clone();
                carry = v;
            }
        }
        Some(IntPoly::new(quotient))
    }

    /// Splits off the largest power of `x` dividing the polynomial.
    pub fn strip_x_power(&self) -> (usize, IntPoly) {
        if self.is_zero() {
            return (0, IntPoly::zero());
        }
        let k = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        (k, IntPoly { coeffs: self.coeffs[k..].to_vec() })
    }

    /// Multiplicity of `r` as a root, together with the cofactor.
    pub fn split_root(&self, r: &BigInt) -> (usize, IntPoly) {
        let mut mult = 0;
        let mut p = self.clone();
        while !p.is_zero() {
            match p.div_linear(r) {
                Some(q) => {
                    mult += 1;
                    p = q;
                }
                None => break,
            }
        }
        (mult, p)
    }

    /// Coefficients as `i64`, if they all fit.
    pub fn to_i64_vec(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(|c| c.to_i64()).collect()
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c * BigInt::from(k)).collect())
    }

    /// Divides every coefficient by their gcd and makes the leading coefficient positive.
    pub fn primitive(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        let sign = if self.coeffs.last().unwrap().is_negative() { -BigInt::one() } else { BigInt::one() };
        let g = g * sign;
        IntPoly::new(self.coeffs.iter().map(|c| c / &g).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Mul for IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: IntPoly) -> IntPoly {
        &self * &rhs
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl std::iter::Product for IntPoly {
    fn product<I: Iterator<Item = IntPoly>>(iter: I) -> IntPoly {
        iter.fold(IntPoly::one(), |acc, p| &acc * &p)
    }
}

/// Renders as an ascending coefficient list, e.g. `[2,-4,1]` for `x^2 - 4x + 2`.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        if self.coeffs.is_empty() {
            write!(f, "0")?;
        }
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// Laurent polynomial in `t` and `q` with integer coefficients.
///
/// Keys are `(t exponent, q exponent)`; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    terms: BTreeMap<(i32, i32), i64>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        BiPoly::monomial(1, 0, 0)
    }

    pub fn monomial(coeff: i64, t: i32, q: i32) -> Self {
        let mut p = BiPoly::zero();
        p.add_term(t, q, coeff);
        p
    }

    pub fn t() -> Self {
        BiPoly::monomial(1, 1, 0)
    }

    pub fn q() -> Self {
        BiPoly::monomial(1, 0, 1)
    }

    pub fn add_term(&mut self, t: i32, q: i32, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let e = self.terms.entry((t, q)).or_insert(0);
        *e += coeff;
        if *e == 0 {
            self.terms.remove(&(t, q));
        }
    }

    pub fn coeff(&self, t: i32, q: i32) -> i64 {
        self.terms.get(&(t, q)).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms as `((t, q), coefficient)` in ascending key order.
    pub fn terms(&self) -> impl Iterator<Item = ((i32, i32), i64)> + '_ {
        self.terms.iter().map(|(&k, &v)| (k, v))
    }

    pub fn scale(&self, c: i64) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(t, q), &v) in &self.terms {
            out.add_term(t, q, v * c);
        }
        out
    }

    /// Multiplies by `t^dt q^dq`.
    pub fn shift(&self, dt: i32, dq: i32) -> BiPoly {
        BiPoly { terms: self.terms.iter().map(|(&(t, q), &v)| ((t + dt, q + dq), v)).collect() }
    }

    /// Substitutes a value for `q`, leaving a polynomial in `t` keyed by exponent.
    pub fn eval_q(&self, q: i64) -> BTreeMap<i32, i64> {
        let mut out = BTreeMap::new();
        for (&(t, e), &v) in &self.terms {
            assert!(e >= 0 || q != 0, "negative power of q at q = 0");
            let qv = if e >= 0 { q.pow(e as u32) } else { 1 / q.pow((-e) as u32) };
            *out.entry(t).or_insert(0) += v * qv;
        }
        out.retain(|_, v| *v != 0);
        out
    }

    /// Substitutes a value for `t`, leaving a polynomial in `q` keyed by exponent.
    pub fn eval_t(&self, t: i64) -> BTreeMap<i32, i64> {
        let mut out = BTreeMap::new();
        for (&(e, q), &v) in &self.terms {
            assert!(e >= 0, "negative power of t");
            *out.entry(q).or_insert(0) += v * t.pow(e as u32);
        }
        out.retain(|_, v| *v != 0);
        out
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(t, q), &v) in &rhs.terms {
            out.add_term(t, q, v);
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(t, q), &v) in &rhs.terms {
            out.add_term(t, q, -v);
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        self.scale(-1)
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(t1, q1), &a) in &self.terms {
            for (&(t2, q2), &b) in &rhs.terms {
                out.add_term(t1 + t2, q1 + q2, a * b);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for BiPoly {
            type Output = BiPoly;
            fn $m(self, rhs: BiPoly) -> BiPoly { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

fn write_power(f: &mut fmt::Formatter<'_>, var: &str, e: i32) -> fmt::Result {
    match e {
        1 => write!(f, "{var}"),
        _ => write!(f, "{var}^{e}"),
    }
}

/// Renders terms by ascending `t` exponent and, within one power of `t`,
/// descending `q` exponent: `q^2 + q^2*t + t`.
impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<_> = self.terms.iter().collect();
        keys.sort_by(|a, b| a.0 .0.cmp(&b.0 .0).then(b.0 .1.cmp(&a.0 .1)));
        for (n, (&(t, q), &c)) in keys.into_iter().enumerate() {
            let mag = c.unsigned_abs();
            if n == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut first = true;
            if mag != 1 || (t == 0 && q == 0) {
                write!(f, "{mag}")?;
                first = false;
            }
            if q != 0 {
                if !first {
                    write!(f, "*")?;
                }
                write_power(f, "q", q)?;
                first = false;
            }
            if t != 0 {
                if !first {
                    write!(f, "*")?;
                }
                write_power(f, "t", t)?;
            }
        }
        Ok(())
    }
}
