//! Integer root extraction and exact real-root isolation for integer polynomials.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::poly::IntPoly;

/// Integer roots with multiplicities plus the cofactor that has no integer roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpectrumMultiset {
    pub roots: BTreeMap<i64, usize>,
    pub residual: IntPoly,
}

impl SpectrumMultiset {
    pub fn is_integral(&self) -> bool {
        self.residual.is_constant()
    }

    pub fn multiplicity(&self, lambda: i64) -> usize {
        self.roots.get(&lambda).copied().unwrap_or(0)
    }

    /// Number of eigenvalues, integral or not.
    pub fn len(&self) -> usize {
        self.roots.values().sum::<usize>() + self.residual.degree().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Reassembles `Π (x - λ)^m · residual`.
    pub fn char_poly(&self) -> IntPoly {
        let mut p = self.residual.clone();
        for (&r, &m) in &self.roots {
            let lin = IntPoly::linear(&BigInt::from(r));
            for _ in 0..m {
                p = &p * &lin;
            }
        }
        p
    }

    /// Integer eigenvalues in decreasing order, repeated by multiplicity.
    pub fn sorted_desc(&self) -> Vec<i64> {
        self.roots.iter().rev().flat_map(|(&r, &m)| std::iter::repeat_n(r, m)).collect()
    }
}

impl fmt::Display for SpectrumMultiset {
    /// `0^1 2^1 residual [2,-4,1]`; the residual is omitted when constant.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.roots.iter().map(|(r, m)| format!("{r}^{m}")).collect();
        if !self.residual.is_constant() {
            parts.push(format!("residual {}", self.residual));
        }
        f.write_str(&parts.join(" "))
    }
}

/// Splits off every integer root of a monic polynomial.
///
/// Candidates are limited to `|λ| ≤ bound` (when given) and to the Fujiwara
/// bound, and must divide the trailing nonzero coefficient.
pub fn integer_roots(p: &IntPoly, bound: Option<&BigInt>) -> SpectrumMultiset {
    assert!(!p.is_zero(), "roots of the zero polynomial");
    let mut roots = BTreeMap::new();
    let (k, mut rest) = p.strip_x_power();
    if k > 0 {
        roots.insert(0, k);
    }
    if rest.is_constant() {
        return SpectrumMultiset { roots, residual: rest };
    }
    let mut limit = fujiwara_bound(&rest);
    if let Some(b) = bound {
        limit = limit.min(b.clone());
    }
    let limit = limit.to_i64().expect("root bound exceeds i64");
    for mag in 1..=limit {
        for lambda in [mag, -mag] {
            if rest.is_constant() {
                break;
            }
            let c0 = rest.coeff(0);
            if !c0.is_multiple_of(&BigInt::from(lambda)) {
                continue;
            }
            let (m, cof) = rest.split_root(&BigInt::from(lambda));
            if m > 0 {
                roots.insert(lambda, m);
                rest = cof;
            }
        }
    }
    SpectrumMultiset { roots, residual: rest }
}

/// `2 · max_k |a_{n-k} / a_n|^{1/k}`, rounded up; bounds every complex root.
fn fujiwara_bound(p: &IntPoly) -> BigInt {
    let n = p.degree().unwrap_or(0);
    let lead = p.leading().unwrap().abs();
    let mut best = BigInt::zero();
    for k in 1..=n {
        let a = p.coeff(n - k).abs();
        if a.is_zero() {
            continue;
        }
        let ratio = a.div_ceil(&lead);
        let mut r = ratio.nth_root(k as u32);
        if num_traits::pow(r.clone(), k) < ratio {
            r += 1;
        }
        best = best.max(r);
    }
    best * 2
}

type QPoly = Vec<BigRational>;

fn q_trim(mut p: QPoly) -> QPoly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn q_from_int(p: &IntPoly) -> QPoly {
    p.coeffs().iter().map(|c| BigRational::from_integer(c.clone())).collect()
}

fn q_derivative(p: &QPoly) -> QPoly {
    q_trim(p.iter().enumerate().skip(1).map(|(k, c)| c * BigRational::from_integer(k.into())).collect())
}

fn q_sub(a: &QPoly, b: &QPoly) -> QPoly {
    let n = a.len().max(b.len());
    let z = BigRational::zero();
    q_trim((0..n).map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z)).collect())
}

fn q_div_rem(a: &QPoly, b: &QPoly) -> (QPoly, QPoly) {
    assert!(!b.is_empty(), "division by the zero polynomial");
    let mut r = a.clone();
    let db = b.len() - 1;
    if r.len() < b.len() {
        return (vec![], r);
    }
    let mut q = vec![BigRational::zero(); r.len() - db];
    let lead = b[db].clone();
    for k in (0..q.len()).rev() {
        let c = &r[k + db] / &lead;
        if !c.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                r[k + j] = &r[k + j] - &c * bj;
            }
        }
        q[k] = c;
    }
    (q_trim(q), q_trim(r))
}

fn q_monic(p: QPoly) -> QPoly {
    let lead = p.last().cloned().unwrap();
    p.into_iter().map(|c| c / &lead).collect()
}

fn q_gcd(a: &QPoly, b: &QPoly) -> QPoly {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let (_, r) = q_div_rem(&a, &b);
        a = b;
        b = r;
    }
    q_monic(a)
}

fn q_eval(p: &QPoly, x: &BigRational) -> BigRational {
    p.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
}

/// Yun's square-free decomposition: monic, pairwise coprime factors `g_i`
/// with `p = lead · Π g_i^i`. Factors of degree zero are dropped.
fn square_free(p: &IntPoly) -> Vec<(QPoly, usize)> {
    let a = q_from_int(p);
    let b = q_derivative(&a);
    let c = q_gcd(&a, &b);
    let mut w = q_div_rem(&a, &c).0;
    let mut y = q_div_rem(&b, &c).0;
    let mut z = q_sub(&y, &q_derivative(&w));
    let mut out = vec![];
    let mut i = 1;
    while w.len() > 1 {
        let g = q_gcd(&w, &z);
        w = q_div_rem(&w, &g).0;
        y = q_div_rem(&z, &g).0;
        z = q_sub(&y, &q_derivative(&w));
        if g.len() > 1 {
            out.push((g, i));
        }
        i += 1;
    }
    out
}

/// A real root located in `[lo, hi]` (degenerate when the root is rational).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolatedRoot {
    pub lo: BigRational,
    pub hi: BigRational,
    /// Index into [`RealRoots::factors`].
    pub factor: usize,
    pub multiplicity: usize,
}

/// Real roots of a polynomial, isolated by Sturm sequences.
#[derive(Clone, Debug)]
pub struct RealRoots {
    /// Square-free factors with their multiplicities and exact root sums.
    pub factors: Vec<FactorInfo>,
    /// Roots in increasing order.
    pub roots: Vec<IsolatedRoot>,
}

#[derive(Clone, Debug)]
pub struct FactorInfo {
    pub degree: usize,
    pub multiplicity: usize,
    /// Sum of all complex roots of the factor, each counted once.
    pub root_sum: BigRational,
    /// Whether every root of the factor is real.
    pub all_real: bool,
}

/// Isolates every real root of `p` in an interval of width at most `2^-precision_bits`.
pub fn isolate_real_roots(p: &IntPoly, precision_bits: u32) -> RealRoots {
    let width = BigRational::new(BigInt::one(), BigInt::one() << precision_bits);
    let mut factors = vec![];
    let mut roots = vec![];
    for (idx, (g, mult)) in square_free(p).into_iter().enumerate() {
        let deg = g.len() - 1;
        let root_sum = -g[deg - 1].clone() / &g[deg];
        let sturm = sturm_chain(&g);
        let bound = cauchy_bound(&g);
        let mut found = vec![];
        isolate(&g, &sturm, -bound.clone(), bound, &width, &mut found);
        factors.push(FactorInfo { degree: deg, multiplicity: mult, root_sum, all_real: found.len() == deg });
        roots.extend(found.into_iter().map(|(lo, hi)| IsolatedRoot { lo, hi, factor: idx, multiplicity: mult }));
    }
    roots.sort_by(|a, b| a.lo.cmp(&b.lo));
    RealRoots { factors, roots }
}

fn cauchy_bound(g: &QPoly) -> BigRational {
    let lead = g.last().unwrap().abs();
    let m = g[..g.len() - 1].iter().map(|c| c.abs() / &lead).max().unwrap_or_else(BigRational::zero);
    m + BigRational::one()
}

fn sturm_chain(g: &QPoly) -> Vec<QPoly> {
    let mut chain = vec![g.clone(), q_derivative(g)];
    loop {
        let n = chain.len();
        if chain[n - 1].is_empty() {
            chain.pop();
            break;
        }
        let (_, r) = q_div_rem(&chain[n - 2], &chain[n - 1]);
        if r.is_empty() {
            break;
        }
        chain.push(r.into_iter().map(|c| -c).collect());
    }
    chain
}

fn sign_changes(chain: &[QPoly], x: &BigRational) -> usize {
    let mut changes = 0;
    let mut last = 0;
    for p in chain {
        let v = q_eval(p, x);
        let s = if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        };
        if s != 0 {
            if last != 0 && s != last {
                changes += 1;
            }
            last = s;
        }
    }
    changes
}

/// Roots of the square-free `g` in `(lo, hi]`, each refined to `width`.
fn isolate(
    g: &QPoly,
    chain: &[QPoly],
    lo: BigRational,
    hi: BigRational,
    width: &BigRational,
    out: &mut Vec<(BigRational, BigRational)>,
) {
    let count = sign_changes(chain, &lo) - sign_changes(chain, &hi);
    if count == 0 {
        return;
    }
    if count == 1 {
        out.push(refine(g, lo, hi, width));
        return;
    }
    let mid = (&lo + &hi) / BigRational::from_integer(2.into());
    isolate(g, chain, lo, mid.clone(), width, out);
    isolate(g, chain, mid, hi, width, out);
}

/// Bisects an interval `(lo, hi]` holding exactly one simple root.
fn refine(g: &QPoly, mut lo: BigRational, mut hi: BigRational, width: &BigRational) -> (BigRational, BigRational) {
    let two = BigRational::from_integer(2.into());
    if q_eval(g, &hi).is_zero() {
        return (hi.clone(), hi);
    }
    let sign_hi = q_eval(g, &hi).is_positive();
    while &(&hi - &lo) > width {
        let mid = (&lo + &hi) / &two;
        let v = q_eval(g, &mid);
        if v.is_zero() {
            return (mid.clone(), mid);
        }
        if v.is_positive() == sign_hi {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    (lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn path_spectrum() {
        let p = IntPoly::from_i64(&[0, -4, 10, -6, 1]);
        let s = integer_roots(&p, None);
        assert_eq!(s.roots, BTreeMap::from([(0, 1), (2, 1)]));
        assert_eq!(s.residual, IntPoly::from_i64(&[2, -4, 1]));
        assert_eq!(s.to_string(), "0^1 2^1 residual [2,-4,1]");
        assert_eq!(s.char_poly(), p);
    }

    #[test]
    fn repeated_and_negative_roots() {
        // (x-3)^2 (x+1) x^2 (x^2+1)
        let p = IntPoly::from_i64(&[9, -6, 1])
            * IntPoly::from_i64(&[1, 1])
            * IntPoly::monomial(2)
            * IntPoly::from_i64(&[1, 0, 1]);
        let s = integer_roots(&p, Some(&BigInt::from(100)));
        assert_eq!(s.roots, BTreeMap::from([(-1, 1), (0, 2), (3, 2)]));
        assert_eq!(s.residual, IntPoly::from_i64(&[1, 0, 1]));
        assert_eq!(s.len(), 7);
    }

    #[test]
    fn bound_cuts_search() {
        let p = IntPoly::from_i64(&[-5, 1]);
        assert!(!integer_roots(&p, Some(&BigInt::from(4))).is_integral());
        assert!(integer_roots(&p, Some(&BigInt::from(5))).is_integral());
    }

    #[test]
    fn isolates_quadratic_irrationals() {
        // x^2 - 4x + 2 has roots 2 ± √2
        let r = isolate_real_roots(&IntPoly::from_i64(&[2, -4, 1]), 64);
        assert_eq!(r.roots.len(), 2);
        assert_eq!(r.factors[0].root_sum, q(4, 1));
        assert!(r.factors[0].all_real);
        let lo = &r.roots[0];
        assert!(lo.lo < q(586, 1000) && lo.hi > q(585, 1000));
        assert!(&lo.hi - &lo.lo <= q(1, 1 << 62));
    }

    #[test]
    fn square_free_parts() {
        // (x^2 - 2)^2 (x^2 + 1)
        let a = IntPoly::from_i64(&[-2, 0, 1]);
        let p = &(&a * &a) * &IntPoly::from_i64(&[1, 0, 1]);
        let r = isolate_real_roots(&p, 32);
        assert_eq!(r.roots.len(), 2);
        assert!(r.roots.iter().all(|x| x.multiplicity == 2));
        assert_eq!(r.factors.len(), 2);
        assert!(r.factors.iter().any(|f| !f.all_real));
    }
}
