use std::fmt;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{check_recursion, check_recursion_filter, describe};
use crate::complex::{RelativeFaceSet, SimplicialComplex};
use crate::laplacian::{betti_rank_oracle, laplacian, laplacian_down, s_dd_poly, spectrum_poly};
use crate::linalg::{char_poly, IntMatrix};
use crate::matroid::{
    e_step_polynomial, krs_step_identity, spectrum_poly_direct, spectrum_poly_krs, spectrum_poly_recursive, Matroid,
};
use crate::poly::{BiPoly, IntPoly};
use crate::random::{random_complex, random_matroid, random_permutation, random_shifted_complex};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityResult {
    pub name: &'static str,
    pub instances: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl IdentityResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BatteryReport {
    pub seed: u64,
    pub results: Vec<IdentityResult>,
}

impl BatteryReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.passed())
    }
}

impl fmt::Display for BatteryReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, r) in self.results.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            let ok = r.instances - r.failures;
            write!(f, "{} {}/{} {}", r.name, ok, r.instances, if r.passed() { "PASS" } else { "FAIL" })?;
            if let Some(w) = &r.first_failure {
                write!(f, " first failure: {w}")?;
            }
        }
        Ok(())
    }
}

type Check = fn(&mut ChaCha8Rng) -> Result<(), String>;

const IDENTITIES: &[(&str, Check)] = &[
    ("join-product", join_product),
    ("circuit-cone-shift", circuit_cone_shift),
    ("dual-reversal", dual_reversal),
    ("complement-shift", complement_shift),
    ("union-formula", union_formula),
    ("skeleta-equivalence", skeleta_equivalence),
    ("alexander-equivalence", alexander_equivalence),
    ("hodge-pairing", hodge_pairing),
    ("precursor", precursor),
    ("betti-m0", betti_m0),
    ("magic-chi", magic_chi),
    ("krs-step", krs_step),
    ("e-step-order", e_step_order),
    ("matroid-three-way", matroid_three_way),
];

/// Runs every cross-module identity on `instances` seeded random inputs each.
/// Identities run in parallel; each has its own stream derived from `seed`.
pub fn identity_battery(seed: u64, instances: usize) -> BatteryReport {
    let results = std::thread::scope(|s| {
        let handles: Vec<_> = IDENTITIES
            .iter()
            .enumerate()
            .map(|(k, &(name, check))| {
                s.spawn(move || {
                    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (k as u64 + 1).wrapping_mul(0x9e37_79b9_7f4a_7c15));
                    let mut failures = 0;
                    let mut first_failure = None;
                    for _ in 0..instances {
                        if let Err(w) = check(&mut rng) {
                            failures += 1;
                            first_failure.get_or_insert(w);
                        }
                    }
                    IdentityResult { name, instances, failures, first_failure }
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("identity worker panicked")).collect()
    });
    BatteryReport { seed, results }
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

/// Char poly of `L_i`, with `1` for the empty operator.
fn cp(p: &RelativeFaceSet, i: isize) -> IntPoly {
    char_poly(&laplacian(p, i))
}

fn strip(p: &IntPoly) -> IntPoly {
    p.strip_x_power().1
}

fn strip_root(p: &IntPoly, r: i64) -> IntPoly {
    p.split_root(&BigInt::from(r)).1
}

fn lin(r: i64) -> IntPoly {
    IntPoly::linear(&BigInt::from(r))
}

/// A complex from one of several families, so that both outcomes of the recursion occur.
fn mixed_complex(rng: &mut ChaCha8Rng) -> SimplicialComplex {
    let n = rng.gen_range(2..=5);
    match rng.gen_range(0..4) {
        0 | 1 => random_complex(rng, n, ""),
        2 => random_shifted_complex(rng, n, ""),
        _ => {
            let m = random_matroid(rng, 5);
            let cx = m.independence_complex();
            let perm = random_permutation(rng, cx.num_vertices());
            cx.reorder(&perm).expect("permutation")
        }
    }
}

/// Two random complexes on disjoint vertex names, with at most 4 and 3 vertices.
fn disjoint_complexes(rng: &mut ChaCha8Rng) -> (SimplicialComplex, SimplicialComplex) {
    let (n, m) = (rng.gen_range(1..=4), rng.gen_range(1..=3));
    (random_complex(rng, n, ""), random_complex(rng, m, "x"))
}

/// A complex relative to one of its skeleta, VOID included.
fn random_pair(rng: &mut ChaCha8Rng) -> RelativeFaceSet {
    let n = rng.gen_range(1..=5);
    let cx = random_complex(rng, n, "");
    let top = cx.dim().unwrap_or(-1);
    let sub = cx.skeleton(rng.gen_range(-2..=top));
    cx.relative_to(&sub).expect("skeleton is a subcomplex")
}

fn join_product(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let (a, b) = disjoint_complexes(rng);
    let (pa, pb) = (a.as_relative(), b.as_relative());
    let j = pa.join(&pb).map_err(|e| e.to_string())?;
    let (na, nb) = (a.num_vertices() as isize, b.num_vertices() as isize);
    for i in 0..=na + nb {
        let mut expected = IntPoly::one();
        for x in 0..=i {
            let y = i - x;
            if x > na || y > nb {
                continue;
            }
            let k = IntMatrix::kronecker_sum(&laplacian(&pa, x - 1), &laplacian(&pb, y - 1));
            expected = &expected * &char_poly(&k);
        }
        let got = cp(&j, i - 1);
        ensure(got == expected, || format!("{} * {} at t^{i}", describe(&a), describe(&b)))?;
    }
    let (sa, sb, sj) = (spectrum_poly(&pa), spectrum_poly(&pb), spectrum_poly(&j));
    if sa.is_integral() && sb.is_integral() {
        ensure(sj.is_integral() && sj.poly == &sa.poly * &sb.poly, || "S_{P*Q} != S_P S_Q".into())?;
    }
    Ok(())
}

fn circuit_cone_shift(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let n = rng.gen_range(1..=5);
    let cx = random_complex(rng, n, "");
    let a: Vec<String> = (0..rng.gen_range(1..=2)).map(|k| format!("A{k}")).collect();
    let r = RelativeFaceSet::circuit_cone(&a, &cx).map_err(|e| e.to_string())?;
    let base = cx.as_relative();
    let shift = a.len() as isize;
    for i in -1..=n as isize + shift {
        let expected = if i - shift >= -1 { cp(&base, i - shift) } else { IntPoly::one() };
        ensure(cp(&r, i) == expected, || format!("{} at dim {i}", describe(&cx)))?;
    }
    let (s, sr) = (spectrum_poly(&base), spectrum_poly(&r));
    if s.is_integral() {
        ensure(sr.poly == s.poly.shift(shift as i32, 0), || "S_{A∘Δ} != t^|A| S_Δ".into())?;
    }
    Ok(())
}

fn dual_reversal(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let p = random_pair(rng);
    let d = p.dual();
    let n = p.num_vertices() as isize;
    for i in -1..n {
        ensure(cp(&p, i) == cp(&d, n - i - 2), || format!("s_{i} of {:?}", p.faces()))?;
    }
    let (s, sd) = (spectrum_poly(&p), spectrum_poly(&d));
    if s.is_integral() {
        let mut reflected = BiPoly::zero();
        for ((t, q), c) in s.poly.terms() {
            reflected.add_term(n as i32 - t, q, c);
        }
        ensure(sd.poly == reflected, || "S_{P*}(t,q) != t^n S_P(1/t,q)".into())?;
    }
    Ok(())
}

fn complement_shift(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let n = rng.gen_range(1..=5);
    let cx = random_complex(rng, n, "");
    let c = cx.complement().as_relative();
    let base = cx.as_relative();
    let n = n as isize;
    for i in -1..n {
        let lhs = strip_root(&cp(&c, i), n as i64);
        let rhs = strip_root(&cp(&base, i - 1), n as i64);
        ensure(lhs == rhs, || format!("{} at dim {i}", describe(&cx)))?;
    }
    Ok(())
}

fn union_formula(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let (a, b) = disjoint_complexes(rng);
    let u = a.disjoint_union(&b).map_err(|e| e.to_string())?;
    let (n, m) = (a.non_loop_count() as i64, b.non_loop_count() as i64);
    let (pa, pb, pu) = (a.as_relative(), b.as_relative(), u.as_relative());
    let top = u.num_vertices() as isize;
    for i in 0..=top {
        let (gu, ga, gb) = (cp(&pu, i - 1), cp(&pa, i - 1), cp(&pb, i - 1));
        let ok = match i {
            0 => &gu * &(&lin(n) * &lin(m)) == &(&ga * &gb) * &lin(n + m),
            1 => &gu * &(&lin(n) * &lin(m)) == &(&(&ga * &gb) * &lin(n + m)) * &lin(0),
            _ => gu == &ga * &gb,
        };
        ensure(ok, || format!("{} ∪ {} at t^{i}", describe(&a), describe(&b)))?;
    }
    let (sa, sb, su) = (spectrum_poly(&pa), spectrum_poly(&pb), spectrum_poly(&pu));
    if sa.is_integral() && sb.is_integral() && su.is_integral() {
        let (n, m) = (n as i32, m as i32);
        let one_t = &BiPoly::one() + &BiPoly::t();
        let qs = &(&BiPoly::monomial(1, 0, n + m) - &BiPoly::monomial(1, 0, n)) - &BiPoly::monomial(1, 0, m);
        let expected = &(&(&sa.poly + &sb.poly) + &(&one_t * &qs)) + &BiPoly::t();
        ensure(su.poly == expected, || "union polynomial".into())?;
    }
    Ok(())
}

fn holds(cx: &SimplicialComplex, e: usize) -> bool {
    check_recursion(cx, e).expect("vertex in range").holds
}

fn skeleta_equivalence(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let cx = mixed_complex(rng);
    let Some(d) = cx.dim() else { return Ok(()) };
    let (low, pure) = (cx.skeleton(d - 1), cx.pure_skeleton(d));
    for e in 0..cx.num_vertices() {
        let whole = holds(&cx, e);
        ensure(whole == (holds(&low, e) && holds(&pure, e)), || format!("{} at {e}", describe(&cx)))?;
    }
    Ok(())
}

fn alexander_equivalence(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let cx = mixed_complex(rng);
    let alex = cx.alexander_dual();
    let (dual, comp) = (cx.dual(), cx.complement());
    for e in 0..cx.num_vertices() {
        let h = holds(&cx, e);
        let others = [
            holds(&alex, e),
            check_recursion_filter(&dual, e).expect("vertex").holds,
            check_recursion_filter(&comp, e).expect("vertex").holds,
        ];
        ensure(others.iter().all(|&o| o == h), || format!("{} at {e}: {h} vs {others:?}", describe(&cx)))?;
    }
    // Eigenvalues other than n agree between L_i(Δ) and L_{n-i-3}(Δ^∨).
    let n = cx.num_vertices() as isize;
    let (p, pa) = (cx.as_relative(), alex.as_relative());
    for i in -1..n {
        let (a, b) = (strip_root(&cp(&p, i), n as i64), strip_root(&cp(&pa, n - i - 3), n as i64));
        ensure(a == b, || format!("{} m_λ at dim {i}", describe(&cx)))?;
    }
    Ok(())
}

fn hodge_pairing(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let p = random_pair(rng);
    for i in -1..p.num_vertices() as isize {
        let lhs = strip(&cp(&p, i));
        let rhs = &strip(&char_poly(&laplacian_down(&p, i))) * &strip(&char_poly(&laplacian_down(&p, i + 1)));
        ensure(lhs == rhs, || format!("s_{i} of {:?}", p.faces()))?;
    }
    Ok(())
}

fn precursor(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let p = random_pair(rng);
    let n = p.num_vertices() as isize;
    for i in -1..n {
        let beta = betti_rank_oracle(&p, i);
        let down = &strip(&char_poly(&laplacian_down(&p, i))) * &strip(&char_poly(&laplacian_down(&p, i + 1)));
        ensure(cp(&p, i) == &IntPoly::monomial(beta) * &down, || format!("dim {i} of {:?}", p.faces()))?;
    }
    let (s, sdd) = (spectrum_poly(&p), s_dd_poly(&p));
    if s.is_integral() && sdd.is_integral() {
        let mut b = BiPoly::zero();
        for i in -1..n {
            b.add_term(i as i32 + 1, 0, betti_rank_oracle(&p, i) as i64);
        }
        let t = BiPoly::t();
        let rhs = &(&(&BiPoly::one() + &t) * &sdd.poly) + &(&t * &b);
        ensure(&t * &s.poly == rhs, || "tS != (1+t)S'' + tB".into())?;
    }
    Ok(())
}

fn betti_m0(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let p = random_pair(rng);
    for i in -1..p.num_vertices() as isize {
        let m0 = cp(&p, i).strip_x_power().0;
        ensure(m0 == betti_rank_oracle(&p, i), || format!("dim {i} of {:?}", p.faces()))?;
    }
    Ok(())
}

fn magic_chi(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let m = random_matroid(rng, 6);
    let chi = m.reduced_euler_char().abs();
    for e in 0..m.len() {
        let sum: i64 = m.circuits_through(e).into_iter().map(|c| m.contract_set(c).reduced_euler_char().abs()).sum();
        ensure(chi == sum, || format!("bases {} at {e}", m.label_bases()))?;
    }
    Ok(())
}

fn krs_step(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let m = random_matroid(rng, 6);
    let (l, r) = krs_step_identity(&m);
    ensure(l == r, || format!("bases {}: {l:?} vs {r:?}", m.label_bases()))
}

fn e_step_order(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let m = random_matroid(rng, 6);
    let perms: Vec<Vec<usize>> = (0..5).map(|_| random_permutation(rng, m.len())).collect();
    for e in 0..m.len() {
        let (l, r) = e_step_polynomial(&m, e);
        ensure(l == r, || format!("bases {} at {e}", m.label_bases()))?;
        for perm in &perms {
            let moved = m.reorder(perm).expect("permutation");
            let pos = perm.iter().position(|&p| p == e).expect("permutation");
            ensure(e_step_polynomial(&moved, pos) == (l.clone(), r.clone()), || {
                format!("bases {} at {e} under {perm:?}", m.label_bases())
            })?;
        }
    }
    Ok(())
}

fn matroid_three_way(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let m: Matroid = random_matroid(rng, 6);
    let direct = spectrum_poly_direct(&m);
    let krs = spectrum_poly_krs(&m);
    ensure(direct.is_integral(), || format!("non-integral spectrum for {}", m.label_bases()))?;
    ensure(krs == direct.poly && spectrum_poly_recursive(&m) == direct.poly, || m.label_bases())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_battery_passes_and_is_deterministic() {
        let a = identity_battery(7, 12);
        assert!(a.passed(), "{a}");
        assert_eq!(a, identity_battery(7, 12));
        assert_eq!(a.results.len(), IDENTITIES.len());
    }
}
