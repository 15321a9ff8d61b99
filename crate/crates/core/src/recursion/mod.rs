//! The spectral recursion for complexes and order filters, checked as exact
//! identities between characteristic polynomials.
//!
//! Multiplying a spectrum generating term by `q` adds 1 to every eigenvalue,
//! which on char polys is `p(x) ↦ p(x - 1)`. Moving the `-q` term across,
//! the recursion at `t^i` becomes a product identity with no root extraction,
//! so irrational spectra are handled exactly.

mod battery;
mod special;

pub use battery::{identity_battery, BatteryReport, IdentityResult};
pub use special::{check_specializations, SpecializationReport};

use std::fmt;

use crate::complex::{face_label, Face, OrderFilter, RelativeFaceSet, SimplicialComplex, Vertex};
use crate::error::{Error, Result};
use crate::laplacian::{laplacian, SpectrumPoly};
use crate::linalg::{char_poly, integer_roots, SpectrumMultiset};
use crate::poly::{BiPoly, IntPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionCheck {
    /// The `t`-exponent; the identity compares eigenvalues of `L_{i-1}`.
    pub i: usize,
    pub lhs: IntPoly,
    pub rhs: IntPoly,
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecursionReport {
    pub vertex: Vertex,
    pub name: String,
    pub holds: bool,
    pub per_dimension: Vec<DimensionCheck>,
    /// First mismatch, if any.
    pub note: Option<String>,
    /// Direct comparison of the spectrum polynomials, when all of them are integral.
    pub direct: Option<bool>,
}

impl RecursionReport {
    pub fn first_failure(&self) -> Option<usize> {
        self.per_dimension.iter().find(|d| !d.equal).map(|d| d.i)
    }
}

impl fmt::Display for RecursionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, d) in self.per_dimension.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(f, "vertex={} dim={} {}", self.name, d.i, if d.equal { "HOLDS" } else { "FAILS" })?;
        }
        Ok(())
    }
}

/// `P_i`: char poly of `L_{i-1}`, with `P_i = 1` for `i < 0`.
fn p(x: &RelativeFaceSet, i: isize) -> IntPoly {
    if i < 0 {
        return IntPoly::one();
    }
    char_poly(&laplacian(x, i - 1))
}

fn degree(p: &IntPoly) -> usize {
    p.degree().unwrap_or(0)
}

/// Per-index char polys of the four operands, cached for the direct comparison.
struct Operands {
    whole: Vec<IntPoly>,
    del: Vec<IntPoly>,
    con: Vec<IntPoly>,
    pair: Vec<IntPoly>,
}

impl Operands {
    fn new(w: &RelativeFaceSet, d: &RelativeFaceSet, c: &RelativeFaceSet, pr: &RelativeFaceSet, top: usize) -> Self {
        let all = |x: &RelativeFaceSet| (0..=top as isize).map(|i| p(x, i)).collect::<Vec<_>>();
        Operands { whole: all(w), del: all(d), con: all(c), pair: all(pr) }
    }

    fn at(v: &[IntPoly], i: isize) -> IntPoly {
        if i < 0 {
            IntPoly::one()
        } else {
            v[i as usize].clone()
        }
    }

    fn spectrum(v: &[IntPoly]) -> Option<BiPoly> {
        let spectra: Vec<SpectrumMultiset> = v.iter().map(|p| integer_roots(p, None)).collect();
        let s = SpectrumPoly::from_spectra(spectra.iter().enumerate(), false);
        s.is_integral().then_some(s.poly)
    }
}

/// `pair_shift` is 0 for complexes and 1 for order filters, where the pair
/// term carries an extra factor `t`.
fn build_report(name: String, vertex: Vertex, ops: &Operands, top: usize, pair_shift: isize) -> RecursionReport {
    let mut per_dimension = vec![];
    let mut note = None;
    for i in 0..=top as isize {
        let pair = Operands::at(&ops.pair, i - pair_shift);
        let (whole, del, con) = (&ops.whole[i as usize], &ops.del[i as usize], Operands::at(&ops.con, i - 1));
        let balanced = degree(whole) == degree(del) + degree(&con);
        let lhs = whole * &pair.shift(-1);
        let rhs = &(&del.shift(-1) * &con.shift(-1)) * &pair;
        let equal = balanced && lhs == rhs;
        if !equal && note.is_none() {
            note = Some(if balanced {
                format!("t^{i}: {lhs} != {rhs}")
            } else {
                format!("t^{i}: face counts do not balance")
            });
        }
        per_dimension.push(DimensionCheck { i: i as usize, lhs, rhs, equal });
    }
    let holds = per_dimension.iter().all(|d| d.equal);
    let direct = (|| {
        let s = Operands::spectrum(&ops.whole)?;
        let (sd, sc, sp) =
            (Operands::spectrum(&ops.del)?, Operands::spectrum(&ops.con)?, Operands::spectrum(&ops.pair)?);
        let q = BiPoly::q();
        let qt = BiPoly::monomial(1, 1, 1);
        let pair_coeff = (&BiPoly::one() - &q).shift(pair_shift as i32, 0);
        let rhs = &(&(&q * &sd) + &(&qt * &sc)) + &(&pair_coeff * &sp);
        Some(s == rhs)
    })();
    RecursionReport { vertex, name, holds, per_dimension, note, direct }
}

/// `S_Δ = q S_{Δ-e} + qt S_{Δ/e} + (1-q) S_{(Δ-e, Δ/e)}`, checked at every
/// `t^i`, `0 ≤ i ≤ dim Δ + 1`, as
/// `P_i^Δ(x) P_i^{pair}(x-1) = P_i^{Δ-e}(x-1) P_{i-1}^{Δ/e}(x-1) P_i^{pair}(x)`.
pub fn check_recursion(cx: &SimplicialComplex, e: Vertex) -> Result<RecursionReport> {
    let name = vertex_name(cx.ambient(), e)?;
    let del = cx.delete(e)?;
    let con = cx.contract(e)?;
    let pair = del.relative_to(&con)?;
    let top = cx.dim().map_or(0, |d| (d + 1) as usize);
    if cx.is_void() {
        return Ok(RecursionReport {
            vertex: e,
            name,
            holds: true,
            per_dimension: vec![],
            note: None,
            direct: Some(true),
        });
    }
    let ops = Operands::new(&cx.as_relative(), &del.as_relative(), &con.as_relative(), &pair, top);
    Ok(build_report(name, e, &ops, top, 0))
}

/// `S_Ψ = q S_{Ψ-e} + qt S_{Ψ/e} + (1-q) t S_{(Ψ/e, Ψ-e)}`, checked as
/// `P_i^Ψ(x) P_{i-1}^{pair}(x-1) = P_i^{Ψ-e}(x-1) P_{i-1}^{Ψ/e}(x-1) P_{i-1}^{pair}(x)`.
pub fn check_recursion_filter(filter: &OrderFilter, e: Vertex) -> Result<RecursionReport> {
    let name = vertex_name(filter.ambient(), e)?;
    let del = filter.delete(e)?;
    let con = filter.contract(e)?;
    let pair = con.relative_to(&del)?;
    let Some(d) = filter.max_dim() else {
        return Ok(RecursionReport {
            vertex: e,
            name,
            holds: true,
            per_dimension: vec![],
            note: None,
            direct: Some(true),
        });
    };
    let top = (d + 1) as usize;
    let ops = Operands::new(&filter.as_relative(), &del.as_relative(), &con.as_relative(), &pair, top);
    Ok(build_report(name, e, &ops, top, 1))
}

fn vertex_name(ambient: &[String], e: Vertex) -> Result<String> {
    ambient.get(e).cloned().ok_or(Error::VertexOutOfRange(e))
}

/// Runs `check` on every vertex with up to `jobs` threads; reports come back in vertex order.
fn all_vertices<F>(n: usize, jobs: usize, check: F) -> Vec<RecursionReport>
where
    F: Fn(Vertex) -> RecursionReport + Sync,
{
    let jobs = jobs.clamp(1, n.max(1));
    if jobs == 1 {
        return (0..n).map(&check).collect();
    }
    let mut out: Vec<Option<RecursionReport>> = vec![None; n];
    std::thread::scope(|s| {
        let handles: Vec<_> = (0..jobs)
            .map(|j| {
                let check = &check;
                s.spawn(move || (j..n).step_by(jobs).map(|v| (v, check(v))).collect::<Vec<_>>())
            })
            .collect();
        for h in handles {
            for (v, r) in h.join().expect("worker panicked") {
                out[v] = Some(r);
            }
        }
    });
    out.into_iter().map(|r| r.expect("every vertex checked")).collect()
}

pub fn check_all_vertices(cx: &SimplicialComplex, jobs: usize) -> Vec<RecursionReport> {
    all_vertices(cx.num_vertices(), jobs, |v| check_recursion(cx, v).expect("vertex in range"))
}

pub fn check_all_vertices_filter(filter: &OrderFilter, jobs: usize) -> Vec<RecursionReport> {
    all_vertices(filter.num_vertices(), jobs, |v| check_recursion_filter(filter, v).expect("vertex in range"))
}

/// Names the faces of a complex for diagnostics.
pub fn describe(cx: &SimplicialComplex) -> String {
    let facets: Vec<String> = cx.facets().into_iter().map(|f: Face| face_label(cx.ambient(), f)).collect();
    format!("[{}] on {}", facets.join(" "), cx.ambient().join(""))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::Matroid;

    fn cx(v: &[&str], f: &[&[&str]]) -> SimplicialComplex {
        SimplicialComplex::from_named_facets(v, f).unwrap()
    }

    fn path3() -> SimplicialComplex {
        cx(&["a", "b", "c", "d"], &[&["a", "b"], &["b", "c"], &["c", "d"]])
    }

    #[test]
    fn single_vertex_holds() {
        let r = check_recursion(&cx(&["a"], &[&["a"]]), 0).unwrap();
        assert!(r.holds);
        assert_eq!(r.direct, Some(true));
        assert_eq!(r.to_string(), "vertex=a dim=0 HOLDS\nvertex=a dim=1 HOLDS");
    }

    #[test]
    fn path_fails_everywhere() {
        for r in check_all_vertices(&path3(), 2) {
            assert!(!r.holds, "{r}");
            assert!(r.note.is_some());
        }
    }

    #[test]
    fn u12_holds() {
        let c = Matroid::uniform(1, 2).unwrap().independence_complex();
        let r = check_recursion(&c, 0).unwrap();
        assert!(r.holds);
        assert_eq!(r.direct, Some(true));
    }

    #[test]
    fn loops_hold() {
        let c = cx(&["a", "b", "c", "d", "z"], &[&["a", "b"], &["b", "c"], &["c", "d"]]);
        assert!(check_recursion(&c, 4).unwrap().holds);
        assert!(!check_recursion(&c, 0).unwrap().holds);
    }

    #[test]
    fn void_and_range() {
        let void = SimplicialComplex::void(vec!["a".into()]).unwrap();
        assert!(check_recursion(&void, 0).unwrap().holds);
        assert!(check_recursion(&path3(), 9).is_err());
    }

    #[test]
    fn filters_follow_their_complexes() {
        let point = cx(&["a"], &[&["a"]]);
        assert!(check_recursion_filter(&point.dual(), 0).unwrap().holds);
        for r in check_all_vertices_filter(&path3().dual(), 1) {
            assert!(!r.holds);
        }
        let full = OrderFilter::full(vec!["a".into(), "b".into(), "c".into()]).unwrap();
        assert!(check_all_vertices_filter(&full, 1).iter().all(|r| r.holds && r.direct == Some(true)));
    }

    #[test]
    fn job_count_does_not_change_output() {
        let c = cx(&["a", "b", "c", "d", "e"], &[&["a", "b", "c"], &["c", "d"], &["d", "e"], &["a", "e"]]);
        let one = check_all_vertices(&c, 1);
        assert_eq!(one, check_all_vertices(&c, 3));
        assert_eq!(one, check_all_vertices(&c, 8));
    }

    #[test]
    fn direct_comparison_agrees_when_integral() {
        let shapes: &[&[&[&str]]] = &[
            &[&["a", "b"], &["b", "c"]],
            &[&["a", "b", "c"], &["c", "d"]],
            &[&["a", "b"], &["c", "d"]],
            &[&["a", "b"], &["a", "c"], &["a", "d"], &["b", "c"]],
        ];
        for f in shapes {
            let c = cx(&["a", "b", "c", "d"], f);
            for r in check_all_vertices(&c, 1) {
                if let Some(d) = r.direct {
                    assert_eq!(d, r.holds, "{}", describe(&c));
                }
            }
        }
    }
}
