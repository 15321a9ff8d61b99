use std::fmt;

use crate::complex::{RelativeFaceSet, SimplicialComplex, Vertex};
use crate::error::Result;
use crate::laplacian::betti_rank_oracle;

/// The recursion at `q = 0`, `q = 1`, `t = 0` and `t = -1`, each verified
/// from its own combinatorial meaning rather than from spectra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecializationReport {
    pub vertex: Vertex,
    /// `β̃_i(Δ) = β̃_i(Δ-e, Δ/e)` for every `i`, by boundary ranks.
    pub q0: bool,
    /// `f_i(Δ) = f_i(Δ-e) + f_{i-1}(Δ/e)`.
    pub q1: bool,
    /// Non-loop vertex counts: `v(Δ) = v(Δ-e) + 1` unless `e` is a loop.
    pub t0: bool,
    /// `χ̃(Δ) = χ̃(Δ-e) - χ̃(Δ/e)`, with `χ̃` from rank-oracle Betti numbers.
    pub t_minus_1: bool,
}

impl SpecializationReport {
    pub fn holds(&self) -> bool {
        self.q0 && self.q1 && self.t0 && self.t_minus_1
    }
}

impl fmt::Display for SpecializationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word = |b: bool| if b { "HOLDS" } else { "FAILS" };
        write!(
            f,
            "vertex={} q=0 {} q=1 {} t=0 {} t=-1 {}",
            self.vertex,
            word(self.q0),
            word(self.q1),
            word(self.t0),
            word(self.t_minus_1)
        )
    }
}

fn betti(p: &RelativeFaceSet, top: isize) -> Vec<usize> {
    (-1..=top).map(|i| betti_rank_oracle(p, i)).collect()
}

fn reduced_euler(p: &RelativeFaceSet, top: isize) -> i64 {
    betti(p, top).iter().zip(-1..).map(|(&b, i): (&usize, i64)| if i % 2 == 0 { b as i64 } else { -(b as i64) }).sum()
}

pub fn check_specializations(cx: &SimplicialComplex, e: Vertex) -> Result<SpecializationReport> {
    let del = cx.delete(e)?;
    let con = cx.contract(e)?;
    let pair = del.relative_to(&con)?;
    let top = cx.num_vertices() as isize;
    let q0 = betti(&cx.as_relative(), top) == betti(&pair, top);
    let q1 = (-1..=top).all(|i| cx.f(i) == del.f(i) + con.f(i - 1));
    let t0 = if cx.is_void() {
        del.is_void()
    } else if cx.is_loop(e)? {
        cx.non_loop_count() == del.non_loop_count()
    } else {
        cx.non_loop_count() == del.non_loop_count() + 1
    };
    let chi = |c: &SimplicialComplex| reduced_euler(&c.as_relative(), top);
    let t_minus_1 = chi(cx) == chi(&del) - chi(&con) && chi(cx) == cx.reduced_euler_characteristic();
    Ok(SpecializationReport { vertex: e, q0, q1, t0, t_minus_1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(v: &[&str], f: &[&[&str]]) -> SimplicialComplex {
        SimplicialComplex::from_named_facets(v, f).unwrap()
    }

    #[test]
    fn path_passes_all_specializations() {
        let path = cx(&["a", "b", "c", "d"], &[&["a", "b"], &["b", "c"], &["c", "d"]]);
        for e in 0..4 {
            assert!(check_specializations(&path, e).unwrap().holds());
        }
    }

    #[test]
    fn loops_and_points() {
        let c = cx(&["a", "z"], &[&["a"]]);
        assert!(check_specializations(&c, 1).unwrap().holds());
        let two = cx(&["a", "b"], &[&["a"], &["b"]]);
        assert!(check_specializations(&two, 0).unwrap().holds());
        let void = SimplicialComplex::void(vec!["a".into()]).unwrap();
        assert!(check_specializations(&void, 0).unwrap().holds());
    }
}
