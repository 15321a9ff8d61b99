//! Shifted families and complexes, near-cones, degree sequences of family
//! pairs, and the spectra that can be read off from them.
//!
//! The apex of a near-cone is always vertex 0 of the ambient; use
//! `reorder` first for any other choice.

mod gm;
mod pair;
mod partition;

pub use gm::{grone_merris_scan, GmReport, GmVerdict};
pub use pair::{
    check_sdt, family_pair_recursion_check, shifted_pair_spectrum, DegreeSequence, FamilyPair, PairRecursionReport,
    SdtReport,
};
pub use partition::{majorizes, Partition};

use std::collections::BTreeSet;

use crate::complex::{Face, Family, SimplicialComplex, Vertex};
use crate::error::Result;

/// Immediate predecessors of `f` in the componentwise order: replace some
/// `v ∈ f` by `v - 1 ∉ f`.
pub(crate) fn shift_predecessors(f: Face) -> impl Iterator<Item = Face> {
    f.vertices().filter(move |&v| v > 0 && !f.contains(v - 1)).map(move |v| f.without(v).with(v - 1))
}

fn closed_under_shifts(faces: &BTreeSet<Face>) -> bool {
    faces.iter().all(|&f| shift_predecessors(f).all(|g| faces.contains(&g)))
}

/// `F ∈ X, 0 ∉ F, v ∈ F ⇒ F - v + 0 ∈ X`.
fn near_cone_faces(faces: &BTreeSet<Face>) -> bool {
    faces.iter().filter(|f| !f.contains(0)).all(|&f| f.vertices().all(|v| faces.contains(&f.without(v).with(0))))
}

/// Shiftedness and the near-cone property with respect to the ambient order.
pub trait Shifted: Sized {
    /// Every componentwise predecessor of a member is a member.
    fn is_shifted(&self) -> bool;

    /// `∂(X - 0) ⊆ X / 0`.
    fn is_near_cone(&self) -> bool;

    fn reordered(&self, order: &[Vertex]) -> Result<Self>;

    /// Shiftedness under the order listing `order[0]` first.
    fn is_shifted_under(&self, order: &[Vertex]) -> Result<bool> {
        Ok(self.reordered(order)?.is_shifted())
    }
}

impl Shifted for Family {
    fn is_shifted(&self) -> bool {
        closed_under_shifts(self.members())
    }

    fn is_near_cone(&self) -> bool {
        near_cone_faces(self.members())
    }

    fn reordered(&self, order: &[Vertex]) -> Result<Self> {
        self.reorder(order)
    }
}

impl Shifted for SimplicialComplex {
    fn is_shifted(&self) -> bool {
        closed_under_shifts(self.faces())
    }

    fn is_near_cone(&self) -> bool {
        near_cone_faces(self.faces())
    }

    fn reordered(&self, order: &[Vertex]) -> Result<Self> {
        self.reorder(order)
    }
}

fn ambient(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

/// Enumerates the down-sets of `candidates` (listed so that predecessors come
/// first), with `forced` members always present.
fn down_sets(candidates: &[Face], preds: impl Fn(Face) -> Vec<Face>, forced: usize) -> Vec<BTreeSet<Face>> {
    // Membership by face bits: candidates live in a power set of at most 7 vertices.
    fn go(
        idx: usize,
        candidates: &[Face],
        preds: &[Vec<Face>],
        forced: usize,
        chosen: u128,
        out: &mut Vec<BTreeSet<Face>>,
    ) {
        if idx == candidates.len() {
            out.push(candidates.iter().copied().filter(|f| chosen >> f.bits() & 1 == 1).collect());
            return;
        }
        let f = candidates[idx];
        let allowed = preds[idx].iter().all(|g| chosen >> g.bits() & 1 == 1);
        if idx >= forced || !allowed {
            go(idx + 1, candidates, preds, forced, chosen, out);
        }
        if allowed {
            go(idx + 1, candidates, preds, forced, chosen | 1 << f.bits(), out);
        }
    }
    let preds: Vec<Vec<Face>> = candidates.iter().map(|&f| preds(f)).collect();
    let mut out = vec![];
    go(0, candidates, &preds, forced, 0, &mut out);
    out
}

fn sorted_subsets(n: usize, keep: impl Fn(Face) -> bool) -> Vec<Face> {
    let mut faces: Vec<Face> = (0..1u64 << n).map(Face::from_bits).filter(|&f| keep(f)).collect();
    faces.sort_by_key(|f| (f.len(), f.vertices().sum::<usize>(), f.bits()));
    faces
}

/// Every shifted complex on `1..=n` (VOID excluded) whose faces have dimension
/// at most `max_dim`. Exhaustive, so `n ≤ 7`.
pub fn enumerate_shifted(n: usize, max_dim: Option<isize>) -> Vec<SimplicialComplex> {
    assert!(n <= 7, "exhaustive enumeration is limited to 7 vertices");
    let cap = max_dim.map_or(n, |d| (d + 1).max(0) as usize);
    let candidates = sorted_subsets(n, |f| f.len() <= cap);
    let preds = |f: Face| f.facets_of().map(|(_, g)| g).chain(shift_predecessors(f)).collect();
    down_sets(&candidates, preds, 1)
        .into_iter()
        .map(|faces| SimplicialComplex::from_faces(ambient(n), faces).expect("down-sets are complexes"))
        .collect()
}

/// Every shifted `k`-family on `1..=n`, including the empty one.
pub fn enumerate_shifted_families(n: usize, k: usize) -> Vec<Family> {
    assert!(n <= 7, "exhaustive enumeration is limited to 7 vertices");
    let candidates = sorted_subsets(n, |f| f.len() == k);
    let preds = |f: Face| shift_predecessors(f).collect();
    down_sets(&candidates, preds, 0)
        .into_iter()
        .map(|members| Family::new(ambient(n), k, members).expect("k-subsets of the ambient"))
        .collect()
}
