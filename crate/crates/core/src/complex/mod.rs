//! Faces, simplicial complexes, order filters, relative face sets and families,
//! together with deletion, contraction, joins, skeleta and the duality operators.
//!
//! Every object carries an explicit ordered ambient vertex list; faces are
//! bitmasks over the positions in that list. Vertex order matters for
//! shiftedness and matroid activities, so operations that drop a vertex keep
//! the relative order of the remaining ones.

mod face;
mod family;
mod filter;
mod relative;
mod simplicial;

pub use face::{Face, Vertex};
pub use family::Family;
pub use filter::OrderFilter;
pub use relative::RelativeFaceSet;
pub use simplicial::SimplicialComplex;

use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

pub(crate) fn validate_ambient(ambient: &[String]) -> Result<()> {
    if ambient.len() > MAX_VERTICES {
        return Err(Error::TooManyVertices(ambient.len()));
    }
    let mut seen = HashSet::new();
    for name in ambient {
        if !seen.insert(name.as_str()) {
            return Err(Error::DuplicateVertex(name.clone()));
        }
    }
    Ok(())
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn check_within(n: usize, face: Face) -> Result<()> {
    match (face.bits() & !full_mask(n)).trailing_zeros() {
        64 => Ok(()),
        v => Err(Error::VertexOutOfRange(v as usize)),
    }
}

pub(crate) fn check_vertex(n: usize, v: Vertex) -> Result<()> {
    if v < n {
        Ok(())
    } else {
        Err(Error::VertexOutOfRange(v))
    }
}

pub(crate) fn lookup(ambient: &[String], name: &str) -> Result<Vertex> {
    ambient.iter().position(|a| a == name).ok_or_else(|| Error::UnknownVertex(name.to_string()))
}

pub(crate) fn face_from_names<S: AsRef<str>>(ambient: &[String], names: &[S]) -> Result<Face> {
    names.iter().try_fold(Face::EMPTY, |f, n| Ok(f.with(lookup(ambient, n.as_ref())?)))
}

pub(crate) fn ambient_without(ambient: &[String], e: Vertex) -> Vec<String> {
    ambient.iter().enumerate().filter(|&(i, _)| i != e).map(|(_, s)| s.clone()).collect()
}

pub(crate) fn concat_disjoint(a: &[String], b: &[String]) -> Result<Vec<String>> {
    let left: HashSet<&str> = a.iter().map(String::as_str).collect();
    if let Some(dup) = b.iter().find(|s| left.contains(s.as_str())) {
        return Err(Error::OverlappingAmbients(dup.clone()));
    }
    let mut out = a.to_vec();
    out.extend_from_slice(b);
    validate_ambient(&out)?;
    Ok(out)
}

/// Faces avoiding `e`, re-indexed onto the ambient with `e` removed.
pub(crate) fn delete_faces(faces: &BTreeSet<Face>, e: Vertex) -> BTreeSet<Face> {
    faces.iter().filter(|f| !f.contains(e)).map(|f| f.remove_index(e)).collect()
}

/// `{F - e : e in F}`, re-indexed onto the ambient with `e` removed.
pub(crate) fn contract_faces(faces: &BTreeSet<Face>, e: Vertex) -> BTreeSet<Face> {
    faces.iter().filter(|f| f.contains(e)).map(|f| f.without(e).remove_index(e)).collect()
}

/// Renders a face by vertex names: concatenated when every name is a single
/// character, otherwise comma separated.
pub fn face_label(ambient: &[String], face: Face) -> String {
    let names: Vec<&str> = face.vertices().map(|v| ambient[v].as_str()).collect();
    if names.iter().all(|n| n.chars().count() == 1) {
        names.concat()
    } else {
        names.join(",")
    }
}

/// Position of each old vertex under `perm`, where `perm[k]` is the vertex placed at `k`.
pub(crate) fn permutation_positions(n: usize, perm: &[Vertex]) -> Result<Vec<usize>> {
    let mut pos = vec![usize::MAX; n];
    if perm.len() != n {
        return Err(Error::Precondition("permutation length differs from ambient".into()));
    }
    for (k, &p) in perm.iter().enumerate() {
        check_vertex(n, p)?;
        if pos[p] != usize::MAX {
            return Err(Error::Precondition("not a permutation".into()));
        }
        pos[p] = k;
    }
    Ok(pos)
}

pub(crate) fn permute_face(pos: &[usize], f: Face) -> Face {
    Face::from_vertices(f.vertices().map(|v| pos[v]))
}

/// All subsets of an `n`-element ambient, as faces.
pub(crate) fn power_set(n: usize) -> impl Iterator<Item = Face> {
    assert!(n < 64, "power set of {n} vertices");
    (0..(1u64 << n)).map(Face::from_bits)
}
