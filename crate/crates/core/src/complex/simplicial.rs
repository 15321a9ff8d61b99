use std::collections::BTreeSet;

use super::{
    ambient_without, check_vertex, check_within, concat_disjoint, contract_faces, delete_faces, face_from_names,
    lookup, permutation_positions, permute_face, power_set, validate_ambient, Face, OrderFilter, RelativeFaceSet,
    Vertex,
};
use crate::error::{Error, Result};

/// A simplicial complex on an explicit ordered ambient vertex set.
///
/// The face set is downward closed. A complex with no faces at all is VOID,
/// which is distinct from `{∅}`. Ambient vertices lying in no face are loops.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    ambient: Vec<String>,
    faces: BTreeSet<Face>,
}

impl SimplicialComplex {
    /// Downward closure of `facets` over `ambient`.
    pub fn from_facets<I>(ambient: Vec<String>, facets: I) -> Result<Self>
    where
        I: IntoIterator<Item = Face>,
    {
        validate_ambient(&ambient)?;
        let mut faces = BTreeSet::new();
        for facet in facets {
            check_within(ambient.len(), facet)?;
            if faces.contains(&facet) {
                continue;
            }
            faces.extend(facet.subsets());
        }
        Ok(SimplicialComplex { ambient, faces })
    }

    /// Like [`from_facets`](Self::from_facets) with vertices given by name.
    pub fn from_named_facets<S: AsRef<str>, F: AsRef<[S]>>(vertices: &[S], facets: &[F]) -> Result<Self> {
        let ambient: Vec<String> = vertices.iter().map(|s| s.as_ref().to_string()).collect();
        validate_ambient(&ambient)?;
        let faces = facets.iter().map(|f| face_from_names(&ambient, f.as_ref())).collect::<Result<Vec<_>>>()?;
        Self::from_facets(ambient, faces)
    }

    /// Builds a complex from an arbitrary face set, checking downward closure.
    pub fn from_faces(ambient: Vec<String>, faces: BTreeSet<Face>) -> Result<Self> {
        validate_ambient(&ambient)?;
        for &f in &faces {
            check_within(ambient.len(), f)?;
            if f.facets_of().any(|(_, g)| !faces.contains(&g)) {
                return Err(Error::Precondition(format!("face set is not downward closed at {f:?}")));
            }
        }
        Ok(SimplicialComplex { ambient, faces })
    }

    pub(crate) fn from_faces_unchecked(ambient: Vec<String>, faces: BTreeSet<Face>) -> Self {
        SimplicialComplex { ambient, faces }
    }

    pub fn void(ambient: Vec<String>) -> Result<Self> {
        validate_ambient(&ambient)?;
        Ok(SimplicialComplex { ambient, faces: BTreeSet::new() })
    }

    /// The full simplex `2^V`.
    pub fn simplex(ambient: Vec<String>) -> Result<Self> {
        validate_ambient(&ambient)?;
        let faces = power_set(ambient.len()).collect();
        Ok(SimplicialComplex { ambient, faces })
    }

    pub fn ambient(&self) -> &[String] {
        &self.ambient
    }

    pub fn num_vertices(&self) -> usize {
        self.ambient.len()
    }

    pub fn faces(&self) -> &BTreeSet<Face> {
        &self.faces
    }

    pub fn contains(&self, face: Face) -> bool {
        self.faces.contains(&face)
    }

    pub fn vertex(&self, name: &str) -> Result<Vertex> {
        lookup(&self.ambient, name)
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    /// `None` for VOID, `Some(-1)` for `{∅}`.
    pub fn dim(&self) -> Option<isize> {
        self.faces.iter().map(|f| f.dim()).max()
    }

    /// `f_vector()[i + 1]` is the number of `i`-dimensional faces.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = Vec::new();
        for face in &self.faces {
            let k = face.len();
            if f.len() <= k {
                f.resize(k + 1, 0);
            }
            f[k] += 1;
        }
        f
    }

    /// Number of `i`-dimensional faces.
    pub fn f(&self, i: isize) -> usize {
        self.faces.iter().filter(|f| f.dim() == i).count()
    }

    pub fn facets(&self) -> Vec<Face> {
        self.faces
            .iter()
            .copied()
            .filter(|&f| (0..self.ambient.len()).all(|v| f.contains(v) || !self.faces.contains(&f.with(v))))
            .collect()
    }

    pub fn is_loop(&self, e: Vertex) -> Result<bool> {
        check_vertex(self.ambient.len(), e)?;
        Ok(!self.faces.contains(&Face::EMPTY.with(e)))
    }

    /// `e` lies in every facet. VOID has no facets and is treated as having no isthmus.
    pub fn is_isthmus(&self, e: Vertex) -> Result<bool> {
        check_vertex(self.ambient.len(), e)?;
        if self.is_void() {
            return Ok(false);
        }
        Ok(self.facets().iter().all(|f| f.contains(e)))
    }

    /// Number of vertices that are not loops.
    pub fn non_loop_count(&self) -> usize {
        self.faces.iter().filter(|f| f.len() == 1).count()
    }

    /// `Δ - e`: faces avoiding `e`, on the ambient with `e` removed.
    pub fn delete(&self, e: Vertex) -> Result<Self> {
        check_vertex(self.ambient.len(), e)?;
        Ok(SimplicialComplex { ambient: ambient_without(&self.ambient, e), faces: delete_faces(&self.faces, e) })
    }

    /// `Δ / e`: the link of `e`, on the ambient with `e` removed. VOID when `e` is a loop.
    pub fn contract(&self, e: Vertex) -> Result<Self> {
        check_vertex(self.ambient.len(), e)?;
        Ok(SimplicialComplex { ambient: ambient_without(&self.ambient, e), faces: contract_faces(&self.faces, e) })
    }

    /// Closure of the facets containing `e`.
    pub fn star(&self, e: Vertex) -> Result<Self> {
        check_vertex(self.ambient.len(), e)?;
        let facets: Vec<Face> = self.facets().into_iter().filter(|f| f.contains(e)).collect();
        Self::from_facets(self.ambient.clone(), facets)
    }

    /// Faces of dimension at most `s`.
    pub fn skeleton(&self, s: isize) -> Self {
        SimplicialComplex {
            ambient: self.ambient.clone(),
            faces: self.faces.iter().copied().filter(|f| f.dim() <= s).collect(),
        }
    }

    /// Faces contained in some `s`-dimensional face; the ambient is unchanged.
    pub fn pure_skeleton(&self, s: isize) -> Self {
        let tops = self.faces.iter().copied().filter(|f| f.dim() == s);
        Self::from_facets(self.ambient.clone(), tops).expect("faces already lie in the ambient")
    }

    /// `Δ * Γ` on the concatenated ambient.
    pub fn join(&self, other: &SimplicialComplex) -> Result<Self> {
        let ambient = concat_disjoint(&self.ambient, &other.ambient)?;
        let n = self.ambient.len();
        let mut faces = BTreeSet::new();
        for &f in &self.faces {
            for &g in &other.faces {
                faces.insert(f.union(g.offset(n)));
            }
        }
        Ok(SimplicialComplex { ambient, faces })
    }

    /// Cone over this complex with a new apex vertex placed first in the order.
    pub fn cone(&self, apex: &str) -> Result<Self> {
        let point = SimplicialComplex::simplex(vec![apex.to_string()])?;
        point.join(self)
    }

    /// Union of two non-void complexes on disjoint ambients.
    pub fn disjoint_union(&self, other: &SimplicialComplex) -> Result<Self> {
        if self.is_void() || other.is_void() {
            return Err(Error::VoidOperand);
        }
        let ambient = concat_disjoint(&self.ambient, &other.ambient)?;
        let n = self.ambient.len();
        let mut faces = self.faces.clone();
        faces.extend(other.faces.iter().map(|g| g.offset(n)));
        Ok(SimplicialComplex { ambient, faces })
    }

    /// `Δ* = {V - F}`, an order filter.
    pub fn dual(&self) -> OrderFilter {
        let n = self.ambient.len();
        OrderFilter::from_faces_unchecked(self.ambient.clone(), self.faces.iter().map(|f| f.complement(n)).collect())
    }

    /// `Δ^c = 2^V - Δ`, an order filter.
    pub fn complement(&self) -> OrderFilter {
        OrderFilter::from_faces_unchecked(
            self.ambient.clone(),
            power_set(self.ambient.len()).filter(|f| !self.faces.contains(f)).collect(),
        )
    }

    /// `Δ^∨ = {F : V - F ∉ Δ}`.
    pub fn alexander_dual(&self) -> Self {
        let n = self.ambient.len();
        SimplicialComplex {
            ambient: self.ambient.clone(),
            faces: power_set(n).filter(|f| !self.faces.contains(&f.complement(n))).collect(),
        }
    }

    /// The complex as the relative face set `(Δ, ∅)`.
    pub fn as_relative(&self) -> RelativeFaceSet {
        RelativeFaceSet::from_faces_unchecked(self.ambient.clone(), self.faces.clone())
    }

    /// The simplicial pair `(Δ, Δ′)` as the difference `Δ ∖ Δ′`.
    pub fn relative_to(&self, sub: &SimplicialComplex) -> Result<RelativeFaceSet> {
        if self.ambient != sub.ambient {
            return Err(Error::AmbientMismatch);
        }
        Ok(RelativeFaceSet::from_faces_unchecked(
            self.ambient.clone(),
            self.faces.difference(&sub.faces).copied().collect(),
        ))
    }

    /// Reduced Euler characteristic `Σ_{i ≥ -1} (-1)^i f_i`, so `{∅}` gives -1.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.faces.iter().map(|f| if f.len() % 2 == 0 { -1 } else { 1 }).sum()
    }

    /// Relabels the ambient with a permutation: vertex `perm[i]` of `self` becomes vertex `i`.
    pub fn reorder(&self, perm: &[Vertex]) -> Result<Self> {
        let pos = permutation_positions(self.ambient.len(), perm)?;
        let ambient = perm.iter().map(|&p| self.ambient[p].clone()).collect();
        let faces = self.faces.iter().map(|&f| permute_face(&pos, f)).collect();
        Ok(SimplicialComplex { ambient, faces })
    }
}
