use std::collections::BTreeSet;

use super::{
    ambient_without, check_vertex, check_within, contract_faces, delete_faces, face_from_names, full_mask, lookup,
    power_set, validate_ambient, Face, RelativeFaceSet, SimplicialComplex, Vertex,
};
use crate::error::{Error, Result};

/// An order filter: a face set closed under taking supersets within the ambient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderFilter {
    ambient: Vec<String>,
    faces: BTreeSet<Face>,
}

impl OrderFilter {
    /// Upward closure of the given generators.
    pub fn from_minimal<I: IntoIterator<Item = Face>>(ambient: Vec<String>, minimal: I) -> Result<Self> {
        validate_ambient(&ambient)?;
        let n = ambient.len();
        let mut faces = BTreeSet::new();
        for g in minimal {
            check_within(n, g)?;
            let rest = Face::from_bits(full_mask(n) & !g.bits());
            faces.extend(rest.subsets().map(|s| s.union(g)));
        }
        Ok(OrderFilter { ambient, faces })
    }

    pub fn from_named_minimal<S: AsRef<str>, F: AsRef<[S]>>(vertices: &[S], minimal: &[F]) -> Result<Self> {
        let ambient: Vec<String> = vertices.iter().map(|s| s.as_ref().to_string()).collect();
        validate_ambient(&ambient)?;
        let gens = minimal.iter().map(|f| face_from_names(&ambient, f.as_ref())).collect::<Result<Vec<_>>>()?;
        Self::from_minimal(ambient, gens)
    }

    pub fn from_faces(ambient: Vec<String>, faces: BTreeSet<Face>) -> Result<Self> {
        validate_ambient(&ambient)?;
        let n = ambient.len();
        for &f in &faces {
            check_within(n, f)?;
            if (0..n).any(|v| !f.contains(v) && !faces.contains(&f.with(v))) {
                return Err(Error::Precondition(format!("face set is not upward closed at {f:?}")));
            }
        }
        Ok(OrderFilter { ambient, faces })
    }

    pub(crate) fn from_faces_unchecked(ambient: Vec<String>, faces: BTreeSet<Face>) -> Self {
        OrderFilter { ambient, faces }
    }

    /// The filter of all subsets of the ambient.
    pub fn full(ambient: Vec<String>) -> Result<Self> {
        validate_ambient(&ambient)?;
        let faces = power_set(ambient.len()).collect();
        Ok(OrderFilter { ambient, faces })
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

    pub fn vertex(&self, name: &str) -> Result<Vertex> {
        lookup(&self.ambient, name)
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// Inclusion-minimal members.
    pub fn minimal(&self) -> Vec<Face> {
        self.faces.iter().copied().filter(|f| f.facets_of().all(|(_, g)| !self.faces.contains(&g))).collect()
    }

    pub fn max_dim(&self) -> Option<isize> {
        self.faces.iter().map(|f| f.dim()).max()
    }

    /// `Ψ - e`: members avoiding `e`.
    pub fn delete(&self, e: Vertex) -> Result<Self> {
        check_vertex(self.ambient.len(), e)?;
        Ok(OrderFilter { ambient: ambient_without(&self.ambient, e), faces: delete_faces(&self.faces, e) })
    }

    /// `Ψ / e = {F - e : e ∈ F ∈ Ψ}`.
    pub fn contract(&self, e: Vertex) -> Result<Self> {
        check_vertex(self.ambient.len(), e)?;
        Ok(OrderFilter { ambient: ambient_without(&self.ambient, e), faces: contract_faces(&self.faces, e) })
    }

    /// `Ψ* = {V - F}`, a simplicial complex.
    pub fn dual(&self) -> SimplicialComplex {
        let n = self.ambient.len();
        SimplicialComplex::from_faces_unchecked(
            self.ambient.clone(),
            self.faces.iter().map(|f| f.complement(n)).collect(),
        )
    }

    /// `Ψ^c = 2^V - Ψ`, a simplicial complex.
    pub fn complement(&self) -> SimplicialComplex {
        SimplicialComplex::from_faces_unchecked(
            self.ambient.clone(),
            power_set(self.ambient.len()).filter(|f| !self.faces.contains(f)).collect(),
        )
    }

    /// `Ψ^∨ = {F : V - F ∉ Ψ}`, again an order filter.
    pub fn alexander_dual(&self) -> Self {
        let n = self.ambient.len();
        OrderFilter {
            ambient: self.ambient.clone(),
            faces: power_set(n).filter(|f| !self.faces.contains(&f.complement(n))).collect(),
        }
    }

    /// The filter as the pair `(2^V, Ψ^c)`, whose difference is `Ψ` itself.
    pub fn as_relative(&self) -> RelativeFaceSet {
        RelativeFaceSet::from_faces_unchecked(self.ambient.clone(), self.faces.clone())
    }

    /// The filter pair `(Ψ, Ψ′) := (Ψ′^c, Ψ^c)`, whose difference is `Ψ ∖ Ψ′`.
    pub fn relative_to(&self, other: &OrderFilter) -> Result<RelativeFaceSet> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch);
        }
        Ok(RelativeFaceSet::from_faces_unchecked(
            self.ambient.clone(),
            self.faces.difference(&other.faces).copied().collect(),
        ))
    }
}
