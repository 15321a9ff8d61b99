use std::collections::BTreeSet;

use super::{
    ambient_without, check_vertex, check_within, contract_faces, delete_faces, face_from_names, permutation_positions,
    permute_face, validate_ambient, Face, SimplicialComplex, Vertex,
};
use crate::error::{Error, Result};

/// A `k`-family: a set of `k`-element subsets of the ambient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Family {
    ambient: Vec<String>,
    k: usize,
    members: BTreeSet<Face>,
}

impl Family {
    pub fn new<I: IntoIterator<Item = Face>>(ambient: Vec<String>, k: usize, members: I) -> Result<Self> {
        validate_ambient(&ambient)?;
        let mut set = BTreeSet::new();
        for m in members {
            check_within(ambient.len(), m)?;
            if m.len() != k {
                return Err(Error::CardinalityMismatch { expected: k, found: m.len() });
            }
            set.insert(m);
        }
        Ok(Family { ambient, k, members: set })
    }

    pub fn from_named<S: AsRef<str>, F: AsRef<[S]>>(vertices: &[S], k: usize, members: &[F]) -> Result<Self> {
        let ambient: Vec<String> = vertices.iter().map(|s| s.as_ref().to_string()).collect();
        validate_ambient(&ambient)?;
        let faces = members.iter().map(|m| face_from_names(&ambient, m.as_ref())).collect::<Result<Vec<_>>>()?;
        Self::new(ambient, k, faces)
    }

    pub fn empty(ambient: Vec<String>, k: usize) -> Result<Self> {
        Self::new(ambient, k, [])
    }

    pub fn ambient(&self) -> &[String] {
        &self.ambient
    }

    pub fn num_vertices(&self) -> usize {
        self.ambient.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn members(&self) -> &BTreeSet<Face> {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, f: Face) -> bool {
        self.members.contains(&f)
    }

    /// `∂K`: all `(k-1)`-subsets of members. The boundary of a 0-family is empty.
    pub fn boundary(&self) -> Family {
        let k = self.k.saturating_sub(1);
        let members = if self.k == 0 {
            BTreeSet::new()
        } else {
            self.members.iter().flat_map(|f| f.facets_of().map(|(_, g)| g)).collect()
        };
        Family { ambient: self.ambient.clone(), k, members }
    }

    /// `K - e`, a `k`-family on the ambient without `e`.
    pub fn delete(&self, e: Vertex) -> Result<Family> {
        check_vertex(self.ambient.len(), e)?;
        Ok(Family { ambient: ambient_without(&self.ambient, e), k: self.k, members: delete_faces(&self.members, e) })
    }

    /// `K / e = {F - e : e ∈ F ∈ K}`, a `(k-1)`-family on the ambient without `e`.
    pub fn contract(&self, e: Vertex) -> Result<Family> {
        check_vertex(self.ambient.len(), e)?;
        if self.k == 0 {
            return Family::empty(ambient_without(&self.ambient, e), 0);
        }
        Ok(Family {
            ambient: ambient_without(&self.ambient, e),
            k: self.k - 1,
            members: contract_faces(&self.members, e),
        })
    }

    /// `K ∩ L` for families of the same cardinality on the same ambient.
    pub fn intersect(&self, other: &Family) -> Result<Family> {
        self.same_shape(other)?;
        let members = self.members.intersection(&other.members).copied().collect();
        Ok(Family { ambient: self.ambient.clone(), k: self.k, members })
    }

    pub fn is_subset(&self, other: &Family) -> Result<bool> {
        self.same_shape(other)?;
        Ok(self.members.is_subset(&other.members))
    }

    fn same_shape(&self, other: &Family) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch);
        }
        if self.k != other.k {
            return Err(Error::CardinalityMismatch { expected: self.k, found: other.k });
        }
        Ok(())
    }

    /// Relabels so that `perm[k]` becomes vertex `k`.
    pub fn reorder(&self, perm: &[Vertex]) -> Result<Family> {
        let pos = permutation_positions(self.ambient.len(), perm)?;
        Ok(Family {
            ambient: perm.iter().map(|&p| self.ambient[p].clone()).collect(),
            k: self.k,
            members: self.members.iter().map(|&f| permute_face(&pos, f)).collect(),
        })
    }

    /// Downward closure of the members; VOID when the family is empty.
    pub fn closure(&self) -> SimplicialComplex {
        let faces = self.members.iter().flat_map(|f| f.subsets()).collect();
        SimplicialComplex::from_faces_unchecked(self.ambient.clone(), faces)
    }
}

impl SimplicialComplex {
    /// The `(i+1)`-family of `i`-dimensional faces.
    pub fn family_of_dim(&self, i: isize) -> Family {
        let k = (i + 1).max(0) as usize;
        let members =
            if i < -1 { BTreeSet::new() } else { self.faces().iter().copied().filter(|f| f.len() == k).collect() };
        Family { ambient: self.ambient().to_vec(), k, members }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star() -> Family {
        Family::from_named(&["1", "2", "3", "4"], 2, &[["1", "2"], ["1", "3"], ["1", "4"]]).unwrap()
    }

    #[test]
    fn cardinality_is_enforced() {
        let err = Family::from_named(&["1", "2"], 2, &[vec!["1"]]).unwrap_err();
        assert_eq!(err, Error::CardinalityMismatch { expected: 2, found: 1 });
    }

    #[test]
    fn boundary_and_minors() {
        let k = star();
        assert_eq!(k.boundary().len(), 4);
        assert_eq!(k.boundary().k(), 1);
        assert!(k.delete(0).unwrap().is_empty());
        let link = k.contract(0).unwrap();
        assert_eq!(link.k(), 1);
        assert_eq!(link.len(), 3);
        assert_eq!(link.ambient(), ["2", "3", "4"]);
    }

    #[test]
    fn closure_round_trip() {
        let c = star().closure();
        assert_eq!(c.f_vector(), vec![1, 4, 3]);
        assert_eq!(c.family_of_dim(1), star());
        assert!(Family::empty(vec!["a".into()], 1).unwrap().closure().is_void());
    }
}
