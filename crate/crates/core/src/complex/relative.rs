use std::collections::BTreeSet;

use super::{check_within, concat_disjoint, validate_ambient, Face, SimplicialComplex};
use crate::error::{Error, Result};

/// A simplicial pair (or order-filter pair) in canonical form: the face set
/// difference over an ambient vertex list. No closure property is required.
///
/// Two pairs are equal exactly when their ambients and difference sets agree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RelativeFaceSet {
    ambient: Vec<String>,
    faces: BTreeSet<Face>,
}

impl RelativeFaceSet {
    pub fn new(ambient: Vec<String>, faces: BTreeSet<Face>) -> Result<Self> {
        validate_ambient(&ambient)?;
        for &f in &faces {
            check_within(ambient.len(), f)?;
        }
        Ok(RelativeFaceSet { ambient, faces })
    }

    pub(crate) fn from_faces_unchecked(ambient: Vec<String>, faces: BTreeSet<Face>) -> Self {
        RelativeFaceSet { ambient, faces }
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

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn contains(&self, f: Face) -> bool {
        self.faces.contains(&f)
    }

    /// Faces of dimension `i`, in increasing bitmask order.
    pub fn faces_of_dim(&self, i: isize) -> Vec<Face> {
        self.faces.iter().copied().filter(|f| f.dim() == i).collect()
    }

    pub fn max_dim(&self) -> Option<isize> {
        self.faces.iter().map(|f| f.dim()).max()
    }

    /// `{F ⊔ G : F ∈ self, G ∈ other}` on the concatenated ambient.
    pub fn join(&self, other: &RelativeFaceSet) -> Result<Self> {
        let ambient = concat_disjoint(&self.ambient, &other.ambient)?;
        let n = self.ambient.len();
        let mut faces = BTreeSet::new();
        for &f in &self.faces {
            for &g in &other.faces {
                faces.insert(f.union(g.offset(n)));
            }
        }
        Ok(RelativeFaceSet { ambient, faces })
    }

    /// `A ∘ Δ = {A ⊔ F : F ∈ Δ}` for a vertex set `A` disjoint from the ambient of `Δ`.
    /// The new vertices are appended after the ambient of `Δ`.
    pub fn circuit_cone<S: AsRef<str>>(apex_set: &[S], cx: &SimplicialComplex) -> Result<Self> {
        let extra: Vec<String> = apex_set.iter().map(|s| s.as_ref().to_string()).collect();
        let ambient = concat_disjoint(cx.ambient(), &extra)?;
        let n = cx.num_vertices();
        let a = Face::from_vertices(n..n + extra.len());
        let faces = cx.faces().iter().map(|f| f.union(a)).collect();
        Ok(RelativeFaceSet { ambient, faces })
    }

    /// Image under `F ↦ V - F`; realizes `(Δ*, Δ′*)` for the pair `(Δ, Δ′)`.
    pub fn dual(&self) -> Self {
        let n = self.ambient.len();
        RelativeFaceSet { ambient: self.ambient.clone(), faces: self.faces.iter().map(|f| f.complement(n)).collect() }
    }

    /// Difference with another face set on the same ambient.
    pub fn minus(&self, other: &RelativeFaceSet) -> Result<Self> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch);
        }
        Ok(RelativeFaceSet {
            ambient: self.ambient.clone(),
            faces: self.faces.difference(&other.faces).copied().collect(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn join_of_points() {
        let a = SimplicialComplex::from_named_facets(&["a"], &[["a"]]).unwrap().as_relative();
        let b = SimplicialComplex::from_named_facets(&["b"], &[["b"]]).unwrap().as_relative();
        let j = a.join(&b).unwrap();
        assert_eq!(j.faces().len(), 4);
        assert!(a.join(&a).is_err());
    }

    #[test]
    fn circuit_cone_shifts_faces() {
        let e = SimplicialComplex::from_facets(vec![], [Face::EMPTY]).unwrap();
        let c = RelativeFaceSet::circuit_cone(&["x"], &e).unwrap();
        assert_eq!(c.faces().iter().copied().collect::<Vec<_>>(), [Face::from_vertices([0])]);

        let pt = SimplicialComplex::from_named_facets(&["a"], &[["a"]]).unwrap();
        let c = RelativeFaceSet::circuit_cone(&["x", "y"], &pt).unwrap();
        let dims: Vec<isize> = c.faces().iter().map(|f| f.dim()).collect();
        assert_eq!(dims, [1, 2]);
        assert!(RelativeFaceSet::circuit_cone(&["a"], &pt).is_err());
    }

    #[test]
    fn star_pair_equals_deletion_contraction_pair() {
        let p =
            SimplicialComplex::from_named_facets(&["a", "b", "c", "d"], &[["a", "b"], ["b", "c"], ["c", "d"]]).unwrap();
        for e in 0..4 {
            let via_star = p.relative_to(&p.star(e).unwrap()).unwrap();
            let del = p.delete(e).unwrap();
            let con = p.contract(e).unwrap();
            let via_dc = del.relative_to(&con).unwrap();
            // Same difference sets once the star pair is written without e.
            let lifted: BTreeSet<Face> = via_dc
                .faces()
                .iter()
                .map(|f| Face::from_vertices(f.vertices().map(|v| if v >= e { v + 1 } else { v })))
                .collect();
            assert_eq!(via_star.faces(), &lifted);
        }
    }
}
