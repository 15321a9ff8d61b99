//! Matroids given by explicit basis lists, with rank, closure, circuits,
//! minors, the lattice of flats, internal activity and the KRS decomposition.
//!
//! Element sets reuse [`Face`] bitmasks over the ground list, so the
//! independence complex is literally the set of independent faces.

mod krs;
mod lattice;
mod spectrum;

pub use krs::{e_step_polynomial, krs_step_identity, KrsDecomposition};
pub use lattice::FlatLattice;
pub use spectrum::{clear_memo, pair_spectrum_poly, spectrum_poly_direct, spectrum_poly_krs, spectrum_poly_recursive};

use std::collections::{BTreeSet, HashMap, HashSet};

use crate::complex::{face_label, permutation_positions, permute_face, Face, SimplicialComplex, Vertex, MAX_VERTICES};
use crate::error::{Error, Result};

/// A matroid on an ordered ground set. Element order drives internal activity.
#[derive(Clone, Debug)]
pub struct Matroid {
    ground: Vec<String>,
    rank: usize,
    bases: Vec<Face>,
    independent: HashSet<Face>,
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.ground == other.ground && self.bases == other.bases
    }
}

impl Eq for Matroid {}

fn default_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

impl Matroid {
    /// Validates equal cardinality and the basis-exchange property.
    pub fn from_bases<I: IntoIterator<Item = Face>>(ground: Vec<String>, bases: I) -> Result<Self> {
        crate::complex::validate_ambient(&ground)?;
        let bases: BTreeSet<Face> = bases.into_iter().collect();
        let Some(first) = bases.iter().next() else {
            return Err(Error::InvalidMatroid("no bases".into()));
        };
        let r = first.len();
        let full = Face::from_vertices(0..ground.len());
        for b in &bases {
            if !b.is_subset(full) {
                return Err(Error::InvalidMatroid(format!("basis {b:?} leaves the ground set")));
            }
            if b.len() != r {
                return Err(Error::InvalidMatroid("bases of different sizes".into()));
            }
        }
        for &b1 in &bases {
            for &b2 in &bases {
                for x in b1.minus(b2).vertices() {
                    let ok = b2.minus(b1).vertices().any(|y| bases.contains(&b1.without(x).with(y)));
                    if !ok {
                        return Err(Error::InvalidMatroid(format!(
                            "exchange fails for {} and {}",
                            face_label(&ground, b1),
                            face_label(&ground, b2)
                        )));
                    }
                }
            }
        }
        Ok(Self::from_bases_unchecked(ground, bases))
    }

    pub fn from_named_bases<S: AsRef<str>, F: AsRef<[S]>>(ground: &[S], bases: &[F]) -> Result<Self> {
        let names: Vec<String> = ground.iter().map(|s| s.as_ref().to_string()).collect();
        let faces =
            bases.iter().map(|b| crate::complex::face_from_names(&names, b.as_ref())).collect::<Result<Vec<_>>>()?;
        Self::from_bases(names, faces)
    }

    pub(crate) fn from_bases_unchecked(ground: Vec<String>, bases: impl IntoIterator<Item = Face>) -> Self {
        let bases: BTreeSet<Face> = bases.into_iter().collect();
        let rank = bases.iter().next().map_or(0, |b| b.len());
        let mut independent = HashSet::new();
        for b in &bases {
            for s in b.subsets() {
                independent.insert(s);
            }
        }
        Matroid { ground, rank, bases: bases.into_iter().collect(), independent }
    }

    /// `U_{r,n}` on elements named `1..n`.
    pub fn uniform(r: usize, n: usize) -> Result<Self> {
        if r > n {
            return Err(Error::InvalidMatroid(format!("U({r},{n}) needs r <= n")));
        }
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let bases = (0u64..1 << n).filter(|m| m.count_ones() as usize == r).map(Face::from_bits);
        Ok(Self::from_bases_unchecked(default_names(n), bases))
    }

    /// Cycle matroid of a multigraph. Each edge becomes a ground element named
    /// by its endpoints; a repeated name gets a `#k` suffix.
    pub fn graphic<S: AsRef<str>>(edges: &[(S, S)]) -> Result<Self> {
        let mut vertex_ids: HashMap<&str, usize> = HashMap::new();
        let mut ends = vec![];
        let mut names: Vec<String> = vec![];
        for (u, v) in edges {
            let n = vertex_ids.len();
            let a = *vertex_ids.entry(u.as_ref()).or_insert(n);
            let n = vertex_ids.len();
            let b = *vertex_ids.entry(v.as_ref()).or_insert(n);
            ends.push((a, b));
            let base = format!("{}{}", u.as_ref(), v.as_ref());
            let mut name = base.clone();
            let mut k = 2;
            while names.contains(&name) {
                name = format!("{base}#{k}");
                k += 1;
            }
            names.push(name);
        }
        if names.len() > MAX_VERTICES {
            return Err(Error::TooManyVertices(names.len()));
        }
        let nv = vertex_ids.len();
        let forest_rank = |set: Face| {
            let mut uf = UnionFind::new(nv);
            set.vertices().filter(|&e| uf.union(ends[e].0, ends[e].1)).count()
        };
        let full = Face::from_vertices(0..names.len());
        let r = forest_rank(full);
        let bases: Vec<Face> = full.subsets().filter(|s| s.len() == r && forest_rank(*s) == r).collect();
        Ok(Self::from_bases_unchecked(names, bases))
    }

    /// `M ⊕ N` on the concatenated ground set.
    pub fn direct_sum(&self, other: &Matroid) -> Result<Matroid> {
        let ground = crate::complex::concat_disjoint(&self.ground, &other.ground)?;
        let n = self.ground.len();
        let bases: Vec<Face> =
            self.bases.iter().flat_map(|&a| other.bases.iter().map(move |&b| a.union(b.offset(n)))).collect();
        Ok(Self::from_bases_unchecked(ground, bases))
    }

    pub fn ground(&self) -> &[String] {
        &self.ground
    }

    pub fn len(&self) -> usize {
        self.ground.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ground.is_empty()
    }

    pub fn full_set(&self) -> Face {
        Face::from_vertices(0..self.ground.len())
    }

    /// Rank of the matroid.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn bases(&self) -> &[Face] {
        &self.bases
    }

    pub fn element(&self, name: &str) -> Result<Vertex> {
        self.ground.iter().position(|g| g == name).ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn label(&self, set: Face) -> String {
        face_label(&self.ground, set)
    }

    /// Bases as `{ab ac ...}` over the ground set `[a b c]`, for diagnostics.
    pub fn label_bases(&self) -> String {
        let bases: Vec<String> = self.bases.iter().map(|&b| self.label(b)).collect();
        format!("{{{}}} on [{}]", bases.join(" "), self.ground.join(" "))
    }

    pub fn is_independent(&self, a: Face) -> bool {
        self.independent.contains(&a)
    }

    /// Independent sets in increasing bitmask order.
    pub fn independent_sets(&self) -> Vec<Face> {
        let mut v: Vec<Face> = self.independent.iter().copied().collect();
        v.sort();
        v
    }

    pub fn rank_of(&self, a: Face) -> usize {
        self.bases.iter().map(|b| b.intersection(a).len()).max().unwrap_or(0)
    }

    pub fn closure(&self, a: Face) -> Face {
        let r = self.rank_of(a);
        Face::from_vertices((0..self.len()).filter(|&e| a.contains(e) || self.rank_of(a.with(e)) == r))
    }

    pub fn is_flat(&self, a: Face) -> bool {
        self.closure(a) == a
    }

    pub fn is_loop(&self, e: Vertex) -> bool {
        !self.is_independent(Face::from_vertices([e]))
    }

    pub fn is_isthmus(&self, e: Vertex) -> bool {
        self.bases.iter().all(|b| b.contains(e))
    }

    pub fn loops(&self) -> Face {
        self.closure(Face::EMPTY)
    }

    /// Minimal dependent sets, in increasing bitmask order.
    pub fn circuits(&self) -> Vec<Face> {
        self.full_set()
            .subsets()
            .filter(|&c| !self.is_independent(c) && c.facets_of().all(|(_, g)| self.is_independent(g)))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect()
    }

    pub fn circuits_through(&self, e: Vertex) -> Vec<Face> {
        self.circuits().into_iter().filter(|c| c.contains(e)).collect()
    }

    /// `ci(p, I)`: the unique circuit inside `I + p`, for `p ∈ cl(I) - I`.
    pub fn fundamental_circuit(&self, p: Vertex, i: Face) -> Result<Face> {
        if !self.is_independent(i) {
            return Err(Error::Precondition("fundamental circuit needs an independent set".into()));
        }
        if i.contains(p) || !self.closure(i).contains(p) {
            return Err(Error::Precondition(format!("{} is not in cl(I) - I", self.ground[p])));
        }
        let ip = i.with(p);
        Ok(Face::from_vertices(ip.vertices().filter(|&x| x == p || self.is_independent(ip.without(x)))))
    }

    /// `bo(b, I)`: the unique bond of the flat `cl(I)` inside `(cl(I) - I) + b`.
    pub fn fundamental_bond(&self, b: Vertex, i: Face) -> Result<Face> {
        if !self.is_independent(i) || !i.contains(b) {
            return Err(Error::Precondition("fundamental bond needs b in an independent set".into()));
        }
        let v = self.closure(i);
        let rest = i.without(b);
        Ok(Face::from_vertices(v.minus(i).vertices().filter(|&x| self.is_independent(rest.with(x))).chain([b])))
    }

    /// Matroid deletion `M \ e`; for an isthmus this coincides with `M / e`.
    pub fn delete(&self, e: Vertex) -> Result<Matroid> {
        crate::complex::check_vertex(self.len(), e)?;
        if self.is_isthmus(e) {
            return self.contract(e);
        }
        let bases = self.bases.iter().filter(|b| !b.contains(e)).map(|b| b.remove_index(e));
        Ok(Self::from_bases_unchecked(without(&self.ground, e), bases))
    }

    /// Matroid contraction `M / e`; for a loop this coincides with `M \ e`.
    pub fn contract(&self, e: Vertex) -> Result<Matroid> {
        crate::complex::check_vertex(self.len(), e)?;
        if self.is_loop(e) {
            let bases = self.bases.iter().map(|b| b.remove_index(e));
            return Ok(Self::from_bases_unchecked(without(&self.ground, e), bases));
        }
        let bases = self.bases.iter().filter(|b| b.contains(e)).map(|b| b.without(e).remove_index(e));
        Ok(Self::from_bases_unchecked(without(&self.ground, e), bases))
    }

    /// `M / A` for any subset `A`: bases `B - A` with `B ∩ A` a basis of `A`.
    pub fn contract_set(&self, a: Face) -> Matroid {
        let r = self.rank_of(a);
        let keep: Vec<usize> = (0..self.len()).filter(|&x| !a.contains(x)).collect();
        let bases = self.bases.iter().filter(|b| b.intersection(a).len() == r).map(|b| compress(b.minus(a), &keep));
        let ground = keep.iter().map(|&i| self.ground[i].clone()).collect();
        Self::from_bases_unchecked(ground, bases)
    }

    /// The restriction `M | A`, on the elements of `A` in ground order.
    pub fn restrict(&self, a: Face) -> Matroid {
        let keep: Vec<usize> = a.vertices().collect();
        let r = self.rank_of(a);
        let bases = self.bases.iter().map(|b| b.intersection(a)).filter(|s| s.len() == r).map(|s| compress(s, &keep));
        let ground = keep.iter().map(|&i| self.ground[i].clone()).collect();
        Self::from_bases_unchecked(ground, bases)
    }

    /// Relists the ground set in the order `perm` (new position k holds old element `perm[k]`).
    pub fn reorder(&self, perm: &[Vertex]) -> Result<Matroid> {
        let pos = permutation_positions(self.len(), perm)?;
        let bases = self.bases.iter().map(|&b| permute_face(&pos, b));
        let ground = perm.iter().map(|&p| self.ground[p].clone()).collect();
        Ok(Self::from_bases_unchecked(ground, bases))
    }

    /// The independence complex `IN(M)` on the ground set.
    pub fn independence_complex(&self) -> SimplicialComplex {
        SimplicialComplex::from_faces(self.ground.clone(), self.independent.iter().copied().collect())
            .expect("independent sets are closed under subsets")
    }

    /// `χ̃(IN(M)) = Σ_{i ≥ -1} (-1)^i f_i`, so the rank-0 matroid gets `-1`.
    pub fn reduced_euler_char(&self) -> i64 {
        self.independent.iter().map(|i| if i.len() % 2 == 1 { 1 } else { -1 }).sum()
    }

    /// Canonical key for memoization: element count plus sorted basis masks.
    pub(crate) fn key(&self) -> (usize, Vec<u64>) {
        (self.len(), self.bases.iter().map(|b| b.bits()).collect())
    }
}

fn without(ground: &[String], e: Vertex) -> Vec<String> {
    ground.iter().enumerate().filter(|&(i, _)| i != e).map(|(_, s)| s.clone()).collect()
}

/// Re-indexes `set ⊆ keep` onto positions within `keep`.
fn compress(set: Face, keep: &[usize]) -> Face {
    Face::from_vertices(keep.iter().enumerate().filter(|(_, &v)| set.contains(v)).map(|(k, _)| k))
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut x = x;
        while self.parent[x] != r {
            let next = self.parent[x];
            self.parent[x] = r;
            x = next;
        }
        r
    }

    /// Returns false when `a` and `b` were already connected.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}
