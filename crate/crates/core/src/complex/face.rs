use std::fmt;

/// Index of a vertex in an ambient ordered vertex list.
pub type Vertex = usize;

/// A finite vertex set, stored as a bitmask over ambient positions.
///
/// Faces order by their bitmask value, which gives the deterministic row and
/// column order used in boundary matrices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Face(u64);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub const fn from_bits(bits: u64) -> Face {
        Face(bits)
    }

    pub fn from_vertices<I: IntoIterator<Item = Vertex>>(vertices: I) -> Face {
        vertices.into_iter().fold(Face::EMPTY, |f, v| f.with(v))
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// `|F| - 1`, so the empty face has dimension -1.
    pub fn dim(self) -> isize {
        self.len() as isize - 1
    }

    pub fn contains(self, v: Vertex) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn with(self, v: Vertex) -> Face {
        Face(self.0 | 1 << v)
    }

    pub fn without(self, v: Vertex) -> Face {
        Face(self.0 & !(1 << v))
    }

    pub fn is_subset(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Face) -> bool {
        self.0 & other.0 == 0
    }

    pub fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    pub fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    pub fn minus(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    /// Complement within the first `n` positions.
    pub fn complement(self, n: usize) -> Face {
        Face(!self.0 & super::full_mask(n))
    }

    /// Vertices in increasing order.
    pub fn vertices(self) -> impl Iterator<Item = Vertex> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    /// Number of members smaller than `v`; the sign of dropping `v` is `(-1)^rank`.
    pub fn rank_of(self, v: Vertex) -> usize {
        (self.0 & ((1u64 << v) - 1)).count_ones() as usize
    }

    /// Drops position `v` from the ambient: higher positions move down by one.
    /// The face must not contain `v`.
    pub fn remove_index(self, v: Vertex) -> Face {
        debug_assert!(!self.contains(v));
        let low = self.0 & ((1u64 << v) - 1);
        let high = if v >= 63 { 0 } else { (self.0 >> (v + 1)) << v };
        Face(low | high)
    }

    /// Moves every position up by `offset` (used to place a face after another ambient).
    pub fn offset(self, offset: usize) -> Face {
        if offset >= 64 {
            assert_eq!(self.0, 0, "face does not fit after offset");
            return self;
        }
        Face(self.0 << offset)
    }

    /// All subsets of this face.
    pub fn subsets(self) -> impl Iterator<Item = Face> {
        // Gosper-free subset walk: sub = (sub - 1) & mask, visiting every subset once.
        let mask = self.0;
        let mut sub = mask;
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let cur = sub;
            if sub == 0 {
                done = true;
            } else {
                sub = (sub - 1) & mask;
            }
            Some(Face(cur))
        })
    }

    /// Faces obtained by removing one vertex, with the removed vertex.
    pub fn facets_of(self) -> impl Iterator<Item = (Vertex, Face)> {
        self.vertices().map(move |v| (v, self.without(v)))
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.vertices()).finish()
    }
}
