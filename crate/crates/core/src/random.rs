//! Seeded generators for random test instances.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::complex::{Face, Family, SimplicialComplex};
use crate::matroid::Matroid;
use crate::shifted::{shift_predecessors, FamilyPair};

/// Vertex names `prefix0, prefix1, ...`, or single letters when `prefix` is empty.
pub fn names(prefix: &str, n: usize) -> Vec<String> {
    if prefix.is_empty() && n <= 26 {
        (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
    } else {
        (0..n).map(|i| format!("{prefix}{i}")).collect()
    }
}

fn random_subset<R: Rng>(rng: &mut R, n: usize, size: usize) -> Face {
    let mut all: Vec<usize> = (0..n).collect();
    all.shuffle(rng);
    Face::from_vertices(all.into_iter().take(size))
}

/// A complex generated by 1 to 4 random facets on `n` vertices, any of which may be loops.
pub fn random_complex<R: Rng>(rng: &mut R, n: usize, prefix: &str) -> SimplicialComplex {
    let count = rng.gen_range(1..=4);
    let facets: Vec<Face> = (0..count)
        .map(|_| {
            let size = rng.gen_range(0..=n.min(4));
            random_subset(rng, n, size)
        })
        .collect();
    SimplicialComplex::from_facets(names(prefix, n), facets).expect("faces in range")
}

/// Down-closure of random faces under deletion and componentwise shifting.
pub fn random_shifted_complex<R: Rng>(rng: &mut R, n: usize, prefix: &str) -> SimplicialComplex {
    let mut faces = std::collections::BTreeSet::new();
    let mut stack: Vec<Face> = (0..rng.gen_range(1..=3))
        .map(|_| {
            let size = rng.gen_range(0..=n.min(4));
            random_subset(rng, n, size)
        })
        .collect();
    while let Some(f) = stack.pop() {
        if faces.insert(f) {
            stack.extend(f.facets_of().map(|(_, g)| g));
            stack.extend(shift_predecessors(f));
        }
    }
    SimplicialComplex::from_faces(names(prefix, n), faces).expect("down-closed")
}

/// A uniform matroid, a graphic matroid of a random multigraph (loops and
/// parallel edges allowed), or a direct sum of two small ones.
pub fn random_matroid<R: Rng>(rng: &mut R, max_elements: usize) -> Matroid {
    match rng.gen_range(0..3) {
        0 => {
            let n = rng.gen_range(1..=max_elements.min(6));
            Matroid::uniform(rng.gen_range(0..=n), n).expect("r <= n")
        }
        1 => {
            let v = rng.gen_range(2..=4);
            let verts = names("v", v);
            let m = rng.gen_range(1..=max_elements.min(7));
            let edges: Vec<(String, String)> =
                (0..m).map(|_| (verts[rng.gen_range(0..v)].clone(), verts[rng.gen_range(0..v)].clone())).collect();
            Matroid::graphic(&edges).expect("graph")
        }
        _ => {
            let a = rng.gen_range(1..=3);
            let r = rng.gen_range(0..=a);
            let left = Matroid::uniform(r, a).expect("r <= n");
            let verts = names("w", 3);
            let m = rng.gen_range(1..=max_elements.saturating_sub(a).clamp(1, 4));
            let edges: Vec<(String, String)> =
                (0..m).map(|_| (verts[rng.gen_range(0..3)].clone(), verts[rng.gen_range(0..3)].clone())).collect();
            left.direct_sum(&Matroid::graphic(&edges).expect("graph")).expect("disjoint names")
        }
    }
}

/// `(K, K')` with each `k`-subset in `K` and each `(k-1)`-subset in `K'` independently.
pub fn random_family_pair<R: Rng>(rng: &mut R, n: usize, k: usize) -> FamilyPair {
    assert!(k >= 1 && k <= n);
    let p: f64 = rng.gen_range(0.15..0.85);
    let pp: f64 = rng.gen_range(0.0..0.6);
    let all: Vec<Face> = (0..1u64 << n).map(Face::from_bits).collect();
    let km = all.iter().copied().filter(|f| f.len() == k && rng.gen_bool(p)).collect::<Vec<_>>();
    let kpm = all.iter().copied().filter(|f| f.len() == k - 1 && rng.gen_bool(pp)).collect::<Vec<_>>();
    let names = names("", n);
    FamilyPair::new(Family::new(names.clone(), k, km).unwrap(), Family::new(names, k - 1, kpm).unwrap())
        .expect("same ambient")
}

/// A random permutation of `0..n`.
pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}
