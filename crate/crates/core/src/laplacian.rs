//! Boundary maps and combinatorial Laplacians of relative face sets, and the
//! spectrum generating functions built from them.
//!
//! Index conventions: `L_i` acts on the `i`-dimensional faces of the
//! difference set, and eigenvalues of `L_{i-1}` are recorded at `t^i`, so the
//! empty face contributes to `t^0`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::complex::{Face, Family, RelativeFaceSet, SimplicialComplex};
use crate::error::{Error, Result};
use crate::linalg::{char_poly, eigenvalue_bound, integer_roots, rank, IntMatrix, SpectrumMultiset};
use crate::poly::{BiPoly, IntPoly};

/// `∂_i` from `i`-faces to `(i-1)`-faces of a difference set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryMatrix {
    pub rows: Vec<Face>,
    pub cols: Vec<Face>,
    pub matrix: IntMatrix,
}

fn sign(face: Face, v: usize) -> i64 {
    if face.rank_of(v).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn boundary(p: &RelativeFaceSet, i: isize) -> BoundaryMatrix {
    let rows = p.faces_of_dim(i - 1);
    let cols = p.faces_of_dim(i);
    let index: HashMap<Face, usize> = rows.iter().enumerate().map(|(k, &f)| (f, k)).collect();
    let mut matrix = IntMatrix::zeros(rows.len(), cols.len());
    for (c, &f) in cols.iter().enumerate() {
        for (v, g) in f.facets_of() {
            if let Some(&r) = index.get(&g) {
                matrix[(r, c)] = sign(f, v);
            }
        }
    }
    BoundaryMatrix { rows, cols, matrix }
}

/// Adds `Σ_{H} ∂(H)∂(H)^T` style outer products: each group lists
/// (row index, sign) pairs that share a common neighbour.
fn accumulate(n: usize, groups: impl Iterator<Item = Vec<(usize, i64)>>) -> IntMatrix {
    let mut m = IntMatrix::zeros(n, n);
    for g in groups {
        for &(a, sa) in &g {
            for &(b, sb) in &g {
                m[(a, b)] += sa * sb;
            }
        }
    }
    m
}

/// `L'_i = ∂_{i+1} ∂*_{i+1}` on the `i`-faces.
pub fn laplacian_up(p: &RelativeFaceSet, i: isize) -> IntMatrix {
    let faces = p.faces_of_dim(i);
    let index: HashMap<Face, usize> = faces.iter().enumerate().map(|(k, &f)| (f, k)).collect();
    let groups = p
        .faces_of_dim(i + 1)
        .into_iter()
        .map(|k| k.facets_of().filter_map(|(v, g)| index.get(&g).map(|&r| (r, sign(k, v)))).collect());
    accumulate(faces.len(), groups)
}

/// `L''_i = ∂*_i ∂_i` on the `i`-faces.
pub fn laplacian_down(p: &RelativeFaceSet, i: isize) -> IntMatrix {
    let faces = p.faces_of_dim(i);
    let mut by_sub: BTreeMap<Face, Vec<(usize, i64)>> = BTreeMap::new();
    for (c, &f) in faces.iter().enumerate() {
        for (v, g) in f.facets_of() {
            if p.contains(g) {
                by_sub.entry(g).or_default().push((c, sign(f, v)));
            }
        }
    }
    accumulate(faces.len(), by_sub.into_values())
}

/// `L_i = L'_i + L''_i`.
pub fn laplacian(p: &RelativeFaceSet, i: isize) -> IntMatrix {
    laplacian_up(p, i).add(&laplacian_down(p, i))
}

/// Exact spectrum of `L_i`.
pub fn spectrum(p: &RelativeFaceSet, i: isize) -> SpectrumMultiset {
    spectrum_of(&laplacian(p, i))
}

pub fn spectrum_of(m: &IntMatrix) -> SpectrumMultiset {
    integer_roots(&char_poly(m), Some(&eigenvalue_bound(m)))
}

/// Range of `t`-exponents carrying faces: `0 ..= max_dim + 1`. Empty for an empty difference.
pub fn t_range(p: &RelativeFaceSet) -> std::ops::RangeInclusive<usize> {
    match p.max_dim() {
        Some(d) => 0..=((d + 1) as usize),
        #[allow(clippy::reversed_empty_ranges)]
        None => 1..=0,
    }
}

/// Char polys `P_i` of `L_{i-1}` for `i = 0 ..= max_dim + 1`.
pub fn char_polys(p: &RelativeFaceSet) -> Vec<IntPoly> {
    t_range(p).map(|i| char_poly(&laplacian(p, i as isize - 1))).collect()
}

/// Spectra per dimension, from `-1` up to the top dimension.
pub fn spectra(p: &RelativeFaceSet) -> Vec<(isize, SpectrumMultiset)> {
    t_range(p).map(|i| (i as isize - 1, spectrum(p, i as isize - 1))).collect()
}

/// `Σ m_λ t^i q^λ` over integer eigenvalues, with the non-integral part of
/// each dimension kept as a residual char-poly factor.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SpectrumPoly {
    pub poly: BiPoly,
    /// Non-constant residual factors, keyed by `t`-exponent.
    pub residuals: BTreeMap<usize, IntPoly>,
}

impl SpectrumPoly {
    pub fn is_integral(&self) -> bool {
        self.residuals.is_empty()
    }

    /// Builds the polynomial from per-`t`-exponent multisets.
    pub fn from_spectra<'a>(items: impl IntoIterator<Item = (usize, &'a SpectrumMultiset)>, skip_zero: bool) -> Self {
        let mut out = SpectrumPoly::default();
        for (i, s) in items {
            for (&lambda, &m) in &s.roots {
                if skip_zero && lambda == 0 {
                    continue;
                }
                out.poly.add_term(i as i32, lambda as i32, m as i64);
            }
            if !s.residual.is_constant() {
                out.residuals.insert(i, s.residual.clone());
            }
        }
        out
    }
}

impl fmt::Display for SpectrumPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly)?;
        for (i, r) in &self.residuals {
            write!(f, " + t^{i}*residual{r}")?;
        }
        Ok(())
    }
}

pub fn spectrum_poly(p: &RelativeFaceSet) -> SpectrumPoly {
    let spectra = spectra(p);
    SpectrumPoly::from_spectra(spectra.iter().map(|(d, s)| ((d + 1) as usize, s)), false)
}

/// `S''`: nonzero eigenvalues of `L''_{i-1}` at `t^i`.
pub fn s_dd_poly(p: &RelativeFaceSet) -> SpectrumPoly {
    let spectra: Vec<(usize, SpectrumMultiset)> =
        t_range(p).map(|i| (i, spectrum_of(&laplacian_down(p, i as isize - 1)))).collect();
    SpectrumPoly::from_spectra(spectra.iter().map(|(i, s)| (*i, s)), true)
}

/// `B(t) = Σ m_0(L_{i-1}) t^i`, as a coefficient list indexed by the `t`-exponent.
pub fn betti_poly(p: &RelativeFaceSet) -> Vec<i64> {
    spectra(p).iter().map(|(_, s)| s.multiplicity(0) as i64).collect()
}

/// `F(t) = Σ f_{i-1} t^i`.
pub fn f_poly(cx: &SimplicialComplex) -> Vec<i64> {
    cx.f_vector().into_iter().map(|f| f as i64).collect()
}

/// `β_i = |diff_i| - rank ∂_i - rank ∂_{i+1}`, independent of any eigenvalue computation.
pub fn betti_rank_oracle(p: &RelativeFaceSet, i: isize) -> usize {
    let n = p.faces_of_dim(i).len();
    n - rank(&boundary(p, i).matrix) - rank(&boundary(p, i + 1).matrix)
}

/// `L(K, K') = ∂*∂` on the `k`-family `K`, with boundary restricted to `(∂K) ∖ K'`.
pub fn family_laplacian(k: &Family, kp: &Family) -> Result<IntMatrix> {
    if k.ambient() != kp.ambient() {
        return Err(Error::AmbientMismatch);
    }
    if k.k() == 0 || kp.k() + 1 != k.k() {
        return Err(Error::CardinalityMismatch { expected: k.k().saturating_sub(1), found: kp.k() });
    }
    Ok(laplacian_down(&family_pair_faces(k, kp), k.k() as isize - 1))
}

/// `K ∪ ((∂K) ∖ K')` as a relative face set.
pub(crate) fn family_pair_faces(k: &Family, kp: &Family) -> RelativeFaceSet {
    let mut faces: std::collections::BTreeSet<Face> = k.members().clone();
    faces.extend(k.boundary().members().iter().filter(|g| !kp.contains(**g)));
    RelativeFaceSet::new(k.ambient().to_vec(), faces).expect("faces lie in the ambient")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(v: &[&str], f: &[&[&str]]) -> SimplicialComplex {
        SimplicialComplex::from_named_facets(v, f).unwrap()
    }

    fn path3() -> SimplicialComplex {
        cx(&["a", "b", "c", "d"], &[&["a", "b"], &["b", "c"], &["c", "d"]])
    }

    #[test]
    fn boundary_shapes() {
        let b = boundary(&path3().as_relative(), 1);
        assert_eq!((b.matrix.rows(), b.matrix.cols()), (4, 3));
        for c in 0..3 {
            let col: Vec<i64> = (0..4).map(|r| b.matrix[(r, c)]).filter(|&x| x != 0).collect();
            assert_eq!(col.len(), 2);
            assert_eq!(col.iter().sum::<i64>(), 0);
        }
        let pt = cx(&["a"], &[&["a"]]).as_relative();
        assert_eq!(boundary(&pt, 0).matrix, IntMatrix::from_rows(&[[1]]));
        let only_x = RelativeFaceSet::new(vec!["x".into()], [Face::from_vertices([0])].into()).unwrap();
        let b = boundary(&only_x, 0);
        assert_eq!((b.matrix.rows(), b.matrix.cols()), (0, 1));
    }

    #[test]
    fn small_laplacians() {
        let pt = cx(&["a"], &[&["a"]]).as_relative();
        assert_eq!(laplacian(&pt, -1), IntMatrix::from_rows(&[[1]]));
        assert_eq!(laplacian(&pt, 0), IntMatrix::from_rows(&[[1]]));
        let two = cx(&["a", "b"], &[&["a"], &["b"]]).as_relative();
        assert_eq!(laplacian(&two, 0), IntMatrix::from_rows(&[[1, 1], [1, 1]]));
        let void = SimplicialComplex::void(vec!["a".into()]).unwrap().as_relative();
        assert_eq!(laplacian(&void, 0).rows(), 0);
    }

    #[test]
    fn path_spectrum() {
        let p = path3().as_relative();
        // The up part is the graph Laplacian, x(x-2)(x^2-4x+2); the empty face adds J.
        assert_eq!(char_poly(&laplacian_up(&p, 0)), IntPoly::from_i64(&[0, -4, 10, -6, 1]));
        assert_eq!(char_poly(&laplacian(&p, 0)), IntPoly::from_i64(&[16, -44, 34, -10, 1]));
        let s = spectrum(&p, 0);
        assert_eq!(s.roots, BTreeMap::from([(2, 1), (4, 1)]));
        assert_eq!(s.residual, IntPoly::from_i64(&[2, -4, 1]));
        assert!(!spectrum_poly(&p).is_integral());
    }

    #[test]
    fn worked_spectrum_polys() {
        let pt = cx(&["a"], &[&["a"]]).as_relative();
        assert_eq!(spectrum_poly(&pt).poly.to_string(), "q + q*t");
        let empty = cx(&["a"], &[&[] as &[&str]]).as_relative();
        assert_eq!(spectrum_poly(&empty).poly, BiPoly::one());
        let void = SimplicialComplex::void(vec![]).unwrap().as_relative();
        assert!(spectrum_poly(&void).poly.is_zero());
        // IN(U_{1,2}) is two points.
        let u12 = cx(&["1", "2"], &[&["1"], &["2"]]).as_relative();
        assert_eq!(spectrum_poly(&u12).poly.to_string(), "q^2 + q^2*t + t");
        assert_eq!(spectrum(&u12, -1).roots, BTreeMap::from([(2, 1)]));
    }

    #[test]
    fn betti_data() {
        assert_eq!(betti_poly(&path3().as_relative()), vec![0, 0, 0]);
        let two = cx(&["a", "b"], &[&["a"], &["b"]]).as_relative();
        assert_eq!(betti_poly(&two), vec![0, 1]);
        let circle = cx(&["a", "b", "c"], &[&["a", "b"], &["b", "c"], &["a", "c"]]).as_relative();
        assert_eq!(betti_rank_oracle(&circle, 1), 1);
        assert_eq!(betti_rank_oracle(&path3().as_relative(), 0), 0);
        assert_eq!(f_poly(&path3())[0], 1);
    }

    #[test]
    fn family_laplacians() {
        let v = ["1", "2", "3", "4"];
        let k = Family::from_named(&v, 2, &[["1", "2"], ["1", "3"]]).unwrap();
        let kp = Family::from_named(&v, 1, &[["1"]]).unwrap();
        assert_eq!(family_laplacian(&k, &kp).unwrap(), IntMatrix::identity(2));

        let star = Family::from_named(&v, 2, &[["1", "2"], ["1", "3"], ["1", "4"]]).unwrap();
        let none = Family::empty(v.iter().map(|s| s.to_string()).collect(), 1).unwrap();
        let s = spectrum_of(&family_laplacian(&star, &none).unwrap());
        assert_eq!(s.roots, BTreeMap::from([(1, 2), (4, 1)]));

        let empty = Family::empty(v.iter().map(|s| s.to_string()).collect(), 2).unwrap();
        assert_eq!(family_laplacian(&empty, &none).unwrap().rows(), 0);
        assert!(family_laplacian(&star, &star).is_err());
    }
}
