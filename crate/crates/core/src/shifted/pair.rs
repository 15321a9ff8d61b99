use std::fmt;

use num_bigint::BigInt;

use super::{Partition, Shifted};
use crate::complex::{Family, SimplicialComplex, Vertex};
use crate::error::{Error, Result};
use crate::laplacian::{family_laplacian, spectrum_of, SpectrumPoly};
use crate::linalg::{char_poly, IntMatrix, SpectrumMultiset};
use crate::poly::IntPoly;

/// A `k`-family `K` with a `(k-1)`-family `K'`, kept in the canonical form
/// `(K, (∂K) ∩ K')` so that equal pairs compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FamilyPair {
    k: Family,
    kp: Family,
}

impl FamilyPair {
    pub fn new(k: Family, kp: Family) -> Result<Self> {
        if k.ambient() != kp.ambient() {
            return Err(Error::AmbientMismatch);
        }
        if k.k() == 0 || kp.k() + 1 != k.k() {
            return Err(Error::CardinalityMismatch { expected: k.k().saturating_sub(1), found: kp.k() });
        }
        let kp = k.boundary().intersect(&kp)?;
        Ok(FamilyPair { k, kp })
    }

    /// `(K, ∅)`. A 0-family has nothing below it, so `K'` is an empty placeholder.
    pub fn single(k: Family) -> Self {
        let kp = Family::empty(k.ambient().to_vec(), k.k().saturating_sub(1)).expect("valid ambient");
        FamilyPair { k, kp }
    }

    pub fn family(&self) -> &Family {
        &self.k
    }

    /// The canonical `(∂K) ∩ K'`.
    pub fn sub_family(&self) -> &Family {
        &self.kp
    }

    /// `K` shifted and `(∂K) ∩ K'` shifted, which is equivalent to some
    /// representative `K''` being shifted.
    pub fn is_shifted(&self) -> bool {
        self.k.is_shifted() && self.kp.is_shifted()
    }

    pub fn is_near_cone(&self) -> bool {
        self.k.is_near_cone() && self.kp.is_near_cone()
    }

    /// `(K - e, K' - e)`.
    pub fn delete(&self, e: Vertex) -> Result<Self> {
        let k = self.k.delete(e)?;
        let kp = self.kp.delete(e)?;
        if k.k() == 0 {
            return Ok(FamilyPair::single(k));
        }
        FamilyPair::new(k, kp)
    }

    /// `(K / e, K' / e)`.
    pub fn contract(&self, e: Vertex) -> Result<Self> {
        let k = self.k.contract(e)?;
        if k.k() == 0 || self.k.k() == 0 {
            return Ok(FamilyPair::single(k));
        }
        FamilyPair::new(k, self.kp.contract(e)?)
    }

    /// `L(K, K') = ∂*∂`; the zero matrix on a 0-family.
    pub fn laplacian(&self) -> IntMatrix {
        if self.k.k() == 0 {
            return IntMatrix::zeros(self.k.len(), self.k.len());
        }
        family_laplacian(&self.k, &self.kp).expect("shapes checked on construction")
    }

    pub fn char_poly(&self) -> IntPoly {
        char_poly(&self.laplacian())
    }

    /// `s(K, K')`, zeros included.
    pub fn spectrum(&self) -> SpectrumMultiset {
        spectrum_of(&self.laplacian())
    }

    /// `d_λ = |{F ∈ K : λ ∈ F, F - λ ∉ K'}|` for every vertex.
    pub fn degree_sequence(&self) -> DegreeSequence {
        let n = self.k.num_vertices();
        let mut degrees = vec![0; n];
        for &f in self.k.members() {
            for v in f.vertices() {
                if !self.kp.contains(f.without(v)) {
                    degrees[v] += 1;
                }
            }
        }
        let partition = Partition::new(degrees.clone());
        DegreeSequence { degrees, partition }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeSequence {
    /// Indexed by vertex.
    pub degrees: Vec<usize>,
    pub partition: Partition,
}

/// Integer eigenvalues as a partition; `None` when some eigenvalue is not an integer.
fn integral_partition(s: &SpectrumMultiset) -> Option<Partition> {
    if !s.is_integral() {
        return None;
    }
    let parts =
        s.roots.iter().flat_map(|(&l, &m)| std::iter::repeat_n(usize::try_from(l).expect("Laplacians are PSD"), m));
    Some(Partition::new(parts.collect()))
}

#[derive(Clone, Debug)]
pub struct SdtReport {
    pub spectrum: SpectrumMultiset,
    pub degrees: DegreeSequence,
    /// Nonzero parts of `s(K, K')`, when the spectrum is integral.
    pub s: Option<Partition>,
    pub dt: Partition,
    pub ok: bool,
}

impl fmt::Display for SdtReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.s {
            Some(s) => write!(f, "s={s}")?,
            None => write!(f, "s={}", self.spectrum)?,
        }
        write!(f, " dT={} {}", self.dt, if self.ok { "OK" } else { "MISMATCH" })
    }
}

/// `s(K, K') ≐ d(K, K')^T` on a shifted family pair.
pub fn check_sdt(p: &FamilyPair) -> Result<SdtReport> {
    if !p.is_shifted() {
        return Err(Error::Precondition("family pair is not shifted; use the Grone-Merris scan".into()));
    }
    let spectrum = p.spectrum();
    let degrees = p.degree_sequence();
    let dt = degrees.partition.conjugate();
    let s = integral_partition(&spectrum).map(|s| s.nonzero());
    let ok = s.as_ref() == Some(&dt);
    Ok(SdtReport { spectrum, degrees, s, dt, ok })
}

/// Spectrum polynomial of a shifted pair without any eigenvalue computation:
/// the nonzero parts of `L''_i` come from `d(Δ_i, Δ'_{i-1})^T`, those of `L_i`
/// are the union of the `L''_i` and `L''_{i+1}` parts, and zeros fill up to
/// `f_i(Δ) - f_i(Δ')`.
pub fn shifted_pair_spectrum(cx: &SimplicialComplex, sub: &SimplicialComplex) -> Result<SpectrumPoly> {
    if cx.ambient() != sub.ambient() {
        return Err(Error::AmbientMismatch);
    }
    if !cx.is_shifted() || !sub.is_shifted() {
        return Err(Error::Precondition("both complexes must be shifted".into()));
    }
    if !sub.faces().is_subset(cx.faces()) {
        return Err(Error::Precondition("the subcomplex is not contained in the complex".into()));
    }
    let mut out = SpectrumPoly::default();
    let Some(top) = cx.dim() else { return Ok(out) };
    let s_dd = |i: isize| -> Partition {
        if i < 0 || i > top {
            return Partition::default();
        }
        let pair = FamilyPair::new(cx.family_of_dim(i), sub.family_of_dim(i - 1)).expect("same ambient");
        pair.degree_sequence().partition.conjugate()
    };
    for i in -1..=top {
        let nonzero = s_dd(i).union(&s_dd(i + 1));
        let count = cx.f(i) - sub.f(i);
        assert!(nonzero.len() <= count, "more nonzero eigenvalues than faces in dimension {i}");
        let t = (i + 1) as i32;
        for &lambda in nonzero.parts() {
            out.poly.add_term(t, lambda as i32, 1);
        }
        if count > nonzero.len() {
            out.poly.add_term(t, 0, (count - nonzero.len()) as i64);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct PairRecursionReport {
    /// `m = |K/1| - |K'-1|`.
    pub m: i64,
    /// Char poly of the nonzero part of `s(K, K')`.
    pub lhs: IntPoly,
    /// Char poly of `1^m + (s(K-1, K'-1) ∪ s(K/1, K'/1))`.
    pub rhs: IntPoly,
    pub spectral_holds: bool,
    /// The same recursion for `d^T`, checked only on shifted pairs.
    pub degree_holds: Option<bool>,
}

impl PairRecursionReport {
    pub fn holds(&self) -> bool {
        self.spectral_holds && self.degree_holds != Some(false)
    }
}

fn nonzero_char_poly(p: &FamilyPair) -> IntPoly {
    p.char_poly().strip_x_power().1
}

/// `s(K, K') ≐ 1^m + (s(K-1, K'-1) ∪ s(K/1, K'/1))` with `m = |K/1| - |K'-1|`,
/// for near-cones `K, K'` with apex vertex 0. The check runs on the canonical
/// representative, for which `K' ⊆ ∂K` holds automatically.
pub fn family_pair_recursion_check(p: &FamilyPair) -> Result<PairRecursionReport> {
    if p.family().num_vertices() == 0 || p.family().k() == 0 {
        return Err(Error::Precondition("needs a k-family with k ≥ 1 on a non-empty ground set".into()));
    }
    if !p.is_near_cone() {
        return Err(Error::Precondition("both families must be near-cones with apex at the first vertex".into()));
    }
    let (del, con) = (p.delete(0)?, p.contract(0)?);
    let m = con.family().len() as i64 - p.sub_family().delete(0)?.len() as i64;
    let lhs = nonzero_char_poly(p);
    let union = &nonzero_char_poly(&del) * &nonzero_char_poly(&con);
    let n_union = union.degree().unwrap_or(0) as i64;
    // Adding 1^m to a partition with more than m nonzero parts leaves some
    // parts unshifted; the identity then already fails on the part count.
    let (rhs, spectral_holds) = if m < n_union {
        (union.clone(), false)
    } else {
        let ones = (0..m - n_union).fold(IntPoly::one(), |acc, _| &acc * &IntPoly::linear(&BigInt::from(1)));
        let rhs = &union.shift(-1) * &ones;
        let holds = rhs == lhs;
        (rhs, holds)
    };
    let degree_holds = p.is_shifted().then(|| {
        let dt = |q: &FamilyPair| q.degree_sequence().partition.conjugate();
        let expected = Partition::ones(m.max(0) as usize).add(&dt(&del).union(&dt(&con)));
        m >= 0 && dt(p).eq_mod_zeros(&expected)
    });
    Ok(PairRecursionReport { m, lhs, rhs, spectral_holds, degree_holds })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laplacian::spectrum_poly;
    use crate::shifted::{enumerate_shifted, enumerate_shifted_families};

    fn fam(k: usize, m: &[&[&str]]) -> Family {
        Family::from_named(&["1", "2", "3", "4"], k, m).unwrap()
    }

    fn star() -> FamilyPair {
        FamilyPair::single(fam(2, &[&["1", "2"], &["1", "3"], &["1", "4"]]))
    }

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn worked_degree_sequences() {
        let k = FamilyPair::single(fam(2, &[&["1", "2"], &["1", "3"], &["1", "4"], &["2", "3"]]));
        assert_eq!(k.degree_sequence().partition, p(&[3, 2, 2, 1]));
        let pair = FamilyPair::new(fam(2, &[&["1", "2"], &["1", "3"]]), fam(1, &[&["1"]])).unwrap();
        assert_eq!(pair.degree_sequence().degrees, vec![2, 0, 0, 0]);
        assert_eq!(pair.degree_sequence().partition.nonzero(), p(&[2]));
        assert!(FamilyPair::single(fam(2, &[])).degree_sequence().partition.nonzero().is_empty());
    }

    #[test]
    fn canonical_form_ignores_irrelevant_members() {
        let k = fam(2, &[&["1", "2"]]);
        let a = FamilyPair::new(k.clone(), fam(1, &[&["1"]])).unwrap();
        let b = FamilyPair::new(k, fam(1, &[&["1"], &["4"]])).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn worked_sdt() {
        let r = check_sdt(&star()).unwrap();
        assert_eq!(r.to_string(), "s=(4,1,1) dT=(4,1,1) OK");
        let pair = FamilyPair::new(fam(2, &[&["1", "2"], &["1", "3"]]), fam(1, &[&["1"]])).unwrap();
        assert_eq!(check_sdt(&pair).unwrap().to_string(), "s=(1,1) dT=(1,1) OK");
        let k = FamilyPair::single(fam(2, &[&["1", "2"], &["1", "3"], &["1", "4"], &["2", "3"]]));
        assert_eq!(check_sdt(&k).unwrap().s, Some(p(&[4, 3, 1])));
        let path = FamilyPair::single(fam(2, &[&["1", "2"], &["2", "3"], &["3", "4"]]));
        assert!(check_sdt(&path).is_err());
    }

    #[test]
    fn sdt_on_enumerated_pairs() {
        for n in 1..=4 {
            for k in 1..=3 {
                for kf in enumerate_shifted_families(n, k) {
                    for kpf in enumerate_shifted_families(n, k - 1) {
                        let pair = FamilyPair::new(kf.clone(), kpf).unwrap();
                        let r = check_sdt(&pair).unwrap();
                        assert!(r.ok, "{r}");
                        // Degrees of a shifted pair already decrease along the vertex order.
                        assert!(r.degrees.degrees.windows(2).all(|w| w[0] >= w[1]));
                    }
                }
            }
        }
    }

    #[test]
    fn fast_spectrum_matches_laplacian() {
        let shifted = enumerate_shifted(4, None);
        for cx in &shifted {
            for sub in shifted.iter().filter(|s| s.faces().is_subset(cx.faces())) {
                let fast = shifted_pair_spectrum(cx, sub).unwrap();
                let direct = spectrum_poly(&cx.relative_to(sub).unwrap());
                assert!(direct.is_integral());
                assert_eq!(fast, direct);
            }
            let void = SimplicialComplex::void(cx.ambient().to_vec()).unwrap();
            assert_eq!(shifted_pair_spectrum(cx, &void).unwrap(), spectrum_poly(&cx.as_relative()));
            assert!(shifted_pair_spectrum(cx, cx).unwrap().poly.is_zero());
        }
    }

    #[test]
    fn worked_fast_spectra() {
        let v = ["1", "2"];
        let edge = SimplicialComplex::from_named_facets(&v, &[["1", "2"]]).unwrap();
        let points = SimplicialComplex::from_named_facets(&v, &[["1"], ["2"]]).unwrap();
        assert_eq!(shifted_pair_spectrum(&edge, &points).unwrap().poly.to_string(), "t^2");
        let cone = SimplicialComplex::from_named_facets(&["1", "a", "b"], &[["1", "a"], ["1", "b"]]).unwrap();
        let empty = SimplicialComplex::void(cone.ambient().to_vec()).unwrap();
        assert_eq!(shifted_pair_spectrum(&cone, &empty).unwrap(), spectrum_poly(&cone.as_relative()));
        assert!(shifted_pair_spectrum(&points, &edge).is_err());
    }

    #[test]
    fn worked_pair_recursions() {
        let r = family_pair_recursion_check(&star()).unwrap();
        assert_eq!(r.m, 3);
        assert!(r.holds());
        assert_eq!(r.lhs, IntPoly::from_i64(&[-4, 9, -6, 1]));
        let pair = FamilyPair::new(fam(2, &[&["1", "2"], &["1", "3"]]), fam(1, &[&["1"]])).unwrap();
        assert!(family_pair_recursion_check(&pair).unwrap().holds());
        let not_cone = FamilyPair::single(fam(2, &[&["2", "3"]]));
        assert!(family_pair_recursion_check(&not_cone).is_err());
    }

    #[test]
    fn pair_recursion_on_enumerated_pairs() {
        for k in 1..=3 {
            for kf in enumerate_shifted_families(5, k) {
                for kpf in enumerate_shifted_families(5, k - 1) {
                    let pair = FamilyPair::new(kf.clone(), kpf).unwrap();
                    let r = family_pair_recursion_check(&pair).unwrap();
                    assert!(r.holds(), "{:?}", r);
                    assert_eq!(r.degree_holds, Some(true));
                }
            }
        }
    }
}
