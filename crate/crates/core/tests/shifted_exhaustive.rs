//! Exhaustive checks over every shifted object on six vertices.

use std::collections::HashSet;

use specrec::complex::SimplicialComplex;
use specrec::laplacian::spectrum_poly;
use specrec::recursion::{check_recursion, describe};
use specrec::shifted::{check_sdt, enumerate_shifted, enumerate_shifted_families, shifted_pair_spectrum, FamilyPair};

#[test]
fn shifted_complexes_on_six_vertices_satisfy_the_recursion() {
    let all = enumerate_shifted(6, None);
    assert_eq!(all.len(), 1172);
    for cx in &all {
        assert!(spectrum_poly(&cx.as_relative()).is_integral(), "{}", describe(cx));
        for e in 0..6 {
            let r = check_recursion(cx, e).unwrap();
            assert!(r.holds, "{} at {}", describe(cx), r.name);
            assert_eq!(r.direct, Some(true));
        }
    }
}

#[test]
fn sdt_on_six_vertices() {
    for k in 1..=4 {
        let mut seen = HashSet::new();
        for kf in enumerate_shifted_families(6, k) {
            for kpf in enumerate_shifted_families(6, k - 1) {
                let p = FamilyPair::new(kf.clone(), kpf).unwrap();
                if p.is_shifted() && seen.insert(p.clone()) {
                    let r = check_sdt(&p).unwrap();
                    assert!(r.ok, "k={k} {:?}: {r}", p.family().members());
                }
            }
        }
    }
}

#[test]
fn fast_spectrum_on_shifted_pairs() {
    for n in 1..=6 {
        let all = enumerate_shifted(n, None);
        let empty = SimplicialComplex::void(all[0].ambient().to_vec()).unwrap();
        for cx in &all {
            for sub in all.iter().filter(|s| s.faces().is_subset(cx.faces())).chain([&empty]) {
                let fast = shifted_pair_spectrum(cx, sub).unwrap();
                let direct = spectrum_poly(&cx.relative_to(sub).unwrap());
                assert_eq!(fast, direct, "{} rel {}", describe(cx), describe(sub));
            }
        }
    }
}
