use std::cell::RefCell;
use std::collections::HashMap;

use super::Matroid;
use crate::complex::Vertex;
use crate::error::{Error, Result};
use crate::laplacian::{spectrum_poly, SpectrumPoly};
use crate::poly::BiPoly;

/// `S_{IN(M)}` straight from the Laplacians of the independence complex.
pub fn spectrum_poly_direct(m: &Matroid) -> SpectrumPoly {
    spectrum_poly(&m.independence_complex().as_relative())
}

/// `S_M = q^{|E|} Σ_{I ∈ ℐ} t^{|I|} q^{-|π̄(I)|}`.
pub fn spectrum_poly_krs(m: &Matroid) -> BiPoly {
    let n = m.len() as i32;
    let mut out = BiPoly::zero();
    for i in m.independent_sets() {
        let pb = m.pi_bar(i).expect("independent");
        out.add_term(i.len() as i32, n - pb.len() as i32, 1);
    }
    out
}

thread_local! {
    static MEMO: RefCell<HashMap<(usize, Vec<u64>), BiPoly>> = RefCell::new(HashMap::new());
}

/// Drops the per-thread memo table used by [`spectrum_poly_recursive`].
pub fn clear_memo() {
    MEMO.with(|m| m.borrow_mut().clear());
}

/// `S_M = q S_{M-e} + qt S_{M/e} + (1-q) Σ_{C ∋ e} t^{rk C} S_{M/C}`,
/// applied at the first element and memoized on the loop-free basis list.
pub fn spectrum_poly_recursive(m: &Matroid) -> BiPoly {
    // Loops never meet a face, so they change nothing.
    let m = m.restrict(m.full_set().minus(m.loops()));
    if m.is_empty() {
        return BiPoly::one();
    }
    let key = m.key();
    if let Some(hit) = MEMO.with(|t| t.borrow().get(&key).cloned()) {
        return hit;
    }
    let e = 0;
    let q = BiPoly::q();
    let qt = BiPoly::monomial(1, 1, 1);
    let contracted = spectrum_poly_recursive(&m.contract(e).unwrap());
    let result = if m.is_isthmus(e) {
        // Complex deletion at an isthmus equals the contraction.
        &(&q + &qt) * &contracted
    } else {
        let deleted = spectrum_poly_recursive(&m.delete(e).unwrap());
        let pair = circuit_sum(&m, e);
        let one_minus_q = &BiPoly::one() - &q;
        &(&(&q * &deleted) + &(&qt * &contracted)) + &(&one_minus_q * &pair)
    };
    MEMO.with(|t| t.borrow_mut().insert(key, result.clone()));
    result
}

fn circuit_sum(m: &Matroid, e: Vertex) -> BiPoly {
    let mut out = BiPoly::zero();
    for c in m.circuits_through(e) {
        let term = spectrum_poly_recursive(&m.contract_set(c)).shift(c.len() as i32 - 1, 0);
        out = &out + &term;
    }
    out
}

/// `S_{(M-e, M/e)} = Σ_{C ∋ e} t^{rk C} S_{M/C}`; `e` must not be a loop.
pub fn pair_spectrum_poly(m: &Matroid, e: Vertex) -> Result<BiPoly> {
    crate::complex::check_vertex(m.len(), e)?;
    if m.is_loop(e) {
        return Err(Error::Precondition(format!("{} is a loop; the pair is (IN(M) - e, VOID)", m.ground()[e])));
    }
    Ok(circuit_sum(m, e))
}

impl Matroid {
    pub fn pair_spectrum_poly(&self, e: Vertex) -> Result<BiPoly> {
        pair_spectrum_poly(self, e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_u12() {
        let u = Matroid::uniform(1, 2).unwrap();
        assert_eq!(spectrum_poly_krs(&u).to_string(), "q^2 + q^2*t + t");
        assert_eq!(spectrum_poly_recursive(&u).to_string(), "q^2 + q^2*t + t");
        assert_eq!(spectrum_poly_direct(&u).poly.to_string(), "q^2 + q^2*t + t");
        assert_eq!(u.pair_spectrum_poly(0).unwrap(), BiPoly::t());
    }

    #[test]
    fn base_cases() {
        let lp = Matroid::uniform(0, 1).unwrap();
        assert_eq!(spectrum_poly_krs(&lp), BiPoly::one());
        assert_eq!(spectrum_poly_recursive(&lp), BiPoly::one());
        assert!(lp.pair_spectrum_poly(0).is_err());
        let free = Matroid::uniform(1, 1).unwrap();
        assert_eq!(spectrum_poly_krs(&free).to_string(), "q + q*t");
        assert_eq!(spectrum_poly_recursive(&free).to_string(), "q + q*t");
        assert!(free.pair_spectrum_poly(0).unwrap().is_zero());
    }

    #[test]
    fn three_way_agreement_small() {
        let graphs = [
            Matroid::uniform(2, 3).unwrap(),
            Matroid::uniform(2, 4).unwrap(),
            Matroid::graphic(&[("a", "b"), ("b", "c"), ("c", "a"), ("c", "d")]).unwrap(),
            Matroid::graphic(&[("a", "b"), ("b", "a"), ("c", "c"), ("b", "d")]).unwrap(),
        ];
        for m in graphs {
            let direct = spectrum_poly_direct(&m);
            assert!(direct.is_integral());
            assert_eq!(spectrum_poly_krs(&m), direct.poly);
            assert_eq!(spectrum_poly_recursive(&m), direct.poly);
        }
    }

    #[test]
    fn pair_matches_relative_laplacian() {
        let m = Matroid::graphic(&[("a", "b"), ("b", "c"), ("c", "a")]).unwrap();
        let cx = m.independence_complex();
        for e in 0..m.len() {
            let pair = cx.delete(e).unwrap().relative_to(&cx.contract(e).unwrap()).unwrap();
            assert_eq!(spectrum_poly(&pair).poly, m.pair_spectrum_poly(e).unwrap());
        }
    }
}
