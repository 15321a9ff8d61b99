use super::Matroid;
use crate::complex::{Face, Vertex};
use crate::error::{Error, Result};

/// `B = B1 ⊔ B2`: `B1` has internal activity 0 in its closure, and the
/// removed elements form `B2`, listed in removal order in `trace`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KrsDecomposition {
    pub b1: Face,
    pub b2: Face,
    pub trace: Vec<Vertex>,
}

impl Matroid {
    /// Whether `b` is the least element of its fundamental bond `bo(b, I)`
    /// inside the flat `cl(I)`.
    pub fn internal_active(&self, i: Face, b: Vertex) -> Result<bool> {
        let bond = self.fundamental_bond(b, i)?;
        Ok(bond.vertices().next() == Some(b))
    }

    /// Repeatedly removes the least internally active element of `B1`,
    /// recomputing activity inside `cl(B1)` after every removal.
    pub fn krs_decompose(&self, i: Face) -> Result<KrsDecomposition> {
        if !self.is_independent(i) {
            return Err(Error::Precondition(format!("{} is not independent", self.label(i))));
        }
        let mut b1 = i;
        let mut trace = vec![];
        while let Some(b) = b1.vertices().find(|&b| self.internal_active(b1, b).unwrap()) {
            b1 = b1.without(b);
            trace.push(b);
        }
        Ok(KrsDecomposition { b1, b2: i.minus(b1), trace })
    }

    /// `π̄(I) = cl(π(I))`, with `π(I)` the `B1` part of `I` as a base of `cl(I)`.
    pub fn pi_bar(&self, i: Face) -> Result<Face> {
        Ok(self.closure(self.krs_decompose(i)?.b1))
    }
}

/// Coefficient list (index = exponent) from a multiset of exponents with weights.
fn tally(items: impl Iterator<Item = (usize, i64)>, len: usize) -> Vec<i64> {
    let mut out = vec![0; len + 1];
    for (k, w) in items {
        out[k] += w;
    }
    out
}

/// Both sides of `Σ_{B} x^{|π̄(B)|} = Σ_{V flat} |χ̃(V)| |μ(V, E)| x^{|V|}`.
pub fn krs_step_identity(m: &Matroid) -> (Vec<i64>, Vec<i64>) {
    let lhs = tally(m.bases().iter().map(|&b| (m.pi_bar(b).unwrap().len(), 1)), m.len());
    (lhs, flat_side(m, None))
}

/// Both sides of the `e`-restricted identity, summing only over `π̄(B) ∋ e` and `V ∋ e`.
pub fn e_step_polynomial(m: &Matroid, e: Vertex) -> (Vec<i64>, Vec<i64>) {
    let lhs =
        tally(m.bases().iter().map(|&b| m.pi_bar(b).unwrap()).filter(|p| p.contains(e)).map(|p| (p.len(), 1)), m.len());
    (lhs, flat_side(m, Some(e)))
}

fn flat_side(m: &Matroid, e: Option<Vertex>) -> Vec<i64> {
    let lattice = m.flat_lattice();
    let mu = lattice.mobius_to(lattice.top());
    tally(
        lattice
            .flats()
            .iter()
            .filter(|v| e.is_none_or(|e| v.contains(e)))
            .map(|&v| (v.len(), m.restrict(v).reduced_euler_char().abs() * mu[&v].abs())),
        m.len(),
    )
}
