use std::collections::{BTreeSet, HashMap};

use super::Matroid;
use crate::complex::Face;
use crate::error::{Error, Result};

/// The lattice of flats ordered by inclusion, with its Möbius function.
#[derive(Clone, Debug)]
pub struct FlatLattice {
    flats: Vec<Face>,
}

impl FlatLattice {
    /// Flats sorted by size, then bitmask, so every flat follows its subflats.
    pub fn flats(&self) -> &[Face] {
        &self.flats
    }

    pub fn bottom(&self) -> Face {
        self.flats[0]
    }

    pub fn top(&self) -> Face {
        *self.flats.last().unwrap()
    }

    pub fn contains(&self, f: Face) -> bool {
        self.flats.binary_search_by_key(&(f.len(), f), |g| (g.len(), *g)).is_ok()
    }

    /// `μ(W, V)` on the interval `[W, V]`; zero when `W ⊄ V`.
    pub fn mobius(&self, w: Face, v: Face) -> Result<i64> {
        if !self.contains(w) || !self.contains(v) {
            return Err(Error::Precondition("Möbius function needs flats".into()));
        }
        if !w.is_subset(v) {
            return Ok(0);
        }
        Ok(self.mobius_from(w)[&v])
    }

    /// `μ(W, ·)` on every flat above `W`, by the defining recursion.
    pub fn mobius_from(&self, w: Face) -> HashMap<Face, i64> {
        let mut mu = HashMap::new();
        for &u in self.flats.iter().filter(|u| w.is_subset(**u)) {
            let val = if u == w {
                1
            } else {
                -self.flats.iter().filter(|&&x| x != u && w.is_subset(x) && x.is_subset(u)).map(|x| mu[x]).sum::<i64>()
            };
            mu.insert(u, val);
        }
        mu
    }

    /// `μ(·, V)` on every flat below `V`.
    pub fn mobius_to(&self, v: Face) -> HashMap<Face, i64> {
        let mut mu = HashMap::new();
        for &u in self.flats.iter().rev().filter(|u| u.is_subset(v)) {
            let val = if u == v {
                1
            } else {
                -self.flats.iter().filter(|&&x| x != u && u.is_subset(x) && x.is_subset(v)).map(|x| mu[x]).sum::<i64>()
            };
            mu.insert(u, val);
        }
        mu
    }
}

impl Matroid {
    pub fn flat_lattice(&self) -> FlatLattice {
        let set: BTreeSet<(usize, Face)> =
            self.full_set().subsets().map(|a| self.closure(a)).map(|f| (f.len(), f)).collect();
        FlatLattice { flats: set.into_iter().map(|(_, f)| f).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_mobius_values() {
        let u12 = Matroid::uniform(1, 2).unwrap().flat_lattice();
        assert_eq!(u12.mobius(u12.bottom(), u12.top()).unwrap(), -1);
        assert_eq!(u12.mobius(u12.top(), u12.top()).unwrap(), 1);
        let u23 = Matroid::uniform(2, 3).unwrap().flat_lattice();
        assert_eq!(u23.flats().len(), 5);
        assert_eq!(u23.mobius(u23.bottom(), u23.top()).unwrap(), 2);
        assert!(u23.mobius(Face::from_vertices([0, 1]), u23.top()).is_err());
    }

    #[test]
    fn mobius_sums_vanish() {
        let m = Matroid::graphic(&[("a", "b"), ("b", "c"), ("c", "a"), ("c", "d")]).unwrap();
        let l = m.flat_lattice();
        for &w in l.flats() {
            let mu = l.mobius_from(w);
            let to = l.mobius_to(l.top());
            for &v in l.flats() {
                if w.is_subset(v) && w != v {
                    let s: i64 = l.flats().iter().filter(|u| w.is_subset(**u) && u.is_subset(v)).map(|u| mu[u]).sum();
                    assert_eq!(s, 0);
                }
            }
            assert_eq!(to[&w], mu[&l.top()]);
        }
    }
}
