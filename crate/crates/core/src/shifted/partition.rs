use std::fmt;

/// A weakly decreasing sequence of non-negative integers. Zero parts are kept,
/// since spectra carry them; comparisons "modulo zeros" go through [`Partition::nonzero`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Sorts the parts into decreasing order.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn nonzero(&self) -> Partition {
        Partition(self.0.iter().copied().filter(|&p| p > 0).collect())
    }

    /// Equality after dropping zero parts.
    pub fn eq_mod_zeros(&self, other: &Partition) -> bool {
        self.nonzero() == other.nonzero()
    }

    /// `p^T_j = |{i : p_i ≥ j}|`; zero parts vanish.
    pub fn conjugate(&self) -> Partition {
        let top = self.0.first().copied().unwrap_or(0);
        Partition((1..=top).map(|j| self.0.iter().take_while(|&&p| p >= j).count()).collect())
    }

    /// Multiset union.
    pub fn union(&self, other: &Partition) -> Partition {
        Partition::new(self.0.iter().chain(&other.0).copied().collect())
    }

    /// Partwise sum, padding the shorter one with zeros.
    pub fn add(&self, other: &Partition) -> Partition {
        let n = self.len().max(other.len());
        let at = |p: &Partition, i: usize| p.0.get(i).copied().unwrap_or(0);
        Partition::new((0..n).map(|i| at(self, i) + at(other, i)).collect())
    }

    /// `1^m = (1, ..., 1)`.
    pub fn ones(m: usize) -> Partition {
        Partition(vec![1; m])
    }

    pub fn prefix_sums(&self) -> Vec<usize> {
        self.0
            .iter()
            .scan(0, |acc, &p| {
                *acc += p;
                Some(*acc)
            })
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `a ⊴ b`: every prefix sum of `a` is at most the matching prefix sum of `b`,
/// both padded with zeros. Totals are not required to agree.
pub fn majorizes(a: &Partition, b: &Partition) -> bool {
    let (pa, pb) = (a.prefix_sums(), b.prefix_sums());
    let at = |p: &[usize], k: usize| if p.is_empty() { 0 } else { p[k.min(p.len() - 1)] };
    (0..pa.len().max(pb.len())).all(|k| at(&pa, k) <= at(&pb, k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn worked_values() {
        assert_eq!(p(&[3, 2, 2, 1]).conjugate(), p(&[4, 3, 1]));
        assert!(majorizes(&p(&[2, 1, 1]), &p(&[3, 1])));
        assert!(!majorizes(&p(&[3, 1]), &p(&[2, 2])));
        assert_eq!(p(&[4, 1, 1]).to_string(), "(4,1,1)");
        assert_eq!(Partition::default().conjugate(), Partition::default());
        assert_eq!(Partition::ones(2).add(&p(&[3])), p(&[4, 1]));
    }

    proptest! {
        #[test]
        fn conjugation_is_an_involution(v in proptest::collection::vec(0usize..8, 0..8)) {
            let a = p(&v);
            prop_assert_eq!(a.conjugate().conjugate(), a.nonzero());
            prop_assert_eq!(a.conjugate().total(), a.total());
        }

        #[test]
        fn majorization_reverses_under_conjugation(
            v in proptest::collection::vec(0usize..6, 0..6),
            w in proptest::collection::vec(0usize..6, 0..6),
        ) {
            let (a, b) = (p(&v), p(&w));
            if a.total() == b.total() {
                prop_assert_eq!(majorizes(&a, &b), majorizes(&b.conjugate(), &a.conjugate()));
            }
        }
    }
}
