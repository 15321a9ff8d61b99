use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{DegreeSequence, FamilyPair, Partition};
use crate::linalg::{isolate_real_roots, SpectrumMultiset};

/// Isolation precisions tried in turn; only the last may end in `Undecided`.
const PRECISION_STEPS: [u32; 3] = [10, 28, 64];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GmVerdict {
    Holds,
    /// Some prefix sum of `s` provably exceeds the matching prefix sum of `d^T`.
    Violated {
        k: usize,
        lower: BigRational,
        bound: usize,
    },
    /// Isolation intervals could not separate a prefix sum from its bound.
    Undecided {
        k: usize,
        note: String,
    },
}

impl fmt::Display for GmVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GmVerdict::Holds => write!(f, "HOLDS"),
            GmVerdict::Violated { k, lower, bound } => {
                write!(f, "VIOLATED k={k}: s-prefix >= {lower} > {bound} = dT-prefix")
            }
            GmVerdict::Undecided { k, note } => write!(f, "UNDECIDED k={k}: {note}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct GmReport {
    pub spectrum: SpectrumMultiset,
    pub degrees: DegreeSequence,
    pub dt: Partition,
    pub verdict: GmVerdict,
}

impl fmt::Display for GmReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s={} dT={} {}", self.spectrum, self.dt, self.verdict)
    }
}

/// One eigenvalue: exact when `factor` is `None`, else inside `[lo, hi]` as a
/// root of the given square-free factor of the residual.
#[derive(Clone, Debug)]
struct Eigen {
    lo: BigRational,
    hi: BigRational,
    factor: Option<usize>,
}

/// Checks `s(K, K') ⊴ d(K, K')^T` exactly. Integer eigenvalues are exact; the
/// rest are isolated, refining down to width `2^-64` while a prefix is in
/// doubt, and a prefix that swallows a whole square-free factor uses that
/// factor's exact root sum.
pub fn grone_merris_scan(p: &FamilyPair) -> GmReport {
    let spectrum = p.spectrum();
    let degrees = p.degree_sequence();
    let dt = degrees.partition.conjugate();
    let verdict = scan(&spectrum, &dt);
    GmReport { spectrum, degrees, dt, verdict }
}

fn scan(spectrum: &SpectrumMultiset, dt: &Partition) -> GmVerdict {
    let mut verdict = GmVerdict::Holds;
    for bits in PRECISION_STEPS {
        verdict = scan_at(spectrum, dt, bits);
        if !matches!(verdict, GmVerdict::Undecided { .. }) || spectrum.residual.is_constant() {
            break;
        }
    }
    verdict
}

fn scan_at(spectrum: &SpectrumMultiset, dt: &Partition, bits: u32) -> GmVerdict {
    let mut eigs = vec![];
    for (&l, &m) in &spectrum.roots {
        let x = BigRational::from_integer(BigInt::from(l));
        eigs.extend(std::iter::repeat_n(Eigen { lo: x.clone(), hi: x, factor: None }, m));
    }
    let mut factor_sizes = HashMap::new();
    let mut factor_sums = HashMap::new();
    if !spectrum.residual.is_constant() {
        let roots = isolate_real_roots(&spectrum.residual, bits);
        for (idx, info) in roots.factors.iter().enumerate() {
            if !info.all_real {
                return GmVerdict::Undecided { k: 0, note: "characteristic polynomial has non-real roots".into() };
            }
            factor_sizes.insert(idx, info.degree * info.multiplicity);
            factor_sums.insert(idx, &info.root_sum * BigRational::from_integer(info.multiplicity.into()));
        }
        for r in roots.roots {
            let e = Eigen { lo: r.lo, hi: r.hi, factor: Some(r.factor) };
            eigs.extend(std::iter::repeat_n(e, r.multiplicity));
        }
    }
    eigs.sort_by(|a, b| b.hi.cmp(&a.hi).then(b.lo.cmp(&a.lo)));
    for (i, w) in eigs.windows(2).enumerate() {
        let same = w[0].lo == w[1].lo && w[0].hi == w[1].hi;
        if !same && w[1].hi > w[0].lo {
            return GmVerdict::Undecided { k: i + 1, note: "eigenvalue intervals overlap".into() };
        }
    }
    let bounds = dt.prefix_sums();
    let total_d = bounds.last().copied().unwrap_or(0);
    for k in 1..=eigs.len().max(bounds.len()) {
        let bound = bounds.get(k - 1).copied().unwrap_or(total_d);
        let prefix = &eigs[..k.min(eigs.len())];
        let mut counts: HashMap<usize, usize> = HashMap::new();
        for e in prefix {
            if let Some(f) = e.factor {
                *counts.entry(f).or_default() += 1;
            }
        }
        let (mut lo, mut hi) = (BigRational::zero(), BigRational::zero());
        for e in prefix {
            match e.factor {
                Some(f) if counts[&f] == factor_sizes[&f] => {}
                _ => {
                    lo += &e.lo;
                    hi += &e.hi;
                }
            }
        }
        for (f, &c) in &counts {
            if c == factor_sizes[f] {
                lo += &factor_sums[f];
                hi += &factor_sums[f];
            }
        }
        let b = BigRational::from_integer(bound.into());
        if hi <= b {
            continue;
        }
        if lo > b {
            return GmVerdict::Violated { k, lower: lo, bound };
        }
        return GmVerdict::Undecided { k, note: format!("s-prefix in [{lo}, {hi}] straddles {bound}") };
    }
    GmVerdict::Holds
}
