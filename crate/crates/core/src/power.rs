//! Counting sub-qsets.
//!
//! A qset of pure m-atoms has only `qc + 1` observably different sub-qsets,
//! yet the power-qset axiom asks for `2^qc` of them. The weighted
//! enumeration reconciles the two: one representative per observable
//! sub-qset, carrying how many raw sub-qsets it stands for. Taking `k` of
//! the `c` members of a class contributes a factor `C(c, k)`, so the
//! multiplicities always add up to `2^qc`.

use num_bigint::BigUint;
use num_traits::One;

use crate::combinatorics::binomial;
use crate::error::{QSetError, Result};
use crate::value::{Occurrence, QSet};

/// One observable sub-qset and the number of raw sub-qsets it represents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerEntry {
    pub subset: QSet,
    pub multiplicity: BigUint,
}

/// Upper bound on the number of entries [`power_qset`] will produce.
pub const POWER_ENTRY_LIMIT: usize = 1 << 20;

/// Sub-qsets of `x` grouped by indistinguishability, in canonical order.
///
/// Each representative takes the first `k` members of every class. With
/// `only_qc = Some(b)` only the entries of quasi-cardinal `b` are returned.
pub fn power_qset(x: &QSet, only_qc: Option<usize>) -> Result<Vec<PowerEntry>> {
    let classes: Vec<&[Occurrence]> = x.classes().collect();
    let entries = classes
        .iter()
        .try_fold(1usize, |acc, c| acc.checked_mul(c.len() + 1))
        .filter(|&n| n <= POWER_ENTRY_LIMIT);
    if entries.is_none() {
        return Err(QSetError::ScopeTooLarge {
            what: "power qset entries",
            size: classes
                .iter()
                .fold(BigUint::one(), |acc, c| acc * (c.len() + 1))
                .to_string(),
            limit: POWER_ENTRY_LIMIT,
        });
    }

    // mixed-radix counter over the number taken from each class
    let mut taken = vec![0usize; classes.len()];
    let mut out = Vec::new();
    loop {
        let size: usize = taken.iter().sum();
        if only_qc.is_none_or(|b| b == size) {
            let mut members = Vec::with_capacity(size);
            let mut multiplicity = BigUint::one();
            for (class, &k) in classes.iter().zip(&taken) {
                members.extend_from_slice(&class[..k]);
                multiplicity *= binomial(class.len(), k);
            }
            out.push(PowerEntry {
                subset: QSet::from_occurrences(members),
                multiplicity,
            });
        }
        let mut i = 0;
        loop {
            if i == taken.len() {
                out.sort_by(|a, b| a.subset.cmp(&b.subset));
                return Ok(out);
            }
            if taken[i] < classes[i].len() {
                taken[i] += 1;
                break;
            }
            taken[i] = 0;
            i += 1;
        }
    }
}

/// Sum of the multiplicities of [`power_qset`], i.e. `2^qc(x)`.
pub fn power_total(x: &QSet) -> Result<BigUint> {
    Ok(power_qset(x, None)?
        .into_iter()
        .map(|e| e.multiplicity)
        .sum())
}
