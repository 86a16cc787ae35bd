//! Occupancy-vector combinatorics: distributing `N` particles among `n`
//! labeled boxes under Maxwell-Boltzmann, Bose-Einstein and Fermi-Dirac
//! counting.
//!
//! MB counts every possibility: an occupancy vector `(n_1, …, n_n)` stands
//! for `N! / Π n_i!` of them, and the weights add up to `n^N`. BE keeps only
//! the observably different possibilities, one per occupancy vector. FD
//! additionally caps each box at one particle.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde_json::{json, Value as Json};

use crate::combinatorics::{multinomial, pow, weak_compositions};
use crate::error::StatError;
use crate::value::{Occurrence, QSet};

/// Upper bound on the number of occupancy vectors or tuples enumerated.
pub const ENUMERATION_LIMIT: usize = 2_000_000;

/// Particles per box.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OccupancyVector(Vec<usize>);

impl OccupancyVector {
    /// Panics on an empty vector: there is always at least one box.
    pub fn new(counts: Vec<usize>) -> Self {
        assert!(!counts.is_empty(), "an occupancy vector needs at least one box");
        OccupancyVector(counts)
    }

    pub fn counts(&self) -> &[usize] {
        &self.0
    }

    pub fn boxes(&self) -> usize {
        self.0.len()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// No box holds more than one particle.
    pub fn is_exclusive(&self) -> bool {
        self.0.iter().all(|&c| c <= 1)
    }
}

impl fmt::Display for OccupancyVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Model {
    MaxwellBoltzmann,
    BoseEinstein,
    FermiDirac,
}

impl Model {
    pub fn tag(self) -> &'static str {
        match self {
            Model::MaxwellBoltzmann => "MB",
            Model::BoseEinstein => "BE",
            Model::FermiDirac => "FD",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Model::MaxwellBoltzmann => "Maxwell-Boltzmann",
            Model::BoseEinstein => "Bose-Einstein",
            Model::FermiDirac => "Fermi-Dirac",
        }
    }
}

impl std::str::FromStr for Model {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "mb" => Ok(Model::MaxwellBoltzmann),
            "be" => Ok(Model::BoseEinstein),
            "fd" => Ok(Model::FermiDirac),
            other => Err(format!("unknown model `{other}` (expected mb, be or fd)")),
        }
    }
}

/// Per-occupancy weights of one counting model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistributionReport {
    pub model: Model,
    pub boxes: usize,
    pub particles: usize,
    pub total: BigUint,
    /// Every weak composition of `particles`, lexicographic; FD gives the
    /// inadmissible ones weight zero.
    pub per_occupancy: Vec<(OccupancyVector, BigUint)>,
    /// Vectors of maximal positive weight, lexicographic.
    pub most_probable: Vec<OccupancyVector>,
}

impl DistributionReport {
    fn from_weights(
        model: Model,
        boxes: usize,
        particles: usize,
        per_occupancy: Vec<(OccupancyVector, BigUint)>,
    ) -> Self {
        let total = per_occupancy.iter().map(|(_, w)| w).sum();
        let most_probable = argmax(&per_occupancy);
        DistributionReport {
            model,
            boxes,
            particles,
            total,
            per_occupancy,
            most_probable,
        }
    }

    /// `weight / total` as a reduced fraction, `None` when the total is zero.
    pub fn probability(&self, weight: &BigUint) -> Option<(BigUint, BigUint)> {
        if self.total.is_zero() {
            return None;
        }
        let g = weight.gcd(&self.total);
        Some((weight / &g, &self.total / &g))
    }

    pub fn to_json(&self) -> Json {
        let occupancies: Vec<Json> = self
            .per_occupancy
            .iter()
            .map(|(v, w)| {
                let probability = match self.probability(w) {
                    Some((p, q)) => Json::String(format!("{p}/{q}")),
                    None => Json::Null,
                };
                json!({
                    "counts": v.counts(),
                    "weight": w.to_string(),
                    "probability": probability,
                })
            })
            .collect();
        json!({
            "model": self.model.tag(),
            "n": self.boxes,
            "N": self.particles,
            "total": self.total.to_string(),
            "occupancies": occupancies,
            "most_probable": self.most_probable.iter().map(|v| v.counts().to_vec()).collect::<Vec<_>>(),
        })
    }
}

fn argmax(weights: &[(OccupancyVector, BigUint)]) -> Vec<OccupancyVector> {
    let Some(best) = weights.iter().map(|(_, w)| w).max() else {
        return Vec::new();
    };
    if best.is_zero() {
        return Vec::new();
    }
    weights
        .iter()
        .filter(|(_, w)| w == best)
        .map(|(v, _)| v.clone())
        .collect()
}

/// `weight / total` rounded half-up to six decimals.
pub fn fixed6(weight: &BigUint, total: &BigUint) -> String {
    if total.is_zero() {
        return "-".to_string();
    }
    let scaled: BigUint = (weight * 2_000_000u32 + total) / (total * 2u32);
    let million = BigUint::from(1_000_000u32);
    let (whole, frac) = scaled.div_rem(&million);
    format!("{whole}.{:06}", frac.to_u32().unwrap_or(0))
}

fn check_limit(count: &BigUint) -> Result<(), StatError> {
    if *count > BigUint::from(ENUMERATION_LIMIT) {
        return Err(StatError::TooLarge {
            size: count.to_string(),
            limit: ENUMERATION_LIMIT,
        });
    }
    Ok(())
}

/// All weak compositions of `particles` into `boxes` parts, lexicographic.
pub fn enumerate_occupancies(boxes: usize, particles: usize) -> Result<Vec<OccupancyVector>, StatError> {
    if boxes == 0 {
        return Err(StatError::InvalidShape);
    }
    check_limit(&weak_compositions(boxes, particles))?;
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(boxes);
    compositions(boxes, particles, &mut current, &mut out);
    Ok(out)
}

fn compositions(boxes: usize, left: usize, current: &mut Vec<usize>, out: &mut Vec<OccupancyVector>) {
    if boxes == 1 {
        current.push(left);
        out.push(OccupancyVector(current.clone()));
        current.pop();
        return;
    }
    for first in 0..=left {
        current.push(first);
        compositions(boxes - 1, left - first, current, out);
        current.pop();
    }
}

/// `N! / Π n_i!`.
pub fn multinomial_weight(v: &OccupancyVector) -> BigUint {
    multinomial(v.counts())
}

pub fn mb_report(boxes: usize, particles: usize) -> Result<DistributionReport, StatError> {
    let weights: Vec<_> = enumerate_occupancies(boxes, particles)?
        .into_iter()
        .map(|v| {
            let w = multinomial_weight(&v);
            (v, w)
        })
        .collect();
    let report = DistributionReport::from_weights(Model::MaxwellBoltzmann, boxes, particles, weights);
    assert_eq!(
        report.total,
        pow(boxes, particles),
        "multinomial weights must add up to n^N"
    );
    Ok(report)
}

pub fn be_report(boxes: usize, particles: usize) -> Result<DistributionReport, StatError> {
    let weights = enumerate_occupancies(boxes, particles)?
        .into_iter()
        .map(|v| (v, BigUint::one()))
        .collect();
    Ok(DistributionReport::from_weights(
        Model::BoseEinstein,
        boxes,
        particles,
        weights,
    ))
}

pub fn fd_report(boxes: usize, particles: usize) -> Result<DistributionReport, StatError> {
    let weights = enumerate_occupancies(boxes, particles)?
        .into_iter()
        .map(|v| {
            let w = if v.is_exclusive() {
                BigUint::one()
            } else {
                BigUint::zero()
            };
            (v, w)
        })
        .collect();
    Ok(DistributionReport::from_weights(
        Model::FermiDirac,
        boxes,
        particles,
        weights,
    ))
}

pub fn report(model: Model, boxes: usize, particles: usize) -> Result<DistributionReport, StatError> {
    match model {
        Model::MaxwellBoltzmann => mb_report(boxes, particles),
        Model::BoseEinstein => be_report(boxes, particles),
        Model::FermiDirac => fd_report(boxes, particles),
    }
}

/// Exact argmax of the multinomial weight; ties are all returned.
pub fn most_probable(boxes: usize, particles: usize) -> Result<Vec<OccupancyVector>, StatError> {
    Ok(mb_report(boxes, particles)?.most_probable)
}

/// One ordered tuple of boxes `⟨y_1, …, y_n⟩` and how many raw tuples it
/// stands for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoxTuple {
    pub boxes: Vec<QSet>,
    pub multiplicity: BigUint,
}

impl BoxTuple {
    pub fn occupancy(&self) -> OccupancyVector {
        OccupancyVector(self.boxes.iter().map(QSet::quasi_cardinal).collect())
    }
}

/// Ways of distributing the members of a qset among labeled boxes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QsetDistribution {
    pub boxes: usize,
    pub particles: usize,
    pub tuples: Vec<BoxTuple>,
    /// Sum of the multiplicities: `boxes^qc(x)`.
    pub total: BigUint,
}

impl QsetDistribution {
    /// Aggregate the tuples by occupancy vector.
    pub fn occupancy_report(&self) -> DistributionReport {
        let mut acc: BTreeMap<OccupancyVector, BigUint> = BTreeMap::new();
        for t in &self.tuples {
            *acc.entry(t.occupancy()).or_default() += &t.multiplicity;
        }
        DistributionReport::from_weights(
            Model::MaxwellBoltzmann,
            self.boxes,
            self.particles,
            acc.into_iter().collect(),
        )
    }
}

/// Every ordered `n`-tuple of sub-qsets of `x` whose union is `x` and whose
/// quasi-cardinals add up to `qc(x)`, grouped by indistinguishability.
///
/// Each class of `c` members is spread over the boxes by an occupancy
/// vector `k`; the representative puts the first `k_1` members of the class
/// in box 1, the next `k_2` in box 2 and so on, and the class contributes
/// the factor `c! / Π k_i!`. Multiplicities add up to `n^qc(x)`. For a set
/// every class is a singleton and the tuples are the `n^card(x)` ordinary
/// distributions, each with multiplicity one.
pub fn distributions_of_qset(x: &QSet, boxes: usize) -> Result<QsetDistribution, StatError> {
    if boxes == 0 {
        return Err(StatError::InvalidShape);
    }
    let classes: Vec<&[Occurrence]> = x.classes().collect();
    let size = classes
        .iter()
        .fold(BigUint::one(), |acc, c| acc * weak_compositions(boxes, c.len()));
    check_limit(&size)?;

    let per_class: Vec<Vec<(OccupancyVector, BigUint)>> = classes
        .iter()
        .map(|c| {
            enumerate_occupancies(boxes, c.len()).map(|vs| {
                vs.into_iter()
                    .map(|v| {
                        let w = multinomial_weight(&v);
                        (v, w)
                    })
                    .collect()
            })
        })
        .collect::<Result<_, _>>()?;

    let mut tuples = Vec::new();
    let mut pick = vec![0usize; classes.len()];
    loop {
        let mut contents: Vec<Vec<Occurrence>> = vec![Vec::new(); boxes];
        let mut multiplicity = BigUint::one();
        for ((class, options), &i) in classes.iter().zip(&per_class).zip(&pick) {
            let (v, w) = &options[i];
            let mut start = 0;
            for (slot, &k) in contents.iter_mut().zip(v.counts()) {
                slot.extend_from_slice(&class[start..start + k]);
                start += k;
            }
            multiplicity *= w;
        }
        tuples.push(BoxTuple {
            boxes: contents.into_iter().map(QSet::from_occurrences).collect(),
            multiplicity,
        });

        // odometer, last class varies fastest
        let mut j = pick.len();
        loop {
            if j == 0 {
                let total = tuples.iter().map(|t| &t.multiplicity).sum();
                return Ok(QsetDistribution {
                    boxes,
                    particles: x.quasi_cardinal(),
                    tuples,
                    total,
                });
            }
            j -= 1;
            if pick[j] + 1 < per_class[j].len() {
                pick[j] += 1;
                break;
            }
            pick[j] = 0;
        }
    }
}
