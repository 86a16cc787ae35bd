//! Seeded random values for property checks.
//!
//! Witness pools are kept small so that generated values share occurrences
//! often enough for unions, intersections and differences to be interesting.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::value::{MAtomLabel, Occurrence, QSet, Species, Witness};

/// Bounds for [`random_qset`].
#[derive(Debug, Clone)]
pub struct Shape {
    /// 1 means no nested members.
    pub max_depth: usize,
    pub max_qc: usize,
    pub species: Vec<Species>,
    pub atoms: Vec<MAtomLabel>,
    /// Witnesses are drawn from `0..witness_pool`.
    pub witness_pool: u32,
    /// Probability of a member being an m-atom occurrence.
    pub m_atom_rate: f64,
}

impl Default for Shape {
    fn default() -> Self {
        Shape {
            max_depth: 3,
            max_qc: 12,
            species: vec![Species::new("s"), Species::new("t")],
            atoms: ["a", "b", "c", "d"].into_iter().map(MAtomLabel::new).collect(),
            witness_pool: 8,
            m_atom_rate: 0.55,
        }
    }
}

impl Shape {
    /// Small values, cheap to enumerate weak singletons over.
    pub fn small() -> Self {
        Shape {
            max_depth: 2,
            max_qc: 3,
            witness_pool: 3,
            ..Shape::default()
        }
    }

    /// Sets only: no m-atoms anywhere.
    pub fn classical(max_card: usize) -> Self {
        Shape {
            max_depth: 2,
            max_qc: max_card,
            species: Vec::new(),
            m_atom_rate: 0.0,
            ..Shape::default()
        }
    }
}

pub fn random_qset<R: Rng + ?Sized>(rng: &mut R, shape: &Shape) -> QSet {
    let target = rng.random_range(0..=shape.max_qc);
    let mut members = Vec::with_capacity(target);
    for _ in 0..target {
        members.push(random_member(rng, shape));
    }
    QSet::from_occurrences(members)
}

fn random_member<R: Rng + ?Sized>(rng: &mut R, shape: &Shape) -> Occurrence {
    if !shape.species.is_empty() && rng.random_bool(shape.m_atom_rate) {
        let s = &shape.species[rng.random_range(0..shape.species.len())];
        return Occurrence::MOcc(s.clone(), Witness::new(rng.random_range(0..shape.witness_pool)));
    }
    if shape.max_depth > 1 && (shape.atoms.is_empty() || rng.random_bool(0.35)) {
        let inner = Shape {
            max_depth: shape.max_depth - 1,
            max_qc: shape.max_qc.min(3),
            ..shape.clone()
        };
        return Occurrence::Nested(random_qset(rng, &inner));
    }
    if shape.atoms.is_empty() {
        return Occurrence::Nested(QSet::empty());
    }
    Occurrence::MAtom(shape.atoms[rng.random_range(0..shape.atoms.len())].clone())
}

/// A sub-qset of `x`: every member kept with probability one half.
pub fn random_sub_qset<R: Rng + ?Sized>(rng: &mut R, x: &QSet) -> QSet {
    QSet::from_occurrences(
        x.occurrences()
            .iter()
            .filter(|_| rng.random_bool(0.5))
            .cloned(),
    )
}

/// A random bijection on the witnesses used inside `values`, per species.
///
/// The permutation maps the set of used witnesses onto itself, so relabeled
/// values stay inside any universe that covered the originals.
pub fn random_relabeling<R: Rng + ?Sized>(rng: &mut R, values: &[&QSet]) -> Relabeling {
    let mut used: BTreeMap<Species, Vec<Witness>> = BTreeMap::new();
    for q in values {
        collect_witnesses(q, &mut used);
    }
    let mut map = BTreeMap::new();
    for (s, mut ws) in used {
        ws.sort();
        ws.dedup();
        let mut image = ws.clone();
        image.shuffle(rng);
        for (w, v) in ws.into_iter().zip(image) {
            map.insert((s.clone(), w), v);
        }
    }
    Relabeling { map }
}

fn collect_witnesses(q: &QSet, out: &mut BTreeMap<Species, Vec<Witness>>) {
    for e in q.occurrences() {
        match e {
            Occurrence::MOcc(s, w) => out.entry(s.clone()).or_default().push(*w),
            Occurrence::Nested(inner) => collect_witnesses(inner, out),
            Occurrence::MAtom(_) => {}
        }
    }
}

/// A witness bijection produced by [`random_relabeling`].
#[derive(Debug, Clone, Default)]
pub struct Relabeling {
    map: BTreeMap<(Species, Witness), Witness>,
}

impl Relabeling {
    pub fn witness(&self, s: &Species, w: Witness) -> Witness {
        self.map.get(&(s.clone(), w)).copied().unwrap_or(w)
    }

    pub fn qset(&self, q: &QSet) -> QSet {
        q.map_witnesses(&|s, w| self.witness(s, w))
    }

    pub fn occurrence(&self, x: &Occurrence) -> Occurrence {
        x.map_witnesses(&|s, w| self.witness(s, w))
    }
}
