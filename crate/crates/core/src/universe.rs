//! Operations scoped by a declared finite population.
//!
//! A weak singleton `[x]` holds *everything* indistinguishable from `x`.
//! In a finite model "everything" means: everything that can be built from
//! the declared population. A species with population `c` contributes the
//! occurrences with witnesses `0..c`; nested qsets are built hereditarily
//! from those.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use rand::Rng;

use crate::combinatorics::binomial;
use crate::error::{QSetError, Result};
use crate::ops::{intersection, power_set, union};
use crate::value::{MAtomLabel, Occurrence, QSet, Species, View, Witness};

/// Upper bound on the size of a weak singleton.
pub const MEMBER_LIMIT: usize = 1 << 16;

/// A declared finite population: occurrence counts per species plus a
/// roster of M-atom labels.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Universe {
    species: BTreeMap<Species, usize>,
    atoms: BTreeSet<MAtomLabel>,
}

impl Universe {
    pub fn new() -> Self {
        Self::default()
    }

    /// Declare a species. Populations must be at least 1.
    pub fn with_species(mut self, species: impl Into<Species>, population: usize) -> Self {
        assert!(population >= 1, "species populations must be positive");
        self.species.insert(species.into(), population);
        self
    }

    pub fn with_atom(mut self, label: impl Into<MAtomLabel>) -> Self {
        self.atoms.insert(label.into());
        self
    }

    /// The smallest universe containing every atom and occurrence of `values`.
    pub fn covering<'a>(values: impl IntoIterator<Item = &'a QSet>) -> Self {
        let mut u = Universe::new();
        for q in values {
            for (s, w) in q.particle_extent() {
                let slot = u.species.entry(s).or_insert(0);
                *slot = (*slot).max(w as usize + 1);
            }
            u.atoms.extend(q.atom_labels());
        }
        u
    }

    pub fn population(&self, species: &Species) -> Option<usize> {
        self.species.get(species).copied()
    }

    pub fn species(&self) -> impl Iterator<Item = (&Species, usize)> {
        self.species.iter().map(|(s, &c)| (s, c))
    }

    pub fn atoms(&self) -> impl Iterator<Item = &MAtomLabel> {
        self.atoms.iter()
    }

    /// Number of objects over this universe indistinguishable from `view`.
    pub fn count_like(&self, view: &View) -> Result<BigUint> {
        match view {
            View::MAtom(l) => {
                self.check_atom(l)?;
                Ok(BigUint::from(1u32))
            }
            View::MOcc(s) => Ok(BigUint::from(self.check_species(s)?)),
            View::Nested(members) => {
                let mut acc = BigUint::from(1u32);
                for class in members.chunk_by(|a, b| a == b) {
                    let pool = self.count_like(&class[0])?;
                    let pool = usize::try_from(&pool).unwrap_or(usize::MAX);
                    acc *= binomial(pool, class.len());
                }
                Ok(acc)
            }
        }
    }

    /// Every object over this universe indistinguishable from `view`, in
    /// canonical order.
    pub fn members_like(&self, view: &View) -> Result<Vec<Occurrence>> {
        let count = self.count_like(view)?;
        if count > BigUint::from(MEMBER_LIMIT) {
            return Err(QSetError::ScopeTooLarge {
                what: "weak singleton",
                size: count.to_string(),
                limit: MEMBER_LIMIT,
            });
        }
        Ok(self.members_unchecked(view))
    }

    fn members_unchecked(&self, view: &View) -> Vec<Occurrence> {
        match view {
            View::MAtom(l) => vec![Occurrence::MAtom(l.clone())],
            View::MOcc(s) => {
                let c = self.species[s] as u32;
                (0..c).map(|w| Occurrence::MOcc(s.clone(), Witness::new(w))).collect()
            }
            View::Nested(members) => {
                // choose, for each class, a k-subset of its candidates
                let mut partial: Vec<Vec<Occurrence>> = vec![Vec::new()];
                for class in members.chunk_by(|a, b| a == b) {
                    let pool = self.members_unchecked(&class[0]);
                    let picks = combinations(&pool, class.len());
                    partial = partial
                        .iter()
                        .flat_map(|prefix| {
                            picks.iter().map(move |pick| {
                                let mut next = prefix.clone();
                                next.extend(pick.iter().cloned());
                                next
                            })
                        })
                        .collect();
                }
                let mut out: Vec<Occurrence> = partial
                    .into_iter()
                    .map(|elems| Occurrence::Nested(QSet::from_occurrences(elems)))
                    .collect();
                out.sort();
                out
            }
        }
    }

    fn check_species(&self, s: &Species) -> Result<usize> {
        self.population(s)
            .ok_or_else(|| QSetError::UnknownSpecies(s.clone()))
    }

    fn check_atom(&self, l: &MAtomLabel) -> Result<()> {
        if self.atoms.contains(l) {
            Ok(())
        } else {
            Err(QSetError::UnknownAtom(l.clone()))
        }
    }

    /// Check that `x` is built from declared atoms and lies inside the
    /// declared populations.
    pub fn check_object(&self, x: &Occurrence) -> Result<()> {
        match x {
            Occurrence::MAtom(l) => self.check_atom(l),
            Occurrence::MOcc(s, w) => {
                let population = self.check_species(s)?;
                if (w.tag() as usize) < population {
                    Ok(())
                } else {
                    Err(QSetError::OutsideUniverse {
                        species: s.clone(),
                        population,
                    })
                }
            }
            Occurrence::Nested(q) => q.occurrences().iter().try_for_each(|e| self.check_object(e)),
        }
    }

    /// The weak singleton `[x]`: everything in scope indistinguishable from `x`.
    pub fn weak_singleton(&self, x: &Occurrence) -> Result<QSet> {
        self.check_object(x)?;
        Ok(QSet::from_sorted(self.members_like(&x.view())?))
    }

    /// The weak pair `[x, y] = [x] ∪ [y]`.
    pub fn weak_pair(&self, x: &Occurrence, y: &Occurrence) -> Result<QSet> {
        Ok(union(&self.weak_singleton(x)?, &self.weak_singleton(y)?))
    }

    /// The generalized ordered pair `⟨x, y⟩ = [[x], [x, y]]`.
    ///
    /// When `x` and `y` are indistinguishable both components coincide and
    /// `⟨x, y⟩` is extensionally identical to `⟨y, x⟩`.
    pub fn ordered_pair(&self, x: &Occurrence, y: &Occurrence) -> Result<QSet> {
        let first = self.weak_singleton(x)?;
        let both = self.weak_pair(x, y)?;
        Ok(QSet::from_occurrences([
            Occurrence::Nested(first),
            Occurrence::Nested(both),
        ]))
    }

    /// A strong singleton of anything looking like `x`: a sub-qset of the
    /// weak singleton with exactly one member, drawn with `rng`.
    pub fn strong_singleton<R>(&self, x: &View, rng: &mut R) -> Result<QSet>
    where
        R: Rng + ?Sized,
    {
        let pool = self.members_like(x)?;
        let pick = pool[rng.random_range(0..pool.len())].clone();
        Ok(QSet::from_occurrences([pick]))
    }

    /// `S_u`: the sub-qsets of `[u]` that contain `u`.
    pub fn star_family(&self, u: &Occurrence) -> Result<QSet> {
        let all = power_set(&self.weak_singleton(u)?)?;
        Ok(QSet::from_sorted(
            all.occurrences()
                .iter()
                .filter(|s| s.as_qset().is_some_and(|s| s.contains(u)))
                .cloned()
                .collect(),
        ))
    }

    /// `u* = ⋂ S_u`, the least sub-qset of `[u]` containing `u`.
    pub fn star(&self, u: &Occurrence) -> Result<QSet> {
        let family = self.star_family(u)?;
        let mut members = family.occurrences().iter().filter_map(Occurrence::as_qset);
        let first = members
            .next()
            .cloned()
            .expect("[u] itself belongs to S_u");
        Ok(members.fold(first, |acc, s| intersection(&acc, s)))
    }

    /// A choice qset for a family of pairwise disjoint nonempty qsets:
    /// one representative of every indistinguishability class of every
    /// member.
    pub fn choice_qset(&self, family: &QSet) -> Result<QSet> {
        let members = family_members(family)?;
        for (i, y) in members.iter().enumerate() {
            if y.is_empty() {
                return Err(QSetError::EmptyMember);
            }
            for z in &members[i + 1..] {
                if !intersection(y, z).is_empty() {
                    return Err(QSetError::NotDisjoint);
                }
            }
        }
        let mut chosen = Vec::new();
        for y in &members {
            for class in y.classes() {
                self.check_object(&class[0])?;
                chosen.push(class[0].clone());
            }
        }
        Ok(QSet::from_occurrences(chosen))
    }

    /// Evaluate the choice condition directly: for every member `y` and
    /// every `v ∈ y` there is a `w ⊆ [v]` with `qc(w) = 1` and
    /// `w ∩ y ≡ w ∩ u`.
    pub fn satisfies_choice(&self, family: &QSet, u: &QSet) -> Result<bool> {
        for y in family_members(family)? {
            for v in y.occurrences() {
                let witnessed = self.members_like(&v.view())?.into_iter().any(|t| {
                    let w = QSet::from_occurrences([t]);
                    intersection(&w, &y).view() == intersection(&w, u).view()
                });
                if !witnessed {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

fn family_members(family: &QSet) -> Result<Vec<QSet>> {
    family
        .occurrences()
        .iter()
        .map(|e| e.as_qset().cloned().ok_or(QSetError::NotAFamily))
        .collect()
}

/// All `k`-subsets of `pool`, preserving order.
fn combinations(pool: &[Occurrence], k: usize) -> Vec<Vec<Occurrence>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if pool.len() < k {
        return Vec::new();
    }
    let mut out = Vec::new();
    for (i, head) in pool.iter().enumerate() {
        for mut rest in combinations(&pool[i + 1..], k - 1) {
            rest.insert(0, head.clone());
            out.push(rest);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ops::{extensional_eq, indistinguishable_qsets, ExtEq};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn universe() -> Universe {
        Universe::new()
            .with_species("s", 3)
            .with_species("t", 2)
            .with_atom("a")
            .with_atom("b")
    }

    #[test]
    fn weak_singleton_of_m_atom_is_the_population() {
        let u = universe();
        let ws = u.weak_singleton(&Occurrence::mocc("s", 0)).unwrap();
        assert_eq!(ws.quasi_cardinal(), 3);
        assert!(ws.contains(&Occurrence::mocc("s", 0)));
    }

    #[test]
    fn weak_singleton_of_dinge_is_a_singleton() {
        let u = universe();
        let ws = u.weak_singleton(&Occurrence::matom("a")).unwrap();
        assert_eq!(ws, QSet::of_atoms(["a"]));
        let set = Occurrence::Nested(QSet::of_atoms(["a", "b"]));
        assert_eq!(u.weak_singleton(&set).unwrap().quasi_cardinal(), 1);
    }

    #[test]
    fn weak_singleton_of_a_qset_counts_combinations() {
        let u = universe();
        let x = Occurrence::Nested(QSet::pure("s", 2));
        let ws = u.weak_singleton(&x).unwrap();
        assert_eq!(ws.quasi_cardinal(), 3);
        assert!(ws.contains(&x));
        for m in ws.occurrences() {
            assert_eq!(m.view(), x.view());
        }
    }

    #[test]
    fn scope_errors() {
        let u = universe();
        assert_eq!(
            u.weak_singleton(&Occurrence::mocc("q", 0)),
            Err(QSetError::UnknownSpecies("q".into()))
        );
        assert_eq!(
            u.weak_singleton(&Occurrence::matom("z")),
            Err(QSetError::UnknownAtom("z".into()))
        );
        assert!(matches!(
            u.weak_singleton(&Occurrence::mocc("s", 3)),
            Err(QSetError::OutsideUniverse { population: 3, .. })
        ));
    }

    #[test]
    fn pairs_of_atoms() {
        let u = universe();
        let p = u
            .ordered_pair(&Occurrence::matom("a"), &Occurrence::matom("b"))
            .unwrap();
        let expected = crate::ops::kuratowski_pair(&Occurrence::matom("a"), &Occurrence::matom("b"));
        assert_eq!(p, expected);
    }

    #[test]
    fn pairs_collapse_for_indistinguishable_arguments() {
        let u = universe();
        let x = Occurrence::mocc("s", 0);
        let y = Occurrence::mocc("s", 2);
        let xy = Occurrence::Nested(u.ordered_pair(&x, &y).unwrap());
        let yx = Occurrence::Nested(u.ordered_pair(&y, &x).unwrap());
        assert_eq!(extensional_eq(&xy, &yx), ExtEq::True);
        assert_eq!(xy.as_qset().unwrap().quasi_cardinal(), 1);
    }

    #[test]
    fn pairs_keep_order_for_distinguishable_arguments() {
        let u = universe();
        let x = Occurrence::mocc("s", 0);
        let y = Occurrence::mocc("t", 0);
        let xy = u.ordered_pair(&x, &y).unwrap();
        let yx = u.ordered_pair(&y, &x).unwrap();
        assert!(!indistinguishable_qsets(&xy, &yx));
    }

    #[test]
    fn strong_singletons() {
        let u = universe();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let view = View::MOcc("s".into());
        let a = u.strong_singleton(&view, &mut rng).unwrap();
        assert_eq!(a.quasi_cardinal(), 1);
        let mut distinct = false;
        for _ in 0..20 {
            let b = u.strong_singleton(&view, &mut rng).unwrap();
            assert!(indistinguishable_qsets(&a, &b));
            distinct |= a != b;
        }
        assert!(distinct);
    }

    #[test]
    fn star_is_the_singleton_of_u() {
        let u = universe();
        let x = Occurrence::mocc("s", 1);
        let family = u.star_family(&x).unwrap();
        // subsets of a 3-element [u] containing a fixed member
        assert_eq!(family.quasi_cardinal(), 4);
        let star = u.star(&x).unwrap();
        assert_eq!(star, QSet::from_occurrences([x.clone()]));
        assert!(star.is_subset(&u.weak_singleton(&x).unwrap()));
        for s in family.occurrences() {
            assert!(star.is_subset(s.as_qset().unwrap()));
        }
    }

    #[test]
    fn choice_examples() {
        let u = universe();
        let family = QSet::from_occurrences([
            Occurrence::Nested(QSet::pure("s", 2)),
            Occurrence::Nested(QSet::pure("t", 2)),
        ]);
        let c = u.choice_qset(&family).unwrap();
        assert_eq!(c.quasi_cardinal(), 2);
        assert!(u.satisfies_choice(&family, &c).unwrap());

        let singletons = QSet::from_occurrences([
            Occurrence::Nested(QSet::of_atoms(["a"])),
            Occurrence::Nested(QSet::of_atoms(["b"])),
        ]);
        assert_eq!(u.choice_qset(&singletons).unwrap(), QSet::of_atoms(["a", "b"]));

        let with_empty = QSet::from_occurrences([Occurrence::Nested(QSet::empty())]);
        assert_eq!(u.choice_qset(&with_empty), Err(QSetError::EmptyMember));

        let overlapping = QSet::from_occurrences([
            Occurrence::Nested(QSet::pure("s", 2)),
            Occurrence::Nested(QSet::pure("s", 1)),
        ]);
        assert_eq!(u.choice_qset(&overlapping), Err(QSetError::NotDisjoint));
        assert_eq!(u.choice_qset(&QSet::pure("s", 1)), Err(QSetError::NotAFamily));
    }

    #[test]
    fn covering_universe() {
        let x = crate::ops::union(&QSet::pure("s", 4), &QSet::of_atoms(["a"]));
        let u = Universe::covering([&x]);
        assert_eq!(u.population(&"s".into()), Some(4));
        assert_eq!(u.atoms().count(), 1);
    }
}
