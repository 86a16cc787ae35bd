//! Canonical representation of finite quasi-sets.
//!
//! Values live on two layers. The *raw* layer tags every m-atom occurrence
//! with a [`Witness`], so two indistinguishable occurrences can still be two
//! different members of a collection. The *observable* layer is the
//! witness-free [`View`]: indistinguishability is equality of views, and
//! every predicate handed to the kernel only ever sees views.
//!
//! Raw equality (`==` on [`QSet`]) is extensional identity: two qsets are
//! equal when they have the same members, witnesses included.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

/// An indistinguishability kind of m-atoms.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Species(Arc<str>);

impl Species {
    pub fn new(name: impl AsRef<str>) -> Self {
        Species(Arc::from(name.as_ref()))
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Species {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Species {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Species({})", self.0)
    }
}

impl From<&str> for Species {
    fn from(name: &str) -> Self {
        Species::new(name)
    }
}

/// The label of an M-atom. Label equality is identity.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MAtomLabel(Arc<str>);

impl MAtomLabel {
    pub fn new(name: impl AsRef<str>) -> Self {
        MAtomLabel(Arc::from(name.as_ref()))
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for MAtomLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for MAtomLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MAtom({:?})", &*self.0)
    }
}

impl From<&str> for MAtomLabel {
    fn from(name: &str) -> Self {
        MAtomLabel::new(name)
    }
}

/// Hidden tag separating indistinguishable m-atom occurrences.
///
/// Witnesses only exist on the raw layer. No observable result depends on
/// their values, only on whether two of them coincide.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Witness(u32);

impl Witness {
    pub const fn new(tag: u32) -> Self {
        Witness(tag)
    }

    pub const fn tag(self) -> u32 {
        self.0
    }
}

/// One member of a quasi-set: an M-atom, an m-atom occurrence, or a
/// nested quasi-set. Also used wherever an operation accepts "any object".
///
/// The derived order compares the observable part first (M-atoms by label,
/// then m-atoms by species, then nested qsets by view) and falls back to
/// witnesses only to break ties between indistinguishable occurrences.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Occurrence {
    MAtom(MAtomLabel),
    MOcc(Species, Witness),
    Nested(QSet),
}

impl Occurrence {
    pub fn matom(label: impl AsRef<str>) -> Self {
        Occurrence::MAtom(MAtomLabel::new(label))
    }

    pub fn mocc(species: impl Into<Species>, witness: u32) -> Self {
        Occurrence::MOcc(species.into(), Witness::new(witness))
    }

    /// The observable, witness-free form of this object.
    pub fn view(&self) -> View {
        match self {
            Occurrence::MAtom(l) => View::MAtom(l.clone()),
            Occurrence::MOcc(s, _) => View::MOcc(s.clone()),
            Occurrence::Nested(q) => View::Nested(q.view().to_vec()),
        }
    }

    pub fn as_qset(&self) -> Option<&QSet> {
        match self {
            Occurrence::Nested(q) => Some(q),
            _ => None,
        }
    }

    pub fn is_m_atom(&self) -> bool {
        matches!(self, Occurrence::MOcc(..))
    }

    pub fn is_big_m_atom(&self) -> bool {
        matches!(self, Occurrence::MAtom(_))
    }

    /// Compare the observable parts only.
    pub fn cmp_view(&self, other: &Occurrence) -> Ordering {
        match (self, other) {
            (Occurrence::MAtom(a), Occurrence::MAtom(b)) => a.cmp(b),
            (Occurrence::MOcc(a, _), Occurrence::MOcc(b, _)) => a.cmp(b),
            (Occurrence::Nested(a), Occurrence::Nested(b)) => a.view().cmp(b.view()),
            _ => self.rank().cmp(&other.rank()),
        }
    }

    fn rank(&self) -> u8 {
        match self {
            Occurrence::MAtom(_) => 0,
            Occurrence::MOcc(..) => 1,
            Occurrence::Nested(_) => 2,
        }
    }

    /// Rebuild this object with every witness passed through `f`.
    pub fn map_witnesses<F>(&self, f: &F) -> Occurrence
    where
        F: Fn(&Species, Witness) -> Witness,
    {
        match self {
            Occurrence::MAtom(_) => self.clone(),
            Occurrence::MOcc(s, w) => Occurrence::MOcc(s.clone(), f(s, *w)),
            Occurrence::Nested(q) => Occurrence::Nested(q.map_witnesses(f)),
        }
    }

    /// True if no m-atom occurs anywhere inside this object.
    pub fn is_classical(&self) -> bool {
        match self {
            Occurrence::MAtom(_) => true,
            Occurrence::MOcc(..) => false,
            Occurrence::Nested(q) => q.is_classical(),
        }
    }
}

impl From<QSet> for Occurrence {
    fn from(q: QSet) -> Self {
        Occurrence::Nested(q)
    }
}

/// Observable form of an object. Two objects are indistinguishable exactly
/// when their views are equal.
///
/// A nested view is the sorted list of its members' views, duplicates kept:
/// it records how many elements of each sort the qset holds and nothing else.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum View {
    MAtom(MAtomLabel),
    MOcc(Species),
    Nested(Vec<View>),
}

impl View {
    pub fn is_m_atom(&self) -> bool {
        matches!(self, View::MOcc(_))
    }

    pub fn is_qset(&self) -> bool {
        matches!(self, View::Nested(_))
    }
}

struct Inner {
    elems: Vec<Occurrence>,
    view: Vec<View>,
    classical: bool,
}

/// A finite, well-founded quasi-set in canonical form.
///
/// Members are kept sorted by the order on [`Occurrence`] with raw
/// duplicates removed. Values are immutable and cheap to clone; nesting is
/// built bottom-up, so cyclic membership cannot be expressed.
#[derive(Clone)]
pub struct QSet(Arc<Inner>);

impl QSet {
    pub fn empty() -> Self {
        QSet::from_sorted(Vec::new())
    }

    /// Canonicalize an arbitrary collection of occurrences.
    ///
    /// Occurrences that are raw-identical collapse into one member; in
    /// particular classical members are never duplicated.
    pub fn from_occurrences<I>(raw: I) -> Self
    where
        I: IntoIterator<Item = Occurrence>,
    {
        let mut elems: Vec<Occurrence> = raw.into_iter().collect();
        elems.sort();
        elems.dedup();
        QSet::from_sorted(elems)
    }

    /// `count` occurrences of `species` with witnesses `0..count`.
    pub fn pure(species: impl Into<Species>, count: usize) -> Self {
        let species = species.into();
        QSet::from_sorted(
            (0..count as u32)
                .map(|w| Occurrence::MOcc(species.clone(), Witness::new(w)))
                .collect(),
        )
    }

    /// A classical set of M-atoms.
    pub fn of_atoms<'a>(labels: impl IntoIterator<Item = &'a str>) -> Self {
        QSet::from_occurrences(labels.into_iter().map(Occurrence::matom))
    }

    pub(crate) fn from_sorted(elems: Vec<Occurrence>) -> Self {
        debug_assert!(elems.windows(2).all(|w| w[0] < w[1]));
        let view = elems.iter().map(Occurrence::view).collect();
        let classical = elems.iter().all(Occurrence::is_classical);
        QSet(Arc::new(Inner {
            elems,
            view,
            classical,
        }))
    }

    /// Raw members in canonical order.
    pub fn occurrences(&self) -> &[Occurrence] {
        &self.0.elems
    }

    /// The observable form: member views in canonical order.
    pub fn view(&self) -> &[View] {
        &self.0.view
    }

    pub fn quasi_cardinal(&self) -> usize {
        self.0.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.elems.is_empty()
    }

    /// True when no m-atom occurs in the transitive closure.
    pub fn is_classical(&self) -> bool {
        self.0.classical
    }

    /// Raw membership.
    pub fn contains(&self, x: &Occurrence) -> bool {
        self.0.elems.binary_search(x).is_ok()
    }

    /// Raw inclusion: every member of `self` is a member of `other`.
    pub fn is_subset(&self, other: &QSet) -> bool {
        self.0.elems.iter().all(|e| other.contains(e))
    }

    /// Members grouped into indistinguishability classes, in canonical order.
    pub fn classes(&self) -> impl Iterator<Item = &[Occurrence]> + '_ {
        self.0.elems.chunk_by(|a, b| a.cmp_view(b) == Ordering::Equal)
    }

    pub fn map_witnesses<F>(&self, f: &F) -> QSet
    where
        F: Fn(&Species, Witness) -> Witness,
    {
        QSet::from_occurrences(self.0.elems.iter().map(|e| e.map_witnesses(f)))
    }

    /// Species occurring anywhere inside, with the largest witness seen.
    pub fn particle_extent(&self) -> BTreeMap<Species, u32> {
        let mut out = BTreeMap::new();
        self.collect_extent(&mut out);
        out
    }

    fn collect_extent(&self, out: &mut BTreeMap<Species, u32>) {
        for e in self.occurrences() {
            match e {
                Occurrence::MOcc(s, w) => {
                    let slot = out.entry(s.clone()).or_insert(0);
                    *slot = (*slot).max(w.tag());
                }
                Occurrence::Nested(q) => q.collect_extent(out),
                Occurrence::MAtom(_) => {}
            }
        }
    }

    /// M-atom labels occurring anywhere inside.
    pub fn atom_labels(&self) -> Vec<MAtomLabel> {
        let mut out = Vec::new();
        self.collect_labels(&mut out);
        out.sort();
        out.dedup();
        out
    }

    fn collect_labels(&self, out: &mut Vec<MAtomLabel>) {
        for e in self.occurrences() {
            match e {
                Occurrence::MAtom(l) => out.push(l.clone()),
                Occurrence::Nested(q) => q.collect_labels(out),
                Occurrence::MOcc(..) => {}
            }
        }
    }
}

impl PartialEq for QSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.elems == other.0.elems
    }
}

impl Eq for QSet {}

impl Hash for QSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.elems.hash(state);
    }
}

impl PartialOrd for QSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.view()
            .cmp(other.view())
            .then_with(|| self.0.elems.cmp(&other.0.elems))
    }
}

impl fmt::Debug for QSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::render::debug_text(self))
    }
}

impl fmt::Display for QSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::render::text(self))
    }
}

/// Allocator of fresh witnesses, one counter per species.
#[derive(Debug, Default, Clone)]
pub struct Fresh {
    next: BTreeMap<Species, u32>,
}

impl Fresh {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn particle(&mut self, species: &Species) -> Occurrence {
        let slot = self.next.entry(species.clone()).or_insert(0);
        let w = *slot;
        *slot += 1;
        Occurrence::MOcc(species.clone(), Witness::new(w))
    }

    pub fn particles(&mut self, species: &Species, count: usize) -> Vec<Occurrence> {
        (0..count).map(|_| self.particle(species)).collect()
    }

    /// Number of witnesses handed out so far for each species.
    pub fn issued(&self) -> &BTreeMap<Species, u32> {
        &self.next
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_has_no_members() {
        let e = QSet::empty();
        assert_eq!(e.quasi_cardinal(), 0);
        assert!(e.is_classical());
        assert!(e.view().is_empty());
    }

    #[test]
    fn canonical_order_puts_matoms_first() {
        let s = Species::new("s");
        let raw = vec![
            Occurrence::MOcc(s.clone(), Witness::new(0)),
            Occurrence::matom("a"),
            Occurrence::MOcc(s.clone(), Witness::new(1)),
        ];
        let q = QSet::from_occurrences(raw);
        assert_eq!(
            q.view(),
            &[
                View::MAtom("a".into()),
                View::MOcc(s.clone()),
                View::MOcc(s)
            ]
        );
    }

    #[test]
    fn raw_duplicates_collapse() {
        let q = QSet::from_occurrences(vec![
            Occurrence::matom("a"),
            Occurrence::matom("a"),
            Occurrence::mocc("s", 3),
            Occurrence::mocc("s", 3),
        ]);
        assert_eq!(q.quasi_cardinal(), 2);
    }

    #[test]
    fn classes_group_indistinguishable_members() {
        let q = QSet::from_occurrences(vec![
            Occurrence::mocc("s", 0),
            Occurrence::mocc("t", 0),
            Occurrence::mocc("s", 1),
            Occurrence::Nested(QSet::pure("s", 1)),
            Occurrence::Nested(QSet::from_occurrences([Occurrence::mocc("s", 7)])),
        ]);
        let sizes: Vec<usize> = q.classes().map(<[_]>::len).collect();
        assert_eq!(sizes, vec![2, 1, 2]);
    }

    #[test]
    fn nested_classical_is_tracked() {
        let inner = QSet::of_atoms(["a"]);
        let outer = QSet::from_occurrences([Occurrence::Nested(inner)]);
        assert!(outer.is_classical());
        let wrapped = QSet::from_occurrences([Occurrence::Nested(QSet::pure("s", 1))]);
        assert!(!wrapped.is_classical());
    }

    #[test]
    fn fresh_counts_per_species() {
        let mut fresh = Fresh::new();
        let s = Species::new("s");
        let t = Species::new("t");
        assert_eq!(fresh.particle(&s), Occurrence::mocc("s", 0));
        assert_eq!(fresh.particle(&t), Occurrence::mocc("t", 0));
        assert_eq!(fresh.particle(&s), Occurrence::mocc("s", 1));
    }
}
