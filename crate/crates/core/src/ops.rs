//! Predicates and axiom-level operations that need no universe.

use std::cmp::Ordering;

use crate::error::{QSetError, Result};
use crate::value::{Occurrence, QSet, View};

/// The unary predicates of the theory evaluated on one object.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Classification {
    /// m-atom
    pub m: bool,
    /// M-atom
    pub big_m: bool,
    /// quasi-set
    pub q: bool,
    /// set: a qset with no m-atom anywhere in its transitive closure
    pub z: bool,
    /// classical thing: M-atom or set
    pub d: bool,
    /// every element is a qset
    pub e: bool,
    /// nonempty, all elements pairwise indistinguishable m-atoms
    pub pure: bool,
}

impl Classification {
    /// Names of the flags that hold, in a fixed order.
    pub fn names(&self) -> Vec<&'static str> {
        let all = [
            (self.m, "m"),
            (self.big_m, "M"),
            (self.q, "Q"),
            (self.z, "Z"),
            (self.d, "D"),
            (self.e, "E"),
            (self.pure, "pure"),
        ];
        all.iter().filter(|(b, _)| *b).map(|(_, n)| *n).collect()
    }
}

pub fn classify(x: &Occurrence) -> Classification {
    match x {
        Occurrence::MOcc(..) => Classification {
            m: true,
            ..Default::default()
        },
        Occurrence::MAtom(_) => Classification {
            big_m: true,
            d: true,
            ..Default::default()
        },
        Occurrence::Nested(q) => classify_qset(q),
    }
}

pub fn classify_qset(x: &QSet) -> Classification {
    let z = x.is_classical();
    let view = x.view();
    let pure = !view.is_empty()
        && view.iter().all(View::is_m_atom)
        && view.windows(2).all(|w| w[0] == w[1]);
    Classification {
        q: true,
        z,
        d: z,
        e: view.iter().all(View::is_qset),
        pure,
        ..Default::default()
    }
}

/// Indistinguishability: equal species for m-atoms, equal labels for
/// M-atoms, and for qsets the same quantity of elements of each sort,
/// checked recursively.
pub fn indistinguishable(x: &Occurrence, y: &Occurrence) -> bool {
    x.cmp_view(y) == Ordering::Equal
}

pub fn indistinguishable_qsets(x: &QSet, y: &QSet) -> bool {
    x.view() == y.view()
}

/// Outcome of an extensional-identity query.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtEq {
    True,
    False,
    /// The identity formula is not well formed for m-atoms.
    Undefined,
}

impl ExtEq {
    pub fn is_true(self) -> bool {
        self == ExtEq::True
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ExtEq::True => "true",
            ExtEq::False => "false",
            ExtEq::Undefined => "undefined",
        }
    }
}

impl From<bool> for ExtEq {
    fn from(b: bool) -> Self {
        if b {
            ExtEq::True
        } else {
            ExtEq::False
        }
    }
}

/// Extensional identity. Qsets are compared member by member at the raw
/// layer, so two indistinguishable qsets whose m-atoms carry different
/// witnesses are *not* extensionally identical.
pub fn extensional_eq(x: &Occurrence, y: &Occurrence) -> ExtEq {
    match (x, y) {
        (Occurrence::MOcc(..), _) | (_, Occurrence::MOcc(..)) => ExtEq::Undefined,
        (Occurrence::MAtom(a), Occurrence::MAtom(b)) => (a == b).into(),
        (Occurrence::Nested(a), Occurrence::Nested(b)) => (a == b).into(),
        _ => ExtEq::False,
    }
}

/// Zero for atoms, the number of members for qsets.
pub fn quasi_cardinal(x: &Occurrence) -> usize {
    match x {
        Occurrence::Nested(q) => q.quasi_cardinal(),
        _ => 0,
    }
}

pub fn union(x: &QSet, y: &QSet) -> QSet {
    QSet::from_occurrences(x.occurrences().iter().chain(y.occurrences()).cloned())
}

pub fn intersection(x: &QSet, y: &QSet) -> QSet {
    QSet::from_sorted(
        x.occurrences()
            .iter()
            .filter(|e| y.contains(e))
            .cloned()
            .collect(),
    )
}

/// Members of `y` indistinguishable from `e`, as a contiguous slice.
fn same_class<'a>(y: &'a QSet, e: &Occurrence) -> &'a [Occurrence] {
    let elems = y.occurrences();
    let lo = elems.partition_point(|o| o.cmp_view(e) == Ordering::Less);
    let hi = elems.partition_point(|o| o.cmp_view(e) != Ordering::Greater);
    &elems[lo..hi]
}

/// `x − y`, removing per indistinguishability class as many members of `x`
/// as `y` holds in that class. Members shared with `y` go first; any
/// remaining removals take the earliest members in canonical order. Which
/// ones go is not observable. When `y ⊆ x` this is plain raw difference.
pub fn difference(x: &QSet, y: &QSet) -> QSet {
    let mut kept = Vec::with_capacity(x.quasi_cardinal());
    for class in x.classes() {
        let in_y = same_class(y, &class[0]).len();
        let to_remove = in_y.min(class.len());
        let shared = class.iter().filter(|e| y.contains(e)).count();
        // shared members lie in y's class too, so shared <= to_remove
        let mut extra = to_remove - shared;
        for e in class {
            if y.contains(e) {
                continue;
            }
            if extra > 0 {
                extra -= 1;
                continue;
            }
            kept.push(e.clone());
        }
    }
    QSet::from_sorted(kept)
}

/// Bounded separation: members whose view satisfies `pred`. The predicate
/// never sees witnesses, so it cannot split an indistinguishability class.
pub fn separation<P>(x: &QSet, mut pred: P) -> QSet
where
    P: FnMut(&View) -> bool,
{
    QSet::from_sorted(
        x.occurrences()
            .iter()
            .zip(x.view())
            .filter(|(_, v)| pred(v))
            .map(|(e, _)| e.clone())
            .collect(),
    )
}

/// Replacement: the qset of images `map(view)` of every member of `x`.
/// Classical duplicates among the images merge.
pub fn replacement_image<F>(x: &QSet, mut map: F) -> QSet
where
    F: FnMut(&View) -> Occurrence,
{
    QSet::from_occurrences(x.view().iter().map(&mut map))
}

/// `{{z}, {z, u}}` built from the occurrences themselves.
pub fn kuratowski_pair(z: &Occurrence, u: &Occurrence) -> QSet {
    let first = QSet::from_occurrences([z.clone()]);
    let second = QSet::from_occurrences([z.clone(), u.clone()]);
    QSet::from_occurrences([Occurrence::Nested(first), Occurrence::Nested(second)])
}

/// Product: one pair per (member of `x`, member of `y`). Each pair is built
/// from the two occurrences, so it lies in the power-power-qset of `x ∪ y`;
/// a class of size `c` in `x` and one of size `d` in `y` contribute `c·d`
/// indistinguishable pairs. On sets this is the Cartesian product.
pub fn product(x: &QSet, y: &QSet) -> QSet {
    QSet::from_occurrences(x.occurrences().iter().flat_map(|z| {
        y.occurrences()
            .iter()
            .map(move |u| Occurrence::Nested(kuratowski_pair(z, u)))
    }))
}

/// Exchange `z_in ∈ x` for an indistinguishable `w_out ∉ x`:
/// `(x − z′) ∪ w′` with `z′ = {z_in}` and `w′ = {w_out}` the strong
/// singletons carrying those occurrences.
pub fn swap_indistinguishable(x: &QSet, z_in: &Occurrence, w_out: &Occurrence) -> Result<QSet> {
    if !x.contains(z_in) {
        return Err(QSetError::NotMember);
    }
    if !indistinguishable(z_in, w_out) {
        return Err(QSetError::NotIndistinguishable);
    }
    if x.contains(w_out) {
        return Err(QSetError::AlreadyMember);
    }
    let z_star = QSet::from_occurrences([z_in.clone()]);
    let w_star = QSet::from_occurrences([w_out.clone()]);
    Ok(union(&difference(x, &z_star), &w_star))
}

/// Largest qc for which the raw power qset is materialized.
pub const RAW_POWER_LIMIT: usize = 16;

/// The raw power qset: every raw sub-qset of `x`, exactly `2^qc(x)` of them.
pub fn power_set(x: &QSet) -> Result<QSet> {
    let n = x.quasi_cardinal();
    if n > RAW_POWER_LIMIT {
        return Err(QSetError::ScopeTooLarge {
            what: "raw power qset",
            size: format!("2^{n}"),
            limit: 1 << RAW_POWER_LIMIT,
        });
    }
    let elems = x.occurrences();
    let subsets = (0u32..1 << n).map(|mask| {
        let members = elems
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, e)| e.clone())
            .collect();
        Occurrence::Nested(QSet::from_sorted(members))
    });
    Ok(QSet::from_occurrences(subsets))
}
