//! Quasi-functions: relations that send indistinguishable arguments to
//! indistinguishable values.
//!
//! Because a quasi-function cannot tell apart members of one class, it is
//! fully described by a choice of codomain class for every domain class.
//! From a pure domain into a two-element set there are therefore exactly
//! two of them, however large the domain is.

use crate::error::{QSetError, Result};
use crate::universe::Universe;
use crate::value::{Occurrence, QSet, View};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiFunction {
    domain: QSet,
    codomain: QSet,
    graph: QSet,
    /// (domain class, codomain class) per domain class, in canonical order.
    assignment: Vec<(View, View)>,
}

/// Which of the q-injection / q-surjection / q-bijection conditions hold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct QfKind {
    pub injection: bool,
    pub surjection: bool,
    pub bijection: bool,
}

impl QuasiFunction {
    pub fn domain(&self) -> &QSet {
        &self.domain
    }

    pub fn codomain(&self) -> &QSet {
        &self.codomain
    }

    /// The graph: one generalized pair `⟨u, v⟩` per domain class. All
    /// pairs drawn from the same two classes are extensionally identical,
    /// so a class contributes a single member.
    pub fn graph(&self) -> &QSet {
        &self.graph
    }

    pub fn assignment(&self) -> &[(View, View)] {
        &self.assignment
    }

    /// The codomain class assigned to `arg`'s class, if `arg` is in the domain.
    pub fn apply(&self, arg: &View) -> Option<&View> {
        self.assignment
            .iter()
            .find(|(d, _)| d == arg)
            .map(|(_, c)| c)
    }

    /// The members of the codomain reached by the function.
    pub fn range(&self) -> QSet {
        QSet::from_sorted(
            self.codomain
                .occurrences()
                .iter()
                .zip(self.codomain.view())
                .filter(|(_, v)| self.assignment.iter().any(|(_, c)| c == *v))
                .map(|(e, _)| e.clone())
                .collect(),
        )
    }

    /// Indistinguishable arguments have indistinguishable values and every
    /// domain class is covered.
    pub fn respects_indistinguishability(&self) -> bool {
        let classes: Vec<View> = self.domain.classes().map(|c| c[0].view()).collect();
        classes.len() == self.assignment.len()
            && classes.iter().all(|d| {
                let mut images = self.assignment.iter().filter(|(a, _)| a == d);
                match (images.next(), images.next()) {
                    (Some((_, v)), None) => self.codomain.view().contains(v),
                    _ => false,
                }
            })
    }
}

/// Every quasi-function from `dom` to `cod`: `(#cod classes)^(#dom classes)`
/// of them, in lexicographic order of class choices.
pub fn enumerate_qfunctions(dom: &QSet, cod: &QSet, universe: &Universe) -> Result<Vec<QuasiFunction>> {
    let dom_classes: Vec<&[Occurrence]> = dom.classes().collect();
    let cod_classes: Vec<&[Occurrence]> = cod.classes().collect();
    if cod_classes.is_empty() && !dom_classes.is_empty() {
        return Err(QSetError::EmptyCodomain);
    }
    let total = (cod_classes.len() as u128).checked_pow(dom_classes.len() as u32);
    if total.is_none_or(|t| t > crate::universe::MEMBER_LIMIT as u128) {
        return Err(QSetError::ScopeTooLarge {
            what: "quasi-functions",
            size: format!("{}^{}", cod_classes.len(), dom_classes.len()),
            limit: crate::universe::MEMBER_LIMIT,
        });
    }

    let mut choice = vec![0usize; dom_classes.len()];
    let mut out = Vec::new();
    loop {
        let mut pairs = Vec::with_capacity(choice.len());
        let mut assignment = Vec::with_capacity(choice.len());
        for (d, &c) in dom_classes.iter().zip(&choice) {
            let u = &d[0];
            let v = &cod_classes[c][0];
            pairs.push(Occurrence::Nested(universe.ordered_pair(u, v)?));
            assignment.push((u.view(), v.view()));
        }
        out.push(QuasiFunction {
            domain: dom.clone(),
            codomain: cod.clone(),
            graph: QSet::from_occurrences(pairs),
            assignment,
        });
        // odometer, last class varies fastest
        let mut i = choice.len();
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if choice[i] + 1 < cod_classes.len() {
                choice[i] += 1;
                break;
            }
            choice[i] = 0;
        }
    }
}

/// Evaluate the q-injection and q-surjection conditions, including the
/// quasi-cardinal comparisons between domain and range.
pub fn classify_qfunction(f: &QuasiFunction) -> QfKind {
    let qc_dom = f.domain.quasi_cardinal();
    let range = f.range();
    let qc_rng = range.quasi_cardinal();

    // equal values force equal arguments
    let values_separate = f.assignment.iter().enumerate().all(|(i, (u, v))| {
        f.assignment[i + 1..]
            .iter()
            .all(|(u2, v2)| v != v2 || u == u2)
    });
    let injection = values_separate && qc_dom <= qc_rng;

    let covers = f
        .codomain
        .view()
        .iter()
        .all(|v| f.assignment.iter().any(|(_, c)| c == v));
    let surjection = covers && qc_dom >= qc_rng;

    QfKind {
        injection,
        surjection,
        bijection: injection && surjection,
    }
}
