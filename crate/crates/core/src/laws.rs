//! Named law checks over seeded random values, used by `qset selftest`.
//!
//! Each check draws its own instances and reports the first counterexample
//! it finds.

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::combinatorics::pow;
use crate::gen::{random_qset, random_relabeling, random_sub_qset, Shape};
use crate::ops::{
    classify_qset, difference, extensional_eq, indistinguishable, indistinguishable_qsets,
    intersection, product, swap_indistinguishable, union,
};
use crate::power::{power_qset, power_total};
use crate::render::text;
use crate::stat::mb_report;
use crate::universe::Universe;
use crate::value::{Occurrence, QSet, Witness};

pub type Check = fn(&mut ChaCha8Rng) -> Result<(), String>;

pub struct Law {
    pub name: &'static str,
    pub check: Check,
}

pub const LAWS: &[Law] = &[
    Law { name: "indistinguishability is an equivalence", check: equivalence },
    Law { name: "canonical form is idempotent", check: canonical_idempotent },
    Law { name: "on classical things indistinguishability is identity", check: dinge },
    Law { name: "indistinguishability is strictly weaker than identity", check: strictness },
    Law { name: "witness relabeling is unobservable", check: witness_opacity },
    Law { name: "quasi-cardinal laws", check: quasi_cardinal_laws },
    Law { name: "power qset total is 2^qc", check: power_total_law },
    Law { name: "exchanging indistinguishables preserves the qset", check: swap_law },
    Law { name: "weak singletons and generalized pairs", check: singleton_laws },
    Law { name: "multinomial weights add up to n^N", check: multinomial_law },
];

/// Outcome of one law.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub name: &'static str,
    pub result: Result<(), String>,
}

pub fn run_all(seed: u64) -> Vec<Outcome> {
    LAWS.iter()
        .enumerate()
        .map(|(i, law)| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(i as u64));
            Outcome {
                name: law.name,
                result: (law.check)(&mut rng),
            }
        })
        .collect()
}

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

/// A copy of `z` whose witnesses all lie above every witness used in `avoid`.
pub fn fresh_copy(z: &Occurrence, avoid: &QSet) -> Occurrence {
    let offset = avoid
        .particle_extent()
        .values()
        .copied()
        .max()
        .map_or(0, |m| m + 1);
    z.map_witnesses(&|_, w| Witness::new(w.tag() + offset))
}

fn equivalence(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let shape = Shape { max_qc: 4, witness_pool: 3, ..Shape::default() };
    for _ in 0..300 {
        let x = random_qset(rng, &shape);
        // relabelings and sub-qsets make ≡ pairs common
        let y = random_relabeling(rng, &[&x]).qset(&x);
        let z = if rng.random_bool(0.5) {
            random_relabeling(rng, &[&y]).qset(&y)
        } else {
            random_qset(rng, &shape)
        };
        let eq = indistinguishable_qsets;
        ensure(eq(&x, &x), || format!("not reflexive on {}", text(&x)))?;
        ensure(eq(&x, &y) == eq(&y, &x), || format!("not symmetric on {}", text(&x)))?;
        ensure(!(eq(&x, &y) && eq(&y, &z)) || eq(&x, &z), || {
            format!("not transitive on {}, {}, {}", text(&x), text(&y), text(&z))
        })?;
    }
    Ok(())
}

fn canonical_idempotent(rng: &mut ChaCha8Rng) -> Result<(), String> {
    for _ in 0..1000 {
        let x = random_qset(rng, &Shape::default());
        let mut raw = x.occurrences().to_vec();
        raw.reverse();
        let again = QSet::from_occurrences(raw);
        ensure(again == x && again.view() == x.view(), || {
            format!("canonical form moved on {}", text(&x))
        })?;
    }
    Ok(())
}

fn dinge(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let shape = Shape::classical(3);
    for _ in 0..300 {
        let x = Occurrence::Nested(random_qset(rng, &shape));
        let y = Occurrence::Nested(random_qset(rng, &shape));
        ensure(indistinguishable(&x, &y) == extensional_eq(&x, &y).is_true(), || {
            format!("{x:?} and {y:?}")
        })?;
    }
    Ok(())
}

fn strictness(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let u = Universe::new().with_species("e", 4);
    let view = Occurrence::mocc("e", 0).view();
    for _ in 0..50 {
        let a = u.strong_singleton(&view, rng).map_err(|e| e.to_string())?;
        let b = u.strong_singleton(&view, rng).map_err(|e| e.to_string())?;
        ensure(a.quasi_cardinal() == 1 && b.quasi_cardinal() == 1, || "qc != 1".into())?;
        ensure(indistinguishable_qsets(&a, &b), || "strong singletons differ".into())?;
        if a != b {
            return Ok(());
        }
    }
    Err("no raw-distinct pair of strong singletons found".into())
}

fn witness_opacity(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let shape = Shape { max_qc: 8, ..Shape::default() };
    for _ in 0..200 {
        let x = random_qset(rng, &shape);
        let y = random_qset(rng, &shape);
        let r = random_relabeling(rng, &[&x, &y]);
        let (x2, y2) = (r.qset(&x), r.qset(&y));
        let pairs = [
            ("union", union(&x, &y), union(&x2, &y2)),
            ("intersection", intersection(&x, &y), intersection(&x2, &y2)),
            ("difference", difference(&x, &y), difference(&x2, &y2)),
            ("product", product(&x, &y), product(&x2, &y2)),
        ];
        for (op, a, b) in pairs {
            ensure(a.view() == b.view(), || format!("{op} on {} and {}", text(&x), text(&y)))?;
        }
        ensure(classify_qset(&x) == classify_qset(&x2), || "classify".into())?;
        let p1: Vec<_> = power_qset(&x, None).map_err(|e| e.to_string())?;
        let p2: Vec<_> = power_qset(&x2, None).map_err(|e| e.to_string())?;
        ensure(
            p1.len() == p2.len()
                && p1.iter().zip(&p2).all(|(a, b)| {
                    a.subset.view() == b.subset.view() && a.multiplicity == b.multiplicity
                }),
            || format!("power qset of {}", text(&x)),
        )?;
    }
    Ok(())
}

fn quasi_cardinal_laws(rng: &mut ChaCha8Rng) -> Result<(), String> {
    for _ in 0..200 {
        let x = random_qset(rng, &Shape::default());
        let y = random_sub_qset(rng, &x);
        let qc = QSet::quasi_cardinal;
        ensure(qc(&difference(&x, &y)) == qc(&x) - qc(&y), || {
            format!("difference of {} and {}", text(&x), text(&y))
        })?;
        ensure(qc(&y) <= qc(&x), || "monotonicity".into())?;
        ensure(y == x || qc(&y) < qc(&x), || "strict monotonicity".into())?;
        ensure(x.is_empty() || qc(&x) > 0, || "nonempty with qc 0".into())?;
        let rest = difference(&x, &y);
        ensure(intersection(&y, &rest).is_empty(), || "difference overlaps".into())?;
        ensure(qc(&union(&y, &rest)) == qc(&y) + qc(&rest), || "additivity".into())?;
        let beta = rng.random_range(0..=qc(&x));
        let some = power_qset(&x, Some(beta)).map_err(|e| e.to_string())?;
        ensure(!some.is_empty(), || format!("no sub-qset of qc {beta}"))?;
    }
    Ok(())
}

fn power_total_law(rng: &mut ChaCha8Rng) -> Result<(), String> {
    for _ in 0..200 {
        let x = random_qset(rng, &Shape::default());
        let total = power_total(&x).map_err(|e| e.to_string())?;
        ensure(total == BigUint::from(2u32).pow(x.quasi_cardinal() as u32), || {
            format!("total {total} for {}", text(&x))
        })?;
    }
    Ok(())
}

fn swap_law(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let mut done = 0;
    while done < 200 {
        let x = random_qset(rng, &Shape::default());
        let movable: Vec<&Occurrence> =
            x.occurrences().iter().filter(|e| !e.is_classical()).collect();
        if movable.is_empty() {
            continue;
        }
        let z = movable[rng.random_range(0..movable.len())];
        let w = fresh_copy(z, &x);
        let swapped = swap_indistinguishable(&x, z, &w).map_err(|e| e.to_string())?;
        ensure(indistinguishable_qsets(&swapped, &x), || format!("swap in {}", text(&x)))?;
        ensure(swapped.quasi_cardinal() == x.quasi_cardinal(), || "qc changed".into())?;
        ensure(swapped != x, || "swap had no raw effect".into())?;
        done += 1;
    }
    Ok(())
}

fn singleton_laws(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let shape = Shape::small();
    for _ in 0..200 {
        let x = Occurrence::Nested(random_qset(rng, &shape));
        let y = if rng.random_bool(0.5) {
            random_relabeling(rng, &[x.as_qset().unwrap()]).occurrence(&x)
        } else {
            Occurrence::Nested(random_qset(rng, &shape))
        };
        let (qx, qy) = (x.as_qset().unwrap(), y.as_qset().unwrap());
        let u = Universe::covering([qx, qy]);
        let err = |e: crate::error::QSetError| e.to_string();
        let (sx, sy) = (u.weak_singleton(&x).map_err(err)?, u.weak_singleton(&y).map_err(err)?);
        ensure(indistinguishable_qsets(&sx, &sy) == indistinguishable(&x, &y), || {
            format!("[x] ≡ [y] iff x ≡ y fails for {} and {}", text(qx), text(qy))
        })?;
        ensure(sx.contains(&x), || "x ∉ [x]".into())?;
        if indistinguishable(&x, &y) {
            let xy = u.ordered_pair(&x, &y).map_err(err)?;
            let yx = u.ordered_pair(&y, &x).map_err(err)?;
            ensure(xy == yx, || format!("⟨x,y⟩ ≠ ⟨y,x⟩ for {}", text(qx)))?;
        }
    }
    ensure(indistinguishable_qsets(&QSet::empty(), &QSet::empty()), || "∅ ≢ ∅".into())
}

fn multinomial_law(_: &mut ChaCha8Rng) -> Result<(), String> {
    for n in 1..=4 {
        for big_n in 0..=8 {
            let r = mb_report(n, big_n).map_err(|e| e.to_string())?;
            ensure(r.total == pow(n, big_n), || format!("n={n}, N={big_n}"))?;
        }
    }
    Ok(())
}
