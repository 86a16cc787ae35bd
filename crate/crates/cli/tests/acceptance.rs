//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails or runs over its time bound.
//!
//! The oracles below are written independently of the library: plain
//! integer arithmetic, brute-force placements, a naive set type and a
//! direct class-matching indistinguishability test.

use std::collections::{BTreeMap, BTreeSet};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use quasiset::gen::{random_qset, random_relabeling, random_sub_qset, Shape};
use quasiset::laws::fresh_copy;
use quasiset::ops::{
    difference, extensional_eq, indistinguishable, indistinguishable_qsets, intersection,
    kuratowski_pair, product, swap_indistinguishable, union,
};
use quasiset::power::{power_qset, power_total};
use quasiset::qfun::enumerate_qfunctions;
use quasiset::stat::{be_report, distributions_of_qset, fd_report, mb_report};
use quasiset::{render, ExtEq, Occurrence, QSet, Universe};
use quasiset_cli::ast::{Elem, Expr};
use quasiset_cli::eval::{evaluate, EvalOptions};
use quasiset_cli::output::{self, RenderOptions};
use quasiset_cli::parse::parse;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn check(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

// ---------------------------------------------------------------- oracles

fn factorial(n: u64) -> u128 {
    (1..=n as u128).product()
}

fn multinomial_oracle(counts: &[usize]) -> u128 {
    let n: usize = counts.iter().sum();
    counts
        .iter()
        .fold(factorial(n as u64), |acc, &k| acc / factorial(k as u64))
}

fn binomial_oracle(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// Occupancy counts of all `boxes^particles` labeled placements.
fn brute_force_placements(boxes: usize, particles: usize) -> BTreeMap<Vec<usize>, u128> {
    let mut out = BTreeMap::new();
    let mut choice = vec![0usize; particles];
    loop {
        let mut occ = vec![0usize; boxes];
        for &b in &choice {
            occ[b] += 1;
        }
        *out.entry(occ).or_insert(0) += 1;
        let mut i = 0;
        loop {
            if i == particles {
                return out;
            }
            choice[i] += 1;
            if choice[i] < boxes {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// Vectors in `{0..=particles}^boxes` summing to `particles`, by brute force.
fn brute_force_compositions(boxes: usize, particles: usize) -> u128 {
    let mut count = 0;
    let mut v = vec![0usize; boxes];
    loop {
        if v.iter().sum::<usize>() == particles {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == boxes {
                return count;
            }
            v[i] += 1;
            if v[i] <= particles {
                break;
            }
            v[i] = 0;
            i += 1;
        }
    }
}

/// Indistinguishability straight from weak extensionality: atoms by
/// label or species; qsets when their classes can be matched one to one
/// with mutually indistinguishable members and equal sizes.
fn equiv_oracle(a: &Occurrence, b: &Occurrence) -> bool {
    match (a, b) {
        (Occurrence::MAtom(x), Occurrence::MAtom(y)) => x == y,
        (Occurrence::MOcc(s, _), Occurrence::MOcc(t, _)) => s == t,
        (Occurrence::Nested(x), Occurrence::Nested(y)) => {
            let cx = classes_oracle(x);
            let cy = classes_oracle(y);
            let matched = |from: &[Vec<&Occurrence>], to: &[Vec<&Occurrence>]| {
                from.iter().all(|c| {
                    to.iter().any(|d| {
                        c.len() == d.len() && c.iter().all(|z| d.iter().all(|t| equiv_oracle(z, t)))
                    })
                })
            };
            matched(&cx, &cy) && matched(&cy, &cx)
        }
        _ => false,
    }
}

fn classes_oracle(x: &QSet) -> Vec<Vec<&Occurrence>> {
    let mut classes: Vec<Vec<&Occurrence>> = Vec::new();
    for e in x.occurrences() {
        match classes.iter_mut().find(|c| equiv_oracle(c[0], e)) {
            Some(c) => c.push(e),
            None => classes.push(vec![e]),
        }
    }
    classes
}

/// Naive classical sets.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
enum Naive {
    Atom(String),
    Set(BTreeSet<Naive>),
}

fn to_naive(x: &Occurrence) -> Naive {
    match x {
        Occurrence::MAtom(l) => Naive::Atom(l.name().to_string()),
        Occurrence::Nested(q) => Naive::Set(naive_set(q)),
        Occurrence::MOcc(..) => panic!("m-atom in the classical fragment"),
    }
}

fn naive_set(q: &QSet) -> BTreeSet<Naive> {
    q.occurrences().iter().map(to_naive).collect()
}

fn naive_pair(a: &Naive, b: &Naive) -> Naive {
    Naive::Set(BTreeSet::from([
        Naive::Set(BTreeSet::from([a.clone()])),
        Naive::Set(BTreeSet::from([a.clone(), b.clone()])),
    ]))
}

fn naive_power(s: &BTreeSet<Naive>) -> BTreeSet<BTreeSet<Naive>> {
    let items: Vec<&Naive> = s.iter().collect();
    (0u32..1 << items.len())
        .map(|mask| {
            items
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, e)| (*e).clone())
                .collect()
        })
        .collect()
}

fn timed(bound: Duration, f: impl FnOnce() -> Outcome) -> (Outcome, Duration) {
    let start = Instant::now();
    let r = f();
    let elapsed = start.elapsed();
    match r {
        Ok(msg) if elapsed > bound => (
            Err(format!("{msg}; took {elapsed:?}, bound {bound:?}")),
            elapsed,
        ),
        other => (other, elapsed),
    }
}

// ------------------------------------------------------------- criteria

fn ac1() -> Outcome {
    let mb = mb_report(2, 3).map_err(|e| e.to_string())?;
    let parcels: Vec<BigUint> = mb.per_occupancy.iter().rev().map(|(_, w)| w.clone()).collect();
    let expected: Vec<BigUint> = [[3, 0], [2, 1], [1, 2], [0, 3]]
        .iter()
        .map(|c| BigUint::from(multinomial_oracle(c)))
        .collect();
    check(parcels == expected, || format!("parcels {parcels:?}"))?;
    check(expected == [1u32, 3, 3, 1].map(BigUint::from), || "oracle parcels".into())?;
    check(mb.total == BigUint::from(8u32), || format!("MB total {}", mb.total))?;
    let be = be_report(2, 3).map_err(|e| e.to_string())?;
    check(be.total == BigUint::from(4u32), || format!("BE total {}", be.total))?;
    Ok("MB(2,3) parcels 1,3,3,1 total 8; BE(2,3) total 4".into())
}

fn ac2() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xA2);
    let shape = Shape::default();
    let (mut nested, mut atoms, mut particles) = (0, 0, 0);
    for i in 0..200 {
        let x = random_qset(&mut rng, &shape);
        let qc = x.quasi_cardinal();
        check(qc <= 12, || format!("instance {i}: qc {qc}"))?;
        nested += x.occurrences().iter().any(|e| e.as_qset().is_some()) as usize;
        atoms += x.occurrences().iter().any(Occurrence::is_big_m_atom) as usize;
        particles += x.occurrences().iter().any(Occurrence::is_m_atom) as usize;

        let entries = power_qset(&x, None).map_err(|e| e.to_string())?;
        let total: BigUint = entries.iter().map(|e| &e.multiplicity).sum();
        check(total == BigUint::from(1u64 << qc), || {
            format!("instance {i}: total {total} for {}", render::text(&x))
        })?;

        // raw sub-qsets grouped by what they look like
        let mut raw: BTreeMap<String, u64> = BTreeMap::new();
        for mask in 0u32..1 << qc {
            let sub = QSet::from_occurrences(
                x.occurrences()
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| mask & (1 << j) != 0)
                    .map(|(_, e)| e.clone()),
            );
            *raw.entry(render::to_json(&sub).to_string()).or_insert(0) += 1;
        }
        check(raw.len() == entries.len(), || format!("instance {i}: entry count"))?;
        for e in &entries {
            let key = render::to_json(&e.subset).to_string();
            check(raw.get(&key).map(|&n| BigUint::from(n)) == Some(e.multiplicity.clone()), || {
                format!("instance {i}: multiplicity of {}", render::text(&e.subset))
            })?;
        }
    }
    check(nested > 0 && atoms > 0 && particles > 0, || "instances not mixed".into())?;
    Ok(format!(
        "200 qsets (qc <= 12; {nested} with nested, {atoms} with M-atoms, {particles} with m-atoms): totals 2^qc, multiplicities match raw sub-qsets"
    ))
}

fn ac3() -> Outcome {
    for n in 1..=4usize {
        for big_n in 0..=8usize {
            let r = mb_report(n, big_n).map_err(|e| e.to_string())?;
            let oracle: u128 = (n as u128).pow(big_n as u32);
            let sum: u128 = r
                .per_occupancy
                .iter()
                .map(|(v, _)| multinomial_oracle(v.counts()))
                .sum();
            check(sum == oracle && r.total == BigUint::from(oracle), || {
                format!("n={n} N={big_n}: total {}", r.total)
            })?;
        }
    }
    for n in 1..=3usize {
        for big_n in 0..=6usize {
            let placements = brute_force_placements(n, big_n);
            let r = mb_report(n, big_n).map_err(|e| e.to_string())?;
            check(placements.len() == r.per_occupancy.len(), || format!("n={n} N={big_n}: vector count"))?;
            for (v, w) in &r.per_occupancy {
                let expected = placements.get(v.counts()).copied().unwrap_or(0);
                check(*w == BigUint::from(expected), || format!("n={n} N={big_n} {v}: {w} vs {expected}"))?;
            }
        }
    }
    Ok("sum of multinomials = n^N for n<=4, N<=8; weights match brute-force placements for n<=3, N<=6".into())
}

fn ac4() -> Outcome {
    let bits = QSet::of_atoms(["0", "1"]);
    let u = Universe::new().with_species("s", 3).with_atom("0").with_atom("1");
    let fs = enumerate_qfunctions(&QSet::pure("s", 3), &bits, &u).map_err(|e| e.to_string())?;
    check(fs.len() == 2, || format!("pure domain: {} quasi-functions", fs.len()))?;
    for k in 0..=6usize {
        let labels: Vec<String> = (0..k).map(|i| format!("d{i}")).collect();
        let dom = QSet::of_atoms(labels.iter().map(String::as_str));
        let u = labels.iter().fold(u.clone(), |u, l| u.with_atom(l.as_str()));
        let fs = enumerate_qfunctions(&dom, &bits, &u).map_err(|e| e.to_string())?;
        check(fs.len() == 1 << k, || format!("classical domain of size {k}: {}", fs.len()))?;
    }
    Ok("pure qc-3 domain into {0,1}: 2; classical domains of size k<=6: 2^k".into())
}

fn public_outputs(x: &QSet, y: &QSet) -> Vec<String> {
    let u = Universe::covering([x, y]);
    let mut out = vec![
        render::text(x),
        render::to_json(x).to_string(),
        render::text(&union(x, y)),
        render::text(&intersection(x, y)),
        render::text(&difference(x, y)),
        render::text(&product(x, y)),
        format!("{:?}", quasiset::ops::classify_qset(x)),
        indistinguishable_qsets(x, y).to_string(),
    ];
    if let Ok(entries) = power_qset(x, None) {
        for e in entries {
            out.push(format!("{} {}", render::text(&e.subset), e.multiplicity));
        }
    }
    if let Ok(d) = distributions_of_qset(x, 2) {
        out.push(output::text(&quasiset_cli::eval::Value::Tuples(d), RenderOptions::default()));
    }
    for e in x.occurrences().iter().take(2) {
        out.push(match u.weak_singleton(e) {
            Ok(s) => render::text(&s),
            Err(err) => err.to_string(),
        });
    }
    out
}

fn ac5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xA5);
    let shape = Shape::default();
    let mut swaps = 0;
    while swaps < 500 {
        let x = random_qset(&mut rng, &shape);
        let movable: Vec<&Occurrence> = x.occurrences().iter().filter(|e| !e.is_classical()).collect();
        if movable.is_empty() {
            continue;
        }
        let z = movable[rng.random_range(0..movable.len())];
        let w = fresh_copy(z, &x);
        let s = swap_indistinguishable(&x, z, &w).map_err(|e| e.to_string())?;
        check(equiv_oracle(&Occurrence::Nested(s.clone()), &Occurrence::Nested(x.clone())), || {
            format!("swap {}: not indistinguishable", render::text(&x))
        })?;
        check(s.quasi_cardinal() == x.quasi_cardinal(), || "qc changed".into())?;
        check(s != x, || "swap left the raw qset unchanged".into())?;
        swaps += 1;
    }
    let small = Shape { max_qc: 6, witness_pool: 4, ..Shape::small() };
    for i in 0..200 {
        let x = random_qset(&mut rng, &small);
        let y = random_qset(&mut rng, &small);
        let r = random_relabeling(&mut rng, &[&x, &y]);
        let before = public_outputs(&x, &y);
        let after = public_outputs(&r.qset(&x), &r.qset(&y));
        check(before == after, || format!("relabeling {i} changed an output for {}", render::text(&x)))?;
    }
    Ok("500 exchanges preserve ≡ and qc; 200 witness relabelings leave public outputs unchanged".into())
}

fn ac6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xA6);
    let u = Universe::new().with_species("e", 5).with_species("p", 2).with_atom("a");
    let views = [
        Occurrence::mocc("e", 0),
        Occurrence::mocc("p", 1),
        Occurrence::Nested(QSet::from_occurrences([Occurrence::mocc("e", 0), Occurrence::mocc("e", 1)])),
        Occurrence::Nested(QSet::from_occurrences([Occurrence::mocc("p", 0), Occurrence::matom("a")])),
    ];
    let mut distinct_pair = false;
    for v in &views {
        let draws: Vec<QSet> = (0..40)
            .map(|_| u.strong_singleton(&v.view(), &mut rng))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        for (i, a) in draws.iter().enumerate() {
            check(a.quasi_cardinal() == 1, || "strong singleton with qc != 1".into())?;
            check(a.is_subset(&u.weak_singleton(v).map_err(|e| e.to_string())?), || "not inside [x]".into())?;
            for b in &draws[i + 1..] {
                let (oa, ob) = (Occurrence::Nested(a.clone()), Occurrence::Nested(b.clone()));
                check(equiv_oracle(&oa, &ob), || "strong singletons not indistinguishable".into())?;
                if extensional_eq(&oa, &ob) == ExtEq::False {
                    distinct_pair = true;
                }
            }
        }
    }
    check(distinct_pair, || "no raw-distinct pair found".into())?;
    Ok("strong singletons have qc 1, are pairwise ≡, and a raw-distinct pair exists".into())
}

fn ac7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xA7);
    let shape = Shape::default();
    for i in 0..200 {
        let x = random_qset(&mut rng, &shape);
        let y = random_sub_qset(&mut rng, &x);
        let qc = QSet::quasi_cardinal;
        check(y.is_subset(&x), || "generator produced a non-sub-qset".into())?;
        check(qc(&difference(&x, &y)) == qc(&x) - qc(&y), || {
            format!("instance {i}: qc({} - {})", render::text(&x), render::text(&y))
        })?;
        check(qc(&y) <= qc(&x), || format!("instance {i}: monotonicity"))?;
        check(y == x || qc(&y) < qc(&x), || format!("instance {i}: strict monotonicity"))?;
        check(x.is_empty() == (qc(&x) == 0), || format!("instance {i}: nonempty with qc 0"))?;
        let rest = difference(&x, &y);
        check(intersection(&y, &rest).is_empty(), || format!("instance {i}: not disjoint"))?;
        check(qc(&union(&y, &rest)) == qc(&y) + qc(&rest), || format!("instance {i}: additivity"))?;
        let other = random_qset(&mut rng, &shape);
        let other_only = difference(&other, &intersection(&other, &x));
        check(qc(&union(&x, &other_only)) == qc(&x) + qc(&other_only), || {
            format!("instance {i}: additivity on unrelated qsets")
        })?;
    }
    Ok("200 instances: qc(x-y)=qc(x)-qc(y) for y ⊆ x; additivity, monotonicity, nonempty => nonzero".into())
}

fn ac8() -> Outcome {
    let pool: Vec<Occurrence> = vec![
        Occurrence::matom("a"),
        Occurrence::matom("b"),
        Occurrence::matom("c"),
        Occurrence::Nested(QSet::empty()),
        Occurrence::Nested(QSet::of_atoms(["a"])),
        Occurrence::Nested(QSet::from_occurrences([
            Occurrence::matom("b"),
            Occurrence::Nested(QSet::of_atoms(["c"])),
        ])),
    ];
    let mut sets = Vec::new();
    for mask in 0u32..1 << pool.len() {
        if mask.count_ones() <= 4 {
            sets.push(QSet::from_occurrences(
                pool.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, e)| e.clone()),
            ));
        }
    }
    let u = Universe::covering(sets.iter());
    for x in &sets {
        let nx = naive_set(x);
        check(x.quasi_cardinal() == nx.len(), || "qc differs from card".into())?;
        check(quasiset::ops::classify_qset(x).z, || "not a set".into())?;

        let entries = power_qset(x, None).map_err(|e| e.to_string())?;
        let subsets: BTreeSet<BTreeSet<Naive>> = entries.iter().map(|e| naive_set(&e.subset)).collect();
        check(entries.len() == 1 << nx.len(), || "power set size".into())?;
        check(entries.iter().all(|e| e.multiplicity == BigUint::from(1u32)), || "multiplicity != 1".into())?;
        check(subsets == naive_power(&nx), || "power set members".into())?;
        check(power_total(x).map_err(|e| e.to_string())? == BigUint::from(1u32 << nx.len()), || "total".into())?;

        let d = distributions_of_qset(x, 2).map_err(|e| e.to_string())?;
        let tuples: BTreeSet<Vec<BTreeSet<Naive>>> =
            d.tuples.iter().map(|t| t.boxes.iter().map(naive_set).collect()).collect();
        check(d.tuples.len() == 1 << nx.len() && tuples.len() == d.tuples.len(), || "x_2 tuples".into())?;

        for e in x.occurrences() {
            let s = u.weak_singleton(e).map_err(|e| e.to_string())?;
            check(naive_set(&s) == BTreeSet::from([to_naive(e)]), || "weak singleton".into())?;
        }

        for y in &sets {
            let ny = naive_set(y);
            let (ox, oy) = (Occurrence::Nested(x.clone()), Occurrence::Nested(y.clone()));
            check(naive_set(&union(x, y)) == &nx | &ny, || "union".into())?;
            check(naive_set(&intersection(x, y)) == &nx & &ny, || "intersection".into())?;
            check(naive_set(&difference(x, y)) == &nx - &ny, || "difference".into())?;
            check(x.is_subset(y) == nx.is_subset(&ny), || "inclusion".into())?;
            let naive_product: BTreeSet<Naive> =
                nx.iter().flat_map(|a| ny.iter().map(move |b| naive_pair(a, b))).collect();
            check(naive_set(&product(x, y)) == naive_product, || "product".into())?;
            let same = nx == ny;
            check(indistinguishable(&ox, &oy) == same, || "≡ on sets".into())?;
            check(extensional_eq(&ox, &oy) == ExtEq::from(same), || "=_E on sets".into())?;
        }
        for (a, b) in x.occurrences().iter().zip(x.occurrences().iter().rev()) {
            let pair = u.ordered_pair(a, b).map_err(|e| e.to_string())?;
            check(naive_set(&pair) == naive_set(&kuratowski_pair(a, b)), || "ordered pair".into())?;
            check(to_naive(&Occurrence::Nested(pair)) == naive_pair(&to_naive(a), &to_naive(b)), || {
                "ordered pair vs naive".into()
            })?;
        }
    }
    Ok(format!(
        "all {} sets of cardinal <= 4 over a 6-element pool agree with naive sets; power sets and x_2 have 2^card members",
        sets.len()
    ))
}

fn ac9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xA9);
    let shape = Shape::small();
    check(indistinguishable_qsets(&QSet::empty(), &QSet::empty()), || "∅ ≢ ∅".into())?;
    let (mut related, mut unrelated) = (0, 0);
    for i in 0..200 {
        let x = random_qset(&mut rng, &shape);
        let ox = Occurrence::Nested(x.clone());

        // similar with equal qc: fill both with one class of particles
        let species = ["s", "t"][i % 2];
        let k = rng.random_range(1..=4u32);
        let a = QSet::from_occurrences((0..k).map(|w| Occurrence::mocc(species, w)));
        let b = QSet::from_occurrences((0..k).map(|w| Occurrence::mocc(species, w + k)));
        check(indistinguishable_qsets(&a, &b), || "similar qsets with equal qc not ≡".into())?;

        // same extension
        let mut members = x.occurrences().to_vec();
        members.reverse();
        let same = QSet::from_occurrences(members);
        check(indistinguishable_qsets(&x, &same), || "same extension not ≡".into())?;

        // [x] ≡ [y] iff x ≡ y and qc([x]) = qc([y])
        let y = if rng.random_bool(0.5) {
            random_relabeling(&mut rng, &[&x]).qset(&x)
        } else {
            random_qset(&mut rng, &shape)
        };
        let oy = Occurrence::Nested(y.clone());
        let u = Universe::covering([&x, &y]);
        let (sx, sy) = (
            u.weak_singleton(&ox).map_err(|e| e.to_string())?,
            u.weak_singleton(&oy).map_err(|e| e.to_string())?,
        );
        let lhs = equiv_oracle(&ox, &oy) && sx.quasi_cardinal() == sy.quasi_cardinal();
        let rhs = indistinguishable_qsets(&sx, &sy);
        check(lhs == rhs, || format!("instance {i}: weak singleton biconditional"))?;
        check(indistinguishable(&ox, &oy) == equiv_oracle(&ox, &oy), || {
            format!("instance {i}: ≡ disagrees with the class-matching oracle")
        })?;

        if equiv_oracle(&ox, &oy) {
            related += 1;
            let xy = u.ordered_pair(&ox, &oy).map_err(|e| e.to_string())?;
            let yx = u.ordered_pair(&oy, &ox).map_err(|e| e.to_string())?;
            check(
                extensional_eq(&Occurrence::Nested(xy), &Occurrence::Nested(yx)) == ExtEq::True,
                || format!("instance {i}: ⟨x,y⟩ ≠ ⟨y,x⟩"),
            )?;
        } else {
            unrelated += 1;
        }
    }
    check(related >= 50 && unrelated >= 20, || format!("unbalanced instances: {related}/{unrelated}"))?;
    Ok(format!("200 instances ({related} with x ≡ y): weak-extensionality items hold; ⟨x,y⟩ =_E ⟨y,x⟩ whenever x ≡ y"))
}

fn ac10() -> Outcome {
    let fd32 = fd_report(3, 2).map_err(|e| e.to_string())?;
    check(fd32.total == BigUint::from(3u32), || format!("FD(3,2) total {}", fd32.total))?;
    let fd23 = fd_report(2, 3).map_err(|e| e.to_string())?;
    check(fd23.total == BigUint::from(0u32), || format!("FD(2,3) total {}", fd23.total))?;
    for n in 1..=4usize {
        for big_n in 0..=8usize {
            let be = be_report(n, big_n).map_err(|e| e.to_string())?;
            let direct = brute_force_compositions(n, big_n);
            let closed = binomial_oracle((big_n + n - 1) as u64, (n - 1) as u64);
            check(direct == closed && be.total == BigUint::from(direct), || {
                format!("BE({n},{big_n}) total {} vs {direct}", be.total)
            })?;
            let fd = fd_report(n, big_n).map_err(|e| e.to_string())?;
            let fd_expected = binomial_oracle(n as u64, big_n as u64);
            check(fd.total == BigUint::from(fd_expected), || format!("FD({n},{big_n})"))?;
        }
    }
    Ok("FD(3,2)=3, FD(2,3)=0; BE totals = C(N+n-1,n-1) = direct enumeration for n<=4, N<=8".into())
}

fn random_elem(rng: &mut ChaCha8Rng, depth: usize) -> Elem {
    match rng.random_range(0..if depth > 0 { 3 } else { 2 }) {
        0 => Elem::MAtom(["a", "b", "x y", "q\"uote", "back\\slash"][rng.random_range(0..5)].to_string()),
        1 => Elem::MOcc {
            species: ["s", "t", "e_1"][rng.random_range(0..3)].to_string(),
            count: rng.random_range(0..4),
        },
        _ => Elem::Qset((0..rng.random_range(0..3)).map(|_| random_elem(rng, depth - 1)).collect()),
    }
}

fn random_expr(rng: &mut ChaCha8Rng, depth: usize) -> Expr {
    match rng.random_range(0..if depth > 0 { 3 } else { 2 }) {
        0 => Expr::Qset((0..rng.random_range(0..4)).map(|_| random_elem(rng, 2)).collect()),
        1 => Expr::Nat(rng.random_range(0..100)),
        _ => {
            let name = ["union", "qc", "power", "diff", "mb", "weak"][rng.random_range(0..6)];
            let args = (0..rng.random_range(0..3)).map(|_| random_expr(rng, depth - 1)).collect();
            Expr::Call(name.to_string(), args)
        }
    }
}

fn ac11() -> Outcome {
    let golden = include_str!("golden/stats_mb_2_3.txt");
    let bin = env!("CARGO_BIN_EXE_qset");
    let runs: Vec<Vec<u8>> = (0..2)
        .map(|_| {
            Command::new(bin)
                .args(["stats", "--model", "mb", "-n", "2", "-N", "3"])
                .output()
                .map_err(|e| e.to_string())
                .and_then(|o| if o.status.success() { Ok(o.stdout) } else { Err(format!("exit {}", o.status)) })
        })
        .collect::<Result<_, _>>()?;
    check(runs[0] == runs[1], || "two runs differ".into())?;
    check(runs[0] == golden.as_bytes(), || {
        format!("output differs from golden file:\n{}", String::from_utf8_lossy(&runs[0]))
    })?;

    let mut rng = ChaCha8Rng::seed_from_u64(0xB1);
    for i in 0..100 {
        let e = random_expr(&mut rng, 3);
        let printed = e.to_string();
        let reparsed = parse(&printed).map_err(|err| format!("expression {i} `{printed}`: {err}"))?;
        check(reparsed == e && reparsed.to_string() == printed, || format!("expression {i} `{printed}` moved"))?;
    }
    for i in 0..100 {
        let lit = Expr::Qset((0..rng.random_range(0..5)).map(|_| random_elem(&mut rng, 2)).collect());
        let first = evaluate(&lit, &EvalOptions::default()).map_err(|e| e.to_string())?;
        let text = output::text(&first, RenderOptions::default());
        let again = evaluate(&parse(text.trim_end()).map_err(|e| e.to_string())?, &EvalOptions::default())
            .map_err(|e| e.to_string())?;
        check(output::text(&again, RenderOptions::default()) == text, || format!("qset {i} `{text}` moved"))?;
    }
    Ok("stats mb 2 3 is byte-identical across runs and matches the golden file; 100 expressions and 100 printed qsets round-trip".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("AC1", Duration::from_secs(1), ac1),
        ("AC2", Duration::from_secs(10), ac2),
        ("AC3", Duration::from_secs(30), ac3),
        ("AC4", Duration::from_secs(60), ac4),
        ("AC5", Duration::from_secs(10), ac5),
        ("AC6", Duration::from_secs(60), ac6),
        ("AC7", Duration::from_secs(60), ac7),
        ("AC8", Duration::from_secs(60), ac8),
        ("AC9", Duration::from_secs(60), ac9),
        ("AC10", Duration::from_secs(60), ac10),
        ("AC11", Duration::from_secs(60), ac11),
    ];
    let mut failures = 0;
    for (name, bound, f) in criteria {
        let (outcome, elapsed) = timed(bound, f);
        match outcome {
            Ok(msg) => println!("{name:<5} PASS  {msg}  [{} ms]", elapsed.as_millis()),
            Err(msg) => {
                failures += 1;
                println!("{name:<5} FAIL  {msg}  [{} ms]", elapsed.as_millis());
            }
        }
    }
    println!("{} of 11 acceptance criteria pass", 11 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
