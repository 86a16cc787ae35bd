//! Evaluation of parsed expressions against the core library.
//!
//! Every `m s` written in an expression is a particle of its own: literals
//! receive fresh witnesses in textual order, so `union([m s:2], [m s:2])`
//! holds four particles. Operations that take an *element* (weak
//! singletons, pairs, strong singletons, exchanges) accept a one-member
//! wrapper `[x]` and act on its member.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use quasiset::ops::{self, Classification, ExtEq};
use quasiset::power::{power_qset, power_total, PowerEntry};
use quasiset::qfun::{classify_qfunction, enumerate_qfunctions, QfKind, QuasiFunction};
use quasiset::stat::{self, DistributionReport, Model, OccupancyVector, QsetDistribution};
use quasiset::{Fresh, Occurrence, QSet, QSetError, Species, StatError, Universe};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::ast::{Elem, Expr};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Qset(QSet),
    Nat(BigUint),
    Bool(bool),
    ExtEq(ExtEq),
    Flags(Classification),
    Power { entries: Vec<PowerEntry>, total: BigUint },
    QFunctions(Vec<(QuasiFunction, QfKind)>),
    Report(DistributionReport),
    Tuples(QsetDistribution),
    Occupancies(Vec<OccupancyVector>),
}

impl Value {
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Qset(_) => "qset",
            Value::Nat(_) => "number",
            Value::Bool(_) => "boolean",
            Value::ExtEq(_) => "identity verdict",
            Value::Flags(_) => "classification",
            Value::Power { .. } => "power qset",
            Value::QFunctions(_) => "quasi-function list",
            Value::Report(_) => "distribution report",
            Value::Tuples(_) => "distribution list",
            Value::Occupancies(_) => "occupancy list",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("unknown operation `{0}`")]
    UnknownOperation(String),
    #[error("{op}: expected {expected} argument(s), found {found}")]
    Arity {
        op: String,
        expected: &'static str,
        found: usize,
    },
    #[error("{op}: argument {index} must be a {expected}, found a {found}")]
    Type {
        op: String,
        index: usize,
        expected: &'static str,
        found: &'static str,
    },
    #[error("{op}: argument {index} must wrap exactly one element, found quasi-cardinal {qc}")]
    NotAnElement { op: String, index: usize, qc: usize },
    #[error("{op}: argument {index} is too large")]
    NumberTooLarge { op: String, index: usize },
    #[error("{op}: {source}")]
    Core {
        op: String,
        #[source]
        source: QSetError,
    },
    #[error("{op}: {source}")]
    Stat {
        op: String,
        #[source]
        source: StatError,
    },
}

/// Names accepted in call position, with their argument shapes.
pub const OPERATIONS: &[(&str, &str)] = &[
    ("qc", "qset"),
    ("classify", "qset"),
    ("equiv", "qset, qset"),
    ("exteq", "qset, qset"),
    ("exteq_el", "[x], [y]"),
    ("union", "qset, qset"),
    ("inter", "qset, qset"),
    ("diff", "qset, qset"),
    ("subset", "qset, qset"),
    ("product", "qset, qset"),
    ("sep_m", "qset"),
    ("sep_like", "qset, [x]"),
    ("replace_const", "qset, [x]"),
    ("power", "qset [, NAT]"),
    ("powertotal", "qset"),
    ("powerset", "qset"),
    ("weak", "[x]"),
    ("wpair", "[x], [y]"),
    ("opair", "[x], [y]"),
    ("strong", "[x]"),
    ("star", "[x]"),
    ("swap", "qset, [z], [w]"),
    ("choice", "qset of qsets"),
    ("qfuns", "qset, qset"),
    ("qfcount", "qset, qset"),
    ("dist", "qset, NAT"),
    ("mb", "NAT, NAT"),
    ("be", "NAT, NAT"),
    ("fd", "NAT, NAT"),
    ("mostprob", "NAT, NAT"),
];

#[derive(Debug, Clone, Default)]
pub struct EvalOptions {
    /// Scope for universe-dependent operations. Without one, the smallest
    /// universe covering every literal of the expression is used.
    pub universe: Option<Universe>,
    /// Seed for strong-singleton draws.
    pub seed: u64,
}

pub fn evaluate(expr: &Expr, opts: &EvalOptions) -> Result<Value, EvalError> {
    let mut fresh = Fresh::new();
    let mut literals = Vec::new();
    collect_literals(expr, &mut fresh, &mut literals);
    let universe = opts
        .universe
        .clone()
        .unwrap_or_else(|| Universe::covering(literals.iter()));
    let mut ev = Evaluator {
        literals: literals.into_iter(),
        universe,
        rng: ChaCha8Rng::seed_from_u64(opts.seed),
    };
    ev.eval(expr)
}

/// Materialize every literal in textual order.
fn collect_literals(expr: &Expr, fresh: &mut Fresh, out: &mut Vec<QSet>) {
    match expr {
        Expr::Qset(elems) => out.push(literal(elems, fresh)),
        Expr::Nat(_) => {}
        Expr::Call(_, args) => args.iter().for_each(|a| collect_literals(a, fresh, out)),
    }
}

fn literal(elems: &[Elem], fresh: &mut Fresh) -> QSet {
    let mut members = Vec::new();
    for e in elems {
        match e {
            Elem::MAtom(l) => members.push(Occurrence::matom(l)),
            Elem::MOcc { species, count } => {
                members.extend(fresh.particles(&Species::new(species), *count as usize));
            }
            Elem::Qset(inner) => members.push(Occurrence::Nested(literal(inner, fresh))),
        }
    }
    QSet::from_occurrences(members)
}

struct Evaluator {
    literals: std::vec::IntoIter<QSet>,
    universe: Universe,
    rng: ChaCha8Rng,
}

struct Args<'a> {
    op: &'a str,
    values: Vec<Value>,
}

impl Args<'_> {
    fn arity(&self, expected: &'static str, ok: impl Fn(usize) -> bool) -> Result<(), EvalError> {
        if ok(self.values.len()) {
            Ok(())
        } else {
            Err(EvalError::Arity {
                op: self.op.to_string(),
                expected,
                found: self.values.len(),
            })
        }
    }

    fn qset(&self, i: usize) -> Result<&QSet, EvalError> {
        match &self.values[i] {
            Value::Qset(q) => Ok(q),
            other => Err(self.type_error(i, "qset", other)),
        }
    }

    fn element(&self, i: usize) -> Result<&Occurrence, EvalError> {
        let q = self.qset(i)?;
        match q.occurrences() {
            [only] => Ok(only),
            _ => Err(EvalError::NotAnElement {
                op: self.op.to_string(),
                index: i + 1,
                qc: q.quasi_cardinal(),
            }),
        }
    }

    fn nat(&self, i: usize) -> Result<usize, EvalError> {
        match &self.values[i] {
            Value::Nat(n) => n.to_usize().ok_or(EvalError::NumberTooLarge {
                op: self.op.to_string(),
                index: i + 1,
            }),
            other => Err(self.type_error(i, "number", other)),
        }
    }

    fn type_error(&self, i: usize, expected: &'static str, found: &Value) -> EvalError {
        EvalError::Type {
            op: self.op.to_string(),
            index: i + 1,
            expected,
            found: found.kind(),
        }
    }

    fn core<T>(&self, r: Result<T, QSetError>) -> Result<T, EvalError> {
        r.map_err(|source| EvalError::Core {
            op: self.op.to_string(),
            source,
        })
    }

    fn stat<T>(&self, r: Result<T, StatError>) -> Result<T, EvalError> {
        r.map_err(|source| EvalError::Stat {
            op: self.op.to_string(),
            source,
        })
    }
}

impl Evaluator {
    fn eval(&mut self, expr: &Expr) -> Result<Value, EvalError> {
        match expr {
            Expr::Qset(_) => Ok(Value::Qset(
                self.literals.next().expect("literals were collected in evaluation order"),
            )),
            Expr::Nat(n) => Ok(Value::Nat(BigUint::from(*n))),
            Expr::Call(op, args) => {
                if !OPERATIONS.iter().any(|(name, _)| name == op) {
                    return Err(EvalError::UnknownOperation(op.clone()));
                }
                let values = args.iter().map(|a| self.eval(a)).collect::<Result<_, _>>()?;
                self.apply(&Args { op, values })
            }
        }
    }

    fn apply(&mut self, a: &Args) -> Result<Value, EvalError> {
        let one = |n| n == 1;
        let two = |n| n == 2;
        let u = &self.universe;
        let v = match a.op {
            "qc" => {
                a.arity("1", one)?;
                Value::Nat(a.qset(0)?.quasi_cardinal().into())
            }
            "classify" => {
                a.arity("1", one)?;
                Value::Flags(ops::classify_qset(a.qset(0)?))
            }
            "equiv" => {
                a.arity("2", two)?;
                Value::Bool(ops::indistinguishable_qsets(a.qset(0)?, a.qset(1)?))
            }
            "exteq" => {
                a.arity("2", two)?;
                Value::ExtEq((a.qset(0)? == a.qset(1)?).into())
            }
            "exteq_el" => {
                a.arity("2", two)?;
                Value::ExtEq(ops::extensional_eq(a.element(0)?, a.element(1)?))
            }
            "union" | "inter" | "diff" | "subset" | "product" => {
                a.arity("2", two)?;
                let (x, y) = (a.qset(0)?, a.qset(1)?);
                match a.op {
                    "union" => Value::Qset(ops::union(x, y)),
                    "inter" => Value::Qset(ops::intersection(x, y)),
                    "diff" => Value::Qset(ops::difference(x, y)),
                    "subset" => Value::Bool(x.is_subset(y)),
                    _ => Value::Qset(ops::product(x, y)),
                }
            }
            "sep_m" => {
                a.arity("1", one)?;
                Value::Qset(ops::separation(a.qset(0)?, |v| v.is_m_atom()))
            }
            "sep_like" => {
                a.arity("2", two)?;
                let like = a.element(1)?.view();
                Value::Qset(ops::separation(a.qset(0)?, |v| *v == like))
            }
            "replace_const" => {
                a.arity("2", two)?;
                let image = a.element(1)?.clone();
                Value::Qset(ops::replacement_image(a.qset(0)?, |_| image.clone()))
            }
            "power" => {
                a.arity("1 or 2", |n| n == 1 || n == 2)?;
                let only = if a.values.len() == 2 { Some(a.nat(1)?) } else { None };
                let entries = a.core(power_qset(a.qset(0)?, only))?;
                let total = entries.iter().map(|e| &e.multiplicity).sum();
                Value::Power { entries, total }
            }
            "powertotal" => {
                a.arity("1", one)?;
                Value::Nat(a.core(power_total(a.qset(0)?))?)
            }
            "powerset" => {
                a.arity("1", one)?;
                Value::Qset(a.core(ops::power_set(a.qset(0)?))?)
            }
            "weak" => {
                a.arity("1", one)?;
                Value::Qset(a.core(u.weak_singleton(a.element(0)?))?)
            }
            "wpair" => {
                a.arity("2", two)?;
                Value::Qset(a.core(u.weak_pair(a.element(0)?, a.element(1)?))?)
            }
            "opair" => {
                a.arity("2", two)?;
                Value::Qset(a.core(u.ordered_pair(a.element(0)?, a.element(1)?))?)
            }
            "strong" => {
                a.arity("1", one)?;
                let x = a.element(0)?;
                a.core(u.check_object(x))?;
                Value::Qset(a.core(u.strong_singleton(&x.view(), &mut self.rng))?)
            }
            "star" => {
                a.arity("1", one)?;
                Value::Qset(a.core(u.star(a.element(0)?))?)
            }
            "swap" => {
                a.arity("3", |n| n == 3)?;
                let (x, z, w) = (a.qset(0)?, a.element(1)?, a.element(2)?);
                Value::Qset(a.core(ops::swap_indistinguishable(x, z, w))?)
            }
            "choice" => {
                a.arity("1", one)?;
                Value::Qset(a.core(u.choice_qset(a.qset(0)?))?)
            }
            "qfuns" | "qfcount" => {
                a.arity("2", two)?;
                let fs = a.core(enumerate_qfunctions(a.qset(0)?, a.qset(1)?, u))?;
                if a.op == "qfcount" {
                    Value::Nat(fs.len().into())
                } else {
                    Value::QFunctions(
                        fs.into_iter()
                            .map(|f| {
                                let k = classify_qfunction(&f);
                                (f, k)
                            })
                            .collect(),
                    )
                }
            }
            "dist" => {
                a.arity("2", two)?;
                Value::Tuples(a.stat(stat::distributions_of_qset(a.qset(0)?, a.nat(1)?))?)
            }
            "mb" | "be" | "fd" | "mostprob" => {
                a.arity("2", two)?;
                let (n, big_n) = (a.nat(0)?, a.nat(1)?);
                match a.op {
                    "mostprob" => Value::Occupancies(a.stat(stat::most_probable(n, big_n))?),
                    op => {
                        let model: Model = op.parse().expect("model names are fixed");
                        Value::Report(a.stat(stat::report(model, n, big_n))?)
                    }
                }
            }
            other => unreachable!("operation table and dispatcher disagree on `{other}`"),
        };
        Ok(v)
    }
}
