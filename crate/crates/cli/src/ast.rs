//! Expression trees and their canonical printer.
//!
//! Literals carry counts, not witnesses. Witnesses are assigned when the
//! expression is evaluated, so printing a parsed expression never leaks
//! them.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Qset(Vec<Elem>),
    Nat(u64),
    Call(String, Vec<Expr>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Elem {
    MAtom(String),
    /// `count` fresh m-atoms of one species.
    MOcc { species: String, count: u64 },
    Qset(Vec<Elem>),
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Qset(elems) => write_elems(f, elems),
            Expr::Nat(n) => write!(f, "{n}"),
            Expr::Call(name, args) => {
                write!(f, "{name}(")?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
        }
    }
}

fn write_elems(f: &mut fmt::Formatter<'_>, elems: &[Elem]) -> fmt::Result {
    f.write_str("[")?;
    for (i, e) in elems.iter().enumerate() {
        if i > 0 {
            f.write_str(", ")?;
        }
        match e {
            Elem::MAtom(label) => {
                f.write_str("M\"")?;
                for c in label.chars() {
                    if c == '"' || c == '\\' {
                        f.write_str("\\")?;
                    }
                    write!(f, "{c}")?;
                }
                f.write_str("\"")?;
            }
            Elem::MOcc { species, count: 1 } => write!(f, "m {species}")?,
            Elem::MOcc { species, count } => write!(f, "m {species}:{count}")?,
            Elem::Qset(inner) => write_elems(f, inner)?,
        }
    }
    f.write_str("]")
}
