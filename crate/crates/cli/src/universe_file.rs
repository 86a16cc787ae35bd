//! Universe declarations, one per line:
//!
//! ```text
//! # comment
//! species s 3
//! atom "a"
//! ```

use std::collections::BTreeSet;
use std::fmt;

use quasiset::Universe;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniverseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for UniverseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "universe line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for UniverseError {}

/// Parsed declarations, in file order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct UniverseConfig {
    pub species: Vec<(String, usize)>,
    pub atoms: Vec<String>,
}

impl UniverseConfig {
    pub fn parse(src: &str) -> Result<Self, UniverseError> {
        let mut cfg = UniverseConfig::default();
        let mut names = BTreeSet::new();
        let mut labels = BTreeSet::new();
        for (i, raw) in src.lines().enumerate() {
            let line = i + 1;
            let err = |message: String| UniverseError { line, message };
            let text = raw.split('#').next().unwrap_or("").trim();
            if text.is_empty() {
                continue;
            }
            if let Some(rest) = text.strip_prefix("species") {
                let fields: Vec<&str> = rest.split_whitespace().collect();
                let [name, count] = fields[..] else {
                    return Err(err("expected `species NAME COUNT`".into()));
                };
                if !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
                    || name.starts_with(|c: char| c.is_ascii_digit())
                {
                    return Err(err(format!("invalid species name `{name}`")));
                }
                let count: usize = count
                    .parse()
                    .map_err(|_| err(format!("invalid count `{count}`")))?;
                if count == 0 {
                    return Err(err("species counts must be at least 1".into()));
                }
                if !names.insert(name.to_string()) {
                    return Err(err(format!("species `{name}` declared twice")));
                }
                cfg.species.push((name.to_string(), count));
            } else if let Some(rest) = text.strip_prefix("atom") {
                let label = parse_label(rest.trim()).ok_or_else(|| err("expected `atom \"LABEL\"`".into()))?;
                if !labels.insert(label.clone()) {
                    return Err(err(format!("atom {label:?} declared twice")));
                }
                cfg.atoms.push(label);
            } else {
                return Err(err(format!("unknown declaration `{text}`")));
            }
        }
        Ok(cfg)
    }

    pub fn to_universe(&self) -> Universe {
        let u = self
            .species
            .iter()
            .fold(Universe::new(), |u, (s, c)| u.with_species(s.as_str(), *c));
        self.atoms.iter().fold(u, |u, a| u.with_atom(a.as_str()))
    }
}

fn parse_label(s: &str) -> Option<String> {
    let inner = s.strip_prefix('"')?.strip_suffix('"')?;
    let mut out = String::new();
    let mut chars = inner.chars();
    while let Some(c) = chars.next() {
        match c {
            '\\' => out.push(chars.next().filter(|e| *e == '"' || *e == '\\')?),
            '"' => return None,
            c => out.push(c),
        }
    }
    Some(out)
}
