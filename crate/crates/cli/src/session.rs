//! Session files: a ring, an order, and named ideals and Gröbner bases.
//!
//! ```text
//! # comment
//! ring x,y,z over QQ          (or GF(p))
//! order degrevlex             (lex | degrevlex | block:k, optional precedence y>x>z)
//! ideal J = x^2+y^2+z^2
//! ideal E = x*y
//! gb G = x^2+y^2+z^2          (an explicit basis, checked when loaded)
//! ```

use std::collections::BTreeMap;

use gnice_core::{Domain, Error, GroebnerBasis, Ideal, Limits, MonomialOrder, PolyRing, Polynomial};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Kind {
    Ideal,
    Basis,
}

#[derive(Debug, Clone)]
struct Entry {
    line: usize,
    kind: Kind,
    gens: Vec<String>,
}

/// A parsed session with every named ideal resolved in the active ring.
pub struct Session {
    ring: PolyRing,
    entries: BTreeMap<String, Entry>,
}

fn session_error(line: usize, message: impl Into<String>) -> CliError {
    CliError::Session {
        line,
        message: message.into(),
    }
}

/// `lex`, `degrevlex`, `block:k`, optionally followed by a precedence such as
/// `y>x>z`; also accepts the `kind(y>x>z)` form used in reports. Variables
/// missing from the precedence follow in declaration order.
pub fn parse_order(text: &str, vars: &[String]) -> Result<MonomialOrder, String> {
    let text = text.trim();
    let (kind, prec) = match text.find(|c: char| c.is_whitespace() || c == '(') {
        Some(i) => (&text[..i], text[i..].trim().trim_start_matches('(').trim_end_matches(')')),
        None => (text, ""),
    };
    let base = match kind {
        "lex" | "lp" => MonomialOrder::lex(),
        "degrevlex" | "revlex" | "dp" => MonomialOrder::degrevlex(),
        _ => match kind.strip_prefix("block:") {
            Some(k) => {
                let split: usize = k.parse().map_err(|_| format!("bad block size `{k}`"))?;
                if split == 0 || split >= vars.len() {
                    return Err(format!("block size must lie in 1..{}", vars.len()));
                }
                MonomialOrder::block(split)
            }
            None => return Err(format!("unknown order `{kind}`")),
        },
    };
    if prec.is_empty() {
        return Ok(base);
    }
    let mut perm = Vec::with_capacity(vars.len());
    for name in prec.split('>').map(str::trim) {
        let i = vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| format!("unknown variable `{name}` in order"))?;
        if perm.contains(&i) {
            return Err(format!("variable `{name}` repeated in order"));
        }
        perm.push(i);
    }
    let rest: Vec<usize> = (0..vars.len()).filter(|i| !perm.contains(i)).collect();
    perm.extend(rest);
    base.with_precedence(perm).map_err(|e| e.to_string())
}

fn parse_domain(text: &str) -> Result<Domain, String> {
    let t = text.trim();
    if t == "QQ" {
        return Ok(Domain::Rationals);
    }
    let p = t
        .strip_prefix("GF(")
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| format!("unknown coefficient field `{t}` (use QQ or GF(p))"))?;
    let p: u64 = p.trim().parse().map_err(|_| format!("bad characteristic `{p}`"))?;
    Domain::prime(p).map_err(|e| e.to_string())
}

fn split_gens(text: &str) -> Vec<String> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(String::from)
        .collect()
}

impl Session {
    /// Parse a session. `order` overrides the file's order declaration.
    pub fn parse(text: &str, order: Option<&str>, limits: Limits) -> Result<Session, CliError> {
        let mut ring_decl: Option<(usize, Vec<String>, Domain)> = None;
        let mut order_decl: Option<(usize, String)> = None;
        let mut entries = BTreeMap::new();
        for (k, raw) in text.lines().enumerate() {
            let line = k + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (keyword, rest) = content.split_once(char::is_whitespace).unwrap_or((content, ""));
            match keyword {
                "ring" => {
                    if ring_decl.is_some() {
                        return Err(session_error(line, "duplicate ring declaration"));
                    }
                    let (vars, field) = match rest.split_once(" over ") {
                        Some((v, f)) => (v, parse_domain(f).map_err(|m| session_error(line, m))?),
                        None => (rest, Domain::Rationals),
                    };
                    let vars: Vec<String> = vars.split(',').map(|v| v.trim().to_string()).collect();
                    ring_decl = Some((line, vars, field));
                }
                "order" => {
                    if order_decl.is_some() {
                        return Err(session_error(line, "duplicate order declaration"));
                    }
                    order_decl = Some((line, rest.trim().to_string()));
                }
                "ideal" | "gb" => {
                    let (name, gens) = rest
                        .split_once('=')
                        .ok_or_else(|| session_error(line, format!("expected `{keyword} NAME = ...`")))?;
                    let name = name.trim();
                    if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'') {
                        return Err(session_error(line, format!("bad name `{name}`")));
                    }
                    let kind = if keyword == "ideal" { Kind::Ideal } else { Kind::Basis };
                    let entry = Entry {
                        line,
                        kind,
                        gens: split_gens(gens),
                    };
                    if entries.insert(name.to_string(), entry).is_some() {
                        return Err(session_error(line, format!("name `{name}` defined twice")));
                    }
                }
                other => return Err(session_error(line, format!("unknown declaration `{other}`"))),
            }
        }

        let (ring_line, vars, domain) = ring_decl.ok_or_else(|| session_error(1, "missing `ring` declaration"))?;
        let order = match (order, &order_decl) {
            (Some(o), _) => parse_order(o, &vars).map_err(CliError::Usage)?,
            (None, Some((line, o))) => parse_order(o, &vars).map_err(|m| session_error(*line, m))?,
            (None, None) => MonomialOrder::degrevlex(),
        };
        let ring = PolyRing::new(&vars, domain, order)
            .map_err(|e| session_error(ring_line, e.to_string()))?
            .with_limits(limits);

        let session = Session { ring, entries };
        // every polynomial must parse in the declared ring
        for (name, entry) in &session.entries {
            for g in &entry.gens {
                session.ring.parse(g).map_err(|e| CliError::Session {
                    line: entry.line,
                    message: format!("in `{name}`: {e}"),
                })?;
            }
        }
        Ok(session)
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    fn entry(&self, name: &str) -> Result<&Entry, CliError> {
        self.entries
            .get(name)
            .ok_or_else(|| CliError::Usage(format!("no ideal or basis named `{name}` in the session")))
    }

    fn polys(&self, entry: &Entry) -> Result<Vec<Polynomial>, CliError> {
        Ok(entry
            .gens
            .iter()
            .map(|g| self.ring.parse(g))
            .collect::<Result<Vec<_>, Error>>()?)
    }

    /// The ideal generated by a named ideal or basis.
    pub fn ideal(&self, name: &str) -> Result<Ideal, CliError> {
        let entry = self.entry(name)?;
        Ok(Ideal::new(&self.ring, self.polys(entry)?)?)
    }

    /// A named `gb` entry as given (after checking it is a Gröbner basis), or
    /// the reduced basis of a named ideal.
    pub fn basis(&self, name: &str) -> Result<GroebnerBasis, CliError> {
        let entry = self.entry(name)?;
        let polys = self.polys(entry)?;
        match entry.kind {
            Kind::Basis => GroebnerBasis::from_generators(&self.ring, polys).map_err(|e| match e {
                Error::NotGroebnerBasis(m) => CliError::Precondition(format!("`{name}` is not a Gröbner basis: {m}")),
                other => other.into(),
            }),
            Kind::Ideal => Ok(Ideal::new(&self.ring, polys)?.groebner()?),
        }
    }

    pub fn polynomial(&self, text: &str) -> Result<Polynomial, CliError> {
        Ok(self.ring.parse(text)?)
    }
}
