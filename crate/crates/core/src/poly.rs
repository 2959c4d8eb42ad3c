//! Sparse multivariate polynomials over an exact field.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{Domain, Scalar};
use crate::monomial::Monomial;
use crate::order::MonomialOrder;

/// Caps guarding the fixed-point and Buchberger loops.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Critical pairs processed by one Buchberger run.
    pub max_pairs: usize,
    /// Largest total degree allowed for a new basis element.
    pub max_degree: u32,
    /// Iterations of a closure operator before giving up.
    pub max_iterations: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_pairs: 1_000_000,
            max_degree: 60,
            max_iterations: 100,
        }
    }
}

#[derive(Debug)]
struct RingData {
    vars: Vec<String>,
    domain: Domain,
    order: MonomialOrder,
    limits: Limits,
}

/// The polynomial ring `K[x_1, ..., x_n]` together with the monomial order
/// its polynomials are sorted by. Cheap to clone.
///
/// Two handles compare equal when variables, field and order agree; the
/// resource limits are configuration and do not take part.
#[derive(Clone)]
pub struct PolyRing(Arc<RingData>);

impl PartialEq for PolyRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.vars == other.0.vars
                && self.0.domain == other.0.domain
                && self.0.order == other.0.order)
    }
}

impl Eq for PolyRing {}

impl fmt::Debug for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "PolyRing({} over {}, {})",
            self.0.vars.join(","),
            self.0.domain,
            self.describe_order()
        )
    }
}

pub(crate) fn valid_variable_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl PolyRing {
    pub fn new<S: AsRef<str>>(vars: &[S], domain: Domain, order: MonomialOrder) -> Result<Self> {
        if vars.is_empty() {
            return Err(Error::InvalidRing("a ring needs at least one variable".into()));
        }
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        for (i, v) in vars.iter().enumerate() {
            if !valid_variable_name(v) {
                return Err(Error::InvalidRing(format!("invalid variable name `{v}`")));
            }
            if vars[..i].contains(v) {
                return Err(Error::InvalidRing(format!("duplicate variable `{v}`")));
            }
        }
        if let Domain::Prime(p) = domain {
            Domain::prime(p)?;
        }
        order.validate(vars.len())?;
        Ok(PolyRing(Arc::new(RingData {
            vars,
            domain,
            order,
            limits: Limits::default(),
        })))
    }

    pub fn vars(&self) -> &[String] {
        &self.0.vars
    }

    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn domain(&self) -> Domain {
        self.0.domain
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.0.order
    }

    pub fn limits(&self) -> Limits {
        self.0.limits
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.vars.iter().position(|v| v == name)
    }

    /// Same variables and field, different order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<PolyRing> {
        order.validate(self.nvars())?;
        Ok(PolyRing(Arc::new(RingData {
            vars: self.0.vars.clone(),
            domain: self.0.domain,
            order,
            limits: self.0.limits,
        })))
    }

    pub fn with_limits(&self, limits: Limits) -> PolyRing {
        PolyRing(Arc::new(RingData {
            vars: self.0.vars.clone(),
            domain: self.0.domain,
            order: self.0.order.clone(),
            limits,
        }))
    }

    /// True when polynomials of `other` can be re-sorted into this ring.
    pub fn is_compatible(&self, other: &PolyRing) -> bool {
        self.0.vars == other.0.vars && self.0.domain == other.0.domain
    }

    /// Human-readable order, e.g. `lex(y>x)` or `degrevlex(x>y>z)`.
    pub fn describe_order(&self) -> String {
        use crate::order::OrderKind;
        let prec: Vec<&str> = match self.order().precedence() {
            Some(p) => p.iter().map(|&i| self.0.vars[i].as_str()).collect(),
            None => self.0.vars.iter().map(String::as_str).collect(),
        };
        let kind = match self.order().kind() {
            OrderKind::Lex => "lex".to_string(),
            OrderKind::DegRevLex => "degrevlex".to_string(),
            OrderKind::Block { split } => format!("block:{split}"),
        };
        format!("{kind}({})", prec.join(">"))
    }

    #[inline]
    pub(crate) fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.0.order.compare(a, b)
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial {
            ring: self.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(&self) -> Polynomial {
        self.constant(self.domain().one())
    }

    pub fn constant(&self, c: Scalar) -> Polynomial {
        self.term(c, Monomial::one(self.nvars()))
    }

    pub fn term(&self, c: Scalar, m: Monomial) -> Polynomial {
        assert_eq!(m.nvars(), self.nvars(), "monomial arity mismatch");
        let terms = if self.domain().is_zero(&c) {
            Vec::new()
        } else {
            vec![Term { coeff: c, mon: m }]
        };
        Polynomial {
            ring: self.clone(),
            terms,
        }
    }

    pub fn monomial(&self, m: Monomial) -> Polynomial {
        self.term(self.domain().one(), m)
    }

    pub fn variable(&self, name: &str) -> Result<Polynomial> {
        let i = self
            .var_index(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(self.monomial(Monomial::var(self.nvars(), i)))
    }

    /// Build a polynomial from arbitrary terms: like monomials are combined,
    /// zeros dropped and the result sorted by the ring's order.
    pub fn from_terms(&self, terms: impl IntoIterator<Item = (Scalar, Monomial)>) -> Result<Polynomial> {
        let dom = self.domain();
        let mut acc: HashMap<Monomial, Scalar> = HashMap::new();
        for (c, m) in terms {
            if m.nvars() != self.nvars() {
                return Err(Error::ArityMismatch {
                    expected: self.nvars(),
                    found: m.nvars(),
                });
            }
            match acc.get_mut(&m) {
                Some(prev) => *prev = dom.add(prev, &c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        Ok(self.collect_sorted(acc))
    }

    fn collect_sorted(&self, acc: HashMap<Monomial, Scalar>) -> Polynomial {
        let dom = self.domain();
        let mut terms: Vec<Term> = acc
            .into_iter()
            .filter(|(_, c)| !dom.is_zero(c))
            .map(|(mon, coeff)| Term { coeff, mon })
            .collect();
        terms.sort_by(|a, b| self.cmp(&b.mon, &a.mon));
        Polynomial {
            ring: self.clone(),
            terms,
        }
    }

    /// Wraps terms the caller guarantees are sorted, nonzero and distinct.
    pub(crate) fn poly_from_sorted(&self, terms: Vec<Term>) -> Polynomial {
        debug_assert!(terms.windows(2).all(|w| self.cmp(&w[0].mon, &w[1].mon) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| !self.domain().is_zero(&t.coeff)));
        Polynomial {
            ring: self.clone(),
            terms,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: Scalar,
    pub mon: Monomial,
}

/// A polynomial: nonzero terms with distinct monomials, strictly descending in
/// the order of its ring. The empty term list is the zero polynomial.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: PolyRing,
    terms: Vec<Term>,
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl Polynomial {
    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub(crate) fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    /// `ini(f)`; `None` for the zero polynomial.
    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mon)
    }

    pub fn leading_coeff(&self) -> Option<&Scalar> {
        self.terms.first().map(|t| &t.coeff)
    }

    pub fn try_leading_monomial(&self, op: &'static str) -> Result<&Monomial> {
        self.leading_monomial().ok_or(Error::ZeroPolynomial(op))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mon.degree()).max()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.mon.is_one())
    }

    pub fn support(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter().map(|t| &t.mon)
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let dom = self.ring.domain();
        Ok(self.ring.poly_from_sorted(merge_combine(
            &self.ring,
            &self.terms,
            &other.terms,
            |c| c.clone(),
            |a, b| dom.add(a, b),
        )))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let dom = self.ring.domain();
        Ok(self.ring.poly_from_sorted(merge_combine(
            &self.ring,
            &self.terms,
            &other.terms,
            |c| dom.neg(c),
            |a, b| dom.sub(a, b),
        )))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let dom = self.ring.domain();
        let mut acc: HashMap<Monomial, Scalar> = HashMap::with_capacity(self.len() * other.len());
        for a in &self.terms {
            for b in &other.terms {
                let c = dom.mul(&a.coeff, &b.coeff);
                let m = a.mon.mul(&b.mon);
                match acc.get_mut(&m) {
                    Some(prev) => *prev = dom.add(prev, &c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Ok(self.ring.collect_sorted(acc))
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        let dom = self.ring.domain();
        if dom.is_zero(c) {
            return self.ring.zero();
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                coeff: dom.mul(&t.coeff, c),
                mon: t.mon.clone(),
            })
            .collect();
        self.ring.poly_from_sorted(terms)
    }

    /// Multiplication by a monomial keeps the term order (orders are multiplicative).
    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                coeff: t.coeff.clone(),
                mon: t.mon.mul(m),
            })
            .collect();
        self.ring.poly_from_sorted(terms)
    }

    /// Scaled to leading coefficient 1; zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) if self.ring.domain().is_one(lc) => self.clone(),
            Some(lc) => {
                let inv = self.ring.domain().inv(lc).expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    /// The same polynomial in a ring with the same variables and field but a
    /// possibly different order; terms are re-sorted.
    pub fn reorder(&self, ring: &PolyRing) -> Result<Polynomial> {
        if !self.ring.is_compatible(ring) {
            return Err(Error::RingMismatch);
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| ring.cmp(&b.mon, &a.mon));
        Ok(ring.poly_from_sorted(terms))
    }

    /// `self / d` when `d` divides `self` exactly.
    pub fn div_exact(&self, d: &Polynomial) -> Result<Option<Polynomial>> {
        self.check_ring(d)?;
        let dom = self.ring.domain();
        let lead = d.leading_term().ok_or(Error::DivisionByZero)?;
        let lc_inv = dom.inv(&lead.coeff).expect("nonzero leading coefficient");
        let mut rem = self.terms.clone();
        let mut quotient = Vec::new();
        while let Some(t) = rem.first() {
            let Some(q) = t.mon.div(&lead.mon) else {
                return Ok(None);
            };
            let c = dom.mul(&t.coeff, &lc_inv);
            rem = sub_multiple(&self.ring, &rem[1..], &c, &q, &d.terms[1..]);
            // quotient terms are produced in strictly descending order
            quotient.push(Term { coeff: c, mon: q });
        }
        Ok(Some(self.ring.poly_from_sorted(quotient)))
    }

    /// Substitute variables by a map of exponent vectors into another ring,
    /// re-sorting under that ring's order.
    pub(crate) fn map_monomials(&self, ring: &PolyRing, f: impl Fn(&Monomial) -> Monomial) -> Polynomial {
        let mut terms: Vec<Term> = self
            .terms
            .iter()
            .map(|t| Term {
                coeff: t.coeff.clone(),
                mon: f(&t.mon),
            })
            .collect();
        terms.sort_by(|a, b| ring.cmp(&b.mon, &a.mon));
        ring.poly_from_sorted(terms)
    }
}

/// Merge two descending term lists, combining equal monomials with `both`
/// and mapping lone right-hand terms with `right_only`.
fn merge_combine(
    ring: &PolyRing,
    a: &[Term],
    b: &[Term],
    right_only: impl Fn(&Scalar) -> Scalar,
    both: impl Fn(&Scalar, &Scalar) -> Scalar,
) -> Vec<Term> {
    let dom = ring.domain();
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match ring.cmp(&a[i].mon, &b[j].mon) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(Term {
                    coeff: right_only(&b[j].coeff),
                    mon: b[j].mon.clone(),
                });
                j += 1;
            }
            Ordering::Equal => {
                let c = both(&a[i].coeff, &b[j].coeff);
                if !dom.is_zero(&c) {
                    out.push(Term {
                        coeff: c,
                        mon: a[i].mon.clone(),
                    });
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend(b[j..].iter().map(|t| Term {
        coeff: right_only(&t.coeff),
        mon: t.mon.clone(),
    }));
    out
}

/// `a - c * shift * b` for descending term lists.
pub(crate) fn sub_multiple(ring: &PolyRing, a: &[Term], c: &Scalar, shift: &Monomial, b: &[Term]) -> Vec<Term> {
    let dom = ring.domain();
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    for t in b {
        let mon = t.mon.mul(shift);
        let coeff = dom.mul(c, &t.coeff);
        loop {
            if i < a.len() {
                match ring.cmp(&a[i].mon, &mon) {
                    Ordering::Greater => {
                        out.push(a[i].clone());
                        i += 1;
                        continue;
                    }
                    Ordering::Equal => {
                        let s = dom.sub(&a[i].coeff, &coeff);
                        if !dom.is_zero(&s) {
                            out.push(Term { coeff: s, mon });
                        }
                        i += 1;
                        break;
                    }
                    Ordering::Less => {}
                }
            }
            out.push(Term {
                coeff: dom.neg(&coeff),
                mon,
            });
            break;
        }
    }
    out.extend_from_slice(&a[i..]);
    out
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("polynomials from different rings")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("polynomials from different rings")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("polynomials from different rings")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&self.ring.domain().neg(&self.ring.domain().one()))
    }
}
