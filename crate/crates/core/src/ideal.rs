//! Ideal-level operations: monomial ideals, intersections, colon ideals and
//! regularity tests.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::{PolyRing, Polynomial};

/// A monomial ideal, stored by its unique minimal generating set `G(M)`.
///
/// Generators are kept in a canonical order (exponent vectors compared
/// left to right, greatest first), so two equal ideals are `==`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

fn canonical(a: &Monomial, b: &Monomial) -> Ordering {
    b.exponents().cmp(a.exponents())
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> MonomialIdeal {
        let mut all: Vec<Monomial> = gens.into_iter().collect();
        assert!(all.iter().all(|m| m.nvars() == nvars), "monomial arity mismatch");
        all.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| canonical(a, b)));
        all.dedup();
        let mut minimal: Vec<Monomial> = Vec::with_capacity(all.len());
        for m in all {
            // sorted by degree, so any divisor of m is already in `minimal`
            if !minimal.iter().any(|g| g.divides(&m)) {
                minimal.push(m);
            }
        }
        minimal.sort_by(canonical);
        MonomialIdeal { nvars, gens: minimal }
    }

    pub fn zero(nvars: usize) -> MonomialIdeal {
        MonomialIdeal {
            nvars,
            gens: Vec::new(),
        }
    }

    pub fn unit(nvars: usize) -> MonomialIdeal {
        MonomialIdeal {
            nvars,
            gens: vec![Monomial::one(nvars)],
        }
    }

    /// The ideal generated by every monomial occurring in the given polynomials.
    pub fn from_supports<'a>(nvars: usize, polys: impl IntoIterator<Item = &'a Polynomial>) -> MonomialIdeal {
        MonomialIdeal::new(nvars, polys.into_iter().flat_map(|p| p.support().cloned()))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Minimal generators `G(M)`.
    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn is_subset(&self, other: &MonomialIdeal) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        MonomialIdeal::new(self.nvars, self.gens.iter().chain(&other.gens).cloned())
    }

    /// Intersection via pairwise lcms of minimal generators.
    pub fn intersection(&self, other: &MonomialIdeal) -> MonomialIdeal {
        MonomialIdeal::new(
            self.nvars,
            self.gens
                .iter()
                .flat_map(|a| other.gens.iter().map(move |b| a.lcm(b))),
        )
    }

    /// `(M : m)`, generated by `g / gcd(g, m)` for `g` in `G(M)`.
    pub fn colon(&self, m: &Monomial) -> MonomialIdeal {
        MonomialIdeal::new(self.nvars, self.gens.iter().map(|g| g.colon(m)))
    }

    /// Generators of `self` that are not in `other`.
    pub fn missing_from<'a>(&'a self, other: &'a MonomialIdeal) -> impl Iterator<Item = &'a Monomial> + 'a {
        self.gens.iter().filter(move |g| !other.contains(g))
    }

    pub fn to_ideal(&self, ring: &PolyRing) -> Result<Ideal> {
        if ring.nvars() != self.nvars {
            return Err(Error::ArityMismatch {
                expected: ring.nvars(),
                found: self.nvars,
            });
        }
        Ideal::new(ring, self.gens.iter().map(|m| ring.monomial(m.clone())))
    }

    /// `(x*y, y^3)`, or `(0)` for the zero ideal.
    pub fn display<S: AsRef<str>>(&self, names: &[S]) -> String {
        if self.gens.is_empty() {
            return "(0)".to_string();
        }
        let parts: Vec<String> = self.gens.iter().map(|m| m.display(names).to_string()).collect();
        format!("({})", parts.join(", "))
    }
}

/// `I + J`: the concatenated generators.
pub fn ideal_sum(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    i.sum(j)
}

fn fresh_variable(ring: &PolyRing) -> String {
    if ring.var_index("t").is_none() {
        return "t".to_string();
    }
    (0..)
        .map(|k| format!("t{k}"))
        .find(|name| ring.var_index(name).is_none())
        .expect("some name is free")
}

/// `I ∩ J` by eliminating `t` from `t*I + (1-t)*J`.
///
/// The computation runs in `K[t, x_1..x_n]` under a block order with `t`
/// alone in the first block. The result's generators are the reduced
/// Gröbner basis of the intersection in the order of the input ring.
pub fn ideal_intersection(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    let ring = i.ring();
    if ring != j.ring() {
        return Err(Error::RingMismatch);
    }
    if i.is_zero() || j.is_zero() {
        return Ok(Ideal::zero(ring));
    }
    let mut names = vec![fresh_variable(ring)];
    names.extend(ring.vars().iter().cloned());
    let ext = PolyRing::new(&names, ring.domain(), MonomialOrder::block(1))?.with_limits(ring.limits());
    let t = ext.monomial(Monomial::var(names.len(), 0));
    let one_minus_t = &ext.one() - &t;
    let lift = |f: &Polynomial| f.map_monomials(&ext, |m| m.prepend(0));
    let gens = i
        .gens()
        .iter()
        .map(|f| &t * &lift(f))
        .chain(j.gens().iter().map(|g| &one_minus_t * &lift(g)));
    let gb = Ideal::new(&ext, gens)?.groebner()?;
    let eliminated = gb
        .generators()
        .iter()
        .filter(|g| g.support().all(|m| m.exponents()[0] == 0))
        .map(|g| g.map_monomials(ring, |m| m.drop_leading(1)));
    let result = Ideal::new(ring, eliminated)?;
    Ok(result.groebner()?.to_ideal())
}

/// Intersection of monomial ideals through lcms of generators; independent of
/// the elimination route.
pub fn monomial_intersection(m: &MonomialIdeal, n: &MonomialIdeal) -> MonomialIdeal {
    m.intersection(n)
}

/// `(J : f)`, computed as `(J ∩ (f)) / f`.
pub fn ideal_colon(j: &Ideal, f: &Polynomial) -> Result<Ideal> {
    if f.ring() != j.ring() {
        return Err(Error::RingMismatch);
    }
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("colon ideal"));
    }
    let principal = Ideal::new(j.ring(), [f.clone()])?;
    let meet = ideal_intersection(j, &principal)?;
    let quotients = meet
        .gens()
        .iter()
        .map(|g| {
            g.div_exact(f)?
                .ok_or_else(|| Error::DivisionFailure(format!("{f} does not divide {g}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Ideal::new(j.ring(), quotients)?.groebner()?.to_ideal())
}

/// Whether multiplication by `f` is injective on `S/J`, i.e. `(J : f) = J`.
/// An `f` inside a proper ideal `J` is reported as not regular.
pub fn is_regular_element(f: &Polynomial, j: &Ideal) -> Result<bool> {
    ideal_colon(j, f)?.same_ideal(j)
}

/// Whether `ms` is a regular sequence on `S/M`: each `m_i` satisfies
/// `(M_i : m_i) = M_i` with `M_i = M + (m_1, ..., m_{i-1})`.
pub fn monomial_regular_sequence(m: &MonomialIdeal, ms: &[Monomial]) -> bool {
    let mut current = m.clone();
    for mi in ms {
        if current.colon(mi) != current {
            return false;
        }
        current = current.sum(&MonomialIdeal::new(m.nvars(), [mi.clone()]));
    }
    true
}

/// The reduced Gröbner basis consists of polynomials with at most two terms.
pub fn is_binomial_ideal(j: &Ideal) -> Result<bool> {
    Ok(j.groebner()?.is_binomial())
}

/// The reduced Gröbner basis consists of single terms.
pub fn is_monomial_ideal(i: &Ideal) -> Result<bool> {
    Ok(i.groebner()?.generators().iter().all(|g| g.len() == 1))
}

/// The monomial ideal generated by `i`, when `i` is one.
pub fn as_monomial_ideal(i: &Ideal) -> Result<Option<MonomialIdeal>> {
    if i.has_monomial_generators() {
        return Ok(Some(MonomialIdeal::from_supports(i.ring().nvars(), i.gens())));
    }
    let gb = i.groebner()?;
    if gb.generators().iter().all(|g| g.len() == 1) {
        Ok(Some(gb.initial_ideal()))
    } else {
        Ok(None)
    }
}
