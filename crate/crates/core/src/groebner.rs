//! S-polynomials, normal forms and Buchberger's algorithm.

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::poly::{sub_multiple, PolyRing, Polynomial, Term};

/// `S(f, g) = lcm/ini(f) * f/lc(f) - lcm/ini(g) * g/lc(g)` with
/// `lcm = lcm(ini f, ini g)`. Leading terms cancel.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    if f.ring() != g.ring() {
        return Err(Error::RingMismatch);
    }
    let lf = f.leading_term().ok_or(Error::ZeroPolynomial("S-polynomial"))?;
    let lg = g.leading_term().ok_or(Error::ZeroPolynomial("S-polynomial"))?;
    let ring = f.ring();
    let dom = ring.domain();
    let lcm = lf.mon.lcm(&lg.mon);
    let uf = lcm.div(&lf.mon).expect("lcm is a multiple");
    let ug = lcm.div(&lg.mon).expect("lcm is a multiple");
    let inv_f = dom.inv(&lf.coeff).expect("nonzero leading coefficient");
    let inv_g = dom.inv(&lg.coeff).expect("nonzero leading coefficient");
    let left: Vec<Term> = f.terms()[1..]
        .iter()
        .map(|t| Term {
            coeff: dom.mul(&t.coeff, &inv_f),
            mon: t.mon.mul(&uf),
        })
        .collect();
    Ok(ring.poly_from_sorted(sub_multiple(ring, &left, &inv_g, &ug, &g.terms()[1..])))
}

struct Reducer<'a> {
    lead: &'a Monomial,
    lc_inv: Scalar,
    tail: &'a [Term],
}

fn reducers<'a>(basis: impl IntoIterator<Item = &'a Polynomial>) -> Vec<Reducer<'a>> {
    basis
        .into_iter()
        .filter_map(|b| {
            let lt = b.leading_term()?;
            Some(Reducer {
                lead: &lt.mon,
                lc_inv: b.ring().domain().inv(&lt.coeff).expect("nonzero leading coefficient"),
                tail: &b.terms()[1..],
            })
        })
        .collect()
}

/// Reduce a descending term list. Always cancels the highest reducible
/// monomial, using the first reducer (in list order) whose leading monomial
/// divides it. With `full == false` stops at the first irreducible term.
fn reduce_terms(ring: &PolyRing, mut work: Vec<Term>, reducers: &[Reducer<'_>], full: bool) -> Vec<Term> {
    let dom = ring.domain();
    let mut rem: Vec<Term> = Vec::new();
    let mut pos = 0;
    while pos < work.len() {
        let t = &work[pos];
        match reducers.iter().find(|r| r.lead.divides(&t.mon)) {
            Some(r) => {
                let q = t.mon.div(r.lead).expect("divisibility checked");
                let c = dom.mul(&t.coeff, &r.lc_inv);
                work = sub_multiple(ring, &work[pos + 1..], &c, &q, r.tail);
                pos = 0;
            }
            None if full => {
                rem.push(work[pos].clone());
                pos += 1;
            }
            None => {
                rem.extend(work.drain(pos..));
                return rem;
            }
        }
    }
    rem
}

/// The reduced normal form of `g` with respect to the list `basis`: no
/// monomial of the result is divisible by a leading monomial of `basis`.
/// Zero entries of `basis` are ignored; an empty basis returns `g`.
pub fn normal_form(g: &Polynomial, basis: &[Polynomial]) -> Result<Polynomial> {
    if basis.iter().any(|b| b.ring() != g.ring()) {
        return Err(Error::RingMismatch);
    }
    let reds = reducers(basis);
    Ok(g.ring().poly_from_sorted(reduce_terms(g.ring(), g.terms().to_vec(), &reds, true)))
}

/// Buchberger's criterion on a generating set: `None` if every pairwise
/// S-polynomial reduces to zero, otherwise the first nonzero remainder.
pub fn buchberger_criterion(gens: &[Polynomial]) -> Result<Option<Polynomial>> {
    let gens: Vec<&Polynomial> = gens.iter().filter(|g| !g.is_zero()).collect();
    let Some(first) = gens.first() else {
        return Ok(None);
    };
    if gens.iter().any(|g| g.ring() != first.ring()) {
        return Err(Error::RingMismatch);
    }
    let reds = reducers(gens.iter().copied());
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            let (a, b) = (gens[i].leading_monomial().unwrap(), gens[j].leading_monomial().unwrap());
            if a.is_coprime(b) {
                continue;
            }
            let s = s_polynomial(gens[i], gens[j])?;
            let r = reduce_terms(first.ring(), s.into_terms(), &reds, false);
            if !r.is_empty() {
                return Ok(Some(first.ring().poly_from_sorted(r)));
            }
        }
    }
    Ok(None)
}

/// A set of generators of an ideal. Zero generators are dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    ring: PolyRing,
    gens: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(ring: &PolyRing, gens: impl IntoIterator<Item = Polynomial>) -> Result<Ideal> {
        let mut out = Vec::new();
        for g in gens {
            if g.ring() != ring {
                return Err(Error::RingMismatch);
            }
            if !g.is_zero() {
                out.push(g);
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: out,
        })
    }

    pub fn parse<S: AsRef<str>>(ring: &PolyRing, gens: &[S]) -> Result<Ideal> {
        let polys = gens.iter().map(|s| ring.parse(s.as_ref())).collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, polys)
    }

    pub fn zero(ring: &PolyRing) -> Ideal {
        Ideal {
            ring: ring.clone(),
            gens: Vec::new(),
        }
    }

    pub fn unit(ring: &PolyRing) -> Ideal {
        Ideal {
            ring: ring.clone(),
            gens: vec![ring.one()],
        }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// The reduced Gröbner basis in the ring's order; empty for the zero ideal.
    pub fn groebner(&self) -> Result<GroebnerBasis> {
        if self.is_zero() {
            return Ok(GroebnerBasis {
                ring: self.ring.clone(),
                gens: Vec::new(),
                reduced: true,
            });
        }
        buchberger(self)
    }

    pub fn initial_ideal(&self) -> Result<MonomialIdeal> {
        Ok(self.groebner()?.initial_ideal())
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        self.groebner()?.contains(f)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(Ideal {
            ring: self.ring.clone(),
            gens: self.gens.iter().chain(&other.gens).cloned().collect(),
        })
    }

    /// Add generators to the ideal.
    pub fn extend(&self, extra: impl IntoIterator<Item = Polynomial>) -> Result<Ideal> {
        self.sum(&Ideal::new(&self.ring, extra)?)
    }

    pub fn is_subset(&self, other: &Ideal) -> Result<bool> {
        let gb = other.groebner()?;
        for g in &self.gens {
            if !gb.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Ideal equality, decided by comparing reduced Gröbner bases.
    pub fn same_ideal(&self, other: &Ideal) -> Result<bool> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(self.groebner()?.gens == other.groebner()?.gens)
    }

    pub fn reorder(&self, ring: &PolyRing) -> Result<Ideal> {
        Ok(Ideal {
            ring: ring.clone(),
            gens: self.gens.iter().map(|g| g.reorder(ring)).collect::<Result<_>>()?,
        })
    }

    /// Every generator has at most one term.
    pub(crate) fn has_monomial_generators(&self) -> bool {
        self.gens.iter().all(|g| g.len() == 1)
    }
}

/// A Gröbner basis of the ideal it generates, for the order of its ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: PolyRing,
    gens: Vec<Polynomial>,
    reduced: bool,
}

impl GroebnerBasis {
    /// Accept a caller-supplied generating set after checking Buchberger's
    /// criterion. The generators are kept as given (zeros dropped).
    pub fn from_generators(ring: &PolyRing, gens: Vec<Polynomial>) -> Result<GroebnerBasis> {
        let ideal = Ideal::new(ring, gens)?;
        if let Some(r) = buchberger_criterion(&ideal.gens)? {
            return Err(Error::NotGroebnerBasis(format!("S-polynomial remainder {r}")));
        }
        let reduced = is_reduced(&ideal.gens);
        Ok(GroebnerBasis {
            ring: ring.clone(),
            gens: ideal.gens,
            reduced,
        })
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.gens.iter().map(|g| g.leading_monomial().expect("basis elements are nonzero"))
    }

    pub fn initial_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(self.ring.nvars(), self.leading_monomials().cloned())
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        normal_form(f, &self.gens)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn to_ideal(&self) -> Ideal {
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
        }
    }

    /// Every generator has at most two terms.
    pub fn is_binomial(&self) -> bool {
        self.gens.iter().all(|g| g.len() <= 2)
    }
}

fn is_reduced(gens: &[Polynomial]) -> bool {
    gens.iter().enumerate().all(|(i, g)| {
        g.ring().domain().is_one(g.leading_coeff().unwrap())
            && gens.iter().enumerate().all(|(j, h)| {
                let lead = h.leading_monomial().unwrap();
                i == j || !g.support().any(|m| lead.divides(m))
            })
    })
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct Engine {
    ring: PolyRing,
    polys: Vec<Polynomial>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl Engine {
    fn lead(&self, i: usize) -> &Monomial {
        self.polys[i].leading_monomial().expect("basis elements are nonzero")
    }

    /// Gebauer–Möller installation of a new element `h`: the chain criterion
    /// prunes new pairs and old pairs, the coprime criterion drops pairs whose
    /// S-polynomials reduce to zero automatically.
    fn update(&mut self, h: Polynomial) {
        let hi = self.polys.len();
        self.polys.push(h);
        self.active.push(false);
        let lh = self.lead(hi).clone();

        let candidates: Vec<(usize, Monomial, bool)> = (0..hi)
            .filter(|&g| self.active[g])
            .map(|g| {
                let lg = self.lead(g);
                (g, lh.lcm(lg), lh.is_coprime(lg))
            })
            .collect();
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        for (k, (g, lcm, coprime)) in candidates.iter().enumerate() {
            let dominated = candidates[k + 1..].iter().any(|(_, l2, _)| l2.divides(lcm))
                || kept.iter().any(|(_, l2, _)| l2.divides(lcm));
            if *coprime || !dominated {
                kept.push((*g, lcm.clone(), *coprime));
            }
        }

        let polys = &self.polys;
        let lead = |i: usize| polys[i].leading_monomial().unwrap();
        self.pairs.retain(|p| {
            !(lh.divides(&p.lcm) && lead(p.i).lcm(&lh) != p.lcm && lead(p.j).lcm(&lh) != p.lcm)
        });
        self.pairs.extend(
            kept.into_iter()
                .filter(|(_, _, coprime)| !coprime)
                .map(|(g, lcm, _)| Pair { i: g, j: hi, lcm }),
        );

        for g in 0..hi {
            if self.active[g] && lh.divides(self.lead(g)) {
                self.active[g] = false;
            }
        }
        self.active[hi] = true;
    }

    /// Normal strategy: the pair with the smallest lcm.
    fn select(&mut self) -> Option<Pair> {
        let ring = &self.ring;
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| ring.cmp(&a.lcm, &b.lcm))
            .map(|(k, _)| k)?;
        Some(self.pairs.swap_remove(best))
    }

    fn reduce(&self, s: Polynomial) -> Polynomial {
        let reds = reducers((0..self.polys.len()).filter(|&i| self.active[i]).map(|i| &self.polys[i]));
        self.ring.poly_from_sorted(reduce_terms(&self.ring, s.into_terms(), &reds, true))
    }
}

/// Reduced Gröbner basis of a nonzero ideal in the order of its ring.
///
/// Fails with [`Error::EmptyIdeal`] for the zero ideal, and with
/// [`Error::ResourceLimit`] when the ring's pair or degree caps are exceeded.
pub fn buchberger(ideal: &Ideal) -> Result<GroebnerBasis> {
    if ideal.is_zero() {
        return Err(Error::EmptyIdeal);
    }
    let ring = ideal.ring().clone();
    let limits = ring.limits();
    let mut engine = Engine {
        ring: ring.clone(),
        polys: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };
    for g in ideal.gens() {
        let r = engine.reduce(g.clone());
        if !r.is_zero() {
            engine.update(r.monic());
        }
    }
    let mut processed = 0usize;
    while let Some(pair) = engine.select() {
        processed += 1;
        if processed > limits.max_pairs {
            return Err(Error::ResourceLimit(format!(
                "more than {} critical pairs",
                limits.max_pairs
            )));
        }
        let s = s_polynomial(&engine.polys[pair.i], &engine.polys[pair.j])?;
        let r = engine.reduce(s);
        if r.is_zero() {
            continue;
        }
        let degree = r.total_degree().unwrap_or(0);
        if degree > limits.max_degree {
            return Err(Error::ResourceLimit(format!(
                "basis element of degree {degree} exceeds the cap {}",
                limits.max_degree
            )));
        }
        engine.update(r.monic());
    }
    let active: Vec<Polynomial> = (0..engine.polys.len())
        .filter(|&i| engine.active[i])
        .map(|i| engine.polys[i].clone())
        .collect();
    Ok(GroebnerBasis {
        ring: ring.clone(),
        gens: reduce_basis(&ring, active),
        reduced: true,
    })
}

/// Minimalize and inter-reduce a Gröbner basis, then sort by leading
/// monomial, greatest first.
fn reduce_basis(ring: &PolyRing, gens: Vec<Polynomial>) -> Vec<Polynomial> {
    let mut minimal: Vec<Polynomial> = Vec::with_capacity(gens.len());
    for (i, g) in gens.iter().enumerate() {
        let lg = g.leading_monomial().unwrap();
        let redundant = gens.iter().enumerate().any(|(j, h)| {
            let lh = h.leading_monomial().unwrap();
            j != i && lh.divides(lg) && (lh != lg || j < i)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut out: Vec<Polynomial> = (0..minimal.len())
        .map(|i| {
            let reds = reducers(minimal.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, h)| h));
            ring.poly_from_sorted(reduce_terms(ring, minimal[i].terms().to_vec(), &reds, true))
                .monic()
        })
        .collect();
    out.sort_by(|a, b| ring.cmp(b.leading_monomial().unwrap(), a.leading_monomial().unwrap()));
    out
}
