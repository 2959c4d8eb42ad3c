#![allow(dead_code)]

use gnice_core::ideal::as_monomial_ideal;
use gnice_core::{Domain, Ideal, Monomial, MonomialIdeal, MonomialOrder, PolyRing, Polynomial};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const NAMES: [&str; 4] = ["x", "y", "z", "w"];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn gf() -> Domain {
    Domain::Prime(32003)
}

pub fn ring(n: usize, domain: Domain, order: MonomialOrder) -> PolyRing {
    PolyRing::new(&NAMES[..n], domain, order).unwrap()
}

pub fn qq(vars: &[&str], order: MonomialOrder) -> PolyRing {
    PolyRing::new(vars, Domain::Rationals, order).unwrap()
}

pub fn ideal(r: &PolyRing, gens: &[&str]) -> Ideal {
    Ideal::parse(r, gens).unwrap()
}

pub fn mono(r: &PolyRing, gens: &[&str]) -> MonomialIdeal {
    as_monomial_ideal(&ideal(r, gens)).unwrap().unwrap()
}

/// Lex or degrevlex with a shuffled variable precedence.
pub fn random_order(rng: &mut ChaCha8Rng, n: usize) -> MonomialOrder {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let base = if rng.gen_bool(0.5) {
        MonomialOrder::lex()
    } else {
        MonomialOrder::degrevlex()
    };
    base.with_precedence(perm).unwrap()
}

pub fn random_monomial(rng: &mut ChaCha8Rng, n: usize, max_deg: u32) -> Monomial {
    let deg = rng.gen_range(0..=max_deg);
    let mut exps = vec![0u32; n];
    for _ in 0..deg {
        exps[rng.gen_range(0..n)] += 1;
    }
    Monomial::new(exps)
}

/// A nonzero polynomial with small integer coefficients.
pub fn random_poly(rng: &mut ChaCha8Rng, r: &PolyRing, max_deg: u32, max_terms: usize) -> Polynomial {
    loop {
        let k = rng.gen_range(1..=max_terms);
        let terms = (0..k).map(|_| {
            let c = rng.gen_range(-5i64..=5);
            (r.domain().from_i64(c), random_monomial(rng, r.nvars(), max_deg))
        });
        let p = r.from_terms(terms).unwrap();
        if !p.is_zero() && !p.is_constant() {
            return p;
        }
    }
}

pub fn random_ideal(rng: &mut ChaCha8Rng, r: &PolyRing, max_gens: usize, max_deg: u32, max_terms: usize) -> Ideal {
    let k = rng.gen_range(1..=max_gens);
    Ideal::new(r, (0..k).map(|_| random_poly(rng, r, max_deg, max_terms))).unwrap()
}

/// A proper monomial ideal with nonconstant generators.
pub fn random_monomial_ideal(rng: &mut ChaCha8Rng, n: usize, max_gens: usize, max_deg: u32) -> MonomialIdeal {
    let k = rng.gen_range(1..=max_gens);
    let gens: Vec<Monomial> = (0..k)
        .map(|_| loop {
            let m = random_monomial(rng, n, max_deg);
            if !m.is_one() {
                break m;
            }
        })
        .collect();
    MonomialIdeal::new(n, gens)
}

/// An ideal generated by binomials `m1 - c*m2` and monomials.
pub fn random_binomial_ideal(rng: &mut ChaCha8Rng, r: &PolyRing, max_gens: usize, max_deg: u32) -> Ideal {
    let n = r.nvars();
    let k = rng.gen_range(1..=max_gens);
    let gens = (0..k).map(|_| loop {
        let a = random_monomial(rng, n, max_deg);
        let b = random_monomial(rng, n, max_deg);
        let c = r.domain().from_i64(rng.gen_range(-3i64..=3));
        let p = r
            .from_terms([(r.domain().one(), a), (r.domain().neg(&c), b)])
            .unwrap();
        if !p.is_zero() && !p.is_constant() {
            break p;
        }
    });
    Ideal::new(r, gens).unwrap()
}
