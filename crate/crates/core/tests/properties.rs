mod common;

use std::cmp::Ordering;

use common::*;
use gnice_core::groebner::{buchberger_criterion, normal_form};
use gnice_core::ideal::{as_monomial_ideal, ideal_intersection, monomial_intersection};
use gnice_core::nice::{hat_closure, is_gnice, is_snice, order_sweep, sharp_closure, tilde_closure, Mode};
use gnice_core::{Ideal, Monomial, MonomialIdeal, MonomialOrder, PolyRing, Polynomial};
use proptest::prelude::*;
use rand::seq::SliceRandom;

fn exps(n: usize) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0u32..6, n)
}

fn orders(n: usize) -> impl Strategy<Value = MonomialOrder> {
    let perm = Just((0..n).collect::<Vec<usize>>()).prop_shuffle();
    (0..3usize, 1..n, perm).prop_map(|(kind, split, p)| {
        let base = match kind {
            0 => MonomialOrder::lex(),
            1 => MonomialOrder::degrevlex(),
            _ => MonomialOrder::block(split),
        };
        base.with_precedence(p).unwrap()
    })
}

fn poly(r: &PolyRing, terms: &[(i64, Vec<u32>)]) -> Polynomial {
    r.from_terms(
        terms
            .iter()
            .map(|(c, e)| (r.domain().from_i64(*c), Monomial::new(e.iter().copied()))),
    )
    .unwrap()
}

fn terms(n: usize) -> impl Strategy<Value = Vec<(i64, Vec<u32>)>> {
    prop::collection::vec((-9i64..=9, prop::collection::vec(0u32..4, n)), 0..5)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn monomial_orders_are_admissible(order in orders(4), a in exps(4), b in exps(4), c in exps(4)) {
        let (a, b, c) = (Monomial::new(a), Monomial::new(b), Monomial::new(c));
        let ab = order.compare(&a, &b);
        prop_assert_eq!(ab, order.compare(&b, &a).reverse());
        prop_assert_eq!(ab == Ordering::Equal, a == b);
        prop_assert_eq!(order.compare(&a.mul(&c), &b.mul(&c)), ab);
        prop_assert_ne!(order.compare(&Monomial::one(4), &a), Ordering::Greater);
        if ab != Ordering::Greater && order.compare(&b, &c) != Ordering::Greater {
            prop_assert_ne!(order.compare(&a, &c), Ordering::Greater);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn ring_axioms(order in orders(3), f in terms(3), g in terms(3), h in terms(3)) {
        let r = ring(3, gf(), order);
        let (f, g, h) = (poly(&r, &f), poly(&r, &g), poly(&r, &h));
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert!((&f - &f).is_zero());
        prop_assert_eq!(&f * &r.one(), f.clone());
        if !f.is_zero() && !g.is_zero() {
            let q = (&f * &g).div_exact(&g).unwrap();
            prop_assert_eq!(q, Some(f.clone()));
        }
    }

    #[test]
    fn rational_text_round_trip(f in terms(3), den in 1i64..7) {
        let r = qq(&["x", "y", "z"], MonomialOrder::degrevlex());
        let f = poly(&r, &f);
        let scaled = f.scale(&r.domain().from_fraction(&1.into(), &den.into()).unwrap());
        prop_assert_eq!(r.parse(&scaled.to_string()).unwrap(), scaled);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn groebner_basis_is_canonical(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let n = rand::Rng::gen_range(&mut rng, 2..=3);
        let r = ring(n, gf(), random_order(&mut rng, n));
        let i = random_ideal(&mut rng, &r, 3, 3, 3);
        let gb = i.groebner().unwrap();
        prop_assert!(gb.is_reduced());
        prop_assert!(buchberger_criterion(gb.generators()).unwrap().is_none());

        let mut shuffled = i.gens().to_vec();
        shuffled.shuffle(&mut rng);
        // scaling a generator and adding a combination of others leaves the ideal unchanged
        let c = r.domain().from_i64(3);
        shuffled[0] = shuffled[0].scale(&c);
        if shuffled.len() > 1 {
            let extra = &shuffled[1] * &r.variable(&r.vars()[0]).unwrap();
            shuffled[0] = &shuffled[0] + &extra;
        }
        let again = Ideal::new(&r, shuffled).unwrap().groebner().unwrap();
        prop_assert_eq!(again.generators(), gb.generators());
    }

    #[test]
    fn normal_form_properties(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let n = rand::Rng::gen_range(&mut rng, 2..=3);
        let r = ring(n, gf(), random_order(&mut rng, n));
        let i = random_ideal(&mut rng, &r, 3, 3, 3);
        let gb = i.groebner().unwrap();
        let ini = gb.initial_ideal();
        let f = random_poly(&mut rng, &r, 4, 5);
        let nf = gb.normal_form(&f).unwrap();
        prop_assert!(nf.support().all(|m| !ini.contains(m)));
        prop_assert!(gb.contains(&(&f - &nf)).unwrap());
        prop_assert_eq!(gb.normal_form(&nf).unwrap(), nf.clone());
        let member = &f * &i.gens()[0];
        prop_assert!(normal_form(&member, gb.generators()).unwrap().is_zero());
    }

    #[test]
    fn membership_does_not_depend_on_order(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let n = rand::Rng::gen_range(&mut rng, 2..=3);
        let r = ring(n, gf(), random_order(&mut rng, n));
        let other = r.with_order(random_order(&mut rng, n)).unwrap();
        let i = random_ideal(&mut rng, &r, 2, 3, 3);
        let candidates = [
            random_poly(&mut rng, &r, 3, 3),
            &random_poly(&mut rng, &r, 2, 2) * &i.gens()[0],
        ];
        for f in candidates {
            let here = i.contains(&f).unwrap();
            let there = i.reorder(&other).unwrap().contains(&f.reorder(&other).unwrap()).unwrap();
            prop_assert_eq!(here, there);
        }
    }

    #[test]
    fn elimination_intersection_matches_lcm_oracle(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let n = rand::Rng::gen_range(&mut rng, 1..=4);
        let r = ring(n, gf(), random_order(&mut rng, n));
        let a = random_monomial_ideal(&mut rng, n, 4, 5);
        let b = random_monomial_ideal(&mut rng, n, 4, 5);
        let meet = ideal_intersection(&a.to_ideal(&r).unwrap(), &b.to_ideal(&r).unwrap()).unwrap();
        prop_assert_eq!(as_monomial_ideal(&meet).unwrap(), Some(monomial_intersection(&a, &b)));
    }

    #[test]
    fn intersection_is_contained_in_both(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let r = ring(2, gf(), random_order(&mut rng, 2));
        let i = random_ideal(&mut rng, &r, 2, 3, 3);
        let j = random_ideal(&mut rng, &r, 2, 3, 3);
        let meet = ideal_intersection(&i, &j).unwrap();
        prop_assert!(meet.is_subset(&i).unwrap() && meet.is_subset(&j).unwrap());
        let product = Ideal::new(&r, i.gens().iter().flat_map(|f| j.gens().iter().map(move |g| f * g))).unwrap();
        prop_assert!(product.is_subset(&meet).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(80))]

    #[test]
    fn monomial_pairs_are_always_nice(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let n = rand::Rng::gen_range(&mut rng, 2..=3);
        let r = ring(n, gf(), MonomialOrder::lex());
        let j = random_monomial_ideal(&mut rng, n, 3, 3).to_ideal(&r).unwrap();
        let e = random_monomial_ideal(&mut rng, n, 3, 3).to_ideal(&r).unwrap();
        let sweep = order_sweep(&j, &e, None).unwrap();
        prop_assert!(sweep.iter().all(|(_, v)| *v));
    }

    #[test]
    fn snice_implies_gnice(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let n = rand::Rng::gen_range(&mut rng, 2..=3);
        let r = ring(n, gf(), random_order(&mut rng, n));
        let j = random_ideal(&mut rng, &r, 2, 3, 3);
        let gb_j = j.groebner().unwrap();
        let e = random_ideal(&mut rng, &r, 2, 3, 2);
        let mut candidates = vec![e.clone(), tilde_closure(&gb_j, &e).unwrap().closure];
        candidates.push(j.sum(&e).unwrap());
        for c in candidates {
            if is_snice(&c, &gb_j).unwrap().snice {
                prop_assert!(is_gnice(&j, &c, Mode::All).unwrap().verdict);
            }
        }
    }

    #[test]
    fn snice_is_stable_under_intersection(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let r = ring(2, gf(), random_order(&mut rng, 2));
        let j = random_ideal(&mut rng, &r, 2, 3, 3);
        let gb_j = j.groebner().unwrap();
        let e1 = tilde_closure(&gb_j, &random_ideal(&mut rng, &r, 2, 3, 2)).unwrap().closure;
        let e2 = tilde_closure(&gb_j, &random_ideal(&mut rng, &r, 2, 3, 2)).unwrap().closure;
        prop_assert!(is_snice(&e1, &gb_j).unwrap().snice && is_snice(&e2, &gb_j).unwrap().snice);
        let meet = ideal_intersection(&e1, &e2).unwrap();
        prop_assert!(is_snice(&meet, &gb_j).unwrap().snice);
    }

    #[test]
    fn enlarging_within_the_same_sum_keeps_niceness(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let n = rand::Rng::gen_range(&mut rng, 2..=3);
        let r = ring(n, gf(), random_order(&mut rng, n));
        let j = random_ideal(&mut rng, &r, 2, 3, 3);
        let f = tilde_closure(&j.groebner().unwrap(), &random_ideal(&mut rng, &r, 2, 3, 2)).unwrap().closure;
        // F ⊆ E ⊆ J + F, so J + E = J + F
        let extra = &(&random_poly(&mut rng, &r, 2, 2) * &j.gens()[0])
            + &(&random_poly(&mut rng, &r, 2, 2) * f.gens().first().unwrap_or(&r.zero()));
        let e = f.extend([extra]).unwrap();
        prop_assert!(j.sum(&e).unwrap().same_ideal(&j.sum(&f).unwrap()).unwrap());
        prop_assert!(is_gnice(&j, &f, Mode::A).unwrap().verdict);
        prop_assert!(is_gnice(&j, &e, Mode::Both).unwrap().verdict);
    }

    #[test]
    fn hat_closure_is_minimal(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let n = rand::Rng::gen_range(&mut rng, 2..=3);
        let r = ring(n, gf(), random_order(&mut rng, n));
        let j = random_ideal(&mut rng, &r, 2, 3, 3);
        let e = random_monomial_ideal(&mut rng, n, 2, 3);
        let hat = hat_closure(&j, &e).unwrap().closure;
        prop_assert!(e.is_subset(&hat));
        let mut partners: Vec<MonomialIdeal> = (0..6)
            .map(|_| e.sum(&random_monomial_ideal(&mut rng, n, 3, 2)))
            .collect();
        partners.push(sharp_closure(&j.groebner().unwrap(), &e).unwrap().closure);
        for f in partners {
            if is_gnice(&j, &f.to_ideal(&r).unwrap(), Mode::A).unwrap().verdict {
                prop_assert!(hat.is_subset(&f));
            }
        }
    }

    #[test]
    fn closures_are_idempotent(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let n = rand::Rng::gen_range(&mut rng, 2..=3);
        let r = ring(n, gf(), random_order(&mut rng, n));
        let j = random_ideal(&mut rng, &r, 2, 3, 3);
        let gb_j = j.groebner().unwrap();
        let e = random_monomial_ideal(&mut rng, n, 2, 3);
        let hat = hat_closure(&j, &e).unwrap().closure;
        prop_assert_eq!(hat_closure(&j, &hat).unwrap().closure, hat);
        let sharp = sharp_closure(&gb_j, &e).unwrap();
        prop_assert_eq!(sharp_closure(&gb_j, &sharp.closure).unwrap().closure, sharp.closure.clone());
        let tilde = tilde_closure(&gb_j, &sharp.tilde).unwrap();
        prop_assert!(tilde.closure.same_ideal(&sharp.tilde).unwrap());
        prop_assert_eq!(tilde.trace.iterations(), 0);
    }
}
