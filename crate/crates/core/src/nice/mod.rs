//! Gröbner-nice and S-nice pairs of ideals.
//!
//! `(J, E)` is G-nice when `ini(J + E) = ini(J) + ini(E)`. This is equivalent
//! to `ini(J ∩ E) = ini(J) ∩ ini(E)` and to the union of Gröbner bases of `J`
//! and `E` being a Gröbner basis of `J + E`; [`is_gnice`] can evaluate any of
//! the three and cross-checks them against each other.

mod closure;
mod lattice;
mod snice;

use std::collections::BTreeMap;

pub use closure::{
    hat_closure, nf_ideal, sharp_closure, tilde_closure, ClosureStep, ClosureTrace, HatClosure, NfIdeal,
    SharpClosure, TildeClosure,
};
pub use lattice::{
    distributivity_check, dual_distributivity_check, gnice_sum_split, monomial_family_intersection,
    regular_sequence_transfer, DistributivityReport, DualDistributivityReport, FamilyReport,
    RegularSequenceReport, SumSplitReport,
};
pub use snice::{is_snice, SniceReport};

use crate::error::{Error, Result};
use crate::groebner::{buchberger_criterion, Ideal};
use crate::ideal::{ideal_intersection, MonomialIdeal};
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::{PolyRing, Polynomial};

/// The equivalent characterizations of a G-nice pair that are decided directly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Condition {
    /// `ini(J + E) = ini(J) + ini(E)`
    A,
    /// The union of the reduced Gröbner bases of `J` and `E` is a Gröbner basis.
    C,
    /// `ini(J ∩ E) = ini(J) ∩ ini(E)`
    D,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    A,
    C,
    D,
    /// A and D.
    Both,
    /// A, C and D.
    All,
}

impl Mode {
    fn conditions(self) -> &'static [Condition] {
        match self {
            Mode::A => &[Condition::A],
            Mode::C => &[Condition::C],
            Mode::D => &[Condition::D],
            Mode::Both => &[Condition::A, Condition::D],
            Mode::All => &[Condition::A, Condition::C, Condition::D],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// A minimal generator of `ini(J + E)` outside `ini(J) + ini(E)`.
    MissingFromSum(Monomial),
    /// A minimal generator of `ini(J) ∩ ini(E)` outside `ini(J ∩ E)`.
    MissingFromIntersection(Monomial),
    /// An S-polynomial of the union of bases with nonzero remainder (the remainder).
    NonzeroRemainder(Polynomial),
}

impl Witness {
    pub fn display(&self, ring: &PolyRing) -> String {
        match self {
            Witness::MissingFromSum(m) | Witness::MissingFromIntersection(m) => {
                m.display(ring.vars()).to_string()
            }
            Witness::NonzeroRemainder(p) => p.to_string(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct NicenessReport {
    pub verdict: bool,
    pub conditions: BTreeMap<Condition, bool>,
    pub witness: Option<Witness>,
    pub order: MonomialOrder,
    pub ini_j: MonomialIdeal,
    pub ini_e: MonomialIdeal,
    /// `ini(J + E)`, when condition A was evaluated.
    pub ini_sum: Option<MonomialIdeal>,
    /// `ini(J ∩ E)`, when condition D was evaluated.
    pub ini_intersection: Option<MonomialIdeal>,
}

/// Decide whether `(J, E)` is G-nice for the order of their ring.
///
/// Every condition requested by `mode` is evaluated independently; if two of
/// them disagree the result is [`Error::Inconsistent`].
pub fn is_gnice(j: &Ideal, e: &Ideal, mode: Mode) -> Result<NicenessReport> {
    if j.ring() != e.ring() {
        return Err(Error::RingMismatch);
    }
    let gb_j = j.groebner()?;
    let gb_e = e.groebner()?;
    let ini_j = gb_j.initial_ideal();
    let ini_e = gb_e.initial_ideal();
    let mut report = NicenessReport {
        verdict: false,
        conditions: BTreeMap::new(),
        witness: None,
        order: j.ring().order().clone(),
        ini_j,
        ini_e,
        ini_sum: None,
        ini_intersection: None,
    };

    for &cond in mode.conditions() {
        let (holds, witness) = match cond {
            Condition::A => {
                let ini_sum = j.sum(e)?.initial_ideal()?;
                let target = report.ini_j.sum(&report.ini_e);
                let missing = ini_sum.missing_from(&target).next().cloned();
                report.ini_sum = Some(ini_sum);
                (missing.is_none(), missing.map(Witness::MissingFromSum))
            }
            Condition::D => {
                let ini_meet = ideal_intersection(j, e)?.initial_ideal()?;
                let target = report.ini_j.intersection(&report.ini_e);
                let missing = target.missing_from(&ini_meet).next().cloned();
                report.ini_intersection = Some(ini_meet);
                (missing.is_none(), missing.map(Witness::MissingFromIntersection))
            }
            Condition::C => {
                let union: Vec<Polynomial> =
                    gb_j.generators().iter().chain(gb_e.generators()).cloned().collect();
                let remainder = buchberger_criterion(&union)?;
                (remainder.is_none(), remainder.map(Witness::NonzeroRemainder))
            }
        };
        report.conditions.insert(cond, holds);
        if report.witness.is_none() {
            report.witness = witness;
        }
    }

    let mut verdicts = report.conditions.values();
    let first = *verdicts.next().expect("at least one condition");
    if verdicts.any(|v| *v != first) {
        return Err(Error::Inconsistent(format!(
            "equivalent niceness conditions disagree: {:?}",
            report.conditions
        )));
    }
    report.verdict = first;
    Ok(report)
}

/// Largest number of variables for which the default sweep enumerates all
/// variable permutations.
pub const MAX_SWEEP_VARIABLES: usize = 6;

/// Lex and degrevlex under every permutation of the variables.
pub fn default_sweep_orders(nvars: usize) -> Result<Vec<MonomialOrder>> {
    if nvars > MAX_SWEEP_VARIABLES {
        return Err(Error::ResourceLimit(format!(
            "order sweep over {nvars}! permutations (cap is {MAX_SWEEP_VARIABLES} variables)"
        )));
    }
    let perms = permutations(nvars);
    let mut orders = Vec::with_capacity(2 * perms.len());
    for base in [MonomialOrder::lex(), MonomialOrder::degrevlex()] {
        for p in &perms {
            orders.push(base.clone().with_precedence(p.clone())?);
        }
    }
    Ok(orders)
}

/// All permutations of `0..n` in lexicographic order.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        out.push(current.clone());
        let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).unwrap();
        current.swap(i - 1, j);
        current[i..].reverse();
    }
}

/// G-niceness of `(J, E)` under each of the given orders (default: every
/// lex and degrevlex order). A finite sample, not a decision over all orders.
pub fn order_sweep(j: &Ideal, e: &Ideal, orders: Option<&[MonomialOrder]>) -> Result<Vec<(MonomialOrder, bool)>> {
    let defaults;
    let orders = match orders {
        Some(o) => o,
        None => {
            defaults = default_sweep_orders(j.ring().nvars())?;
            &defaults
        }
    };
    orders
        .iter()
        .map(|order| {
            let ring = j.ring().with_order(order.clone())?;
            let report = is_gnice(&j.reorder(&ring)?, &e.reorder(&ring)?, Mode::A)?;
            Ok((order.clone(), report.verdict))
        })
        .collect()
}
