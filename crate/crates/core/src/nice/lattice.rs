//! Regular sequences, distributivity and families of ideals.

use crate::error::{Error, Result};
use crate::groebner::{buchberger_criterion, Ideal};
use crate::ideal::{ideal_intersection, is_regular_element, monomial_regular_sequence, MonomialIdeal};
use crate::monomial::Monomial;
use crate::poly::Polynomial;

use super::{is_gnice, Mode};

fn require_gnice(j: &Ideal, e: &Ideal, what: &str) -> Result<()> {
    if is_gnice(j, e, Mode::A)?.verdict {
        Ok(())
    } else {
        Err(Error::Precondition(format!("{what} is not a G-nice pair")))
    }
}

#[derive(Debug, Clone)]
pub struct RegularSequenceReport {
    /// `ini(f_1), ..., ini(f_r)` is regular on `S/ini(J)`.
    pub transfers: bool,
    /// `ini(J, f_1, ..., f_r) = ini(J) + (ini(f_1), ..., ini(f_r))`.
    pub initial_equality: bool,
    pub ini_j: MonomialIdeal,
    pub initial_monomials: Vec<Monomial>,
    pub ini_total: MonomialIdeal,
}

/// For a regular sequence `fs` on `S/J`, compare regularity of the leading
/// monomials on `S/ini(J)` with the initial-ideal equality; the two agree.
pub fn regular_sequence_transfer(j: &Ideal, fs: &[Polynomial]) -> Result<RegularSequenceReport> {
    let mut current = j.clone();
    for (k, f) in fs.iter().enumerate() {
        if f.ring() != j.ring() {
            return Err(Error::RingMismatch);
        }
        if f.is_zero() || !is_regular_element(f, &current)? {
            return Err(Error::NotRegularSequence { index: k + 1 });
        }
        current = current.extend([f.clone()])?;
    }
    let ini_j = j.initial_ideal()?;
    let initial_monomials: Vec<Monomial> =
        fs.iter().map(|f| f.leading_monomial().expect("nonzero").clone()).collect();
    let transfers = monomial_regular_sequence(&ini_j, &initial_monomials);
    let ini_total = current.initial_ideal()?;
    let initial_equality = ini_total == ini_j.sum(&MonomialIdeal::new(ini_j.nvars(), initial_monomials.iter().cloned()));
    if transfers != initial_equality {
        return Err(Error::Inconsistent(format!(
            "regularity of initial monomials ({transfers}) disagrees with initial-ideal equality ({initial_equality})"
        )));
    }
    Ok(RegularSequenceReport {
        transfers,
        initial_equality,
        ini_j,
        initial_monomials,
        ini_total,
    })
}

#[derive(Debug, Clone)]
pub struct DistributivityReport {
    /// `(J + E) ∩ (J + E') = J + (E ∩ E')`.
    pub lattice_equality: bool,
    /// `(J, E ∩ E')` is G-nice.
    pub meet_gnice: bool,
    /// `ini((J + E) ∩ (J + E')) = ini(J) + ini(E ∩ E')`.
    pub initial_equality: bool,
    pub ini_meet_of_sums: MonomialIdeal,
    pub ini_j_plus_meet: MonomialIdeal,
    pub ini_meet: MonomialIdeal,
    /// A minimal generator of `ini((J + E) ∩ (J + E'))` outside `ini(J + (E ∩ E'))`.
    pub witness: Option<Monomial>,
}

impl DistributivityReport {
    /// Both parts of the first condition.
    pub fn condition_a(&self) -> bool {
        self.lattice_equality && self.meet_gnice
    }
}

/// For G-nice pairs `(J, E)` and `(J, E')`, evaluate separately
/// `(J + E) ∩ (J + E') = J + (E ∩ E')`, the G-niceness of `(J, E ∩ E')`, and
/// the initial-ideal equality equivalent to their conjunction.
pub fn distributivity_check(j: &Ideal, e: &Ideal, e2: &Ideal) -> Result<DistributivityReport> {
    require_gnice(j, e, "(J, E)")?;
    require_gnice(j, e2, "(J, E')")?;
    let meet_of_sums = ideal_intersection(&j.sum(e)?, &j.sum(e2)?)?;
    let meet = ideal_intersection(e, e2)?;
    let j_plus_meet = j.sum(&meet)?;

    let lattice_equality = meet_of_sums.same_ideal(&j_plus_meet)?;
    let meet_gnice = is_gnice(j, &meet, Mode::A)?.verdict;
    let ini_meet_of_sums = meet_of_sums.initial_ideal()?;
    let ini_meet = meet.initial_ideal()?;
    let ini_j_plus_meet = j_plus_meet.initial_ideal()?;
    let initial_equality = ini_meet_of_sums == j.initial_ideal()?.sum(&ini_meet);
    let witness = ini_meet_of_sums.missing_from(&ini_j_plus_meet).next().cloned();

    let report = DistributivityReport {
        lattice_equality,
        meet_gnice,
        initial_equality,
        ini_meet_of_sums,
        ini_j_plus_meet,
        ini_meet,
        witness,
    };
    if report.condition_a() != initial_equality {
        return Err(Error::Inconsistent(
            "distributivity conditions (a) and (b) disagree".into(),
        ));
    }
    Ok(report)
}

#[derive(Debug, Clone)]
pub struct DualDistributivityReport {
    /// `J ∩ E + J ∩ E' = J ∩ (E + E')`.
    pub lattice_equality: bool,
    /// `(J, E + E')` is G-nice.
    pub sum_gnice: bool,
    /// `ini(J ∩ E + J ∩ E') = ini(J) ∩ ini(E + E')`.
    pub initial_equality: bool,
    pub ini_sum_of_meets: MonomialIdeal,
    pub ini_meet_with_sum: MonomialIdeal,
    /// A minimal generator of `ini(J ∩ (E + E'))` outside `ini(J ∩ E + J ∩ E')`.
    pub witness: Option<Monomial>,
}

impl DualDistributivityReport {
    pub fn condition_a(&self) -> bool {
        self.lattice_equality && self.sum_gnice
    }
}

/// The dual of [`distributivity_check`], with sums and intersections exchanged.
pub fn dual_distributivity_check(j: &Ideal, e: &Ideal, e2: &Ideal) -> Result<DualDistributivityReport> {
    require_gnice(j, e, "(J, E)")?;
    require_gnice(j, e2, "(J, E')")?;
    let sum_of_meets = ideal_intersection(j, e)?.sum(&ideal_intersection(j, e2)?)?;
    let e_sum = e.sum(e2)?;
    let meet_with_sum = ideal_intersection(j, &e_sum)?;

    let lattice_equality = sum_of_meets.same_ideal(&meet_with_sum)?;
    let sum_gnice = is_gnice(j, &e_sum, Mode::A)?.verdict;
    let ini_sum_of_meets = sum_of_meets.initial_ideal()?;
    let ini_meet_with_sum = meet_with_sum.initial_ideal()?;
    let initial_equality = ini_sum_of_meets == j.initial_ideal()?.intersection(&e_sum.initial_ideal()?);
    let witness = ini_meet_with_sum.missing_from(&ini_sum_of_meets).next().cloned();

    let report = DualDistributivityReport {
        lattice_equality,
        sum_gnice,
        initial_equality,
        ini_sum_of_meets,
        ini_meet_with_sum,
        witness,
    };
    if report.condition_a() != initial_equality {
        return Err(Error::Inconsistent(
            "dual distributivity conditions (a) and (b) disagree".into(),
        ));
    }
    Ok(report)
}

#[derive(Debug, Clone)]
pub struct FamilyReport {
    /// `E = ⋂ E_i`.
    pub intersection: MonomialIdeal,
    /// `(J, E)` is G-nice.
    pub gnice: bool,
    /// `⋂ (J + E_i) = J + E`.
    pub sums_commute: bool,
    /// The reduced basis of `J` together with `G(E)` is a Gröbner basis.
    pub union_is_groebner: bool,
}

/// For monomial `E_i` with every `(J, E_i)` G-nice, check that `(J, ⋂ E_i)` is
/// G-nice, that `⋂ (J + E_i) = J + ⋂ E_i`, and that the union of bases is a
/// Gröbner basis of that ideal.
pub fn monomial_family_intersection(j: &Ideal, es: &[MonomialIdeal]) -> Result<FamilyReport> {
    let ring = j.ring();
    let Some((first, rest)) = es.split_first() else {
        return Err(Error::Precondition("empty family of monomial ideals".into()));
    };
    for (k, ei) in es.iter().enumerate() {
        if ei.nvars() != ring.nvars() {
            return Err(Error::ArityMismatch {
                expected: ring.nvars(),
                found: ei.nvars(),
            });
        }
        require_gnice(j, &ei.to_ideal(ring)?, &format!("(J, E{})", k + 1))?;
    }
    let intersection = rest.iter().fold(first.clone(), |acc, ei| acc.intersection(ei));
    let e = intersection.to_ideal(ring)?;
    let gnice = is_gnice(j, &e, Mode::A)?.verdict;

    let mut meet = j.sum(&first.to_ideal(ring)?)?;
    for ei in rest {
        meet = ideal_intersection(&meet, &j.sum(&ei.to_ideal(ring)?)?)?;
    }
    let sums_commute = meet.same_ideal(&j.sum(&e)?)?;

    let union: Vec<Polynomial> = j.groebner()?.generators().iter().chain(e.gens()).cloned().collect();
    let union_is_groebner = buchberger_criterion(&union)?.is_none();

    if !(gnice && sums_commute && union_is_groebner) {
        return Err(Error::Inconsistent(format!(
            "monomial family: G-nice {gnice}, sums commute {sums_commute}, union is a basis {union_is_groebner}"
        )));
    }
    Ok(FamilyReport {
        intersection,
        gnice,
        sums_commute,
        union_is_groebner,
    })
}

#[derive(Debug, Clone)]
pub struct SumSplitReport {
    pub part: Ideal,
    pub complement: Ideal,
    /// `(Σ_{i∈X} E_i, Σ_{j∉X} E_j)` is G-nice.
    pub gnice: bool,
}

/// For pairwise G-nice `E_1, ..., E_m` and `X ⊆ {0, ..., m-1}`, check that
/// `(Σ_{i∈X} E_i, Σ_{j∉X} E_j)` is G-nice. Indices are 0-based.
pub fn gnice_sum_split(es: &[Ideal], x: &[usize]) -> Result<SumSplitReport> {
    let Some(ring) = es.first().map(|e| e.ring().clone()) else {
        return Err(Error::Precondition("empty family of ideals".into()));
    };
    if let Some(&bad) = x.iter().find(|&&i| i >= es.len()) {
        return Err(Error::Precondition(format!("index {bad} outside the family")));
    }
    for a in 0..es.len() {
        for b in a + 1..es.len() {
            require_gnice(&es[a], &es[b], &format!("(E{}, E{})", a + 1, b + 1))?;
        }
    }
    let mut part = Ideal::zero(&ring);
    let mut complement = Ideal::zero(&ring);
    for (i, e) in es.iter().enumerate() {
        if x.contains(&i) {
            part = part.sum(e)?;
        } else {
            complement = complement.sum(e)?;
        }
    }
    let gnice = is_gnice(&part, &complement, Mode::A)?.verdict;
    if !gnice {
        return Err(Error::Inconsistent("sum of pairwise G-nice ideals split into a non-nice pair".into()));
    }
    Ok(SumSplitReport {
        part,
        complement,
        gnice,
    })
}
