//! Closure operators that enlarge `E` until it forms a nice pair with `J`.

use crate::error::{Error, Result};
use crate::groebner::{s_polynomial, GroebnerBasis, Ideal};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::poly::Polynomial;

use super::{is_gnice, Mode};

#[derive(Debug, Clone)]
pub struct ClosureStep<I, A> {
    pub index: usize,
    pub snapshot: I,
    /// Generators adjoined to the previous snapshot; empty at index 0.
    pub added: Vec<A>,
}

/// An ascending chain `E_0 ⊆ E_1 ⊆ ...` whose last two snapshots coincide.
#[derive(Debug, Clone)]
pub struct ClosureTrace<I, A> {
    pub steps: Vec<ClosureStep<I, A>>,
    pub fixed_point: I,
}

impl<I: Clone, A> ClosureTrace<I, A> {
    fn start(initial: I) -> Self {
        ClosureTrace {
            steps: vec![ClosureStep {
                index: 0,
                snapshot: initial.clone(),
                added: Vec::new(),
            }],
            fixed_point: initial,
        }
    }

    fn push(&mut self, snapshot: I, added: Vec<A>) {
        self.steps.push(ClosureStep {
            index: self.steps.len(),
            snapshot: snapshot.clone(),
            added,
        });
        self.fixed_point = snapshot;
    }

    /// Number of steps that enlarged the ideal.
    pub fn iterations(&self) -> usize {
        self.steps.len().saturating_sub(2)
    }
}

fn check_iterations(trace_len: usize, limit: usize, operation: &'static str) -> Result<()> {
    // the trace holds the initial snapshot plus one entry per completed round
    if trace_len > limit {
        return Err(Error::IterationLimit { operation, limit });
    }
    Ok(())
}

/// Membership of a polynomial in a monomial ideal: every term must lie in it.
fn monomial_ideal_contains(m: &MonomialIdeal, f: &Polynomial) -> bool {
    f.support().all(|t| m.contains(t))
}

#[derive(Debug, Clone)]
pub struct HatClosure {
    pub closure: MonomialIdeal,
    pub trace: ClosureTrace<MonomialIdeal, Monomial>,
    /// Whether `J + Ê = J + E`. Always true for binomial `J`.
    pub sum_preserved: bool,
}

/// `Ê`: the smallest monomial ideal containing `E` that forms a G-nice pair with `J`.
///
/// Each round adjoins the minimal generators of `ini(J + E_i)` lying outside
/// `ini(J) + E_i`; every such generator lies in any monomial `F ⊇ E_i` with
/// `(J, F)` G-nice.
pub fn hat_closure(j: &Ideal, e: &MonomialIdeal) -> Result<HatClosure> {
    let ring = j.ring();
    if e.nvars() != ring.nvars() {
        return Err(Error::ArityMismatch {
            expected: ring.nvars(),
            found: e.nvars(),
        });
    }
    let limit = ring.limits().max_iterations;
    let gb_j = j.groebner()?;
    let ini_j = gb_j.initial_ideal();
    let mut trace = ClosureTrace::start(e.clone());
    let mut current = e.clone();
    loop {
        check_iterations(trace.steps.len(), limit, "hat closure")?;
        let ini_sum = j.sum(&current.to_ideal(ring)?)?.initial_ideal()?;
        let target = ini_j.sum(&current);
        let added: Vec<Monomial> = ini_sum.missing_from(&target).cloned().collect();
        let done = added.is_empty();
        current = current.sum(&MonomialIdeal::new(ring.nvars(), added.iter().cloned()));
        trace.push(current.clone(), added);
        if done {
            break;
        }
    }

    let sum_preserved = j.sum(&current.to_ideal(ring)?)?.same_ideal(&j.sum(&e.to_ideal(ring)?)?)?;
    if gb_j.is_binomial() && !sum_preserved {
        return Err(Error::Inconsistent("binomial J but J + Ê differs from J + E".into()));
    }
    Ok(HatClosure {
        closure: current,
        trace,
        sum_preserved,
    })
}

#[derive(Debug, Clone)]
pub struct TildeClosure {
    /// `Ẽ`, generated by its reduced Gröbner basis.
    pub closure: Ideal,
    pub trace: ClosureTrace<Ideal, Polynomial>,
}

/// `Ẽ`: the smallest ideal containing `E` that is S-nice with respect to `gb_j`.
///
/// Iterates `E_{i+1} = E_i + (S(f, g) : f ∈ gb_j, g ∈ reduced GB of E_i)`
/// and stops when consecutive reduced bases agree.
pub fn tilde_closure(gb_j: &GroebnerBasis, e: &Ideal) -> Result<TildeClosure> {
    let ring = e.ring();
    if ring != gb_j.ring() {
        return Err(Error::RingMismatch);
    }
    let limit = ring.limits().max_iterations;
    let mut current = e.groebner()?;
    let mut trace = ClosureTrace::start(current.to_ideal());
    loop {
        check_iterations(trace.steps.len(), limit, "S-nice closure")?;
        let mut added = Vec::new();
        for f in gb_j.generators() {
            for g in current.generators() {
                let s = s_polynomial(f, g)?;
                if !current.contains(&s)? && !added.contains(&s) {
                    added.push(s);
                }
            }
        }
        if added.is_empty() {
            trace.push(current.to_ideal(), added);
            break;
        }
        current = current.to_ideal().extend(added.iter().cloned())?.groebner()?;
        trace.push(current.to_ideal(), added);
    }

    let closure = current.to_ideal();
    let j = gb_j.to_ideal();
    if !j.sum(&closure)?.same_ideal(&j.sum(e)?)? {
        return Err(Error::Inconsistent("J + Ẽ differs from J + E".into()));
    }
    Ok(TildeClosure { closure, trace })
}

#[derive(Debug, Clone)]
pub struct SharpClosure {
    pub closure: MonomialIdeal,
    pub trace: ClosureTrace<MonomialIdeal, Monomial>,
    /// `Ẽ` of the input, used for the chain `E ⊆ Ẽ ⊆ E♯`.
    pub tilde: Ideal,
    /// `Ê` of the input with respect to the ideal generated by `gb_j`.
    pub hat: MonomialIdeal,
}

/// `E♯`: the smallest monomial ideal containing `E` that is S-nice with
/// respect to `gb_j`.
///
/// Alternates the S-nice closure with taking the ideal of all occurring
/// monomials until nothing new appears.
pub fn sharp_closure(gb_j: &GroebnerBasis, e: &MonomialIdeal) -> Result<SharpClosure> {
    let ring = gb_j.ring();
    if e.nvars() != ring.nvars() {
        return Err(Error::ArityMismatch {
            expected: ring.nvars(),
            found: e.nvars(),
        });
    }
    let limit = ring.limits().max_iterations;
    let mut trace = ClosureTrace::start(e.clone());
    let mut current = e.clone();
    let mut first_tilde = None;
    loop {
        check_iterations(trace.steps.len(), limit, "S-nice monomial closure")?;
        let tilde = tilde_closure(gb_j, &current.to_ideal(ring)?)?.closure;
        let next = MonomialIdeal::from_supports(ring.nvars(), tilde.gens()).sum(&current);
        first_tilde.get_or_insert(tilde);
        let added: Vec<Monomial> = next.missing_from(&current).cloned().collect();
        let done = added.is_empty();
        current = next;
        trace.push(current.clone(), added);
        if done {
            break;
        }
    }
    let tilde = first_tilde.expect("at least one round");

    let hat = hat_closure(&gb_j.to_ideal(), e)?.closure;
    if !tilde.gens().iter().all(|g| monomial_ideal_contains(&current, g)) {
        return Err(Error::Inconsistent("Ẽ is not contained in E♯".into()));
    }
    if !hat.is_subset(&current) {
        return Err(Error::Inconsistent("Ê is not contained in E♯".into()));
    }
    if gb_j.is_binomial() && !tilde.same_ideal(&current.to_ideal(ring)?)? {
        return Err(Error::Inconsistent("binomial basis but Ẽ differs from E♯".into()));
    }
    Ok(SharpClosure {
        closure: current,
        trace,
        tilde,
        hat,
    })
}

#[derive(Debug, Clone)]
pub struct NfIdeal {
    /// Generated by its reduced Gröbner basis.
    pub ideal: Ideal,
    /// `J + N = J + E`.
    pub sum_preserved: bool,
    /// `(J, N)` is G-nice.
    pub gnice: bool,
}

/// An ideal `N` of `gb_j`-reduced normal forms with `J + N = J + E` and
/// `(J, N)` G-nice.
///
/// `N` is generated by the normal forms of the reduced Gröbner bases of `E`
/// and of `J + E`. Elements of the latter whose leading monomial avoids
/// `ini(J)` are their own normal forms, so `ini(J + N) ⊆ ini(J) + ini(N)`.
pub fn nf_ideal(gb_j: &GroebnerBasis, e: &Ideal) -> Result<NfIdeal> {
    let ring = e.ring();
    if ring != gb_j.ring() {
        return Err(Error::RingMismatch);
    }
    let j = gb_j.to_ideal();
    let sum = j.sum(e)?;
    let mut gens = Vec::new();
    for g in e.groebner()?.generators().iter().chain(sum.groebner()?.generators()) {
        let r = gb_j.normal_form(g)?;
        if !r.is_zero() {
            gens.push(r);
        }
    }
    let ideal = Ideal::new(ring, gens)?.groebner()?.to_ideal();
    let sum_preserved = j.sum(&ideal)?.same_ideal(&sum)?;
    let gnice = is_gnice(&j, &ideal, Mode::A)?.verdict;
    if !(sum_preserved && gnice) {
        return Err(Error::Inconsistent(format!(
            "normal-form ideal: sum preserved {sum_preserved}, G-nice {gnice}"
        )));
    }
    Ok(NfIdeal {
        ideal,
        sum_preserved,
        gnice,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Domain;
    use crate::order::MonomialOrder;
    use crate::poly::PolyRing;

    fn running() -> (PolyRing, Ideal) {
        let r = PolyRing::new(&["x", "y", "z"], Domain::Rationals, MonomialOrder::degrevlex()).unwrap();
        let j = Ideal::parse(&r, &["x^2+y^2+z^2"]).unwrap();
        (r, j)
    }

    fn mono(r: &PolyRing, gens: &[&str]) -> MonomialIdeal {
        as_mono(&Ideal::parse(r, gens).unwrap())
    }

    fn as_mono(i: &Ideal) -> MonomialIdeal {
        crate::ideal::as_monomial_ideal(i).unwrap().unwrap()
    }

    #[test]
    fn hat_running_example() {
        let (r, j) = running();
        let h = hat_closure(&j, &mono(&r, &["x*y"])).unwrap();
        assert_eq!(h.closure, mono(&r, &["x*y", "y^3", "y*z^2"]));
        let snaps: Vec<_> = h.trace.steps.iter().map(|s| s.snapshot.display(r.vars())).collect();
        assert_eq!(snaps, ["(x*y)", "(x*y, y^3)", "(x*y, y^3, y*z^2)", "(x*y, y^3, y*z^2)"]);
        assert_eq!(h.trace.iterations(), 2);
        assert!(!h.sum_preserved);
    }

    #[test]
    fn hat_of_nice_pair_is_identity() {
        let r = PolyRing::new(&["x", "y"], Domain::Rationals, MonomialOrder::lex()).unwrap();
        let j = Ideal::parse(&r, &["x^2", "y^3"]).unwrap();
        let e = mono(&r, &["x*y"]);
        let h = hat_closure(&j, &e).unwrap();
        assert_eq!(h.closure, e);
        assert_eq!(h.trace.iterations(), 0);
        assert!(h.sum_preserved);
    }

    #[test]
    fn hat_binomial_example() {
        let r = PolyRing::new(&["x", "y", "z"], Domain::Rationals, MonomialOrder::lex()).unwrap();
        let j = Ideal::parse(&r, &["x^2-y^2", "z^2"]).unwrap();
        let h = hat_closure(&j, &mono(&r, &["x*y"])).unwrap();
        // z^2 already lies in ini(J), so the larger nice partner (x*y, y^3, z^2) is not minimal
        assert_eq!(h.closure, mono(&r, &["x*y", "y^3"]));
        assert!(h.sum_preserved);
    }

    #[test]
    fn tilde_examples() {
        let (r, j) = running();
        let gb = j.groebner().unwrap();
        let t = tilde_closure(&gb, &Ideal::parse(&r, &["x*y"]).unwrap()).unwrap();
        let expected = Ideal::parse(&r, &["x*y", "y^3+y*z^2"]).unwrap();
        assert!(t.closure.same_ideal(&expected).unwrap());

        let lex = PolyRing::new(&["x", "y"], Domain::Rationals, MonomialOrder::lex()).unwrap();
        let j = Ideal::parse(&lex, &["x^2+y^2"]).unwrap();
        let t = tilde_closure(&j.groebner().unwrap(), &Ideal::parse(&lex, &["x^2"]).unwrap()).unwrap();
        assert!(t.closure.same_ideal(&Ideal::parse(&lex, &["x^2", "y^2"]).unwrap()).unwrap());

        let yx = lex.with_order(MonomialOrder::lex().with_precedence(vec![1, 0]).unwrap()).unwrap();
        let j = j.reorder(&yx).unwrap();
        let e = Ideal::parse(&yx, &["x^2"]).unwrap();
        let t = tilde_closure(&j.groebner().unwrap(), &e).unwrap();
        assert!(t.closure.same_ideal(&e).unwrap());
        assert_eq!(t.trace.iterations(), 0);
    }

    #[test]
    fn sharp_running_example() {
        let (r, j) = running();
        let s = sharp_closure(&j.groebner().unwrap(), &mono(&r, &["x*y"])).unwrap();
        assert_eq!(s.closure, mono(&r, &["x*y", "y^3", "y*z^2"]));
        assert_eq!(s.hat, s.closure);
    }

    #[test]
    fn sharp_of_monomial_basis_is_identity() {
        let (r, _) = running();
        let j = Ideal::parse(&r, &["x^3", "y*z"]).unwrap();
        let e = mono(&r, &["x*y", "z^4"]);
        let s = sharp_closure(&j.groebner().unwrap(), &e).unwrap();
        assert_eq!(s.closure, e);
    }

    #[test]
    fn nf_ideal_examples() {
        let r = PolyRing::new(&["x", "y"], Domain::Rationals, MonomialOrder::lex()).unwrap();
        let gb = Ideal::parse(&r, &["x^2+y^2"]).unwrap().groebner().unwrap();
        let n = nf_ideal(&gb, &Ideal::parse(&r, &["x^2"]).unwrap()).unwrap();
        assert_eq!(n.ideal, Ideal::parse(&r, &["y^2"]).unwrap());

        let inside = nf_ideal(&gb, &Ideal::parse(&r, &["x^4-y^4"]).unwrap()).unwrap();
        assert!(inside.ideal.is_zero());

        let fixed = Ideal::parse(&r, &["y^2"]).unwrap();
        assert_eq!(nf_ideal(&gb, &fixed).unwrap().ideal, fixed);
    }

    #[test]
    fn nf_ideal_needs_sum_generators() {
        // normal forms of E's basis alone give (x + y), which is not nice with (x^2)
        let r = PolyRing::new(&["x", "y"], Domain::Rationals, MonomialOrder::lex()).unwrap();
        let gb = Ideal::parse(&r, &["x^2"]).unwrap().groebner().unwrap();
        let e = Ideal::parse(&r, &["x+y"]).unwrap();
        assert!(!is_gnice(&gb.to_ideal(), &e, Mode::A).unwrap().verdict);
        let n = nf_ideal(&gb, &e).unwrap();
        assert!(n.gnice && n.sum_preserved);
        assert!(n.ideal.same_ideal(&Ideal::parse(&r, &["x+y", "y^2"]).unwrap()).unwrap());
    }
}
