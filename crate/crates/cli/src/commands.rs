//! Command implementations. Each returns the full report text.

use std::fmt::Write;

use gnice_core::groebner::{buchberger, s_polynomial, GroebnerBasis};
use gnice_core::ideal::{as_monomial_ideal, ideal_colon, ideal_intersection};
use gnice_core::nice::{
    distributivity_check, dual_distributivity_check, gnice_sum_split, hat_closure, is_gnice, is_snice,
    monomial_family_intersection, nf_ideal, order_sweep, regular_sequence_transfer, sharp_closure,
    tilde_closure, ClosureTrace, Condition, Mode, NicenessReport,
};
use gnice_core::{Ideal, Monomial, MonomialIdeal, PolyRing, Polynomial};

use crate::session::Session;
use crate::CliError;

pub const HEADER: &str = "gnice-report v1";

pub struct Report {
    text: String,
    ring: PolyRing,
}

impl Report {
    fn new(command: &str, ring: &PolyRing) -> Self {
        let mut r = Report {
            text: String::new(),
            ring: ring.clone(),
        };
        r.line(HEADER);
        r.line(format!("command: {command}"));
        let vars = ring.vars().join(", ");
        r.line(format!("ring: {}[{vars}]", ring.domain()));
        r.line(format!("order: {}", ring.describe_order()));
        r
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    fn mono(&self, m: &Monomial) -> String {
        m.display(self.ring.vars()).to_string()
    }

    fn mideal(&self, m: &MonomialIdeal) -> String {
        m.display(self.ring.vars())
    }

    /// An ideal printed through its reduced Gröbner basis.
    fn ideal(&self, i: &Ideal) -> Result<String, CliError> {
        Ok(polys(i.groebner()?.generators(), "(", ")"))
    }

    /// `J = (...)`, or `J = NAME = (...)` when the session name differs.
    fn named(&mut self, role: &str, name: &str, i: &Ideal) -> Result<(), CliError> {
        let shown = self.ideal(i)?;
        if role == name {
            self.line(format!("{role} = {shown}"));
        } else {
            self.line(format!("{role} = {name} = {shown}"));
        }
        Ok(())
    }

    fn basis(&mut self, label: &str, gb: &GroebnerBasis) {
        let note = if gb.is_reduced() { "reduced, monic" } else { "as given" };
        self.line(format!("{label} = {}  [{note}]", polys(gb.generators(), "{", "}")));
    }

    fn verdict(&mut self, v: bool, witness: Option<String>) {
        match (v, witness) {
            (true, _) => self.line("TRUE"),
            (false, Some(w)) => self.line(format!("FALSE  witness: {w}")),
            (false, None) => self.line("FALSE"),
        }
    }

    fn flag(&mut self, label: &str, v: bool) {
        self.line(format!("{label}: {}", tf(v)));
    }

    pub fn finish(self) -> String {
        self.text
    }
}

fn tf(v: bool) -> &'static str {
    if v {
        "TRUE"
    } else {
        "FALSE"
    }
}

fn polys(ps: &[Polynomial], open: &str, close: &str) -> String {
    if ps.is_empty() {
        return format!("{open}0{close}");
    }
    let parts: Vec<String> = ps.iter().map(Polynomial::to_string).collect();
    format!("{open}{}{close}", parts.join(", "))
}

fn monomial_ideal(session: &Session, name: &str) -> Result<MonomialIdeal, CliError> {
    as_monomial_ideal(&session.ideal(name)?)?
        .ok_or_else(|| CliError::Precondition(format!("`{name}` is not a monomial ideal")))
}

fn trace_lines<I, A>(
    report: &mut Report,
    name: &str,
    trace: &ClosureTrace<I, A>,
    show: impl Fn(&Report, &I) -> Result<String, CliError>,
    show_added: impl Fn(&Report, &A) -> String,
) -> Result<(), CliError> {
    let last = trace.steps.len() - 1;
    for step in &trace.steps {
        let snapshot = show(report, &step.snapshot)?;
        let suffix = if step.index == 0 {
            String::new()
        } else if step.index == last {
            "   (stable)".to_string()
        } else {
            let added: Vec<String> = step.added.iter().map(|a| show_added(report, a)).collect();
            format!("   added: {}", added.join(", "))
        };
        report.line(format!("{name}_{} = {snapshot}{suffix}", step.index));
    }
    Ok(())
}

pub fn gb(s: &Session, i: &str) -> Result<String, CliError> {
    let mut r = Report::new("gb", s.ring());
    let gb = buchberger(&s.ideal(i)?)?;
    r.basis(&format!("GB({i})"), &gb);
    r.line(format!("size: {}", gb.len()));
    Ok(r.finish())
}

pub fn ini(s: &Session, i: &str) -> Result<String, CliError> {
    let mut r = Report::new("ini", s.ring());
    let m = s.ideal(i)?.initial_ideal()?;
    r.line(format!("ini({i}) = {}", r.mideal(&m)));
    Ok(r.finish())
}

fn basis_for(s: &Session, ideal: &str, gb: Option<&str>) -> Result<(String, GroebnerBasis), CliError> {
    match gb {
        Some(g) => Ok((g.to_string(), s.basis(g)?)),
        None => Ok((format!("GB({ideal})"), s.ideal(ideal)?.groebner()?)),
    }
}

pub fn nf(s: &Session, f: &str, i: &str, gb: Option<&str>) -> Result<String, CliError> {
    let mut r = Report::new("nf", s.ring());
    let f = s.polynomial(f)?;
    let (label, basis) = basis_for(s, i, gb)?;
    r.basis(&label, &basis);
    r.line(format!("f = {f}"));
    r.line(format!("NF(f) = {}", basis.normal_form(&f)?));
    Ok(r.finish())
}

pub fn spoly(s: &Session, f: &str, g: &str) -> Result<String, CliError> {
    let mut r = Report::new("spoly", s.ring());
    let (f, g) = (s.polynomial(f)?, s.polynomial(g)?);
    r.line(format!("f = {f}"));
    r.line(format!("g = {g}"));
    r.line(format!("S(f, g) = {}", s_polynomial(&f, &g)?));
    Ok(r.finish())
}

pub fn intersect(s: &Session, j: &str, e: &str) -> Result<String, CliError> {
    let mut r = Report::new("intersect", s.ring());
    let meet = ideal_intersection(&s.ideal(j)?, &s.ideal(e)?)?;
    r.line(format!("{j} ∩ {e} = {}", r.ideal(&meet)?));
    r.line(format!("ini({j} ∩ {e}) = {}", r.mideal(&meet.initial_ideal()?)));
    Ok(r.finish())
}

pub fn colon(s: &Session, j: &str, f: &str) -> Result<String, CliError> {
    let mut r = Report::new("colon", s.ring());
    let f = s.polynomial(f)?;
    let ideal = s.ideal(j)?;
    let c = ideal_colon(&ideal, &f)?;
    r.line(format!("({j} : {f}) = {}", r.ideal(&c)?));
    r.flag(&format!("{f} regular on S/{j}"), c.same_ideal(&ideal)?);
    Ok(r.finish())
}

pub fn member(s: &Session, i: &str, f: &str) -> Result<String, CliError> {
    let mut r = Report::new("member", s.ring());
    let f = s.polynomial(f)?;
    let gb = s.ideal(i)?.groebner()?;
    let nf = gb.normal_form(&f)?;
    r.line(format!("f = {f}"));
    r.line(format!("NF(f) = {nf}"));
    r.verdict(nf.is_zero(), Some(format!("nonzero normal form {nf}")));
    Ok(r.finish())
}

fn niceness_lines(r: &mut Report, rep: &NicenessReport) {
    r.line(format!("ini(J) = {}", r.mideal(&rep.ini_j)));
    r.line(format!("ini(E) = {}", r.mideal(&rep.ini_e)));
    if let Some(m) = &rep.ini_sum {
        r.line(format!("ini(J+E) = {}", r.mideal(m)));
    }
    if let Some(m) = &rep.ini_intersection {
        r.line(format!("ini(J ∩ E) = {}", r.mideal(m)));
    }
    for (cond, v) in &rep.conditions {
        let name = match cond {
            Condition::A => "A: ini(J+E) = ini(J) + ini(E)",
            Condition::C => "C: union of reduced bases is a Gröbner basis",
            Condition::D => "D: ini(J ∩ E) = ini(J) ∩ ini(E)",
        };
        r.flag(&format!("condition {name}"), *v);
    }
}

pub fn is_gnice_cmd(s: &Session, j: &str, e: &str, mode: Mode) -> Result<String, CliError> {
    let mut r = Report::new("is-gnice", s.ring());
    let (ji, ei) = (s.ideal(j)?, s.ideal(e)?);
    r.named("J", j, &ji)?;
    r.named("E", e, &ei)?;
    let rep = is_gnice(&ji, &ei, mode)?;
    niceness_lines(&mut r, &rep);
    let witness = rep.witness.as_ref().map(|w| w.display(s.ring()));
    r.verdict(rep.verdict, witness);
    Ok(r.finish())
}

pub fn is_snice_cmd(s: &Session, j: &str, e: &str, gb: Option<&str>) -> Result<String, CliError> {
    let mut r = Report::new("is-snice", s.ring());
    let (label, basis) = basis_for(s, j, gb)?;
    r.basis(&label, &basis);
    let ei = s.ideal(e)?;
    r.named("E", e, &ei)?;
    let rep = is_snice(&ei, &basis)?;
    let witness = rep.witness.map(|(f, g, sp)| format!("S({f}, {g}) = {sp} not in E"));
    r.verdict(rep.snice, witness);
    Ok(r.finish())
}

pub fn hat(s: &Session, j: &str, e: &str) -> Result<String, CliError> {
    let mut r = Report::new("hat", s.ring());
    let ji = s.ideal(j)?;
    let em = monomial_ideal(s, e)?;
    r.named("J", j, &ji)?;
    let h = hat_closure(&ji, &em)?;
    trace_lines(&mut r, "E", &h.trace, |r, m| Ok(r.mideal(m)), |r, m| r.mono(m))?;
    r.line(format!("iterations: {}", h.trace.iterations()));
    r.flag("J + E_hat = J + E", h.sum_preserved);
    r.line(format!("E_hat = {}", r.mideal(&h.closure)));
    Ok(r.finish())
}

pub fn tilde(s: &Session, j: &str, e: &str, gb: Option<&str>) -> Result<String, CliError> {
    let mut r = Report::new("tilde", s.ring());
    let (label, basis) = basis_for(s, j, gb)?;
    r.basis(&label, &basis);
    let t = tilde_closure(&basis, &s.ideal(e)?)?;
    trace_lines(&mut r, "E", &t.trace, |r, i| r.ideal(i), |_, p| p.to_string())?;
    r.line(format!("iterations: {}", t.trace.iterations()));
    r.line(format!("E_tilde = {}", r.ideal(&t.closure)?));
    Ok(r.finish())
}

pub fn sharp(s: &Session, j: &str, e: &str, gb: Option<&str>) -> Result<String, CliError> {
    let mut r = Report::new("sharp", s.ring());
    let (label, basis) = basis_for(s, j, gb)?;
    r.basis(&label, &basis);
    let em = monomial_ideal(s, e)?;
    let sh = sharp_closure(&basis, &em)?;
    trace_lines(&mut r, "F", &sh.trace, |r, m| Ok(r.mideal(m)), |r, m| r.mono(m))?;
    r.line(format!("iterations: {}", sh.trace.iterations()));
    r.line(format!("E_tilde = {}", r.ideal(&sh.tilde)?));
    r.line(format!("E_hat = {}", r.mideal(&sh.hat)));
    r.line(format!("E_sharp = {}", r.mideal(&sh.closure)));
    Ok(r.finish())
}

pub fn nf_ideal_cmd(s: &Session, j: &str, e: &str, gb: Option<&str>) -> Result<String, CliError> {
    let mut r = Report::new("nf-ideal", s.ring());
    let (label, basis) = basis_for(s, j, gb)?;
    r.basis(&label, &basis);
    let n = nf_ideal(&basis, &s.ideal(e)?)?;
    r.flag("J + NF(E) = J + E", n.sum_preserved);
    r.flag("(J, NF(E)) G-nice", n.gnice);
    r.line(format!("NF(E) = {}", r.ideal(&n.ideal)?));
    Ok(r.finish())
}

pub fn regseq(s: &Session, j: &str, fs: &[String]) -> Result<String, CliError> {
    let mut r = Report::new("regseq", s.ring());
    let ji = s.ideal(j)?;
    let fs: Vec<Polynomial> = fs.iter().map(|f| s.polynomial(f)).collect::<Result<_, _>>()?;
    r.named("J", j, &ji)?;
    r.line(format!("fs = {}", polys(&fs, "[", "]")));
    let rep = regular_sequence_transfer(&ji, &fs)?;
    r.line(format!("ini(J) = {}", r.mideal(&rep.ini_j)));
    let inis: Vec<String> = rep.initial_monomials.iter().map(|m| r.mono(m)).collect();
    r.line(format!("ini(fs) = [{}]", inis.join(", ")));
    r.line(format!("ini(J, fs) = {}", r.mideal(&rep.ini_total)));
    r.flag("ini(fs) regular on S/ini(J)", rep.transfers);
    r.flag("ini(J, fs) = ini(J) + (ini(fs))", rep.initial_equality);
    r.verdict(rep.transfers, None);
    Ok(r.finish())
}

pub fn distrib(s: &Session, j: &str, e: &str, e2: &str) -> Result<String, CliError> {
    let mut r = Report::new("distrib", s.ring());
    let rep = distributivity_check(&s.ideal(j)?, &s.ideal(e)?, &s.ideal(e2)?)?;
    r.line(format!("ini(E ∩ E') = {}", r.mideal(&rep.ini_meet)));
    r.line(format!("ini((J+E) ∩ (J+E')) = {}", r.mideal(&rep.ini_meet_of_sums)));
    r.line(format!("ini(J + (E ∩ E')) = {}", r.mideal(&rep.ini_j_plus_meet)));
    r.flag("(J+E) ∩ (J+E') = J + (E ∩ E')", rep.lattice_equality);
    r.flag("(J, E ∩ E') G-nice", rep.meet_gnice);
    r.flag("(b) ini((J+E) ∩ (J+E')) = ini(J) + ini(E ∩ E')", rep.initial_equality);
    let witness = rep.witness.as_ref().map(|m| r.mono(m));
    r.verdict(rep.condition_a(), witness);
    Ok(r.finish())
}

pub fn distrib_dual(s: &Session, j: &str, e: &str, e2: &str) -> Result<String, CliError> {
    let mut r = Report::new("distrib-dual", s.ring());
    let rep = dual_distributivity_check(&s.ideal(j)?, &s.ideal(e)?, &s.ideal(e2)?)?;
    r.line(format!("ini(J ∩ E + J ∩ E') = {}", r.mideal(&rep.ini_sum_of_meets)));
    r.line(format!("ini(J ∩ (E + E')) = {}", r.mideal(&rep.ini_meet_with_sum)));
    r.flag("J ∩ E + J ∩ E' = J ∩ (E + E')", rep.lattice_equality);
    r.flag("(J, E + E') G-nice", rep.sum_gnice);
    r.flag("(b) ini(J ∩ E + J ∩ E') = ini(J) ∩ ini(E + E')", rep.initial_equality);
    let witness = rep.witness.as_ref().map(|m| r.mono(m));
    r.verdict(rep.condition_a(), witness);
    Ok(r.finish())
}

pub fn family_intersect(s: &Session, j: &str, es: &[String]) -> Result<String, CliError> {
    let mut r = Report::new("family-intersect", s.ring());
    let family: Vec<MonomialIdeal> = es.iter().map(|e| monomial_ideal(s, e)).collect::<Result<_, _>>()?;
    let rep = monomial_family_intersection(&s.ideal(j)?, &family)?;
    r.line(format!("E = {} = {}", es.join(" ∩ "), r.mideal(&rep.intersection)));
    r.flag("(J, E) G-nice", rep.gnice);
    r.flag("intersection of J + E_i = J + E", rep.sums_commute);
    r.flag("GB(J) ∪ G(E) is a Gröbner basis", rep.union_is_groebner);
    r.verdict(rep.gnice && rep.sums_commute && rep.union_is_groebner, None);
    Ok(r.finish())
}

pub fn sum_split(s: &Session, es: &[String], x: &[String]) -> Result<String, CliError> {
    let mut r = Report::new("sum-split", s.ring());
    let ideals: Vec<Ideal> = es.iter().map(|e| s.ideal(e)).collect::<Result<_, _>>()?;
    let mut indices = Vec::new();
    for name in x.iter().filter(|n| !n.is_empty()) {
        let i = es
            .iter()
            .position(|e| e == name)
            .ok_or_else(|| CliError::Usage(format!("`{name}` in --X is not one of --Es")))?;
        indices.push(i);
    }
    let rep = gnice_sum_split(&ideals, &indices)?;
    r.line(format!("E_X = {}", r.ideal(&rep.part)?));
    r.line(format!("E_Xc = {}", r.ideal(&rep.complement)?));
    r.flag("(E_X, E_Xc) G-nice", rep.gnice);
    r.verdict(rep.gnice, None);
    Ok(r.finish())
}

pub fn order_sweep_cmd(s: &Session, j: &str, e: &str) -> Result<String, CliError> {
    let mut r = Report::new("order-sweep", s.ring());
    let sweep = order_sweep(&s.ideal(j)?, &s.ideal(e)?, None)?;
    let mut nice = 0;
    for (order, v) in &sweep {
        let described = s.ring().with_order(order.clone())?.describe_order();
        r.line(format!("{described}: {}", tf(*v)));
        nice += usize::from(*v);
    }
    let mut summary = String::new();
    let _ = write!(summary, "G-nice under {nice} of {} orders", sweep.len());
    r.line(summary);
    Ok(r.finish())
}
