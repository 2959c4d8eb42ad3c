use crate::error::{Error, Result};
use crate::groebner::{s_polynomial, GroebnerBasis, Ideal};
use crate::poly::Polynomial;

#[derive(Debug, Clone)]
pub struct SniceReport {
    pub snice: bool,
    /// `(f, g, S(f, g))` with `f` in the basis of `J`, `g` in the reduced
    /// basis of `E` and `S(f, g)` outside `E`.
    pub witness: Option<(Polynomial, Polynomial, Polynomial)>,
}

/// Whether `S(f, g) ∈ E` for every `f` in `gb_j` and every `g` in `E`.
///
/// Checking `g` over the reduced Gröbner basis of `E` is sufficient.
pub fn is_snice(e: &Ideal, gb_j: &GroebnerBasis) -> Result<SniceReport> {
    if e.ring() != gb_j.ring() {
        return Err(Error::RingMismatch);
    }
    let gb_e = e.groebner()?;
    for f in gb_j.generators() {
        for g in gb_e.generators() {
            let s = s_polynomial(f, g)?;
            if !gb_e.contains(&s)? {
                return Ok(SniceReport {
                    snice: false,
                    witness: Some((f.clone(), g.clone(), s)),
                });
            }
        }
    }
    Ok(SniceReport {
        snice: true,
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Domain;
    use crate::order::MonomialOrder;
    use crate::poly::PolyRing;

    #[test]
    fn running_example() {
        let r = PolyRing::new(&["x", "y", "z"], Domain::Rationals, MonomialOrder::degrevlex()).unwrap();
        let j = Ideal::parse(&r, &["x^2+y^2+z^2"]).unwrap().groebner().unwrap();
        let e1 = Ideal::parse(&r, &["x*y", "y^3+y*z^2"]).unwrap();
        let e2 = Ideal::parse(&r, &["x*y", "y^3+y*z^2+x^2+y^2+z^2"]).unwrap();
        assert!(is_snice(&e1, &j).unwrap().snice);
        let rep = is_snice(&e2, &j).unwrap();
        assert!(!rep.snice);
        assert!(rep.witness.is_some());
        let over = Ideal::parse(&r, &["x^2+y^2+z^2", "z"]).unwrap();
        assert!(is_snice(&over, &j).unwrap().snice);
    }
}
