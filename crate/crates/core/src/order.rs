//! Monomial orders.
//!
//! Every order compares monomials through a variable *precedence*: the list
//! of variable indices from greatest to smallest. Without an explicit
//! precedence the declaration order of the ring is used (`x_1 > x_2 > ...`).

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::monomial::Monomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    DegRevLex,
    /// The first `split` variables (in precedence) form an elimination block
    /// compared before the remaining ones; each block is ordered degrevlex.
    Block { split: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    precedence: Option<Vec<usize>>,
}

impl MonomialOrder {
    pub fn lex() -> Self {
        MonomialOrder {
            kind: OrderKind::Lex,
            precedence: None,
        }
    }

    pub fn degrevlex() -> Self {
        MonomialOrder {
            kind: OrderKind::DegRevLex,
            precedence: None,
        }
    }

    pub fn block(split: usize) -> Self {
        MonomialOrder {
            kind: OrderKind::Block { split },
            precedence: None,
        }
    }

    /// Reorder the variables: `precedence[0]` becomes the greatest variable.
    /// The identity permutation is normalized away so equal orders compare equal.
    pub fn with_precedence(mut self, precedence: Vec<usize>) -> Result<Self> {
        let n = precedence.len();
        let mut seen = vec![false; n];
        for &i in &precedence {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidOrder(format!(
                    "{precedence:?} is not a permutation of 0..{n}"
                )));
            }
        }
        self.precedence = if precedence.iter().enumerate().all(|(k, &i)| k == i) {
            None
        } else {
            Some(precedence)
        };
        Ok(self)
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn precedence(&self) -> Option<&[usize]> {
        self.precedence.as_deref()
    }

    pub(crate) fn validate(&self, nvars: usize) -> Result<()> {
        if let Some(p) = &self.precedence {
            if p.len() != nvars {
                return Err(Error::InvalidOrder(format!(
                    "precedence lists {} variables, ring has {nvars}",
                    p.len()
                )));
            }
        }
        if let OrderKind::Block { split } = self.kind {
            if split > nvars {
                return Err(Error::InvalidOrder(format!(
                    "block split {split} exceeds {nvars} variables"
                )));
            }
        }
        Ok(())
    }

    /// Checked comparison; errors on arity mismatch.
    pub fn try_compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.nvars() != b.nvars() {
            return Err(Error::ArityMismatch {
                expected: a.nvars(),
                found: b.nvars(),
            });
        }
        if let Some(p) = &self.precedence {
            if p.len() != a.nvars() {
                return Err(Error::ArityMismatch {
                    expected: p.len(),
                    found: a.nvars(),
                });
            }
        }
        Ok(self.compare(a, b))
    }

    #[inline]
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (x, y) = (a.exponents(), b.exponents());
        match &self.precedence {
            None => self.compare_by(x, y, |i| i, a.degree(), b.degree()),
            Some(p) => self.compare_by(x, y, |i| p[i], a.degree(), b.degree()),
        }
    }

    #[inline]
    fn compare_by(
        &self,
        x: &[u32],
        y: &[u32],
        var: impl Fn(usize) -> usize,
        deg_x: u32,
        deg_y: u32,
    ) -> Ordering {
        let n = x.len();
        match self.kind {
            OrderKind::Lex => (0..n)
                .map(|i| x[var(i)].cmp(&y[var(i)]))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal),
            OrderKind::DegRevLex => deg_x
                .cmp(&deg_y)
                .then_with(|| revlex(x, y, (0..n).rev().map(&var))),
            OrderKind::Block { split } => {
                let block_deg = |e: &[u32]| (0..split).map(|i| e[var(i)]).sum::<u32>();
                let (bx, by) = (block_deg(x), block_deg(y));
                bx.cmp(&by)
                    .then_with(|| revlex(x, y, (0..split).rev().map(&var)))
                    .then_with(|| (deg_x - bx).cmp(&(deg_y - by)))
                    .then_with(|| revlex(x, y, (split..n).rev().map(&var)))
            }
        }
    }
}

/// Reverse-lexicographic tie break: scanning from the smallest variable, the
/// monomial with the smaller exponent is the larger one.
#[inline]
fn revlex(x: &[u32], y: &[u32], vars: impl Iterator<Item = usize>) -> Ordering {
    for i in vars {
        match x[i].cmp(&y[i]) {
            Ordering::Equal => continue,
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.iter().copied())
    }

    #[test]
    fn lex_examples() {
        // x*y^2 > y^9 in lex x > y
        assert_eq!(MonomialOrder::lex().compare(&m(&[1, 2]), &m(&[0, 9])), Ordering::Greater);
        let lex_yx = MonomialOrder::lex().with_precedence(vec![1, 0]).unwrap();
        assert_eq!(lex_yx.compare(&m(&[1, 2]), &m(&[0, 9])), Ordering::Less);
        assert_eq!(lex_yx.compare(&m(&[2, 0]), &m(&[0, 2])), Ordering::Less);
    }

    #[test]
    fn degrevlex_examples() {
        let o = MonomialOrder::degrevlex();
        // x^2 > xy > y^2 in degree 2; y^3 beats both x^2 and xy by degree
        assert_eq!(o.compare(&m(&[2, 0, 0]), &m(&[1, 1, 0])), Ordering::Greater);
        assert_eq!(o.compare(&m(&[0, 3, 0]), &m(&[2, 0, 0])), Ordering::Greater);
        // y^3 > y z^2 (fewer z wins)
        assert_eq!(o.compare(&m(&[0, 3, 0]), &m(&[0, 1, 2])), Ordering::Greater);
        // x z^2 < y^3 ... and x^2 z < x y^2 (revlex, not lex)
        assert_eq!(o.compare(&m(&[2, 0, 1]), &m(&[1, 2, 0])), Ordering::Less);
        let a = m(&[1, 4, 2]);
        assert_eq!(o.compare(&a, &a), Ordering::Equal);
    }

    #[test]
    fn block_eliminates_leading_block() {
        let o = MonomialOrder::block(1);
        // t beats any monomial free of t
        assert_eq!(o.compare(&m(&[1, 0, 0]), &m(&[0, 9, 9])), Ordering::Greater);
        assert_eq!(o.compare(&m(&[1, 2, 0]), &m(&[1, 0, 1])), Ordering::Greater);
    }

    #[test]
    fn arity_checks() {
        let o = MonomialOrder::lex();
        assert!(o.try_compare(&m(&[1]), &m(&[1, 2])).is_err());
        assert!(MonomialOrder::lex().with_precedence(vec![0, 0]).is_err());
        assert_eq!(
            MonomialOrder::lex().with_precedence(vec![0, 1, 2]).unwrap(),
            MonomialOrder::lex()
        );
    }
}
