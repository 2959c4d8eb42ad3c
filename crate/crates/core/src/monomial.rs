use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

pub(crate) type Exponents = SmallVec<[u32; 8]>;

/// A power product `x_1^a_1 ... x_n^a_n`, stored as its exponent vector.
///
/// The total degree is cached next to the exponents and kept consistent by
/// every constructor.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Exponents,
    degree: u32,
}

impl Monomial {
    pub fn new(exps: impl IntoIterator<Item = u32>) -> Self {
        let exps: Exponents = exps.into_iter().collect();
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: smallvec::smallvec![0; nvars],
            degree: 0,
        }
    }

    /// The variable `x_index`.
    pub fn var(nvars: usize, index: usize) -> Self {
        let mut m = Monomial::one(nvars);
        m.exps[index] = 1;
        m.degree = 1;
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    fn check_arity(&self, other: &Monomial) -> Result<()> {
        if self.exps.len() == other.exps.len() {
            Ok(())
        } else {
            Err(Error::ArityMismatch {
                expected: self.exps.len(),
                found: other.exps.len(),
            })
        }
    }

    pub fn try_lcm(&self, other: &Monomial) -> Result<Monomial> {
        self.check_arity(other)?;
        Ok(self.lcm(other))
    }

    /// Componentwise maximum. Panics on arity mismatch; see [`Monomial::try_lcm`].
    pub fn lcm(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.exps.len(), other.exps.len(), "monomial arity mismatch");
        Monomial::new(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)))
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.exps.len(), other.exps.len(), "monomial arity mismatch");
        Monomial::new(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.exps.len(), other.exps.len(), "monomial arity mismatch");
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
            degree: self.degree + other.degree,
        }
    }

    /// `self | other`
    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / other` if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect(),
            degree: self.degree - other.degree,
        })
    }

    /// `self / gcd(self, other)`, the generator of the monomial colon `(self) : other`.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.exps.iter().zip(&other.exps).map(|(a, b)| a.saturating_sub(*b)))
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Exponent vector with a new leading variable of exponent `e` prepended.
    pub(crate) fn prepend(&self, e: u32) -> Monomial {
        let mut exps = Exponents::with_capacity(self.exps.len() + 1);
        exps.push(e);
        exps.extend_from_slice(&self.exps);
        Monomial {
            exps,
            degree: self.degree + e,
        }
    }

    /// Drop the first `k` variables.
    pub(crate) fn drop_leading(&self, k: usize) -> Monomial {
        Monomial::new(self.exps[k..].iter().copied())
    }

    pub fn display<'a, S: AsRef<str>>(&'a self, names: &'a [S]) -> MonomialDisplay<'a, S> {
        MonomialDisplay { m: self, names }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Monomial{:?}", self.exps.as_slice())
    }
}

pub struct MonomialDisplay<'a, S> {
    m: &'a Monomial,
    names: &'a [S],
}

impl<S: AsRef<str>> fmt::Display for MonomialDisplay<'_, S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (e, name) in self.m.exps.iter().zip(self.names) {
            if *e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", name.as_ref())?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}
