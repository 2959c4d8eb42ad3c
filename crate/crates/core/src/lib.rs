//! Gröbner basis machinery over exact fields, and tools for studying pairs of
//! ideals `(J, E)` whose Gröbner bases combine well.
//!
//! A pair `(J, E)` is *Gröbner-nice* (G-nice) for a monomial order when
//! `ini(J + E) = ini(J) + ini(E)`, equivalently `ini(J ∩ E) = ini(J) ∩ ini(E)`,
//! equivalently the union of Gröbner bases of `J` and `E` is a Gröbner basis
//! of `J + E`. The [`nice`] module checks these conditions and computes the
//! closure operators that enlarge `E` into a nice partner for `J`.
//!
//! ```
//! use gnice_core::{Domain, Ideal, MonomialOrder, PolyRing};
//! use gnice_core::nice::{is_gnice, Mode};
//!
//! let ring = PolyRing::new(&["x", "y"], Domain::Rationals, MonomialOrder::lex()).unwrap();
//! let j = Ideal::parse(&ring, &["x^2 + y^2"]).unwrap();
//! let e = Ideal::parse(&ring, &["x^2"]).unwrap();
//! assert!(!is_gnice(&j, &e, Mode::Both).unwrap().verdict);
//! ```

pub mod error;
pub mod field;
pub mod groebner;
pub mod ideal;
pub mod monomial;
pub mod nice;
pub mod order;
mod parse;
pub mod poly;

pub use error::{Error, Result};
pub use field::{Domain, Scalar};
pub use groebner::{GroebnerBasis, Ideal};
pub use ideal::MonomialIdeal;
pub use monomial::Monomial;
pub use order::{MonomialOrder, OrderKind};
pub use poly::{Limits, PolyRing, Polynomial, Term};
