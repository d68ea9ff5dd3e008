//! k-Schur functions for fundamental coweights, computed as exact sums in the
//! affine nilCoxeter algebra.
//!
//! The layers build on each other: [`cartan`] root data, [`weyl`] affine Weyl
//! groups acting on alcoves, [`nilcoxeter`] the algebra, [`cores`] the type C
//! core combinatorics and [`kschur`] the expansions themselves.
//!
//! ```
//! use kschur_core::{expand, AffineWeylGroup, Family, Formula};
//!
//! let g = AffineWeylGroup::of_type(Family::C, 2)?;
//! let report = expand(&g, 2, Formula::Combinatorial)?;
//! assert_eq!(report.value, expand(&g, 2, Formula::Algebraic)?.value);
//! # Ok::<(), kschur_core::Error>(())
//! ```

pub mod cartan;
pub mod cores;
pub mod error;
pub mod kschur;
pub mod nilcoxeter;
pub mod vector;
pub mod verify;
pub mod walk;
pub mod weyl;

pub use cartan::{CartanDatum, CartanType, Family};
pub use cores::{core_of, cores_in_interval, grassmannian_of, residue, CoreInterval, ShiftedDiagram, SymmetricCore};
pub use error::{Error, Result};
pub use kschur::{
    expand, kschur_algebraic, kschur_combinatorial, kschur_orbit, verify_commutation, ExpansionReport,
    ExpansionTerm, Formula,
};
pub use nilcoxeter::{NilCoxeterAlgebra, NilCoxeterElement};
pub use vector::{q, Rational, RationalVector};
pub use walk::{alcove_walk, render_walk_svg, AlcoveWalk};
pub use weyl::{AffineWeylElement, AffineWeylGroup, Coweight, DynkinAutomorphism, WeylWord};

// The guide's code blocks run as doctests, one module per chapter.
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/introduction.md")]
mod book_introduction {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/roots.md")]
mod book_roots {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/alcoves.md")]
mod book_alcoves {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/nilcoxeter.md")]
mod book_nilcoxeter {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cores.md")]
mod book_cores {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/expansions.md")]
mod book_expansions {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cli.md")]
mod book_cli {}
