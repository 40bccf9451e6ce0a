//! Exact computation in the braid groups `B(de,e,r)` of the imprimitive
//! complex reflection groups `G(de,e,r)`, and in their generic cover
//! `B(∞,∞,r)`.
//!
//! The faithful model is the Artin braid group on `r+1` strands: `B(de,e,r)`
//! is the subgroup of 1-pure braids whose winding number around the first
//! strand is a multiple of `e`. Everything else — word problems, positive
//! monoid reversing, quasi-Garside divisor enumeration, monomial-matrix
//! projections, periodicity classification, presentation verification —
//! reduces to exact normal-form computations in that model.
//!
//! ```
//! use deer_core::{DeerParams, parse::parse_deer_word, periodic};
//!
//! let p = DeerParams::new(2, 2, 3)?;
//! let u = parse_deer_word("t[1] t[0]", p)?;
//! let v = parse_deer_word("t[2] t[1]", p)?;
//! assert!(u.equal(&v)?);
//!
//! let verdict = periodic::is_periodic(&periodic::lambda_periodic(p).pow(3));
//! assert_eq!(verdict.lambda_power, Some(3));
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod artin;
pub mod deer;
pub mod garside;
pub mod parse;
pub mod periodic;
pub mod presentations;
pub mod reflection;
pub mod reversing;

pub use artin::{ArtinError, ArtinLetter, BraidWord, NamedBraid, NormalForm, Permutation, Sign};
pub use deer::{
    AtildeGen, AtildeLetter, AtildeWord, DeerError, DeerGen, DeerLetter, DeerParams, DeerWord,
    SemidirectForm,
};
