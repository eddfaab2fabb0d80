//! Strictification of bipermutative categories.
//!
//! A bipermutative category has two strict permutative structures, `⊕` and
//! `⊗`, tied together by a left distributivity isomorphism. [`strictify`]
//! builds from any such category `A` a new one, `Bs A`, whose objects are
//! formal polynomials over `A` and in which the left distributivity also
//! becomes a pure reindexing. [`transport`] provides the evaluation functor
//! `L`, the embedding `R`, the unit `η`, and `Bs f` for multiplicatively strong
//! functors. [`checks`] and [`verify`] evaluate every law on finite instances.

pub mod category;
pub mod checks;
pub mod error;
pub mod indexcalc;
pub mod instances;
pub mod mutation;
pub mod sample;
pub mod strictify;
pub mod transport;
pub mod verify;

pub use category::{Bipermutative, MorOf, ObjOf};
pub use error::{Error, Result};
pub use strictify::{bs_category, BsMor, BsObj, Strictified};

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
struct ReadmeDoctests;
