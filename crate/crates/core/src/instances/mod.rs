//! Concrete bipermutative categories.

pub mod fsk;
pub mod semiring;

pub use fsk::{fsk_category, fsk_delta_l, Fsk, FskMor, FskObj};
pub use semiring::{
    bool_semiring_category, named_semiring_category, semiring_category, Elem, ElemId, SemiringCategory, SemiringSpec,
};
