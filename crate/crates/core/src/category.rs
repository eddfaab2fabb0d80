//! Computable bipermutative categories.
//!
//! A [`Bipermutative`] instance supplies decidable object and morphism
//! equality together with every structure map. Both permutative structures are
//! strict, so associativity and unit isomorphisms never appear; neither do the
//! multiplicative zeros or the right distributivity, which are identities.

use std::fmt::Debug;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::indexcalc::Perm;

pub type ObjOf<C> = <C as Bipermutative>::Obj;
pub type MorOf<C> = <C as Bipermutative>::Mor;

pub trait Bipermutative {
    type Obj: Clone + Eq + Debug + Serialize;
    type Mor: Clone + Debug + Serialize;

    /// Short tag used in reports, e.g. `fsk` or `Bs(fsk)`.
    fn name(&self) -> String;

    fn zero(&self) -> Self::Obj;
    fn one(&self) -> Self::Obj;

    fn dom(&self, f: &Self::Mor) -> Self::Obj;
    fn cod(&self, f: &Self::Mor) -> Self::Obj;
    fn id(&self, a: &Self::Obj) -> Self::Mor;
    /// `g ∘ f`.
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor>;
    /// Equality of morphisms. Only meaningful on parallel pairs.
    fn mor_eq(&self, f: &Self::Mor, g: &Self::Mor) -> bool;

    fn oplus(&self, a: &Self::Obj, b: &Self::Obj) -> Self::Obj;
    fn otimes(&self, a: &Self::Obj, b: &Self::Obj) -> Self::Obj;
    fn oplus_mor(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor>;
    fn otimes_mor(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor>;

    /// `a ⊕ b → b ⊕ a`.
    fn beta_plus(&self, a: &Self::Obj, b: &Self::Obj) -> Self::Mor;
    /// `a ⊗ b → b ⊗ a`.
    fn beta_times(&self, a: &Self::Obj, b: &Self::Obj) -> Self::Mor;
    /// `a ⊗ (b ⊕ c) → (a ⊗ b) ⊕ (a ⊗ c)`.
    fn delta_l(&self, a: &Self::Obj, b: &Self::Obj, c: &Self::Obj) -> Self::Mor;
    /// `(a ⊗ b) ⊕ (a ⊗ c) → a ⊗ (b ⊕ c)`.
    fn delta_l_inv(&self, a: &Self::Obj, b: &Self::Obj, c: &Self::Obj) -> Self::Mor;

    /// Two-sided inverse, if `f` is an isomorphism.
    fn invert(&self, f: &Self::Mor) -> Option<Self::Mor>;
}

/// Checked composite `g ∘ f` that names the junction on mismatch.
pub fn compose_checked<C: Bipermutative>(cat: &C, g: &C::Mor, f: &C::Mor, junction: &str) -> Result<C::Mor> {
    let (mid_f, mid_g) = (cat.cod(f), cat.dom(g));
    if mid_f != mid_g {
        return Err(Error::typing(
            junction,
            format!("codomain {mid_f:?} does not match domain {mid_g:?}"),
        ));
    }
    cat.compose(g, f)
}

/// Composes a path given in application order (first morphism first).
pub fn compose_path<C: Bipermutative>(cat: &C, path: &[C::Mor]) -> Result<C::Mor> {
    let mut iter = path.iter();
    let first = iter.next().ok_or_else(|| Error::Malformed {
        what: "path",
        detail: "empty path".into(),
    })?;
    let mut acc = first.clone();
    for (step, f) in iter.enumerate() {
        acc = compose_checked(cat, f, &acc, &format!("step {}", step + 1))?;
    }
    Ok(acc)
}

/// `x₁ ⊕ ... ⊕ xₙ`, with the empty sum equal to `𝟘`.
pub fn sum_objs<C: Bipermutative>(cat: &C, xs: &[C::Obj]) -> C::Obj {
    xs.iter().fold(cat.zero(), |acc, x| cat.oplus(&acc, x))
}

/// `x₁ ⊗ ... ⊗ xₙ`, with the empty product equal to `𝟙`.
pub fn prod_objs<C: Bipermutative>(cat: &C, xs: &[C::Obj]) -> C::Obj {
    xs.iter().fold(cat.one(), |acc, x| cat.otimes(&acc, x))
}

/// `f₁ ⊕ ... ⊕ fₙ`, with the empty sum equal to `1_𝟘`.
pub fn sum_mors<C: Bipermutative>(cat: &C, fs: &[C::Mor]) -> Result<C::Mor> {
    let mut acc = cat.id(&cat.zero());
    for f in fs {
        acc = cat.oplus_mor(&acc, f)?;
    }
    Ok(acc)
}

/// The coherence isomorphism `⊕ᵢ xᵢ → ⊕ₜ yₜ` of the additive structure that
/// moves summand `i` to position `perm(i)`.
///
/// Realized by insertion sort: each step is an adjacent transposition
/// `1 ⊕ β⊕ ⊕ 1`. Coherence makes the result independent of the schedule.
pub fn realize_sigma<C: Bipermutative>(cat: &C, summands: &[C::Obj], perm: &Perm) -> Result<C::Mor> {
    if perm.degree() != summands.len() {
        return Err(Error::Arity {
            expected: summands.len(),
            got: perm.degree(),
        });
    }
    let mut current: Vec<usize> = (0..summands.len()).collect();
    let mut acc = cat.id(&sum_objs(cat, summands));
    for j in 1..current.len() {
        let mut t = j;
        while t > 0 && perm.images()[current[t - 1]] > perm.images()[current[t]] {
            let objs: Vec<C::Obj> = current.iter().map(|&i| summands[i].clone()).collect();
            let step = adjacent_transposition(cat, &objs, t - 1)?;
            acc = cat.compose(&step, &acc)?;
            current.swap(t - 1, t);
            t -= 1;
        }
    }
    Ok(acc)
}

/// `1 ⊕ β⊕(xₜ, xₜ₊₁) ⊕ 1` acting on the 0-based positions `t, t+1`.
pub fn adjacent_transposition<C: Bipermutative>(cat: &C, objs: &[C::Obj], t: usize) -> Result<C::Mor> {
    let before = cat.id(&sum_objs(cat, &objs[..t]));
    let after = cat.id(&sum_objs(cat, &objs[t + 2..]));
    let twist = cat.beta_plus(&objs[t], &objs[t + 1]);
    cat.oplus_mor(&cat.oplus_mor(&before, &twist)?, &after)
}

/// `δ: (⊕ᵢ aᵢ) ⊗ (⊕ₖ cₖ) → ⊕ᵢ ⊕ₖ (aᵢ ⊗ cₖ)`, i outer and k inner.
///
/// The right distributivity steps are identities; for each `i` the left
/// distributivity is iterated, peeling off the leftmost summand of the right
/// factor.
pub fn realize_delta<C: Bipermutative>(cat: &C, left: &[C::Obj], right: &[C::Obj]) -> Result<C::Mor> {
    let per_summand = left
        .iter()
        .map(|a| left_distribute(cat, a, right))
        .collect::<Result<Vec<_>>>()?;
    let total = sum_mors(cat, &per_summand)?;
    if left.is_empty() || right.is_empty() {
        debug_assert!(cat.mor_eq(&total, &cat.id(&cat.zero())));
    }
    Ok(total)
}

/// Inverse of [`realize_delta`], built from `delta_l_inv` in reverse order.
pub fn realize_delta_inv<C: Bipermutative>(cat: &C, left: &[C::Obj], right: &[C::Obj]) -> Result<C::Mor> {
    let per_summand = left
        .iter()
        .map(|a| left_collect(cat, a, right))
        .collect::<Result<Vec<_>>>()?;
    sum_mors(cat, &per_summand)
}

// a ⊗ (c₁ ⊕ ... ⊕ cₙ) → (a ⊗ c₁) ⊕ ... ⊕ (a ⊗ cₙ)
fn left_distribute<C: Bipermutative>(cat: &C, a: &C::Obj, cs: &[C::Obj]) -> Result<C::Mor> {
    match cs {
        [] | [_] => Ok(cat.id(&cat.otimes(a, &sum_objs(cat, cs)))),
        [head, rest @ ..] => {
            let peel = cat.delta_l(a, head, &sum_objs(cat, rest));
            let tail = left_distribute(cat, a, rest)?;
            let step = cat.oplus_mor(&cat.id(&cat.otimes(a, head)), &tail)?;
            compose_checked(cat, &step, &peel, "left distributivity iterate")
        }
    }
}

fn left_collect<C: Bipermutative>(cat: &C, a: &C::Obj, cs: &[C::Obj]) -> Result<C::Mor> {
    match cs {
        [] | [_] => Ok(cat.id(&cat.otimes(a, &sum_objs(cat, cs)))),
        [head, rest @ ..] => {
            let tail = left_collect(cat, a, rest)?;
            let step = cat.oplus_mor(&cat.id(&cat.otimes(a, head)), &tail)?;
            let unpeel = cat.delta_l_inv(a, head, &sum_objs(cat, rest));
            compose_checked(cat, &unpeel, &step, "left distributivity inverse iterate")
        }
    }
}
