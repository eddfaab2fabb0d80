//! Deliberately broken structure, for confirming that the law suites can fail.

use serde::{Deserialize, Serialize};

use crate::category::{Bipermutative, MorOf, ObjOf};
use crate::error::Result;
use crate::sample::{Bounds, Samplable, SampleRng};
use crate::transport::SymBimonoidalFunctor;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Mutation<O> {
    /// `β⊕(a, b) := 1` wherever `a ⊕ b = b ⊕ a`.
    IdentityBetaPlus,
    /// `β⊕ := 1` on the two orderings of one pair only.
    IdentityBetaPlusOn(O, O),
    /// `δl(a, b, c) := 1` wherever both sides are equal objects.
    IdentityDeltaL,
}

/// A category whose structure maps are replaced according to a [`Mutation`].
/// Where a replacement would be ill-typed the original map is kept.
#[derive(Debug, Clone)]
pub struct Mutant<C: Bipermutative> {
    inner: C,
    mutation: Mutation<C::Obj>,
}

impl<C: Bipermutative> Mutant<C> {
    pub fn new(inner: C, mutation: Mutation<C::Obj>) -> Self {
        Mutant { inner, mutation }
    }
}

impl<C: Bipermutative> Bipermutative for Mutant<C> {
    type Obj = C::Obj;
    type Mor = C::Mor;

    fn name(&self) -> String {
        format!("mutant({})", self.inner.name())
    }

    fn zero(&self) -> C::Obj {
        self.inner.zero()
    }

    fn one(&self) -> C::Obj {
        self.inner.one()
    }

    fn dom(&self, f: &C::Mor) -> C::Obj {
        self.inner.dom(f)
    }

    fn cod(&self, f: &C::Mor) -> C::Obj {
        self.inner.cod(f)
    }

    fn id(&self, a: &C::Obj) -> C::Mor {
        self.inner.id(a)
    }

    fn compose(&self, g: &C::Mor, f: &C::Mor) -> Result<C::Mor> {
        self.inner.compose(g, f)
    }

    fn mor_eq(&self, f: &C::Mor, g: &C::Mor) -> bool {
        self.inner.mor_eq(f, g)
    }

    fn oplus(&self, a: &C::Obj, b: &C::Obj) -> C::Obj {
        self.inner.oplus(a, b)
    }

    fn otimes(&self, a: &C::Obj, b: &C::Obj) -> C::Obj {
        self.inner.otimes(a, b)
    }

    fn oplus_mor(&self, f: &C::Mor, g: &C::Mor) -> Result<C::Mor> {
        self.inner.oplus_mor(f, g)
    }

    fn otimes_mor(&self, f: &C::Mor, g: &C::Mor) -> Result<C::Mor> {
        self.inner.otimes_mor(f, g)
    }

    fn beta_plus(&self, a: &C::Obj, b: &C::Obj) -> C::Mor {
        let (ab, ba) = (self.inner.oplus(a, b), self.inner.oplus(b, a));
        let hit = match &self.mutation {
            Mutation::IdentityBetaPlus => true,
            Mutation::IdentityBetaPlusOn(x, y) => (a == x && b == y) || (a == y && b == x),
            Mutation::IdentityDeltaL => false,
        };
        if hit && ab == ba {
            self.inner.id(&ab)
        } else {
            self.inner.beta_plus(a, b)
        }
    }

    fn beta_times(&self, a: &C::Obj, b: &C::Obj) -> C::Mor {
        self.inner.beta_times(a, b)
    }

    fn delta_l(&self, a: &C::Obj, b: &C::Obj, c: &C::Obj) -> C::Mor {
        let original = self.inner.delta_l(a, b, c);
        let (dom, cod) = (self.inner.dom(&original), self.inner.cod(&original));
        if self.mutation == Mutation::IdentityDeltaL && dom == cod {
            self.inner.id(&dom)
        } else {
            original
        }
    }

    fn delta_l_inv(&self, a: &C::Obj, b: &C::Obj, c: &C::Obj) -> C::Mor {
        let original = self.inner.delta_l_inv(a, b, c);
        let (dom, cod) = (self.inner.dom(&original), self.inner.cod(&original));
        if self.mutation == Mutation::IdentityDeltaL && dom == cod {
            self.inner.id(&dom)
        } else {
            original
        }
    }

    fn invert(&self, f: &C::Mor) -> Option<C::Mor> {
        self.inner.invert(f)
    }
}

impl<C: Samplable> Samplable for Mutant<C> {
    fn enumerate_objects(&self, bounds: &Bounds) -> Vec<C::Obj> {
        self.inner.enumerate_objects(bounds)
    }

    fn random_object(&self, rng: &mut SampleRng, bounds: &Bounds) -> C::Obj {
        self.inner.random_object(rng, bounds)
    }

    fn random_morphism(&self, rng: &mut SampleRng, dom: &C::Obj, cod: &C::Obj) -> Option<C::Mor> {
        self.inner.random_morphism(rng, dom, cod)
    }

    fn random_morphism_from(&self, rng: &mut SampleRng, dom: &C::Obj, bounds: &Bounds) -> C::Mor {
        self.inner.random_morphism_from(rng, dom, bounds)
    }

    fn random_factorization(&self, rng: &mut SampleRng, x: &C::Obj, max_len: usize) -> Vec<C::Obj> {
        self.inner.random_factorization(rng, x, max_len)
    }

    fn enumerate_morphisms(&self, dom: &C::Obj, cod: &C::Obj, limit: usize) -> Vec<C::Mor> {
        self.inner.enumerate_morphisms(dom, cod, limit)
    }
}

/// `f` with its multiplicative constraint precomposed with a braiding:
/// `f²⊗(a, b) := f²⊗(a, b) ∘ β⊗(Fb, Fa)` wherever that is well-typed.
#[derive(Debug, Clone)]
pub struct CorruptF2Times<F> {
    inner: F,
}

impl<F: SymBimonoidalFunctor> CorruptF2Times<F> {
    pub fn new(inner: F) -> Self {
        CorruptF2Times { inner }
    }

    fn twist(&self, a: &ObjOf<F::Source>, b: &ObjOf<F::Source>) -> Option<MorOf<F::Target>> {
        let tgt = self.inner.target();
        let (fa, fb) = (self.inner.map_obj(a), self.inner.map_obj(b));
        let t = tgt.beta_times(&fb, &fa);
        (tgt.cod(&t) == tgt.dom(&t)).then_some(t)
    }
}

impl<F: SymBimonoidalFunctor> SymBimonoidalFunctor for CorruptF2Times<F> {
    type Source = F::Source;
    type Target = F::Target;

    fn name(&self) -> String {
        format!("corrupt({})", self.inner.name())
    }

    fn source(&self) -> &F::Source {
        self.inner.source()
    }

    fn target(&self) -> &F::Target {
        self.inner.target()
    }

    fn map_obj(&self, a: &ObjOf<F::Source>) -> ObjOf<F::Target> {
        self.inner.map_obj(a)
    }

    fn map_mor(&self, f: &MorOf<F::Source>) -> Result<MorOf<F::Target>> {
        self.inner.map_mor(f)
    }

    fn f0_plus(&self) -> Result<MorOf<F::Target>> {
        self.inner.f0_plus()
    }

    fn f2_plus(&self, a: &ObjOf<F::Source>, b: &ObjOf<F::Source>) -> Result<MorOf<F::Target>> {
        self.inner.f2_plus(a, b)
    }

    fn f0_times(&self) -> Result<MorOf<F::Target>> {
        self.inner.f0_times()
    }

    fn f2_times(&self, a: &ObjOf<F::Source>, b: &ObjOf<F::Source>) -> Result<MorOf<F::Target>> {
        let f2 = self.inner.f2_times(a, b)?;
        match self.twist(a, b) {
            Some(t) => self.inner.target().compose(&f2, &t),
            None => Ok(f2),
        }
    }

    fn f0_times_inv(&self) -> Result<MorOf<F::Target>> {
        self.inner.f0_times_inv()
    }

    fn f2_times_inv(&self, a: &ObjOf<F::Source>, b: &ObjOf<F::Source>) -> Result<MorOf<F::Target>> {
        let inv = self.inner.f2_times_inv(a, b)?;
        let tgt = self.inner.target();
        match self.twist(a, b) {
            Some(t) => tgt.compose(&tgt.invert(&t).expect("braidings are invertible"), &inv),
            None => Ok(inv),
        }
    }
}
