//! Functors into and out of the strictification.
//!
//! [`RightAdjoint`] embeds `A` into `Bs A` as polynomials of additive length
//! one, [`LeftAdjoint`] evaluates a polynomial back in `A`, and [`eta`] is the
//! unit of the adjunction between them (the counit is the identity, since
//! `L ∘ R` is literally the identity). [`BsFunctor`] sends a multiplicatively
//! strong functor `f` to the strict functor `Bs f`.

use crate::category::{
    compose_checked, compose_path, realize_delta, realize_delta_inv, realize_sigma, sum_mors, Bipermutative, MorOf,
    ObjOf,
};
use crate::error::{Error, Result};
use crate::indexcalc::{sorting_perm, IndexFn};
use crate::instances::{Elem, ElemId, SemiringCategory};
use crate::strictify::{BsMorOf, BsObj, BsObjOf, Strictified};

/// A symmetric bimonoidal functor with invertible multiplicative constraints.
///
/// Constraint directions: `f0_plus: 𝟘 → F𝟘`, `f2_plus(a, b): Fa ⊕ Fb → F(a ⊕ b)`,
/// and likewise for `⊗`. Inverses of the multiplicative constraints are
/// required; a functor that cannot supply one reports a capability error.
pub trait SymBimonoidalFunctor {
    type Source: Bipermutative;
    type Target: Bipermutative;

    fn name(&self) -> String;
    fn source(&self) -> &Self::Source;
    fn target(&self) -> &Self::Target;

    fn map_obj(&self, a: &ObjOf<Self::Source>) -> ObjOf<Self::Target>;
    fn map_mor(&self, f: &MorOf<Self::Source>) -> Result<MorOf<Self::Target>>;

    fn f0_plus(&self) -> Result<MorOf<Self::Target>>;
    fn f2_plus(&self, a: &ObjOf<Self::Source>, b: &ObjOf<Self::Source>) -> Result<MorOf<Self::Target>>;
    fn f0_times(&self) -> Result<MorOf<Self::Target>>;
    fn f2_times(&self, a: &ObjOf<Self::Source>, b: &ObjOf<Self::Source>) -> Result<MorOf<Self::Target>>;
    fn f0_times_inv(&self) -> Result<MorOf<Self::Target>>;
    fn f2_times_inv(&self, a: &ObjOf<Self::Source>, b: &ObjOf<Self::Source>) -> Result<MorOf<Self::Target>>;
}

/// The identity functor, with identity constraints.
#[derive(Debug, Clone)]
pub struct IdentityFunctor<C> {
    cat: C,
}

impl<C: Bipermutative> IdentityFunctor<C> {
    pub fn new(cat: C) -> Self {
        IdentityFunctor { cat }
    }
}

impl<C: Bipermutative> SymBimonoidalFunctor for IdentityFunctor<C> {
    type Source = C;
    type Target = C;

    fn name(&self) -> String {
        format!("Id({})", self.cat.name())
    }

    fn source(&self) -> &C {
        &self.cat
    }

    fn target(&self) -> &C {
        &self.cat
    }

    fn map_obj(&self, a: &C::Obj) -> C::Obj {
        a.clone()
    }

    fn map_mor(&self, f: &C::Mor) -> Result<C::Mor> {
        Ok(f.clone())
    }

    fn f0_plus(&self) -> Result<C::Mor> {
        Ok(self.cat.id(&self.cat.zero()))
    }

    fn f2_plus(&self, a: &C::Obj, b: &C::Obj) -> Result<C::Mor> {
        Ok(self.cat.id(&self.cat.oplus(a, b)))
    }

    fn f0_times(&self) -> Result<C::Mor> {
        Ok(self.cat.id(&self.cat.one()))
    }

    fn f2_times(&self, a: &C::Obj, b: &C::Obj) -> Result<C::Mor> {
        Ok(self.cat.id(&self.cat.otimes(a, b)))
    }

    fn f0_times_inv(&self) -> Result<C::Mor> {
        self.f0_times()
    }

    fn f2_times_inv(&self, a: &C::Obj, b: &C::Obj) -> Result<C::Mor> {
        self.f2_times(a, b)
    }
}

/// `R: A → Bs A`, `a ↦ ⟨⟨a⟩⟩`.
#[derive(Debug, Clone)]
pub struct RightAdjoint<C> {
    bs: Strictified<C>,
}

impl<C: Bipermutative + Clone> RightAdjoint<C> {
    pub fn new(base: C) -> Self {
        RightAdjoint {
            bs: Strictified::new(base),
        }
    }
}

impl<C: Bipermutative> RightAdjoint<C> {
    pub fn strictified(&self) -> &Strictified<C> {
        &self.bs
    }

    // (id₁; id(x)) from `dom` to `cod`, both of additive length one.
    fn one_to_one(&self, dom: BsObjOf<C>, cod: BsObjOf<C>, x: &C::Obj) -> Result<BsMorOf<C>> {
        self.bs.mor(dom, cod, IndexFn::identity(1), vec![self.bs.base().id(x)])
    }
}

impl<C: Bipermutative> SymBimonoidalFunctor for RightAdjoint<C> {
    type Source = C;
    type Target = Strictified<C>;

    fn name(&self) -> String {
        "R".into()
    }

    fn source(&self) -> &C {
        self.bs.base()
    }

    fn target(&self) -> &Strictified<C> {
        &self.bs
    }

    fn map_obj(&self, a: &C::Obj) -> BsObjOf<C> {
        BsObj::singleton(a.clone())
    }

    fn map_mor(&self, f: &C::Mor) -> Result<BsMorOf<C>> {
        let base = self.bs.base();
        self.bs.mor(
            BsObj::singleton(base.dom(f)),
            BsObj::singleton(base.cod(f)),
            IndexFn::identity(1),
            vec![f.clone()],
        )
    }

    /// `(φ₀; 1_𝟘): 0̂ → ⟨⟨𝟘⟩⟩`, which cannot be invertible.
    fn f0_plus(&self) -> Result<BsMorOf<C>> {
        let zero = self.bs.base().zero();
        self.bs.mor(
            BsObj::zero(),
            BsObj::singleton(zero.clone()),
            IndexFn::to_one(0),
            vec![self.bs.base().id(&zero)],
        )
    }

    fn f2_plus(&self, a: &C::Obj, b: &C::Obj) -> Result<BsMorOf<C>> {
        let sum = self.bs.base().oplus(a, b);
        self.bs.mor(
            BsObj::new(vec![vec![a.clone()], vec![b.clone()]]),
            BsObj::singleton(sum.clone()),
            IndexFn::to_one(2),
            vec![self.bs.base().id(&sum)],
        )
    }

    fn f0_times(&self) -> Result<BsMorOf<C>> {
        let one = self.bs.base().one();
        self.one_to_one(BsObj::one(), BsObj::singleton(one.clone()), &one)
    }

    /// `(id₁; 1_{a⊗b}): ⟨⟨a, b⟩⟩ → ⟨⟨a ⊗ b⟩⟩`. Not an identity morphism of
    /// `Bs A`, since domain and codomain are different polynomials.
    fn f2_times(&self, a: &C::Obj, b: &C::Obj) -> Result<BsMorOf<C>> {
        let prod = self.bs.base().otimes(a, b);
        self.one_to_one(
            BsObj::new(vec![vec![a.clone(), b.clone()]]),
            BsObj::singleton(prod.clone()),
            &prod,
        )
    }

    fn f0_times_inv(&self) -> Result<BsMorOf<C>> {
        let one = self.bs.base().one();
        self.one_to_one(BsObj::singleton(one.clone()), BsObj::one(), &one)
    }

    fn f2_times_inv(&self, a: &C::Obj, b: &C::Obj) -> Result<BsMorOf<C>> {
        let prod = self.bs.base().otimes(a, b);
        self.one_to_one(
            BsObj::singleton(prod.clone()),
            BsObj::new(vec![vec![a.clone(), b.clone()]]),
            &prod,
        )
    }
}

/// `L: Bs A → A`, evaluating each polynomial.
#[derive(Debug, Clone)]
pub struct LeftAdjoint<C> {
    bs: Strictified<C>,
}

impl<C: Bipermutative + Clone> LeftAdjoint<C> {
    pub fn new(base: C) -> Self {
        LeftAdjoint {
            bs: Strictified::new(base),
        }
    }
}

impl<C: Bipermutative> LeftAdjoint<C> {
    /// `L²⊗(a, b): La ⊗ Lb → L(a ⊠ b)`, the distribution of the two sums of
    /// monomials over each other.
    pub fn l2_times(&self, a: &BsObjOf<C>, b: &BsObjOf<C>) -> Result<C::Mor> {
        realize_delta(self.bs.base(), &self.bs.monomial_values(a), &self.bs.monomial_values(b))
    }
}

impl<C: Bipermutative> SymBimonoidalFunctor for LeftAdjoint<C> {
    type Source = Strictified<C>;
    type Target = C;

    fn name(&self) -> String {
        "L".into()
    }

    fn source(&self) -> &Strictified<C> {
        &self.bs
    }

    fn target(&self) -> &C {
        self.bs.base()
    }

    fn map_obj(&self, a: &BsObjOf<C>) -> C::Obj {
        self.bs.eval_fiber(a, &(1..=a.additive_len()).collect::<Vec<_>>())
    }

    /// `(⊕ₖ gᵏ) ∘ σ`, where `σ` sorts the summands of the domain by their
    /// reindexing value.
    fn map_mor(&self, f: &BsMorOf<C>) -> Result<C::Mor> {
        let base = self.bs.base();
        let sigma = realize_sigma(base, &self.bs.monomial_values(f.dom()), &sorting_perm(f.reindex()))?;
        compose_checked(base, &sum_mors(base, f.components())?, &sigma, "evaluated components")
    }

    fn f0_plus(&self) -> Result<C::Mor> {
        Ok(self.target().id(&self.target().zero()))
    }

    fn f2_plus(&self, a: &BsObjOf<C>, b: &BsObjOf<C>) -> Result<C::Mor> {
        Ok(self.target().id(&self.map_obj(&a.sum(b))))
    }

    fn f0_times(&self) -> Result<C::Mor> {
        Ok(self.target().id(&self.target().one()))
    }

    fn f2_times(&self, a: &BsObjOf<C>, b: &BsObjOf<C>) -> Result<C::Mor> {
        self.l2_times(a, b)
    }

    fn f0_times_inv(&self) -> Result<C::Mor> {
        self.f0_times()
    }

    fn f2_times_inv(&self, a: &BsObjOf<C>, b: &BsObjOf<C>) -> Result<C::Mor> {
        realize_delta_inv(self.bs.base(), &self.bs.monomial_values(a), &self.bs.monomial_values(b))
    }
}

/// `η_a = (φ_r; 1_{La}): a → RLa`.
pub fn eta<C: Bipermutative>(bs: &Strictified<C>, a: &BsObjOf<C>) -> Result<BsMorOf<C>> {
    let la = bs.eval_fiber(a, &(1..=a.additive_len()).collect::<Vec<_>>());
    bs.mor(
        a.clone(),
        BsObj::singleton(la.clone()),
        IndexFn::to_one(a.additive_len()),
        vec![bs.base().id(&la)],
    )
}

/// `ε_a: LRa → a`, the identity.
pub fn epsilon<C: Bipermutative>(cat: &C, a: &C::Obj) -> C::Mor {
    cat.id(a)
}

/// `Bs f`, for a multiplicatively strong `f`. Strict: all four constraints
/// are identities.
#[derive(Debug, Clone)]
pub struct BsFunctor<F: SymBimonoidalFunctor> {
    f: F,
    source: Strictified<F::Source>,
    target: Strictified<F::Target>,
}

impl<F> BsFunctor<F>
where
    F: SymBimonoidalFunctor,
    F::Source: Clone,
    F::Target: Clone,
{
    /// Fails with a capability error unless `f` supplies the inverse of its
    /// multiplicative unit constraint.
    pub fn new(f: F) -> Result<Self> {
        f.f0_times_inv()
            .map_err(|e| Error::Capability(format!("{} is not multiplicatively strong: {e}", f.name())))?;
        let source = Strictified::new(f.source().clone());
        let target = Strictified::new(f.target().clone());
        Ok(BsFunctor { f, source, target })
    }
}

impl<F: SymBimonoidalFunctor> BsFunctor<F> {
    pub fn inner(&self) -> &F {
        &self.f
    }
}

/// `⊗ⱼ F(aⱼ) → F(⊗ⱼ aⱼ)`, left-folded; `f⁰⊗` for the empty monomial.
pub fn times_iterate<F: SymBimonoidalFunctor>(f: &F, monomial: &[ObjOf<F::Source>]) -> Result<MorOf<F::Target>> {
    let (src, tgt) = (f.source(), f.target());
    let Some((first, rest)) = monomial.split_first() else {
        return f.f0_times();
    };
    let mut acc = tgt.id(&f.map_obj(first));
    let mut prefix = first.clone();
    for x in rest {
        let widened = tgt.otimes_mor(&acc, &tgt.id(&f.map_obj(x)))?;
        acc = compose_checked(
            tgt,
            &f.f2_times(&prefix, x)?,
            &widened,
            "multiplicative constraint iterate",
        )?;
        prefix = src.otimes(&prefix, x);
    }
    Ok(acc)
}

/// Inverse of [`times_iterate`], built from the inverse constraints.
pub fn times_iterate_inv<F: SymBimonoidalFunctor>(f: &F, monomial: &[ObjOf<F::Source>]) -> Result<MorOf<F::Target>> {
    let (src, tgt) = (f.source(), f.target());
    let Some((first, rest)) = monomial.split_first() else {
        return f.f0_times_inv();
    };
    let mut acc = tgt.id(&f.map_obj(first));
    let mut prefix = first.clone();
    for x in rest {
        let widened = tgt.otimes_mor(&acc, &tgt.id(&f.map_obj(x)))?;
        acc = compose_checked(
            tgt,
            &widened,
            &f.f2_times_inv(&prefix, x)?,
            "inverse multiplicative constraint iterate",
        )?;
        prefix = src.otimes(&prefix, x);
    }
    Ok(acc)
}

/// `⊕ᵢ F(xᵢ) → F(⊕ᵢ xᵢ)`, left-folded; `f⁰⊕` for no summands.
pub fn plus_iterate<F: SymBimonoidalFunctor>(f: &F, summands: &[ObjOf<F::Source>]) -> Result<MorOf<F::Target>> {
    let (src, tgt) = (f.source(), f.target());
    let Some((first, rest)) = summands.split_first() else {
        return f.f0_plus();
    };
    let mut acc = tgt.id(&f.map_obj(first));
    let mut prefix = first.clone();
    for x in rest {
        let widened = tgt.oplus_mor(&acc, &tgt.id(&f.map_obj(x)))?;
        acc = compose_checked(tgt, &f.f2_plus(&prefix, x)?, &widened, "additive constraint iterate")?;
        prefix = src.oplus(&prefix, x);
    }
    Ok(acc)
}

impl<F: SymBimonoidalFunctor> SymBimonoidalFunctor for BsFunctor<F> {
    type Source = Strictified<F::Source>;
    type Target = Strictified<F::Target>;

    fn name(&self) -> String {
        format!("Bs({})", self.f.name())
    }

    fn source(&self) -> &Self::Source {
        &self.source
    }

    fn target(&self) -> &Self::Target {
        &self.target
    }

    fn map_obj(&self, a: &BsObjOf<F::Source>) -> BsObjOf<F::Target> {
        a.map(|x| self.f.map_obj(x))
    }

    /// Keeps `φ`; component `k` is
    /// `(f²⊗)⁻¹ ∘ f(gᵏ) ∘ f²⊕ ∘ (⊕ᵢ f²⊗)` over the fiber `φ⁻¹(k)`.
    fn map_mor(&self, x: &BsMorOf<F::Source>) -> Result<BsMorOf<F::Target>> {
        let (src, tgt) = (self.f.source(), self.f.target());
        let dom = x.dom().monomials();
        let mut components = Vec::with_capacity(x.components().len());
        for (k, (g, fiber)) in x.components().iter().zip(x.reindex().fibers()).enumerate() {
            let gathered = fiber
                .iter()
                .map(|&i| times_iterate(&self.f, &dom[i - 1]))
                .collect::<Result<Vec<_>>>()?;
            let values: Vec<_> = fiber.iter().map(|&i| self.source.eval_monomial(&dom[i - 1])).collect();
            let path = [
                sum_mors(tgt, &gathered)?,
                plus_iterate(&self.f, &values)?,
                self.f.map_mor(g)?,
                times_iterate_inv(&self.f, &x.cod().monomials()[k])?,
            ];
            components.push(compose_path(tgt, &path)?);
            debug_assert!(src.dom(g) == crate::category::sum_objs(src, &values));
        }
        self.target.mor(
            self.map_obj(x.dom()),
            self.map_obj(x.cod()),
            x.reindex().clone(),
            components,
        )
    }

    fn f0_plus(&self) -> Result<BsMorOf<F::Target>> {
        Ok(self.target.id(&BsObj::zero()))
    }

    fn f2_plus(&self, a: &BsObjOf<F::Source>, b: &BsObjOf<F::Source>) -> Result<BsMorOf<F::Target>> {
        Ok(self.target.id(&self.map_obj(&a.sum(b))))
    }

    fn f0_times(&self) -> Result<BsMorOf<F::Target>> {
        Ok(self.target.id(&BsObj::one()))
    }

    fn f2_times(&self, a: &BsObjOf<F::Source>, b: &BsObjOf<F::Source>) -> Result<BsMorOf<F::Target>> {
        Ok(self.target.id(&self.map_obj(&a.product(b))))
    }

    fn f0_times_inv(&self) -> Result<BsMorOf<F::Target>> {
        self.f0_times()
    }

    fn f2_times_inv(&self, a: &BsObjOf<F::Source>, b: &BsObjOf<F::Source>) -> Result<BsMorOf<F::Target>> {
        self.f2_times(a, b)
    }
}

/// `G ∘ F`, with constraints `(GF)⁰ = G(F⁰) ∘ G⁰` and
/// `(GF)²_{a,b} = G(F²_{a,b}) ∘ G²_{Fa,Fb}`.
#[derive(Debug, Clone)]
pub struct Composite<F, G> {
    first: F,
    second: G,
}

impl<F, G> Composite<F, G>
where
    F: SymBimonoidalFunctor,
    G: SymBimonoidalFunctor<Source = F::Target>,
{
    pub fn new(first: F, second: G) -> Self {
        Composite { first, second }
    }
}

impl<F, G> SymBimonoidalFunctor for Composite<F, G>
where
    F: SymBimonoidalFunctor,
    G: SymBimonoidalFunctor<Source = F::Target>,
{
    type Source = F::Source;
    type Target = G::Target;

    fn name(&self) -> String {
        format!("{}∘{}", self.second.name(), self.first.name())
    }

    fn source(&self) -> &F::Source {
        self.first.source()
    }

    fn target(&self) -> &G::Target {
        self.second.target()
    }

    fn map_obj(&self, a: &ObjOf<F::Source>) -> ObjOf<G::Target> {
        self.second.map_obj(&self.first.map_obj(a))
    }

    fn map_mor(&self, f: &MorOf<F::Source>) -> Result<MorOf<G::Target>> {
        self.second.map_mor(&self.first.map_mor(f)?)
    }

    fn f0_plus(&self) -> Result<MorOf<G::Target>> {
        let path = [self.second.f0_plus()?, self.second.map_mor(&self.first.f0_plus()?)?];
        compose_path(self.target(), &path)
    }

    fn f2_plus(&self, a: &ObjOf<F::Source>, b: &ObjOf<F::Source>) -> Result<MorOf<G::Target>> {
        let (fa, fb) = (self.first.map_obj(a), self.first.map_obj(b));
        let path = [
            self.second.f2_plus(&fa, &fb)?,
            self.second.map_mor(&self.first.f2_plus(a, b)?)?,
        ];
        compose_path(self.target(), &path)
    }

    fn f0_times(&self) -> Result<MorOf<G::Target>> {
        let path = [self.second.f0_times()?, self.second.map_mor(&self.first.f0_times()?)?];
        compose_path(self.target(), &path)
    }

    fn f2_times(&self, a: &ObjOf<F::Source>, b: &ObjOf<F::Source>) -> Result<MorOf<G::Target>> {
        let (fa, fb) = (self.first.map_obj(a), self.first.map_obj(b));
        let path = [
            self.second.f2_times(&fa, &fb)?,
            self.second.map_mor(&self.first.f2_times(a, b)?)?,
        ];
        compose_path(self.target(), &path)
    }

    fn f0_times_inv(&self) -> Result<MorOf<G::Target>> {
        let path = [
            self.second.map_mor(&self.first.f0_times_inv()?)?,
            self.second.f0_times_inv()?,
        ];
        compose_path(self.target(), &path)
    }

    fn f2_times_inv(&self, a: &ObjOf<F::Source>, b: &ObjOf<F::Source>) -> Result<MorOf<G::Target>> {
        let (fa, fb) = (self.first.map_obj(a), self.first.map_obj(b));
        let path = [
            self.second.map_mor(&self.first.f2_times_inv(a, b)?)?,
            self.second.f2_times_inv(&fa, &fb)?,
        ];
        compose_path(self.target(), &path)
    }
}

/// A homomorphism of finite commutative semirings, viewed as a strict functor
/// between the discrete categories.
#[derive(Debug, Clone)]
pub struct SemiringHom {
    source: SemiringCategory,
    target: SemiringCategory,
    map: Vec<usize>,
}

impl SemiringHom {
    /// Checks that `map` preserves both units and both operations.
    pub fn new(source: SemiringCategory, target: SemiringCategory, map: Vec<usize>) -> Result<Self> {
        let (s, t) = (source.spec(), target.spec());
        if map.len() != s.len() || map.iter().any(|&y| y >= t.len()) {
            return Err(Error::Malformed {
                what: "semiring homomorphism",
                detail: format!("expected {} images below {}", s.len(), t.len()),
            });
        }
        let violation = |law: &'static str, witness: String| Err(Error::SemiringLaw { law, witness });
        if map[s.zero] != t.zero {
            return violation("preserves zero", s.names[s.zero].clone());
        }
        if map[s.one] != t.one {
            return violation("preserves one", s.names[s.one].clone());
        }
        for a in 0..s.len() {
            for b in 0..s.len() {
                let pair = format!("({}, {})", s.names[a], s.names[b]);
                if map[s.add[a][b]] != t.add[map[a]][map[b]] {
                    return violation("preserves addition", pair);
                }
                if map[s.mul[a][b]] != t.mul[map[a]][map[b]] {
                    return violation("preserves multiplication", pair);
                }
            }
        }
        Ok(SemiringHom { source, target, map })
    }
}

impl SymBimonoidalFunctor for SemiringHom {
    type Source = SemiringCategory;
    type Target = SemiringCategory;

    fn name(&self) -> String {
        format!("{}→{}", self.source.name(), self.target.name())
    }

    fn source(&self) -> &SemiringCategory {
        &self.source
    }

    fn target(&self) -> &SemiringCategory {
        &self.target
    }

    fn map_obj(&self, a: &Elem) -> Elem {
        Elem(self.map[a.0])
    }

    fn map_mor(&self, f: &ElemId) -> Result<ElemId> {
        Ok(ElemId {
            obj: self.map_obj(&f.obj),
        })
    }

    fn f0_plus(&self) -> Result<ElemId> {
        Ok(self.target.id(&self.target.zero()))
    }

    fn f2_plus(&self, a: &Elem, b: &Elem) -> Result<ElemId> {
        Ok(self.target.id(&self.map_obj(&self.source.oplus(a, b))))
    }

    fn f0_times(&self) -> Result<ElemId> {
        Ok(self.target.id(&self.target.one()))
    }

    fn f2_times(&self, a: &Elem, b: &Elem) -> Result<ElemId> {
        Ok(self.target.id(&self.map_obj(&self.source.otimes(a, b))))
    }

    fn f0_times_inv(&self) -> Result<ElemId> {
        self.f0_times()
    }

    fn f2_times_inv(&self, a: &Elem, b: &Elem) -> Result<ElemId> {
        self.f2_times(a, b)
    }
}
