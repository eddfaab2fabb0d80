//! The strictification `Bs A` of a bipermutative category `A`.
//!
//! Objects are formal polynomials: finite sequences of monomials, each a finite
//! sequence of objects of `A`. A morphism is a reindexing function between the
//! monomial index sets together with one component morphism of `A` per target
//! monomial. Sums concatenate, products multiply out lexicographically, and
//! every structure map other than the composition regrouping `σ`, the product
//! un-distribution `δ⁻¹`, and the multiplicative braiding has identity
//! components.

use std::fmt::Debug;

use serde::{Deserialize, Serialize};

use crate::category::{
    compose_checked, prod_objs, realize_delta_inv, realize_sigma, sum_mors, sum_objs, Bipermutative,
};
use crate::error::{Error, Result};
use crate::indexcalc::{block_perm, coproduct_fn, distribution_perm, grouping_perm, product_fn, swap_perm, IndexFn};

/// A formal polynomial over the objects of a base category.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BsObj<O> {
    monomials: Vec<Vec<O>>,
}

impl<O: Clone> BsObj<O> {
    pub fn new(monomials: Vec<Vec<O>>) -> Self {
        BsObj { monomials }
    }

    /// The additive unit: no monomials.
    pub fn zero() -> Self {
        BsObj { monomials: vec![] }
    }

    /// The multiplicative unit: one empty monomial.
    pub fn one() -> Self {
        BsObj {
            monomials: vec![vec![]],
        }
    }

    /// `⟨⟨a⟩⟩`.
    pub fn singleton(a: O) -> Self {
        BsObj {
            monomials: vec![vec![a]],
        }
    }

    pub fn monomials(&self) -> &[Vec<O>] {
        &self.monomials
    }

    pub fn additive_len(&self) -> usize {
        self.monomials.len()
    }

    /// Concatenation of monomial lists.
    pub fn sum(&self, other: &Self) -> Self {
        let mut monomials = self.monomials.clone();
        monomials.extend(other.monomials.iter().cloned());
        BsObj { monomials }
    }

    /// All concatenations `aⁱ bᵏ`, `i` outer and `k` inner.
    pub fn product(&self, other: &Self) -> Self {
        let mut monomials = Vec::with_capacity(self.monomials.len() * other.monomials.len());
        for a in &self.monomials {
            for b in &other.monomials {
                let mut m = a.clone();
                m.extend(b.iter().cloned());
                monomials.push(m);
            }
        }
        BsObj { monomials }
    }

    pub fn map<P>(&self, f: impl Fn(&O) -> P) -> BsObj<P> {
        BsObj {
            monomials: self.monomials.iter().map(|m| m.iter().map(&f).collect()).collect(),
        }
    }
}

/// A morphism `(φ; g)` of `Bs A`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BsMor<O, M> {
    dom: BsObj<O>,
    cod: BsObj<O>,
    reindex: IndexFn,
    components: Vec<M>,
}

impl<O, M> BsMor<O, M> {
    pub fn dom(&self) -> &BsObj<O> {
        &self.dom
    }

    pub fn cod(&self) -> &BsObj<O> {
        &self.cod
    }

    pub fn reindex(&self) -> &IndexFn {
        &self.reindex
    }

    pub fn components(&self) -> &[M] {
        &self.components
    }
}

pub type BsObjOf<C> = BsObj<<C as Bipermutative>::Obj>;
pub type BsMorOf<C> = BsMor<<C as Bipermutative>::Obj, <C as Bipermutative>::Mor>;

/// `Bs A`, itself a bipermutative category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Strictified<C> {
    base: C,
}

pub fn bs_category<C: Bipermutative>(base: C) -> Strictified<C> {
    Strictified { base }
}

impl<C: Bipermutative> Strictified<C> {
    pub fn new(base: C) -> Self {
        Strictified { base }
    }

    pub fn base(&self) -> &C {
        &self.base
    }

    /// `⊗ⱼ aⱼ` in the base, left-folded from `𝟙`.
    pub fn eval_monomial(&self, monomial: &[C::Obj]) -> C::Obj {
        prod_objs(&self.base, monomial)
    }

    /// `⊕_{i ∈ fiber} ⊗ⱼ aⁱⱼ` in the base, left-folded from `𝟘`.
    pub fn eval_fiber(&self, a: &BsObjOf<C>, fiber: &[usize]) -> C::Obj {
        let summands: Vec<C::Obj> = fiber.iter().map(|&i| self.eval_monomial(&a.monomials[i - 1])).collect();
        sum_objs(&self.base, &summands)
    }

    pub fn monomial_values(&self, a: &BsObjOf<C>) -> Vec<C::Obj> {
        a.monomials.iter().map(|m| self.eval_monomial(m)).collect()
    }

    /// Builds `(φ; g)`, checking every component against the domain and
    /// codomain it must have.
    pub fn mor(
        &self,
        dom: BsObjOf<C>,
        cod: BsObjOf<C>,
        reindex: IndexFn,
        components: Vec<C::Mor>,
    ) -> Result<BsMorOf<C>> {
        if reindex.dom_len() != dom.additive_len() || reindex.cod_len() != cod.additive_len() {
            return Err(Error::typing(
                "reindexing function",
                format!(
                    "{}→{} does not match additive lengths {}→{}",
                    reindex.dom_len(),
                    reindex.cod_len(),
                    dom.additive_len(),
                    cod.additive_len()
                ),
            ));
        }
        if components.len() != cod.additive_len() {
            return Err(Error::Arity {
                expected: cod.additive_len(),
                got: components.len(),
            });
        }
        for (k, g) in components.iter().enumerate() {
            let want_dom = self.eval_fiber(&dom, &reindex.fiber(k + 1));
            let want_cod = self.eval_monomial(&cod.monomials[k]);
            let (got_dom, got_cod) = (self.base.dom(g), self.base.cod(g));
            if got_dom != want_dom || got_cod != want_cod {
                return Err(Error::typing(
                    format!("component {}", k + 1),
                    format!("expected {want_dom:?} → {want_cod:?}, got {got_dom:?} → {got_cod:?}"),
                ));
            }
        }
        Ok(BsMor {
            dom,
            cod,
            reindex,
            components,
        })
    }

    // For constructions that are well-typed by design.
    fn assemble(&self, dom: BsObjOf<C>, cod: BsObjOf<C>, reindex: IndexFn, components: Vec<C::Mor>) -> BsMorOf<C> {
        if cfg!(debug_assertions) {
            self.mor(dom, cod, reindex, components)
                .expect("structural morphism is well-typed")
        } else {
            BsMor {
                dom,
                cod,
                reindex,
                components,
            }
        }
    }

    /// Identity morphism on `a` with the given reindexing, each component an
    /// identity. Used for every structure map whose components are identities.
    fn with_identity_components(&self, dom: BsObjOf<C>, cod: BsObjOf<C>, reindex: IndexFn) -> BsMorOf<C> {
        let components = self.monomial_values(&cod).iter().map(|x| self.base.id(x)).collect();
        self.assemble(dom, cod, reindex, components)
    }

    /// `λ̂•: 0̂ ⊠ a → 0̂`, an identity.
    pub fn left_zero(&self, a: &BsObjOf<C>) -> BsMorOf<C> {
        let z = BsObj::zero().product(a);
        debug_assert_eq!(z, BsObj::zero());
        self.id(&z)
    }

    /// `ρ̂•: a ⊠ 0̂ → 0̂`, an identity.
    pub fn right_zero(&self, a: &BsObjOf<C>) -> BsMorOf<C> {
        let z = a.product(&BsObj::zero());
        debug_assert_eq!(z, BsObj::zero());
        self.id(&z)
    }

    /// `δ̂r: (a ⊞ b) ⊠ c → (a ⊠ c) ⊞ (b ⊠ c)`, an identity because both sides
    /// are the same polynomial.
    pub fn delta_r(&self, a: &BsObjOf<C>, b: &BsObjOf<C>, c: &BsObjOf<C>) -> Result<BsMorOf<C>> {
        let dom = a.sum(b).product(c);
        let cod = a.product(c).sum(&b.product(c));
        if dom != cod {
            return Err(Error::typing("right distributivity", "sides differ as polynomials"));
        }
        Ok(self.id(&dom))
    }
}

impl<C: Bipermutative> Bipermutative for Strictified<C> {
    type Obj = BsObj<C::Obj>;
    type Mor = BsMor<C::Obj, C::Mor>;

    fn name(&self) -> String {
        format!("Bs({})", self.base.name())
    }

    fn zero(&self) -> Self::Obj {
        BsObj::zero()
    }

    fn one(&self) -> Self::Obj {
        BsObj::one()
    }

    fn dom(&self, f: &Self::Mor) -> Self::Obj {
        f.dom.clone()
    }

    fn cod(&self, f: &Self::Mor) -> Self::Obj {
        f.cod.clone()
    }

    fn id(&self, a: &Self::Obj) -> Self::Mor {
        self.with_identity_components(a.clone(), a.clone(), IndexFn::identity(a.additive_len()))
    }

    /// `(ψ; h) ∘ (φ; g) = (ψφ; hg)` where `(hg)ᵖ = hᵖ ∘ (⊕_{k ∈ ψ⁻¹(p)} gᵏ) ∘ σ`.
    fn compose(&self, h: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor> {
        if g.cod != h.dom {
            return Err(Error::typing(
                "Bs composite",
                format!("codomain {:?} does not match domain {:?}", g.cod, h.dom),
            ));
        }
        let (phi, psi) = (&g.reindex, &h.reindex);
        let composite = psi.after(phi)?;
        let values = self.monomial_values(&g.dom);
        let mut components = Vec::with_capacity(psi.cod_len());
        for p in 1..=psi.cod_len() {
            let ascending: Vec<C::Obj> = composite.fiber(p).iter().map(|&i| values[i - 1].clone()).collect();
            let sigma = realize_sigma(&self.base, &ascending, &grouping_perm(phi, psi, p)?)?;
            let inner: Vec<C::Mor> = psi.fiber(p).iter().map(|&k| g.components[k - 1].clone()).collect();
            let middle = compose_checked(&self.base, &sum_mors(&self.base, &inner)?, &sigma, "regrouped sum")?;
            components.push(compose_checked(
                &self.base,
                &h.components[p - 1],
                &middle,
                "outer component",
            )?);
        }
        Ok(self.assemble(g.dom.clone(), h.cod.clone(), composite, components))
    }

    fn mor_eq(&self, f: &Self::Mor, g: &Self::Mor) -> bool {
        f.dom == g.dom
            && f.cod == g.cod
            && f.reindex == g.reindex
            && f.components
                .iter()
                .zip(&g.components)
                .all(|(x, y)| self.base.mor_eq(x, y))
    }

    fn oplus(&self, a: &Self::Obj, b: &Self::Obj) -> Self::Obj {
        a.sum(b)
    }

    fn otimes(&self, a: &Self::Obj, b: &Self::Obj) -> Self::Obj {
        a.product(b)
    }

    fn oplus_mor(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor> {
        let mut components = f.components.clone();
        components.extend(g.components.iter().cloned());
        Ok(self.assemble(
            f.dom.sum(&g.dom),
            f.cod.sum(&g.cod),
            coproduct_fn(&f.reindex, &g.reindex),
            components,
        ))
    }

    /// Component at `(k, y)` is `(gᵏ ⊗ hʸ) ∘ δ⁻¹` over the two fibers.
    fn otimes_mor(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor> {
        let (left_vals, right_vals) = (self.monomial_values(&f.dom), self.monomial_values(&g.dom));
        let (left_fibers, right_fibers) = (f.reindex.fibers(), g.reindex.fibers());
        let mut components = Vec::with_capacity(left_fibers.len() * right_fibers.len());
        for (gk, fiber_k) in f.components.iter().zip(&left_fibers) {
            let left: Vec<C::Obj> = fiber_k.iter().map(|&i| left_vals[i - 1].clone()).collect();
            for (hy, fiber_y) in g.components.iter().zip(&right_fibers) {
                let right: Vec<C::Obj> = fiber_y.iter().map(|&p| right_vals[p - 1].clone()).collect();
                let undistribute = realize_delta_inv(&self.base, &left, &right)?;
                let tensor = self.base.otimes_mor(gk, hy)?;
                components.push(compose_checked(
                    &self.base,
                    &tensor,
                    &undistribute,
                    "product component",
                )?);
            }
        }
        Ok(self.assemble(
            f.dom.product(&g.dom),
            f.cod.product(&g.cod),
            product_fn(&f.reindex, &g.reindex),
            components,
        ))
    }

    fn beta_plus(&self, a: &Self::Obj, b: &Self::Obj) -> Self::Mor {
        let reindex = block_perm(a.additive_len(), b.additive_len()).into();
        self.with_identity_components(a.sum(b), b.sum(a), reindex)
    }

    /// Reindexed by the swap `(i, k) ↦ (k, i)`; component at `(k, i)` is the
    /// base braiding of the evaluated monomials.
    fn beta_times(&self, a: &Self::Obj, b: &Self::Obj) -> Self::Mor {
        let (av, bv) = (self.monomial_values(a), self.monomial_values(b));
        let mut components = Vec::with_capacity(av.len() * bv.len());
        for bk in &bv {
            for ai in &av {
                components.push(self.base.beta_times(ai, bk));
            }
        }
        let reindex = swap_perm(a.additive_len(), b.additive_len()).into();
        self.assemble(a.product(b), b.product(a), reindex, components)
    }

    fn delta_l(&self, a: &Self::Obj, b: &Self::Obj, c: &Self::Obj) -> Self::Mor {
        let (r, s, u) = (a.additive_len(), b.additive_len(), c.additive_len());
        self.with_identity_components(
            a.product(&b.sum(c)),
            a.product(b).sum(&a.product(c)),
            distribution_perm(r, s, u).into(),
        )
    }

    fn delta_l_inv(&self, a: &Self::Obj, b: &Self::Obj, c: &Self::Obj) -> Self::Mor {
        let (r, s, u) = (a.additive_len(), b.additive_len(), c.additive_len());
        self.with_identity_components(
            a.product(b).sum(&a.product(c)),
            a.product(&b.sum(c)),
            distribution_perm(r, s, u).inverse().into(),
        )
    }

    /// Invertible iff the reindexing is a bijection and every component is.
    fn invert(&self, f: &Self::Mor) -> Option<Self::Mor> {
        let perm = f.reindex.to_perm()?;
        let inv = perm.inverse();
        let components = (1..=f.dom.additive_len())
            .map(|i| self.base.invert(&f.components[perm.apply(i) - 1]))
            .collect::<Option<Vec<_>>>()?;
        self.mor(f.cod.clone(), f.dom.clone(), inv.into(), components).ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::realize_sigma;
    use crate::indexcalc::Perm;
    use crate::instances::{bool_semiring_category, Fsk, FskMor, FskObj};

    type Obj = BsObj<FskObj>;

    fn poly(ms: &[&[usize]]) -> Obj {
        BsObj::new(ms.iter().map(|m| m.iter().map(|&n| FskObj(n)).collect()).collect())
    }

    fn fm(dom: usize, cod: usize, images: &[usize]) -> FskMor {
        FskMor::new(dom, cod, images.to_vec()).unwrap()
    }

    fn bs() -> Strictified<Fsk> {
        Strictified::new(Fsk)
    }

    #[test]
    fn object_sum_and_product() {
        let a = poly(&[&[1]]);
        let b = poly(&[&[2]]);
        assert_eq!(a.sum(&BsObj::zero()), a);
        assert_eq!(BsObj::zero().sum(&a), a);
        assert_eq!(a.sum(&b), poly(&[&[1], &[2]]));
        let ab = poly(&[&[1], &[2]]);
        let cd = poly(&[&[3], &[4]]);
        assert_eq!(ab.product(&cd), poly(&[&[1, 3], &[1, 4], &[2, 3], &[2, 4]]));
        assert_eq!(ab.product(&BsObj::one()), ab);
        assert_eq!(BsObj::one().product(&ab), ab);
        assert_eq!(ab.product(&BsObj::zero()), BsObj::zero());
        assert_eq!(BsObj::<FskObj>::zero().product(&ab), BsObj::zero());
    }

    #[test]
    fn identities() {
        let c = bs();
        let z = c.id(&BsObj::zero());
        assert_eq!(z.reindex().dom_len(), 0);
        assert!(z.components().is_empty());
        let one = c.id(&BsObj::one());
        assert_eq!(one.components(), &[FskMor::identity(1)]);
        let m = c.id(&poly(&[&[2, 3]]));
        assert_eq!(m.components(), &[FskMor::identity(6)]);
    }

    #[test]
    fn typing_is_checked_eagerly() {
        let c = bs();
        let a = poly(&[&[1], &[1]]);
        let b = poly(&[&[2]]);
        // fiber sum is 2, codomain monomial is 2
        assert!(c
            .mor(a.clone(), b.clone(), IndexFn::to_one(2), vec![FskMor::identity(2)])
            .is_ok());
        assert!(matches!(
            c.mor(a.clone(), b.clone(), IndexFn::to_one(2), vec![FskMor::identity(1)]),
            Err(Error::Typing { .. })
        ));
        assert!(c.mor(a.clone(), b.clone(), IndexFn::identity(2), vec![]).is_err());
        assert!(c.mor(a, b, IndexFn::to_one(2), vec![]).is_err());
    }

    #[test]
    fn composite_regroups_with_sigma() {
        let c = bs();
        let ones = poly(&[&[1], &[1], &[1]]);
        let mid = poly(&[&[1], &[1]]);
        let end = poly(&[&[1]]);
        let fold = fm(2, 1, &[1, 1]);
        // g: φ = (2,1,2); component 1 is the identity of ⟨1⟩, component 2 folds ⟨2⟩ → ⟨1⟩
        let g = c
            .mor(
                ones.clone(),
                mid.clone(),
                IndexFn::new(2, vec![2, 1, 2]).unwrap(),
                vec![FskMor::identity(1), fold.clone()],
            )
            .unwrap();
        // h: ψ = (1,1); the single component sends the two summands to 1 and 0
        let h_comp = fm(2, 1, &[1, 0]);
        let h = c.mor(mid, end, IndexFn::to_one(2), vec![h_comp.clone()]).unwrap();
        let hg = c.compose(&h, &g).unwrap();
        assert_eq!(hg.reindex(), &IndexFn::to_one(3));

        // evaluate elementwise: σ realizes [2,1,3] on ⟨1⟩∨⟨1⟩∨⟨1⟩
        let sigma = realize_sigma(&Fsk, &[FskObj(1); 3], &Perm::new(vec![2, 1, 3]).unwrap()).unwrap();
        assert_eq!(sigma.images(), &[2, 1, 3]);
        let sum = Fsk.oplus_mor(&FskMor::identity(1), &fold).unwrap();
        let expected = Fsk.compose(&h_comp, &Fsk.compose(&sum, &sigma).unwrap()).unwrap();
        // element 1 → position 2 → fold → 2 → h → 0; element 2 → 1 → 1 → 1; element 3 → 3 → 2 → 0
        assert_eq!(expected.images(), &[0, 1, 0]);
        assert_eq!(hg.components(), &[expected]);
    }

    #[test]
    fn identities_are_units() {
        let c = bs();
        let a = poly(&[&[1], &[2], &[0]]);
        let b = poly(&[&[2, 1], &[3]]);
        let g = c
            .mor(
                a.clone(),
                b.clone(),
                IndexFn::new(2, vec![2, 1, 2]).unwrap(),
                vec![fm(2, 2, &[2, 0]), fm(1, 3, &[3])],
            )
            .unwrap();
        assert!(c.mor_eq(&c.compose(&g, &c.id(&a)).unwrap(), &g));
        assert!(c.mor_eq(&c.compose(&c.id(&b), &g).unwrap(), &g));
        assert!(c.compose(&g, &g).is_err());
    }

    #[test]
    fn sums_of_morphisms() {
        let c = bs();
        let a = poly(&[&[1], &[2]]);
        let x = c
            .mor(a.clone(), poly(&[&[3]]), IndexFn::to_one(2), vec![fm(3, 3, &[1, 2, 3])])
            .unwrap();
        let id = c.id(&a);
        assert!(c.mor_eq(&c.oplus_mor(&id, &id).unwrap(), &c.id(&a.sum(&a))));
        assert!(c.mor_eq(&c.oplus_mor(&x, &c.id(&BsObj::zero())).unwrap(), &x));
        let s = c.oplus_mor(&x, &id).unwrap();
        assert_eq!(s.reindex().values(), &[1, 1, 2, 3]);
    }

    #[test]
    fn products_of_morphisms() {
        let c = bs();
        let two = poly(&[&[1], &[1]]);
        let one = poly(&[&[1]]);
        let x = c
            .mor(two.clone(), one.clone(), IndexFn::to_one(2), vec![fm(2, 1, &[1, 1])])
            .unwrap();
        assert!(c.mor_eq(&c.otimes_mor(&c.id(&BsObj::one()), &x).unwrap(), &x));
        assert!(c.mor_eq(&c.otimes_mor(&x, &c.id(&BsObj::zero())).unwrap(), &c.id(&BsObj::zero())));

        // two folds with φ = ψ = (1,1): component (g¹ ⊗ h¹) ∘ δ⁻¹ on ⟨4⟩
        let g = fm(2, 1, &[1, 0]);
        let h = fm(2, 1, &[0, 1]);
        let x = c
            .mor(two.clone(), one.clone(), IndexFn::to_one(2), vec![g.clone()])
            .unwrap();
        let y = c
            .mor(two.clone(), one.clone(), IndexFn::to_one(2), vec![h.clone()])
            .unwrap();
        let xy = c.otimes_mor(&x, &y).unwrap();
        assert_eq!(xy.reindex(), &IndexFn::to_one(4));
        // direct pair tracking: summand (i,p) of ⊕ (aᵢ∧cₚ) is the pair (i, p) of
        // (a₁∨a₂)∧(c₁∨c₂); g⊗h keeps only (1, 2)
        let mut images = Vec::new();
        for i in 1..=2 {
            for p in 1..=2 {
                images.push(if g.apply(i) != 0 && h.apply(p) != 0 { 1 } else { 0 });
            }
        }
        assert_eq!(xy.components()[0].images(), images.as_slice());
        assert_eq!(images, vec![0, 1, 0, 0]);

        // a non-symmetric fiber so δ⁻¹ is visible: ⟨2⟩ ∧ (⟨1⟩ ∨ ⟨1⟩)
        let left = c.id(&poly(&[&[2]]));
        let y = c
            .mor(two, poly(&[&[2]]), IndexFn::to_one(2), vec![FskMor::identity(2)])
            .unwrap();
        let ly = c.otimes_mor(&left, &y).unwrap();
        assert_eq!(ly.components()[0].images(), &[1, 3, 2, 4]);
    }

    #[test]
    fn braidings() {
        let c = bs();
        let a = poly(&[&[1], &[2]]);
        assert!(c.mor_eq(&c.beta_plus(&a, &BsObj::zero()), &c.id(&a)));
        assert!(c.mor_eq(&c.beta_plus(&BsObj::zero(), &a), &c.id(&a)));
        let ab = c.beta_plus(&a, &poly(&[&[3]]));
        let ba = c.beta_plus(&poly(&[&[3]]), &a);
        assert!(c.mor_eq(&c.compose(&ba, &ab).unwrap(), &c.id(&a.sum(&poly(&[&[3]])))));

        assert!(c.mor_eq(&c.beta_times(&a, &BsObj::one()), &c.id(&a)));
        assert!(c.mor_eq(&c.beta_times(&a, &BsObj::zero()), &c.id(&BsObj::zero())));
        let t = c.beta_times(&poly(&[&[2]]), &poly(&[&[3]]));
        assert_eq!(t.components()[0].images(), &[1, 3, 5, 2, 4, 6]);
    }

    #[test]
    fn distributivity_structure() {
        let c = bs();
        let z = BsObj::<FskObj>::zero();
        let a = poly(&[&[1], &[2]]);
        assert!(c.mor_eq(&c.delta_l(&a, &z, &z), &c.id(&z)));
        let b = poly(&[&[3]]);
        let d = poly(&[&[0], &[1, 1]]);
        let dr = c.delta_r(&a, &b, &d).unwrap();
        assert!(c.mor_eq(&dr, &c.id(&a.sum(&b).product(&d))));
        let singles = c.delta_l(&poly(&[&[1]]), &poly(&[&[2]]), &poly(&[&[3]]));
        assert!(singles.reindex().to_perm().unwrap().is_identity());
        assert!(singles
            .components()
            .iter()
            .zip([2, 3])
            .all(|(g, n)| *g == FskMor::identity(n)));
        let dl = c.delta_l(&a, &b, &d);
        let dli = c.delta_l_inv(&a, &b, &d);
        assert!(c.mor_eq(&c.compose(&dli, &dl).unwrap(), &c.id(&c.dom(&dl))));
        assert!(c.mor_eq(&c.left_zero(&a), &c.id(&z)));
        assert!(c.mor_eq(&c.right_zero(&a), &c.id(&z)));
    }

    #[test]
    fn equality_is_structural() {
        let c = bs();
        let a = poly(&[&[1], &[1]]);
        let id = c.id(&a);
        assert!(c.mor_eq(&id, &id));
        let tw = c.beta_plus(&poly(&[&[1]]), &poly(&[&[1]]));
        // same components, different reindexing
        assert_eq!(tw.components(), id.components());
        assert!(!c.mor_eq(&tw, &id));
    }

    #[test]
    fn inversion() {
        let c = bs();
        let a = poly(&[&[1], &[2]]);
        let tw = c.beta_plus(&a, &poly(&[&[3]]));
        let inv = c.invert(&tw).unwrap();
        assert!(c.mor_eq(&c.compose(&inv, &tw).unwrap(), &c.id(&c.dom(&tw))));
        let fold = c
            .mor(
                poly(&[&[1], &[1]]),
                poly(&[&[2]]),
                IndexFn::to_one(2),
                vec![FskMor::identity(2)],
            )
            .unwrap();
        assert!(c.invert(&fold).is_none());
    }

    #[test]
    fn works_over_a_discrete_base() {
        let c = Strictified::new(bool_semiring_category());
        let t = crate::instances::Elem(1);
        let a = BsObj::new(vec![vec![t], vec![t, t]]);
        let tw = c.beta_times(&a, &a);
        assert_eq!(tw.reindex().dom_len(), 4);
        assert!(c.mor_eq(&c.compose(&tw, &tw).unwrap(), &c.id(&a.product(&a))));
    }
}
