//! Law suites.
//!
//! Each suite draws its cases from a [`Checker`]: object-level laws run over
//! every tuple of enumerated objects while the tuple count stays under the
//! configured cap (and over seeded samples beyond it), morphism-level laws run
//! over a fixed number of seeded random cases. Every comparison goes through
//! [`diagram_eq`], so an ill-typed composite is reported as a typing failure
//! rather than a law violation.

use std::collections::BTreeMap;
use std::fmt::Debug;

use rand::seq::SliceRandom;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::category::{compose_path, sum_mors, Bipermutative, MorOf, ObjOf};
use crate::error::{Error, Result};
use crate::indexcalc::{block_perm, distribution_perm, swap_perm, IndexFn};
use crate::sample::{labelled_rng, Bounds, Samplable, SampleRng};
use crate::strictify::{BsObj, BsObjOf, Strictified};
use crate::transport::{eta, LeftAdjoint, RightAdjoint, SymBimonoidalFunctor};

/// Failures kept per law; the tally still counts all of them.
const KEPT_PER_LAW: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FailureKind {
    /// Both sides are well-typed and parallel but differ.
    LawViolation,
    /// A composite could not be formed or the sides are not parallel.
    Typing,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Failure {
    pub law: String,
    pub case: usize,
    pub kind: FailureKind,
    pub inputs: Value,
    pub left: Option<Value>,
    pub right: Option<Value>,
    pub detail: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawTally {
    pub cases: usize,
    pub failures: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Skip {
    pub law: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub suite: String,
    /// The category or functor under test.
    pub subject: String,
    pub cases: usize,
    pub laws: BTreeMap<String, LawTally>,
    pub failures: Vec<Failure>,
    pub skipped: Vec<Skip>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.laws.values().all(|t| t.failures == 0)
    }

    pub fn failure_count(&self) -> usize {
        self.laws.values().map(|t| t.failures).sum()
    }

    pub fn failures_of(&self, law: &str) -> usize {
        self.laws.get(law).map_or(0, |t| t.failures)
    }

    pub fn cases_of(&self, law: &str) -> usize {
        self.laws.get(law).map_or(0, |t| t.cases)
    }
}

/// Outcome of comparing two composable paths with the same endpoints.
#[derive(Debug, Clone)]
pub struct DiagramVerdict<M> {
    pub equal: bool,
    pub left: M,
    pub right: M,
}

/// Composes both paths (application order) and compares the composites.
///
/// Fails with a typing error naming the junction when a path does not
/// compose, or naming the endpoints when the composites are not parallel.
pub fn diagram_eq<C: Bipermutative>(cat: &C, left: &[C::Mor], right: &[C::Mor]) -> Result<DiagramVerdict<C::Mor>> {
    let side = |name: &str, path: &[C::Mor]| {
        compose_path(cat, path).map_err(|e| match e {
            Error::Typing { junction, detail } => Error::Typing {
                junction: format!("{name} path, {junction}"),
                detail,
            },
            other => other,
        })
    };
    let (l, r) = (side("left", left)?, side("right", right)?);
    for (end, x, y) in [
        ("domain", cat.dom(&l), cat.dom(&r)),
        ("codomain", cat.cod(&l), cat.cod(&r)),
    ] {
        if x != y {
            return Err(Error::typing("endpoints", format!("{end}s differ: {x:?} vs {y:?}")));
        }
    }
    let equal = cat.mor_eq(&l, &r);
    Ok(DiagramVerdict {
        equal,
        left: l,
        right: r,
    })
}

/// Sampling parameters shared by every suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SamplerConfig {
    pub seed: u64,
    pub bounds: Bounds,
    /// Random cases per morphism-level law.
    pub samples: usize,
    /// Lift the cap on exhaustively enumerated object tuples.
    pub exhaustive: bool,
}

impl Default for SamplerConfig {
    fn default() -> Self {
        SamplerConfig {
            seed: 0,
            bounds: Bounds::default(),
            samples: 1000,
            exhaustive: false,
        }
    }
}

impl SamplerConfig {
    /// Most object tuples a law enumerates before switching to sampling.
    pub fn tuple_cap(&self) -> usize {
        if self.exhaustive {
            2_000_000
        } else {
            50_000
        }
    }
}

pub struct Checker {
    report: AxiomReport,
    config: SamplerConfig,
}

impl Checker {
    pub fn new(suite: &str, subject: impl Into<String>, config: &SamplerConfig) -> Self {
        Checker {
            report: AxiomReport {
                suite: suite.into(),
                subject: subject.into(),
                cases: 0,
                laws: BTreeMap::new(),
                failures: Vec::new(),
                skipped: Vec::new(),
            },
            config: *config,
        }
    }

    pub fn config(&self) -> &SamplerConfig {
        &self.config
    }

    pub fn bounds(&self) -> &Bounds {
        &self.config.bounds
    }

    pub fn samples(&self) -> usize {
        self.config.samples
    }

    pub fn rng(&self, law: &str) -> SampleRng {
        labelled_rng(
            self.config.seed,
            &format!("{}/{}/{}", self.report.suite, self.report.subject, law),
        )
    }

    /// Every `K`-tuple from `pool` when there are few enough, otherwise a
    /// seeded sample of them.
    pub fn tuples<T: Clone, const K: usize>(&self, law: &str, pool: &[T]) -> Vec<[T; K]> {
        if pool.is_empty() {
            return Vec::new();
        }
        let total = pool.len().checked_pow(K as u32).unwrap_or(usize::MAX);
        if total <= self.config.tuple_cap() {
            (0..total)
                .map(|mut code| {
                    let mut idx = [0; K];
                    for slot in idx.iter_mut().rev() {
                        *slot = code % pool.len();
                        code /= pool.len();
                    }
                    idx.map(|i| pool[i].clone())
                })
                .collect()
        } else {
            let mut rng = self.rng(law);
            (0..self.config.samples.max(1))
                .map(|_| std::array::from_fn(|_| pool.choose(&mut rng).expect("non-empty").clone()))
                .collect()
        }
    }

    fn tally(&mut self, law: &str) -> usize {
        self.report.cases += 1;
        let t = self.report.laws.entry(law.to_string()).or_default();
        t.cases += 1;
        t.cases - 1
    }

    fn fail(
        &mut self,
        law: &str,
        case: usize,
        kind: FailureKind,
        inputs: Value,
        sides: Option<(Value, Value)>,
        detail: Option<String>,
    ) {
        let t = self.report.laws.get_mut(law).expect("tallied before failing");
        t.failures += 1;
        if t.failures <= KEPT_PER_LAW {
            let (left, right) = sides.unzip();
            self.report.failures.push(Failure {
                law: law.into(),
                case,
                kind,
                inputs,
                left,
                right,
                detail,
            });
        }
    }

    /// Checks that two paths, built lazily so construction errors count as
    /// typing failures, compose to the same morphism.
    pub fn paths<C: Bipermutative, I: Serialize + ?Sized>(
        &mut self,
        cat: &C,
        law: &str,
        inputs: &I,
        build: impl FnOnce() -> Result<(Vec<C::Mor>, Vec<C::Mor>)>,
    ) {
        let case = self.tally(law);
        let verdict = build().and_then(|(l, r)| diagram_eq(cat, &l, &r));
        match verdict {
            Ok(v) if v.equal => {}
            Ok(v) => {
                let sides = (to_value(&v.left), to_value(&v.right));
                self.fail(
                    law,
                    case,
                    FailureKind::LawViolation,
                    to_value(inputs),
                    Some(sides),
                    None,
                );
            }
            Err(e) => self.fail(
                law,
                case,
                FailureKind::Typing,
                to_value(inputs),
                None,
                Some(e.to_string()),
            ),
        }
    }

    /// [`Checker::paths`] for two single morphisms.
    pub fn mors<C: Bipermutative, I: Serialize + ?Sized>(
        &mut self,
        cat: &C,
        law: &str,
        inputs: &I,
        build: impl FnOnce() -> Result<(C::Mor, C::Mor)>,
    ) {
        self.paths(cat, law, inputs, || build().map(|(l, r)| (vec![l], vec![r])));
    }

    pub fn objs<O: PartialEq + Serialize, I: Serialize + ?Sized>(
        &mut self,
        law: &str,
        inputs: &I,
        left: &O,
        right: &O,
    ) {
        let case = self.tally(law);
        if left != right {
            let sides = (to_value(left), to_value(right));
            self.fail(
                law,
                case,
                FailureKind::LawViolation,
                to_value(inputs),
                Some(sides),
                None,
            );
        }
    }

    pub fn holds<I: Serialize + ?Sized>(
        &mut self,
        law: &str,
        inputs: &I,
        outcome: Result<bool>,
        detail: impl FnOnce() -> String,
    ) {
        let case = self.tally(law);
        match outcome {
            Ok(true) => {}
            Ok(false) => self.fail(
                law,
                case,
                FailureKind::LawViolation,
                to_value(inputs),
                None,
                Some(detail()),
            ),
            Err(e) => self.fail(
                law,
                case,
                FailureKind::Typing,
                to_value(inputs),
                None,
                Some(e.to_string()),
            ),
        }
    }

    pub fn skip(&mut self, law: &str, reason: impl Into<String>) {
        self.report.skipped.push(Skip {
            law: law.into(),
            reason: reason.into(),
        });
    }

    /// Failures sorted by law, then case.
    pub fn finish(mut self) -> AxiomReport {
        self.report
            .failures
            .sort_by(|a, b| a.law.cmp(&b.law).then(a.case.cmp(&b.case)));
        self.report
    }
}

fn to_value<T: Serialize + ?Sized>(x: &T) -> Value {
    serde_json::to_value(x).unwrap_or_else(|e| Value::String(format!("<unserializable: {e}>")))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Structure {
    Additive,
    Multiplicative,
}

impl Structure {
    fn tag(self) -> &'static str {
        match self {
            Structure::Additive => "add",
            Structure::Multiplicative => "mul",
        }
    }

    fn unit<C: Bipermutative>(self, cat: &C) -> C::Obj {
        match self {
            Structure::Additive => cat.zero(),
            Structure::Multiplicative => cat.one(),
        }
    }

    fn obj<C: Bipermutative>(self, cat: &C, a: &C::Obj, b: &C::Obj) -> C::Obj {
        match self {
            Structure::Additive => cat.oplus(a, b),
            Structure::Multiplicative => cat.otimes(a, b),
        }
    }

    fn mor<C: Bipermutative>(self, cat: &C, f: &C::Mor, g: &C::Mor) -> Result<C::Mor> {
        match self {
            Structure::Additive => cat.oplus_mor(f, g),
            Structure::Multiplicative => cat.otimes_mor(f, g),
        }
    }

    fn braid<C: Bipermutative>(self, cat: &C, a: &C::Obj, b: &C::Obj) -> C::Mor {
        match self {
            Structure::Additive => cat.beta_plus(a, b),
            Structure::Multiplicative => cat.beta_times(a, b),
        }
    }

    fn f2<F: SymBimonoidalFunctor>(
        self,
        f: &F,
        a: &ObjOf<F::Source>,
        b: &ObjOf<F::Source>,
    ) -> Result<MorOf<F::Target>> {
        match self {
            Structure::Additive => f.f2_plus(a, b),
            Structure::Multiplicative => f.f2_times(a, b),
        }
    }

    fn f0<F: SymBimonoidalFunctor>(self, f: &F) -> Result<MorOf<F::Target>> {
        match self {
            Structure::Additive => f.f0_plus(),
            Structure::Multiplicative => f.f0_times(),
        }
    }
}

fn pick<'a, T>(rng: &mut SampleRng, pool: &'a [T]) -> &'a T {
    pool.choose(rng).expect("object pool is never empty")
}

/// A random morphism out of a random pool object.
fn any_mor<C: Samplable>(cat: &C, rng: &mut SampleRng, pool: &[C::Obj], bounds: &Bounds) -> C::Mor {
    let a = pick(rng, pool).clone();
    cat.random_morphism_from(rng, &a, bounds)
}

/// A random chain of composable morphisms, in application order.
fn chain<C: Samplable>(cat: &C, rng: &mut SampleRng, pool: &[C::Obj], bounds: &Bounds, len: usize) -> Vec<C::Mor> {
    let mut out: Vec<C::Mor> = Vec::with_capacity(len);
    let mut at = pick(rng, pool).clone();
    for _ in 0..len {
        let f = cat.random_morphism_from(rng, &at, bounds);
        at = cat.cod(&f);
        out.push(f);
    }
    out
}

/// Category axioms: identities are units and composition is associative.
pub fn check_category<C: Samplable>(ck: &mut Checker, cat: &C, pool: &[C::Obj]) {
    let law = "category.identity";
    let mut rng = ck.rng(law);
    for _ in 0..ck.samples() {
        let f = any_mor(cat, &mut rng, pool, ck.bounds());
        let (ida, idb) = (cat.id(&cat.dom(&f)), cat.id(&cat.cod(&f)));
        ck.paths(cat, law, &f, || Ok((vec![ida.clone(), f.clone()], vec![f.clone()])));
        ck.paths(cat, law, &f, || Ok((vec![f.clone(), idb], vec![f.clone()])));
    }
    let law = "category.associativity";
    let mut rng = ck.rng(law);
    for _ in 0..ck.samples() {
        let fs = chain(cat, &mut rng, pool, ck.bounds(), 3);
        ck.mors(cat, law, &fs, || {
            let gf = cat.compose(&fs[1], &fs[0])?;
            let hg = cat.compose(&fs[2], &fs[1])?;
            Ok((cat.compose(&fs[2], &gf)?, cat.compose(&hg, &fs[0])?))
        });
    }
}

/// Strict associativity and unitality, functoriality, and the symmetry,
/// hexagon and naturality laws of one of the two braidings.
pub fn check_permutative<C: Samplable>(ck: &mut Checker, cat: &C, s: Structure, pool: &[C::Obj]) {
    let p = |name: &str| format!("permutative.{}.{name}", s.tag());
    let e = s.unit(cat);

    let law = p("associativity-objects");
    for [a, b, c] in ck.tuples(&law, pool) {
        let left = s.obj(cat, &s.obj(cat, &a, &b), &c);
        let right = s.obj(cat, &a, &s.obj(cat, &b, &c));
        ck.objs(&law, &(&a, &b, &c), &left, &right);
    }
    let law = p("unit-objects");
    for [a] in ck.tuples(&law, pool) {
        ck.objs(&law, &a, &s.obj(cat, &a, &e), &a);
        ck.objs(&law, &a, &s.obj(cat, &e, &a), &a);
    }
    let law = p("symmetry");
    for [a, b] in ck.tuples(&law, pool) {
        ck.paths(cat, &law, &(&a, &b), || {
            Ok((
                vec![s.braid(cat, &a, &b), s.braid(cat, &b, &a)],
                vec![cat.id(&s.obj(cat, &a, &b))],
            ))
        });
    }
    let law = p("braiding-unit");
    for [a] in ck.tuples(&law, pool) {
        ck.mors(cat, &law, &a, || Ok((s.braid(cat, &a, &e), cat.id(&a))));
        ck.mors(cat, &law, &a, || Ok((s.braid(cat, &e, &a), cat.id(&a))));
    }
    let law = p("hexagon");
    for [a, b, c] in ck.tuples(&law, pool) {
        ck.paths(cat, &law, &(&a, &b, &c), || {
            let first = s.mor(cat, &s.braid(cat, &a, &b), &cat.id(&c))?;
            let second = s.mor(cat, &cat.id(&b), &s.braid(cat, &a, &c))?;
            Ok((vec![first, second], vec![s.braid(cat, &a, &s.obj(cat, &b, &c))]))
        });
    }
    let law = p("hexagon-mirror");
    for [a, b, c] in ck.tuples(&law, pool) {
        ck.paths(cat, &law, &(&a, &b, &c), || {
            let first = s.mor(cat, &cat.id(&a), &s.braid(cat, &b, &c))?;
            let second = s.mor(cat, &s.braid(cat, &a, &c), &cat.id(&b))?;
            Ok((vec![first, second], vec![s.braid(cat, &s.obj(cat, &a, &b), &c)]))
        });
    }

    let law = p("associativity-morphisms");
    let mut rng = ck.rng(&law);
    for _ in 0..ck.samples() {
        let fs: Vec<C::Mor> = (0..3).map(|_| any_mor(cat, &mut rng, pool, ck.bounds())).collect();
        ck.mors(cat, &law, &fs, || {
            let left = s.mor(cat, &s.mor(cat, &fs[0], &fs[1])?, &fs[2])?;
            let right = s.mor(cat, &fs[0], &s.mor(cat, &fs[1], &fs[2])?)?;
            Ok((left, right))
        });
    }
    let law = p("unit-morphisms");
    let mut rng = ck.rng(&law);
    let ide = cat.id(&e);
    for _ in 0..ck.samples() {
        let f = any_mor(cat, &mut rng, pool, ck.bounds());
        ck.mors(cat, &law, &f, || Ok((s.mor(cat, &f, &ide)?, f.clone())));
        ck.mors(cat, &law, &f, || Ok((s.mor(cat, &ide, &f)?, f.clone())));
    }
    let law = p("functoriality");
    for [a, b] in ck.tuples(&law, pool) {
        ck.mors(cat, &law, &(&a, &b), || {
            Ok((s.mor(cat, &cat.id(&a), &cat.id(&b))?, cat.id(&s.obj(cat, &a, &b))))
        });
    }
    let mut rng = ck.rng(&law);
    for _ in 0..ck.samples() {
        let fs = chain(cat, &mut rng, pool, ck.bounds(), 2);
        let gs = chain(cat, &mut rng, pool, ck.bounds(), 2);
        ck.paths(cat, &law, &(&fs, &gs), || {
            let left = s.mor(cat, &cat.compose(&fs[1], &fs[0])?, &cat.compose(&gs[1], &gs[0])?)?;
            Ok((
                vec![left],
                vec![s.mor(cat, &fs[0], &gs[0])?, s.mor(cat, &fs[1], &gs[1])?],
            ))
        });
    }
    let law = p("braiding-naturality");
    let mut rng = ck.rng(&law);
    for _ in 0..ck.samples() {
        let f = any_mor(cat, &mut rng, pool, ck.bounds());
        let g = any_mor(cat, &mut rng, pool, ck.bounds());
        ck.paths(cat, &law, &(&f, &g), || {
            let (a, b, a2, b2) = (cat.dom(&f), cat.dom(&g), cat.cod(&f), cat.cod(&g));
            Ok((
                vec![s.mor(cat, &f, &g)?, s.braid(cat, &a2, &b2)],
                vec![s.braid(cat, &a, &b), s.mor(cat, &g, &f)?],
            ))
        });
    }
}

/// Both permutative structures, the multiplicative zeros, both
/// distributivities, and the three compatibility diagrams.
pub fn check_bipermutative<C: Samplable>(ck: &mut Checker, cat: &C, pool: &[C::Obj]) {
    check_category(ck, cat, pool);
    check_permutative(ck, cat, Structure::Additive, pool);
    check_permutative(ck, cat, Structure::Multiplicative, pool);
    let z = cat.zero();
    let idz = cat.id(&z);

    let law = "bipermutative.zero-objects";
    for [a] in ck.tuples(law, pool) {
        ck.objs(law, &a, &cat.otimes(&z, &a), &z);
        ck.objs(law, &a, &cat.otimes(&a, &z), &z);
    }
    let law = "bipermutative.zero-morphisms";
    let mut rng = ck.rng(law);
    for _ in 0..ck.samples() {
        let f = any_mor(cat, &mut rng, pool, ck.bounds());
        ck.mors(cat, law, &f, || Ok((cat.otimes_mor(&f, &idz)?, idz.clone())));
        ck.mors(cat, law, &f, || Ok((cat.otimes_mor(&idz, &f)?, idz.clone())));
    }
    let law = "bipermutative.braiding-zero";
    for [a] in ck.tuples(law, pool) {
        ck.mors(cat, law, &a, || Ok((cat.beta_times(&a, &z), idz.clone())));
        ck.mors(cat, law, &a, || Ok((cat.beta_times(&z, &a), idz.clone())));
    }
    let law = "bipermutative.right-distributivity-objects";
    for [a, b, c] in ck.tuples(law, pool) {
        let left = cat.otimes(&cat.oplus(&a, &b), &c);
        let right = cat.oplus(&cat.otimes(&a, &c), &cat.otimes(&b, &c));
        ck.objs(law, &(&a, &b, &c), &left, &right);
    }
    let law = "bipermutative.right-distributivity-morphisms";
    let mut rng = ck.rng(law);
    for _ in 0..ck.samples() {
        let fs: Vec<C::Mor> = (0..3).map(|_| any_mor(cat, &mut rng, pool, ck.bounds())).collect();
        ck.mors(cat, law, &fs, || {
            let left = cat.otimes_mor(&cat.oplus_mor(&fs[0], &fs[1])?, &fs[2])?;
            let right = cat.oplus_mor(&cat.otimes_mor(&fs[0], &fs[2])?, &cat.otimes_mor(&fs[1], &fs[2])?)?;
            Ok((left, right))
        });
    }
    let law = "bipermutative.left-distributivity-inverse";
    for [a, b, c] in ck.tuples(law, pool) {
        let (d, di) = (cat.delta_l(&a, &b, &c), cat.delta_l_inv(&a, &b, &c));
        let dom = cat.otimes(&a, &cat.oplus(&b, &c));
        let cod = cat.oplus(&cat.otimes(&a, &b), &cat.otimes(&a, &c));
        ck.paths(cat, law, &(&a, &b, &c), || {
            Ok((vec![d.clone(), di.clone()], vec![cat.id(&dom)]))
        });
        ck.paths(cat, law, &(&a, &b, &c), || {
            Ok((vec![di.clone(), d.clone()], vec![cat.id(&cod)]))
        });
    }
    let law = "bipermutative.left-distributivity-naturality";
    let mut rng = ck.rng(law);
    for _ in 0..ck.samples() {
        let fs: Vec<C::Mor> = (0..3).map(|_| any_mor(cat, &mut rng, pool, ck.bounds())).collect();
        ck.paths(cat, law, &fs, || {
            let (f, g, h) = (&fs[0], &fs[1], &fs[2]);
            let (a, b, c) = (cat.dom(f), cat.dom(g), cat.dom(h));
            let (a2, b2, c2) = (cat.cod(f), cat.cod(g), cat.cod(h));
            Ok((
                vec![cat.otimes_mor(f, &cat.oplus_mor(g, h)?)?, cat.delta_l(&a2, &b2, &c2)],
                vec![
                    cat.delta_l(&a, &b, &c),
                    cat.oplus_mor(&cat.otimes_mor(f, g)?, &cat.otimes_mor(f, h)?)?,
                ],
            ))
        });
    }
    let law = "bipermutative.distributivity-braiding";
    for [a, b, c] in ck.tuples(law, pool) {
        ck.paths(cat, law, &(&a, &b, &c), || {
            let twist = cat.oplus_mor(&cat.beta_times(&b, &a), &cat.beta_times(&c, &a))?;
            Ok((
                vec![cat.beta_times(&a, &cat.oplus(&b, &c)), twist],
                vec![cat.delta_l(&a, &b, &c)],
            ))
        });
    }
    let law = "bipermutative.additive-braiding-distributes";
    for [a, b, c] in ck.tuples(law, pool) {
        ck.mors(cat, law, &(&a, &b, &c), || {
            let left = cat.otimes_mor(&cat.beta_plus(&a, &b), &cat.id(&c))?;
            Ok((left, cat.beta_plus(&cat.otimes(&a, &c), &cat.otimes(&b, &c))))
        });
    }
    let law = "bipermutative.distributivity-2x2";
    for [a, b, c, d] in ck.tuples(law, pool) {
        ck.paths(cat, law, &(&a, &b, &c, &d), || {
            let (ac, ad, bc, bd) = (
                cat.otimes(&a, &c),
                cat.otimes(&a, &d),
                cat.otimes(&b, &c),
                cat.otimes(&b, &d),
            );
            let split = cat.oplus_mor(&cat.delta_l(&a, &c, &d), &cat.delta_l(&b, &c, &d))?;
            let middle = sum_mors(cat, &[cat.id(&ac), cat.beta_plus(&ad, &bc), cat.id(&bd)])?;
            Ok((vec![split, middle], vec![cat.delta_l(&cat.oplus(&a, &b), &c, &d)]))
        });
    }
}

/// The bipermutative suite on `Bs A`, plus the explicit shape of its
/// structure maps.
pub fn check_strictified<C: Samplable + Clone>(ck: &mut Checker, bs: &Strictified<C>, pool: &[BsObjOf<C>]) {
    check_bipermutative(ck, bs, pool);
    let base = bs.base();
    let identity_components = |x: &crate::strictify::BsMorOf<C>| {
        x.components()
            .iter()
            .zip(x.cod().monomials())
            .all(|(g, m)| base.mor_eq(g, &base.id(&bs.eval_monomial(m))))
    };

    let law = "strictify.structure-components";
    for [a, b, c] in ck.tuples(law, pool) {
        let (r, s, u) = (a.additive_len(), b.additive_len(), c.additive_len());
        let bp = bs.beta_plus(&a, &b);
        let ok = bp.reindex() == &IndexFn::from(block_perm(r, s)) && identity_components(&bp);
        ck.holds(law, &(&a, &b), Ok(ok), || {
            "additive braiding is not a block reindexing".into()
        });
        let dl = bs.delta_l(&a, &b, &c);
        let ok = dl.reindex() == &IndexFn::from(distribution_perm(r, s, u)) && identity_components(&dl);
        ck.holds(law, &(&a, &b, &c), Ok(ok), || {
            "left distributivity is not a pure reindexing".into()
        });
        let bt = bs.beta_times(&a, &b);
        let (av, bv) = (bs.monomial_values(&a), bs.monomial_values(&b));
        let ok = bt.reindex() == &IndexFn::from(swap_perm(r, s))
            && bt.components().iter().enumerate().all(|(t, g)| {
                let (k, i) = (t / r.max(1), t % r.max(1));
                base.mor_eq(g, &base.beta_times(&av[i], &bv[k]))
            });
        ck.holds(law, &(&a, &b), Ok(ok), || {
            "multiplicative braiding components differ from the base braiding".into()
        });
        ck.mors(bs, law, &(&a, &b, &c), || {
            Ok((bs.delta_r(&a, &b, &c)?, bs.id(&a.sum(&b).product(&c))))
        });
    }
}

/// Both monoidal-functor structures, the two bimonoidal compatibilities and
/// their left-handed forms, and invertibility of the multiplicative
/// constraints.
pub fn check_sbf<F>(ck: &mut Checker, f: &F, pool: &[ObjOf<F::Source>])
where
    F: SymBimonoidalFunctor,
    F::Source: Samplable,
{
    let (src, tgt) = (f.source(), f.target());
    let bounds = *ck.bounds();

    let law = "functor.identities";
    for [a] in ck.tuples(law, pool) {
        ck.mors(tgt, law, &a, || Ok((f.map_mor(&src.id(&a))?, tgt.id(&f.map_obj(&a)))));
    }
    let law = "functor.composition";
    let mut rng = ck.rng(law);
    for _ in 0..ck.samples() {
        let fs = chain(src, &mut rng, pool, &bounds, 2);
        ck.paths(tgt, law, &fs, || {
            Ok((
                vec![f.map_mor(&src.compose(&fs[1], &fs[0])?)?],
                vec![f.map_mor(&fs[0])?, f.map_mor(&fs[1])?],
            ))
        });
    }

    for s in [Structure::Additive, Structure::Multiplicative] {
        let p = |name: &str| format!("sbf.{}.{name}", s.tag());
        let e = s.unit(src);

        let law = p("constraint-naturality");
        let mut rng = ck.rng(&law);
        for _ in 0..ck.samples() {
            let x = any_mor(src, &mut rng, pool, &bounds);
            let y = any_mor(src, &mut rng, pool, &bounds);
            ck.paths(tgt, &law, &(&x, &y), || {
                let (a, b, a2, b2) = (src.dom(&x), src.dom(&y), src.cod(&x), src.cod(&y));
                Ok((
                    vec![s.f2(f, &a, &b)?, f.map_mor(&s.mor(src, &x, &y)?)?],
                    vec![s.mor(tgt, &f.map_mor(&x)?, &f.map_mor(&y)?)?, s.f2(f, &a2, &b2)?],
                ))
            });
        }
        let law = p("left-unity");
        for [a] in ck.tuples(&law, pool) {
            ck.paths(tgt, &law, &a, || {
                let fa = tgt.id(&f.map_obj(&a));
                Ok((vec![s.mor(tgt, &s.f0(f)?, &fa)?, s.f2(f, &e, &a)?], vec![fa.clone()]))
            });
        }
        let law = p("right-unity");
        for [a] in ck.tuples(&law, pool) {
            ck.paths(tgt, &law, &a, || {
                let fa = tgt.id(&f.map_obj(&a));
                Ok((vec![s.mor(tgt, &fa, &s.f0(f)?)?, s.f2(f, &a, &e)?], vec![fa.clone()]))
            });
        }
        let law = p("associativity");
        for [a, b, c] in ck.tuples(&law, pool) {
            ck.paths(tgt, &law, &(&a, &b, &c), || {
                let (fa, fc) = (tgt.id(&f.map_obj(&a)), tgt.id(&f.map_obj(&c)));
                Ok((
                    vec![s.mor(tgt, &s.f2(f, &a, &b)?, &fc)?, s.f2(f, &s.obj(src, &a, &b), &c)?],
                    vec![s.mor(tgt, &fa, &s.f2(f, &b, &c)?)?, s.f2(f, &a, &s.obj(src, &b, &c))?],
                ))
            });
        }
        let law = p("braiding");
        for [a, b] in ck.tuples(&law, pool) {
            ck.paths(tgt, &law, &(&a, &b), || {
                Ok((
                    vec![s.f2(f, &a, &b)?, f.map_mor(&s.braid(src, &a, &b))?],
                    vec![s.braid(tgt, &f.map_obj(&a), &f.map_obj(&b)), s.f2(f, &b, &a)?],
                ))
            });
        }
    }

    let law = "sbf.mul.constraint-inverse";
    for [a, b] in ck.tuples(law, pool) {
        let fab = tgt.otimes(&f.map_obj(&a), &f.map_obj(&b));
        ck.paths(tgt, law, &(&a, &b), || {
            Ok((vec![f.f2_times(&a, &b)?, f.f2_times_inv(&a, &b)?], vec![tgt.id(&fab)]))
        });
        ck.paths(tgt, law, &(&a, &b), || {
            Ok((
                vec![f.f2_times_inv(&a, &b)?, f.f2_times(&a, &b)?],
                vec![tgt.id(&f.map_obj(&src.otimes(&a, &b)))],
            ))
        });
    }
    let law = "sbf.mul.unit-inverse";
    ck.paths(tgt, law, &(), || {
        Ok((vec![f.f0_times()?, f.f0_times_inv()?], vec![tgt.id(&tgt.one())]))
    });
    ck.paths(tgt, law, &(), || {
        Ok((
            vec![f.f0_times_inv()?, f.f0_times()?],
            vec![tgt.id(&f.map_obj(&src.one()))],
        ))
    });

    let z = src.zero();
    let law = "sbf.right-zero";
    for [a] in ck.tuples(law, pool) {
        ck.paths(tgt, law, &a, || {
            let widen = tgt.otimes_mor(&tgt.id(&f.map_obj(&a)), &f.f0_plus()?)?;
            Ok((vec![widen, f.f2_times(&a, &z)?], vec![f.f0_plus()?]))
        });
    }
    let law = "sbf.left-zero";
    for [a] in ck.tuples(law, pool) {
        ck.paths(tgt, law, &a, || {
            let widen = tgt.otimes_mor(&f.f0_plus()?, &tgt.id(&f.map_obj(&a)))?;
            Ok((vec![widen, f.f2_times(&z, &a)?], vec![f.f0_plus()?]))
        });
    }
    let law = "sbf.right-distributivity";
    for [a, b, c] in ck.tuples(law, pool) {
        ck.paths(tgt, law, &(&a, &b, &c), || {
            let fc = tgt.id(&f.map_obj(&c));
            let (ac, bc) = (src.otimes(&a, &c), src.otimes(&b, &c));
            Ok((
                vec![
                    tgt.otimes_mor(&f.f2_plus(&a, &b)?, &fc)?,
                    f.f2_times(&src.oplus(&a, &b), &c)?,
                ],
                vec![
                    tgt.oplus_mor(&f.f2_times(&a, &c)?, &f.f2_times(&b, &c)?)?,
                    f.f2_plus(&ac, &bc)?,
                ],
            ))
        });
    }
    let law = "sbf.left-distributivity";
    for [a, b, c] in ck.tuples(law, pool) {
        ck.paths(tgt, law, &(&a, &b, &c), || {
            let fa = tgt.id(&f.map_obj(&a));
            let (ab, ac) = (src.otimes(&a, &b), src.otimes(&a, &c));
            let (fa_, fb, fc) = (f.map_obj(&a), f.map_obj(&b), f.map_obj(&c));
            Ok((
                vec![
                    tgt.otimes_mor(&fa, &f.f2_plus(&b, &c)?)?,
                    f.f2_times(&a, &src.oplus(&b, &c))?,
                    f.map_mor(&src.delta_l(&a, &b, &c))?,
                ],
                vec![
                    tgt.delta_l(&fa_, &fb, &fc),
                    tgt.oplus_mor(&f.f2_times(&a, &b)?, &f.f2_times(&a, &c)?)?,
                    f.f2_plus(&ab, &ac)?,
                ],
            ))
        });
    }
}

/// Whether every constraint of `f` is an identity, on the sampled pairs.
pub fn is_strict<F: SymBimonoidalFunctor>(f: &F, pairs: &[[ObjOf<F::Source>; 2]]) -> Result<bool> {
    let tgt = f.target();
    let is_id = |m: MorOf<F::Target>| tgt.dom(&m) == tgt.cod(&m) && tgt.mor_eq(&m, &tgt.id(&tgt.dom(&m)));
    if !is_id(f.f0_plus()?) || !is_id(f.f0_times()?) {
        return Ok(false);
    }
    for [a, b] in pairs {
        if !is_id(f.f2_plus(a, b)?) || !is_id(f.f2_times(a, b)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Compares two functors with the same source and target on objects,
/// morphisms, and all constraint data.
pub fn check_functors_agree<F, G>(ck: &mut Checker, prefix: &str, f: &F, g: &G, pool: &[ObjOf<F::Source>])
where
    F: SymBimonoidalFunctor,
    F::Source: Samplable,
    G: SymBimonoidalFunctor<Source = F::Source, Target = F::Target>,
{
    let (src, tgt) = (f.source(), f.target());
    let law = format!("{prefix}.objects");
    for [a] in ck.tuples(&law, pool) {
        ck.objs(&law, &a, &f.map_obj(&a), &g.map_obj(&a));
    }
    let law = format!("{prefix}.morphisms");
    let mut rng = ck.rng(&law);
    for _ in 0..ck.samples() {
        let x = any_mor(src, &mut rng, pool, ck.bounds());
        ck.mors(tgt, &law, &x, || Ok((f.map_mor(&x)?, g.map_mor(&x)?)));
    }
    let law = format!("{prefix}.constraints");
    ck.mors(tgt, &law, "f0_plus", || Ok((f.f0_plus()?, g.f0_plus()?)));
    ck.mors(tgt, &law, "f0_times", || Ok((f.f0_times()?, g.f0_times()?)));
    ck.mors(tgt, &law, "f0_times_inv", || Ok((f.f0_times_inv()?, g.f0_times_inv()?)));
    for [a, b] in ck.tuples(&law, pool) {
        ck.mors(tgt, &law, &(&a, &b), || Ok((f.f2_plus(&a, &b)?, g.f2_plus(&a, &b)?)));
        ck.mors(tgt, &law, &(&a, &b), || Ok((f.f2_times(&a, &b)?, g.f2_times(&a, &b)?)));
        ck.mors(tgt, &law, &(&a, &b), || {
            Ok((f.f2_times_inv(&a, &b)?, g.f2_times_inv(&a, &b)?))
        });
    }
}

/// The unit of the adjunction on `a`. Replaceable so that a deliberately
/// wrong unit can be checked.
pub type UnitFn<'a, C> = dyn Fn(&Strictified<C>, &BsObjOf<C>) -> Result<crate::strictify::BsMorOf<C>> + 'a;

/// `L ⊣ R`: `L ∘ R` is the identity, both triangles, naturality and
/// bimonoidality of `η`, and `η_a` invertible exactly when `a` has additive
/// length one.
pub fn check_adjunction<C: Samplable + Clone>(ck: &mut Checker, base: &C, base_pool: &[C::Obj], pool: &[BsObjOf<C>]) {
    check_adjunction_with_unit(ck, base, base_pool, pool, &eta::<C>)
}

pub fn check_adjunction_with_unit<C: Samplable + Clone>(
    ck: &mut Checker,
    base: &C,
    base_pool: &[C::Obj],
    pool: &[BsObjOf<C>],
    unit: &UnitFn<'_, C>,
) {
    let (l, r) = (LeftAdjoint::new(base.clone()), RightAdjoint::new(base.clone()));
    let bs = r.strictified();
    let bounds = *ck.bounds();

    let law = "adjunction.lr-identity-objects";
    for [a] in ck.tuples(law, base_pool) {
        ck.objs(law, &a, &l.map_obj(&r.map_obj(&a)), &a);
    }
    let law = "adjunction.lr-identity-morphisms";
    let limit = 4096;
    for [a, b] in ck.tuples(law, base_pool) {
        for g in base.enumerate_morphisms(&a, &b, limit) {
            ck.mors(base, law, &g, || Ok((l.map_mor(&r.map_mor(&g)?)?, g.clone())));
        }
    }
    let law = "adjunction.lr-identity-constraints";
    let lr = crate::transport::Composite::new(r.clone(), l.clone());
    let is_id = |m: &C::Mor| base.dom(m) == base.cod(m) && base.mor_eq(m, &base.id(&base.dom(m)));
    ck.holds(
        law,
        "f0",
        lr.f0_plus().and_then(|x| Ok(is_id(&x) && is_id(&lr.f0_times()?))),
        || "unit constraints of L∘R are not identities".into(),
    );
    for [a, b] in ck.tuples(law, base_pool) {
        let outcome =
            (|| Ok(is_id(&lr.f2_plus(&a, &b)?) && is_id(&lr.f2_times(&a, &b)?) && is_id(&lr.f2_times_inv(&a, &b)?)))();
        ck.holds(law, &(&a, &b), outcome, || {
            "binary constraints of L∘R are not identities".into()
        });
    }

    let law = "adjunction.left-triangle";
    for [a] in ck.tuples(law, pool) {
        ck.mors(base, law, &a, || {
            let la = l.map_obj(&a);
            Ok((base.compose(&base.id(&la), &l.map_mor(&unit(bs, &a)?)?)?, base.id(&la)))
        });
    }
    let law = "adjunction.right-triangle";
    for [a] in ck.tuples(law, base_pool) {
        ck.paths(bs, law, &a, || {
            let ra = r.map_obj(&a);
            Ok((vec![unit(bs, &ra)?, r.map_mor(&base.id(&a))?], vec![bs.id(&ra)]))
        });
    }
    let law = "adjunction.unit-naturality";
    let mut rng = ck.rng(law);
    for _ in 0..ck.samples() {
        let x = any_mor(bs, &mut rng, pool, &bounds);
        ck.paths(bs, law, &x, || {
            let (a, b) = (bs.dom(&x), bs.cod(&x));
            Ok((
                vec![unit(bs, &a)?, r.map_mor(&l.map_mor(&x)?)?],
                vec![x.clone(), unit(bs, &b)?],
            ))
        });
    }
    let law = "adjunction.unit-additive-unit";
    ck.paths(bs, law, &(), || {
        Ok((
            vec![unit(bs, &BsObj::zero())?],
            vec![r.f0_plus()?, r.map_mor(&l.f0_plus()?)?],
        ))
    });
    let law = "adjunction.unit-multiplicative-unit";
    ck.paths(bs, law, &(), || {
        Ok((
            vec![unit(bs, &BsObj::one())?],
            vec![r.f0_times()?, r.map_mor(&l.f0_times()?)?],
        ))
    });
    for (law, s) in [
        ("adjunction.unit-additive", Structure::Additive),
        ("adjunction.unit-multiplicative", Structure::Multiplicative),
    ] {
        for [a, b] in ck.tuples(law, pool) {
            ck.paths(bs, law, &(&a, &b), || {
                let (la, lb) = (l.map_obj(&a), l.map_obj(&b));
                Ok((
                    vec![unit(bs, &s.obj(bs, &a, &b))?],
                    vec![
                        s.mor(bs, &unit(bs, &a)?, &unit(bs, &b)?)?,
                        s.f2(&r, &la, &lb)?,
                        r.map_mor(&s.f2(&l, &a, &b)?)?,
                    ],
                ))
            });
        }
    }
    let law = "adjunction.unit-invertibility";
    for [a] in ck.tuples(law, pool) {
        let outcome = unit(bs, &a).map(|u| bs.invert(&u).is_some() == (a.additive_len() == 1));
        ck.holds(law, &a, outcome, || {
            format!("unit invertibility does not match additive length {}", a.additive_len())
        });
    }
}
