//! Suite orchestration and reports.

use std::thread;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::category::Bipermutative;
use crate::checks::{
    check_adjunction, check_bipermutative, check_functors_agree, check_permutative, check_sbf, check_strictified,
    is_strict, AxiomReport, Checker, SamplerConfig, Structure,
};
use crate::error::{Error, Result};
use crate::instances::{bool_semiring_category, named_semiring_category, Fsk, FskObj, SemiringCategory, SemiringSpec};
use crate::mutation::{CorruptF2Times, Mutant, Mutation};
use crate::sample::{Bounds, Samplable};
use crate::strictify::{BsObjOf, Strictified};
use crate::transport::{BsFunctor, Composite, IdentityFunctor, LeftAdjoint, RightAdjoint, SymBimonoidalFunctor};

pub const REPORT_SCHEMA: &str = "biperm-check/report/v1";

pub const SUITES: &[&str] = &[
    "permutative",
    "bipermutative",
    "sbf",
    "strictify-axioms",
    "adjunction",
    "naturality",
    "functor-transport",
];

/// Every law id a suite can emit, with the statement it checks.
pub const LAW_CATALOG: &[(&str, &str)] = &[
    ("category.identity", "f ∘ 1 = f = 1 ∘ f"),
    ("category.associativity", "(h ∘ g) ∘ f = h ∘ (g ∘ f)"),
    ("permutative.add.associativity-objects", "(a ⊕ b) ⊕ c = a ⊕ (b ⊕ c)"),
    ("permutative.add.unit-objects", "a ⊕ 𝟘 = a = 𝟘 ⊕ a"),
    ("permutative.add.associativity-morphisms", "(f ⊕ g) ⊕ h = f ⊕ (g ⊕ h)"),
    ("permutative.add.unit-morphisms", "f ⊕ 1_𝟘 = f = 1_𝟘 ⊕ f"),
    ("permutative.add.functoriality", "⊕ preserves identities and composites"),
    ("permutative.add.braiding-naturality", "β⊕ ∘ (f ⊕ g) = (g ⊕ f) ∘ β⊕"),
    ("permutative.add.symmetry", "β⊕(b, a) ∘ β⊕(a, b) = 1"),
    (
        "permutative.add.hexagon",
        "β⊕(a, b ⊕ c) = (1 ⊕ β⊕(a, c)) ∘ (β⊕(a, b) ⊕ 1)",
    ),
    (
        "permutative.add.hexagon-mirror",
        "β⊕(a ⊕ b, c) = (β⊕(a, c) ⊕ 1) ∘ (1 ⊕ β⊕(b, c))",
    ),
    ("permutative.add.braiding-unit", "β⊕(a, 𝟘) = 1 = β⊕(𝟘, a)"),
    ("permutative.mul.associativity-objects", "(a ⊗ b) ⊗ c = a ⊗ (b ⊗ c)"),
    ("permutative.mul.unit-objects", "a ⊗ 𝟙 = a = 𝟙 ⊗ a"),
    ("permutative.mul.associativity-morphisms", "(f ⊗ g) ⊗ h = f ⊗ (g ⊗ h)"),
    ("permutative.mul.unit-morphisms", "f ⊗ 1_𝟙 = f = 1_𝟙 ⊗ f"),
    ("permutative.mul.functoriality", "⊗ preserves identities and composites"),
    ("permutative.mul.braiding-naturality", "β⊗ ∘ (f ⊗ g) = (g ⊗ f) ∘ β⊗"),
    ("permutative.mul.symmetry", "β⊗(b, a) ∘ β⊗(a, b) = 1"),
    (
        "permutative.mul.hexagon",
        "β⊗(a, b ⊗ c) = (1 ⊗ β⊗(a, c)) ∘ (β⊗(a, b) ⊗ 1)",
    ),
    (
        "permutative.mul.hexagon-mirror",
        "β⊗(a ⊗ b, c) = (β⊗(a, c) ⊗ 1) ∘ (1 ⊗ β⊗(b, c))",
    ),
    ("permutative.mul.braiding-unit", "β⊗(a, 𝟙) = 1 = β⊗(𝟙, a)"),
    ("bipermutative.zero-objects", "𝟘 ⊗ a = 𝟘 = a ⊗ 𝟘"),
    ("bipermutative.zero-morphisms", "f ⊗ 1_𝟘 = 1_𝟘 = 1_𝟘 ⊗ f"),
    ("bipermutative.braiding-zero", "β⊗(a, 𝟘) = 1_𝟘 = β⊗(𝟘, a)"),
    (
        "bipermutative.right-distributivity-objects",
        "(a ⊕ b) ⊗ c = (a ⊗ c) ⊕ (b ⊗ c)",
    ),
    (
        "bipermutative.right-distributivity-morphisms",
        "(f ⊕ g) ⊗ h = (f ⊗ h) ⊕ (g ⊗ h)",
    ),
    (
        "bipermutative.left-distributivity-inverse",
        "δl⁻¹ ∘ δl = 1 and δl ∘ δl⁻¹ = 1",
    ),
    (
        "bipermutative.left-distributivity-naturality",
        "δl ∘ (f ⊗ (g ⊕ h)) = ((f ⊗ g) ⊕ (f ⊗ h)) ∘ δl",
    ),
    (
        "bipermutative.distributivity-braiding",
        "δl(a, b, c) = (β⊗(b, a) ⊕ β⊗(c, a)) ∘ β⊗(a, b ⊕ c)",
    ),
    (
        "bipermutative.additive-braiding-distributes",
        "β⊕(a, b) ⊗ 1_c = β⊕(a ⊗ c, b ⊗ c)",
    ),
    (
        "bipermutative.distributivity-2x2",
        "δl(a ⊕ b, c, d) = (1 ⊕ β⊕(ad, bc) ⊕ 1) ∘ (δl(a, c, d) ⊕ δl(b, c, d))",
    ),
    (
        "strictify.structure-components",
        "β̂⊕, δ̂l are pure reindexings, β̂⊗ has base braiding components, δ̂r = 1",
    ),
    ("functor.identities", "F(1_a) = 1_Fa"),
    ("functor.composition", "F(g ∘ f) = F(g) ∘ F(f)"),
    ("sbf.add.constraint-naturality", "F(f ⊕ g) ∘ f²⊕ = f²⊕ ∘ (Ff ⊕ Fg)"),
    ("sbf.add.left-unity", "f²⊕(𝟘, a) ∘ (f⁰⊕ ⊕ 1) = 1"),
    ("sbf.add.right-unity", "f²⊕(a, 𝟘) ∘ (1 ⊕ f⁰⊕) = 1"),
    (
        "sbf.add.associativity",
        "f²⊕(a ⊕ b, c) ∘ (f²⊕(a, b) ⊕ 1) = f²⊕(a, b ⊕ c) ∘ (1 ⊕ f²⊕(b, c))",
    ),
    ("sbf.add.braiding", "F(β⊕) ∘ f²⊕(a, b) = f²⊕(b, a) ∘ β⊕"),
    ("sbf.mul.constraint-naturality", "F(f ⊗ g) ∘ f²⊗ = f²⊗ ∘ (Ff ⊗ Fg)"),
    ("sbf.mul.left-unity", "f²⊗(𝟙, a) ∘ (f⁰⊗ ⊗ 1) = 1"),
    ("sbf.mul.right-unity", "f²⊗(a, 𝟙) ∘ (1 ⊗ f⁰⊗) = 1"),
    (
        "sbf.mul.associativity",
        "f²⊗(a ⊗ b, c) ∘ (f²⊗(a, b) ⊗ 1) = f²⊗(a, b ⊗ c) ∘ (1 ⊗ f²⊗(b, c))",
    ),
    ("sbf.mul.braiding", "F(β⊗) ∘ f²⊗(a, b) = f²⊗(b, a) ∘ β⊗"),
    ("sbf.mul.constraint-inverse", "f²⊗ has a two-sided inverse"),
    ("sbf.mul.unit-inverse", "f⁰⊗ has a two-sided inverse"),
    ("sbf.right-zero", "f²⊗(a, 𝟘) ∘ (1 ⊗ f⁰⊕) = f⁰⊕"),
    ("sbf.left-zero", "f²⊗(𝟘, a) ∘ (f⁰⊕ ⊗ 1) = f⁰⊕"),
    (
        "sbf.right-distributivity",
        "f²⊗(a ⊕ b, c) ∘ (f²⊕ ⊗ 1) = f²⊕(ac, bc) ∘ (f²⊗ ⊕ f²⊗)",
    ),
    (
        "sbf.left-distributivity",
        "F(δl) ∘ f²⊗(a, b ⊕ c) ∘ (1 ⊗ f²⊕) = f²⊕(ab, ac) ∘ (f²⊗ ⊕ f²⊗) ∘ δl",
    ),
    ("adjunction.lr-identity-objects", "L(Ra) = a"),
    ("adjunction.lr-identity-morphisms", "L(Rg) = g"),
    (
        "adjunction.lr-identity-constraints",
        "every constraint of L ∘ R is an identity",
    ),
    ("adjunction.left-triangle", "ε_La ∘ L(η_a) = 1"),
    ("adjunction.right-triangle", "R(ε_a) ∘ η_Ra = 1"),
    ("adjunction.unit-naturality", "RL(x) ∘ η_a = η_b ∘ x"),
    ("adjunction.unit-additive-unit", "η_0̂ = R(L⁰⊕) ∘ R⁰⊕"),
    ("adjunction.unit-additive", "η_{a⊞b} = R(L²⊕) ∘ R²⊕ ∘ (η_a ⊞ η_b)"),
    ("adjunction.unit-multiplicative-unit", "η_1̂ = R(L⁰⊗) ∘ R⁰⊗"),
    ("adjunction.unit-multiplicative", "η_{a⊠b} = R(L²⊗) ∘ R²⊗ ∘ (η_a ⊠ η_b)"),
    (
        "adjunction.unit-invertibility",
        "η_a is invertible iff a has additive length 1",
    ),
    ("naturality.right-adjoint.objects", "Bs f ∘ R = R ∘ f on objects"),
    ("naturality.right-adjoint.morphisms", "Bs f ∘ R = R ∘ f on morphisms"),
    (
        "naturality.right-adjoint.constraints",
        "Bs f ∘ R = R ∘ f on constraints",
    ),
    ("naturality.left-adjoint.objects", "L ∘ Bs f = f ∘ L on objects"),
    ("naturality.left-adjoint.morphisms", "L ∘ Bs f = f ∘ L on morphisms"),
    ("naturality.left-adjoint.constraints", "L ∘ Bs f = f ∘ L on constraints"),
    (
        "naturality.left-adjoint.strictness",
        "f is strict, as the left square requires",
    ),
    (
        "transport.strict-constraints",
        "every constraint of Bs f is an identity",
    ),
    ("transport.preserves-sums", "Bs f(x ⊞ y) = Bs f(x) ⊞ Bs f(y)"),
    ("transport.preserves-products", "Bs f(x ⊠ y) = Bs f(x) ⊠ Bs f(y)"),
    ("transport.preserves-braidings", "Bs f(β̂) = β̂ for both braidings"),
    ("transport.preserves-left-distributivity", "Bs f(δ̂l) = δ̂l"),
    ("transport.composite.objects", "Bs(g ∘ f) = Bs g ∘ Bs f on objects"),
    ("transport.composite.morphisms", "Bs(g ∘ f) = Bs g ∘ Bs f on morphisms"),
    (
        "transport.composite.constraints",
        "Bs(g ∘ f) = Bs g ∘ Bs f on constraints",
    ),
];

pub fn describe_law(law: &str) -> Option<&'static str> {
    LAW_CATALOG.iter().find(|(id, _)| *id == law).map(|(_, d)| *d)
}

/// The base category a run is about.
#[derive(Debug, Clone)]
pub enum Instance {
    Fsk,
    Semiring { tag: String, cat: SemiringCategory },
}

impl Instance {
    /// `fsk`, `bool-semiring`, or `table:PATH`.
    pub fn parse(tag: &str) -> Result<Instance> {
        match tag {
            "fsk" => Ok(Instance::Fsk),
            "bool-semiring" => Ok(Instance::Semiring {
                tag: tag.into(),
                cat: bool_semiring_category(),
            }),
            _ => match tag.strip_prefix("table:") {
                Some(path) => {
                    let text = std::fs::read_to_string(path).map_err(|e| Error::Malformed {
                        what: "semiring table file",
                        detail: format!("{path}: {e}"),
                    })?;
                    let cat = named_semiring_category(path, SemiringSpec::parse(&text)?)?;
                    Ok(Instance::Semiring { tag: tag.into(), cat })
                }
                None => Err(Error::Malformed {
                    what: "instance",
                    detail: format!("unknown instance `{tag}`; expected fsk, bool-semiring or table:PATH"),
                }),
            },
        }
    }

    pub fn tag(&self) -> String {
        match self {
            Instance::Fsk => "fsk".into(),
            Instance::Semiring { tag, .. } => tag.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub tool_version: String,
    pub instance: String,
    pub suites_requested: Vec<String>,
    pub config: SamplerConfig,
    pub suites: Vec<AxiomReport>,
    pub pass: bool,
}

impl Report {
    pub fn failure_count(&self) -> usize {
        self.suites.iter().map(AxiomReport::failure_count).sum()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "biperm-check {} on {} (seed {}, sizes ≤ {}, additive length ≤ {}, multiplicative length ≤ {}, {} samples{})\n",
            self.tool_version,
            self.instance,
            self.config.seed,
            self.config.bounds.max_size,
            self.config.bounds.max_add,
            self.config.bounds.max_mul,
            self.config.samples,
            if self.config.exhaustive { ", exhaustive" } else { "" }
        );
        for s in &self.suites {
            let status = if s.passed() { "ok" } else { "FAILED" };
            out.push_str(&format!(
                "{:<18} {:<40} {:>8} cases {:>3} laws  {}\n",
                s.suite,
                s.subject,
                s.cases,
                s.laws.len(),
                status
            ));
            for (law, t) in s.laws.iter().filter(|(_, t)| t.failures > 0) {
                out.push_str(&format!("    {law}: {} of {} cases failed\n", t.failures, t.cases));
            }
            for f in &s.failures {
                out.push_str(&format!(
                    "    - {} case {} ({:?}): inputs {}\n",
                    f.law, f.case, f.kind, f.inputs
                ));
                if let Some(d) = &f.detail {
                    out.push_str(&format!("      {d}\n"));
                }
            }
            for k in &s.skipped {
                out.push_str(&format!("    skipped {}: {}\n", k.law, k.reason));
            }
        }
        out.push_str(if self.pass { "PASS\n" } else { "FAIL\n" });
        out
    }

    /// Keeps only the named law, for replaying one failure.
    pub fn restrict_to_law(&mut self, law: &str) {
        for s in &mut self.suites {
            s.laws.retain(|id, _| id == law);
            s.failures.retain(|f| f.law == law);
            s.skipped.retain(|k| k.law == law);
            s.cases = s.laws.values().map(|t| t.cases).sum();
        }
        self.suites.retain(|s| !s.laws.is_empty() || !s.skipped.is_empty());
        self.pass = self.suites.iter().all(AxiomReport::passed);
    }
}

/// Bounds for categories of the form `Bs(Bs A)`, whose objects grow quickly.
pub fn nested_bounds(b: &Bounds) -> Bounds {
    Bounds {
        max_size: b.max_size.min(2),
        max_add: b.max_add.min(2),
        max_mul: b.max_mul.min(1),
    }
}

/// Runs the named suites. Suites run on separate threads where the target
/// has them; the result order follows `names`.
pub fn run(instance: &Instance, names: &[String], config: &SamplerConfig) -> Result<Report> {
    for n in names {
        if !SUITES.contains(&n.as_str()) {
            return Err(Error::Malformed {
                what: "suite",
                detail: format!("unknown suite `{n}`; expected one of {}", SUITES.join(", ")),
            });
        }
    }
    let suites = match instance {
        Instance::Fsk => run_on(&Fsk, names, config),
        Instance::Semiring { cat, .. } => run_on(cat, names, config),
    };
    let pass = suites.iter().all(AxiomReport::passed);
    Ok(Report {
        schema: REPORT_SCHEMA.into(),
        tool_version: env!("CARGO_PKG_VERSION").into(),
        instance: instance.tag(),
        suites_requested: names.to_vec(),
        config: *config,
        suites,
        pass,
    })
}

pub fn run_on<C>(cat: &C, names: &[String], config: &SamplerConfig) -> Vec<AxiomReport>
where
    C: Samplable + Clone + Send + Sync,
    C::Obj: Send + Sync,
    C::Mor: Send + Sync,
{
    if cfg!(target_arch = "wasm32") {
        return names.iter().flat_map(|name| run_suite(cat, name, config)).collect();
    }
    thread::scope(|scope| {
        let handles: Vec<_> = names
            .iter()
            .map(|name| scope.spawn(move || run_suite(cat, name, config)))
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("suite thread panicked"))
            .collect()
    })
}

pub fn run_suite<C: Samplable + Clone>(cat: &C, name: &str, config: &SamplerConfig) -> Vec<AxiomReport> {
    let bounds = &config.bounds;
    let pool = cat.enumerate_objects(bounds);
    let bs = Strictified::new(cat.clone());
    let bs_pool = || bs.enumerate_objects(bounds);
    match name {
        "permutative" => {
            let mut ck = Checker::new(name, cat.name(), config);
            check_permutative(&mut ck, cat, Structure::Additive, &pool);
            check_permutative(&mut ck, cat, Structure::Multiplicative, &pool);
            vec![ck.finish()]
        }
        "bipermutative" => {
            let mut ck = Checker::new(name, cat.name(), config);
            check_bipermutative(&mut ck, cat, &pool);
            vec![ck.finish()]
        }
        "strictify-axioms" => {
            let mut ck = Checker::new(name, bs.name(), config);
            check_strictified(&mut ck, &bs, &bs_pool());
            vec![ck.finish()]
        }
        "sbf" => {
            let bs_pool = bs_pool();
            let id = IdentityFunctor::new(cat.clone());
            let r = RightAdjoint::new(cat.clone());
            let mut out = vec![
                sbf_report(config, &id, &pool),
                sbf_report(config, &r, &pool),
                sbf_report(config, &LeftAdjoint::new(cat.clone()), &bs_pool),
            ];
            out.push(sbf_report(
                config,
                &BsFunctor::new(id).expect("identity is strong"),
                &bs_pool,
            ));
            out.push(sbf_report(config, &BsFunctor::new(r).expect("R is strong"), &bs_pool));
            out
        }
        "adjunction" => {
            let mut ck = Checker::new(name, format!("L ⊣ R over {}", cat.name()), config);
            check_adjunction(&mut ck, cat, &pool, &bs_pool());
            vec![ck.finish()]
        }
        "naturality" => naturality_reports(cat, config),
        "functor-transport" => {
            let bs_pool = bs_pool();
            let id = IdentityFunctor::new(cat.clone());
            let r = RightAdjoint::new(cat.clone());
            let mut out = vec![
                transport_report(
                    config,
                    BsFunctor::new(id.clone()).expect("identity is strong"),
                    &bs_pool,
                ),
                transport_report(config, BsFunctor::new(r.clone()).expect("R is strong"), &bs_pool),
            ];
            let rr = RightAdjoint::new(Strictified::new(cat.clone()));
            out.push(composite_report(config, id, r.clone(), &bs_pool));
            out.push(composite_report(config, r, rr, &bs_pool));
            out
        }
        other => unreachable!("suite names are validated before dispatch: {other}"),
    }
}

fn sbf_report<F>(config: &SamplerConfig, f: &F, pool: &[<F::Source as Bipermutative>::Obj]) -> AxiomReport
where
    F: SymBimonoidalFunctor,
    F::Source: Samplable,
{
    let mut ck = Checker::new("sbf", subject(f), config);
    check_sbf(&mut ck, f, pool);
    ck.finish()
}

fn subject<F: SymBimonoidalFunctor>(f: &F) -> String {
    format!("{}: {} → {}", f.name(), f.source().name(), f.target().name())
}

/// `Bs f` is strict and preserves sums, products, braidings and the left
/// distributivity of morphisms and objects.
fn transport_report<F>(config: &SamplerConfig, bf: BsFunctor<F>, pool: &[BsObjOf<F::Source>]) -> AxiomReport
where
    F: SymBimonoidalFunctor,
    F::Source: Samplable + Clone,
{
    let mut ck = Checker::new("functor-transport", subject(&bf), config);
    let (src, tgt) = (bf.source(), bf.target());
    let bounds = *ck.bounds();

    let law = "transport.strict-constraints";
    for pair in ck.tuples::<_, 2>(law, pool) {
        let outcome = is_strict(&bf, std::slice::from_ref(&pair));
        ck.holds(law, &pair, outcome, || "a constraint of Bs f is not an identity".into());
    }
    for (law, s) in [
        ("transport.preserves-sums", Structure::Additive),
        ("transport.preserves-products", Structure::Multiplicative),
    ] {
        let mut rng = ck.rng(law);
        for _ in 0..ck.samples() {
            let a = &pool[rng.gen_range(0..pool.len())];
            let x = src.random_morphism_from(&mut rng, a, &bounds);
            let b = &pool[rng.gen_range(0..pool.len())];
            let y = src.random_morphism_from(&mut rng, b, &bounds);
            ck.mors(tgt, law, &(&x, &y), || {
                let whole = bf.map_mor(&match s {
                    Structure::Additive => src.oplus_mor(&x, &y)?,
                    Structure::Multiplicative => src.otimes_mor(&x, &y)?,
                })?;
                let (fx, fy) = (bf.map_mor(&x)?, bf.map_mor(&y)?);
                let parts = match s {
                    Structure::Additive => tgt.oplus_mor(&fx, &fy)?,
                    Structure::Multiplicative => tgt.otimes_mor(&fx, &fy)?,
                };
                Ok((whole, parts))
            });
        }
    }
    let law = "transport.preserves-braidings";
    for [a, b] in ck.tuples(law, pool) {
        let (fa, fb) = (bf.map_obj(&a), bf.map_obj(&b));
        ck.mors(tgt, law, &(&a, &b), || {
            Ok((bf.map_mor(&src.beta_plus(&a, &b))?, tgt.beta_plus(&fa, &fb)))
        });
        ck.mors(tgt, law, &(&a, &b), || {
            Ok((bf.map_mor(&src.beta_times(&a, &b))?, tgt.beta_times(&fa, &fb)))
        });
    }
    let law = "transport.preserves-left-distributivity";
    for [a, b, c] in ck.tuples(law, pool) {
        ck.mors(tgt, law, &(&a, &b, &c), || {
            let image = bf.map_mor(&src.delta_l(&a, &b, &c))?;
            Ok((image, tgt.delta_l(&bf.map_obj(&a), &bf.map_obj(&b), &bf.map_obj(&c))))
        });
    }
    ck.finish()
}

/// `Bs(g ∘ f)` against `Bs g ∘ Bs f`.
fn composite_report<F, G>(config: &SamplerConfig, f: F, g: G, pool: &[BsObjOf<F::Source>]) -> AxiomReport
where
    F: SymBimonoidalFunctor + Clone,
    G: SymBimonoidalFunctor<Source = F::Target> + Clone,
    F::Source: Samplable + Clone,
    F::Target: Clone,
    G::Target: Clone,
{
    let whole = BsFunctor::new(Composite::new(f.clone(), g.clone())).expect("composites of strong functors are strong");
    let parts = Composite::new(BsFunctor::new(f).expect("strong"), BsFunctor::new(g).expect("strong"));
    let mut ck = Checker::new("functor-transport", subject(&whole), config);
    check_functors_agree(&mut ck, "transport.composite", &whole, &parts, pool);
    ck.finish()
}

/// The squares expressing naturality of `R` in multiplicatively strong
/// functors and of `L` in strict ones.
fn naturality_reports<C: Samplable + Clone>(cat: &C, config: &SamplerConfig) -> Vec<AxiomReport> {
    let pool = cat.enumerate_objects(&config.bounds);
    let bs = Strictified::new(cat.clone());
    let bs_pool = bs.enumerate_objects(&config.bounds);
    let id = IdentityFunctor::new(cat.clone());
    let r = RightAdjoint::new(cat.clone());
    let mut out = vec![
        right_square(config, id.clone(), &pool),
        right_square(config, r.clone(), &pool),
        left_square(config, id.clone(), &bs_pool),
    ];
    let nested = SamplerConfig {
        bounds: nested_bounds(&config.bounds),
        ..*config
    };
    let bsbs_pool = Strictified::new(bs.clone()).enumerate_objects(&nested.bounds);
    out.push(left_square(
        &nested,
        BsFunctor::new(id).expect("identity is strong"),
        &bsbs_pool,
    ));
    out.push(left_square(config, r, &bs_pool));
    out
}

fn right_square<F>(config: &SamplerConfig, f: F, pool: &[<F::Source as Bipermutative>::Obj]) -> AxiomReport
where
    F: SymBimonoidalFunctor + Clone,
    F::Source: Samplable + Clone,
    F::Target: Clone,
{
    let left = Composite::new(
        RightAdjoint::new(f.source().clone()),
        BsFunctor::new(f.clone()).expect("strong"),
    );
    let right = Composite::new(f.clone(), RightAdjoint::new(f.target().clone()));
    let mut ck = Checker::new("naturality", format!("Bs f ∘ R = R ∘ f, f = {}", f.name()), config);
    check_functors_agree(&mut ck, "naturality.right-adjoint", &left, &right, pool);
    ck.finish()
}

fn left_square<F>(config: &SamplerConfig, f: F, pool: &[BsObjOf<F::Source>]) -> AxiomReport
where
    F: SymBimonoidalFunctor + Clone,
    F::Source: Samplable + Clone,
    F::Target: Clone,
{
    let mut ck = Checker::new("naturality", format!("L ∘ Bs f = f ∘ L, f = {}", f.name()), config);
    let src_pool = f.source().enumerate_objects(&config.bounds);
    let pairs = ck.tuples::<_, 2>("naturality.left-adjoint.strictness", &src_pool);
    let strict = is_strict(&f, &pairs);
    if !matches!(strict, Ok(true)) {
        let why = match strict {
            Err(e) => format!("could not evaluate the constraints of {}: {e}", f.name()),
            _ => format!("{} is not strict", f.name()),
        };
        for part in ["objects", "morphisms", "constraints"] {
            ck.skip(&format!("naturality.left-adjoint.{part}"), why.clone());
        }
        return ck.finish();
    }
    ck.holds("naturality.left-adjoint.strictness", &f.name(), Ok(true), String::new);
    let left = Composite::new(
        BsFunctor::new(f.clone()).expect("strong"),
        LeftAdjoint::new(f.target().clone()),
    );
    let right = Composite::new(LeftAdjoint::new(f.source().clone()), f);
    check_functors_agree(&mut ck, "naturality.left-adjoint", &left, &right, pool);
    ck.finish()
}

/// The documented mutations, each paired with the suite that must notice it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MutationKind {
    /// `β⊕` replaced by the identity on `⟨2⟩ ⊕ ⟨3⟩` and `⟨3⟩ ⊕ ⟨2⟩`,
    /// checked by the permutative suite.
    IdentityBetaPlus,
    /// `δl` replaced by the identity, checked by the bipermutative suite.
    IdentityDeltaL,
    /// The identity functor with `f²⊗` precomposed with a braiding, checked
    /// by the functor suite.
    CorruptF2Times,
}

impl MutationKind {
    pub const ALL: [MutationKind; 3] = [
        MutationKind::IdentityBetaPlus,
        MutationKind::IdentityDeltaL,
        MutationKind::CorruptF2Times,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            MutationKind::IdentityBetaPlus => "identity-beta-plus",
            MutationKind::IdentityDeltaL => "identity-delta-l",
            MutationKind::CorruptF2Times => "corrupt-f2-times",
        }
    }
}

/// Runs the suite that should catch `kind` against the mutated pointed
/// finite sets.
pub fn run_mutation(kind: MutationKind, config: &SamplerConfig) -> AxiomReport {
    let pool = Fsk.enumerate_objects(&config.bounds);
    match kind {
        MutationKind::IdentityBetaPlus => {
            let m = Mutant::new(Fsk, Mutation::IdentityBetaPlusOn(FskObj(2), FskObj(3)));
            let mut ck = Checker::new("permutative", m.name(), config);
            check_permutative(&mut ck, &m, Structure::Additive, &pool);
            ck.finish()
        }
        MutationKind::IdentityDeltaL => {
            let m = Mutant::new(Fsk, Mutation::IdentityDeltaL);
            let mut ck = Checker::new("bipermutative", m.name(), config);
            check_bipermutative(&mut ck, &m, &pool);
            ck.finish()
        }
        MutationKind::CorruptF2Times => {
            let f = CorruptF2Times::new(IdentityFunctor::new(Fsk));
            let mut ck = Checker::new("sbf", subject(&f), config);
            check_sbf(&mut ck, &f, &pool);
            ck.finish()
        }
    }
}
