//! Discrete bipermutative categories on finite commutative semirings.
//!
//! Objects are semiring elements and the only morphisms are identities, so
//! every structure map is an identity. This type-checks exactly because the
//! semiring laws hold as equalities of elements.
//!
//! # Table files
//!
//! A semiring can be loaded from a plain text grid:
//!
//! ```text
//! # lines starting with '#' are ignored
//! elements: 0 1
//! zero: 0
//! one: 1
//! add:
//! 0 1
//! 1 1
//! mul:
//! 0 0
//! 0 1
//! ```
//!
//! Rows and columns follow the order of `elements`; entry `(x, y)` of a table
//! is `x + y` (respectively `x · y`). Names are arbitrary whitespace-free tokens.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::category::Bipermutative;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemiringSpec {
    pub names: Vec<String>,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    pub zero: usize,
    pub one: usize,
}

impl SemiringSpec {
    /// Truncated naturals `{0, ..., n-1}` with sums and products capped at `n - 1`.
    pub fn saturating(n: usize) -> Self {
        assert!(n >= 2, "need at least two elements");
        let cap = n - 1;
        Self::from_fns(n, |a, b| (a + b).min(cap), |a, b| (a * b).min(cap))
    }

    /// `ℤ/n` with its usual ring operations.
    pub fn modular(n: usize) -> Self {
        assert!(n >= 1, "need at least one element");
        Self::from_fns(n, |a, b| (a + b) % n, |a, b| (a * b) % n)
    }

    /// `{0, 1}` with `1 + 1 = 1`.
    pub fn boolean() -> Self {
        let mut spec = Self::saturating(2);
        spec.names = vec!["false".into(), "true".into()];
        spec
    }

    fn from_fns(n: usize, add: impl Fn(usize, usize) -> usize, mul: impl Fn(usize, usize) -> usize) -> Self {
        SemiringSpec {
            names: (0..n).map(|i| i.to_string()).collect(),
            add: (0..n).map(|a| (0..n).map(|b| add(a, b)).collect()).collect(),
            mul: (0..n).map(|a| (0..n).map(|b| mul(a, b)).collect()).collect(),
            zero: 0,
            one: 1 % n,
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// Checks table shapes and every commutative-semiring law exhaustively.
    pub fn validate(&self) -> Result<()> {
        let n = self.len();
        let shape_ok =
            |t: &Vec<Vec<usize>>| t.len() == n && t.iter().all(|row| row.len() == n && row.iter().all(|&v| v < n));
        if n == 0 || !shape_ok(&self.add) || !shape_ok(&self.mul) || self.zero >= n || self.one >= n {
            return Err(Error::Malformed {
                what: "semiring table",
                detail: format!("tables must be {n}×{n} over the element list"),
            });
        }
        let (add, mul) = (&self.add, &self.mul);
        let name = |x: usize| self.names[x].as_str();
        let fail = |law, xs: &[usize]| {
            let w: Vec<&str> = xs.iter().map(|&x| name(x)).collect();
            Err(Error::SemiringLaw {
                law,
                witness: format!("({})", w.join(", ")),
            })
        };
        for a in 0..n {
            if add[a][self.zero] != a || add[self.zero][a] != a {
                return fail("additive unit", &[a]);
            }
            if mul[a][self.one] != a || mul[self.one][a] != a {
                return fail("multiplicative unit", &[a]);
            }
            if mul[a][self.zero] != self.zero || mul[self.zero][a] != self.zero {
                return fail("multiplicative zero", &[a]);
            }
            for b in 0..n {
                if add[a][b] != add[b][a] {
                    return fail("additive commutativity", &[a, b]);
                }
                if mul[a][b] != mul[b][a] {
                    return fail("multiplicative commutativity", &[a, b]);
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if add[add[a][b]][c] != add[a][add[b][c]] {
                        return fail("additive associativity", &[a, b, c]);
                    }
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                        return fail("multiplicative associativity", &[a, b, c]);
                    }
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]] {
                        return fail("distributivity", &[a, b, c]);
                    }
                }
            }
        }
        Ok(())
    }

    /// Parses the grid format described in the module docs.
    pub fn parse(text: &str) -> Result<Self> {
        let mut names: Option<Vec<String>> = None;
        let mut zero = None;
        let mut one = None;
        let mut add = Vec::new();
        let mut mul = Vec::new();
        let mut section: Option<&'static str> = None;

        let lookup = |names: &Option<Vec<String>>, tok: &str, line: usize| -> Result<usize> {
            let names = names.as_ref().ok_or(Error::Parse {
                line,
                detail: "`elements:` must come first".into(),
            })?;
            names.iter().position(|n| n == tok).ok_or_else(|| Error::Parse {
                line,
                detail: format!("unknown element `{tok}`"),
            })
        };

        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some((key, rest)) = line.split_once(':') {
                let rest = rest.trim();
                match key.trim() {
                    "elements" => {
                        let list: Vec<String> = rest.split_whitespace().map(String::from).collect();
                        if list.is_empty() {
                            return Err(Error::Parse {
                                line: line_no,
                                detail: "empty element list".into(),
                            });
                        }
                        names = Some(list);
                        section = None;
                    }
                    "zero" => {
                        zero = Some(lookup(&names, rest, line_no)?);
                        section = None;
                    }
                    "one" => {
                        one = Some(lookup(&names, rest, line_no)?);
                        section = None;
                    }
                    "add" => section = Some("add"),
                    "mul" => section = Some("mul"),
                    other => {
                        return Err(Error::Parse {
                            line: line_no,
                            detail: format!("unknown key `{other}`"),
                        })
                    }
                }
                continue;
            }
            let row = line
                .split_whitespace()
                .map(|tok| lookup(&names, tok, line_no))
                .collect::<Result<Vec<_>>>()?;
            match section {
                Some("add") => add.push(row),
                Some("mul") => mul.push(row),
                _ => {
                    return Err(Error::Parse {
                        line: line_no,
                        detail: "table row outside `add:`/`mul:` section".into(),
                    })
                }
            }
        }
        let missing = |what: &str| Error::Parse {
            line: 0,
            detail: format!("missing `{what}`"),
        };
        Ok(SemiringSpec {
            names: names.ok_or_else(|| missing("elements"))?,
            add,
            mul,
            zero: zero.ok_or_else(|| missing("zero"))?,
            one: one.ok_or_else(|| missing("one"))?,
        })
    }

    pub fn to_table(&self) -> String {
        let row = |r: &Vec<usize>| r.iter().map(|&v| self.names[v].as_str()).collect::<Vec<_>>().join(" ");
        let mut out = format!(
            "elements: {}\nzero: {}\none: {}\nadd:\n",
            self.names.join(" "),
            self.names[self.zero],
            self.names[self.one]
        );
        for r in &self.add {
            out.push_str(&row(r));
            out.push('\n');
        }
        out.push_str("mul:\n");
        for r in &self.mul {
            out.push_str(&row(r));
            out.push('\n');
        }
        out
    }
}

/// An element of the carrier, by index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Elem(pub usize);

/// The identity morphism on an element; the category is discrete.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ElemId {
    pub obj: Elem,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemiringCategory {
    label: String,
    spec: Arc<SemiringSpec>,
}

impl SemiringCategory {
    pub fn spec(&self) -> &SemiringSpec {
        &self.spec
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.spec.len()).map(Elem)
    }

    pub fn label(&self) -> &str {
        &self.label
    }
}

pub fn semiring_category(spec: SemiringSpec) -> Result<SemiringCategory> {
    named_semiring_category("semiring", spec)
}

pub fn named_semiring_category(label: &str, spec: SemiringSpec) -> Result<SemiringCategory> {
    spec.validate()?;
    Ok(SemiringCategory {
        label: label.to_string(),
        spec: Arc::new(spec),
    })
}

pub fn bool_semiring_category() -> SemiringCategory {
    named_semiring_category("bool-semiring", SemiringSpec::boolean()).expect("boolean semiring is valid")
}

impl Bipermutative for SemiringCategory {
    type Obj = Elem;
    type Mor = ElemId;

    fn name(&self) -> String {
        self.label.clone()
    }

    fn zero(&self) -> Elem {
        Elem(self.spec.zero)
    }

    fn one(&self) -> Elem {
        Elem(self.spec.one)
    }

    fn dom(&self, f: &ElemId) -> Elem {
        f.obj
    }

    fn cod(&self, f: &ElemId) -> Elem {
        f.obj
    }

    fn id(&self, a: &Elem) -> ElemId {
        ElemId { obj: *a }
    }

    fn compose(&self, g: &ElemId, f: &ElemId) -> Result<ElemId> {
        if f.obj != g.obj {
            return Err(Error::typing(
                "semiring composite",
                format!("{} vs {}", self.spec.names[f.obj.0], self.spec.names[g.obj.0]),
            ));
        }
        Ok(*f)
    }

    fn mor_eq(&self, f: &ElemId, g: &ElemId) -> bool {
        f == g
    }

    fn oplus(&self, a: &Elem, b: &Elem) -> Elem {
        Elem(self.spec.add[a.0][b.0])
    }

    fn otimes(&self, a: &Elem, b: &Elem) -> Elem {
        Elem(self.spec.mul[a.0][b.0])
    }

    fn oplus_mor(&self, f: &ElemId, g: &ElemId) -> Result<ElemId> {
        Ok(self.id(&self.oplus(&f.obj, &g.obj)))
    }

    fn otimes_mor(&self, f: &ElemId, g: &ElemId) -> Result<ElemId> {
        Ok(self.id(&self.otimes(&f.obj, &g.obj)))
    }

    fn beta_plus(&self, a: &Elem, b: &Elem) -> ElemId {
        self.id(&self.oplus(a, b))
    }

    fn beta_times(&self, a: &Elem, b: &Elem) -> ElemId {
        self.id(&self.otimes(a, b))
    }

    fn delta_l(&self, a: &Elem, b: &Elem, c: &Elem) -> ElemId {
        self.id(&self.otimes(a, &self.oplus(b, c)))
    }

    fn delta_l_inv(&self, a: &Elem, b: &Elem, c: &Elem) -> ElemId {
        self.delta_l(a, b, c)
    }

    fn invert(&self, f: &ElemId) -> Option<ElemId> {
        Some(*f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boolean_tables() {
        let b = bool_semiring_category();
        let t = Elem(1);
        assert_eq!(b.oplus(&t, &t), t);
        assert_eq!(b.otimes(&t, &t), t);
        assert_eq!(b.beta_plus(&t, &t), b.id(&t));
        assert_eq!(b.name(), "bool-semiring");
    }

    #[test]
    fn standard_tables_validate() {
        for n in 1..=6 {
            SemiringSpec::modular(n).validate().unwrap();
        }
        for n in 2..=6 {
            SemiringSpec::saturating(n).validate().unwrap();
        }
    }

    #[test]
    fn non_distributive_table_is_rejected() {
        // capped addition with min as product: 1·(1+1) = 1 but 1·1 + 1·1 = 2
        let spec = SemiringSpec {
            names: vec!["0".into(), "1".into(), "2".into()],
            add: (0..3).map(|a| (0..3).map(|b| (a + b).min(2)).collect()).collect(),
            mul: (0..3).map(|a| (0..3).map(|b| a.min(b)).collect()).collect(),
            zero: 0,
            one: 2,
        };
        match semiring_category(spec) {
            Err(Error::SemiringLaw { law, witness }) => {
                assert_eq!(law, "distributivity");
                assert_eq!(witness, "(1, 1, 1)");
            }
            other => panic!("expected a law violation, got {other:?}"),
        }
    }

    #[test]
    fn other_violations_are_named() {
        let mut spec = SemiringSpec::modular(3);
        spec.add[1][2] = 1;
        assert!(matches!(
            spec.validate(),
            Err(Error::SemiringLaw {
                law: "additive commutativity",
                ..
            })
        ));
        let mut spec = SemiringSpec::modular(3);
        spec.mul = vec![vec![0; 3]; 3];
        assert!(matches!(spec.validate(), Err(Error::SemiringLaw { .. })));
        let mut spec = SemiringSpec::modular(3);
        spec.add.pop();
        assert!(matches!(spec.validate(), Err(Error::Malformed { .. })));
    }

    #[test]
    fn table_round_trip() {
        let spec = SemiringSpec::saturating(4);
        let parsed = SemiringSpec::parse(&spec.to_table()).unwrap();
        assert_eq!(parsed, spec);
        let b =
            SemiringSpec::parse("# boolean\nelements: f t\nzero: f\none: t\nadd:\nf t\nt t\nmul:\nf f\nf t\n").unwrap();
        assert_eq!(b.add, SemiringSpec::boolean().add);
        b.validate().unwrap();
    }

    #[test]
    fn parse_errors_carry_lines() {
        let err = SemiringSpec::parse("zero: 0\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        let err = SemiringSpec::parse("elements: a b\nzero: c\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = SemiringSpec::parse("elements: a\na\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        assert!(SemiringSpec::parse("elements: a\nzero: a\n").is_err());
    }

    #[test]
    fn discrete_composition_requires_equal_objects() {
        let c = semiring_category(SemiringSpec::modular(4)).unwrap();
        assert!(c.compose(&c.id(&Elem(1)), &c.id(&Elem(2))).is_err());
        assert_eq!(c.compose(&c.id(&Elem(2)), &c.id(&Elem(2))).unwrap(), c.id(&Elem(2)));
    }
}
