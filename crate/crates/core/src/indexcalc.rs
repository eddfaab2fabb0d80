//! Finite index calculus.
//!
//! Every coherence isomorphism of the strictified category is driven by a
//! function between ordered index sets `{1 < 2 < ... < r}`. This module holds
//! those functions ([`IndexFn`]), the bijections among them ([`Perm`]), and the
//! handful of canonical permutations the construction needs. All indices seen
//! through the public interface are 1-based.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A function `{1..r} -> {1..s}`, stored as its list of 1-based values.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IndexFn {
    cod: usize,
    values: Vec<usize>,
}

impl IndexFn {
    pub fn new(cod: usize, values: Vec<usize>) -> Result<Self> {
        if let Some(&bad) = values.iter().find(|&&v| v == 0 || v > cod) {
            return Err(Error::Range { index: bad, bound: cod });
        }
        Ok(IndexFn { cod, values })
    }

    pub fn identity(n: usize) -> Self {
        IndexFn {
            cod: n,
            values: (1..=n).collect(),
        }
    }

    /// The unique function `{1..r} -> {1}`.
    pub fn to_one(r: usize) -> Self {
        IndexFn {
            cod: 1,
            values: vec![1; r],
        }
    }

    pub fn dom_len(&self) -> usize {
        self.values.len()
    }

    pub fn cod_len(&self) -> usize {
        self.cod
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// Value at the 1-based index `i`. Panics when `i` is out of range.
    pub fn apply(&self, i: usize) -> usize {
        assert!(
            (1..=self.values.len()).contains(&i),
            "index {i} outside 1..={}",
            self.values.len()
        );
        self.values[i - 1]
    }

    /// Preimage of `k`, ascending.
    pub fn fiber(&self, k: usize) -> Vec<usize> {
        self.values
            .iter()
            .enumerate()
            .filter(|&(_, &v)| v == k)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// All preimages, one ascending list per codomain index.
    pub fn fibers(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.cod];
        for (i, &v) in self.values.iter().enumerate() {
            out[v - 1].push(i + 1);
        }
        out
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &IndexFn) -> Result<IndexFn> {
        if first.cod != self.dom_len() {
            return Err(Error::Arity {
                expected: self.dom_len(),
                got: first.cod,
            });
        }
        Ok(IndexFn {
            cod: self.cod,
            values: first.values.iter().map(|&v| self.values[v - 1]).collect(),
        })
    }

    pub fn to_perm(&self) -> Option<Perm> {
        if self.cod != self.values.len() {
            return None;
        }
        Perm::new(self.values.clone()).ok()
    }

    /// Enumerates every function `{1..r} -> {1..s}` in lexicographic order of
    /// value lists.
    pub fn all(r: usize, s: usize) -> Vec<IndexFn> {
        if s == 0 {
            return if r == 0 { vec![IndexFn::identity(0)] } else { Vec::new() };
        }
        let mut out = Vec::new();
        let mut values = vec![1; r];
        loop {
            out.push(IndexFn {
                cod: s,
                values: values.clone(),
            });
            let mut pos = r;
            loop {
                if pos == 0 {
                    return out;
                }
                pos -= 1;
                if values[pos] < s {
                    values[pos] += 1;
                    break;
                }
                values[pos] = 1;
            }
        }
    }
}

impl From<Perm> for IndexFn {
    fn from(p: Perm) -> Self {
        IndexFn {
            cod: p.images.len(),
            values: p.images,
        }
    }
}

/// A bijection of `{1..n}`, stored by its images.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Perm {
    images: Vec<usize>,
}

impl TryFrom<Vec<usize>> for Perm {
    type Error = Error;

    fn try_from(images: Vec<usize>) -> Result<Self> {
        Perm::new(images)
    }
}

impl From<Perm> for Vec<usize> {
    fn from(p: Perm) -> Self {
        p.images
    }
}

impl Perm {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n {
                return Err(Error::Range { index: v, bound: n });
            }
            if std::mem::replace(&mut seen[v - 1], true) {
                return Err(Error::Malformed {
                    what: "permutation",
                    detail: format!("value {v} repeated in {images:?}"),
                });
            }
        }
        Ok(Perm { images })
    }

    pub fn identity(n: usize) -> Self {
        Perm {
            images: (1..=n).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// `self ∘ first`; both must have the same degree.
    pub fn after(&self, first: &Perm) -> Result<Perm> {
        if first.degree() != self.degree() {
            return Err(Error::Arity {
                expected: self.degree(),
                got: first.degree(),
            });
        }
        Ok(Perm {
            images: first.images.iter().map(|&v| self.images[v - 1]).collect(),
        })
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Perm { images: inv }
    }

    /// Moves the item at position `i` to position `self(i)`.
    pub fn permute<T: Clone>(&self, items: &[T]) -> Result<Vec<T>> {
        if items.len() != self.degree() {
            return Err(Error::Arity {
                expected: self.degree(),
                got: items.len(),
            });
        }
        let mut slots: Vec<Option<T>> = vec![None; items.len()];
        for (i, item) in items.iter().enumerate() {
            slots[self.images[i] - 1] = Some(item.clone());
        }
        Ok(slots.into_iter().map(|s| s.expect("bijection")).collect())
    }
}

/// Lexicographic position of the pair `(i, j)` in `{1..m} × {1..n}`.
pub fn lex_index(i: usize, j: usize, m: usize, n: usize) -> Result<usize> {
    if !(1..=m).contains(&i) {
        return Err(Error::Range { index: i, bound: m });
    }
    if !(1..=n).contains(&j) {
        return Err(Error::Range { index: j, bound: n });
    }
    Ok(j + (i - 1) * n)
}

/// Inverse of [`lex_index`] for a grid with `n` columns.
pub fn lex_pair(x: usize, n: usize) -> (usize, usize) {
    debug_assert!(x >= 1 && n >= 1);
    ((x - 1) / n + 1, (x - 1) % n + 1)
}

/// `φ × ψ`, with both product index sets ordered lexicographically.
pub fn product_fn(phi: &IndexFn, psi: &IndexFn) -> IndexFn {
    let (u, w) = (psi.dom_len(), psi.cod_len());
    let mut values = Vec::with_capacity(phi.dom_len() * u);
    for &fi in &phi.values {
        for &gp in &psi.values {
            values.push(gp + (fi - 1) * w);
        }
    }
    debug_assert_eq!(values.len(), phi.dom_len() * u);
    IndexFn {
        cod: phi.cod * w,
        values,
    }
}

/// `φ ⊔ ψ`: the right summand is shifted past the left codomain.
pub fn coproduct_fn(phi: &IndexFn, psi: &IndexFn) -> IndexFn {
    let shift = phi.cod;
    IndexFn {
        cod: phi.cod + psi.cod,
        values: phi
            .values
            .iter()
            .copied()
            .chain(psi.values.iter().map(|&v| v + shift))
            .collect(),
    }
}

/// The permutation that carries the ascending order of `(ψφ)⁻¹(p)` to its
/// grouped order: first the part lying over the least `k ∈ ψ⁻¹(p)`, then the
/// next, each block ascending. Returned as the bijection sending a position in
/// the ascending list to its position in the grouped list.
pub fn grouping_perm(phi: &IndexFn, psi: &IndexFn, p: usize) -> Result<Perm> {
    if !(1..=psi.cod_len()).contains(&p) {
        return Err(Error::Range {
            index: p,
            bound: psi.cod_len(),
        });
    }
    let composite = psi.after(phi)?;
    let ascending = composite.fiber(p);
    Ok(sort_positions(ascending.iter().map(|&i| phi.apply(i))))
}

/// The permutation regrouping all of `{1..r}` by φ-value (the `p = 1` case of
/// [`grouping_perm`] with ψ the unique map to a point).
pub fn sorting_perm(phi: &IndexFn) -> Perm {
    sort_positions(phi.values.iter().copied())
}

// Position of each key in the stable ascending sort of `keys`.
fn sort_positions(keys: impl Iterator<Item = usize>) -> Perm {
    let keys: Vec<usize> = keys.collect();
    let mut order: Vec<usize> = (0..keys.len()).collect();
    order.sort_by_key(|&t| keys[t]);
    let mut images = vec![0; keys.len()];
    for (new_pos, &old) in order.iter().enumerate() {
        images[old] = new_pos + 1;
    }
    Perm { images }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CanonicalPerm {
    /// Interchanges a leading block of `r` with a trailing block of `s`.
    Block(usize, usize),
    /// `(i, k) ↦ (k, i)` from the `r × s` grid to the `s × r` grid.
    Swap(usize, usize),
}

pub fn canonical_perm(kind: CanonicalPerm) -> Perm {
    match kind {
        CanonicalPerm::Block(r, s) => block_perm(r, s),
        CanonicalPerm::Swap(r, s) => swap_perm(r, s),
    }
}

pub fn block_perm(r: usize, s: usize) -> Perm {
    let images = (1..=r).map(|i| s + i).chain(1..=s).collect();
    Perm { images }
}

pub fn swap_perm(r: usize, s: usize) -> Perm {
    let mut images = Vec::with_capacity(r * s);
    for i in 1..=r {
        for k in 1..=s {
            images.push(i + (k - 1) * r);
        }
    }
    Perm { images }
}

/// `{1..r} × ({1..s} ⊔ {1..u}) → ({1..r} × {1..s}) ⊔ ({1..r} × {1..u})`,
/// sending each pair to its counterpart.
pub fn distribution_perm(r: usize, s: usize, u: usize) -> Perm {
    let mut images = Vec::with_capacity(r * (s + u));
    for i in 1..=r {
        for x in 1..=s + u {
            images.push(if x <= s {
                x + (i - 1) * s
            } else {
                r * s + (x - s) + (i - 1) * u
            });
        }
    }
    Perm { images }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f(cod: usize, v: &[usize]) -> IndexFn {
        IndexFn::new(cod, v.to_vec()).unwrap()
    }

    // Oracle: grouped order by explicit enumeration over ψ⁻¹(p), then φ⁻¹(k).
    fn grouping_oracle(phi: &IndexFn, psi: &IndexFn, p: usize) -> Vec<usize> {
        let ascending: Vec<usize> = (1..=phi.dom_len()).filter(|&i| psi.apply(phi.apply(i)) == p).collect();
        let mut grouped = Vec::new();
        for k in 1..=psi.dom_len() {
            if psi.apply(k) != p {
                continue;
            }
            for i in 1..=phi.dom_len() {
                if phi.apply(i) == k {
                    grouped.push(i);
                }
            }
        }
        ascending
            .iter()
            .map(|i| grouped.iter().position(|g| g == i).unwrap() + 1)
            .collect()
    }

    #[test]
    fn fibers_examples() {
        assert_eq!(f(2, &[2, 1, 2]).fibers(), vec![vec![2], vec![1, 3]]);
        assert_eq!(IndexFn::identity(3).fibers(), vec![vec![1], vec![2], vec![3]]);
        assert_eq!(f(2, &[]).fibers(), vec![Vec::<usize>::new(), vec![]]);
    }

    #[test]
    fn rejects_out_of_range_values() {
        assert!(IndexFn::new(2, vec![1, 3]).is_err());
        assert!(IndexFn::new(2, vec![0]).is_err());
        assert!(Perm::new(vec![1, 1]).is_err());
        assert!(Perm::new(vec![2, 3]).is_err());
    }

    #[test]
    fn lex_index_examples() {
        assert_eq!(lex_index(2, 3, 5, 4).unwrap(), 7);
        assert_eq!(lex_index(1, 1, 1, 9).unwrap(), 1);
        // enumerate in lex order: the last pair lands on m·n
        let mut seen = Vec::new();
        for i in 1..=3 {
            for j in 1..=4 {
                seen.push(lex_index(i, j, 3, 4).unwrap());
            }
        }
        assert_eq!(seen, (1..=12).collect::<Vec<_>>());
        assert_eq!(lex_index(3, 4, 3, 4).unwrap(), 12);
        assert!(matches!(
            lex_index(4, 1, 3, 4),
            Err(Error::Range { index: 4, bound: 3 })
        ));
        assert!(lex_index(1, 0, 3, 4).is_err());
        assert_eq!(lex_pair(7, 4), (2, 3));
    }

    #[test]
    fn product_fn_examples() {
        let id1 = IndexFn::identity(1);
        assert_eq!(product_fn(&id1, &id1), id1);
        assert_eq!(product_fn(&f(2, &[2, 1]), &id1), f(2, &[2, 1]));
        assert_eq!(product_fn(&f(1, &[1, 1]), &f(2, &[2, 1])), f(2, &[2, 1, 2, 1]));
    }

    #[test]
    fn coproduct_fn_examples() {
        assert_eq!(coproduct_fn(&f(1, &[1]), &f(1, &[1])), f(2, &[1, 2]));
        assert_eq!(coproduct_fn(&f(0, &[]), &f(2, &[2, 1])), f(2, &[2, 1]));
        assert_eq!(coproduct_fn(&f(2, &[2, 1]), &f(1, &[1, 1])), f(3, &[2, 1, 3, 3]));
    }

    #[test]
    fn grouping_perm_examples() {
        let phi = f(2, &[2, 1, 2]);
        let psi = f(1, &[1, 1]);
        let g = grouping_perm(&phi, &psi, 1).unwrap();
        assert_eq!(g.images(), &[2, 1, 3]);
        assert_eq!(g.images(), grouping_oracle(&phi, &psi, 1).as_slice());
        // grouped order lists the ascending entries [1,2,3] as [2,1,3]
        assert_eq!(g.permute(&[1, 2, 3]).unwrap(), vec![2, 1, 3]);

        // order-preserving restriction gives the identity
        let phi = f(3, &[1, 2, 2, 3]);
        let psi = f(2, &[1, 1, 2]);
        assert!(grouping_perm(&phi, &psi, 1).unwrap().is_identity());
        // singleton ψ-fiber gives the identity
        let phi = f(2, &[2, 1, 2, 1]);
        let psi = f(2, &[2, 1]);
        for p in 1..=2 {
            assert!(grouping_perm(&phi, &psi, p).unwrap().is_identity());
        }
        assert!(matches!(grouping_perm(&phi, &psi, 3), Err(Error::Range { .. })));
    }

    #[test]
    fn canonical_perm_examples() {
        assert_eq!(canonical_perm(CanonicalPerm::Block(2, 3)).images(), &[4, 5, 1, 2, 3]);
        assert!(canonical_perm(CanonicalPerm::Swap(1, 5)).is_identity());
        assert_eq!(canonical_perm(CanonicalPerm::Swap(2, 2)).images(), &[1, 3, 2, 4]);
        assert!(block_perm(3, 0).is_identity());
        assert!(block_perm(0, 3).is_identity());
    }

    #[test]
    fn swaps_are_mutually_inverse() {
        for r in 0..=4 {
            for s in 0..=4 {
                let there = swap_perm(r, s);
                let back = swap_perm(s, r);
                assert!(back.after(&there).unwrap().is_identity(), "r={r} s={s}");
            }
        }
    }

    #[test]
    fn distribution_perm_unfolds_pairs() {
        // one element on each side: identity on 2 elements
        assert!(distribution_perm(1, 1, 1).is_identity());
        assert_eq!(distribution_perm(2, 1, 1).images(), &[1, 3, 2, 4]);
        assert!(distribution_perm(3, 0, 2).is_identity());
    }

    #[test]
    fn product_fn_is_associative_exhaustively() {
        let mut fns = Vec::new();
        for r in 0..=2 {
            for s in 0..=2 {
                fns.extend(IndexFn::all(r, s));
            }
        }
        let mut checked = 0;
        for a in &fns {
            for b in &fns {
                for c in &fns {
                    if a.dom_len() * b.dom_len() * c.dom_len() > 24 {
                        continue;
                    }
                    let left = product_fn(&product_fn(a, b), c);
                    let right = product_fn(a, &product_fn(b, c));
                    assert_eq!(left, right);
                    checked += 1;
                }
            }
        }
        assert!(checked > 1000);
    }

    #[test]
    fn all_counts_functions() {
        assert_eq!(IndexFn::all(3, 2).len(), 8);
        assert_eq!(IndexFn::all(0, 0).len(), 1);
        assert_eq!(IndexFn::all(2, 0).len(), 0);
        assert_eq!(IndexFn::all(0, 3).len(), 1);
    }

    fn index_fn() -> impl Strategy<Value = IndexFn> {
        (1usize..5, 0usize..7)
            .prop_flat_map(|(s, r)| proptest::collection::vec(1..=s, r).prop_map(move |v| IndexFn::new(s, v).unwrap()))
    }

    fn composable_pair() -> impl Strategy<Value = (IndexFn, IndexFn)> {
        index_fn().prop_flat_map(|phi| {
            let s = phi.cod_len();
            (Just(phi), 1usize..4).prop_flat_map(move |(phi, u)| {
                proptest::collection::vec(1..=u, s).prop_map(move |v| (phi.clone(), IndexFn::new(u, v).unwrap()))
            })
        })
    }

    proptest! {
        #[test]
        fn fibers_partition_the_domain(phi in index_fn()) {
            let concat: Vec<usize> = phi.fibers().concat();
            prop_assert!(Perm::new(concat).is_ok());
            let id = IndexFn::identity(phi.cod_len());
            for p in 1..=phi.cod_len() {
                prop_assert!(grouping_perm(&phi, &id, p).unwrap().is_identity());
            }
        }

        #[test]
        fn identity_restriction_never_regroups(psi in index_fn()) {
            let id = IndexFn::identity(psi.dom_len());
            for p in 1..=psi.cod_len() {
                prop_assert!(grouping_perm(&id, &psi, p).unwrap().is_identity());
            }
        }

        #[test]
        fn grouping_matches_enumeration((phi, psi) in composable_pair()) {
            for p in 1..=psi.cod_len() {
                let g = grouping_perm(&phi, &psi, p).unwrap();
                let want = grouping_oracle(&phi, &psi, p);
                prop_assert_eq!(g.images(), want.as_slice());
            }
        }

        #[test]
        fn perm_inverse_roundtrip(v in Just((1..=6usize).collect::<Vec<_>>()).prop_shuffle()) {
            let p = Perm::new(v).unwrap();
            prop_assert!(p.inverse().after(&p).unwrap().is_identity());
            prop_assert!(p.after(&p.inverse()).unwrap().is_identity());
        }
    }
}
