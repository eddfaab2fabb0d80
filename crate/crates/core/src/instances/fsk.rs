//! Skeletal pointed finite sets `⟨n⟩ = {0, 1, ..., n}` under wedge and smash.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::category::Bipermutative;
use crate::error::{Error, Result};
use crate::indexcalc::{block_perm, lex_index, lex_pair, swap_perm, Perm};

/// The pointed set `⟨n⟩`, basepoint 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FskObj(pub usize);

impl fmt::Display for FskObj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.0)
    }
}

/// A pointed function `⟨m⟩ → ⟨n⟩`. Only the images of `1..=m` are stored; the
/// basepoint always maps to the basepoint.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FskMor {
    dom: usize,
    cod: usize,
    images: Vec<usize>,
}

impl FskMor {
    pub fn new(dom: usize, cod: usize, images: Vec<usize>) -> Result<Self> {
        if images.len() != dom {
            return Err(Error::Arity {
                expected: dom,
                got: images.len(),
            });
        }
        if let Some(&bad) = images.iter().find(|&&v| v > cod) {
            return Err(Error::Range { index: bad, bound: cod });
        }
        Ok(FskMor { dom, cod, images })
    }

    pub fn identity(n: usize) -> Self {
        FskMor {
            dom: n,
            cod: n,
            images: (1..=n).collect(),
        }
    }

    pub fn from_perm(p: &Perm) -> Self {
        FskMor {
            dom: p.degree(),
            cod: p.degree(),
            images: p.images().to_vec(),
        }
    }

    pub fn dom(&self) -> usize {
        self.dom
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        if x == 0 {
            0
        } else {
            self.images[x - 1]
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Fsk;

pub fn fsk_category() -> Fsk {
    Fsk
}

/// `⟨m⟩ ∧ (⟨n⟩ ∨ ⟨p⟩) → (⟨m⟩ ∧ ⟨n⟩) ∨ (⟨m⟩ ∧ ⟨p⟩)`.
///
/// `(i, x)` goes to `(i, x)` in the first block when `x ≤ n`, and to
/// `(i, x - n)` in the second block otherwise.
pub fn fsk_delta_l(m: usize, n: usize, p: usize) -> FskMor {
    let mut images = Vec::with_capacity(m * (n + p));
    for i in 1..=m {
        for x in 1..=n + p {
            images.push(if x <= n {
                x + (i - 1) * n
            } else {
                m * n + (x - n) + (i - 1) * p
            });
        }
    }
    FskMor {
        dom: m * (n + p),
        cod: m * (n + p),
        images,
    }
}

impl Bipermutative for Fsk {
    type Obj = FskObj;
    type Mor = FskMor;

    fn name(&self) -> String {
        "fsk".into()
    }

    fn zero(&self) -> FskObj {
        FskObj(0)
    }

    fn one(&self) -> FskObj {
        FskObj(1)
    }

    fn dom(&self, f: &FskMor) -> FskObj {
        FskObj(f.dom)
    }

    fn cod(&self, f: &FskMor) -> FskObj {
        FskObj(f.cod)
    }

    fn id(&self, a: &FskObj) -> FskMor {
        FskMor::identity(a.0)
    }

    fn compose(&self, g: &FskMor, f: &FskMor) -> Result<FskMor> {
        if f.cod != g.dom {
            return Err(Error::typing("fsk composite", format!("<{}> vs <{}>", f.cod, g.dom)));
        }
        Ok(FskMor {
            dom: f.dom,
            cod: g.cod,
            images: f.images.iter().map(|&x| g.apply(x)).collect(),
        })
    }

    fn mor_eq(&self, f: &FskMor, g: &FskMor) -> bool {
        f == g
    }

    fn oplus(&self, a: &FskObj, b: &FskObj) -> FskObj {
        FskObj(a.0 + b.0)
    }

    fn otimes(&self, a: &FskObj, b: &FskObj) -> FskObj {
        FskObj(a.0 * b.0)
    }

    fn oplus_mor(&self, f: &FskMor, g: &FskMor) -> Result<FskMor> {
        let shift = f.cod;
        let images = f
            .images
            .iter()
            .copied()
            .chain(g.images.iter().map(|&y| if y == 0 { 0 } else { y + shift }))
            .collect();
        Ok(FskMor {
            dom: f.dom + g.dom,
            cod: f.cod + g.cod,
            images,
        })
    }

    fn otimes_mor(&self, f: &FskMor, g: &FskMor) -> Result<FskMor> {
        let mut images = Vec::with_capacity(f.dom * g.dom);
        for i in 1..=f.dom {
            for j in 1..=g.dom {
                let (fi, gj) = (f.apply(i), g.apply(j));
                images.push(if fi == 0 || gj == 0 {
                    0
                } else {
                    lex_index(fi, gj, f.cod, g.cod)?
                });
            }
        }
        Ok(FskMor {
            dom: f.dom * g.dom,
            cod: f.cod * g.cod,
            images,
        })
    }

    fn beta_plus(&self, a: &FskObj, b: &FskObj) -> FskMor {
        FskMor::from_perm(&block_perm(a.0, b.0))
    }

    fn beta_times(&self, a: &FskObj, b: &FskObj) -> FskMor {
        FskMor::from_perm(&swap_perm(a.0, b.0))
    }

    fn delta_l(&self, a: &FskObj, b: &FskObj, c: &FskObj) -> FskMor {
        fsk_delta_l(a.0, b.0, c.0)
    }

    fn delta_l_inv(&self, a: &FskObj, b: &FskObj, c: &FskObj) -> FskMor {
        self.invert(&fsk_delta_l(a.0, b.0, c.0))
            .expect("left distributivity is a bijection")
    }

    fn invert(&self, f: &FskMor) -> Option<FskMor> {
        if f.dom != f.cod {
            return None;
        }
        let p = Perm::new(f.images.clone()).ok()?;
        Some(FskMor::from_perm(&p.inverse()))
    }
}

/// Non-basepoint element of `⟨m⟩ ∧ ⟨n⟩` as a pair.
pub fn smash_pair(x: usize, n: usize) -> (usize, usize) {
    lex_pair(x, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{realize_delta, realize_delta_inv, realize_sigma};

    // Oracle: build the block bijection by tracking where each element of each
    // summand lands after the summands are rearranged.
    fn block_bijection_oracle(sizes: &[usize], perm: &[usize]) -> Vec<usize> {
        let n = sizes.len();
        let mut new_order = vec![0; n];
        for (i, &t) in perm.iter().enumerate() {
            new_order[t - 1] = i;
        }
        let mut new_offset = vec![0; n];
        let mut acc = 0;
        for &i in &new_order {
            new_offset[i] = acc;
            acc += sizes[i];
        }
        let mut images = Vec::new();
        for (i, &size) in sizes.iter().enumerate() {
            for e in 1..=size {
                images.push(new_offset[i] + e);
            }
        }
        images
    }

    // Oracle: enumerate pairs of (⊕ aᵢ) ∧ (⊕ cₖ) and locate each in ⊕ᵢ⊕ₖ aᵢ∧cₖ.
    fn distribution_oracle(left: &[usize], right: &[usize]) -> Vec<usize> {
        let (a, c): (usize, usize) = (left.iter().sum(), right.iter().sum());
        let locate = |sizes: &[usize], x: usize| {
            let mut rem = x;
            for (idx, &s) in sizes.iter().enumerate() {
                if rem <= s {
                    return (idx, rem);
                }
                rem -= s;
            }
            unreachable!()
        };
        let mut images = Vec::new();
        for x in 1..=a {
            for y in 1..=c {
                let (i, xi) = locate(left, x);
                let (k, yk) = locate(right, y);
                let mut offset = 0;
                for (ii, &ls) in left.iter().enumerate() {
                    for (kk, &rs) in right.iter().enumerate() {
                        if (ii, kk) == (i, k) {
                            images.push(offset + yk + (xi - 1) * rs);
                        }
                        offset += ls * rs;
                    }
                }
            }
        }
        images
    }

    fn objs(v: &[usize]) -> Vec<FskObj> {
        v.iter().map(|&n| FskObj(n)).collect()
    }

    #[test]
    fn smash_uses_lex_order() {
        let f = FskMor::identity(3);
        let g = FskMor::identity(4);
        let fg = Fsk.otimes_mor(&f, &g).unwrap();
        assert_eq!(fg.dom(), 12);
        assert_eq!(lex_index(2, 3, 3, 4).unwrap(), 7);
        assert_eq!(fg.apply(7), 7);
        assert_eq!(smash_pair(7, 4), (2, 3));
    }

    #[test]
    fn braidings() {
        assert_eq!(Fsk.beta_plus(&FskObj(2), &FskObj(3)).images(), &[4, 5, 1, 2, 3]);
        let tw = Fsk.beta_times(&FskObj(3), &FskObj(4));
        // (2,3) in 3∧4 is 7; (3,2) in 4∧3 is 2 + 2·3 = 8
        assert_eq!(tw.apply(7), 8);
        assert_eq!(Fsk.beta_times(&FskObj(2), &FskObj(3)).images(), &[1, 3, 5, 2, 4, 6]);
    }

    #[test]
    fn delta_l_examples() {
        assert_eq!(fsk_delta_l(2, 1, 1).images(), &[1, 3, 2, 4]);
        for m in 0..=3 {
            for k in 0..=3 {
                assert_eq!(fsk_delta_l(m, 0, k), FskMor::identity(m * k));
                assert_eq!(fsk_delta_l(m, k, 0), FskMor::identity(m * k));
            }
        }
        for n in 0..=3 {
            for p in 0..=3 {
                assert_eq!(fsk_delta_l(1, n, p), FskMor::identity(n + p));
            }
        }
    }

    #[test]
    fn delta_l_inverse_exhaustive() {
        for m in 0..=3 {
            for n in 0..=3 {
                for p in 0..=3 {
                    let (a, b, c) = (FskObj(m), FskObj(n), FskObj(p));
                    let d = Fsk.delta_l(&a, &b, &c);
                    let di = Fsk.delta_l_inv(&a, &b, &c);
                    let id = FskMor::identity(m * (n + p));
                    assert_eq!(Fsk.compose(&di, &d).unwrap(), id);
                    assert_eq!(Fsk.compose(&d, &di).unwrap(), id);
                }
            }
        }
    }

    #[test]
    fn delta_l_matches_pair_tracking() {
        for m in 0..=3 {
            for n in 0..=3 {
                for p in 0..=3 {
                    assert_eq!(
                        fsk_delta_l(m, n, p).images(),
                        distribution_oracle(&[m], &[n, p]).as_slice()
                    );
                }
            }
        }
    }

    #[test]
    fn right_distributivity_is_literal_identity() {
        for m in 0..=3 {
            for n in 0..=3 {
                for p in 0..=3 {
                    let (a, b, c) = (FskObj(m), FskObj(n), FskObj(p));
                    let lhs = Fsk.otimes(&Fsk.oplus(&a, &b), &c);
                    let rhs = Fsk.oplus(&Fsk.otimes(&a, &c), &Fsk.otimes(&b, &c));
                    assert_eq!(lhs, rhs);
                    let (fa, fb, fc) = (Fsk.id(&a), Fsk.id(&b), Fsk.id(&c));
                    let l = Fsk.otimes_mor(&Fsk.oplus_mor(&fa, &fb).unwrap(), &fc).unwrap();
                    let r = Fsk
                        .oplus_mor(&Fsk.otimes_mor(&fa, &fc).unwrap(), &Fsk.otimes_mor(&fb, &fc).unwrap())
                        .unwrap();
                    assert_eq!(l, r);
                    assert_eq!(l, FskMor::identity(lhs.0));
                }
            }
        }
    }

    #[test]
    fn sigma_examples() {
        let xs = objs(&[2, 1, 3]);
        assert_eq!(
            realize_sigma(&Fsk, &xs, &Perm::identity(3)).unwrap(),
            FskMor::identity(6)
        );
        let two = objs(&[2, 3]);
        assert_eq!(
            realize_sigma(&Fsk, &two, &Perm::new(vec![2, 1]).unwrap()).unwrap(),
            Fsk.beta_plus(&FskObj(2), &FskObj(3))
        );
        let sigma = realize_sigma(&Fsk, &xs, &Perm::new(vec![2, 1, 3]).unwrap()).unwrap();
        assert_eq!(
            sigma.images(),
            block_bijection_oracle(&[2, 1, 3], &[2, 1, 3]).as_slice()
        );
        assert_eq!(sigma.images(), &[2, 3, 1, 4, 5, 6]);
        assert!(realize_sigma(&Fsk, &xs, &Perm::identity(2)).is_err());
    }

    #[test]
    fn sigma_matches_oracle_for_all_perms_of_four() {
        let sizes = [1, 2, 0, 3];
        let xs = objs(&sizes);
        let mut count = 0;
        for a in 1..=4 {
            for b in 1..=4 {
                for c in 1..=4 {
                    for d in 1..=4 {
                        let Ok(p) = Perm::new(vec![a, b, c, d]) else {
                            continue;
                        };
                        let s = realize_sigma(&Fsk, &xs, &p).unwrap();
                        assert_eq!(s.images(), block_bijection_oracle(&sizes, p.images()).as_slice());
                        count += 1;
                    }
                }
            }
        }
        assert_eq!(count, 24);
    }

    #[test]
    fn delta_examples() {
        let id0 = FskMor::identity(0);
        assert_eq!(realize_delta(&Fsk, &[], &objs(&[2, 3])).unwrap(), id0);
        assert_eq!(realize_delta(&Fsk, &objs(&[2]), &[]).unwrap(), id0);
        assert_eq!(
            realize_delta(&Fsk, &objs(&[2]), &objs(&[3])).unwrap(),
            FskMor::identity(6)
        );
        let d = realize_delta(&Fsk, &objs(&[2]), &objs(&[1, 1])).unwrap();
        assert_eq!(d.images(), &[1, 3, 2, 4]);
        assert_eq!(realize_delta_inv(&Fsk, &[], &[]).unwrap(), id0);
        assert_eq!(
            realize_delta_inv(&Fsk, &objs(&[2]), &objs(&[3])).unwrap(),
            FskMor::identity(6)
        );
        let di = realize_delta_inv(&Fsk, &objs(&[2]), &objs(&[1, 1])).unwrap();
        assert_eq!(di.images(), &[1, 3, 2, 4]);
    }

    #[test]
    fn delta_matches_pair_tracking_and_inverts() {
        let lists: Vec<Vec<usize>> = {
            let mut v = vec![vec![]];
            for len in 1..=3 {
                let mut next = Vec::new();
                for prefix in v.iter().filter(|p: &&Vec<usize>| p.len() == len - 1) {
                    for s in 0..=3 {
                        let mut q = prefix.clone();
                        q.push(s);
                        next.push(q);
                    }
                }
                v.extend(next);
            }
            v
        };
        for l in &lists {
            for r in &lists {
                let d = realize_delta(&Fsk, &objs(l), &objs(r)).unwrap();
                assert_eq!(d.images(), distribution_oracle(l, r).as_slice(), "{l:?} {r:?}");
                let di = realize_delta_inv(&Fsk, &objs(l), &objs(r)).unwrap();
                assert_eq!(Fsk.compose(&di, &d).unwrap(), FskMor::identity(d.dom()));
                assert_eq!(Fsk.compose(&d, &di).unwrap(), FskMor::identity(d.dom()));
            }
        }
    }

    #[test]
    fn invert_requires_bijection() {
        assert!(Fsk.invert(&FskMor::new(2, 2, vec![1, 1]).unwrap()).is_none());
        assert!(Fsk.invert(&FskMor::new(1, 1, vec![0]).unwrap()).is_none());
        assert!(Fsk.invert(&FskMor::new(1, 2, vec![1]).unwrap()).is_none());
        let p = FskMor::new(3, 3, vec![3, 1, 2]).unwrap();
        let q = Fsk.invert(&p).unwrap();
        assert_eq!(Fsk.compose(&q, &p).unwrap(), FskMor::identity(3));
    }

    #[test]
    fn construction_validates() {
        assert!(FskMor::new(2, 1, vec![1]).is_err());
        assert!(FskMor::new(1, 1, vec![2]).is_err());
        assert_eq!(FskMor::new(1, 1, vec![0]).unwrap().apply(1), 0);
    }
}
