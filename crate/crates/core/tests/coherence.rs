use biperm::category::{adjacent_transposition, realize_sigma, sum_objs};
use biperm::indexcalc::Perm;
use biperm::instances::{Fsk, FskMor, FskObj};
use biperm::sample::{labelled_rng, Bounds, Samplable};
use biperm::{Bipermutative, Strictified};
use proptest::prelude::*;

/// Block permutation of `⟨n₁⟩ ∨ ... ∨ ⟨nₖ⟩` computed directly from offsets.
fn block_oracle(sizes: &[usize], perm: &[usize]) -> FskMor {
    let k = sizes.len();
    let mut order = vec![0; k];
    for (i, &p) in perm.iter().enumerate() {
        order[p - 1] = i;
    }
    let mut new_offset = vec![0; k];
    let mut acc = 0;
    for &i in &order {
        new_offset[i] = acc;
        acc += sizes[i];
    }
    let mut images = Vec::new();
    for (i, &n) in sizes.iter().enumerate() {
        images.extend((1..=n).map(|x| new_offset[i] + x));
    }
    let total = sizes.iter().sum();
    FskMor::new(total, total, images).unwrap()
}

/// Bubble sort from the right end, a different schedule of adjacent swaps
/// from the library's insertion sort.
fn bubble_sigma(objs: &[FskObj], perm: &[usize]) -> FskMor {
    let mut items: Vec<(usize, FskObj)> = perm.iter().copied().zip(objs.iter().copied()).collect();
    let mut acc = Fsk.id(&sum_objs(&Fsk, objs));
    for pass in 0..items.len() {
        for t in (pass..items.len().saturating_sub(1)).rev() {
            if items[t].0 > items[t + 1].0 {
                let current: Vec<FskObj> = items.iter().map(|x| x.1).collect();
                let step = adjacent_transposition(&Fsk, &current, t).unwrap();
                acc = Fsk.compose(&step, &acc).unwrap();
                items.swap(t, t + 1);
            }
        }
    }
    acc
}

fn sizes_and_perm() -> impl Strategy<Value = (Vec<usize>, Vec<usize>)> {
    prop::collection::vec(0usize..4, 0..6).prop_flat_map(|sizes| {
        let k = sizes.len();
        (Just(sizes), Just((1..=k).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #[test]
    fn sigma_matches_block_permutation((sizes, perm) in sizes_and_perm()) {
        let objs: Vec<FskObj> = sizes.iter().map(|&n| FskObj(n)).collect();
        let got = realize_sigma(&Fsk, &objs, &Perm::new(perm.clone()).unwrap()).unwrap();
        prop_assert_eq!(got, block_oracle(&sizes, &perm));
    }

    #[test]
    fn sigma_is_schedule_independent((sizes, perm) in sizes_and_perm()) {
        let objs: Vec<FskObj> = sizes.iter().map(|&n| FskObj(n)).collect();
        let got = realize_sigma(&Fsk, &objs, &Perm::new(perm.clone()).unwrap()).unwrap();
        prop_assert_eq!(got, bubble_sigma(&objs, &perm));
    }

    #[test]
    fn sigma_is_functorial((sizes, p) in sizes_and_perm(), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let objs: Vec<FskObj> = sizes.iter().map(|&n| FskObj(n)).collect();
        let mut q: Vec<usize> = (1..=sizes.len()).collect();
        q.shuffle(&mut labelled_rng(seed, "q"));
        let (p, q) = (Perm::new(p).unwrap(), Perm::new(q).unwrap());
        let first = realize_sigma(&Fsk, &objs, &p).unwrap();
        let moved = p.permute(&objs).unwrap();
        let second = realize_sigma(&Fsk, &moved, &q).unwrap();
        let whole = realize_sigma(&Fsk, &objs, &q.after(&p).unwrap()).unwrap();
        prop_assert_eq!(Fsk.compose(&second, &first).unwrap(), whole);
    }
}

#[test]
fn strictified_composition_is_associative() {
    let bs = Strictified::new(Fsk);
    let bounds = Bounds {
        max_size: 3,
        max_add: 3,
        max_mul: 2,
    };
    let mut rng = labelled_rng(42, "assoc");
    for _ in 0..300 {
        let a = bs.random_object(&mut rng, &bounds);
        let f = bs.random_morphism_from(&mut rng, &a, &bounds);
        let g = bs.random_morphism_from(&mut rng, &bs.cod(&f), &bounds);
        let h = bs.random_morphism_from(&mut rng, &bs.cod(&g), &bounds);
        let left = bs.compose(&h, &bs.compose(&g, &f).unwrap()).unwrap();
        let right = bs.compose(&bs.compose(&h, &g).unwrap(), &f).unwrap();
        assert!(bs.mor_eq(&left, &right), "{f:?} {g:?} {h:?}");
    }
}

#[test]
fn strictified_identities_are_units() {
    let bs = Strictified::new(Fsk);
    let bounds = Bounds::default();
    let mut rng = labelled_rng(3, "units");
    for _ in 0..300 {
        let a = bs.random_object(&mut rng, &bounds);
        let f = bs.random_morphism_from(&mut rng, &a, &bounds);
        assert!(bs.mor_eq(&bs.compose(&f, &bs.id(&a)).unwrap(), &f));
        assert!(bs.mor_eq(&bs.compose(&bs.id(&bs.cod(&f)), &f).unwrap(), &f));
    }
}
