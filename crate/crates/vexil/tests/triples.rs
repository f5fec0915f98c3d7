use vexil::triples::{all_strict_triples, read_triple_c, search_triples, triple_of_w, Triple, TripleClass};
use vexil::weyl::{enumerate, enumerate_with_odd_coset, SignedPermutation, WeylType};

fn tr(s: &str) -> Triple {
    s.parse().unwrap()
}

fn sp(s: &str) -> SignedPermutation {
    s.parse().unwrap()
}

#[test]
fn classification() {
    assert_eq!(tr("k=2,3,5,8;p=8,6,6,2;q=6,5,2,2;type=C").validate(), TripleClass::Strict);
    let red = tr("k=1,2,3,4,5,6,7,8;p=7,7,6,6,5,4,3,2;q=4,5,6,7,7,7,9,9;type=A");
    assert_eq!(red.validate(), TripleClass::Redundant);
    assert_eq!(tr("k=1,2;p=3,3;q=3,3;type=C").validate(), TripleClass::Invalid);
    assert_eq!(tr("k=1,2;p=2,1;q=2,1;type=C").validate(), TripleClass::Strict);
    assert_eq!(red.reduce_redundant().unwrap(), tr("k=2,6,8;p=7,4,2;q=5,7,9;type=A"));
    let strict = tr("k=1,2;p=2,1;q=2,1;type=C");
    assert_eq!(strict.reduce_redundant().unwrap(), strict);
}

#[test]
fn lambdas() {
    for n in 1..=4u32 {
        let t = Triple::new((1..=n).collect(), (1..=n).rev().collect(), (1..=n).rev().collect(), WeylType::C).unwrap();
        let expect: Vec<u32> = (1..=n).rev().map(|i| 2 * i - 1).collect();
        assert_eq!(t.lambda().unwrap().parts(), expect);
        let d = Triple::new((1..=n).collect(), (0..n).rev().collect(), (0..n).rev().collect(), WeylType::D).unwrap();
        let expect: Vec<u32> = (0..n).rev().map(|i| 2 * i).collect();
        assert_eq!(d.lambda().unwrap().parts(), expect);
    }
    let t = tr("k=2,3,5,8;p=8,6,6,2;q=6,5,2,2;type=C");
    assert_eq!(t.lambda().unwrap().parts(), vec![14, 13, 10, 8, 7, 5, 4, 3]);
    let a = tr("k=2,6,8;p=7,4,2;q=5,7,9;type=A");
    assert_eq!(a.lambda().unwrap().parts(), vec![4, 4, 3, 3, 3, 3, 1, 1]);
}

#[test]
fn insertion_examples() {
    let t = tr("k=2,3,5,8;p=8,6,6,2;q=6,5,2,2;type=C");
    assert_eq!(t.w().unwrap(), sp("1 -9 -8 -4 10 -5 -3 -7 -6 -2"));
    assert!(t.rank_conditions_hold(&t.w().unwrap()));
    let a = tr("k=2,6,8;p=7,4,2;q=5,7,9;type=A");
    assert_eq!(a.w().unwrap(), sp("1 10 8 9 2 3 6 4 5 7"));
    assert!(a.rank_conditions_hold(&a.w().unwrap()));
    for n in 2..=5u32 {
        let d = Triple::new((1..n).collect(), (1..n).rev().collect(), (1..n).rev().collect(), WeylType::D).unwrap();
        let mut expect = vec![1];
        expect.extend((2..=n as i32).map(|i| -i));
        assert_eq!(d.w().unwrap(), SignedPermutation::new(expect).unwrap());
        assert!(d.rank_conditions_hold(&d.w().unwrap()));
        let plus = d.plus_map().unwrap();
        assert_eq!(plus.p, (2..=n).rev().collect::<Vec<_>>());
        let lp: Vec<u32> = d.lambda().unwrap().parts().iter().map(|x| x + 1).collect();
        assert_eq!(plus.lambda().unwrap().parts(), lp);
    }
}

#[test]
fn recovery_examples() {
    let w = sp("1 -9 -8 -4 10 -5 -3 -7 -6 -2");
    assert_eq!(triple_of_w(&w, WeylType::C), Some(tr("k=2,3,5,8;p=8,6,6,2;q=6,5,2,2;type=C")));
    assert_eq!(read_triple_c(&w), Some(tr("k=2,3,5,8;p=8,6,6,2;q=6,5,2,2;type=C")));
    assert_eq!(triple_of_w(&sp("-3 2 -1"), WeylType::C), None);
    assert_eq!(triple_of_w(&SignedPermutation::identity(3), WeylType::C), Some(Triple::empty(WeylType::C)));
    let a = sp("1 10 8 9 2 3 6 4 5 7");
    assert_eq!(triple_of_w(&a, WeylType::A), Some(tr("k=2,6,8;p=7,4,2;q=5,7,9;type=A")));
}

#[test]
fn census() {
    let c = enumerate(3, WeylType::C).iter().filter(|w| triple_of_w(w, WeylType::C).is_some()).count();
    assert_eq!(c, 33);
    let d = enumerate(3, WeylType::D).iter().filter(|w| triple_of_w(w, WeylType::D).is_some()).count();
    assert_eq!(d, 18);
}

#[test]
fn triples_are_unique_and_search_is_complete() {
    for n in 1..=4 {
        for w in enumerate_with_odd_coset(n, WeylType::C) {
            let found = search_triples(&w, WeylType::C);
            assert!(found.len() <= 1, "{w}: {found:?}");
            if let Some(t) = read_triple_c(&w) {
                assert_eq!(found, vec![t]);
            }
        }
        for w in enumerate(n, WeylType::A) {
            assert!(search_triples(&w, WeylType::A).len() <= 1, "{w}");
        }
    }
    // brute force over bounded triples agrees with the search
    for ty in [WeylType::C, WeylType::A] {
        let n = 3;
        let mut hits = std::collections::BTreeMap::new();
        let pmax = if ty == WeylType::A { n - 1 } else { n };
        for t in all_strict_triples(ty, n, pmax) {
            let w = t.w().unwrap();
            if w.n() <= n as usize {
                assert!(hits.insert(w, t).is_none());
            }
        }
        for w in enumerate(n as usize, ty) {
            assert_eq!(hits.get(&w.trimmed()).cloned(), triple_of_w(&w, ty), "{w}");
        }
    }
}

#[test]
fn round_trip_and_reduction() {
    for t in all_strict_triples(WeylType::C, 5, 5) {
        let w = t.w().unwrap();
        assert!(t.rank_conditions_hold(&w), "{t}");
        assert_eq!(triple_of_w(&w, WeylType::C), Some(t.clone()));
    }
    for t in all_strict_triples(WeylType::D, 4, 4) {
        let w = t.w().unwrap();
        assert!(t.rank_conditions_hold(&w), "{t}");
        assert_eq!(triple_of_w(&w, WeylType::D), Some(t));
    }
    for t in all_strict_triples(WeylType::A, 4, 4) {
        let w = t.w().unwrap();
        assert!(t.rank_conditions_hold(&w), "{t}");
        assert_eq!(triple_of_w(&w, WeylType::A), Some(t.clone()));
        let d = t.dual().unwrap();
        assert_eq!(d.w().unwrap(), w.inverse().trimmed(), "{t}");
        assert_eq!(d.dual().unwrap(), t);
    }
    let red = tr("k=1,2,3,4,5,6,7,8;p=7,7,6,6,5,4,3,2;q=4,5,6,7,7,7,9,9;type=A");
    assert_eq!(red.w().unwrap(), red.reduce_redundant().unwrap().w().unwrap());
}

#[test]
fn dual_example() {
    let t = tr("k=2,6,8;p=7,4,2;q=5,7,9;type=A");
    assert_eq!(t.dual().unwrap(), tr("k=1,3,4;p=9,7,5;q=2,4,7;type=A"));
    let conj = |l: &[u32]| -> Vec<u32> {
        (1..=l.first().copied().unwrap_or(0)).map(|i| l.iter().filter(|&&x| x >= i).count() as u32).collect()
    };
    assert_eq!(t.dual().unwrap().lambda().unwrap().parts(), conj(&t.lambda().unwrap().parts()));
}

#[test]
fn text_format() {
    let t = tr("k=2,3,5,8;p=8,6,6,2;q=6,5,2,2;type=BC");
    assert_eq!(t.to_string(), "k=2,3,5,8;p=8,6,6,2;q=6,5,2,2;type=C");
    assert_eq!(tr(&t.to_string()), t);
    assert!("k=1;p=1".parse::<Triple>().is_err());
}
