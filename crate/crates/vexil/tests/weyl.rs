use vexil::weyl::{enumerate, longest_element, Generator, SignedPermutation, WeylType};

fn sp(s: &str) -> SignedPermutation {
    s.parse().unwrap()
}

#[test]
fn lengths() {
    assert_eq!(SignedPermutation::identity(3).length(WeylType::C), 0);
    assert_eq!(sp("-1").length(WeylType::C), 1);
    assert_eq!(sp("-3 2 -1").length(WeylType::C), 5);
}

#[test]
fn length_matches_shortest_word() {
    for ty in [WeylType::A, WeylType::C, WeylType::D] {
        for w in enumerate(3, ty) {
            let word = w.reduced_word(ty);
            assert_eq!(word.len(), w.length(ty), "{ty} {w}");
            assert_eq!(SignedPermutation::from_word(3, &word), w);
        }
    }
}

#[test]
fn reduced_words() {
    assert!(SignedPermutation::identity(2).reduced_word(WeylType::C).is_empty());
    assert_eq!(sp("2 1").reduced_word(WeylType::A), vec![Generator::S(1)]);
    assert_eq!(longest_element(2, WeylType::C).reduced_word(WeylType::C).len(), 4);
}

#[test]
fn longest_elements() {
    assert_eq!(longest_element(2, WeylType::C), sp("-1 -2"));
    assert_eq!(longest_element(3, WeylType::C), sp("-1 -2 -3"));
    assert_eq!(longest_element(2, WeylType::D), sp("-1 -2"));
    for (n, ty) in [(2, WeylType::C), (3, WeylType::C), (2, WeylType::D), (3, WeylType::D), (3, WeylType::A)] {
        let max = enumerate(n, ty).iter().map(|w| w.length(ty)).max().unwrap();
        assert_eq!(longest_element(n, ty).length(ty), max);
    }
}

#[test]
fn group_orders() {
    assert_eq!(enumerate(3, WeylType::C).len(), 48);
    assert_eq!(enumerate(3, WeylType::D).len(), 24);
    assert_eq!(enumerate(4, WeylType::A).len(), 24);
    assert!(enumerate(3, WeylType::D).iter().all(|w| w.barred_count() % 2 == 0));
}

#[test]
fn rank_function_examples() {
    let w = sp("1 -9 -8 -4 10 -5 -3 -7 -6 -2");
    assert_eq!(w.rank_function(8, 6, false), 2);
    assert_eq!(w.rank_function(2, 2, false), 8);
    assert_eq!(SignedPermutation::identity(4).rank_function(1, 1, false), 0);
}

#[test]
fn composition_and_inverse() {
    let w = sp("-3 2 -1");
    assert_eq!(w.compose(&SignedPermutation::identity(3)).unwrap(), w);
    assert_eq!(sp("-1 2").inverse(), sp("-1 2"));
    for w in enumerate(3, WeylType::C) {
        assert!(w.compose(&w.inverse()).unwrap().is_identity());
    }
}

#[test]
fn parse_errors() {
    assert!("1 1".parse::<SignedPermutation>().is_err());
    assert!("1 3".parse::<SignedPermutation>().is_err());
    assert!("E".parse::<WeylType>().is_err());
}
