mod common;

use std::collections::HashSet;

use common::{bfs_lengths, subword_interval};
use covex_kl::weyl::{all_elements, bruhat_leq, longest_element, LieType, Side, WeylElement, WeylError};
use proptest::prelude::*;

fn el(t: LieType, s: &str) -> WeylElement {
    WeylElement::parse(t, s).unwrap()
}

#[test]
fn window_validation() {
    assert!(WeylElement::parse(LieType::A, "1 3 2").is_ok());
    assert!(WeylElement::parse(LieType::A, "1 -3 2").is_err());
    assert!(WeylElement::parse(LieType::C, "1 1 2").is_err());
    assert!(WeylElement::parse(LieType::C, "1 4 2").is_err());
    assert!(WeylElement::parse(LieType::C, "0 1").is_err());
    assert!(WeylElement::parse(LieType::C, "5,-4,-3,6,-1,-2,7").is_ok());
    assert!(WeylElement::parse(LieType::C, "1 x").is_err());
    assert!(WeylElement::new_in_group(LieType::D, vec![-1, 2]).is_err());
    assert!(WeylElement::new_in_group(LieType::D, vec![-1, -2]).is_ok());
    // odd-coset type D windows are values, not group elements
    let odd = el(LieType::D, "-1 2 3");
    assert!(!odd.is_group_element());
    assert!(matches!(odd.length(), Err(WeylError::NotInGroup(_))));
}

#[test]
fn group_orders() {
    for t in LieType::ALL {
        for n in 1..=4 {
            let all = all_elements(t, n);
            assert_eq!(all.len() as u128, t.group_order(n), "{t}{n}");
            let set: HashSet<_> = all.iter().collect();
            assert_eq!(set.len(), all.len());
        }
    }
}

#[test]
fn lengths_match_cayley_graph_distances() {
    for t in LieType::ALL {
        for n in 1..=4 {
            let dist = bfs_lengths(t, n);
            assert_eq!(dist.len() as u128, t.group_order(n), "{t}{n}: generators generate");
            for (w, d) in dist {
                assert_eq!(w.length().unwrap(), d, "{t}{n} {w}");
            }
        }
    }
}

#[test]
fn length_examples() {
    assert_eq!(el(LieType::A, "1 2 3 4").length().unwrap(), 0);
    assert_eq!(el(LieType::A, "3 4 1 2").length().unwrap(), 4);
    assert_eq!(el(LieType::C, "-2 -1").length().unwrap(), 3);
    assert_eq!(el(LieType::C, "-1 -2").length().unwrap(), 4);
}

#[test]
fn longest_elements() {
    assert_eq!(longest_element(LieType::A, 4).unwrap().to_string(), "4 3 2 1");
    assert_eq!(longest_element(LieType::C, 3).unwrap().to_string(), "-1 -2 -3");
    assert_eq!(longest_element(LieType::D, 3).unwrap().to_string(), "1 -2 -3");
    assert_eq!(longest_element(LieType::D, 4).unwrap().to_string(), "-1 -2 -3 -4");
    assert!(longest_element(LieType::A, 0).is_err());
    for t in LieType::ALL {
        for n in 1..=4 {
            let all = all_elements(t, n);
            let max = all.iter().map(|w| w.length().unwrap()).max().unwrap();
            assert_eq!(max, t.positive_roots(n), "{t}{n}");
            let top: Vec<_> = all.iter().filter(|w| w.length().unwrap() == max).collect();
            assert_eq!(top, vec![&longest_element(t, n).unwrap()], "{t}{n}: unique longest element");
        }
    }
}

#[test]
fn simple_reflections_change_length_by_one() {
    for t in LieType::ALL {
        for n in 1..=4 {
            for w in all_elements(t, n) {
                let l = w.length().unwrap();
                for i in t.generators(n) {
                    for side in [Side::Left, Side::Right] {
                        let x = w.apply_simple(i, side).unwrap();
                        let lx = x.length().unwrap();
                        assert!(lx + 1 == l || lx == l + 1, "{t}{n} {w} s{i} {side:?}");
                        assert_eq!(x.apply_simple(i, side).unwrap(), w, "involution");
                        let descent = match side {
                            Side::Right => w.is_right_descent(i).unwrap(),
                            Side::Left => w.is_left_descent(i).unwrap(),
                        };
                        assert_eq!(descent, lx < l, "{t}{n} {w} s{i} {side:?} descent");
                    }
                }
            }
        }
    }
}

#[test]
fn simple_reflection_examples() {
    let id = WeylElement::identity(LieType::A, 3);
    assert_eq!(id.apply_simple(1, Side::Right).unwrap().to_string(), "2 1 3");
    let id = WeylElement::identity(LieType::C, 2);
    let s0 = id.apply_simple(0, Side::Right).unwrap();
    assert_eq!(s0.negatives(), 1);
    assert_eq!(s0.length().unwrap(), 1);
    assert!(id.apply_simple(2, Side::Right).is_err());
    assert!(WeylElement::identity(LieType::A, 3).apply_simple(0, Side::Right).is_err());
}

#[test]
fn reduced_words_reproduce_elements() {
    assert!(WeylElement::identity(LieType::A, 3).reduced_word().unwrap().is_empty());
    assert_eq!(el(LieType::A, "2 1 3").reduced_word().unwrap(), vec![1]);
    for t in LieType::ALL {
        for n in 1..=4 {
            for w in all_elements(t, n) {
                let word = w.reduced_word().unwrap();
                assert_eq!(word.len(), w.length().unwrap());
                assert_eq!(WeylElement::from_word(t, n, &word).unwrap(), w);
            }
        }
    }
}

#[test]
fn inverse_and_composition() {
    for t in LieType::ALL {
        for n in 1..=3 {
            let all = all_elements(t, n);
            let id = WeylElement::identity(t, n);
            for u in &all {
                assert_eq!(u.compose(&u.inverse()).unwrap(), id);
                assert_eq!(u.inverse().length().unwrap(), u.length().unwrap());
                for v in &all {
                    let uv = u.compose(v).unwrap();
                    assert!(uv.is_group_element());
                    assert_eq!(uv.inverse(), v.inverse().compose(&u.inverse()).unwrap());
                }
                for i in t.generators(n) {
                    let s = id.apply_simple(i, Side::Right).unwrap();
                    assert_eq!(u.compose(&s).unwrap(), u.apply_simple(i, Side::Right).unwrap());
                    assert_eq!(s.compose(u).unwrap(), u.apply_simple(i, Side::Left).unwrap());
                }
            }
        }
    }
}

#[test]
fn bruhat_matches_subword_criterion() {
    for t in LieType::ALL {
        for n in 1..=4 {
            let all = all_elements(t, n);
            for w in &all {
                let below = subword_interval(w);
                for u in &all {
                    assert_eq!(bruhat_leq(u, w).unwrap(), below.contains(u), "{t}{n}: {u} ≤ {w}");
                }
            }
        }
    }
}

#[test]
fn bruhat_is_a_partial_order() {
    for t in LieType::ALL {
        for n in 1..=3 {
            let all = all_elements(t, n);
            let m = all.len();
            let leq: Vec<Vec<bool>> =
                all.iter().map(|u| all.iter().map(|w| bruhat_leq(u, w).unwrap()).collect()).collect();
            let id = WeylElement::identity(t, n);
            let top = longest_element(t, n).unwrap();
            for i in 0..m {
                assert!(leq[i][i]);
                assert!(bruhat_leq(&id, &all[i]).unwrap());
                assert!(bruhat_leq(&all[i], &top).unwrap());
                for j in 0..m {
                    if i != j && leq[i][j] {
                        assert!(!leq[j][i], "antisymmetry {t}{n}");
                        assert!(all[i].length().unwrap() < all[j].length().unwrap());
                    }
                    for k in 0..m {
                        if leq[i][j] && leq[j][k] {
                            assert!(leq[i][k], "transitivity {t}{n}");
                        }
                    }
                }
            }
            // left multiplication by the longest element reverses the order
            for u in &all {
                for w in &all {
                    let (tu, tw) = (top.compose(u).unwrap(), top.compose(w).unwrap());
                    assert_eq!(bruhat_leq(u, w).unwrap(), bruhat_leq(&tw, &tu).unwrap());
                }
            }
        }
    }
}

#[test]
fn bruhat_examples() {
    let a = |s| el(LieType::A, s);
    assert!(bruhat_leq(&a("2 1 4 3"), &a("3 4 1 2")).unwrap());
    assert!(!bruhat_leq(&a("4 3 2 1"), &a("3 4 1 2")).unwrap());
    let interval: Vec<_> =
        all_elements(LieType::A, 4).into_iter().filter(|u| bruhat_leq(u, &a("3 4 1 2")).unwrap()).collect();
    assert_eq!(interval.len(), 14);
    assert!(bruhat_leq(&a("1 2 3"), &el(LieType::C, "1 2 3")).is_err());
}

proptest! {
    #[test]
    fn parse_display_round_trip(perm in Just((1..=6).collect::<Vec<i32>>()).prop_shuffle(), signs in prop::collection::vec(any::<bool>(), 6)) {
        let window: Vec<i32> = perm.iter().zip(&signs).map(|(&x, &s)| if s { -x } else { x }).collect();
        let w = WeylElement::new(LieType::C, window).unwrap();
        prop_assert_eq!(WeylElement::parse(LieType::C, &w.to_string()).unwrap(), w.clone());
        let word = w.reduced_word().unwrap();
        prop_assert_eq!(word.len(), w.length().unwrap());
        prop_assert_eq!(WeylElement::from_word(LieType::C, 6, &word).unwrap(), w);
    }
}
