//! Closed forms against brute force.
//!
//! Besides the library's own `BallTable`, this file carries a deliberately
//! naive windowed BFS: it never calls into `metrics` and reaches elements far
//! beyond the ball radius by clamping the cursor to a window that contains
//! every lit bulb, the origin and the target cursor (a walk that leaves that
//! hull can always be shortened, so distances and path counts are exact).

use std::collections::{BTreeSet, HashMap, VecDeque};

use lamplighter::metrics::{self, count_geodesics, DEFAULT_COUNT_BUDGET};
use lamplighter::{BallLimits, BallTable, GenSet, GroupElement};
use num_bigint::BigUint;

type State = (BTreeSet<i64>, i64);

fn step(state: &State, letter: char) -> State {
    let (mut bulbs, mut c) = state.clone();
    let mut flip = |p: i64| {
        if !bulbs.remove(&p) {
            bulbs.insert(p);
        }
    };
    match letter {
        'a' => flip(c),
        't' => c += 1,
        'T' => c -= 1,
        'r' => {
            c += 1;
            flip(c)
        }
        'R' => {
            flip(c);
            c -= 1
        }
        _ => unreachable!(),
    }
    (bulbs, c)
}

fn windowed_bfs(letters: &str, lo: i64, hi: i64) -> HashMap<State, (u64, BigUint)> {
    let start: State = (BTreeSet::new(), 0);
    let mut table = HashMap::from([(start.clone(), (0u64, BigUint::from(1u32)))]);
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        let (dx, cx) = table[&x].clone();
        for letter in letters.chars() {
            let y = step(&x, letter);
            let inside = (lo..=hi).contains(&y.1) && y.0.iter().all(|p| (lo..=hi).contains(p));
            if !inside {
                continue;
            }
            match table.get_mut(&y) {
                None => {
                    table.insert(y.clone(), (dx + 1, cx.clone()));
                    queue.push_back(y);
                }
                Some((dy, cy)) if *dy == dx + 1 => *cy += &cx,
                Some(_) => {}
            }
        }
    }
    table
}

fn state(bulbs: &[i64], cursor: i64) -> State {
    (bulbs.iter().copied().collect(), cursor)
}

fn el(bulbs: &[i64], cursor: i64) -> GroupElement {
    GroupElement::new(bulbs.iter().copied(), cursor).unwrap()
}

#[test]
fn sample_element_by_windowed_bfs() {
    let wreath = windowed_bfs("atT", -6, 6);
    let automata = windowed_bfs("tTrR", -7, 6);
    let sample = state(&[4, 5, 6, -1, -6], -2);
    assert_eq!(wreath[&sample], (27, BigUint::from(4u32)));
    assert_eq!(automata[&sample], (24, BigUint::from(2048u32)));

    let e = el(&[4, 5, 6, -1, -6], -2);
    assert_eq!(metrics::length(&e, GenSet::Wreath), 27);
    assert_eq!(metrics::length(&e, GenSet::Automata), 24);
    assert_eq!(count_geodesics(&e, GenSet::Automata, DEFAULT_COUNT_BUDGET).unwrap().count, BigUint::from(2048u32));
    assert_eq!(count_geodesics(&e, GenSet::Wreath, DEFAULT_COUNT_BUDGET).unwrap().count, BigUint::from(4u32));
}

#[test]
fn windowed_bfs_agrees_on_a_small_box() {
    // every element with bulbs and cursor in [-3, 3]; window padded by one so
    // the automata set can reach -(j_l + 1)
    let wreath = windowed_bfs("atT", -4, 4);
    let automata = windowed_bfs("tTrR", -4, 4);
    for mask in 0u32..(1 << 7) {
        let bulbs: Vec<i64> = (0..7).filter(|i| mask >> i & 1 == 1).map(|i| i as i64 - 3).collect();
        for cursor in -3..=3 {
            let e = el(&bulbs, cursor);
            let key = state(&bulbs, cursor);
            assert_eq!(metrics::length(&e, GenSet::Wreath), wreath[&key].0, "{e}");
            assert_eq!(metrics::length(&e, GenSet::Automata), automata[&key].0, "{e}");
        }
    }
}

#[test]
fn ball_matches_windowed_bfs() {
    let ball = BallTable::build(GenSet::Automata, 6, &BallLimits::default()).unwrap();
    let naive = windowed_bfs("tTrR", -7, 7);
    for (e, entry) in ball.iter() {
        let key = (e.bulbs().clone(), e.cursor());
        assert_eq!(naive[&key], (entry.distance as u64, entry.path_count.clone()), "{e}");
    }
}

#[test]
fn closed_forms_match_balls() {
    for gs in GenSet::ALL {
        let ball = BallTable::build(gs, 10, &BallLimits::default()).unwrap();
        for (e, entry) in ball.iter() {
            assert_eq!(metrics::length(&e, gs), entry.distance as u64, "{gs} {e}");
        }
    }
}

#[test]
fn geodesic_counts_match_ball_path_counts() {
    for gs in GenSet::ALL {
        let ball = BallTable::build(gs, 8, &BallLimits::default()).unwrap();
        for (e, entry) in ball.iter() {
            let rep = count_geodesics(&e, gs, DEFAULT_COUNT_BUDGET).unwrap();
            assert_eq!(rep.count, entry.path_count, "{gs} {e}");
            assert!(rep.meets_lower_bound(), "{gs} {e}");
        }
    }
}
