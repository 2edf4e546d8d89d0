//! The class-graph oracle against a search that knows nothing about
//! rotation classes: BFS over literal strings using every cut triple,
//! stopping at any rotation of the target.

use std::collections::{HashSet, VecDeque};

use circtrans::oracle::{build_class_graph, exact_path};
use circtrans::{canonicalize, exact_distance, CircularBinaryString, Transposition};

fn literal_distance(s: &CircularBinaryString, t: &CircularBinaryString) -> usize {
    let n = s.len();
    let mut seen = HashSet::from([s.bits().to_vec()]);
    let mut queue = VecDeque::from([(s.bits().to_vec(), 0)]);
    while let Some((bits, d)) = queue.pop_front() {
        if canonicalize(&bits).unwrap() == *t {
            return d;
        }
        for i in 1..=n {
            for j in i + 1..=n {
                for k in j + 1..=n + 1 {
                    let next = Transposition { i, j, k }.apply_to(&bits).unwrap();
                    if seen.insert(next.clone()) {
                        queue.push_back((next, d + 1));
                    }
                }
            }
        }
    }
    unreachable!("same-bucket strings are always connected")
}

#[test]
fn class_graph_matches_literal_search() {
    for n in 2..=8 {
        for ones in 0..=n {
            let g = build_class_graph(n, ones).unwrap();
            let dist = g.all_pairs();
            for (u, s) in g.nodes().iter().enumerate() {
                for (v, t) in g.nodes().iter().enumerate() {
                    assert_eq!(dist[u][v] as usize, literal_distance(s, t), "{s} -> {t}");
                }
            }
        }
    }
}

#[test]
fn parallel_and_sequential_all_pairs_agree() {
    for (n, ones) in [(10, 4), (11, 5), (12, 6)] {
        let g = build_class_graph(n, ones).unwrap();
        assert_eq!(g.all_pairs(), g.all_pairs_sequential());
    }
}

#[test]
fn shortest_paths_are_shortest_and_replay() {
    let g = build_class_graph(10, 5).unwrap();
    for s in g.nodes().iter().step_by(5) {
        for t in g.nodes().iter().step_by(3) {
            let p = exact_path(s, t).unwrap();
            assert!(p.verify().is_pass());
            assert_eq!(p.len(), exact_distance(s, t).unwrap());
        }
    }
}
