use domtilt::exactla::{Field, Mat};
use domtilt::fixtures;
use domtilt::pathalg::{Algebra, Poly, Strategy as Reduction, Word};
use proptest::prelude::*;
use std::collections::HashMap;

fn all_words(a: &Algebra, max: usize) -> Vec<(usize, Vec<usize>)> {
    let q = a.quiver();
    let mut out = Vec::new();
    for v in 0..q.num_vertices() {
        for len in 0..=max {
            for w in q.words_from(v, len) {
                out.push((v, w));
            }
        }
    }
    out
}

/// dim kQ/(I + paths longer than `max`), from the span of all `u r v`.
fn span_dimension(a: &Algebra, max: usize) -> usize {
    let f = a.field();
    let words = all_words(a, max);
    let index: HashMap<(usize, Vec<usize>), usize> =
        words.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
    let q = a.quiver();
    let mut rows = Vec::new();
    for r in a.relations() {
        let start = q.arrow(r.terms[0].1[0]).source;
        let end = q.arrow(*r.terms[0].1.last().unwrap()).target;
        let min_len = r.terms.iter().map(|t| t.1.len()).min().unwrap();
        for lu in 0..=max.saturating_sub(min_len) {
            for u in q.words_to(start, lu) {
                for lv in 0..=max - min_len - lu {
                    for v in q.words_from(end, lv) {
                        let mut row = vec![0u32; words.len()];
                        for (c, t) in &r.terms {
                            let mut w = u.clone();
                            w.extend_from_slice(t);
                            w.extend_from_slice(&v);
                            if w.len() > max {
                                continue;
                            }
                            let s = q.arrow(w[0]).source;
                            let k = index[&(s, w)];
                            row[k] = f.add(&row[k], &f.from_i64(*c));
                        }
                        rows.push(row);
                    }
                }
            }
        }
    }
    if rows.is_empty() {
        return words.len();
    }
    words.len() - Mat::from_rows(&f, words.len(), rows).rank()
}

#[test]
fn dimension_matches_span_oracle() {
    for (name, _) in fixtures::ALL {
        let a = fixtures::algebra(name).unwrap();
        let bound = if name.starts_with("e3") { 9 } else { 8 };
        assert_eq!(a.dim(), span_dimension(&a, bound), "{name}");
    }
}

#[test]
fn rewriting_is_confluent_on_all_short_paths() {
    for (name, _) in fixtures::ALL {
        let a = fixtures::algebra(name).unwrap();
        let sys = a.rewrite_system();
        for (_, w) in all_words(&a, a.max_path_length()) {
            if w.is_empty() {
                continue;
            }
            let mut p = Poly::new();
            p.insert(Word(w.clone()), 1);
            let l = sys.reduce_with(&p, Reduction::LeftmostFirst);
            let r = sys.reduce_with(&p, Reduction::RightmostLast);
            assert_eq!(l, r, "{name}: {}", a.quiver().format_word(&w));
        }
    }
}

#[test]
fn relations_vanish() {
    for (name, _) in fixtures::ALL {
        let a = fixtures::algebra(name).unwrap();
        for r in a.relations() {
            assert!(a.relation_element(r).iter().all(|&c| c == 0), "{name}");
        }
    }
}

#[test]
fn opposite_of_a3_is_reversed_a3() {
    let a = fixtures::algebra("a3").unwrap();
    let op = a.opposite().unwrap();
    let rev = fixtures::algebra("a3_rev").unwrap();
    assert_eq!(op.dim(), rev.dim());
    let edges = |x: &Algebra| {
        let mut e: Vec<(usize, usize)> = x.quiver().arrows().iter().map(|a| (a.source, a.target)).collect();
        e.sort();
        e
    };
    assert_eq!(edges(&op), edges(&rev));
}

#[test]
fn opposite_dimensions_agree() {
    for (name, _) in fixtures::ALL {
        let a = fixtures::algebra(name).unwrap();
        let op = a.opposite().unwrap();
        assert_eq!(a.dim(), op.dim(), "{name}");
        for i in 0..a.num_vertices() {
            for j in 0..a.num_vertices() {
                assert_eq!(a.paths_between(i, j).len(), op.paths_between(j, i).len());
            }
        }
    }
}

#[test]
fn idempotent_quotients_of_the_square() {
    let a = fixtures::algebra("e4").unwrap();
    // Killing vertex 4 leaves the paths avoiding it.
    let (q, _) = a.quotient_by_idempotent(&[3]).unwrap();
    let avoiding = (0..a.dim())
        .filter(|&b| {
            let p = &a.basis()[b];
            p.start != 3 && p.end != 3 && p.word.iter().all(|&x| a.quiver().arrow(x).target != 3)
        })
        .count();
    assert_eq!(q.dim(), avoiding);
}

fn element(dim: usize) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0u32..5, dim)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multiplication_is_associative(x in element(15), y in element(15), z in element(15)) {
        let a = fixtures::algebra("e1").unwrap();
        let l = a.multiply(&a.multiply(&x, &y), &z);
        let r = a.multiply(&x, &a.multiply(&y, &z));
        prop_assert_eq!(l, r);
    }

    #[test]
    fn square_is_associative(x in element(9), y in element(9), z in element(9)) {
        let a = fixtures::algebra("e4").unwrap();
        let l = a.multiply(&a.multiply(&x, &y), &z);
        let r = a.multiply(&x, &a.multiply(&y, &z));
        prop_assert_eq!(l, r);
    }
}
