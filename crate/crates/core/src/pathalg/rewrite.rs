//! Noncommutative Gröbner bases for path algebras, truncated at a length
//! bound. Words are arrow-index sequences; the monomial order is
//! length-lexicographic in the user's arrow order.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use crate::exactla::{Field, PrimeField};

use super::quiver::Quiver;

/// A nonempty arrow word, ordered length-lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<usize>);

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse linear combination of words of length at most `trunc`.
pub type Poly = BTreeMap<Word, u32>;

fn add_term(f: &PrimeField, p: &mut Poly, w: Word, c: u32) {
    if c == 0 {
        return;
    }
    match p.entry(w) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            let s = f.add(e.get(), &c);
            if s == 0 {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

/// `u * g * v`, dropping terms longer than `trunc`.
fn sandwich(f: &PrimeField, u: &[usize], g: &Poly, v: &[usize], scale: u32, trunc: usize) -> Poly {
    let mut out = Poly::new();
    if u.len() + v.len() + g.keys().map(|w| w.0.len()).min().unwrap_or(0) > trunc {
        return out;
    }
    for (w, c) in g {
        if u.len() + w.0.len() + v.len() > trunc {
            continue;
        }
        let mut word = Vec::with_capacity(u.len() + w.0.len() + v.len());
        word.extend_from_slice(u);
        word.extend_from_slice(&w.0);
        word.extend_from_slice(v);
        add_term(f, &mut out, Word(word), f.mul(c, &scale));
    }
    out
}

fn sub_assign(f: &PrimeField, p: &mut Poly, q: &Poly) {
    for (w, c) in q {
        add_term(f, p, w.clone(), f.neg(c));
    }
}

fn find_sub(hay: &[usize], needle: &[usize]) -> Option<usize> {
    if needle.len() > hay.len() {
        return None;
    }
    (0..=hay.len() - needle.len()).find(|&i| &hay[i..i + needle.len()] == needle)
}

fn find_sub_last(hay: &[usize], needle: &[usize]) -> Option<usize> {
    if needle.len() > hay.len() {
        return None;
    }
    (0..=hay.len() - needle.len()).rev().find(|&i| &hay[i..i + needle.len()] == needle)
}

/// Which occurrence of a reducible pattern to rewrite first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Largest term, first matching rule, leftmost occurrence.
    LeftmostFirst,
    /// Smallest reducible term, last matching rule, rightmost occurrence.
    RightmostLast,
}

/// A monic rewriting system `lead(g) -> lead(g) - g`.
#[derive(Clone, Debug)]
pub struct RewriteSystem {
    field: PrimeField,
    trunc: usize,
    rules: Vec<Poly>,
}

impl RewriteSystem {
    pub fn rules(&self) -> &[Poly] {
        &self.rules
    }

    pub fn leading_words(&self) -> impl Iterator<Item = &Word> {
        self.rules.iter().map(|g| g.keys().next_back().unwrap())
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    /// Full reduction to normal form.
    pub fn reduce(&self, p: &Poly) -> Poly {
        self.reduce_with(p, Strategy::LeftmostFirst)
    }

    pub fn reduce_with(&self, p: &Poly, strategy: Strategy) -> Poly {
        reduce_by(&self.field, &self.rules, p, self.trunc, strategy)
    }

    pub fn is_normal(&self, w: &[usize]) -> bool {
        w.len() <= self.trunc && self.leading_words().all(|l| find_sub(w, &l.0).is_none())
    }
}

fn reduce_by(f: &PrimeField, rules: &[Poly], p: &Poly, trunc: usize, strategy: Strategy) -> Poly {
    let mut cur: Poly = p
        .iter()
        .filter(|(w, _)| w.0.len() <= trunc)
        .map(|(w, c)| (w.clone(), *c))
        .collect();
    let mut done = Poly::new();
    loop {
        // Pick a term to process according to the strategy.
        let term = match strategy {
            Strategy::LeftmostFirst => cur.iter().next_back().map(|(w, c)| (w.clone(), *c)),
            Strategy::RightmostLast => cur.iter().next().map(|(w, c)| (w.clone(), *c)),
        };
        let Some((w, c)) = term else { break };
        let hit = match strategy {
            Strategy::LeftmostFirst => rules.iter().find_map(|g| {
                let lead = g.keys().next_back().unwrap();
                find_sub(&w.0, &lead.0).map(|pos| (g, lead, pos))
            }),
            Strategy::RightmostLast => rules.iter().rev().find_map(|g| {
                let lead = g.keys().next_back().unwrap();
                find_sub_last(&w.0, &lead.0).map(|pos| (g, lead, pos))
            }),
        };
        match hit {
            None => {
                cur.remove(&w);
                done.insert(w, c);
            }
            Some((g, lead, pos)) => {
                let u = &w.0[..pos];
                let v = &w.0[pos + lead.0.len()..];
                let s = sandwich(f, u, g, v, c, trunc);
                sub_assign(f, &mut cur, &s);
            }
        }
        // Terms that were moved to `done` never become reducible again, but
        // RightmostLast may revisit smaller terms created later.
        if strategy == Strategy::RightmostLast {
            let mut back = Vec::new();
            for (w, c) in cur.iter() {
                if let Some(d) = done.get(w) {
                    back.push((w.clone(), *c, *d));
                }
            }
            for (w, c, d) in back {
                cur.remove(&w);
                done.remove(&w);
                let s = f.add(&c, &d);
                if s != 0 {
                    done.insert(w, s);
                }
            }
        }
    }
    done
}

fn make_monic(f: &PrimeField, p: &mut Poly) {
    if let Some((_, lc)) = p.iter().next_back() {
        let inv = f.inv(lc).unwrap();
        for c in p.values_mut() {
            *c = f.mul(c, &inv);
        }
    }
}

/// Truncated Buchberger completion of `gens` modulo all words longer than `trunc`.
pub fn complete(field: PrimeField, quiver: &Quiver, gens: Vec<Poly>, trunc: usize) -> RewriteSystem {
    let f = &field;
    let mut rules: Vec<Poly> = Vec::new();
    let mut queue: Vec<Poly> = gens;

    loop {
        // Interreduce: feed queued polys one at a time.
        while let Some(p) = queue.pop() {
            let mut r = reduce_by(f, &rules, &p, trunc, Strategy::LeftmostFirst);
            if r.is_empty() {
                continue;
            }
            make_monic(f, &mut r);
            let lead = r.keys().next_back().unwrap().clone();
            // Rules whose leading word contains the new one are re-queued.
            let mut kept = Vec::with_capacity(rules.len());
            for g in rules.drain(..) {
                let gl = g.keys().next_back().unwrap();
                if find_sub(&gl.0, &lead.0).is_some() {
                    queue.push(g);
                } else {
                    kept.push(g);
                }
            }
            rules = kept;
            rules.push(r);
        }
        // Tail-reduce every rule against the others.
        for i in 0..rules.len() {
            let g = rules[i].clone();
            let lead = g.keys().next_back().unwrap().clone();
            let mut tail = g.clone();
            tail.remove(&lead);
            let others: Vec<Poly> = rules
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, h)| h.clone())
                .collect();
            let mut red = reduce_by(f, &others, &tail, trunc, Strategy::LeftmostFirst);
            red.insert(lead, 1);
            rules[i] = red;
        }

        // S-polynomials: proper overlaps, and overlaps with the truncation ideal.
        let mut new = Vec::new();
        for g1 in rules.iter() {
            let w1 = &g1.keys().next_back().unwrap().0;
            for g2 in rules.iter() {
                let w2 = &g2.keys().next_back().unwrap().0;
                for k in 1..w1.len().min(w2.len()) {
                    if w1[w1.len() - k..] != w2[..k] {
                        continue;
                    }
                    let u = &w1[..w1.len() - k];
                    let v = &w2[k..];
                    let mut s = sandwich(f, &[], g1, v, 1, trunc);
                    sub_assign(f, &mut s, &sandwich(f, u, g2, &[], 1, trunc));
                    let r = reduce_by(f, &rules, &s, trunc, Strategy::LeftmostFirst);
                    if !r.is_empty() {
                        new.push(r);
                    }
                }
            }
            // Inhomogeneous rules: pushing the leading word past the bound
            // leaves the tail, which must also lie in the ideal.
            let lens: Vec<usize> = g1.keys().map(|w| w.0.len()).collect();
            let homogeneous = lens.iter().all(|&l| l == lens[0]);
            if !homogeneous && w1.len() <= trunc {
                let ext = trunc + 1 - w1.len();
                let end = quiver.arrow(*w1.last().unwrap()).target;
                let start = quiver.arrow(w1[0]).source;
                for v in quiver.words_from(end, ext) {
                    let s = sandwich(f, &[], g1, &v, 1, trunc);
                    let r = reduce_by(f, &rules, &s, trunc, Strategy::LeftmostFirst);
                    if !r.is_empty() {
                        new.push(r);
                    }
                }
                for u in quiver.words_to(start, ext) {
                    let s = sandwich(f, &u, g1, &[], 1, trunc);
                    let r = reduce_by(f, &rules, &s, trunc, Strategy::LeftmostFirst);
                    if !r.is_empty() {
                        new.push(r);
                    }
                }
            }
        }
        if new.is_empty() {
            break;
        }
        queue = new;
    }
    rules.sort_by(|a, b| a.keys().next_back().cmp(&b.keys().next_back()));
    RewriteSystem { field, trunc, rules }
}
