//! Deterministic test corpora: connected graphs and connected bipartite
//! graphs up to isomorphism, plus seeded random batches.
//!
//! Graphs are enumerated by extending each (n-1)-vertex canonical graph with
//! one new vertex over every neighborhood subset, canonicalizing as the
//! minimum edge mask over all vertex permutations. Bipartite graphs are
//! enumerated per part-size split from biadjacency masks, canonical under
//! row and column permutations (plus part swap when the sides are equal).
//! Exhaustiveness is verified in tests by summing `n!/|Aut|` over classes
//! and matching labeled counts from standard recurrences.

use crate::graph::{Bigraph, Graph};
use rayon::prelude::*;
use std::collections::HashSet;

/// All permutations of `0..n` in lexicographic order.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

/// Index of the unordered pair `(i, j)`, `i < j`, in lexicographic order.
fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + j - i - 1
}

/// Per-permutation bit relocation tables for edge masks on `n` vertices.
fn perm_tables(n: usize) -> Vec<Vec<u8>> {
    permutations(n)
        .into_iter()
        .map(|p| {
            let mut table = vec![0u8; n * (n - 1) / 2];
            for i in 0..n {
                for j in i + 1..n {
                    let (a, b) = (p[i].min(p[j]), p[i].max(p[j]));
                    table[pair_index(n, i, j)] = pair_index(n, a, b) as u8;
                }
            }
            table
        })
        .collect()
}

fn apply_table(mask: u32, table: &[u8]) -> u32 {
    let mut out = 0u32;
    let mut m = mask;
    while m != 0 {
        let bit = m.trailing_zeros() as usize;
        out |= 1 << table[bit];
        m &= m - 1;
    }
    out
}

fn canonical_mask(mask: u32, tables: &[Vec<u8>]) -> u32 {
    tables.iter().map(|t| apply_table(mask, t)).min().unwrap()
}

/// Number of permutations fixing the mask.
#[cfg(test)]
fn automorphisms(mask: u32, tables: &[Vec<u8>]) -> u64 {
    tables.iter().filter(|t| apply_table(mask, t) == mask).count() as u64
}

/// Canonical edge masks of all graphs on exactly `n` vertices, sorted.
fn all_graph_masks(n: usize) -> Vec<u32> {
    assert!((1..=7).contains(&n), "mask enumeration supports n in 1..=7");
    let mut level: Vec<u32> = vec![0];
    for m in 2..=n {
        let tables = perm_tables(m);
        let mut remap = vec![0u8; (m - 1) * (m - 2) / 2];
        for i in 0..m - 1 {
            for j in i + 1..m - 1 {
                remap[pair_index(m - 1, i, j)] = pair_index(m, i, j) as u8;
            }
        }
        let extensions: Vec<(u32, u32)> = level
            .iter()
            .flat_map(|prev| (0u32..1 << (m - 1)).map(move |nb| (*prev, nb)))
            .collect();
        let canon: Vec<u32> = extensions
            .par_iter()
            .map(|(prev, nb)| {
                let mut mask = apply_table(*prev, &remap);
                let mut bits = *nb;
                while bits != 0 {
                    let i = bits.trailing_zeros() as usize;
                    mask |= 1 << pair_index(m, i, m - 1);
                    bits &= bits - 1;
                }
                canonical_mask(mask, &tables)
            })
            .collect();
        let seen: HashSet<u32> = canon.into_iter().collect();
        level = seen.into_iter().collect();
        level.sort_unstable();
    }
    level
}

fn graph_from_mask(n: usize, mask: u32) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if mask >> pair_index(n, i, j) & 1 == 1 {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

/// Connected graphs on exactly `n <= 7` vertices, one per isomorphism
/// class, in a deterministic order.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graph_masks(n)
        .into_iter()
        .map(|m| graph_from_mask(n, m))
        .filter(Graph::is_connected)
        .collect()
}

/// Connected graphs on `1..=n_max` vertices up to isomorphism.
pub fn connected_graphs_upto(n_max: usize) -> Vec<Graph> {
    (1..=n_max).flat_map(connected_graphs).collect()
}

/// Biadjacency machinery: masks index bit `r * b + c` for row `r`, col `c`.
fn bip_perm_tables(a: usize, b: usize) -> Vec<Vec<u8>> {
    let rows = permutations(a);
    let cols = permutations(b);
    let mut tables = Vec::with_capacity(rows.len() * cols.len());
    for rp in &rows {
        for cp in &cols {
            let mut table = vec![0u8; a * b];
            for r in 0..a {
                for c in 0..b {
                    table[r * b + c] = (rp[r] * b + cp[c]) as u8;
                }
            }
            tables.push(table);
        }
    }
    tables
}

fn apply_table64(mask: u64, table: &[u8]) -> u64 {
    let mut out = 0u64;
    let mut m = mask;
    while m != 0 {
        let bit = m.trailing_zeros() as usize;
        out |= 1 << table[bit];
        m &= m - 1;
    }
    out
}

fn transpose_mask(mask: u64, a: usize, b: usize) -> u64 {
    debug_assert_eq!(a, b);
    let mut out = 0u64;
    let mut m = mask;
    while m != 0 {
        let bit = m.trailing_zeros() as usize;
        let (r, c) = (bit / b, bit % b);
        out |= 1 << (c * b + r);
        m &= m - 1;
    }
    out
}

fn bip_connected(mask: u64, a: usize, b: usize) -> bool {
    if a + b == 1 {
        return true;
    }
    if mask == 0 {
        return false;
    }
    let mut reach_rows = 1u32;
    let mut reach_cols = 0u32;
    loop {
        let mut new_cols = reach_cols;
        for r in 0..a {
            if reach_rows >> r & 1 == 1 {
                for c in 0..b {
                    if mask >> (r * b + c) & 1 == 1 {
                        new_cols |= 1 << c;
                    }
                }
            }
        }
        let mut new_rows = reach_rows;
        for c in 0..b {
            if new_cols >> c & 1 == 1 {
                for r in 0..a {
                    if mask >> (r * b + c) & 1 == 1 {
                        new_rows |= 1 << r;
                    }
                }
            }
        }
        if new_rows == reach_rows && new_cols == reach_cols {
            break;
        }
        reach_rows = new_rows;
        reach_cols = new_cols;
    }
    reach_rows.count_ones() as usize == a && reach_cols.count_ones() as usize == b
}

fn bip_canonical(mask: u64, a: usize, b: usize, tables: &[Vec<u8>]) -> u64 {
    let mut best = tables.iter().map(|t| apply_table64(mask, t)).min().unwrap();
    if a == b {
        let t_mask = transpose_mask(mask, a, b);
        let t_best = tables.iter().map(|t| apply_table64(t_mask, t)).min().unwrap();
        best = best.min(t_best);
    }
    best
}

/// Canonical connected biadjacency masks for the split `(a, b)`, sorted.
fn connected_bip_masks(a: usize, b: usize) -> Vec<u64> {
    let tables = bip_perm_tables(a, b);
    let masks: Vec<u64> = (0u64..1 << (a * b)).collect();
    let canon: Vec<u64> = masks
        .par_iter()
        .filter(|m| bip_connected(**m, a, b))
        .map(|m| bip_canonical(*m, a, b, &tables))
        .collect();
    let seen: HashSet<u64> = canon.into_iter().collect();
    let mut out: Vec<u64> = seen.into_iter().collect();
    out.sort_unstable();
    out
}

fn bigraph_from_mask(a: usize, b: usize, mask: u64) -> Bigraph {
    let mut edges = Vec::new();
    for r in 0..a {
        for c in 0..b {
            if mask >> (r * b + c) & 1 == 1 {
                edges.push((r, c));
            }
        }
    }
    Bigraph::new(a, b, &edges).unwrap()
}

/// Connected bipartite graphs on exactly `n <= 8` vertices, one per
/// isomorphism class of the underlying graph, presented as two-part graphs
/// with `a <= b`. The single vertex is the `(1, 0)` split.
pub fn connected_bigraphs(n: usize) -> Vec<Bigraph> {
    assert!((1..=8).contains(&n), "bigraph enumeration supports n in 1..=8");
    if n == 1 {
        return vec![Bigraph::new(1, 0, &[]).unwrap()];
    }
    let mut out = Vec::new();
    for a in 1..=n / 2 {
        let b = n - a;
        for mask in connected_bip_masks(a, b) {
            out.push(bigraph_from_mask(a, b, mask));
        }
    }
    out
}

/// Connected bipartite graphs on `1..=n_max` vertices up to isomorphism.
pub fn connected_bigraphs_upto(n_max: usize) -> Vec<Bigraph> {
    (1..=n_max).flat_map(connected_bigraphs).collect()
}

/// Deterministic batch of seeded random graphs with `n` cycling over
/// `n_min..=n_max` and edge probability cycling over 1/4, 1/3, 1/2, 2/3.
pub fn random_batch(count: usize, n_min: usize, n_max: usize, seed: u64) -> Vec<Graph> {
    use rug::Rational;
    let probs = [
        Rational::from((1, 4)),
        Rational::from((1, 3)),
        Rational::from((1, 2)),
        Rational::from((2, 3)),
    ];
    let mut state = seed;
    let mut out = Vec::with_capacity(count);
    for i in 0..count {
        let n = n_min + i % (n_max - n_min + 1);
        let p = &probs[i % probs.len()];
        let s = crate::graph::splitmix64(&mut state);
        out.push(Graph::random(n, p, s).unwrap());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rug::Integer;

    #[test]
    fn graph_class_counts_match_oeis() {
        let all: Vec<usize> = (1..=7).map(|n| all_graph_masks(n).len()).collect();
        assert_eq!(all, vec![1, 2, 4, 11, 34, 156, 1044]);
        let connected: Vec<usize> = (1..=7).map(|n| connected_graphs(n).len()).collect();
        assert_eq!(connected, vec![1, 1, 2, 6, 21, 112, 853]);
    }

    #[test]
    fn graph_classes_cover_all_labeled_graphs() {
        for n in 1..=7usize {
            let tables = perm_tables(n);
            let fact: u64 = (1..=n as u64).product();
            let mut labeled = Integer::new();
            for mask in all_graph_masks(n) {
                labeled += Integer::from(fact / automorphisms(mask, &tables));
            }
            let total = Integer::from(1) << (n * (n - 1) / 2) as u32;
            assert_eq!(labeled, total, "n={n}");
        }
    }

    /// Labeled connected graph counts via the standard recurrence
    /// `c_n = 2^C(n,2) - sum_k C(n-1,k-1) c_k 2^C(n-k,2)`.
    fn labeled_connected(n_max: usize) -> Vec<Integer> {
        let binom = |n: u64, k: u64| -> Integer {
            Integer::from(n).binomial(k as u32)
        };
        let mut c = vec![Integer::new(); n_max + 1];
        for n in 1..=n_max {
            let mut total = Integer::from(1) << (n * (n - 1) / 2) as u32;
            for k in 1..n {
                let rest = Integer::from(1) << ((n - k) * (n - k - 1) / 2) as u32;
                total -= binom(n as u64 - 1, k as u64 - 1) * c[k].clone() * rest;
            }
            c[n] = total;
        }
        c
    }

    #[test]
    fn connected_classes_cover_all_labeled_connected_graphs() {
        let labeled = labeled_connected(7);
        for n in 1..=7usize {
            let tables = perm_tables(n);
            let fact: u64 = (1..=n as u64).product();
            let mut sum = Integer::new();
            for g in connected_graphs(n) {
                let mut mask = 0u32;
                for (i, j) in g.edges() {
                    mask |= 1 << pair_index(n, i, j);
                }
                sum += Integer::from(fact / automorphisms(mask, &tables));
            }
            assert_eq!(sum, labeled[n], "n={n}");
        }
    }

    #[test]
    fn bigraph_class_counts_match_oeis() {
        let counts: Vec<usize> = (1..=8).map(|n| connected_bigraphs(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 3, 5, 17, 44, 182]);
    }

    #[test]
    fn bigraph_classes_cover_all_labeled_connected_bipartite_graphs() {
        // T(n) = sum_k C(n,k) 2^{k(n-k)} counts 2-colored bipartite graphs;
        // connected ones satisfy c2(n) = T(n) - sum C(n-1,k-1) c2(k) T(n-k),
        // and each connected bipartite graph on n >= 2 vertices has exactly
        // two colorings.
        let n_max = 8usize;
        let t = |n: usize| -> Integer {
            let mut s = Integer::new();
            for k in 0..=n {
                s += Integer::from(n as u64).binomial(k as u32)
                    * (Integer::from(1) << (k * (n - k)) as u32);
            }
            s
        };
        let mut c2 = vec![Integer::new(); n_max + 1];
        for n in 1..=n_max {
            let mut total = t(n);
            for k in 1..n {
                total -= Integer::from(n as u64 - 1).binomial(k as u32 - 1)
                    * c2[k].clone()
                    * t(n - k);
            }
            c2[n] = total;
        }

        for n in 2..=n_max {
            let fact: u64 = (1..=n as u64).product();
            let mut sum = Integer::new();
            for a in 1..=n / 2 {
                let b = n - a;
                let tables = bip_perm_tables(a, b);
                for mask in connected_bip_masks(a, b) {
                    let mut aut = tables
                        .iter()
                        .filter(|t| apply_table64(mask, t) == mask)
                        .count() as u64;
                    if a == b {
                        let tm = transpose_mask(mask, a, b);
                        aut += tables.iter().filter(|t| apply_table64(tm, t) == mask).count()
                            as u64;
                    }
                    sum += Integer::from(fact / aut);
                }
            }
            let expected = Integer::from(c2[n].clone() / 2);
            assert_eq!(sum, expected, "n={n}");
        }
    }

    #[test]
    fn corpus_graphs_are_connected_and_distinct() {
        let graphs = connected_graphs_upto(6);
        assert_eq!(graphs.len(), 1 + 1 + 2 + 6 + 21 + 112);
        for g in &graphs {
            assert!(g.is_connected());
        }
        let bigs = connected_bigraphs_upto(6);
        for b in &bigs {
            assert!(b.is_connected());
        }
    }

    #[test]
    fn random_batch_is_deterministic() {
        let a = random_batch(10, 8, 14, 42);
        let b = random_batch(10, 8, 14, 42);
        assert_eq!(a.len(), 10);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.edges(), y.edges());
            assert_eq!(x.n(), y.n());
        }
        let ns: Vec<usize> = a.iter().map(Graph::n).collect();
        assert_eq!(ns, vec![8, 9, 10, 11, 12, 13, 14, 8, 9, 10]);
    }
}
