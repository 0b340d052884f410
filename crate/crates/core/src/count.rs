//! Exact independent-set counting.
//!
//! The engine runs the deletion recursion
//! `P_G = P_{G-w} + lambda * P_{G-w-N(w)}` branching on a maximum-degree
//! vertex (ties to the smallest id), splits masks into connected pieces and
//! multiplies their results, and memoizes small pieces. Neighborhoods are
//! `u128` bitsets, which caps connected components at 128 vertices; each
//! recursion node spends one unit of budget so runaway inputs fail fast
//! instead of hanging.

use crate::graph::{Bigraph, Graph};
use crate::poly::{BivarPoly, IntPoly};
use rug::Integer;
use std::collections::HashMap;
use thiserror::Error;

/// Largest connected component the bitset engine accepts.
pub const MAX_COMPONENT: usize = 128;

/// Largest graph [`brute_force_isp`] accepts.
pub const MAX_BRUTE_FORCE: usize = 20;

/// Default recursion-node budget.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Error, Debug, PartialEq, Eq)]
pub enum CountError {
    #[error("recursion budget of {budget} nodes exceeded")]
    BudgetExceeded { budget: u64 },
    #[error("connected component has {size} vertices, engine limit is {max}")]
    ComponentTooLarge { size: usize, max: usize },
    #[error("brute force accepts at most {max} vertices, got {n}")]
    TooLargeForBruteForce { n: usize, max: usize },
}

#[derive(Clone, Copy, Debug)]
pub struct CountOptions {
    /// Recursion-node budget shared across the whole call.
    pub budget: u64,
}

impl Default for CountOptions {
    fn default() -> Self {
        CountOptions {
            budget: DEFAULT_BUDGET,
        }
    }
}

/// Values the recursion can accumulate: full polynomials or plain counts.
trait NodeValue: Clone {
    fn one() -> Self;
    /// Value of a single isolated vertex.
    fn leaf() -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// `without + lambda * without_nb`.
    fn branch(without: Self, without_nb: Self) -> Self;
}

impl NodeValue for IntPoly {
    fn one() -> Self {
        IntPoly::one()
    }
    fn leaf() -> Self {
        IntPoly::from_coeffs(vec![Integer::from(1), Integer::from(1)])
    }
    fn mul(&self, other: &Self) -> Self {
        IntPoly::mul(self, other)
    }
    fn branch(without: Self, without_nb: Self) -> Self {
        without.add_shifted(&without_nb, 1)
    }
}

impl NodeValue for Integer {
    fn one() -> Self {
        Integer::from(1)
    }
    fn leaf() -> Self {
        Integer::from(2)
    }
    fn mul(&self, other: &Self) -> Self {
        Integer::from(self * other)
    }
    fn branch(without: Self, without_nb: Self) -> Self {
        without + without_nb
    }
}

/// Subgraph signature for memoization: vertex count plus the packed upper
/// triangle of the induced adjacency in ascending-id order. Only pieces with
/// at most 16 vertices are packed (120 triangle bits at most).
type MemoKey = (u8, u128);

const MEMO_LIMIT: u32 = 16;

struct Engine<'a, T> {
    adj: &'a [u128],
    budget: u64,
    used: &'a mut u64,
    memo: &'a mut HashMap<MemoKey, T>,
}

impl<'a, T: NodeValue> Engine<'a, T> {
    fn tick(&mut self) -> Result<(), CountError> {
        *self.used += 1;
        if *self.used > self.budget {
            return Err(CountError::BudgetExceeded {
                budget: self.budget,
            });
        }
        Ok(())
    }

    fn component_of(&self, start: u32, mask: u128) -> u128 {
        let mut comp = 1u128 << start;
        let mut frontier = comp;
        loop {
            let mut next = 0u128;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros();
                f &= f - 1;
                next |= self.adj[v as usize] & mask;
            }
            next &= !comp;
            if next == 0 {
                return comp;
            }
            comp |= next;
            frontier = next;
        }
    }

    fn pack(&self, mask: u128) -> MemoKey {
        let mut verts = [0u8; MEMO_LIMIT as usize];
        let mut m = 0;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros();
            rest &= rest - 1;
            verts[m] = v as u8;
            m += 1;
        }
        let mut bits = 0u128;
        let mut pos = 0;
        for j in 1..m {
            for i in 0..j {
                if self.adj[verts[j] as usize] >> verts[i] & 1 == 1 {
                    bits |= 1u128 << pos;
                }
                pos += 1;
            }
        }
        (m as u8, bits)
    }

    fn value_of_mask(&mut self, mask: u128) -> Result<T, CountError> {
        let mut acc = T::one();
        let mut rest = mask;
        while rest != 0 {
            let piece = self.component_of(rest.trailing_zeros(), rest);
            rest &= !piece;
            let v = self.value_of_connected(piece)?;
            acc = acc.mul(&v);
        }
        Ok(acc)
    }

    fn value_of_connected(&mut self, mask: u128) -> Result<T, CountError> {
        self.tick()?;
        let m = mask.count_ones();
        if m == 1 {
            return Ok(T::leaf());
        }
        let key = if m <= MEMO_LIMIT {
            let k = self.pack(mask);
            if let Some(v) = self.memo.get(&k) {
                return Ok(v.clone());
            }
            Some(k)
        } else {
            None
        };
        let w = max_degree_vertex(self.adj, mask);
        let max_deg = (self.adj[w as usize] & mask).count_ones();
        let value = if max_deg <= 2 {
            self.path_or_cycle(mask)?
        } else {
            let without = self.value_of_mask(mask & !(1u128 << w))?;
            let closed = (self.adj[w as usize] & mask) | (1u128 << w);
            let without_nb = self.value_of_mask(mask & !closed)?;
            T::branch(without, without_nb)
        };
        if let Some(k) = key {
            self.memo.insert(k, value.clone());
        }
        Ok(value)
    }

    /// Closed form for connected pieces of maximum degree two. A path on
    /// `k` vertices satisfies `p_k = p_{k-1} + lambda p_{k-2}` (branch on an
    /// endpoint); a cycle branches once into `p_{m-1} + lambda p_{m-3}`.
    fn path_or_cycle(&mut self, mask: u128) -> Result<T, CountError> {
        let m = mask.count_ones() as usize;
        let mut twice_edges = 0u32;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros();
            rest &= rest - 1;
            twice_edges += (self.adj[v as usize] & mask).count_ones();
        }
        let is_path = twice_edges as usize / 2 == m - 1;
        let top = if is_path { m } else { m - 1 };
        let mut p = Vec::with_capacity(top + 1);
        p.push(T::one());
        p.push(T::leaf());
        for k in 2..=top {
            self.tick()?;
            let next = T::branch(p[k - 1].clone(), p[k - 2].clone());
            p.push(next);
        }
        if is_path {
            Ok(p[m].clone())
        } else {
            Ok(T::branch(p[m - 1].clone(), p[m - 3].clone()))
        }
    }
}

/// Maximum-degree vertex of the induced subgraph on `mask`, smallest id on
/// ties. `mask` must be nonempty.
fn max_degree_vertex(adj: &[u128], mask: u128) -> u32 {
    let mut best = u32::MAX;
    let mut best_deg = 0u32;
    let mut rest = mask;
    while rest != 0 {
        let v = rest.trailing_zeros();
        rest &= rest - 1;
        let deg = (adj[v as usize] & mask).count_ones();
        if best == u32::MAX || deg > best_deg {
            best = v;
            best_deg = deg;
        }
    }
    best
}

fn bitset_adjacency(g: &Graph) -> Result<Vec<u128>, CountError> {
    if g.n() > MAX_COMPONENT {
        return Err(CountError::ComponentTooLarge {
            size: g.n(),
            max: MAX_COMPONENT,
        });
    }
    let mut adj = vec![0u128; g.n()];
    for (u, v) in g.edges() {
        adj[u] |= 1u128 << v;
        adj[v] |= 1u128 << u;
    }
    Ok(adj)
}

fn run_engine<T: NodeValue>(g: &Graph, opts: &CountOptions) -> Result<T, CountError> {
    let mut used = 0u64;
    let mut memo: HashMap<MemoKey, T> = HashMap::new();
    let mut acc = T::one();
    for comp in g.components() {
        if comp.graph.n() > MAX_COMPONENT {
            return Err(CountError::ComponentTooLarge {
                size: comp.graph.n(),
                max: MAX_COMPONENT,
            });
        }
        let adj = bitset_adjacency(&comp.graph)?;
        let mask = if comp.graph.n() == 128 {
            u128::MAX
        } else {
            (1u128 << comp.graph.n()) - 1
        };
        let mut eng = Engine {
            adj: &adj,
            budget: opts.budget,
            used: &mut used,
            memo: &mut memo,
        };
        let v = eng.value_of_mask(mask)?;
        acc = acc.mul(&v);
    }
    Ok(acc)
}

/// Independence polynomial of `G` with default options.
pub fn isp(g: &Graph) -> Result<IntPoly, CountError> {
    isp_with(g, &CountOptions::default())
}

pub fn isp_with(g: &Graph, opts: &CountOptions) -> Result<IntPoly, CountError> {
    run_engine::<IntPoly>(g, opts)
}

/// Number of independent sets `i(G) = P_G(1)`, computed with plain integer
/// accumulators (cheaper than the full polynomial).
pub fn count(g: &Graph) -> Result<Integer, CountError> {
    count_with(g, &CountOptions::default())
}

pub fn count_with(g: &Graph, opts: &CountOptions) -> Result<Integer, CountError> {
    run_engine::<Integer>(g, opts)
}

/// Reference oracle: subset DP over all `2^n` vertex subsets, `n <= 20`.
pub fn brute_force_isp(g: &Graph) -> Result<IntPoly, CountError> {
    let n = g.n();
    if n > MAX_BRUTE_FORCE {
        return Err(CountError::TooLargeForBruteForce {
            n,
            max: MAX_BRUTE_FORCE,
        });
    }
    let mut adj = vec![0u32; n];
    for (u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    let size = 1usize << n;
    let mut indep = vec![false; size];
    indep[0] = true;
    let mut counts = vec![0u64; n + 1];
    counts[0] = 1;
    for mask in 1..size {
        let v = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        if indep[rest] && (adj[v] as usize & rest) == 0 {
            indep[mask] = true;
            counts[mask.count_ones() as usize] += 1;
        }
    }
    Ok(IntPoly::from_coeffs(
        counts.into_iter().map(Integer::from).collect(),
    ))
}

/// Bivariate independence polynomial of a two-part graph, part `A` tracked
/// by the first variable and part `B` by the second.
pub fn isp_bivariate(b: &Bigraph) -> Result<BivarPoly, CountError> {
    isp_bivariate_with(b, &CountOptions::default())
}

pub fn isp_bivariate_with(b: &Bigraph, opts: &CountOptions) -> Result<BivarPoly, CountError> {
    let g = b.underlying_graph();
    let a_size = b.a_size();
    let mut used = 0u64;
    let mut memo: HashMap<(u8, u128, u16), BivarPoly> = HashMap::new();
    let mut acc = BivarPoly::one();
    for comp in g.components() {
        if comp.graph.n() > MAX_COMPONENT {
            return Err(CountError::ComponentTooLarge {
                size: comp.graph.n(),
                max: MAX_COMPONENT,
            });
        }
        let adj = bitset_adjacency(&comp.graph)?;
        let mut b_side = 0u128;
        for (local, &orig) in comp.vertices.iter().enumerate() {
            if orig >= a_size {
                b_side |= 1u128 << local;
            }
        }
        let mask = if comp.graph.n() == 128 {
            u128::MAX
        } else {
            (1u128 << comp.graph.n()) - 1
        };
        let mut eng = BivarEngine {
            adj: &adj,
            b_side,
            budget: opts.budget,
            used: &mut used,
            memo: &mut memo,
        };
        let v = eng.value_of_mask(mask)?;
        acc = acc.mul(&v);
    }
    Ok(acc)
}

struct BivarEngine<'a> {
    adj: &'a [u128],
    b_side: u128,
    budget: u64,
    used: &'a mut u64,
    memo: &'a mut HashMap<(u8, u128, u16), BivarPoly>,
}

impl<'a> BivarEngine<'a> {
    fn tick(&mut self) -> Result<(), CountError> {
        *self.used += 1;
        if *self.used > self.budget {
            return Err(CountError::BudgetExceeded {
                budget: self.budget,
            });
        }
        Ok(())
    }

    fn component_of(&self, start: u32, mask: u128) -> u128 {
        let mut comp = 1u128 << start;
        let mut frontier = comp;
        loop {
            let mut next = 0u128;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros();
                f &= f - 1;
                next |= self.adj[v as usize] & mask;
            }
            next &= !comp;
            if next == 0 {
                return comp;
            }
            comp |= next;
            frontier = next;
        }
    }

    fn pack(&self, mask: u128) -> (u8, u128, u16) {
        let mut verts = [0u8; MEMO_LIMIT as usize];
        let mut m = 0;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros();
            rest &= rest - 1;
            verts[m] = v as u8;
            m += 1;
        }
        let mut bits = 0u128;
        let mut pos = 0;
        for j in 1..m {
            for i in 0..j {
                if self.adj[verts[j] as usize] >> verts[i] & 1 == 1 {
                    bits |= 1u128 << pos;
                }
                pos += 1;
            }
        }
        let mut side = 0u16;
        for (i, &v) in verts[..m].iter().enumerate() {
            if self.b_side >> v & 1 == 1 {
                side |= 1 << i;
            }
        }
        (m as u8, bits, side)
    }

    fn value_of_mask(&mut self, mask: u128) -> Result<BivarPoly, CountError> {
        let mut acc = BivarPoly::one();
        let mut rest = mask;
        while rest != 0 {
            let piece = self.component_of(rest.trailing_zeros(), rest);
            rest &= !piece;
            let v = self.value_of_connected(piece)?;
            acc = acc.mul(&v);
        }
        Ok(acc)
    }

    fn shift_of(&self, v: u32) -> (usize, usize) {
        if self.b_side >> v & 1 == 1 {
            (0, 1)
        } else {
            (1, 0)
        }
    }

    fn value_of_connected(&mut self, mask: u128) -> Result<BivarPoly, CountError> {
        self.tick()?;
        let m = mask.count_ones();
        if m == 1 {
            let v = mask.trailing_zeros();
            let (da, db) = self.shift_of(v);
            return Ok(BivarPoly::one().add_shifted(&BivarPoly::one(), da, db));
        }
        let key = if m <= MEMO_LIMIT {
            let k = self.pack(mask);
            if let Some(v) = self.memo.get(&k) {
                return Ok(v.clone());
            }
            Some(k)
        } else {
            None
        };
        let w = max_degree_vertex(self.adj, mask);
        let without = self.value_of_mask(mask & !(1u128 << w))?;
        let closed = (self.adj[w as usize] & mask) | (1u128 << w);
        let without_nb = self.value_of_mask(mask & !closed)?;
        let (da, db) = self.shift_of(w);
        let value = without.add_shifted(&without_nb, da, db);
        if let Some(k) = key {
            self.memo.insert(k, value.clone());
        }
        Ok(value)
    }
}

/// Independence number by branch and bound with the same branching rule,
/// plus closed forms for paths and cycles (the only connected graphs of
/// maximum degree two).
pub fn alpha_exact(g: &Graph) -> Result<usize, CountError> {
    alpha_exact_with(g, &CountOptions::default())
}

pub fn alpha_exact_with(g: &Graph, opts: &CountOptions) -> Result<usize, CountError> {
    let mut used = 0u64;
    let mut memo: HashMap<MemoKey, usize> = HashMap::new();
    let mut total = 0usize;
    for comp in g.components() {
        if comp.graph.n() > MAX_COMPONENT {
            return Err(CountError::ComponentTooLarge {
                size: comp.graph.n(),
                max: MAX_COMPONENT,
            });
        }
        let adj = bitset_adjacency(&comp.graph)?;
        let mask = if comp.graph.n() == 128 {
            u128::MAX
        } else {
            (1u128 << comp.graph.n()) - 1
        };
        let mut eng = AlphaEngine {
            adj: &adj,
            budget: opts.budget,
            used: &mut used,
            memo: &mut memo,
        };
        total += eng.alpha_of_mask(mask)?;
    }
    Ok(total)
}

struct AlphaEngine<'a> {
    adj: &'a [u128],
    budget: u64,
    used: &'a mut u64,
    memo: &'a mut HashMap<MemoKey, usize>,
}

impl<'a> AlphaEngine<'a> {
    fn tick(&mut self) -> Result<(), CountError> {
        *self.used += 1;
        if *self.used > self.budget {
            return Err(CountError::BudgetExceeded {
                budget: self.budget,
            });
        }
        Ok(())
    }

    fn component_of(&self, start: u32, mask: u128) -> u128 {
        let mut comp = 1u128 << start;
        let mut frontier = comp;
        loop {
            let mut next = 0u128;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros();
                f &= f - 1;
                next |= self.adj[v as usize] & mask;
            }
            next &= !comp;
            if next == 0 {
                return comp;
            }
            comp |= next;
            frontier = next;
        }
    }

    fn pack(&self, mask: u128) -> MemoKey {
        let mut verts = [0u8; MEMO_LIMIT as usize];
        let mut m = 0;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros();
            rest &= rest - 1;
            verts[m] = v as u8;
            m += 1;
        }
        let mut bits = 0u128;
        let mut pos = 0;
        for j in 1..m {
            for i in 0..j {
                if self.adj[verts[j] as usize] >> verts[i] & 1 == 1 {
                    bits |= 1u128 << pos;
                }
                pos += 1;
            }
        }
        (m as u8, bits)
    }

    fn alpha_of_mask(&mut self, mask: u128) -> Result<usize, CountError> {
        let mut total = 0;
        let mut rest = mask;
        while rest != 0 {
            let piece = self.component_of(rest.trailing_zeros(), rest);
            rest &= !piece;
            total += self.alpha_of_connected(piece)?;
        }
        Ok(total)
    }

    fn alpha_of_connected(&mut self, mask: u128) -> Result<usize, CountError> {
        self.tick()?;
        let m = mask.count_ones() as usize;
        if m == 1 {
            return Ok(1);
        }
        let w = max_degree_vertex(self.adj, mask);
        let max_deg = (self.adj[w as usize] & mask).count_ones();
        if max_deg <= 2 {
            let mut edges = 0;
            let mut rest = mask;
            while rest != 0 {
                let v = rest.trailing_zeros();
                rest &= rest - 1;
                edges += (self.adj[v as usize] & mask).count_ones();
            }
            let edges = edges as usize / 2;
            return Ok(if edges == m - 1 {
                m.div_ceil(2)
            } else {
                m / 2
            });
        }
        let key = if m as u32 <= MEMO_LIMIT {
            let k = self.pack(mask);
            if let Some(&v) = self.memo.get(&k) {
                return Ok(v);
            }
            Some(k)
        } else {
            None
        };
        let without = self.alpha_of_mask(mask & !(1u128 << w))?;
        let closed = (self.adj[w as usize] & mask) | (1u128 << w);
        let with = 1 + self.alpha_of_mask(mask & !closed)?;
        let value = without.max(with);
        if let Some(k) = key {
            self.memo.insert(k, value);
        }
        Ok(value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rug::Rational;

    fn poly(cs: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(cs.iter().map(|&c| Integer::from(c)).collect())
    }

    fn path(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Graph::new(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let mut edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((0, n - 1));
        Graph::new(n, &edges).unwrap()
    }

    fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, 5 + (i + 2) % 5));
        }
        Graph::new(10, &edges).unwrap()
    }

    #[test]
    fn small_closed_forms() {
        assert_eq!(isp(&path(3)).unwrap(), poly(&[1, 3, 1]));
        assert_eq!(isp(&cycle(4)).unwrap(), poly(&[1, 4, 2]));
        assert_eq!(isp(&cycle(5)).unwrap(), poly(&[1, 5, 5]));
        assert_eq!(isp(&Graph::clique(6).unwrap()).unwrap(), poly(&[1, 6]));
        assert_eq!(
            isp(&Graph::new(3, &[]).unwrap()).unwrap(),
            poly(&[1, 3, 3, 1])
        );
        assert_eq!(
            isp(&Graph::complete_bipartite(2, 3).unwrap()).unwrap(),
            poly(&[1, 5, 4, 1])
        );
    }

    #[test]
    fn petersen_counts() {
        let p = isp(&petersen()).unwrap();
        assert_eq!(p, poly(&[1, 10, 30, 30, 5]));
        assert_eq!(count(&petersen()).unwrap(), 76);
        assert_eq!(alpha_exact(&petersen()).unwrap(), 4);
    }

    #[test]
    fn engine_matches_brute_force() {
        let mut seed = 99u64;
        for n in 1..=14 {
            for _ in 0..4 {
                let p = Rational::from((2, 5));
                let g = Graph::random(n, &p, crate::graph::splitmix64(&mut seed)).unwrap();
                let fast = isp(&g).unwrap();
                let slow = brute_force_isp(&g).unwrap();
                assert_eq!(fast, slow, "n={n} graph={:?}", g.edges());
            }
        }
    }

    #[test]
    fn count_agrees_with_poly_total() {
        let mut seed = 7u64;
        for _ in 0..10 {
            let g = Graph::random(12, &Rational::from((1, 3)), crate::graph::splitmix64(&mut seed))
                .unwrap();
            assert_eq!(count(&g).unwrap(), isp(&g).unwrap().total());
        }
    }

    #[test]
    fn multiplicative_over_components() {
        let a = cycle(5);
        let b = path(4);
        let u = Graph::disjoint_union(&[a.clone(), b.clone()]);
        assert_eq!(isp(&u).unwrap(), isp(&a).unwrap().mul(&isp(&b).unwrap()));
    }

    #[test]
    fn bivariate_complete_bipartite() {
        let b = Bigraph::complete(2, 3).unwrap();
        let p = isp_bivariate(&b).unwrap();
        assert_eq!(p.coeff(0, 0), 1);
        assert_eq!(p.coeff(1, 0), 2);
        assert_eq!(p.coeff(2, 0), 1);
        assert_eq!(p.coeff(0, 1), 3);
        assert_eq!(p.coeff(0, 2), 3);
        assert_eq!(p.coeff(0, 3), 1);
        assert_eq!(p.coeff(1, 1), 0);
        assert_eq!(p.to_univariate(), poly(&[1, 5, 4, 1]));
    }

    #[test]
    fn bivariate_collapse_matches_univariate() {
        let mut seed = 31u64;
        for _ in 0..6 {
            let g = Graph::random(9, &Rational::from((1, 3)), crate::graph::splitmix64(&mut seed))
                .unwrap();
            let cover = g.double_cover();
            let biv = isp_bivariate(&cover).unwrap();
            assert_eq!(biv.to_univariate(), isp(&cover.underlying_graph()).unwrap());
        }
    }

    #[test]
    fn alpha_matches_poly_degree() {
        let mut seed = 5u64;
        for _ in 0..10 {
            let g = Graph::random(13, &Rational::from((3, 10)), crate::graph::splitmix64(&mut seed))
                .unwrap();
            assert_eq!(alpha_exact(&g).unwrap(), isp(&g).unwrap().degree());
        }
        assert_eq!(alpha_exact(&Graph::clique(7).unwrap()).unwrap(), 1);
        assert_eq!(alpha_exact(&cycle(9)).unwrap(), 4);
        assert_eq!(alpha_exact(&path(9)).unwrap(), 5);
    }

    #[test]
    fn path_cycle_closed_forms_match_brute_force() {
        for n in 3..=16 {
            assert_eq!(
                isp(&path(n)).unwrap(),
                brute_force_isp(&path(n)).unwrap(),
                "path {n}"
            );
            assert_eq!(
                isp(&cycle(n)).unwrap(),
                brute_force_isp(&cycle(n)).unwrap(),
                "cycle {n}"
            );
        }
    }

    #[test]
    fn budget_is_enforced() {
        let g = Graph::random(30, &Rational::from((1, 2)), 4).unwrap();
        let err = isp_with(&g, &CountOptions { budget: 10 }).unwrap_err();
        assert_eq!(err, CountError::BudgetExceeded { budget: 10 });
    }

    #[test]
    fn component_cap_is_enforced() {
        let g = path(129);
        assert!(matches!(
            isp(&g),
            Err(CountError::ComponentTooLarge { size: 129, .. })
        ));
        let ok = path(128);
        assert_eq!(isp(&ok).unwrap().degree(), 64);
    }

    #[test]
    fn brute_force_cap() {
        let g = Graph::new(21, &[]).unwrap();
        assert!(matches!(
            brute_force_isp(&g),
            Err(CountError::TooLargeForBruteForce { n: 21, .. })
        ));
    }

    #[test]
    fn large_sparse_graph_counts() {
        let g = Graph::random(50, &Rational::from((3, 49)), 2024).unwrap();
        let c = count(&g).unwrap();
        assert!(c > 0);
        assert_eq!(c, isp(&g).unwrap().total());
    }
}
