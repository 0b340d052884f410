//! Integer polynomials holding independent-set counts.
//!
//! `IntPoly` stores `coeffs[k]` = number of independent sets of size `k`, so
//! the constant coefficient of a polynomial produced by the counting engine
//! is always 1 (the empty set) and the degree is the independence number.
//! `BivarPoly` is the bipartite refinement with one variable per part.

use rug::{Integer, Rational};
use std::collections::BTreeMap;

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients; trailing zero coefficients are trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<Integer>,
}

impl IntPoly {
    /// The constant polynomial 1.
    pub fn one() -> Self {
        IntPoly {
            coeffs: vec![Integer::from(1)],
        }
    }

    pub fn from_coeffs(coeffs: Vec<Integer>) -> Self {
        let mut p = IntPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.len() > 1 && self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
        if self.coeffs.is_empty() {
            self.coeffs.push(Integer::new());
        }
    }

    pub fn coeffs(&self) -> &[Integer] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Integer {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == 1
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let mut coeffs = vec![Integer::new(); self.coeffs.len().max(other.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        IntPoly::from_coeffs(coeffs)
    }

    /// `self + lambda^shift * other`, the shape of the deletion recursion
    /// with `shift = 1`.
    pub fn add_shifted(&self, other: &IntPoly, shift: usize) -> IntPoly {
        let mut coeffs = vec![Integer::new(); self.coeffs.len().max(other.coeffs.len() + shift)];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i + shift] += c;
        }
        IntPoly::from_coeffs(coeffs)
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        let mut coeffs = vec![Integer::new(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += Integer::from(a * b);
            }
        }
        IntPoly::from_coeffs(coeffs)
    }

    /// Exact evaluation at a rational point by Horner's rule.
    pub fn evaluate(&self, x: &Rational) -> Rational {
        let mut acc = Rational::new();
        for c in self.coeffs.iter().rev() {
            acc *= x;
            acc += c;
        }
        acc
    }

    /// Sum of coefficients, the total count of independent sets.
    pub fn total(&self) -> Integer {
        let mut s = Integer::new();
        for c in &self.coeffs {
            s += c;
        }
        s
    }
}

impl std::fmt::Display for IntPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() && self.coeffs.len() > 1 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "{}", c)?,
                1 if *c == 1 => write!(f, "x")?,
                1 => write!(f, "{}*x", c)?,
                _ if *c == 1 => write!(f, "x^{}", k)?,
                _ => write!(f, "{}*x^{}", c, k)?,
            }
            first = false;
        }
        Ok(())
    }
}

/// Sparse bivariate polynomial; `coeffs[(i, j)]` counts independent sets
/// with `i` vertices in part `A` and `j` in part `B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivarPoly {
    coeffs: BTreeMap<(usize, usize), Integer>,
}

impl BivarPoly {
    pub fn one() -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert((0, 0), Integer::from(1));
        BivarPoly { coeffs }
    }

    pub fn coeffs(&self) -> &BTreeMap<(usize, usize), Integer> {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize, j: usize) -> Integer {
        self.coeffs.get(&(i, j)).cloned().unwrap_or_default()
    }

    fn insert_add(&mut self, key: (usize, usize), val: Integer) {
        let slot = self.coeffs.entry(key).or_default();
        *slot += val;
        if slot.is_zero() {
            self.coeffs.remove(&key);
        }
    }

    /// `self + lambda^da mu^db * other`.
    pub fn add_shifted(&self, other: &BivarPoly, da: usize, db: usize) -> BivarPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &other.coeffs {
            out.insert_add((i + da, j + db), c.clone());
        }
        out
    }

    pub fn mul(&self, other: &BivarPoly) -> BivarPoly {
        let mut out = BivarPoly {
            coeffs: BTreeMap::new(),
        };
        for (&(i, j), a) in &self.coeffs {
            for (&(k, l), b) in &other.coeffs {
                out.insert_add((i + k, j + l), Integer::from(a * b));
            }
        }
        out
    }

    /// Exact evaluation at `(lambda, mu)`.
    pub fn evaluate(&self, lambda: &Rational, mu: &Rational) -> Rational {
        let max_i = self.coeffs.keys().map(|&(i, _)| i).max().unwrap_or(0);
        let max_j = self.coeffs.keys().map(|&(_, j)| j).max().unwrap_or(0);
        let pow_table = |x: &Rational, m: usize| {
            let mut t = Vec::with_capacity(m + 1);
            t.push(Rational::from(1));
            for k in 1..=m {
                t.push(Rational::from(&t[k - 1] * x));
            }
            t
        };
        let lam = pow_table(lambda, max_i);
        let mus = pow_table(mu, max_j);
        let mut acc = Rational::new();
        for (&(i, j), c) in &self.coeffs {
            let mut term = Rational::from(&lam[i] * &mus[j]);
            term *= c;
            acc += term;
        }
        acc
    }

    /// Collapse to one variable by setting `mu = lambda`.
    pub fn to_univariate(&self) -> IntPoly {
        let deg = self.coeffs.keys().map(|&(i, j)| i + j).max().unwrap_or(0);
        let mut coeffs = vec![Integer::new(); deg + 1];
        for (&(i, j), c) in &self.coeffs {
            coeffs[i + j] += c;
        }
        IntPoly::from_coeffs(coeffs)
    }

    /// Total degree in each variable.
    pub fn degrees(&self) -> (usize, usize) {
        (
            self.coeffs.keys().map(|&(i, _)| i).max().unwrap_or(0),
            self.coeffs.keys().map(|&(_, j)| j).max().unwrap_or(0),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(cs: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(cs.iter().map(|&c| Integer::from(c)).collect())
    }

    #[test]
    fn constructors_and_trim() {
        let p = poly(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), 1);
        assert_eq!(p.coeff(1), 2);
        assert_eq!(p.coeff(7), 0);
        assert!(IntPoly::one().is_one());
    }

    #[test]
    fn arithmetic() {
        let a = poly(&[1, 3]);
        let b = poly(&[1, 1]);
        assert_eq!(a.add(&b), poly(&[2, 4]));
        assert_eq!(a.mul(&b), poly(&[1, 4, 3]));
        assert_eq!(a.add_shifted(&b, 1), poly(&[1, 4, 1]));
    }

    #[test]
    fn evaluate_exactly() {
        let p = poly(&[1, 4, 2]);
        let x = Rational::from((1, 2));
        assert_eq!(p.evaluate(&x), Rational::from((7, 2)));
        assert_eq!(p.total(), 7);
    }

    #[test]
    fn display_reads_naturally() {
        assert_eq!(poly(&[1, 4, 2]).to_string(), "1 + 4*x + 2*x^2");
        assert_eq!(poly(&[1, 1]).to_string(), "1 + x");
        assert_eq!(poly(&[0]).to_string(), "0");
    }

    #[test]
    fn bivariate_matches_univariate_collapse() {
        let mut b = BivarPoly::one();
        b = b.add_shifted(&BivarPoly::one(), 1, 0);
        b = b.add_shifted(&BivarPoly::one(), 0, 1);
        let u = b.to_univariate();
        assert_eq!(u, poly(&[1, 2]));
        let lam = Rational::from((1, 3));
        let mu = Rational::from((1, 5));
        assert_eq!(
            b.evaluate(&lam, &mu),
            Rational::from(1) + lam.clone() + mu.clone()
        );
        assert_eq!(b.evaluate(&lam, &lam), u.evaluate(&lam));
    }

    #[test]
    fn bivariate_mul() {
        let edge = {
            let mut p = BivarPoly::one();
            p = p.add_shifted(&BivarPoly::one(), 1, 0);
            p.add_shifted(&BivarPoly::one(), 0, 1)
        };
        let two_edges = edge.mul(&edge);
        assert_eq!(two_edges.coeff(1, 1), 2);
        assert_eq!(two_edges.coeff(2, 0), 1);
        assert_eq!(two_edges.coeff(0, 0), 1);
        assert_eq!(two_edges.degrees(), (2, 2));
    }
}
