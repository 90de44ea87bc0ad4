//! Graph polynomial coefficients and choosability certificates from them.
//!
//! `f_G = Π_{ij ∈ E, i<j} (x_i - x_j)`. The coefficient of `Π x_i^{t_i}` is
//! obtained by multiplying the factors into a dense table indexed by
//! exponent vectors capped at `t`; terms beyond a cap cannot reach the
//! target monomial and are dropped.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest dense table (number of capped exponent vectors) accepted.
pub const MAX_STATES: usize = 20_000_000;

/// Coefficient of `Π x_i^{t_i}` in the graph polynomial.
pub fn graph_poly_coefficient(g: &Graph, t: &[usize]) -> Result<BigInt> {
    if t.len() != g.n() {
        return Err(Error::LengthMismatch {
            expected: g.n(),
            got: t.len(),
        });
    }
    let sum: usize = t.iter().sum();
    if sum != g.m() {
        return Err(Error::ExponentSum { sum, edges: g.m() });
    }
    let mut stride = vec![0usize; g.n()];
    let mut states = 1usize;
    for (i, &ti) in t.iter().enumerate() {
        stride[i] = states;
        states = states
            .checked_mul(ti + 1)
            .filter(|&s| s <= MAX_STATES)
            .ok_or(Error::Capacity {
                requested: usize::MAX,
                capacity: MAX_STATES,
            })?;
    }
    // Exponent of variable i in state s.
    let exp = |s: usize, i: usize| (s / stride[i]) % (t[i] + 1);
    let mut poly: Vec<BigInt> = vec![BigInt::zero(); states];
    poly[0] = BigInt::from(1);
    // Terms after k factors have total degree k; track the live ones only.
    let mut live: Vec<usize> = vec![0];
    for &(a, b) in g.edges() {
        let mut next: Vec<BigInt> = vec![BigInt::zero(); states];
        let mut next_live = Vec::new();
        for &s in &live {
            let c = &poly[s];
            if c.is_zero() {
                continue;
            }
            if exp(s, a) < t[a] {
                let d = s + stride[a];
                if next[d].is_zero() {
                    next_live.push(d);
                }
                next[d] += c;
            }
            if exp(s, b) < t[b] {
                let d = s + stride[b];
                if next[d].is_zero() {
                    next_live.push(d);
                }
                next[d] -= c;
            }
        }
        next_live.sort_unstable();
        next_live.dedup();
        poly = next;
        live = next_live;
    }
    Ok(poly[states - 1].clone())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CnsOutcome {
    /// Non-zero coefficient with every exponent below `r`: the graph is `r`-choosable.
    Certificate {
        exponents: Vec<usize>,
        coefficient: BigInt,
    },
    /// Tried vectors all had coefficient zero (proves nothing).
    NoneFound { tried: usize },
    /// `m > n (r - 1)`: no admissible exponent vector exists.
    Inapplicable,
}

/// Searches exponent vectors `t_i <= min(r-1, deg i)` with `Σ t_i = m`,
/// closest to uniform first, evaluating at most `max_vectors` coefficients.
pub fn cns_choosable_certificate(g: &Graph, r: usize, max_vectors: usize) -> Result<CnsOutcome> {
    let n = g.n();
    let m = g.m();
    if r == 0 || m > n * (r - 1) {
        return Ok(CnsOutcome::Inapplicable);
    }
    let caps: Vec<usize> = (0..n).map(|v| (r - 1).min(g.degree(v))).collect();
    if caps.iter().sum::<usize>() < m {
        return Ok(CnsOutcome::Inapplicable);
    }
    let mut vectors = Vec::new();
    let mut cur = vec![0usize; n];
    let suffix: Vec<usize> = (0..=n).map(|i| caps[i..].iter().sum()).collect();
    const GEN_LIMIT: usize = 2_000_000;
    gen(&caps, &suffix, 0, m, &mut cur, &mut vectors, GEN_LIMIT);
    // Closeness to uniform: Σ (n t_i - m)^2, then lexicographic.
    vectors.sort_by_key(|v: &Vec<usize>| {
        let dev: i128 = v
            .iter()
            .map(|&x| (n as i128 * x as i128 - m as i128).pow(2))
            .sum();
        (dev, std::cmp::Reverse(v.clone()))
    });
    let mut tried = 0;
    for t in vectors.into_iter().take(max_vectors) {
        tried += 1;
        let c = graph_poly_coefficient(g, &t)?;
        if !c.is_zero() {
            return Ok(CnsOutcome::Certificate {
                exponents: t,
                coefficient: c,
            });
        }
    }
    Ok(CnsOutcome::NoneFound { tried })
}

fn gen(
    caps: &[usize],
    suffix: &[usize],
    i: usize,
    left: usize,
    cur: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
    limit: usize,
) {
    if out.len() >= limit {
        return;
    }
    if i == caps.len() {
        if left == 0 {
            out.push(cur.clone());
        }
        return;
    }
    if suffix[i] < left {
        return;
    }
    for x in (0..=caps[i].min(left)).rev() {
        cur[i] = x;
        gen(caps, suffix, i + 1, left - x, cur, out, limit);
    }
    cur[i] = 0;
}
