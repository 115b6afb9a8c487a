//! Chromatic polynomials of small simple graphs and Stanley's reciprocal
//! `P̄(G, x) = (-1)^|V| P(G, -x)`, which counts pairs of an acyclic
//! orientation and an order-respecting map `V -> {1..x}`.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::mstirling::m_stirling_explicit;
use crate::stirling::{binomial, factorial};
use crate::{IntPoly, Integer};

/// Largest vertex count accepted by deletion-contraction.
pub const CHROMATIC_VERTEX_LIMIT: usize = 12;
/// Limits of the orientation-by-map enumeration.
pub const BRUTEFORCE_VERTEX_LIMIT: usize = 5;
pub const BRUTEFORCE_EDGE_LIMIT: usize = 8;
pub const BRUTEFORCE_COLOR_LIMIT: u32 = 3;

/// Simple undirected graph on vertices `0..vertex_count`; edges are stored
/// as `(u, v)` with `u < v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SimpleGraph {
    vertex_count: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl SimpleGraph {
    /// Edgeless graph `O_n`.
    pub fn new(vertex_count: usize) -> Self {
        SimpleGraph {
            vertex_count,
            edges: BTreeSet::new(),
        }
    }

    pub fn with_edges(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut g = Self::new(vertex_count);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Rejects loops, out-of-range endpoints and repeated edges.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u == v {
            return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
        }
        if u >= self.vertex_count || v >= self.vertex_count {
            return Err(Error::InvalidGraph(format!(
                "edge {u}-{v} out of range for {} vertices",
                self.vertex_count
            )));
        }
        if !self.edges.insert((u.min(v), u.max(v))) {
            return Err(Error::InvalidGraph(format!("duplicate edge {u}-{v}")));
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    /// `G - e`.
    pub fn delete_edge(&self, e: (usize, usize)) -> Self {
        let mut g = self.clone();
        g.edges.remove(&(e.0.min(e.1), e.0.max(e.1)));
        g
    }

    /// `G / e`: the larger endpoint is merged into the smaller one, later
    /// vertices shift down by one, and parallel edges collapse.
    pub fn contract_edge(&self, e: (usize, usize)) -> Self {
        let (keep, gone) = (e.0.min(e.1), e.0.max(e.1));
        let relabel = |w: usize| {
            if w == gone {
                keep
            } else if w > gone {
                w - 1
            } else {
                w
            }
        };
        let edges = self
            .edges
            .iter()
            .filter(|&&edge| edge != (keep, gone))
            .map(|&(u, v)| {
                let (a, b) = (relabel(u), relabel(v));
                (a.min(b), a.max(b))
            })
            .collect();
        SimpleGraph {
            vertex_count: self.vertex_count - 1,
            edges,
        }
    }

    /// Parses the edge-list format: a line `n <vertex_count>` followed by
    /// one `u v` pair per line. Blank lines and `#` comments are skipped.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (lineno, header) = lines
            .next()
            .ok_or_else(|| Error::InvalidGraph("missing `n <vertex_count>` header".into()))?;
        let count = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["n", count] => count.parse::<usize>().map_err(|_| {
                Error::InvalidGraph(format!("line {lineno}: bad vertex count {count:?}"))
            })?,
            _ => {
                return Err(Error::InvalidGraph(format!(
                    "line {lineno}: expected `n <vertex_count>`"
                )))
            }
        };
        let mut g = Self::new(count);
        for (lineno, line) in lines {
            let ends: Vec<usize> = line
                .split_whitespace()
                .map(|t| t.parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::InvalidGraph(format!("line {lineno}: expected `u v`")))?;
            match ends.as_slice() {
                [u, v] => g.add_edge(*u, *v)?,
                _ => {
                    return Err(Error::InvalidGraph(format!(
                        "line {lineno}: expected `u v`"
                    )))
                }
            }
        }
        Ok(g)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("n {}\n", self.vertex_count);
        for (u, v) in self.edges() {
            writeln!(out, "{u} {v}").expect("writing to a String");
        }
        out
    }
}

/// `O_n`.
pub fn empty_graph(n: usize) -> SimpleGraph {
    SimpleGraph::new(n)
}

/// `K_n`.
pub fn complete_graph(n: usize) -> SimpleGraph {
    let mut g = SimpleGraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.edges.insert((u, v));
        }
    }
    g
}

/// `G + H`; the vertices of `h` follow those of `g`.
pub fn disjoint_union(g: &SimpleGraph, h: &SimpleGraph) -> SimpleGraph {
    let offset = g.vertex_count;
    let mut edges = g.edges.clone();
    edges.extend(h.edges().map(|(u, v)| (u + offset, v + offset)));
    SimpleGraph {
        vertex_count: g.vertex_count + h.vertex_count,
        edges,
    }
}

fn check_chromatic_limit(g: &SimpleGraph) -> Result<()> {
    if g.vertex_count > CHROMATIC_VERTEX_LIMIT {
        return Err(Error::GraphTooLarge {
            vertices: g.vertex_count,
            edges: g.edge_count(),
            operation: "deletion-contraction",
        });
    }
    Ok(())
}

/// Chromatic polynomial by deletion-contraction,
/// `P(G) = P(G - e) - P(G / e)` on the smallest edge, down to `x^|V|` for
/// edgeless graphs. Intermediate graphs are memoized by their edge set.
pub fn chromatic_polynomial(g: &SimpleGraph) -> Result<IntPoly> {
    check_chromatic_limit(g)?;
    let mut memo = HashMap::new();
    Ok(deletion_contraction(g, &mut memo))
}

fn deletion_contraction(g: &SimpleGraph, memo: &mut HashMap<SimpleGraph, IntPoly>) -> IntPoly {
    let Some(&e) = g.edges.iter().next() else {
        return IntPoly::monomial(BigInt::one(), g.vertex_count);
    };
    if let Some(p) = memo.get(g) {
        return p.clone();
    }
    let deleted = deletion_contraction(&g.delete_edge(e), memo);
    let contracted = deletion_contraction(&g.contract_edge(e), memo);
    let p = &deleted - &contracted;
    memo.insert(g.clone(), p.clone());
    p
}

/// `(-1)^|V| P(G, -x)`.
pub fn pbar(g: &SimpleGraph) -> Result<IntPoly> {
    let p = chromatic_polynomial(g)?;
    let n = g.vertex_count;
    Ok(IntPoly::from_coeffs(
        p.coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| {
                if (n + i).is_multiple_of(2) {
                    c.clone()
                } else {
                    -c.clone()
                }
            })
            .collect(),
    ))
}

/// Acyclicity of a digraph by repeated sink removal.
pub fn is_acyclic(vertex_count: usize, arcs: &[(usize, usize)]) -> bool {
    let mut alive = vec![true; vertex_count];
    let mut remaining = vertex_count;
    loop {
        let sink =
            (0..vertex_count).find(|&v| alive[v] && !arcs.iter().any(|&(u, w)| u == v && alive[w]));
        match sink {
            Some(v) => {
                alive[v] = false;
                remaining -= 1;
            }
            None => return remaining == 0,
        }
    }
}

/// Counts pairs `(sigma, O)` of an acyclic orientation `O` and a map
/// `sigma: V -> {1..x}` with `sigma(u) >= sigma(v)` for every arc `u -> v`.
pub fn pbar_bruteforce(g: &SimpleGraph, x: u32) -> Result<u64> {
    if g.vertex_count > BRUTEFORCE_VERTEX_LIMIT || g.edge_count() > BRUTEFORCE_EDGE_LIMIT {
        return Err(Error::GraphTooLarge {
            vertices: g.vertex_count,
            edges: g.edge_count(),
            operation: "orientation enumeration",
        });
    }
    if x > BRUTEFORCE_COLOR_LIMIT {
        return Err(Error::Precondition(format!(
            "enumeration supports x <= {BRUTEFORCE_COLOR_LIMIT}, got {x}"
        )));
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let n = g.vertex_count;
    let maps = (x as u64).pow(n as u32);
    let mut total = 0u64;
    for mask in 0u32..(1 << edges.len()) {
        let arcs: Vec<(usize, usize)> = edges
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| if mask >> i & 1 == 0 { (u, v) } else { (v, u) })
            .collect();
        if !is_acyclic(n, &arcs) {
            continue;
        }
        let mut sigma = vec![0u32; n];
        for code in 0..maps {
            let mut c = code;
            for s in sigma.iter_mut() {
                *s = (c % x as u64) as u32;
                c /= x as u64;
            }
            if arcs.iter().all(|&(u, v)| sigma[u] >= sigma[v]) {
                total += 1;
            }
        }
    }
    Ok(total)
}

/// `R_n^k(m)` as `(1/k!) sum_j (-1)^(k-j) C(k, j) P̄(O_n + K_m, j)`, with
/// `P̄` from deletion-contraction.
pub fn m_stirling_via_graph(n: usize, k: usize, m: usize) -> Result<Integer> {
    let g = disjoint_union(&empty_graph(n), &complete_graph(m));
    let p = pbar(&g)?;
    let mut acc = BigInt::zero();
    for j in 0..=k {
        let term = binomial(k, j) * p.eval(&BigInt::from(j));
        if (k - j).is_multiple_of(2) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    let kf = factorial(k);
    if !(&acc % &kf).is_zero() {
        return Err(Error::NonIntegral {
            value: format!("{acc}/{kf}"),
            context: "graph m-Stirling sum",
        });
    }
    Ok(acc / kf)
}

/// Compares the graph-side formula with the defining m-Stirling sum.
/// Accepts `n <= 6`, `m <= 4`, `k <= n + m`.
pub fn m_stirling_graph_check(n: usize, k: usize, m: usize) -> Result<bool> {
    if n > 6 || m > 4 || k > n + m {
        return Err(Error::Precondition(format!(
            "graph check needs n <= 6, m <= 4, k <= n + m; got n={n}, k={k}, m={m}"
        )));
    }
    Ok(m_stirling_via_graph(n, k, m)? == m_stirling_explicit(n, k, m)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(cs: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn basic_polynomials() {
        assert_eq!(
            chromatic_polynomial(&empty_graph(3)).unwrap(),
            ip(&[0, 0, 0, 1])
        );
        // x(x-1)(x-2) = 2x - 3x^2 + x^3
        assert_eq!(
            chromatic_polynomial(&complete_graph(3)).unwrap(),
            ip(&[0, 2, -3, 1])
        );
        assert_eq!(
            chromatic_polynomial(&complete_graph(2)).unwrap(),
            ip(&[0, -1, 1])
        );
        assert_eq!(chromatic_polynomial(&empty_graph(0)).unwrap(), ip(&[1]));
    }

    #[test]
    fn size_limit() {
        assert!(matches!(
            chromatic_polynomial(&empty_graph(13)),
            Err(Error::GraphTooLarge { vertices: 13, .. })
        ));
        assert!(chromatic_polynomial(&complete_graph(12)).is_ok());
        assert!(pbar_bruteforce(&complete_graph(5), 1).is_err());
        assert!(pbar_bruteforce(&empty_graph(6), 1).is_err());
        assert!(pbar_bruteforce(&empty_graph(2), 4).is_err());
    }

    #[test]
    fn reciprocal_examples() {
        assert_eq!(pbar(&empty_graph(1)).unwrap(), ip(&[0, 1]));
        for n in 0..=6 {
            assert_eq!(
                pbar(&empty_graph(n)).unwrap(),
                IntPoly::monomial(BigInt::one(), n)
            );
            // rising factorial (x)_n
            let rising = (0..n).fold(ip(&[1]), |acc, t| &acc * &ip(&[t as i64, 1]));
            assert_eq!(pbar(&complete_graph(n)).unwrap(), rising);
        }
    }

    #[test]
    fn bruteforce_examples() {
        assert_eq!(pbar_bruteforce(&complete_graph(2), 2).unwrap(), 6);
        assert_eq!(pbar_bruteforce(&empty_graph(2), 2).unwrap(), 4);
        assert_eq!(pbar_bruteforce(&empty_graph(1), 3).unwrap(), 3);
        assert_eq!(pbar_bruteforce(&empty_graph(3), 0).unwrap(), 0);
        assert_eq!(pbar_bruteforce(&empty_graph(0), 0).unwrap(), 1);
    }

    #[test]
    fn acyclicity() {
        assert!(is_acyclic(3, &[(0, 1), (1, 2)]));
        assert!(!is_acyclic(3, &[(0, 1), (1, 2), (2, 0)]));
        assert!(is_acyclic(0, &[]));
    }

    #[test]
    fn union_and_contraction() {
        let g = disjoint_union(&empty_graph(2), &complete_graph(2));
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 1);
        assert!(g.has_edge(2, 3));
        assert_eq!(
            disjoint_union(&empty_graph(0), &complete_graph(3)),
            complete_graph(3)
        );
        let u = disjoint_union(&empty_graph(1), &complete_graph(2));
        assert_eq!(pbar(&u).unwrap(), ip(&[0, 0, 1, 1]));
        // contracting one edge of a triangle leaves a single edge
        let c = complete_graph(3).contract_edge((0, 1));
        assert_eq!(c, complete_graph(2));
    }

    #[test]
    fn edge_list_round_trip_and_errors() {
        let g = SimpleGraph::parse_edge_list("# triangle\nn 3\n0 1\n1 2\n\n2 0\n").unwrap();
        assert_eq!(g, complete_graph(3));
        assert_eq!(SimpleGraph::parse_edge_list(&g.to_edge_list()).unwrap(), g);
        for bad in [
            "",
            "3\n",
            "n 2\n0 0\n",
            "n 2\n0 2\n",
            "n 2\n0 1\n1 0\n",
            "n 2\n0 1 1\n",
            "n x\n",
        ] {
            assert!(SimpleGraph::parse_edge_list(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn graph_formula_examples() {
        assert!(m_stirling_graph_check(2, 3, 2).unwrap());
        assert_eq!(m_stirling_via_graph(2, 3, 2).unwrap(), BigInt::from(7));
        assert_eq!(m_stirling_via_graph(0, 1, 3).unwrap(), BigInt::from(6));
        for n in 0..=5 {
            for k in 0..=n {
                assert!(m_stirling_graph_check(n, k, 0).unwrap());
            }
        }
        assert!(m_stirling_graph_check(7, 1, 0).is_err());
        assert!(m_stirling_graph_check(1, 5, 2).is_err());
    }
}
