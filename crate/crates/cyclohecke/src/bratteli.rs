//! Powers of the Young graph as Bratteli diagrams: graded vertex sets of
//! m-partitions, inclusion edges labeled by the content of the added node,
//! path counting and the dimension identities.

use std::fmt::Write as _;

use num::{BigUint, One, Zero};
use thiserror::Error;

use crate::combinatorics::{enumerate_mpartitions, BoundaryKind, MPartition};
use crate::scalar::RatFn;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum BratteliError {
    #[error("vertex {0} not found at level {1}")]
    UnknownVertex(String, usize),
}

/// An edge between level `a` (lower end) and level `a + 1` (upper end).
#[derive(Debug, Clone, PartialEq)]
pub struct Edge {
    /// Index into `levels[a]`.
    pub from: usize,
    /// Index into `levels[a + 1]`.
    pub to: usize,
    /// Content of the added node.
    pub label: RatFn,
}

/// A graded graph with a single degree-0 vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct BratteliGraph {
    m: usize,
    levels: Vec<Vec<MPartition>>,
    /// `edges[a]` connects `levels[a]` to `levels[a + 1]`.
    edges: Vec<Vec<Edge>>,
}

impl BratteliGraph {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn depth(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn level(&self, a: usize) -> &[MPartition] {
        &self.levels[a]
    }

    pub fn edges(&self, a: usize) -> &[Edge] {
        &self.edges[a]
    }

    fn vertex_index(&self, a: usize, v: &MPartition) -> Result<usize, BratteliError> {
        self.levels
            .get(a)
            .and_then(|lv| lv.iter().position(|x| x == v))
            .ok_or_else(|| BratteliError::UnknownVertex(v.to_string(), a))
    }

    /// Number of descending paths from the degree-0 vertex, via dynamic
    /// programming over the levels.
    pub fn vertex_dimension(&self, a: usize, v: &MPartition) -> Result<BigUint, BratteliError> {
        let idx = self.vertex_index(a, v)?;
        Ok(self.level_dimensions(a)[idx].clone())
    }

    /// Path counts for every vertex of level `a`.
    pub fn level_dimensions(&self, a: usize) -> Vec<BigUint> {
        let mut dims = vec![BigUint::one()];
        for lvl in 0..a {
            let mut next = vec![BigUint::zero(); self.levels[lvl + 1].len()];
            for e in &self.edges[lvl] {
                next[e.to] += &dims[e.from];
            }
            dims = next;
        }
        dims
    }

    /// Sum of squared path counts over level `a`; for the m-th power of the
    /// Young graph this is `a! * m^a`.
    pub fn level_square_sum(&self, a: usize) -> BigUint {
        self.level_dimensions(a).iter().map(|d| d * d).sum()
    }

    /// All descending paths from the degree-0 vertex to the given vertex, as
    /// sequences of edge labels.
    pub fn paths_to(&self, a: usize, v: &MPartition) -> Result<Vec<Vec<RatFn>>, BratteliError> {
        let target = self.vertex_index(a, v)?;
        let mut paths: Vec<Vec<(usize, Vec<RatFn>)>> = vec![vec![(0, Vec::new())]];
        for lvl in 0..a {
            let mut next: Vec<(usize, Vec<RatFn>)> = Vec::new();
            for (idx, labels) in &paths[lvl] {
                for e in &self.edges[lvl] {
                    if e.from == *idx {
                        let mut labels = labels.clone();
                        labels.push(e.label.clone());
                        next.push((e.to, labels));
                    }
                }
            }
            paths.push(next);
        }
        Ok(paths[a]
            .iter()
            .filter(|(idx, _)| *idx == target)
            .map(|(_, labels)| labels.clone())
            .collect())
    }

    /// Deterministic DOT rendering, ranked by level.
    pub fn export_dot(&self) -> String {
        let mut out = String::new();
        out.push_str("digraph bratteli {\n  rankdir=TB;\n");
        for (a, lvl) in self.levels.iter().enumerate() {
            let names: Vec<String> = (0..lvl.len()).map(|i| format!("\"L{}_{}\"", a, i)).collect();
            writeln!(out, "  {{ rank=same; {} }}", names.join("; ")).unwrap();
            for (i, v) in lvl.iter().enumerate() {
                writeln!(out, "  \"L{}_{}\" [label=\"{}\"];", a, i, v).unwrap();
            }
        }
        for (a, edges) in self.edges.iter().enumerate() {
            for e in edges {
                writeln!(
                    out,
                    "  \"L{}_{}\" -> \"L{}_{}\" [label=\"{}\"];",
                    a,
                    e.from,
                    a + 1,
                    e.to,
                    e.label
                )
                .unwrap();
            }
        }
        out.push_str("}\n");
        out
    }

    /// JSON export of `(level, vertex, dimension)` triples.
    pub fn export_json(&self) -> serde_json::Value {
        let mut rows = Vec::new();
        for a in 0..=self.depth() {
            let dims = self.level_dimensions(a);
            for (v, d) in self.levels[a].iter().zip(dims) {
                rows.push(serde_json::json!({
                    "level": a,
                    "vertex": v.to_string(),
                    "dimension": d.to_string(),
                }));
            }
        }
        serde_json::Value::Array(rows)
    }
}

/// The m-th power of the Young graph down to the given depth: level `a`
/// holds all m-partitions of `a`; an edge joins `mu` to `lambda` exactly when
/// `lambda` is `mu` plus one addable node, labeled by that node's content.
pub fn young_graph_power(m: usize, depth: usize) -> BratteliGraph {
    assert!(m >= 1, "m must be at least 1");
    let levels: Vec<Vec<MPartition>> = (0..=depth).map(|a| enumerate_mpartitions(m, a)).collect();
    let mut edges = Vec::new();
    for a in 0..depth {
        let mut lvl_edges = Vec::new();
        for (from, mu) in levels[a].iter().enumerate() {
            for node in mu.boundary_nodes(BoundaryKind::Addable) {
                let lambda = mu.with_node(&node).expect("addable");
                let to = levels[a + 1].iter().position(|x| *x == lambda).expect("enumerated");
                let label = RatFn::v(m, node.pos)
                    .expect("pos in range")
                    .checked_mul(&RatFn::q_pow(m, 2 * node.content_z()))
                    .expect("same arity");
                lvl_edges.push(Edge { from, to, label });
            }
        }
        edges.push(lvl_edges);
    }
    BratteliGraph { m, levels, edges }
}

/// Checks the product-dimension formula on every level-`n` vertex of the
/// m-th Young graph power: the path count equals the multinomial coefficient
/// of the component sizes times the product of the component hook-formula
/// dimensions.
pub fn check_product_dimension(m: usize, n: usize) -> bool {
    let g = young_graph_power(m, n);
    let dims = g.level_dimensions(n);
    for (v, d) in g.level(n).iter().zip(dims) {
        if d != v.dimension() {
            return false;
        }
        // The same number, written as multinomial * product of single-diagram
        // dimensions (the product formula).
        let mut expected = factorial(n);
        for comp in v.components() {
            let k = comp.size();
            expected = expected / factorial(k) * (factorial(k) / comp.hook_product());
        }
        if d != expected {
            return false;
        }
    }
    true
}

pub(crate) fn factorial(n: usize) -> BigUint {
    let mut out = BigUint::one();
    for k in 2..=n {
        out *= BigUint::from(k);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{content_string, enumerate_standard_tableaux};
    use crate::scalar::{parse_ratfn, ratfn_eq};

    #[test]
    fn level_sizes_and_labels() {
        let g = young_graph_power(2, 3);
        assert_eq!(g.level(0).len(), 1);
        assert_eq!(g.level(1).len(), 2);
        assert_eq!(g.level(2).len(), 5);
        assert_eq!(g.level(3).len(), 10);
        // The two edges out of the empty 2-partition are labeled v1 and v2.
        let labels: Vec<String> = g.edges(0).iter().map(|e| e.label.to_string()).collect();
        assert_eq!(labels, vec!["v1", "v2"]);
        let g1 = young_graph_power(1, 1);
        assert_eq!(g1.edges(0).len(), 1);
    }

    #[test]
    fn vertex_dimensions() {
        let g = young_graph_power(2, 4);
        let one_one: MPartition = "[[1],[1]]".parse().unwrap();
        assert_eq!(g.vertex_dimension(2, &one_one).unwrap(), BigUint::from(2u32));
        assert_eq!(g.vertex_dimension(0, &MPartition::empty(2)).unwrap(), BigUint::one());
        let big: MPartition = "[[1,1],[2]]".parse().unwrap();
        assert_eq!(g.vertex_dimension(4, &big).unwrap(), BigUint::from(6u32));
        assert!(g.vertex_dimension(3, &big).is_err());
    }

    #[test]
    fn square_sums() {
        assert_eq!(young_graph_power(2, 2).level_square_sum(2), BigUint::from(8u32));
        assert_eq!(young_graph_power(2, 2).level_square_sum(0), BigUint::one());
        assert_eq!(young_graph_power(3, 4).level_square_sum(4), BigUint::from(1944u32));
    }

    #[test]
    fn product_dimension_formula() {
        for m in 1..=3 {
            for n in 0..=4 {
                assert!(check_product_dimension(m, n), "m={} n={}", m, n);
            }
        }
    }

    #[test]
    fn power_recursion() {
        // D_m(c) = sum_a binom(c,a)^2 D_1(a) D_{m-1}(c - a), where D_k is the
        // square-sum sequence of the k-th power.
        for m in 2..=3 {
            for c in 0..=5usize {
                let lhs = young_graph_power(m, c).level_square_sum(c);
                let mut rhs = BigUint::zero();
                for a in 0..=c {
                    let binom = factorial(c) / (factorial(a) * factorial(c - a));
                    rhs += &binom
                        * &binom
                        * young_graph_power(1, a).level_square_sum(a)
                        * young_graph_power(m - 1, c - a).level_square_sum(c - a);
                }
                assert_eq!(lhs, rhs, "m={} c={}", m, c);
            }
        }
    }

    #[test]
    fn paths_match_content_strings() {
        let g = young_graph_power(2, 3);
        for v in g.level(3) {
            let mut paths = g.paths_to(3, v).unwrap();
            let tableaux = enumerate_standard_tableaux(v);
            assert_eq!(paths.len(), tableaux.len());
            // Each tableau's content string shows up as exactly one path.
            for t in &tableaux {
                let s = content_string(t);
                let expected: Vec<RatFn> = s
                    .entries()
                    .iter()
                    .map(|&(k, z)| {
                        parse_ratfn(&format!("v{}*q^{}", k, 2 * z), 2).unwrap()
                    })
                    .collect();
                let found = paths.iter().position(|p| {
                    p.len() == expected.len()
                        && p.iter().zip(&expected).all(|(a, b)| ratfn_eq(a, b))
                });
                assert!(found.is_some(), "missing path for {}", t);
                paths.remove(found.unwrap());
            }
            assert!(paths.is_empty());
        }
    }

    #[test]
    fn dot_export_is_deterministic() {
        let a = young_graph_power(2, 2).export_dot();
        let b = young_graph_power(2, 2).export_dot();
        assert_eq!(a, b);
        assert!(a.contains("label=\"v1\""));
        assert!(a.contains("label=\"[[1],[1]]\""));
        let small = young_graph_power(1, 1).export_dot();
        assert_eq!(small.matches(" -> ").count(), 1);
    }
}
