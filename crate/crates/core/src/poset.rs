//! The facet poset of `Ind G^π`: facets ordered by `F1 ≤ F2` iff
//! `F1 ∖ W ⊆ F2 ∖ W`, where `W` is the set of all whisker vertices.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::bits::{self, ones};
use crate::error::{invalid, Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::whisker::{Kind, PartitionSpec, WhiskeredGraph};

#[derive(Clone, Debug)]
pub struct FacetPoset {
    /// Facets of `Ind G^π` as vertex sets of the whiskered graph, in
    /// lexicographic order.
    pub facets: Vec<VertexSet>,
    /// `F ∖ W` as a set of base vertices, aligned with `facets`.
    pub parts: Vec<VertexSet>,
    /// Index of the least element `W`.
    pub least: usize,
    /// `up[x]`: the elements covering `x`.
    pub up: Vec<Vec<usize>>,
    /// `down[y]`: the elements covered by `y`.
    pub down: Vec<Vec<usize>>,
    base_names: Vec<String>,
}

/// Interval `[W, F]` statistics from explicit traversal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IntervalStats {
    /// `r = |F ∖ W|`.
    pub rank: usize,
    pub size: usize,
    pub maximal_chains: u128,
}

impl FacetPoset {
    pub fn build(w: &WhiskeredGraph) -> Result<FacetPoset> {
        if w.kind != Kind::Pi {
            return Err(invalid(format!("the facet poset is defined for kind pi, not {}", w.kind)));
        }
        let base_n = w.base.n();
        let facets = w.graph.maximal_independent_sets();
        let parts: Vec<VertexSet> = facets
            .iter()
            .map(|f| VertexSet(f.0 & bits::full(base_n)))
            .collect();

        let mut seen: HashMap<u64, usize> = HashMap::new();
        for (k, p) in parts.iter().enumerate() {
            if let Some(prev) = seen.insert(p.0, k) {
                return Err(Error::Consistency(format!(
                    "antisymmetry fails: facets {prev} and {k} agree off the whisker vertices"
                )));
            }
        }
        let least = facets
            .iter()
            .position(|f| *f == w.added)
            .ok_or_else(|| Error::Consistency("the whisker vertex set is not a facet".into()))?;

        let m = facets.len();
        let mut down = vec![Vec::new(); m];
        let mut up = vec![Vec::new(); m];
        for y in 0..m {
            let below: Vec<usize> = (0..m)
                .filter(|&x| x != y && parts[x].is_subset(parts[y]))
                .collect();
            let maximal = bits::maximal_only(below.iter().map(|&x| parts[x].0).collect());
            for x in below {
                if maximal.contains(&parts[x].0) {
                    down[y].push(x);
                    up[x].push(y);
                }
            }
        }
        Ok(FacetPoset { facets, parts, least, up, down, base_names: w.base.names().to_vec() })
    }

    pub fn len(&self) -> usize {
        self.facets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.parts[x].is_subset(self.parts[y])
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.up[x].is_empty()).collect()
    }

    /// Elements of `[W, F]`.
    pub fn interval(&self, top: usize) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.leq(self.least, x) && self.leq(x, top)).collect()
    }

    /// Walks `[W, F]` for a maximal `F` and counts its maximal chains along
    /// cover relations.
    pub fn interval_stats(&self, top: usize) -> Result<IntervalStats> {
        if top >= self.len() || !self.up[top].is_empty() {
            return Err(invalid(format!("element {top} is not maximal")));
        }
        let mut members = self.interval(top);
        members.sort_by_key(|&x| self.parts[x].len());
        let mut chains: HashMap<usize, u128> = HashMap::new();
        for &y in &members {
            let c = if y == self.least {
                1
            } else {
                self.down[y].iter().filter_map(|x| chains.get(x)).sum()
            };
            chains.insert(y, c);
        }
        Ok(IntervalStats {
            rank: self.parts[top].len(),
            size: members.len(),
            maximal_chains: chains[&top],
        })
    }

    /// Label of an element: its base part, or `W` for the least element.
    pub fn label(&self, x: usize) -> String {
        if x == self.least {
            return "W".into();
        }
        let names: Vec<&str> = self.parts[x].iter().map(|i| self.base_names[i].as_str()).collect();
        format!("W+{{{}}}", names.join(","))
    }

    pub fn to_dot(&self, title: &str) -> String {
        let mut out = format!("digraph \"{title}\" {{\n  rankdir=BT;\n");
        for x in 0..self.len() {
            writeln!(out, "  n{x} [label=\"{}\"];", self.label(x)).unwrap();
        }
        for x in 0..self.len() {
            for &y in &self.up[x] {
                writeln!(out, "  n{x} -> n{y};").unwrap();
            }
        }
        out.push_str("}\n");
        out
    }
}

/// `|F(Ind G^π)|` by inclusion–exclusion over the boolean intervals
/// `[∅, M]` for the maximal independent sets `M` of `G`.
pub fn count_facets_pi(g: &Graph, spec: &PartitionSpec) -> Result<u128> {
    let mut violations = spec.validate(g);
    violations.extend(spec.kind_violations(Kind::Pi));
    if !violations.is_empty() {
        return Err(Error::Rejected(violations.iter().map(ToString::to_string).collect()));
    }
    Ok(union_of_boolean_intervals(&g.maximal_independent_sets().iter().map(|m| m.0).collect::<Vec<_>>()))
}

/// `|∪ [∅, M_k]|` as `Σ_S (-1)^{|S|+1} 2^{|∩S|}`, accumulated by
/// intersection.
pub fn union_of_boolean_intervals(tops: &[u64]) -> u128 {
    let mut coeff: HashMap<u64, i128> = HashMap::new();
    for &m in tops {
        let mut next = coeff.clone();
        for (&s, &c) in &coeff {
            *next.entry(s & m).or_insert(0) -= c;
        }
        *next.entry(m).or_insert(0) += 1;
        next.retain(|_, c| *c != 0);
        coeff = next;
    }
    let total: i128 = coeff.iter().map(|(&s, &c)| c << ones(s).count()).sum();
    total as u128
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::whisker::build_whiskered;

    fn c6_ears() -> (Graph, PartitionSpec) {
        let g = Graph::cycle(6);
        let cliques = (0..3).map(|i| VertexSet(0b11 << (2 * i))).collect();
        let spec = PartitionSpec::new(cliques, vec![vec![0], vec![1], vec![2]]).unwrap();
        (g, spec)
    }

    #[test]
    fn c6_with_ears() {
        let (g, spec) = c6_ears();
        let w = build_whiskered(&g, &spec, Kind::Pi).unwrap();
        let p = FacetPoset::build(&w).unwrap();
        assert_eq!(p.len(), 18);
        assert_eq!(count_facets_pi(&g, &spec).unwrap(), 18);
        let by_part = |names: &[&str]| {
            let s = g.set_of(names).unwrap();
            p.parts.iter().position(|x| *x == s).unwrap()
        };
        let s = p.interval_stats(by_part(&["1", "3", "5"])).unwrap();
        assert_eq!((s.size, s.maximal_chains), (8, 6));
        let s = p.interval_stats(by_part(&["1", "4"])).unwrap();
        assert_eq!((s.size, s.maximal_chains), (4, 2));
        assert!(p.interval_stats(p.least).is_err());
    }

    #[test]
    fn k1_is_a_two_chain() {
        let g = Graph::edgeless(1);
        let w = build_whiskered(&g, &PartitionSpec::trivial(&g), Kind::Pi).unwrap();
        let p = FacetPoset::build(&w).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.maximal_elements().len(), 1);
    }

    #[test]
    fn whiskered_p2_has_two_maxima() {
        let g = Graph::path(2);
        let w = build_whiskered(&g, &PartitionSpec::trivial(&g), Kind::Pi).unwrap();
        let p = FacetPoset::build(&w).unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(p.facets[p.least], w.added);
        assert_eq!(p.maximal_elements().len(), 2);
        assert!(p.to_dot("p2").contains("->"));
    }

    #[test]
    fn wrong_kind_is_rejected() {
        let g = Graph::path(3);
        let spec = PartitionSpec::new((0..3).map(|i| VertexSet(1 << i)).collect(), vec![vec![0, 2], vec![1]]).unwrap();
        let w = build_whiskered(&g, &spec, Kind::Cc).unwrap();
        assert!(FacetPoset::build(&w).is_err());
    }

    #[test]
    fn counts_match_independent_sets() {
        assert_eq!(count_facets_pi(&Graph::edgeless(4), &PartitionSpec::trivial(&Graph::edgeless(4))).unwrap(), 16);
        let p3 = Graph::path(3);
        assert_eq!(count_facets_pi(&p3, &PartitionSpec::trivial(&p3)).unwrap(), 5);
    }
}
