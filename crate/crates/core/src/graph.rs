//! Finite simple graphs over named vertices.
//!
//! Adjacency is one `u64` bitset per vertex, indexed by position in the
//! vertex list, so a graph holds at most [`MAX_VERTICES`] vertices. The
//! vertex order is part of a graph's identity: derived graphs inherit it and
//! every enumeration below is lexicographic with respect to it.

use std::cmp::Ordering;
use std::collections::VecDeque;
use std::fmt::{self, Write as _};

use crate::bits::{self, bit, full, lex_cmp, ones, MAX_VERTICES};
use crate::error::{invalid, Error, Result};

/// A subset of some ambient ordered vertex list, stored as a bitset.
///
/// Equality is syntactic; ordering is lexicographic on the ascending index
/// sequence.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        VertexSet(indices.into_iter().fold(0, |m, i| m | bit(i)))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 & bit(i) != 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        ones(self.0)
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        bits::is_subset(self.0, other.0)
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn with(self, i: usize) -> VertexSet {
        VertexSet(self.0 | bit(i))
    }

    pub fn without(self, i: usize) -> VertexSet {
        VertexSet(self.0 & !bit(i))
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        lex_cmp(self.0, other.0)
    }
}

/// Derived-graph selector for [`Graph::subgraph_ops`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubgraphOp {
    DeleteVertices(VertexSet),
    Induce(VertexSet),
    Complement,
    DeleteClosedNeighborhood(usize),
}

/// Outcome of [`Graph::is_chordal`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Chordality {
    /// A perfect elimination ordering: each vertex's later neighbours form
    /// a clique.
    Chordal { elimination_order: Vec<usize> },
    /// An induced cycle of length at least four, in cyclic order.
    NotChordal { chordless_cycle: Vec<usize> },
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal { .. })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Graph {
    names: Vec<String>,
    adj: Vec<u64>,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a graph from an explicit vertex list and edges between them.
    pub fn from_parts<S: AsRef<str>>(vertices: &[S], edges: &[(S, S)]) -> Result<Self> {
        let mut g = Graph::new();
        for v in vertices {
            g.add_vertex(v.as_ref())?;
        }
        for (u, v) in edges {
            g.add_edge_by_name(u.as_ref(), v.as_ref())?;
        }
        Ok(g)
    }

    /// Builds a graph whose vertices are declared by first appearance in the
    /// edge list.
    pub fn from_edges<S: AsRef<str>>(edges: &[(S, S)]) -> Result<Self> {
        let mut g = Graph::new();
        for (u, v) in edges {
            g.ensure_vertex(u.as_ref())?;
            g.ensure_vertex(v.as_ref())?;
            g.add_edge_by_name(u.as_ref(), v.as_ref())?;
        }
        Ok(g)
    }

    /// Path `1 - 2 - ... - n` with vertices named by their position.
    pub fn path(n: usize) -> Self {
        Self::named_path(&(1..=n).map(|i| i.to_string()).collect::<Vec<_>>())
    }

    pub fn named_path<S: AsRef<str>>(names: &[S]) -> Self {
        let mut g = Graph::new();
        for name in names {
            g.add_vertex(name.as_ref()).expect("path vertices are unique");
        }
        for i in 1..names.len() {
            g.add_edge(i - 1, i);
        }
        g
    }

    /// Cycle `1 - 2 - ... - n - 1`, `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        let mut g = Self::path(n);
        if n >= 3 {
            g.add_edge(n - 1, 0);
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::edgeless(n);
        for i in 0..n {
            for j in i + 1..n {
                g.add_edge(i, j);
            }
        }
        g
    }

    pub fn edgeless(n: usize) -> Self {
        let mut g = Graph::new();
        for i in 1..=n {
            g.add_vertex(&i.to_string()).expect("fresh names");
        }
        g
    }

    pub fn add_vertex(&mut self, name: &str) -> Result<usize> {
        if name.is_empty() || name.chars().any(char::is_whitespace) {
            return Err(invalid(format!("vertex name {name:?} must be a nonempty token")));
        }
        if self.index_of(name).is_some() {
            return Err(invalid(format!("duplicate vertex {name}")));
        }
        if self.names.len() >= MAX_VERTICES {
            return Err(Error::ResourceLimit(format!(
                "graphs are limited to {MAX_VERTICES} vertices"
            )));
        }
        self.names.push(name.to_string());
        self.adj.push(0);
        Ok(self.names.len() - 1)
    }

    fn ensure_vertex(&mut self, name: &str) -> Result<usize> {
        match self.index_of(name) {
            Some(i) => Ok(i),
            None => self.add_vertex(name),
        }
    }

    /// Adds the edge `{u, v}`; panics on a loop or out-of-range index.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "loops are not allowed");
        assert!(u < self.n() && v < self.n(), "edge endpoint out of range");
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
    }

    pub fn add_edge_by_name(&mut self, u: &str, v: &str) -> Result<()> {
        let (iu, iv) = (self.vertex(u)?, self.vertex(v)?);
        if iu == iv {
            return Err(invalid(format!("loop at {u}")));
        }
        self.add_edge(iu, iv);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn vertex(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| invalid(format!("unknown vertex {name}")))
    }

    pub fn all(&self) -> VertexSet {
        VertexSet(full(self.n()))
    }

    pub fn set_of<S: AsRef<str>>(&self, names: &[S]) -> Result<VertexSet> {
        names
            .iter()
            .try_fold(VertexSet::EMPTY, |s, n| Ok(s.with(self.vertex(n.as_ref())?)))
    }

    pub fn names_of(&self, set: VertexSet) -> Vec<&str> {
        set.iter().map(|i| self.name(i)).collect()
    }

    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v] | bit(v))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    /// Edges as index pairs `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            for v in ones(self.adj[u] & !full(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    fn check_set(&self, set: VertexSet) -> Result<()> {
        if set.is_subset(self.all()) {
            Ok(())
        } else {
            Err(invalid(format!(
                "vertex set {:#x} is not inside a {}-vertex graph",
                set.0,
                self.n()
            )))
        }
    }

    pub fn subgraph_ops(&self, op: SubgraphOp) -> Result<Graph> {
        match op {
            SubgraphOp::DeleteVertices(s) => {
                self.check_set(s)?;
                Ok(self.induced_unchecked(self.all().difference(s)))
            }
            SubgraphOp::Induce(s) => {
                self.check_set(s)?;
                Ok(self.induced_unchecked(s))
            }
            SubgraphOp::Complement => {
                let all = full(self.n());
                Ok(Graph {
                    names: self.names.clone(),
                    adj: (0..self.n()).map(|v| !self.adj[v] & all & !bit(v)).collect(),
                })
            }
            SubgraphOp::DeleteClosedNeighborhood(v) => {
                if v >= self.n() {
                    return Err(invalid(format!("vertex index {v} out of range")));
                }
                Ok(self.induced_unchecked(self.all().difference(self.closed_neighborhood(v))))
            }
        }
    }

    pub fn delete_vertices(&self, s: VertexSet) -> Result<Graph> {
        self.subgraph_ops(SubgraphOp::DeleteVertices(s))
    }

    pub fn induced(&self, s: VertexSet) -> Result<Graph> {
        self.subgraph_ops(SubgraphOp::Induce(s))
    }

    pub fn complement(&self) -> Graph {
        self.subgraph_ops(SubgraphOp::Complement)
            .expect("complement is total")
    }

    pub fn delete_closed_neighborhood(&self, v: usize) -> Result<Graph> {
        self.subgraph_ops(SubgraphOp::DeleteClosedNeighborhood(v))
    }

    fn induced_unchecked(&self, keep: VertexSet) -> Graph {
        let keep = keep.0;
        Graph {
            names: ones(keep).map(|i| self.names[i].clone()).collect(),
            adj: ones(keep)
                .map(|i| bits::compress(self.adj[i] & keep, keep))
                .collect(),
        }
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v] & s.0 == 0)
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| bits::is_subset(s.0 & !bit(v), self.adj[v]))
    }

    /// All inclusion-maximal independent sets in lexicographic order.
    ///
    /// Bron–Kerbosch with pivoting on the complement graph. The graph with no
    /// vertices, like any edgeless graph, has the single answer `V(G)`.
    pub fn maximal_independent_sets(&self) -> Vec<VertexSet> {
        let all = full(self.n());
        let comp: Vec<u64> = (0..self.n()).map(|v| !self.adj[v] & all & !bit(v)).collect();
        let mut out = Vec::new();
        bron_kerbosch(&comp, 0, all, 0, &mut out);
        bits::sort_lex(&mut out);
        out.into_iter().map(VertexSet).collect()
    }

    /// Maximal independent sets of the subgraph induced on `mask`, as masks
    /// over this graph's vertex order (unsorted).
    pub(crate) fn maximal_independent_within(&self, mask: u64) -> Vec<u64> {
        let comp: Vec<u64> = (0..self.n()).map(|v| !self.adj[v] & mask & !bit(v)).collect();
        let mut out = Vec::new();
        bron_kerbosch(&comp, 0, mask, 0, &mut out);
        out
    }

    pub fn minimal_vertex_covers(&self) -> Vec<VertexSet> {
        let all = self.all();
        let mut covers: Vec<u64> = self
            .maximal_independent_sets()
            .into_iter()
            .map(|s| all.difference(s).0)
            .collect();
        bits::sort_lex(&mut covers);
        covers.into_iter().map(VertexSet).collect()
    }

    /// Number of independent sets, the empty set included.
    pub fn independent_set_count(&self) -> u128 {
        let mut memo = std::collections::HashMap::new();
        count_independent(&self.adj, full(self.n()), &mut memo)
    }

    /// Vertex sets of the connected components, ordered by least vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for start in 0..self.n() {
            if seen & bit(start) != 0 {
                continue;
            }
            let mut comp = bit(start);
            let mut frontier = bit(start);
            while frontier != 0 {
                let mut next = 0;
                for v in ones(frontier) {
                    next |= self.adj[v];
                }
                frontier = next & !comp;
                comp |= next;
            }
            seen |= comp;
            out.push(VertexSet(comp));
        }
        out
    }

    /// Chordality with a certificate either way.
    ///
    /// Maximum cardinality search proposes an elimination order; if it is
    /// not perfect the graph is not chordal and a chordless cycle is
    /// extracted by a shortest-path search around some vertex.
    pub fn is_chordal(&self) -> Chordality {
        let order = self.maximum_cardinality_order();
        if self.is_perfect_elimination_order(&order) {
            return Chordality::Chordal { elimination_order: order };
        }
        let cycle = self
            .find_chordless_cycle()
            .expect("a graph without a perfect elimination order has a chordless cycle");
        Chordality::NotChordal { chordless_cycle: cycle }
    }

    fn maximum_cardinality_order(&self) -> Vec<usize> {
        let n = self.n();
        let mut weight = vec![0usize; n];
        let mut numbered = 0u64;
        let mut visit = Vec::with_capacity(n);
        for _ in 0..n {
            let v = (0..n)
                .filter(|v| numbered & bit(*v) == 0)
                .max_by(|a, b| weight[*a].cmp(&weight[*b]).then(b.cmp(a)))
                .expect("an unnumbered vertex remains");
            numbered |= bit(v);
            visit.push(v);
            for u in ones(self.adj[v] & !numbered) {
                weight[u] += 1;
            }
        }
        visit.reverse();
        visit
    }

    /// Checks that every vertex's neighbours later in `order` form a clique.
    pub fn is_perfect_elimination_order(&self, order: &[usize]) -> bool {
        if order.len() != self.n() {
            return false;
        }
        let mut later = full(self.n());
        for &v in order {
            later &= !bit(v);
            if !self.is_clique(VertexSet(self.adj[v] & later)) {
                return false;
            }
        }
        true
    }

    fn find_chordless_cycle(&self) -> Option<Vec<usize>> {
        for v in 0..self.n() {
            let nbrs: Vec<usize> = ones(self.adj[v]).collect();
            for (k, &u) in nbrs.iter().enumerate() {
                for &w in &nbrs[k + 1..] {
                    if self.is_adjacent(u, w) {
                        continue;
                    }
                    let blocked = (self.adj[v] | bit(v)) & !bit(u) & !bit(w);
                    if let Some(path) = self.shortest_path_avoiding(u, w, blocked) {
                        let mut cycle = vec![v];
                        cycle.extend(path);
                        return Some(cycle);
                    }
                }
            }
        }
        None
    }

    fn shortest_path_avoiding(&self, from: usize, to: usize, blocked: u64) -> Option<Vec<usize>> {
        let mut prev = vec![usize::MAX; self.n()];
        let mut seen = bit(from) | blocked;
        let mut queue = VecDeque::from([from]);
        while let Some(x) = queue.pop_front() {
            if x == to {
                let mut path = vec![to];
                let mut cur = to;
                while cur != from {
                    cur = prev[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for y in ones(self.adj[x] & !seen) {
                seen |= bit(y);
                prev[y] = x;
                queue.push_back(y);
            }
        }
        None
    }

    /// Vertex-disjoint union; names must not collide.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.clone();
        let offset = g.n();
        for name in &other.names {
            g.add_vertex(name)?;
        }
        for (u, v) in other.edges() {
            g.add_edge(u + offset, v + offset);
        }
        Ok(g)
    }

    /// Equality up to vertex order: same names and the same edges by name.
    pub fn same_structure(&self, other: &Graph) -> bool {
        if self.n() != other.n() || self.edge_count() != other.edge_count() {
            return false;
        }
        let map: Option<Vec<usize>> = self.names.iter().map(|n| other.index_of(n)).collect();
        let Some(map) = map else { return false };
        self.edges()
            .into_iter()
            .all(|(u, v)| other.is_adjacent(map[u], map[v]))
    }

    /// Line-oriented text form: every vertex declared, then every edge.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for name in &self.names {
            writeln!(out, "vertex {name}").unwrap();
        }
        for (u, v) in self.edges() {
            writeln!(out, "edge {} {}", self.names[u], self.names[v]).unwrap();
        }
        out
    }

    /// Parses the text form. Vertices may be introduced implicitly by edges;
    /// isolated vertices need an explicit `vertex` line. `#` starts a
    /// comment.
    pub fn parse(text: &str) -> Result<Graph> {
        let mut g = Graph::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| Error::Parse { line: lineno + 1, message };
            let tokens: Vec<&str> = line.split_whitespace().collect();
            match tokens.as_slice() {
                ["vertex", name] => {
                    g.ensure_vertex(name).map_err(|e| err(e.to_string()))?;
                }
                ["edge", u, v] => {
                    if u == v {
                        return Err(err(format!("loop at {u}")));
                    }
                    g.ensure_vertex(u).map_err(|e| err(e.to_string()))?;
                    g.ensure_vertex(v).map_err(|e| err(e.to_string()))?;
                    g.add_edge_by_name(u, v).map_err(|e| err(e.to_string()))?;
                }
                _ => return Err(err(format!("expected `vertex <name>` or `edge <u> <v>`, got {line:?}"))),
            }
        }
        Ok(g)
    }

    pub fn to_dot(&self, title: &str) -> String {
        let mut out = format!("graph \"{title}\" {{\n");
        for name in &self.names {
            writeln!(out, "  \"{name}\";").unwrap();
        }
        for (u, v) in self.edges() {
            writeln!(out, "  \"{}\" -- \"{}\";", self.names[u], self.names[v]).unwrap();
        }
        out.push_str("}\n");
        out
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn bron_kerbosch(adj: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
    if p == 0 {
        if x == 0 {
            out.push(r);
        }
        return;
    }
    let pivot = ones(p | x)
        .max_by_key(|&u| (adj[u] & p).count_ones())
        .expect("p is nonempty");
    for v in ones(p & !adj[pivot]) {
        bron_kerbosch(adj, r | bit(v), p & adj[v], x & adj[v], out);
        p &= !bit(v);
        x |= bit(v);
    }
}

fn count_independent(
    adj: &[u64],
    live: u64,
    memo: &mut std::collections::HashMap<u64, u128>,
) -> u128 {
    if live == 0 {
        return 1;
    }
    if let Some(&c) = memo.get(&live) {
        return c;
    }
    let v = ones(live)
        .max_by_key(|&u| (adj[u] & live).count_ones())
        .expect("live is nonempty");
    let result = if adj[v] & live == 0 {
        // every remaining vertex is isolated
        1u128 << live.count_ones()
    } else {
        count_independent(adj, live & !bit(v), memo)
            + count_independent(adj, live & !bit(v) & !adj[v], memo)
    };
    memo.insert(live, result);
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force_mis(g: &Graph) -> Vec<VertexSet> {
        let n = g.n();
        let indep: Vec<u64> = (0..1u64 << n).filter(|&s| g.is_independent(VertexSet(s))).collect();
        let mut out: Vec<u64> = indep
            .iter()
            .copied()
            .filter(|&s| (0..n).all(|v| s & bit(v) != 0 || !g.is_independent(VertexSet(s | bit(v)))))
            .collect();
        bits::sort_lex(&mut out);
        out.into_iter().map(VertexSet).collect()
    }

    fn set(g: &Graph, names: &[&str]) -> VertexSet {
        g.set_of(names).unwrap()
    }

    #[test]
    fn c6_delete_closed_neighborhood() {
        let c6 = Graph::cycle(6);
        let h = c6.delete_closed_neighborhood(0).unwrap();
        assert_eq!(h.names(), &["3", "4", "5"]);
        assert!(h.same_structure(&Graph::from_edges(&[("3", "4"), ("4", "5")]).unwrap()));
    }

    #[test]
    fn delete_nothing_is_identity() {
        let g = Graph::cycle(5);
        assert_eq!(g.delete_vertices(VertexSet::EMPTY).unwrap(), g);
    }

    #[test]
    fn l6_delete_first_vertex() {
        let names: Vec<String> = (1..=6).map(|i| format!("v{i}")).collect();
        let l6 = Graph::named_path(&names);
        let l5 = l6.delete_vertices(set(&l6, &["v1"])).unwrap();
        assert_eq!(l5, Graph::named_path(&names[1..]));
    }

    #[test]
    fn unknown_vertex_is_rejected() {
        let g = Graph::path(3);
        assert!(matches!(g.vertex("9"), Err(Error::InvalidArgument(_))));
        assert!(g.delete_vertices(VertexSet(0b1000)).is_err());
        assert!(g.delete_closed_neighborhood(7).is_err());
    }

    #[test]
    fn c6_maximal_independent_sets() {
        let c6 = Graph::cycle(6);
        let got = c6.maximal_independent_sets();
        let want = [
            &["1", "3", "5"][..],
            &["1", "4"],
            &["2", "4", "6"],
            &["2", "5"],
            &["3", "6"],
        ];
        let want: Vec<VertexSet> = want.iter().map(|w| set(&c6, w)).collect();
        assert_eq!(got, want);
    }

    #[test]
    fn small_mis_cases() {
        let e3 = Graph::edgeless(3);
        assert_eq!(e3.maximal_independent_sets(), vec![e3.all()]);
        let p3 = Graph::path(3);
        assert_eq!(
            p3.maximal_independent_sets(),
            vec![set(&p3, &["1", "3"]), set(&p3, &["2"])]
        );
        assert_eq!(Graph::new().maximal_independent_sets(), vec![VertexSet::EMPTY]);
    }

    #[test]
    fn vertex_covers() {
        let c6 = Graph::cycle(6);
        let covers = c6.minimal_vertex_covers();
        assert_eq!(covers.len(), 5);
        assert!(covers.contains(&set(&c6, &["2", "4", "6"])));
        assert!(covers.contains(&set(&c6, &["2", "3", "5", "6"])));
        assert_eq!(Graph::edgeless(3).minimal_vertex_covers(), vec![VertexSet::EMPTY]);
        let k2 = Graph::from_edges(&[("u", "v")]).unwrap();
        assert_eq!(k2.minimal_vertex_covers(), vec![set(&k2, &["u"]), set(&k2, &["v"])]);
    }

    #[test]
    fn independent_counts() {
        assert_eq!(Graph::cycle(6).independent_set_count(), 18);
        assert_eq!(Graph::complete(3).independent_set_count(), 4);
        assert_eq!(Graph::path(3).independent_set_count(), 5);
        assert_eq!(Graph::edgeless(64).independent_set_count(), 1u128 << 64);
    }

    #[test]
    fn chordality_certificates() {
        match Graph::cycle(6).is_chordal() {
            Chordality::NotChordal { chordless_cycle } => assert_eq!(chordless_cycle.len(), 6),
            other => panic!("C6 reported chordal: {other:?}"),
        }
        let tree = Graph::from_edges(&[("r", "a"), ("r", "b"), ("a", "c"), ("a", "d")]).unwrap();
        assert!(tree.is_chordal().is_chordal());
        assert!(Graph::complete(5).is_chordal().is_chordal());
    }

    #[test]
    fn clique_checks() {
        let names: Vec<String> = (1..=6).map(|i| format!("v{i}")).collect();
        let l6 = Graph::named_path(&names);
        assert!(l6.is_clique(set(&l6, &["v3", "v4"])));
        assert!(!l6.is_clique(set(&l6, &["v1", "v3"])));
        assert!(l6.is_clique(VertexSet::EMPTY));
        assert!(l6.is_clique(set(&l6, &["v2"])));
    }

    #[test]
    fn text_round_trip_and_errors() {
        let text = "# a triangle plus an isolated vertex\nvertex z\nedge a b\nedge b c # trailing\nedge c a\n";
        let g = Graph::parse(text).unwrap();
        assert_eq!(g.names(), &["z", "a", "b", "c"]);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(Graph::parse(&g.to_text()).unwrap(), g);
        assert!(matches!(Graph::parse("edge a a"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(Graph::parse("vertex\n"), Err(Error::Parse { .. })));
        assert!(matches!(Graph::parse("\nedge a\n"), Err(Error::Parse { line: 2, .. })));
    }

    fn random_graph(n: usize, seed: u64) -> Graph {
        let mut g = Graph::edgeless(n);
        let mut state = seed;
        for u in 0..n {
            for v in u + 1..n {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                if (state >> 33) % 2 == 0 {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    #[test]
    fn mis_matches_brute_force() {
        for seed in 0..60 {
            let g = random_graph((seed % 9) as usize, seed);
            assert_eq!(g.maximal_independent_sets(), brute_force_mis(&g));
        }
    }

    #[test]
    fn subgraph_ops_are_deterministic() {
        let g = random_graph(9, 7);
        let s = VertexSet(0b1_0110_1001);
        let a = g.delete_vertices(s).unwrap();
        let b = g.delete_vertices(s).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.names(), b.names());
    }
}
