//! Clique partitions, clique cluster-partitions and the whiskered graphs
//! built from them.
//!
//! A [`PartitionSpec`] splits the base vertex set into cliques `W_1..W_d`
//! and groups the cliques into clusters `U_1..U_s`. Every clique `W_i` gets a
//! whisker graph `A_i` whose vertices are joined to all of `W_i`; every
//! cluster made of two or more cliques gets a whisker graph `B_j` whose
//! vertices are joined to all of `U_j`. Clusters are stored as lists of
//! clique indices, so each clique automatically lies inside exactly one
//! cluster.
//!
//! The residual decompositions mirror what happens to a whiskered graph
//! when a base vertex is deleted or its closed neighbourhood is removed: the
//! result is again a whiskered graph on the smaller base, plus whisker
//! graphs that lost every base neighbour and now float free.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use crate::bits::{self, bit};
use crate::decomposability;
use crate::error::{invalid, Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    /// One pendant vertex per clique, every cluster a single clique.
    Pi,
    /// One vertex per clique and per multi-clique cluster.
    Cc,
    /// Edgeless whisker sets of any size.
    Mc,
    /// Vertex decomposable whisker graphs.
    Md,
}

impl Kind {
    /// The most specific kind a spec satisfies, ignoring the vertex
    /// decomposability requirement of [`Kind::Md`].
    pub fn infer(spec: &PartitionSpec) -> Kind {
        let whiskers = || spec.whisker_graphs();
        if whiskers().any(|w| w.edge_count() > 0) {
            return Kind::Md;
        }
        if whiskers().any(|w| w.n() != 1) {
            return Kind::Mc;
        }
        if spec.clusters.iter().any(|c| c.cliques.len() > 1) {
            Kind::Cc
        } else {
            Kind::Pi
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Pi => "pi",
            Kind::Cc => "cc",
            Kind::Mc => "mc",
            Kind::Md => "md",
        })
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Kind> {
        match s.to_ascii_lowercase().as_str() {
            "pi" => Ok(Kind::Pi),
            "cc" => Ok(Kind::Cc),
            "mc" => Ok(Kind::Mc),
            "md" => Ok(Kind::Md),
            other => Err(invalid(format!("unknown kind {other:?}; expected pi, cc, mc or md"))),
        }
    }
}

/// A cluster `U_j`: the indices of its cliques and, when it holds two or
/// more cliques, its whisker graph `B_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cluster {
    pub cliques: Vec<usize>,
    pub whisker: Option<Graph>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionSpec {
    /// `W_1..W_d` as subsets of the base graph's vertex order.
    pub cliques: Vec<VertexSet>,
    /// `A_i` for each clique, index-aligned with `cliques`.
    pub whisker_a: Vec<Graph>,
    pub clusters: Vec<Cluster>,
}

/// A violated partition-spec condition, with witnesses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    EmptyClique { clique: usize },
    NotAClique { clique: usize, u: String, v: String },
    UncoveredVertex { vertex: String },
    OverlappingCliques { vertex: String, first: usize, second: usize },
    CliqueOutsideBase { clique: usize },
    BadCliqueIndex { cluster: usize, index: usize },
    CliqueNotClustered { clique: usize },
    CliqueInTwoClusters { clique: usize },
    EmptyCluster { cluster: usize },
    /// Condition (2): two cliques of one cluster are joined by an edge.
    ClusterEdge { cluster: usize, u: String, v: String },
    WhiskerCount { expected: usize, found: usize },
    EmptyWhisker { owner: String },
    MissingClusterWhisker { cluster: usize },
    UnexpectedClusterWhisker { cluster: usize },
    NameCollision { name: String },
    KindMismatch { kind: Kind, reason: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Violation::*;
        match self {
            EmptyClique { clique } => write!(f, "clique W{} is empty", clique + 1),
            NotAClique { clique, u, v } => {
                write!(f, "W{} is not a clique: {u} and {v} are not adjacent", clique + 1)
            }
            UncoveredVertex { vertex } => write!(f, "vertex {vertex} lies in no clique"),
            OverlappingCliques { vertex, first, second } => {
                write!(f, "vertex {vertex} lies in both W{} and W{}", first + 1, second + 1)
            }
            CliqueOutsideBase { clique } => write!(f, "W{} uses vertices outside the base graph", clique + 1),
            BadCliqueIndex { cluster, index } => {
                write!(f, "cluster U{} refers to missing clique {}", cluster + 1, index + 1)
            }
            CliqueNotClustered { clique } => write!(f, "W{} lies in no cluster", clique + 1),
            CliqueInTwoClusters { clique } => write!(f, "W{} lies in two clusters", clique + 1),
            EmptyCluster { cluster } => write!(f, "cluster U{} is empty", cluster + 1),
            ClusterEdge { cluster, u, v } => write!(
                f,
                "condition (2) fails in U{}: edge {u}-{v} joins two of its cliques",
                cluster + 1
            ),
            WhiskerCount { expected, found } => {
                write!(f, "expected {expected} clique whisker graphs, found {found}")
            }
            EmptyWhisker { owner } => write!(f, "whisker graph of {owner} is empty"),
            MissingClusterWhisker { cluster } => {
                write!(f, "multi-clique cluster U{} has no whisker graph", cluster + 1)
            }
            UnexpectedClusterWhisker { cluster } => {
                write!(f, "single-clique cluster U{} must not carry a whisker graph", cluster + 1)
            }
            NameCollision { name } => write!(f, "vertex name {name} is used twice"),
            KindMismatch { kind, reason } => write!(f, "not a valid {kind} spec: {reason}"),
        }
    }
}

/// Edgeless whisker graph with vertices `<prefix>.1 .. <prefix>.<size>`.
pub fn whisker_graph(prefix: &str, size: usize, edges: &[(usize, usize)]) -> Result<Graph> {
    let mut g = Graph::new();
    for k in 1..=size {
        g.add_vertex(&format!("{prefix}.{k}"))?;
    }
    for &(u, v) in edges {
        if u == 0 || v == 0 || u > size || v > size || u == v {
            return Err(invalid(format!("whisker edge ({u},{v}) is not a pair of distinct local indices in 1..={size}")));
        }
        g.add_edge(u - 1, v - 1);
    }
    Ok(g)
}

impl PartitionSpec {
    /// Spec with the given cliques and clusters and single-vertex whiskers
    /// named `a<i>.1` and `b<j>.1`.
    pub fn new(cliques: Vec<VertexSet>, clusters: Vec<Vec<usize>>) -> Result<PartitionSpec> {
        let a_sizes = vec![1; cliques.len()];
        let b_sizes: Vec<usize> = clusters.iter().map(|c| usize::from(c.len() > 1)).collect();
        Self::with_sizes(cliques, clusters, &a_sizes, &b_sizes)
    }

    /// Spec with edgeless whiskers of the given sizes; `b_sizes` is aligned
    /// with `clusters` and ignored for single-clique clusters.
    pub fn with_sizes(
        cliques: Vec<VertexSet>,
        clusters: Vec<Vec<usize>>,
        a_sizes: &[usize],
        b_sizes: &[usize],
    ) -> Result<PartitionSpec> {
        if a_sizes.len() != cliques.len() || b_sizes.len() != clusters.len() {
            return Err(invalid("one whisker size per clique and per cluster is required"));
        }
        let whisker_a = a_sizes
            .iter()
            .enumerate()
            .map(|(i, &s)| whisker_graph(&format!("a{}", i + 1), s, &[]))
            .collect::<Result<_>>()?;
        let clusters = clusters
            .into_iter()
            .zip(b_sizes)
            .enumerate()
            .map(|(j, (cliques, &s))| {
                let whisker = if cliques.len() > 1 {
                    Some(whisker_graph(&format!("b{}", j + 1), s, &[])?)
                } else {
                    None
                };
                Ok(Cluster { cliques, whisker })
            })
            .collect::<Result<_>>()?;
        Ok(PartitionSpec { cliques, whisker_a, clusters })
    }

    /// Singleton cliques, each its own cluster: the full whiskering `G^W`.
    pub fn trivial(g: &Graph) -> PartitionSpec {
        let cliques: Vec<VertexSet> = (0..g.n()).map(|i| VertexSet(bit(i))).collect();
        let clusters = (0..g.n()).map(|i| vec![i]).collect();
        Self::new(cliques, clusters).expect("trivial spec is well formed")
    }

    /// `(d, r)`: number of cliques and number of multi-clique clusters.
    pub fn type_dr(&self) -> (usize, usize) {
        (
            self.cliques.len(),
            self.clusters.iter().filter(|c| c.cliques.len() > 1).count(),
        )
    }

    pub fn whisker_graphs(&self) -> impl Iterator<Item = &Graph> {
        self.whisker_a
            .iter()
            .chain(self.clusters.iter().filter_map(|c| c.whisker.as_ref()))
    }

    /// Index of the cluster holding clique `i`.
    pub fn cluster_of(&self, clique: usize) -> Option<usize> {
        self.clusters.iter().position(|c| c.cliques.contains(&clique))
    }

    /// Union of the cliques of cluster `j`.
    pub fn cluster_vertices(&self, j: usize) -> VertexSet {
        self.clusters[j]
            .cliques
            .iter()
            .fold(VertexSet::EMPTY, |s, &i| s.union(self.cliques[i]))
    }

    /// Every structural violation of this spec against base graph `g`; an
    /// empty list means the spec is a valid clique cluster-partition.
    pub fn validate(&self, g: &Graph) -> Vec<Violation> {
        let mut out = Vec::new();
        let name = |i: usize| g.name(i).to_string();
        let mut owner: Vec<Option<usize>> = vec![None; g.n()];
        for (ci, &w) in self.cliques.iter().enumerate() {
            if w.is_empty() {
                out.push(Violation::EmptyClique { clique: ci });
            }
            if !w.is_subset(g.all()) {
                out.push(Violation::CliqueOutsideBase { clique: ci });
                continue;
            }
            for v in w.iter() {
                match owner[v] {
                    Some(first) => out.push(Violation::OverlappingCliques { vertex: name(v), first, second: ci }),
                    None => owner[v] = Some(ci),
                }
            }
            if let Some((u, v)) = non_edge(g, w) {
                out.push(Violation::NotAClique { clique: ci, u: name(u), v: name(v) });
            }
        }
        for (v, o) in owner.iter().enumerate() {
            if o.is_none() {
                out.push(Violation::UncoveredVertex { vertex: name(v) });
            }
        }

        let mut clustered = vec![0usize; self.cliques.len()];
        for (j, c) in self.clusters.iter().enumerate() {
            if c.cliques.is_empty() {
                out.push(Violation::EmptyCluster { cluster: j });
            }
            for &i in &c.cliques {
                if i >= self.cliques.len() {
                    out.push(Violation::BadCliqueIndex { cluster: j, index: i });
                } else {
                    clustered[i] += 1;
                }
            }
            let members: Vec<usize> = c.cliques.iter().copied().filter(|&i| i < self.cliques.len()).collect();
            'pairs: for (k, &i) in members.iter().enumerate() {
                for &l in &members[k + 1..] {
                    let (wi, wl) = (self.cliques[i], self.cliques[l]);
                    for u in wi.iter() {
                        if let Some(v) = (g.neighbors(u).intersection(wl)).iter().next() {
                            out.push(Violation::ClusterEdge { cluster: j, u: name(u), v: name(v) });
                            break 'pairs;
                        }
                    }
                }
            }
            match (&c.whisker, c.cliques.len() > 1) {
                (None, true) => out.push(Violation::MissingClusterWhisker { cluster: j }),
                (Some(_), false) => out.push(Violation::UnexpectedClusterWhisker { cluster: j }),
                (Some(b), true) if b.n() == 0 => out.push(Violation::EmptyWhisker { owner: format!("U{}", j + 1) }),
                _ => {}
            }
        }
        for (i, &count) in clustered.iter().enumerate() {
            match count {
                0 => out.push(Violation::CliqueNotClustered { clique: i }),
                1 => {}
                _ => out.push(Violation::CliqueInTwoClusters { clique: i }),
            }
        }

        if self.whisker_a.len() != self.cliques.len() {
            out.push(Violation::WhiskerCount { expected: self.cliques.len(), found: self.whisker_a.len() });
        }
        for (i, a) in self.whisker_a.iter().enumerate() {
            if a.n() == 0 {
                out.push(Violation::EmptyWhisker { owner: format!("W{}", i + 1) });
            }
        }
        let mut names: Vec<&str> = g.names().iter().map(String::as_str).collect();
        for w in self.whisker_graphs() {
            names.extend(w.names().iter().map(String::as_str));
        }
        names.sort_unstable();
        for pair in names.windows(2) {
            if pair[0] == pair[1] {
                out.push(Violation::NameCollision { name: pair[0].to_string() });
            }
        }
        out.dedup();
        out
    }

    /// Violations of the extra constraints a particular kind imposes.
    pub fn kind_violations(&self, kind: Kind) -> Vec<Violation> {
        let mut out = Vec::new();
        let mut fail = |reason: String| out.push(Violation::KindMismatch { kind, reason });
        if matches!(kind, Kind::Pi | Kind::Cc | Kind::Mc) {
            if let Some(w) = self.whisker_graphs().find(|w| w.edge_count() > 0) {
                fail(format!("whisker graph on {} has edges", w.names().join(",")));
            }
        }
        if matches!(kind, Kind::Pi | Kind::Cc) {
            if let Some(w) = self.whisker_graphs().find(|w| w.n() != 1) {
                fail(format!("whisker set {{{}}} is not a single vertex", w.names().join(",")));
            }
        }
        if kind == Kind::Pi {
            if let Some(j) = self.clusters.iter().position(|c| c.cliques.len() > 1) {
                fail(format!("cluster U{} holds more than one clique", j + 1));
            }
        }
        if kind == Kind::Md {
            for w in self.whisker_graphs() {
                if !decomposability::graph_is_vertex_decomposable(w) {
                    fail(format!("whisker graph on {} is not vertex decomposable", w.names().join(",")));
                }
            }
        }
        out
    }

    /// The text form read by [`PartitionSpec::parse`].
    pub fn to_text(&self, g: &Graph) -> String {
        let mut out = String::new();
        for (i, w) in self.cliques.iter().enumerate() {
            writeln!(out, "clique W{}: {}", i + 1, g.names_of(*w).join(" ")).unwrap();
        }
        for (j, c) in self.clusters.iter().enumerate() {
            let members: Vec<String> = c.cliques.iter().map(|i| format!("W{}", i + 1)).collect();
            writeln!(out, "cluster U{}: {}", j + 1, members.join(" ")).unwrap();
        }
        for (i, a) in self.whisker_a.iter().enumerate() {
            writeln!(out, "whiskerA W{}: size={} edges={}", i + 1, a.n(), edge_list(a)).unwrap();
        }
        for (j, c) in self.clusters.iter().enumerate() {
            if let Some(b) = &c.whisker {
                writeln!(out, "whiskerB U{}: size={} edges={}", j + 1, b.n(), edge_list(b)).unwrap();
            }
        }
        out
    }

    /// Parses the partition text format against base graph `g`.
    ///
    /// ```text
    /// clique W1: v1 v2
    /// cluster U1: W1 W3
    /// whiskerA W1: size=2 edges=()
    /// whiskerB U1: size=2 edges=(1,2)
    /// ```
    ///
    /// With no `clique` lines every vertex is a singleton clique named after
    /// the vertex. Cliques missing from every `cluster` line become singleton
    /// clusters after the declared ones. Missing `whiskerA`/`whiskerB` lines
    /// mean a single whisker vertex. Whisker vertices are named
    /// `a<i>.<k>` and `b<j>.<k>` by clique and cluster position.
    pub fn parse(text: &str, g: &Graph) -> Result<PartitionSpec> {
        let mut clique_names: Vec<String> = Vec::new();
        let mut cliques: Vec<VertexSet> = Vec::new();
        let mut cluster_names: Vec<String> = Vec::new();
        let mut clusters: Vec<Vec<String>> = Vec::new();
        let mut a_lines: Vec<(usize, String, usize, Vec<(usize, usize)>)> = Vec::new();
        let mut b_lines: Vec<(usize, String, usize, Vec<(usize, usize)>)> = Vec::new();

        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let lineno = lineno + 1;
            let perr = |message: String| Error::Parse { line: lineno, message };
            let (head, body) = line
                .split_once(':')
                .ok_or_else(|| perr(format!("expected `<directive> <name>: ...`, got {line:?}")))?;
            let mut head_tokens = head.split_whitespace();
            let directive = head_tokens.next().unwrap_or("");
            let label = head_tokens
                .next()
                .ok_or_else(|| perr("missing label before ':'".into()))?
                .to_string();
            if head_tokens.next().is_some() {
                return Err(perr("too many tokens before ':'".into()));
            }
            match directive {
                "clique" => {
                    if clique_names.contains(&label) {
                        return Err(perr(format!("clique {label} declared twice")));
                    }
                    let members: Vec<&str> = body.split_whitespace().collect();
                    let set = g.set_of(&members).map_err(|e| perr(e.to_string()))?;
                    clique_names.push(label);
                    cliques.push(set);
                }
                "cluster" => {
                    if cluster_names.contains(&label) {
                        return Err(perr(format!("cluster {label} declared twice")));
                    }
                    cluster_names.push(label);
                    clusters.push(body.split_whitespace().map(str::to_string).collect());
                }
                "whiskerA" | "whiskerB" => {
                    let (size, edges) = parse_whisker_body(body).map_err(perr)?;
                    let entry = (lineno, label, size, edges);
                    if directive == "whiskerA" {
                        a_lines.push(entry);
                    } else {
                        b_lines.push(entry);
                    }
                }
                other => return Err(perr(format!("unknown directive {other:?}"))),
            }
        }

        if clique_names.is_empty() {
            clique_names = g.names().to_vec();
            cliques = (0..g.n()).map(|i| VertexSet(bit(i))).collect();
        }
        let clique_index = |name: &str, line: usize| -> Result<usize> {
            clique_names
                .iter()
                .position(|c| c == name)
                .ok_or_else(|| Error::Parse { line, message: format!("unknown clique {name}") })
        };

        let mut cluster_lists: Vec<Vec<usize>> = Vec::new();
        for members in &clusters {
            let idx = members
                .iter()
                .map(|m| clique_index(m, 0))
                .collect::<Result<Vec<_>>>()?;
            cluster_lists.push(idx);
        }
        for i in 0..cliques.len() {
            if !cluster_lists.iter().any(|c| c.contains(&i)) {
                cluster_lists.push(vec![i]);
            }
        }

        let mut whisker_a: Vec<Graph> = (0..cliques.len())
            .map(|i| whisker_graph(&format!("a{}", i + 1), 1, &[]))
            .collect::<Result<_>>()?;
        for (line, label, size, edges) in &a_lines {
            let i = clique_index(label, *line)?;
            whisker_a[i] = whisker_graph(&format!("a{}", i + 1), *size, edges)
                .map_err(|e| Error::Parse { line: *line, message: e.to_string() })?;
        }
        let mut cluster_whiskers: Vec<Option<Graph>> = cluster_lists
            .iter()
            .enumerate()
            .map(|(j, c)| (c.len() > 1).then(|| whisker_graph(&format!("b{}", j + 1), 1, &[])).transpose())
            .collect::<Result<_>>()?;
        for (line, label, size, edges) in &b_lines {
            let j = cluster_names
                .iter()
                .position(|c| c == label)
                .ok_or_else(|| Error::Parse { line: *line, message: format!("unknown cluster {label}") })?;
            cluster_whiskers[j] = Some(
                whisker_graph(&format!("b{}", j + 1), *size, edges)
                    .map_err(|e| Error::Parse { line: *line, message: e.to_string() })?,
            );
        }
        let clusters = cluster_lists
            .into_iter()
            .zip(cluster_whiskers)
            .map(|(cliques, whisker)| Cluster { cliques, whisker })
            .collect();
        Ok(PartitionSpec { cliques, whisker_a, clusters })
    }
}

fn non_edge(g: &Graph, w: VertexSet) -> Option<(usize, usize)> {
    for u in w.iter() {
        let missing = w.without(u).difference(g.neighbors(u));
        if let Some(v) = missing.iter().next() {
            return Some((u.min(v), u.max(v)));
        }
    }
    None
}

fn edge_list(g: &Graph) -> String {
    if g.edge_count() == 0 {
        return "()".into();
    }
    g.edges().iter().map(|(u, v)| format!("({},{})", u + 1, v + 1)).collect()
}

fn parse_whisker_body(body: &str) -> std::result::Result<(usize, Vec<(usize, usize)>), String> {
    let body = body.trim();
    let rest = body
        .strip_prefix("size=")
        .ok_or_else(|| format!("expected `size=<n> edges=(...)`, got {body:?}"))?;
    let (size_str, rest) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
    let size: usize = size_str.parse().map_err(|_| format!("bad size {size_str:?}"))?;
    let rest = rest.trim();
    let mut edges = Vec::new();
    if !rest.is_empty() {
        let list = rest
            .strip_prefix("edges=")
            .ok_or_else(|| format!("expected `edges=(...)`, got {rest:?}"))?;
        let compact: String = list.chars().filter(|c| !c.is_whitespace()).collect();
        for group in compact.split(')') {
            let group = group.trim_start_matches(',');
            if group.is_empty() {
                continue;
            }
            let inner = group
                .strip_prefix('(')
                .ok_or_else(|| format!("malformed edge list {list:?}"))?;
            if inner.is_empty() {
                continue;
            }
            let (u, v) = inner
                .split_once(',')
                .ok_or_else(|| format!("edge {inner:?} needs two indices"))?;
            let u: usize = u.parse().map_err(|_| format!("bad index {u:?}"))?;
            let v: usize = v.parse().map_err(|_| format!("bad index {v:?}"))?;
            edges.push((u, v));
        }
    }
    Ok((size, edges))
}

/// A whiskered graph together with the data it was built from.
///
/// Base vertices come first in `graph`'s vertex order, so base index `i` is
/// graph index `i`; the whisker vertices follow clique by clique, then
/// cluster by cluster.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WhiskeredGraph {
    pub graph: Graph,
    pub base: Graph,
    pub spec: PartitionSpec,
    pub kind: Kind,
    /// All whisker vertices, as a subset of `graph`.
    pub added: VertexSet,
}

/// Outcome of deleting a base vertex or its closed neighbourhood.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub residual: WhiskeredGraph,
    /// Whisker graphs left without base neighbours, in spec order.
    pub remainders: Vec<Graph>,
    /// `(d', r')` of the residual spec.
    pub type_dr: (usize, usize),
}

impl Decomposition {
    /// Residual graph and remainders as one graph.
    pub fn union(&self) -> Result<Graph> {
        self.remainders
            .iter()
            .try_fold(self.residual.graph.clone(), |acc, r| acc.disjoint_union(r))
    }
}

/// Validates `spec` and builds `G^kind`.
pub fn build_whiskered(g: &Graph, spec: &PartitionSpec, kind: Kind) -> Result<WhiskeredGraph> {
    let mut violations = spec.validate(g);
    if violations.is_empty() {
        violations = spec.kind_violations(kind);
    }
    if !violations.is_empty() {
        return Err(Error::Rejected(violations.iter().map(ToString::to_string).collect()));
    }
    Ok(assemble(g, spec, kind))
}

fn assemble(g: &Graph, spec: &PartitionSpec, kind: Kind) -> WhiskeredGraph {
    let mut graph = g.clone();
    let base_n = g.n();
    let attach = |graph: &mut Graph, w: &Graph, targets: VertexSet| {
        let offset = graph.n();
        for name in w.names() {
            graph.add_vertex(name).expect("names validated unique");
        }
        for (u, v) in w.edges() {
            graph.add_edge(offset + u, offset + v);
        }
        for k in 0..w.n() {
            for t in targets.iter() {
                graph.add_edge(offset + k, t);
            }
        }
    };
    for (i, a) in spec.whisker_a.iter().enumerate() {
        attach(&mut graph, a, spec.cliques[i]);
    }
    for (j, c) in spec.clusters.iter().enumerate() {
        if let Some(b) = &c.whisker {
            attach(&mut graph, b, spec.cluster_vertices(j));
        }
    }
    let added = VertexSet(bits::full(graph.n()) & !bits::full(base_n));
    WhiskeredGraph { graph, base: g.clone(), spec: spec.clone(), kind, added }
}

impl WhiskeredGraph {
    pub fn type_dr(&self) -> (usize, usize) {
        self.spec.type_dr()
    }

    pub fn base_vertices(&self) -> VertexSet {
        self.base.all()
    }

    fn base_vertex(&self, v: &str) -> Result<usize> {
        self.base
            .index_of(v)
            .ok_or_else(|| invalid(format!("{v} is not a base vertex")))
    }

    /// `G^md ∖ v` as a whiskered graph on `G ∖ v` plus free whisker graphs.
    pub fn decompose_delete(&self, v: &str) -> Result<Decomposition> {
        let bv = self.base_vertex(v)?;
        self.residual(VertexSet(bit(bv)), None, &self.graph.delete_vertices(VertexSet(bit(bv)))?)
    }

    /// `G^md ∖ N[v]` as a whiskered graph on `G ∖ N_G[v]` plus free whisker
    /// graphs.
    pub fn decompose_link(&self, v: &str) -> Result<Decomposition> {
        let bv = self.base_vertex(v)?;
        let removed = self.base.closed_neighborhood(bv);
        let own = self
            .spec
            .cliques
            .iter()
            .position(|w| w.contains(bv))
            .expect("validated spec covers every base vertex");
        let direct = self.graph.delete_closed_neighborhood(bv)?;
        self.residual(removed, Some(own), &direct)
    }

    /// Shared case analysis. `removed` is the set of base vertices that go;
    /// `link_clique` is the clique of the vertex whose closed neighbourhood
    /// is removed (its own whiskers and its cluster's whiskers go with it).
    fn residual(&self, removed: VertexSet, link_clique: Option<usize>, direct: &Graph) -> Result<Decomposition> {
        let spec = &self.spec;
        let keep = self.base.all().difference(removed);
        let new_base = self.base.delete_vertices(removed)?;
        let link_cluster = link_clique.and_then(|i| spec.cluster_of(i));

        let mut remainders: Vec<Graph> = Vec::new();
        let mut new_index: Vec<Option<usize>> = vec![None; spec.cliques.len()];
        let mut cliques = Vec::new();
        let mut whisker_a: Vec<Graph> = Vec::new();
        for (i, w) in spec.cliques.iter().enumerate() {
            let rest = w.intersection(keep);
            if rest.is_empty() {
                // the linked vertex's own whiskers are inside N[v]
                if link_clique != Some(i) {
                    remainders.push(spec.whisker_a[i].clone());
                }
            } else {
                new_index[i] = Some(cliques.len());
                cliques.push(VertexSet(bits::compress(rest.0, keep.0)));
                whisker_a.push(spec.whisker_a[i].clone());
            }
        }

        let mut clusters: Vec<Cluster> = Vec::new();
        let mut cluster_remainders: Vec<Graph> = Vec::new();
        for (j, c) in spec.clusters.iter().enumerate() {
            let survivors: Vec<usize> = c.cliques.iter().filter_map(|&i| new_index[i]).collect();
            if link_cluster == Some(j) {
                // B_j is adjacent to the linked vertex, so it is gone; the
                // other cliques of U_j are untouched and stand alone
                for s in survivors {
                    clusters.push(Cluster { cliques: vec![s], whisker: None });
                }
                continue;
            }
            match (survivors.len(), &c.whisker) {
                (0, Some(b)) => cluster_remainders.push(b.clone()),
                (0, None) => {}
                (1, Some(b)) => {
                    // B_j now sees exactly one clique, like that clique's A
                    let s = survivors[0];
                    whisker_a[s] = whisker_a[s].disjoint_union(b)?;
                    clusters.push(Cluster { cliques: survivors, whisker: None });
                }
                (_, whisker) => clusters.push(Cluster { cliques: survivors, whisker: whisker.clone() }),
            }
        }
        remainders.extend(cluster_remainders);

        let new_spec = PartitionSpec { cliques, whisker_a, clusters };
        // surviving whisker graphs are unions of the old ones, so an md
        // input stays md and the inferred kind is exact
        let kind = Kind::infer(&new_spec);
        let violations = new_spec.validate(&new_base);
        if !violations.is_empty() {
            return Err(Error::Consistency(format!(
                "residual spec is invalid: {}",
                violations.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
            )));
        }
        let residual = assemble(&new_base, &new_spec, kind);
        let type_dr = new_spec.type_dr();
        let decomposition = Decomposition { residual, remainders, type_dr };
        if !decomposition.union()?.same_structure(direct) {
            return Err(Error::Consistency(
                "residual whiskered graph and remainders do not reassemble the deleted graph".into(),
            ));
        }
        Ok(decomposition)
    }

    /// Hasse-free drawing of the whiskered graph with base and whisker
    /// vertices styled apart.
    pub fn to_dot(&self, title: &str) -> String {
        let mut out = format!("graph \"{title}\" {{\n");
        for (i, name) in self.graph.names().iter().enumerate() {
            let shape = if self.added.contains(i) { "circle" } else { "doublecircle" };
            writeln!(out, "  \"{name}\" [shape={shape}];").unwrap();
        }
        for (u, v) in self.graph.edges() {
            writeln!(out, "  \"{}\" -- \"{}\";", self.graph.name(u), self.graph.name(v)).unwrap();
        }
        out.push_str("}\n");
        out
    }

    /// Indices (in `graph`) of the whisker vertices attached to clique `i`.
    pub fn clique_whisker_vertices(&self, i: usize) -> VertexSet {
        let names = self.spec.whisker_a[i].names();
        VertexSet::from_indices(names.iter().filter_map(|n| self.graph.index_of(n)))
    }

    /// Indices (in `graph`) of the whisker vertices attached to cluster `j`.
    pub fn cluster_whisker_vertices(&self, j: usize) -> VertexSet {
        match &self.spec.clusters[j].whisker {
            Some(b) => VertexSet::from_indices(b.names().iter().filter_map(|n| self.graph.index_of(n))),
            None => VertexSet::EMPTY,
        }
    }
}

/// Vertex set of the all-whisker face: one vertex from each clique whisker
/// and each cluster whisker.
pub fn all_whisker_face(w: &WhiskeredGraph) -> VertexSet {
    let mut s = VertexSet::EMPTY;
    for i in 0..w.spec.cliques.len() {
        if let Some(x) = w.clique_whisker_vertices(i).iter().next() {
            s = s.with(x);
        }
    }
    for j in 0..w.spec.clusters.len() {
        if let Some(x) = w.cluster_whisker_vertices(j).iter().next() {
            s = s.with(x);
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l6() -> Graph {
        let names: Vec<String> = (1..=6).map(|i| format!("v{i}")).collect();
        Graph::named_path(&names)
    }

    fn set(g: &Graph, names: &[&str]) -> VertexSet {
        g.set_of(names).unwrap()
    }

    fn l6_clusters() -> WhiskeredGraph {
        let g = l6();
        let cliques: Vec<VertexSet> = (0..6).map(|i| VertexSet(bit(i))).collect();
        let spec = PartitionSpec::new(cliques, vec![vec![0, 2, 4], vec![1, 3, 5]]).unwrap();
        build_whiskered(&g, &spec, Kind::Cc).unwrap()
    }

    fn c8cc() -> WhiskeredGraph {
        let g = Graph::cycle(8);
        let cliques = (0..4).map(|i| VertexSet(0b11 << (2 * i))).collect();
        let spec = PartitionSpec::new(cliques, vec![vec![0, 2], vec![1, 3]]).unwrap();
        build_whiskered(&g, &spec, Kind::Cc).unwrap()
    }

    fn nbr_names(w: &WhiskeredGraph, v: &str) -> Vec<String> {
        let g = &w.graph;
        let mut n: Vec<String> = g.names_of(g.neighbors(g.vertex(v).unwrap())).iter().map(|s| s.to_string()).collect();
        n.sort();
        n
    }

    #[test]
    fn example_partition_is_valid() {
        let g = l6();
        let cliques = vec![set(&g, &["v3", "v4"]), set(&g, &["v1", "v2"]), set(&g, &["v5", "v6"])];
        let spec = PartitionSpec::new(cliques, vec![vec![1, 2], vec![0]]).unwrap();
        assert!(spec.validate(&g).is_empty());
        assert_eq!(spec.type_dr(), (3, 1));
    }

    #[test]
    fn non_clique_is_reported() {
        let g = l6();
        let cliques = vec![
            set(&g, &["v1", "v3"]),
            set(&g, &["v2"]),
            set(&g, &["v4"]),
            set(&g, &["v5"]),
            set(&g, &["v6"]),
        ];
        let spec = PartitionSpec::new(cliques, (0..5).map(|i| vec![i]).collect()).unwrap();
        let v = spec.validate(&g);
        assert_eq!(v, vec![Violation::NotAClique { clique: 0, u: "v1".into(), v: "v3".into() }]);
    }

    #[test]
    fn cluster_edge_is_reported() {
        let g = l6();
        let cliques = vec![set(&g, &["v1", "v2"]), set(&g, &["v3", "v4"]), set(&g, &["v5", "v6"])];
        let spec = PartitionSpec::new(cliques, vec![vec![0, 1], vec![2]]).unwrap();
        assert_eq!(
            spec.validate(&g),
            vec![Violation::ClusterEdge { cluster: 0, u: "v2".into(), v: "v3".into() }]
        );
        assert!(matches!(build_whiskered(&g, &spec, Kind::Cc), Err(Error::Rejected(_))));
    }

    #[test]
    fn partition_gaps_and_collisions() {
        let g = Graph::from_edges(&[("x", "a1.1")]).unwrap();
        let spec = PartitionSpec::new(vec![VertexSet(0b01)], vec![vec![0]]).unwrap();
        let v = spec.validate(&g);
        assert!(v.contains(&Violation::UncoveredVertex { vertex: "a1.1".into() }));
        assert!(v.contains(&Violation::NameCollision { name: "a1.1".into() }));
    }

    #[test]
    fn l6_cluster_build_incidences() {
        let w = l6_clusters();
        assert_eq!(w.graph.n(), 14);
        assert_eq!(nbr_names(&w, "b1.1"), ["v1", "v3", "v5"]);
        assert_eq!(nbr_names(&w, "b2.1"), ["v2", "v4", "v6"]);
        assert_eq!(nbr_names(&w, "a3.1"), ["v3"]);
        assert_eq!(w.type_dr(), (6, 2));
    }

    #[test]
    fn l6_multi_build_incidences() {
        let g = l6();
        let cliques = vec![set(&g, &["v1", "v2"]), set(&g, &["v5", "v6"]), set(&g, &["v3", "v4"])];
        let spec = PartitionSpec::with_sizes(cliques, vec![vec![0, 1], vec![2]], &[2, 2, 1], &[2, 0]).unwrap();
        let w = build_whiskered(&g, &spec, Kind::Mc).unwrap();
        assert_eq!(nbr_names(&w, "b1.1"), ["v1", "v2", "v5", "v6"]);
        assert_eq!(nbr_names(&w, "b1.2"), ["v1", "v2", "v5", "v6"]);
        assert_eq!(nbr_names(&w, "a1.1"), ["v1", "v2"]);
        assert_eq!(nbr_names(&w, "a3.1"), ["v3", "v4"]);
        assert_eq!(w.graph.n(), 6 + 5 + 2);
        assert!(matches!(build_whiskered(&g, &spec, Kind::Cc), Err(Error::Rejected(_))));
    }

    #[test]
    fn k1_pi_is_k2() {
        let g = Graph::edgeless(1);
        let w = build_whiskered(&g, &PartitionSpec::trivial(&g), Kind::Pi).unwrap();
        assert!(w.graph.same_structure(&Graph::from_edges(&[("1", "a1.1")]).unwrap()));
    }

    #[test]
    fn c8_delete_and_link_types() {
        let w = c8cc();
        let del = w.decompose_delete("8").unwrap();
        assert_eq!(del.type_dr, (4, 2));
        assert_eq!(del.residual.base, Graph::path(7));
        assert!(del.remainders.is_empty());
        let lk = w.decompose_link("8").unwrap();
        assert_eq!(lk.type_dr, (3, 1));
        assert_eq!(lk.residual.base.names(), &["2", "3", "4", "5", "6"]);
        assert!(lk.remainders.is_empty());
        // b1 keeps the cluster {2} ∪ {5,6}
        assert_eq!(nbr_names(&lk.residual, "b1.1"), ["2", "5", "6"]);
    }

    #[test]
    fn p2_cases() {
        let g = Graph::named_path(&["v1", "v2"]);
        let w = build_whiskered(&g, &PartitionSpec::trivial(&g), Kind::Cc).unwrap();
        let del = w.decompose_delete("v2").unwrap();
        assert_eq!(del.residual.base.names(), &["v1"]);
        assert_eq!(del.residual.kind, Kind::Pi);
        assert_eq!(del.remainders.len(), 1);
        assert_eq!(del.remainders[0].names(), &["a2.1"]);
        let lk = w.decompose_link("v1").unwrap();
        assert_eq!(lk.residual.base.n(), 0);
        assert_eq!(lk.remainders.len(), 1);
        assert_eq!(lk.remainders[0].names(), &["a2.1"]);
    }

    #[test]
    fn k1_link_is_empty() {
        let g = Graph::edgeless(1);
        let w = build_whiskered(&g, &PartitionSpec::trivial(&g), Kind::Pi).unwrap();
        let lk = w.decompose_link("1").unwrap();
        assert_eq!(lk.residual.graph.n(), 0);
        assert!(lk.remainders.is_empty());
    }

    #[test]
    fn l6_cluster_build_delete_v1() {
        let w = l6_clusters();
        let del = w.decompose_delete("v1").unwrap();
        assert_eq!(del.residual.base.n(), 5);
        assert_eq!(nbr_names(&del.residual, "b1.1"), ["v3", "v5"]);
        assert_eq!(del.remainders.len(), 1);
        assert_eq!(del.type_dr, (5, 2));
    }

    #[test]
    fn cluster_whisker_merges_into_last_clique() {
        // U = {1} ∪ {3} on the path 1-2-3; deleting 1 leaves b beside clique {3}
        let g = Graph::path(3);
        let cliques = (0..3).map(|i| VertexSet(bit(i))).collect();
        let spec = PartitionSpec::new(cliques, vec![vec![0, 2], vec![1]]).unwrap();
        let w = build_whiskered(&g, &spec, Kind::Cc).unwrap();
        let del = w.decompose_delete("1").unwrap();
        assert_eq!(del.type_dr, (2, 0));
        assert_eq!(del.residual.kind, Kind::Mc);
        assert_eq!(del.residual.spec.whisker_a[1].names(), &["a3.1", "b1.1"]);
    }

    #[test]
    fn text_round_trip() {
        let g = l6();
        let text = "clique W1: v1 v2\nclique W2: v5 v6\nclique W3: v3 v4\ncluster U1: W1 W2\n\
                    whiskerA W1: size=2 edges=()\nwhiskerA W2: size=2 edges=(1,2)\nwhiskerB U1: size=2 edges=()\n";
        let spec = PartitionSpec::parse(text, &g).unwrap();
        assert_eq!(spec.clusters.len(), 2);
        assert_eq!(spec.whisker_a[1].edge_count(), 1);
        assert_eq!(PartitionSpec::parse(&spec.to_text(&g), &g).unwrap(), spec);
        assert!(PartitionSpec::parse("clique W1 v1", &g).is_err());
        assert!(PartitionSpec::parse("clique W1: v9", &g).is_err());
        assert!(PartitionSpec::parse("whiskerA W1: size=x", &g).is_err());
    }

    #[test]
    fn default_partition_is_trivial() {
        let g = Graph::path(3);
        let spec = PartitionSpec::parse("", &g).unwrap();
        assert_eq!(spec, PartitionSpec::trivial(&g));
    }
}
