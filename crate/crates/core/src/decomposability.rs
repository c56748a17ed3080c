//! Vertex decomposability, shedding vertices, shellability, unmixedness and
//! the dual componentwise-linearity test for sequential Cohen–Macaulayness.
//!
//! The searches work on facet lists over the complex's own ambient indices.
//! Deletion and link keep those indices, so subproblems reached along
//! different paths share memo entries exactly when their facet lists agree.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use crate::bits::{self, bit, ones};
use crate::complex::SimplicialComplex;
use crate::error::{invalid, Error, Result};
use crate::graph::Graph;
use crate::homology::FieldSpec;
use crate::resolution::{self, MonomialIdeal};

pub const DEFAULT_SHELLING_BOUND: usize = 12;
pub const DEFAULT_SCM_BOUND: usize = 14;

/// One step from a complex to a subcomplex in the search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Step {
    Delete(usize),
    Link(usize),
}

/// Decomposition tree: every internal node sheds a vertex, its children are
/// the deletion and the link, and every leaf is a simplex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VdTree {
    Simplex { face: u64 },
    Shed { vertex: usize, deletion: Box<VdTree>, link: Box<VdTree> },
}

/// A non-simplex subcomplex where no vertex satisfies condition (β), with
/// the path of deletions and links that reaches it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Refutation {
    pub path: Vec<Step>,
    pub stuck: Vec<u64>,
    /// One reason per vertex of the stuck complex.
    pub reasons: Vec<(usize, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VdCertificate {
    Decomposable(VdTree),
    Refuted(Refutation),
}

impl VdCertificate {
    pub fn is_decomposable(&self) -> bool {
        matches!(self, VdCertificate::Decomposable(_))
    }

    /// Line-oriented trace. A tree prints `shed <v>` per internal node with
    /// the deletion subtree first and the link subtree second, each two
    /// spaces deeper; leaves print `simplex {..}`. A refutation prints the
    /// path, the stuck facets and one reason per vertex.
    pub fn to_trace(&self, complex: &SimplicialComplex) -> String {
        let mut out = String::new();
        match self {
            VdCertificate::Decomposable(tree) => write_tree(tree, complex, 0, &mut out),
            VdCertificate::Refuted(r) => {
                out.push_str("not vertex decomposable\n");
                let path: Vec<String> = r
                    .path
                    .iter()
                    .map(|s| match s {
                        Step::Delete(v) => format!("del {}", complex.vertices()[*v]),
                        Step::Link(v) => format!("lk {}", complex.vertices()[*v]),
                    })
                    .collect();
                if path.is_empty() {
                    out.push_str("stuck at the input complex\n");
                } else {
                    writeln!(out, "stuck after: {}", path.join(", ")).unwrap();
                }
                for &f in &r.stuck {
                    writeln!(out, "facet {{{}}}", complex.names_of(f).join(",")).unwrap();
                }
                for (v, why) in &r.reasons {
                    writeln!(out, "vertex {}: {why}", complex.vertices()[*v]).unwrap();
                }
            }
        }
        out
    }

    /// Re-checks a decomposition tree against `complex`: every node's vertex
    /// satisfies (β) and its children decompose the deletion and link, every
    /// leaf is a simplex. Refutations are re-checked for the stuck complex.
    pub fn replay(&self, complex: &SimplicialComplex) -> Result<()> {
        let facets = canonical(complex.facet_bits().to_vec());
        match self {
            VdCertificate::Decomposable(tree) => replay_tree(tree, &facets),
            VdCertificate::Refuted(r) => {
                let mut cur = facets;
                for step in &r.path {
                    cur = match *step {
                        Step::Delete(v) => deletion(&cur, v),
                        Step::Link(v) => link(&cur, v),
                    };
                }
                if cur != canonical(r.stuck.clone()) {
                    return Err(Error::Consistency("refutation path does not reach the stuck complex".into()));
                }
                if cur.len() <= 1 {
                    return Err(Error::Consistency("stuck complex is a simplex".into()));
                }
                if let Some(v) = ones(support(&cur)).find(|&v| beta_witness(&cur, v).is_none()) {
                    return Err(Error::Consistency(format!("vertex {v} of the stuck complex satisfies (β)")));
                }
                Ok(())
            }
        }
    }
}

fn write_tree(tree: &VdTree, c: &SimplicialComplex, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match tree {
        VdTree::Simplex { face } => writeln!(out, "{pad}simplex {{{}}}", c.names_of(*face).join(",")).unwrap(),
        VdTree::Shed { vertex, deletion, link } => {
            writeln!(out, "{pad}shed {}", c.vertices()[*vertex]).unwrap();
            write_tree(deletion, c, depth + 1, out);
            write_tree(link, c, depth + 1, out);
        }
    }
}

fn replay_tree(tree: &VdTree, facets: &[u64]) -> Result<()> {
    match tree {
        VdTree::Simplex { face } => {
            if facets == [*face] {
                Ok(())
            } else {
                Err(Error::Consistency(format!("leaf {face:#x} does not match a simplex")))
            }
        }
        VdTree::Shed { vertex, deletion: d, link: l } => {
            if support(facets) & bit(*vertex) == 0 {
                return Err(Error::Consistency(format!("shed vertex {vertex} is not a vertex")));
            }
            if let Some(f) = beta_witness(facets, *vertex) {
                return Err(Error::Consistency(format!("vertex {vertex} violates (β) at face {f:#x}")));
            }
            replay_tree(d, &deletion(facets, *vertex))?;
            replay_tree(l, &link(facets, *vertex))
        }
    }
}

fn canonical(mut facets: Vec<u64>) -> Vec<u64> {
    facets = bits::maximal_only(facets);
    facets.sort_unstable();
    facets
}

fn support(facets: &[u64]) -> u64 {
    facets.iter().fold(0, |a, f| a | f)
}

fn deletion(facets: &[u64], x: usize) -> Vec<u64> {
    canonical(facets.iter().map(|f| f & !bit(x)).collect())
}

fn link(facets: &[u64], x: usize) -> Vec<u64> {
    canonical(
        facets
            .iter()
            .filter(|f| *f & bit(x) != 0)
            .map(|f| f & !bit(x))
            .collect(),
    )
}

/// A facet of the link that is also a facet of the deletion, if any.
fn beta_witness(facets: &[u64], x: usize) -> Option<u64> {
    let x = bit(x);
    facets
        .iter()
        .filter(|f| *f & x != 0)
        .map(|f| f & !x)
        .find(|g| !facets.iter().any(|h| h & x == 0 && bits::is_subset(*g, *h)))
}

/// Vertices of the support, by descending degree in the 1-skeleton and then
/// by index.
fn trial_order(facets: &[u64]) -> Vec<usize> {
    let mut vs: Vec<(usize, usize)> = ones(support(facets))
        .map(|v| {
            let nbrs = facets.iter().filter(|f| *f & bit(v) != 0).fold(0, |a, f| a | f) & !bit(v);
            (v, nbrs.count_ones() as usize)
        })
        .collect();
    vs.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
    vs.into_iter().map(|(v, _)| v).collect()
}

#[derive(Default)]
struct Search {
    memo: HashMap<Vec<u64>, bool>,
}

impl Search {
    fn vd(&mut self, facets: &[u64]) -> bool {
        if facets.len() <= 1 {
            return true;
        }
        if let Some(&known) = self.memo.get(facets) {
            return known;
        }
        let answer = trial_order(facets).into_iter().any(|x| self.sheds(facets, x));
        self.memo.insert(facets.to_vec(), answer);
        answer
    }

    fn sheds(&mut self, facets: &[u64], x: usize) -> bool {
        beta_witness(facets, x).is_none() && self.vd(&deletion(facets, x)) && self.vd(&link(facets, x))
    }

    fn tree(&mut self, facets: &[u64]) -> VdTree {
        if facets.len() <= 1 {
            return VdTree::Simplex { face: facets.first().copied().unwrap_or(0) };
        }
        let x = trial_order(facets)
            .into_iter()
            .find(|&x| self.sheds(facets, x))
            .expect("tree is only built for decomposable complexes");
        VdTree::Shed {
            vertex: x,
            deletion: Box::new(self.tree(&deletion(facets, x))),
            link: Box::new(self.tree(&link(facets, x))),
        }
    }

    fn refute(&mut self, facets: Vec<u64>) -> Refutation {
        let mut path = Vec::new();
        let mut cur = facets;
        'descend: loop {
            for x in trial_order(&cur) {
                if beta_witness(&cur, x).is_some() {
                    continue;
                }
                let d = deletion(&cur, x);
                if !self.vd(&d) {
                    path.push(Step::Delete(x));
                    cur = d;
                    continue 'descend;
                }
                let l = link(&cur, x);
                debug_assert!(!self.vd(&l));
                path.push(Step::Link(x));
                cur = l;
                continue 'descend;
            }
            break;
        }
        let reasons = ones(support(&cur))
            .map(|x| {
                let g = beta_witness(&cur, x).expect("stuck complex has no (β) vertex");
                (x, format!("link facet {} is a facet of the deletion", show(g)))
            })
            .collect();
        Refutation { path, stuck: cur, reasons }
    }
}

fn show(face: u64) -> String {
    let parts: Vec<String> = ones(face).map(|v| v.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

fn require_nonvoid(delta: &SimplicialComplex) -> Result<Vec<u64>> {
    if delta.is_void() {
        return Err(invalid("the void complex has no decomposition"));
    }
    Ok(canonical(delta.facet_bits().to_vec()))
}

/// Exact vertex decomposability with a certificate either way.
pub fn is_vertex_decomposable(delta: &SimplicialComplex) -> Result<VdCertificate> {
    let facets = require_nonvoid(delta)?;
    let mut search = Search::default();
    if search.vd(&facets) {
        Ok(VdCertificate::Decomposable(search.tree(&facets)))
    } else {
        Ok(VdCertificate::Refuted(search.refute(facets)))
    }
}

/// Vertices satisfying both (α) and (β), ascending.
pub fn shedding_vertices(delta: &SimplicialComplex) -> Result<Vec<usize>> {
    let facets = require_nonvoid(delta)?;
    let mut search = Search::default();
    Ok(ones(support(&facets)).filter(|&x| search.sheds(&facets, x)).collect())
}

/// Vertices satisfying (β) alone, ascending.
pub fn weak_shedding_vertices(delta: &SimplicialComplex) -> Result<Vec<usize>> {
    let facets = require_nonvoid(delta)?;
    Ok(ones(support(&facets)).filter(|&x| beta_witness(&facets, x).is_none()).collect())
}

/// Whether no facet of `lk x` is a facet of `Δ ∖ x`.
pub fn satisfies_beta(delta: &SimplicialComplex, x: usize) -> bool {
    beta_witness(delta.facet_bits(), x).is_none()
}

/// Searches for a shelling order with the default facet bound.
pub fn is_shellable(delta: &SimplicialComplex) -> Result<Option<Vec<usize>>> {
    is_shellable_bounded(delta, DEFAULT_SHELLING_BOUND)
}

/// A shelling order as indices into [`SimplicialComplex::facet_bits`], or
/// `None` when none exists. Every order is a permutation of the facets such
/// that each later facet `F_j` and each earlier `F_i` admit an earlier `F_k`
/// with `F_j ∖ F_k = {x}` and `x ∉ F_i`.
pub fn is_shellable_bounded(delta: &SimplicialComplex, max_facets: usize) -> Result<Option<Vec<usize>>> {
    let facets = delta.facet_bits();
    if facets.is_empty() {
        return Err(invalid("the void complex has no facets to order"));
    }
    if facets.len() > max_facets || facets.len() > 30 {
        return Err(Error::ResourceLimit(format!(
            "{} facets exceed the shelling search bound of {max_facets}",
            facets.len()
        )));
    }
    let mut failed = HashSet::new();
    let mut order = Vec::new();
    Ok(shell(facets, 0, &mut order, &mut failed).then_some(order))
}

fn shell(facets: &[u64], used: u32, order: &mut Vec<usize>, failed: &mut HashSet<u32>) -> bool {
    if order.len() == facets.len() {
        return true;
    }
    if failed.contains(&used) {
        return false;
    }
    for j in 0..facets.len() {
        if used & (1 << j) != 0 || !fits(facets, used, j) {
            continue;
        }
        order.push(j);
        if shell(facets, used | (1 << j), order, failed) {
            return true;
        }
        order.pop();
    }
    failed.insert(used);
    false
}

fn fits(facets: &[u64], used: u32, j: usize) -> bool {
    let f = facets[j];
    let placed = || ones(used as u64).map(|k| facets[k]);
    let singles = placed()
        .map(|g| f & !g)
        .filter(|d| d.count_ones() == 1)
        .fold(0, |a, d| a | d);
    placed().all(|g| (f & !g) & singles != 0)
}

/// Whether every maximal independent set has the same size.
pub fn is_unmixed(g: &Graph) -> bool {
    let sizes: HashSet<usize> = g.maximal_independent_sets().iter().map(|s| s.len()).collect();
    sizes.len() <= 1
}

pub fn is_scm_via_dual(delta: &SimplicialComplex, field: FieldSpec) -> Result<bool> {
    is_scm_via_dual_bounded(delta, field, DEFAULT_SCM_BOUND)
}

/// Sequential Cohen–Macaulayness through the dual: `I_{Δ^∨}` must be
/// componentwise linear, tested as linearity of the squarefree parts
/// `I_[e]` for each `e` from the least to the largest generator degree.
pub fn is_scm_via_dual_bounded(delta: &SimplicialComplex, field: FieldSpec, max_vertices: usize) -> Result<bool> {
    if delta.is_void() {
        return Err(invalid("the void complex has no Alexander dual ideal"));
    }
    if delta.n() > max_vertices {
        return Err(Error::ResourceLimit(format!(
            "{} vertices exceed the sequentially Cohen-Macaulay bound of {max_vertices}",
            delta.n()
        )));
    }
    let dual = MonomialIdeal::dual_of_complex(delta);
    let Some((lo, hi)) = dual.degree_range() else { return Ok(true) };
    for e in lo..=hi {
        let part = dual.squarefree_component(e);
        if !resolution::has_linear_resolution_bounded(&part, field, max_vertices)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The graph form of vertex decomposability: no edges, or a vertex `x`
/// with `G ∖ x` and `G ∖ N[x]` decomposable such that every independent set
/// of `G ∖ N[x]` extends by some neighbour of `x`.
pub fn graph_is_vertex_decomposable(g: &Graph) -> bool {
    graph_vd(g, g.all().0, &mut HashMap::new())
}

/// The shedding vertices of a graph in the graph form.
pub fn graph_shedding_vertices(g: &Graph) -> Vec<usize> {
    let mut memo = HashMap::new();
    let all = g.all().0;
    ones(all).filter(|&x| graph_sheds(g, all, x, &mut memo)).collect()
}

fn graph_vd(g: &Graph, mask: u64, memo: &mut HashMap<u64, bool>) -> bool {
    if ones(mask).all(|v| g.adjacency()[v] & mask == 0) {
        return true;
    }
    if let Some(&known) = memo.get(&mask) {
        return known;
    }
    let answer = ones(mask).any(|x| graph_sheds(g, mask, x, memo));
    memo.insert(mask, answer);
    answer
}

fn graph_sheds(g: &Graph, mask: u64, x: usize, memo: &mut HashMap<u64, bool>) -> bool {
    let adj = g.adjacency();
    let nbrs = adj[x] & mask;
    let rest = mask & !nbrs & !bit(x);
    let extends = g
        .maximal_independent_within(rest)
        .into_iter()
        .all(|s| ones(nbrs).any(|y| adj[y] & s == 0));
    extends && graph_vd(g, mask & !bit(x), memo) && graph_vd(g, rest, memo)
}
