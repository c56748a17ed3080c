//! Seeded random graphs, partition specs and complexes for the property
//! suites. The same seed always yields the same sequence of instances.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bits::{self, bit};
use crate::complex::SimplicialComplex;
use crate::decomposability::graph_is_vertex_decomposable;
use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::whisker::{build_whiskered, whisker_graph, Cluster, Kind, PartitionSpec, WhiskeredGraph};

pub type Rand = ChaCha8Rng;

pub fn rng(seed: u64) -> Rand {
    ChaCha8Rng::seed_from_u64(seed)
}

/// G(n, p) on vertices `v1..vn`.
pub fn random_graph(rng: &mut Rand, n: usize, p: f64) -> Graph {
    let names: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
    let mut g = Graph::new();
    for name in &names {
        g.add_vertex(name).expect("fresh names");
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// A random clique partition: vertices in random order, each joining a
/// random compatible clique or starting a new one.
pub fn random_clique_partition(rng: &mut Rand, g: &Graph) -> Vec<VertexSet> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.shuffle(rng);
    let mut cliques: Vec<VertexSet> = Vec::new();
    for v in order {
        let fits: Vec<usize> = (0..cliques.len())
            .filter(|&c| cliques[c].is_subset(g.neighbors(v)))
            .collect();
        if !fits.is_empty() && rng.gen_bool(0.7) {
            let c = fits[rng.gen_range(0..fits.len())];
            cliques[c] = cliques[c].with(v);
        } else {
            cliques.push(VertexSet(bit(v)));
        }
    }
    cliques.sort();
    cliques
}

/// Random clusters obeying condition (2): a clique joins a cluster only if
/// no edge runs between it and the cluster.
pub fn random_clusters(rng: &mut Rand, g: &Graph, cliques: &[VertexSet], join: f64) -> Vec<Vec<usize>> {
    let mut order: Vec<usize> = (0..cliques.len()).collect();
    order.shuffle(rng);
    let mut clusters: Vec<(Vec<usize>, VertexSet)> = Vec::new();
    for i in order {
        let w = cliques[i];
        let reach = w.iter().fold(VertexSet::EMPTY, |s, v| s.union(g.neighbors(v)));
        let fits: Vec<usize> = (0..clusters.len())
            .filter(|&c| clusters[c].1.intersection(reach).is_empty())
            .collect();
        if !fits.is_empty() && rng.gen_bool(join) {
            let c = fits[rng.gen_range(0..fits.len())];
            clusters[c].0.push(i);
            clusters[c].1 = clusters[c].1.union(w);
        } else {
            clusters.push((vec![i], w));
        }
    }
    let mut out: Vec<Vec<usize>> = clusters
        .into_iter()
        .map(|(mut c, _)| {
            c.sort_unstable();
            c
        })
        .collect();
    out.sort();
    out
}

/// A random graph on `size` vertices that is vertex decomposable.
pub fn random_vd_whisker(rng: &mut Rand, prefix: &str, size: usize) -> Graph {
    loop {
        let mut edges = Vec::new();
        for u in 1..=size {
            for v in u + 1..=size {
                if rng.gen_bool(0.5) {
                    edges.push((u, v));
                }
            }
        }
        let g = whisker_graph(prefix, size, &edges).expect("local indices are in range");
        if graph_is_vertex_decomposable(&g) {
            return g;
        }
    }
}

#[derive(Clone, Debug)]
pub struct Instance {
    pub base: Graph,
    pub spec: PartitionSpec,
    pub kind: Kind,
}

impl Instance {
    pub fn build(&self) -> Result<WhiskeredGraph> {
        build_whiskered(&self.base, &self.spec, self.kind)
    }

    pub fn total_vertices(&self) -> usize {
        self.base.n() + self.spec.whisker_graphs().map(Graph::n).sum::<usize>()
    }
}

/// A random valid `(G, spec)` of the requested kind with
/// `1 ≤ |V(G)| ≤ max_base` and at most `max_total` vertices after whiskering.
pub fn random_instance(rng: &mut Rand, kind: Kind, max_base: usize, max_total: usize) -> Instance {
    loop {
        let n = rng.gen_range(1..=max_base);
        let p = rng.gen_range(0.2..0.7);
        let g = random_graph(rng, n, p);
        let cliques = random_clique_partition(rng, &g);
        let clusters = if kind == Kind::Pi {
            (0..cliques.len()).map(|i| vec![i]).collect()
        } else {
            random_clusters(rng, &g, &cliques, 0.6)
        };
        let multi = clusters.iter().filter(|c| c.len() > 1).count();
        let minimum = n + cliques.len() + multi;
        if minimum > max_total {
            continue;
        }
        let mut budget = max_total - minimum;
        let mut a_sizes = vec![1usize; cliques.len()];
        let mut b_sizes: Vec<usize> = clusters.iter().map(|c| usize::from(c.len() > 1)).collect();
        if matches!(kind, Kind::Mc | Kind::Md) {
            for s in a_sizes.iter_mut().chain(b_sizes.iter_mut().filter(|s| **s > 0)) {
                while budget > 0 && *s < 3 && rng.gen_bool(0.35) {
                    *s += 1;
                    budget -= 1;
                }
            }
        }
        let mut spec = PartitionSpec::with_sizes(cliques, clusters, &a_sizes, &b_sizes)
            .expect("sizes are aligned with cliques and clusters");
        if kind == Kind::Md {
            for (i, a) in spec.whisker_a.iter_mut().enumerate() {
                *a = random_vd_whisker(rng, &format!("a{}", i + 1), a.n());
            }
            for (j, c) in spec.clusters.iter_mut().enumerate() {
                if let Some(b) = &c.whisker {
                    let size = b.n();
                    *c = Cluster {
                        cliques: c.cliques.clone(),
                        whisker: Some(random_vd_whisker(rng, &format!("b{}", j + 1), size)),
                    };
                }
            }
        }
        return Instance { base: g, spec, kind };
    }
}

/// A random nonvoid complex on `n` vertices from up to `max_faces`
/// random generating faces.
pub fn random_complex(rng: &mut Rand, n: usize, max_faces: usize) -> SimplicialComplex {
    let names: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let count = rng.gen_range(1..=max_faces.max(1));
    let faces: Vec<u64> = (0..count).map(|_| rng.gen_range(0..=bits::full(n))).collect();
    SimplicialComplex::new(names, faces).expect("faces lie in the ambient set")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn instances_are_valid_and_bounded() {
        let mut r = rng(7);
        for kind in [Kind::Pi, Kind::Cc, Kind::Mc, Kind::Md] {
            for _ in 0..20 {
                let inst = random_instance(&mut r, kind, 8, 14);
                assert!(inst.total_vertices() <= 14);
                let w = inst.build().unwrap();
                assert_eq!(w.graph.n(), inst.total_vertices());
            }
        }
    }

    #[test]
    fn same_seed_same_instances() {
        let a = random_instance(&mut rng(3), Kind::Md, 8, 14);
        let b = random_instance(&mut rng(3), Kind::Md, 8, 14);
        assert_eq!(a.base, b.base);
        assert_eq!(a.spec, b.spec);
    }
}
