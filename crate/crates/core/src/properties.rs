//! Seeded invariant suites run by the `properties` command.

use std::fmt;

use crate::complex::SimplicialComplex;
use crate::decomposability::{is_unmixed, is_vertex_decomposable, shedding_vertices};
use crate::generate::{random_graph, random_instance, rng, Rand};
use crate::homology::FieldSpec;
use crate::resolution::{betti_oracle, betti_recursive_cover, cover_ideal, edge_ideal, has_linear_resolution};
use crate::whisker::{all_whisker_face, Kind};

#[derive(Clone, Debug)]
pub struct SuiteResult {
    pub name: &'static str,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for SuiteResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "ok" } else { "FAIL" };
        write!(f, "{status}\t{}\t{} checked", self.name, self.checked)?;
        for m in &self.failures {
            write!(f, "\n  {m}")?;
        }
        Ok(())
    }
}

/// Runs every suite with `count` instances each.
pub fn run_all(seed: u64, count: usize) -> Vec<SuiteResult> {
    let mut r = rng(seed);
    vec![
        construction_vd(&mut r, count),
        cc_purity(&mut r, count),
        pi_unmixed(&mut r, count),
        chordality(&mut r, count),
        recursion_matches_oracle(&mut r, count.min(25)),
        h_equals_f(&mut r, count),
        froberg(&mut r, count),
    ]
}

fn suite(name: &'static str) -> SuiteResult {
    SuiteResult { name, checked: 0, failures: Vec::new() }
}

pub fn construction_vd(r: &mut Rand, count: usize) -> SuiteResult {
    let mut out = suite("construction-vd");
    let kinds = [Kind::Pi, Kind::Cc, Kind::Mc, Kind::Md];
    for k in 0..count {
        let inst = random_instance(r, kinds[k % 4], 8, 14);
        let w = match inst.build() {
            Ok(w) => w,
            Err(e) => {
                out.failures.push(format!("instance {k}: build failed: {e}"));
                continue;
            }
        };
        let delta = SimplicialComplex::independence_complex(&w.graph);
        out.checked += 1;
        match is_vertex_decomposable(&delta) {
            Ok(c) if c.is_decomposable() => {}
            _ => out.failures.push(format!("instance {k} ({}): not vertex decomposable", w.kind)),
        }
        let shed = shedding_vertices(&delta).unwrap_or_default();
        if let Some(v) = (0..w.base.n()).find(|v| !shed.contains(v)) {
            out.failures.push(format!("instance {k}: base vertex {} is not a shedding vertex", w.graph.name(v)));
        }
        for v in w.base.names() {
            for piece in [w.decompose_delete(v), w.decompose_link(v)] {
                if let Err(e) = piece {
                    out.failures.push(format!("instance {k}: decomposition at {v} failed: {e}"));
                }
            }
        }
    }
    out
}

pub fn cc_purity(r: &mut Rand, count: usize) -> SuiteResult {
    let mut out = suite("cc-purity");
    for k in 0..count {
        let w = random_instance(r, Kind::Cc, 8, 14).build().expect("generated specs are valid");
        let (d, rr) = w.type_dr();
        let facets = w.graph.maximal_independent_sets();
        out.checked += 1;
        if let Some(f) = facets.iter().find(|f| f.len() < d || f.len() > d + rr) {
            out.failures.push(format!("instance {k}: facet of size {} outside [{d}, {}]", f.len(), d + rr));
        }
        let top = all_whisker_face(&w);
        if top.len() != d + rr || !facets.contains(&top) {
            out.failures.push(format!("instance {k}: the all-whisker set is not a facet of size d+r"));
        }
    }
    out
}

pub fn pi_unmixed(r: &mut Rand, count: usize) -> SuiteResult {
    let mut out = suite("pi-unmixed");
    for k in 0..count {
        let w = random_instance(r, Kind::Pi, 6, 12).build().expect("generated specs are valid");
        out.checked += 1;
        if !is_unmixed(&w.graph) || !SimplicialComplex::independence_complex(&w.graph).is_pure() {
            out.failures.push(format!("instance {k}: G^pi is not unmixed"));
        }
    }
    out
}

/// A chordal build forces a chordal base, and pi whiskers are simplicial so
/// G^pi is chordal exactly when G is. The cc converse is not checked: a
/// cluster whisker on two cliques joined by an induced path closes a
/// chordless cycle.
pub fn chordality(r: &mut Rand, count: usize) -> SuiteResult {
    let mut out = suite("chordality");
    for k in 0..count {
        let kind = if k % 2 == 0 { Kind::Cc } else { Kind::Pi };
        let w = random_instance(r, kind, 8, 14).build().expect("generated specs are valid");
        out.checked += 1;
        let (whiskered, base) = (w.graph.is_chordal().is_chordal(), w.base.is_chordal().is_chordal());
        if whiskered && !base {
            out.failures.push(format!("instance {k}: G^{kind} is chordal but G is not"));
        }
        if kind == Kind::Pi && whiskered != base {
            out.failures.push(format!("instance {k}: chordality differs between G and G^pi"));
        }
    }
    out
}

pub fn recursion_matches_oracle(r: &mut Rand, count: usize) -> SuiteResult {
    let mut out = suite("recursion-oracle");
    let kinds = [Kind::Pi, Kind::Cc, Kind::Mc];
    for k in 0..count {
        let w = random_instance(r, kinds[k % 3], 6, 12).build().expect("generated specs are valid");
        let field = if k % 2 == 0 { FieldSpec::Prime(2) } else { FieldSpec::Rational };
        out.checked += 1;
        let v = w.base.name(0).to_string();
        let rec = betti_recursive_cover(&w, &v, field);
        let oracle = betti_oracle(&cover_ideal(&w.graph), field);
        match (rec, oracle) {
            (Ok(a), Ok(b)) if a == b => {}
            (Ok(_), Ok(_)) => out.failures.push(format!("instance {k}: recursion and oracle disagree over {field}")),
            (Err(e), _) | (_, Err(e)) => out.failures.push(format!("instance {k}: {e}")),
        }
    }
    out
}

pub fn h_equals_f(r: &mut Rand, count: usize) -> SuiteResult {
    let mut out = suite("pi-h-equals-f");
    for k in 0..count {
        let w = random_instance(r, Kind::Pi, 8, 16).build().expect("generated specs are valid");
        out.checked += 1;
        let h = SimplicialComplex::independence_complex(&w.graph).h_vector().expect("nonvoid");
        let f = SimplicialComplex::independence_complex(&w.base).f_vector().expect("nonvoid");
        let mut f: Vec<i64> = f.iter().map(|x| *x as i64).collect();
        f.resize(h.len().max(f.len()), 0);
        if h != f {
            out.failures.push(format!("instance {k}: h = {h:?} but f = {f:?}"));
        }
    }
    out
}

pub fn froberg(r: &mut Rand, count: usize) -> SuiteResult {
    let mut out = suite("froberg");
    for k in 0..count {
        let n = 2 + k % 8;
        let g = random_graph(r, n, 0.5);
        if g.edge_count() == 0 {
            continue;
        }
        out.checked += 1;
        let linear = has_linear_resolution(&edge_ideal(&g), FieldSpec::default());
        match linear {
            Ok(l) if l == g.complement().is_chordal().is_chordal() => {}
            Ok(_) => out.failures.push(format!("graph {k}: linearity disagrees with chordality of the complement")),
            Err(e) => out.failures.push(format!("graph {k}: {e}")),
        }
    }
    out
}
