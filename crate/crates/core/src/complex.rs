//! Simplicial complexes stored by their facets.
//!
//! A complex carries an explicit ambient vertex list, which may contain
//! vertices lying in no face. The void complex (no faces at all) and the
//! irrelevant complex `{∅}` are distinct values: the first has no facets,
//! the second has the single facet `∅`.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::bits::{self, bit, full, ones};
use crate::error::{invalid, Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::homology::{self, FieldSpec};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    vertices: Vec<String>,
    facets: Vec<u64>,
}

impl SimplicialComplex {
    /// Builds a complex from arbitrary generating faces; they are reduced to
    /// the antichain of maximal ones.
    pub fn new(vertices: Vec<String>, faces: Vec<u64>) -> Result<Self> {
        if vertices.len() > bits::MAX_VERTICES {
            return Err(Error::ResourceLimit(format!(
                "complexes are limited to {} vertices",
                bits::MAX_VERTICES
            )));
        }
        let mut seen = HashSet::new();
        if let Some(dup) = vertices.iter().find(|v| !seen.insert(v.as_str())) {
            return Err(invalid(format!("duplicate vertex {dup}")));
        }
        let all = full(vertices.len());
        if let Some(bad) = faces.iter().find(|f| **f & !all != 0) {
            return Err(invalid(format!("face {bad:#x} outside the ambient vertex set")));
        }
        Ok(Self::from_parts_unchecked(vertices, faces))
    }

    pub(crate) fn from_parts_unchecked(vertices: Vec<String>, faces: Vec<u64>) -> Self {
        SimplicialComplex { vertices, facets: bits::maximal_only(faces) }
    }

    pub fn from_named_facets<S: AsRef<str>>(vertices: &[S], facets: &[&[S]]) -> Result<Self> {
        let vertices: Vec<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        let masks = facets
            .iter()
            .map(|f| {
                f.iter().try_fold(0u64, |m, name| {
                    let name = name.as_ref();
                    vertices
                        .iter()
                        .position(|v| v == name)
                        .map(|i| m | bit(i))
                        .ok_or_else(|| invalid(format!("unknown vertex {name}")))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(vertices, masks)
    }

    pub fn void(vertices: Vec<String>) -> Result<Self> {
        Self::new(vertices, Vec::new())
    }

    pub fn irrelevant(vertices: Vec<String>) -> Result<Self> {
        Self::new(vertices, vec![0])
    }

    pub fn simplex(vertices: Vec<String>) -> Result<Self> {
        let all = full(vertices.len());
        Self::new(vertices, vec![all])
    }

    /// `Ind G`: faces are the independent sets of `G`.
    pub fn independence_complex(g: &Graph) -> Self {
        let facets = g.maximal_independent_sets().into_iter().map(|s| s.0).collect();
        SimplicialComplex { vertices: g.names().to_vec(), facets }
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn set_of<S: AsRef<str>>(&self, names: &[S]) -> Result<VertexSet> {
        names.iter().try_fold(VertexSet::EMPTY, |s, n| {
            let n = n.as_ref();
            self.index_of(n)
                .map(|i| s.with(i))
                .ok_or_else(|| invalid(format!("unknown vertex {n}")))
        })
    }

    pub fn names_of(&self, set: u64) -> Vec<&str> {
        ones(set).map(|i| self.vertices[i].as_str()).collect()
    }

    /// Facets as bitsets over the ambient order, lexicographically sorted.
    pub fn facet_bits(&self) -> &[u64] {
        &self.facets
    }

    pub fn facets(&self) -> Vec<VertexSet> {
        self.facets.iter().map(|f| VertexSet(*f)).collect()
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_irrelevant(&self) -> bool {
        self.facets == [0]
    }

    pub fn is_simplex(&self) -> bool {
        self.facets.len() == 1
    }

    pub fn contains_face(&self, face: u64) -> bool {
        self.facets.iter().any(|f| bits::is_subset(face, *f))
    }

    /// Union of all faces (the vertices actually used).
    pub fn support(&self) -> u64 {
        self.facets.iter().fold(0, |m, f| m | f)
    }

    /// `max |F| - 1`; `None` for the void complex.
    pub fn dim(&self) -> Option<i64> {
        self.facets.iter().map(|f| f.count_ones() as i64 - 1).max()
    }

    fn require_nonvoid(&self, what: &str) -> Result<()> {
        if self.is_void() {
            Err(invalid(format!("{what} is undefined for the void complex")))
        } else {
            Ok(())
        }
    }

    /// Re-expresses this complex over the ambient sub-list `keep`.
    fn restrict_ambient(&self, keep: u64, faces: Vec<u64>) -> SimplicialComplex {
        let vertices = ones(keep).map(|i| self.vertices[i].clone()).collect();
        let faces = faces.into_iter().map(|f| bits::compress(f, keep)).collect();
        Self::from_parts_unchecked(vertices, faces)
    }

    /// `Δ ∖ H = {F ∈ Δ : F ∩ H = ∅}` over ambient `V ∖ H`.
    pub fn deletion(&self, h: VertexSet) -> SimplicialComplex {
        let keep = full(self.n()) & !h.0;
        self.restrict_ambient(keep, self.facets.iter().map(|f| f & !h.0).collect())
    }

    /// `lk_Δ(H) = {F ∈ Δ : F ∩ H = ∅, F ∪ H ∈ Δ}` over ambient `V ∖ H`.
    pub fn link(&self, h: VertexSet) -> Result<SimplicialComplex> {
        if !self.contains_face(h.0) {
            return Err(invalid(format!(
                "{{{}}} is not a face",
                self.names_of(h.0).join(",")
            )));
        }
        let keep = full(self.n()) & !h.0;
        let faces = self
            .facets
            .iter()
            .filter(|f| bits::is_subset(h.0, **f))
            .map(|f| f & !h.0)
            .collect();
        Ok(self.restrict_ambient(keep, faces))
    }

    pub fn deletion_and_link(&self, h: VertexSet) -> Result<(SimplicialComplex, SimplicialComplex)> {
        let lk = self.link(h)?;
        Ok((self.deletion(h), lk))
    }

    /// Induced subcomplex on `w`, over ambient `w`.
    pub fn restriction(&self, w: VertexSet) -> SimplicialComplex {
        self.restrict_ambient(w.0, self.facets.iter().map(|f| f & w.0).collect())
    }

    /// Minimal nonfaces in lexicographic order.
    pub fn minimal_nonfaces(&self) -> Vec<u64> {
        if self.is_void() {
            return vec![0];
        }
        let all = full(self.n());
        let faces: HashSet<u64> = homology::faces_by_size(&self.facets).into_iter().flatten().collect();
        let mut out = Vec::new();
        for &f in &faces {
            for x in ones(all & !f) {
                let cand = f | bit(x);
                if !faces.contains(&cand) && ones(cand).all(|y| faces.contains(&(cand & !bit(y)))) {
                    out.push(cand);
                }
            }
        }
        bits::sort_lex(&mut out);
        out
    }

    /// `Δ^∨ = {V ∖ F : F ∉ Δ}` over the same ambient list.
    pub fn alexander_dual(&self) -> Result<SimplicialComplex> {
        if self.vertices.is_empty() {
            return Err(invalid("the Alexander dual needs a nonempty ambient vertex set"));
        }
        let all = full(self.n());
        let facets = self.minimal_nonfaces().into_iter().map(|m| all & !m).collect();
        Ok(Self::from_parts_unchecked(self.vertices.clone(), facets))
    }

    /// Complex whose facets are the complements of this complex's facets.
    pub fn complement_facet_complex(&self) -> SimplicialComplex {
        let all = full(self.n());
        let facets = self.facets.iter().map(|f| all & !f).collect();
        Self::from_parts_unchecked(self.vertices.clone(), facets)
    }

    /// `f = (f_{-1}, f_0, ..., f_dim)`.
    pub fn f_vector(&self) -> Result<Vec<u64>> {
        self.require_nonvoid("the f-vector")?;
        Ok(homology::faces_by_size(&self.facets)
            .iter()
            .map(|g| g.len() as u64)
            .collect())
    }

    /// Binomial transform of the f-vector with `d = dim + 1`; formal for
    /// nonpure complexes.
    pub fn h_vector(&self) -> Result<Vec<i64>> {
        Ok(h_from_f(&self.f_vector()?))
    }

    pub fn f_h_vectors(&self) -> Result<(Vec<u64>, Vec<i64>)> {
        let f = self.f_vector()?;
        let h = h_from_f(&f);
        Ok((f, h))
    }

    /// `Δ1 * Δ2` over the concatenated ambient list.
    pub fn join(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        if let Some(shared) = self.vertices.iter().find(|v| other.vertices.contains(v)) {
            return Err(invalid(format!("join needs disjoint vertex sets; {shared} is shared")));
        }
        if self.n() + other.n() > bits::MAX_VERTICES {
            return Err(Error::ResourceLimit("join exceeds the vertex limit".into()));
        }
        let shift = self.n();
        let mut vertices = self.vertices.clone();
        vertices.extend(other.vertices.iter().cloned());
        let facets = self
            .facets
            .iter()
            .flat_map(|a| other.facets.iter().map(move |b| a | (b << shift)))
            .collect();
        Ok(Self::from_parts_unchecked(vertices, facets))
    }

    /// Dimensions of `H̃_i` for `i = -1 ..= dim` (empty for the void complex).
    pub fn reduced_homology_dims(&self, field: FieldSpec) -> Vec<usize> {
        homology::reduced_homology(&self.facets, field)
    }

    /// `(min facet dim, max facet dim)`.
    pub fn purity_range(&self) -> Result<(i64, i64)> {
        self.require_nonvoid("the purity range")?;
        let dims = self.facets.iter().map(|f| f.count_ones() as i64 - 1);
        Ok((dims.clone().min().unwrap(), dims.max().unwrap()))
    }

    pub fn is_pure(&self) -> bool {
        self.purity_range().map(|(a, b)| a == b).unwrap_or(true)
    }

    pub fn to_text(&self) -> String {
        // every vertex is declared so the ambient order survives a re-parse
        let mut out = String::new();
        for v in &self.vertices {
            writeln!(out, "vertex {v}").unwrap();
        }
        for &f in &self.facets {
            let names = self.names_of(f);
            if names.is_empty() {
                out.push_str("facet\n");
            } else {
                writeln!(out, "facet {}", names.join(" ")).unwrap();
            }
        }
        out
    }

    /// Parses `facet v1 v2 ...` and `vertex v` lines. A bare `facet` line is
    /// the empty face.
    pub fn parse(text: &str) -> Result<SimplicialComplex> {
        let mut vertices: Vec<String> = Vec::new();
        let mut faces = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut tokens = line.split_whitespace();
            let head = tokens.next().unwrap();
            let mut index = |name: &str| -> Result<usize> {
                if let Some(i) = vertices.iter().position(|v| v == name) {
                    return Ok(i);
                }
                if vertices.len() >= bits::MAX_VERTICES {
                    return Err(Error::ResourceLimit("too many vertices".into()));
                }
                vertices.push(name.to_string());
                Ok(vertices.len() - 1)
            };
            match head {
                "vertex" => {
                    let names: Vec<&str> = tokens.collect();
                    if names.len() != 1 {
                        return Err(Error::Parse { line: lineno + 1, message: "expected `vertex <name>`".into() });
                    }
                    index(names[0])?;
                }
                "facet" => {
                    let mut m = 0;
                    for name in tokens {
                        m |= bit(index(name)?);
                    }
                    faces.push(m);
                }
                other => {
                    return Err(Error::Parse {
                        line: lineno + 1,
                        message: format!("unknown directive {other:?}"),
                    })
                }
            }
        }
        SimplicialComplex::new(vertices, faces)
    }
}

pub fn binomial(n: i64, k: i64) -> i128 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1i128, |acc, i| acc * (n - i) as i128 / (i + 1) as i128)
}

/// `h_k = Σ_{i ≤ k} (-1)^{k-i} C(d-i, k-i) f_{i-1}` with `d = f.len() - 1`.
pub fn h_from_f(f: &[u64]) -> Vec<i64> {
    let d = f.len() as i64 - 1;
    (0..=d)
        .map(|k| {
            (0..=k)
                .map(|i| {
                    let sign = if (k - i) % 2 == 0 { 1 } else { -1 };
                    sign * binomial(d - i, k - i) * f[i as usize] as i128
                })
                .sum::<i128>() as i64
        })
        .collect()
}

/// Inverse transform: `f_{j-1} = Σ_{i ≤ j} C(d-i, j-i) h_i`.
pub fn f_from_h(h: &[i64]) -> Vec<i64> {
    let d = h.len() as i64 - 1;
    (0..=d)
        .map(|j| {
            (0..=j)
                .map(|i| binomial(d - i, j - i) * h[i as usize] as i128)
                .sum::<i128>() as i64
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(n: usize) -> Vec<String> {
        (1..=n).map(|i| i.to_string()).collect()
    }

    fn all_subsets_brute_dual(c: &SimplicialComplex) -> Vec<u64> {
        let all = full(c.n());
        let faces: Vec<u64> = (0..=all)
            .filter(|s| !c.contains_face(*s))
            .map(|s| all & !s)
            .collect();
        bits::maximal_only(faces)
    }

    #[test]
    fn independence_complex_basics() {
        let c6 = SimplicialComplex::independence_complex(&Graph::cycle(6));
        assert_eq!(c6.facet_count(), 5);
        assert_eq!(c6.dim(), Some(2));
        let k3 = SimplicialComplex::independence_complex(&Graph::complete(3));
        assert_eq!(k3.facet_bits(), &[0b001, 0b010, 0b100]);
        let e3 = SimplicialComplex::independence_complex(&Graph::edgeless(3));
        assert_eq!(e3.facet_bits(), &[0b111]);
    }

    #[test]
    fn deletion_and_link_of_whiskered_path() {
        let p = Graph::named_path(&["a1", "v1", "v2", "a2"]);
        let d = SimplicialComplex::independence_complex(&p);
        let h = d.set_of(&["v1"]).unwrap();
        let (del, lk) = d.deletion_and_link(h).unwrap();
        assert_eq!(del.vertices(), &["a1", "v2", "a2"]);
        let want_del = SimplicialComplex::from_named_facets(
            &["a1", "v2", "a2"],
            &[&["a1", "a2"], &["a1", "v2"]],
        )
        .unwrap();
        assert_eq!(del, want_del);
        let want_lk = SimplicialComplex::from_named_facets(&["a1", "v2", "a2"], &[&["a2"]]).unwrap();
        assert_eq!(lk, want_lk);
        assert!(d.link(d.set_of(&["v1", "v2"]).unwrap()).is_err());
    }

    #[test]
    fn deletion_and_link_trivial_cases() {
        let c = SimplicialComplex::independence_complex(&Graph::cycle(5));
        let (del, lk) = c.deletion_and_link(VertexSet::EMPTY).unwrap();
        assert_eq!(del, c);
        assert_eq!(lk, c);
        let s = SimplicialComplex::simplex(names(3)).unwrap();
        let (del, lk) = s.deletion_and_link(VertexSet(0b1)).unwrap();
        let want = SimplicialComplex::simplex(vec!["2".into(), "3".into()]).unwrap();
        assert_eq!(del, want);
        assert_eq!(lk, want);
    }

    #[test]
    fn alexander_dual_examples() {
        // two points in ambient {1,2}: the only nonface is {1,2}, so the dual
        // is the irrelevant complex
        let two = SimplicialComplex::new(names(2), vec![0b01, 0b10]).unwrap();
        assert_eq!(all_subsets_brute_dual(&two), vec![0]);
        let dual = two.alexander_dual().unwrap();
        assert!(dual.is_irrelevant());
        assert_eq!(dual.alexander_dual().unwrap(), two);

        let full_edge = SimplicialComplex::simplex(names(2)).unwrap();
        assert!(full_edge.alexander_dual().unwrap().is_void());

        let three = SimplicialComplex::new(names(3), vec![0b001, 0b010, 0b100]).unwrap();
        assert_eq!(all_subsets_brute_dual(&three), vec![0b001, 0b010, 0b100]);
        assert_eq!(three.alexander_dual().unwrap(), three);

        assert!(SimplicialComplex::irrelevant(vec![]).unwrap().alexander_dual().is_err());
    }

    #[test]
    fn complement_facets() {
        let c = SimplicialComplex::new(names(3), vec![0b101, 0b010]).unwrap();
        assert_eq!(c.complement_facet_complex().facet_bits(), &[0b101, 0b010]);
        let irr = SimplicialComplex::irrelevant(names(2)).unwrap();
        assert_eq!(irr.complement_facet_complex().facet_bits(), &[0b11]);
    }

    #[test]
    fn f_and_h() {
        let c6 = SimplicialComplex::independence_complex(&Graph::cycle(6));
        assert_eq!(c6.f_vector().unwrap(), vec![1, 6, 9, 2]);
        let edge = SimplicialComplex::simplex(names(2)).unwrap();
        assert_eq!(edge.f_h_vectors().unwrap(), (vec![1, 2, 1], vec![1, 0, 0]));
        assert!(SimplicialComplex::void(names(2)).unwrap().f_vector().is_err());
        assert_eq!(f_from_h(&h_from_f(&[1, 6, 9, 2])), vec![1, 6, 9, 2]);
    }

    #[test]
    fn joins() {
        let p1 = SimplicialComplex::simplex(vec!["1".into()]).unwrap();
        let p2 = SimplicialComplex::simplex(vec!["2".into()]).unwrap();
        assert_eq!(p1.join(&p2).unwrap().facet_bits(), &[0b11]);
        let b12 = SimplicialComplex::new(vec!["1".into(), "2".into()], vec![0b01, 0b10]).unwrap();
        let b34 = SimplicialComplex::new(vec!["3".into(), "4".into()], vec![0b01, 0b10]).unwrap();
        let square = b12.join(&b34).unwrap();
        let want = SimplicialComplex::from_named_facets(
            &["1", "2", "3", "4"],
            &[&["1", "3"], &["1", "4"], &["2", "3"], &["2", "4"]],
        )
        .unwrap();
        assert_eq!(square, want);
        assert_eq!(square.reduced_homology_dims(FieldSpec::default()), vec![0, 0, 1]);
        let irr = SimplicialComplex::irrelevant(vec!["x".into()]).unwrap();
        let j = b12.join(&irr).unwrap();
        assert_eq!(j.facet_bits(), b12.facet_bits());
        assert_eq!(j.n(), 3);
        assert!(b12.join(&b12).is_err());
    }

    #[test]
    fn purity() {
        let s = SimplicialComplex::simplex(names(4)).unwrap();
        assert_eq!(s.purity_range().unwrap(), (3, 3));
        let mixed = SimplicialComplex::new(names(3), vec![0b011, 0b100]).unwrap();
        assert_eq!(mixed.purity_range().unwrap(), (0, 1));
        assert!(!mixed.is_pure());
    }

    #[test]
    fn minimal_nonfaces_of_ind_are_edges() {
        let g = Graph::cycle(5);
        let c = SimplicialComplex::independence_complex(&g);
        let mut edges: Vec<u64> = g.edges().iter().map(|(u, v)| bit(*u) | bit(*v)).collect();
        bits::sort_lex(&mut edges);
        assert_eq!(c.minimal_nonfaces(), edges);
    }

    #[test]
    fn text_round_trip() {
        let text = "vertex z\nfacet a b\nfacet b c\n";
        let c = SimplicialComplex::parse(text).unwrap();
        assert_eq!(c.vertices(), &["z", "a", "b", "c"]);
        assert_eq!(SimplicialComplex::parse(&c.to_text()).unwrap(), c);
        assert!(SimplicialComplex::parse("face a").is_err());
        let irr = SimplicialComplex::parse("vertex q\nfacet\n").unwrap();
        assert!(irr.is_irrelevant());
    }
}
