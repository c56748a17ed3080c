//! Reduced simplicial homology over a prime field or the rationals.
//!
//! Faces are `u64` bitsets; boundary matrices are built on demand from a
//! facet list and reduced exactly. Over `F_2` rows are packed into words,
//! over `F_p` entries are residues, and over `Q` elimination is
//! fraction-free (Bareiss), first in `i128` and in big integers if that
//! overflows.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::bits::{self, ones};
use crate::error::{invalid, Error, Result};

/// Coefficient field for homology and Betti numbers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Prime(u32),
    Rational,
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::Prime(2)
    }
}

impl FieldSpec {
    pub fn prime(p: u32) -> Result<FieldSpec> {
        if is_prime(p) {
            Ok(FieldSpec::Prime(p))
        } else {
            Err(invalid(format!("{p} is not prime")))
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Prime(p) => write!(f, "F{p}"),
            FieldSpec::Rational => f.write_str("Q"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Accepts `Q`, `rational`, `F2`, `f3`, `2`, `p=5`.
    fn from_str(s: &str) -> Result<FieldSpec> {
        let t = s.trim().to_ascii_lowercase();
        if t == "q" || t == "rational" || t == "rationals" || t == "qq" {
            return Ok(FieldSpec::Rational);
        }
        let digits = t
            .strip_prefix("p=")
            .or_else(|| t.strip_prefix('f'))
            .unwrap_or(&t);
        let p: u32 = digits
            .parse()
            .map_err(|_| invalid(format!("unrecognized field {s:?}")))?;
        FieldSpec::prime(p)
    }
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// A sparse integer matrix given column by column as `(row, ±1)` entries.
pub struct SignedColumns {
    pub rows: usize,
    pub cols: Vec<Vec<(usize, i8)>>,
}

/// Rank of a `{0, ±1}` matrix over the chosen field.
pub fn rank(m: &SignedColumns, field: FieldSpec) -> usize {
    if m.rows == 0 || m.cols.is_empty() {
        return 0;
    }
    match field {
        FieldSpec::Prime(2) => rank_gf2(m),
        FieldSpec::Prime(p) => rank_mod_p(m, p),
        FieldSpec::Rational => rank_rational(m),
    }
}

fn rank_gf2(m: &SignedColumns) -> usize {
    let words = m.rows.div_ceil(64);
    // leading row -> reduced basis vector with that leading row
    let mut basis: HashMap<usize, Vec<u64>> = HashMap::new();
    for c in &m.cols {
        let mut v = vec![0u64; words];
        for &(r, _) in c {
            v[r / 64] ^= 1 << (r % 64);
        }
        while let Some(lead) = leading_bit(&v) {
            match basis.get(&lead) {
                Some(b) => v.iter_mut().zip(b).for_each(|(x, y)| *x ^= *y),
                None => {
                    basis.insert(lead, v);
                    break;
                }
            }
        }
    }
    basis.len()
}

fn leading_bit(v: &[u64]) -> Option<usize> {
    v.iter()
        .enumerate()
        .rev()
        .find(|(_, w)| **w != 0)
        .map(|(k, w)| k * 64 + 63 - w.leading_zeros() as usize)
}

fn rank_mod_p(m: &SignedColumns, p: u32) -> usize {
    let p = p as u64;
    let mut a: Vec<Vec<u64>> = m
        .cols
        .iter()
        .map(|c| {
            let mut v = vec![0u64; m.rows];
            for &(r, s) in c {
                v[r] = (v[r] + if s > 0 { 1 } else { p - 1 }) % p;
            }
            v
        })
        .collect();
    let mut rank = 0;
    let ncols = a.len();
    for r in 0..m.rows {
        let Some(piv) = (rank..ncols).find(|&c| a[c][r] != 0) else { continue };
        a.swap(rank, piv);
        let inv = mod_pow(a[rank][r], p - 2, p);
        for c in rank + 1..ncols {
            let f = a[c][r] * inv % p;
            if f == 0 {
                continue;
            }
            for k in r..m.rows {
                let sub = f * a[rank][k] % p;
                a[c][k] = (a[c][k] + p - sub) % p;
            }
        }
        rank += 1;
        if rank == ncols {
            break;
        }
    }
    rank
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn dense_rows(m: &SignedColumns) -> Vec<Vec<i128>> {
    let mut rows = vec![vec![0i128; m.cols.len()]; m.rows];
    for (c, col) in m.cols.iter().enumerate() {
        for &(r, s) in col {
            rows[r][c] += s as i128;
        }
    }
    rows
}

fn rank_rational(m: &SignedColumns) -> usize {
    let rows = dense_rows(m);
    match bareiss_i128(rows.clone()) {
        Some(r) => r,
        None => bareiss_big(
            rows.into_iter()
                .map(|r| r.into_iter().map(BigInt::from).collect())
                .collect(),
        ),
    }
}

/// Fraction-free elimination; `None` on overflow.
fn bareiss_i128(mut a: Vec<Vec<i128>>) -> Option<usize> {
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut prev: i128 = 1;
    let mut rank = 0;
    for c in 0..ncols {
        let Some(piv) = (rank..nrows).find(|&r| a[r][c] != 0) else { continue };
        a.swap(rank, piv);
        let p = a[rank][c];
        for r in rank + 1..nrows {
            let f = a[r][c];
            for k in c..ncols {
                let v = p.checked_mul(a[r][k])?.checked_sub(f.checked_mul(a[rank][k])?)?;
                a[r][k] = v / prev;
            }
        }
        prev = p;
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    Some(rank)
}

fn bareiss_big(mut a: Vec<Vec<BigInt>>) -> usize {
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for c in 0..ncols {
        let Some(piv) = (rank..nrows).find(|&r| !a[r][c].is_zero()) else { continue };
        a.swap(rank, piv);
        let p = a[rank][c].clone();
        for r in rank + 1..nrows {
            let f = a[r][c].clone();
            for k in c..ncols {
                let v = &p * &a[r][k] - &f * &a[rank][k];
                a[r][k] = v / &prev;
            }
        }
        prev = p;
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

/// Every face of the complex generated by `facets`, grouped by cardinality
/// (`out[k]` holds the faces with `k` vertices), each group sorted.
pub fn faces_by_size(facets: &[u64]) -> Vec<Vec<u64>> {
    let mut seen = std::collections::HashSet::new();
    let top = facets.iter().map(|f| f.count_ones() as usize).max();
    let Some(top) = top else { return Vec::new() };
    let mut out = vec![Vec::new(); top + 1];
    for &f in facets {
        for s in bits::subsets(f) {
            if seen.insert(s) {
                out[s.count_ones() as usize].push(s);
            }
        }
    }
    for group in &mut out {
        group.sort_unstable();
    }
    out
}

/// Boundary map from faces of size `k` to faces of size `k - 1`.
fn boundary(upper: &[u64], lower: &[u64]) -> SignedColumns {
    let index: HashMap<u64, usize> = lower.iter().enumerate().map(|(i, f)| (*f, i)).collect();
    let cols = upper
        .iter()
        .map(|&f| {
            ones(f)
                .enumerate()
                .map(|(pos, v)| {
                    let sign = if pos % 2 == 0 { 1 } else { -1 };
                    (index[&(f & !(1u64 << v))], sign)
                })
                .collect()
        })
        .collect();
    SignedColumns { rows: lower.len(), cols }
}

/// Dimensions of `H̃_i` for `i = -1 ..= dim`, as a vector indexed by `i + 1`.
///
/// The void complex (no facets) returns an empty vector: all of its
/// homology vanishes. The irrelevant complex `{∅}` returns `[1]`.
pub fn reduced_homology(facets: &[u64], field: FieldSpec) -> Vec<usize> {
    let faces = faces_by_size(facets);
    if faces.is_empty() {
        return Vec::new();
    }
    // ranks[k] = rank of the boundary from size-k faces to size-(k-1) faces
    let mut ranks = vec![0usize; faces.len() + 1];
    for k in 1..faces.len() {
        ranks[k] = rank(&boundary(&faces[k], &faces[k - 1]), field);
    }
    (0..faces.len())
        .map(|k| faces[k].len() - ranks[k] - ranks[k + 1])
        .collect()
}

/// Total reduced Betti number, a quick acyclicity test.
pub fn is_acyclic(facets: &[u64], field: FieldSpec) -> bool {
    reduced_homology(facets, field).iter().all(|h| *h == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_spaces() {
        let circle = [0b011, 0b110, 0b101];
        assert_eq!(reduced_homology(&circle, FieldSpec::default()), vec![0, 0, 1]);
        assert_eq!(reduced_homology(&[0b01, 0b10], FieldSpec::Rational), vec![0, 1]);
        assert_eq!(reduced_homology(&[0b111], FieldSpec::Prime(3)), vec![0, 0, 0, 0]);
        assert_eq!(reduced_homology(&[0], FieldSpec::default()), vec![1]);
        assert!(reduced_homology(&[], FieldSpec::default()).is_empty());
    }

    #[test]
    fn projective_plane_sees_characteristic() {
        // six-vertex triangulation of RP^2
        let tris: [[usize; 3]; 10] = [
            [0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 5, 1],
            [1, 2, 4], [2, 3, 5], [3, 4, 1], [4, 5, 2], [5, 1, 3],
        ];
        let facets: Vec<u64> = tris.iter().map(|t| t.iter().fold(0, |m, v| m | 1 << v)).collect();
        assert_eq!(reduced_homology(&facets, FieldSpec::Prime(2)), vec![0, 0, 1, 1]);
        assert_eq!(reduced_homology(&facets, FieldSpec::Prime(3)), vec![0, 0, 0, 0]);
        assert_eq!(reduced_homology(&facets, FieldSpec::Rational), vec![0, 0, 0, 0]);
    }

    #[test]
    fn field_parsing() {
        assert_eq!("F2".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(2));
        assert_eq!("p=7".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(7));
        assert_eq!("q".parse::<FieldSpec>().unwrap(), FieldSpec::Rational);
        assert!("4".parse::<FieldSpec>().is_err());
        assert!("x".parse::<FieldSpec>().is_err());
    }

    #[test]
    fn big_integer_path_agrees() {
        let m = SignedColumns {
            rows: 3,
            cols: vec![vec![(0, 1), (1, -1)], vec![(1, 1), (2, -1)], vec![(0, 1), (2, -1)]],
        };
        let rows = dense_rows(&m);
        let big = bareiss_big(rows.iter().map(|r| r.iter().map(|x| BigInt::from(*x)).collect()).collect());
        assert_eq!(bareiss_i128(rows), Some(2));
        assert_eq!(big, 2);
    }
}
