//! Word-sized bitset helpers shared by the graph, complex and ideal code.
//!
//! Every vertex set in this crate is a `u64` over an ambient ordered vertex
//! list, so ambient sets are capped at [`MAX_VERTICES`].

use std::cmp::Ordering;

pub const MAX_VERTICES: usize = 64;

#[inline]
pub const fn bit(i: usize) -> u64 {
    1u64 << i
}

#[inline]
pub fn full(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        bit(n) - 1
    }
}

/// Indices of the set bits, ascending.
pub fn ones(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

#[inline]
pub fn is_subset(a: u64, b: u64) -> bool {
    a & !b == 0
}

/// Lexicographic order on the ascending index sequences of two sets.
pub fn lex_cmp(a: u64, b: u64) -> Ordering {
    let diff = a ^ b;
    if diff == 0 {
        return Ordering::Equal;
    }
    let low = diff.trailing_zeros();
    let above = if low >= 63 { 0 } else { u64::MAX << (low + 1) };
    if a & bit(low as usize) != 0 {
        // `a` has the smaller element at the first difference unless `b`
        // has already run out there.
        if b & above != 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    } else if a & above != 0 {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

/// Sorts into lexicographic order and drops duplicates.
pub fn sort_lex(sets: &mut Vec<u64>) {
    sets.sort_by(|a, b| lex_cmp(*a, *b));
    sets.dedup();
}

/// Keeps only the inclusion-maximal sets, in lexicographic order.
pub fn maximal_only(mut sets: Vec<u64>) -> Vec<u64> {
    sets.sort_by(|a, b| b.count_ones().cmp(&a.count_ones()).then(lex_cmp(*a, *b)));
    sets.dedup();
    let mut kept: Vec<u64> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| is_subset(s, *k)) {
            kept.push(s);
        }
    }
    sort_lex(&mut kept);
    kept
}

/// Keeps only the inclusion-minimal sets, in lexicographic order.
pub fn minimal_only(mut sets: Vec<u64>) -> Vec<u64> {
    sets.sort_by(|a, b| a.count_ones().cmp(&b.count_ones()).then(lex_cmp(*a, *b)));
    sets.dedup();
    let mut kept: Vec<u64> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| is_subset(*k, s)) {
            kept.push(s);
        }
    }
    sort_lex(&mut kept);
    kept
}

/// Packs the bits of `mask` selected by `keep` into the low bits, preserving
/// order (a software `pext`).
pub fn compress(mask: u64, keep: u64) -> u64 {
    let mut out = 0;
    for (k, i) in ones(keep).enumerate() {
        if mask & bit(i) != 0 {
            out |= bit(k);
        }
    }
    out
}

/// Inverse of [`compress`]: spreads low bits onto the positions of `keep`.
pub fn expand(mask: u64, keep: u64) -> u64 {
    let mut out = 0;
    for (k, i) in ones(keep).enumerate() {
        if mask & bit(k) != 0 {
            out |= bit(i);
        }
    }
    out
}

/// All subsets of `mask`, including the empty set and `mask` itself.
pub fn subsets(mask: u64) -> impl Iterator<Item = u64> {
    let mut next = Some(0u64);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == mask {
            None
        } else {
            Some((cur.wrapping_sub(mask)) & mask)
        };
        Some(cur)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(mask: u64) -> Vec<usize> {
        ones(mask).collect()
    }

    #[test]
    fn lex_matches_sequence_order() {
        for a in 0u64..64 {
            for b in 0u64..64 {
                assert_eq!(lex_cmp(a, b), seq(a).cmp(&seq(b)), "{a:b} vs {b:b}");
            }
        }
    }

    #[test]
    fn compress_expand_inverse() {
        let keep = 0b1011_0110;
        for m in subsets(keep) {
            assert_eq!(expand(compress(m, keep), keep), m);
        }
        assert_eq!(compress(0b0010_0100, keep), 0b1010);
    }

    #[test]
    fn subsets_enumerates_all() {
        assert_eq!(subsets(0b101).collect::<Vec<_>>(), vec![0, 1, 4, 5]);
        assert_eq!(subsets(0).collect::<Vec<_>>(), vec![0]);
    }

    #[test]
    fn maximal_and_minimal() {
        assert_eq!(maximal_only(vec![0b1, 0b11, 0b100, 0b11]), vec![0b11, 0b100]);
        assert_eq!(minimal_only(vec![0b1, 0b11, 0b100]), vec![0b1, 0b100]);
    }
}
