//! Canonical forms, isomorphism tests, and isomorph-free enumeration.
//!
//! The canonical key of a tournament is the lexicographically smallest
//! upper-triangle code over all n! relabelings. Two tournaments are
//! isomorphic exactly when their keys are equal, and every key is itself
//! a valid code, so `Tournament::parse(key.code())` reproduces a member
//! of the class.
//!
//! The search never materializes n! orderings. It grows a vertex ordering
//! one position at a time over an ordered partition of the unplaced
//! vertices: placing a vertex fixes one code row (dominators of the placed
//! vertex sort before dominated ones inside every cell, which is forced by
//! minimality), splits the cells accordingly, and recursion continues on
//! candidates whose row ties the minimum, under a global best-prefix bound.
//! Collecting every ordering that achieves the minimum yields the
//! automorphism group as a byproduct, which the enumerator needs.

use rayon::prelude::*;
use std::fmt;

use crate::error::{Error, Result};
use crate::tournament::{Tournament, VertexSet, MAX_VERTICES};

const MAX_CODE: usize = MAX_VERTICES * (MAX_VERTICES - 1) / 2;

/// Canonical form identifier: the minimal code packed into an integer,
/// first code character as the most significant bit. Equal keys mean
/// isomorphic tournaments; ordering is size, then code order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey {
    n: u8,
    value: u128,
}

impl CanonicalKey {
    fn from_bits(n: usize, bits: &[u8]) -> Self {
        debug_assert_eq!(bits.len(), n * (n - 1) / 2);
        let mut value = 0u128;
        for &b in bits {
            value = value << 1 | b as u128;
        }
        CanonicalKey { n: n as u8, value }
    }

    pub fn size(&self) -> usize {
        self.n as usize
    }

    /// The minimal code as text.
    pub fn code(&self) -> String {
        let len = self.size() * (self.size() - 1) / 2;
        (0..len)
            .map(|k| {
                if self.value >> (len - 1 - k) & 1 == 1 {
                    '1'
                } else {
                    '0'
                }
            })
            .collect()
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.code())
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey({})", self.code())
    }
}

struct Search {
    n: usize,
    /// beats_mask[v] = vertices that beat v.
    beaten_by: [u16; MAX_VERTICES],
    collect_all: bool,
    have_best: bool,
    best: [u8; MAX_CODE],
    emitted: [u8; MAX_CODE],
    chosen: [u8; MAX_VERTICES],
    labelings: Vec<[u8; MAX_VERTICES]>,
}

impl Search {
    fn new(t: &Tournament, collect_all: bool) -> Self {
        let n = t.size();
        let mut beaten_by = [0u16; MAX_VERTICES];
        for (v, slot) in beaten_by.iter_mut().enumerate().take(n) {
            *slot = t.in_neighbors(v).bits();
        }
        Search {
            n,
            beaten_by,
            collect_all,
            have_best: false,
            best: [0; MAX_CODE],
            emitted: [0; MAX_CODE],
            chosen: [0; MAX_VERTICES],
            labelings: Vec::new(),
        }
    }

    fn run(&mut self) {
        let cells = [VertexSet::full(self.n).bits()];
        self.dfs(&cells, 0, 0, true);
    }

    fn dfs(&mut self, cells: &[u16], depth: usize, pos: usize, tight: bool) {
        if depth == self.n {
            self.leaf(pos);
            return;
        }
        let row_len = self.n - 1 - depth;
        // One row candidate per vertex of the first cell.
        let mut vs = [0u8; MAX_VERTICES];
        let mut rows = [[0u8; MAX_VERTICES - 1]; MAX_VERTICES];
        let mut children = [[0u16; MAX_VERTICES]; MAX_VERTICES];
        let mut child_len = [0usize; MAX_VERTICES];
        let mut m = 0;
        for v in VertexSet::from_bits(cells[0]).iter() {
            vs[m] = v as u8;
            child_len[m] = self.split(v, cells, &mut rows[m], &mut children[m]);
            m += 1;
        }
        // Only rows tying the minimum can start a minimal completion.
        let mut min = 0;
        for i in 1..m {
            if rows[i][..row_len] < rows[min][..row_len] {
                min = i;
            }
        }
        let min_row = rows[min];
        for i in 0..m {
            if rows[i][..row_len] != min_row[..row_len] {
                continue;
            }
            // Fresh bound check: best may have shrunk inside this loop.
            let child_tight = if self.have_best && tight {
                match rows[i][..row_len].cmp(&self.best[pos..pos + row_len]) {
                    std::cmp::Ordering::Greater => continue,
                    std::cmp::Ordering::Equal => true,
                    std::cmp::Ordering::Less => false,
                }
            } else {
                tight
            };
            self.emitted[pos..pos + row_len].copy_from_slice(&rows[i][..row_len]);
            self.chosen[depth] = vs[i];
            self.dfs(
                &children[i][..child_len[i]],
                depth + 1,
                pos + row_len,
                child_tight,
            );
        }
    }

    /// Emits the code row obtained by placing `v` next: inside every cell
    /// the vertices beating v (0-bits) precede the vertices v beats
    /// (1-bits). Returns the refined cell list for the recursion.
    fn split(
        &self,
        v: usize,
        cells: &[u16],
        row: &mut [u8; MAX_VERTICES - 1],
        children: &mut [u16; MAX_VERTICES],
    ) -> usize {
        let inn = self.beaten_by[v];
        let mut rl = 0;
        let mut nc = 0;
        for (ci, &cell) in cells.iter().enumerate() {
            let c = if ci == 0 { cell & !(1 << v) } else { cell };
            let lo = c & inn;
            let hi = c & !inn;
            for _ in 0..lo.count_ones() {
                row[rl] = 0;
                rl += 1;
            }
            for _ in 0..hi.count_ones() {
                row[rl] = 1;
                rl += 1;
            }
            if lo != 0 {
                children[nc] = lo;
                nc += 1;
            }
            if hi != 0 {
                children[nc] = hi;
                nc += 1;
            }
        }
        nc
    }

    fn leaf(&mut self, total: usize) {
        let update = if !self.have_best {
            true
        } else {
            match self.emitted[..total].cmp(&self.best[..total]) {
                std::cmp::Ordering::Less => true,
                std::cmp::Ordering::Equal => {
                    if self.collect_all {
                        self.labelings.push(self.chosen);
                    }
                    return;
                }
                std::cmp::Ordering::Greater => return,
            }
        };
        if update {
            self.best[..total].copy_from_slice(&self.emitted[..total]);
            self.have_best = true;
            self.labelings.clear();
            self.labelings.push(self.chosen);
        }
    }
}

fn search(t: &Tournament, collect_all: bool) -> (CanonicalKey, Vec<[u8; MAX_VERTICES]>) {
    let mut s = Search::new(t, collect_all);
    s.run();
    let len = s.n * (s.n - 1) / 2;
    (CanonicalKey::from_bits(s.n, &s.best[..len]), s.labelings)
}

/// The canonical key of `t`: invariant under relabeling and minimal over
/// the isomorphism class.
pub fn canonical_key(t: &Tournament) -> CanonicalKey {
    search(t, false).0
}

/// Canonical key plus one ordering that achieves it, as `order[new] = old`.
pub fn canonical_form(t: &Tournament) -> (CanonicalKey, Vec<usize>) {
    let (key, labs) = search(t, false);
    let order = labs[0][..t.size()].iter().map(|&v| v as usize).collect();
    (key, order)
}

/// Canonical key plus every ordering that achieves it. When `t` is already
/// canonically labeled these orderings are exactly the automorphisms.
pub(crate) fn canonical_form_all(t: &Tournament) -> (CanonicalKey, Vec<[u8; MAX_VERTICES]>) {
    search(t, true)
}

/// The canonically labeled representative of `t`'s isomorphism class.
pub fn canonicalize(t: &Tournament) -> Tournament {
    let (_, order) = canonical_form(t);
    t.relabeled(&order)
}

pub fn is_isomorphic(a: &Tournament, b: &Tournament) -> bool {
    a.size() == b.size() && canonical_key(a) == canonical_key(b)
}

/// Packs a tournament's own code into key form without canonicalizing.
/// Equals `canonical_key` exactly on canonically labeled tournaments.
pub(crate) fn own_key(t: &Tournament) -> CanonicalKey {
    let n = t.size();
    let mut value = 0u128;
    for i in 0..n {
        for j in i + 1..n {
            value = value << 1 | t.dominates(i, j) as u128;
        }
    }
    CanonicalKey { n: n as u8, value }
}

/// One tournament per isomorphism class of size `n`, canonically labeled,
/// in ascending canonical code order. Supports 1..=10 (sizes 9 and 10 take
/// noticeably longer).
pub fn enumerate(n: usize) -> Result<Vec<Tournament>> {
    if !(1..=10).contains(&n) {
        return Err(Error::SizeRange {
            what: "enumeration",
            size: n,
            range: 1..=10,
        });
    }
    let mut reps = vec![Tournament::single()];
    for _ in 2..=n {
        let mut next: Vec<Tournament> = if reps.len() >= 64 {
            reps.par_iter().flat_map_iter(extend_representative).collect()
        } else {
            reps.iter().flat_map(extend_representative).collect()
        };
        next.sort_unstable_by_key(|t| own_key(t).value);
        reps = next;
    }
    Ok(reps)
}

/// Like [`enumerate`], restricted to irreducible tournaments.
pub fn enumerate_irreducible(n: usize) -> Result<Vec<Tournament>> {
    let mut reps = enumerate(n)?;
    reps.retain(Tournament::is_irreducible);
    Ok(reps)
}

/// Canonical augmentation step: extends a canonically labeled
/// representative by one vertex in every orbit-distinct way and keeps a
/// child exactly when the new vertex can occupy the last position of some
/// minimal ordering. Every size-(m+1) class then appears exactly once
/// across all parents.
fn extend_representative(p: &Tournament) -> Vec<Tournament> {
    let m = p.size();
    let (_, auts) = canonical_form_all(p);
    debug_assert!(auts.iter().any(|a| a[..m].iter().enumerate().all(|(i, &v)| i == v as usize)));
    let mut out = Vec::new();
    for mask in 0u32..(1 << m) {
        let mask = mask as u16;
        if auts.len() > 1 && !mask_is_orbit_min(mask, &auts, m) {
            continue;
        }
        let child = p.extended(VertexSet::from_bits(mask));
        let (_, labs) = canonical_form_all(&child);
        if labs.iter().any(|l| l[m] as usize == m) {
            let order: Vec<usize> = labs[0][..=m].iter().map(|&v| v as usize).collect();
            out.push(child.relabeled(&order));
        }
    }
    out
}

/// Whether `mask` is the numeric minimum of its orbit under the
/// automorphisms `auts` (given as vertex maps).
fn mask_is_orbit_min(mask: u16, auts: &[[u8; MAX_VERTICES]], m: usize) -> bool {
    for aut in auts {
        let mut img = 0u16;
        for (i, &target) in aut.iter().enumerate().take(m) {
            if mask & 1 << i != 0 {
                img |= 1 << target;
            }
        }
        if img < mask {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Calls `f` with every permutation of 0..n (Heap's algorithm).
    fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
        fn heap(k: usize, a: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
            if k <= 1 {
                f(a);
                return;
            }
            for i in 0..k {
                heap(k - 1, a, f);
                if k.is_multiple_of(2) {
                    a.swap(i, k - 1);
                } else {
                    a.swap(0, k - 1);
                }
            }
        }
        let mut a: Vec<usize> = (0..n).collect();
        heap(n, &mut a, &mut f);
    }

    /// Reference canonical code: minimum over all n! relabelings.
    fn brute_min_code(t: &Tournament) -> String {
        let mut best: Option<String> = None;
        for_each_permutation(t.size(), |perm| {
            let code = t.relabeled(perm).code();
            if best.as_ref().is_none_or(|b| code < *b) {
                best = Some(code);
            }
        });
        best.unwrap()
    }

    fn all_labeled(n: usize) -> Vec<Tournament> {
        let pairs = n * (n - 1) / 2;
        (0u32..1 << pairs)
            .map(|bits| {
                let mut k = 0;
                Tournament::from_fn(n, |_, _| {
                    let b = bits >> k & 1 == 1;
                    k += 1;
                    b
                })
            })
            .collect()
    }

    #[test]
    fn canonical_key_matches_permutation_minimum_up_to_five() {
        for n in 1..=5usize {
            for t in all_labeled(n) {
                assert_eq!(canonical_key(&t).code(), brute_min_code(&t), "{t:?}");
            }
        }
    }

    #[test]
    fn canonical_key_known_values() {
        assert_eq!(canonical_key(&Tournament::parse("111").unwrap()).code(), "000");
        assert_eq!(canonical_key(&Tournament::parse("010").unwrap()).code(), "010");
        assert_eq!(canonical_key(&Tournament::transitive(5)).code(), "0000000000");
    }

    #[test]
    fn canonical_key_is_relabeling_invariant() {
        let t = Tournament::parse("000011100001100100010").unwrap();
        let key = canonical_key(&t);
        for_each_permutation(5, |perm| {
            // Extend the 5-permutation to 7 vertices by fixing 5 and 6.
            let mut order: Vec<usize> = perm.to_vec();
            order.push(5);
            order.push(6);
            assert_eq!(canonical_key(&t.relabeled(&order)), key);
        });
    }

    #[test]
    fn canonical_key_is_realizable() {
        for code in ["111", "010", "0000110101", "000011100001100100010"] {
            let t = Tournament::parse(code).unwrap();
            let key = canonical_key(&t);
            let rep = Tournament::parse(&key.code()).unwrap();
            assert_eq!(canonical_key(&rep), key);
            assert!(is_isomorphic(&rep, &t));
        }
    }

    #[test]
    fn canonicalize_relabels_to_key() {
        let t = Tournament::parse("0000110101").unwrap();
        let c = canonicalize(&t);
        assert_eq!(c.code(), canonical_key(&t).code());
        assert!(is_isomorphic(&c, &t));
    }

    #[test]
    fn isomorphism_examples() {
        let a = Tournament::parse("111").unwrap();
        let b = a.relabeled(&[2, 0, 1]);
        assert!(is_isomorphic(&a, &b));
        assert!(!is_isomorphic(&a, &Tournament::parse("010").unwrap()));
    }

    #[test]
    fn enumeration_counts_small() {
        let expected = [1usize, 1, 2, 4, 12];
        for (n, &want) in (1..=5).zip(&expected) {
            assert_eq!(enumerate(n).unwrap().len(), want, "n={n}");
        }
    }

    #[test]
    fn enumeration_matches_brute_force_dedup_up_to_five() {
        for n in 1..=5usize {
            let mut brute: Vec<String> = all_labeled(n)
                .iter()
                .map(|t| canonical_key(t).code())
                .collect();
            brute.sort();
            brute.dedup();
            let reps: Vec<String> = enumerate(n).unwrap().iter().map(Tournament::code).collect();
            assert_eq!(reps, brute, "n={n}");
        }
    }

    #[test]
    fn enumeration_is_sorted_and_canonical() {
        let reps = enumerate(6).unwrap();
        assert_eq!(reps.len(), 56);
        for t in &reps {
            assert_eq!(canonical_key(t).code(), t.code());
        }
        let codes: Vec<String> = reps.iter().map(Tournament::code).collect();
        let mut sorted = codes.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(codes, sorted);
    }

    #[test]
    fn irreducible_counts_small() {
        assert_eq!(enumerate_irreducible(3).unwrap().len(), 1);
        assert_eq!(enumerate_irreducible(4).unwrap().len(), 1);
        assert_eq!(enumerate_irreducible(5).unwrap().len(), 6);
    }

    #[test]
    fn enumeration_rejects_out_of_range() {
        assert!(enumerate(0).is_err());
        assert!(enumerate(11).is_err());
    }
}
