//! Bit-packed tournaments on at most 16 vertices and their text codes.
//!
//! A tournament is a complete antisymmetric digraph: for every pair of
//! distinct vertices u, v exactly one of u -> v ("u beats v") or v -> u
//! holds. Vertices are `0..n`. Each vertex stores its out-neighborhood as
//! one bitmask word, so all neighborhood queries are single AND/popcount
//! operations.
//!
//! The text code of a tournament is the upper triangle of its adjacency
//! matrix in row-major order: one character per pair (i, j) with i < j,
//! '1' when i beats j. Its length is n(n-1)/2, which determines n.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported tournament size.
pub const MAX_VERTICES: usize = 16;

/// A set of vertices, packed into one 16-bit word.
///
/// Ordering is numeric on the packed bits, i.e. the bitstring read
/// lowest-vertex-first; together with size this gives every listing in
/// the crate a deterministic order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(u16);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1 << v)
    }

    /// The full set {0, .., n-1}.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        VertexSet(if n == 16 { u16::MAX } else { (1 << n) - 1 })
    }

    pub fn from_bits(bits: u16) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u16 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 & (1 << v) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn with(self, v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(self.0 | (1 << v))
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1 << v))
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersect(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn minus(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn smallest(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s = s.with(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

/// Iterates the members of a [`VertexSet`] in increasing order.
pub struct Iter(u16);

impl Iterator for Iter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A tournament on `1..=16` vertices.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Tournament {
    n: u8,
    /// dom[v] = bitmask of vertices v beats.
    dom: [u16; MAX_VERTICES],
}

impl Tournament {
    /// Builds an n-vertex tournament from an orientation oracle.
    /// `beats(i, j)` is consulted once per pair i < j and answers whether
    /// i beats j. Panics unless 1 <= n <= 16.
    pub fn from_fn(n: usize, mut beats: impl FnMut(usize, usize) -> bool) -> Self {
        assert!(
            (1..=MAX_VERTICES).contains(&n),
            "tournament size {n} outside 1..=16"
        );
        let mut dom = [0u16; MAX_VERTICES];
        for i in 0..n {
            for j in i + 1..n {
                if beats(i, j) {
                    dom[i] |= 1 << j;
                } else {
                    dom[j] |= 1 << i;
                }
            }
        }
        Tournament { n: n as u8, dom }
    }

    /// The one-vertex tournament.
    pub fn single() -> Self {
        Tournament::from_fn(1, |_, _| unreachable!())
    }

    /// The transitive tournament: i beats j whenever i < j.
    pub fn transitive(n: usize) -> Self {
        Tournament::from_fn(n, |_, _| true)
    }

    /// The rotational tournament on odd n: i beats j iff
    /// (j - i) mod n lies in 1..=(n-1)/2. Panics if n is even or out of range.
    pub fn rotational(n: usize) -> Self {
        assert!(n % 2 == 1, "rotational tournaments need odd size, got {n}");
        Tournament::from_fn(n, |i, j| (j - i) <= (n - 1) / 2)
    }

    /// A uniformly random tournament: every pair is oriented by a fair coin.
    pub fn random(n: usize, rng: &mut impl rand::Rng) -> Self {
        Tournament::from_fn(n, |_, _| rng.random())
    }

    /// Parses an upper-triangle code. The length determines the size;
    /// the empty string is the one-vertex tournament.
    pub fn parse(code: &str) -> Result<Self> {
        let len = code.len();
        let n = (1..=MAX_VERTICES)
            .find(|n| n * (n - 1) / 2 == len)
            .ok_or(Error::CodeLength(len))?;
        let mut bits = Vec::with_capacity(len);
        for (pos, ch) in code.chars().enumerate() {
            match ch {
                '0' => bits.push(false),
                '1' => bits.push(true),
                found => return Err(Error::CodeChar { pos, found }),
            }
        }
        let mut k = 0;
        Ok(Tournament::from_fn(n, |_, _| {
            let b = bits[k];
            k += 1;
            b
        }))
    }

    /// Serializes to the upper-triangle code. `parse` inverts this exactly.
    pub fn code(&self) -> String {
        let n = self.size();
        let mut out = String::with_capacity(n * (n - 1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                out.push(if self.dominates(i, j) { '1' } else { '0' });
            }
        }
        out
    }

    pub fn size(&self) -> usize {
        self.n as usize
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.size()
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.size())
    }

    /// Whether u beats v. Panics if u or v is out of range; false for u == v.
    pub fn dominates(&self, u: usize, v: usize) -> bool {
        assert!(u < self.size() && v < self.size(), "vertex out of range");
        self.dom[u] & (1 << v) != 0
    }

    /// Vertices that v beats. Panics if v is out of range.
    pub fn out_neighbors(&self, v: usize) -> VertexSet {
        assert!(v < self.size(), "vertex {v} out of range");
        VertexSet(self.dom[v])
    }

    /// Vertices that beat v. Panics if v is out of range.
    pub fn in_neighbors(&self, v: usize) -> VertexSet {
        assert!(v < self.size(), "vertex {v} out of range");
        VertexSet(self.vertex_set().bits() & !self.dom[v] & !(1 << v))
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_neighbors(v).len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_neighbors(v).len()
    }

    /// The subtournament induced by `s`, relabeled order-preservingly to
    /// `0..s.len()`. Panics if `s` is empty or not a subset of the vertices.
    pub fn subtournament(&self, s: VertexSet) -> Tournament {
        assert!(!s.is_empty(), "induced subtournament of the empty set");
        assert!(
            s.is_subset_of(self.vertex_set()),
            "subset {s} not within the vertex set"
        );
        let verts = s.to_vec();
        Tournament::from_fn(verts.len(), |i, j| self.dominates(verts[i], verts[j]))
    }

    /// Relabels by `order`, where `order[new] = old`. `order` must be a
    /// permutation of the vertices (panics otherwise).
    pub fn relabeled(&self, order: &[usize]) -> Tournament {
        let n = self.size();
        assert_eq!(order.len(), n, "permutation length mismatch");
        assert_eq!(
            order.iter().copied().collect::<VertexSet>(),
            self.vertex_set(),
            "not a permutation of the vertices"
        );
        Tournament::from_fn(n, |i, j| self.dominates(order[i], order[j]))
    }

    /// Extends by one new vertex (label n) that beats exactly `beats`.
    /// Panics when full or when `beats` is not a subset of the vertices.
    pub fn extended(&self, beats: VertexSet) -> Tournament {
        let n = self.size();
        assert!(n < MAX_VERTICES, "tournament already at maximum size");
        assert!(beats.is_subset_of(self.vertex_set()));
        let mut t = *self;
        t.n += 1;
        t.dom[n] = beats.bits();
        for v in 0..n {
            if !beats.contains(v) {
                t.dom[v] |= 1 << n;
            }
        }
        t
    }

    /// The vertex beating every other vertex, if one exists. A tournament
    /// has at most one such vertex.
    pub fn source(&self) -> Option<usize> {
        let all_but = |v: usize| self.vertex_set().without(v);
        self.vertices()
            .find(|&v| self.out_neighbors(v) == all_but(v))
    }

    /// Whether the tournament is irreducible: no ordered partition (A, B)
    /// into nonempty sets with every A-vertex beating every B-vertex.
    /// Equivalent to strong connectivity; one-vertex tournaments qualify.
    pub fn is_irreducible(&self) -> bool {
        let n = self.size();
        if n == 1 {
            return true;
        }
        let full = self.vertex_set().bits();
        // Forward and backward reachability closures from vertex 0.
        let mut fwd: u16 = 1;
        loop {
            let mut next = fwd;
            for v in VertexSet(fwd).iter() {
                next |= self.dom[v];
            }
            if next == fwd {
                break;
            }
            fwd = next;
        }
        if fwd != full {
            return false;
        }
        let mut bwd: u16 = 1;
        loop {
            let mut next = bwd;
            for v in 0..n {
                if self.dom[v] & bwd != 0 {
                    next |= 1 << v;
                }
            }
            if next == bwd {
                break;
            }
            bwd = next;
        }
        bwd == full
    }

    /// Whether the subtournament induced by `s` is transitive (acyclic).
    /// Uses the score characterization: a k-vertex tournament is transitive
    /// iff its out-degrees are exactly {0, .., k-1}. Vacuously true for
    /// the empty set.
    pub fn is_transitive_on(&self, s: VertexSet) -> bool {
        debug_assert!(s.is_subset_of(self.vertex_set()));
        let mut seen = 0u32;
        for v in s.iter() {
            let d = (self.dom[v] & s.bits()).count_ones();
            if seen & (1 << d) != 0 {
                return false;
            }
            seen |= 1 << d;
        }
        true
    }

    pub fn is_transitive(&self) -> bool {
        self.is_transitive_on(self.vertex_set())
    }

    /// Whether every vertex has a transitive in-neighborhood and a
    /// transitive out-neighborhood.
    pub fn is_locally_transitive(&self) -> bool {
        self.vertices().all(|v| {
            self.is_transitive_on(self.in_neighbors(v))
                && self.is_transitive_on(self.out_neighbors(v))
        })
    }
}

impl fmt::Debug for Tournament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tournament(n={}, code={})", self.n, self.code())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_transitive_three() {
        let t = Tournament::parse("111").unwrap();
        assert_eq!(t.size(), 3);
        assert!(t.dominates(0, 1) && t.dominates(0, 2) && t.dominates(1, 2));
    }

    #[test]
    fn parse_three_cycle() {
        let t = Tournament::parse("010").unwrap();
        assert!(t.dominates(1, 0) && t.dominates(0, 2) && t.dominates(2, 1));
    }

    #[test]
    fn parse_rejects_bad_length_and_chars() {
        assert!(matches!(
            Tournament::parse("0101"),
            Err(Error::CodeLength(4))
        ));
        assert!(matches!(
            Tournament::parse("10a"),
            Err(Error::CodeChar { pos: 2, found: 'a' })
        ));
    }

    #[test]
    fn empty_code_is_single_vertex() {
        let t = Tournament::parse("").unwrap();
        assert_eq!(t.size(), 1);
        assert_eq!(t.code(), "");
    }

    #[test]
    fn code_roundtrips_examples() {
        for code in ["", "0", "1", "111", "010", "000011100001100100010"] {
            assert_eq!(Tournament::parse(code).unwrap().code(), code);
        }
    }

    #[test]
    fn neighbors_of_three_cycle() {
        let t = Tournament::parse("010").unwrap();
        assert_eq!(t.out_neighbors(0), VertexSet::singleton(2));
        assert_eq!(t.in_neighbors(0), VertexSet::singleton(1));
    }

    #[test]
    fn subtournament_examples() {
        let tr = Tournament::parse("111").unwrap();
        assert_eq!(tr.subtournament(VertexSet::from_bits(0b101)).code(), "1");
        let cyc = Tournament::parse("010").unwrap();
        assert_eq!(cyc.subtournament(VertexSet::from_bits(0b011)).code(), "0");
        assert_eq!(tr.subtournament(tr.vertex_set()).code(), "111");
    }

    #[test]
    #[should_panic(expected = "empty set")]
    fn subtournament_rejects_empty() {
        Tournament::parse("111")
            .unwrap()
            .subtournament(VertexSet::EMPTY);
    }

    #[test]
    fn source_examples() {
        assert_eq!(Tournament::transitive(4).source(), Some(0));
        assert_eq!(Tournament::parse("010").unwrap().source(), None);
        assert_eq!(Tournament::single().source(), Some(0));
    }

    #[test]
    fn irreducibility_examples() {
        assert!(Tournament::parse("010").unwrap().is_irreducible());
        assert!(!Tournament::parse("111").unwrap().is_irreducible());
        assert!(Tournament::single().is_irreducible());
        assert!(Tournament::rotational(5).is_irreducible());
    }

    /// Definitional irreducibility: no nonempty proper subset beats its
    /// complement pointwise.
    fn irreducible_by_partitions(t: &Tournament) -> bool {
        let n = t.size();
        if n == 1 {
            return true;
        }
        let full = VertexSet::full(n);
        for bits in 1..full.bits() {
            let a = VertexSet::from_bits(bits);
            let b = full.minus(a);
            let a_beats_b = a
                .iter()
                .all(|u| b.is_subset_of(t.out_neighbors(u).union(a)));
            if a_beats_b {
                return false;
            }
        }
        true
    }

    #[test]
    fn irreducibility_matches_partition_definition_up_to_five() {
        for n in 1..=5usize {
            let pairs = n * (n - 1) / 2;
            for bits in 0u32..(1 << pairs) {
                let mut k = 0;
                let t = Tournament::from_fn(n, |_, _| {
                    let b = bits >> k & 1 == 1;
                    k += 1;
                    b
                });
                assert_eq!(t.is_irreducible(), irreducible_by_partitions(&t));
            }
        }
    }

    #[test]
    fn local_transitivity_examples() {
        assert!(Tournament::transitive(6).is_locally_transitive());
        assert!(Tournament::parse("010").unwrap().is_locally_transitive());
        assert!(Tournament::rotational(5).is_locally_transitive());
        assert!(Tournament::rotational(7).is_locally_transitive());
        // Five vertices where {1,2,3} forms a cycle inside the
        // in-neighborhood of vertex 0.
        let t = Tournament::from_fn(5, |i, j| match (i, j) {
            (0, _) => false,          // 1..4 all beat 0
            (1, 2) | (3, 4) => true,  // 1>2, 3>4
            (2, 3) => true,           // 2>3
            (1, 3) => false,          // 3>1: cycle 1>2>3>1
            _ => true,
        });
        assert!(!t.is_locally_transitive());
    }

    #[test]
    fn rotational_five_orientation() {
        let t = Tournament::rotational(5);
        assert!(t.dominates(0, 1) && t.dominates(0, 2));
        assert!(t.dominates(3, 0) && t.dominates(4, 0));
        assert!(t.dominates(4, 1));
    }

    fn arbitrary_tournament() -> impl Strategy<Value = Tournament> {
        (1usize..=10, any::<u64>()).prop_map(|(n, bits)| {
            let mut k = 0;
            Tournament::from_fn(n, |_, _| {
                let b = bits >> (k % 64) & 1 == 1;
                k += 1;
                b
            })
        })
    }

    proptest! {
        #[test]
        fn code_roundtrip(t in arbitrary_tournament()) {
            let back = Tournament::parse(&t.code()).unwrap();
            prop_assert_eq!(back, t);
        }

        #[test]
        fn neighborhoods_partition(t in arbitrary_tournament(), v in 0usize..10) {
            let v = v % t.size();
            let inn = t.in_neighbors(v);
            let out = t.out_neighbors(v);
            prop_assert!(inn.intersect(out).is_empty());
            prop_assert!(!inn.contains(v) && !out.contains(v));
            prop_assert_eq!(inn.union(out).with(v), t.vertex_set());
        }

        #[test]
        fn at_most_one_source(t in arbitrary_tournament()) {
            let sources = t
                .vertices()
                .filter(|&v| t.out_neighbors(v) == t.vertex_set().without(v))
                .count();
            prop_assert!(sources <= 1);
            prop_assert_eq!(t.source().is_some(), sources == 1);
        }
    }
}
