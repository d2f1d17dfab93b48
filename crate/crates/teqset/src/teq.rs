//! The tournament equilibrium set and minimal retentive sets.
//!
//! A nonempty vertex set A is retentive when for every v in A with a
//! nonempty in-neighborhood, the equilibrium set of the subtournament
//! induced by that in-neighborhood lies inside A. The equilibrium set
//! teq(T) is the union of the inclusion-minimal retentive sets.
//!
//! The computation builds the requirement digraph, which has an arc from v
//! to every member of teq(T[in-neighbors of v]). Retentive sets are exactly
//! the nonempty sets closed under these arcs, so the minimal ones are the
//! sink strongly connected components: a cross-check against definitional
//! subset enumeration lives in [`Solver::minimal_retentive_sets_bruteforce`].
//!
//! Recursion goes through strictly smaller in-neighborhood subtournaments
//! and is memoized on canonical keys, so structurally repeated
//! subtournaments are solved once per isomorphism class.

use dashmap::DashMap;

use crate::error::{Error, Result};
use crate::iso::{self, CanonicalKey};
use crate::tournament::{Tournament, VertexSet};

/// Everything teq computation yields for one tournament.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RetentiveAnalysis {
    /// The minimal retentive sets, ascending by size then packed bits.
    pub minimal_sets: Vec<VertexSet>,
    /// Union of the minimal sets.
    pub teq: VertexSet,
    /// Whether exactly one minimal retentive set exists.
    pub schwartz_ok: bool,
}

/// The requirement digraph: `requirement_of(v)` is teq of the
/// subtournament induced by v's in-neighbors, in host labels (empty
/// exactly when v has no in-neighbors).
#[derive(Clone, Debug)]
pub struct RequirementDigraph {
    reqs: Vec<VertexSet>,
}

impl RequirementDigraph {
    pub fn size(&self) -> usize {
        self.reqs.len()
    }

    pub fn requirement_of(&self, v: usize) -> VertexSet {
        self.reqs[v]
    }

    /// Strongly connected components with no outgoing arcs. These are
    /// exactly the minimal retentive sets; sorted by size, then bits.
    pub fn sink_components(&self) -> Vec<VertexSet> {
        let mut sinks: Vec<VertexSet> = components(&self.reqs)
            .into_iter()
            .filter(|&c| {
                c.iter()
                    .all(|v| self.reqs[v].is_subset_of(c))
            })
            .collect();
        sinks.sort_unstable_by_key(|s| (s.len(), s.bits()));
        sinks
    }
}

/// Tarjan's algorithm over bitmask adjacency.
fn components(adj: &[VertexSet]) -> Vec<VertexSet> {
    struct State<'a> {
        adj: &'a [VertexSet],
        index: [i32; 16],
        low: [u32; 16],
        on_stack: u16,
        stack: Vec<usize>,
        next: u32,
        comps: Vec<VertexSet>,
    }
    fn connect(s: &mut State, v: usize) {
        s.index[v] = s.next as i32;
        s.low[v] = s.next;
        s.next += 1;
        s.stack.push(v);
        s.on_stack |= 1 << v;
        for w in s.adj[v].iter() {
            if s.index[w] < 0 {
                connect(s, w);
                s.low[v] = s.low[v].min(s.low[w]);
            } else if s.on_stack & (1 << w) != 0 {
                s.low[v] = s.low[v].min(s.index[w] as u32);
            }
        }
        if s.low[v] == s.index[v] as u32 {
            // Root of a component: pop it off the stack.
            let mut comp = VertexSet::EMPTY;
            loop {
                let w = s.stack.pop().unwrap();
                s.on_stack &= !(1 << w);
                comp = comp.with(w);
                if w == v {
                    break;
                }
            }
            s.comps.push(comp);
        }
    }
    let mut s = State {
        adj,
        index: [-1; 16],
        low: [0; 16],
        on_stack: 0,
        stack: Vec::new(),
        next: 0,
        comps: Vec::new(),
    };
    for v in 0..adj.len() {
        if s.index[v] < 0 {
            connect(&mut s, v);
        }
    }
    s.comps
}

/// Computes equilibrium sets, optionally memoizing results per canonical
/// key. The cache is concurrency-safe and shared across every query made
/// through the same solver; [`Solver::uncached`] exists so differential
/// tests can compare against memo-free recursion.
pub struct Solver {
    cache: Option<DashMap<CanonicalKey, u16>>,
}

impl Default for Solver {
    fn default() -> Self {
        Solver::new()
    }
}

impl Solver {
    pub fn new() -> Self {
        Solver {
            cache: Some(DashMap::new()),
        }
    }

    pub fn uncached() -> Self {
        Solver { cache: None }
    }

    /// teq(t): the union of the minimal retentive sets.
    pub fn teq(&self, t: &Tournament) -> VertexSet {
        if t.size() == 1 {
            return VertexSet::singleton(0);
        }
        match &self.cache {
            Some(cache) => {
                let (key, order) = iso::canonical_form(t);
                if let Some(hit) = cache.get(&key) {
                    let mask = VertexSet::from_bits(*hit);
                    return mask.iter().map(|p| order[p]).collect();
                }
                // Solve the canonical representative so every isomorphic
                // occurrence hits the same entry.
                let rep = t.relabeled(&order);
                let tau = self.teq_by_sinks(&rep);
                cache.insert(key, tau.bits());
                tau.iter().map(|p| order[p]).collect()
            }
            None => self.teq_by_sinks(t),
        }
    }

    fn teq_by_sinks(&self, t: &Tournament) -> VertexSet {
        self.requirement_digraph(t)
            .sink_components()
            .into_iter()
            .fold(VertexSet::EMPTY, VertexSet::union)
    }

    /// The requirement digraph of `t` (one recursive teq per vertex).
    pub fn requirement_digraph(&self, t: &Tournament) -> RequirementDigraph {
        let reqs = t
            .vertices()
            .map(|v| {
                let inn = t.in_neighbors(v);
                if inn.is_empty() {
                    return VertexSet::EMPTY;
                }
                let verts = inn.to_vec();
                let tau = self.teq(&t.subtournament(inn));
                tau.iter().map(|p| verts[p]).collect()
            })
            .collect();
        RequirementDigraph { reqs }
    }

    /// Full analysis: minimal retentive sets, their union, and whether the
    /// tournament has exactly one minimal set.
    pub fn analyze(&self, t: &Tournament) -> RetentiveAnalysis {
        let minimal_sets = self.requirement_digraph(t).sink_components();
        let teq = minimal_sets
            .iter()
            .fold(VertexSet::EMPTY, |a, &s| a.union(s));
        let analysis = RetentiveAnalysis {
            schwartz_ok: minimal_sets.len() == 1,
            minimal_sets,
            teq,
        };
        #[cfg(debug_assertions)]
        debug_check(t, &analysis);
        analysis
    }

    /// Definitional oracle: enumerates every nonempty subset in size order,
    /// keeps the retentive ones, and filters to inclusion-minimal. Refuses
    /// sizes above 8.
    pub fn minimal_retentive_sets_bruteforce(&self, t: &Tournament) -> Result<Vec<VertexSet>> {
        let n = t.size();
        if n > 8 {
            return Err(Error::OracleSize(n));
        }
        let req = self.requirement_digraph(t);
        let mut retentive: Vec<u16> = (1..1u32 << n)
            .map(|m| m as u16)
            .filter(|&m| {
                VertexSet::from_bits(m)
                    .iter()
                    .all(|v| req.requirement_of(v).bits() & !m == 0)
            })
            .collect();
        retentive.sort_unstable_by_key(|m| (m.count_ones(), *m));
        let mut minimal: Vec<u16> = Vec::new();
        for &m in &retentive {
            if !minimal.iter().any(|&b| b & !m == 0) {
                minimal.push(m);
            }
        }
        Ok(minimal.into_iter().map(VertexSet::from_bits).collect())
    }
}

/// Whether {a, b, c} is a minimal retentive set of `t`: the three vertices
/// form a directed triangle and no other vertex beats two or more of them.
/// Panics unless a, b, c are distinct in-range vertices.
pub fn is_minimal_retentive_triple(t: &Tournament, a: usize, b: usize, c: usize) -> bool {
    assert!(a != b && b != c && a != c, "triple vertices must be distinct");
    let triangle = (t.dominates(a, b) && t.dominates(b, c) && t.dominates(c, a))
        || (t.dominates(a, c) && t.dominates(c, b) && t.dominates(b, a));
    if !triangle {
        return false;
    }
    let triple = VertexSet::singleton(a).with(b).with(c);
    t.vertices()
        .filter(|v| !triple.contains(*v))
        .all(|v| t.out_neighbors(v).intersect(triple).len() <= 1)
}

/// How many 3-element minimal retentive sets `t` has (never more than one).
pub fn count_size3_minimal_sets(t: &Tournament) -> usize {
    let n = t.size();
    let mut count = 0;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if is_minimal_retentive_triple(t, a, b, c) {
                    count += 1;
                }
            }
        }
    }
    count
}

/// Structural facts that hold for every analysis; violations are bugs.
#[cfg(debug_assertions)]
fn debug_check(t: &Tournament, analysis: &RetentiveAnalysis) {
    assert!(!analysis.minimal_sets.is_empty());
    let mut seen = VertexSet::EMPTY;
    for &s in &analysis.minimal_sets {
        assert!(!s.is_empty());
        assert!(seen.intersect(s).is_empty(), "minimal sets must be disjoint");
        seen = seen.union(s);
        assert!(
            s.len() != 2 && s.len() != 4,
            "no minimal retentive set has size 2 or 4"
        );
        assert!(
            t.subtournament(s).is_irreducible(),
            "minimal sets induce irreducible subtournaments"
        );
        assert_eq!(
            s.len() == 1,
            s.smallest() == t.source(),
            "a singleton minimal set is exactly the source"
        );
    }
    if analysis.teq.len() == 3 {
        assert_eq!(analysis.minimal_sets.len(), 1);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{RngCore, SeedableRng};

    #[test]
    fn single_vertex() {
        let s = Solver::new();
        let t = Tournament::single();
        let a = s.analyze(&t);
        assert_eq!(a.minimal_sets, vec![VertexSet::singleton(0)]);
        assert!(a.schwartz_ok);
    }

    #[test]
    fn transitive_tournaments_have_source_singleton() {
        let s = Solver::new();
        for n in 1..=8 {
            let a = s.analyze(&Tournament::transitive(n));
            assert_eq!(a.minimal_sets, vec![VertexSet::singleton(0)]);
            assert_eq!(a.teq, VertexSet::singleton(0));
        }
    }

    #[test]
    fn three_cycle_retains_everything() {
        let s = Solver::new();
        let t = Tournament::parse("010").unwrap();
        let a = s.analyze(&t);
        assert_eq!(a.minimal_sets, vec![t.vertex_set()]);
        assert!(a.schwartz_ok);
    }

    #[test]
    fn requirement_digraph_examples() {
        let s = Solver::new();
        let tr = Tournament::transitive(4);
        let req = s.requirement_digraph(&tr);
        assert_eq!(req.requirement_of(0), VertexSet::EMPTY);
        for v in 1..4 {
            assert_eq!(req.requirement_of(v), VertexSet::singleton(0));
        }
        let cyc = Tournament::parse("010").unwrap();
        let req = s.requirement_digraph(&cyc);
        for v in 0..3 {
            assert_eq!(req.requirement_of(v), cyc.in_neighbors(v));
        }
    }

    #[test]
    fn requirements_point_into_in_neighborhoods() {
        let s = Solver::new();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let n = 1 + (rng.next_u64() % 8) as usize;
            let t = Tournament::random(n, &mut rng);
            let req = s.requirement_digraph(&t);
            for v in t.vertices() {
                assert!(req.requirement_of(v).is_subset_of(t.in_neighbors(v)));
                assert_eq!(req.requirement_of(v).is_empty(), t.in_neighbors(v).is_empty());
            }
        }
    }

    #[test]
    fn sink_components_match_bruteforce_up_to_five() {
        let s = Solver::new();
        for n in 1..=5 {
            for t in crate::iso::enumerate(n).unwrap() {
                let fast = s.analyze(&t).minimal_sets;
                let brute = s.minimal_retentive_sets_bruteforce(&t).unwrap();
                assert_eq!(fast, brute, "{t:?}");
            }
        }
    }

    #[test]
    fn cached_and_uncached_agree() {
        let cached = Solver::new();
        let uncached = Solver::uncached();
        for t in crate::iso::enumerate(6).unwrap() {
            assert_eq!(cached.teq(&t), uncached.teq(&t), "{t:?}");
        }
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
        for _ in 0..50 {
            let t = Tournament::random(7, &mut rng);
            assert_eq!(cached.teq(&t), uncached.teq(&t), "{t:?}");
        }
    }

    #[test]
    fn bruteforce_refuses_large_sizes() {
        let s = Solver::new();
        assert!(matches!(
            s.minimal_retentive_sets_bruteforce(&Tournament::transitive(9)),
            Err(Error::OracleSize(9))
        ));
    }

    #[test]
    fn triple_examples() {
        let cyc = Tournament::parse("010").unwrap();
        assert!(is_minimal_retentive_triple(&cyc, 0, 1, 2));
        let tr = Tournament::transitive(3);
        assert!(!is_minimal_retentive_triple(&tr, 0, 1, 2));
        // Triangle {0,1,2} over a beaten apex 3.
        let apex = Tournament::from_fn(4, |i, j| match (i, j) {
            (0, 1) => true,
            (1, 2) => true,
            (0, 2) => false,
            _ => true, // 0,1,2 all beat 3
        });
        assert!(is_minimal_retentive_triple(&apex, 0, 1, 2));
        assert_eq!(count_size3_minimal_sets(&apex), 1);
        assert_eq!(count_size3_minimal_sets(&tr), 0);
    }

    #[test]
    fn triples_match_bruteforce_membership_up_to_five() {
        let s = Solver::new();
        for n in 3..=5 {
            for t in crate::iso::enumerate(n).unwrap() {
                let brute = s.minimal_retentive_sets_bruteforce(&t).unwrap();
                for a in 0..n {
                    for b in a + 1..n {
                        for c in b + 1..n {
                            let set = VertexSet::singleton(a).with(b).with(c);
                            assert_eq!(
                                is_minimal_retentive_triple(&t, a, b, c),
                                brute.contains(&set),
                                "{t:?} {set}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn minimal_sets_are_sorted() {
        let s = Solver::new();
        for t in crate::iso::enumerate(6).unwrap() {
            let sets = s.analyze(&t).minimal_sets;
            let mut sorted = sets.clone();
            sorted.sort_by_key(|s| (s.len(), s.bits()));
            assert_eq!(sets, sorted);
        }
    }
}
