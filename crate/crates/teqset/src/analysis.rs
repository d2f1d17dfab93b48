//! Censuses, exhaustive sweeps, and conjecture checks.
//!
//! The census pipeline reproduces the filter-and-verify computation that
//! pins down how many irreducible tournaments of each size retain all
//! their vertices: a subset filter eliminates tournaments with a proper
//! 3-locally-bounded retentive set of low-in-degree vertices, and full
//! mode verifies each survivor's unique minimal retentive set is the whole
//! vertex set. The sweeps check uniqueness of minimal retentive sets
//! exhaustively and on generated families, and the conjecture checkers
//! hunt for counterexamples rather than assuming any.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::fmt;

use crate::domination::{tri_captain, DominationGraph};
use crate::error::{Error, Result};
use crate::iso::{self, CanonicalKey};
use crate::teq::{RetentiveAnalysis, Solver};
use crate::tournament::{Tournament, VertexSet};

/// How much of the census pipeline to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CensusMode {
    /// Subset filter only; survivor counts are upper bounds.
    FilterOnly,
    /// Subset filter, then verify each survivor's unique minimal
    /// retentive set is the full vertex set. Exact, but limited to n <= 8.
    Full,
}

impl fmt::Display for CensusMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CensusMode::FilterOnly => "filter-only",
            CensusMode::Full => "full",
        })
    }
}

#[derive(Clone, Copy, Debug)]
pub struct CensusOptions {
    pub mode: CensusMode,
    /// Censuses at n >= 9 examine hundreds of thousands of classes or
    /// more; they run only when explicitly enabled.
    pub allow_long_run: bool,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            mode: CensusMode::Full,
            allow_long_run: false,
        }
    }
}

/// Outcome of a census run over all irreducible classes of one size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FilterReport {
    pub n: usize,
    pub mode: CensusMode,
    /// Irreducible isomorphism classes examined.
    pub total: usize,
    /// Canonical keys of the classes passing every stage, ascending.
    pub survivors: Vec<CanonicalKey>,
    /// Eliminations per stage, in pipeline order.
    pub eliminated_by: Vec<(String, usize)>,
}

impl fmt::Display for FilterReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# beta-census n={} mode={}", self.n, self.mode)?;
        writeln!(f, "# examined irreducible classes: {}", self.total)?;
        for (stage, count) in &self.eliminated_by {
            writeln!(f, "# eliminated by {stage}: {count}")?;
        }
        writeln!(f, "# survivors: {}", self.survivors.len())?;
        for key in &self.survivors {
            writeln!(f, "{}", key.code())?;
        }
        Ok(())
    }
}

/// A tournament with at least two minimal retentive sets, with enough
/// attached data to recheck the claim independently.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoexistenceRecord {
    /// Canonical key of the tournament; sets use the canonical labeling.
    pub tournament: CanonicalKey,
    /// Sizes of the minimal retentive sets, ascending.
    pub sizes: Vec<usize>,
    /// The minimal retentive sets themselves, ordered by (size, bits).
    pub sets: Vec<VertexSet>,
    /// Canonical keys of the subtournaments the sets induce, aligned
    /// with `sets`.
    pub classes: Vec<CanonicalKey>,
    /// Structural-audit findings on the tournament, empty when every
    /// checked property holds even on this counterexample.
    pub audit: Vec<String>,
}

impl fmt::Display for CoexistenceRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "tournament={} sizes={:?} sets=[{}] classes=[{}]",
            self.tournament.code(),
            self.sizes,
            self.sets
                .iter()
                .map(|s| s.to_string())
                .collect::<Vec<_>>()
                .join(","),
            self.classes
                .iter()
                .map(|k| k.code())
                .collect::<Vec<_>>()
                .join(","),
        )?;
        if !self.audit.is_empty() {
            write!(f, " audit=[{}]", self.audit.join("; "))?;
        }
        Ok(())
    }
}

/// One tournament falsifying a swept claim, with its minimal retentive
/// sets so the claim can be rechecked from the certificate alone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub tournament: Tournament,
    pub minimal_sets: Vec<VertexSet>,
    pub witness: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "code={} minimal_sets=[{}] witness={}",
            self.tournament.code(),
            self.minimal_sets
                .iter()
                .map(|s| s.to_string())
                .collect::<Vec<_>>()
                .join(","),
            self.witness,
        )
    }
}

/// Result of a verification sweep: how many qualifying tournaments were
/// checked and every violation found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepVerdict {
    pub examined: usize,
    pub violations: Vec<Violation>,
}

impl SweepVerdict {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Counterexample lists for the three open uniqueness claims, over all
/// isomorphism classes up to a size bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureSweep {
    /// Isomorphism classes examined.
    pub examined: usize,
    /// A 3-element minimal retentive set coexisting with another
    /// minimal retentive set.
    pub size3_unique: Vec<Violation>,
    /// A directed cycle C in the domination digraph whose vertex set is
    /// not the unique minimal retentive set.
    pub cycle_unique: Vec<Violation>,
    /// A captain vertex outside the tournament equilibrium set.
    pub captains_in_teq: Vec<Violation>,
}

/// Whether `s` is a retentive set of `t` in which every member's
/// in-neighborhood equilibrium set has at most `c` elements: for each
/// v in s, the equilibrium set of the subtournament on v's in-neighbors
/// must lie inside s and have size at most c. Panics if s is empty or
/// not a subset of the vertices.
pub fn is_locally_bounded_retentive(
    solver: &Solver,
    t: &Tournament,
    s: VertexSet,
    c: usize,
) -> bool {
    assert!(!s.is_empty(), "retentive-set candidates are nonempty");
    assert!(s.is_subset_of(t.vertex_set()), "candidate not a vertex subset");
    let reqs = solver.requirement_digraph(t);
    s.iter().all(|v| {
        let req = reqs.requirement_of(v);
        req.len() <= c && req.is_subset_of(s)
    })
}

/// The captain-or-tri-captain shortcut for the 3-bounded case of
/// [`is_locally_bounded_retentive`]: every member of `s` must have an
/// empty in-neighborhood, a captain inside s, or a tri-captain inside s.
/// Agrees with the definitional check on sets whose members all have
/// in-degree at most 5; see the differential tests. Panics if s is empty
/// or not a subset of the vertices.
pub fn fast_3bounded_check(t: &Tournament, s: VertexSet) -> bool {
    assert!(!s.is_empty(), "retentive-set candidates are nonempty");
    assert!(s.is_subset_of(t.vertex_set()), "candidate not a vertex subset");
    let g = DominationGraph::of(t);
    s.iter().all(|v| {
        if t.in_neighbors(v).is_empty() {
            return true;
        }
        // A captain is the source of the in-neighborhood, and a
        // tri-captain requires a sourceless triangle there, so the two
        // branches never both apply.
        match g.captain_of(v) {
            Some(u) => s.contains(u),
            None => tri_captain(t, v).is_some_and(|tri| tri.is_subset_of(s)),
        }
    })
}

/// Whether some proper nonempty subset of the vertices is a
/// 3-locally-bounded retentive set whose members all have in-degree at
/// most 5 in `t`. A tournament with such a subset cannot be induced by
/// any minimal retentive set, so the census eliminates it.
///
/// Instead of enumerating subsets, this grows the requirement closure of
/// each qualifying vertex: the closure is the smallest retentive set
/// containing that vertex, so a qualifying subset exists iff some
/// closure stays within the qualifying vertices and short of the full
/// vertex set.
pub fn has_proper_bounded_retentive_subset(solver: &Solver, t: &Tournament) -> bool {
    let reqs = solver.requirement_digraph(t);
    let full = t.vertex_set();
    let ok: VertexSet = t
        .vertices()
        .filter(|&v| t.in_degree(v) <= 5 && reqs.requirement_of(v).len() <= 3)
        .collect();
    for v in ok.iter() {
        let mut closure = VertexSet::singleton(v);
        let mut stack = vec![v];
        let mut inside = true;
        while let Some(u) = stack.pop() {
            if !ok.contains(u) {
                inside = false;
                break;
            }
            for w in reqs.requirement_of(u).minus(closure).iter() {
                closure = closure.with(w);
                stack.push(w);
            }
        }
        if inside && closure != full {
            return true;
        }
    }
    false
}

/// Whether the domination digraph of `t` contains a directed cycle that
/// does not span the whole vertex set. When it does, no superset
/// tournament can have the full vertex set as a minimal retentive set:
/// the cycle members already form a smaller retentive set (each one's
/// requirement is its captain, which sits on the cycle), so the census
/// eliminates such tournaments outright. A spanning cycle carries no
/// such witness and is left alone.
pub fn has_nonspanning_domination_cycle(t: &Tournament) -> bool {
    DominationGraph::of(t)
        .directed_cycles()
        .iter()
        .any(|cycle| cycle.len() < t.size())
}

const STAGE_DOMINATION_CYCLE: &str = "non-spanning-domination-cycle";
const STAGE_SUBSET_FILTER: &str = "bounded-retentive-subset";
const STAGE_FULL_VERIFICATION: &str = "full-verification";

/// Runs the census over all irreducible isomorphism classes of size `n`:
/// the non-spanning domination-cycle check, then the bounded-subset
/// filter, then (in full mode) verification that the unique minimal
/// retentive set is the whole vertex set. Sizes 4..=10; full mode up
/// to 8; sizes 9 and 10 require the long-run opt-in.
pub fn beta_census(solver: &Solver, n: usize, options: CensusOptions) -> Result<FilterReport> {
    if !(4..=10).contains(&n) {
        return Err(Error::SizeRange {
            what: "census",
            size: n,
            range: 4..=10,
        });
    }
    if options.mode == CensusMode::Full && n > 8 {
        return Err(Error::SizeRange {
            what: "full-mode census",
            size: n,
            range: 4..=8,
        });
    }
    if n >= 9 && !options.allow_long_run {
        return Err(Error::LongRunRequired(n));
    }
    let reps = iso::enumerate_irreducible(n)?;
    const SURVIVED: u8 = 0;
    const BY_CYCLE: u8 = 1;
    const BY_FILTER: u8 = 2;
    const BY_VERIFICATION: u8 = 3;
    let verdicts: Vec<u8> = reps
        .par_iter()
        .map(|t| {
            if has_nonspanning_domination_cycle(t) {
                BY_CYCLE
            } else if has_proper_bounded_retentive_subset(solver, t) {
                BY_FILTER
            } else if options.mode == CensusMode::Full
                && solver.analyze(t).minimal_sets != [t.vertex_set()]
            {
                BY_VERIFICATION
            } else {
                SURVIVED
            }
        })
        .collect();
    let survivors: Vec<CanonicalKey> = reps
        .iter()
        .zip(&verdicts)
        .filter(|&(_, &v)| v == SURVIVED)
        .map(|(t, _)| iso::own_key(t))
        .collect();
    let count = |code: u8| verdicts.iter().filter(|&&v| v == code).count();
    let mut eliminated_by = vec![
        (STAGE_DOMINATION_CYCLE.to_string(), count(BY_CYCLE)),
        (STAGE_SUBSET_FILTER.to_string(), count(BY_FILTER)),
    ];
    if options.mode == CensusMode::Full {
        eliminated_by.push((STAGE_FULL_VERIFICATION.to_string(), count(BY_VERIFICATION)));
    }
    let report = FilterReport {
        n,
        mode: options.mode,
        total: reps.len(),
        survivors,
        eliminated_by,
    };
    assert_eq!(
        report.total,
        report.survivors.len() + report.eliminated_by.iter().map(|(_, c)| c).sum::<usize>(),
        "census accounting must balance"
    );
    Ok(report)
}

/// Analyzes every isomorphism class of size `n` (1..=9) and returns a
/// record for each tournament with two or more minimal retentive sets.
/// An empty result means every tournament of that size has a unique
/// minimal retentive set.
pub fn schwartz_exhaustive(solver: &Solver, n: usize) -> Result<Vec<CoexistenceRecord>> {
    if !(1..=9).contains(&n) {
        return Err(Error::SizeRange {
            what: "exhaustive uniqueness sweep",
            size: n,
            range: 1..=9,
        });
    }
    let reps = iso::enumerate(n)?;
    Ok(reps
        .par_iter()
        .filter_map(|t| {
            let analysis = solver.analyze(t);
            (analysis.minimal_sets.len() >= 2).then(|| coexistence_record(solver, t, &analysis))
        })
        .collect())
}

fn coexistence_record(
    solver: &Solver,
    t: &Tournament,
    analysis: &RetentiveAnalysis,
) -> CoexistenceRecord {
    let audit = match audit_minimal_set_structure(solver, t) {
        Ok(_) => Vec::new(),
        Err(e) => vec![e.to_string()],
    };
    CoexistenceRecord {
        tournament: iso::canonical_key(t),
        sizes: analysis.minimal_sets.iter().map(|s| s.len()).collect(),
        sets: analysis.minimal_sets.clone(),
        classes: analysis
            .minimal_sets
            .iter()
            .map(|&s| iso::canonical_key(&t.subtournament(s)))
            .collect(),
        audit,
    }
}

/// Generates one random locally transitive tournament of size at most
/// `n_max` (at most 15): take a rotational tournament of odd size, delete
/// random vertices down to the target size (the property is hereditary),
/// apply random arc flips kept only when the property survives, then
/// relabel randomly. The result is re-validated against the definition;
/// failures retry up to a bound.
pub fn random_locally_transitive(rng: &mut impl Rng, n_max: usize) -> Result<Tournament> {
    if !(1..=15).contains(&n_max) {
        return Err(Error::SizeRange {
            what: "locally transitive generation",
            size: n_max,
            range: 1..=15,
        });
    }
    const ATTEMPTS: usize = 8;
    for _ in 0..ATTEMPTS {
        let n = rng.random_range(1..=n_max);
        let odd = if n % 2 == 1 { n } else { n + 1 };
        let mut t = Tournament::rotational(odd);
        while t.size() > n {
            let v = rng.random_range(0..t.size());
            t = t.subtournament(t.vertex_set().without(v));
        }
        for _ in 0..n {
            let i = rng.random_range(0..n);
            let j = rng.random_range(0..n);
            if i == j {
                continue;
            }
            let flipped = Tournament::from_fn(n, |a, b| {
                if (a, b) == (i.min(j), i.max(j)) {
                    !t.dominates(a, b)
                } else {
                    t.dominates(a, b)
                }
            });
            if flipped.is_locally_transitive() {
                t = flipped;
            }
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(rng);
        let t = t.relabeled(&order);
        if t.is_locally_transitive() {
            return Ok(t);
        }
    }
    Err(Error::Generation(ATTEMPTS))
}

/// Generates `trials` random locally transitive tournaments of size at
/// most `n_max` and checks each has a unique minimal retentive set.
pub fn verify_locally_transitive(
    solver: &Solver,
    trials: usize,
    n_max: usize,
    seed: u64,
) -> Result<SweepVerdict> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut violations = Vec::new();
    for _ in 0..trials {
        let t = random_locally_transitive(&mut rng, n_max)?;
        assert!(t.is_locally_transitive(), "generator broke its contract");
        let analysis = solver.analyze(&t);
        if !analysis.schwartz_ok {
            violations.push(Violation {
                tournament: t,
                minimal_sets: analysis.minimal_sets,
                witness: "locally transitive tournament with several minimal retentive sets"
                    .to_string(),
            });
        }
    }
    Ok(SweepVerdict {
        examined: trials,
        violations,
    })
}

/// Over every isomorphism class up to `n_max` (at most 8) whose
/// domination digraph contains a spanning directed cycle, checks the
/// unique minimal retentive set is the whole vertex set. `examined`
/// counts the qualifying tournaments.
pub fn verify_hamiltonian_domcycle(solver: &Solver, n_max: usize) -> Result<SweepVerdict> {
    if !(1..=8).contains(&n_max) {
        return Err(Error::SizeRange {
            what: "spanning-cycle sweep",
            size: n_max,
            range: 1..=8,
        });
    }
    let mut examined = 0;
    let mut violations = Vec::new();
    for n in 1..=n_max {
        let outcomes: Vec<Option<Violation>> = iso::enumerate(n)?
            .par_iter()
            .filter(|t| DominationGraph::of(t).has_spanning_cycle())
            .map(|t| {
                let analysis = solver.analyze(t);
                (analysis.minimal_sets != [t.vertex_set()]).then(|| Violation {
                    tournament: *t,
                    minimal_sets: analysis.minimal_sets,
                    witness: "spanning domination cycle without full-set minimal retentive set"
                        .to_string(),
                })
            })
            .collect();
        examined += outcomes.len();
        violations.extend(outcomes.into_iter().flatten());
    }
    Ok(SweepVerdict {
        examined,
        violations,
    })
}

/// Sweeps every isomorphism class up to `n_max` (at most 8) for
/// counterexamples to the three uniqueness claims. Nothing is assumed:
/// each claim is checked on each tournament and hits are returned with
/// certificates.
pub fn check_conjectures(solver: &Solver, n_max: usize) -> Result<ConjectureSweep> {
    if !(1..=8).contains(&n_max) {
        return Err(Error::SizeRange {
            what: "conjecture sweep",
            size: n_max,
            range: 1..=8,
        });
    }
    let mut sweep = ConjectureSweep {
        examined: 0,
        size3_unique: Vec::new(),
        cycle_unique: Vec::new(),
        captains_in_teq: Vec::new(),
    };
    for n in 1..=n_max {
        let reps = iso::enumerate(n)?;
        sweep.examined += reps.len();
        let findings: Vec<[Vec<Violation>; 3]> = reps
            .par_iter()
            .map(|t| {
                let analysis = solver.analyze(t);
                let g = DominationGraph::of(t);
                let mut found: [Vec<Violation>; 3] = Default::default();
                let certify = |witness: String| Violation {
                    tournament: *t,
                    minimal_sets: analysis.minimal_sets.clone(),
                    witness,
                };
                if analysis.minimal_sets.len() > 1 {
                    if let Some(triple) =
                        analysis.minimal_sets.iter().find(|s| s.len() == 3)
                    {
                        found[0].push(certify(format!(
                            "size-3 minimal retentive set {triple} is not unique"
                        )));
                    }
                }
                for cycle in g.directed_cycles() {
                    let on_cycle: VertexSet = cycle.iter().copied().collect();
                    if analysis.minimal_sets != [on_cycle] {
                        found[1].push(certify(format!(
                            "domination cycle {cycle:?} is not the unique minimal retentive set"
                        )));
                    }
                }
                let captains: VertexSet =
                    t.vertices().filter_map(|v| g.captain_of(v)).collect();
                if !captains.is_subset_of(analysis.teq) {
                    found[2].push(certify(format!(
                        "captain vertices {} outside equilibrium set {}",
                        captains.minus(analysis.teq),
                        analysis.teq
                    )));
                }
                found
            })
            .collect();
        for [c1, c2, c3] in findings {
            sweep.size3_unique.extend(c1);
            sweep.cycle_unique.extend(c2);
            sweep.captains_in_teq.extend(c3);
        }
    }
    Ok(sweep)
}

/// Analyzes `t` and checks every structural property minimal retentive
/// sets are known to satisfy, returning the analysis when all hold:
///
/// - sets are nonempty, pairwise disjoint, never of size 2 or 4, and
///   induce irreducible subtournaments;
/// - a singleton minimal set exists exactly when the tournament has a
///   source, and is then the only minimal set;
/// - at most one minimal set has size 3, and a 3-element equilibrium
///   set implies a unique minimal set;
/// - the domination digraph of each induced subtournament is a subgraph
///   of the host's, its directed cycles span the whole set, no vertex of
///   the host beats both ends of any of its arcs, and a member with a
///   tri-captain there and in-set in-degree at most 5 has that
///   tri-captain as the equilibrium set of its host in-neighborhood.
pub fn audit_minimal_set_structure(
    solver: &Solver,
    t: &Tournament,
) -> Result<RetentiveAnalysis> {
    let analysis = solver.analyze(t);
    let fail = |reason: String, edges: Vec<(usize, usize)>| Error::Structure { reason, edges };
    let sets = &analysis.minimal_sets;
    if sets.is_empty() {
        return Err(fail("no minimal retentive set found".into(), vec![]));
    }
    let host_graph = DominationGraph::of(t);
    let reqs = solver.requirement_digraph(t);
    let mut seen = VertexSet::EMPTY;
    for &r in sets {
        if r.is_empty() {
            return Err(fail("empty minimal retentive set".into(), vec![]));
        }
        if !seen.intersect(r).is_empty() {
            return Err(fail(format!("minimal retentive sets overlap at {r}"), vec![]));
        }
        seen = seen.union(r);
        if matches!(r.len(), 2 | 4) {
            return Err(fail(format!("minimal retentive set {r} has size 2 or 4"), vec![]));
        }
        let sub = t.subtournament(r);
        if !sub.is_irreducible() {
            return Err(fail(format!("minimal retentive set {r} induces a reducible subtournament"), vec![]));
        }
        let verts = r.to_vec();
        let sub_graph = DominationGraph::of(&sub);
        let sub_arcs: Vec<(usize, usize)> = sub_graph
            .arcs()
            .into_iter()
            .map(|(u, v)| (verts[u], verts[v]))
            .collect();
        for &(u, v) in &sub_arcs {
            if host_graph.captain_of(v) != Some(u) {
                return Err(fail(
                    format!("captain arc {u}>{v} of the induced subtournament missing from the host domination graph"),
                    sub_arcs.clone(),
                ));
            }
            if let Some(w) = t
                .vertices()
                .find(|&w| w != u && w != v && t.dominates(w, u) && t.dominates(w, v))
            {
                return Err(fail(
                    format!("vertex {w} beats both ends of induced captain arc {u}>{v}"),
                    sub_arcs.clone(),
                ));
            }
        }
        for cycle in sub_graph.directed_cycles() {
            if cycle.len() != r.len() {
                return Err(fail(
                    format!("induced domination cycle misses part of the minimal retentive set {r}"),
                    sub_arcs.clone(),
                ));
            }
        }
        for v_local in sub.vertices() {
            if sub.in_degree(v_local) > 5 {
                continue;
            }
            if let Some(tri) = tri_captain(&sub, v_local) {
                let lifted: VertexSet = tri.iter().map(|x| verts[x]).collect();
                let host_req = reqs.requirement_of(verts[v_local]);
                if host_req != lifted {
                    return Err(fail(
                        format!(
                            "member {} has tri-captain {lifted} in its minimal set but in-neighborhood equilibrium set {host_req}",
                            verts[v_local]
                        ),
                        vec![],
                    ));
                }
            }
        }
    }
    match t.source() {
        Some(v) => {
            if sets[..] != [VertexSet::singleton(v)] {
                return Err(fail(
                    format!("source {v} is not the unique singleton minimal retentive set"),
                    vec![],
                ));
            }
        }
        None => {
            if sets.iter().any(|s| s.len() == 1) {
                return Err(fail("singleton minimal retentive set without a source".into(), vec![]));
            }
        }
    }
    if sets.iter().filter(|s| s.len() == 3).count() > 1 {
        return Err(fail("two minimal retentive sets of size 3".into(), vec![]));
    }
    if analysis.teq.len() == 3 && sets.len() != 1 {
        return Err(fail(
            "3-element equilibrium set without a unique minimal retentive set".into(),
            vec![],
        ));
    }
    Ok(analysis)
}
