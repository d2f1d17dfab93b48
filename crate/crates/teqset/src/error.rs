use std::ops::RangeInclusive;

/// Errors reported by fallible library operations.
///
/// Contract violations that indicate caller bugs (vertex out of range,
/// empty subsets, degenerate pairs) panic instead, like slice indexing.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Code length is not n(n-1)/2 for any supported n.
    #[error("code length {0} is not a triangular number for 1..=16 vertices")]
    CodeLength(usize),
    /// Code contains a character other than '0' or '1'.
    #[error("invalid character {found:?} at position {pos} in code")]
    CodeChar { pos: usize, found: char },
    /// A size argument fell outside the range an operation supports.
    #[error("size {size} outside supported range {range:?} for {what}")]
    SizeRange {
        what: &'static str,
        size: usize,
        range: RangeInclusive<usize>,
    },
    /// The brute-force oracle refuses sizes where subset enumeration explodes.
    #[error("brute-force enumeration refused size {0} (limit 8)")]
    OracleSize(usize),
    /// A census size gated behind the long-run opt-in was requested without it.
    #[error("size {0} census is long-running; enable the long-run option to proceed")]
    LongRunRequired(usize),
    /// Sibling queries require the undirected domination graph to be a forest.
    #[error("domination graph is not a forest")]
    NotAForest,
    /// The domination graph classifier met a shape the structure theorem forbids.
    /// Carries the offending component's edges. Reaching this on a graph that
    /// really arose from a tournament is a bug.
    #[error("domination graph violates the structure theorem ({reason}); offending edges {edges:?}")]
    Structure {
        reason: String,
        edges: Vec<(usize, usize)>,
    },
    /// The random locally-transitive generator exhausted its retry budget.
    #[error("failed to generate a locally transitive tournament after {0} attempts")]
    Generation(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
