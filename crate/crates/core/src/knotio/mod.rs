//! Knot diagram notations and the oriented-labeled [`Diagram`].
//!
//! Diagrams come in as Gauss codes or Dowker-Thistlethwaite codes, and are
//! stored in an oriented labeling: arcs `a_0..a_{n-1}` follow the knot's
//! orientation, and crossing `c_i` is the crossing where `a_i` ends and
//! `a_{i+1}` begins. All indices in this crate are zero-based.

mod corpus;
mod diagram;
mod dt;
mod gauss;

use thiserror::Error;

pub use corpus::{load_corpus, parse_corpus, CorpusEntry};
pub use diagram::{
    connected_sum, gauss_to_diagram, is_alternating, is_reduced, mirror, projection_cut_vertices,
    Diagram,
};
pub use dt::{dt_to_gauss, gauss_to_dt, parse_dt, DTCode};
pub use gauss::{parse_gauss, GaussCode, Pass, PassKind};

#[derive(Debug, Error)]
pub enum KnotIoError {
    #[error("empty input")]
    EmptyInput,
    #[error("malformed token `{0}`")]
    MalformedToken(String),
    #[error("crossing label {0} must appear exactly once over and once under")]
    LabelCountMismatch(u64),
    #[error("DT entry {0} is not even")]
    NotEven(i64),
    #[error("DT magnitude {0} appears more than once")]
    DuplicateMagnitude(i64),
    #[error("DT entry {entry} outside 2..={max}")]
    WrongRange { entry: i64, max: i64 },
    #[error("DT code mixes signs (non-alternating codes are not supported)")]
    MixedSigns,
    #[error("Gauss code has no under pass")]
    NoUnderPass,
    #[error("diagram is not alternating")]
    NotAlternating,
    #[error("Gauss code is not DT-representable: {0}")]
    NotDtRepresentable(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, KnotIoError>;
