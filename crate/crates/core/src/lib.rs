//! Words over a signed generator alphabet, their reduction sequences, and
//! the moves that connect any two reduction sequences of the same word.
//!
//! * [`word`]: signed generators, words and redexes.
//! * [`reduction`]: reduction sequences as lists of redex positions.
//! * [`moves`]: swap and overlap-switch edits of sequences.
//! * [`transform`]: constructive chains of moves between sequences.
//! * [`group`]: the free group on normal forms.
//! * [`oracle`]: exhaustive enumeration and move-graph checks.

pub mod corpus;
pub mod group;
pub mod moves;
pub mod oracle;
pub mod par;
pub mod reduction;
pub mod syntax;
pub mod transform;
pub mod word;

pub use group::{abelianize, cons, eq, inv, mul, normal_form, NormalWord};
pub use moves::{apply_chain, overlap_switch, swap, Direction, Move, MoveChain, MoveKind};
pub use oracle::{build_move_graph, enumerate_sequences, MoveGraph, OracleConfig};
pub use par::Execution;
pub use reduction::{apply_step, validate_sequence, ReductionError, ReductionSequence};
pub use syntax::{parse_word, ParseError};
pub use transform::{drop_redex, extend_reduction, front_reduction, transform_to};
pub use word::{Generator, Sign, SignedGenerator, Word};
