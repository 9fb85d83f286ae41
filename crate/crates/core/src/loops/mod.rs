//! Finite loops as Cayley tables, their multiplication operators and
//! standard Moufang examples.
//!
//! Operators act on the right: `x(AB) = (xA)B`.

mod doro;
mod finite_loop;
pub mod generators;
mod io;
mod mult_group;
mod perm;

pub use doro::{doro_relations, verify_doro_relations, verify_doro_symmetry, Arg, Factor, OpKind, OperatorTable, Relation};
pub use finite_loop::{check_moufang, inversion_map, is_moufang, mult_ops, FiniteLoop, IdentityCheck, LoopReport, MultOps};
pub use io::{format_loop, parse_loop};
pub use mult_group::{multiplication_group, perm_closure, PermGroup};
pub use perm::Perm;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LoopError {
    #[error("empty table")]
    Empty,
    #[error("row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("entry {value} at ({row}, {col}) is out of range")]
    EntryOutOfRange { row: usize, col: usize, value: usize },
    #[error("not a Latin square: value {value} repeats in row {row}")]
    NotLatinRow { row: usize, value: usize },
    #[error("not a Latin square: value {value} repeats in column {col}")]
    NotLatinColumn { col: usize, value: usize },
    #[error("no unit element")]
    NoUnit,
    #[error("unit is element {unit}, expected element 1")]
    UnitNotFirst { unit: usize },
    #[error("element {element} has no two-sided inverse")]
    NoInverse { element: usize },
    #[error("not a group: associativity fails at {witness:?}")]
    NotAGroup { witness: [usize; 3] },
    #[error("permutation list is not closed under composition")]
    NotClosed,
    #[error("closure exceeded cap of {cap} elements")]
    CapExceeded { cap: usize },
    #[error("no loop of order {order} found")]
    SearchExhausted { order: usize },
    #[error("parse error: {0}")]
    Parse(String),
}
