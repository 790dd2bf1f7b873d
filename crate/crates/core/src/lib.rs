//! Exact computational toolkit for group algebras `F_q G` over finite fields
//! and the linear codes cut out by their idempotents.
//!
//! The crate builds finite fields `GF(p^α)` as polynomial residues, finite
//! groups as Cayley tables, and elements of the group algebra as coefficient
//! vectors.  On top of that it provides:
//!
//! * q-orbit data (orbit sizes `t_g`, their lcm `l`, a maximal-order witness)
//!   and arithmetic splitting-field tests for abelian groups,
//! * classification of group algebras as minimal-ECD / ECID via exact and
//!   sufficient arithmetic criteria (orbit bounds, Wedderburn component
//!   bounds, the `b0` bound, Sylow divisibility, exhaustive idempotent
//!   census),
//! * code-level analysis: exact ideal dimension through rank, exact minimum
//!   Hamming distance by full codeword enumeration, rational lower bounds,
//!   and non-primitivity tests.
//!
//! Everything is exact integer / finite-field arithmetic; no floating point
//! is used anywhere.  All values are immutable after construction and safe to
//! share across threads.

pub mod algebra;
pub(crate) mod arith;
pub mod classify;
pub mod codes;
pub mod cyclotomic;
pub mod field;
pub mod group;
pub mod json;

pub use algebra::AlgebraElement;
pub use arith::Ratio;
pub use classify::{ClassificationReport, Verdict, WedderburnData};
pub use codes::CodeReport;
pub use cyclotomic::QOrbitData;
pub use field::{FieldElement, FiniteField, PrimePower};
pub use group::Group;
