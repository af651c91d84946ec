//! Exact computations for the N=1 super Heisenberg–Virasoro algebra at level
//! zero: PBW rewriting, Verma modules and their contravariant forms, the
//! free-field realization with its screening operators, and q-characters.

pub mod algebra;
pub mod freefield;
pub mod linalg;
pub mod qchar;
pub mod scalars;
pub mod verma;
