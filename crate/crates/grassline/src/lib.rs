//! Exact computations around the opposite big cell of the affine Grassmannian
//! of `SL(r)`, its involution, equivariant transition functions, and graded
//! ADHM data of types A and D.

pub mod adhm;
pub mod cli;
pub mod exactalg;
pub mod loopgroup;
pub mod report;
pub mod selftest;
pub mod sl2lab;
pub mod transitions;
