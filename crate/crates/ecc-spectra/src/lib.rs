//! Eccentricity matrices of connected graphs: exact characteristic
//! polynomials and inertia over big integers, a floating-point symmetric
//! eigensolver, clique-tree structure analysis, and an executable
//! verification suite over fixtures and seeded random instances.
//!
//! The eccentricity matrix keeps, in each row and column of the distance
//! matrix, only the largest distances: entry `(u, v)` survives exactly when
//! `d(u, v) = min(e(u), e(v))`. For clique trees whose blocks have at most
//! two cut-vertices this matrix is irreducible, has rank 4 with inertia
//! `(2, 2, n - 4)` when the diameter is odd, rank `2l` with inertia
//! `(l, l, n - 2l)` when the diameter is even (with `l` counting the
//! diametrally distinguished vertices), and a spectrum symmetric about the
//! origin exactly when the diameter is odd with two central vertices. The
//! `theorems` module turns each of those statements into a check.

pub mod blocks;
pub mod eccmat;
pub mod error;
pub mod exact;
pub mod gen;
pub mod graph;
pub mod report;
pub mod spectra;
pub mod theorems;

pub use error::{Error, Result};
