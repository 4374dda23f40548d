//! Alternating sign matrices, their antidiagonal X-rays, and the Dyck paths
//! that parametrize the matrices an X-ray determines uniquely.
//!
//! An *alternating sign matrix* (ASM) is a square matrix over {-1, 0, 1}
//! whose rows and columns each sum to 1 and whose nonzero entries alternate
//! in sign along every row and column. Its *X-ray* is the vector of its
//! antidiagonal sums. Most X-rays are shared by several ASMs, but some pin
//! their matrix down exactly; the n x n matrices determined by their X-ray
//! are in bijection with Dyck paths of semilength n, hence counted by the
//! Catalan numbers.
//!
//! The crate provides:
//!
//! * the domain types [`Asm`], [`DyckPath`], [`XRay`] and [`XRayHistogram`]
//!   with validation, text formats and a JSON matrix format ([`asm`],
//!   [`dyck`], [`xray`]);
//! * the bijection itself: [`bijection::map_a`] builds the determined ASM of
//!   a Dyck path, [`bijection::inverse_a`] recovers the path via the
//!   matrix's shadow path, and [`bijection::map_m`] repairs a diagonally
//!   symmetric non-image ASM into a non-symmetric one with the same X-ray;
//! * exhaustive generators and X-ray statistics ([`enumerate`]);
//! * reconstruction of all ASMs with a prescribed X-ray by pruned
//!   backtracking over antidiagonals ([`reconstruct`]);
//! * a self-contained invariant suite over all objects of a given size
//!   ([`verify`]).
//!
//! Conventions used throughout: matrix cells are 1-based `(row, col)` with
//! row 1 at the top; antidiagonal `k` (1-based, `k = row + col - 1`) runs
//! from `1` to `2n - 1`; Dyck paths are step strings over `E` (east) and
//! `S` (south) crossing the n x n grid from the north-west corner to the
//! south-east corner while staying weakly above the main diagonal.

pub mod asm;
pub mod bijection;
pub mod dyck;
pub mod enumerate;
pub mod reconstruct;
pub mod verify;
pub mod xray;

mod cell;

pub use asm::{direct_sum, Asm, AsmError, MatrixJsonError, RenderStyle};
pub use cell::Cell;
pub use dyck::{DyckPath, DyckPathError, Step};
pub use xray::{XRay, XRayError, XRayHistogram};
