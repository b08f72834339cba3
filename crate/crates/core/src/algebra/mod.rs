//! Exact arithmetic: rationals, polynomials, resultants, a two-variable
//! unit-ideal test and integer normal forms.

pub mod bipoly;
pub mod groebner;
pub mod intmatrix;
mod lehmer;
pub mod rat;
pub mod resultant;
pub mod unipoly;

pub use bipoly::BiPoly;
pub use groebner::{groebner_basis, unit_ideal_2var};
pub use intmatrix::{left_kernel_basis, multiplicative_consistency, smith_normal_form, IntMatrix, SmithForm};
pub use rat::{rat, Rat};
pub use resultant::resultant_y;
pub use unipoly::{root_multiplicities, squarefree_decomposition, squarefree_part, UniPoly};
