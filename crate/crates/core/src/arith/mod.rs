//! Exact arithmetic: rationals, quadratic extensions, polynomials,
//! rational functions, and places of the projective line.

pub mod field;
pub mod poly;
pub mod quadratic;
pub mod ratfunc;
pub mod zgcd;

pub use field::{rat, rat_int, rat_is_square, rat_sqrt, Field, Rat};
pub use poly::{coprime_basis, cmp_poly_canonical, Poly};
pub use quadratic::{QuadExt, QuadraticTag};
pub use ratfunc::{ord_at, poly_compose, substitute, NonUniformValuation, Place, Rf};
pub use zgcd::rational_roots;
