//! Exact point counts, counting polynomials, and zeta functions for
//! smooth toric varieties over extensions of the one-element field.
//!
//! The toric side starts from a fan of regular cones ([`fan`]): each cone
//! carries an affine chart whose points over the degree-n extension are
//! assignments of signed roots of unity (or zero) to the dual monoid
//! generators ([`points`]), and the glued variety has a counting
//! polynomial N with N(2n + 1) points over the degree-n extension, N(q)
//! points over F_q, Euler characteristic N(1), and zeta function
//! prod_i (s - i)^{a_i} built from the coefficients of N ([`zeta`]).
//! Every closed form is checkable against brute-force enumeration over
//! prime fields ([`oracle`]).
//!
//! Beyond the toric case the crate covers point counts of short-vector
//! systems of positive definite lattices ([`hermitian`]), the stratified
//! quadric fourfold x y - z t + u v = 0 ([`quadric`]), and the image-of-J
//! orders w_i ([`imj`]). JSON interchange for fans and vector systems
//! lives in [`document`].
//!
//! ```
//! use f1geom::fan::{standard_fan, StandardFanKind};
//! use f1geom::points::{glued_points, CyclotomicIndex};
//! use f1geom::zeta::{fan_count_poly, zeta};
//!
//! let plane = standard_fan(StandardFanKind::Projective, 2).unwrap();
//! let n = fan_count_poly(&plane);
//! assert_eq!(n.to_string(), "x^2 + x + 1");
//! assert_eq!(zeta(&n).to_string(), "s (s - 1) (s - 2)");
//!
//! // 13 points over the first extension, matching N(3)
//! let one = CyclotomicIndex::new(1).unwrap();
//! assert_eq!(glued_points(&plane, one).unwrap().len(), 13);
//! ```

#![forbid(unsafe_code)]

pub mod document;
mod error;
pub mod fan;
pub mod hermitian;
pub mod imj;
pub mod linalg;
pub mod oracle;
pub mod points;
pub mod quadric;
pub mod zeta;

pub use error::{Error, Result};
