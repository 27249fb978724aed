//! Transition densities of the hyperbolic Pearson (Hua–Pickrell) diffusion
//! dU = √(2(1+U²)) dW + (2AU + K) dt and of its non-colliding particle
//! system.
//!
//! Three independent routes are provided and cross-checked:
//!
//! * [`spectral`]: eigenfunction expansion of the generator (Romanovski
//!   polynomials plus Ferrer functions on the continuous spectrum);
//! * [`maass`]: integral representation through the semigroup kernel of the
//!   Maass Laplacian on the upper half-plane;
//! * [`stochastic`]: Euler–Maruyama and exponential-functional samplers.
//!
//! [`particles`] assembles Karlin–McGregor determinants from the 1-d kernels.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod maass;
pub mod particles;
pub mod quad;
pub mod specfun;
pub mod spectral;
pub mod stochastic;
pub mod verify;

pub use error::{Error, Result};
pub use specfun::HpParams;
