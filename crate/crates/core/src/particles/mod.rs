//! The interacting HP particle system: Karlin–McGregor transition density,
//! its spectral determinant form, and the invariant measure.

mod invariant;
mod km;
mod legendre_det;
mod params;
mod spectral_det;

pub use invariant::{invariant_density, invariant_normalize};
pub use km::{km_density, KmKernel, KmTable};
pub use legendre_det::{multivar_legendre_det, multivar_legendre_det_state};
pub use params::{lambda_sn, vandermonde, ParticleParams, ParticleState};
pub use spectral_det::{particles_density_spectral, SpectralParticleDensity};
