//! Computational toolkit for minimal surfaces in lens spaces.
//!
//! * [`s3geom`]: unit quaternions, the space of oriented great circles as
//!   `S² × S²`, Clifford and cmc tori, the Hopf map, and the dihedral group
//!   of order 8 preserving a Clifford torus.
//! * [`lens`]: exact arithmetic of `L(p, q)`.
//! * [`orbits`]: orbits of `Z_p^q` on the flat torus and the parallel curves
//!   carrying them.
//! * [`lawson`]: Lawson immersions and their areas.
//! * [`period`]: the period function of invariant curves of the `(n, m)`
//!   circle action.
//! * [`jacobi`]: Jacobi-field obstructions to blowup sets.
//! * [`quad`]: the quadrature rules used by the numerical modules.
//!
//! ```
//! use lensgeom::lens::{are_isometric, LensSpace};
//!
//! let a = LensSpace::new(7, 2)?;
//! let b = LensSpace::new(7, 3)?;
//! assert!(are_isometric(a, b)?);
//! # Ok::<(), lensgeom::Error>(())
//! ```

mod error;
pub mod jacobi;
pub mod lawson;
pub mod lens;
pub mod orbits;
pub mod period;
pub mod quad;
pub mod s3geom;

pub use error::{Error, Result};
