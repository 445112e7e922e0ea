//! Auslander-Reiten translations and Grothendieck-group τ-maps of monomial
//! bound quiver algebras over the rationals.
//!
//! Modules are right modules, stored as quiver representations; a path is
//! written in traversal order, so `p·q` means "first `p`, then `q`".
//!
//! ```
//! use std::sync::Arc;
//! use taumap::{artranslation::tau, MonomialAlgebra, Quiver, Representation};
//!
//! let q = Quiver::from_strs(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")])?;
//! let a = Arc::new(MonomialAlgebra::from_ids(q, &[&["a", "b"]])?);
//! let t = tau(&Representation::simple(&a, 0))?;
//! assert_eq!(t.dim_vector(), vec![0, 1]);
//! # Ok::<(), taumap::Error>(())
//! ```

pub mod algebra;
pub mod artranslation;
pub mod corpus;
pub mod error;
pub mod hnf;
pub mod k0;
pub mod linalg;
pub mod nakayama;
pub mod quiver;
pub mod repr;
pub mod sweep;
pub mod verify;

pub use algebra::{MonomialAlgebra, Path};
pub use error::{Error, Result};
pub use linalg::{IntMatrix, Matrix, Q};
pub use nakayama::{KupischSeries, NakayamaIndec};
pub use quiver::Quiver;
pub use repr::{ModuleMap, Representation, StandardKind};
