//! Nilpotent orbits of real forms of simple Lie algebras, the compact
//! (equivalently (-1)-distinguished) ones, and the projectively self-dual
//! K-orbit closures they give.
//!
//! * [`partitions`]: partitions, transposes, fine refinements.
//! * [`forms`]: real form identifiers and dimensions.
//! * [`classical_orbits`]: orbit enumeration for the classical families.
//! * [`selfdual`]: compactness criteria and K-orbit bookkeeping.
//! * [`exceptional`]: embedded tables for the exceptional forms.
//! * [`oracle`]: exact matrix models used to cross-check the formulas.

pub mod classical_orbits;
pub mod error;
pub mod exceptional;
pub mod forms;
pub mod oracle;
pub mod partitions;
pub mod selfdual;

pub use classical_orbits::{enumerate_orbits, LabelData, OrbitDim, OrbitLabel, OrbitRecord};
pub use error::{Error, Result};
pub use exceptional::{ExceptionalRow, LeviType};
pub use forms::{Domain, ExceptionalForm, RealFormId, SymmetricPairDims};
pub use partitions::{FinePartition, Flavor, Partition};
pub use selfdual::{KOrbitRecord, Verdict};
