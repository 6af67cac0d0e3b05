//! File formats shared by the `rootdata` binary and its tests.

pub mod format;

pub use format::{CompleteFile, DatumFile, DatumRef, IsogenyFile, JInt, MorphismFile};
