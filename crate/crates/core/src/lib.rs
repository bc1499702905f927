//! Braid groups under the band-generator Garside structure: simple elements,
//! normal forms, summit reduction and conjugacy search for periodic braids.

pub mod braidword;
pub mod cli;
pub mod conjugacy;
pub mod error;
pub mod ncp;
pub mod oracle;
pub mod periodic;

pub use braidword::{BraidWord, NormalForm, Syllable};
pub use conjugacy::Conjugator;
pub use error::{Error, Result};
pub use ncp::{DescendingCycle, Side, SimpleElement};
pub use periodic::{PeriodKind, PeriodicVerdict, Rational};
