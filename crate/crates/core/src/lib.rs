//! Exact computation in the extended Heisenberg-Virasoro algebra, its
//! enveloping algebra and the induced modules built from it.

pub mod algebra;
pub mod error;
pub mod exponents;
pub mod indmod;
pub mod pbw;
pub mod report;
pub mod scalars;
pub mod suites;
pub mod vertexcheck;

pub use algebra::{AlgebraSpec, Generator, Kind, Level, LieElement, Phi, SubalgebraSpec, Table};
pub use error::{Error, Result};
pub use exponents::{ExponentVector, OrderKind, Triple};
pub use indmod::{IndVector, InducedModule, ModuleKind, Row};
pub use pbw::{GeneratorOrder, Normalizer, UEElement, UEMonomial};
pub use report::{Report, ReportAggregator};
pub use scalars::{Bindings, Param, Scalar};
pub use vertexcheck::FieldId;
