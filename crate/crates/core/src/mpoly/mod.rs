//! Sparse multivariate polynomials over any [`Domain`](crate::exactalg::Domain).

mod context;
mod grading;
mod monomial;
mod multiplicity;
mod poly;
mod rmap;
mod text;

pub use context::{Ctx, VarContext};
pub use grading::MultiDegree;
pub use monomial::{Exps, Monomial};
pub use multiplicity::{multiplicity_at, Multiplicity};
pub use poly::{sum, MPoly};
pub use rmap::{MapDegree, RationalMap};
pub use text::parse_poly;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("polynomials live in different variable contexts")]
    ContextMismatch,
    #[error("duplicate variable name {0:?}")]
    DuplicateVariable(String),
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("variable index {0} out of range")]
    VariableOutOfRange(usize),
    #[error("expected {expected} values, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("polynomial of degree {degree} cannot be homogenized to degree {target}")]
    DegreeTooSmall { degree: u32, target: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("component {0} is not homogeneous of the declared degree")]
    NotHomogeneous(usize),
    #[error("all components of the map are zero")]
    AllZero,
    #[error("the point is not on the common zero locus")]
    PointNotOnLocus,
    #[error("the zero vector is not a projective point")]
    ZeroPoint,
    #[error("multiplicity needs one or two generators, got {0}")]
    GeneratorCount(usize),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}
