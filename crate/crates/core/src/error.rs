use crate::diagram::DiagramError;
use crate::exact::ExactError;
use crate::hopf::HopfError;

/// Errors raised by the constructions built on top of the linear algebra.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error("shape error: {0}")]
    Shape(String),
    #[error("not a module: {0}")]
    NotAModule(String),
    #[error("not a comodule: {0}")]
    NotAComodule(String),
    #[error("antipode is not invertible")]
    SNotInvertible,
    #[error("R is not invertible in H (x) H")]
    RNotInvertible,
    #[error("objects belong to different Hopf algebras: {0}")]
    HopfMismatch(String),
    #[error("structure check failed: {0}")]
    Verification(String),
    #[error("braiding is not B-linear: {0}")]
    BraidingNotBLinear(String),
    #[error("monodromy of the pair is not trivial")]
    MonodromyFails,
    #[error("subspace is not closed under {0}")]
    NotClosed(String),
    #[error("not an Azumaya algebra: {0}")]
    NotAzumaya(String),
    #[error("not a Galois object: {0}")]
    NotGalois(String),
    #[error("search budget exceeded after {0} candidates")]
    SearchBudgetExceeded(u64),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("alpha is supported outside I_n at index {0}")]
    BadAlpha(usize),
    #[error("a must vanish unless d_n = m")]
    BadA,
    #[error("coaction does not have the expected shape: {0}")]
    NotClassifiableShape(String),
}

pub type Result<T> = std::result::Result<T, Error>;
