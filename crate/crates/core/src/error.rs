use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("bad field spec {0:?}: expected Q or F<p>")]
    BadFieldSpec(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} is outside the supported range 2 <= p < 2^31")]
    ModulusOutOfRange(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("operands live over different fields ({left} vs {right})")]
    FieldMismatch { left: String, right: String },
    #[error("algebra does not satisfy the left Leibniz identity")]
    NotLeibniz,
    #[error("operation requires a finite field")]
    NotFiniteField,
    #[error("search space of {candidates} matrices exceeds the budget of {budget}")]
    BudgetExceeded { candidates: String, budget: u64 },
    #[error("subspace is not invariant under the group")]
    NotInvariant,
    #[error("inadmissible parameters: {0}")]
    InadmissibleParams(&'static str),
    #[error("matrix does not belong to the family: {0}")]
    NotInFamily(&'static str),
    #[error("set of matrices is not a group")]
    NotAGroup,
}

pub type Result<T> = std::result::Result<T, Error>;
