use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("zero polynomial is not allowed here")]
    ZeroPolynomial,
    #[error("rational function with zero denominator")]
    ZeroDenominator,
    #[error("resultant of two zero polynomials is undefined")]
    ResultantOfZeros,
    #[error("Kronecker symbol (a|0) is undefined")]
    KroneckerZero,
    #[error("matrices with different moduli: {0} and {1}")]
    MixedModuli(u32, u32),
    #[error("generator {0} is not invertible")]
    NotInvertible(String),
    #[error("unsupported modulus {0}: only 3 and 9 are handled")]
    UnsupportedModulus(u32),
    #[error("subgroup does not contain -I")]
    MissingMinusIdentity,
    #[error("inner group is not contained in outer group")]
    NotASubgroup,
    #[error("genus formula produced a non-integral or negative value (12g = {0})")]
    BadGenus(i64),
    #[error("identity failed while building layer `{0}`")]
    Identity(&'static str),
    #[error("empty target set")]
    EmptyTargets,
    #[error("search bound must be at least 1")]
    BadBound,
    #[error("cubic form needs a nonzero m^3 coefficient")]
    DegenerateForm,
    #[error("{0} is not a valid negative discriminant")]
    BadDiscriminant(i64),
    #[error("{0} is not a fundamental discriminant")]
    NotFundamental(i64),
    #[error("{0} digits are not enough for discriminant {1}")]
    InsufficientPrecision(u32, i64),
    #[error("j-invariant matches several discriminants: {0:?}")]
    AmbiguousMatch(Vec<i64>),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("singular Weierstrass equation (discriminant zero)")]
    Singular,
}
