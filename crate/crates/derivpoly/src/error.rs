use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// A formula that must produce an integer produced a fraction.
    #[error("expected an integer result, got {0}")]
    NonIntegerResult(String),
    /// A polynomial that must be real kept a nonzero imaginary coefficient.
    #[error("nonzero imaginary residue in coefficient of z^{degree}: {value}")]
    ComplexResidue { degree: usize, value: String },
    /// Evaluation too close to a pole of the function.
    #[error("argument {0} is within 1e-12 of a pole")]
    Pole(String),
    /// Argument outside the supported domain.
    #[error("domain error: {0}")]
    Domain(String),
    /// Adaptive quadrature hit its depth limit above the error target.
    #[error("quadrature did not converge: estimated error {estimate:e} > {target:e}")]
    Convergence { estimate: f64, target: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
