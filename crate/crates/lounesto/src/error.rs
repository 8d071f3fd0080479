use thiserror::Error;

/// Errors surfaced by the algebra kernel and the spinor layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("grade {0} out of range (expected 0..=4)")]
    GradeOutOfRange(usize),
    #[error("element is singular (no inverse within conditioning threshold)")]
    Singular,
    #[error("bilinear covariant has imaginary residue {residue:.3e} above tolerance {tol:.3e}")]
    NonRealCovariant { residue: f64, tol: f64 },
    #[error("zero spinor")]
    ZeroSpinor,
    #[error("vanishing pattern sigma=omega=0, K=0, S=0 with J!=0 is not a Lounesto class")]
    Inconsistent,
    #[error("xi is degenerate for this aggregate (xi^dagger gamma0 Z xi below tolerance)")]
    DegenerateXi,
    #[error("no witness found within {0} iterations")]
    NotFound(usize),
    #[error("spinor is not class 5 (flagpole)")]
    NotClass5,
    #[error("lower 2-spinor block is not a helicity eigenstate of sigma.p")]
    NotHelicityEigenstate,
    #[error("direction is not a unit vector (|p| = {0})")]
    NonUnitDirection(f64),
    #[error("two-component spinor must be nonzero")]
    ZeroTwoSpinor,
}

pub type Result<T> = std::result::Result<T, Error>;
