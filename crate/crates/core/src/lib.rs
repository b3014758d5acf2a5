//! Strong-coupling dynamics of a two-level system coupled to a ladder-operator
//! mode (harmonic oscillator, su(1,1) mode, or finite spin).
//!
//! The model Hamiltonian is
//!
//! ```text
//! H = omega 1x(L3) + (Delta/2) s3x(1) + g s1x(L+ + L-)
//! ```
//!
//! where `{L+, L-, L3}` is one of three ladder algebras (see [`AlgebraKind`])
//! and `s1`, `s3` are Pauli matrices on the two-level system. In the strong
//! coupling regime (`Delta << g`) the natural split is `H = H0 + V` with
//! `H0 = omega 1x(L3) + g s1x(L+ + L-)` solvable exactly: a similarity
//! transform by the displacement-type operator `exp(±(x/2)(L+ - L-))` maps
//! `omega L3 ± g(L+ + L-)` onto a multiple of the diagonal generator, giving
//! dressed (displaced/squeezed/rotated) eigenstates and a uniformly spaced
//! spectrum. The perturbation `V = (Delta/2) s3x(1)` then drives slow Rabi
//! transitions between dressed levels whose frequencies are matrix elements of
//! `exp(±x(L+ - L-))` in closed form.
//!
//! Module map:
//!
//! * [`algebra`] — truncated dense representations of the three algebras;
//! * [`matelem`] — closed-form matrix elements of the exponentiated ladder
//!   generators and the brute-force matrix-exponential oracle;
//! * [`hamiltonian`] — dressed parameters `(Omega, x)`, spectra, dressed
//!   states, and the conjugation-identity verifier;
//! * [`dynamics`] — energy shifts, Rabi frequencies, detunings, rotating-wave
//!   two-level propagators, and the four-amplitude reference ODE;
//! * [`gates`] — the 4x4 two-qubit-style gates generated by band-selective
//!   Rabi flopping.

pub mod algebra;
pub mod dynamics;
pub mod error;
pub mod gates;
pub mod hamiltonian;
mod linalg;
pub mod matelem;

pub use algebra::{bosonic_su11_blocks, AlgebraKind, LadderRep};
pub use error::{Error, Result};

/// A two-valued sign label (`+1` or `-1`).
///
/// Used both for the qubit branch `lambda` of a dressed state
/// `|{lambda, n}>` and for the cat-state label `sigma` of the
/// perturbation-theory eigenstates `|{sigma, psi_n}>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// The sign as `+1.0` or `-1.0`.
    pub fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }

    /// The opposite sign.
    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    /// Parse from an integer (`1` or `-1`).
    pub fn from_i32(v: i32) -> Result<Sign> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            _ => Err(Error::InvalidArgument(format!(
                "sign must be +1 or -1, got {v}"
            ))),
        }
    }
}

impl std::fmt::Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Sign::Plus => write!(f, "+1"),
            Sign::Minus => write!(f, "-1"),
        }
    }
}
