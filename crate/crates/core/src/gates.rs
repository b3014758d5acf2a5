//! Two-qubit gates generated by the resonant doublet dynamics.
//!
//! A level pair `(m, n)` carries four slow amplitudes, ordered
//! `(m,+), (m,-), (n,+), (n,-)`. Viewing the level index as one qubit and
//! the branch label as another, the resonant propagators of the allowed
//! transitions act as entangling two-qubit gates on that register: each
//! branch sector rotates at its own Rabi phase while the spectator pair of
//! basis states stands still.

use ndarray::Array2;
use num_complex::Complex64 as C64;

use crate::dynamics::{rabi_frequencies, rwa_entries, Band, LevelPair, RabiPair};
use crate::error::{Error, Result};
use crate::hamiltonian::ModelParams;
use crate::Sign;

/// Which resonant propagator (or composite construction) a gate encodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GateLabel {
    /// Branch-flipping rotation in the `{(m,+), (n,-)}` sector.
    InterbandPlus,
    /// Branch-flipping rotation in the `{(m,-), (n,+)}` sector.
    InterbandMinus,
    /// Branch-preserving rotation in the `{(m,+), (n,+)}` sector.
    IntrabandPlus,
    /// Branch-preserving rotation in the `{(m,-), (n,-)}` sector.
    IntrabandMinus,
    /// Controlled single-qubit unitary: acts on the level qubit only when
    /// the branch label is `-`.
    CUnitary,
}

/// A dense 4x4 gate on the doublet-pair register.
#[derive(Debug, Clone)]
pub struct GateMatrix {
    pub label: GateLabel,
    pub entries: Array2<C64>,
}

impl GateMatrix {
    /// Largest entry of `U^dag U - 1`: zero for an exactly unitary gate.
    pub fn unitarity_residual(&self) -> f64 {
        let u = &self.entries;
        let mut worst = 0.0f64;
        for i in 0..4 {
            for j in 0..4 {
                let mut acc = C64::new(0.0, 0.0);
                for k in 0..4 {
                    acc += u[[k, i]].conj() * u[[k, j]];
                }
                if i == j {
                    acc -= C64::new(1.0, 0.0);
                }
                worst = worst.max(acc.norm());
            }
        }
        worst
    }
}

fn identity4() -> Array2<C64> {
    let mut m = Array2::<C64>::zeros((4, 4));
    for i in 0..4 {
        m[[i, i]] = C64::new(1.0, 0.0);
    }
    m
}

/// Resonant gate of the given label from precomputed Rabi data, evolved for
/// time `t`.
///
/// Interband labels rotate by the branch-flipping frequency `r`, intraband
/// labels by the branch-preserving `r_prime`; the label must match the
/// pair's band (an even-gap pair has no interband transition and vice
/// versa). [`GateLabel::CUnitary`] is not time-generated; build it with
/// [`c_unitary`].
pub fn band_gate(label: GateLabel, rabi: &RabiPair, t: f64) -> Result<GateMatrix> {
    let (band, sigma, slots) = match label {
        GateLabel::InterbandPlus => (Band::Interband, Sign::Plus, (0usize, 3usize)),
        GateLabel::InterbandMinus => (Band::Interband, Sign::Minus, (1, 2)),
        GateLabel::IntrabandPlus => (Band::Intraband, Sign::Plus, (0, 2)),
        GateLabel::IntrabandMinus => (Band::Intraband, Sign::Minus, (1, 3)),
        GateLabel::CUnitary => {
            return Err(Error::InvalidArgument(
                "the controlled-unitary gate is built from an explicit 2x2 matrix, not from Rabi data"
                    .into(),
            ));
        }
    };
    if rabi.pair.band != band {
        return Err(Error::ParityMismatch(format!(
            "{label:?} needs a {band:?} pair, but (m, n) = ({}, {}) is {:?}",
            rabi.pair.m, rabi.pair.n, rabi.pair.band
        )));
    }
    let (c, off) = rwa_entries(rabi, sigma, t);
    let (a, b) = slots;
    let mut m = identity4();
    m[[a, a]] = c;
    m[[b, b]] = c;
    m[[a, b]] = off;
    m[[b, a]] = off;
    Ok(GateMatrix { label, entries: m })
}

/// Controlled unitary on the level qubit: the given 2x2 unitary `u` is
/// applied to the `(m, n)` amplitudes when the branch label is `-`, and
/// nothing happens when it is `+`.
///
/// `u` must be unitary to within `1e-12`.
pub fn c_unitary(u: &Array2<C64>) -> Result<GateMatrix> {
    if u.shape() != [2, 2] {
        return Err(Error::InvalidDimension(format!(
            "controlled unitary needs a 2x2 matrix, got {:?}",
            u.shape()
        )));
    }
    let mut worst = 0.0f64;
    for i in 0..2 {
        for j in 0..2 {
            let mut acc = C64::new(0.0, 0.0);
            for k in 0..2 {
                acc += u[[k, i]].conj() * u[[k, j]];
            }
            if i == j {
                acc -= C64::new(1.0, 0.0);
            }
            worst = worst.max(acc.norm());
        }
    }
    if worst > 1e-12 {
        return Err(Error::NotUnitary { residual: worst });
    }
    let mut m = identity4();
    // branch - components sit at slots 1 (level m) and 3 (level n)
    m[[1, 1]] = u[[0, 0]];
    m[[1, 3]] = u[[0, 1]];
    m[[3, 1]] = u[[1, 0]];
    m[[3, 3]] = u[[1, 1]];
    Ok(GateMatrix {
        label: GateLabel::CUnitary,
        entries: m,
    })
}

/// Gate realized by letting the pair's allowed transition run resonantly for
/// time `t` in the sector selected by `sigma`: the interband gate for
/// odd-gap pairs, the intraband gate for even-gap pairs.
pub fn gate_from_dynamics(
    p: &ModelParams,
    pair: LevelPair,
    sigma: Sign,
    t: f64,
) -> Result<GateMatrix> {
    let rabi = rabi_frequencies(p, pair)?;
    let label = match (pair.band, sigma) {
        (Band::Interband, Sign::Plus) => GateLabel::InterbandPlus,
        (Band::Interband, Sign::Minus) => GateLabel::InterbandMinus,
        (Band::Intraband, Sign::Plus) => GateLabel::IntrabandPlus,
        (Band::Intraband, Sign::Minus) => GateLabel::IntrabandMinus,
    };
    band_gate(label, &rabi, t)
}
