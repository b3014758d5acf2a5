//! Dense truncated representations of the three ladder algebras.
//!
//! All three share the structure relations `[L3, L+] = L+`, `[L3, L-] = -L-`
//! and differ in the closing bracket:
//!
//! * Heisenberg (oscillator) `{a^dag, a, N}`: `[a^dag, a] = -1`,
//!   `a^dag|n> = sqrt(n+1)|n+1>`, `N|n> = n|n>`;
//! * su(1,1), discrete series with Bargmann index `K > 0`:
//!   `[K+, K-] = -2 K3`, `K+|K,n> = sqrt((n+1)(2K+n))|K,n+1>`,
//!   `K3|K,n> = (K+n)|K,n>` (infinite tower, truncated at `dim`);
//! * su(2) with spin `J` (`2J` a positive integer): `[J+, J-] = 2 J3`,
//!   `J+|J,n> = sqrt((n+1)(2J-n))|J,n+1>`, `J3|J,n> = (-J+n)|J,n>`
//!   (exact at `dim = 2J+1`, no truncation).
//!
//! Matrices are dense complex (`Array2<Complex64>`): every downstream
//! consumer immediately mixes them into complex exponentials, so a dense
//! uniform storage keeps the whole pipeline one type.

use ndarray::Array2;
use num_complex::Complex64 as C64;

use crate::error::{Error, Result};

/// Which ladder algebra a representation realizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlgebraKind {
    /// Harmonic-oscillator (Heisenberg) algebra `{a^dag, a, N}`.
    Heisenberg,
    /// su(1,1) discrete series, labelled by the Bargmann index `K > 0`.
    Su11,
    /// su(2), labelled by the spin `J` with `2J` a positive integer.
    Su2,
}

impl AlgebraKind {
    /// Short lowercase tag used in CLI output.
    pub fn tag(self) -> &'static str {
        match self {
            AlgebraKind::Heisenberg => "n",
            AlgebraKind::Su11 => "k",
            AlgebraKind::Su2 => "j",
        }
    }
}

/// A truncated matrix representation of one ladder algebra.
///
/// `lp`, `lm`, `l3` are the raising, lowering, and diagonal generators as
/// `dim x dim` dense complex matrices. `spin` carries `K` (su(1,1)) or `J`
/// (su(2)) and is ignored for the oscillator. For su(2) the representation is
/// exact; for the other two kinds the last rows/columns feel the truncation
/// and callers should restrict "interior" claims accordingly.
#[derive(Debug, Clone)]
pub struct LadderRep {
    pub kind: AlgebraKind,
    pub spin: f64,
    pub dim: usize,
    pub lp: Array2<C64>,
    pub lm: Array2<C64>,
    pub l3: Array2<C64>,
}

impl LadderRep {
    /// Build the representation of `kind` with the given `spin` at truncation
    /// `dim`.
    ///
    /// * `Heisenberg`: `spin` is ignored; `dim >= 2`.
    /// * `Su11`: requires `spin > 0`; `dim >= 2`.
    /// * `Su2`: requires `2*spin` to be a positive integer and
    ///   `dim == 2*spin + 1` (the representation admits no truncation).
    pub fn new(kind: AlgebraKind, spin: f64, dim: usize) -> Result<Self> {
        if dim < 2 {
            return Err(Error::InvalidDimension(format!(
                "need dim >= 2, got {dim}"
            )));
        }
        let subdiag: Vec<f64> = match kind {
            AlgebraKind::Heisenberg => (0..dim - 1).map(|n| (n as f64 + 1.0).sqrt()).collect(),
            AlgebraKind::Su11 => {
                if !(spin > 0.0 && spin.is_finite()) {
                    return Err(Error::InvalidSpin(format!(
                        "su(1,1) Bargmann index must be > 0, got {spin}"
                    )));
                }
                (0..dim - 1)
                    .map(|n| ((n as f64 + 1.0) * (2.0 * spin + n as f64)).sqrt())
                    .collect()
            }
            AlgebraKind::Su2 => {
                let two_j = two_j_of(spin)?;
                if dim != two_j + 1 {
                    return Err(Error::InvalidDimension(format!(
                        "su(2) with J = {spin} is exactly {}-dimensional, got dim = {dim}",
                        two_j + 1
                    )));
                }
                (0..dim - 1)
                    .map(|n| ((n as f64 + 1.0) * (two_j as f64 - n as f64)).sqrt())
                    .collect()
            }
        };

        let mut lp = Array2::zeros((dim, dim));
        for (n, &s) in subdiag.iter().enumerate() {
            lp[[n + 1, n]] = C64::new(s, 0.0);
        }
        let lm = lp.t().mapv(|v: C64| v.conj());
        let mut l3 = Array2::zeros((dim, dim));
        for n in 0..dim {
            let v = match kind {
                AlgebraKind::Heisenberg => n as f64,
                AlgebraKind::Su11 => spin + n as f64,
                AlgebraKind::Su2 => -spin + n as f64,
            };
            l3[[n, n]] = C64::new(v, 0.0);
        }
        Ok(LadderRep {
            kind,
            spin,
            dim,
            lp,
            lm,
            l3,
        })
    }

    /// Max-norm residual of the three structure relations on the leading
    /// `interior x interior` block.
    ///
    /// Checks `[L3, L+] - L+`, `[L3, L-] + L-`, and the kind-specific closing
    /// bracket (`[a^dag, a] + 1`, `[K+, K-] + 2 K3`, or `[J+, J-] - 2 J3`).
    /// Truncating an infinite tower corrupts only entries adjacent to the
    /// last level, so the residual is asked for on an interior block;
    /// requires `interior < dim` for the truncated kinds (any
    /// `interior <= dim` is exact for su(2), but the same bound is enforced
    /// uniformly).
    pub fn commutator_residual(&self, interior: usize) -> Result<f64> {
        if interior == 0 || interior >= self.dim {
            return Err(Error::InvalidDimension(format!(
                "interior block must satisfy 0 < interior < dim = {}, got {interior}",
                self.dim
            )));
        }
        let comm = |a: &Array2<C64>, b: &Array2<C64>| a.dot(b) - b.dot(a);
        let eye = Array2::<C64>::eye(self.dim);

        let r1 = comm(&self.l3, &self.lp) - &self.lp;
        let r2 = comm(&self.l3, &self.lm) + &self.lm;
        let r3 = match self.kind {
            AlgebraKind::Heisenberg => comm(&self.lp, &self.lm) + &eye,
            AlgebraKind::Su11 => comm(&self.lp, &self.lm) + &self.l3 * C64::new(2.0, 0.0),
            AlgebraKind::Su2 => comm(&self.lp, &self.lm) - &self.l3 * C64::new(2.0, 0.0),
        };

        let block_max = |m: &Array2<C64>| {
            let mut worst = 0.0f64;
            for i in 0..interior {
                for j in 0..interior {
                    worst = worst.max(m[[i, j]].norm());
                }
            }
            worst
        };
        Ok(block_max(&r1).max(block_max(&r2)).max(block_max(&r3)))
    }
}

/// Validate an su(2) spin and return `2J` as an integer.
pub(crate) fn two_j_of(spin: f64) -> Result<usize> {
    let two_j = 2.0 * spin;
    let rounded = two_j.round();
    if !(spin > 0.0 && spin.is_finite() && (two_j - rounded).abs() < 1e-9) {
        return Err(Error::InvalidSpin(format!(
            "su(2) spin must be a positive half-integer, got {spin}"
        )));
    }
    Ok(rounded as usize)
}

/// Realize the two su(1,1) irreps hiding inside a single bosonic mode.
///
/// With `K+ = (a^dag)^2/2`, `K- = a^2/2`, `K3 = (a^dag a + 1/2)/2` built at
/// Fock-space cutoff `fock_dim` (even), the even-index Fock block carries the
/// `K = 1/4` irrep and the odd-index block carries `K = 3/4`. Returns
/// `(even, odd)`, each a [`LadderRep`] of kind [`AlgebraKind::Su11`] with
/// `dim = fock_dim/2`.
///
/// Because the quadratic operators walk two Fock levels at a time, the last
/// row/column of each extracted block feels the Fock truncation: the blocks
/// agree with [`LadderRep::new`] on the leading `dim - 1` block and are
/// corrupted at the final index.
pub fn bosonic_su11_blocks(fock_dim: usize) -> Result<(LadderRep, LadderRep)> {
    if fock_dim < 4 || fock_dim % 2 != 0 {
        return Err(Error::InvalidDimension(format!(
            "bosonic blocks need an even Fock cutoff >= 4, got {fock_dim}"
        )));
    }
    let boson = LadderRep::new(AlgebraKind::Heisenberg, 0.0, fock_dim)?;
    let half = C64::new(0.5, 0.0);
    let kp = boson.lp.dot(&boson.lp) * half;
    let km = boson.lm.dot(&boson.lm) * half;
    let k3 = (boson.lp.dot(&boson.lm) + Array2::<C64>::eye(fock_dim) * half) * half;

    let dim = fock_dim / 2;
    let extract = |m: &Array2<C64>, offset: usize| {
        Array2::from_shape_fn((dim, dim), |(i, j)| m[[2 * i + offset, 2 * j + offset]])
    };
    let mk = |offset: usize, spin: f64| LadderRep {
        kind: AlgebraKind::Su11,
        spin,
        dim,
        lp: extract(&kp, offset),
        lm: extract(&km, offset),
        l3: extract(&k3, offset),
    };
    Ok((mk(0, 0.25), mk(1, 0.75)))
}
