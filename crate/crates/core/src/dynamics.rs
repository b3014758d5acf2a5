//! Level shifts, Rabi frequencies, and two-level dynamics between dressed
//! doublets.
//!
//! The two-level term `(Delta/2) sigma3 (x) 1` does not commute with the
//! dressed structure: in the dressed basis it acquires matrix elements
//! `T_lambda(n, m) = (Delta/2) <n|U(lambda x)|m>` between doublet branches.
//! Diagonal entries shift each level by `E_{n,sigma} = sigma T(n, n)`;
//! off-diagonal entries drive slow Rabi oscillations between the branches
//! of different levels with frequencies
//!
//! ```text
//! R  = (Delta/2) (<n|U(x)|m> - <n|U(-x)|m>)     (branch-flipping)
//! R' = (Delta/2) (<n|U(x)|m> + <n|U(-x)|m>)     (branch-preserving)
//! ```
//!
//! Because `<n|U(-x)|m> = (-1)^{n-m} <n|U(x)|m>` exactly, one of the two
//! vanishes identically for every pair: odd `n - m` only flips the branch,
//! even `n - m` only preserves it. The selection rule is enforced bit for
//! bit by the closed-form elements, so the forbidden frequency is exactly
//! `0.0`, not merely small.

use num_complex::Complex64 as C64;

use crate::algebra::AlgebraKind;
use crate::error::{Error, Result};
use crate::hamiltonian::ModelParams;
use crate::matelem::{element, f_function, laguerre_assoc, log_pochhammer};
use crate::Sign;
use statrs::function::gamma::ln_gamma;

/// Which branch pairing a level pair supports, fixed by the parity of
/// `n - m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Band {
    /// `n - m` odd: the coupling flips the branch label (`sigma -> -sigma`).
    Interband,
    /// `n - m` even: the coupling preserves the branch label.
    Intraband,
}

/// An ordered pair of ladder levels `m < n` together with its band type.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LevelPair {
    pub m: usize,
    pub n: usize,
    pub band: Band,
}

impl LevelPair {
    /// Build a pair from `m < n`; the band follows from the parity of
    /// `n - m` and cannot be chosen freely.
    pub fn new(m: usize, n: usize) -> Result<LevelPair> {
        if m >= n {
            return Err(Error::InvalidArgument(format!(
                "level pair needs m < n, got m = {m}, n = {n}"
            )));
        }
        let band = if (n - m) % 2 == 1 {
            Band::Interband
        } else {
            Band::Intraband
        };
        Ok(LevelPair { m, n, band })
    }
}

/// Dimensionless diagonal weight `d_n = <n|U(x)|n>` of the two-level term in
/// the dressed frame, by explicit closed form:
///
/// * oscillator: `e^{-x^2/2} L_n(x^2)`;
/// * su(1,1): `(n!/(2K)_n) (1+kappa^2)^{-(K+n)} F_n(kappa^2)`,
///   `kappa = sinh x`;
/// * su(2): `(n! (2J-n)!/(2J)!) (1-kappa^2)^{J-n} F_n(kappa^2)`,
///   `kappa = sin x`;
///
/// with `F_n` the alternating sum of [`f_function`] at `d = 0`.
pub fn level_weight(p: &ModelParams, n: usize) -> Result<f64> {
    p.validate()?;
    let (_om, x) = p.displacement_params()?;
    Ok(match p.kind {
        AlgebraKind::Heisenberg => (-x * x / 2.0).exp() * laguerre_assoc(n, 0, x * x),
        AlgebraKind::Su11 => {
            let two_k = 2.0 * p.spin;
            let kap2 = x.sinh().powi(2);
            let ln_fact_n = ln_gamma(n as f64 + 1.0);
            (ln_fact_n - log_pochhammer(two_k, n)?).exp()
                * (1.0 + kap2).powf(-(p.spin + n as f64))
                * f_function(n, 0, kap2, two_k, AlgebraKind::Su11)?
        }
        AlgebraKind::Su2 => {
            let two_j = 2.0 * p.spin;
            let kap2 = x.sin().powi(2);
            let ln_fact = |k: f64| ln_gamma(k + 1.0);
            (ln_fact(n as f64) + ln_fact(two_j - n as f64) - ln_fact(two_j)).exp()
                * (1.0 - kap2).powf(p.spin - n as f64)
                * f_function(n, 0, kap2, two_j, AlgebraKind::Su2)?
        }
    })
}

/// First-order energy shift `E_{n,sigma} = sigma (Delta/2) d_n` of the
/// dressed level `(n, sigma)`, splitting the doublet degeneracy.
pub fn energy_shift(p: &ModelParams, n: usize, sigma: Sign) -> Result<f64> {
    Ok(sigma.value() * (p.delta / 2.0) * level_weight(p, n)?)
}

/// Rabi data of a level pair: the branch-flipping frequency `r`, the
/// branch-preserving frequency `r_prime` (one of the two is exactly zero by
/// parity), and the resonance detuning of the allowed transition taken at
/// `sigma = +1`.
#[derive(Debug, Clone, Copy)]
pub struct RabiPair {
    pub pair: LevelPair,
    pub r: f64,
    pub r_prime: f64,
    pub detuning: f64,
}

/// Compute both Rabi frequencies of a pair from the closed-form dressed
/// elements, plus the detuning of its allowed transition at `sigma = +1`.
pub fn rabi_frequencies(p: &ModelParams, pair: LevelPair) -> Result<RabiPair> {
    p.validate()?;
    let (_om, x) = p.displacement_params()?;
    let e_plus = element(p.kind, p.spin, pair.n, pair.m, C64::new(x, 0.0))?;
    let e_minus = element(p.kind, p.spin, pair.n, pair.m, C64::new(-x, 0.0))?;
    debug_assert_eq!(e_plus.im, 0.0);
    let r = (p.delta / 2.0) * (e_plus.re - e_minus.re);
    let r_prime = (p.delta / 2.0) * (e_plus.re + e_minus.re);
    let sigma_prime = match pair.band {
        Band::Interband => Sign::Minus,
        Band::Intraband => Sign::Plus,
    };
    let detuning = resonance_detuning(p, pair, Sign::Plus, sigma_prime)?;
    Ok(RabiPair {
        pair,
        r,
        r_prime,
        detuning,
    })
}

/// Full energy mismatch of the transition `(m, sigma) -> (n, sigma')`:
///
/// ```text
/// (n - m) Omega + E_{n,sigma'} - E_{m,sigma}
/// ```
///
/// The transition Rabi-oscillates cleanly only where this is small against
/// the relevant Rabi frequency; since the ladder gap `(n - m) Omega` enters
/// in full, that regime requires a dressed frequency comparable to the
/// shifts themselves (reachable near the su(1,1) coupling wall, where
/// `Omega -> 0`).
pub fn resonance_detuning(
    p: &ModelParams,
    pair: LevelPair,
    sigma: Sign,
    sigma_prime: Sign,
) -> Result<f64> {
    let (om, _x) = p.displacement_params()?;
    let shift_m = energy_shift(p, pair.m, sigma)?;
    let shift_n = energy_shift(p, pair.n, sigma_prime)?;
    Ok((pair.n - pair.m) as f64 * om + shift_n - shift_m)
}

/// Resonant two-state propagator for the pair's allowed transition,
/// applied to `init`.
///
/// The two amplitudes are ordered `(a_{m,sigma}, a_{n,sigma'})` with
/// `sigma' = -sigma` for interband pairs and `sigma' = sigma` for intraband
/// pairs. On resonance the propagator is
///
/// ```text
/// interband:  [[cos(R t/2),  i sigma sin(R t/2)],
///              [i sigma sin(R t/2),  cos(R t/2)]]
/// intraband:  [[cos(R' t/2), -i sigma sin(R' t/2)],
///              [-i sigma sin(R' t/2), cos(R' t/2)]]
/// ```
pub fn rwa_evolve(
    p: &ModelParams,
    pair: LevelPair,
    sigma: Sign,
    t: f64,
    init: [C64; 2],
) -> Result<[C64; 2]> {
    let rabi = rabi_frequencies(p, pair)?;
    let (c, off) = rwa_entries(&rabi, sigma, t);
    Ok([c * init[0] + off * init[1], off * init[0] + c * init[1]])
}

/// Diagonal and off-diagonal entries of the resonant two-state propagator.
pub(crate) fn rwa_entries(rabi: &RabiPair, sigma: Sign, t: f64) -> (C64, C64) {
    match rabi.pair.band {
        Band::Interband => {
            let half = rabi.r * t / 2.0;
            (
                C64::new(half.cos(), 0.0),
                C64::new(0.0, sigma.value() * half.sin()),
            )
        }
        Band::Intraband => {
            let half = rabi.r_prime * t / 2.0;
            (
                C64::new(half.cos(), 0.0),
                C64::new(0.0, -sigma.value() * half.sin()),
            )
        }
    }
}

/// Recorded trajectory of the four slow amplitudes
/// `(a_{m,+}, a_{m,-}, a_{n,+}, a_{n,-})`.
#[derive(Debug, Clone)]
pub struct TimeSeries {
    pub times: Vec<f64>,
    pub amplitudes: Vec<[C64; 4]>,
}

impl TimeSeries {
    /// `sum |a_i|^2` at record `idx`.
    pub fn norm_at(&self, idx: usize) -> f64 {
        self.amplitudes[idx].iter().map(|a| a.norm_sqr()).sum()
    }
}

struct SlowFrame {
    /// `Omega (m - n)`
    om_gap: f64,
    /// `(Delta/2) d_m`
    em: f64,
    /// `(Delta/2) d_n`
    en: f64,
    r: f64,
    r_prime: f64,
}

impl SlowFrame {
    fn deriv(&self, t: f64, psi: &[C64; 4]) -> [C64; 4] {
        let ph = |w: f64| C64::from_polar(1.0, w * t);
        let a00 = ph(self.om_gap + self.em - self.en) * (self.r_prime / 2.0);
        let a01 = ph(self.om_gap + self.em + self.en) * (-self.r / 2.0);
        let a10 = ph(self.om_gap - self.em - self.en) * (self.r / 2.0);
        let a11 = ph(self.om_gap + self.en - self.em) * (-self.r_prime / 2.0);
        let mi = C64::new(0.0, -1.0);
        [
            mi * (a00 * psi[2] + a01 * psi[3]),
            mi * (a10 * psi[2] + a11 * psi[3]),
            mi * (a00.conj() * psi[0] + a10.conj() * psi[1]),
            mi * (a01.conj() * psi[0] + a11.conj() * psi[1]),
        ]
    }
}

/// Integrate the full (no rotating-wave approximation) interaction-picture
/// dynamics of a level pair's four amplitudes with fixed-step RK4, recording
/// every step.
///
/// The interaction-picture couplings oscillate at the ladder gap, the level
/// shifts, and the Rabi frequencies; `dt` must satisfy
/// `dt <= 0.01 / max(Omega (n-m), |Delta|, |R|, |R'|)` or a step-size error
/// is returned. The requested span is divided into equal steps no longer
/// than `dt`. Norm drift beyond `1e-6` aborts with a non-unit-norm error.
pub fn full_evolve(
    p: &ModelParams,
    pair: LevelPair,
    init: [C64; 4],
    t_end: f64,
    dt: f64,
) -> Result<TimeSeries> {
    if !(t_end > 0.0 && t_end.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "t_end must be positive and finite, got {t_end}"
        )));
    }
    if !(dt > 0.0 && dt.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "dt must be positive and finite, got {dt}"
        )));
    }
    let rabi = rabi_frequencies(p, pair)?;
    let (om, _x) = p.displacement_params()?;
    let gap = om * (pair.n - pair.m) as f64;
    let fmax = gap
        .max(p.delta.abs())
        .max(rabi.r.abs())
        .max(rabi.r_prime.abs());
    let dt_max = if fmax > 0.0 { 0.01 / fmax } else { f64::INFINITY };
    if dt > dt_max {
        return Err(Error::StepSize { dt, max: dt_max });
    }

    let frame = SlowFrame {
        om_gap: om * (pair.m as f64 - pair.n as f64),
        em: (p.delta / 2.0) * level_weight(p, pair.m)?,
        en: (p.delta / 2.0) * level_weight(p, pair.n)?,
        r: rabi.r,
        r_prime: rabi.r_prime,
    };

    let n_steps = (t_end / dt).ceil().max(1.0) as usize;
    let h = t_end / n_steps as f64;
    let norm0: f64 = init.iter().map(|a| a.norm_sqr()).sum();

    let mut psi = init;
    let mut times = Vec::with_capacity(n_steps + 1);
    let mut amplitudes = Vec::with_capacity(n_steps + 1);
    times.push(0.0);
    amplitudes.push(psi);

    for step in 0..n_steps {
        let t = step as f64 * h;
        let k1 = frame.deriv(t, &psi);
        let k2 = frame.deriv(t + h / 2.0, &add_scaled(&psi, &k1, h / 2.0));
        let k3 = frame.deriv(t + h / 2.0, &add_scaled(&psi, &k2, h / 2.0));
        let k4 = frame.deriv(t + h, &add_scaled(&psi, &k3, h));
        for i in 0..4 {
            psi[i] += (k1[i] + (k2[i] + k3[i]) * 2.0 + k4[i]) * (h / 6.0);
        }
        let norm: f64 = psi.iter().map(|a| a.norm_sqr()).sum();
        if (norm - norm0).abs() > 1e-6 * norm0.max(1.0) {
            return Err(Error::NonUnitNorm { norm });
        }
        times.push((step + 1) as f64 * h);
        amplitudes.push(psi);
    }
    Ok(TimeSeries { times, amplitudes })
}

fn add_scaled(a: &[C64; 4], b: &[C64; 4], s: f64) -> [C64; 4] {
    [
        a[0] + b[0] * s,
        a[1] + b[1] * s,
        a[2] + b[2] * s,
        a[3] + b[3] * s,
    ]
}

/// Table of dressed-frame coupling amplitudes
/// `T_lambda(n, m) = (Delta/2) <n|U(lambda x)|m>` for `n, m <= m_max`,
/// built entirely from closed-form elements.
///
/// Rabi frequencies and level shifts are combinations of its entries:
/// `R = T_+(n,m) - T_-(n,m)`, `R' = T_+(n,m) + T_-(n,m)`, and
/// `E_{m,+} = T_+(m,m)`.
#[derive(Debug, Clone)]
pub struct HfTable {
    pub m_max: usize,
    pub delta: f64,
    pub plus: ndarray::Array2<C64>,
    pub minus: ndarray::Array2<C64>,
}

impl HfTable {
    /// `T_lambda(n, m)`.
    pub fn coeff(&self, lambda: Sign, n: usize, m: usize) -> C64 {
        match lambda {
            Sign::Plus => self.plus[[n, m]],
            Sign::Minus => self.minus[[n, m]],
        }
    }
}

/// Build the coupling table element by element from the closed forms.
pub fn hf_matrix_elementwise(p: &ModelParams, m_max: usize) -> Result<HfTable> {
    p.validate()?;
    let (_om, x) = p.displacement_params()?;
    let side = m_max + 1;
    let mut plus = ndarray::Array2::<C64>::zeros((side, side));
    let mut minus = ndarray::Array2::<C64>::zeros((side, side));
    for n in 0..side {
        for m in 0..side {
            plus[[n, m]] = element(p.kind, p.spin, n, m, C64::new(x, 0.0))? * (p.delta / 2.0);
            minus[[n, m]] = element(p.kind, p.spin, n, m, C64::new(-x, 0.0))? * (p.delta / 2.0);
        }
    }
    Ok(HfTable {
        m_max,
        delta: p.delta,
        plus,
        minus,
    })
}

/// Branch superposition `(|{+, n}> + sigma |{-, n}>)/sqrt(2)` at truncation
/// `dim`, as a dense vector in the composite basis.
///
/// These combinations diagonalize the two-level term within a doublet: the
/// expectation of `(Delta/2) sigma3 (x) 1` in this state is exactly the
/// level shift `E_{n,sigma}`.
pub fn cat_state(
    p: &ModelParams,
    sigma: Sign,
    n: usize,
    dim: usize,
) -> Result<ndarray::Array1<C64>> {
    let plus = crate::hamiltonian::dressed_state(p, Sign::Plus, n, dim)?;
    let minus = crate::hamiltonian::dressed_state(p, Sign::Minus, n, dim)?;
    let s = sigma.value();
    let inv = std::f64::consts::FRAC_1_SQRT_2;
    Ok(ndarray::Zip::from(&plus)
        .and(&minus)
        .map_collect(|a, b| (a + b * s) * inv))
}

/// Closed-form solution of the secular-term demonstration equation
/// `a'(t) = e^{i omega t} a(t)`, `a(0) = c`:
///
/// * `omega = 0`: `a(t) = c e^t` — unbounded secular growth;
/// * `omega != 0`: `a(t) = c exp((e^{i omega t} - 1)/(i omega))` — bounded,
///   periodic modulus.
///
/// The contrast is why resonant and non-resonant couplings must be treated
/// differently when averaging fast oscillations.
pub fn secular_demo(omega: f64, c: C64, t: f64) -> C64 {
    if omega == 0.0 {
        c * t.exp()
    } else {
        let iw = C64::new(0.0, omega);
        let phase = ((iw * t).exp() - 1.0) / iw;
        c * phase.exp()
    }
}
