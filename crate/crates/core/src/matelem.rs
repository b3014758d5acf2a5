//! Closed-form matrix elements of the exponentiated ladder generators.
//!
//! For each algebra the unitary `exp(z L+ - conj(z) L-)` has elements in the
//! number basis in closed form:
//!
//! * oscillator (displacement operator): associated Laguerre polynomials in
//!   `|z|^2` with a Gaussian prefactor;
//! * su(1,1) (squeeze-type operator): a finite alternating sum in
//!   `|kappa|^2` with `kappa = sinh|z| * z/|z|` and Pochhammer prefactors;
//! * su(2) (rotation): the analogous alternating sum with
//!   `kappa = sin|z| * z/|z|` and falling-factorial prefactors.
//!
//! All factorial/Gamma prefactors are evaluated in the log domain and the
//! alternating sums use a running max-log rescaling plus compensated
//! summation, so elements stay finite and accurate for indices far beyond
//! where naive factorials overflow.
//!
//! The su(2) form uses the principal branch of the underlying Gauss
//! decomposition: `kappa = sin|z| * z/|z|` is faithful only for
//! `|z| < pi/2`. Every argument produced by the model dressing
//! (`x = atan(2g/omega)`) lies inside that range; outside it the closed form
//! is still evaluated as written but no longer equals the operator
//! exponential (cross-check against [`oracle_element`] if in doubt).

use ndarray::Array2;
use num_complex::Complex64 as C64;
use statrs::function::gamma::ln_gamma;

use crate::algebra::{two_j_of, AlgebraKind, LadderRep};
use crate::error::{Error, Result};
use crate::linalg::ladder_exponential;

/// `n!` by direct product: exact through `18!`, one rounding per step
/// beyond, infinity past `170!`.
fn fact(n: usize) -> f64 {
    let mut p = 1.0f64;
    for i in 2..=n {
        p *= i as f64;
    }
    p
}

/// Pochhammer symbol `(a)_c = a (a+1) ... (a+c-1)` by direct product.
fn pochhammer_product(a: f64, c: usize) -> f64 {
    let mut p = 1.0f64;
    for i in 0..c {
        p *= a + i as f64;
    }
    p
}

/// Falling factorial `a (a-1) ... (a-c+1)` for integer `a >= c`.
fn falling_product(a: usize, c: usize) -> f64 {
    let mut p = 1.0f64;
    for i in 0..c {
        p *= (a - i) as f64;
    }
    p
}

/// `ln n!`: logarithm of the directly computed factorial for small `n`
/// (sharper than the Lanczos gamma approximation there), `ln_gamma` beyond.
fn ln_fact(n: usize) -> f64 {
    if n <= 40 {
        fact(n).ln()
    } else {
        ln_gamma(n as f64 + 1.0)
    }
}

/// Compensated (Kahan) accumulator for alternating sums.
#[derive(Default)]
struct Kahan {
    sum: f64,
    carry: f64,
}

impl Kahan {
    fn add(&mut self, v: f64) {
        let y = v - self.carry;
        let t = self.sum + y;
        self.carry = (t - self.sum) - y;
        self.sum = t;
    }
}

/// Log of the Pochhammer symbol `(a)_n = a (a+1) ... (a+n-1)`, for `a > 0`.
///
/// `(a)_0 = 1` by convention, so `log_pochhammer(a, 0) = 0`.
pub fn log_pochhammer(a: f64, n: usize) -> Result<f64> {
    if !(a > 0.0 && a.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "log_pochhammer needs a > 0, got {a}"
        )));
    }
    Ok(ln_gamma(a + n as f64) - ln_gamma(a))
}

/// Associated Laguerre polynomial `L_k^(alpha)(x)` by the direct alternating
/// sum `sum_j (-1)^j C(k+alpha, k-j) x^j / j!`.
///
/// Numerically fine for small `k`; retained as the reference evaluation and
/// as a cross-check oracle for the recurrence.
pub fn laguerre_direct_sum(k: usize, alpha: usize, x: f64) -> f64 {
    let mut acc = Kahan::default();
    for j in 0..=k {
        // C(k+alpha, k-j) = prod_{i=1}^{k-j} (alpha+j+i)/i, built
        // multiplicatively so small cases stay exact
        let mut binom = 1.0f64;
        for i in 1..=(k - j) {
            binom *= (alpha + j + i) as f64;
            binom /= i as f64;
        }
        let term = binom * pow_nonneg(x, j) / fact(j);
        acc.add(if j % 2 == 0 { term } else { -term });
    }
    acc.sum
}

/// Associated Laguerre polynomial `L_k^(alpha)(x)` by the stable forward
/// three-term recurrence in the degree.
pub fn laguerre_recurrence(k: usize, alpha: usize, x: f64) -> f64 {
    let a = alpha as f64;
    if k == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = 1.0 + a - x;
    for i in 1..k {
        let i = i as f64;
        let next = ((2.0 * i + 1.0 + a - x) * cur - (i + a) * prev) / (i + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// Associated Laguerre polynomial `L_k^(alpha)(x)` for `x >= 0`.
///
/// Uses the direct alternating sum for small degree and the forward
/// recurrence beyond `k = 20`, where the sum starts losing digits to
/// cancellation.
pub fn laguerre_assoc(k: usize, alpha: usize, x: f64) -> f64 {
    if k <= 20 {
        laguerre_direct_sum(k, alpha, x)
    } else {
        laguerre_recurrence(k, alpha, x)
    }
}

/// The argument map `z -> kappa` entering the su(1,1)/su(2) closed forms.
#[derive(Debug, Clone, Copy)]
pub struct KappaMap {
    pub kind: AlgebraKind,
    pub z: C64,
    pub kappa: C64,
}

impl KappaMap {
    /// Compute `kappa` for the given algebra:
    /// identity for the oscillator, `sinh|z| * z/|z|` for su(1,1),
    /// `sin|z| * z/|z|` for su(2); `z = 0` maps to `kappa = 0` exactly.
    pub fn new(kind: AlgebraKind, z: C64) -> KappaMap {
        let r = z.norm();
        let kappa = if r == 0.0 {
            C64::new(0.0, 0.0)
        } else {
            match kind {
                AlgebraKind::Heisenberg => z,
                AlgebraKind::Su11 => z * (r.sinh() / r),
                AlgebraKind::Su2 => z * (r.sin() / r),
            }
        };
        KappaMap { kind, z, kappa }
    }
}

/// The finite alternating sum shared by the diagonal energy shifts and the
/// su(1,1)/su(2) matrix elements, evaluated literally with compensated
/// summation.
///
/// With `n = m + d`:
///
/// * `Su11` (`two_s = 2K > 0`, `x >= 0`):
///   `sum_{j=0}^{m} (-1)^{m-j} Gamma(2K+m+n-j) / (Gamma(2K)(m-j)!(n-j)!j!)
///    (1+x)^j x^{m-j}`;
/// * `Su2` (`two_s = 2J` a positive integer, `0 <= x <= 1`, `n <= 2J`):
///   `sum_j (-1)^{m-j} (2J)! / ((2J-m-n+j)!(m-j)!(n-j)!j!) (1-x)^j x^{m-j}`
///   restricted to `2J - m - n + j >= 0`.
///
/// The oscillator has no such sum (its elements use Laguerre polynomials).
pub fn f_function(m: usize, d: usize, x: f64, two_s: f64, kind: AlgebraKind) -> Result<f64> {
    if !(x >= 0.0 && x.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "f_function needs x >= 0, got {x}"
        )));
    }
    let n = m + d;
    let mut acc = Kahan::default();
    match kind {
        AlgebraKind::Su11 => {
            if !(two_s > 0.0) {
                return Err(Error::InvalidSpin(format!(
                    "su(1,1) needs 2K > 0, got {two_s}"
                )));
            }
            let small = m + n <= 60;
            for j in 0..=m {
                // Gamma(2K+m+n-j)/Gamma(2K) = (2K)_{m+n-j}; the direct
                // product is exact for small indices, the log route covers
                // the rest.
                let coeff = if small {
                    pochhammer_product(two_s, m + n - j) / (fact(m - j) * fact(n - j) * fact(j))
                } else {
                    (ln_gamma(two_s + (m + n - j) as f64)
                        - ln_gamma(two_s)
                        - ln_fact(m - j)
                        - ln_fact(n - j)
                        - ln_fact(j))
                    .exp()
                };
                let term = coeff * (1.0 + x).powi(j as i32) * pow_nonneg(x, m - j);
                acc.add(if (m - j) % 2 == 0 { term } else { -term });
            }
        }
        AlgebraKind::Su2 => {
            let two_j = two_j_of(two_s / 2.0)?;
            if n > two_j {
                return Err(Error::IndexOutOfRange(format!(
                    "su(2) state index n = m + d = {n} exceeds 2J = {two_j}"
                )));
            }
            if x > 1.0 {
                return Err(Error::InvalidArgument(format!(
                    "su(2) f_function needs x <= 1, got {x}"
                )));
            }
            let j_lo = (m + n).saturating_sub(two_j);
            let small = m + n <= 60;
            for j in j_lo..=m {
                // (2J)!/(2J-m-n+j)! is the falling factorial of length
                // m+n-j, exact as a direct product for small indices
                let coeff = if small {
                    falling_product(two_j, (m + n) - j) / (fact(m - j) * fact(n - j) * fact(j))
                } else {
                    (ln_fact(two_j) - ln_fact((two_j + j) - m - n)
                        - ln_fact(m - j)
                        - ln_fact(n - j)
                        - ln_fact(j))
                    .exp()
                };
                let term = coeff * (1.0 - x).powi(j as i32) * pow_nonneg(x, m - j);
                acc.add(if (m - j) % 2 == 0 { term } else { -term });
            }
        }
        AlgebraKind::Heisenberg => {
            return Err(Error::InvalidArgument(
                "f_function is defined for the su(1,1) and su(2) families only".into(),
            ));
        }
    }
    Ok(acc.sum)
}

/// `x^k` with the convention `0^0 = 1`, avoiding `powi` edge surprises.
fn pow_nonneg(x: f64, k: usize) -> f64 {
    if k == 0 {
        1.0
    } else {
        x.powi(k as i32)
    }
}

/// Integer power of a complex number by repeated multiplication.
///
/// Exact sign behaviour matters here: for purely real bases the result stays
/// purely real with the algebraic sign, which is what makes the parity
/// selection rules (`R = 0` or `R' = 0`) hold to the last bit rather than to
/// rounding error.
fn powu(base: C64, mut k: usize) -> C64 {
    let mut acc = C64::new(1.0, 0.0);
    let mut b = base;
    while k > 0 {
        if k & 1 == 1 {
            acc *= b;
        }
        b *= b;
        k >>= 1;
    }
    acc
}

/// Oscillator displacement element `<n| exp(z a^dag - conj(z) a) |m>`.
///
/// `e^{-|z|^2/2} sqrt(n!/m!) (-conj(z))^{m-n} L_n^{(m-n)}(|z|^2)` for
/// `n <= m`, and `e^{-|z|^2/2} sqrt(m!/n!) z^{n-m} L_m^{(n-m)}(|z|^2)` for
/// `n >= m` (the two agree at `n = m`).
pub fn element_heisenberg(n: usize, m: usize, z: C64) -> C64 {
    if z == C64::new(0.0, 0.0) {
        return if n == m { C64::new(1.0, 0.0) } else { C64::new(0.0, 0.0) };
    }
    let az2 = z.norm_sqr();
    let (lo, _hi, pw) = if n <= m {
        (n, m, powu(-z.conj(), m - n))
    } else {
        (m, n, powu(z, n - m))
    };
    let ln_pref = -az2 / 2.0 + 0.5 * (ln_fact(lo) - ln_fact(n + m - lo));
    let lag = laguerre_assoc(lo, n.abs_diff(m), az2);
    pw * ln_pref.exp() * lag
}

/// su(1,1) squeeze-type element `<K,n| exp(z K+ - conj(z) K-) |K,m>`.
///
/// `sqrt(n! m! / ((2K)_n (2K)_m)) * P * (1+|kappa|^2)^{-K-(n+m)/2} * S` where
/// `P = kappa^{n-m}` (or `(-conj(kappa))^{m-n}` for `n < m`),
/// `kappa = sinh|z| * z/|z|`, and `S` is the alternating sum of
/// [`f_function`] form over `j = 0..=min(n,m)`. Valid for any Bargmann
/// index `K > 0`.
pub fn element_su11(k: f64, n: usize, m: usize, z: C64) -> Result<C64> {
    if !(k > 0.0 && k.is_finite()) {
        return Err(Error::InvalidSpin(format!(
            "su(1,1) Bargmann index must be > 0, got {k}"
        )));
    }
    if z == C64::new(0.0, 0.0) {
        return Ok(if n == m { C64::new(1.0, 0.0) } else { C64::new(0.0, 0.0) });
    }
    let two_k = 2.0 * k;
    let kappa = KappaMap::new(AlgebraKind::Su11, z).kappa;
    let ak2 = kappa.norm_sqr();
    let mu = n.min(m);
    let pw = if n >= m {
        powu(kappa, n - m)
    } else {
        powu(-kappa.conj(), m - n)
    };

    let ln_pref = 0.5
        * (ln_fact(n) + ln_fact(m) - log_pochhammer(two_k, n)? - log_pochhammer(two_k, m)?)
        - (k + (n + m) as f64 / 2.0) * ak2.ln_1p();

    // Alternating sum over j with running max-log rescaling: terms can dwarf
    // both f64 range and the final answer, so exponentiate only differences.
    let ln_terms: Vec<f64> = (0..=mu)
        .map(|j| {
            ln_gamma(two_k + (m + n - j) as f64) - ln_gamma(two_k)
                - ln_fact(m - j)
                - ln_fact(n - j)
                - ln_fact(j)
                + j as f64 * ak2.ln_1p()
                + (mu - j) as f64 * ak2.ln()
        })
        .collect();
    let peak = ln_terms.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let mut acc = Kahan::default();
    for (j, &lt) in ln_terms.iter().enumerate() {
        let t = (lt - peak).exp();
        acc.add(if (mu - j) % 2 == 0 { t } else { -t });
    }
    Ok(pw * (ln_pref + peak).exp() * acc.sum)
}

/// su(2) rotation element `<J,n| exp(z J+ - conj(z) J-) |J,m>`.
///
/// `sqrt(n! m! / (P_n P_m)) * P * S` with falling factorials
/// `P_k = (2J)!/(2J-k)!`, `kappa = sin|z| * z/|z|`, and `S` the
/// constrained alternating sum with the factor `(1-|kappa|^2)^{J-(n+m)/2+j}`
/// folded into each term (the closed form groups it outside the sum, but the
/// folded grouping is algebraically identical and stays finite as
/// `|kappa| -> 1`). Principal branch: see the module docs for `|z| >= pi/2`.
pub fn element_su2(j: f64, n: usize, m: usize, z: C64) -> Result<C64> {
    let two_j = two_j_of(j)?;
    if n > two_j || m > two_j {
        return Err(Error::IndexOutOfRange(format!(
            "su(2) indices must lie in 0..=2J = {two_j}, got n = {n}, m = {m}"
        )));
    }
    if z == C64::new(0.0, 0.0) {
        return Ok(if n == m { C64::new(1.0, 0.0) } else { C64::new(0.0, 0.0) });
    }
    let kappa = KappaMap::new(AlgebraKind::Su2, z).kappa;
    let ak2 = kappa.norm_sqr();
    let mu = n.min(m);
    let pw = if n >= m {
        powu(kappa, n - m)
    } else {
        powu(-kappa.conj(), m - n)
    };

    let ln_pref = 0.5
        * (ln_fact(n) + ln_fact(m) - (ln_fact(two_j) - ln_fact(two_j - n))
            - (ln_fact(two_j) - ln_fact(two_j - m)));

    let j_lo = (m + n).saturating_sub(two_j);
    let ln_base = (1.0 - ak2).ln(); // -inf exactly at |kappa| = 1 is fine below
    let ln_terms: Vec<f64> = (j_lo..=mu)
        .map(|jj| {
            let expo = j - (n + m) as f64 / 2.0 + jj as f64;
            let base_part = if expo == 0.0 { 0.0 } else { expo * ln_base };
            ln_fact(two_j) - ln_fact((two_j + jj) - m - n)
                - ln_fact(m - jj)
                - ln_fact(n - jj)
                - ln_fact(jj)
                + base_part
                + (mu - jj) as f64 * ak2.ln()
        })
        .collect();
    let peak = ln_terms.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    if peak == f64::NEG_INFINITY {
        return Ok(C64::new(0.0, 0.0));
    }
    let mut acc = Kahan::default();
    for (idx, &lt) in ln_terms.iter().enumerate() {
        let jj = j_lo + idx;
        let t = (lt - peak).exp();
        acc.add(if (mu - jj) % 2 == 0 { t } else { -t });
    }
    Ok(pw * (ln_pref + peak).exp() * acc.sum)
}

/// Closed-form element dispatcher over the algebra kinds.
///
/// `spin` is ignored for the oscillator.
pub fn element(kind: AlgebraKind, spin: f64, n: usize, m: usize, z: C64) -> Result<C64> {
    match kind {
        AlgebraKind::Heisenberg => Ok(element_heisenberg(n, m, z)),
        AlgebraKind::Su11 => element_su11(spin, n, m, z),
        AlgebraKind::Su2 => element_su2(spin, n, m, z),
    }
}

/// Brute-force operator `exp(z L+ - conj(z) L-)` of a representation as a
/// full dense matrix (no convergence check; entries near the truncation
/// boundary are corrupted for the infinite-tower kinds).
pub fn oracle_operator(rep: &LadderRep, z: C64) -> Result<Array2<C64>> {
    ladder_exponential(&rep.lp, &rep.lm, z)
}

/// Brute-force element `<n| exp(z L+ - conj(z) L-) |m>` by dense matrix
/// exponential, with a truncation-convergence check.
///
/// For the truncated kinds the exponential is recomputed at `dim + 20` and
/// the two entries must agree within `tol`, otherwise a convergence error is
/// returned. su(2) representations are exact, so the entry is returned
/// directly.
pub fn oracle_element(rep: &LadderRep, n: usize, m: usize, z: C64, tol: f64) -> Result<C64> {
    if n >= rep.dim || m >= rep.dim {
        return Err(Error::IndexOutOfRange(format!(
            "oracle indices must be < dim = {}, got n = {n}, m = {m}",
            rep.dim
        )));
    }
    let u1 = oracle_operator(rep, z)?;
    let v1 = u1[[n, m]];
    if rep.kind == AlgebraKind::Su2 {
        return Ok(v1);
    }
    let bigger = LadderRep::new(rep.kind, rep.spin, rep.dim + 20)?;
    let u2 = oracle_operator(&bigger, z)?;
    let drift = (v1 - u2[[n, m]]).norm();
    if drift > tol {
        return Err(Error::Convergence(format!(
            "element ({n},{m}) moved by {drift:.3e} when the cutoff grew from {} to {} (tol {tol:.1e})",
            rep.dim,
            rep.dim + 20
        )));
    }
    Ok(v1)
}
