//! Fourier utilities on periodic marker data: derivatives, sharp mode cutoff,
//! noise-floor cleaning, the vorticity gauge projection, and trigonometric
//! interpolation used by resampling.
//!
//! Marker fields are samples at the uniform parameter nodes t_l = 2πl/N of a
//! closed curve. Spectra are kept in rustfft's unnormalized layout; every
//! public helper hands back plain sample arrays.

use rustfft::num_complex::Complex64;
use rustfft::FftPlanner;

/// Forward FFT, unnormalized: `F[k] = Σ_l x[l] e^{-2πi k l / N}`.
pub fn fft_forward(x: &[f64]) -> Vec<Complex64> {
    let n = x.len();
    let mut buf: Vec<Complex64> = x.iter().map(|&v| Complex64::new(v, 0.0)).collect();
    FftPlanner::new().plan_fft_forward(n).process(&mut buf);
    buf
}

/// Inverse FFT of a spectrum produced by [`fft_forward`]; returns the real part
/// with the 1/N normalization applied.
pub fn fft_inverse_real(spec: &[Complex64]) -> Vec<f64> {
    let n = spec.len();
    let mut buf = spec.to_vec();
    FftPlanner::new().plan_fft_inverse(n).process(&mut buf);
    let scale = 1.0 / n as f64;
    buf.iter().map(|c| c.re * scale).collect()
}

/// Signed integer frequency for spectrum index `k` of an N-point transform.
#[inline]
pub fn signed_freq(k: usize, n: usize) -> i64 {
    if 2 * k <= n {
        k as i64
    } else {
        k as i64 - n as i64
    }
}

/// Spectral d/dt at the nodes. The Nyquist mode is dropped (its derivative is
/// not representable on the grid).
pub fn deriv_t(x: &[f64]) -> Vec<f64> {
    let n = x.len();
    let mut spec = fft_forward(x);
    for (k, c) in spec.iter_mut().enumerate() {
        if n % 2 == 0 && 2 * k == n {
            *c = Complex64::new(0.0, 0.0);
        } else {
            let m = signed_freq(k, n) as f64;
            *c *= Complex64::new(0.0, m);
        }
    }
    fft_inverse_real(&spec)
}

/// Spectral d²/dt² at the nodes (−m² multiplier; the Nyquist cosine is kept,
/// its second derivative is representable).
pub fn deriv2_t(x: &[f64]) -> Vec<f64> {
    let n = x.len();
    let mut spec = fft_forward(x);
    for (k, c) in spec.iter_mut().enumerate() {
        let m = signed_freq(k, n) as f64;
        *c *= -m * m;
    }
    fft_inverse_real(&spec)
}

/// Zero every mode with |frequency| > keep_fraction · N/2, in place on samples.
pub fn sharp_filter(x: &mut [f64], keep_fraction: f64) {
    let n = x.len();
    let cutoff = (keep_fraction * (n as f64 / 2.0)).floor() as i64;
    let mut spec = fft_forward(x);
    for (k, c) in spec.iter_mut().enumerate() {
        if signed_freq(k, n).abs() > cutoff {
            *c = Complex64::new(0.0, 0.0);
        }
    }
    x.copy_from_slice(&fft_inverse_real(&spec));
}

/// Zero every spectral coefficient smaller than `floor_rel` times the largest
/// coefficient magnitude of the field (noise-floor cleaning, applied each step
/// so round-off never seeds growing short-wave content).
pub fn noise_floor(x: &mut [f64], floor_rel: f64) {
    let mut spec = fft_forward(x);
    let max_mag = spec.iter().map(|c| c.norm()).fold(0.0_f64, f64::max);
    if max_mag == 0.0 {
        return;
    }
    let floor = floor_rel * max_mag;
    for c in spec.iter_mut() {
        if c.norm() < floor {
            *c = Complex64::new(0.0, 0.0);
        }
    }
    x.copy_from_slice(&fft_inverse_real(&spec));
}

/// Per-mode gauge projection of the evolved surface pair (ψ, ω).
///
/// The burnt-side vorticity representation is redundant: for every arc
/// wavenumber k the combination χ = kψ̂ − ω̂ is the only part the front
/// dynamics can see, while the orthogonal direction (1, k) is a pure gauge
/// degree of freedom with its own exponential instability. Each step we keep χ
/// and drop the gauge component: (ψ̂, ω̂) ← χ·(k, −1)/(1+k²) for every mode
/// except the mean. `perimeter` converts integer mode numbers to arc
/// wavenumbers k = 2π·m/P.
pub fn gauge_project(psi: &mut [f64], omega: &mut [f64], perimeter: f64) {
    let n = psi.len();
    assert_eq!(n, omega.len());
    let mut sp = fft_forward(psi);
    let mut so = fft_forward(omega);
    for k in 0..n {
        let m = signed_freq(k, n).unsigned_abs() as f64;
        if m == 0.0 {
            continue;
        }
        let kw = 2.0 * std::f64::consts::PI * m / perimeter;
        let chi = kw * sp[k] - so[k];
        let denom = 1.0 + kw * kw;
        sp[k] = chi * (kw / denom);
        so[k] = chi * (-1.0 / denom);
    }
    psi.copy_from_slice(&fft_inverse_real(&sp));
    omega.copy_from_slice(&fft_inverse_real(&so));
}

/// Evaluate the trigonometric interpolant of `spec` (unnormalized spectrum of a
/// real field) at an arbitrary parameter value `t`.
pub fn trig_eval(spec: &[Complex64], t: f64) -> f64 {
    let n = spec.len();
    let mut acc = spec[0].re;
    let half = n / 2;
    for k in 1..half {
        let (s, c) = ((k as f64) * t).sin_cos();
        acc += 2.0 * (spec[k].re * c - spec[k].im * s);
    }
    if n % 2 == 0 {
        let (s, c) = ((half as f64) * t).sin_cos();
        acc += spec[half].re * c - spec[half].im * s;
    } else if n > 1 {
        let (s, c) = ((half as f64) * t).sin_cos();
        acc += 2.0 * (spec[half].re * c - spec[half].im * s);
    }
    acc / n as f64
}

/// Cumulative integral of a positive periodic sample set (a curve metric):
/// `s(t) = mean·t + (periodic part)`, exact for band-limited data. Used to
/// invert arclength when redistributing markers.
pub struct PeriodicAntiderivative {
    mean: f64,
    /// Spectrum of the periodic part of the antiderivative (unnormalized).
    spec: Vec<Complex64>,
    /// Spectrum of the integrand itself, for Newton iterations.
    deriv_spec: Vec<Complex64>,
}

impl PeriodicAntiderivative {
    pub fn new(values: &[f64]) -> Self {
        let n = values.len();
        let spec_f = fft_forward(values);
        let mean = spec_f[0].re / n as f64;
        let mut spec = vec![Complex64::new(0.0, 0.0); n];
        for k in 1..n {
            if n % 2 == 0 && 2 * k == n {
                continue; // Nyquist has no smooth antiderivative on the grid
            }
            let m = signed_freq(k, n) as f64;
            spec[k] = spec_f[k] / Complex64::new(0.0, m);
        }
        PeriodicAntiderivative { mean, spec, deriv_spec: spec_f }
    }

    /// s(t) with s(0) = 0.
    pub fn eval(&self, t: f64) -> f64 {
        self.mean * t + trig_eval(&self.spec, t) - trig_eval(&self.spec, 0.0)
    }

    /// s'(t) = the interpolated integrand.
    pub fn deriv(&self, t: f64) -> f64 {
        trig_eval(&self.deriv_spec, t)
    }

    /// Total integral over one period.
    pub fn total(&self) -> f64 {
        self.mean * 2.0 * std::f64::consts::PI
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{PI, TAU};

    fn nodes(n: usize) -> Vec<f64> {
        (0..n).map(|l| TAU * l as f64 / n as f64).collect()
    }

    #[test]
    fn spectral_derivative_is_exact_for_band_limited_data() {
        let n = 64;
        let x: Vec<f64> = nodes(n).iter().map(|&t| (3.0 * t).sin() + 0.5 * (7.0 * t).cos()).collect();
        let d = deriv_t(&x);
        for (l, &t) in nodes(n).iter().enumerate() {
            let exact = 3.0 * (3.0 * t).cos() - 3.5 * (7.0 * t).sin();
            assert!((d[l] - exact).abs() < 1e-12, "node {l}: {} vs {exact}", d[l]);
        }
    }

    #[test]
    fn sharp_filter_zeroes_high_modes_and_keeps_low_ones() {
        let n = 48;
        let mut x: Vec<f64> = nodes(n).iter().map(|&t| (2.0 * t).cos() + (20.0 * t).cos()).collect();
        sharp_filter(&mut x, 2.0 / 3.0); // cutoff = 16
        for (l, &t) in nodes(n).iter().enumerate() {
            assert!((x[l] - (2.0 * t).cos()).abs() < 1e-12);
        }
        let mut y: Vec<f64> = nodes(n).iter().map(|&t| (15.0 * t).cos()).collect();
        let y0 = y.clone();
        sharp_filter(&mut y, 2.0 / 3.0);
        for l in 0..n {
            assert!((y[l] - y0[l]).abs() < 1e-12);
        }
    }

    #[test]
    fn noise_floor_strips_tiny_coefficients_without_touching_signal() {
        let n = 64;
        let mut x: Vec<f64> = nodes(n)
            .iter()
            .map(|&t| (4.0 * t).cos() + 1e-15 * (21.0 * t).sin())
            .collect();
        noise_floor(&mut x, 1e-13);
        let spec = fft_forward(&x);
        for (k, c) in spec.iter().enumerate() {
            let m = signed_freq(k, n).abs();
            if m == 4 {
                assert!((c.norm() - 32.0).abs() < 1e-9); // N/2 · amplitude
            } else {
                assert!(c.norm() == 0.0, "mode {m} should be exactly zero, got {}", c.norm());
            }
        }
    }

    #[test]
    fn noise_floor_is_a_no_op_on_the_zero_field() {
        let mut x = vec![0.0; 32];
        noise_floor(&mut x, 1e-13);
        assert!(x.iter().all(|&v| v == 0.0));
    }

    #[test]
    fn trig_eval_interpolates_between_nodes() {
        let n = 32;
        let f = |t: f64| 1.0 + (3.0 * t).cos() - 2.0 * (5.0 * t).sin();
        let x: Vec<f64> = nodes(n).iter().map(|&t| f(t)).collect();
        let spec = fft_forward(&x);
        for j in 0..200 {
            let t = TAU * j as f64 / 200.0 + 0.0123;
            assert!((trig_eval(&spec, t) - f(t)).abs() < 1e-11);
        }
    }

    #[test]
    fn gauge_projection_preserves_chi_and_is_idempotent() {
        let n = 64;
        let perim = 3.7 * TAU;
        let psi0: Vec<f64> = nodes(n).iter().map(|&t| (2.0 * t).cos() + 0.3 * (5.0 * t).sin()).collect();
        let om0: Vec<f64> = nodes(n).iter().map(|&t| 0.7 * (2.0 * t).sin() - (3.0 * t).cos()).collect();

        let chi_of = |psi: &[f64], om: &[f64]| -> Vec<Complex64> {
            let sp = fft_forward(psi);
            let so = fft_forward(om);
            (0..n)
                .map(|k| {
                    let m = signed_freq(k, n).unsigned_abs() as f64;
                    let kw = TAU * m / perim;
                    kw * sp[k] - so[k]
                })
                .collect()
        };

        let chi_before = chi_of(&psi0, &om0);
        let mut psi = psi0.clone();
        let mut om = om0.clone();
        gauge_project(&mut psi, &mut om, perim);
        let chi_after = chi_of(&psi, &om);
        for k in 0..n {
            assert!((chi_before[k] - chi_after[k]).norm() < 1e-10);
        }

        let psi1 = psi.clone();
        let om1 = om.clone();
        gauge_project(&mut psi, &mut om, perim);
        for l in 0..n {
            assert!((psi[l] - psi1[l]).abs() < 1e-12);
            assert!((om[l] - om1[l]).abs() < 1e-12);
        }
    }

    #[test]
    fn antiderivative_matches_closed_form() {
        let n = 64;
        let vals: Vec<f64> = nodes(n).iter().map(|&t| 1.0 + 0.3 * (2.0 * t).cos()).collect();
        let anti = PeriodicAntiderivative::new(&vals);
        assert!((anti.total() - TAU).abs() < 1e-12);
        for j in 0..50 {
            let t = TAU * j as f64 / 50.0;
            let exact = t + 0.15 * (2.0 * t).sin();
            assert!((anti.eval(t) - exact).abs() < 1e-11);
            assert!((anti.deriv(t) - (1.0 + 0.3 * (2.0 * t).cos())).abs() < 1e-11);
        }
        assert!((anti.eval(PI) - PI).abs() < 1e-11);
    }
}
