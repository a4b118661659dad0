//! Closed marker curves and their differential geometry.
//!
//! A front is a simple closed curve traversed counter-clockwise, sampled at N
//! markers that are images of the uniform parameter grid t_l = 2πl/N. The
//! burnt gas occupies the interior; the unit normal points into the burnt
//! side (the left of the tangent), and curvature is +1/R on a circle.

use serde::{Deserialize, Serialize};

use crate::error::{FlameError, Result};
use crate::spectral;

/// Marker positions of a closed front, ordered counter-clockwise.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Curve {
    pub x: Vec<f64>,
    pub y: Vec<f64>,
}

impl Curve {
    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    /// Circle of given radius about `center`, markers uniform in angle.
    pub fn circle(n: usize, radius: f64, center: (f64, f64)) -> Curve {
        let mut x = Vec::with_capacity(n);
        let mut y = Vec::with_capacity(n);
        for l in 0..n {
            let t = std::f64::consts::TAU * l as f64 / n as f64;
            x.push(center.0 + radius * t.cos());
            y.push(center.1 + radius * t.sin());
        }
        Curve { x, y }
    }

    /// Circle with radial cosine perturbations: r(θ) = R + Σ aₚ·cos(mₚθ + φₚ).
    /// Each perturbation is (mode, amplitude, phase); amplitudes are absolute
    /// lengths, not fractions of the radius.
    pub fn perturbed_circle(n: usize, radius: f64, perturbations: &[(usize, f64, f64)]) -> Curve {
        let mut x = Vec::with_capacity(n);
        let mut y = Vec::with_capacity(n);
        for l in 0..n {
            let t = std::f64::consts::TAU * l as f64 / n as f64;
            let mut r = radius;
            for &(m, amp, phase) in perturbations {
                r += amp * (m as f64 * t + phase).cos();
            }
            x.push(r * t.cos());
            y.push(r * t.sin());
        }
        Curve { x, y }
    }

    /// Chord lengths between consecutive markers: (min, max).
    pub fn spacing_range(&self) -> (f64, f64) {
        let n = self.len();
        let mut lo = f64::INFINITY;
        let mut hi = 0.0_f64;
        for i in 0..n {
            let j = (i + 1) % n;
            let d = (self.x[j] - self.x[i]).hypot(self.y[j] - self.y[i]);
            lo = lo.min(d);
            hi = hi.max(d);
        }
        (lo, hi)
    }
}

/// Pointwise differential geometry of a curve plus its global measures.
#[derive(Debug, Clone)]
pub struct Frame {
    /// Unit tangent components along the traversal direction.
    pub tx: Vec<f64>,
    pub ty: Vec<f64>,
    /// Unit normal components, pointing into the burnt interior.
    pub nx: Vec<f64>,
    pub ny: Vec<f64>,
    /// Signed curvature, +1/R on a counter-clockwise circle.
    pub kappa: Vec<f64>,
    /// Parametric speed |r'(t)|.
    pub metric: Vec<f64>,
    /// Arc quadrature weights (2π/N)·|r'|.
    pub weights: Vec<f64>,
    pub perimeter: f64,
    pub area: f64,
    pub centroid: (f64, f64),
}

/// Build the frame of a closed curve with spectral derivatives.
///
/// Requires an even marker count ≥ 8 (the layer quadrature works on N = 2n
/// points) and a counter-clockwise, non-degenerate parametrization.
pub fn build_frame(curve: &Curve) -> Result<Frame> {
    let n = curve.len();
    if n != curve.y.len() {
        return Err(FlameError::Geometry("x and y marker arrays differ in length".into()));
    }
    if n < 8 || n % 2 != 0 {
        return Err(FlameError::Geometry(format!(
            "marker count must be even and at least 8, got {n}"
        )));
    }
    let xp = spectral::deriv_t(&curve.x);
    let yp = spectral::deriv_t(&curve.y);
    let xpp = spectral::deriv2_t(&curve.x);
    let ypp = spectral::deriv2_t(&curve.y);

    let mut metric = Vec::with_capacity(n);
    for l in 0..n {
        metric.push(xp[l].hypot(yp[l]));
    }
    let max_metric = metric.iter().cloned().fold(0.0_f64, f64::max);
    let min_metric = metric.iter().cloned().fold(f64::INFINITY, f64::min);
    if !(min_metric > 1e-10 * max_metric) || max_metric == 0.0 {
        return Err(FlameError::Geometry(
            "degenerate parametrization: |r'(t)| collapses at a marker".into(),
        ));
    }

    let dt = std::f64::consts::TAU / n as f64;
    let mut tx = Vec::with_capacity(n);
    let mut ty = Vec::with_capacity(n);
    let mut nx = Vec::with_capacity(n);
    let mut ny = Vec::with_capacity(n);
    let mut kappa = Vec::with_capacity(n);
    let mut weights = Vec::with_capacity(n);
    let mut perimeter = 0.0;
    let mut area2 = 0.0;
    let mut cx_acc = 0.0;
    let mut cy_acc = 0.0;
    for l in 0..n {
        let g = metric[l];
        tx.push(xp[l] / g);
        ty.push(yp[l] / g);
        nx.push(-yp[l] / g);
        ny.push(xp[l] / g);
        kappa.push((xp[l] * ypp[l] - yp[l] * xpp[l]) / (g * g * g));
        let w = dt * g;
        weights.push(w);
        perimeter += w;
        area2 += dt * (curve.x[l] * yp[l] - curve.y[l] * xp[l]);
        cx_acc += dt * curve.x[l] * curve.x[l] * yp[l];
        cy_acc -= dt * curve.y[l] * curve.y[l] * xp[l];
    }
    let area = 0.5 * area2;
    if area <= 0.0 {
        return Err(FlameError::Geometry(
            "curve must be traversed counter-clockwise (signed area is not positive)".into(),
        ));
    }
    let centroid = (cx_acc / (2.0 * area), cy_acc / (2.0 * area));

    Ok(Frame { tx, ty, nx, ny, kappa, metric, weights, perimeter, area, centroid })
}

/// d(field)/ds along the curve (spectral in the parameter, chain rule).
pub fn surface_derivative(frame: &Frame, field: &[f64]) -> Vec<f64> {
    let d = spectral::deriv_t(field);
    d.iter().zip(&frame.metric).map(|(v, g)| v / g).collect()
}

/// Second surface derivative d²(field)/ds².
pub fn surface_laplacian(frame: &Frame, field: &[f64]) -> Vec<f64> {
    let first = surface_derivative(frame, field);
    surface_derivative(frame, &first)
}

fn polygon_area_centroid(curve: &Curve) -> (f64, (f64, f64)) {
    let n = curve.len();
    let mut a2 = 0.0;
    let mut cx = 0.0;
    let mut cy = 0.0;
    for i in 0..n {
        let j = (i + 1) % n;
        let cross = curve.x[i] * curve.y[j] - curve.x[j] * curve.y[i];
        a2 += cross;
        cx += (curve.x[i] + curve.x[j]) * cross;
        cy += (curve.y[i] + curve.y[j]) * cross;
    }
    let area = 0.5 * a2;
    (area, (cx / (6.0 * area), cy / (6.0 * area)))
}

/// Amplitudes of angular modes 1..=max_m of the radius about the area
/// centroid: a_m = |∮ ρ(θ) e^{-imθ} dθ| / π with midpoint angle weights.
/// Works on markers in any (monotone) angular distribution.
pub fn mode_amplitudes(curve: &Curve, max_m: usize) -> Vec<f64> {
    let n = curve.len();
    let (_, (cx, cy)) = polygon_area_centroid(curve);
    let mut rho = Vec::with_capacity(n);
    let mut theta = Vec::with_capacity(n);
    for i in 0..n {
        let dx = curve.x[i] - cx;
        let dy = curve.y[i] - cy;
        rho.push(dx.hypot(dy));
        theta.push(dy.atan2(dx));
    }
    let mut dtheta = Vec::with_capacity(n);
    for i in 0..n {
        let next = theta[(i + 1) % n];
        let prev = theta[(i + n - 1) % n];
        dtheta.push(0.5 * (next - prev).rem_euclid(std::f64::consts::TAU));
    }
    let mut amps = Vec::with_capacity(max_m);
    for m in 1..=max_m {
        let mut re = 0.0;
        let mut im = 0.0;
        for i in 0..n {
            let phase = m as f64 * theta[i];
            re += rho[i] * phase.cos() * dtheta[i];
            im -= rho[i] * phase.sin() * dtheta[i];
        }
        amps.push(re.hypot(im) / std::f64::consts::PI);
    }
    amps
}

/// Redistribute `n_out` markers uniformly in arclength, carrying the given
/// marker fields along through trigonometric interpolation. Marker 0 stays
/// anchored at parameter t = 0.
pub fn resample_uniform(
    curve: &Curve,
    fields: &[&[f64]],
    n_out: usize,
) -> Result<(Curve, Vec<Vec<f64>>)> {
    let n = curve.len();
    if n_out < 8 || n_out % 2 != 0 {
        return Err(FlameError::Geometry(format!(
            "resample target must be even and at least 8, got {n_out}"
        )));
    }
    let spec_x = spectral::fft_forward(&curve.x);
    let spec_y = spectral::fft_forward(&curve.y);
    let xp = spectral::deriv_t(&curve.x);
    let yp = spectral::deriv_t(&curve.y);
    let metric: Vec<f64> = xp.iter().zip(&yp).map(|(a, b)| a.hypot(*b)).collect();
    let min_metric = metric.iter().cloned().fold(f64::INFINITY, f64::min);
    if !(min_metric > 0.0) {
        return Err(FlameError::Geometry("degenerate parametrization in resample".into()));
    }
    let arclen = spectral::PeriodicAntiderivative::new(&metric);
    let total = arclen.total();

    let mut params = Vec::with_capacity(n_out);
    params.push(0.0);
    let mut t = 0.0;
    for i in 1..n_out {
        let target = total * i as f64 / n_out as f64;
        t += (total / n_out as f64) / arclen.deriv(t).max(min_metric);
        for _ in 0..60 {
            let err = arclen.eval(t) - target;
            if err.abs() < 1e-13 * total {
                break;
            }
            t -= err / arclen.deriv(t);
        }
        params.push(t);
    }

    let fields_spec: Vec<Vec<rustfft::num_complex::Complex64>> =
        fields.iter().map(|f| spectral::fft_forward(f)).collect();

    let mut out_x = Vec::with_capacity(n_out);
    let mut out_y = Vec::with_capacity(n_out);
    let mut out_fields: Vec<Vec<f64>> = vec![Vec::with_capacity(n_out); fields.len()];
    for &ti in &params {
        out_x.push(spectral::trig_eval(&spec_x, ti));
        out_y.push(spectral::trig_eval(&spec_y, ti));
        for (fi, fs) in fields_spec.iter().enumerate() {
            out_fields[fi].push(spectral::trig_eval(fs, ti));
        }
    }
    Ok((Curve { x: out_x, y: out_y }, out_fields))
}

/// Search for a proper crossing between non-adjacent segments of the closed
/// polyline. Returns the first offending segment index pair.
pub fn detect_self_intersection(curve: &Curve) -> Option<(usize, usize)> {
    let n = curve.len();
    let seg = |i: usize| -> (f64, f64, f64, f64) {
        let j = (i + 1) % n;
        (curve.x[i], curve.y[i], curve.x[j], curve.y[j])
    };
    let orient = |ax: f64, ay: f64, bx: f64, by: f64, cx: f64, cy: f64| -> f64 {
        (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
    };
    for i in 0..n {
        let (ax, ay, bx, by) = seg(i);
        let (ix0, ix1) = (ax.min(bx), ax.max(bx));
        let (iy0, iy1) = (ay.min(by), ay.max(by));
        for j in (i + 2)..n {
            if i == 0 && j == n - 1 {
                continue; // segments sharing marker 0
            }
            let (cx, cy, dx, dy) = seg(j);
            if cx.min(dx) > ix1 || cx.max(dx) < ix0 || cy.min(dy) > iy1 || cy.max(dy) < iy0 {
                continue;
            }
            let d1 = orient(ax, ay, bx, by, cx, cy);
            let d2 = orient(ax, ay, bx, by, dx, dy);
            let d3 = orient(cx, cy, dx, dy, ax, ay);
            let d4 = orient(cx, cy, dx, dy, bx, by);
            if d1 * d2 < 0.0 && d3 * d4 < 0.0 {
                return Some((i, j));
            }
        }
    }
    None
}
