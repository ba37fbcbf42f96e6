//! Drift and trembling-motion analysis of an expectation-value signal.

use core::f64::consts::PI;

use crate::error::Error;

/// Fewest samples the analysis accepts.
pub const MIN_SAMPLES: usize = 64;
/// Frequency-grid refinement relative to the natural resolution `2 pi / T`.
const OVERSAMPLE: f64 = 8.0;

/// Linear drift plus dominant oscillation of a signal.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ZbwAnalysis {
    /// Slope of the least-squares line.
    pub drift_velocity: f64,
    /// Value of the least-squares line at the first sample.
    pub intercept: f64,
    /// Amplitude of the dominant oscillation in the detrended signal.
    pub oscillation_amplitude: f64,
    /// Angular frequency of that oscillation.
    pub oscillation_frequency: f64,
    /// RMS of the detrended signal.
    pub linear_residual: f64,
}

fn hann(j: usize, n: usize) -> f64 {
    0.5 * (1.0 - libm::cos(2.0 * PI * j as f64 / (n - 1) as f64))
}

/// `|sum_j w_j r_j e^{-i omega t_j}|`.
fn dtft(r: &[f64], w: &[f64], dt: f64, omega: f64) -> f64 {
    let (mut re, mut im) = (0.0, 0.0);
    for (j, (&rj, &wj)) in r.iter().zip(w).enumerate() {
        let phase = omega * dt * j as f64;
        re += wj * rj * libm::cos(phase);
        im -= wj * rj * libm::sin(phase);
    }
    libm::sqrt(re * re + im * im)
}

/// Detrends `signal(times)` and locates its dominant oscillation.
///
/// The spectrum is a Hann-windowed discrete-time Fourier transform sampled
/// on a frequency grid eight times finer than `2 pi / T`, from two
/// fundamental periods up to Nyquist; the peak is refined by a parabola
/// through the three largest neighbouring samples.
pub fn zbw_analysis(times: &[f64], signal: &[f64]) -> Result<ZbwAnalysis, Error> {
    let n = times.len();
    if signal.len() != n {
        return Err(Error::DimensionMismatch);
    }
    if n < MIN_SAMPLES {
        return Err(Error::TooFewSamples {
            needed: MIN_SAMPLES,
            got: n,
        });
    }
    if times.iter().chain(signal).any(|v| !v.is_finite()) {
        return Err(Error::NonFinite("trajectory sample"));
    }
    let span = times[n - 1] - times[0];
    let dt = span / (n - 1) as f64;
    if dt <= 0.0 {
        return Err(Error::NonUniformSamples);
    }
    let slack = 1e-9 * span.abs().max(1.0);
    for (j, &t) in times.iter().enumerate() {
        if (t - times[0] - dt * j as f64).abs() > slack {
            return Err(Error::NonUniformSamples);
        }
    }

    let tbar = times.iter().sum::<f64>() / n as f64;
    let xbar = signal.iter().sum::<f64>() / n as f64;
    let (mut sxy, mut sxx) = (0.0, 0.0);
    for (&t, &x) in times.iter().zip(signal) {
        sxy += (t - tbar) * (x - xbar);
        sxx += (t - tbar) * (t - tbar);
    }
    let slope = sxy / sxx;
    let intercept = xbar + slope * (times[0] - tbar);
    let resid: alloc::vec::Vec<f64> = times
        .iter()
        .zip(signal)
        .map(|(&t, &x)| x - (xbar + slope * (t - tbar)))
        .collect();
    let rms = libm::sqrt(resid.iter().map(|r| r * r).sum::<f64>() / n as f64);

    let window: alloc::vec::Vec<f64> = (0..n).map(|j| hann(j, n)).collect();
    let wsum: f64 = window.iter().sum();
    let step = 2.0 * PI / (OVERSAMPLE * span);
    let lo = 2.0 * 2.0 * PI / span;
    let hi = PI / dt;
    let count = libm::floor((hi - lo) / step) as usize;
    let mut best = (0usize, -1.0);
    let mut mags = alloc::vec::Vec::with_capacity(count + 1);
    for k in 0..=count {
        let m = dtft(&resid, &window, dt, lo + step * k as f64);
        if m > best.1 {
            best = (k, m);
        }
        mags.push(m);
    }
    let (k, peak) = best;
    let mut omega = lo + step * k as f64;
    if k > 0 && k < count {
        let (a, b, c) = (mags[k - 1], mags[k], mags[k + 1]);
        let denom = a - 2.0 * b + c;
        if denom < 0.0 {
            omega += 0.5 * step * (a - c) / denom;
        }
    }
    let mag = dtft(&resid, &window, dt, omega).max(peak);
    let (amplitude, frequency) = if rms == 0.0 {
        (0.0, 0.0)
    } else {
        (2.0 * mag / wsum, omega)
    };
    Ok(ZbwAnalysis {
        drift_velocity: slope,
        intercept,
        oscillation_amplitude: amplitude,
        oscillation_frequency: frequency,
        linear_residual: rms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    fn samples(n: usize, t_max: f64, f: impl Fn(f64) -> f64) -> (Vec<f64>, Vec<f64>) {
        let t: Vec<f64> = (0..n).map(|j| j as f64 / (n - 1) as f64 * t_max).collect();
        let x = t.iter().map(|&t| f(t)).collect();
        (t, x)
    }

    #[test]
    fn recovers_single_mode() {
        let (t, x) = samples(513, 10.0 * PI, |t| libm::cos(2.0 * t));
        let a = zbw_analysis(&t, &x).unwrap();
        assert!(
            (a.oscillation_frequency - 2.0).abs() < 2e-3,
            "{}",
            a.oscillation_frequency
        );
        assert!(
            (a.oscillation_amplitude - 1.0).abs() < 0.02,
            "{}",
            a.oscillation_amplitude
        );
    }

    #[test]
    fn separates_drift_from_oscillation() {
        let (t, x) = samples(400, 40.0, |t| {
            0.3 + 0.7 * t + 0.01 * libm::sin(3.1 * t + 0.4)
        });
        let a = zbw_analysis(&t, &x).unwrap();
        assert!((a.drift_velocity - 0.7).abs() < 1e-3);
        assert!((a.oscillation_frequency - 3.1).abs() < 3.1e-3);
        assert!((a.oscillation_amplitude - 0.01).abs() < 1e-3);
    }

    #[test]
    fn pure_line_has_no_oscillation() {
        let (t, x) = samples(100, 5.0, |t| 2.0 - 0.5 * t);
        let a = zbw_analysis(&t, &x).unwrap();
        assert!(a.linear_residual < 1e-14);
        assert!(a.oscillation_amplitude < 1e-14);
        assert!((a.intercept - 2.0).abs() < 1e-14);
    }

    #[test]
    fn input_validation() {
        let (t, x) = samples(63, 5.0, |t| t);
        assert_eq!(
            zbw_analysis(&t, &x).unwrap_err(),
            Error::TooFewSamples {
                needed: 64,
                got: 63
            }
        );
        let (mut t, x) = samples(64, 5.0, |t| t);
        t[10] += 0.01;
        assert_eq!(zbw_analysis(&t, &x).unwrap_err(), Error::NonUniformSamples);
        assert_eq!(
            zbw_analysis(&t, &x[..10]).unwrap_err(),
            Error::DimensionMismatch
        );
    }
}
