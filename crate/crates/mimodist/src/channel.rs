//! Frequency-domain channel generation: i.i.d. Rayleigh, planar-array LoS,
//! and a synthetic clustered multipath model with per-antenna shadowing.
//!
//! Channel coefficients are indexed `(subcarrier, antenna)`. The LoS array
//! phase for an element with normalized offsets `(l, r)` towards direction
//! `(azimuth, elevation)` is `pi * (l sin(el) cos(az) + r sin(el) sin(az))`;
//! with the default unit element spacing this reproduces half-wavelength
//! array behavior (adjacent elements decorrelate under isotropic scattering).

use ndarray::Array2;
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp, StandardNormal};

use crate::error::{Error, Result};
use crate::rng;
use crate::txchain::centered_subcarriers;

/// Rectangular antenna-array geometry as per-element normalized offsets.
#[derive(Debug, Clone, PartialEq)]
pub struct ArrayGeometry {
    rows: usize,
    cols: usize,
    /// Horizontal offset of each element, in units of the array phase model.
    horiz: Vec<f64>,
    /// Vertical offset of each element.
    vert: Vec<f64>,
}

impl ArrayGeometry {
    /// Rectangular grid with the given element spacings; element (0,0) sits
    /// at the origin. A spacing of 1.0 corresponds to half-wavelength
    /// elements under the `exp(j*pi*(..))` phase convention.
    pub fn rect(rows: usize, cols: usize, row_spacing: f64, col_spacing: f64) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidParameter(
                "array must have at least one row and column".into(),
            ));
        }
        if !(row_spacing >= 0.0) || !(col_spacing >= 0.0) {
            return Err(Error::InvalidParameter(
                "array spacings must be non-negative".into(),
            ));
        }
        let mut horiz = Vec::with_capacity(rows * cols);
        let mut vert = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                horiz.push(c as f64 * col_spacing);
                vert.push(r as f64 * row_spacing);
            }
        }
        Ok(Self {
            rows,
            cols,
            horiz,
            vert,
        })
    }

    /// Square half-wavelength grid, the desk-scale default.
    pub fn square(side: usize) -> Result<Self> {
        Self::rect(side, side, 1.0, 1.0)
    }

    pub fn num_elements(&self) -> usize {
        self.horiz.len()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn horizontal_offsets(&self) -> &[f64] {
        &self.horiz
    }

    pub fn vertical_offsets(&self) -> &[f64] {
        &self.vert
    }

    /// Per-element phase towards `(azimuth, elevation)` (radians).
    pub fn steering_phases(&self, azimuth: f64, elevation: f64) -> Vec<f64> {
        let u = elevation.sin() * azimuth.cos();
        let v = elevation.sin() * azimuth.sin();
        self.horiz
            .iter()
            .zip(&self.vert)
            .map(|(&l, &r)| std::f64::consts::PI * (l * u + r * v))
            .collect()
    }
}

#[derive(Debug, Clone, Default)]
pub struct ChannelMeta {
    pub model: String,
    pub ue_position: Option<[f64; 3]>,
}

/// Per-UE frequency-domain channel: `coefficients[(n, k)]` is the complex
/// gain from antenna `k` on subcarrier `n`.
#[derive(Debug, Clone)]
pub struct ChannelMatrix {
    coefficients: Array2<Complex64>,
    beta: f64,
    pub meta: ChannelMeta,
}

impl ChannelMatrix {
    pub fn new(coefficients: Array2<Complex64>, beta: f64, meta: ChannelMeta) -> Result<Self> {
        if !(beta > 0.0) || !beta.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "mean channel gain must be positive and finite, got {beta}"
            )));
        }
        if coefficients.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(Error::InvalidParameter(
                "channel coefficients must be finite".into(),
            ));
        }
        Ok(Self {
            coefficients,
            beta,
            meta,
        })
    }

    pub fn coefficients(&self) -> &Array2<Complex64> {
        &self.coefficients
    }

    /// Mean channel gain (linear power ratio) the instance was generated for.
    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn num_subcarriers(&self) -> usize {
        self.coefficients.nrows()
    }

    pub fn num_antennas(&self) -> usize {
        self.coefficients.ncols()
    }

    /// Sample mean of `|h|^2` over all entries.
    pub fn mean_power(&self) -> f64 {
        let n = self.coefficients.len() as f64;
        self.coefficients.iter().map(|c| c.norm_sqr()).sum::<f64>() / n
    }
}

/// Synthetic clustered-multipath parameters (stand-in for a ray-traced
/// channel): planar-wave rays grouped into clusters with exponential delays,
/// an optional deterministic LoS ray, and per-antenna log-normal shadowing.
#[derive(Debug, Clone, PartialEq)]
pub struct ClusterParams {
    pub num_clusters: usize,
    pub rays_per_cluster: usize,
    /// Mean of the exponential cluster-delay distribution, seconds.
    pub delay_spread: f64,
    /// Std of the per-ray angular offset around the cluster direction, radians.
    pub angular_spread: f64,
    /// Power ratio of the deterministic LoS ray to the scattered field.
    pub rician_k: f64,
    /// Per-antenna large-scale gain spread, dB.
    pub shadow_sigma_db: f64,
    /// Direction of the deterministic ray (and mean scatter direction when
    /// the angular spread is small).
    pub los_azimuth: f64,
    pub los_elevation: f64,
}

impl Default for ClusterParams {
    fn default() -> Self {
        Self {
            num_clusters: 4,
            rays_per_cluster: 8,
            delay_spread: 0.3e-6,
            angular_spread: 0.5,
            rician_k: 0.0,
            shadow_sigma_db: 0.0,
            los_azimuth: 0.0,
            los_elevation: 0.0,
        }
    }
}

impl ClusterParams {
    pub fn validate(&self) -> Result<()> {
        if self.num_clusters == 0 || self.rays_per_cluster == 0 {
            return Err(Error::InvalidParameter(
                "cluster and ray counts must be at least 1".into(),
            ));
        }
        let finite = [
            self.delay_spread,
            self.angular_spread,
            self.shadow_sigma_db,
            self.los_azimuth,
            self.los_elevation,
        ];
        if finite.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidParameter(
                "cluster parameters must be finite".into(),
            ));
        }
        if self.delay_spread < 0.0 || self.angular_spread < 0.0 || self.shadow_sigma_db < 0.0 {
            return Err(Error::InvalidParameter(
                "spreads must be non-negative".into(),
            ));
        }
        if self.rician_k < 0.0 || self.rician_k.is_nan() {
            return Err(Error::InvalidParameter(
                "rician_k must be non-negative".into(),
            ));
        }
        Ok(())
    }
}

/// UE placement for grid experiments.
#[derive(Debug, Clone)]
pub struct UeScenario {
    pub positions: Vec<[f64; 3]>,
    pub bs_position: [f64; 3],
    pub grid_resolution: f64,
}

impl UeScenario {
    pub fn validate(&self) -> Result<()> {
        if !(self.grid_resolution > 0.0) {
            return Err(Error::InvalidParameter(
                "grid resolution must be positive".into(),
            ));
        }
        for (i, a) in self.positions.iter().enumerate() {
            for b in &self.positions[i + 1..] {
                if a == b {
                    return Err(Error::InvalidParameter(format!(
                        "duplicate UE position {a:?}"
                    )));
                }
            }
        }
        Ok(())
    }
}

fn complex_gaussian(rng: &mut ChaCha8Rng, variance: f64) -> Complex64 {
    let s = (variance / 2.0).sqrt();
    let re: f64 = StandardNormal.sample(rng);
    let im: f64 = StandardNormal.sample(rng);
    Complex64::new(s * re, s * im)
}

/// i.i.d. circularly-symmetric complex Gaussian entries of variance `beta`.
pub fn gen_rayleigh(
    beta: f64,
    n_subcarriers: usize,
    num_antennas: usize,
    seed: u64,
) -> Result<ChannelMatrix> {
    if !(beta > 0.0) || !beta.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "beta must be positive, got {beta}"
        )));
    }
    if n_subcarriers == 0 || num_antennas == 0 {
        return Err(Error::InvalidParameter(
            "subcarrier and antenna counts must be at least 1".into(),
        ));
    }
    let mut rng = rng::rng_for(seed, "channel.rayleigh", 0);
    let h = Array2::from_shape_fn((n_subcarriers, num_antennas), |_| {
        complex_gaussian(&mut rng, beta)
    });
    ChannelMatrix::new(
        h,
        beta,
        ChannelMeta {
            model: "rayleigh".into(),
            ue_position: None,
        },
    )
}

/// Frequency-flat planar-array LoS channel towards `(azimuth, elevation)`.
pub fn gen_los(
    beta: f64,
    azimuth: f64,
    elevation: f64,
    geometry: &ArrayGeometry,
    n_subcarriers: usize,
) -> Result<ChannelMatrix> {
    if !(beta > 0.0) || !beta.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "beta must be positive, got {beta}"
        )));
    }
    if !azimuth.is_finite() || !elevation.is_finite() {
        return Err(Error::InvalidParameter("angles must be finite".into()));
    }
    if n_subcarriers == 0 {
        return Err(Error::InvalidParameter(
            "subcarrier count must be at least 1".into(),
        ));
    }
    let amp = beta.sqrt();
    let phases = geometry.steering_phases(azimuth, elevation);
    let h = Array2::from_shape_fn((n_subcarriers, geometry.num_elements()), |(_, k)| {
        Complex64::from_polar(amp, phases[k])
    });
    ChannelMatrix::new(
        h,
        beta,
        ChannelMeta {
            model: "los".into(),
            ue_position: None,
        },
    )
}

/// Draw a uniformly random unit vector.
fn random_direction(rng: &mut ChaCha8Rng) -> [f64; 3] {
    loop {
        let v: [f64; 3] = [
            StandardNormal.sample(rng),
            StandardNormal.sample(rng),
            StandardNormal.sample(rng),
        ];
        let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        if n > 1e-12 {
            return [v[0] / n, v[1] / n, v[2] / n];
        }
    }
}

/// Rotate `v` by `angle` around a random axis perpendicular to it.
fn perturb_direction(v: [f64; 3], angle: f64, rng: &mut ChaCha8Rng) -> [f64; 3] {
    let mut a = random_direction(rng);
    let dot = a[0] * v[0] + a[1] * v[1] + a[2] * v[2];
    for i in 0..3 {
        a[i] -= dot * v[i];
    }
    let n = (a[0] * a[0] + a[1] * a[1] + a[2] * a[2]).sqrt();
    if n < 1e-12 {
        return v;
    }
    for x in &mut a {
        *x /= n;
    }
    let cross = [
        a[1] * v[2] - a[2] * v[1],
        a[2] * v[0] - a[0] * v[2],
        a[0] * v[1] - a[1] * v[0],
    ];
    let (s, c) = angle.sin_cos();
    [
        v[0] * c + cross[0] * s,
        v[1] * c + cross[1] * s,
        v[2] * c + cross[2] * s,
    ]
}

/// Synthetic clustered multipath channel. Rays are planar waves with the
/// same array phase model as [`gen_los`]; cluster delays make the channel
/// frequency-selective across the (DC-centered) subcarrier grid.
///
/// The scattered field is normalized to unit mean power before combining
/// with the deterministic ray and shadowing, so `E[|h|^2] = beta`.
pub fn gen_clustered(
    beta: f64,
    params: &ClusterParams,
    geometry: &ArrayGeometry,
    n_subcarriers: usize,
    subcarrier_spacing: f64,
    seed: u64,
) -> Result<ChannelMatrix> {
    if !(beta > 0.0) || !beta.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "beta must be positive, got {beta}"
        )));
    }
    if !(subcarrier_spacing > 0.0) {
        return Err(Error::InvalidParameter(
            "subcarrier spacing must be positive".into(),
        ));
    }
    params.validate()?;
    if n_subcarriers == 0 {
        return Err(Error::InvalidParameter(
            "subcarrier count must be at least 1".into(),
        ));
    }

    let k = geometry.num_elements();
    let mut rng = rng::rng_for(seed, "channel.clustered", 0);
    let freqs: Vec<f64> = centered_subcarriers(n_subcarriers)
        .into_iter()
        .map(|i| i as f64 * subcarrier_spacing)
        .collect();

    // Cluster delays and exponential power-delay profile.
    let mut delays = vec![0.0f64; params.num_clusters];
    let mut powers = vec![1.0f64; params.num_clusters];
    if params.delay_spread > 0.0 {
        let exp = Exp::new(1.0 / params.delay_spread)
            .map_err(|e| Error::InvalidParameter(e.to_string()))?;
        for (d, p) in delays.iter_mut().zip(powers.iter_mut()) {
            *d = exp.sample(&mut rng);
            *p = (-*d / params.delay_spread).exp();
        }
    }
    let total: f64 = powers.iter().sum();
    for p in &mut powers {
        *p /= total;
    }

    let mut scatter = Array2::<Complex64>::zeros((n_subcarriers, k));
    for c in 0..params.num_clusters {
        let center = random_direction(&mut rng);
        let ray_var = powers[c] / params.rays_per_cluster as f64;
        for _ in 0..params.rays_per_cluster {
            let off: f64 = StandardNormal.sample(&mut rng);
            let dir = perturb_direction(center, off * params.angular_spread, &mut rng);
            let gain = complex_gaussian(&mut rng, ray_var);
            let array_phase: Vec<Complex64> = geometry
                .horiz
                .iter()
                .zip(&geometry.vert)
                .map(|(&l, &r)| {
                    Complex64::from_polar(1.0, std::f64::consts::PI * (l * dir[0] + r * dir[1]))
                })
                .collect();
            for (n, &f) in freqs.iter().enumerate() {
                let delay_rot =
                    gain * Complex64::from_polar(1.0, -2.0 * std::f64::consts::PI * f * delays[c]);
                for (kk, ap) in array_phase.iter().enumerate() {
                    scatter[(n, kk)] += delay_rot * ap;
                }
            }
        }
    }

    // Rician combination with the deterministic ray.
    let (w_los, w_scatter) = if params.rician_k.is_infinite() {
        (1.0, 0.0)
    } else {
        let d = params.rician_k + 1.0;
        ((params.rician_k / d).sqrt(), (1.0 / d).sqrt())
    };
    let los_phases = geometry.steering_phases(params.los_azimuth, params.los_elevation);
    let mut h = Array2::<Complex64>::zeros((n_subcarriers, k));
    for n in 0..n_subcarriers {
        for kk in 0..k {
            h[(n, kk)] = Complex64::from_polar(w_los, los_phases[kk]) + w_scatter * scatter[(n, kk)];
        }
    }

    // Per-antenna log-normal shadowing, normalized to keep E[|h|^2] = beta.
    if params.shadow_sigma_db > 0.0 {
        let sigma_ln = params.shadow_sigma_db * std::f64::consts::LN_10 / 10.0;
        let mean_power_factor = (sigma_ln * sigma_ln / 2.0).exp();
        for kk in 0..k {
            let z: f64 = StandardNormal.sample(&mut rng);
            let amp = 10f64.powf(params.shadow_sigma_db * z / 20.0) / mean_power_factor.sqrt();
            for n in 0..n_subcarriers {
                h[(n, kk)] *= amp;
            }
        }
    }

    h.mapv_inplace(|c| c * beta.sqrt());
    ChannelMatrix::new(
        h,
        beta,
        ChannelMeta {
            model: "clustered".into(),
            ue_position: None,
        },
    )
}

/// Large-scale gain from a power-law path loss: `ref_gain * d^-exponent`.
pub fn pathloss_beta(distance_m: f64, exponent: f64, ref_gain_db: f64) -> Result<f64> {
    if !(distance_m > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "distance must be positive, got {distance_m}"
        )));
    }
    if !exponent.is_finite() || !ref_gain_db.is_finite() {
        return Err(Error::InvalidParameter(
            "path-loss parameters must be finite".into(),
        ));
    }
    Ok(crate::from_db(ref_gain_db) * distance_m.powf(-exponent))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rayleigh_mean_power_matches_beta() {
        let h = gen_rayleigh(1.0, 12, 16, 7).unwrap();
        let sigma = 1.0 / (192f64).sqrt();
        assert!((h.mean_power() - 1.0).abs() < 3.0 * sigma);

        let h = gen_rayleigh(0.25, 64, 32, 3).unwrap();
        let sigma = 0.25 / (64f64 * 32.0).sqrt();
        assert!((h.mean_power() - 0.25).abs() < 3.0 * sigma);
    }

    #[test]
    fn rayleigh_phase_is_uniform() {
        let h = gen_rayleigh(0.25, 50, 40, 11).unwrap();
        let phases: Vec<f64> = h.coefficients().iter().map(|c| c.arg()).collect();
        let cdf = |x: f64| (x + std::f64::consts::PI) / (2.0 * std::f64::consts::PI);
        let (_, p) = crate::statmodel::ks_test(&phases, cdf, 1).unwrap();
        assert!(p > 0.01, "phase KS p-value {p}");
    }

    #[test]
    fn rayleigh_is_deterministic_per_seed() {
        let a = gen_rayleigh(1.0, 8, 4, 42).unwrap();
        let b = gen_rayleigh(1.0, 8, 4, 42).unwrap();
        assert_eq!(a.coefficients(), b.coefficients());
        let c = gen_rayleigh(1.0, 8, 4, 43).unwrap();
        assert_ne!(a.coefficients(), c.coefficients());
    }

    #[test]
    fn rayleigh_rejects_bad_beta() {
        assert!(gen_rayleigh(0.0, 4, 4, 1).is_err());
        assert!(gen_rayleigh(-1.0, 4, 4, 1).is_err());
        assert!(gen_rayleigh(f64::NAN, 4, 4, 1).is_err());
    }

    #[test]
    fn los_boresight_is_flat_real() {
        let geom = ArrayGeometry::square(4).unwrap();
        let h = gen_los(4.0, 0.3, 0.0, &geom, 12).unwrap();
        for c in h.coefficients() {
            assert!((c.re - 2.0).abs() < 1e-12 && c.im.abs() < 1e-12);
        }
    }

    #[test]
    fn los_entries_have_constant_power() {
        let geom = ArrayGeometry::square(4).unwrap();
        let h = gen_los(0.7, 1.1, 0.6, &geom, 12).unwrap();
        for c in h.coefficients() {
            assert!((c.norm_sqr() - 0.7).abs() < 1e-12);
        }
    }

    #[test]
    fn los_correlation_matrix_has_constant_magnitude() {
        let geom = ArrayGeometry::square(4).unwrap();
        let beta = 0.5;
        let h = gen_los(beta, 0.9, 0.4, &geom, 12).unwrap();
        let hm = h.coefficients();
        let k = h.num_antennas();
        for a in 0..k {
            for b in 0..k {
                let mut r = Complex64::default();
                for n in 0..h.num_subcarriers() {
                    r += hm[(n, a)] * hm[(n, b)].conj();
                }
                r /= h.num_subcarriers() as f64;
                assert!((r.norm() - beta).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn los_is_rank_one_with_trace_k_beta() {
        let geom = ArrayGeometry::square(4).unwrap();
        let beta = 0.8;
        let h = gen_los(beta, 0.7, 0.4, &geom, 3).unwrap();
        let hm = h.coefficients();
        let k = h.num_antennas();
        for n in 0..h.num_subcarriers() {
            // Power iteration on h_n h_n^H converges in one step; the Rayleigh
            // quotient is the single nonzero eigenvalue.
            let row: Vec<Complex64> = (0..k).map(|kk| hm[(n, kk)]).collect();
            let mut v: Vec<Complex64> = (0..k)
                .map(|i| Complex64::new(1.0 + i as f64, 0.5 * i as f64))
                .collect();
            for _ in 0..2 {
                let proj: Complex64 = row.iter().zip(&v).map(|(h, x)| h.conj() * x).sum();
                v = row.iter().map(|h| h * proj).collect();
                let norm = v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
                for x in &mut v {
                    *x /= norm;
                }
            }
            let proj: Complex64 = row.iter().zip(&v).map(|(h, x)| h.conj() * x).sum();
            let av: Vec<Complex64> = row.iter().map(|h| h * proj).collect();
            let lambda: Complex64 = v.iter().zip(&av).map(|(x, y)| x.conj() * y).sum();
            assert!(
                (lambda.re - k as f64 * beta).abs() / (k as f64 * beta) < 1e-9,
                "eigenvalue {} vs {}",
                lambda.re,
                k as f64 * beta
            );
            // Residual orthogonal to v is zero for a rank-1 matrix.
            let res: f64 = av
                .iter()
                .zip(&v)
                .map(|(y, x)| (y - x * lambda.re).norm_sqr())
                .sum::<f64>()
                .sqrt();
            assert!(res < 1e-9);
        }
    }

    #[test]
    fn rayleigh_cross_antenna_correlation_vanishes() {
        let mut num = Complex64::default();
        let mut da = 0.0;
        let mut dbb = 0.0;
        let mut count = 0usize;
        for seed in 0..90 {
            let h = gen_rayleigh(1.0, 12, 2, 1000 + seed).unwrap();
            let hm = h.coefficients();
            for n in 0..12 {
                num += hm[(n, 0)] * hm[(n, 1)].conj();
                da += hm[(n, 0)].norm_sqr();
                dbb += hm[(n, 1)].norm_sqr();
                count += 1;
            }
        }
        assert!(count >= 1000);
        let corr = num.norm() / (da.sqrt() * dbb.sqrt());
        assert!(corr < 0.1, "aggregate correlation {corr}");
    }

    #[test]
    fn clustered_limit_matches_los() {
        let geom = ArrayGeometry::square(4).unwrap();
        let params = ClusterParams {
            rician_k: f64::INFINITY,
            shadow_sigma_db: 0.0,
            delay_spread: 0.0,
            los_azimuth: 0.8,
            los_elevation: 0.35,
            ..ClusterParams::default()
        };
        let beta = 2.0;
        let hc = gen_clustered(beta, &params, &geom, 12, 360e3, 5).unwrap();
        let hl = gen_los(beta, 0.8, 0.35, &geom, 12).unwrap();
        let max_dev = hc
            .coefficients()
            .iter()
            .zip(hl.coefficients())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        assert!(max_dev < 1e-6 * beta.sqrt(), "max deviation {max_dev}");
    }

    #[test]
    fn clustered_mean_power_is_calibrated() {
        let geom = ArrayGeometry::square(4).unwrap();
        let params = ClusterParams {
            num_clusters: 8,
            rays_per_cluster: 8,
            angular_spread: 2.0,
            shadow_sigma_db: 4.0,
            ..ClusterParams::default()
        };
        let beta = 0.5;
        let mut acc = 0.0;
        let trials = 200;
        for seed in 0..trials {
            acc += gen_clustered(beta, &params, &geom, 12, 360e3, seed)
                .unwrap()
                .mean_power();
        }
        let mean = acc / trials as f64;
        assert!(
            (mean - beta).abs() / beta < 0.1,
            "ensemble mean power {mean} vs beta {beta}"
        );
    }

    #[test]
    fn clustered_rejects_invalid_params() {
        let geom = ArrayGeometry::square(2).unwrap();
        let bad = ClusterParams {
            delay_spread: f64::NAN,
            ..ClusterParams::default()
        };
        assert!(gen_clustered(1.0, &bad, &geom, 4, 360e3, 0).is_err());
        let bad = ClusterParams {
            num_clusters: 0,
            ..ClusterParams::default()
        };
        assert!(gen_clustered(1.0, &bad, &geom, 4, 360e3, 0).is_err());
    }

    #[test]
    fn pathloss_examples() {
        assert!((pathloss_beta(1.0, 3.0, 0.0).unwrap() - 1.0).abs() < 1e-15);
        assert!((pathloss_beta(10.0, 2.0, 0.0).unwrap() - 0.01).abs() < 1e-15);
        let b1 = pathloss_beta(50.0, 3.76, -5.0).unwrap();
        let b2 = pathloss_beta(100.0, 3.76, -5.0).unwrap();
        assert!((b2 / b1 - 2f64.powf(-3.76)).abs() < 1e-12);
        assert!(pathloss_beta(0.0, 2.0, 0.0).is_err());
        assert!(pathloss_beta(-3.0, 2.0, 0.0).is_err());
    }

    #[test]
    fn scenario_validation() {
        let ok = UeScenario {
            positions: vec![[0.0, 0.0, 1.5], [4.0, 0.0, 1.5]],
            bs_position: [0.0, 0.0, 45.0],
            grid_resolution: 4.0,
        };
        assert!(ok.validate().is_ok());
        let dup = UeScenario {
            positions: vec![[0.0, 0.0, 1.5], [0.0, 0.0, 1.5]],
            bs_position: [0.0, 0.0, 45.0],
            grid_resolution: 4.0,
        };
        assert!(dup.validate().is_err());
    }
}
