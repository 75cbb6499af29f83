//! Input-power optimisation and one-dimensional parameter sweeps.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{
    direct_rate_unbounded, direct_rate_unclamped, evaluate_bounds, reverse_rate_unbounded,
    reverse_rate_unclamped, InputPower, RateBound, Reconciliation, WiretapScenario,
};
use crate::channel::{channel_point, ApertureLayout, BeamGeometry, ChannelPoint, PhysicalConstants};
use crate::error::{Error, Result};

/// Search interval for the optimal input power, in decades of mean photon number.
pub const LOG10_MU_RANGE: (f64, f64) = (-4.0, 8.0);
const COARSE_POINTS: usize = 50;
const MU_REL_TOL: f64 = 1e-6;

/// Optimal mean photon number, or a marker when no finite optimum exists.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum MuStar {
    Finite(f64),
    /// The rate keeps growing with power.
    Unbounded,
    /// The rate is non-positive at every power, so no key can be distilled.
    NoKey,
}

impl MuStar {
    pub fn finite(self) -> Option<f64> {
        match self {
            MuStar::Finite(mu) => Some(mu),
            MuStar::Unbounded | MuStar::NoKey => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OptimumReport {
    pub mu_star: MuStar,
    /// Clamped rate at the optimum.
    pub k_at_star: f64,
    /// Rate at the optimum before clamping at zero.
    pub k_unclamped: f64,
    pub reconciliation: Reconciliation,
    /// Set when `beta < 1` but the coarse grid still rose at its upper edge.
    pub edge_anomaly: bool,
    /// Set when a finite optimum failed the neighbourhood comparison.
    pub not_interior: bool,
}

/// Rate before clamping at a fixed input power.
pub fn rate_at(channel: &ChannelPoint, beta: f64, mu: f64, rec: Reconciliation) -> Result<f64> {
    let scenario = WiretapScenario::new(*channel, mu, beta)?;
    match rec {
        Reconciliation::Direct => direct_rate_unclamped(&scenario),
        Reconciliation::Reverse => reverse_rate_unclamped(&scenario),
    }
}

/// Maximises the lower bound over Alice's mean photon number.
///
/// Perfect reconciliation makes both bounds increase with power, so the
/// optimum is reported as unbounded together with the limiting rate.
/// Otherwise a coarse logarithmic grid over [`LOG10_MU_RANGE`] brackets the
/// best point and a golden-section search refines it.
pub fn optimal_input_power(channel: &ChannelPoint, beta: f64, rec: Reconciliation) -> Result<OptimumReport> {
    if !(beta > 0.0 && beta <= 1.0) {
        return Err(Error::param("beta", beta, "reconciliation efficiency must lie in (0, 1]"));
    }
    if beta == 1.0 {
        let raw = match rec {
            Reconciliation::Direct => direct_rate_unbounded(channel)?,
            Reconciliation::Reverse => reverse_rate_unbounded(channel)?,
        };
        return Ok(OptimumReport {
            mu_star: MuStar::Unbounded,
            k_at_star: raw.max(0.0),
            k_unclamped: raw,
            reconciliation: rec,
            edge_anomaly: false,
            not_interior: false,
        });
    }

    let objective = |log_mu: f64| rate_at(channel, beta, 10f64.powf(log_mu), rec);
    let (lo, hi) = LOG10_MU_RANGE;
    let step = (hi - lo) / (COARSE_POINTS - 1) as f64;
    let coarse = (0..COARSE_POINTS)
        .map(|i| objective(lo + step * i as f64))
        .collect::<Result<Vec<_>>>()?;
    let best = coarse
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.total_cmp(b.1))
        .map(|(i, _)| i)
        .expect("coarse grid is non-empty");

    if coarse[best] <= 0.0 {
        return Ok(no_key(coarse[best], rec));
    }
    if best == COARSE_POINTS - 1 {
        let raw = coarse[best];
        return Ok(OptimumReport {
            mu_star: MuStar::Unbounded,
            k_at_star: raw.max(0.0),
            k_unclamped: raw,
            reconciliation: rec,
            edge_anomaly: true,
            not_interior: false,
        });
    }

    let a = lo + step * best.saturating_sub(1) as f64;
    let b = lo + step * (best + 1) as f64;
    let tol = MU_REL_TOL / std::f64::consts::LN_10;
    let (log_mu, raw) = golden_section_max(&objective, a, b, tol)?;
    if raw <= 0.0 {
        return Ok(no_key(raw, rec));
    }
    let mu = 10f64.powf(log_mu);

    let h = 1e-3;
    let not_interior = objective(log_mu - h)? > raw || objective(log_mu + h)? > raw;

    Ok(OptimumReport {
        mu_star: MuStar::Finite(mu),
        k_at_star: raw.max(0.0),
        k_unclamped: raw,
        reconciliation: rec,
        edge_anomaly: false,
        not_interior,
    })
}

fn no_key(raw: f64, rec: Reconciliation) -> OptimumReport {
    OptimumReport {
        mu_star: MuStar::NoKey,
        k_at_star: 0.0,
        k_unclamped: raw,
        reconciliation: rec,
        edge_anomaly: false,
        not_interior: false,
    }
}

/// Golden-section maximisation on `[a, b]` until the bracket is narrower than `tol`.
pub fn golden_section_max<F>(f: &F, mut a: f64, mut b: f64, tol: f64) -> Result<(f64, f64)>
where
    F: Fn(f64) -> Result<f64>,
{
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let mut fc = f(c)?;
    let mut fd = f(d)?;
    while (b - a).abs() > tol {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d)?;
        }
    }
    let x = 0.5 * (a + b);
    let fx = f(x)?;
    // keep the best of the final probes
    let best = [(x, fx), (c, fc), (d, fd)]
        .into_iter()
        .max_by(|p, q| p.1.total_cmp(&q.1))
        .expect("three candidates");
    Ok(best)
}

/// Alice's input power in a scenario: fixed, or optimised per point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum PowerSetting {
    Fixed(f64),
    Optimize,
}

/// Complete scenario in SI units.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScenarioParams {
    pub wavelength: f64,
    pub temperature: f64,
    pub waist_radius: f64,
    pub r_alice: f64,
    pub r_bob: f64,
    pub r_eve: f64,
    pub distance: f64,
    pub beta: f64,
    pub power: PowerSetting,
}

impl Default for ScenarioParams {
    fn default() -> Self {
        Self {
            wavelength: 1550e-9,
            temperature: PhysicalConstants::SPACE_TEMPERATURE,
            waist_radius: 0.05,
            r_alice: 0.05,
            r_bob: 0.05,
            r_eve: 0.05,
            distance: 10e3,
            beta: 1.0,
            power: PowerSetting::Optimize,
        }
    }
}

impl ScenarioParams {
    pub fn constants(&self) -> Result<PhysicalConstants> {
        PhysicalConstants::with_temperature(self.temperature)
    }

    pub fn channel(&self) -> Result<ChannelPoint> {
        let consts = self.constants()?;
        let geom = BeamGeometry::new(self.waist_radius, self.wavelength)?;
        let layout = ApertureLayout::new(self.r_alice, self.r_bob, self.r_eve)?;
        channel_point(&geom, &layout, self.distance, consts.wavelength_to_frequency(self.wavelength), &consts)
    }

    /// Copy of the scenario with the swept variable set to `x` (SI units).
    pub fn with(&self, variable: SweepVariable, x: f64) -> Self {
        let mut p = *self;
        match variable {
            SweepVariable::Distance => p.distance = x,
            SweepVariable::Frequency => p.wavelength = PhysicalConstants::LIGHT_SPEED / x,
            SweepVariable::EveRadius => p.r_eve = x,
            SweepVariable::WaistRadius => {
                p.waist_radius = x;
                p.r_alice = x;
            }
            SweepVariable::BobRadius => p.r_bob = x,
            SweepVariable::InputPower => p.power = PowerSetting::Fixed(x),
        }
        p
    }
}

/// Bounds at one scenario together with the input powers that produced them.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PointResult {
    pub channel: ChannelPoint,
    pub bound: RateBound,
    pub mu_star_dr: MuStar,
    pub mu_star_rr: MuStar,
}

pub fn evaluate_point(params: &ScenarioParams) -> Result<PointResult> {
    let channel = params.channel()?;
    match params.power {
        PowerSetting::Fixed(mu) => {
            let bound = evaluate_bounds(&channel, params.beta, InputPower::Fixed(mu))?;
            Ok(PointResult {
                channel,
                bound,
                mu_star_dr: MuStar::Finite(mu),
                mu_star_rr: MuStar::Finite(mu),
            })
        }
        PowerSetting::Optimize => {
            let dr = optimal_input_power(&channel, params.beta, Reconciliation::Direct)?;
            let rr = optimal_input_power(&channel, params.beta, Reconciliation::Reverse)?;
            let k_upper = evaluate_bounds(&channel, 1.0, InputPower::Fixed(0.0))?.k_upper;
            Ok(PointResult {
                channel,
                bound: RateBound {
                    k_dr: dr.k_at_star,
                    k_rr: rr.k_at_star,
                    k_best: dr.k_at_star.max(rr.k_at_star),
                    k_upper,
                    dr_clamped: dr.k_unclamped < 0.0,
                    rr_clamped: rr.k_unclamped < 0.0,
                },
                mu_star_dr: dr.mu_star,
                mu_star_rr: rr.mu_star,
            })
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SweepVariable {
    Distance,
    Frequency,
    EveRadius,
    WaistRadius,
    BobRadius,
    InputPower,
}

impl SweepVariable {
    pub const ALL: [SweepVariable; 6] = [
        SweepVariable::Distance,
        SweepVariable::Frequency,
        SweepVariable::EveRadius,
        SweepVariable::WaistRadius,
        SweepVariable::BobRadius,
        SweepVariable::InputPower,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SweepVariable::Distance => "distance",
            SweepVariable::Frequency => "frequency",
            SweepVariable::EveRadius => "eve_radius",
            SweepVariable::WaistRadius => "waist_radius",
            SweepVariable::BobRadius => "bob_radius",
            SweepVariable::InputPower => "input_power",
        }
    }

    pub fn parse(name: &str) -> Option<Self> {
        let norm = name.replace('-', "_");
        Self::ALL.into_iter().find(|v| v.name() == norm)
    }
}

/// Spacing of sweep grid points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Spacing {
    Linear,
    Log,
}

/// A one-dimensional sweep over `[min, max]` (SI units) around a fixed scenario.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepSpec {
    pub variable: SweepVariable,
    pub min: f64,
    pub max: f64,
    pub count: usize,
    pub spacing: Spacing,
    pub fixed: ScenarioParams,
}

/// Default number of grid points per sweep.
pub const DEFAULT_POINTS: usize = 200;

impl SweepSpec {
    pub fn validate(&self) -> Result<()> {
        if !(self.min.is_finite() && self.max.is_finite() && self.min < self.max) {
            return Err(Error::Spec(format!(
                "sweep range must satisfy min < max, got [{}, {}]",
                self.min, self.max
            )));
        }
        if self.count < 2 {
            return Err(Error::Spec(format!("sweep needs at least 2 points, got {}", self.count)));
        }
        if self.spacing == Spacing::Log && self.min <= 0.0 {
            return Err(Error::Spec("logarithmic spacing needs a positive lower bound".into()));
        }
        Ok(())
    }

    pub fn grid(&self) -> Result<Vec<f64>> {
        self.validate()?;
        let n = self.count - 1;
        Ok((0..self.count)
            .map(|i| {
                let t = i as f64 / n as f64;
                match self.spacing {
                    Spacing::Linear => self.min + t * (self.max - self.min),
                    Spacing::Log => {
                        let (a, b) = (self.min.log10(), self.max.log10());
                        10f64.powf(a + t * (b - a))
                    }
                }
            })
            .map(|x| x.clamp(self.min, self.max))
            .collect())
    }
}

/// One grid point of a sweep; failures stay attached to their row.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub x: f64,
    pub result: std::result::Result<PointResult, Error>,
}

/// Evaluates every grid point, in parallel, returning rows in grid order.
pub fn run_sweep(spec: &SweepSpec) -> Result<Vec<SweepRow>> {
    let grid = spec.grid()?;
    Ok(grid
        .par_iter()
        .map(|&x| SweepRow {
            x,
            result: evaluate_point(&spec.fixed.with(spec.variable, x)),
        })
        .collect())
}

/// One labelled curve of a figure preset.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Series {
    pub label: String,
    pub spec: SweepSpec,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FigurePreset {
    pub id: String,
    pub description: String,
    pub series: Vec<Series>,
}

pub const FIGURE_IDS: [&str; 11] = [
    "fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "fig8", "fig9", "fig10", "fig11", "fig12",
];

fn cm(x: f64) -> f64 {
    x * 1e-2
}

fn km(x: f64) -> f64 {
    x * 1e3
}

/// Named sweep presets `fig2` to `fig12`.
pub fn figure_preset(id: &str) -> Result<FigurePreset> {
    let base = ScenarioParams::default();
    let distance = |fixed: ScenarioParams| SweepSpec {
        variable: SweepVariable::Distance,
        min: km(1.0),
        max: km(1e5),
        count: DEFAULT_POINTS,
        spacing: Spacing::Log,
        fixed,
    };
    let power = |fixed: ScenarioParams| SweepSpec {
        variable: SweepVariable::InputPower,
        min: 1e-2,
        max: 1e4,
        count: DEFAULT_POINTS,
        spacing: Spacing::Log,
        fixed,
    };
    let eve_series = |radii_cm: &[f64], make: &dyn Fn(ScenarioParams) -> SweepSpec, fixed: ScenarioParams| {
        radii_cm
            .iter()
            .map(|&r| Series {
                label: format!("r_e={r} cm"),
                spec: make(ScenarioParams { r_eve: cm(r), ..fixed }),
            })
            .collect::<Vec<_>>()
    };

    let (description, series) = match id {
        "fig2" => (
            "rate vs input power, L=10 km, beta=1",
            eve_series(&[2.0, 12.0], &power, base),
        ),
        "fig3" => (
            "rate vs input power, L=10 km, beta=0.9",
            eve_series(&[2.0, 12.0], &power, ScenarioParams { beta: 0.9, ..base }),
        ),
        "fig4" => (
            "best lower bound vs distance, beta=1, unbounded power",
            eve_series(&[2.0, 5.0, 100.0], &distance, base),
        ),
        "fig5" => (
            "direct and reverse lower bounds vs distance, beta=1",
            eve_series(&[2.0, 5.0, 7.0], &distance, base),
        ),
        "fig6" => (
            "lower vs upper bounds vs distance, beta=1",
            eve_series(&[2.0, 5.0, 7.0], &distance, base),
        ),
        "fig7" => {
            let freq = |fixed: ScenarioParams| SweepSpec {
                variable: SweepVariable::Frequency,
                min: 1e12,
                max: 1e16,
                count: DEFAULT_POINTS,
                spacing: Spacing::Log,
                fixed,
            };
            (
                "lower and upper bounds vs carrier frequency, L=10 km, beta=1",
                eve_series(&[1.0, 5.0, 70.0], &freq, base),
            )
        }
        "fig8" => (
            "bounds vs Eve aperture radius, L=10 km, beta=1",
            vec![Series {
                label: "r_b=r_a=W0=5 cm".into(),
                spec: SweepSpec {
                    variable: SweepVariable::EveRadius,
                    min: cm(0.1),
                    max: cm(1000.0),
                    count: DEFAULT_POINTS,
                    spacing: Spacing::Log,
                    fixed: base,
                },
            }],
        ),
        "fig9" => (
            "bounds vs distance for growing Bob aperture, r_e=r_a=W0=5 cm",
            [5.0, 10.0, 20.0]
                .iter()
                .map(|&r| Series {
                    label: format!("r_b={r} cm"),
                    spec: distance(ScenarioParams { r_bob: cm(r), ..base }),
                })
                .collect(),
        ),
        "fig10" => (
            "bounds vs distance for growing beam waist, r_e=r_b=5 cm",
            [2.5, 5.0, 10.0]
                .iter()
                .map(|&w| Series {
                    label: format!("W0=r_a={w} cm"),
                    spec: distance(ScenarioParams {
                        waist_radius: cm(w),
                        r_alice: cm(w),
                        ..base
                    }),
                })
                .collect(),
        ),
        "fig11" => (
            "bounds vs distance with W0=r_a=r_b grown together, r_e=5 cm",
            [5.0, 10.0, 20.0]
                .iter()
                .map(|&w| Series {
                    label: format!("W0=r_a=r_b={w} cm"),
                    spec: distance(ScenarioParams {
                        waist_radius: cm(w),
                        r_alice: cm(w),
                        r_bob: cm(w),
                        ..base
                    }),
                })
                .collect(),
        ),
        "fig12" => (
            "bounds vs distance with all apertures scaled together",
            [1.0, 2.0, 4.0]
                .iter()
                .map(|&c| Series {
                    label: format!("W0=r_a=r_b=r_e={} cm", 5.0 * c),
                    spec: distance(ScenarioParams {
                        waist_radius: cm(5.0 * c),
                        r_alice: cm(5.0 * c),
                        r_bob: cm(5.0 * c),
                        r_eve: cm(5.0 * c),
                        ..base
                    }),
                })
                .collect(),
        ),
        other => {
            return Err(Error::Spec(format!(
                "unknown figure preset `{other}`; expected one of {}",
                FIGURE_IDS.join(", ")
            )))
        }
    };

    Ok(FigurePreset {
        id: id.to_string(),
        description: description.to_string(),
        series,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn golden_section_finds_parabola_peak() {
        let f = |x: f64| Ok(-(x - 1.234).powi(2));
        let (x, fx) = golden_section_max(&f, 0.0, 3.0, 1e-9).unwrap();
        assert_relative_eq!(x, 1.234, epsilon = 1e-8);
        assert!(fx <= 0.0 && fx > -1e-15);
    }

    #[test]
    fn perfect_reconciliation_is_unbounded() {
        let ch = ScenarioParams::default().channel().unwrap();
        for rec in [Reconciliation::Direct, Reconciliation::Reverse] {
            let r = optimal_input_power(&ch, 1.0, rec).unwrap();
            assert_eq!(r.mu_star, MuStar::Unbounded);
            assert!(!r.edge_anomaly);
        }
    }

    #[test]
    fn imperfect_reconciliation_has_finite_optimum() {
        let p = ScenarioParams {
            r_eve: 0.12,
            beta: 0.9,
            ..ScenarioParams::default()
        };
        let ch = p.channel().unwrap();
        let r = optimal_input_power(&ch, 0.9, Reconciliation::Reverse).unwrap();
        let mu = r.mu_star.finite().expect("finite optimum");
        assert!(!r.not_interior);
        let k = |m: f64| rate_at(&ch, 0.9, m, Reconciliation::Reverse).unwrap();
        assert!(k(mu / 10.0) < k(mu));
        assert!(k(mu * 10.0) < k(mu));
        assert!(r.k_at_star > 0.0);
    }

    #[test]
    fn hopeless_channel_reports_no_key() {
        let ch = ChannelPoint::new(0.02, 0.25, 0.0, 0.0, 1.9e14).unwrap();
        let r = optimal_input_power(&ch, 0.8, Reconciliation::Direct).unwrap();
        assert_eq!(r.mu_star, MuStar::NoKey);
        assert_eq!(r.k_at_star, 0.0);
        assert!(r.k_unclamped <= 0.0);
    }

    #[test]
    fn invalid_beta_rejected() {
        let ch = ScenarioParams::default().channel().unwrap();
        assert!(optimal_input_power(&ch, 0.0, Reconciliation::Direct).is_err());
        assert!(optimal_input_power(&ch, 1.5, Reconciliation::Direct).is_err());
    }

    #[test]
    fn grid_spacing() {
        let spec = SweepSpec {
            variable: SweepVariable::Distance,
            min: 1.0,
            max: 1000.0,
            count: 4,
            spacing: Spacing::Log,
            fixed: ScenarioParams::default(),
        };
        let g = spec.grid().unwrap();
        for (a, b) in g.iter().zip([1.0, 10.0, 100.0, 1000.0]) {
            assert_relative_eq!(*a, b, max_relative = 1e-14);
        }
        let lin = SweepSpec { spacing: Spacing::Linear, count: 3, ..spec }.grid().unwrap();
        assert_eq!(lin, vec![1.0, 500.5, 1000.0]);
        assert!(SweepSpec { min: 5.0, max: 5.0, ..spec }.grid().is_err());
        assert!(SweepSpec { count: 1, ..spec }.grid().is_err());
        assert!(SweepSpec { min: 0.0, ..spec }.grid().is_err());
    }

    #[test]
    fn sweep_keeps_errors_in_rows() {
        // the first point has no thermal issue; a zero-width Eve aperture is invalid
        let spec = SweepSpec {
            variable: SweepVariable::EveRadius,
            min: 0.0,
            max: 0.02,
            count: 3,
            spacing: Spacing::Linear,
            fixed: ScenarioParams::default(),
        };
        let rows = run_sweep(&spec).unwrap();
        assert_eq!(rows.len(), 3);
        assert!(rows[0].result.is_err());
        assert!(rows[1].result.is_ok() && rows[2].result.is_ok());
        assert!(rows.windows(2).all(|w| w[0].x < w[1].x));
    }

    #[test]
    fn presets_resolve() {
        for id in FIGURE_IDS {
            let p = figure_preset(id).unwrap();
            assert!(!p.series.is_empty());
            for s in &p.series {
                s.spec.validate().unwrap();
            }
        }
        assert!(figure_preset("fig13").is_err());

        let fig4 = figure_preset("fig4").unwrap();
        assert_eq!(fig4.series.len(), 3);
        let radii: Vec<f64> = fig4.series.iter().map(|s| s.spec.fixed.r_eve).collect();
        assert_eq!(radii, vec![0.02, 0.05, 1.0]);
        assert!(fig4.series.iter().all(|s| s.spec.variable == SweepVariable::Distance
            && s.spec.fixed.beta == 1.0
            && s.spec.fixed.waist_radius == 0.05
            && s.spec.fixed.r_alice == 0.05
            && s.spec.fixed.r_bob == 0.05));

        let fig2 = figure_preset("fig2").unwrap();
        assert!(fig2.series.iter().all(|s| s.spec.variable == SweepVariable::InputPower
            && s.spec.fixed.distance == 10e3));

        let fig7 = figure_preset("fig7").unwrap();
        let radii: Vec<f64> = fig7.series.iter().map(|s| s.spec.fixed.r_eve).collect();
        for (r, want) in radii.iter().zip([0.01, 0.05, 0.7]) {
            assert_relative_eq!(*r, want, max_relative = 1e-15);
        }
        assert!(fig7.series.iter().all(|s| s.spec.variable == SweepVariable::Frequency));
    }

    #[test]
    fn variable_names_round_trip() {
        for v in SweepVariable::ALL {
            assert_eq!(SweepVariable::parse(v.name()), Some(v));
        }
        assert_eq!(SweepVariable::parse("eve-radius"), Some(SweepVariable::EveRadius));
        assert_eq!(SweepVariable::parse("speed"), None);
    }
}
