//! Gaussian-beam propagation and the collected-power fractions of Bob's
//! centred aperture and Eve's tangential aperture in the receiver plane.
//!
//! All powers are normalised by the total beam power, so the on-axis waist
//! intensity never appears. Both disc integrals are reduced to one dimension
//! analytically (the inner transverse integral is an error-function
//! difference) and the remaining chord coordinate is mapped onto an angle,
//! `y = r sin(theta)`, which removes the square-root endpoint behaviour.

use std::f64::consts::{PI, SQRT_2};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quadrature::{integrate, QuadratureConfig};

/// Fundamental constants and the background temperature of the thermal bath.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhysicalConstants {
    pub planck: f64,
    pub boltzmann: f64,
    pub light_speed: f64,
    /// Background temperature in kelvin.
    pub temperature: f64,
}

impl PhysicalConstants {
    pub const PLANCK: f64 = 6.626_070_15e-34;
    pub const BOLTZMANN: f64 = 1.380_649e-23;
    pub const LIGHT_SPEED: f64 = 299_792_458.0;
    pub const SPACE_TEMPERATURE: f64 = 3.0;

    pub fn with_temperature(temperature: f64) -> Result<Self> {
        if !(temperature > 0.0 && temperature.is_finite()) {
            return Err(Error::param("temperature", temperature, "must be positive"));
        }
        Ok(Self {
            temperature,
            ..Self::default()
        })
    }

    pub fn wavelength_to_frequency(&self, wavelength: f64) -> f64 {
        self.light_speed / wavelength
    }

    pub fn frequency_to_wavelength(&self, frequency: f64) -> f64 {
        self.light_speed / frequency
    }
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self {
            planck: Self::PLANCK,
            boltzmann: Self::BOLTZMANN,
            light_speed: Self::LIGHT_SPEED,
            temperature: Self::SPACE_TEMPERATURE,
        }
    }
}

/// A transmitted TEM00 beam, described at its waist.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BeamGeometry {
    waist_radius: f64,
    wavelength: f64,
}

impl BeamGeometry {
    pub fn new(waist_radius: f64, wavelength: f64) -> Result<Self> {
        check_positive("waist_radius", waist_radius)?;
        check_positive("wavelength", wavelength)?;
        Ok(Self {
            waist_radius,
            wavelength,
        })
    }

    pub fn waist_radius(&self) -> f64 {
        self.waist_radius
    }

    pub fn wavelength(&self) -> f64 {
        self.wavelength
    }

    /// `pi W0^2 / lambda`.
    pub fn rayleigh_length(&self) -> f64 {
        PI * self.waist_radius * self.waist_radius / self.wavelength
    }

    /// 1/e^2 intensity radius after propagating `distance` metres.
    pub fn beam_width(&self, distance: f64) -> f64 {
        let ratio = distance / self.rayleigh_length();
        self.waist_radius * (1.0 + ratio * ratio).sqrt()
    }

    /// `pi^2 W0^4 + lambda^2 L^2`, which equals `(pi W0 W(L))^2`.
    pub fn spread_factor(&self, distance: f64) -> f64 {
        let w0 = self.waist_radius;
        PI * PI * w0.powi(4) + (self.wavelength * distance).powi(2)
    }

    /// Intensity at transverse radius `rho`, relative to the on-axis waist intensity.
    pub fn relative_intensity(&self, rho: f64, distance: f64) -> f64 {
        let w = self.beam_width(distance);
        let s = self.waist_radius / w;
        s * s * (-2.0 * rho * rho / (w * w)).exp()
    }

    /// Total beam power in units of the waist intensity: `pi W0^2 / 2`.
    pub fn total_power(&self) -> f64 {
        0.5 * PI * self.waist_radius * self.waist_radius
    }
}

/// Circular apertures of Alice, Bob and Eve; Eve touches Bob's rim.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ApertureLayout {
    r_alice: f64,
    r_bob: f64,
    r_eve: f64,
}

impl ApertureLayout {
    pub fn new(r_alice: f64, r_bob: f64, r_eve: f64) -> Result<Self> {
        check_positive("r_alice", r_alice)?;
        check_positive("r_bob", r_bob)?;
        check_positive("r_eve", r_eve)?;
        Ok(Self {
            r_alice,
            r_bob,
            r_eve,
        })
    }

    pub fn r_alice(&self) -> f64 {
        self.r_alice
    }

    pub fn r_bob(&self) -> f64 {
        self.r_bob
    }

    pub fn r_eve(&self) -> f64 {
        self.r_eve
    }

    /// Distance from the beam axis to the centre of Eve's aperture.
    pub fn eve_center_offset(&self) -> f64 {
        self.r_bob + self.r_eve
    }

    pub fn area_alice(&self) -> f64 {
        PI * self.r_alice * self.r_alice
    }

    pub fn area_bob(&self) -> f64 {
        PI * self.r_bob * self.r_bob
    }

    pub fn area_eve(&self) -> f64 {
        PI * self.r_eve * self.r_eve
    }

    /// `(r_eve / r_bob)^2`.
    pub fn aperture_ratio(&self) -> f64 {
        (self.r_eve / self.r_bob).powi(2)
    }
}

/// Wiretap channel parameters at one distance and carrier frequency.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ChannelPoint {
    /// Alice-to-Bob transmissivity.
    pub eta: f64,
    /// Fraction of the light missed by Bob that Eve collects.
    pub kappa: f64,
    /// Thermal photons per mode.
    pub n_e: f64,
    pub distance: f64,
    pub frequency: f64,
}

impl ChannelPoint {
    /// Builds a point from explicit parameters, checking the invariants.
    pub fn new(eta: f64, kappa: f64, n_e: f64, distance: f64, frequency: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&eta) {
            return Err(Error::param("eta", eta, "must lie in [0, 1]"));
        }
        if !(0.0..=1.0).contains(&kappa) {
            return Err(Error::param("kappa", kappa, "must lie in [0, 1]"));
        }
        if !(n_e >= 0.0 && n_e.is_finite()) {
            return Err(Error::param("n_e", n_e, "must be finite and non-negative"));
        }
        Ok(Self {
            eta,
            kappa,
            n_e,
            distance,
            frequency,
        })
    }

    /// Alice-to-Eve transmissivity `(1 - eta) kappa`.
    pub fn eta_eve(&self) -> f64 {
        (1.0 - self.eta) * self.kappa
    }
}

fn check_positive(name: &'static str, value: f64) -> Result<()> {
    if value > 0.0 && value.is_finite() {
        Ok(())
    } else {
        Err(Error::param(name, value, "must be positive and finite"))
    }
}

fn check_distance(distance: f64) -> Result<()> {
    if distance >= 0.0 && distance.is_finite() {
        Ok(())
    } else {
        Err(Error::param("distance", distance, "must be finite and non-negative"))
    }
}

/// `pi W0^2 / lambda`.
pub fn rayleigh_length(geom: &BeamGeometry) -> f64 {
    geom.rayleigh_length()
}

pub fn beam_width(geom: &BeamGeometry, distance: f64) -> Result<f64> {
    check_distance(distance)?;
    Ok(geom.beam_width(distance))
}

const DISC_CUTOFF_WIDTHS: f64 = 12.0;

/// `erf(hi) - erf(lo)` for `hi >= lo`, taken through `erfc` when both
/// arguments are positive so that far-off-axis discs keep their digits.
fn erf_difference(lo: f64, hi: f64) -> f64 {
    if lo >= 0.0 {
        libm::erfc(lo) - libm::erfc(hi)
    } else if hi <= 0.0 {
        libm::erfc(-hi) - libm::erfc(-lo)
    } else {
        libm::erf(hi) - libm::erf(lo)
    }
}

/// Fraction of the total beam power falling on a disc of `radius` whose
/// centre sits `offset` metres from the beam axis.
///
/// Tangential placement of Eve uses `offset = r_bob + r_eve`; other offsets
/// exist for cross-checking against sampling estimates.
pub fn offset_disc_fraction(
    geom: &BeamGeometry,
    radius: f64,
    offset: f64,
    distance: f64,
    config: &QuadratureConfig,
) -> Result<f64> {
    check_positive("radius", radius)?;
    check_distance(distance)?;
    if !(offset >= 0.0 && offset.is_finite()) {
        return Err(Error::param("offset", offset, "must be finite and non-negative"));
    }
    let w = geom.beam_width(distance);
    let scale = SQRT_2 / w;
    // chord at angle theta: x = r sin(theta), half-length r cos(theta)
    let integrand = |theta: f64| {
        let (s, c) = theta.sin_cos();
        let x = radius * s;
        let half = radius * c;
        let across = erf_difference(scale * (offset - half), scale * (offset + half));
        c * (-2.0 * x * x / (w * w)).exp() * 0.5 * across
    };
    // Beyond |x| = 12 W the Gaussian factor is below e^-288 and the chord
    // factor cannot grow, so wide discs are cut to where the beam is.
    let theta_max = (DISC_CUTOFF_WIDTHS * w / radius).min(1.0).asin();
    let r = integrate(integrand, 0.0, theta_max, config)?;
    Ok(2.0 * (2.0 / PI).sqrt() * (radius / w) * r.value)
}

/// Fraction of the total beam power collected by Bob's centred aperture.
pub fn power_fraction_bob(geom: &BeamGeometry, layout: &ApertureLayout, distance: f64) -> Result<f64> {
    power_fraction_bob_with(geom, layout, distance, &QuadratureConfig::default())
}

pub fn power_fraction_bob_with(
    geom: &BeamGeometry,
    layout: &ApertureLayout,
    distance: f64,
    config: &QuadratureConfig,
) -> Result<f64> {
    let eta = offset_disc_fraction(geom, layout.r_bob(), 0.0, distance, config)?;
    Ok(eta.min(1.0))
}

/// Eve's share `kappa` of the power Bob does not collect.
pub fn power_fraction_eve(geom: &BeamGeometry, layout: &ApertureLayout, distance: f64) -> Result<f64> {
    let config = QuadratureConfig::default();
    let eta = power_fraction_bob_with(geom, layout, distance, &config)?;
    kappa_given_eta(geom, layout, distance, eta, &config)
}

fn kappa_given_eta(
    geom: &BeamGeometry,
    layout: &ApertureLayout,
    distance: f64,
    eta: f64,
    config: &QuadratureConfig,
) -> Result<f64> {
    let eve = offset_disc_fraction(geom, layout.r_eve(), layout.eve_center_offset(), distance, config)?;
    let missed = 1.0 - eta;
    if missed <= 0.0 {
        return Ok(0.0);
    }
    Ok((eve / missed).clamp(0.0, 1.0))
}

/// Mean thermal photon number per mode at carrier `frequency`.
pub fn thermal_occupancy(frequency: f64, consts: &PhysicalConstants) -> Result<f64> {
    check_positive("frequency", frequency)?;
    check_positive("temperature", consts.temperature)?;
    let x = consts.planck * frequency / (consts.boltzmann * consts.temperature);
    if x > 700.0 {
        return Ok(0.0);
    }
    Ok(1.0 / x.exp_m1())
}

/// `eta`, `kappa` and `n_e` at one distance; `frequency` must match the beam wavelength.
pub fn channel_point(
    geom: &BeamGeometry,
    layout: &ApertureLayout,
    distance: f64,
    frequency: f64,
    consts: &PhysicalConstants,
) -> Result<ChannelPoint> {
    check_positive("frequency", frequency)?;
    let implied = consts.frequency_to_wavelength(frequency);
    if ((implied - geom.wavelength()) / geom.wavelength()).abs() > 1e-9 {
        return Err(Error::param(
            "frequency",
            frequency,
            "inconsistent with the beam wavelength",
        ));
    }
    let config = QuadratureConfig::default();
    let eta = power_fraction_bob_with(geom, layout, distance, &config)?;
    let kappa = kappa_given_eta(geom, layout, distance, eta, &config)?;
    let n_e = thermal_occupancy(frequency, consts)?;
    ChannelPoint::new(eta, kappa, n_e, distance, frequency)
}
