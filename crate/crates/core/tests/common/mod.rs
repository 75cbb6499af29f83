#![allow(dead_code)]

use fso_wiretap::channel::{offset_disc_fraction, power_fraction_bob};
use fso_wiretap::quadrature::QuadratureConfig;
use fso_wiretap::{ApertureLayout, BeamGeometry};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

pub const MC_SAMPLES: usize = 10_000_000;
pub const MC_CONFIGS: usize = 20;
pub const MC_SEED: u64 = 2026;

#[derive(Debug, Clone, Copy)]
pub struct DiscConfig {
    pub waist: f64,
    pub r_bob: f64,
    pub r_eve: f64,
    pub distance: f64,
}

/// Quadrature and sampling estimates of one disc fraction.
#[derive(Debug, Clone, Copy)]
pub struct Comparison {
    pub quadrature: f64,
    pub sampled: f64,
    pub std_error: f64,
}

impl Comparison {
    pub fn z(&self) -> f64 {
        if self.std_error == 0.0 {
            if self.quadrature == self.sampled { 0.0 } else { f64::INFINITY }
        } else {
            (self.quadrature - self.sampled).abs() / self.std_error
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct McOutcome {
    pub config: DiscConfig,
    pub bob: Comparison,
    pub eve: Comparison,
}

pub fn random_configs(n: usize, seed: u64) -> Vec<DiscConfig> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| DiscConfig {
            waist: rng.random_range(0.02..0.10),
            r_bob: rng.random_range(0.02..0.10),
            r_eve: rng.random_range(0.005..0.20),
            distance: 10f64.powf(rng.random_range(2.0..4.7)),
        })
        .collect()
}

fn estimate(hits: u64, n: usize, quadrature: f64) -> Comparison {
    let p = hits as f64 / n as f64;
    // binomial standard error from the reference value avoids zero-hit degeneracy
    let q = quadrature.clamp(0.0, 1.0);
    Comparison {
        quadrature,
        sampled: p,
        std_error: (q * (1.0 - q) / n as f64).sqrt(),
    }
}

/// Samples the transverse intensity profile and counts hits on Bob's and Eve's discs.
pub fn compare(config: DiscConfig, samples: usize, seed: u64) -> McOutcome {
    let geom = BeamGeometry::new(config.waist, 1550e-9).unwrap();
    let layout = ApertureLayout::new(config.waist, config.r_bob, config.r_eve).unwrap();
    let eta = power_fraction_bob(&geom, &layout, config.distance).unwrap();
    let p_eve = offset_disc_fraction(
        &geom,
        config.r_eve,
        layout.eve_center_offset(),
        config.distance,
        &QuadratureConfig::default(),
    )
    .unwrap();

    // intensity exp(-2 rho^2 / W^2) is a Gaussian with sigma = W / 2 per axis
    let sigma = geom.beam_width(config.distance) / 2.0;
    let offset = layout.eve_center_offset();
    let (rb2, re2) = (config.r_bob.powi(2), config.r_eve.powi(2));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut bob, mut eve) = (0u64, 0u64);
    for _ in 0..samples {
        let u1: f64 = 1.0 - rng.random::<f64>();
        let u2: f64 = rng.random();
        let r = sigma * (-2.0 * u1.ln()).sqrt();
        let (s, c) = (std::f64::consts::TAU * u2).sin_cos();
        let (x, y) = (r * c, r * s);
        let rho2 = x * x + y * y;
        if rho2 < rb2 {
            bob += 1;
        } else if (x - offset).powi(2) + y * y < re2 {
            eve += 1;
        }
    }
    McOutcome {
        config,
        bob: estimate(bob, samples, eta),
        eve: estimate(eve, samples, p_eve),
    }
}

pub fn run_oracle(configs: usize, samples: usize, seed: u64) -> Vec<McOutcome> {
    random_configs(configs, seed)
        .into_par_iter()
        .enumerate()
        .map(|(i, c)| compare(c, samples, seed.wrapping_add(1 + i as u64)))
        .collect()
}
