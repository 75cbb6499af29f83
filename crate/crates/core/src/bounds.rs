//! Secret-key-rate bounds for the thermal-loss wiretap channel in which Eve
//! only collects the light falling on her aperture.
//!
//! The lower bounds are evaluated on an entanglement-based model: Alice keeps
//! one arm of a two-mode squeezed vacuum, the other arm meets a thermal mode
//! on a beamsplitter of transmissivity `eta` (Bob's port), and the light Bob
//! misses meets a second thermal mode on a beamsplitter of transmissivity
//! `kappa` (Eve's port). Eve's state is her tapped mode alone.

use serde::{Deserialize, Serialize};

use crate::channel::ChannelPoint;
use crate::error::{Error, Result};
use crate::gaussian::{
    apply_beamsplitter, attach_mode, condition_on_heterodyne, g, partial_trace, tmsv_covariance,
    von_neumann_entropy, CovarianceMatrix,
};

/// A channel plus Alice's mean photon number and the reconciliation efficiency.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WiretapScenario {
    pub channel: ChannelPoint,
    pub mu: f64,
    pub beta: f64,
}

impl WiretapScenario {
    pub fn new(channel: ChannelPoint, mu: f64, beta: f64) -> Result<Self> {
        check_beta(beta)?;
        if !(mu >= 0.0 && mu.is_finite()) {
            return Err(Error::param("mu", mu, "mean photon number must be finite and non-negative"));
        }
        Ok(Self { channel, mu, beta })
    }
}

fn check_beta(beta: f64) -> Result<()> {
    if beta > 0.0 && beta <= 1.0 {
        Ok(())
    } else {
        Err(Error::param("beta", beta, "reconciliation efficiency must lie in (0, 1]"))
    }
}

/// Squared ratio of Eve's to Bob's aperture radius.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
pub struct ApertureRatio(f64);

impl ApertureRatio {
    pub fn new(m: f64) -> Result<Self> {
        if m > 0.0 && m.is_finite() {
            Ok(Self(m))
        } else {
            Err(Error::param("m", m, "aperture ratio must be positive"))
        }
    }

    pub fn from_radii(r_eve: f64, r_bob: f64) -> Result<Self> {
        Self::new((r_eve / r_bob).powi(2))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Reconciliation {
    Direct,
    Reverse,
}

/// Alice's input power: a fixed mean photon number or the `mu -> infinity` limit.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum InputPower {
    Fixed(f64),
    Unbounded,
}

/// Lower and upper bounds at one channel point, in bits per mode.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RateBound {
    pub k_dr: f64,
    pub k_rr: f64,
    pub k_best: f64,
    /// Pure-loss upper bound; `+inf` when Eve receives nothing.
    pub k_upper: f64,
    pub dr_clamped: bool,
    pub rr_clamped: bool,
}

impl RateBound {
    fn from_raw(dr: f64, rr: f64, k_upper: f64) -> Self {
        let k_dr = dr.max(0.0);
        let k_rr = rr.max(0.0);
        Self {
            k_dr,
            k_rr,
            k_best: k_dr.max(k_rr),
            k_upper,
            dr_clamped: dr < 0.0,
            rr_clamped: rr < 0.0,
        }
    }
}

/// Mode labels of the state returned by [`build_wiretap_model`].
pub mod modes {
    pub const ALICE: usize = 0;
    pub const BOB: usize = 1;
    pub const EVE: usize = 2;
    /// Second output of Eve's beamsplitter, collected by nobody.
    pub const RESIDUAL: usize = 3;
}

/// Joint covariance of Alice's retained arm, Bob, Eve and the residual port.
pub fn build_wiretap_model(scenario: &WiretapScenario) -> Result<CovarianceMatrix> {
    let ch = &scenario.channel;
    let thermal = 2.0 * ch.n_e + 1.0;
    let state = tmsv_covariance(scenario.mu)?;
    let state = attach_mode(&state, thermal)?;
    let state = apply_beamsplitter(&state, modes::BOB, 2, ch.eta)?;
    let state = attach_mode(&state, thermal)?;
    apply_beamsplitter(&state, modes::EVE, modes::RESIDUAL, ch.kappa)
}

/// Eve's unconditional entropy and her entropy given Bob's heterodyne outcome.
fn eve_entropies(state: &CovarianceMatrix) -> Result<(f64, f64)> {
    let eve = partial_trace(state, &[modes::EVE])?;
    let bob_eve = partial_trace(state, &[modes::BOB, modes::EVE])?;
    let eve_given_bob = condition_on_heterodyne(&bob_eve, 0)?;
    Ok((von_neumann_entropy(&eve)?, von_neumann_entropy(&eve_given_bob)?))
}

/// Alice's conditional photon number after Bob's heterodyne measurement,
/// `mu - eta mu (1+mu) / (1 + n_e - n_e eta + eta mu)`, in a form that
/// avoids the cancellation at large `mu`.
pub fn alice_conditional_photons(eta: f64, n_e: f64, mu: f64) -> f64 {
    mu * (1.0 - eta) * (1.0 + n_e) / (1.0 + n_e * (1.0 - eta) + eta * mu)
}

/// Direct-reconciliation rate before clamping.
pub fn direct_rate_unclamped(scenario: &WiretapScenario) -> Result<f64> {
    let ch = &scenario.channel;
    let (eta, n_e) = (ch.eta, ch.n_e);
    let state = build_wiretap_model(scenario)?;
    let s_eve = von_neumann_entropy(&partial_trace(&state, &[modes::EVE])?)?;
    let noise_bob = n_e * (1.0 - eta);
    // Eve's state given Alice's outcome is thermal with n_e (1 - tau) photons
    let s_eve_given_alice = g(n_e * (1.0 - ch.eta_eve()));
    Ok(scenario.beta * (g(noise_bob + eta * scenario.mu) - g(noise_bob)) - s_eve + s_eve_given_alice)
}

/// Reverse-reconciliation rate before clamping.
pub fn reverse_rate_unclamped(scenario: &WiretapScenario) -> Result<f64> {
    let ch = &scenario.channel;
    let mu = scenario.mu;
    let state = build_wiretap_model(scenario)?;
    let (s_eve, s_eve_given_bob) = eve_entropies(&state)?;
    let alice_given_bob = alice_conditional_photons(ch.eta, ch.n_e, mu);
    Ok(scenario.beta * (g(mu) - g(alice_given_bob)) - s_eve + s_eve_given_bob)
}

/// Direct-reconciliation lower bound, clamped at zero.
pub fn lower_bound_direct(scenario: &WiretapScenario) -> Result<f64> {
    Ok(direct_rate_unclamped(scenario)?.max(0.0))
}

/// Reverse-reconciliation lower bound, clamped at zero.
pub fn lower_bound_reverse(scenario: &WiretapScenario) -> Result<f64> {
    Ok(reverse_rate_unclamped(scenario)?.max(0.0))
}

fn check_interior(eta: f64, kappa: f64) -> Result<()> {
    if !(eta > 0.0 && eta < 1.0) {
        return Err(Error::param("eta", eta, "must lie strictly between 0 and 1"));
    }
    if !(kappa > 0.0 && kappa <= 1.0) {
        return Err(Error::param("kappa", kappa, "must lie in (0, 1]"));
    }
    Ok(())
}

/// Unbounded-power direct rate of the model with perfect reconciliation,
/// before clamping: `log2(eta / tau) - g(n_e (1-eta)) + g(n_e (1 - tau))`
/// with `tau = (1-eta) kappa`.
pub fn direct_rate_unbounded(channel: &ChannelPoint) -> Result<f64> {
    let (eta, kappa, n_e) = (channel.eta, channel.kappa, channel.n_e);
    check_interior(eta, kappa)?;
    let tau = (1.0 - eta) * kappa;
    Ok((eta / tau).log2() - g(n_e * (1.0 - eta)) + g(n_e * (1.0 - tau)))
}

/// Unbounded-power reverse rate of the model with perfect reconciliation,
/// before clamping. As `mu` grows, Alice's conditional photon number tends to
/// `(1-eta)(1+n_e)/eta` and Eve's conditional one to `n_e + tau (1+n_e)/eta`.
pub fn reverse_rate_unbounded(channel: &ChannelPoint) -> Result<f64> {
    let (eta, kappa, n_e) = (channel.eta, channel.kappa, channel.n_e);
    check_interior(eta, kappa)?;
    let tau = (1.0 - eta) * kappa;
    let alice = (1.0 - eta) * (1.0 + n_e) / eta;
    let eve = n_e + tau * (1.0 + n_e) / eta;
    Ok(-tau.log2() - g(alice) + g(eve))
}

/// Direct bound for a pure-loss channel at unbounded power.
pub fn pure_loss_direct(eta: f64, kappa: f64) -> Result<f64> {
    check_interior(eta, kappa)?;
    Ok((eta / (kappa * (1.0 - eta))).log2().max(0.0))
}

/// Reverse bound for a pure-loss channel at unbounded power.
pub fn pure_loss_reverse(eta: f64, kappa: f64) -> Result<f64> {
    check_interior(eta, kappa)?;
    let tau = kappa * (1.0 - eta);
    let value = -tau.log2() - (g((1.0 - eta) / eta) - g(tau / eta));
    Ok(value.max(0.0))
}

/// Pure-loss upper bound `log2((eta + kappa (1-eta)) / (kappa (1-eta)))`.
pub fn upper_bound(eta: f64, kappa: f64) -> Result<f64> {
    check_interior(eta, kappa)?;
    let tau = kappa * (1.0 - eta);
    Ok(((eta + tau) / tau).log2())
}

/// Far-field upper bound `log2((1+m)/m)`.
pub fn upper_bound_asymptotic(m: ApertureRatio) -> f64 {
    let m = m.value();
    ((1.0 + m) / m).log2()
}

/// Far-field direct bound `max(0, -log2 m)`.
pub fn asymptote_direct(m: ApertureRatio) -> f64 {
    (-m.value().log2()).max(0.0)
}

/// Far-field reverse bound `-log2((m/(1+m))^(1+m) e)`.
pub fn asymptote_reverse(m: ApertureRatio) -> f64 {
    let m = m.value();
    // (1+m) log2((1+m)/m) - log2 e, with the log taken stably for large m
    (1.0 + m) * (1.0 / m).ln_1p() / std::f64::consts::LN_2 - std::f64::consts::LOG2_E
}

/// Far-field bound: the direct branch up to the threshold ratio, the reverse branch beyond.
pub fn asymptote_best(m: ApertureRatio) -> f64 {
    if m.value() <= m_threshold() {
        asymptote_direct(m)
    } else {
        asymptote_reverse(m)
    }
}

fn threshold_residual(m: f64) -> f64 {
    (m + 1.0) * m.ln_1p() - m * m.ln() - 1.0
}

/// Aperture ratio at which the far-field direct and reverse bounds coincide:
/// the root in (0, 1) of `(m+1) ln(m+1) - m ln m = 1`.
pub fn m_threshold() -> f64 {
    let (mut lo, mut hi) = (1e-3, 1.0);
    debug_assert!(threshold_residual(lo) < 0.0 && threshold_residual(hi) > 0.0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if threshold_residual(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo < 1e-15 {
            break;
        }
    }
    0.5 * (lo + hi)
}

/// Residual of the threshold equation at `m`; zero at [`m_threshold`].
pub fn m_threshold_residual(m: f64) -> f64 {
    threshold_residual(m)
}

/// All bounds at one channel point.
///
/// With [`InputPower::Unbounded`] the lower bounds are the `mu -> infinity`
/// limits of the model, which exist only for `beta = 1`.
pub fn evaluate_bounds(channel: &ChannelPoint, beta: f64, power: InputPower) -> Result<RateBound> {
    check_beta(beta)?;
    let k_upper = if channel.kappa > 0.0 && channel.eta > 0.0 && channel.eta < 1.0 {
        upper_bound(channel.eta, channel.kappa)?
    } else {
        f64::INFINITY
    };
    let (dr, rr) = match power {
        InputPower::Fixed(mu) => {
            let scenario = WiretapScenario::new(*channel, mu, beta)?;
            (direct_rate_unclamped(&scenario)?, reverse_rate_unclamped(&scenario)?)
        }
        InputPower::Unbounded => {
            if beta < 1.0 {
                return Err(Error::param(
                    "beta",
                    beta,
                    "unbounded input power only has a finite rate with perfect reconciliation",
                ));
            }
            (direct_rate_unbounded(channel)?, reverse_rate_unbounded(channel)?)
        }
    };
    Ok(RateBound::from_raw(dr, rr, k_upper))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn channel(eta: f64, kappa: f64, n_e: f64) -> ChannelPoint {
        ChannelPoint::new(eta, kappa, n_e, 0.0, 1.0).unwrap()
    }

    fn scenario(eta: f64, kappa: f64, n_e: f64, mu: f64, beta: f64) -> WiretapScenario {
        WiretapScenario::new(channel(eta, kappa, n_e), mu, beta).unwrap()
    }

    #[test]
    fn scenario_validation() {
        let ch = channel(0.5, 0.5, 0.0);
        assert!(WiretapScenario::new(ch, 1.0, 0.0).is_err());
        assert!(WiretapScenario::new(ch, 1.0, 1.1).is_err());
        assert!(WiretapScenario::new(ch, -1.0, 1.0).is_err());
        assert!(ApertureRatio::new(0.0).is_err());
    }

    #[test]
    fn model_marginals() {
        let (eta, kappa, n_e, mu) = (0.3, 0.6, 0.8, 4.0);
        let state = build_wiretap_model(&scenario(eta, kappa, n_e, mu, 1.0)).unwrap();
        assert_relative_eq!(state.mean_photons(modes::BOB), eta * mu + (1.0 - eta) * n_e, max_relative = 1e-12);
        assert_relative_eq!(state.mean_photons(modes::ALICE), mu, max_relative = 1e-12);
        let tau = (1.0 - eta) * kappa;
        assert_relative_eq!(
            state.mean_photons(modes::EVE),
            tau * mu + (1.0 - tau) * n_e,
            max_relative = 1e-12
        );

        let pure_loss = build_wiretap_model(&scenario(eta, kappa, 0.0, mu, 1.0)).unwrap();
        assert_relative_eq!(pure_loss.mean_photons(modes::EVE), tau * mu, max_relative = 1e-12);
    }

    #[test]
    fn model_without_signal_is_vacuum() {
        let state = build_wiretap_model(&scenario(0.4, 0.7, 0.0, 0.0, 1.0)).unwrap();
        assert_relative_eq!(*state.matrix(), nalgebra::DMatrix::identity(8, 8), epsilon = 1e-15);
    }

    #[test]
    fn conditional_photons_match_printed_form() {
        for &(eta, n_e, mu) in &[(0.3, 0.0, 5.0), (0.8, 2.0, 0.3), (0.05, 0.4, 120.0)] {
            let printed = mu - eta * mu * (1.0 + mu) / (1.0 + n_e - n_e * eta + eta * mu);
            assert_relative_eq!(alice_conditional_photons(eta, n_e, mu), printed, max_relative = 1e-12);
        }
    }

    #[test]
    fn alice_conditional_state_from_model_matches_formula() {
        let (eta, kappa, n_e, mu) = (0.35, 0.4, 1.3, 6.0);
        let state = build_wiretap_model(&scenario(eta, kappa, n_e, mu, 1.0)).unwrap();
        let ab = partial_trace(&state, &[modes::ALICE, modes::BOB]).unwrap();
        let alice = condition_on_heterodyne(&ab, 1).unwrap();
        assert_relative_eq!(alice.mean_photons(0), alice_conditional_photons(eta, n_e, mu), max_relative = 1e-12);
    }

    #[test]
    fn eve_conditional_on_alice_noise() {
        // Eve's residual noise once Alice's heterodyne outcome is known is
        // n_e (1 - (1-eta) kappa), not n_e (1 - eta kappa).
        let (eta, kappa, n_e, mu) = (0.35, 0.4, 1.3, 6.0);
        let state = build_wiretap_model(&scenario(eta, kappa, n_e, mu, 1.0)).unwrap();
        let ae = partial_trace(&state, &[modes::ALICE, modes::EVE]).unwrap();
        let eve = condition_on_heterodyne(&ae, 0).unwrap();
        let tau = (1.0 - eta) * kappa;
        assert_relative_eq!(eve.mean_photons(0), n_e * (1.0 - tau), max_relative = 1e-10);
        assert!((n_e * (1.0 - eta * kappa) - n_e * (1.0 - tau)).abs() > 0.1);
    }

    #[test]
    fn pure_loss_direct_examples() {
        assert_relative_eq!(pure_loss_direct(0.5, 1.0).unwrap(), 0.0, epsilon = 1e-15);
        assert_relative_eq!(pure_loss_direct(0.8, 0.5).unwrap(), 3.0, max_relative = 1e-14);
        let a = pure_loss_direct(0.5, 1e-3).unwrap();
        let b = pure_loss_direct(0.5, 1e-6).unwrap();
        assert_relative_eq!(b - a, 3.0 * 10f64.log2(), max_relative = 1e-12);
        assert!(pure_loss_direct(0.0, 0.5).is_err());
        assert!(pure_loss_direct(1.0, 0.5).is_err());
        assert!(pure_loss_direct(0.5, 0.0).is_err());
    }

    #[test]
    fn pure_loss_reverse_examples() {
        for &eta in &[0.1, 0.5, 0.9] {
            assert_relative_eq!(pure_loss_reverse(eta, 1.0).unwrap(), -(1.0 - eta).log2(), max_relative = 1e-12);
        }
        assert_relative_eq!(pure_loss_reverse(0.5, 1.0).unwrap(), 1.0, max_relative = 1e-14);
        let a = pure_loss_reverse(0.5, 1e-4).unwrap();
        let b = pure_loss_reverse(0.5, 1e-8).unwrap();
        assert_relative_eq!(b - a, 4.0 * 10f64.log2(), max_relative = 1e-3);
    }

    #[test]
    fn finite_power_bounds_vanish_without_signal() {
        let s = scenario(0.4, 0.7, 0.0, 0.0, 1.0);
        assert_eq!(lower_bound_direct(&s).unwrap(), 0.0);
        assert_eq!(lower_bound_reverse(&s).unwrap(), 0.0);
        let noisy = scenario(0.4, 0.7, 2.0, 0.0, 0.9);
        // Bob's and Eve's noise share a thermal mode, so this one dips below zero
        assert!(reverse_rate_unclamped(&noisy).unwrap() < 1e-12);
        assert_eq!(lower_bound_reverse(&noisy).unwrap(), 0.0);
        assert!(direct_rate_unclamped(&noisy).unwrap().abs() < 1e-9);
        let strong_eve = scenario(0.01, 0.45, 0.54, 0.0, 1.0);
        assert!(direct_rate_unclamped(&strong_eve).unwrap().abs() < 1e-9);
    }

    #[test]
    fn large_power_approaches_pure_loss_forms() {
        let s = scenario(0.7, 0.4, 0.0, 1e6, 1.0);
        assert_relative_eq!(
            lower_bound_direct(&s).unwrap(),
            (0.7f64 / (0.4 * 0.3)).log2(),
            epsilon = 1e-2
        );
        assert_relative_eq!(
            lower_bound_reverse(&s).unwrap(),
            pure_loss_reverse(0.7, 0.4).unwrap(),
            epsilon = 1e-2
        );
        let unrestricted = scenario(0.3, 1.0, 0.0, 1e6, 1.0);
        assert_relative_eq!(lower_bound_reverse(&unrestricted).unwrap(), -(0.7f64).log2(), epsilon = 1e-2);
    }

    #[test]
    fn direct_clamps_when_eve_out_collects_bob() {
        // (1-eta) kappa >= eta
        let s = scenario(0.3, 0.9, 0.0, 1e6, 1.0);
        assert_eq!(lower_bound_direct(&s).unwrap(), 0.0);
        assert!(direct_rate_unclamped(&s).unwrap() < 0.0);
    }

    #[test]
    fn unbounded_limits_match_model_at_huge_power() {
        for &(eta, kappa, n_e) in &[(0.6, 0.3, 0.0), (0.2, 0.9, 0.5), (0.45, 0.05, 3.0)] {
            let ch = channel(eta, kappa, n_e);
            let s = WiretapScenario::new(ch, 1e9, 1.0).unwrap();
            assert_relative_eq!(
                direct_rate_unclamped(&s).unwrap(),
                direct_rate_unbounded(&ch).unwrap(),
                epsilon = 1e-6
            );
            assert_relative_eq!(
                reverse_rate_unclamped(&s).unwrap(),
                reverse_rate_unbounded(&ch).unwrap(),
                epsilon = 1e-6
            );
        }
    }

    #[test]
    fn unbounded_limits_reduce_to_pure_loss() {
        let ch = channel(0.55, 0.35, 0.0);
        assert_relative_eq!(direct_rate_unbounded(&ch).unwrap(), pure_loss_direct(0.55, 0.35).unwrap(), max_relative = 1e-14);
        assert_relative_eq!(reverse_rate_unbounded(&ch).unwrap(), pure_loss_reverse(0.55, 0.35).unwrap(), max_relative = 1e-14);
    }

    #[test]
    fn unbounded_far_field_reaches_asymptotes() {
        for &m in &[0.16, 1.0, 1.96, 4.0] {
            let eta = 1e-9;
            let kappa = m * eta / (1.0 - eta);
            let ch = channel(eta, kappa, 0.0);
            let ratio = ApertureRatio::new(m).unwrap();
            assert_relative_eq!(reverse_rate_unbounded(&ch).unwrap(), asymptote_reverse(ratio), epsilon = 1e-6);
            assert_relative_eq!(direct_rate_unbounded(&ch).unwrap().max(0.0), asymptote_direct(ratio), epsilon = 1e-6);
            assert_relative_eq!(upper_bound(eta, kappa).unwrap(), upper_bound_asymptotic(ratio), epsilon = 1e-6);
        }
    }

    #[test]
    fn asymptote_examples() {
        let m = |v| ApertureRatio::new(v).unwrap();
        assert_eq!(asymptote_direct(m(1.0)), 0.0);
        assert_relative_eq!(asymptote_direct(m(0.16)), 2.6439, epsilon = 1e-4);
        assert_eq!(asymptote_direct(m(4.0)), 0.0);

        assert_relative_eq!(asymptote_reverse(m(1.0)), 2.0 - std::f64::consts::LOG2_E, max_relative = 1e-14);
        assert_relative_eq!(asymptote_reverse(m(1.0)), 0.5573, epsilon = 1e-4);
        assert!(asymptote_reverse(m(1e8)) < 1e-7);
        assert!(asymptote_reverse(m(1e-12)) > 35.0);

        assert_relative_eq!(asymptote_best(m(0.2)), -(0.2f64).log2(), max_relative = 1e-14);
        assert_relative_eq!(asymptote_best(m(1.0)), 0.5573, epsilon = 1e-4);
    }

    #[test]
    fn asymptotes_decrease_in_ratio() {
        let grid: Vec<f64> = (0..60).map(|k| 10f64.powf(-2.0 + 0.05 * k as f64)).collect();
        for w in grid.windows(2) {
            let (a, b) = (ApertureRatio::new(w[0]).unwrap(), ApertureRatio::new(w[1]).unwrap());
            assert!(asymptote_reverse(b) < asymptote_reverse(a));
            assert!(upper_bound_asymptotic(b) < upper_bound_asymptotic(a));
            if w[1] < 1.0 {
                assert!(asymptote_direct(b) < asymptote_direct(a));
            }
        }
    }

    #[test]
    fn threshold_root() {
        let m_th = m_threshold();
        assert_eq!((m_th * 100.0).round() / 100.0, 0.54);
        assert!(m_threshold_residual(m_th).abs() < 1e-9);
        let r = ApertureRatio::new(m_th).unwrap();
        assert_relative_eq!(asymptote_direct(r), asymptote_reverse(r), epsilon = 1e-8);
        let below = ApertureRatio::new(m_th - 1e-7).unwrap();
        let above = ApertureRatio::new(m_th + 1e-7).unwrap();
        assert!((asymptote_best(below) - asymptote_best(above)).abs() < 1e-6);
    }

    #[test]
    fn upper_bound_examples() {
        for &eta in &[0.2, 0.6] {
            assert_relative_eq!(upper_bound(eta, 1.0).unwrap(), (1.0 / (1.0 - eta)).log2(), max_relative = 1e-14);
        }
        assert_relative_eq!(upper_bound_asymptotic(ApertureRatio::new(1.0).unwrap()), 1.0);
        assert_relative_eq!(upper_bound_asymptotic(ApertureRatio::new(0.16).unwrap()), 2.8580, epsilon = 1e-4);
        assert!(upper_bound(1.0, 0.3).is_err());
    }

    #[test]
    fn evaluate_bounds_flags_and_ordering() {
        let ch = channel(0.3, 0.9, 0.0);
        let b = evaluate_bounds(&ch, 1.0, InputPower::Unbounded).unwrap();
        assert!(b.dr_clamped && b.k_dr == 0.0);
        assert!(!b.rr_clamped && b.k_rr > 0.0);
        assert_eq!(b.k_best, b.k_rr);
        assert!(b.k_upper >= b.k_best);
        assert!(evaluate_bounds(&ch, 0.9, InputPower::Unbounded).is_err());
        let fixed = evaluate_bounds(&ch, 0.9, InputPower::Fixed(10.0)).unwrap();
        assert!(fixed.k_upper >= fixed.k_best);
    }

    #[test]
    fn rates_grow_with_beta() {
        for &(eta, kappa, n_e, mu) in &[(0.4, 0.3, 0.0, 5.0), (0.2, 0.6, 0.7, 50.0)] {
            let mut prev = (f64::NEG_INFINITY, f64::NEG_INFINITY);
            for k in 1..=10 {
                let s = scenario(eta, kappa, n_e, mu, k as f64 / 10.0);
                let cur = (direct_rate_unclamped(&s).unwrap(), reverse_rate_unclamped(&s).unwrap());
                assert!(cur.0 >= prev.0 && cur.1 >= prev.1);
                prev = cur;
            }
        }
    }
}
