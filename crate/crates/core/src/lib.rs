//! Secret-key-rate bounds for a free-space optical wiretap channel in which a
//! finite-aperture eavesdropper sits next to Bob's receiver.
//!
//! The pipeline runs from beam geometry ([`channel`]) through Gaussian-state
//! entropies ([`gaussian`]) to key-rate bounds ([`bounds`]) and parameter
//! sweeps ([`sweep`]). [`cli`] wraps it as a command-line tool.

// `!(x > 0.0)` style checks are deliberate: they reject NaN as well.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bounds;
pub mod channel;
pub mod cli;
pub mod error;
pub mod gaussian;
pub mod quadrature;
pub mod sweep;

pub use bounds::{
    evaluate_bounds, m_threshold, ApertureRatio, InputPower, RateBound, Reconciliation, WiretapScenario,
};
pub use channel::{channel_point, ApertureLayout, BeamGeometry, ChannelPoint, PhysicalConstants};
pub use error::{Error, Result};
pub use gaussian::CovarianceMatrix;
pub use sweep::{
    evaluate_point, figure_preset, optimal_input_power, run_sweep, FigurePreset, MuStar, OptimumReport,
    PointResult, PowerSetting, ScenarioParams, SweepSpec, SweepVariable,
};
