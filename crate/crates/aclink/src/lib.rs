//! Desk-scale simulator and control-design toolbox for a grid-connected
//! soft-switching partial-resonance AC-link inverter.
//!
//! The converter transfers power indirectly through an LC link (transformer
//! magnetizing inductance in parallel with small film capacitors). Each link
//! cycle walks through twelve operating modes: two charging modes, four
//! discharging modes and six short partial-resonance intervals that swing the
//! link voltage between commutation levels so that every switch turns on and
//! off at (near) zero voltage.
//!
//! The crate is organized around that system:
//!
//! * [`tfcore`] — continuous-time transfer-function algebra and
//!   frequency-domain analysis: the half-cycle delay model, the CL output
//!   filter plant, the active-damping compensator, loop composition, Bode
//!   responses, pole/stability reports and the bandwidth selection rules.
//! * [`converter`] — the AC-link circuit model: link state, the twelve-mode
//!   hybrid automaton, per-mode piecewise-linear dynamics, mode-exit
//!   predicates and device-voltage bookkeeping for soft-switching checks.
//! * [`modulator`] — the switch controller: charge-control termination of
//!   conduction modes, per-half-cycle output leg selection from current
//!   references and gate commands at mode transitions.
//! * [`acside`] — three-phase grid source and CL output filter dynamics.
//! * [`control`] — synchronous-frame control stack: Park transforms, SRF-PLL,
//!   PI current regulators and the two active-damping variants.
//! * [`simengine`] — fixed-step integration with zero-crossing event
//!   localization over the hybrid system, an averaged-model alternative,
//!   trace capture and waveform metrics (THD, step metrics, switching
//!   frequency).
//! * [`cli`] — configuration parsing, scenario orchestration and CSV outputs
//!   backing the `aclink` command-line tool.
//!
//! The `examples/` directory contains one runnable example per major
//! capability; start with `cargo run --example bode_analysis`.

pub mod acside;
pub mod cli;
pub mod control;
pub mod converter;
pub mod modulator;
pub mod simengine;
pub mod tfcore;
