//! Constrained engineering design problems.
//!
//! Constraints are written as `g(x) ≤ 0`. The auxiliary quantities of the
//! welded beam and the coil spring use the constants listed below; they come
//! from the usual formulations of these benchmarks.

use std::f64::consts::PI;

/// Thickness increment of the pressure vessel plates.
pub const VESSEL_THICKNESS_STEP: f64 = 0.0625;

/// Raw fabrication cost of a cylindrical pressure vessel.
pub fn vessel_cost(d_s: f64, d_h: f64, r: f64, l: f64) -> f64 {
    0.6224 * r * d_s * l + 1.7781 * d_h * r * r + 3.1661 * d_s * d_s * l + 19.84 * d_s * d_s * r
}

pub fn vessel_constraints(d_s: f64, d_h: f64, r: f64, l: f64) -> [f64; 4] {
    [
        -d_s + 0.0193 * r,
        -d_h + 0.00954 * r,
        -PI * r * r * l - 4.0 / 3.0 * PI * r.powi(3) + 1_296_000.0,
        l - 240.0,
    ]
}

/// Welded beam constants.
pub mod beam {
    /// Load (lb).
    pub const P: f64 = 6000.0;
    /// Overhang length (in).
    pub const L: f64 = 14.0;
    pub const E: f64 = 30e6;
    pub const G: f64 = 12e6;
    pub const TAU_MAX: f64 = 13_600.0;
    pub const SIGMA_MAX: f64 = 30_000.0;
    pub const DELTA_MAX: f64 = 0.25;
}

/// Raw fabrication cost of a welded beam.
pub fn beam_cost(x1: f64, x2: f64, x3: f64, x4: f64) -> f64 {
    1.10471 * x1 * x1 * x2 + 0.04811 * x3 * x4 * (14.0 + x2)
}

/// Weld shear stress.
pub fn beam_shear_stress(x1: f64, x2: f64, x3: f64) -> f64 {
    use beam::*;
    let tau_p = P / (2f64.sqrt() * x1 * x2);
    let m = P * (L + x2 / 2.0);
    let half = (x1 + x3) / 2.0;
    let r = (x2 * x2 / 4.0 + half * half).sqrt();
    let j = 2.0 * (2f64.sqrt() * x1 * x2 * (x2 * x2 / 12.0 + half * half));
    let tau_pp = m * r / j;
    (tau_p * tau_p + 2.0 * tau_p * tau_pp * x2 / (2.0 * r) + tau_pp * tau_pp).sqrt()
}

pub fn beam_bending_stress(x3: f64, x4: f64) -> f64 {
    6.0 * beam::P * beam::L / (x4 * x3 * x3)
}

pub fn beam_deflection(x3: f64, x4: f64) -> f64 {
    4.0 * beam::P * beam::L.powi(3) / (beam::E * x3.powi(3) * x4)
}

/// Critical buckling load of the bar.
pub fn beam_buckling_load(x3: f64, x4: f64) -> f64 {
    use beam::*;
    let root = (x3 * x3 * x4.powi(6) / 36.0).sqrt();
    4.013 * E * root / (L * L) * (1.0 - x3 / (2.0 * L) * (E / (4.0 * G)).sqrt())
}

pub fn beam_constraints(x1: f64, x2: f64, x3: f64, x4: f64) -> [f64; 7] {
    [
        beam_shear_stress(x1, x2, x3) - beam::TAU_MAX,
        beam_bending_stress(x3, x4) - beam::SIGMA_MAX,
        x1 - x4,
        0.10471 * x1 * x1 + 0.04811 * x3 * x4 * (14.0 + x2) - 5.0,
        0.125 - x1,
        beam_deflection(x3, x4) - beam::DELTA_MAX,
        beam::P - beam_buckling_load(x3, x4),
    ]
}

/// Coil spring constants.
pub mod spring {
    /// Maximum working load (lb).
    pub const P_MAX: f64 = 1000.0;
    /// Preload (lb).
    pub const P_LOAD: f64 = 300.0;
    /// Allowable shear stress (psi).
    pub const S: f64 = 189_000.0;
    /// Maximum free length (in).
    pub const L_FREE: f64 = 14.0;
    pub const D_MIN: f64 = 0.2;
    pub const D_COIL_MAX: f64 = 3.0;
    /// Allowable preload deflection (in).
    pub const DELTA_PM: f64 = 6.0;
    /// Deflection from preload to maximum load (in).
    pub const DELTA_W: f64 = 1.25;
    /// Shear modulus (psi).
    pub const G: f64 = 11.5e6;
}

/// Raw spring weight `(N + 2) d² D`.
pub fn spring_weight(d: f64, d_coil: f64, n: f64) -> f64 {
    (n + 2.0) * d * d * d_coil
}

/// Wahl stress correction factor, with `C = D / d`.
pub fn spring_wahl_factor(d: f64, d_coil: f64) -> f64 {
    let c = d_coil / d;
    (4.0 * c - 1.0) / (4.0 * c - 4.0) + 0.615 / c
}

/// Spring rate `G d⁴ / (8 N D³)`.
pub fn spring_stiffness(d: f64, d_coil: f64, n: f64) -> f64 {
    spring::G * d.powi(4) / (8.0 * n * d_coil.powi(3))
}

pub fn spring_constraints(d: f64, d_coil: f64, n: f64) -> [f64; 7] {
    use spring::*;
    let k = spring_stiffness(d, d_coil, n);
    let delta_max = P_MAX / k;
    let delta_load = P_LOAD / k;
    [
        8.0 * spring_wahl_factor(d, d_coil) * P_MAX * d_coil / (PI * d.powi(3)) - S,
        delta_max + 1.05 * (n + 2.0) * d - L_FREE,
        D_MIN - d,
        (d + d_coil) - D_COIL_MAX,
        3.0 - d_coil / d,
        delta_max - DELTA_PM,
        DELTA_W - delta_max + delta_load,
    ]
}
