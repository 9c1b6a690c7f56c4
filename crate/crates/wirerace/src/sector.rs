//! Single-sector equilibrium: one roller, one wire, one ring corner.
//!
//! The state of an engaged sector is x = (Δ1, Δ2, Δ3, α): the two wire-ring
//! contact interferences, the roller-wire interference, and the loaded
//! contact angle. Four residuals close the system:
//!
//! * force balance along the roller-wire contact normal,
//!   `(N2 + s·μ·N1)·cos α + (N1 − s·μ·N2)·sin α = k3·Δ3`;
//! * radial compatibility,
//!   `Δ_R/2 − Δ2 + (D_cw/2 − Δ3)·cos α = (D_cw/2)·cos α0`;
//! * axial compatibility,
//!   `Δ_A/2 − Δ1 + (D_cw/2 − Δ3)·sin α = (D_cw/2)·sin α0`;
//! * moment balance of the wire about the roller centre,
//!   `N2·L·sin α + s·μ·N1·((λ/2 − Δ1) + L·sin α)
//!    + s·μ·N2·((λ/2 − Δ2) + L·cos α) = N1·L·cos α`, with L = D_cw/2 − Δ3.
//!
//! N1 = k1·Δ1 and N2 = k2·Δ2 are the wire-ring normal forces. The sliding
//! friction forces are `s·μ·N1` (radial, at the axial-normal contact) and
//! `−s·μ·N2` (axial, at the radial-normal contact); both their moments
//! oppose the wire rotation. The sign s is frozen from the imposed sector
//! displacements before the solve: +1 when the axial displacement prevails
//! (`Δ_A > Δ_R·tan α0`), −1 when the radial one does, 0 on the boundary
//! where the wire does not rotate and the friction terms vanish.
//!
//! The solver is a damped Newton iteration with an analytic Jacobian plus a
//! coarse grid fallback; see [`solve_sector`].

use nalgebra::{Matrix4, Vector4};

use crate::error::{Error, Result};
use crate::model::{BearingGeometry, ContactStiffness, SectorSolution};

/// Convergence threshold on the scaled residual norm.
pub const SCALED_RESIDUAL_TOLERANCE: f64 = 1e-10;

/// Newton iteration budget before falling back to the grid search.
pub const MAX_ITERATIONS: usize = 100;

/// Absolute tolerance (mm) inside which the two sides of the friction
/// dominance comparison count as equal.
pub const FRICTION_TIE_TOLERANCE: f64 = 1e-12;

/// Converged interferences in (-CLAMP_BAND, 0) are rounded up to zero;
/// anything more negative is reported as a separation.
const CLAMP_BAND: f64 = 1e-9;

/// Decides the friction sign from the imposed sector displacements.
///
/// Returns +1 if `axial > radial·tan(alpha0)`, -1 if smaller, and 0 when the
/// two sides agree within [`FRICTION_TIE_TOLERANCE`] (the wire does not
/// rotate and every friction term vanishes).
pub fn friction_sign(axial: f64, radial: f64, alpha0: f64) -> i8 {
    let d = axial - radial * alpha0.tan();
    if d.abs() <= FRICTION_TIE_TOLERANCE {
        0
    } else if d > 0.0 {
        1
    } else {
        -1
    }
}

/// The four equilibrium residuals; force in N, compatibility in mm, moment
/// in N·mm. All are zero at a converged root.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Residuals {
    pub force: f64,
    pub radial: f64,
    pub axial: f64,
    pub moment: f64,
}

/// Fixed parameters of one sector solve.
struct Params {
    axial: f64,
    radial: f64,
    /// s·μ, the signed friction factor.
    m: f64,
    k1: f64,
    k2: f64,
    k3: f64,
    /// D_cw / 2.
    r: f64,
    /// λ / 2.
    half_wire: f64,
    sin_a0: f64,
    cos_a0: f64,
}

impl Params {
    fn new(
        axial: f64,
        radial: f64,
        sign: i8,
        geometry: &BearingGeometry,
        stiffness: &ContactStiffness,
    ) -> Self {
        let (sin_a0, cos_a0) = geometry.initial_contact_angle.sin_cos();
        Params {
            axial,
            radial,
            m: f64::from(sign) * geometry.friction_coefficient,
            k1: stiffness.k1,
            k2: stiffness.k2,
            k3: stiffness.k3,
            r: geometry.contact_diameter / 2.0,
            half_wire: geometry.wire_diameter / 2.0,
            sin_a0,
            cos_a0,
        }
    }

    fn residuals(&self, x: [f64; 4]) -> Residuals {
        let [d1, d2, d3, a] = x;
        let (n1, n2) = (self.k1 * d1, self.k2 * d2);
        let l = self.r - d3;
        let (sa, ca) = a.sin_cos();
        let ax_combo = n1 - self.m * n2;
        let rad_combo = n2 + self.m * n1;
        Residuals {
            force: rad_combo * ca + ax_combo * sa - self.k3 * d3,
            radial: self.radial / 2.0 - d2 + l * ca - self.r * self.cos_a0,
            axial: self.axial / 2.0 - d1 + l * sa - self.r * self.sin_a0,
            moment: n2 * l * sa
                + self.m * n1 * ((self.half_wire - d1) + l * sa)
                + self.m * n2 * ((self.half_wire - d2) + l * ca)
                - n1 * l * ca,
        }
    }

    /// Maximum residual magnitude relative to characteristic force, length
    /// and moment scales of the current state.
    fn scaled_norm(&self, x: [f64; 4], res: &Residuals) -> f64 {
        let [d1, d2, d3, _] = x;
        let (n1, n2) = (self.k1 * d1, self.k2 * d2);
        let force_scale = 1.0 + n1.abs() + n2.abs() + (self.k3 * d3).abs();
        let length_scale = self.r;
        let moment_scale = 1.0 + (n1.abs() + n2.abs()) * (self.r + self.half_wire);
        (res.force.abs() / force_scale)
            .max(res.radial.abs() / length_scale)
            .max(res.axial.abs() / length_scale)
            .max(res.moment.abs() / moment_scale)
    }

    fn jacobian(&self, x: [f64; 4]) -> Matrix4<f64> {
        let [d1, d2, d3, a] = x;
        let (n1, n2) = (self.k1 * d1, self.k2 * d2);
        let l = self.r - d3;
        let (sa, ca) = a.sin_cos();
        let m = self.m;
        let ax_combo = n1 - m * n2;
        let rad_combo = n2 + m * n1;
        Matrix4::new(
            // force
            m * self.k1 * ca + self.k1 * sa,
            self.k2 * ca - m * self.k2 * sa,
            -self.k3,
            -rad_combo * sa + ax_combo * ca,
            // radial compatibility
            0.0,
            -1.0,
            -ca,
            -l * sa,
            // axial compatibility
            -1.0,
            0.0,
            -sa,
            l * ca,
            // moment
            -self.k1 * l * ca + m * self.k1 * (self.half_wire - 2.0 * d1 + l * sa),
            self.k2 * l * sa + m * self.k2 * (self.half_wire - 2.0 * d2 + l * ca),
            n1 * ca - n2 * sa - m * n1 * sa - m * n2 * ca,
            n2 * l * ca + n1 * l * sa + m * n1 * l * ca - m * n2 * l * sa,
        )
    }

    /// Start point: half displacements where positive, the unloaded angle,
    /// and the roller-wire interference that balances those contact forces.
    fn initial_guess(&self) -> [f64; 4] {
        let d1 = (self.axial / 2.0).max(0.0);
        let d2 = (self.radial / 2.0).max(0.0);
        let d3 = (self.k1 * d1 * self.sin_a0 + self.k2 * d2 * self.cos_a0) / self.k3;
        let alpha0 = self.sin_a0.atan2(self.cos_a0);
        [d1, d2, d3, alpha0]
    }

    /// Damped Newton iteration; returns the final state, its scaled norm and
    /// whether the tolerance was met.
    fn newton(&self, mut x: [f64; 4]) -> ([f64; 4], f64, bool) {
        let mut res = self.residuals(x);
        let mut norm = self.scaled_norm(x, &res);
        for _ in 0..MAX_ITERATIONS {
            if norm <= SCALED_RESIDUAL_TOLERANCE {
                return (x, norm, true);
            }
            let rhs = Vector4::new(-res.force, -res.radial, -res.axial, -res.moment);
            let Some(step) = self.jacobian(x).lu().solve(&rhs) else {
                break;
            };
            // Backtracking: halve the step until the scaled norm improves.
            let mut t = 1.0;
            let mut advanced = false;
            while t >= 1.0 / 4096.0 {
                let trial = [
                    x[0] + t * step[0],
                    x[1] + t * step[1],
                    x[2] + t * step[2],
                    x[3] + t * step[3],
                ];
                let trial_res = self.residuals(trial);
                let trial_norm = self.scaled_norm(trial, &trial_res);
                if trial_norm < norm {
                    x = trial;
                    res = trial_res;
                    norm = trial_norm;
                    advanced = true;
                    break;
                }
                t /= 2.0;
            }
            if !advanced {
                break;
            }
        }
        (x, norm, norm <= SCALED_RESIDUAL_TOLERANCE)
    }

    /// Coarse-to-fine grid search over (Δ3, α) with Δ1, Δ2 eliminated
    /// through the two compatibility equations. Used only when Newton
    /// stalls; the result still gets polished by Newton afterwards.
    fn grid_root(&self) -> [f64; 4] {
        let alpha0 = self.sin_a0.atan2(self.cos_a0);
        let guess = self.initial_guess();
        let (d3_lo, d3_hi) = (-0.01, self.r * 0.5);
        let (a_lo, a_hi) = (alpha0 - 0.6, alpha0 + 0.6);

        // Scales frozen at the initial guess. The per-state norm used by
        // Newton would grow its denominators with |N1|, |N2| and Δ3 here,
        // carving a false plateau far from any root that the shrinking
        // window then locks onto.
        let (gn1, gn2) = (self.k1 * guess[0], self.k2 * guess[1]);
        let force_scale = 1.0 + gn1.abs() + gn2.abs() + (self.k3 * guess[2]).abs();
        let length_scale = self.r;
        let moment_scale = 1.0 + (gn1.abs() + gn2.abs()) * (self.r + self.half_wire);

        let eval = |d3: f64, a: f64| -> ([f64; 4], f64) {
            let l = self.r - d3;
            let (sa, ca) = a.sin_cos();
            let d1 = self.axial / 2.0 + l * sa - self.r * self.sin_a0;
            let d2 = self.radial / 2.0 + l * ca - self.r * self.cos_a0;
            let x = [d1, d2, d3, a];
            let res = self.residuals(x);
            let merit = (res.force.abs() / force_scale)
                .max(res.radial.abs() / length_scale)
                .max(res.axial.abs() / length_scale)
                .max(res.moment.abs() / moment_scale);
            (x, merit)
        };

        let mut centre = (guess[2].clamp(d3_lo, d3_hi), alpha0);
        let mut half = ((d3_hi - d3_lo) / 2.0, 0.6);
        let mut best = eval(centre.0, centre.1);
        for _ in 0..40 {
            let n = 10;
            for i in -n..=n {
                for j in -n..=n {
                    let d3 = (centre.0 + half.0 * i as f64 / n as f64).clamp(d3_lo, d3_hi);
                    let a = (centre.1 + half.1 * j as f64 / n as f64).clamp(a_lo, a_hi);
                    let cand = eval(d3, a);
                    if cand.1 < best.1 {
                        best = cand;
                    }
                }
            }
            centre = (best.0[2], best.0[3]);
            half = (half.0 * 0.5, half.1 * 0.5);
        }
        best.0
    }
}

/// Evaluates the four equilibrium residuals at an arbitrary state.
///
/// `sign` is the frozen friction sign; the state does not have to be a
/// root. Mainly useful for verifying solutions and for diagnostics.
pub fn sector_residuals(
    state: [f64; 4],
    axial: f64,
    radial: f64,
    sign: i8,
    geometry: &BearingGeometry,
    stiffness: &ContactStiffness,
) -> Residuals {
    Params::new(axial, radial, sign, geometry, stiffness).residuals(state)
}

/// Scaled residual norm used by the convergence test, exposed so callers
/// can audit root quality with the solver's own metric.
pub fn scaled_residual_norm(
    state: [f64; 4],
    axial: f64,
    radial: f64,
    sign: i8,
    geometry: &BearingGeometry,
    stiffness: &ContactStiffness,
) -> f64 {
    let p = Params::new(axial, radial, sign, geometry, stiffness);
    let res = p.residuals(state);
    p.scaled_norm(state, &res)
}

/// Recovers the wire-ring force resultant from the contact normal forces.
///
/// Returns `(f_t, alpha_t, f_n)`: the resultant of the normal and friction
/// forces, its direction, and its component along the roller-wire contact
/// normal at angle `alpha`. When both force combinations vanish the
/// direction is undefined and `(0, alpha, 0)` is returned.
pub fn recover_contact(n1: f64, n2: f64, sign: i8, mu: f64, alpha: f64) -> (f64, f64, f64) {
    let m = f64::from(sign) * mu;
    let ax_combo = n1 - m * n2;
    let rad_combo = n2 + m * n1;
    if ax_combo == 0.0 && rad_combo == 0.0 {
        return (0.0, alpha, 0.0);
    }
    let f_t = ax_combo.hypot(rad_combo);
    let alpha_t = ax_combo.atan2(rad_combo);
    let f_n = f_t * (alpha_t - alpha).cos();
    (f_t, alpha_t, f_n)
}

/// Solves one sector for the imposed displacements `(axial, radial)`, both
/// signed, of the sector's own mirror frame (callers mirror the axial value
/// for type-B rollers).
///
/// The friction sign is frozen from the inputs before the iteration and
/// never revised. Newton runs with an analytic Jacobian and backtracking
/// damping; if it stalls, a grid search over (Δ3, α) restarts it. Converged
/// roots are rejected when Δ3 reaches a quarter of the contact diameter
/// (outside the model's validity) or when a contact interference is negative
/// beyond the clamping band (the sector has separated and the caller should
/// treat it as disengaged).
pub fn solve_sector(
    axial: f64,
    radial: f64,
    geometry: &BearingGeometry,
    stiffness: &ContactStiffness,
) -> Result<SectorSolution> {
    geometry.validate()?;
    stiffness.validate()?;
    if !axial.is_finite() || !radial.is_finite() {
        return Err(Error::InvalidLoadCase(
            "sector displacements must be finite".into(),
        ));
    }

    let sign = friction_sign(axial, radial, geometry.initial_contact_angle);
    let p = Params::new(axial, radial, sign, geometry, stiffness);

    let (mut x, mut norm, mut converged) = p.newton(p.initial_guess());
    if !converged {
        (x, norm, converged) = p.newton(p.grid_root());
    }
    if !converged {
        return Err(Error::NonConvergence {
            iterations: MAX_ITERATIONS,
            residual: norm,
        });
    }

    let [mut d1, mut d2, mut d3, alpha] = x;
    if d3 >= geometry.validity_bound() {
        return Err(Error::OutsideValidity {
            delta3: d3,
            bound: geometry.validity_bound(),
        });
    }
    for (value, contact) in [
        (&mut d1, "the axial wire-ring contact"),
        (&mut d2, "the radial wire-ring contact"),
        (&mut d3, "the roller-wire contact"),
    ] {
        if *value < -CLAMP_BAND {
            return Err(Error::NegativeInterference {
                contact,
                value: *value,
            });
        }
        if *value < 0.0 {
            *value = 0.0;
        }
    }

    let (n1, n2) = (stiffness.k1 * d1, stiffness.k2 * d2);
    let (f_t, alpha_t, f_n) = recover_contact(n1, n2, sign, geometry.friction_coefficient, alpha);
    Ok(SectorSolution {
        delta1: d1,
        delta2: d2,
        delta3: d3,
        alpha,
        n1,
        n2,
        f_t,
        alpha_t,
        f_n,
    })
}
