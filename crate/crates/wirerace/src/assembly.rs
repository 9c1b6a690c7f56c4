//! Full-bearing assembly: ring displacements are distributed over the
//! sectors, each engaged sector is solved on its own, and the sector contact
//! forces are summed into the reactions carried by the displaced ring.
//!
//! Distribution of a load case (Δ_A, Δ_R at θ_R, φ_M about θ_M) onto the
//! sector at ring angle θ:
//!
//! * `Δ_A^i = Δ_A + φ_M·(D_pw/2)·sin(θ_M − θ)` (signed),
//! * `Δ_R^i = Δ_R·cos(θ_R − θ)` (signed).
//!
//! A sector engages only when the projection of its displacements onto the
//! unloaded contact normal is an interference:
//! `e = σ·(Δ_A^i/2)·sin α0 + (Δ_R^i/2)·cos α0 > 0`, with σ = +1 for type A
//! and σ = -1 for type B. Type-B rollers are the axial mirror image of type
//! A, so their sector problem is solved with the mirrored axial value
//! σ·Δ_A^i. Sectors whose converged state shows a separated contact are
//! demoted to disengaged; sectors are independent, so no global re-iteration
//! is needed.
//!
//! Reaction sums over engaged sectors (upper signs for A, lower for B), with
//! the contact force combinations `ax = N1 - s·μ·N2`, `rad = N2 + s·μ·N1`:
//!
//! * `F_y = Σ ±ax`, `F_x = Σ rad·cos θ`, `F_z = Σ rad·sin θ`;
//! * per-sector tilting arms about the bearing centre, with
//!   `ρ1 = D_pw/2 - (D_cw/2)·cos α` and `ρ2 = ρ1 - λ/2`:
//!   `t_z = N1·ρ1 + s·μ·N1·((D_cw/2)·sin α + λ/2) + N2·(D_cw/2)·sin α - s·μ·N2·ρ2`,
//!   `t_x` identical except the s·μ·N1 arm drops the λ/2 term;
//! * `M_z = Σ ±t_z·cos θ`, `M_x = Σ ∓t_x·sin θ`.

use crate::error::Result;
use crate::model::{
    build_sectors, BearingGeometry, ContactStiffness, GlobalReactions, LoadCase, RollerType,
    SectorKinematics, SectorSolution,
};
use crate::sector::{friction_sign, solve_sector};

/// One solved sector: where it sits, what it was asked to carry, and the
/// equilibrium state it reached (all-zero when disengaged).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolvedSector {
    pub kinematics: SectorKinematics,
    pub state: SectorSolution,
}

/// Result of a full-bearing solve.
#[derive(Debug, Clone, PartialEq)]
pub struct BearingSolution {
    pub case: LoadCase,
    /// All sectors in ascending index order.
    pub sectors: Vec<SolvedSector>,
    pub reactions: GlobalReactions,
}

impl BearingSolution {
    pub fn engaged_count(&self) -> usize {
        self.sectors.iter().filter(|s| s.kinematics.engaged).count()
    }

    /// Largest roller-wire contact normal force over the sectors, N.
    pub fn max_normal_force(&self) -> f64 {
        self.sectors.iter().fold(0.0, |m, s| m.max(s.state.f_n))
    }
}

/// Splits a ring load case into the (axial, radial) displacement pair seen
/// by the sector at ring angle `theta`. Both components are signed.
pub fn distribute_displacements(case: &LoadCase, theta: f64, pitch_diameter: f64) -> (f64, f64) {
    let axial = case.axial + case.tilt * (pitch_diameter / 2.0) * (case.theta_m - theta).sin();
    let radial = case.radial * (case.theta_r - theta).cos();
    (axial, radial)
}

/// Interference of the sector displacements projected onto the unloaded
/// contact normal; the sector engages only when this is strictly positive.
pub fn engagement_interference(
    case: &LoadCase,
    theta: f64,
    roller_type: RollerType,
    geometry: &BearingGeometry,
) -> f64 {
    let (axial, radial) = distribute_displacements(case, theta, geometry.pitch_diameter);
    let sigma = match roller_type {
        RollerType::A => 1.0,
        RollerType::B => -1.0,
    };
    let (sin_a0, cos_a0) = geometry.initial_contact_angle.sin_cos();
    sigma * (axial / 2.0) * sin_a0 + (radial / 2.0) * cos_a0
}

/// Solves the whole bearing for one imposed displacement case.
///
/// Sector failures that mean "this roller is not actually carrying load"
/// (a separated wire-ring contact) demote the sector to disengaged; real
/// failures (divergence, interference outside the model's validity) abort
/// the solve tagged with the sector index.
pub fn solve_bearing(
    case: &LoadCase,
    geometry: &BearingGeometry,
    stiffness: &ContactStiffness,
) -> Result<BearingSolution> {
    case.validate()?;
    stiffness.validate()?;
    let alpha0 = geometry.initial_contact_angle;
    let mu = geometry.friction_coefficient;
    let half_contact = geometry.contact_diameter / 2.0;
    let half_wire = geometry.wire_diameter / 2.0;
    let pitch_radius = geometry.pitch_diameter / 2.0;

    let mut sectors = Vec::with_capacity(geometry.roller_count);
    let mut reactions = GlobalReactions::default();

    for mut kin in build_sectors(geometry)? {
        let (axial, radial) = distribute_displacements(case, kin.theta, geometry.pitch_diameter);
        kin.axial = axial;
        kin.radial = radial;
        let sigma = match kin.roller_type {
            RollerType::A => 1.0,
            RollerType::B => -1.0,
        };
        let mirrored_axial = sigma * axial;
        kin.engaged = engagement_interference(case, kin.theta, kin.roller_type, geometry) > 0.0;

        let state = if kin.engaged {
            match solve_sector(mirrored_axial, radial, geometry, stiffness) {
                Ok(state) => {
                    kin.friction_sign = friction_sign(mirrored_axial, radial, alpha0);
                    state
                }
                Err(crate::Error::NegativeInterference { .. }) => {
                    // the engagement estimate was optimistic: the full
                    // solution separates a contact, so the roller floats
                    kin.engaged = false;
                    kin.friction_sign = 0;
                    SectorSolution::disengaged(alpha0)
                }
                Err(e) => return Err(e.in_sector(kin.index)),
            }
        } else {
            SectorSolution::disengaged(alpha0)
        };

        if kin.engaged {
            let m = f64::from(kin.friction_sign) * mu;
            let ax = state.n1 - m * state.n2;
            let rad = state.n2 + m * state.n1;
            let (sin_t, cos_t) = kin.theta.sin_cos();
            let (sin_a, cos_a) = state.alpha.sin_cos();
            let rho1 = pitch_radius - half_contact * cos_a;
            let rho2 = rho1 - half_wire;
            let t_z = state.n1 * rho1
                + m * state.n1 * (half_contact * sin_a + half_wire)
                + state.n2 * half_contact * sin_a
                - m * state.n2 * rho2;
            let t_x = state.n1 * rho1 + m * state.n1 * (half_contact * sin_a)
                + state.n2 * half_contact * sin_a
                - m * state.n2 * rho2;
            reactions.fy += sigma * ax;
            reactions.fx += rad * cos_t;
            reactions.fz += rad * sin_t;
            reactions.mz += sigma * t_z * cos_t;
            reactions.mx -= sigma * t_x * sin_t;
        }

        sectors.push(SolvedSector {
            kinematics: kin,
            state,
        });
    }

    Ok(BearingSolution {
        case: *case,
        sectors,
        reactions,
    })
}
