//! Centralized numerical tolerances and checking parameters.
//!
//! Every tolerance used anywhere in the crate lives in [`Tolerances`] so that
//! a single configuration record (or tolerance file) controls the numerics.

use serde::{Deserialize, Serialize};

/// All numerical tolerances, with the defaults used throughout the crate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, rename_all = "camelCase")]
pub struct Tolerances {
    /// Hermiticity check for density operators and observables.
    pub herm_tol: f64,
    /// Allowed negative eigenvalue magnitude for density operators.
    pub psd_tol: f64,
    /// Unit-trace check for density operators.
    pub trace_tol: f64,
    /// Deviation of sum_k E_k^dag E_k from the identity.
    pub cptp_tol: f64,
    /// Accumulated numerical drift above which re-projection of a density
    /// operator is refused and an error is raised instead.
    pub drift_tol: f64,
    /// Relative eigenvalue residual accepted from the eigensolver.
    pub eig_tol: f64,
    /// Eigenvalues closer than `cluster_tol_factor * norm(M)` form a cluster.
    pub cluster_tol_factor: f64,
    /// A cluster whose eigenvector block has condition number above this is
    /// flagged defective.
    pub defect_cond_tol: f64,
    /// Eigenvalues with modulus >= 1 - peripheral_tol count as peripheral.
    pub peripheral_tol: f64,
    /// Max distance between a peripheral eigenvalue and its rational-angle
    /// candidate e^{2 pi i p/q}.
    pub angle_tol: f64,
    /// Expansion coefficients below this do not count as contributing.
    pub coeff_tol: f64,
    /// Idempotency / commutation slack for the peripheral projector.
    pub projector_tol: f64,
    /// Invariance slack for the limit-cycle states.
    pub invariance_tol: f64,
    /// Slack on the unit spectral radius of a CPTP matrix representation.
    pub spectral_radius_tol: f64,
    /// Largest imaginary residue tolerated where a real number is expected.
    pub imag_tol: f64,
    /// Row-stochasticity check for classical transition matrices.
    pub stochastic_tol: f64,
    /// Maximum number of simultaneously ambiguous propositions when
    /// enumerating neighborhood letters.
    pub ambiguity_cap: usize,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            herm_tol: 1e-10,
            psd_tol: 1e-10,
            trace_tol: 1e-10,
            cptp_tol: 1e-8,
            drift_tol: 1e-7,
            eig_tol: 1e-8,
            cluster_tol_factor: 1e-8,
            defect_cond_tol: 1e8,
            peripheral_tol: 1e-9,
            angle_tol: 1e-9,
            coeff_tol: 1e-9,
            projector_tol: 1e-6,
            invariance_tol: 1e-6,
            spectral_radius_tol: 1e-6,
            imag_tol: 1e-9,
            stochastic_tol: 1e-10,
            ambiguity_cap: 16,
        }
    }
}

/// Parameters of a single model-checking run, including the refinement loop.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, rename_all = "camelCase")]
pub struct CheckConfig {
    /// Initial neighborhood radius for the refinement loop.
    pub epsilon0: f64,
    /// Maximum number of times epsilon is halved before giving up.
    pub max_halvings: usize,
    /// Cap on rational-angle denominators. `None` selects dim(H)^2 of the
    /// analyzed representation, the bound valid for irreducible channels.
    pub qmax: Option<u64>,
    /// Numerical tolerances.
    pub tolerances: Tolerances,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            epsilon0: 0.5,
            max_halvings: 10,
            qmax: None,
            tolerances: Tolerances::default(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_sane() {
        let cfg = CheckConfig::default();
        assert!(cfg.epsilon0 > 0.0);
        assert!(cfg.max_halvings >= 1);
        assert!(cfg.tolerances.cptp_tol > cfg.tolerances.herm_tol);
    }

    #[test]
    fn tolerance_file_overrides_one_field() {
        let t: Tolerances = serde_json::from_str(r#"{"cptpTol": 1e-6}"#).unwrap();
        assert_eq!(t.cptp_tol, 1e-6);
        assert_eq!(t.herm_tol, Tolerances::default().herm_tol);
    }
}
