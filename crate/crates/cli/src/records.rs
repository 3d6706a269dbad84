//! Serializable output records and their CSV/table rendering.
//!
//! Floats in CSV are rendered with 17 significant digits so every value
//! round-trips exactly; JSON uses serde_json's shortest exact
//! representation, which round-trips as well.

use serde::{Deserialize, Serialize};

use diracgeo::dirac::{
    alpha_expectations, beta_expectation, bloch_vector, classical_correspondence,
    PlaneWaveSolution,
};
use diracgeo::kinematics::classify_quadrant;
use diracgeo::VerificationReport;

/// One fully expanded plane-wave solution.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolutionRecord {
    pub p: [f64; 3],
    pub m: f64,
    pub helicity: i32,
    pub energy_sign: i32,
    #[serde(rename = "E")]
    pub energy: f64,
    /// Direction-space factor state, two (re, im) pairs.
    pub eta: [[f64; 2]; 2],
    /// Speed-space factor state, two (re, im) pairs.
    pub zeta: [[f64; 2]; 2],
    pub bloch_r: [f64; 3],
    pub bloch_s: [f64; 3],
    pub alpha_expect: [f64; 3],
    pub beta_expect: f64,
    /// Kinematic-plane quadrant label, or "on-axis" for rest solutions.
    pub quadrant: String,
}

impl SolutionRecord {
    pub fn from_solution(sol: &PlaneWaveSolution) -> Self {
        let bloch_r = bloch_vector(&sol.zeta).expect("zeta is unit").0;
        let bloch_s = bloch_vector(&sol.eta).expect("eta is unit").0;
        let alpha = alpha_expectations(&sol.psi).expect("psi is unit");
        let beta = beta_expectation(&sol.psi).expect("psi is unit");
        let quadrant = classify_quadrant(&classical_correspondence(sol))
            .map(|q| q.label().to_string())
            .unwrap_or_else(|_| "on-axis".to_string());
        SolutionRecord {
            p: sol.p.0,
            m: sol.m,
            helicity: sol.helicity_sign.as_i32(),
            energy_sign: sol.energy_sign.as_i32(),
            energy: sol.energy,
            eta: state_pairs(&sol.eta),
            zeta: state_pairs(&sol.zeta),
            bloch_r: bloch_r.0,
            bloch_s: bloch_s.0,
            alpha_expect: alpha.0,
            beta_expect: beta,
            quadrant,
        }
    }

    pub const CSV_HEADER: &'static str = "p_x,p_y,p_z,m,helicity,energy_sign,E,\
eta0_re,eta0_im,eta1_re,eta1_im,zeta0_re,zeta0_im,zeta1_re,zeta1_im,\
bloch_r_1,bloch_r_2,bloch_r_3,bloch_s_1,bloch_s_2,bloch_s_3,\
alpha_expect_1,alpha_expect_2,alpha_expect_3,beta_expect,quadrant";

    pub fn csv_row(&self) -> String {
        let mut fields: Vec<String> = Vec::with_capacity(26);
        fields.extend(self.p.iter().map(|x| fmt17(*x)));
        fields.push(fmt17(self.m));
        fields.push(self.helicity.to_string());
        fields.push(self.energy_sign.to_string());
        fields.push(fmt17(self.energy));
        for pair in self.eta.iter().chain(self.zeta.iter()) {
            fields.push(fmt17(pair[0]));
            fields.push(fmt17(pair[1]));
        }
        fields.extend(self.bloch_r.iter().map(|x| fmt17(*x)));
        fields.extend(self.bloch_s.iter().map(|x| fmt17(*x)));
        fields.extend(self.alpha_expect.iter().map(|x| fmt17(*x)));
        fields.push(fmt17(self.beta_expect));
        fields.push(self.quadrant.clone());
        fields.join(",")
    }

    pub fn table_block(&self, title: &str) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "{title}: helicity {:+}, energy sign {:+}, quadrant {}\n",
            self.helicity, self.energy_sign, self.quadrant
        ));
        out.push_str(&format!("  E            = {:+.9e}\n", self.energy));
        out.push_str(&format!(
            "  eta          = [{}, {}]\n",
            fmt_complex(self.eta[0]),
            fmt_complex(self.eta[1])
        ));
        out.push_str(&format!(
            "  zeta         = [{}, {}]\n",
            fmt_complex(self.zeta[0]),
            fmt_complex(self.zeta[1])
        ));
        out.push_str(&format!("  bloch_r      = {}\n", fmt_vec3(self.bloch_r)));
        out.push_str(&format!("  bloch_s      = {}\n", fmt_vec3(self.bloch_s)));
        out.push_str(&format!(
            "  <alpha>      = {}\n",
            fmt_vec3(self.alpha_expect)
        ));
        out.push_str(&format!("  <beta>       = {:+.9e}\n", self.beta_expect));
        out
    }
}

fn state_pairs(state: &diracgeo::CVector2) -> [[f64; 2]; 2] {
    [[state[0].re, state[0].im], [state[1].re, state[1].im]]
}

/// 17 significant digits: enough for exact f64 round-trips.
pub fn fmt17(x: f64) -> String {
    format!("{x:.16e}")
}

fn fmt_complex(pair: [f64; 2]) -> String {
    format!("{:+.9e} {:+.9e}i", pair[0], pair[1])
}

fn fmt_vec3(v: [f64; 3]) -> String {
    format!("({:+.9e}, {:+.9e}, {:+.9e})", v[0], v[1], v[2])
}

/// Serializable mirror of a verification report.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportRecord {
    pub check_name: String,
    pub draws: usize,
    pub max_residual: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl ReportRecord {
    pub fn from_report(report: &VerificationReport) -> Self {
        ReportRecord {
            check_name: report.check_name.to_string(),
            draws: report.draws,
            max_residual: report.max_residual,
            tolerance: report.tolerance,
            passed: report.passed,
        }
    }

    pub const CSV_HEADER: &'static str = "check_name,draws,max_residual,tolerance,passed";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{}",
            self.check_name,
            self.draws,
            fmt17(self.max_residual),
            fmt17(self.tolerance),
            self.passed
        )
    }

    pub fn table_row(&self) -> String {
        format!(
            "{:<30} {:>6} {:>14.3e} {:>11.0e}   {}",
            self.check_name,
            self.draws,
            self.max_residual,
            self.tolerance,
            if self.passed { "pass" } else { "FAIL" }
        )
    }
}

/// One sampled row of kinematic-plane geometry.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BlochRow {
    pub p_mag: f64,
    /// Kinematic angle arcsin(p/√(p² + m²)).
    pub theta: f64,
    pub s_plus: [f64; 3],
    /// The four solutions, ordered (E+,h+), (E+,h-), (E-,h+), (E-,h-).
    pub solutions: [BlochRowSolution; 4],
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BlochRowSolution {
    pub helicity: i32,
    pub energy_sign: i32,
    pub bloch_r: [f64; 3],
    pub quadrant: String,
}

impl BlochRow {
    pub const CSV_HEADER: &'static str = "p_mag,theta,s_plus_1,s_plus_2,s_plus_3,\
ep_hp_bloch_r_1,ep_hp_bloch_r_2,ep_hp_bloch_r_3,ep_hp_quadrant,\
ep_hm_bloch_r_1,ep_hm_bloch_r_2,ep_hm_bloch_r_3,ep_hm_quadrant,\
em_hp_bloch_r_1,em_hp_bloch_r_2,em_hp_bloch_r_3,em_hp_quadrant,\
em_hm_bloch_r_1,em_hm_bloch_r_2,em_hm_bloch_r_3,em_hm_quadrant";

    pub fn csv_row(&self) -> String {
        let mut fields: Vec<String> = vec![fmt17(self.p_mag), fmt17(self.theta)];
        fields.extend(self.s_plus.iter().map(|x| fmt17(*x)));
        for sol in &self.solutions {
            fields.extend(sol.bloch_r.iter().map(|x| fmt17(*x)));
            fields.push(sol.quadrant.clone());
        }
        fields.join(",")
    }
}
