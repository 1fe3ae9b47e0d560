//! The pre-anti-flexible Yang-Baxter equation
//! `r_{23}·r_{12} = r_{12}≺r_{13} + r_{13}≻r_{23}`.

use antiflex_algebra::{CheckReport, Identity, PreAlgebra, run_identities, WitnessMode};
use antiflex_linear::{Error, Matrix, Result, Tensor3};

use crate::slots::{pairwise_tensor_product, ProductOp, Slots};

/// `r_{23}·r_{12} − r_{12}≺r_{13} − r_{13}≻r_{23}`.
pub fn pafybe_residual(palg: &PreAlgebra, r: &Matrix) -> Result<Tensor3> {
    if !r.is_square() || r.rows() != palg.dimension {
        return Err(Error::Shape(format!("r is {}x{}, algebra has dimension {}", r.rows(), r.cols(), palg.dimension)));
    }
    let s = |p: &str| Slots::parse(p);
    let dot = pairwise_tensor_product(&ProductOp::Dot.tensor(palg), r, s("23")?, r, s("12")?)?;
    let prec = pairwise_tensor_product(&palg.prec, r, s("12")?, r, s("13")?)?;
    let succ = pairwise_tensor_product(&palg.succ, r, s("13")?, r, s("23")?)?;
    Ok(&(&dot - &prec) - &succ)
}

/// Outcome of [`check_pafybe`]. Symmetry is reported, not required.
#[derive(Clone, Debug)]
pub struct PafybeReport {
    pub report: CheckReport,
    pub symmetric: bool,
    pub residual: Tensor3,
}

impl PafybeReport {
    /// A symmetric solution, the hypothesis of the coboundary construction.
    pub fn symmetric_solution(&self) -> bool {
        self.report.passed && self.symmetric
    }
}

pub fn check_pafybe(palg: &PreAlgebra, r: &Matrix) -> Result<PafybeReport> {
    let residual = pafybe_residual(palg, r)?;
    let entries = residual.entries().to_vec();
    let id = Identity::new("r_{23}·r_{12} = r_{12}≺r_{13} + r_{13}≻r_{23}", vec![], move |_| entries.clone());
    let report = run_identities("pre-anti-flexible Yang-Baxter equation", &[id], WitnessMode::First);
    Ok(PafybeReport { report, symmetric: r == &r.transpose(), residual })
}
