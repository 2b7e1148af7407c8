//! Labels of the irreducible summands of `⊗^r V` under `U(n)`, their weights
//! and dimensions, and two worked decompositions of submodules of `⊗^3 V`.

mod examples;
mod labels;

pub use examples::{abbena_garbiero, gray_hervella, ExampleReport, SubspaceSummary};
pub use labels::{
    enumerate_labels, highest_weight, reality_type, standard_tableaux, weyl_dim, IrrepLabel,
    RealityType, Tableau,
};

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SummandRecord {
    pub q: usize,
    #[serde(rename = "L")]
    pub contractions: Vec<(usize, usize)>,
    pub tau_plus_rows: Tableau,
    pub tau_minus_rows: Tableau,
    pub lambda: Vec<i64>,
    pub dim_c: u64,
    pub reality: RealityType,
    pub dim_r: u64,
    pub multiplicity: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DecompositionReport {
    pub n: usize,
    pub r: usize,
    pub summands: Vec<SummandRecord>,
    pub total_real_dim: u64,
    pub expected_real_dim: u64,
}

impl DecompositionReport {
    pub fn consistent(&self) -> bool {
        self.total_real_dim == self.expected_real_dim
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Splits `⊗^r V` along the `J` idempotents: `q` slots where `J` acts as `i`
/// (including slot 1) and `r - q` where it acts as `-i`, with `C(r-1, q-1)`
/// such slot sets; then each piece into `gl_n` irreducibles.
pub fn decompose_tensor(n: usize, r: usize) -> Result<DecompositionReport> {
    if r == 0 || n < r {
        return Err(Error::InvalidArgument(format!(
            "decomposition needs 1 <= r <= n, got n = {n}, r = {r}"
        )));
    }
    let mut summands = Vec::new();
    let mut total = 0u64;
    for q in 1..=r {
        let multiplicity = binomial(r as u64 - 1, q as u64 - 1);
        for label in enumerate_labels(q, r - q, n)? {
            let lambda = highest_weight(&label, n)?;
            let dim_c = weyl_dim(&lambda)?;
            let dim_r = 2 * dim_c;
            total += multiplicity * dim_r;
            summands.push(SummandRecord {
                q,
                reality: reality_type(&label),
                contractions: label.contractions,
                tau_plus_rows: label.tau_plus,
                tau_minus_rows: label.tau_minus,
                lambda,
                dim_c,
                dim_r,
                multiplicity,
            });
        }
    }
    Ok(DecompositionReport {
        n,
        r,
        summands,
        total_real_dim: total,
        expected_real_dim: (2 * n as u64).pow(r as u32),
    })
}
