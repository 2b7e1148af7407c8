use serde::{Deserialize, Serialize};

use super::config::TensorSpaceConfig;
use crate::algebra::AlgebraElement;
use crate::arith::{format_rational, parse_rational, rat, ExactMatrix, Rational};
use crate::diagram::{EdgeOrientation, MarkedDiagram};
use crate::error::{Error, Result};

/// An endomorphism of the `r`-th real tensor power of `V`, acting on row
/// vectors from the right: `v ↦ v M`. Composition `ST` (first `S`, then `T`)
/// is the matrix product `S * T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorOperator {
    pub config: TensorSpaceConfig,
    pub matrix: ExactMatrix,
}

/// JSON form: 1-based sparse triplets with rational strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OperatorJson {
    pub n: usize,
    pub r: usize,
    pub entries: Vec<(usize, usize, String)>,
}

impl TensorOperator {
    pub fn new(config: TensorSpaceConfig, matrix: ExactMatrix) -> Result<Self> {
        let side = config.side();
        if matrix.rows() != side || matrix.cols() != side {
            return Err(Error::InvalidArgument(format!(
                "operator matrix is {}x{}, expected side {side}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        Ok(Self { config, matrix })
    }

    pub fn identity(config: TensorSpaceConfig) -> Self {
        Self {
            config,
            matrix: ExactMatrix::identity(config.side()),
        }
    }

    pub fn zero(config: TensorSpaceConfig) -> Self {
        let s = config.side();
        Self {
            config,
            matrix: ExactMatrix::zeros(s, s),
        }
    }

    /// First `self`, then `other`.
    pub fn then(&self, other: &Self) -> Self {
        Self {
            config: self.config,
            matrix: self.matrix.mul(&other.matrix),
        }
    }

    pub fn add_scaled(&self, c: &Rational, other: &Self) -> Self {
        Self {
            config: self.config,
            matrix: self.matrix.add_scaled(c, &other.matrix),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn to_json(&self) -> OperatorJson {
        OperatorJson {
            n: self.config.n,
            r: self.config.r,
            entries: self
                .matrix
                .triplets()
                .map(|(i, j, v)| (i + 1, j + 1, format_rational(v)))
                .collect(),
        }
    }

    pub fn from_json(json: &OperatorJson) -> Result<Self> {
        let config = TensorSpaceConfig::new(json.n, json.r)?;
        let side = config.side();
        let mut triplets = Vec::with_capacity(json.entries.len());
        for (i, j, v) in &json.entries {
            if *i == 0 || *j == 0 || *i > side || *j > side {
                return Err(Error::IndexOutOfRange {
                    index: (*i).max(*j),
                    min: 1,
                    max: side,
                });
            }
            triplets.push((i - 1, j - 1, parse_rational(v)?));
        }
        Self::new(config, ExactMatrix::from_triplets(side, side, triplets))
    }
}

/// Matrix of a marked diagram: top horizontal edges pair input slots through
/// `<v_p | J^m v_q>`, vertical edges carry `J^m v_p` to their output slot, and
/// bottom horizontal edges insert `Σ_k b_k ⊗ J^m b_k`.
pub fn rho_diagram(x: &MarkedDiagram, cfg: &TensorSpaceConfig) -> Result<TensorOperator> {
    if x.r() != cfg.r {
        return Err(Error::MismatchedRank {
            left: x.r(),
            right: cfg.r,
        });
    }
    let r = cfg.r;
    let dim = cfg.dim_v();
    let side = cfg.side();
    let mut tops = Vec::new();
    let mut verticals = Vec::new();
    let mut bottoms = Vec::new();
    for e in x.edges() {
        match x.orientation(e) {
            EdgeOrientation::TopHorizontal => tops.push(*e),
            EdgeOrientation::Vertical => verticals.push(*e),
            EdgeOrientation::BottomHorizontal => bottoms.push(*e),
        }
    }
    let mut input = vec![0; r];
    let mut output = vec![0; r];
    let mut rows = Vec::with_capacity(side);
    for row in 0..side {
        cfg.decode(row, &mut input);
        let mut scalar: i64 = tops
            .iter()
            .map(|e| cfg.pairing(input[e.p - 1], input[e.q - 1], e.marked))
            .product();
        let mut entries = Vec::new();
        if scalar != 0 {
            for e in &verticals {
                let (k, s) = cfg.apply_j(input[e.p - 1], e.marked);
                output[e.q - r - 1] = k;
                scalar *= s;
            }
            // odometer over the summation index of every bottom edge
            let mut ks = vec![0usize; bottoms.len()];
            loop {
                let mut s = scalar;
                for (e, &k) in bottoms.iter().zip(&ks) {
                    let (k2, sign) = cfg.apply_j(k, e.marked);
                    output[e.p - r - 1] = k;
                    output[e.q - r - 1] = k2;
                    s *= sign;
                }
                entries.push((cfg.encode(&output), rat(s)));
                let mut i = 0;
                while i < ks.len() {
                    ks[i] += 1;
                    if ks[i] < dim {
                        break;
                    }
                    ks[i] = 0;
                    i += 1;
                }
                if i == ks.len() {
                    break;
                }
            }
        }
        rows.push(entries);
    }
    TensorOperator::new(*cfg, ExactMatrix::from_sparse_rows(side, rows))
}

/// `Σ coeff(2n) * rho(diagram)`.
pub fn rho_element(a: &AlgebraElement, cfg: &TensorSpaceConfig) -> Result<TensorOperator> {
    if a.r() != cfg.r {
        return Err(Error::MismatchedRank {
            left: a.r(),
            right: cfg.r,
        });
    }
    let x = rat(2 * cfg.n as i64);
    let mut acc = TensorOperator::zero(*cfg);
    for (d, c) in a.terms() {
        acc = acc.add_scaled(&c.eval(&x), &rho_diagram(d, cfg)?);
    }
    Ok(acc)
}
