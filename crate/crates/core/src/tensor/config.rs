use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default cap on the side `(2n)^r` of operator matrices.
pub const DEFAULT_MAX_SIDE: usize = 1024;

/// Commutant systems with operator side above this use two-prime modular rank.
pub const MODULAR_COMMUTANT_THRESHOLD: usize = 256;

/// `V` of complex dimension `n` viewed as a real space with orthonormal basis
/// `b_0..b_{2n-1}`, where `J b_k = b_{n+k}` and `J b_{n+k} = -b_k` for `k < n`;
/// and its `r`-th real tensor power with lexicographic tuple indexing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TensorSpaceConfig {
    pub n: usize,
    pub r: usize,
}

impl TensorSpaceConfig {
    pub fn new(n: usize, r: usize) -> Result<Self> {
        if n == 0 || r == 0 {
            return Err(Error::InvalidArgument(format!(
                "need n >= 1 and r >= 1, got n = {n}, r = {r}"
            )));
        }
        Ok(Self { n, r })
    }

    /// Real dimension of `V`.
    pub fn dim_v(&self) -> usize {
        2 * self.n
    }

    /// `(2n)^r`, saturating on overflow.
    pub fn side(&self) -> usize {
        (0..self.r).fold(1usize, |acc, _| acc.saturating_mul(self.dim_v()))
    }

    pub fn check_side(&self, max_side: usize) -> Result<usize> {
        let side = self.side();
        if side > max_side {
            Err(Error::BoundExceeded(format!(
                "matrix side (2n)^r = {side} exceeds {max_side} (n = {}, r = {})",
                self.n, self.r
            )))
        } else {
            Ok(side)
        }
    }

    /// Digits of a linear index, most significant slot first.
    pub fn decode(&self, mut index: usize, out: &mut [usize]) {
        let d = self.dim_v();
        for slot in (0..self.r).rev() {
            out[slot] = index % d;
            index /= d;
        }
    }

    pub fn encode(&self, digits: &[usize]) -> usize {
        digits.iter().fold(0, |acc, &i| acc * self.dim_v() + i)
    }

    /// `J^m b_k = sign * b_{k'}`.
    pub fn apply_j(&self, k: usize, m: bool) -> (usize, i64) {
        if !m {
            (k, 1)
        } else if k < self.n {
            (k + self.n, 1)
        } else {
            (k - self.n, -1)
        }
    }

    /// `<b_a | J^m b_c>`
    pub fn pairing(&self, a: usize, c: usize, m: bool) -> i64 {
        let (k, s) = self.apply_j(c, m);
        if k == a {
            s
        } else {
            0
        }
    }
}
