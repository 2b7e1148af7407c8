use super::config::TensorSpaceConfig;
use super::rho::TensorOperator;
use crate::arith::{rat, ExactMatrix};

/// Realification of the complex matrix `X + iY` (given by its nonzero
/// entries) as a `2n x 2n` real matrix in the row-vector convention.
fn realify(n: usize, x: &[(usize, usize, i64)], y: &[(usize, usize, i64)]) -> ExactMatrix {
    // column form [[X, -Y], [Y, X]], then transposed
    let mut t = Vec::new();
    for &(a, c, v) in x {
        t.push((c, a, rat(v)));
        t.push((n + c, n + a, rat(v)));
    }
    for &(a, c, v) in y {
        t.push((n + c, a, rat(-v)));
        t.push((c, n + a, rat(v)));
    }
    ExactMatrix::from_triplets(2 * n, 2 * n, t)
}

/// A basis of the real Lie algebra `u(n)` acting on `V`: `iE_kk`,
/// `E_kl - E_lk` and `i(E_kl + E_lk)` for `k < l`.
pub fn unitary_lie_basis(n: usize) -> Vec<ExactMatrix> {
    let mut out = Vec::with_capacity(n * n);
    for k in 0..n {
        out.push(realify(n, &[], &[(k, k, 1)]));
    }
    for k in 0..n {
        for l in k + 1..n {
            out.push(realify(n, &[(k, l, 1), (l, k, -1)], &[]));
            out.push(realify(n, &[], &[(k, l, 1), (l, k, 1)]));
        }
    }
    out
}

/// Action of `a` on the tensor power as a derivation, summed over slots.
pub fn derivation(a: &ExactMatrix, cfg: &TensorSpaceConfig) -> TensorOperator {
    let side = cfg.side();
    let mut digits = vec![0; cfg.r];
    let mut rows = Vec::with_capacity(side);
    for row in 0..side {
        cfg.decode(row, &mut digits);
        let mut entries = Vec::new();
        for s in 0..cfg.r {
            let keep = digits[s];
            for (c, v) in a.row(keep) {
                digits[s] = *c;
                entries.push((cfg.encode(&digits), v.clone()));
            }
            digits[s] = keep;
        }
        rows.push(entries);
    }
    TensorOperator {
        config: *cfg,
        matrix: ExactMatrix::from_sparse_rows(side, rows),
    }
}

/// The `u(n)` basis acting on `⊗^r V`.
pub fn unitary_action(cfg: &TensorSpaceConfig) -> Vec<TensorOperator> {
    unitary_lie_basis(cfg.n)
        .iter()
        .map(|a| derivation(a, cfg))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rational;

    #[test]
    fn basis_is_skew_and_commutes_with_j() {
        for n in 1..=3 {
            let cfg = TensorSpaceConfig::new(n, 1).unwrap();
            let j = crate::tensor::rho_diagram(&crate::diagram::generator_j(1, 1).unwrap(), &cfg)
                .unwrap()
                .matrix;
            let basis = unitary_lie_basis(n);
            assert_eq!(basis.len(), n * n);
            for a in &basis {
                assert_eq!(a.transpose(), a.scale(&Rational::from_integer((-1).into())));
                assert_eq!(a.mul(&j), j.mul(a));
            }
        }
    }

    #[test]
    fn derivation_at_r1_is_the_matrix() {
        let cfg = TensorSpaceConfig::new(2, 1).unwrap();
        for a in unitary_lie_basis(2) {
            assert_eq!(derivation(&a, &cfg).matrix, a);
        }
    }
}
