use super::*;
use crate::algebra::multiply_diagrams;
use crate::arith::rat;
use crate::diagram::enumerate_diagrams;

#[test]
fn homomorphism_exhaustive_r2() {
    for n in 1..=2 {
        let cfg = TensorSpaceConfig::new(n, 2).unwrap();
        let ds = enumerate_diagrams(2).unwrap();
        let mats: Vec<_> = ds.iter().map(|d| rho_diagram(d, &cfg).unwrap()).collect();
        for (i, x) in ds.iter().enumerate() {
            for (j, y) in ds.iter().enumerate() {
                let p = multiply_diagrams(x, y).unwrap();
                let lhs = mats[i].then(&mats[j]);
                let rhs = match p.nonzero() {
                    Some(d) => rho_diagram(d, &cfg).unwrap().matrix.scale(&p.coeff().eval(&rat(2 * n as i64))),
                    None => crate::arith::ExactMatrix::zeros(cfg.side(), cfg.side()),
                };
                assert_eq!(lhs.matrix, rhs, "n={n} x={x} y={y}");
            }
        }
    }
}

fn product_matrix(x: &crate::diagram::MarkedDiagram, y: &crate::diagram::MarkedDiagram, cfg: &TensorSpaceConfig) -> crate::arith::ExactMatrix {
    let p = multiply_diagrams(x, y).unwrap();
    match p.nonzero() {
        Some(d) => rho_diagram(d, cfg)
            .unwrap()
            .matrix
            .scale(&p.coeff().eval(&rat(2 * cfg.n as i64))),
        None => crate::arith::ExactMatrix::zeros(cfg.side(), cfg.side()),
    }
}

#[test]
fn homomorphism_exhaustive_r3_n1() {
    let cfg = TensorSpaceConfig::new(1, 3).unwrap();
    let ds = enumerate_diagrams(3).unwrap();
    let mats: Vec<_> = ds.iter().map(|d| rho_diagram(d, &cfg).unwrap()).collect();
    for (i, x) in ds.iter().enumerate() {
        for (j, y) in ds.iter().enumerate() {
            assert_eq!(mats[i].then(&mats[j]).matrix, product_matrix(x, y, &cfg), "x={x} y={y}");
        }
    }
}

#[test]
fn worked_pair_at_n1() {
    use crate::diagram::MarkedDiagram;
    let cfg = TensorSpaceConfig::new(1, 7).unwrap();
    let x = MarkedDiagram::parse("1-3* 4-6 5-7* 2-8* 9-10* 11-12* 13-14", 7).unwrap();
    let y = MarkedDiagram::parse("1-2 4-7* 5-6 3-12 8-11 9-10* 13-14", 7).unwrap();
    let lhs = rho_diagram(&x, &cfg).unwrap().then(&rho_diagram(&y, &cfg).unwrap());
    assert_eq!(lhs.matrix, product_matrix(&x, &y, &cfg));
}

fn cfg(n: usize, r: usize) -> TensorSpaceConfig {
    TensorSpaceConfig::new(n, r).unwrap()
}

#[test]
fn kernel_frontier() {
    let o = CheckOptions::default();
    for (n, r, zero) in [(1, 1, true), (1, 2, false), (2, 2, true), (3, 2, true), (1, 3, false), (2, 3, false)] {
        let k = rho_kernel_dim(&cfg(n, r), &o).unwrap();
        assert_eq!(k.kernel_dim == 0, zero, "n={n} r={r} {k:?}");
        assert!(k.span_rank.agree);
    }
}

#[test]
fn z_vanishes_below_frontier() {
    let o = CheckOptions::default();
    for (n, r) in [(1, 2), (1, 3), (2, 3)] {
        assert!(z_element_check(&cfg(n, r), &o).unwrap().passed());
    }
    assert!(z_element_check(&cfg(2, 2), &o).is_err());
}

#[test]
fn commutant_small() {
    let o = CheckOptions::default();
    assert_eq!(commutant_dim(&cfg(1, 1), &o).unwrap().dim, 2);
    let c = commutant_dim(&cfg(2, 2), &o).unwrap();
    assert_eq!(c.dim, 12);
    assert!(c.system_rank.agree);
    for (n, r) in [(1, 1), (1, 2), (2, 2), (1, 3)] {
        let rep = centralizer_equals_diagram_span(&cfg(n, r), &o).unwrap();
        assert!(rep.equal && rep.ranks_certified, "{rep:?}");
    }
}

#[test]
fn invariant_forms() {
    let o = CheckOptions::default();
    for (n, r) in [(1, 1), (1, 3), (2, 1), (2, 3)] {
        let rep = invariant_space_dim(&cfg(n, r), &o).unwrap();
        assert_eq!(rep.dim, 0);
    }
    let rep = invariant_space_dim(&cfg(2, 2), &o).unwrap();
    assert_eq!((rep.dim, rep.forms_span), (2, Some(2)));
    let rep = invariant_space_dim(&cfg(2, 4), &o).unwrap();
    assert_eq!((rep.dim, rep.forms_span), (12, Some(12)));
    assert!(rep.consistent);
}

#[test]
fn form_evaluation() {
    use crate::arith::Rational;
    let c = cfg(1, 2);
    let b = |k: usize| -> Vec<Rational> { (0..2).map(|i| rat((i == k) as i64)).collect() };
    assert_eq!(invariant_form_eval(&[1, 2], &[false], &[b(0), b(0)], &c).unwrap(), rat(1));
    assert_eq!(invariant_form_eval(&[1, 2], &[true], &[b(0), b(1)], &c).unwrap(), rat(-1));
    assert_eq!(
        invariant_form_eval(&[1, 2, 3, 4], &[false, false], &[b(0), b(0), b(1), b(1)], &c).unwrap(),
        rat(1)
    );
    assert!(invariant_form_eval(&[1, 2, 3], &[false], &[b(0), b(0), b(1)], &c).is_err());
}

#[test]
fn idempotent_images() {
    let o = CheckOptions::default();
    let rep = ep_image_rank(&[1], &cfg(1, 1), &o).unwrap();
    assert_eq!(rep.rank, 2);
    for r in 2..=3 {
        let c = cfg(2, r);
        let mut total = 0;
        for s in crate::algebra::subsets_containing(1, r).unwrap() {
            let rep = ep_image_rank(&s, &c, &o).unwrap();
            assert_eq!(rep.rank, 2 * 2usize.pow(r as u32));
            assert!(rep.image_is_eigenspace(), "{rep:?}");
            total += rep.rank;
        }
        assert_eq!(total, c.side());
    }
}

#[test]
fn operator_json_round_trip() {
    let c = cfg(1, 2);
    let op = rho_diagram(&crate::diagram::generator_c(1, 2, 2).unwrap(), &c).unwrap();
    let json = op.to_json();
    assert_eq!(json.entries[0], (1, 1, "1".to_string()));
    assert_eq!(TensorOperator::from_json(&json).unwrap(), op);
}
