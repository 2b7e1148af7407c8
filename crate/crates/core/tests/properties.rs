use std::collections::HashSet;
use std::sync::OnceLock;

use proptest::prelude::*;

use marked_brauer::algebra::{relation_instances, relation_set, AlgebraElement, RelationId};
use marked_brauer::arith::{rat, ExactMatrix, Polynomial};
use marked_brauer::diagram::{enumerate_diagrams, MarkedDiagram};
use marked_brauer::tensor::{rho_element, TensorSpaceConfig};

fn diagrams(r: usize) -> &'static [MarkedDiagram] {
    static CACHE: OnceLock<Vec<Vec<MarkedDiagram>>> = OnceLock::new();
    &CACHE.get_or_init(|| (1..=4).map(|r| enumerate_diagrams(r).unwrap()).collect())[r - 1]
}

fn diagram(r: usize) -> impl Strategy<Value = MarkedDiagram> {
    (0..diagrams(r).len()).prop_map(move |i| diagrams(r)[i].clone())
}

fn small_poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(-3i64..=3, 0..3)
        .prop_map(|c| Polynomial::from_coeffs(c.into_iter().map(rat).collect()))
}

fn element(r: usize) -> impl Strategy<Value = AlgebraElement> {
    prop::collection::vec((small_poly(), diagram(r)), 0..4)
        .prop_map(move |terms| AlgebraElement::from_terms(r, terms).unwrap())
}

fn e(d: &MarkedDiagram) -> AlgebraElement {
    d.clone().into()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn associative_r2(x in diagram(2), y in diagram(2), z in diagram(2)) {
        prop_assert_eq!(&(&e(&x) * &e(&y)) * &e(&z), &e(&x) * &(&e(&y) * &e(&z)));
    }

    #[test]
    fn associative_r3(x in diagram(3), y in diagram(3), z in diagram(3)) {
        prop_assert_eq!(&(&e(&x) * &e(&y)) * &e(&z), &e(&x) * &(&e(&y) * &e(&z)));
    }

    #[test]
    fn associative_r4(x in diagram(4), y in diagram(4), z in diagram(4)) {
        prop_assert_eq!(&(&e(&x) * &e(&y)) * &e(&z), &e(&x) * &(&e(&y) * &e(&z)));
    }

    #[test]
    fn unit_and_distributive(a in element(3), b in element(3), c in element(3)) {
        let one = AlgebraElement::identity(3);
        prop_assert_eq!(&(&one * &a), &a);
        prop_assert_eq!(&(&a * &one), &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
    }

    #[test]
    fn format_parse_round_trip(d in diagram(3)) {
        prop_assert_eq!(MarkedDiagram::parse(&d.to_string(), 3).unwrap(), d);
    }

    #[test]
    fn rho_is_multiplicative_r2(n in 1usize..=2, a in element(2), b in element(2)) {
        let cfg = TensorSpaceConfig::new(n, 2).unwrap();
        let lhs = rho_element(&(&a * &b), &cfg).unwrap();
        let rhs = rho_element(&a, &cfg).unwrap().then(&rho_element(&b, &cfg).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn rank_agrees_mod_two_primes(rows in prop::collection::vec(prop::collection::vec(-4i64..=4, 6), 1..7)) {
        let dense: Vec<Vec<_>> = rows.iter().map(|r| r.iter().map(|&v| rat(v)).collect()).collect();
        let m = ExactMatrix::from_dense(dense);
        let q = m.rank();
        prop_assert_eq!(m.rank_mod(1_000_003).unwrap(), q);
        prop_assert_eq!(m.rank_mod(2_147_483_647).unwrap(), q);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn rho_is_multiplicative_r3(n in 1usize..=2, a in element(3), b in element(3)) {
        let cfg = TensorSpaceConfig::new(n, 3).unwrap();
        let lhs = rho_element(&(&a * &b), &cfg).unwrap();
        let rhs = rho_element(&a, &cfg).unwrap().then(&rho_element(&b, &cfg).unwrap());
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn enumeration_is_a_set_of_matchings() {
    for r in 1..=4 {
        let ds = diagrams(r);
        let set: HashSet<_> = ds.iter().collect();
        assert_eq!(set.len(), ds.len());
        for d in ds {
            let mut seen = vec![false; 2 * r + 1];
            for edge in d.edges() {
                assert!(edge.p < edge.q);
                assert!(!seen[edge.p] && !seen[edge.q]);
                seen[edge.p] = true;
                seen[edge.q] = true;
            }
            assert!(seen[1..].iter().all(|&s| s));
        }
    }
}

#[test]
fn relations_hold_under_rho() {
    let check = |n: usize, r: usize, ids: &[RelationId]| {
        let cfg = TensorSpaceConfig::new(n, r).unwrap();
        for &id in ids {
            for inst in relation_instances(id, r).unwrap() {
                let diff = &inst.lhs - &inst.rhs;
                assert!(
                    rho_element(&diff, &cfg).unwrap().is_zero(),
                    "n={n} r={r} {id} {}",
                    inst.label
                );
            }
        }
    };
    check(2, 2, &relation_set(2).unwrap());
    check(2, 3, &relation_set(3).unwrap());
    // sampled at r = 4
    check(
        2,
        4,
        &[RelationId::VI, RelationId::XI, RelationId::XII, RelationId::XIII, RelationId::XIV],
    );
}
