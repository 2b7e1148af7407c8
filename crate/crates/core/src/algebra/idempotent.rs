use super::element::AlgebraElement;
use crate::arith::{ratio, Rational};
use crate::diagram::generator_j;
use crate::error::{Error, Result};

/// `J_l` as an algebra element.
pub fn j_element(l: usize, r: usize) -> Result<AlgebraElement> {
    Ok(generator_j(l, r)?.into())
}

/// All subsets of `1..=r` containing `p`, each sorted, in lexicographic order
/// of their bitmask.
pub fn subsets_containing(p: usize, r: usize) -> Result<Vec<Vec<usize>>> {
    if p == 0 || p > r {
        return Err(Error::IndexOutOfRange {
            index: p,
            min: 1,
            max: r,
        });
    }
    let others: Vec<usize> = (1..=r).filter(|&q| q != p).collect();
    let mut out = Vec::with_capacity(1 << others.len());
    for mask in 0u64..(1u64 << others.len()) {
        let mut s: Vec<usize> = others
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &q)| q)
            .collect();
        s.push(p);
        s.sort_unstable();
        out.push(s);
    }
    Ok(out)
}

/// `e_P = 2^{1-r} prod_{q in P, q != p} (1 - J_p J_q) prod_{q not in P} (1 + J_p J_q)`.
pub fn idempotent_ep(subset: &[usize], p: usize, r: usize) -> Result<AlgebraElement> {
    if subset.is_empty() {
        return Err(Error::InvalidArgument("e_P needs a nonempty subset".into()));
    }
    if let Some(&q) = subset.iter().find(|&&q| q == 0 || q > r) {
        return Err(Error::IndexOutOfRange {
            index: q,
            min: 1,
            max: r,
        });
    }
    if !subset.contains(&p) {
        return Err(Error::InvalidArgument(format!(
            "{p} is not an element of {subset:?}"
        )));
    }
    let one = AlgebraElement::identity(r);
    let jp = j_element(p, r)?;
    let mut acc = one.clone();
    for q in (1..=r).filter(|&q| q != p) {
        let jpq = &jp * &j_element(q, r)?;
        let factor = if subset.contains(&q) {
            &one - &jpq
        } else {
            &one + &jpq
        };
        acc = &acc * &factor;
    }
    let scale: Rational = ratio(1, 1i64 << (r - 1));
    Ok(acc.scale(&scale))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert_eq!(idempotent_ep(&[1], 1, 1).unwrap(), AlgebraElement::identity(1));
        let e = idempotent_ep(&[1, 2], 1, 2).unwrap();
        assert_eq!(e.to_string(), "1/2*1-3 2-4 + -1/2*1-3* 2-4*");
        assert!(idempotent_ep(&[], 1, 2).is_err());
        assert!(idempotent_ep(&[2], 1, 2).is_err());
        assert!(idempotent_ep(&[3], 3, 2).is_err());
    }

    #[test]
    fn projector_properties_up_to_r4() {
        for r in 1..=4 {
            let one = AlgebraElement::identity(r);
            for p in 1..=r {
                let subsets = subsets_containing(p, r).unwrap();
                assert_eq!(subsets.len(), 1 << (r - 1));
                let es: Vec<_> = subsets
                    .iter()
                    .map(|s| idempotent_ep(s, p, r).unwrap())
                    .collect();
                for (s, e) in subsets.iter().zip(&es) {
                    assert_eq!(e.len(), 1 << (r - 1));
                    assert!(e.terms().all(|(d, _)| d.edges().iter().all(|x| x.q == x.p + r)));
                    for &p2 in s {
                        assert_eq!(&idempotent_ep(s, p2, r).unwrap(), e);
                    }
                    assert_eq!(&(e * e), e);
                }
                for i in 0..es.len() {
                    for j in 0..es.len() {
                        if i != j {
                            assert!((&es[i] * &es[j]).is_zero());
                        }
                    }
                }
                let sum = es.iter().fold(AlgebraElement::zero(r), |a, e| &a + e);
                assert_eq!(sum, one);
            }
        }
    }
}
