use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::arith::Rational;
use crate::error::{Error, Result};

/// Rows of a tableau, top to bottom.
pub type Tableau = Vec<Vec<usize>>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum RealityType {
    ComplexType,
    RealType,
}

/// Label `(tau, L)` of an irreducible summand of `V^{⊗q} ⊗ (V*)^{⊗rq}`.
/// Slots `1..=q` carry `V`, slots `q+1..=q+rq` carry `V*`; each pair in `L`
/// contracts one of each.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct IrrepLabel {
    pub q: usize,
    pub rq: usize,
    #[serde(rename = "L")]
    pub contractions: Vec<(usize, usize)>,
    pub tau_plus: Tableau,
    pub tau_minus: Tableau,
}

impl IrrepLabel {
    pub fn frame_plus(&self) -> Vec<usize> {
        self.tau_plus.iter().map(Vec::len).collect()
    }

    pub fn frame_minus(&self) -> Vec<usize> {
        self.tau_minus.iter().map(Vec::len).collect()
    }
}

fn fmt_tableau(t: &Tableau) -> String {
    if t.is_empty() {
        return "-".into();
    }
    t.iter()
        .map(|row| row.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join(" / ")
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l: Vec<String> = self
            .contractions
            .iter()
            .map(|(a, b)| format!("({a},{b})"))
            .collect();
        write!(
            f,
            "q={} L=[{}] tau+=[{}] tau-=[{}]",
            self.q,
            l.join(","),
            fmt_tableau(&self.tau_plus),
            fmt_tableau(&self.tau_minus)
        )
    }
}

/// Standard tableaux filled with the (sorted) entries of `set`.
pub fn standard_tableaux(set: &[usize]) -> Vec<Tableau> {
    fn go(rest: &[usize], t: &mut Tableau, out: &mut Vec<Tableau>) {
        let Some((&v, rest)) = rest.split_first() else {
            out.push(t.clone());
            return;
        };
        for i in 0..=t.len() {
            if i == t.len() {
                t.push(vec![v]);
                go(rest, t, out);
                t.pop();
            } else if i == 0 || t[i].len() < t[i - 1].len() {
                t[i].push(v);
                go(rest, t, out);
                t[i].pop();
            }
        }
    }
    let mut sorted = set.to_vec();
    sorted.sort_unstable();
    let mut out = Vec::new();
    go(&sorted, &mut Vec::new(), &mut out);
    out
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &v) in items.iter().enumerate() {
        for mut rest in combinations(&items[i + 1..], k - 1) {
            rest.insert(0, v);
            out.push(rest);
        }
    }
    out
}

fn arrangements(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &v) in items.iter().enumerate() {
        let mut others = items.to_vec();
        others.remove(i);
        for mut rest in arrangements(&others, k - 1) {
            rest.insert(0, v);
            out.push(rest);
        }
    }
    out
}

/// All labels for `q` copies of `V` and `rq` copies of `V*`, ordered by
/// number of contractions, then `L`, then the two tableaux.
pub fn enumerate_labels(q: usize, rq: usize, n: usize) -> Result<Vec<IrrepLabel>> {
    let r = q + rq;
    if n < r {
        return Err(Error::InvalidArgument(format!(
            "label enumeration needs n >= q + rq, got n = {n}, q + rq = {r}"
        )));
    }
    let plus: Vec<usize> = (1..=q).collect();
    let minus: Vec<usize> = (q + 1..=r).collect();
    let mut out = Vec::new();
    for s in 0..=q.min(rq) {
        for ms in combinations(&plus, s) {
            for primes in arrangements(&minus, s) {
                let contractions: Vec<(usize, usize)> =
                    ms.iter().copied().zip(primes.iter().copied()).collect();
                let free_plus: Vec<usize> = plus.iter().copied().filter(|v| !ms.contains(v)).collect();
                let free_minus: Vec<usize> =
                    minus.iter().copied().filter(|v| !primes.contains(v)).collect();
                for tp in standard_tableaux(&free_plus) {
                    for tm in standard_tableaux(&free_minus) {
                        if tp.len() + tm.len() > n {
                            continue;
                        }
                        out.push(IrrepLabel {
                            q,
                            rq,
                            contractions: contractions.clone(),
                            tau_plus: tp.clone(),
                            tau_minus: tm,
                        });
                    }
                }
            }
        }
    }
    Ok(out)
}

/// `gl_n` highest weight: rows of `tau+`, zeros, then the negated rows of
/// `tau-` in reverse.
pub fn highest_weight(label: &IrrepLabel, n: usize) -> Result<Vec<i64>> {
    let (t, t2) = (label.tau_plus.len(), label.tau_minus.len());
    if t + t2 > n {
        return Err(Error::InvalidArgument(format!(
            "tableaux use {} rows, more than n = {n}",
            t + t2
        )));
    }
    let mut lambda = vec![0i64; n];
    for (i, row) in label.tau_plus.iter().enumerate() {
        lambda[i] = row.len() as i64;
    }
    for (i, row) in label.tau_minus.iter().enumerate() {
        lambda[n - 1 - i] = -(row.len() as i64);
    }
    Ok(lambda)
}

/// Weyl dimension formula for `gl_n`.
pub fn weyl_dim(lambda: &[i64]) -> Result<u64> {
    if lambda.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvalidArgument(format!(
            "highest weight {lambda:?} is not weakly decreasing"
        )));
    }
    let mut d = Rational::from_integer(BigInt::from(1));
    for i in 0..lambda.len() {
        for j in i + 1..lambda.len() {
            let num = lambda[i] - lambda[j] + (j - i) as i64;
            d *= Rational::new(BigInt::from(num), BigInt::from((j - i) as i64));
        }
    }
    debug_assert!(d.is_integer());
    d.to_integer()
        .to_u64()
        .ok_or_else(|| Error::BoundExceeded(format!("dimension of {lambda:?} overflows u64")))
}

/// Real type exactly when there are as many `V` as `V*` slots and the two
/// frames agree; everything else stays irreducible over the reals.
pub fn reality_type(label: &IrrepLabel) -> RealityType {
    if label.q == label.rq && label.frame_plus() == label.frame_minus() {
        RealityType::RealType
    } else {
        RealityType::ComplexType
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tableaux_counts() {
        // number of standard tableaux of size k is the involution count
        let counts: Vec<usize> = (0..=5)
            .map(|k| standard_tableaux(&(1..=k).collect::<Vec<_>>()).len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 10, 26]);
        for t in standard_tableaux(&[2, 5, 7, 9]) {
            for (i, row) in t.iter().enumerate() {
                assert!(row.windows(2).all(|w| w[0] < w[1]));
                if i > 0 {
                    assert!(row.len() <= t[i - 1].len());
                    assert!(row.iter().zip(&t[i - 1]).all(|(a, b)| b < a));
                }
            }
        }
    }

    #[test]
    fn worked_label_is_enumerated() {
        let labels = enumerate_labels(3, 4, 7).unwrap();
        let target = IrrepLabel {
            q: 3,
            rq: 4,
            contractions: vec![(1, 6), (2, 4)],
            tau_plus: vec![vec![3]],
            tau_minus: vec![vec![5], vec![7]],
        };
        assert!(labels.contains(&target));
        assert_eq!(highest_weight(&target, 3).unwrap(), vec![1, -1, -1]);
    }

    #[test]
    fn small_enumerations() {
        let l = enumerate_labels(1, 0, 1).unwrap();
        assert_eq!(l.len(), 1);
        assert_eq!(l[0].tau_plus, vec![vec![1]]);
        let l = enumerate_labels(1, 1, 2).unwrap();
        assert_eq!(l.len(), 2);
        assert!(l[0].contractions.is_empty());
        assert_eq!(l[1].contractions, vec![(1, 2)]);
        assert!(l.iter().all(|x| reality_type(x) == RealityType::RealType));
        assert!(enumerate_labels(2, 1, 2).is_err());
        for x in enumerate_labels(2, 1, 3).unwrap() {
            assert_eq!(reality_type(&x), RealityType::ComplexType);
        }
    }

    #[test]
    fn weights_and_dims() {
        let empty = IrrepLabel {
            q: 0,
            rq: 0,
            contractions: vec![],
            tau_plus: vec![],
            tau_minus: vec![],
        };
        assert_eq!(highest_weight(&empty, 3).unwrap(), vec![0, 0, 0]);
        let l = IrrepLabel {
            tau_plus: vec![vec![1, 2], vec![3]],
            q: 3,
            ..empty
        };
        assert_eq!(highest_weight(&l, 3).unwrap(), vec![2, 1, 0]);
        assert!(highest_weight(&l, 1).is_err());
        assert_eq!(weyl_dim(&[1, 0, 0]).unwrap(), 3);
        assert_eq!(weyl_dim(&[1, 1, 0]).unwrap(), 3);
        assert_eq!(weyl_dim(&[1, 0, -1]).unwrap(), 8);
        assert!(weyl_dim(&[0, 1]).is_err());
    }

    #[test]
    fn weyl_sums_are_tensor_dims() {
        for r in 1..=4usize {
            for q in 0..=r {
                for n in r..=5 {
                    let total: u64 = enumerate_labels(q, r - q, n)
                        .unwrap()
                        .iter()
                        .map(|l| weyl_dim(&highest_weight(l, n).unwrap()).unwrap())
                        .sum();
                    assert_eq!(total, (n as u64).pow(r as u32), "q={q} r={r} n={n}");
                }
            }
        }
    }

    #[test]
    fn real_type_weights_are_self_dual() {
        for (q, rq) in [(1, 1), (2, 2), (1, 3)] {
            for n in 4..=5 {
                for l in enumerate_labels(q, rq, n).unwrap() {
                    if reality_type(&l) == RealityType::RealType {
                        let lam = highest_weight(&l, n).unwrap();
                        assert!((0..n).all(|i| lam[i] + lam[n - 1 - i] == 0), "{l}");
                    }
                }
            }
        }
    }
}
