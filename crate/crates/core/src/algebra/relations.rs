use std::fmt;

use serde::Serialize;

use super::element::{AlgebraElement, ElementTerm};
use crate::arith::Polynomial;
use crate::diagram::{generator_c, generator_j, generator_sigma};
use crate::error::{Error, Result};

/// The defining relations of `D_r(x)`, numbered (i) to (xiv).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum RelationId {
    I,
    II,
    III,
    IV,
    V,
    VI,
    VII,
    VIII,
    IX,
    X,
    XI,
    XII,
    XIII,
    XIV,
}

impl RelationId {
    pub const ALL: [RelationId; 14] = [
        Self::I,
        Self::II,
        Self::III,
        Self::IV,
        Self::V,
        Self::VI,
        Self::VII,
        Self::VIII,
        Self::IX,
        Self::X,
        Self::XI,
        Self::XII,
        Self::XIII,
        Self::XIV,
    ];

    pub fn roman(self) -> &'static str {
        [
            "i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix", "x", "xi", "xii", "xiii", "xiv",
        ][self as usize]
    }

    pub fn statement(self) -> &'static str {
        match self {
            Self::I => "s_l^2 = 1",
            Self::II => "s_l s_m = s_m s_l, |l-m| >= 2",
            Self::III => "(s_l s_{l+1})^3 = 1",
            Self::IV => "J_1^2 = -1",
            Self::V => "J_1 s_l = s_l J_1, l >= 2",
            Self::VI => "(J_1 s_1)^4 = 1",
            Self::VII => "c_12^2 = x c_12",
            Self::VIII => "c_12 s_l = s_l c_12, l >= 3",
            Self::IX => "c_12 s_1 = c_12 = s_1 c_12",
            Self::X => "c_12 s_2 c_12 = c_12",
            Self::XI => "c_12 J_1 c_12 = 0",
            Self::XII => "(s_1 J_1 + J_1) c_12 = 0 = c_12 (J_1 + J_1 s_1)",
            Self::XIII => "s_2 s_1 J_1 s_1 s_2 c_12 = c_12 s_2 s_1 J_1 s_1 s_2",
            Self::XIV => "c_12 s_2 s_1 s_3 s_2 c_12 s_2 s_3 s_1 s_2 = s_2 s_1 s_3 s_2 c_12 s_2 s_3 s_1 s_2 c_12",
        }
    }
}

impl fmt::Display for RelationId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.roman())
    }
}

/// Relations checked at rank `r`: all fourteen for `r >= 4`, and the smaller
/// sets that suffice for `r = 2, 3`.
pub fn relation_set(r: usize) -> Result<Vec<RelationId>> {
    use RelationId::*;
    match r {
        0 | 1 => Err(Error::InvalidArgument(format!(
            "relations need r >= 2, got {r}"
        ))),
        2 => Ok(vec![I, IV, VI, VII, IX, XI, XII]),
        3 => Ok(vec![I, III, IV, VI, VII, IX, X, XI, XII, XIII]),
        _ => Ok(RelationId::ALL.to_vec()),
    }
}

/// One concrete equation `lhs = rhs`.
#[derive(Clone, Debug)]
pub struct RelationInstance {
    pub id: RelationId,
    pub label: String,
    pub lhs: AlgebraElement,
    pub rhs: AlgebraElement,
}

struct Gens {
    r: usize,
}

impl Gens {
    fn one(&self) -> AlgebraElement {
        AlgebraElement::identity(self.r)
    }
    fn zero(&self) -> AlgebraElement {
        AlgebraElement::zero(self.r)
    }
    fn s(&self, l: usize) -> AlgebraElement {
        generator_sigma(l, self.r).expect("index checked by caller").into()
    }
    fn j(&self) -> AlgebraElement {
        generator_j(1, self.r).expect("r >= 1").into()
    }
    fn c(&self) -> AlgebraElement {
        generator_c(1, 2, self.r).expect("r >= 2").into()
    }
}

fn prod(factors: &[AlgebraElement]) -> AlgebraElement {
    let mut it = factors.iter();
    let first = it.next().expect("nonempty product").clone();
    it.fold(first, |acc, f| &acc * f)
}

/// All instances of relation `id` at rank `r`. Relations whose indices do not
/// fit (e.g. (xiv) below r = 4) have no instances.
pub fn relation_instances(id: RelationId, r: usize) -> Result<Vec<RelationInstance>> {
    if r < 2 {
        return Err(Error::InvalidArgument(format!(
            "relations need r >= 2, got {r}"
        )));
    }
    use RelationId::*;
    let g = Gens { r };
    let mut out = Vec::new();
    let mut push = |label: String, lhs: AlgebraElement, rhs: AlgebraElement| {
        out.push(RelationInstance { id, label, lhs, rhs });
    };
    match id {
        I => {
            for l in 1..r {
                push(format!("l={l}"), g.s(l).pow(2), g.one());
            }
        }
        II => {
            for l in 1..r {
                for m in l + 2..r {
                    push(
                        format!("l={l} m={m}"),
                        &g.s(l) * &g.s(m),
                        &g.s(m) * &g.s(l),
                    );
                }
            }
        }
        III => {
            for l in 1..r.saturating_sub(1) {
                push(format!("l={l}"), (&g.s(l) * &g.s(l + 1)).pow(3), g.one());
            }
        }
        IV => push(String::new(), g.j().pow(2), -g.one()),
        V => {
            for l in 2..r {
                push(format!("l={l}"), &g.j() * &g.s(l), &g.s(l) * &g.j());
            }
        }
        VI => push(String::new(), (&g.j() * &g.s(1)).pow(4), g.one()),
        VII => push(
            String::new(),
            g.c().pow(2),
            g.c().scale_poly(&Polynomial::x()),
        ),
        VIII => {
            for l in 3..r {
                push(format!("l={l}"), &g.c() * &g.s(l), &g.s(l) * &g.c());
            }
        }
        IX => {
            push("right".into(), &g.c() * &g.s(1), g.c());
            push("left".into(), &g.s(1) * &g.c(), g.c());
        }
        X => {
            if r >= 3 {
                push(String::new(), prod(&[g.c(), g.s(2), g.c()]), g.c());
            }
        }
        XI => push(String::new(), prod(&[g.c(), g.j(), g.c()]), g.zero()),
        XII => {
            let sj = &g.s(1) * &g.j();
            let js = &g.j() * &g.s(1);
            push("left".into(), &(&sj + &g.j()) * &g.c(), g.zero());
            push("right".into(), &g.c() * &(&g.j() + &js), g.zero());
        }
        XIII => {
            if r >= 3 {
                let w = prod(&[g.s(2), g.s(1), g.j(), g.s(1), g.s(2)]);
                push(String::new(), &w * &g.c(), &g.c() * &w);
            }
        }
        XIV => {
            if r >= 4 {
                let a = prod(&[g.s(2), g.s(1), g.s(3), g.s(2)]);
                let b = prod(&[g.s(2), g.s(3), g.s(1), g.s(2)]);
                push(
                    String::new(),
                    prod(&[g.c(), a.clone(), g.c(), b.clone()]),
                    prod(&[a, g.c(), b, g.c()]),
                );
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationFailure {
    pub instance: String,
    /// `lhs - rhs`
    pub difference: Vec<ElementTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub id: RelationId,
    pub label: String,
    pub statement: &'static str,
    pub instances: usize,
    pub holds: bool,
    pub failures: Vec<RelationFailure>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationsReport {
    pub r: usize,
    pub relations: Vec<RelationReport>,
}

impl RelationsReport {
    pub fn all_hold(&self) -> bool {
        self.relations.iter().all(|r| r.holds)
    }
}

pub fn check_relation(id: RelationId, r: usize) -> Result<RelationReport> {
    let instances = relation_instances(id, r)?;
    let failures: Vec<RelationFailure> = instances
        .iter()
        .filter_map(|inst| {
            let diff = &inst.lhs - &inst.rhs;
            (!diff.is_zero()).then(|| RelationFailure {
                instance: inst.label.clone(),
                difference: diff.to_records(),
            })
        })
        .collect();
    Ok(RelationReport {
        id,
        label: id.to_string(),
        statement: id.statement(),
        instances: instances.len(),
        holds: failures.is_empty(),
        failures,
    })
}

/// Verifies the relation set for rank `r` by exact arithmetic in `D_r(x)`.
pub fn check_relations(r: usize) -> Result<RelationsReport> {
    let relations = relation_set(r)?
        .into_iter()
        .map(|id| check_relation(id, r))
        .collect::<Result<_>>()?;
    Ok(RelationsReport { r, relations })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sets_by_rank() {
        assert!(relation_set(1).is_err());
        assert_eq!(relation_set(2).unwrap().len(), 7);
        assert_eq!(relation_set(3).unwrap().len(), 10);
        assert_eq!(relation_set(4).unwrap().len(), 14);
    }

    #[test]
    fn all_hold() {
        for r in 2..=4 {
            let rep = check_relations(r).unwrap();
            for rel in &rep.relations {
                assert!(rel.holds, "r={r} {} {:?}", rel.label, rel.failures);
                assert!(rel.instances > 0, "r={r} {}", rel.label);
            }
        }
    }

    #[test]
    fn every_relation_holds_at_r5() {
        for id in RelationId::ALL {
            assert!(check_relation(id, 5).unwrap().holds, "{id}");
        }
    }

    #[test]
    fn broken_relation_is_reported() {
        // J_1^2 = +1 is false; the difference is -2
        let g = Gens { r: 2 };
        let diff = &g.j().pow(2) - &g.one();
        assert_eq!(diff.to_string(), "-2*1-3 2-4");
    }
}
