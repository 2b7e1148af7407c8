use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;

use super::product::multiply_diagrams;
use crate::diagram::{diagram_count, generator_c, generator_j, generator_sigma, MarkedDiagram};
use crate::error::{Error, Result};

/// Largest `r` accepted by [`span_closure`].
pub const MAX_CLOSURE_RANK: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpanClosure {
    pub r: usize,
    pub reached: usize,
    pub expected: u64,
    pub complete: bool,
}

/// The generators `1, sigma_1..sigma_{r-1}, J_1, c_12` (only `1, J_1` at r = 1).
pub fn standard_generators(r: usize) -> Result<Vec<MarkedDiagram>> {
    let mut gens = vec![MarkedDiagram::identity(r)];
    for l in 1..r {
        gens.push(generator_sigma(l, r)?);
    }
    gens.push(generator_j(1, r)?);
    if r >= 2 {
        gens.push(generator_c(1, 2, r)?);
    }
    Ok(gens)
}

/// Every diagram reachable as a nonzero product of generators, found by
/// breadth-first right multiplication. Scalars are discarded.
pub fn span_closure_with(generators: &[MarkedDiagram]) -> Result<BTreeSet<MarkedDiagram>> {
    let Some(first) = generators.first() else {
        return Err(Error::InvalidArgument("no generators given".into()));
    };
    let r = first.r();
    if let Some(g) = generators.iter().find(|g| g.r() != r) {
        return Err(Error::MismatchedRank { left: r, right: g.r() });
    }
    let mut seen: BTreeSet<MarkedDiagram> = generators.iter().cloned().collect();
    let mut queue: VecDeque<MarkedDiagram> = seen.iter().cloned().collect();
    while let Some(d) = queue.pop_front() {
        for g in generators {
            let prod = multiply_diagrams(&d, g)?;
            if let Some(next) = prod.nonzero() {
                if seen.insert(next.clone()) {
                    queue.push_back(next.clone());
                }
            }
        }
    }
    Ok(seen)
}

/// Checks that the standard generators reach every marked diagram.
pub fn span_closure(r: usize) -> Result<SpanClosure> {
    if r == 0 || r > MAX_CLOSURE_RANK {
        return Err(Error::BoundExceeded(format!(
            "span closure supports 1 <= r <= {MAX_CLOSURE_RANK}, got {r}"
        )));
    }
    let reached = span_closure_with(&standard_generators(r)?)?.len();
    let expected = diagram_count(r);
    Ok(SpanClosure {
        r,
        reached,
        expected,
        complete: reached as u64 == expected,
    })
}
