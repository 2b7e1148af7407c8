//! Marked diagrams: perfect matchings on `2r` vertices with a mark bit per edge.
//!
//! Vertices are numbered `1..=r` along the top row and `r+1..=2r` along the
//! bottom row, both left to right. A mark always sits on the larger-indexed
//! endpoint of its edge, which is the rightmost vertex of a horizontal edge
//! and the bottom vertex of a vertical one.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{DiagramParseError, Error, Result};

/// Largest `r` accepted by [`enumerate_diagrams`] unless a caller raises it.
pub const DEFAULT_ENUMERATION_BOUND: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub p: usize,
    pub q: usize,
    pub marked: bool,
}

impl Edge {
    /// Canonicalizes the endpoint order.
    pub fn new(a: usize, b: usize, marked: bool) -> Self {
        Self {
            p: a.min(b),
            q: a.max(b),
            marked,
        }
    }

    pub fn other(&self, v: usize) -> usize {
        if v == self.p {
            self.q
        } else {
            self.p
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeOrientation {
    TopHorizontal,
    BottomHorizontal,
    Vertical,
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MarkedDiagram {
    r: usize,
    edges: Vec<Edge>,
}

impl MarkedDiagram {
    /// Validates a perfect matching on `1..=2r` and stores it canonically.
    pub fn from_edges(r: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidArgument("r must be positive".into()));
        }
        let mut seen = vec![false; 2 * r + 1];
        let mut stored = Vec::with_capacity(r);
        for e in edges {
            let e = Edge::new(e.p, e.q, e.marked);
            for v in [e.p, e.q] {
                if v == 0 || v > 2 * r {
                    return Err(DiagramParseError::VertexOutOfRange {
                        vertex: v,
                        max: 2 * r,
                    }
                    .into());
                }
            }
            if e.p == e.q {
                return Err(DiagramParseError::SelfLoop(e.p).into());
            }
            for v in [e.p, e.q] {
                if std::mem::replace(&mut seen[v], true) {
                    return Err(DiagramParseError::DuplicateVertex(v).into());
                }
            }
            stored.push(e);
        }
        if stored.len() != r {
            return Err(DiagramParseError::IncompleteCover {
                covered: 2 * stored.len(),
                expected: 2 * r,
            }
            .into());
        }
        stored.sort();
        Ok(Self { r, edges: stored })
    }

    pub fn identity(r: usize) -> Self {
        Self {
            r,
            edges: (1..=r).map(|i| Edge::new(i, r + i, false)).collect(),
        }
    }

    /// The diagram of the permutation map `v_1 ⊗ … ⊗ v_r ↦ v_σ(1) ⊗ … ⊗ v_σ(r)`,
    /// i.e. output slot `j` is joined to input slot `σ(j)`. `perm` is 1-based.
    pub fn permutation(perm: &[usize]) -> Result<Self> {
        let r = perm.len();
        Self::from_edges(
            r,
            perm.iter()
                .enumerate()
                .map(|(j, &s)| Edge::new(s, r + j + 1, false)),
        )
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn orientation(&self, e: &Edge) -> EdgeOrientation {
        match (e.p <= self.r, e.q <= self.r) {
            (true, true) => EdgeOrientation::TopHorizontal,
            (false, false) => EdgeOrientation::BottomHorizontal,
            _ => EdgeOrientation::Vertical,
        }
    }

    /// The edge containing vertex `v`.
    pub fn edge_at(&self, v: usize) -> &Edge {
        self.edges
            .iter()
            .find(|e| e.p == v || e.q == v)
            .expect("every vertex is covered")
    }

    /// Partner table indexed by vertex (index 0 unused): `(partner, marked)`.
    pub fn partners(&self) -> Vec<(usize, bool)> {
        let mut t = vec![(0, false); 2 * self.r + 1];
        for e in &self.edges {
            t[e.p] = (e.q, e.marked);
            t[e.q] = (e.p, e.marked);
        }
        t
    }

    pub fn mark_count(&self) -> usize {
        self.edges.iter().filter(|e| e.marked).count()
    }

    pub fn parse(text: &str, r: usize) -> Result<Self> {
        let mut edges = Vec::new();
        for token in text.split_whitespace() {
            let malformed = || DiagramParseError::MalformedToken(token.to_string());
            let (body, marked) = match token.strip_suffix('*') {
                Some(b) => (b, true),
                None => (token, false),
            };
            let (a, b) = body.split_once('-').ok_or_else(malformed)?;
            let is_int = |s: &str| !s.is_empty() && s.bytes().all(|c| c.is_ascii_digit());
            if !is_int(a) || !is_int(b) {
                return Err(malformed().into());
            }
            let a: usize = a.parse().map_err(|_| malformed())?;
            let b: usize = b.parse().map_err(|_| malformed())?;
            edges.push(Edge::new(a, b, marked));
        }
        Self::from_edges(r, edges)
    }
}

impl fmt::Display for MarkedDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}-{}{}", e.p, e.q, if e.marked { "*" } else { "" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for MarkedDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// Infers `r` from the number of edges.
impl FromStr for MarkedDiagram {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let r = s.split_whitespace().count();
        Self::parse(s, r)
    }
}

impl Serialize for MarkedDiagram {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for MarkedDiagram {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

pub fn parse_diagram(text: &str, r: usize) -> Result<MarkedDiagram> {
    MarkedDiagram::parse(text, r)
}

pub fn format_diagram(d: &MarkedDiagram) -> String {
    d.to_string()
}

fn check_index(index: usize, min: usize, max: usize) -> Result<()> {
    if index < min || index > max {
        Err(Error::IndexOutOfRange { index, min, max })
    } else {
        Ok(())
    }
}

/// Crossing of strands `l` and `l+1`.
pub fn generator_sigma(l: usize, r: usize) -> Result<MarkedDiagram> {
    check_index(l, 1, r.saturating_sub(1))?;
    let mut perm: Vec<usize> = (1..=r).collect();
    perm.swap(l - 1, l);
    MarkedDiagram::permutation(&perm)
}

/// Identity matching with the bottom vertex of strand `l` marked.
pub fn generator_j(l: usize, r: usize) -> Result<MarkedDiagram> {
    check_index(l, 1, r)?;
    let edges = (1..=r).map(|i| Edge::new(i, r + i, i == l));
    MarkedDiagram::from_edges(r, edges)
}

/// Contraction: top edge `(p, q)`, bottom edge `(r+p, r+q)`, verticals elsewhere.
pub fn generator_c(p: usize, q: usize, r: usize) -> Result<MarkedDiagram> {
    if p >= q {
        return Err(Error::InvalidArgument(format!(
            "contraction needs p < q, got ({p}, {q})"
        )));
    }
    check_index(p, 1, r)?;
    check_index(q, 1, r)?;
    let mut edges = vec![Edge::new(p, q, false), Edge::new(r + p, r + q, false)];
    edges.extend(
        (1..=r)
            .filter(|&i| i != p && i != q)
            .map(|i| Edge::new(i, r + i, false)),
    );
    MarkedDiagram::from_edges(r, edges)
}

/// `2^r (2r-1)!!`
pub fn diagram_count(r: usize) -> u64 {
    let double_factorial: u64 = (1..2 * r as u64).step_by(2).product();
    (1u64 << r) * double_factorial
}

/// All permutations of `1..=k` (1-based, lexicographic order).
pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn go(k: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in 1..=k {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                go(k, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(k, &mut Vec::with_capacity(k), &mut vec![false; k + 1], &mut out);
    out
}

/// `+1` or `-1` by inversion count.
pub fn permutation_sign(perm: &[usize]) -> i64 {
    let inversions = (0..perm.len())
        .flat_map(|i| (i + 1..perm.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| perm[i] > perm[j])
        .count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

fn matchings(free: &mut Vec<usize>, current: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
    if free.is_empty() {
        out.push(current.clone());
        return;
    }
    let first = free.remove(0);
    for i in 0..free.len() {
        let partner = free.remove(i);
        current.push((first, partner));
        matchings(free, current, out);
        current.pop();
        free.insert(i, partner);
    }
    free.insert(0, first);
}

/// All marked diagrams with `r` strands, with the default bound on `r`.
pub fn enumerate_diagrams(r: usize) -> Result<Vec<MarkedDiagram>> {
    enumerate_diagrams_bounded(r, DEFAULT_ENUMERATION_BOUND)
}

/// Ordered by unmarked matching (lexicographic in the partner of the smallest
/// free vertex), then by mark mask over the canonical edge list.
pub fn enumerate_diagrams_bounded(r: usize, bound: usize) -> Result<Vec<MarkedDiagram>> {
    if r == 0 {
        return Err(Error::InvalidArgument("r must be positive".into()));
    }
    if r > bound {
        return Err(Error::BoundExceeded(format!(
            "enumeration of r = {r} exceeds bound {bound}"
        )));
    }
    let mut pairs = Vec::new();
    matchings(&mut (1..=2 * r).collect(), &mut Vec::new(), &mut pairs);
    let mut out = Vec::with_capacity(diagram_count(r) as usize);
    for m in pairs {
        for mask in 0u32..(1 << r) {
            let edges = m
                .iter()
                .enumerate()
                .map(|(k, &(p, q))| Edge::new(p, q, mask >> k & 1 == 1));
            out.push(MarkedDiagram::from_edges(r, edges).expect("valid matching"));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn parse_examples() {
        let d = parse_diagram("1-2 3-4*", 2).unwrap();
        assert_eq!(
            d.edges(),
            &[Edge::new(1, 2, false), Edge::new(3, 4, true)]
        );
        let x = parse_diagram("1-3* 4-6 5-7* 2-8* 9-10* 11-12* 13-14", 7).unwrap();
        assert_eq!(x.mark_count(), 5);
        assert_eq!(x.to_string(), "1-3* 2-8* 4-6 5-7* 9-10* 11-12* 13-14");
    }

    #[test]
    fn parse_errors_are_distinct() {
        use DiagramParseError::*;
        let e = |s: &str, r| match parse_diagram(s, r).unwrap_err() {
            Error::DiagramParse(p) => p,
            other => panic!("unexpected {other:?}"),
        };
        assert_eq!(e("1-1 2-2", 2), SelfLoop(1));
        assert_eq!(e("1-2 2-3", 2), DuplicateVertex(2));
        assert_eq!(e("1-5 2-3", 2), VertexOutOfRange { vertex: 5, max: 4 });
        assert_eq!(e("1-2", 2), IncompleteCover { covered: 2, expected: 4 });
        assert_eq!(e("1--2 3-4", 2), MalformedToken("1--2".into()));
        assert_eq!(e("1-2** 3-4", 2), MalformedToken("1-2**".into()));
        assert_eq!(e("a-2 3-4", 2), MalformedToken("a-2".into()));
        assert_eq!(e("0-2 3-4", 2), VertexOutOfRange { vertex: 0, max: 4 });
    }

    #[test]
    fn format_examples() {
        assert_eq!(format_diagram(&MarkedDiagram::identity(2)), "1-3 2-4");
        assert_eq!(format_diagram(&generator_j(1, 2).unwrap()), "1-3* 2-4");
    }

    #[test]
    fn generators() {
        assert_eq!(generator_sigma(1, 2).unwrap().to_string(), "1-4 2-3");
        assert_eq!(generator_sigma(2, 3).unwrap().to_string(), "1-4 2-6 3-5");
        assert!(generator_sigma(3, 3).is_err());
        assert!(generator_sigma(0, 3).is_err());
        assert_eq!(generator_j(2, 2).unwrap().to_string(), "1-3 2-4*");
        assert!(generator_j(0, 2).is_err());
        assert!(generator_j(3, 2).is_err());
        assert_eq!(generator_c(1, 2, 2).unwrap().to_string(), "1-2 3-4");
        assert_eq!(generator_c(1, 3, 3).unwrap().to_string(), "1-3 2-5 4-6");
        assert!(generator_c(2, 2, 3).is_err());
        assert!(generator_c(1, 4, 3).is_err());
    }

    #[test]
    fn enumeration_counts() {
        let one: Vec<String> = enumerate_diagrams(1)
            .unwrap()
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(one, ["1-2", "1-2*"]);
        assert_eq!(enumerate_diagrams(2).unwrap().len(), 12);
        assert_eq!(enumerate_diagrams(3).unwrap().len(), 120);
        assert_eq!(diagram_count(4), 1680);
        assert!(enumerate_diagrams(6).is_err());
        assert!(enumerate_diagrams_bounded(6, 5).is_err());
    }

    #[test]
    fn enumeration_is_distinct_and_valid() {
        for r in 1..=4 {
            let all = enumerate_diagrams(r).unwrap();
            assert_eq!(all.len() as u64, diagram_count(r));
            let set: HashSet<_> = all.iter().cloned().collect();
            assert_eq!(set.len(), all.len(), "duplicates at r = {r}");
            for d in &all {
                let mut cover: Vec<usize> = d.edges().iter().flat_map(|e| [e.p, e.q]).collect();
                cover.sort();
                assert_eq!(cover, (1..=2 * r).collect::<Vec<_>>());
                assert!(d.edges().windows(2).all(|w| w[0].p < w[1].p));
            }
        }
    }

    #[test]
    fn round_trip_all_small_diagrams() {
        for r in 1..=3 {
            for d in enumerate_diagrams(r).unwrap() {
                assert_eq!(parse_diagram(&format_diagram(&d), r).unwrap(), d);
            }
        }
    }
}
