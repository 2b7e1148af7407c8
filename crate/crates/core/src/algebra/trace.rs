//! Tracing the concatenation graph `G(X, Y)`: `Y` drawn below `X`, with the
//! bottom row of `X` joined to the top row of `Y` by connector edges.

use serde::Serialize;

use crate::diagram::MarkedDiagram;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Level {
    /// top row of `X` (outer)
    XTop,
    /// bottom row of `X` (middle)
    XBottom,
    /// top row of `Y` (middle)
    YTop,
    /// bottom row of `Y` (outer)
    YBottom,
}

/// A vertex of `G(X, Y)`; `pos` is the 1-based column.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GraphVertex {
    pub level: Level,
    pub pos: usize,
}

impl GraphVertex {
    pub fn is_outer(&self) -> bool {
        matches!(self.level, Level::XTop | Level::YBottom)
    }

    /// Global index: the four rows numbered consecutively, top to bottom.
    pub fn index(&self, r: usize) -> usize {
        let row = match self.level {
            Level::XTop => 0,
            Level::XBottom => 1,
            Level::YTop => 2,
            Level::YBottom => 3,
        };
        row * r + self.pos
    }

    /// Vertex number inside the diagram this vertex belongs to.
    fn diagram_vertex(&self, r: usize) -> usize {
        match self.level {
            Level::XTop | Level::YTop => self.pos,
            Level::XBottom | Level::YBottom => r + self.pos,
        }
    }

    fn in_x(&self) -> bool {
        matches!(self.level, Level::XTop | Level::XBottom)
    }

    fn from_diagram_vertex(in_x: bool, v: usize, r: usize) -> Self {
        let (level, pos) = match (in_x, v <= r) {
            (true, true) => (Level::XTop, v),
            (true, false) => (Level::XBottom, v - r),
            (false, true) => (Level::YTop, v),
            (false, false) => (Level::YBottom, v - r),
        };
        Self { level, pos }
    }

    fn connector(&self) -> Option<Self> {
        match self.level {
            Level::XBottom => Some(Self {
                level: Level::YTop,
                pos: self.pos,
            }),
            Level::YTop => Some(Self {
                level: Level::XBottom,
                pos: self.pos,
            }),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum StepKind {
    /// matching edge joining two vertices of one row of its diagram
    Horizontal,
    /// matching edge joining the two rows of its diagram
    Vertical,
    /// glue between `X`'s bottom row and `Y`'s top row
    Connector,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ComponentKind {
    Path,
    Loop,
}

/// A maximal path or loop of `G(X, Y)`.
///
/// `steps[i]` joins `vertices[i]` to `vertices[i + 1]`; for a loop the last
/// step closes back to `vertices[0]`. Paths are oriented so that the last
/// vertex is the endpoint that marks are moved to; loops start at their
/// smallest-indexed vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceComponent {
    pub kind: ComponentKind,
    pub r: usize,
    pub vertices: Vec<GraphVertex>,
    pub steps: Vec<StepKind>,
    /// Indices into `vertices` carrying a mark.
    pub marks: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GammaResult {
    pub sign: i8,
    /// Odd number of marks on a path: the resulting edge stays marked.
    pub residual_mark: bool,
}

struct Graph<'a> {
    r: usize,
    x: &'a MarkedDiagram,
    y: &'a MarkedDiagram,
}

impl Graph<'_> {
    /// The matching partner of `v`, the edge kind and, when the edge is
    /// marked, the vertex carrying the mark.
    fn matching(&self, v: GraphVertex) -> (GraphVertex, StepKind, Option<GraphVertex>) {
        let (d, in_x) = if v.in_x() { (self.x, true) } else { (self.y, false) };
        let dv = v.diagram_vertex(self.r);
        let e = d.edge_at(dv);
        let w_dv = e.other(dv);
        let w = GraphVertex::from_diagram_vertex(in_x, w_dv, self.r);
        let kind = if (dv <= self.r) == (w_dv <= self.r) {
            StepKind::Horizontal
        } else {
            StepKind::Vertical
        };
        let mark = e
            .marked
            .then(|| GraphVertex::from_diagram_vertex(in_x, e.q, self.r));
        (w, kind, mark)
    }
}

fn orient_path(mut c: TraceComponent) -> TraceComponent {
    let first = c.vertices[0];
    let last = *c.vertices.last().expect("nonempty path");
    let first_is_target = match (first.level, last.level) {
        (Level::YBottom, Level::XTop) => true,
        (Level::XTop, Level::YBottom) => false,
        _ => first.pos > last.pos,
    };
    if first_is_target {
        let n = c.vertices.len();
        c.vertices.reverse();
        c.steps.reverse();
        for m in c.marks.iter_mut() {
            *m = n - 1 - *m;
        }
        c.marks.sort_unstable();
    }
    c
}

/// Decomposes `G(X, Y)` into paths (outer endpoints) and loops (middle row only).
///
/// Paths come first, in order of their smallest outer vertex; then loops in
/// order of their smallest middle vertex.
pub fn trace_components(x: &MarkedDiagram, y: &MarkedDiagram) -> Result<Vec<TraceComponent>> {
    if x.r() != y.r() {
        return Err(Error::MismatchedRank {
            left: x.r(),
            right: y.r(),
        });
    }
    let r = x.r();
    let g = Graph { r, x, y };
    let mut visited = vec![false; 4 * r + 1];
    let mut out = Vec::new();

    let walk = |start: GraphVertex, visited: &mut Vec<bool>, closed: bool| {
        let mut vertices = vec![start];
        let mut steps = Vec::new();
        let mut marks = Vec::new();
        let mut cur = start;
        visited[start.index(r)] = true;
        loop {
            let cur_idx = vertices.len() - 1;
            let (w, kind, mark) = g.matching(cur);
            steps.push(kind);
            vertices.push(w);
            visited[w.index(r)] = true;
            if let Some(m) = mark {
                marks.push(if m == cur { cur_idx } else { cur_idx + 1 });
            }
            if w.is_outer() {
                break;
            }
            let c = w.connector().expect("middle vertex");
            steps.push(StepKind::Connector);
            if closed && c == start {
                break;
            }
            vertices.push(c);
            visited[c.index(r)] = true;
            cur = c;
        }
        marks.sort_unstable();
        (vertices, steps, marks)
    };

    let outer = (1..=r)
        .map(|pos| GraphVertex { level: Level::XTop, pos })
        .chain((1..=r).map(|pos| GraphVertex { level: Level::YBottom, pos }));
    for start in outer {
        if visited[start.index(r)] {
            continue;
        }
        let (vertices, steps, marks) = walk(start, &mut visited, false);
        out.push(orient_path(TraceComponent {
            kind: ComponentKind::Path,
            r,
            vertices,
            steps,
            marks,
        }));
    }

    for pos in 1..=r {
        let start = GraphVertex { level: Level::XBottom, pos };
        if visited[start.index(r)] {
            continue;
        }
        let (vertices, steps, marks) = walk(start, &mut visited, true);
        out.push(TraceComponent {
            kind: ComponentKind::Loop,
            r,
            vertices,
            steps,
            marks,
        });
    }
    Ok(out)
}

fn parity_sign(odd: bool) -> i8 {
    if odd {
        -1
    } else {
        1
    }
}

fn horizontal_count(steps: &[StepKind]) -> usize {
    steps.iter().filter(|s| **s == StepKind::Horizontal).count()
}

impl TraceComponent {
    pub fn mark_count(&self) -> usize {
        self.marks.len()
    }

    /// Index of the endpoint marks travel to: the bottom-row endpoint of a
    /// path that becomes a vertical edge, otherwise the rightmost endpoint.
    pub fn target_index(&self) -> usize {
        let n = self.vertices.len();
        let (a, b) = (self.vertices[0], self.vertices[n - 1]);
        let first = match (a.level, b.level) {
            (Level::YBottom, Level::XTop) => true,
            (Level::XTop, Level::YBottom) => false,
            _ => a.pos > b.pos,
        };
        if first {
            0
        } else {
            n - 1
        }
    }

    /// Horizontal matching edges crossed when moving every mark to the vertex
    /// at `fixed` along the loop in the given direction (`forward` follows
    /// increasing step indices).
    pub fn loop_moves_directed(&self, fixed: usize, forward: bool) -> usize {
        let n = self.vertices.len();
        self.marks
            .iter()
            .map(|&k| {
                let idx: Vec<usize> = if forward {
                    (0..(fixed + n - k) % n).map(|i| (k + i) % n).collect()
                } else {
                    (0..(k + n - fixed) % n).map(|i| (k + n - 1 - i) % n).collect()
                };
                idx.iter()
                    .filter(|&&s| self.steps[s] == StepKind::Horizontal)
                    .count()
            })
            .sum()
    }

    /// Loop sign computed with an explicit fixed vertex and direction.
    pub fn loop_sign_via(&self, fixed: usize, forward: bool) -> i8 {
        let s = self.marks.len();
        if s % 2 == 1 {
            return 0;
        }
        parity_sign((self.loop_moves_directed(fixed, forward) + s / 2) % 2 == 1)
    }

    /// Smallest-indexed vertex of a loop.
    fn loop_anchor(&self) -> usize {
        (0..self.vertices.len())
            .min_by_key(|&i| self.vertices[i].index(self.r))
            .expect("nonempty loop")
    }

    /// Horizontal moves for the default loop routing: each mark travels to
    /// the smallest-indexed vertex along its shorter arc; on a tie, along the
    /// arc whose first step lands on the smaller-indexed vertex.
    fn loop_moves_default(&self) -> usize {
        let n = self.vertices.len();
        let f = self.loop_anchor();
        self.marks
            .iter()
            .map(|&k| {
                let fwd_len = (f + n - k) % n;
                let bwd_len = (k + n - f) % n;
                let forward = match fwd_len.cmp(&bwd_len) {
                    std::cmp::Ordering::Less => true,
                    std::cmp::Ordering::Greater => false,
                    std::cmp::Ordering::Equal => {
                        let next = self.vertices[(k + 1) % n].index(self.r);
                        let prev = self.vertices[(k + n - 1) % n].index(self.r);
                        next < prev
                    }
                };
                let range: Vec<StepKind> = if forward {
                    (0..fwd_len).map(|i| self.steps[(k + i) % n]).collect()
                } else {
                    (0..bwd_len).map(|i| self.steps[(k + n - 1 - i) % n]).collect()
                };
                horizontal_count(&range)
            })
            .sum()
    }
}

/// Sign of a path: `(-1)^(horizontal moves) * (-1)^floor(s/2)`.
pub fn gamma_path(c: &TraceComponent) -> Result<GammaResult> {
    if c.kind != ComponentKind::Path {
        return Err(Error::ComponentKind { expected: "path" });
    }
    let t = c.target_index();
    let moves: usize = c
        .marks
        .iter()
        .map(|&k| {
            let between = if k <= t { &c.steps[k..t] } else { &c.steps[t..k] };
            horizontal_count(between)
        })
        .sum();
    let s = c.marks.len();
    Ok(GammaResult {
        sign: parity_sign((moves + s / 2) % 2 == 1),
        residual_mark: s % 2 == 1,
    })
}

/// Sign of a loop: zero for an odd number of marks, otherwise
/// `(-1)^(horizontal moves) * (-1)^(s/2)`.
pub fn gamma_loop(c: &TraceComponent) -> Result<GammaResult> {
    if c.kind != ComponentKind::Loop {
        return Err(Error::ComponentKind { expected: "loop" });
    }
    let s = c.marks.len();
    let sign = if s % 2 == 1 {
        0
    } else {
        parity_sign((c.loop_moves_default() + s / 2) % 2 == 1)
    };
    Ok(GammaResult {
        sign,
        residual_mark: false,
    })
}
