use serde::Serialize;

use super::trace::{gamma_loop, gamma_path, trace_components, ComponentKind, GraphVertex, Level};
use crate::arith::{rat, Polynomial};
use crate::diagram::{Edge, MarkedDiagram};
use crate::error::Result;

/// `XY = sign * x^loops * (X*Y)`; a zero sign means the product vanishes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiagramProduct {
    pub sign: i8,
    pub loops: usize,
    pub diagram: MarkedDiagram,
}

impl DiagramProduct {
    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    pub fn coeff(&self) -> Polynomial {
        if self.is_zero() {
            Polynomial::zero()
        } else {
            Polynomial::monomial(rat(self.sign.into()), self.loops)
        }
    }

    /// `None` for a vanishing product.
    pub fn nonzero(&self) -> Option<&MarkedDiagram> {
        (!self.is_zero()).then_some(&self.diagram)
    }
}

fn product_vertex(v: GraphVertex, r: usize) -> usize {
    match v.level {
        Level::XTop => v.pos,
        Level::YBottom => r + v.pos,
        _ => unreachable!("paths end on outer vertices"),
    }
}

/// Product of two basis diagrams in `D_r(x)`.
pub fn multiply_diagrams(x: &MarkedDiagram, y: &MarkedDiagram) -> Result<DiagramProduct> {
    let r = x.r();
    let mut sign: i8 = 1;
    let mut loops = 0;
    let mut edges = Vec::with_capacity(r);
    for c in trace_components(x, y)? {
        match c.kind {
            ComponentKind::Path => {
                let g = gamma_path(&c)?;
                sign *= g.sign;
                let a = product_vertex(c.vertices[0], r);
                let b = product_vertex(*c.vertices.last().expect("nonempty"), r);
                edges.push(Edge::new(a, b, g.residual_mark));
            }
            ComponentKind::Loop => {
                loops += 1;
                sign *= gamma_loop(&c)?.sign;
            }
        }
    }
    let diagram = MarkedDiagram::from_edges(r, edges).expect("paths pair up the outer vertices");
    Ok(DiagramProduct {
        sign,
        loops,
        diagram,
    })
}
