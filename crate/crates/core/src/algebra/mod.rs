//! The algebra `D_r(x)`: signed diagram multiplication, linear combinations,
//! the `J`-idempotents, the defining relations and span closure.

mod closure;
mod element;
mod idempotent;
mod product;
mod relations;
mod trace;

pub use closure::{span_closure, span_closure_with, standard_generators, SpanClosure, MAX_CLOSURE_RANK};
pub use element::{multiply_elements, AlgebraElement, ElementTerm};
pub use idempotent::{idempotent_ep, j_element, subsets_containing};
pub use product::{multiply_diagrams, DiagramProduct};
pub use relations::{
    check_relation, check_relations, relation_instances, relation_set, RelationFailure, RelationId,
    RelationInstance, RelationReport, RelationsReport,
};
pub use trace::{
    gamma_loop, gamma_path, trace_components, ComponentKind, GammaResult, GraphVertex, Level,
    StepKind, TraceComponent,
};
