use serde::Serialize;

use crate::algebra::{idempotent_ep, j_element, AlgebraElement};
use crate::arith::{ratio, ExactMatrix};
use crate::diagram::{generator_c, MarkedDiagram};
use crate::error::{Error, Result};
use crate::tensor::{rho_element, CheckOptions, TensorSpaceConfig};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubspaceSummary {
    pub name: String,
    pub dim: usize,
    /// Contained in the ambient module of the example.
    pub contained: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExampleReport {
    pub n: usize,
    pub ambient: SubspaceSummary,
    pub pieces: Vec<SubspaceSummary>,
    /// Rank of all piece bases stacked together.
    pub stacked_rank: usize,
    /// Largest dimension of a pairwise intersection of pieces.
    pub max_pairwise_intersection: usize,
    pub direct_sum: bool,
}

impl ExampleReport {
    pub fn dims(&self) -> Vec<usize> {
        self.pieces.iter().map(|p| p.dim).collect()
    }
}

struct Ctx {
    cfg: TensorSpaceConfig,
}

impl Ctx {
    fn new(n: usize, opts: &CheckOptions) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidArgument(format!(
                "the worked decompositions need n >= 3, got {n}"
            )));
        }
        let cfg = TensorSpaceConfig::new(n, 3)?;
        cfg.check_side(opts.max_side)?;
        Ok(Self { cfg })
    }

    fn rho(&self, a: &AlgebraElement) -> Result<ExactMatrix> {
        Ok(rho_element(a, &self.cfg)?.matrix)
    }
}

fn one() -> AlgebraElement {
    AlgebraElement::identity(3)
}

fn perm(p: [usize; 3]) -> Result<AlgebraElement> {
    Ok(MarkedDiagram::permutation(&p)?.into())
}

fn j(l: usize) -> Result<AlgebraElement> {
    j_element(l, 3)
}

fn c(p: usize, q: usize) -> Result<AlgebraElement> {
    Ok(generator_c(p, q, 3)?.into())
}

fn prod(fs: &[AlgebraElement]) -> AlgebraElement {
    fs.iter().skip(1).fold(fs[0].clone(), |acc, f| &acc * f)
}

/// Row basis of `{x in span(basis) : x M = 0 for every M}`.
fn kernel_within(basis: &ExactMatrix, conditions: &[ExactMatrix]) -> ExactMatrix {
    let images = conditions
        .iter()
        .map(|m| basis.mul(m))
        .reduce(|a, b| a.hconcat(&b))
        .expect("at least one condition");
    images.left_kernel_basis().mul(basis).row_space_basis()
}

fn summarize(
    n: usize,
    ambient: &ExactMatrix,
    ambient_name: &str,
    pieces: Vec<(&str, ExactMatrix)>,
) -> ExampleReport {
    let ambient_dim = ambient.rows();
    let summaries: Vec<SubspaceSummary> = pieces
        .iter()
        .map(|(name, b)| SubspaceSummary {
            name: name.to_string(),
            dim: b.rows(),
            contained: ambient.row_space_contains(b),
        })
        .collect();
    let mut max_pairwise_intersection = 0;
    for i in 0..pieces.len() {
        for k in i + 1..pieces.len() {
            let (a, b) = (&pieces[i].1, &pieces[k].1);
            let meet = a.rows() + b.rows() - a.vstack(b).rank();
            max_pairwise_intersection = max_pairwise_intersection.max(meet);
        }
    }
    let stacked = pieces
        .iter()
        .map(|(_, b)| b.clone())
        .reduce(|a, b| a.vstack(&b))
        .expect("pieces");
    let stacked_rank = stacked.rank();
    let total: usize = summaries.iter().map(|s| s.dim).sum();
    let direct_sum = summaries.iter().all(|s| s.contained)
        && stacked_rank == total
        && total == ambient_dim
        && max_pairwise_intersection == 0;
    ExampleReport {
        n,
        ambient: SubspaceSummary {
            name: ambient_name.to_string(),
            dim: ambient_dim,
            contained: true,
        },
        pieces: summaries,
        stacked_rank,
        max_pairwise_intersection,
        direct_sum,
    }
}

/// `W = {x : x(23) = -x = x J_2 J_3}` and its pieces `W1..W4`.
pub fn gray_hervella(n: usize, opts: &CheckOptions) -> Result<ExampleReport> {
    let ctx = Ctx::new(n, opts)?;
    let quarter = ratio(1, 4);
    let anti23 = &one() - &perm([1, 3, 2])?;
    let w_proj = (&anti23 * &(&one() - &(&j(2)? * &j(3)?))).scale(&quarter);
    let w = ctx.rho(&w_proj)?.row_space_basis();

    let w1 = kernel_within(&w, &[ctx.rho(&(&one() + &perm([2, 1, 3])?))?]);
    let cyc = &(&one() + &perm([2, 3, 1])?) + &perm([3, 1, 2])?;
    let w2 = kernel_within(&w, &[ctx.rho(&cyc)?]);
    let w3 = kernel_within(
        &w,
        &[ctx.rho(&(&j(1)? + &j(2)?))?, ctx.rho(&c(1, 2)?)?],
    );
    let diag = prod(&[
        c(1, 2)?,
        (&one() + &(&j(1)? * &j(3)?)).scale(&quarter),
        anti23,
    ]);
    let w4 = ctx.rho(&diag)?.row_space_basis();

    Ok(summarize(
        n,
        &w,
        "W",
        vec![("W1", w1), ("W2", w2), ("W3", w3), ("W4", w4)],
    ))
}

/// `K = {x : x(23) = -x = -x J_2 J_3}`, split through its model
/// `V ⊗ V ⊗ V*` into `S^2 V ⊗ V*` and `Λ^2 V ⊗ V*`, each as the kernel of the
/// contraction plus a copy of `V`.
pub fn abbena_garbiero(n: usize, opts: &CheckOptions) -> Result<ExampleReport> {
    let ctx = Ctx::new(n, opts)?;
    let half = ratio(1, 2);
    let anti23 = &one() - &perm([1, 3, 2])?;
    let k_proj = (&(&one() + &(&j(2)? * &j(3)?)) * &anti23).scale(&ratio(1, 4));
    let k = ctx.rho(&k_proj)?.row_space_basis();

    // x J_1 = x J_2 = -x J_3: the model V ⊗ V ⊗ V*
    let e12 = idempotent_ep(&[1, 2], 1, 3)?;
    let swap12 = perm([2, 1, 3])?;
    let sym = (&e12 * &(&one() + &swap12)).scale(&half);
    let alt = (&e12 * &(&one() - &swap12)).scale(&half);
    let c13 = ctx.rho(&c(1, 3)?)?;

    let sym_img = ctx.rho(&sym)?.row_space_basis();
    let alt_img = ctx.rho(&alt)?.row_space_basis();
    let sym0 = kernel_within(&sym_img, std::slice::from_ref(&c13));
    let alt0 = kernel_within(&alt_img, &[c13]);
    let sym_v = ctx.rho(&(&c(1, 3)? * &sym))?.row_space_basis();
    let alt_v = ctx.rho(&(&c(1, 3)? * &alt))?.row_space_basis();

    // into K by y -> y (1 - (23))
    let to_k = ctx.rho(&anti23)?;
    let pieces = [
        ("S2V*V* cap ker c", sym0),
        ("L2V*V* cap ker c", alt0),
        ("V in S2V*V*", sym_v),
        ("V in L2V*V*", alt_v),
    ]
    .into_iter()
    .map(|(name, b)| (name, b.mul(&to_k).row_space_basis()))
    .collect();

    Ok(summarize(n, &k, "K", pieces))
}
