use std::collections::HashMap;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use super::config::{TensorSpaceConfig, MODULAR_COMMUTANT_THRESHOLD};
use super::lie::unitary_action;
use super::rho::{rho_diagram, rho_element, TensorOperator};
use crate::algebra::{idempotent_ep, j_element, multiply_diagrams, AlgebraElement};
use crate::arith::{rat, two_prime_rank, ExactMatrix, ModularRank, Rational};
use crate::diagram::{
    diagram_count, enumerate_diagrams, permutation_sign, permutations, MarkedDiagram,
};
use crate::error::{Error, Result};

/// Bounds and rank strategy shared by the checks below.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckOptions {
    pub max_side: usize,
    /// Use two-prime modular rank even where rational rank is cheap.
    pub force_modular: bool,
    pub seed: u64,
}

impl Default for CheckOptions {
    fn default() -> Self {
        Self {
            max_side: super::config::DEFAULT_MAX_SIDE,
            force_modular: false,
            seed: 0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RankMethod {
    Rational,
    TwoPrime,
}

/// A rank together with how it was obtained. When both methods ran, `agree`
/// also requires them to match.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankReport {
    pub rank: usize,
    pub method: RankMethod,
    pub rational: Option<usize>,
    pub modular: ModularRank,
    pub agree: bool,
}

pub fn certified_rank(m: &ExactMatrix, modular_only: bool, seed: u64) -> RankReport {
    let mut rng = StdRng::seed_from_u64(seed);
    let modular = two_prime_rank(m, &mut rng);
    if modular_only {
        RankReport {
            rank: modular.rank(),
            method: RankMethod::TwoPrime,
            rational: None,
            agree: modular.agree(),
            modular,
        }
    } else {
        let q = m.rank();
        RankReport {
            rank: q,
            method: RankMethod::Rational,
            rational: Some(q),
            agree: modular.agree() && modular.rank() == q,
            modular,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub x: MarkedDiagram,
    pub y: MarkedDiagram,
    /// Entries (1-based) where the two sides differ: `(row, col, lhs, rhs)`.
    pub differences: Vec<(usize, usize, String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomomorphismReport {
    pub n: usize,
    pub r: usize,
    pub pairs_checked: usize,
    pub exhaustive: bool,
    pub counterexample: Option<Counterexample>,
}

impl HomomorphismReport {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// `rho(X) rho(Y) = rho(XY)` at `x = 2n`. All pairs are checked when
/// `samples` covers them; otherwise `samples` pairs are drawn with `seed`.
pub fn verify_homomorphism(
    cfg: &TensorSpaceConfig,
    samples: usize,
    opts: &CheckOptions,
) -> Result<HomomorphismReport> {
    cfg.check_side(opts.max_side)?;
    let diagrams = enumerate_diagrams(cfg.r)?;
    let count = diagrams.len();
    let exhaustive = samples >= count * count;
    let pairs: Vec<(usize, usize)> = if exhaustive {
        (0..count)
            .flat_map(|i| (0..count).map(move |j| (i, j)))
            .collect()
    } else {
        let mut rng = StdRng::seed_from_u64(opts.seed);
        (0..samples)
            .map(|_| (rng.gen_range(0..count), rng.gen_range(0..count)))
            .collect()
    };
    let mut cache: HashMap<MarkedDiagram, TensorOperator> = HashMap::new();
    let mut image = |d: &MarkedDiagram| -> Result<TensorOperator> {
        if let Some(m) = cache.get(d) {
            return Ok(m.clone());
        }
        let m = rho_diagram(d, cfg)?;
        cache.insert(d.clone(), m.clone());
        Ok(m)
    };
    let two_n = rat(2 * cfg.n as i64);
    for &(i, j) in &pairs {
        let (x, y) = (&diagrams[i], &diagrams[j]);
        let lhs = image(x)?.then(&image(y)?).matrix;
        let p = multiply_diagrams(x, y)?;
        let rhs = match p.nonzero() {
            Some(d) => image(d)?.matrix.scale(&p.coeff().eval(&two_n)),
            None => ExactMatrix::zeros(cfg.side(), cfg.side()),
        };
        if lhs != rhs {
            let differences = lhs
                .sub(&rhs)
                .triplets()
                .take(16)
                .map(|(a, b, _)| {
                    (
                        a + 1,
                        b + 1,
                        crate::arith::format_rational(&lhs.get(a, b)),
                        crate::arith::format_rational(&rhs.get(a, b)),
                    )
                })
                .collect();
            return Ok(HomomorphismReport {
                n: cfg.n,
                r: cfg.r,
                pairs_checked: pairs.len(),
                exhaustive,
                counterexample: Some(Counterexample {
                    x: x.clone(),
                    y: y.clone(),
                    differences,
                }),
            });
        }
    }
    Ok(HomomorphismReport {
        n: cfg.n,
        r: cfg.r,
        pairs_checked: pairs.len(),
        exhaustive,
        counterexample: None,
    })
}

/// Rows are the flattened images of every marked diagram.
fn diagram_image_matrix(cfg: &TensorSpaceConfig, opts: &CheckOptions) -> Result<ExactMatrix> {
    let side = cfg.check_side(opts.max_side)?;
    let rows = enumerate_diagrams(cfg.r)?
        .iter()
        .map(|d| Ok(rho_diagram(d, cfg)?.matrix.vectorize()))
        .collect::<Result<Vec<_>>>()?;
    Ok(ExactMatrix::from_sparse_rows(side * side, rows))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KernelReport {
    pub n: usize,
    pub r: usize,
    pub diagrams: u64,
    pub span_rank: RankReport,
    pub kernel_dim: usize,
}

/// Dimension of the kernel of `rho` on the span of all diagrams.
pub fn rho_kernel_dim(cfg: &TensorSpaceConfig, opts: &CheckOptions) -> Result<KernelReport> {
    let m = diagram_image_matrix(cfg, opts)?;
    let span_rank = certified_rank(&m, opts.force_modular, opts.seed);
    let diagrams = diagram_count(cfg.r);
    Ok(KernelReport {
        n: cfg.n,
        r: cfg.r,
        diagrams,
        kernel_dim: diagrams as usize - span_rank.rank,
        span_rank,
    })
}

/// `z = 2^{r-1} e_{1..r} sum_sigma sign(sigma) sigma`.
pub fn z_element(r: usize) -> Result<AlgebraElement> {
    let all: Vec<usize> = (1..=r).collect();
    let e = idempotent_ep(&all, 1, r)?;
    let mut alt = AlgebraElement::zero(r);
    for perm in permutations(r) {
        let d: AlgebraElement = MarkedDiagram::permutation(&perm)?.into();
        alt = &alt + &d.scale(&rat(permutation_sign(&perm)));
    }
    Ok((&e * &alt).scale(&rat(1i64 << (r - 1))))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZCheck {
    pub n: usize,
    pub r: usize,
    pub terms: usize,
    pub nonzero_in_algebra: bool,
    pub rho_is_zero: bool,
}

impl ZCheck {
    pub fn passed(&self) -> bool {
        self.nonzero_in_algebra && self.rho_is_zero
    }
}

/// For `n < r`, `z` is a nonzero element of the algebra killed by `rho`.
pub fn z_element_check(cfg: &TensorSpaceConfig, opts: &CheckOptions) -> Result<ZCheck> {
    if cfg.n >= cfg.r {
        return Err(Error::InvalidArgument(format!(
            "z vanishes under rho only for n < r, got n = {}, r = {}",
            cfg.n, cfg.r
        )));
    }
    cfg.check_side(opts.max_side)?;
    let z = z_element(cfg.r)?;
    Ok(ZCheck {
        n: cfg.n,
        r: cfg.r,
        terms: z.len(),
        nonzero_in_algebra: !z.is_zero(),
        rho_is_zero: rho_element(&z, cfg)?.is_zero(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CommutantReport {
    pub n: usize,
    pub r: usize,
    pub unknowns: usize,
    /// Dimension of the operators commuting with the diagonal generators.
    pub torus_commutant_dim: usize,
    pub system_rank: RankReport,
    pub dim: usize,
}

/// Basis (rows over `side^2` unknowns, `M_{ik}` at `i * side + k`) of the
/// operators commuting with the diagonal generators `iE_kk`. These only move
/// an index between `b_k` and `b_{n+k}`, so the unknowns split into
/// independent blocks keyed by the index pattern mod `n`.
fn torus_commutant_basis(cfg: &TensorSpaceConfig, cartan: &[TensorOperator]) -> Vec<Vec<(usize, Rational)>> {
    let side = cfg.side();
    let mut digits = vec![0; cfg.r];
    let mut groups: Vec<Vec<usize>> = vec![Vec::new(); cfg.n.pow(cfg.r as u32)];
    let mut slot = vec![0; side];
    for (t, s) in slot.iter_mut().enumerate() {
        cfg.decode(t, &mut digits);
        let key = digits.iter().fold(0, |acc, &d| acc * cfg.n + d % cfg.n);
        *s = groups[key].len();
        groups[key].push(t);
    }
    let mut basis = Vec::new();
    for rows in &groups {
        for cols in &groups {
            let width = cols.len();
            let local = |i: usize, k: usize| slot[i] * width + slot[k];
            let mut eqs = Vec::new();
            for h in cartan {
                let ht = h.matrix.transpose();
                for &i in rows {
                    for &j in cols {
                        let mut eq: Vec<(usize, Rational)> = ht
                            .row(j)
                            .iter()
                            .map(|(k, v)| (local(i, *k), v.clone()))
                            .collect();
                        eq.extend(h.matrix.row(i).iter().map(|(k, v)| (local(*k, j), -v.clone())));
                        eqs.push(eq);
                    }
                }
            }
            let kernel = ExactMatrix::from_sparse_rows(rows.len() * width, eqs).kernel_basis();
            for b in 0..kernel.rows() {
                basis.push(
                    kernel
                        .row(b)
                        .iter()
                        .map(|(u, v)| (rows[u / width] * side + cols[u % width], v.clone()))
                        .collect(),
                );
            }
        }
    }
    basis
}

/// `vec(M D - D M)` for a sparse `M` given by flat entries.
fn commutator_row(
    m: &[(usize, Rational)],
    d: &ExactMatrix,
    dt: &ExactMatrix,
    side: usize,
    offset: usize,
    out: &mut Vec<(usize, Rational)>,
) {
    for (flat, v) in m {
        let (i, k) = (flat / side, flat % side);
        for (j, dv) in d.row(k) {
            out.push((offset + i * side + j, v * dv));
        }
        for (i2, dv) in dt.row(i) {
            out.push((offset + i2 * side + k, -(v * dv)));
        }
    }
}

/// Dimension of the space of operators commuting with every `u(n)` basis
/// element. Systems above the modular threshold use two-prime rank.
pub fn commutant_dim(cfg: &TensorSpaceConfig, opts: &CheckOptions) -> Result<CommutantReport> {
    let side = cfg.check_side(opts.max_side)?;
    let action = unitary_action(cfg);
    let (cartan, rest) = action.split_at(cfg.n);
    let torus = torus_commutant_basis(cfg, cartan);
    let unknowns = side * side;
    let transposes: Vec<ExactMatrix> = rest.iter().map(|d| d.matrix.transpose()).collect();
    let rows: Vec<Vec<(usize, Rational)>> = torus
        .iter()
        .map(|m| {
            let mut row = Vec::new();
            for (g, (d, dt)) in rest.iter().zip(&transposes).enumerate() {
                commutator_row(m, &d.matrix, dt, side, g * unknowns, &mut row);
            }
            row
        })
        .collect();
    // imposing the remaining generators on the torus commutant
    let system = ExactMatrix::from_sparse_rows(unknowns * rest.len().max(1), rows);
    let modular_only = opts.force_modular || side > MODULAR_COMMUTANT_THRESHOLD;
    let system_rank = certified_rank(&system, modular_only, opts.seed);
    Ok(CommutantReport {
        n: cfg.n,
        r: cfg.r,
        unknowns,
        torus_commutant_dim: torus.len(),
        dim: torus.len() - system_rank.rank,
        system_rank,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CentralizerReport {
    pub n: usize,
    pub r: usize,
    pub span_rank: usize,
    pub commutant_dim: usize,
    pub ranks_certified: bool,
    pub equal: bool,
}

/// The diagram images span exactly the commutant.
pub fn centralizer_equals_diagram_span(
    cfg: &TensorSpaceConfig,
    opts: &CheckOptions,
) -> Result<CentralizerReport> {
    let kernel = rho_kernel_dim(cfg, opts)?;
    let comm = commutant_dim(cfg, opts)?;
    Ok(CentralizerReport {
        n: cfg.n,
        r: cfg.r,
        span_rank: kernel.span_rank.rank,
        commutant_dim: comm.dim,
        ranks_certified: kernel.span_rank.agree && comm.system_rank.agree,
        equal: kernel.span_rank.rank == comm.dim,
    })
}

/// `<u | J^m w>` for coordinate vectors in the `b` basis.
fn pair_vectors(u: &[Rational], w: &[Rational], m: bool, n: usize) -> Rational {
    (0..2 * n)
        .map(|a| {
            // (J w)_k = -w_{n+k}, (J w)_{n+k} = w_k
            let jw = if !m {
                w[a].clone()
            } else if a < n {
                -w[n + a].clone()
            } else {
                w[a - n].clone()
            };
            &u[a] * jw
        })
        .sum()
}

fn check_form_args(sigma: &[usize], delta: &[bool]) -> Result<()> {
    if sigma.len() % 2 == 1 {
        return Err(Error::InvalidArgument(format!(
            "invariant forms take an even number of arguments, got {}",
            sigma.len()
        )));
    }
    if delta.len() * 2 != sigma.len() {
        return Err(Error::InvalidArgument(format!(
            "need {} mark bits, got {}",
            sigma.len() / 2,
            delta.len()
        )));
    }
    let mut seen = vec![false; sigma.len() + 1];
    for &s in sigma {
        if s == 0 || s > sigma.len() || seen[s] {
            return Err(Error::InvalidArgument(format!(
                "{sigma:?} is not a permutation"
            )));
        }
        seen[s] = true;
    }
    Ok(())
}

/// `prod_l <v_{sigma(2l-1)} | J^{delta_l} v_{sigma(2l)}>`.
pub fn invariant_form_eval(
    sigma: &[usize],
    delta: &[bool],
    vectors: &[Vec<Rational>],
    cfg: &TensorSpaceConfig,
) -> Result<Rational> {
    check_form_args(sigma, delta)?;
    if vectors.len() != sigma.len() {
        return Err(Error::InvalidArgument(format!(
            "form on {} slots applied to {} vectors",
            sigma.len(),
            vectors.len()
        )));
    }
    let dim = cfg.dim_v();
    if let Some(v) = vectors.iter().find(|v| v.len() != dim) {
        return Err(Error::InvalidArgument(format!(
            "vector of length {} in a space of dimension {dim}",
            v.len()
        )));
    }
    Ok(delta
        .iter()
        .enumerate()
        .map(|(l, &m)| {
            pair_vectors(
                &vectors[sigma[2 * l] - 1],
                &vectors[sigma[2 * l + 1] - 1],
                m,
                cfg.n,
            )
        })
        .product())
}

/// Values of the form on every basis tensor, as a sparse vector.
pub fn invariant_form_vector(
    sigma: &[usize],
    delta: &[bool],
    cfg: &TensorSpaceConfig,
) -> Result<Vec<(usize, Rational)>> {
    check_form_args(sigma, delta)?;
    if sigma.len() != cfg.r {
        return Err(Error::MismatchedRank {
            left: sigma.len(),
            right: cfg.r,
        });
    }
    let mut digits = vec![0; cfg.r];
    let mut out = Vec::new();
    for idx in 0..cfg.side() {
        cfg.decode(idx, &mut digits);
        let v: i64 = delta
            .iter()
            .enumerate()
            .map(|(l, &m)| cfg.pairing(digits[sigma[2 * l] - 1], digits[sigma[2 * l + 1] - 1], m))
            .product();
        if v != 0 {
            out.push((idx, rat(v)));
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub n: usize,
    pub r: usize,
    pub dim: usize,
    /// Rank of the span of the forms `f_{sigma,delta}` (even `r` only).
    pub forms_span: Option<usize>,
    pub forms_annihilated: bool,
    pub consistent: bool,
}

/// Dimension of the `U(n)`-invariant linear forms on `⊗^r V`, cross-checked
/// against the span of the explicit pairing forms.
pub fn invariant_space_dim(cfg: &TensorSpaceConfig, opts: &CheckOptions) -> Result<InvariantReport> {
    let side = cfg.check_side(opts.max_side)?;
    let action = unitary_action(cfg);
    let stacked = action
        .iter()
        .skip(1)
        .fold(action[0].matrix.clone(), |acc, d| acc.vstack(&d.matrix));
    let dim = stacked.nullspace_dim();
    let (forms_span, forms_annihilated) = if cfg.r.is_multiple_of(2) {
        let m = cfg.r / 2;
        let mut forms = Vec::new();
        for sigma in permutations(cfg.r) {
            for mask in 0u32..(1 << m) {
                let delta: Vec<bool> = (0..m).map(|l| mask >> l & 1 == 1).collect();
                forms.push(invariant_form_vector(&sigma, &delta, cfg)?);
            }
        }
        // forms as columns: the action annihilates f when D f = 0
        let f = ExactMatrix::from_sparse_rows(side, forms);
        let annihilated = stacked.mul(&f.transpose()).is_zero();
        (Some(f.rank()), annihilated)
    } else {
        (None, true)
    };
    let consistent = match forms_span {
        Some(s) => s == dim && forms_annihilated,
        None => dim == 0,
    };
    Ok(InvariantReport {
        n: cfg.n,
        r: cfg.r,
        dim,
        forms_span,
        forms_annihilated,
        consistent,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdempotentImageReport {
    pub subset: Vec<usize>,
    pub n: usize,
    pub r: usize,
    pub rank: usize,
    pub idempotent: bool,
    /// Dimension of `{x : x J_q = x J_p (q in P), x J_q = -x J_p (q not in P)}`.
    pub eigenspace_dim: usize,
    pub image_in_eigenspace: bool,
}

impl IdempotentImageReport {
    pub fn image_is_eigenspace(&self) -> bool {
        self.idempotent && self.image_in_eigenspace && self.rank == self.eigenspace_dim
    }
}

/// Rank of `rho(e_P)`, compared with the joint `J` eigenspace it should cut out.
pub fn ep_image_rank(
    subset: &[usize],
    cfg: &TensorSpaceConfig,
    opts: &CheckOptions,
) -> Result<IdempotentImageReport> {
    let side = cfg.check_side(opts.max_side)?;
    let r = cfg.r;
    let p = *subset
        .iter()
        .min()
        .ok_or_else(|| Error::InvalidArgument("e_P needs a nonempty subset".into()))?;
    let e = rho_element(&idempotent_ep(subset, p, r)?, cfg)?.matrix;
    let jp = rho_element(&j_element(p, r)?, cfg)?.matrix;
    let one = Rational::from_integer(1.into());
    let mut conditions = ExactMatrix::zeros(side, 0);
    for q in (1..=r).filter(|&q| q != p) {
        let jq = rho_element(&j_element(q, r)?, cfg)?.matrix;
        let c = if subset.contains(&q) {
            jq.sub(&jp)
        } else {
            jq.add_scaled(&one, &jp)
        };
        conditions = conditions.hconcat(&c);
    }
    let eigenspace_dim = if conditions.cols() == 0 {
        side
    } else {
        side - conditions.rank()
    };
    Ok(IdempotentImageReport {
        subset: subset.to_vec(),
        n: cfg.n,
        r,
        rank: e.rank(),
        idempotent: e.mul(&e) == e,
        eigenspace_dim,
        image_in_eigenspace: e.mul(&conditions).is_zero(),
    })
}

/// `rho(a)` of an element, after checking the side bound.
pub fn bounded_rho_element(
    a: &AlgebraElement,
    cfg: &TensorSpaceConfig,
    opts: &CheckOptions,
) -> Result<TensorOperator> {
    cfg.check_side(opts.max_side)?;
    rho_element(a, cfg)
}
