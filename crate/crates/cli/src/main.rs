use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use marked_brauer::algebra::{
    check_relations, idempotent_ep, multiply_diagrams, span_closure, subsets_containing,
    AlgebraElement,
};
use marked_brauer::decomposition::{abbena_garbiero, decompose_tensor, gray_hervella, ExampleReport};
use marked_brauer::diagram::{enumerate_diagrams, MarkedDiagram};
use marked_brauer::tensor::{
    centralizer_equals_diagram_span, commutant_dim, ep_image_rank, invariant_space_dim,
    rho_kernel_dim, verify_homomorphism, z_element_check, CheckOptions, TensorSpaceConfig,
    DEFAULT_MAX_SIDE,
};

#[derive(Parser, Debug)]
#[command(name = "mbrauer", version, about = "Marked Brauer algebra and its tensor representation")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct Common {
    /// Print JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Use two-prime modular rank for large systems
    #[arg(long = "mod-p", global = true)]
    mod_p: bool,
    #[arg(long = "max-side", global = true, default_value_t = DEFAULT_MAX_SIDE)]
    max_side: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Product of two diagrams
    Multiply {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// Check the defining relations
    Relations {
        #[arg(long)]
        r: usize,
    },
    /// Closure of the generators under multiplication
    Span {
        #[arg(long)]
        r: usize,
    },
    /// Compare rho of products with products of rho
    RhoVerify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
    /// Kernel of rho on the diagram span
    Kernel {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
    /// Commutant of the unitary action, compared with the diagram span
    Commutant {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
    /// Invariant linear forms on the tensor power
    Invariants {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
    /// The J idempotents e_P and the ranks of their images
    Idempotents {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
    /// Irreducible summands of the tensor power
    Decompose {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
    /// Decomposition of W inside the third tensor power
    ExampleGrayHervella {
        #[arg(long, default_value_t = 3)]
        n: usize,
    },
    /// Decomposition of K inside the third tensor power
    ExampleAbbenaGarbiero {
        #[arg(long, default_value_t = 3)]
        n: usize,
    },
    /// List all marked diagrams
    Enumerate {
        #[arg(long)]
        r: usize,
    },
}

struct Outcome {
    ok: bool,
}

fn emit<T: Serialize>(common: &Common, value: &T, text: String) {
    if common.json {
        println!("{}", serde_json::to_string_pretty(value).expect("reports serialize"));
    } else {
        print!("{text}");
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

#[derive(Serialize)]
struct MultiplyOut {
    coeff: String,
    product: Option<String>,
    sign: i8,
    loops: usize,
}

#[derive(Serialize)]
struct KernelOut {
    #[serde(flatten)]
    kernel: marked_brauer::tensor::KernelReport,
    injective: bool,
    z_check: Option<marked_brauer::tensor::ZCheck>,
}

#[derive(Serialize)]
struct CommutantOut {
    commutant: marked_brauer::tensor::CommutantReport,
    centralizer: marked_brauer::tensor::CentralizerReport,
}

#[derive(Serialize)]
struct AlgebraicIdempotents {
    independent_of_p: bool,
    idempotent: bool,
    orthogonal: bool,
    sum_is_identity: bool,
}

#[derive(Serialize)]
struct IdempotentsOut {
    r: usize,
    n: usize,
    algebraic: AlgebraicIdempotents,
    images: Vec<marked_brauer::tensor::IdempotentImageReport>,
    rank_sum: usize,
    side: usize,
}

fn algebraic_idempotent_checks(r: usize) -> marked_brauer::Result<AlgebraicIdempotents> {
    let mut out = AlgebraicIdempotents {
        independent_of_p: true,
        idempotent: true,
        orthogonal: true,
        sum_is_identity: true,
    };
    for p in 1..=r {
        let subsets = subsets_containing(p, r)?;
        let es = subsets
            .iter()
            .map(|s| idempotent_ep(s, p, r))
            .collect::<marked_brauer::Result<Vec<_>>>()?;
        for (s, e) in subsets.iter().zip(&es) {
            for &p2 in s {
                out.independent_of_p &= idempotent_ep(s, p2, r)? == *e;
            }
            out.idempotent &= &(e * e) == e;
        }
        for (i, a) in es.iter().enumerate() {
            for (k, b) in es.iter().enumerate() {
                if i != k {
                    out.orthogonal &= (a * b).is_zero();
                }
            }
        }
        let sum = es.iter().fold(AlgebraElement::zero(r), |acc, e| &acc + e);
        out.sum_is_identity &= sum == AlgebraElement::identity(r);
    }
    Ok(out)
}

fn example_text(title: &str, rep: &ExampleReport) -> String {
    let mut s = format!(
        "{title} n={}\n{}: dim {}\n",
        rep.n, rep.ambient.name, rep.ambient.dim
    );
    for p in &rep.pieces {
        s += &format!("  {}: dim {} (contained: {})\n", p.name, p.dim, yes(p.contained));
    }
    s += &format!(
        "stacked rank {}, largest pairwise intersection {}\ndirect sum: {}\n",
        rep.stacked_rank,
        rep.max_pairwise_intersection,
        yes(rep.direct_sum)
    );
    s
}

fn run(command: Command, common: &Common) -> marked_brauer::Result<Outcome> {
    let opts = CheckOptions {
        max_side: common.max_side,
        force_modular: common.mod_p,
        seed: common.seed,
    };
    let ok = match command {
        Command::Multiply { r, x, y } => {
            let x = MarkedDiagram::parse(&x, r)?;
            let y = MarkedDiagram::parse(&y, r)?;
            let p = multiply_diagrams(&x, &y)?;
            let out = MultiplyOut {
                coeff: p.coeff().to_string(),
                product: p.nonzero().map(|d| d.to_string()),
                sign: p.sign,
                loops: p.loops,
            };
            let text = format!(
                "coeff: {}\nproduct: {}\n",
                out.coeff,
                out.product.as_deref().unwrap_or("0")
            );
            emit(common, &out, text);
            true
        }
        Command::Relations { r } => {
            let rep = check_relations(r)?;
            let mut text = format!("relations at r={r}\n");
            for rel in &rep.relations {
                text += &format!(
                    "{:>6} {:<5} {} ({} instances)\n",
                    rel.label,
                    if rel.holds { "ok" } else { "FAIL" },
                    rel.statement,
                    rel.instances
                );
                for f in &rel.failures {
                    let diff = AlgebraElement::from_records(r, f.difference.clone())?;
                    text += &format!("       {} lhs - rhs = {diff}\n", f.instance);
                }
            }
            emit(common, &rep, text);
            rep.all_hold()
        }
        Command::Span { r } => {
            let rep = span_closure(r)?;
            let text = format!(
                "reached {} of {} diagrams, complete: {}\n",
                rep.reached,
                rep.expected,
                yes(rep.complete)
            );
            emit(common, &rep, text);
            rep.complete
        }
        Command::RhoVerify { n, r, samples } => {
            let cfg = TensorSpaceConfig::new(n, r)?;
            let rep = verify_homomorphism(&cfg, samples, &opts)?;
            let mut text = format!(
                "n={n} r={r}: {} pairs checked{}, homomorphism: {}\n",
                rep.pairs_checked,
                if rep.exhaustive { " (exhaustive)" } else { "" },
                yes(rep.holds())
            );
            if let Some(c) = &rep.counterexample {
                text += &format!(
                    "counterexample:\n{}\n",
                    serde_json::to_string(c).expect("serializable")
                );
            }
            emit(common, &rep, text);
            rep.holds()
        }
        Command::Kernel { n, r } => {
            let cfg = TensorSpaceConfig::new(n, r)?;
            let kernel = rho_kernel_dim(&cfg, &opts)?;
            let z_check = if n < r {
                Some(z_element_check(&cfg, &opts)?)
            } else {
                None
            };
            let out = KernelOut {
                injective: kernel.kernel_dim == 0,
                kernel,
                z_check,
            };
            let mut text = format!(
                "n={n} r={r}: {} diagrams, span rank {}, kernel dim {}\n",
                out.kernel.diagrams, out.kernel.span_rank.rank, out.kernel.kernel_dim
            );
            if let Some(z) = &out.z_check {
                text += &format!(
                    "z: {} terms, nonzero in algebra: {}, rho(z) = 0: {}\n",
                    z.terms,
                    yes(z.nonzero_in_algebra),
                    yes(z.rho_is_zero)
                );
            }
            emit(common, &out, text);
            // the frontier: injective exactly when n >= r
            out.injective == (n >= r)
                && out.kernel.span_rank.agree
                && out.z_check.as_ref().is_none_or(|z| z.passed())
        }
        Command::Commutant { n, r } => {
            let cfg = TensorSpaceConfig::new(n, r)?;
            let commutant = commutant_dim(&cfg, &opts)?;
            let centralizer = centralizer_equals_diagram_span(&cfg, &opts)?;
            let text = format!(
                "n={n} r={r}: commutant dim {} ({:?} rank, primes {:?} agree: {}), diagram span rank {}, equal: {}\n",
                commutant.dim,
                commutant.system_rank.method,
                commutant.system_rank.modular.primes,
                yes(commutant.system_rank.agree),
                centralizer.span_rank,
                yes(centralizer.equal)
            );
            let ok = centralizer.equal && centralizer.ranks_certified;
            emit(common, &CommutantOut { commutant, centralizer }, text);
            ok
        }
        Command::Invariants { n, r } => {
            let cfg = TensorSpaceConfig::new(n, r)?;
            let rep = invariant_space_dim(&cfg, &opts)?;
            let text = format!(
                "n={n} r={r}: invariant forms dim {}, span of pairing forms {}, all annihilated: {}\n",
                rep.dim,
                rep.forms_span.map_or("-".to_string(), |s| s.to_string()),
                yes(rep.forms_annihilated)
            );
            emit(common, &rep, text);
            rep.consistent
        }
        Command::Idempotents { n, r } => {
            let cfg = TensorSpaceConfig::new(n, r)?;
            let side = cfg.check_side(opts.max_side)?;
            let algebraic = algebraic_idempotent_checks(r)?;
            let images = subsets_containing(1, r)?
                .iter()
                .map(|s| ep_image_rank(s, &cfg, &opts))
                .collect::<marked_brauer::Result<Vec<_>>>()?;
            let rank_sum = images.iter().map(|i| i.rank).sum();
            let mut text = format!(
                "r={r}: independent of p: {}, idempotent: {}, orthogonal: {}, sum is 1: {}\n",
                yes(algebraic.independent_of_p),
                yes(algebraic.idempotent),
                yes(algebraic.orthogonal),
                yes(algebraic.sum_is_identity)
            );
            for i in &images {
                text += &format!(
                    "  P={:?}: rank {}, eigenspace dim {}, image is eigenspace: {}\n",
                    i.subset,
                    i.rank,
                    i.eigenspace_dim,
                    yes(i.image_is_eigenspace())
                );
            }
            text += &format!("rank sum {rank_sum} of {side}\n");
            let ok = algebraic.independent_of_p
                && algebraic.idempotent
                && algebraic.orthogonal
                && algebraic.sum_is_identity
                && images.iter().all(|i| i.image_is_eigenspace())
                && rank_sum == side;
            emit(
                common,
                &IdempotentsOut {
                    r,
                    n,
                    algebraic,
                    images,
                    rank_sum,
                    side,
                },
                text,
            );
            ok
        }
        Command::Decompose { n, r } => {
            let rep = decompose_tensor(n, r)?;
            let mut text = format!("n={n} r={r}\n");
            for s in &rep.summands {
                let l: Vec<String> = s.contractions.iter().map(|(a, b)| format!("({a},{b})")).collect();
                text += &format!(
                    "  q={} L=[{}] tau+={:?} tau-={:?} lambda={:?} dimC={} {:?} dimR={} x{}\n",
                    s.q,
                    l.join(","),
                    s.tau_plus_rows,
                    s.tau_minus_rows,
                    s.lambda,
                    s.dim_c,
                    s.reality,
                    s.dim_r,
                    s.multiplicity
                );
            }
            text += &format!(
                "total real dim {} (expected {})\n",
                rep.total_real_dim, rep.expected_real_dim
            );
            emit(common, &rep, text);
            rep.consistent()
        }
        Command::ExampleGrayHervella { n } => {
            let rep = gray_hervella(n, &opts)?;
            emit(common, &rep, example_text("Gray-Hervella", &rep));
            rep.direct_sum
        }
        Command::ExampleAbbenaGarbiero { n } => {
            let rep = abbena_garbiero(n, &opts)?;
            emit(common, &rep, example_text("Abbena-Garbiero", &rep));
            rep.direct_sum
        }
        Command::Enumerate { r } => {
            let ds = enumerate_diagrams(r)?;
            let strings: Vec<String> = ds.iter().map(|d| d.to_string()).collect();
            let text = strings.iter().map(|s| format!("{s}\n")).collect::<String>();
            emit(common, &strings, text);
            true
        }
    };
    Ok(Outcome { ok })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command, &cli.common) {
        Ok(Outcome { ok: true }) => ExitCode::SUCCESS,
        Ok(Outcome { ok: false }) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
