use std::collections::BTreeMap;

use clap::{Subcommand, ValueEnum};
use serde_json::{json, Value};

use mosaic_core::cacti;
use mosaic_core::graphs::{icg_homology, solve_mc_leading, IcgLimits};
use mosaic_core::lie::{drinfeld_kohno, koszul_check, t_odd, xi_rank};
use mosaic_core::operads::{cobar_complex, invariant_dimension, relation_kernel, Flip, OperadModel, Presentation, Target};
use mosaic_core::series::{egf_cross_check, lie_odd_dims, poincare_polynomial};
use mosaic_core::trees::{mosaic_chain_complex, mosaic_classes};

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum OperadArg {
    As,
    Pois1,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum VariantArg {
    Flip,
    SignedFlip,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum TargetArg {
    As,
    Pois1,
    Com,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum AlgebraArg {
    TOdd,
    DrinfeldKohno,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reflection classes of planar trees by cell dimension.
    Cells {
        #[arg(long)]
        n: usize,
    },
    /// Homology of the mosaic cell complex.
    HomologyMosaic {
        #[arg(long)]
        n: usize,
    },
    /// Homology of the cobar complex, compared with the mosaic complex.
    HomologyCobar {
        #[arg(long)]
        n: usize,
    },
    /// Homology of internally connected odd graphs by internal-vertex count.
    HomologyIcg {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        max_internal: usize,
        /// Dimension of the graph complex; only 2 is implemented.
        #[arg(long, default_value_t = 2)]
        d: usize,
    },
    /// Dimension of the fixed space of the involution.
    InvDims {
        #[arg(long, value_enum)]
        operad: OperadArg,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "signed-flip")]
        variant: VariantArg,
    },
    /// Coefficients of the Poincaré polynomial.
    Poincare {
        #[arg(long)]
        n: usize,
    },
    /// Graded dimensions of a quadratic Lie algebra.
    LieDims {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
        #[arg(long, value_enum, default_value = "t-odd")]
        algebra: AlgebraArg,
    },
    /// Ranks of the map into the Drinfeld-Kohno algebra, degree by degree.
    XiRank {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        max_degree: usize,
    },
    /// Hilbert series identity between the quadratic algebra and the envelope.
    KoszulCheck {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
    },
    /// Kernel of vertex splitting on graphs with 4 vertices and 5 edges.
    McLeading,
    /// Relations of the cactus group image and commutor factorizations.
    CactiVerify {
        #[arg(long)]
        n: usize,
        /// Word as comma-separated "p-q" generators.
        #[arg(long)]
        word: Option<String>,
    },
    /// Cross-checks of the generating-function formulas.
    SeriesCheck {
        #[arg(long, default_value_t = 8)]
        n: usize,
    },
    /// Kernel of the evaluation of a presentation into a target operad.
    RelationKernel {
        #[arg(long)]
        preset: Option<String>,
        /// Presentation JSON file, instead of a preset.
        #[arg(long, conflicts_with = "preset")]
        presentation: Option<std::path::PathBuf>,
        #[arg(long, value_enum)]
        target: TargetArg,
        #[arg(long)]
        n: usize,
    },
}

pub enum Failure {
    Usage(String),
    Compute(String),
}

pub struct Outcome {
    pub payload: Value,
    pub passed: Option<bool>,
}

fn computed(payload: Value) -> Result<Outcome, Failure> {
    Ok(Outcome { payload, passed: None })
}

fn checked(mut payload: Value, passed: bool) -> Result<Outcome, Failure> {
    payload["passed"] = Value::Bool(passed);
    Ok(Outcome { payload, passed: Some(passed) })
}

fn compute_err(e: impl std::fmt::Display) -> Failure {
    Failure::Compute(e.to_string())
}

fn usage_err(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn trimmed_integers(p: &mosaic_core::series::Polynomial) -> Vec<i64> {
    let mut c = p.integer_coeffs().expect("integer coefficients");
    while c.len() > 1 && c.last() == Some(&0) {
        c.pop();
    }
    c
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Cells { .. } => "cells",
            Command::HomologyMosaic { .. } => "homology-mosaic",
            Command::HomologyCobar { .. } => "homology-cobar",
            Command::HomologyIcg { .. } => "homology-icg",
            Command::InvDims { .. } => "inv-dims",
            Command::Poincare { .. } => "poincare",
            Command::LieDims { .. } => "lie-dims",
            Command::XiRank { .. } => "xi-rank",
            Command::KoszulCheck { .. } => "koszul-check",
            Command::McLeading => "mc-leading",
            Command::CactiVerify { .. } => "cacti-verify",
            Command::SeriesCheck { .. } => "series-check",
            Command::RelationKernel { .. } => "relation-kernel",
        }
    }

    /// Parameters that determine the result, for the cache key.
    pub fn parameters(&self) -> Result<BTreeMap<String, Value>, Failure> {
        let mut p = BTreeMap::new();
        let mut put = |k: &str, v: Value| {
            p.insert(k.to_string(), v);
        };
        match self {
            Command::Cells { n }
            | Command::HomologyMosaic { n }
            | Command::HomologyCobar { n }
            | Command::Poincare { n }
            | Command::SeriesCheck { n } => put("n", json!(n)),
            Command::HomologyIcg { n, max_internal, d } => {
                put("n", json!(n));
                put("max_internal", json!(max_internal));
                put("d", json!(d));
            }
            Command::InvDims { operad, n, variant } => {
                put("operad", json!(format!("{operad:?}")));
                put("n", json!(n));
                put("variant", json!(format!("{variant:?}")));
            }
            Command::LieDims { n, max_degree, algebra } => {
                put("n", json!(n));
                put("max_degree", json!(max_degree));
                put("algebra", json!(format!("{algebra:?}")));
            }
            Command::XiRank { n, max_degree } | Command::KoszulCheck { n, max_degree } => {
                put("n", json!(n));
                put("max_degree", json!(max_degree));
            }
            Command::McLeading => {}
            Command::CactiVerify { n, word } => {
                put("n", json!(n));
                put("word", json!(word));
            }
            Command::RelationKernel { preset, presentation, target, n } => {
                put("preset", json!(preset));
                if let Some(path) = presentation {
                    let text = std::fs::read_to_string(path).map_err(|e| usage_err(format!("{}: {e}", path.display())))?;
                    put("presentation", json!(text));
                }
                put("target", json!(format!("{target:?}")));
                put("n", json!(n));
            }
        }
        Ok(p)
    }

    pub fn run(&self, params: &BTreeMap<String, Value>) -> Result<Outcome, Failure> {
        match self {
            Command::Cells { n } => {
                let classes = mosaic_classes(*n).map_err(usage_err)?;
                let top = n.saturating_sub(2);
                let mut by_dim = vec![0usize; top + 1];
                for c in &classes {
                    by_dim[c.representative.cell_dimension()] += 1;
                }
                computed(json!({"total": classes.len(), "by_dimension": by_dim}))
            }
            Command::HomologyMosaic { n } => {
                let c = mosaic_chain_complex(*n).map_err(usage_err)?;
                let ranks = c.homology_ranks();
                let mut expected = trimmed_integers(&poincare_polynomial(*n));
                expected.resize(ranks.len(), 0);
                let matches = ranks.iter().map(|&r| r as i64).eq(expected.iter().copied());
                checked(json!({"dims": c.dims(), "ranks": ranks}), c.check_d_squared() && matches)
            }
            Command::HomologyCobar { n } => {
                let cobar = cobar_complex(*n).map_err(usage_err)?;
                let mosaic = mosaic_chain_complex(*n).map_err(usage_err)?;
                let (a, b) = (cobar.summary(), mosaic.summary());
                let ok = cobar.check_d_squared() && a == b;
                checked(json!({"dims": a.dims, "ranks": a.ranks, "mosaic_dims": b.dims, "mosaic_ranks": b.ranks}), ok)
            }
            Command::HomologyIcg { n, max_internal, d } => {
                if *d != 2 {
                    return Err(usage_err(format!("graph complex dimension {d} is not implemented; use 2")));
                }
                let limits = IcgLimits::default();
                if *max_internal > limits.max_int || *n > limits.max_ext {
                    return Err(usage_err(format!(
                        "--n at most {} and --max-internal at most {}",
                        limits.max_ext, limits.max_int
                    )));
                }
                let h = icg_homology(*n, *max_internal).map_err(compute_err)?;
                let words = max_internal.div_ceil(2);
                let lie = t_odd(*n).graded_dims(words);
                let ok = h.concentrated_in_odd_degrees() && h.by_word_length() == lie;
                checked(
                    json!({"dims": h.dims, "ranks": h.ranks, "by_word_length": h.by_word_length(), "lie_dims": lie}),
                    ok,
                )
            }
            Command::InvDims { operad, n, variant } => {
                let model = match operad {
                    OperadArg::As => OperadModel::As,
                    OperadArg::Pois1 => OperadModel::Pois1,
                };
                let variant = match variant {
                    VariantArg::Flip => Flip::Flip,
                    VariantArg::SignedFlip => Flip::SignedFlip,
                };
                computed(json!({"dim": invariant_dimension(model, variant, *n)}))
            }
            Command::Poincare { n } => computed(json!({"coeffs": trimmed_integers(&poincare_polynomial(*n))})),
            Command::LieDims { n, max_degree, algebra } => {
                let p = match algebra {
                    AlgebraArg::TOdd => t_odd(*n),
                    AlgebraArg::DrinfeldKohno => drinfeld_kohno(*n),
                };
                computed(json!({"generators": p.generators.len(), "dims": p.graded_dims(*max_degree)}))
            }
            Command::XiRank { n, max_degree } => {
                let ranks: Vec<usize> = (1..=*max_degree).map(|m| xi_rank(*n, m)).collect();
                let dims = t_odd(*n).graded_dims(*max_degree);
                let ok = ranks == dims;
                checked(json!({"ranks": ranks, "lie_dims": dims}), ok)
            }
            Command::KoszulCheck { n, max_degree } => {
                let r = koszul_check(*n, *max_degree);
                let passed = r.passed;
                checked(serde_json::to_value(&r).map_err(compute_err)?, passed)
            }
            Command::McLeading => {
                let r = solve_mc_leading();
                let leading: Option<Vec<Value>> = r
                    .leading
                    .as_ref()
                    .map(|l| l.iter().map(|(g, c)| json!({"graph": g, "coeff": c})).collect());
                let ok = r.d_squared_zero && r.matches_shapes();
                checked(
                    json!({
                        "domain_size": r.domain.len(),
                        "image_dim": r.image_dim,
                        "kernel_dim": r.kernel.len(),
                        "leading": leading,
                        "relative_signs": r.relative_signs(),
                        "d_squared_zero": r.d_squared_zero,
                    }),
                    ok,
                )
            }
            Command::CactiVerify { n, word } => {
                let rel = cacti::verify_cacti_relations(*n);
                let mut commutor_failures = Vec::new();
                for p in 1..=*n {
                    for q in p + 1..=*n {
                        if !cacti::commutor_factorization_check(*n, p, q).map_err(compute_err)? {
                            commutor_failures.push(format!("{p}-{q}"));
                        }
                    }
                }
                let mut payload = json!({"relations": rel, "commutor_failures": commutor_failures});
                if let Some(w) = word {
                    let w = cacti::parse_word(w).map_err(usage_err)?;
                    let perm = cacti::word_permutation(*n, &w).map_err(usage_err)?;
                    let pure = cacti::is_pure(&w, *n).map_err(usage_err)?;
                    payload["word"] = json!({"permutation": perm, "pure": pure});
                }
                let ok = rel.passed() && commutor_failures.is_empty();
                checked(payload, ok)
            }
            Command::SeriesCheck { n } => {
                let r = egf_cross_check(*n);
                let dims = lie_odd_dims(*n);
                let passed = r.passed();
                checked(json!({"report": r, "lie_odd_dims": dims}), passed)
            }
            Command::RelationKernel { preset, target, n, .. } => {
                let p = match (preset, params.get("presentation")) {
                    (Some(name), _) => Presentation::preset(name).map_err(usage_err)?,
                    (None, Some(Value::String(text))) => Presentation::from_json(text).map_err(usage_err)?,
                    _ => return Err(usage_err("either --preset or --presentation is required")),
                };
                let target = match target {
                    TargetArg::As => Target::As,
                    TargetArg::Pois1 => Target::Pois1,
                    TargetArg::Com => Target::Com,
                };
                let kernel = relation_kernel(&p, target, *n).map_err(compute_err)?;
                let chains: Vec<Vec<Value>> = kernel
                    .iter()
                    .map(|chain| {
                        chain.iter().map(|(t, c)| json!([c, t.display(&p.generators).to_string()])).collect()
                    })
                    .collect();
                computed(json!({"presentation": p.name, "kernel_dim": kernel.len(), "kernel": chains}))
            }
        }
    }
}
