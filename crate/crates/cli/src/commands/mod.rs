//! The verification commands. Each returns its checks in a fixed order.

mod characters;
mod det;
mod diagram;
mod realize;
mod relations;
mod singular;

pub use characters::{char_checks, duality_check};
pub use det::det_checks;
pub use diagram::{diagram_checks, expected_pattern, Pattern};
pub use realize::{realization_check, span_check};
pub use relations::relation_checks;
pub use singular::{even_injectivity, singular_checks, subsingular_checks};

use serde_json::json;
use shv_core::algebra::{Gen, Half, StandardBrackets};
use shv_core::freefield::{FockVector, Realization};
use shv_core::scalars::{Field, Parameter, RatFunc, Rational, Ring};
use shv_core::verma::{pr_to_hw, ModuleVector, VermaModule};

use crate::cache::Cache;
use crate::config::{CommandName, ConfigError, Mode, RunConfig};
use crate::fault::CorruptedBrackets;
use crate::report::Check;

/// Descriptive anchors for the `paper_ref` field.
pub mod anchor {
    pub const RELATIONS: &str = "defining super-commutator relations of SH";
    pub const REALIZATION: &str = "free-field realization of V[p,r] on F_{p,r}";
    pub const SPAN: &str = "v_{p,r} generates F_{p,r} for p not a negative integer";
    pub const SPAN_NEGATIVE: &str = "the realized submodule is L[p,r] for negative integer p";
    pub const SING_ODD: &str = "explicit singular vector, odd p > 0";
    pub const SING_EVEN: &str = "explicit singular vector, even p > 0";
    pub const PHI: &str = "singular vector Phi(p,r), negative p";
    pub const FAMILIES: &str = "screening families of (sub)singular vectors";
    pub const SUBSING: &str = "explicit subsingular vector, odd p > 0";
    pub const GEN: &str = "G(p/2) w^(1) = u^(0)";
    pub const EMBEDDING: &str = "V[p,r-1] embeds in V[p,r] for even p > 0";
    pub const CHAR: &str = "character of L[p,r] for nonzero integer p";
    pub const DUALITY: &str = "contragredient duality L[p,r] and L[-p,-r]";
    pub const DET: &str = "Gram determinant formula and its vanishing locus";
    pub const SCREENING: &str = "screening operators Q, G and G^tw";
    pub const MAX_EVEN: &str = "maximal submodule for even p";
    pub const MAX_ODD: &str = "maximal submodule for odd p > 0 is generated by w_{p,r}";
    pub const DIAGRAM: &str = "embedding diagrams for V[p,r]";
    pub const SEQUEL: &str = "character of Ker Q and Ker G in F_{-1,0}";
}

pub fn run(cfg: &RunConfig, cache: &Cache) -> Result<Vec<Check>, ConfigError> {
    match cfg.command {
        CommandName::Relations => Ok(if cfg.inject_fault {
            relation_checks(cfg.max_degree.0, &CorruptedBrackets)
        } else {
            relation_checks(cfg.max_degree.0, &StandardBrackets)
        }),
        CommandName::Realize => realize::run(cfg),
        CommandName::Singular => singular::run(cfg, false),
        CommandName::Subsingular => singular::run(cfg, true),
        CommandName::Char => characters::run(cfg, cache),
        CommandName::Det => det::run(cfg, cache),
        CommandName::Diagram => diagram::run(cfg),
        CommandName::Acceptance => Ok(crate::acceptance::run(cfg, cache)),
    }
}

pub(crate) fn realization(cfg: &RunConfig) -> Realization {
    Realization::new(cfg.cl.clone(), cfg.cla.clone()).expect("cLa validated nonzero")
}

pub(crate) fn verma(cl: &Rational, cla: &Rational, p: &Rational, r: &Rational) -> VermaModule<Rational> {
    VermaModule::new(pr_to_hw(p, r, cl, cla))
}

/// The Verma module with `r` left as a formal parameter.
pub(crate) fn verma_symbolic(cl: &Rational, cla: &Rational, p: &Rational) -> VermaModule<RatFunc> {
    let c = RatFunc::from_rational;
    VermaModule::new(pr_to_hw(&c(p), &RatFunc::var(Parameter::R), &c(cl), &c(cla)))
}

/// Simple graded dimensions (Gram ranks) at degrees `0, 1/2, …, max_degree`.
pub(crate) fn simple_dims(
    cache: &Cache,
    cl: &Rational,
    cla: &Rational,
    p: &Rational,
    r: &Rational,
    max_degree: Half,
    mode: Mode,
) -> Vec<usize> {
    let inputs = json!({
        "cL": cl.to_string(), "cLa": cla.to_string(), "p": p.to_string(),
        "r": if mode == Mode::Symbolic { "symbolic".to_string() } else { r.to_string() },
        "max_degree": max_degree.to_string(),
    });
    cache.get_or_compute("simple_dims", inputs, || match mode {
        Mode::Specialized => {
            let m = verma(cl, cla, p, r);
            max_degree.steps_up_to().map(|d| m.simple_dim(d)).collect()
        }
        Mode::Symbolic => {
            let m = verma_symbolic(cl, cla, p);
            max_degree.steps_up_to().map(|d| m.simple_dim(d)).collect()
        }
    })
}

/// Raising generators of mode at most the degree of `v` that do not kill it.
pub(crate) fn verma_obstructions<F: Field>(m: &VermaModule<F>, v: &ModuleVector<F>) -> Vec<Gen> {
    VermaModule::<F>::raising_generators(v.degree)
        .into_iter()
        .filter(|g| g.mode() <= v.degree && !m.apply(*g, v).is_zero())
        .collect()
}

/// The same for a Fock vector under the realized generators.
pub(crate) fn fock_obstructions(real: &Realization, v: &FockVector) -> Vec<Gen> {
    let d = v.degree().unwrap_or(Half::ZERO);
    VermaModule::<Rational>::raising_generators(d)
        .into_iter()
        .filter(|g| g.mode() <= d && !real.act_gen(*g, v).is_zero())
        .collect()
}

pub(crate) fn list<T: std::fmt::Display>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

pub(crate) fn halves(xs: &[usize]) -> String {
    format!("({})", list(xs))
}
