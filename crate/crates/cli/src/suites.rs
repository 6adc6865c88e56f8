//! Property suites, one per library crate.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use repmodule::{props as mp, ModuleVLambda};
use serde_json::{json, Value};

use crate::report::Check;
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum SuiteName {
    Qarith,
    Coxeter,
    Crystal,
    Module,
    Gk,
    All,
}

impl SuiteName {
    pub fn as_str(self) -> &'static str {
        match self {
            SuiteName::Qarith => "qarith",
            SuiteName::Coxeter => "coxeter",
            SuiteName::Crystal => "crystal",
            SuiteName::Module => "module",
            SuiteName::Gk => "gk",
            SuiteName::All => "all",
        }
    }
}

/// A fresh generator per check, so that adding or reordering checks never
/// changes the samples another check sees.
fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

pub type ModuleCheck = fn(&ModuleVLambda) -> Result<(), Value>;

/// Named per-module checks as `(name, anchor, check)`, grouped by `module verify --suite`.
pub fn module_checks(group: ModuleSuite) -> Vec<(&'static str, &'static str, ModuleCheck)> {
    match group {
        ModuleSuite::Relations => vec![
            ("quantum_relations", "[E_i,F_j], quantum Serre, divided-power composition", mp::quantum_relations),
            (
                "weight_bookkeeping",
                "X_i^(r) shifts weights by r alpha_i; T_i maps V(beta) to V(s_i beta)",
                mp::weight_bookkeeping,
            ),
            ("module_shape", "dim equals the Weyl dimension; unique highest pattern", mp::module_shape),
            ("c_matches_gt_vectors", "columns of C^i are the Gelfand-Tsetlin vectors", mp::c_matches_gt_vectors),
            (
                "c_block_structure",
                "C^i preserves weights and is triangular in each weight block",
                mp::c_block_structure,
            ),
        ],
        ModuleSuite::Sigma => vec![
            ("sigma_three_way", "sigma^i by strings, by N^i and by T_i agree, both signs", mp::sigma_three_way),
            ("cactus_relations", "sigma^J involutions and sigma^I sigma^i = sigma^(i*) sigma^I", mp::cactus_relations),
            ("braid_relation", "T_1 T_2 T_1 = T_2 T_1 T_2, both signs", mp::braid_relation),
            (
                "crystal_compatibility",
                "N^i is 1 mod v at (sigma^i m, m) and 0 mod v elsewhere",
                mp::crystal_compatibility,
            ),
            ("reduced_word_independence", "T_w does not depend on the reduced word", mp::reduced_word_independence),
            ("extremal_independence", "extremal vectors span a space of rank |W lambda|", mp::extremal_independence),
            ("sigma_on_extremal", "sigma^i [v]_w = [v]_(s_i w)", mp::sigma_on_extremal),
            ("sigma_full_on_highest", "sigma^I v_lambda = [v]_(w_0)", mp::sigma_full_on_highest),
            ("braid_on_extremal", "T_w [v]_w' = q^k [v]_(w w') when lengths add", mp::braid_on_extremal),
        ],
        ModuleSuite::Conjecture => vec![
            ("involution", "(N^i)^2 = 1 for i = 1, 2", mp::involution_check),
            ("order_three", "(N^1 N^2)^3 = 1", mp::conjecture_order_three),
        ],
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum ModuleSuite {
    Relations,
    Sigma,
    Conjecture,
}

/// Every dominant `(l1, l2)` with `l1 + l2 <= max_degree`, sorted.
pub fn weights_up_to(max_degree: i64) -> Vec<(i64, i64)> {
    let mut out: Vec<(i64, i64)> = (0..=max_degree).flat_map(|d| (0..=d).map(move |l1| (l1, d - l1))).collect();
    out.sort();
    out
}

fn over_modules(max_degree: i64, check: ModuleCheck) -> Result<(), Value> {
    for (l1, l2) in weights_up_to(max_degree) {
        let m = ModuleVLambda::new(l1, l2).map_err(|e| json!(e.to_string()))?;
        check(&m)?;
    }
    Ok(())
}

pub fn qarith_suite(seed: u64) -> Vec<Check> {
    use qarith::props::*;
    vec![
        Check::run("qarith.field_axioms", "RatFunc is a field, checked at random elements", || {
            field_axioms(&mut rng(seed, 1), 200)
        }),
        Check::run("qarith.binomial_identities", "q-Pascal and symmetry of Gaussian binomials", || {
            binomial_identities(20)
        }),
        Check::run("qarith.binomial_product_formula", "Gaussian binomial as a product of q-integers", || {
            binomial_product_formula(12)
        }),
        Check::run("qarith.kash_symmetry", "underlined c_{l,k,s} = c_{l,l-k,-s}, both kinds, l <= 12", || {
            kash_symmetry(12)
        }),
        Check::run("qarith.kash_composition", "composition law of the Kashiwara coefficients, l <= 12", || {
            kash_composition(12)
        }),
        Check::run("qarith.kash_normalizations", "underlined lower coefficient is 1 and c_{l,0,-l} is 1", || {
            kash_normalizations(12)
        }),
        Check::run("qarith.canonical_forms", "equal values built two ways have equal representations", || {
            canonical_forms(&mut rng(seed, 2), 200)
        }),
    ]
}

pub fn coxeter_suite() -> Vec<Check> {
    use coxeter::props::*;
    type Prop = fn(&str) -> Result<(), Value>;
    let props: [(&str, &str, Prop); 5] = [
        ("kernels_agree", "kernel of W on W/W_J: formula equals brute force", kernels_agree),
        ("parabolic_intersections", "W_J meet W_K = W_(J meet K)", parabolic_intersections),
        ("closed_factorization", "W = W_J W_(J-perp) with unique factorization for closed J", closed_factorization),
        ("reduced_words", "reduced words have the Coxeter length", reduced_words),
        ("longest_and_star", "w_0^J is an involution and conjugates s_j to s_(j*)", longest_and_star),
    ];
    let mut out = Vec::new();
    for (name, anchor, prop) in props {
        for t in CHECKED_TYPES {
            out.push(Check::run(format!("coxeter.{name}.{t}"), anchor, || prop(t)));
        }
    }
    out
}

pub fn crystal_suite(seed: u64) -> Vec<Check> {
    use crystal::props::*;
    vec![
        Check::run(
            "crystal.operator_identities",
            "e_i^r group law, sigma relations, braid relation of sigma^i, khat roundtrip",
            || operator_identities(&mut rng(seed, 3), 10_000, 20, 10),
        ),
        Check::run("crystal.basis_preserved", "sigma and sigma^i preserve the basis patterns", || {
            basis_preserved(&mut rng(seed, 4), 10_000, 20)
        }),
        Check::run("crystal.component_sizes", "|M_(l1,l2)| is the Weyl dimension, l1 + l2 <= 12", || {
            component_sizes(12)
        }),
        Check::run("crystal.zero_weight_counts", "zero-weight count is min(l1,l2)+1 or 0, l1 + l2 <= 10", || {
            zero_weight_counts(10)
        }),
        Check::run("crystal.components_closed", "components are closed under the crystal operators", || {
            components_closed(8)
        }),
    ]
}

pub fn module_suite() -> Vec<Check> {
    let mut out = Vec::new();
    for group in [ModuleSuite::Relations, ModuleSuite::Sigma] {
        for (name, anchor, check) in module_checks(group) {
            out.push(Check::run(format!("module.{name}"), format!("{anchor}, l1 + l2 <= 4"), || {
                over_modules(4, check)
            }));
        }
    }
    for (name, anchor, check) in module_checks(ModuleSuite::Conjecture) {
        out.push(Check::run(format!("module.{name}"), format!("{anchor}, l1 + l2 <= 6"), || over_modules(6, check)));
    }
    out.push(Check::skipped(
        "module.orthogonal_commutation",
        "sigma^J sigma^K = sigma^K sigma^J for orthogonal J, K",
        "vacuous for sl3: the only proper subsets {1} and {2} are not orthogonal",
    ));
    out
}

pub fn gk_suite(seed: u64) -> Vec<Check> {
    use gkmodel::props::*;
    let mut out = vec![
        Check::run("gk.confluence", "leftmost and rightmost rewriting agree on random words", || {
            confluence(&mut rng(seed, 5), 1000, 6)
        }),
        Check::run("gk.associativity", "(ab)c = a(bc)", || associativity(&mut rng(seed, 6), 500, 3)),
        Check::run("gk.anti_homomorphism", "sigma_hat(ab) = sigma_hat(b) sigma_hat(a)", || {
            anti_homomorphism(&mut rng(seed, 7), 500, 3)
        }),
        Check::run("gk.sigma_hat_involution", "sigma_hat is an involution sending weight mu to w_0 mu", || {
            sigma_hat_involution_and_grading(4)
        }),
        Check::run("gk.basis_compatibility", "sigma_hat(b_m) = b_(sigma m), coordinate sum <= 4", || {
            basis_compatibility(4)
        }),
        Check::run("gk.product_of_modules", "b_m b_m' lies in the span of M_(1,1)", product_of_modules),
        Check::run("gk.quantum_relations", "the U_q(sl3) action satisfies the defining relations", || {
            quantum_relations(4)
        }),
    ];
    for (l1, l2) in [(1, 1), (1, 0), (0, 1), (2, 1), (2, 2)] {
        out.push(Check::run(
            format!("gk.embed_module.({l1},{l2})"),
            "divided powers on b_m match the action on V_lambda",
            move || embed_module(l1, l2, 3),
        ));
    }
    out
}

pub fn run_suite(name: SuiteName, seed: u64) -> Vec<Check> {
    match name {
        SuiteName::Qarith => qarith_suite(seed),
        SuiteName::Coxeter => coxeter_suite(),
        SuiteName::Crystal => crystal_suite(seed),
        SuiteName::Module => module_suite(),
        SuiteName::Gk => gk_suite(seed),
        SuiteName::All => {
            let mut out = qarith_suite(seed);
            out.extend(coxeter_suite());
            out.extend(crystal_suite(seed));
            out.extend(module_suite());
            out.extend(gk_suite(seed));
            out
        }
    }
}

pub(crate) fn module(l1: i64, l2: i64) -> Result<ModuleVLambda, CliError> {
    Ok(ModuleVLambda::new(l1, l2)?)
}
