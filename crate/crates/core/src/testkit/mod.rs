//! Ground truth for testing: brute-force oracles, seeded instance
//! generators, two worked example instances and the two hardness reductions
//! from multicolored clique.

mod clique;
mod figures;
mod generate;
mod oracle;
mod reduce;

pub use clique::{
    has_multicolored_clique, has_multicolored_clique_capped, random_clique, CliqueError, CliqueInstance, PartVertex,
};
pub use figures::{figure_one, figure_two, FIGURE_ONE_HIGHLIGHTED};
pub use generate::{random_instance, BoundsProfile, GeneratorConfig, Instance};
pub use oracle::{
    count_dag_paths, enumerate_paths, oracle_balance_fair, oracle_exact_distance, oracle_solve, EnumerateOptions,
    Enumeration,
};
pub use reduce::{reduce_eth, reduce_w1, Reduction};
