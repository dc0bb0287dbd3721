//! Dyck and Motzkin lattice paths: two pattern-transporting bijections with
//! their inverses, pattern statistics, exact counting sequences and the
//! exhaustive checks that tie them together.

pub mod bijections;
pub mod count;
pub mod enumeration;
pub mod error;
pub mod path;
pub mod verify;

pub use bijections::{
    no_short_descent_to_riordan, restrict_motzkin_to_udu_free, riordan_to_no_short_descent,
    std_bijection, std_bijection_inverse, t1_forward, t1_inverse, t2_forward,
    t2_forward_with_flat_order, t2_inverse, udu_free_to_motzkin, Bijection, BijectionReport,
    Direction,
};
pub use count::{catalan, formula_ddu, formula_udu, motzkin, riordan, CountValue};
pub use enumeration::{
    count_uuu_free, distribution_table, generate_paths, generate_paths_capped, DistributionRow,
    PathGenerator, Statistic, DEFAULT_CAP,
};
pub use error::{BijectionError, CountError, PathError};
pub use path::{
    associated_downstep, compute_statistics, matching_downstep, parse_path, render_path, Family,
    LatticePath, PathStatistics, Step, StepIndex,
};
