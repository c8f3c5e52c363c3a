//! Finitely generated semigroups of m-partitions with positive plethysm
//! coefficient, and decomposition of partitions into their generators.

mod decompose;
mod enumerate;
mod family;

pub use decompose::{completeness_sweep, decompose, Decomposer, SweepReport, SweepRow};
pub use enumerate::{enumerate_m_partitions, MPartitions};
pub use family::{
    canonical_generator_text, load_family, load_family_from, parse_family, verify_generators, GeneratorFamily, Reduction,
    VerifyReport, DATA_DIR_ENV, FAMILY_IDS,
};
