//! Coloring toolkit for `(P3 ∪ P2, X)`-free graphs.
//!
//! The crate bundles exact solvers (clique number, chromatic number), an
//! induced-pattern detector with class membership tests, constructive
//! colorers whose palettes are bounded by a function of the clique number
//! and which audit every structural claim they rely on, plus samplers,
//! extremal witnesses and a hill-climbing search for high chromatic number.

pub mod bitset;
pub mod catalog;
pub mod colorers;
pub mod coloring;
pub mod error;
pub mod exact;
pub mod generators;
pub mod graph;
pub mod io;
pub mod patterns;
pub mod suite;

pub use bitset::VertexSet;
pub use catalog::{named_graph, Named};
pub use colorers::{
    cluster_color, color_by_class, color_c5_free, color_hammer_free, color_k1k3_free, color_k4_free, color_kite_free,
    color_p2k3_free, domination_reduce, evaluate_bound, Check, ColorError, ColorOptions, ColorOutcome, ProofTrace,
    Reduction, Step, StepVerdict,
};
pub use coloring::{verify_coloring, Coloring, Verdict};
pub use error::GraphError;
pub use exact::{
    chromatic_number, clique_number, greedy_coloring, k_colorable, ChromaticOutcome, CliqueOutcome, CliqueWitness,
    KColorability, SolveBudget, SolveError,
};
pub use generators::{
    extremal_family, gnp, hunt, mutate_within_class, sample_class, Family, HuntConfig, HuntResult, SampleConfig,
    SampleMethod, SplitMix64,
};
pub use graph::{
    complement, disjoint_union, expansion, join, make_basic, mycielskian, neighborhood, BasicKind, Graph, Level,
};
pub use io::{read_graph, write_graph, Format};
pub use patterns::{count_induced, find_induced, is_member, ClassName, ClassSpec, Embedding, Membership, Pattern};
pub use suite::{run_suite, RecordVerdict, SuiteConfig, SuiteReport};
