//! Fixed benchmark inputs shared by the criterion benches.

use chibound::suite::instance_seeds;
use chibound::{sample_class, ClassName, Graph, SampleConfig};

/// `count` members of `class` on `n` vertices, reproducible from `seed`.
pub fn samples(class: ClassName, n: usize, count: usize, seed: u64) -> Vec<Graph> {
    instance_seeds(seed, count)
        .into_iter()
        .map(|s| sample_class(&SampleConfig::new(class, n, s)).expect("sampler").graph)
        .collect()
}
