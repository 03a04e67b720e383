//! Benchmark inputs.

use groupid::{generate_random, BriberyInstance, CostKind, GenParams, SocialRule};

/// Sparse random instance with prices in `1..=10`, as used by the runtime checks.
pub fn instance(rule: SocialRule, cost: CostKind, n: usize, plus: usize, minus: usize, seed: u64) -> BriberyInstance {
    let mut p = GenParams::new(n, rule, cost);
    p.density = 0.1;
    p.plus = plus;
    p.minus = minus;
    p.price_range = (1, 10);
    generate_random(&p, seed).expect("valid parameters")
}
