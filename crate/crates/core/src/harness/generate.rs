use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};
use crate::weight::{Weight, MAX_INTEGRAL};

/// Parameters for a family of seeded random digraphs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphSpec {
    pub n: usize,
    /// Probability that an ordered pair `i != j` carries an arc.
    pub density: f64,
    /// Inclusive whole-unit weight range; `weight_lo >= 1`.
    pub weight_lo: u64,
    pub weight_hi: u64,
    /// Probability that an arc takes `weight_lo` outright. At 1 every arc
    /// weighs `weight_lo`, which maximizes label ties.
    pub tie_bias: f64,
    pub seed: u64,
}

impl GraphSpec {
    pub fn new(n: usize, density: f64, weights: (u64, u64), tie_bias: f64, seed: u64) -> GraphSpec {
        GraphSpec {
            n,
            density,
            weight_lo: weights.0,
            weight_hi: weights.1,
            tie_bias,
            seed,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::InvalidSpec(msg));
        if self.n == 0 {
            return fail("n must be at least 1".into());
        }
        if !(0.0..=1.0).contains(&self.density) {
            return fail(format!("density {} outside [0, 1]", self.density));
        }
        if !(0.0..=1.0).contains(&self.tie_bias) {
            return fail(format!("tie bias {} outside [0, 1]", self.tie_bias));
        }
        if self.weight_lo < 1 || self.weight_lo > self.weight_hi || self.weight_hi > MAX_INTEGRAL {
            return fail(format!(
                "weight range {}:{} must satisfy 1 <= lo <= hi <= {MAX_INTEGRAL}",
                self.weight_lo, self.weight_hi
            ));
        }
        Ok(())
    }
}

/// The `index`-th graph of `spec`. A pure function of its arguments: the
/// generator is ChaCha8 seeded with `spec.seed` on stream `index`.
pub fn generate_graph(spec: &GraphSpec, index: u64) -> Result<Graph> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    rng.set_stream(index);
    let n = spec.n;
    let mut m = DistanceMatrix::new(n);
    for i in 1..=n {
        for j in 1..=n {
            if i == j || !rng.gen_bool(spec.density) {
                continue;
            }
            let w = if rng.gen_bool(spec.tie_bias) {
                spec.weight_lo
            } else {
                rng.gen_range(spec.weight_lo..=spec.weight_hi)
            };
            m.set(i, j, Weight::from_units(w).into());
        }
    }
    Graph::try_from(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexId;

    #[test]
    fn complete_graph_at_full_density() {
        let spec = GraphSpec::new(8, 1.0, (1, 9), 0.0, 42);
        let g = generate_graph(&spec, 0).unwrap();
        assert!(g.validate().is_empty());
        assert_eq!(g.arc_count(), 8 * 7);
    }

    #[test]
    fn full_tie_bias_pins_weights() {
        let spec = GraphSpec::new(8, 0.6, (1, 9), 1.0, 3);
        for index in 0..5 {
            let g = generate_graph(&spec, index).unwrap();
            for u in g.vertices() {
                assert!(g.out_arcs(u).all(|(_, w)| w == Weight::from_units(1)));
            }
        }
    }

    #[test]
    fn deterministic_per_index() {
        let spec = GraphSpec::new(9, 0.5, (1, 9), 0.3, 11);
        assert_eq!(generate_graph(&spec, 4).unwrap(), generate_graph(&spec, 4).unwrap());
        assert_ne!(generate_graph(&spec, 4).unwrap(), generate_graph(&spec, 5).unwrap());
    }

    #[test]
    fn zero_density_is_edgeless() {
        let g = generate_graph(&GraphSpec::new(5, 0.0, (1, 9), 0.0, 1), 0).unwrap();
        assert_eq!(g.arc_count(), 0);
        assert_eq!(g.weight(VertexId::new(1), VertexId::new(2)), Weight::INFINITY);
    }

    #[test]
    fn weights_stay_in_range() {
        let spec = GraphSpec::new(10, 1.0, (3, 5), 0.0, 99);
        let g = generate_graph(&spec, 0).unwrap();
        for u in g.vertices() {
            for (_, w) in g.out_arcs(u) {
                assert!(w >= Weight::from_units(3) && w <= Weight::from_units(5));
            }
        }
    }

    #[test]
    fn rejects_bad_specs() {
        for spec in [
            GraphSpec::new(0, 0.5, (1, 9), 0.0, 0),
            GraphSpec::new(4, 1.5, (1, 9), 0.0, 0),
            GraphSpec::new(4, 0.5, (0, 9), 0.0, 0),
            GraphSpec::new(4, 0.5, (5, 2), 0.0, 0),
            GraphSpec::new(4, 0.5, (1, 9), -0.1, 0),
        ] {
            assert!(matches!(generate_graph(&spec, 0), Err(Error::InvalidSpec(_))), "{spec:?}");
        }
    }
}
