//! Thread-pool fan-out for per-node importance.
//!
//! Entries are collected in node order before sorting, so the report is
//! identical to the sequential one whatever the thread count.

use agglo_core::engine::{graph_values, imc_with_phi, RankReport};
use agglo_core::{Graph, Result};
use rayon::prelude::*;

pub fn imc_all_par(g: &Graph) -> Result<RankReport> {
    let (phi, apl) = graph_values(g)?;
    let entries = (0..g.order())
        .into_par_iter()
        .map(|v| imc_with_phi(g, phi, v))
        .collect::<Result<Vec<_>>>()?;
    Ok(RankReport::from_entries(phi, apl, entries))
}

/// Runs `f` on a dedicated pool with `threads` workers, or on the global
/// pool when `threads` is `None`.
pub fn with_threads<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .expect("failed to build thread pool")
            .install(f),
        None => f(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use agglo_core::{engine, generate, FamilySpec};

    #[test]
    fn matches_sequential() {
        for spec in [
            FamilySpec::Comet { s: 5, t: 9 },
            FamilySpec::DoubleComet { n: 14, a: 3, b: 2 },
            FamilySpec::Lollipop { n: 12, d: 6 },
        ] {
            let g = generate(spec).unwrap().graph;
            let seq = engine::imc_all(&g).unwrap();
            for threads in [1, 2, 8] {
                assert_eq!(
                    with_threads(Some(threads), || imc_all_par(&g)).unwrap(),
                    seq
                );
            }
        }
    }

    #[test]
    fn propagates_errors() {
        let g = Graph::from_edge_list(&[(0, 1), (2, 3)], None).unwrap();
        assert!(imc_all_par(&g).is_err());
        assert!(imc_all_par(&Graph::singleton()).is_err());
    }
}
