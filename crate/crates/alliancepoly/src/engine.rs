//! `da` computation, serial or split across threads by root vertex.

use std::ops::ControlFlow;
use std::sync::atomic::{AtomicU64, Ordering};

use alliancepoly_core::enumerate::{verify_value, walk_root, Tally};
use alliancepoly_core::{defensive_alliance_polynomial, BiPoly, EnumConfig, EnumError, Graph};
use rayon::prelude::*;

/// `da(G)` under `cfg`. With `cfg.parallel` every root vertex is walked as a
/// separate rayon task; all tasks share one visit counter for the guard, and
/// the per-task histograms are summed, so the result does not depend on
/// scheduling.
pub fn compute_da(g: &Graph, cfg: &EnumConfig) -> Result<BiPoly, EnumError> {
    if !cfg.parallel || g.order() < 2 {
        return defensive_alliance_polynomial(g, cfg);
    }
    let n = g.order();
    let visited = AtomicU64::new(0);
    let tally = (0..n)
        .into_par_iter()
        .map(|root| {
            let mut tally = Tally::new(n);
            let mut failure = None;
            let _ = walk_root(g, root, |s, value| {
                if visited.fetch_add(1, Ordering::Relaxed) >= cfg.max_subgraphs {
                    failure = Some(EnumError::GuardExceeded {
                        limit: cfg.max_subgraphs,
                        visited: cfg.max_subgraphs,
                    });
                    return ControlFlow::Break(());
                }
                if cfg.check_incremental {
                    if let Err(e) = verify_value(g, s, value) {
                        failure = Some(e);
                        return ControlFlow::Break(());
                    }
                }
                tally.record(s, value);
                ControlFlow::Continue(())
            });
            match failure {
                Some(e) => Err(e),
                None => Ok(tally),
            }
        })
        .try_reduce(
            || Tally::new(n),
            |mut a, b| {
                a.merge(&b);
                Ok(a)
            },
        )?;
    Ok(tally.to_poly())
}
