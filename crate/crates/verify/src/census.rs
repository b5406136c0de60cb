//! Census of second-largest maximal cliques with the search split over
//! top-level branches.

use std::sync::atomic::{AtomicUsize, Ordering};

use paley_core::clique::{anchored_search, census_from_anchored, MaximalCliques};
use paley_core::{Census, CliqueSet, FieldCtx, FieldElem, PaleyGraph, Result};
use rayon::prelude::*;

fn clique(r: &[u16]) -> CliqueSet {
    CliqueSet::new(
        r.iter()
            .map(|&v| FieldElem::from_index(v as usize))
            .collect(),
    )
}

/// Maximal cliques through vertex 0 of size at least `(q + ε) / 2`, sorted.
pub fn anchored_parallel(search: &MaximalCliques<'_>, q: u32, progress: bool) -> Vec<CliqueSet> {
    let branches = search.branches();
    let total = branches.len();
    let done = AtomicUsize::new(0);
    let step = total.div_ceil(10).max(1);
    let mut out: Vec<CliqueSet> = branches
        .par_iter()
        .flat_map_iter(|b| {
            let mut found = Vec::new();
            search.run_branch(b, &mut |r| found.push(clique(r)));
            let k = done.fetch_add(1, Ordering::Relaxed) + 1;
            if progress && (k % step == 0 || k == total) {
                eprintln!("census q={q}: {k}/{total} branches");
            }
            found
        })
        .collect();
    out.sort_unstable();
    out
}

/// Runs on the current rayon pool.
pub fn census(ctx: &FieldCtx, graph: &PaleyGraph, progress: bool) -> Result<Census> {
    let search = anchored_search(graph);
    let anchored = anchored_parallel(&search, ctx.q(), progress);
    census_from_anchored(ctx, graph, &anchored)
}
