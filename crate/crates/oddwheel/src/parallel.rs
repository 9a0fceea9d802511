use std::thread;

use oddwheel_core::search::{run_shard, Objective, SearchError, SearchOptions, SearchReport, Shard, ShardOutcome};

/// Exhaustive search split into `threads` static shards, one per worker.
///
/// Shard outcomes are merged in shard order; the merge is a max-reduction, so
/// the report does not depend on the thread count.
pub fn run_parallel(
    n: usize,
    k: usize,
    objective: Objective,
    opts: &SearchOptions,
    threads: usize,
) -> Result<SearchReport, SearchError> {
    let count = threads.max(1);
    let outcomes: Vec<Result<ShardOutcome, SearchError>> = if count == 1 {
        vec![run_shard(n, k, objective, opts, Shard::single())]
    } else {
        thread::scope(|scope| {
            let handles: Vec<_> = (0..count)
                .map(|index| scope.spawn(move || run_shard(n, k, objective, opts, Shard { index, count })))
                .collect();
            handles.into_iter().map(|h| h.join().expect("search worker panicked")).collect()
        })
    };
    let mut merged: Option<ShardOutcome> = None;
    for outcome in outcomes {
        let part = outcome?;
        merged = Some(match merged {
            None => part,
            Some(m) => m.merge(part),
        });
    }
    merged.expect("at least one shard").finalize()
}
