use std::collections::HashSet;

use rayon::prelude::*;

use super::checkpoint::{Checkpoint, CheckpointError};
use super::expand::{expand, Expansion};
use super::stats::{PhaseStats, SearchStats};
use super::{Algorithm, Pair, SearchConfig, SearchError, SearchOutcome, Verdict};
use crate::class::small_members;
use crate::symmetry::CanonicalKey;

/// Pairs handed to the worker pool per batch when `workers > 1`.
const BATCH_PER_WORKER: usize = 64;

/// A search in progress, advanced one phase at a time.
pub struct Search {
    cfg: SearchConfig,
    /// Phase of the pairs in `frontier`; 0 until the small-order sweep ran.
    phase: usize,
    frontier: Vec<Pair>,
    stats: SearchStats,
    verdict: Option<Verdict>,
    pool: Option<rayon::ThreadPool>,
}

impl Search {
    pub fn new(cfg: SearchConfig) -> Result<Self, SearchError> {
        cfg.validate()?;
        let pool = if cfg.workers > 1 {
            Some(
                rayon::ThreadPoolBuilder::new()
                    .num_threads(cfg.workers)
                    .build()
                    .map_err(|e| SearchError::InvalidConfig(format!("worker pool: {e}")))?,
            )
        } else {
            None
        };
        Ok(Search {
            cfg,
            phase: 0,
            frontier: Vec::new(),
            stats: SearchStats::default(),
            verdict: None,
            pool,
        })
    }

    /// Restores the state saved by [`checkpoint`](Self::checkpoint). The
    /// configuration must match the one recorded there.
    pub fn from_checkpoint(cfg: SearchConfig, cp: &Checkpoint) -> Result<Self, SearchError> {
        let mut s = Search::new(cfg)?;
        if cp.config != super::checkpoint::ConfigEcho::of(&s.cfg) {
            return Err(CheckpointError::ConfigMismatch.into());
        }
        s.frontier = cp.frontier_pairs(s.cfg.k)?;
        s.phase = cp.phase;
        s.stats = cp.stats.clone();
        Ok(s)
    }

    pub fn config(&self) -> &SearchConfig {
        &self.cfg
    }

    pub fn phase(&self) -> usize {
        self.phase
    }

    pub fn frontier(&self) -> &[Pair] {
        &self.frontier
    }

    pub fn stats(&self) -> &SearchStats {
        &self.stats
    }

    pub fn verdict(&self) -> Option<&Verdict> {
        self.verdict.as_ref()
    }

    /// Snapshot of the pending frontier; `None` before the first phase.
    pub fn checkpoint(&self) -> Option<Checkpoint> {
        (self.phase >= 1 && self.verdict.is_none())
            .then(|| Checkpoint::capture(&self.cfg, self.phase, &self.frontier, &self.stats))
    }

    /// Runs the next step: the small-order sweep first, then one phase per
    /// call. Returns the verdict once there is one.
    pub fn run_phase(&mut self) -> Result<Option<Verdict>, SearchError> {
        if let Some(v) = &self.verdict {
            return Ok(Some(v.clone()));
        }
        let verdict = if self.phase == 0 {
            self.sweep()
        } else {
            self.process_phase()?
        };
        self.verdict = verdict.clone();
        Ok(verdict)
    }

    pub fn run(mut self) -> Result<SearchOutcome, SearchError> {
        self.run_with(|_| Ok(()))
    }

    /// Like [`run`](Self::run), calling `after_phase` whenever a phase
    /// finished without a verdict.
    pub fn run_with(
        &mut self,
        mut after_phase: impl FnMut(&Search) -> Result<(), SearchError>,
    ) -> Result<SearchOutcome, SearchError> {
        loop {
            if let Some(verdict) = self.run_phase()? {
                return Ok(SearchOutcome {
                    verdict,
                    stats: self.stats.clone(),
                });
            }
            after_phase(self)?;
        }
    }

    fn sweep(&mut self) -> Option<Verdict> {
        let k = self.cfg.k;
        let mut count = 0;
        let patterns = &self.cfg.patterns;
        let hit = small_members(&self.cfg.class, k, |g| {
            count += 1;
            !patterns.in_super(g)
        });
        self.stats.small_members = count;
        if let Some(g) = hit {
            let phase = g.order() as i64 - k as i64;
            return Some(Verdict::Counterexample {
                graph: g.relabel_universe(0),
                phase,
            });
        }
        let init = Pair::initial(k);
        self.phase = 1;
        if self.cfg.patterns.pair_is_good(init.graph(), init.bag()) {
            return Some(Verdict::Unavoidable);
        }
        self.frontier = vec![init];
        None
    }

    fn process_phase(&mut self) -> Result<Option<Verdict>, SearchError> {
        let k = self.cfg.k;
        if self.frontier.is_empty() {
            return Ok(Some(Verdict::Unavoidable));
        }
        if k + self.phase > self.cfg.max_order {
            return Ok(Some(Verdict::Undecided {
                max_order: self.cfg.max_order,
            }));
        }
        let mut ps = PhaseStats {
            phase: self.phase,
            order: k + self.phase,
            frontier: self.frontier.len(),
            ..PhaseStats::default()
        };
        let frontier = std::mem::take(&mut self.frontier);
        let mut merge = Merge::new(self.cfg.algorithm);
        let mut hit = None;
        match &self.pool {
            None => {
                for p in &frontier {
                    let ex = expand(p, &self.cfg)?;
                    if let Some(g) = merge.absorb(ex, &mut ps) {
                        hit = Some(g);
                        break;
                    }
                }
            }
            Some(pool) => {
                let batch = BATCH_PER_WORKER * self.cfg.workers;
                'outer: for chunk in frontier.chunks(batch) {
                    let results: Vec<Result<Expansion, SearchError>> =
                        pool.install(|| chunk.par_iter().map(|p| expand(p, &self.cfg)).collect());
                    for r in results {
                        if let Some(g) = merge.absorb(r?, &mut ps) {
                            hit = Some(g);
                            break 'outer;
                        }
                    }
                }
            }
        }
        self.stats.phases.push(ps);
        if let Some(graph) = hit {
            return Ok(Some(Verdict::Counterexample {
                graph,
                phase: self.phase as i64,
            }));
        }
        self.frontier = merge.next;
        self.phase += 1;
        Ok(None)
    }
}

/// Collects successors in frontier order, dropping isomorphic repeats.
struct Merge {
    dedup: bool,
    seen: HashSet<CanonicalKey>,
    next: Vec<Pair>,
}

impl Merge {
    fn new(alg: Algorithm) -> Self {
        Merge {
            dedup: alg == Algorithm::Optimized,
            seen: HashSet::new(),
            next: Vec::new(),
        }
    }

    fn absorb(&mut self, ex: Expansion, ps: &mut PhaseStats) -> Option<crate::graph::LabeledGraph> {
        ps.absorb(&ex.stats);
        if ex.counterexample.is_some() {
            return ex.counterexample;
        }
        for (key, pair) in ex.children {
            if self.dedup && !self.seen.insert(key.expect("optimized successors carry keys")) {
                ps.pruned_duplicate += 1;
                continue;
            }
            ps.enqueued += 1;
            self.next.push(pair);
        }
        None
    }
}

/// Runs the configured search to completion.
pub fn run_search(cfg: SearchConfig) -> Result<SearchOutcome, SearchError> {
    Search::new(cfg)?.run()
}

/// Runs the unreduced reference search, whatever `cfg.algorithm` says.
pub fn run_search_base(cfg: SearchConfig) -> Result<SearchOutcome, SearchError> {
    Search::new(cfg.with_algorithm(Algorithm::Base))?.run()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::class::GraphClass;
    use crate::containment::{Mode, PatternSet};
    use crate::named;
    use crate::symmetry::is_isomorphic;

    fn cubic(k: usize, ps: PatternSet, budget: usize) -> SearchConfig {
        SearchConfig::new(k, ps, GraphClass::cubic()).with_max_order(budget)
    }

    #[test]
    fn k3_triangle_free_gives_k33() {
        let out = run_search(cubic(3, PatternSet::cycles(3, 3), 20)).unwrap();
        match out.verdict {
            Verdict::Counterexample { graph, phase } => {
                assert!(is_isomorphic(&graph, &named::k33()));
                assert_eq!(phase, 3);
            }
            v => panic!("{v:?}"),
        }
    }

    #[test]
    fn k3_u4_unavoidable() {
        assert_eq!(
            run_search(cubic(3, PatternSet::cycles(3, 4), 20))
                .unwrap()
                .verdict,
            Verdict::Unavoidable
        );
    }

    #[test]
    fn budget_too_small_is_undecided() {
        let out = run_search(cubic(3, PatternSet::cycles(3, 3), 5)).unwrap();
        assert_eq!(out.verdict, Verdict::Undecided { max_order: 5 });
    }

    #[test]
    fn empty_pattern_set() {
        let out = run_search(cubic(3, PatternSet::empty(Mode::Subgraph), 10)).unwrap();
        let g = out.verdict.counterexample().unwrap();
        assert!(is_isomorphic(g, &named::complete(4)));
        // K4 has at most k vertices when k = 4, so the sweep finds it
        let out = run_search(cubic(4, PatternSet::empty(Mode::Subgraph), 10)).unwrap();
        assert!(matches!(out.verdict, Verdict::Counterexample { phase: 0, .. }));
    }

    #[test]
    fn phases_advance_one_at_a_time() {
        let mut s = Search::new(cubic(3, PatternSet::cycles(3, 4), 20)).unwrap();
        assert!(s.checkpoint().is_none());
        assert_eq!(s.run_phase().unwrap(), None);
        assert_eq!(s.phase(), 1);
        assert_eq!(s.frontier().len(), 1);
        assert_eq!(s.run_phase().unwrap(), None);
        assert_eq!(s.phase(), 2);
        assert!(s.checkpoint().is_some());
    }
}
