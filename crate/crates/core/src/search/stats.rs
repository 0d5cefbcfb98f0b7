use serde::{Deserialize, Serialize};

/// Counters for one phase.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhaseStats {
    pub phase: usize,
    /// Order of the graphs in this phase's pairs.
    pub order: usize,
    pub frontier: usize,
    pub expanded: usize,
    pub completions_tested: usize,
    /// Completions tested on graphs of odd order in a cubic class; all fail membership.
    pub odd_order_completions: usize,
    pub completions_orbit_skipped: usize,
    pub neighbourhoods_orbit_skipped: usize,
    pub pruned_infeasible: usize,
    pub pruned_good: usize,
    pub pruned_duplicate: usize,
    pub enqueued: usize,
    pub max_group_order: usize,
}

impl PhaseStats {
    pub(crate) fn absorb(&mut self, other: &PhaseStats) {
        self.expanded += other.expanded;
        self.completions_tested += other.completions_tested;
        self.odd_order_completions += other.odd_order_completions;
        self.completions_orbit_skipped += other.completions_orbit_skipped;
        self.neighbourhoods_orbit_skipped += other.neighbourhoods_orbit_skipped;
        self.pruned_infeasible += other.pruned_infeasible;
        self.pruned_good += other.pruned_good;
        self.pruned_duplicate += other.pruned_duplicate;
        self.enqueued += other.enqueued;
        self.max_group_order = self.max_group_order.max(other.max_group_order);
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    /// Class members with at most `k` vertices checked before the search.
    pub small_members: usize,
    pub phases: Vec<PhaseStats>,
}

impl SearchStats {
    pub fn pairs_expanded(&self) -> usize {
        self.phases.iter().map(|p| p.expanded).sum()
    }

    pub fn total(&self) -> PhaseStats {
        let mut t = PhaseStats::default();
        for p in &self.phases {
            t.absorb(p);
            t.frontier += p.frontier;
        }
        t
    }
}
