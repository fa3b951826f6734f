//! Budgeted bidirectional search over the rewrite graph.
//!
//! Graph nodes are raw term multisets (exponent -> multiplicity); an
//! edge applies the contraction rule at some center `k`, replacing one
//! copy each of `k+1` and `k-1` by one copy of `k`, or its inverse
//! expansion. Connectivity in this graph is exactly the congruence
//! generated by the defining relations, so a found path is a replayable
//! equality proof. The search order is fixed (contractions before
//! expansions, ascending positions, level-synchronized frontiers), which
//! makes verdict and trace deterministic.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Raw multiset of powers; unlike a stored value it need not be in
/// contraction-normal form.
pub type TermBag = BTreeMap<i64, BigUint>;

/// Budget for the congruence search.
///
/// `max_nodes` caps the total number of distinct multisets visited
/// across both directions; `max_depth` caps the number of rewrite steps
/// explored from each endpoint, so a found path has at most
/// `2 * max_depth` steps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteBudget {
    pub max_nodes: usize,
    pub max_depth: usize,
}

impl Default for RewriteBudget {
    fn default() -> Self {
        Self { max_nodes: 100_000, max_depth: 20 }
    }
}

/// One rewrite step, each an instance of a congruence generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RewriteStep {
    /// Replace one copy each of `center+1` and `center-1` by `center`.
    Contract { center: i64 },
    /// Replace one copy of `exponent` by `exponent+1` and `exponent-1`.
    Expand { exponent: i64 },
}

impl RewriteStep {
    pub fn inverse(self) -> Self {
        match self {
            RewriteStep::Contract { center } => RewriteStep::Expand { exponent: center },
            RewriteStep::Expand { exponent } => RewriteStep::Contract { center: exponent },
        }
    }
}

fn decrement(bag: &mut TermBag, key: i64) -> bool {
    match bag.get_mut(&key) {
        Some(count) if !count.is_zero() => {
            *count -= BigUint::one();
            if count.is_zero() {
                bag.remove(&key);
            }
            true
        }
        _ => false,
    }
}

fn increment(bag: &mut TermBag, key: i64) {
    bag.entry(key).and_modify(|c| *c += BigUint::one()).or_insert_with(BigUint::one);
}

/// Apply a single step; `None` if the step is not enabled.
pub fn apply_step(bag: &TermBag, step: RewriteStep) -> Option<TermBag> {
    let mut next = bag.clone();
    match step {
        RewriteStep::Contract { center } => {
            if !decrement(&mut next, center + 1) {
                return None;
            }
            if !decrement(&mut next, center - 1) {
                return None;
            }
            increment(&mut next, center);
        }
        RewriteStep::Expand { exponent } => {
            if !decrement(&mut next, exponent) {
                return None;
            }
            increment(&mut next, exponent + 1);
            increment(&mut next, exponent - 1);
        }
    }
    Some(next)
}

/// Replay a step sequence from `start`, failing if any step is not
/// enabled. Returns the final multiset.
pub fn replay(start: &TermBag, steps: &[RewriteStep]) -> Option<TermBag> {
    let mut bag = start.clone();
    for &step in steps {
        bag = apply_step(&bag, step)?;
    }
    Some(bag)
}

/// Enabled successors in fixed order: contractions by ascending center,
/// then expansions by ascending exponent.
fn successors(bag: &TermBag) -> Vec<(RewriteStep, TermBag)> {
    let mut out = Vec::new();
    let keys: Vec<i64> = bag.keys().copied().collect();
    for &k in &keys {
        if bag.contains_key(&(k + 2)) {
            let step = RewriteStep::Contract { center: k + 1 };
            if let Some(next) = apply_step(bag, step) {
                out.push((step, next));
            }
        }
    }
    for &k in &keys {
        let step = RewriteStep::Expand { exponent: k };
        if let Some(next) = apply_step(bag, step) {
            out.push((step, next));
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    /// A path of generator instances from the first multiset to the
    /// second.
    Connected(Vec<RewriteStep>),
    /// Budget exhausted without meeting; connectivity undetermined.
    Exhausted,
}

struct Side {
    /// node -> (parent node, step from parent), None at the root.
    visited: HashMap<TermBag, Option<(TermBag, RewriteStep)>>,
    frontier: Vec<TermBag>,
    depth: usize,
}

impl Side {
    fn new(root: TermBag) -> Self {
        let mut visited = HashMap::new();
        visited.insert(root.clone(), None);
        Self { visited, frontier: vec![root], depth: 0 }
    }

    fn path_to_root(&self, from: &TermBag) -> Vec<RewriteStep> {
        let mut steps = Vec::new();
        let mut node = from.clone();
        while let Some(Some((parent, step))) = self.visited.get(&node) {
            steps.push(*step);
            node = parent.clone();
        }
        steps
    }
}

/// Bidirectional breadth-first search from `a` and `b`.
pub fn connect(a: &TermBag, b: &TermBag, budget: &RewriteBudget) -> SearchOutcome {
    if a == b {
        return SearchOutcome::Connected(Vec::new());
    }
    let mut forward = Side::new(a.clone());
    let mut backward = Side::new(b.clone());

    loop {
        let forward_open = forward.depth < budget.max_depth && !forward.frontier.is_empty();
        let backward_open = backward.depth < budget.max_depth && !backward.frontier.is_empty();
        if !forward_open && !backward_open {
            return SearchOutcome::Exhausted;
        }
        // Advance the smaller open frontier.
        let advance_forward = if forward_open && backward_open {
            forward.frontier.len() <= backward.frontier.len()
        } else {
            forward_open
        };
        let (side, other) = if advance_forward {
            (&mut forward, &backward)
        } else {
            (&mut backward, &forward)
        };

        let mut next_frontier = Vec::new();
        let mut meet: Option<TermBag> = None;
        'level: for node in std::mem::take(&mut side.frontier) {
            for (step, succ) in successors(&node) {
                if side.visited.contains_key(&succ) {
                    continue;
                }
                side.visited.insert(succ.clone(), Some((node.clone(), step)));
                if other.visited.contains_key(&succ) {
                    meet = Some(succ);
                    break 'level;
                }
                next_frontier.push(succ);
                if side.visited.len() + other.visited.len() >= budget.max_nodes {
                    break 'level;
                }
            }
        }
        side.depth += 1;
        side.frontier = next_frontier;

        if let Some(meet) = meet {
            let mut from_a = forward.path_to_root(&meet);
            from_a.reverse();
            let from_b = backward.path_to_root(&meet);
            let mut steps = from_a;
            steps.extend(from_b.into_iter().map(RewriteStep::inverse));
            debug_assert_eq!(replay(a, &steps).as_ref(), Some(b));
            return SearchOutcome::Connected(steps);
        }
        if forward.visited.len() + backward.visited.len() >= budget.max_nodes {
            return SearchOutcome::Exhausted;
        }
    }
}
