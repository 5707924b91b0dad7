//! Peephole optimization of reversible circuits.
//!
//! Two passes alternate until neither changes the circuit:
//!
//! 1. [`cancel_adjacent_inverses`] drops neighbouring gates on the same wire
//!    list whose permutations are mutual inverses.
//! 2. [`template_rewrite`] looks for a run of `p` gates on one wire tuple whose
//!    composition equals `p` cyclically consecutive gates of a stored template
//!    of length `m`, with `p > m − p`. The run is replaced by the other `m − p`
//!    template gates, inverted and in reverse order. Every rewrite removes at
//!    least one gate, so the process terminates.
//!
//! Matching compares composed permutations, not gate names. Only runs whose
//! gates all sit on the same wire tuple are candidates, and the store's
//! dimension fixes that tuple's arity. Windows are scanned left to right;
//! at a given start the longest template wins, then the larger run, then
//! store order.

use std::collections::HashMap;
use std::fmt;

use crate::circuit::{Circuit, GateInstance};
use crate::perm::Permutation;
use crate::templates::TemplateStore;
use crate::{Error, Result};

pub const DEFAULT_BUDGET: usize = 10_000;

pub fn cancel_adjacent_inverses(c: &Circuit) -> Circuit {
    let mut kept: Vec<GateInstance> = Vec::with_capacity(c.len());
    for g in c.gates() {
        let cancels = kept.last().is_some_and(|top| {
            top.wires() == g.wires() && top.gate().compose(g.gate()).is_ok_and(|p| p.is_identity())
        });
        if cancels {
            kept.pop();
        } else {
            kept.push(g.clone());
        }
    }
    c.replace_gates(kept)
}

/// One way to use a template: a run composing to `lhs` becomes `rhs`.
#[derive(Debug, Clone)]
struct Rule {
    run_len: usize,
    lhs: Permutation,
    rhs: Vec<Permutation>,
}

/// Rewrite rules compiled from a store, in scan-priority order.
#[derive(Debug, Clone)]
pub struct RuleSet {
    arity: usize,
    rules: Vec<Rule>,
    lookup: HashMap<(usize, Permutation), usize>,
    run_lengths: Vec<usize>,
}

impl RuleSet {
    pub fn compile(store: &TemplateStore) -> Result<Self> {
        let dimension = store.dimension();
        if !dimension.is_power_of_two() {
            return Err(Error::Configuration(format!(
                "template dimension {dimension} is not a power of two"
            )));
        }
        let arity = dimension.trailing_zeros() as usize;

        let mut templates: Vec<_> = store.iter().collect();
        // Stable: equal lengths keep store order.
        templates.sort_by_key(|t| std::cmp::Reverse(t.len()));

        let mut rules = Vec::new();
        for t in templates {
            let m = t.len();
            for orientation in [t.clone(), t.reversed_inverse()] {
                let gates = orientation.gates();
                for run_len in (m / 2 + 1..=m).rev() {
                    for start in 0..m {
                        let mut lhs = gates[start].clone();
                        for offset in 1..run_len {
                            lhs = gates[(start + offset) % m].compose(&lhs)?;
                        }
                        let rhs = (0..m - run_len)
                            .map(|t| gates[(start + m - 1 - t) % m].inverse())
                            .collect();
                        rules.push(Rule { run_len, lhs, rhs });
                    }
                }
            }
        }

        let mut lookup = HashMap::new();
        for (index, rule) in rules.iter().enumerate() {
            lookup
                .entry((rule.run_len, rule.lhs.clone()))
                .or_insert(index);
        }
        let mut run_lengths: Vec<usize> = rules.iter().map(|r| r.run_len).collect();
        run_lengths.sort_unstable();
        run_lengths.dedup();
        Ok(RuleSet {
            arity,
            rules,
            lookup,
            run_lengths,
        })
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    fn max_run(&self) -> usize {
        self.run_lengths.last().copied().unwrap_or(0)
    }

    /// Highest-priority rule matching a run that starts at `start`.
    fn match_at(&self, gates: &[GateInstance], start: usize) -> Option<&Rule> {
        let first = &gates[start];
        if first.arity() != self.arity {
            return None;
        }
        let mut composed = first.gate().clone();
        let mut best: Option<usize> = None;
        let mut len = 1;
        loop {
            if self.run_lengths.binary_search(&len).is_ok() {
                if let Some(&index) = self.lookup.get(&(len, composed.clone())) {
                    best = Some(best.map_or(index, |b| b.min(index)));
                }
            }
            if len == self.max_run() {
                break;
            }
            let Some(next) = gates.get(start + len) else {
                break;
            };
            if next.wires() != first.wires() {
                break;
            }
            composed = next.gate().compose(&composed).expect("same arity");
            len += 1;
        }
        best.map(|index| &self.rules[index])
    }
}

/// Template rewriting to a fixpoint or until `budget` rewrites are spent.
pub fn template_rewrite(c: &Circuit, store: &TemplateStore, budget: usize) -> Result<Circuit> {
    let rules = compile_for(c, store)?;
    Ok(apply_rules(c, &rules, budget).0)
}

fn compile_for(c: &Circuit, store: &TemplateStore) -> Result<RuleSet> {
    let rules = RuleSet::compile(store)?;
    if !store.is_empty() && rules.arity > c.n_wires() {
        return Err(Error::Configuration(format!(
            "templates act on {} qubits but the circuit has {} wires",
            rules.arity,
            c.n_wires()
        )));
    }
    Ok(rules)
}

fn apply_rules(c: &Circuit, rules: &RuleSet, budget: usize) -> (Circuit, usize) {
    let mut gates = c.gates().to_vec();
    let mut rewrites = 0;
    let mut start = 0;
    while start < gates.len() && rewrites < budget && !rules.is_empty() {
        let Some(rule) = rules.match_at(&gates, start) else {
            start += 1;
            continue;
        };
        let wires = gates[start].wires().to_vec();
        let replacement: Vec<GateInstance> = rule
            .rhs
            .iter()
            .map(|g| GateInstance::labelled(g.clone(), &wires).expect("wires already validated"))
            .collect();
        gates.splice(start..start + rule.run_len, replacement);
        rewrites += 1;
        // Earlier runs that end before `start` are untouched.
        start = start.saturating_sub(rules.max_run() - 1);
    }
    (c.replace_gates(gates), rewrites)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OptimizationReport {
    pub gates_before: usize,
    pub gates_after: usize,
    pub cancelled_pairs: usize,
    pub rewrites: usize,
}

impl OptimizationReport {
    pub fn removed(&self) -> usize {
        self.gates_before - self.gates_after
    }
}

impl fmt::Display for OptimizationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} gates removed ({} -> {}; {} inverse pairs cancelled, {} template rewrites)",
            self.removed(),
            self.gates_before,
            self.gates_after,
            self.cancelled_pairs,
            self.rewrites
        )
    }
}

/// Alternates cancellation and template rewriting until nothing changes.
pub fn optimize(
    c: &Circuit,
    store: &TemplateStore,
    budget: usize,
) -> Result<(Circuit, OptimizationReport)> {
    let rules = compile_for(c, store)?;
    let mut current = c.clone();
    let mut report = OptimizationReport {
        gates_before: c.len(),
        gates_after: c.len(),
        cancelled_pairs: 0,
        rewrites: 0,
    };
    loop {
        let cancelled = cancel_adjacent_inverses(&current);
        report.cancelled_pairs += (current.len() - cancelled.len()) / 2;
        let (rewritten, rewrites) = apply_rules(&cancelled, &rules, budget - report.rewrites);
        report.rewrites += rewrites;
        let changed = rewritten.len() != current.len();
        current = rewritten;
        if !changed {
            break;
        }
    }
    report.gates_after = current.len();
    Ok((current, report))
}
