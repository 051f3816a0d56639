//! Search for buffering structures: species subsets paired with
//! output-complete edge sets whose buffering index vanishes.
//!
//! The default search walks species subsets in increasing size and pairs
//! each with its output-closure (the minimal output-complete edge set),
//! bounding the space at 2^|V|. With `include_edge_supersets` every closure
//! is additionally extended by subsets of the remaining source-disjoint
//! edges, which restores the full 2^|V|·2^|E| space.

use crate::CliError;
use crnkit::crn::{self, Crn, Subnetwork};
use crnkit::schur;
use std::collections::BTreeSet;

/// Bounds and filters for the search.
#[derive(Clone, Debug)]
pub struct EnumerationConfig {
    pub max_internal_species: usize,
    pub include_edge_supersets: bool,
    pub require_compatibility: bool,
}

/// A subnetwork that passed the filters, with the evidence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BufferingCandidate {
    pub species: Vec<String>,
    pub edges: Vec<String>,
    pub lambda: i64,
    pub compat_ker: bool,
    pub compat_im: bool,
}

/// Enumerates buffering structures under the config. Results are sorted by
/// (species count, species labels, edge labels) so the output is
/// independent of the host's declaration order.
pub fn enumerate_buffering_structures(
    host: &Crn,
    config: &EnumerationConfig,
) -> Result<Vec<BufferingCandidate>, CliError> {
    let n = host.species().len();
    if config.max_internal_species > n {
        return Err(CliError::Precondition(format!(
            "bound exceeded: max internal species {} > {} declared species",
            config.max_internal_species, n
        )));
    }

    let species: Vec<String> = {
        let mut s = host.species().to_vec();
        s.sort();
        s
    };
    let mut found = Vec::new();
    let mut evaluated: BTreeSet<(Vec<String>, Vec<String>)> = BTreeSet::new();
    // Subsets rejected with lambda < 0, keyed by their closure: growing the
    // species set at a fixed closure can only lower lambda further, so any
    // superset sharing the closure is skippable. (lambda > 0 rejections must
    // not prune: lambda decreases toward 0 as species are added.)
    let mut rejected_negative: Vec<(BTreeSet<String>, BTreeSet<String>)> = Vec::new();

    for size in 1..=config.max_internal_species {
        for subset in combinations(&species, size) {
            let v_gamma: BTreeSet<String> = subset.iter().cloned().collect();
            let closure = crn::output_closure(host, &v_gamma);
            // The prune only covers the closure candidate itself: adding
            // edges can raise lambda again, so supersets must still be
            // explored.
            let closure_pruned = rejected_negative
                .iter()
                .any(|(v, c)| v.is_subset(&v_gamma) && *c == closure);
            if closure_pruned && !config.include_edge_supersets {
                continue;
            }

            let mut edge_sets = Vec::new();
            if !closure_pruned {
                edge_sets.push(closure.clone());
            }
            if config.include_edge_supersets {
                let addable: Vec<String> = host
                    .reactions()
                    .iter()
                    .map(|r| r.id().to_string())
                    .filter(|e| !closure.contains(e))
                    .collect();
                for extra in nonempty_subsets(&addable) {
                    let mut edges = closure.clone();
                    edges.extend(extra);
                    edge_sets.push(edges);
                }
            }

            for edges in edge_sets {
                let key = (
                    v_gamma.iter().cloned().collect::<Vec<_>>(),
                    edges.iter().cloned().collect::<Vec<_>>(),
                );
                if !evaluated.insert(key) {
                    continue;
                }
                let sub = Subnetwork::new(host, v_gamma.clone(), edges.clone())
                    .expect("labels come from the host");
                let lambda = schur::buffering_index(host, &sub);
                let is_closure = edges == closure;
                if lambda < 0 && is_closure {
                    rejected_negative.push((v_gamma.clone(), closure.clone()));
                }
                if lambda != 0 {
                    continue;
                }
                let (compat_ker, compat_im) =
                    schur::check_compatibility(&schur::block_decompose(host, &sub));
                if config.require_compatibility && !(compat_ker && compat_im) {
                    continue;
                }
                found.push(BufferingCandidate {
                    species: v_gamma.iter().cloned().collect(),
                    edges: edges.iter().cloned().collect(),
                    lambda,
                    compat_ker,
                    compat_im,
                });
            }
        }
    }

    found.sort_by(|a, b| {
        (a.species.len(), &a.species, &a.edges).cmp(&(b.species.len(), &b.species, &b.edges))
    });
    Ok(found)
}

/// All `size`-element subsets of `items`, in lexicographic index order.
fn combinations(items: &[String], size: usize) -> Vec<Vec<String>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(size);
    fn rec(
        items: &[String],
        size: usize,
        start: usize,
        current: &mut Vec<String>,
        out: &mut Vec<Vec<String>>,
    ) {
        if current.len() == size {
            out.push(current.clone());
            return;
        }
        for i in start..items.len() {
            current.push(items[i].clone());
            rec(items, size, i + 1, current, out);
            current.pop();
        }
    }
    rec(items, size, 0, &mut current, &mut out);
    out
}

/// All nonempty subsets, by bitmask order.
fn nonempty_subsets(items: &[String]) -> Vec<Vec<String>> {
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << items.len()) {
        out.push(
            items
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, s)| s.clone())
                .collect(),
        );
    }
    out
}
