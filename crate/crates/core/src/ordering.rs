//! Partial sums, simpleness tests and the exhaustive backtracking search for
//! simple (optionally zero-free) orderings. This is the brute-force oracle
//! everything else is checked against, so it stays free of any symmetry or
//! automorphism shortcuts: the only pruning is the prefix-monotone one, a
//! prefix whose trace already repeats a sum (or hits the identity in
//! zero-free mode) cannot extend to a witness.

use serde::{Deserialize, Serialize};

use crate::group::Group;

/// Running left-accumulated sums s_j = a_1 + ... + a_j of an ordering.
pub type PartialSumTrace = Vec<usize>;

/// A set of distinct nonidentity elements together with the derived flags the
/// conjecture filters look at.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetCandidate {
    elements: Vec<usize>,
    pub sum_is_zero: bool,
    pub contains_inverse_pair: bool,
}

impl SubsetCandidate {
    /// `elements` must be distinct nonidentity indices; they are kept in
    /// ascending ambient order. The sum flag is computed in that fixed order
    /// (order-independent in the abelian case).
    pub fn new(group: &Group, elements: &[usize]) -> Self {
        let mut elements: Vec<usize> = elements.to_vec();
        elements.sort_unstable();
        elements.dedup();
        assert!(!elements.contains(&0), "subset candidates exclude the identity");
        let sum_is_zero = group.sum(&elements) == 0;
        let contains_inverse_pair = elements.iter().any(|&x| {
            let nx = group.inv(x);
            nx != x && elements.binary_search(&nx).is_ok()
        });
        SubsetCandidate { elements, sum_is_zero, contains_inverse_pair }
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// Partial sums of an ordering, accumulated strictly left-to-right.
pub fn partial_sums(group: &Group, ordering: &[usize]) -> PartialSumTrace {
    let mut sums = Vec::with_capacity(ordering.len());
    let mut acc = 0usize;
    for &a in ordering {
        acc = group.op(acc, a);
        sums.push(acc);
    }
    sums
}

/// True iff all partial sums are distinct.
pub fn is_simple(group: &Group, ordering: &[usize]) -> bool {
    let mut seen = vec![false; group.order()];
    partial_sums(group, ordering).into_iter().all(|s| !std::mem::replace(&mut seen[s], true))
}

/// True iff all partial sums are distinct and none is the identity.
pub fn is_simple_zero_free(group: &Group, ordering: &[usize]) -> bool {
    let mut seen = vec![false; group.order()];
    partial_sums(group, ordering)
        .into_iter()
        .all(|s| s != 0 && !std::mem::replace(&mut seen[s], true))
}

/// Certificate attached to an exhausted search: the full ordering space that
/// was ruled out, and how many search nodes the pruned enumeration expanded.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExhaustionCertificate {
    pub search_space: u128,
    pub nodes_expanded: u64,
}

/// Outcome of `find_simple_ordering`: either the first witness in the
/// deterministic depth-first order, or a certificate that none exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found { ordering: Vec<usize>, nodes_expanded: u64 },
    NotFound(ExhaustionCertificate),
}

impl SearchOutcome {
    pub fn ordering(&self) -> Option<&[usize]> {
        match self {
            SearchOutcome::Found { ordering, .. } => Some(ordering),
            SearchOutcome::NotFound(_) => None,
        }
    }
}

fn factorial(k: usize) -> u128 {
    (1..=k as u128).product()
}

/// Depth-first search over prefixes for a simple ordering of `set`, trying
/// extensions in ascending ambient element order. With `zero_free` the trace
/// must also avoid the identity. `NotFound` certifies exhaustion of all |A|!
/// orderings (pruning only removes prefixes that provably cannot extend).
pub fn find_simple_ordering(group: &Group, set: &[usize], zero_free: bool) -> SearchOutcome {
    let candidate = SubsetCandidate::new(group, set);
    let elems = candidate.elements();
    let k = elems.len();
    let mut used = vec![false; k];
    let mut seen = vec![false; group.order()];
    let mut prefix: Vec<usize> = Vec::with_capacity(k);
    let mut sums: Vec<usize> = Vec::with_capacity(k);
    let mut nodes = 0u64;

    fn dfs(
        group: &Group,
        elems: &[usize],
        zero_free: bool,
        used: &mut [bool],
        seen: &mut [bool],
        prefix: &mut Vec<usize>,
        sums: &mut Vec<usize>,
        nodes: &mut u64,
    ) -> bool {
        if prefix.len() == elems.len() {
            return true;
        }
        let acc = sums.last().copied().unwrap_or(0);
        for i in 0..elems.len() {
            if used[i] {
                continue;
            }
            let s = group.op(acc, elems[i]);
            if seen[s] || (zero_free && s == 0) {
                continue;
            }
            *nodes += 1;
            used[i] = true;
            seen[s] = true;
            prefix.push(elems[i]);
            sums.push(s);
            if dfs(group, elems, zero_free, used, seen, prefix, sums, nodes) {
                return true;
            }
            sums.pop();
            prefix.pop();
            seen[s] = false;
            used[i] = false;
        }
        false
    }

    if dfs(group, elems, zero_free, &mut used, &mut seen, &mut prefix, &mut sums, &mut nodes) {
        SearchOutcome::Found { ordering: prefix, nodes_expanded: nodes }
    } else {
        SearchOutcome::NotFound(ExhaustionCertificate {
            search_space: factorial(k),
            nodes_expanded: nodes,
        })
    }
}
