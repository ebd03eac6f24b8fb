//! Search-free construction of simple orderings for small sets.
//!
//! Two entry points:
//! - [`order_small_abelian`]: abelian ambient, zero-sum sets with no inverse
//!   pair, |A| <= 9. Dispatches through an explicit case tree keyed on the
//!   zero-sum 3- and 4-subsets of A.
//! - [`order_small_general`]: any finite group, |A| <= 5, inverse pairs
//!   allowed. Dispatches on the number of inverse pairs contained in A.
//!
//! Every produced ordering is post-verified with `is_simple` before being
//! returned. If no branch matches, or a branch's output fails verification,
//! the instance is logged and the exhaustive search takes over; the returned
//! case label then starts with `fallback/`. Callers that must prove the case
//! tree complete (the verification sweeps) treat any fallback as a failure.

use thiserror::Error;

use crate::group::Group;
use crate::ordering::{find_simple_ordering, is_simple, SearchOutcome, SubsetCandidate};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructiveError {
    #[error("ambient group is not abelian")]
    NotAbelian,
    #[error("set contains the identity")]
    IdentityInSet,
    #[error("set contains an inverse pair {{x,-x}}")]
    InversePairPresent,
    #[error("set does not sum to the identity")]
    NonzeroSum,
    #[error("set size {0} exceeds the constructive range {1}")]
    TooLarge(usize, usize),
    #[error("no simple ordering exists (exhaustive search); candidate conjecture counterexample")]
    NoSimpleOrdering,
}

/// Which theorem's analysis fired and the path taken through its case tree.
/// Branch identifiers are stable strings; `fallback/...` marks an
/// InternalCaseGap that was repaired by the exhaustive search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseLabel {
    pub theorem: &'static str,
    pub branch: String,
}

impl CaseLabel {
    pub fn is_fallback(&self) -> bool {
        self.branch.starts_with("fallback")
    }
}

/// All zero-sum 3- and 4-subsets of a set, each stored ascending, listed in
/// lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ZeroSumSubsetIndex {
    pub triples: Vec<Vec<usize>>,
    pub quads: Vec<Vec<usize>>,
}

impl ZeroSumSubsetIndex {
    pub fn is_empty(&self) -> bool {
        self.triples.is_empty() && self.quads.is_empty()
    }
}

/// Exhaustively enumerate the zero-sum 3- and 4-subsets of `set` (abelian
/// ambient; sums are order-independent).
pub fn zero_sum_index(group: &Group, set: &[usize]) -> ZeroSumSubsetIndex {
    let mut sorted = set.to_vec();
    sorted.sort_unstable();
    let mut idx = ZeroSumSubsetIndex::default();
    for size in [3usize, 4] {
        if size >= sorted.len() {
            continue; // only proper subsets B of A count
        }
        for combo in combinations(&sorted, size) {
            if group.sum(&combo) == 0 {
                if size == 3 {
                    idx.triples.push(combo);
                } else {
                    idx.quads.push(combo);
                }
            }
        }
    }
    idx
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > items.len() {
        return out;
    }
    let mut pick: Vec<usize> = (0..k).collect();
    loop {
        out.push(pick.iter().map(|&i| items[i]).collect());
        // next combination in lexicographic order
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if pick[i] != i + items.len() - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        pick[i] += 1;
        for j in i + 1..k {
            pick[j] = pick[j - 1] + 1;
        }
    }
}

fn intersection(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().copied().filter(|x| b.contains(x)).collect()
}

fn difference(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().copied().filter(|x| !b.contains(x)).collect()
}

/// Labeled access to A: `l[i-1]` is the element the proof calls `a_i`.
struct Labels<'g> {
    group: &'g Group,
    l: Vec<usize>,
}

impl Labels<'_> {
    /// Sum of the labeled elements, left to right (1-based subscripts).
    fn s(&self, subscripts: &[usize]) -> usize {
        self.group.sum(&subscripts.iter().map(|&i| self.l[i - 1]).collect::<Vec<_>>())
    }

    /// The ordering (a_{i1}, a_{i2}, ...) as element indices.
    fn ord(&self, subscripts: &[usize]) -> Vec<usize> {
        subscripts.iter().map(|&i| self.l[i - 1]).collect()
    }

    /// Cyclic relabeling a_i -> a_{i+shift}, subscripts mod |A|.
    fn rotated(&self, shift: usize) -> Labels<'_> {
        let k = self.l.len();
        Labels { group: self.group, l: (0..k).map(|i| self.l[(i + shift) % k]).collect() }
    }
}

fn verify_or_fallback(
    group: &Group,
    set: &[usize],
    theorem: &'static str,
    candidate: Option<(Vec<usize>, String)>,
) -> Result<(Vec<usize>, CaseLabel), ConstructiveError> {
    if let Some((ordering, branch)) = candidate {
        if is_simple(group, &ordering) {
            return Ok((ordering, CaseLabel { theorem, branch }));
        }
        log::warn!(
            "{theorem}: branch {branch} produced a non-simple ordering for set {set:?} in {}; \
             falling back to exhaustive search",
            group.id()
        );
        return fallback(group, set, theorem, &format!("fallback/bad-branch/{branch}"));
    }
    log::warn!(
        "{theorem}: no case matched set {set:?} in {}; falling back to exhaustive search",
        group.id()
    );
    fallback(group, set, theorem, "fallback/no-branch")
}

fn fallback(
    group: &Group,
    set: &[usize],
    theorem: &'static str,
    branch: &str,
) -> Result<(Vec<usize>, CaseLabel), ConstructiveError> {
    match find_simple_ordering(group, set, false) {
        SearchOutcome::Found { ordering, .. } => {
            Ok((ordering, CaseLabel { theorem, branch: branch.to_string() }))
        }
        SearchOutcome::NotFound(_) => Err(ConstructiveError::NoSimpleOrdering),
    }
}

/// Simple ordering for an abelian zero-sum set with no inverse pair,
/// |A| <= 9, via the explicit small-set case analyses.
pub fn order_small_abelian(
    group: &Group,
    set: &[usize],
) -> Result<(Vec<usize>, CaseLabel), ConstructiveError> {
    if !group.is_abelian() {
        return Err(ConstructiveError::NotAbelian);
    }
    if set.contains(&0) {
        return Err(ConstructiveError::IdentityInSet);
    }
    let cand = SubsetCandidate::new(group, set);
    if cand.contains_inverse_pair {
        return Err(ConstructiveError::InversePairPresent);
    }
    if !cand.sum_is_zero {
        return Err(ConstructiveError::NonzeroSum);
    }
    if cand.len() > 9 {
        return Err(ConstructiveError::TooLarge(cand.len(), 9));
    }
    let a: Vec<usize> = cand.elements().to_vec();
    let k = a.len();
    let idx = zero_sum_index(group, &a);

    if idx.is_empty() {
        // with no proper zero-sum subset every ordering is simple
        return verify_or_fallback(group, &a, "thm-small-abelian", Some((a.clone(), "no-zero-sum-subset".into())));
    }
    let candidate = match k {
        0..=5 => Some((a.clone(), "size<=5".into())),
        6 => size6(group, &a, &idx),
        7 => size7(group, &a, &idx),
        8 => size8(group, &a, &idx),
        9 => size9(group, &a, &idx),
        _ => unreachable!(),
    };
    verify_or_fallback(group, &a, "thm-small-abelian", candidate)
}

/// Labels from a list of constraint blocks: each block's elements are
/// assigned the next subscripts in ascending order.
fn assemble(blocks: &[&[usize]]) -> Vec<usize> {
    let mut l = Vec::new();
    for b in blocks {
        let mut b = b.to_vec();
        b.sort_unstable();
        l.extend(b);
    }
    l
}

fn size6(group: &Group, a: &[usize], idx: &ZeroSumSubsetIndex) -> Option<(Vec<usize>, String)> {
    // only zero-sum subsets are a triple and its complement
    let b = idx.triples.first()?.clone();
    let rest = difference(a, &b);
    let lab = Labels { group, l: assemble(&[&b, &rest]) };
    Some((lab.ord(&[1, 2, 4, 3, 5, 6]), "size6".into()))
}

fn size7(group: &Group, a: &[usize], idx: &ZeroSumSubsetIndex) -> Option<(Vec<usize>, String)> {
    let t1 = idx.triples.first()?.clone();
    if idx.triples.len() == 1 {
        let rest = difference(a, &t1);
        let lab = Labels { group, l: assemble(&[&t1, &rest]) };
        return Some((lab.ord(&[1, 2, 4, 3, 5, 6, 7]), "size7/unique-triple".into()));
    }
    let t2 = idx.triples[1].clone();
    let shared = intersection(&t1, &t2);
    if shared.len() != 1 {
        log::warn!("size7: |T1 cap T2| = {} (expected 1) for {a:?}; paper-anomaly", shared.len());
        return None;
    }
    let rest = difference(a, &assemble(&[&t1, &t2]));
    let lab = Labels {
        group,
        l: assemble(&[&difference(&t1, &shared), &shared, &difference(&t2, &shared), &rest]),
    };
    if lab.s(&[1, 5, 7]) != 0 {
        Some((lab.ord(&[1, 2, 4, 3, 6, 5, 7]), "size7/two-triples/a1+a5+a7!=0".into()))
    } else {
        Some((lab.ord(&[1, 4, 2, 3, 5, 6, 7]), "size7/two-triples/a1+a5+a7=0".into()))
    }
}

fn size8(group: &Group, a: &[usize], idx: &ZeroSumSubsetIndex) -> Option<(Vec<usize>, String)> {
    if let Some(q0) = idx.quads.first() {
        // Case 1: a zero-sum quadruple exists
        if let Some(t) = idx.triples.first() {
            let mut q = q0.clone();
            if intersection(&q, t).len() == 1 {
                q = difference(a, &q);
                q.sort_unstable();
            }
            let shared = intersection(&q, t);
            if shared.len() != 2 {
                log::warn!("size8: |Q cap T| = {} (expected 2) for {a:?}", shared.len());
                return None;
            }
            let t_extra = difference(t, &q);
            let rest = difference(a, &assemble(&[&q, t]));
            let lab = Labels {
                group,
                l: assemble(&[&difference(&q, &shared), &shared, &t_extra, &rest]),
            };
            let branch = if lab.s(&[2, 3, 6]) != 0 {
                (lab.ord(&[1, 2, 3, 6, 4, 5, 7, 8]), "size8/case1/with-triple/a2+a3+a6!=0")
            } else {
                (lab.ord(&[1, 2, 3, 7, 4, 5, 6, 8]), "size8/case1/with-triple/a2+a3+a6=0")
            };
            return Some((branch.0, branch.1.into()));
        }
        let rest = difference(a, q0);
        let lab = Labels { group, l: assemble(&[q0, &rest]) };
        return if lab.s(&[3, 4, 5, 6]) != 0 {
            Some((lab.ord(&[1, 2, 3, 5, 4, 6, 7, 8]), "size8/case1/no-triple/a3..a6!=0".into()))
        } else {
            Some((lab.ord(&[1, 2, 3, 5, 4, 7, 6, 8]), "size8/case1/no-triple/a3..a6=0".into()))
        };
    }
    // Case 2: no zero-sum quadruple, so a triple exists
    let t1 = idx.triples.first()?.clone();
    if idx.triples.len() >= 2 {
        let t2 = idx.triples[1].clone();
        let shared = intersection(&t1, &t2);
        if shared.len() != 1 {
            log::warn!("size8: |T1 cap T2| = {} (expected 1) for {a:?}", shared.len());
            return None;
        }
        let rest = difference(a, &assemble(&[&t1, &t2]));
        let lab = Labels {
            group,
            l: assemble(&[&difference(&t1, &shared), &shared, &difference(&t2, &shared), &rest]),
        };
        return if lab.s(&[1, 4, 8]) != 0 {
            Some((lab.ord(&[1, 4, 2, 3, 5, 6, 7, 8]), "size8/case2/two-triples/a1+a4+a8!=0".into()))
        } else {
            Some((lab.ord(&[1, 4, 2, 3, 5, 6, 8, 7]), "size8/case2/two-triples/a1+a4+a8=0".into()))
        };
    }
    let rest = difference(a, &t1);
    let lab = Labels { group, l: assemble(&[&t1, &rest]) };
    Some((lab.ord(&[1, 2, 4, 3, 5, 6, 7, 8]), "size8/case2/unique-triple".into()))
}

fn size9(group: &Group, a: &[usize], idx: &ZeroSumSubsetIndex) -> Option<(Vec<usize>, String)> {
    if idx.quads.is_empty() {
        return size9_no_quads(group, a, idx);
    }
    if idx.quads.len() == 1 {
        return size9_one_quad(group, a, idx);
    }
    // with several quads, look for a pair meeting in 2 elements
    for (i, qi) in idx.quads.iter().enumerate() {
        for qj in &idx.quads[i + 1..] {
            let m = intersection(qi, qj).len();
            if m == 2 {
                return size9_quad_pair_meeting_in_two(group, a, qi, qj);
            }
            if m != 1 {
                log::warn!("size9: |Qi cap Qj| = {m} (expected 1 or 2) for {a:?}");
                return None;
            }
        }
    }
    size9_quads_pairwise_meeting_in_one(group, a, idx)
}

fn size9_no_quads(group: &Group, a: &[usize], idx: &ZeroSumSubsetIndex) -> Option<(Vec<usize>, String)> {
    let t1 = idx.triples.first()?.clone();
    if idx.triples.len() == 1 {
        let rest = difference(a, &t1);
        let lab = Labels { group, l: assemble(&[&t1, &rest]) };
        return Some((lab.ord(&[1, 2, 4, 3, 5, 6, 7, 8, 9]), "size9/no-quad/unique-triple".into()));
    }
    if let Some(t2) = idx.triples[1..].iter().find(|t| intersection(&t1, t).is_empty()) {
        // Case a: a disjoint companion triple
        let rest = difference(a, &assemble(&[&t1, t2]));
        let lab = Labels { group, l: assemble(&[&t1, t2, &rest]) };
        return if lab.s(&[3, 5, 7]) != 0 {
            Some((lab.ord(&[1, 2, 4, 3, 5, 7, 6, 8, 9]), "size9/no-quad/disjoint/a3+a5+a7!=0".into()))
        } else {
            Some((lab.ord(&[1, 2, 4, 3, 6, 7, 5, 8, 9]), "size9/no-quad/disjoint/a3+a5+a7=0".into()))
        };
    }
    // Case b: every companion triple meets T1 in exactly one element
    let t2 = idx.triples[1].clone();
    let shared = intersection(&t1, &t2);
    if shared.len() != 1 {
        log::warn!("size9: |T1 cap T2| = {} (expected 1) for {a:?}", shared.len());
        return None;
    }
    let rest = difference(a, &assemble(&[&t1, &t2]));
    let lab = Labels {
        group,
        l: assemble(&[&difference(&t1, &shared), &shared, &difference(&t2, &shared), &rest]),
    };
    if lab.s(&[1, 8, 9]) != 0 {
        Some((lab.ord(&[1, 2, 4, 3, 6, 5, 7, 8, 9]), "size9/no-quad/meeting/a1+a8+a9!=0".into()))
    } else {
        Some((lab.ord(&[1, 2, 4, 3, 6, 5, 8, 7, 9]), "size9/no-quad/meeting/a1+a8+a9=0".into()))
    }
}

fn size9_one_quad(group: &Group, a: &[usize], idx: &ZeroSumSubsetIndex) -> Option<(Vec<usize>, String)> {
    let q1 = idx.quads[0].clone();
    if idx.triples.is_empty() {
        // Case 1.1
        let rest = difference(a, &q1);
        let lab = Labels { group, l: assemble(&[&q1, &rest]) };
        return Some((lab.ord(&[1, 2, 3, 5, 4, 6, 7, 8, 9]), "size9/case1.1".into()));
    }
    if let Some(t1) = idx.triples.iter().find(|t| intersection(&q1, t).len() == 1) {
        // Case 1.2
        let shared = intersection(&q1, t1);
        let rest = difference(a, &assemble(&[&q1, t1]));
        let lab = Labels {
            group,
            l: assemble(&[&difference(&q1, &shared), &shared, &difference(t1, &shared), &rest]),
        };
        if lab.s(&[1, 2, 9]) == 0 {
            return Some((lab.ord(&[1, 2, 5, 4, 7, 6, 8, 9, 3]), "size9/case1.2/T2=0".into()));
        }
        if lab.s(&[1, 8, 9]) == 0 {
            return Some((lab.ord(&[1, 2, 3, 5, 4, 8, 6, 7, 9]), "size9/case1.2/T3=0".into()));
        }
        return if lab.s(&[2, 3, 5]) != 0 {
            Some((lab.ord(&[1, 2, 3, 5, 4, 7, 6, 8, 9]), "size9/case1.2/a2+a3+a5!=0".into()))
        } else {
            Some((lab.ord(&[1, 2, 3, 6, 4, 7, 5, 8, 9]), "size9/case1.2/a2+a3+a5=0".into()))
        };
    }
    // Case 1.3: every triple meets Q1 in two elements
    let t1 = idx.triples[0].clone();
    let shared = intersection(&q1, &t1);
    if shared.len() != 2 {
        log::warn!("size9: case 1.3 expected |Q1 cap T1| = 2 for {a:?}");
        return None;
    }
    let rest = difference(a, &assemble(&[&q1, &t1]));
    let lab = Labels {
        group,
        l: assemble(&[&difference(&q1, &shared), &shared, &difference(&t1, &shared), &rest]),
    };
    if lab.s(&[2, 4, 6]) != 0 {
        Some((lab.ord(&[1, 5, 3, 2, 4, 6, 7, 8, 9]), "size9/case1.3/a2+a4+a6!=0".into()))
    } else {
        Some((lab.ord(&[1, 5, 3, 2, 4, 7, 6, 8, 9]), "size9/case1.3/a2+a4+a6=0".into()))
    }
}

fn size9_quad_pair_meeting_in_two(
    group: &Group,
    a: &[usize],
    q1: &[usize],
    q2: &[usize],
) -> Option<(Vec<usize>, String)> {
    // Case 2
    let shared = intersection(q1, q2);
    let rest = difference(a, &assemble(&[q1, q2]));
    let lab = Labels {
        group,
        l: assemble(&[&difference(q1, &shared), &shared, &difference(q2, &shared), &rest]),
    };
    if lab.s(&[2, 4, 7]) == 0 {
        return Some((lab.ord(&[1, 2, 3, 7, 4, 5, 6, 8, 9]), "size9/case2/T1=0".into()));
    }
    if lab.s(&[3, 4, 7]) == 0 {
        let t3 = lab.s(&[1, 3, 5]);
        let q4 = lab.s(&[4, 6, 7, 8]);
        return if t3 != 0 && q4 != 0 {
            Some((lab.ord(&[1, 3, 5, 4, 7, 6, 8, 9, 2]), "size9/case2/T2=0/T3!=0,Q4!=0".into()))
        } else if t3 != 0 {
            Some((lab.ord(&[1, 3, 5, 4, 7, 6, 9, 8, 2]), "size9/case2/T2=0/T3!=0,Q4=0".into()))
        } else {
            Some((lab.ord(&[1, 2, 3, 5, 4, 7, 6, 8, 9]), "size9/case2/T2=0/T3=0".into()))
        };
    }
    if lab.s(&[1, 6, 8, 9]) == 0 {
        return if lab.s(&[1, 3, 7]) != 0 {
            Some((lab.ord(&[1, 3, 7, 4, 5, 6, 8, 9, 2]), "size9/case2/Q3=0/a1+a3+a7!=0".into()))
        } else {
            Some((lab.ord(&[1, 4, 7, 3, 5, 6, 8, 9, 2]), "size9/case2/Q3=0/a1+a3+a7=0".into()))
        };
    }
    // T1, T2, Q3 all nonzero
    if lab.s(&[3, 5, 7]) != 0 {
        Some((lab.ord(&[1, 2, 4, 7, 3, 5, 6, 8, 9]), "size9/case2/T4!=0".into()))
    } else if lab.s(&[1, 6, 9]) != 0 {
        Some((lab.ord(&[1, 2, 7, 4, 3, 5, 8, 6, 9]), "size9/case2/T4=0,T5!=0".into()))
    } else {
        Some((lab.ord(&[1, 2, 7, 4, 3, 5, 9, 6, 8]), "size9/case2/T4=T5=0".into()))
    }
}

fn size9_quads_pairwise_meeting_in_one(
    group: &Group,
    a: &[usize],
    idx: &ZeroSumSubsetIndex,
) -> Option<(Vec<usize>, String)> {
    // Case 3
    if idx.quads.len() == 2 {
        let q1 = idx.quads[0].clone();
        let q2 = idx.quads[1].clone();
        let shared = intersection(&q1, &q2);
        let rest = difference(a, &assemble(&[&q1, &q2]));
        let lab = Labels {
            group,
            l: assemble(&[&difference(&q1, &shared), &shared, &difference(&q2, &shared), &rest]),
        };
        let st1 = lab.s(&[4, 6, 8]);
        let st2 = lab.s(&[3, 4, 5]);
        let st3 = lab.s(&[2, 3, 5]);
        let st4 = lab.s(&[1, 3, 5]);
        let st5 = lab.s(&[1, 7, 9]);
        if st1 == 0 {
            if st2 == 0 || st3 == 0 {
                return Some((lab.ord(&[2, 1, 4, 6, 3, 5, 8, 7, 9]), "size9/case3/two-quads/T1=0/T2|T3=0".into()));
            }
            let st6 = lab.s(&[1, 7, 8]);
            return if st4 == 0 {
                Some((lab.ord(&[2, 1, 4, 5, 3, 7, 9, 6, 8]), "size9/case3/two-quads/T1=0/T4=0".into()))
            } else if st6 == 0 {
                Some((lab.ord(&[2, 1, 3, 5, 4, 6, 9, 7, 8]), "size9/case3/two-quads/T1=0/T6=0".into()))
            } else {
                Some((lab.ord(&[1, 2, 3, 5, 4, 6, 9, 7, 8]), "size9/case3/two-quads/T1=0/T6!=0".into()))
            };
        }
        if st2 == 0 {
            return if st5 != 0 {
                Some((lab.ord(&[1, 3, 2, 5, 4, 6, 8, 7, 9]), "size9/case3/two-quads/T2=0/T5!=0".into()))
            } else {
                Some((lab.ord(&[2, 3, 1, 5, 4, 6, 8, 7, 9]), "size9/case3/two-quads/T2=0/T5=0".into()))
            };
        }
        let st7 = lab.s(&[2, 7, 9]);
        if st3 == 0 && st7 == 0 {
            return Some((lab.ord(&[1, 2, 7, 3, 5, 4, 6, 8, 9]), "size9/case3/two-quads/T3=T7=0".into()));
        }
        if (st3 == 0 && st7 != 0) || (st5 == 0 && st4 != 0) {
            return Some((lab.ord(&[2, 1, 3, 5, 4, 6, 8, 7, 9]), "size9/case3/two-quads/T3=0|T5=0".into()));
        }
        if st5 == 0 && st4 == 0 {
            return Some((lab.ord(&[3, 2, 1, 5, 4, 6, 8, 7, 9]), "size9/case3/two-quads/T4=T5=0".into()));
        }
        if st3 != 0 && st5 != 0 {
            return Some((lab.ord(&[1, 2, 3, 5, 4, 6, 8, 7, 9]), "size9/case3/two-quads/T3,T5!=0".into()));
        }
        return None;
    }
    if idx.quads.len() != 3 {
        log::warn!("size9: {} pairwise-1-intersecting quads (expected <= 3) for {a:?}", idx.quads.len());
        return None;
    }
    // three quads in a triangle pattern: Q1 cap Q2 = {a4}, Q2 cap Q3 = {a7},
    // Q3 cap Q1 = {a1}, the two fresh elements of Q3 are a8, a9
    let (q1, q2, q3) = (&idx.quads[0], &idx.quads[1], &idx.quads[2]);
    let s12 = intersection(q1, q2);
    let s23 = intersection(q2, q3);
    let s13 = intersection(q1, q3);
    if s12.len() != 1 || s23.len() != 1 || s13.len() != 1 {
        return None;
    }
    let lab = Labels {
        group,
        l: assemble(&[
            &s13,
            &difference(q1, &assemble(&[&s12, &s13])),
            &s12,
            &difference(q2, &assemble(&[&s12, &s23])),
            &s23,
            &difference(q3, &assemble(&[&s13, &s23])),
        ]),
    };
    let st = [lab.s(&[1, 3, 5]), lab.s(&[4, 6, 8]), lab.s(&[2, 7, 9])];
    if st.iter().all(|&x| x != 0) {
        return Some((lab.ord(&[2, 1, 3, 5, 4, 6, 8, 7, 9]), "size9/case3/three-quads/T1,T2,T3!=0".into()));
    }
    // rotate labels so the vanishing triple becomes T1 (subscripts shift by
    // 3 or 6 mod 9, which permutes the quad roles cyclically)
    let shift = if st[0] == 0 { 0 } else if st[1] == 0 { 3 } else { 6 };
    let lab = lab.rotated(shift);
    let tag = |s: &str| format!("size9/case3/three-quads/shift{shift}/{s}");
    if lab.s(&[2, 7, 9]) == 0 {
        return Some((lab.ord(&[2, 1, 4, 5, 3, 7, 9, 6, 8]), tag("T3=0")));
    }
    if lab.s(&[4, 5, 8]) == 0 {
        return if lab.s(&[3, 7, 8]) != 0 {
            Some((lab.ord(&[3, 1, 6, 5, 4, 2, 9, 7, 8]), tag("T4=0/a3+a7+a8!=0")))
        } else {
            Some((lab.ord(&[2, 1, 3, 6, 4, 5, 9, 7, 8]), tag("T4=0/a3+a7+a8=0")))
        };
    }
    Some((lab.ord(&[2, 1, 3, 6, 4, 5, 8, 7, 9]), tag("T3,T4!=0")))
}

/// Simple ordering for a subset of size <= 5 of an arbitrary finite group
/// (inverse pairs allowed), following the case analysis parameterized by the
/// number of inverse pairs p contained in A.
pub fn order_small_general(
    group: &Group,
    set: &[usize],
) -> Result<(Vec<usize>, CaseLabel), ConstructiveError> {
    if set.contains(&0) {
        return Err(ConstructiveError::IdentityInSet);
    }
    let cand = SubsetCandidate::new(group, set);
    if cand.len() > 5 {
        return Err(ConstructiveError::TooLarge(cand.len(), 5));
    }
    let a: Vec<usize> = cand.elements().to_vec();
    let k = a.len();

    // inverse pairs {x, -x} with x != -x, ordered by smaller member
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut unpaired: Vec<usize> = Vec::new();
    for &x in &a {
        let nx = group.inv(x);
        if nx != x && a.contains(&nx) {
            if x < nx {
                pairs.push((x, nx));
            }
        } else {
            unpaired.push(x);
        }
    }
    let p = pairs.len();

    let candidate: Option<(Vec<usize>, String)> = if k <= 2 {
        Some((a.clone(), "size<=2".into()))
    } else {
        // label a1, a2 = -a1 (and a3, a4 = -a3) from the pairs, the rest in
        // ambient order
        let mut l: Vec<usize> = Vec::new();
        for &(x, nx) in &pairs {
            l.push(x);
            l.push(nx);
        }
        l.extend(&unpaired);
        let lab = Labels { group, l };
        match (k, p) {
            (3, 0) => Some((lab.ord(&[1, 2, 3]), "size3/p0".into())),
            (3, 1) => Some((lab.ord(&[1, 3, 2]), "size3/p1".into())),
            (4, 0) => {
                if lab.s(&[2, 3, 4]) != 0 {
                    Some((lab.ord(&[1, 2, 3, 4]), "size4/p0/a2+a3+a4!=0".into()))
                } else {
                    Some((lab.ord(&[2, 1, 3, 4]), "size4/p0/a2+a3+a4=0".into()))
                }
            }
            (4, 1) => Some((lab.ord(&[3, 1, 4, 2]), "size4/p1".into())),
            (4, 2) => Some((lab.ord(&[1, 3, 2, 4]), "size4/p2".into())),
            (5, 0) => size5_no_pairs(&lab),
            (5, 1) => size5_one_pair(&lab),
            (5, 2) => size5_two_pairs(&lab),
            _ => None,
        }
    };
    verify_or_fallback(group, &a, "thm-small-general", candidate)
}

/// The two-branch ordering used repeatedly in the p = 0, |A| = 5 analysis.
fn size5_star(lab: &Labels<'_>, tag: &str) -> (Vec<usize>, String) {
    if lab.s(&[3, 5, 4]) != 0 {
        (lab.ord(&[2, 1, 3, 5, 4]), format!("size5/p0/{tag}/a3+a5+a4!=0"))
    } else {
        (lab.ord(&[5, 3, 2, 4, 1]), format!("size5/p0/{tag}/a3+a5+a4=0"))
    }
}

fn size5_no_pairs(lab: &Labels<'_>) -> Option<(Vec<usize>, String)> {
    let s2345 = lab.s(&[2, 3, 4, 5]);
    let s345 = lab.s(&[3, 4, 5]);
    let s234 = lab.s(&[2, 3, 4]);
    if s2345 != 0 && s345 != 0 && s234 != 0 {
        return Some((lab.ord(&[1, 2, 3, 4, 5]), "size5/p0/identity-order".into()));
    }
    if s2345 == 0 {
        if lab.s(&[1, 3, 4]) != 0 {
            return Some((lab.ord(&[2, 1, 3, 4, 5]), "size5/p0/s2345=0/a1+a3+a4!=0".into()));
        }
        return Some(size5_star(lab, "s2345=0"));
    }
    if s345 == 0 {
        if lab.s(&[1, 3, 4, 2]) != 0 {
            return Some((lab.ord(&[5, 1, 3, 4, 2]), "size5/p0/s345=0".into()));
        }
        // relabel a1'..a5' = a5, a1, a3, a4, a2 and reapply the starred branch
        let relab = Labels { group: lab.group, l: lab.ord(&[5, 1, 3, 4, 2]) };
        return Some(size5_star(&relab, "s345=0/relabel"));
    }
    // s234 == 0: relabel a1'..a5' = a1, a5, a2, a3, a4 and proceed as above
    let relab = Labels { group: lab.group, l: lab.ord(&[1, 5, 2, 3, 4]) };
    if relab.s(&[1, 3, 4, 2]) != 0 {
        return Some((relab.ord(&[5, 1, 3, 4, 2]), "size5/p0/s234=0".into()));
    }
    let relab2 = Labels { group: lab.group, l: relab.ord(&[5, 1, 3, 4, 2]) };
    Some(size5_star(&relab2, "s234=0/relabel"))
}

fn size5_one_pair(lab: &Labels<'_>) -> Option<(Vec<usize>, String)> {
    // a2 = -a1
    if lab.s(&[1, 3, 4]) != 0 && lab.s(&[2, 3, 4]) != 0 {
        return Some((lab.ord(&[5, 1, 3, 4, 2]), "size5/p1/pm-a1+a3+a4!=0".into()));
    }
    // eps a1 + a3 + a4 = 0 for exactly one sign; e labels eps a1, ne its inverse
    let (e, ne) = if lab.s(&[1, 3, 4]) == 0 { (1, 2) } else { (2, 1) };
    if lab.s(&[5, 4]) != lab.l[e - 1] {
        Some((lab.ord(&[3, e, 5, 4, ne]), "size5/p1/a5+a4!=eps-a1".into()))
    } else {
        Some((lab.ord(&[e, 5, 3, 4, ne]), "size5/p1/a5+a4=eps-a1".into()))
    }
}

fn size5_two_pairs(lab: &Labels<'_>) -> Option<(Vec<usize>, String)> {
    // a2 = -a1, a4 = -a3, a5 unpaired
    if lab.s(&[1, 3, 2, 4]) != 0 {
        return Some((lab.ord(&[5, 1, 3, 2, 4]), "size5/p2/noncommuting".into()));
    }
    if lab.s(&[3, 2, 5]) != 0 {
        Some((lab.ord(&[4, 1, 3, 2, 5]), "size5/p2/a3-a1+a5!=0".into()))
    } else {
        Some((lab.ord(&[4, 2, 3, 1, 5]), "size5/p2/a3-a1+a5=0".into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{enumerate_abelian_groups, CayleyGroup};
    use itertools::Itertools;

    #[test]
    fn zero_sum_index_z13() {
        let g = Group::cyclic(13);
        let idx = zero_sum_index(&g, &[1, 3, 9, 2, 5, 6]);
        assert_eq!(idx.triples, vec![vec![1, 3, 9], vec![2, 5, 6]]);
        assert!(idx.quads.is_empty());
    }

    #[test]
    fn empty_index_for_sum_free_set() {
        let g = Group::cyclic(13);
        let idx = zero_sum_index(&g, &[1, 2, 3]);
        assert!(idx.is_empty());
    }

    #[test]
    fn z13_example_ordering() {
        let g = Group::cyclic(13);
        let (ord, label) = order_small_abelian(&g, &[1, 3, 9, 2, 5, 6]).unwrap();
        assert!(is_simple(&g, &ord));
        assert!(!label.is_fallback());
        assert_eq!(label.branch, "size6");
        // B = {1,3,9} is the lexicographically least zero-sum triple, so the
        // labeling is a1..a3 = 1,3,9 and a4..a6 = 2,5,6
        assert_eq!(ord, vec![1, 3, 2, 9, 5, 6]);
        assert_eq!(crate::ordering::partial_sums(&g, &ord), vec![1, 4, 6, 2, 7, 0]);
    }

    #[test]
    fn no_zero_sum_subset_keeps_ambient_order() {
        // 1+2+3+5 = 11 = 0 in Z_11 and no proper subset vanishes
        let g = Group::cyclic(11);
        let (ord, label) = order_small_abelian(&g, &[1, 2, 3, 5]).unwrap();
        assert_eq!(ord, vec![1, 2, 3, 5]);
        assert_eq!(label.branch, "no-zero-sum-subset");
    }

    #[test]
    fn hypothesis_violations_rejected() {
        let g = Group::cyclic(9);
        assert_eq!(order_small_abelian(&g, &[1, 2, 3]).unwrap_err(), ConstructiveError::NonzeroSum);
        assert_eq!(
            order_small_abelian(&g, &[2, 7, 4, 5]).unwrap_err(),
            ConstructiveError::InversePairPresent
        );
        let s3 = Group::Cayley(CayleyGroup::builtin("sym", 3).unwrap());
        assert_eq!(order_small_abelian(&s3, &[1, 2]).unwrap_err(), ConstructiveError::NotAbelian);
    }

    #[test]
    fn general_small_examples() {
        let g = Group::cyclic(7);
        // pair {2,5}, p = 1
        let (ord, label) = order_small_general(&g, &[2, 5, 3]).unwrap();
        assert!(is_simple(&g, &ord));
        assert!(!label.is_fallback());
        assert_eq!(ord, vec![2, 3, 5]);

        let s3 = Group::Cayley(CayleyGroup::builtin("sym", 3).unwrap());
        let all: Vec<usize> = s3.nonidentity();
        let (ord, _) = order_small_general(&s3, &all).unwrap();
        assert!(is_simple(&s3, &ord));
    }

    #[test]
    fn general_covers_all_subsets_of_order_up_to_8_groups() {
        let mut groups: Vec<Group> = Vec::new();
        for n in 2..=8u64 {
            for spec in enumerate_abelian_groups(n) {
                groups.push(Group::from_spec(&spec));
            }
        }
        groups.push(Group::Cayley(CayleyGroup::builtin("sym", 3).unwrap()));
        groups.push(Group::Cayley(CayleyGroup::builtin("quaternion", 2).unwrap()));
        groups.push(Group::Cayley(CayleyGroup::builtin("dihedral", 4).unwrap()));
        for g in &groups {
            let n = g.order();
            for k in 1..=5usize.min(n - 1) {
                for set in (1..n).combinations(k) {
                    let (ord, _) = order_small_general(g, &set)
                        .unwrap_or_else(|e| panic!("{} set {set:?}: {e}", g.id()));
                    assert!(is_simple(g, &ord), "{} set {set:?} -> {ord:?}", g.id());
                }
            }
        }
    }

    #[test]
    fn abelian_constructive_matches_oracle_on_small_groups() {
        for n in 2..=11u64 {
            for spec in enumerate_abelian_groups(n) {
                let g = Group::from_spec(&spec);
                let n = g.order();
                for k in 3..=9usize.min(n - 1) {
                    for set in (1..n).combinations(k) {
                        let cand = SubsetCandidate::new(&g, &set);
                        if !cand.sum_is_zero || cand.contains_inverse_pair {
                            continue;
                        }
                        let (ord, label) = order_small_abelian(&g, &set).unwrap();
                        assert!(is_simple(&g, &ord), "{} set {set:?}", g.id());
                        assert!(!label.is_fallback(), "{} set {set:?} fell back ({})", g.id(), label.branch);
                    }
                }
            }
        }
    }

    #[test]
    fn intersection_invariants_hold_under_hypotheses() {
        // structural lemmas on the zero-sum index for qualifying 9-sets
        for spec in enumerate_abelian_groups(11).iter().chain(enumerate_abelian_groups(13).iter()) {
            let g = Group::from_spec(spec);
            let n = g.order();
            for set in (1..n).combinations(9) {
                let cand = SubsetCandidate::new(&g, &set);
                if !cand.sum_is_zero || cand.contains_inverse_pair {
                    continue;
                }
                let idx = zero_sum_index(&g, &set);
                for (i, qi) in idx.quads.iter().enumerate() {
                    for qj in &idx.quads[i + 1..] {
                        let m = intersection(qi, qj).len();
                        assert!(m == 1 || m == 2, "quad-quad {m}");
                    }
                    for t in &idx.triples {
                        let m = intersection(qi, t).len();
                        assert!(m == 1 || m == 2, "quad-triple {m}");
                    }
                }
                for (i, ti) in idx.triples.iter().enumerate() {
                    for tj in &idx.triples[i + 1..] {
                        let m = intersection(ti, tj).len();
                        assert!(m <= 1, "triple-triple {m}");
                        if m == 0 {
                            // disjoint-triple closure
                            let rest = difference(&set, &assemble(&[ti, tj]));
                            assert_eq!(g.sum(&rest), 0);
                        }
                    }
                }
            }
        }
    }
}
