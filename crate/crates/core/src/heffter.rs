//! Heffter systems D(v,k), base-cycle construction from simple orderings, and
//! development into cyclic k-cycle systems decomposing K_v.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::constructive::order_small_abelian;
use crate::group::Group;
use crate::ordering::{find_simple_ordering, is_simple, partial_sums, ExhaustionCertificate, SearchOutcome};

/// A partition of a half-set of Z_v into zero-sum parts of size k.
/// Residues are stored normalized into {1..v-1}.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeffterSystem {
    pub v: u64,
    pub k: usize,
    pub parts: Vec<Vec<usize>>,
}

/// First invariant violated by a candidate (v, k, parts) triple.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HeffterViolation {
    #[error("v = {0} must be an odd integer >= 3")]
    BadV(u64),
    #[error("part size k = {0} must be >= 3")]
    BadK(usize),
    #[error("2k = {two_k} does not divide v - 1 = {vm1}")]
    Divisibility { two_k: usize, vm1: u64 },
    #[error("expected {expected} parts of size {k}, found {found} parts")]
    WrongPartCount { expected: usize, found: usize, k: usize },
    #[error("part {index} has size {size}, expected {k}")]
    WrongPartSize { index: usize, size: usize, k: usize },
    #[error("element {0} is 0 mod v and cannot lie in a half-set")]
    ZeroElement(i64),
    #[error("element {0} appears more than once")]
    RepeatedElement(usize),
    #[error("inverse pair {{{x}, {y}}} = {{x, -x}} contained in the union")]
    InversePair { x: usize, y: usize },
    #[error("part {index} sums to {sum} mod v, expected 0")]
    NonzeroPartSum { index: usize, sum: usize },
}

/// Normalize a signed residue into {0..v-1}.
pub fn normalize_residue(v: u64, x: i64) -> usize {
    x.rem_euclid(v as i64) as usize
}

/// Check every D(v,k) invariant, returning the typed system or the first
/// violation with the offending elements.
pub fn validate_heffter(v: u64, k: usize, parts: &[Vec<i64>]) -> Result<HeffterSystem, HeffterViolation> {
    if v < 3 || v % 2 == 0 {
        return Err(HeffterViolation::BadV(v));
    }
    if k < 3 {
        return Err(HeffterViolation::BadK(k));
    }
    let vm1 = v - 1;
    if vm1 % (2 * k as u64) != 0 {
        return Err(HeffterViolation::Divisibility { two_k: 2 * k, vm1 });
    }
    let expected = (vm1 / (2 * k as u64)) as usize;
    if parts.len() != expected {
        return Err(HeffterViolation::WrongPartCount { expected, found: parts.len(), k });
    }
    let mut seen = vec![false; v as usize];
    let mut normalized: Vec<Vec<usize>> = Vec::with_capacity(parts.len());
    for (index, part) in parts.iter().enumerate() {
        if part.len() != k {
            return Err(HeffterViolation::WrongPartSize { index, size: part.len(), k });
        }
        let mut np = Vec::with_capacity(k);
        for &x in part {
            let r = normalize_residue(v, x);
            if r == 0 {
                return Err(HeffterViolation::ZeroElement(x));
            }
            if seen[r] {
                return Err(HeffterViolation::RepeatedElement(r));
            }
            if seen[v as usize - r] {
                return Err(HeffterViolation::InversePair { x: v as usize - r, y: r });
            }
            seen[r] = true;
            np.push(r);
        }
        np.sort_unstable();
        normalized.push(np);
    }
    for (index, part) in normalized.iter().enumerate() {
        let sum = part.iter().map(|&x| x as u64).sum::<u64>() % v;
        if sum != 0 {
            return Err(HeffterViolation::NonzeroPartSum { index, sum: sum as usize });
        }
    }
    Ok(HeffterSystem { v, k, parts: normalized })
}

impl HeffterSystem {
    /// Parse the text format: line 1 = "v k", one part per following line as
    /// space-separated signed residues.
    pub fn parse(text: &str) -> Result<Self, String> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or("empty input")?;
        let mut it = header.split_whitespace();
        let v: u64 = it
            .next()
            .ok_or("missing v")?
            .parse()
            .map_err(|e| format!("bad v: {e}"))?;
        let k: usize = it
            .next()
            .ok_or("missing k")?
            .parse()
            .map_err(|e| format!("bad k: {e}"))?;
        if it.next().is_some() {
            return Err("header must be exactly \"v k\"".into());
        }
        let mut parts: Vec<Vec<i64>> = Vec::new();
        for line in lines {
            let part: Result<Vec<i64>, _> = line.split_whitespace().map(str::parse).collect();
            parts.push(part.map_err(|e| format!("bad residue: {e}"))?);
        }
        validate_heffter(v, k, &parts).map_err(|e| e.to_string())
    }

    pub fn serialize_text(&self) -> String {
        let mut out = format!("{} {}\n", self.v, self.k);
        for part in &self.parts {
            let row: Vec<String> = part.iter().map(|x| x.to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for HeffterSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.serialize_text())
    }
}

/// A k-cycle on vertices mod v. Two cycles are equal iff they agree up to
/// rotation and reflection; the canonical form puts the least vertex first
/// and the lesser of its two neighbors second.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Cycle {
    pub v: u64,
    pub vertices: Vec<usize>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CycleError {
    #[error("cycle needs at least 3 vertices, got {0}")]
    TooShort(usize),
    #[error("vertex {0} repeated")]
    RepeatedVertex(usize),
    #[error("vertex {0} out of range mod {1}")]
    OutOfRange(usize, u64),
}

impl Cycle {
    pub fn new(v: u64, vertices: Vec<usize>) -> Result<Self, CycleError> {
        if vertices.len() < 3 {
            return Err(CycleError::TooShort(vertices.len()));
        }
        let mut seen = vec![false; v as usize];
        for &c in &vertices {
            if c >= v as usize {
                return Err(CycleError::OutOfRange(c, v));
            }
            if std::mem::replace(&mut seen[c], true) {
                return Err(CycleError::RepeatedVertex(c));
            }
        }
        Ok(Cycle { v, vertices })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Canonical representative: least vertex first, lesser neighbor second.
    pub fn canonical(&self) -> Vec<usize> {
        let k = self.vertices.len();
        let (pos, _) = self
            .vertices
            .iter()
            .enumerate()
            .min_by_key(|&(_, &c)| c)
            .expect("nonempty cycle");
        let forward: Vec<usize> = (0..k).map(|i| self.vertices[(pos + i) % k]).collect();
        let backward: Vec<usize> = (0..k).map(|i| self.vertices[(pos + k - i) % k]).collect();
        if forward[1] <= backward[1] {
            forward
        } else {
            backward
        }
    }

    /// Translate every vertex by t mod v.
    pub fn translate(&self, t: usize) -> Cycle {
        let v = self.v as usize;
        Cycle { v: self.v, vertices: self.vertices.iter().map(|&c| (c + t) % v).collect() }
    }

    /// Undirected edges as (min, max) vertex pairs.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let k = self.vertices.len();
        (0..k)
            .map(|i| {
                let a = self.vertices[i];
                let b = self.vertices[(i + 1) % k];
                (a.min(b), a.max(b))
            })
            .collect()
    }
}

impl PartialEq for Cycle {
    fn eq(&self, other: &Self) -> bool {
        self.v == other.v && self.canonical() == other.canonical()
    }
}

impl Eq for Cycle {}

/// Multiset of residues mod v with multiplicities: the list of differences
/// ΔC = {±(c_{h+1} - c_h)} of a cycle, or a union of such lists.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct DifferenceList {
    pub v: u64,
    pub counts: BTreeMap<usize, usize>,
}

impl DifferenceList {
    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn merge(&mut self, other: &DifferenceList) {
        assert_eq!(self.v, other.v, "difference lists over different moduli");
        for (&r, &m) in &other.counts {
            *self.counts.entry(r).or_insert(0) += m;
        }
    }

    /// True iff the multiset is exactly Z_v \ {0}, each residue once.
    pub fn covers_all_nonzero_once(&self) -> bool {
        self.total() == self.v as usize - 1
            && (1..self.v as usize).all(|r| self.counts.get(&r) == Some(&1))
    }

    /// True iff the multiset equals {±x : x in part} for the given residues.
    pub fn equals_signed_set(&self, part: &[usize]) -> bool {
        let v = self.v as usize;
        let mut expect: BTreeMap<usize, usize> = BTreeMap::new();
        for &x in part {
            *expect.entry(x % v).or_insert(0) += 1;
            *expect.entry((v - x % v) % v).or_insert(0) += 1;
        }
        self.counts == expect
    }
}

/// ΔC: the 2k-entry multiset of signed consecutive differences around C.
pub fn difference_list(cycle: &Cycle) -> DifferenceList {
    let v = cycle.v as usize;
    let k = cycle.vertices.len();
    let mut counts = BTreeMap::new();
    for i in 0..k {
        let a = cycle.vertices[i];
        let b = cycle.vertices[(i + 1) % k];
        let d = (b + v - a) % v;
        *counts.entry(d).or_insert(0) += 1;
        *counts.entry((v - d) % v).or_insert(0) += 1;
    }
    DifferenceList { v: cycle.v, counts }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrderingToCycleError {
    #[error("ordering is not simple: partial sums collide")]
    NotSimple,
    #[error("ordering sums to {0}, not 0 mod v: the walk does not close")]
    NonzeroSum(usize),
}

/// Vertices of the cycle are the partial sums of ω, ending at 0.
/// ΔC = ±ω by construction.
pub fn ordering_to_cycle(v: u64, ordering: &[usize]) -> Result<Cycle, OrderingToCycleError> {
    let g = Group::cyclic(v);
    if !is_simple(&g, ordering) {
        return Err(OrderingToCycleError::NotSimple);
    }
    let sums = partial_sums(&g, ordering);
    match sums.last() {
        Some(&s) if s != 0 => return Err(OrderingToCycleError::NonzeroSum(s)),
        _ => {}
    }
    Cycle::new(v, sums).map_err(|_| OrderingToCycleError::NotSimple)
}

/// Base cycles of a Heffter system together with the per-part simple
/// orderings that produced them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseCycles {
    pub v: u64,
    pub cycles: Vec<Cycle>,
    pub orderings: Vec<Vec<usize>>,
    /// which strategy ordered each part: "length-sorted", "constructive", or
    /// "search"
    pub strategies: Vec<String>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BaseCycleError {
    #[error(
        "part {part:?} of Z_{v} admits no simple ordering (searched {searched} orderings); \
         candidate zero-sum conjecture counterexample"
    )]
    NoSimpleOrdering { v: u64, part: Vec<usize>, searched: u128 },
    #[error("union of difference lists is not Z_{0} \\ {{0}}")]
    IncompleteDifferences(u64),
}

/// Order every part simply and convert it to a cycle; verify the union of the
/// difference lists is Z_v \ {0}.
///
/// Ordering strategy per part: first try the part sorted ascending by edge
/// length min(x, v-x) — the natural ordering in worked small examples — then
/// the constructive small-set analysis, then exhaustive search. A part with
/// no simple ordering at all is a research event: it is logged with its
/// exhaustion certificate before failing.
pub fn build_base_cycles(system: &HeffterSystem) -> Result<BaseCycles, BaseCycleError> {
    let v = system.v;
    let g = Group::cyclic(v);
    let mut cycles = Vec::with_capacity(system.parts.len());
    let mut orderings = Vec::with_capacity(system.parts.len());
    let mut strategies = Vec::with_capacity(system.parts.len());
    for part in &system.parts {
        let (ordering, strategy) = order_part(&g, v, part)?;
        let cycle = ordering_to_cycle(v, &ordering).expect("verified simple zero-sum ordering");
        debug_assert!(difference_list(&cycle).equals_signed_set(part));
        cycles.push(cycle);
        orderings.push(ordering);
        strategies.push(strategy);
    }
    let mut all = DifferenceList { v, counts: BTreeMap::new() };
    for c in &cycles {
        all.merge(&difference_list(c));
    }
    if !all.covers_all_nonzero_once() {
        return Err(BaseCycleError::IncompleteDifferences(v));
    }
    Ok(BaseCycles { v, cycles, orderings, strategies })
}

fn order_part(g: &Group, v: u64, part: &[usize]) -> Result<(Vec<usize>, String), BaseCycleError> {
    let mut by_length = part.to_vec();
    by_length.sort_by_key(|&x| x.min(v as usize - x));
    if is_simple(g, &by_length) {
        return Ok((by_length, "length-sorted".into()));
    }
    if part.len() <= 9 {
        if let Ok((ordering, _)) = order_small_abelian(g, part) {
            return Ok((ordering, "constructive".into()));
        }
    }
    match find_simple_ordering(g, part, false) {
        SearchOutcome::Found { ordering, .. } => Ok((ordering, "search".into())),
        SearchOutcome::NotFound(ExhaustionCertificate { search_space, .. }) => {
            log::error!(
                "part {part:?} of Z_{v} has no simple ordering; exhausted {search_space} orderings"
            );
            Err(BaseCycleError::NoSimpleOrdering { v, part: part.to_vec(), searched: search_space })
        }
    }
}

/// A set of cycles on Z_v; `verified_decomposition` is set once edge
/// exactness over K_v has been checked.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleSystem {
    pub v: u64,
    pub cycles: Vec<Cycle>,
    pub verified_decomposition: bool,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DevelopError {
    #[error("edge ({0}, {1}) covered more than once")]
    EdgeCoveredTwice(usize, usize),
    #[error("edge ({0}, {1}) not covered")]
    EdgeUncovered(usize, usize),
}

/// Develop base cycles through the translation action of Z_v and verify the
/// result decomposes K_v edge-exactly.
pub fn develop_system(base: &[Cycle], v: u64) -> Result<CycleSystem, DevelopError> {
    let n = v as usize;
    let mut cycles = Vec::with_capacity(base.len() * n);
    for c in base {
        for t in 0..n {
            cycles.push(c.translate(t));
        }
    }
    let mut covered = vec![vec![false; n]; n];
    for c in &cycles {
        for (a, b) in c.edges() {
            if std::mem::replace(&mut covered[a][b], true) {
                return Err(DevelopError::EdgeCoveredTwice(a, b));
            }
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            if !covered[a][b] {
                return Err(DevelopError::EdgeUncovered(a, b));
            }
        }
    }
    Ok(CycleSystem { v, cycles, verified_decomposition: true })
}

/// JSON-serializable certificate for a full Heffter -> decomposition run.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DecompositionCertificate {
    pub v: u64,
    pub k: usize,
    pub parts: Vec<Vec<usize>>,
    pub orderings: Vec<Vec<usize>>,
    pub base_cycles: Vec<Vec<usize>>,
    pub cycle_count: usize,
    pub edges_covered: usize,
}

/// Run the full pipeline: base cycles, development, edge-exactness; package
/// the evidence.
pub fn decompose(system: &HeffterSystem) -> Result<(BaseCycles, CycleSystem, DecompositionCertificate), String> {
    let base = build_base_cycles(system).map_err(|e| e.to_string())?;
    let developed = develop_system(&base.cycles, system.v).map_err(|e| e.to_string())?;
    let edges_covered = developed.cycles.iter().map(Cycle::len).sum();
    let cert = DecompositionCertificate {
        v: system.v,
        k: system.k,
        parts: system.parts.clone(),
        orderings: base.orderings.clone(),
        base_cycles: base.cycles.iter().map(Cycle::canonical).collect(),
        cycle_count: developed.cycles.len(),
        edges_covered,
    };
    Ok((base, developed, cert))
}

/// Backtracking search for a Heffter system D(v,k): choose one of {x, v-x}
/// per length class and partition the choices into zero-sum k-parts. Parts
/// are built with ascending class indices, each new part anchored at the
/// smallest unused class, so the first system found is deterministic.
pub fn find_heffter_system(v: u64, k: usize) -> Result<Option<HeffterSystem>, HeffterViolation> {
    if v < 3 || v % 2 == 0 {
        return Err(HeffterViolation::BadV(v));
    }
    if k < 3 {
        return Err(HeffterViolation::BadK(k));
    }
    if (v - 1) % (2 * k as u64) != 0 {
        return Err(HeffterViolation::Divisibility { two_k: 2 * k, vm1: v - 1 });
    }
    let classes = ((v - 1) / 2) as usize;
    let mut used = vec![false; classes + 1]; // 1-based length classes
    let mut parts: Vec<Vec<usize>> = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    let found = fill_parts(v, k, classes, &mut used, &mut parts, &mut current);
    if !found {
        return Ok(None);
    }
    Ok(Some(HeffterSystem {
        v,
        k,
        parts: parts
            .into_iter()
            .map(|mut p| {
                p.sort_unstable();
                p
            })
            .collect(),
    }))
}

fn fill_parts(
    v: u64,
    k: usize,
    classes: usize,
    used: &mut [bool],
    parts: &mut Vec<Vec<usize>>,
    current: &mut Vec<usize>,
) -> bool {
    let vu = v as usize;
    if current.is_empty() {
        match (1..=classes).find(|&c| !used[c]) {
            None => return true, // all classes consumed; partition complete
            Some(c) => {
                for r in [c, vu - c] {
                    used[c] = true;
                    current.push(r);
                    if fill_parts(v, k, classes, used, parts, current) {
                        return true;
                    }
                    current.pop();
                    used[c] = false;
                }
                return false;
            }
        }
    }
    if current.len() == k {
        if current.iter().sum::<usize>() % vu != 0 {
            return false;
        }
        parts.push(current.clone());
        let done = {
            let mut fresh = Vec::new();
            fill_parts(v, k, classes, used, parts, &mut fresh)
        };
        if done {
            return true;
        }
        parts.pop();
        return false;
    }
    // extend the current part with a representative of a class above the
    // last one used in it (classes within a part ascend)
    let last_class = {
        let r = *current.last().unwrap();
        r.min(vu - r)
    };
    let remaining = k - current.len();
    for c in last_class + 1..=classes {
        if used[c] {
            continue;
        }
        // feasibility: enough classes left above c to finish this part
        if classes - c < remaining - 1 {
            break;
        }
        for r in [c, vu - c] {
            used[c] = true;
            current.push(r);
            if fill_parts(v, k, classes, used, parts, current) {
                return true;
            }
            current.pop();
            used[c] = false;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d25_parts() -> Vec<Vec<i64>> {
        vec![vec![3, 1, 4, -5, 10, 12], vec![2, 7, -9, 6, 8, 11]]
    }

    #[test]
    fn validate_paper_example() {
        let h = validate_heffter(25, 6, &d25_parts()).unwrap();
        assert_eq!(h.parts, vec![vec![1, 3, 4, 10, 12, 20], vec![2, 6, 7, 8, 11, 16]]);
    }

    #[test]
    fn validate_bad_part_sum() {
        // 2+7-9+6+8+14 = 28, not 0 mod 25
        let parts = vec![vec![3, 1, 4, -5, 10, 12], vec![2, 7, -9, 6, 8, 14]];
        match validate_heffter(25, 6, &parts) {
            Err(HeffterViolation::NonzeroPartSum { index: 1, sum: 3 }) => {}
            other => panic!("expected part-sum violation, got {other:?}"),
        }
    }

    #[test]
    fn validate_classic_triple() {
        let h = validate_heffter(7, 3, &[vec![1, 2, 4]]).unwrap();
        assert_eq!(h.parts, vec![vec![1, 2, 4]]);
    }

    #[test]
    fn validate_rejects_inverse_pair_and_repeats() {
        match validate_heffter(13, 3, &[vec![1, 3, 9], vec![2, 12, 11]]) {
            Err(HeffterViolation::InversePair { x: 1, y: 12 }) => {}
            other => panic!("{other:?}"),
        }
        match validate_heffter(13, 3, &[vec![1, 3, 9], vec![1, 5, 7]]) {
            Err(HeffterViolation::RepeatedElement(1)) => {}
            other => panic!("{other:?}"),
        }
        assert!(matches!(validate_heffter(12, 3, &[]), Err(HeffterViolation::BadV(12))));
        assert!(matches!(
            validate_heffter(25, 5, &d25_parts()),
            Err(HeffterViolation::Divisibility { .. })
        ));
        assert!(matches!(
            validate_heffter(25, 4, &d25_parts()),
            Err(HeffterViolation::WrongPartCount { expected: 3, found: 2, .. })
        ));
    }

    #[test]
    fn ordering_to_cycle_paper_examples() {
        let c1 = ordering_to_cycle(25, &[1, 3, 4, 20, 10, 12]).unwrap();
        assert_eq!(c1.vertices, vec![1, 4, 8, 3, 13, 0]);
        let c2 = ordering_to_cycle(25, &[2, 6, 7, 8, 16, 11]).unwrap();
        assert_eq!(c2.vertices, vec![2, 8, 15, 23, 14, 0]);
        let c3 = ordering_to_cycle(7, &[1, 2, 4]).unwrap();
        assert_eq!(c3.vertices, vec![1, 3, 0]);
    }

    #[test]
    fn ordering_to_cycle_rejections() {
        assert_eq!(
            ordering_to_cycle(25, &[1, 4, 20, 3, 10, 12]).unwrap_err(),
            OrderingToCycleError::NotSimple
        );
        assert_eq!(
            ordering_to_cycle(25, &[1, 3, 4]).unwrap_err(),
            OrderingToCycleError::NonzeroSum(8)
        );
    }

    #[test]
    fn cycle_canonical_form_and_equality() {
        let a = Cycle::new(25, vec![1, 4, 8, 3, 13, 0]).unwrap();
        assert_eq!(a.canonical(), vec![0, 1, 4, 8, 3, 13]);
        let rotated = Cycle::new(25, vec![3, 13, 0, 1, 4, 8]).unwrap();
        let reflected = Cycle::new(25, vec![0, 13, 3, 8, 4, 1]).unwrap();
        assert_eq!(a, rotated);
        assert_eq!(a, reflected);
        let other = Cycle::new(25, vec![1, 4, 8, 3, 0, 13]).unwrap();
        assert_ne!(a, other);
    }

    #[test]
    fn difference_list_paper_example() {
        let c1 = Cycle::new(25, vec![1, 4, 8, 3, 13, 0]).unwrap();
        let d1 = difference_list(&c1);
        assert_eq!(d1.total(), 12);
        assert!(d1.equals_signed_set(&[1, 3, 4, 20, 10, 12]));
        // invariance under rotation/reflection and translation
        let r = Cycle::new(25, vec![0, 13, 3, 8, 4, 1]).unwrap();
        assert_eq!(difference_list(&r), d1);
        assert_eq!(difference_list(&c1.translate(7)), d1);

        let c2 = Cycle::new(25, vec![2, 8, 15, 23, 14, 0]).unwrap();
        let mut all = d1.clone();
        all.merge(&difference_list(&c2));
        assert!(all.covers_all_nonzero_once());
    }

    #[test]
    fn base_cycles_match_paper() {
        let h = validate_heffter(25, 6, &d25_parts()).unwrap();
        let base = build_base_cycles(&h).unwrap();
        assert_eq!(base.cycles[0], Cycle::new(25, vec![1, 4, 8, 3, 13, 0]).unwrap());
        assert_eq!(base.cycles[1], Cycle::new(25, vec![2, 8, 15, 23, 14, 0]).unwrap());
        assert_eq!(base.strategies, vec!["length-sorted", "length-sorted"]);
    }

    #[test]
    fn base_cycles_small_systems() {
        let h = validate_heffter(7, 3, &[vec![1, 2, 4]]).unwrap();
        let base = build_base_cycles(&h).unwrap();
        assert_eq!(base.cycles[0], Cycle::new(7, vec![1, 3, 0]).unwrap());

        let h13 = validate_heffter(13, 3, &[vec![1, 3, 9], vec![2, 5, 6]]).unwrap();
        let base13 = build_base_cycles(&h13).unwrap();
        let mut all = DifferenceList { v: 13, counts: BTreeMap::new() };
        for c in &base13.cycles {
            all.merge(&difference_list(c));
        }
        assert!(all.covers_all_nonzero_once());
    }

    #[test]
    fn develop_k7_triangles() {
        let base = vec![Cycle::new(7, vec![1, 3, 0]).unwrap()];
        let sys = develop_system(&base, 7).unwrap();
        assert_eq!(sys.cycles.len(), 7);
        assert_eq!(sys.cycles.iter().map(Cycle::len).sum::<usize>(), 21);
        assert!(sys.verified_decomposition);
    }

    #[test]
    fn develop_k25_decomposition() {
        let h = validate_heffter(25, 6, &d25_parts()).unwrap();
        let (_, sys, cert) = decompose(&h).unwrap();
        assert_eq!(sys.cycles.len(), 50);
        assert_eq!(cert.cycle_count, 50);
        assert_eq!(cert.edges_covered, 300);
    }

    #[test]
    fn develop_detects_bad_base() {
        // two translates of the same cycle share edge structure
        let base = vec![Cycle::new(7, vec![1, 3, 0]).unwrap(), Cycle::new(7, vec![2, 4, 1]).unwrap()];
        assert!(matches!(develop_system(&base, 7), Err(DevelopError::EdgeCoveredTwice(..))));
    }

    #[test]
    fn find_system_small() {
        let h = find_heffter_system(7, 3).unwrap().unwrap();
        assert_eq!(h.parts, vec![vec![1, 2, 4]]);
        let h13 = find_heffter_system(13, 3).unwrap().unwrap();
        assert_eq!(h13.parts.len(), 2);
        assert!(validate_heffter(
            13,
            3,
            &h13.parts.iter().map(|p| p.iter().map(|&x| x as i64).collect()).collect::<Vec<_>>()
        )
        .is_ok());
        let h25 = find_heffter_system(25, 6).unwrap().unwrap();
        assert_eq!(h25.parts.len(), 2);
        assert!(build_base_cycles(&h25).is_ok());
        assert!(matches!(find_heffter_system(9, 3), Err(HeffterViolation::Divisibility { .. })));
        assert!(matches!(find_heffter_system(8, 3), Err(HeffterViolation::BadV(8))));
    }

    #[test]
    fn parse_and_serialize_roundtrip() {
        let text = "25 6\n3 1 4 -5 10 12\n2 7 -9 6 8 11\n";
        let h = HeffterSystem::parse(text).unwrap();
        assert_eq!(h.v, 25);
        let round = HeffterSystem::parse(&h.serialize_text()).unwrap();
        assert_eq!(h, round);
        assert!(HeffterSystem::parse("").is_err());
        assert!(HeffterSystem::parse("25 6\n1 2 3\n").is_err());
    }
}
