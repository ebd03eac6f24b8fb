//! Batch verification drivers: enumerate every qualifying subset A of each
//! group in a family and confirm a simple (optionally zero-free) ordering
//! exists, producing per-group tallies, counterexample certificates, and a
//! resumable checkpoint.

use std::path::Path;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::constructive::{order_small_abelian, order_small_general};
use crate::group::{enumerate_abelian_groups, CayleyGroup, Group};
use crate::ordering::{find_simple_ordering, is_simple, is_simple_zero_free, SearchOutcome, SubsetCandidate};

/// Which conjecture's hypothesis filter and ordering requirement to apply.
///
/// - `Alspach`: admit A with sum != 0 (nonabelian reading: no ordering of A
///   multiplies out to the identity); require a zero-free simple ordering.
/// - `Adms`: admit every subset; require a simple ordering.
/// - `ZeroSum`: abelian only; admit A with sum = 0 and no inverse pair;
///   require a simple ordering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Conjecture {
    Alspach,
    Adms,
    ZeroSum,
}

impl Conjecture {
    pub fn tag(self) -> &'static str {
        match self {
            Conjecture::Alspach => "alspach",
            Conjecture::Adms => "adms",
            Conjecture::ZeroSum => "zero-sum",
        }
    }

    pub fn zero_free(self) -> bool {
        matches!(self, Conjecture::Alspach)
    }
}

impl std::str::FromStr for Conjecture {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "alspach" => Ok(Conjecture::Alspach),
            "adms" => Ok(Conjecture::Adms),
            "zero-sum" | "zero_sum" | "zerosum" => Ok(Conjecture::ZeroSum),
            other => Err(format!("unknown conjecture {other:?}")),
        }
    }
}

/// The groups a job sweeps.
#[derive(Debug, Clone)]
pub enum GroupFamily {
    /// every abelian isomorphism class of order 2..=n
    AbelianUpTo(u64),
    /// cyclic groups Z_2..=Z_n
    CyclicUpTo(u64),
    /// explicit Cayley groups (builtin or loaded from table files)
    CayleyList(Vec<CayleyGroup>),
}

impl GroupFamily {
    pub fn groups(&self) -> Vec<Group> {
        match self {
            GroupFamily::AbelianUpTo(n) => (2..=*n)
                .flat_map(|o| enumerate_abelian_groups(o).into_iter().map(|s| Group::from_spec(&s)))
                .collect(),
            GroupFamily::CyclicUpTo(n) => (2..=*n).map(Group::cyclic).collect(),
            GroupFamily::CayleyList(list) => list.iter().cloned().map(Group::Cayley).collect(),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            GroupFamily::AbelianUpTo(n) => format!("abelian-up-to-{n}"),
            GroupFamily::CyclicUpTo(n) => format!("cyclic-up-to-{n}"),
            GroupFamily::CayleyList(list) => {
                let ids: Vec<String> = list
                    .iter()
                    .map(|g| format!("{}#{:016x}", g.name(), fnv(g.serialize().as_bytes())))
                    .collect();
                format!("cayley[{}]", ids.join(","))
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerificationJob {
    pub conjecture: Conjecture,
    pub family: GroupFamily,
    /// optional cap on |A|
    pub subset_size_limit: Option<usize>,
    pub store_witnesses: bool,
}

impl VerificationJob {
    /// Stable content hash identifying the job for checkpoint compatibility.
    pub fn hash(&self) -> u64 {
        let desc = format!(
            "{}|{}|{:?}|{}",
            self.conjecture.tag(),
            self.family.describe(),
            self.subset_size_limit,
            self.store_witnesses
        );
        fnv(desc.as_bytes())
    }
}

/// FNV-1a, used for job identity (stable across runs and platforms).
fn fnv(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

/// A subset with no qualifying ordering, plus the exhaustion certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub group: String,
    pub subset: Vec<usize>,
    /// characteristic bitmask over nonidentity elements (bit i = element i+1)
    pub mask: u64,
    /// number of orderings ruled out (|A|!)
    pub search_space: u128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub group: String,
    pub mask: u64,
    pub ordering: Vec<usize>,
}

/// Per-group tallies. `subsets_examined` counts only subsets passing the
/// hypothesis filter and always equals `witnesses + counterexamples.len()`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupReport {
    pub group: String,
    pub order: usize,
    pub subsets_examined: u64,
    pub witnesses: u64,
    pub constructive_hits: u64,
    pub search_hits: u64,
    pub counterexamples: Vec<Counterexample>,
    pub wall_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub conjecture: Conjecture,
    pub family: String,
    pub job_hash: String,
    pub groups: Vec<GroupReport>,
    /// false when the wall-clock budget expired before the sweep finished
    pub complete: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<WitnessRecord>>,
}

impl VerificationReport {
    pub fn counterexample_count(&self) -> usize {
        self.groups.iter().map(|g| g.counterexamples.len()).sum()
    }
}

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("checkpoint {path} does not match this job (found hash {found}, expected {expected})")]
    CheckpointMismatch { path: String, found: String, expected: String },
    #[error("checkpoint {path} is corrupt: {detail}")]
    CheckpointCorrupt { path: String, detail: String },
    #[error("io error on {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("the zero-sum filter needs an abelian group, {0} is not")]
    NonabelianZeroSum(String),
    #[error("group of order {0} exceeds the subset-enumeration limit of 64 nonidentity elements")]
    TooLarge(usize),
}

/// Resumable position: per-group single-integer cursor over subset bitmasks.
#[derive(Debug, Clone, Serialize, Deserialize)]
struct Checkpoint {
    job_hash: String,
    completed: Vec<GroupReport>,
    current: Option<CurrentGroup>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct CurrentGroup {
    group_index: usize,
    group: String,
    /// next unexamined subset bitmask
    cursor: u64,
    subsets_examined: u64,
    witnesses: u64,
    constructive_hits: u64,
    search_hits: u64,
    counterexamples: Vec<Counterexample>,
    wall_ms: u64,
}

/// Outcome for one subset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubsetOutcome {
    Witness { ordering: Vec<usize>, constructive: bool },
    Counterexample { search_space: u128 },
}

/// Does the hypothesis filter of `conjecture` admit this subset?
pub fn filter_admits(conjecture: Conjecture, group: &Group, cand: &SubsetCandidate) -> bool {
    match conjecture {
        Conjecture::Adms => true,
        Conjecture::ZeroSum => cand.sum_is_zero && !cand.contains_inverse_pair,
        Conjecture::Alspach => {
            if group.is_abelian() {
                !cand.sum_is_zero
            } else {
                // nonabelian reading of "sum != 0": no ordering of A has
                // identity total
                !some_ordering_sums_to_identity(group, cand.elements())
            }
        }
    }
}

/// Can some left-to-right product of all elements of `set` (each used once)
/// equal the identity? Memoized DFS over (used-mask, accumulator) states.
pub fn some_ordering_sums_to_identity(group: &Group, set: &[usize]) -> bool {
    let k = set.len();
    let n = group.order();
    let mut seen = vec![false; (1usize << k) * n];
    fn dfs(group: &Group, set: &[usize], mask: usize, acc: usize, seen: &mut [bool]) -> bool {
        if mask == (1 << set.len()) - 1 {
            return acc == 0;
        }
        for (i, &a) in set.iter().enumerate() {
            if mask & (1 << i) != 0 {
                continue;
            }
            let nm = mask | (1 << i);
            let na = group.op(acc, a);
            let state = nm * group.order() + na;
            if seen[state] {
                continue;
            }
            seen[state] = true;
            if dfs(group, set, nm, na, seen) {
                return true;
            }
        }
        false
    }
    dfs(group, set, 0, 0, &mut seen)
}

/// Decide one subset: constructive path first where it applies, exhaustive
/// search otherwise. The returned witness is always re-verified.
pub fn check_subset(conjecture: Conjecture, group: &Group, cand: &SubsetCandidate) -> SubsetOutcome {
    let set = cand.elements();
    let zero_free = conjecture.zero_free();
    if !zero_free {
        if conjecture == Conjecture::ZeroSum && group.is_abelian() && set.len() <= 9 {
            if let Ok((ordering, label)) = order_small_abelian(group, set) {
                debug_assert!(is_simple(group, &ordering));
                return SubsetOutcome::Witness { ordering, constructive: !label.is_fallback() };
            }
        } else if set.len() <= 5 {
            if let Ok((ordering, label)) = order_small_general(group, set) {
                debug_assert!(is_simple(group, &ordering));
                return SubsetOutcome::Witness { ordering, constructive: !label.is_fallback() };
            }
        }
    }
    match find_simple_ordering(group, set, zero_free) {
        SearchOutcome::Found { ordering, .. } => {
            debug_assert!(if zero_free {
                is_simple_zero_free(group, &ordering)
            } else {
                is_simple(group, &ordering)
            });
            SubsetOutcome::Witness { ordering, constructive: false }
        }
        SearchOutcome::NotFound(cert) => {
            SubsetOutcome::Counterexample { search_space: cert.search_space }
        }
    }
}

/// Options independent of the job identity.
#[derive(Debug, Clone, Default)]
pub struct RunOptions {
    pub checkpoint: Option<std::path::PathBuf>,
    pub budget: Option<Duration>,
}

const CHUNK: u64 = 4096;

/// Run a verification job. Work proceeds group by group; within a group,
/// subsets stream in ascending bitmask order in fixed-size chunks that are
/// evaluated in parallel and merged in order, so the report is independent of
/// worker count. The checkpoint (if any) is written at chunk boundaries and
/// on budget expiry; resuming refuses a checkpoint whose job hash differs.
pub fn run_verification(job: &VerificationJob, opts: &RunOptions) -> Result<VerificationReport, VerifyError> {
    let start = Instant::now();
    let hash = format!("{:016x}", job.hash());
    let groups = job.family.groups();

    if job.conjecture == Conjecture::ZeroSum {
        if let Some(g) = groups.iter().find(|g| !g.is_abelian()) {
            return Err(VerifyError::NonabelianZeroSum(g.id()));
        }
    }

    let mut completed: Vec<GroupReport> = Vec::new();
    let mut resume: Option<CurrentGroup> = None;
    if let Some(path) = &opts.checkpoint {
        if path.exists() {
            let ck = load_checkpoint(path, &hash)?;
            completed = ck.completed;
            resume = ck.current;
        }
    }

    let mut witnesses: Vec<WitnessRecord> = Vec::new();
    let mut complete = true;

    'groups: for (gi, group) in groups.iter().enumerate() {
        if completed.len() > gi {
            continue; // already done in a previous run
        }
        let n = group.order();
        if n > 65 {
            return Err(VerifyError::TooLarge(n));
        }
        let bits = n - 1;
        let total: u64 = if bits >= 64 { u64::MAX } else { 1u64 << bits };
        let group_start = Instant::now();

        let mut cur = match resume.take() {
            Some(c) if c.group_index == gi => c,
            _ => CurrentGroup {
                group_index: gi,
                group: group.id(),
                cursor: 0,
                subsets_examined: 0,
                witnesses: 0,
                constructive_hits: 0,
                search_hits: 0,
                counterexamples: Vec::new(),
                wall_ms: 0,
            },
        };

        while cur.cursor < total {
            if let Some(budget) = opts.budget {
                if start.elapsed() > budget {
                    complete = false;
                    if let Some(path) = &opts.checkpoint {
                        cur.wall_ms += group_start.elapsed().as_millis() as u64;
                        save_checkpoint(path, &hash, &completed, Some(&cur))?;
                    }
                    break 'groups;
                }
            }
            let hi = total.min(cur.cursor + CHUNK);
            let results: Vec<(u64, SubsetOutcome)> = (cur.cursor..hi)
                .into_par_iter()
                .filter_map(|mask| {
                    let subset: Vec<usize> =
                        (0..bits).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
                    if let Some(limit) = job.subset_size_limit {
                        if subset.len() > limit {
                            return None;
                        }
                    }
                    if subset.is_empty() {
                        return None;
                    }
                    let cand = SubsetCandidate::new(group, &subset);
                    if !filter_admits(job.conjecture, group, &cand) {
                        return None;
                    }
                    Some((mask, check_subset(job.conjecture, group, &cand)))
                })
                .collect();
            // rayon's collect preserves index order; merge sequentially
            for (mask, outcome) in results {
                cur.subsets_examined += 1;
                match outcome {
                    SubsetOutcome::Witness { ordering, constructive } => {
                        cur.witnesses += 1;
                        if constructive {
                            cur.constructive_hits += 1;
                        } else {
                            cur.search_hits += 1;
                        }
                        if job.store_witnesses {
                            witnesses.push(WitnessRecord { group: group.id(), mask, ordering });
                        }
                    }
                    SubsetOutcome::Counterexample { search_space } => {
                        let subset: Vec<usize> =
                            (0..bits).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
                        log::warn!(
                            "counterexample: {} subset {subset:?} ({search_space} orderings exhausted)",
                            group.id()
                        );
                        cur.counterexamples.push(Counterexample {
                            group: group.id(),
                            subset,
                            mask,
                            search_space,
                        });
                    }
                }
            }
            cur.cursor = hi;
            if let Some(path) = &opts.checkpoint {
                let mut snapshot = cur.clone();
                snapshot.wall_ms += group_start.elapsed().as_millis() as u64;
                save_checkpoint(path, &hash, &completed, Some(&snapshot))?;
            }
        }

        if cur.cursor >= total {
            completed.push(GroupReport {
                group: cur.group.clone(),
                order: n,
                subsets_examined: cur.subsets_examined,
                witnesses: cur.witnesses,
                constructive_hits: cur.constructive_hits,
                search_hits: cur.search_hits,
                counterexamples: cur.counterexamples.clone(),
                wall_ms: cur.wall_ms + group_start.elapsed().as_millis() as u64,
            });
            if let Some(path) = &opts.checkpoint {
                save_checkpoint(path, &hash, &completed, None)?;
            }
        }
    }

    Ok(VerificationReport {
        conjecture: job.conjecture,
        family: job.family.describe(),
        job_hash: hash,
        groups: completed,
        complete,
        witnesses: job.store_witnesses.then_some(witnesses),
    })
}

fn load_checkpoint(path: &Path, expected_hash: &str) -> Result<Checkpoint, VerifyError> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| VerifyError::Io { path: path.display().to_string(), source })?;
    let ck: Checkpoint = serde_json::from_str(&text).map_err(|e| VerifyError::CheckpointCorrupt {
        path: path.display().to_string(),
        detail: e.to_string(),
    })?;
    if ck.job_hash != expected_hash {
        return Err(VerifyError::CheckpointMismatch {
            path: path.display().to_string(),
            found: ck.job_hash,
            expected: expected_hash.to_string(),
        });
    }
    Ok(ck)
}

fn save_checkpoint(
    path: &Path,
    hash: &str,
    completed: &[GroupReport],
    current: Option<&CurrentGroup>,
) -> Result<(), VerifyError> {
    let ck = Checkpoint {
        job_hash: hash.to_string(),
        completed: completed.to_vec(),
        current: current.cloned(),
    };
    let text = serde_json::to_string(&ck).expect("checkpoint serializes");
    std::fs::write(path, text)
        .map_err(|source| VerifyError::Io { path: path.display().to_string(), source })
}
