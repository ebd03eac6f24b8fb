//! End-to-end acceptance gate. Each test covers one release criterion and
//! prints a single `criterion N (...): PASS` line on success (a panic marks
//! the criterion failed).

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use partial_sums::constructive::{order_small_abelian, order_small_general};
use partial_sums::group::{enumerate_abelian_groups, factorize, partitions, CayleyGroup, Group};
use partial_sums::heffter::{
    decompose, difference_list, validate_heffter, Cycle, DifferenceList,
};
use partial_sums::lengths::{realize, reduce_by_gcd, LengthList, Realization, RealizeTarget};
use partial_sums::ordering::{is_simple, SubsetCandidate};
use partial_sums::verify::{run_verification, Conjecture, GroupFamily, RunOptions, VerificationJob};

struct Criterion {
    number: u32,
    name: &'static str,
    start: Instant,
    limit: Duration,
}

impl Criterion {
    fn begin(number: u32, name: &'static str, limit: Duration) -> Self {
        Criterion { number, name, start: Instant::now(), limit }
    }

    fn pass(self) {
        let elapsed = self.start.elapsed();
        assert!(
            elapsed <= self.limit,
            "criterion {} ({}): FAIL — took {elapsed:?}, limit {:?}",
            self.number,
            self.name,
            self.limit
        );
        println!("criterion {} ({}): PASS [{elapsed:?}]", self.number, self.name);
    }
}

#[test]
fn criterion_1_d25_6_pipeline() {
    let c = Criterion::begin(1, "D(25,6) pipeline", Duration::from_secs(1));
    let system = validate_heffter(
        25,
        6,
        &[vec![3, 1, 4, -5, 10, 12], vec![2, 7, -9, 6, 8, 11]],
    )
    .expect("the published system is valid");
    let (base, developed, cert) = decompose(&system).expect("pipeline succeeds");

    let c1 = Cycle::new(25, vec![1, 4, 8, 3, 13, 0]).unwrap();
    let c2 = Cycle::new(25, vec![2, 8, 15, 23, 14, 0]).unwrap();
    assert_eq!(base.cycles[0], c1, "first base cycle matches up to canonical form");
    assert_eq!(base.cycles[1], c2, "second base cycle matches up to canonical form");

    let mut all = DifferenceList { v: 25, counts: Default::default() };
    for cyc in &base.cycles {
        all.merge(&difference_list(cyc));
    }
    assert!(all.covers_all_nonzero_once(), "difference union is Z_25 minus 0");

    assert!(developed.verified_decomposition);
    assert_eq!(cert.cycle_count, 50);
    assert_eq!(cert.edges_covered, 300);
    c.pass();
}

#[test]
fn criterion_2_sym3_counterexample() {
    let c = Criterion::begin(2, "Sym(3) counterexample", Duration::from_secs(1));
    let sym3 = CayleyGroup::builtin("sym", 3).unwrap();
    let job = VerificationJob {
        conjecture: Conjecture::Alspach,
        family: GroupFamily::CayleyList(vec![sym3]),
        subset_size_limit: None,
        store_witnesses: false,
    };
    let report = run_verification(&job, &RunOptions::default()).unwrap();
    assert_eq!(report.counterexample_count(), 1, "exactly one counterexample");
    let ce = &report.groups[0].counterexamples[0];
    assert_eq!(ce.subset, vec![1, 2, 3, 4, 5], "the five nonidentity elements");
    assert_eq!(ce.search_space, 120, "all 5! orderings examined");
    c.pass();
}

#[test]
fn criterion_3_zero_sum_sweep() {
    let c = Criterion::begin(3, "zero-sum sweep, abelian <= 15", Duration::from_secs(300));
    let job = VerificationJob {
        conjecture: Conjecture::ZeroSum,
        family: GroupFamily::AbelianUpTo(15),
        subset_size_limit: None,
        store_witnesses: false,
    };
    let report = run_verification(&job, &RunOptions::default()).unwrap();
    assert!(report.complete);
    assert_eq!(report.counterexample_count(), 0);
    for g in &report.groups {
        assert_eq!(g.subsets_examined, g.witnesses + g.counterexamples.len() as u64, "{}", g.group);
    }
    c.pass();
}

#[test]
fn criterion_4_adms_sweep() {
    let c = Criterion::begin(4, "ADMS sweep, cyclic <= 14 and abelian <= 12", Duration::from_secs(600));
    for family in [GroupFamily::CyclicUpTo(14), GroupFamily::AbelianUpTo(12)] {
        let job = VerificationJob {
            conjecture: Conjecture::Adms,
            family,
            subset_size_limit: None,
            store_witnesses: false,
        };
        let report = run_verification(&job, &RunOptions::default()).unwrap();
        assert!(report.complete);
        assert_eq!(report.counterexample_count(), 0, "{}", report.family);
    }
    c.pass();
}

#[test]
fn criterion_5_constructive_vs_oracle() {
    let c = Criterion::begin(5, "constructive vs oracle, abelian <= 13", Duration::from_secs(600));
    let mut cases = 0u64;
    for n in 2..=13u64 {
        for spec in enumerate_abelian_groups(n) {
            let g = Group::from_spec(&spec);
            let order = g.order();
            for mask in 1u64..(1 << (order - 1)) {
                if mask.count_ones() > 9 {
                    continue;
                }
                let set: Vec<usize> =
                    (0..order - 1).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
                let cand = SubsetCandidate::new(&g, &set);
                if !cand.sum_is_zero || cand.contains_inverse_pair {
                    continue;
                }
                let (ordering, label) = order_small_abelian(&g, &set)
                    .unwrap_or_else(|e| panic!("{} {set:?}: {e}", g.id()));
                assert!(is_simple(&g, &ordering), "{} {set:?} -> {ordering:?}", g.id());
                assert!(
                    !label.is_fallback(),
                    "InternalCaseGap on {} {set:?} (branch {})",
                    g.id(),
                    label.branch
                );
                cases += 1;
            }
        }
    }
    assert!(cases >= 200, "sweep covered only {cases} qualifying subsets");
    c.pass();
}

#[test]
fn criterion_6_small_general_sweep() {
    let c = Criterion::begin(6, "Theorem-5.1 sweep, groups of order <= 12", Duration::from_secs(300));
    let mut groups: Vec<Group> = Vec::new();
    for n in 2..=12u64 {
        for spec in enumerate_abelian_groups(n) {
            groups.push(Group::from_spec(&spec));
        }
    }
    for (tag, param) in
        [("dihedral", 2), ("dihedral", 3), ("dihedral", 4), ("dihedral", 5), ("dihedral", 6),
         ("sym", 3), ("alt", 4), ("quaternion", 2), ("quaternion", 3)]
    {
        groups.push(Group::Cayley(CayleyGroup::builtin(tag, param).unwrap()));
    }
    for g in &groups {
        assert!(g.order() <= 12);
        let n = g.order();
        for mask in 1u64..(1 << (n - 1)) {
            if mask.count_ones() > 5 {
                continue;
            }
            let set: Vec<usize> = (0..n - 1).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
            let (ordering, _) =
                order_small_general(g, &set).unwrap_or_else(|e| panic!("{} {set:?}: {e}", g.id()));
            assert!(is_simple(g, &ordering), "{} {set:?} -> {ordering:?}", g.id());
        }
    }
    c.pass();
}

#[test]
fn criterion_7_edge_length_regressions() {
    let c = Criterion::begin(7, "edge-length regression set", Duration::from_secs(10));
    let w11 = realize(&LengthList::parse("11: 1^2 2 3 5^2").unwrap(), RealizeTarget::Cycle)
        .unwrap()
        .expect("witness exists");
    assert!(matches!(w11, Realization::Cycle { .. }));
    let w10 = realize(&LengthList::parse("10: 3^6 4^2").unwrap(), RealizeTarget::Cycle)
        .unwrap()
        .expect("witness exists");
    assert!(matches!(w10, Realization::Cycle { .. }));
    assert!(realize(&LengthList::parse("8: 3^4 4^4").unwrap(), RealizeTarget::Cycle)
        .unwrap()
        .is_none());
    assert!(realize(&LengthList::parse("7: 1 2 3^5").unwrap(), RealizeTarget::Cycle)
        .unwrap()
        .is_none());
    assert_eq!(
        reduce_by_gcd(&LengthList::parse("20: 6^6 8^2").unwrap()),
        LengthList::parse("10: 3^6 4^2").unwrap()
    );
    c.pass();
}

#[test]
fn criterion_8_property_suites() {
    let c = Criterion::begin(8, "property suites", Duration::from_secs(60));

    // difference-list identity on 1000 random simple zero-sum orderings
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut done = 0;
    while done < 1000 {
        let v: u64 = 2 * rng.gen_range(3..=49) + 1; // odd, 7..=99
        let k = rng.gen_range(3..=8usize.min(v as usize - 1));
        let g = Group::cyclic(v);
        // distinct nonzero elements, last one forced so the sum closes
        let mut set: Vec<usize> = Vec::new();
        while set.len() < k - 1 {
            let x = rng.gen_range(1..v as usize);
            if !set.contains(&x) {
                set.push(x);
            }
        }
        let last = g.inv(g.sum(&set));
        if last == 0 || set.contains(&last) {
            continue;
        }
        set.push(last);
        // random permutation, kept only when simple
        for i in (1..set.len()).rev() {
            set.swap(i, rng.gen_range(0..=i));
        }
        if !is_simple(&g, &set) {
            continue;
        }
        let cycle = partial_sums::heffter::ordering_to_cycle(v, &set).unwrap();
        assert!(difference_list(&cycle).equals_signed_set(&set), "v={v} {set:?}");
        done += 1;
    }

    // translation invariance of the edge length
    for v in [7u64, 10, 12] {
        for x in 0..v as usize {
            for y in 0..v as usize {
                if x == y {
                    continue;
                }
                let l = partial_sums::lengths::edge_length(v, x, y).unwrap();
                for t in 0..v as usize {
                    let xt = (x + t) % v as usize;
                    let yt = (y + t) % v as usize;
                    assert_eq!(partial_sums::lengths::edge_length(v, xt, yt).unwrap(), l);
                }
            }
        }
    }

    // BHR reformulation witness for (6, {1^2,4^2,5}): a Hamiltonian path from
    // 0 whose later vertices (the partial sums of the signed sequence) are
    // exactly Z_6 minus 0
    let path = realize(
        &LengthList::parse("6: 1^2 4^2 5").unwrap(),
        RealizeTarget::HamiltonianPath,
    )
    .unwrap()
    .expect("the paper's example is realizable");
    match path {
        Realization::HamiltonianPath { vertices } => {
            assert_eq!(vertices[0], 0);
            let mut sums = vertices[1..].to_vec();
            sums.sort_unstable();
            assert_eq!(sums, vec![1, 2, 3, 4, 5]);
        }
        other => panic!("{other:?}"),
    }

    // abelian-group counts match partition products for all n <= 27
    for n in 1..=27u64 {
        let got = enumerate_abelian_groups(n).len();
        let want: usize =
            factorize(n).iter().map(|&(_, e)| partitions(e).len()).product::<usize>().max(1);
        assert_eq!(got, want, "order {n}");
    }
    c.pass();
}
