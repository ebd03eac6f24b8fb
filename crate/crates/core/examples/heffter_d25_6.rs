//! Develop the Heffter system D(25,6) into a cyclic 6-cycle system of
//! order 25, following the worked example from the introduction: two
//! zero-sum half-set parts give two base cycles whose 25 translates each
//! decompose K_25.

use partial_sums::heffter::{decompose, difference_list, validate_heffter, DifferenceList};

fn main() {
    let system = validate_heffter(
        25,
        6,
        &[vec![3, 1, 4, -5, 10, 12], vec![2, 7, -9, 6, 8, 11]],
    )
    .expect("the published system is a valid D(25,6)");
    println!("system:\n{system}");

    let (base, developed, cert) = decompose(&system).expect("both parts admit simple orderings");
    let mut union = DifferenceList { v: 25, counts: Default::default() };
    for (i, cycle) in base.cycles.iter().enumerate() {
        println!(
            "base cycle C{} = ({})   from ordering {:?} [{}]",
            i + 1,
            cycle
                .canonical()
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(","),
            base.orderings[i],
            base.strategies[i],
        );
        union.merge(&difference_list(cycle));
    }
    assert!(union.covers_all_nonzero_once(), "ΔC1 ∪ ΔC2 = Z_25 \\ {{0}}");
    println!("difference lists cover every nonzero residue exactly once");

    assert!(developed.verified_decomposition);
    println!(
        "developed system: {} cycles covering {} edges of K_25 exactly once",
        cert.cycle_count, cert.edges_covered
    );
}
