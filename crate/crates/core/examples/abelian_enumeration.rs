//! Enumerate all abelian groups of each order up to 24 in canonical form
//! and cross-check the count against the partition-product formula.

use partial_sums::group::{enumerate_abelian_groups, factorize, partitions, Group};

fn main() {
    for n in 1..=24u64 {
        let specs = enumerate_abelian_groups(n);
        let want: usize = factorize(n)
            .iter()
            .map(|&(_, e)| partitions(e).len())
            .product::<usize>()
            .max(1);
        assert_eq!(specs.len(), want);
        let ids: Vec<String> = specs.iter().map(|s| Group::from_spec(s).id()).collect();
        println!("order {n:>2}: {}", ids.join(", "));
    }
}
