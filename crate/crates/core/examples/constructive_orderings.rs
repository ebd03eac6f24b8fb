//! Search-free orderings from the case analyses: Theorem 4 for zero-sum
//! subsets of abelian groups (|A| ≤ 9) and Theorem 5 for arbitrary
//! subsets of any group (|A| ≤ 5). Each answer carries a CaseLabel naming
//! the branch of the proof that produced it.

use partial_sums::constructive::{order_small_abelian, order_small_general};
use partial_sums::group::{CayleyGroup, Group};
use partial_sums::ordering::partial_sums;

fn main() {
    // Z_13, A = {1,3,9,2,5,6}: two zero-sum triples, handled by the |A|=6 case
    let z13 = Group::cyclic(13);
    let set = vec![1, 3, 9, 2, 5, 6];
    let (ordering, label) = order_small_abelian(&z13, &set).unwrap();
    println!(
        "Z_13 {set:?}\n  ordering {ordering:?}  trace {:?}  [{}/{}]",
        partial_sums(&z13, &ordering),
        label.theorem,
        label.branch
    );

    // a nine-element zero-sum subset of Z_23, deep in the |A|=9 case tree
    let z23 = Group::cyclic(23);
    let set = vec![1, 2, 3, 4, 5, 6, 7, 8, 10];
    assert_eq!(set.iter().sum::<usize>() % 23, 0);
    let (ordering, label) = order_small_abelian(&z23, &set).unwrap();
    println!(
        "Z_23 {set:?}\n  ordering {ordering:?}  trace {:?}  [{}/{}]",
        partial_sums(&z23, &ordering),
        label.theorem,
        label.branch
    );

    // quaternion group, a subset with one inverse pair (p = 1)
    let q8 = Group::Cayley(CayleyGroup::builtin("quaternion", 2).unwrap());
    let i = 1usize;
    let mut set = vec![i, q8.inv(i)];
    for e in q8.nonidentity() {
        if set.len() == 5 {
            break;
        }
        if !set.contains(&e) && !set.contains(&q8.inv(e)) {
            set.push(e);
        }
    }
    let (ordering, label) = order_small_general(&q8, &set).unwrap();
    println!(
        "{} {:?}\n  ordering {:?}  [{}/{}]",
        q8.id(),
        set.iter().map(|&e| q8.label(e)).collect::<Vec<_>>(),
        ordering.iter().map(|&e| q8.label(e)).collect::<Vec<_>>(),
        label.theorem,
        label.branch
    );
}
