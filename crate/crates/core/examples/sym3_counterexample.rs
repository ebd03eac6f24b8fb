//! The nonabelian counterexample: the five nonidentity elements of Sym(3)
//! admit no ordering in which every partial product differs from the
//! identity. All 120 orderings are exhausted and the NotFound certificate
//! is printed.

use partial_sums::group::{CayleyGroup, Group};
use partial_sums::ordering::{find_simple_ordering, SearchOutcome};

fn main() {
    let group = Group::Cayley(CayleyGroup::builtin("sym", 3).unwrap());
    let set = group.nonidentity();
    println!(
        "group {} of order {}, subset {:?}",
        group.id(),
        group.order(),
        set.iter().map(|&e| group.label(e)).collect::<Vec<_>>()
    );

    match find_simple_ordering(&group, &set, true) {
        SearchOutcome::Found { ordering, .. } => {
            println!("unexpected zero-free ordering: {ordering:?}");
        }
        SearchOutcome::NotFound(cert) => {
            println!(
                "no zero-free simple ordering exists: {} orderings exhausted ({} nodes expanded)",
                cert.search_space, cert.nodes_expanded
            );
        }
    }

    // plain simpleness (distinct partial products) is still achievable,
    // as guaranteed for |A| <= 5 in any finite group
    if let SearchOutcome::Found { ordering, .. } = find_simple_ordering(&group, &set, false) {
        println!("a simple (not zero-free) ordering does exist: {ordering:?}");
    }
}
