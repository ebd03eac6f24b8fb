//! Search for Heffter systems D(v,k) for small admissible parameters and
//! develop each hit into a cyclic k-cycle system of order v.

use partial_sums::heffter::{decompose, find_heffter_system};

fn main() {
    for (v, k) in [(7u64, 3usize), (13, 3), (25, 3), (25, 4), (25, 6), (19, 9)] {
        match find_heffter_system(v, k) {
            Ok(Some(system)) => {
                let (_, _, cert) = decompose(&system).expect("a found system develops");
                println!(
                    "D({v},{k}): parts {:?} -> {} cycles, {} edges",
                    system.parts, cert.cycle_count, cert.edges_covered
                );
            }
            Ok(None) => println!("D({v},{k}): no system found (search exhausted)"),
            Err(e) => println!("D({v},{k}): inadmissible — {e}"),
        }
    }
}
