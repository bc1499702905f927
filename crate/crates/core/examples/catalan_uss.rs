//! Catalan-many distinct ultra summit elements, and the full super summit
//! set found by brute force.

use periodic_braids::oracle::{brute_sss_epsilon, catalan, uss_lower_bound};
use periodic_braids::Result;

fn main() -> Result<()> {
    for (n, u, k) in [(6, 2, 3), (8, 3, 4), (10, 4, 5)] {
        let family = uss_lower_bound(n, u, k)?;
        println!("B_{n}, u={u}, k={k}: {} elements (Catalan {})", family.len(), catalan(k));
    }
    let table = brute_sss_epsilon(6, 2)?;
    println!("super summit set of epsilon^2 in B_6 has {} elements:", table.len());
    for g in &table.elements {
        println!("  {g}");
    }
    Ok(())
}
