//! Exhaustive check that super summit sets of epsilon^d are closed under
//! partial cycling.

use periodic_braids::oracle::{brute_sss_epsilon, check_partial_cycling_closure, twisted_product_is_delta};
use periodic_braids::Result;

fn main() -> Result<()> {
    for n in [5, 7, 9] {
        let q = n as i64 - 1;
        for d in (1..q).filter(|d| q % d == 0) {
            let table = brute_sss_epsilon(n, d)?;
            let report = check_partial_cycling_closure(&table)?;
            let twisted = table
                .elements
                .iter()
                .map(|g| twisted_product_is_delta(g, q / d))
                .collect::<Result<Vec<_>>>()?;
            println!(
                "n={n} d={d}: {:>4} elements, {:>6} partial cyclings, {} violations, twisted product ok: {}",
                report.elements,
                report.cyclings,
                report.violations.len(),
                twisted.iter().all(|&b| b)
            );
        }
    }
    Ok(())
}
