use std::time::Instant;

use divdiff_core::lab::min_lipschitz_unit_norm;

fn main() {
    let max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    for n in 2..=max {
        let start = Instant::now();
        let r = min_lipschitz_unit_norm(n).unwrap();
        println!(
            "N = {n}: {:?} ({:.2?})",
            r.value().map(|v| v.to_string()),
            start.elapsed()
        );
    }
}
