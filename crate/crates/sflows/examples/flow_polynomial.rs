//! The flow-counting polynomial of each fixture: its degree always
//! matches the top Betti number, and primes above the subdeterminant
//! bound are certified evaluation points.
//!
//! ```bash
//! cargo run --release --example flow_polynomial
//! ```

use sflows::fixtures;
use sflows::flows::{degree_check, flow_polynomial};
use sflows::matroid::DEFAULT_GROUND_LIMIT;

fn main() {
    println!(
        "{:<14} {:>6} {:>6} {:>10}  polynomial",
        "complex", "deg", "betti", "threshold"
    );
    for (name, complex) in fixtures::all() {
        let fp = flow_polynomial(&complex).expect("fixtures are small");
        let check = degree_check(&complex, DEFAULT_GROUND_LIMIT).expect("same");
        assert!(check.equal, "degree must equal the top Betti number");
        let degree = match fp.poly.degree() {
            Some(d) => d.to_string(),
            None => "-".to_string(),
        };
        println!(
            "{name:<14} {degree:>6} {:>6} {:>10}  {}",
            check.betti_top,
            fp.safe_prime_threshold,
            fp.poly.display("q")
        );
    }
}
