//! Flow counts need not be a single polynomial in q: the Klein bottle
//! alternates 1, 0, 1, 0, ... and is fitted exactly by a period-2
//! quasipolynomial. Arguments coprime to the period still agree with
//! the Tutte-route polynomial.
//!
//! ```bash
//! cargo run --release --example quasipolynomial_fit
//! ```

use sflows::fixtures;
use sflows::flows::{flow_polynomial, Limits};
use sflows::quasipoly::{coprime_agreement, fit_flow_counts, FitOptions};

fn show(name: &str, complex: &sflows::SimplicialComplex, opts: &FitOptions) {
    let limits = Limits::default();
    let fitted = fit_flow_counts(complex, opts, &limits).expect("fit succeeds");
    let qp = &fitted.quasipolynomial;
    println!(
        "{name}: period {} from {} samples ({} used purely for verification)",
        qp.period(),
        fitted.samples.len(),
        fitted.verified_points
    );
    for (j, constituent) in qp.constituents().iter().enumerate() {
        let coeffs: Vec<String> = constituent.coeffs().iter().map(|c| c.to_string()).collect();
        println!("  class q = {j} mod {}: [{}]", qp.period(), coeffs.join(", "));
    }
    let fp = flow_polynomial(complex).expect("small ground set");
    let qs: Vec<u64> = fitted.samples.iter().map(|(q, _)| *q).collect();
    let report = coprime_agreement(qp, &fp.poly, &qs);
    println!(
        "  coprime agreement with {}: {} ({} points checked)",
        fp.poly.display("q"),
        if report.agrees() { "ok" } else { "MISMATCH" },
        report.checked.len()
    );
    println!();
}

fn main() {
    show(
        "klein_bottle",
        &fixtures::klein_bottle(),
        &FitOptions { max_period: 2, max_degree: Some(1) },
    );
    show("bipyramid", &fixtures::bipyramid(), &FitOptions::default());
    show("torus", &fixtures::torus(), &FitOptions::default());
}
