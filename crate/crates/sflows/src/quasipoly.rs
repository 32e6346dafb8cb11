//! Fitting flow-count sequences as quasipolynomials: a period k and
//! one rational polynomial per residue class mod k, found by exact
//! interpolation with surplus samples as verification. No least
//! squares: counts are exact, so any residual means a wrong period.

use num_bigint::BigInt;
use num_rational::BigRational;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::flows::{IeOracle, Limits};
use crate::homology;
use crate::poly::{IntPolynomial, RatPolynomial};

/// A function given by `constituents[q mod period]` evaluated at q.
/// The period is minimal for the data it was fitted from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quasipolynomial {
    period: u32,
    constituents: Vec<RatPolynomial>,
}

impl Quasipolynomial {
    pub fn new(period: u32, constituents: Vec<RatPolynomial>) -> Self {
        assert_eq!(period as usize, constituents.len());
        Quasipolynomial { period, constituents }
    }

    pub fn period(&self) -> u32 {
        self.period
    }

    pub fn constituents(&self) -> &[RatPolynomial] {
        &self.constituents
    }

    pub fn constituent_for(&self, q: u64) -> &RatPolynomial {
        &self.constituents[(q % self.period as u64) as usize]
    }

    pub fn evaluate(&self, q: u64) -> BigRational {
        self.constituent_for(q).evaluate_at_integer(q)
    }
}

/// Fits the minimal-period quasipolynomial reproducing all samples
/// exactly. Periods are tried in increasing order; within a candidate
/// period, each residue class interpolates its first `max_degree + 1`
/// samples and the remaining ones must verify, so the first accepted
/// period is minimal.
pub fn fit(
    samples: &[(u64, BigInt)],
    max_period: u32,
    max_degree: usize,
) -> Result<Quasipolynomial> {
    assert!(max_period >= 1);
    let needed = max_degree + 2;
    'periods: for k in 1..=max_period {
        let mut classes: Vec<Vec<(u64, BigInt)>> = vec![Vec::new(); k as usize];
        for (q, count) in samples {
            classes[(q % k as u64) as usize].push((*q, count.clone()));
        }
        if let Some((j, class)) = classes.iter().enumerate().find(|(_, c)| c.len() < needed) {
            return Err(Error::InsufficientData {
                period: k,
                class: j as u64,
                got: class.len(),
                needed,
            });
        }
        let mut constituents = Vec::with_capacity(k as usize);
        for class in &classes {
            let points: Vec<(BigRational, BigRational)> = class[..max_degree + 1]
                .iter()
                .map(|(q, v)| {
                    (
                        BigRational::from(BigInt::from(*q)),
                        BigRational::from(v.clone()),
                    )
                })
                .collect();
            let poly = RatPolynomial::interpolate(&points);
            for (q, v) in class {
                if poly.evaluate_at_integer(*q) != BigRational::from(v.clone()) {
                    continue 'periods;
                }
            }
            constituents.push(poly);
        }
        return Ok(Quasipolynomial::new(k, constituents));
    }
    Err(Error::NoFit { max_period, max_degree })
}

/// Agreement between a fitted quasipolynomial and a polynomial at the
/// arguments coprime to the period. Report-only: mismatches are listed,
/// not raised.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoprimeReport {
    pub checked: Vec<u64>,
    pub mismatches: Vec<CoprimeMismatch>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoprimeMismatch {
    pub q: u64,
    pub quasipolynomial: BigRational,
    pub polynomial: BigInt,
}

impl CoprimeReport {
    pub fn agrees(&self) -> bool {
        self.mismatches.is_empty()
    }
}

pub fn coprime_agreement(
    qp: &Quasipolynomial,
    poly: &IntPolynomial,
    qs: &[u64],
) -> CoprimeReport {
    let mut checked = Vec::new();
    let mut mismatches = Vec::new();
    for &q in qs {
        if num_integer::gcd(q, qp.period() as u64) != 1 {
            continue;
        }
        checked.push(q);
        let quasi = qp.evaluate(q);
        let p = poly.evaluate(&BigInt::from(q));
        if quasi != BigRational::from(p.clone()) {
            mismatches.push(CoprimeMismatch { q, quasipolynomial: quasi, polynomial: p });
        }
    }
    CoprimeReport { checked, mismatches }
}

/// Knobs for fitting a complex's flow counts. The degree cap defaults
/// to one above the top Betti number, which bounds the true degree.
#[derive(Debug, Clone)]
pub struct FitOptions {
    pub max_period: u32,
    pub max_degree: Option<usize>,
}

impl Default for FitOptions {
    fn default() -> Self {
        FitOptions { max_period: 6, max_degree: None }
    }
}

/// A fitted flow-count quasipolynomial with its sampling evidence.
#[derive(Debug, Clone)]
pub struct FlowFit {
    pub quasipolynomial: Quasipolynomial,
    pub samples: Vec<(u64, BigInt)>,
    /// Samples beyond the interpolation points, all reproduced exactly.
    pub verified_points: usize,
    pub max_degree_used: usize,
}

/// Samples nowhere-zero flow counts by inclusion-exclusion (exact at
/// every modulus, composite or not) over `q = 2 ..= 2 (D+2) P + 1` and
/// fits them.
pub fn fit_flow_counts(
    c: &SimplicialComplex,
    opts: &FitOptions,
    limits: &Limits,
) -> Result<FlowFit> {
    let max_degree = match opts.max_degree {
        Some(d) => d,
        None => homology::betti_top(c) + 1,
    };
    let q_hi = 2 * (max_degree + 2) * opts.max_period as usize + 1;
    let oracle = IeOracle::new(c, limits)?;
    let samples: Vec<(u64, BigInt)> =
        (2..=q_hi as u64).map(|q| (q, oracle.count(q))).collect();
    let qp = fit(&samples, opts.max_period, max_degree)?;
    let verified_points =
        samples.len() - qp.period() as usize * (max_degree + 1);
    Ok(FlowFit { quasipolynomial: qp, samples, verified_points, max_degree_used: max_degree })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Zero};
    use proptest::prelude::*;

    const BIPYRAMID: &str = "0 1 2\n0 1 3\n0 2 3\n1 2 3\n1 2 4\n1 3 4\n2 3 4\n";

    fn rat(n: i64) -> BigRational {
        BigRational::from(BigInt::from(n))
    }

    fn bipyramid_samples(hi: u64) -> Vec<(u64, BigInt)> {
        (2..=hi).map(|q| (q, BigInt::from((q - 1) * (q - 2)))).collect()
    }

    fn klein_samples(hi: u64) -> Vec<(u64, BigInt)> {
        (2..=hi)
            .map(|q| (q, if q % 2 == 0 { BigInt::one() } else { BigInt::zero() }))
            .collect()
    }

    #[test]
    fn fit_bipyramid_counts() {
        let qp = fit(&bipyramid_samples(9), 2, 2).unwrap();
        assert_eq!(qp.period(), 1);
        let c = &qp.constituents()[0];
        assert_eq!(c.degree(), Some(2));
        assert_eq!(c.coeffs(), &[rat(2), rat(-3), rat(1)]);
        assert_eq!(qp.evaluate(10), rat(72));
    }

    #[test]
    fn fit_alternating_counts_with_period_two() {
        let qp = fit(&klein_samples(9), 2, 1).unwrap();
        assert_eq!(qp.period(), 2);
        // Even class is constant 1, odd class identically zero.
        assert_eq!(qp.constituents()[0].coeffs(), &[rat(1)]);
        assert!(qp.constituents()[1].is_zero());
        assert_eq!(qp.evaluate(100), rat(1));
        assert_eq!(qp.evaluate(101), rat(0));
    }

    #[test]
    fn fit_constant_sequence() {
        let samples: Vec<(u64, BigInt)> = (2..=8).map(|q| (q, BigInt::from(4))).collect();
        let qp = fit(&samples, 3, 1).unwrap();
        assert_eq!(qp.period(), 1);
        assert_eq!(qp.constituents()[0].coeffs(), &[rat(4)]);
    }

    #[test]
    fn fit_errors() {
        assert!(matches!(
            fit(&bipyramid_samples(4), 2, 2), // odd class mod 2 has one sample
            Err(Error::InsufficientData { .. })
        ));
        // Period-3 pulse cannot be matched with period cap 2.
        let pulse: Vec<(u64, BigInt)> = (2..=19)
            .map(|q| (q, BigInt::from(u64::from(q % 3 == 0))))
            .collect();
        assert!(matches!(fit(&pulse, 2, 1), Err(Error::NoFit { .. })));
    }

    #[test]
    fn fitted_period_is_minimal() {
        // Samples follow a genuine period-2 pattern; period 1 must be
        // rejected before period 2 is accepted even with slack in the cap.
        let qp = fit(&klein_samples(13), 6, 1).unwrap();
        assert_eq!(qp.period(), 2);
    }

    #[test]
    fn coprime_agreement_reports() {
        let qp = fit(&klein_samples(13), 2, 1).unwrap();
        let zero = IntPolynomial::zero();
        let qs: Vec<u64> = (2..=13).collect();
        let rep = coprime_agreement(&qp, &zero, &qs);
        // Only odd q are coprime to the period, and there the counts
        // vanish like the zero polynomial.
        assert!(rep.agrees());
        assert!(rep.checked.iter().all(|q| q % 2 == 1));

        // A wrong polynomial is reported, not raised.
        let wrong = IntPolynomial::from_i64(&[1]);
        let rep = coprime_agreement(&qp, &wrong, &qs);
        assert!(!rep.agrees());
    }

    #[test]
    fn fit_flow_counts_bipyramid() {
        let c = SimplicialComplex::parse(BIPYRAMID).unwrap();
        let fitted = fit_flow_counts(&c, &FitOptions::default(), &Limits::default()).unwrap();
        assert_eq!(fitted.quasipolynomial.period(), 1);
        assert_eq!(fitted.max_degree_used, 3);
        assert_eq!(
            fitted.quasipolynomial.constituents()[0].coeffs(),
            &[rat(2), rat(-3), rat(1)]
        );
        assert!(fitted.verified_points > 0);
        // Every sample reproduces exactly.
        for (q, count) in &fitted.samples {
            assert_eq!(
                fitted.quasipolynomial.evaluate(*q),
                BigRational::from(count.clone())
            );
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        // Random integer quasipolynomials round-trip through sampling.
        #[test]
        fn prop_fit_roundtrip(
            period in 1u32..=4,
            coeff_seed in proptest::collection::vec(-5i64..=5, 12),
        ) {
            let constituents: Vec<RatPolynomial> = (0..period as usize)
                .map(|j| {
                    RatPolynomial::from_coeffs(
                        (0..3)
                            .map(|d| BigRational::from(BigInt::from(coeff_seed[j * 3 + d])))
                            .collect(),
                    )
                })
                .collect();
            let original = Quasipolynomial::new(period, constituents);
            let samples: Vec<(u64, BigInt)> = (2u64..=2 + 8 * period as u64)
                .map(|q| {
                    let v = original.evaluate(q);
                    prop_assert!(v.is_integer());
                    Ok((q, v.to_integer()))
                })
                .collect::<std::result::Result<_, _>>()?;
            let fitted = fit(&samples, period, 2).unwrap();
            prop_assert!(fitted.period() <= period);
            for (q, v) in &samples {
                prop_assert_eq!(fitted.evaluate(*q), BigRational::from(v.clone()));
            }
            // Minimality: no divisor of the fitted period also fits.
            for smaller in 1..fitted.period() {
                if fitted.period() % smaller == 0 {
                    prop_assert!(fit(&samples, smaller, 2).is_err());
                }
            }
        }
    }
}
