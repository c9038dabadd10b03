//! Shared fixtures for the criterion benchmarks.

use cartier_core::families::EnSpec;
use cartier_core::scalar::GaussRat;

/// A dense two-generator specification exercising every code path:
/// non-symmetric `a`, skew-symmetric `b`, and fractional entries.
pub fn dense_e2_spec() -> EnSpec {
    EnSpec::new(
        2,
        vec![
            vec![GaussRat::from_int(1), GaussRat::ratio(1, 2)],
            vec![GaussRat::from_int(-2), GaussRat::from_int(3)],
        ],
        vec![
            vec![GaussRat::zero(), GaussRat::from_int(2)],
            vec![GaussRat::from_int(-2), GaussRat::zero()],
        ],
    )
}

/// A one-generator specification for the representation-theoretic benches,
/// where the tensor-power dimension grows as `4^strands`.
pub fn dense_e1_spec() -> EnSpec {
    EnSpec::new(
        1,
        vec![vec![GaussRat::from_int(2)]],
        vec![vec![GaussRat::from_int(3)]],
    )
}
