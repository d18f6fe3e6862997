//! Series for π/4 built from arc bits, power sums and end corrections, with
//! exact and extended-precision arithmetic.
//!
//! Numeric routines are generic over [`Real`]: `f32`, `f64` or the decimal
//! fixed-point [`BigReal`]. Identities that must hold exactly are stated on
//! [`ExactRational`]. The aliases below fix the scalar for the common cases.

pub mod arcbit;
pub mod correction;
pub mod error;
pub mod leibniz;
pub mod powersum;
pub mod precision;
pub mod report;
pub mod scalar;
pub mod series;
pub mod trig;
pub mod verify;

pub use correction::CorrectionRule;
pub use error::{Error, Result};
pub use precision::{BigReal, ExactRational, Precision, DEFAULT_DIGITS};
pub use report::{ConvergenceRecord, Method, MethodOptions};
pub use scalar::Real;

pub type SeriesStateBig = series::SeriesState<BigReal>;
pub type SeriesStateF64 = series::SeriesState<f64>;
pub type GapReportBig = arcbit::GapReport<BigReal>;
pub type GapReportF64 = arcbit::GapReport<f64>;
pub type PowerSumResultBig = powersum::PowerSumResult<BigReal>;
pub type QuadratureSpecBig = leibniz::QuadratureSpec<BigReal>;
pub type ConvergenceRecordBig = report::ConvergenceRecord<BigReal>;
