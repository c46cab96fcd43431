//! Exact univariate Positivstellensatz certificates over the rationals.
//!
//! Given `f` in `Q[x]` and a closed semialgebraic `K` in `R`, decide `f >= 0` on `K` and
//! produce `f = sum_e sigma_e g^e` over the natural generators `g` of `K`, with every
//! `sigma_e` a nonnegative rational combination of squares.

pub mod arith;
pub mod certgen;
pub mod certificate;
pub mod error;
pub mod io;
pub mod roots;
pub mod semialg;
pub mod sos;

pub use arith::{Polynomial, Rational};
pub use certgen::{certify, certify_generated, certify_with, CertifyConfig};
pub use certificate::{verify, Certificate, ExponentVector, VerifyReport, WeightedSos};
pub use error::{Error, Refusal, RefusalReason};
pub use roots::{is_nonneg_on, NonnegReport};
pub use semialg::{natural_generators, solve_generators, Branch, Component, Endpoint, GeneratorSet, Role, SemiAlgSet};
