//! Arithmetic and Arakelov invariants of curves of low genus, together with
//! machine checks of the explicit discriminant, height and theta inequalities
//! that relate them.
//!
//! The crate is organised bottom-up:
//!
//! * [`exactmath`]: big integers, rational polynomials, resultants,
//!   factorisation, root isolation, Mahler measures and Weil heights.
//! * [`mp`]: a small multiprecision complex type over MPFR floats.
//! * [`elliptic`]: Weierstrass invariants, Tate's algorithm, conductors,
//!   Frey curves, Legendre cross ratios and Faltings heights over Q.
//! * [`hyperelliptic`]: discriminants of models `y^2 + f2(x) y = f(x)`,
//!   trace-shift normalisation and cross-ratio sets of branch points.
//! * [`siegel`]: theta constants with characteristics, the modular form
//!   `Delta_g`, the symplectic action and reduction for `g <= 2`.
//! * [`arakelov`]: de Jong's invariant, the normalised theta function and the
//!   Monte Carlo evaluation of Faltings' delta in genus two.
//! * [`bounds`]: the ledger of explicit constants in log space and verdicts.

pub mod arakelov;
pub mod bounds;
pub mod elliptic;
pub mod error;
pub mod exactmath;
pub mod hyperelliptic;
pub mod mp;
pub mod siegel;

pub use bounds::{Check, Verdict};
pub use error::{Error, Result};
pub use exactmath::LogMagnitude;

/// Default working precision, in bits, for every multiprecision evaluation.
pub const DEFAULT_PREC: u32 = 256;

/// The desk corpus of elliptic curves used by the self-test and acceptance
/// runs: one curve per line, `label a1 a2 a3 a4 a6`.
pub const DESK_CORPUS: &str = include_str!("../data/desk_corpus.txt");
