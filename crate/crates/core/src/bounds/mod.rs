pub mod analytic;
pub mod field;
pub mod frey;
pub mod ledger;
pub mod szpiro;
pub mod units;
mod verdict;

pub use analytic::{chebyshev_and_analytic, scan_analytic_constants, AnalyticRecord, ScanResult};
pub use field::FieldContext;
pub use frey::frey_chain;
pub use ledger::{ledger, ledger_with, ConstantsLedger, LedgerEntry, LedgerParams, Provenance};
pub use szpiro::{
    abc_conditional_mu, lock_bound, szpiro162_check, theorem4_iii_bound, verify_doubly_exponential,
    verify_exponential_szpiro,
};
pub use units::{dedekind_bound, gyory_yu_mu_bound, precisebound_constants, PreciseBound};
pub use verdict::{Check, Verdict, PASS_TOLERANCE};

#[cfg(test)]
mod tests;
