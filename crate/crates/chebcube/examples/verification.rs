//! Runs the built-in check suites programmatically and prints the
//! machine-readable records: every exactness, kernel, and interpolation
//! property at small scales, including the documented expected failure
//! (the three-dimensional first-kind rule is not exact for the
//! equal-degree pair product at total degree 2n).
//!
//! Run with: `cargo run --example verification`

use chebcube::verify::{all_passed, run_suite, CheckStatus, SuiteKind, VerifyOptions};
use chebcube::Result;

fn main() -> Result<()> {
    let opts = VerifyOptions::default();
    for dim in [2usize, 3] {
        let records = run_suite(SuiteKind::All, dim, &[2, 3], &opts)?;
        println!("dimension {dim}: {} checks", records.len());
        for r in &records {
            let flag = match r.status {
                CheckStatus::Pass => "pass ",
                CheckStatus::ExpectedFail => "xfail",
                CheckStatus::Fail => "FAIL ",
            };
            println!(
                "  [{flag}] {:<28} max error {:>9.2e} vs tolerance {:>8.1e}",
                r.check, r.max_error, r.tolerance
            );
        }
        assert!(all_passed(&records), "no unexpected failures");
        println!();
    }
    println!("all checks passed (expected failures included by design)");
    Ok(())
}
