//! One line per acceptance criterion; exits nonzero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use pathchain::verify::{run, CHECK_COUNT};

fn main() -> ExitCode {
    let start = Instant::now();
    let mut failed = 0;
    for id in 1..=CHECK_COUNT {
        let t = Instant::now();
        let result = run(id);
        if !result.passed {
            failed += 1;
        }
        println!("{result} ({:.2?})", t.elapsed());
    }
    println!("acceptance: {}/{} passed in {:.2?}", CHECK_COUNT - failed, CHECK_COUNT, start.elapsed());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
