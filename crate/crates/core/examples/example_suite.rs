//! Runs the built-in example suite with reduced bounds.

use homtwist::suite::{run_suite, SuiteOptions};

pub fn run() -> homtwist::Result<()> {
    let summary = run_suite(&SuiteOptions {
        filter: None,
        bounds: Some(1),
    });
    print!("{summary}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> homtwist::Result<()> {
    run()
}
