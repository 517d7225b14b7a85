//! Loads a scenario file and prints its check results, the same report the
//! `thermeas check` command writes.
//!
//! ```bash
//! cargo run --example run_scenario -- crates/core/examples/scenarios/szilard.json
//! ```

use thermal_instruments::scenario::{run_scenario, RunOptions, Scenario};

fn main() {
    let path = std::env::args().nth(1).unwrap_or_else(|| {
        concat!(env!("CARGO_MANIFEST_DIR"), "/examples/scenarios/resonant_qubit.json").to_owned()
    });
    let scenario = match Scenario::load(&path) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    };
    let report = run_scenario(&scenario, &RunOptions::default()).unwrap();
    println!("{}", scenario.name.as_deref().unwrap_or(&path));
    for r in &report.results {
        let mark = if r.verdict { "ok  " } else { "FAIL" };
        println!("  {mark} {:?}{}", r.check, r.message.as_deref().map(|m| format!(": {m}")).unwrap_or_default());
    }
    println!("{} passed, {} failed", report.summary.passed, report.summary.failed);
}
