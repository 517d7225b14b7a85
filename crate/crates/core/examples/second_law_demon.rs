//! Evaluates the work, divergence, heat and information terms of a free
//! measurement on random states and prints the slack of each inequality.
//! A demon that feeds back on the outcome never extracts more than it paid.

use thermal_instruments::linalg::diag;
use thermal_instruments::random::{random_diagonal_povm, random_state, rng};
use thermal_instruments::scheme::random_free_scheme;
use thermal_instruments::thermo::second_law_report;

fn main() {
    let h = diag(&[0.0, 1.0, 2.0]);
    let mut r = rng(2024);
    let pointer = random_diagonal_povm(3, 3, &mut r);
    let scheme = random_free_scheme(&h, &h, 1.3, &pointer, 99, 2).unwrap();

    println!("{:>8} {:>8} {:>8} {:>8} {:>9} {:>9}", "W", "<W>", "D", "Q", "W slack", "Q slack");
    for _ in 0..8 {
        let rho = random_state(3, &mut r);
        let (law, w) = second_law_report(&scheme, &rho, 1e-8).unwrap();
        println!(
            "{:8.4} {:8.4} {:8.4} {:8.4} {:9.2e} {:9.2e}",
            w.extractable_work, w.average_extractable_work, w.outcome_divergence, w.heat, law.prop1_slack, law.heat_bound_slack
        );
        assert!(law.verdict);
    }
}
