//! A projective energy measurement on a thermal qubit, done the Lüders way,
//! leaves conditional states worth `β⁻¹H(p)` of work. No free scheme can
//! implement it: the bound fails, and the instrument is covariant but
//! moves the Gibbs state.

use thermal_instruments::classify::{is_covariant_instrument, is_gibbs_preserving};
use thermal_instruments::entropy::shannon_entropy;
use thermal_instruments::linalg::diag;
use thermal_instruments::thermo::diagnostic_report;
use thermal_instruments::{gibbs_state, Instrument, Observable};

fn main() {
    let h = diag(&[0.0, 1.0]);
    let luders = Instrument::luders(&Observable::spectral(&h, 1e-8).unwrap()).unwrap();
    for beta in [0.25, 1.0, 4.0] {
        let tau = gibbs_state(&h, beta).unwrap();
        let (law, w) = diagnostic_report(&luders, &tau, &h, beta, 1e-8).unwrap();
        let p = luders.probabilities(&tau).unwrap();
        println!(
            "β = {beta:<5} <W> = {:.5}  β⁻¹H(p) = {:.5}  bound slack {:.5}",
            w.average_extractable_work,
            shannon_entropy(&p) / beta,
            law.prop1_slack
        );
    }
    println!("covariant        {}", is_covariant_instrument(&luders, &h, 1e-9).unwrap().verdict);
    println!("gibbs preserving {}", is_gibbs_preserving(&luders, &h, 1.0, 1e-9).unwrap().verdict);
}
