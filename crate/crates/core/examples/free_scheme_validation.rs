//! Builds a few measurement schemes and reports which ones are thermodynamically free.
//!
//! ```bash
//! cargo run --example free_scheme_validation
//! ```

use thermal_instruments::linalg::diag;
use thermal_instruments::random::{random_diagonal_povm, random_unitary, rng};
use thermal_instruments::scheme::{random_free_scheme, trivial_scheme, DEFAULT_MAX_MOMENT};
use thermal_instruments::{KrausChannel, MeasurementScheme, Observable};

fn show(name: &str, scheme: &MeasurementScheme) {
    let r = scheme.validate(1e-9, DEFAULT_MAX_MOMENT).unwrap();
    println!("{name}");
    println!("  bistochastic defect  {:.2e}", r.bistochastic_defect);
    println!("  moment defects       {:?}", r.energy_conservation_defects.iter().map(|d| format!("{d:.1e}")).collect::<Vec<_>>());
    println!("  yanase defect        {:.2e}", r.yanase_defect);
    println!("  free                 {}", r.verdict);
}

fn main() {
    let h = diag(&[0.0, 1.0]);
    let beta = 1.0;

    let swap = trivial_scheme(&Observable::spectral(&h, 1e-8).unwrap(), &h, beta).unwrap();
    show("swap with an energy pointer", &swap);

    let mut r = rng(3);
    let pointer = random_diagonal_povm(2, 3, &mut r);
    let block = random_free_scheme(&h, &h, beta, &pointer, 3, 2).unwrap();
    show("mixture of two energy-conserving unitaries", &block);

    let haar = KrausChannel::unitary(random_unitary(4, &mut r)).unwrap();
    let generic = MeasurementScheme::new(h.clone(), h, beta, haar, Observable::computational(2)).unwrap();
    show("Haar-random coupling", &generic);
}
