//! Runs every classifier on three instruments and prints the verdicts with
//! their defects.

use thermal_instruments::classify::{
    is_covariant_instrument, is_gibbs_preserving, is_nuclear, is_quasi_complete, is_thermal_observable,
    ClassifierVerdict,
};
use thermal_instruments::linalg::{diag, real_matrix};
use thermal_instruments::scheme::trivial_scheme;
use thermal_instruments::{Instrument, Observable};

fn row(v: &ClassifierVerdict) -> String {
    format!("{:<5} ({:.1e})", v.verdict, v.defect)
}

fn main() {
    let h = diag(&[0.0, 1.0]);
    let beta = 1.0;
    let z = Observable::spectral(&h, 1e-8).unwrap();
    let x = Observable::new(
        vec!["+", "-"],
        vec![real_matrix(2, 2, &[0.5, 0.5, 0.5, 0.5]), real_matrix(2, 2, &[0.5, -0.5, -0.5, 0.5])],
    )
    .unwrap();

    let cases = [
        ("thermalising swap", trivial_scheme(&z, &h, beta).unwrap().induced_instrument().unwrap()),
        ("Lüders energy", Instrument::luders(&z).unwrap()),
        ("Lüders X basis", Instrument::luders(&x).unwrap()),
    ];
    for (name, ins) in &cases {
        let e = ins.induced_observable().unwrap();
        println!("{name}");
        println!("  thermal observable {}", row(&is_thermal_observable(&e, &h, 1e-9).unwrap()));
        println!("  covariant          {}", row(&is_covariant_instrument(ins, &h, 1e-9).unwrap()));
        println!("  gibbs preserving   {}", row(&is_gibbs_preserving(ins, &h, beta, 1e-9).unwrap()));
        println!("  nuclear            {}", row(&is_nuclear(ins, 1e-9).unwrap().verdict));
        println!("  quasi-complete     {}", row(&is_quasi_complete(ins, 1e-9).unwrap()));
    }
}
