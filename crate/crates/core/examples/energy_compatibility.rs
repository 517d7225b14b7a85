//! A thermal observable commutes with the Hamiltonian, so it can be measured
//! jointly with the energy and, for a nondegenerate spectrum, obtained by
//! classically post-processing an energy measurement.

use thermal_instruments::classify::{joint_with_hamiltonian, post_processing_decomposition};
use thermal_instruments::linalg::diag;
use thermal_instruments::random::{random_commuting_observable, random_unitary, rng};

fn main() {
    let mut r = rng(5);
    let u = random_unitary(3, &mut r);
    let h = &u * diag(&[0.0, 0.8, 2.1]) * u.adjoint();
    let e = random_commuting_observable(&h, 2, &mut r);

    let joint = joint_with_hamiltonian(&e, &h, 1e-9).unwrap();
    println!("joint outcomes {:?}", joint.observable.outcomes());
    println!(
        "marginal defects: observable {:.1e}, energy {:.1e}",
        joint.observable_marginal_defect, joint.energy_marginal_defect
    );

    let pp = post_processing_decomposition(&e, &h, 1e-9).unwrap();
    println!("p(x | energy level):");
    for (x, label) in pp.outcomes.iter().enumerate() {
        let row: Vec<String> = pp.matrix[x].iter().map(|v| format!("{v:.4}")).collect();
        println!("  {label}: [{}]", row.join(", "));
    }
    println!("energies {:?}", pp.energies);
    println!("reconstruction defect {:.1e}", pp.reconstruction_defect);
}
