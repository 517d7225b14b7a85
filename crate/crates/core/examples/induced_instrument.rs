//! Reads off the instrument a free scheme induces on the system, along with
//! the conjugate channel on the probe, and prints what each outcome does to
//! an excited qubit.

use thermal_instruments::linalg::diag;
use thermal_instruments::random::{random_diagonal_povm, rng};
use thermal_instruments::scheme::random_free_scheme;
use thermal_instruments::thermo::{conditional_states, heat_absorbed};
use thermal_instruments::State;

fn main() {
    let h = diag(&[0.0, 1.5]);
    let pointer = random_diagonal_povm(2, 2, &mut rng(1));
    let scheme = random_free_scheme(&h, &h, 0.7, &pointer, 11, 3).unwrap();
    let ins = scheme.induced_instrument().unwrap();

    println!("induced observable:");
    for (label, e) in ins.outcomes().iter().zip(ins.induced_observable().unwrap().effects()) {
        println!("  {label}: diag({:.4}, {:.4})", e[(0, 0)].re, e[(1, 1)].re);
    }

    let rho = State::basis(2, 1);
    for c in conditional_states(&ins, &rho).unwrap() {
        let m = c.state.matrix();
        println!(
            "outcome {}  p = {:.4}  excited population afterwards {:.4}",
            ins.outcomes()[c.outcome],
            c.probability,
            m[(1, 1)].re
        );
    }

    let probe = scheme.conjugate_channel().unwrap().apply(&rho).unwrap();
    println!("probe after the interaction: diag({:.4}, {:.4})", probe.matrix()[(0, 0)].re, probe.matrix()[(1, 1)].re);

    let q = heat_absorbed(&scheme, &rho).unwrap();
    println!("heat absorbed by the system {:.4}, its energy change {:.4}", q.heat, q.system_energy_change);
}
