//! Splits every effect of a POVM into rank-one pieces and checks that
//! coarse-graining them again gives back the original observable.

use thermal_instruments::classify::{refine_to_rank_one, REFINE_TOL};
use thermal_instruments::random::{random_povm, rng};

fn main() {
    let f = random_povm(3, 2, &mut rng(8));
    let refined = refine_to_rank_one(&f, REFINE_TOL).unwrap();
    println!("{} effects refined into {}", f.len(), refined.observable.len());
    for (label, parent) in refined.observable.outcomes().iter().zip(&refined.relabel) {
        println!("  {label} -> {}", f.outcomes()[*parent]);
    }
    println!("rank one: {}", refined.observable.is_rank_one(1e-9));
    println!("coarse-graining defect {:.1e}", refined.coarse_graining_defect);
}
