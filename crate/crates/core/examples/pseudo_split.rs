//! Pseudo-colorings of the granny knot and the summands they cut out.

use foxkh::coloring::{defects, find_pseudo_coloring, knot_det};
use foxkh::eulerian::extract_summands;
use foxkh::knotio::{connected_sum, dt_to_gauss, gauss_to_diagram, parse_dt};

fn main() {
    let t = gauss_to_diagram(&dt_to_gauss(&parse_dt("4 6 2").unwrap())).unwrap();
    let granny = connected_sum(&t, &t);
    println!("det {}", knot_det(&granny).unwrap());

    for r in 0..granny.n() {
        let d = granny.rotated(r);
        for j in 0..d.n() - 1 {
            let Some(pc) = find_pseudo_coloring(&d, j).unwrap() else {
                continue;
            };
            let split = extract_summands(&d, &pc).unwrap();
            println!(
                "start {r} column {j}: {:?} defects {:?}",
                pc.values,
                defects(&d, &pc.values).unwrap()
            );
            println!(
                "  max block {:?} (+1 at c{}), min block {:?} (-1 at c{})",
                split.h_arcs, split.plus_crossing, split.l_arcs, split.minus_crossing
            );
        }
    }
}
