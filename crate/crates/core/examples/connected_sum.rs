//! Composite diagrams: determinants multiply, prime detection fails.

use foxkh::coloring::{knot_det, verify_kh};
use foxkh::knotio::{
    connected_sum, dt_to_gauss, gauss_to_diagram, is_reduced, parse_dt, parse_gauss,
    projection_cut_vertices,
};

fn main() {
    let load = |dt: &str, name: &str| {
        gauss_to_diagram(&dt_to_gauss(&parse_dt(dt).unwrap()))
            .unwrap()
            .with_name(name)
    };
    let trefoil = load("4 6 2", "3_1");
    let eight = load("4 6 8 2", "4_1");
    let five = load("4 8 10 2 6", "5_2");

    for (a, b) in [(&trefoil, &trefoil), (&trefoil, &eight), (&eight, &five)] {
        let sum = connected_sum(a, b);
        println!(
            "{}: det {} = {} * {}, {:?}",
            sum.name().unwrap(),
            knot_det(&sum).unwrap(),
            knot_det(a).unwrap(),
            knot_det(b).unwrap(),
            verify_kh(&sum).status
        );
    }

    let kink = gauss_to_diagram(&parse_gauss("O1 U1").unwrap()).unwrap();
    let kinked = connected_sum(&trefoil, &kink);
    println!(
        "3_1 with a kink: det {}, reduced {}, cut vertices {:?}",
        knot_det(&kinked).unwrap(),
        is_reduced(&kinked),
        projection_cut_vertices(&kinked)
    );
}
