//! From a DT code to a verified coloring, for the trefoil.

use foxkh::coloring::{coloring_matrix, crossing_matrix, knot_det, minor_matrix, verify_kh};
use foxkh::knotio::{dt_to_gauss, gauss_to_diagram, parse_dt};

fn main() {
    let dt = parse_dt("4 6 2").expect("valid DT code");
    let code = dt_to_gauss(&dt);
    let d = gauss_to_diagram(&code)
        .expect("realizable")
        .with_name("3_1");
    println!("gauss: {code}");
    println!("over arcs: {:?}", d.over_map());

    let full = crossing_matrix(&d, 0);
    print!("crossing matrix:\n{}", full.matrix);
    print!("minor:\n{}", minor_matrix(&full).unwrap());
    println!("det = {}", knot_det(&d).unwrap());
    print!("coloring matrix:\n{}", coloring_matrix(&d).unwrap());

    let report = verify_kh(&d);
    println!("{}", serde_json::to_string(&report).unwrap());
}
