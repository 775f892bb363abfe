//! Parsing and converting between DT and Gauss codes.

use foxkh::knotio::{dt_to_gauss, gauss_to_diagram, gauss_to_dt, mirror, parse_dt, parse_gauss};

fn main() {
    for text in ["4 6 2", "4 6 8 2", "-6 -8 -2 -4", "4 10 14 12 2 8 6"] {
        let dt = parse_dt(text).unwrap();
        let gauss = dt_to_gauss(&dt);
        let back = gauss_to_dt(&gauss).unwrap();
        println!("dt [{text}] -> {gauss} -> {:?}", back.entries());
    }

    let g = parse_gauss("o1 u2 o3 u1 o2 u3").unwrap();
    let d = gauss_to_diagram(&g).unwrap();
    println!("{g}: n={} over={:?}", d.n(), d.over_map());
    let m = mirror(&d).unwrap();
    println!("mirror: {} over={:?}", m.code(), m.over_map());

    for bad in ["4 6", "3 6 2", "4 4 2"] {
        println!("dt {bad:?}: {:?}", parse_dt(bad).unwrap_err());
    }
    for bad in ["O1 U1 U2 O2 O3", "O1 O1", "X1 U1"] {
        println!("gauss {bad:?}: {:?}", parse_gauss(bad).unwrap_err());
    }
}
