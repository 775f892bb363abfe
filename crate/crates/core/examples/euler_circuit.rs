//! The oriented projection graph of the figure-eight knot and an Euler circuit.

use foxkh::eulerian::{build_digraph, euler_circuit};
use foxkh::knotio::{dt_to_gauss, gauss_to_diagram, parse_dt};

fn main() {
    let d = gauss_to_diagram(&dt_to_gauss(&parse_dt("4 6 8 2").unwrap())).unwrap();
    let g = build_digraph(&d).unwrap();
    for e in g.edges() {
        println!(
            "edge {}: c{} -> c{} on arc a{}",
            e.position, e.tail, e.head, e.arc
        );
    }
    for start in [0, 3] {
        let c = euler_circuit(&g, start);
        let ok = c.validate(&g).is_ok();
        println!("circuit from edge {start}: {:?} valid {ok}", c.edges);
    }
}
