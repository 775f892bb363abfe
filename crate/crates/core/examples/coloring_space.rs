//! The mod-p coloring space of the figure-eight knot, three ways.

use std::collections::BTreeSet;

use foxkh::coloring::{
    brute_force_colorings, coloring_space, fundamental_coeffs, is_heterogeneous, reconstruct,
};
use foxkh::knotio::{dt_to_gauss, gauss_to_diagram, parse_dt};

fn main() {
    let d = gauss_to_diagram(&dt_to_gauss(&parse_dt("4 6 8 2").unwrap())).unwrap();
    let space = coloring_space(&d).unwrap();
    let p = space.p;
    let x = space.fundamental().unwrap();
    println!(
        "p = {p}, dimension {}, fundamental {:?}",
        space.dimension(),
        x.values
    );

    let span: BTreeSet<_> = space.span_colorings().into_iter().collect();
    let brute: BTreeSet<_> = brute_force_colorings(&d, p).unwrap().into_iter().collect();
    let nontrivial: Vec<_> = span.iter().filter(|c| !c.is_trivial()).collect();
    println!(
        "{} colorings, exhaustive search agrees: {}, nontrivial all heterogeneous: {}",
        span.len(),
        span == brute,
        nontrivial.iter().all(|c| is_heterogeneous(c))
    );

    // any nontrivial coloring is a*T + b*X, read off from two arcs
    let target = nontrivial[7];
    let (a, b) = fundamental_coeffs(
        x.values[0],
        x.values[1],
        target.values[0],
        target.values[1],
        p,
    )
    .unwrap();
    println!(
        "{:?} = {a}*T + {b}*X: {}",
        target.values,
        reconstruct(&x, a, b) == *target
    );
}
