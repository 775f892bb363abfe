//! The mirror image's crossing matrix is the transpose, up to relabeling.

use foxkh::coloring::{crossing_matrix, transpose_law};
use foxkh::knotio::{dt_to_gauss, gauss_to_diagram, mirror, parse_dt};

fn main() {
    let d = gauss_to_diagram(&dt_to_gauss(&parse_dt("4 8 10 2 6").unwrap())).unwrap();
    let m = mirror(&d).unwrap();
    print!(
        "C' transposed:\n{}",
        crossing_matrix(&d, 0).matrix.transpose()
    );
    print!("mirror C':\n{}", crossing_matrix(&m, 0).matrix);

    let law = transpose_law(&d).unwrap();
    if let Some((rows, cols)) = &law.permutations {
        println!("row permutation {rows:?}, column permutation {cols:?}");
    }
    println!(
        "det {:?} mirror det {:?} holds: {}",
        law.det,
        law.mirror_det,
        law.holds()
    );
}
