use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{ColoringError, Result};
use crate::exactla::{adjugate, bareiss_det, permutation_equivalence, IntMatrix};
use crate::knotio::{mirror, Diagram};

/// The `n x n` crossing matrix: row `i` is crossing `c_i`, column `j` is arc `a_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossingMatrixFull {
    pub n: usize,
    pub matrix: IntMatrix,
}

/// Builds the crossing matrix with the labeling started at arc `a_rotation`.
///
/// Row `i` gets `-1` at columns `i` and `i+1 mod n` and `+2` at the over
/// arc. Coefficients add up when columns coincide, so a kink row sums its
/// entries into one cell.
pub fn crossing_matrix(d: &Diagram, rotation: usize) -> CrossingMatrixFull {
    let n = d.n();
    let r = rotation % n;
    let mut m = IntMatrix::zeros(n, n);
    for i in 0..n {
        let over = (d.over((i + r) % n) + n - r) % n;
        m[(i, over)] += 2;
        m[(i, i)] -= 1;
        m[(i, (i + 1) % n)] -= 1;
    }
    CrossingMatrixFull { n, matrix: m }
}

/// The crossing matrix with its last row and column removed.
pub fn minor_matrix(cm: &CrossingMatrixFull) -> Result<IntMatrix> {
    if cm.n < 2 {
        return Err(ColoringError::TooSmall { n: cm.n });
    }
    Ok(cm.matrix.top_left(cm.n - 1, cm.n - 1))
}

/// `det C` with its sign, for the canonical labeling.
pub fn signed_minor_det(d: &Diagram) -> Result<BigInt> {
    let c = minor_matrix(&crossing_matrix(d, 0))?;
    Ok(bareiss_det(&c)?)
}

pub fn knot_det(d: &Diagram) -> Result<BigInt> {
    Ok(signed_minor_det(d)?.abs())
}

/// `L = det(k) * C^-1`, i.e. the adjugate of `C` times the sign of `det C`.
pub fn coloring_matrix(d: &Diagram) -> Result<IntMatrix> {
    let c = minor_matrix(&crossing_matrix(d, 0))?;
    let det = bareiss_det(&c)?;
    if det.is_zero() {
        return Err(ColoringError::SingularMinor);
    }
    let adj = adjugate(&c)?;
    Ok(if det.is_negative() {
        adj.scale(&BigInt::from(-1))
    } else {
        adj
    })
}

/// Appends a zero to a kernel vector of `C` mod `det k`, giving a coloring
/// of the whole diagram.
pub fn extend_with_zero(d: &Diagram, x: &[BigInt]) -> Result<Vec<BigInt>> {
    let n = d.n();
    if n < 2 {
        return Err(ColoringError::TooSmall { n });
    }
    if x.len() != n - 1 {
        return Err(ColoringError::LengthMismatch {
            expected: n - 1,
            got: x.len(),
        });
    }
    let c = minor_matrix(&crossing_matrix(d, 0))?;
    let det = bareiss_det(&c)?.abs();
    let image = c.mul_vec(x)?;
    let in_kernel = if det.is_zero() {
        image.iter().all(Zero::is_zero)
    } else {
        image.iter().all(|v| v.is_multiple_of(&det))
    };
    if !in_kernel {
        return Err(ColoringError::NotInKernel { det });
    }
    let mut out = x.to_vec();
    out.push(BigInt::zero());
    Ok(out)
}

/// Outcome of comparing the mirror's crossing matrix with the transpose.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransposeLaw {
    /// Row and column permutations taking `C'^T` onto the mirror's `C'`.
    pub permutations: Option<(Vec<usize>, Vec<usize>)>,
    pub det: Option<BigInt>,
    pub mirror_det: Option<BigInt>,
}

impl TransposeLaw {
    pub fn holds(&self) -> bool {
        self.permutations.is_some() && self.det == self.mirror_det
    }
}

/// Checks that the mirror image's crossing matrix is a row/column
/// permutation of the transposed crossing matrix, with equal determinants.
pub fn transpose_law(d: &Diagram) -> Result<TransposeLaw> {
    let m = mirror(d).map_err(|_| ColoringError::NotAlternating)?;
    let transposed = crossing_matrix(d, 0).matrix.transpose();
    let mirrored = crossing_matrix(&m, 0).matrix;
    let det = |x: &Diagram| (x.n() >= 2).then(|| knot_det(x)).transpose();
    Ok(TransposeLaw {
        permutations: permutation_equivalence(&transposed, &mirrored),
        det: det(d)?,
        mirror_det: det(&m)?,
    })
}
