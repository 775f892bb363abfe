use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::matrix::{crossing_matrix, minor_matrix};
use super::{ColoringError, Result};
use crate::exactla::{bareiss_det, solve_integral};
use crate::knotio::Diagram;

/// A positive integer arc labeling whose coloring defect is `+1` at one
/// crossing, `-1` at another and `0` everywhere else.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PseudoColoring {
    pub values: Vec<BigInt>,
    pub plus_crossing: usize,
    pub minus_crossing: usize,
}

impl PseudoColoring {
    /// Validates the defect pattern and positivity of `values` on `d`.
    pub fn new(d: &Diagram, values: Vec<BigInt>) -> Result<Self> {
        if values.iter().any(|v| !v.is_positive()) {
            return Err(ColoringError::DefectMismatch(
                "entries must be strictly positive".into(),
            ));
        }
        let defect = defects(d, &values)?;
        let mut plus = None;
        let mut minus = None;
        for (i, v) in defect.iter().enumerate() {
            let slot = if v.is_zero() {
                continue;
            } else if v.is_one() {
                &mut plus
            } else if *v == BigInt::from(-1) {
                &mut minus
            } else {
                return Err(ColoringError::DefectMismatch(format!(
                    "defect {v} at crossing {i}"
                )));
            };
            if slot.replace(i).is_some() {
                return Err(ColoringError::DefectMismatch(format!(
                    "repeated defect {v} at crossing {i}"
                )));
            }
        }
        match (plus, minus) {
            (Some(plus_crossing), Some(minus_crossing)) => Ok(PseudoColoring {
                values,
                plus_crossing,
                minus_crossing,
            }),
            _ => Err(ColoringError::DefectMismatch(
                "needs exactly one +1 and one -1 crossing".into(),
            )),
        }
    }

    pub fn max_color(&self) -> &BigInt {
        self.values.iter().max().expect("nonempty")
    }

    pub fn min_color(&self) -> &BigInt {
        self.values.iter().min().expect("nonempty")
    }
}

/// Coloring defect `2*v[over(i)] - v[i] - v[i+1]` at every crossing, over the integers.
pub fn defects(d: &Diagram, v: &[BigInt]) -> Result<Vec<BigInt>> {
    let n = d.n();
    if v.len() != n {
        return Err(ColoringError::LengthMismatch {
            expected: n,
            got: v.len(),
        });
    }
    Ok((0..n)
        .map(|i| {
            let (u1, u2) = d.under_arcs(i);
            BigInt::from(2) * &v[d.over(i)] - &v[u1] - &v[u2]
        })
        .collect())
}

/// Tries to build a pseudo-coloring from column `j` of `C^-1`.
///
/// Returns `None` when that column is not integral. Otherwise the column is
/// padded with a zero, shifted by the smallest multiple of the trivial
/// coloring making every entry positive, and checked to have defect `+1`
/// at `c_j` and `-1` at `c_{n-1}`.
pub fn find_pseudo_coloring(d: &Diagram, j: usize) -> Result<Option<PseudoColoring>> {
    let n = d.n();
    let c = minor_matrix(&crossing_matrix(d, 0))?;
    if j >= n - 1 {
        return Err(ColoringError::ColumnOutOfRange { j, n });
    }
    if bareiss_det(&c)?.is_zero() {
        return Err(ColoringError::SingularMinor);
    }
    let Some(mut y) = solve_integral(&c, j)? else {
        return Ok(None);
    };
    y.push(BigInt::zero());
    let shift = BigInt::one() - y.iter().min().expect("nonempty");
    for v in y.iter_mut() {
        *v += &shift;
    }
    let pc = PseudoColoring::new(d, y)?;
    if pc.plus_crossing != j || pc.minus_crossing != n - 1 {
        return Err(ColoringError::DefectMismatch(format!(
            "defects at ({}, {}), expected ({j}, {})",
            pc.plus_crossing,
            pc.minus_crossing,
            n - 1
        )));
    }
    Ok(Some(pc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knotio::{connected_sum, dt_to_gauss, gauss_to_diagram, parse_dt};

    fn from_dt(dt: &str) -> Diagram {
        gauss_to_diagram(&dt_to_gauss(&parse_dt(dt).unwrap())).unwrap()
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn defect_examples() {
        let t = from_dt("4 6 2");
        assert_eq!(defects(&t, &big(&[2, 1, 0])).unwrap(), big(&[-3, 3, 0]));
        assert_eq!(defects(&t, &big(&[7, 7, 7])).unwrap(), big(&[0, 0, 0]));
        assert!(matches!(
            defects(&t, &big(&[1, 2])),
            Err(ColoringError::LengthMismatch {
                expected: 3,
                got: 2
            })
        ));
    }

    #[test]
    fn prime_determinant_knots_have_no_pseudo_coloring() {
        for dt in ["4 6 2", "4 6 8 2"] {
            let d = from_dt(dt);
            for j in 0..d.n() - 1 {
                assert_eq!(find_pseudo_coloring(&d, j).unwrap(), None, "{dt} j={j}");
            }
        }
    }

    #[test]
    fn granny_sweep_results_are_valid() {
        let t = from_dt("4 6 2");
        let g = connected_sum(&t, &t);
        for j in 0..g.n() - 1 {
            if let Some(pc) = find_pseudo_coloring(&g, j).unwrap() {
                let dv = defects(&g, &pc.values).unwrap();
                assert_eq!(dv.iter().filter(|v| v.is_one()).count(), 1);
                assert_eq!(dv.iter().filter(|v| **v == BigInt::from(-1)).count(), 1);
                assert!(pc.values.iter().all(Signed::is_positive));
                assert_eq!(pc.min_color(), &BigInt::one());
            }
        }
        assert!(matches!(
            find_pseudo_coloring(&g, 5),
            Err(ColoringError::ColumnOutOfRange { j: 5, n: 6 })
        ));
    }

    #[test]
    fn validation_rejects_bad_vectors() {
        let t = from_dt("4 6 2");
        assert!(PseudoColoring::new(&t, big(&[3, 2, 1])).is_err());
        assert!(PseudoColoring::new(&t, big(&[1, 1, 1])).is_err());
        assert!(PseudoColoring::new(&t, big(&[0, 1, 1])).is_err());
    }
}
