use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::matrix::{crossing_matrix, knot_det};
use super::{ColoringError, Result};
use crate::exactla::{inv_mod, is_prime, modp_kernel, mul_mod, ModPKernel};
use crate::knotio::Diagram;

/// Largest modulus the coloring routines accept.
pub const MAX_MODULUS: u64 = 1 << 32;

/// Upper bound on `p^n` for exhaustive enumeration.
pub const BRUTE_FORCE_LIMIT: u64 = 10_000_000;

/// An arc labeling by residues mod `p`, one entry per arc.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coloring {
    pub p: u64,
    pub values: Vec<u64>,
}

impl Coloring {
    pub fn new(p: u64, values: impl IntoIterator<Item = u64>) -> Self {
        Coloring {
            p,
            values: values.into_iter().map(|v| v % p).collect(),
        }
    }

    pub fn from_integers(p: u64, values: &[BigInt]) -> Self {
        Coloring::new(p, values.iter().map(|v| crate::exactla::mod_u64(v, p)))
    }

    pub fn is_trivial(&self) -> bool {
        self.values.windows(2).all(|w| w[0] == w[1])
    }

    pub fn distinct_colors(&self) -> usize {
        self.values.iter().collect::<HashSet<_>>().len()
    }

    /// Whether `2*over - under1 - under2 == 0 (mod p)` at every crossing of `d`.
    pub fn satisfies(&self, d: &Diagram) -> bool {
        let n = d.n();
        self.values.len() == n
            && (0..n).all(|i| {
                let (u1, u2) = d.under_arcs(i);
                let v = &self.values;
                (2 * v[d.over(i)] as u128 + 2 * self.p as u128 - v[u1] as u128 - v[u2] as u128)
                    .is_multiple_of(self.p as u128)
            })
    }
}

/// Distinct arcs get distinct colors.
pub fn is_heterogeneous(x: &Coloring) -> bool {
    x.distinct_colors() == x.values.len()
}

/// The mod-`p` kernel of the crossing matrix for a prime determinant `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringSpace {
    pub p: u64,
    pub kernel: ModPKernel,
    pub trivial: Coloring,
}

impl ColoringSpace {
    pub fn dimension(&self) -> usize {
        self.kernel.dimension()
    }

    /// A kernel basis vector that is not a multiple of the trivial coloring.
    pub fn fundamental(&self) -> Option<Coloring> {
        self.kernel
            .basis
            .iter()
            .map(|v| Coloring::new(self.p, v.iter().copied()))
            .find(|c| !c.is_trivial())
    }

    /// Every `a*T + b*X` for the fundamental coloring `X`, ordered by `(b, a)`.
    pub fn span_colorings(&self) -> Vec<Coloring> {
        let Some(x) = self.fundamental() else {
            return (0..self.p)
                .map(|a| reconstruct(&self.trivial, a, 0))
                .collect();
        };
        (0..self.p)
            .flat_map(|b| (0..self.p).map(move |a| (a, b)))
            .map(|(a, b)| reconstruct(&x, a, b))
            .collect()
    }
}

pub(crate) fn modulus_of(det: &BigInt) -> Result<u64> {
    det.to_u64()
        .filter(|&p| p <= MAX_MODULUS)
        .ok_or_else(|| ColoringError::TooLarge {
            what: format!("determinant {det}"),
        })
}

pub fn coloring_space(d: &Diagram) -> Result<ColoringSpace> {
    let det = knot_det(d)?;
    if !is_prime(&det) {
        return Err(ColoringError::NotPrimeDeterminant { det });
    }
    let p = modulus_of(&det)?;
    let kernel = modp_kernel(&crossing_matrix(d, 0).matrix, p)?;
    Ok(ColoringSpace {
        p,
        kernel,
        trivial: Coloring::new(p, std::iter::repeat_n(1, d.n())),
    })
}

/// Coefficients `(a, b)` with `x2 = a + b*x1` and `y2 = a + b*y1` mod `p`.
pub fn fundamental_coeffs(x1: u64, y1: u64, x2: u64, y2: u64, p: u64) -> Result<(u64, u64)> {
    let (x1, y1, x2, y2) = (x1 % p, y1 % p, x2 % p, y2 % p);
    if x1 == y1 {
        return Err(ColoringError::DegeneratePair { x: x1, y: y1, p });
    }
    let inv = inv_mod((y1 + p - x1) % p, p);
    let num_a = (mul_mod(y1, x2, p) + p - mul_mod(x1, y2, p)) % p;
    let num_b = (y2 + p - x2) % p;
    Ok((mul_mod(num_a, inv, p), mul_mod(num_b, inv, p)))
}

/// `a*T + b*x1`, entrywise mod `p`.
pub fn reconstruct(x1: &Coloring, a: u64, b: u64) -> Coloring {
    let p = x1.p;
    Coloring::new(
        p,
        x1.values
            .iter()
            .map(|&v| (a % p + mul_mod(b % p, v, p)) % p),
    )
}

/// Every assignment in `{0..p-1}^n` satisfying the coloring condition at
/// each crossing, found by exhaustive search in lexicographic order.
pub fn brute_force_colorings(d: &Diagram, p: u64) -> Result<Vec<Coloring>> {
    let n = d.n();
    let within_limit = p
        .checked_pow(n as u32)
        .is_some_and(|total| total <= BRUTE_FORCE_LIMIT);
    if !within_limit {
        return Err(ColoringError::TooLarge {
            what: format!("{p}^{n} assignments"),
        });
    }
    let mut out = Vec::new();
    let mut candidate = Coloring {
        p,
        values: vec![0; n],
    };
    loop {
        if candidate.satisfies(d) {
            out.push(candidate.clone());
        }
        // odometer, last arc fastest
        let mut k = n;
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            candidate.values[k] += 1;
            if candidate.values[k] < p {
                break;
            }
            candidate.values[k] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knotio::{connected_sum, dt_to_gauss, gauss_to_diagram, parse_dt};

    fn from_dt(dt: &str) -> Diagram {
        gauss_to_diagram(&dt_to_gauss(&parse_dt(dt).unwrap())).unwrap()
    }

    fn in_space(space: &ColoringSpace, target: &Coloring) -> bool {
        space.span_colorings().contains(target)
    }

    #[test]
    fn trefoil_space() {
        let s = coloring_space(&from_dt("4 6 2")).unwrap();
        assert_eq!(s.p, 3);
        assert_eq!(s.dimension(), 2);
        assert!(in_space(&s, &Coloring::new(3, [1, 1, 1])));
        assert!(in_space(&s, &Coloring::new(3, [2, 1, 0])));
    }

    #[test]
    fn figure_eight_space() {
        let s = coloring_space(&from_dt("4 6 8 2")).unwrap();
        assert_eq!((s.p, s.dimension()), (5, 2));
        assert_eq!(s.span_colorings().len(), 25);
    }

    #[test]
    fn granny_has_composite_determinant() {
        let t = from_dt("4 6 2");
        match coloring_space(&connected_sum(&t, &t)) {
            Err(ColoringError::NotPrimeDeterminant { det }) => assert_eq!(det, BigInt::from(9)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn coefficient_examples() {
        assert_eq!(fundamental_coeffs(2, 1, 0, 1, 3).unwrap(), (2, 2));
        assert_eq!(fundamental_coeffs(4, 1, 4, 1, 5).unwrap(), (0, 1));
        assert_eq!(fundamental_coeffs(4, 1, 3, 3, 5).unwrap(), (3, 0));
        assert!(matches!(
            fundamental_coeffs(2, 2, 0, 1, 3),
            Err(ColoringError::DegeneratePair { .. })
        ));
    }

    #[test]
    fn reconstruct_examples() {
        let d = from_dt("4 6 2");
        let x1 = Coloring::new(3, [2, 1, 0]);
        let x2 = reconstruct(&x1, 2, 2);
        assert_eq!(x2.values, vec![0, 1, 2]);
        assert!(x2.satisfies(&d));
        assert_eq!(reconstruct(&x1, 0, 1), x1);
        assert_eq!(reconstruct(&x1, 2, 0).values, vec![2, 2, 2]);
    }

    #[test]
    fn heterogeneity() {
        assert!(is_heterogeneous(&Coloring::new(3, [2, 1, 0])));
        assert!(!is_heterogeneous(&Coloring::new(3, [1, 1, 1])));
        assert!(!is_heterogeneous(&Coloring::new(3, [0, 1, 0, 2])));
    }

    #[test]
    fn brute_force_counts() {
        let t = from_dt("4 6 2");
        let c3 = brute_force_colorings(&t, 3).unwrap();
        assert_eq!(c3.len(), 9);
        assert_eq!(c3.iter().filter(|c| c.is_trivial()).count(), 3);
        assert_eq!(c3.iter().filter(|c| is_heterogeneous(c)).count(), 6);
        let c5 = brute_force_colorings(&t, 5).unwrap();
        assert_eq!(c5.len(), 5);
        assert!(c5.iter().all(Coloring::is_trivial));
        assert_eq!(
            brute_force_colorings(&from_dt("4 6 8 2"), 5).unwrap().len(),
            25
        );
        assert!(matches!(
            brute_force_colorings(&from_dt("4 10 14 12 2 6 8"), 11),
            Err(ColoringError::TooLarge { .. })
        ));
    }
}
