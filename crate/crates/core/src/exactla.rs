//! Exact linear algebra over the integers and over prime fields.
//!
//! Everything here works on arbitrary-precision integers. Determinants use
//! fraction-free (Bareiss) elimination so intermediate values stay integral,
//! and the adjugate is assembled from signed cofactor determinants. The
//! mod-p routines reduce entries into `0..p` and run ordinary Gauss-Jordan
//! elimination with modular inverses.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinAlgError {
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("{0} is not a prime modulus")]
    NotPrime(u64),
    #[error("matrix is singular")]
    Singular,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

pub type Result<T> = std::result::Result<T, LinAlgError>;

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

/// Integer column vector.
pub type IntVector = Vec<BigInt>;

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from machine-integer rows. Panics on ragged input.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.as_ref().len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            let row = row.as_ref();
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row.iter().map(|&v| BigInt::from(v)));
        }
        IntMatrix {
            rows: r,
            cols: c,
            data,
        }
    }

    pub fn from_big_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        IntMatrix {
            rows: r,
            cols: c,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> IntVector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Entries as `i64`, or `None` if any entry is out of range.
    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(ToPrimitive::to_i64).collect())
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    /// Top-left `k x l` block.
    pub fn top_left(&self, k: usize, l: usize) -> Self {
        assert!(k <= self.rows && l <= self.cols);
        let mut m = Self::zeros(k, l);
        for i in 0..k {
            for j in 0..l {
                m[(i, j)] = self[(i, j)].clone();
            }
        }
        m
    }

    /// The matrix with row `r` and column `c` deleted.
    pub fn delete(&self, r: usize, c: usize) -> Self {
        let mut out = Vec::with_capacity(self.rows.saturating_sub(1));
        for i in (0..self.rows).filter(|&i| i != r) {
            out.push(
                (0..self.cols)
                    .filter(|&j| j != c)
                    .map(|j| self[(i, j)].clone())
                    .collect::<Vec<_>>(),
            );
        }
        let cols = self.cols.saturating_sub(1);
        let rows = out.len();
        IntMatrix {
            rows,
            cols,
            data: out.into_iter().flatten().collect(),
        }
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(LinAlgError::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * &other[(k, j)];
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Result<IntVector> {
        if self.cols != v.len() {
            return Err(LinAlgError::DimensionMismatch(format!(
                "{}x{} times vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    pub fn scale(&self, k: &BigInt) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * k).collect(),
        }
    }

    /// Entries reduced into `0..p`.
    pub fn reduce_mod(&self, p: u64) -> Vec<Vec<u64>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|v| mod_u64(v, p)).collect())
            .collect()
    }

    fn ensure_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(LinAlgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries((0..self.rows).map(|i| self.row(i)))
            .finish()
    }
}

/// Space-separated rows, one per line.
impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Least non-negative residue of `v` modulo `p`.
pub fn mod_u64(v: &BigInt, p: u64) -> u64 {
    v.mod_floor(&BigInt::from(p))
        .to_u64()
        .expect("residue fits in u64")
}

/// Determinant by fraction-free elimination.
///
/// When the diagonal pivot vanishes, the first row below it with a nonzero
/// entry in the pivot column is swapped in. Each division is exact.
pub fn bareiss_det(m: &IntMatrix) -> Result<BigInt> {
    let n = m.ensure_square()?;
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a = m.to_rows();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

/// Column `j` of the adjugate: entry `i` is `(-1)^(i+j) * det(m without row j, column i)`.
pub fn adjugate_column(m: &IntMatrix, j: usize) -> Result<IntVector> {
    let n = m.ensure_square()?;
    if j >= n {
        return Err(LinAlgError::DimensionMismatch(format!(
            "column {j} out of range for {n}x{n}"
        )));
    }
    if n == 1 {
        return Ok(vec![BigInt::one()]);
    }
    (0..n)
        .map(|i| {
            let minor = bareiss_det(&m.delete(j, i))?;
            Ok(if (i + j).is_multiple_of(2) {
                minor
            } else {
                -minor
            })
        })
        .collect()
}

/// Classical adjoint, so that `m * adjugate(m) == det(m) * I`.
pub fn adjugate(m: &IntMatrix) -> Result<IntMatrix> {
    let n = m.ensure_square()?;
    let mut adj = IntMatrix::zeros(n, n);
    for j in 0..n {
        for (i, v) in adjugate_column(m, j)?.into_iter().enumerate() {
            adj[(i, j)] = v;
        }
    }
    Ok(adj)
}

/// Integral solution of `m * y = e_j`, if one exists.
///
/// The unique rational solution is column `j` of the adjugate divided by the
/// determinant; `None` means some entry is not divisible.
pub fn solve_integral(m: &IntMatrix, j: usize) -> Result<Option<IntVector>> {
    let det = bareiss_det(m)?;
    if det.is_zero() {
        return Err(LinAlgError::Singular);
    }
    let col = adjugate_column(m, j)?;
    if col.iter().any(|v| !v.is_multiple_of(&det)) {
        return Ok(None);
    }
    Ok(Some(col.into_iter().map(|v| v / &det).collect()))
}

/// Kernel of a matrix over the field with `p` elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModPKernel {
    pub p: u64,
    /// One vector per free column; vector `k` has a 1 at its free column and
    /// zeros at the other free columns.
    pub basis: Vec<Vec<u64>>,
}

impl ModPKernel {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse of `a` modulo prime `p` (Fermat). `a` must be nonzero mod `p`.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

/// Reduced row echelon form mod p; returns the pivot columns.
fn rref_mod(rows: &mut [Vec<u64>], cols: usize, p: u64) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(pr) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = inv_mod(rows[r][c], p);
        for v in rows[r].iter_mut() {
            *v = mul_mod(*v, inv, p);
        }
        for i in 0..rows.len() {
            if i == r || rows[i][c] == 0 {
                continue;
            }
            let f = rows[i][c];
            let pivot = rows[r].clone();
            for (v, &q) in rows[i].iter_mut().zip(&pivot) {
                *v = (*v + p - mul_mod(f, q, p)) % p;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn check_prime(p: u64) -> Result<()> {
    if is_prime_u64(p) {
        Ok(())
    } else {
        Err(LinAlgError::NotPrime(p))
    }
}

pub fn modp_rank(m: &IntMatrix, p: u64) -> Result<usize> {
    check_prime(p)?;
    let mut rows = m.reduce_mod(p);
    Ok(rref_mod(&mut rows, m.cols(), p).len())
}

pub fn modp_kernel(m: &IntMatrix, p: u64) -> Result<ModPKernel> {
    check_prime(p)?;
    let cols = m.cols();
    let mut rows = m.reduce_mod(p);
    let pivots = rref_mod(&mut rows, cols, p);
    let free = (0..cols).filter(|c| !pivots.contains(c));
    let basis = free
        .map(|f| {
            let mut v = vec![0u64; cols];
            v[f] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - rows[r][f]) % p;
            }
            v
        })
        .collect();
    Ok(ModPKernel { p, basis })
}

const SMALL_PRIME_LIMIT: u64 = 10_000;
const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Deterministic primality for all `u64`: trial division below 10^4, then
/// Miller-Rabin with the first twelve primes as bases.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d < SMALL_PRIME_LIMIT && d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    if n < SMALL_PRIME_LIMIT * SMALL_PRIME_LIMIT {
        return true;
    }
    let s = (n - 1).trailing_zeros();
    let odd = (n - 1) >> s;
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, odd, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primality of an arbitrary integer. Exact up to 2^64; beyond that a
/// Miller-Rabin test with the same twelve bases.
pub fn is_prime(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    let one = BigInt::one();
    let two = BigInt::from(2);
    for d in 2..SMALL_PRIME_LIMIT {
        if n.is_multiple_of(&BigInt::from(d)) {
            return false;
        }
    }
    let n_minus_one = n - &one;
    let s = n_minus_one.trailing_zeros().unwrap_or(0);
    let odd = &n_minus_one >> s;
    'witness: for &a in &WITNESSES {
        let mut x = BigInt::from(a).modpow(&odd, n);
        if x == one || x == n_minus_one {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_one {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Searches for row and column permutations with `a[i][j] == b[rows[i]][cols[j]]`.
///
/// Plain backtracking over row assignments; each candidate row pairing is
/// extended by matching the not-yet-mapped nonzero columns entry by entry.
/// Any witness returned has been checked against every entry.
pub fn permutation_equivalence(a: &IntMatrix, b: &IntMatrix) -> Option<(Vec<usize>, Vec<usize>)> {
    if a.rows != b.rows || a.cols != b.cols {
        return None;
    }
    let sorted_rows = |m: &IntMatrix| {
        let mut rows: Vec<Vec<BigInt>> = (0..m.rows)
            .map(|i| {
                let mut r = m.row(i).to_vec();
                r.sort();
                r
            })
            .collect();
        rows.sort();
        rows
    };
    if sorted_rows(a) != sorted_rows(b)
        || sorted_rows(&a.transpose()) != sorted_rows(&b.transpose())
    {
        return None;
    }
    let mut search = PermSearch {
        a,
        b,
        row_map: vec![usize::MAX; a.rows],
        row_used: vec![false; a.rows],
        col_map: vec![usize::MAX; a.cols],
        col_used: vec![false; a.cols],
    };
    if !search.assign_row(0) {
        return None;
    }
    // Columns never touched by a nonzero entry are zero in `a`; pair them
    // with the leftover columns of `b`.
    let mut spare = (0..a.cols).filter(|&k| !search.col_used[k]);
    for j in 0..a.cols {
        if search.col_map[j] == usize::MAX {
            search.col_map[j] = spare.next().expect("column counts agree");
        }
    }
    let PermSearch {
        row_map, col_map, ..
    } = search;
    let ok = (0..a.rows).all(|i| (0..a.cols).all(|j| a[(i, j)] == b[(row_map[i], col_map[j])]));
    ok.then_some((row_map, col_map))
}

struct PermSearch<'m> {
    a: &'m IntMatrix,
    b: &'m IntMatrix,
    row_map: Vec<usize>,
    row_used: Vec<bool>,
    col_map: Vec<usize>,
    col_used: Vec<bool>,
}

impl PermSearch<'_> {
    fn assign_row(&mut self, i: usize) -> bool {
        if i == self.a.rows {
            return true;
        }
        for r in 0..self.b.rows {
            if self.row_used[r] {
                continue;
            }
            let consistent = (0..self.a.cols)
                .filter(|&j| self.col_map[j] != usize::MAX)
                .all(|j| self.a[(i, j)] == self.b[(r, self.col_map[j])]);
            if !consistent {
                continue;
            }
            self.row_used[r] = true;
            self.row_map[i] = r;
            let open: Vec<usize> = (0..self.a.cols)
                .filter(|&j| self.col_map[j] == usize::MAX && !self.a[(i, j)].is_zero())
                .collect();
            if self.assign_cols(i, r, &open, 0) {
                return true;
            }
            self.row_map[i] = usize::MAX;
            self.row_used[r] = false;
        }
        false
    }

    fn assign_cols(&mut self, i: usize, r: usize, open: &[usize], k: usize) -> bool {
        if k == open.len() {
            return self.assign_row(i + 1);
        }
        let j = open[k];
        for c in 0..self.b.cols {
            if self.col_used[c] || self.b[(r, c)] != self.a[(i, j)] {
                continue;
            }
            // earlier rows must agree on the new column pair
            let fits = (0..i).all(|i2| self.a[(i2, j)] == self.b[(self.row_map[i2], c)]);
            if !fits {
                continue;
            }
            self.col_used[c] = true;
            self.col_map[j] = c;
            if self.assign_cols(i, r, open, k + 1) {
                return true;
            }
            self.col_map[j] = usize::MAX;
            self.col_used[c] = false;
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn trefoil_minor() -> IntMatrix {
        IntMatrix::from_rows(&[[-1, -1], [2, -1]])
    }

    #[test]
    fn bareiss_examples() {
        assert_eq!(bareiss_det(&trefoil_minor()).unwrap(), BigInt::from(3));
        assert_eq!(bareiss_det(&IntMatrix::identity(5)).unwrap(), BigInt::one());
        let zero_row = IntMatrix::from_rows(&[[1, 2, 3], [0, 0, 0], [4, 5, 6]]);
        assert!(bareiss_det(&zero_row).unwrap().is_zero());
        assert_eq!(
            bareiss_det(&IntMatrix::zeros(2, 3)),
            Err(LinAlgError::NotSquare { rows: 2, cols: 3 })
        );
    }

    #[test]
    fn bareiss_needs_pivot_swap() {
        let m = IntMatrix::from_rows(&[[0, 1], [1, 0]]);
        assert_eq!(bareiss_det(&m).unwrap(), BigInt::from(-1));
        let m = IntMatrix::from_rows(&[[0, 0, 1], [0, 2, 0], [3, 0, 0]]);
        assert_eq!(bareiss_det(&m).unwrap(), BigInt::from(-6));
    }

    #[test]
    fn adjugate_examples() {
        assert_eq!(
            adjugate(&trefoil_minor()).unwrap(),
            IntMatrix::from_rows(&[[-1, 1], [-2, -1]])
        );
        assert_eq!(
            adjugate(&IntMatrix::identity(4)).unwrap(),
            IntMatrix::identity(4)
        );
        assert_eq!(
            adjugate(&IntMatrix::from_rows(&[[7]])).unwrap(),
            IntMatrix::identity(1)
        );
    }

    #[test]
    fn modp_rank_examples() {
        let trefoil = IntMatrix::from_rows(&[[-1, -1, 2], [2, -1, -1], [-1, 2, -1]]);
        assert_eq!(modp_rank(&trefoil, 3).unwrap(), 1);
        assert_eq!(modp_rank(&IntMatrix::identity(4), 7).unwrap(), 4);
        assert_eq!(modp_rank(&IntMatrix::zeros(3, 3), 5).unwrap(), 0);
        assert_eq!(modp_rank(&trefoil, 4), Err(LinAlgError::NotPrime(4)));
    }

    #[test]
    fn modp_kernel_examples() {
        let trefoil = IntMatrix::from_rows(&[[-1, -1, 2], [2, -1, -1], [-1, 2, -1]]);
        let k = modp_kernel(&trefoil, 3).unwrap();
        assert_eq!(k.dimension(), 2);
        // (1,1,1) and (2,1,0) are in the span: the basis has free columns
        // 1 and 2, so a vector is determined by its last two entries.
        let in_span = |target: [u64; 3]| {
            (0..3).any(|a| {
                (0..3).any(|b| {
                    (0..3).all(|i| (a * k.basis[0][i] + b * k.basis[1][i]) % 3 == target[i])
                })
            })
        };
        assert!(in_span([1, 1, 1]));
        assert!(in_span([2, 1, 0]));
        assert_eq!(
            modp_kernel(&IntMatrix::identity(3), 5).unwrap().dimension(),
            0
        );
        assert_eq!(
            modp_kernel(&IntMatrix::zeros(2, 2), 3).unwrap().dimension(),
            2
        );
    }

    #[test]
    fn solve_integral_examples() {
        assert_eq!(solve_integral(&trefoil_minor(), 0).unwrap(), None);
        assert_eq!(
            solve_integral(&IntMatrix::identity(3), 1).unwrap(),
            Some(big(&[0, 1, 0]))
        );
        let m = IntMatrix::from_rows(&[[2, 0], [0, 1]]);
        assert_eq!(solve_integral(&m, 1).unwrap(), Some(big(&[0, 1])));
        assert_eq!(solve_integral(&m, 0).unwrap(), None);
        let singular = IntMatrix::from_rows(&[[1, 2], [2, 4]]);
        assert_eq!(solve_integral(&singular, 0), Err(LinAlgError::Singular));
    }

    #[test]
    fn primality() {
        assert!(is_prime_u64(3));
        assert!(!is_prime_u64(9));
        assert!(!is_prime_u64(1));
        assert!(!is_prime_u64(0));
        assert!(is_prime_u64(2));
        // Strong pseudoprime to bases 2..=23 is still caught.
        assert!(!is_prime_u64(3_825_123_056_546_413_051));
        assert!(is_prime_u64(18_446_744_073_709_551_557));
        assert!(!is_prime_u64(18_446_744_073_709_551_615));
        assert!(is_prime(&BigInt::from(1_000_000_007u64)));
        let mersenne_89 = (BigInt::one() << 89) - 1;
        assert!(is_prime(&mersenne_89));
        assert!(!is_prime(&(&mersenne_89 * 3)));
    }

    #[test]
    fn permutation_equivalence_finds_witness() {
        let a = IntMatrix::from_rows(&[[-1, -1, 2], [2, -1, -1], [-1, 2, -1]]);
        // rows (2,0,1), columns (1,2,0)
        let mut b = IntMatrix::zeros(3, 3);
        let (rp, cp) = ([2, 0, 1], [1, 2, 0]);
        for i in 0..3 {
            for j in 0..3 {
                b[(rp[i], cp[j])] = a[(i, j)].clone();
            }
        }
        let (rows, cols) = permutation_equivalence(&a, &b).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(a[(i, j)], b[(rows[i], cols[j])]);
            }
        }
        let c = IntMatrix::from_rows(&[[2, -1, -1], [2, -1, -1], [-1, 2, -1]]);
        assert!(permutation_equivalence(&a, &c).is_none());
    }
}
