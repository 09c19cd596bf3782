//! Integer-lattice side: primitive vectors, unimodular sets (parts of a basis
//! of `Z^l`), mod-2 reduction and the 0/1 lifting that connects 2-skeletons of
//! the real and integral universal complexes.
//!
//! All elimination runs on arbitrary-precision integers: the vectors handled
//! here are tiny, but intermediate minors must never overflow silently.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::gf2::{BitVector, Gf2Error, MAX_DIM};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("empty vector")]
    EmptyVector,
    #[error("mixed vector lengths: {0} and {1}")]
    LengthMismatch(usize, usize),
    #[error("{count} vectors cannot be unimodular in Z^{len}")]
    TooManyVectors { count: usize, len: usize },
    #[error("vector length {0} exceeds the GF(2) cap of {MAX_DIM}")]
    TooLongForReduction(usize),
    #[error("cannot lift the zero vector")]
    ZeroLift,
    #[error("vector at index {0} is not primitive")]
    NotPrimitive(usize),
    #[error("0/1 determinant enumeration capped at n <= {max}, got {n}")]
    DetSizeTooLarge { n: usize, max: usize },
    #[error(transparent)]
    Gf2(#[from] Gf2Error),
}

/// An element of `Z^l` with arbitrary-precision coordinates.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IntVector(Vec<BigInt>);

impl IntVector {
    pub fn new(coords: Vec<BigInt>) -> Result<Self, LatticeError> {
        if coords.is_empty() {
            return Err(LatticeError::EmptyVector);
        }
        Ok(IntVector(coords))
    }

    pub fn from_i64(coords: &[i64]) -> Result<Self, LatticeError> {
        IntVector::new(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }
}

/// A rectangular stack of rows from `Z^l`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMatrix {
    rows: Vec<IntVector>,
    cols: usize,
}

impl IntMatrix {
    pub fn from_rows(rows: Vec<IntVector>) -> Result<Self, LatticeError> {
        let cols = match rows.first() {
            Some(r) => r.len(),
            None => return Err(LatticeError::EmptyVector),
        };
        for r in &rows {
            if r.len() != cols {
                return Err(LatticeError::LengthMismatch(cols, r.len()));
            }
        }
        Ok(IntMatrix { rows, cols })
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[IntVector] {
        &self.rows
    }

    /// Determinant of a square matrix by fraction-free Bareiss elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.nrows(), self.ncols(), "determinant of non-square matrix");
        let n = self.nrows();
        let mut a: Vec<Vec<BigInt>> = self.rows.iter().map(|r| r.0.clone()).collect();
        bareiss_determinant(&mut a, n)
    }
}

fn bareiss_determinant(a: &mut [Vec<BigInt>], n: usize) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev; // exact by the Bareiss identity
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// True iff `v` is nonzero with coprime coordinates.
pub fn is_primitive(v: &IntVector) -> bool {
    let mut g = BigInt::zero();
    for c in v.coords() {
        g = g.gcd(c);
    }
    g.is_one()
}

/// True iff the vectors extend to a basis of the lattice: the gcd of all
/// maximal minors of their matrix is 1. Each minor is computed by
/// fraction-free integer elimination; the scan stops as soon as the gcd hits
/// 1. More vectors than coordinates is reported as a distinct error.
pub fn is_unimodular_set(vs: &[IntVector]) -> Result<bool, LatticeError> {
    let k = vs.len();
    if k == 0 {
        return Ok(true);
    }
    let m = IntMatrix::from_rows(vs.to_vec())?;
    let l = m.ncols();
    if k > l {
        return Err(LatticeError::TooManyVectors { count: k, len: l });
    }
    let mut gcd = BigInt::zero();
    let mut cols = (0..k).collect::<Vec<usize>>();
    loop {
        let minor: Vec<IntVector> = m
            .rows()
            .iter()
            .map(|r| IntVector(cols.iter().map(|&c| r.0[c].clone()).collect()))
            .collect();
        let det = IntMatrix::from_rows(minor)?.determinant();
        gcd = gcd.gcd(&det);
        if gcd.is_one() {
            return Ok(true);
        }
        if !next_combination(&mut cols, l) {
            return Ok(false);
        }
    }
}

/// Advances `cols` to the next k-combination of `0..n` in lexicographic
/// order; returns false after the last one.
fn next_combination(cols: &mut [usize], n: usize) -> bool {
    let k = cols.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if cols[i] < n - (k - i) {
            cols[i] += 1;
            for j in i + 1..k {
                cols[j] = cols[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Coordinate-wise reduction modulo two. The zero mask is legal output;
/// callers that need a nonzero image check it themselves.
pub fn mod2_reduce(v: &IntVector) -> Result<BitVector, LatticeError> {
    let l = v.len();
    if l > MAX_DIM {
        return Err(LatticeError::TooLongForReduction(l));
    }
    let mut bits = 0u64;
    for (i, c) in v.coords().iter().enumerate() {
        if c.is_odd() {
            bits |= 1 << i;
        }
    }
    Ok(BitVector::new(l, bits)?)
}

/// Lifts a nonzero GF(2) vector to the 0/1 integer vector with the same
/// support, so that `mod2_reduce(lift_01(v)) == v`.
pub fn lift_01(v: BitVector) -> Result<IntVector, LatticeError> {
    if v.is_zero() {
        return Err(LatticeError::ZeroLift);
    }
    let coords = (0..v.dim())
        .map(|i| {
            if v.coord(i).expect("index in range") {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        })
        .collect();
    IntVector::new(coords)
}

/// Maximum of `|det|` over all `n x n` matrices with 0/1 entries, by
/// exhaustive enumeration of all `2^(n^2)` matrices. Capped at `n <= 5`.
pub fn max_abs_det_01(n: usize) -> Result<u64, LatticeError> {
    const MAX_N: usize = 5;
    if n > MAX_N {
        return Err(LatticeError::DetSizeTooLarge { n, max: MAX_N });
    }
    if n == 0 {
        return Ok(1);
    }
    let cells = n * n;
    let mut best = 0u64;
    let mut m = vec![vec![0i64; n]; n];
    for code in 0u64..(1 << cells) {
        for (idx, row) in m.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = ((code >> (idx * n + j)) & 1) as i64;
            }
        }
        let d = det_i64(&m).unsigned_abs();
        if d > best {
            best = d;
        }
    }
    Ok(best)
}

/// Small fixed-size integer determinant used only by the 0/1 enumeration;
/// entries stay tiny so i64 fraction-free elimination cannot overflow.
fn det_i64(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    let mut a: Vec<Vec<i64>> = m.to_vec();
    let mut sign = 1i64;
    let mut prev = 1i64;
    for k in 0..n.saturating_sub(1) {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(coords: &[i64]) -> IntVector {
        IntVector::from_i64(coords).unwrap()
    }

    #[test]
    fn primitivity() {
        assert!(is_primitive(&iv(&[1, 0, 0])));
        assert!(!is_primitive(&iv(&[2, 0])));
        assert!(is_primitive(&iv(&[6, 10, 15])));
        assert!(!is_primitive(&iv(&[0, 0])));
        assert!(is_primitive(&iv(&[-3, 2])));
    }

    #[test]
    fn unimodular_sets() {
        assert!(is_unimodular_set(&[iv(&[1, 0, 0]), iv(&[0, 1, 0])]).unwrap());
        assert!(!is_unimodular_set(&[iv(&[2, 0])]).unwrap());
        // det = 2
        assert!(!is_unimodular_set(&[iv(&[1, 1, 0]), iv(&[0, 1, 1]), iv(&[1, 0, 1])]).unwrap());
        // det = 1
        assert!(is_unimodular_set(&[iv(&[1, 0, 0]), iv(&[1, 1, 0]), iv(&[1, 1, 1])]).unwrap());
        // empty set extends to any basis
        assert!(is_unimodular_set(&[]).unwrap());
        // non-square: gcd of the two 2x2 minors of [[2,0,1],[0,1,0]] is 1
        assert!(is_unimodular_set(&[iv(&[2, 0, 1]), iv(&[0, 1, 0])]).unwrap());
    }

    #[test]
    fn too_many_vectors_is_distinct_signal() {
        let err =
            is_unimodular_set(&[iv(&[1, 0]), iv(&[0, 1]), iv(&[1, 1])]).unwrap_err();
        assert_eq!(err, LatticeError::TooManyVectors { count: 3, len: 2 });
    }

    #[test]
    fn reduction_and_lift() {
        assert_eq!(mod2_reduce(&iv(&[1, 0, 1])).unwrap().to_string(), "101");
        assert!(mod2_reduce(&iv(&[2, 4, 6])).unwrap().is_zero());
        assert_eq!(mod2_reduce(&iv(&[3, -1, 2])).unwrap().to_string(), "110");

        let v = BitVector::new(3, 0b101).unwrap();
        assert_eq!(lift_01(v).unwrap(), iv(&[1, 0, 1]));
        let e1 = BitVector::unit(4, 0).unwrap();
        assert_eq!(lift_01(e1).unwrap(), iv(&[1, 0, 0, 0]));
        let ones = BitVector::new(4, 0b1111).unwrap();
        assert_eq!(lift_01(ones).unwrap(), iv(&[1, 1, 1, 1]));
        assert_eq!(
            lift_01(BitVector::zero(3).unwrap()).unwrap_err(),
            LatticeError::ZeroLift
        );
    }

    #[test]
    fn lift_then_reduce_is_identity() {
        for bits in 1u64..(1 << 5) {
            let v = BitVector::new(5, bits).unwrap();
            assert_eq!(mod2_reduce(&lift_01(v).unwrap()).unwrap(), v);
        }
    }

    #[test]
    fn zero_one_determinant_maxima() {
        assert_eq!(max_abs_det_01(1).unwrap(), 1);
        assert_eq!(max_abs_det_01(2).unwrap(), 1);
        assert_eq!(max_abs_det_01(3).unwrap(), 2);
        assert_eq!(max_abs_det_01(4).unwrap(), 3);
        assert!(max_abs_det_01(6).is_err());
    }

    #[test]
    fn determinant_matches_cofactor_expansion() {
        let m = IntMatrix::from_rows(vec![
            iv(&[2, -1, 3]),
            iv(&[0, 4, 5]),
            iv(&[-2, 1, 7]),
        ])
        .unwrap();
        // Cofactor expansion along the first column: 2*(28-5) + (-2)*(-5-12) = 80.
        assert_eq!(m.determinant(), BigInt::from(80));
    }

    #[test]
    fn unimodularity_invariant_under_row_operations() {
        let base = vec![iv(&[1, 2, 0]), iv(&[0, 1, -1])];
        assert!(is_unimodular_set(&base).unwrap());
        // swap
        assert!(is_unimodular_set(&[base[1].clone(), base[0].clone()]).unwrap());
        // negate a row
        let neg = IntVector::new(base[0].coords().iter().map(|c| -c).collect()).unwrap();
        assert!(is_unimodular_set(&[neg, base[1].clone()]).unwrap());
        // add a multiple of one row to another
        let mixed = IntVector::new(
            base[0]
                .coords()
                .iter()
                .zip(base[1].coords())
                .map(|(a, b)| a + BigInt::from(3) * b)
                .collect(),
        )
        .unwrap();
        assert!(is_unimodular_set(&[mixed, base[1].clone()]).unwrap());
    }
}
