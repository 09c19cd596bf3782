//! Linear algebra over GF(2) on bitmask vectors, plus GF(2^q) scalar
//! arithmetic for spread colorings.
//!
//! A vector of `GF(2)^l` is an `l`-bit mask with bit `i` holding coordinate
//! `i`; `l` is capped at 62 so a vector always fits one machine word. The
//! canonical order on vectors of fixed dimension is increasing mask value;
//! every search in this crate that promises a deterministic witness iterates
//! candidates in that order.

use std::fmt;
use std::ops::BitXor;

use thiserror::Error;

/// Largest supported vector dimension (one `u64` word, sign bit spared).
pub const MAX_DIM: usize = 62;

/// Largest supported extension degree for [`GF2Field`].
pub const MAX_FIELD_DEGREE: usize = 16;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Gf2Error {
    #[error("vector dimension {0} out of range 1..={MAX_DIM}")]
    DimensionOutOfRange(usize),
    #[error("bit mask {mask:#x} does not fit in dimension {dim}")]
    MaskTooWide { mask: u64, dim: usize },
    #[error("mixed vector dimensions: {0} and {1}")]
    DimensionMismatch(usize, usize),
    #[error("coordinate index {index} out of range for dimension {dim}")]
    CoordinateOutOfRange { index: usize, dim: usize },
    #[error("field degree {0} out of range 1..={MAX_FIELD_DEGREE}")]
    DegreeOutOfRange(usize),
    #[error("polynomial {0:#b} is not irreducible")]
    ReduciblePolynomial(u64),
    #[error("polynomial {mask:#b} does not have degree {degree}")]
    WrongDegree { mask: u64, degree: usize },
    #[error("vector dimension {dim} is not divisible by field degree {degree}")]
    BlockMismatch { dim: usize, degree: usize },
}

/// An element of `GF(2)^l`, stored as an `l`-bit mask (bit `i` = coordinate
/// `i`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVector {
    dim: usize,
    bits: u64,
}

impl BitVector {
    pub fn new(dim: usize, bits: u64) -> Result<Self, Gf2Error> {
        if dim == 0 || dim > MAX_DIM {
            return Err(Gf2Error::DimensionOutOfRange(dim));
        }
        if bits >> dim != 0 {
            return Err(Gf2Error::MaskTooWide { mask: bits, dim });
        }
        Ok(BitVector { dim, bits })
    }

    /// The zero vector of `GF(2)^dim`.
    pub fn zero(dim: usize) -> Result<Self, Gf2Error> {
        BitVector::new(dim, 0)
    }

    /// The standard basis vector with coordinate `index` set.
    pub fn unit(dim: usize, index: usize) -> Result<Self, Gf2Error> {
        if index >= dim {
            return Err(Gf2Error::CoordinateOutOfRange { index, dim });
        }
        BitVector::new(dim, 1 << index)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    /// Coordinate `index` of the vector.
    pub fn coord(&self, index: usize) -> Result<bool, Gf2Error> {
        if index >= self.dim {
            return Err(Gf2Error::CoordinateOutOfRange {
                index,
                dim: self.dim,
            });
        }
        Ok((self.bits >> index) & 1 == 1)
    }

    /// Number of nonzero coordinates.
    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }
}

impl BitXor for BitVector {
    type Output = BitVector;

    fn bitxor(self, rhs: BitVector) -> BitVector {
        debug_assert_eq!(self.dim, rhs.dim, "xor of mixed dimensions");
        BitVector {
            dim: self.dim,
            bits: self.bits ^ rhs.bits,
        }
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({})", self)
    }
}

/// Displays coordinates in index order: coordinate 0 first.
impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim {
            write!(f, "{}", (self.bits >> i) & 1)?;
        }
        Ok(())
    }
}

fn common_dim(vs: &[BitVector]) -> Result<Option<usize>, Gf2Error> {
    let mut dim = None;
    for v in vs {
        match dim {
            None => dim = Some(v.dim()),
            Some(d) if d != v.dim() => return Err(Gf2Error::DimensionMismatch(d, v.dim())),
            _ => {}
        }
    }
    Ok(dim)
}

/// GF(2) rank of a set of vectors, by in-place elimination on the masks.
pub fn rank(vs: &[BitVector]) -> Result<usize, Gf2Error> {
    common_dim(vs)?;
    Ok(rank_of_masks(vs.iter().map(|v| v.bits)))
}

/// Rank of raw masks; callers guarantee a common dimension.
pub(crate) fn rank_of_masks(masks: impl IntoIterator<Item = u64>) -> usize {
    let mut pivots = [0u64; 64];
    let mut rank = 0;
    for mut v in masks {
        while v != 0 {
            let h = 63 - v.leading_zeros() as usize;
            if pivots[h] == 0 {
                pivots[h] = v;
                rank += 1;
                break;
            }
            v ^= pivots[h];
        }
    }
    rank
}

/// True iff the vectors are linearly independent over GF(2).
pub fn is_independent(vs: &[BitVector]) -> Result<bool, Gf2Error> {
    Ok(rank(vs)? == vs.len())
}

/// The `2^l - 1` nonzero vectors of `GF(2)^l` in increasing mask order. This
/// is the canonical vector order referenced by all witness determinism
/// statements.
pub fn enumerate_nonzero(l: usize) -> Result<Vec<BitVector>, Gf2Error> {
    if l == 0 || l > MAX_DIM {
        return Err(Gf2Error::DimensionOutOfRange(l));
    }
    Ok((1..(1u64 << l))
        .map(|bits| BitVector { dim: l, bits })
        .collect())
}

/// True iff `v` lies in the coordinate hyperplane `{x : x_coordinate = 0}`.
pub fn in_hyperplane(v: BitVector, coordinate: usize) -> Result<bool, Gf2Error> {
    Ok(!v.coord(coordinate)?)
}

/// Lexicographically least irreducible polynomial of each degree `1..=16`
/// over GF(2), as bitmasks with bit `i` the coefficient of `x^i`. Fixing this
/// table makes spread colorings reproducible bit-for-bit.
const LEAST_IRREDUCIBLE: [u64; MAX_FIELD_DEGREE + 1] = [
    0, // degree 0 unused
    0b10,
    0b111,
    0b1011,
    0b10011,
    0b100101,
    0b1000011,
    0b10000011,
    0b100011011,
    0b1000000011,
    0b10000001001,
    0b100000000101,
    0b1000000001001,
    0b10000000011011,
    0b100000000100001,
    0b1000000000000011,
    0b10000000000101011,
];

/// Carry-less polynomial product over GF(2).
fn poly_mul(mut a: u64, mut b: u64) -> u64 {
    let mut acc = 0;
    while b != 0 {
        if b & 1 == 1 {
            acc ^= a;
        }
        a <<= 1;
        b >>= 1;
    }
    acc
}

/// Remainder of polynomial division over GF(2).
fn poly_mod(mut a: u64, m: u64) -> u64 {
    let dm = 63 - m.leading_zeros() as i32;
    loop {
        let da = 63 - a.leading_zeros() as i32;
        if a == 0 || da < dm {
            return a;
        }
        a ^= m << (da - dm);
    }
}

/// Exhaustive trial-division irreducibility check, adequate for degree <= 16.
fn poly_is_irreducible(p: u64) -> bool {
    let d = match p {
        0 => return false,
        _ => 63 - p.leading_zeros() as usize,
    };
    if d == 0 {
        return false;
    }
    for q in 2u64..(1 << (d / 2 + 1)) {
        if q.leading_zeros() as usize == 63 {
            continue; // degree-0 polynomial
        }
        if poly_mod(p, q) == 0 {
            return false;
        }
    }
    true
}

/// The field `GF(2^q)`, with elements encoded as `q`-bit masks in the
/// polynomial basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GF2Field {
    q: usize,
    modulus: u64,
}

impl GF2Field {
    /// Constructs `GF(2^q)` over the canonical modulus (the lexicographically
    /// least irreducible polynomial of degree `q`).
    pub fn new(q: usize) -> Result<Self, Gf2Error> {
        if q == 0 || q > MAX_FIELD_DEGREE {
            return Err(Gf2Error::DegreeOutOfRange(q));
        }
        GF2Field::with_modulus(q, LEAST_IRREDUCIBLE[q])
    }

    /// Constructs `GF(2^q)` over a caller-supplied modulus; the modulus is
    /// verified irreducible by exhaustive divisor check.
    pub fn with_modulus(q: usize, modulus: u64) -> Result<Self, Gf2Error> {
        if q == 0 || q > MAX_FIELD_DEGREE {
            return Err(Gf2Error::DegreeOutOfRange(q));
        }
        if modulus >> q != 1 {
            return Err(Gf2Error::WrongDegree { mask: modulus, degree: q });
        }
        if !poly_is_irreducible(modulus) {
            return Err(Gf2Error::ReduciblePolynomial(modulus));
        }
        Ok(GF2Field { q, modulus })
    }

    pub fn degree(&self) -> usize {
        self.q
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Number of elements, `2^q`.
    pub fn order(&self) -> u64 {
        1 << self.q
    }

    /// Field product of two elements (masks below `2^q`).
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        debug_assert!(a < self.order() && b < self.order());
        poly_mod(poly_mul(a, b), self.modulus)
    }

    /// `a^n` by square-and-multiply.
    pub fn pow(&self, mut a: u64, mut n: u64) -> u64 {
        let mut acc = 1;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            n >>= 1;
        }
        acc
    }

    /// Multiplicative inverse of a nonzero element.
    pub fn inverse(&self, a: u64) -> Option<u64> {
        if a == 0 {
            return None;
        }
        // The nonzero elements form a group of order 2^q - 1.
        Some(self.pow(a, (self.order() - 1) - 1))
    }
}

/// Scalar action of `c` in `GF(2^q)` on `v` in `GF(2)^(q*p)`: the mask splits
/// into `p` blocks of `q` bits and each block is multiplied by `c`. This is
/// the `F`-module structure of `GF(2)^(q*p)` seen as `F^p`.
pub fn scalar_action(field: &GF2Field, c: u64, v: BitVector) -> Result<BitVector, Gf2Error> {
    let q = field.degree();
    if v.dim() % q != 0 {
        return Err(Gf2Error::BlockMismatch {
            dim: v.dim(),
            degree: q,
        });
    }
    let block_mask = (1u64 << q) - 1;
    let mut out = 0u64;
    for block in 0..v.dim() / q {
        let chunk = (v.bits() >> (block * q)) & block_mask;
        out |= field.mul(c, chunk) << (block * q);
    }
    BitVector::new(v.dim(), out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bv(l: usize, bits: u64) -> BitVector {
        BitVector::new(l, bits).unwrap()
    }

    #[test]
    fn unit_vectors_are_independent() {
        let vs = [bv(3, 0b001), bv(3, 0b010)];
        assert!(is_independent(&vs).unwrap());
    }

    #[test]
    fn repeated_vector_is_dependent() {
        let v = bv(3, 0b101);
        assert!(!is_independent(&[v, v]).unwrap());
    }

    #[test]
    fn three_cycle_sums_to_zero() {
        // (1,1,0), (0,1,1), (1,0,1): the XOR of the three masks is 0.
        let vs = [bv(3, 0b011), bv(3, 0b110), bv(3, 0b101)];
        assert_eq!(vs[0].bits() ^ vs[1].bits() ^ vs[2].bits(), 0);
        assert!(!is_independent(&vs).unwrap());
        assert_eq!(rank(&vs).unwrap(), 2);
    }

    #[test]
    fn rank_cases() {
        assert_eq!(rank(&[]).unwrap(), 0);
        let basis: Vec<_> = (0..5).map(|i| BitVector::unit(5, i).unwrap()).collect();
        assert_eq!(rank(&basis).unwrap(), 5);
        let all = enumerate_nonzero(3).unwrap();
        assert_eq!(all.len(), 7);
        assert_eq!(rank(&all).unwrap(), 3);
    }

    #[test]
    fn rank_rejects_mixed_dims() {
        let err = rank(&[bv(2, 1), bv(3, 1)]).unwrap_err();
        assert_eq!(err, Gf2Error::DimensionMismatch(2, 3));
    }

    #[test]
    fn enumerate_nonzero_is_canonical() {
        let vs = enumerate_nonzero(2).unwrap();
        assert_eq!(
            vs.iter().map(|v| v.bits()).collect::<Vec<_>>(),
            vec![1, 2, 3]
        );
        assert_eq!(enumerate_nonzero(4).unwrap().len(), 15);
        assert_eq!(enumerate_nonzero(1).unwrap().len(), 1);
        assert!(enumerate_nonzero(0).is_err());
        assert!(enumerate_nonzero(63).is_err());
    }

    #[test]
    fn hyperplane_membership() {
        assert!(in_hyperplane(bv(3, 0b010), 0).unwrap());
        assert!(!in_hyperplane(bv(3, 0b001), 0).unwrap());
        assert!(!in_hyperplane(bv(4, 0b1101), 3).unwrap());
        assert!(in_hyperplane(bv(4, 0b0101), 3).unwrap());
        assert!(in_hyperplane(bv(3, 1), 5).is_err());
    }

    #[test]
    fn display_is_coordinate_order() {
        assert_eq!(bv(3, 0b101).to_string(), "101");
        assert_eq!(bv(3, 0b001).to_string(), "100");
        assert_eq!(bv(4, 0b0010).to_string(), "0100");
    }

    #[test]
    fn canonical_moduli_are_least_irreducible() {
        for q in 1..=MAX_FIELD_DEGREE {
            let canonical = LEAST_IRREDUCIBLE[q];
            assert!(poly_is_irreducible(canonical), "q={q}");
            for mask in (1u64 << q)..canonical {
                assert!(!poly_is_irreducible(mask), "q={q} mask={mask:#b}");
            }
            assert!(GF2Field::new(q).is_ok());
        }
    }

    #[test]
    fn gf4_multiplication_table() {
        // GF(4) over x^2 + x + 1: x * x = x + 1.
        let f = GF2Field::new(2).unwrap();
        let x = 0b10;
        assert_eq!(f.mul(x, x), 0b11);
        assert_eq!(f.mul(x, 1), x);
        assert_eq!(f.mul(0, x), 0);
    }

    #[test]
    fn gf8_multiplicative_order() {
        // In GF(8) over x^3 + x + 1 the element x generates the order-7 group.
        let f = GF2Field::new(3).unwrap();
        let x = 0b010;
        let mut seen = std::collections::HashSet::new();
        let mut a = 1;
        for _ in 0..7 {
            a = f.mul(a, x);
            seen.insert(a);
        }
        assert_eq!(a, 1);
        assert_eq!(seen.len(), 7);
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        // Full associativity and inverse check for q <= 5 here; the heavier
        // q <= 8 sweep lives in the integration suite.
        for q in 1..=5 {
            let f = GF2Field::new(q).unwrap();
            let n = f.order();
            for a in 0..n {
                for b in 0..n {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in 0..n {
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, b ^ c), f.mul(a, b) ^ f.mul(a, c));
                    }
                }
            }
            for a in 1..n {
                let inv = f.inverse(a).unwrap();
                assert_eq!(f.mul(a, inv), 1, "q={q} a={a}");
            }
        }
    }

    #[test]
    fn with_modulus_rejects_reducible() {
        // x^2 + 1 = (x + 1)^2 over GF(2).
        assert_eq!(
            GF2Field::with_modulus(2, 0b101).unwrap_err(),
            Gf2Error::ReduciblePolynomial(0b101)
        );
        assert!(GF2Field::with_modulus(3, 0b1101).is_ok()); // x^3 + x^2 + 1
    }

    #[test]
    fn scalar_action_blocks() {
        let f = GF2Field::new(2).unwrap();
        // q=2, p=2: v has blocks (e1|e1); multiplying by x gives (x|x).
        let v = bv(4, 0b0101);
        let x = 0b10;
        let out = scalar_action(&f, x, v).unwrap();
        assert_eq!(out.bits(), 0b1010);
        // c = 1 fixes, c = 0 kills.
        assert_eq!(scalar_action(&f, 1, v).unwrap(), v);
        assert!(scalar_action(&f, 0, v).unwrap().is_zero());
        // dimension must be a multiple of q.
        assert!(scalar_action(&f, 1, bv(3, 0b101)).is_err());
    }

    #[test]
    fn scalar_orbits_partition_nonzero_vectors() {
        // Orbits of nonzero vectors under nonzero scalars have size exactly
        // 2^q - 1 and partition GF(2)^(qp) minus zero.
        for (q, p) in [(1usize, 3usize), (2, 2), (3, 2), (2, 3)] {
            let f = GF2Field::new(q).unwrap();
            let l = q * p;
            let mut seen = vec![false; 1 << l];
            let mut classes = 0;
            for bits in 1..(1u64 << l) {
                if seen[bits as usize] {
                    continue;
                }
                classes += 1;
                let v = bv(l, bits);
                let mut orbit = std::collections::HashSet::new();
                for c in 1..f.order() {
                    let w = scalar_action(&f, c, v).unwrap();
                    assert!(!w.is_zero());
                    orbit.insert(w.bits());
                    seen[w.bits() as usize] = true;
                }
                assert_eq!(orbit.len(), (1 << q) - 1, "q={q} p={p}");
            }
            assert_eq!(classes as u64, ((1u64 << l) - 1) / ((1 << q) - 1));
            assert!(seen[1..].iter().all(|&s| s));
        }
    }
}
