//! Prime-field arithmetic `F_q` with a runtime modulus.
//!
//! The modulus is a runtime parameter rather than a compile-time constant:
//! exhaustive soundness sweeps need tiny fields (q = 2, 3, 5, 7, 17) while
//! complexity benchmarks run over a 61-bit prime, and both must share one
//! code path. Elements carry their modulus so mixed-context arithmetic is a
//! hard usage error instead of silent garbage.

use alloc::vec::Vec;
use core::fmt;

use rand_core::RngCore;

use crate::count::OpCount;

/// Default 61-bit modulus for benchmarks: the Mersenne prime 2^61 - 1.
pub const DEFAULT_MODULUS: u64 = (1 << 61) - 1;

const MAX_MODULUS: u64 = 1 << 61;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldError {
    /// The requested modulus failed the primality test.
    NotPrime(u64),
    /// The requested modulus exceeds the supported 61-bit range.
    TooLarge(u64),
    /// Multiplicative inverse of zero.
    ZeroInverse,
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::NotPrime(q) => write!(f, "modulus {q} is not prime"),
            FieldError::TooLarge(q) => write!(f, "modulus {q} exceeds the supported 61-bit range"),
            FieldError::ZeroInverse => write!(f, "zero has no multiplicative inverse"),
        }
    }
}

impl core::error::Error for FieldError {}

/// A prime field, identified by its modulus.
///
/// Construction verifies primality, so every [`FieldElement`] carrying this
/// modulus is known to live in an actual field. Contexts are plain values and
/// freely shareable across threads.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FieldContext {
    modulus: u64,
}

impl FieldContext {
    pub fn new(modulus: u64) -> Result<Self, FieldError> {
        if modulus > MAX_MODULUS {
            return Err(FieldError::TooLarge(modulus));
        }
        if !is_prime_u64(modulus) {
            return Err(FieldError::NotPrime(modulus));
        }
        Ok(FieldContext { modulus })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Embed an integer, reducing it into `[0, q)`.
    #[inline]
    pub fn element(&self, value: u64) -> FieldElement {
        FieldElement {
            value: value % self.modulus,
            modulus: self.modulus,
        }
    }

    pub fn zero(&self) -> FieldElement {
        self.element(0)
    }

    pub fn one(&self) -> FieldElement {
        self.element(1)
    }

    /// All field elements in ascending order. Intended for exhaustive tests
    /// over small fields.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.modulus).map(move |v| self.element(v))
    }

    /// Uniform draw over `[0, q)` by rejection sampling.
    ///
    /// Plain modular reduction of a 64-bit word would skew low residues;
    /// exact uniformity is the premise of the soundness argument, so draws
    /// falling in the final partial block are rejected.
    pub fn sample_uniform<R: RngCore + ?Sized>(&self, rng: &mut R) -> FieldElement {
        let q = self.modulus as u128;
        // Largest multiple of q representable in 64 bits.
        let zone = (1u128 << 64) / q * q;
        loop {
            let raw = rng.next_u64();
            if (raw as u128) < zone {
                return self.element(raw % self.modulus);
            }
        }
    }

    /// Uniform draw over the nonzero elements.
    pub fn sample_nonzero<R: RngCore + ?Sized>(&self, rng: &mut R) -> FieldElement {
        loop {
            let e = self.sample_uniform(rng);
            if !e.is_zero() {
                return e;
            }
        }
    }

    pub fn sample_vector<R: RngCore + ?Sized>(&self, rng: &mut R, len: usize) -> Vec<FieldElement> {
        (0..len).map(|_| self.sample_uniform(rng)).collect()
    }

    /// Matrix of i.i.d. uniform entries, filled in row-major order.
    pub fn sample_matrix<R: RngCore + ?Sized>(
        &self,
        rng: &mut R,
        rows: usize,
        cols: usize,
    ) -> Matrix {
        Matrix {
            rows,
            cols,
            data: self.sample_vector(rng, rows * cols),
        }
    }
}

/// A residue in `[0, q)` tagged with its modulus.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    value: u64,
    modulus: u64,
}

impl FieldElement {
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn context(&self) -> FieldContext {
        // The modulus was validated when the originating context was built.
        FieldContext {
            modulus: self.modulus,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    /// `self^exp` by square-and-multiply, charging each executed
    /// multiplication to `count`. Cost is O(log exp).
    pub fn pow_counted(self, mut exp: u64, count: &mut OpCount) -> FieldElement {
        let ctx = self.context();
        let mut result = ctx.one();
        let mut base = self;
        loop {
            if exp & 1 == 1 {
                result = count.mul(result, base);
            }
            exp >>= 1;
            if exp == 0 {
                return result;
            }
            base = count.mul(base, base);
        }
    }

    /// Uncounted exponentiation, for oracles and test fixtures.
    pub fn pow(self, exp: u64) -> FieldElement {
        self.pow_counted(exp, &mut OpCount::default())
    }

    /// Multiplicative inverse via Fermat's little theorem.
    pub fn inv(self) -> Result<FieldElement, FieldError> {
        if self.is_zero() {
            return Err(FieldError::ZeroInverse);
        }
        Ok(self.pow(self.modulus - 2))
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[inline]
fn check_same_field(a: &FieldElement, b: &FieldElement) {
    assert_eq!(
        a.modulus, b.modulus,
        "field context mismatch: {} vs {}",
        a.modulus, b.modulus
    );
}

impl core::ops::Add for FieldElement {
    type Output = FieldElement;

    #[inline]
    fn add(self, rhs: FieldElement) -> FieldElement {
        check_same_field(&self, &rhs);
        let mut v = self.value + rhs.value;
        if v >= self.modulus {
            v -= self.modulus;
        }
        FieldElement {
            value: v,
            modulus: self.modulus,
        }
    }
}

impl core::ops::Sub for FieldElement {
    type Output = FieldElement;

    #[inline]
    fn sub(self, rhs: FieldElement) -> FieldElement {
        check_same_field(&self, &rhs);
        let v = if self.value >= rhs.value {
            self.value - rhs.value
        } else {
            self.modulus - (rhs.value - self.value)
        };
        FieldElement {
            value: v,
            modulus: self.modulus,
        }
    }
}

impl core::ops::Mul for FieldElement {
    type Output = FieldElement;

    #[inline]
    fn mul(self, rhs: FieldElement) -> FieldElement {
        check_same_field(&self, &rhs);
        FieldElement {
            value: mul_mod(self.value, rhs.value, self.modulus),
            modulus: self.modulus,
        }
    }
}

impl core::ops::Neg for FieldElement {
    type Output = FieldElement;

    #[inline]
    fn neg(self) -> FieldElement {
        FieldElement {
            value: if self.value == 0 {
                0
            } else {
                self.modulus - self.value
            },
            modulus: self.modulus,
        }
    }
}

/// Dense row-major matrix of field elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl Matrix {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<FieldElement>) -> Matrix {
        assert_eq!(data.len(), rows * cols, "matrix shape/data mismatch");
        if let Some(first) = data.first() {
            let m = first.modulus();
            assert!(
                data.iter().all(|e| e.modulus() == m),
                "matrix entries from mixed field contexts"
            );
        }
        Matrix { rows, cols, data }
    }

    pub fn zero(ctx: FieldContext, rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            data: alloc::vec![ctx.zero(); rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    #[inline]
    pub fn at(&self, row: usize, col: usize) -> FieldElement {
        self.data[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: FieldElement) {
        self.data[row * self.cols + col] = value;
    }

    #[inline]
    pub fn row(&self, row: usize) -> &[FieldElement] {
        &self.data[row * self.cols..(row + 1) * self.cols]
    }

    pub fn data(&self) -> &[FieldElement] {
        &self.data
    }

    /// Copy of the horizontal band `[start, end)` of rows.
    pub fn row_block(&self, start: usize, end: usize) -> Matrix {
        assert!(start <= end && end <= self.rows, "row block out of range");
        Matrix {
            rows: end - start,
            cols: self.cols,
            data: self.data[start * self.cols..end * self.cols].to_vec(),
        }
    }

    /// `self * rhs`, charging rows * inner * cols multiplications.
    pub fn multiply(&self, rhs: &Matrix, count: &mut OpCount) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        assert!(self.cols > 0, "degenerate inner dimension");
        let mut data = Vec::with_capacity(self.rows * rhs.cols);
        for r in 0..self.rows {
            let row = self.row(r);
            for c in 0..rhs.cols {
                let mut acc = count.mul(row[0], rhs.at(0, c));
                for i in 1..self.cols {
                    acc = count.add(acc, count.mul(row[i], rhs.at(i, c)));
                }
                data.push(acc);
            }
        }
        Matrix {
            rows: self.rows,
            cols: rhs.cols,
            data,
        }
    }
}

/// `a * b mod m` without overflow for any 64-bit modulus.
#[inline]
fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for 64-bit integers. The witness set
/// {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37} is exact for all n < 2^64.
pub fn is_prime_u64(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &WITNESSES {
        if n % p == 0 {
            return n == p;
        }
    }
    let trailing = (n - 1).trailing_zeros();
    let odd = (n - 1) >> trailing;
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, odd, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..trailing {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
