//! Polynomials and their square-matrix decomposition.
//!
//! A coefficient vector `[a_0 .. a_{k-1}]` is cut into `s = ceil(sqrt(k))`
//! consecutive chunks of length `s` (zero-padded when `k` is not a perfect
//! square) and laid out row-major as an `s x s` matrix `D` with
//! `D[i][j] = a_{i*s+j}`. Evaluation then factors through two vectors:
//!
//! ```text
//! f(x) = [1, x^s, .., x^{s(s-1)}] * D * [1, x, .., x^{s-1}]^T
//! ```
//!
//! The inner product `D * [1, x, ..]^T` is the delegated O(k) work; the outer
//! contraction is the user's O(sqrt(k)) share. [`horner_eval`] is the
//! ground-truth evaluator the rest of the crate is checked against.

use alloc::vec::Vec;
use core::fmt;

use rand_core::RngCore;

use crate::count::OpCount;
use crate::field::{FieldContext, FieldElement, Matrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyError {
    /// A polynomial needs at least one coefficient.
    Empty,
    /// Coefficients drawn from different field contexts.
    MixedContext,
    /// Requested chunk size cannot hold the coefficient vector.
    ChunkTooSmall { chunk: usize, len: usize },
}

impl fmt::Display for PolyError {
    fmt_match!();
}

impl core::error::Error for PolyError {}

/// Coefficient vector over one field; index `i` holds the coefficient of
/// `x^i`. The length is a declared degree bound, so trailing zeros are fine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<FieldElement>,
}

impl Polynomial {
    pub fn new(coeffs: Vec<FieldElement>) -> Result<Polynomial, PolyError> {
        let first = coeffs.first().ok_or(PolyError::Empty)?;
        let modulus = first.modulus();
        if coeffs.iter().any(|c| c.modulus() != modulus) {
            return Err(PolyError::MixedContext);
        }
        Ok(Polynomial { coeffs })
    }

    pub fn from_values(ctx: FieldContext, values: &[u64]) -> Result<Polynomial, PolyError> {
        if values.is_empty() {
            return Err(PolyError::Empty);
        }
        Ok(Polynomial {
            coeffs: values.iter().map(|&v| ctx.element(v)).collect(),
        })
    }

    /// Uniform random coefficients; `len >= 1`.
    pub fn random<R: RngCore + ?Sized>(ctx: FieldContext, len: usize, rng: &mut R) -> Polynomial {
        assert!(len >= 1, "polynomial needs at least one coefficient");
        Polynomial {
            coeffs: ctx.sample_vector(rng, len),
        }
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// The declared degree bound `k` (number of coefficients).
    pub fn degree_bound(&self) -> usize {
        self.coeffs.len()
    }

    pub fn context(&self) -> FieldContext {
        self.coeffs[0].context()
    }
}

/// Reference evaluator: Horner's rule, `k-1` multiplications and `k-1`
/// additions. Every other evaluation path in the crate is checked against it.
pub fn horner_eval(f: &Polynomial, x: FieldElement, count: &mut OpCount) -> FieldElement {
    let coeffs = f.coeffs();
    let mut acc = *coeffs.last().expect("polynomial is never empty");
    for &a in coeffs.iter().rev().skip(1) {
        acc = count.add(count.mul(acc, x), a);
    }
    acc
}

/// The square coefficient matrix of a polynomial, plus how many zero
/// coefficients were appended to fill it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffMatrix {
    cells: Matrix,
    pad_count: usize,
}

impl CoeffMatrix {
    /// Wrap an existing square matrix (used by the multivariate flattening,
    /// which produces the matrix directly).
    pub fn from_square(cells: Matrix) -> CoeffMatrix {
        assert_eq!(cells.rows(), cells.cols(), "coefficient matrix must be square");
        assert!(cells.rows() >= 1, "coefficient matrix must be nonempty");
        CoeffMatrix { cells, pad_count: 0 }
    }

    /// Side length `s` of the matrix; also the length of both power vectors.
    pub fn chunk(&self) -> usize {
        self.cells.rows()
    }

    pub fn cells(&self) -> &Matrix {
        &self.cells
    }

    pub fn pad_count(&self) -> usize {
        self.pad_count
    }

    pub fn context(&self) -> FieldContext {
        self.cells.at(0, 0).context()
    }
}

/// Smallest `s` with `s*s >= k`.
pub fn ceil_sqrt(k: usize) -> usize {
    let s = k.isqrt();
    if s * s < k {
        s + 1
    } else {
        s
    }
}

/// Row-major chunking into the natural `ceil(sqrt(k))`-sized square.
pub fn decompose(f: &Polynomial) -> CoeffMatrix {
    decompose_with_chunk(f, ceil_sqrt(f.degree_bound())).expect("natural chunk always fits")
}

/// Row-major chunking into a caller-chosen `chunk x chunk` square; the
/// multi-party split rounds the chunk up so the node count divides it.
/// Padding coefficients are zero and public, so they change neither the
/// evaluation nor the soundness argument.
pub fn decompose_with_chunk(f: &Polynomial, chunk: usize) -> Result<CoeffMatrix, PolyError> {
    let k = f.degree_bound();
    if chunk * chunk < k || chunk == 0 {
        return Err(PolyError::ChunkTooSmall { chunk, len: k });
    }
    let ctx = f.context();
    let mut data = Vec::with_capacity(chunk * chunk);
    data.extend_from_slice(f.coeffs());
    data.resize(chunk * chunk, ctx.zero());
    Ok(CoeffMatrix {
        cells: Matrix::from_vec(chunk, chunk, data),
        pad_count: chunk * chunk - k,
    })
}

/// The two power vectors of one round.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerVectors {
    /// `[1, x, .., x^{s-1}]` — revealed to the server as the query.
    pub right: Vec<FieldElement>,
    /// `[1, x^s, .., x^{s(s-1)}]` — contracts the response to `f(x)`.
    pub left: Vec<FieldElement>,
}

/// Build both power vectors by running products. A single square-and-multiply
/// exponentiation produces `x^s`; everything else is one multiplication per
/// entry, `2(s-1) + O(log s)` multiplications in total.
pub fn power_vectors(x: FieldElement, chunk: usize, count: &mut OpCount) -> PowerVectors {
    assert!(chunk >= 1, "chunk size must be positive");
    let one = x.context().one();
    let mut right = Vec::with_capacity(chunk);
    right.push(one);
    for i in 1..chunk {
        let next = count.mul(right[i - 1], x);
        right.push(next);
    }
    let mut left = Vec::with_capacity(chunk);
    left.push(one);
    if chunk > 1 {
        let stride = x.pow_counted(chunk as u64, count);
        left.push(stride);
        for i in 2..chunk {
            let next = count.mul(left[i - 1], stride);
            left.push(next);
        }
    }
    PowerVectors { right, left }
}

/// Matrix-vector product; exactly `rows * cols` multiplications.
pub fn matvec(m: &Matrix, v: &[FieldElement], count: &mut OpCount) -> Vec<FieldElement> {
    assert_eq!(m.cols(), v.len(), "matvec shape mismatch");
    assert!(m.cols() > 0 || m.rows() == 0, "matvec over empty rows");
    (0..m.rows())
        .map(|r| {
            let row = m.row(r);
            let mut acc = count.mul(row[0], v[0]);
            for i in 1..v.len() {
                acc = count.add(acc, count.mul(row[i], v[i]));
            }
            acc
        })
        .collect()
}

/// Inner product of two equal-length vectors; `len` multiplications.
pub fn dot(a: &[FieldElement], b: &[FieldElement], count: &mut OpCount) -> FieldElement {
    assert_eq!(a.len(), b.len(), "dot product shape mismatch");
    assert!(!a.is_empty(), "dot product of empty vectors");
    let mut acc = count.mul(a[0], b[0]);
    for i in 1..a.len() {
        acc = count.add(acc, count.mul(a[i], b[i]));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng;

    fn ctx7() -> FieldContext {
        FieldContext::new(7).unwrap()
    }

    #[test]
    fn horner_constant_and_hand_example() {
        let ctx = ctx7();
        let constant = Polynomial::from_values(ctx, &[5]).unwrap();
        for x in ctx.elements() {
            assert_eq!(
                horner_eval(&constant, x, &mut OpCount::default()),
                ctx.element(5)
            );
        }
        // 1 + 2x + 3x^3 at x = 2: 1 + 4 + 24 = 29 = 1 mod 7.
        let f = Polynomial::from_values(ctx, &[1, 2, 0, 3]).unwrap();
        let mut count = OpCount::default();
        assert_eq!(horner_eval(&f, ctx.element(2), &mut count), ctx.element(1));
        assert_eq!(count.muls, 3);
        assert_eq!(count.adds, 3);
    }

    #[test]
    fn decompose_layout() {
        let ctx = ctx7();
        let f = Polynomial::from_values(ctx, &[4, 5, 6, 1]).unwrap();
        let d = decompose(&f);
        assert_eq!(d.chunk(), 2);
        assert_eq!(d.pad_count(), 0);
        assert_eq!(d.cells().row(0), &[ctx.element(4), ctx.element(5)]);
        assert_eq!(d.cells().row(1), &[ctx.element(6), ctx.element(1)]);

        let single = Polynomial::from_values(ctx, &[3]).unwrap();
        let d1 = decompose(&single);
        assert_eq!(d1.chunk(), 1);
        assert_eq!(d1.cells().at(0, 0), ctx.element(3));

        let padded = Polynomial::from_values(ctx, &[1, 2, 3]).unwrap();
        let d2 = decompose(&padded);
        assert_eq!(d2.chunk(), 2);
        assert_eq!(d2.pad_count(), 1);
        assert_eq!(d2.cells().row(1), &[ctx.element(3), ctx.element(0)]);
    }

    #[test]
    fn ceil_sqrt_small_values() {
        let expect = [
            (1, 1),
            (2, 2),
            (3, 2),
            (4, 2),
            (5, 3),
            (9, 3),
            (10, 4),
            (16, 4),
            (17, 5),
        ];
        for (k, s) in expect {
            assert_eq!(ceil_sqrt(k), s, "k = {k}");
        }
    }

    #[test]
    fn power_vectors_hand_example() {
        let ctx = ctx7();
        let mut count = OpCount::default();
        let v = power_vectors(ctx.element(3), 2, &mut count);
        assert_eq!(v.right, alloc::vec![ctx.element(1), ctx.element(3)]);
        assert_eq!(v.left, alloc::vec![ctx.element(1), ctx.element(2)]);

        let units = power_vectors(ctx.one(), 5, &mut OpCount::default());
        assert!(units.right.iter().all(|e| *e == ctx.one()));
        assert!(units.left.iter().all(|e| *e == ctx.one()));
    }

    #[test]
    fn power_vectors_match_pow_oracle() {
        let ctx = FieldContext::new(101).unwrap();
        let mut r = rng::seeded(5);
        for _ in 0..20 {
            let x = ctx.sample_uniform(&mut r);
            let chunk = 1 + (r.next_u64() % 9) as usize;
            let v = power_vectors(x, chunk, &mut OpCount::default());
            for j in 0..chunk {
                assert_eq!(v.right[j], x.pow(j as u64));
                assert_eq!(v.left[j], x.pow((chunk * j) as u64));
            }
        }
    }

    #[test]
    fn power_vector_mul_budget() {
        let ctx = FieldContext::new(101).unwrap();
        for chunk in [1usize, 2, 3, 10, 64, 100] {
            let mut count = OpCount::default();
            power_vectors(ctx.element(29), chunk, &mut count);
            let log_term = 2 * (64 - (chunk as u64).leading_zeros() as u64);
            assert!(
                count.muls <= 2 * (chunk as u64).saturating_sub(1) + log_term,
                "chunk {chunk}: {} muls",
                count.muls
            );
        }
    }

    #[test]
    fn matvec_hand_example_and_identity() {
        let ctx = ctx7();
        let m = Matrix::from_vec(
            2,
            2,
            alloc::vec![ctx.element(1), ctx.element(2), ctx.element(3), ctx.element(4)],
        );
        let z = [ctx.element(1), ctx.element(3)];
        let mut count = OpCount::default();
        let w = matvec(&m, &z, &mut count);
        assert_eq!(w, alloc::vec![ctx.element(0), ctx.element(1)]);
        assert_eq!(count.muls, 4);

        let mut id = Matrix::zero(ctx, 3, 3);
        for i in 0..3 {
            id.set(i, i, ctx.one());
        }
        let v = [ctx.element(2), ctx.element(5), ctx.element(6)];
        assert_eq!(matvec(&id, &v, &mut OpCount::default()), v.to_vec());
    }

    #[test]
    #[should_panic(expected = "matvec shape mismatch")]
    fn matvec_shape_mismatch_panics() {
        let ctx = ctx7();
        let m = Matrix::zero(ctx, 2, 2);
        matvec(&m, &[ctx.one()], &mut OpCount::default());
    }

    #[test]
    fn decode_contraction_cost() {
        let ctx = ctx7();
        let a = alloc::vec![ctx.element(1); 6];
        let mut count = OpCount::default();
        dot(&a, &a, &mut count);
        assert_eq!(count.muls, 6);
        assert_eq!(count.adds, 5);
    }

    use rand_core::RngCore;
}
