//! Fixed-size vectors and square matrices over a scalar backend.
//!
//! Everything here is a small immutable value; products allocate fresh
//! matrices. Sizes are part of the type (2, 4, and 8 are the only ones the
//! crate uses — 8×8 appears solely inside the Yang–Baxter checks), and the
//! backend is the scalar type parameter, so mixing exact and floating-point
//! operands is a compile-time error rather than a runtime one.

use crate::scalar::{Complex64, Scalar};

#[derive(Clone, PartialEq, Debug)]
pub struct Vector<S, const N: usize> {
    components: [S; N],
}

pub type Vector2<S> = Vector<S, 2>;
pub type Vector4<S> = Vector<S, 4>;

#[derive(Clone, PartialEq, Debug)]
pub struct SquareMatrix<S, const N: usize> {
    rows: [[S; N]; N],
}

pub type Matrix2<S> = SquareMatrix<S, 2>;
pub type Matrix4<S> = SquareMatrix<S, 4>;
pub type Matrix8<S> = SquareMatrix<S, 8>;

impl<S: Scalar, const N: usize> Vector<S, N> {
    pub fn new(components: [S; N]) -> Self {
        Self { components }
    }

    pub fn from_fn(f: impl FnMut(usize) -> S) -> Self {
        Self {
            components: std::array::from_fn(f),
        }
    }

    pub fn zero() -> Self {
        Self::from_fn(|_| S::zero())
    }

    /// Standard basis vector e_k.
    pub fn basis(k: usize) -> Self {
        Self::from_fn(|i| if i == k { S::one() } else { S::zero() })
    }

    pub fn get(&self, i: usize) -> &S {
        &self.components[i]
    }

    pub fn components(&self) -> &[S; N] {
        &self.components
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self::from_fn(|i| self.components[i].add(&rhs.components[i]))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Self::from_fn(|i| self.components[i].sub(&rhs.components[i]))
    }

    pub fn neg(&self) -> Self {
        Self::from_fn(|i| self.components[i].neg())
    }

    pub fn scale(&self, s: &S) -> Self {
        Self::from_fn(|i| s.mul(&self.components[i]))
    }

    pub fn conj(&self) -> Self {
        Self::from_fn(|i| self.components[i].conj())
    }

    /// ⟨self|rhs⟩ = Σ conj(selfᵢ)·rhsᵢ.
    pub fn dagger_dot(&self, rhs: &Self) -> S {
        let mut acc = S::zero();
        for i in 0..N {
            acc = acc.add(&self.components[i].conj().mul(&rhs.components[i]));
        }
        acc
    }

    /// ⟨self|self⟩, a real scalar.
    pub fn norm_sq(&self) -> S {
        self.dagger_dot(self)
    }

    /// |self⟩⟨rhs|.
    pub fn outer(&self, rhs: &Self) -> SquareMatrix<S, N> {
        SquareMatrix::from_fn(|r, c| self.components[r].mul(&rhs.components[c].conj()))
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(S::is_zero)
    }

    pub fn to_complex(&self) -> Vector<Complex64, N> {
        Vector::from_fn(|i| self.components[i].to_complex())
    }

    /// Largest entrywise |selfᵢ − rhsᵢ| after float rendering.
    pub fn max_abs_diff(&self, rhs: &Self) -> f64 {
        let a = self.to_complex();
        let b = rhs.to_complex();
        (0..N)
            .map(|i| (a.components[i] - b.components[i]).norm())
            .fold(0.0, f64::max)
    }
}

impl<const N: usize> Vector<Complex64, N> {
    pub fn approx_eq(&self, rhs: &Self, tol: f64) -> bool {
        self.max_abs_diff(rhs) <= tol
    }

    pub fn max_abs(&self) -> f64 {
        self.components.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }
}

impl<S: Scalar, const N: usize> SquareMatrix<S, N> {
    pub fn new(rows: [[S; N]; N]) -> Self {
        Self { rows }
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> S) -> Self {
        Self {
            rows: std::array::from_fn(|r| std::array::from_fn(|c| f(r, c))),
        }
    }

    pub fn zero() -> Self {
        Self::from_fn(|_, _| S::zero())
    }

    pub fn identity() -> Self {
        Self::from_fn(|r, c| if r == c { S::one() } else { S::zero() })
    }

    pub fn get(&self, r: usize, c: usize) -> &S {
        &self.rows[r][c]
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self::from_fn(|r, c| self.rows[r][c].add(&rhs.rows[r][c]))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Self::from_fn(|r, c| self.rows[r][c].sub(&rhs.rows[r][c]))
    }

    pub fn neg(&self) -> Self {
        Self::from_fn(|r, c| self.rows[r][c].neg())
    }

    pub fn scale(&self, s: &S) -> Self {
        Self::from_fn(|r, c| s.mul(&self.rows[r][c]))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self::from_fn(|r, c| {
            let mut acc = S::zero();
            for k in 0..N {
                acc = acc.add(&self.rows[r][k].mul(&rhs.rows[k][c]));
            }
            acc
        })
    }

    pub fn apply(&self, v: &Vector<S, N>) -> Vector<S, N> {
        Vector::from_fn(|r| {
            let mut acc = S::zero();
            for k in 0..N {
                acc = acc.add(&self.rows[r][k].mul(v.get(k)));
            }
            acc
        })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|r, c| self.rows[c][r].clone())
    }

    pub fn conj(&self) -> Self {
        Self::from_fn(|r, c| self.rows[r][c].conj())
    }

    /// Hermitian conjugate: transpose plus entrywise conjugation.
    pub fn dagger(&self) -> Self {
        Self::from_fn(|r, c| self.rows[c][r].conj())
    }

    pub fn trace(&self) -> S {
        let mut acc = S::zero();
        for k in 0..N {
            acc = acc.add(&self.rows[k][k]);
        }
        acc
    }

    pub fn commutator(&self, rhs: &Self) -> Self {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    pub fn anticommutator(&self, rhs: &Self) -> Self {
        self.mul(rhs).add(&rhs.mul(self))
    }

    /// Determinant by Laplace expansion; exact on the exact backend.
    pub fn det(&self) -> S {
        let as_vecs: Vec<Vec<S>> = self
            .rows
            .iter()
            .map(|row| row.to_vec())
            .collect();
        det_rec(&as_vecs)
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.rows.iter().flatten().all(S::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self == &Self::identity()
    }

    pub fn is_hermitian(&self) -> bool {
        self == &self.dagger()
    }

    /// U†U = 𝟙, by structural equality (use on the exact backend).
    pub fn is_unitary(&self) -> bool {
        self.dagger().mul(self).is_identity()
    }

    pub fn to_complex(&self) -> SquareMatrix<Complex64, N> {
        SquareMatrix::from_fn(|r, c| self.rows[r][c].to_complex())
    }

    /// Largest entrywise difference after float rendering.
    pub fn max_abs_diff(&self, rhs: &Self) -> f64 {
        let a = self.to_complex();
        let b = rhs.to_complex();
        let mut worst = 0.0f64;
        for r in 0..N {
            for c in 0..N {
                worst = worst.max((a.rows[r][c] - b.rows[r][c]).norm());
            }
        }
        worst
    }
}

impl<const N: usize> SquareMatrix<Complex64, N> {
    pub fn approx_eq(&self, rhs: &Self, tol: f64) -> bool {
        self.max_abs_diff(rhs) <= tol
    }

    pub fn max_abs(&self) -> f64 {
        self.rows
            .iter()
            .flatten()
            .map(|c| c.norm())
            .fold(0.0, f64::max)
    }

    pub fn is_unitary_within(&self, tol: f64) -> bool {
        self.dagger().mul(self).approx_eq(&Self::identity(), tol)
    }
}

fn det_rec<S: Scalar>(m: &[Vec<S>]) -> S {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = S::zero();
    for (col, pivot) in m[0].iter().enumerate() {
        if pivot.is_zero() {
            continue;
        }
        let minor: Vec<Vec<S>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != col)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = pivot.mul(&det_rec(&minor));
        acc = if col % 2 == 0 {
            acc.add(&term)
        } else {
            acc.sub(&term)
        };
    }
    acc
}

/// Tr(A†B), the Hilbert–Schmidt inner product.
pub fn trace_inner<S: Scalar, const N: usize>(
    a: &SquareMatrix<S, N>,
    b: &SquareMatrix<S, N>,
) -> S {
    a.dagger().mul(b).trace()
}

/// Assemble a 4×4 matrix from 2×2 blocks [[tl, tr], [bl, br]].
pub fn block4<S: Scalar>(
    tl: &Matrix2<S>,
    tr: &Matrix2<S>,
    bl: &Matrix2<S>,
    br: &Matrix2<S>,
) -> Matrix4<S> {
    Matrix4::from_fn(|r, c| {
        let block = match (r < 2, c < 2) {
            (true, true) => tl,
            (true, false) => tr,
            (false, true) => bl,
            (false, false) => br,
        };
        block.get(r % 2, c % 2).clone()
    })
}

// A generic Kronecker product would need const-generic multiplication; the
// shapes below are the only ones the crate needs.

/// Kronecker product of two 2×2 matrices, left factor on the
/// most-significant index.
pub fn kron2<S: Scalar>(a: &Matrix2<S>, b: &Matrix2<S>) -> Matrix4<S> {
    Matrix4::from_fn(|r, c| a.get(r / 2, c / 2).mul(b.get(r % 2, c % 2)))
}

/// a ⊗ b for a 4×4 left factor and 2×2 right factor.
pub fn kron_4_2<S: Scalar>(a: &Matrix4<S>, b: &Matrix2<S>) -> Matrix8<S> {
    Matrix8::from_fn(|r, c| a.get(r / 2, c / 2).mul(b.get(r % 2, c % 2)))
}

/// a ⊗ b for a 2×2 left factor and 4×4 right factor.
pub fn kron_2_4<S: Scalar>(a: &Matrix2<S>, b: &Matrix4<S>) -> Matrix8<S> {
    Matrix8::from_fn(|r, c| a.get(r / 4, c / 4).mul(b.get(r % 4, c % 4)))
}

/// |a⟩ ⊗ |b⟩ for two-component vectors, left factor most significant.
pub fn kron_vec2<S: Scalar>(a: &Vector2<S>, b: &Vector2<S>) -> Vector4<S> {
    Vector4::from_fn(|i| a.get(i / 2).mul(b.get(i % 2)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ExactScalar;

    fn e(n: i64) -> ExactScalar {
        ExactScalar::from_int(n)
    }

    #[test]
    fn identity_is_multiplicative_unit() {
        let m = Matrix4::from_fn(|r, c| e((r * 4 + c) as i64));
        let id = Matrix4::<ExactScalar>::identity();
        assert_eq!(id.mul(&m), m);
        assert_eq!(m.mul(&id), m);
    }

    #[test]
    fn determinant_of_diagonal() {
        let d = Matrix4::from_fn(|r, c| if r == c { e(r as i64 + 1) } else { e(0) });
        assert_eq!(d.det(), e(24));
    }

    #[test]
    fn determinant_sign_under_swap() {
        // permutation matrix for a single transposition has det −1
        let mut rows = [[0i64; 4]; 4];
        rows[0][1] = 1;
        rows[1][0] = 1;
        rows[2][2] = 1;
        rows[3][3] = 1;
        let p = Matrix4::from_fn(|r, c| e(rows[r][c]));
        assert_eq!(p.det(), e(-1));
    }

    #[test]
    fn dagger_reverses_products() {
        let i = ExactScalar::i();
        let a = Matrix2::new([[e(1), i.clone()], [e(0), e(2)]]);
        let b = Matrix2::new([[e(3), e(1)], [i.neg(), e(1)]]);
        assert_eq!(a.mul(&b).dagger(), b.dagger().mul(&a.dagger()));
    }

    #[test]
    fn kron_of_identities_is_identity() {
        let id2 = Matrix2::<ExactScalar>::identity();
        let id4 = Matrix4::<ExactScalar>::identity();
        assert!(kron2(&id2, &id2).is_identity());
        assert!(kron_4_2(&id4, &id2).is_identity());
        assert!(kron_2_4(&id2, &id4).is_identity());
    }

    #[test]
    fn kron_index_order_is_left_most_significant() {
        // e0 ⊗ e1 = e1 in the 4-dim product space
        let a = Vector2::new([e(1), e(0)]);
        let b = Vector2::new([e(0), e(1)]);
        assert_eq!(kron_vec2(&a, &b), Vector4::basis(1));
    }

    #[test]
    fn outer_product_traces_to_inner() {
        let v = Vector4::new([e(1), ExactScalar::i(), e(0), e(2)]);
        let w = Vector4::new([e(0), e(1), ExactScalar::i().neg(), e(1)]);
        assert_eq!(v.outer(&w).trace(), w.dagger_dot(&v));
    }
}
