//! Scalar backends: exact elements of the cyclotomic field ℚ(ζ₈) and
//! double-precision complex numbers.
//!
//! Every matrix entry that shows up in the canonical frame lies in ℚ(ζ) with
//! ζ = e^{iπ/4}: the units ±1, ±i, the eighth roots of unity, and the
//! normalisation 1/√2 = (ζ − ζ³)/2. Keeping those exact turns the algebraic
//! identity checks elsewhere in the crate into decidable equalities instead of
//! tolerance comparisons. Directions off the z-axis bring in cos(θ/2) and
//! sin(θ/2), which are not cyclotomic; that work runs on the floating-point
//! backend.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::rational::BigRational;
use num::{BigInt, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

pub use num::complex::Complex64;

/// Arbitrary-precision rational, the coefficient domain of [`ExactScalar`].
pub type Rational = BigRational;

/// The floating-point backend used for general-momentum numerics.
pub type ComplexScalar = Complex64;

/// Common interface of the two scalar backends.
///
/// Generic matrix and vector code is written against this trait, so a single
/// implementation serves both exact and floating-point computations. The
/// conversion [`Scalar::to_complex`] is one-way: floats never round-trip back
/// into the exact field.
pub trait Scalar: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn conj(&self) -> Self;
    fn is_zero(&self) -> bool;
    /// Render on the floating-point backend (identity for `Complex64`).
    fn to_complex(&self) -> Complex64;
}

/// An element of ℚ(ζ), ζ = e^{iπ/4}, stored as exact rational coordinates
/// over the power basis {1, ζ, ζ², ζ³}.
///
/// Products reduce through ζ⁴ = −1, so the four coordinates are closed under
/// the field operations. The coordinates are kept canonical (reduced
/// fraction, positive denominator — `BigRational` maintains this), which
/// makes `==` a decidable structural equality on field elements.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactScalar {
    coeffs: [Rational; 4],
}

impl ExactScalar {
    pub fn new(coeffs: [Rational; 4]) -> Self {
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        let mut coeffs = Self::zero_coeffs();
        coeffs[0] = Rational::from_integer(BigInt::from(n));
        Self { coeffs }
    }

    /// The rational `num/den` as a field element.
    ///
    /// Panics if `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        let mut coeffs = Self::zero_coeffs();
        coeffs[0] = Rational::new(BigInt::from(num), BigInt::from(den));
        Self { coeffs }
    }

    pub fn from_rational(r: Rational) -> Self {
        let mut coeffs = Self::zero_coeffs();
        coeffs[0] = r;
        Self { coeffs }
    }

    /// The imaginary unit i = ζ².
    pub fn i() -> Self {
        Self::root_of_unity(2)
    }

    /// ζ^k for any integer k, reduced through ζ⁸ = 1 and ζ⁴ = −1.
    pub fn root_of_unity(k: i32) -> Self {
        let k = k.rem_euclid(8) as usize;
        let mut coeffs = Self::zero_coeffs();
        if k < 4 {
            coeffs[k] = Rational::from_integer(BigInt::from(1));
        } else {
            coeffs[k - 4] = Rational::from_integer(BigInt::from(-1));
        }
        Self { coeffs }
    }

    /// 1/√2 = (ζ − ζ³)/2, the normalisation of every π/4 rotation.
    pub fn inv_sqrt2() -> Self {
        let half = Rational::new(BigInt::from(1), BigInt::from(2));
        let mut coeffs = Self::zero_coeffs();
        coeffs[1] = half.clone();
        coeffs[3] = -half;
        Self { coeffs }
    }

    /// √2 = ζ − ζ³.
    pub fn sqrt2() -> Self {
        let one = Rational::from_integer(BigInt::from(1));
        let mut coeffs = Self::zero_coeffs();
        coeffs[1] = one.clone();
        coeffs[3] = -one;
        Self { coeffs }
    }

    fn zero_coeffs() -> [Rational; 4] {
        [
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
        ]
    }

    /// Coordinate of ζ^k, 0 ≤ k ≤ 3.
    pub fn coeff(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[Rational; 4] {
        &self.coeffs
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self::new(std::array::from_fn(|k| {
            &self.coeffs[k] + &rhs.coeffs[k]
        }))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Self::new(std::array::from_fn(|k| {
            &self.coeffs[k] - &rhs.coeffs[k]
        }))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero_coeffs();
        for i in 0..4 {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..4 {
                if rhs.coeffs[j].is_zero() {
                    continue;
                }
                let term = &self.coeffs[i] * &rhs.coeffs[j];
                let k = i + j;
                if k < 4 {
                    out[k] = &out[k] + &term;
                } else {
                    // ζ^{k} = −ζ^{k−4}
                    out[k - 4] = &out[k - 4] - &term;
                }
            }
        }
        Self::new(out)
    }

    pub fn neg(&self) -> Self {
        Self::new(std::array::from_fn(|k| -self.coeffs[k].clone()))
    }

    /// Complex conjugate: ζ̄ = ζ⁻¹ = −ζ³, so (c0,c1,c2,c3) ↦ (c0,−c3,−c2,−c1).
    pub fn conj(&self) -> Self {
        Self::new([
            self.coeffs[0].clone(),
            -self.coeffs[3].clone(),
            -self.coeffs[2].clone(),
            -self.coeffs[1].clone(),
        ])
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Galois automorphism ζ ↦ ζ^k for odd k; k = 7 is complex conjugation.
    fn galois(&self, k: u8) -> Self {
        let c = &self.coeffs;
        match k {
            1 => self.clone(),
            3 => Self::new([c[0].clone(), c[3].clone(), -c[2].clone(), c[1].clone()]),
            5 => Self::new([c[0].clone(), -c[1].clone(), c[2].clone(), -c[3].clone()]),
            7 => self.conj(),
            _ => panic!("galois exponent must be odd and < 8"),
        }
    }

    /// Multiplicative inverse, or `None` for zero.
    ///
    /// Uses the field norm: the product of the three nontrivial Galois
    /// conjugates divided by N(x) = x·σ₃(x)·σ₅(x)·σ₇(x) ∈ ℚ.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let cofactor = self.galois(3).mul(&self.galois(5)).mul(&self.galois(7));
        let norm = self.mul(&cofactor);
        let rational = norm
            .as_rational()
            .expect("field norm of a cyclotomic element is rational");
        Some(cofactor.mul(&Self::from_rational(rational.recip())))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self == &Self::one()
    }

    /// True when the element equals its own conjugate.
    pub fn is_real(&self) -> bool {
        self.coeffs[2].is_zero() && self.coeffs[1] == -self.coeffs[3].clone()
    }

    /// The rational part, when the element lies in ℚ ⊂ ℚ(ζ).
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(Rational::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    /// Evaluate at ζ = e^{iπ/4} in double precision.
    pub fn to_complex(&self) -> Complex64 {
        let c: [f64; 4] = std::array::from_fn(|k| rational_to_f64(&self.coeffs[k]));
        let r = std::f64::consts::FRAC_1_SQRT_2;
        // ζ = r(1+i), ζ² = i, ζ³ = r(−1+i)
        Complex64::new(c[0] + r * (c[1] - c[3]), c[2] + r * (c[1] + c[3]))
    }

    /// The four coordinates as `"num/den"` strings, the JSON wire form.
    pub fn coeff_strings(&self) -> [String; 4] {
        std::array::from_fn(|k| format!("{}/{}", self.coeffs[k].numer(), self.coeffs[k].denom()))
    }
}

fn rational_to_f64(r: &Rational) -> f64 {
    // Exact for every value this crate produces; the fallback division covers
    // numerators outside the f64-exact integer range.
    r.to_f64()
        .unwrap_or_else(|| r.numer().to_f64().unwrap() / r.denom().to_f64().unwrap())
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        const SYMS: [&str; 4] = ["", "ζ", "ζ²", "ζ³"];
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c < &Rational::zero() { "-" } else { "+" })?;
            } else if c < &Rational::zero() {
                write!(f, "-")?;
            }
            let a = if c < &Rational::zero() {
                -c.clone()
            } else {
                c.clone()
            };
            let unit_coeff = a == Rational::from_integer(BigInt::from(1)) && k != 0;
            if !unit_coeff {
                write!(f, "{}", a)?;
            }
            write!(f, "{}", SYMS[k])?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl Serialize for ExactScalar {
    fn serialize<Se: Serializer>(&self, serializer: Se) -> Result<Se::Ok, Se::Error> {
        let s = self.coeff_strings();
        let mut st = serializer.serialize_struct("ExactScalar", 4)?;
        st.serialize_field("c0", &s[0])?;
        st.serialize_field("c1", &s[1])?;
        st.serialize_field("c2", &s[2])?;
        st.serialize_field("c3", &s[3])?;
        st.end()
    }
}

// Operator impls are provided on references only; by-value impls would
// shadow the inherent reference-taking methods during method resolution.
macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&ExactScalar> for &ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: &ExactScalar) -> ExactScalar {
                ExactScalar::$method(self, rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar::neg(self)
    }
}

impl Scalar for ExactScalar {
    fn zero() -> Self {
        ExactScalar::zero()
    }
    fn one() -> Self {
        ExactScalar::one()
    }
    fn add(&self, rhs: &Self) -> Self {
        ExactScalar::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        ExactScalar::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        ExactScalar::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        ExactScalar::neg(self)
    }
    fn conj(&self) -> Self {
        ExactScalar::conj(self)
    }
    fn is_zero(&self) -> bool {
        ExactScalar::is_zero(self)
    }
    fn to_complex(&self) -> Complex64 {
        ExactScalar::to_complex(self)
    }
}

impl Scalar for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn conj(&self) -> Self {
        Complex64::conj(self)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn to_complex(&self) -> Complex64 {
        *self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn zeta(k: i32) -> ExactScalar {
        ExactScalar::root_of_unity(k)
    }

    #[test]
    fn zeta_times_zeta_cubed_is_minus_one() {
        assert_eq!(zeta(1).mul(&zeta(3)), ExactScalar::from_int(-1));
    }

    #[test]
    fn eighth_root_relations() {
        assert_eq!(zeta(1).pow(8), ExactScalar::one());
        assert_eq!(zeta(1).pow(4), ExactScalar::from_int(-1));
    }

    #[test]
    fn inv_sqrt2_squares_to_one_half() {
        // (ζ − ζ³)/2 squared, by direct coefficient multiplication
        let r = ExactScalar::inv_sqrt2();
        assert_eq!(r.mul(&r), ExactScalar::ratio(1, 2));
    }

    #[test]
    fn conj_zeta_times_zeta_is_one() {
        assert_eq!(zeta(1).conj().mul(&zeta(1)), ExactScalar::one());
    }

    #[test]
    fn float_rendering_of_units() {
        let tol = 1e-15;
        let one = ExactScalar::one().to_complex();
        assert!((one.re - 1.0).abs() < tol && one.im.abs() < tol);
        let z = zeta(1).to_complex();
        let r = std::f64::consts::FRAC_1_SQRT_2;
        assert!((z.re - r).abs() < tol && (z.im - r).abs() < tol);
        let i = zeta(2).to_complex();
        assert!(i.re.abs() < tol && (i.im - 1.0).abs() < tol);
    }

    #[test]
    fn coeff_strings_wire_form() {
        let x = ExactScalar::inv_sqrt2();
        assert_eq!(
            x.coeff_strings(),
            ["0/1".to_string(), "1/2".into(), "0/1".into(), "-1/2".into()]
        );
    }

    #[test]
    fn display_is_compact() {
        assert_eq!(ExactScalar::zero().to_string(), "0");
        assert_eq!(ExactScalar::i().to_string(), "ζ²");
        assert_eq!(ExactScalar::ratio(-1, 2).to_string(), "-1/2");
        assert_eq!(ExactScalar::inv_sqrt2().to_string(), "1/2ζ - 1/2ζ³");
    }

    fn arb_exact() -> impl Strategy<Value = ExactScalar> {
        let coeff = (-10i64..=10, 1i64..=10)
            .prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)));
        [coeff.clone(), coeff.clone(), coeff.clone(), coeff].prop_map(ExactScalar::new)
    }

    proptest! {
        #[test]
        fn addition_commutes(a in arb_exact(), b in arb_exact()) {
            prop_assert_eq!(a.add(&b), b.add(&a));
        }

        #[test]
        fn multiplication_commutes(a in arb_exact(), b in arb_exact()) {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
        }

        #[test]
        fn multiplication_associates(a in arb_exact(), b in arb_exact(), c in arb_exact()) {
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        }

        #[test]
        fn addition_associates(a in arb_exact(), b in arb_exact(), c in arb_exact()) {
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        }

        #[test]
        fn multiplication_distributes(a in arb_exact(), b in arb_exact(), c in arb_exact()) {
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        }

        #[test]
        fn conjugation_is_a_ring_morphism(a in arb_exact(), b in arb_exact()) {
            prop_assert_eq!(a.mul(&b).conj(), a.conj().mul(&b.conj()));
            prop_assert_eq!(a.add(&b).conj(), a.conj().add(&b.conj()));
        }

        #[test]
        fn norm_is_real(a in arb_exact()) {
            prop_assert!(a.mul(&a.conj()).is_real());
        }

        #[test]
        fn float_conversion_commutes_with_conj(a in arb_exact()) {
            let lhs = a.conj().to_complex();
            let rhs = a.to_complex().conj();
            prop_assert!((lhs - rhs).norm() <= 1e-14 * (1.0 + rhs.norm()));
        }

        #[test]
        fn float_conversion_is_multiplicative(a in arb_exact(), b in arb_exact()) {
            // unit-scale bound: coefficients are bounded by 10 here
            let lhs = a.mul(&b).to_complex();
            let rhs = a.to_complex() * b.to_complex();
            prop_assert!((lhs - rhs).norm() <= 1e-12);
        }

        #[test]
        fn inverse_is_two_sided(a in arb_exact()) {
            match a.inv() {
                Some(inv) => {
                    prop_assert_eq!(a.mul(&inv), ExactScalar::one());
                    prop_assert_eq!(inv.mul(&a), ExactScalar::one());
                }
                None => prop_assert!(a.is_zero()),
            }
        }
    }
}
