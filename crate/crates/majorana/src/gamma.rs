//! The four-dimensional spacetime Clifford algebra in the chiral (Weyl)
//! representation.
//!
//! The four gamma matrices satisfy {γ^μ, γ^ν} = 2g^{μν}𝟙 with metric
//! signature (+,−,−,−). From them the crate derives γ⁵, the spin matrices
//! Σ^i, the Dirac matrices α^i = γ⁰γ^i, the charge-conjugation matrix
//! C = iγ², and the 16-element product basis. Every entry lies in ℚ(ζ₈), so
//! all of this is exact.
//!
//! Exponentials of generators are closed-form, not iterative: every generator
//! used in this crate squares to ±𝟙, which collapses the exponential series
//! to two terms. The series evaluation exists only as a test oracle.

use std::fmt;

use crate::matrix::{block4, Matrix2, Matrix4};
use crate::report::{CheckRecord, Report};
use crate::scalar::{Complex64, ExactScalar};
use crate::Error;

/// Tolerance for the float-backend generator-involution precheck.
pub const GENERATOR_TOL: f64 = 1e-12;

fn e(n: i64) -> ExactScalar {
    ExactScalar::from_int(n)
}

/// Metric tensor g^{μν}, signature diag(1, −1, −1, −1).
pub fn metric(mu: usize, nu: usize) -> i64 {
    assert!(mu < 4 && nu < 4, "spacetime index out of range");
    if mu != nu {
        0
    } else if mu == 0 {
        1
    } else {
        -1
    }
}

/// Pauli matrix σ^i, i ∈ {1, 2, 3}, over the exact backend.
///
/// Panics on any other index.
pub fn pauli(i: usize) -> Matrix2<ExactScalar> {
    let im = ExactScalar::i();
    match i {
        1 => Matrix2::new([[e(0), e(1)], [e(1), e(0)]]),
        2 => Matrix2::new([[e(0), im.neg()], [im, e(0)]]),
        3 => Matrix2::new([[e(1), e(0)], [e(0), e(-1)]]),
        _ => panic!("pauli index must be 1, 2, or 3 (got {i})"),
    }
}

/// Gamma matrix γ^μ, μ ∈ {0, 1, 2, 3}, in the chiral representation:
/// γ⁰ has identity off-diagonal blocks, γ^i has ±σ^i off-diagonal blocks.
///
/// Panics on any other index.
pub fn gamma(mu: usize) -> Matrix4<ExactScalar> {
    let z = Matrix2::zero();
    let id = Matrix2::identity();
    match mu {
        0 => block4(&z, &id, &id, &z),
        1..=3 => {
            let s = pauli(mu);
            block4(&z, &s, &s.neg(), &z)
        }
        _ => panic!("gamma index must be 0..=3 (got {mu})"),
    }
}

/// γ⁵ = iγ⁰γ¹γ²γ³ = diag(−𝟙₂, 𝟙₂), the chirality operator.
pub fn gamma5() -> Matrix4<ExactScalar> {
    gamma(0)
        .mul(&gamma(1))
        .mul(&gamma(2))
        .mul(&gamma(3))
        .scale(&ExactScalar::i())
}

/// Spin matrix Σ^i = γ⁵γ⁰γ^i = diag(σ^i, σ^i).
///
/// Panics unless i ∈ {1, 2, 3}.
pub fn sigma(i: usize) -> Matrix4<ExactScalar> {
    assert!((1..=3).contains(&i), "sigma index must be 1..=3 (got {i})");
    gamma5().mul(&gamma(0)).mul(&gamma(i))
}

/// Dirac matrix α^i = γ⁰γ^i, the Hamiltonian-form velocity operator.
///
/// Panics unless i ∈ {1, 2, 3}.
pub fn alpha(i: usize) -> Matrix4<ExactScalar> {
    assert!((1..=3).contains(&i), "alpha index must be 1..=3 (got {i})");
    gamma(0).mul(&gamma(i))
}

/// Charge-conjugation matrix C = iγ². The full charge conjugation is the
/// antiunitary 𝒞 = CK with K complex conjugation; see
/// [`crate::bispinor::charge_conjugate`].
pub fn charge_conjugation_matrix() -> Matrix4<ExactScalar> {
    gamma(2).scale(&ExactScalar::i())
}

/// Label for one of the 16 basis elements of the Clifford algebra:
/// 𝟙, γ^μ, γ^μγ^ν (μ<ν), γ⁵γ^μ, γ⁵.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum CliffordIndex {
    Identity,
    Gamma(u8),
    GammaPair(u8, u8),
    Gamma5Gamma(u8),
    Gamma5,
}

impl fmt::Display for CliffordIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliffordIndex::Identity => write!(f, "1"),
            CliffordIndex::Gamma(mu) => write!(f, "γ{mu}"),
            CliffordIndex::GammaPair(mu, nu) => write!(f, "γ{mu}γ{nu}"),
            CliffordIndex::Gamma5Gamma(mu) => write!(f, "γ5γ{mu}"),
            CliffordIndex::Gamma5 => write!(f, "γ5"),
        }
    }
}

impl CliffordIndex {
    pub fn matrix(&self) -> Matrix4<ExactScalar> {
        match self {
            CliffordIndex::Identity => Matrix4::identity(),
            CliffordIndex::Gamma(mu) => gamma(*mu as usize),
            CliffordIndex::GammaPair(mu, nu) => gamma(*mu as usize).mul(&gamma(*nu as usize)),
            CliffordIndex::Gamma5Gamma(mu) => gamma5().mul(&gamma(*mu as usize)),
            CliffordIndex::Gamma5 => gamma5(),
        }
    }
}

/// The 16 basis elements of the algebra, pairwise orthogonal in the
/// Hilbert–Schmidt inner product with Tr(A†A) = 4.
pub fn basis16() -> Vec<(CliffordIndex, Matrix4<ExactScalar>)> {
    let mut out = Vec::with_capacity(16);
    out.push(CliffordIndex::Identity);
    for mu in 0..4u8 {
        out.push(CliffordIndex::Gamma(mu));
    }
    for mu in 0..4u8 {
        for nu in (mu + 1)..4 {
            out.push(CliffordIndex::GammaPair(mu, nu));
        }
    }
    for mu in 0..4u8 {
        out.push(CliffordIndex::Gamma5Gamma(mu));
    }
    out.push(CliffordIndex::Gamma5);
    out.into_iter().map(|ix| (ix, ix.matrix())).collect()
}

/// cos(kπ/4) and sin(kπ/4) as exact field elements.
fn exact_cos_sin(k: i32) -> (ExactScalar, ExactScalar) {
    let r = ExactScalar::inv_sqrt2();
    let cos = match k.rem_euclid(8) {
        0 => ExactScalar::one(),
        1 | 7 => r.clone(),
        2 | 6 => ExactScalar::zero(),
        3 | 5 => r.neg(),
        4 => ExactScalar::from_int(-1),
        _ => unreachable!(),
    };
    let sin = match k.rem_euclid(8) {
        0 | 4 => ExactScalar::zero(),
        1 | 3 => r.clone(),
        2 => ExactScalar::one(),
        5 | 7 => r.neg(),
        6 => ExactScalar::from_int(-1),
        _ => unreachable!(),
    };
    (cos, sin)
}

/// exp(angle·G) on the exact backend, for angles that are integer multiples
/// of π/4 (`quarter_pis` counts the multiple).
///
/// Requires G² = ±𝟙, checked exactly. For G² = −𝟙 the result is
/// cos·𝟙 + sin·G with exact cyclotomic cos/sin. For G² = +𝟙 the exponential
/// is hyperbolic and exact only at angle zero; other angles are an error.
pub fn exp_generator_exact(
    g: &Matrix4<ExactScalar>,
    quarter_pis: i32,
) -> Result<Matrix4<ExactScalar>, Error> {
    let g2 = g.mul(g);
    let id = Matrix4::identity();
    if g2 == id.neg() {
        let (cos, sin) = exact_cos_sin(quarter_pis);
        Ok(id.scale(&cos).add(&g.scale(&sin)))
    } else if g2 == id {
        if quarter_pis == 0 {
            Ok(id)
        } else {
            Err(Error::HyperbolicAngleNotExact)
        }
    } else {
        Err(Error::GeneratorNotInvolutory)
    }
}

/// exp(angle·G) on the float backend.
///
/// Requires G² = ±𝟙 within [`GENERATOR_TOL`]. Circular (G² = −𝟙) generators
/// give cos·𝟙 + sin·G; hyperbolic (G² = +𝟙) ones give cosh·𝟙 + sinh·G.
pub fn exp_generator(g: &Matrix4<Complex64>, angle: f64) -> Result<Matrix4<Complex64>, Error> {
    let g2 = g.mul(g);
    let id = Matrix4::<Complex64>::identity();
    let circ = |x: f64| Complex64::new(x, 0.0);
    if g2.approx_eq(&id.neg(), GENERATOR_TOL) {
        Ok(id
            .scale(&circ(angle.cos()))
            .add(&g.scale(&circ(angle.sin()))))
    } else if g2.approx_eq(&id, GENERATOR_TOL) {
        Ok(id
            .scale(&circ(angle.cosh()))
            .add(&g.scale(&circ(angle.sinh()))))
    } else {
        Err(Error::GeneratorNotInvolutory)
    }
}

/// Verify {γ^μ, γ^ν} = 2g^{μν}𝟙 for all ten unordered index pairs, exactly.
pub fn clifford_check() -> Report {
    let mut records = Vec::new();
    for mu in 0..4 {
        for nu in mu..4 {
            let lhs = gamma(mu).anticommutator(&gamma(nu));
            let rhs = Matrix4::identity().scale(&e(2 * metric(mu, nu)));
            records.push(CheckRecord::exact(
                format!("clifford_anticommutator_{mu}{nu}"),
                format!("{{γ{mu},γ{nu}}} = {}·1", 2 * metric(mu, nu)),
                lhs == rhs,
            ));
        }
    }
    Report::from_records("clifford", records)
}

/// The full gamma-module verification suite: Clifford relations, derived
/// matrix structure, the 16-element basis, and exponential properties.
pub fn suite() -> Report {
    let mut records = clifford_check().records;

    let g5 = gamma5();
    let diag = Matrix4::from_fn(|r, c| {
        if r != c {
            e(0)
        } else if r < 2 {
            e(-1)
        } else {
            e(1)
        }
    });
    records.push(CheckRecord::exact(
        "derived_gamma5_diagonal",
        "iγ⁰γ¹γ²γ³ = diag(−1,−1,1,1)",
        g5 == diag,
    ));
    records.push(CheckRecord::exact(
        "derived_gamma5_involution",
        "γ⁵γ⁵ = 𝟙",
        g5.mul(&g5).is_identity(),
    ));
    for i in 1..=3 {
        let s = pauli(i);
        let expected = block4(&s, &Matrix2::zero(), &Matrix2::zero(), &s);
        records.push(CheckRecord::exact(
            format!("derived_sigma{i}_block_diagonal"),
            format!("γ⁵γ⁰γ{i} = diag(σ{i}, σ{i})"),
            sigma(i) == expected,
        ));
        records.push(CheckRecord::exact(
            format!("derived_alpha{i}_involution"),
            format!("(γ⁰γ{i})² = 𝟙"),
            alpha(i).mul(&alpha(i)).is_identity(),
        ));
    }

    let basis = basis16();
    let mut gram_ok = basis.len() == 16;
    for (i, (_, a)) in basis.iter().enumerate() {
        for (j, (_, b)) in basis.iter().enumerate() {
            let expected = if i == j { e(4) } else { e(0) };
            gram_ok &= crate::matrix::trace_inner(a, b) == expected;
        }
    }
    records.push(CheckRecord::exact(
        "basis16_gram",
        "Gram matrix of the 16-element basis is 4·𝟙₁₆",
        gram_ok,
    ));

    for (name, generator) in [
        ("gamma1", gamma(1)),
        ("gamma013", gamma(0).mul(&gamma(1)).mul(&gamma(3))),
    ] {
        let fwd = exp_generator_exact(&generator, 1).expect("circular generator");
        let bwd = exp_generator_exact(&generator, -1).expect("circular generator");
        records.push(CheckRecord::exact(
            format!("exponential_{name}_unitary"),
            format!("exp((π/4)·{name}) is unitary with det 1"),
            fwd.is_unitary() && fwd.det() == ExactScalar::one(),
        ));
        records.push(CheckRecord::exact(
            format!("exponential_{name}_inverse_pair"),
            format!("exp((π/4)·{name})·exp(−(π/4)·{name}) = 𝟙"),
            fwd.mul(&bwd).is_identity(),
        ));
    }

    Report::from_records("gamma", records)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::trace_inner;

    #[test]
    fn gamma0_is_block_antidiagonal_identity() {
        let expected = Matrix4::from_fn(|r, c| if (r + 2) % 4 == c { e(1) } else { e(0) });
        assert_eq!(gamma(0), expected);
    }

    #[test]
    fn gamma_squares_match_metric() {
        assert_eq!(gamma(0).mul(&gamma(0)), Matrix4::identity());
        assert_eq!(gamma(2).mul(&gamma(2)), Matrix4::identity().neg());
    }

    #[test]
    fn all_anticommutators_pass() {
        let report = clifford_check();
        assert_eq!(report.summary.total, 10);
        assert!(report.all_passed());
    }

    #[test]
    fn gamma5_is_chiral_diagonal() {
        let expected = Matrix4::from_fn(|r, c| {
            if r != c {
                e(0)
            } else if r < 2 {
                e(-1)
            } else {
                e(1)
            }
        });
        assert_eq!(gamma5(), expected);
    }

    #[test]
    fn sigma_is_block_diagonal_pauli() {
        for i in 1..=3 {
            let s = pauli(i);
            let expected = block4(&s, &Matrix2::zero(), &Matrix2::zero(), &s);
            assert_eq!(sigma(i), expected);
        }
    }

    #[test]
    fn alpha_squares_to_identity() {
        for i in 1..=3 {
            assert_eq!(alpha(i).mul(&alpha(i)), Matrix4::identity());
        }
    }

    #[test]
    #[should_panic(expected = "gamma index")]
    fn gamma_rejects_bad_index() {
        gamma(4);
    }

    #[test]
    fn basis_has_16_orthogonal_unit_elements() {
        let basis = basis16();
        assert_eq!(basis.len(), 16);
        for (i, (_, a)) in basis.iter().enumerate() {
            for (j, (_, b)) in basis.iter().enumerate() {
                let inner = trace_inner(a, b);
                let expected = if i == j { e(4) } else { e(0) };
                assert_eq!(inner, expected, "gram entry ({i},{j})");
            }
        }
    }

    #[test]
    fn basis_contains_involutory_gamma5() {
        let basis = basis16();
        let g5 = basis
            .iter()
            .find(|(ix, _)| *ix == CliffordIndex::Gamma5)
            .unwrap();
        assert_eq!(g5.1.mul(&g5.1), Matrix4::identity());
    }

    #[test]
    fn exact_exponential_at_zero_is_identity() {
        let g = gamma(1);
        assert_eq!(exp_generator_exact(&g, 0).unwrap(), Matrix4::identity());
    }

    #[test]
    fn exact_exponential_of_gamma1_quarter_pi() {
        // (γ¹)² = −𝟙, so exp((π/4)γ¹) = (𝟙 + γ¹)/√2
        let g = gamma(1);
        let expected = Matrix4::identity().add(&g).scale(&ExactScalar::inv_sqrt2());
        assert_eq!(exp_generator_exact(&g, 1).unwrap(), expected);
    }

    #[test]
    fn exact_exponential_inverse_pairs() {
        let g = gamma(0).mul(&gamma(1)).mul(&gamma(3));
        let fwd = exp_generator_exact(&g, 1).unwrap();
        let bwd = exp_generator_exact(&g, -1).unwrap();
        assert!(fwd.mul(&bwd).is_identity());
    }

    #[test]
    fn exact_exponential_is_unitary_and_special() {
        for g in [gamma(1), gamma(0).mul(&gamma(1)).mul(&gamma(3))] {
            let u = exp_generator_exact(&g, 1).unwrap();
            assert!(u.is_unitary());
            assert_eq!(u.det(), ExactScalar::one());
        }
    }

    #[test]
    fn hyperbolic_generator_rejected_at_nonzero_angle() {
        // (γ⁰γ¹)² = +𝟙
        let boost = gamma(0).mul(&gamma(1));
        assert!(matches!(
            exp_generator_exact(&boost, 1),
            Err(Error::HyperbolicAngleNotExact)
        ));
        assert!(exp_generator_exact(&boost, 0).is_ok());
    }

    #[test]
    fn non_involutory_generator_rejected() {
        let g = Matrix4::identity().add(&gamma(1));
        assert!(matches!(
            exp_generator_exact(&g, 1),
            Err(Error::GeneratorNotInvolutory)
        ));
        assert!(matches!(
            exp_generator(&g.to_complex(), 0.5),
            Err(Error::GeneratorNotInvolutory)
        ));
    }

    #[test]
    fn float_exponential_hyperbolic_branch() {
        let boost = gamma(0).mul(&gamma(1)).to_complex();
        let u = exp_generator(&boost, 0.3).unwrap();
        let expected = Matrix4::identity()
            .scale(&Complex64::new(0.3f64.cosh(), 0.0))
            .add(&boost.scale(&Complex64::new(0.3f64.sinh(), 0.0)));
        assert!(u.approx_eq(&expected, 1e-15));
    }

    #[test]
    fn trace_inner_examples() {
        let id = Matrix4::<ExactScalar>::identity();
        assert_eq!(trace_inner(&id, &id), e(4));
        assert_eq!(trace_inner(&gamma(1), &gamma(2)), e(0));
    }

    #[test]
    fn suite_is_green() {
        let report = suite();
        assert!(report.all_passed(), "{:#?}", report.records);
    }
}
