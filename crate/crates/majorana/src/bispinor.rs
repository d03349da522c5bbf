//! Solutions of the massless Dirac equation: Weyl and Majorana bispinors,
//! the unitary maps between them, energy projectors, and the momentum/spin
//! flip identities.
//!
//! The equation in momentum space is an eigenvalue problem for a 4×4
//! Hermitian matrix, so it has four independent solutions. With momentum
//! along +z (the *canonical frame*) they are the standard basis vectors and
//! everything is exact; a general direction (θ, φ) is reached by the rotation
//! [`rotation_lambda`], which runs on the float backend because cos(θ/2) and
//! sin(θ/2) are not cyclotomic.
//!
//! Weyl solutions are simultaneous eigenvectors of helicity Σ·p̂ and
//! chirality γ⁵. The Majorana combinations are eigenstates of the antiunitary
//! charge conjugation 𝒞 = iγ²K instead, and [`weyl_to_majorana_canonical`]
//! and [`weyl_to_majorana`] are the unitary, det = 1 maps that carry one
//! family into the other.
//!
//! Negative-energy solutions are kept as they are: the four solutions form a
//! complete orthonormal set in the mathematical sense, and the
//! reinterpretation of the negative-energy pair as antiparticles shows up
//! here only through the flip identities of [`flip_identities_check`], not
//! through any relabeling of the solutions.

use serde::Serialize;

use crate::gamma::{alpha, exp_generator, exp_generator_exact, gamma, gamma5, pauli, sigma};
use crate::matrix::{Matrix2, Matrix4, Vector2, Vector4};
use crate::report::{CheckRecord, Report};
use crate::scalar::{Complex64, ExactScalar, Scalar};
use crate::{Error, FLOAT_TOL};

/// Directions closer than this to θ ∈ {0, π} are treated as poles, where the
/// azimuthal phase conventions of the flip identities degenerate.
pub const POLE_TOL: f64 = 1e-9;

/// Momentum direction in spherical polars: θ ∈ [0, π], φ ∈ [0, 2π).
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct Direction {
    theta: f64,
    phi: f64,
}

impl Direction {
    pub fn new(theta: f64, phi: f64) -> Result<Self, Error> {
        let ok = theta.is_finite()
            && phi.is_finite()
            && (0.0..=std::f64::consts::PI).contains(&theta)
            && (0.0..std::f64::consts::TAU).contains(&phi);
        if ok {
            Ok(Direction { theta, phi })
        } else {
            Err(Error::InvalidDirection { theta, phi })
        }
    }

    /// Momentum along +z.
    pub fn canonical() -> Self {
        Direction {
            theta: 0.0,
            phi: 0.0,
        }
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    /// Unit vector p̂ = (sinθ cosφ, sinθ sinφ, cosθ).
    pub fn unit_vector(&self) -> [f64; 3] {
        [
            self.theta.sin() * self.phi.cos(),
            self.theta.sin() * self.phi.sin(),
            self.theta.cos(),
        ]
    }

    /// The direction of −p̂: (θ, φ) ↦ (π − θ, φ + π mod 2π).
    pub fn flipped(&self) -> Self {
        Direction {
            theta: std::f64::consts::PI - self.theta,
            phi: (self.phi + std::f64::consts::PI) % std::f64::consts::TAU,
        }
    }

    pub fn is_pole(&self) -> bool {
        self.theta < POLE_TOL || self.theta > std::f64::consts::PI - POLE_TOL
    }

    pub fn is_canonical(&self) -> bool {
        self.theta == 0.0
    }
}

/// Helicity sign of a two-component spinor.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Helicity {
    Plus,
    Minus,
}

impl Helicity {
    pub fn sign(&self) -> i8 {
        match self {
            Helicity::Plus => 1,
            Helicity::Minus => -1,
        }
    }
}

/// Quantum numbers attached to a solution; signs are ±1.
///
/// Weyl solutions carry helicity and chirality; Majorana solutions carry the
/// charge-conjugation eigenvalue instead (they are not chirality
/// eigenvectors). `None` marks a quantum number the solution does not have.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct SolutionMeta {
    pub index: usize,
    pub energy: i8,
    pub helicity: Option<i8>,
    pub chirality: Option<i8>,
    pub c_parity: Option<i8>,
}

/// A unit-norm four-component solution together with its quantum numbers.
#[derive(Clone, PartialEq, Debug)]
pub struct Bispinor<S: Scalar> {
    pub components: Vector4<S>,
    pub meta: SolutionMeta,
}

// Energy, helicity, chirality of the four Weyl solutions, indexed by i−1.
const WEYL_ENERGY: [i8; 4] = [1, 1, -1, -1];
const WEYL_HELICITY: [i8; 4] = [1, -1, -1, 1];
const WEYL_CHIRALITY: [i8; 4] = [1, -1, 1, -1];
// Which basis slot holds solution i in the canonical frame.
const WEYL_SLOT: [usize; 4] = [2, 1, 3, 0];
// Majorana combinations: which Weyl solution each one is built from, and the
// sign in (u ± iγ²u*)/√2. The 𝒞 eigenvalue coincides with that sign.
const MAJORANA_BASE: [usize; 4] = [2, 1, 3, 4];
const MAJORANA_SIGN: [i8; 4] = [1, -1, -1, 1];

fn check_solution_index(i: usize) {
    assert!(
        (1..=4).contains(&i),
        "solution index must be 1..=4 (got {i})"
    );
}

/// Canonical-frame Weyl solution u^(i), i ∈ 1..=4, on the exact backend.
///
/// Panics unless i ∈ 1..=4.
pub fn canonical_weyl(i: usize) -> Bispinor<ExactScalar> {
    check_solution_index(i);
    Bispinor {
        components: Vector4::basis(WEYL_SLOT[i - 1]),
        meta: SolutionMeta {
            index: i,
            energy: WEYL_ENERGY[i - 1],
            helicity: Some(WEYL_HELICITY[i - 1]),
            chirality: Some(WEYL_CHIRALITY[i - 1]),
            c_parity: None,
        },
    }
}

/// Two-component helicity eigenspinor χ±(p): satisfies (σ·p̂)χ± = ±χ±.
pub fn helicity_spinor(h: Helicity, d: &Direction) -> Vector2<Complex64> {
    let half = d.theta() / 2.0;
    let (cos, sin) = (half.cos(), half.sin());
    let phase = Complex64::from_polar(1.0, d.phi());
    match h {
        Helicity::Plus => Vector2::new([Complex64::new(cos, 0.0), phase * sin]),
        Helicity::Minus => Vector2::new([-phase.conj() * sin, Complex64::new(cos, 0.0)]),
    }
}

/// General-momentum Weyl solution u^(i)(p) in its two-block closed form:
/// the χ± spinor sits in the chirality block selected by the solution.
///
/// Panics unless i ∈ 1..=4.
pub fn general_weyl(i: usize, d: &Direction) -> Bispinor<Complex64> {
    check_solution_index(i);
    let zero = Complex64::new(0.0, 0.0);
    let (spinor, upper) = match i {
        1 => (helicity_spinor(Helicity::Plus, d), false),
        2 => (helicity_spinor(Helicity::Minus, d), true),
        3 => (helicity_spinor(Helicity::Minus, d), false),
        4 => (helicity_spinor(Helicity::Plus, d), true),
        _ => unreachable!(),
    };
    let components = if upper {
        Vector4::new([*spinor.get(0), *spinor.get(1), zero, zero])
    } else {
        Vector4::new([zero, zero, *spinor.get(0), *spinor.get(1)])
    };
    Bispinor {
        components,
        meta: canonical_weyl(i).meta,
    }
}

/// The rotation Λ(θ, φ) = exp(−(θ/2)(γ¹cosφ + γ²sinφ)γ³) taking
/// canonical-frame solutions to direction (θ, φ). Unitary with det = 1.
pub fn rotation_lambda(d: &Direction) -> Matrix4<Complex64> {
    let cos = Complex64::new(d.phi().cos(), 0.0);
    let sin = Complex64::new(d.phi().sin(), 0.0);
    let generator = gamma(1)
        .to_complex()
        .scale(&cos)
        .add(&gamma(2).to_complex().scale(&sin))
        .mul(&gamma(3).to_complex());
    // the generator squares to −𝟙 for every φ
    exp_generator(&generator, -d.theta() / 2.0).expect("rotation generator is involutory")
}

/// The matrix C = iγ² lifted to an arbitrary backend (its entries are the
/// integers 0, ±1).
fn c_matrix<S: Scalar>() -> Matrix4<S> {
    const GRID: [[i64; 4]; 4] = [[0, 0, 0, 1], [0, 0, -1, 0], [0, -1, 0, 0], [1, 0, 0, 0]];
    Matrix4::from_fn(|r, c| match GRID[r][c] {
        0 => S::zero(),
        1 => S::one(),
        -1 => S::one().neg(),
        _ => unreachable!(),
    })
}

/// Charge conjugation 𝒞v = iγ²·conj(v). Antiunitary: applying it twice is
/// the identity, and 𝒞(a·v) = conj(a)·𝒞(v).
pub fn charge_conjugate<S: Scalar>(v: &Vector4<S>) -> Vector4<S> {
    c_matrix::<S>().apply(&v.conj())
}

fn majorana_combination<S: Scalar>(base: &Vector4<S>, sign: i8, inv_sqrt2: S) -> Vector4<S> {
    let conjugated = charge_conjugate(base);
    let sum = if sign > 0 {
        base.add(&conjugated)
    } else {
        base.sub(&conjugated)
    };
    sum.scale(&inv_sqrt2)
}

fn majorana_meta(i: usize) -> SolutionMeta {
    SolutionMeta {
        index: i,
        energy: WEYL_ENERGY[i - 1],
        helicity: None,
        chirality: None,
        c_parity: Some(MAJORANA_SIGN[i - 1]),
    }
}

/// Canonical-frame Majorana solution u_M^(i) = (u ± iγ²u*)/√2, exact.
///
/// The i-th Majorana solution is built from the Weyl solution with the same
/// energy sign; the combination sign equals its 𝒞 eigenvalue (+ for
/// i ∈ {1,4}, − for i ∈ {2,3}).
///
/// Panics unless i ∈ 1..=4.
pub fn majorana_canonical(i: usize) -> Bispinor<ExactScalar> {
    check_solution_index(i);
    let base = canonical_weyl(MAJORANA_BASE[i - 1]);
    Bispinor {
        components: majorana_combination(
            &base.components,
            MAJORANA_SIGN[i - 1],
            ExactScalar::inv_sqrt2(),
        ),
        meta: majorana_meta(i),
    }
}

/// General-momentum Majorana solution u_M^(i)(p), float backend.
///
/// Panics unless i ∈ 1..=4.
pub fn majorana(i: usize, d: &Direction) -> Bispinor<Complex64> {
    check_solution_index(i);
    let base = general_weyl(MAJORANA_BASE[i - 1], d);
    Bispinor {
        components: majorana_combination(
            &base.components,
            MAJORANA_SIGN[i - 1],
            Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0),
        ),
        meta: majorana_meta(i),
    }
}

/// The canonical-frame Weyl→Majorana rotation exp((π/4)γ⁰γ¹γ³), exact.
///
/// It maps u^(1) ↦ −u_M^(1), u^(2) ↦ +u_M^(2), u^(3) ↦ +u_M^(4),
/// u^(4) ↦ −u_M^(3); unitary with det = 1.
pub fn weyl_to_majorana_canonical() -> Matrix4<ExactScalar> {
    let generator = gamma(0).mul(&gamma(1)).mul(&gamma(3));
    exp_generator_exact(&generator, 1).expect("γ⁰γ¹γ³ squares to −𝟙")
}

/// The general-momentum Weyl→Majorana rotation Ω(θ, φ) = Λ R Λ†, where R is
/// the canonical map. Satisfies the same four sign relations direction by
/// direction.
pub fn weyl_to_majorana(d: &Direction) -> Matrix4<Complex64> {
    let lambda = rotation_lambda(d);
    lambda
        .mul(&weyl_to_majorana_canonical().to_complex())
        .mul(&lambda.dagger())
}

/// σ·p̂ on the float backend.
pub fn pauli_dot(d: &Direction) -> Matrix2<Complex64> {
    let p = d.unit_vector();
    let mut acc = Matrix2::<Complex64>::zero();
    for (i, &pi) in p.iter().enumerate() {
        acc = acc.add(&pauli(i + 1).to_complex().scale(&Complex64::new(pi, 0.0)));
    }
    acc
}

/// α·p̂ on the float backend.
pub fn alpha_dot(d: &Direction) -> Matrix4<Complex64> {
    let p = d.unit_vector();
    let mut acc = Matrix4::<Complex64>::zero();
    for (i, &pi) in p.iter().enumerate() {
        acc = acc.add(&alpha(i + 1).to_complex().scale(&Complex64::new(pi, 0.0)));
    }
    acc
}

/// Σ·p̂ on the float backend.
pub fn sigma_dot(d: &Direction) -> Matrix4<Complex64> {
    let p = d.unit_vector();
    let mut acc = Matrix4::<Complex64>::zero();
    for (i, &pi) in p.iter().enumerate() {
        acc = acc.add(&sigma(i + 1).to_complex().scale(&Complex64::new(pi, 0.0)));
    }
    acc
}

/// Energy projectors Λ± = (𝟙 ± α·p̂)/2; they equal the spin sums over the
/// positive/negative energy solution pairs.
pub fn energy_projectors(d: &Direction) -> (Matrix4<Complex64>, Matrix4<Complex64>) {
    let ap = alpha_dot(d);
    let id = Matrix4::<Complex64>::identity();
    let half = Complex64::new(0.5, 0.0);
    (id.add(&ap).scale(&half), id.sub(&ap).scale(&half))
}

/// Canonical-frame energy projectors (𝟙 ± α³)/2 on the exact backend.
pub fn energy_projectors_canonical() -> (Matrix4<ExactScalar>, Matrix4<ExactScalar>) {
    let a3 = alpha(3);
    let id = Matrix4::<ExactScalar>::identity();
    let half = ExactScalar::ratio(1, 2);
    (id.add(&a3).scale(&half), id.sub(&a3).scale(&half))
}

/// Eigenvalue sign of v under m, exact backend: Some(±1) when mv = ±v.
pub fn eigen_sign_exact(m: &Matrix4<ExactScalar>, v: &Vector4<ExactScalar>) -> Option<i8> {
    let image = m.apply(v);
    if image == *v {
        Some(1)
    } else if image == v.neg() {
        Some(-1)
    } else {
        None
    }
}

/// Eigenvalue sign of v under m within a tolerance.
pub fn eigen_sign(m: &Matrix4<Complex64>, v: &Vector4<Complex64>, tol: f64) -> Option<i8> {
    let image = m.apply(v);
    if image.approx_eq(v, tol) {
        Some(1)
    } else if image.approx_eq(&v.neg(), tol) {
        Some(-1)
    } else {
        None
    }
}

/// Measure (energy, helicity, chirality) of a canonical-frame solution via
/// the exact eigenvalue signs under (α³, Σ³, γ⁵).
pub fn measure_weyl_canonical(v: &Vector4<ExactScalar>) -> Option<(i8, i8, i8)> {
    Some((
        eigen_sign_exact(&alpha(3), v)?,
        eigen_sign_exact(&sigma(3), v)?,
        eigen_sign_exact(&gamma5(), v)?,
    ))
}

/// Measure (energy, helicity, chirality) under (α·p̂, Σ·p̂, γ⁵) to a
/// tolerance.
pub fn measure_weyl(v: &Vector4<Complex64>, d: &Direction, tol: f64) -> Option<(i8, i8, i8)> {
    Some((
        eigen_sign(&alpha_dot(d), v, tol)?,
        eigen_sign(&sigma_dot(d), v, tol)?,
        eigen_sign(&gamma5().to_complex(), v, tol)?,
    ))
}

/// The 𝒞 eigenvalue of an exact state, when it has one.
pub fn measure_c_parity_exact(v: &Vector4<ExactScalar>) -> Option<i8> {
    let image = charge_conjugate(v);
    if image == *v {
        Some(1)
    } else if image == v.neg() {
        Some(-1)
    } else {
        None
    }
}

/// The 𝒞 eigenvalue of a float state within a tolerance, when it has one.
pub fn measure_c_parity(v: &Vector4<Complex64>, tol: f64) -> Option<i8> {
    let image = charge_conjugate(v);
    if image.approx_eq(v, tol) {
        Some(1)
    } else if image.approx_eq(&v.neg(), tol) {
        Some(-1)
    } else {
        None
    }
}

/// Verify the momentum-flip, spin-flip, and combined flip identities at a
/// non-pole direction:
///
/// - momentum flip: χ±(−p) = ∓e^{±iφ} χ∓(p)
/// - spin flip: −iσ² χ±*(p) = ±χ∓(p)
/// - combined: −iσ² χ±*(−p) = e^{∓iφ} χ±(p)
///
/// where −p is reached by (θ, φ) ↦ (π − θ, φ + π).
pub fn flip_identities_check(d: &Direction) -> Result<Vec<CheckRecord>, Error> {
    if d.is_pole() {
        return Err(Error::PoleDirection { theta: d.theta() });
    }
    let flipped = d.flipped();
    let phase = Complex64::from_polar(1.0, d.phi());
    // −iσ² has integer entries [[0,−1],[1,0]]
    let spin_flip = Matrix2::new([
        [Complex64::new(0.0, 0.0), Complex64::new(-1.0, 0.0)],
        [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)],
    ]);

    let chi = helicity_spinor;

    let momentum_err = {
        let plus = chi(Helicity::Plus, &flipped)
            .max_abs_diff(&chi(Helicity::Minus, d).scale(&-phase));
        let minus = chi(Helicity::Minus, &flipped)
            .max_abs_diff(&chi(Helicity::Plus, d).scale(&phase.conj()));
        plus.max(minus)
    };
    let spin_err = {
        let plus = spin_flip
            .apply(&chi(Helicity::Plus, d).conj())
            .max_abs_diff(&chi(Helicity::Minus, d));
        let minus = spin_flip
            .apply(&chi(Helicity::Minus, d).conj())
            .max_abs_diff(&chi(Helicity::Plus, d).neg());
        plus.max(minus)
    };
    let combined_err = {
        let plus = spin_flip
            .apply(&chi(Helicity::Plus, &flipped).conj())
            .max_abs_diff(&chi(Helicity::Plus, d).scale(&phase.conj()));
        let minus = spin_flip
            .apply(&chi(Helicity::Minus, &flipped).conj())
            .max_abs_diff(&chi(Helicity::Minus, d).scale(&phase));
        plus.max(minus)
    };

    Ok(vec![
        CheckRecord::float(
            "flip_1_momentum",
            "χ±(−p) = ∓e^{±iφ} χ∓(p)",
            momentum_err,
            FLOAT_TOL,
        ),
        CheckRecord::float("flip_2_spin", "−iσ² χ±*(p) = ±χ∓(p)", spin_err, FLOAT_TOL),
        CheckRecord::float(
            "flip_3_combined",
            "−iσ² χ±*(−p) = e^{∓iφ} χ±(p)",
            combined_err,
            FLOAT_TOL,
        ),
    ])
}

/// The bispinor verification suite.
///
/// Exact canonical-frame checks plus float checks aggregated over the given
/// sample directions; `scalars` feeds the antilinearity probe.
pub fn suite(dirs: &[Direction], scalars: &[Complex64]) -> Report {
    let mut records = Vec::new();

    // Table of canonical eigenvalues, measured exactly
    for i in 1..=4 {
        let u = canonical_weyl(i);
        let measured = measure_weyl_canonical(&u.components);
        let expected = Some((u.meta.energy, WEYL_HELICITY[i - 1], WEYL_CHIRALITY[i - 1]));
        records.push(CheckRecord::exact(
            format!("canonical_eigenvalues_u{i}"),
            format!(
                "u^({i}) has (energy, helicity, chirality) = ({:+}, {:+}, {:+})",
                u.meta.energy,
                WEYL_HELICITY[i - 1],
                WEYL_CHIRALITY[i - 1]
            ),
            measured == expected.map(|(e, h, c)| (e, h, c)),
        ));
    }

    // canonical Majorana solutions: 𝒞 eigenvalues and the R₃ sign relations
    records.push(CheckRecord::exact(
        "canonical_majorana_c_parity",
        "𝒞 u_M^(i) = ±u_M^(i) with + for i ∈ {1,4}, − for i ∈ {2,3}",
        (1..=4).all(|i| {
            measure_c_parity_exact(&majorana_canonical(i).components)
                == Some(MAJORANA_SIGN[i - 1])
        }),
    ));
    let map = weyl_to_majorana_canonical();
    let relations = [(1usize, -1i8, 1usize), (2, 1, 2), (3, 1, 4), (4, -1, 3)];
    records.push(CheckRecord::exact(
        "canonical_weyl_majorana_map",
        "R·u^(1,2,3,4) = (−u_M^(1), +u_M^(2), +u_M^(4), −u_M^(3))",
        relations.iter().all(|&(w, sign, m)| {
            let image = map.apply(&canonical_weyl(w).components);
            let target = majorana_canonical(m).components;
            image == if sign > 0 { target } else { target.neg() }
        }),
    ));
    records.push(CheckRecord::exact(
        "canonical_map_special_unitary",
        "the Weyl→Majorana map is unitary with det 1",
        map.is_unitary() && map.det() == ExactScalar::one(),
    ));
    let (proj_plus, proj_minus) = energy_projectors_canonical();
    records.push(CheckRecord::exact(
        "canonical_projectors",
        "(𝟙 ± α³)/2 are complementary orthogonal projectors, exactly",
        proj_plus.mul(&proj_plus) == proj_plus
            && proj_minus.mul(&proj_minus) == proj_minus
            && proj_plus.mul(&proj_minus).is_zero_matrix()
            && proj_plus.add(&proj_minus).is_identity(),
    ));

    // float checks aggregated over the sample directions
    let mut err_lambda_unitary: f64 = 0.0;
    let mut err_lambda_det: f64 = 0.0;
    let mut err_block_form: f64 = 0.0;
    let mut err_orthonormal: f64 = 0.0;
    let mut err_complete: f64 = 0.0;
    let mut err_hamiltonian: f64 = 0.0;
    let mut err_chirality: f64 = 0.0;
    let mut err_majorana_rotation: f64 = 0.0;
    let mut err_majorana_condition: f64 = 0.0;
    let mut err_majorana_hamiltonian: f64 = 0.0;
    let mut err_omega: f64 = 0.0;
    let mut err_projector: f64 = 0.0;
    let mut err_spin_sum: f64 = 0.0;
    let mut err_flips: [f64; 3] = [0.0; 3];
    let mut err_antilinear: f64 = 0.0;
    let mut err_c_involution: f64 = 0.0;

    let id = Matrix4::<Complex64>::identity();
    let g5 = gamma5().to_complex();
    for (n, d) in dirs.iter().enumerate() {
        let lambda = rotation_lambda(d);
        err_lambda_unitary = err_lambda_unitary.max(lambda.dagger().mul(&lambda).max_abs_diff(&id));
        err_lambda_det =
            err_lambda_det.max((lambda.det() - Complex64::new(1.0, 0.0)).norm());

        let ap = alpha_dot(d);
        let sp = sigma_dot(d);
        let mut completeness = Matrix4::<Complex64>::zero();
        for i in 1..=4 {
            let u = general_weyl(i, d);
            let rotated = lambda.apply(&canonical_weyl(i).components.to_complex());
            err_block_form = err_block_form.max(rotated.max_abs_diff(&u.components));
            for j in 1..=4 {
                let dot = u
                    .components
                    .dagger_dot(&general_weyl(j, d).components);
                let expected = Complex64::new(if i == j { 1.0 } else { 0.0 }, 0.0);
                err_orthonormal = err_orthonormal.max((dot - expected).norm());
            }
            completeness = completeness.add(&u.components.outer(&u.components));
            let sign = Complex64::new(u.meta.energy as f64, 0.0);
            err_hamiltonian = err_hamiltonian
                .max(ap.apply(&u.components).max_abs_diff(&u.components.scale(&sign)));
            err_chirality = err_chirality.max(
                sp.apply(&u.components)
                    .max_abs_diff(&g5.apply(&u.components).scale(&sign)),
            );

            let m = majorana(i, d);
            let rotated_m = lambda.apply(&majorana_canonical(i).components.to_complex());
            err_majorana_rotation = err_majorana_rotation.max(rotated_m.max_abs_diff(&m.components));
            let c_sign = Complex64::new(m.meta.c_parity.unwrap() as f64, 0.0);
            err_majorana_condition = err_majorana_condition.max(
                charge_conjugate(&m.components).max_abs_diff(&m.components.scale(&c_sign)),
            );
            err_majorana_hamiltonian = err_majorana_hamiltonian.max(
                ap.apply(&m.components)
                    .max_abs_diff(&m.components.scale(&sign)),
            );
        }
        err_complete = err_complete.max(completeness.max_abs_diff(&id));

        let omega = weyl_to_majorana(d);
        let relations = [(1usize, -1.0f64, 1usize), (2, 1.0, 2), (3, 1.0, 4), (4, -1.0, 3)];
        for (w, sign, m) in relations {
            let image = omega.apply(&general_weyl(w, d).components);
            let target = majorana(m, d).components.scale(&Complex64::new(sign, 0.0));
            err_omega = err_omega.max(image.max_abs_diff(&target));
        }

        let (pp, pm) = energy_projectors(d);
        err_projector = err_projector
            .max(pp.mul(&pp).max_abs_diff(&pp))
            .max(pm.mul(&pm).max_abs_diff(&pm))
            .max(pp.mul(&pm).max_abs_diff(&Matrix4::zero()))
            .max(pp.add(&pm).max_abs_diff(&id));
        let outer = |i: usize| {
            let u = general_weyl(i, d).components;
            u.outer(&u)
        };
        err_spin_sum = err_spin_sum
            .max(pp.max_abs_diff(&outer(1).add(&outer(2))))
            .max(pm.max_abs_diff(&outer(3).add(&outer(4))));

        if !d.is_pole() {
            let flips = flip_identities_check(d).expect("non-pole direction");
            for (k, record) in flips.iter().enumerate() {
                err_flips[k] = err_flips[k].max(record.max_abs_error.unwrap_or(f64::INFINITY));
            }
        }

        let probe = general_weyl(1, d)
            .components
            .add(&general_weyl(3, d).components.scale(&Complex64::new(0.5, -0.25)));
        let a = scalars.get(n % scalars.len().max(1)).copied()
            .unwrap_or(Complex64::new(0.7, -0.3));
        err_antilinear = err_antilinear.max(
            charge_conjugate(&probe.scale(&a))
                .max_abs_diff(&charge_conjugate(&probe).scale(&a.conj())),
        );
        err_c_involution =
            err_c_involution.max(charge_conjugate(&charge_conjugate(&probe)).max_abs_diff(&probe));
    }

    let n = dirs.len();
    let float_record = |id: &str, identity: String, err: f64| CheckRecord::float(id, identity, err, FLOAT_TOL);
    records.extend([
        float_record(
            "general_lambda_unitary",
            format!("Λ†Λ = 𝟙 over {n} directions"),
            err_lambda_unitary,
        ),
        float_record(
            "general_lambda_det",
            format!("det Λ = 1 over {n} directions"),
            err_lambda_det,
        ),
        float_record(
            "general_block_form",
            format!("Λ·u^(i)(ẑ) equals the two-block closed form over {n} directions"),
            err_block_form,
        ),
        float_record(
            "general_orthonormal",
            format!("u^(i)†u^(j) = δᵢⱼ over {n} directions"),
            err_orthonormal,
        ),
        float_record(
            "general_complete",
            format!("Σᵢ u^(i)u^(i)† = 𝟙 over {n} directions"),
            err_complete,
        ),
        float_record(
            "general_hamiltonian_form",
            format!("(α·p̂)u^(i) = ±u^(i) with the energy sign over {n} directions"),
            err_hamiltonian,
        ),
        float_record(
            "general_chirality_helicity",
            format!("(Σ·p̂)u = ±γ⁵u with the energy sign over {n} directions"),
            err_chirality,
        ),
        float_record(
            "general_majorana_rotation",
            format!("Λ·u_M^(i)(ẑ) = u_M^(i)(p) over {n} directions"),
            err_majorana_rotation,
        ),
        float_record(
            "general_majorana_condition",
            format!("𝒞 u_M^(i)(p) = ±u_M^(i)(p) with the canonical signs over {n} directions"),
            err_majorana_condition,
        ),
        float_record(
            "general_majorana_hamiltonian",
            format!("(α·p̂)u_M^(i) = ±u_M^(i) with the energy sign over {n} directions"),
            err_majorana_hamiltonian,
        ),
        float_record(
            "general_weyl_majorana_map",
            format!("Ω·u^(1,2,3,4) = (−u_M^(1), +u_M^(2), +u_M^(4), −u_M^(3)) over {n} directions"),
            err_omega,
        ),
        float_record(
            "general_projector_algebra",
            format!("Λ±² = Λ±, Λ₊Λ₋ = 0, Λ₊+Λ₋ = 𝟙 over {n} directions"),
            err_projector,
        ),
        float_record(
            "general_projector_spin_sums",
            format!("Λ± equal the spin sums over {n} directions"),
            err_spin_sum,
        ),
        float_record(
            "general_flip_momentum",
            format!("χ±(−p) = ∓e^{{±iφ}}χ∓(p) over {n} directions"),
            err_flips[0],
        ),
        float_record(
            "general_flip_spin",
            format!("−iσ²χ±*(p) = ±χ∓(p) over {n} directions"),
            err_flips[1],
        ),
        float_record(
            "general_flip_combined",
            format!("−iσ²χ±*(−p) = e^{{∓iφ}}χ±(p) over {n} directions"),
            err_flips[2],
        ),
        float_record(
            "general_c_antilinear",
            format!("𝒞(a·v) = conj(a)·𝒞(v) over {n} probes"),
            err_antilinear,
        ),
        float_record(
            "general_c_involution",
            format!("𝒞² = 𝟙 over {n} probes"),
            err_c_involution,
        ),
    ]);

    Report::from_records("bispinor", records)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dirs() -> Vec<Direction> {
        [
            (0.4, 0.3),
            (1.2, 2.5),
            (std::f64::consts::FRAC_PI_2, 0.0),
            (2.9, 5.9),
            (1.7, 4.2),
        ]
        .into_iter()
        .map(|(t, p)| Direction::new(t, p).unwrap())
        .collect()
    }

    #[test]
    fn direction_validation() {
        assert!(Direction::new(-0.1, 0.0).is_err());
        assert!(Direction::new(0.1, -0.1).is_err());
        assert!(Direction::new(0.1, std::f64::consts::TAU).is_err());
        assert!(Direction::new(std::f64::consts::PI, 0.0).is_ok());
    }

    #[test]
    fn canonical_weyl_components_and_labels() {
        let expect = [
            (1, [0, 0, 1, 0], 1, 1, 1),
            (2, [0, 1, 0, 0], 1, -1, -1),
            (3, [0, 0, 0, 1], -1, -1, 1),
            (4, [1, 0, 0, 0], -1, 1, -1),
        ];
        for (i, comps, energy, helicity, chirality) in expect {
            let u = canonical_weyl(i);
            let v = Vector4::new(comps.map(ExactScalar::from_int));
            assert_eq!(u.components, v, "components of solution {i}");
            assert_eq!(u.meta.energy, energy);
            assert_eq!(u.meta.helicity, Some(helicity));
            assert_eq!(u.meta.chirality, Some(chirality));
        }
    }

    #[test]
    fn declared_labels_match_measured_eigenvalues() {
        for i in 1..=4 {
            let u = canonical_weyl(i);
            let (e, h, c) = measure_weyl_canonical(&u.components).unwrap();
            assert_eq!(u.meta.energy, e);
            assert_eq!(u.meta.helicity, Some(h));
            assert_eq!(u.meta.chirality, Some(c));
        }
    }

    #[test]
    fn helicity_spinor_canonical_values() {
        let d = Direction::canonical();
        let plus = helicity_spinor(Helicity::Plus, &d);
        assert!(plus.approx_eq(
            &Vector2::new([Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)]),
            0.0
        ));
        let minus = helicity_spinor(Helicity::Minus, &d);
        assert!(minus.approx_eq(
            &Vector2::new([Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)]),
            0.0
        ));
    }

    #[test]
    fn helicity_spinor_equator_value() {
        let d = Direction::new(std::f64::consts::FRAC_PI_2, 0.0).unwrap();
        let plus = helicity_spinor(Helicity::Plus, &d);
        let r = std::f64::consts::FRAC_1_SQRT_2;
        let expected = Vector2::new([Complex64::new(r, 0.0), Complex64::new(r, 0.0)]);
        assert!(plus.approx_eq(&expected, 1e-15));
    }

    #[test]
    fn helicity_spinors_are_pauli_eigenvectors() {
        for d in dirs() {
            let op = pauli_dot(&d);
            for h in [Helicity::Plus, Helicity::Minus] {
                let chi = helicity_spinor(h, &d);
                let expected = chi.scale(&Complex64::new(h.sign() as f64, 0.0));
                assert!(
                    op.apply(&chi).approx_eq(&expected, FLOAT_TOL),
                    "(σ·p̂)χ = ±χ at θ={}, φ={}",
                    d.theta(),
                    d.phi()
                );
            }
        }
    }

    #[test]
    fn rotation_at_zero_angle_is_identity() {
        let lambda = rotation_lambda(&Direction::canonical());
        assert!(lambda.approx_eq(&Matrix4::identity(), 1e-15));
    }

    #[test]
    fn rotation_is_special_unitary() {
        for d in dirs() {
            let lambda = rotation_lambda(&d);
            assert!(lambda.is_unitary_within(FLOAT_TOL));
            let det = lambda.det();
            assert!((det - Complex64::new(1.0, 0.0)).norm() <= FLOAT_TOL);
        }
    }

    #[test]
    fn rotation_matches_block_closed_form() {
        for d in dirs() {
            let lambda = rotation_lambda(&d);
            for i in 1..=4 {
                let rotated = lambda.apply(&canonical_weyl(i).components.to_complex());
                let direct = general_weyl(i, &d).components;
                assert!(rotated.approx_eq(&direct, FLOAT_TOL), "solution {i}");
            }
        }
    }

    #[test]
    fn general_weyl_orthonormal_and_complete() {
        for d in dirs() {
            let sols: Vec<_> = (1..=4).map(|i| general_weyl(i, &d).components).collect();
            for (i, a) in sols.iter().enumerate() {
                for (j, b) in sols.iter().enumerate() {
                    let expected = Complex64::new(if i == j { 1.0 } else { 0.0 }, 0.0);
                    assert!((a.dagger_dot(b) - expected).norm() <= FLOAT_TOL);
                }
            }
            let mut sum = Matrix4::<Complex64>::zero();
            for s in &sols {
                sum = sum.add(&s.outer(s));
            }
            assert!(sum.approx_eq(&Matrix4::identity(), FLOAT_TOL));
        }
    }

    #[test]
    fn hamiltonian_form_signs() {
        for d in dirs() {
            let ap = alpha_dot(&d);
            for i in 1..=4 {
                let u = general_weyl(i, &d);
                assert_eq!(
                    eigen_sign(&ap, &u.components, FLOAT_TOL),
                    Some(u.meta.energy),
                    "solution {i}"
                );
            }
        }
    }

    #[test]
    fn chirality_equals_signed_helicity() {
        // (Σ·p̂)u = ±γ⁵u with + for positive energy, − for negative energy
        for d in dirs() {
            let sp = sigma_dot(&d);
            let g5 = gamma5().to_complex();
            for i in 1..=4 {
                let u = general_weyl(i, &d).components;
                let lhs = sp.apply(&u);
                let sign = Complex64::new(WEYL_ENERGY[i - 1] as f64, 0.0);
                let rhs = g5.apply(&u).scale(&sign);
                assert!(lhs.approx_eq(&rhs, FLOAT_TOL), "solution {i}");
            }
        }
    }

    #[test]
    fn charge_conjugation_is_an_involution() {
        let v = Vector4::new([
            Complex64::new(0.3, -0.1),
            Complex64::new(0.5, 0.2),
            Complex64::new(-0.4, 0.6),
            Complex64::new(0.1, 0.25),
        ]);
        assert!(charge_conjugate(&charge_conjugate(&v)).approx_eq(&v, 1e-15));
    }

    #[test]
    fn charge_conjugation_is_antilinear() {
        let v = Vector4::new([
            Complex64::new(0.3, -0.1),
            Complex64::new(0.5, 0.2),
            Complex64::new(-0.4, 0.6),
            Complex64::new(0.1, 0.25),
        ]);
        let a = Complex64::new(0.8, -1.3);
        let lhs = charge_conjugate(&v.scale(&a));
        let rhs = charge_conjugate(&v).scale(&a.conj());
        assert!(lhs.approx_eq(&rhs, 1e-15));
    }

    #[test]
    fn canonical_majorana_components() {
        let r = ExactScalar::inv_sqrt2();
        let expect: [(usize, [i64; 4]); 4] = [
            (1, [0, 1, -1, 0]),
            (2, [0, 1, 1, 0]),
            (3, [-1, 0, 0, 1]),
            (4, [1, 0, 0, 1]),
        ];
        for (i, comps) in expect {
            let m = majorana_canonical(i);
            let expected = Vector4::new(comps.map(ExactScalar::from_int)).scale(&r);
            assert_eq!(m.components, expected, "Majorana solution {i}");
            assert_eq!(m.components.norm_sq(), ExactScalar::one());
        }
    }

    #[test]
    fn majorana_condition_signs_exact() {
        for i in 1..=4 {
            let m = majorana_canonical(i);
            assert_eq!(
                measure_c_parity_exact(&m.components),
                Some(MAJORANA_SIGN[i - 1]),
                "solution {i}"
            );
            assert_eq!(m.meta.c_parity, Some(MAJORANA_SIGN[i - 1]));
        }
    }

    #[test]
    fn majorana_condition_signs_general() {
        for d in dirs() {
            for i in 1..=4 {
                let m = majorana(i, &d);
                assert_eq!(
                    measure_c_parity(&m.components, FLOAT_TOL),
                    m.meta.c_parity,
                    "solution {i}"
                );
            }
        }
    }

    #[test]
    fn majorana_solves_the_hamiltonian_form() {
        for d in dirs() {
            let ap = alpha_dot(&d);
            for i in 1..=4 {
                let m = majorana(i, &d);
                assert_eq!(
                    eigen_sign(&ap, &m.components, FLOAT_TOL),
                    Some(m.meta.energy)
                );
            }
        }
    }

    #[test]
    fn rotation_carries_canonical_majorana_to_general() {
        for d in dirs() {
            let lambda = rotation_lambda(&d);
            for i in 1..=4 {
                let rotated = lambda.apply(&majorana_canonical(i).components.to_complex());
                assert!(rotated.approx_eq(&majorana(i, &d).components, FLOAT_TOL));
            }
        }
    }

    #[test]
    fn weyl_to_majorana_canonical_sign_relations() {
        let map = weyl_to_majorana_canonical();
        // (weyl index, sign, majorana index)
        let relations = [(1, -1, 1), (2, 1, 2), (3, 1, 4), (4, -1, 3)];
        for (w, sign, m) in relations {
            let image = map.apply(&canonical_weyl(w).components);
            let target = majorana_canonical(m).components;
            let expected = if sign > 0 { target } else { target.neg() };
            assert_eq!(image, expected, "map on solution {w}");
        }
        assert!(map.is_unitary());
        assert_eq!(map.det(), ExactScalar::one());
    }

    #[test]
    fn weyl_to_majorana_general_sign_relations() {
        for d in dirs() {
            let omega = weyl_to_majorana(&d);
            let relations = [(1, -1.0, 1), (2, 1.0, 2), (3, 1.0, 4), (4, -1.0, 3)];
            for (w, sign, m) in relations {
                let image = omega.apply(&general_weyl(w, &d).components);
                let expected = majorana(m, &d)
                    .components
                    .scale(&Complex64::new(sign, 0.0));
                assert!(image.approx_eq(&expected, FLOAT_TOL), "map on solution {w}");
            }
            assert!(omega.is_unitary_within(FLOAT_TOL));
        }
    }

    #[test]
    fn projectors_satisfy_their_algebra() {
        for d in dirs() {
            let (p, m) = energy_projectors(&d);
            let id = Matrix4::<Complex64>::identity();
            assert!(p.mul(&p).approx_eq(&p, FLOAT_TOL));
            assert!(m.mul(&m).approx_eq(&m, FLOAT_TOL));
            assert!(p.mul(&m).approx_eq(&Matrix4::zero(), FLOAT_TOL));
            assert!(p.add(&m).approx_eq(&id, FLOAT_TOL));
        }
    }

    #[test]
    fn projectors_equal_spin_sums() {
        for d in dirs() {
            let (p, m) = energy_projectors(&d);
            let outer = |i: usize| {
                let u = general_weyl(i, &d).components;
                u.outer(&u)
            };
            let pos = outer(1).add(&outer(2));
            let neg = outer(3).add(&outer(4));
            assert!(p.approx_eq(&pos, FLOAT_TOL));
            assert!(m.approx_eq(&neg, FLOAT_TOL));
        }
    }

    #[test]
    fn positive_projector_annihilates_negative_solutions() {
        for d in dirs() {
            let (p, _) = energy_projectors(&d);
            let u3 = general_weyl(3, &d).components;
            assert!(p.apply(&u3).max_abs() <= FLOAT_TOL);
        }
    }

    #[test]
    fn canonical_projectors_are_exact() {
        let (p, m) = energy_projectors_canonical();
        assert_eq!(p.mul(&p), p);
        assert_eq!(m.mul(&m), m);
        assert!(p.mul(&m).is_zero_matrix());
        assert!(p.add(&m).is_identity());
        // annihilation of the opposite-energy pair, exactly
        assert!(p.apply(&canonical_weyl(3).components).is_zero());
        assert!(m.apply(&canonical_weyl(1).components).is_zero());
    }

    #[test]
    fn flip_identities_hold_off_the_poles() {
        for d in dirs() {
            let records = flip_identities_check(&d).unwrap();
            assert_eq!(records.len(), 3);
            for r in &records {
                assert!(r.passed(), "{} failed at θ={}", r.id, d.theta());
            }
        }
    }

    #[test]
    fn flip_identities_refuse_poles() {
        let pole = Direction::canonical();
        assert!(matches!(
            flip_identities_check(&pole),
            Err(Error::PoleDirection { .. })
        ));
        let south = Direction::new(std::f64::consts::PI, 1.0).unwrap();
        assert!(matches!(
            flip_identities_check(&south),
            Err(Error::PoleDirection { .. })
        ));
    }

    #[test]
    fn general_weyl_reduces_to_canonical_at_theta_zero() {
        let d = Direction::canonical();
        for i in 1..=4 {
            let general = general_weyl(i, &d).components;
            let canonical = canonical_weyl(i).components.to_complex();
            assert!(general.approx_eq(&canonical, 0.0));
        }
    }

    #[test]
    fn suite_is_green() {
        let scalars = [Complex64::new(0.8, -1.3), Complex64::new(-0.2, 0.45)];
        let report = suite(&dirs(), &scalars);
        for r in &report.records {
            assert!(r.passed(), "{} failed ({:?})", r.id, r.max_abs_error);
        }
    }
}
