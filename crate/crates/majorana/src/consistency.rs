//! Exact/float consistency: every named exact-backend matrix and state must
//! agree with an independently built floating-point counterpart.
//!
//! The float side never touches the cyclotomic arithmetic: gamma matrices
//! are assembled from f64 literals, exponentials go through f64 cos/sin,
//! phases through polar form. Agreement within 1e−12 ties the two backends
//! together end to end.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_4};

use crate::bispinor::Direction;
use crate::gamma::exp_generator;
use crate::matrix::{kron2, Matrix2, Matrix4, Vector4};
use crate::qubit;
use crate::report::{CheckRecord, Report};
use crate::scalar::Complex64;
use crate::tqc;
use crate::FLOAT_TOL;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn pauli_f(i: usize) -> Matrix2<Complex64> {
    match i {
        1 => Matrix2::new([[c(0.0, 0.0), re(1.0)], [re(1.0), c(0.0, 0.0)]]),
        2 => Matrix2::new([[c(0.0, 0.0), c(0.0, -1.0)], [c(0.0, 1.0), c(0.0, 0.0)]]),
        3 => Matrix2::new([[re(1.0), c(0.0, 0.0)], [c(0.0, 0.0), re(-1.0)]]),
        _ => unreachable!(),
    }
}

fn block4_f(
    tl: &Matrix2<Complex64>,
    tr: &Matrix2<Complex64>,
    bl: &Matrix2<Complex64>,
    br: &Matrix2<Complex64>,
) -> Matrix4<Complex64> {
    crate::matrix::block4(tl, tr, bl, br)
}

fn gamma_f(mu: usize) -> Matrix4<Complex64> {
    let z = Matrix2::<Complex64>::zero();
    let id = Matrix2::<Complex64>::identity();
    match mu {
        0 => block4_f(&z, &id, &id, &z),
        _ => {
            let s = pauli_f(mu);
            block4_f(&z, &s, &s.neg(), &z)
        }
    }
}

fn gamma5_f() -> Matrix4<Complex64> {
    gamma_f(0)
        .mul(&gamma_f(1))
        .mul(&gamma_f(2))
        .mul(&gamma_f(3))
        .scale(&c(0.0, 1.0))
}

fn majorana_operator_f(i: usize) -> Matrix4<Complex64> {
    let r = re(FRAC_1_SQRT_2);
    let ir = c(0.0, FRAC_1_SQRT_2);
    let one_plus_g1 = Matrix4::identity().add(&gamma_f(1));
    match i {
        1 => gamma_f(3).mul(&one_plus_g1).scale(&ir),
        2 => gamma_f(2).mul(&one_plus_g1).scale(&ir),
        3 => gamma_f(0).mul(&one_plus_g1).scale(&r),
        4 => gamma_f(0)
            .mul(&gamma_f(2))
            .mul(&gamma_f(3))
            .add(&gamma5_f().scale(&c(0.0, 1.0)))
            .scale(&ir),
        _ => unreachable!(),
    }
}

fn fusion_basis_f() -> [Vector4<Complex64>; 4] {
    let half = 0.5;
    let phase = |angle: f64| Complex64::from_polar(1.0, angle);
    let zeta = phase(FRAC_PI_4);
    [
        Vector4::new([re(half), re(-half), c(0.0, -half), c(0.0, half)]),
        Vector4::new([zeta, zeta, zeta * phase(-2.0 * FRAC_PI_4), zeta * phase(-2.0 * FRAC_PI_4)])
            .scale(&re(half)),
        Vector4::new([
            zeta * phase(-2.0 * FRAC_PI_4),
            -(zeta * phase(-2.0 * FRAC_PI_4)),
            zeta,
            -zeta,
        ])
        .scale(&re(half)),
        Vector4::new([c(0.0, -half), c(0.0, -half), re(half), re(half)]),
    ]
}

/// Compare every named exact matrix and state against an independent
/// float-path construction, within 1e−12.
pub fn float_consistency_check() -> Report {
    let mut records = Vec::new();
    let mut matrix = |name: &str, exact: &Matrix4<crate::ExactScalar>, float: &Matrix4<Complex64>| {
        records.push(CheckRecord::float(
            format!("consistency_matrix_{name}"),
            format!("{name}: exact→float matches the float-path construction"),
            exact.to_complex().max_abs_diff(float),
            FLOAT_TOL,
        ));
    };

    for mu in 0..4 {
        matrix(&format!("gamma{mu}"), &crate::gamma::gamma(mu), &gamma_f(mu));
    }
    matrix("gamma5", &crate::gamma::gamma5(), &gamma5_f());
    for i in 1..=3 {
        matrix(
            &format!("sigma{i}"),
            &crate::gamma::sigma(i),
            &gamma5_f().mul(&gamma_f(0)).mul(&gamma_f(i)),
        );
        matrix(
            &format!("alpha{i}"),
            &crate::gamma::alpha(i),
            &gamma_f(0).mul(&gamma_f(i)),
        );
    }
    matrix(
        "charge_conjugation",
        &crate::gamma::charge_conjugation_matrix(),
        &gamma_f(2).scale(&c(0.0, 1.0)),
    );

    // rotation gates through f64 trigonometric exponentials
    let g1_f = gamma_f(1);
    let g013_f = gamma_f(0).mul(&gamma_f(1)).mul(&gamma_f(3));
    let angles = [FRAC_PI_4, -FRAC_PI_4];
    for (i, (generator, angle)) in [
        (&g1_f, angles[0]),
        (&g1_f, angles[1]),
        (&g013_f, angles[0]),
        (&g013_f, angles[1]),
    ]
    .into_iter()
    .enumerate()
    {
        matrix(
            &format!("rotation_gate{}", i + 1),
            &qubit::rotation_gate(i + 1),
            &exp_generator(generator, angle).unwrap(),
        );
    }

    for i in 1..=4 {
        matrix(
            &format!("majorana_operator{i}"),
            &qubit::majorana_operator(i),
            &majorana_operator_f(i),
        );
    }

    let h_f = Matrix2::new([[re(1.0), re(1.0)], [re(1.0), re(-1.0)]]).scale(&re(FRAC_1_SQRT_2));
    matrix(
        "hadamard_left",
        &qubit::gate(qubit::GateLabel::HadamardLeft),
        &kron2(&h_f, &Matrix2::identity()),
    );
    let cnot_f = Matrix4::from_fn(|r, col| {
        let grid = [[1.0, 0.0, 0.0, 0.0], [0.0, 1.0, 0.0, 0.0], [0.0, 0.0, 0.0, 1.0], [
            0.0, 0.0, 1.0, 0.0,
        ]];
        re(grid[r][col])
    });
    matrix("cnot", &qubit::cnot(), &cnot_f);

    for g in tqc::BraidGenerator::ALL {
        let (p, q) = g.pair();
        let generator_f = majorana_operator_f(p).mul(&majorana_operator_f(q));
        matrix(
            &format!("braid_{g}"),
            &tqc::braid_operator(g, false),
            &exp_generator(&generator_f, -FRAC_PI_4).unwrap(),
        );
    }
    matrix(
        "parity_f12",
        &tqc::parity(1, 2),
        &majorana_operator_f(1)
            .mul(&majorana_operator_f(2))
            .scale(&c(0.0, -1.0)),
    );
    matrix(
        "parity_f34",
        &tqc::parity(3, 4),
        &majorana_operator_f(3)
            .mul(&majorana_operator_f(4))
            .scale(&c(0.0, -1.0)),
    );
    matrix(
        "total_charge",
        &tqc::total_charge(),
        &majorana_operator_f(1)
            .mul(&majorana_operator_f(2))
            .mul(&majorana_operator_f(3))
            .mul(&majorana_operator_f(4))
            .neg(),
    );

    let mut state = |name: &str, exact: &Vector4<crate::ExactScalar>, float: &Vector4<Complex64>| {
        records.push(CheckRecord::float(
            format!("consistency_state_{name}"),
            format!("{name}: exact→float matches the float-path construction"),
            exact.to_complex().max_abs_diff(float),
            FLOAT_TOL,
        ));
    };

    // canonical-frame solutions via the general float formulas at θ = 0
    let canonical = Direction::canonical();
    for i in 1..=4 {
        state(
            &format!("weyl{i}"),
            &crate::bispinor::canonical_weyl(i).components,
            &crate::bispinor::general_weyl(i, &canonical).components,
        );
        state(
            &format!("majorana{i}"),
            &crate::bispinor::majorana_canonical(i).components,
            &crate::bispinor::majorana(i, &canonical).components,
        );
    }
    for label in qubit::BellLabel::ALL {
        state(
            &format!("bell_{}", label.ascii()),
            &qubit::bell_state(label),
            &qubit::bell_state_general(label, &canonical),
        );
    }
    let fusion_exact = tqc::fusion_basis_vectors();
    let fusion_float = fusion_basis_f();
    for k in 0..4 {
        state(
            &format!("fusion_{}", tqc::FusionState::basis_label(k)),
            &fusion_exact[k],
            &fusion_float[k],
        );
    }
    // braided states through the float path end to end
    let b23_f = exp_generator(
        &majorana_operator_f(2).mul(&majorana_operator_f(3)),
        -FRAC_PI_4,
    )
    .unwrap();
    for k in 0..4 {
        let exact = tqc::evaluate_braid(
            &tqc::BraidWord::from_generators([tqc::BraidGenerator::B23]),
            &tqc::FusionState::basis(k),
        )
        .to_computational();
        let float = b23_f.apply(&fusion_float[k]);
        state(
            &format!("braided_{}", tqc::FusionState::basis_label(k)),
            &exact,
            &float,
        );
    }

    Report::from_records("consistency", records)
}
