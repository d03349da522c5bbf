use majorana::gamma::{basis16, gamma5};
use majorana::matrix::Matrix4;
use majorana::qubit::majorana_operator;
use majorana::scalar::ExactScalar;

fn main() {
    let ops: Vec<_> = (1..=4).map(majorana_operator).collect();
    let id = Matrix4::<ExactScalar>::identity();
    let phases = [
        ("1", ExactScalar::one()),
        ("-1", ExactScalar::from_int(-1)),
        ("i", ExactScalar::i()),
        ("-i", ExactScalar::i().neg()),
    ];
    for (ix, base) in basis16() {
        for (pname, phase) in &phases {
            let candidate = base.scale(phase);
            let herm = candidate.is_hermitian();
            let invol = candidate.mul(&candidate) == id;
            let anti = ops.iter().all(|op| candidate.anticommutator(op).is_zero_matrix());
            if herm && invol && anti {
                println!("EXTENSION: {pname} * {ix}");
            }
        }
    }
    // what is the product R1R2R3R4?
    let prod = ops[0].mul(&ops[1]).mul(&ops[2]).mul(&ops[3]);
    println!("R1R2R3R4 = {:?}", prod);
    println!("gamma5   = {:?}", gamma5());
}
