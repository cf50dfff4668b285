//! The 2-cocycle ε on the A2 root lattice, the bilinear commutator sign
//! ε(a,b)ε(b,a) = (-1)^{B(a,b)+B(a,a)B(b,b)}, membership in the dual
//! lattice, and coset theta series Σ_{x∈L+β} q^{B(x,x)/2}.

use affine_current_kit::lattice::{
    dual_membership, epsilon, theta_coset, CosetLabel, IntegralLattice,
};
use affine_current_kit::ratio::{q_str, qq, qz, Q};
use num_traits::Zero;

fn main() {
    let a2 = IntegralLattice::new(
        vec!["a1".into(), "a2".into()],
        vec![vec![qz(2), qz(-1)], vec![qz(-1), qz(2)]],
    )
    .unwrap();

    println!("epsilon on the A2 root lattice:");
    let vectors: [(&str, [i64; 2]); 3] = [("a1", [1, 0]), ("a2", [0, 1]), ("a1+a2", [1, 1])];
    for (name_x, x) in &vectors {
        for (name_y, y) in &vectors {
            println!(
                "  eps({name_x}, {name_y}) = {:>2}",
                epsilon(&a2, x, y).unwrap()
            );
        }
    }
    let e12 = epsilon(&a2, &[1, 0], &[0, 1]).unwrap();
    let e21 = epsilon(&a2, &[0, 1], &[1, 0]).unwrap();
    println!("  commutator sign eps(a1,a2)eps(a2,a1) = {}", e12 * e21);

    let lambda1 = vec![qq(2, 3), qq(1, 3)];
    let not_dual = vec![qq(1, 2), Q::zero()];
    println!();
    println!(
        "dual membership: lambda_1 = (2/3,1/3) -> {}, (1/2,0) -> {}",
        dual_membership(&a2, &lambda1).unwrap(),
        dual_membership(&a2, &not_dual).unwrap()
    );

    println!();
    for (name, shift) in [("Q", vec![Q::zero(), Q::zero()]), ("Q+lambda_1", lambda1)] {
        let theta = theta_coset(&a2, &CosetLabel::new(shift), &qz(4)).unwrap();
        println!("theta series of {name} through q^4:");
        for (e, c) in theta.terms() {
            println!("  q^{{{}}}: {c}", q_str(e));
        }
    }
}
