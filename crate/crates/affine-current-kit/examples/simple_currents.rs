//! The group of simple currents [L(k,kλ_i)] and its permutation action on
//! the level-k weights, for D5 at level 2 and A2 at level 2.

use affine_current_kit::fusion::{conformal_weight, level_weights, simple_current_group};
use affine_current_kit::ratio::q_str;
use affine_current_kit::rootdata::{build_root_system, Family, LieType};

fn main() {
    let d5 = build_root_system(LieType::new(Family::D, 5).unwrap());
    let g = simple_current_group(&d5, 2);
    println!("simple currents of D5 at level 2 (order {}):", g.order());
    for s in g.elements() {
        let lambda = g.class_weight(&s);
        println!(
            "  coords {:?} -> [L(2,{:?})], conformal weight {}, order {}",
            s.coords(),
            lambda.labels(),
            q_str(&conformal_weight(&d5, 2, &lambda).unwrap()),
            g.order_of(&s)
        );
    }

    let a2 = build_root_system(LieType::new(Family::A, 2).unwrap());
    let g = simple_current_group(&a2, 2);
    let weights = level_weights(&a2, 2);
    let s = g.from_node(1).unwrap();
    println!();
    println!("action of the node-1 current of A2 at level 2:");
    for w in weights.weights() {
        println!("  {:?} -> {:?}", w.labels(), g.act(&s, w).unwrap().labels());
    }
}
