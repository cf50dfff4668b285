//! Classifying the untwisted irreducible modules W(λ,γ) of A_k(sl(2)):
//! canonical orbit representatives, conformal weights, and the σ-twist
//! order of labels that fail the untwisted integrality condition.

use affine_current_kit::extension::build_extension;
use affine_current_kit::modrep::{classify, module_conformal_weight, sigma_order, ModuleLabel};
use affine_current_kit::ratio::{q_str, qq, Q};
use affine_current_kit::rootdata::{build_root_system, DominantWeight, Family, LieType};
use num_traits::Zero;

fn main() {
    let a1 = build_root_system(LieType::new(Family::A, 1).unwrap());
    for k in [2, 4] {
        let ext = build_extension(&a1, k).unwrap();
        let classes = classify(&ext).unwrap();
        println!(
            "A_{k}(sl(2)) has {} untwisted irreducible classes:",
            classes.len()
        );
        for label in &classes {
            println!(
                "  W({:?}; {})  conformal weight {}",
                label.0.lambda.labels(),
                q_str(&label.0.gamma[0]),
                q_str(&module_conformal_weight(&ext, &label.0).unwrap())
            );
        }
        println!();
    }

    let ext = build_extension(&a1, 2).unwrap();
    println!("twist orders at level 2:");
    for (i, gamma) in [(0i64, Q::zero()), (1, Q::zero()), (1, qq(1, 2)), (2, qq(1, 2))] {
        let label = ModuleLabel::new(DominantWeight::new(vec![i]).unwrap(), vec![gamma.clone()]);
        let info = sigma_order(&ext, &label).unwrap();
        println!(
            "  ({i}, {}): sigma order {}, {}",
            q_str(&gamma),
            info.order,
            if info.untwisted { "untwisted" } else { "twisted" }
        );
    }
}
