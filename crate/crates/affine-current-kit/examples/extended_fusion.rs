//! Fusion for A_k(sl(2)): the base sl(2) table at level k, the quotient
//! table over the canonical classes computed from it, and the closed-form
//! product rule, which agree entry by entry.

use affine_current_kit::extension::build_extension;
use affine_current_kit::fusion::sl2_fusion;
use affine_current_kit::modrep::{
    ext_fusion_sl2, sl2_base_table, verlinde_quotient, ExtModuleLabel,
};
use affine_current_kit::ratio::q_str;
use affine_current_kit::rootdata::{build_root_system, Family, LieType};

fn name(label: &ExtModuleLabel) -> String {
    format!(
        "W({},{})",
        label.0.lambda.labels()[0],
        q_str(&label.0.gamma[0])
    )
}

fn main() {
    let k = 2;
    println!("base sl(2) fusion at level {k}:");
    for i in 0..=k {
        for j in i..=k {
            let products: Vec<String> = sl2_fusion(k, i, j)
                .unwrap()
                .iter()
                .map(|(c, m)| {
                    let r = c.0.labels()[0];
                    if m == 1 {
                        format!("[{r}]")
                    } else {
                        format!("{m}[{r}]")
                    }
                })
                .collect();
            println!("  [{i}] x [{j}] = {}", products.join(" + "));
        }
    }

    let a1 = build_root_system(LieType::new(Family::A, 1).unwrap());
    for k in [2i64, 4] {
        let ext = build_extension(&a1, k).unwrap();
        let table = verlinde_quotient(&ext, &sl2_base_table(k).unwrap()).unwrap();
        println!();
        println!(
            "extended fusion for A_{k}(sl(2)) ({} classes):",
            table.classes.len()
        );
        for (a, b, mults) in &table.entries {
            if a > b {
                continue;
            }
            let products: Vec<String> = mults
                .iter()
                .enumerate()
                .filter(|(_, &m)| m > 0)
                .map(|(c, &m)| {
                    let class = name(&table.classes[c]);
                    if m == 1 {
                        class
                    } else {
                        format!("{m} {class}")
                    }
                })
                .collect();
            println!(
                "  {} x {} = {}",
                name(&table.classes[*a]),
                name(&table.classes[*b]),
                products.join(" + ")
            );
            let closed = ext_fusion_sl2(k, &table.classes[*a], &table.classes[*b]).unwrap();
            for (c, class) in table.classes.iter().enumerate() {
                assert_eq!(closed.mult_of(class), mults[c]);
            }
        }
        println!("  (the closed rule reproduces every entry)");
    }
}
