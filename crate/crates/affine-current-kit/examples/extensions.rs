//! Assembling the simple-current extension A_k(g) = V[L] for several
//! types: the Heisenberg Gram matrix <a'_s,a'_t>, the extension-lattice
//! form B(α_s,α_t), parity, generating spaces, and what happens when the
//! normalization of <a',a'> is replaced by an inadmissible one.

use affine_current_kit::extension::{
    build_extension, build_extension_with_gram, check_hypotheses, component_lowest_weight,
    generator_spec, parity,
};
use affine_current_kit::ratio::{q_str, qq};
use affine_current_kit::rootdata::{build_root_system, Family, LieType};

fn main() {
    for (family, rank, k) in [
        (Family::A, 1, 3),
        (Family::C, 3, 2),
        (Family::D, 4, 1),
        (Family::E, 7, 1),
    ] {
        let rs = build_root_system(LieType::new(family, rank).unwrap());
        let ext = build_extension(&rs, k).unwrap();
        println!("== {} at level {k} ==", rs.lie_type);
        for row in ext.heis_gram() {
            let cells: Vec<String> = row.iter().map(q_str).collect();
            println!("  <a',a'> row: {}", cells.join(" "));
        }
        for row in ext.big_lattice().gram() {
            let cells: Vec<String> = row.iter().map(q_str).collect();
            println!("  B row:       {}", cells.join(" "));
        }
        let p = parity(&ext).unwrap();
        println!(
            "  parity: {}",
            if p.is_super { "superalgebra" } else { "even algebra" }
        );
        match generator_spec(&ext) {
            Ok(spec) => {
                for space in &spec.spaces {
                    println!(
                        "  generating space {} at weight {}, dim {}",
                        space.label,
                        q_str(&space.weight),
                        space.dim
                    );
                }
                println!("  pairwise locality order {}", spec.locality_order);
            }
            Err(e) => println!("  ({e})"),
        }
        println!(
            "  lowest weight of the m=2 component: {}",
            q_str(&component_lowest_weight(&ext, &vec![2; ext.heis_dim()]).unwrap())
        );
        println!();
    }

    let a1 = build_root_system(LieType::new(Family::A, 1).unwrap());
    let bad = build_extension_with_gram(&a1, 1, vec![vec![qq(1, 3)]]).unwrap();
    let report = check_hypotheses(&bad);
    println!("replacing <a',a'> = 1/2 by 1/3 at level 1:");
    for check in &report.checks {
        println!(
            "  [{}] {}: {}",
            if check.passed { "pass" } else { "FAIL" },
            check.name,
            check.detail
        );
    }
    println!("  admissible: {}", report.all_pass());

    println!();
    println!("parity of A_k(sl(2)) by level:");
    for k in 1..=6 {
        let ext = build_extension(&a1, k).unwrap();
        println!(
            "  k={k}: {}",
            if parity(&ext).unwrap().is_super {
                "super"
            } else {
                "even"
            }
        );
    }
}
