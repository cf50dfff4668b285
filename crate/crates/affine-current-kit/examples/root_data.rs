//! Root-system data for a few simple types: Cartan matrix, marks and
//! comarks, the norms <h^(i),h^(i)> of the fundamental coweights at the
//! cominimal nodes, and the center P/Q.

use affine_current_kit::ratio::q_str;
use affine_current_kit::rootdata::{build_root_system, Family, LieType};

fn main() {
    for (family, rank) in [(Family::A, 3), (Family::D, 5), (Family::E, 7)] {
        let rs = build_root_system(LieType::new(family, rank).unwrap());
        println!("== {} ==", rs.lie_type);
        println!("cartan matrix:");
        for row in &rs.cartan {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>3}")).collect();
            println!("  {}", cells.join(" "));
        }
        println!("marks:   {:?}", rs.marks);
        println!("comarks: {:?}", rs.comarks());
        println!("dual Coxeter number: {}", rs.dual_coxeter);
        for i in rs.cominimal_indices() {
            let h = rs.fundamental_coweight(i).unwrap();
            println!(
                "  cominimal node {i}: <h^({i}),h^({i})> = {}",
                q_str(&rs.bilinear(&h, &h).unwrap())
            );
        }
        let center = rs.center_group();
        let parts: Vec<String> = center.invariants.iter().map(|d| format!("Z/{d}")).collect();
        println!(
            "center: {} (order {}), generated at nodes {:?}",
            if parts.is_empty() { "trivial".into() } else { parts.join(" x ") },
            center.order(),
            center.generators
        );
        println!();
    }
}
