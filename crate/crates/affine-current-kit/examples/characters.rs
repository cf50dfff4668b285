//! Graded characters of A_k(sl(2)) modules, the free-fermion form of the
//! level-one algebra, and weight-one Lie algebra dimensions of A_k(g).
//!
//! At level one, A_1(sl(2)) is four free fermions:
//!
//!   char A_1(sl(2)) = Π_{j>=1} (1+q^{j-1/2})^4.

use affine_current_kit::extension::build_extension;
use affine_current_kit::modrep::classify;
use affine_current_kit::qchar::{ext_module_char, weight_one_dim, CharSeries};
use affine_current_kit::ratio::{q_str, qq, qz, Q};
use affine_current_kit::rootdata::{build_root_system, Family, LieType};
use num_traits::Zero;

fn main() {
    let a1 = build_root_system(LieType::new(Family::A, 1).unwrap());
    let trunc = qq(9, 2);

    let ext = build_extension(&a1, 1).unwrap();
    let vacuum = classify(&ext).unwrap().into_iter().next().unwrap();
    let series = ext_module_char(&ext, &vacuum, &trunc).unwrap();

    let mut fermions = CharSeries::one(trunc.clone());
    for j in 1..=5i64 {
        let factor = CharSeries::from_terms(trunc.clone(), [(Q::zero(), 1), (qq(2 * j - 1, 2), 1)]);
        for _ in 0..4 {
            fermions = fermions.mul(&factor);
        }
    }
    println!("char A_1(sl(2)) through q^{{9/2}}, against (1+q^{{j-1/2}})^4:");
    for (e, c) in series.terms() {
        println!("  q^{{{}}}: {c} = {}", q_str(e), fermions.coeff(e));
    }
    assert_eq!(series, fermions);

    let ext = build_extension(&a1, 2).unwrap();
    println!();
    println!("characters of the three A_2(sl(2)) modules through q^3:");
    for label in classify(&ext).unwrap() {
        let series = ext_module_char(&ext, &label, &qz(3)).unwrap();
        let terms: Vec<String> = series
            .terms()
            .map(|(e, c)| format!("{c} q^{{{}}}", q_str(e)))
            .collect();
        println!(
            "  W({:?}; {}): {}",
            label.0.lambda.labels(),
            q_str(&label.0.gamma[0]),
            terms.join(" + ")
        );
    }

    println!();
    println!("dimension of the weight-one Lie algebra of A_k(g):");
    for (family, rank, k) in [
        (Family::A, 2usize, 2i64),
        (Family::A, 4, 2),
        (Family::E, 6, 1),
        (Family::E, 7, 1),
    ] {
        let rs = build_root_system(LieType::new(family, rank).unwrap());
        let ext = build_extension(&rs, k).unwrap();
        println!(
            "  {} at level {k}: {}",
            rs.lie_type,
            weight_one_dim(&ext).unwrap()
        );
    }
}
