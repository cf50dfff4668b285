//! Level-k weight sets, conformal weights, sl(2) fusion rules, and the
//! simple-current group with its action on dominant weights.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::ratio::{qz, Q};
use crate::rootdata::{DominantWeight, Family, RootSystem};
use crate::{Error, Result};

/// P_k: dominant weights λ with ⟨λ,θ⟩ ≤ k, in lexicographic label order.
#[derive(Debug, Clone)]
pub struct LevelWeightSet {
    rs: RootSystem,
    level: i64,
    weights: Vec<DominantWeight>,
}

impl LevelWeightSet {
    pub fn level(&self) -> i64 {
        self.level
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn weights(&self) -> &[DominantWeight] {
        &self.weights
    }

    pub fn contains(&self, lambda: &DominantWeight) -> bool {
        lambda.rank() == self.rs.rank() && self.rs.theta_pairing(lambda) <= self.level
    }
}

pub fn level_weights(rs: &RootSystem, k: i64) -> LevelWeightSet {
    assert!(k >= 1, "level must be positive");
    let comarks = rs.comarks();
    let n = rs.rank();
    let mut weights = Vec::new();
    let mut labels = vec![0i64; n];
    fn walk(
        comarks: &[i64],
        labels: &mut Vec<i64>,
        pos: usize,
        budget: i64,
        out: &mut Vec<DominantWeight>,
    ) {
        if pos == comarks.len() {
            out.push(DominantWeight::new(labels.clone()).unwrap());
            return;
        }
        let mut l = 0;
        while l * comarks[pos] <= budget {
            labels[pos] = l;
            walk(comarks, labels, pos + 1, budget - l * comarks[pos], out);
            l += 1;
        }
        labels[pos] = 0;
    }
    walk(&comarks, &mut labels, 0, k, &mut weights);
    weights.sort();
    LevelWeightSet {
        rs: rs.clone(),
        level: k,
        weights,
    }
}

/// Lowest L(0)-weight of L(k,λ): ⟨λ, λ+2ρ⟩ / (2(k+h∨)).
pub fn conformal_weight(rs: &RootSystem, k: i64, lambda: &DominantWeight) -> Result<Q> {
    let n = rs.rank();
    if lambda.rank() != n {
        return Err(Error::DimensionMismatch {
            left: lambda.rank(),
            right: n,
        });
    }
    if rs.theta_pairing(lambda) > k {
        return Err(Error::WeightNotAtLevel { level: k });
    }
    // <lambda_i, lambda_j> = a_ij <alpha_j,alpha_j> / 2
    let mut num = Q::zero();
    for i in 0..n {
        let li = lambda.labels()[i];
        if li == 0 {
            continue;
        }
        for j in 0..n {
            let w = &rs.weight_coeffs[i][j] * &rs.root_norms[j] / qz(2);
            num += qz(li) * qz(lambda.labels()[j] + 2) * w;
        }
    }
    Ok(num / qz(2 * (k + rs.dual_coxeter)))
}

/// The class [L(k,λ)] of an irreducible module in the fusion algebra.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct FusionClass(pub DominantWeight);

/// A finitely supported nonnegative-integer combination of fusion classes.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FusionVector {
    terms: BTreeMap<FusionClass, u64>,
}

impl FusionVector {
    pub fn zero() -> Self {
        FusionVector::default()
    }

    pub fn single(class: FusionClass) -> Self {
        let mut v = FusionVector::zero();
        v.add_class(class, 1);
        v
    }

    pub fn add_class(&mut self, class: FusionClass, mult: u64) {
        if mult > 0 {
            *self.terms.entry(class).or_insert(0) += mult;
        }
    }

    pub fn add(&self, other: &FusionVector) -> FusionVector {
        let mut out = self.clone();
        for (c, m) in &other.terms {
            out.add_class(c.clone(), *m);
        }
        out
    }

    pub fn mult_of(&self, class: &FusionClass) -> u64 {
        self.terms.get(class).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&FusionClass, u64)> {
        self.terms.iter().map(|(c, &m)| (c, m))
    }

    pub fn support(&self) -> Vec<&DominantWeight> {
        self.terms.keys().map(|c| &c.0).collect()
    }

    pub fn total(&self) -> u64 {
        self.terms.values().sum()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(c, m)| serde_json::json!([c.0.labels(), m]))
            .collect();
        serde_json::Value::Array(rows)
    }
}

/// [L(k,i)] × [L(k,j)] = Σ [L(k,r)], r from |i−j| to min(i+j, 2k−i−j) in
/// steps of two.
pub fn sl2_fusion(k: i64, i: i64, j: i64) -> Result<FusionVector> {
    for label in [i, j] {
        if !(0..=k).contains(&label) {
            return Err(Error::LabelOutOfRange { label, level: k });
        }
    }
    let mut v = FusionVector::zero();
    let mut r = (i - j).abs();
    let top = (i + j).min(2 * k - i - j);
    while r <= top {
        v.add_class(FusionClass(DominantWeight::new(vec![r]).unwrap()), 1);
        r += 2;
    }
    Ok(v)
}

/// An element of the simple-current group, as coordinates in the cyclic
/// factors of P∨/Q∨.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SimpleCurrentElement {
    coords: Vec<u64>,
}

impl SimpleCurrentElement {
    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    pub fn is_identity(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }
}

/// The group of simple currents {[L(k,kλ_i)] : a_i = 1} ∪ {[L(k,0)]},
/// isomorphic to P∨/Q∨, acting on P_k by affine diagram automorphisms.
#[derive(Debug, Clone)]
pub struct SimpleCurrentGroup {
    rs: RootSystem,
    level: i64,
    center: crate::rootdata::CenterGroup,
}

pub fn simple_current_group(rs: &RootSystem, k: i64) -> SimpleCurrentGroup {
    assert!(k >= 1, "level must be positive");
    SimpleCurrentGroup {
        rs: rs.clone(),
        level: k,
        center: rs.center_group(),
    }
}

impl SimpleCurrentGroup {
    pub fn level(&self) -> i64 {
        self.level
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn center(&self) -> &crate::rootdata::CenterGroup {
        &self.center
    }

    pub fn order(&self) -> u64 {
        self.center.order()
    }

    pub fn identity(&self) -> SimpleCurrentElement {
        SimpleCurrentElement {
            coords: vec![0; self.center.invariants.len()],
        }
    }

    /// The element [L(k,kλ_i)] for a cominimal node i (1-based).
    pub fn from_node(&self, node: usize) -> Result<SimpleCurrentElement> {
        for (i, coords) in &self.center.expressions {
            if *i == node {
                return Ok(SimpleCurrentElement {
                    coords: coords.clone(),
                });
            }
        }
        Err(Error::Invalid(format!(
            "node {node} does not carry a simple current"
        )))
    }

    /// All group elements, identity first, in lexicographic coordinate order.
    pub fn elements(&self) -> Vec<SimpleCurrentElement> {
        let mut out = vec![self.identity()];
        loop {
            let mut next = out.last().unwrap().coords.clone();
            let mut pos = next.len();
            loop {
                if pos == 0 {
                    return out;
                }
                pos -= 1;
                next[pos] += 1;
                if next[pos] < self.center.invariants[pos] {
                    break;
                }
                next[pos] = 0;
            }
            out.push(SimpleCurrentElement { coords: next });
        }
    }

    pub fn multiply(
        &self,
        a: &SimpleCurrentElement,
        b: &SimpleCurrentElement,
    ) -> SimpleCurrentElement {
        let coords = a
            .coords
            .iter()
            .zip(&b.coords)
            .zip(&self.center.invariants)
            .map(|((&x, &y), &d)| (x + y) % d)
            .collect();
        SimpleCurrentElement { coords }
    }

    pub fn power(&self, a: &SimpleCurrentElement, e: u64) -> SimpleCurrentElement {
        let coords = a
            .coords
            .iter()
            .zip(&self.center.invariants)
            .map(|(&x, &d)| (x * (e % d)) % d)
            .collect();
        SimpleCurrentElement { coords }
    }

    pub fn order_of(&self, a: &SimpleCurrentElement) -> u64 {
        a.coords
            .iter()
            .zip(&self.center.invariants)
            .map(|(&x, &d)| d / gcd(x, d))
            .fold(1, lcm)
    }

    pub fn act(&self, s: &SimpleCurrentElement, lambda: &DominantWeight) -> Result<DominantWeight> {
        current_action(&self.rs, self.level, s, lambda)
    }

    /// The weight with [s] = [L(k, class_weight(s))].
    pub fn class_weight(&self, s: &SimpleCurrentElement) -> DominantWeight {
        self.act(s, &DominantWeight::zero(self.rs.rank())).unwrap()
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// [L(k,λ)]·[s] = [L(k, λ′)] with λ′ read off an automorphism of the
/// affine diagram applied to the extended labels [k−⟨λ,θ⟩, λ_1, …, λ_n].
pub fn current_action(
    rs: &RootSystem,
    k: i64,
    s: &SimpleCurrentElement,
    lambda: &DominantWeight,
) -> Result<DominantWeight> {
    let n = rs.rank();
    if lambda.rank() != n {
        return Err(Error::DimensionMismatch {
            left: lambda.rank(),
            right: n,
        });
    }
    let zero_label = k - rs.theta_pairing(lambda);
    if zero_label < 0 {
        return Err(Error::WeightNotAtLevel { level: k });
    }
    let center = rs.center_group();
    assert_eq!(s.coords.len(), center.invariants.len());
    let mut perm: Vec<usize> = (0..=n).collect();
    for (t, &node) in center.generators.iter().enumerate() {
        let g = generator_permutation(rs, node);
        for _ in 0..s.coords[t] {
            perm = compose(&g, &perm);
        }
    }
    let mut ext = Vec::with_capacity(n + 1);
    ext.push(zero_label);
    ext.extend_from_slice(lambda.labels());
    let mut moved = vec![0i64; n + 1];
    for t in 0..=n {
        moved[perm[t]] = ext[t];
    }
    let image = DominantWeight::new(moved[1..].to_vec())?;
    debug_assert_eq!(moved[0], k - rs.theta_pairing(&image));
    image
        .labels()
        .iter()
        .for_each(|&l| debug_assert!(l >= 0));
    Ok(image)
}

fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    q.iter().map(|&t| p[t]).collect()
}

/// The affine diagram automorphism attached to the cominimal node `node`
/// (1-based), as a permutation of the extended node set {0, 1, …, n}.
fn generator_permutation(rs: &RootSystem, node: usize) -> Vec<usize> {
    let n = rs.rank();
    let family = rs.lie_type.family();
    let sigma: Vec<usize> = match family {
        Family::A => (0..=n).map(|t| (t + 1) % (n + 1)).collect(),
        Family::B => {
            let mut p: Vec<usize> = (0..=n).collect();
            p.swap(0, 1);
            p
        }
        Family::C => (0..=n).map(|t| n - t).collect(),
        Family::D => {
            if node == n && n % 2 == 1 {
                (0..=n)
                    .map(|t| match t {
                        0 => n,
                        _ if t == n => 1,
                        1 => n - 1,
                        _ if t == n - 1 => 0,
                        _ => n - t,
                    })
                    .collect()
            } else if node == n {
                (0..=n).map(|t| n - t).collect()
            } else {
                (0..=n)
                    .map(|t| match t {
                        0 => n - 1,
                        _ if t == n - 1 => 0,
                        1 => n,
                        _ if t == n => 1,
                        _ => n - t,
                    })
                    .collect()
            }
        }
        Family::E if n == 6 => vec![1, 5, 4, 3, 6, 0, 2],
        Family::E if n == 7 => vec![6, 5, 4, 3, 2, 1, 0, 7],
        _ => unreachable!("no nontrivial diagram automorphism"),
    };
    debug_assert_eq!(
        {
            let mut s = sigma.clone();
            s.sort();
            s
        },
        (0..=n).collect::<Vec<_>>()
    );
    debug_assert_eq!(sigma[0], node);
    sigma
}
