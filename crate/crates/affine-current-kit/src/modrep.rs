//! Module labels W(lambda, gamma) for A_k(g), the twist order of sigma_W,
//! lattice shifts, the classification of untwisted irreducibles, and three
//! routes to the extended fusion rules.
//!
//! gamma is stored as exact coordinates in the alpha' basis, so the pairing
//! with alpha'_s is (G' gamma)_s for the Heisenberg Gram matrix G'. A label
//! is untwisted when lambda(h''_s) + <gamma, alpha'_s> is an integer for
//! every lattice generator; sigma_W has order lcm of the denominators.

use crate::extension::ExtensionData;
use crate::fusion::{conformal_weight, sl2_fusion, FusionClass, FusionVector};
use crate::jsonio::{q_json, qvec_json};
use crate::ratio::{floor_int, is_integer, mat, q_str, qz, Q};
use crate::rootdata::DominantWeight;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};
use std::collections::{BTreeMap, BTreeSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleLabel {
    pub lambda: DominantWeight,
    pub gamma: Vec<Q>,
}

impl ModuleLabel {
    pub fn new(lambda: DominantWeight, gamma: Vec<Q>) -> ModuleLabel {
        ModuleLabel { lambda, gamma }
    }
}

/// Canonical orbit representative: gamma coordinates in [0,1), ordered by
/// gamma lexicographically and then by the Dynkin labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtModuleLabel(pub ModuleLabel);

impl Ord for ExtModuleLabel {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0
            .gamma
            .cmp(&other.0.gamma)
            .then_with(|| self.0.lambda.labels().cmp(other.0.lambda.labels()))
    }
}

impl PartialOrd for ExtModuleLabel {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwistInfo {
    pub order: u64,
    pub untwisted: bool,
}

fn check_label(ext: &ExtensionData, label: &ModuleLabel) -> Result<()> {
    let rs = ext.root_system();
    if label.lambda.rank() != rs.rank() {
        return Err(Error::DimensionMismatch {
            left: label.lambda.rank(),
            right: rs.rank(),
        });
    }
    if label.gamma.len() != ext.heis_dim() {
        return Err(Error::DimensionMismatch {
            left: label.gamma.len(),
            right: ext.heis_dim(),
        });
    }
    if rs.theta_pairing(&label.lambda) > ext.level() {
        return Err(Error::WeightNotAtLevel { level: ext.level() });
    }
    Ok(())
}

/// lambda(h''_s) + <gamma, alpha'_s> for each lattice generator.
fn twist_values(ext: &ExtensionData, label: &ModuleLabel) -> Result<Vec<Q>> {
    check_label(ext, label)?;
    let rs = ext.root_system();
    let gram = ext.heis_gram();
    let mut out = Vec::new();
    for g in ext.generators() {
        let mut v = rs.weight_coweight_pairing(&label.lambda, &g.coweight)?;
        if let Some(s) = g.heis_index {
            for (t, c) in label.gamma.iter().enumerate() {
                v += c * &gram[t][s];
            }
        }
        out.push(v);
    }
    Ok(out)
}

pub fn untwisted_condition(ext: &ExtensionData, label: &ModuleLabel) -> Result<bool> {
    Ok(twist_values(ext, label)?.iter().all(is_integer))
}

pub fn sigma_order(ext: &ExtensionData, label: &ModuleLabel) -> Result<TwistInfo> {
    let mut order = BigInt::one();
    for v in twist_values(ext, label)? {
        let d = v.denom().clone();
        let g = num_integer::Integer::gcd(&order, &d);
        order = order / g * d;
    }
    let order = order
        .to_u64()
        .ok_or_else(|| Error::Invalid("twist order exceeds u64".into()))?;
    Ok(TwistInfo {
        order,
        untwisted: order == 1,
    })
}

/// W(lambda, gamma)^(alpha) for alpha = sum m_s alpha_s: lambda moves by the
/// simple-current class of the coweight part, gamma by the alpha' part.
pub fn shift_module(ext: &ExtensionData, label: &ModuleLabel, m: &[i64]) -> Result<ModuleLabel> {
    check_label(ext, label)?;
    let elem = ext.class_of(m)?;
    let group = ext.current_group();
    let lambda = group.act(&elem, &label.lambda)?;
    let mut gamma = label.gamma.clone();
    for (g, &c) in ext.generators().iter().zip(m) {
        if let Some(s) = g.heis_index {
            gamma[s] += qz(c);
        }
    }
    Ok(ModuleLabel { lambda, gamma })
}

/// The unique orbit element with all gamma coordinates in [0,1).
pub fn canonical_label(ext: &ExtensionData, label: &ModuleLabel) -> Result<ExtModuleLabel> {
    check_label(ext, label)?;
    let mut m = vec![0i64; ext.generators().len()];
    for (s, g) in ext.generators().iter().enumerate() {
        if let Some(t) = g.heis_index {
            let f = floor_int(&label.gamma[t]);
            m[s] = -f
                .to_i64()
                .ok_or_else(|| Error::Invalid("gamma coordinate exceeds i64".into()))?;
        }
    }
    Ok(ExtModuleLabel(shift_module(ext, label, &m)?))
}

/// The conformal weight of W(lambda, gamma): h(lambda) + (1/2)<gamma,gamma>.
pub fn module_conformal_weight(ext: &ExtensionData, label: &ModuleLabel) -> Result<Q> {
    check_label(ext, label)?;
    let mut w = conformal_weight(ext.root_system(), ext.level(), &label.lambda)?;
    let gram = ext.heis_gram();
    for (s, a) in label.gamma.iter().enumerate() {
        for (t, b) in label.gamma.iter().enumerate() {
            w += a * b * &gram[s][t] / qz(2);
        }
    }
    Ok(w)
}

pub fn label_json(ext: &ExtensionData, label: &ExtModuleLabel) -> Result<Value> {
    let gamma = if ext.heis_dim() == 1 {
        q_json(&label.0.gamma[0])
    } else {
        qvec_json(&label.0.gamma)
    };
    Ok(json!({
        "lambda_labels": label.0.lambda.labels(),
        "gamma": gamma,
        "conformal_weight": q_str(&module_conformal_weight(ext, &label.0)?),
    }))
}

/// All untwisted irreducible classes: for each lambda in P_k, the gamma in
/// [0,1)^g with G' gamma = z - v(lambda) for an integer vector z, where
/// v(lambda)_s = lambda(h''_s). Each shift orbit meets this set exactly
/// once, so the list is complete and irredundant.
pub fn classify(ext: &ExtensionData) -> Result<Vec<ExtModuleLabel>> {
    if ext.heis_dim() == 0 {
        return Err(Error::NoHeisenberg);
    }
    if let Some(name) = crate::extension::check_hypotheses(ext).first_failure() {
        return Err(Error::HypothesisFailed { name });
    }
    let rs = ext.root_system();
    let g = ext.heis_dim();
    let gram = ext.heis_gram();
    let ginv = mat::inverse(gram);
    let heis_gens: Vec<usize> = ext
        .generators()
        .iter()
        .enumerate()
        .filter(|(_, gen)| gen.heis_index.is_some())
        .map(|(s, _)| s)
        .collect();
    let mut out = BTreeSet::new();
    let weight_set = crate::fusion::level_weights(rs, ext.level());
    for lambda in weight_set.weights() {
        let mut v = vec![Q::zero(); g];
        for &s in &heis_gens {
            let gen = &ext.generators()[s];
            let idx = gen.heis_index.unwrap();
            v[idx] = rs.weight_coweight_pairing(lambda, &gen.coweight)?;
        }
        let mut lo = vec![0i64; g];
        let mut hi = vec![0i64; g];
        for s in 0..g {
            let mut low = v[s].clone();
            let mut high = v[s].clone();
            for t in 0..g {
                if gram[s][t].is_negative() {
                    low += &gram[s][t];
                } else {
                    high += &gram[s][t];
                }
            }
            lo[s] = crate::ratio::ceil_int(&low).to_i64().unwrap();
            hi[s] = floor_int(&high).to_i64().unwrap();
        }
        let mut z = lo.clone();
        'walk: loop {
            let zq: Vec<Q> = z.iter().zip(&v).map(|(&zi, vi)| qz(zi) - vi).collect();
            let c: Vec<Q> = (0..g)
                .map(|s| (0..g).map(|t| &ginv[s][t] * &zq[t]).sum())
                .collect();
            if c.iter().all(|x| !x.is_negative() && *x < Q::one()) {
                out.insert(ExtModuleLabel(ModuleLabel {
                    lambda: lambda.clone(),
                    gamma: c,
                }));
            }
            let mut pos = g;
            loop {
                if pos == 0 {
                    break 'walk;
                }
                pos -= 1;
                z[pos] += 1;
                if z[pos] <= hi[pos] {
                    break;
                }
                z[pos] = lo[pos];
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// An extended fusion expression, a multiset of canonical classes.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ExtFusionVector {
    terms: BTreeMap<ExtModuleLabel, u64>,
}

impl ExtFusionVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn add_class(&mut self, class: ExtModuleLabel, mult: u64) {
        if mult > 0 {
            *self.terms.entry(class).or_insert(0) += mult;
        }
    }

    pub fn mult_of(&self, class: &ExtModuleLabel) -> u64 {
        self.terms.get(class).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ExtModuleLabel, u64)> {
        self.terms.iter().map(|(c, &m)| (c, m))
    }

    pub fn total(&self) -> u64 {
        self.terms.values().sum()
    }

    pub fn to_json(&self, ext: &ExtensionData) -> Result<Value> {
        let mut rows = Vec::new();
        for (c, m) in self.iter() {
            rows.push(json!([label_json(ext, c)?, m]));
        }
        Ok(Value::Array(rows))
    }
}

/// Fusion of untwisted classes for A_k(sl(2)) by the closed rule: with
/// integer labels j = k * gamma,
///
///   [W(i1,j1)] [W(i2,j2)] = sum_i [W(i, j1+j2)],
///
/// i running over the fusion range of i1 and i2, followed by the reduction
/// W(i,j) = W(k-i, j-k) back into 0 <= j < k.
pub fn ext_fusion_sl2(
    k: i64,
    a: &ExtModuleLabel,
    b: &ExtModuleLabel,
) -> Result<ExtFusionVector> {
    let (i1, j1) = sl2_label_parts(k, a)?;
    let (i2, j2) = sl2_label_parts(k, b)?;
    let mut out = ExtFusionVector::zero();
    let j3 = j1 + j2;
    for (class, mult) in sl2_fusion(k, i1, i2)?.iter() {
        let i = class.0.labels()[0];
        let (i_red, j_red) = if j3 >= k { (k - i, j3 - k) } else { (i, j3) };
        let label = ModuleLabel::new(
            DominantWeight::new(vec![i_red])?,
            vec![qz(j_red) / qz(k)],
        );
        out.add_class(ExtModuleLabel(label), mult);
    }
    Ok(out)
}

pub(crate) fn sl2_label_parts(k: i64, label: &ExtModuleLabel) -> Result<(i64, i64)> {
    if label.0.lambda.rank() != 1 || label.0.gamma.len() != 1 {
        return Err(Error::Sl2Only);
    }
    let i = label.0.lambda.labels()[0];
    if i < 0 || i > k {
        return Err(Error::LabelOutOfRange { label: i, level: k });
    }
    let jq = &label.0.gamma[0] * qz(k);
    if !is_integer(&jq) {
        return Err(Error::Invalid(format!(
            "gamma = {} is not an integer multiple of 1/k",
            q_str(&label.0.gamma[0])
        )));
    }
    let j = jq.to_integer().to_i64().unwrap();
    if j < 0 || j >= k {
        return Err(Error::Invalid(format!(
            "label is not canonical: j = {j} outside 0..{k}"
        )));
    }
    if (i + j) % 2 != 0 {
        return Err(Error::TwistedModule { order: 2 });
    }
    Ok((i, j))
}

/// Fusion multiplicities of the unextended algebra, keyed by unordered
/// pairs of dominant weights.
#[derive(Debug, Clone, Default)]
pub struct BaseFusionTable {
    rows: BTreeMap<(DominantWeight, DominantWeight), FusionVector>,
}

impl BaseFusionTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, a: DominantWeight, b: DominantWeight, products: FusionVector) {
        let key = if a <= b { (a, b) } else { (b, a) };
        self.rows.insert(key, products);
    }

    pub fn row(&self, a: &DominantWeight, b: &DominantWeight) -> Option<&FusionVector> {
        if a <= b {
            self.rows.get(&(a.clone(), b.clone()))
        } else {
            self.rows.get(&(b.clone(), a.clone()))
        }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

/// The full sl(2) fusion table at level k.
pub fn sl2_base_table(k: i64) -> Result<BaseFusionTable> {
    let mut table = BaseFusionTable::new();
    for i in 0..=k {
        for j in i..=k {
            table.insert(
                DominantWeight::new(vec![i])?,
                DominantWeight::new(vec![j])?,
                sl2_fusion(k, i, j)?,
            );
        }
    }
    Ok(table)
}

/// N for W1[L] x W2[L] -> W3[L] as the lattice sum of base multiplicities.
/// Momentum in the Heisenberg directions selects at most one shift: the sum
/// collapses to the single alpha with gamma_3 + alpha' = gamma_1 + gamma_2,
/// and is zero when that difference is not a lattice vector.
pub fn fusion_lift(
    ext: &ExtensionData,
    table: &BaseFusionTable,
    w1: &ModuleLabel,
    w2: &ModuleLabel,
    w3: &ModuleLabel,
) -> Result<u64> {
    for w in [w1, w2, w3] {
        let info = sigma_order(ext, w)?;
        if !info.untwisted {
            return Err(Error::TwistedModule { order: info.order });
        }
    }
    let mut m = vec![0i64; ext.generators().len()];
    for (s, g) in ext.generators().iter().enumerate() {
        if let Some(t) = g.heis_index {
            let diff = &w1.gamma[t] + &w2.gamma[t] - &w3.gamma[t];
            if !is_integer(&diff) {
                return Ok(0);
            }
            m[s] = diff
                .to_integer()
                .to_i64()
                .ok_or_else(|| Error::Invalid("gamma shift exceeds i64".into()))?;
        }
    }
    let shifted = shift_module(ext, w3, &m)?;
    let row = table.row(&w1.lambda, &w2.lambda).ok_or_else(|| {
        Error::MissingFusionEntry {
            entry: format!("({:?}, {:?})", w1.lambda.labels(), w2.lambda.labels()),
        }
    })?;
    Ok(row.mult_of(&FusionClass(shifted.lambda)))
}

/// The quotient fusion table over the canonical classes: expand each base
/// product and push every term through `canonical_label`.
#[derive(Debug, Clone)]
pub struct ExtFusionTable {
    pub level: i64,
    pub classes: Vec<ExtModuleLabel>,
    pub entries: Vec<(usize, usize, Vec<u64>)>,
}

impl ExtFusionTable {
    pub fn to_json(&self, ext: &ExtensionData) -> Result<Value> {
        let mut classes = Vec::new();
        for c in &self.classes {
            classes.push(label_json(ext, c)?);
        }
        let mut rows = Vec::new();
        for (a, b, mults) in &self.entries {
            rows.push(json!([classes[*a], classes[*b], mults]));
        }
        Ok(json!({
            "level": self.level,
            "classes": classes,
            "table": rows,
        }))
    }
}

pub fn verlinde_quotient(ext: &ExtensionData, table: &BaseFusionTable) -> Result<ExtFusionTable> {
    let classes = classify(ext)?;
    let index: BTreeMap<&ExtModuleLabel, usize> =
        classes.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let mut entries = Vec::new();
    for (a, ca) in classes.iter().enumerate() {
        for (b, cb) in classes.iter().enumerate() {
            let row = table.row(&ca.0.lambda, &cb.0.lambda).ok_or_else(|| {
                Error::TableNotClosed {
                    detail: format!(
                        "no base row for ({:?}, {:?})",
                        ca.0.lambda.labels(),
                        cb.0.lambda.labels()
                    ),
                }
            })?;
            let gamma: Vec<Q> = ca
                .0
                .gamma
                .iter()
                .zip(&cb.0.gamma)
                .map(|(x, y)| x + y)
                .collect();
            let mut mults = vec![0u64; classes.len()];
            for (class, mult) in row.iter() {
                let label = ModuleLabel::new(class.0.clone(), gamma.clone());
                let canon = canonical_label(ext, &label)?;
                match index.get(&canon) {
                    Some(&i) => mults[i] += mult,
                    None => {
                        return Err(Error::TableNotClosed {
                            detail: format!(
                                "product term ({:?}, {}) is not an untwisted class",
                                canon.0.lambda.labels(),
                                canon
                                    .0
                                    .gamma
                                    .iter()
                                    .map(q_str)
                                    .collect::<Vec<_>>()
                                    .join(",")
                            ),
                        })
                    }
                }
            }
            entries.push((a, b, mults));
        }
    }
    Ok(ExtFusionTable {
        level: ext.level(),
        classes,
        entries,
    })
}
