//! Truncated graded characters with exact rational exponents.
//!
//! A [`CharSeries`] is a finite q-expansion Σ c_e q^e with integer c_e ≥ 0,
//! carried together with its truncation order N: coefficients at exponents
//! ≤ N are complete, anything above N is unknown. Sums and products
//! truncate to the smaller operand order and never consult terms past it.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use crate::extension::{component_lowest_weight, ExtensionData};
use crate::lattice::{self, CosetLabel, IntegralLattice};
use crate::modrep::{sl2_label_parts, ExtModuleLabel};
use crate::ratio::{floor_int, floor_sqrt, mat, q_str, qq, qz, Q};
use crate::rootdata::{DominantWeight, Family};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharSeries {
    trunc: Q,
    terms: BTreeMap<Q, u64>,
}

impl CharSeries {
    /// The zero series at truncation order `trunc`.
    pub fn new(trunc: Q) -> Self {
        CharSeries {
            trunc,
            terms: BTreeMap::new(),
        }
    }

    /// The constant series 1.
    pub fn one(trunc: Q) -> Self {
        Self::from_terms(trunc, [(Q::zero(), 1)])
    }

    /// Collects terms, summing duplicates, dropping zeros and exponents
    /// beyond the truncation order.
    pub fn from_terms(trunc: Q, terms: impl IntoIterator<Item = (Q, u64)>) -> Self {
        let mut map: BTreeMap<Q, u64> = BTreeMap::new();
        for (e, c) in terms {
            if c == 0 || e > trunc {
                continue;
            }
            *map.entry(e).or_insert(0) += c;
        }
        CharSeries { trunc, terms: map }
    }

    pub fn trunc(&self) -> &Q {
        &self.trunc
    }

    pub fn coeff(&self, e: &Q) -> u64 {
        self.terms.get(e).copied().unwrap_or(0)
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Q, u64)> {
        self.terms.iter().map(|(e, &c)| (e, c))
    }

    pub fn min_exponent(&self) -> Option<&Q> {
        self.terms.keys().next()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let trunc = self.trunc.clone().min(other.trunc.clone());
        let mut terms = BTreeMap::new();
        for (e, c) in self.terms().chain(other.terms()) {
            if *e <= trunc {
                *terms.entry(e.clone()).or_insert(0u64) += c;
            }
        }
        CharSeries { trunc, terms }
    }

    /// Exact convolution. Operands must be supported in exponents ≥ 0 so
    /// that the min-truncation result is complete.
    pub fn mul(&self, other: &Self) -> Self {
        let trunc = self.trunc.clone().min(other.trunc.clone());
        for s in [self, other] {
            if let Some(e) = s.min_exponent() {
                assert!(!e.is_negative(), "series product needs exponents >= 0");
            }
        }
        let mut terms: BTreeMap<Q, u64> = BTreeMap::new();
        for (ea, ca) in self.terms() {
            if *ea > trunc {
                break;
            }
            for (eb, cb) in other.terms() {
                let e = ea + eb;
                if e > trunc {
                    break;
                }
                *terms.entry(e).or_insert(0) += ca * cb;
            }
        }
        CharSeries { trunc, terms }
    }

    /// Shifts every exponent (and the truncation order) by `delta`.
    pub fn shift(&self, delta: &Q) -> Self {
        CharSeries {
            trunc: &self.trunc + delta,
            terms: self.terms().map(|(e, c)| (e + delta, c)).collect(),
        }
    }

    pub fn scale(&self, factor: u64) -> Self {
        if factor == 0 {
            return Self::new(self.trunc.clone());
        }
        CharSeries {
            trunc: self.trunc.clone(),
            terms: self.terms().map(|(e, c)| (e.clone(), c * factor)).collect(),
        }
    }

    /// Sorted list of [exponent, coefficient] pairs.
    pub fn to_json(&self) -> serde_json::Value {
        let pairs: Vec<serde_json::Value> = self
            .terms()
            .map(|(e, c)| serde_json::json!([q_str(e), c]))
            .collect();
        serde_json::Value::Array(pairs)
    }
}

/// q^{norm/2} Π_{n≥1} (1−q^n)^{−dim}: the character of a free-boson Fock
/// module on `dim` oscillators from a ground state of weight norm/2.
pub fn boson_char(dim: u32, norm: &Q, trunc: &Q) -> CharSeries {
    assert!(dim >= 1, "boson_char needs at least one oscillator");
    let shift = norm / qz(2);
    let rel = trunc - &shift;
    if rel.is_negative() {
        return CharSeries::new(trunc.clone());
    }
    let depth = floor_int(&rel);
    let d: usize = depth.try_into().unwrap_or(usize::MAX);
    let mut coefs = vec![0u64; d + 1];
    coefs[0] = 1;
    for _ in 0..dim {
        for part in 1..=d {
            for e in part..=d {
                coefs[e] += coefs[e - part];
            }
        }
    }
    CharSeries::from_terms(
        trunc.clone(),
        coefs
            .into_iter()
            .enumerate()
            .map(|(e, c)| (&shift + qz(e as i64), c)),
    )
}

/// Graded dimension of the integrable module L(k,i) over affine sl(2),
/// graded by L(0) minus the lowest weight, complete through q^trunc.
pub fn affine_sl2_char(k: u32, i: u32, trunc: &Q) -> Result<CharSeries> {
    assert!(k >= 1 && i <= k, "need 0 <= i <= k, k >= 1");
    if trunc.is_negative() {
        return Ok(CharSeries::new(trunc.clone()));
    }
    if k == 1 {
        return sl2_level_one_char(i, trunc);
    }
    let depth: usize = floor_int(trunc).try_into().unwrap();
    let dims = sl2_weyl_kac_dims(k, i, depth);
    Ok(CharSeries::from_terms(
        trunc.clone(),
        dims.into_iter().enumerate().map(|(d, c)| (qz(d as i64), c)),
    ))
}

/// L(1,i) realized inside the rank-one lattice vertex algebra with
/// ⟨α,α⟩ = 2: the character is Θ_{L+iα/2} over the oscillator factor.
fn sl2_level_one_char(i: u32, trunc: &Q) -> Result<CharSeries> {
    let lat = IntegralLattice::new(vec!["a".into()], vec![vec![qz(2)]])?;
    let ground = qq(i as i64 * i as i64, 4);
    let abs_trunc = &ground + trunc;
    let theta = lattice::theta_coset(&lat, &CosetLabel::new(vec![qq(i as i64, 2)]), &abs_trunc)?;
    let bose = boson_char(1, &Q::zero(), &abs_trunc);
    Ok(theta.mul(&bose).shift(&-ground))
}

/// Level-k characters by exact numerator/denominator division: with
/// K = k+2 and a = i+1 the alternant is
/// Σ_n z^{a+2Kn} q^{Kn²+an} − z^{−a+2Kn} q^{Kn²−an},
/// and the character is the quotient by the (K=2, a=1) alternant, computed
/// order by order in q as exact Laurent division by z − z⁻¹.
fn sl2_weyl_kac_dims(k: u32, i: u32, depth: usize) -> Vec<u64> {
    let num = alternant(k as i64 + 2, i as i64 + 1, depth);
    let den = alternant(2, 1, depth);
    let mut ch: Vec<BTreeMap<i64, i128>> = Vec::with_capacity(depth + 1);
    for d in 0..=depth {
        let mut rem = num[d].clone();
        for e in 0..d {
            for (&za, &ca) in &ch[e] {
                for (&zb, &cb) in &den[d - e] {
                    *rem.entry(za + zb).or_insert(0) -= ca * cb;
                }
            }
        }
        ch.push(divide_by_weyl_denominator(rem));
    }
    ch.iter()
        .map(|level| {
            let total: i128 = level.values().sum();
            assert!(level.values().all(|&c| c >= 0));
            total.try_into().unwrap()
        })
        .collect()
}

/// q-levels 0..=depth of Σ_n z^{a+2Kn} q^{Kn²+an} − z^{−a+2Kn} q^{Kn²−an}.
fn alternant(big_k: i64, a: i64, depth: usize) -> Vec<BTreeMap<i64, i128>> {
    let d = depth as i64;
    let mut levels: Vec<BTreeMap<i64, i128>> = vec![BTreeMap::new(); depth + 1];
    let mut n = -(d + 2);
    while n <= d + 2 {
        let plus = big_k * n * n + a * n;
        if (0..=d).contains(&plus) {
            *levels[plus as usize].entry(a + 2 * big_k * n).or_insert(0) += 1;
        }
        let minus = big_k * n * n - a * n;
        if (0..=d).contains(&minus) {
            *levels[minus as usize].entry(-a + 2 * big_k * n).or_insert(0) -= 1;
        }
        n += 1;
    }
    levels
}

/// Exact division of a Laurent polynomial by z − z⁻¹, from the top down.
fn divide_by_weyl_denominator(mut p: BTreeMap<i64, i128>) -> BTreeMap<i64, i128> {
    let mut quot: BTreeMap<i64, i128> = BTreeMap::new();
    let floor = p.keys().next().map(|&lo| lo - 2).unwrap_or(0);
    loop {
        p.retain(|_, c| *c != 0);
        let Some((&top, &c)) = p.iter().next_back() else {
            break;
        };
        assert!(top >= floor, "alternant quotient left a remainder");
        *quot.entry(top - 1).or_insert(0) += c;
        p.remove(&top);
        *p.entry(top - 2).or_insert(0) += c;
    }
    quot.retain(|_, c| *c != 0);
    quot
}

/// Character of the untwisted module W(i,j)[L] of A_k(sl(2)), graded by
/// exact conformal weight:
///
///   char L(k,i) q^{h_i} Θ_{2L'+(j/k)α'} / η-part
///     + char L(k,k-i) q^{h_{k-i}} Θ_{2L'+((j+k)/k)α'} / η-part,
///
/// where 2L' is the rank-one lattice of Gram <2α',2α'> = 2k and each theta
/// factor is multiplied by the oscillator character of V_{2L'}.
pub fn ext_module_char(
    ext: &ExtensionData,
    label: &ExtModuleLabel,
    trunc: &Q,
) -> Result<CharSeries> {
    let rs = ext.root_system();
    if rs.lie_type.family() != Family::A || rs.lie_type.rank() != 1 {
        return Err(Error::Sl2Only);
    }
    let k = ext.level();
    let ku = u32::try_from(k).map_err(|_| Error::Invalid("level exceeds u32".into()))?;
    let (i, j) = sl2_label_parts(k, label)?;
    let two_lp = IntegralLattice::new(vec!["b".into()], vec![vec![qz(2 * k)]])?;
    let mut total = CharSeries::new(trunc.clone());
    for (i_part, j_part) in [(i, j), (k - i, j + k)] {
        let h = crate::fusion::conformal_weight(rs, k, &DominantWeight::new(vec![i_part])?)?;
        let rel = trunc - &h;
        if rel.is_negative() {
            continue;
        }
        let aff = affine_sl2_char(ku, i_part as u32, &rel)?.shift(&h);
        let theta = lattice::theta_coset(&two_lp, &CosetLabel::new(vec![qq(j_part, 2 * k)]), trunc)?;
        let bose = boson_char(1, &Q::zero(), trunc);
        total = total.add(&aff.mul(&theta).mul(&bose));
    }
    Ok(total)
}

/// Dimension of the weight-one subspace of A_k(g): the affine currents and
/// Heisenberg modes of the vacuum component, plus the lowest spaces of the
/// components whose lowest weight is exactly one. Components are graded in
/// clw + Z_{>=0}, and clw(m) >= (1/2) m G' m bounds the search box.
pub fn weight_one_dim(ext: &ExtensionData) -> Result<u128> {
    let rs = ext.root_system();
    let n = rs.rank();
    let theta_labels: Vec<i64> = (0..n)
        .map(|j| (0..n).map(|i| rs.marks[i] * rs.cartan[i][j]).sum())
        .collect();
    let adjoint = rs.weyl_dim(&DominantWeight::new(theta_labels)?)?;
    let mut dim = adjoint + ext.heis_dim() as u128;
    let group = ext.current_group();
    if ext.heis_dim() == 0 {
        if component_lowest_weight(ext, &[1])? == qz(1) {
            dim += rs.weyl_dim(&group.class_weight(&ext.class_of(&[1])?))?;
        }
        return Ok(dim);
    }
    let g = ext.heis_dim();
    let gram = ext.heis_gram();
    let ginv = mat::inverse(gram);
    let bounds: Vec<i64> = (0..g)
        .map(|s| {
            let r: i64 = floor_sqrt(&(qz(2) * &ginv[s][s])).try_into().unwrap();
            r + 1
        })
        .collect();
    let mut m: Vec<i64> = bounds.iter().map(|b| -b).collect();
    loop {
        if m.iter().any(|&x| x != 0) {
            let mut half_norm = Q::zero();
            for s in 0..g {
                for t in 0..g {
                    half_norm += qz(m[s]) * qz(m[t]) * &gram[s][t] / qz(2);
                }
            }
            if half_norm <= qz(1) && component_lowest_weight(ext, &m)? == qz(1) {
                dim += rs.weyl_dim(&group.class_weight(&ext.class_of(&m)?))?;
            }
        }
        let mut pos = g;
        loop {
            if pos == 0 {
                return Ok(dim);
            }
            pos -= 1;
            m[pos] += 1;
            if m[pos] <= bounds[pos] {
                break;
            }
            m[pos] = -bounds[pos];
        }
    }
}
