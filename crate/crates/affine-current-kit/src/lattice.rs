//! Integral lattices with exact Gram matrices: validation, duality, the
//! 2-cocycle ε and the η/C pairings carried by lattice vertex superalgebras,
//! and coset theta series.

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::qchar::CharSeries;
use crate::ratio::{self, ceil_int, floor_int, floor_sqrt, q_str, qz, Q};
use crate::{Error, Result};

/// A free Z-module with an ordered basis and a symmetric bilinear form B.
/// The basis order is part of the identity: the cocycle ε depends on it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralLattice {
    basis_names: Vec<String>,
    gram: Vec<Vec<Q>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub integral: bool,
    pub even: bool,
    pub positive_definite: bool,
    /// Basis of L^e = {α : B(α,α) ∈ 2Z} in lattice coordinates; None when
    /// the form is not integral (then evenness is not a coset condition).
    pub even_sublattice_basis: Option<Vec<Vec<i64>>>,
}

impl ValidationReport {
    /// Index of L^e in L: 1 when the lattice is even, 2 otherwise.
    pub fn even_sublattice_index(&self) -> Option<u64> {
        self.even_sublattice_basis
            .as_ref()
            .map(|_| if self.even { 1 } else { 2 })
    }
}

/// Coset representative c for the shifted lattice c + L, in basis coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetLabel {
    shift: Vec<Q>,
}

impl CosetLabel {
    pub fn new(shift: Vec<Q>) -> Self {
        CosetLabel { shift }
    }

    pub fn shift(&self) -> &[Q] {
        &self.shift
    }
}

impl IntegralLattice {
    pub fn new(basis_names: Vec<String>, gram: Vec<Vec<Q>>) -> Result<Self> {
        let n = basis_names.len();
        if gram.len() != n || gram.iter().any(|row| row.len() != n) {
            return Err(Error::DimensionMismatch {
                left: n,
                right: gram.len(),
            });
        }
        for i in 0..n {
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::Invalid("Gram matrix must be symmetric".into()));
                }
            }
        }
        Ok(IntegralLattice { basis_names, gram })
    }

    pub fn rank(&self) -> usize {
        self.basis_names.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn gram(&self) -> &[Vec<Q>] {
        &self.gram
    }

    pub fn validate(&self) -> ValidationReport {
        let n = self.rank();
        let integral = self
            .gram
            .iter()
            .all(|row| row.iter().all(ratio::is_integer));
        let even = integral && (0..n).all(|i| diag_even(&self.gram[i][i]));
        let positive_definite = ratio::mat::leading_minors(&self.gram)
            .iter()
            .all(|m| m.is_positive());
        let even_sublattice_basis = integral.then(|| {
            let odd: Vec<usize> = (0..n).filter(|&i| !diag_even(&self.gram[i][i])).collect();
            let mut rows: Vec<Vec<i64>> = (0..n)
                .map(|j| {
                    let mut e = vec![0i64; n];
                    e[j] = 1;
                    e
                })
                .collect();
            if let Some(&i0) = odd.first() {
                rows[i0][i0] = 2;
                for &j in &odd[1..] {
                    rows[j][i0] = -1;
                }
            }
            rows
        });
        ValidationReport {
            integral,
            even,
            positive_definite,
            even_sublattice_basis,
        }
    }

    /// B(x, y) for rational coordinate vectors.
    pub fn pairing(&self, x: &[Q], y: &[Q]) -> Result<Q> {
        for v in [x, y] {
            if v.len() != self.rank() {
                return Err(Error::DimensionMismatch {
                    left: self.rank(),
                    right: v.len(),
                });
            }
        }
        Ok(ratio::mat::pair(&self.gram, x, y))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "rank": self.rank(),
            "basis_names": self.basis_names,
            "gram": crate::jsonio::qmat_json(&self.gram),
        })
    }
}

fn diag_even(x: &Q) -> bool {
    ratio::is_integer(x) && x.numer().is_even()
}

fn check_dim(lat: &IntegralLattice, len: usize) -> Result<()> {
    if len != lat.rank() {
        return Err(Error::DimensionMismatch {
            left: lat.rank(),
            right: len,
        });
    }
    Ok(())
}

/// The 2-cocycle ε: on basis vectors
/// ε(e_i, e_j) = (−1)^{B_ij + B_ii B_jj} for i ≥ j and 1 for i < j,
/// extended bimultiplicatively to all of L × L.
pub fn epsilon(lat: &IntegralLattice, a: &[i64], b: &[i64]) -> Result<i32> {
    check_dim(lat, a.len())?;
    check_dim(lat, b.len())?;
    if !lat.validate().integral {
        return Err(Error::NotIntegral);
    }
    let odd = |x: &Q| x.numer().is_odd();
    let mut parity = false;
    for i in 0..lat.rank() {
        if a[i] % 2 == 0 {
            continue;
        }
        for j in 0..=i {
            if b[j] % 2 == 0 {
                continue;
            }
            let bit = odd(&lat.gram()[i][j]) ^ (odd(&lat.gram()[i][i]) && odd(&lat.gram()[j][j]));
            parity ^= bit;
        }
    }
    Ok(if parity { -1 } else { 1 })
}

/// η and C on pairs (α, h) with α ∈ L and h in the dual:
/// η = −B(α₁,α₂) − B(α₁,h₂) − B(α₂,h₁), and C = (−1)^{B(α₁,h₂) − B(α₂,h₁)}
/// whenever that exponent is an integer.
pub fn eta_c(
    lat: &IntegralLattice,
    pair1: (&[i64], &[Q]),
    pair2: (&[i64], &[Q]),
) -> Result<(Q, i32)> {
    let (a1, h1) = pair1;
    let (a2, h2) = pair2;
    let aq1: Vec<Q> = a1.iter().map(|&v| qz(v)).collect();
    let aq2: Vec<Q> = a2.iter().map(|&v| qz(v)).collect();
    let b12 = lat.pairing(&aq1, &aq2)?;
    let b1h2 = lat.pairing(&aq1, h2)?;
    let b2h1 = lat.pairing(&aq2, h1)?;
    let eta = -(&b12 + &b1h2 + &b2h1);
    let exponent = &b1h2 - &b2h1;
    if !ratio::is_integer(&exponent) {
        return Err(Error::TwistedPhase {
            exponent: q_str(&exponent),
        });
    }
    let c = if exponent.numer().is_odd() { -1 } else { 1 };
    Ok((eta, c))
}

/// Whether v lies in the dual P° = {h : B(h, α_i) ∈ Z for all i}.
pub fn dual_membership(lat: &IntegralLattice, v: &[Q]) -> Result<bool> {
    check_dim(lat, v.len())?;
    let n = lat.rank();
    for i in 0..n {
        let mut acc = Q::zero();
        for j in 0..n {
            acc += &lat.gram()[i][j] * &v[j];
        }
        if !ratio::is_integer(&acc) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Σ_{β ∈ c+L} q^{B(β,β)/2} truncated at exponent `trunc`. Enumeration is
/// complete: positive-definiteness gives the exact coordinate box
/// |β_i| ≤ √(2N/λ) with λ = det(B)/M^{n−1} a lower bound on the smallest
/// eigenvalue (M = largest absolute row sum), all in integer arithmetic.
pub fn theta_coset(lat: &IntegralLattice, c: &CosetLabel, trunc: &Q) -> Result<CharSeries> {
    check_dim(lat, c.shift().len())?;
    let report = lat.validate();
    if !report.positive_definite {
        return Err(Error::NotPositiveDefinite);
    }
    let mut series = CharSeries::new(trunc.clone());
    if trunc.is_negative() {
        return Ok(series);
    }
    let n = lat.rank();
    let row_sum_bound = lat
        .gram()
        .iter()
        .map(|row| row.iter().map(|x| x.abs()).fold(Q::zero(), |a, b| a + b))
        .max()
        .unwrap();
    let det = ratio::mat::det(lat.gram());
    let mut lambda_min = det;
    for _ in 1..n {
        lambda_min = lambda_min / &row_sum_bound;
    }
    let radius_sq = qz(2) * trunc / lambda_min;
    let radius: num_bigint::BigInt = floor_sqrt(&radius_sq) + 1;
    let mut lo = Vec::with_capacity(n);
    let mut hi = Vec::with_capacity(n);
    for ci in c.shift() {
        let neg = -ci.clone();
        let lo_b = ceil_int(&neg) - radius.clone();
        let hi_b = floor_int(&neg) + radius.clone();
        lo.push(i64::try_from(lo_b).expect("theta window too large"));
        hi.push(i64::try_from(hi_b).expect("theta window too large"));
    }
    let mut x = lo.clone();
    let mut terms: Vec<(Q, u64)> = Vec::new();
    'outer: loop {
        let beta: Vec<Q> = (0..n).map(|i| qz(x[i]) + &c.shift()[i]).collect();
        let exponent = ratio::mat::pair(lat.gram(), &beta, &beta) / qz(2);
        if exponent <= *trunc {
            terms.push((exponent, 1));
        }
        for i in 0..n {
            if x[i] < hi[i] {
                x[i] += 1;
                continue 'outer;
            }
            x[i] = lo[i];
        }
        break;
    }
    series = CharSeries::from_terms(trunc.clone(), terms);
    Ok(series)
}
