//! Freudenthal's recursion for finite-type weight multiplicities, plus the
//! orbit-size bookkeeping needed to turn multiplicities into dimensions.
//!
//! This is the oracle against which the library's Weyl-product dimensions are
//! checked, so it shares no code with the library: Cartan data comes in as a
//! raw matrix, the inverse Cartan and the positive roots are recomputed here,
//! and dim L(lambda) is assembled as
//!
//!   dim = sum over dominant weights mu of  m(mu) * |W| / |W_mu|,
//!
//! with m(mu) from Freudenthal's formula
//!
//!   (|lambda+rho|^2 - |mu+rho|^2) m(mu)
//!       = 2 sum_{alpha > 0} sum_{t >= 1} m(mu + t alpha) <mu + t alpha, alpha>
//!
//! and |W_mu| the parabolic Weyl order for the nodes where mu vanishes,
//! evaluated by classifying the induced subdiagram.

use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::HashMap;

pub const MAX_RANK: usize = 8;
type Key = [i64; MAX_RANK];

/// Raw root data: Cartan matrix C[i][j] = alpha_i(alpha_j^vee) and the root
/// norms <alpha_i, alpha_i> in the normalization where long roots have norm 2.
pub struct RootDataRaw {
    pub cartan: Vec<Vec<i64>>,
    pub norms: Vec<BigRational>,
}

fn key_of(labels: &[i64]) -> Key {
    let mut k = [0i64; MAX_RANK];
    k[..labels.len()].copy_from_slice(labels);
    k
}

impl RootDataRaw {
    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    /// Positive roots in simple-root coordinates, generated height by height
    /// from the root strings: beta + alpha_i is a root iff the alpha_i-string
    /// through beta extends upward, i.e. p - <beta, alpha_i^vee> > 0 with p
    /// the number of steps the string descends.
    pub fn positive_roots(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        let mut roots: Vec<Vec<i64>> = Vec::new();
        let mut seen: HashMap<Key, ()> = HashMap::new();
        for i in 0..n {
            let mut e = vec![0i64; n];
            e[i] = 1;
            seen.insert(key_of(&e), ());
            roots.push(e);
        }
        let mut frontier = roots.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for beta in &frontier {
                for i in 0..n {
                    let pairing: i64 = (0..n).map(|j| beta[j] * self.cartan[j][i]).sum();
                    let mut p = 0i64;
                    let mut down = beta.clone();
                    loop {
                        down[i] -= 1;
                        if down.iter().all(|&c| c == 0) || down.iter().any(|&c| c < 0) {
                            break;
                        }
                        if !seen.contains_key(&key_of(&down)) {
                            break;
                        }
                        p += 1;
                    }
                    if p - pairing > 0 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        if seen.insert(key_of(&up), ()).is_none() {
                            roots.push(up.clone());
                            next.push(up);
                        }
                    }
                }
            }
            frontier = next;
        }
        roots
    }

    /// Inverse Cartan: row i gives the simple-root coordinates of the i-th
    /// fundamental weight.
    pub fn inverse_cartan(&self) -> Vec<Vec<BigRational>> {
        let n = self.rank();
        let mut m: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| BigRational::from_integer(self.cartan[i][j].into()))
                    .collect()
            })
            .collect();
        let mut inv: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            BigRational::one()
                        } else {
                            BigRational::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        for col in 0..n {
            let p = (col..n).find(|&r| !m[r][col].is_zero()).unwrap();
            m.swap(p, col);
            inv.swap(p, col);
            let piv = m[col][col].clone();
            for c in 0..n {
                m[col][c] = &m[col][c] / &piv;
                inv[col][c] = &inv[col][c] / &piv;
            }
            for r in 0..n {
                if r != col && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for c in 0..n {
                        let s = &f * &m[col][c];
                        m[r][c] = &m[r][c] - &s;
                        let s = &f * &inv[col][c];
                        inv[r][c] = &inv[r][c] - &s;
                    }
                }
            }
        }
        inv
    }
}

/// Scaled integer pairing data: D * <lambda_i, lambda_j>, D * <alpha_i, .>
/// with a single common denominator D so the recursion runs in i128.
struct Scaled {
    rank: usize,
    /// D * <lambda_i, lambda_j>
    wgram: Vec<Vec<i128>>,
    /// D * norms[i] / 2 (so D * <mu, alpha_i> = label_i * half_norm[i])
    half_norm: Vec<i128>,
    pos_roots: Vec<Vec<i64>>,
    cartan: Vec<Vec<i64>>,
    inv_cartan: Vec<Vec<BigRational>>,
}

fn scaled(rd: &RootDataRaw) -> Scaled {
    let n = rd.rank();
    let inv = rd.inverse_cartan();
    // <lambda_i, lambda_j> = a_{ji} * norms[i] / 2 where a = inverse Cartan.
    let wgram_q: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| &inv[j][i] * &rd.norms[i] / BigRational::from_integer(2.into()))
                .collect()
        })
        .collect();
    let half_q: Vec<BigRational> = (0..n)
        .map(|i| &rd.norms[i] / BigRational::from_integer(2.into()))
        .collect();
    let mut d = num_bigint::BigInt::from(1);
    for row in &wgram_q {
        for v in row {
            d = num_integer::lcm(d, v.denom().clone());
        }
    }
    for v in &half_q {
        d = num_integer::lcm(d, v.denom().clone());
    }
    let to_int = |v: &BigRational| -> i128 {
        let scaled = v * BigRational::from_integer(d.clone());
        assert!(scaled.denom().is_one());
        scaled.numer().to_i128().unwrap()
    };
    Scaled {
        rank: n,
        wgram: wgram_q.iter().map(|r| r.iter().map(to_int).collect()).collect(),
        half_norm: half_q.iter().map(to_int).collect(),
        pos_roots: rd.positive_roots(),
        cartan: rd.cartan.clone(),
        inv_cartan: inv,
    }
}

impl Scaled {
    /// D * <mu, nu> for label vectors.
    fn wpair(&self, a: &[i64], b: &[i64]) -> i128 {
        let mut acc = 0i128;
        for i in 0..self.rank {
            if a[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                acc += a[i] as i128 * b[j] as i128 * self.wgram[i][j];
            }
        }
        acc
    }

    /// D * <mu, alpha> for a label vector and a root in simple coordinates.
    fn wroot(&self, labels: &[i64], root: &[i64]) -> i128 {
        (0..self.rank)
            .map(|i| labels[i] as i128 * root[i] as i128 * self.half_norm[i])
            .sum()
    }

    /// Simple-root coordinates of a weight given by labels (rational).
    fn root_coords(&self, labels: &[i64]) -> Vec<BigRational> {
        (0..self.rank)
            .map(|c| {
                (0..self.rank)
                    .map(|i| {
                        BigRational::from_integer(labels[i].into()) * &self.inv_cartan[i][c]
                    })
                    .sum()
            })
            .collect()
    }

    fn dominantize(&self, labels: &mut [i64]) {
        loop {
            let Some(i) = (0..self.rank).find(|&i| labels[i] < 0) else {
                return;
            };
            let mi = labels[i];
            for j in 0..self.rank {
                labels[j] -= mi * self.cartan[i][j];
            }
        }
    }
}

/// All dominant weights mu with lambda - mu a nonnegative integer root
/// combination, by pruned search over label vectors (the simple-root
/// coordinates of any dominant weight are componentwise positive, so partial
/// label sums bound the search).
fn dominant_weights(s: &Scaled, lambda: &[i64]) -> Vec<Vec<i64>> {
    let n = s.rank;
    let target = s.root_coords(lambda);
    let mut out = Vec::new();
    let mut labels = vec![0i64; n];
    // coords accumulated so far (labels[0..t] fixed)
    fn rec(
        s: &Scaled,
        target: &[BigRational],
        labels: &mut Vec<i64>,
        t: usize,
        acc: &Vec<BigRational>,
        out: &mut Vec<Vec<i64>>,
    ) {
        let n = s.rank;
        if t == n {
            // lambda - mu must be a nonnegative integer combination.
            let ok = (0..n).all(|c| {
                let diff = &target[c] - &acc[c];
                !diff.is_negative() && diff.denom().is_one()
            });
            if ok {
                out.push(labels.clone());
            }
            return;
        }
        let mut m = 0i64;
        loop {
            labels[t] = m;
            let mut next = acc.clone();
            let mut feasible = true;
            for c in 0..n {
                next[c] += BigRational::from_integer(m.into()) * &s.inv_cartan[t][c];
                if next[c] > target[c] {
                    feasible = false;
                }
            }
            if !feasible {
                labels[t] = 0;
                return;
            }
            rec(s, target, labels, t + 1, &next, out);
            m += 1;
        }
    }
    let acc = vec![BigRational::zero(); n];
    rec(s, &target, &mut labels, 0, &acc, &mut out);
    out
}

/// Weight multiplicities of L(lambda), keyed by dominant label vector.
pub fn multiplicities(rd: &RootDataRaw, lambda: &[i64]) -> HashMap<Vec<i64>, u64> {
    let s = scaled(rd);
    let n = s.rank;
    let doms = dominant_weights(&s, lambda);
    // Height of lambda - mu orders the recursion from the top down.
    let lam_coords = s.root_coords(lambda);
    let mut by_depth: Vec<(BigRational, Vec<i64>)> = doms
        .into_iter()
        .map(|mu| {
            let c = s.root_coords(&mu);
            let h: BigRational = (0..n).map(|t| &lam_coords[t] - &c[t]).sum();
            (h, mu)
        })
        .collect();
    by_depth.sort();

    let rho: Vec<i64> = vec![1; n];
    let lam_rho: Vec<i64> = (0..n).map(|i| lambda[i] + 1).collect();
    let top_norm = s.wpair(&lam_rho, &lam_rho);

    let mut mult: HashMap<Key, u64> = HashMap::new();
    for (_h, mu) in by_depth {
        if mu == lambda {
            mult.insert(key_of(&mu), 1);
            continue;
        }
        let mu_rho: Vec<i64> = (0..n).map(|i| mu[i] + rho[i]).collect();
        let factor = top_norm - s.wpair(&mu_rho, &mu_rho);
        assert!(factor > 0, "Freudenthal factor must be positive below lambda");
        let mut rhs: i128 = 0;
        let diff = s.root_coords(&mu);
        let residual: Vec<BigRational> = (0..n).map(|c| &lam_coords[c] - &diff[c]).collect();
        for alpha in &s.pos_roots {
            // walk mu + t*alpha while it stays under lambda
            let mut rem = residual.clone();
            let mut labels: Vec<i64> = mu.clone();
            let alpha_labels: Vec<i64> = (0..n)
                .map(|j| (0..n).map(|i| alpha[i] * s.cartan[i][j]).sum())
                .collect();
            loop {
                let mut inside = true;
                for c in 0..n {
                    rem[c] -= BigRational::from_integer(alpha[c].into());
                    if rem[c].is_negative() {
                        inside = false;
                    }
                }
                if !inside {
                    break;
                }
                for j in 0..n {
                    labels[j] += alpha_labels[j];
                }
                let mut dom = labels.clone();
                s.dominantize(&mut dom);
                let Some(&m) = mult.get(&key_of(&dom)) else {
                    continue;
                };
                rhs += m as i128 * s.wroot(&labels, alpha);
            }
        }
        let value = 2 * rhs / factor;
        assert_eq!(2 * rhs % factor, 0, "Freudenthal division must be exact");
        assert!(value >= 0);
        if value > 0 {
            mult.insert(key_of(&mu), value as u64);
        }
    }
    mult
        .into_iter()
        .map(|(k, v)| (k[..n].to_vec(), v))
        .collect()
}

// ---- Weyl group orders for orbit sizes ----------------------------------

fn factorial(n: u64) -> u128 {
    (1..=n as u128).product::<u128>().max(1)
}

/// Order of the Weyl group of a connected diagram given by its Cartan matrix,
/// classified by edge multiplicities and branch structure.
fn connected_weyl_order(c: &[Vec<i64>]) -> u128 {
    let t = c.len() as u64;
    let n = c.len();
    let mut max_mult = 1i64;
    let mut double_edge: Option<(usize, usize)> = None;
    for i in 0..n {
        for j in i + 1..n {
            let m = c[i][j] * c[j][i];
            if m > max_mult {
                max_mult = m;
            }
            if m == 2 {
                double_edge = Some((i, j));
            }
        }
    }
    if max_mult >= 3 {
        return 12; // G2
    }
    if max_mult == 2 {
        let (a, b) = double_edge.unwrap();
        let degree = |v: usize| (0..n).filter(|&j| j != v && c[v][j] != 0).count();
        // F4 iff both ends of the double edge have further neighbors.
        if t == 4 && degree(a) == 2 && degree(b) == 2 {
            return 1152;
        }
        return 2u128.pow(t as u32) * factorial(t); // B_t / C_t
    }
    // Simply laced: look for a branch node.
    let branch = (0..n).find(|&v| (0..n).filter(|&j| j != v && c[v][j] != 0).count() >= 3);
    match branch {
        None => factorial(t + 1), // A_t
        Some(v) => {
            // Arm lengths from the branch node.
            let mut arms: Vec<u64> = Vec::new();
            for s in (0..n).filter(|&j| j != v && c[v][j] != 0) {
                let mut len = 1u64;
                let mut prev = v;
                let mut cur = s;
                loop {
                    let next = (0..n).find(|&j| j != prev && j != cur && c[cur][j] != 0);
                    match next {
                        Some(nx) => {
                            prev = cur;
                            cur = nx;
                            len += 1;
                        }
                        None => break,
                    }
                }
                arms.push(len);
            }
            arms.sort();
            match arms.as_slice() {
                [1, 1, _] => 2u128.pow(t as u32 - 1) * factorial(t), // D_t
                [1, 2, 2] => 51_840,                                  // E6
                [1, 2, 3] => 2_903_040,                               // E7
                [1, 2, 4] => 696_729_600,                             // E8
                other => panic!("unrecognized simply-laced diagram arms {other:?}"),
            }
        }
    }
}

/// |W| / |W_mu|: the Weyl orbit size of a dominant weight, from the parabolic
/// subgroup generated by the simple reflections fixing mu.
pub fn orbit_size(rd: &RootDataRaw, mu: &[i64]) -> u128 {
    let n = rd.rank();
    let full: Vec<usize> = (0..n).collect();
    let zero: Vec<usize> = (0..n).filter(|&i| mu[i] == 0).collect();
    let order_of = |nodes: &[usize]| -> u128 {
        // split into connected components
        let mut remaining: Vec<usize> = nodes.to_vec();
        let mut total: u128 = 1;
        while let Some(start) = remaining.pop() {
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                let mut keep = Vec::new();
                for &u in &remaining {
                    if rd.cartan[v][u] != 0 {
                        comp.push(u);
                        stack.push(u);
                    } else {
                        keep.push(u);
                    }
                }
                remaining = keep;
            }
            comp.sort();
            let sub: Vec<Vec<i64>> = comp
                .iter()
                .map(|&i| comp.iter().map(|&j| rd.cartan[i][j]).collect())
                .collect();
            total *= connected_weyl_order(&sub);
        }
        total
    };
    order_of(&full) / order_of(&zero)
}

/// dim L(lambda) by Freudenthal multiplicities and orbit counting.
pub fn dimension(rd: &RootDataRaw, lambda: &[i64]) -> u128 {
    multiplicities(rd, lambda)
        .iter()
        .map(|(mu, &m)| m as u128 * orbit_size(rd, mu))
        .sum()
}
