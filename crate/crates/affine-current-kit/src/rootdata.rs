//! Root-system data for the simple Lie types A through G: Cartan matrices,
//! root norms, marks, fundamental coweights, the center P_vee/Q_vee, and the
//! Weyl dimension formula. E-type nodes follow the Kac numbering.
//!
//! Conventions. The invariant form is normalized so long roots have
//! <a,a> = 2. The Cartan matrix is C[i][j] = alpha_i(alpha_j_vee)
//! = 2<alpha_i,alpha_j>/<alpha_j,alpha_j>. Fundamental weights satisfy
//! lambda_i = sum_j a_ij alpha_j with a = C^{-1} (`weight_coeffs`), and the
//! fundamental coweights are h^(i) = sum_j a_ji alpha_j_vee. Node indices in
//! the public API are 1-based, matching the usual diagram labels.

use crate::ratio::{self, mat, qz, Q};
use crate::{Error, Result};
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        match c.to_ascii_uppercase() {
            'A' => Some(Family::A),
            'B' => Some(Family::B),
            'C' => Some(Family::C),
            'D' => Some(Family::D),
            'E' => Some(Family::E),
            'F' => Some(Family::F),
            'G' => Some(Family::G),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LieType {
    family: Family,
    rank: usize,
}

impl LieType {
    /// Rank bounds: A >= 1, B >= 2, C >= 2, D >= 3, E in {6,7,8}, F = 4,
    /// G = 2. B_1 and C_1 coincide with A_1 and are rejected rather than
    /// silently aliased.
    pub fn new(family: Family, rank: usize) -> Result<LieType> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(LieType { family, rank })
        } else {
            Err(Error::InvalidRank {
                family: family.letter(),
                rank,
            })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

impl std::fmt::Display for LieType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// Dynkin labels lambda(alpha_i_vee), all nonnegative.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DominantWeight {
    labels: Vec<i64>,
}

impl DominantWeight {
    pub fn new(labels: Vec<i64>) -> Result<DominantWeight> {
        if labels.iter().any(|&m| m < 0) {
            return Err(Error::Invalid("Dynkin labels must be nonnegative".into()));
        }
        Ok(DominantWeight { labels })
    }

    pub fn zero(rank: usize) -> DominantWeight {
        DominantWeight {
            labels: vec![0; rank],
        }
    }

    /// k lambda_i (1-based node index).
    pub fn multiple_of_fundamental(rank: usize, i: usize, k: i64) -> Result<DominantWeight> {
        if i < 1 || i > rank {
            return Err(Error::IndexOutOfRange { index: i, rank });
        }
        let mut labels = vec![0; rank];
        labels[i - 1] = k;
        DominantWeight::new(labels)
    }

    pub fn labels(&self) -> &[i64] {
        &self.labels
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn is_zero(&self) -> bool {
        self.labels.iter().all(|&m| m == 0)
    }
}

impl std::fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.labels.iter().map(|m| m.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Element of the coweight space in simple-coroot coordinates:
/// h = sum_j coords[j] alpha_{j+1}_vee.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoweightVector {
    pub coords: Vec<Q>,
}

impl CoweightVector {
    pub fn zero(rank: usize) -> CoweightVector {
        CoweightVector {
            coords: vec![Q::zero(); rank],
        }
    }

    pub fn add_scaled(&mut self, other: &CoweightVector, c: &Q) {
        assert_eq!(self.coords.len(), other.coords.len());
        for (a, b) in self.coords.iter_mut().zip(&other.coords) {
            *a += c * b;
        }
    }

    /// True when the vector lies in the coroot lattice Q_vee.
    pub fn in_coroot_lattice(&self) -> bool {
        self.coords.iter().all(ratio::is_integer)
    }
}

/// Presentation of the center P_vee/Q_vee: cyclic factor orders, a coweight
/// node generating each factor, and the expression of every cominimal
/// coweight class in generator exponents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CenterGroup {
    /// Orders of the cyclic factors; empty for the trivial group.
    pub invariants: Vec<u64>,
    /// 1-based node index whose coweight generates each factor.
    pub generators: Vec<usize>,
    /// (node i, exponents e) with h^(i) = sum_t e_t h^(gen_t) mod Q_vee,
    /// one entry per cominimal node, sorted by node.
    pub expressions: Vec<(usize, Vec<u64>)>,
}

impl CenterGroup {
    pub fn order(&self) -> u64 {
        self.invariants.iter().product()
    }
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    pub lie_type: LieType,
    /// C[i][j] = alpha_i(alpha_j_vee).
    pub cartan: Vec<Vec<i64>>,
    /// <alpha_i, alpha_i>, long roots normalized to 2.
    pub root_norms: Vec<Q>,
    /// theta = sum a_i alpha_i.
    pub marks: Vec<i64>,
    pub dual_coxeter: i64,
    /// a[i][j] with lambda_i = sum_j a_ij alpha_j; equals C^{-1}.
    pub weight_coeffs: Vec<Vec<Q>>,
    /// Positive roots in simple-root coordinates, by increasing height.
    pos_roots: Vec<Vec<i64>>,
}

fn diagram(lt: LieType) -> (Vec<(usize, usize)>, Vec<Q>, Vec<i64>) {
    let n = lt.rank();
    let path = |m: usize| -> Vec<(usize, usize)> { (0..m).map(|i| (i, i + 1)).collect() };
    match lt.family() {
        Family::A => (path(n - 1), vec![qz(2); n], vec![1; n]),
        Family::B => {
            let mut norms = vec![qz(2); n - 1];
            norms.push(qz(1));
            let mut marks = vec![2; n];
            marks[0] = 1;
            (path(n - 1), norms, marks)
        }
        Family::C => {
            let mut norms = vec![qz(1); n - 1];
            norms.push(qz(2));
            let mut marks = vec![2; n];
            marks[n - 1] = 1;
            (path(n - 1), norms, marks)
        }
        Family::D => {
            // Nodes 1..n-2 form a path; n-1 and n both hang off node n-2.
            let mut edges = path(n - 3);
            edges.push((n - 3, n - 2));
            edges.push((n - 3, n - 1));
            let mut marks = vec![2; n];
            marks[0] = 1;
            marks[n - 2] = 1;
            marks[n - 1] = 1;
            (edges, vec![qz(2); n], marks)
        }
        Family::E => match n {
            // Kac numbering: the path carries nodes 1..n-1 and the last node
            // hangs off the branch point.
            6 => (
                vec![(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)],
                vec![qz(2); 6],
                vec![1, 2, 3, 2, 1, 2],
            ),
            7 => (
                vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (2, 6)],
                vec![qz(2); 7],
                vec![2, 3, 4, 3, 2, 1, 2],
            ),
            8 => (
                vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7)],
                vec![qz(2); 8],
                vec![2, 3, 4, 5, 6, 4, 2, 3],
            ),
            _ => unreachable!(),
        },
        Family::F => (
            path(3),
            vec![qz(2), qz(2), qz(1), qz(1)],
            vec![2, 3, 4, 2],
        ),
        Family::G => (path(1), vec![qz(2), Q::new(2.into(), 3.into())], vec![2, 3]),
    }
}

pub fn build_root_system(lt: LieType) -> RootSystem {
    let n = lt.rank();
    let (edges, norms, marks) = diagram(lt);
    // Symmetric form <alpha_i, alpha_j>: diagonal from norms; a Dynkin edge
    // contributes -max(n_a, n_b)/2 so that the shorter root's Cartan entry
    // absorbs the bond multiplicity.
    let mut sym = vec![vec![Q::zero(); n]; n];
    for i in 0..n {
        sym[i][i] = norms[i].clone();
    }
    for &(a, b) in &edges {
        let off = -norms[a].clone().max(norms[b].clone()) / qz(2);
        sym[a][b] = off.clone();
        sym[b][a] = off;
    }
    let mut cartan = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let c = qz(2) * &sym[i][j] / &norms[j];
            assert!(ratio::is_integer(&c), "Cartan entry must be an integer");
            cartan[i][j] = c.numer().to_i64().unwrap();
        }
    }
    let cartan_q: Vec<Vec<Q>> = cartan
        .iter()
        .map(|row| row.iter().map(|&v| qz(v)).collect())
        .collect();
    let weight_coeffs = mat::inverse(&cartan_q);
    let hv = {
        let mut acc = qz(1);
        for i in 0..n {
            acc += qz(marks[i]) * &norms[i] / qz(2);
        }
        assert!(ratio::is_integer(&acc));
        acc.numer().to_i64().unwrap()
    };
    let pos_roots = positive_roots(&cartan);
    let rs = RootSystem {
        lie_type: lt,
        cartan,
        root_norms: norms,
        marks,
        dual_coxeter: hv,
        weight_coeffs,
        pos_roots,
    };
    debug_assert!(rs.marks_match_theta());
    rs
}

/// Positive roots by height: beta + alpha_i is a root iff the alpha_i-string
/// through beta still ascends, i.e. (number of descents) - <beta, alpha_i_vee> > 0.
fn positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let mut roots: Vec<Vec<i64>> = Vec::new();
    let mut seen: std::collections::HashSet<Vec<i64>> = std::collections::HashSet::new();
    for i in 0..n {
        let mut e = vec![0i64; n];
        e[i] = 1;
        seen.insert(e.clone());
        roots.push(e);
    }
    let mut frontier: Vec<Vec<i64>> = roots.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for beta in &frontier {
            for i in 0..n {
                let pairing: i64 = (0..n).map(|j| beta[j] * cartan[j][i]).sum();
                let mut p = 0i64;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if down.iter().any(|&c| c < 0) || down.iter().all(|&c| c == 0) {
                        break;
                    }
                    if !seen.contains(&down) {
                        break;
                    }
                    p += 1;
                }
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if seen.insert(up.clone()) {
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

impl RootSystem {
    pub fn rank(&self) -> usize {
        self.lie_type.rank()
    }

    fn marks_match_theta(&self) -> bool {
        // theta is the highest root: theta + alpha_i is never a root, which
        // for the highest root reduces to theta(alpha_j_vee) >= 0 everywhere
        // and theta being a root of maximal height.
        let n = self.rank();
        let theta: Vec<i64> = self.marks.clone();
        let max_height = self.pos_roots.iter().map(|r| r.iter().sum::<i64>()).max();
        self.pos_roots.contains(&theta)
            && max_height == Some(theta.iter().sum())
            && (0..n).all(|j| (0..n).map(|i| theta[i] * self.cartan[i][j]).sum::<i64>() >= 0)
    }

    /// h^(i) = sum_j a_ji alpha_j_vee (1-based i).
    pub fn fundamental_coweight(&self, i: usize) -> Result<CoweightVector> {
        let n = self.rank();
        if i < 1 || i > n {
            return Err(Error::IndexOutOfRange { index: i, rank: n });
        }
        Ok(CoweightVector {
            coords: (0..n).map(|j| self.weight_coeffs[j][i - 1].clone()).collect(),
        })
    }

    /// alpha_j(h) for h in coroot coordinates (1-based j).
    pub fn root_pairing(&self, j: usize, h: &CoweightVector) -> Result<Q> {
        let n = self.rank();
        if j < 1 || j > n {
            return Err(Error::IndexOutOfRange { index: j, rank: n });
        }
        if h.coords.len() != n {
            return Err(Error::DimensionMismatch {
                left: h.coords.len(),
                right: n,
            });
        }
        Ok((0..n)
            .map(|t| &h.coords[t] * qz(self.cartan[j - 1][t]))
            .sum())
    }

    /// lambda(h) for a weight given by Dynkin labels and h in coroot
    /// coordinates: sum_j coords[j] * labels[j].
    pub fn weight_coweight_pairing(&self, lambda: &DominantWeight, h: &CoweightVector) -> Result<Q> {
        let n = self.rank();
        if lambda.rank() != n || h.coords.len() != n {
            return Err(Error::DimensionMismatch {
                left: lambda.rank(),
                right: h.coords.len(),
            });
        }
        Ok((0..n)
            .map(|j| qz(lambda.labels()[j]) * &h.coords[j])
            .sum())
    }

    /// <x, y> of the normalized invariant form on coweights;
    /// <alpha_i_vee, alpha_j_vee> = 2 C_ij / <alpha_i, alpha_i>.
    pub fn bilinear(&self, x: &CoweightVector, y: &CoweightVector) -> Result<Q> {
        let n = self.rank();
        if x.coords.len() != n || y.coords.len() != n {
            return Err(Error::DimensionMismatch {
                left: x.coords.len(),
                right: y.coords.len(),
            });
        }
        let mut acc = Q::zero();
        for i in 0..n {
            if x.coords[i].is_zero() {
                continue;
            }
            for j in 0..n {
                acc += &x.coords[i]
                    * &y.coords[j]
                    * (qz(2 * self.cartan[i][j]) / &self.root_norms[i]);
            }
        }
        Ok(acc)
    }

    /// {i : a_i = 1}, 1-based, sorted.
    pub fn cominimal_indices(&self) -> Vec<usize> {
        (0..self.rank())
            .filter(|&i| self.marks[i] == 1)
            .map(|i| i + 1)
            .collect()
    }

    /// Comarks a_i_vee = a_i <alpha_i,alpha_i>/2; always integers, and
    /// h_vee = 1 + sum a_i_vee.
    pub fn comarks(&self) -> Vec<i64> {
        (0..self.rank())
            .map(|i| {
                let c = qz(self.marks[i]) * &self.root_norms[i] / qz(2);
                assert!(ratio::is_integer(&c));
                c.numer().to_i64().unwrap()
            })
            .collect()
    }

    /// <lambda, theta> = sum a_i_vee lambda_i, the level pairing.
    pub fn theta_pairing(&self, lambda: &DominantWeight) -> i64 {
        self.comarks()
            .iter()
            .zip(lambda.labels())
            .map(|(a, m)| a * m)
            .sum()
    }

    pub fn center_group(&self) -> CenterGroup {
        let n = self.rank();
        let (invariants, generators, expressions): (Vec<u64>, Vec<usize>, Vec<(usize, Vec<u64>)>) =
            match self.lie_type.family() {
                Family::A => (
                    vec![(n + 1) as u64],
                    vec![1],
                    (1..=n).map(|m| (m, vec![m as u64])).collect(),
                ),
                Family::B => (vec![2], vec![1], vec![(1, vec![1])]),
                Family::C => (vec![2], vec![n], vec![(n, vec![1])]),
                Family::D if n % 2 == 1 => (
                    vec![4],
                    vec![n],
                    vec![(1, vec![2]), (n - 1, vec![3]), (n, vec![1])],
                ),
                Family::D => (
                    vec![2, 2],
                    vec![n - 1, n],
                    vec![(1, vec![1, 1]), (n - 1, vec![1, 0]), (n, vec![0, 1])],
                ),
                Family::E if n == 6 => (vec![3], vec![1], vec![(1, vec![1]), (5, vec![2])]),
                Family::E if n == 7 => (vec![2], vec![6], vec![(6, vec![1])]),
                _ => (vec![], vec![], vec![]),
            };
        CenterGroup {
            invariants,
            generators,
            expressions,
        }
    }

    /// dim L(lambda) by the Weyl product over positive roots.
    pub fn weyl_dim(&self, lambda: &DominantWeight) -> Result<u128> {
        let n = self.rank();
        if lambda.rank() != n {
            return Err(Error::DimensionMismatch {
                left: lambda.rank(),
                right: n,
            });
        }
        // <mu + rho, alpha> = sum_i coords_i(alpha) * (mu_i + 1) * <alpha_i,alpha_i>/2
        let mut value = Q::one();
        for alpha in &self.pos_roots {
            let mut num = Q::zero();
            let mut den = Q::zero();
            for i in 0..n {
                if alpha[i] == 0 {
                    continue;
                }
                let s = qz(alpha[i]) * &self.root_norms[i] / qz(2);
                num += &s * qz(lambda.labels()[i] + 1);
                den += s;
            }
            value *= num / den;
        }
        assert!(ratio::is_integer(&value) && value.is_positive());
        Ok(value.numer().to_u128().expect("dimension fits in u128"))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "family": self.lie_type.family().letter().to_string(),
            "rank": self.rank(),
            "cartan": self.cartan,
            "marks": self.marks,
            "dual_coxeter": self.dual_coxeter,
            "root_norms": crate::jsonio::qvec_json(&self.root_norms),
            "weight_coeffs": crate::jsonio::qmat_json(&self.weight_coeffs),
        })
    }
}
