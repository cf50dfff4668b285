//! Construction data for the extension A_k(g) = V[L] of
//! V = L_g(k,0) (x) M_h'(1,0): the Heisenberg Gram matrix <alpha'_s,alpha'_t>,
//! generators alpha_s = h''_s + alpha'_s over cominimal nodes, and the
//! combined form B(alpha_s,alpha_t) = k<h''_s,h''_t> + <alpha'_s,alpha'_t>.
//!
//! Types E8, F4 and G2 have trivial center and no extension is built for
//! them. Type B_n enters with an empty Heisenberg part, L = Z h^(1).

use crate::fusion::{conformal_weight, simple_current_group, SimpleCurrentElement, SimpleCurrentGroup};
use crate::jsonio::{qmat_json, qvec_json};
use crate::lattice::IntegralLattice;
use crate::ratio::{is_integer, mat, q_str, qq, qz, Q};
use crate::rootdata::{CoweightVector, Family, RootSystem};
use crate::{Error, Result};
use num_traits::{Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

/// One lattice generator alpha = h'' + alpha'. `node` is the 1-based
/// cominimal node with h'' = h^(node); `heis_index` points into the alpha'
/// basis and is None when the Heisenberg part is absent.
#[derive(Debug, Clone)]
pub struct ExtGenerator {
    pub node: usize,
    pub coweight: CoweightVector,
    pub heis_index: Option<usize>,
}

#[derive(Debug, Clone)]
pub struct ExtensionData {
    rs: RootSystem,
    level: i64,
    heis_gram: Vec<Vec<Q>>,
    generators: Vec<ExtGenerator>,
    big_lattice: IntegralLattice,
}

/// Default Heisenberg Gram matrix and generator nodes per type:
///
///   A_n:      <a',a'> = k/(n+1),            alpha = h^(1) + a'
///   B_n:      no Heisenberg part,           L = Z h^(1)
///   C_n:      <a',a'> = nk/2,               alpha = h^(n) + a'
///   D_n odd:  <a',a'> = 3nk/4,              alpha = h^(n) + a'
///   D_n even: diag 3nk/4, off (n-2)k/4,     alpha_1 = h^(n-1) + a'_1,
///                                           alpha_2 = h^(n) + a'_2
///   E6:       <a',a'> = 2k/3,               alpha = h^(1) + a'
///   E7:       <a',a'> = k/2,                alpha = h^(6) + a'
fn heis_data(rs: &RootSystem, k: i64) -> Result<(Vec<Vec<Q>>, Vec<(usize, Option<usize>)>)> {
    let family = rs.lie_type.family();
    let n = rs.lie_type.rank();
    let nk = qz(n as i64) * qz(k);
    match (family, n) {
        (Family::A, _) => Ok((vec![vec![qz(k) / qz(n as i64 + 1)]], vec![(1, Some(0))])),
        (Family::B, _) => Ok((Vec::new(), vec![(1, None)])),
        (Family::C, _) => Ok((vec![vec![&nk / qz(2)]], vec![(n, Some(0))])),
        (Family::D, _) if n % 2 == 1 => {
            Ok((vec![vec![&nk * qq(3, 4)]], vec![(n, Some(0))]))
        }
        (Family::D, _) => {
            let diag = &nk * qq(3, 4);
            let off = qz(n as i64 - 2) * qz(k) / qz(4);
            Ok((
                vec![vec![diag.clone(), off.clone()], vec![off, diag]],
                vec![(n - 1, Some(0)), (n, Some(1))],
            ))
        }
        (Family::E, 6) => Ok((vec![vec![qz(2) * qz(k) / qz(3)]], vec![(1, Some(0))])),
        (Family::E, 7) => Ok((vec![vec![qz(k) / qz(2)]], vec![(6, Some(0))])),
        _ => Err(Error::NoSimpleCurrent {
            family: family.letter(),
            rank: n,
        }),
    }
}

pub fn build_extension(rs: &RootSystem, k: i64) -> Result<ExtensionData> {
    let (gram, nodes) = heis_data(rs, k)?;
    assemble(rs, k, gram, nodes)
}

/// Same construction with the Heisenberg Gram matrix replaced; the shape
/// must match the type's default. The normalization of <a',a'> is a free
/// choice and alternatives are accepted here, with `check_hypotheses`
/// deciding whether the result still carries the (super)algebra structure.
pub fn build_extension_with_gram(
    rs: &RootSystem,
    k: i64,
    heis_gram: Vec<Vec<Q>>,
) -> Result<ExtensionData> {
    let (default_gram, nodes) = heis_data(rs, k)?;
    if heis_gram.len() != default_gram.len()
        || heis_gram.iter().any(|row| row.len() != default_gram.len())
    {
        return Err(Error::DimensionMismatch {
            left: heis_gram.len(),
            right: default_gram.len(),
        });
    }
    for i in 0..heis_gram.len() {
        for j in 0..i {
            if heis_gram[i][j] != heis_gram[j][i] {
                return Err(Error::Invalid("Heisenberg Gram matrix must be symmetric".into()));
            }
        }
    }
    assemble(rs, k, heis_gram, nodes)
}

fn assemble(
    rs: &RootSystem,
    k: i64,
    heis_gram: Vec<Vec<Q>>,
    nodes: Vec<(usize, Option<usize>)>,
) -> Result<ExtensionData> {
    if k < 1 {
        return Err(Error::Invalid(format!("level must be positive, got {k}")));
    }
    let mut generators = Vec::new();
    for &(node, heis_index) in &nodes {
        generators.push(ExtGenerator {
            node,
            coweight: rs.fundamental_coweight(node)?,
            heis_index,
        });
    }
    let g = generators.len();
    let mut big = vec![vec![Q::zero(); g]; g];
    for s in 0..g {
        for t in 0..g {
            let mut b = qz(k) * rs.bilinear(&generators[s].coweight, &generators[t].coweight)?;
            if let (Some(is), Some(it)) = (generators[s].heis_index, generators[t].heis_index) {
                b += &heis_gram[is][it];
            }
            big[s][t] = b;
        }
    }
    let names = if g == 1 {
        vec!["alpha".to_string()]
    } else {
        (1..=g).map(|s| format!("alpha_{s}")).collect()
    };
    let big_lattice = IntegralLattice::new(names, big)?;
    Ok(ExtensionData {
        rs: rs.clone(),
        level: k,
        heis_gram,
        generators,
        big_lattice,
    })
}

impl ExtensionData {
    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn level(&self) -> i64 {
        self.level
    }

    pub fn heis_dim(&self) -> usize {
        self.heis_gram.len()
    }

    pub fn heis_gram(&self) -> &[Vec<Q>] {
        &self.heis_gram
    }

    pub fn generators(&self) -> &[ExtGenerator] {
        &self.generators
    }

    pub fn big_lattice(&self) -> &IntegralLattice {
        &self.big_lattice
    }

    pub fn current_group(&self) -> SimpleCurrentGroup {
        simple_current_group(&self.rs, self.level)
    }

    /// The simple-current class of sum_s m_s alpha_s, read off the coweight
    /// parts.
    pub fn class_of(&self, m: &[i64]) -> Result<SimpleCurrentElement> {
        if m.len() != self.generators.len() {
            return Err(Error::DimensionMismatch {
                left: m.len(),
                right: self.generators.len(),
            });
        }
        let group = self.current_group();
        let mut elem = group.identity();
        for (g, &c) in self.generators.iter().zip(m) {
            let gen = group.from_node(g.node)?;
            let order = group.order_of(&gen);
            let e = c.rem_euclid(order as i64) as u64;
            elem = group.multiply(&elem, &group.power(&gen, e));
        }
        Ok(elem)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "family": self.rs.lie_type.family().letter().to_string(),
            "rank": self.rs.lie_type.rank(),
            "level": self.level,
            "heis_dim": self.heis_dim(),
            "heis_gram": qmat_json(&self.heis_gram),
            "generators": self
                .generators
                .iter()
                .map(|g| {
                    json!({
                        "node": g.node,
                        "coweight": qvec_json(&g.coweight.coords),
                        "heis_index": g.heis_index,
                    })
                })
                .collect::<Vec<_>>(),
            "big_lattice": self.big_lattice.to_json(),
        })
    }
}

#[derive(Debug, Clone)]
pub struct HypothesisCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct HypothesisReport {
    pub checks: Vec<HypothesisCheck>,
}

impl HypothesisReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&'static str> {
        self.checks.iter().find(|c| !c.passed).map(|c| c.name)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "all_pass": self.all_pass(),
            "checks": self
                .checks
                .iter()
                .map(|c| json!({"name": c.name, "passed": c.passed, "detail": c.detail}))
                .collect::<Vec<_>>(),
        })
    }
}

/// Verifies the hypotheses under which V[L] is a simple vertex operator
/// (super)algebra: B integral, coweight parts in the coweight lattice,
/// positive definite Heisenberg form of full rank, and injectivity of the
/// projection L -> L'.
pub fn check_hypotheses(ext: &ExtensionData) -> HypothesisReport {
    let mut checks = Vec::new();

    let bad: Vec<String> = ext
        .big_lattice
        .gram()
        .iter()
        .flatten()
        .filter(|x| !is_integer(x))
        .map(q_str)
        .collect();
    checks.push(HypothesisCheck {
        name: "B_integral",
        passed: bad.is_empty(),
        detail: if bad.is_empty() {
            "all B(alpha_s, alpha_t) are integers".into()
        } else {
            format!("non-integral entries: {}", bad.join(", "))
        },
    });

    let mut coweight_ok = true;
    let mut coweight_detail = String::from("all alpha_j(h'') are integers");
    'outer: for g in &ext.generators {
        for j in 1..=ext.rs.rank() {
            let p = ext.rs.root_pairing(j, &g.coweight).unwrap_or_else(|_| qq(1, 2));
            if !is_integer(&p) {
                coweight_ok = false;
                coweight_detail = format!("alpha_{j}(h^({})) = {} not an integer", g.node, q_str(&p));
                break 'outer;
            }
        }
    }
    checks.push(HypothesisCheck {
        name: "coweights_in_coweight_lattice",
        passed: coweight_ok,
        detail: coweight_detail,
    });

    let pos_def = if ext.heis_dim() == 0 {
        true
    } else {
        mat::leading_minors(&ext.heis_gram)
            .iter()
            .all(|m| m.is_positive())
    };
    checks.push(HypothesisCheck {
        name: "heis_gram_positive_definite",
        passed: pos_def,
        detail: if ext.heis_dim() == 0 {
            "trivial: Heisenberg part is zero".into()
        } else if pos_def {
            "all leading minors positive".into()
        } else {
            "a leading minor is not positive".into()
        },
    });

    let (proj_ok, proj_detail) = if ext.heis_dim() == 0 {
        (true, "skipped: no Heisenberg part".to_string())
    } else {
        let mut seen = vec![false; ext.heis_dim()];
        let mut ok = true;
        for g in &ext.generators {
            match g.heis_index {
                Some(i) if i < seen.len() && !seen[i] => seen[i] = true,
                _ => ok = false,
            }
        }
        if ok {
            (true, "generator alpha' parts are independent".to_string())
        } else {
            (false, "alpha' parts collide or fall outside the basis".to_string())
        }
    };
    checks.push(HypothesisCheck {
        name: "projection_one_to_one",
        passed: proj_ok,
        detail: proj_detail,
    });

    let rank_ok = ext.heis_gram.iter().all(|row| row.len() == ext.heis_dim())
        && (ext.heis_dim() == 0 || !mat::det(&ext.heis_gram).is_zero());
    checks.push(HypothesisCheck {
        name: "heis_rank_matches",
        passed: rank_ok,
        detail: if rank_ok {
            format!("rank of L' equals heis_dim = {}", ext.heis_dim())
        } else {
            "Heisenberg form is degenerate".into()
        },
    });

    HypothesisReport { checks }
}

fn require_hypotheses(ext: &ExtensionData) -> Result<()> {
    match check_hypotheses(ext).first_failure() {
        None => Ok(()),
        Some(name) => Err(Error::HypothesisFailed { name }),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityReport {
    pub is_super: bool,
    pub even_sublattice_index: u64,
}

impl ParityReport {
    pub fn to_json(&self) -> Value {
        json!({
            "is_super": self.is_super,
            "even_sublattice_index": self.even_sublattice_index,
        })
    }
}

/// V[L] is a superalgebra exactly when some B(alpha_s, alpha_s) is odd; in
/// that case the even part lives over a sublattice of index 2.
pub fn parity(ext: &ExtensionData) -> Result<ParityReport> {
    require_hypotheses(ext)?;
    let is_super = ext
        .big_lattice
        .gram()
        .iter()
        .enumerate()
        .any(|(s, row)| (row[s].to_integer() % 2i64).abs() == 1.into());
    let index = ext
        .big_lattice
        .validate()
        .even_sublattice_index()
        .ok_or(Error::NotIntegral)?;
    Ok(ParityReport {
        is_super,
        even_sublattice_index: index,
    })
}

/// Exact lowest L(0)-weight of the graded component V^(alpha) for
/// alpha = sum_s m_s alpha_s:
///
///   h(lambda_m) + (1/2) <sum m_s a'_s, sum m_t a'_t>,
///
/// where lambda_m is the weight of the simple-current class of
/// sum m_s [L(k, k lambda_(node_s))] and h is the conformal weight. The
/// affine part depends on m only through that class.
pub fn component_lowest_weight(ext: &ExtensionData, m: &[i64]) -> Result<Q> {
    require_hypotheses(ext)?;
    let elem = ext.class_of(m)?;
    let lambda = ext.current_group().class_weight(&elem);
    let mut w = conformal_weight(&ext.rs, ext.level, &lambda)?;
    for (gs, &ms) in ext.generators.iter().zip(m) {
        for (gt, &mt) in ext.generators.iter().zip(m) {
            if let (Some(is), Some(it)) = (gs.heis_index, gt.heis_index) {
                w += qz(ms) * qz(mt) * &ext.heis_gram[is][it] / qz(2);
            }
        }
    }
    Ok(w)
}

#[derive(Debug, Clone)]
pub struct GeneratingSpace {
    pub label: String,
    pub weight: Q,
    /// Dimension of the lowest subspace, as a decimal string in JSON.
    pub dim: u128,
}

#[derive(Debug, Clone)]
pub struct GeneratorSpec {
    pub spaces: Vec<GeneratingSpace>,
    pub locality_order: i64,
}

impl GeneratorSpec {
    pub fn to_json(&self) -> Value {
        json!({
            "locality_order": self.locality_order,
            "spaces": self
                .spaces
                .iter()
                .map(|s| json!({"label": s.label, "weight": q_str(&s.weight), "dim": s.dim.to_string()}))
                .collect::<Vec<_>>(),
        })
    }
}

fn space_label(k: i64, labels: &[i64], e_mult: i64) -> String {
    let weight_part = match labels.iter().position(|&c| c != 0) {
        None => "C".to_string(),
        Some(i) => format!("L({k}*lambda_{})", i + 1),
    };
    let e_part = match e_mult {
        1 => "e^{alpha'}".to_string(),
        -1 => "e^{-alpha'}".to_string(),
        c if c > 0 => format!("e^{{{c}*alpha'}}"),
        c => format!("e^{{-{}*alpha'}}", -c),
    };
    format!("{weight_part} (x) {e_part}")
}

/// The generating subspaces of A_k(g) together with the locality order N
/// for which (z_1 - z_2)^N [Y(u,z_1), Y(v,z_2)]_{+/-} = 0 on the listed
/// pairs. For E7 the list includes the one-dimensional spaces
/// C (x) e^{+/-2 alpha'}. Types B_n and D_n (n even) are refused.
pub fn generator_spec(ext: &ExtensionData) -> Result<GeneratorSpec> {
    require_hypotheses(ext)?;
    let family = ext.rs.lie_type.family();
    let n = ext.rs.lie_type.rank();
    if family == Family::B || (family == Family::D && n % 2 == 0) {
        return Err(Error::GeneratorsNotSpecified {
            family: family.letter(),
            rank: n,
        });
    }
    let k = ext.level;
    let group = simple_current_group(&ext.rs, k);
    let gen = group.from_node(ext.generators[0].node)?;
    let inv = group.power(&gen, group.order_of(&gen) - 1);
    let w_plus = group.class_weight(&gen);
    let w_minus = group.class_weight(&inv);
    let weight = component_lowest_weight(ext, &[1])?;
    let mut spaces = vec![
        GeneratingSpace {
            label: space_label(k, w_plus.labels(), 1),
            weight: weight.clone(),
            dim: ext.rs.weyl_dim(&w_plus)?,
        },
        GeneratingSpace {
            label: space_label(k, w_minus.labels(), -1),
            weight,
            dim: ext.rs.weyl_dim(&w_minus)?,
        },
    ];
    if family == Family::E && n == 7 {
        let weight2 = component_lowest_weight(ext, &[2])?;
        for sign in [1i64, -1] {
            spaces.push(GeneratingSpace {
                label: space_label(k, &vec![0; n], 2 * sign),
                weight: weight2.clone(),
                dim: 1,
            });
        }
    }
    let norm = &ext.big_lattice.gram()[0][0];
    let locality_order = norm
        .to_integer()
        .to_i64()
        .ok_or_else(|| Error::Invalid("locality order exceeds i64".into()))?;
    Ok(GeneratorSpec {
        spaces,
        locality_order,
    })
}
