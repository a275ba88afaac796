//! Closed-form weighted chromatic polynomials for the named graph families,
//! plus the coefficient-level predictions (subleading q-coefficient,
//! w-degree, leading w-coefficient) that each family obeys.

use crate::error::{Result, WchromError};
use crate::graph::{build_family, FamilySpec};
use crate::partition;
use crate::poly::MPoly;
use num_bigint::BigInt;

fn q() -> MPoly {
    MPoly::var("q")
}

fn w() -> MPoly {
    MPoly::var("w")
}

fn int(k: i64) -> MPoly {
    MPoly::constant(BigInt::from(k))
}

/// Path on n vertices, by the 2-state transfer product
/// (q-1, w) T^(n-1) (1,1)^T with T = [[q-2, w], [q-1, 0]].
pub fn ph_line(n: usize) -> MPoly {
    assert!(n >= 1);
    // Maintain (a,b) = T^k (1,1)^T.
    let mut a = MPoly::one();
    let mut b = MPoly::one();
    for _ in 1..n {
        let na = (q() - int(2)) * a.clone() + w() * b;
        let nb = (q() - int(1)) * a;
        a = na;
        b = nb;
    }
    (q() - int(1)) * a + w() * b
}

/// Star with n vertices: center plus n-1 leaves. Leaf edges are independent,
/// so the subgraph sum collapses to a binomial sum at v = -1.
pub fn ph_star(n: usize) -> MPoly {
    assert!(n >= 1);
    let qt = q() - int(1);
    let mut acc = MPoly::zero();
    for j in 0..n {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        let binom = num_integer::binomial(BigInt::from(n - 1), BigInt::from(j));
        let term = (qt.clone() + w().pow(j as u32 + 1))
            * (qt.clone() + w()).pow((n - 1 - j) as u32)
            * MPoly::constant(binom * sign);
        acc = acc + term;
    }
    acc
}

/// Power sums of the two nontrivial ring eigenvalues:
/// p_0 = 2, p_1 = q-2, p_m = (q-2) p_(m-1) + (q-1) w p_(m-2).
fn circuit_power_sum(n: usize) -> MPoly {
    let mut p0 = int(2);
    let mut p1 = q() - int(2);
    if n == 0 {
        return p0;
    }
    for _ in 1..n {
        let nxt = (q() - int(2)) * p1.clone() + (q() - int(1)) * w() * p0;
        p0 = p1;
        p1 = nxt;
    }
    p1
}

/// Ring on n vertices: the eigenvalue power sum plus (q-2)(-1)^n from the
/// (q-2)-fold degenerate level. Yields 0 at n=1 (a loop) and the doubled
/// edge reduction at n=2.
pub fn ph_circuit(n: usize) -> MPoly {
    assert!(n >= 1);
    let sign = if n % 2 == 0 { 1 } else { -1 };
    circuit_power_sum(n) + (q() - int(2)) * int(sign)
}

/// Complete graph: falling factorial times a single linear field factor.
pub fn ph_complete(n: usize) -> MPoly {
    assert!(n >= 1);
    let mut acc = MPoly::one();
    for j in 1..n {
        acc = acc * (q() - int(j as i64));
    }
    acc * (q() + int(n as i64) * (w() - int(1)))
}

/// Wheel with n vertices total (hub joined to a ring of n-1). The hub absorbs
/// one color: (q-1) Ph(ring, q-1, w) plus the hub-in-field correction.
pub fn ph_wheel(n: usize) -> Result<MPoly> {
    if n < 3 {
        return Err(WchromError::InvalidArgument(format!(
            "wheel needs at least 3 vertices, got {n}"
        )));
    }
    let ring = ph_circuit(n - 1).substitute_one("q", &(q() - int(1)));
    let sign = if (n - 1) % 2 == 0 { 1 } else { -1 };
    let correction = w() * ((q() - int(2)).pow(n as u32 - 1) + (q() - int(2)) * int(sign));
    Ok((q() - int(1)) * ring + correction)
}

/// Closed form where one exists, the subgraph-sum engine otherwise.
pub fn ph_formula(spec: &FamilySpec) -> Result<MPoly> {
    match spec {
        FamilySpec::Empty(n) => Ok((q() - int(1) + w()).pow(*n as u32)),
        FamilySpec::Line(n) => Ok(ph_line(*n)),
        FamilySpec::Star(n) => Ok(ph_star(*n)),
        FamilySpec::Circuit(n) => Ok(ph_circuit(*n)),
        FamilySpec::Complete(n) => Ok(ph_complete(*n)),
        FamilySpec::Wheel(n) => ph_wheel(*n),
        _ => partition::ph(&build_family(spec)?),
    }
}

/// Coefficient-level predictions for a family member: the q^(n-1)
/// coefficient, the degree in w, and the leading w-coefficient.
#[derive(Clone, Debug, PartialEq)]
pub struct CoefficientPrediction {
    pub alpha_second: MPoly,
    pub w_degree: u16,
    pub beta_top: MPoly,
}

/// Subleading q-coefficient rule for any connected graph: n w - (n + e),
/// with e counted after collapsing parallel edges.
pub fn alpha_second_general(g: &crate::graph::Graph) -> MPoly {
    let n = g.n() as i64;
    let e = g.reduce_multiedges().edge_count() as i64;
    int(n) * w() - int(n + e)
}

fn circuit_beta_top(n: usize) -> MPoly {
    if n % 2 == 0 {
        int(2) * (q() - int(1)).pow(n as u32 / 2)
    } else {
        int(n as i64) * (q() - int(1)).pow((n as u32 - 1) / 2) * (q() - int(2))
    }
}

/// The documented coefficient structure per family; None where the family
/// degenerates (rings below 3 vertices, open-ended families).
pub fn coefficient_prediction(spec: &FamilySpec) -> Result<Option<CoefficientPrediction>> {
    let g = build_family(spec)?;
    let alpha = alpha_second_general(&g);
    let pred = match spec {
        FamilySpec::Line(n) => {
            let (deg, beta) = if n % 2 == 1 {
                let m = (n - 1) / 2;
                (m as u16 + 1, (q() - int(1)).pow(m as u32))
            } else {
                let m = n / 2;
                (
                    m as u16,
                    (q() - int(1)).pow(m as u32 - 1) * (int(m as i64 + 1) * q() - int(2 * m as i64)),
                )
            };
            Some(CoefficientPrediction { alpha_second: alpha, w_degree: deg, beta_top: beta })
        }
        FamilySpec::Star(n) => {
            let beta = match n {
                1 => MPoly::one(),
                2 => int(2) * (q() - int(1)),
                _ => q() - int(1),
            };
            let deg = if *n == 1 { 1 } else { *n as u16 - 1 };
            Some(CoefficientPrediction { alpha_second: alpha, w_degree: deg, beta_top: beta })
        }
        FamilySpec::Circuit(n) if *n >= 3 => Some(CoefficientPrediction {
            alpha_second: alpha,
            w_degree: (*n / 2) as u16,
            beta_top: circuit_beta_top(*n),
        }),
        FamilySpec::Complete(n) => {
            let beta = if *n == 1 {
                MPoly::one()
            } else {
                let mut acc = int(*n as i64);
                for j in 1..*n {
                    acc = acc * (q() - int(j as i64));
                }
                acc
            };
            Some(CoefficientPrediction { alpha_second: alpha, w_degree: 1, beta_top: beta })
        }
        FamilySpec::Wheel(m) => {
            let shifted = circuit_beta_top(m - 1).substitute_one("q", &(q() - int(1)));
            let mut beta = (q() - int(1)) * shifted;
            if *m <= 4 {
                // The hub correction is w-linear and only reaches the top
                // coefficient while the ring degree is still 1.
                let sign = if (m - 1) % 2 == 0 { 1 } else { -1 };
                beta = beta + (q() - int(2)).pow(*m as u32 - 1) + (q() - int(2)) * int(sign);
            }
            Some(CoefficientPrediction {
                alpha_second: alpha,
                w_degree: ((m - 1) / 2) as u16,
                beta_top: beta,
            })
        }
        _ => None,
    };
    Ok(pred)
}
