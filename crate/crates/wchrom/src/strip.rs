//! Transfer-matrix structure of square-lattice strips: level polynomials,
//! eigenvalue-amplitude counting tables, their identities, and exact closed
//! forms for cyclic strips of width 1 and 2.

use crate::error::{Result, WchromError};
use crate::family::{ph_circuit, ph_line};
use crate::poly::MPoly;
use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{ToPrimitive, Zero};

fn q() -> MPoly {
    MPoly::var("q")
}

fn w() -> MPoly {
    MPoly::var("w")
}

fn int(k: i64) -> MPoly {
    MPoly::constant(BigInt::from(k))
}

fn big(n: u64) -> BigInt {
    BigInt::from(n)
}

/// Level-d prefactor polynomial: sum_j (-1)^j C(2d-j, j) (q-1)^(d-j).
pub fn c_tilde(d: usize) -> MPoly {
    let mut acc = MPoly::zero();
    for j in 0..=d {
        let coeff = binomial(BigInt::from(2 * d - j), BigInt::from(j));
        let sign = if j % 2 == 0 { 1 } else { -1 };
        acc = acc + (q() - int(1)).pow((d - j) as u32) * MPoly::constant(coeff * sign);
    }
    acc
}

/// Eigenvalue multiplicities per level for cyclic strips, all widths up to
/// `max_l`. Row L has entries d = 0..=L; built from the three-term recursion
/// n(L+1,d) = n(L,d-1) + 2 n(L,d) + n(L,d+1) with the d = 0 boundary
/// n(L+1,0) = n(L,0) + n(L,1), seeded by [2, 1].
pub fn n_ph_rows(max_l: usize) -> Vec<Vec<u64>> {
    assert!(max_l >= 1 && max_l <= 30);
    let mut rows: Vec<Vec<u64>> = vec![vec![2, 1]];
    for _ in 1..max_l {
        let prev = rows.last().unwrap();
        let at = |d: isize| -> u64 {
            if d < 0 || d as usize >= prev.len() {
                0
            } else {
                prev[d as usize]
            }
        };
        let mut row = vec![at(0) + at(1)];
        for d in 1..=prev.len() {
            row.push(at(d as isize - 1) + 2 * at(d as isize) + at(d as isize + 1));
        }
        rows.push(row);
    }
    rows
}

/// Multiplicity of level d for the zero-field strip of width l:
/// (2d+1)/(l+d+1) * C(2l, l-d).
pub fn n_z_entry(l: usize, d: usize) -> BigInt {
    if d > l {
        return BigInt::zero();
    }
    binomial(big(2 * l as u64), big((l - d) as u64)) * big(2 * d as u64 + 1)
        / big((l + d + 1) as u64)
}

pub fn n_z_row(l: usize) -> Vec<BigInt> {
    (0..=l).map(|d| n_z_entry(l, d)).collect()
}

pub fn catalan(k: usize) -> BigInt {
    binomial(big(2 * k as u64), big(k as u64)) / big(k as u64 + 1)
}

/// Total distinct eigenvalues across levels for the field-carrying strip.
pub fn n_zh_total(l: usize) -> BigInt {
    (0..=l)
        .map(|j| binomial(big(l as u64), big(j as u64)) * binomial(big(2 * j as u64), big(j as u64)))
        .sum()
}

/// Reference multiplicity tables for widths 1..=8, row index L-1, inner
/// index d. Four table kinds: field-carrying cyclic strip, zero-field
/// cyclic strip, distinct-eigenvalue counts with field, and the chromatic
/// specialization.
pub const N_PH_TABLE: [&[u64]; 8] = [
    &[2, 1],
    &[3, 4, 1],
    &[7, 12, 6, 1],
    &[19, 37, 25, 8, 1],
    &[56, 118, 95, 42, 10, 1],
    &[174, 387, 350, 189, 63, 12, 1],
    &[561, 1298, 1276, 791, 327, 88, 14, 1],
    &[1859, 4433, 4641, 3185, 1533, 517, 117, 16, 1],
];

pub const N_Z_TABLE: [&[u64]; 8] = [
    &[1, 1],
    &[2, 3, 1],
    &[5, 9, 5, 1],
    &[14, 28, 20, 7, 1],
    &[42, 90, 75, 35, 9, 1],
    &[132, 297, 275, 154, 54, 11, 1],
    &[429, 1001, 1001, 637, 273, 77, 13, 1],
    &[1430, 3432, 3640, 2548, 1260, 440, 104, 15, 1],
];

pub const N_ZH_TABLE: [&[u64]; 8] = [
    &[2, 1],
    &[5, 5, 1],
    &[15, 21, 8, 1],
    &[51, 86, 46, 11, 1],
    &[188, 355, 235, 80, 14, 1],
    &[731, 1488, 1140, 489, 123, 17, 1],
    &[2950, 6335, 5397, 2730, 875, 175, 20, 1],
    &[12235, 27352, 25256, 14462, 5530, 1420, 236, 23, 1],
];

pub const N_P_TABLE: [&[u64]; 8] = [
    &[1, 1],
    &[1, 2, 1],
    &[2, 4, 3, 1],
    &[4, 9, 8, 4, 1],
    &[9, 21, 21, 13, 5, 1],
    &[21, 51, 55, 39, 19, 6, 1],
    &[51, 127, 145, 113, 64, 26, 7, 1],
    &[127, 323, 385, 322, 203, 97, 34, 8, 1],
];

/// The level sum collapses to the number of proper colorings of one column:
/// sum_d c~(d) n(L,d) = q (q-1)^(L-1).
pub fn identity_check(l: usize) -> bool {
    let row = &n_ph_rows(l)[l - 1];
    let mut acc = MPoly::zero();
    for (d, &mult) in row.iter().enumerate() {
        acc = acc + c_tilde(d) * MPoly::constant(BigInt::from(mult));
    }
    acc == q() * (q() - int(1)).pow(l as u32 - 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableKind {
    /// Field-carrying cyclic strip multiplicities.
    Ph,
    /// Zero-field cyclic strip multiplicities.
    Z,
    /// Distinct eigenvalue counts with field.
    Zh,
    /// Chromatic-specialization counts.
    P,
}

impl TableKind {
    pub fn parse(s: &str) -> Result<TableKind> {
        match s {
            "ph" => Ok(TableKind::Ph),
            "z" => Ok(TableKind::Z),
            "zh" => Ok(TableKind::Zh),
            "p" => Ok(TableKind::P),
            other => Err(WchromError::InvalidArgument(format!(
                "unknown table kind `{other}` (expected ph, z, zh, or p)"
            ))),
        }
    }

    fn label(self) -> &'static str {
        match self {
            TableKind::Ph => "ph",
            TableKind::Z => "z",
            TableKind::Zh => "zh",
            TableKind::P => "p",
        }
    }

    fn rows(self) -> &'static [&'static [u64]; 8] {
        match self {
            TableKind::Ph => &N_PH_TABLE,
            TableKind::Z => &N_Z_TABLE,
            TableKind::Zh => &N_ZH_TABLE,
            TableKind::P => &N_P_TABLE,
        }
    }
}

/// Fixed-width text rendering of a multiplicity table, one row per width,
/// with row totals. Byte-deterministic.
pub fn render_table(kind: TableKind, max_l: usize) -> Result<String> {
    if max_l < 1 || max_l > 8 {
        return Err(WchromError::InvalidArgument(format!(
            "table widths run from 1 to 8, got {max_l}"
        )));
    }
    let mut out = String::new();
    out.push_str(&format!("table {} (rows L=1..{max_l}, columns d=0..L)\n", kind.label()));
    for (i, row) in kind.rows().iter().enumerate().take(max_l) {
        let total: u64 = row.iter().sum();
        let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        out.push_str(&format!("L={}: {}  | total {}\n", i + 1, cells.join(" "), total));
    }
    Ok(out)
}

/// Power sum of a conjugate eigenvalue pair with trace `b` and product `c`:
/// p_0 = 2, p_1 = b, p_m = b p_(m-1) - c p_(m-2).
fn pair_power_sum(b: &MPoly, c: &MPoly, m: usize) -> MPoly {
    let mut p0 = int(2);
    let mut p1 = b.clone();
    if m == 0 {
        return p0;
    }
    for _ in 1..m {
        let nxt = b.clone() * p1.clone() - c.clone() * p0;
        p0 = p1;
        p1 = nxt;
    }
    p1
}

/// Exact closed form for the cyclic strip of width `ly` (1 or 2) and length
/// m: the level decomposition sum_d c~(d) sum_j lambda_(ly,d,j)^m, with each
/// conjugate pair folded into an integer-coefficient power sum.
pub fn ph_strip_cyclic(ly: usize, m: usize) -> Result<MPoly> {
    if m < 1 {
        return Err(WchromError::InvalidArgument("strip length must be positive".into()));
    }
    match ly {
        1 => Ok(ph_circuit(m)),
        2 => {
            // Level 0: the isolated eigenvalue w(1-q) plus one conjugate pair.
            let lone = (w() * (int(1) - q())).pow(m as u32);
            let b0 = q().pow(2) + (w() - int(5)) * q() + int(7) - w();
            let c0 = int(-1) * w() * (q() - int(3)) * (q().pow(2) - int(3) * q() + int(3));
            let s0 = pair_power_sum(&b0, &c0, m);
            // Level 1: two conjugate pairs, prefactor q-2.
            let s1a = pair_power_sum(&(int(-1) * (q() - int(2))), &(int(-1) * (q() - int(1)) * w()), m);
            let s1b = pair_power_sum(&(int(-1) * (q() - int(4))), &(int(-1) * w() * (q() - int(3))), m);
            // Level 2: the constant eigenvalue 1 with prefactor c~(2).
            Ok(lone + s0 + c_tilde(1) * (s1a + s1b) + c_tilde(2))
        }
        other => Err(WchromError::InvalidArgument(format!(
            "no closed strip form for width {other} (supported: 1, 2)"
        ))),
    }
}

/// Open-ended (free) strip of width 1 is just the path.
pub fn ph_strip_free_width1(m: usize) -> MPoly {
    ph_line(m)
}

/// Growth-rate diagnostic for the total multiplicity: N(L) sqrt(L) / 4^L,
/// which approaches a constant from below.
pub fn n_ph_growth_ratio(l: usize) -> f64 {
    let rows = n_ph_rows(l);
    let total: u64 = rows[l - 1].iter().sum();
    total.to_f64().unwrap() * (l as f64).sqrt() / 4f64.powi(l as i32)
}
