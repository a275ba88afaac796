//! Dominant transfer eigenvalues in the complex q-plane: per-family spectra,
//! dominance regions and their boundaries, accumulation-locus grid scans,
//! special boundary points, and asymptotic expansions of the growth rate.

use crate::error::{Result, WchromError};
use num_complex::Complex64;

/// Families with a closed eigenvalue set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpectrumFamily {
    Line,
    Circuit,
    Wheel,
    /// Cyclic square strip of width 2.
    Ladder,
}

impl SpectrumFamily {
    pub fn parse(s: &str) -> Result<SpectrumFamily> {
        match s {
            "line" => Ok(SpectrumFamily::Line),
            "circuit" => Ok(SpectrumFamily::Circuit),
            "wheel" => Ok(SpectrumFamily::Wheel),
            "ladder" => Ok(SpectrumFamily::Ladder),
            other => Err(WchromError::InvalidArgument(format!(
                "unknown spectrum family `{other}` (expected line, circuit, wheel, or ladder)"
            ))),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            SpectrumFamily::Line => "line",
            SpectrumFamily::Circuit => "circuit",
            SpectrumFamily::Wheel => "wheel",
            SpectrumFamily::Ladder => "ladder",
        }
    }
}

fn quadratic_pair(b: Complex64, c: Complex64) -> (Complex64, Complex64) {
    // Roots of x^2 - b x + c with the principal branch listed first.
    let disc = (b * b - 4.0 * c).sqrt();
    ((b + disc) / 2.0, (b - disc) / 2.0)
}

/// The two ring/path eigenvalues (q-2 +- sqrt((q-2)^2 + 4(q-1)w)) / 2.
pub fn lambda_pm(q: Complex64, w: Complex64) -> (Complex64, Complex64) {
    quadratic_pair(q - 2.0, -(q - 1.0) * w)
}

/// Eigenvalues in canonical order. Indices are stable: region labels and
/// scan output refer to positions in this list.
pub fn eigenvalues_at(fam: SpectrumFamily, q: Complex64, w: Complex64) -> Vec<Complex64> {
    let neg1 = Complex64::new(-1.0, 0.0);
    match fam {
        SpectrumFamily::Line => {
            let (a, b) = lambda_pm(q, w);
            vec![a, b]
        }
        SpectrumFamily::Circuit => {
            let (a, b) = lambda_pm(q, w);
            vec![a, b, neg1]
        }
        SpectrumFamily::Wheel => {
            // Hub contraction shifts the ring spectrum by one color.
            let (a, b) = lambda_pm(q - 1.0, w);
            vec![a, b, neg1]
        }
        SpectrumFamily::Ladder => {
            let lone = w * (1.0 - q);
            let b0 = q * q + (w - 5.0) * q + 7.0 - w;
            let c0 = -w * (q - 3.0) * (q * q - 3.0 * q + 3.0);
            let (l202, l203) = quadratic_pair(b0, c0);
            let (l211, l212) = quadratic_pair(-(q - 2.0), -(q - 1.0) * w);
            let (l213, l214) = quadratic_pair(-(q - 4.0), -w * (q - 3.0));
            vec![
                lone,
                l202,
                l203,
                l211,
                l212,
                l213,
                l214,
                Complex64::new(1.0, 0.0),
            ]
        }
    }
}

/// Dominant eigenvalue with its canonical index and the modulus gap to the
/// runner-up. `boundary` marks near-equimodular points.
#[derive(Clone, Copy, Debug)]
pub struct Dominance {
    pub lambda: Complex64,
    pub index: usize,
    pub margin: f64,
    pub boundary: bool,
}

pub fn dominance_tolerance(top: f64) -> f64 {
    (1e-9 * top).max(1e-9)
}

pub fn dominant(fam: SpectrumFamily, q: Complex64, w: Complex64) -> Dominance {
    let eigs = eigenvalues_at(fam, q, w);
    let mut best = 0usize;
    for (i, e) in eigs.iter().enumerate() {
        if e.norm() > eigs[best].norm() {
            best = i;
        }
    }
    let top = eigs[best].norm();
    let mut runner = f64::NEG_INFINITY;
    for (i, e) in eigs.iter().enumerate() {
        if i != best {
            runner = runner.max(e.norm());
        }
    }
    let margin = top - runner;
    Dominance {
        lambda: eigs[best],
        index: best,
        margin,
        boundary: margin <= dominance_tolerance(top),
    }
}

/// Region name at a point: R<k> for the k-th eigenvalue dominating, or
/// Boundary when the top two moduli agree to tolerance.
pub fn region_label(fam: SpectrumFamily, q: Complex64, w: Complex64) -> String {
    let d = dominant(fam, q, w);
    if d.boundary {
        "Boundary".to_string()
    } else {
        format!("R{}", d.index + 1)
    }
}

/// Per-vertex free-energy scale: ln |dominant eigenvalue|.
pub fn ln_phi(fam: SpectrumFamily, q: Complex64, w: Complex64) -> f64 {
    dominant(fam, q, w).lambda.norm().ln()
}

// ---------------------------------------------------------------------------
// Special boundary points.

/// Real crossing of the dominance boundary on the q axis for the ring:
/// (w+3)/(w+1) in the weak-field regime w < 1, pinned at 2 for w > 1.
pub fn q_c_circuit(w: f64) -> f64 {
    if w < 1.0 {
        (w + 3.0) / (w + 1.0)
    } else {
        2.0
    }
}

/// Same crossing for the wheel: one color absorbed by the hub.
pub fn q_c_wheel(w: f64) -> f64 {
    q_c_circuit(w) + 1.0
}

/// Branch points of the ring pair in q at fixed w > 1:
/// 2 [1 - w +- sqrt(w(w-1))]. Returns (plus, minus).
pub fn q_endpoints(w: f64) -> (f64, f64) {
    let s = (w * (w - 1.0)).sqrt();
    (2.0 * (1.0 - w + s), 2.0 * (1.0 - w - s))
}

/// Where the conjugate ring pair reaches unit modulus: |lambda|^2 = -(q-1)w,
/// so the crossing sits at q = 1 - 1/w.
pub fn q_interior(w: f64) -> f64 {
    1.0 - 1.0 / w
}

/// Branch point of the ring pair in w at fixed q: w = -(q-2)^2 / (4(q-1)).
pub fn w_branch(q: f64) -> f64 {
    -(q - 2.0) * (q - 2.0) / (4.0 * (q - 1.0))
}

// ---------------------------------------------------------------------------
// Asymptotic expansions of the dominant growth rate (path/ring families).

/// Dominant magnitude for real parameters.
pub fn phi_magnitude(q: f64, w: f64) -> f64 {
    let (a, b) = lambda_pm(Complex64::new(q, 0.0), Complex64::new(w, 0.0));
    a.norm().max(b.norm())
}

/// Three correction orders around the zero-field point w = 1.
pub fn series_weak_field(q: f64, eps: f64) -> f64 {
    let t = (q - 1.0) * eps;
    (q - 1.0) + t / q - t * t / q.powi(3) + 2.0 * t.powi(3) / q.powi(5)
}

/// Three correction orders in z = (q-1)w/(q-2)^2 around the strong-field
/// suppression point w = 0.
pub fn series_field_suppressed(q: f64, w: f64) -> f64 {
    let z = (q - 1.0) * w / ((q - 2.0) * (q - 2.0));
    (q - 2.0) * (1.0 + z - z * z + 2.0 * z.powi(3))
}

/// Two correction orders in 1/q at fixed w.
pub fn series_large_q(q: f64, w: f64) -> f64 {
    q - 2.0 + w - w * (w - 1.0) / q + 2.0 * w * (w - 1.0) * (w - 1.0) / (q * q)
}

/// Strong-field asymptote sqrt((q-1)w) + (q-2)/2; the next correction decays
/// like w^(-1/2).
pub fn series_large_w(q: f64, w: f64) -> f64 {
    ((q - 1.0) * w).sqrt() + (q - 2.0) / 2.0
}

// ---------------------------------------------------------------------------
// Locus scanning.

#[derive(Clone, Copy, Debug)]
pub struct ScanGrid {
    pub re_min: f64,
    pub re_max: f64,
    pub re_steps: usize,
    pub im_min: f64,
    pub im_max: f64,
    pub im_steps: usize,
}

#[derive(Clone, Copy, Debug)]
pub struct ScanCell {
    pub re: f64,
    pub im: f64,
    pub index: usize,
    pub margin: f64,
    pub flagged: bool,
}

/// Inclusive endpoints; a single step collapses to the lower bound. Odd step
/// counts over a symmetric range therefore include the real axis exactly.
pub fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    assert!(n >= 1);
    if n == 1 {
        return vec![a];
    }
    (0..n).map(|i| a + (b - a) * i as f64 / (n - 1) as f64).collect()
}

/// Scan the complex q-plane at fixed w. A cell is flagged when it is
/// near-equimodular itself or its dominant index differs from the next cell
/// to the right or above — the two ways a boundary passes through.
pub fn locus_scan(fam: SpectrumFamily, w: Complex64, grid: &ScanGrid) -> Vec<ScanCell> {
    let res = linspace(grid.re_min, grid.re_max, grid.re_steps);
    let ims = linspace(grid.im_min, grid.im_max, grid.im_steps);
    let mut dex = vec![vec![0usize; res.len()]; ims.len()];
    let mut marg = vec![vec![0f64; res.len()]; ims.len()];
    let mut bnd = vec![vec![false; res.len()]; ims.len()];
    for (iy, &im) in ims.iter().enumerate() {
        for (ix, &re) in res.iter().enumerate() {
            let d = dominant(fam, Complex64::new(re, im), w);
            dex[iy][ix] = d.index;
            marg[iy][ix] = d.margin;
            bnd[iy][ix] = d.boundary;
        }
    }
    let mut out = Vec::with_capacity(res.len() * ims.len());
    for (iy, &im) in ims.iter().enumerate() {
        for (ix, &re) in res.iter().enumerate() {
            let mut flagged = bnd[iy][ix];
            if ix + 1 < res.len() && dex[iy][ix + 1] != dex[iy][ix] {
                flagged = true;
            }
            if iy + 1 < ims.len() && dex[iy + 1][ix] != dex[iy][ix] {
                flagged = true;
            }
            out.push(ScanCell { re, im, index: dex[iy][ix], margin: marg[iy][ix], flagged });
        }
    }
    out
}

/// Byte-deterministic CSV rendering of a scan.
pub fn scan_to_csv(cells: &[ScanCell]) -> String {
    let mut s = String::from("re,im,dominant_index,margin,flagged\n");
    for c in cells {
        s.push_str(&format!(
            "{:.6},{:.6},{},{:.6e},{}\n",
            c.re,
            c.im,
            c.index,
            c.margin,
            u8::from(c.flagged)
        ));
    }
    s
}

/// Flagged intervals along the real axis: maximal runs of flagged cells in a
/// one-row scan, reported as (first, last) real parts.
pub fn axis_crossings(
    fam: SpectrumFamily,
    w: Complex64,
    re_min: f64,
    re_max: f64,
    steps: usize,
) -> Vec<(f64, f64)> {
    let grid = ScanGrid { re_min, re_max, re_steps: steps, im_min: 0.0, im_max: 0.0, im_steps: 1 };
    let cells = locus_scan(fam, w, &grid);
    let mut out = Vec::new();
    let mut run: Option<(f64, f64)> = None;
    for c in &cells {
        if c.flagged {
            run = Some(match run {
                None => (c.re, c.re),
                Some((a, _)) => (a, c.re),
            });
        } else if let Some(r) = run.take() {
            out.push(r);
        }
    }
    if let Some(r) = run {
        out.push(r);
    }
    out
}
