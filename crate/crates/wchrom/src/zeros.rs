//! Certified numeric zeros of exact polynomial slices, zero-trajectory
//! tracking, and the coefficient-positivity conjecture checks.

use crate::error::{Result, WchromError};
use crate::poly::{MPoly, UniSlice};
use nalgebra::DMatrix;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::collections::HashMap;

/// A polished zero with the multiplicity of its cluster.
#[derive(Clone, Copy, Debug)]
pub struct RootInfo {
    pub value: Complex64,
    pub multiplicity: usize,
}

fn real_snap_threshold(z: Complex64) -> f64 {
    1e-9 * (1.0 + z.re.abs())
}

fn horner(coeffs: &[f64], z: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        acc = acc * z + c;
    }
    acc
}

fn horner_deriv(coeffs: &[f64], z: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for (k, &c) in coeffs.iter().enumerate().rev() {
        if k >= 1 {
            acc = acc * z + c * k as f64;
        }
    }
    acc
}

fn newton_polish(coeffs: &[f64], mut z: Complex64, multiplicity: usize) -> Complex64 {
    let mut best = horner(coeffs, z).norm();
    for _ in 0..50 {
        if best == 0.0 {
            break;
        }
        let d = horner_deriv(coeffs, z);
        if d.norm() == 0.0 {
            break;
        }
        let full = horner(coeffs, z) / d * multiplicity as f64;
        // Damped step: near the attainable residual floor the raw Newton
        // step is noise-driven, so only accept a step that lowers |p|.
        let mut step = full;
        let mut accepted = false;
        for _ in 0..8 {
            let cand = z - step;
            let r = horner(coeffs, cand).norm();
            if r < best {
                z = cand;
                best = r;
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if !accepted || step.norm() <= 1e-15 * (1.0 + z.norm()) {
            break;
        }
    }
    z
}

/// All complex zeros of a univariate slice: companion-matrix eigenvalues,
/// cluster detection, multiplicity-aware Newton refinement against the exact
/// coefficients, a residual certificate, and conjugate symmetrization.
pub fn roots(slice: &UniSlice) -> Result<Vec<RootInfo>> {
    if slice.is_zero() {
        return Err(WchromError::DegenerateSlice);
    }
    let deg = slice.degree();
    if deg == 0 {
        return Ok(Vec::new());
    }
    let coeffs = slice.coeffs_f64();
    let lead = coeffs[deg];
    let n = deg;
    let companion = DMatrix::<f64>::from_fn(n, n, |r, c| {
        if c == n - 1 {
            -coeffs[r] / lead
        } else if r == c + 1 {
            1.0
        } else {
            0.0
        }
    });
    let raw: Vec<Complex64> = companion.complex_eigenvalues().iter().copied().collect();
    // Cluster the raw eigenvalues. An m-fold zero scatters its eigenvalue
    // copies by roughly eps^(1/m), yet their mean stays machine-accurate
    // (cluster power sums remain analytic under perturbation), so refine
    // from the cluster centroid with the cluster size as multiplicity.
    let mut used = vec![false; raw.len()];
    let mut clusters: Vec<(Complex64, usize)> = Vec::new();
    for i in 0..raw.len() {
        if used[i] {
            continue;
        }
        let radius = 1e-4 * (1.0 + raw[i].norm());
        let mut members = vec![raw[i]];
        used[i] = true;
        for j in i + 1..raw.len() {
            if !used[j] && (raw[j] - raw[i]).norm() <= radius {
                used[j] = true;
                members.push(raw[j]);
            }
        }
        let centroid = members.iter().sum::<Complex64>() / members.len() as f64;
        let refined = newton_polish(&coeffs, centroid, members.len());
        clusters.push((refined, members.len()));
    }
    // Snap near-real values onto the axis, then pair conjugates exactly.
    let mut roots: Vec<RootInfo> = clusters
        .into_iter()
        .map(|(mut z, m)| {
            if z.im.abs() < real_snap_threshold(z) {
                z = Complex64::new(z.re, 0.0);
            }
            RootInfo { value: z, multiplicity: m }
        })
        .collect();
    symmetrize_conjugates(&mut roots);
    certify(slice, &roots)?;
    roots.sort_by(|a, b| {
        (a.value.re, a.value.im)
            .partial_cmp(&(b.value.re, b.value.im))
            .unwrap()
    });
    Ok(roots)
}

fn symmetrize_conjugates(roots: &mut [RootInfo]) {
    let mut paired = vec![false; roots.len()];
    for i in 0..roots.len() {
        if paired[i] || roots[i].value.im <= 0.0 {
            continue;
        }
        // Closest unpaired root in the lower half plane with same multiplicity.
        let mut best: Option<(usize, f64)> = None;
        for j in 0..roots.len() {
            if i == j || paired[j] || roots[j].value.im >= 0.0 {
                continue;
            }
            if roots[j].multiplicity != roots[i].multiplicity {
                continue;
            }
            let d = (roots[j].value.conj() - roots[i].value).norm();
            if best.map_or(true, |(_, bd)| d < bd) {
                best = Some((j, d));
            }
        }
        if let Some((j, d)) = best {
            if d <= 1e-6 * (1.0 + roots[i].value.norm()) {
                let avg = (roots[i].value + roots[j].value.conj()) / 2.0;
                roots[i].value = avg;
                roots[j].value = avg.conj();
                paired[i] = true;
                paired[j] = true;
            }
        }
    }
}

fn certify(slice: &UniSlice, roots: &[RootInfo]) -> Result<()> {
    let coeffs = slice.coeffs_f64();
    let bound_base = 1e-8 * slice.coeff_norm_f64();
    for r in roots {
        let residual = horner(&coeffs, r.value).norm();
        let bound = bound_base * r.value.norm().max(1.0).powi(slice.degree() as i32);
        if residual > bound {
            return Err(WchromError::ResidualCertification { residual, bound });
        }
    }
    Ok(())
}

/// Residual |p(z)| on the f64 image of the slice — the certified quantity.
pub fn residual_at(slice: &UniSlice, z: Complex64) -> f64 {
    horner(&slice.coeffs_f64(), z).norm()
}

/// Slice a bivariate (q,w) polynomial at fixed w and return its q-zeros.
pub fn roots_q(ph: &MPoly, w: &BigRational) -> Result<Vec<RootInfo>> {
    let mut fixed = HashMap::new();
    fixed.insert("w".to_string(), w.clone());
    roots(&ph.slice("q", &fixed)?)
}

/// Slice at fixed q and return the zeros in the field variable.
pub fn roots_w(ph: &MPoly, q: &BigRational) -> Result<Vec<RootInfo>> {
    let mut fixed = HashMap::new();
    fixed.insert("q".to_string(), q.clone());
    roots(&ph.slice("w", &fixed)?)
}

pub fn real_roots(info: &[RootInfo]) -> Vec<(f64, usize)> {
    info.iter()
        .filter(|r| r.value.im == 0.0)
        .map(|r| (r.value.re, r.multiplicity))
        .collect()
}

/// Largest real zero, if any.
pub fn max_real_zero(info: &[RootInfo]) -> Option<f64> {
    real_roots(info).into_iter().map(|(x, _)| x).fold(None, |acc, x| {
        Some(acc.map_or(x, |a: f64| a.max(x)))
    })
}

/// Track the largest real q-zero across a grid of field values.
pub fn track_max_real_zero(ph: &MPoly, w_grid: &[BigRational]) -> Result<Vec<(f64, Option<f64>)>> {
    let mut out = Vec::with_capacity(w_grid.len());
    for w in w_grid {
        let rs = roots_q(ph, w)?;
        out.push((rational_to_f64(w), max_real_zero(&rs)));
    }
    Ok(out)
}

fn rational_to_f64(r: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

// ---------------------------------------------------------------------------
// Coefficient-positivity conjectures.

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConjectureVerdict {
    Holds,
    /// The claim is only made for fields w <= 1.
    OutOfRange,
    Fails { detail: String },
}

fn alpha_values(ph: &MPoly, w: &BigRational) -> Result<Vec<BigRational>> {
    let n = ph.degree_in("q");
    let mut vals = Vec::with_capacity(n as usize + 1);
    for j in 0..=n {
        let coeff = ph.coeff_of("q", j);
        let mut b = HashMap::new();
        b.insert("w".to_string(), w.clone());
        vals.push(if coeff.is_zero() {
            BigRational::zero()
        } else {
            coeff.eval_rational(&b)?
        });
    }
    Ok(vals)
}

/// Alternating-sign claim: sgn(alpha_(n-j)) = (-1)^j for j = 0..n-1 whenever
/// w <= 1, extending to j = n for w < 1 (the constant term vanishes at w=1).
pub fn sign_alternation(ph: &MPoly, w: &BigRational) -> Result<ConjectureVerdict> {
    let one = BigRational::from_integer(1.into());
    if *w > one {
        return Ok(ConjectureVerdict::OutOfRange);
    }
    let vals = alpha_values(ph, w)?;
    let n = vals.len() - 1;
    for j in 0..=n {
        let include = j < n || *w < one;
        if !include {
            continue;
        }
        let v = &vals[n - j];
        let want_positive = j % 2 == 0;
        let ok = if want_positive { v.is_positive() } else { v.is_negative() };
        if !ok {
            return Ok(ConjectureVerdict::Fails {
                detail: format!("coefficient of q^{} is {} at w={}", n - j, v, w),
            });
        }
    }
    Ok(ConjectureVerdict::Holds)
}

/// Unimodality of the magnitudes m_j = (-1)^j alpha_(n-j): a single rise
/// then fall, with at most one flat step, which must sit at the peak.
pub fn unimodality(ph: &MPoly, w: &BigRational) -> Result<ConjectureVerdict> {
    let one = BigRational::from_integer(1.into());
    if *w > one {
        return Ok(ConjectureVerdict::OutOfRange);
    }
    let vals = alpha_values(ph, w)?;
    let n = vals.len() - 1;
    let mags: Vec<BigRational> = (0..=n)
        .map(|j| {
            let v = vals[n - j].clone();
            if j % 2 == 0 {
                v
            } else {
                -v
            }
        })
        .collect();
    // Drop a vanishing tail entry (the w=1 constant term) before shape-checking.
    let mags: Vec<&BigRational> = mags.iter().filter(|m| !m.is_zero()).collect();
    let mut falls_seen = false;
    let mut flats = 0usize;
    for k in 0..mags.len().saturating_sub(1) {
        use std::cmp::Ordering::*;
        match mags[k + 1].cmp(mags[k]) {
            Greater => {
                if falls_seen {
                    return Ok(ConjectureVerdict::Fails {
                        detail: format!("rise after fall at position {k} for w={w}"),
                    });
                }
            }
            Less => falls_seen = true,
            Equal => {
                flats += 1;
                let at_peak = (k == 0 || mags[k] > mags[k - 1])
                    && (k + 2 >= mags.len() || mags[k + 2] < mags[k + 1]);
                if flats > 1 || !at_peak {
                    return Ok(ConjectureVerdict::Fails {
                        detail: format!("non-peak plateau at position {k} for w={w}"),
                    });
                }
            }
        }
    }
    Ok(ConjectureVerdict::Holds)
}

/// Zeros in w of a single q-coefficient alpha_j — the coefficient atlas.
pub fn alpha_zero_atlas(ph: &MPoly, j: u16) -> Result<Vec<RootInfo>> {
    let coeff = ph.coeff_of("q", j);
    if coeff.is_zero() {
        return Err(WchromError::DegenerateSlice);
    }
    roots(&coeff.slice("w", &HashMap::new())?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{ph_circuit, ph_complete, ph_line, ph_star};
    use crate::graph::{build_family, FamilySpec};
    use crate::partition;
    use num_traits::One;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn p(s: &str) -> MPoly {
        MPoly::parse(s).unwrap()
    }

    fn slice_w(s: &str) -> UniSlice {
        p(s).slice("w", &HashMap::new()).unwrap()
    }

    #[test]
    fn exact_quadratic_roots() {
        // w^2 - 5w + 4 has roots 1 and 4.
        let rs = roots(&slice_w("w^2-5*w+4")).unwrap();
        assert_eq!(rs.len(), 2);
        assert!((rs[0].value.re - 1.0).abs() < 1e-12 && rs[0].value.im == 0.0);
        assert!((rs[1].value.re - 4.0).abs() < 1e-12);
        // Conjugate pair: w^2 + 1.
        let rs = roots(&slice_w("w^2+1")).unwrap();
        assert_eq!(rs[0].value, rs[1].value.conj());
        assert!((rs[0].value.im.abs() - 1.0).abs() < 1e-12);
        // Degenerate inputs.
        assert!(matches!(roots(&slice_w("0")), Err(WchromError::DegenerateSlice)));
        assert!(roots(&slice_w("7")).unwrap().is_empty());
    }

    #[test]
    fn multiple_roots_cluster() {
        // (w-2)^3 (w+1): a triple root must come back as one cluster.
        let rs = roots(&slice_w("(w-2)^3*(w+1)")).unwrap();
        let triple: Vec<_> = rs.iter().filter(|r| r.multiplicity == 3).collect();
        assert_eq!(triple.len(), 1);
        assert!((triple[0].value.re - 2.0).abs() < 1e-6);
        assert!(rs.iter().any(|r| r.multiplicity == 1 && (r.value.re + 1.0).abs() < 1e-10));
    }

    #[test]
    fn path_zeros_in_q_match_the_quadratic_formula() {
        // L_3 bracket roots: q = (4 - 3w +- sqrt(w(5w-4)))/2.
        let ph = ph_line(3);
        for wv in [1.0f64, 1.5, 2.0] {
            let w = BigRational::from_float(wv).unwrap();
            let rs = roots_q(&ph, &w).unwrap();
            let disc = (wv * (5.0 * wv - 4.0)).sqrt();
            let mut expect = vec![1.0, (4.0 - 3.0 * wv + disc) / 2.0, (4.0 - 3.0 * wv - disc) / 2.0];
            expect.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let mut got: Vec<f64> = rs
                .iter()
                .flat_map(|r| std::iter::repeat(r.value.re).take(r.multiplicity))
                .collect();
            got.sort_by(|a, b| a.partial_cmp(b).unwrap());
            assert_eq!(got.len(), expect.len(), "w={wv}");
            for (g, e) in got.iter().zip(&expect) {
                assert!((g - e).abs() < 1e-9, "w={wv}: {g} vs {e}");
            }
        }
    }

    #[test]
    fn path_zeros_in_w_match_the_quadratic_formula() {
        // L_3: w = (5 - 3q +- sqrt((q-1)(5q-9)))/2 at fixed q.
        let ph = ph_line(3);
        for qv in [2.0f64, 3.0, 5.0] {
            let q = BigRational::from_float(qv).unwrap();
            let rs = roots_w(&ph, &q).unwrap();
            let disc = ((qv - 1.0) * (5.0 * qv - 9.0)).sqrt();
            let mut expect = vec![(5.0 - 3.0 * qv + disc) / 2.0, (5.0 - 3.0 * qv - disc) / 2.0];
            expect.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let got: Vec<f64> = rs.iter().map(|r| r.value.re).collect();
            assert_eq!(got.len(), 2, "q={qv}");
            for (g, e) in got.iter().zip(&expect) {
                assert!((g - e).abs() < 1e-9, "q={qv}: {g} vs {e}");
            }
        }
        // Complete graphs: the single w-zero sits at 1 - q/n.
        for n in 2..=6usize {
            let ph = ph_complete(n);
            let q = rat(7, 2);
            let rs = roots_w(&ph, &q).unwrap();
            assert_eq!(rs.len(), 1);
            let expect = 1.0 - 3.5 / n as f64;
            assert!((rs[0].value.re - expect).abs() < 1e-10, "n={n}");
        }
    }

    #[test]
    fn longer_path_w_zeros_and_divergences() {
        // L_4: {2-q, -(q-2)^2/(3q-4)}; the second diverges toward q = 4/3.
        let ph = ph_line(4);
        for qv in [2.5f64, 3.0, 1.5] {
            let q = BigRational::from_float(qv).unwrap();
            let rs = roots_w(&ph, &q).unwrap();
            let mut expect = vec![2.0 - qv, -(qv - 2.0) * (qv - 2.0) / (3.0 * qv - 4.0)];
            expect.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let mut got: Vec<f64> = rs.iter().map(|r| r.value.re).collect();
            got.sort_by(|a, b| a.partial_cmp(b).unwrap());
            for (g, e) in got.iter().zip(&expect) {
                assert!((g - e).abs() < 1e-8, "q={qv}");
            }
        }
        let near = roots_w(&ph, &(rat(4, 3) - rat(1, 1000))).unwrap();
        let biggest = near.iter().map(|r| r.value.norm()).fold(0.0, f64::max);
        assert!(biggest > 100.0, "no divergence near q=4/3: {biggest}");

        // L_6: {-(q-2)^2/(2q-3)} plus the pair (q-2)(5-4q +- sqrt(8q^2-16q+9))/(4(q-1)).
        let l6 = ph_line(6);
        for qv in [3.0f64, 4.0] {
            let q = BigRational::from_float(qv).unwrap();
            let rs = roots_w(&l6, &q).unwrap();
            let disc = (8.0 * qv * qv - 16.0 * qv + 9.0).sqrt();
            let mut expect = vec![
                -(qv - 2.0) * (qv - 2.0) / (2.0 * qv - 3.0),
                (qv - 2.0) * (5.0 - 4.0 * qv + disc) / (4.0 * (qv - 1.0)),
                (qv - 2.0) * (5.0 - 4.0 * qv - disc) / (4.0 * (qv - 1.0)),
            ];
            expect.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let mut got: Vec<f64> = rs.iter().map(|r| r.value.re).collect();
            got.sort_by(|a, b| a.partial_cmp(b).unwrap());
            assert_eq!(got.len(), 3, "q={qv}");
            for (g, e) in got.iter().zip(&expect) {
                assert!((g - e).abs() < 1e-8, "q={qv}: {g} vs {e}");
            }
        }

        // Y_5 as q -> 3/2: one zero diverges while its companion tends to 1/4.
        let y5 = partition::ph(&build_family(&FamilySpec::parse("Y:5").unwrap()).unwrap()).unwrap();
        let q = &rat(3, 2) + rat(1, 10000);
        let rs = roots_w(&y5, &q).unwrap();
        let biggest = rs.iter().map(|r| r.value.norm()).fold(0.0, f64::max);
        assert!(biggest > 1000.0);
        let companion = rs
            .iter()
            .filter(|r| r.value.norm() < 10.0 && (r.value.re - 0.25).abs() < 0.01)
            .count();
        assert_eq!(companion, 1, "missing finite companion near 1/4");

        // The degree-(3,3) tree: double zero at 2-q, and its bracket pair
        // collapses toward {divergent, 0} as q -> 2.
        let h6 = partition::ph(&build_family(&FamilySpec::parse("H:6").unwrap()).unwrap()).unwrap();
        let q = rat(3, 1);
        let rs = roots_w(&h6, &q).unwrap();
        let double = rs.iter().filter(|r| r.multiplicity == 2).count();
        assert_eq!(double, 1, "expected the squared factor's double zero");
        let dbl = rs.iter().find(|r| r.multiplicity == 2).unwrap();
        assert!((dbl.value.re - (2.0 - 3.0)).abs() < 1e-6);
        // Bracket roots at q=3: [-2q^2+6q-5 +- (q-1) sqrt(3q^2-10q+9)]/(q-2).
        let disc = (3.0 * 9.0 - 30.0 + 9.0f64).sqrt();
        let e1 = (-5.0 + 2.0 * disc) / 1.0;
        let e2 = (-5.0 - 2.0 * disc) / 1.0;
        for e in [e1, e2] {
            assert!(
                rs.iter().any(|r| (r.value.re - e).abs() < 1e-8 && r.value.im == 0.0),
                "missing bracket root {e}"
            );
        }
        let qn = rat(2, 1) + rat(1, 1000);
        let rs = roots_w(&h6, &qn).unwrap();
        let biggest = rs.iter().map(|r| r.value.norm()).fold(0.0, f64::max);
        assert!(biggest > 500.0, "no divergence near q=2");
        assert!(rs.iter().any(|r| r.value.norm() < 0.01), "companion should approach 0");
    }

    #[test]
    fn ring_trajectory_events() {
        let ph = ph_line(3);
        // Collision: at w = 4/5 the bracket pair merges at q = 4/5.
        let rs = roots_q(&ph, &rat(4, 5)).unwrap();
        let double = rs.iter().find(|r| r.multiplicity == 2).expect("double root");
        assert!((double.value.re - 0.8).abs() < 1e-6);
        // Imaginary spread is maximal at w = 2/5.
        let spread = |wn: i64, wd: i64| {
            roots_q(&ph, &rat(wn, wd))
                .unwrap()
                .iter()
                .map(|r| r.value.im.abs())
                .fold(0.0, f64::max)
        };
        let peak = spread(2, 5);
        assert!(peak > spread(3, 10) && peak > spread(1, 2));
        // Discontinuity at w = 0: the largest real zero jumps from 1 to 2.
        let at0 = roots_q(&ph, &BigRational::zero()).unwrap();
        assert!((max_real_zero(&at0).unwrap() - 2.0).abs() < 1e-9);
        let just_above = roots_q(&ph, &rat(1, 100)).unwrap();
        assert!((max_real_zero(&just_above).unwrap() - 1.0).abs() < 1e-9);
        let track = track_max_real_zero(&ph, &[BigRational::zero(), rat(1, 100), rat(1, 1)]).unwrap();
        assert_eq!(track.len(), 3);
        assert!((track[0].1.unwrap() - 2.0).abs() < 1e-9);
    }

    #[test]
    fn zero_field_shift_law() {
        // Ph(G,q,0) = P(G,q-1): the w=0 zero multiset is the w=1 multiset
        // shifted right by one.
        for spec in ["L:3", "C:4", "K:4"] {
            let g = build_family(&FamilySpec::parse(spec).unwrap()).unwrap();
            let ph = partition::ph(&g).unwrap();
            let mut w0: Vec<f64> = roots_q(&ph, &BigRational::zero())
                .unwrap()
                .iter()
                .flat_map(|r| std::iter::repeat(r.value.re).take(r.multiplicity))
                .collect();
            let mut w1: Vec<f64> = roots_q(&ph, &BigRational::one())
                .unwrap()
                .iter()
                .flat_map(|r| std::iter::repeat(r.value.re + 1.0).take(r.multiplicity))
                .collect();
            w0.sort_by(|a, b| a.partial_cmp(b).unwrap());
            w1.sort_by(|a, b| a.partial_cmp(b).unwrap());
            assert_eq!(w0.len(), w1.len(), "{spec}");
            for (a, b) in w0.iter().zip(&w1) {
                assert!((a - b).abs() < 1e-8, "{spec}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn normalized_w_coefficients() {
        // After dividing out (q-1), the w-coefficients follow closed forms.
        use crate::poly::beta_bar;
        let l4 = ph_line(4);
        assert_eq!(beta_bar(&l4, 2).unwrap(), p("3*q-4"));
        assert_eq!(beta_bar(&l4, 1).unwrap(), p("2*(q-2)*(2*q-3)"));
        assert_eq!(beta_bar(&l4, 0).unwrap(), p("(q-2)^3"));
        let l6 = ph_line(6);
        assert_eq!(beta_bar(&l6, 3).unwrap(), p("2*(q-1)*(2*q-3)"));
        assert_eq!(beta_bar(&l6, 2).unwrap(), p("(q-2)*(10*q^2-28*q+19)"));
        assert_eq!(beta_bar(&l6, 1).unwrap(), p("2*(3*q-4)*(q-2)^3"));
        assert_eq!(beta_bar(&l6, 0).unwrap(), p("(q-2)^5"));
    }

    #[test]
    fn conjectures_on_small_families() {
        let grid: Vec<BigRational> = (0..=20).map(|k| rat(k, 20)).collect();
        for spec in ["L:5", "C:5", "S:5", "K:5", "Wh:5"] {
            let g = build_family(&FamilySpec::parse(spec).unwrap()).unwrap();
            let ph = partition::ph(&g).unwrap();
            for w in &grid {
                assert_eq!(
                    sign_alternation(&ph, w).unwrap(),
                    ConjectureVerdict::Holds,
                    "{spec} at w={w}"
                );
                assert_eq!(
                    unimodality(&ph, w).unwrap(),
                    ConjectureVerdict::Holds,
                    "{spec} at w={w}"
                );
            }
        }
        let ph = ph_circuit(4);
        assert_eq!(sign_alternation(&ph, &rat(3, 2)).unwrap(), ConjectureVerdict::OutOfRange);
        assert_eq!(unimodality(&ph, &rat(3, 2)).unwrap(), ConjectureVerdict::OutOfRange);
        // A non-alternating polynomial is rejected.
        let bogus = p("q^2+q+1");
        assert!(matches!(
            sign_alternation(&bogus, &rat(1, 2)).unwrap(),
            ConjectureVerdict::Fails { .. }
        ));
    }

    #[test]
    fn coefficient_atlas_for_the_four_vertex_star() {
        let s4 = ph_star(4);
        // alpha_1 = w^3 - 9w^2 + 27w - 20: one real zero, one conjugate pair.
        assert_eq!(s4.coeff_of("q", 1), p("w^3-9*w^2+27*w-20"));
        let rs = alpha_zero_atlas(&s4, 1).unwrap();
        assert_eq!(rs.len(), 3);
        let real: Vec<_> = rs.iter().filter(|r| r.value.im == 0.0).collect();
        assert_eq!(real.len(), 1);
        assert!((real[0].value.re - 1.0874).abs() < 1e-3);
        let pair: Vec<_> = rs.iter().filter(|r| r.value.im != 0.0).collect();
        assert!((pair[0].value.re - 3.9563).abs() < 1e-3);
        assert!((pair[0].value.im.abs() - 1.6566).abs() < 1e-3);
        // alpha_0 = -(w-1)(w^2-5w+8): zeros {1, (5 +- i sqrt(7))/2}.
        assert_eq!(s4.coeff_of("q", 0), p("-(w-1)*(w^2-5*w+8)"));
        let rs = alpha_zero_atlas(&s4, 0).unwrap();
        assert!(rs.iter().any(|r| (r.value.re - 1.0).abs() < 1e-10 && r.value.im == 0.0));
        let pair: Vec<_> = rs.iter().filter(|r| r.value.im > 0.0).collect();
        assert_eq!(pair.len(), 1);
        assert!((pair[0].value.re - 2.5).abs() < 1e-10);
        assert!((pair[0].value.im - 7f64.sqrt() / 2.0).abs() < 1e-10);
    }
}
