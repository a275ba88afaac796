//! Partition-function engines.
//!
//! `potts_z` sums over all spanning subgraphs: each edge subset contributes
//! v^(edges) times a product over components of (q - 1 + w^size). Masks are
//! grouped by their (edge count, component-size multiset) profile first, so
//! the polynomial work is done once per profile rather than once per mask.
//! `brute_force_z` is the independent oracle: a direct sum over colorings in
//! exact rational arithmetic.

use crate::error::{Result, WchromError};
use crate::graph::Graph;
use crate::poly::MPoly;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use std::collections::HashMap;

/// Vertex-weight structure for the generalized engines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    /// One distinguished color with weight w.
    Uniform,
    /// Every color p of a concrete palette gets its own weight w`p`.
    PerColor(usize),
    /// A symbolic count s of colors share the weight w.
    SColor,
}

/// Edge-coupling structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CouplingSpec {
    Uniform,
    /// Every edge e (by canonical index, 1-based) gets its own v`e`.
    PerEdge,
}

/// Subgraph profile: edge count plus the multiset of component sizes.
/// Sizes >= 2 are packed five bits each (cap 30 edges keeps each below 32);
/// the rare wide multisets fall back to an explicit list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Profile {
    Packed { eprime: u8, ones: u8, code: u128 },
    Big { eprime: u8, sizes: Vec<u8> },
}

const PACK_LIMIT: usize = 25;

fn make_profile(eprime: u8, ones: u8, sizes_ge2: &[u8]) -> Profile {
    if sizes_ge2.len() <= PACK_LIMIT {
        let mut code: u128 = 0;
        for &s in sizes_ge2 {
            code = code << 5 | s as u128;
        }
        Profile::Packed { eprime, ones, code }
    } else {
        let mut sizes: Vec<u8> = sizes_ge2.to_vec();
        sizes.extend(std::iter::repeat(1).take(ones as usize));
        Profile::Big { eprime, sizes }
    }
}

fn profile_sizes(p: &Profile) -> (u8, Vec<u8>) {
    match p {
        Profile::Packed { eprime, ones, code } => {
            let mut sizes = Vec::new();
            let mut c = *code;
            while c != 0 {
                sizes.push((c & 0x1f) as u8);
                c >>= 5;
            }
            sizes.extend(std::iter::repeat(1).take(*ones as usize));
            (*eprime, sizes)
        }
        Profile::Big { eprime, sizes } => (*eprime, sizes.clone()),
    }
}

/// Count spanning subgraphs by profile. Chunks of the mask range are folded
/// in parallel; the merged map is returned sorted for reproducibility.
fn subgraph_profiles(g: &Graph, cap: Option<usize>) -> Result<Vec<(Profile, u64)>> {
    let range = g.enumerate_masks(cap)?;
    let total = range.end;
    let n = g.n();
    let edges = g.edges();
    const CHUNK: u64 = 1 << 16;
    let nchunks = total.div_ceil(CHUNK).max(1);
    let merged: HashMap<Profile, u64> = (0..nchunks)
        .into_par_iter()
        .fold(HashMap::new, |mut local: HashMap<Profile, u64>, ci| {
            let lo = ci * CHUNK;
            let hi = (lo + CHUNK).min(total);
            let mut parent = vec![0u32; n];
            let mut size = vec![1u32; n];
            let mut sizes_ge2 = vec![0u8; n.max(1)];
            for mask in lo..hi {
                for (i, p) in parent.iter_mut().enumerate() {
                    *p = i as u32;
                }
                size.fill(1);
                let mut m = mask;
                let mut eprime = 0u8;
                while m != 0 {
                    let i = m.trailing_zeros() as usize;
                    m &= m - 1;
                    eprime += 1;
                    let (a, b) = edges[i];
                    let mut ra = a as usize;
                    while parent[ra] as usize != ra {
                        parent[ra] = parent[parent[ra] as usize];
                        ra = parent[ra] as usize;
                    }
                    let mut rb = b as usize;
                    while parent[rb] as usize != rb {
                        parent[rb] = parent[parent[rb] as usize];
                        rb = parent[rb] as usize;
                    }
                    if ra != rb {
                        if size[ra] < size[rb] {
                            std::mem::swap(&mut ra, &mut rb);
                        }
                        parent[rb] = ra as u32;
                        size[ra] += size[rb];
                    }
                }
                let mut ones = 0u8;
                let mut k2 = 0usize;
                for v in 0..n {
                    if parent[v] as usize == v {
                        if size[v] == 1 {
                            ones += 1;
                        } else {
                            sizes_ge2[k2] = size[v] as u8;
                            k2 += 1;
                        }
                    }
                }
                sizes_ge2[..k2].sort_unstable();
                *local.entry(make_profile(eprime, ones, &sizes_ge2[..k2])).or_insert(0) += 1;
            }
            local
        })
        .reduce(HashMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        });
    let mut out: Vec<(Profile, u64)> = merged.into_iter().collect();
    out.sort();
    Ok(out)
}

fn component_factor(field: &FieldSpec, s: usize) -> MPoly {
    let q = MPoly::var("q");
    match field {
        FieldSpec::Uniform => {
            // q - 1 + w^s
            q - MPoly::one() + MPoly::var("w").pow(s as u32)
        }
        FieldSpec::PerColor(nc) => {
            let mut acc = MPoly::zero();
            for p in 1..=*nc {
                acc = acc + MPoly::var(&format!("w{p}")).pow(s as u32);
            }
            acc
        }
        FieldSpec::SColor => {
            let s_var = MPoly::var("s");
            q - s_var.clone() + s_var * MPoly::var("w").pow(s as u32)
        }
    }
}

fn z_from_profiles(profiles: &[(Profile, u64)], field: &FieldSpec) -> MPoly {
    let mut factor_cache: HashMap<usize, MPoly> = HashMap::new();
    let mut product_cache: HashMap<Vec<u8>, MPoly> = HashMap::new();
    let v = MPoly::var("v");
    let mut acc = MPoly::zero();
    for (profile, count) in profiles {
        let (eprime, sizes) = profile_sizes(profile);
        let prod = product_cache
            .entry(sizes.clone())
            .or_insert_with(|| {
                let mut p = MPoly::one();
                for &s in &sizes {
                    let f = factor_cache
                        .entry(s as usize)
                        .or_insert_with(|| component_factor(field, s as usize))
                        .clone();
                    p = p * f;
                }
                p
            })
            .clone();
        acc = acc + prod * v.pow(eprime as u32) * MPoly::constant(BigInt::from(*count));
    }
    acc
}

/// Sum over set partitions of the vertices into blocks that carry connected
/// spanning subgraphs. Restricting a subgraph to its component partition is a
/// bijection, so this equals the mask sum while needing only O(3^n) polynomial
/// operations — far cheaper than 2^edges for dense graphs.
fn potts_z_subsets(g: &Graph, field: &FieldSpec) -> MPoly {
    let n = g.n();
    let full: usize = (1 << n) - 1;
    let mut edges_within = vec![0u32; 1 << n];
    for &(a, b) in g.edges() {
        let need = 1usize << a | 1usize << b;
        for (s, c) in edges_within.iter_mut().enumerate() {
            if s & need == need {
                *c += 1;
            }
        }
    }
    let one_plus_v = MPoly::one() + MPoly::var("v");
    let max_e = *edges_within.last().unwrap() as usize;
    let mut open_pows = Vec::with_capacity(max_e + 1);
    open_pows.push(MPoly::one());
    for k in 1..=max_e {
        open_pows.push(open_pows[k - 1].clone() * one_plus_v.clone());
    }
    // connected[s]: generating polynomial in v of connected spanning
    // subgraphs of the induced subgraph on s, by peeling the block that
    // contains the lowest vertex of s.
    let mut connected = vec![MPoly::zero(); 1 << n];
    for s in 1..=full {
        let lowbit = s & s.wrapping_neg();
        let rest = s & !lowbit;
        let mut acc = open_pows[edges_within[s] as usize].clone();
        if rest != 0 {
            let mut sub = (rest - 1) & rest;
            loop {
                let t = sub | lowbit; // proper submask of s containing the low vertex
                if !connected[t].is_zero() {
                    acc = acc
                        - connected[t].clone() * open_pows[edges_within[s & !t] as usize].clone();
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & rest;
            }
        }
        connected[s] = acc;
    }
    let mut factors = Vec::with_capacity(n + 1);
    factors.push(MPoly::one());
    for s in 1..=n {
        factors.push(component_factor(field, s));
    }
    let mut dp = vec![MPoly::zero(); 1 << n];
    dp[0] = MPoly::one();
    for s in 1..=full {
        let lowbit = s & s.wrapping_neg();
        let rest = s & !lowbit;
        let mut acc = MPoly::zero();
        let mut sub = rest;
        loop {
            let t = sub | lowbit;
            if !connected[t].is_zero() {
                acc = acc
                    + connected[t].clone()
                        * factors[t.count_ones() as usize].clone()
                        * dp[s & !t].clone();
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        dp[s] = acc;
    }
    dp[full].clone()
}

/// Dense graphs with few vertices pay 2^edges in the mask sum but only
/// ~3^n here, so switch paths once the mask count dwarfs the subset count.
fn prefer_subsets(g: &Graph) -> bool {
    g.n() <= 12 && g.edge_count() > 16 && g.n() >= 1
}

/// Partition function Z(G,q,v,w) as an exact polynomial.
pub fn potts_z(g: &Graph) -> Result<MPoly> {
    potts_z_capped(g, None)
}

pub fn potts_z_capped(g: &Graph, cap: Option<usize>) -> Result<MPoly> {
    g.enumerate_masks(cap)?; // uniform cap contract regardless of path
    if prefer_subsets(g) {
        return Ok(potts_z_subsets(g, &FieldSpec::Uniform));
    }
    let profiles = subgraph_profiles(g, cap)?;
    Ok(z_from_profiles(&profiles, &FieldSpec::Uniform))
}

/// Weighted chromatic polynomial Ph(G,q,w) = Z(G,q,-1,w).
pub fn ph(g: &Graph) -> Result<MPoly> {
    ph_capped(g, None)
}

pub fn ph_capped(g: &Graph, cap: Option<usize>) -> Result<MPoly> {
    Ok(potts_z_capped(g, cap)?.substitute_one("v", &MPoly::constant(-1)))
}

/// Zero-field chromatic polynomial P(G,q) = Ph(G,q,1).
pub fn chromatic(g: &Graph) -> Result<MPoly> {
    Ok(ph(g)?.substitute_one("w", &MPoly::one()))
}

/// Direct state-sum oracle: sum over all q^n colorings of
/// prod_edges (1 + v [same colors]) * w^(vertices in color 1),
/// in exact rational arithmetic. Budgeted at q^n <= 1e8 states.
pub fn brute_force_z(g: &Graph, q: u32, v: &BigRational, w: &BigRational) -> Result<BigRational> {
    const BUDGET: f64 = 1e8;
    let n = g.n();
    if q == 0 {
        return Ok(BigRational::zero());
    }
    let states = (q as f64).powi(n as i32);
    if states > BUDGET {
        return Err(WchromError::BudgetExceeded { states, budget: BUDGET });
    }
    // Count states by (equal-endpoint edges, color-1 vertices), then weight.
    let mut counts: HashMap<(usize, usize), u64> = HashMap::new();
    let mut color = vec![0u32; n];
    let edges = g.edges();
    loop {
        let a = edges
            .iter()
            .filter(|&&(u, vtx)| color[u as usize] == color[vtx as usize])
            .count();
        let b = color.iter().filter(|&&c| c == 0).count();
        *counts.entry((a, b)).or_insert(0) += 1;
        // Odometer increment.
        let mut i = 0;
        loop {
            if i == n {
                let mut pairs: Vec<((usize, usize), u64)> = counts.into_iter().collect();
                pairs.sort();
                let one_plus_v = BigRational::one() + v;
                let mut acc = BigRational::zero();
                for ((a, b), c) in pairs {
                    let term = crate::poly::rational_pow(&one_plus_v, a as u16)
                        * crate::poly::rational_pow(w, b as u16)
                        * BigRational::from(BigInt::from(c));
                    acc += term;
                }
                return Ok(acc);
            }
            color[i] += 1;
            if color[i] == q {
                color[i] = 0;
                i += 1;
            } else {
                break;
            }
        }
    }
}

/// Tutte polynomial T(G,x,y) by the spanning-subgraph sum.
pub fn tutte(g: &Graph) -> Result<MPoly> {
    let range = g.enumerate_masks(None)?;
    let k = g.component_count();
    let mut counts: HashMap<(usize, usize), u64> = HashMap::new();
    for mask in range {
        let s = g.subgraph_summary(mask);
        *counts.entry((s.component_count - k, s.cyclomatic)).or_insert(0) += 1;
    }
    let mut pairs: Vec<((usize, usize), u64)> = counts.into_iter().collect();
    pairs.sort();
    let xm1 = MPoly::var("x") - MPoly::one();
    let ym1 = MPoly::var("y") - MPoly::one();
    let mut acc = MPoly::zero();
    for ((dk, c), cnt) in pairs {
        acc = acc
            + xm1.pow(dk as u32) * ym1.pow(c as u32) * MPoly::constant(BigInt::from(cnt));
    }
    Ok(acc)
}

/// Exact identity between the zero-field partition function and the Tutte
/// polynomial under q = (x-1)(y-1), v = y-1.
pub fn check_zt(g: &Graph) -> Result<bool> {
    let z_w1 = potts_z(g)?.substitute_one("w", &MPoly::one());
    let xm1 = MPoly::var("x") - MPoly::one();
    let ym1 = MPoly::var("y") - MPoly::one();
    let mut b = HashMap::new();
    b.insert("q".to_string(), xm1.clone() * ym1.clone());
    b.insert("v".to_string(), ym1.clone());
    let lhs = z_w1.substitute(&b);
    let rhs = xm1.pow(g.component_count() as u32) * ym1.pow(g.n() as u32) * tutte(g)?;
    Ok(lhs == rhs)
}

/// Numeric evaluation of the weighted Tutte-style normalization
/// U = (x-1)^(-k) (y-1)^(-n) Z at q=(x-1)(y-1), v=y-1.
pub fn u_eval(g: &Graph, x: &BigRational, y: &BigRational, w: &BigRational) -> Result<BigRational> {
    let xm1 = x - BigRational::one();
    let ym1 = y - BigRational::one();
    if xm1.is_zero() || ym1.is_zero() {
        return Err(WchromError::InvalidArgument(
            "u_eval requires x != 1 and y != 1".into(),
        ));
    }
    let z = potts_z(g)?;
    let mut b = HashMap::new();
    b.insert("q".to_string(), &xm1 * &ym1);
    b.insert("v".to_string(), ym1.clone());
    b.insert("w".to_string(), w.clone());
    let zval = z.eval_rational(&b)?;
    let scale = crate::poly::rational_pow(&xm1, g.component_count() as u16)
        * crate::poly::rational_pow(&ym1, g.n() as u16);
    Ok(zval / scale)
}

/// Deviation from the deletion-contraction recurrence:
/// Ph(G) - [Ph(G-e) - Ph(G/e)]. Zero identically at w = 1.
pub fn delta_ph(g: &Graph, edge_idx: usize) -> Result<MPoly> {
    let (a, b) = *g
        .edges()
        .get(edge_idx)
        .ok_or_else(|| WchromError::InvalidArgument(format!("edge index {edge_idx} out of range")))?;
    if a == b {
        return Err(WchromError::InvalidArgument(
            "deletion-contraction deviation is undefined on a loop".into(),
        ));
    }
    let deleted = ph(&g.delete_edge(edge_idx)?)?;
    let contracted = ph(&g.contract_edge(edge_idx)?)?;
    Ok(ph(g)? - (deleted - contracted))
}

/// Generalized partition function with per-color or symbolic-multiplicity
/// fields and optionally per-edge couplings.
pub fn potts_z_general(g: &Graph, field: &FieldSpec, coupling: &CouplingSpec) -> Result<MPoly> {
    if let FieldSpec::PerColor(nc) = field {
        if *nc == 0 {
            return Err(WchromError::InvalidArgument("palette must be nonempty".into()));
        }
    }
    match coupling {
        CouplingSpec::Uniform => {
            g.enumerate_masks(None)?;
            if prefer_subsets(g) {
                return Ok(potts_z_subsets(g, field));
            }
            let profiles = subgraph_profiles(g, None)?;
            Ok(z_from_profiles(&profiles, field))
        }
        CouplingSpec::PerEdge => {
            // No profile compression: each mask carries its own edge monomial.
            let e = g.edge_count();
            if e > 20 {
                return Err(WchromError::EnumerationCap { edges: e, cap: 20 });
            }
            let mut factor_cache: HashMap<usize, MPoly> = HashMap::new();
            let mut acc = MPoly::zero();
            for mask in g.enumerate_masks(Some(20))? {
                let s = g.subgraph_summary(mask);
                let mut term = MPoly::one();
                for i in 0..e {
                    if mask >> i & 1 == 1 {
                        term = term * MPoly::var(&format!("v{}", i + 1));
                    }
                }
                for &cs in &s.comp_sizes {
                    let f = factor_cache
                        .entry(cs)
                        .or_insert_with(|| component_factor(field, cs))
                        .clone();
                    term = term * f;
                }
                acc = acc + term;
            }
            Ok(acc)
        }
    }
}

/// Weighted count of proper colorings with per-vertex admissible color lists;
/// colors are 1-based and weight the monomial w`p` per vertex in color p.
pub fn list_coloring_ph(g: &Graph, lists: &[Vec<usize>]) -> Result<MPoly> {
    if lists.len() != g.n() {
        return Err(WchromError::InvalidArgument(format!(
            "expected {} color lists, got {}",
            g.n(),
            lists.len()
        )));
    }
    if lists.iter().any(|l| l.is_empty()) || g.has_loop() {
        return Ok(MPoly::zero());
    }
    let n = g.n();
    let mut idx = vec![0usize; n];
    let mut acc = MPoly::zero();
    loop {
        let proper = g
            .edges()
            .iter()
            .all(|&(u, v)| lists[u as usize][idx[u as usize]] != lists[v as usize][idx[v as usize]]);
        if proper {
            let mut term = MPoly::one();
            for (vtx, &i) in idx.iter().enumerate() {
                term = term * MPoly::var(&format!("w{}", lists[vtx][i]));
            }
            acc = acc + term;
        }
        let mut i = 0;
        loop {
            if i == n {
                return Ok(acc);
            }
            idx[i] += 1;
            if idx[i] == lists[i].len() {
                idx[i] = 0;
                i += 1;
            } else {
                break;
            }
        }
    }
}

/// Multiset of values Ph must divide by for a connected graph: the falling
/// factorial guard (q-1)...(q-(chi-1)) built from a known chromatic number.
pub fn chromatic_factor(chi: usize) -> MPoly {
    let q = MPoly::var("q");
    let mut acc = MPoly::one();
    for j in 1..chi {
        acc = acc * (q.clone() - MPoly::constant(BigInt::from(j)));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_family, seeded_graph, FamilySpec};
    use num_traits::FromPrimitive;

    fn fam(s: &str) -> Graph {
        build_family(&FamilySpec::parse(s).unwrap()).unwrap()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn p(s: &str) -> MPoly {
        MPoly::parse(s).unwrap()
    }

    #[test]
    fn z_empty_graphs() {
        for n in 1..=4 {
            let g = fam(&format!("N:{n}"));
            assert_eq!(potts_z(&g).unwrap(), p("(q-1+w)").pow(n as u32));
        }
    }

    #[test]
    fn z_line2_and_c2() {
        let zl2 = potts_z(&fam("L:2")).unwrap();
        assert_eq!(zl2, p("(q-1+w)^2 + v*(q-1+w^2)"));
        let zc2 = potts_z(&fam("C:2")).unwrap();
        assert_eq!(zc2.clone() - zl2, p("v*(v+1)*(q-1+w^2)"));
    }

    #[test]
    fn ph_goldens() {
        assert_eq!(
            ph(&fam("C:3")).unwrap().to_canonical_string(),
            "q^3 + 3*q^2*w - 6*q^2 - 9*q*w + 11*q + 6*w - 6"
        );
        assert_eq!(ph(&fam("L:1")).unwrap(), p("q-1+w"));
        assert_eq!(ph(&fam("L:2")).unwrap(), p("(q-1)*(q+2*(w-1))"));
        assert_eq!(
            ph(&fam("L:3")).unwrap(),
            p("(q-1)*(q^2+(3*w-4)*q+(w-1)*(w-4))")
        );
        assert_eq!(
            ph(&fam("L:4")).unwrap(),
            p("(q-1)*(q+w-2)*(q^2+(3*w-4)*q-4*(w-1))")
        );
    }

    #[test]
    fn loops_kill_ph_but_not_z() {
        let c1 = fam("C:1");
        assert!(ph(&c1).unwrap().is_zero());
        let z = potts_z(&c1).unwrap();
        assert_eq!(z, p("(1+v)*(q-1+w)"));
    }

    #[test]
    fn multiedge_insensitive() {
        let wh3 = fam("Wh:3");
        let k3 = fam("K:3");
        assert_eq!(ph(&wh3).unwrap(), ph(&k3).unwrap());
        for seed in [3u64, 11, 19] {
            let g = seeded_graph(seed);
            assert_eq!(ph(&g).unwrap(), ph(&g.reduce_multiedges()).unwrap());
        }
    }

    #[test]
    fn disjoint_union_multiplies() {
        let a = fam("L:2");
        let b = fam("C:3");
        let u = a.disjoint_union(&b);
        assert_eq!(ph(&u).unwrap(), ph(&a).unwrap() * ph(&b).unwrap());
        assert_eq!(potts_z(&u).unwrap(), potts_z(&a).unwrap() * potts_z(&b).unwrap());
    }

    #[test]
    fn q1_collapses() {
        // Z(G,1,v,w) = (1+v)^e w^n for any graph.
        for s in ["L:3", "C:4", "K:4"] {
            let g = fam(s);
            let z1 = potts_z(&g).unwrap().substitute_one("q", &MPoly::one());
            let expect = p("(1+v)").pow(g.edge_count() as u32) * MPoly::var("w").pow(g.n() as u32);
            assert_eq!(z1, expect);
            // Ph(G,1,w) = 0 whenever G has an edge.
            assert!(ph(&g).unwrap().substitute_one("q", &MPoly::one()).is_zero());
        }
    }

    #[test]
    fn q0_has_w_minus_1_factor() {
        for s in ["L:3", "C:4", "K:4", "S:5"] {
            let g = fam(s);
            let z0 = potts_z(&g).unwrap().substitute_one("q", &MPoly::zero());
            assert!(z0.is_divisible_by(&p("w-1")), "{s}: Z(0,v,w)");
            let ph0 = ph(&g).unwrap().substitute_one("q", &MPoly::zero());
            assert!(ph0.is_divisible_by(&p("w-1")), "{s}: Ph(0,w)");
        }
    }

    #[test]
    fn chromatic_factors_divide() {
        // chi(K_4)=4, chi(C_5)=3, chi(L_4)=2.
        assert!(ph(&fam("K:4")).unwrap().is_divisible_by(&chromatic_factor(4)));
        assert!(ph(&fam("C:5")).unwrap().is_divisible_by(&chromatic_factor(3)));
        assert!(ph(&fam("L:4")).unwrap().is_divisible_by(&chromatic_factor(2)));
        // At w=0 one extra factor appears: Ph(K_4,q,0) = (q-1)(q-2)(q-3)(q-4).
        let w0 = ph(&fam("K:4")).unwrap().substitute_one("w", &MPoly::zero());
        assert_eq!(w0, p("(q-1)*(q-2)*(q-3)*(q-4)"));
    }

    #[test]
    fn brute_force_examples() {
        // Ph(C_4,2,3): two proper 2-colorings, each with two color-1 vertices.
        let c4 = fam("C:4");
        assert_eq!(
            brute_force_z(&c4, 2, &rat(-1, 1), &rat(3, 1)).unwrap(),
            rat(18, 1)
        );
        assert!(matches!(
            brute_force_z(&fam("K:8"), 100, &rat(1, 1), &rat(1, 1)),
            Err(WchromError::BudgetExceeded { .. })
        ));
        assert_eq!(
            brute_force_z(&c4, 0, &rat(1, 1), &rat(2, 1)).unwrap(),
            BigRational::zero()
        );
    }

    #[test]
    fn engine_matches_oracle_on_seeded_graphs() {
        // Smaller copy of the acceptance sweep: exact agreement at mixed
        // rational points, including loops and parallel edges.
        for seed in [0u64, 1, 2, 3, 4] {
            let g = seeded_graph(seed);
            let z = potts_z(&g).unwrap();
            for q in 1..=4u32 {
                for (vn, vd) in [(-1i64, 1i64), (-1, 2), (1, 1)] {
                    for (wn, wd) in [(0i64, 1i64), (1, 3), (2, 1)] {
                        let v = rat(vn, vd);
                        let w = rat(wn, wd);
                        let mut b = HashMap::new();
                        b.insert("q".to_string(), BigRational::from_i64(q as i64).unwrap());
                        b.insert("v".to_string(), v.clone());
                        b.insert("w".to_string(), w.clone());
                        assert_eq!(
                            z.eval_rational(&b).unwrap(),
                            brute_force_z(&g, q, &v, &w).unwrap(),
                            "seed {seed} q {q}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn subset_and_mask_paths_agree() {
        // K_7 sits above the path-switch threshold; force both algorithms
        // and demand identical polynomials, multigraphs and loops included.
        let k7 = fam("K:7");
        assert!(prefer_subsets(&k7) && !prefer_subsets(&fam("K:5")));
        let via_masks = z_from_profiles(&subgraph_profiles(&k7, None).unwrap(), &FieldSpec::Uniform);
        assert_eq!(potts_z_subsets(&k7, &FieldSpec::Uniform), via_masks);
        for seed in [5u64, 7, 13, 21] {
            let g = seeded_graph(seed);
            let masks = z_from_profiles(&subgraph_profiles(&g, None).unwrap(), &FieldSpec::Uniform);
            assert_eq!(potts_z_subsets(&g, &FieldSpec::Uniform), masks, "seed {seed}");
        }
        let wh5 = fam("Wh:5");
        let masks = z_from_profiles(&subgraph_profiles(&wh5, None).unwrap(), &FieldSpec::SColor);
        assert_eq!(potts_z_subsets(&wh5, &FieldSpec::SColor), masks);
    }

    #[test]
    fn tutte_values() {
        // Any 4-vertex tree has T = x^3; C_3 and C_4 pick up y terms.
        assert_eq!(tutte(&fam("L:4")).unwrap(), p("x^3"));
        assert_eq!(tutte(&fam("S:4")).unwrap(), p("x^3"));
        assert_eq!(tutte(&fam("C:3")).unwrap(), p("x^2+x+y"));
        assert_eq!(tutte(&fam("C:4")).unwrap(), p("x^3+x^2+x+y"));
    }

    #[test]
    fn zt_identity() {
        for s in ["L:3", "C:4", "K:4", "Wh:4", "C:2", "C:1"] {
            assert!(check_zt(&fam(s)).unwrap(), "{s}");
        }
        let mut with_isolated = fam("C:3").disjoint_union(&fam("N:2"));
        with_isolated = with_isolated.named("c3+2pts");
        assert!(check_zt(&with_isolated).unwrap());
    }

    #[test]
    fn u_eval_cases() {
        let l4 = fam("L:4");
        let s4 = fam("S:4");
        // At w=1 the normalized sum reduces to the Tutte polynomial.
        assert_eq!(u_eval(&l4, &rat(3, 1), &rat(2, 1), &rat(1, 1)).unwrap(), rat(27, 1));
        let c4 = fam("C:4");
        assert_eq!(u_eval(&c4, &rat(2, 1), &rat(3, 1), &rat(1, 1)).unwrap(), rat(17, 1));
        // Equal Tutte polynomials but distinct weighted refinements.
        assert_eq!(tutte(&l4).unwrap(), tutte(&s4).unwrap());
        let ul = u_eval(&l4, &rat(3, 1), &rat(2, 1), &rat(2, 1)).unwrap();
        let us = u_eval(&s4, &rat(3, 1), &rat(2, 1), &rat(2, 1)).unwrap();
        assert_ne!(ul, us);
        assert!(u_eval(&l4, &rat(1, 1), &rat(2, 1), &rat(1, 1)).is_err());
    }

    #[test]
    fn delcon_deviation_closed_forms() {
        let dl3 = delta_ph(&fam("L:3"), 0).unwrap();
        assert_eq!(dl3, p("-w*(w-1)*(q-1)"));
        let dc3 = delta_ph(&fam("C:3"), 0).unwrap();
        assert_eq!(dc3, p("-w*(w-1)*(q-1)"));
        let dc4 = delta_ph(&fam("C:4"), 0).unwrap();
        assert_eq!(dc4, p("-w*(w-1)*(q-1)*(q-2)"));
        // L_4 edges: (0,1) outer, (1,2) middle.
        let outer = delta_ph(&fam("L:4"), 0).unwrap();
        assert_eq!(outer, p("-w*(w-1)*(q-1)*(q+w-2)"));
        let middle = delta_ph(&fam("L:4"), 1).unwrap();
        assert_eq!(middle, p("-w*(w-1)*(q-1)^2"));
        // Always divisible by w(w-1); vanishes at w=1.
        for (g, i) in [(fam("S:5"), 0usize), (fam("K:4"), 2), (fam("Wh:4"), 1)] {
            let d = delta_ph(&g, i).unwrap();
            assert!(d.is_divisible_by(&p("w*(w-1)")));
            assert!(d.substitute_one("w", &MPoly::one()).is_zero());
        }
        assert!(delta_ph(&fam("C:1"), 0).is_err());
    }

    #[test]
    fn general_engine_reductions() {
        let c3 = fam("C:3");
        // One distinguished color out of three: w1=w, w2=w3=1 at q=3.
        let per = potts_z_general(&c3, &FieldSpec::PerColor(3), &CouplingSpec::Uniform).unwrap();
        let mut b = HashMap::new();
        b.insert("w1".to_string(), MPoly::var("w"));
        b.insert("w2".to_string(), MPoly::one());
        b.insert("w3".to_string(), MPoly::one());
        let specialized = per.substitute(&b);
        let base = potts_z(&c3).unwrap().substitute_one("q", &MPoly::constant(3));
        assert_eq!(specialized, base);

        // Symbolic multiplicity: s=1 recovers the standard engine.
        let sgen = potts_z_general(&c3, &FieldSpec::SColor, &CouplingSpec::Uniform).unwrap();
        assert_eq!(sgen.substitute_one("s", &MPoly::one()), potts_z(&c3).unwrap());
        // w=1 or s=0 drop the field entirely.
        let zero_field = potts_z(&c3).unwrap().substitute_one("w", &MPoly::one());
        assert_eq!(sgen.substitute_one("w", &MPoly::one()), zero_field);
        assert_eq!(sgen.substitute_one("s", &MPoly::zero()), zero_field);
        // w=0 shifts q by s.
        let qs = MPoly::var("q") - MPoly::var("s");
        assert_eq!(
            sgen.substitute_one("w", &MPoly::zero()),
            zero_field.substitute_one("q", &qs)
        );
        // s=q turns the field into an overall w^n.
        assert_eq!(
            sgen.substitute_one("s", &MPoly::var("q")),
            zero_field.clone() * MPoly::var("w").pow(3)
        );
    }

    #[test]
    fn per_edge_couplings() {
        let l2 = fam("L:2");
        let z = potts_z_general(&l2, &FieldSpec::Uniform, &CouplingSpec::PerEdge).unwrap();
        assert_eq!(z, p("(q-1+w)^2 + v1*(q-1+w^2)"));
        let c3 = fam("C:3");
        let zc3 = potts_z_general(&c3, &FieldSpec::Uniform, &CouplingSpec::PerEdge).unwrap();
        // Collapsing the per-edge couplings recovers the uniform engine.
        let mut b = HashMap::new();
        for i in 1..=3 {
            b.insert(format!("v{i}"), MPoly::var("v"));
        }
        assert_eq!(zc3.substitute(&b), potts_z(&c3).unwrap());
    }

    #[test]
    fn list_coloring_examples() {
        let c3 = fam("C:3");
        // Pair lists around a triangle: exactly the two cyclic orientations.
        let lists = vec![vec![1, 2], vec![2, 3], vec![1, 3]];
        let got = list_coloring_ph(&c3, &lists).unwrap();
        assert_eq!(got, p("2*w1*w2*w3"));
        // Nested lists force a unique coloring (3,2,1).
        let lists2 = vec![vec![1, 2, 3], vec![1, 2], vec![1]];
        let got2 = list_coloring_ph(&c3, &lists2).unwrap();
        assert_eq!(got2, p("w1*w2*w3"));
        let mut one = HashMap::new();
        for i in 1..=3 {
            one.insert(format!("w{i}"), BigRational::one());
        }
        assert_eq!(got2.eval_rational(&one).unwrap(), BigRational::one());
        // A loop admits no proper coloring.
        let c1 = fam("C:1");
        assert!(list_coloring_ph(&c1, &[vec![1, 2]]).unwrap().is_zero());
    }
}
