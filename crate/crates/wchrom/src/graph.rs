//! Multigraphs with loops, the named graph families, and spanning-subgraph
//! bookkeeping (edge masks, component summaries).
//!
//! Edges are stored normalized (`u <= v`) and sorted, so edge indices, masks,
//! and printed edge lists are reproducible across runs.

use crate::error::{Result, WchromError};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::fmt::Write as _;

pub const DEFAULT_EDGE_CAP: usize = 30;

/// Hard ceiling regardless of overrides; masks are u64 and 2^e summands must
/// stay enumerable.
pub const MAX_EDGE_CAP: usize = 62;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(u32, u32)>,
    name: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgraphSummary {
    pub edge_count: usize,
    pub component_count: usize,
    /// Component vertex counts, sorted descending.
    pub comp_sizes: Vec<usize>,
    /// Independent cycles: e' - n + k'.
    pub cyclomatic: usize,
}

/// Named graph families. Sizes are total vertex counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Empty(usize),
    Line(usize),
    Circuit(usize),
    Star(usize),
    Complete(usize),
    Wheel(usize),
    /// Path with one extra leaf on the second vertex; n in {5, 6}.
    TreeY(usize),
    /// Five-vertex path with a leaf on the middle vertex.
    TreeIsoY6,
    /// Four-vertex path with one leaf on each interior vertex.
    TreeH6,
    /// Four-vertex path with two leaves on the second vertex.
    TreeCross6,
    /// Cyclic square-lattice strip, `ly` rows by `m` columns.
    SquareStripCyclic { ly: usize, m: usize },
}

impl FamilySpec {
    /// Parse strings like `L:5`, `C:4`, `Wh:5`, `IsoY:6`, `sqcyc:2x4`.
    pub fn parse(text: &str) -> Result<FamilySpec> {
        let bad = || WchromError::InvalidFamily(text.to_string());
        let (kind, size) = text.split_once(':').ok_or_else(bad)?;
        let spec = match kind {
            "sqcyc" => {
                let (ly, m) = size.split_once('x').ok_or_else(bad)?;
                FamilySpec::SquareStripCyclic {
                    ly: ly.parse().map_err(|_| bad())?,
                    m: m.parse().map_err(|_| bad())?,
                }
            }
            _ => {
                let n: usize = size.parse().map_err(|_| bad())?;
                match kind {
                    "N" => FamilySpec::Empty(n),
                    "L" => FamilySpec::Line(n),
                    "C" => FamilySpec::Circuit(n),
                    "S" => FamilySpec::Star(n),
                    "K" => FamilySpec::Complete(n),
                    "Wh" => FamilySpec::Wheel(n),
                    "Y" => FamilySpec::TreeY(n),
                    "IsoY" if n == 6 => FamilySpec::TreeIsoY6,
                    "H" if n == 6 => FamilySpec::TreeH6,
                    "Cr" if n == 6 => FamilySpec::TreeCross6,
                    _ => return Err(bad()),
                }
            }
        };
        spec.validate().map_err(|_| bad())?;
        Ok(spec)
    }

    fn validate(&self) -> Result<()> {
        let ok = match *self {
            FamilySpec::Empty(n) | FamilySpec::Line(n) | FamilySpec::Circuit(n)
            | FamilySpec::Complete(n) => n >= 1,
            FamilySpec::Star(n) => n >= 1,
            FamilySpec::Wheel(n) => n >= 3,
            FamilySpec::TreeY(n) => n == 5 || n == 6,
            FamilySpec::TreeIsoY6 | FamilySpec::TreeH6 | FamilySpec::TreeCross6 => true,
            FamilySpec::SquareStripCyclic { ly, m } => ly >= 1 && m >= 1,
        };
        if ok {
            Ok(())
        } else {
            Err(WchromError::InvalidFamily(format!("{self:?}")))
        }
    }

    pub fn label(&self) -> String {
        match *self {
            FamilySpec::Empty(n) => format!("N:{n}"),
            FamilySpec::Line(n) => format!("L:{n}"),
            FamilySpec::Circuit(n) => format!("C:{n}"),
            FamilySpec::Star(n) => format!("S:{n}"),
            FamilySpec::Complete(n) => format!("K:{n}"),
            FamilySpec::Wheel(n) => format!("Wh:{n}"),
            FamilySpec::TreeY(n) => format!("Y:{n}"),
            FamilySpec::TreeIsoY6 => "IsoY:6".to_string(),
            FamilySpec::TreeH6 => "H:6".to_string(),
            FamilySpec::TreeCross6 => "Cr:6".to_string(),
            FamilySpec::SquareStripCyclic { ly, m } => format!("sqcyc:{ly}x{m}"),
        }
    }
}

pub fn build_family(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    let g = match *spec {
        FamilySpec::Empty(n) => Graph::new(n, vec![]),
        FamilySpec::Line(n) => {
            Graph::new(n, (1..n).map(|i| (i as u32 - 1, i as u32)).collect())
        }
        FamilySpec::Circuit(n) => {
            let mut edges: Vec<(u32, u32)> =
                (1..n).map(|i| (i as u32 - 1, i as u32)).collect();
            edges.push((n as u32 - 1, 0));
            Graph::new(n, edges)
        }
        FamilySpec::Star(n) => Graph::new(n, (1..n).map(|i| (0, i as u32)).collect()),
        FamilySpec::Complete(n) => {
            let mut edges = Vec::new();
            for i in 0..n as u32 {
                for j in i + 1..n as u32 {
                    edges.push((i, j));
                }
            }
            Graph::new(n, edges)
        }
        FamilySpec::Wheel(n) => {
            // Hub 0 joined to every rim vertex of a circuit on 1..n-1.
            let rim = n - 1;
            let mut edges: Vec<(u32, u32)> = (1..=rim as u32).map(|i| (0, i)).collect();
            for i in 1..rim {
                edges.push((i as u32, i as u32 + 1));
            }
            edges.push((rim as u32, 1));
            Graph::new(n, edges)
        }
        FamilySpec::TreeY(n) => {
            let mut edges: Vec<(u32, u32)> =
                (1..n - 1).map(|i| (i as u32 - 1, i as u32)).collect();
            edges.push((1, n as u32 - 1));
            Graph::new(n, edges)
        }
        FamilySpec::TreeIsoY6 => {
            Graph::new(6, vec![(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)])
        }
        FamilySpec::TreeH6 => Graph::new(6, vec![(0, 1), (1, 2), (2, 3), (1, 4), (2, 5)]),
        FamilySpec::TreeCross6 => {
            Graph::new(6, vec![(0, 1), (1, 2), (2, 3), (1, 4), (1, 5)])
        }
        FamilySpec::SquareStripCyclic { ly, m } => {
            let idx = |x: usize, y: usize| (x * ly + y) as u32;
            let mut edges = Vec::new();
            for x in 0..m {
                for y in 0..ly.saturating_sub(1) {
                    edges.push((idx(x, y), idx(x, y + 1)));
                }
                for y in 0..ly {
                    edges.push((idx(x, y), idx((x + 1) % m, y)));
                }
            }
            Graph::new(ly * m, edges)
        }
    };
    Ok(g.named(spec.label()))
}

impl Graph {
    pub fn new(n: usize, edges: Vec<(u32, u32)>) -> Graph {
        let mut edges: Vec<(u32, u32)> = edges
            .into_iter()
            .map(|(a, b)| if a <= b { (a, b) } else { (b, a) })
            .collect();
        edges.sort_unstable();
        for &(a, b) in &edges {
            assert!((b as usize) < n.max(1), "edge ({a},{b}) out of range for n={n}");
        }
        Graph { n, edges, name: None }
    }

    pub fn named(mut self, name: impl Into<String>) -> Graph {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn has_loop(&self) -> bool {
        self.edges.iter().any(|&(a, b)| a == b)
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0usize; self.n];
        for &(a, b) in &self.edges {
            d[a as usize] += 1;
            d[b as usize] += 1;
        }
        d
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// Number of connected components of the full graph.
    pub fn component_count(&self) -> usize {
        self.summary_full().component_count
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.component_count() == 1
    }

    /// Collapse parallel edges to single copies. Loops are kept (one copy per
    /// looped vertex); vertex set is unchanged.
    pub fn reduce_multiedges(&self) -> Graph {
        let mut edges = self.edges.clone();
        edges.dedup();
        Graph { n: self.n, edges, name: self.name.clone() }
    }

    pub fn delete_edge(&self, idx: usize) -> Result<Graph> {
        if idx >= self.edges.len() {
            return Err(WchromError::InvalidArgument(format!("edge index {idx} out of range")));
        }
        let mut edges = self.edges.clone();
        edges.remove(idx);
        Ok(Graph { n: self.n, edges, name: None })
    }

    /// Merge the endpoints of edge `idx` and drop that one copy. Parallel
    /// copies of the contracted edge become loops; everything else is kept.
    /// Contracting a loop just removes it.
    pub fn contract_edge(&self, idx: usize) -> Result<Graph> {
        if idx >= self.edges.len() {
            return Err(WchromError::InvalidArgument(format!("edge index {idx} out of range")));
        }
        let (a, b) = self.edges[idx];
        if a == b {
            return self.delete_edge(idx);
        }
        let mut edges = Vec::with_capacity(self.edges.len() - 1);
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if i == idx {
                continue;
            }
            let remap = |x: u32| {
                let x = if x == b { a } else { x };
                if x > b { x - 1 } else { x }
            };
            edges.push((remap(u), remap(v)));
        }
        Ok(Graph::new(self.n - 1, edges))
    }

    /// Disjoint union with vertex labels of `other` shifted past `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n as u32;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(a, b)| (a + off, b + off)));
        Graph::new(self.n + other.n, edges)
    }

    /// Effective enumeration cap: explicit override, else `WCHROM_CAP`, else
    /// the default. Clamped to the hard ceiling.
    pub fn effective_cap(explicit: Option<usize>) -> usize {
        let cap = explicit.or_else(|| {
            std::env::var("WCHROM_CAP").ok().and_then(|s| s.parse().ok())
        });
        cap.unwrap_or(DEFAULT_EDGE_CAP).min(MAX_EDGE_CAP)
    }

    /// Range of edge-subset masks, guarded by the enumeration cap. The range
    /// can be split and consumed from multiple workers.
    pub fn enumerate_masks(&self, cap: Option<usize>) -> Result<std::ops::Range<u64>> {
        let cap = Graph::effective_cap(cap);
        let e = self.edges.len();
        if e > cap {
            return Err(WchromError::EnumerationCap { edges: e, cap });
        }
        Ok(0..1u64 << e)
    }

    /// Component structure of the spanning subgraph selected by `mask`
    /// (bit i keeps edge i).
    pub fn subgraph_summary(&self, mask: u64) -> SubgraphSummary {
        let mut dsu = Dsu::new(self.n);
        let mut edge_count = 0usize;
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                edge_count += 1;
                dsu.union(a as usize, b as usize);
            }
        }
        let mut comp_sizes = dsu.component_sizes();
        comp_sizes.sort_unstable_by(|a, b| b.cmp(a));
        let component_count = comp_sizes.len();
        SubgraphSummary {
            edge_count,
            component_count,
            comp_sizes,
            cyclomatic: edge_count + component_count - self.n,
        }
    }

    pub fn summary_full(&self) -> SubgraphSummary {
        let e = self.edges.len();
        let mask = if e >= 64 { u64::MAX } else { (1u64 << e) - 1 };
        self.subgraph_summary(mask)
    }

    /// Render as the edge-list file format: `n m` header then `u v` lines.
    pub fn to_edge_list_string(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{} {}", self.n, self.edges.len());
        for &(a, b) in &self.edges {
            let _ = writeln!(s, "{a} {b}");
        }
        s
    }

    /// Parse the edge-list file format. Blank lines and `#` comments are
    /// ignored.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| WchromError::EdgeListParse("empty input".into()))?;
        let mut it = header.split_whitespace();
        let n: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| WchromError::EdgeListParse("bad vertex count".into()))?;
        let m: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| WchromError::EdgeListParse("bad edge count".into()))?;
        if it.next().is_some() {
            return Err(WchromError::EdgeListParse("trailing tokens in header".into()));
        }
        let mut edges = Vec::with_capacity(m);
        for line in lines {
            let mut it = line.split_whitespace();
            let a: u32 = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| WchromError::EdgeListParse(format!("bad edge line: {line}")))?;
            let b: u32 = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| WchromError::EdgeListParse(format!("bad edge line: {line}")))?;
            if it.next().is_some() {
                return Err(WchromError::EdgeListParse(format!("trailing tokens: {line}")));
            }
            if a as usize >= n || b as usize >= n {
                return Err(WchromError::EdgeListParse(format!(
                    "edge ({a},{b}) out of range for n={n}"
                )));
            }
            edges.push((a, b));
        }
        if edges.len() != m {
            return Err(WchromError::EdgeListParse(format!(
                "expected {m} edges, found {}",
                edges.len()
            )));
        }
        Ok(Graph::new(n, edges))
    }
}

/// Union-find with union by size and path halving.
pub struct Dsu {
    parent: Vec<u32>,
    size: Vec<u32>,
}

impl Dsu {
    pub fn new(n: usize) -> Dsu {
        Dsu { parent: (0..n as u32).collect(), size: vec![1; n] }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            let gp = self.parent[self.parent[x] as usize];
            self.parent[x] = gp;
            x = gp as usize;
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra as u32;
        self.size[ra] += self.size[rb];
        true
    }

    pub fn component_sizes(&mut self) -> Vec<usize> {
        let n = self.parent.len();
        let mut sizes = Vec::new();
        for x in 0..n {
            if self.find(x) == x {
                sizes.push(self.size[x] as usize);
            }
        }
        sizes
    }
}

/// Deterministic pseudorandom multigraph used by the self-check suites:
/// 2..=6 vertices, Bernoulli edges, occasionally a parallel edge or loop.
pub fn seeded_graph(seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(2..=6usize);
    let p = rng.gen_range(0.25..0.85f64);
    let mut edges = Vec::new();
    for i in 0..n as u32 {
        for j in i + 1..n as u32 {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    if !edges.is_empty() && rng.gen_bool(0.25) {
        let k = rng.gen_range(0..edges.len());
        edges.push(edges[k]);
    }
    if rng.gen_bool(0.15) {
        let v = rng.gen_range(0..n as u32);
        edges.push((v, v));
    }
    Graph::new(n, edges).named(format!("rand:{seed}"))
}
