//! Command-line front end: argument parsing, dispatch, deterministic text and
//! CSV emission, and process exit codes (0 ok, 2 usage, 3 cap/budget, 4
//! internal failure).

use crate::error::{Result, WchromError};
use crate::family;
use crate::graph::{build_family, FamilySpec, Graph};
use crate::partition;
use crate::poly::{parse_rational, MPoly};
use crate::spectra::{self, ScanGrid, SpectrumFamily};
use crate::strip::{self, TableKind};
use crate::zeros;
use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "wchrom",
    version,
    about = "Exact weighted chromatic polynomials and field-dependent partition functions"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Worker threads (default: available parallelism)
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,
    /// Edge-enumeration cap (overrides the WCHROM_CAP environment variable)
    #[arg(long, global = true, value_name = "E")]
    cap: Option<usize>,
    /// Write output to FILE instead of stdout
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute a polynomial for a graph and print its canonical text
    Compute(ComputeArgs),
    /// Closed family formula next to the engine result, with a match verdict
    Family(FamilyArgs),
    /// Strip multiplicity tables with a diff against independent generators
    Tables(TablesArgs),
    /// Certified zeros of a one-variable slice, as CSV
    Zeros(ZerosArgs),
    /// Dominant-eigenvalue scan of the complex q-plane, as CSV
    Locus(LocusArgs),
    /// Self-contained invariant and conjecture suite
    Check(CheckArgs),
    /// Direct coloring-sum evaluation at a single point
    Oracle(OracleArgs),
}

#[derive(Args)]
struct SourceArgs {
    /// Edge-list file: `n m` header line, then one `u v` pair per line
    #[arg(long, value_name = "FILE")]
    graph: Option<PathBuf>,
    /// Built-in family spec such as C:5, L:4, K:6, Wh:5, Y:6, sqcyc:2x4
    #[arg(long, value_name = "SPEC")]
    family: Option<String>,
}

#[derive(Args)]
struct ComputeArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Variable set: `q` (zero-field), `q,w` (field), or `q,v,w` (full)
    #[arg(long, default_value = "q,w", value_name = "VARS")]
    vars: String,
    /// Fix a variable, e.g. `--fix w=1` (repeatable; rationals like 1/3 or 0.5)
    #[arg(long, value_name = "VAR=VALUE", allow_hyphen_values = true)]
    fix: Vec<String>,
}

#[derive(Args)]
struct FamilyArgs {
    /// Family spec with a closed form: L:n, S:n, C:n, K:n, Wh:n, N:n, sqcyc:1xm, sqcyc:2xm
    #[arg(long, value_name = "SPEC")]
    family: String,
}

#[derive(Args)]
struct TablesArgs {
    /// Table kind: nph, nz, nzh, or np
    #[arg(long, default_value = "nph", value_name = "KIND")]
    which: String,
    /// Largest strip width to print (1..=8)
    #[arg(long, default_value_t = 8, value_name = "L")]
    max: usize,
}

#[derive(Args)]
struct ZerosArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Fix one variable and solve in the other: `w=0.5` or `q=2.5`
    #[arg(long, value_name = "VAR=VALUE")]
    fix: String,
    /// Sweep the fixed variable over `lo:hi:steps` instead of a single value
    #[arg(long, value_name = "LO:HI:STEPS", allow_hyphen_values = true)]
    sweep: Option<String>,
}

#[derive(Args)]
struct LocusArgs {
    /// Eigenvalue family: line, circuit, wheel, or ladder
    #[arg(long, value_name = "NAME")]
    family: String,
    /// Field value (rational or decimal)
    #[arg(long, default_value = "1", value_name = "W", allow_hyphen_values = true)]
    w: String,
    /// Scan window `re_min:re_max:im_min:im_max`
    #[arg(long, default_value = "-3:5:-4:4", value_name = "WINDOW", allow_hyphen_values = true)]
    window: String,
    /// Grid resolution per axis
    #[arg(long, default_value_t = 200, value_name = "N")]
    grid: usize,
}

#[derive(Args)]
struct CheckArgs {
    /// Suite name or `all`
    #[arg(long, default_value = "all", value_name = "NAME")]
    which: String,
}

#[derive(Args)]
struct OracleArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Number of colors
    #[arg(long, value_name = "Q")]
    q: u32,
    /// Edge coupling (rational or decimal)
    #[arg(long, default_value = "-1", value_name = "V", allow_hyphen_values = true)]
    v: String,
    /// Field weight (rational or decimal)
    #[arg(long, default_value = "1", value_name = "W", allow_hyphen_values = true)]
    w: String,
}

/// Entry point for the binary: returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    if let Some(n) = cli.threads {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match dispatch(&cli) {
        Ok((text, code)) => {
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, &text) {
                    eprintln!("error: io: cannot write {}: {e}", path.display());
                    return 4;
                }
            } else {
                print!("{text}");
            }
            code
        }
        Err(err) => {
            eprintln!("error: {}: {err}", error_slug(&err));
            error_exit(&err)
        }
    }
}

fn dispatch(cli: &Cli) -> Result<(String, i32)> {
    match &cli.cmd {
        Cmd::Compute(a) => cmd_compute(a, cli.cap).map(|t| (t, 0)),
        Cmd::Family(a) => cmd_family(a, cli.cap),
        Cmd::Tables(a) => cmd_tables(a).map(|t| (t, 0)),
        Cmd::Zeros(a) => cmd_zeros(a, cli.cap).map(|t| (t, 0)),
        Cmd::Locus(a) => cmd_locus(a).map(|t| (t, 0)),
        Cmd::Check(a) => cmd_check(a),
        Cmd::Oracle(a) => cmd_oracle(a).map(|t| (t, 0)),
    }
}

fn error_slug(e: &WchromError) -> &'static str {
    match e {
        WchromError::InvalidFamily(_) => "invalid-family",
        WchromError::EdgeListParse(_) => "edge-list-parse",
        WchromError::PolyParse(_) => "poly-parse",
        WchromError::EnumerationCap { .. } => "cap-exceeded",
        WchromError::BudgetExceeded { .. } => "budget-exceeded",
        WchromError::UnboundVariable(_) => "unbound-variable",
        WchromError::InvalidArgument(_) => "invalid-argument",
        WchromError::DegenerateSlice => "degenerate-slice",
        WchromError::ResidualCertification { .. } => "residual-certification",
        WchromError::Internal(_) => "internal",
    }
}

fn error_exit(e: &WchromError) -> i32 {
    match e {
        WchromError::EnumerationCap { .. } | WchromError::BudgetExceeded { .. } => 3,
        WchromError::InvalidFamily(_)
        | WchromError::EdgeListParse(_)
        | WchromError::PolyParse(_)
        | WchromError::UnboundVariable(_)
        | WchromError::InvalidArgument(_) => 2,
        WchromError::DegenerateSlice
        | WchromError::ResidualCertification { .. }
        | WchromError::Internal(_) => 4,
    }
}

fn load_graph(src: &SourceArgs) -> Result<Graph> {
    match (&src.graph, &src.family) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path).map_err(|e| {
                WchromError::InvalidArgument(format!("cannot read {}: {e}", path.display()))
            })?;
            Graph::parse_edge_list(&text)
        }
        (None, Some(spec)) => build_family(&FamilySpec::parse(spec)?),
        _ => Err(WchromError::InvalidArgument(
            "provide exactly one of --graph FILE or --family SPEC".into(),
        )),
    }
}

fn parse_fix(s: &str) -> Result<(String, BigRational)> {
    let (name, value) = s.split_once('=').ok_or_else(|| {
        WchromError::InvalidArgument(format!("fix must look like var=value, got `{s}`"))
    })?;
    Ok((name.trim().to_string(), parse_rational(value)?))
}

fn format_rational(r: &BigRational) -> String {
    r.to_string()
}

// ---------------------------------------------------------------------------
// compute

fn cmd_compute(a: &ComputeArgs, cap: Option<usize>) -> Result<String> {
    let g = load_graph(&a.source)?;
    let poly = match a.vars.as_str() {
        "q" => partition::ph_capped(&g, cap)?.substitute_one("w", &MPoly::one()),
        "q,w" => partition::ph_capped(&g, cap)?,
        "q,v,w" => partition::potts_z_capped(&g, cap)?,
        other => {
            return Err(WchromError::InvalidArgument(format!(
                "--vars must be `q`, `q,w`, or `q,v,w`, got `{other}`"
            )))
        }
    };
    if a.fix.is_empty() {
        return Ok(format!("{}\n", poly.to_canonical_string()));
    }
    let mut bind: HashMap<String, BigRational> = HashMap::new();
    for f in &a.fix {
        let (name, value) = parse_fix(f)?;
        bind.insert(name, value);
    }
    let all_fixed = poly.vars().iter().all(|v| bind.contains_key(v));
    if all_fixed {
        let value = poly.eval_rational(&bind)?;
        Ok(format!("{}\n", format_rational(&value)))
    } else if bind.values().all(|r| r.is_integer()) {
        let subs: HashMap<String, MPoly> = bind
            .iter()
            .map(|(k, r)| (k.clone(), MPoly::constant(r.to_integer())))
            .collect();
        Ok(format!("{}\n", poly.substitute(&subs).to_canonical_string()))
    } else {
        Err(WchromError::InvalidArgument(
            "fixing a strict subset of variables requires integer values; fix every variable for rational evaluation".into(),
        ))
    }
}

// ---------------------------------------------------------------------------
// family

fn closed_form(spec: &FamilySpec) -> Result<MPoly> {
    match spec {
        FamilySpec::Empty(_)
        | FamilySpec::Line(_)
        | FamilySpec::Star(_)
        | FamilySpec::Circuit(_)
        | FamilySpec::Complete(_)
        | FamilySpec::Wheel(_) => family::ph_formula(spec),
        FamilySpec::SquareStripCyclic { ly, m } if *ly <= 2 => strip::ph_strip_cyclic(*ly, *m),
        other => Err(WchromError::InvalidArgument(format!(
            "no closed form for family {}",
            other.label()
        ))),
    }
}

fn cmd_family(a: &FamilyArgs, cap: Option<usize>) -> Result<(String, i32)> {
    let spec = FamilySpec::parse(&a.family)?;
    let closed = closed_form(&spec)?;
    let engine = partition::ph_capped(&build_family(&spec)?, cap)?;
    let same = closed == engine;
    let mut out = String::new();
    let _ = writeln!(out, "family: {}", spec.label());
    let _ = writeln!(out, "closed: {}", closed.to_canonical_string());
    let _ = writeln!(out, "engine: {}", engine.to_canonical_string());
    let _ = writeln!(out, "match: {}", if same { "yes" } else { "NO" });
    Ok((out, if same { 0 } else { 4 }))
}

// ---------------------------------------------------------------------------
// tables

fn table_kind(which: &str) -> Result<TableKind> {
    match which {
        "nph" => Ok(TableKind::Ph),
        "nz" => Ok(TableKind::Z),
        "nzh" => Ok(TableKind::Zh),
        "np" => Ok(TableKind::P),
        other => TableKind::parse(other),
    }
}

fn cmd_tables(a: &TablesArgs) -> Result<String> {
    let kind = table_kind(&a.which)?;
    let mut out = strip::render_table(kind, a.max)?;
    let verdict = match kind {
        TableKind::Ph => {
            let rows = strip::n_ph_rows(a.max);
            let ok = (0..a.max).all(|i| rows[i] == strip::N_PH_TABLE[i]);
            if ok { "match (level recursion)" } else { "MISMATCH (level recursion)" }
        }
        TableKind::Z => {
            let ok = (1..=a.max).all(|l| {
                strip::n_z_row(l)
                    .iter()
                    .map(|b| b.to_string())
                    .eq(strip::N_Z_TABLE[l - 1].iter().map(|v| v.to_string()))
            });
            if ok { "match (closed form)" } else { "MISMATCH (closed form)" }
        }
        TableKind::Zh => {
            let ok = (1..=a.max).all(|l| {
                let total: u64 = strip::N_ZH_TABLE[l - 1].iter().sum();
                strip::n_zh_total(l) == BigInt::from(total)
            });
            if ok { "totals match (binomial sum)" } else { "TOTALS MISMATCH (binomial sum)" }
        }
        TableKind::P => "embedded (no independent generator)",
    };
    let _ = writeln!(out, "reference: {verdict}");
    Ok(out)
}

// ---------------------------------------------------------------------------
// zeros

fn parse_sweep(s: &str) -> Result<(f64, f64, usize)> {
    let parts: Vec<&str> = s.split(':').collect();
    let bad = || WchromError::InvalidArgument(format!("sweep must be lo:hi:steps, got `{s}`"));
    if parts.len() != 3 {
        return Err(bad());
    }
    let lo: f64 = parts[0].parse().map_err(|_| bad())?;
    let hi: f64 = parts[1].parse().map_err(|_| bad())?;
    let steps: usize = parts[2].parse().map_err(|_| bad())?;
    if steps == 0 {
        return Err(bad());
    }
    Ok((lo, hi, steps))
}

fn cmd_zeros(a: &ZerosArgs, cap: Option<usize>) -> Result<String> {
    let g = load_graph(&a.source)?;
    let ph = partition::ph_capped(&g, cap)?;
    let (var, base) = parse_fix(&a.fix)?;
    let keep = match var.as_str() {
        "w" => "q",
        "q" => "w",
        other => {
            return Err(WchromError::InvalidArgument(format!(
                "zeros are taken in q or w; cannot fix `{other}`"
            )))
        }
    };
    let params: Vec<BigRational> = match &a.sweep {
        None => vec![base],
        Some(spec) => {
            let (lo, hi, steps) = parse_sweep(spec)?;
            spectra::linspace(lo, hi, steps)
                .into_iter()
                .map(|x| BigRational::from_float(x).unwrap_or_else(BigRational::zero))
                .collect()
        }
    };
    let mut out = String::from("param,root_re,root_im,mult,residual\n");
    for p in &params {
        let shown = p.to_f64().unwrap_or(f64::NAN);
        let mut fixed = HashMap::new();
        fixed.insert(var.clone(), p.clone());
        let slice = ph.slice(keep, &fixed)?;
        if slice.is_zero() {
            let _ = writeln!(out, "# {var}={shown}: degenerate slice (identically zero)");
            continue;
        }
        for r in zeros::roots(&slice)? {
            let residual = zeros::residual_at(&slice, r.value);
            let _ = writeln!(
                out,
                "{},{:e},{:e},{},{:.3e}",
                shown, r.value.re, r.value.im, r.multiplicity, residual
            );
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// locus

fn parse_window(s: &str) -> Result<(f64, f64, f64, f64)> {
    let bad = || {
        WchromError::InvalidArgument(format!(
            "window must be re_min:re_max:im_min:im_max, got `{s}`"
        ))
    };
    let parts: Vec<f64> = s
        .split(':')
        .map(|p| p.parse::<f64>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| bad())?;
    if parts.len() != 4 || parts[0] >= parts[1] || parts[2] > parts[3] {
        return Err(bad());
    }
    Ok((parts[0], parts[1], parts[2], parts[3]))
}

fn cmd_locus(a: &LocusArgs) -> Result<String> {
    let fam = SpectrumFamily::parse(&a.family)?;
    if a.grid < 2 || a.grid > 2000 {
        return Err(WchromError::InvalidArgument(format!(
            "grid must be in 2..=2000, got {}",
            a.grid
        )));
    }
    let w = parse_rational(&a.w)?
        .to_f64()
        .ok_or_else(|| WchromError::InvalidArgument("field value out of f64 range".into()))?;
    let (re_min, re_max, im_min, im_max) = parse_window(&a.window)?;
    let grid = ScanGrid {
        re_min,
        re_max,
        re_steps: a.grid,
        im_min,
        im_max,
        im_steps: a.grid,
    };
    let wc = Complex64::new(w, 0.0);
    let cells = spectra::locus_scan(fam, wc, &grid);
    let mut out = spectra::scan_to_csv(&cells);
    let crossings = spectra::axis_crossings(fam, wc, re_min, re_max, a.grid);
    let _ = write!(out, "# crossings:");
    for (lo, hi) in &crossings {
        let _ = write!(out, " [{lo:.6},{hi:.6}]");
    }
    out.push('\n');
    match fam {
        SpectrumFamily::Circuit => {
            let _ = writeln!(out, "# special q_c = {:.12}", spectra::q_c_circuit(w));
        }
        SpectrumFamily::Wheel => {
            let _ = writeln!(out, "# special q_c = {:.12}", spectra::q_c_wheel(w));
        }
        SpectrumFamily::Line => {
            if w * (w - 1.0) >= 0.0 {
                let (e1, e2) = spectra::q_endpoints(w);
                let _ = writeln!(out, "# special q_e = {e1:.12}, {e2:.12}");
            }
            if w != 0.0 {
                let _ = writeln!(out, "# special q_i = {:.12}", spectra::q_interior(w));
            }
        }
        SpectrumFamily::Ladder => {}
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// oracle

fn cmd_oracle(a: &OracleArgs) -> Result<String> {
    let g = load_graph(&a.source)?;
    let v = parse_rational(&a.v)?;
    let w = parse_rational(&a.w)?;
    let z = partition::brute_force_z(&g, a.q, &v, &w)?;
    Ok(format!("{}\n", format_rational(&z)))
}

// ---------------------------------------------------------------------------
// check

type CheckFn = fn() -> std::result::Result<(), String>;

fn check_catalog() -> Vec<(&'static str, CheckFn)> {
    vec![
        ("golden-forms", check_golden_forms),
        ("oracle-agreement", check_oracle_agreement),
        ("rank-nullity-identity", check_rank_nullity),
        ("zero-field-shift", check_zero_field_shift),
        ("tables", check_tables),
        ("strip-closed-form", check_strip_closed_form),
        ("deletion-contraction", check_delcon),
        ("tree-differences", check_tree_differences),
        ("conjectures", check_conjectures),
        ("zero-formulas", check_zero_formulas),
        ("locus-crossings", check_locus_crossings),
    ]
}

fn cmd_check(a: &CheckArgs) -> Result<(String, i32)> {
    let catalog = check_catalog();
    let selected: Vec<&(&str, CheckFn)> = if a.which == "all" {
        catalog.iter().collect()
    } else {
        let found: Vec<_> = catalog.iter().filter(|(name, _)| *name == a.which).collect();
        if found.is_empty() {
            let names: Vec<&str> = catalog.iter().map(|(n, _)| *n).collect();
            return Err(WchromError::InvalidArgument(format!(
                "unknown check `{}` (expected all or one of: {})",
                a.which,
                names.join(", ")
            )));
        }
        found
    };
    let mut out = String::new();
    let mut passed = 0usize;
    for (name, f) in &selected {
        match f() {
            Ok(()) => {
                passed += 1;
                let _ = writeln!(out, "check {name}: pass");
            }
            Err(detail) => {
                let _ = writeln!(out, "check {name}: FAIL ({detail})");
            }
        }
    }
    let _ = writeln!(out, "passed {passed}/{}", selected.len());
    Ok((out, if passed == selected.len() { 0 } else { 4 }))
}

fn eng(spec: &str) -> std::result::Result<MPoly, String> {
    let g = build_family(&FamilySpec::parse(spec).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    partition::ph(&g).map_err(|e| e.to_string())
}

fn check_golden_forms() -> std::result::Result<(), String> {
    let c3 = eng("C:3")?;
    let want = "q^3 + 3*q^2*w - 6*q^2 - 9*q*w + 11*q + 6*w - 6";
    if c3.to_canonical_string() != want {
        return Err(format!("C:3 -> {}", c3.to_canonical_string()));
    }
    for n in 2..=5 {
        if family::ph_line(n) != eng(&format!("L:{n}"))? {
            return Err(format!("line formula disagrees at n={n}"));
        }
        if family::ph_star(n) != eng(&format!("S:{n}"))? {
            return Err(format!("star formula disagrees at n={n}"));
        }
        if family::ph_complete(n) != eng(&format!("K:{n}"))? {
            return Err(format!("complete formula disagrees at n={n}"));
        }
    }
    for n in 3..=6 {
        if family::ph_circuit(n) != eng(&format!("C:{n}"))? {
            return Err(format!("circuit formula disagrees at n={n}"));
        }
        if family::ph_wheel(n).map_err(|e| e.to_string())? != eng(&format!("Wh:{n}"))? {
            return Err(format!("wheel formula disagrees at n={n}"));
        }
    }
    Ok(())
}

fn check_oracle_agreement() -> std::result::Result<(), String> {
    let g = build_family(&FamilySpec::parse("C:4").unwrap()).unwrap();
    let v = BigRational::from_integer((-1).into());
    let w = BigRational::from_integer(3.into());
    let direct = partition::brute_force_z(&g, 2, &v, &w).map_err(|e| e.to_string())?;
    if direct != BigRational::from_integer(18.into()) {
        return Err(format!("C:4 at (2,-1,3) -> {direct}"));
    }
    let z = partition::potts_z(&g).map_err(|e| e.to_string())?;
    for qv in 1..=4u32 {
        for wv in [0i64, 1, 2] {
            let mut bind = HashMap::new();
            bind.insert("q".to_string(), BigRational::from_integer(qv.into()));
            bind.insert("v".to_string(), v.clone());
            bind.insert("w".to_string(), BigRational::from_integer(wv.into()));
            let lhs = z.eval_rational(&bind).map_err(|e| e.to_string())?;
            let rhs = partition::brute_force_z(
                &g,
                qv,
                &v,
                &BigRational::from_integer(wv.into()),
            )
            .map_err(|e| e.to_string())?;
            if lhs != rhs {
                return Err(format!("engine {lhs} vs direct {rhs} at q={qv}, w={wv}"));
            }
        }
    }
    Ok(())
}

fn check_rank_nullity() -> std::result::Result<(), String> {
    for spec in ["L:3", "C:4", "K:4"] {
        let g = build_family(&FamilySpec::parse(spec).unwrap()).unwrap();
        if !partition::check_zt(&g).map_err(|e| e.to_string())? {
            return Err(format!("rank-nullity identity fails on {spec}"));
        }
    }
    Ok(())
}

fn check_zero_field_shift() -> std::result::Result<(), String> {
    let shift = MPoly::var("q") - MPoly::one();
    for spec in ["L:4", "C:5", "K:4"] {
        let g = build_family(&FamilySpec::parse(spec).unwrap()).unwrap();
        let ph = partition::ph(&g).map_err(|e| e.to_string())?;
        let at0 = ph.substitute_one("w", &MPoly::zero());
        let chrom = partition::chromatic(&g).map_err(|e| e.to_string())?;
        if at0 != chrom.substitute_one("q", &shift) {
            return Err(format!("shift law fails on {spec}"));
        }
    }
    Ok(())
}

fn check_tables() -> std::result::Result<(), String> {
    let rows = strip::n_ph_rows(8);
    for l in 1..=8usize {
        if rows[l - 1] != strip::N_PH_TABLE[l - 1] {
            return Err(format!("field table row L={l}"));
        }
        let z: Vec<String> = strip::n_z_row(l).iter().map(|b| b.to_string()).collect();
        let zr: Vec<String> = strip::N_Z_TABLE[l - 1].iter().map(|v| v.to_string()).collect();
        if z != zr {
            return Err(format!("zero-field table row L={l}"));
        }
        let total: u64 = strip::N_ZH_TABLE[l - 1].iter().sum();
        if strip::n_zh_total(l) != BigInt::from(total) {
            return Err(format!("distinct-count total L={l}"));
        }
        if !strip::identity_check(l) {
            return Err(format!("level-sum identity L={l}"));
        }
    }
    Ok(())
}

fn check_strip_closed_form() -> std::result::Result<(), String> {
    for m in 3..=4usize {
        let spec = FamilySpec::parse(&format!("sqcyc:2x{m}")).unwrap();
        let closed = strip::ph_strip_cyclic(2, m).map_err(|e| e.to_string())?;
        let engine = partition::ph(&build_family(&spec).unwrap()).map_err(|e| e.to_string())?;
        if closed != engine {
            return Err(format!("width-2 strip closed form disagrees at m={m}"));
        }
    }
    Ok(())
}

fn check_delcon() -> std::result::Result<(), String> {
    let g = build_family(&FamilySpec::parse("L:3").unwrap()).unwrap();
    let delta = partition::delta_ph(&g, 0).map_err(|e| e.to_string())?;
    let want = MPoly::parse("-w*(w-1)*(q-1)").map_err(|e| e.to_string())?;
    if delta != want {
        return Err("path deviation disagrees".into());
    }
    Ok(())
}

fn check_tree_differences() -> std::result::Result<(), String> {
    let diff = family::ph_star(4) - family::ph_line(4);
    let divisor = MPoly::parse("(q-1)*w*(w-1)^2").map_err(|e| e.to_string())?;
    if diff.is_zero() || !diff.is_divisible_by(&divisor) {
        return Err("star minus line divisibility fails at n=4".into());
    }
    Ok(())
}

fn check_conjectures() -> std::result::Result<(), String> {
    let mut specs: Vec<String> = Vec::new();
    for n in 3..=6 {
        for fam in ["L", "C", "S", "K"] {
            specs.push(format!("{fam}:{n}"));
        }
    }
    specs.push("Wh:5".into());
    specs.push("Wh:6".into());
    specs.push("Y:5".into());
    specs.push("Y:6".into());
    for spec in &specs {
        let ph = eng(spec)?;
        for k in 0..=20 {
            let w = BigRational::new(k.into(), 20.into());
            match zeros::sign_alternation(&ph, &w).map_err(|e| e.to_string())? {
                zeros::ConjectureVerdict::Holds => {}
                other => return Err(format!("sign alternation on {spec} at w={w}: {other:?}")),
            }
            match zeros::unimodality(&ph, &w).map_err(|e| e.to_string())? {
                zeros::ConjectureVerdict::Holds => {}
                other => return Err(format!("unimodality on {spec} at w={w}: {other:?}")),
            }
        }
    }
    Ok(())
}

fn check_zero_formulas() -> std::result::Result<(), String> {
    let ph = family::ph_line(3);
    let w = BigRational::from_integer(2.into());
    let rs = zeros::roots_q(&ph, &w).map_err(|e| e.to_string())?;
    let disc = (2.0f64 * (5.0 * 2.0 - 4.0)).sqrt();
    let mut expected = vec![1.0, (4.0 - 6.0 + disc) / 2.0, (4.0 - 6.0 - disc) / 2.0];
    expected.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let got: Vec<f64> = rs.iter().map(|r| r.value.re).collect();
    if got.len() != 3 {
        return Err(format!("expected 3 ring-slice zeros, got {}", got.len()));
    }
    for (g, e) in got.iter().zip(&expected) {
        if (g - e).abs() > 1e-9 {
            return Err(format!("path zero {g} vs {e}"));
        }
    }
    let k5 = family::ph_complete(5);
    let q = BigRational::new(7.into(), 2.into());
    let rs = zeros::roots_w(&k5, &q).map_err(|e| e.to_string())?;
    if rs.len() != 1 || (rs[0].value.re - (1.0 - 3.5 / 5.0)).abs() > 1e-9 {
        return Err("complete-graph field zero misplaced".into());
    }
    Ok(())
}

fn check_locus_crossings() -> std::result::Result<(), String> {
    let w = Complex64::new(1.0, 0.0);
    let runs = spectra::axis_crossings(SpectrumFamily::Circuit, w, -1.0, 3.0, 401);
    let cell = 4.0 / 400.0;
    let covers = |x: f64| {
        runs.iter().any(|(lo, hi)| *lo - cell <= x && x <= *hi + cell)
    };
    if !covers(2.0) || !covers(0.0) {
        return Err(format!("ring boundary crossings {runs:?} miss 0 or 2"));
    }
    if (spectra::q_c_circuit(1.0) - 2.0).abs() > 1e-12 {
        return Err("ring crossing point at unit field".into());
    }
    Ok(())
}
