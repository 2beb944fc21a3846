//! Command-line front end for exact q-chromatic polynomial computations.
//!
//! Every verb reads a graph file ('#' comments, first data line is the vertex
//! count d, then one "u v" edge per line) and prints text or JSON. Exit codes:
//! 0 on success, 1 on invalid input, 2 when a `verify` identity fails.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use num_traits::ToPrimitive;
use qchroma_core::{
    acyclic_orientations, brute_chi, chi_tilde, cone_contains, g_major_polynomial, g_sequence,
    g_sequence_coloring, g_statistics, induced_poset, linear_extensions, locate_point,
    min_sum_coloring, numerator_double_sum, numerator_ones, palindromicity_check, perm_terms, phi,
    phi_inverse, rank_labeling, rank_of_permutation, series_chi, symmetry_check,
    verify_qehrhart_lemma, EnumCap, Graph, LabelingScheme, LatticePoint, LinearForm, Permutation,
    QPoly,
};

#[derive(Parser)]
#[command(
    name = "qchroma",
    version,
    about = "Exact q-chromatic polynomials of graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Cap override for S_d-scale enumerations (default 10)
    #[arg(long, global = true)]
    max_d: Option<usize>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Rank function, G-ascents/descents, G-major index, and G-sequence of a permutation
    Stats {
        #[arg(long)]
        graph: PathBuf,
        /// Permutation in one-line notation, comma separated (e.g. 3,1,2,5,4)
        #[arg(long)]
        perm: String,
    },
    /// Generating function of the q-chromatic polynomial: numerator over
    /// (1-z)(1-qz)...(1-q^d z) for --lambda ones, per-permutation terms otherwise
    Genfunc {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value = "ones")]
        lambda: String,
        /// Print the per-permutation term listing (required for non-ones lambda)
        #[arg(long)]
        terms: bool,
    },
    /// Evaluate chi_G^lambda(q, n) by direct enumeration
    Chi {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value = "ones")]
        lambda: String,
        #[arg(long)]
        n: usize,
    },
    /// Expansion of chi_G^1(q, n) in the q-binomial basis
    QbinomBasis {
        #[arg(long)]
        graph: PathBuf,
        /// Also evaluate at this palette size
        #[arg(long)]
        n: Option<usize>,
    },
    /// chi_G^1 as a polynomial in `[n]_q` with coefficients in Q(q)
    ChiTilde {
        #[arg(long)]
        graph: PathBuf,
    },
    /// G-major index polynomial with its degree-law data
    Gmajor {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Minimum sum coloring: chromatic sum, count, witnesses
    Minsum {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Base-k fingerprint distinguishing labeled graphs
    Fingerprint {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: u64,
    },
    /// Compare two labeled graphs by fingerprint
    Distinguish {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        other: PathBuf,
        #[arg(long)]
        k: u64,
    },
    /// Run identity suites against a graph; exit 2 with a counterexample on failure
    Verify {
        #[arg(long)]
        graph: PathBuf,
        /// all, or one of: decomposition, oracle, weighted-exponent, bijection,
        /// double-sum, qehrhart, symmetry, palindromicity, degree-law
        #[arg(long, default_value = "all")]
        suite: String,
        /// Labeling scheme: rank or random:SEED
        #[arg(long, default_value = "rank")]
        scheme: String,
        /// Truncation order for the oracle-equivalence suite
        #[arg(long, default_value_t = 3)]
        trunc: usize,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // usage errors print the flag grammar and exit 1; --help/--version
            // are not errors
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let cap = cli.max_d.map_or_else(EnumCap::default, EnumCap::with_max);
    let format = cli.format;
    match cli.command {
        Command::Stats { graph, perm } => {
            let g = load_graph(&graph)?;
            let pi = parse_perm(&perm, g.d())?;
            cmd_stats(&g, &pi, format)
        }
        Command::Genfunc {
            graph,
            lambda,
            terms,
        } => {
            let g = load_graph(&graph)?;
            let lambda = parse_lambda(&lambda, g.d())?;
            cmd_genfunc(&g, &lambda, terms, cap, format)
        }
        Command::Chi { graph, lambda, n } => {
            let g = load_graph(&graph)?;
            let lambda = parse_lambda(&lambda, g.d())?;
            let chi = brute_chi(&g, &lambda, n);
            match format {
                Format::Text => println!("{chi}"),
                Format::Json => print_json(&json!({
                    "d": g.d(),
                    "n": n,
                    "lambda": lambda_json(&lambda),
                    "chi": chi,
                })),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::QbinomBasis { graph, n } => {
            let g = load_graph(&graph)?;
            cmd_qbinom_basis(&g, n, cap, format)
        }
        Command::ChiTilde { graph } => {
            let g = load_graph(&graph)?;
            let ct = chi_tilde(&g, cap).map_err(|e| e.to_string())?;
            match format {
                Format::Text => {
                    for (k, c) in ct.coeffs().iter().enumerate() {
                        println!("c_{k} = {c}");
                    }
                }
                Format::Json => {
                    print_json(&json!({ "d": g.d(), "coeffs": ct.coeffs() }));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Gmajor { graph } => {
            let g = load_graph(&graph)?;
            let poly = g_major_polynomial(&g, cap).map_err(|e| e.to_string())?;
            let degree = poly
                .degree()
                .map(|d| d.to_string())
                .unwrap_or_else(|| "0".into());
            let leading = poly
                .leading_coeff()
                .map(|c| c.to_string())
                .unwrap_or_else(|| "0".into());
            match format {
                Format::Text => {
                    println!("polynomial: {poly}");
                    println!("degree: {degree}");
                    println!("leading coefficient: {leading}");
                }
                Format::Json => print_json(&json!({
                    "d": g.d(),
                    "polynomial": poly,
                    "degree": degree,
                    "leading_coefficient": leading,
                })),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Minsum { graph } => {
            let g = load_graph(&graph)?;
            let res = min_sum_coloring(&g);
            match format {
                Format::Text => {
                    println!("chromatic sum: {}", res.sigma);
                    println!("colorings attaining it: {}", res.count);
                    for w in &res.witnesses {
                        println!(
                            "  {}",
                            w.assignment()
                                .iter()
                                .map(|c| c.to_string())
                                .collect::<Vec<_>>()
                                .join(",")
                        );
                    }
                }
                Format::Json => print_json(&json!({
                    "d": g.d(),
                    "sigma": res.sigma,
                    "count": res.count,
                    "witnesses": res.witnesses.iter().map(|w| w.assignment().to_vec()).collect::<Vec<_>>(),
                })),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Fingerprint { graph, k } => {
            let g = load_graph(&graph)?;
            let f = qchroma_core::fingerprint(&g, k).map_err(|e| e.to_string())?;
            match format {
                Format::Text => {
                    println!("d: {}", f.d);
                    println!("k: {}", f.k);
                    println!("poly: {}", f.poly);
                    println!(
                        "digest ({}): {}",
                        qchroma_core::Fingerprint::DIGEST_ALG,
                        f.digest()
                    );
                }
                Format::Json => print_json(&json!({
                    "d": f.d,
                    "k": f.k,
                    "poly": f.poly,
                    "digest": f.digest(),
                    "digest_alg": qchroma_core::Fingerprint::DIGEST_ALG,
                })),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Distinguish { graph, other, k } => {
            let g = load_graph(&graph)?;
            let h = load_graph(&other)?;
            let equal = qchroma_core::distinguish(&g, &h, k).map_err(|e| e.to_string())?;
            match format {
                Format::Text => println!("{}", if equal { "equal" } else { "distinct" }),
                Format::Json => print_json(&json!({ "equal": equal })),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            graph,
            suite,
            scheme,
            trunc,
        } => {
            let g = load_graph(&graph)?;
            let scheme = parse_scheme(&scheme)?;
            cmd_verify(&g, &suite, scheme, trunc, cap, format)
        }
    }
}

fn load_graph(path: &PathBuf) -> Result<Graph, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    Graph::parse(&text).map_err(|e| e.to_string())
}

fn parse_perm(text: &str, d: usize) -> Result<Permutation, String> {
    let word: Vec<usize> = text
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("bad permutation entry {t:?}"))
        })
        .collect::<Result<_, _>>()?;
    if word.len() != d {
        return Err(format!(
            "permutation has {} entries, graph has {d} vertices",
            word.len()
        ));
    }
    Permutation::new(word).map_err(|e| e.to_string())
}

fn parse_lambda(text: &str, d: usize) -> Result<LinearForm, String> {
    if text == "ones" {
        return Ok(LinearForm::ones(d));
    }
    if let Some(k) = text.strip_prefix("powers:") {
        let k: u64 = k.parse().map_err(|_| format!("bad base in powers:{k}"))?;
        return Ok(LinearForm::powers(k, d));
    }
    let entries: Vec<u64> = text
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| format!("bad lambda entry {t:?}"))
        })
        .collect::<Result<_, _>>()?;
    if entries.len() != d {
        return Err(format!(
            "lambda has {} entries, graph has {d} vertices",
            entries.len()
        ));
    }
    LinearForm::from_u64(&entries).map_err(|e| e.to_string())
}

fn parse_scheme(text: &str) -> Result<LabelingScheme, String> {
    if text == "rank" {
        return Ok(LabelingScheme::Rank);
    }
    if let Some(seed) = text.strip_prefix("random:") {
        let seed: u64 = seed
            .parse()
            .map_err(|_| format!("bad seed in random:{seed}"))?;
        return Ok(LabelingScheme::Random { seed });
    }
    Err(format!(
        "unknown scheme {text:?} (expected rank or random:SEED)"
    ))
}

fn lambda_json(lambda: &LinearForm) -> Value {
    Value::Array(
        lambda
            .entries()
            .iter()
            .map(|e| Value::String(e.to_string()))
            .collect(),
    )
}

fn print_json(value: &Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("serializable")
    );
}

fn cmd_stats(g: &Graph, pi: &Permutation, format: Format) -> Result<ExitCode, String> {
    let rk = rank_of_permutation(g, pi);
    let stats = g_statistics(g, pi);
    let seq = g_sequence(g, pi);
    let coloring = g_sequence_coloring(g, pi);
    match format {
        Format::Text => {
            println!("ranks: {:?}", rk.values());
            println!("G-ascents: {:?}", stats.asc);
            println!("G-descents: {:?}", stats.des);
            println!("G-major index: {}", stats.maj);
            println!("G-sequence: {seq}");
            println!("G-sequence coloring: {:?}", coloring.assignment());
        }
        Format::Json => print_json(&json!({
            "perm": pi.word(),
            "ranks": rk.values(),
            "asc": stats.asc,
            "des": stats.des,
            "maj": stats.maj,
            "g_sequence": seq.blocks(),
            "g_sequence_coloring": coloring.assignment(),
        })),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_genfunc(
    g: &Graph,
    lambda: &LinearForm,
    terms: bool,
    cap: EnumCap,
    format: Format,
) -> Result<ExitCode, String> {
    if terms {
        let list = perm_terms(g, lambda, cap).map_err(|e| e.to_string())?;
        match format {
            Format::Text => {
                for t in &list {
                    println!(
                        "pi={:?} alpha={} ascnum={} partial_sums={:?}",
                        t.pi.word(),
                        t.alpha,
                        t.ascnum,
                        t.partial_sums
                            .iter()
                            .map(|s| s.to_string())
                            .collect::<Vec<_>>()
                    );
                }
            }
            Format::Json => print_json(&json!({
                "d": g.d(),
                "lambda": lambda_json(lambda),
                "terms": list.iter().map(|t| json!({
                    "pi": t.pi.word(),
                    "alpha": t.alpha.to_string(),
                    "ascnum": t.ascnum,
                    "partial_sums": t.partial_sums.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
                })).collect::<Vec<_>>(),
            })),
        }
        return Ok(ExitCode::SUCCESS);
    }
    if !lambda.is_ones() {
        return Err("closed-form numerator exists for --lambda ones; pass --terms for the per-permutation listing".into());
    }
    let num = numerator_ones(g, cap).map_err(|e| e.to_string())?;
    match format {
        Format::Text => {
            println!("d = {}", g.d());
            println!("denominator: prod_{{i=0}}^{{d}} (1-q^i z)");
            for (i, a) in num.iter() {
                println!("a_{i}(q) = {a}");
            }
        }
        Format::Json => {
            let numerator: BTreeMap<String, &QPoly> =
                num.iter().map(|(i, a)| (i.to_string(), a)).collect();
            print_json(&json!({
                "d": num.d(),
                "numerator": numerator,
                "denominator": "prod_{i=0}^{d} (1-q^i z)",
            }));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_qbinom_basis(
    g: &Graph,
    n: Option<usize>,
    cap: EnumCap,
    format: Format,
) -> Result<ExitCode, String> {
    let num = numerator_ones(g, cap).map_err(|e| e.to_string())?;
    let d = g.d();
    // coefficient on [n+j choose d]_q is a_{d-j}(q)
    let rows: Vec<(usize, QPoly)> = (0..=d)
        .rev()
        .map(|i| (d - i, num.coeff(i)))
        .filter(|(_, a)| !a.is_zero())
        .collect();
    let evaluated = n.map(|n| qchroma_core::genfunc::chi_ones_from_numerator(&num, n));
    match format {
        Format::Text => {
            for (j, a) in &rows {
                println!("[n+{j} choose {d}]_q * ({a})");
            }
            if let Some(chi) = &evaluated {
                println!("chi(q, {}) = {chi}", n.unwrap());
            }
        }
        Format::Json => {
            let mut obj = json!({
                "d": d,
                "basis": rows.iter().map(|(j, a)| json!({"j": j, "coeff": a})).collect::<Vec<_>>(),
            });
            if let Some(chi) = &evaluated {
                obj["n"] = json!(n.unwrap());
                obj["chi"] = json!(chi);
            }
            print_json(&obj);
        }
    }
    Ok(ExitCode::SUCCESS)
}

// ---- verify ----

type SuiteResult = Result<String, String>;
type SuiteFn = fn(&Graph, LabelingScheme, usize, EnumCap) -> SuiteResult;

fn cmd_verify(
    g: &Graph,
    suite: &str,
    scheme: LabelingScheme,
    trunc: usize,
    cap: EnumCap,
    format: Format,
) -> Result<ExitCode, String> {
    let all: Vec<(&str, SuiteFn)> = vec![
        ("decomposition", suite_decomposition),
        ("oracle", suite_oracle),
        ("weighted-exponent", suite_weighted_exponent),
        ("bijection", suite_bijection),
        ("double-sum", suite_double_sum),
        ("qehrhart", suite_qehrhart),
        ("symmetry", suite_symmetry),
        ("palindromicity", suite_palindromicity),
        ("degree-law", suite_degree_law),
    ];
    let selected: Vec<_> = if suite == "all" {
        all
    } else {
        let found: Vec<_> = all.into_iter().filter(|(name, _)| *name == suite).collect();
        if found.is_empty() {
            return Err(format!("unknown suite {suite:?}"));
        }
        found
    };
    let mut rows = Vec::new();
    let mut ok = true;
    for (name, f) in selected {
        let result = f(g, scheme, trunc, cap);
        ok &= result.is_ok();
        rows.push((name, result));
    }
    match format {
        Format::Text => {
            println!("{:<20} {:<6} detail", "identity", "status");
            for (name, result) in &rows {
                match result {
                    Ok(detail) => println!("{name:<20} {:<6} {detail}", "pass"),
                    Err(counter) => println!("{name:<20} {:<6} {counter}", "FAIL"),
                }
            }
        }
        Format::Json => print_json(&json!({
            "ok": ok,
            "suites": rows.iter().map(|(name, result)| json!({
                "name": name,
                "status": if result.is_ok() { "pass" } else { "fail" },
                "detail": match result { Ok(s) => s, Err(s) => s },
            })).collect::<Vec<_>>(),
        })),
    }
    Ok(if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    })
}

/// Every lattice point of the region in a small box lies in exactly one cone,
/// and locate_point finds it.
fn suite_decomposition(g: &Graph, _: LabelingScheme, _: usize, _: EnumCap) -> SuiteResult {
    let d = g.d();
    let coord_max: u64 = if d <= 5 { 5 } else { 3 };
    let height = coord_max + 1;
    let perms: Vec<Permutation> = qchroma_core::gstats::all_permutations(d).collect();
    let mut checked = 0usize;
    let total = coord_max.pow(d as u32);
    'point: for code in 0..total {
        let mut coords = Vec::with_capacity(d + 1);
        let mut c = code;
        for _ in 0..d {
            coords.push((c % coord_max) + 1);
            c /= coord_max;
        }
        coords.push(height);
        for &(u, v) in g.edges() {
            if coords[u - 1] == coords[v - 1] {
                continue 'point;
            }
        }
        let point = LatticePoint::new(coords);
        let containing: Vec<&Permutation> = perms
            .iter()
            .filter(|pi| cone_contains(g, pi, &point).unwrap_or(false))
            .collect();
        if containing.len() != 1 {
            return Err(format!(
                "point {:?} lies in {} cones",
                point.coords(),
                containing.len()
            ));
        }
        match locate_point(g, &point) {
            Ok(located) if &located == containing[0] => {}
            other => {
                return Err(format!(
                    "locate_point({:?}) gave {other:?}, cone search gave {:?}",
                    point.coords(),
                    containing[0]
                ))
            }
        }
        checked += 1;
    }
    Ok(format!("{checked} lattice points, exactly one cone each"))
}

/// series_chi equals brute_chi for a few deterministic linear forms.
fn suite_oracle(g: &Graph, _: LabelingScheme, trunc: usize, cap: EnumCap) -> SuiteResult {
    let d = g.d();
    let forms = deterministic_lambdas(d, 5);
    for entries in &forms {
        let lambda = LinearForm::from_u64(entries).map_err(|e| e.to_string())?;
        let series = series_chi(g, &lambda, trunc, cap).map_err(|e| e.to_string())?;
        for (n, coeff) in series.iter().enumerate() {
            let brute = brute_chi(g, &lambda, n);
            if coeff != &brute {
                return Err(format!(
                    "lambda {entries:?}, n={n}: series {coeff} != brute {brute}"
                ));
            }
        }
    }
    Ok(format!("{} linear forms, truncation {trunc}", forms.len()))
}

/// alpha_pi equals the lambda-weighted G-sequence coloring sum for every pi.
fn suite_weighted_exponent(g: &Graph, _: LabelingScheme, _: usize, cap: EnumCap) -> SuiteResult {
    cap.check(g.d()).map_err(|e| e.to_string())?;
    for entries in deterministic_lambdas(g.d(), 7) {
        let lambda = LinearForm::from_u64(&entries).map_err(|e| e.to_string())?;
        for pi in qchroma_core::gstats::all_permutations(g.d()) {
            if !qchroma_core::genfunc::weighted_exponent_check(g, &pi, &lambda) {
                return Err(format!("pi {:?}, lambda {entries:?}", pi.word()));
            }
        }
    }
    Ok("alpha matches the weighted coloring sum for every permutation".into())
}

/// phi is a bijection onto (orientation, extension) pairs and preserves
/// descents under rank labelings.
fn suite_bijection(g: &Graph, scheme: LabelingScheme, _: usize, cap: EnumCap) -> SuiteResult {
    let d = g.d();
    cap.check(d).map_err(|e| e.to_string())?;
    let mut pair_total = 0usize;
    for rho in acyclic_orientations(g) {
        let poset = induced_poset(g, &rho).map_err(|e| e.to_string())?;
        let omega = rank_labeling(&poset);
        pair_total += linear_extensions(&poset, &omega)
            .map_err(|e| e.to_string())?
            .count();
    }
    let factorial: usize = (1..=d).product();
    if pair_total != factorial {
        return Err(format!(
            "sum of extension counts {pair_total} != {d}! = {factorial}"
        ));
    }
    for pi in qchroma_core::gstats::all_permutations(d) {
        let pair = phi(g, &pi, scheme);
        let back = phi_inverse(g, &pair.rho, &pair.sigma, scheme).map_err(|e| e.to_string())?;
        if back != pi {
            return Err(format!(
                "round trip of {:?} gave {:?}",
                pi.word(),
                back.word()
            ));
        }
        let rank_pair = phi(g, &pi, LabelingScheme::Rank);
        if rank_pair.sigma.descents() != g_statistics(g, &pi).des {
            return Err(format!("descents not preserved for {:?}", pi.word()));
        }
    }
    Ok(format!(
        "{factorial} permutations round-trip; extension counts sum to d!"
    ))
}

/// The double-sum numerator equals the permutation-sum numerator under the
/// chosen scheme and under the rank scheme.
fn suite_double_sum(g: &Graph, scheme: LabelingScheme, _: usize, cap: EnumCap) -> SuiteResult {
    let direct = numerator_ones(g, cap).map_err(|e| e.to_string())?;
    for s in [LabelingScheme::Rank, scheme] {
        let double = numerator_double_sum(g, s);
        if double != direct {
            return Err(format!("{s:?}: double-sum numerator differs"));
        }
    }
    Ok("pair sum equals permutation sum under both labelings".into())
}

/// chi equals the sum of open order-polytope sums over acyclic orientations.
fn suite_qehrhart(g: &Graph, _: LabelingScheme, _: usize, _: EnumCap) -> SuiteResult {
    for entries in deterministic_lambdas(g.d(), 3) {
        let lambda = LinearForm::from_u64(&entries).map_err(|e| e.to_string())?;
        for n in 0..=3 {
            if !verify_qehrhart_lemma(g, &lambda, n) {
                return Err(format!("lambda {entries:?}, n={n}"));
            }
        }
    }
    Ok("chi equals the orientation sum of open-polytope sums, n <= 3".into())
}

fn suite_symmetry(g: &Graph, _: LabelingScheme, _: usize, cap: EnumCap) -> SuiteResult {
    if symmetry_check(g, cap).map_err(|e| e.to_string())? {
        Ok("the three numerator forms coincide".into())
    } else {
        Err("numerator forms differ".into())
    }
}

fn suite_palindromicity(g: &Graph, _: LabelingScheme, _: usize, cap: EnumCap) -> SuiteResult {
    if palindromicity_check(g, cap).map_err(|e| e.to_string())? {
        Ok("a_i and chi(q, n) are shifted palindromic".into())
    } else {
        Err("a shifted-palindromicity check failed".into())
    }
}

/// Degree and leading coefficient of the G-major polynomial against the
/// minimum sum coloring.
fn suite_degree_law(g: &Graph, _: LabelingScheme, _: usize, cap: EnumCap) -> SuiteResult {
    let d = g.d() as u64;
    let res = min_sum_coloring(g);
    let poly = g_major_polynomial(g, cap).map_err(|e| e.to_string())?;
    let degree = poly.degree().and_then(|e| e.to_u64()).unwrap_or(0);
    let expected = d * (d + 1) / 2 - res.sigma;
    if degree != expected {
        return Err(format!("degree {degree} != C(d+1,2) - sigma = {expected}"));
    }
    let leading = poly.leading_coeff().cloned().unwrap_or_default();
    if leading != res.count.into() {
        return Err(format!(
            "leading coefficient {leading} != attainment count {}",
            res.count
        ));
    }
    Ok(format!(
        "degree {degree}, leading coefficient {}",
        res.count
    ))
}

/// Small deterministic family of linear forms with entries in 1..=max.
fn deterministic_lambdas(d: usize, max: u64) -> Vec<Vec<u64>> {
    let mut out = vec![vec![1; d]];
    // a fixed mixing pattern, then its reverse
    let pattern: Vec<u64> = (0..d).map(|i| (i as u64 * 2 + 1) % max + 1).collect();
    let mut reversed = pattern.clone();
    reversed.reverse();
    out.push(pattern);
    out.push(reversed);
    out.dedup();
    out
}
