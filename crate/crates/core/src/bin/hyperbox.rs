use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use hyperbox::core::generators::{generator, Object};
use hyperbox::core::{IncidenceHypergraph, Morphism, Orientation, Quiver, SetSystemHypergraph, SortKind};
use hyperbox::document::{read_document, to_dot, to_json, Document};
use hyperbox::exponentials::{exp_box_h, exp_box_m, exp_box_q, exp_box_r, exp_laplacian, Exponential};
use hyperbox::functors;
use hyperbox::homsearch::{Anchors, HomSearch, SearchOptions};
use hyperbox::products::{box_h, box_q, box_r, dual, laplacian_product};
use hyperbox::spectral::OrientedHypergraph;
use hyperbox::suites::{self, SuiteReport};
use hyperbox::{Elem, Error};

#[derive(Parser)]
#[command(name = "hyperbox", version, about = "Box and Laplacian products of graphs and incidence hypergraphs")]
struct Cli {
    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Product of two objects of the same category.
    Product {
        #[arg(long, value_enum)]
        kind: ProductKind,
        a: String,
        b: String,
    },
    /// Carrier of the exponential [A, B].
    Exp {
        #[arg(long, value_enum)]
        kind: ExpKind,
        a: String,
        b: String,
    },
    /// Incidence dual.
    Dual { a: String },
    /// Apply a functor to an object.
    Functor {
        #[arg(long, value_enum)]
        name: FunctorName,
        a: String,
    },
    /// Enumerate or count the morphisms A -> B.
    Homs {
        a: String,
        b: String,
        /// `x=y` or `kind@x=y` with kind one of vertex, edge, incidence.
        #[arg(long)]
        anchor: Vec<String>,
        /// Print only the number of morphisms
        #[arg(long)]
        count: bool,
        /// Keep only morphisms injective on this sort
        #[arg(long, value_enum)]
        monic: Option<Monic>,
    },
    /// Incidence, adjacency, degree or Laplacian matrix as CSV.
    Matrix {
        #[arg(long, value_enum)]
        which: Which,
        /// Matrix power; the matrix must be square when above 1
        #[arg(long, default_value_t = 1)]
        power: u32,
        /// `all-plus`, `all-minus`, or a JSON file of `[incidence, sign]` pairs.
        #[arg(long)]
        orientation: Option<String>,
        a: String,
    },
    /// Run a verification suite; exit 1 on any mismatch.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Largest walk length checked by weakwalk and census
        #[arg(long)]
        kmax: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        trials: usize,
        /// Print the report as JSON
        #[arg(long)]
        json: bool,
        objects: Vec<String>,
    },
    /// Graphviz rendering.
    Dot {
        /// Graph name in the DOT header; defaults to the input name
        #[arg(long)]
        name: Option<String>,
        a: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ProductKind {
    BoxQ,
    BoxH,
    BoxR,
    Laplacian,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExpKind {
    BoxQ,
    BoxH,
    BoxM,
    BoxR,
    BoxV,
    Laplacian,
}

#[derive(Clone, Copy, ValueEnum)]
enum FunctorName {
    #[value(name = "U")]
    U,
    #[value(name = "D")]
    D,
    #[value(name = "N")]
    N,
    #[value(name = "Del")]
    Del,
    #[value(name = "I")]
    I,
    #[value(name = "UpsilonDiamond")]
    UpsilonDiamond,
    #[value(name = "UUpsilonDiamond")]
    UUpsilonDiamond,
}

#[derive(Clone, Copy, ValueEnum)]
enum Monic {
    Incidence,
    Vertex,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    #[value(name = "H")]
    H,
    #[value(name = "A")]
    A,
    #[value(name = "D")]
    D,
    #[value(name = "L")]
    L,
    #[value(name = "Hbar")]
    Hbar,
    #[value(name = "Lbar")]
    Lbar,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Coherence,
    Adjunction,
    Weakwalk,
    Census,
    Functors,
}

enum Failure {
    Input(String),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Run<T> = Result<T, Failure>;

fn input<T>(msg: impl Into<String>) -> Run<T> {
    Err(Failure::Input(msg.into()))
}

struct Loaded {
    name: String,
    doc: Document,
}

fn load(arg: &str) -> Run<Loaded> {
    let path = Path::new(arg);
    if path.exists() {
        let name = path.file_stem().map_or_else(|| arg.to_string(), |s| s.to_string_lossy().into_owned());
        return Ok(Loaded { name, doc: read_document(path)? });
    }
    match generator(arg) {
        Some(object) => Ok(Loaded { name: arg.replace(['(', ')'], ""), doc: Document { object, orientation: None } }),
        None => input(format!("`{arg}` is neither a readable file nor a generator name")),
    }
}

fn category(o: &Object) -> &'static str {
    match o {
        Object::Quiver(_) => "quiver",
        Object::Hypergraph(_) => "hypergraph",
        Object::Incidence(_) => "incidence",
    }
}

fn quiver(l: &Loaded) -> Run<&Quiver> {
    match &l.doc.object {
        Object::Quiver(q) => Ok(q),
        o => input(format!("`{}` is a {} object, expected a quiver", l.name, category(o))),
    }
}

fn hypergraph(l: &Loaded) -> Run<&SetSystemHypergraph> {
    match &l.doc.object {
        Object::Hypergraph(h) => Ok(h),
        o => input(format!("`{}` is a {} object, expected a hypergraph", l.name, category(o))),
    }
}

fn incidence(l: &Loaded) -> Run<&IncidenceHypergraph> {
    match &l.doc.object {
        Object::Incidence(g) => Ok(g),
        o => input(format!("`{}` is a {} object, expected an incidence hypergraph", l.name, category(o))),
    }
}

fn emit(out: Option<&Path>, text: &str) -> Run<()> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::Input(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn json(o: Object) -> String {
    to_json(&o, None)
}

fn parse_anchor(spec: &str, object: &Object) -> Run<(SortKind, Elem, Elem)> {
    let (kind, rest) = match spec.split_once('@') {
        Some((k, rest)) => {
            let kind = match k {
                "vertex" | "v" => SortKind::Vertex,
                "edge" | "e" => SortKind::Edge,
                "incidence" | "i" => SortKind::Incidence,
                _ => return input(format!("unknown sort `{k}` in anchor `{spec}`")),
            };
            (Some(kind), rest)
        }
        None => (None, spec),
    };
    let Some((x, y)) = rest.split_once('=') else {
        return input(format!("anchor `{spec}` is not of the form x=y"));
    };
    let x: Elem = x.trim().parse()?;
    let y: Elem = y.trim().parse()?;
    let kind = match kind {
        Some(k) => k,
        None => {
            let sorts: &[SortKind] = match object {
                Object::Incidence(_) => &[SortKind::Vertex, SortKind::Edge, SortKind::Incidence],
                _ => &[SortKind::Vertex, SortKind::Edge],
            };
            let hits: Vec<SortKind> = sorts.iter().copied().filter(|&k| contains(object, k, &x)).collect();
            match hits[..] {
                [k] => k,
                [] => return input(format!("anchor `{spec}`: `{x}` is not an element of the domain")),
                _ => return input(format!("anchor `{spec}`: `{x}` is ambiguous, prefix it with kind@")),
            }
        }
    };
    Ok((kind, x, y))
}

fn contains(o: &Object, kind: SortKind, x: &Elem) -> bool {
    match o {
        Object::Quiver(q) => kind != SortKind::Incidence && q.sort(kind).contains(x),
        Object::Hypergraph(h) => kind != SortKind::Incidence && h.sort(kind).contains(x),
        Object::Incidence(g) => g.sort(kind).contains(x),
    }
}

fn homs_text<O>(a: &O, b: &O, opts: &SearchOptions, count: bool) -> Run<String>
where
    O: HomSearch,
    O::Morphism: Morphism,
{
    if count {
        return Ok(format!("{}\n", a.count_with(b, opts)?));
    }
    let labels: Vec<String> = a.homs_with(b, opts)?.iter().map(|m| m.to_elem().to_string()).collect();
    Ok(serde_json::to_string_pretty(&labels).expect("strings serialize") + "\n")
}

fn orientation_for(l: &Loaded, g: &IncidenceHypergraph, flag: Option<&str>) -> Run<Orientation> {
    Ok(match flag {
        Some("all-plus") => Orientation::all_plus(g),
        Some("all-minus") => Orientation::all_minus(g),
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("cannot read {path}: {e}")))?;
            let pairs: Vec<(Elem, i8)> =
                serde_json::from_str(&text).map_err(|e| Failure::Input(format!("orientation file {path}: {e}")))?;
            Orientation::from_labels(g, &pairs).map_err(Error::from)?
        }
        None => l.doc.orientation.clone().unwrap_or_else(|| Orientation::all_plus(g)),
    })
}

fn finish(report: SuiteReport, as_json: bool, out: Option<&Path>) -> Run<()> {
    let text = if as_json {
        serde_json::to_string_pretty(&report).expect("reports serialize") + "\n"
    } else {
        report.to_text()
    };
    emit(out, &text)?;
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Mismatch(format!("{} of {} cases failed", report.failures().count(), report.cases.len())))
    }
}

fn run(cli: Cli) -> Run<()> {
    let out = cli.out.as_deref();
    match cli.cmd {
        Cmd::Product { kind, a, b } => {
            let (a, b) = (load(&a)?, load(&b)?);
            let o = match kind {
                ProductKind::BoxQ => Object::Quiver(box_q(quiver(&a)?, quiver(&b)?)),
                ProductKind::BoxH => Object::Hypergraph(box_h(hypergraph(&a)?, hypergraph(&b)?)),
                ProductKind::BoxR => Object::Incidence(box_r(incidence(&a)?, incidence(&b)?)),
                ProductKind::Laplacian => Object::Incidence(laplacian_product(incidence(&a)?, incidence(&b)?)),
            };
            emit(out, &json(o))
        }
        Cmd::Exp { kind, a, b } => {
            let (a, b) = (load(&a)?, load(&b)?);
            let o = match kind {
                ExpKind::BoxQ => Object::Quiver(exp_box_q(quiver(&a)?, quiver(&b)?).carrier().clone()),
                ExpKind::BoxH => Object::Hypergraph(exp_box_h(hypergraph(&a)?, hypergraph(&b)?)?.carrier().clone()),
                ExpKind::BoxM => Object::Hypergraph(exp_box_m(hypergraph(&a)?, hypergraph(&b)?)?.carrier().clone()),
                ExpKind::BoxR | ExpKind::BoxV => {
                    Object::Incidence(exp_box_r(incidence(&a)?, incidence(&b)?)?.carrier().clone())
                }
                ExpKind::Laplacian => Object::Incidence(exp_laplacian(incidence(&a)?, incidence(&b)?).carrier().clone()),
            };
            emit(out, &json(o))
        }
        Cmd::Dual { a } => {
            let a = load(&a)?;
            emit(out, &json(Object::Incidence(dual(incidence(&a)?))))
        }
        Cmd::Functor { name, a } => {
            let a = load(&a)?;
            let o = match name {
                FunctorName::U => Object::Hypergraph(functors::undirect(quiver(&a)?)),
                FunctorName::D => Object::Quiver(functors::associated_digraph(hypergraph(&a)?)?),
                FunctorName::N => Object::Hypergraph(functors::inclusion_n(hypergraph(&a)?)?),
                FunctorName::Del => Object::Hypergraph(functors::del(hypergraph(&a)?)),
                FunctorName::I => Object::Incidence(functors::incidence_forming(hypergraph(&a)?)),
                FunctorName::UpsilonDiamond => Object::Quiver(functors::bipartite_incidence(incidence(&a)?)),
                FunctorName::UUpsilonDiamond => Object::Hypergraph(functors::u_bipartite(incidence(&a)?)),
            };
            emit(out, &json(o))
        }
        Cmd::Homs { a, b, anchor, count, monic } => {
            let (a, b) = (load(&a)?, load(&b)?);
            let mut anchors = Anchors::new();
            for spec in &anchor {
                let (k, x, y) = parse_anchor(spec, &a.doc.object)?;
                anchors.push(k, x, y);
            }
            let mut opts = SearchOptions::anchored(anchors);
            match monic {
                Some(Monic::Incidence) => {
                    incidence(&a)?;
                    opts = opts.injective(SortKind::Incidence);
                }
                Some(Monic::Vertex) => opts = opts.injective(SortKind::Vertex),
                None => {}
            }
            let text = match &a.doc.object {
                Object::Quiver(q) => homs_text(q, quiver(&b)?, &opts, count)?,
                Object::Hypergraph(h) => homs_text(h, hypergraph(&b)?, &opts, count)?,
                Object::Incidence(g) => homs_text(g, incidence(&b)?, &opts, count)?,
            };
            emit(out, &text)
        }
        Cmd::Matrix { which, power, orientation, a } => {
            let a = load(&a)?;
            let g = incidence(&a)?;
            let og = OrientedHypergraph::new(g.clone(), orientation_for(&a, g, orientation.as_deref())?)?;
            let (m, rows, cols) = match which {
                Which::H => (og.incidence_matrix(), og.vertex_labels(), og.edge_labels()),
                Which::A => (og.adjacency_matrix()?, og.vertex_labels(), og.vertex_labels()),
                Which::D => (og.degree_matrix()?, og.vertex_labels(), og.vertex_labels()),
                Which::L => (og.laplacian_matrix()?, og.vertex_labels(), og.vertex_labels()),
                Which::Hbar => (og.complete_incidence()?, og.node_labels(), og.node_labels()),
                Which::Lbar => (og.complete_laplacian()?, og.node_labels(), og.node_labels()),
            };
            let m = match power {
                1 => m,
                _ if m.rows() != m.cols() => return input("only square matrices have powers"),
                k => m.pow(k)?,
            };
            emit(out, &m.to_csv_labelled(&rows, &cols))
        }
        Cmd::Verify { suite, kmax, seed, trials, json, objects } => {
            let loaded: Vec<Loaded> = objects.iter().map(|o| load(o)).collect::<Run<_>>()?;
            let report = match suite {
                Suite::Coherence | Suite::Adjunction | Suite::Functors if !loaded.is_empty() => {
                    return input("this suite draws its own random objects; pass --seed instead of files");
                }
                Suite::Coherence => suites::coherence(seed, trials)?,
                Suite::Adjunction => suites::adjunction(seed, trials)?,
                Suite::Functors => suites::functors(seed, trials)?,
                Suite::Weakwalk => {
                    let corpus = if loaded.is_empty() {
                        suites::named_corpus(seed, 20)
                    } else {
                        let mut v = Vec::new();
                        for l in &loaded {
                            let g = incidence(l)?;
                            let o = l.doc.orientation.clone().unwrap_or_else(|| Orientation::all_plus(g));
                            v.push((l.name.clone(), OrientedHypergraph::new(g.clone(), o)?));
                        }
                        v
                    };
                    suites::weakwalk(&corpus, kmax.unwrap_or(4))?
                }
                Suite::Census => {
                    let corpus = if loaded.is_empty() {
                        suites::named_corpus(seed, 10).into_iter().map(|(n, g)| (n, g.graph().clone())).collect()
                    } else {
                        loaded.iter().map(|l| Ok((l.name.clone(), incidence(l)?.clone()))).collect::<Run<Vec<_>>>()?
                    };
                    suites::census(&corpus, kmax.unwrap_or(2))?
                }
            };
            finish(report, json, out)
        }
        Cmd::Dot { name, a } => {
            let a = load(&a)?;
            emit(out, &to_dot(&a.doc.object, name.as_deref().unwrap_or(&a.name)))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch(msg)) => {
            eprintln!("hyperbox: verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("hyperbox: {msg}");
            ExitCode::from(2)
        }
    }
}
