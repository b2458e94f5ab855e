use crate::document::{
    ColorfulDoc, ColoringDoc, Document, EmbeddingDoc, KuratowskiDoc, MinorDoc, NotApplicableDoc,
    TraceDoc,
};
use crate::instance::{emit_instance, parse_id_list, parse_instance, Instance};
use clap::{Parser, Subcommand, ValueEnum};
use rootminor::coloring::{chromatic_number, find_avoiding_coloring, is_colorful};
use rootminor::gen;
use rootminor::minors::{rooted_k3, rooted_k4, DEFAULT_ORACLE_CAP};
use rootminor::planar::{apex_graph, planarity, Planarity};
use rootminor::solver::{k5_singleton, solve_with, K5Outcome, SolveOptions, SolveOutcome};
use rootminor::{Error, Graph};
use std::path::{Path, PathBuf};

pub mod exit {
    pub const OK: i32 = 0;
    pub const INVALID: i32 = 1;
    pub const INTERNAL: i32 = 1;
    pub const INPUT: i32 = 2;
    pub const PRECONDITION: i32 = 3;
    pub const KIND_MISMATCH: i32 = 4;
    pub const UNSATISFIABLE: i32 = 5;
    pub const NEGATIVE: i32 = 10;
    pub const NOT_APPLICABLE: i32 = 11;
}

/// Largest instance `gen` will produce.
pub const MAX_GEN_SIZE: usize = 200;

#[derive(Parser, Debug)]
#[command(
    name = "rootminor",
    version,
    about = "Rooted K4-minors or color-avoiding 4-colorings, with certificates"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    #[value(name = "random-3conn")]
    Random3Conn,
    Wheel,
    Planar,
    Critical5,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Find an S-rooted K4 minor or a 4-coloring missing a color on S.
    Solve {
        instance: PathBuf,
        /// Root set (1-based, comma separated); overrides the file's root line.
        #[arg(long)]
        roots: Option<String>,
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        oracle_cap: usize,
        /// Write the reduction trace here.
        #[arg(long)]
        trace_out: Option<PathBuf>,
    },
    /// Check a certificate against an instance.
    Verify {
        instance: PathBuf,
        certificate: PathBuf,
        /// Fail with exit 4 unless the certificate has this kind.
        #[arg(long)]
        kind: Option<String>,
    },
    /// Decide whether the root set receives every color in every optimal coloring.
    CheckColorful {
        instance: PathBuf,
        #[arg(long)]
        roots: Option<String>,
    },
    /// Print a generated instance.
    Gen {
        kind: GenKind,
        size: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// K5 minor with {v} as a branch set in a 5-chromatic graph.
    K5 {
        instance: PathBuf,
        /// 1-based vertex id.
        #[arg(long)]
        vertex: usize,
    },
    /// Rooted K3 minor on three roots.
    RootedK3 {
        instance: PathBuf,
        #[arg(long)]
        roots: Option<String>,
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        oracle_cap: usize,
    },
    /// Rooted K4 minor on four roots.
    RootedK4 {
        instance: PathBuf,
        #[arg(long)]
        roots: Option<String>,
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        oracle_cap: usize,
    },
    /// Planarity of the graph plus a vertex adjacent to every root.
    PlanarApex {
        instance: PathBuf,
        #[arg(long)]
        roots: Option<String>,
    },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn doc(code: i32, doc: &Document) -> Self {
        Outcome {
            code,
            stdout: doc.to_json(),
            stderr: String::new(),
        }
    }

    fn fail(code: i32, msg: impl Into<String>) -> Self {
        let mut stderr = msg.into();
        stderr.push('\n');
        Outcome {
            code,
            stdout: String::new(),
            stderr,
        }
    }

    fn note(mut self, msg: impl Into<String>) -> Self {
        self.stderr.push_str(&msg.into());
        self.stderr.push('\n');
        self
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli),
        Err(e) => {
            let code = if e.use_stderr() {
                exit::INPUT
            } else {
                exit::OK
            };
            let text = e.to_string();
            if code == exit::OK {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome::fail(code, text.trim_end())
            }
        }
    }
}

pub fn run(cli: Cli) -> Outcome {
    let result = match cli.command {
        Command::Solve {
            instance,
            roots,
            oracle_cap,
            trace_out,
        } => cmd_solve(
            &instance,
            roots.as_deref(),
            oracle_cap,
            trace_out.as_deref(),
        ),
        Command::Verify {
            instance,
            certificate,
            kind,
        } => cmd_verify(&instance, &certificate, kind.as_deref()),
        Command::CheckColorful { instance, roots } => {
            cmd_check_colorful(&instance, roots.as_deref())
        }
        Command::Gen { kind, size, seed } => Ok(cmd_gen(kind, size, seed)),
        Command::K5 { instance, vertex } => cmd_k5(&instance, vertex),
        Command::RootedK3 {
            instance,
            roots,
            oracle_cap,
        } => cmd_rooted(&instance, roots.as_deref(), oracle_cap, 3),
        Command::RootedK4 {
            instance,
            roots,
            oracle_cap,
        } => cmd_rooted(&instance, roots.as_deref(), oracle_cap, 4),
        Command::PlanarApex { instance, roots } => cmd_planar_apex(&instance, roots.as_deref()),
    };
    result.unwrap_or_else(|o| o)
}

type CmdResult = Result<Outcome, Outcome>;

fn read(path: &Path) -> Result<String, Outcome> {
    std::fs::read_to_string(path)
        .map_err(|e| Outcome::fail(exit::INPUT, format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<Instance, Outcome> {
    let text = read(path)?;
    parse_instance(&text)
        .map_err(|e| Outcome::fail(exit::INPUT, format!("{}: {e}", path.display())))
}

/// The `--roots` flag if given, else the file's root line.
fn roots_for(inst: &Instance, flag: Option<&str>) -> Result<Vec<usize>, Outcome> {
    match flag {
        Some(text) => {
            let mut r = parse_id_list(text, inst.graph.n())
                .map_err(|e| Outcome::fail(exit::INPUT, format!("--roots: {}", e.msg)))?;
            r.sort_unstable();
            r.dedup();
            Ok(r)
        }
        None => inst
            .roots
            .clone()
            .ok_or_else(|| Outcome::fail(exit::INPUT, "instance has no root set")),
    }
}

fn library_error(e: Error) -> Outcome {
    match e {
        Error::ChromaticNumberExceeds(k) => {
            Outcome::fail(exit::PRECONDITION, format!("chromatic number exceeds {k}"))
        }
        Error::Internal(msg) => Outcome::fail(exit::INTERNAL, format!("internal error: {msg}")),
        other => Outcome::fail(exit::INPUT, other.to_string()),
    }
}

pub fn cmd_solve(
    path: &Path,
    roots: Option<&str>,
    oracle_cap: usize,
    trace_out: Option<&Path>,
) -> CmdResult {
    let inst = load(path)?;
    let s = roots_for(&inst, roots)?;
    let (outcome, trace) =
        solve_with(&inst.graph, &s, &SolveOptions { oracle_cap }).map_err(library_error)?;
    if let Some(out) = trace_out {
        std::fs::write(out, Document::Trace(TraceDoc::from_trace(&trace)).to_json())
            .map_err(|e| Outcome::fail(exit::INPUT, format!("{}: {e}", out.display())))?;
    }
    let case = trace.records.first().map(|r| r.case.label().to_string());
    Ok(match outcome {
        SolveOutcome::Minor(cert) => {
            Outcome::doc(exit::OK, &Document::Minor(MinorDoc::from_cert(&cert, case)))
        }
        SolveOutcome::Avoiding(cert) => Outcome::doc(
            exit::NEGATIVE,
            &Document::Coloring(ColoringDoc::from_cert(&cert, case)),
        ),
    })
}

fn check_doc(g: &Graph, doc: &Document) -> Result<(), String> {
    match doc {
        Document::Minor(d) => d.to_cert()?.check(g).map_err(|e| e.to_string()),
        Document::Coloring(d) => d.to_cert(g)?.validate(g).map_err(|e| e.to_string()),
        Document::Trace(d) => {
            let trace = d.to_trace()?;
            trace.replay()?;
            match trace.records.first() {
                Some(r) if r.stage_graph().map_err(|e| e.to_string())? != *g => {
                    Err("first record is not the instance graph".into())
                }
                _ => Ok(()),
            }
        }
        Document::Embedding(d) => {
            let target = stage_for(g, d.n, d.apex, &d.roots)?;
            let emb = d.to_embedding()?;
            emb.validate(&target)?;
            if d.apex.is_none() {
                let outer = emb.outer_face_vertices();
                let roots = down_ids(&d.roots)?;
                if let Some(r) = roots.iter().find(|r| !outer.contains(r)) {
                    return Err(format!("root {} is not on the outer face", r + 1));
                }
            }
            Ok(())
        }
        Document::Kuratowski(d) => {
            let target = stage_for(g, d.n, d.apex, &d.roots)?;
            d.to_witness()?.verify(&target)
        }
        Document::Colorful(d) => {
            let roots = down_ids(&d.roots)?;
            if roots.iter().any(|&r| r >= g.n()) {
                return Err("root out of range".into());
            }
            if chromatic_number(g, g.n()) != Some(d.chromatic_number) {
                return Err("wrong chromatic number".into());
            }
            if !is_colorful(g, &roots) {
                return Err("root set is not colorful".into());
            }
            Ok(())
        }
        Document::NotApplicable(_) => unreachable!("filtered by the caller"),
    }
}

fn down_ids(v: &[usize]) -> Result<Vec<usize>, String> {
    v.iter()
        .map(|&x| {
            x.checked_sub(1)
                .ok_or_else(|| "vertex ids are 1-based".to_string())
        })
        .collect()
}

/// The graph an embedding or witness document describes.
fn stage_for(g: &Graph, n: usize, apex: Option<usize>, roots: &[usize]) -> Result<Graph, String> {
    if n != g.n() {
        return Err(format!(
            "document is for {n} vertices, instance has {}",
            g.n()
        ));
    }
    match apex {
        None => Ok(g.clone()),
        Some(a) if a == n + 1 => {
            let roots = down_ids(roots)?;
            apex_graph(g, &roots)
                .map(|x| x.graph)
                .map_err(|e| e.to_string())
        }
        Some(a) => Err(format!("apex must be vertex {}, got {a}", n + 1)),
    }
}

pub fn cmd_verify(instance: &Path, certificate: &Path, kind: Option<&str>) -> CmdResult {
    let inst = load(instance)?;
    let text = read(certificate)?;
    let doc = Document::from_json(&text)
        .map_err(|e| Outcome::fail(exit::INPUT, format!("{}: {e}", certificate.display())))?;
    if let Some(want) = kind {
        if want != doc.kind() {
            return Err(Outcome::fail(
                exit::KIND_MISMATCH,
                format!("expected a {want} certificate, got {}", doc.kind()),
            ));
        }
    }
    if matches!(doc, Document::NotApplicable(_)) {
        return Err(Outcome::fail(
            exit::KIND_MISMATCH,
            "not-applicable reports are not certificates",
        ));
    }
    match check_doc(&inst.graph, &doc) {
        Ok(()) => Ok(Outcome {
            code: exit::OK,
            stdout: format!("valid {}\n", doc.kind()),
            stderr: String::new(),
        }),
        Err(msg) => Err(Outcome::fail(
            exit::INVALID,
            format!("invalid {}: {msg}", doc.kind()),
        )),
    }
}

pub fn cmd_check_colorful(path: &Path, roots: Option<&str>) -> CmdResult {
    let inst = load(path)?;
    let s = roots_for(&inst, roots)?;
    let g = &inst.graph;
    let chi = chromatic_number(g, g.n()).expect("n colors always suffice");
    match find_avoiding_coloring(g, &s, chi) {
        None => Ok(Outcome::doc(
            exit::OK,
            &Document::Colorful(ColorfulDoc {
                roots: s.iter().map(|r| r + 1).collect(),
                chromatic_number: chi,
            }),
        )
        .note("colorful")),
        Some(cert) => Ok(Outcome::doc(
            exit::NEGATIVE,
            &Document::Coloring(ColoringDoc::from_cert(&cert, None)),
        )
        .note("not colorful")),
    }
}

/// Generated instance text, or `None` when the kind has no graph of this size.
pub fn generate(kind: GenKind, size: usize, seed: u64) -> Option<String> {
    let g = match kind {
        GenKind::Random3Conn => gen::random_3conn(size, seed).filter(|g| g.is_k_connected(3)),
        GenKind::Wheel => gen::wheel(size),
        GenKind::Planar => Some(gen::planar(size, seed)).filter(rootminor::planar::is_planar),
        GenKind::Critical5 => gen::critical5(size, seed),
    }?;
    let roots = Some(g.vertices().collect());
    Some(emit_instance(&Instance { graph: g, roots }))
}

pub fn cmd_gen(kind: GenKind, size: usize, seed: u64) -> Outcome {
    if size > MAX_GEN_SIZE {
        return Outcome::fail(exit::INPUT, format!("size is capped at {MAX_GEN_SIZE}"));
    }
    match generate(kind, size, seed) {
        Some(text) => Outcome {
            code: exit::OK,
            stdout: text,
            stderr: String::new(),
        },
        None => {
            let name = kind
                .to_possible_value()
                .map(|v| v.get_name().to_string())
                .unwrap_or_default();
            Outcome::fail(
                exit::UNSATISFIABLE,
                format!("no {name} instance of size {size}"),
            )
        }
    }
}

pub fn cmd_k5(path: &Path, vertex: usize) -> CmdResult {
    let inst = load(path)?;
    let g = &inst.graph;
    if vertex == 0 || vertex > g.n() {
        return Err(Outcome::fail(
            exit::INPUT,
            format!("--vertex {vertex} outside 1..={}", g.n()),
        ));
    }
    match k5_singleton(g, vertex - 1).map_err(library_error)? {
        K5Outcome::Found(cert) => Ok(Outcome::doc(
            exit::OK,
            &Document::Minor(MinorDoc::from_cert(&cert, None)),
        )),
        K5Outcome::NotApplicable { reason, witness } => {
            let doc = NotApplicableDoc {
                vertex,
                reason: reason.clone(),
                witness: witness.as_ref().map(|w| ColoringDoc::from_cert(w, None)),
            };
            Ok(
                Outcome::doc(exit::NOT_APPLICABLE, &Document::NotApplicable(doc))
                    .note(format!("not applicable: {reason}")),
            )
        }
    }
}

pub fn cmd_rooted(path: &Path, roots: Option<&str>, oracle_cap: usize, t: usize) -> CmdResult {
    let inst = load(path)?;
    let r = roots_for(&inst, roots)?;
    if r.len() != t {
        return Err(Outcome::fail(
            exit::INPUT,
            format!("expected {t} distinct roots, got {}", r.len()),
        ));
    }
    let g = &inst.graph;
    let found = if t == 3 {
        rooted_k3(g, r[0], r[1], r[2], oracle_cap)
    } else {
        rooted_k4(g, [r[0], r[1], r[2], r[3]], oracle_cap)
    }
    .map_err(library_error)?;
    Ok(match found {
        Some(cert) => Outcome::doc(exit::OK, &Document::Minor(MinorDoc::from_cert(&cert, None))),
        None => Outcome::fail(exit::NEGATIVE, format!("no rooted K{t} minor")),
    })
}

pub fn cmd_planar_apex(path: &Path, roots: Option<&str>) -> CmdResult {
    let inst = load(path)?;
    let r = roots_for(&inst, roots)?;
    let g = &inst.graph;
    let apex = apex_graph(g, &r).map_err(library_error)?;
    Ok(match planarity(&apex.graph) {
        Planarity::Planar(emb) => Outcome::doc(
            exit::OK,
            &Document::Embedding(EmbeddingDoc::from_embedding(
                g.n(),
                Some(apex.apex),
                &r,
                &emb,
            )),
        ),
        Planarity::NonPlanar(w) => Outcome::doc(
            exit::NEGATIVE,
            &Document::Kuratowski(KuratowskiDoc::from_witness(g.n(), Some(apex.apex), &r, &w)),
        ),
    })
}
