//! Command-line front end. Parsing lives in [`Cli`], dispatch in [`run`].

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::cpt_models::{
    named_constructive_table, named_cpt_labels, named_group, named_irreps, verify_paper,
    CONSTRUCTIVE_IDS, GROUP_IDS,
};
use crate::error::{Error, Result};
use crate::exact_arith::CMatrix;
use crate::group_core::{embeds, is_isomorphic, FiniteGroup};
use crate::repr_theory::{character_table, class_header, tables_match, Character, CharacterTable};

#[derive(Parser, Debug)]
#[command(name = "cptgroups", version, about = "Exact CPT group and character table toolkit")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format (default: json for `export`, text otherwise).
    #[arg(long, short, global = true, value_enum)]
    pub format: Option<Format>,

    /// Write output to this file instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Latex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Class-algebra eigenvector method.
    Dixon,
    /// Characters of the explicitly constructed irreps.
    Constructive,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a named group and print its order, generators and Cayley table.
    Build { id: String },
    /// List conjugacy classes.
    Classes { id: String },
    /// Compute the character table.
    Chartable {
        id: String,
        #[arg(long, value_enum, default_value_t = Method::Dixon)]
        method: Method,
    },
    /// Print the constructed irreducible representations.
    Irreps { id: String },
    /// Decide isomorphism and compare character tables.
    Iso { a: String, b: String },
    /// Search for an injective homomorphism from the first group into the second.
    Embed { h: String, g: String },
    /// Recompute every reference fixture and classify the outcome.
    VerifyPaper,
    /// Export group, classes, character table and irreps as one JSON document.
    Export { id: String },
}

/// Rendered output and process exit status.
#[derive(Debug)]
pub struct Outcome {
    pub text: String,
    pub status: i32,
}

fn check_id(id: &str) -> Result<()> {
    if GROUP_IDS.contains(&id) {
        Ok(())
    } else {
        Err(Error::UnknownGroup(id.to_string()))
    }
}

fn unsupported(verb: &str, format: Format) -> Error {
    Error::Usage(format!("format `{}` is not supported by `{verb}`", format!("{format:?}").to_lowercase()))
}

/// The named group with CPT labels as element names where the group carries them.
pub fn display_group(id: &str) -> Result<FiniteGroup> {
    check_id(id)?;
    let g = named_group(id)?;
    match named_cpt_labels(id)? {
        Some(labels) => g.relabeled(labels.iter().map(|l| l.to_string()).collect()),
        None => Ok(g),
    }
}

/// Moves a table onto a relabelled copy of its group (same Cayley table).
fn onto(table: &CharacterTable, g: &FiniteGroup) -> Result<CharacterTable> {
    let rows = table
        .rows()
        .iter()
        .map(|r| Character::new(g, r.values().to_vec()))
        .collect::<Result<Vec<_>>>()?;
    CharacterTable::new(g, rows, table.provenance().to_vec())?.with_row_names(table.row_names().to_vec())
}

fn table_for(id: &str, method: Method) -> Result<CharacterTable> {
    let g = display_group(id)?;
    match method {
        Method::Dixon => character_table(&g),
        Method::Constructive => {
            if !CONSTRUCTIVE_IDS.contains(&id) {
                return Err(Error::UnknownGroup(format!("{id} (no constructive irreps)")));
            }
            onto(&named_constructive_table(id)?, &g)
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn matrix_rows(m: &CMatrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|r| m.row(r).iter().map(|v| v.to_string()).collect()).collect()
}

fn pretty_json(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn build(id: &str, format: Format) -> Result<String> {
    let g = display_group(id)?;
    match format {
        Format::Json => Ok(pretty_json(&serde_json::to_value(g.to_json()).expect("serializable"))),
        Format::Text => {
            let mut out = String::new();
            let gens: Vec<&str> = g.generators().iter().map(|&x| g.label(x)).collect();
            let _ = writeln!(out, "{id}: order {}, {} classes", g.order(), g.class_count());
            let _ = writeln!(out, "generators: {}", gens.join(", "));
            let _ = writeln!(out, "elements: {}", g.labels().join(", "));
            Ok(out)
        }
        Format::Csv => {
            let mut out = String::from("*");
            for l in g.labels() {
                out.push(',');
                out.push_str(&csv_field(l));
            }
            out.push('\n');
            for a in g.elements() {
                out.push_str(&csv_field(g.label(a)));
                for b in g.elements() {
                    out.push(',');
                    out.push_str(&csv_field(g.label(g.mul(a, b))));
                }
                out.push('\n');
            }
            Ok(out)
        }
        Format::Latex => Err(unsupported("build", format)),
    }
}

fn classes(id: &str, format: Format) -> Result<String> {
    let g = display_group(id)?;
    let classes = g.conjugacy_classes();
    let members = |k: usize| -> Vec<&str> { classes[k].members.iter().map(|&x| g.label(x)).collect() };
    match format {
        Format::Text => {
            let mut out = format!("{id}: {} classes\n", classes.len());
            for (k, c) in classes.iter().enumerate() {
                let _ = writeln!(
                    out,
                    "{} = {{{}}}  (order {})",
                    class_header(c.size(), g.label(c.representative)),
                    members(k).join(", "),
                    g.element_order(c.representative)
                );
            }
            Ok(out)
        }
        Format::Json => {
            let v: Vec<serde_json::Value> = classes
                .iter()
                .enumerate()
                .map(|(k, c)| {
                    json!({
                        "representative": g.label(c.representative),
                        "size": c.size(),
                        "element_order": g.element_order(c.representative),
                        "members": members(k),
                    })
                })
                .collect();
            Ok(pretty_json(&json!({ "group": id, "classes": v })))
        }
        Format::Csv => {
            let mut out = String::from("class,size,element_order,members\n");
            for (k, c) in classes.iter().enumerate() {
                let _ = writeln!(
                    out,
                    "{},{},{},{}",
                    csv_field(g.label(c.representative)),
                    c.size(),
                    g.element_order(c.representative),
                    csv_field(&members(k).join(" "))
                );
            }
            Ok(out)
        }
        Format::Latex => Err(unsupported("classes", format)),
    }
}

fn chartable(id: &str, method: Method, format: Format) -> Result<String> {
    let t = table_for(id, method)?;
    Ok(match format {
        Format::Text => t.to_text(),
        Format::Json => pretty_json(&t.to_json_value()),
        Format::Csv => t.to_csv(),
        Format::Latex => t.to_latex(),
    })
}

fn irreps(id: &str, format: Format) -> Result<String> {
    check_id(id)?;
    let g = display_group(id)?;
    let reps = named_irreps(id)?;
    match format {
        Format::Text => {
            let mut out = String::new();
            for r in &reps {
                let _ = writeln!(out, "{} (dim {})", r.name, r.rep.dim());
                for x in g.elements() {
                    let _ = writeln!(out, "  {}: {}", g.label(x), r.rep.matrix(x));
                }
            }
            Ok(out)
        }
        Format::Json => {
            let v: Vec<serde_json::Value> = reps
                .iter()
                .map(|r| {
                    let mats: Vec<serde_json::Value> = g
                        .elements()
                        .map(|x| json!({ "element": g.label(x), "matrix": matrix_rows(r.rep.matrix(x)) }))
                        .collect();
                    json!({ "name": r.name, "dim": r.rep.dim(), "provenance": r.provenance, "matrices": mats })
                })
                .collect();
            Ok(pretty_json(&json!({ "group": id, "irreps": v })))
        }
        Format::Csv => {
            let mut out = String::from("irrep,element,matrix\n");
            for r in &reps {
                for x in g.elements() {
                    let m = r.rep.matrix(x);
                    let cell = (0..m.rows())
                        .map(|k| m.row(k).iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
                        .collect::<Vec<_>>()
                        .join("; ");
                    let _ = writeln!(out, "{},{},{}", csv_field(&r.name), csv_field(g.label(x)), csv_field(&cell));
                }
            }
            Ok(out)
        }
        Format::Latex => Err(unsupported("irreps", format)),
    }
}

fn iso(a: &str, b: &str, format: Format) -> Result<String> {
    let (ga, gb) = (display_group(a)?, display_group(b)?);
    let hom = is_isomorphic(&ga, &gb);
    let same = tables_match(&character_table(&ga)?, &character_table(&gb)?).is_some();
    match format {
        Format::Text => {
            let verdict = if hom.is_some() { "isomorphic" } else { "not isomorphic" };
            let tables = if same { "character tables match" } else { "character tables differ" };
            let mut out = format!("{verdict}; {tables}\n");
            if let Some(h) = hom {
                for x in ga.generators() {
                    let _ = writeln!(out, "  {} -> {}", ga.label(*x), gb.label(h.apply(*x)));
                }
            }
            Ok(out)
        }
        Format::Json => Ok(pretty_json(&json!({
            "a": a,
            "b": b,
            "isomorphic": hom.is_some(),
            "character_tables_match": same,
            "generator_images": hom.map(|h| ga.generators().iter()
                .map(|&x| json!([ga.label(x), gb.label(h.apply(x))]))
                .collect::<Vec<_>>()),
        }))),
        _ => Err(unsupported("iso", format)),
    }
}

fn embed(h: &str, g: &str, format: Format) -> Result<String> {
    let (gh, gg) = (display_group(h)?, display_group(g)?);
    let found = embeds(&gh, &gg);
    match format {
        Format::Text => Ok(match found {
            None => format!("{h} does not embed in {g}\n"),
            Some(e) => {
                let mut out = format!("{h} embeds in {g}\n");
                for x in gh.elements() {
                    let _ = writeln!(out, "  {} -> {}", gh.label(x), gg.label(e.apply(x)));
                }
                out
            }
        }),
        Format::Json => Ok(pretty_json(&json!({
            "h": h,
            "g": g,
            "embeds": found.is_some(),
            "map": found.map(|e| gh.elements().map(|x| json!([gh.label(x), gg.label(e.apply(x))])).collect::<Vec<_>>()),
        }))),
        _ => Err(unsupported("embed", format)),
    }
}

fn export(id: &str, format: Format) -> Result<String> {
    if format != Format::Json {
        return Err(unsupported("export", format));
    }
    let g = display_group(id)?;
    let table = character_table(&g)?;
    let classes: Vec<serde_json::Value> = g
        .conjugacy_classes()
        .iter()
        .map(|c| {
            json!({
                "representative": c.representative.index(),
                "members": c.members.iter().map(|x| x.index()).collect::<Vec<_>>(),
            })
        })
        .collect();
    let rows: Vec<serde_json::Value> = table
        .rows()
        .iter()
        .zip(table.row_names())
        .map(|(r, name)| json!({ "name": name, "values": r.values() }))
        .collect();
    let irreps: Option<Vec<serde_json::Value>> = if CONSTRUCTIVE_IDS.contains(&id) {
        Some(
            named_irreps(id)?
                .iter()
                .map(|r| json!({ "name": r.name, "dim": r.rep.dim(), "matrices": r.rep.matrices() }))
                .collect(),
        )
    } else {
        None
    };
    Ok(pretty_json(&json!({
        "id": id,
        "group": g.to_json(),
        "classes": classes,
        "character_table": rows,
        "irreps": irreps,
    })))
}

fn verify(format: Format) -> Result<Outcome> {
    let report = verify_paper();
    let text = match format {
        Format::Text => report.to_text(),
        Format::Json => pretty_json(&report.to_json_value()),
        _ => return Err(unsupported("verify-paper", format)),
    };
    Ok(Outcome { text, status: if report.is_passing() { 0 } else { 2 } })
}

/// Executes a parsed command. Output is written to the requested file, or returned for printing.
pub fn run(cli: &Cli) -> Result<Outcome> {
    let default = if matches!(cli.command, Command::Export { .. }) { Format::Json } else { Format::Text };
    let f = cli.format.unwrap_or(default);
    let outcome = match &cli.command {
        Command::Build { id } => Outcome { text: build(id, f)?, status: 0 },
        Command::Classes { id } => Outcome { text: classes(id, f)?, status: 0 },
        Command::Chartable { id, method } => Outcome { text: chartable(id, *method, f)?, status: 0 },
        Command::Irreps { id } => Outcome { text: irreps(id, f)?, status: 0 },
        Command::Iso { a, b } => Outcome { text: iso(a, b, f)?, status: 0 },
        Command::Embed { h, g } => Outcome { text: embed(h, g, f)?, status: 0 },
        Command::VerifyPaper => verify(f)?,
        Command::Export { id } => Outcome { text: export(id, f)?, status: 0 },
    };
    if let Some(path) = &cli.output {
        std::fs::write(path, &outcome.text)
            .map_err(|e| Error::Io(format!("cannot write {}: {e}", path.display())))?;
        return Ok(Outcome { text: String::new(), status: outcome.status });
    }
    Ok(outcome)
}

/// Parses `args` and runs the command; returns the exit status and what to print on stdout and stderr.
pub fn main_with_args<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 { (0, text, String::new()) } else { (1, String::new(), text) };
        }
    };
    match run(&cli) {
        Ok(o) => (o.status, o.text, String::new()),
        Err(e) => (1, String::new(), format!("error: {e}\n")),
    }
}
