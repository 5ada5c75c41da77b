//! Command-line front end. Objects are passed in the text notation of
//! the library (`A:...`, `Q:...`, `M:...`); results go to stdout,
//! diagnostics to stderr. Exit codes: 0 success, 1 domain error,
//! 2 usage error, and 3 for `equal` when the algebras are not derived
//! equivalent.

use std::collections::BTreeSet;
use std::process::ExitCode;

use quipu::canonical::canonical_form;
use quipu::crswap::{
    cr_swap, cr_swap_inverse, first_relation_to_cord, first_relation_to_cord_steps,
};
use quipu::enumerate::{classify, emit, enumerate_nakayama, enumerate_quipus, Format};
use quipu::invariants::{verify_equivalence, BoundAlgebra};
use quipu::notation::{parse_object, Object};
use quipu::presentations::{
    embed_nakayama, embed_quipu, MarkedQuipuQuiver, NakayamaPresentation, QuipuShape,
};
use quipu::translate::{
    class_invariant, derived_equivalent, equivalence_family, nakayama_to_quipu, quipu_to_nakayama,
    strip_length2,
};

const USAGE: &str = "\
usage: quipu <command> [options]

commands:
  translate --to quipu|nakayama EXPR [--normalize]
  canonical EXPR
  equal EXPR_A EXPR_B            exit 0 when derived equivalent, 3 when not
  family EXPR [--dedupe]
  strip EXPR
  swap EXPR --relation INDEX [--inverse] [--trace]
  first-to-cord EXPR [--iterated] [--trace]
  classify --n N [--min-length 2|3] [--format text|csv|json|latex|dot]
  verify --n N | verify EXPR_A EXPR_B
  enumerate --quipus --n N | --nakayama --n N [--min-length 2|3]
  --version

objects: A:n:[starts]:[lengths]  Q:[segments]:[cords]  M:main:[(pos,len)...]:[(start,len)...]";

enum Failure {
    Usage(String),
    Domain(String),
    NotEquivalent,
}

impl<E: std::error::Error> From<E> for Failure {
    fn from(err: E) -> Self {
        Failure::Domain(err.to_string())
    }
}

fn usage<T>(message: impl Into<String>) -> Result<T, Failure> {
    Err(Failure::Usage(message.into()))
}

struct Options {
    positional: Vec<String>,
    values: Vec<(String, String)>,
    switches: BTreeSet<String>,
}

impl Options {
    fn parse(
        args: &[String],
        value_flags: &[&str],
        switch_flags: &[&str],
    ) -> Result<Self, Failure> {
        let mut positional = Vec::new();
        let mut values = Vec::new();
        let mut switches = BTreeSet::new();
        let mut iter = args.iter();
        while let Some(arg) = iter.next() {
            if let Some(name) = arg.strip_prefix("--") {
                if value_flags.contains(&name) {
                    let Some(value) = iter.next() else {
                        return usage(format!("flag --{name} needs a value"));
                    };
                    values.push((name.to_string(), value.clone()));
                } else if switch_flags.contains(&name) {
                    switches.insert(name.to_string());
                } else {
                    return usage(format!("unknown flag --{name}"));
                }
            } else {
                positional.push(arg.clone());
            }
        }
        Ok(Options {
            positional,
            values,
            switches,
        })
    }

    fn value(&self, name: &str) -> Option<&str> {
        self.values
            .iter()
            .rev()
            .find(|(k, _)| k == name)
            .map(|(_, v)| v.as_str())
    }

    fn switch(&self, name: &str) -> bool {
        self.switches.contains(name)
    }

    fn expect_positional(&self, count: usize, what: &str) -> Result<(), Failure> {
        if self.positional.len() == count {
            Ok(())
        } else {
            usage(format!("expected {what}"))
        }
    }

    fn required(&self, name: &str) -> Result<&str, Failure> {
        match self.value(name) {
            Some(v) => Ok(v),
            None => usage(format!("missing required flag --{name}")),
        }
    }
}

fn parse_count(text: &str, what: &str) -> Result<usize, Failure> {
    match text.parse::<usize>() {
        Ok(n) if n >= 1 => Ok(n),
        _ => usage(format!("{what} must be a positive integer, got '{text}'")),
    }
}

fn parse_min_length(options: &Options) -> Result<usize, Failure> {
    match options.value("min-length") {
        None => Ok(3),
        Some("2") => Ok(2),
        Some("3") => Ok(3),
        Some(other) => usage(format!("--min-length must be 2 or 3, got '{other}'")),
    }
}

fn parse_presentation(text: &str) -> Result<NakayamaPresentation, Failure> {
    text.parse::<NakayamaPresentation>()
        .map_err(|e| Failure::Domain(e.to_string()))
}

fn parse_shape(text: &str) -> Result<QuipuShape, Failure> {
    text.parse::<QuipuShape>()
        .map_err(|e| Failure::Domain(e.to_string()))
}

fn parse_marked(text: &str) -> Result<MarkedQuipuQuiver, Failure> {
    text.parse::<MarkedQuipuQuiver>()
        .map_err(|e| Failure::Domain(e.to_string()))
}

fn cmd_translate(args: &[String]) -> Result<(), Failure> {
    let options = Options::parse(args, &["to"], &["normalize"])?;
    options.expect_positional(1, "one object expression")?;
    let expr = &options.positional[0];
    match options.required("to")? {
        "quipu" => {
            let p = parse_presentation(expr)?;
            let mut shape = nakayama_to_quipu(&p)?;
            if options.switch("normalize") {
                shape = quipu::canonical::normalize(&shape);
            }
            println!("{shape}");
            Ok(())
        }
        "nakayama" => {
            if options.switch("normalize") {
                return usage("--normalize only applies to --to quipu");
            }
            let shape = parse_shape(expr)?;
            println!("{}", quipu_to_nakayama(&shape)?);
            Ok(())
        }
        other => usage(format!("--to must be 'quipu' or 'nakayama', got '{other}'")),
    }
}

fn cmd_canonical(args: &[String]) -> Result<(), Failure> {
    let options = Options::parse(args, &[], &[])?;
    options.expect_positional(1, "one object expression")?;
    match parse_object(&options.positional[0])? {
        Object::Shape(shape) => println!("{}", canonical_form(&shape)),
        Object::Nakayama(p) => println!("{}", class_invariant(&p)?),
        Object::Marked(_) => {
            return usage("canonical takes a quipu (Q:) or presentation (A:) expression")
        }
    }
    Ok(())
}

fn cmd_equal(args: &[String]) -> Result<(), Failure> {
    let options = Options::parse(args, &[], &[])?;
    options.expect_positional(2, "two presentation expressions")?;
    let a = parse_presentation(&options.positional[0])?;
    let b = parse_presentation(&options.positional[1])?;
    if derived_equivalent(&a, &b)? {
        println!("equivalent");
        Ok(())
    } else {
        println!("not equivalent");
        Err(Failure::NotEquivalent)
    }
}

fn cmd_family(args: &[String]) -> Result<(), Failure> {
    let options = Options::parse(args, &[], &["dedupe"])?;
    options.expect_positional(1, "one presentation expression")?;
    let p = parse_presentation(&options.positional[0])?;
    let family = equivalence_family(&p)?;
    if options.switch("dedupe") {
        let dedup: BTreeSet<NakayamaPresentation> = family.into_iter().collect();
        for member in dedup {
            println!("{member}");
        }
    } else {
        for member in family {
            println!("{member}");
        }
    }
    Ok(())
}

fn cmd_strip(args: &[String]) -> Result<(), Failure> {
    let options = Options::parse(args, &[], &[])?;
    options.expect_positional(1, "one presentation expression")?;
    let p = parse_presentation(&options.positional[0])?;
    println!("{}", strip_length2(&p)?);
    Ok(())
}

fn cmd_swap(args: &[String]) -> Result<(), Failure> {
    let options = Options::parse(args, &["relation"], &["inverse", "trace"])?;
    options.expect_positional(1, "one marked quiver expression")?;
    let quiver = parse_marked(&options.positional[0])?;
    let index: usize = match options.required("relation")?.parse() {
        Ok(i) => i,
        Err(_) => return usage("--relation needs a relation index"),
    };
    let result = if options.switch("inverse") {
        cr_swap_inverse(&quiver, index)?
    } else {
        cr_swap(&quiver, index)?
    };
    if options.switch("trace") {
        println!("{quiver}");
    }
    println!("{result}");
    Ok(())
}

fn cmd_first_to_cord(args: &[String]) -> Result<(), Failure> {
    let options = Options::parse(args, &[], &["iterated", "trace"])?;
    options.expect_positional(1, "one marked quiver or presentation expression")?;
    let quiver = match parse_object(&options.positional[0])? {
        Object::Marked(q) => q,
        Object::Nakayama(p) => embed_nakayama(&p)?,
        Object::Shape(_) => {
            return usage("first-to-cord takes a marked quiver (M:) or presentation (A:)")
        }
    };
    if options.switch("iterated") {
        let steps = first_relation_to_cord_steps(&quiver)?;
        if options.switch("trace") {
            println!("{quiver}");
            for step in &steps {
                println!("{step}");
            }
        } else {
            println!("{}", steps.last().expect("at least one swap happens"));
        }
    } else {
        let result = first_relation_to_cord(&quiver)?;
        if options.switch("trace") {
            println!("{quiver}");
        }
        println!("{result}");
    }
    Ok(())
}

fn cmd_classify(args: &[String]) -> Result<(), Failure> {
    let options = Options::parse(args, &["n", "min-length", "format"], &[])?;
    options.expect_positional(0, "no positional arguments")?;
    let n = parse_count(options.required("n")?, "--n")?;
    let min_length = parse_min_length(&options)?;
    let format: Format = match options.value("format").unwrap_or("text").parse() {
        Ok(f) => f,
        Err(e) => return usage(e.to_string()),
    };
    print!("{}", emit(&classify(n, min_length), format));
    Ok(())
}

fn algebra_of(text: &str) -> Result<BoundAlgebra, Failure> {
    Ok(match parse_object(text)? {
        Object::Nakayama(p) => BoundAlgebra::Nakayama(p),
        Object::Marked(q) => BoundAlgebra::Marked(q),
        Object::Shape(shape) => BoundAlgebra::Marked(embed_quipu(&shape)),
    })
}

fn cmd_verify(args: &[String]) -> Result<(), Failure> {
    let options = Options::parse(args, &["n"], &[])?;
    if let Some(n_text) = options.value("n") {
        options.expect_positional(0, "no object expressions together with --n")?;
        let n = parse_count(n_text, "--n")?;
        let classes = classify(n, 3);
        let mut distinct = BTreeSet::new();
        let mut clean = true;
        for class in &classes {
            let quipu_poly = BoundAlgebra::Marked(embed_quipu(class.canonical.shape())).coxeter();
            let agreeing = class
                .members
                .iter()
                .all(|p| BoundAlgebra::Nakayama(p.clone()).coxeter() == quipu_poly);
            let name = quipu::enumerate::label(&class.canonical);
            if agreeing {
                println!(
                    "{name}: consistent ({} member{})",
                    class.members.len(),
                    if class.members.len() == 1 { "" } else { "s" }
                );
            } else {
                println!("{name}: MISMATCH");
                clean = false;
            }
            distinct.insert(format!("{quipu_poly}"));
        }
        println!(
            "classes: {}, distinct Coxeter polynomials: {}",
            classes.len(),
            distinct.len()
        );
        if clean {
            Ok(())
        } else {
            Err(Failure::Domain(
                "Coxeter polynomials disagree within a class".into(),
            ))
        }
    } else {
        options.expect_positional(2, "two object expressions or --n N")?;
        let left = algebra_of(&options.positional[0])?;
        let right = algebra_of(&options.positional[1])?;
        println!("{}", verify_equivalence(&left, &right));
        Ok(())
    }
}

fn cmd_enumerate(args: &[String]) -> Result<(), Failure> {
    let options = Options::parse(args, &["n", "min-length"], &["quipus", "nakayama"])?;
    options.expect_positional(0, "no positional arguments")?;
    let n = parse_count(options.required("n")?, "--n")?;
    match (options.switch("quipus"), options.switch("nakayama")) {
        (true, false) => {
            if options.value("min-length").is_some() {
                return usage("--min-length only applies to --nakayama");
            }
            for canonical in enumerate_quipus(n) {
                println!("{canonical}");
            }
            Ok(())
        }
        (false, true) => {
            let min_length = parse_min_length(&options)?;
            for p in enumerate_nakayama(n, min_length) {
                println!("{p}");
            }
            Ok(())
        }
        _ => usage("pass exactly one of --quipus or --nakayama"),
    }
}

fn run(args: &[String]) -> Result<(), Failure> {
    let Some(command) = args.first() else {
        return usage("missing command");
    };
    let rest = &args[1..];
    match command.as_str() {
        "translate" => cmd_translate(rest),
        "canonical" => cmd_canonical(rest),
        "equal" => cmd_equal(rest),
        "family" => cmd_family(rest),
        "strip" => cmd_strip(rest),
        "swap" => cmd_swap(rest),
        "first-to-cord" => cmd_first_to_cord(rest),
        "classify" => cmd_classify(rest),
        "verify" => cmd_verify(rest),
        "enumerate" => cmd_enumerate(rest),
        "--version" | "version" => {
            println!("quipu {}", env!("CARGO_PKG_VERSION"));
            Ok(())
        }
        "--help" | "help" => {
            println!("{USAGE}");
            Ok(())
        }
        other => usage(format!("unknown command '{other}'")),
    }
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    match run(&args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Domain(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            eprintln!("{USAGE}");
            ExitCode::from(2)
        }
        Err(Failure::NotEquivalent) => ExitCode::from(3),
    }
}
