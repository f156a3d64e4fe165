use std::collections::BTreeMap;
use std::io::Read;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use freegroup::corpus::{random_reducible_word, reducible_words_up_to};
use freegroup::group::{abelianize, inv, mul, normal_form, normal_form_with_witness};
use freegroup::oracle::{build_move_graph, check_words, enumerate_sequences, OracleConfig};
use freegroup::syntax::{parse_positions, render_positions, render_steps, render_trace, SequenceDoc};
use freegroup::{parse_word, transform_to, validate_sequence, Execution, Generator, ReductionSequence, Word};

use crate::{CheckArgs, Command};

const SCHEMA: &str = "1";

fn word_arg(text: &str) -> Result<Word> {
    parse_word(text).with_context(|| format!("in word {text:?}"))
}

fn sequence_arg(word: &Word, text: &str) -> Result<ReductionSequence> {
    let positions = parse_positions(text).with_context(|| format!("in sequence {text:?}"))?;
    Ok(validate_sequence(word, &positions)?)
}

fn emit(value: Value) {
    let mut value = value;
    if let Value::Object(map) = &mut value {
        map.insert("schema".into(), Value::from(SCHEMA));
    }
    println!("{}", serde_json::to_string_pretty(&value).expect("JSON values serialize"));
}

fn text(w: &Word) -> String {
    w.to_string()
}

pub fn run(command: Command, json: bool) -> Result<ExitCode> {
    match command {
        Command::Nf { word } => {
            let w = word_arg(&word)?;
            let n = normal_form(&w);
            if json {
                emit(json!({ "word": text(&w), "normal_form": n.to_string() }));
            } else {
                println!("{}", n.word().to_text_or_nil());
            }
        }
        Command::Mul { left, right } => {
            let (u, v) = (normal_form(&word_arg(&left)?), normal_form(&word_arg(&right)?));
            let product = mul(&u, &v);
            if json {
                emit(json!({ "left": u.to_string(), "right": v.to_string(), "product": product.to_string() }));
            } else {
                println!("{}", product.word().to_text_or_nil());
            }
        }
        Command::Inv { word } => {
            let u = normal_form(&word_arg(&word)?);
            let inverse = inv(&u);
            if json {
                emit(json!({ "word": u.to_string(), "inverse": inverse.to_string() }));
            } else {
                println!("{}", inverse.word().to_text_or_nil());
            }
        }
        Command::Eq { left, right } => {
            let (u, v) = (word_arg(&left)?, word_arg(&right)?);
            let (nu, nv) = (normal_form(&u), normal_form(&v));
            let equal = nu == nv;
            if json {
                emit(json!({
                    "left": text(&u),
                    "right": text(&v),
                    "normal_forms": [nu.to_string(), nv.to_string()],
                    "equal": equal,
                }));
            } else if equal {
                println!("equal: both reduce to {}", nu.word().to_text_or_nil());
            } else {
                println!(
                    "not equal: {} vs {}",
                    nu.word().to_text_or_nil(),
                    nv.word().to_text_or_nil()
                );
            }
            return Ok(if equal { ExitCode::SUCCESS } else { ExitCode::from(1) });
        }
        Command::Abel { word } => {
            let sums: BTreeMap<String, i64> = abelianize(&word_arg(&word)?)
                .into_iter()
                .map(|(g, n)| (g.name().to_owned(), n))
                .collect();
            emit(json!({ "exponents": sums }));
        }
        Command::Reduce {
            word,
            sequence,
            input,
            trace,
        } => reduce(word, sequence, input, trace, json)?,
        Command::Sequences { word, max_len } => {
            let w = word_arg(&word)?;
            let config = OracleConfig {
                max_len,
                ..OracleConfig::default()
            };
            let all = enumerate_sequences(&w, &config)?;
            if json {
                let steps: Vec<&[usize]> = all.iter().map(|r| r.steps()).collect();
                emit(json!({ "word": text(&w), "count": all.len(), "sequences": steps }));
            } else {
                for r in &all {
                    println!("{}", render_positions(r.steps()));
                }
                eprintln!("{} sequences", all.len());
            }
        }
        Command::Connect { word, from, to, trace } => {
            let w = word_arg(&word)?;
            let (r, s) = (sequence_arg(&w, &from)?, sequence_arg(&w, &to)?);
            let chain = transform_to(&r, &s)?;
            let replay = chain.replay(&r)?;
            if trace || json {
                let mut doc = json!({
                    "word": text(&w),
                    "from": r.steps(),
                    "to": s.steps(),
                    "chain": chain.to_string(),
                    "moves": chain.moves().iter().map(ToString::to_string).collect::<Vec<_>>(),
                });
                if trace {
                    let states: Vec<&[usize]> = replay.iter().map(|q| q.steps()).collect();
                    doc["trace"] = json!(states);
                }
                emit(doc);
            } else {
                println!("{chain}");
            }
        }
        Command::Graph { word, dot, max_len } => {
            let w = word_arg(&word)?;
            let config = OracleConfig {
                max_len,
                ..OracleConfig::default()
            };
            let g = build_move_graph(&w, &config)?;
            if dot {
                print!("{}", g.to_dot());
            } else if json {
                let nodes: Vec<&[usize]> = g.nodes().iter().map(|r| r.steps()).collect();
                let edges: Vec<Value> = g
                    .edges()
                    .iter()
                    .map(|e| json!({ "from": e.from, "to": e.to, "move": e.mv.to_string() }))
                    .collect();
                emit(json!({
                    "word": text(&w),
                    "nodes": nodes,
                    "edges": edges,
                    "connected": g.is_connected(),
                    "components": g.component_count(),
                }));
            } else {
                println!(
                    "{} sequences, {} edges, {} component(s)",
                    g.node_count(),
                    g.edges().len(),
                    g.component_count()
                );
            }
        }
        Command::Check(args) => return check(args, json),
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct TraceLine {
    word: String,
    redex: Option<String>,
}

fn trace_json(word: &Word, steps: &[usize]) -> Vec<TraceLine> {
    let mut current = word.clone();
    let mut lines = vec![TraceLine {
        word: current.to_string(),
        redex: None,
    }];
    for &p in steps {
        let redex = format!("{} {}", current.items()[p], current.items()[p + 1]);
        current = freegroup::apply_step(&current, p).expect("validated steps");
        lines.push(TraceLine {
            word: current.to_string(),
            redex: Some(redex),
        });
    }
    lines
}

fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

fn reduce(word: Option<String>, sequence: Option<String>, input: Option<String>, trace: bool, json: bool) -> Result<()> {
    let given = match (&input, &word) {
        (Some(path), _) => {
            let doc: SequenceDoc = serde_json::from_str(&read_input(path)?).context("parsing sequence JSON")?;
            Some(doc.to_sequence()?)
        }
        (None, Some(w)) => match &sequence {
            Some(seq) => Some(sequence_arg(&word_arg(w)?, seq)?),
            None => None,
        },
        (None, None) => bail!("a word or --input is required"),
    };

    if let Some(r) = given {
        if json {
            emit(json!({
                "word": text(r.word()),
                "steps": r.steps(),
                "trace": trace_json(r.word(), r.steps()),
            }));
        } else {
            for line in render_trace(&r) {
                println!("{line}");
            }
        }
        return Ok(());
    }

    let w = word_arg(word.as_deref().unwrap_or_default())?;
    let (n, witness) = normal_form_with_witness(&w);
    if json {
        emit(json!({
            "word": text(&w),
            "normal_form": n.to_string(),
            "steps": witness,
            "trace": trace_json(&w, &witness),
        }));
    } else if trace {
        for line in render_steps(&w, &witness)? {
            println!("{line}");
        }
    } else {
        println!("{}", n.word().to_text_or_nil());
        if !witness.is_empty() {
            println!("steps: {}", render_positions(&witness));
        }
    }
    Ok(())
}

fn check(args: CheckArgs, json: bool) -> Result<ExitCode> {
    let alphabet = args
        .alphabet
        .iter()
        .map(|name| Generator::new(name.trim()))
        .collect::<Result<Vec<_>, _>>()?;
    if alphabet.is_empty() {
        bail!("the alphabet is empty");
    }
    let words = match args.samples {
        Some(samples) if !args.exhaustive => {
            if args.max_len < 2 {
                bail!("--max-len must be at least 2 to sample reducible words");
            }
            let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
            (0..samples)
                .map(|_| {
                    let pairs = rng.gen_range(1..=args.max_len / 2);
                    random_reducible_word(&mut rng, &alphabet, pairs)
                })
                .collect()
        }
        _ => reducible_words_up_to(&alphabet, args.max_len),
    };
    let config = OracleConfig {
        max_len: args.max_len,
        seed: args.seed,
        execution: if args.sequential {
            Execution::Sequential
        } else {
            Execution::Parallel
        },
        ..OracleConfig::default()
    };
    let (summary, _) = check_words(&words, &config)?;
    if json {
        let mut doc = serde_json::to_value(&summary)?;
        doc["passed"] = json!(summary.passed());
        emit(doc);
    } else {
        println!("words checked:        {}", summary.words_checked);
        println!("sequences enumerated: {}", summary.sequences);
        println!("move-graph edges:     {}", summary.edges);
        println!("pairs verified:       {}", summary.pairs);
        println!("front reductions:     {}", summary.front_checks);
        println!("moves inverted:       {}", summary.move_checks);
        println!("max chain length:     {}", summary.max_chain_len);
        println!("max BFS distance:     {}", summary.max_bfs_distance);
        println!("counterexamples:      {}", summary.counterexamples.len());
        for c in &summary.counterexamples {
            println!(
                "  {} on `{}`: [{}] -> [{}]: {}",
                c.check,
                c.word,
                render_positions(&c.from),
                render_positions(&c.to),
                c.reason
            );
        }
    }
    Ok(if summary.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
