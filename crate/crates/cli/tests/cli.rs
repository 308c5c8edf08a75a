//! Runs the `trel` binary end to end.

use std::io::Write;
use std::process::{Command, Stdio};

use trel_cli::doc::{CheckDoc, EvalDoc, ParseDoc, RelevanceDoc, TableDoc, TableauDoc};
use trel_cli::render_json;
use trel_core::{eval2, Assignment, Formula, TruthValue};

const PEIRCE: &str = "((A -> B) -> A) -> A";
const SYLLOGISM: &str = "(P -> Q) -> ((Q -> R) -> (P -> R))";
const DOUBLE_LEM: &str = "(P | ~P) | (Q | ~Q)";
const CORPUS: &str = include_str!("data/corpus.txt");

struct Run {
    stdout: String,
    stderr: String,
    code: i32,
}

fn trel_with(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_trel"));
    cmd.args(args)
        .env_remove("TREL_MAX_VARS")
        .env_remove("TREL_MAX_NODES")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    Run {
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
        code: out.status.code().expect("exited normally"),
    }
}

fn trel(args: &[&str]) -> Run {
    trel_with(args, "", &[])
}

fn corpus() -> Vec<&'static str> {
    CORPUS.lines().filter(|l| !l.trim().is_empty()).collect()
}

fn tautology(f: &Formula) -> bool {
    let vars = f.vars();
    (0..1u32 << vars.len()).all(|row| {
        let values: Vec<TruthValue> = (0..vars.len())
            .map(|i| TruthValue::from_bool(row & (1 << (vars.len() - 1 - i)) == 0))
            .collect();
        eval2(f, &Assignment::from_values(&vars, &values)).unwrap() == TruthValue::T
    })
}

#[test]
fn parse_command() {
    let out = trel(&["parse", "((A->B)->A)->A"]);
    assert_eq!((out.stdout.as_str(), out.code), ("((A -> B) -> A) -> A\n", 0));
    let out = trel(&["parse", "P <-> Q"]);
    assert_eq!(out.stdout, "(P -> Q) & (Q -> P)\n");
    let out = trel(&["parse", "(A &"]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.is_empty());
    assert!(out.stderr.contains("syntax error at 4..4"), "{}", out.stderr);
}

#[test]
fn eval_command() {
    assert_eq!(trel(&["eval", PEIRCE, "A=T,B=X"]).stdout, "T\n");
    assert_eq!(trel(&["eval", PEIRCE, "A=X,B=F"]).stdout, "x\n");
    assert_eq!(trel(&["eval", "P", "P=F"]).stdout, "F\n");
    let missing = trel(&["eval", PEIRCE, "A=T"]);
    assert_eq!(missing.code, 1);
    assert!(missing.stderr.contains("`B`"));
    assert_eq!(trel(&["eval", "P", "P=T,Z=F"]).code, 1);
    assert_eq!(trel(&["eval", "P", "P=maybe"]).code, 1);
}

#[test]
fn table_command() {
    let out = trel(&["table", PEIRCE, "--mode", "partial", "--vary", "A"]);
    assert_eq!(out.stdout, "A\tB\tvalue\nT\tx\tT\nF\tx\tT\n");
    let out = trel(&["table", PEIRCE, "--mode", "classical"]);
    assert_eq!(out.stdout.lines().count(), 5);
    assert!(out.stdout.lines().skip(1).all(|l| l.ends_with("\tT")));
    let out = trel(&["table", SYLLOGISM, "--vary", "P,Q"]);
    let values: Vec<&str> = out.stdout.lines().skip(1).map(|l| l.rsplit('\t').next().unwrap()).collect();
    assert_eq!(values, ["x", "T", "T", "T"]);
    let out = trel(&["table", "P", "--vary", "Q"]);
    assert_eq!(out.code, 1);
}

#[test]
fn caps_from_flags_and_environment() {
    let wide = "A & (B & (C & (D & E)))";
    let capped = trel_with(&["table", wide], "", &[("TREL_MAX_VARS", "4")]);
    assert_eq!(capped.code, 1);
    assert!(capped.stderr.contains("cap of 4"), "{}", capped.stderr);
    let flag_wins = trel_with(&["table", wide, "--max-vars", "5"], "", &[("TREL_MAX_VARS", "4")]);
    assert_eq!(flag_wins.code, 0);
    assert_eq!(flag_wins.stdout.lines().count(), 1 + 243);
    let budget = trel_with(&["tableau", SYLLOGISM], "", &[("TREL_MAX_NODES", "3")]);
    assert_eq!(budget.code, 1);
    assert!(budget.stderr.contains("node budget"));
    assert_eq!(trel_with(&["parse", "P"], "", &[("TREL_MAX_VARS", "many")]).code, 1);
}

#[test]
fn relevance_exit_codes() {
    let peirce = trel(&["relevance", PEIRCE]);
    assert_eq!(peirce.code, 2);
    assert!(peirce.stdout.contains("classification: TAUTOLOGY_NOT_T_RELEVANT"));
    assert_eq!(trel(&["relevance", SYLLOGISM]).code, 0);
    assert_eq!(trel(&["relevance", "P & Q"]).code, 2);
}

#[test]
fn tableau_command() {
    let out = trel(&["tableau", PEIRCE]);
    assert_eq!(out.code, 2);
    assert!(out.stdout.contains("closing set: {A}"));
    let out = trel(&["tableau", SYLLOGISM]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("closing set: {P, Q, R}"));
    let out = trel(&["tableau", DOUBLE_LEM, "--strategy", "exhaustive"]);
    assert!(out.stdout.contains("closing sets: {P}, {Q}"), "{}", out.stdout);
    assert_eq!(trel(&["tableau", "P | Q"]).code, 3);

    let dot = trel(&["--format", "dot", "tableau", PEIRCE]);
    assert!(dot.stdout.starts_with("digraph tableau {"));
    assert!(dot.stdout.contains("doubleoctagon"));
    assert_eq!(trel(&["--format", "dot", "relevance", PEIRCE]).code, 1);
}

#[test]
fn check_command() {
    let out = trel(&["check", PEIRCE, "--set", "A"]);
    assert_eq!((out.code, out.stdout.contains("verdict: EQUIVALENT")), (0, true));
    let out = trel(&["check", PEIRCE, "--set", "A,B"]);
    assert_eq!(out.code, 2);
    assert!(out.stdout.contains("NOT EQUIVALENT at A=T,B=x"), "{}", out.stdout);
    let out = trel(&["check", DOUBLE_LEM, "--from-tableau"]);
    assert_eq!(out.code, 2);
    assert!(out.stdout.contains("set: {P}"));
    assert!(out.stdout.contains("at P=x,Q=T"));
    assert_eq!(trel(&["check", PEIRCE, "--set", ""]).code, 1);
    assert_eq!(trel(&["check", PEIRCE, "--set", "Z"]).code, 1);
    assert_eq!(trel(&["check", "P | Q", "--from-tableau"]).code, 1);
}

#[test]
fn formula_from_stdin() {
    let out = trel_with(&["parse", "-"], "  (A->B)\n", &[]);
    assert_eq!(out.stdout, "A -> B\n");
    let out = trel_with(&["relevance"], PEIRCE, &[]);
    assert_eq!(out.code, 2);
}

#[test]
fn batch_mode_keeps_input_order() {
    let input = format!("{PEIRCE}\n\n(A &\n{SYLLOGISM}\nP | Q\n");
    let out = trel_with(&["tableau", "--each"], &input, &[]);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(lines.len(), 4);
    assert!(lines[0].ends_with("PROVED_NOT_FALSE\t{A}"));
    assert!(lines[1].starts_with("error: syntax error"));
    assert!(lines[2].ends_with("PROVED_TRUE\t{P, Q, R}"));
    assert!(lines[3].ends_with("OPEN\t-"));
    assert!(out.stderr.starts_with("line 3: "));
    assert_eq!(out.code, 1);

    let out = trel_with(&["--format", "json", "relevance", "--each"], &format!("{PEIRCE}\n{SYLLOGISM}\n"), &[]);
    assert_eq!(out.code, 2);
    for line in out.stdout.lines() {
        let doc: RelevanceDoc = serde_json::from_str(line).unwrap();
        assert_eq!(serde_json::to_string(&doc).unwrap(), line);
    }
    assert_eq!(trel_with(&["--format", "dot", "tableau", "--each"], PEIRCE, &[]).code, 1);
    assert_eq!(trel_with(&["parse", "P", "--each"], "", &[]).code, 1);
}

#[test]
fn corpus_exit_codes() {
    let input = CORPUS;
    let relevance = trel_with(&["--format", "json", "relevance", "--each"], input, &[]);
    let tableau = trel_with(&["--format", "json", "tableau", "--each"], input, &[]);
    for ((text, r), t) in corpus().iter().zip(relevance.stdout.lines()).zip(tableau.stdout.lines()) {
        let f = trel_core::parse(text).unwrap();
        let r: RelevanceDoc = serde_json::from_str(r).unwrap();
        let t: TableauDoc = serde_json::from_str(t).unwrap();
        assert_eq!(r.tautology, tautology(&f), "{text}");
        assert_eq!(t.closing_set.is_some(), tautology(&f), "{text}");

        let single = trel(&["relevance", text]);
        let expected = if r.t_relevant && r.tautology { 0 } else { 2 };
        assert_eq!(single.code, expected, "{text}");

        let single = trel(&["tableau", text]);
        let expected = match &t.closing_set {
            None => 3,
            Some(set) if set.len() == f.vars().len() => 0,
            Some(_) => 2,
        };
        assert_eq!(single.code, expected, "{text}");
    }
}

#[test]
fn json_documents_round_trip() {
    fn round_trip<T: serde::de::DeserializeOwned + serde::Serialize>(args: &[&str]) {
        let mut full = vec!["--format", "json"];
        full.extend_from_slice(args);
        let out = trel(&full);
        assert!(out.code != 1, "{args:?}: {}", out.stderr);
        let doc: T = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(render_json(&doc), out.stdout, "{args:?}");
    }
    for text in corpus() {
        round_trip::<ParseDoc>(&["parse", text]);
        round_trip::<TableDoc>(&["table", text, "--steps"]);
        round_trip::<RelevanceDoc>(&["relevance", text]);
        round_trip::<TableauDoc>(&["tableau", text, "--strategy", "exhaustive"]);
    }
    round_trip::<EvalDoc>(&["eval", PEIRCE, "B=X,A=T"]);
    round_trip::<CheckDoc>(&["check", PEIRCE, "--set", "A,B"]);
    round_trip::<CheckDoc>(&["check", SYLLOGISM, "--from-tableau"]);
}
