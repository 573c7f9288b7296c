use std::collections::BTreeSet;
use std::fs;
use std::io::{self, BufRead, BufWriter, Write};
use std::path::Path;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use icdfa::canonical::normal_form_with_mapping;
use icdfa::oracle::brute_force_icdfa;
use icdfa::stream::{write_generated, GenRequest};
use icdfa::text::{parse_dfa, StringLine};
use icdfa::{
    isomorphic, BigCount, CanonicalString, CountTable, Dfa, Error, Generator, Ranker, Sampler,
};

use crate::CountMode;

/// Default brute-force budget for `verify`, in transition functions.
pub const VERIFY_BUDGET: u64 = 1_000_000;

fn ok() -> Result<ExitCode> {
    Ok(ExitCode::SUCCESS)
}

fn negative() -> Result<ExitCode> {
    Ok(ExitCode::from(1))
}

/// Output to a closed pipe (`gen | head`) is not an error.
fn tolerate_broken_pipe(r: io::Result<()>) -> Result<()> {
    match r {
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
        other => Ok(other?),
    }
}

pub fn count(n: usize, k: usize, mode: CountMode, verbose: bool) -> Result<ExitCode> {
    let table = CountTable::new();
    let value = match mode {
        CountMode::Exact => table.icdfa(n, k)?,
        CountMode::Liskovets => table.liskovets(n, k)?.1,
        CountMode::Bound => table.stirling_bound(n, k)?,
        CountMode::WithFinals => icdfa::count_with_finals(n, k)?,
    };
    println!("{value}");
    if verbose {
        let b = table.icdfa(n, k)?;
        let (h, quotient) = table.liskovets(n, k)?;
        let bound = table.stirling_bound(n, k)?;
        eprintln!("flag sum B        = {b}");
        eprintln!("labelled h        = {h}");
        eprintln!("h / (n-1)!        = {quotient}");
        eprintln!("stirling bound    = {bound}");
        let agree = b == quotient && b <= bound;
        eprintln!("agreement         = {}", if agree { "yes" } else { "NO" });
    }
    ok()
}

fn parse_line_arg(line: &str) -> Result<CanonicalString> {
    Ok(StringLine::parse(line)
        .with_context(|| format!("cannot parse string {line:?}"))?
        .string)
}

pub fn gen(
    n: usize,
    k: usize,
    limit: Option<u64>,
    from: Option<&str>,
    jobs: usize,
) -> Result<ExitCode> {
    let from = from.map(parse_line_arg).transpose()?;
    let req = GenRequest::new(n, k, from, limit, jobs)?;
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match write_generated(&mut out, &req).and_then(|n| out.flush().map(|_| n)) {
        Ok(emitted) => eprintln!("emitted {emitted} strings"),
        Err(e) => tolerate_broken_pipe(Err(e))?,
    }
    ok()
}

fn read_dfa(path: &Path) -> Result<Dfa> {
    let text =
        fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    parse_dfa(&text).with_context(|| format!("{}", path.display()))
}

pub fn canon(path: &Path, mapping: bool, strict: bool) -> Result<ExitCode> {
    let dfa = read_dfa(path)?;
    let (nf, map) = normal_form_with_mapping(&dfa);
    let dropped: Vec<String> = map.dropped().map(|q| q.to_string()).collect();
    if !dropped.is_empty() {
        if strict {
            bail!(
                "{}: {} unreachable state(s): {}",
                path.display(),
                dropped.len(),
                dropped.join(" ")
            );
        }
        eprintln!(
            "warning: dropped {} unreachable state(s): {}",
            dropped.len(),
            dropped.join(" ")
        );
    }
    println!("{}", StringLine::from(nf));
    if mapping {
        let pairs: Vec<String> = (0..map.original_count())
            .map(|q| match map.get(q) {
                Some(c) => format!("{q}->{c}"),
                None => format!("{q}->-"),
            })
            .collect();
        println!("map: {}", pairs.join(" "));
    }
    ok()
}

pub fn iso(a: &Path, b: &Path) -> Result<ExitCode> {
    let a = read_dfa(a)?;
    let b = read_dfa(b)?;
    if isomorphic(&a, &b) {
        println!("isomorphic");
        ok()
    } else {
        println!("not-isomorphic");
        negative()
    }
}

pub fn rank(line: Option<&str>) -> Result<ExitCode> {
    let mut ranker: Option<Ranker> = None;
    let mut rank_one = |text: &str, lineno: usize| -> Result<BigCount> {
        let s = StringLine::parse_at(text, lineno)?.string;
        let r = match &ranker {
            Some(r) if (r.n(), r.k()) == (s.n(), s.k()) => r,
            _ => ranker.insert(Ranker::new(s.n(), s.k())?),
        };
        r.rank(&s).with_context(|| format!("line {lineno}"))
    };
    match line {
        Some(text) => println!("{}", rank_one(text, 1)?),
        None => {
            let stdin = io::stdin();
            let stdout = io::stdout();
            let mut out = BufWriter::new(stdout.lock());
            for (idx, l) in stdin.lock().lines().enumerate() {
                let l = l?;
                if l.trim().is_empty() {
                    continue;
                }
                let r = rank_one(&l, idx + 1)?;
                tolerate_broken_pipe(writeln!(out, "{r}"))?;
            }
            tolerate_broken_pipe(out.flush())?;
        }
    }
    ok()
}

pub fn unrank(n: usize, k: usize, r: &str) -> Result<ExitCode> {
    let r: BigCount = r
        .trim()
        .parse()
        .with_context(|| format!("rank {r:?} is not a nonnegative integer"))?;
    let s = Ranker::new(n, k)?.unrank(&r)?;
    println!("{s}");
    ok()
}

pub fn sample(n: usize, k: usize, seed: u64, count: u64) -> Result<ExitCode> {
    let mut sampler = Sampler::new(n, k, seed)?;
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    tolerate_broken_pipe((|| {
        for _ in 0..count {
            writeln!(out, "{}", sampler.draw())?;
        }
        out.flush()
    })())?;
    ok()
}

pub fn verify(n: usize, k: usize, budget: u64) -> Result<ExitCode> {
    let oracle = match brute_force_icdfa(n, k, budget) {
        Ok(o) => o,
        Err(Error::BudgetExceeded { required, budget }) => bail!(
            "brute force for n={n}, k={k} needs {required} transition functions \
             ({n}^{}), over the budget of {budget}; rerun with --budget {required}",
            n * k
        ),
        Err(e) => return Err(e.into()),
    };
    let table = CountTable::new();
    let b = table.icdfa(n, k)?;
    let (h, quotient) = table.liskovets(n, k)?;
    let bound = table.stirling_bound(n, k)?;
    let generated: BTreeSet<CanonicalString> = Generator::new(n, k)?.collect();

    let report = &oracle.report;
    let emitted = BigCount::from(generated.len());
    println!("shape              n={n} k={k}");
    println!("functions          {}", report.total_functions);
    println!(
        "connected          {} (labelled count {h})",
        report.connected_count
    );
    println!("oracle distinct    {}", report.canonical_distinct);
    println!("generator emitted  {emitted}");
    println!("flag sum           {b}");
    println!("recursion          {quotient}");
    println!("stirling bound     {bound}");

    let mut failures = Vec::new();
    if !report.mismatches.is_empty() {
        failures.push(format!(
            "{} oracle strings fail validation",
            report.mismatches.len()
        ));
    }
    if report.connected_count != h {
        failures.push("connected count differs from labelled recursion".into());
    }
    if !(report.canonical_distinct == emitted && emitted == b && b == quotient) {
        failures.push("counts disagree".into());
    }
    if b > bound {
        failures.push("count exceeds the stirling bound".into());
    }
    let missing: Vec<_> = oracle.strings.difference(&generated).take(10).collect();
    let extra: Vec<_> = generated.difference(&oracle.strings).take(10).collect();
    if !missing.is_empty() || !extra.is_empty() {
        failures.push("generated set differs from oracle set".into());
    }

    if failures.is_empty() {
        println!("result             all agree");
        return ok();
    }
    for f in &failures {
        println!("mismatch           {f}");
    }
    for s in report.mismatches.iter().take(10) {
        println!("invalid            {s}");
    }
    for s in missing {
        println!("not generated      {s}");
    }
    for s in extra {
        println!("not in oracle      {s}");
    }
    negative()
}
