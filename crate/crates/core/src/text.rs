//! Text formats.
//!
//! Automaton documents are line oriented:
//!
//! ```text
//! # comments start with '#'
//! states: 5
//! symbols: 2
//! initial: 0
//! finals: 1 4
//! table:
//! 0 1
//! 0 4
//! 1 4
//! 3 2
//! 0 4
//! ```
//!
//! Row `q` of the table lists the targets of state `q` for symbols
//! `0..k`. A canonical string is written on one line as
//! `n k : c0 c1 ... c(kn-1)`, optionally followed by `| f0 f1 ...` with the
//! final states of a normal form. Input may use any amount of whitespace;
//! output always uses single spaces.

use std::fmt;

use crate::error::{Error, Result};
use crate::model::{CanonicalString, Dfa, DfaStructure, NormalForm};

fn parse_index(tok: &str, line: usize, what: &str) -> Result<usize> {
    tok.parse::<usize>().map_err(|_| {
        Error::parse(
            line,
            format!("{what}: expected a nonnegative integer, got {tok:?}"),
        )
    })
}

/// Parses an automaton document. Errors carry 1-based line numbers.
pub fn parse_dfa(text: &str) -> Result<Dfa> {
    let mut states = None;
    let mut symbols = None;
    let mut initial = None;
    let mut finals: Option<(Vec<usize>, usize)> = None;
    let mut table: Option<Vec<usize>> = None;
    let mut rows = 0;
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }

        if let Some(cells) = table.as_mut() {
            let (n, k) = (states.unwrap_or(0), symbols.unwrap_or(0));
            if rows == n {
                return Err(Error::parse(line, "unexpected content after the table"));
            }
            let row = content
                .split_whitespace()
                .map(|t| parse_index(t, line, "table"))
                .collect::<Result<Vec<_>>>()?;
            if row.len() != k {
                return Err(Error::parse(
                    line,
                    format!("table row {rows} has {} entries, expected {k}", row.len()),
                ));
            }
            if let Some(t) = row.iter().find(|&&t| t >= n) {
                return Err(Error::parse(line, format!("target {t} outside 0..{n}")));
            }
            cells.extend(row);
            rows += 1;
            continue;
        }

        let (key, value) = content
            .split_once(':')
            .ok_or_else(|| Error::parse(line, format!("expected `key: value`, got {content:?}")))?;
        let value = value.trim();
        let single = |slot: &Option<usize>, what: &str| -> Result<usize> {
            if slot.is_some() {
                return Err(Error::parse(line, format!("duplicate `{what}`")));
            }
            parse_index(value, line, what)
        };
        match key.trim() {
            "states" => {
                let v = single(&states, "states")?;
                if v == 0 {
                    return Err(Error::parse(line, "states must be at least 1"));
                }
                states = Some(v);
            }
            "symbols" => {
                let v = single(&symbols, "symbols")?;
                if v == 0 {
                    return Err(Error::parse(line, "symbols must be at least 1"));
                }
                symbols = Some(v);
            }
            "initial" => initial = Some(single(&initial, "initial")?),
            "finals" => {
                if finals.is_some() {
                    return Err(Error::parse(line, "duplicate `finals`"));
                }
                let fs = value
                    .split_whitespace()
                    .map(|t| parse_index(t, line, "finals"))
                    .collect::<Result<Vec<_>>>()?;
                finals = Some((fs, line));
            }
            "table" => {
                if !value.is_empty() {
                    return Err(Error::parse(line, "table rows start on the next line"));
                }
                if states.is_none() || symbols.is_none() {
                    return Err(Error::parse(
                        line,
                        "`states` and `symbols` must precede `table`",
                    ));
                }
                table = Some(Vec::new());
            }
            other => return Err(Error::parse(line, format!("unknown key `{other}`"))),
        }
    }

    let eof = last_line + 1;
    let n = states.ok_or_else(|| Error::parse(eof, "missing `states`"))?;
    let k = symbols.ok_or_else(|| Error::parse(eof, "missing `symbols`"))?;
    let initial = initial.ok_or_else(|| Error::parse(eof, "missing `initial`"))?;
    let cells = table.ok_or_else(|| Error::parse(eof, "missing `table`"))?;
    if rows != n {
        return Err(Error::parse(
            eof,
            format!("incomplete table: {rows} of {n} rows"),
        ));
    }
    let structure = DfaStructure::new(n, k, cells, initial).map_err(|e| match e {
        Error::Structure(m) => Error::parse(eof, m),
        e => e,
    })?;
    let (finals, finals_line) = finals.unwrap_or_default();
    Dfa::new(structure, finals).map_err(|e| match e {
        Error::Structure(m) => Error::parse(finals_line, m),
        e => e,
    })
}

/// Writes an automaton document that [`parse_dfa`] reads back.
pub fn render_dfa(d: &Dfa) -> String {
    let s = d.structure();
    let mut out = format!(
        "states: {}\nsymbols: {}\ninitial: {}\nfinals:",
        s.n(),
        s.k(),
        s.initial()
    );
    for f in d.finals() {
        out.push_str(&format!(" {f}"));
    }
    out.push_str("\ntable:\n");
    for q in 0..s.n() {
        let row: Vec<String> = s.row(q).iter().map(|t| t.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// One line of a string stream: a canonical string with an optional list
/// of final states.
///
/// Parsing checks the shape only; whether the string obeys the canonical
/// rules is left to the consumer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StringLine {
    pub string: CanonicalString,
    pub finals: Option<Vec<usize>>,
}

impl StringLine {
    pub fn parse(line: &str) -> Result<Self> {
        Self::parse_at(line, 1)
    }

    /// Like [`StringLine::parse`], reporting errors against `lineno`.
    pub fn parse_at(line: &str, lineno: usize) -> Result<Self> {
        let (head, rest) = line
            .split_once(':')
            .ok_or_else(|| Error::parse(lineno, "expected `n k : cells`"))?;
        let head: Vec<&str> = head.split_whitespace().collect();
        if head.len() != 2 {
            return Err(Error::parse(lineno, "expected `n k` before `:`"));
        }
        let n = parse_index(head[0], lineno, "n")?;
        let k = parse_index(head[1], lineno, "k")?;
        let (cells, finals) = match rest.split_once('|') {
            Some((c, f)) => (c, Some(f)),
            None => (rest, None),
        };
        let cells = cells
            .split_whitespace()
            .map(|t| parse_index(t, lineno, "cell"))
            .collect::<Result<Vec<_>>>()?;
        let string =
            CanonicalString::new(n, k, cells).map_err(|e| Error::parse(lineno, e.to_string()))?;
        let finals = match finals {
            None => None,
            Some(f) => {
                let fs = f
                    .split_whitespace()
                    .map(|t| parse_index(t, lineno, "final"))
                    .collect::<Result<Vec<_>>>()?;
                if fs.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(Error::parse(lineno, "finals must be strictly increasing"));
                }
                if let Some(q) = fs.iter().find(|&&q| q >= n) {
                    return Err(Error::parse(lineno, format!("final {q} outside 0..{n}")));
                }
                Some(fs)
            }
        };
        Ok(StringLine { string, finals })
    }

    /// Converts to a normal form. Requires a valid string.
    pub fn into_normal_form(self) -> Result<NormalForm> {
        NormalForm::new(self.string, self.finals.unwrap_or_default())
    }
}

impl fmt::Display for StringLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.string)?;
        if let Some(fs) = &self.finals {
            write!(f, " |")?;
            for q in fs {
                write!(f, " {q}")?;
            }
        }
        Ok(())
    }
}

impl From<NormalForm> for StringLine {
    fn from(nf: NormalForm) -> Self {
        let finals = (!nf.finals().is_empty()).then(|| nf.finals().to_vec());
        StringLine {
            string: nf.string().clone(),
            finals,
        }
    }
}

fn push_decimal(out: &mut Vec<u8>, mut v: usize) {
    let mut buf = [0u8; 20];
    let mut i = buf.len();
    loop {
        i -= 1;
        buf[i] = b'0' + (v % 10) as u8;
        v /= 10;
        if v == 0 {
            break;
        }
    }
    out.extend_from_slice(&buf[i..]);
}

/// Appends `n k : c0 c1 ...\n` to `out`; the byte-level twin of the
/// [`CanonicalString`] `Display` impl, used on the generation hot path.
pub fn push_string_line(out: &mut Vec<u8>, n: usize, k: usize, cells: &[usize]) {
    push_decimal(out, n);
    out.push(b' ');
    push_decimal(out, k);
    out.extend_from_slice(b" :");
    for &c in cells {
        out.push(b' ');
        push_decimal(out, c);
    }
    out.push(b'\n');
}
