//! Text format for diagrams:
//!
//! ```text
//! slimlat-lattice 1
//! flags sps rectangular
//! elements 4
//! e 0 up 1 2 down
//! e 1 up 3 down 0
//! e 2 up 3 down 0
//! e 3 up down 1 2
//! ```
//!
//! Cover lists are left to right. Claimed flags are re-checked on load.

use crate::error::{IoError, LatticeError, ParseError};
use crate::geometry::{rectangular_profile, validate_sps};
use crate::io::tokens::{content, end_column, number, tokens, Token};
use crate::lattice::PlanarLattice;

pub const FORMAT_VERSION: usize = 1;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Flags {
    pub sps: bool,
    pub slim: bool,
    pub semimodular: bool,
    pub rectangular: bool,
}

impl Flags {
    const NAMES: [&'static str; 4] = ["sps", "slim", "semimodular", "rectangular"];

    /// The flags that actually hold.
    pub fn detect(l: &PlanarLattice) -> Flags {
        let slim = l.is_slim();
        let semimodular = l.is_semimodular();
        Flags {
            sps: slim && semimodular && validate_sps(l).is_ok(),
            slim,
            semimodular,
            rectangular: slim && semimodular && rectangular_profile(l).is_ok(),
        }
    }

    fn get(&self, i: usize) -> bool {
        [self.sps, self.slim, self.semimodular, self.rectangular][i]
    }

    fn set(&mut self, name: &str) -> bool {
        match name {
            "sps" => self.sps = true,
            "slim" => self.slim = true,
            "semimodular" => self.semimodular = true,
            "rectangular" => self.rectangular = true,
            _ => return false,
        }
        true
    }

    /// The first claimed flag that does not hold for `l`.
    pub fn verify(&self, l: &PlanarLattice) -> Result<(), LatticeError> {
        if self.sps {
            validate_sps(l)?;
        }
        if self.slim && !l.is_slim() {
            return Err(LatticeError::ClaimFailed("slim"));
        }
        if self.semimodular && !l.is_semimodular() {
            return Err(LatticeError::ClaimFailed("semimodular"));
        }
        if self.rectangular {
            if !(l.is_slim() && l.is_semimodular()) {
                return Err(LatticeError::ClaimFailed("rectangular"));
            }
            rectangular_profile(l)?;
        }
        Ok(())
    }
}

pub fn serialize_lattice(l: &PlanarLattice, flags: Flags) -> String {
    let mut s = format!("slimlat-lattice {FORMAT_VERSION}\nflags");
    for (i, name) in Flags::NAMES.iter().enumerate() {
        if flags.get(i) {
            s.push(' ');
            s.push_str(name);
        }
    }
    s.push_str(&format!("\nelements {}\n", l.len()));
    let list = |v: &[usize]| v.iter().map(|x| format!(" {x}")).collect::<String>();
    for x in l.elements() {
        s.push_str(&format!(
            "e {x} up{} down{}\n",
            list(l.up(x)),
            list(l.down(x))
        ));
    }
    s
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    /// Next non-blank line as `(line number, raw text, tokens)`.
    fn next(&mut self) -> Option<(usize, &'a str, Vec<Token<'a>>)> {
        for (i, raw) in self.inner.by_ref() {
            self.last = i + 1;
            let toks = tokens(content(raw));
            if !toks.is_empty() {
                return Some((i + 1, raw, toks));
            }
        }
        None
    }
}

fn keyword<'a>(
    lines: &mut Lines<'a>,
    word: &str,
) -> Result<(usize, &'a str, Vec<Token<'a>>), ParseError> {
    let (line, raw, toks) = lines
        .next()
        .ok_or_else(|| ParseError::new(lines.last + 1, 1, format!("expected `{word}` line")))?;
    if toks[0].text != word {
        return Err(ParseError::new(
            line,
            toks[0].column,
            format!("expected `{word}`, found `{}`", toks[0].text),
        ));
    }
    Ok((line, raw, toks))
}

fn one_number(line: usize, raw: &str, toks: &[Token], what: &str) -> Result<usize, ParseError> {
    match toks {
        [_, n] => number(n, line, what),
        [_, _, extra, ..] => Err(ParseError::new(
            line,
            extra.column,
            "unexpected trailing input",
        )),
        _ => Err(ParseError::new(
            line,
            end_column(raw),
            format!("expected {what}"),
        )),
    }
}

/// Parses the text and returns the lattice and its claimed flags; the lattice is fully
/// validated and every claimed flag is re-checked.
pub fn parse_lattice(text: &str) -> Result<(PlanarLattice, Flags), IoError> {
    let mut lines = Lines {
        inner: text.lines().enumerate(),
        last: 0,
    };
    let (line, raw, toks) = keyword(&mut lines, "slimlat-lattice")?;
    let version = one_number(line, raw, &toks, "a format version")?;
    if version != FORMAT_VERSION {
        return Err(ParseError::new(
            line,
            toks[1].column,
            format!("unsupported version {version}"),
        )
        .into());
    }
    let (line, _, toks) = keyword(&mut lines, "flags")?;
    let mut flags = Flags::default();
    for t in &toks[1..] {
        if !flags.set(t.text) {
            return Err(
                ParseError::new(line, t.column, format!("unknown flag `{}`", t.text)).into(),
            );
        }
    }
    let (line, raw, toks) = keyword(&mut lines, "elements")?;
    let n = one_number(line, raw, &toks, "an element count")?;
    let mut up = vec![Vec::new(); n];
    let mut down = vec![Vec::new(); n];
    for expected in 0..n {
        let (line, raw, toks) = keyword(&mut lines, "e")?;
        let id_tok = toks
            .get(1)
            .ok_or_else(|| ParseError::new(line, end_column(raw), "expected an element id"))?;
        let id = number(id_tok, line, "an element id")?;
        if id != expected {
            return Err(ParseError::new(
                line,
                id_tok.column,
                format!("expected element {expected}"),
            )
            .into());
        }
        if toks.get(2).map(|t| t.text) != Some("up") {
            let col = toks.get(2).map_or(end_column(raw), |t| t.column);
            return Err(ParseError::new(line, col, "expected `up`").into());
        }
        let down_at = toks
            .iter()
            .position(|t| t.text == "down")
            .ok_or_else(|| ParseError::new(line, end_column(raw), "expected `down`"))?;
        for t in &toks[3..down_at] {
            up[id].push(number(t, line, "an element id")?);
        }
        for t in &toks[down_at + 1..] {
            down[id].push(number(t, line, "an element id")?);
        }
    }
    if let Some((line, _, toks)) = lines.next() {
        return Err(ParseError::new(
            line,
            toks[0].column,
            "unexpected content after the last element",
        )
        .into());
    }
    let l = PlanarLattice::build_diagram(up, down)?;
    flags.verify(&l)?;
    Ok((l, flags))
}
