//! The line-oriented input format for algebras and module families.
//!
//! Every non-blank line is `key: value`; lines whose first non-blank
//! character is `#` are comments. An algebra document is either
//!
//! ```text
//! preset: upper_triangular(2,2)
//! ```
//!
//! or explicit data with sparse structure constants `i j k value`:
//!
//! ```text
//! p: 2
//! dim: 3
//! basis: e11 e12 e22
//! one: 1 0 1
//! mult: 0 0 0 1; 0 1 1 1; 1 2 1 1; 2 2 2 1
//! ```
//!
//! A family document names its algebra (`algebra: <preset>`,
//! `algebra-file: <path>`, or the explicit keys above) followed by
//! `factor:` lines:
//!
//! ```text
//! algebra: upper_triangular(2,2)
//! factor: simple#0 as S1
//! factor: regular
//! factor: quotient e12
//! factor: explicit 1 as T
//! action: 1
//! action: 0
//! action: 0
//! ```
//!
//! `quotient g1; g2` is the regular module modulo the left ideal generated
//! by the listed elements, each a coordinate vector or a `+`-joined sum of
//! basis names. `explicit n` is followed by one `action:` line per algebra
//! basis element, giving an `n x n` matrix with rows separated by `;`.

use std::fmt;
use std::path::{Path, PathBuf};

use irrtop_core::ideal::{ideal_generated, Sidedness};
use irrtop_core::presets::MAX_PRESET_DIM;
use irrtop_core::{enumerate_irr, Algebra, Matrix, ModuleRep, Preset, PrimeField, ProductFamily};

/// Largest explicit algebra dimension accepted.
pub const MAX_DIM: usize = MAX_PRESET_DIM;
/// Largest explicit module dimension accepted.
pub const MAX_MODULE_DIM: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl Diagnostic {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        Self {
            line,
            column,
            message: message.into(),
        }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

/// One or more positioned diagnostics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostics(pub Vec<Diagnostic>);

impl fmt::Display for Diagnostics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl std::error::Error for Diagnostics {}

impl From<Diagnostic> for Diagnostics {
    fn from(d: Diagnostic) -> Self {
        Diagnostics(vec![d])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triple {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub v: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExplicitAlgebra {
    pub p: u32,
    pub dim: usize,
    pub basis: Option<Vec<String>>,
    pub one: Vec<u32>,
    pub mult: Vec<Triple>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraDoc {
    Preset(Preset),
    Explicit(ExplicitAlgebra),
}

/// An algebra element written in a document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Element {
    Coords(Vec<u32>),
    /// Sum of basis elements given by name.
    Names(Vec<String>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FactorKind {
    Regular,
    Simple(usize),
    Quotient(Vec<Element>),
    Explicit {
        dim: usize,
        action: Vec<Vec<Vec<u32>>>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorDoc {
    pub kind: FactorKind,
    pub label: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraSource {
    Inline(AlgebraDoc),
    File(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyDoc {
    pub algebra: AlgebraSource,
    pub factors: Vec<FactorDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InputDoc {
    Algebra(AlgebraDoc),
    Family(FamilyDoc),
}

/// Line numbers of the keys of a parsed document, for later diagnostics.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SourceMap {
    pub keys: Vec<(String, usize)>,
    /// Line of each `factor:` entry.
    pub factors: Vec<usize>,
}

impl SourceMap {
    pub fn line_of(&self, key: &str) -> usize {
        self.keys
            .iter()
            .find(|(k, _)| k == key)
            .map_or(1, |&(_, l)| l)
    }
}

struct RawLine<'a> {
    line: usize,
    key: &'a str,
    key_col: usize,
    value: &'a str,
    value_col: usize,
}

fn col_of(text: &str, byte: usize) -> usize {
    text[..byte].chars().count() + 1
}

fn split_lines<'a>(text: &'a str, diags: &mut Vec<Diagnostic>) -> Vec<RawLine<'a>> {
    let mut out = Vec::new();
    for (idx, raw) in text.split('\n').enumerate() {
        let line = idx + 1;
        let raw = raw.strip_suffix('\r').unwrap_or(raw);
        let trimmed = raw.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let start = raw.len() - trimmed.len();
        let Some(colon) = raw[start..].find(':').map(|c| c + start) else {
            diags.push(Diagnostic::new(line, col_of(raw, start), "expected `key: value`"));
            continue;
        };
        let key = raw[start..colon].trim_end();
        if key.is_empty() || !key.chars().all(|c| c.is_ascii_lowercase() || c == '-') {
            diags.push(Diagnostic::new(line, col_of(raw, start), format!("malformed key `{key}`")));
            continue;
        }
        let after = &raw[colon + 1..];
        let value = after.trim();
        let lead = after.len() - after.trim_start().len();
        out.push(RawLine {
            line,
            key,
            key_col: col_of(raw, start),
            value,
            value_col: col_of(raw, colon + 1 + lead),
        });
    }
    out
}

/// Whitespace-separated tokens with their columns.
fn tokens(value: &str, col: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut chars = value.char_indices().peekable();
    while let Some(&(i, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        let start = i;
        let mut end = value.len();
        while let Some(&(j, c)) = chars.peek() {
            if c.is_whitespace() {
                end = j;
                break;
            }
            chars.next();
        }
        out.push((col + value[..start].chars().count(), &value[start..end]));
    }
    out
}

/// Pieces of `value` separated by `sep`, trimmed, with their columns.
fn pieces(value: &str, col: usize, sep: char) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = 0;
    for (i, c) in value.char_indices().chain(std::iter::once((value.len(), sep))) {
        if c == sep {
            let piece = &value[start..i];
            let lead = piece.len() - piece.trim_start().len();
            out.push((col + value[..start + lead].chars().count(), piece.trim()));
            start = i + c.len_utf8();
        }
    }
    out
}

fn number(line: usize, col: usize, tok: &str, what: &str) -> Result<u64, Diagnostic> {
    tok.parse::<u64>()
        .map_err(|_| Diagnostic::new(line, col, format!("expected a number for {what}, found `{tok}`")))
}

fn numbers(line: usize, col: usize, value: &str, what: &str) -> Result<Vec<(usize, u64)>, Diagnostic> {
    tokens(value, col)
        .into_iter()
        .map(|(c, t)| number(line, c, t, what).map(|n| (c, n)))
        .collect()
}

fn valid_name(name: &str) -> bool {
    !name.is_empty()
        && !name.chars().all(|c| c.is_ascii_digit())
        && name
            .chars()
            .all(|c| !c.is_whitespace() && !matches!(c, '+' | ';' | ',' | '#'))
}

const ALGEBRA_KEYS: [&str; 6] = ["preset", "p", "dim", "basis", "one", "mult"];

/// Accumulates algebra keys from a sequence of lines.
#[derive(Default)]
struct AlgebraKeys {
    preset: Option<(usize, usize, Preset)>,
    p: Option<(usize, usize, u64)>,
    dim: Option<(usize, usize, u64)>,
    basis: Option<(usize, Vec<(usize, String)>)>,
    one: Option<(usize, Vec<(usize, u64)>)>,
    mult: Vec<(usize, usize, [u64; 4])>,
    first_line: Option<usize>,
}

impl AlgebraKeys {
    fn take(&mut self, l: &RawLine<'_>, diags: &mut Vec<Diagnostic>) {
        self.first_line.get_or_insert(l.line);
        let dup = |d: &mut Vec<Diagnostic>| {
            d.push(Diagnostic::new(l.line, l.key_col, format!("duplicate key `{}`", l.key)))
        };
        match l.key {
            "preset" => {
                if self.preset.is_some() {
                    return dup(diags);
                }
                match l.value.parse::<Preset>() {
                    Ok(p) => self.preset = Some((l.line, l.value_col, p)),
                    Err(e) => {
                        let offset = match &e {
                            irrtop_core::PresetError::Syntax { offset, .. }
                            | irrtop_core::PresetError::Unknown { offset, .. } => *offset,
                            _ => 0,
                        };
                        let col = l.value_col + l.value[..offset.min(l.value.len())].chars().count();
                        diags.push(Diagnostic::new(l.line, col, e.to_string()));
                    }
                }
            }
            "p" | "dim" => {
                let slot = if l.key == "p" { &mut self.p } else { &mut self.dim };
                if slot.is_some() {
                    return dup(diags);
                }
                match numbers(l.line, l.value_col, l.value, l.key) {
                    Ok(v) if v.len() == 1 => *slot = Some((l.line, v[0].0, v[0].1)),
                    Ok(_) => diags.push(Diagnostic::new(
                        l.line,
                        l.value_col,
                        format!("`{}` takes exactly one number", l.key),
                    )),
                    Err(d) => diags.push(d),
                }
            }
            "basis" => {
                if self.basis.is_some() {
                    return dup(diags);
                }
                let mut names = Vec::new();
                for (c, t) in tokens(l.value, l.value_col) {
                    if !valid_name(t) {
                        diags.push(Diagnostic::new(l.line, c, format!("invalid basis name `{t}`")));
                        return;
                    }
                    if names.iter().any(|(_, n): &(usize, String)| n == t) {
                        diags.push(Diagnostic::new(l.line, c, format!("repeated basis name `{t}`")));
                        return;
                    }
                    names.push((c, t.to_string()));
                }
                self.basis = Some((l.line, names));
            }
            "one" => {
                if self.one.is_some() {
                    return dup(diags);
                }
                match numbers(l.line, l.value_col, l.value, "identity coordinates") {
                    Ok(v) => self.one = Some((l.line, v)),
                    Err(d) => diags.push(d),
                }
            }
            "mult" => {
                for (c, piece) in pieces(l.value, l.value_col, ';') {
                    if piece.is_empty() {
                        continue;
                    }
                    match numbers(l.line, c, piece, "a structure constant") {
                        Ok(v) if v.len() == 4 => {
                            self.mult.push((l.line, c, [v[0].1, v[1].1, v[2].1, v[3].1]))
                        }
                        Ok(_) => diags.push(Diagnostic::new(
                            l.line,
                            c,
                            "a structure constant is written `i j k value`",
                        )),
                        Err(d) => diags.push(d),
                    }
                }
            }
            _ => unreachable!("caller filters keys"),
        }
    }

    fn finish(self, diags: &mut Vec<Diagnostic>) -> Option<AlgebraDoc> {
        let at = self.first_line.unwrap_or(1);
        let explicit = self.p.is_some()
            || self.dim.is_some()
            || self.basis.is_some()
            || self.one.is_some()
            || !self.mult.is_empty();
        if let Some((line, col, preset)) = self.preset {
            if explicit {
                diags.push(Diagnostic::new(
                    line,
                    col,
                    "`preset` cannot be combined with explicit structure constants",
                ));
                return None;
            }
            return Some(AlgebraDoc::Preset(preset));
        }
        let mut missing = |key: &str, what: &str| {
            diags.push(Diagnostic::new(at, 1, format!("missing key `{key}` ({what})")));
        };
        if self.p.is_none() {
            missing("p", "field modulus");
        }
        if self.dim.is_none() {
            missing("dim", "algebra dimension");
        }
        if self.one.is_none() {
            missing("one", "identity coordinates");
        }
        let (Some((pl, pc, p)), Some((dl, dc, dim)), Some((ol, one))) = (self.p, self.dim, self.one) else {
            return None;
        };
        let before = diags.len();
        let p = match u32::try_from(p).ok().map(PrimeField::new) {
            Some(Ok(f)) => f.modulus(),
            _ => {
                diags.push(Diagnostic::new(pl, pc, format!("{p} is not a supported prime")));
                return None;
            }
        };
        if dim == 0 || dim > MAX_DIM as u64 {
            diags.push(Diagnostic::new(dl, dc, format!("dimension must be between 1 and {MAX_DIM}")));
            return None;
        }
        let dim = dim as usize;
        if one.len() != dim {
            let col = one.first().map_or(1, |t| t.0);
            diags.push(Diagnostic::new(
                ol,
                col,
                format!("identity has {} coordinates, expected {dim}", one.len()),
            ));
        }
        for &(c, v) in &one {
            if v >= u64::from(p) {
                diags.push(Diagnostic::new(ol, c, format!("coordinate {v} is not below {p}")));
            }
        }
        let basis = match self.basis {
            Some((bl, names)) => {
                if names.len() != dim {
                    diags.push(Diagnostic::new(
                        bl,
                        names.first().map_or(1, |t| t.0),
                        format!("{} basis names for dimension {dim}", names.len()),
                    ));
                }
                Some(names.into_iter().map(|(_, n)| n).collect())
            }
            None => None,
        };
        let mut mult: Vec<Triple> = Vec::new();
        for (ml, mc, [i, j, k, v]) in self.mult {
            if i >= dim as u64 || j >= dim as u64 || k >= dim as u64 {
                diags.push(Diagnostic::new(ml, mc, format!("index out of range for dimension {dim}")));
                continue;
            }
            if v >= u64::from(p) {
                diags.push(Diagnostic::new(ml, mc, format!("value {v} is not below {p}")));
                continue;
            }
            let t = Triple {
                i: i as usize,
                j: j as usize,
                k: k as usize,
                v: v as u32,
            };
            if mult.iter().any(|m| (m.i, m.j, m.k) == (t.i, t.j, t.k)) {
                diags.push(Diagnostic::new(ml, mc, format!("repeated structure constant {i} {j} {k}")));
                continue;
            }
            mult.push(t);
        }
        if diags.len() > before {
            return None;
        }
        Some(AlgebraDoc::Explicit(ExplicitAlgebra {
            p,
            dim,
            basis,
            one: one.into_iter().map(|(_, v)| v as u32).collect(),
            mult,
        }))
    }
}

fn decode(bytes: &[u8]) -> Result<&str, Diagnostics> {
    std::str::from_utf8(bytes).map_err(|e| {
        let good = &bytes[..e.valid_up_to()];
        let text = std::str::from_utf8(good).expect("valid prefix");
        let line = text.matches('\n').count() + 1;
        let col = text.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        Diagnostic::new(line, col, "input is not valid UTF-8").into()
    })
}

pub fn parse_algebra(text: &str) -> Result<(AlgebraDoc, SourceMap), Diagnostics> {
    let mut diags = Vec::new();
    let lines = split_lines(text, &mut diags);
    let mut keys = AlgebraKeys::default();
    let mut map = SourceMap::default();
    for l in &lines {
        if ALGEBRA_KEYS.contains(&l.key) {
            map.keys.push((l.key.to_string(), l.line));
            keys.take(l, &mut diags);
        } else {
            diags.push(Diagnostic::new(l.line, l.key_col, format!("unknown key `{}` in an algebra document", l.key)));
        }
    }
    if lines.is_empty() && diags.is_empty() {
        diags.push(Diagnostic::new(1, 1, "empty document"));
    }
    let doc = keys.finish(&mut diags);
    match doc {
        Some(doc) if diags.is_empty() => Ok((doc, map)),
        _ => Err(Diagnostics(diags)),
    }
}

fn parse_element(line: usize, col: usize, text: &str) -> Result<Element, Diagnostic> {
    if text.is_empty() {
        return Err(Diagnostic::new(line, col, "empty element"));
    }
    let first = text.trim_start().chars().next().unwrap_or(' ');
    if first.is_ascii_digit() {
        let v = numbers(line, col, text, "a coordinate")?;
        Ok(Element::Coords(
            v.into_iter()
                .map(|(c, n)| u32::try_from(n).map_err(|_| Diagnostic::new(line, c, "coordinate too large")))
                .collect::<Result<_, _>>()?,
        ))
    } else {
        let mut names = Vec::new();
        for (c, piece) in pieces(text, col, '+') {
            if !valid_name(piece) {
                return Err(Diagnostic::new(line, c, format!("invalid basis name `{piece}`")));
            }
            names.push(piece.to_string());
        }
        Ok(Element::Names(names))
    }
}

/// Elements separated by `;`, as used by `quotient` factors and `--ideal`.
pub fn parse_elements(text: &str, line: usize, col: usize) -> Result<Vec<Element>, Diagnostic> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    pieces(text, col, ';')
        .into_iter()
        .map(|(c, piece)| parse_element(line, c, piece))
        .collect()
}

fn parse_factor(l: &RawLine<'_>) -> Result<FactorDoc, Diagnostic> {
    let (body, label) = match l.value.rfind(" as ") {
        Some(at) => {
            let label = l.value[at + 4..].trim();
            let col = l.value_col + l.value[..at + 4].chars().count();
            if !valid_name(label) {
                return Err(Diagnostic::new(l.line, col, format!("invalid label `{label}`")));
            }
            (l.value[..at].trim_end(), Some(label.to_string()))
        }
        None => (l.value, None),
    };
    let word_end = body.find(char::is_whitespace).unwrap_or(body.len());
    let (word, rest) = body.split_at(word_end);
    let rest_col = l.value_col + body[..word_end].chars().count();
    let rest_trim = rest.trim_start();
    let rest_col = rest_col + (rest.len() - rest_trim.len());
    let kind = if word == "regular" && rest_trim.is_empty() {
        FactorKind::Regular
    } else if let Some(k) = word.strip_prefix("simple#") {
        if !rest_trim.is_empty() {
            return Err(Diagnostic::new(l.line, rest_col, "unexpected text after `simple#k`"));
        }
        FactorKind::Simple(
            k.parse()
                .map_err(|_| Diagnostic::new(l.line, l.value_col + 7, format!("bad simple index `{k}`")))?,
        )
    } else if word == "quotient" {
        FactorKind::Quotient(parse_elements(rest_trim, l.line, rest_col)?)
    } else if word == "explicit" {
        let n = number(l.line, rest_col, rest_trim, "the module dimension")?;
        if n > MAX_MODULE_DIM as u64 {
            return Err(Diagnostic::new(
                l.line,
                rest_col,
                format!("module dimension is limited to {MAX_MODULE_DIM}"),
            ));
        }
        FactorKind::Explicit {
            dim: n as usize,
            action: Vec::new(),
        }
    } else {
        return Err(Diagnostic::new(
            l.line,
            l.value_col,
            "expected `regular`, `simple#k`, `quotient ...` or `explicit n`",
        ));
    };
    Ok(FactorDoc { kind, label })
}

fn parse_action(l: &RawLine<'_>, n: usize) -> Result<Vec<Vec<u32>>, Diagnostic> {
    if n == 0 {
        if !l.value.is_empty() {
            return Err(Diagnostic::new(l.line, l.value_col, "a 0-dimensional action is empty"));
        }
        return Ok(Vec::new());
    }
    let rows = pieces(l.value, l.value_col, ';');
    if rows.len() != n {
        return Err(Diagnostic::new(l.line, l.value_col, format!("expected {n} rows, found {}", rows.len())));
    }
    rows.into_iter()
        .map(|(c, row)| {
            let v = numbers(l.line, c, row, "a matrix entry")?;
            if v.len() != n {
                return Err(Diagnostic::new(l.line, c, format!("expected {n} entries, found {}", v.len())));
            }
            v.into_iter()
                .map(|(c, x)| u32::try_from(x).map_err(|_| Diagnostic::new(l.line, c, "entry too large")))
                .collect()
        })
        .collect()
}

pub fn parse_family(text: &str) -> Result<(FamilyDoc, SourceMap), Diagnostics> {
    let mut diags = Vec::new();
    let lines = split_lines(text, &mut diags);
    let mut keys = AlgebraKeys::default();
    let mut map = SourceMap::default();
    let mut preset_alias: Option<usize> = None;
    let mut file: Option<(usize, usize, String)> = None;
    let mut factors: Vec<FactorDoc> = Vec::new();
    let mut open_explicit: Option<usize> = None;
    for l in &lines {
        if l.key != "action" {
            open_explicit = None;
        }
        match l.key {
            "algebra" => {
                map.keys.push(("algebra".into(), l.line));
                if preset_alias.is_some() {
                    diags.push(Diagnostic::new(l.line, l.key_col, "duplicate key `algebra`"));
                    continue;
                }
                preset_alias = Some(l.line);
                let alias = RawLine {
                    key: "preset",
                    ..*l
                };
                keys.take(&alias, &mut diags);
            }
            "algebra-file" => {
                map.keys.push(("algebra-file".into(), l.line));
                if file.is_some() {
                    diags.push(Diagnostic::new(l.line, l.key_col, "duplicate key `algebra-file`"));
                } else if l.value.is_empty() {
                    diags.push(Diagnostic::new(l.line, l.value_col, "empty path"));
                } else {
                    file = Some((l.line, l.key_col, l.value.to_string()));
                }
            }
            "factor" => match parse_factor(l) {
                Ok(f) => {
                    if matches!(f.kind, FactorKind::Explicit { .. }) {
                        open_explicit = Some(factors.len());
                    }
                    map.factors.push(l.line);
                    factors.push(f);
                }
                Err(d) => diags.push(d),
            },
            "action" => {
                let Some(idx) = open_explicit else {
                    diags.push(Diagnostic::new(l.line, l.key_col, "`action` must follow an explicit factor"));
                    continue;
                };
                let FactorKind::Explicit { dim, action } = &mut factors[idx].kind else {
                    unreachable!("open factor is explicit");
                };
                match parse_action(l, *dim) {
                    Ok(m) => {
                        if action.len() >= MAX_DIM {
                            diags.push(Diagnostic::new(l.line, l.key_col, "too many action lines"));
                        } else {
                            action.push(m);
                        }
                    }
                    Err(d) => diags.push(d),
                }
            }
            k if ALGEBRA_KEYS.contains(&k) && k != "preset" => {
                map.keys.push((k.to_string(), l.line));
                keys.take(l, &mut diags);
            }
            other => diags.push(Diagnostic::new(
                l.line,
                l.key_col,
                format!("unknown key `{other}` in a family document"),
            )),
        }
    }
    let inline_used = keys.first_line.is_some();
    let algebra = match (file, inline_used) {
        (Some((line, col, _)), true) => {
            diags.push(Diagnostic::new(line, col, "`algebra-file` cannot be combined with an inline algebra"));
            None
        }
        (Some((_, _, path)), false) => Some(AlgebraSource::File(path)),
        (None, true) => keys.finish(&mut diags).map(AlgebraSource::Inline),
        (None, false) => {
            diags.push(Diagnostic::new(1, 1, "missing algebra (`algebra`, `algebra-file` or explicit keys)"));
            None
        }
    };
    match algebra {
        Some(algebra) if diags.is_empty() => Ok((FamilyDoc { algebra, factors }, map)),
        _ => Err(Diagnostics(diags)),
    }
}

/// Parses either kind of document; family documents are recognized by
/// their `factor`, `algebra` or `algebra-file` keys.
pub fn parse_input(text: &str) -> Result<(InputDoc, SourceMap), Diagnostics> {
    let mut scratch = Vec::new();
    let is_family = split_lines(text, &mut scratch)
        .iter()
        .any(|l| matches!(l.key, "factor" | "algebra" | "algebra-file"));
    if is_family {
        parse_family(text).map(|(d, m)| (InputDoc::Family(d), m))
    } else {
        parse_algebra(text).map(|(d, m)| (InputDoc::Algebra(d), m))
    }
}

pub fn parse_input_bytes(bytes: &[u8]) -> Result<(InputDoc, SourceMap), Diagnostics> {
    parse_input(decode(bytes)?)
}

fn join_numbers(v: &[u32]) -> String {
    v.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
}

fn write_algebra_keys(doc: &AlgebraDoc, preset_key: &str, out: &mut String) {
    match doc {
        AlgebraDoc::Preset(p) => out.push_str(&format!("{preset_key}: {p}\n")),
        AlgebraDoc::Explicit(e) => {
            out.push_str(&format!("p: {}\ndim: {}\n", e.p, e.dim));
            if let Some(b) = &e.basis {
                out.push_str(&format!("basis: {}\n", b.join(" ")));
            }
            out.push_str(&format!("one: {}\n", join_numbers(&e.one)));
            if !e.mult.is_empty() {
                let triples: Vec<String> = e
                    .mult
                    .iter()
                    .map(|t| format!("{} {} {} {}", t.i, t.j, t.k, t.v))
                    .collect();
                out.push_str(&format!("mult: {}\n", triples.join("; ")));
            }
        }
    }
}

pub fn serialize_algebra(doc: &AlgebraDoc) -> String {
    let mut out = String::new();
    write_algebra_keys(doc, "preset", &mut out);
    out
}

pub fn format_elements(elems: &[Element]) -> String {
    elems
        .iter()
        .map(|e| match e {
            Element::Coords(v) => join_numbers(v),
            Element::Names(n) => n.join("+"),
        })
        .collect::<Vec<_>>()
        .join("; ")
}

pub fn serialize_family(doc: &FamilyDoc) -> String {
    let mut out = String::new();
    match &doc.algebra {
        AlgebraSource::Inline(a) => write_algebra_keys(a, "algebra", &mut out),
        AlgebraSource::File(p) => out.push_str(&format!("algebra-file: {p}\n")),
    }
    for f in &doc.factors {
        let body = match &f.kind {
            FactorKind::Regular => "regular".to_string(),
            FactorKind::Simple(k) => format!("simple#{k}"),
            FactorKind::Quotient(g) => format!("quotient {}", format_elements(g)).trim_end().to_string(),
            FactorKind::Explicit { dim, .. } => format!("explicit {dim}"),
        };
        match &f.label {
            Some(l) => out.push_str(&format!("factor: {body} as {l}\n")),
            None => out.push_str(&format!("factor: {body}\n")),
        }
        if let FactorKind::Explicit { action, .. } = &f.kind {
            for m in action {
                let rows: Vec<String> = m.iter().map(|r| join_numbers(r)).collect();
                let value = rows.join("; ");
                if value.is_empty() {
                    out.push_str("action:\n");
                } else {
                    out.push_str(&format!("action: {value}\n"));
                }
            }
        }
    }
    out
}

pub fn serialize_input(doc: &InputDoc) -> String {
    match doc {
        InputDoc::Algebra(a) => serialize_algebra(a),
        InputDoc::Family(f) => serialize_family(f),
    }
}

/// Builds the algebra without checking the axioms.
pub fn build_algebra(doc: &AlgebraDoc, map: &SourceMap) -> Result<Algebra, Diagnostics> {
    match doc {
        AlgebraDoc::Preset(p) => {
            let line = map.line_of("preset").max(map.line_of("algebra"));
            p.build().map_err(|e| Diagnostic::new(line, 1, e.to_string()).into())
        }
        AlgebraDoc::Explicit(e) => {
            let f = PrimeField::new(e.p).map_err(|err| Diagnostic::new(map.line_of("p"), 1, err.to_string()))?;
            let d = e.dim;
            let mut structure = vec![0u32; d * d * d];
            for t in &e.mult {
                structure[(t.i * d + t.j) * d + t.k] = t.v;
            }
            let a = Algebra::new(f, d, structure, e.one.clone())
                .map_err(|err| Diagnostic::new(map.line_of("one"), 1, err.to_string()))?;
            match &e.basis {
                Some(b) => a
                    .with_basis_names(b.clone())
                    .map_err(|err| Diagnostic::new(map.line_of("basis"), 1, err.to_string()).into()),
                None => Ok(a),
            }
        }
    }
}

/// Builds the algebra and rejects it unless it is associative with identity.
pub fn resolve_algebra(doc: &AlgebraDoc, map: &SourceMap) -> Result<Algebra, Diagnostics> {
    let a = build_algebra(doc, map)?;
    let report = a.validate();
    if let Some(v) = report.violations.first() {
        let line = match doc {
            AlgebraDoc::Preset(_) => map.line_of("preset"),
            AlgebraDoc::Explicit(_) => map.line_of("mult"),
        };
        return Err(Diagnostic::new(
            line,
            1,
            format!(
                "not an associative algebra with identity: {} violated constraints, first: {v}",
                report.violations.len()
            ),
        )
        .into());
    }
    Ok(a)
}

/// Coordinates of an element, checked against the algebra.
pub fn element_coords(a: &Algebra, e: &Element) -> Result<Vec<u32>, String> {
    let p = a.field().modulus();
    match e {
        Element::Coords(v) => {
            if v.len() != a.dim() {
                return Err(format!("element has {} coordinates, expected {}", v.len(), a.dim()));
            }
            if let Some(x) = v.iter().find(|&&x| x >= p) {
                return Err(format!("coordinate {x} is not below {p}"));
            }
            Ok(v.clone())
        }
        Element::Names(names) => {
            let f = a.field();
            let mut out = vec![0u32; a.dim()];
            for n in names {
                let i = a
                    .basis_names()
                    .iter()
                    .position(|b| b == n)
                    .ok_or_else(|| format!("unknown basis name `{n}`"))?;
                out[i] = f.add(out[i], 1);
            }
            Ok(out)
        }
    }
}

/// A resolved family: the algebra with its factor modules and labels.
pub fn resolve_family(
    doc: &FamilyDoc,
    map: &SourceMap,
    base_dir: Option<&Path>,
    seed: u64,
) -> Result<ProductFamily, Diagnostics> {
    let algebra = match &doc.algebra {
        AlgebraSource::Inline(a) => resolve_algebra(a, map)?,
        AlgebraSource::File(path) => {
            let line = map.line_of("algebra-file");
            let full: PathBuf = match base_dir {
                Some(dir) => dir.join(path),
                None => PathBuf::from(path),
            };
            let bytes = std::fs::read(&full)
                .map_err(|e| Diagnostic::new(line, 1, format!("cannot read {}: {e}", full.display())))?;
            let text = decode(&bytes).map_err(|d| nested(line, &full, d))?;
            let (inner, inner_map) = parse_algebra(text).map_err(|d| nested(line, &full, d))?;
            resolve_algebra(&inner, &inner_map).map_err(|d| nested(line, &full, d))?
        }
    };
    let mut irr = None;
    let mut factors = Vec::with_capacity(doc.factors.len());
    let mut labels = Vec::with_capacity(doc.factors.len());
    for (idx, f) in doc.factors.iter().enumerate() {
        let line = map.factors.get(idx).copied().unwrap_or(1);
        let err = |msg: String| Diagnostics::from(Diagnostic::new(line, 1, msg));
        let (module, default_label) = match &f.kind {
            FactorKind::Regular => (ModuleRep::regular(&algebra), "regular".to_string()),
            FactorKind::Simple(k) => {
                if irr.is_none() {
                    irr = Some(enumerate_irr(&algebra, seed).map_err(|e| err(e.to_string()))?);
                }
                let space = irr.as_ref().expect("just computed");
                let point = space
                    .points()
                    .get(*k)
                    .ok_or_else(|| err(format!("simple#{k} does not exist: the algebra has {} simple modules", space.len())))?;
                (point.rep.clone(), format!("simple#{k}"))
            }
            FactorKind::Quotient(gens) => {
                let coords = gens
                    .iter()
                    .map(|g| element_coords(&algebra, g))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(err)?;
                let left = ideal_generated(&algebra, &coords, Sidedness::Left);
                let (_, quot) = ModuleRep::regular(&algebra)
                    .sub_quotient(&left.space)
                    .map_err(|e| err(e.to_string()))?;
                (quot, format!("quotient {}", format_elements(gens)))
            }
            FactorKind::Explicit { dim, action } => {
                if action.len() != algebra.dim() {
                    return Err(err(format!(
                        "explicit factor needs {} action lines, found {}",
                        algebra.dim(),
                        action.len()
                    )));
                }
                let p = algebra.field().modulus();
                let mut mats = Vec::with_capacity(action.len());
                for rows in action {
                    if rows.iter().flatten().any(|&x| x >= p) {
                        return Err(err(format!("action entries must be below {p}")));
                    }
                    mats.push(Matrix::from_rows(algebra.field(), *dim, rows));
                }
                let m = ModuleRep::new(&algebra, *dim, mats).map_err(|e| err(e.to_string()))?;
                (m, format!("explicit {dim}"))
            }
        };
        factors.push(module);
        labels.push(f.label.clone().unwrap_or(default_label));
    }
    ProductFamily::new(algebra, factors, Some(labels))
        .map_err(|e| Diagnostic::new(1, 1, e.to_string()).into())
}

fn nested(line: usize, path: &Path, d: Diagnostics) -> Diagnostics {
    Diagnostics(
        d.0.into_iter()
            .map(|inner| {
                Diagnostic::new(line, 1, format!("in {}: {inner}", path.display()))
            })
            .collect(),
    )
}
