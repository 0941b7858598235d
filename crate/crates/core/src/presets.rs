//! A gallery of named algebras with documented bases.
//!
//! | preset                         | basis                                  |
//! |--------------------------------|----------------------------------------|
//! | `matrix_algebra(n,p)`          | matrix units `e11, e12, ..., enn`, row-major |
//! | `upper_triangular(n,p)`        | matrix units `eij` with `i <= j`, row-major |
//! | `truncated_polynomial(m,p)`    | `1, x, ..., x^(m-1)` in `k[x]/(x^m)`   |
//! | `group_algebra([table],p)`     | group elements `g0, g1, ...` of the table |
//! | `cyclic_group_algebra(n,p)`    | `1, g, ..., g^(n-1)`                   |
//! | `symmetric_group_algebra(n,p)` | permutations of `{0..n}` in lexicographic order |
//! | `commutative_split(k,p)`       | orthogonal idempotents `e1, ..., ek`   |
//! | `product(A, B, ...)`           | concatenated bases, prefixed `i:`      |

use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use thiserror::Error;

use crate::algebra::Algebra;
use crate::field::{FieldError, PrimeField};

/// Largest algebra dimension a preset may produce.
pub const MAX_PRESET_DIM: usize = 36;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresetError {
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown preset `{name}`")]
    Unknown { name: String, offset: usize },
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("preset dimension {0} exceeds the limit {MAX_PRESET_DIM}")]
    TooLarge(usize),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("factors of a product must share one field")]
    FieldMismatch,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Preset {
    MatrixAlgebra { n: usize, p: u32 },
    UpperTriangular { n: usize, p: u32 },
    TruncatedPolynomial { m: usize, p: u32 },
    GroupAlgebra { table: Vec<Vec<usize>>, p: u32 },
    CyclicGroupAlgebra { n: usize, p: u32 },
    SymmetricGroupAlgebra { n: usize, p: u32 },
    CommutativeSplit { k: usize, p: u32 },
    Product(Vec<Preset>),
}

impl Preset {
    pub fn build(&self) -> Result<Algebra, PresetError> {
        let dim = self.dim()?;
        if dim > MAX_PRESET_DIM {
            return Err(PresetError::TooLarge(dim));
        }
        match self {
            Preset::MatrixAlgebra { n, p } => matrix_algebra(*n, field(*p)?),
            Preset::UpperTriangular { n, p } => upper_triangular(*n, field(*p)?),
            Preset::TruncatedPolynomial { m, p } => truncated_polynomial(*m, field(*p)?),
            Preset::GroupAlgebra { table, p } => {
                let names = (0..table.len()).map(|g| format!("g{g}")).collect();
                group_algebra(table, field(*p)?, names)
            }
            Preset::CyclicGroupAlgebra { n, p } => {
                let table: Vec<Vec<usize>> =
                    (0..*n).map(|a| (0..*n).map(|b| (a + b) % n).collect()).collect();
                let names = (0..*n)
                    .map(|k| match k {
                        0 => "1".to_string(),
                        1 => "g".to_string(),
                        _ => format!("g^{k}"),
                    })
                    .collect();
                group_algebra(&table, field(*p)?, names)
            }
            Preset::SymmetricGroupAlgebra { n, p } => {
                let perms = permutations(*n);
                let index = |q: &[usize]| perms.iter().position(|r| r.as_slice() == q).unwrap();
                // (s t)(i) = s(t(i))
                let table: Vec<Vec<usize>> = perms
                    .iter()
                    .map(|s| {
                        perms
                            .iter()
                            .map(|t| index(&t.iter().map(|&i| s[i]).collect::<Vec<_>>()))
                            .collect()
                    })
                    .collect();
                let names = perms
                    .iter()
                    .map(|s| {
                        let body: Vec<String> = s.iter().map(|i| i.to_string()).collect();
                        format!("[{}]", body.join(""))
                    })
                    .collect();
                group_algebra(&table, field(*p)?, names)
            }
            Preset::CommutativeSplit { k, p } => commutative_split(*k, field(*p)?),
            Preset::Product(parts) => {
                if parts.is_empty() {
                    return Err(PresetError::BadParameter(
                        "product needs at least one factor".into(),
                    ));
                }
                let built = parts
                    .iter()
                    .map(Preset::build)
                    .collect::<Result<Vec<_>, _>>()?;
                Algebra::product(&built).ok_or(PresetError::FieldMismatch)
            }
        }
    }

    /// Dimension of the algebra this preset describes, without building it.
    pub fn dim(&self) -> Result<usize, PresetError> {
        let too_large = |x: Option<usize>| x.ok_or(PresetError::TooLarge(usize::MAX));
        Ok(match self {
            Preset::MatrixAlgebra { n, .. } => too_large(n.checked_mul(*n))?,
            Preset::UpperTriangular { n, .. } => too_large(n.checked_mul(n + 1))? / 2,
            Preset::TruncatedPolynomial { m, .. } => *m,
            Preset::GroupAlgebra { table, .. } => table.len(),
            Preset::CyclicGroupAlgebra { n, .. } => *n,
            Preset::SymmetricGroupAlgebra { n, .. } => {
                if *n > 5 {
                    return Err(PresetError::TooLarge(usize::MAX));
                }
                (1..=*n).product()
            }
            Preset::CommutativeSplit { k, .. } => *k,
            Preset::Product(parts) => {
                let mut total = 0usize;
                for part in parts {
                    total = too_large(total.checked_add(part.dim()?))?;
                }
                total
            }
        })
    }
}

fn field(p: u32) -> Result<PrimeField, PresetError> {
    Ok(PrimeField::new(p)?)
}

fn positive(name: &str, n: usize) -> Result<(), PresetError> {
    if n == 0 {
        return Err(PresetError::BadParameter(format!("{name} must be positive")));
    }
    Ok(())
}

struct Table {
    d: usize,
    s: Vec<u32>,
}

impl Table {
    fn new(d: usize) -> Self {
        Self {
            d,
            s: vec![0; d * d * d],
        }
    }

    fn set(&mut self, i: usize, j: usize, k: usize) {
        self.s[(i * self.d + j) * self.d + k] = 1;
    }
}

fn finish(f: PrimeField, t: Table, one: Vec<u32>, names: Vec<String>) -> Algebra {
    Algebra::new(f, t.d, t.s, one)
        .and_then(|a| a.with_basis_names(names))
        .expect("preset shapes are consistent")
}

fn matrix_algebra(n: usize, f: PrimeField) -> Result<Algebra, PresetError> {
    positive("n", n)?;
    let d = n * n;
    let idx = |i: usize, j: usize| i * n + j;
    let mut t = Table::new(d);
    // e_ij e_jl = e_il
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                t.set(idx(i, j), idx(j, l), idx(i, l));
            }
        }
    }
    let mut one = vec![0; d];
    for i in 0..n {
        one[idx(i, i)] = 1;
    }
    let names = (0..n)
        .flat_map(|i| (0..n).map(move |j| format!("e{}{}", i + 1, j + 1)))
        .collect();
    Ok(finish(f, t, one, names))
}

fn upper_triangular(n: usize, f: PrimeField) -> Result<Algebra, PresetError> {
    positive("n", n)?;
    let units: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i..n).map(move |j| (i, j)))
        .collect();
    let idx = |i: usize, j: usize| units.iter().position(|&u| u == (i, j)).unwrap();
    let d = units.len();
    let mut t = Table::new(d);
    for &(i, j) in &units {
        for &(j2, l) in &units {
            if j == j2 {
                t.set(idx(i, j), idx(j2, l), idx(i, l));
            }
        }
    }
    let mut one = vec![0; d];
    for i in 0..n {
        one[idx(i, i)] = 1;
    }
    let names = units
        .iter()
        .map(|&(i, j)| format!("e{}{}", i + 1, j + 1))
        .collect();
    Ok(finish(f, t, one, names))
}

fn truncated_polynomial(m: usize, f: PrimeField) -> Result<Algebra, PresetError> {
    positive("m", m)?;
    let mut t = Table::new(m);
    for i in 0..m {
        for j in 0..m - i {
            t.set(i, j, i + j);
        }
    }
    let mut one = vec![0; m];
    one[0] = 1;
    let names = (0..m)
        .map(|k| match k {
            0 => "1".to_string(),
            1 => "x".to_string(),
            _ => format!("x^{k}"),
        })
        .collect();
    Ok(finish(f, t, one, names))
}

fn group_algebra(
    table: &[Vec<usize>],
    f: PrimeField,
    names: Vec<String>,
) -> Result<Algebra, PresetError> {
    let n = table.len();
    positive("group order", n)?;
    if table.iter().any(|row| row.len() != n || row.iter().any(|&g| g >= n)) {
        return Err(PresetError::BadParameter(
            "group table must be square with entries below its order".into(),
        ));
    }
    let identity = (0..n)
        .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
        .ok_or_else(|| PresetError::BadParameter("group table has no identity".into()))?;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(PresetError::BadParameter(
                        "group table is not associative".into(),
                    ));
                }
            }
        }
    }
    let mut t = Table::new(n);
    for (a, row) in table.iter().enumerate() {
        for (b, &c) in row.iter().enumerate() {
            t.set(a, b, c);
        }
    }
    let mut one = vec![0; n];
    one[identity] = 1;
    Ok(finish(f, t, one, names))
}

fn commutative_split(k: usize, f: PrimeField) -> Result<Algebra, PresetError> {
    positive("k", k)?;
    let mut t = Table::new(k);
    for i in 0..k {
        t.set(i, i, i);
    }
    let names = (0..k).map(|i| format!("e{}", i + 1)).collect();
    Ok(finish(f, t, vec![1; k], names))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for i in 0..n {
            if !prefix.contains(&i) {
                prefix.push(i);
                go(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), n, &mut out);
    out
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Preset::MatrixAlgebra { n, p } => write!(f, "matrix_algebra({n},{p})"),
            Preset::UpperTriangular { n, p } => write!(f, "upper_triangular({n},{p})"),
            Preset::TruncatedPolynomial { m, p } => write!(f, "truncated_polynomial({m},{p})"),
            Preset::GroupAlgebra { table, p } => {
                write!(f, "group_algebra([")?;
                for (r, row) in table.iter().enumerate() {
                    if r > 0 {
                        write!(f, "; ")?;
                    }
                    for (c, g) in row.iter().enumerate() {
                        if c > 0 {
                            write!(f, " ")?;
                        }
                        write!(f, "{g}")?;
                    }
                }
                write!(f, "],{p})")
            }
            Preset::CyclicGroupAlgebra { n, p } => write!(f, "cyclic_group_algebra({n},{p})"),
            Preset::SymmetricGroupAlgebra { n, p } => {
                write!(f, "symmetric_group_algebra({n},{p})")
            }
            Preset::CommutativeSplit { k, p } => write!(f, "commutative_split({k},{p})"),
            Preset::Product(parts) => {
                write!(f, "product(")?;
                for (i, part) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{part}")?;
                }
                write!(f, ")")
            }
        }
    }
}

impl FromStr for Preset {
    type Err = PresetError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parser = Parser { src: s, pos: 0 };
        let preset = parser.expr(0)?;
        parser.skip_ws();
        if parser.pos != s.len() {
            return Err(parser.error("trailing input after preset"));
        }
        Ok(preset)
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

const MAX_NESTING: usize = 16;

impl Parser<'_> {
    fn error(&self, message: &str) -> PresetError {
        PresetError::Syntax {
            offset: self.pos,
            message: message.to_string(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn expect(&mut self, want: char) -> Result<(), PresetError> {
        self.skip_ws();
        if self.peek() == Some(want) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected `{want}`")))
        }
    }

    fn ident(&mut self) -> Result<(usize, &str), PresetError> {
        self.skip_ws();
        let start = self.pos;
        while let Some(c) = self.peek() {
            if c.is_ascii_alphanumeric() || c == '_' {
                self.pos += 1;
            } else {
                break;
            }
        }
        if start == self.pos {
            return Err(self.error("expected a preset name"));
        }
        Ok((start, &self.src[start..self.pos]))
    }

    fn number(&mut self) -> Result<usize, PresetError> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        self.src[start..self.pos].parse().map_err(|_| PresetError::Syntax {
            offset: start,
            message: "number out of range".into(),
        })
    }

    fn prime(&mut self) -> Result<u32, PresetError> {
        let start = self.pos;
        let n = self.number()?;
        u32::try_from(n).map_err(|_| PresetError::Syntax {
            offset: start,
            message: "modulus out of range".into(),
        })
    }

    fn two_numbers(&mut self) -> Result<(usize, u32), PresetError> {
        self.expect('(')?;
        let a = self.number()?;
        self.expect(',')?;
        let p = self.prime()?;
        self.expect(')')?;
        Ok((a, p))
    }

    fn expr(&mut self, depth: usize) -> Result<Preset, PresetError> {
        if depth > MAX_NESTING {
            return Err(self.error("presets nested too deeply"));
        }
        let (start, name) = self.ident()?;
        let name: Box<str> = name.into();
        Ok(match &*name {
            "matrix_algebra" => {
                let (n, p) = self.two_numbers()?;
                Preset::MatrixAlgebra { n, p }
            }
            "upper_triangular" => {
                let (n, p) = self.two_numbers()?;
                Preset::UpperTriangular { n, p }
            }
            "truncated_polynomial" => {
                let (m, p) = self.two_numbers()?;
                Preset::TruncatedPolynomial { m, p }
            }
            "cyclic_group_algebra" => {
                let (n, p) = self.two_numbers()?;
                Preset::CyclicGroupAlgebra { n, p }
            }
            "symmetric_group_algebra" => {
                let (n, p) = self.two_numbers()?;
                Preset::SymmetricGroupAlgebra { n, p }
            }
            "commutative_split" => {
                let (k, p) = self.two_numbers()?;
                Preset::CommutativeSplit { k, p }
            }
            "group_algebra" => {
                self.expect('(')?;
                self.expect('[')?;
                let mut table = vec![Vec::new()];
                loop {
                    self.skip_ws();
                    match self.peek() {
                        Some(']') => {
                            self.pos += 1;
                            break;
                        }
                        Some(';') => {
                            self.pos += 1;
                            table.push(Vec::new());
                        }
                        Some(c) if c.is_ascii_digit() => {
                            let g = self.number()?;
                            table.last_mut().expect("nonempty").push(g);
                            if table.len() > MAX_PRESET_DIM
                                || table.last().map_or(0, Vec::len) > MAX_PRESET_DIM
                            {
                                return Err(self.error("group table too large"));
                            }
                        }
                        _ => return Err(self.error("expected a table entry, `;` or `]`")),
                    }
                }
                self.expect(',')?;
                let p = self.prime()?;
                self.expect(')')?;
                Preset::GroupAlgebra { table, p }
            }
            "product" => {
                self.expect('(')?;
                let mut parts = vec![self.expr(depth + 1)?];
                loop {
                    self.skip_ws();
                    match self.peek() {
                        Some(',') => {
                            self.pos += 1;
                            parts.push(self.expr(depth + 1)?);
                            if parts.len() > MAX_PRESET_DIM {
                                return Err(self.error("too many product factors"));
                            }
                        }
                        Some(')') => {
                            self.pos += 1;
                            break;
                        }
                        _ => return Err(self.error("expected `,` or `)`")),
                    }
                }
                Preset::Product(parts)
            }
            other => {
                return Err(PresetError::Unknown {
                    name: other.to_string(),
                    offset: start,
                })
            }
        })
    }
}

/// Named presets used by the self-checks and the acceptance runs.
pub fn gallery() -> Vec<(String, Algebra)> {
    const NAMES: &[&str] = &[
        "matrix_algebra(1,2)",
        "matrix_algebra(1,3)",
        "matrix_algebra(2,2)",
        "matrix_algebra(2,3)",
        "matrix_algebra(3,2)",
        "upper_triangular(2,2)",
        "upper_triangular(2,3)",
        "upper_triangular(3,2)",
        "truncated_polynomial(2,2)",
        "truncated_polynomial(3,3)",
        "cyclic_group_algebra(2,2)",
        "cyclic_group_algebra(3,2)",
        "cyclic_group_algebra(3,3)",
        "cyclic_group_algebra(4,5)",
        "symmetric_group_algebra(3,2)",
        "symmetric_group_algebra(3,3)",
        "commutative_split(3,2)",
        "commutative_split(6,2)",
        "product(upper_triangular(2,2),matrix_algebra(2,2))",
        "product(commutative_split(2,2),cyclic_group_algebra(3,2))",
    ];
    NAMES
        .iter()
        .map(|n| {
            let a = n
                .parse::<Preset>()
                .and_then(|p| p.build())
                .expect("gallery presets build");
            (n.to_string(), a)
        })
        .collect()
}
