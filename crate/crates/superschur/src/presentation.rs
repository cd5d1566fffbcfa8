//! The `.lsa` presentation format.
//!
//! ```text
//! superalgebra (2|3)_22
//! field Q
//! even e1 e2
//! odd f1 f2 f3
//! [e1,f2] = f1
//! [e1,f3] = f2
//! [f3,f3] = e2
//! ```
//!
//! Unlisted brackets are zero and mirrored brackets are filled in by
//! super-skew symmetry. Coefficients are integers or integer fractions.

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use superschur_core::kernel::complete_table;
use superschur_core::{Error, Field, FieldKind, PrimeField, Rationals, SuperDim, Superalgebra};
use thiserror::Error as ThisError;

use crate::any::AnyAlgebra;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: BigRational,
    pub label: String,
    pub pos: Pos,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketStmt {
    pub lhs: (String, String),
    pub rhs: Vec<Term>,
    pub pos: Pos,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationAst {
    pub name: String,
    /// `Q` when the file has no `field` line.
    pub field: FieldKind,
    pub even: Vec<String>,
    pub odd: Vec<String>,
    pub brackets: Vec<BracketStmt>,
}

impl PresentationAst {
    pub fn dims(&self) -> SuperDim {
        SuperDim::new(self.even.len(), self.odd.len())
    }

    fn index_of(&self, label: &str) -> usize {
        self.even
            .iter()
            .chain(&self.odd)
            .position(|l| l == label)
            .expect("labels are checked at parse time")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, ThisError)]
pub enum PresentationError {
    #[error("{pos}: syntax error: expected {}, found {found}", expected.join(" or "))]
    Syntax {
        pos: Pos,
        expected: Vec<&'static str>,
        found: String,
    },
    #[error("{pos}: undeclared label {label:?}")]
    UndeclaredLabel { label: String, pos: Pos },
    #[error("{pos}: label {label:?} declared twice")]
    DuplicateLabel { label: String, pos: Pos },
    #[error("{pos}: field {value} is not allowed (use Q or F p with p >= 5 prime)")]
    BadField { value: String, pos: Pos },
    #[error("{}bracket table: {error}", pos.map(|p| format!("{p}: ")).unwrap_or_default())]
    Table { error: Error, pos: Option<Pos> },
    #[error("{0}")]
    Jacobi(Box<JacobiFailure>),
}

/// First graded Jacobi violation of a file, rendered with the file's labels.
#[derive(Clone, Debug, PartialEq, Eq, ThisError)]
#[error(
    "graded Jacobi identity fails on {count} triple(s); first at ({}, {}, {}): [x,[y,z]] = {lhs} but [[x,y],z] + (-1)^(|x||y|)[y,[x,z]] = {rhs}",
    witness[0], witness[1], witness[2]
)]
pub struct JacobiFailure {
    pub witness: [String; 3],
    pub lhs: String,
    pub rhs: String,
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Word(String),
    Int(BigInt),
    Punct(char),
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Word(w) => format!("{w:?}"),
            Tok::Int(n) => format!("integer {n}"),
            Tok::Punct(c) => format!("'{c}'"),
        }
    }
}

struct Line {
    number: usize,
    toks: Vec<(Tok, usize)>,
    at: usize,
    end_col: usize,
}

fn strip_comment(raw: &str) -> &str {
    raw.split('#').next().unwrap_or("")
}

fn tokenize(number: usize, text: &str) -> Result<Line, PresentationError> {
    let chars: Vec<char> = text.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            toks.push((Tok::Int(digits.parse().expect("ascii digits")), col));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '\'') {
                i += 1;
            }
            toks.push((Tok::Word(chars[start..i].iter().collect()), col));
        } else if "[],=+-/".contains(c) {
            toks.push((Tok::Punct(c), col));
            i += 1;
        } else {
            return Err(PresentationError::Syntax {
                pos: Pos { line: number, col },
                expected: vec!["a label, integer or one of [ ] , = + - /"],
                found: format!("'{c}'"),
            });
        }
    }
    Ok(Line {
        number,
        toks,
        at: 0,
        end_col: chars.len() + 1,
    })
}

impl Line {
    fn pos(&self) -> Pos {
        let col = self.toks.get(self.at).map_or(self.end_col, |t| t.1);
        Pos { line: self.number, col }
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.0)
    }

    fn fail<T>(&self, expected: &[&'static str]) -> Result<T, PresentationError> {
        Err(PresentationError::Syntax {
            pos: self.pos(),
            expected: expected.to_vec(),
            found: self.peek().map_or_else(|| String::from("end of line"), Tok::describe),
        })
    }

    fn punct(&mut self, c: char, name: &'static str) -> Result<(), PresentationError> {
        if self.peek() == Some(&Tok::Punct(c)) {
            self.at += 1;
            Ok(())
        } else {
            self.fail(&[name])
        }
    }

    fn label(&mut self) -> Result<(String, Pos), PresentationError> {
        let pos = self.pos();
        match self.peek() {
            Some(Tok::Word(w)) => {
                let w = w.clone();
                self.at += 1;
                Ok((w, pos))
            }
            _ => self.fail(&["label"]),
        }
    }

    fn int(&mut self) -> Option<BigInt> {
        match self.peek() {
            Some(Tok::Int(n)) => {
                let n = n.clone();
                self.at += 1;
                Some(n)
            }
            _ => None,
        }
    }

    fn done(&self) -> bool {
        self.at == self.toks.len()
    }

    fn end(&self) -> Result<(), PresentationError> {
        if self.done() {
            Ok(())
        } else {
            self.fail(&["end of line"])
        }
    }
}

fn parse_term(line: &mut Line, negative: bool) -> Result<Option<Term>, PresentationError> {
    let pos = line.pos();
    let mut coeff = BigRational::one();
    if let Some(num) = line.int() {
        let mut den = BigInt::one();
        if line.peek() == Some(&Tok::Punct('/')) {
            line.at += 1;
            let den_pos = line.pos();
            den = match line.int() {
                Some(d) => d,
                None => return line.fail(&["denominator"]),
            };
            if den.is_zero() {
                return Err(PresentationError::Syntax {
                    pos: den_pos,
                    expected: vec!["nonzero denominator"],
                    found: String::from("0"),
                });
            }
        }
        coeff = BigRational::new(num, den);
        if coeff.is_zero() && line.done() {
            // the literal `0` standing for the zero vector
            return Ok(None);
        }
    }
    let (label, _) = line.label()?;
    if negative {
        coeff = -coeff;
    }
    Ok(Some(Term { coeff, label, pos }))
}

fn parse_bracket(line: &mut Line) -> Result<BracketStmt, PresentationError> {
    let pos = line.pos();
    line.punct('[', "'['")?;
    let (a, _) = line.label()?;
    line.punct(',', "','")?;
    let (b, _) = line.label()?;
    line.punct(']', "']'")?;
    line.punct('=', "'='")?;
    let mut rhs = Vec::new();
    let mut negative = false;
    if line.peek() == Some(&Tok::Punct('-')) {
        negative = true;
        line.at += 1;
    }
    if line.done() {
        return line.fail(&["term"]);
    }
    loop {
        rhs.extend(parse_term(line, negative)?);
        match line.peek() {
            None => break,
            Some(Tok::Punct('+')) => negative = false,
            Some(Tok::Punct('-')) => negative = true,
            Some(_) => return line.fail(&["'+'", "'-'", "end of line"]),
        }
        line.at += 1;
    }
    Ok(BracketStmt { lhs: (a, b), rhs, pos })
}

fn parse_field(line: &mut Line) -> Result<FieldKind, PresentationError> {
    let pos = line.pos();
    let kind = match line.peek().cloned() {
        Some(Tok::Word(w)) if w == "Q" => {
            line.at += 1;
            FieldKind::Rationals
        }
        Some(Tok::Word(w)) if w == "F" => {
            line.at += 1;
            match line.int() {
                Some(p) => prime_kind(&p, pos)?,
                None => return line.fail(&["prime"]),
            }
        }
        Some(Tok::Word(w)) if w.starts_with('F') && w[1..].chars().all(|c| c.is_ascii_digit()) && w.len() > 1 => {
            line.at += 1;
            prime_kind(&w[1..].parse().expect("digits"), pos)?
        }
        _ => return line.fail(&["Q", "F p"]),
    };
    line.end()?;
    Ok(kind)
}

fn prime_kind(p: &BigInt, pos: Pos) -> Result<FieldKind, PresentationError> {
    let bad = || PresentationError::BadField {
        value: format!("F {p}"),
        pos,
    };
    let p: u64 = p.try_into().map_err(|_| bad())?;
    PrimeField::new(p).map_err(|_| bad())?;
    FieldKind::prime(p).map_err(|_| bad())
}

/// Parses `.lsa` text. Never panics on malformed input.
pub fn parse(text: &str) -> Result<PresentationAst, PresentationError> {
    let mut name = None;
    let mut field = None;
    let mut even = Vec::new();
    let mut odd = Vec::new();
    let mut declared: BTreeSet<String> = BTreeSet::new();
    let mut brackets = Vec::new();
    let mut last_line = 0;

    for (k, raw) in text.lines().enumerate() {
        let number = k + 1;
        last_line = number;
        let body = strip_comment(raw);
        if body.trim().is_empty() {
            continue;
        }
        if name.is_none() {
            let trimmed = body.trim_start();
            let indent = body.len() - trimmed.len();
            let Some(rest) = trimmed.strip_prefix("superalgebra") else {
                return Err(PresentationError::Syntax {
                    pos: Pos { line: number, col: indent + 1 },
                    expected: vec!["\"superalgebra\""],
                    found: format!("{:?}", trimmed.split_whitespace().next().unwrap_or("")),
                });
            };
            let title = rest.trim();
            if title.is_empty() || !rest.starts_with(char::is_whitespace) {
                return Err(PresentationError::Syntax {
                    pos: Pos { line: number, col: indent + 13 },
                    expected: vec!["name"],
                    found: String::from("end of line"),
                });
            }
            name = Some(title.to_string());
            continue;
        }
        let mut line = tokenize(number, body)?;
        match line.peek().cloned() {
            Some(Tok::Word(w)) if w == "field" => {
                line.at += 1;
                let pos = line.pos();
                if field.is_some() {
                    return Err(PresentationError::Syntax {
                        pos,
                        expected: vec!["a single field declaration"],
                        found: String::from("second field line"),
                    });
                }
                field = Some(parse_field(&mut line)?);
            }
            Some(Tok::Word(w)) if w == "even" || w == "odd" => {
                line.at += 1;
                while !line.done() {
                    let (label, pos) = line.label()?;
                    if !declared.insert(label.clone()) {
                        return Err(PresentationError::DuplicateLabel { label, pos });
                    }
                    if w == "even" {
                        even.push(label);
                    } else {
                        odd.push(label);
                    }
                }
            }
            Some(Tok::Punct('[')) => brackets.push(parse_bracket(&mut line)?),
            _ => return line.fail(&["\"field\"", "\"even\"", "\"odd\"", "'['"]),
        }
    }

    let Some(name) = name else {
        return Err(PresentationError::Syntax {
            pos: Pos { line: last_line.max(1), col: 1 },
            expected: vec!["\"superalgebra\""],
            found: String::from("end of file"),
        });
    };
    for stmt in &brackets {
        let mut refs = vec![(&stmt.lhs.0, stmt.pos), (&stmt.lhs.1, stmt.pos)];
        refs.extend(stmt.rhs.iter().map(|t| (&t.label, t.pos)));
        for (label, pos) in refs {
            if !declared.contains(label) {
                return Err(PresentationError::UndeclaredLabel {
                    label: label.clone(),
                    pos,
                });
            }
        }
    }
    Ok(PresentationAst {
        name,
        field: field.unwrap_or(FieldKind::Rationals),
        even,
        odd,
        brackets,
    })
}

fn lower_in<F: Field>(ast: &PresentationAst, field: F) -> Result<Superalgebra<F>, PresentationError> {
    let dims = ast.dims();
    let n = dims.total();
    let mut partial = Vec::with_capacity(ast.brackets.len());
    for stmt in &ast.brackets {
        let mut v = vec![field.zero(); n];
        for term in &stmt.rhs {
            let c = field
                .from_ratio(term.coeff.numer(), term.coeff.denom())
                .ok_or_else(|| PresentationError::Table {
                    error: Error::UndefinedScalar(term.coeff.to_string()),
                    pos: Some(term.pos),
                })?;
            let k = ast.index_of(&term.label);
            v[k] = field.add(&v[k], &c);
        }
        let entry = ((ast.index_of(&stmt.lhs.0), ast.index_of(&stmt.lhs.1)), v);
        complete_table(&field, dims, std::slice::from_ref(&entry)).map_err(|error| PresentationError::Table {
            error,
            pos: Some(stmt.pos),
        })?;
        partial.push(entry);
    }
    let table = complete_table(&field, dims, &partial).map_err(|error| PresentationError::Table { error, pos: None })?;
    let labels = ast.even.iter().chain(&ast.odd).cloned().collect();
    let l = Superalgebra::new(field, table, Some(ast.name.clone()))
        .with_labels(labels)
        .map_err(|error| PresentationError::Table { error, pos: None })?;
    let report = l.validate();
    if let Some(v) = report.violations.first() {
        let labels = l.labels();
        return Err(PresentationError::Jacobi(Box::new(JacobiFailure {
            witness: v.triple.map(|i| labels[i].clone()),
            lhs: format_vector(&l, &v.lhs),
            rhs: format_vector(&l, &v.rhs),
            count: report.violations.len(),
        })));
    }
    Ok(l)
}

/// Completes and validates the table over the file's field, or over `field`
/// when given.
pub fn lower(ast: &PresentationAst, field: Option<FieldKind>) -> Result<AnyAlgebra, PresentationError> {
    match field.unwrap_or(ast.field) {
        FieldKind::Rationals => lower_in(ast, Rationals).map(AnyAlgebra::Q),
        FieldKind::Prime(p) => {
            let f = PrimeField::new(p).map_err(|_| PresentationError::BadField {
                value: format!("F {p}"),
                pos: Pos { line: 0, col: 0 },
            })?;
            lower_in(ast, f).map(AnyAlgebra::Fp)
        }
    }
}

pub fn load(text: &str, field: Option<FieldKind>) -> Result<AnyAlgebra, PresentationError> {
    lower(&parse(text)?, field)
}

/// `2e1 - 1/2e3`, or `0`.
pub fn format_vector<F: Field>(l: &Superalgebra<F>, v: &[F::Elem]) -> String {
    let f = l.field();
    let mut out = String::new();
    for (k, x) in v.iter().enumerate() {
        if f.is_zero(x) {
            continue;
        }
        let r = f.to_ratio(x);
        let magnitude = r.abs();
        if out.is_empty() {
            if r.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if r.is_negative() { " - " } else { " + " });
        }
        if !magnitude.is_one() {
            write!(out, "{magnitude}").expect("writing to a String");
        }
        out.push_str(&l.basis()[k].label);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Canonical text: declarations, then the nonzero canonical brackets `[x_i, x_j]`, `i <= j`.
pub fn serialize<F: Field>(l: &Superalgebra<F>) -> String {
    let labels = l.labels();
    let dims = l.dims();
    let mut out = String::new();
    writeln!(out, "superalgebra {}", l.name().unwrap_or("unnamed")).expect("writing to a String");
    match l.field().kind() {
        FieldKind::Rationals => out.push_str("field Q\n"),
        FieldKind::Prime(p) => writeln!(out, "field F {p}").expect("writing to a String"),
    }
    for (keyword, range) in [("even", 0..dims.even), ("odd", dims.even..dims.total())] {
        out.push_str(keyword);
        for label in &labels[range] {
            out.push(' ');
            out.push_str(label);
        }
        out.push('\n');
    }
    for (&(i, j), v) in l.table().entries() {
        writeln!(out, "[{},{}] = {}", labels[i], labels[j], format_vector(l, v)).expect("writing to a String");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const TWENTY_TWO: &str = "\
superalgebra (2|3)_22
field Q
even e1 e2
odd f1 f2 f3
[e1,f2] = f1
[e1,f3] = f2
[f3,f3] = e2
";

    #[test]
    fn parses_the_2_3_22_file() {
        let ast = parse(TWENTY_TWO).unwrap();
        assert_eq!(ast.name, "(2|3)_22");
        assert_eq!(ast.brackets.len(), 3);
        assert_eq!(ast.dims(), SuperDim::new(2, 3));
    }

    #[test]
    fn coefficients_and_signs() {
        let ast = parse("superalgebra x\neven e1 e2\nodd f1 f2\n[f2,f2] = 2e1 - 1/3 e2\n[f1,f1] = -e1").unwrap();
        let rhs = &ast.brackets[0].rhs;
        assert_eq!(rhs[0].coeff, BigRational::from_integer(2.into()));
        assert_eq!(rhs[1].coeff, BigRational::new((-1).into(), 3.into()));
        assert_eq!(ast.brackets[1].rhs[0].coeff, -BigRational::one());
    }

    #[test]
    fn rejects_characteristic_three() {
        assert!(matches!(
            parse("superalgebra x\nfield F 3\n"),
            Err(PresentationError::BadField { .. })
        ));
        assert!(matches!(parse("superalgebra x\nfield F9\n"), Err(PresentationError::BadField { .. })));
        assert_eq!(parse("superalgebra x\nfield F 7\n").unwrap().field, FieldKind::Prime(7));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let err = parse("superalgebra x\neven e1\n[e1 e1] = e1\n").unwrap_err();
        match err {
            PresentationError::Syntax { pos, expected, .. } => {
                assert_eq!(pos, Pos { line: 3, col: 5 });
                assert_eq!(expected, vec!["','"]);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse("superalgebra x\neven e1\n[e1,e2] = e1\n"),
            Err(PresentationError::UndeclaredLabel { .. })
        ));
        assert!(matches!(
            parse("superalgebra x\neven e1\nodd e1\n"),
            Err(PresentationError::DuplicateLabel { .. })
        ));
        assert!(parse("").is_err());
        assert!(parse("even e1").is_err());
    }

    #[test]
    fn comments_and_zero() {
        let ast = parse("# header comment\nsuperalgebra  my algebra  # trailing\neven e1 # one\nodd f1\n[f1,f1] = 0\n").unwrap();
        assert_eq!(ast.name, "my algebra");
        assert!(ast.brackets[0].rhs.is_empty());
    }

    #[test]
    fn serialization_is_a_fixpoint() {
        let l = load(TWENTY_TWO, None).unwrap();
        assert_eq!(l.serialize(), TWENTY_TWO);
        let messy = "superalgebra y\neven a b c\nodd d\n[d,d] = c + c\n[b,a] = 2c - c # mirrored\n";
        let once = load(messy, None).unwrap().serialize();
        assert_eq!(load(&once, None).unwrap().serialize(), once);
        assert!(once.contains("[a,b] = -c\n"));
        assert!(once.contains("[d,d] = 2c\n"));
    }

    #[test]
    fn field_override_reduces_literals() {
        let text = "superalgebra z\neven e1\nodd f1\n[f1,f1] = 7e1\n";
        let l = load(text, Some(FieldKind::Prime(5))).unwrap();
        assert!(l.serialize().contains("[f1,f1] = 2e1"));
        let undefined = "superalgebra z\neven e1\nodd f1\n[f1,f1] = 1/5e1\n";
        assert!(matches!(
            load(undefined, Some(FieldKind::Prime(5))),
            Err(PresentationError::Table { error: Error::UndefinedScalar(_), .. })
        ));
    }

    #[test]
    fn jacobi_witness() {
        let text = "superalgebra broken\neven e1\nodd f1\n[f1,f1] = e1\n[e1,f1] = f1\n";
        match load(text, None).unwrap_err() {
            PresentationError::Jacobi(j) => assert_eq!(j.witness, ["e1", "f1", "f1"].map(String::from)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn empty_bracket_list_is_abelian() {
        let l = load("superalgebra a\neven e1 e2\nodd f1\n", None).unwrap();
        match l {
            AnyAlgebra::Q(l) => assert!(l.is_abelian()),
            AnyAlgebra::Fp(_) => panic!("default field is Q"),
        }
    }
}
