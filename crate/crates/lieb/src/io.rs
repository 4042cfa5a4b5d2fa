//! Text and JSON representations of scalars, multivectors, forms and subspaces.
//!
//! Multivector expressions use `+ - * / ^ ∧` and parentheses, for example
//! `3/2*e12 - e13 + e123` or `Jp^Km - 2*(R3 ∧ Sp)`. An identifier is resolved
//! first against the parameter symbols and then as a concatenation of basis
//! names. When every basis name is a common prefix followed by one
//! character, the prefix may be written once: `e123` is `e1 ∧ e2 ∧ e3`.
//! Between two scalars `^` is exponentiation by an integer; otherwise it is
//! the wedge product.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Map, Value};

use crate::combinatorics::ExteriorBasis;
use crate::error::{Error, Result};
use crate::exterior::{wedge, MultiVector};
use crate::forms::MultiLinearForm;
use crate::linalg::{Ambient, Matrix, Subspace};
use crate::scalar::{format_scalar, is_integer, one, parse_scalar, Scalar};

/// Values bound to parameter names such as `lambda`.
pub type Symbols = BTreeMap<String, Scalar>;

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Number(BigInt),
    Ident(String),
    Op(char),
    Open,
    Close,
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            if i < chars.len() && (chars[i].is_alphabetic() || chars[i] == '_') {
                return Err(Error::Parse(format!("missing operator after `{digits}`")));
            }
            if i < chars.len() && chars[i] == '.' {
                return Err(Error::Parse("decimal literals are not accepted; write fractions as p/q".into()));
            }
            out.push(Token::Number(digits.parse().expect("ascii digits")));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token::Ident(chars[start..i].iter().collect()));
        } else {
            let tok = match c {
                '+' | '-' | '*' | '/' | '^' => Token::Op(c),
                '∧' => Token::Op('^'),
                '(' => Token::Open,
                ')' => Token::Close,
                _ => return Err(Error::Parse(format!("unexpected character `{c}`"))),
            };
            out.push(tok);
            i += 1;
        }
    }
    Ok(out)
}

#[derive(Clone, Debug)]
enum Val {
    Scalar(Scalar),
    Multi(MultiVector),
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    names: &'a [String],
    symbols: &'a Symbols,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn to_multi(&self, v: Val) -> MultiVector {
        match v {
            Val::Scalar(c) => MultiVector::scalar(self.names.len(), c),
            Val::Multi(w) => w,
        }
    }

    fn expr(&mut self) -> Result<Val> {
        let mut acc = self.term()?;
        while let Some(Token::Op(op @ ('+' | '-'))) = self.peek().cloned() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = match (acc, rhs) {
                (Val::Scalar(a), Val::Scalar(b)) => Val::Scalar(if op == '+' { a + b } else { a - b }),
                (a, b) => {
                    let (a, b) = (self.to_multi(a), self.to_multi(b));
                    Val::Multi(if op == '+' { &a + &b } else { &a - &b })
                }
            };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Val> {
        let mut acc = self.unary()?;
        while let Some(Token::Op(op @ ('*' | '/'))) = self.peek().cloned() {
            self.pos += 1;
            let rhs = self.unary()?;
            acc = match (op, acc, rhs) {
                ('/', _, Val::Multi(_)) => return Err(Error::Parse("cannot divide by a multivector".into())),
                ('/', _, Val::Scalar(b)) if b.is_zero() => return Err(Error::Parse("division by zero".into())),
                ('/', Val::Scalar(a), Val::Scalar(b)) => Val::Scalar(a / b),
                ('/', Val::Multi(a), Val::Scalar(b)) => Val::Multi(a.scaled(&(one() / b))),
                (_, a, b) => product(a, b)?,
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Val> {
        match self.peek() {
            Some(Token::Op('-')) => {
                self.pos += 1;
                Ok(negate(self.unary()?))
            }
            Some(Token::Op('+')) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.wedge(),
        }
    }

    /// `^` binds tighter than `*` and unary minus: `-2*z^2` is `-2*(z^2)`.
    fn wedge(&mut self) -> Result<Val> {
        let mut acc = self.atom()?;
        while let Some(Token::Op('^')) = self.peek() {
            self.pos += 1;
            let rhs = match self.peek() {
                Some(Token::Op('-')) => {
                    self.pos += 1;
                    negate(self.atom()?)
                }
                _ => self.atom()?,
            };
            acc = match (acc, rhs) {
                (Val::Scalar(a), Val::Scalar(b)) => Val::Scalar(power(a, &b)?),
                (a, b) => product(a, b)?,
            };
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Val> {
        match self.next() {
            Some(Token::Number(n)) => Ok(Val::Scalar(Scalar::from_integer(n))),
            Some(Token::Ident(name)) => self.ident(&name),
            Some(Token::Open) => {
                let v = self.expr()?;
                match self.next() {
                    Some(Token::Close) => Ok(v),
                    _ => Err(Error::Parse("missing `)`".into())),
                }
            }
            Some(t) => Err(Error::Parse(format!("unexpected token {t:?}"))),
            None => Err(Error::Parse("unexpected end of expression".into())),
        }
    }

    fn ident(&self, name: &str) -> Result<Val> {
        if let Some(v) = self.symbols.get(name) {
            return Ok(Val::Scalar(v.clone()));
        }
        let indices = segment_blade(name, self.names).ok_or_else(|| {
            Error::UnknownName(format!("`{name}` is neither a parameter nor a product of basis names"))
        })?;
        Ok(Val::Multi(MultiVector::blade(self.names.len(), &indices)?))
    }
}

fn negate(v: Val) -> Val {
    match v {
        Val::Scalar(c) => Val::Scalar(-c),
        Val::Multi(w) => Val::Multi(-&w),
    }
}

fn product(a: Val, b: Val) -> Result<Val> {
    Ok(match (a, b) {
        (Val::Scalar(a), Val::Scalar(b)) => Val::Scalar(a * b),
        (Val::Scalar(a), Val::Multi(b)) => Val::Multi(b.scaled(&a)),
        (Val::Multi(a), Val::Scalar(b)) => Val::Multi(a.scaled(&b)),
        (Val::Multi(a), Val::Multi(b)) => Val::Multi(wedge(&a, &b)?),
    })
}

fn power(base: Scalar, exp: &Scalar) -> Result<Scalar> {
    if !is_integer(exp) {
        return Err(Error::Parse("exponents must be integers".into()));
    }
    let e = exp.to_integer().to_i32().ok_or_else(|| Error::Parse("exponent too large".into()))?;
    if e < 0 && base.is_zero() {
        return Err(Error::Parse("division by zero".into()));
    }
    let mut acc = one();
    for _ in 0..e.unsigned_abs() {
        acc *= &base;
    }
    Ok(if e < 0 { one() / acc } else { acc })
}

fn segment(rest: &str, names: &[&str], out: &mut Vec<usize>) -> bool {
    if rest.is_empty() {
        return true;
    }
    let mut order: Vec<usize> = (0..names.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(names[i].len()));
    for i in order {
        if !names[i].is_empty() && rest.starts_with(names[i]) {
            out.push(i);
            if segment(&rest[names[i].len()..], names, out) {
                return true;
            }
            out.pop();
        }
    }
    false
}

/// Common prefix shared by all basis names when each is that prefix plus one character.
fn compressed_prefix(names: &[String]) -> Option<&str> {
    let first = names.first()?;
    let last = first.chars().last()?;
    let prefix = &first[..first.len() - last.len_utf8()];
    if prefix.is_empty() {
        return None;
    }
    let ok = names.iter().all(|n| n.starts_with(prefix) && n[prefix.len()..].chars().count() == 1);
    ok.then_some(prefix)
}

/// Splits an identifier into basis indices, as full names or in the compressed form.
pub fn segment_blade(ident: &str, names: &[String]) -> Option<Vec<usize>> {
    let full: Vec<&str> = names.iter().map(String::as_str).collect();
    let mut out = Vec::new();
    if segment(ident, &full, &mut out) {
        return Some(out);
    }
    let prefix = compressed_prefix(names)?;
    let rest = ident.strip_prefix(prefix)?;
    let short: Vec<&str> = names.iter().map(|n| &n[prefix.len()..]).collect();
    out.clear();
    segment(rest, &short, &mut out).then_some(out)
}

fn parse_value(text: &str, names: &[String], symbols: &Symbols) -> Result<Val> {
    let mut p = Parser { tokens: tokenize(text)?, pos: 0, names, symbols };
    if p.tokens.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let v = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(Error::Parse(format!("unexpected trailing input in `{text}`")));
    }
    Ok(v)
}

/// Parses a multivector expression over the given basis names.
pub fn parse_multivector(names: &[String], text: &str, symbols: &Symbols) -> Result<MultiVector> {
    Ok(match parse_value(text, names, symbols)? {
        Val::Scalar(c) => MultiVector::scalar(names.len(), c),
        Val::Multi(w) => w,
    })
}

/// Evaluates a rational expression such as `"-3/2"`, `"2*lambda - 1"` or `"1/(1+mu)"`.
pub fn eval_scalar_expr(text: &str, symbols: &Symbols) -> Result<Scalar> {
    match parse_value(text, &[], symbols)? {
        Val::Scalar(c) => Ok(c),
        Val::Multi(_) => Err(Error::Parse(format!("`{text}` is not a scalar"))),
    }
}

/// Name of a basis blade, compressed (`e12`) when possible and joined with `^` otherwise.
pub fn blade_label(names: &[String], tuple: &[usize]) -> String {
    if tuple.is_empty() {
        return "1".into();
    }
    if let Some(prefix) = compressed_prefix(names) {
        let mut s = prefix.to_string();
        for &i in tuple {
            s.push_str(&names[i][prefix.len()..]);
        }
        return s;
    }
    tuple.iter().map(|&i| names[i].as_str()).collect::<Vec<_>>().join("^")
}

/// Labels of the canonical basis of grade `m`.
pub fn grade_labels(names: &[String], m: usize) -> Vec<String> {
    ExteriorBasis::new(names.len(), m).tuples().iter().map(|t| blade_label(names, t)).collect()
}

/// Human-readable multivector, for example `3/2*e12 - e13 + e123`, with terms ordered by grade.
pub fn format_multivector(w: &MultiVector, names: &[String]) -> String {
    if w.is_zero() {
        return "0".into();
    }
    let mut terms: Vec<_> = w.terms().iter().collect();
    terms.sort_by(|a, b| (a.0.len(), a.0).cmp(&(b.0.len(), b.0)));
    let mut out = String::new();
    for (k, (tuple, c)) in terms.into_iter().enumerate() {
        let negative = c.is_negative();
        let abs = c.abs();
        if k == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if tuple.is_empty() {
            out.push_str(&format_scalar(&abs));
        } else {
            if !abs.is_one() {
                out.push_str(&format_scalar(&abs));
                out.push('*');
            }
            out.push_str(&blade_label(names, tuple));
        }
    }
    out
}

/// Term map of a multivector with 1-based comma-separated keys: `{"1,2": "3/2"}`.
pub fn terms_json(w: &MultiVector) -> Value {
    let mut map = Map::new();
    for (tuple, c) in w.terms() {
        let key = tuple.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(",");
        map.insert(key, Value::String(format_scalar(c)));
    }
    Value::Object(map)
}

/// JSON object `{"terms": {...}}`.
pub fn multivector_json(w: &MultiVector) -> Value {
    json!({ "terms": terms_json(w) })
}

/// Reads `{"terms": {"1,2": "3/2"}}` or the bare term map.
pub fn multivector_from_json(dim: usize, value: &Value) -> Result<MultiVector> {
    let map = value.get("terms").unwrap_or(value);
    let map = map.as_object().ok_or_else(|| Error::Parse("multivector JSON must be an object".into()))?;
    let mut terms = Vec::with_capacity(map.len());
    for (key, c) in map {
        let mut tuple = Vec::new();
        for part in key.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let i: usize = part.parse().map_err(|_| Error::Parse(format!("bad index `{part}`")))?;
            if i == 0 || i > dim {
                return Err(Error::DimensionMismatch(format!("index {i} out of range for dimension {dim}")));
            }
            tuple.push(i - 1);
        }
        let c = match c {
            Value::String(s) => parse_scalar(s)?,
            Value::Number(n) => parse_scalar(&n.to_string())?,
            _ => return Err(Error::Parse("coefficients must be strings or integers".into())),
        };
        terms.push((tuple, c));
    }
    MultiVector::from_terms(dim, terms)
}

/// Rows of rational strings.
pub fn rows_json(rows: &[Vec<Scalar>]) -> Value {
    Value::Array(
        rows.iter().map(|r| Value::Array(r.iter().map(|c| Value::String(format_scalar(c))).collect())).collect(),
    )
}

/// Matrix as nested arrays of rational strings.
pub fn matrix_json(m: &Matrix) -> Value {
    rows_json(&m.to_rows())
}

/// Reads a matrix from nested arrays of rational strings or integers.
pub fn matrix_from_json(value: &Value) -> Result<Matrix> {
    let rows = value.as_array().ok_or_else(|| Error::Parse("matrix JSON must be an array of rows".into()))?;
    let mut out = Vec::with_capacity(rows.len());
    for row in rows {
        let row = row.as_array().ok_or_else(|| Error::Parse("matrix rows must be arrays".into()))?;
        let parsed: Result<Vec<Scalar>> = row
            .iter()
            .map(|c| match c {
                Value::String(s) => parse_scalar(s),
                Value::Number(n) => parse_scalar(&n.to_string()),
                _ => Err(Error::Parse("matrix entries must be strings or integers".into())),
            })
            .collect();
        out.push(parsed?);
    }
    if let Some(first) = out.first() {
        if out.iter().any(|r| r.len() != first.len()) {
            return Err(Error::DimensionMismatch("matrix rows have different lengths".into()));
        }
    }
    Ok(Matrix::from_rows(out))
}

fn ambient_json(a: Ambient) -> Value {
    serde_json::to_value(a).expect("ambient serializes")
}

/// Subspace with basis labels and echelon rows; vectors are also rendered as expressions when they live in `Λ^m g`.
pub fn subspace_json(space: &Subspace, names: &[String]) -> Value {
    let labels: Option<(usize, Vec<String>)> = match space.ambient() {
        Ambient::Algebra => Some((1, grade_labels(names, 1))),
        Ambient::Exterior { grade } => Some((grade, grade_labels(names, grade))),
        _ => None,
    };
    let mut obj = Map::new();
    obj.insert("ambient".into(), ambient_json(space.ambient()));
    obj.insert("dim".into(), json!(space.dim()));
    obj.insert("basis".into(), rows_json(space.basis()));
    if let Some((grade, labels)) = labels {
        if labels.len() == space.ambient_dim() {
            let exprs: Vec<Value> = space
                .basis()
                .iter()
                .map(|v| {
                    let w = MultiVector::from_coords(names.len(), grade, v).expect("coordinates match the grade");
                    Value::String(format_multivector(&w, names))
                })
                .collect();
            obj.insert("labels".into(), json!(labels));
            obj.insert("elements".into(), Value::Array(exprs));
        }
    }
    Value::Object(obj)
}

fn nested(data: &[Scalar], size: usize, arity: usize) -> Value {
    if arity == 0 {
        return Value::String(format_scalar(&data[0]));
    }
    let stride = data.len() / size.max(1);
    Value::Array((0..size).map(|i| nested(&data[i * stride..(i + 1) * stride], size, arity - 1)).collect())
}

/// Form tensor as nested arrays of rational strings with basis labels.
pub fn form_json(form: &MultiLinearForm, labels: &[String]) -> Value {
    json!({
        "arity": form.arity(),
        "grade": form.grade(),
        "symmetry": form.symmetry().to_string(),
        "labels": labels,
        "tensor": nested(form.data(), form.size(), form.arity()),
    })
}

/// Canonical pretty JSON text.
pub fn to_pretty(value: &Value) -> String {
    serde_json::to_string_pretty(value).expect("JSON values serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    fn e(n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("e{i}")).collect()
    }

    #[test]
    fn power_binds_tighter_than_product_and_sign() {
        let mut s = Symbols::new();
        s.insert("z".into(), int(-2));
        assert_eq!(eval_scalar_expr("-2*z^2", &s).unwrap(), int(-8));
        assert_eq!(eval_scalar_expr("-z^2", &s).unwrap(), int(-4));
        assert_eq!(eval_scalar_expr("2^-1", &s).unwrap(), frac(1, 2));
        let w = parse_multivector(&e(3), "3*e1^e2 - e1^(e2 + e3)", &s).unwrap();
        assert_eq!(format_multivector(&w, &e(3)), "2*e12 - e13");
    }

    #[test]
    fn parses_compressed_blades() {
        let w = parse_multivector(&e(3), "3/2*e12 - e13 + e123", &Symbols::new()).unwrap();
        assert_eq!(w.coefficient(&[0, 1]), frac(3, 2));
        assert_eq!(w.coefficient(&[0, 2]), int(-1));
        assert_eq!(w.coefficient(&[0, 1, 2]), int(1));
        assert_eq!(format_multivector(&w, &e(3)), "3/2*e12 - e13 + e123");
    }

    #[test]
    fn parses_named_bases() {
        let names: Vec<String> = ["em", "e0", "ep", "fm", "f0", "fp"].iter().map(|s| s.to_string()).collect();
        let w = parse_multivector(&names, "f0^e0 + 2*emep", &Symbols::new()).unwrap();
        assert_eq!(w.coefficient(&[1, 4]), int(-1));
        assert_eq!(w.coefficient(&[0, 2]), int(2));
        assert_eq!(format_multivector(&w, &names), "2*em^ep - e0^f0");
    }

    #[test]
    fn wedge_order_sign() {
        let w = parse_multivector(&e(3), "e2 ∧ e1", &Symbols::new()).unwrap();
        assert_eq!(w.coefficient(&[0, 1]), int(-1));
    }

    #[test]
    fn scalar_expressions() {
        let mut s = Symbols::new();
        s.insert("lambda".into(), frac(1, 2));
        assert_eq!(eval_scalar_expr("2*lambda - 1", &s).unwrap(), int(0));
        assert_eq!(eval_scalar_expr("-3/2", &s).unwrap(), frac(-3, 2));
        assert_eq!(eval_scalar_expr("2^3", &s).unwrap(), int(8));
        assert!(eval_scalar_expr("1/0", &s).is_err());
        assert!(eval_scalar_expr("0.5", &s).is_err());
        assert!(eval_scalar_expr("e1", &s).is_err());
    }

    #[test]
    fn json_round_trip() {
        let w = parse_multivector(&e(3), "3/2*e12 - e123", &Symbols::new()).unwrap();
        let v = multivector_json(&w);
        assert_eq!(v, json!({"terms": {"1,2": "3/2", "1,2,3": "-1"}}));
        assert_eq!(multivector_from_json(3, &v).unwrap(), w);
    }
}
