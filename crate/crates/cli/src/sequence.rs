//! Sequences for the Chern class/character conversions.
//!
//! Elements are numbers, `"p/q"` strings, `[re, im]` pairs, or form
//! polynomials written as objects from monomials to coefficients, e.g.
//! `{"1": 2, "x": "1/2", "x^2*y": [0, 1]}`. Integers and rational strings
//! are exact; the whole sequence is converted exactly when every
//! coefficient is, and in complex floating point otherwise.

use std::path::Path;

use clap::ValueEnum;
use lieclosed::chern::{characters_from_classes, classes_from_characters, FormPolynomial};
use lieclosed::scalar::parse_rational;
use lieclosed::{Complex, ExactRational, Scalar};
use num_traits::{Signed, ToPrimitive, Zero};
use serde_json::{json, Map, Value};

use crate::{doc, CliError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    ClassesToCharacters,
    CharactersToClasses,
}

#[derive(Debug, Clone)]
enum Coeff {
    Exact(ExactRational),
    Float(Complex),
}

impl Coeff {
    fn parse(v: &Value, at: &str) -> Result<Coeff, CliError> {
        match v {
            Value::Number(n) if n.is_i64() || n.is_u64() => {
                Ok(Coeff::Exact(parse_rational(&n.to_string()).expect("integer")))
            }
            Value::String(s) => parse_rational(s)
                .map(Coeff::Exact)
                .ok_or_else(|| CliError::Input(format!("{at}: '{s}' is not a rational number"))),
            _ => doc::parse_complex(v, at).map(Coeff::Float),
        }
    }

    fn to_complex(&self) -> Complex {
        match self {
            Coeff::Exact(q) => Complex::new(q.to_f64().unwrap_or(f64::NAN), 0.0),
            Coeff::Float(z) => *z,
        }
    }
}

#[derive(Debug, Clone)]
enum Item {
    Scalar(Coeff),
    Form(Vec<(Vec<u32>, Coeff)>),
}

struct Parsed {
    items: Vec<Item>,
    names: Vec<String>,
}

fn parse_monomial(key: &str, names: &mut Vec<String>, at: &str) -> Result<Vec<u32>, CliError> {
    let key = key.trim();
    let mut exps = vec![0u32; names.len()];
    if key == "1" {
        return Ok(exps);
    }
    for factor in key.split('*') {
        let (name, power) = match factor.split_once('^') {
            Some((n, p)) => {
                let p: u32 = p.trim().parse().map_err(|_| {
                    CliError::Input(format!("{at}: bad exponent in monomial '{key}'"))
                })?;
                (n.trim(), p)
            }
            None => (factor.trim(), 1),
        };
        let valid = name.chars().next().is_some_and(|c| c.is_alphabetic() || c == '_')
            && name.chars().all(|c| c.is_alphanumeric() || c == '_');
        if !valid {
            return Err(CliError::Input(format!("{at}: bad generator name in monomial '{key}'")));
        }
        let idx = match names.iter().position(|n| n == name) {
            Some(i) => i,
            None => {
                names.push(name.to_string());
                names.len() - 1
            }
        };
        if exps.len() <= idx {
            exps.resize(idx + 1, 0);
        }
        exps[idx] += power;
    }
    Ok(exps)
}

fn parse(v: &Value) -> Result<Parsed, CliError> {
    let arr = v
        .as_array()
        .ok_or_else(|| CliError::Input("sequence document must be a JSON array".into()))?;
    let mut names = Vec::new();
    let mut items = Vec::with_capacity(arr.len());
    for (k, x) in arr.iter().enumerate() {
        let at = format!("sequence[{k}]");
        items.push(match x {
            Value::Object(terms) => {
                let mut out = Vec::with_capacity(terms.len());
                for (mono, c) in terms {
                    let exps = parse_monomial(mono, &mut names, &at)?;
                    out.push((exps, Coeff::parse(c, &format!("{at}[{mono:?}]"))?));
                }
                Item::Form(out)
            }
            _ => Item::Scalar(Coeff::parse(x, &at)?),
        });
    }
    if items.is_empty() {
        return Err(CliError::Input("sequence is empty".into()));
    }
    Ok(Parsed { items, names })
}

trait Emit: Scalar {
    fn lift(c: &Coeff) -> Self;
    fn emit(&self) -> Value;
    fn distance(&self, other: &Self) -> f64;
}

impl Emit for ExactRational {
    fn lift(c: &Coeff) -> Self {
        match c {
            Coeff::Exact(q) => q.clone(),
            Coeff::Float(_) => unreachable!("exact mode only holds exact coefficients"),
        }
    }

    fn emit(&self) -> Value {
        Value::String(self.to_string())
    }

    fn distance(&self, other: &Self) -> f64 {
        if self == other { 0.0 } else { (self - other).abs().to_f64().unwrap_or(f64::INFINITY) }
    }
}

impl Emit for Complex {
    fn lift(c: &Coeff) -> Self {
        c.to_complex()
    }

    fn emit(&self) -> Value {
        doc::complex(*self)
    }

    fn distance(&self, other: &Self) -> f64 {
        (self - other).norm()
    }
}

fn monomial_name(exps: &[u32], names: &[String]) -> String {
    let factors: Vec<String> = exps
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| if e == 1 { names[i].clone() } else { format!("{}^{e}", names[i]) })
        .collect();
    if factors.is_empty() { "1".into() } else { factors.join("*") }
}

fn emit_form<S: Emit>(p: &FormPolynomial<S>, names: &[String]) -> Value {
    let mut out = Map::new();
    for (exps, c) in p.terms() {
        out.insert(monomial_name(exps, names), c.emit());
    }
    Value::Object(out)
}

fn form_distance<S: Emit>(a: &FormPolynomial<S>, b: &FormPolynomial<S>) -> f64 {
    let diff = a.clone() - b.clone();
    let worst = diff.terms().map(|(_, c)| c.distance(&S::zero())).fold(0.0, f64::max);
    worst
}

fn convert<S: Scalar>(seq: &[S], direction: Direction, fiber: usize) -> Result<(Vec<S>, Vec<S>), CliError> {
    Ok(match direction {
        Direction::ClassesToCharacters => {
            if seq[0] != S::one() {
                return Err(CliError::Input("c_0 must be 1".into()));
            }
            let ch = characters_from_classes(seq, fiber)?;
            let back = classes_from_characters(&ch)?;
            (ch, back)
        }
        Direction::CharactersToClasses => {
            let c = classes_from_characters(seq)?;
            let back = characters_from_classes(&c, fiber)?;
            (c, back)
        }
    })
}

fn run_typed<S: Emit>(
    parsed: &Parsed,
    direction: Direction,
    fiber: usize,
) -> Result<(Value, f64), CliError> {
    let forms = parsed.items.iter().any(|i| matches!(i, Item::Form(_)));
    if forms {
        let seq: Vec<FormPolynomial<S>> = parsed
            .items
            .iter()
            .map(|item| match item {
                Item::Scalar(c) => FormPolynomial::constant(S::lift(c)),
                Item::Form(terms) => terms.iter().fold(FormPolynomial::zero(), |acc, (e, c)| {
                    acc + FormPolynomial::monomial(e, S::lift(c))
                }),
            })
            .collect();
        let (out, back) = convert(&seq, direction, fiber)?;
        let residual = seq
            .iter()
            .zip(&back)
            .skip(1)
            .map(|(a, b)| form_distance(a, b))
            .fold(0.0, f64::max);
        let values = out.iter().map(|p| emit_form(p, &parsed.names)).collect();
        Ok((Value::Array(values), residual))
    } else {
        let seq: Vec<S> = parsed
            .items
            .iter()
            .map(|item| match item {
                Item::Scalar(c) => S::lift(c),
                Item::Form(_) => unreachable!(),
            })
            .collect();
        let (out, back) = convert(&seq, direction, fiber)?;
        let residual = seq.iter().zip(&back).skip(1).map(|(a, b)| a.distance(b)).fold(0.0, f64::max);
        Ok((Value::Array(out.iter().map(Emit::emit).collect()), residual))
    }
}

pub struct Conversion {
    pub exact: bool,
    pub output: Value,
    pub roundtrip_residual: f64,
    pub fiber_dim: usize,
    pub generators: Vec<String>,
}

pub fn run(path: &Path, direction: Direction, fiber_dim: Option<usize>) -> Result<Conversion, CliError> {
    let parsed = parse(&doc::read_json(path)?)?;
    let exact = parsed.items.iter().all(|item| match item {
        Item::Scalar(c) => matches!(c, Coeff::Exact(_)),
        Item::Form(terms) => terms.iter().all(|(_, c)| matches!(c, Coeff::Exact(_))),
    });
    let fiber = fiber_dim
        .or_else(|| match (direction, &parsed.items[0]) {
            (Direction::CharactersToClasses, Item::Scalar(Coeff::Exact(q))) if q.is_integer() => {
                q.to_integer().to_usize()
            }
            _ => None,
        })
        .unwrap_or(parsed.items.len() - 1);
    let (output, roundtrip_residual) = if exact {
        run_typed::<ExactRational>(&parsed, direction, fiber)?
    } else {
        run_typed::<Complex>(&parsed, direction, fiber)?
    };
    Ok(Conversion { exact, output, roundtrip_residual, fiber_dim: fiber, generators: parsed.names })
}

pub fn direction_name(d: Direction) -> &'static str {
    match d {
        Direction::ClassesToCharacters => "classes-to-characters",
        Direction::CharactersToClasses => "characters-to-classes",
    }
}

/// Generators are listed in order of first appearance in the input.
pub fn echo(direction: Direction, conv: &Conversion) -> Value {
    json!({
        "direction": direction_name(direction),
        "fiber_dim": conv.fiber_dim,
        "exact": conv.exact,
        "generators": conv.generators,
    })
}
