//! On-disk formats. Every number is an exact integer; rationals are
//! `[num, den]` pairs and parsing rejects unknown keys.

use std::str::FromStr;

use cutnet::geom::{Line, Point};
use cutnet::instance::{Instance, PointSet};
use cutnet::scalar::parse_rational;
use cutnet::Rational;
use serde::{Deserialize, Serialize};
use serde_json::{Number, Value};

use crate::CliError;

/// A rational as a `[num, den]` pair of JSON integers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Number>", into = "Vec<Number>")]
pub struct Ratio(pub Rational);

fn integer(n: &Number) -> Result<String, String> {
    let s = n.to_string();
    let body = s.strip_prefix('-').unwrap_or(&s);
    if body.is_empty() || !body.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("expected an integer, found {s}"));
    }
    Ok(s)
}

fn ratio_of(num: &Number, den: &Number) -> Result<Rational, String> {
    let (n, d) = (integer(num)?, integer(den)?);
    if d.starts_with('-') || d.bytes().all(|b| b == b'0') {
        return Err(format!("denominator must be positive, found {d}"));
    }
    parse_rational(&format!("{n}/{d}")).ok_or_else(|| format!("bad rational {n}/{d}"))
}

fn number(text: String) -> Number {
    Number::from_str(&text).expect("integers are valid JSON numbers")
}

pub fn parts(r: &Rational) -> (String, String) {
    (r.numerator().to_string(), r.denominator().to_string())
}

impl TryFrom<Vec<Number>> for Ratio {
    type Error = String;

    fn try_from(v: Vec<Number>) -> Result<Self, String> {
        match v.as_slice() {
            [n, d] => Ok(Ratio(ratio_of(n, d)?)),
            _ => Err(format!("a rational is [num, den], found {} entries", v.len())),
        }
    }
}

impl From<Ratio> for Vec<Number> {
    fn from(r: Ratio) -> Self {
        let (n, d) = parts(&r.0);
        vec![number(n), number(d)]
    }
}

/// `[x, y]` for integer points, `[x_num, x_den, y_num, y_den]` otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Number>", into = "Vec<Number>")]
pub struct PointEntry(pub Point<Rational>);

impl TryFrom<Vec<Number>> for PointEntry {
    type Error = String;

    fn try_from(v: Vec<Number>) -> Result<Self, String> {
        let one = Number::from(1u8);
        match v.as_slice() {
            [x, y] => Ok(PointEntry(Point::new(ratio_of(x, &one)?, ratio_of(y, &one)?))),
            [xn, xd, yn, yd] => Ok(PointEntry(Point::new(ratio_of(xn, xd)?, ratio_of(yn, yd)?))),
            _ => Err(format!("a point has 2 or 4 integers, found {}", v.len())),
        }
    }
}

impl From<PointEntry> for Vec<Number> {
    fn from(p: PointEntry) -> Self {
        let (xn, xd) = parts(&p.0.x);
        let (yn, yd) = parts(&p.0.y);
        if xd == "1" && yd == "1" {
            vec![number(xn), number(yn)]
        } else {
            vec![number(xn), number(xd), number(yn), number(yd)]
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Meta {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SetEntry {
    pub points: Vec<PointEntry>,
    pub fraction: Ratio,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub sets: Vec<SetEntry>,
    #[serde(default)]
    pub meta: Meta,
}

impl InstanceFile {
    pub fn from_instance(inst: &Instance<Rational>, meta: Meta) -> Self {
        InstanceFile {
            sets: inst
                .sets()
                .iter()
                .map(|s| SetEntry {
                    points: s.points.iter().cloned().map(PointEntry).collect(),
                    fraction: Ratio(s.fraction.clone()),
                })
                .collect(),
            meta,
        }
    }

    pub fn to_instance(&self) -> Result<Instance<Rational>, CliError> {
        let sets = self
            .sets
            .iter()
            .map(|s| PointSet { points: s.points.iter().map(|p| p.0.clone()).collect(), fraction: s.fraction.0.clone() })
            .collect();
        Instance::new(sets).map_err(|e| CliError::Input(e.to_string()))
    }
}

/// `a x + b y = c` as three rationals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Ratio>", into = "Vec<Ratio>")]
pub struct LineEntry(pub Line<Rational>);

impl TryFrom<Vec<Ratio>> for LineEntry {
    type Error = String;

    fn try_from(v: Vec<Ratio>) -> Result<Self, String> {
        match v.as_slice() {
            [a, b, c] => Line::new(a.0.clone(), b.0.clone(), c.0.clone()).map(LineEntry).map_err(|e| e.to_string()),
            _ => Err(format!("a line is [a, b, c], found {} entries", v.len())),
        }
    }
}

impl From<LineEntry> for Vec<Ratio> {
    fn from(l: LineEntry) -> Self {
        vec![Ratio(l.0.a().clone()), Ratio(l.0.b().clone()), Ratio(l.0.c().clone())]
    }
}

/// A guard as `[x, y]` rationals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Ratio>", into = "Vec<Ratio>")]
pub struct GuardEntry(pub Point<Rational>);

impl TryFrom<Vec<Ratio>> for GuardEntry {
    type Error = String;

    fn try_from(v: Vec<Ratio>) -> Result<Self, String> {
        match v.as_slice() {
            [x, y] => Ok(GuardEntry(Point::new(x.0.clone(), y.0.clone()))),
            _ => Err(format!("a guard is [x, y], found {} entries", v.len())),
        }
    }
}

impl From<GuardEntry> for Vec<Ratio> {
    fn from(g: GuardEntry) -> Self {
        vec![Ratio(g.0.x), Ratio(g.0.y)]
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResultFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lines: Option<Vec<LineEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub guards: Option<Vec<GuardEntry>>,
    pub stats: Value,
    pub shear: Ratio,
    pub valid: bool,
}

/// Input of `cut`: lines with optional positive weights (default 1).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinesFile {
    pub lines: Vec<LineEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<Ratio>>,
}

pub fn parse<T: for<'de> Deserialize<'de>>(text: &str, what: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Input(format!("{what}: {e}")))
}

/// Pretty JSON with a trailing newline.
pub fn render<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}
