//! Input parsing: arithmetic expressions over Q(t) (optionally involving the
//! curve variables x and y), long-Weierstrass equation strings, and the JSON
//! encodings of rational functions, models, and marked plane cubics.

use num::bigint::BigInt;
use serde_json::{json, Value};
use thiserror::Error;

use crate::arith::field::{Field, Rat};
use crate::arith::poly::Poly;
use crate::arith::ratfunc::Rf;
use crate::weierstrass::{xy_to_weierstrass, PlaneCubic, WeierstrassModel, XYPoly};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("unexpected character '{0}'")]
    UnexpectedChar(char),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("unexpected token '{0}'")]
    UnexpectedToken(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("exponents must be integer literals")]
    BadExponent,
    #[error("denominator involves the curve variables x, y")]
    NonScalarDenominator,
    #[error("more than one base variable: '{0}' and '{1}'")]
    MixedVariables(String, String),
    #[error("equation does not match the long Weierstrass template")]
    NotWeierstrass,
    #[error("expected a rational function, found curve variables x, y")]
    NotRationalFunction,
    #[error("expected a constant rational number")]
    NotRational,
    #[error("an equation needs exactly one '='")]
    BadEquation,
    #[error("invalid input object: {0}")]
    Json(String),
}

// --- tokenizer ---

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(src: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = vec![];
    let mut it = src.chars().peekable();
    while let Some(&c) = it.peek() {
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                it.next();
            }
            '0'..='9' => {
                let mut s = String::new();
                while let Some(&d) = it.peek() {
                    if d.is_ascii_digit() {
                        s.push(d);
                        it.next();
                    } else {
                        break;
                    }
                }
                out.push(Token::Num(s.parse().unwrap()));
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                let mut s = String::new();
                while let Some(&d) = it.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        s.push(d);
                        it.next();
                    } else {
                        break;
                    }
                }
                out.push(Token::Ident(s));
            }
            '+' => {
                it.next();
                out.push(Token::Plus);
            }
            '-' | '−' => {
                it.next();
                out.push(Token::Minus);
            }
            '*' => {
                it.next();
                out.push(Token::Star);
            }
            '/' => {
                it.next();
                out.push(Token::Slash);
            }
            '^' => {
                it.next();
                out.push(Token::Caret);
            }
            '(' => {
                it.next();
                out.push(Token::LParen);
            }
            ')' => {
                it.next();
                out.push(Token::RParen);
            }
            other => return Err(ParseError::UnexpectedChar(other)),
        }
    }
    Ok(out)
}

// --- expression evaluation ---

/// A bivariate polynomial fraction; denominators stay unreduced until the
/// end of parsing, where they must be free of x and y.
#[derive(Clone)]
struct Frac {
    num: XYPoly<Rat>,
    den: XYPoly<Rat>,
}

impl Frac {
    fn constant(c: Rf<Rat>) -> Self {
        Frac { num: XYPoly::constant(c), den: XYPoly::constant(Rf::one()) }
    }
    fn add(&self, rhs: &Self) -> Self {
        Frac {
            num: self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            den: self.den.mul(&rhs.den),
        }
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn neg(&self) -> Self {
        Frac { num: self.num.neg(), den: self.den.clone() }
    }
    fn mul(&self, rhs: &Self) -> Self {
        Frac { num: self.num.mul(&rhs.num), den: self.den.mul(&rhs.den) }
    }
    fn div(&self, rhs: &Self) -> Result<Self, ParseError> {
        if rhs.num.is_zero() {
            return Err(ParseError::DivisionByZero);
        }
        Ok(Frac { num: self.num.mul(&rhs.den), den: self.den.mul(&rhs.num) })
    }
    fn pow(&self, e: i64) -> Result<Self, ParseError> {
        let p = e.unsigned_abs() as u32;
        let raised = Frac { num: self.num.pow(p), den: self.den.pow(p) };
        if e < 0 {
            if raised.num.is_zero() {
                return Err(ParseError::DivisionByZero);
            }
            Ok(Frac { num: raised.den, den: raised.num })
        } else {
            Ok(raised)
        }
    }
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    /// Name of the base variable seen so far, if any.
    base_var: Option<String>,
    /// When false, x and y are ordinary base-variable names.
    curve_vars: bool,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }
    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Frac, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.next();
                    acc = acc.add(&self.term()?);
                }
                Some(Token::Minus) => {
                    self.next();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Frac, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.next();
                    acc = acc.mul(&self.factor()?);
                }
                Some(Token::Slash) => {
                    self.next();
                    let rhs = self.factor()?;
                    acc = acc.div(&rhs)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Frac, ParseError> {
        match self.peek() {
            Some(Token::Minus) => {
                self.next();
                Ok(self.factor()?.neg())
            }
            Some(Token::Plus) => {
                self.next();
                self.factor()
            }
            _ => {
                let base = self.atom()?;
                if self.peek() == Some(&Token::Caret) {
                    self.next();
                    let neg = if self.peek() == Some(&Token::Minus) {
                        self.next();
                        true
                    } else {
                        false
                    };
                    match self.next() {
                        Some(Token::Num(n)) => {
                            let e: i64 =
                                i64::try_from(&n).map_err(|_| ParseError::BadExponent)?;
                            base.pow(if neg { -e } else { e })
                        }
                        _ => Err(ParseError::BadExponent),
                    }
                } else {
                    Ok(base)
                }
            }
        }
    }

    fn atom(&mut self) -> Result<Frac, ParseError> {
        match self.next() {
            Some(Token::Num(n)) => Ok(Frac::constant(Rf::new(
                Poly::from_coeffs(vec![Rat::from(n)]),
                Poly::one(),
            ))),
            Some(Token::Ident(name)) => {
                if self.curve_vars && name == "x" {
                    return Ok(Frac {
                        num: XYPoly::x(),
                        den: XYPoly::constant(Rf::one()),
                    });
                }
                if self.curve_vars && name == "y" {
                    return Ok(Frac {
                        num: XYPoly::y(),
                        den: XYPoly::constant(Rf::one()),
                    });
                }
                match &self.base_var {
                    Some(v) if *v != name => {
                        return Err(ParseError::MixedVariables(v.clone(), name))
                    }
                    Some(_) => {}
                    None => self.base_var = Some(name),
                }
                Ok(Frac::constant(Rf::var()))
            }
            Some(Token::LParen) => {
                let inner = self.expr()?;
                match self.next() {
                    Some(Token::RParen) => Ok(inner),
                    Some(t) => Err(ParseError::UnexpectedToken(format!("{t:?}"))),
                    None => Err(ParseError::UnexpectedEnd),
                }
            }
            Some(t) => Err(ParseError::UnexpectedToken(format!("{t:?}"))),
            None => Err(ParseError::UnexpectedEnd),
        }
    }
}

fn parse_frac(src: &str, curve_vars: bool) -> Result<(Frac, Option<String>), ParseError> {
    let mut p = Parser {
        tokens: tokenize(src)?,
        pos: 0,
        base_var: None,
        curve_vars,
    };
    let f = p.expr()?;
    if let Some(t) = p.peek() {
        return Err(ParseError::UnexpectedToken(format!("{t:?}")));
    }
    Ok((f, p.base_var))
}

/// Reduces a fraction whose denominator must be free of x and y to a
/// bivariate polynomial.
fn clear_frac(f: Frac) -> Result<XYPoly<Rat>, ParseError> {
    let d = f.den.strip_monomials();
    let scalar = d.coeff(0, 0);
    if d.sub(&XYPoly::constant(scalar.clone())).is_zero() && !scalar.is_zero() {
        Ok(f.num.scale(&scalar.inv()))
    } else {
        Err(ParseError::NonScalarDenominator)
    }
}

/// Parses an expression in one base variable into a rational function.
pub fn parse_rf(src: &str) -> Result<Rf<Rat>, ParseError> {
    let (f, _) = parse_frac(src, false)?;
    let num = f.num.strip_monomials();
    let den = f.den.strip_monomials();
    let only_constant = |p: &XYPoly<Rat>| p.sub(&XYPoly::constant(p.coeff(0, 0))).is_zero();
    if !only_constant(&num) || !only_constant(&den) {
        return Err(ParseError::NotRationalFunction);
    }
    let d = den.coeff(0, 0);
    if d.is_zero() {
        return Err(ParseError::DivisionByZero);
    }
    Ok(num.coeff(0, 0).div(&d))
}

/// Parses a literal rational number such as "5", "-3/4".
pub fn parse_rational(src: &str) -> Result<Rat, ParseError> {
    let rf = parse_rf(src)?;
    rf.as_constant().ok_or(ParseError::NotRational)
}

/// Parses an equation "lhs = rhs" in x, y with rational-function
/// coefficients into a Weierstrass model, e.g.
/// "y^2 + x*y = x^3 - 36/(t - 1728)*x - 1/(t - 1728)".
pub fn parse_equation(src: &str) -> Result<WeierstrassModel<Rat>, ParseError> {
    let mut sides = src.split('=');
    let (lhs, rhs) = match (sides.next(), sides.next(), sides.next()) {
        (Some(l), Some(r), None) => (l, r),
        _ => return Err(ParseError::BadEquation),
    };
    let (lf, lv) = parse_frac(lhs, true)?;
    let (rf, rv) = parse_frac(rhs, true)?;
    let coordinate = match (lv, rv) {
        (Some(a), Some(b)) if a != b => return Err(ParseError::MixedVariables(a, b)),
        (Some(a), _) | (_, Some(a)) => a,
        (None, None) => "t".to_string(),
    };
    let e = clear_frac(lf.sub(&rf))?;
    xy_to_weierstrass(&e, &coordinate).ok_or(ParseError::NotWeierstrass)
}

// --- JSON encodings ---

fn rat_from_str(s: &str) -> Result<Rat, ParseError> {
    s.trim()
        .parse::<Rat>()
        .map_err(|e| ParseError::Json(format!("bad rational '{s}': {e}")))
}

/// Rational function from either an expression string or an object
/// {"num": [c0, c1, ...], "den": [...]} with lowest-degree-first
/// coefficients written as "p/q" strings or integers.
pub fn rf_from_json(v: &Value) -> Result<Rf<Rat>, ParseError> {
    match v {
        Value::String(s) => parse_rf(s),
        Value::Number(n) => {
            Ok(Rf::constant(rat_from_str(&n.to_string())?))
        }
        Value::Object(map) => {
            let read = |key: &str, default_one: bool| -> Result<Poly<Rat>, ParseError> {
                match map.get(key) {
                    None if default_one => Ok(Poly::one()),
                    None => Err(ParseError::Json(format!("missing \"{key}\""))),
                    Some(Value::Array(items)) => {
                        let mut coeffs = vec![];
                        for item in items {
                            coeffs.push(match item {
                                Value::String(s) => rat_from_str(s)?,
                                Value::Number(n) => rat_from_str(&n.to_string())?,
                                other => {
                                    return Err(ParseError::Json(format!(
                                        "bad coefficient {other}"
                                    )))
                                }
                            });
                        }
                        Ok(Poly::from_coeffs(coeffs))
                    }
                    Some(other) => {
                        Err(ParseError::Json(format!("\"{key}\" must be an array, got {other}")))
                    }
                }
            };
            let num = read("num", false)?;
            let den = read("den", true)?;
            if den.is_zero() {
                return Err(ParseError::DivisionByZero);
            }
            Ok(Rf::new(num, den))
        }
        other => Err(ParseError::Json(format!("bad rational function {other}"))),
    }
}

pub fn rf_to_json(f: &Rf<Rat>) -> Value {
    let coeffs = |p: &Poly<Rat>| -> Value {
        Value::Array(p.coeffs().iter().map(|c| json!(c.to_string())).collect())
    };
    json!({ "num": coeffs(f.num()), "den": coeffs(f.den()) })
}

/// Model from {"a1": .., "a2": .., "a3": .., "a4": .., "a6": ..,
/// "coordinate": "t"}; missing coefficients default to zero.
pub fn model_from_json(v: &Value) -> Result<WeierstrassModel<Rat>, ParseError> {
    let obj = v
        .as_object()
        .ok_or_else(|| ParseError::Json("model must be an object".into()))?;
    let coeff = |key: &str| -> Result<Rf<Rat>, ParseError> {
        match obj.get(key) {
            None => Ok(Rf::zero()),
            Some(val) => rf_from_json(val),
        }
    };
    let coordinate = match obj.get("coordinate") {
        None => "t",
        Some(Value::String(s)) => s,
        Some(other) => {
            return Err(ParseError::Json(format!("bad coordinate {other}")))
        }
    };
    Ok(WeierstrassModel::new(
        coeff("a1")?,
        coeff("a2")?,
        coeff("a3")?,
        coeff("a4")?,
        coeff("a6")?,
        coordinate,
    ))
}

pub fn model_to_json(m: &WeierstrassModel<Rat>) -> Value {
    json!({
        "a1": rf_to_json(&m.a1),
        "a2": rf_to_json(&m.a2),
        "a3": rf_to_json(&m.a3),
        "a4": rf_to_json(&m.a4),
        "a6": rf_to_json(&m.a6),
        "coordinate": m.coordinate,
    })
}

/// Marked plane cubic from {"coeffs": [10 entries], "point": [3 entries],
/// "coordinate": "t"}. Coefficient order: x³, x²y, x²z, xy², xyz, xz², y³,
/// y²z, yz², z³.
pub fn cubic_from_json(v: &Value) -> Result<(PlaneCubic<Rat>, String), ParseError> {
    let obj = v
        .as_object()
        .ok_or_else(|| ParseError::Json("cubic must be an object".into()))?;
    let list = |key: &str, len: usize| -> Result<Vec<Rf<Rat>>, ParseError> {
        let items = obj
            .get(key)
            .and_then(Value::as_array)
            .ok_or_else(|| ParseError::Json(format!("missing array \"{key}\"")))?;
        if items.len() != len {
            return Err(ParseError::Json(format!(
                "\"{key}\" must have {len} entries"
            )));
        }
        items.iter().map(rf_from_json).collect()
    };
    let coeffs: [Rf<Rat>; 10] = list("coeffs", 10)?.try_into().unwrap();
    let point: [Rf<Rat>; 3] = list("point", 3)?.try_into().unwrap();
    let coordinate = match obj.get("coordinate") {
        None => "t".to_string(),
        Some(Value::String(s)) => s.clone(),
        Some(other) => {
            return Err(ParseError::Json(format!("bad coordinate {other}")))
        }
    };
    Ok((PlaneCubic::new(coeffs, point), coordinate))
}

/// The long-Weierstrass equation of a model as a display string.
pub fn equation_string(m: &WeierstrassModel<Rat>) -> String {
    let var = &m.coordinate;
    let term = |c: &Rf<Rat>, mon: &str| -> Option<(bool, String)> {
        if c.is_zero() {
            return None;
        }
        let (neg, abs) = c.display_sign_abs();
        if abs == "1" {
            Some((neg, mon.to_string()))
        } else {
            let abs = if c.num().is_constant() && c.den().is_constant() {
                abs
            } else {
                format!("({})", c.to_string_with_var(var))
            };
            Some((neg, format!("{abs}*{mon}")))
        }
    };
    let join = |parts: Vec<Option<(bool, String)>>| -> String {
        let mut out = String::new();
        for (neg, text) in parts.into_iter().flatten() {
            if out.is_empty() {
                if neg {
                    out.push_str("-");
                }
                out.push_str(&text);
            } else {
                out.push_str(if neg { " - " } else { " + " });
                out.push_str(&text);
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    };
    let lhs = join(vec![
        Some((false, "y^2".to_string())),
        term(&m.a1, "x*y"),
        term(&m.a3, "y"),
    ]);
    let a6 = if m.a6.is_zero() {
        None
    } else {
        let (neg, abs) = m.a6.display_sign_abs();
        let abs = if m.a6.num().is_constant() && m.a6.den().is_constant() {
            abs
        } else {
            format!("({})", m.a6.to_string_with_var(var))
        };
        Some((neg, abs))
    };
    let rhs = join(vec![
        Some((false, "x^3".to_string())),
        term(&m.a2, "x^2"),
        term(&m.a4, "x"),
        a6,
    ]);
    format!("{lhs} = {rhs}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::field::{rat, rat_int};

    #[test]
    fn rational_function_expressions() {
        let f = parse_rf("(t^2 - 11*t - 1)/(t + 3)").unwrap();
        assert_eq!(f.num(), &Poly::from_i64s(&[-1, -11, 1]));
        assert_eq!(f.den(), &Poly::from_i64s(&[3, 1]));
        assert_eq!(parse_rational("-3/4").unwrap(), rat(-3, 4));
        assert_eq!(parse_rational("5").unwrap(), rat_int(5));
        // nested division and negative exponents
        let g = parse_rf("1/(s + 1/s)").unwrap();
        assert_eq!(g.num(), &Poly::from_i64s(&[0, 1]));
        assert_eq!(g.den(), &Poly::from_i64s(&[1, 0, 1]));
        let h = parse_rf("2*s^-2").unwrap();
        assert_eq!(h.num(), &Poly::from_i64s(&[2]));
        assert_eq!(h.den(), &Poly::from_i64s(&[0, 0, 1]));
        assert!(parse_rf("s + t").is_err());
        assert!(parse_rf("x^2 + x").is_ok()); // x is a plain name here
        assert!(parse_rf("x*y").is_err()); // two distinct variables
        assert!(parse_rf("1/0").is_err());
    }

    #[test]
    fn weierstrass_equations() {
        let m = parse_equation("y^2 = x^3 + (t^2 + 1)*x^2 + t^2*x").unwrap();
        assert!(m.a1.is_zero() && m.a3.is_zero() && m.a6.is_zero());
        assert_eq!(m.a2, parse_rf("t^2 + 1").unwrap());
        assert_eq!(m.coordinate, "t");

        let m = parse_equation("y^2 + x*y = x^3 - 36/(j - 1728)*x - 1/(j - 1728)")
            .unwrap();
        assert_eq!(m.coordinate, "j");
        assert_eq!(m.a4, parse_rf("-36/(j - 1728)").unwrap());

        // non-Weierstrass monomials are rejected
        assert!(parse_equation("y^2 = x^4 + 1").is_err());
        assert!(parse_equation("y^2 = x^3 + x = 0").is_err());
        // denominator containing x is rejected
        assert!(parse_equation("y^2 = x^3 + 1/x").is_err());
    }

    #[test]
    fn json_round_trips() {
        let m = parse_equation("y^2 + x*y = x^3 + (t^2 - 1)*x + t^3").unwrap();
        let back = model_from_json(&model_to_json(&m)).unwrap();
        assert_eq!(back.a1, m.a1);
        assert_eq!(back.a4, m.a4);
        assert_eq!(back.a6, m.a6);

        let f = parse_rf("(t^2 - 11*t - 1)/(t + 3)").unwrap();
        let back = rf_from_json(&rf_to_json(&f)).unwrap();
        assert_eq!(back, f);

        let v: Value = serde_json::from_str(
            r#"{"num": ["-1", "-11", "1"], "den": ["3", "1"]}"#,
        )
        .unwrap();
        assert_eq!(rf_from_json(&v).unwrap(), f);
    }

    #[test]
    fn cubic_json() {
        let v: Value = serde_json::from_str(
            r#"{
                "coeffs": ["1", "0", "0", "0", "-3*t", "0", "1", "0", "0", "1"],
                "point": ["1", "-1", "0"]
            }"#,
        )
        .unwrap();
        let (cubic, coordinate) = cubic_from_json(&v).unwrap();
        assert_eq!(coordinate, "t");
        let m = crate::weierstrass::cubic_to_weierstrass(&cubic, &coordinate).unwrap();
        let catalog = crate::catalog::direct_model("Gamma(3)").unwrap();
        assert_eq!(
            m.invariants().unwrap().j,
            catalog.invariants().unwrap().j
        );
    }

    #[test]
    fn equation_display_round_trips() {
        for src in [
            "y^2 + 3*t*x*y + (t^3 - 1)*y = x^3",
            "y^2 = x^3 + (2 - 4*t^2)*x^2 + x",
            "y^2 + x*y = x^3 - (36/(t - 1728))*x - (1/(t - 1728))",
        ] {
            let m = parse_equation(src).unwrap();
            let shown = equation_string(&m);
            let again = parse_equation(&shown).unwrap();
            assert_eq!(again.a1, m.a1, "{src} -> {shown}");
            assert_eq!(again.a2, m.a2);
            assert_eq!(again.a3, m.a3);
            assert_eq!(again.a4, m.a4);
            assert_eq!(again.a6, m.a6);
        }
    }
}
