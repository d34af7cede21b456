//! Canonical text form for polynomials.
//!
//! The rendering is the interchange format used in reports, the corpus, and
//! the CLI, so it is pinned precisely:
//!
//! * terms in descending graded-lex order, joined by ` + ` / ` - `;
//! * variables printed `a1 .. an`, powers with `^`, factors joined by `*`;
//! * a coefficient of magnitude 1 is suppressed unless the term is constant;
//! * the zero polynomial prints as `0`.
//!
//! Example: `2*a1^2*a3 - a2`. The parser accepts exactly this grammar (plus
//! redundant whitespace and repeated monomials, which are summed), so
//! printing and re-parsing is the identity on canonical polynomials.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

use super::poly::{coeff_is_one, IntPoly, Monomial};
use super::PolyError;

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (position, (mono, coeff)) in self.terms().rev().enumerate() {
            if position == 0 {
                if coeff.is_negative() {
                    write!(f, "-")?;
                }
            } else if coeff.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write_term(f, mono, coeff)?;
        }
        Ok(())
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, mono: &Monomial, coeff: &BigInt) -> fmt::Result {
    let magnitude = coeff.abs();
    let is_constant = mono.degree() == 0;
    if is_constant {
        return write!(f, "{magnitude}");
    }
    if !coeff_is_one(coeff) {
        write!(f, "{magnitude}*")?;
    }
    let mut first = true;
    for (index, &exp) in mono.exponents().iter().enumerate() {
        if exp == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        write!(f, "a{}", index + 1)?;
        if exp > 1 {
            write!(f, "^{exp}")?;
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Plus,
    Minus,
    Star,
    Caret,
    Integer(BigInt),
    Variable(usize), // zero-based index
}

fn tokenize(text: &str, num_vars: usize) -> Result<Vec<Token>, PolyError> {
    let bad = |msg: String| PolyError::Parse(msg);
    let mut tokens = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                tokens.push(Token::Plus);
                i += 1;
            }
            '-' => {
                tokens.push(Token::Minus);
                i += 1;
            }
            '*' => {
                tokens.push(Token::Star);
                i += 1;
            }
            '^' => {
                tokens.push(Token::Caret);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                let value = digits
                    .parse::<BigInt>()
                    .map_err(|e| bad(format!("bad integer `{digits}`: {e}")))?;
                tokens.push(Token::Integer(value));
            }
            'a' => {
                i += 1;
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                if start == i {
                    return Err(bad("variable `a` must be followed by an index".into()));
                }
                let digits: String = chars[start..i].iter().collect();
                let index: usize = digits
                    .parse()
                    .map_err(|e| bad(format!("bad variable index `{digits}`: {e}")))?;
                if index == 0 || index > num_vars {
                    return Err(bad(format!(
                        "variable a{index} out of range (1..={num_vars})"
                    )));
                }
                tokens.push(Token::Variable(index - 1));
            }
            other => return Err(bad(format!("unexpected character `{other}`"))),
        }
    }
    Ok(tokens)
}

impl IntPoly {
    /// Parses canonical polynomial text in `num_vars` variables.
    ///
    /// Accepts signed sums of terms, where each term is a `*`-separated
    /// product of integers and powers `aK^E`. Repeated monomials are summed,
    /// so any sum of valid terms parses, not only the canonical rendering.
    pub fn parse(text: &str, num_vars: usize) -> Result<IntPoly, PolyError> {
        let tokens = tokenize(text, num_vars)?;
        if tokens.is_empty() {
            return Err(PolyError::Parse("empty polynomial text".into()));
        }
        let bad = |msg: &str| PolyError::Parse(msg.into());
        let mut out = IntPoly::zero(num_vars);
        let mut pos = 0;
        loop {
            // Sign of the upcoming term.
            let mut negative = false;
            while pos < tokens.len() {
                match tokens[pos] {
                    Token::Plus => pos += 1,
                    Token::Minus => {
                        negative = !negative;
                        pos += 1;
                    }
                    _ => break,
                }
            }
            if pos >= tokens.len() {
                return Err(bad("expected a term after sign"));
            }
            // One term: factors joined by `*`.
            let mut coeff = BigInt::from(if negative { -1 } else { 1 });
            let mut exponents = vec![0u32; num_vars];
            loop {
                match tokens.get(pos) {
                    Some(Token::Integer(value)) => {
                        coeff *= value;
                        pos += 1;
                    }
                    Some(Token::Variable(index)) => {
                        let index = *index;
                        pos += 1;
                        let mut power = 1u32;
                        if let Some(Token::Caret) = tokens.get(pos) {
                            pos += 1;
                            match tokens.get(pos) {
                                Some(Token::Integer(value)) => {
                                    power = u32::try_from(value.clone())
                                        .map_err(|_| bad("exponent out of range"))?;
                                    pos += 1;
                                }
                                _ => return Err(bad("expected integer exponent after `^`")),
                            }
                        }
                        exponents[index] = exponents[index]
                            .checked_add(power)
                            .ok_or_else(|| bad("exponent out of range"))?;
                    }
                    _ => return Err(bad("expected an integer or variable factor")),
                }
                match tokens.get(pos) {
                    Some(Token::Star) => pos += 1,
                    _ => break,
                }
            }
            let mut term = IntPoly::zero(num_vars);
            term.insert_term(Monomial::new(exponents), coeff);
            out += &term;
            match tokens.get(pos) {
                None => break,
                Some(Token::Plus | Token::Minus) => continue,
                Some(_) => return Err(bad("expected `+` or `-` between terms")),
            }
        }
        Ok(out)
    }
}
