//! A small expression grammar:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := gen ('^' n)? | 'q' ('^' exp)? | integer
//! exp    := integer | '{' integer ('/' '2')? '}'
//! ```
//! with `gen` one of `z1 z2 z12 z21 v1 v2`; `q^{k/2}` is `v^k`.

use qarith::RatFunc;

use crate::{normal_form, GKElement, Gen, GkError, Strategy, DEFAULT_FUEL};

fn bad(s: &str) -> GkError {
    GkError::Parse(s.to_string())
}

fn parse_gen(s: &str) -> Option<Gen> {
    Gen::ALL.into_iter().find(|g| g.name() == s)
}

/// Exponent of `v` for a `q` exponent token.
fn q_exponent(s: &str) -> Result<i32, GkError> {
    let inner = s.strip_prefix('{').and_then(|x| x.strip_suffix('}')).unwrap_or(s);
    if let Some(num) = inner.strip_suffix("/2") {
        num.trim().parse::<i32>().map_err(|_| bad(s))
    } else {
        inner.trim().parse::<i32>().map(|k| 2 * k).map_err(|_| bad(s))
    }
}

fn parse_term(t: &str) -> Result<GKElement, GkError> {
    let mut coeff = RatFunc::one();
    let mut word = Vec::new();
    for f in t.split('*') {
        let f = f.trim();
        if f.is_empty() {
            return Err(bad(t));
        }
        let (base, exp) = match f.split_once('^') {
            Some((b, e)) => (b.trim(), Some(e.trim())),
            None => (f, None),
        };
        if base == "q" {
            coeff = coeff.shift(exp.map(q_exponent).transpose()?.unwrap_or(2));
        } else if let Some(g) = parse_gen(base) {
            let n: usize = exp.map(|e| e.parse().map_err(|_| bad(f))).transpose()?.unwrap_or(1);
            word.extend(std::iter::repeat_n(g, n));
        } else if exp.is_none() {
            let n: i64 = base.parse().map_err(|_| bad(f))?;
            coeff = &coeff * &RatFunc::from_int(n);
        } else {
            return Err(bad(f));
        }
    }
    Ok(normal_form(&word, Strategy::Leftmost, DEFAULT_FUEL)?.scale(&coeff))
}

/// Parse and straighten an expression such as `"z2*z1*v1"` or `"q^{-1/2}*z1^2 + v1"`.
pub fn parse_expr(s: &str) -> Result<GKElement, GkError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(bad(s));
    }
    let mut out = GKElement::zero();
    let mut sign = 1;
    let mut start = 0;
    let bytes = s.as_bytes();
    let mut pieces = Vec::new();
    for (k, &c) in bytes.iter().enumerate() {
        // a sign inside braces belongs to an exponent
        let in_braces = s[..k].matches('{').count() > s[..k].matches('}').count();
        let after_caret = k > 0 && s[..k].trim_end().ends_with('^');
        if (c == b'+' || c == b'-') && !in_braces && !after_caret {
            pieces.push((sign, &s[start..k]));
            sign = if c == b'+' { 1 } else { -1 };
            start = k + 1;
        }
    }
    pieces.push((sign, &s[start..]));
    for (k, (sign, t)) in pieces.into_iter().enumerate() {
        if t.trim().is_empty() && k == 0 {
            // leading sign
            continue;
        }
        out.add_scaled(&parse_term(t)?, &RatFunc::from_int(sign));
    }
    Ok(out)
}
