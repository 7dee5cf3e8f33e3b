//! Text syntax for polynomials: a sum of terms `c * x0^a0 x1^a1 ...` where
//! `c` is an optional integer or rational `p/q` and factors are separated by
//! `*` or whitespace.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::{parse_rational, Field};
use crate::poly::{HomogeneousPoly, Monomial};

/// One parsed term: coefficient, exponent vector and its source text.
#[derive(Debug, Clone, PartialEq)]
pub struct RawTerm {
    pub coeff: BigRational,
    pub exponents: Vec<u32>,
    pub text: String,
}

impl RawTerm {
    pub fn degree(&self) -> usize {
        self.exponents.iter().map(|&e| e as usize).sum()
    }
}

fn split_terms(text: &str) -> Vec<(bool, String)> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut negative = false;
    for ch in text.chars() {
        if ch == '+' || ch == '-' {
            if cur.trim().is_empty() {
                negative ^= ch == '-';
            } else {
                out.push((negative, cur.trim().to_string()));
                negative = ch == '-';
            }
            cur.clear();
        } else {
            cur.push(ch);
        }
    }
    if !cur.trim().is_empty() {
        out.push((negative, cur.trim().to_string()));
    }
    out
}

/// Parses a (possibly inhomogeneous) polynomial into raw terms in `n_vars`
/// variables `x0 .. x{n_vars-1}`.
pub fn parse_terms(n_vars: usize, text: &str) -> Result<Vec<RawTerm>> {
    let mut terms = Vec::new();
    for (negative, body) in split_terms(text) {
        let mut coeff = BigRational::one();
        let mut exponents = vec![0u32; n_vars];
        for token in body.split(|c: char| c == '*' || c.is_whitespace()) {
            if token.is_empty() {
                continue;
            }
            if let Some(rest) = token.strip_prefix('x') {
                let (idx, exp) = match rest.split_once('^') {
                    Some((i, e)) => (i, e),
                    None => (rest, "1"),
                };
                let i: usize = idx.parse().map_err(|_| {
                    Error::Config(format!("bad variable `{token}` in term `{body}`"))
                })?;
                let e: u32 = exp.parse().map_err(|_| {
                    Error::Config(format!("bad exponent in `{token}` of term `{body}`"))
                })?;
                if i >= n_vars {
                    return Err(Error::Config(format!(
                        "variable x{i} in term `{body}` outside x0..x{}",
                        n_vars - 1
                    )));
                }
                exponents[i] += e;
            } else {
                let c = parse_rational(token).ok_or_else(|| {
                    Error::Config(format!("bad coefficient `{token}` in term `{body}`"))
                })?;
                coeff *= c;
            }
        }
        if negative {
            coeff = -coeff;
        }
        terms.push(RawTerm {
            coeff,
            exponents,
            text: body,
        });
    }
    if terms.is_empty() && !text.trim().is_empty() {
        return Err(Error::Config(format!(
            "could not parse polynomial `{text}`"
        )));
    }
    Ok(terms)
}

fn build<F: Field>(
    field: &F,
    n_vars: usize,
    degree: usize,
    terms: Vec<RawTerm>,
) -> Result<HomogeneousPoly<F>> {
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        if t.degree() != degree {
            return Err(Error::Degree(format!(
                "term `{}` has degree {} but the form is declared of degree {degree}",
                t.text,
                t.degree()
            )));
        }
        if t.coeff.is_zero() {
            continue;
        }
        let c = field.from_ratio(t.coeff.numer(), t.coeff.denom())?;
        out.push((Monomial::new(t.exponents), c));
    }
    HomogeneousPoly::from_terms(field, n_vars, degree, out)
}

/// Parses a homogeneous form whose degree is read off its first term.
pub fn parse_poly<F: Field>(field: &F, n_vars: usize, text: &str) -> Result<HomogeneousPoly<F>> {
    let terms = parse_terms(n_vars, text)?;
    let degree = terms.first().map_or(0, |t| t.degree());
    build(field, n_vars, degree, terms)
}

/// Parses a form and checks it is homogeneous of the declared degree.
pub fn parse_poly_with_degree<F: Field>(
    field: &F,
    n_vars: usize,
    text: &str,
    degree: usize,
) -> Result<HomogeneousPoly<F>> {
    build(field, n_vars, degree, parse_terms(n_vars, text)?)
}

/// Parses a constant-coefficient differential operator, written as a
/// polynomial in `x_i` standing for `d/dx_i`.
pub fn parse_operator<F: Field>(
    field: &F,
    n_vars: usize,
    text: &str,
) -> Result<crate::singularities::DiffOp<F>> {
    let terms = parse_terms(n_vars, text)?
        .into_iter()
        .filter(|t| !t.coeff.is_zero())
        .map(|t| {
            Ok((
                Monomial::new(t.exponents),
                field.from_ratio(t.coeff.numer(), t.coeff.denom())?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(crate::singularities::DiffOp { terms })
}

/// Parses a scalar literal into the field.
pub fn parse_scalar<F: Field>(field: &F, text: &str) -> Result<F::Elem> {
    let q = parse_rational(text).ok_or_else(|| Error::Config(format!("bad scalar `{text}`")))?;
    field.from_ratio(q.numer(), q.denom())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn parses_basic_forms() {
        let q = Rationals;
        let p = parse_poly(&q, 3, "x0^4 + x1^4 + x2^4").unwrap();
        assert_eq!(p.degree(), 4);
        assert_eq!(p.terms().len(), 3);
        let p = parse_poly(&q, 3, "3 * x0^2 x1 - 1/2*x2^3").unwrap();
        assert_eq!(p.to_string(), "-1/2*x2^3 + 3*x0^2*x1");
        let p = parse_poly(&q, 3, "-x0*x1 + x0 x1").unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn display_output_parses_back() {
        let q = Rationals;
        let p = parse_poly(&q, 4, "2*x0^3 - 7/3 x1 x2 x3 + x3^3").unwrap();
        assert_eq!(parse_poly(&q, 4, &p.to_string()).unwrap(), p);
    }

    #[test]
    fn degree_errors_name_the_term() {
        let q = Rationals;
        let err = parse_poly_with_degree(&q, 3, "x0^4 + x0^2 x1", 4).unwrap_err();
        match err {
            Error::Degree(msg) => assert!(msg.contains("x0^2 x1"), "{msg}"),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_poly(&q, 3, "x0^2 + x1"),
            Err(Error::Degree(_))
        ));
    }

    #[test]
    fn syntax_errors() {
        let q = Rationals;
        assert!(matches!(parse_poly(&q, 3, "x3^2"), Err(Error::Config(_))));
        assert!(matches!(parse_poly(&q, 3, "y^2"), Err(Error::Config(_))));
        assert!(matches!(parse_poly(&q, 3, "x0^a"), Err(Error::Config(_))));
    }

    #[test]
    fn rational_coefficients_in_prime_field() {
        let f = PrimeField::new(7).unwrap();
        let p = parse_poly(&f, 3, "1/2 x0").unwrap();
        assert_eq!(p.coefficient(&Monomial::var(3, 0)), 4);
        assert!(matches!(
            parse_poly(&f, 3, "1/7 x0"),
            Err(Error::CharacteristicConflict(_))
        ));
    }

    #[test]
    fn operators_allow_mixed_orders() {
        let q = Rationals;
        let op = parse_operator(&q, 3, "1 + 2*x0 - x0 x1").unwrap();
        assert_eq!(op.terms.len(), 3);
    }
}
