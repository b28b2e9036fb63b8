//! F-purity of hypersurface singularities via the Frobenius-power test:
//! `k[[x_0..x_n]]/(f)` is F-pure iff `f^{p-1}` has a monomial outside
//! `(x_0^p, ..., x_n^p)`, i.e. one with every exponent at most `p - 1`.
//!
//! Polynomials live over the prime field `Z/p` as sparse term maps keyed by
//! exponent vectors. The input grammar accepts terms like `x0^2*x1 + 3*x2`
//! with variables `x0..x9` and integer coefficients reduced mod `p`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::frobenius::is_prime;

/// Most variables the parser accepts (`x0` through `x9`).
pub const MAX_VARS: usize = 10;

/// A polynomial over `Z/p` in `nvars` variables, stored as a map from
/// exponent vectors to nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FpPolynomial {
    p: u64,
    nvars: usize,
    terms: BTreeMap<Vec<u32>, u64>,
}

impl FpPolynomial {
    pub fn zero(p: u64, nvars: usize) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p >= 1 << 31 {
            return Err(Error::ResourceLimit("p too large for coefficient arithmetic".into()));
        }
        Ok(FpPolynomial {
            p,
            nvars,
            terms: BTreeMap::new(),
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, u64> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant_term(&self) -> u64 {
        *self.terms.get(&vec![0u32; self.nvars]).unwrap_or(&0)
    }

    /// Adds `coeff * x^exps` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, exps: Vec<u32>, coeff: i64) {
        assert_eq!(exps.len(), self.nvars);
        let c = coeff.rem_euclid(self.p as i64) as u64;
        if c == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Occupied(mut o) => {
                let v = (o.get() + c) % self.p;
                if v == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = v;
                }
            }
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
        }
    }

    pub fn one(p: u64, nvars: usize) -> Result<Self> {
        let mut f = Self::zero(p, nvars)?;
        f.add_term(vec![0; nvars], 1);
        Ok(f)
    }

    pub fn mul(&self, other: &FpPolynomial) -> FpPolynomial {
        assert_eq!(self.p, other.p);
        assert_eq!(self.nvars, other.nvars);
        let mut out = FpPolynomial {
            p: self.p,
            nvars: self.nvars,
            terms: BTreeMap::new(),
        };
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                let c = (ca * cb) % self.p;
                let entry = out.terms.entry(exps).or_insert(0);
                *entry = (*entry + c) % self.p;
            }
        }
        out.terms.retain(|_, c| *c != 0);
        out
    }

    /// Renders one monomial in the input grammar, e.g. `x0^2*x1`.
    pub fn monomial_string(exps: &[u32]) -> String {
        let mut parts: Vec<String> = Vec::new();
        for (i, &e) in exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(format!("x{i}")),
                _ => parts.push(format!("x{i}^{e}")),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Display for FpPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exps, coeff) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mono = Self::monomial_string(exps);
            if *coeff == 1 && mono != "1" {
                write!(f, "{mono}")?;
            } else if mono == "1" {
                write!(f, "{coeff}")?;
            } else {
                write!(f, "{coeff}*{mono}")?;
            }
        }
        Ok(())
    }
}

/// Exact expansion of `f^k` with coefficients mod `p`, by binary
/// exponentiation over term-map multiplication.
pub fn power_mod_p(f: &FpPolynomial, k: u64) -> FpPolynomial {
    let mut result = FpPolynomial::one(f.p, f.nvars).expect("p validated at construction");
    let mut base = f.clone();
    let mut k = k;
    while k > 0 {
        if k & 1 == 1 {
            result = result.mul(&base);
        }
        k >>= 1;
        if k > 0 {
            base = base.mul(&base);
        }
    }
    result
}

/// Outcome of the hypersurface F-purity test.
#[derive(Clone, Debug)]
pub struct FedderOutcome {
    pub f_pure: bool,
    /// A monomial of `f^{p-1}` with all exponents `< p`, when one exists.
    pub witness: Option<Vec<u32>>,
}

impl FedderOutcome {
    pub fn witness_string(&self) -> Option<String> {
        self.witness
            .as_ref()
            .map(|e| FpPolynomial::monomial_string(e))
    }
}

/// Decides F-purity of `k[[x_0..x_n]]/(f)`: expands `f^{p-1}` and looks for
/// a term with every exponent at most `p - 1`. The witness is the first such
/// monomial in the canonical term order.
pub fn fedder_f_pure(f: &FpPolynomial) -> Result<FedderOutcome> {
    if f.is_zero() {
        return Err(Error::Validation("the polynomial must be nonzero".into()));
    }
    if f.constant_term() != 0 {
        return Err(Error::ConstantTermPresent);
    }
    let power = power_mod_p(f, f.p - 1);
    let limit = (f.p - 1) as u32;
    for exps in power.terms.keys() {
        if exps.iter().all(|&e| e <= limit) {
            return Ok(FedderOutcome {
                f_pure: true,
                witness: Some(exps.clone()),
            });
        }
    }
    Ok(FedderOutcome {
        f_pure: false,
        witness: None,
    })
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

/// Parses the polynomial grammar: sums/differences of terms, each term a
/// `*`-separated product of integer coefficients and variable powers
/// `xN[^k]`, with `N` a single digit.
pub fn parse_polynomial(src: &str, p: u64) -> Result<FpPolynomial> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let tokens = tokenize(src)?;
    if tokens.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }

    // First pass just to size the variable vector.
    let mut nvars = 0usize;
    for t in &tokens {
        if let Token::Var(i) = t {
            nvars = nvars.max(i + 1);
        }
    }
    if nvars == 0 {
        nvars = 1;
    }

    let mut poly = FpPolynomial::zero(p, nvars)?;
    let mut pos = 0usize;
    let mut sign = 1i64;
    // Leading sign.
    if let Some(Token::Op(c)) = tokens.get(pos) {
        match c {
            '-' => {
                sign = -1;
                pos += 1;
            }
            '+' => {
                pos += 1;
            }
            _ => {}
        }
    }
    loop {
        let (exps, coeff, next) = parse_term(&tokens, pos, nvars, p)?;
        poly.add_term(exps, sign * coeff as i64);
        pos = next;
        match tokens.get(pos) {
            None => break,
            Some(Token::Op('+')) => {
                sign = 1;
                pos += 1;
            }
            Some(Token::Op('-')) => {
                sign = -1;
                pos += 1;
            }
            Some(t) => {
                return Err(Error::Parse(format!("expected + or - before {t:?}")));
            }
        }
    }
    Ok(poly)
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(u64),
    Var(usize),
    Op(char),
}

fn tokenize(src: &str) -> Result<Vec<Token>> {
    let mut tokens = Vec::new();
    let mut chars = src.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                chars.next();
            }
            '+' | '-' | '*' | '^' => {
                tokens.push(Token::Op(c));
                chars.next();
            }
            '0'..='9' => {
                let mut n: u64 = 0;
                while let Some(d) = chars.peek().and_then(|c| c.to_digit(10)) {
                    n = n
                        .checked_mul(10)
                        .and_then(|n| n.checked_add(d as u64))
                        .ok_or_else(|| Error::Parse("integer literal overflows".into()))?;
                    chars.next();
                }
                tokens.push(Token::Int(n));
            }
            'x' => {
                chars.next();
                let Some(d) = chars.peek().and_then(|c| c.to_digit(10)) else {
                    return Err(Error::Parse("variable must be x0..x9".into()));
                };
                chars.next();
                if d as usize >= MAX_VARS {
                    return Err(Error::Parse("variable index out of range".into()));
                }
                tokens.push(Token::Var(d as usize));
            }
            other => {
                return Err(Error::Parse(format!("unexpected character '{other}'")));
            }
        }
    }
    Ok(tokens)
}

/// Parses one `*`-separated term starting at `pos`; returns the exponent
/// vector, coefficient mod `p`, and the position after the term.
fn parse_term(
    tokens: &[Token],
    mut pos: usize,
    nvars: usize,
    p: u64,
) -> Result<(Vec<u32>, u64, usize)> {
    let mut exps = vec![0u32; nvars];
    let mut coeff: u64 = 1;
    loop {
        match tokens.get(pos) {
            Some(Token::Int(n)) => {
                coeff = (coeff * (n % p)) % p;
                pos += 1;
            }
            Some(Token::Var(i)) => {
                let i = *i;
                pos += 1;
                let mut e: u32 = 1;
                if let Some(Token::Op('^')) = tokens.get(pos) {
                    pos += 1;
                    match tokens.get(pos) {
                        Some(Token::Int(n)) => {
                            e = u32::try_from(*n)
                                .map_err(|_| Error::Parse("exponent too large".into()))?;
                            pos += 1;
                        }
                        _ => return Err(Error::Parse("expected an exponent after ^".into())),
                    }
                }
                exps[i] += e;
            }
            _ => return Err(Error::Parse("expected a coefficient or variable".into())),
        }
        match tokens.get(pos) {
            Some(Token::Op('*')) => {
                pos += 1;
            }
            _ => break,
        }
    }
    Ok((exps, coeff, pos))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(src: &str, p: u64) -> FpPolynomial {
        parse_polynomial(src, p).unwrap()
    }

    /// Multiplication the slow way, for cross-checking the power routine.
    fn naive_power(f: &FpPolynomial, k: u64) -> FpPolynomial {
        let mut out = FpPolynomial::one(f.p(), f.nvars()).unwrap();
        for _ in 0..k {
            out = out.mul(f);
        }
        out
    }

    #[test]
    fn parse_and_display() {
        let f = poly("x0^2 + x1*x2", 2);
        assert_eq!(f.nvars(), 3);
        assert_eq!(f.terms().len(), 2);
        assert_eq!(f.to_string(), "x1*x2 + x0^2");

        let f = poly("3*x2 + x0^2*x1", 5);
        assert_eq!(f.terms().get(&vec![0, 0, 1]), Some(&3));
        assert_eq!(f.terms().get(&vec![2, 1, 0]), Some(&1));
    }

    #[test]
    fn parse_reduces_coefficients_mod_p() {
        let f = poly("2*x0 + 3*x0", 5);
        assert_eq!(f.terms().get(&vec![1]), None, "2+3 = 0 mod 5");
        let f = poly("x0 - x0", 3);
        assert!(f.is_zero());
        let f = poly("-x0 + 4", 3);
        assert_eq!(f.terms().get(&vec![1]), Some(&2));
        assert_eq!(f.constant_term(), 1);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_polynomial("", 2), Err(Error::Parse(_))));
        assert!(matches!(parse_polynomial("x", 2), Err(Error::Parse(_))));
        assert!(matches!(parse_polynomial("x0 +", 2), Err(Error::Parse(_))));
        assert!(matches!(parse_polynomial("y0", 2), Err(Error::Parse(_))));
        assert!(matches!(parse_polynomial("x0^", 2), Err(Error::Parse(_))));
        assert!(matches!(parse_polynomial("x0", 4), Err(Error::NotPrime(4))));
    }

    #[test]
    fn power_binomials() {
        let f = poly("x0 + x1", 2);
        assert_eq!(power_mod_p(&f, 1), f);
        let g = power_mod_p(&poly("x0 + x1", 3), 2);
        assert_eq!(g, poly("x0^2 + 2*x0*x1 + x1^2", 3));
    }

    #[test]
    fn power_matches_naive_multiplication() {
        for (src, p, k) in [
            ("x0^2 + x1*x2", 5u64, 4u64),
            ("x0 + x1 + x2", 3, 5),
            ("x0^3 + 2*x1", 7, 6),
            ("x0*x1 + x1*x2 + x0*x2", 2, 3),
        ] {
            let f = poly(src, p);
            assert_eq!(power_mod_p(&f, k), naive_power(&f, k), "{src}^{k} mod {p}");
        }
    }

    #[test]
    fn frobenius_power_has_divisible_exponents() {
        for (src, p) in [("x0^2 + x1*x2", 2u64), ("x0 + 2*x1", 3), ("x0^2 + x1", 5)] {
            let f = poly(src, p);
            let g = power_mod_p(&f, p);
            for exps in g.terms().keys() {
                assert!(
                    exps.iter().all(|&e| e % (p as u32) == 0),
                    "{src}^{p} has a non-divisible exponent"
                );
            }
        }
    }

    #[test]
    fn splitting_test_node() {
        // x^2 + yz: the product of the two transverse variables survives.
        let out = fedder_f_pure(&poly("x0^2 + x1*x2", 2)).unwrap();
        assert!(out.f_pure);
        assert_eq!(out.witness_string().as_deref(), Some("x1*x2"));
    }

    #[test]
    fn splitting_test_smooth() {
        let out = fedder_f_pure(&poly("x0", 3)).unwrap();
        assert!(out.f_pure);
        assert_eq!(out.witness_string().as_deref(), Some("x0^2"));
    }

    #[test]
    fn splitting_test_cusp_fails_in_char_2() {
        let out = fedder_f_pure(&poly("x0^3 + x1^2", 2)).unwrap();
        assert!(!out.f_pure);
        assert!(out.witness.is_none());
    }

    #[test]
    fn splitting_test_rejects_constant_terms() {
        assert!(matches!(
            fedder_f_pure(&poly("x0 + 1", 2)),
            Err(Error::ConstantTermPresent)
        ));
    }
}
