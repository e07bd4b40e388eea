use num_bigint::BigInt;
use num_rational::BigRational;

use crate::RootSysError;

/// Exact rational scalar used for every weight coordinate.
pub type Q = BigRational;

/// Integer as a rational.
pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// `n / d` as a reduced rational. Panics when `d == 0`.
pub fn qr(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `p`, `-p` or `p/q` (surrounding whitespace allowed).
pub fn parse_rational(s: &str) -> Result<Q, RootSysError> {
    let t = s.trim();
    let bad = || RootSysError::BadRational(t.to_string());
    match t.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d == BigInt::from(0) {
                return Err(bad());
            }
            Ok(Q::new(n, d))
        }
        None => t.parse::<BigInt>().map(Q::from_integer).map_err(|_| bad()),
    }
}

/// Parses a comma separated list of rationals. Surrounding parentheses or
/// brackets are ignored.
pub fn parse_rational_list(s: &str) -> Result<Vec<Q>, RootSysError> {
    let t = s
        .trim()
        .trim_start_matches(['(', '['])
        .trim_end_matches([')', ']']);
    if t.trim().is_empty() {
        return Ok(Vec::new());
    }
    t.split(',').map(parse_rational).collect()
}

/// Renders `(a, b, c)` with each entry as `p` or `p/q`.
pub fn format_vec<T: std::fmt::Display>(v: &[T]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_integers() {
        assert_eq!(parse_rational(" -9/4 ").unwrap(), qr(-9, 4));
        assert_eq!(parse_rational("6/3").unwrap(), q(2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(
            parse_rational_list("(1, -1/2, 0)").unwrap(),
            vec![q(1), qr(-1, 2), q(0)]
        );
    }
}
