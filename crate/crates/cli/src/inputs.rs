//! Parsers for the small textual specs accepted on the command line.

use std::fs;

use greedyconv::ring::{ArithFn, Convolution, ConvolutionRule};
use num_rational::BigRational;

pub type ParseResult<T> = std::result::Result<T, String>;

pub fn parse_list(s: &str) -> ParseResult<Vec<u64>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| format!("not a positive integer: {t:?}"))
        })
        .collect()
}

/// `dirichlet`, `unitary`, `ternary`, `greedy:D` or `parts:1,2/3,6`.
pub fn parse_rule(s: &str) -> ParseResult<ConvolutionRule> {
    match s {
        "dirichlet" => return Ok(ConvolutionRule::dirichlet()),
        "unitary" => return Ok(ConvolutionRule::unitary()),
        "ternary" => return Ok(ConvolutionRule::ternary()),
        _ => {}
    }
    if let Some(d) = s.strip_prefix("greedy:") {
        let d: usize = d.parse().map_err(|_| format!("bad length in {s:?}"))?;
        return ConvolutionRule::greedy(d).map_err(|e| e.to_string());
    }
    if let Some(spec) = s.strip_prefix("parts:") {
        let parts = spec
            .split('/')
            .map(|p| {
                p.split(',')
                    .map(|b| {
                        b.trim()
                            .parse::<u32>()
                            .map_err(|_| format!("bad exponent {b:?}"))
                    })
                    .collect::<ParseResult<Vec<u32>>>()
            })
            .collect::<ParseResult<Vec<_>>>()?;
        return ConvolutionRule::from_parts(parts).map_err(|e| e.to_string());
    }
    Err(format!(
        "unknown rule {s:?}; expected dirichlet, unitary, ternary, greedy:D or parts:..."
    ))
}

fn parse_values(text: &str, n_max: u64) -> ParseResult<ArithFn> {
    let mut values = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<BigRational>()
                .map_err(|_| format!("not a rational: {t:?}"))
        })
        .collect::<ParseResult<Vec<_>>>()?;
    if values.len() as u64 > n_max {
        return Err(format!("{} values given for n_max {n_max}", values.len()));
    }
    values.resize(n_max as usize, BigRational::from_integer(0.into()));
    Ok(ArithFn::new(values))
}

/// `zeta`, `id`, `e:K`, `mu`, `values:1,0,-1/2` or `file:PATH`. Missing
/// values are zero.
pub fn parse_function(s: &str, conv: &Convolution) -> ParseResult<ArithFn> {
    let n_max = conv.n_max();
    match s {
        "zeta" => return Ok(ArithFn::zeta(n_max)),
        "id" => {
            return Ok(ArithFn::from_fn(n_max, |n| {
                BigRational::from_integer(n.into())
            }))
        }
        "mu" => return Ok(conv.mobius()),
        _ => {}
    }
    if let Some(k) = s.strip_prefix("e:") {
        let k: u64 = k.parse().map_err(|_| format!("bad index in {s:?}"))?;
        if k == 0 || k > n_max {
            return Err(format!("e:{k} is outside 1..={n_max}"));
        }
        return Ok(ArithFn::indicator(k, n_max));
    }
    if let Some(v) = s.strip_prefix("values:") {
        return parse_values(v, n_max);
    }
    if let Some(path) = s.strip_prefix("file:") {
        let text = fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
        return parse_values(&text, n_max);
    }
    Err(format!(
        "unknown function {s:?}; expected zeta, id, mu, e:K, values:... or file:PATH"
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rules() {
        assert!(parse_rule("greedy:3").is_ok());
        assert!(parse_rule("parts:1,3").is_ok());
        assert!(parse_rule("greedy:x").is_err());
        assert!(parse_rule("bogus").is_err());
    }

    #[test]
    fn functions() {
        let conv = Convolution::new(ConvolutionRule::dirichlet(), 4).unwrap();
        let f = parse_function("values:1,-1/2", &conv).unwrap();
        assert_eq!(f.get(2), &"-1/2".parse::<BigRational>().unwrap());
        assert_eq!(f.get(4), &BigRational::from_integer(0.into()));
        assert!(parse_function("values:1,2,3,4,5", &conv).is_err());
        assert!(parse_function("e:5", &conv).is_err());
        assert_eq!(parse_list("2, 3,6").unwrap(), [2, 3, 6]);
    }
}
