//! The ring construction grammar.
//!
//! `Z/<n>` is the ring of residues mod n. `<spec> x <spec>` is the direct
//! product, with ` x ` as the separator and elements in row-major tuple
//! order (first factor most significant). `Z/<p>[x]/(<c0>,<c1>,...,1)` is
//! the quotient of the polynomial ring over the prime field Z/p by the monic
//! polynomial with the listed coefficients, constant term first; elements
//! are the coefficient vectors of the residues, indexed in lexicographic
//! order, again first coordinate most significant.

use super::{FiniteRing, RingError, DEFAULT_SIZE_CAP};

/// Builds a ring from a construction expression, capped at [`DEFAULT_SIZE_CAP`].
pub fn make_ring(spec: &str) -> Result<FiniteRing, RingError> {
    make_ring_with_cap(spec, DEFAULT_SIZE_CAP)
}

pub fn make_ring_with_cap(spec: &str, cap: usize) -> Result<FiniteRing, RingError> {
    // Tables store u16 element indices.
    let cap = cap.min(u16::MAX as usize);
    let spec = spec.trim();
    let factors: Vec<&str> = spec.split(" x ").map(str::trim).collect();
    if factors.iter().any(|f| f.is_empty()) {
        return Err(parse_err(spec, "empty factor in product"));
    }
    let mut parts = Vec::with_capacity(factors.len());
    for factor in &factors {
        parts.push(parse_factor(spec, factor, cap)?);
    }
    let mut ring = parts.remove(0);
    for rhs in parts {
        let size = ring.size() * rhs.size();
        if size > cap {
            return Err(RingError::SizeCap { size, cap });
        }
        ring = product(&ring, &rhs)?;
    }
    if ring.size() > cap {
        return Err(RingError::SizeCap {
            size: ring.size(),
            cap,
        });
    }
    Ok(ring)
}

fn parse_err(spec: &str, reason: impl Into<String>) -> RingError {
    RingError::Parse {
        spec: spec.to_string(),
        reason: reason.into(),
    }
}

fn parse_factor(whole: &str, factor: &str, cap: usize) -> Result<FiniteRing, RingError> {
    let rest = factor
        .strip_prefix("Z/")
        .ok_or_else(|| parse_err(whole, format!("factor {factor:?} must start with \"Z/\"")))?;
    let digits_end = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
    if digits_end == 0 {
        return Err(parse_err(whole, format!("factor {factor:?} has no modulus")));
    }
    let n: usize = rest[..digits_end]
        .parse()
        .map_err(|_| parse_err(whole, format!("modulus in {factor:?} is not a number")))?;
    let tail = &rest[digits_end..];
    if tail.is_empty() {
        if n == 0 {
            return Err(parse_err(whole, "modulus must be positive"));
        }
        if n > cap {
            return Err(RingError::SizeCap { size: n, cap });
        }
        return zmod(n);
    }
    let coeffs_src = tail
        .strip_prefix("[x]/(")
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| {
            parse_err(whole, format!("factor {factor:?} is neither Z/n nor Z/p[x]/(c0,...,1)"))
        })?;
    let mut coeffs = Vec::new();
    for c in coeffs_src.split(',') {
        let c: usize = c
            .trim()
            .parse()
            .map_err(|_| parse_err(whole, format!("bad coefficient {c:?} in {factor:?}")))?;
        coeffs.push(c);
    }
    poly_quotient(n, &coeffs, cap)
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

fn zmod(n: usize) -> Result<FiniteRing, RingError> {
    let add = (0..n * n).map(|k| ((k / n + k % n) % n) as u16).collect();
    let mul = (0..n * n).map(|k| ((k / n) * (k % n) % n) as u16).collect();
    FiniteRing::from_tables(format!("Z/{n}"), n, add, mul, 1 % n)
}

/// Z/p[x] modulo a monic polynomial given by its coefficient list, constant
/// term first. Residues are vectors (a0, ..., a_{d-1}); the element index is
/// the rank of that vector in lexicographic order.
fn poly_quotient(p: usize, coeffs: &[usize], cap: usize) -> Result<FiniteRing, RingError> {
    if !is_prime(p) {
        return Err(RingError::NonPrimeModulus { p });
    }
    if coeffs.len() < 2 {
        return Err(RingError::Parse {
            spec: format!("Z/{p}[x]/(...)"),
            reason: "polynomial must have degree at least 1".into(),
        });
    }
    let leading = *coeffs.last().unwrap() % p;
    if leading != 1 {
        return Err(RingError::NonMonic { leading });
    }
    let d = coeffs.len() - 1;
    let modulus: Vec<usize> = coeffs[..d].iter().map(|&c| c % p).collect();
    let size = p.checked_pow(d as u32).unwrap_or(usize::MAX);
    if size > cap {
        return Err(RingError::SizeCap { size, cap });
    }

    // index <-> coefficient vector, first coordinate most significant
    let decode = |mut idx: usize| -> Vec<usize> {
        let mut v = vec![0; d];
        for i in (0..d).rev() {
            v[i] = idx % p;
            idx /= p;
        }
        v
    };
    let encode = |v: &[usize]| -> usize { v.iter().fold(0, |acc, &c| acc * p + c) };

    let reduce = |prod: &mut Vec<usize>| {
        for k in (d..prod.len()).rev() {
            let t = prod[k];
            if t != 0 {
                prod[k] = 0;
                for (i, &m) in modulus.iter().enumerate() {
                    prod[k - d + i] = (prod[k - d + i] + p * p - t * m % p) % p;
                }
            }
        }
        prod.truncate(d);
    };

    let mut add = Vec::with_capacity(size * size);
    let mut mul = Vec::with_capacity(size * size);
    for a in 0..size {
        let va = decode(a);
        for b in 0..size {
            let vb = decode(b);
            let sum: Vec<usize> = va.iter().zip(&vb).map(|(&x, &y)| (x + y) % p).collect();
            add.push(encode(&sum) as u16);
            let mut prod = vec![0usize; 2 * d - 1];
            for (i, &x) in va.iter().enumerate() {
                for (j, &y) in vb.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + x * y) % p;
                }
            }
            reduce(&mut prod);
            mul.push(encode(&prod) as u16);
        }
    }
    let one = {
        let mut v = vec![0; d];
        v[0] = 1;
        encode(&v)
    };
    let coeff_list = coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",");
    FiniteRing::from_tables(format!("Z/{p}[x]/({coeff_list})"), size, add, mul, one)
}

fn product(a: &FiniteRing, b: &FiniteRing) -> Result<FiniteRing, RingError> {
    let (na, nb) = (a.size(), b.size());
    let n = na * nb;
    let pair = |i: usize| (i / nb, i % nb);
    let idx = |x: usize, y: usize| x * nb + y;
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for i in 0..n {
        let (ia, ib) = pair(i);
        for j in 0..n {
            let (ja, jb) = pair(j);
            add.push(idx(a.add(ia, ja), b.add(ib, jb)) as u16);
            mul.push(idx(a.mul(ia, ja), b.mul(ib, jb)) as u16);
        }
    }
    let one = idx(a.one(), b.one());
    FiniteRing::from_tables(format!("{} x {}", a.spec(), b.spec()), n, add, mul, one)
}

#[cfg(test)]
mod tests {
    use super::super::units::units_group;
    use super::*;

    #[test]
    fn zmod_specs_parse() {
        assert_eq!(make_ring("Z/6").unwrap().size(), 6);
        assert_eq!(make_ring(" Z/17 ").unwrap().size(), 17);
        assert!(make_ring("Z/0").is_err());
        assert!(make_ring("Z/").is_err());
        assert!(make_ring("Q/4").is_err());
        assert!(make_ring("Z/4x").is_err());
    }

    #[test]
    fn product_spec_parses_and_is_row_major() {
        let r = make_ring("Z/2 x Z/3").unwrap();
        assert_eq!(r.size(), 6);
        // (1,1) has index 1*3 + 1 = 4
        assert_eq!(r.one(), 4);
        // (1,2) + (1,2) = (0,1): index 5 + 5 -> 1
        assert_eq!(r.add(5, 5), 1);
        let three = make_ring("Z/2 x Z/2 x Z/2").unwrap();
        assert_eq!(three.size(), 8);
        assert_eq!(three.one(), 7);
    }

    #[test]
    fn gf4_is_a_field() {
        let r = make_ring("Z/2[x]/(1,1,1)").unwrap();
        assert_eq!(r.size(), 4);
        let units = units_group(&r);
        assert_eq!(units.elements.len(), 3);
    }

    #[test]
    fn poly_quotient_rejections() {
        assert!(matches!(
            make_ring("Z/4[x]/(1,1,1)"),
            Err(RingError::NonPrimeModulus { p: 4 })
        ));
        assert!(matches!(
            make_ring("Z/2[x]/(1,1,0)"),
            Err(RingError::NonMonic { .. })
        ));
        assert!(make_ring("Z/2[x]/(1)").is_err());
    }

    #[test]
    fn size_cap_applies() {
        assert!(make_ring("Z/300").is_err());
        assert!(make_ring("Z/16 x Z/17").is_err());
        assert!(make_ring_with_cap("Z/300", 300).is_ok());
    }

    #[test]
    fn dual_numbers_square_to_zero() {
        // Z/2[x]/(x^2): the class of x is index 1 (vector (0,1)) and squares to 0.
        let r = make_ring("Z/2[x]/(0,0,1)").unwrap();
        assert_eq!(r.size(), 4);
        assert_eq!(r.one(), 2);
        assert_eq!(r.mul(1, 1), 0);
    }
}
