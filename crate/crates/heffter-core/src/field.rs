//! Exact arithmetic in F_{p^k} with a canonical primitive element r and
//! table-based discrete logarithms.
//!
//! Elements are stored as reduced coefficient vectors packed into a single
//! base-p integer (constant coefficient first), so zero is representable
//! uniformly. Multiplication, inversion and powers go through log/exp tables
//! built once per field; addition works directly on the digits.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write as _;

use crate::arith;
use crate::error::{Error, Result};

/// Largest supported field order. The log and exp tables are O(q), which is
/// the point of the design: at this scale a full table beats any generic
/// discrete-log algorithm and is trivially correct.
pub const MAX_FIELD_ORDER: u64 = 1 << 24;

pub use crate::arith::prime_power_decompose;

/// An element of a fixed [`Field`], packed as Σ coeffs\[t\]·p^t.
///
/// Elements carry no field reference; all arithmetic goes through the owning
/// `Field`. Mixing elements of different fields is caught where two
/// field-bearing containers meet (sets, arrays, documents).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement(u32);

impl FieldElement {
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// The packed base-p encoding of the coefficient vector.
    pub fn encoding(self) -> u32 {
        self.0
    }
}

/// A concrete finite field F_{p^k} with a fixed primitive element.
///
/// For k > 1 the field is F_p\[x\] modulo a monic primitive polynomial and the
/// primitive element r is the class of x; for k = 1 it is the smallest
/// positive primitive root mod p. Construction is deterministic: identical
/// inputs always yield the identical field, including r and the modulus.
pub struct Field {
    p: u64,
    k: u32,
    q: u64,
    /// Monic primitive modulus, constant coefficient first, length k + 1.
    /// Empty when k = 1.
    modulus: Vec<u64>,
    r: FieldElement,
    /// log[enc] = t with r^t = element; log[0] is a sentinel.
    log: Vec<u32>,
    /// exp[t] = encoding of r^t, length q - 1.
    exp: Vec<u32>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("p", &self.p)
            .field("k", &self.k)
            .field("q", &self.q)
            .field("modulus", &self.modulus)
            .field("r", &self.r)
            .finish()
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        // r participates: two fields with the same modulus but different
        // primitive elements disagree on every cyclotomic class index.
        self.p == other.p && self.k == other.k && self.modulus == other.modulus && self.r == other.r
    }
}

impl Eq for Field {}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k == 1 {
            write!(f, "F_{}", self.q)
        } else {
            write!(f, "F_{}^{}", self.p, self.k)
        }
    }
}

impl Field {
    /// Builds F_{p^k}. When `modulus` is absent and k > 1, selects the monic
    /// degree-k polynomial with the smallest integer encoding Σ c_t·p^t whose
    /// root generates the multiplicative group; this reproduces x²+x+2 for
    /// F_25. A supplied modulus must be monic of degree k with coefficients
    /// in [0, p), and is rejected unless it is primitive.
    pub fn new(p: u64, k: u32, modulus: Option<&[u64]>) -> Result<Field> {
        if !arith::is_prime(p) {
            return Err(Error::InvalidArgument("characteristic must be prime"));
        }
        if k < 1 {
            return Err(Error::InvalidArgument("extension degree must be at least 1"));
        }
        let q = (p as u128).checked_pow(k).filter(|&q| q <= MAX_FIELD_ORDER as u128).ok_or(
            Error::InvalidArgument("field order exceeds the supported bound"),
        )? as u64;

        if k == 1 {
            let r = match modulus {
                None => smallest_primitive_root(p),
                Some(m) => {
                    validate_modulus_shape(m, p, k)?;
                    let root = (p - m[0]) % p;
                    if !is_primitive_root(root, p) {
                        return Err(Error::InvalidModulus);
                    }
                    root
                }
            };
            let mut field = Field {
                p,
                k,
                q,
                modulus: Vec::new(),
                r: FieldElement(r as u32),
                log: Vec::new(),
                exp: Vec::new(),
            };
            field.build_tables();
            Ok(field)
        } else {
            let modulus = match modulus {
                Some(m) => {
                    validate_modulus_shape(m, p, k)?;
                    if !x_is_primitive(m, p, q) {
                        return Err(Error::InvalidModulus);
                    }
                    m.to_vec()
                }
                None => canonical_primitive_modulus(p, k, q),
            };
            let mut field = Field {
                p,
                k,
                q,
                modulus,
                r: FieldElement(p as u32), // the class of x
                log: Vec::new(),
                exp: Vec::new(),
            };
            field.build_tables();
            Ok(field)
        }
    }

    fn build_tables(&mut self) {
        let q = self.q as usize;
        self.log = vec![u32::MAX; q];
        self.exp = vec![0; q - 1];
        if self.k == 1 {
            let mut e = 1u64;
            for t in 0..q - 1 {
                self.exp[t] = e as u32;
                self.log[e as usize] = t as u32;
                e = e * self.r.0 as u64 % self.p;
            }
            debug_assert_eq!(e, 1);
        } else {
            // Multiplying by the class of x is a shift followed by one
            // reduction step against the monic modulus.
            let k = self.k as usize;
            let p = self.p;
            let mut e = vec![0u64; k];
            e[0] = 1;
            for t in 0..q - 1 {
                let enc = encode(&e, p);
                self.exp[t] = enc;
                self.log[enc as usize] = t as u32;
                let top = e[k - 1];
                for j in (1..k).rev() {
                    e[j] = (e[j - 1] + (p - top) * self.modulus[j] % p) % p;
                }
                e[0] = (p - top) * self.modulus[0] % p;
            }
            debug_assert_eq!(encode(&e, p), 1);
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// The field order q = p^k.
    pub fn order(&self) -> u64 {
        self.q
    }

    /// The modulus polynomial for k > 1 (constant coefficient first).
    pub fn modulus(&self) -> Option<&[u64]> {
        if self.k == 1 {
            None
        } else {
            Some(&self.modulus)
        }
    }

    /// The canonical primitive element r.
    pub fn primitive_element(&self) -> FieldElement {
        self.r
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    /// Builds an element from (at most k) coefficients, constant first.
    /// Coefficients are reduced mod p, so negative integers are accepted.
    pub fn element_from_coeffs(&self, coeffs: &[i64]) -> Result<FieldElement> {
        if coeffs.len() > self.k as usize {
            return Err(Error::InvalidArgument("more coefficients than the extension degree"));
        }
        let mut enc = 0u64;
        let p = self.p as i64;
        for (t, &c) in coeffs.iter().enumerate() {
            let c = c.rem_euclid(p) as u64;
            enc += c * self.p.pow(t as u32);
        }
        Ok(FieldElement(enc as u32))
    }

    /// The k reduced coefficients of an element, constant first.
    pub fn coeffs(&self, x: FieldElement) -> Vec<u64> {
        let mut enc = x.0 as u64;
        let mut out = Vec::with_capacity(self.k as usize);
        for _ in 0..self.k {
            out.push(enc % self.p);
            enc /= self.p;
        }
        out
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.k == 1 {
            FieldElement(((a.0 as u64 + b.0 as u64) % self.p) as u32)
        } else {
            let (mut ea, mut eb) = (a.0 as u64, b.0 as u64);
            let mut enc = 0u64;
            let mut scale = 1u64;
            for _ in 0..self.k {
                enc += (ea % self.p + eb % self.p) % self.p * scale;
                ea /= self.p;
                eb /= self.p;
                scale *= self.p;
            }
            FieldElement(enc as u32)
        }
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        if self.k == 1 {
            FieldElement(((self.p - a.0 as u64) % self.p) as u32)
        } else {
            let mut ea = a.0 as u64;
            let mut enc = 0u64;
            let mut scale = 1u64;
            for _ in 0..self.k {
                enc += (self.p - ea % self.p) % self.p * scale;
                ea /= self.p;
                scale *= self.p;
            }
            FieldElement(enc as u32)
        }
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.is_zero() || b.is_zero() {
            return FieldElement(0);
        }
        let t = (self.log[a.0 as usize] as u64 + self.log[b.0 as usize] as u64) % (self.q - 1);
        FieldElement(self.exp[t as usize])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let t = (self.q - 1 - self.log[a.0 as usize] as u64) % (self.q - 1);
        Ok(FieldElement(self.exp[t as usize]))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// x^e, with negative exponents allowed for nonzero x.
    pub fn pow(&self, x: FieldElement, e: i64) -> Result<FieldElement> {
        if x.is_zero() {
            return match e {
                0 => Ok(self.one()),
                e if e > 0 => Ok(self.zero()),
                _ => Err(Error::DivisionByZero),
            };
        }
        let n = (self.q - 1) as i128;
        let t = (self.log[x.0 as usize] as i128 * e as i128).rem_euclid(n) as usize;
        Ok(FieldElement(self.exp[t]))
    }

    /// The exponent t in [0, q-2] with r^t = x.
    pub fn discrete_log(&self, x: FieldElement) -> Result<u64> {
        if x.is_zero() {
            return Err(Error::InvalidArgument("zero has no discrete logarithm"));
        }
        Ok(self.log[x.0 as usize] as u64)
    }

    /// r^t for any t (reduced mod q - 1).
    pub fn exp(&self, t: u64) -> FieldElement {
        FieldElement(self.exp[(t % (self.q - 1)) as usize])
    }

    /// All nonzero elements in discrete-log order: 1, r, r², …
    pub fn units(&self) -> impl Iterator<Item = FieldElement> + '_ {
        self.exp.iter().map(|&enc| FieldElement(enc))
    }

    /// All q elements, zero first, then by ascending encoding.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q as u32).map(FieldElement)
    }

    /// Renders an element: a bare residue for k = 1, otherwise a polynomial
    /// in g with descending powers and zero terms omitted ("3g+4", "g", "0").
    pub fn format_element(&self, x: FieldElement) -> String {
        if self.k == 1 {
            let mut s = String::new();
            let _ = write!(s, "{}", x.0);
            return s;
        }
        let coeffs = self.coeffs(x);
        let mut s = String::new();
        for t in (0..self.k as usize).rev() {
            let c = coeffs[t];
            if c == 0 {
                continue;
            }
            if !s.is_empty() {
                s.push('+');
            }
            if t == 0 {
                let _ = write!(s, "{c}");
            } else {
                if c != 1 {
                    let _ = write!(s, "{c}");
                }
                s.push('g');
                if t > 1 {
                    let _ = write!(s, "^{t}");
                }
            }
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }

    /// Parses the grammar produced by [`Field::format_element`]. For k = 1 a
    /// leading minus sign is also accepted and reduced mod p.
    pub fn parse_element(&self, s: &str) -> Result<FieldElement> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::InvalidArgument("empty element string"));
        }
        if self.k == 1 {
            let v: i64 = s
                .parse()
                .map_err(|_| Error::InvalidArgument("malformed residue"))?;
            return self.element_from_coeffs(&[v]);
        }
        let mut coeffs = vec![0i64; self.k as usize];
        for term in s.split('+') {
            let term = term.trim();
            if term.is_empty() {
                return Err(Error::InvalidArgument("empty term in element string"));
            }
            let (digits, rest) = split_leading_digits(term);
            let coeff: i64 = if digits.is_empty() {
                1
            } else {
                digits
                    .parse()
                    .map_err(|_| Error::InvalidArgument("malformed coefficient"))?
            };
            let power = if rest.is_empty() {
                if digits.is_empty() {
                    return Err(Error::InvalidArgument("empty term in element string"));
                }
                0
            } else if let Some(exp) = rest.strip_prefix('g') {
                if exp.is_empty() {
                    1
                } else if let Some(e) = exp.strip_prefix('^') {
                    e.parse::<usize>()
                        .map_err(|_| Error::InvalidArgument("malformed exponent"))?
                } else {
                    return Err(Error::InvalidArgument("malformed term"));
                }
            } else {
                return Err(Error::InvalidArgument("malformed term"));
            };
            if power >= self.k as usize {
                return Err(Error::InvalidArgument("exponent exceeds extension degree"));
            }
            coeffs[power] += coeff;
        }
        self.element_from_coeffs(&coeffs)
    }
}

fn split_leading_digits(s: &str) -> (&str, &str) {
    let end = s.find(|c: char| !c.is_ascii_digit()).unwrap_or(s.len());
    s.split_at(end)
}

fn encode(coeffs: &[u64], p: u64) -> u32 {
    let mut enc = 0u64;
    for &c in coeffs.iter().rev() {
        enc = enc * p + c;
    }
    enc as u32
}

fn validate_modulus_shape(m: &[u64], p: u64, k: u32) -> Result<()> {
    if m.len() != k as usize + 1 {
        return Err(Error::InvalidArgument("modulus must have degree k"));
    }
    if m[k as usize] != 1 {
        return Err(Error::InvalidArgument("modulus must be monic"));
    }
    if m.iter().any(|&c| c >= p) {
        return Err(Error::InvalidArgument("modulus coefficients must lie in [0, p)"));
    }
    Ok(())
}

fn is_primitive_root(root: u64, p: u64) -> bool {
    if root == 0 {
        return false;
    }
    arith::distinct_prime_factors(p - 1)
        .into_iter()
        .all(|s| arith::mod_pow(root, (p - 1) / s, p) != 1)
}

fn smallest_primitive_root(p: u64) -> u64 {
    (1..p)
        .find(|&c| is_primitive_root(c, p))
        .expect("every prime field has a primitive root")
}

/// True iff the class of x has multiplicative order q - 1 in F_p[x]/(m).
/// That forces the quotient to be a field (a ring of order q with a nonzero
/// non-unit has fewer than q - 1 units), so m is irreducible and primitive.
fn x_is_primitive(m: &[u64], p: u64, q: u64) -> bool {
    let is_one = |v: &[u64]| v[0] == 1 && v[1..].iter().all(|&c| c == 0);
    let k = m.len() - 1;
    let mut x = vec![0u64; k];
    if k == 1 {
        x[0] = (p - m[0]) % p;
    } else {
        x[1] = 1;
    }
    if !is_one(&poly_pow(&x, q - 1, m, p)) {
        return false;
    }
    arith::distinct_prime_factors(q - 1)
        .into_iter()
        .all(|s| !is_one(&poly_pow(&x, (q - 1) / s, m, p)))
}

fn canonical_primitive_modulus(p: u64, k: u32, q: u64) -> Vec<u64> {
    let ku = k as usize;
    let mut coeffs = vec![0u64; ku + 1];
    coeffs[ku] = 1;
    // Ascending integer encoding of the non-leading coefficients.
    for enc in 0..q {
        let mut e = enc;
        for c in coeffs.iter_mut().take(ku) {
            *c = e % p;
            e /= p;
        }
        if coeffs[0] == 0 {
            continue; // x divides the polynomial
        }
        if x_is_primitive(&coeffs, p, q) {
            return coeffs;
        }
    }
    unreachable!("a primitive polynomial of every degree exists over F_p")
}

/// Schoolbook multiplication in F_p[x] reduced against a monic modulus.
fn poly_mul(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let k = m.len() - 1;
    let mut buf = vec![0u64; 2 * k - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            buf[i + j] = (buf[i + j] + ai * bj) % p;
        }
    }
    for t in (k..2 * k - 1).rev() {
        let c = buf[t];
        if c == 0 {
            continue;
        }
        buf[t] = 0;
        for j in 0..k {
            buf[t - k + j] = (buf[t - k + j] + (p - c) * m[j] % p) % p;
        }
    }
    buf.truncate(k);
    buf
}

fn poly_pow(x: &[u64], mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
    let k = m.len() - 1;
    let mut result = vec![0u64; k];
    result[0] = 1;
    let mut base = x.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            result = poly_mul(&result, &base, m, p);
        }
        base = poly_mul(&base, &base, m, p);
        e >>= 1;
    }
    result
}
