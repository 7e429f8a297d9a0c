//! Arithmetic classification of pairs (m, n) and the two explicit
//! constructions: perfect arrays from coprime odd subgroup orders, and
//! agreeable arrays from unions of cyclotomic classes, together with the
//! parameter decomposition that makes the latter optimal whenever possible.

use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::arith;
use crate::array::HeffterArray;
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};

/// Greatest odd divisor of k together with rad(k), the product of the
/// distinct primes of k (1 when k = 1).
pub fn odd_part_radical(k: u64) -> Result<(u64, u64)> {
    if k == 0 {
        return Err(Error::InvalidArgument("odd part and radical need k >= 1"));
    }
    Ok((arith::odd_part(k), arith::radical(k)))
}

/// Arithmetic classification of a pair (m, n) with q = 2mn + 1.
///
/// `admissible` needs m, n > 2 and q a prime power. The `agreeable`,
/// `optimal_pair` and `perfect_eligible` flags depend only on m and n:
/// agreeable means two distinct odd primes divide m and n respectively;
/// an agreeable pair is optimal unless m_o·rad(m_o) divides n_o or
/// n_o·rad(n_o) divides m_o; perfect eligibility is m, n odd and coprime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairClass {
    pub m: u64,
    pub n: u64,
    pub q: u64,
    pub prime_power: Option<(u64, u32)>,
    pub admissible: bool,
    pub agreeable: bool,
    pub optimal_pair: bool,
    pub perfect_eligible: bool,
    /// Odd parts m_o, n_o and their radicals.
    pub m_odd: u64,
    pub n_odd: u64,
    pub rad_m_odd: u64,
    pub rad_n_odd: u64,
    pub lcm_odd: u64,
}

pub fn classify_pair(m: u64, n: u64) -> Result<PairClass> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidArgument("classification needs m, n >= 1"));
    }
    let q = 2 * m * n + 1;
    let prime_power = arith::prime_power_decompose(q)?;
    let (m_odd, _) = odd_part_radical(m)?;
    let (n_odd, _) = odd_part_radical(n)?;
    let rad_m_odd = arith::radical(m_odd);
    let rad_n_odd = arith::radical(n_odd);

    // Two distinct odd primes p | m and p' | n exist unless one side has no
    // odd prime at all, or both odd parts are powers of one and the same
    // prime.
    let agreeable = m_odd > 1
        && n_odd > 1
        && !(rad_m_odd == rad_n_odd && arith::is_prime(rad_m_odd));

    let optimal_pair = agreeable
        && n_odd % (m_odd * rad_m_odd) != 0
        && m_odd % (n_odd * rad_n_odd) != 0;

    Ok(PairClass {
        m,
        n,
        q,
        prime_power,
        admissible: prime_power.is_some() && m > 2 && n > 2,
        agreeable,
        optimal_pair,
        perfect_eligible: m % 2 == 1 && n % 2 == 1 && arith::gcd(m, n) == 1,
        m_odd,
        n_odd,
        rad_m_odd,
        rad_n_odd,
        lcm_odd: arith::lcm(m_odd, n_odd),
    })
}

/// The decomposition m = m1·m2, n = n1·n2 driving the agreeable
/// construction: m1 | m_o and n1 | n_o are coprime and both exceed 1, and
/// the construction's multiplier group has order at least m1·n1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AgreeableParams {
    pub m1: u64,
    pub n1: u64,
    pub m2: u64,
    pub n2: u64,
    /// e = m2·n2; the constructed half-set is C^{2e}_0 ∪ … ∪ C^{2e}_{e−1}.
    pub e: u64,
}

impl AgreeableParams {
    /// Validates a caller-chosen (m1, n1) against (m, n).
    pub fn new(m: u64, n: u64, m1: u64, n1: u64) -> Result<AgreeableParams> {
        if m1 < 2 || n1 < 2 {
            return Err(Error::InvalidParams("m1 and n1 must exceed 1"));
        }
        if m1.is_multiple_of(2) || n1.is_multiple_of(2) {
            return Err(Error::InvalidParams("m1 and n1 must be odd"));
        }
        if m == 0 || !m.is_multiple_of(m1) {
            return Err(Error::InvalidParams("m1 must divide the odd part of m"));
        }
        if n == 0 || !n.is_multiple_of(n1) {
            return Err(Error::InvalidParams("n1 must divide the odd part of n"));
        }
        if arith::gcd(m1, n1) != 1 {
            return Err(Error::InvalidParams("m1 and n1 must be coprime"));
        }
        let m2 = m / m1;
        let n2 = n / n1;
        Ok(AgreeableParams {
            m1,
            n1,
            m2,
            n2,
            e: m2 * n2,
        })
    }
}

/// Chooses (m1, n1) for an agreeable pair. For optimal pairs the choice
/// realizes m1·n1 = lcm(m_o, n_o) by comparing prime exponents of the odd
/// parts (splitting off one maximal prime power when m_o = n_o); otherwise
/// it falls back to the smallest distinct odd primes dividing m and n.
pub fn agreeable_parameters(m: u64, n: u64) -> Result<AgreeableParams> {
    let class = classify_pair(m, n)?;
    if !class.agreeable {
        return Err(Error::NotAgreeable);
    }
    let (mo, no) = (class.m_odd, class.n_odd);

    if class.optimal_pair {
        let (m1, n1) = if mo == no {
            let p = arith::distinct_prime_factors(mo)[0];
            let mut pa = 1;
            let mut rest = mo;
            while rest % p == 0 {
                pa *= p;
                rest /= p;
            }
            (pa, mo / pa)
        } else {
            // Send each prime to the side with the not-smaller exponent,
            // breaking exponent ties toward the smaller odd part.
            let (small, large, swapped) = if mo < no { (mo, no, false) } else { (no, mo, true) };
            let mut small_side = 1u64;
            let mut large_side = 1u64;
            for p in arith::distinct_prime_factors(small * large) {
                let power_in = |mut v: u64| {
                    let mut pw = 1u64;
                    while v.is_multiple_of(p) {
                        pw *= p;
                        v /= p;
                    }
                    pw
                };
                let (a, b) = (power_in(small), power_in(large));
                if a >= b {
                    small_side *= a;
                } else {
                    large_side *= b;
                }
            }
            if swapped {
                (large_side, small_side)
            } else {
                (small_side, large_side)
            }
        };
        let params = AgreeableParams::new(m, n, m1, n1)?;
        debug_assert_eq!(params.m1 * params.n1, class.lcm_odd);
        Ok(params)
    } else {
        let m_primes = arith::distinct_prime_factors(mo);
        let n_primes = arith::distinct_prime_factors(no);
        for &p in &m_primes {
            if let Some(&p2) = n_primes.iter().find(|&&p2| p2 != p) {
                return AgreeableParams::new(m, n, p, p2);
            }
        }
        Err(Error::NotAgreeable)
    }
}

fn field_for_pair(class: &PairClass) -> Result<Arc<Field>> {
    let (p, k) = class.prime_power.ok_or(Error::NotAdmissible)?;
    Ok(Arc::new(Field::new(p, k, None)?))
}

/// The perfect rank-one H(m,n) for an admissible pair with m, n odd and
/// coprime: a_{i,j} = r^{2n(i−1)}·r^{2m(j−1)}, i.e. the factors are the
/// subgroups of orders m and n listed as successive powers of x = r^{2n}
/// and y = r^{2m}. Its multiplier group is the group of nonzero squares.
pub fn construct_perfect(m: u64, n: u64) -> Result<HeffterArray> {
    let class = classify_pair(m, n)?;
    if !class.admissible {
        return Err(Error::NotAdmissible);
    }
    if !class.perfect_eligible {
        return Err(Error::NotPerfectEligible);
    }
    let field = field_for_pair(&class)?;
    let x: Vec<FieldElement> = (0..m).map(|i| field.exp(2 * n * i)).collect();
    let y: Vec<FieldElement> = (0..n).map(|j| field.exp(2 * m * j)).collect();
    HeffterArray::from_factors(&field, &x, &y)
}

/// The agreeable construction. X is the union of the m2 classes
/// C^{2m2n}_i (i = 0..m2−1) and Y the union of the n2 classes
/// C^{2mn2}_{j·m2} (j = 0..n2−1); the index stride m2 on the Y side makes
/// the class indices of X·Y tile 0..e−1 exactly, so X·Y is a half-set.
/// Factors are ordered class by class, each class listed as successive
/// multiples of its subgroup generator, which makes the matrix layout
/// deterministic.
pub fn construct_agreeable(
    m: u64,
    n: u64,
    params: Option<AgreeableParams>,
) -> Result<(HeffterArray, AgreeableParams)> {
    let class = classify_pair(m, n)?;
    if !class.admissible {
        return Err(Error::NotAdmissible);
    }
    if !class.agreeable {
        return Err(Error::NotAgreeable);
    }
    let params = match params {
        Some(p) => {
            // Revalidate: callers may have built the struct by hand.
            let checked = AgreeableParams::new(m, n, p.m1, p.n1)?;
            if checked != p {
                return Err(Error::InvalidParams("m2, n2, e are inconsistent with (m, n)"));
            }
            checked
        }
        None => agreeable_parameters(m, n)?,
    };
    let field = field_for_pair(&class)?;

    let ex = 2 * params.m2 * n; // X-classes have this index; order m1 each
    let ey = 2 * m * params.n2; // Y-classes have this index; order n1 each
    let mut x = Vec::with_capacity(m as usize);
    for i in 0..params.m2 {
        for t in 0..params.m1 {
            x.push(field.exp(i + ex * t));
        }
    }
    let mut y = Vec::with_capacity(n as usize);
    for j in 0..params.n2 {
        for t in 0..params.n1 {
            y.push(field.exp(j * params.m2 + ey * t));
        }
    }
    Ok((HeffterArray::from_factors(&field, &x, &y)?, params))
}
