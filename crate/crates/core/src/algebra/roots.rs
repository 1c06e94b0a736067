//! Integer roots of monic integer polynomials.
//!
//! Candidate roots of a monic polynomial are the divisors of its constant
//! term, capped by a root bound on the coefficients. The constant term is
//! fully factored (trial division, then Miller-Rabin plus Pollard rho for
//! large cofactors), so the candidate set is complete and the split verdict
//! is exact.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::poly::IntPolynomial;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum RootError {
    #[error("integrality check requires a monic polynomial")]
    NotMonic,
    #[error("integrality check is undefined for the zero polynomial")]
    ZeroPolynomial,
}

/// Outcome of extracting integer roots from a monic polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IntegerSplit {
    /// The polynomial is a product of linear factors over `Z`; roots are
    /// listed in descending order with multiplicities.
    Total { roots: Vec<(BigInt, usize)> },
    /// Some factor of positive degree has no integer root; the monic
    /// cofactor left after removing every linear factor is returned.
    Partial {
        roots: Vec<(BigInt, usize)>,
        cofactor: IntPolynomial,
    },
}

impl IntegerSplit {
    pub fn is_total(&self) -> bool {
        matches!(self, IntegerSplit::Total { .. })
    }

    pub fn roots(&self) -> &[(BigInt, usize)] {
        match self {
            IntegerSplit::Total { roots } | IntegerSplit::Partial { roots, .. } => roots,
        }
    }
}

/// Extracts the integer root multiset of a monic polynomial. Succeeds with
/// `Total` exactly when the polynomial splits completely over `Z`.
pub fn integrality_check(p: &IntPolynomial) -> Result<IntegerSplit, RootError> {
    if p.is_zero() {
        return Err(RootError::ZeroPolynomial);
    }
    if !p.is_monic() {
        return Err(RootError::NotMonic);
    }
    let mut rem = p.clone();
    let mut roots: BTreeMap<BigInt, usize> = BTreeMap::new();
    while rem.degree().unwrap_or(0) > 0 {
        // Roots at zero first: the constant term must be nonzero afterwards.
        if rem.coeff(0).is_zero() {
            let k = rem
                .coeffs()
                .iter()
                .position(|c| !c.is_zero())
                .expect("monic polynomial has a nonzero coefficient");
            *roots.entry(BigInt::zero()).or_insert(0) += k;
            rem = IntPolynomial::new(rem.coeffs()[k..].to_vec());
            continue;
        }
        let bound = root_bound(&rem);
        let constant = rem.coeff(0).magnitude().clone();
        let mut found = false;
        for cand in candidate_roots(&constant, &bound) {
            if let Some(next) = rem.div_by_root(&cand) {
                let mut mult = 1;
                rem = next;
                while let Some(next) = rem.div_by_root(&cand) {
                    mult += 1;
                    rem = next;
                }
                *roots.entry(cand).or_insert(0) += mult;
                found = true;
                break;
            }
        }
        if !found {
            break;
        }
    }
    let mut roots: Vec<(BigInt, usize)> = roots.into_iter().collect();
    roots.reverse();
    if rem.degree() == Some(0) || rem.is_zero() {
        Ok(IntegerSplit::Total { roots })
    } else {
        Ok(IntegerSplit::Partial {
            roots,
            cofactor: rem,
        })
    }
}

/// Factored display such as `(x-4)(x-2)^3x^3(x+2)^5`, roots descending.
pub fn factored_string(roots: &[(BigInt, usize)]) -> String {
    let mut out = String::new();
    for (root, mult) in roots {
        if root.is_zero() {
            out.push('x');
        } else if root.is_positive() {
            out.push_str(&format!("(x-{root})"));
        } else {
            out.push_str(&format!("(x+{})", root.magnitude()));
        }
        if *mult > 1 {
            out.push_str(&format!("^{mult}"));
        }
    }
    if out.is_empty() {
        out.push('1');
    }
    out
}

/// Cauchy bound: every root of a monic polynomial has magnitude at most
/// `1 + max |a_i|`.
fn root_bound(p: &IntPolynomial) -> BigUint {
    let max = p
        .coeffs()
        .iter()
        .map(|c| c.magnitude().clone())
        .max()
        .unwrap_or_else(BigUint::zero);
    max + BigUint::one()
}

/// Signed divisors of `constant` with magnitude at most `bound`, ordered by
/// magnitude with the positive sign first.
fn candidate_roots(constant: &BigUint, bound: &BigUint) -> Vec<BigInt> {
    let factors = factorize(constant.clone());
    let mut divisors = vec![BigUint::one()];
    for (prime, exp) in &factors {
        let mut extended = Vec::with_capacity(divisors.len() * (*exp as usize + 1));
        for d in &divisors {
            let mut power = d.clone();
            extended.push(power.clone());
            for _ in 0..*exp {
                power = &power * prime;
                if power > *bound {
                    break;
                }
                extended.push(power.clone());
            }
        }
        extended.sort();
        extended.dedup();
        divisors = extended;
    }
    divisors.retain(|d| d <= bound);
    divisors.sort();
    let mut out = Vec::with_capacity(divisors.len() * 2);
    for d in divisors {
        let pos = BigInt::from(d);
        out.push(pos.clone());
        out.push(-pos);
    }
    out
}

/// Complete prime factorization of a positive integer.
pub fn factorize(mut value: BigUint) -> BTreeMap<BigUint, u32> {
    let mut factors = BTreeMap::new();
    if value.is_zero() || value.is_one() {
        return factors;
    }
    for small in [2u64, 3, 5] {
        let p = BigUint::from(small);
        while (&value % &p).is_zero() {
            *factors.entry(p.clone()).or_insert(0) += 1;
            value /= &p;
        }
    }
    // Wheel over numbers coprime to 2 and 3 up to a fixed trial cap.
    let mut cand: u64 = 7;
    let mut step: u64 = 4;
    while cand <= 1_000_000 {
        let p = BigUint::from(cand);
        if &p * &p > value {
            break;
        }
        while (&value % &p).is_zero() {
            *factors.entry(p.clone()).or_insert(0) += 1;
            value /= &p;
        }
        cand += step;
        step = 6 - step;
    }
    if value.is_one() {
        return factors;
    }
    let mut stack = vec![value];
    while let Some(v) = stack.pop() {
        if v.is_one() {
            continue;
        }
        if is_prime(&v) {
            *factors.entry(v).or_insert(0) += 1;
            continue;
        }
        let d = pollard_rho(&v);
        stack.push(&v / &d);
        stack.push(d);
    }
    factors
}

/// Miller-Rabin with a fixed base set; deterministic far beyond the scale of
/// any constant term handled here.
fn is_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if n < &two {
        return false;
    }
    for small in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let p = BigUint::from(small);
        if *n == p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let n_minus_1 = n - BigUint::one();
    let s = n_minus_1.trailing_zeros().expect("n-1 > 0");
    let d = &n_minus_1 >> s;
    'bases: for base in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = BigUint::from(base).modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Pollard rho (Brent cycle detection) for odd composites.
fn pollard_rho(n: &BigUint) -> BigUint {
    let one = BigUint::one();
    if n.is_even() {
        return BigUint::from(2u32);
    }
    let mut addend = BigUint::one();
    loop {
        let mut x = BigUint::from(2u32);
        let mut y = BigUint::from(2u32);
        let mut d = BigUint::one();
        let step = |v: &BigUint| (v * v + &addend) % n;
        while d == one {
            x = step(&x);
            y = step(&step(&y));
            let diff = if x > y { &x - &y } else { &y - &x };
            if diff.is_zero() {
                break;
            }
            d = diff.gcd(n);
        }
        if d != one && &d != n {
            return d;
        }
        addend += BigUint::one();
    }
}
