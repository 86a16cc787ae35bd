//! Exact counting helpers over arbitrary-precision integers.

use num_bigint::BigUint;
use num_traits::One;

pub fn factorial(n: usize) -> BigUint {
    (2..=n as u64).fold(BigUint::one(), |acc, k| acc * k)
}

/// C(n, k); zero when k > n.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::ZERO;
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for j in 0..k {
        // exact at every step: acc * (n - j) is divisible by (j + 1)
        acc = acc * (n - j) as u64 / (j + 1) as u64;
    }
    acc
}

/// (Σ parts)! / Π parts!, computed as a product of binomials.
pub fn multinomial(parts: &[usize]) -> BigUint {
    let mut acc = BigUint::one();
    let mut running = 0;
    for &p in parts {
        running += p;
        acc *= binomial(running, p);
    }
    acc
}

pub fn pow(base: usize, exp: usize) -> BigUint {
    num_traits::pow(BigUint::from(base), exp)
}

/// Number of weak compositions of `total` into `parts` parts.
pub fn weak_compositions(parts: usize, total: usize) -> BigUint {
    if parts == 0 {
        return if total == 0 {
            BigUint::one()
        } else {
            BigUint::ZERO
        };
    }
    binomial(total + parts - 1, parts - 1)
}
