//! Deterministic choice of the defining polynomial.

use crate::poly::{self, PrimeField};

/// Smallest monic primitive polynomial of the given degree over F_p, with
/// coefficient vectors compared constant term first.
pub(crate) fn smallest_primitive(p: u32, degree: u32) -> Vec<u32> {
    let fp = PrimeField { p };
    let d = degree as usize;
    let order = (p as u64).pow(degree) - 1;
    let factors = poly::prime_factors(order);
    let x = vec![0, 1];
    // candidate value v encodes c_0 as its most significant base-p digit
    let total = (p as u64).pow(degree);
    for v in 0..total {
        let mut f = vec![0u32; d + 1];
        let mut rest = v;
        for i in (0..d).rev() {
            f[i] = (rest % p as u64) as u32;
            rest /= p as u64;
        }
        f[d] = 1;
        if f[0] == 0 {
            continue;
        }
        let one = poly::powmod(&fp, &x, order as u128, &f);
        if one != [1] {
            continue;
        }
        if factors
            .iter()
            .all(|&r| poly::powmod(&fp, &x, (order / r) as u128, &f) != [1])
        {
            return f;
        }
    }
    unreachable!("primitive polynomials exist in every degree")
}
