//! Dense univariate polynomials over a small coefficient ring.
//!
//! Coefficients are stored low degree first and kept trimmed, so the zero
//! polynomial is the empty vector. The same routines serve the prime field
//! (modulus search, irreducibility checks) and subfields of a [`FieldCtx`]
//! (character sums, squarefree factorization).
//!
//! [`FieldCtx`]: crate::field::FieldCtx

use std::fmt::Debug;

/// Minimal field interface the polynomial routines need.
pub trait CoeffField {
    type Elem: Copy + Eq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn sub(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn mul(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    /// Inverse of a nonzero element.
    fn inverse(&self, a: Self::Elem) -> Self::Elem;
    /// Characteristic of the field.
    fn characteristic(&self) -> u32;
    /// Inverse of the Frobenius map `x -> x^p`.
    fn pth_root(&self, a: Self::Elem) -> Self::Elem;
    /// Image of the integer `k` in the field.
    fn from_int(&self, k: u64) -> Self::Elem {
        let k = k % self.characteristic() as u64;
        let mut acc = self.zero();
        for _ in 0..k {
            acc = self.add(acc, self.one());
        }
        acc
    }
}

/// The prime field F_p with elements as plain residues.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    pub p: u32,
}

impl CoeffField for PrimeField {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1
    }
    fn add(&self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.p as u64) as u32
    }
    fn sub(&self, a: u32, b: u32) -> u32 {
        ((a as u64 + self.p as u64 - b as u64) % self.p as u64) as u32
    }
    fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }
    fn inverse(&self, a: u32) -> u32 {
        assert!(!a.is_multiple_of(self.p), "inverse of zero in F_{}", self.p);
        mod_pow(a as u64, self.p as u64 - 2, self.p as u64) as u32
    }
    fn characteristic(&self) -> u32 {
        self.p
    }
    fn pth_root(&self, a: u32) -> u32 {
        a
    }
    fn from_int(&self, k: u64) -> u32 {
        (k % self.p as u64) as u32
    }
}

pub(crate) fn mod_pow(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1 % modulus;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % modulus as u128) as u64;
        }
        base = ((base as u128 * base as u128) % modulus as u128) as u64;
        exp >>= 1;
    }
    acc
}

pub fn trim<F: CoeffField>(f: &F, mut a: Vec<F::Elem>) -> Vec<F::Elem> {
    while a.last() == Some(&f.zero()) {
        a.pop();
    }
    a
}

/// Degree, or `None` for the zero polynomial.
pub fn degree<E>(a: &[E]) -> Option<usize> {
    a.len().checked_sub(1)
}

pub fn add<F: CoeffField>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let len = a.len().max(b.len());
    let out = (0..len)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(f.zero());
            let y = b.get(i).copied().unwrap_or(f.zero());
            f.add(x, y)
        })
        .collect();
    trim(f, out)
}

pub fn sub<F: CoeffField>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let len = a.len().max(b.len());
    let out = (0..len)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(f.zero());
            let y = b.get(i).copied().unwrap_or(f.zero());
            f.sub(x, y)
        })
        .collect();
    trim(f, out)
}

pub fn scale<F: CoeffField>(f: &F, a: &[F::Elem], c: F::Elem) -> Vec<F::Elem> {
    trim(f, a.iter().map(|&x| f.mul(x, c)).collect())
}

pub fn mul<F: CoeffField>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![f.zero(); a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == f.zero() {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    trim(f, out)
}

/// Quotient and remainder of `a` by a nonzero `b`.
pub fn divrem<F: CoeffField>(
    f: &F,
    a: &[F::Elem],
    b: &[F::Elem],
) -> (Vec<F::Elem>, Vec<F::Elem>) {
    let db = degree(b).expect("division by the zero polynomial");
    let lead_inv = f.inverse(b[db]);
    let mut rem = a.to_vec();
    if rem.len() <= db {
        return (Vec::new(), trim(f, rem));
    }
    let mut quot = vec![f.zero(); rem.len() - db];
    for i in (db..rem.len()).rev() {
        let c = rem[i];
        if c == f.zero() {
            continue;
        }
        let t = f.mul(c, lead_inv);
        quot[i - db] = t;
        for (j, &bj) in b.iter().enumerate() {
            let k = i - db + j;
            rem[k] = f.sub(rem[k], f.mul(t, bj));
        }
    }
    rem.truncate(db);
    (trim(f, quot), trim(f, rem))
}

pub fn rem<F: CoeffField>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    divrem(f, a, b).1
}

pub fn make_monic<F: CoeffField>(f: &F, a: &[F::Elem]) -> Vec<F::Elem> {
    match a.last() {
        None => Vec::new(),
        Some(&lead) => scale(f, a, f.inverse(lead)),
    }
}

/// Monic gcd; the gcd of two zero polynomials is zero.
pub fn gcd<F: CoeffField>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let mut x = trim(f, a.to_vec());
    let mut y = trim(f, b.to_vec());
    while !y.is_empty() {
        let r = rem(f, &x, &y);
        x = y;
        y = r;
    }
    make_monic(f, &x)
}

pub fn mulmod<F: CoeffField>(
    f: &F,
    a: &[F::Elem],
    b: &[F::Elem],
    modulus: &[F::Elem],
) -> Vec<F::Elem> {
    rem(f, &mul(f, a, b), modulus)
}

pub fn powmod<F: CoeffField>(
    f: &F,
    base: &[F::Elem],
    mut exp: u128,
    modulus: &[F::Elem],
) -> Vec<F::Elem> {
    let mut acc = rem(f, &[f.one()], modulus);
    let mut b = rem(f, base, modulus);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(f, &acc, &b, modulus);
        }
        exp >>= 1;
        if exp > 0 {
            b = mulmod(f, &b, &b, modulus);
        }
    }
    acc
}

pub fn derivative<F: CoeffField>(f: &F, a: &[F::Elem]) -> Vec<F::Elem> {
    let out = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| f.mul(c, f.from_int(i as u64)))
        .collect();
    trim(f, out)
}

pub fn eval<F: CoeffField>(f: &F, a: &[F::Elem], x: F::Elem) -> F::Elem {
    a.iter().rev().fold(f.zero(), |acc, &c| f.add(f.mul(acc, x), c))
}

/// Rabin's irreducibility test over a field with `order` elements.
pub fn is_irreducible<F: CoeffField>(f: &F, order: u64, a: &[F::Elem]) -> bool {
    let Some(d) = degree(a) else { return false };
    if d == 0 {
        return false;
    }
    if d == 1 {
        return true;
    }
    let a = make_monic(f, a);
    let x = vec![f.zero(), f.one()];
    // x^{order^i} mod a for i = 0..=d
    let mut frob = Vec::with_capacity(d + 1);
    frob.push(rem(f, &x, &a));
    for i in 1..=d {
        let next = powmod(f, &frob[i - 1], order as u128, &a);
        frob.push(next);
    }
    if !sub(f, &frob[d], &x).is_empty() {
        return false;
    }
    for r in prime_factors(d as u64) {
        let e = d / r as usize;
        let g = gcd(f, &sub(f, &frob[e], &x), &a);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

/// Squarefree factorization of a nonzero polynomial in characteristic p.
/// Returns `(factor, multiplicity)` pairs with monic squarefree factors.
pub fn squarefree_factorization<F: CoeffField>(
    f: &F,
    a: &[F::Elem],
) -> Vec<(Vec<F::Elem>, usize)> {
    let a = make_monic(f, a);
    let mut out = Vec::new();
    sff_rec(f, &a, 1, &mut out);
    out
}

fn sff_rec<F: CoeffField>(f: &F, a: &[F::Elem], mult: usize, out: &mut Vec<(Vec<F::Elem>, usize)>) {
    if a.len() <= 1 {
        return;
    }
    let p = f.characteristic() as usize;
    let da = derivative(f, a);
    if da.is_empty() {
        let root = pth_root_poly(f, a);
        sff_rec(f, &root, mult * p, out);
        return;
    }
    let mut c = gcd(f, a, &da);
    let mut w = divrem(f, a, &c).0;
    let mut i = 1;
    while w.len() > 1 {
        let y = gcd(f, &w, &c);
        let fac = divrem(f, &w, &y).0;
        if fac.len() > 1 {
            out.push((make_monic(f, &fac), i * mult));
        }
        w = y;
        c = divrem(f, &c, &w).0;
        i += 1;
    }
    if c.len() > 1 {
        let root = pth_root_poly(f, &c);
        sff_rec(f, &root, mult * p, out);
    }
}

/// For `a(x) = b(x^p)` returns `b^{1/p}` coefficientwise, i.e. `a^{1/p}`.
fn pth_root_poly<F: CoeffField>(f: &F, a: &[F::Elem]) -> Vec<F::Elem> {
    let p = f.characteristic() as usize;
    let out = a.iter().step_by(p).map(|&c| f.pth_root(c)).collect();
    trim(f, out)
}

/// Distinct prime factors in increasing order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && prime_factors(n) == [n]
}

pub fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}
