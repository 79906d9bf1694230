//! Additive and multiplicative characters of the subfield F_q.

use super::{Element, FieldCtx};
use num_complex::Complex64;
use std::f64::consts::TAU;

/// χ_t(x) = exp(2πi·t·Tr_{F_q/F_p}(x)/p).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AdditiveChar {
    pub t: u32,
}

/// ψ_j(g_q^s) = exp(2πi·j·s/(q−1)) for g_q the generator of F_q^*.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MultiplicativeChar {
    pub j: u32,
}

impl AdditiveChar {
    pub fn is_trivial(self) -> bool {
        self.t == 0
    }

    /// `x` must lie in F_q.
    pub fn eval(self, ctx: &FieldCtx, x: Element) -> Complex64 {
        let tr = ctx.subfield_trace(x, ctx.m(), 1).index();
        let p = ctx.p() as u64;
        let k = (tr as u64 * self.t as u64) % p;
        Complex64::from_polar(1.0, TAU * k as f64 / p as f64)
    }
}

impl MultiplicativeChar {
    pub fn is_trivial(self) -> bool {
        self.j == 0
    }

    /// `x` must lie in F_q; the value at zero is 0.
    pub fn eval(self, ctx: &FieldCtx, x: Element) -> Complex64 {
        match ctx.base_log(x) {
            None => Complex64::new(0.0, 0.0),
            Some(s) => {
                let order = (ctx.q() - 1) as u64;
                let k = (s * self.j as u64) % order;
                Complex64::from_polar(1.0, TAU * k as f64 / order as f64)
            }
        }
    }
}

impl FieldCtx {
    /// All `p` additive characters of F_q, trivial first.
    pub fn additive_chars(&self) -> Vec<AdditiveChar> {
        (0..self.p()).map(|t| AdditiveChar { t }).collect()
    }

    /// All `q − 1` multiplicative characters of F_q, trivial first.
    pub fn multiplicative_chars(&self) -> Vec<MultiplicativeChar> {
        (0..self.q() - 1).map(|j| MultiplicativeChar { j }).collect()
    }

    /// Discrete log in F_q^* to the base [`FieldCtx::base_generator`].
    pub fn base_log(&self, x: Element) -> Option<u64> {
        let l = self.discrete_log(x)?;
        let step = ((self.size() - 1) / (self.q() - 1)) as u64;
        debug_assert_eq!(l % step, 0, "element outside F_q");
        Some(l / step)
    }
}
