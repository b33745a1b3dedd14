//! Right-nested exponent towers `a1 ^ (a2 ^ (... ^ ak))` over big integers.
//!
//! Values whose bit length would exceed a budget are kept as an estimate of
//! `log2` of their bit length instead.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

/// Default budget for exact values, in bits.
pub const DEFAULT_BIT_BUDGET: u64 = 1 << 24;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum TowerValue {
    Exact(#[serde(serialize_with = "crate::tower::ser_big")] BigUint),
    /// Too large for the budget; carries `log2` of the bit length.
    Estimate { log2_bits: f64 },
}

pub(crate) fn ser_big<S: serde::Serializer>(x: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

impl TowerValue {
    pub fn exact(&self) -> Option<&BigUint> {
        match self {
            TowerValue::Exact(x) => Some(x),
            TowerValue::Estimate { .. } => None,
        }
    }

    /// `log2 log2` of the value (`-inf` for values below 2).
    pub fn log2_log2(&self) -> f64 {
        match self {
            TowerValue::Exact(x) => log2_big(x).log2(),
            TowerValue::Estimate { log2_bits } => *log2_bits,
        }
    }
}

/// `log2 x` for any size of `x`; `-inf` at zero.
pub fn log2_big(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 64 {
        return (x.to_u64().expect("fits in 64 bits") as f64).log2();
    }
    let top = (x >> (bits - 64)).to_u64().expect("64 leading bits") as f64;
    top.log2() + (bits - 64) as f64
}

/// `base ^ exp` under the bit budget.
pub fn pow(base: &BigUint, exp: &TowerValue, budget: u64) -> TowerValue {
    if base.is_zero() {
        let exp_zero = exp.exact().is_some_and(Zero::is_zero);
        return TowerValue::Exact(if exp_zero { BigUint::one() } else { BigUint::zero() });
    }
    if base.is_one() {
        return TowerValue::Exact(BigUint::one());
    }
    let ll_base = log2_big(base).log2();
    match exp {
        TowerValue::Exact(e) => {
            let fits = e.to_u64().filter(|&e| e.checked_mul(base.bits()).is_some_and(|b| b <= budget));
            match fits {
                Some(e) => TowerValue::Exact(num_traits::pow::Pow::pow(base, e)),
                None => TowerValue::Estimate { log2_bits: log2_big(e) + ll_base },
            }
        }
        TowerValue::Estimate { log2_bits } => TowerValue::Estimate { log2_bits: log2_bits.exp2() + ll_base },
    }
}

/// Evaluates `levels[0] ^ (levels[1] ^ (...))`; an empty tower is 1.
pub fn eval(levels: &[BigUint], budget: u64) -> TowerValue {
    let Some((top, rest)) = levels.split_last() else {
        return TowerValue::Exact(BigUint::one());
    };
    rest.iter().rev().fold(TowerValue::Exact(top.clone()), |acc, b| pow(b, &acc, budget))
}
