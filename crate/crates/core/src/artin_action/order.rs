use std::fmt;

use serde::{Deserialize, Serialize};

use super::{artin_endo, OracleError, QuotientEndo};
use crate::braid_words::{canonical_word, xi, BraidWord, CanonicalName};

/// Total image length beyond which power iteration gives up.
pub const ORDER_LENGTH_CAP: usize = 200_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum OrderResult {
    Exact { order: u64 },
    /// Order is `m` or `2m`; the central bit cannot be read off.
    AmbiguousCentral { m: u64, doubled: u64 },
    NoOrderWithinBound { bound: u64 },
}

impl fmt::Display for OrderResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderResult::Exact { order } => write!(f, "{order}"),
            OrderResult::AmbiguousCentral { m, doubled } => write!(f, "{m} or {doubled} (central bit undetermined)"),
            OrderResult::NoOrderWithinBound { bound } => write!(f, "none within {bound}"),
        }
    }
}

/// Default search bound `2n + 2`.
pub fn projective_order(w: &BraidWord) -> Result<OrderResult, OracleError> {
    projective_order_with_bound(w, 2 * w.n() as u64 + 2)
}

/// Least `m ≤ bound` with `artin_endo(w)^m` trivial in `Out(Q)`.
pub fn projective_order_with_bound(w: &BraidWord, bound: u64) -> Result<OrderResult, OracleError> {
    let e = artin_endo(w);
    let mut p: QuotientEndo = e.clone();
    for m in 1..=bound {
        if p.is_identity() {
            return Ok(OrderResult::Exact { order: m });
        }
        if m == bound {
            break;
        }
        p = p.compose(&e);
        if p.total_len() > ORDER_LENGTH_CAP {
            return Err(OracleError::LengthCap { limit: ORDER_LENGTH_CAP });
        }
    }
    Ok(OrderResult::NoOrderWithinBound { bound })
}

/// Order in `B_n(S²)` from the projective order `m` and `ξ`.
///
/// For `m` even the `m`-th power is `Δ²`, the only element of order 2, so the
/// order is `2m`. For `m` odd and `n` odd, `ξ(Δ²) = n-1 ≠ 0` decides. For
/// `m` odd and `n` even nothing homomorphic separates `w^m = 1` from
/// `w^m = Δ²`, and the result is ambiguous unless `w` is literally the empty
/// word or the catalogue full twist.
pub fn full_order(w: &BraidWord) -> Result<OrderResult, OracleError> {
    let n = w.n();
    if w.is_empty() {
        return Ok(OrderResult::Exact { order: 1 });
    }
    let m = match projective_order(w)? {
        OrderResult::Exact { order } => order,
        other => return Ok(other),
    };
    if m % 2 == 0 {
        return Ok(OrderResult::Exact { order: 2 * m });
    }
    if n % 2 == 1 {
        let v = xi(w).scale(m as i64);
        let half = (n - 1) as u64;
        return match v.value() {
            0 => Ok(OrderResult::Exact { order: m }),
            x if x == half => Ok(OrderResult::Exact { order: 2 * m }),
            x => Err(OracleError::InconsistentInvariant { m, value: x, modulus: v.modulus() }),
        };
    }
    if m == 1 && canonical_word(CanonicalName::FullTwist, n).is_ok_and(|d2| d2 == *w) {
        return Ok(OrderResult::Exact { order: 2 });
    }
    Ok(OrderResult::AmbiguousCentral { m, doubled: 2 * m })
}
