//! Exact rational values used by every bound; no floating point enters any
//! verified comparison.

pub type Rat = num_rational::Ratio<i64>;

/// Shorthand constructor.
pub fn rat(numer: i64, denom: i64) -> Rat {
    Rat::new(numer, denom)
}

/// Renders a rational as `p/q` (denominator kept even when it is one).
pub fn format_rat(value: Rat) -> String {
    format!("{}/{}", value.numer(), value.denom())
}
