//! Exact weights.
//!
//! Weights are arbitrary nonnegative rationals. Hot loops (brute-force value,
//! branch-and-bound) run on integer numerators over a shared denominator.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{input, Result};

pub type Weight = BigRational;

/// Integer numerators over one common denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scaled {
    pub numerators: Vec<u128>,
    pub denominator: BigInt,
}

impl Scaled {
    pub fn new(weights: &[Weight]) -> Result<Self> {
        let mut denominator = BigInt::one();
        for w in weights {
            if w.is_negative() {
                return input(format!("negative weight {w}"));
            }
            denominator = denominator.lcm(w.denom());
        }
        let numerators = weights
            .iter()
            .map(|w| {
                (w.numer() * (&denominator / w.denom()))
                    .to_u128()
                    .ok_or_else(|| crate::Error::Input(format!("weight {w} too fine to scale")))
            })
            .collect::<Result<Vec<_>>>()?;
        if numerators
            .iter()
            .try_fold(0u128, |acc, &n| acc.checked_add(n))
            .is_none()
        {
            return input("scaled weights overflow 128 bits");
        }
        Ok(Self {
            numerators,
            denominator,
        })
    }

    pub fn to_weight(&self, numerator: u128) -> Weight {
        BigRational::new(BigInt::from(numerator), self.denominator.clone())
    }
}

pub fn sum<'a, I: IntoIterator<Item = &'a Weight>>(iter: I) -> Weight {
    iter.into_iter().fold(Weight::zero(), |acc, w| acc + w)
}

/// `num/den` (or a bare integer) as used in the JSON formats.
pub fn format(w: &Weight) -> String {
    format!("{}/{}", w.numer(), w.denom())
}

pub fn parse(s: &str) -> Result<Weight> {
    let parse_int = |t: &str| {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| crate::Error::Input(format!("bad rational {s:?}")))
    };
    let w = match s.split_once('/') {
        Some((n, d)) => {
            let d = parse_int(d)?;
            if d.is_zero() {
                return input(format!("zero denominator in {s:?}"));
            }
            BigRational::new(parse_int(n)?, d)
        }
        None => BigRational::from_integer(parse_int(s)?),
    };
    Ok(w)
}

pub fn to_f64(w: &Weight) -> f64 {
    w.to_f64().unwrap_or(f64::NAN)
}
