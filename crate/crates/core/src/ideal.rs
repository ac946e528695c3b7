//! Relative ideals of a numerical semigroup: the exponent sets of monomial
//! fractional ideals of `k[[H]]`.
//!
//! A [`RelativeIdeal`] is a set `E ⊆ Z` that is bounded below and contains
//! every integer from some point on. The product of monomial ideals is the
//! sum of exponent sets, the colon `J : I` is `{z | z + I ⊆ J}`, and two
//! monomial ideals are isomorphic exactly when one is a translate of the
//! other.

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::semigroup::{parse_int_list, NumericalSemigroup};

/// A set of integers, bounded below and cofinite above.
///
/// `min` is the least element and `tail` the least integer with
/// `[tail, ∞) ⊆ E`. Bit `i` records membership of `min + i` for
/// `min + i < tail`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RelativeIdeal {
    min: i32,
    tail: i32,
    bits: FixedBitSet,
}

impl RelativeIdeal {
    /// Builds the set whose members are `z >= hi` together with those
    /// `z ∈ [lo, hi)` satisfying `member`.
    pub(crate) fn from_window(lo: i32, hi: i32, member: impl Fn(i32) -> bool) -> Self {
        let flags: Vec<bool> = (lo..hi).map(&member).collect();
        let min = flags.iter().position(|&m| m).map_or(hi, |i| lo + i as i32);
        let tail = flags
            .iter()
            .rposition(|&m| !m)
            .map_or(lo, |i| lo + i as i32 + 1)
            .max(min);
        let mut bits = FixedBitSet::with_capacity((tail - min) as usize);
        for z in min..tail {
            bits.set((z - min) as usize, flags[(z - lo) as usize]);
        }
        RelativeIdeal { min, tail, bits }
    }

    /// `H` itself, the principal ideal generated by 1.
    pub fn whole(h: &NumericalSemigroup) -> Self {
        Self::from_window(0, h.conductor(), |z| h.contains(z))
    }

    /// `M = H \ {0}`.
    pub fn maximal(h: &NumericalSemigroup) -> Self {
        Self::from_window(1, h.conductor().max(1), |z| h.contains(z))
    }

    /// `⋃ (g + H)` over the given generators.
    pub fn from_generators(h: &NumericalSemigroup, gens: &[i32]) -> Result<Self> {
        let lo = *gens.iter().min().ok_or(Error::EmptyGenerators)?;
        let hi = gens.iter().max().unwrap() + h.conductor();
        Ok(Self::from_window(lo, hi, |z| {
            gens.iter().any(|&g| h.contains(z - g))
        }))
    }

    #[inline]
    pub fn contains(&self, z: i32) -> bool {
        if z >= self.tail {
            true
        } else if z < self.min {
            false
        } else {
            self.bits.contains((z - self.min) as usize)
        }
    }

    pub fn min_elt(&self) -> i32 {
        self.min
    }

    /// Least integer from which on every integer is a member.
    pub fn tail(&self) -> i32 {
        self.tail
    }

    /// Members below the tail, in increasing order.
    pub fn elements_below_tail(&self) -> Vec<i32> {
        (self.min..self.tail)
            .filter(|&z| self.contains(z))
            .collect()
    }

    /// Minimal generators as an `H`-ideal: members not in `E + M`.
    pub fn minimal_generators(&self, h: &NumericalSemigroup) -> Vec<i32> {
        let top = self.tail + h.multiplicity();
        (self.min..top)
            .filter(|&z| self.contains(z))
            .filter(|&z| !h.generators().iter().any(|&g| self.contains(z - g)))
            .collect()
    }

    pub fn translate(&self, c: i32) -> Self {
        RelativeIdeal {
            min: self.min + c,
            tail: self.tail + c,
            bits: self.bits.clone(),
        }
    }

    /// `E + F = {e + f}`, the exponent set of the product ideal.
    pub fn add(&self, other: &Self) -> Self {
        let lo = self.min + other.min;
        let hi = (self.tail + other.min).min(self.min + other.tail);
        Self::from_window(lo, hi, |z| {
            (self.min..=z - other.min).any(|e| self.contains(e) && other.contains(z - e))
        })
    }

    /// `self − other = {z | z + other ⊆ self}`, the colon ideal.
    pub fn quotient(&self, other: &Self) -> Self {
        let lo = self.min - other.min;
        let hi = self.tail - other.min;
        Self::from_window(lo, hi, |z| {
            z + other.tail >= self.tail
                && (other.min..other.tail).all(|f| !other.contains(f) || self.contains(z + f))
        })
    }

    /// `Some(c)` with `other = self + c`, if any.
    pub fn is_isomorphic(&self, other: &Self) -> Option<i32> {
        let c = other.min - self.min;
        (self.tail + c == other.tail && self.bits == other.bits).then_some(c)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        (self.min..self.tail.max(other.tail)).all(|z| !self.contains(z) || other.contains(z))
    }

    /// Least `r >= 1` with `(r + 1)E = rE` after translating `E` to start at 0.
    pub fn reduction_number(&self) -> u32 {
        let base = self.translate(-self.min);
        let mut power = base.clone();
        let mut r = 1;
        loop {
            let next = power.add(&base);
            if next == power {
                return r;
            }
            power = next;
            r += 1;
        }
    }
}

/// `K(H) = {F(H) − z | z ∉ H}`, normalized with least element 0 and `H ⊆ K`.
pub fn canonical_ideal(h: &NumericalSemigroup) -> RelativeIdeal {
    let f = h.frobenius();
    RelativeIdeal::from_window(0, f + 1, |z| !h.contains(f - z))
}

/// The canonical dual `E† = K − E`.
pub fn dual(h: &NumericalSemigroup, e: &RelativeIdeal) -> RelativeIdeal {
    canonical_ideal(h).quotient(e)
}

/// `#(H \ E)` for an ideal `E ⊆ H`.
pub fn colength(h: &NumericalSemigroup, e: &RelativeIdeal) -> Result<u32> {
    if e.min < 0 {
        return Err(Error::NotContained);
    }
    let top = e.tail.max(h.conductor());
    let mut count = 0;
    for z in 0..top {
        match (h.contains(z), e.contains(z)) {
            (false, true) => return Err(Error::NotContained),
            (true, false) => count += 1,
            _ => {}
        }
    }
    Ok(count)
}

/// The trace of the canonical module, `K + (H − K)`.
pub fn trace_of_canonical(h: &NumericalSemigroup) -> RelativeIdeal {
    let k = canonical_ideal(h);
    let hk = RelativeIdeal::whole(h).quotient(&k);
    k.add(&hk)
}

pub fn canonical_index(h: &NumericalSemigroup) -> u32 {
    canonical_ideal(h).reduction_number()
}

/// `M ≅ M : M`, an ideal-theoretic test for minimal multiplicity.
pub fn max_ideal_is_endomorphism_translate(h: &NumericalSemigroup) -> bool {
    let m = RelativeIdeal::maximal(h);
    m.is_isomorphic(&m.quotient(&m)).is_some()
}

impl fmt::Display for RelativeIdeal {
    /// Elements below the tail, then the tail: `{0, 3, 4, 5} ∪ {≥ 7}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let below = self.elements_below_tail();
        if !below.is_empty() {
            let parts: Vec<String> = below.iter().map(|z| z.to_string()).collect();
            write!(f, "{{{}}} ∪ ", parts.join(", "))?;
        }
        write!(f, "{{≥ {}}}", self.tail)
    }
}

impl fmt::Debug for RelativeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses the ideal text form `gens@H`, e.g. `4,5@4,5,11`.
pub fn parse_ideal(s: &str) -> Result<(NumericalSemigroup, RelativeIdeal)> {
    let (gens, ambient) = s
        .split_once('@')
        .ok_or_else(|| Error::Parse(format!("`{s}` is not of the form gens@H")))?;
    let h: NumericalSemigroup = ambient.parse()?;
    let e = RelativeIdeal::from_generators(&h, &parse_int_list(gens)?)?;
    Ok((h, e))
}
