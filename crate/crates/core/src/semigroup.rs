//! Numerical semigroups and their basic invariants.
//!
//! A numerical semigroup `H` is stored by its membership bits on `[0, c]`,
//! where `c` is the conductor. Every integer at or above `c` is a member and
//! is never stored.

use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};

/// A cofinite additive submonoid of the natural numbers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    gens: Vec<i32>,
    frobenius: i32,
    genus: u32,
    members: FixedBitSet,
}

/// The numerical invariants every report starts from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoreInvariants {
    #[serde(rename = "e")]
    pub multiplicity: i32,
    #[serde(rename = "edim")]
    pub embedding_dim: u32,
    #[serde(rename = "type")]
    pub semigroup_type: u32,
    pub genus: u32,
    pub frobenius: i32,
    pub conductor: i32,
    #[serde(rename = "n_of_h")]
    pub n_of_h: u32,
}

fn gcd(mut a: i32, mut b: i32) -> i32 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a.abs()
}

impl NumericalSemigroup {
    /// The semigroup of all natural numbers, `k[[t]]` in ring terms.
    pub fn naturals() -> Self {
        let mut members = FixedBitSet::with_capacity(1);
        members.insert(0);
        NumericalSemigroup {
            gens: vec![1],
            frobenius: -1,
            genus: 0,
            members,
        }
    }

    /// Builds the semigroup generated by `gens` and recomputes its minimal
    /// generating set.
    pub fn from_generators(gens: &[i32]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if let Some(&bad) = gens.iter().find(|&&g| g <= 0) {
            return Err(Error::NonPositiveGenerator(bad));
        }
        let d = gens.iter().fold(0, |acc, &g| gcd(acc, g));
        if d != 1 {
            return Err(Error::GcdNotOne(d));
        }
        let smallest = *gens.iter().min().unwrap() as usize;

        // Sieve until `smallest` consecutive members appear; from there on
        // every integer is a member.
        let mut sieve: Vec<bool> = vec![true];
        let mut run = 1usize;
        let mut n = 0usize;
        while run < smallest {
            n += 1;
            let member = gens
                .iter()
                .any(|&g| (g as usize) <= n && sieve[n - g as usize]);
            sieve.push(member);
            run = if member { run + 1 } else { 0 };
        }
        let conductor = n + 1 - run;
        let mut members = FixedBitSet::with_capacity(conductor + 1);
        for (i, &m) in sieve.iter().enumerate().take(conductor) {
            members.set(i, m);
        }
        members.insert(conductor);
        Ok(Self::from_members(members))
    }

    /// Builds the semigroup from membership bits on `[0, c]` whose last bit
    /// is set and whose bit before that (if any) is clear. Closure under
    /// addition is the caller's obligation.
    fn from_members(members: FixedBitSet) -> Self {
        let conductor = members.len() - 1;
        let genus = (conductor - members.count_ones(..conductor)) as u32;
        let mut sg = NumericalSemigroup {
            gens: Vec::new(),
            frobenius: conductor as i32 - 1,
            genus,
            members,
        };
        sg.gens = sg.compute_minimal_generators();
        sg
    }

    fn compute_minimal_generators(&self) -> Vec<i32> {
        let e = self.multiplicity_from_bits();
        let limit = (self.conductor() + e).max(2);
        (1..limit)
            .filter(|&x| self.contains(x))
            .filter(|&x| !(1..=x / 2).any(|a| self.contains(a) && self.contains(x - a)))
            .collect()
    }

    fn multiplicity_from_bits(&self) -> i32 {
        (1..=self.conductor())
            .find(|&x| self.contains(x))
            .unwrap_or(1)
    }

    #[inline]
    pub fn contains(&self, z: i32) -> bool {
        if z < 0 {
            return false;
        }
        let c = self.conductor();
        z >= c || self.members.contains(z as usize)
    }

    pub fn generators(&self) -> &[i32] {
        &self.gens
    }

    /// Largest gap; −1 for the naturals.
    pub fn frobenius(&self) -> i32 {
        self.frobenius
    }

    pub fn conductor(&self) -> i32 {
        self.frobenius + 1
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn multiplicity(&self) -> i32 {
        self.gens[0]
    }

    pub fn embedding_dim(&self) -> u32 {
        self.gens.len() as u32
    }

    /// Number of elements below the conductor.
    pub fn n_of_h(&self) -> u32 {
        self.conductor() as u32 - self.genus
    }

    pub fn is_naturals(&self) -> bool {
        self.frobenius < 0
    }

    pub fn gaps(&self) -> Vec<i32> {
        (1..self.conductor())
            .filter(|&z| !self.contains(z))
            .collect()
    }

    /// Elements strictly below the conductor.
    pub fn small_elements(&self) -> Vec<i32> {
        (0..self.conductor())
            .filter(|&z| self.contains(z))
            .collect()
    }

    /// `w[i]` is the least element of `H` congruent to `i` modulo `n`.
    pub fn apery_set(&self, n: i32) -> Result<Vec<i32>> {
        if n <= 0 || !self.contains(n) {
            return Err(Error::NotMember(n));
        }
        Ok((0..n)
            .map(|i| {
                let mut x = i;
                while !self.contains(x) {
                    x += n;
                }
                x
            })
            .collect())
    }

    /// Gaps `a` with `a + (H \ {0}) ⊆ H`. By convention `PF(N) = {-1}`.
    pub fn pseudo_frobenius(&self) -> Vec<i32> {
        if self.is_naturals() {
            return vec![-1];
        }
        self.gaps()
            .into_iter()
            .filter(|&a| self.gens.iter().all(|&g| self.contains(a + g)))
            .collect()
    }

    pub fn semigroup_type(&self) -> u32 {
        self.pseudo_frobenius().len() as u32
    }

    pub fn is_symmetric(&self) -> bool {
        2 * self.genus as i32 == self.frobenius + 1
    }

    pub fn has_minimal_multiplicity(&self) -> bool {
        self.multiplicity() == self.embedding_dim() as i32
    }

    /// `S ∪ {F(S)}`. For symmetric `S` this is the semigroup of the
    /// endomorphism ring of the maximal ideal.
    pub fn unitary_extension(&self) -> Result<Self> {
        if self.is_naturals() {
            return Err(Error::AlreadyFull);
        }
        self.with_elements(&[self.frobenius])
    }

    /// The semigroup generated by `H` together with `extra`.
    pub fn with_elements(&self, extra: &[i32]) -> Result<Self> {
        let mut gens = self.gens.clone();
        gens.extend_from_slice(extra);
        Self::from_generators(&gens)
    }

    /// `H \ {a}` for a minimal generator `a`.
    pub fn remove_minimal_generator(&self, a: i32) -> Result<Self> {
        if self.gens.binary_search(&a).is_err() {
            return Err(Error::NotMinimalGenerator(a));
        }
        let conductor = (self.frobenius.max(a) + 1) as usize;
        let mut members = FixedBitSet::with_capacity(conductor + 1);
        for z in 0..=conductor {
            members.set(z, z != a as usize && self.contains(z as i32));
        }
        Ok(Self::from_members(members))
    }

    pub fn core_invariants(&self) -> CoreInvariants {
        CoreInvariants {
            multiplicity: self.multiplicity(),
            embedding_dim: self.embedding_dim(),
            semigroup_type: self.semigroup_type(),
            genus: self.genus,
            frobenius: self.frobenius,
            conductor: self.conductor(),
            n_of_h: self.n_of_h(),
        }
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses a comma-separated list of integers such as `4,5,7`.
pub fn parse_int_list(s: &str) -> Result<Vec<i32>> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty list".into()));
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i32>()
                .map_err(|_| Error::Parse(format!("`{}` is not an integer", t.trim())))
        })
        .collect()
}

impl FromStr for NumericalSemigroup {
    type Err = Error;

    /// Accepts `4,5,7` and the display form `<4,5,7>`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix('<')
            .and_then(|t| t.strip_suffix('>'))
            .unwrap_or(s);
        if !inner.chars().all(|c| c.is_ascii_digit() || c == ',') {
            return Err(Error::Parse(format!("`{s}` is not a generator list")));
        }
        Self::from_generators(&parse_int_list(inner)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[i32]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    /// Membership by brute force: representable as a nonnegative combination.
    fn brute_member(gens: &[i32], z: i32) -> bool {
        let mut reach = vec![false; z as usize + 1];
        reach[0] = true;
        for n in 1..=z as usize {
            reach[n] = gens
                .iter()
                .any(|&g| g as usize <= n && reach[n - g as usize]);
        }
        reach[z as usize]
    }

    #[test]
    fn three_four_five() {
        let h = sg(&[3, 4, 5]);
        assert_eq!(h.frobenius(), 2);
        assert_eq!(h.genus(), 2);
        assert_eq!(h.gaps(), vec![1, 2]);
        assert_eq!(h.generators(), &[3, 4, 5]);
    }

    #[test]
    fn naturals_conventions() {
        let n = sg(&[1]);
        assert_eq!(n, NumericalSemigroup::naturals());
        assert_eq!(n.frobenius(), -1);
        assert_eq!(n.conductor(), 0);
        assert_eq!(n.genus(), 0);
        assert_eq!(n.pseudo_frobenius(), vec![-1]);
        assert_eq!(n.semigroup_type(), 1);
        assert!(n.is_symmetric());
        assert!(n.has_minimal_multiplicity());
        assert_eq!(n.apery_set(1).unwrap(), vec![0]);
        assert_eq!(n.unitary_extension(), Err(Error::AlreadyFull));
    }

    #[test]
    fn four_five_seven() {
        let h = sg(&[4, 5, 7]);
        assert_eq!(h.frobenius(), 6);
        assert_eq!(h.gaps(), vec![1, 2, 3, 6]);
        assert_eq!(h.genus(), 4);
        assert_eq!(h.apery_set(4).unwrap(), vec![0, 5, 10, 7]);
        assert_eq!(h.pseudo_frobenius(), vec![3, 6]);
        assert!(!h.has_minimal_multiplicity());
    }

    #[test]
    fn gcd_must_be_one() {
        assert_eq!(
            NumericalSemigroup::from_generators(&[4, 6]),
            Err(Error::GcdNotOne(2))
        );
        assert_eq!(
            NumericalSemigroup::from_generators(&[]),
            Err(Error::EmptyGenerators)
        );
        assert_eq!(
            NumericalSemigroup::from_generators(&[0, 3]),
            Err(Error::NonPositiveGenerator(0))
        );
    }

    #[test]
    fn conductor_beyond_twice_max_generator() {
        // F(<5,7>) = 23 exceeds 2 * 7.
        let h = sg(&[5, 7]);
        assert_eq!(h.frobenius(), 23);
        assert!(h.is_symmetric());
    }

    #[test]
    fn redundant_generators_dropped() {
        assert_eq!(sg(&[6, 3, 4, 5, 8]).generators(), &[3, 4, 5]);
        assert_eq!(sg(&[2, 3, 4, 5]).generators(), &[2, 3]);
    }

    #[test]
    fn apery_examples() {
        assert_eq!(sg(&[5, 6, 7]).apery_set(5).unwrap(), vec![0, 6, 7, 13, 14]);
        assert_eq!(sg(&[4, 5, 7]).apery_set(3), Err(Error::NotMember(3)));
        assert_eq!(sg(&[4, 5, 7]).apery_set(0), Err(Error::NotMember(0)));
    }

    #[test]
    fn symmetry_examples() {
        assert!(sg(&[3, 4]).is_symmetric());
        assert_eq!(sg(&[3, 4]).pseudo_frobenius(), vec![5]);
        assert!(!sg(&[3, 4, 5]).is_symmetric());
        assert!(sg(&[2, 3]).is_symmetric());
    }

    #[test]
    fn minimal_multiplicity_examples() {
        assert!(sg(&[3, 4, 5]).has_minimal_multiplicity());
        assert!(!sg(&[4, 5, 7]).has_minimal_multiplicity());
    }

    #[test]
    fn unitary_extensions() {
        assert_eq!(sg(&[3, 4]).unitary_extension().unwrap(), sg(&[3, 4, 5]));
        assert_eq!(sg(&[4, 5]).unitary_extension().unwrap(), sg(&[4, 5, 11]));
        assert_eq!(
            sg(&[2, 3]).unitary_extension().unwrap(),
            NumericalSemigroup::naturals()
        );
    }

    #[test]
    fn remove_generators() {
        let h = sg(&[3, 4, 5]);
        assert_eq!(h.remove_minimal_generator(5).unwrap(), sg(&[3, 4]));
        assert_eq!(h.remove_minimal_generator(3).unwrap(), sg(&[4, 5, 6, 7]));
        assert_eq!(
            h.remove_minimal_generator(6),
            Err(Error::NotMinimalGenerator(6))
        );
        assert_eq!(
            NumericalSemigroup::naturals()
                .remove_minimal_generator(1)
                .unwrap(),
            sg(&[2, 3])
        );
    }

    #[test]
    fn parse_forms() {
        let h: NumericalSemigroup = "4,5,7".parse().unwrap();
        assert_eq!(h.to_string(), "<4,5,7>");
        assert_eq!("<4,5,7>".parse::<NumericalSemigroup>().unwrap(), h);
        assert!("4,-5".parse::<NumericalSemigroup>().is_err());
        assert!("4,,5".parse::<NumericalSemigroup>().is_err());
    }

    #[test]
    fn membership_matches_brute_force() {
        for gens in [&[3, 5][..], &[4, 6, 9], &[5, 8, 11, 13], &[7, 9, 10]] {
            let h = sg(gens);
            for z in 0..3 * h.conductor() + 5 {
                assert_eq!(h.contains(z), brute_member(gens, z), "{gens:?} {z}");
            }
        }
    }
}
