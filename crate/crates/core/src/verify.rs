//! Structural theorems about self-dual maximal ideals, run as universally
//! quantified checks over every numerical semigroup up to a genus bound.
//!
//! The genus tree is split into subtrees that are checked in parallel. Each
//! subtree reports its first failure in depth-first order and the
//! coordinator keeps the one with the smallest path, so the outcome does not
//! depend on the number of workers.

use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::classify::{
    check_gmp_endo, classify, hypersurface_forms, is_almost_symmetric, is_nearly_gorenstein,
    is_uesy, max_ideal_self_dual, minimal_multiplicity, quasi_decomposable_witness,
    theorem_a_conditions, ClassificationReport,
};
use crate::error::{Error, Result};
use crate::ideal::{canonical_index, RelativeIdeal};
use crate::search::{
    bg_bounds, enumerate_by_genus, min_selfdual_ideal_colength, split_at_depth, walk_subtree,
};
use crate::semigroup::NumericalSemigroup;

/// Registered checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TheoremId {
    /// bg ≤ 1, endomorphism ring of a Gorenstein maximal ideal, `M ≅ M†`,
    /// `0 → ω → m → k → 0`, and a canonical ideal of colength ≤ 2 coincide.
    SelfDualMaxEquivalences,
    /// Minimal multiplicity with bg ≤ 1, and its equivalent forms.
    MinimalMultiplicityEquivalences,
    /// bg ≤ 2 iff a self-dual ideal of colength ≤ 2 exists (monomial level).
    SelfDualIdealBgTwo,
    /// Nearly Gorenstein with `M : M` of type 2 or 3.
    EndoTypeNearlyGorenstein,
    /// `M : M` Gorenstein iff almost Gorenstein with minimal multiplicity.
    GorensteinEndoRing,
    /// Nearly Gorenstein with multiplicity at most 4.
    NearlyGorensteinLowMultiplicity,
    /// `ℓ(M:M / R) = r(R)` and `M : M = R : M`.
    EndoColengthType,
    /// A self-dual maximal ideal forces nearly Gorenstein.
    SelfDualNearlyGorenstein,
    /// UESY semigroups with core multiplicity > 2 have quasi-decomposable
    /// maximal ideal.
    UesyQuasiDecomposable,
    /// The two characterizations of hypersurface endomorphism rings agree.
    HypersurfaceEndo,
    /// `M ≅ M†` iff UESY.
    UesySelfDual,
}

impl TheoremId {
    pub const ALL: [TheoremId; 11] = [
        TheoremId::SelfDualMaxEquivalences,
        TheoremId::MinimalMultiplicityEquivalences,
        TheoremId::SelfDualIdealBgTwo,
        TheoremId::EndoTypeNearlyGorenstein,
        TheoremId::GorensteinEndoRing,
        TheoremId::NearlyGorensteinLowMultiplicity,
        TheoremId::EndoColengthType,
        TheoremId::SelfDualNearlyGorenstein,
        TheoremId::UesyQuasiDecomposable,
        TheoremId::HypersurfaceEndo,
        TheoremId::UesySelfDual,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::SelfDualMaxEquivalences => "self-dual-max-equivalences",
            TheoremId::MinimalMultiplicityEquivalences => "minimal-multiplicity-equivalences",
            TheoremId::SelfDualIdealBgTwo => "self-dual-ideal-bg-two",
            TheoremId::EndoTypeNearlyGorenstein => "endo-type-nearly-gorenstein",
            TheoremId::GorensteinEndoRing => "gorenstein-endo-ring",
            TheoremId::NearlyGorensteinLowMultiplicity => "nearly-gorenstein-low-multiplicity",
            TheoremId::EndoColengthType => "endo-colength-type",
            TheoremId::SelfDualNearlyGorenstein => "self-dual-nearly-gorenstein",
            TheoremId::UesyQuasiDecomposable => "uesy-quasi-decomposable",
            TheoremId::HypersurfaceEndo => "hypersurface-endo",
            TheoremId::UesySelfDual => "uesy-self-dual",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            TheoremId::SelfDualMaxEquivalences => {
                "bg<=1 <=> Gorenstein or End of a Gorenstein maximal ideal <=> Gorenstein or m~m^dag \
                 <=> Gorenstein or 0->w->m->k->0 <=> canonical ideal of colength <=2"
            }
            TheoremId::MinimalMultiplicityEquivalences => {
                "bg<=1 with minimal multiplicity <=> e<=2 or (almost Gorenstein, bg=1) <=> \
                 m~m^dag and almost Gorenstein <=> m~m^dag and minimal multiplicity <=> \
                 almost Gorenstein and minimal multiplicity <=> End of a Gorenstein S with \
                 e(S)<=edim S+1 <=> m~m^dag and canonical index <=2"
            }
            TheoremId::SelfDualIdealBgTwo => {
                "monomial shadow: a self-dual ideal of colength <=2 exists <=> certified bg upper bound <=2"
            }
            TheoremId::EndoTypeNearlyGorenstein => {
                "nearly Gorenstein and type(m:m)=2 => almost Gorenstein and m not self-dual; \
                 type(m:m)=3 => almost Gorenstein or m self-dual"
            }
            TheoremId::GorensteinEndoRing => {
                "m:m Gorenstein <=> almost Gorenstein with minimal multiplicity"
            }
            TheoremId::NearlyGorensteinLowMultiplicity => {
                "nearly Gorenstein with e<=4 => almost Gorenstein or m self-dual"
            }
            TheoremId::EndoColengthType => "length(m:m / R) = type(R) and m:m = R:m",
            TheoremId::SelfDualNearlyGorenstein => "m self-dual => nearly Gorenstein",
            TheoremId::UesyQuasiDecomposable => {
                "UESY with core multiplicity >2 => F+a_i-a_1 and 2F-a_1 lie in the core"
            }
            TheoremId::HypersurfaceEndo => {
                "type 2 with canonical I, I^2=mI, colength 2 <=> edim 3 with canonical I, I^2=m^2"
            }
            TheoremId::UesySelfDual => "m self-dual <=> H is UESY",
        }
    }

    /// `Err(detail)` when `h` is a counterexample.
    pub fn check(self, h: &NumericalSemigroup) -> std::result::Result<(), String> {
        let r = match self {
            TheoremId::SelfDualMaxEquivalences => check_self_dual_max(h),
            TheoremId::MinimalMultiplicityEquivalences => check_minimal_multiplicity(h),
            TheoremId::SelfDualIdealBgTwo => check_bg_two(h),
            TheoremId::EndoTypeNearlyGorenstein => check_endo_type(h),
            TheoremId::GorensteinEndoRing => check_gorenstein_endo(h),
            TheoremId::NearlyGorensteinLowMultiplicity => check_low_multiplicity(h),
            TheoremId::EndoColengthType => check_endo_colength(h),
            TheoremId::SelfDualNearlyGorenstein => check_self_dual_nearly(h),
            TheoremId::UesyQuasiDecomposable => check_quasi_decomposable(h),
            TheoremId::HypersurfaceEndo => check_hypersurface(h),
            TheoremId::UesySelfDual => max_ideal_self_dual(h).map(|_| Ok(())),
        };
        match r {
            Ok(Ok(())) => Ok(()),
            Ok(Err(detail)) => Err(detail),
            Err(e) => Err(e.to_string()),
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

type Check = Result<std::result::Result<(), String>>;

fn require(ok: bool, detail: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(detail())
    }
}

fn check_self_dual_max(h: &NumericalSemigroup) -> Check {
    let c = theorem_a_conditions(h);
    Ok(require(c.all_equal(), || {
        format!("conditions differ: {c:?}")
    }))
}

/// UESY cores `S` of `H` (symmetric `S` with `H = S ∪ {F(S)}`).
fn uesy_cores(h: &NumericalSemigroup) -> Vec<NumericalSemigroup> {
    h.generators()
        .iter()
        .filter(|&&a| a > h.frobenius())
        .filter_map(|&a| h.remove_minimal_generator(a).ok())
        .filter(NumericalSemigroup::is_symmetric)
        .collect()
}

fn check_minimal_multiplicity(h: &NumericalSemigroup) -> Check {
    let sd = max_ideal_self_dual(h)?;
    let al = is_almost_symmetric(h);
    let mm = minimal_multiplicity(h)?;
    let rho = canonical_index(h);
    let symmetric = h.is_symmetric();
    let uesy = is_uesy(h).is_some();
    let bg_le_one = symmetric || uesy;
    let bg_is_one = uesy && !symmetric;

    let conds = [
        bg_le_one && mm,
        h.multiplicity() <= 2 || (al && bg_is_one),
        sd && al,
        sd && mm,
        al && mm,
        uesy_cores(h)
            .iter()
            .any(|s| s.multiplicity() <= s.embedding_dim() as i32 + 1),
        sd && rho <= 2,
    ];
    if conds.iter().any(|&b| b != conds[0]) {
        return Ok(Err(format!(
            "conditions (1)..(7) = {conds:?} (self-dual {sd}, almost {al}, min mult {mm}, rho {rho})"
        )));
    }

    // Constructive direction: End of a Gorenstein S with e(S) <= edim(S) + 1.
    if symmetric && !h.is_naturals() && h.multiplicity() <= h.embedding_dim() as i32 + 1 {
        let r = h.unitary_extension()?;
        if !(max_ideal_self_dual(&r)? && minimal_multiplicity(&r)?) {
            return Ok(Err(format!(
                "unitary extension {r} lacks a self-dual maximal ideal or minimal multiplicity"
            )));
        }
    }
    Ok(Ok(()))
}

fn check_bg_two(h: &NumericalSemigroup) -> Check {
    let sd = min_selfdual_ideal_colength(h, 2);
    let bg = bg_bounds(h, Some(2));
    Ok(require(sd.is_some() == (bg.upper <= 2), || {
        format!(
            "self-dual ideal of colength <=2: {}; bg interval [{}, {}] via {:?}",
            sd.is_some(),
            bg.lower,
            bg.upper,
            bg.upper_cert
        )
    }))
}

fn check_endo_type(h: &NumericalSemigroup) -> Check {
    if h.is_naturals() || !is_nearly_gorenstein(h) {
        return Ok(Ok(()));
    }
    let t = crate::classify::endo_semigroup(h).semigroup_type();
    let sd = max_ideal_self_dual(h)?;
    let al = is_almost_symmetric(h);
    Ok(match t {
        2 => require(al && !sd, || {
            format!("type(B)=2 but almost {al}, self-dual {sd}")
        }),
        3 => require(al || sd, || {
            format!("type(B)=3 but almost {al}, self-dual {sd}")
        }),
        _ => Ok(()),
    })
}

fn check_gorenstein_endo(h: &NumericalSemigroup) -> Check {
    if h.is_naturals() {
        return Ok(Ok(()));
    }
    let (b_sym, gmp) = check_gmp_endo(h)?;
    Ok(require(b_sym == gmp, || {
        format!("B symmetric {b_sym}, almost Gorenstein with minimal multiplicity {gmp}")
    }))
}

fn check_low_multiplicity(h: &NumericalSemigroup) -> Check {
    if h.multiplicity() > 4 || !is_nearly_gorenstein(h) {
        return Ok(Ok(()));
    }
    let sd = max_ideal_self_dual(h)?;
    let al = is_almost_symmetric(h);
    Ok(require(al || sd, || {
        "nearly Gorenstein, e<=4, neither almost Gorenstein nor self-dual".into()
    }))
}

fn check_endo_colength(h: &NumericalSemigroup) -> Check {
    minimal_multiplicity(h)?;
    if h.is_naturals() {
        return Ok(Ok(()));
    }
    let whole = RelativeIdeal::whole(h);
    let m = RelativeIdeal::maximal(h);
    let b = whole.quotient(&m);
    if b != m.quotient(&m) {
        return Ok(Err(format!("M:M = {} but H:M = {}", m.quotient(&m), b)));
    }
    let extra = (b.min_elt()..h.conductor())
        .filter(|&z| b.contains(z) && !h.contains(z))
        .count() as u32;
    let t = h.semigroup_type();
    Ok(require(extra == t, || {
        format!("#(B \\ H) = {extra} but type = {t}")
    }))
}

fn check_self_dual_nearly(h: &NumericalSemigroup) -> Check {
    let sd = max_ideal_self_dual(h)?;
    Ok(require(!sd || is_nearly_gorenstein(h), || {
        "self-dual maximal ideal but not nearly Gorenstein".into()
    }))
}

fn check_quasi_decomposable(h: &NumericalSemigroup) -> Check {
    match quasi_decomposable_witness(h) {
        Ok(_) | Err(Error::PreconditionFailed(_)) => Ok(Ok(())),
        Err(Error::TheoremViolation(d)) => Ok(Err(d)),
        Err(e) => Err(e),
    }
}

fn check_hypersurface(h: &NumericalSemigroup) -> Check {
    let f = hypersurface_forms(h);
    Ok(require(f.first_form() == f.second_form(), || {
        format!("forms differ: {f:?}")
    }))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Counterexample {
    pub gens: Vec<i32>,
    /// Generators removed along the genus tree from `N`.
    pub path: Vec<i32>,
    pub detail: String,
    pub report: Option<ClassificationReport>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationOutcome {
    pub theorem: TheoremId,
    pub description: &'static str,
    pub genus_bound: u32,
    /// Semigroups checked, in depth-first order, up to and including the
    /// first counterexample.
    pub tested: u64,
    pub pass: bool,
    pub first_counterexample: Option<Counterexample>,
}

/// Depth at which the genus tree is cut into independently checked subtrees.
const SPLIT_DEPTH: u32 = 5;

type Failure = (Vec<i32>, NumericalSemigroup, String);

/// First node (in depth-first order) of genus at most `g_max` failing `check`.
pub fn find_first_failure<F>(g_max: u32, jobs: Option<usize>, check: F) -> Result<Option<Failure>>
where
    F: Fn(&NumericalSemigroup) -> std::result::Result<(), String> + Sync,
{
    let depth = g_max.min(SPLIT_DEPTH);
    let (shallow, frontier) = split_at_depth(depth);
    let mut failures: Vec<Failure> = shallow
        .iter()
        .find_map(|n| {
            check(&n.semigroup)
                .err()
                .map(|d| (n.path.clone(), n.semigroup.clone(), d))
        })
        .into_iter()
        .collect();

    let scan = || -> Vec<Failure> {
        frontier
            .par_iter()
            .filter_map(|root| {
                match walk_subtree(root, g_max, &mut |n| match check(&n.semigroup) {
                    Ok(()) => ControlFlow::Continue(()),
                    Err(d) => ControlFlow::Break((n.path.clone(), n.semigroup.clone(), d)),
                }) {
                    ControlFlow::Break(f) => Some(f),
                    ControlFlow::Continue(()) => None,
                }
            })
            .collect()
    };
    let deep = match jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| Error::PreconditionFailed(e.to_string()))?
            .install(scan),
        None => scan(),
    };
    failures.extend(deep);
    Ok(failures.into_iter().min_by(|a, b| a.0.cmp(&b.0)))
}

pub fn verify(theorem: TheoremId, g_max: u32, jobs: Option<usize>) -> Result<VerificationOutcome> {
    let failure = find_first_failure(g_max, jobs, |h| theorem.check(h))?;
    let tested = match &failure {
        None => enumerate_by_genus(g_max, |_| {}).total(),
        Some((path, _, _)) => {
            let mut n = 0;
            enumerate_by_genus(g_max, |node| {
                if node.path <= *path {
                    n += 1;
                }
            });
            n
        }
    };
    Ok(VerificationOutcome {
        theorem,
        description: theorem.description(),
        genus_bound: g_max,
        tested,
        pass: failure.is_none(),
        first_counterexample: failure.map(|(path, h, detail)| Counterexample {
            gens: h.generators().to_vec(),
            path,
            detail,
            report: classify(&h).ok(),
        }),
    })
}

pub fn verify_by_name(name: &str, g_max: u32, jobs: Option<usize>) -> Result<VerificationOutcome> {
    verify(name.parse()?, g_max, jobs)
}

pub fn verify_all(g_max: u32, jobs: Option<usize>) -> Result<Vec<VerificationOutcome>> {
    TheoremId::ALL
        .into_iter()
        .map(|t| verify(t, g_max, jobs))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for t in TheoremId::ALL {
            assert_eq!(t.as_str().parse::<TheoremId>(), Ok(t));
        }
        assert_eq!(
            "no-such-theorem".parse::<TheoremId>(),
            Err(Error::UnknownTheorem("no-such-theorem".into()))
        );
    }

    #[test]
    fn trivial_genus_bounds() {
        for g in [0, 1] {
            for o in verify_all(g, Some(1)).unwrap() {
                assert!(
                    o.pass,
                    "{} at genus {g}: {:?}",
                    o.theorem, o.first_counterexample
                );
            }
        }
    }

    #[test]
    fn endo_colength_count() {
        let o = verify(TheoremId::EndoColengthType, 5, None).unwrap();
        assert!(o.pass);
        assert_eq!(o.tested, 1 + 1 + 2 + 4 + 7 + 12);
    }

    #[test]
    fn first_failure_is_depth_first_minimum() {
        // A synthetic property failing on every semigroup with Frobenius 7.
        let check = |h: &NumericalSemigroup| {
            if h.frobenius() == 7 {
                Err("frobenius 7".to_string())
            } else {
                Ok(())
            }
        };
        let mut expected = None;
        enumerate_by_genus(8, |n| {
            if expected.is_none() && n.semigroup.frobenius() == 7 {
                expected = Some(n.path.clone());
            }
        });
        for jobs in [1, 2, 4] {
            let (path, h, _) = find_first_failure(8, Some(jobs), check).unwrap().unwrap();
            assert_eq!(Some(&path), expected.as_ref());
            assert_eq!(h.frobenius(), 7);
        }
    }
}
