//! Classification predicates with certificates.
//!
//! Every predicate is reduced to semigroup and exponent-set computations.
//! Where two independent routes to the same answer exist, both are computed
//! and a disagreement is reported as [`Error::InternalDisagreement`].

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ideal::{canonical_ideal, canonical_index, colength, dual, trace_of_canonical};
use crate::ideal::{max_ideal_is_endomorphism_translate, RelativeIdeal};
use crate::semigroup::{CoreInvariants, NumericalSemigroup};

/// `H = core ∪ {removed}` with `core` symmetric and `removed = F(core)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UesyCert {
    pub core_generators: Vec<i32>,
    pub removed: i32,
}

/// Evidence that `k[[H]]` is the endomorphism ring of the maximal ideal of a
/// hypersurface.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HypCert {
    /// `e(H) <= 2`; no canonical ideal is needed.
    pub low_multiplicity: bool,
    /// The canonical translate `I = shift + K` used below.
    pub shift: Option<i32>,
    pub colength_two: bool,
    pub square_is_mi: bool,
    pub square_is_m_squared: bool,
    pub edim_three: bool,
}

/// Membership checks showing that the maximal ideal is quasi-decomposable.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QdWitness {
    /// Frobenius number of the symmetric core.
    pub f: i32,
    /// Smallest generator of the core.
    pub a1: i32,
    /// `(x, x ∈ core)` for `x = f + a_i − a1` (i > 1) and `x = 2f − a1`.
    pub checks: Vec<(i32, bool)>,
}

/// The two characterizations of hypersurface endomorphism rings, evaluated
/// separately. Each field holds the first shift that works.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypersurfaceForms {
    pub low_multiplicity: bool,
    /// Type 2 and a canonical ideal `I` with `ℓ(R/I) = 2` and `I² = mI`.
    pub square_is_mi: Option<i32>,
    /// Embedding dimension 3 and a canonical ideal `I` with `I² = m²`.
    pub square_is_m_squared: Option<i32>,
}

impl HypersurfaceForms {
    pub fn first_form(&self) -> bool {
        self.low_multiplicity || self.square_is_mi.is_some()
    }

    pub fn second_form(&self) -> bool {
        self.low_multiplicity || self.square_is_m_squared.is_some()
    }
}

/// The five conditions of the bg ≤ 1 characterization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremAConditions {
    /// `bg <= 1`, reported through `c5`.
    pub c1: bool,
    /// Gorenstein, or the endomorphism ring of a Gorenstein maximal ideal.
    pub c2: bool,
    /// Gorenstein, or `M ≅ M†`.
    pub c3: bool,
    /// Gorenstein, or a canonical translate inside `M` of colength one in `M`.
    pub c4: bool,
    /// A canonical ideal of colength at most 2.
    pub c5: bool,
}

impl TheoremAConditions {
    pub fn all_equal(&self) -> bool {
        let v = [self.c1, self.c2, self.c3, self.c4, self.c5];
        v.iter().all(|&b| b == v[0])
    }
}

fn serialize_uesy_core<S: Serializer>(
    cert: &Option<UesyCert>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    cert.as_ref().map(|c| &c.core_generators).serialize(s)
}

/// Every invariant and predicate outcome for one semigroup.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClassificationReport {
    pub gens: Vec<i32>,
    #[serde(flatten)]
    pub core: CoreInvariants,
    pub symmetric: bool,
    #[serde(rename = "uesy_core", serialize_with = "serialize_uesy_core")]
    pub uesy: Option<UesyCert>,
    pub self_dual_max: bool,
    pub almost_symmetric: bool,
    pub nearly_gorenstein: bool,
    pub min_mult: bool,
    pub rho: u32,
    pub endo_gens: Vec<i32>,
    pub endo_type: u32,
    pub hypersurface_endo: Option<HypCert>,
    #[serde(rename = "qd_witness")]
    pub quasi_decomposable: Option<QdWitness>,
}

/// Searches the minimal generators `a > F(H)`, smallest first, for one whose
/// removal leaves a symmetric semigroup.
pub fn is_uesy(h: &NumericalSemigroup) -> Option<UesyCert> {
    h.generators()
        .iter()
        .filter(|&&a| a > h.frobenius())
        .find_map(|&a| {
            let core = h.remove_minimal_generator(a).ok()?;
            debug_assert_eq!(core.frobenius(), a);
            core.is_symmetric().then(|| UesyCert {
                core_generators: core.generators().to_vec(),
                removed: a,
            })
        })
}

/// `M ≅ M†`, via the UESY test and via the dual of `M`; both must agree.
pub fn max_ideal_self_dual(h: &NumericalSemigroup) -> Result<bool> {
    let by_uesy = is_uesy(h).is_some();
    let m = RelativeIdeal::maximal(h);
    let by_dual = m.is_isomorphic(&dual(h, &m)).is_some();
    if by_uesy != by_dual {
        return Err(Error::InternalDisagreement(
            "self-duality of the maximal ideal",
        ));
    }
    Ok(by_dual)
}

/// Minimal multiplicity, as `e = edim` and as `M ≅ M : M`.
pub fn minimal_multiplicity(h: &NumericalSemigroup) -> Result<bool> {
    let by_count = h.has_minimal_multiplicity();
    if by_count != max_ideal_is_endomorphism_translate(h) {
        return Err(Error::InternalDisagreement("minimal multiplicity"));
    }
    Ok(by_count)
}

/// Almost Gorenstein, tested as `M† ≅ M : M`.
pub fn is_almost_symmetric(h: &NumericalSemigroup) -> bool {
    let m = RelativeIdeal::maximal(h);
    let b = RelativeIdeal::whole(h).quotient(&m);
    dual(h, &m).is_isomorphic(&b).is_some()
}

/// `M ⊆ tr(ω)`.
pub fn is_nearly_gorenstein(h: &NumericalSemigroup) -> bool {
    RelativeIdeal::maximal(h).is_subset(&trace_of_canonical(h))
}

/// `B = H ∪ PF(H)`, the semigroup of `M : M`. The naturals map to
/// themselves.
pub fn endo_semigroup(h: &NumericalSemigroup) -> NumericalSemigroup {
    if h.is_naturals() {
        return h.clone();
    }
    h.with_elements(&h.pseudo_frobenius())
        .expect("adding pseudo-Frobenius numbers keeps gcd 1")
}

/// `(B symmetric, almost symmetric and minimal multiplicity)`.
pub fn check_gmp_endo(h: &NumericalSemigroup) -> Result<(bool, bool)> {
    if h.is_naturals() {
        return Err(Error::PreconditionFailed("semigroup is N".into()));
    }
    let b_symmetric = endo_semigroup(h).is_symmetric();
    Ok((
        b_symmetric,
        is_almost_symmetric(h) && minimal_multiplicity(h)?,
    ))
}

pub fn quasi_decomposable_witness(h: &NumericalSemigroup) -> Result<QdWitness> {
    let cert = is_uesy(h).ok_or_else(|| Error::PreconditionFailed("not UESY".into()))?;
    let core = NumericalSemigroup::from_generators(&cert.core_generators)?;
    let a1 = core.multiplicity();
    if a1 <= 2 {
        return Err(Error::PreconditionFailed(format!(
            "core multiplicity {a1} <= 2"
        )));
    }
    let f = core.frobenius();
    let mut checks: Vec<(i32, bool)> = core.generators()[1..]
        .iter()
        .map(|&ai| f + ai - a1)
        .chain(std::iter::once(2 * f - a1))
        .map(|x| (x, core.contains(x)))
        .collect();
    checks.dedup();
    if let Some(&(x, _)) = checks.iter().find(|(_, ok)| !ok) {
        return Err(Error::TheoremViolation(format!(
            "{x} is not in the core {core} of {h}"
        )));
    }
    Ok(QdWitness { f, a1, checks })
}

/// Shifts `x ∈ [0, 2c]` with `x + K ⊆ H`, in increasing order.
fn canonical_translates_in(
    h: &NumericalSemigroup,
) -> impl Iterator<Item = (i32, RelativeIdeal)> + '_ {
    let k = canonical_ideal(h);
    let whole = RelativeIdeal::whole(h);
    (0..=2 * h.conductor())
        .map(move |x| (x, k.translate(x)))
        .filter(move |(_, i)| i.is_subset(&whole))
}

pub fn hypersurface_forms(h: &NumericalSemigroup) -> HypersurfaceForms {
    let low_multiplicity = h.multiplicity() <= 2;
    let m = RelativeIdeal::maximal(h);
    let m2 = m.add(&m);
    let square_is_mi = (h.semigroup_type() == 2)
        .then(|| {
            canonical_translates_in(h)
                .find(|(_, i)| colength(h, i) == Ok(2) && i.add(i) == m.add(i))
                .map(|(x, _)| x)
        })
        .flatten();
    let square_is_m_squared = (h.embedding_dim() == 3)
        .then(|| {
            canonical_translates_in(h)
                .find(|(_, i)| i.add(i) == m2)
                .map(|(x, _)| x)
        })
        .flatten();
    HypersurfaceForms {
        low_multiplicity,
        square_is_mi,
        square_is_m_squared,
    }
}

/// `Some` exactly when `e <= 2`, or `H` has type 2 and a canonical ideal of
/// colength 2 with `I² = mI`.
pub fn hypersurface_endo_check(h: &NumericalSemigroup) -> Option<HypCert> {
    let forms = hypersurface_forms(h);
    let edim_three = h.embedding_dim() == 3;
    if forms.low_multiplicity {
        return Some(HypCert {
            low_multiplicity: true,
            shift: None,
            colength_two: false,
            square_is_mi: false,
            square_is_m_squared: false,
            edim_three,
        });
    }
    let x = forms.square_is_mi?;
    let m = RelativeIdeal::maximal(h);
    let i = canonical_ideal(h).translate(x);
    Some(HypCert {
        low_multiplicity: false,
        shift: Some(x),
        colength_two: true,
        square_is_mi: true,
        square_is_m_squared: i.add(&i) == m.add(&m),
        edim_three,
    })
}

pub fn theorem_a_conditions(h: &NumericalSemigroup) -> TheoremAConditions {
    let symmetric = h.is_symmetric();
    let m = RelativeIdeal::maximal(h);
    let c2 = symmetric || is_uesy(h).is_some();
    let c3 = symmetric || m.is_isomorphic(&dual(h, &m)).is_some();
    let c4 = symmetric
        || canonical_translates_in(h).any(|(_, i)| i.is_subset(&m) && colength(h, &i) == Ok(2));
    let c5 = canonical_translates_in(h).any(|(_, i)| matches!(colength(h, &i), Ok(c) if c <= 2));
    TheoremAConditions {
        c1: c5,
        c2,
        c3,
        c4,
        c5,
    }
}

pub fn classify(h: &NumericalSemigroup) -> Result<ClassificationReport> {
    let core = h.core_invariants();
    let uesy = is_uesy(h);
    let endo = endo_semigroup(h);
    let quasi_decomposable = match quasi_decomposable_witness(h) {
        Ok(w) => Some(w),
        Err(Error::PreconditionFailed(_)) => None,
        Err(e) => return Err(e),
    };
    Ok(ClassificationReport {
        gens: h.generators().to_vec(),
        core,
        symmetric: h.is_symmetric(),
        uesy,
        self_dual_max: max_ideal_self_dual(h)?,
        almost_symmetric: is_almost_symmetric(h),
        nearly_gorenstein: is_nearly_gorenstein(h),
        min_mult: minimal_multiplicity(h)?,
        rho: canonical_index(h),
        endo_type: endo.semigroup_type(),
        endo_gens: endo.generators().to_vec(),
        hypersurface_endo: hypersurface_endo_check(h),
        quasi_decomposable,
    })
}
