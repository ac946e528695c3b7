//! Exhaustive searches: the genus tree of all numerical semigroups,
//! bounded-colength self-dual ideals, symmetric subsemigroups, and the
//! resulting interval for the birational Gorenstein colength `bg`.

use std::collections::BTreeMap;
use std::ops::ControlFlow;

use serde::Serialize;

use crate::classify::is_uesy;
use crate::ideal::{canonical_ideal, colength, trace_of_canonical, RelativeIdeal};
use crate::semigroup::NumericalSemigroup;

/// Depth used by [`bg_bounds`] for the symmetric-subsemigroup scan when no
/// bound is given.
pub const DEFAULT_SUBSEMIGROUP_BOUND: u32 = 3;

/// A node of the genus tree. `path` lists the generators removed on the way
/// down from `N`, so its length is the genus and lexicographic order on paths
/// is depth-first visiting order.
#[derive(Clone, Debug)]
pub struct GenusTreeNode {
    pub semigroup: NumericalSemigroup,
    pub path: Vec<i32>,
}

impl GenusTreeNode {
    pub fn root() -> Self {
        GenusTreeNode {
            semigroup: NumericalSemigroup::naturals(),
            path: Vec::new(),
        }
    }

    pub fn depth(&self) -> usize {
        self.path.len()
    }

    /// The generator whose removal from the parent produced this node.
    pub fn removed(&self) -> Option<i32> {
        self.path.last().copied()
    }

    /// Children in increasing order of the removed generator.
    pub fn children(&self) -> Vec<GenusTreeNode> {
        let h = &self.semigroup;
        h.generators()
            .iter()
            .filter(|&&a| a > h.frobenius())
            .map(|&a| {
                let mut path = self.path.clone();
                path.push(a);
                GenusTreeNode {
                    semigroup: h
                        .remove_minimal_generator(a)
                        .expect("a is a minimal generator"),
                    path,
                }
            })
            .collect()
    }
}

/// Per-genus counts of visited semigroups.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct EnumerationStats {
    pub counts: Vec<u64>,
}

impl EnumerationStats {
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

/// Depth-first walk of the subtree under `node` down to genus `g_max`.
/// Stops as soon as the visitor breaks.
pub fn walk_subtree<B>(
    node: &GenusTreeNode,
    g_max: u32,
    visitor: &mut impl FnMut(&GenusTreeNode) -> ControlFlow<B>,
) -> ControlFlow<B> {
    visitor(node)?;
    if (node.depth() as u32) < g_max {
        for child in node.children() {
            walk_subtree(&child, g_max, visitor)?;
        }
    }
    ControlFlow::Continue(())
}

/// Visits every numerical semigroup of genus at most `g_max` exactly once.
pub fn enumerate_by_genus(g_max: u32, mut visitor: impl FnMut(&GenusTreeNode)) -> EnumerationStats {
    let mut counts = vec![0u64; g_max as usize + 1];
    let _ = walk_subtree::<()>(&GenusTreeNode::root(), g_max, &mut |node| {
        counts[node.depth()] += 1;
        visitor(node);
        ControlFlow::Continue(())
    });
    EnumerationStats { counts }
}

/// All nodes of genus exactly `depth`, in depth-first order, together with
/// every shallower node (also in depth-first order).
pub fn split_at_depth(depth: u32) -> (Vec<GenusTreeNode>, Vec<GenusTreeNode>) {
    let mut shallow = Vec::new();
    let mut frontier = Vec::new();
    let _ = walk_subtree::<()>(&GenusTreeNode::root(), depth, &mut |node| {
        if node.depth() as u32 == depth {
            frontier.push(node.clone());
        } else {
            shallow.push(node.clone());
        }
        ControlFlow::Continue(())
    });
    (shallow, frontier)
}

/// Breadth-first removal levels: level `c` maps each sorted set of `c`
/// removed elements to the object left after removing them. Objects are
/// reached by removing one minimal generator at a time.
fn removal_levels<T, G, R, Stop>(
    start: T,
    bound: u32,
    removable: G,
    remove: R,
    mut stop: Stop,
) -> Option<(u32, Vec<i32>, T)>
where
    G: Fn(&T) -> Vec<i32>,
    R: Fn(&T, i32) -> T,
    Stop: FnMut(&T) -> bool,
{
    let mut level: BTreeMap<Vec<i32>, T> = BTreeMap::new();
    level.insert(Vec::new(), start);
    for c in 0..=bound {
        if let Some(key) = level.iter().find(|(_, t)| stop(t)).map(|(k, _)| k.clone()) {
            let t = level.remove(&key).unwrap();
            return Some((c, key, t));
        }
        if c == bound {
            break;
        }
        let mut next = BTreeMap::new();
        for (removed, t) in &level {
            for x in removable(t) {
                let mut key = removed.clone();
                let pos = key.binary_search(&x).unwrap_err();
                key.insert(pos, x);
                next.entry(key).or_insert_with(|| remove(t, x));
            }
        }
        level = next;
    }
    None
}

/// A monomial ideal `E ⊆ H` with `E ≅ E†`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelfDualIdeal {
    pub colength: u32,
    pub ideal: RelativeIdeal,
    /// `E† = E + shift`.
    pub shift: i32,
    /// Elements of `H` missing from `E`.
    pub removed: Vec<i32>,
}

/// Smallest colength `c <= bound` of a self-dual monomial ideal `E ⊆ H`.
/// Ties are broken by the lexicographically smallest set `H \ E`.
pub fn min_selfdual_ideal_colength(h: &NumericalSemigroup, bound: u32) -> Option<SelfDualIdeal> {
    let k = canonical_ideal(h);
    let is_self_dual = |e: &RelativeIdeal| e.is_isomorphic(&k.quotient(e));
    let (c, removed, ideal) = removal_levels(
        RelativeIdeal::whole(h),
        bound,
        |e| e.minimal_generators(h),
        |e, x| {
            let top = e.tail().max(x + 1);
            RelativeIdeal::from_window(e.min_elt(), top, |z| z != x && e.contains(z))
        },
        |e| is_self_dual(e).is_some(),
    )?;
    let shift = is_self_dual(&ideal).unwrap();
    Some(SelfDualIdeal {
        colength: c,
        ideal,
        shift,
        removed,
    })
}

/// Smallest colength `c <= bound` of a symmetric numerical semigroup
/// `S ⊆ H`, with the lexicographically smallest `H \ S` among ties.
pub fn symmetric_subsemigroup_search(
    h: &NumericalSemigroup,
    bound: u32,
) -> Option<(u32, NumericalSemigroup)> {
    removal_levels(
        h.clone(),
        bound,
        |s| s.generators().to_vec(),
        |s, x| {
            s.remove_minimal_generator(x)
                .expect("x is a minimal generator")
        },
        |s| s.is_symmetric(),
    )
    .map(|(c, _, s)| (c, s))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LowerReason {
    /// `H` is symmetric: `bg = 0`.
    Symmetric,
    /// UESY but not symmetric: `bg = 1`.
    Uesy,
    /// Neither symmetric nor UESY, so `bg >= 2`.
    NotUesy,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "route", rename_all = "snake_case")]
pub enum UpperCert {
    GorensteinSubsemigroup {
        gens: Vec<i32>,
        colength: u32,
    },
    SelfDualIdeal {
        removed: Vec<i32>,
        ideal: String,
        shift: i32,
        colength: u32,
    },
    Conductor {
        colength: u32,
    },
}

impl UpperCert {
    pub fn colength(&self) -> u32 {
        match self {
            UpperCert::GorensteinSubsemigroup { colength, .. }
            | UpperCert::SelfDualIdeal { colength, .. }
            | UpperCert::Conductor { colength } => *colength,
        }
    }
}

/// Certified interval for `bg(k[[H]])`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BgBounds {
    pub lower: u32,
    pub upper: u32,
    pub lower_reason: LowerReason,
    /// `Some(3)` when no monomial self-dual ideal of colength at most 2
    /// exists. The bound holds only if no non-monomial one exists either.
    pub conditional_lower: Option<u32>,
    pub upper_cert: UpperCert,
}

impl BgBounds {
    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }
}

/// Search limits for [`bg_bounds`]. `None` means the default: the
/// self-dual ideal scan runs to `n(H)` (where the conductor ideal always
/// succeeds) and the subsemigroup scan to [`DEFAULT_SUBSEMIGROUP_BOUND`].
pub fn bg_bounds(h: &NumericalSemigroup, bound: Option<u32>) -> BgBounds {
    let n = h.n_of_h();
    let ideal_bound = bound.unwrap_or(n).min(n);
    let sub_bound = bound.unwrap_or(DEFAULT_SUBSEMIGROUP_BOUND);
    let sd = min_selfdual_ideal_colength(h, ideal_bound);
    let (lower, lower_reason, conditional_lower) = if h.is_symmetric() {
        (0, LowerReason::Symmetric, None)
    } else if is_uesy(h).is_some() {
        (1, LowerReason::Uesy, None)
    } else {
        let excluded = !matches!(&sd, Some(s) if s.colength <= 2);
        (2, LowerReason::NotUesy, excluded.then_some(3))
    };

    let mut candidates = Vec::new();
    if let Some((c, s)) = symmetric_subsemigroup_search(h, sub_bound.min(n)) {
        candidates.push(UpperCert::GorensteinSubsemigroup {
            gens: s.generators().to_vec(),
            colength: c,
        });
    }
    if let Some(s) = sd {
        candidates.push(UpperCert::SelfDualIdeal {
            removed: s.removed,
            ideal: s.ideal.to_string(),
            shift: s.shift,
            colength: s.colength,
        });
    }
    candidates.push(UpperCert::Conductor { colength: n });
    // min_by_key keeps the first minimum, so subsemigroup certificates win ties.
    let upper_cert = candidates
        .into_iter()
        .min_by_key(UpperCert::colength)
        .unwrap();
    BgBounds {
        lower,
        upper: upper_cert.colength(),
        lower_reason,
        conditional_lower,
        upper_cert,
    }
}

/// One row of the trace / self-dual colength / bg comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurveyRow {
    pub gens: Vec<i32>,
    pub trace_colength: u32,
    pub sd_min: u32,
    pub bg_lower: u32,
    pub bg_upper: u32,
    pub violation: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub violated: Vec<&'static str>,
}

/// Compares `ℓ(R/tr(ω))`, the monomial minimum self-dual colength and the
/// `bg` interval. Rows breaking `trace <= sd_min <= bg_upper` are flagged,
/// never rejected.
pub fn survey_questions(h: &NumericalSemigroup) -> SurveyRow {
    let trace_colength = colength(h, &trace_of_canonical(h)).expect("trace lies in H");
    let sd_min = min_selfdual_ideal_colength(h, h.n_of_h())
        .expect("the conductor ideal is self-dual")
        .colength;
    let bg = bg_bounds(h, None);
    let mut violated = Vec::new();
    if trace_colength > sd_min {
        violated.push("trace_colength <= sd_min");
    }
    if sd_min > bg.upper {
        violated.push("sd_min <= bg_upper");
    }
    if trace_colength > bg.upper {
        violated.push("trace_colength <= bg_upper");
    }
    SurveyRow {
        gens: h.generators().to_vec(),
        trace_colength,
        sd_min,
        bg_lower: bg.lower,
        bg_upper: bg.upper,
        violation: !violated.is_empty(),
        violated,
    }
}
