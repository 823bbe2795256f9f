//! Case analysis of `CW_{BZ/p}(BG)` for a permutation group `G`.
//!
//! The group is first replaced by its p-socle `W = Ω₁(G)`, which has the same
//! cellularization. Then exactly one of the following holds:
//!
//! * `W` is a p-group: `BW` is cellular,
//! * `ω̄S = S`: the cellularization is the fiber of `BW → ∏_{q≠p} BW^∧_q`,
//! * `ω̄S < S`: it is the fiber of `BW → BΓ^∧_p × ∏_{q≠p} BW^∧_q`, where
//!   `Γ = N_Ḡ(Ā)/Ā` and bars denote passage to `W/O_A(W)`.
//!
//! Space terms are symbols only. Nothing here computes homotopy.

mod identify;

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

pub use identify::{identify_small_group, IDENTIFY_MAX_ORDER};

use crate::arith::{is_prime, prime_divisors};
use crate::cellular::{
    controls_strong_fusion, is_p_perfect, o_sub_a, omega_bar, p_socle, OAResult, OmegaBarResult,
};
use crate::quotient::{quotient, QuotientMap};
use crate::subgroup::normalizer;
use crate::{Error, Group, GroupSpec, Result, Subgroup};

pub const FIBER_LABEL: &str = "CW_{BZ/p}(BG)";
pub const NO_P_TORSION: &str = "no p-torsion";

pub const CHECK_GAMMA_P_PERFECT: &str = "gamma_p_perfect";
pub const CHECK_STRONG_FUSION: &str = "strong_fusion_in_quotient";
pub const CHECK_O_A_QUOTIENT_TRIVIAL: &str = "o_a_quotient_trivial";

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CaseTag {
    /// `p` does not divide `|G|`.
    Cellular,
    /// `Ω₁(G)` is a nontrivial p-group.
    PGroupSocle,
    SylowStronglyClosed,
    ProperStronglyClosed,
}

impl CaseTag {
    /// Name used in reports; both cellular variants report as `cellular`.
    pub fn as_str(self) -> &'static str {
        match self {
            CaseTag::Cellular | CaseTag::PGroupSocle => "cellular",
            CaseTag::SylowStronglyClosed => "sylow_strongly_closed",
            CaseTag::ProperStronglyClosed => "proper_strongly_closed",
        }
    }
}

/// Which group of the report a space term refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroupRef {
    Group,
    WorkingGroup,
    Gamma,
}

impl GroupRef {
    pub fn as_str(self) -> &'static str {
        match self {
            GroupRef::Group => "group",
            GroupRef::WorkingGroup => "working_group",
            GroupRef::Gamma => "gamma",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SpaceTerm {
    Point,
    ClassifyingSpace(GroupRef),
    PCompletedClassifyingSpace(GroupRef, u64),
}

impl fmt::Display for SpaceTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceTerm::Point => f.write_str("*"),
            SpaceTerm::ClassifyingSpace(g) => write!(f, "B({})", g.as_str()),
            SpaceTerm::PCompletedClassifyingSpace(g, q) => write!(f, "B({})^_{q}", g.as_str()),
        }
    }
}

/// `CW_{BZ/p}(BG) → total → ∏ base_factors`, symbolically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibrationDescription {
    pub total_space: SpaceTerm,
    pub base_factors: Vec<SpaceTerm>,
}

impl FibrationDescription {
    pub fn fiber_label(&self) -> &'static str {
        FIBER_LABEL
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    SkippedCap,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::SkippedCap => "skipped_cap",
        }
    }

    fn from_check(result: Result<bool>) -> Result<Verdict> {
        match result {
            Ok(true) => Ok(Verdict::Pass),
            Ok(false) => Ok(Verdict::Fail),
            Err(e) if e.is_cap_exceeded() => Ok(Verdict::SkippedCap),
            Err(e) => Err(e),
        }
    }
}

/// Data that only exists when `ω̄S < S`.
#[derive(Debug, Clone)]
pub struct ProperCase {
    /// `W → Ḡ = W/O_A(W)`.
    pub quotient: QuotientMap,
    pub a_bar: Subgroup,
    pub s_bar: Subgroup,
    /// `N_Ḡ(Ā)`, computed directly in the quotient.
    pub normalizer_bar: Subgroup,
    /// `N̄ → Γ = N̄/Ā`.
    pub gamma_map: QuotientMap,
    pub gamma_label: String,
}

impl ProperCase {
    pub fn gamma(&self) -> &Arc<Group> {
        self.gamma_map.quotient()
    }
}

#[derive(Debug, Clone)]
pub struct CellularizationReport {
    pub input: GroupSpec,
    pub prime: u64,
    pub group: Arc<Group>,
    /// Whether `Ω₁(G) ≠ G`.
    pub reduced: bool,
    pub working_group: Arc<Group>,
    pub case: CaseTag,
    pub sylow: Option<Subgroup>,
    pub omega_bar: Option<OmegaBarResult>,
    pub o_a: Option<OAResult>,
    pub proper: Option<ProperCase>,
    pub other_primes: Vec<u64>,
    pub fibration: FibrationDescription,
    pub verifications: BTreeMap<&'static str, Verdict>,
    pub note: Option<&'static str>,
}

impl CellularizationReport {
    /// True when some verification failed; that would contradict a theorem and
    /// therefore points at a bug.
    pub fn has_failures(&self) -> bool {
        self.verifications.values().any(|v| *v == Verdict::Fail)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct ClassifyOptions {
    /// Run the strong-fusion check in the quotient (the most expensive one).
    pub strong_fusion: bool,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions { strong_fusion: true }
    }
}

pub fn classify(g: &Arc<Group>, p: u64) -> Result<CellularizationReport> {
    classify_with(g, p, ClassifyOptions::default())
}

pub fn classify_with(g: &Arc<Group>, p: u64, opts: ClassifyOptions) -> Result<CellularizationReport> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let socle = p_socle(g, p).map_err(|e| e.at("p_socle"))?;
    let reduced = !socle.same_elements(g);
    let working_group = if reduced {
        socle.group().clone()
    } else {
        g.clone()
    };
    let other_primes: Vec<u64> = prime_divisors(working_group.order())
        .into_iter()
        .filter(|&q| q != p)
        .collect();
    let mut report = CellularizationReport {
        input: g.spec().clone(),
        prime: p,
        group: g.clone(),
        reduced,
        working_group: working_group.clone(),
        case: CaseTag::Cellular,
        sylow: None,
        omega_bar: None,
        o_a: None,
        proper: None,
        other_primes: other_primes.clone(),
        fibration: FibrationDescription {
            total_space: SpaceTerm::Point,
            base_factors: Vec::new(),
        },
        verifications: BTreeMap::new(),
        note: None,
    };

    if !g.order().is_multiple_of(p as u128) {
        report.note = Some(NO_P_TORSION);
        return Ok(report);
    }
    let w = &working_group;
    let completions_of_w = || {
        other_primes
            .iter()
            .map(|&q| SpaceTerm::PCompletedClassifyingSpace(GroupRef::WorkingGroup, q))
    };
    report.fibration.total_space = SpaceTerm::ClassifyingSpace(GroupRef::WorkingGroup);

    if w.is_p_group(p) {
        report.case = CaseTag::PGroupSocle;
        report.sylow = Some(Subgroup::whole(w));
        return Ok(report);
    }

    let ob = omega_bar(w, p).map_err(|e| e.at("omega_bar"))?;
    let oa = o_sub_a(w, &ob.subgroup, p).map_err(|e| e.at("o_sub_a"))?;
    let a_is_sylow = ob.subgroup.order() == ob.sylow.order();
    report.sylow = Some(ob.sylow.clone());

    if a_is_sylow {
        report.case = CaseTag::SylowStronglyClosed;
        report.fibration.base_factors = completions_of_w().collect();
        report.omega_bar = Some(ob);
        report.o_a = Some(oa);
        return Ok(report);
    }

    let q = quotient(w, &oa.subgroup).map_err(|e| e.at("quotient"))?;
    let g_bar = q.quotient().clone();
    let a_bar = q.image(&ob.subgroup).map_err(|e| e.at("image"))?;
    let s_bar = q.image(&ob.sylow).map_err(|e| e.at("image"))?;
    let n_bar = normalizer(&g_bar, &a_bar).map_err(|e| e.at("normalizer_bar"))?;
    let a_in_n = a_bar.rehome(n_bar.group())?;
    let gamma_map = quotient(n_bar.group(), &a_in_n).map_err(|e| e.at("gamma"))?;
    let gamma = gamma_map.quotient().clone();
    let gamma_label = identify_small_group(&gamma);

    report.verifications.insert(
        CHECK_GAMMA_P_PERFECT,
        Verdict::from_check(is_p_perfect(&gamma, p))?,
    );
    if opts.strong_fusion {
        let s_bar_in_n = s_bar.group().is_subgroup_of(&n_bar);
        let verdict = if s_bar_in_n {
            Verdict::from_check(controls_strong_fusion(&g_bar, &n_bar, &s_bar))?
        } else {
            // Ā ⊴ S̄ because Ā is strongly closed, so this cannot happen.
            Verdict::Fail
        };
        report.verifications.insert(CHECK_STRONG_FUSION, verdict);
    }
    report.verifications.insert(
        CHECK_O_A_QUOTIENT_TRIVIAL,
        Verdict::from_check(o_sub_a(&g_bar, &a_bar, p).map(|r| r.subgroup.is_trivial()))?,
    );

    report.case = CaseTag::ProperStronglyClosed;
    report.fibration.base_factors =
        core::iter::once(SpaceTerm::PCompletedClassifyingSpace(GroupRef::Gamma, p))
            .chain(completions_of_w())
            .collect();
    report.omega_bar = Some(ob);
    report.o_a = Some(oa);
    report.proper = Some(ProperCase {
        quotient: q,
        a_bar,
        s_bar,
        normalizer_bar: n_bar,
        gamma_map,
        gamma_label,
    });
    Ok(report)
}
