use std::fmt::{self, Write as _};

/// Every named check the verifier runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    FormulaMatchesEnumeration,
    SizeEqualsSwitchDegree,
    ZeroMultiplicityInclusion,
    ZeroMultiplicityEqualDegree,
    TwinNeighborhoods,
    SimpleEdgeDegrees,
    PathMaxDegreeEnd,
    PathInclusionChain,
    PathUnionCollapse,
    PathParityMonotone,
    PathMinDegreeEnd,
    P5MiddleMaxForbidden,
    PathUnionDivides,
    SpanningPathDivides,
    PathUnionSqrtBound,
    CycleLengthBound,
    SimpleEdgeTerminal,
    P4SimpleMiddlePeak,
    P4SimpleMiddleValley,
    P4SimpleMiddleAscending,
    P3SimpleTailStructure,
    DiameterBound,
    ExtremalMatchesExpected,
    ExtremalSwitchDegree,
    ExtremalIsPath,
    ExtremalInternalMultiplicities,
    ExtremalTerminalMultiplicities,
    ExtremalDiameterSharp,
}

impl Check {
    /// Checks run by `verify_all`, in report order.
    pub const INSTANCE: [Check; 22] = [
        Check::FormulaMatchesEnumeration,
        Check::SizeEqualsSwitchDegree,
        Check::ZeroMultiplicityInclusion,
        Check::ZeroMultiplicityEqualDegree,
        Check::TwinNeighborhoods,
        Check::SimpleEdgeDegrees,
        Check::PathMaxDegreeEnd,
        Check::PathInclusionChain,
        Check::PathUnionCollapse,
        Check::PathParityMonotone,
        Check::PathMinDegreeEnd,
        Check::P5MiddleMaxForbidden,
        Check::PathUnionDivides,
        Check::SpanningPathDivides,
        Check::PathUnionSqrtBound,
        Check::CycleLengthBound,
        Check::SimpleEdgeTerminal,
        Check::P4SimpleMiddlePeak,
        Check::P4SimpleMiddleValley,
        Check::P4SimpleMiddleAscending,
        Check::P3SimpleTailStructure,
        Check::DiameterBound,
    ];

    pub const EXTREMAL: [Check; 6] = [
        Check::ExtremalMatchesExpected,
        Check::ExtremalSwitchDegree,
        Check::ExtremalIsPath,
        Check::ExtremalInternalMultiplicities,
        Check::ExtremalTerminalMultiplicities,
        Check::ExtremalDiameterSharp,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::FormulaMatchesEnumeration => "formula-matches-enumeration",
            Check::SizeEqualsSwitchDegree => "size-equals-switch-degree",
            Check::ZeroMultiplicityInclusion => "zero-multiplicity-inclusion",
            Check::ZeroMultiplicityEqualDegree => "zero-multiplicity-equal-degree",
            Check::TwinNeighborhoods => "twin-neighborhoods",
            Check::SimpleEdgeDegrees => "simple-edge-degrees",
            Check::PathMaxDegreeEnd => "path-max-degree-end",
            Check::PathInclusionChain => "path-inclusion-chain",
            Check::PathUnionCollapse => "path-union-collapse",
            Check::PathParityMonotone => "path-parity-monotone",
            Check::PathMinDegreeEnd => "path-min-degree-end",
            Check::P5MiddleMaxForbidden => "p5-middle-max-forbidden",
            Check::PathUnionDivides => "path-union-divides",
            Check::SpanningPathDivides => "spanning-path-divides",
            Check::PathUnionSqrtBound => "path-union-sqrt-bound",
            Check::CycleLengthBound => "cycle-length-bound",
            Check::SimpleEdgeTerminal => "simple-edge-terminal",
            Check::P4SimpleMiddlePeak => "p4-simple-middle-peak",
            Check::P4SimpleMiddleValley => "p4-simple-middle-valley",
            Check::P4SimpleMiddleAscending => "p4-simple-middle-ascending",
            Check::P3SimpleTailStructure => "p3-simple-tail-structure",
            Check::DiameterBound => "diameter-bound",
            Check::ExtremalMatchesExpected => "extremal-matches-expected",
            Check::ExtremalSwitchDegree => "extremal-switch-degree",
            Check::ExtremalIsPath => "extremal-is-path",
            Check::ExtremalInternalMultiplicities => "extremal-internal-multiplicities",
            Check::ExtremalTerminalMultiplicities => "extremal-terminal-multiplicities",
            Check::ExtremalDiameterSharp => "extremal-diameter-sharp",
        }
    }

    pub fn from_name(name: &str) -> Option<Check> {
        Check::INSTANCE
            .iter()
            .chain(Check::EXTREMAL.iter())
            .copied()
            .find(|c| c.name() == name)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Hypothesis not met on this instance (e.g. disconnected factor graph).
    NotApplicable,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::NotApplicable => "N/A",
        }
    }
}

/// The configuration a failed check was refuted on, by factor-graph position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// An induced path, in the orientation the check read it.
    Path(Vec<usize>),
    Cycle(Vec<usize>),
    /// An ordered pair of independent vertices.
    Pair(usize, usize),
    /// The instance as a whole.
    Instance,
}

impl Witness {
    pub fn render(&self, labels: &[String]) -> String {
        let join = |vs: &[usize]| {
            vs.iter()
                .map(|&v| labels[v].as_str())
                .collect::<Vec<_>>()
                .join(",")
        };
        match self {
            Witness::Path(vs) => format!("path={}", join(vs)),
            Witness::Cycle(vs) => format!("cycle={}", join(vs)),
            Witness::Pair(u, v) => format!("pair={},{}", labels[*u], labels[*v]),
            Witness::Instance => "instance".to_owned(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub check: Check,
    pub status: Status,
    /// Configurations the check's hypothesis applied to.
    pub examined: usize,
    pub failures: usize,
    /// Non-strict inclusions that held with equality, flagged for inspection.
    pub equalities: usize,
    /// First failing configuration.
    pub witness: Option<Witness>,
    pub detail: Option<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

/// Pass/fail record of every check on one instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub instance: String,
    /// Factor-graph vertex labels, for rendering witnesses.
    pub labels: Vec<String>,
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn get(&self, check: Check) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.check == check)
    }

    /// `CHECK <name> PASS|FAIL|N/A [witness]`, one line per check.
    pub fn machine_lines(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let _ = write!(out, "CHECK {} {}", c.check, c.status.as_str());
            if let Some(w) = c.witness.as_ref().filter(|_| c.status == Status::Fail) {
                let _ = write!(out, " {}", w.render(&self.labels));
            }
            out.push('\n');
        }
        out
    }

    pub fn human(&self) -> String {
        let mut out = format!("instance: {}\n", self.instance);
        for c in &self.checks {
            let _ = write!(out, "CHECK {} {}", c.check, c.status.as_str());
            if let Some(w) = c.witness.as_ref().filter(|_| c.status == Status::Fail) {
                let _ = write!(out, " {}", w.render(&self.labels));
            }
            let _ = write!(out, "  (examined {}", c.examined);
            if c.failures > 0 {
                let _ = write!(out, ", failures {}", c.failures);
            }
            if c.equalities > 0 {
                let _ = write!(out, ", equalities {}", c.equalities);
            }
            out.push(')');
            if let Some(d) = &c.detail {
                let _ = write!(out, " {d}");
            }
            out.push('\n');
        }
        let failed = self.failures().count();
        let _ = writeln!(
            out,
            "result: {} ({} checks, {} failures)",
            if failed == 0 { "PASS" } else { "FAIL" },
            self.checks.len(),
            failed
        );
        out
    }
}

/// Running tally for one check across many configurations.
#[derive(Clone, Debug)]
pub(crate) struct Tally {
    check: Check,
    examined: usize,
    failures: usize,
    equalities: usize,
    witness: Option<Witness>,
    detail: Option<String>,
}

/// Result of one check on one configuration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Verdict {
    Skip,
    Holds { equalities: usize },
    Violated(String),
}

impl Verdict {
    pub(crate) fn holds() -> Self {
        Verdict::Holds { equalities: 0 }
    }

    pub(crate) fn from_bool(ok: bool, why: impl FnOnce() -> String) -> Self {
        if ok {
            Verdict::holds()
        } else {
            Verdict::Violated(why())
        }
    }

    pub(crate) fn is_violated(&self) -> bool {
        matches!(self, Verdict::Violated(_))
    }
}

impl Tally {
    pub(crate) fn new(check: Check) -> Self {
        Tally {
            check,
            examined: 0,
            failures: 0,
            equalities: 0,
            witness: None,
            detail: None,
        }
    }

    pub(crate) fn check(&self) -> Check {
        self.check
    }

    pub(crate) fn record(&mut self, verdict: Verdict, witness: impl FnOnce() -> Witness) {
        match verdict {
            Verdict::Skip => {}
            Verdict::Holds { equalities } => {
                self.examined += 1;
                self.equalities += equalities;
            }
            Verdict::Violated(why) => {
                self.examined += 1;
                self.failures += 1;
                if self.witness.is_none() {
                    self.witness = Some(witness());
                    self.detail = Some(why);
                }
            }
        }
    }

    pub(crate) fn finish(self) -> CheckResult {
        let status = if self.failures > 0 {
            Status::Fail
        } else {
            Status::Pass
        };
        CheckResult {
            check: self.check,
            status,
            examined: self.examined,
            failures: self.failures,
            equalities: self.equalities,
            witness: self.witness,
            detail: self.detail,
        }
    }

    pub(crate) fn not_applicable(check: Check, why: impl Into<String>) -> CheckResult {
        CheckResult {
            check,
            status: Status::NotApplicable,
            examined: 0,
            failures: 0,
            equalities: 0,
            witness: None,
            detail: Some(why.into()),
        }
    }
}
