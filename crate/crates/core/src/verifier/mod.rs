//! Executable checks of the structural results about commuting and
//! centralizer graphs, run over a corpus of groups.

mod checks;
mod class2;
mod corpus;
mod isoclinism;
mod pairs;
mod subject;

use std::collections::HashMap;
use std::sync::Arc;
use std::time::Duration;

use rayon::prelude::*;
use serde_json::{json, Value};

pub use checks::{
    independent_component_conditions, isolated_conditions, two_independent_bound, unique_independent_isolated,
};
pub use class2::CROSS_CHECK_ORDER;
pub use corpus::{Corpus, CorpusEntry, EntrySource, PairEntry};
pub use isoclinism::{
    abelian_invariants, find_isoclinism, format_invariants, order_profile, verify_isoclinism,
    ISOCLINISM_SEARCH_LIMIT,
};
pub use subject::{ElementGraph, Subject};

use crate::error::{Error, Result};
use checks::Outcome;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Arity {
    Single,
    Pair,
}

#[derive(Clone, Copy, Debug)]
pub struct CheckInfo {
    pub id: &'static str,
    pub arity: Arity,
    /// Reported but never counted as a pass or a failure.
    pub exploratory: bool,
    pub statement: &'static str,
}

const fn single(id: &'static str, statement: &'static str) -> CheckInfo {
    CheckInfo { id, arity: Arity::Single, exploratory: false, statement }
}

const fn pair(id: &'static str, statement: &'static str) -> CheckInfo {
    CheckInfo { id, arity: Arity::Pair, exploratory: false, statement }
}

pub const CATALOG: &[CheckInfo] = &[
    single("derivedBound", "|G′|² < |G:Z| implies Γ_Z is connected of diameter at most 2"),
    single("p3CA", "a p-group with |G:Z| ≤ p³ is a CA-group"),
    single("p45Diameter", "|G:Z| ∈ {p⁴, p⁵}: CA, or the nonisolated vertices form one component of diameter at most 4"),
    single("p4Isolated", "|G:Z| = p⁴, not CA: isolated vertices have index p; p³ of them with one independent vertex, at most p²(p−1) with two"),
    single("classN", "class n ≥ 3 with |G:C_G(G_{n−1})| ∈ {p, p²}: at most one nontrivial component, diameter at most 8"),
    single("isolatedEquiv", "the seven characterizations of an isolated vertex agree"),
    single("independentComponentEquiv", "the five characterizations of a component headed by an independent vertex agree"),
    single("indDiam", "a nontrivial component formed by an independent vertex and its subordinates has diameter 2"),
    single("primeIndexIsolated", "|C_G(g):Z| prime implies Z(g) is isolated"),
    single("caEmpty", "CA-group iff Γ_Z has no edges iff every component of the commuting graph is complete"),
    single("fGroupIndependent", "F-group iff no vertex of Γ_Z is subordinate"),
    single("subNonabelian", "C_G(h) < C_G(g) implies C_G(g) is nonabelian"),
    CheckInfo {
        id: "componentUnionSubgroup",
        arity: Arity::Single,
        exploratory: true,
        statement: "whether the centralizers over a nontrivial component union to a subgroup",
    },
    single("class2Predictions", "structure of Γ_Z(G(p,n,S)) read off S̄, against the nullspace and table computations"),
    pair("cSizes", "isomorphic commuting graphs of p-groups force equal orders, indices and centers"),
    pair("cStarEquiv", "for groups of equal order, commuting graphs are isomorphic iff star graphs are"),
    pair("isoclinicStar", "isoclinic groups have isomorphic star graphs and centralizer graphs"),
    pair("notIsoclinicRefute", "groups with isomorphic centralizer graphs that are not isoclinic"),
];

pub fn check_info(id: &str) -> Result<&'static CheckInfo> {
    CATALOG.iter().find(|c| c.id == id).ok_or_else(|| Error::UnknownCheck(id.to_string()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Conclusion {
    Holds,
    Fails,
    NotApplicable,
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub check_id: String,
    pub group: String,
    pub hypothesis: bool,
    pub conclusion: Conclusion,
    pub exploratory: bool,
    pub witness: Value,
    pub elapsed: Duration,
}

impl CheckResult {
    fn new(info: &CheckInfo, group: String, outcome: Outcome, elapsed: Duration) -> Self {
        let conclusion = match (outcome.hypothesis, outcome.conclusion) {
            (false, _) => Conclusion::NotApplicable,
            (true, true) => Conclusion::Holds,
            (true, false) => Conclusion::Fails,
        };
        CheckResult {
            check_id: info.id.to_string(),
            group,
            hypothesis: outcome.hypothesis,
            conclusion,
            exploratory: info.exploratory,
            witness: outcome.witness,
            elapsed,
        }
    }

    /// An applicable, non-exploratory check whose conclusion failed.
    pub fn failed(&self) -> bool {
        !self.exploratory && self.conclusion == Conclusion::Fails
    }

    pub fn passed(&self) -> bool {
        !self.exploratory && self.conclusion == Conclusion::Holds
    }

    pub fn to_json(&self) -> Value {
        let conclusion = match self.conclusion {
            Conclusion::Holds => json!(true),
            Conclusion::Fails => json!(false),
            Conclusion::NotApplicable => json!("notApplicable"),
        };
        let mut v = json!({
            "checkId": self.check_id,
            "group": self.group,
            "hypothesis": self.hypothesis,
            "conclusion": conclusion,
            "witness": self.witness,
            "ms": self.elapsed.as_millis() as u64,
        });
        if self.exploratory {
            v["exploratory"] = true.into();
        }
        v
    }
}

/// Time since the call; wasm32-unknown-unknown has no clock and reports zero.
#[cfg(not(target_arch = "wasm32"))]
fn stopwatch() -> impl Fn() -> Duration {
    let start = std::time::Instant::now();
    move || start.elapsed()
}

#[cfg(target_arch = "wasm32")]
fn stopwatch() -> impl Fn() -> Duration {
    || Duration::ZERO
}

/// Runs a single-group check.
pub fn run_check(id: &str, s: &Subject) -> Result<CheckResult> {
    run_check_with_limit(id, s, crate::fp::DEFAULT_ENUMERATION_LIMIT)
}

/// `limit` caps the tables expanded by `class2Predictions`.
pub fn run_check_with_limit(id: &str, s: &Subject, limit: usize) -> Result<CheckResult> {
    let info = check_info(id)?;
    if info.arity == Arity::Pair {
        return Err(Error::InvalidParameters(format!("{id} compares two groups")));
    }
    let elapsed = stopwatch();
    let outcome = match id {
        "derivedBound" => checks::derived_bound(s),
        "p3CA" => checks::p3_ca(s),
        "p45Diameter" => checks::p45_diameter(s),
        "p4Isolated" => checks::p4_isolated(s),
        "classN" => checks::class_n(s),
        "isolatedEquiv" => checks::isolated_equiv(s),
        "independentComponentEquiv" => checks::independent_component_equiv(s),
        "indDiam" => checks::ind_diam(s),
        "primeIndexIsolated" => checks::prime_index_isolated(s),
        "caEmpty" => checks::ca_empty(s),
        "fGroupIndependent" => checks::f_group_independent(s),
        "subNonabelian" => checks::sub_nonabelian(s),
        "componentUnionSubgroup" => checks::component_union_subgroup(s),
        "class2Predictions" => class2::class2_predictions(s, limit),
        _ => unreachable!("catalog entry without a check"),
    };
    Ok(CheckResult::new(info, s.name.clone(), outcome, elapsed()))
}

/// Runs a check that compares two groups; both need Cayley tables.
pub fn run_pair_check(id: &str, a: &Subject, b: &Subject) -> Result<CheckResult> {
    let info = check_info(id)?;
    if info.arity == Arity::Single {
        return Err(Error::InvalidParameters(format!("{id} takes one group")));
    }
    let elapsed = stopwatch();
    let outcome = match id {
        "cSizes" => pairs::c_sizes(a, b)?,
        "cStarEquiv" => pairs::c_star_equiv(a, b)?,
        "isoclinicStar" => pairs::isoclinic_star(a, b)?,
        "notIsoclinicRefute" => pairs::not_isoclinic_refute(a, b)?,
        _ => unreachable!("catalog entry without a check"),
    };
    Ok(CheckResult::new(info, format!("{} vs {}", a.name, b.name), outcome, elapsed()))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub vacuous: usize,
    pub exploratory: usize,
}

/// Per-group maxima recorded for the open diameter questions.
#[derive(Clone, Debug)]
pub struct Observation {
    pub group: String,
    pub index: u128,
    pub last_term_index: Option<u128>,
    pub max_diameter: usize,
    pub nontrivial_components: usize,
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub run_id: String,
    pub corpus: Vec<String>,
    pub checks: Vec<String>,
    pub results: Vec<CheckResult>,
    pub observations: Vec<Observation>,
}

impl SuiteReport {
    pub fn summary(&self) -> Summary {
        let mut s = Summary::default();
        for r in &self.results {
            if r.exploratory {
                s.exploratory += 1;
            } else {
                match r.conclusion {
                    Conclusion::Holds => s.pass += 1,
                    Conclusion::Fails => s.fail += 1,
                    Conclusion::NotApplicable => s.vacuous += 1,
                }
            }
        }
        s
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.results.iter().filter(|r| r.failed())
    }

    /// Requested checks without a single instance whose hypothesis held.
    pub fn vacuous_checks(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|id| !self.results.iter().any(|r| &r.check_id == *id && r.hypothesis))
            .map(String::as_str)
            .collect()
    }

    pub fn passed(&self) -> bool {
        self.summary().fail == 0
    }

    pub fn results_for(&self, id: &str) -> impl Iterator<Item = &CheckResult> {
        let id = id.to_string();
        self.results.iter().filter(move |r| r.check_id == id)
    }

    pub fn to_json(&self) -> Value {
        let s = self.summary();
        json!({
            "runId": self.run_id,
            "corpus": self.corpus,
            "checks": self.checks,
            "results": self.results.iter().map(CheckResult::to_json).collect::<Vec<_>>(),
            "summary": { "pass": s.pass, "fail": s.fail, "vacuous": s.vacuous, "exploratory": s.exploratory },
            "observations": self.observations.iter().map(|o| json!({
                "group": o.group,
                "index": o.index.to_string(),
                "lastTermIndex": o.last_term_index.map(|i| i.to_string()),
                "maxDiameter": o.max_diameter,
                "nontrivialComponents": o.nontrivial_components,
            })).collect::<Vec<_>>(),
        })
    }
}

/// Expands `all` and validates check ids.
pub fn resolve_checks(ids: &[&str]) -> Result<Vec<&'static CheckInfo>> {
    if ids.contains(&"all") {
        return Ok(CATALOG.iter().collect());
    }
    ids.iter().map(|id| check_info(id)).collect()
}

fn fnv(parts: &[&str]) -> String {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for part in parts {
        for b in part.bytes().chain([0]) {
            h ^= b as u64;
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
    }
    format!("{h:016x}")
}

/// Runs the selected checks: single-group checks over every entry, pair
/// checks over the corpus pairs. Results are ordered by (group, checkId).
pub fn run_suite(corpus: &Corpus, ids: &[&str]) -> Result<SuiteReport> {
    let infos = resolve_checks(ids)?;
    let singles: Vec<&CheckInfo> = infos.iter().copied().filter(|c| c.arity == Arity::Single).collect();
    let pair_ids: Vec<&str> = infos.iter().filter(|c| c.arity == Arity::Pair).map(|c| c.id).collect();
    let pairs: Vec<&PairEntry> = corpus.pairs.iter().filter(|p| pair_ids.contains(&p.check.as_str())).collect();

    let mut keys: Vec<&CorpusEntry> = corpus.entries.iter().collect();
    for p in &pairs {
        keys.push(&p.left);
        keys.push(&p.right);
    }
    let mut unique: Vec<&CorpusEntry> = Vec::new();
    for k in keys {
        if !unique.iter().any(|u| u.key() == k.key()) {
            unique.push(k);
        }
    }
    let built: Vec<(String, Arc<Subject>)> = unique
        .par_iter()
        .map(|e| Ok((e.key(), Arc::new(corpus.resolve(e)?))))
        .collect::<Result<_>>()?;
    let subjects: HashMap<String, Arc<Subject>> = built.into_iter().collect();

    let mut jobs: Vec<(&str, Arc<Subject>, Option<Arc<Subject>>)> = Vec::new();
    if !singles.is_empty() {
        for e in &corpus.entries {
            for c in &singles {
                jobs.push((c.id, subjects[&e.key()].clone(), None));
            }
        }
    }
    for p in &pairs {
        jobs.push((p.check.as_str(), subjects[&p.left.key()].clone(), Some(subjects[&p.right.key()].clone())));
    }
    let limit = corpus.size_limit;
    let mut results: Vec<CheckResult> = jobs
        .par_iter()
        .map(|(id, a, b)| match b {
            None => run_check_with_limit(id, a, limit),
            Some(b) => run_pair_check(id, a, b),
        })
        .collect::<Result<_>>()?;
    results.sort_by(|x, y| (&x.group, &x.check_id).cmp(&(&y.group, &y.check_id)));

    let names: Vec<String> = corpus.entries.iter().map(|e| subjects[&e.key()].name.clone()).collect();
    let observations = corpus
        .entries
        .iter()
        .map(|e| {
            let s = &subjects[&e.key()];
            Observation {
                group: s.name.clone(),
                index: s.index(),
                last_term_index: s.last_term_index,
                max_diameter: s.gamma_components.iter().map(|c| c.diameter).max().unwrap_or(0),
                nontrivial_components: s.nontrivial_components().len(),
            }
        })
        .collect();
    let check_ids: Vec<String> = infos.iter().map(|c| c.id.to_string()).collect();
    let mut parts: Vec<&str> = names.iter().map(String::as_str).collect();
    parts.extend(check_ids.iter().map(String::as_str));
    let pair_names: Vec<String> = pairs.iter().map(|p| format!("{}:{}:{}", p.check, p.left.key(), p.right.key())).collect();
    parts.extend(pair_names.iter().map(String::as_str));
    Ok(SuiteReport {
        run_id: fnv(&parts),
        corpus: names,
        checks: check_ids,
        results,
        observations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{extraspecial, two_group, TwoGroupKind};

    #[test]
    fn catalog_ids_are_unique_and_resolvable() {
        for (i, c) in CATALOG.iter().enumerate() {
            assert!(CATALOG[i + 1..].iter().all(|d| d.id != c.id));
            assert_eq!(check_info(c.id).unwrap().id, c.id);
        }
        assert!(matches!(check_info("nope"), Err(Error::UnknownCheck(_))));
        assert_eq!(resolve_checks(&["all"]).unwrap().len(), CATALOG.len());
    }

    #[test]
    fn extraspecial_27_is_ca() {
        let s = Subject::from_table(extraspecial(3, 3, false).unwrap()).unwrap();
        let r = run_check("p3CA", &s).unwrap();
        assert!(r.hypothesis);
        assert_eq!(r.conclusion, Conclusion::Holds);
    }

    #[test]
    fn vacuous_results_are_not_applicable() {
        let s = Subject::from_table(two_group(TwoGroupKind::Dihedral, 16).unwrap()).unwrap();
        let r = run_check("derivedBound", &s).unwrap();
        assert!(!r.hypothesis);
        assert_eq!(r.conclusion, Conclusion::NotApplicable);
        assert_eq!(r.to_json()["conclusion"], "notApplicable");
        assert!(run_pair_check("p3CA", &s, &s).is_err());
        assert!(run_check("cSizes", &s).is_err());
    }

    #[test]
    fn run_ids_are_deterministic() {
        assert_eq!(fnv(&["a", "b"]), fnv(&["a", "b"]));
        assert_ne!(fnv(&["ab"]), fnv(&["a", "b"]));
    }
}
