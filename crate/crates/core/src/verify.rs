//! Property suites run over seeded random corpora.
//!
//! Each suite checks one identity or inequality about homomorphism counts
//! on every sample, computing the two sides along independent routes
//! (closed form, dispatched engine, or naive enumeration).

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::corpus::{CorpusError, CorpusSpec, GraphGenerator};
use crate::density::{
    check_complete_codomain_bound_with, check_complete_domain_bound_with,
    check_edgeless_iff_one_with, check_isolated_invariance_with, density_complete_complete,
    density_naive, density_with, BoundCheck, DensityError,
};
use crate::engine::{
    all_mappings, count_homomorphisms_naive_with, count_homomorphisms_with, count_injective, Count,
    EngineConfig, HomError, VertexMapping,
};
use crate::graph::Graph;

/// Largest clique order exercised by the complete-domain suites.
pub const CLIQUE_MAX: usize = 4;
/// Largest palette exercised by the complete-codomain suites.
pub const PALETTE_MAX: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    /// Density is one exactly for edgeless domains.
    EdgelessIffOne,
    /// Homomorphisms out of a complete graph are injective.
    CompleteDomainInjective,
    /// Injective maps into a complete graph are homomorphisms.
    CompleteCodomainInjective,
    /// `t(K_n, F) <= |I|/|M|`.
    CompleteDomainBound,
    /// `t(G, K_m) >= |I|/|M|`.
    CompleteCodomainBound,
    /// `t(K_n, K_m) = |I|/|M|`.
    CompleteComplete,
    /// Appending an isolated vertex leaves the density unchanged.
    IsolatedInvariance,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::EdgelessIffOne,
        Suite::CompleteDomainInjective,
        Suite::CompleteCodomainInjective,
        Suite::CompleteDomainBound,
        Suite::CompleteCodomainBound,
        Suite::CompleteComplete,
        Suite::IsolatedInvariance,
    ];

    pub fn selector(self) -> &'static str {
        match self {
            Suite::EdgelessIffOne => "thm2.1",
            Suite::CompleteDomainInjective => "lem2.2",
            Suite::CompleteCodomainInjective => "lem2.3",
            Suite::CompleteDomainBound => "thm2.4",
            Suite::CompleteCodomainBound => "thm2.5",
            Suite::CompleteComplete => "cor2.5.1",
            Suite::IsolatedInvariance => "thm2.6",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Suite::EdgelessIffOne => "t(G,F) = 1 iff G is edgeless",
            Suite::CompleteDomainInjective => "homomorphisms out of K_n are injective",
            Suite::CompleteCodomainInjective => "injective maps into K_m are homomorphisms",
            Suite::CompleteDomainBound => "t(K_n,F) <= |I|/|M|",
            Suite::CompleteCodomainBound => "t(G,K_m) >= |I|/|M|",
            Suite::CompleteComplete => "t(K_n,K_m) = |I|/|M|",
            Suite::IsolatedInvariance => "t(G,F) = t(G + isolated vertex, F)",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.selector())
    }
}

/// One suite or all of them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Selector {
    One(Suite),
    All,
}

impl Selector {
    pub fn suites(self) -> Vec<Suite> {
        match self {
            Selector::One(s) => vec![s],
            Selector::All => Suite::ALL.to_vec(),
        }
    }
}

impl FromStr for Selector {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "all" {
            return Ok(Selector::All);
        }
        Suite::ALL
            .into_iter()
            .find(|suite| suite.selector() == s)
            .map(Selector::One)
            .ok_or_else(|| {
                let names: Vec<_> = Suite::ALL.iter().map(|s| s.selector()).collect();
                format!("unknown suite {s:?}; expected one of {} or all", names.join(", "))
            })
    }
}

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Budget(HomError),
    #[error(transparent)]
    Corpus(#[from] CorpusError),
}

/// A violated case: the graphs involved and, when one exists, a mapping
/// exhibiting the violation.
#[derive(Debug, Clone)]
pub struct Failure {
    pub domain: Graph,
    pub codomain: Graph,
    pub mapping: Option<VertexMapping>,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: Suite,
    pub cases: usize,
    pub passed: usize,
    pub failures: Vec<Failure>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.failures.is_empty() && self.passed == self.cases
    }
}

struct Recorder {
    report: SuiteReport,
}

impl Recorder {
    fn new(suite: Suite) -> Self {
        Recorder {
            report: SuiteReport {
                suite,
                cases: 0,
                passed: 0,
                failures: Vec::new(),
            },
        }
    }

    /// Records one case; `outcome` lists the failures found in it.
    fn case(&mut self, outcome: Result<Vec<Failure>, VerifyError>) -> Result<(), VerifyError> {
        let failures = outcome?;
        self.report.cases += 1;
        if failures.is_empty() {
            self.report.passed += 1;
        }
        self.report.failures.extend(failures);
        Ok(())
    }
}

/// Splits engine errors: budget overruns abort the run, anything else is a
/// violation of the property under test.
fn lift<T>(
    result: Result<T, DensityError>,
    domain: &Graph,
    codomain: &Graph,
) -> Result<Result<T, Failure>, VerifyError> {
    match result {
        Ok(v) => Ok(Ok(v)),
        Err(DensityError::Hom(e @ HomError::BudgetExceeded { .. })) => Err(VerifyError::Budget(e)),
        Err(e) => Ok(Err(Failure {
            domain: domain.clone(),
            codomain: codomain.clone(),
            mapping: None,
            detail: e.to_string(),
        })),
    }
}

fn from_check(check: BoundCheck, domain: &Graph, codomain: &Graph, what: &str) -> Vec<Failure> {
    if check.holds {
        return Vec::new();
    }
    vec![Failure {
        domain: domain.clone(),
        codomain: codomain.clone(),
        mapping: check.witness.clone(),
        detail: format!("{what}: {check}"),
    }]
}

fn budgeted(e: HomError) -> VerifyError {
    VerifyError::Budget(e)
}

fn nonempty_range(spec: &CorpusSpec) -> (usize, usize) {
    (spec.n_min.max(1), spec.n_max.max(1))
}

pub fn run_suite(suite: Suite, spec: &CorpusSpec, config: &EngineConfig) -> Result<SuiteReport, VerifyError> {
    spec.validate()?;
    let mut gen = spec.generator();
    let mut rec = Recorder::new(suite);
    let (lo, hi) = (spec.n_min, spec.n_max);
    let (flo, fhi) = nonempty_range(spec);

    match suite {
        Suite::EdgelessIffOne => {
            for _ in 0..spec.samples {
                let (g, f) = draw_pair(&mut gen, spec);
                rec.case(edgeless_iff_one_case(&g, &f, config))?;
            }
        }
        Suite::CompleteDomainInjective => {
            for _ in 0..spec.samples {
                let f = gen.graph(flo, fhi);
                rec.case(complete_domain_injective_case(&f, config))?;
            }
        }
        Suite::CompleteCodomainInjective => {
            for _ in 0..spec.samples {
                let g = gen.graph(lo, hi);
                rec.case(complete_codomain_injective_case(&g, config))?;
            }
        }
        Suite::CompleteDomainBound => {
            for _ in 0..spec.samples {
                let f = gen.graph(flo, fhi);
                rec.case(complete_domain_bound_case(&f, config))?;
            }
        }
        Suite::CompleteCodomainBound => {
            for _ in 0..spec.samples {
                let g = gen.graph(lo, hi);
                rec.case(complete_codomain_bound_case(&g, config))?;
            }
        }
        Suite::CompleteComplete => {
            for n in 1..=spec.n_max {
                for m in 1..=spec.n_max {
                    rec.case(complete_complete_case(n, m, config))?;
                }
            }
        }
        Suite::IsolatedInvariance => {
            for _ in 0..spec.samples {
                let (g, f) = draw_pair(&mut gen, spec);
                rec.case(isolated_invariance_case(&g, &f, config))?;
            }
        }
    }
    Ok(rec.report)
}

/// Runs every selected suite in order.
pub fn run(selector: Selector, spec: &CorpusSpec, config: &EngineConfig) -> Result<Vec<SuiteReport>, VerifyError> {
    selector
        .suites()
        .into_iter()
        .map(|suite| run_suite(suite, spec, config))
        .collect()
}

pub fn edgeless_iff_one_case(g: &Graph, f: &Graph, config: &EngineConfig) -> Result<Vec<Failure>, VerifyError> {
    Ok(match lift(check_edgeless_iff_one_with(g, f, config), g, f)? {
        Ok(check) => from_check(check, g, f, "density one iff edgeless"),
        Err(failure) => vec![failure],
    })
}

/// Enumerates every homomorphism `K_n -> f` for `n <= CLIQUE_MAX`; each must
/// be injective, and the engine's count must match the enumeration.
pub fn complete_domain_injective_case(f: &Graph, config: &EngineConfig) -> Result<Vec<Failure>, VerifyError> {
    let mut failures = Vec::new();
    for n in 0..=CLIQUE_MAX {
        let kn = Graph::complete(n);
        let mut homs = 0u64;
        for m in all_mappings(n, f.vertex_count(), config.budget).map_err(budgeted)? {
            if crate::engine::is_homomorphism(&kn, f, &m).expect("enumerated mappings are valid") {
                homs += 1;
                if !m.is_injective() {
                    failures.push(Failure {
                        domain: kn.clone(),
                        codomain: f.clone(),
                        mapping: Some(m),
                        detail: format!("non-injective homomorphism out of K_{n}"),
                    });
                }
            }
        }
        let (engine, _) = count_homomorphisms_with(&kn, f, config);
        let injective = count_injective(&kn, f);
        if engine != Count::from(homs) || engine > injective {
            failures.push(Failure {
                domain: kn.clone(),
                codomain: f.clone(),
                mapping: None,
                detail: format!("engine |H| = {engine}, enumerated |H| = {homs}, |I| = {injective}"),
            });
        }
    }
    Ok(failures)
}

/// Enumerates every injective mapping `g -> K_m` for `1 <= m <= PALETTE_MAX`;
/// each must be a homomorphism, so the engine's `|H|` is at least `|I|`.
pub fn complete_codomain_injective_case(g: &Graph, config: &EngineConfig) -> Result<Vec<Failure>, VerifyError> {
    let mut failures = Vec::new();
    for m in 1..=PALETTE_MAX {
        let km = Graph::complete(m);
        for map in all_mappings(g.vertex_count(), m, config.budget).map_err(budgeted)? {
            if map.is_injective() && !crate::engine::is_homomorphism(g, &km, &map).expect("valid mapping") {
                failures.push(Failure {
                    domain: g.clone(),
                    codomain: km.clone(),
                    mapping: Some(map),
                    detail: format!("injective map into K_{m} is not a homomorphism"),
                });
            }
        }
        let (engine, _) = count_homomorphisms_with(g, &km, config);
        let injective = count_injective(g, &km);
        if engine < injective {
            failures.push(Failure {
                domain: g.clone(),
                codomain: km.clone(),
                mapping: None,
                detail: format!("engine |H| = {engine} below |I| = {injective}"),
            });
        }
    }
    Ok(failures)
}

pub fn complete_domain_bound_case(f: &Graph, config: &EngineConfig) -> Result<Vec<Failure>, VerifyError> {
    let mut failures = Vec::new();
    for n in 0..=CLIQUE_MAX {
        let kn = Graph::complete(n);
        match lift(check_complete_domain_bound_with(n, f, config), &kn, f)? {
            Ok(check) => failures.extend(from_check(check, &kn, f, "complete-domain bound")),
            Err(failure) => failures.push(failure),
        }
    }
    Ok(failures)
}

pub fn complete_codomain_bound_case(g: &Graph, config: &EngineConfig) -> Result<Vec<Failure>, VerifyError> {
    let mut failures = Vec::new();
    for m in 1..=PALETTE_MAX {
        let km = Graph::complete(m);
        match lift(check_complete_codomain_bound_with(g, m, config), g, &km)? {
            Ok(check) => failures.extend(from_check(check, g, &km, "complete-codomain bound")),
            Err(failure) => failures.push(failure),
        }
    }
    Ok(failures)
}

/// Closed form against both the engine and the naive oracle.
pub fn complete_complete_case(n: usize, m: usize, config: &EngineConfig) -> Result<Vec<Failure>, VerifyError> {
    let (kn, km) = (Graph::complete(n), Graph::complete(m));
    let closed = match lift(density_complete_complete(n, m), &kn, &km)? {
        Ok(d) => d,
        Err(failure) => return Ok(vec![failure]),
    };
    let engine = match lift(density_with(&kn, &km, config), &kn, &km)? {
        Ok(d) => d,
        Err(failure) => return Ok(vec![failure]),
    };
    let naive = match lift(density_naive(&kn, &km, config), &kn, &km)? {
        Ok(d) => d,
        Err(failure) => return Ok(vec![failure]),
    };
    if closed == engine && closed == naive {
        return Ok(Vec::new());
    }
    Ok(vec![Failure {
        domain: kn,
        codomain: km,
        mapping: None,
        detail: format!("closed form {closed}, engine {engine}, naive {naive}"),
    }])
}

/// Density invariance plus the counting identity
/// `hom(g + v, f) = |V(f)| * hom(g, f)`, engine on the left, oracle on the right.
pub fn isolated_invariance_case(g: &Graph, f: &Graph, config: &EngineConfig) -> Result<Vec<Failure>, VerifyError> {
    let mut failures = match lift(check_isolated_invariance_with(g, f, config), g, f)? {
        Ok(check) => from_check(check, g, f, "isolated-vertex invariance"),
        Err(failure) => vec![failure],
    };
    let extended = g.with_isolated(1);
    let (lhs, _) = count_homomorphisms_with(&extended, f, config);
    let (base, _) = count_homomorphisms_naive_with(g, f, config).map_err(budgeted)?;
    let rhs = base * f.vertex_count();
    if lhs != rhs {
        failures.push(Failure {
            domain: extended,
            codomain: f.clone(),
            mapping: None,
            detail: format!("hom(G+v,F) = {lhs} but |V(F)|*hom(G,F) = {rhs}"),
        });
    }
    Ok(failures)
}

/// Convenience for drawing domain/codomain pairs the same way the suites do.
pub fn draw_pair(gen: &mut GraphGenerator, spec: &CorpusSpec) -> (Graph, Graph) {
    let (flo, fhi) = nonempty_range(spec);
    let g = gen.graph(spec.n_min, spec.n_max);
    let f = gen.graph(flo, fhi);
    (g, f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selectors() {
        assert_eq!("all".parse::<Selector>().unwrap().suites().len(), 7);
        assert_eq!(
            "cor2.5.1".parse::<Selector>().unwrap(),
            Selector::One(Suite::CompleteComplete)
        );
        assert!("thm9".parse::<Selector>().is_err());
    }

    #[test]
    fn every_suite_passes_on_a_small_corpus() {
        let spec = CorpusSpec {
            samples: 25,
            ..CorpusSpec::default()
        };
        for report in run(Selector::All, &spec, &EngineConfig::default()).unwrap() {
            assert!(report.all_passed(), "{}: {:?}", report.suite, report.failures);
        }
    }

    #[test]
    fn complete_complete_is_exhaustive() {
        let spec = CorpusSpec::default();
        let report = run_suite(Suite::CompleteComplete, &spec, &EngineConfig::default()).unwrap();
        assert_eq!(report.cases, 25);
        assert!(report.all_passed());
    }

    #[test]
    fn injected_fault_is_caught() {
        let spec = CorpusSpec {
            samples: 50,
            ..CorpusSpec::default()
        };
        let config = EngineConfig {
            inject_fault: true,
            ..EngineConfig::default()
        };
        let report = run_suite(Suite::IsolatedInvariance, &spec, &config).unwrap();
        assert!(!report.all_passed());
        assert!(!report.failures.is_empty());
    }

    #[test]
    fn budget_overrun_aborts() {
        let spec = CorpusSpec {
            n_min: 5,
            n_max: 5,
            samples: 1,
            ..CorpusSpec::default()
        };
        let config = EngineConfig {
            budget: 10,
            ..EngineConfig::default()
        };
        assert!(matches!(
            run_suite(Suite::IsolatedInvariance, &spec, &config),
            Err(VerifyError::Budget(_))
        ));
    }
}
