//! Homomorphism density `t(G, F) = |H| / |M|` as an exact reduced fraction,
//! and executable checks for the identities and bounds it satisfies.
//!
//! Conventions for degenerate inputs: an empty domain has density 1 (the
//! empty mapping is vacuously a homomorphism); a nonempty domain with an
//! empty codomain has no mappings at all and its density is undefined.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::engine::{
    all_mappings, count_homomorphisms_naive_with, count_homomorphisms_with, count_injective,
    count_mappings, falling_factorial, is_homomorphism, power, Count, EngineConfig, HomError,
    VertexMapping,
};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DensityError {
    #[error("density undefined: the codomain is empty but the domain has {domain} vertices")]
    EmptyCodomain { domain: usize },
    #[error("{numerator}/{denominator} is not a density in [0, 1]")]
    OutOfRange {
        numerator: Count,
        denominator: Count,
    },
    #[error(transparent)]
    Hom(#[from] HomError),
}

/// A reduced fraction in `[0, 1]` with a positive denominator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Density {
    numerator: Count,
    denominator: Count,
}

impl Density {
    pub fn new(numerator: Count, denominator: Count) -> Result<Density, DensityError> {
        if denominator.is_zero() || numerator > denominator {
            return Err(DensityError::OutOfRange {
                numerator,
                denominator,
            });
        }
        let g = numerator.gcd(&denominator);
        Ok(Density {
            numerator: numerator / &g,
            denominator: denominator / g,
        })
    }

    pub fn zero() -> Density {
        Density {
            numerator: Count::zero(),
            denominator: Count::one(),
        }
    }

    pub fn one() -> Density {
        Density {
            numerator: Count::one(),
            denominator: Count::one(),
        }
    }

    pub fn numerator(&self) -> &Count {
        &self.numerator
    }

    pub fn denominator(&self) -> &Count {
        &self.denominator
    }

    pub fn is_one(&self) -> bool {
        self.numerator == self.denominator
    }
}

impl Ord for Density {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.numerator * &other.denominator).cmp(&(&other.numerator * &self.denominator))
    }
}

impl PartialOrd for Density {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Density {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

/// `hom / |M|` for the pair, with the degenerate conventions applied.
fn ratio_over_mappings(g: &Graph, f: &Graph, hom: Count) -> Result<Density, DensityError> {
    if f.vertex_count() == 0 && g.vertex_count() > 0 {
        return Err(DensityError::EmptyCodomain {
            domain: g.vertex_count(),
        });
    }
    Density::new(hom, count_mappings(g, f))
}

fn require_codomain(g: &Graph, f: &Graph) -> Result<(), DensityError> {
    if f.vertex_count() == 0 && g.vertex_count() > 0 {
        return Err(DensityError::EmptyCodomain {
            domain: g.vertex_count(),
        });
    }
    Ok(())
}

/// `t(g, f)` computed with the dispatched engine.
pub fn density(g: &Graph, f: &Graph) -> Result<Density, DensityError> {
    density_with(g, f, &EngineConfig::default())
}

pub fn density_with(g: &Graph, f: &Graph, config: &EngineConfig) -> Result<Density, DensityError> {
    require_codomain(g, f)?;
    let (hom, _) = count_homomorphisms_with(g, f, config);
    ratio_over_mappings(g, f, hom)
}

/// `t(g, f)` computed with the naive enumeration oracle.
pub fn density_naive(g: &Graph, f: &Graph, config: &EngineConfig) -> Result<Density, DensityError> {
    require_codomain(g, f)?;
    let (hom, _) = count_homomorphisms_naive_with(g, f, config)?;
    ratio_over_mappings(g, f, hom)
}

/// `|I| / |M|` in closed form.
pub fn injective_density(g: &Graph, f: &Graph) -> Result<Density, DensityError> {
    require_codomain(g, f)?;
    ratio_over_mappings(g, f, count_injective(g, f))
}

/// `t(K_n, K_m)` in closed form: `m (m-1) ... (m-n+1) / m^n`.
pub fn density_complete_complete(n: usize, m: usize) -> Result<Density, DensityError> {
    if m == 0 && n > 0 {
        return Err(DensityError::EmptyCodomain { domain: n });
    }
    Density::new(falling_factorial(m, n), power(m, n))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

impl Relation {
    pub fn holds(self, lhs: &Density, rhs: &Density) -> bool {
        match self {
            Relation::Le => lhs <= rhs,
            Relation::Ge => lhs >= rhs,
            Relation::Eq => lhs == rhs,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Le => "<=",
            Relation::Ge => ">=",
            Relation::Eq => "==",
        }
    }
}

/// Outcome of comparing two independently computed densities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundCheck {
    pub lhs: Density,
    pub rhs: Density,
    pub relation: Relation,
    pub holds: bool,
    /// A mapping demonstrating the failure of the property, when one exists.
    pub witness: Option<VertexMapping>,
}

impl BoundCheck {
    fn new(lhs: Density, relation: Relation, rhs: Density) -> BoundCheck {
        let holds = relation.holds(&lhs, &rhs);
        BoundCheck {
            lhs,
            rhs,
            relation,
            holds,
            witness: None,
        }
    }
}

impl fmt::Display for BoundCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {}: {}",
            self.lhs,
            self.relation.symbol(),
            self.rhs,
            if self.holds { "holds" } else { "VIOLATED" }
        )?;
        if let Some(w) = &self.witness {
            write!(f, " (witness {w})")?;
        }
        Ok(())
    }
}

fn require_nonempty(g: &Graph, f: &Graph) -> Result<(), DensityError> {
    if f.vertex_count() == 0 {
        return Err(DensityError::EmptyCodomain {
            domain: g.vertex_count(),
        });
    }
    Ok(())
}

/// Checks that `t(g, f) = 1` exactly when `g` has no edges.
///
/// For an edgeless `g` this compares `t(g, f)` with 1. Otherwise the
/// mapping sending both ends of the first edge (indeed every vertex) to
/// vertex 0 is not a homomorphism, so `|H| <= |M| - 1`; the check compares
/// `t(g, f)` against `(|M| - 1) / |M|` and carries that mapping as witness.
pub fn check_edgeless_iff_one(g: &Graph, f: &Graph) -> Result<BoundCheck, DensityError> {
    check_edgeless_iff_one_with(g, f, &EngineConfig::default())
}

pub fn check_edgeless_iff_one_with(
    g: &Graph,
    f: &Graph,
    config: &EngineConfig,
) -> Result<BoundCheck, DensityError> {
    require_nonempty(g, f)?;
    let t = density_with(g, f, config)?;
    if g.is_edgeless() {
        return Ok(BoundCheck::new(t, Relation::Eq, Density::one()));
    }
    let witness = VertexMapping::constant(g.vertex_count(), 0);
    let mappings = count_mappings(g, f);
    let mut check = BoundCheck::new(t, Relation::Le, Density::new(&mappings - 1u32, mappings)?);
    check.holds &= !is_homomorphism(g, f, &witness)?;
    check.witness = Some(witness);
    Ok(check)
}

/// Searches for a mapping satisfying `pred` when the enumeration fits the budget.
fn find_mapping(
    g: &Graph,
    f: &Graph,
    config: &EngineConfig,
    pred: impl Fn(&VertexMapping) -> bool,
) -> Option<VertexMapping> {
    all_mappings(g.vertex_count(), f.vertex_count(), config.budget)
        .ok()?
        .find(|m| pred(m))
}

/// `t(K_n, f) <= |I| / |M|`: the left side by search, the right in closed form.
pub fn check_complete_domain_bound(n: usize, f: &Graph) -> Result<BoundCheck, DensityError> {
    check_complete_domain_bound_with(n, f, &EngineConfig::default())
}

pub fn check_complete_domain_bound_with(
    n: usize,
    f: &Graph,
    config: &EngineConfig,
) -> Result<BoundCheck, DensityError> {
    let kn = Graph::complete(n);
    require_nonempty(&kn, f)?;
    let mut check = BoundCheck::new(
        density_with(&kn, f, config)?,
        Relation::Le,
        injective_density(&kn, f)?,
    );
    if !check.holds {
        check.witness = find_mapping(&kn, f, config, |m| {
            !m.is_injective() && is_homomorphism(&kn, f, m).unwrap_or(false)
        });
    }
    Ok(check)
}

/// `t(g, K_m) >= |I| / |M|`: the left side by search, the right in closed form.
pub fn check_complete_codomain_bound(g: &Graph, m: usize) -> Result<BoundCheck, DensityError> {
    check_complete_codomain_bound_with(g, m, &EngineConfig::default())
}

pub fn check_complete_codomain_bound_with(
    g: &Graph,
    m: usize,
    config: &EngineConfig,
) -> Result<BoundCheck, DensityError> {
    let km = Graph::complete(m);
    require_codomain(g, &km)?;
    let mut check = BoundCheck::new(
        density_with(g, &km, config)?,
        Relation::Ge,
        injective_density(g, &km)?,
    );
    if !check.holds {
        check.witness = find_mapping(g, &km, config, |map| {
            map.is_injective() && !is_homomorphism(g, &km, map).unwrap_or(true)
        });
    }
    Ok(check)
}

/// `t(g, f) = t(g + isolated vertex, f)`. The left side uses the naive
/// oracle when it fits the budget, the right side always the engine.
pub fn check_isolated_invariance(g: &Graph, f: &Graph) -> Result<BoundCheck, DensityError> {
    check_isolated_invariance_with(g, f, &EngineConfig::default())
}

pub fn check_isolated_invariance_with(
    g: &Graph,
    f: &Graph,
    config: &EngineConfig,
) -> Result<BoundCheck, DensityError> {
    require_nonempty(g, f)?;
    let lhs = match density_naive(g, f, config) {
        Err(DensityError::Hom(HomError::BudgetExceeded { .. })) => density_with(g, f, config)?,
        other => other?,
    };
    let rhs = density_with(&g.with_isolated(1), f, config)?;
    Ok(BoundCheck::new(lhs, Relation::Eq, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn d(num: u64, den: u64) -> Density {
        Density::new(BigUint::from(num), BigUint::from(den)).unwrap()
    }

    fn bowtie_codomain() -> Graph {
        Graph::new(6, &[(0, 1), (1, 2), (2, 3), (1, 4), (4, 2), (2, 5)]).unwrap()
    }

    fn double_star_domain() -> Graph {
        Graph::new(6, &[(0, 1), (1, 2), (2, 3), (1, 4), (2, 5)]).unwrap()
    }

    #[test]
    fn reduction_and_ordering() {
        let t = d(120, 625);
        assert_eq!((t.numerator(), t.denominator()), (&BigUint::from(24u32), &BigUint::from(125u32)));
        assert_eq!(d(0, 7), Density::zero());
        assert_eq!(d(18, 81), d(6, 27));
        assert!(d(1, 36) < d(5, 9));
        assert!(Density::new(BigUint::from(2u32), BigUint::from(1u32)).is_err());
        assert!(Density::new(BigUint::zero(), BigUint::zero()).is_err());
        assert_eq!(d(24, 125).to_string(), "24/125");
    }

    #[test]
    fn density_examples() {
        let p3 = Graph::path(3).unwrap();
        assert_eq!(density(&Graph::complete(4), &Graph::complete(5)).unwrap(), d(24, 125));
        assert_eq!(density(&Graph::complete(4), &p3).unwrap(), d(0, 1));
        assert_eq!(density(&Graph::complete(3), &bowtie_codomain()).unwrap(), d(1, 36));
    }

    #[test]
    fn density_conventions() {
        let empty = Graph::edgeless(0);
        assert_eq!(density(&empty, &empty).unwrap(), Density::one());
        assert_eq!(density(&empty, &Graph::complete(2)).unwrap(), Density::one());
        assert_eq!(
            density(&Graph::edgeless(2), &empty),
            Err(DensityError::EmptyCodomain { domain: 2 })
        );
        assert!(matches!(
            injective_density(&Graph::edgeless(2), &empty),
            Err(DensityError::EmptyCodomain { .. })
        ));
    }

    #[test]
    fn injective_density_examples() {
        assert_eq!(injective_density(&Graph::complete(3), &bowtie_codomain()).unwrap(), d(5, 9));
        assert_eq!(injective_density(&double_star_domain(), &Graph::complete(6)).unwrap(), d(5, 324));
        assert_eq!(
            injective_density(&Graph::complete(4), &Graph::path(3).unwrap()).unwrap(),
            Density::zero()
        );
    }

    #[test]
    fn edgeless_iff_one_examples() {
        let c = check_edgeless_iff_one(&Graph::edgeless(4), &Graph::cycle(5).unwrap()).unwrap();
        assert!(c.holds);
        assert_eq!(c.lhs, Density::one());
        assert_eq!(c.witness, None);

        let k2 = Graph::complete(2);
        let c = check_edgeless_iff_one(&k2, &k2).unwrap();
        assert!(c.holds);
        assert_eq!(c.lhs, d(1, 2));
        assert_eq!(c.witness, Some(VertexMapping::constant(2, 0)));

        let c = check_edgeless_iff_one(&Graph::edgeless(0), &Graph::complete(3)).unwrap();
        assert!(c.holds);
        assert_eq!(c.lhs, Density::one());

        assert!(check_edgeless_iff_one(&k2, &Graph::edgeless(0)).is_err());
    }

    #[test]
    fn complete_domain_bound_examples() {
        let c = check_complete_domain_bound(3, &bowtie_codomain()).unwrap();
        assert_eq!((c.lhs.clone(), c.rhs.clone(), c.holds), (d(1, 36), d(5, 9), true));
        let c = check_complete_domain_bound(4, &Graph::path(3).unwrap()).unwrap();
        assert_eq!((c.lhs.clone(), c.rhs.clone(), c.holds), (Density::zero(), Density::zero(), true));
        let c = check_complete_domain_bound(1, &Graph::cycle(4).unwrap()).unwrap();
        assert_eq!((c.lhs.clone(), c.rhs.clone(), c.holds), (Density::one(), Density::one(), true));
    }

    #[test]
    fn complete_codomain_bound_examples() {
        let c = check_complete_codomain_bound(&double_star_domain(), 6).unwrap();
        assert_eq!((c.lhs.clone(), c.rhs.clone(), c.holds), (d(3125, 7776), d(5, 324), true));
        let c = check_complete_codomain_bound(&Graph::path(3).unwrap(), 3).unwrap();
        assert_eq!((c.lhs.clone(), c.rhs.clone(), c.holds), (d(4, 9), d(2, 9), true));
        let c = check_complete_codomain_bound(&Graph::edgeless(2), 2).unwrap();
        assert_eq!((c.lhs.clone(), c.rhs.clone(), c.holds), (Density::one(), d(1, 2), true));
    }

    #[test]
    fn complete_complete_closed_form() {
        assert_eq!(density_complete_complete(4, 5).unwrap(), d(24, 125));
        assert_eq!(density_complete_complete(3, 3).unwrap(), d(2, 9));
        assert_eq!(density_complete_complete(4, 3).unwrap(), Density::zero());
        assert_eq!(density_complete_complete(0, 0).unwrap(), Density::one());
        assert!(density_complete_complete(1, 0).is_err());
    }

    #[test]
    fn isolated_invariance_examples() {
        let k3 = Graph::complete(3);
        let c = check_isolated_invariance(&k3, &k3).unwrap();
        assert!(c.holds);
        assert_eq!(c.lhs, d(2, 9));
        let c = check_isolated_invariance(&Graph::complete(4), &Graph::path(3).unwrap()).unwrap();
        assert!(c.holds);
        assert_eq!(c.lhs, Density::zero());
        let c = check_isolated_invariance(&Graph::edgeless(2), &Graph::complete(2)).unwrap();
        assert!(c.holds);
        assert_eq!(c.lhs, Density::one());
    }

    #[test]
    fn injected_fault_breaks_isolated_invariance() {
        let config = EngineConfig {
            inject_fault: true,
            ..EngineConfig::default()
        };
        let p3 = Graph::path(3).unwrap();
        let c4 = Graph::cycle(4).unwrap();
        let c = check_isolated_invariance_with(&p3, &c4, &config).unwrap();
        assert!(!c.holds);
    }
}
