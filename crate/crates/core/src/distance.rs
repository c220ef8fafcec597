//! `s(M, N)`, the distance `d(M, N) = 1 - s(M, N) · s(N, M)`, sandwich
//! bounds and metric-axiom checks.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::homomorphism::{find_homomorphism, VertexMap};
use crate::limits::Limits;
use crate::lp::{solve_orbit_lp, LpSolution, OrbitLp};
use crate::maxcol::{mc, orbit_counts, solution_vectors, WeightFunction};
use crate::scalar::Scalar;
use crate::symmetry::{edge_orbits, OrbitPartition};

/// How an s-value was obtained, with the evidence for it.
#[derive(Clone, Debug)]
pub enum SRoute<T> {
    /// `N -> M`, so `s = 1`; carries the homomorphism.
    Homomorphism(VertexMap),
    /// `N` edge-transitive: `s = mc_M(N, 1/e(N))`, carries an optimal map.
    EdgeTransitive {
        orbits: OrbitPartition,
        witness: VertexMap,
    },
    /// Orbit program over the solution vectors of `N -> M`.
    OrbitProgram {
        orbits: OrbitPartition,
        program: OrbitLp,
        solution: LpSolution<T>,
    },
}

#[derive(Clone, Debug)]
pub struct SValue<T> {
    pub value: T,
    pub route: SRoute<T>,
}

fn require_edges(g: &Graph) -> Result<()> {
    if g.is_edgeless() {
        Err(Error::Edgeless)
    } else {
        Ok(())
    }
}

/// Builds and solves the orbit program for `s(M, N)` regardless of shortcuts.
pub fn s_via_orbit_program<T: Scalar>(m: &Graph, n: &Graph, limits: &Limits) -> Result<SValue<T>> {
    require_edges(m)?;
    require_edges(n)?;
    let orbits = edge_orbits(n, limits)?;
    let program = OrbitLp::from_orbits(&orbits, solution_vectors(m, n, &orbits, limits)?)?;
    let solution = solve_orbit_lp::<T>(&program)?;
    Ok(SValue {
        value: solution.optimum.clone(),
        route: SRoute::OrbitProgram {
            orbits,
            program,
            solution,
        },
    })
}

/// Exact `s(M, N)`: 1 when `N -> M`; `mc_M(N, 1/e(N))` when `N` is
/// edge-transitive; the orbit program otherwise.
pub fn s_value<T: Scalar>(m: &Graph, n: &Graph, limits: &Limits) -> Result<SValue<T>> {
    require_edges(m)?;
    require_edges(n)?;
    if let Some(h) = find_homomorphism(n, m, limits)? {
        return Ok(SValue {
            value: T::one(),
            route: SRoute::Homomorphism(h),
        });
    }
    let orbits = edge_orbits(n, limits)?;
    if orbits.len() == 1 {
        let best = mc(m, &WeightFunction::<T>::uniform(n)?, limits)?;
        return Ok(SValue {
            value: best.value,
            route: SRoute::EdgeTransitive {
                orbits,
                witness: best.witness,
            },
        });
    }
    let program = OrbitLp::from_orbits(&orbits, solution_vectors(m, n, &orbits, limits)?)?;
    let solution = solve_orbit_lp::<T>(&program)?;
    Ok(SValue {
        value: solution.optimum.clone(),
        route: SRoute::OrbitProgram {
            orbits,
            program,
            solution,
        },
    })
}

impl<T: Scalar> SValue<T> {
    /// Orbit weights certifying the value, if the route produced them.
    pub fn certificate_weights(&self) -> Option<Vec<T>> {
        match &self.route {
            SRoute::Homomorphism(_) => None,
            SRoute::EdgeTransitive { witness, .. } => {
                Some(vec![T::one() / T::from_usize(witness.source().edge_count())])
            }
            SRoute::OrbitProgram { solution, .. } => Some(solution.weights.clone()),
        }
    }

    /// Solution vectors attaining the value.
    pub fn tight_vectors(&self) -> Vec<Vec<usize>> {
        match &self.route {
            SRoute::Homomorphism(_) => Vec::new(),
            SRoute::EdgeTransitive { orbits, witness } => orbit_counts(witness, orbits)
                .map(|v| vec![v.0])
                .unwrap_or_default(),
            SRoute::OrbitProgram {
                program, solution, ..
            } => solution
                .tight_vectors
                .iter()
                .map(|&i| program.vectors()[i].0.clone())
                .collect(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct DistanceReport<T> {
    /// `s(M, N)`.
    pub s_mn: SValue<T>,
    /// `s(N, M)`.
    pub s_nm: SValue<T>,
    pub d: T,
    pub hom_m_to_n: bool,
    pub hom_n_to_m: bool,
}

pub fn distance<T: Scalar>(m: &Graph, n: &Graph, limits: &Limits) -> Result<DistanceReport<T>> {
    let (s_mn, s_nm) = rayon::join(|| s_value::<T>(m, n, limits), || s_value::<T>(n, m, limits));
    let (s_mn, s_nm) = (s_mn?, s_nm?);
    let hom_n_to_m = matches!(s_mn.route, SRoute::Homomorphism(_));
    let hom_m_to_n = matches!(s_nm.route, SRoute::Homomorphism(_));
    let d = T::one() - s_mn.value.clone() * s_nm.value.clone();
    Ok(DistanceReport {
        s_mn,
        s_nm,
        d,
        hom_m_to_n,
        hom_n_to_m,
    })
}

#[derive(Clone, Debug)]
pub struct SandwichBounds<T> {
    /// Lower bound on `s(M, H)`.
    pub s_mh: T,
    /// Lower bound on `s(H, N)`.
    pub s_hn: T,
    pub s_mn: SValue<T>,
    pub m_to_h: VertexMap,
    pub h_to_n: VertexMap,
}

/// For `M -> H -> N` (both verified by search), `s(M, N)` bounds `s(M, H)`
/// and `s(H, N)` from below.
pub fn sandwich_bounds<T: Scalar>(
    m: &Graph,
    h: &Graph,
    n: &Graph,
    limits: &Limits,
) -> Result<SandwichBounds<T>> {
    let m_to_h = find_homomorphism(m, h, limits)?
        .ok_or_else(|| Error::SandwichPremise("M -> H".into()))?;
    let h_to_n = find_homomorphism(h, n, limits)?
        .ok_or_else(|| Error::SandwichPremise("H -> N".into()))?;
    let s_mn = s_value::<T>(m, n, limits)?;
    Ok(SandwichBounds {
        s_mh: s_mn.value.clone(),
        s_hn: s_mn.value.clone(),
        s_mn,
        m_to_h,
        h_to_n,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axiom {
    Nonnegativity,
    Symmetry,
    IdentityOfIndiscernibles,
    TriangleInequality,
    Submultiplicativity,
}

impl Axiom {
    pub const ALL: [Axiom; 5] = [
        Axiom::Nonnegativity,
        Axiom::Symmetry,
        Axiom::IdentityOfIndiscernibles,
        Axiom::TriangleInequality,
        Axiom::Submultiplicativity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::Nonnegativity => "nonnegativity",
            Axiom::Symmetry => "symmetry",
            Axiom::IdentityOfIndiscernibles => "identity",
            Axiom::TriangleInequality => "triangle",
            Axiom::Submultiplicativity => "submultiplicativity",
        }
    }
}

#[derive(Clone, Debug)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    pub checked: usize,
    /// Pool indices of each violating pair or triple.
    pub violations: Vec<Vec<usize>>,
}

impl AxiomCheck {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct MetricReport<T> {
    /// `s[i][j] = s(pool[i], pool[j])`.
    pub s: Vec<Vec<T>>,
    /// `d[i][j] = d(pool[i], pool[j])`.
    pub d: Vec<Vec<T>>,
    /// `hom[i][j]`: `pool[i] -> pool[j]`.
    pub hom: Vec<Vec<bool>>,
    pub axioms: Vec<AxiomCheck>,
}

impl<T> MetricReport<T> {
    pub fn all_hold(&self) -> bool {
        self.axioms.iter().all(AxiomCheck::holds)
    }

    pub fn equivalent(&self, i: usize, j: usize) -> bool {
        self.hom[i][j] && self.hom[j][i]
    }
}

/// Computes every ordered s-value over `pool` and checks the metric axioms
/// plus `s(M,N) · s(N,K) ≤ s(M,K)` over all pairs and triples.
pub fn check_metric_axioms<T: Scalar>(pool: &[Graph], limits: &Limits) -> Result<MetricReport<T>> {
    let k = pool.len();
    let pairs: Vec<(usize, usize)> = (0..k).flat_map(|i| (0..k).map(move |j| (i, j))).collect();
    let computed: Vec<Result<(T, bool)>> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let hom = find_homomorphism(&pool[i], &pool[j], limits)?.is_some();
            let s = s_value::<T>(&pool[i], &pool[j], limits)?.value;
            Ok((s, hom))
        })
        .collect();
    let mut s = vec![vec![T::zero(); k]; k];
    let mut hom = vec![vec![false; k]; k];
    for (&(i, j), r) in pairs.iter().zip(computed) {
        let (value, h) = r?;
        s[i][j] = value;
        hom[i][j] = h;
    }
    let d: Vec<Vec<T>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| T::one() - s[i][j].clone() * s[j][i].clone())
                .collect()
        })
        .collect();

    let le = |a: &T, b: &T| a <= b || a.approx_eq(b);
    let mut checks: Vec<AxiomCheck> = Axiom::ALL
        .iter()
        .map(|&axiom| AxiomCheck {
            axiom,
            checked: 0,
            violations: Vec::new(),
        })
        .collect();
    for i in 0..k {
        for j in 0..k {
            checks[0].checked += 1;
            if !le(&T::zero(), &d[i][j]) || !le(&s[i][j], &T::one()) {
                checks[0].violations.push(vec![i, j]);
            }
            checks[1].checked += 1;
            if !d[i][j].approx_eq(&d[j][i]) {
                checks[1].violations.push(vec![i, j]);
            }
            checks[2].checked += 1;
            let equivalent = hom[i][j] && hom[j][i];
            let s_one = s[j][i].approx_eq(&T::one());
            if d[i][j].is_negligible() != equivalent || s_one != hom[i][j] {
                checks[2].violations.push(vec![i, j]);
            }
            for l in 0..k {
                checks[3].checked += 1;
                if !le(&d[i][l], &(d[i][j].clone() + d[j][l].clone())) {
                    checks[3].violations.push(vec![i, j, l]);
                }
                checks[4].checked += 1;
                if !le(&(s[i][j].clone() * s[j][l].clone()), &s[i][l]) {
                    checks[4].violations.push(vec![i, j, l]);
                }
            }
        }
    }
    Ok(MetricReport {
        s,
        d,
        hom,
        axioms: checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, rational_complete, wheel};
    use crate::{rational, Rational};

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn s_examples() {
        assert_eq!(s_value::<Rational>(&complete(2), &cycle(9).unwrap(), &lim()).unwrap().value, rational(8, 9));
        let w8 = s_value::<Rational>(&complete(3), &wheel(8).unwrap(), &lim()).unwrap();
        assert_eq!(w8.value, rational(13, 14));
        assert!(matches!(w8.route, SRoute::OrbitProgram { .. }));
        assert_eq!(
            w8.certificate_weights().unwrap(),
            vec![rational(1, 14), rational(1, 14)]
        );
        let one = s_value::<Rational>(&complete(3), &complete(2), &lim()).unwrap();
        assert_eq!(one.value, rational(1, 1));
        assert!(matches!(one.route, SRoute::Homomorphism(_)));
        let k83 = s_value::<Rational>(&complete(2), &rational_complete(8, 3).unwrap(), &lim()).unwrap();
        assert_eq!(k83.value, rational(4, 5));
        assert_eq!(k83.tight_vectors(), vec![vec![0, 8], vec![4, 6]]);
    }

    #[test]
    fn distance_examples() {
        let r = distance::<Rational>(&complete(2), &cycle(5).unwrap(), &lim()).unwrap();
        assert_eq!(r.d, rational(1, 5));
        assert_eq!(r.s_nm.value, rational(1, 1));
        assert!(r.hom_m_to_n && !r.hom_n_to_m);
        let c7 = cycle(7).unwrap();
        assert_eq!(distance::<Rational>(&c7, &c7, &lim()).unwrap().d, rational(0, 1));
        assert_eq!(
            distance::<Rational>(&complete(2), &complete(3), &lim()).unwrap().d,
            rational(1, 3)
        );
    }

    #[test]
    fn edgeless_rejected() {
        assert!(matches!(
            s_value::<Rational>(&complete(1), &complete(3), &lim()),
            Err(Error::Edgeless)
        ));
        assert!(matches!(
            distance::<Rational>(&complete(3), &Graph::edgeless(4), &lim()),
            Err(Error::Edgeless)
        ));
    }

    #[test]
    fn sandwich_examples() {
        let c9 = cycle(9).unwrap();
        for h in [cycle(11).unwrap(), c9.clone(), crate::graph::path(3).unwrap()] {
            let b = sandwich_bounds::<Rational>(&complete(2), &h, &c9, &lim()).unwrap();
            assert_eq!((b.s_mh.clone(), b.s_hn.clone()), (rational(8, 9), rational(8, 9)));
            assert!(s_value::<Rational>(&complete(2), &h, &lim()).unwrap().value >= b.s_mh);
            if h.vertex_count() <= 9 {
                assert!(s_value::<Rational>(&h, &c9, &lim()).unwrap().value >= b.s_hn);
            }
        }
        let b = sandwich_bounds::<Rational>(&complete(3), &wheel(6).unwrap(), &complete(4), &lim()).unwrap();
        assert_eq!(b.s_mh, rational(5, 6));
        let k5 = complete(5);
        let b = sandwich_bounds::<Rational>(&k5, &k5, &k5, &lim()).unwrap();
        assert_eq!(b.s_mh, rational(1, 1));
        assert!(matches!(
            sandwich_bounds::<Rational>(&complete(3), &complete(2), &complete(4), &lim()),
            Err(Error::SandwichPremise(_))
        ));
    }

    #[test]
    fn metric_small_pools() {
        let pool = [complete(2), complete(3), cycle(5).unwrap()];
        let report = check_metric_axioms::<Rational>(&pool, &lim()).unwrap();
        assert!(report.all_hold());
        let pool = [wheel(7).unwrap(), complete(3)];
        let report = check_metric_axioms::<Rational>(&pool, &lim()).unwrap();
        assert!(report.all_hold());
        assert_eq!(report.d[0][1], rational(0, 1));
        assert!(report.equivalent(0, 1));
        let report = check_metric_axioms::<Rational>(&[cycle(5).unwrap()], &lim()).unwrap();
        assert_eq!(report.d[0][0], rational(0, 1));
    }

    #[test]
    fn equivalence_invariance() {
        let w7 = wheel(7).unwrap();
        let k3 = complete(3);
        for n in [cycle(5).unwrap(), complete(4)] {
            let a = s_value::<Rational>(&w7, &n, &lim()).unwrap().value;
            let b = s_value::<Rational>(&k3, &n, &lim()).unwrap().value;
            assert_eq!(a, b);
            let a = s_value::<Rational>(&n, &w7, &lim()).unwrap().value;
            let b = s_value::<Rational>(&n, &k3, &lim()).unwrap().value;
            assert_eq!(a, b);
        }
    }

    #[test]
    fn edge_transitive_routes_agree() {
        for (m, n) in [
            (complete(2), cycle(7).unwrap()),
            (complete(3), complete(5)),
            (complete(2), crate::graph::petersen()),
            (cycle(5).unwrap(), complete(4)),
        ] {
            let direct = s_value::<Rational>(&m, &n, &lim()).unwrap();
            assert!(matches!(direct.route, SRoute::EdgeTransitive { .. }));
            let lp = s_via_orbit_program::<Rational>(&m, &n, &lim()).unwrap();
            assert_eq!(direct.value, lp.value);
        }
    }

    #[test]
    fn bipartite_density_relation() {
        for h in [cycle(5).unwrap(), complete(4), crate::graph::petersen(), cycle(9).unwrap(), complete(5)] {
            let b: Rational = crate::maxcol::bipartite_density(&h, &lim()).unwrap();
            let d = distance::<Rational>(&complete(2), &h, &lim()).unwrap().d;
            assert_eq!(b, rational(1, 1) - d);
        }
    }
}
