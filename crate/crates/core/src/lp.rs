//! Dense two-phase simplex over a generic scalar, and the orbit program
//!
//! ```text
//! min s
//!   Σ_i f_i · w_i ≤ s      for each solution vector f
//!   Σ_i |A_i| · w_i = 1
//!   w_i, s ≥ 0
//! ```
//!
//! Pivoting follows Bland's rule, so runs are deterministic and cannot cycle.

use std::fmt;

use crate::error::{Error, Result};
use crate::maxcol::SolutionVector;
use crate::scalar::{sum, Scalar};
use crate::symmetry::OrbitPartition;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

#[derive(Clone, Debug)]
pub struct Constraint<T> {
    pub coefficients: Vec<T>,
    pub relation: Relation,
    pub rhs: T,
}

/// `min objective · x` subject to the constraints and `x ≥ 0`.
#[derive(Clone, Debug)]
pub struct LinearProgram<T> {
    pub objective: Vec<T>,
    pub constraints: Vec<Constraint<T>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LpOptimum<T> {
    pub value: T,
    pub x: Vec<T>,
}

struct Tableau<T> {
    rows: Vec<Vec<T>>,
    basis: Vec<usize>,
    /// Reduced costs, last entry is minus the objective value.
    costs: Vec<T>,
    cols: usize,
}

impl<T: Scalar> Tableau<T> {
    fn rhs(&self, i: usize) -> &T {
        &self.rows[i][self.cols]
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        for x in self.rows[r].iter_mut() {
            *x = x.clone() / p.clone();
        }
        let pivot_row = self.rows[r].clone();
        let eliminate = |row: &mut Vec<T>| {
            let factor = row[c].clone();
            if factor.is_zero() {
                return;
            }
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x = x.clone() - factor.clone() * y.clone();
            }
        };
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != r {
                eliminate(row);
            }
        }
        eliminate(&mut self.costs);
        self.basis[r] = c;
    }

    fn set_costs(&mut self, cost: &[T]) {
        let mut costs: Vec<T> = cost.to_vec();
        costs.push(T::zero());
        for (i, &b) in self.basis.iter().enumerate() {
            let cb = cost[b].clone();
            if cb.is_zero() {
                continue;
            }
            for (x, a) in costs.iter_mut().zip(&self.rows[i]) {
                *x = x.clone() - cb.clone() * a.clone();
            }
        }
        self.costs = costs;
    }

    /// Runs Bland-rule simplex over the columns `allowed`.
    fn run(&mut self, allowed: usize) -> Result<()> {
        loop {
            let Some(enter) = (0..allowed).find(|&j| self.costs[j].is_strictly_negative()) else {
                return Ok(());
            };
            let mut leave: Option<(usize, T)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][enter];
                if !a.is_strictly_positive() {
                    continue;
                }
                let ratio = self.rhs(i).clone() / a.clone();
                let better = match &leave {
                    None => true,
                    Some((l, best)) => {
                        if ratio.approx_eq(best) {
                            self.basis[i] < self.basis[*l]
                        } else {
                            ratio < *best
                        }
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            let Some((r, _)) = leave else {
                return Err(Error::Unbounded);
            };
            self.pivot(r, enter);
        }
    }

    fn objective_value(&self) -> T {
        -self.costs[self.cols].clone()
    }
}

impl<T: Scalar> LinearProgram<T> {
    pub fn minimize(&self) -> Result<LpOptimum<T>> {
        let n = self.objective.len();
        if self.constraints.iter().any(|c| c.coefficients.len() != n) {
            return Err(Error::MalformedLp("constraint width differs from objective".into()));
        }
        let mut rows: Vec<(Vec<T>, Relation, T)> = self
            .constraints
            .iter()
            .map(|c| {
                if c.rhs.is_negative() {
                    let flipped = match c.relation {
                        Relation::Le => Relation::Ge,
                        Relation::Ge => Relation::Le,
                        Relation::Eq => Relation::Eq,
                    };
                    (c.coefficients.iter().map(|a| -a.clone()).collect(), flipped, -c.rhs.clone())
                } else {
                    (c.coefficients.clone(), c.relation, c.rhs.clone())
                }
            })
            .collect();

        let slack_count = rows.iter().filter(|r| r.1 != Relation::Eq).count();
        let art_count = rows.iter().filter(|r| r.1 != Relation::Le).count();
        let cols = n + slack_count + art_count;
        let art_start = n + slack_count;

        let mut table = Vec::with_capacity(rows.len());
        let mut basis = Vec::with_capacity(rows.len());
        let (mut next_slack, mut next_art) = (n, art_start);
        for (coeffs, rel, rhs) in rows.drain(..) {
            let mut row = coeffs;
            row.resize(cols, T::zero());
            match rel {
                Relation::Le => {
                    row[next_slack] = T::one();
                    basis.push(next_slack);
                    next_slack += 1;
                }
                Relation::Ge => {
                    row[next_slack] = -T::one();
                    next_slack += 1;
                    row[next_art] = T::one();
                    basis.push(next_art);
                    next_art += 1;
                }
                Relation::Eq => {
                    row[next_art] = T::one();
                    basis.push(next_art);
                    next_art += 1;
                }
            }
            row.push(rhs);
            table.push(row);
        }

        let mut tab = Tableau {
            rows: table,
            basis,
            costs: Vec::new(),
            cols,
        };

        if art_count > 0 {
            let phase_one: Vec<T> = (0..cols)
                .map(|j| if j >= art_start { T::one() } else { T::zero() })
                .collect();
            tab.set_costs(&phase_one);
            tab.run(cols)?;
            if tab.objective_value().is_strictly_positive() {
                return Err(Error::Infeasible);
            }
            // Drive remaining artificials out of the basis; drop redundant rows.
            let mut i = 0;
            while i < tab.rows.len() {
                if tab.basis[i] >= art_start {
                    match (0..art_start).find(|&j| !tab.rows[i][j].is_negligible()) {
                        Some(j) => tab.pivot(i, j),
                        None => {
                            tab.rows.remove(i);
                            tab.basis.remove(i);
                            continue;
                        }
                    }
                }
                i += 1;
            }
        }

        let mut phase_two = self.objective.clone();
        phase_two.resize(cols, T::zero());
        tab.set_costs(&phase_two);
        tab.run(art_start)?;

        let mut x = vec![T::zero(); n];
        for (i, &b) in tab.basis.iter().enumerate() {
            if b < n {
                x[b] = tab.rhs(i).clone();
            }
        }
        let value = sum(self.objective.iter().zip(&x).map(|(c, v)| c.clone() * v.clone()));
        Ok(LpOptimum { value, x })
    }
}

/// Orbit sizes `|A_1|..|A_r|` and the solution-vector set `F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitLp {
    orbit_sizes: Vec<usize>,
    vectors: Vec<SolutionVector>,
}

impl OrbitLp {
    pub fn new(orbit_sizes: Vec<usize>, vectors: Vec<SolutionVector>) -> Result<Self> {
        let r = orbit_sizes.len();
        if r == 0 {
            return Err(Error::MalformedLp("no orbits".into()));
        }
        if orbit_sizes.contains(&0) {
            return Err(Error::MalformedLp("empty orbit".into()));
        }
        if vectors.is_empty() {
            return Err(Error::MalformedLp("empty solution set".into()));
        }
        for v in &vectors {
            if v.counts().len() != r {
                return Err(Error::MalformedLp(format!("vector {:?} has wrong length", v.counts())));
            }
            if v.counts().iter().zip(&orbit_sizes).any(|(f, s)| f > s) {
                return Err(Error::MalformedLp(format!("vector {:?} exceeds orbit sizes", v.counts())));
            }
        }
        Ok(OrbitLp {
            orbit_sizes,
            vectors,
        })
    }

    pub fn from_orbits(orbits: &OrbitPartition, vectors: Vec<SolutionVector>) -> Result<Self> {
        Self::new(orbits.sizes(), vectors)
    }

    pub fn orbit_sizes(&self) -> &[usize] {
        &self.orbit_sizes
    }

    pub fn vectors(&self) -> &[SolutionVector] {
        &self.vectors
    }

    fn primal<T: Scalar>(&self) -> LinearProgram<T> {
        let r = self.orbit_sizes.len();
        let mut objective = vec![T::zero(); r + 1];
        objective[r] = T::one();
        let mut constraints: Vec<Constraint<T>> = self
            .vectors
            .iter()
            .map(|f| {
                let mut coefficients: Vec<T> = f.counts().iter().map(|&c| T::from_usize(c)).collect();
                coefficients.push(-T::one());
                Constraint {
                    coefficients,
                    relation: Relation::Le,
                    rhs: T::zero(),
                }
            })
            .collect();
        let mut normalization: Vec<T> = self.orbit_sizes.iter().map(|&s| T::from_usize(s)).collect();
        normalization.push(T::zero());
        constraints.push(Constraint {
            coefficients: normalization,
            relation: Relation::Eq,
            rhs: T::one(),
        });
        LinearProgram {
            objective,
            constraints,
        }
    }

    /// Optimum of the dual program: the largest `t` such that some
    /// sub-convex combination `y` of the vectors has `Σ_k y_k f^k_i ≥ |A_i| t`
    /// on every orbit.
    pub fn dual_optimum<T: Scalar>(&self) -> Result<T> {
        let k = self.vectors.len();
        let r = self.orbit_sizes.len();
        let mut objective = vec![T::zero(); k + 1];
        objective[k] = -T::one();
        let mut simplex: Vec<T> = vec![T::one(); k];
        simplex.push(T::zero());
        let mut constraints = vec![Constraint {
            coefficients: simplex,
            relation: Relation::Le,
            rhs: T::one(),
        }];
        for i in 0..r {
            let mut coefficients: Vec<T> = self
                .vectors
                .iter()
                .map(|f| -T::from_usize(f.counts()[i]))
                .collect();
            coefficients.push(T::from_usize(self.orbit_sizes[i]));
            constraints.push(Constraint {
                coefficients,
                relation: Relation::Le,
                rhs: T::zero(),
            });
        }
        let dual = LinearProgram {
            objective,
            constraints,
        };
        Ok(-dual.minimize()?.value)
    }
}

impl fmt::Display for OrbitLp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let term = |coeffs: &[usize]| {
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| format!("{c}*w{}", i + 1))
                .collect::<Vec<_>>()
                .join(" + ")
        };
        writeln!(f, "min s")?;
        for v in &self.vectors {
            writeln!(f, "  {} <= s", term(v.counts()))?;
        }
        writeln!(f, "  {} = 1", term(&self.orbit_sizes))?;
        write!(f, "  w_i, s >= 0")
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LpSolution<T> {
    pub optimum: T,
    /// Lexicographically smallest optimal weight vector.
    pub weights: Vec<T>,
    /// Indices into the vector set of constraints tight at the optimum.
    pub tight_vectors: Vec<usize>,
}

fn tight_indices<T: Scalar>(p: &OrbitLp, weights: &[T], s: &T) -> Vec<usize> {
    p.vectors
        .iter()
        .enumerate()
        .filter(|(_, f)| f.dot(weights).approx_eq(s))
        .map(|(i, _)| i)
        .collect()
}

/// Solves the orbit program exactly (for exact scalars).
pub fn solve_orbit_lp<T: Scalar>(p: &OrbitLp) -> Result<LpSolution<T>> {
    let r = p.orbit_sizes.len();
    let mut program = p.primal::<T>();
    let optimum = program.minimize()?.value;

    let unit = |i: usize| {
        let mut v = vec![T::zero(); r + 1];
        v[i] = T::one();
        v
    };
    program.constraints.push(Constraint {
        coefficients: unit(r),
        relation: Relation::Eq,
        rhs: optimum.clone(),
    });
    let mut weights = Vec::with_capacity(r);
    for i in 0..r {
        program.objective = unit(i);
        let wi = program.minimize()?.value;
        program.constraints.push(Constraint {
            coefficients: unit(i),
            relation: Relation::Eq,
            rhs: wi.clone(),
        });
        weights.push(wi);
    }
    let tight_vectors = tight_indices(p, &weights, &optimum);
    Ok(LpSolution {
        optimum,
        weights,
        tight_vectors,
    })
}

/// Checks primal feasibility, the reported tight set, and optimality by
/// comparing against the dual optimum.
pub fn verify_solution<T: Scalar>(p: &OrbitLp, sol: &LpSolution<T>) -> bool {
    let r = p.orbit_sizes.len();
    if sol.weights.len() != r || sol.optimum.is_strictly_negative() {
        return false;
    }
    if sol.weights.iter().any(|w| w.is_strictly_negative()) {
        return false;
    }
    let normalization = sum(p
        .orbit_sizes
        .iter()
        .zip(&sol.weights)
        .map(|(&a, w)| T::from_usize(a) * w.clone()));
    if !normalization.approx_eq(&T::one()) {
        return false;
    }
    if p.vectors.iter().any(|f| {
        let lhs = f.dot(&sol.weights);
        lhs > sol.optimum && !lhs.approx_eq(&sol.optimum)
    }) {
        return false;
    }
    let tight = tight_indices(p, &sol.weights, &sol.optimum);
    if tight.is_empty() || tight != sol.tight_vectors {
        return false;
    }
    match p.dual_optimum::<T>() {
        Ok(t) => t.approx_eq(&sol.optimum),
        Err(_) => false,
    }
}
