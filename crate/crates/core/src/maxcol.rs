//! Exhaustive Max H-Col: optimal measures, orbit solution vectors, induced
//! and symmetrised weights, bipartite density.
//!
//! Vertex maps `V(G) -> V(H)` are enumerated in mixed-radix ascending order
//! with vertex 0 as the most significant digit. Composing a map with an
//! automorphism of `H` preserves its measure and its orbit counts, so the
//! image of vertex 0 is restricted to the smallest member of each vertex
//! orbit of `H`. The lexicographically smallest optimal map always survives
//! that restriction, which keeps witnesses identical to a plain scan.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::{complete, EdgeListDocument, Graph};
use crate::homomorphism::VertexMap;
use crate::limits::Limits;
use crate::scalar::{sum, Scalar};
use crate::symmetry::{vertex_orbits, AutomorphismGroup, OrbitPartition};

/// Nonnegative edge weights on a graph with positive total.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightFunction<T> {
    graph: Graph,
    weights: Vec<T>,
}

impl<T: Scalar> WeightFunction<T> {
    /// `weights[i]` is the weight of edge id `i`.
    pub fn new(graph: Graph, weights: Vec<T>) -> Result<Self> {
        if weights.len() != graph.edge_count() {
            return Err(Error::DomainMismatch(format!(
                "{} weights for {} edges",
                weights.len(),
                graph.edge_count()
            )));
        }
        if weights.iter().any(|w| w.is_strictly_negative()) {
            return Err(Error::InvalidParameter("edge weights must be nonnegative".into()));
        }
        if !sum(weights.iter().cloned()).is_strictly_positive() {
            return Err(Error::InvalidParameter("total weight must be positive".into()));
        }
        Ok(WeightFunction { graph, weights })
    }

    pub fn unit(graph: &Graph) -> Result<Self> {
        Self::new(graph.clone(), vec![T::one(); graph.edge_count()])
    }

    /// Weight `1/e(G)` on every edge.
    pub fn uniform(graph: &Graph) -> Result<Self> {
        if graph.is_edgeless() {
            return Err(Error::Edgeless);
        }
        let w = T::one() / T::from_usize(graph.edge_count());
        Self::new(graph.clone(), vec![w; graph.edge_count()])
    }

    /// Weights given per edge `(u, v, w)`; unlisted edges weigh 1.
    pub fn from_entries(graph: &Graph, entries: &[(usize, usize, T)]) -> Result<Self> {
        let mut weights = vec![T::one(); graph.edge_count()];
        for (u, v, w) in entries {
            let id = graph
                .edge_index(*u, *v)
                .ok_or_else(|| Error::DomainMismatch(format!("{{{u},{v}}} is not an edge")))?;
            weights[id] = w.clone();
        }
        Self::new(graph.clone(), weights)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn weights(&self) -> &[T] {
        &self.weights
    }

    pub fn weight(&self, edge_id: usize) -> &T {
        &self.weights[edge_id]
    }

    /// `‖w‖`.
    pub fn total(&self) -> T {
        sum(self.weights.iter().cloned())
    }

    pub fn scaled(&self, alpha: &T) -> Result<Self> {
        Self::new(
            self.graph.clone(),
            self.weights.iter().map(|w| w.clone() * alpha.clone()).collect(),
        )
    }

    pub fn normalized(&self) -> Self {
        let total = self.total();
        WeightFunction {
            graph: self.graph.clone(),
            weights: self.weights.iter().map(|w| w.clone() / total.clone()).collect(),
        }
    }

    pub fn plus(&self, other: &Self) -> Result<Self> {
        if self.graph != other.graph {
            return Err(Error::DomainMismatch("weights live on different graphs".into()));
        }
        Self::new(
            self.graph.clone(),
            self.weights
                .iter()
                .zip(&other.weights)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        )
    }
}

impl WeightFunction<crate::Rational> {
    /// Weights from an edge-list document; edges without a weight line weigh 1.
    pub fn from_document(doc: &EdgeListDocument) -> Result<Self> {
        let entries: Vec<_> = doc.weights.iter().map(|(u, v, w, _)| (*u, *v, w.clone())).collect();
        Self::from_entries(&doc.graph, &entries)
    }
}

/// A weight function of total 1 that is constant on every edge orbit.
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetricWeightFunction<T> {
    weights: WeightFunction<T>,
    orbits: OrbitPartition,
}

impl<T: Scalar> SymmetricWeightFunction<T> {
    /// Places `orbit_weights[i]` on every edge of orbit `i`; the total must be 1.
    pub fn from_orbit_weights(orbits: &OrbitPartition, orbit_weights: &[T]) -> Result<Self> {
        if orbit_weights.len() != orbits.len() {
            return Err(Error::DomainMismatch("one weight per orbit required".into()));
        }
        let graph = orbits.graph().clone();
        let weights = (0..graph.edge_count())
            .map(|e| orbit_weights[orbits.orbit_of(e)].clone())
            .collect();
        let weights = WeightFunction::new(graph, weights)?;
        if !weights.total().approx_eq(&T::one()) {
            return Err(Error::InvalidParameter("symmetric weights must total 1".into()));
        }
        Ok(SymmetricWeightFunction {
            weights,
            orbits: orbits.clone(),
        })
    }

    pub fn weights(&self) -> &WeightFunction<T> {
        &self.weights
    }

    pub fn orbits(&self) -> &OrbitPartition {
        &self.orbits
    }

    /// Common weight of the edges in each orbit.
    pub fn orbit_weights(&self) -> Vec<T> {
        self.orbits
            .orbits()
            .iter()
            .map(|o| self.weights.weight(o[0]).clone())
            .collect()
    }
}

/// Per-orbit counts `(f_1, ..., f_r)` of edges a map carries onto target edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SolutionVector(pub Vec<usize>);

impl SolutionVector {
    pub fn counts(&self) -> &[usize] {
        &self.0
    }

    /// `Σ f_i · w_i`.
    pub fn dot<T: Scalar>(&self, orbit_weights: &[T]) -> T {
        sum(self
            .0
            .iter()
            .zip(orbit_weights)
            .map(|(&f, w)| T::from_usize(f) * w.clone()))
    }

    /// Coordinatewise `self ≤ other`.
    pub fn dominated_by(&self, other: &SolutionVector) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

/// `w(f)`: total weight of source edges that `map` carries onto target edges.
pub fn measure<T: Scalar>(map: &VertexMap, w: &WeightFunction<T>) -> Result<T> {
    if map.source() != w.graph() {
        return Err(Error::DomainMismatch("map source differs from the weighted graph".into()));
    }
    Ok(sum((0..w.graph().edge_count())
        .filter(|&e| map.edge_image(e).is_some())
        .map(|e| w.weight(e).clone())))
}

/// Counts of preserved edges per orbit of `orbits` (on the source graph).
pub fn orbit_counts(map: &VertexMap, orbits: &OrbitPartition) -> Result<SolutionVector> {
    if map.source() != orbits.graph() {
        return Err(Error::DomainMismatch("map source differs from the orbit graph".into()));
    }
    let mut counts = vec![0; orbits.len()];
    for e in 0..map.source().edge_count() {
        if map.edge_image(e).is_some() {
            counts[orbits.orbit_of(e)] += 1;
        }
    }
    Ok(SolutionVector(counts))
}

/// The reduced space of maps `V(source) -> V(target)`.
struct MapSpace<'a> {
    source: &'a Graph,
    target: &'a Graph,
    first_choices: Vec<usize>,
    /// For each source vertex `v`, the edges `{u, v}` with `u < v`.
    back_edges: Vec<Vec<(usize, usize)>>,
}

impl<'a> MapSpace<'a> {
    fn new(source: &'a Graph, target: &'a Graph, limits: &Limits) -> Result<Self> {
        let k = target.vertex_count();
        if k == 0 && source.vertex_count() > 0 {
            return Err(Error::InvalidParameter("target graph has no vertices".into()));
        }
        let first_choices: Vec<usize> = if k <= limits.vertex_cap {
            vertex_orbits(target, limits)
                .map(|orbits| orbits.iter().map(|o| o[0]).collect())
                .unwrap_or_else(|_| (0..k).collect())
        } else {
            (0..k).collect()
        };
        let n = source.vertex_count();
        let required = if n == 0 {
            1
        } else {
            (first_choices.len() as u128).saturating_mul((k as u128).saturating_pow(n as u32 - 1))
        };
        if required > limits.enumeration_budget as u128 {
            return Err(Error::EnumerationBudget {
                required,
                budget: limits.enumeration_budget,
            });
        }
        let mut back_edges = vec![Vec::new(); n];
        for (id, &(u, v)) in source.edges().iter().enumerate() {
            back_edges[v].push((u, id));
        }
        Ok(MapSpace {
            source,
            target,
            first_choices,
            back_edges,
        })
    }

    fn choices(&self, v: usize) -> Vec<usize> {
        if v == 0 {
            self.first_choices.clone()
        } else {
            (0..self.target.vertex_count()).collect()
        }
    }
}

/// Optimal value of Max H-Col on an instance, with one optimal witness.
#[derive(Clone, Debug)]
pub struct McOutcome<T> {
    pub value: T,
    pub witness: VertexMap,
}

struct McSearch<'s, 'a, T> {
    space: &'s MapSpace<'a>,
    weights: &'s [T],
    /// `remaining[v]`: weight of edges decided at depth `v` or later.
    remaining: Vec<T>,
    total: T,
    assignment: Vec<usize>,
    best: Option<(T, Vec<usize>)>,
}

impl<T: Scalar> McSearch<'_, '_, T> {
    fn is_saturated(&self) -> bool {
        matches!(&self.best, Some((b, _)) if *b >= self.total)
    }

    fn dfs(&mut self, v: usize, current: T) {
        let n = self.space.source.vertex_count();
        if v == n {
            let better = match &self.best {
                None => true,
                Some((b, _)) => current > *b && !current.approx_eq(b),
            };
            if better {
                self.best = Some((current, self.assignment.clone()));
            }
            return;
        }
        if let Some((b, _)) = &self.best {
            let bound = current.clone() + self.remaining[v].clone();
            if bound <= *b || bound.approx_eq(b) {
                return;
            }
        }
        for t in self.space.choices(v) {
            let gain = sum(self.space.back_edges[v]
                .iter()
                .filter(|&&(u, _)| self.space.target.has_edge(self.assignment[u], t))
                .map(|&(_, e)| self.weights[e].clone()));
            self.assignment[v] = t;
            self.dfs(v + 1, current.clone() + gain);
            if self.is_saturated() {
                return;
            }
        }
    }
}

/// `mc_H(G, w)` by exhaustive branch-and-bound over vertex maps `V(G) -> V(H)`.
pub fn mc<T: Scalar>(h: &Graph, w: &WeightFunction<T>, limits: &Limits) -> Result<McOutcome<T>> {
    let g = w.graph();
    let space = MapSpace::new(g, h, limits)?;
    let n = g.vertex_count();
    let mut remaining = vec![T::zero(); n + 1];
    for v in (0..n).rev() {
        let here = sum(space.back_edges[v].iter().map(|&(_, e)| w.weight(e).clone()));
        remaining[v] = remaining[v + 1].clone() + here;
    }
    let mut search = McSearch {
        space: &space,
        weights: w.weights(),
        total: w.total(),
        remaining,
        assignment: vec![0; n],
        best: None,
    };
    search.dfs(0, T::zero());
    let (value, assignment) = search.best.expect("map space is nonempty");
    Ok(McOutcome {
        value,
        witness: VertexMap::new(g.clone(), h.clone(), assignment)?,
    })
}

/// Pareto-maximal orbit-count vectors of all maps `V(N) -> V(M)`, sorted.
pub fn solution_vectors(
    m: &Graph,
    n: &Graph,
    orbits: &OrbitPartition,
    limits: &Limits,
) -> Result<Vec<SolutionVector>> {
    if orbits.graph() != n {
        return Err(Error::DomainMismatch("orbit partition is not on N".into()));
    }
    let space = MapSpace::new(n, m, limits)?;
    let mut seen = HashSet::new();
    let mut assignment = vec![0; n.vertex_count()];
    let mut counts = vec![0; orbits.len()];
    collect_counts(&space, orbits, 0, &mut assignment, &mut counts, &mut seen);
    Ok(pareto_maximal(seen.into_iter().map(SolutionVector).collect()))
}

fn collect_counts(
    space: &MapSpace<'_>,
    orbits: &OrbitPartition,
    v: usize,
    assignment: &mut Vec<usize>,
    counts: &mut Vec<usize>,
    seen: &mut HashSet<Vec<usize>>,
) {
    if v == space.source.vertex_count() {
        if !seen.contains(counts) {
            seen.insert(counts.clone());
        }
        return;
    }
    for t in space.choices(v) {
        assignment[v] = t;
        let mut touched = Vec::new();
        for &(u, e) in &space.back_edges[v] {
            if space.target.has_edge(assignment[u], t) {
                counts[orbits.orbit_of(e)] += 1;
                touched.push(orbits.orbit_of(e));
            }
        }
        collect_counts(space, orbits, v + 1, assignment, counts, seen);
        for o in touched {
            counts[o] -= 1;
        }
    }
}

/// Drops duplicates and every vector dominated by another; sorts the rest.
pub fn pareto_maximal(mut vectors: Vec<SolutionVector>) -> Vec<SolutionVector> {
    vectors.sort();
    vectors.dedup();
    let keep: Vec<bool> = vectors
        .iter()
        .map(|v| !vectors.iter().any(|u| u != v && v.dominated_by(u)))
        .collect();
    vectors
        .into_iter()
        .zip(keep)
        .filter_map(|(v, k)| k.then_some(v))
        .collect()
}

/// The induced weight `w_f` on `E(N)` for an optimal solution `f: V(G) -> V(N)`
/// of `(G, w)`, given the optimum value.
pub fn induced_weight<T: Scalar>(
    f: &VertexMap,
    w: &WeightFunction<T>,
    optimum: &T,
) -> Result<WeightFunction<T>> {
    if optimum.is_negligible() {
        return Err(Error::ZeroOptimum);
    }
    let achieved = measure(f, w)?;
    if !achieved.approx_eq(optimum) {
        return Err(Error::NonOptimal {
            measure: achieved.to_string(),
            optimum: optimum.to_string(),
        });
    }
    let target = f.target();
    let mut induced = vec![T::zero(); target.edge_count()];
    for e in 0..w.graph().edge_count() {
        if let Some(img) = f.edge_image(e) {
            induced[img] = induced[img].clone() + w.weight(e).clone() / optimum.clone();
        }
    }
    WeightFunction::new(target.clone(), induced)
}

/// Normalises `w` and averages it over the automorphism group of its graph.
pub fn symmetrize<T: Scalar>(
    w: &WeightFunction<T>,
    group: &AutomorphismGroup,
) -> Result<SymmetricWeightFunction<T>> {
    let g = w.graph();
    if group.graph() != g {
        return Err(Error::DomainMismatch("group acts on a different graph".into()));
    }
    let normalized = w.normalized();
    let order = T::from_usize(group.order());
    let mut averaged = vec![T::zero(); g.edge_count()];
    for p in group.elements() {
        for (id, &e) in g.edges().iter().enumerate() {
            let (a, b) = p.apply_edge(e);
            let img = g.edge_index(a, b).expect("group elements are automorphisms");
            averaged[id] = averaged[id].clone() + normalized.weight(img).clone();
        }
    }
    let weights = WeightFunction::new(
        g.clone(),
        averaged.into_iter().map(|x| x / order.clone()).collect(),
    )?;
    Ok(SymmetricWeightFunction {
        weights,
        orbits: group.edge_orbits()?,
    })
}

/// Largest fraction of edges of `h` in a bipartite subgraph.
pub fn bipartite_density<T: Scalar>(h: &Graph, limits: &Limits) -> Result<T> {
    Ok(mc(&complete(2), &WeightFunction::<T>::uniform(h)?, limits)?.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, petersen, rational_complete, wheel};
    use crate::symmetry::{automorphisms, edge_orbits};
    use crate::{rational, Rational};

    fn lim() -> Limits {
        Limits::default()
    }

    /// Plain mixed-radix scan of every map, no pruning or symmetry reduction.
    fn mc_scan(h: &Graph, w: &WeightFunction<Rational>) -> (Rational, Vec<usize>) {
        let n = w.graph().vertex_count();
        let k = h.vertex_count();
        let mut digits = vec![0usize; n];
        let mut best: Option<(Rational, Vec<usize>)> = None;
        loop {
            let value = sum(w
                .graph()
                .edges()
                .iter()
                .enumerate()
                .filter(|(_, &(u, v))| h.has_edge(digits[u], digits[v]))
                .map(|(e, _)| w.weight(e).clone()));
            if best.as_ref().is_none_or(|(b, _)| value > *b) {
                best = Some((value, digits.clone()));
            }
            // vertex 0 is the most significant digit
            let mut i = n;
            loop {
                if i == 0 {
                    return best.unwrap();
                }
                i -= 1;
                digits[i] += 1;
                if digits[i] < k {
                    break;
                }
                digits[i] = 0;
            }
        }
    }

    #[test]
    fn measure_examples() {
        let k3 = complete(3);
        let uniform = WeightFunction::<Rational>::uniform(&k3).unwrap();
        assert_eq!(measure(&VertexMap::identity(&k3), &uniform).unwrap(), rational(1, 1));
        let c4 = cycle(4).unwrap();
        let two = VertexMap::new(c4.clone(), complete(2), vec![0, 1, 0, 1]).unwrap();
        let unit = WeightFunction::<Rational>::unit(&c4).unwrap();
        assert_eq!(measure(&two, &unit).unwrap(), rational(4, 1));
        let best = mc(&complete(2), &uniform, &lim()).unwrap();
        assert_eq!(measure(&best.witness, &uniform).unwrap(), rational(2, 3));
        assert!(matches!(measure(&two, &uniform), Err(Error::DomainMismatch(_))));
    }

    #[test]
    fn mc_examples() {
        let c5 = WeightFunction::<Rational>::uniform(&cycle(5).unwrap()).unwrap();
        assert_eq!(mc(&complete(2), &c5, &lim()).unwrap().value, rational(4, 5));
        let k4 = WeightFunction::<Rational>::uniform(&complete(4)).unwrap();
        assert_eq!(mc(&complete(3), &k4, &lim()).unwrap().value, rational(5, 6));
        let odd = WeightFunction::<Rational>::new(
            cycle(5).unwrap(),
            vec![rational(1, 2), rational(3, 1), rational(0, 1), rational(7, 3), rational(1, 9)],
        )
        .unwrap();
        assert_eq!(mc(&complete(3), &odd, &lim()).unwrap().value, odd.total());
    }

    #[test]
    fn mc_matches_plain_scan_including_witness() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..150 {
            let n = rng.gen_range(2..=6);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.5) {
                        edges.push((u, v));
                    }
                }
            }
            if edges.is_empty() {
                edges.push((0, 1));
            }
            let g = Graph::new(n, edges).unwrap();
            let weights = (0..g.edge_count())
                .map(|_| rational(rng.gen_range(0..6), rng.gen_range(1..4)))
                .collect::<Vec<_>>();
            let Ok(w) = WeightFunction::new(g, weights) else { continue };
            for h in [complete(2), complete(3), cycle(5).unwrap(), wheel(5).unwrap()] {
                let fast = mc(&h, &w, &lim()).unwrap();
                let (value, digits) = mc_scan(&h, &w);
                assert_eq!(fast.value, value);
                assert_eq!(fast.witness.assignment(), digits.as_slice());
            }
        }
    }

    #[test]
    fn solution_vector_examples() {
        let w6 = wheel(6).unwrap();
        let orbits = edge_orbits(&w6, &lim()).unwrap();
        let f = solution_vectors(&complete(3), &w6, &orbits, &lim()).unwrap();
        assert_eq!(f, vec![SolutionVector(vec![4, 5]), SolutionVector(vec![5, 4])]);

        let k83 = rational_complete(8, 3).unwrap();
        let orbits = edge_orbits(&k83, &lim()).unwrap();
        let f = solution_vectors(&complete(2), &k83, &orbits, &lim()).unwrap();
        assert_eq!(f, vec![SolutionVector(vec![0, 8]), SolutionVector(vec![4, 6])]);

        let c3 = cycle(3).unwrap();
        let orbits = edge_orbits(&c3, &lim()).unwrap();
        assert_eq!(
            solution_vectors(&complete(2), &c3, &orbits, &lim()).unwrap(),
            vec![SolutionVector(vec![2])]
        );
    }

    #[test]
    fn solution_vectors_are_realised() {
        let n = rational_complete(8, 3).unwrap();
        let orbits = edge_orbits(&n, &lim()).unwrap();
        for m in [complete(2), complete(3), cycle(5).unwrap()] {
            for vector in solution_vectors(&m, &n, &orbits, &lim()).unwrap() {
                let mut found = false;
                let total = m.vertex_count().pow(n.vertex_count() as u32);
                for code in 0..total {
                    let mut c = code;
                    let assignment = (0..n.vertex_count())
                        .map(|_| {
                            let d = c % m.vertex_count();
                            c /= m.vertex_count();
                            d
                        })
                        .collect();
                    let map = VertexMap::new(n.clone(), m.clone(), assignment).unwrap();
                    if orbit_counts(&map, &orbits).unwrap() == vector {
                        found = true;
                        break;
                    }
                }
                assert!(found, "{vector:?}");
            }
        }
    }

    #[test]
    fn symmetric_mc_equals_best_solution_vector() {
        for n in [wheel(6).unwrap(), rational_complete(8, 3).unwrap(), wheel(7).unwrap()] {
            let orbits = edge_orbits(&n, &lim()).unwrap();
            let sizes = orbits.sizes();
            for m in [complete(2), complete(3)] {
                let vectors = solution_vectors(&m, &n, &orbits, &lim()).unwrap();
                // a few symmetric weightings: orbit i gets a_i / Σ a_j |A_j|
                for raw in [[1i64, 1], [1, 2], [3, 1], [0, 1], [5, 2]] {
                    let norm: i64 = raw.iter().zip(&sizes).map(|(a, &s)| a * s as i64).sum();
                    let ow: Vec<Rational> = raw.iter().map(|&a| rational(a, norm)).collect();
                    let sym = SymmetricWeightFunction::from_orbit_weights(&orbits, &ow).unwrap();
                    let direct = mc(&m, sym.weights(), &lim()).unwrap().value;
                    let via = vectors.iter().map(|f| f.dot(&ow)).max().unwrap();
                    assert_eq!(direct, via);
                }
            }
        }
    }

    #[test]
    fn pareto_reduction() {
        let v = |xs: &[usize]| SolutionVector(xs.to_vec());
        let reduced = pareto_maximal(vec![v(&[1, 2]), v(&[2, 1]), v(&[1, 1]), v(&[1, 2]), v(&[0, 2])]);
        assert_eq!(reduced, vec![v(&[1, 2]), v(&[2, 1])]);
    }

    #[test]
    fn induced_weight_examples() {
        let k3 = complete(3);
        let w = WeightFunction::<Rational>::uniform(&k3).unwrap();
        let id = VertexMap::identity(&k3);
        assert_eq!(induced_weight(&id, &w, &rational(1, 1)).unwrap(), w);

        let c4 = cycle(4).unwrap();
        let unit = WeightFunction::<Rational>::unit(&c4).unwrap();
        let two = VertexMap::new(c4, complete(2), vec![0, 1, 0, 1]).unwrap();
        let wf = induced_weight(&two, &unit, &rational(4, 1)).unwrap();
        assert_eq!(wf.weights(), &[rational(1, 1)]);

        assert!(matches!(
            induced_weight(&two, &unit, &rational(3, 1)),
            Err(Error::NonOptimal { .. })
        ));
        assert!(matches!(
            induced_weight(&two, &unit, &rational(0, 1)),
            Err(Error::ZeroOptimum)
        ));
    }

    #[test]
    fn ratio_bound_via_induced_weight() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            let n = rng.gen_range(2..=6);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.6) {
                        edges.push((u, v));
                    }
                }
            }
            if edges.is_empty() {
                edges.push((0, n - 1));
            }
            let g = Graph::new(n, edges).unwrap();
            let weights = (0..g.edge_count()).map(|_| rational(rng.gen_range(1..5), 1)).collect();
            let w = WeightFunction::new(g, weights).unwrap();
            for (m, big) in [(complete(2), complete(3)), (complete(3), complete(2)), (complete(2), cycle(5).unwrap())] {
                let opt_n = mc(&big, &w, &lim()).unwrap();
                let opt_m = mc(&m, &w, &lim()).unwrap().value;
                let wf = induced_weight(&opt_n.witness, &w, &opt_n.value).unwrap();
                assert_eq!(wf.total(), rational(1, 1));
                let bound = mc(&m, &wf, &lim()).unwrap().value;
                assert!(opt_m / opt_n.value.clone() >= bound);
            }
        }
    }

    #[test]
    fn symmetrize_examples() {
        let p = petersen();
        let group = automorphisms(&p, &lim()).unwrap();
        let unit = WeightFunction::<Rational>::unit(&p).unwrap();
        let sym = symmetrize(&unit, &group).unwrap();
        assert!(sym.weights().weights().iter().all(|w| *w == rational(1, 15)));

        let w6 = wheel(6).unwrap();
        let group = automorphisms(&w6, &lim()).unwrap();
        assert_eq!(group.order(), 10);
        let spoke = w6.edge_index(0, 5).unwrap();
        let mut raw = vec![rational(0, 1); w6.edge_count()];
        raw[spoke] = rational(1, 1);
        let sym = symmetrize(&WeightFunction::new(w6.clone(), raw).unwrap(), &group).unwrap();
        assert_eq!(sym.orbit_weights(), vec![rational(0, 1), rational(1, 5)]);
        let again = symmetrize(sym.weights(), &group).unwrap();
        assert_eq!(again, sym);
    }

    #[test]
    fn bipartite_densities() {
        assert_eq!(bipartite_density::<Rational>(&petersen(), &lim()).unwrap(), rational(4, 5));
        assert_eq!(bipartite_density::<Rational>(&cycle(6).unwrap(), &lim()).unwrap(), rational(1, 1));
        assert_eq!(bipartite_density::<Rational>(&complete(4), &lim()).unwrap(), rational(2, 3));
        assert!((bipartite_density::<f64>(&petersen(), &lim()).unwrap() - 0.8).abs() < 1e-12);
    }

    #[test]
    fn weight_validation() {
        let k2 = complete(2);
        assert!(WeightFunction::<Rational>::new(k2.clone(), vec![rational(0, 1)]).is_err());
        assert!(WeightFunction::<Rational>::new(k2.clone(), vec![rational(-1, 2)]).is_err());
        assert!(WeightFunction::<Rational>::new(k2, vec![]).is_err());
        assert!(WeightFunction::<Rational>::uniform(&Graph::edgeless(3)).is_err());
    }

    #[test]
    fn budget_is_enforced() {
        let tight = Limits {
            enumeration_budget: 100,
            ..Limits::default()
        };
        let w = WeightFunction::<Rational>::uniform(&petersen()).unwrap();
        assert!(matches!(mc(&complete(2), &w, &tight), Err(Error::EnumerationBudget { .. })));
    }
}
