//! Homomorphism existence, witnesses and homomorphic equivalence.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::Limits;

/// A total map `V(source) -> V(target)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexMap {
    source: Graph,
    target: Graph,
    assignment: Vec<usize>,
}

impl VertexMap {
    pub fn new(source: Graph, target: Graph, assignment: Vec<usize>) -> Result<Self> {
        if assignment.len() != source.vertex_count() {
            return Err(Error::InvalidParameter(format!(
                "assignment covers {} of {} source vertices",
                assignment.len(),
                source.vertex_count()
            )));
        }
        if let Some(&bad) = assignment.iter().find(|&&t| t >= target.vertex_count()) {
            return Err(Error::InvalidParameter(format!(
                "image {bad} out of range for {} target vertices",
                target.vertex_count()
            )));
        }
        Ok(VertexMap {
            source,
            target,
            assignment,
        })
    }

    pub fn identity(graph: &Graph) -> Self {
        VertexMap {
            source: graph.clone(),
            target: graph.clone(),
            assignment: (0..graph.vertex_count()).collect(),
        }
    }

    pub fn source(&self) -> &Graph {
        &self.source
    }

    pub fn target(&self) -> &Graph {
        &self.target
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn image(&self, v: usize) -> usize {
        self.assignment[v]
    }

    /// Edge id in the target that source edge `id` is carried to, if any.
    pub fn edge_image(&self, id: usize) -> Option<usize> {
        let (u, v) = self.source.edges()[id];
        self.target.edge_index(self.assignment[u], self.assignment[v])
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &VertexMap) -> Result<VertexMap> {
        if next.source != self.target {
            return Err(Error::InvalidParameter("composed maps do not chain".into()));
        }
        VertexMap::new(
            self.source.clone(),
            next.target.clone(),
            self.assignment.iter().map(|&t| next.assignment[t]).collect(),
        )
    }
}

/// True iff every source edge lands on a target edge.
pub fn verify_homomorphism(map: &VertexMap) -> bool {
    map.source
        .edges()
        .iter()
        .all(|&(u, v)| map.target.has_edge(map.assignment[u], map.assignment[v]))
}

struct HomSearch<'a> {
    source: &'a Graph,
    target: &'a Graph,
    order: Vec<usize>,
    assignment: Vec<usize>,
    assigned: Vec<bool>,
    nodes: u64,
    budget: u64,
}

impl HomSearch<'_> {
    fn extend(&mut self, depth: usize) -> Result<bool> {
        if depth == self.order.len() {
            return Ok(true);
        }
        let v = self.order[depth];
        for t in 0..self.target.vertex_count() {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::SearchBudget {
                    budget: self.budget,
                });
            }
            let consistent = self.source.neighbors(v).iter().all(|&u| {
                !self.assigned[u] || self.target.has_edge(self.assignment[u], t)
            });
            if !consistent {
                continue;
            }
            self.assignment[v] = t;
            self.assigned[v] = true;
            if self.extend(depth + 1)? {
                return Ok(true);
            }
            self.assigned[v] = false;
        }
        Ok(false)
    }
}

/// Searches for a homomorphism `g -> h`.
///
/// Vertices of `g` are placed in descending-degree order (ties by index) and
/// target candidates are tried in ascending order, so the witness is
/// reproducible.
pub fn find_homomorphism(g: &Graph, h: &Graph, limits: &Limits) -> Result<Option<VertexMap>> {
    let mut order: Vec<usize> = (0..g.vertex_count()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut search = HomSearch {
        source: g,
        target: h,
        order,
        assignment: vec![0; g.vertex_count()],
        assigned: vec![false; g.vertex_count()],
        nodes: 0,
        budget: limits.search_budget,
    };
    if search.extend(0)? {
        let assignment = search.assignment;
        Ok(Some(VertexMap::new(g.clone(), h.clone(), assignment)?))
    } else {
        Ok(None)
    }
}

/// Witnesses for `g -> h` and `h -> g`.
#[derive(Clone, Debug)]
pub struct HomEquivalence {
    pub forward: VertexMap,
    pub backward: VertexMap,
}

/// Returns both witnesses when `g` and `h` are homomorphically equivalent.
pub fn hom_equivalent(g: &Graph, h: &Graph, limits: &Limits) -> Result<Option<HomEquivalence>> {
    let Some(forward) = find_homomorphism(g, h, limits)? else {
        return Ok(None);
    };
    Ok(find_homomorphism(h, g, limits)?.map(|backward| HomEquivalence { forward, backward }))
}
