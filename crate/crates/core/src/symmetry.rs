//! Automorphism groups and their action on vertices and edges.

use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::limits::Limits;

/// A vertex permutation, `perm[v]` is the image of `v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidParameter("not a permutation".into()));
            }
        }
        Ok(Permutation(images))
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn apply_edge(&self, (u, v): Edge) -> Edge {
        let (a, b) = (self.0[u], self.0[v]);
        (a.min(b), a.max(b))
    }

    /// `other ∘ self`: apply `self` first.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation(self.0.iter().map(|&v| other.0[v]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (v, &img) in self.0.iter().enumerate() {
            inv[img] = v;
        }
        Permutation(inv)
    }

    /// True iff `{π(u), π(v)} ∈ E ⇔ {u, v} ∈ E`.
    pub fn is_automorphism_of(&self, graph: &Graph) -> bool {
        self.0.len() == graph.vertex_count()
            && graph
                .edges()
                .iter()
                .all(|&(u, v)| graph.has_edge(self.0[u], self.0[v]))
    }
}

fn check_cap(graph: &Graph, limits: &Limits) -> Result<()> {
    if graph.vertex_count() > limits.vertex_cap {
        return Err(Error::VertexCap {
            vertices: graph.vertex_count(),
            cap: limits.vertex_cap,
        });
    }
    Ok(())
}

struct AutSearch<'a, F> {
    graph: &'a Graph,
    invariant: Vec<(usize, Vec<usize>)>,
    image: Vec<usize>,
    used: Vec<bool>,
    nodes: u64,
    budget: u64,
    visit: F,
}

impl<F: FnMut(&Permutation) -> ControlFlow<()>> AutSearch<'_, F> {
    fn extend(&mut self, v: usize) -> Result<ControlFlow<()>> {
        let n = self.graph.vertex_count();
        if v == n {
            return Ok((self.visit)(&Permutation(self.image.clone())));
        }
        for t in 0..n {
            if self.used[t] || self.invariant[t] != self.invariant[v] {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::SearchBudget {
                    budget: self.budget,
                });
            }
            let preserves = (0..v).all(|u| {
                self.graph.has_edge(u, v) == self.graph.has_edge(self.image[u], t)
            });
            if !preserves {
                continue;
            }
            self.image[v] = t;
            self.used[t] = true;
            let flow = self.extend(v + 1)?;
            self.used[t] = false;
            if flow.is_break() {
                return Ok(flow);
            }
        }
        Ok(ControlFlow::Continue(()))
    }
}

/// Streams every automorphism of `graph` in lexicographic order of the
/// image vector (identity first). Candidates are pruned by degree and the
/// multiset of neighbour degrees.
pub fn for_each_automorphism(
    graph: &Graph,
    limits: &Limits,
    visit: impl FnMut(&Permutation) -> ControlFlow<()>,
) -> Result<()> {
    check_cap(graph, limits)?;
    let invariant = (0..graph.vertex_count())
        .map(|v| {
            let mut nd: Vec<usize> = graph.neighbors(v).iter().map(|&u| graph.degree(u)).collect();
            nd.sort_unstable();
            (graph.degree(v), nd)
        })
        .collect();
    let mut search = AutSearch {
        graph,
        invariant,
        image: vec![0; graph.vertex_count()],
        used: vec![false; graph.vertex_count()],
        nodes: 0,
        budget: limits.search_budget,
        visit,
    };
    let _ = search.extend(0)?;
    Ok(())
}

/// The full automorphism group as explicit permutations.
#[derive(Clone, Debug)]
pub struct AutomorphismGroup {
    graph: Graph,
    elements: Vec<Permutation>,
}

impl AutomorphismGroup {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Sorted lexicographically; the identity comes first.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, perm: &Permutation) -> bool {
        self.elements.binary_search(perm).is_ok()
    }

    pub fn edge_orbits(&self) -> Result<OrbitPartition> {
        orbits_under(&self.graph, &self.elements)
    }
}

pub fn automorphisms(graph: &Graph, limits: &Limits) -> Result<AutomorphismGroup> {
    let mut elements = Vec::new();
    for_each_automorphism(graph, limits, |p| {
        elements.push(p.clone());
        ControlFlow::Continue(())
    })?;
    elements.sort();
    Ok(AutomorphismGroup {
        graph: graph.clone(),
        elements,
    })
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.0[root] != root {
            root = self.0[root];
        }
        let mut cur = x;
        while self.0[cur] != root {
            cur = std::mem::replace(&mut self.0[cur], root);
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }

    fn classes(&mut self) -> Vec<Vec<usize>> {
        let n = self.0.len();
        let mut by_root: Vec<Vec<usize>> = vec![Vec::new(); n];
        for x in 0..n {
            let r = self.find(x);
            by_root[r].push(x);
        }
        by_root.into_iter().filter(|c| !c.is_empty()).collect()
    }
}

/// Partition of `E(graph)` into automorphism orbits `A_1..A_r`.
///
/// Orbits are ordered by (size, smallest edge) and each orbit lists edge ids
/// ascending, which fixes the coordinates of solution vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitPartition {
    graph: Graph,
    orbits: Vec<Vec<usize>>,
    orbit_of: Vec<usize>,
}

impl OrbitPartition {
    fn from_classes(graph: &Graph, mut orbits: Vec<Vec<usize>>) -> Self {
        for orbit in &mut orbits {
            orbit.sort_unstable();
        }
        orbits.sort_by_key(|o| (o.len(), o[0]));
        let mut orbit_of = vec![0; graph.edge_count()];
        for (i, orbit) in orbits.iter().enumerate() {
            for &e in orbit {
                orbit_of[e] = i;
            }
        }
        OrbitPartition {
            graph: graph.clone(),
            orbits,
            orbit_of,
        }
    }

    /// The trivial partition with every edge in one orbit.
    pub fn single(graph: &Graph) -> Result<Self> {
        if graph.is_edgeless() {
            return Err(Error::Edgeless);
        }
        Ok(Self::from_classes(graph, vec![(0..graph.edge_count()).collect()]))
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.orbits.iter().map(Vec::len).collect()
    }

    /// Orbit id of edge `id`.
    pub fn orbit_of(&self, id: usize) -> usize {
        self.orbit_of[id]
    }
}

/// Orbits of `E(graph)` under the group generated by `perms`, by union-find.
pub fn orbits_under(graph: &Graph, perms: &[Permutation]) -> Result<OrbitPartition> {
    if graph.is_edgeless() {
        return Err(Error::Edgeless);
    }
    let mut uf = UnionFind::new(graph.edge_count());
    for p in perms {
        union_edges(graph, p, &mut uf)?;
    }
    Ok(OrbitPartition::from_classes(graph, uf.classes()))
}

fn union_edges(graph: &Graph, p: &Permutation, uf: &mut UnionFind) -> Result<()> {
    for (id, &e) in graph.edges().iter().enumerate() {
        let (a, b) = p.apply_edge(e);
        let img = graph
            .edge_index(a, b)
            .ok_or_else(|| Error::InvalidParameter("permutation is not an automorphism".into()))?;
        uf.union(id, img);
    }
    Ok(())
}

/// Edge orbits of the full automorphism group, streamed from the search.
pub fn edge_orbits(graph: &Graph, limits: &Limits) -> Result<OrbitPartition> {
    if graph.is_edgeless() {
        return Err(Error::Edgeless);
    }
    let mut uf = UnionFind::new(graph.edge_count());
    let mut failure = None;
    for_each_automorphism(graph, limits, |p| match union_edges(graph, p, &mut uf) {
        Ok(()) => ControlFlow::Continue(()),
        Err(e) => {
            failure = Some(e);
            ControlFlow::Break(())
        }
    })?;
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(OrbitPartition::from_classes(graph, uf.classes()))
}

pub fn is_edge_transitive(graph: &Graph, limits: &Limits) -> Result<bool> {
    Ok(edge_orbits(graph, limits)?.len() == 1)
}

/// Vertex orbits, each sorted ascending, ordered by smallest member.
pub fn vertex_orbits(graph: &Graph, limits: &Limits) -> Result<Vec<Vec<usize>>> {
    let mut uf = UnionFind::new(graph.vertex_count());
    for_each_automorphism(graph, limits, |p| {
        for v in 0..p.images().len() {
            uf.union(v, p.apply(v));
        }
        ControlFlow::Continue(())
    })?;
    Ok(uf.classes())
}
