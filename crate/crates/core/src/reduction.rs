//! The hardness gadget: from a connected base graph of diameter at least 3,
//! build the augmented graph G' whose mu_k encodes the independence number
//! of the base, together with the explicit witness set and the closed-form
//! value.

use std::ops::Range;

use crate::error::{Error, Result};
use crate::graph::{all_pairs, independence_number_with_limit, Graph};
use crate::vertex_set::VertexSet;

/// Per-vertex role inside G'.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Role {
    /// A vertex of the base graph.
    Original(usize),
    /// The universal hub w, adjacent to every original and every edge-clique
    /// vertex.
    Hub,
    /// Member of the clique A_e attached to base edge `edge` (index into the
    /// sorted edge list).
    EdgeClique { edge: usize, member: usize },
    /// Member of the clique B_j, `layer` in 1..=d-1.
    LayerClique { layer: usize, member: usize },
}

/// G' plus the bookkeeping needed to address its parts.
#[derive(Clone, Debug)]
pub struct GPrimeLayout {
    pub base: Graph,
    pub gprime: Graph,
    pub roles: Vec<Role>,
    /// Base edges sorted with u < v, lexicographic; A blocks follow this order.
    pub base_edges: Vec<(usize, usize)>,
    /// Diameter of the base, which equals the diameter of G'.
    pub diameter: usize,
}

impl GPrimeLayout {
    pub fn hub(&self) -> usize {
        self.base.n()
    }

    /// Vertex ids of the clique A_e for the `e`-th sorted base edge.
    pub fn edge_clique(&self, e: usize) -> Range<usize> {
        let n = self.base.n();
        let start = n + 1 + e * n;
        start..start + n
    }

    /// Vertex ids of the clique B_j, `j` in 1..=d-1.
    pub fn layer_clique(&self, j: usize) -> Range<usize> {
        let n = self.base.n();
        let start = n + 1 + self.base.m() * n + (j - 1) * n;
        start..start + n
    }

    /// One role-table line per vertex: `id<TAB>role`, originals rendered in
    /// the supplied labels when given.
    pub fn role_line(&self, v: usize, labels: Option<&[u64]>) -> String {
        let label = |i: usize| -> String {
            match labels {
                Some(ls) => ls[i].to_string(),
                None => i.to_string(),
            }
        };
        let role = match self.roles[v] {
            Role::Original(i) => format!("original({})", label(i)),
            Role::Hub => "hub_w".to_string(),
            Role::EdgeClique { edge, member } => {
                let (a, b) = self.base_edges[edge];
                format!("edge_clique({}-{},{member})", label(a), label(b))
            }
            Role::LayerClique { layer, member } => format!("layer_clique({layer},{member})"),
        };
        format!("{v}\t{role}")
    }
}

/// Builds G' from a connected base of diameter d >= 3 with n >= 3 vertices:
/// one order-n clique A_e joined to both endpoints of every base edge, a hub
/// w joined to all originals and all A vertices, and a chain of order-n
/// cliques B_1..B_{d-1} with B_1 joined to all originals and consecutive
/// B's fully joined. |V(G')| = n + 1 + n*m + n*(d-1) and diam(G') = d.
pub fn build_gprime(g: &Graph) -> Result<GPrimeLayout> {
    let n = g.n();
    if n < 3 {
        return Err(Error::Parameter(format!(
            "reduction base needs n >= 3, got {n}"
        )));
    }
    let dm = all_pairs(g);
    if !dm.is_connected() {
        return Err(Error::Disconnected("reduction base must be connected".into()));
    }
    let d = dm.diameter;
    if d < 3 {
        return Err(Error::Parameter(format!(
            "reduction base needs diameter >= 3, got {d}"
        )));
    }
    let m = g.m();
    let base_edges = g.edges();
    let total = n + 1 + n * m + n * (d - 1);
    let mut gp = Graph::new(total);
    let mut roles = Vec::with_capacity(total);

    for (u, v) in &base_edges {
        gp.add_edge(*u, *v)?;
    }
    roles.extend((0..n).map(Role::Original));

    let w = n;
    roles.push(Role::Hub);
    for i in 0..n {
        gp.add_edge(w, i)?;
    }

    let mut next = n + 1;
    for (e, &(i, j)) in base_edges.iter().enumerate() {
        let block = next..next + n;
        for x in block.clone() {
            for y in x + 1..block.end {
                gp.add_edge(x, y)?;
            }
            gp.add_edge(x, i)?;
            gp.add_edge(x, j)?;
            gp.add_edge(x, w)?;
        }
        roles.extend((0..n).map(|member| Role::EdgeClique { edge: e, member }));
        next = block.end;
    }

    let mut prev_block: Option<Range<usize>> = None;
    for layer in 1..=d - 1 {
        let block = next..next + n;
        for x in block.clone() {
            for y in x + 1..block.end {
                gp.add_edge(x, y)?;
            }
        }
        match &prev_block {
            None => {
                for x in block.clone() {
                    for i in 0..n {
                        gp.add_edge(x, i)?;
                    }
                }
            }
            Some(prev) => {
                for x in block.clone() {
                    for y in prev.clone() {
                        gp.add_edge(x, y)?;
                    }
                }
            }
        }
        roles.extend((0..n).map(|member| Role::LayerClique { layer, member }));
        prev_block = Some(block.clone());
        next = block.end;
    }

    debug_assert_eq!(next, total);
    Ok(GPrimeLayout {
        base: g.clone(),
        gprime: gp,
        roles,
        base_edges,
        diameter: d,
    })
}

/// The proof's explicit witness: I, all A blocks, B_1..B_{k-2} each minus
/// its least-id vertex, and all of B_{k-1}. Its cardinality is
/// n(m+k-1) + |I| - k + 2.
pub fn proof_witness_set(
    layout: &GPrimeLayout,
    k: usize,
    independent: &VertexSet,
) -> Result<VertexSet> {
    check_k_range(layout, k)?;
    let base = &layout.base;
    let members: Vec<usize> = independent.iter().collect();
    for &v in &members {
        if v >= base.n() {
            return Err(Error::Parameter(format!(
                "vertex {v} is not a base vertex"
            )));
        }
    }
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            if base.has_edge(u, v) {
                return Err(Error::Parameter(format!(
                    "input set is not independent: edge {u}-{v}"
                )));
            }
        }
    }
    let mut s = VertexSet::empty(layout.gprime.n());
    for v in members {
        s.insert(v);
    }
    for e in 0..base.m() {
        for x in layout.edge_clique(e) {
            s.insert(x);
        }
    }
    for j in 1..=k.saturating_sub(2) {
        let block = layout.layer_clique(j);
        // The withheld vertex b_j is the least id of B_j.
        for x in block.clone().skip(1) {
            s.insert(x);
        }
    }
    for x in layout.layer_clique(k - 1) {
        s.insert(x);
    }
    Ok(s)
}

/// The exact value mu_k(G') = n(m+k-1) + alpha(base) - k + 2.
pub fn expected_mu_gprime(layout: &GPrimeLayout, k: usize) -> Result<usize> {
    check_k_range(layout, k)?;
    let n = layout.base.n();
    let m = layout.base.m();
    let alpha = independence_number_with_limit(&layout.base, layout.base.n().max(64))?;
    Ok(n * (m + k - 1) + alpha - k + 2)
}

fn check_k_range(layout: &GPrimeLayout, k: usize) -> Result<()> {
    if k < 2 || k > layout.diameter - 1 {
        return Err(Error::Parameter(format!(
            "reduction needs 2 <= k <= d-1 = {}, got {k}",
            layout.diameter - 1
        )));
    }
    Ok(())
}
