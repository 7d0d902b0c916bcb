//! Progressive planar structures: a total order on the edges of a
//! progressive graph satisfying the extension axiom P1 and the convexity
//! axiom P2, with the induced half-edge and vertex orders, order inference
//! from polarization + anchors, tensor and composition.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{GraphError, PlanarError};
use crate::graph::{Graph, Hid};
use crate::oriented::{compose_pairs, AnchoredGraph, OrientedGraph, Reach, Sign};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PlanarGraph {
    og: OrientedGraph,
    /// Edge representatives in planar order.
    order: Vec<Hid>,
}

/// Diagnostic outcome of the three equivalent P2 checkers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarDiagnostics {
    pub p1: Result<(), PlanarError>,
    pub p2: Result<(), PlanarError>,
    pub p2_right: Result<(), PlanarError>,
    pub p2_left: Result<(), PlanarError>,
}

impl PlanarGraph {
    pub fn new(og: OrientedGraph, order: Vec<Hid>) -> Result<Self, PlanarError> {
        og.check_directed()?;
        if let Some(e) = og.find_circuit_edge() {
            return Err(PlanarError::NotProgressive(e));
        }
        let edges: BTreeSet<Hid> = og.pre().edges().into_iter().collect();
        let listed: BTreeSet<Hid> = order.iter().cloned().collect();
        if listed != edges || order.len() != edges.len() {
            return Err(PlanarError::BadOrder);
        }
        let r = Reach::new(&og);
        check_p1(&r, &order)?;
        check_p2(&r, &order)?;
        Ok(PlanarGraph { og, order })
    }

    /// Validate and also report the status of the P2 variants.
    pub fn diagnostics(og: &OrientedGraph, order: &[Hid]) -> PlanarDiagnostics {
        let r = Reach::new(og);
        PlanarDiagnostics {
            p1: check_p1(&r, order),
            p2: check_p2(&r, order),
            p2_right: check_p2_right(&r, order),
            p2_left: check_p2_left(&r, order),
        }
    }

    pub fn empty() -> Self {
        PlanarGraph {
            og: OrientedGraph::new(Graph::empty(), BTreeMap::new()).unwrap(),
            order: Vec::new(),
        }
    }

    pub fn oriented(&self) -> &OrientedGraph {
        &self.og
    }

    pub fn graph(&self) -> &Graph {
        self.og.graph()
    }

    pub fn order(&self) -> &[Hid] {
        &self.order
    }

    pub fn edge_pos(&self, rep: &str) -> usize {
        self.order.iter().position(|e| e == rep).expect("edge not in order")
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Input legs in planar order.
    pub fn inputs(&self) -> Vec<Hid> {
        let mut ins = self.og.inputs();
        ins.sort_by_key(|h| self.edge_pos(&self.og.pre().edge_rep(h)));
        ins
    }

    /// Output legs in planar order.
    pub fn outputs(&self) -> Vec<Hid> {
        let mut outs = self.og.outputs();
        outs.sort_by_key(|h| self.edge_pos(&self.og.pre().edge_rep(h)));
        outs
    }

    pub fn arity(&self) -> (usize, usize) {
        (self.og.inputs().len(), self.og.outputs().len())
    }

    /// The induced total order on half-edges: distinct edges compare by the
    /// planar order; within one edge the `-` half comes first.
    pub fn half_edge_order(&self) -> Vec<Hid> {
        let pre = self.og.pre();
        let mut halves: Vec<Hid> = pre.halves().iter().cloned().collect();
        halves.sort_by_key(|h| {
            let e = self.edge_pos(&pre.edge_rep(h));
            let intra = match self.og.sign(h) {
                Sign::Minus => 0,
                Sign::Plus => 1,
            };
            (e, intra)
        });
        halves
    }

    /// Half-edges of `block` with the given sign, in half-edge order.
    pub fn boundary_of(&self, block: &BTreeSet<Hid>, sign: Sign) -> Vec<Hid> {
        let pre = self.og.pre();
        let mut hs: Vec<Hid> =
            block.iter().filter(|h| self.og.sign(h) == sign).cloned().collect();
        hs.sort_by_key(|h| self.edge_pos(&pre.edge_rep(h)));
        hs
    }

    /// Real vertices in the induced vertex order (indices into the block
    /// list). The order extends reachability; ties resolve by comparing the
    /// last output edge of one vertex against the first input edge of the
    /// other.
    pub fn vertex_order(&self) -> Vec<usize> {
        let pre = self.og.pre();
        let real: Vec<usize> = (0..pre.blocks().len())
            .filter(|&i| !pre.is_virtual_vertex(&pre.blocks()[i]))
            .collect();
        let n = real.len();
        if n <= 1 {
            return real;
        }
        let r = Reach::new(&self.og);
        let before = |a: usize, b: usize| -> bool {
            if r.vertex_reaches(a, b) {
                return true;
            }
            if r.vertex_reaches(b, a) {
                return false;
            }
            let omax_a = self
                .boundary_of(&pre.blocks()[a], Sign::Minus)
                .last()
                .map(|h| self.edge_pos(&pre.edge_rep(h)))
                .expect("directed vertex has outputs");
            let imin_b = self
                .boundary_of(&pre.blocks()[b], Sign::Plus)
                .first()
                .map(|h| self.edge_pos(&pre.edge_rep(h)))
                .expect("directed vertex has inputs");
            omax_a < imin_b
        };
        // pairwise tournament; transitivity holds exactly when the
        // out-degrees form 0..n-1
        let mut wins = vec![0usize; n];
        for i in 0..n {
            for j in (i + 1)..n {
                if before(real[i], real[j]) {
                    wins[i] += 1;
                } else {
                    wins[j] += 1;
                }
            }
        }
        let mut check: Vec<usize> = wins.clone();
        check.sort_unstable();
        assert!(
            check.iter().enumerate().all(|(k, &w)| w == k),
            "vertex order is not total"
        );
        let mut idx: Vec<usize> = (0..n).collect();
        idx.sort_by_key(|&i| std::cmp::Reverse(wins[i]));
        idx.into_iter().map(|i| real[i]).collect()
    }

    /// Relabel half-edges by their rank in the half-edge order. Structural
    /// equality of canonical forms decides equivalence of planar graphs.
    pub fn canonical_form(&self) -> PlanarGraph {
        self.canonical_with_map().0
    }

    pub fn canonical_with_map(&self) -> (PlanarGraph, BTreeMap<Hid, Hid>) {
        let map: BTreeMap<Hid, Hid> = self
            .half_edge_order()
            .into_iter()
            .enumerate()
            .map(|(i, h)| (h, format!("h{:04}", i + 1)))
            .collect();
        let og = self.og.rename(&map);
        let order = self
            .order
            .iter()
            .map(|rep| {
                let halves = self.og.pre().edge_halves(rep);
                halves.iter().map(|h| map[h].clone()).min().unwrap()
            })
            .collect();
        (PlanarGraph { og, order }, map)
    }

    pub fn rename(&self, map: &BTreeMap<Hid, Hid>) -> PlanarGraph {
        let og = self.og.rename(map);
        let order = self
            .order
            .iter()
            .map(|rep| {
                let halves = self.og.pre().edge_halves(rep);
                halves
                    .iter()
                    .map(|h| map.get(h).cloned().unwrap_or_else(|| h.clone()))
                    .min()
                    .unwrap()
            })
            .collect();
        PlanarGraph { og, order }
    }

    /// Tensor product: all edges of `self` before all edges of `other`.
    pub fn tensor(&self, other: &PlanarGraph) -> PlanarGraph {
        let og = self.og.tensor(&other.og);
        let order = self
            .order
            .iter()
            .map(|e| format!("L:{e}"))
            .chain(other.order.iter().map(|e| format!("R:{e}")))
            .collect();
        PlanarGraph { og, order }
    }

    /// Composition: graft the outputs of `self` onto the inputs of `next` in
    /// planar order; the composite order shuffles the basic segments of the
    /// two factors around the new edges.
    pub fn compose(&self, next: &PlanarGraph) -> Result<PlanarGraph, PlanarError> {
        let outs = self.outputs();
        let ins = next.inputs();
        if outs.len() != ins.len() {
            return Err(PlanarError::Graph(GraphError::ArityMismatch {
                out: outs.len(),
                inn: ins.len(),
            }));
        }
        let n = outs.len();
        let joined = self.og.tensor(&next.og);
        let out_legs: Vec<Hid> = outs.iter().map(|h| format!("L:{h}")).collect();
        let in_legs: Vec<Hid> = ins.iter().map(|h| format!("R:{h}")).collect();
        let anchored = compose_pairs(
            joined.clone(),
            &out_legs,
            &in_legs,
            crate::graph::prefix_all("L:", self.inputs()),
            crate::graph::prefix_all("R:", next.outputs()),
        )?;

        let mut order: Vec<Hid> = Vec::new();
        if n == 0 {
            // degenerate interface: everything of self before everything of
            // next, consistent with the tensor product
            order.extend(self.order.iter().map(|e| format!("L:{e}")));
            order.extend(next.order.iter().map(|e| format!("R:{e}")));
        } else {
            let out_pos: Vec<usize> =
                outs.iter().map(|h| self.edge_pos(&self.og.pre().edge_rep(h))).collect();
            let in_pos: Vec<usize> =
                ins.iter().map(|h| next.edge_pos(&next.og.pre().edge_rep(h))).collect();
            debug_assert_eq!(out_pos[n - 1], self.order.len() - 1);
            debug_assert_eq!(in_pos[0], 0);
            for k in 0..n {
                let lo = if k == 0 { 0 } else { out_pos[k - 1] + 1 };
                for e in &self.order[lo..out_pos[k]] {
                    order.push(format!("L:{e}"));
                }
                // representative of the k-th new edge
                let o = &out_legs[k];
                let i = &in_legs[k];
                let o_virtual = !joined.pre().is_real_leg(o);
                let i_virtual = !joined.pre().is_real_leg(i);
                let rep = match (o_virtual, i_virtual) {
                    (false, false) => o.clone().min(i.clone()),
                    (false, true) => o.clone(),
                    (true, false) => i.clone(),
                    (true, true) => {
                        joined.pre().sigma(o).clone().min(joined.pre().sigma(i).clone())
                    }
                };
                order.push(rep);
                let hi = if k + 1 == n { next.order.len() } else { in_pos[k + 1] };
                for e in &next.order[in_pos[k] + 1..hi] {
                    order.push(format!("R:{e}"));
                }
            }
        }
        PlanarGraph::new(anchored.directed, order)
    }

    /// Opposite planar graph: all orientations reversed, order mirrored.
    pub fn opposite(&self) -> PlanarGraph {
        PlanarGraph {
            og: self.og.opposite(),
            order: self.order.iter().rev().cloned().collect(),
        }
    }

    /// The anchored graph carried by the planar structure.
    pub fn anchored(&self) -> AnchoredGraph {
        AnchoredGraph::new(self.og.clone(), self.inputs(), self.outputs())
            .expect("planar graphs are anchored")
    }

    /// Basic segments of a composition interface, by reachability
    /// (for cross-validation against the shuffled construction).
    pub fn lower_segments(&self) -> Vec<Vec<Hid>> {
        let outs = self.outputs();
        let r = Reach::new(&self.og);
        let pre = self.og.pre();
        let oreps: Vec<Hid> = outs.iter().map(|h| pre.edge_rep(h)).collect();
        let mut segs = vec![Vec::new(); outs.len()];
        for e in &self.order {
            if oreps.contains(e) {
                continue;
            }
            for (k, orep) in oreps.iter().enumerate() {
                let here = r.edge_reaches(e, orep);
                let prev = k > 0 && r.edge_reaches(e, &oreps[k - 1]);
                if here && !prev {
                    segs[k].push(e.clone());
                    break;
                }
            }
        }
        segs
    }

    pub fn upper_segments(&self) -> Vec<Vec<Hid>> {
        let ins = self.inputs();
        let r = Reach::new(&self.og);
        let pre = self.og.pre();
        let ireps: Vec<Hid> = ins.iter().map(|h| pre.edge_rep(h)).collect();
        let n = ins.len();
        let mut segs = vec![Vec::new(); n];
        for e in &self.order {
            if ireps.contains(e) {
                continue;
            }
            for k in (0..n).rev() {
                let here = r.edge_reaches(&ireps[k], e);
                let nxt = k + 1 < n && r.edge_reaches(&ireps[k + 1], e);
                if here && !nxt {
                    segs[k].push(e.clone());
                    break;
                }
            }
        }
        segs
    }
}

fn check_p1(r: &Reach, order: &[Hid]) -> Result<(), PlanarError> {
    let pos: BTreeMap<&Hid, usize> = order.iter().enumerate().map(|(i, e)| (e, i)).collect();
    for e1 in order {
        for e2 in order {
            if e1 != e2 && r.edge_reaches(e1, e2) && pos[e1] > pos[e2] {
                return Err(PlanarError::P1Violation { e1: e1.clone(), e2: e2.clone() });
            }
        }
    }
    Ok(())
}

fn check_p2(r: &Reach, order: &[Hid]) -> Result<(), PlanarError> {
    let n = order.len();
    for i in 0..n {
        for j in (i + 1)..n {
            // pairs e1 = order[i] < e3 = order[j] are candidates with any e2 later
            for k in (j + 1)..n {
                let (e1, e3, e2) = (&order[i], &order[j], &order[k]);
                if r.edge_reaches(e1, e2) && !r.edge_reaches(e3, e2) && !r.edge_reaches(e1, e3) {
                    return Err(PlanarError::P2Violation {
                        e1: e1.clone(),
                        e2: e2.clone(),
                        e3: e3.clone(),
                    });
                }
            }
        }
    }
    Ok(())
}

fn check_p2_right(r: &Reach, order: &[Hid]) -> Result<(), PlanarError> {
    let n = order.len();
    for i in 0..n {
        for j in (i + 1)..n {
            let (e1, e3) = (&order[i], &order[j]);
            if r.edge_reaches(e1, e3) {
                continue;
            }
            for (k, e2) in order.iter().enumerate() {
                if k == i || k == j {
                    continue;
                }
                if r.edge_reaches(e1, e2) && k > j && !r.edge_reaches(e3, e2) {
                    return Err(PlanarError::P2Violation {
                        e1: e1.clone(),
                        e2: e2.clone(),
                        e3: e3.clone(),
                    });
                }
            }
        }
    }
    Ok(())
}

fn check_p2_left(r: &Reach, order: &[Hid]) -> Result<(), PlanarError> {
    let n = order.len();
    for j in 0..n {
        for k in (j + 1)..n {
            let (e3, e2) = (&order[j], &order[k]);
            if r.edge_reaches(e3, e2) {
                continue;
            }
            for (i, e1) in order.iter().enumerate() {
                if i == j || i == k {
                    continue;
                }
                if r.edge_reaches(e1, e2) && !(j < i || r.edge_reaches(e1, e3)) {
                    return Err(PlanarError::P2Violation {
                        e1: e1.clone(),
                        e2: e2.clone(),
                        e3: e3.clone(),
                    });
                }
            }
        }
    }
    Ok(())
}

/// Polarization data: for each real vertex (keyed by its smallest half-edge)
/// the chosen orders on its input and output halves.
pub type Polarization = BTreeMap<Hid, (Vec<Hid>, Vec<Hid>)>;

/// Recover the unique planar order compatible with the given polarization
/// and anchors, or report that none exists.
pub fn infer_planar_order(
    og: &OrientedGraph,
    polarization: &Polarization,
    anchor_in: &[Hid],
    anchor_out: &[Hid],
) -> Result<PlanarGraph, PlanarError> {
    og.check_directed()?;
    if let Some(e) = og.find_circuit_edge() {
        return Err(PlanarError::NotProgressive(e));
    }
    let pre = og.pre();
    let r = Reach::new(og);
    let edges = pre.edges();
    let n = edges.len();
    let ins: BTreeSet<Hid> = og.inputs().into_iter().collect();
    if anchor_in.iter().cloned().collect::<BTreeSet<_>>() != ins
        || anchor_in.len() != ins.len()
    {
        return Err(PlanarError::InconsistentInput("bad input anchor".into()));
    }
    let outs: BTreeSet<Hid> = og.outputs().into_iter().collect();
    if anchor_out.iter().cloned().collect::<BTreeSet<_>>() != outs
        || anchor_out.len() != outs.len()
    {
        return Err(PlanarError::InconsistentInput("bad output anchor".into()));
    }
    for (bi, b) in pre.blocks().iter().enumerate() {
        if pre.is_virtual_vertex(b) {
            continue;
        }
        let key = b.iter().next().unwrap();
        let (pi, po) = polarization
            .get(key)
            .ok_or_else(|| PlanarError::InconsistentInput(format!("no polarization at {key}")))?;
        let want_in: BTreeSet<Hid> = og.ins_of(b).into_iter().collect();
        let want_out: BTreeSet<Hid> = og.outs_of(b).into_iter().collect();
        if pi.iter().cloned().collect::<BTreeSet<_>>() != want_in
            || po.iter().cloned().collect::<BTreeSet<_>>() != want_out
            || pi.len() != want_in.len()
            || po.len() != want_out.len()
        {
            return Err(PlanarError::InconsistentInput(format!(
                "polarization at block {bi} does not list the vertex boundary"
            )));
        }
    }

    // input legs reaching each edge (reflexively), as anchor positions
    let anchor_pos: BTreeMap<&Hid, usize> =
        anchor_in.iter().enumerate().map(|(i, h)| (h, i)).collect();
    let imax: Vec<Option<usize>> = edges
        .iter()
        .map(|e| {
            anchor_in
                .iter()
                .filter(|i| {
                    let irep = pre.edge_rep(i);
                    irep == *e || r.edge_reaches(&irep, e)
                })
                .map(|i| anchor_pos[i])
                .max()
        })
        .collect();

    let real_blocks: Vec<usize> = (0..pre.blocks().len())
        .filter(|&i| !pre.is_virtual_vertex(&pre.blocks()[i]))
        .collect();

    let reaches_star = |a: &Hid, b: &Hid| a == b || r.edge_reaches(a, b);

    let decide = |e1: &Hid, e2: &Hid| -> Option<bool> {
        // Some(true) = e1 before e2
        if r.edge_reaches(e1, e2) {
            return Some(true);
        }
        if r.edge_reaches(e2, e1) {
            return Some(false);
        }
        let common: Vec<usize> = real_blocks
            .iter()
            .copied()
            .filter(|&v| r.vertex_reaches_edge(v, e1) && r.vertex_reaches_edge(v, e2))
            .collect();
        if common.is_empty() {
            let (a, b) = (
                imax[edges.iter().position(|x| x == e1).unwrap()],
                imax[edges.iter().position(|x| x == e2).unwrap()],
            );
            return match (a, b) {
                (Some(a), Some(b)) if a != b => Some(a < b),
                _ => None,
            };
        }
        // maximal common ancestors under vertex reachability
        let maximal: Vec<usize> = common
            .iter()
            .copied()
            .filter(|&v| common.iter().all(|&w| w == v || !r.vertex_reaches(v, w)))
            .collect();
        for v in maximal {
            let block = &pre.blocks()[v];
            let key = block.iter().next().unwrap();
            let out_order = &polarization[key].1;
            let choice1 = out_order.iter().position(|o| {
                let orep = pre.edge_rep(o);
                reaches_star(&orep, e1) && !reaches_star(&orep, e2)
            });
            let choice2 = out_order.iter().position(|o| {
                let orep = pre.edge_rep(o);
                reaches_star(&orep, e2) && !reaches_star(&orep, e1)
            });
            if let (Some(a), Some(b)) = (choice1, choice2) {
                return Some(a < b);
            }
        }
        None
    };

    // assemble the tournament and check it is a total order
    let mut wins = vec![0usize; n];
    for i in 0..n {
        for j in (i + 1)..n {
            match decide(&edges[i], &edges[j]) {
                Some(true) => wins[i] += 1,
                Some(false) => wins[j] += 1,
                None => return Err(PlanarError::NoCompatibleOrder),
            }
        }
    }
    let mut check = wins.clone();
    check.sort_unstable();
    if !check.iter().enumerate().all(|(k, &w)| w == k) {
        return Err(PlanarError::NoCompatibleOrder);
    }
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by_key(|&i| std::cmp::Reverse(wins[i]));
    let order: Vec<Hid> = idx.into_iter().map(|i| edges[i].clone()).collect();

    let pg = PlanarGraph::new(og.clone(), order).map_err(|_| PlanarError::NoCompatibleOrder)?;
    if compatible(&pg, polarization, anchor_in, anchor_out) {
        Ok(pg)
    } else {
        Err(PlanarError::NoCompatibleOrder)
    }
}

/// Does the planar order induce exactly this polarization and these anchors?
pub fn compatible(
    pg: &PlanarGraph,
    polarization: &Polarization,
    anchor_in: &[Hid],
    anchor_out: &[Hid],
) -> bool {
    if pg.inputs() != anchor_in || pg.outputs() != anchor_out {
        return false;
    }
    let pre = pg.oriented().pre();
    for b in pre.blocks() {
        if pre.is_virtual_vertex(b) {
            continue;
        }
        let key = b.iter().next().unwrap();
        let Some((pi, po)) = polarization.get(key) else { return false };
        if &pg.boundary_of(b, Sign::Plus) != pi || &pg.boundary_of(b, Sign::Minus) != po {
            return false;
        }
    }
    true
}

/// The polarization induced by a planar structure.
pub fn induced_polarization(pg: &PlanarGraph) -> Polarization {
    let pre = pg.oriented().pre();
    pre.blocks()
        .iter()
        .filter(|b| !pre.is_virtual_vertex(b))
        .map(|b| {
            let key = b.iter().next().unwrap().clone();
            (key, (pg.boundary_of(b, Sign::Plus), pg.boundary_of(b, Sign::Minus)))
        })
        .collect()
}

/// Enumerate every edge order satisfying P1 + P2 + compatibility; the brute
/// oracle behind order-inference tests. Exponential, desk scale only.
pub fn enumerate_compatible_orders(
    og: &OrientedGraph,
    polarization: &Polarization,
    anchor_in: &[Hid],
    anchor_out: &[Hid],
) -> Vec<Vec<Hid>> {
    let r = Reach::new(og);
    let edges = og.pre().edges();
    let mut found = Vec::new();
    let mut prefix: Vec<Hid> = Vec::new();
    let mut used = vec![false; edges.len()];
    fn rec(
        edges: &[Hid],
        r: &Reach,
        used: &mut Vec<bool>,
        prefix: &mut Vec<Hid>,
        found: &mut Vec<Vec<Hid>>,
    ) {
        if prefix.len() == edges.len() {
            found.push(prefix.clone());
            return;
        }
        for i in 0..edges.len() {
            if used[i] {
                continue;
            }
            // linear extension: everything reaching edges[i] must be placed
            let ok = (0..edges.len()).all(|j| {
                used[j] || j == i || !r.edge_reaches(&edges[j], &edges[i])
            });
            if ok {
                used[i] = true;
                prefix.push(edges[i].clone());
                rec(edges, r, used, prefix, found);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    rec(&edges, &r, &mut used, &mut prefix, &mut found);
    found
        .into_iter()
        .filter(|ord| {
            check_p2(&r, ord).is_ok()
                && match PlanarGraph::new(og.clone(), ord.clone()) {
                    Ok(pg) => compatible(&pg, polarization, anchor_in, anchor_out),
                    Err(_) => false,
                }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{elementary_example, prime, reduced_example, wire};

    #[test]
    fn worked_examples_are_planar() {
        let e = elementary_example();
        assert_eq!(e.order().len(), 12);
        assert_eq!(e.arity(), (8, 8));
        let r = reduced_example();
        assert_eq!(r.order().len(), 16);
        assert_eq!(r.arity(), (6, 4));
        let d = PlanarGraph::diagnostics(r.oriented(), r.order());
        assert!(d.p1.is_ok() && d.p2.is_ok() && d.p2_right.is_ok() && d.p2_left.is_ok());
    }

    #[test]
    fn swapping_two_edges_breaks_p2() {
        let r = reduced_example();
        let mut order = r.order().to_vec();
        // swap the 5th and 9th edges of the order
        let (i, j) = (4, 8);
        order.swap(i, j);
        let err = PlanarGraph::new(r.oriented().clone(), order).unwrap_err();
        assert!(matches!(err, PlanarError::P1Violation { .. } | PlanarError::P2Violation { .. }));
    }

    #[test]
    fn half_edge_order_of_examples() {
        // wire: the "-" half comes first on its single edge
        let w = wire("w");
        assert_eq!(w.half_edge_order(), vec!["wo".to_string(), "wi".to_string()]);

        // reduced example: half ids were chosen to equal their ranks
        let r = reduced_example();
        let expected: Vec<Hid> = (1..=22).map(|x| format!("{x:02}")).collect();
        assert_eq!(r.half_edge_order(), expected);

        // elementary example: ranks follow the drawing except that each
        // wire lists its output half first
        let e = elementary_example();
        let got = e.half_edge_order();
        assert_eq!(got.len(), 16);
        let pos = |h: &str| got.iter().position(|x| x.ends_with(h)).unwrap();
        // the first wire occupies ranks 0 and 1, output half first
        assert!(got[0].ends_with("w1o") && got[1].ends_with("w1i"));
        assert!(pos("w2o") < pos("w2i"));
        // prime boundaries keep the drawn order
        let expect_tail = ["p1i0", "p1i1", "p1i2", "p1o0", "p1o1"];
        for w in expect_tail.windows(2) {
            assert!(pos(w[0]) < pos(w[1]));
        }
    }

    #[test]
    fn vertex_order_of_reduced_example() {
        let r = reduced_example();
        let pre = r.oriented().pre();
        let order = r.vertex_order();
        let names: Vec<&str> = order
            .iter()
            .map(|&i| {
                let b = &pre.blocks()[i];
                if b.contains("02") {
                    "a"
                } else if b.contains("01") {
                    "b"
                } else if b.contains("14") {
                    "c"
                } else if b.contains("11") {
                    "d"
                } else {
                    "e"
                }
            })
            .collect();
        assert_eq!(names, vec!["a", "b", "c", "d", "e"]);
    }

    #[test]
    fn vertex_order_is_linear_extension() {
        for pg in [reduced_example(), elementary_example()] {
            let order = pg.vertex_order();
            let r = Reach::new(pg.oriented());
            for (i, &a) in order.iter().enumerate() {
                for &b in &order[i + 1..] {
                    assert!(!r.vertex_reaches(b, a), "vertex order contradicts reachability");
                }
            }
            // vertex-level P2
            for i in 0..order.len() {
                for j in (i + 1)..order.len() {
                    for k in (j + 1)..order.len() {
                        let (v1, v3, v2) = (order[i], order[j], order[k]);
                        if r.vertex_reaches(v1, v2) {
                            assert!(
                                r.vertex_reaches(v1, v3) || r.vertex_reaches(v3, v2),
                                "vertex P2 failed"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn canonical_form_properties() {
        let r = reduced_example();
        let c = r.canonical_form();
        assert_eq!(c.canonical_form(), c, "idempotent");
        // a relabeled copy has the same canonical form
        let map = r
            .oriented()
            .pre()
            .halves()
            .iter()
            .map(|h| (h.clone(), format!("x{h}x")))
            .collect();
        let relabeled = r.rename(&map);
        assert_eq!(relabeled.canonical_form(), c);
        assert_ne!(elementary_example().canonical_form(), c);
    }

    #[test]
    fn tensor_laws() {
        let p = prime("p", 2, 1);
        let empty = PlanarGraph::empty();
        assert_eq!(p.tensor(&empty).canonical_form(), p.canonical_form());
        assert_eq!(empty.tensor(&p).canonical_form(), p.canonical_form());
        let q = prime("q", 1, 2);
        let w = wire("w");
        let lhs = p.tensor(&q).tensor(&w).canonical_form();
        let rhs = p.tensor(&q.tensor(&w)).canonical_form();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn tensor_order_uniqueness_clauses() {
        // any planar order whose restrictions match the factors and which
        // puts the left factor first equals the constructed one
        let p = prime("p", 1, 1);
        let q = prime("q", 1, 1);
        let t = p.tensor(&q);
        let r = Reach::new(t.oriented());
        let perms = crate::planar::enumerate_compatible_orders(
            t.oriented(),
            &crate::planar::induced_polarization(&t),
            &t.inputs(),
            &t.outputs(),
        );
        let _ = r;
        for ord in perms {
            let cand = PlanarGraph::new(t.oriented().clone(), ord).unwrap();
            let left_first = cand
                .order()
                .iter()
                .take(p.order().len())
                .all(|e| e.starts_with("L:"));
            let restr_match = {
                let lpos: Vec<usize> = p
                    .order()
                    .iter()
                    .map(|e| cand.edge_pos(&format!("L:{e}")))
                    .collect();
                let rpos: Vec<usize> = q
                    .order()
                    .iter()
                    .map(|e| cand.edge_pos(&format!("R:{e}")))
                    .collect();
                lpos.windows(2).all(|w| w[0] < w[1]) && rpos.windows(2).all(|w| w[0] < w[1])
            };
            if left_first && restr_match {
                assert_eq!(cand, t);
            }
        }
    }

    #[test]
    fn compose_identity_layer() {
        let p = prime("p", 2, 3);
        let id3 = wire("a").tensor(&wire("b")).tensor(&wire("c"));
        let got = p.compose(&id3).unwrap();
        assert_eq!(got.canonical_form(), p.canonical_form());
        let id2 = wire("x").tensor(&wire("y"));
        let got2 = id2.compose(&p).unwrap();
        assert_eq!(got2.canonical_form(), p.canonical_form());
    }

    #[test]
    fn compose_segments_match_reachability() {
        let top = prime("p", 1, 2).tensor(&wire("w"));
        let bot = prime("q", 2, 1).tensor(&wire("v"));
        // interface has width 3
        let comp = top.compose(&bot).unwrap();
        assert_eq!(comp.arity(), (2, 2));

        // reachability characterization of the basic segments
        let segs = top.lower_segments();
        let outs = top.outputs();
        let r = Reach::new(top.oriented());
        let pre = top.oriented().pre();
        for (k, seg) in segs.iter().enumerate() {
            for e in seg {
                assert!(r.edge_reaches(e, &pre.edge_rep(&outs[k])));
                if k > 0 {
                    assert!(!r.edge_reaches(e, &pre.edge_rep(&outs[k - 1])));
                }
            }
        }
        let segs2 = bot.upper_segments();
        let ins = bot.inputs();
        let r2 = Reach::new(bot.oriented());
        let pre2 = bot.oriented().pre();
        for (k, seg) in segs2.iter().enumerate() {
            for e in seg {
                assert!(r2.edge_reaches(&pre2.edge_rep(&ins[k]), e));
                if k + 1 < ins.len() {
                    assert!(!r2.edge_reaches(&pre2.edge_rep(&ins[k + 1]), e));
                }
            }
        }
    }

    #[test]
    fn compose_associative_and_middle_four() {
        let a = prime("a", 1, 2);
        let b = prime("b", 2, 2);
        let c = prime("c", 2, 1);
        let lhs = a.compose(&b).unwrap().compose(&c).unwrap().canonical_form();
        let rhs = a.compose(&b.compose(&c).unwrap()).unwrap().canonical_form();
        assert_eq!(lhs, rhs);

        let (f1, g1) = (prime("f1", 1, 2), prime("g1", 2, 1));
        let (f2, g2) = (prime("f2", 2, 1), prime("g2", 1, 2));
        let one = f1.compose(&g1).unwrap().tensor(&f2.compose(&g2).unwrap()).canonical_form();
        let two = f1.tensor(&f2).compose(&g1.tensor(&g2)).unwrap().canonical_form();
        assert_eq!(one, two);
    }

    #[test]
    fn opposite_is_involutive() {
        let r = reduced_example();
        assert_eq!(r.opposite().opposite(), r);
        assert_eq!(r.opposite().arity(), (4, 6));
        // P2^l of the graph corresponds to P2^r of the opposite
        let d = PlanarGraph::diagnostics(r.oriented(), r.order());
        let o = r.opposite();
        let d2 = PlanarGraph::diagnostics(o.oriented(), o.order());
        assert_eq!(d.p2_left.is_ok(), d2.p2_right.is_ok());
        assert_eq!(d.p2_right.is_ok(), d2.p2_left.is_ok());
    }

    #[test]
    fn infer_round_trip_on_reduced_example() {
        let r = reduced_example();
        let pol = induced_polarization(&r);
        let got = infer_planar_order(r.oriented(), &pol, &r.inputs(), &r.outputs()).unwrap();
        assert_eq!(got, r);

        // the exhaustive oracle agrees and finds exactly one order
        let small = prime("p", 1, 2).compose(&prime("q", 2, 1)).unwrap();
        let pol2 = induced_polarization(&small);
        let all = enumerate_compatible_orders(
            small.oriented(),
            &pol2,
            &small.inputs(),
            &small.outputs(),
        );
        assert_eq!(all.len(), 1);
        assert_eq!(&all[0], small.order());
    }

    #[test]
    fn crossing_wires_have_no_planar_order() {
        // two primes with crossed anchors: inputs i1 i2, outputs o2 o1
        let a = prime("a", 1, 1);
        let b = prime("b", 1, 1);
        let t = a.tensor(&b);
        let pol = induced_polarization(&t);
        let ins = t.inputs();
        let outs = t.outputs();
        let crossed: Vec<Hid> = outs.iter().rev().cloned().collect();
        let err = infer_planar_order(t.oriented(), &pol, &ins, &crossed).unwrap_err();
        assert_eq!(err, PlanarError::NoCompatibleOrder);
        // confirmed by exhaustive search
        let all = enumerate_compatible_orders(t.oriented(), &pol, &ins, &crossed);
        assert!(all.is_empty());
    }
}
