//! Ready-made planar graphs used by unit tests, the acceptance suite, and
//! the CLI demos: wires, corollas, and two worked mixed examples.

use std::collections::BTreeMap;

use crate::graph::{Graph, Hid, PreGraph};
use crate::oriented::{OrientedGraph, Sign};
use crate::planar::PlanarGraph;

/// The unitary planar graph (identity wire) with named halves:
/// `in` on top (+), `out` below (-), order {-} before {+} on its one edge.
pub fn wire(tag: &str) -> PlanarGraph {
    let i = format!("{tag}i");
    let o = format!("{tag}o");
    let g = Graph::new(
        PreGraph::build(
            [i.clone(), o.clone()],
            vec![vec![i.clone(), o.clone()]],
            vec![(i.clone(), o.clone())],
        )
        .unwrap(),
    )
    .unwrap();
    let og = OrientedGraph::new(
        g,
        [(i.clone(), Sign::Plus), (o, Sign::Minus)].into_iter().collect(),
    )
    .unwrap();
    let rep = og.pre().edges()[0].clone();
    PlanarGraph::new(og, vec![rep]).unwrap()
}

/// Prime (m,n)-planar graph: one real vertex, inputs before outputs.
pub fn prime(tag: &str, m: usize, n: usize) -> PlanarGraph {
    assert!(m >= 1 && n >= 1, "directed vertices need inputs and outputs");
    let mut ids = Vec::new();
    let mut sign = BTreeMap::new();
    let mut order = Vec::new();
    for k in 0..m {
        let h = format!("{tag}i{k}");
        sign.insert(h.clone(), Sign::Plus);
        order.push(h.clone());
        ids.push(h);
    }
    for k in 0..n {
        let h = format!("{tag}o{k}");
        sign.insert(h.clone(), Sign::Minus);
        order.push(h.clone());
        ids.push(h);
    }
    let g = Graph::new(PreGraph::build(ids.clone(), vec![ids], vec![]).unwrap()).unwrap();
    let og = OrientedGraph::new(g, sign).unwrap();
    PlanarGraph::new(og, order).unwrap()
}

/// Elementary example: wire, wire, prime(3,2), wire, prime(1,2), wire, with
/// the twelve edges ordered left to right.
pub fn elementary_example() -> PlanarGraph {
    let p = wire("w1")
        .tensor(&wire("w2"))
        .tensor(&prime("p1", 3, 2))
        .tensor(&wire("w3"))
        .tensor(&prime("p2", 1, 2))
        .tensor(&wire("w4"));
    p
}

/// Reduced five-vertex example. Half-edges are numbered 01..22 in the induced
/// half-edge order; its sixteen edges produce the planar order below.
///
/// Vertices: a = {02,03,04,05,07,12}, b = {01,06,08,09,10},
/// c = {14,15,16,20}, d = {11,13,17,18,19}, e = {21,22}.
pub fn reduced_example() -> PlanarGraph {
    let two = |x: u32| format!("{x:02}");
    let halves: Vec<Hid> = (1..=22).map(two).collect();
    let blocks = vec![
        vec![2, 3, 4, 5, 7, 12].into_iter().map(two).collect::<Vec<_>>(),
        vec![1, 6, 8, 9, 10].into_iter().map(two).collect(),
        vec![14, 15, 16, 20].into_iter().map(two).collect(),
        vec![11, 13, 17, 18, 19].into_iter().map(two).collect(),
        vec![21, 22].into_iter().map(two).collect(),
    ];
    let pairs = vec![(5, 6), (7, 8), (10, 11), (12, 13), (16, 17), (20, 21)]
        .into_iter()
        .map(|(a, b)| (two(a), two(b)))
        .collect::<Vec<_>>();
    let g = Graph::new(PreGraph::build(halves.clone(), blocks, pairs).unwrap()).unwrap();
    let plus = [1, 2, 3, 4, 6, 8, 11, 13, 14, 15, 17, 21];
    let sign = halves
        .iter()
        .map(|h| {
            let v: u32 = h.parse().unwrap();
            (h.clone(), if plus.contains(&v) { Sign::Plus } else { Sign::Minus })
        })
        .collect();
    let og = OrientedGraph::new(g, sign).unwrap();
    let order = vec![1, 2, 3, 4, 5, 7, 9, 10, 12, 14, 15, 16, 18, 19, 20, 22]
        .into_iter()
        .map(two)
        .collect();
    PlanarGraph::new(og, order).unwrap()
}
