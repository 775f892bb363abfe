//! Euler circuits on the oriented projection graph, and the summand split
//! induced by a pseudo-coloring.
//!
//! The projection of an alternating diagram is a 4-valent graph on the
//! crossings. Each of its `2n` edges joins an under pass to an over pass;
//! orienting every edge from its under end to its over end gives in- and
//! out-degree two everywhere, hence a directed Euler circuit. Following the
//! maximum color of a pseudo-coloring along that circuit isolates a
//! contiguous block of arcs, and the minimum color isolates a second one.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::coloring::{defects, PseudoColoring};
use crate::knotio::{is_alternating, Diagram, PassKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EulerError {
    #[error("diagram is not alternating")]
    NotAlternating,
    #[error("no edge carries color {0}")]
    NoHEdge(BigInt),
    #[error("edge at circuit position {0} does not carry the maximum color")]
    NotAnHEdge(usize),
    #[error("invariant violated: {0}")]
    InvariantViolated(String),
}

pub type Result<T> = std::result::Result<T, EulerError>;

fn violated(msg: impl Into<String>) -> EulerError {
    EulerError::InvariantViolated(msg.into())
}

/// Segment of the knot between code positions `position` and `position + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub tail: usize,
    pub head: usize,
    pub arc: usize,
    pub position: usize,
}

#[derive(Debug, Clone)]
pub struct DiagramDigraph {
    n: usize,
    edges: Vec<Edge>,
    out_edges: Vec<Vec<usize>>,
    in_edges: Vec<Vec<usize>>,
}

impl DiagramDigraph {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Edge ids equal code positions.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> &Edge {
        &self.edges[id]
    }

    pub fn out_edges(&self, v: usize) -> &[usize] {
        &self.out_edges[v]
    }

    pub fn in_edges(&self, v: usize) -> &[usize] {
        &self.in_edges[v]
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &e in self.out_edges[v].iter().chain(&self.in_edges[v]) {
                let Edge { tail, head, .. } = self.edges[e];
                for w in [tail, head] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// Orients every projection edge from its under-pass end to its over-pass end.
pub fn build_digraph(d: &Diagram) -> Result<DiagramDigraph> {
    if !is_alternating(d) {
        return Err(EulerError::NotAlternating);
    }
    let n = d.n();
    let m = 2 * n;
    let mut edges = Vec::with_capacity(m);
    let mut out_edges = vec![Vec::new(); n];
    let mut in_edges = vec![Vec::new(); n];
    for k in 0..m {
        let next = (k + 1) % m;
        let (a, b) = (d.crossing_of_pass(k), d.crossing_of_pass(next));
        let (tail, head) = match d.pass_kind(k) {
            PassKind::Under => (a, b),
            PassKind::Over => (b, a),
        };
        out_edges[tail].push(k);
        in_edges[head].push(k);
        edges.push(Edge {
            tail,
            head,
            arc: d.arc_of_pass(next),
            position: k,
        });
    }
    let g = DiagramDigraph {
        n,
        edges,
        out_edges,
        in_edges,
    };
    let degrees_ok = (0..n).all(|v| g.out_edges[v].len() == 2 && g.in_edges[v].len() == 2);
    if !degrees_ok || !g.is_connected() {
        return Err(violated("projection digraph is not 2-in 2-out connected"));
    }
    Ok(g)
}

/// Closed walk through every edge exactly once, as edge ids in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerCircuit {
    pub edges: Vec<usize>,
}

impl EulerCircuit {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Edge id at a cyclic position.
    pub fn at(&self, pos: usize) -> usize {
        self.edges[pos % self.edges.len()]
    }

    /// Each edge once, consecutive edges chained head to tail (cyclically),
    /// and every vertex entered exactly twice.
    pub fn validate(&self, g: &DiagramDigraph) -> Result<()> {
        let m = g.edges.len();
        if self.edges.len() != m {
            return Err(violated(format!(
                "circuit has {} of {m} edges",
                self.edges.len()
            )));
        }
        let mut used = vec![false; m];
        let mut visits = vec![0usize; g.n];
        for (i, &e) in self.edges.iter().enumerate() {
            if std::mem::replace(&mut used[e], true) {
                return Err(violated(format!("edge {e} repeated")));
            }
            let next = self.at(i + 1);
            if g.edges[e].head != g.edges[next].tail {
                return Err(violated(format!(
                    "edges {e} and {next} are not consecutive"
                )));
            }
            visits[g.edges[e].head] += 1;
        }
        if let Some(v) = visits.iter().position(|&c| c != 2) {
            return Err(violated(format!("vertex {v} visited {} times", visits[v])));
        }
        Ok(())
    }
}

/// Hierholzer's algorithm, forced to begin with edge `start`; at each vertex
/// the unused out-edge with the lowest id is taken.
pub fn euler_circuit(g: &DiagramDigraph, start: usize) -> EulerCircuit {
    let mut used = vec![false; g.edges.len()];
    let mut next_out = vec![0usize; g.n];
    let mut circuit = Vec::with_capacity(g.edges.len());
    used[start] = true;
    let mut stack: Vec<(usize, Option<usize>)> = vec![
        (g.edges[start].tail, None),
        (g.edges[start].head, Some(start)),
    ];
    while let Some(&(v, via)) = stack.last() {
        let outs = &g.out_edges[v];
        while next_out[v] < outs.len() && used[outs[next_out[v]]] {
            next_out[v] += 1;
        }
        if let Some(&e) = outs.get(next_out[v]) {
            used[e] = true;
            stack.push((g.edges[e].head, Some(e)));
        } else {
            stack.pop();
            if let Some(e) = via {
                circuit.push(e);
            }
        }
    }
    circuit.reverse();
    EulerCircuit { edges: circuit }
}

/// What an edge of maximum color `h` runs into.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexCase {
    /// A 0-crossing; every incident edge has color `h`.
    ZeroHVertex,
    /// The +1-crossing, with the circuit continuing on an `h` edge.
    PlusOneHH,
    /// The +1-crossing, with the circuit leaving on the `h - 1` edge.
    PlusOneHMinusOne,
}

impl fmt::Display for VertexCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            VertexCase::ZeroHVertex => "zero-h-vertex",
            VertexCase::PlusOneHH => "plus-one-hh",
            VertexCase::PlusOneHMinusOne => "plus-one-h-minus-1",
        };
        f.write_str(s)
    }
}

fn max_color(values: &[BigInt]) -> BigInt {
    values.iter().max().cloned().unwrap_or_default()
}

/// Classifies the head of the circuit edge at `pos`, which must carry the
/// maximum color of `values`. An `h` edge entering the -1-crossing, or any
/// coloring around the vertex that a pseudo-coloring cannot produce, is
/// reported as a violated invariant.
pub fn classify_vertex(
    d: &Diagram,
    g: &DiagramDigraph,
    circuit: &EulerCircuit,
    values: &[BigInt],
    pos: usize,
) -> Result<VertexCase> {
    let h = max_color(values);
    let incoming = g.edge(circuit.at(pos));
    if values[incoming.arc] != h {
        return Err(EulerError::NotAnHEdge(pos));
    }
    let v = incoming.head;
    if d.over(v) != incoming.arc {
        return Err(violated(format!(
            "edge into crossing {v} is not its over arc"
        )));
    }
    let defect = defects(d, values).map_err(|e| violated(e.to_string()))?;
    let (u1, u2) = d.under_arcs(v);
    let (y, z) = (&values[u1], &values[u2]);
    let alpha = &defect[v];
    if *alpha == BigInt::from(-1) {
        return Err(violated(format!(
            "h-edge at position {pos} points to the -1-crossing {v}"
        )));
    }
    if alpha.is_zero() {
        if *y != h || *z != h {
            return Err(violated(format!(
                "0-crossing {v} entered by h has a non-h under arc"
            )));
        }
        return Ok(VertexCase::ZeroHVertex);
    }
    if alpha.is_one() {
        let below = &h - 1;
        if !((*y == h && *z == below) || (*y == below && *z == h)) {
            return Err(violated(format!(
                "+1-crossing {v} under arcs are not h and h-1"
            )));
        }
        let next = g.edge(circuit.at(pos + 1));
        return Ok(if values[next.arc] == h {
            VertexCase::PlusOneHH
        } else {
            VertexCase::PlusOneHMinusOne
        });
    }
    Err(violated(format!("defect {alpha} at crossing {v}")))
}

/// Maximal run of consecutive `h` edges of a circuit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HPath {
    /// Circuit position of the first edge.
    pub start: usize,
    /// Edge ids in circuit order.
    pub edges: Vec<usize>,
    pub h: BigInt,
}

/// The longest cyclic run of edges whose arc has color `h` (the first one
/// found on ties, scanning from position 0).
pub fn longest_h_path(
    g: &DiagramDigraph,
    circuit: &EulerCircuit,
    arc_colors: &[BigInt],
    h: &BigInt,
) -> Result<HPath> {
    let m = circuit.len();
    let is_h = |pos: usize| arc_colors[g.edge(circuit.at(pos)).arc] == *h;
    let Some(anchor) = (0..m).find(|&p| !is_h(p)) else {
        if m == 0 {
            return Err(EulerError::NoHEdge(h.clone()));
        }
        return Ok(HPath {
            start: 0,
            edges: circuit.edges.clone(),
            h: h.clone(),
        });
    };
    // Runs cannot cross the non-h anchor, so one lap from it sees each run whole.
    let mut best: Option<(usize, usize)> = None;
    let mut run_start = 0;
    let mut run_len = 0;
    for k in 1..=m {
        let pos = (anchor + k) % m;
        if is_h(pos) {
            if run_len == 0 {
                run_start = pos;
            }
            run_len += 1;
        } else if run_len > 0 {
            let better = match best {
                None => true,
                Some((s, l)) => run_len > l || (run_len == l && run_start < s),
            };
            if better {
                best = Some((run_start, run_len));
            }
            run_len = 0;
        }
    }
    let (start, len) = best.ok_or_else(|| EulerError::NoHEdge(h.clone()))?;
    Ok(HPath {
        start,
        edges: (0..len).map(|k| circuit.at(start + k)).collect(),
        h: h.clone(),
    })
}

/// The two blocks of arcs a pseudo-coloring splits a diagram into.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SummandSplit {
    /// Arcs of maximum color, as a cyclic interval starting at its first arc.
    pub h_arcs: Vec<usize>,
    /// Arcs of minimum color, likewise.
    pub l_arcs: Vec<usize>,
    pub plus_crossing: usize,
    pub minus_crossing: usize,
    pub h_path: HPath,
    pub l_path: HPath,
}

/// Arcs as a cyclic interval `[first, first+len)` mod `n`, if they form one.
fn cyclic_interval(arcs: &[bool]) -> Option<(usize, usize)> {
    let n = arcs.len();
    let len = arcs.iter().filter(|&&a| a).count();
    if len == 0 {
        return None;
    }
    if len == n {
        return Some((0, n));
    }
    let first = (0..n).find(|&i| arcs[i] && !arcs[(i + n - 1) % n])?;
    (0..len)
        .all(|k| arcs[(first + k) % n])
        .then_some((first, len))
}

struct TopBlock {
    path: HPath,
    arcs: Vec<usize>,
}

/// The maximum-color analysis for one side. `plus` is the +1-crossing of
/// `values`.
fn top_block(
    d: &Diagram,
    g: &DiagramDigraph,
    circuit: &EulerCircuit,
    values: &[BigInt],
    plus: usize,
) -> Result<TopBlock> {
    let n = d.n();
    let h = max_color(values);
    for pos in 0..circuit.len() {
        if values[g.edge(circuit.at(pos)).arc] == h {
            classify_vertex(d, g, circuit, values, pos)?;
        }
    }
    let path = longest_h_path(g, circuit, values, &h)?;
    let h_edges = g.edges().iter().filter(|e| values[e.arc] == h).count();
    if path.edges.len() != h_edges {
        return Err(violated(format!(
            "longest h-path has {} of {h_edges} h-edges",
            path.edges.len()
        )));
    }
    let last = g.edge(*path.edges.last().expect("nonempty path"));
    if last.head != plus {
        return Err(violated(format!(
            "h-path ends at crossing {}, not the +1-crossing {plus}",
            last.head
        )));
    }
    let member: Vec<bool> = values.iter().map(|v| *v == h).collect();
    let (first, mut len) = cyclic_interval(&member)
        .ok_or_else(|| violated("arcs of one color are not a contiguous interval"))?;
    if len < 2 && len < n {
        // reach just past the +1-crossing so the block holds a crossing
        len += 1;
    }
    let arcs: Vec<usize> = (0..len).map(|k| (first + k) % n).collect();
    if !arcs.contains(&plus) {
        return Err(violated(format!(
            "+1-crossing {plus} lies outside its block"
        )));
    }
    Ok(TopBlock { path, arcs })
}

/// Splits a pseudo-colored diagram into the block of maximum-color arcs
/// (ending at the +1-crossing) and the block of minimum-color arcs (ending
/// at the -1-crossing), checking every step of the argument on the way.
///
/// Crossing `c_i` is counted inside a block when its incoming under arc
/// `a_i` is. The minimum side reuses the maximum-side analysis on
/// `(h + l) * T - y`, whose defects are those of `y` negated.
pub fn extract_summands(d: &Diagram, y: &PseudoColoring) -> Result<SummandSplit> {
    let checked = PseudoColoring::new(d, y.values.clone()).map_err(|e| violated(e.to_string()))?;
    let (plus, minus) = (checked.plus_crossing, checked.minus_crossing);
    let g = build_digraph(d)?;
    let circuit = euler_circuit(&g, 0);
    circuit.validate(&g)?;

    let values = &checked.values;
    let top = top_block(d, &g, &circuit, values, plus)?;

    let total = checked.max_color() + checked.min_color();
    let flipped: Vec<BigInt> = values.iter().map(|v| &total - v).collect();
    let bottom = top_block(d, &g, &circuit, &flipped, minus)?;

    if top.arcs.iter().any(|a| bottom.arcs.contains(a)) {
        return Err(violated("max and min blocks overlap"));
    }
    if top.arcs.contains(&minus) || bottom.arcs.contains(&plus) {
        return Err(violated("+1 and -1 crossings share a block"));
    }
    Ok(SummandSplit {
        h_arcs: top.arcs,
        l_arcs: bottom.arcs,
        plus_crossing: plus,
        minus_crossing: minus,
        h_path: top.path,
        l_path: bottom.path,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::find_pseudo_coloring;
    use crate::knotio::{connected_sum, dt_to_gauss, gauss_to_diagram, parse_dt, parse_gauss};

    fn from_dt(dt: &str) -> Diagram {
        gauss_to_diagram(&dt_to_gauss(&parse_dt(dt).unwrap())).unwrap()
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn granny() -> Diagram {
        let t = from_dt("4 6 2");
        connected_sum(&t, &t)
    }

    #[test]
    fn trefoil_digraph() {
        let g = build_digraph(&from_dt("4 6 2")).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edges().len(), 6);
        for v in 0..3 {
            assert_eq!(g.out_edges(v).len(), 2);
            assert_eq!(g.in_edges(v).len(), 2);
        }
        let f = build_digraph(&from_dt("4 6 8 2")).unwrap();
        assert_eq!((f.vertex_count(), f.edges().len()), (4, 8));
        assert!(f.is_connected());
    }

    #[test]
    fn non_alternating_is_rejected() {
        let d = gauss_to_diagram(&parse_gauss("O1 O2 U1 U2").unwrap()).unwrap();
        assert_eq!(build_digraph(&d).unwrap_err(), EulerError::NotAlternating);
    }

    #[test]
    fn circuits_from_every_start() {
        for d in [from_dt("4 6 2"), granny()] {
            let g = build_digraph(&d).unwrap();
            for start in 0..g.edges().len() {
                let c = euler_circuit(&g, start);
                assert_eq!(c.len(), 2 * d.n());
                assert_eq!(c.edges[0], start);
                c.validate(&g).unwrap();
            }
        }
    }

    #[test]
    fn longest_run_basics() {
        let d = from_dt("4 6 2");
        let g = build_digraph(&d).unwrap();
        let c = euler_circuit(&g, 0);
        let h = BigInt::from(5);
        let all = longest_h_path(&g, &c, &big(&[5, 5, 5]), &h).unwrap();
        assert_eq!(all.edges.len(), 6);
        let none = longest_h_path(&g, &c, &big(&[1, 2, 3]), &h);
        assert_eq!(none.unwrap_err(), EulerError::NoHEdge(h.clone()));
        // a single arc colored h covers the edges of that arc met in a row
        let one = longest_h_path(&g, &c, &big(&[5, 1, 1]), &h).unwrap();
        assert!(!one.edges.is_empty());
        assert!(one.edges.iter().all(|&e| g.edge(e).arc == 0));
    }

    #[test]
    fn granny_pseudo_coloring_splits() {
        let d = granny();
        let pc = PseudoColoring::new(&d, big(&[2, 2, 2, 1, 1, 1])).unwrap();
        assert_eq!((pc.plus_crossing, pc.minus_crossing), (2, 5));
        let split = extract_summands(&d, &pc).unwrap();
        assert_eq!(split.h_arcs, vec![0, 1, 2]);
        assert_eq!(split.l_arcs, vec![3, 4, 5]);
        let g = build_digraph(&d).unwrap();
        assert_eq!(g.edge(*split.h_path.edges.last().unwrap()).head, 2);
    }

    #[test]
    fn classify_cases_on_granny() {
        let d = granny();
        let g = build_digraph(&d).unwrap();
        let c = euler_circuit(&g, 0);
        let values = big(&[2, 2, 2, 1, 1, 1]);
        let mut cases = Vec::new();
        for pos in 0..c.len() {
            if values[g.edge(c.at(pos)).arc] == BigInt::from(2) {
                cases.push(classify_vertex(&d, &g, &c, &values, pos).unwrap());
            } else {
                assert_eq!(
                    classify_vertex(&d, &g, &c, &values, pos),
                    Err(EulerError::NotAnHEdge(pos))
                );
            }
        }
        assert!(cases.contains(&VertexCase::ZeroHVertex));
        assert!(cases.contains(&VertexCase::PlusOneHMinusOne));
    }

    #[test]
    fn foreign_defect_is_flagged() {
        // An h-edge never meets a -1 defect (both under colors would have to
        // exceed h), so feed a defect no pseudo-coloring has instead.
        let d = from_dt("4 6 2");
        let g = build_digraph(&d).unwrap();
        let c = euler_circuit(&g, 0);
        let values = big(&[2, 1, 1]);
        assert_eq!(defects(&d, &values).unwrap(), big(&[-1, 2, -1]));
        let pos = (0..c.len()).find(|&p| g.edge(c.at(p)).arc == 0).unwrap();
        match classify_vertex(&d, &g, &c, &values, pos) {
            Err(EulerError::InvariantViolated(msg)) => assert!(msg.contains("defect 2"), "{msg}"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn invalid_vector_is_rejected() {
        let d = granny();
        let bogus = PseudoColoring {
            values: big(&[3, 2, 2, 1, 1, 1]),
            plus_crossing: 0,
            minus_crossing: 1,
        };
        assert!(matches!(
            extract_summands(&d, &bogus),
            Err(EulerError::InvariantViolated(_))
        ));
    }

    #[test]
    fn sweep_results_split_cleanly() {
        let d = granny();
        for r in 0..d.n() {
            let rd = d.rotated(r);
            for j in 0..rd.n() - 1 {
                if let Some(pc) = find_pseudo_coloring(&rd, j).unwrap() {
                    let split = extract_summands(&rd, &pc).unwrap();
                    assert!(split.h_arcs.contains(&split.plus_crossing));
                    assert!(split.l_arcs.contains(&split.minus_crossing));
                }
            }
        }
    }
}
