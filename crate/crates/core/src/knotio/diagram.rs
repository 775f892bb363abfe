use std::collections::VecDeque;

use super::gauss::{GaussCode, PassKind};
use super::{KnotIoError, Result};

/// A knot diagram in oriented labeling.
///
/// The stored Gauss code always ends with an under pass, so arc `a_i` is
/// the run of passes after the `(i-1)`-th under pass up to and including
/// the `i`-th one, and `c_i` is the crossing of the `i`-th under pass. The
/// under arcs of `c_i` are therefore `a_i` and `a_{i+1 mod n}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    code: GaussCode,
    over: Vec<usize>,
    crossing_of_pass: Vec<usize>,
    arc_of_pass: Vec<usize>,
    under_pos: Vec<usize>,
    over_pos: Vec<usize>,
    name: Option<String>,
}

impl Diagram {
    /// Number of crossings, which equals the number of arcs.
    pub fn n(&self) -> usize {
        self.over.len()
    }

    /// Index of the arc passing over crossing `c_i`.
    pub fn over(&self, i: usize) -> usize {
        self.over[i]
    }

    pub fn over_map(&self) -> &[usize] {
        &self.over
    }

    /// The two under arcs of `c_i`: the one ending there, then the one starting there.
    pub fn under_arcs(&self, i: usize) -> (usize, usize) {
        (i, (i + 1) % self.n())
    }

    pub fn code(&self) -> &GaussCode {
        &self.code
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    /// Crossing index of the pass at position `k` of the canonical code.
    pub fn crossing_of_pass(&self, k: usize) -> usize {
        self.crossing_of_pass[k]
    }

    /// Arc containing the pass at position `k` of the canonical code.
    pub fn arc_of_pass(&self, k: usize) -> usize {
        self.arc_of_pass[k]
    }

    pub fn pass_kind(&self, k: usize) -> PassKind {
        self.code.passes()[k].kind
    }

    /// Code position of the under pass at `c_i`.
    pub fn under_position(&self, i: usize) -> usize {
        self.under_pos[i]
    }

    /// Code position of the over pass at `c_i`.
    pub fn over_position(&self, i: usize) -> usize {
        self.over_pos[i]
    }

    /// The same diagram with the oriented labeling started at arc `a_r`, so
    /// that old `a_{i+r}` and `c_{i+r}` become `a_i` and `c_i`.
    pub fn rotated(&self, r: usize) -> Diagram {
        let r = r % self.n();
        let start = if r == 0 { 0 } else { self.under_pos[r - 1] + 1 };
        let mut d =
            gauss_to_diagram(&self.code.rotated(start)).expect("rotation keeps under passes");
        d.name = self.name.clone();
        d
    }
}

/// Builds the oriented labeling of a Gauss code.
///
/// Trailing over passes after the last under pass belong to the first arc,
/// so the code is rotated to end at its last under pass before indexing.
pub fn gauss_to_diagram(code: &GaussCode) -> Result<Diagram> {
    let last_under = code
        .passes()
        .iter()
        .rposition(|p| p.kind == PassKind::Under)
        .ok_or(KnotIoError::NoUnderPass)?;
    let code = code.rotated(last_under + 1);
    let passes = code.passes();
    let n = code.crossing_count();

    let mut crossing_of_label = vec![usize::MAX; n + 1];
    let mut under_pos = Vec::with_capacity(n);
    let mut arc_of_pass = Vec::with_capacity(passes.len());
    for (k, p) in passes.iter().enumerate() {
        arc_of_pass.push(under_pos.len());
        if p.kind == PassKind::Under {
            crossing_of_label[p.label as usize] = under_pos.len();
            under_pos.push(k);
        }
    }
    if under_pos.len() != n {
        return Err(KnotIoError::LabelCountMismatch(0));
    }
    let crossing_of_pass: Vec<usize> = passes
        .iter()
        .map(|p| crossing_of_label[p.label as usize])
        .collect();
    let mut over_pos = vec![0; n];
    for (k, p) in passes.iter().enumerate() {
        if p.kind == PassKind::Over {
            over_pos[crossing_of_pass[k]] = k;
        }
    }
    let over = over_pos.iter().map(|&k| arc_of_pass[k]).collect();
    Ok(Diagram {
        code,
        over,
        crossing_of_pass,
        arc_of_pass,
        under_pos,
        over_pos,
        name: None,
    })
}

pub fn is_alternating(d: &Diagram) -> bool {
    d.code.is_alternating()
}

/// Mirror image: every crossing switched, relabeled in canonical form.
pub fn mirror(d: &Diagram) -> Result<Diagram> {
    if !is_alternating(d) {
        return Err(KnotIoError::NotAlternating);
    }
    let mut m = gauss_to_diagram(&d.code.flipped())?;
    m.name = d.name.as_ref().map(|s| format!("{s}*"));
    Ok(m)
}

/// Connected sum by concatenating Gauss codes; `d2`'s crossings follow `d1`'s.
pub fn connected_sum(d1: &Diagram, d2: &Diagram) -> Diagram {
    let mut d = gauss_to_diagram(&d1.code.concat(&d2.code)).expect("both codes have under passes");
    d.name = match (d1.name(), d2.name()) {
        (Some(a), Some(b)) => Some(format!("{a}#{b}")),
        _ => None,
    };
    d
}

/// Adjacency lists of the 4-valent projection graph, one entry per edge end.
fn projection_adjacency(d: &Diagram) -> Vec<Vec<usize>> {
    let m = d.code.passes().len();
    let mut adj = vec![Vec::new(); d.n()];
    for k in 0..m {
        let a = d.crossing_of_pass[k];
        let b = d.crossing_of_pass[(k + 1) % m];
        adj[a].push(b);
        adj[b].push(a);
    }
    adj
}

/// Crossings whose removal disconnects the projection graph.
pub fn projection_cut_vertices(d: &Diagram) -> Vec<usize> {
    let adj = projection_adjacency(d);
    let n = d.n();
    (0..n)
        .filter(|&v| {
            let Some(start) = (0..n).find(|&u| u != v) else {
                return false;
            };
            let mut seen = vec![false; n];
            seen[v] = true;
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            let mut reached = 1;
            while let Some(u) = queue.pop_front() {
                for &w in &adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        reached += 1;
                        queue.push_back(w);
                    }
                }
            }
            reached < n - 1
        })
        .collect()
}

/// No kinks and no nugatory crossings (cut vertices of the projection graph).
pub fn is_reduced(d: &Diagram) -> bool {
    let n = d.n();
    let kink = (0..n).any(|i| d.over[i] == i || d.over[i] == (i + 1) % n);
    !kink && projection_cut_vertices(d).is_empty()
}
