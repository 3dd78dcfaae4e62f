//! Isomorphism search on the disjoint union of the two graphs.
//!
//! Refining the union keeps the two partitions comparable: a colour class
//! with different counts on the two sides proves the current branch dead.
//! Branching individualizes one vertex of `g` together with a candidate
//! image in `h` under a shared colour.

use super::refine::{individualize_pair, refine, LabeledAdjacency};
use super::VertexPermutation;
use crate::graph::Graph;

fn union_adjacency(g: &Graph, h: &Graph) -> LabeledAdjacency {
    let n = g.order();
    let mut adj: LabeledAdjacency = (0..n)
        .map(|v| g.neighbors(v).iter().map(|&w| (w, 1)).collect())
        .collect();
    adj.extend((0..n).map(|v| h.neighbors(v).iter().map(|&w| (w + n, 1)).collect()));
    adj
}

fn balanced(colors: &[u32], n: usize) -> bool {
    let mut count = vec![0i64; 2 * n];
    for (i, &c) in colors.iter().enumerate() {
        count[c as usize] += if i < n { 1 } else { -1 };
    }
    count.iter().all(|&k| k == 0)
}

/// An isomorphism `g -> h` if one exists; `None` is an exhaustive proof
/// that the graphs are not isomorphic.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<VertexPermutation> {
    let n = g.order();
    if n != h.order() || g.size() != h.size() {
        return None;
    }
    let mut gd = g.degrees();
    let mut hd = h.degrees();
    gd.sort_unstable();
    hd.sort_unstable();
    if gd != hd {
        return None;
    }
    let adj = union_adjacency(g, h);
    let mut colors = vec![0u32; 2 * n];
    refine(&adj, &mut colors);
    let found = extend(&adj, colors, n)?;
    debug_assert!(is_isomorphism(g, h, &found));
    Some(found)
}

fn extend(adj: &LabeledAdjacency, colors: Vec<u32>, n: usize) -> Option<VertexPermutation> {
    if !balanced(&colors, n) {
        return None;
    }
    let mut size = vec![0usize; 2 * n];
    for &c in &colors {
        size[c as usize] += 1;
    }
    let Some(target) = size.iter().position(|&k| k > 2) else {
        let mut image = vec![0; n];
        let mut by_color = vec![0; 2 * n];
        for v in n..2 * n {
            by_color[colors[v] as usize] = v - n;
        }
        for v in 0..n {
            image[v] = by_color[colors[v] as usize];
        }
        return VertexPermutation::new(image).ok();
    };
    let target = target as u32;
    let x = (0..n)
        .find(|&v| colors[v] == target)
        .expect("balanced cell has a g vertex");
    for y in (n..2 * n).filter(|&v| colors[v] == target) {
        let mut child = colors.clone();
        individualize_pair(&mut child, x, y);
        refine(adj, &mut child);
        if let Some(found) = extend(adj, child, n) {
            return Some(found);
        }
    }
    None
}

pub fn is_isomorphism(g: &Graph, h: &Graph, p: &VertexPermutation) -> bool {
    g.order() == h.order()
        && p.len() == g.order()
        && g.size() == h.size()
        && g.edges().iter().all(|&e| h.contains_edge(p.apply_edge(e)))
}
