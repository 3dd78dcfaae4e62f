//! Colour refinement (1-dimensional Weisfeiler-Leman) on edge-labelled graphs.
//!
//! Colours are ranks `0..k`. Refinement only ever splits a cell into
//! consecutive ranks, ordered by label-invariant signatures, so the ordered
//! partition it produces is canonical.

/// Adjacency lists with an edge label per entry (labels are `>= 1`).
pub(crate) type LabeledAdjacency = Vec<Vec<(usize, u8)>>;

/// Refines `colors` to the coarsest equitable partition finer than the input.
/// Input colours may be arbitrary; output colours are dense ranks. Returns
/// the number of cells.
pub(crate) fn refine(adj: &LabeledAdjacency, colors: &mut [u32]) -> usize {
    let n = colors.len();
    if n == 0 {
        return 0;
    }
    let mut offsets = Vec::with_capacity(n + 1);
    let mut sigs: Vec<u64> = Vec::new();
    let mut order: Vec<usize> = (0..n).collect();
    let mut cells = 0;
    loop {
        offsets.clear();
        sigs.clear();
        for nbrs in adj {
            offsets.push(sigs.len());
            let start = sigs.len();
            sigs.extend(
                nbrs.iter()
                    .map(|&(w, l)| ((colors[w] as u64) << 8) | l as u64),
            );
            sigs[start..].sort_unstable();
        }
        offsets.push(sigs.len());
        let sig = |v: usize| &sigs[offsets[v]..offsets[v + 1]];
        order.sort_unstable_by(|&a, &b| colors[a].cmp(&colors[b]).then_with(|| sig(a).cmp(sig(b))));
        let mut next = vec![0u32; n];
        let mut rank = 0u32;
        for i in 1..n {
            let (a, b) = (order[i - 1], order[i]);
            if colors[a] != colors[b] || sig(a) != sig(b) {
                rank += 1;
            }
            next[b] = rank;
        }
        next[order[0]] = 0;
        let count = rank as usize + 1;
        colors.copy_from_slice(&next);
        if count == cells {
            return count;
        }
        cells = count;
    }
}

/// Gives `v` its own cell, placed just before the rest of its old cell.
pub(crate) fn individualize(colors: &mut [u32], v: usize) {
    for c in colors.iter_mut() {
        *c = 2 * *c + 1;
    }
    colors[v] -= 1;
}

/// Moves `v` and `w` (from the same cell) into a shared new cell.
pub(crate) fn individualize_pair(colors: &mut [u32], v: usize, w: usize) {
    for c in colors.iter_mut() {
        *c = 2 * *c + 1;
    }
    colors[v] -= 1;
    colors[w] -= 1;
}

/// The first non-singleton cell (lowest colour), as sorted vertex list.
pub(crate) fn first_nontrivial_cell(colors: &[u32]) -> Option<Vec<usize>> {
    let mut counts = vec![0usize; colors.len()];
    for &c in colors {
        counts[c as usize] += 1;
    }
    let target = counts.iter().position(|&k| k > 1)? as u32;
    Some((0..colors.len()).filter(|&v| colors[v] == target).collect())
}
