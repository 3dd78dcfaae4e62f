use super::{is_automorphism, MorphismError, VertexPermutation};
use crate::graph::Graph;

/// The map sending each vertex to its unique farthest vertex, if every
/// vertex has one and the map turns out to be an involutory automorphism.
/// The automorphism property is checked, not assumed.
pub fn antipodal_involution(g: &Graph) -> Result<Option<VertexPermutation>, MorphismError> {
    if !g.is_connected() {
        return Err(MorphismError::Disconnected);
    }
    let mut image = Vec::with_capacity(g.order());
    for v in 0..g.order() {
        let dist = g.distances_from(v);
        let ecc = dist.iter().flatten().max().copied().unwrap_or(0);
        let mut far = (0..g.order()).filter(|&w| dist[w] == Some(ecc));
        match (far.next(), far.next()) {
            (Some(w), None) => image.push(w),
            _ => return Ok(None),
        }
    }
    let Ok(p) = VertexPermutation::new(image) else {
        return Ok(None);
    };
    if !p.is_involution() || !is_automorphism(g, &p)? {
        return Ok(None);
    }
    Ok(Some(p))
}
