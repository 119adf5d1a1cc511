use crate::bitset::VertexSet;
use crate::graph::Graph;

/// A clique on exactly `size` vertices, if one exists (ascending order).
pub fn find_clique(g: &Graph, size: usize) -> Option<Vec<usize>> {
    if size == 0 {
        return Some(Vec::new());
    }
    if size > g.order() {
        return None;
    }
    let mut chosen = Vec::with_capacity(size);
    extend(g, &mut chosen, VertexSet::full(g.order()), size).then_some(chosen)
}

fn extend(g: &Graph, chosen: &mut Vec<usize>, cand: VertexSet, size: usize) -> bool {
    if chosen.len() == size {
        return true;
    }
    if chosen.len() + cand.len() < size {
        return false;
    }
    let mut rest = cand;
    while let Some(v) = rest.first() {
        if chosen.len() + rest.len() < size {
            return false;
        }
        rest.remove(v);
        if g.degree(v) + 1 < size {
            continue;
        }
        let mut next = rest.clone();
        next.intersect_with(g.row(v));
        chosen.push(v);
        if extend(g, chosen, next, size) {
            return true;
        }
        chosen.pop();
    }
    false
}
