use crate::graph::Graph;

/// Blocks (maximal 2-connected subgraphs, bridges, isolated vertices) and cut vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Each block sorted; blocks ordered by their smallest vertex, then size.
    pub blocks: Vec<Vec<usize>>,
    pub cut_vertices: Vec<usize>,
}

pub fn blocks(g: &Graph) -> BlockDecomposition {
    let n = g.order();
    let mut tin = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut is_cut = vec![false; n];
    let mut out = Vec::new();
    let mut timer = 0;
    // Iterative Hopcroft–Tarjan on a vertex stack.
    for root in 0..n {
        if tin[root] != usize::MAX {
            continue;
        }
        if g.degree(root) == 0 {
            tin[root] = timer;
            timer += 1;
            out.push(vec![root]);
            continue;
        }
        let mut vstack: Vec<usize> = Vec::new();
        // (vertex, parent, neighbour iterator position)
        let mut call: Vec<(usize, usize, Vec<usize>, usize)> = Vec::new();
        tin[root] = timer;
        low[root] = timer;
        timer += 1;
        vstack.push(root);
        call.push((root, usize::MAX, g.neighbors(root).collect(), 0));
        let mut root_children = 0;
        while let Some(frame) = call.last_mut() {
            let (u, parent) = (frame.0, frame.1);
            if frame.3 < frame.2.len() {
                let w = frame.2[frame.3];
                frame.3 += 1;
                if tin[w] == usize::MAX {
                    tin[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    vstack.push(w);
                    if u == root {
                        root_children += 1;
                    }
                    call.push((w, u, g.neighbors(w).collect(), 0));
                } else if w != parent {
                    low[u] = low[u].min(tin[w]);
                }
            } else {
                call.pop();
                if parent == usize::MAX {
                    continue;
                }
                low[parent] = low[parent].min(low[u]);
                if low[u] >= tin[parent] {
                    if parent != root {
                        is_cut[parent] = true;
                    }
                    let mut block = Vec::new();
                    while let Some(x) = vstack.pop() {
                        block.push(x);
                        if x == u {
                            break;
                        }
                    }
                    block.push(parent);
                    block.sort_unstable();
                    out.push(block);
                }
            }
        }
        if root_children >= 2 {
            is_cut[root] = true;
        }
    }
    out.sort_by(|a, b| a[0].cmp(&b[0]).then(a.len().cmp(&b.len())).then(a.cmp(b)));
    BlockDecomposition {
        blocks: out,
        cut_vertices: (0..n).filter(|&v| is_cut[v]).collect(),
    }
}

/// `n >= 3`, connected, and no cut vertex.
pub fn is_two_connected(g: &Graph) -> bool {
    g.order() >= 3 && g.is_connected() && blocks(g).cut_vertices.is_empty()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bipartiteness {
    /// Two colour classes; the first holds every component's lowest vertex.
    Bipartite { left: Vec<usize>, right: Vec<usize> },
    /// An odd cycle, in cycle order.
    OddCycle(Vec<usize>),
}

pub fn is_bipartite(g: &Graph) -> Bipartiteness {
    let n = g.order();
    let mut side = vec![u8::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for s in 0..n {
        if side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for w in g.neighbors(u) {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[u];
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    queue.push_back(w);
                } else if side[w] == side[u] {
                    return Bipartiteness::OddCycle(odd_cycle(u, w, &parent, &depth));
                }
            }
        }
    }
    let (left, right) = (0..n).partition(|&v| side[v] == 0);
    Bipartiteness::Bipartite { left, right }
}

fn odd_cycle(mut a: usize, mut b: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    // a and b are adjacent with equal BFS parity; join their tree paths.
    let mut up_a = vec![a];
    let mut up_b = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        up_a.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        up_b.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        up_a.push(a);
        up_b.push(b);
    }
    up_b.pop();
    up_b.reverse();
    up_a.extend(up_b);
    up_a
}
