use crate::chain::CellArray;

/// Partitions the edges of a graph into biconnected blocks (Hopcroft and
/// Tarjan, iterative). Returns the block id of every edge.
pub fn edge_blocks(n_vertices: usize, edges: &CellArray) -> Vec<usize> {
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n_vertices];
    for (e, c) in edges.cells().iter().enumerate() {
        adj[c[0]].push((c[1], e));
        adj[c[1]].push((c[0], e));
    }
    const UNSEEN: usize = usize::MAX;
    let mut disc = vec![UNSEEN; n_vertices];
    let mut low = vec![0; n_vertices];
    let mut block = vec![UNSEEN; edges.len()];
    let mut n_blocks = 0;
    let mut time = 0;
    let mut edge_stack: Vec<usize> = Vec::new();
    // Frame: vertex, edge used to enter it, next neighbour position.
    let mut frames: Vec<(usize, usize, usize)> = Vec::new();

    for root in 0..n_vertices {
        if disc[root] != UNSEEN || adj[root].is_empty() {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        frames.push((root, UNSEEN, 0));
        while let Some(&mut (v, via, ref mut pos)) = frames.last_mut() {
            if *pos < adj[v].len() {
                let (w, e) = adj[v][*pos];
                *pos += 1;
                if e == via {
                    continue;
                }
                if disc[w] == UNSEEN {
                    edge_stack.push(e);
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    frames.push((w, e, 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push(e);
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                frames.pop();
                if let Some(&(u, _, _)) = frames.last() {
                    low[u] = low[u].min(low[v]);
                    if low[v] >= disc[u] {
                        while let Some(f) = edge_stack.pop() {
                            block[f] = n_blocks;
                            if f == via {
                                break;
                            }
                        }
                        n_blocks += 1;
                    }
                }
            }
        }
    }
    block
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_triangles_and_a_bridge() {
        let ev = CellArray::new(
            1,
            vec![
                vec![0, 1],
                vec![1, 2],
                vec![0, 2],
                vec![2, 3],
                vec![3, 4],
                vec![4, 5],
                vec![3, 5],
            ],
        );
        let b = edge_blocks(6, &ev);
        assert_eq!(b[0], b[1]);
        assert_eq!(b[1], b[2]);
        assert_eq!(b[4], b[5]);
        assert_eq!(b[5], b[6]);
        assert_ne!(b[3], b[0]);
        assert_ne!(b[3], b[4]);
        assert_ne!(b[0], b[4]);
    }

    #[test]
    fn bowtie_has_two_blocks() {
        let ev = CellArray::new(
            1,
            vec![vec![0, 1], vec![1, 2], vec![0, 2], vec![2, 3], vec![3, 4], vec![2, 4]],
        );
        let b = edge_blocks(5, &ev);
        assert_eq!(b[0], b[2]);
        assert_eq!(b[3], b[5]);
        assert_ne!(b[0], b[3]);
    }
}
