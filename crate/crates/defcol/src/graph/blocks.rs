use super::Graph;

/// Blocks (maximal 2-connected pieces, bridges and isolated vertices) and cut vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Blocks {
    /// Each block sorted; blocks sorted by least vertex, then lexicographically.
    pub blocks: Vec<Vec<usize>>,
    pub cut_vertices: Vec<usize>,
}

impl Blocks {
    /// Blocks containing exactly one cut vertex, or the whole component if it is a block.
    pub fn leaf_blocks(&self) -> Vec<usize> {
        let mut is_cut = std::collections::BTreeSet::new();
        is_cut.extend(self.cut_vertices.iter().copied());
        (0..self.blocks.len())
            .filter(|&i| self.blocks[i].iter().filter(|v| is_cut.contains(v)).count() <= 1)
            .collect()
    }
}

pub fn blocks_and_cutvertices(g: &Graph) -> Blocks {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut is_cut = vec![false; n];
    let mut blocks = Vec::new();
    let mut time = 0;
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        if g.degree(root) == 0 {
            blocks.push(vec![root]);
            continue;
        }
        let mut root_children = 0;
        let mut edge_stack: Vec<(usize, usize)> = Vec::new();
        // (vertex, parent, neighbour list, next index)
        let mut stack: Vec<(usize, usize, Vec<usize>, usize)> =
            vec![(root, usize::MAX, g.neighbours(root).collect(), 0)];
        while let Some(frame) = stack.last_mut() {
            let (v, parent) = (frame.0, frame.1);
            if frame.3 < frame.2.len() {
                let u = frame.2[frame.3];
                frame.3 += 1;
                if disc[u] == usize::MAX {
                    edge_stack.push((v, u));
                    disc[u] = time;
                    low[u] = time;
                    time += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((u, v, g.neighbours(u).collect(), 0));
                } else if u != parent && disc[u] < disc[v] {
                    edge_stack.push((v, u));
                    low[v] = low[v].min(disc[u]);
                }
            } else {
                stack.pop();
                if parent == usize::MAX {
                    continue;
                }
                low[parent] = low[parent].min(low[v]);
                if low[v] >= disc[parent] {
                    if parent != root {
                        is_cut[parent] = true;
                    }
                    let mut block = Vec::new();
                    while let Some((a, b)) = edge_stack.pop() {
                        block.push(a);
                        block.push(b);
                        if (a, b) == (parent, v) {
                            break;
                        }
                    }
                    block.sort_unstable();
                    block.dedup();
                    blocks.push(block);
                }
            }
        }
        if root_children >= 2 {
            is_cut[root] = true;
        }
    }
    blocks.sort();
    Blocks {
        blocks,
        cut_vertices: (0..n).filter(|&v| is_cut[v]).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bowtie_has_one_cut_vertex() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let b = blocks_and_cutvertices(&g);
        assert_eq!(b.blocks, vec![vec![0, 1, 2], vec![2, 3, 4]]);
        assert_eq!(b.cut_vertices, vec![2]);
        assert_eq!(b.leaf_blocks(), vec![0, 1]);
    }

    #[test]
    fn path_blocks_are_edges() {
        let b = blocks_and_cutvertices(&Graph::path(4));
        assert_eq!(b.blocks, vec![vec![0, 1], vec![1, 2], vec![2, 3]]);
        assert_eq!(b.cut_vertices, vec![1, 2]);
    }

    #[test]
    fn isolated_vertex_is_a_block() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        let b = blocks_and_cutvertices(&g);
        assert_eq!(b.blocks, vec![vec![0, 1], vec![2]]);
        assert!(b.cut_vertices.is_empty());
    }
}
