use super::Graph;

/// Biconnected components (blocks) as sorted vertex lists. Bridges are blocks
/// on two vertices; isolated vertices belong to no block. Blocks are ordered
/// by their smallest vertex, then lexicographically.
pub fn blocks(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut timer = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut out = Vec::new();

    for root in g.vertices() {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        // Frames: (vertex, parent, next neighbor index).
        let mut stack = vec![(root, usize::MAX, 0usize)];
        while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
            if *idx < g.degree(v) {
                let w = g.neighbors(v)[*idx];
                *idx += 1;
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[v]);
                    if low[v] >= disc[parent] {
                        let mut block = Vec::new();
                        while let Some((x, y)) = edge_stack.pop() {
                            block.push(x);
                            block.push(y);
                            if (x, y) == (parent, v) {
                                break;
                            }
                        }
                        block.sort_unstable();
                        block.dedup();
                        out.push(block);
                    }
                }
            }
        }
    }
    out.sort();
    out
}

/// Cut vertices in ascending order.
pub fn articulation_points(g: &Graph) -> Vec<usize> {
    let mut count = vec![0usize; g.n()];
    for b in blocks(g) {
        for v in b {
            count[v] += 1;
        }
    }
    g.vertices().filter(|&v| count[v] > 1).collect()
}

#[cfg(test)]
mod tests {
    use super::super::named::*;
    use super::*;

    #[test]
    fn bowtie_blocks() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        assert_eq!(blocks(&g), vec![vec![0, 1, 2], vec![2, 3, 4]]);
        assert_eq!(articulation_points(&g), vec![2]);
    }

    #[test]
    fn path_blocks_are_bridges() {
        assert_eq!(blocks(&path(4)), vec![vec![0, 1], vec![1, 2], vec![2, 3]]);
        assert_eq!(articulation_points(&path(4)), vec![1, 2]);
        assert_eq!(blocks(&cycle(5)), vec![vec![0, 1, 2, 3, 4]]);
        assert!(blocks(&Graph::empty(2)).is_empty());
    }

    #[test]
    fn blocks_match_brute_force_on_tadpole() {
        // Triangle 0-1-2 with a tail 2-3-4 and a pendant 5 on 0.
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (0, 5)]).unwrap();
        assert_eq!(
            blocks(&g),
            vec![vec![0, 1, 2], vec![0, 5], vec![2, 3], vec![3, 4]]
        );
        let brute: Vec<usize> = g
            .vertices()
            .filter(|&v| {
                g.without_vertices(&[v]).unwrap().0.components().len() > g.components().len()
            })
            .collect();
        assert_eq!(articulation_points(&g), brute);
    }
}
