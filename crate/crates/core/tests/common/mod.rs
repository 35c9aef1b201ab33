#![allow(dead_code)]

use agglo_core::Graph;
use rand::Rng;

/// All-pairs hop distances by iterated relaxation over the edge set. Does not
/// use BFS or the adjacency lists of `Graph`.
pub fn relaxation_apsp(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<u64>> {
    const INF: u64 = u64::MAX / 4;
    let mut d = vec![vec![INF; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = 0;
    }
    for &(u, v) in edges {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d
}

pub fn oracle_distance_sum(n: usize, edges: &[(usize, usize)]) -> u64 {
    relaxation_apsp(n, edges).iter().flatten().sum()
}

/// Random connected labelled graph: a random spanning tree plus each other
/// pair independently with probability `p`.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, p: f64) -> (Vec<(usize, usize)>, Graph) {
    let mut edges = Vec::new();
    let mut present = vec![vec![false; n]; n];
    for v in 1..n {
        let u = rng.gen_range(0..v);
        edges.push((u, v));
        present[u][v] = true;
    }
    for u in 0..n {
        for v in u + 1..n {
            if !present[u][v] && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    // Shuffle labels so the tree is not always rooted at 0.
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    let edges: Vec<_> = edges.into_iter().map(|(u, v)| (perm[u], perm[v])).collect();
    let g = Graph::from_edge_list(&edges, Some(n)).unwrap();
    (edges, g)
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edge_list(&edges, Some(n)).unwrap()
}
