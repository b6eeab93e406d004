//! Deterministic fixtures and seeded random generators for property testing.
//!
//! Graph fixtures use 0-based labels; the printed sources use 1-based
//! `v_1..v_n`, so label `v_i` maps to `i - 1`.

use crate::eccmat::IntSymMatrix;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// SplitMix64: the documented pseudo-random source for every generator in
/// this crate, chosen so seeds reproduce bit-for-bit across languages.
///
/// State advance per draw: `state += 0x9e3779b97f4a7c15`, then the output is
/// `z = state; z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9;
/// z = (z ^ (z >> 27)) * 0x94d049bb133111eb; z ^ (z >> 31)`.
/// Bounded draws use plain rejection-free reduction `lo + next() % width`;
/// the ranges here are tiny, so the modulo bias is irrelevant.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform-ish draw from `lo..=hi`.
    pub fn range(&mut self, lo: u64, hi: u64) -> u64 {
        debug_assert!(lo <= hi);
        lo + self.next_u64() % (hi - lo + 1)
    }
}

/// Skeleton shape for the random clique-tree generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    /// Uniform random tree skeleton decoded from a random Pruefer sequence.
    TreeRandom,
    /// Path skeleton: the result is a clique path.
    Path,
    /// Star skeleton: the result is a clique star (diameter 2).
    Star,
}

/// Parameters of the random generator. Identical specs produce identical
/// graphs.
#[derive(Debug, Clone, Copy)]
pub struct GeneratorSpec {
    pub seed: u64,
    /// Inclusive range for the number of blocks.
    pub n_blocks: (usize, usize),
    /// Inclusive range for block sizes (each at least 2).
    pub block_size: (usize, usize),
    pub shape: Shape,
}

/// Spec used for the verification corpus: 4..=8 blocks of size 2..=5 gives
/// orders between 5 and 33, mixing odd and even diameters with clique paths
/// and clique stars.
pub fn corpus_spec(seed: u64) -> GeneratorSpec {
    let shape = match seed % 4 {
        2 => Shape::Path,
        3 => Shape::Star,
        _ => Shape::TreeRandom,
    };
    GeneratorSpec {
        seed,
        n_blocks: (4, 8),
        block_size: (2, 5),
        shape,
    }
}

/// A named fixture: either a graph given by its edge list or a matrix given
/// verbatim.
#[derive(Debug, Clone)]
pub enum Fixture {
    Graph(Graph),
    Matrix(IntSymMatrix),
}

/// All built-in fixture names, in reporting order.
pub const FIXTURE_NAMES: [&str; 7] = [
    "g_fig1",
    "g1",
    "g2",
    "g3",
    "h1_matrix",
    "h2_matrix",
    "triangle_pendants",
];

// Block structure of g1 (11 vertices): {v1,v2}, {v2,v3,v4}, {v2,v5,v6},
// {v2,v7}, {v7,v8,v9,v10}, {v7,v11}.
const G1_EDGES: [(usize, usize); 15] = [
    (0, 1),
    (1, 2),
    (1, 3),
    (2, 3),
    (1, 4),
    (1, 5),
    (4, 5),
    (1, 6),
    (6, 7),
    (6, 8),
    (6, 9),
    (7, 8),
    (7, 9),
    (8, 9),
    (6, 10),
];

// g2 = g1 with the pendant {v7,v11} replaced by the triangle {v2,v7,v11}.
const G2_EDGES: [(usize, usize); 16] = [
    (0, 1),
    (1, 2),
    (1, 3),
    (2, 3),
    (1, 4),
    (1, 5),
    (4, 5),
    (1, 6),
    (1, 10),
    (6, 10),
    (6, 7),
    (6, 8),
    (6, 9),
    (7, 8),
    (7, 9),
    (8, 9),
];

// g_fig1 = g3 (15 vertices): blocks K5{v1..v5}, {v5,v6}, {v6,v7,v8},
// {v6,v9,v10}, {v6,v11}, {v11,v12}, K4{v11,v13,v14,v15}.
const G3_EDGES: [(usize, usize); 25] = [
    (0, 1),
    (0, 2),
    (0, 3),
    (0, 4),
    (1, 2),
    (1, 3),
    (1, 4),
    (2, 3),
    (2, 4),
    (3, 4),
    (4, 5),
    (5, 6),
    (5, 7),
    (6, 7),
    (5, 8),
    (5, 9),
    (8, 9),
    (5, 10),
    (10, 11),
    (10, 12),
    (10, 13),
    (10, 14),
    (12, 13),
    (12, 14),
    (13, 14),
];

const H1_ROWS: [[i64; 9]; 9] = [
    [0, 0, 3, 0, 2, 2, 3, 3, 3],
    [0, 0, 3, 0, 2, 2, 3, 3, 3],
    [3, 3, 0, 2, 0, 2, 3, 3, 3],
    [0, 0, 2, 0, 0, 0, 2, 2, 2],
    [2, 2, 0, 0, 0, 0, 2, 2, 2],
    [2, 2, 2, 0, 0, 0, 0, 0, 0],
    [3, 3, 3, 2, 2, 0, 0, 0, 0],
    [3, 3, 3, 2, 2, 0, 0, 0, 0],
    [3, 3, 3, 2, 2, 0, 0, 0, 0],
];

const H2_ROWS: [[i64; 9]; 9] = [
    [0, 0, 3, 0, 2, 3, 3, 2, 2],
    [0, 0, 3, 0, 2, 3, 3, 2, 2],
    [3, 3, 0, 2, 0, 3, 3, 2, 2],
    [0, 0, 2, 0, 0, 2, 2, 0, 0],
    [2, 2, 0, 0, 0, 2, 2, 0, 0],
    [3, 3, 3, 2, 2, 0, 3, 0, 2],
    [3, 3, 3, 2, 2, 3, 0, 2, 0],
    [2, 2, 2, 0, 0, 0, 2, 0, 0],
    [2, 2, 2, 0, 0, 2, 0, 0, 0],
];

/// Loads a fixture by name (case-insensitive).
pub fn fixture(name: &str) -> Result<Fixture> {
    let graph = |edges: &[(usize, usize)], n: usize| -> Result<Fixture> {
        Ok(Fixture::Graph(Graph::build(n, edges)?))
    };
    match name.to_ascii_lowercase().as_str() {
        "g1" => graph(&G1_EDGES, 11),
        "g2" => graph(&G2_EDGES, 11),
        "g3" | "g_fig1" => graph(&G3_EDGES, 15),
        "triangle_pendants" => graph(&[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)], 6),
        "h1_matrix" => Ok(Fixture::Matrix(
            IntSymMatrix::from_i64_rows(&H1_ROWS.map(Vec::from))
                .expect("fixture matrix is symmetric"),
        )),
        "h2_matrix" => Ok(Fixture::Matrix(
            IntSymMatrix::from_i64_rows(&H2_ROWS.map(Vec::from))
                .expect("fixture matrix is symmetric"),
        )),
        other => Err(Error::UnknownFixture(other.to_string())),
    }
}

/// Convenience accessor for graph fixtures.
pub fn fixture_graph(name: &str) -> Result<Graph> {
    match fixture(name)? {
        Fixture::Graph(g) => Ok(g),
        Fixture::Matrix(_) => Err(Error::UnknownFixture(format!(
            "{name} is a matrix fixture"
        ))),
    }
}

pub fn complete_graph(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParameter("complete graph needs n >= 1".into()));
    }
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::build(n, &edges)
}

fn check_sizes(sizes: &[usize]) -> Result<()> {
    if sizes.len() < 2 {
        return Err(Error::InvalidParameter(
            "need at least two blocks".into(),
        ));
    }
    if sizes.iter().any(|&s| s < 2) {
        return Err(Error::InvalidParameter(
            "every block needs at least two vertices".into(),
        ));
    }
    Ok(())
}

/// Chain of cliques, consecutive ones glued at a shared cut-vertex.
pub fn clique_path(sizes: &[usize]) -> Result<Graph> {
    check_sizes(sizes)?;
    let mut edges = Vec::new();
    let mut next = 0usize;
    let mut entry = 0usize; // vertex shared with the previous block
    for (i, &size) in sizes.iter().enumerate() {
        let mut members = Vec::with_capacity(size);
        if i == 0 {
            members.push(next);
            next += 1;
        } else {
            members.push(entry);
        }
        while members.len() < size {
            members.push(next);
            next += 1;
        }
        for a in 0..size {
            for b in a + 1..size {
                edges.push((members[a], members[b]));
            }
        }
        entry = *members.last().expect("nonempty block");
    }
    Graph::build(next, &edges)
}

/// Cliques all glued at one shared cut-vertex (vertex 0).
pub fn clique_star(sizes: &[usize]) -> Result<Graph> {
    check_sizes(sizes)?;
    let mut edges = Vec::new();
    let mut next = 1usize;
    for &size in sizes {
        let mut members = vec![0usize];
        while members.len() < size {
            members.push(next);
            next += 1;
        }
        for a in 0..size {
            for b in a + 1..size {
                edges.push((members[a], members[b]));
            }
        }
    }
    Graph::build(next, &edges)
}

/// Decodes a Pruefer sequence over labels `0..n` into the `n - 1` edges of
/// a tree on `n` vertices.
fn pruefer_decode(seq: &[u64], n: usize) -> Vec<(usize, usize)> {
    debug_assert_eq!(seq.len() + 2, n);
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s as usize] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf remains");
        edges.push((leaf, s as usize));
        degree[leaf] = 0;
        degree[s as usize] -= 1;
    }
    let mut last: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    debug_assert_eq!(last.len(), 2);
    edges.push((last.remove(0), last.remove(0)));
    edges
}

/// Random member of the supported clique-tree class.
///
/// A tree skeleton is drawn first (shape-dependent); each skeleton edge is
/// then replaced by a clique of random size glued at the edge's endpoints,
/// with fresh labels for the remaining vertices. Every block therefore
/// meets at most two skeleton vertices of degree >= 2, so the result is in
/// the class by construction.
pub fn random_ct_clique_tree(spec: &GeneratorSpec) -> Graph {
    let mut rng = SplitMix64::new(spec.seed);
    let t = rng.range(spec.n_blocks.0 as u64, spec.n_blocks.1 as u64) as usize;
    let skeleton_order = t + 1;
    let mut skeleton: Vec<(usize, usize)> = match spec.shape {
        Shape::Path => (0..t).map(|i| (i, i + 1)).collect(),
        Shape::Star => (1..=t).map(|i| (0, i)).collect(),
        Shape::TreeRandom => {
            if t == 1 {
                vec![(0, 1)]
            } else {
                let seq: Vec<u64> = (0..t - 1)
                    .map(|_| rng.range(0, skeleton_order as u64 - 1))
                    .collect();
                pruefer_decode(&seq, skeleton_order)
            }
        }
    };
    skeleton.sort_unstable();
    let mut edges = Vec::new();
    let mut next = skeleton_order;
    for (a, b) in skeleton {
        let size = rng.range(spec.block_size.0 as u64, spec.block_size.1 as u64) as usize;
        let mut members = vec![a, b];
        while members.len() < size {
            members.push(next);
            next += 1;
        }
        for i in 0..size {
            for j in i + 1..size {
                edges.push((members[i], members[j]));
            }
        }
    }
    Graph::build(next, &edges).expect("generated edges are in range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::{classify, BlockDecomposition};
    use crate::graph::DistanceMatrix;

    #[test]
    fn g3_fixture_shape() {
        let g = fixture_graph("g3").unwrap();
        assert_eq!(g.order(), 15);
        assert_eq!(g.size(), 25);
        let d = DistanceMatrix::all_pairs(&g).unwrap();
        let p = d.eccentricity_profile();
        assert_eq!(p.radius(), 2);
        assert_eq!(p.diameter(), 4);
        assert_eq!(p.center(), &[5]);
        assert_eq!(d.get(0, 11), 4);
    }

    #[test]
    fn g1_fixture_shape() {
        let g = fixture_graph("g1").unwrap();
        assert_eq!((g.order(), g.size()), (11, 15));
        let d = DistanceMatrix::all_pairs(&g).unwrap();
        let p = d.eccentricity_profile();
        assert_eq!((p.radius(), p.diameter()), (2, 3));
        assert_eq!(p.center(), &[1, 6]);
        assert!(d.diametral_pairs().contains(&(0, 7)));
    }

    #[test]
    fn g2_fixture_center() {
        let g = fixture_graph("g2").unwrap();
        let d = DistanceMatrix::all_pairs(&g).unwrap();
        let p = d.eccentricity_profile();
        assert_eq!(p.center(), &[1, 6, 10]);
    }

    #[test]
    fn h1_matrix_first_row() {
        let Fixture::Matrix(m) = fixture("h1_matrix").unwrap() else {
            panic!("h1_matrix is a matrix fixture");
        };
        let row: Vec<i64> = (0..9)
            .map(|j| i64::try_from(m.get(0, j).clone()).unwrap())
            .collect();
        assert_eq!(row, vec![0, 0, 3, 0, 2, 2, 3, 3, 3]);
    }

    #[test]
    fn unknown_fixture_name_is_an_error() {
        assert!(matches!(fixture("nope"), Err(Error::UnknownFixture(_))));
    }

    #[test]
    fn clique_path_of_edges_is_a_path_graph() {
        let g = clique_path(&[2, 2, 2]).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn clique_star_of_two_triangles() {
        let g = clique_star(&[3, 3]).unwrap();
        assert_eq!(g.order(), 5);
        let d = DistanceMatrix::all_pairs(&g).unwrap();
        assert_eq!(d.eccentricity_profile().diameter(), 2);
    }

    #[test]
    fn generator_is_deterministic() {
        let spec = GeneratorSpec {
            seed: 42,
            n_blocks: (6, 6),
            block_size: (2, 4),
            shape: Shape::TreeRandom,
        };
        let a = random_ct_clique_tree(&spec);
        let b = random_ct_clique_tree(&spec);
        assert_eq!(a.to_edge_list_string(), b.to_edge_list_string());
    }

    #[test]
    fn generated_graphs_are_in_the_class() {
        for seed in 0..60 {
            let g = random_ct_clique_tree(&corpus_spec(seed));
            let dec = BlockDecomposition::decompose(&g);
            let d = DistanceMatrix::all_pairs(&g).unwrap();
            let p = d.eccentricity_profile();
            assert!(classify(&g, &dec, &p).in_ct, "seed {seed}");
            assert!(g.order() >= 5 && g.order() <= 40, "seed {seed}");
        }
    }

    #[test]
    fn edge_blocks_make_an_ordinary_tree() {
        let spec = GeneratorSpec {
            seed: 7,
            n_blocks: (5, 5),
            block_size: (2, 2),
            shape: Shape::TreeRandom,
        };
        let g = random_ct_clique_tree(&spec);
        assert_eq!(g.size(), g.order() - 1);
        assert!(g.is_connected());
    }

    #[test]
    fn splitmix_reference_values() {
        // First outputs for seed 0 of the documented state advance.
        let mut rng = SplitMix64::new(0);
        assert_eq!(rng.next_u64(), 0xe220a8397b1dcdaf);
        assert_eq!(rng.next_u64(), 0x6e789e6aa1b965f4);
        assert_eq!(rng.next_u64(), 0x06c45d188009454f);
    }
}
