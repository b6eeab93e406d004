//! Biconnected decomposition, clique-tree recognition, the associated tree,
//! central blocks and the vertex partitions behind the inertia counts.
//!
//! A clique tree (block graph) is a connected graph whose blocks are all
//! complete. The class handled throughout the crate restricts further to
//! clique trees whose blocks contain at most two cut-vertices; `ClassReport`
//! records membership.

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, EccentricityProfile, Graph};

/// Classification of a block by its number of cut-vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockKind {
    /// Exactly one cut-vertex.
    Leaf,
    /// Exactly two cut-vertices.
    Bridge,
    /// No cut-vertex: the graph is 2-connected or a single block.
    Sole,
    /// Three or more cut-vertices.
    Other,
}

/// Blocks (maximal biconnected vertex sets), cut-vertices and per-block tags.
#[derive(Debug, Clone)]
pub struct BlockDecomposition {
    blocks: Vec<Vec<usize>>,
    cut_vertices: Vec<usize>,
    kinds: Vec<BlockKind>,
}

impl BlockDecomposition {
    /// Lowpoint (depth-first) biconnected-components pass.
    ///
    /// Blocks come out as sorted vertex lists in lexicographic order; an
    /// isolated vertex yields a singleton block so that one-vertex graphs
    /// still decompose.
    pub fn decompose(g: &Graph) -> Self {
        let n = g.order();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut parent = vec![usize::MAX; n];
        let mut is_cut = vec![false; n];
        let mut timer = 0usize;
        let mut edge_stack: Vec<(usize, usize)> = Vec::new();
        let mut blocks: Vec<Vec<usize>> = Vec::new();

        // Iterative DFS; frame = (vertex, index into its adjacency list).
        let mut stack: Vec<(usize, usize)> = Vec::new();
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            if g.degree(root) == 0 {
                blocks.push(vec![root]);
                disc[root] = timer;
                timer += 1;
                continue;
            }
            let mut root_children = 0usize;
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            stack.push((root, 0));
            while let Some(&mut (u, ref mut iu)) = stack.last_mut() {
                if *iu < g.degree(u) {
                    let v = g.neighbors(u)[*iu];
                    *iu += 1;
                    if disc[v] == usize::MAX {
                        parent[v] = u;
                        if u == root {
                            root_children += 1;
                        }
                        edge_stack.push((u, v));
                        disc[v] = timer;
                        low[v] = timer;
                        timer += 1;
                        stack.push((v, 0));
                    } else if v != parent[u] && disc[v] < disc[u] {
                        edge_stack.push((u, v));
                        low[u] = low[u].min(disc[v]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(p, _)) = stack.last() {
                        low[p] = low[p].min(low[u]);
                        if low[u] >= disc[p] {
                            // Pop the block hanging below the edge (p, u).
                            let mut members = Vec::new();
                            while let Some(&(a, b)) = edge_stack.last() {
                                edge_stack.pop();
                                members.push(a);
                                members.push(b);
                                if (a, b) == (p, u) {
                                    break;
                                }
                            }
                            members.sort_unstable();
                            members.dedup();
                            blocks.push(members);
                            if p != root {
                                is_cut[p] = true;
                            }
                        }
                    }
                }
            }
            if root_children >= 2 {
                is_cut[root] = true;
            }
        }

        blocks.sort();
        let cut_vertices: Vec<usize> = (0..n).filter(|&v| is_cut[v]).collect();
        let kinds = blocks
            .iter()
            .map(|b| {
                match b.iter().filter(|&&v| is_cut[v]).count() {
                    0 => BlockKind::Sole,
                    1 => BlockKind::Leaf,
                    2 => BlockKind::Bridge,
                    _ => BlockKind::Other,
                }
            })
            .collect();
        BlockDecomposition {
            blocks,
            cut_vertices,
            kinds,
        }
    }

    /// Blocks as sorted vertex lists, in lexicographic order.
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn cut_vertices(&self) -> &[usize] {
        &self.cut_vertices
    }

    pub fn kind(&self, block: usize) -> BlockKind {
        self.kinds[block]
    }

    pub fn is_cut_vertex(&self, v: usize) -> bool {
        self.cut_vertices.binary_search(&v).is_ok()
    }

    pub fn leaf_block_indices(&self) -> Vec<usize> {
        (0..self.blocks.len())
            .filter(|&i| self.kinds[i] == BlockKind::Leaf)
            .collect()
    }

    /// Index of the unique block containing both `u` and `v`, if any. Two
    /// blocks share at most one vertex, so adjacent vertices pin down one
    /// block.
    pub fn block_containing_pair(&self, u: usize, v: usize) -> Option<usize> {
        self.blocks
            .iter()
            .position(|b| b.binary_search(&u).is_ok() && b.binary_search(&v).is_ok())
    }

    /// True when every block induces a complete subgraph.
    pub fn all_blocks_complete(&self, g: &Graph) -> bool {
        self.blocks.iter().all(|b| {
            b.iter()
                .enumerate()
                .all(|(i, &u)| b[i + 1..].iter().all(|&v| g.has_edge(u, v)))
        })
    }

    /// True when no block has three or more cut-vertices.
    pub fn all_blocks_at_most_two_cuts(&self) -> bool {
        self.kinds.iter().all(|k| *k != BlockKind::Other)
    }
}

/// Parity of the diameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Odd,
    Even,
}

/// Membership report for the clique-tree classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassReport {
    /// Every block induces a complete subgraph.
    pub is_clique_tree: bool,
    /// Clique tree whose blocks all have at most two cut-vertices.
    pub in_ct: bool,
    /// `in_ct` and diameter at least 2.
    pub in_ct_ge2: bool,
    pub diameter_parity: Parity,
    pub num_blocks: usize,
}

/// Computes the class flags. On small graphs (order <= 12) the result is
/// cross-checked against an independent characterization: a graph is a
/// clique tree exactly when it is chordal and has no induced diamond
/// (complete graph on four vertices minus one edge).
pub fn classify(
    g: &Graph,
    dec: &BlockDecomposition,
    profile: &EccentricityProfile,
) -> ClassReport {
    let is_clique_tree = dec.all_blocks_complete(g);
    if g.order() <= 12 {
        let oracle = is_diamond_free_chordal(g);
        assert_eq!(
            is_clique_tree, oracle,
            "block-completeness disagrees with the diamond-free chordal test"
        );
    }
    let in_ct = is_clique_tree && dec.all_blocks_at_most_two_cuts();
    let in_ct_ge2 = in_ct && profile.diameter() >= 2;
    ClassReport {
        is_clique_tree,
        in_ct,
        in_ct_ge2,
        diameter_parity: if profile.diameter() % 2 == 1 {
            Parity::Odd
        } else {
            Parity::Even
        },
        num_blocks: dec.num_blocks(),
    }
}

/// Brute-force oracle: no induced cycle on more than three vertices and no
/// induced diamond. Exponential in the order; callers keep it to n <= 12.
fn is_diamond_free_chordal(g: &Graph) -> bool {
    let n = g.order();
    for mask in 1u32..(1 << n) {
        let verts: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
        let k = verts.len();
        if k < 4 {
            continue;
        }
        let mut degs = vec![0usize; k];
        let mut edge_count = 0usize;
        for i in 0..k {
            for j in i + 1..k {
                if g.has_edge(verts[i], verts[j]) {
                    degs[i] += 1;
                    degs[j] += 1;
                    edge_count += 1;
                }
            }
        }
        if k == 4 && edge_count == 5 {
            return false; // induced diamond
        }
        if edge_count == k && degs.iter().all(|&d| d == 2) && subset_connected(g, &verts) {
            return false; // induced cycle on k >= 4 vertices
        }
    }
    true
}

fn subset_connected(g: &Graph, verts: &[usize]) -> bool {
    let mut seen = vec![false; verts.len()];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut count = 1;
    while let Some(i) = stack.pop() {
        for (j, &v) in verts.iter().enumerate() {
            if !seen[j] && g.has_edge(verts[i], v) {
                seen[j] = true;
                count += 1;
                stack.push(j);
            }
        }
    }
    count == verts.len()
}

/// The induced tree used as the structural skeleton of a clique tree: the
/// cut-vertices plus, in every leaf-block, the noncut-vertex with minimal
/// label. For a complete graph it degenerates to the subgraph on `{0, 1}`.
#[derive(Debug, Clone)]
pub struct AssociatedTree {
    vertices: Vec<usize>,
    tree: Graph,
}

impl AssociatedTree {
    /// Sorted original labels; position `i` is vertex `i` of `tree()`.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn tree(&self) -> &Graph {
        &self.tree
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    /// Tree index of an original label.
    pub fn index_of(&self, original: usize) -> Option<usize> {
        self.vertices.binary_search(&original).ok()
    }

    pub fn label(&self, tree_index: usize) -> usize {
        self.vertices[tree_index]
    }
}

/// Builds the associated tree of a member of the supported class.
pub fn associated_tree(g: &Graph, dec: &BlockDecomposition) -> Result<AssociatedTree> {
    if !dec.all_blocks_complete(g) {
        return Err(Error::NotInCt("a block is not complete"));
    }
    if !dec.all_blocks_at_most_two_cuts() {
        return Err(Error::NotInCt("a block has more than two cut-vertices"));
    }
    let vertices: Vec<usize> = if dec.cut_vertices().is_empty() {
        // Complete graph: two vertices of it induce the tree.
        if g.order() < 2 {
            return Err(Error::OrderTooSmall(g.order()));
        }
        vec![0, 1]
    } else {
        let mut verts: Vec<usize> = dec.cut_vertices().to_vec();
        for i in dec.leaf_block_indices() {
            let chosen = dec.blocks()[i]
                .iter()
                .copied()
                .find(|&v| !dec.is_cut_vertex(v))
                .expect("a leaf-block has a noncut-vertex");
            verts.push(chosen);
        }
        verts.sort_unstable();
        verts.dedup();
        verts
    };
    let tree = g.induced_subgraph(&vertices)?;
    // Structural guarantee for the class: the induced subgraph is a tree.
    assert!(
        tree.is_connected() && tree.size() + 1 == tree.order(),
        "associated subgraph is not a tree"
    );
    Ok(AssociatedTree { vertices, tree })
}

/// Neighbors of the unique center that lie on some diametral path.
///
/// Membership is decided by brute force over all diametral pairs. Requires
/// an even diameter and a unique center.
pub fn diametrally_distinguished(
    d: &DistanceMatrix,
    profile: &EccentricityProfile,
) -> Result<Vec<usize>> {
    if profile.diameter() % 2 == 1 {
        return Err(Error::OddDiameter(profile.diameter()));
    }
    if profile.center().len() != 1 {
        return Err(Error::MultipleCenters(profile.center().len()));
    }
    let z = profile.center()[0];
    let pairs = d.diametral_pairs();
    let out = (0..d.order())
        .filter(|&v| d.get(z, v) == 1)
        .filter(|&v| pairs.iter().any(|&(x, y)| d.on_shortest_path(x, v, y)))
        .collect();
    Ok(out)
}

/// For odd diameter: the unique block containing the two centers of the
/// associated tree. Equal to the center of the graph itself.
pub fn central_block(
    g: &Graph,
    dec: &BlockDecomposition,
    profile: &EccentricityProfile,
) -> Result<Vec<usize>> {
    if profile.diameter() % 2 == 0 {
        return Err(Error::EvenDiameter(profile.diameter()));
    }
    let (z1, z2) = tree_centers_odd(g, dec)?;
    let idx = dec
        .block_containing_pair(z1, z2)
        .expect("adjacent centers share a block");
    Ok(dec.blocks()[idx].clone())
}

/// The two adjacent centers of the associated tree, smaller label first.
fn tree_centers_odd(g: &Graph, dec: &BlockDecomposition) -> Result<(usize, usize)> {
    let tree = associated_tree(g, dec)?;
    let td = DistanceMatrix::all_pairs(tree.tree())?;
    let tp = td.eccentricity_profile();
    let centers: Vec<usize> = tp.center().iter().map(|&i| tree.label(i)).collect();
    if centers.len() != 2 {
        return Err(Error::MultipleCenters(centers.len()));
    }
    Ok((centers[0], centers[1]))
}

/// Connected component of `g` containing `start` after deleting all edges
/// inside `block`.
fn component_without_block_edges(g: &Graph, block: &[usize], start: usize) -> Vec<usize> {
    let in_block = |v: usize| block.binary_search(&v).is_ok();
    let mut seen = vec![false; g.order()];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(u) = stack.pop() {
        for &v in g.neighbors(u) {
            if in_block(u) && in_block(v) {
                continue;
            }
            if !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    (0..g.order()).filter(|&v| seen[v]).collect()
}

/// Five-way partition of the vertex set for odd diameter `2k + 1`:
/// with `z1`, `z2` the centers of the associated tree, `B_C` their common
/// block, and `T_1`, `T_2` the components left after deleting the edges of
/// `B_C`,
///
/// * `w1` — vertices of `T_1` at distance exactly `k` from `z1`,
/// * `w2` — vertices of `T_1` at distance `< k` from `z1` (contains `z1`),
/// * `w3`, `w4` — the mirror sets in `T_2` around `z2`,
/// * `w5` — the block `B_C` minus the two centers.
#[derive(Debug, Clone)]
pub struct OddPartition {
    pub w1: Vec<usize>,
    pub w2: Vec<usize>,
    pub w3: Vec<usize>,
    pub w4: Vec<usize>,
    pub w5: Vec<usize>,
    pub k: u32,
    pub central_block: Vec<usize>,
    pub z1: usize,
    pub z2: usize,
}

pub fn odd_partition(
    g: &Graph,
    dec: &BlockDecomposition,
    d: &DistanceMatrix,
    profile: &EccentricityProfile,
) -> Result<OddPartition> {
    if profile.diameter() % 2 == 0 {
        return Err(Error::EvenDiameter(profile.diameter()));
    }
    let k = (profile.diameter() - 1) / 2;
    let (z1, z2) = tree_centers_odd(g, dec)?;
    let central_block = dec.blocks()[dec
        .block_containing_pair(z1, z2)
        .expect("adjacent centers share a block")]
    .clone();
    let t1 = component_without_block_edges(g, &central_block, z1);
    let t2 = component_without_block_edges(g, &central_block, z2);
    let w1: Vec<usize> = t1.iter().copied().filter(|&u| d.get(u, z1) == k).collect();
    let w2: Vec<usize> = t1.iter().copied().filter(|&u| d.get(u, z1) < k).collect();
    let w3: Vec<usize> = t2.iter().copied().filter(|&u| d.get(u, z2) == k).collect();
    let w4: Vec<usize> = t2.iter().copied().filter(|&u| d.get(u, z2) < k).collect();
    let w5: Vec<usize> = central_block
        .iter()
        .copied()
        .filter(|&v| v != z1 && v != z2)
        .collect();
    let total = w1.len() + w2.len() + w3.len() + w4.len() + w5.len();
    assert_eq!(total, g.order(), "partition must cover the vertex set");
    Ok(OddPartition {
        w1,
        w2,
        w3,
        w4,
        w5,
        k,
        central_block,
        z1,
        z2,
    })
}

/// `2l + 1`-way partition of the vertex set for even diameter `2k >= 4`.
///
/// With `z` the unique center and `w_1 < ... < w_l` the diametrally
/// distinguished vertices, `T_i` is the component containing `w_i` after
/// deleting the edges of the block shared by `z` and `w_i`. Then
/// `parts[i-1]` holds the vertices of `T_i` at distance `k` from `z`,
/// `parts[l+i-1]` those at distance `< k - 1` from `w_i`, and the last part
/// is everything outside every `T_i`.
#[derive(Debug, Clone)]
pub struct EvenPartition {
    pub parts: Vec<Vec<usize>>,
    pub l: usize,
    pub k: u32,
    pub center: usize,
    pub distinguished: Vec<usize>,
}

pub fn even_partition(
    g: &Graph,
    dec: &BlockDecomposition,
    d: &DistanceMatrix,
    profile: &EccentricityProfile,
) -> Result<EvenPartition> {
    let diameter = profile.diameter();
    if diameter % 2 == 1 {
        return Err(Error::OddDiameter(diameter));
    }
    if diameter < 4 {
        return Err(Error::DiameterTooSmall(diameter));
    }
    let k = diameter / 2;
    let z = match profile.center() {
        [z] => *z,
        more => return Err(Error::MultipleCenters(more.len())),
    };
    let distinguished = diametrally_distinguished(d, profile)?;
    let l = distinguished.len();
    assert!(l >= 2, "a diametral path yields two distinguished vertices");
    let mut parts = vec![Vec::new(); 2 * l + 1];
    let mut covered = vec![false; g.order()];
    for (i, &w) in distinguished.iter().enumerate() {
        let idx = dec
            .block_containing_pair(z, w)
            .expect("distinguished vertices neighbor the center");
        let t_i = component_without_block_edges(g, &dec.blocks()[idx], w);
        for &u in &t_i {
            covered[u] = true;
            if d.get(u, z) == k {
                parts[i].push(u);
            } else {
                assert!(d.get(u, w) < k - 1, "component splits into the two bands");
                parts[l + i].push(u);
            }
        }
    }
    parts[2 * l] = (0..g.order()).filter(|&v| !covered[v]).collect();
    Ok(EvenPartition {
        parts,
        l,
        k,
        center: z,
        distinguished,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;

    fn complete(n: usize) -> Graph {
        gen::complete_graph(n).unwrap()
    }

    fn analyze(g: &Graph) -> (BlockDecomposition, DistanceMatrix, EccentricityProfile) {
        let dec = BlockDecomposition::decompose(g);
        let d = DistanceMatrix::all_pairs(g).unwrap();
        let p = d.eccentricity_profile();
        (dec, d, p)
    }

    /// Brute-force cut-vertex oracle: removal disconnects.
    fn brute_force_cut_vertices(g: &Graph) -> Vec<usize> {
        let n = g.order();
        (0..n)
            .filter(|&v| {
                let keep: Vec<usize> = (0..n).filter(|&u| u != v).collect();
                let sub = g.induced_subgraph(&keep).unwrap();
                sub.order() > 0 && !sub.is_connected()
            })
            .collect()
    }

    #[test]
    fn g1_decomposition() {
        let g = gen::fixture_graph("g1").unwrap();
        let (dec, _, _) = analyze(&g);
        assert_eq!(dec.num_blocks(), 6);
        assert_eq!(dec.cut_vertices(), &[1, 6]);
        assert_eq!(dec.cut_vertices(), brute_force_cut_vertices(&g));
        // Maximal 2-connected pieces, enumerated by hand from the fixture.
        let expected: Vec<Vec<usize>> = vec![
            vec![0, 1],
            vec![1, 2, 3],
            vec![1, 4, 5],
            vec![1, 6],
            vec![6, 7, 8, 9],
            vec![6, 10],
        ];
        assert_eq!(dec.blocks(), expected.as_slice());
    }

    #[test]
    fn complete_graph_is_one_sole_block() {
        let (dec, _, _) = analyze(&complete(5));
        assert_eq!(dec.num_blocks(), 1);
        assert!(dec.cut_vertices().is_empty());
        assert_eq!(dec.kind(0), BlockKind::Sole);
    }

    #[test]
    fn p4_blocks_are_edges() {
        let g = Graph::build(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let (dec, _, _) = analyze(&g);
        assert_eq!(dec.num_blocks(), 3);
        assert_eq!(dec.cut_vertices(), &[1, 2]);
        assert_eq!(dec.kind(0), BlockKind::Leaf);
        assert_eq!(dec.kind(1), BlockKind::Bridge);
        assert_eq!(dec.kind(2), BlockKind::Leaf);
    }

    #[test]
    fn triangle_with_pendants_is_clique_tree_outside_class() {
        let g = gen::fixture_graph("triangle_pendants").unwrap();
        let (dec, _, p) = analyze(&g);
        let report = classify(&g, &dec, &p);
        assert!(report.is_clique_tree);
        assert!(!report.in_ct);
    }

    #[test]
    fn four_cycle_is_not_a_clique_tree() {
        let g = Graph::build(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let (dec, _, p) = analyze(&g);
        assert!(!classify(&g, &dec, &p).is_clique_tree);
    }

    #[test]
    fn complete_graphs_and_clique_stars_are_in_class() {
        for g in [complete(4), gen::clique_star(&[3, 3]).unwrap(), gen::clique_star(&[2, 2, 4]).unwrap()] {
            let (dec, _, p) = analyze(&g);
            assert!(classify(&g, &dec, &p).in_ct);
        }
    }

    #[test]
    fn g3_associated_tree_leaves() {
        let g = gen::fixture_graph("g3").unwrap();
        let (dec, _, _) = analyze(&g);
        let t = associated_tree(&g, &dec).unwrap();
        assert_eq!(t.vertices(), &[0, 4, 5, 6, 8, 10, 11, 12]);
        let degree_one: Vec<usize> = (0..t.order())
            .filter(|&i| t.tree().degree(i) == 1)
            .map(|i| t.label(i))
            .collect();
        assert_eq!(degree_one, vec![0, 6, 8, 11, 12]);
        // the tree mirrors the graph's diameter
        let td = DistanceMatrix::all_pairs(t.tree()).unwrap();
        assert_eq!(td.eccentricity_profile().diameter(), 4);
    }

    #[test]
    fn complete_graph_tree_is_k2() {
        let (dec, _, _) = analyze(&complete(6));
        let t = associated_tree(&complete(6), &dec).unwrap();
        assert_eq!(t.vertices(), &[0, 1]);
        assert_eq!(t.tree().size(), 1);
    }

    #[test]
    fn clique_path_tree_is_a_path() {
        let g = gen::clique_path(&[3, 4, 3]).unwrap();
        let (dec, _, _) = analyze(&g);
        let t = associated_tree(&g, &dec).unwrap();
        let tree = t.tree();
        let mut degrees: Vec<usize> = (0..tree.order()).map(|v| tree.degree(v)).collect();
        degrees.sort_unstable();
        assert_eq!(degrees[0], 1);
        assert_eq!(degrees[1], 1);
        assert!(degrees[2..].iter().all(|&d| d == 2));
    }

    #[test]
    fn associated_tree_rejects_non_members() {
        let g = gen::fixture_graph("triangle_pendants").unwrap();
        let (dec, _, _) = analyze(&g);
        assert!(matches!(
            associated_tree(&g, &dec),
            Err(Error::NotInCt(_))
        ));
    }

    #[test]
    fn g3_distinguished_vertices() {
        let g = gen::fixture_graph("g3").unwrap();
        let (_, d, p) = analyze(&g);
        assert_eq!(diametrally_distinguished(&d, &p).unwrap(), vec![4, 10]);
    }

    #[test]
    fn clique_star_distinguishes_every_noncentral_vertex() {
        let g = gen::clique_star(&[3, 4, 2]).unwrap();
        let (_, d, p) = analyze(&g);
        let dist = diametrally_distinguished(&d, &p).unwrap();
        assert_eq!(dist.len(), g.order() - 1);
    }

    #[test]
    fn p5_distinguished_are_the_center_neighbors() {
        let g = Graph::build(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let (_, d, p) = analyze(&g);
        assert_eq!(p.center(), &[2]);
        assert_eq!(diametrally_distinguished(&d, &p).unwrap(), vec![1, 3]);
    }

    #[test]
    fn distinguished_rejects_odd_diameter() {
        let g = Graph::build(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let (_, d, p) = analyze(&g);
        assert!(matches!(
            diametrally_distinguished(&d, &p),
            Err(Error::OddDiameter(3))
        ));
    }

    #[test]
    fn central_blocks_of_the_figure_graphs() {
        let g1 = gen::fixture_graph("g1").unwrap();
        let (dec, _, p) = analyze(&g1);
        assert_eq!(central_block(&g1, &dec, &p).unwrap(), vec![1, 6]);

        let g2 = gen::fixture_graph("g2").unwrap();
        let (dec, _, p) = analyze(&g2);
        let b = central_block(&g2, &dec, &p).unwrap();
        assert_eq!(b, vec![1, 6, 10]);
        assert_eq!(b, p.center()); // odd diameter: the center is the block

        let g3 = gen::fixture_graph("g3").unwrap();
        let (dec, _, p) = analyze(&g3);
        assert!(matches!(
            central_block(&g3, &dec, &p),
            Err(Error::EvenDiameter(4))
        ));
    }

    #[test]
    fn g1_odd_partition() {
        let g = gen::fixture_graph("g1").unwrap();
        let (dec, d, p) = analyze(&g);
        let part = odd_partition(&g, &dec, &d, &p).unwrap();
        assert_eq!(part.w1, vec![0, 2, 3, 4, 5]);
        assert_eq!(part.w2, vec![1]);
        assert_eq!(part.w3, vec![7, 8, 9, 10]);
        assert_eq!(part.w4, vec![6]);
        assert!(part.w5.is_empty());
        assert_eq!(part.k, 1);
    }

    #[test]
    fn g2_odd_partition_has_w5() {
        let g = gen::fixture_graph("g2").unwrap();
        let (dec, d, p) = analyze(&g);
        let part = odd_partition(&g, &dec, &d, &p).unwrap();
        assert_eq!(part.w5, vec![10]);
        assert_eq!(part.w3, vec![7, 8, 9]);
    }

    #[test]
    fn three_triangle_clique_path_partition_covers_everything() {
        let g = gen::clique_path(&[3, 3, 3]).unwrap();
        let (dec, d, p) = analyze(&g);
        assert_eq!(p.diameter(), 3);
        let part = odd_partition(&g, &dec, &d, &p).unwrap();
        let mut all: Vec<usize> = [&part.w1, &part.w2, &part.w3, &part.w4, &part.w5]
            .into_iter()
            .flatten()
            .copied()
            .collect();
        all.sort_unstable();
        assert_eq!(all, (0..7).collect::<Vec<_>>());
    }

    #[test]
    fn g3_even_partition() {
        let g = gen::fixture_graph("g3").unwrap();
        let (dec, d, p) = analyze(&g);
        let part = even_partition(&g, &dec, &d, &p).unwrap();
        assert_eq!(part.l, 2);
        assert_eq!(part.k, 2);
        assert_eq!(part.center, 5);
        assert_eq!(part.parts[0], vec![0, 1, 2, 3]);
        assert_eq!(part.parts[1], vec![11, 12, 13, 14]);
        assert_eq!(part.parts[2], vec![4]);
        assert_eq!(part.parts[3], vec![10]);
        assert_eq!(part.parts[4], vec![5, 6, 7, 8, 9]);
    }

    #[test]
    fn p5_even_partition_has_five_singletons() {
        let g = Graph::build(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let (dec, d, p) = analyze(&g);
        let part = even_partition(&g, &dec, &d, &p).unwrap();
        assert_eq!(part.l, 2);
        assert!(part.parts.iter().all(|p| p.len() == 1));
    }

    #[test]
    fn even_partition_refuses_small_diameter() {
        let g = gen::clique_star(&[3, 3]).unwrap();
        let (dec, d, p) = analyze(&g);
        assert!(matches!(
            even_partition(&g, &dec, &d, &p),
            Err(Error::DiameterTooSmall(2))
        ));
        let g1 = gen::fixture_graph("g1").unwrap();
        let (dec, d, p) = analyze(&g1);
        assert!(matches!(
            even_partition(&g1, &dec, &d, &p),
            Err(Error::OddDiameter(3))
        ));
    }

    #[test]
    fn members_of_the_class_have_two_leaf_blocks() {
        for g in [
            gen::fixture_graph("g1").unwrap(),
            gen::fixture_graph("g2").unwrap(),
            gen::fixture_graph("g3").unwrap(),
            gen::clique_path(&[2, 2, 2]).unwrap(),
        ] {
            let dec = BlockDecomposition::decompose(&g);
            assert!(dec.leaf_block_indices().len() >= 2);
        }
    }
}
