//! Executable verification of the structural and spectral facts about
//! eccentricity matrices of clique trees, plus the witness matrices used to
//! certify ranks.
//!
//! Each check reports applicability separately from success, so one pipeline
//! handles complete graphs, clique stars, general class members and
//! out-of-class inputs alike.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::blocks::{
    associated_tree, central_block, classify, even_partition, odd_partition, AssociatedTree,
    BlockDecomposition, BlockKind, ClassReport,
};
use crate::eccmat::{eccentricity_matrix, IntSymMatrix};
use crate::error::{Error, Result};
use crate::exact::{
    char_poly, inertia_exact, is_spectrum_symmetric_exact, IntPolynomial, InertiaTriple,
};
use crate::graph::{DistanceMatrix, EccentricityProfile, Graph};
use crate::spectra::{
    default_zero_tol, inertia_float, interlaces, symmetric_eigenvalues, Spectrum,
    DEFAULT_EIG_TOL,
};

/// Tolerances for the floating-point side of the analysis.
#[derive(Debug, Clone, Copy)]
pub struct AnalysisOptions {
    /// Relative off-diagonal tolerance for the eigensolver.
    pub eig_tol: f64,
    /// Absolute zero-classification tolerance; `None` derives
    /// `1e-7 * max(1, ||A||_F)` from the matrix.
    pub zero_tol: Option<f64>,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions {
            eig_tol: DEFAULT_EIG_TOL,
            zero_tol: None,
        }
    }
}

/// Outcome of a single check: `passed` is meaningful only when the check was
/// applicable; inapplicable checks carry the failed precondition (or a
/// diagnostic) in `witness`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckRecord {
    pub id: &'static str,
    pub applicable: bool,
    pub passed: Option<bool>,
    pub witness: Option<String>,
}

impl CheckRecord {
    fn pass(id: &'static str) -> Self {
        CheckRecord {
            id,
            applicable: true,
            passed: Some(true),
            witness: None,
        }
    }

    fn fail(id: &'static str, witness: String) -> Self {
        CheckRecord {
            id,
            applicable: true,
            passed: Some(false),
            witness: Some(witness),
        }
    }

    fn verdict(id: &'static str, ok: bool, witness: impl FnOnce() -> String) -> Self {
        if ok {
            Self::pass(id)
        } else {
            Self::fail(id, witness())
        }
    }

    fn inapplicable(id: &'static str, why: impl Into<String>) -> Self {
        CheckRecord {
            id,
            applicable: false,
            passed: None,
            witness: Some(why.into()),
        }
    }

    pub fn failed(&self) -> bool {
        self.applicable && self.passed == Some(false)
    }
}

/// Class-membership summary carried in reports. The `Option` fields stay
/// empty for raw matrix inputs, where only the largest entry (the implied
/// diameter) is known.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassSummary {
    pub is_clique_tree: Option<bool>,
    pub in_ct: Option<bool>,
    pub diameter: Option<u64>,
    pub radius: Option<u32>,
    pub center: Option<Vec<usize>>,
}

/// Full analysis of one input: classification, exact characteristic
/// polynomial, inertia, floating spectrum, the symmetry verdict, and the
/// check records.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub graph_id: String,
    pub n: usize,
    pub m: usize,
    pub class: ClassSummary,
    pub char_poly: IntPolynomial,
    pub inertia: InertiaTriple,
    pub spectrum: Spectrum,
    pub symmetric: bool,
    pub checks: Vec<CheckRecord>,
}

impl Analysis {
    pub fn failed_checks(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| c.failed())
    }

    pub fn applicable_count(&self) -> usize {
        self.checks.iter().filter(|c| c.applicable).count()
    }

    pub fn passed_count(&self) -> usize {
        self.checks
            .iter()
            .filter(|c| c.passed == Some(true))
            .count()
    }
}

/// Everything derivable from one connected graph, computed once and shared
/// by the individual checks.
pub struct GraphContext<'a> {
    pub graph: &'a Graph,
    pub dist: DistanceMatrix,
    pub profile: EccentricityProfile,
    pub dec: BlockDecomposition,
    pub class: ClassReport,
    pub ecc: IntSymMatrix,
    pub poly: IntPolynomial,
    pub inertia: InertiaTriple,
    pub spectrum: Spectrum,
    pub zero_tol: f64,
}

impl<'a> GraphContext<'a> {
    pub fn new(graph: &'a Graph, opts: &AnalysisOptions) -> Result<Self> {
        let dist = DistanceMatrix::all_pairs(graph)?;
        let profile = dist.eccentricity_profile();
        let dec = BlockDecomposition::decompose(graph);
        let class = classify(graph, &dec, &profile);
        let ecc = eccentricity_matrix(&dist, &profile);
        let poly = char_poly(&ecc);
        let inertia = inertia_exact(&poly)?;
        let spectrum = symmetric_eigenvalues(&ecc, opts.eig_tol)?;
        let zero_tol = opts.zero_tol.unwrap_or_else(|| default_zero_tol(&ecc));
        Ok(GraphContext {
            graph,
            dist,
            profile,
            dec,
            class,
            ecc,
            poly,
            inertia,
            spectrum,
            zero_tol,
        })
    }

    fn is_complete(&self) -> bool {
        self.profile.diameter() <= 1
    }

    fn tree(&self) -> Result<AssociatedTree> {
        associated_tree(self.graph, &self.dec)
    }
}

/// Center structure: complete graphs are all center; even diameter gives the
/// unique center of the associated tree; odd diameter gives the central
/// block. Compared against the brute-force center from the eccentricities.
pub fn check_center(ctx: &GraphContext) -> CheckRecord {
    const ID: &str = "center";
    if !ctx.class.in_ct {
        return CheckRecord::inapplicable(ID, "not in the supported clique-tree class");
    }
    let actual = ctx.profile.center().to_vec();
    if ctx.is_complete() {
        let all: Vec<usize> = (0..ctx.graph.order()).collect();
        return CheckRecord::verdict(ID, actual == all, || {
            format!("complete graph should have center = all vertices, found {actual:?}")
        });
    }
    if ctx.profile.diameter() % 2 == 0 {
        let tree = match ctx.tree() {
            Ok(t) => t,
            Err(e) => return CheckRecord::inapplicable(ID, e.to_string()),
        };
        let td = DistanceMatrix::all_pairs(tree.tree()).expect("tree is connected");
        let tree_center: Vec<usize> = td
            .eccentricity_profile()
            .center()
            .iter()
            .map(|&i| tree.label(i))
            .collect();
        CheckRecord::verdict(
            ID,
            tree_center.len() == 1 && actual == tree_center,
            || {
                format!(
                    "even diameter expects the unique tree center, found center {actual:?}, \
                     tree center {tree_center:?}"
                )
            },
        )
    } else {
        match central_block(ctx.graph, &ctx.dec, &ctx.profile) {
            Ok(block) => CheckRecord::verdict(ID, actual == block, || {
                format!("odd diameter expects center = central block {block:?}, found {actual:?}")
            }),
            Err(e) => CheckRecord::inapplicable(ID, e.to_string()),
        }
    }
}

/// Inertia of the eccentricity matrix, dispatched on diameter: complete
/// graphs give (1, n-1, 0); odd diameter gives (2, 2, n-4); even diameter
/// at least 4 gives (l, l, n-2l) with l the number of diametrally
/// distinguished vertices; diameter 2 (clique stars) pins rank = t + 1 and
/// one positive eigenvalue, with the full triple cross-checked against the
/// floating oracle.
pub fn check_inertia(ctx: &GraphContext) -> CheckRecord {
    const ID: &str = "inertia";
    if !ctx.class.in_ct {
        return CheckRecord::inapplicable(ID, "not in the supported clique-tree class");
    }
    let n = ctx.graph.order();
    if n < 2 {
        return CheckRecord::inapplicable(ID, "order 1 carries no inertia statement");
    }
    let actual = ctx.inertia;
    let diameter = ctx.profile.diameter();
    if ctx.is_complete() {
        let expected = InertiaTriple::new(1, n - 1, 0);
        return CheckRecord::verdict(ID, actual == expected, || {
            format!("complete graph expects {expected}, found {actual}")
        });
    }
    if diameter == 2 {
        let t = ctx.class.num_blocks;
        let float = inertia_float(&ctx.spectrum, ctx.zero_tol);
        let rank = actual.rank();
        let ok = rank == t + 1 && actual.n_plus == 1 && actual == float;
        return CheckRecord::verdict(ID, ok, || {
            format!(
                "clique star with {t} blocks expects rank {} and one positive eigenvalue, \
                 found {actual} (float oracle {float})",
                t + 1
            )
        });
    }
    if diameter % 2 == 1 {
        let expected = InertiaTriple::new(2, 2, n - 4);
        return CheckRecord::verdict(ID, actual == expected, || {
            format!("odd diameter expects {expected}, found {actual}")
        });
    }
    match even_partition(ctx.graph, &ctx.dec, &ctx.dist, &ctx.profile) {
        Ok(part) => {
            let l = part.l;
            let expected = InertiaTriple::new(l, l, n - 2 * l);
            CheckRecord::verdict(ID, actual == expected, || {
                format!("even diameter with l = {l} expects {expected}, found {actual}")
            })
        }
        Err(e) => CheckRecord::inapplicable(ID, e.to_string()),
    }
}

/// Spectral symmetry about the origin holds exactly for odd diameter with
/// exactly two central vertices. The failing direction is certified by the
/// coefficient mechanism: two consecutive nonzero coefficients in the
/// reduced characteristic polynomial.
pub fn check_symmetry(ctx: &GraphContext) -> CheckRecord {
    const ID: &str = "symmetry";
    if !ctx.class.in_ct {
        return CheckRecord::inapplicable(ID, "not in the supported clique-tree class");
    }
    let n = ctx.graph.order();
    if n < 2 {
        return CheckRecord::inapplicable(ID, "order 1 carries no symmetry statement");
    }
    let symmetric = is_spectrum_symmetric_exact(&ctx.poly).expect("nonzero polynomial");
    let diameter = ctx.profile.diameter();
    let predicate = diameter % 2 == 1 && ctx.profile.center().len() == 2;
    if symmetric != predicate {
        return CheckRecord::fail(
            ID,
            format!(
                "symmetry verdict {symmetric} disagrees with structural predicate \
                 (odd diameter and exactly two centers) = {predicate}"
            ),
        );
    }
    let witness = crate::exact::asymmetry_witness(&ctx.poly);
    // Mechanism assertions, by diameter case.
    if diameter >= 3 && diameter % 2 == 1 {
        let part = match odd_partition(ctx.graph, &ctx.dec, &ctx.dist, &ctx.profile) {
            Ok(p) => p,
            Err(e) => return CheckRecord::inapplicable(ID, e.to_string()),
        };
        if part.w5.is_empty() {
            // Bipartite-like split: spectrum symmetric, five distinct
            // eigenvalues once there are zero eigenvalues and the top one is
            // simple (irreducible nonnegative matrix).
            if n >= 5 {
                let distinct = ctx.spectrum.clustered(1e-6).len();
                if distinct != 5 {
                    return CheckRecord::fail(
                        ID,
                        format!(
                            "two-vertex central block expects exactly five distinct \
                             eigenvalues, found {distinct}"
                        ),
                    );
                }
            }
        } else {
            let reduced = ctx.poly.reduced().expect("nonzero polynomial");
            let b = reduced.coeff(1);
            let k = u64::from(part.k);
            let expected_b = -BigInt::from(
                (part.w1.len() * part.w3.len() * part.w5.len()) as u64
                    * 2
                    * (2 * k + 1)
                    * (k + 1)
                    * (k + 1),
            );
            if witness != Some((2, 3)) || b != expected_b {
                return CheckRecord::fail(
                    ID,
                    format!(
                        "nonempty central-block interior expects witness (2, 3) with odd \
                         coefficient {expected_b}, found witness {witness:?}, coefficient {b}"
                    ),
                );
            }
        }
    } else if diameter == 2 {
        // One positive eigenvalue against at least two negative ones.
        if !(ctx.inertia.n_plus == 1 && ctx.inertia.n_minus >= 2) {
            return CheckRecord::fail(
                ID,
                format!(
                    "clique star expects one positive and >= 2 negative eigenvalues, \
                     found {}",
                    ctx.inertia
                ),
            );
        }
    } else if diameter >= 4 {
        if witness != Some((2, 3)) {
            return CheckRecord::fail(
                ID,
                format!("even diameter expects witness (2, 3), found {witness:?}"),
            );
        }
    }
    CheckRecord::pass(ID)
}

/// Irreducibility of the eccentricity matrix, equivalent to connectivity of
/// its indicator graph. Out-of-class inputs get the value reported as a
/// diagnostic instead of an applicable verdict.
pub fn check_irreducibility(ctx: &GraphContext) -> CheckRecord {
    const ID: &str = "irreducibility";
    if ctx.graph.order() < 2 {
        return CheckRecord::inapplicable(ID, "irreducibility needs order > 1");
    }
    let irreducible = ctx
        .ecc
        .is_irreducible()
        .expect("order checked above");
    if !ctx.class.in_ct {
        return CheckRecord::inapplicable(
            ID,
            format!(
                "not in the supported clique-tree class; is_irreducible = {irreducible} \
                 (diagnostic)"
            ),
        );
    }
    CheckRecord::verdict(ID, irreducible, || {
        "eccentricity matrix of a class member must be irreducible".into()
    })
}

/// One pass over the structural facts relating a class member to its
/// associated tree: at least two leaf-blocks; the tree is a tree with the
/// same diameter; eccentricities agree on tree vertices; the tree's
/// eccentricity matrix is the corresponding principal submatrix; its
/// indicator graph is the induced subgraph of the full one; the two
/// noncut-vertex eccentricity relations; and interlacing of the spectra.
pub fn check_structure(ctx: &GraphContext, opts: &AnalysisOptions) -> CheckRecord {
    const ID: &str = "structure";
    if !ctx.class.in_ct {
        return CheckRecord::inapplicable(ID, "not in the supported clique-tree class");
    }
    if ctx.profile.diameter() < 2 {
        return CheckRecord::inapplicable(ID, "diameter below 2: no associated-tree structure");
    }
    let tree = match ctx.tree() {
        Ok(t) => t,
        Err(e) => return CheckRecord::inapplicable(ID, e.to_string()),
    };
    let td = DistanceMatrix::all_pairs(tree.tree()).expect("tree is connected");
    let tp = td.eccentricity_profile();
    let tree_ecc = eccentricity_matrix(&td, &tp);
    let mut failures: Vec<&'static str> = Vec::new();

    if ctx
        .dec
        .leaf_block_indices()
        .len()
        < 2
    {
        failures.push("at-least-two-leaf-blocks");
    }
    let t = tree.tree();
    if !(t.is_connected() && t.size() + 1 == t.order()) {
        failures.push("associated-subgraph-is-a-tree");
    }
    if tp.diameter() != ctx.profile.diameter() {
        failures.push("tree-diameter-equals-graph-diameter");
    }
    if (0..tree.order()).any(|i| tp.ecc(i) != ctx.profile.ecc(tree.label(i))) {
        failures.push("eccentricities-agree-on-tree-vertices");
    }
    match ctx.ecc.principal_submatrix(tree.vertices()) {
        Ok(sub) if sub == tree_ecc => {}
        _ => failures.push("tree-matrix-is-principal-submatrix"),
    }
    {
        let gamma_full = ctx.ecc.indicator_graph();
        let induced = gamma_full
            .induced_subgraph(tree.vertices())
            .expect("tree vertices are in range");
        if induced != tree_ecc.indicator_graph() {
            failures.push("tree-indicator-graph-is-induced");
        }
    }
    // Noncut-vertex eccentricity relations, block by block.
    for (i, block) in ctx.dec.blocks().iter().enumerate() {
        let cuts: Vec<usize> = block
            .iter()
            .copied()
            .filter(|&v| ctx.dec.is_cut_vertex(v))
            .collect();
        let noncut = block.iter().copied().filter(|&v| !ctx.dec.is_cut_vertex(v));
        match ctx.dec.kind(i) {
            BlockKind::Leaf => {
                let w = cuts[0];
                for u in noncut {
                    if ctx.profile.ecc(u) != ctx.profile.ecc(w) + 1 {
                        failures.push("leaf-block-eccentricity-relation");
                        break;
                    }
                }
            }
            BlockKind::Bridge => {
                let expected = ctx.profile.ecc(cuts[0]).max(ctx.profile.ecc(cuts[1]));
                for u in noncut {
                    if ctx.profile.ecc(u) != expected {
                        failures.push("bridge-block-eccentricity-relation");
                        break;
                    }
                }
            }
            BlockKind::Sole | BlockKind::Other => {}
        }
    }
    match symmetric_eigenvalues(&tree_ecc, opts.eig_tol) {
        Ok(tree_spectrum) => {
            if !interlaces(&tree_spectrum, &ctx.spectrum) {
                failures.push("interlacing");
            }
        }
        Err(_) => failures.push("interlacing"),
    }

    CheckRecord::verdict(ID, failures.is_empty(), || {
        format!("failed sub-checks: {}", failures.join(", "))
    })
}

/// Agreement of the Descartes-based exact inertia with the floating-point
/// eigenvalue signs.
pub fn check_float_agreement(ctx: &GraphContext) -> CheckRecord {
    const ID: &str = "inertia-float-agreement";
    let float = inertia_float(&ctx.spectrum, ctx.zero_tol);
    CheckRecord::verdict(ID, float == ctx.inertia, || {
        format!("exact inertia {} vs float {float}", ctx.inertia)
    })
}

/// Runs every check on a connected graph. Inapplicable checks are recorded,
/// never raised; check order is fixed.
pub fn verify_graph(graph_id: &str, g: &Graph, opts: &AnalysisOptions) -> Result<Analysis> {
    let ctx = GraphContext::new(g, opts)?;
    let checks = vec![
        check_center(&ctx),
        check_inertia(&ctx),
        check_symmetry(&ctx),
        check_irreducibility(&ctx),
        check_structure(&ctx, opts),
        check_float_agreement(&ctx),
    ];
    let symmetric = is_spectrum_symmetric_exact(&ctx.poly)?;
    Ok(Analysis {
        graph_id: graph_id.to_string(),
        n: g.order(),
        m: g.size(),
        class: ClassSummary {
            is_clique_tree: Some(ctx.class.is_clique_tree),
            in_ct: Some(ctx.class.in_ct),
            diameter: Some(u64::from(ctx.profile.diameter())),
            radius: Some(ctx.profile.radius()),
            center: Some(ctx.profile.center().to_vec()),
        },
        char_poly: ctx.poly,
        inertia: ctx.inertia,
        spectrum: ctx.spectrum,
        symmetric,
        checks,
    })
}

/// Expected inertia shape for a given implied diameter, or a description of
/// the deviation. Diameter 2 only pins one positive eigenvalue (the rank
/// statement needs the block count, which a raw matrix does not carry).
pub fn inertia_pattern_deviation(
    n: usize,
    diameter: u64,
    inertia: InertiaTriple,
) -> Option<String> {
    match diameter {
        0 => None,
        1 => {
            let expected = InertiaTriple::new(1, n - 1, 0);
            (inertia != expected)
                .then(|| format!("diameter 1 expects inertia {expected}, found {inertia}"))
        }
        2 => (inertia.n_plus != 1).then(|| {
            format!(
                "diameter 2 expects exactly one positive eigenvalue, found {}",
                inertia.n_plus
            )
        }),
        d if d % 2 == 1 => {
            let expected = InertiaTriple::new(2, 2, n.saturating_sub(4));
            (inertia != expected)
                .then(|| format!("odd diameter {d} expects inertia {expected}, found {inertia}"))
        }
        d => (inertia.n_plus != inertia.n_minus).then(|| {
            format!(
                "even diameter {d} expects as many positive as negative eigenvalues, \
                 found {inertia}"
            )
        }),
    }
}

/// Analysis of a raw symmetric matrix: exact polynomial, inertia, spectrum,
/// symmetry, plus a diagnostic comparing the inertia against the clique-tree
/// patterns for the implied diameter (the largest entry).
pub fn verify_matrix(graph_id: &str, m: &IntSymMatrix, opts: &AnalysisOptions) -> Result<Analysis> {
    let poly = char_poly(m);
    let inertia = inertia_exact(&poly)?;
    let spectrum = symmetric_eigenvalues(m, opts.eig_tol)?;
    let zero_tol = opts.zero_tol.unwrap_or_else(|| default_zero_tol(m));
    let symmetric = is_spectrum_symmetric_exact(&poly)?;
    let indicator = m.indicator_graph();

    let implied_diameter = if m.is_nonnegative() {
        m.max_entry().to_u64()
    } else {
        None
    };
    let pattern = match implied_diameter {
        Some(d) => match inertia_pattern_deviation(m.order(), d, inertia) {
            Some(dev) => format!("outside the clique-tree inertia patterns: {dev}"),
            None => format!(
                "consistent with the clique-tree inertia patterns for implied diameter {d}"
            ),
        },
        None => "no implied diameter: matrix entries are not all small nonnegative".into(),
    };
    let float = inertia_float(&spectrum, zero_tol);
    let checks = vec![
        CheckRecord::inapplicable("ct-inertia-pattern", pattern),
        CheckRecord::verdict("inertia-float-agreement", float == inertia, || {
            format!("exact inertia {inertia} vs float {float}")
        }),
    ];
    Ok(Analysis {
        graph_id: graph_id.to_string(),
        n: m.order(),
        m: indicator.size(),
        class: ClassSummary {
            is_clique_tree: None,
            in_ct: None,
            diameter: implied_diameter,
            radius: None,
            center: None,
        },
        char_poly: poly,
        inertia,
        spectrum,
        symmetric,
        checks,
    })
}

/// 4x4 rank certificate for odd diameter `2k + 1`: the principal submatrix
/// on one vertex from each of the four outer partition classes.
pub fn odd_rank_witness(k: usize) -> Result<IntSymMatrix> {
    if k < 1 {
        return Err(Error::KOutOfRange(k));
    }
    let a = (2 * k + 1) as i64;
    let b = (k + 1) as i64;
    IntSymMatrix::from_i64_rows(&[
        vec![0, a, 0, b],
        vec![a, 0, b, 0],
        vec![0, b, 0, 0],
        vec![b, 0, 0, 0],
    ])
}

/// Closed-form spectrum of `odd_rank_witness(k)`:
/// `{±(q + 2k + 1)/2, ±(q - 2k - 1)/2}` with `q = sqrt(5 + 12k + 8k^2)`.
pub fn odd_rank_witness_spectrum(k: usize) -> Result<Spectrum> {
    if k < 1 {
        return Err(Error::KOutOfRange(k));
    }
    let kf = k as f64;
    let q = (5.0 + 12.0 * kf + 8.0 * kf * kf).sqrt();
    let big = (q + 2.0 * kf + 1.0) / 2.0;
    let small = (q - 2.0 * kf - 1.0) / 2.0;
    Ok(Spectrum::from_sorted(vec![big, small, -small, -big]))
}

/// `2l x 2l` rank certificate for even diameter `2k`:
/// `[[2k (J - I), (2k - 1)(J - I)], [(2k - 1)(J - I), O]]` over `l x l`
/// blocks. Its inertia is `(l, l, 0)` for `l >= 2`; for `l = 1` it
/// degenerates to the zero matrix.
pub fn even_rank_witness(l: usize, k: usize) -> Result<IntSymMatrix> {
    if l < 1 {
        return Err(Error::InvalidParameter(format!(
            "block dimension l must be at least 1, got {l}"
        )));
    }
    if k < 1 {
        return Err(Error::InvalidParameter(format!(
            "parameter k must be at least 1, got {k}"
        )));
    }
    let mut m = IntSymMatrix::zeros(2 * l);
    for i in 0..l {
        for j in 0..l {
            if i == j {
                continue;
            }
            m.set(i, j, BigInt::from(2 * k as u64));
            m.set(i, l + j, BigInt::from((2 * k - 1) as u64));
        }
    }
    Ok(m)
}
