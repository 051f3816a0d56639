//! Block decomposition along a subnetwork and the Schur-complement
//! reduction.
//!
//! A subnetwork splits the stoichiometric matrix into internal/external
//! blocks. When the internal block is invertible, or more generally when the
//! compatibility conditions `ker a11 ⊆ ker a21` and `im a12 ⊆ im a11` hold,
//! the external block can be corrected column by column to the (generalized)
//! Schur complement `σ = a22 − a21·a11⁺·a12`, which is the stoichiometric
//! matrix of the reduced network. The buffering index decides when the
//! reduction preserves kernel and cokernel dimensions.

use crate::arrow::ArrowRep;
use crate::crn::{self, Crn, Subnetwork};
use crate::linalg::Matrix;
use crate::rational::Rational;
use crate::recon;
use std::fmt;

/// The four blocks of a stoichiometric matrix split along a subnetwork,
/// with the label orders (inherited from the host's declaration order) that
/// produced them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub a11: Matrix,
    pub a12: Matrix,
    pub a21: Matrix,
    pub a22: Matrix,
    pub internal_species: Vec<String>,
    pub external_species: Vec<String>,
    pub internal_edges: Vec<String>,
    pub external_edges: Vec<String>,
}

impl BlockDecomposition {
    /// Builds a decomposition from raw blocks with synthetic labels; used
    /// for matrix-level property checks that have no host network.
    pub fn from_blocks(a11: Matrix, a12: Matrix, a21: Matrix, a22: Matrix) -> Self {
        assert_eq!(a11.rows(), a12.rows(), "a11/a12 row mismatch");
        assert_eq!(a21.rows(), a22.rows(), "a21/a22 row mismatch");
        assert_eq!(a11.cols(), a21.cols(), "a11/a21 column mismatch");
        assert_eq!(a12.cols(), a22.cols(), "a12/a22 column mismatch");
        let label = |prefix: &str, n: usize| (0..n).map(|i| format!("{prefix}{i}")).collect();
        BlockDecomposition {
            internal_species: label("iv", a11.rows()),
            external_species: label("xv", a21.rows()),
            internal_edges: label("ie", a11.cols()),
            external_edges: label("xe", a12.cols()),
            a11,
            a12,
            a21,
            a22,
        }
    }

    /// The blocked matrix `[[a11, a12], [a21, a22]]`: a row/column
    /// permutation of the original stoichiometric matrix.
    pub fn assembled(&self) -> Matrix {
        Matrix::from_blocks(&self.a11, &self.a12, &self.a21, &self.a22)
    }
}

/// Failures of the Schur-complement preconditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SchurError {
    /// Neither invertibility of `a11` nor the compatibility pair holds.
    Incompatible { kernel_ok: bool, image_ok: bool },
    /// The L/R congruence needs an invertible internal block.
    SingularInternalBlock,
}

impl fmt::Display for SchurError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SchurError::Incompatible { kernel_ok, image_ok } => write!(
                f,
                "generalized Schur complement undefined: ker(a11) <= ker(a21): {kernel_ok}, \
                 im(a12) <= im(a11): {image_ok}"
            ),
            SchurError::SingularInternalBlock => {
                write!(f, "internal block a11 is singular; no L/R congruence")
            }
        }
    }
}

impl std::error::Error for SchurError {}

/// Why a reduction was refused.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReduceError {
    NotOutputComplete { violations: Vec<(String, String)> },
    NonzeroBufferingIndex { lambda: i64 },
    Incompatible { kernel_ok: bool, image_ok: bool },
}

impl fmt::Display for ReduceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReduceError::NotOutputComplete { violations } => {
                let detail: Vec<String> = violations
                    .iter()
                    .map(|(e, v)| format!("{e} consumes {v}"))
                    .collect();
                write!(f, "subnetwork is not output-complete: {}", detail.join(", "))
            }
            ReduceError::NonzeroBufferingIndex { lambda } => {
                write!(f, "buffering index is {lambda}, expected 0")
            }
            ReduceError::Incompatible { kernel_ok, image_ok } => write!(
                f,
                "compatibility fails: ker(a11) <= ker(a21): {kernel_ok}, \
                 im(a12) <= im(a11): {image_ok}"
            ),
        }
    }
}

impl std::error::Error for ReduceError {}

/// Splits the host's stoichiometric matrix along the subnetwork. Internal
/// orders inherit the host's species/reaction declaration order.
pub fn block_decompose(host: &Crn, sub: &Subnetwork) -> BlockDecomposition {
    let s = host.stoich_matrix();
    let split = |labels: &[String], member: &dyn Fn(&str) -> bool| {
        let mut inside = Vec::new();
        let mut outside = Vec::new();
        for (i, l) in labels.iter().enumerate() {
            if member(l) {
                inside.push((i, l.clone()));
            } else {
                outside.push((i, l.clone()));
            }
        }
        (inside, outside)
    };
    let (int_sp, ext_sp) = split(host.species(), &|l| sub.contains_species(l));
    let reaction_ids: Vec<String> =
        host.reactions().iter().map(|r| r.id().to_string()).collect();
    let (int_ed, ext_ed) = split(&reaction_ids, &|l| sub.contains_edge(l));

    let rows = |v: &[(usize, String)]| v.iter().map(|(i, _)| *i).collect::<Vec<_>>();
    let labels = |v: Vec<(usize, String)>| v.into_iter().map(|(_, l)| l).collect::<Vec<_>>();
    let (ri, re, ci, ce) = (rows(&int_sp), rows(&ext_sp), rows(&int_ed), rows(&ext_ed));
    BlockDecomposition {
        a11: s.submatrix(&ri, &ci),
        a12: s.submatrix(&ri, &ce),
        a21: s.submatrix(&re, &ci),
        a22: s.submatrix(&re, &ce),
        internal_species: labels(int_sp),
        external_species: labels(ext_sp),
        internal_edges: labels(int_ed),
        external_edges: labels(ext_ed),
    }
}

/// The dimension of the subspace of `ker S` supported on the subnetwork's
/// edges: kernel vectors whose coordinates vanish on every external edge.
/// Computed by appending one coordinate-constraint row per external edge.
pub fn kernel_supported_dim(host: &Crn, sub: &Subnetwork) -> usize {
    let s = host.stoich_matrix();
    let mut constraints = Matrix::zeros(0, s.cols());
    for (j, r) in host.reactions().iter().enumerate() {
        if !sub.contains_edge(r.id()) {
            let mut row = Matrix::zeros(1, s.cols());
            row.set(0, j, crate::rational::int(1));
            constraints = constraints.vstack(&row);
        }
    }
    s.vstack(&constraints).null_space_basis().cols()
}

/// The dimension of the coordinate projection of `coker S` (left-null rows)
/// onto the subnetwork's species.
pub fn coker_projection_dim(host: &Crn, sub: &Subnetwork) -> usize {
    let charges = host.stoich_matrix().left_null_space_basis();
    let cols: Vec<usize> = host
        .species()
        .iter()
        .enumerate()
        .filter(|(_, sp)| sub.contains_species(sp))
        .map(|(i, _)| i)
        .collect();
    let rows: Vec<usize> = (0..charges.rows()).collect();
    charges.submatrix(&rows, &cols).rank()
}

/// The buffering index
/// `λ(γ) = −|V_γ| + |E_γ| − dim (ker S)_{supp γ} + dim P_γ(coker S)`.
pub fn buffering_index(host: &Crn, sub: &Subnetwork) -> i64 {
    -(sub.species().len() as i64) + sub.edges().len() as i64
        - kernel_supported_dim(host, sub) as i64
        + coker_projection_dim(host, sub) as i64
}

/// The two compatibility conditions: `ker a11 ⊆ ker a21` and
/// `im a12 ⊆ im a11`.
pub fn check_compatibility(bd: &BlockDecomposition) -> (bool, bool) {
    (bd.a11.kernel_contains(&bd.a21), bd.a11.column_space_contains(&bd.a12))
}

/// The (generalized) Schur complement, computed columnwise: for each
/// external edge column `x`, `σx = a22·x − a21·y` where `y` solves
/// `a11·y = a12·x`. The compatibility conditions make the result
/// independent of the particular solutions; an invertible `a11` implies
/// them.
pub fn schur_complement(bd: &BlockDecomposition) -> Result<Matrix, SchurError> {
    let (kernel_ok, image_ok) = check_compatibility(bd);
    if !(kernel_ok && image_ok) {
        return Err(SchurError::Incompatible { kernel_ok, image_ok });
    }
    let lifts = bd
        .a11
        .solve_columns(&bd.a12)
        .expect("column space containment guarantees solvability");
    Ok(&bd.a22 - &(&bd.a21 * &lifts))
}

/// The unitriangular congruence for an invertible internal block:
/// `L = [[I, −a11⁻¹a12], [0, I]]`, `R = [[I, 0], [−a21·a11⁻¹, I]]` and
/// `M = R·S·L = diag(a11, σ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LrCongruence {
    pub l: Matrix,
    pub r: Matrix,
    pub m: Matrix,
}

pub fn lr_congruence(bd: &BlockDecomposition) -> Result<LrCongruence, SchurError> {
    if !bd.a11.is_square() {
        return Err(SchurError::SingularInternalBlock);
    }
    let inv = bd.a11.inverse().map_err(|_| SchurError::SingularInternalBlock)?;
    let (n_int_e, n_ext_e) = (bd.a11.cols(), bd.a12.cols());
    let (n_int_v, n_ext_v) = (bd.a11.rows(), bd.a21.rows());
    let l = Matrix::from_blocks(
        &Matrix::identity(n_int_e),
        &-&(&inv * &bd.a12),
        &Matrix::zeros(n_ext_e, n_int_e),
        &Matrix::identity(n_ext_e),
    );
    let r = Matrix::from_blocks(
        &Matrix::identity(n_int_v),
        &Matrix::zeros(n_int_v, n_ext_v),
        &-&(&bd.a21 * &inv),
        &Matrix::identity(n_ext_v),
    );
    let m = &(&r * &bd.assembled()) * &l;
    Ok(LrCongruence { l, r, m })
}

/// The dimension bookkeeping behind the reduction theorem: kernel and
/// cokernel dimensions of the full matrix, the internal block `S_γ = a11`,
/// and the reduced matrix `S' = σ`, together with the two equalities
/// `dim ker S' = dim ker S − dim ker S_γ` and
/// `dim coker S' = dim coker S − dim coker S_γ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionTheoremReport {
    pub lambda: i64,
    pub output_complete: bool,
    /// Both preconditions (λ = 0 and output-completeness) hold and σ exists.
    pub applicable: bool,
    pub dims: Option<DimChecks>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimChecks {
    pub ker_s: usize,
    pub ker_s_gamma: usize,
    pub ker_sigma: usize,
    pub coker_s: usize,
    pub coker_s_gamma: usize,
    pub coker_sigma: usize,
}

impl DimChecks {
    pub fn kernel_equality(&self) -> bool {
        self.ker_s >= self.ker_s_gamma && self.ker_sigma == self.ker_s - self.ker_s_gamma
    }

    pub fn cokernel_equality(&self) -> bool {
        self.coker_s >= self.coker_s_gamma
            && self.coker_sigma == self.coker_s - self.coker_s_gamma
    }
}

impl ReductionTheoremReport {
    pub fn passes(&self) -> bool {
        self.applicable
            && self
                .dims
                .as_ref()
                .is_some_and(|d| d.kernel_equality() && d.cokernel_equality())
    }
}

/// Computes the dimension report. When the preconditions fail the report is
/// marked not applicable; the dimensions are still shown whenever σ exists,
/// for diagnosis.
pub fn verify_reduction_theorem(host: &Crn, sub: &Subnetwork) -> ReductionTheoremReport {
    let bd = block_decompose(host, sub);
    let lambda = buffering_index(host, sub);
    let output_complete = crn::is_output_complete(host, sub);
    let sigma = schur_complement(&bd).ok();
    let dims = sigma.map(|sigma| {
        let s = host.stoich_matrix();
        let (rank_s, rank_gamma, rank_sigma) = (s.rank(), bd.a11.rank(), sigma.rank());
        DimChecks {
            ker_s: s.cols() - rank_s,
            ker_s_gamma: bd.a11.cols() - rank_gamma,
            ker_sigma: sigma.cols() - rank_sigma,
            coker_s: s.rows() - rank_s,
            coker_s_gamma: bd.a11.rows() - rank_gamma,
            coker_sigma: sigma.rows() - rank_sigma,
        }
    });
    let applicable = lambda == 0 && output_complete && dims.is_some();
    ReductionTheoremReport { lambda, output_complete, applicable, dims }
}

/// An external edge whose column changed under the reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewiredEdge {
    pub edge: String,
    /// The edge's original column restricted to external species.
    pub old_column: Vec<Rational>,
    /// The edge's column in σ.
    pub new_column: Vec<Rational>,
}

/// Everything the reduction decided and produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionReport {
    pub lambda: i64,
    pub output_complete: bool,
    pub compat_ker: bool,
    pub compat_im: bool,
    pub sigma: Matrix,
    pub dims: DimChecks,
    pub rewired_edges: Vec<RewiredEdge>,
    /// True iff the reduction theorem's preconditions held (false under
    /// `force`).
    pub certified: bool,
    /// Primed labels of the reduced network, in order.
    pub reduced_species: Vec<String>,
    pub reduced_edges: Vec<String>,
}

/// Appends primes to each label, adding more primes on collision with an
/// earlier result, and keeps order.
fn primed_labels(labels: &[String]) -> Vec<String> {
    let mut out: Vec<String> = Vec::with_capacity(labels.len());
    for l in labels {
        let mut candidate = format!("{l}'");
        while out.contains(&candidate) {
            candidate.push('\'');
        }
        out.push(candidate);
    }
    out
}

/// Reduces the host along the subnetwork: requires output-completeness and
/// a zero buffering index, plus the compatibility conditions that make σ
/// well defined. The reduced network is the reconstruction of σ on primed
/// external labels.
pub fn reduce(host: &Crn, sub: &Subnetwork) -> Result<(Crn, ReductionReport), ReduceError> {
    reduce_with(host, sub, false)
}

/// Like [`reduce`], but `force` skips the output-completeness and λ = 0
/// gates (compatibility stays mandatory) and marks the report uncertified.
pub fn reduce_with(
    host: &Crn,
    sub: &Subnetwork,
    force: bool,
) -> Result<(Crn, ReductionReport), ReduceError> {
    let bd = block_decompose(host, sub);
    let lambda = buffering_index(host, sub);
    let violations = crn::output_completeness_violations(host, sub);
    let output_complete = violations.is_empty();
    if !force {
        if !output_complete {
            return Err(ReduceError::NotOutputComplete { violations });
        }
        if lambda != 0 {
            return Err(ReduceError::NonzeroBufferingIndex { lambda });
        }
    }
    let (compat_ker, compat_im) = check_compatibility(&bd);
    let sigma = schur_complement(&bd)
        .map_err(|_| ReduceError::Incompatible { kernel_ok: compat_ker, image_ok: compat_im })?;

    let reduced_species = primed_labels(&bd.external_species);
    let reduced_edges = primed_labels(&bd.external_edges);
    let arrow = ArrowRep::new(sigma.clone(), reduced_edges.clone(), reduced_species.clone())
        .expect("primed labels are unique");
    let reduced = recon::recon_object(&arrow);

    let rewired_edges = bd
        .external_edges
        .iter()
        .enumerate()
        .filter(|(j, _)| bd.a22.column(*j) != sigma.column(*j))
        .map(|(j, edge)| RewiredEdge {
            edge: edge.clone(),
            old_column: bd.a22.column(j),
            new_column: sigma.column(j),
        })
        .collect();

    let s = host.stoich_matrix();
    let (rank_s, rank_gamma, rank_sigma) = (s.rank(), bd.a11.rank(), sigma.rank());
    let report = ReductionReport {
        lambda,
        output_complete,
        compat_ker,
        compat_im,
        dims: DimChecks {
            ker_s: s.cols() - rank_s,
            ker_s_gamma: bd.a11.cols() - rank_gamma,
            ker_sigma: sigma.cols() - rank_sigma,
            coker_s: s.rows() - rank_s,
            coker_s_gamma: bd.a11.rows() - rank_gamma,
            coker_sigma: sigma.rows() - rank_sigma,
        },
        sigma,
        rewired_edges,
        certified: output_complete && lambda == 0,
        reduced_species,
        reduced_edges,
    };
    Ok((reduced, report))
}
