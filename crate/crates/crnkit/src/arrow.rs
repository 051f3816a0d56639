//! The arrow category of finite-dimensional vector spaces, restricted to
//! labeled objects.
//!
//! An object is a single linear map `A : ℝ^dom → ℝ^cod` stored with basis
//! labels on both sides; a morphism is a commuting square of linear maps.
//! The stoichiometric functor lands here: a network's matrix becomes an
//! arrow with reaction labels on the domain and species labels on the
//! codomain. Homology of the two-term complex is the kernel (H₁, steady
//! state fluxes) and cokernel (H₀, conserved charges), both functorial.

use crate::crn::{self, Crn, CrnMorphism, EdgeImage};
use crate::linalg::Matrix;
use crate::rational::Rational;
use num_traits::One;
use std::fmt;

/// Errors from arrow construction and morphism plumbing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArrowError {
    LabelCountMismatch { labels: usize, expected: usize, side: &'static str },
    DuplicateLabel(String),
    /// The underlying CRN morphism failed commuting-square validation.
    InvalidMorphism,
    /// The transformation is not natural for the given pair of arrows.
    NotNatural,
}

impl fmt::Display for ArrowError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArrowError::LabelCountMismatch { labels, expected, side } => {
                write!(f, "{side} has {labels} labels, expected {expected}")
            }
            ArrowError::DuplicateLabel(l) => write!(f, "duplicate basis label {l:?}"),
            ArrowError::InvalidMorphism => write!(f, "morphism fails commuting-square validation"),
            ArrowError::NotNatural => write!(f, "transformation is not natural"),
        }
    }
}

impl std::error::Error for ArrowError {}

/// An object of the labeled arrow category: a matrix read as a linear map
/// from the column space (domain) to the row space (codomain).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrowRep {
    matrix: Matrix,
    dom_labels: Vec<String>,
    cod_labels: Vec<String>,
}

impl ArrowRep {
    pub fn new(
        matrix: Matrix,
        dom_labels: Vec<String>,
        cod_labels: Vec<String>,
    ) -> Result<Self, ArrowError> {
        if dom_labels.len() != matrix.cols() {
            return Err(ArrowError::LabelCountMismatch {
                labels: dom_labels.len(),
                expected: matrix.cols(),
                side: "domain",
            });
        }
        if cod_labels.len() != matrix.rows() {
            return Err(ArrowError::LabelCountMismatch {
                labels: cod_labels.len(),
                expected: matrix.rows(),
                side: "codomain",
            });
        }
        for labels in [&dom_labels, &cod_labels] {
            let mut seen = std::collections::BTreeSet::new();
            for l in labels {
                if !seen.insert(l) {
                    return Err(ArrowError::DuplicateLabel(l.clone()));
                }
            }
        }
        Ok(ArrowRep { matrix, dom_labels, cod_labels })
    }

    /// The zero object `0 → 0`.
    pub fn zero_object() -> Self {
        ArrowRep { matrix: Matrix::zeros(0, 0), dom_labels: Vec::new(), cod_labels: Vec::new() }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn dom_labels(&self) -> &[String] {
        &self.dom_labels
    }

    pub fn cod_labels(&self) -> &[String] {
        &self.cod_labels
    }

    pub fn dom_dim(&self) -> usize {
        self.matrix.cols()
    }

    pub fn cod_dim(&self) -> usize {
        self.matrix.rows()
    }
}

/// A morphism of arrows: `alpha` on domains, `beta` on codomains, with
/// `beta·A = A'·alpha`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NatTrans {
    pub alpha: Matrix,
    pub beta: Matrix,
}

impl NatTrans {
    pub fn identity(a: &ArrowRep) -> Self {
        NatTrans { alpha: Matrix::identity(a.dom_dim()), beta: Matrix::identity(a.cod_dim()) }
    }

    /// Componentwise composition `second ∘ first`.
    pub fn compose(second: &NatTrans, first: &NatTrans) -> NatTrans {
        NatTrans { alpha: &second.alpha * &first.alpha, beta: &second.beta * &first.beta }
    }
}

/// Kernel and cokernel bases of a single arrow. The cokernel is represented
/// by the left null space, the canonical complement of the image under the
/// standard inner product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologySummary {
    /// Columns span `ker A`.
    pub h1_basis: Matrix,
    /// Rows `c` with `c·A = 0`, representing `coker A`.
    pub h0_basis: Matrix,
}

impl HomologySummary {
    pub fn dims(&self) -> (usize, usize) {
        (self.h1_basis.cols(), self.h0_basis.rows())
    }
}

/// The stoichiometric arrow of a network: reaction labels on the domain,
/// species labels on the codomain.
pub fn stoich_object(crn: &Crn) -> ArrowRep {
    ArrowRep::new(
        crn.stoich_matrix(),
        crn.reactions().iter().map(|r| r.id().to_string()).collect(),
        crn.species().to_vec(),
    )
    .expect("network labels are unique and sized to the matrix")
}

/// The arrow-category image of a network morphism: `alpha` is the 0/1
/// column map induced by the edge map (zero column for the basepoint) and
/// `beta` is `phi0`. The morphism is validated first; validated morphisms
/// always produce natural squares.
pub fn stoich_morphism(
    morphism: &CrnMorphism,
    from: &Crn,
    to: &Crn,
) -> Result<NatTrans, ArrowError> {
    let report = crn::validate_morphism(morphism, from, to).map_err(|_| ArrowError::InvalidMorphism)?;
    if !report.passes() {
        return Err(ArrowError::InvalidMorphism);
    }
    let mut alpha = Matrix::zeros(to.reactions().len(), from.reactions().len());
    for (j, r) in from.reactions().iter().enumerate() {
        if let Some(EdgeImage::Reaction(id)) = morphism.edge_image(r.id()) {
            let i = to.reaction_index(id).expect("validated image exists");
            alpha.set(i, j, Rational::one());
        }
    }
    let nt = NatTrans { alpha, beta: morphism.phi0.clone() };
    debug_assert!(check_naturality(&nt, &stoich_object(from), &stoich_object(to)));
    Ok(nt)
}

/// Whether `beta·A = A'·alpha` holds entrywise.
pub fn check_naturality(nt: &NatTrans, a: &ArrowRep, a_prime: &ArrowRep) -> bool {
    assert_eq!(nt.alpha.cols(), a.dom_dim(), "alpha does not match dom(A)");
    assert_eq!(nt.alpha.rows(), a_prime.dom_dim(), "alpha does not match dom(A')");
    assert_eq!(nt.beta.cols(), a.cod_dim(), "beta does not match cod(A)");
    assert_eq!(nt.beta.rows(), a_prime.cod_dim(), "beta does not match cod(A')");
    &nt.beta * a.matrix() == a_prime.matrix() * &nt.alpha
}

/// Kernel and cokernel bases of an arrow.
pub fn homology(a: &ArrowRep) -> HomologySummary {
    HomologySummary {
        h1_basis: a.matrix().null_space_basis(),
        h0_basis: a.matrix().left_null_space_basis(),
    }
}

/// The map induced on kernels: `alpha` restricted to `ker A`, expressed in
/// the kernel bases chosen by [`homology`]. Naturality guarantees `alpha`
/// carries `ker A` into `ker A'`.
pub fn induced_h1(nt: &NatTrans, a: &ArrowRep, a_prime: &ArrowRep) -> Result<Matrix, ArrowError> {
    if !check_naturality(nt, a, a_prime) {
        return Err(ArrowError::NotNatural);
    }
    let k = a.matrix().null_space_basis();
    let k_prime = a_prime.matrix().null_space_basis();
    let image = &nt.alpha * &k;
    k_prime.solve_columns(&image).ok_or(ArrowError::NotNatural)
}

/// The map induced on cokernels: each left-null representative of `A` is
/// pushed through `beta` and reduced modulo `im A'`, i.e. decomposed against
/// `[L'ᵀ | A']` where `L'` is the left-null basis of `A'`. The coordinates
/// on the `L'` part are unique because the two spans intersect trivially.
pub fn induced_h0(nt: &NatTrans, a: &ArrowRep, a_prime: &ArrowRep) -> Result<Matrix, ArrowError> {
    if !check_naturality(nt, a, a_prime) {
        return Err(ArrowError::NotNatural);
    }
    let reps = a.matrix().left_null_space_basis().transpose();
    let l_prime = a_prime.matrix().left_null_space_basis();
    let images = &nt.beta * &reps;
    let stacked = l_prime.transpose().hstack(a_prime.matrix());
    let solution = stacked
        .solve_columns(&images)
        .expect("left-null complement and image span the codomain");
    let h0_rows: Vec<usize> = (0..l_prime.rows()).collect();
    let all_cols: Vec<usize> = (0..solution.cols()).collect();
    Ok(solution.submatrix(&h0_rows, &all_cols))
}

/// Block-diagonal direct sum with concatenated labels; colliding labels are
/// disambiguated with primes.
pub fn direct_sum(a: &ArrowRep, b: &ArrowRep) -> ArrowRep {
    let matrix = Matrix::from_blocks(
        a.matrix(),
        &Matrix::zeros(a.cod_dim(), b.dom_dim()),
        &Matrix::zeros(b.cod_dim(), a.dom_dim()),
        b.matrix(),
    );
    let join = |xs: &[String], ys: &[String]| {
        let mut out: Vec<String> = xs.to_vec();
        for y in ys {
            let mut candidate = y.clone();
            while out.contains(&candidate) {
                candidate.push('\'');
            }
            out.push(candidate);
        }
        out
    };
    ArrowRep::new(
        matrix,
        join(a.dom_labels(), b.dom_labels()),
        join(a.cod_labels(), b.cod_labels()),
    )
    .expect("disambiguated labels are unique")
}

/// Isomorphism test via the complete invariant for a single linear map up to
/// change of bases on both sides: domain dimension, codomain dimension and
/// rank.
pub fn are_isomorphic(a: &ArrowRep, b: &ArrowRep) -> bool {
    a.dom_dim() == b.dom_dim()
        && a.cod_dim() == b.cod_dim()
        && a.matrix().rank() == b.matrix().rank()
}
