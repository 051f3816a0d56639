//! Reconstruction of networks from labeled arrows, and the hom-set
//! bijection against the stoichiometric functor.
//!
//! `recon_object` splits each matrix column into its negative part (inputs)
//! and positive part (outputs), so the reconstructed network's
//! stoichiometric matrix is exactly the input matrix. Morphisms on the
//! arrow side are *restricted*: stored as the underlying set maps whose
//! pushforwards must form a natural square, which keeps membership
//! decidable at the type level. The species-side map is total; only the
//! edge side is pointed.

use crate::arrow::{check_naturality, stoich_object, ArrowRep, NatTrans};
use crate::crn::{self, Crn, CrnMorphism, EdgeImage, Reaction};
use crate::linalg::Matrix;
use crate::rational::Rational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Errors from restricted morphisms and the adjunction plumbing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReconError {
    /// A set map references a label the arrow does not carry.
    UnknownLabel(String),
    /// A set map misses a required domain label.
    IncompleteMap(String),
    /// The pushforward square does not commute.
    NotNatural,
    /// A matrix that is not the pushforward of any set maps was offered
    /// where a restricted morphism is required.
    NotAPushforward,
    /// The natural square does not yield a valid network morphism; the
    /// hom-set bijection does not cover this instance.
    NotACrnMorphism,
    /// Enumeration would exceed the configured candidate bound.
    BoundExceeded { candidates: usize, bound: usize },
}

impl fmt::Display for ReconError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReconError::UnknownLabel(l) => write!(f, "unknown basis label {l:?}"),
            ReconError::IncompleteMap(l) => write!(f, "set map misses label {l:?}"),
            ReconError::NotNatural => write!(f, "pushforward square does not commute"),
            ReconError::NotAPushforward => {
                write!(f, "linear map is not the pushforward of a set map")
            }
            ReconError::NotACrnMorphism => {
                write!(f, "natural square fails network-morphism validation")
            }
            ReconError::BoundExceeded { candidates, bound } => {
                write!(f, "{candidates} candidate set maps exceed the bound {bound}")
            }
        }
    }
}

impl std::error::Error for ReconError {}

/// A restricted arrow morphism: set maps on the chosen bases. The edge side
/// may hit the basepoint (pushing forward to the zero vector); the species
/// side is total.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct RestrictedNatTrans {
    pub edge_map: BTreeMap<String, EdgeImage>,
    pub species_map: BTreeMap<String, String>,
}

impl RestrictedNatTrans {
    pub fn identity(a: &ArrowRep) -> Self {
        RestrictedNatTrans {
            edge_map: a
                .dom_labels()
                .iter()
                .map(|l| (l.clone(), EdgeImage::Reaction(l.clone())))
                .collect(),
            species_map: a.cod_labels().iter().map(|l| (l.clone(), l.clone())).collect(),
        }
    }

    /// Linearizes the set maps into pushforward matrices for the given pair
    /// of arrows.
    pub fn to_nat_trans(&self, a: &ArrowRep, a_prime: &ArrowRep) -> Result<NatTrans, ReconError> {
        let mut alpha = Matrix::zeros(a_prime.dom_dim(), a.dom_dim());
        for (j, label) in a.dom_labels().iter().enumerate() {
            match self.edge_map.get(label) {
                None => return Err(ReconError::IncompleteMap(label.clone())),
                Some(EdgeImage::Basepoint) => {}
                Some(EdgeImage::Reaction(img)) => {
                    let i = a_prime
                        .dom_labels()
                        .iter()
                        .position(|l| l == img)
                        .ok_or_else(|| ReconError::UnknownLabel(img.clone()))?;
                    alpha.set(i, j, Rational::one());
                }
            }
        }
        let mut beta = Matrix::zeros(a_prime.cod_dim(), a.cod_dim());
        for (j, label) in a.cod_labels().iter().enumerate() {
            let img = self
                .species_map
                .get(label)
                .ok_or_else(|| ReconError::IncompleteMap(label.clone()))?;
            let i = a_prime
                .cod_labels()
                .iter()
                .position(|l| l == img)
                .ok_or_else(|| ReconError::UnknownLabel(img.clone()))?;
            beta.set(i, j, Rational::one());
        }
        Ok(NatTrans { alpha, beta })
    }

    /// Whether the pushforward square commutes for the given arrows.
    pub fn is_natural(&self, a: &ArrowRep, a_prime: &ArrowRep) -> Result<bool, ReconError> {
        let nt = self.to_nat_trans(a, a_prime)?;
        Ok(check_naturality(&nt, a, a_prime))
    }

    /// Composition of restricted morphisms: set maps compose (through the
    /// basepoint on the edge side), and the pushforward of a composite is
    /// the composite of pushforwards.
    pub fn compose(
        second: &RestrictedNatTrans,
        first: &RestrictedNatTrans,
    ) -> Result<RestrictedNatTrans, ReconError> {
        let mut edge_map = BTreeMap::new();
        for (label, image) in &first.edge_map {
            let composed = match image {
                EdgeImage::Basepoint => EdgeImage::Basepoint,
                EdgeImage::Reaction(mid) => second
                    .edge_map
                    .get(mid)
                    .cloned()
                    .ok_or_else(|| ReconError::IncompleteMap(mid.clone()))?,
            };
            edge_map.insert(label.clone(), composed);
        }
        let mut species_map = BTreeMap::new();
        for (label, mid) in &first.species_map {
            let image = second
                .species_map
                .get(mid)
                .cloned()
                .ok_or_else(|| ReconError::IncompleteMap(mid.clone()))?;
            species_map.insert(label.clone(), image);
        }
        Ok(RestrictedNatTrans { edge_map, species_map })
    }
}

/// The reconstructed network of an arrow: species are the codomain labels,
/// reactions the domain labels, and each column contributes its negative
/// part as inputs and its positive part as outputs, so
/// `stoich_matrix(recon_object(A)) = A` exactly.
pub fn recon_object(a: &ArrowRep) -> Crn {
    let reactions = a
        .dom_labels()
        .iter()
        .enumerate()
        .map(|(j, id)| {
            let mut inputs = Vec::new();
            let mut outputs = Vec::new();
            for (i, species) in a.cod_labels().iter().enumerate() {
                let entry = a.matrix().get(i, j);
                if entry < &Rational::zero() {
                    inputs.push((species.clone(), -entry.clone()));
                } else if entry > &Rational::zero() {
                    outputs.push((species.clone(), entry.clone()));
                }
            }
            Reaction::new(id.clone(), inputs, outputs)
        })
        .collect();
    Crn::new(a.cod_labels().to_vec(), reactions)
        .expect("arrow labels are unique by construction")
}

/// The network morphism reconstructed from a restricted arrow morphism; the
/// square must commute.
pub fn recon_morphism(
    nt: &RestrictedNatTrans,
    a: &ArrowRep,
    a_prime: &ArrowRep,
) -> Result<CrnMorphism, ReconError> {
    let linear = nt.to_nat_trans(a, a_prime)?;
    if !check_naturality(&linear, a, a_prime) {
        return Err(ReconError::NotNatural);
    }
    let morphism = CrnMorphism::new(linear.beta, nt.edge_map.clone());
    let report = crn::validate_morphism(&morphism, &recon_object(a), &recon_object(a_prime))
        .map_err(|_| ReconError::NotACrnMorphism)?;
    if !report.passes() {
        return Err(ReconError::NotACrnMorphism);
    }
    Ok(morphism)
}

/// One direction of the hom-set bijection: a restricted morphism
/// `Stoich(Γ) ⇒ A` becomes the network morphism `Γ → Recon(A)` carried by
/// the same set maps. The result is validated; instances where the natural
/// square fails to be a network morphism are reported as errors rather than
/// silently accepted.
pub fn adjunction_phi(
    nt: &RestrictedNatTrans,
    network: &Crn,
    a: &ArrowRep,
) -> Result<CrnMorphism, ReconError> {
    let source = stoich_object(network);
    let linear = nt.to_nat_trans(&source, a)?;
    if !check_naturality(&linear, &source, a) {
        return Err(ReconError::NotNatural);
    }
    let morphism = CrnMorphism::new(linear.beta, nt.edge_map.clone());
    let report = crn::validate_morphism(&morphism, network, &recon_object(a))
        .map_err(|_| ReconError::NotACrnMorphism)?;
    if !report.passes() {
        return Err(ReconError::NotACrnMorphism);
    }
    Ok(morphism)
}

/// The other direction: a network morphism `Γ → Recon(A)` whose linear part
/// is a pushforward yields the restricted morphism `Stoich(Γ) ⇒ A` with the
/// same underlying set maps.
pub fn adjunction_psi(
    morphism: &CrnMorphism,
    network: &Crn,
    a: &ArrowRep,
) -> Result<RestrictedNatTrans, ReconError> {
    let report = crn::validate_morphism(morphism, network, &recon_object(a))
        .map_err(|_| ReconError::NotACrnMorphism)?;
    if !report.passes() {
        return Err(ReconError::NotACrnMorphism);
    }
    let species_map = extract_set_map(&morphism.phi0, network.species(), a.cod_labels())
        .ok_or(ReconError::NotAPushforward)?;
    let nt = RestrictedNatTrans { edge_map: morphism.phi1.clone(), species_map };
    let source = stoich_object(network);
    if !nt.is_natural(&source, a)? {
        return Err(ReconError::NotNatural);
    }
    Ok(nt)
}

/// Reads a total set map out of a 0/1 matrix with exactly one 1 per column,
/// or `None` if the matrix is not of that shape.
fn extract_set_map(
    matrix: &Matrix,
    dom_labels: &[String],
    cod_labels: &[String],
) -> Option<BTreeMap<String, String>> {
    let mut map = BTreeMap::new();
    for (j, label) in dom_labels.iter().enumerate() {
        let mut hit = None;
        for i in 0..matrix.rows() {
            let entry = matrix.get(i, j);
            if entry.is_zero() {
                continue;
            }
            if !entry.is_one() || hit.is_some() {
                return None;
            }
            hit = Some(i);
        }
        map.insert(label.clone(), cod_labels[hit?].clone());
    }
    Some(map)
}

/// Enumerates every restricted morphism `A ⇒ A'`: all set-map pairs whose
/// pushforwards satisfy the natural square, in a deterministic mixed-radix
/// order. The candidate space has
/// `(dom(A')+1)^dom(A) · cod(A')^cod(A)` elements and must stay within
/// `bound`.
pub fn enumerate_restricted_homs(
    a: &ArrowRep,
    a_prime: &ArrowRep,
    bound: usize,
) -> Result<Vec<RestrictedNatTrans>, ReconError> {
    let edge_choices = a_prime.dom_dim() + 1;
    let species_choices = a_prime.cod_dim();
    let candidates = edge_choices
        .checked_pow(a.dom_dim() as u32)
        .and_then(|e| {
            species_choices
                .checked_pow(a.cod_dim() as u32)
                .map(|s| e.saturating_mul(s))
        })
        .unwrap_or(usize::MAX);
    if candidates > bound {
        return Err(ReconError::BoundExceeded { candidates, bound });
    }
    if species_choices == 0 && a.cod_dim() > 0 {
        return Ok(Vec::new());
    }

    let mut result = Vec::new();
    let mut edge_digits = vec![0usize; a.dom_dim()];
    loop {
        let edge_map: BTreeMap<String, EdgeImage> = a
            .dom_labels()
            .iter()
            .zip(&edge_digits)
            .map(|(l, &d)| {
                let image = if d < a_prime.dom_dim() {
                    EdgeImage::Reaction(a_prime.dom_labels()[d].clone())
                } else {
                    EdgeImage::Basepoint
                };
                (l.clone(), image)
            })
            .collect();

        let mut species_digits = vec![0usize; a.cod_dim()];
        loop {
            let species_map: BTreeMap<String, String> = a
                .cod_labels()
                .iter()
                .zip(&species_digits)
                .map(|(l, &d)| (l.clone(), a_prime.cod_labels()[d].clone()))
                .collect();
            let nt = RestrictedNatTrans { edge_map: edge_map.clone(), species_map };
            if nt.is_natural(a, a_prime)? {
                result.push(nt);
            }
            if !increment(&mut species_digits, species_choices) {
                break;
            }
        }
        if !increment(&mut edge_digits, edge_choices) {
            break;
        }
    }
    Ok(result)
}

/// Mixed-radix increment; returns false on wraparound (enumeration done).
fn increment(digits: &mut [usize], radix: usize) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < radix {
            return true;
        }
        *d = 0;
    }
    false
}
