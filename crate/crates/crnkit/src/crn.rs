//! The category of chemical reaction networks.
//!
//! A network is a species list and an ordered list of reactions; each
//! reaction carries sparse input and output coefficient vectors over the
//! species. The reaction set is pointed: the "do nothing" reaction with zero
//! source and target is implicit and never stored, and morphisms may send a
//! reaction to it through [`EdgeImage::Basepoint`].
//!
//! Declaration order of species and reactions is the contract for all matrix
//! row/column labelings.

use crate::linalg::Matrix;
use crate::rational::{self, Rational};
use num_traits::Zero;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// A single reaction: sparse source and target coefficient vectors keyed by
/// species name. Absent keys mean coefficient zero; explicit zeros are
/// dropped on construction so vector equality is map equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reaction {
    id: String,
    inputs: BTreeMap<String, Rational>,
    outputs: BTreeMap<String, Rational>,
}

impl Reaction {
    pub fn new(
        id: impl Into<String>,
        inputs: impl IntoIterator<Item = (String, Rational)>,
        outputs: impl IntoIterator<Item = (String, Rational)>,
    ) -> Self {
        let keep = |iter: &mut dyn Iterator<Item = (String, Rational)>| {
            iter.filter(|(_, c)| !c.is_zero()).collect::<BTreeMap<_, _>>()
        };
        Reaction {
            id: id.into(),
            inputs: keep(&mut inputs.into_iter()),
            outputs: keep(&mut outputs.into_iter()),
        }
    }

    /// Reaction with unit integer coefficients, e.g. `unit("e3", ["v1","v2"], ["v3","v4"])`.
    pub fn unit<'a>(
        id: impl Into<String>,
        inputs: impl IntoIterator<Item = &'a str>,
        outputs: impl IntoIterator<Item = &'a str>,
    ) -> Self {
        Reaction::new(
            id,
            inputs.into_iter().map(|s| (s.to_string(), rational::int(1))),
            outputs.into_iter().map(|s| (s.to_string(), rational::int(1))),
        )
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn inputs(&self) -> &BTreeMap<String, Rational> {
        &self.inputs
    }

    pub fn outputs(&self) -> &BTreeMap<String, Rational> {
        &self.outputs
    }

    pub fn input_coeff(&self, species: &str) -> Rational {
        self.inputs.get(species).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn output_coeff(&self, species: &str) -> Rational {
        self.outputs.get(species).cloned().unwrap_or_else(Rational::zero)
    }

    /// A reaction is degenerate when its source and target vectors coincide.
    pub fn is_degenerate(&self) -> bool {
        self.inputs == self.outputs
    }
}

/// Errors from network construction and morphism plumbing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CrnError {
    DuplicateSpecies(String),
    DuplicateReaction(String),
    UnknownSpecies { reaction: String, species: String },
    UnknownReaction(String),
    /// φ₀ does not have shape |V'|×|V| for the networks it is validated
    /// against.
    ShapeMismatch { expected_rows: usize, expected_cols: usize, rows: usize, cols: usize },
    /// φ₁ misses a source reaction or names a reaction absent from the
    /// codomain.
    IncompleteEdgeMap(String),
    /// Composition where the inner morphism's image is not in the outer
    /// morphism's domain.
    MismatchedComposition(String),
    /// A subnetwork member that the host network does not declare.
    NotASubnetworkMember(String),
}

impl fmt::Display for CrnError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CrnError::DuplicateSpecies(s) => write!(f, "duplicate species {s:?}"),
            CrnError::DuplicateReaction(r) => write!(f, "duplicate reaction id {r:?}"),
            CrnError::UnknownSpecies { reaction, species } => {
                write!(f, "reaction {reaction:?} references undeclared species {species:?}")
            }
            CrnError::UnknownReaction(r) => write!(f, "unknown reaction {r:?}"),
            CrnError::ShapeMismatch { expected_rows, expected_cols, rows, cols } => write!(
                f,
                "phi0 has shape {rows}x{cols}, expected {expected_rows}x{expected_cols}"
            ),
            CrnError::IncompleteEdgeMap(r) => {
                write!(f, "edge map is not total or names a missing reaction: {r:?}")
            }
            CrnError::MismatchedComposition(msg) => write!(f, "morphisms do not compose: {msg}"),
            CrnError::NotASubnetworkMember(l) => {
                write!(f, "label {l:?} is not declared by the host network")
            }
        }
    }
}

impl std::error::Error for CrnError {}

/// A chemical reaction network.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Crn {
    species: Vec<String>,
    reactions: Vec<Reaction>,
}

impl Crn {
    /// Validates identifiers and coefficient keys; ordering is preserved as
    /// given and fixes matrix row/column order.
    pub fn new(species: Vec<String>, reactions: Vec<Reaction>) -> Result<Self, CrnError> {
        let mut seen = BTreeSet::new();
        for s in &species {
            if !seen.insert(s.clone()) {
                return Err(CrnError::DuplicateSpecies(s.clone()));
            }
        }
        let mut seen_r = BTreeSet::new();
        for r in &reactions {
            if !seen_r.insert(r.id.clone()) {
                return Err(CrnError::DuplicateReaction(r.id.clone()));
            }
            for key in r.inputs.keys().chain(r.outputs.keys()) {
                if !seen.contains(key) {
                    return Err(CrnError::UnknownSpecies {
                        reaction: r.id.clone(),
                        species: key.clone(),
                    });
                }
            }
        }
        Ok(Crn { species, reactions })
    }

    /// The trivial network with no species and no reactions.
    pub fn empty() -> Self {
        Crn { species: Vec::new(), reactions: Vec::new() }
    }

    pub fn is_empty(&self) -> bool {
        self.species.is_empty() && self.reactions.is_empty()
    }

    pub fn species(&self) -> &[String] {
        &self.species
    }

    pub fn reactions(&self) -> &[Reaction] {
        &self.reactions
    }

    pub fn species_index(&self, name: &str) -> Option<usize> {
        self.species.iter().position(|s| s == name)
    }

    pub fn reaction_index(&self, id: &str) -> Option<usize> {
        self.reactions.iter().position(|r| r.id == id)
    }

    pub fn reaction(&self, id: &str) -> Option<&Reaction> {
        self.reactions.iter().find(|r| r.id == id)
    }

    /// The dense source vector `s(e)` in declared species order.
    pub fn source_vector(&self, reaction: &Reaction) -> Matrix {
        Matrix::column_vector(self.species.iter().map(|s| reaction.input_coeff(s)).collect())
    }

    /// The dense target vector `t(e)` in declared species order.
    pub fn target_vector(&self, reaction: &Reaction) -> Matrix {
        Matrix::column_vector(self.species.iter().map(|s| reaction.output_coeff(s)).collect())
    }

    /// The stoichiometric matrix: rows are species, columns are reactions,
    /// entry = output − input coefficient. The implicit do-nothing reaction
    /// would contribute a zero column and is dropped.
    pub fn stoich_matrix(&self) -> Matrix {
        Matrix::from_fn(self.species.len(), self.reactions.len(), |i, j| {
            let r = &self.reactions[j];
            r.output_coeff(&self.species[i]) - r.input_coeff(&self.species[i])
        })
    }

    /// Negative input/output coefficients are legal but unusual; callers that
    /// talk to users can surface these as warnings.
    pub fn negative_coefficient_warnings(&self) -> Vec<String> {
        let mut warnings = Vec::new();
        for r in &self.reactions {
            for (side, map) in [("input", &r.inputs), ("output", &r.outputs)] {
                for (species, coeff) in map {
                    if coeff < &Rational::zero() {
                        warnings.push(format!(
                            "reaction {:?} has negative {side} coefficient {} for {species:?}",
                            r.id,
                            rational::display(coeff)
                        ));
                    }
                }
            }
        }
        warnings
    }
}

/// Where a morphism sends a reaction: another reaction or the implicit
/// do-nothing basepoint.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum EdgeImage {
    Reaction(String),
    Basepoint,
}

/// A network morphism: a linear map `phi0 : ℝ^V → ℝ^V'` together with a
/// pointed map of reaction sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrnMorphism {
    pub phi0: Matrix,
    pub phi1: BTreeMap<String, EdgeImage>,
}

impl CrnMorphism {
    pub fn new(phi0: Matrix, phi1: BTreeMap<String, EdgeImage>) -> Self {
        CrnMorphism { phi0, phi1 }
    }

    pub fn edge_image(&self, reaction: &str) -> Option<&EdgeImage> {
        self.phi1.get(reaction)
    }
}

/// Per-reaction outcome of the commuting-square validation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SquareCheck {
    /// Sent to a reaction of the codomain: both squares are checked against
    /// that reaction's source and target vectors.
    Mapped { image: String, source_ok: bool, target_ok: bool },
    /// Sent to the basepoint: the image must be degenerate in stoichiometry,
    /// i.e. `phi0·s(e) = phi0·t(e)`.
    Collapsed { degenerate_image: bool },
}

impl SquareCheck {
    pub fn passes(&self) -> bool {
        match self {
            SquareCheck::Mapped { source_ok, target_ok, .. } => *source_ok && *target_ok,
            SquareCheck::Collapsed { degenerate_image } => *degenerate_image,
        }
    }
}

/// Validation report for a morphism: one entry per source reaction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismReport {
    pub reactions: Vec<(String, SquareCheck)>,
}

impl MorphismReport {
    pub fn passes(&self) -> bool {
        self.reactions.iter().all(|(_, c)| c.passes())
    }
}

/// Checks the two commuting squares of a morphism reaction by reaction.
///
/// For a reaction sent to the basepoint the squares are replaced by the
/// degeneracy condition `phi0·s(e) = phi0·t(e)`: the collapsed image must be
/// stoichiometrically trivial. This keeps composition and the stoichiometric
/// functor's naturality intact on every validated morphism.
pub fn validate_morphism(
    morphism: &CrnMorphism,
    from: &Crn,
    to: &Crn,
) -> Result<MorphismReport, CrnError> {
    let (rows, cols) = (morphism.phi0.rows(), morphism.phi0.cols());
    if rows != to.species().len() || cols != from.species().len() {
        return Err(CrnError::ShapeMismatch {
            expected_rows: to.species().len(),
            expected_cols: from.species().len(),
            rows,
            cols,
        });
    }
    let mut entries = Vec::with_capacity(from.reactions().len());
    for r in from.reactions() {
        let image = morphism
            .phi1
            .get(r.id())
            .ok_or_else(|| CrnError::IncompleteEdgeMap(r.id().to_string()))?;
        let mapped_source = &morphism.phi0 * &from.source_vector(r);
        let mapped_target = &morphism.phi0 * &from.target_vector(r);
        let check = match image {
            EdgeImage::Reaction(id) => {
                let target = to
                    .reaction(id)
                    .ok_or_else(|| CrnError::IncompleteEdgeMap(id.clone()))?;
                SquareCheck::Mapped {
                    image: id.clone(),
                    source_ok: mapped_source == to.source_vector(target),
                    target_ok: mapped_target == to.target_vector(target),
                }
            }
            EdgeImage::Basepoint => {
                SquareCheck::Collapsed { degenerate_image: mapped_source == mapped_target }
            }
        };
        entries.push((r.id().to_string(), check));
    }
    Ok(MorphismReport { reactions: entries })
}

/// The identity morphism on a network.
pub fn identity_morphism(crn: &Crn) -> CrnMorphism {
    CrnMorphism::new(
        Matrix::identity(crn.species().len()),
        crn.reactions()
            .iter()
            .map(|r| (r.id().to_string(), EdgeImage::Reaction(r.id().to_string())))
            .collect(),
    )
}

/// Composition `second ∘ first`. The intermediate network is needed only to
/// catch mismatches: every reaction image of `first` must be in `second`'s
/// edge map, and the linear parts must be conformable.
pub fn compose(second: &CrnMorphism, first: &CrnMorphism) -> Result<CrnMorphism, CrnError> {
    if second.phi0.cols() != first.phi0.rows() {
        return Err(CrnError::MismatchedComposition(format!(
            "phi0 shapes {}x{} and {}x{}",
            second.phi0.rows(),
            second.phi0.cols(),
            first.phi0.rows(),
            first.phi0.cols()
        )));
    }
    let mut phi1 = BTreeMap::new();
    for (reaction, image) in &first.phi1 {
        let composed = match image {
            EdgeImage::Basepoint => EdgeImage::Basepoint,
            EdgeImage::Reaction(mid) => second
                .phi1
                .get(mid)
                .cloned()
                .ok_or_else(|| CrnError::MismatchedComposition(format!("no image for {mid:?}")))?,
        };
        phi1.insert(reaction.clone(), composed);
    }
    Ok(CrnMorphism::new(&second.phi0 * &first.phi0, phi1))
}

/// The unique morphism from the trivial network into `to`.
pub fn zero_from_empty(to: &Crn) -> CrnMorphism {
    CrnMorphism::new(Matrix::zeros(to.species().len(), 0), BTreeMap::new())
}

/// The unique morphism from `from` into the trivial network: every reaction
/// goes to the basepoint and the linear part is the zero map to the zero
/// space.
pub fn zero_to_empty(from: &Crn) -> CrnMorphism {
    CrnMorphism::new(
        Matrix::zeros(0, from.species().len()),
        from.reactions().iter().map(|r| (r.id().to_string(), EdgeImage::Basepoint)).collect(),
    )
}

/// A subnetwork: subsets of a host network's species and reactions. Block
/// orderings are always re-derived from the host's declaration order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subnetwork {
    species: BTreeSet<String>,
    edges: BTreeSet<String>,
}

impl Subnetwork {
    pub fn new<S: Into<String>, E: Into<String>>(
        host: &Crn,
        species: impl IntoIterator<Item = S>,
        edges: impl IntoIterator<Item = E>,
    ) -> Result<Self, CrnError> {
        let species: BTreeSet<String> = species.into_iter().map(Into::into).collect();
        let edges: BTreeSet<String> = edges.into_iter().map(Into::into).collect();
        for s in &species {
            if host.species_index(s).is_none() {
                return Err(CrnError::NotASubnetworkMember(s.clone()));
            }
        }
        for e in &edges {
            if host.reaction_index(e).is_none() {
                return Err(CrnError::NotASubnetworkMember(e.clone()));
            }
        }
        Ok(Subnetwork { species, edges })
    }

    pub fn empty() -> Self {
        Subnetwork { species: BTreeSet::new(), edges: BTreeSet::new() }
    }

    pub fn species(&self) -> &BTreeSet<String> {
        &self.species
    }

    pub fn edges(&self) -> &BTreeSet<String> {
        &self.edges
    }

    pub fn contains_species(&self, s: &str) -> bool {
        self.species.contains(s)
    }

    pub fn contains_edge(&self, e: &str) -> bool {
        self.edges.contains(e)
    }
}

/// The output-closure of a species subset: every reaction whose source uses
/// one of the species. It is the minimal edge set making the subset
/// output-complete.
pub fn output_closure(host: &Crn, species: &BTreeSet<String>) -> BTreeSet<String> {
    host.reactions()
        .iter()
        .filter(|r| r.inputs().keys().any(|s| species.contains(s)))
        .map(|r| r.id().to_string())
        .collect()
}

/// Pairs `(reaction, species)` where an external reaction consumes an
/// internal species, i.e. witnesses against output-completeness.
pub fn output_completeness_violations(host: &Crn, sub: &Subnetwork) -> Vec<(String, String)> {
    let mut violations = Vec::new();
    for r in host.reactions() {
        if sub.contains_edge(r.id()) {
            continue;
        }
        for species in r.inputs().keys() {
            if sub.contains_species(species) {
                violations.push((r.id().to_string(), species.clone()));
            }
        }
    }
    violations
}

/// Whether no reaction outside the subnetwork consumes an internal species.
pub fn is_output_complete(host: &Crn, sub: &Subnetwork) -> bool {
    output_completeness_violations(host, sub).is_empty()
}

/// Report for the three reduction-morphism conditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionMorphismReport {
    /// Per internal reaction: is the image stoichiometrically degenerate, and
    /// where was it sent.
    pub collapsed: Vec<(String, EdgeImage, bool)>,
    /// External reactions must map injectively, without basepoints, onto all
    /// of the codomain's reactions.
    pub external_bijective: bool,
    pub external_bijective_detail: Vec<String>,
    /// phi0 must agree with the prime-renaming injection on every surviving
    /// species.
    pub surviving_species_fixed: bool,
    pub surviving_species_detail: Vec<String>,
}

impl ReductionMorphismReport {
    pub fn passes(&self) -> bool {
        self.collapsed.iter().all(|(_, _, ok)| *ok)
            && self.external_bijective
            && self.surviving_species_fixed
    }
}

/// Resolves the canonical primed counterpart of `label` in `target`: the
/// first of `label`, `label'`, `label''`, … that `target` declares.
pub fn primed_counterpart(label: &str, target: &[String]) -> Option<String> {
    let mut candidate = label.to_string();
    for _ in 0..=target.len() {
        if target.iter().any(|t| t == &candidate) {
            return Some(candidate);
        }
        candidate.push('\'');
    }
    None
}

/// Checks the reduction-morphism conditions for `morphism : from → to`
/// relative to the subnetwork `sub` of `from`:
///
/// 1. every internal reaction has a stoichiometrically degenerate image
///    (the basepoint qualifies);
/// 2. the edge map restricted to external reactions is a bijection onto the
///    codomain's reactions;
/// 3. phi0 sends each surviving species to its primed counterpart in the
///    codomain.
///
/// The morphism must validate first; validation failures surface as errors,
/// condition failures as a report.
pub fn is_reduction_morphism(
    morphism: &CrnMorphism,
    from: &Crn,
    to: &Crn,
    sub: &Subnetwork,
) -> Result<ReductionMorphismReport, CrnError> {
    validate_morphism(morphism, from, to)?;

    let mut collapsed = Vec::new();
    for id in sub.edges() {
        let reaction = from.reaction(id).ok_or_else(|| CrnError::UnknownReaction(id.clone()))?;
        let image = morphism
            .phi1
            .get(id)
            .ok_or_else(|| CrnError::IncompleteEdgeMap(id.clone()))?;
        let mapped_source = &morphism.phi0 * &from.source_vector(reaction);
        let mapped_target = &morphism.phi0 * &from.target_vector(reaction);
        collapsed.push((id.clone(), image.clone(), mapped_source == mapped_target));
    }

    let mut external_detail = Vec::new();
    let mut images = BTreeSet::new();
    for r in from.reactions() {
        if sub.contains_edge(r.id()) {
            continue;
        }
        match morphism.phi1.get(r.id()) {
            Some(EdgeImage::Reaction(id)) => {
                if !images.insert(id.clone()) {
                    external_detail.push(format!("{} and another reaction share image {id}", r.id()));
                }
            }
            Some(EdgeImage::Basepoint) => {
                external_detail.push(format!("external reaction {} maps to the basepoint", r.id()));
            }
            None => return Err(CrnError::IncompleteEdgeMap(r.id().to_string())),
        }
    }
    for r in to.reactions() {
        if !images.contains(r.id()) {
            external_detail.push(format!("codomain reaction {} is not an external image", r.id()));
        }
    }
    let external_bijective = external_detail.is_empty();

    let mut species_detail = Vec::new();
    for (col, species) in from.species().iter().enumerate() {
        if sub.contains_species(species) {
            continue;
        }
        match primed_counterpart(species, to.species()) {
            None => species_detail.push(format!("no primed counterpart of {species} in codomain")),
            Some(counterpart) => {
                let target_row = to.species_index(&counterpart).expect("counterpart resolved");
                let fixed = (0..to.species().len()).all(|i| {
                    let expected = if i == target_row { rational::int(1) } else { Rational::zero() };
                    morphism.phi0.get(i, col) == &expected
                });
                if !fixed {
                    species_detail
                        .push(format!("phi0 does not send {species} to {counterpart} exactly"));
                }
            }
        }
    }
    let surviving_species_fixed = species_detail.is_empty();

    Ok(ReductionMorphismReport {
        collapsed,
        external_bijective,
        external_bijective_detail: external_detail,
        surviving_species_fixed,
        surviving_species_detail: species_detail,
    })
}
