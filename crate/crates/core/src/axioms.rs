//! The crystallographic axiom (I), the additive axiom (A), and
//! equivalence of arrangements.

use crate::arrangement::{enumerate_chambers, ArrangementError, Chamber, ChamberGraph, RootSet};
use crate::exact::{self, Covector, ExactError, Rational, SquareMatrix};
use itertools::Itertools;
use num_traits::Signed;
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AxiomsError {
    #[error("root {root} has mixed-sign coordinates on chamber {sign_vector}")]
    PosConeViolation { sign_vector: String, root: String },
    #[error(transparent)]
    Arrangement(#[from] ArrangementError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    /// (I): every root is an integer combination of every chamber basis.
    Integrality,
    /// (A): every non-simple positive root splits as a sum of two
    /// positive roots.
    Additivity,
}

impl Axiom {
    pub fn letter(&self) -> &'static str {
        match self {
            Axiom::Integrality => "I",
            Axiom::Additivity => "A",
        }
    }
}

/// A reproducible failure: the chamber (by id and sign vector), the root,
/// and either the offending coefficient vector (axiom I) or nothing
/// (axiom A, no decomposition exists).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomWitness {
    pub chamber_id: usize,
    pub sign_vector: String,
    pub root: Covector,
    pub coefficients: Option<Vec<Rational>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub axiom: Axiom,
    pub passed: bool,
    pub witnesses: Vec<AxiomWitness>,
}

impl AxiomReport {
    fn new(axiom: Axiom, witnesses: Vec<AxiomWitness>) -> Self {
        AxiomReport {
            axiom,
            passed: witnesses.is_empty(),
            witnesses,
        }
    }
}

/// `R^K_+`: for each hyperplane the signed representative whose
/// `B^K`-coordinates are all nonnegative. Well-defined by the positive
/// cone lemma; mixed signs mean the input was not a chamber.
pub fn positive_system(roots: &RootSet, chamber: &Chamber) -> Result<Vec<Covector>, AxiomsError> {
    let basis = chamber.basis_covectors(roots);
    roots
        .positive_roots()
        .iter()
        .map(|root| {
            let coeffs = exact::solve_linear(&basis, root)?;
            if !exact::uniform_sign(&coeffs) {
                return Err(AxiomsError::PosConeViolation {
                    sign_vector: chamber.sign_string(),
                    root: root.to_string(),
                });
            }
            if coeffs.iter().any(|c| c.is_negative()) {
                Ok(root.neg())
            } else {
                Ok(root.clone())
            }
        })
        .collect()
}

/// Axiom (I) over every chamber of the graph.
pub fn check_crystallographic(
    roots: &RootSet,
    graph: &ChamberGraph,
) -> Result<AxiomReport, AxiomsError> {
    let mut witnesses = Vec::new();
    for chamber in &graph.chambers {
        let basis = chamber.basis_covectors(roots);
        for root in roots.positive_roots() {
            let coeffs = exact::solve_linear(&basis, root)?;
            if !exact::is_integer_vector(&coeffs) {
                witnesses.push(AxiomWitness {
                    chamber_id: chamber.id,
                    sign_vector: chamber.sign_string(),
                    root: root.clone(),
                    coefficients: Some(coeffs),
                });
            }
        }
    }
    Ok(AxiomReport::new(Axiom::Integrality, witnesses))
}

/// Axiom (A) by exhaustive pair search over `R^K_+` at every chamber.
pub fn check_additive(roots: &RootSet, graph: &ChamberGraph) -> Result<AxiomReport, AxiomsError> {
    let mut witnesses = Vec::new();
    for chamber in &graph.chambers {
        let pos = positive_system(roots, chamber)?;
        let pos_set: BTreeSet<&Covector> = pos.iter().collect();
        let basis: BTreeSet<Covector> = chamber
            .basis_covectors(roots)
            .into_iter()
            .collect();
        for alpha in &pos {
            if basis.contains(alpha) {
                continue;
            }
            let decomposes = pos.iter().any(|beta| {
                let gamma = alpha.add(&beta.neg());
                pos_set.contains(&gamma)
            });
            if !decomposes {
                witnesses.push(AxiomWitness {
                    chamber_id: chamber.id,
                    sign_vector: chamber.sign_string(),
                    root: alpha.clone(),
                    coefficients: None,
                });
            }
        }
    }
    Ok(AxiomReport::new(Axiom::Additivity, witnesses))
}

/// Coordinates of every root of `R` in a chamber basis, canonicalized so
/// the first nonzero entry is positive, sorted. Used to prune the
/// equivalence search: a linear map carrying one arrangement onto the
/// other must match these multisets.
fn coordinate_signature(
    roots: &RootSet,
    basis: &[Covector],
) -> Result<Vec<Vec<Rational>>, ExactError> {
    let mut sig: Vec<Vec<Rational>> = roots
        .positive_roots()
        .iter()
        .map(|root| {
            let coeffs = exact::solve_linear(basis, root)?;
            let flip = coeffs
                .iter()
                .find(|c| !num_traits::Zero::is_zero(*c))
                .map(|c| c.is_negative())
                .unwrap_or(false);
            Ok(if flip {
                coeffs.into_iter().map(|c| -c).collect()
            } else {
                coeffs
            })
        })
        .collect::<Result<_, ExactError>>()?;
    sig.sort();
    Ok(sig)
}

/// Search for `psi` in `Aut(V*)` with `psi(R1) = R2` as sets of `±`
/// pairs: anchor one chamber basis of `R1`, try every chamber of `R2`
/// under every ordering of its basis, extend linearly, verify.
pub fn arrangement_equivalence(
    r1: &RootSet,
    r2: &RootSet,
) -> Result<Option<SquareMatrix>, AxiomsError> {
    if r1.rank() != r2.rank() || r1.len() != r2.len() {
        return Ok(None);
    }
    let rank = r1.rank();
    let g1 = enumerate_chambers(r1)?;
    let g2 = enumerate_chambers(r2)?;
    if g1.len() != g2.len() {
        return Ok(None);
    }

    let anchor = g1.chambers[0].basis_covectors(r1);
    let sig1 = coordinate_signature(r1, &anchor)?;
    let anchor_mat = SquareMatrix::from_columns(&anchor);
    let anchor_inv = anchor_mat.inverse()?;

    let targets2: BTreeSet<Covector> = r2
        .positive_roots()
        .iter()
        .flat_map(|x| [x.clone(), x.neg()])
        .collect();

    for chamber in &g2.chambers {
        let basis = chamber.basis_covectors(r2);
        for perm in (0..rank).permutations(rank) {
            let ordered: Vec<Covector> = perm.iter().map(|&i| basis[i].clone()).collect();
            if coordinate_signature(r2, &ordered)? != sig1 {
                continue;
            }
            // psi sends anchor_i to ordered_i
            let psi = SquareMatrix::from_columns(&ordered).mul(&anchor_inv);
            let mut images = BTreeSet::new();
            let mut ok = true;
            for x in r1.positive_roots() {
                let y = psi.apply(x);
                if !targets2.contains(&y) {
                    ok = false;
                    break;
                }
                images.insert(y.clone());
                images.insert(y.neg());
            }
            if ok && images == targets2 {
                return Ok(Some(psi));
            }
        }
    }
    Ok(None)
}
