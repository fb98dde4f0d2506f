//! Built-in exemplar root sets: Weyl arrangements of the classical
//! families plus engineered negative examples.
//!
//! Roots are generated by reflection closure from the family's Cartan
//! matrix, so the generator doubles as its own oracle; the `expected`
//! counts are frozen regression values, re-verified by the test suite.

use crate::arrangement::{validate_root_set, ArrangementError, RootSet};
use crate::exact::Covector;
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    A,
    B,
    C,
    D,
    G2,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("rank {rank} is not supported for family {family:?}")]
    UnsupportedRank { family: Family, rank: usize },
    #[error("unknown catalog entry {0:?}")]
    UnknownEntry(String),
    #[error(transparent)]
    Arrangement(#[from] ArrangementError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expected {
    pub n_positive_roots: usize,
    pub n_chambers: usize,
    pub crystallographic: bool,
    /// False for entries exercising the NotSimplicial path.
    pub simplicial: bool,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub rank: usize,
    pub roots: RootSet,
    pub expected: Expected,
}

fn family_cartan(family: Family, rank: usize) -> Result<Vec<Vec<i64>>, CatalogError> {
    let bad = |family, rank| CatalogError::UnsupportedRank { family, rank };
    let ok = match family {
        Family::A => rank >= 1,
        Family::B | Family::C => rank >= 2,
        Family::D => rank >= 3,
        Family::G2 => rank == 2,
    };
    if !ok {
        return Err(bad(family, rank));
    }
    let mut c = vec![vec![0i64; rank]; rank];
    for i in 0..rank {
        c[i][i] = 2;
    }
    let chain = |c: &mut Vec<Vec<i64>>, upto: usize| {
        for i in 0..upto {
            c[i][i + 1] = -1;
            c[i + 1][i] = -1;
        }
    };
    match family {
        Family::A => chain(&mut c, rank.saturating_sub(1)),
        Family::B => {
            chain(&mut c, rank - 1);
            c[rank - 2][rank - 1] = -2;
        }
        Family::C => {
            chain(&mut c, rank - 1);
            c[rank - 1][rank - 2] = -2;
        }
        Family::D => {
            chain(&mut c, rank - 2);
            c[rank - 3][rank - 1] = -1;
            c[rank - 1][rank - 3] = -1;
        }
        Family::G2 => {
            c[0][1] = -1;
            c[1][0] = -3;
        }
    }
    Ok(c)
}

/// Positive roots of the family in simple-root coordinates, computed by
/// closing the simple roots under the simple reflections
/// `s_i(v) = v - (sum_j c_ij v_j) alpha_i`.
pub fn weyl_roots(family: Family, rank: usize) -> Result<RootSet, CatalogError> {
    let cartan = family_cartan(family, rank)?;
    let mut roots: BTreeSet<Vec<i64>> = (0..rank)
        .map(|i| {
            let mut v = vec![0i64; rank];
            v[i] = 1;
            v
        })
        .collect();
    loop {
        let mut next = roots.clone();
        for v in &roots {
            for i in 0..rank {
                let pairing: i64 = (0..rank).map(|j| cartan[i][j] * v[j]).sum();
                let mut w = v.clone();
                w[i] -= pairing;
                next.insert(w);
            }
        }
        if next.len() == roots.len() {
            break;
        }
        roots = next;
    }
    let positive: Vec<Covector> = roots
        .iter()
        .filter(|v| v.iter().all(|&c| c >= 0))
        .map(|v| Covector::from_ints(v))
        .collect();
    Ok(validate_root_set(rank, positive)?)
}

fn weyl_entry(
    name: &str,
    family: Family,
    rank: usize,
    n_positive_roots: usize,
    n_chambers: usize,
) -> CatalogEntry {
    CatalogEntry {
        name: name.to_string(),
        rank,
        roots: weyl_roots(family, rank).expect("valid family/rank"),
        expected: Expected {
            n_positive_roots,
            n_chambers,
            crystallographic: true,
            simplicial: true,
        },
    }
}

/// The Weyl entries used throughout the test and acceptance suites.
/// Chamber counts are the Weyl group orders.
pub fn weyl_entries() -> Vec<CatalogEntry> {
    vec![
        weyl_entry("A1", Family::A, 1, 1, 2),
        weyl_entry("A2", Family::A, 2, 3, 6),
        weyl_entry("A3", Family::A, 3, 6, 24),
        weyl_entry("B2", Family::B, 2, 4, 8),
        weyl_entry("B3", Family::B, 3, 9, 48),
        weyl_entry("C3", Family::C, 3, 9, 48),
        weyl_entry("G2", Family::G2, 2, 6, 12),
    ]
}

/// Engineered failures: a simplicial but non-crystallographic rank-2 set
/// and a generic rank-3 set with a non-simplicial chamber.
pub fn negative_examples() -> Vec<CatalogEntry> {
    let bad21 = validate_root_set(
        2,
        vec![
            Covector::from_ints(&[1, 0]),
            Covector::from_ints(&[0, 1]),
            Covector::from_ints(&[2, 1]),
        ],
    )
    .expect("valid input");
    let nonsimplicial = validate_root_set(
        3,
        vec![
            Covector::from_ints(&[1, 0, 0]),
            Covector::from_ints(&[0, 1, 0]),
            Covector::from_ints(&[0, 0, 1]),
            Covector::from_ints(&[1, 1, 1]),
        ],
    )
    .expect("valid input");
    vec![
        CatalogEntry {
            name: "bad_2_1".to_string(),
            rank: 2,
            roots: bad21,
            expected: Expected {
                n_positive_roots: 3,
                n_chambers: 6,
                crystallographic: false,
                simplicial: true,
            },
        },
        CatalogEntry {
            name: "nonsimplicial3".to_string(),
            rank: 3,
            roots: nonsimplicial,
            expected: Expected {
                n_positive_roots: 4,
                n_chambers: 14,
                crystallographic: false,
                simplicial: false,
            },
        },
    ]
}

pub fn all_entries() -> Vec<CatalogEntry> {
    let mut v = weyl_entries();
    v.extend(negative_examples());
    v
}

pub fn lookup(name: &str) -> Result<CatalogEntry, CatalogError> {
    all_entries()
        .into_iter()
        .find(|e| e.name.eq_ignore_ascii_case(name))
        .ok_or_else(|| CatalogError::UnknownEntry(name.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_roots() {
        let roots = weyl_roots(Family::A, 2).unwrap();
        let coords: Vec<&Covector> = roots.positive_roots().iter().collect();
        assert_eq!(coords.len(), 3);
        assert!(coords.contains(&&Covector::from_ints(&[1, 1])));
    }

    #[test]
    fn positive_root_counts() {
        assert_eq!(weyl_roots(Family::A, 3).unwrap().len(), 6);
        assert_eq!(weyl_roots(Family::B, 3).unwrap().len(), 9);
        assert_eq!(weyl_roots(Family::C, 3).unwrap().len(), 9);
        assert_eq!(weyl_roots(Family::D, 4).unwrap().len(), 12);
        assert_eq!(weyl_roots(Family::G2, 2).unwrap().len(), 6);
    }

    #[test]
    fn g2_has_a_coordinate_three() {
        let roots = weyl_roots(Family::G2, 2).unwrap();
        assert!(roots
            .positive_roots()
            .iter()
            .any(|r| r.coords().contains(&crate::exact::rat(3))));
    }

    #[test]
    fn unsupported_rank_rejected() {
        assert!(matches!(
            weyl_roots(Family::G2, 3),
            Err(CatalogError::UnsupportedRank { .. })
        ));
        assert!(matches!(
            weyl_roots(Family::D, 2),
            Err(CatalogError::UnsupportedRank { .. })
        ));
    }

    #[test]
    fn lookup_is_case_insensitive() {
        assert_eq!(lookup("a2").unwrap().name, "A2");
        assert!(matches!(lookup("E8"), Err(CatalogError::UnknownEntry(_))));
    }
}
