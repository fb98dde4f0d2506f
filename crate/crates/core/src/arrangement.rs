//! Central hyperplane arrangements given by root covectors: chamber
//! enumeration by wall-crossing BFS, wall detection, simpliciality.

use crate::exact::{self, Covector, Rational};
use crate::feasibility::{restrict_to_hyperplane, strictly_feasible};
use num_traits::{Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArrangementError {
    #[error("empty root set")]
    EmptyInput,
    #[error("root {0} has wrong dimension")]
    WrongDimension(usize),
    #[error("root {0} is zero")]
    ZeroRoot(usize),
    #[error("roots {0} and {1} are parallel")]
    ParallelRoots(usize, usize),
    #[error("roots do not span the dual space")]
    NotSpanning,
    #[error("sign vector {0} describes an empty region")]
    EmptyChamber(String),
    #[error("arrangement is not simplicial; chamber {sign_vector} has {wall_count} walls (rank {rank})")]
    NotSimplicial {
        sign_vector: String,
        wall_count: usize,
        rank: usize,
    },
}

/// The input data: rank `r` and one representative per hyperplane, so the
/// full root set is `{ +x_i, -x_i }`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSet {
    rank: usize,
    positive_roots: Vec<Covector>,
}

impl RootSet {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn positive_roots(&self) -> &[Covector] {
        &self.positive_roots
    }

    pub fn len(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positive_roots.is_empty()
    }

    /// The representative of root `index` carrying the given sign.
    pub fn signed(&self, index: usize, positive: bool) -> Covector {
        if positive {
            self.positive_roots[index].clone()
        } else {
            self.positive_roots[index].neg()
        }
    }
}

/// Checks dimensions, rejects zero and parallel roots, requires the set
/// to span the dual space.
pub fn validate_root_set(
    rank: usize,
    roots: Vec<Covector>,
) -> Result<RootSet, ArrangementError> {
    if roots.is_empty() || rank == 0 {
        return Err(ArrangementError::EmptyInput);
    }
    for (i, root) in roots.iter().enumerate() {
        if root.dim() != rank {
            return Err(ArrangementError::WrongDimension(i));
        }
        if root.is_zero() {
            return Err(ArrangementError::ZeroRoot(i));
        }
    }
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            if roots[i].is_parallel(&roots[j]) {
                return Err(ArrangementError::ParallelRoots(i, j));
            }
        }
    }
    if span_rank(&roots) < rank {
        return Err(ArrangementError::NotSpanning);
    }
    Ok(RootSet {
        rank,
        positive_roots: roots,
    })
}

fn span_rank(roots: &[Covector]) -> usize {
    let dim = roots[0].dim();
    let mut m: Vec<Vec<Rational>> = roots.iter().map(|v| v.coords().to_vec()).collect();
    let mut rank = 0;
    for col in 0..dim {
        if rank == m.len() {
            break;
        }
        let pivot = match (rank..m.len()).find(|&i| !m[i][col].is_zero()) {
            Some(p) => p,
            None => continue,
        };
        m.swap(pivot, rank);
        let p = m[rank][col].clone();
        for i in rank + 1..m.len() {
            if m[i][col].is_zero() {
                continue;
            }
            let f = &m[i][col] / &p;
            for c in col..dim {
                let sub = &f * &m[rank][c];
                m[i][c] -= sub;
            }
        }
        rank += 1;
    }
    rank
}

/// A root together with the sign that makes it positive on a given
/// chamber (the inward normal convention).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct SignedRoot {
    pub index: usize,
    pub positive: bool,
}

impl SignedRoot {
    pub fn covector(&self, roots: &RootSet) -> Covector {
        roots.signed(self.index, self.positive)
    }

    /// Signed 1-based index, negative when the stored representative is
    /// the negated input root. Used in JSON output.
    pub fn display_index(&self) -> i64 {
        let i = self.index as i64 + 1;
        if self.positive {
            i
        } else {
            -i
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chamber {
    pub id: usize,
    /// Sign of each positive-root representative on the chamber interior.
    pub signs: Vec<bool>,
    /// Inward-signed wall roots, sorted by root index. For a simplicial
    /// chamber this is `B^K`.
    pub walls: Vec<SignedRoot>,
}

impl Chamber {
    pub fn sign_string(&self) -> String {
        sign_string(&self.signs)
    }

    pub fn basis_covectors(&self, roots: &RootSet) -> Vec<Covector> {
        self.walls.iter().map(|w| w.covector(roots)).collect()
    }

    /// A point in the open chamber: the sum of the dual basis vectors of
    /// `B^K`. Only valid for simplicial chambers.
    pub fn interior_point(&self, roots: &RootSet) -> Vec<Rational> {
        let basis = self.basis_covectors(roots);
        let dual = exact::dual_basis(&basis).expect("chamber basis must be independent");
        let mut point = vec![Rational::zero(); roots.rank()];
        for v in dual {
            for (p, c) in point.iter_mut().zip(v.coords()) {
                *p += c;
            }
        }
        point
    }
}

pub fn sign_string(signs: &[bool]) -> String {
    signs.iter().map(|&s| if s { '+' } else { '-' }).collect()
}

/// All chambers with wall-crossing adjacency. Edges are labeled by the
/// index of the shared wall's root.
#[derive(Debug, Clone)]
pub struct ChamberGraph {
    pub chambers: Vec<Chamber>,
    /// `adjacency[c][root_index] = neighbor chamber id`.
    pub adjacency: Vec<BTreeMap<usize, usize>>,
}

impl ChamberGraph {
    pub fn len(&self) -> usize {
        self.chambers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chambers.is_empty()
    }

    pub fn neighbor_across(&self, chamber: usize, root_index: usize) -> Option<usize> {
        self.adjacency[chamber].get(&root_index).copied()
    }

    pub fn edges(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for (c, adj) in self.adjacency.iter().enumerate() {
            for (&root, &n) in adj {
                if c < n {
                    out.push((c, n, root));
                }
            }
        }
        out
    }
}

/// The chamber containing the deterministic generic point on the moment
/// curve `(1, t, t^2, ...)`, for the smallest positive integer `t` that
/// avoids every hyperplane.
pub fn seed_chamber(roots: &RootSet) -> Vec<bool> {
    let r = roots.rank();
    let mut t: i64 = 1;
    loop {
        let point: Vec<Rational> = (0..r)
            .map(|k| exact::rat(t.pow(k as u32)))
            .collect();
        let evals: Vec<Rational> = roots
            .positive_roots()
            .iter()
            .map(|root| root.eval(&point))
            .collect();
        if evals.iter().all(|e| !e.is_zero()) {
            return evals.iter().map(|e| e.is_positive()).collect();
        }
        t += 1;
    }
}

/// The signed rows of the open region described by a sign vector.
fn signed_rows(roots: &RootSet, signs: &[bool]) -> Vec<Covector> {
    roots
        .positive_roots()
        .iter()
        .zip(signs)
        .map(|(root, &s)| if s { root.clone() } else { root.neg() })
        .collect()
}

/// Exact facet test: root `k` supports a wall of the region iff the
/// strict system of all other signed roots is feasible inside `x_k = 0`.
pub fn walls_of_chamber(
    roots: &RootSet,
    signs: &[bool],
) -> Result<Vec<SignedRoot>, ArrangementError> {
    let all = signed_rows(roots, signs);
    let open: Vec<Vec<Rational>> = all.iter().map(|c| c.coords().to_vec()).collect();
    if !strictly_feasible(&open) {
        return Err(ArrangementError::EmptyChamber(sign_string(signs)));
    }
    let mut walls = Vec::new();
    for k in 0..roots.len() {
        let others: Vec<Covector> = all
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != k)
            .map(|(_, c)| c.clone())
            .collect();
        let restricted = restrict_to_hyperplane(&roots.positive_roots()[k], &others);
        if strictly_feasible(&restricted) {
            walls.push(SignedRoot {
                index: k,
                positive: signs[k],
            });
        }
    }
    Ok(walls)
}

/// BFS over sign vectors from the seed chamber. Crossing the wall with
/// root index `k` flips exactly entry `k`. Fails with every non-simplicial
/// witness if any chamber does not have exactly `r` independent walls.
pub fn enumerate_chambers(roots: &RootSet) -> Result<ChamberGraph, ArrangementError> {
    let r = roots.rank();
    let seed = seed_chamber(roots);
    let mut ids: BTreeMap<Vec<bool>, usize> = BTreeMap::new();
    let mut chambers: Vec<Chamber> = Vec::new();
    let mut adjacency: Vec<BTreeMap<usize, usize>> = Vec::new();
    let mut queue = std::collections::VecDeque::new();

    ids.insert(seed.clone(), 0);
    let walls = walls_of_chamber(roots, &seed)?;
    chambers.push(Chamber {
        id: 0,
        signs: seed,
        walls,
    });
    adjacency.push(BTreeMap::new());
    queue.push_back(0usize);

    while let Some(c) = queue.pop_front() {
        let wall_roots: Vec<usize> = chambers[c].walls.iter().map(|w| w.index).collect();
        for k in wall_roots {
            let mut signs = chambers[c].signs.clone();
            signs[k] = !signs[k];
            let n = match ids.get(&signs) {
                Some(&n) => n,
                None => {
                    let n = chambers.len();
                    ids.insert(signs.clone(), n);
                    let walls = walls_of_chamber(roots, &signs)?;
                    chambers.push(Chamber {
                        id: n,
                        signs,
                        walls,
                    });
                    adjacency.push(BTreeMap::new());
                    queue.push_back(n);
                    n
                }
            };
            adjacency[c].insert(k, n);
            adjacency[n].insert(k, c);
        }
    }

    // simpliciality is verified, never assumed
    for chamber in &chambers {
        let normals = chamber.basis_covectors(roots);
        if chamber.walls.len() != r || !exact::are_independent(&normals) {
            return Err(ArrangementError::NotSimplicial {
                sign_vector: chamber.sign_string(),
                wall_count: chamber.walls.len(),
                rank: r,
            });
        }
    }

    Ok(ChamberGraph {
        chambers,
        adjacency,
    })
}

impl fmt::Display for ChamberGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} chambers", self.chambers.len())?;
        for c in &self.chambers {
            writeln!(f, "  {}: {}", c.id, c.sign_string())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn cv(coords: &[i64]) -> Covector {
        Covector::from_ints(coords)
    }

    fn a2() -> RootSet {
        validate_root_set(2, vec![cv(&[1, 0]), cv(&[0, 1]), cv(&[1, 1])]).unwrap()
    }

    #[test]
    fn validation_accepts_a2() {
        assert_eq!(a2().len(), 3);
    }

    #[test]
    fn validation_rejects_parallel() {
        let err = validate_root_set(2, vec![cv(&[1, 0]), cv(&[2, 0])]).unwrap_err();
        assert_eq!(err, ArrangementError::ParallelRoots(0, 1));
    }

    #[test]
    fn validation_rejects_non_spanning() {
        let err =
            validate_root_set(3, vec![cv(&[1, 0, 0]), cv(&[0, 1, 0])]).unwrap_err();
        assert_eq!(err, ArrangementError::NotSpanning);
    }

    #[test]
    fn validation_rejects_empty() {
        assert_eq!(
            validate_root_set(2, vec![]).unwrap_err(),
            ArrangementError::EmptyInput
        );
    }

    #[test]
    fn seed_rank_1() {
        let roots = validate_root_set(1, vec![cv(&[1])]).unwrap();
        assert_eq!(seed_chamber(&roots), vec![true]);
    }

    #[test]
    fn seed_has_no_zero_signs() {
        // moment-curve point must dodge every hyperplane
        let roots =
            validate_root_set(2, vec![cv(&[1, -1]), cv(&[0, 1]), cv(&[1, 0])]).unwrap();
        let signs = seed_chamber(&roots);
        assert_eq!(signs.len(), 3);
    }

    #[test]
    fn walls_rank_1() {
        let roots = validate_root_set(1, vec![cv(&[1])]).unwrap();
        let walls = walls_of_chamber(&roots, &[true]).unwrap();
        assert_eq!(
            walls,
            vec![SignedRoot {
                index: 0,
                positive: true
            }]
        );
    }

    #[test]
    fn walls_of_a2_positive_chamber() {
        let roots = a2();
        let walls = walls_of_chamber(&roots, &[true, true, true]).unwrap();
        let indices: Vec<usize> = walls.iter().map(|w| w.index).collect();
        // (1,1) is implied by the other two, so it is not a wall
        assert_eq!(indices, vec![0, 1]);
    }

    #[test]
    fn infeasible_sign_vector_rejected() {
        let roots = a2();
        // (1,0) < 0, (0,1) < 0 but (1,1) > 0 is impossible
        let err = walls_of_chamber(&roots, &[false, false, true]).unwrap_err();
        assert_eq!(err, ArrangementError::EmptyChamber("--+".into()));
    }

    #[test]
    fn rank_1_has_two_chambers() {
        let roots = validate_root_set(1, vec![cv(&[1])]).unwrap();
        let graph = enumerate_chambers(&roots).unwrap();
        assert_eq!(graph.len(), 2);
    }

    #[test]
    fn a2_has_six_chambers_in_a_cycle() {
        let graph = enumerate_chambers(&a2()).unwrap();
        assert_eq!(graph.len(), 6);
        assert_eq!(graph.edges().len(), 6);
        for adj in &graph.adjacency {
            assert_eq!(adj.len(), 2);
        }
    }

    #[test]
    fn chamber_basis_of_adjacent_chamber() {
        let roots = a2();
        let graph = enumerate_chambers(&roots).unwrap();
        let start = graph
            .chambers
            .iter()
            .find(|c| c.signs == vec![true, true, true])
            .unwrap();
        assert_eq!(
            start.basis_covectors(&roots),
            vec![cv(&[1, 0]), cv(&[0, 1])]
        );
        // across the (1,0) wall: basis {-(1,0), (1,1)}
        let n = graph.neighbor_across(start.id, 0).unwrap();
        let neighbor = &graph.chambers[n];
        assert_eq!(
            neighbor.basis_covectors(&roots),
            vec![cv(&[-1, 0]), cv(&[1, 1])]
        );
    }

    #[test]
    fn interior_point_is_positive_on_basis() {
        let roots = a2();
        let graph = enumerate_chambers(&roots).unwrap();
        for chamber in &graph.chambers {
            let point = chamber.interior_point(&roots);
            for b in chamber.basis_covectors(&roots) {
                assert!(b.eval(&point) > rat(0));
            }
            // and the point realizes the chamber's sign vector
            for (root, &s) in roots.positive_roots().iter().zip(&chamber.signs) {
                let v = root.eval(&point);
                assert_eq!(v.is_positive(), s, "sign mismatch on {}", root);
            }
        }
    }

    #[test]
    fn negation_maps_chambers_to_chambers() {
        let graph = enumerate_chambers(&a2()).unwrap();
        let signs: std::collections::BTreeSet<Vec<bool>> =
            graph.chambers.iter().map(|c| c.signs.clone()).collect();
        for s in &signs {
            let negated: Vec<bool> = s.iter().map(|&b| !b).collect();
            assert!(signs.contains(&negated));
        }
        assert_eq!(graph.len() % 2, 0);
    }

    #[test]
    fn generic_rank_3_is_not_simplicial() {
        let roots = validate_root_set(
            3,
            vec![
                cv(&[1, 0, 0]),
                cv(&[0, 1, 0]),
                cv(&[0, 0, 1]),
                cv(&[1, 1, 1]),
            ],
        )
        .unwrap();
        match enumerate_chambers(&roots) {
            Err(ArrangementError::NotSimplicial { wall_count, .. }) => {
                assert!(wall_count != 3);
            }
            other => panic!("expected NotSimplicial, got {:?}", other),
        }
    }
}
