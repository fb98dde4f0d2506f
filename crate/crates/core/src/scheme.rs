//! Cartan scheme construction from a crystallographic arrangement, the
//! Weyl groupoid generators, root systems at each object, axiom
//! verification, scheme equivalence, and the reverse direction back to
//! an arrangement.

use crate::arrangement::{
    enumerate_chambers, validate_root_set, ArrangementError, ChamberGraph, RootSet,
};
use crate::exact::{self, Covector, ExactError, Int, Rational, SquareMatrix};
use itertools::Itertools;
use num_traits::{Signed, Zero};
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SchemeError {
    #[error("wall crossing at chamber {sign_vector} needs a non-integer or negative coefficient for root {root}: input is not crystallographic")]
    IntegralityViolation { sign_vector: String, root: String },
    #[error("wall crossing at chamber {sign_vector} is not a bijection onto the adjacent basis")]
    BijectionFailure { sign_vector: String },
    #[error("chamber id {0} out of range")]
    BadChamber(usize),
    #[error("ordering must be a permutation of 0..rank")]
    BadOrdering,
    #[error(transparent)]
    Arrangement(#[from] ArrangementError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// Generalized Cartan matrix candidate; (M1)/(M2) are verified, not
/// assumed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanMatrix {
    pub entries: Vec<Vec<Int>>,
}

impl CartanMatrix {
    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn satisfies_m1(&self) -> bool {
        let two = Int::from(2);
        self.entries.iter().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, e)| if i == j { *e == two } else { !e.is_positive() })
        })
    }

    pub fn satisfies_m2(&self) -> bool {
        let r = self.rank();
        (0..r).all(|i| {
            (0..r).all(|j| !self.entries[i][j].is_zero() || self.entries[j][i].is_zero())
        })
    }
}

#[derive(Debug, Clone)]
pub struct SchemeObject {
    pub id: usize,
    /// The chamber this object's galleries end in.
    pub chamber: usize,
    /// The composite reflection map expressed in the base chamber's
    /// ordered basis; integral precisely because the input is
    /// crystallographic.
    pub labeling: SquareMatrix,
    pub cartan: CartanMatrix,
    /// `R^a`: coordinates of all of `R` (both signs) in the labeled basis.
    pub roots: BTreeSet<Vec<Int>>,
}

#[derive(Debug, Clone)]
pub struct CartanScheme {
    pub rank: usize,
    pub n_roots: usize,
    pub base_chamber: usize,
    /// Ordered basis of the base chamber fixed for labeling.
    pub base_basis: Vec<Covector>,
    pub objects: Vec<SchemeObject>,
    /// `reflections[i][a] = rho_i(a)`.
    pub reflections: Vec<Vec<usize>>,
}

impl CartanScheme {
    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn rho(&self, i: usize, a: usize) -> usize {
        self.reflections[i][a]
    }

    /// Positive part of `R^a`, the vectors with nonnegative coordinates.
    pub fn positive_roots_at(&self, a: usize) -> Vec<Vec<Int>> {
        self.objects[a]
            .roots
            .iter()
            .filter(|v| v.iter().all(|c| !c.is_negative()))
            .cloned()
            .collect()
    }
}

/// A morphism of the Weyl groupoid: a word in the generators together
/// with its integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    pub source: usize,
    pub target: usize,
    pub word: Vec<usize>,
    pub matrix: SquareMatrix,
}

/// The bijection `B^K -> B^{K'}` across one wall, with its nonnegative
/// integer coefficients.
#[derive(Debug, Clone)]
pub struct WallCrossing {
    pub chamber: usize,
    pub neighbor: usize,
    /// Position of the crossed wall inside the chamber's basis.
    pub wall_position: usize,
    /// Image of each basis element, in basis order.
    pub images: Vec<Covector>,
    /// `c_beta` per basis position; the crossed wall itself maps to its
    /// negative and has no coefficient.
    pub coefficients: Vec<Option<Int>>,
}

/// Computes `phi_{K,K'}` for the wall at `wall_position` of chamber `k`:
/// `beta -> c_beta * alpha + beta` with `c_beta` a nonnegative integer,
/// `alpha -> -alpha`. Fails when no such coefficient exists, which is the
/// signature of non-crystallographic input.
pub fn wall_crossing_map(
    roots: &RootSet,
    graph: &ChamberGraph,
    k: usize,
    wall_position: usize,
) -> Result<WallCrossing, SchemeError> {
    let chamber = graph.chambers.get(k).ok_or(SchemeError::BadChamber(k))?;
    let basis = chamber.basis_covectors(roots);
    let alpha = basis[wall_position].clone();
    let root_index = chamber.walls[wall_position].index;
    let neighbor = graph
        .neighbor_across(k, root_index)
        .ok_or(SchemeError::BadChamber(k))?;
    let target_basis: Vec<Covector> = graph.chambers[neighbor].basis_covectors(roots);
    let target_set: BTreeSet<&Covector> = target_basis.iter().collect();

    let mut images = Vec::with_capacity(basis.len());
    let mut coefficients = Vec::with_capacity(basis.len());
    for (pos, beta) in basis.iter().enumerate() {
        if pos == wall_position {
            let neg = alpha.neg();
            if !target_set.contains(&neg) {
                return Err(SchemeError::BijectionFailure {
                    sign_vector: chamber.sign_string(),
                });
            }
            images.push(neg);
            coefficients.push(None);
            continue;
        }
        // the unique c in N_0 with c*alpha + beta in B^{K'}
        let mut found: Option<(Int, Covector)> = None;
        for gamma in &target_basis {
            let diff = gamma.add(&beta.neg());
            let c = if diff.is_zero() {
                Rational::zero()
            } else if diff.is_parallel(&alpha) {
                let k0 = alpha
                    .coords()
                    .iter()
                    .position(|c| !c.is_zero())
                    .expect("roots are nonzero");
                &diff.coords()[k0] / &alpha.coords()[k0]
            } else {
                continue;
            };
            if c.is_integer() && !c.is_negative() {
                if found.is_some() {
                    return Err(SchemeError::BijectionFailure {
                        sign_vector: chamber.sign_string(),
                    });
                }
                found = Some((c.to_integer(), gamma.clone()));
            }
        }
        match found {
            Some((c, gamma)) => {
                images.push(gamma);
                coefficients.push(Some(c));
            }
            None => {
                return Err(SchemeError::IntegralityViolation {
                    sign_vector: chamber.sign_string(),
                    root: beta.to_string(),
                })
            }
        }
    }
    let distinct: BTreeSet<&Covector> = images.iter().collect();
    if distinct.len() != images.len() {
        return Err(SchemeError::BijectionFailure {
            sign_vector: chamber.sign_string(),
        });
    }
    Ok(WallCrossing {
        chamber: k,
        neighbor,
        wall_position,
        images,
        coefficients,
    })
}

/// The linear extension of a wall-crossing bijection, in standard dual
/// coordinates. Involutive with determinant -1.
pub fn reflection_matrix(
    roots: &RootSet,
    graph: &ChamberGraph,
    crossing: &WallCrossing,
) -> Result<SquareMatrix, SchemeError> {
    let basis = graph.chambers[crossing.chamber].basis_covectors(roots);
    let b = SquareMatrix::from_columns(&basis);
    let phi = SquareMatrix::from_columns(&crossing.images);
    Ok(phi.mul(&b.inverse()?))
}

struct BuildContext<'a> {
    roots: &'a RootSet,
    graph: &'a ChamberGraph,
    base_basis: Vec<Covector>,
    base_mat: SquareMatrix,
    base_inv: SquareMatrix,
}

impl BuildContext<'_> {
    /// Express a map on `V*` in the base chamber's ordered basis.
    fn in_base_basis(&self, std: &SquareMatrix) -> SquareMatrix {
        self.base_inv.mul(std).mul(&self.base_mat)
    }
}

/// Builds the connected simply connected Cartan scheme attached to a
/// crystallographic arrangement, anchored at chamber `k0`.
///
/// States are pairs (chamber, composite reflection map); objects are the
/// distinct composite maps, discovered by BFS over the generators. The
/// default basis ordering is lexicographic by coordinates; `ordering`
/// permutes it.
pub fn build_scheme(
    roots: &RootSet,
    graph: &ChamberGraph,
    k0: usize,
    ordering: Option<&[usize]>,
) -> Result<CartanScheme, SchemeError> {
    let rank = roots.rank();
    let chamber0 = graph.chambers.get(k0).ok_or(SchemeError::BadChamber(k0))?;

    let mut base_basis = chamber0.basis_covectors(roots);
    base_basis.sort();
    if let Some(perm) = ordering {
        let mut seen = vec![false; rank];
        if perm.len() != rank {
            return Err(SchemeError::BadOrdering);
        }
        for &p in perm {
            if p >= rank || seen[p] {
                return Err(SchemeError::BadOrdering);
            }
            seen[p] = true;
        }
        base_basis = perm.iter().map(|&p| base_basis[p].clone()).collect();
    }

    let base_mat = SquareMatrix::from_columns(&base_basis);
    let base_inv = base_mat.inverse()?;
    let ctx = BuildContext {
        roots,
        graph,
        base_basis: base_basis.clone(),
        base_mat,
        base_inv,
    };

    let mut keys: BTreeMap<SquareMatrix, usize> = BTreeMap::new();
    let mut states: Vec<(usize, SquareMatrix)> = Vec::new(); // (chamber, pi in std coords)
    let mut transitions: Vec<Vec<Option<usize>>> = Vec::new();
    let mut queue = VecDeque::new();

    let identity = SquareMatrix::identity(rank);
    keys.insert(ctx.in_base_basis(&identity), 0);
    states.push((k0, identity));
    transitions.push(vec![None; rank]);
    queue.push_back(0usize);

    while let Some(a) = queue.pop_front() {
        let (chamber_id, pi) = states[a].clone();
        let chamber = &ctx.graph.chambers[chamber_id];
        let labeled_basis: Vec<Covector> =
            ctx.base_basis.iter().map(|b| pi.apply(b)).collect();
        for i in 0..rank {
            let wall_position = chamber
                .basis_covectors(roots)
                .iter()
                .position(|w| *w == labeled_basis[i])
                .unwrap_or_else(|| {
                    panic!(
                        "labeled basis vector {} is not a wall of chamber {}",
                        labeled_basis[i], chamber_id
                    )
                });
            let crossing = wall_crossing_map(roots, graph, chamber_id, wall_position)?;
            let sigma = reflection_matrix(roots, graph, &crossing)?;
            let next_pi = sigma.mul(&pi);
            let key = ctx.in_base_basis(&next_pi);
            let b = match keys.get(&key) {
                Some(&b) => b,
                None => {
                    let b = states.len();
                    keys.insert(key, b);
                    states.push((crossing.neighbor, next_pi));
                    transitions.push(vec![None; rank]);
                    queue.push_back(b);
                    b
                }
            };
            transitions[a][i] = Some(b);
        }
    }

    // finiteness bound from the construction itself
    let bound = graph.len() * (1..=rank).product::<usize>();
    assert!(states.len() <= bound, "object count exceeds |K| * r!");

    let mut objects = Vec::with_capacity(states.len());
    for (id, (chamber_id, pi)) in states.iter().enumerate() {
        let labeled_basis: Vec<Covector> =
            ctx.base_basis.iter().map(|b| pi.apply(b)).collect();
        let cartan = cartan_from_crossings(&ctx, *chamber_id, &labeled_basis)?;
        let roots_at = root_coordinates(roots, &labeled_basis, chamber_id)?;
        let labeling = ctx.in_base_basis(pi);
        objects.push(SchemeObject {
            id,
            chamber: *chamber_id,
            labeling,
            cartan,
            roots: roots_at,
        });
    }

    let reflections = (0..rank)
        .map(|i| {
            transitions
                .iter()
                .map(|t| t[i].expect("BFS visits every generator"))
                .collect()
        })
        .collect();

    Ok(CartanScheme {
        rank,
        n_roots: roots.len(),
        base_chamber: k0,
        base_basis,
        objects,
        reflections,
    })
}

/// `C^a`: `c_{i,j} = -c_beta` read off from the crossing of the wall
/// labeled `i`, and `2` on the diagonal.
fn cartan_from_crossings(
    ctx: &BuildContext<'_>,
    chamber_id: usize,
    labeled_basis: &[Covector],
) -> Result<CartanMatrix, SchemeError> {
    let rank = labeled_basis.len();
    let chamber = &ctx.graph.chambers[chamber_id];
    let chamber_basis = chamber.basis_covectors(ctx.roots);
    let position_of = |v: &Covector| chamber_basis.iter().position(|w| w == v);
    let mut entries = vec![vec![Int::from(0); rank]; rank];
    for i in 0..rank {
        let wall_position = position_of(&labeled_basis[i]).expect("labeled basis is B^K");
        let crossing = wall_crossing_map(ctx.roots, ctx.graph, chamber_id, wall_position)?;
        for j in 0..rank {
            if j == i {
                entries[i][j] = Int::from(2);
                continue;
            }
            let pos_j = position_of(&labeled_basis[j]).expect("labeled basis is B^K");
            let c = crossing.coefficients[pos_j]
                .clone()
                .expect("off-wall positions carry coefficients");
            entries[i][j] = -c;
        }
    }
    Ok(CartanMatrix { entries })
}

/// Coordinates of all of `R` in the labeled basis; integral by axiom (I).
fn root_coordinates(
    roots: &RootSet,
    labeled_basis: &[Covector],
    chamber_id: &usize,
) -> Result<BTreeSet<Vec<Int>>, SchemeError> {
    let _ = chamber_id;
    let mut out = BTreeSet::new();
    for x in roots.positive_roots() {
        let coeffs = exact::solve_linear(labeled_basis, x)?;
        if !exact::is_integer_vector(&coeffs) {
            return Err(SchemeError::IntegralityViolation {
                sign_vector: String::new(),
                root: x.to_string(),
            });
        }
        let v: Vec<Int> = coeffs.iter().map(|c| c.to_integer()).collect();
        let neg: Vec<Int> = v.iter().map(|c| -c).collect();
        out.insert(v);
        out.insert(neg);
    }
    Ok(out)
}

/// `s_i^a` as an integer matrix: `alpha_j -> alpha_j - c^a_{ij} alpha_i`.
pub fn generator_matrix(scheme: &CartanScheme, a: usize, i: usize) -> Morphism {
    let rank = scheme.rank;
    let cartan = &scheme.objects[a].cartan;
    let rows: Vec<Vec<Rational>> = (0..rank)
        .map(|k| {
            (0..rank)
                .map(|j| {
                    let mut e = if k == j { Rational::from(Int::from(1)) } else { Rational::zero() };
                    if k == i {
                        e -= Rational::from(cartan.entries[i][j].clone());
                    }
                    e
                })
                .collect()
        })
        .collect();
    Morphism {
        source: a,
        target: scheme.rho(i, a),
        word: vec![i],
        matrix: SquareMatrix::from_rows(rows),
    }
}

/// Composite morphism of a word applied left to right from `a`.
pub fn morphism_of_word(scheme: &CartanScheme, a: usize, word: &[usize]) -> Morphism {
    let mut current = a;
    let mut matrix = SquareMatrix::identity(scheme.rank);
    for &i in word {
        let step = generator_matrix(scheme, current, i);
        matrix = step.matrix.mul(&matrix);
        current = step.target;
    }
    Morphism {
        source: a,
        target: current,
        word: word.to_vec(),
        matrix,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub witnesses: Vec<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn push(&mut self, name: &str, witnesses: Vec<String>) {
        self.checks.push(Check {
            name: name.to_string(),
            passed: witnesses.is_empty(),
            witnesses,
        });
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// (M1), (M2) per object; (C1), (C2) per object and index.
pub fn verify_scheme_axioms(scheme: &CartanScheme) -> VerificationReport {
    let mut report = VerificationReport::default();
    let mut m1 = Vec::new();
    let mut m2 = Vec::new();
    for obj in &scheme.objects {
        if !obj.cartan.satisfies_m1() {
            m1.push(format!("object {}: C^a violates (M1)", obj.id));
        }
        if !obj.cartan.satisfies_m2() {
            m2.push(format!("object {}: C^a violates (M2)", obj.id));
        }
    }
    report.push("M1", m1);
    report.push("M2", m2);

    let mut c1 = Vec::new();
    let mut c2 = Vec::new();
    for a in 0..scheme.len() {
        for i in 0..scheme.rank {
            let b = scheme.rho(i, a);
            if scheme.rho(i, b) != a {
                c1.push(format!("rho_{}^2 moves object {}", i, a));
            }
            for j in 0..scheme.rank {
                if scheme.objects[a].cartan.entries[i][j]
                    != scheme.objects[b].cartan.entries[i][j]
                {
                    c2.push(format!(
                        "c_{{{},{}}} differs between object {} and rho_{}({}) = {}",
                        i, j, a, i, a, b
                    ));
                }
            }
        }
    }
    report.push("C1", c1);
    report.push("C2", c2);
    report
}

/// `m_{i,j}^a`: number of roots of `R^a` in the closed quadrant spanned
/// by coordinates `i` and `j`.
pub fn m_ij(scheme: &CartanScheme, a: usize, i: usize, j: usize) -> usize {
    assert_ne!(i, j);
    scheme.objects[a]
        .roots
        .iter()
        .filter(|v| {
            v.iter()
                .enumerate()
                .all(|(k, c)| (k == i || k == j) && !c.is_negative() || c.is_zero())
        })
        .filter(|v| v.iter().any(|c| !c.is_zero()))
        .count()
}

/// Walks the alternating gallery `i, j, i, j, ...` from `a` and returns
/// the first step at which the walk is back at its starting chamber.
/// Checks that the composite map is the identity there (the walk is back
/// at the starting object).
pub fn gallery_closure(
    scheme: &CartanScheme,
    a: usize,
    i: usize,
    j: usize,
) -> (usize, bool) {
    let start_chamber = scheme.objects[a].chamber;
    let mut current = a;
    let mut steps = 0;
    loop {
        let gen = if steps % 2 == 0 { i } else { j };
        current = scheme.rho(gen, current);
        steps += 1;
        if scheme.objects[current].chamber == start_chamber {
            return (steps, current == a);
        }
        if steps > 2 * scheme.len() {
            return (steps, false);
        }
    }
}

/// (R1)-(R4) for the root sets attached by `build_scheme`.
pub fn verify_root_system(scheme: &CartanScheme) -> VerificationReport {
    let mut report = VerificationReport::default();
    let rank = scheme.rank;

    let mut r1 = Vec::new();
    for obj in &scheme.objects {
        let pos: Vec<&Vec<Int>> = obj
            .roots
            .iter()
            .filter(|v| v.iter().all(|c| !c.is_negative()))
            .collect();
        let neg: BTreeSet<Vec<Int>> = pos
            .iter()
            .map(|v| v.iter().map(|c| -c).collect())
            .collect();
        let rebuilt: BTreeSet<Vec<Int>> =
            pos.iter().map(|v| (*v).clone()).chain(neg).collect();
        if rebuilt != obj.roots || 2 * pos.len() != obj.roots.len() {
            r1.push(format!("object {}: R^a is not R^a_+ u -R^a_+", obj.id));
        }
        if pos.len() != scheme.n_roots {
            r1.push(format!(
                "object {}: |R^a_+| = {} but n = {}",
                obj.id,
                pos.len(),
                scheme.n_roots
            ));
        }
    }
    report.push("R1", r1);

    let mut r2 = Vec::new();
    for obj in &scheme.objects {
        for i in 0..rank {
            let on_axis: Vec<&Vec<Int>> = obj
                .roots
                .iter()
                .filter(|v| v.iter().enumerate().all(|(k, c)| k == i || c.is_zero()))
                .collect();
            let mut simple = vec![Int::from(0); rank];
            simple[i] = Int::from(1);
            let neg_simple: Vec<Int> = simple.iter().map(|c| -c).collect();
            let expected: BTreeSet<Vec<Int>> = [simple, neg_simple].into_iter().collect();
            let got: BTreeSet<Vec<Int>> = on_axis.into_iter().cloned().collect();
            if got != expected {
                r2.push(format!(
                    "object {}: R^a cap Z alpha_{} != {{+-alpha_{}}}",
                    obj.id, i, i
                ));
            }
        }
    }
    report.push("R2", r2);

    let mut r3 = Vec::new();
    for a in 0..scheme.len() {
        for i in 0..rank {
            let s = generator_matrix(scheme, a, i);
            let image: BTreeSet<Vec<Int>> = scheme.objects[a]
                .roots
                .iter()
                .map(|v| apply_int(&s.matrix, v))
                .collect();
            if image != scheme.objects[s.target].roots {
                r3.push(format!(
                    "object {}: s_{} does not map R^a onto R^rho_{}(a)",
                    a, i, i
                ));
            }
        }
    }
    report.push("R3", r3);

    let mut r4 = Vec::new();
    for a in 0..scheme.len() {
        for i in 0..rank {
            for j in 0..rank {
                if i == j {
                    continue;
                }
                let m = m_ij(scheme, a, i, j);
                let mut current = a;
                for _ in 0..m {
                    current = scheme.rho(j, scheme.rho(i, current));
                }
                if current != a {
                    r4.push(format!(
                        "object {}: (rho_{} rho_{})^{} != id",
                        a, i, j, m
                    ));
                }
            }
        }
    }
    report.push("R4", r4);
    report
}

fn apply_int(m: &SquareMatrix, v: &[Int]) -> Vec<Int> {
    let rank = m.dim();
    (0..rank)
        .map(|k| {
            let mut acc = Rational::zero();
            for (j, c) in v.iter().enumerate() {
                acc += m.entry(k, j) * Rational::from(c.clone());
            }
            acc.to_integer()
        })
        .collect()
}

/// Connectivity of the generator graph on objects.
pub fn is_connected(scheme: &CartanScheme) -> bool {
    if scheme.is_empty() {
        return true;
    }
    let mut seen = vec![false; scheme.len()];
    let mut queue = VecDeque::from([0usize]);
    seen[0] = true;
    while let Some(a) = queue.pop_front() {
        for i in 0..scheme.rank {
            let b = scheme.rho(i, a);
            if !seen[b] {
                seen[b] = true;
                queue.push_back(b);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Simple connectedness via loop closure: over a spanning tree of the
/// generator graph, every non-tree edge closes a loop whose composite
/// labeling matrix must be the identity. Returns a witness loop when one
/// fails.
pub fn is_simply_connected(scheme: &CartanScheme) -> (bool, Option<String>) {
    if scheme.is_empty() {
        return (true, None);
    }
    // tree paths as words from object 0
    let mut path: Vec<Option<Vec<usize>>> = vec![None; scheme.len()];
    path[0] = Some(vec![]);
    let mut tree_edges = BTreeSet::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(a) = queue.pop_front() {
        for i in 0..scheme.rank {
            let b = scheme.rho(i, a);
            if path[b].is_none() {
                let mut w = path[a].clone().unwrap();
                w.push(i);
                path[b] = Some(w);
                tree_edges.insert((a.min(b), a.max(b), i));
                queue.push_back(b);
            }
        }
    }
    for a in 0..scheme.len() {
        for i in 0..scheme.rank {
            let b = scheme.rho(i, a);
            if tree_edges.contains(&(a.min(b), a.max(b), i)) {
                continue;
            }
            // loop: 0 -> a, edge i, b -> 0 (tree path reversed; generators
            // are involutions so the reverse word is the reversed word)
            let mut word = path[a].clone().unwrap();
            word.push(i);
            let mut back = path[b].clone().unwrap();
            back.reverse();
            word.extend(back);
            let loop_morphism = morphism_of_word(scheme, 0, &word);
            if loop_morphism.target != 0 || !loop_morphism.matrix.is_identity() {
                return (false, Some(format!("non-trivial loop {:?} at object 0", word)));
            }
        }
    }
    (true, None)
}

/// Scheme equivalence per the two compatibility conditions: a bijection
/// of indices and a bijection of objects preserving the reflections and
/// the Cartan matrices. Exhaustive over index permutations and anchor
/// objects, propagated by BFS.
pub fn scheme_equivalence(
    s1: &CartanScheme,
    s2: &CartanScheme,
) -> Option<(Vec<usize>, Vec<usize>)> {
    if s1.rank != s2.rank || s1.len() != s2.len() {
        return None;
    }
    let rank = s1.rank;
    for phi0 in (0..rank).permutations(rank) {
        // prune: multisets of relabeled Cartan matrices must agree
        let mut m1: Vec<Vec<Vec<Int>>> = s1
            .objects
            .iter()
            .map(|o| {
                (0..rank)
                    .map(|i| {
                        (0..rank)
                            .map(|j| o.cartan.entries[i][j].clone())
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let mut m2: Vec<Vec<Vec<Int>>> = s2
            .objects
            .iter()
            .map(|o| {
                (0..rank)
                    .map(|i| {
                        (0..rank)
                            .map(|j| {
                                o.cartan.entries[phi0[i]][phi0[j]].clone()
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        m1.sort();
        m2.sort();
        if m1 != m2 {
            continue;
        }

        'anchor: for anchor in 0..s2.len() {
            let mut phi1: Vec<Option<usize>> = vec![None; s1.len()];
            let mut hit = vec![false; s2.len()];
            phi1[0] = Some(anchor);
            hit[anchor] = true;
            let mut queue = VecDeque::from([0usize]);
            while let Some(a) = queue.pop_front() {
                let b = phi1[a].unwrap();
                // Cartan condition at a
                for i in 0..rank {
                    for j in 0..rank {
                        if s1.objects[a].cartan.entries[i][j]
                            != s2.objects[b].cartan.entries[phi0[i]][phi0[j]]
                        {
                            continue 'anchor;
                        }
                    }
                }
                for i in 0..rank {
                    let a2 = s1.rho(i, a);
                    let b2 = s2.rho(phi0[i], b);
                    match phi1[a2] {
                        Some(existing) => {
                            if existing != b2 {
                                continue 'anchor;
                            }
                        }
                        None => {
                            if hit[b2] {
                                continue 'anchor;
                            }
                            phi1[a2] = Some(b2);
                            hit[b2] = true;
                            queue.push_back(a2);
                        }
                    }
                }
            }
            if phi1.iter().all(|p| p.is_some()) {
                return Some((
                    phi0.clone(),
                    phi1.into_iter().map(|p| p.unwrap()).collect(),
                ));
            }
        }
    }
    None
}

/// The reverse direction of the correspondence: the positive roots at an
/// object, read as covectors with integer coordinates, form a
/// crystallographic arrangement again.
pub fn arrangement_from_object(
    scheme: &CartanScheme,
    a: usize,
) -> Result<RootSet, ArrangementError> {
    let positive: Vec<Covector> = scheme
        .positive_roots_at(a)
        .into_iter()
        .map(|v| {
            Covector::new(
                v.into_iter()
                    .map(Rational::from)
                    .collect(),
            )
        })
        .collect();
    validate_root_set(scheme.rank, positive)
}

/// Convenience: enumerate chambers, pick the seed chamber as base, build.
pub fn build_scheme_from_roots(roots: &RootSet) -> Result<CartanScheme, SchemeError> {
    let graph = enumerate_chambers(roots)?;
    build_scheme(roots, &graph, 0, None)
}
