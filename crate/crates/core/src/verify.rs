//! Reproduction suite: one check per claim about the example families and
//! random digraphs, each reporting what was expected and what was found.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use num_traits::Signed;

use crate::chains::{allowed_paths, in_omega, magnitude_partial, omega_basis, Chain, ElementaryPath};
use crate::digraph::{gen_family, multisquare, quasi_metric, random_digraph, Digraph, Family};
use crate::extensions::DEFAULT_MUTATION_CAP;
use crate::homology::{boundary_matrix, homology_report};
use crate::inductive::{dimension_two_elements, inductive_generators, inductive_tower};
use crate::linalg::{hermite_kernel, lattice_hnf, rank, ExactMatrix, Ring, Scalar, Vector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub id: usize,
    pub title: &'static str,
    pub expected: String,
    pub actual: String,
    pub passed: bool,
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} [{:>2}] {}: expected {}, got {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.expected,
            self.actual
        )
    }
}

pub const CHECK_COUNT: usize = 12;

pub fn run_all() -> Vec<CheckResult> {
    (1..=CHECK_COUNT).map(run).collect()
}

/// # Panics
/// Unless `1 ≤ id ≤ CHECK_COUNT`.
pub fn run(id: usize) -> CheckResult {
    match id {
        1 => low_dimensions(),
        2 => trapezohedron(),
        3 => multisquare_chain(),
        4 => multisquare_z3(),
        5 => kernel_characterization(),
        6 => extension_membership(),
        7 => inductive_span_mod_p(),
        8 => inductive_lattice_z(),
        9 => multiplicity(),
        10 => euler_separation(),
        11 => dimension_two(),
        12 => euler_boundaries(),
        _ => panic!("no check numbered {id}"),
    }
}

fn ring(spec: &str) -> Ring {
    spec.parse().expect("valid ring spec")
}

fn all_rings() -> [Ring; 4] {
    [ring("q"), ring("z"), ring("zp:2"), ring("zp:3")]
}

/// `count` random digraphs on 3 to 8 vertices with edge probability 2/5.
pub fn random_instances(count: usize, seed: u64) -> Vec<Digraph> {
    (0..count).map(|i| random_digraph(3 + i % 6, 2, 5, seed + i as u64)).collect()
}

fn tally(id: usize, title: &'static str, total: usize, failures: Vec<String>) -> CheckResult {
    let ok = total - failures.len();
    let mut actual = format!("{ok}/{total}");
    if let Some(first) = failures.first() {
        actual.push_str(&format!(" (first failure: {first})"));
    }
    CheckResult { id, title, expected: format!("{total}/{total}"), actual, passed: failures.is_empty() }
}

/// The matrix sending allowed `n`-paths to the non-allowed part of their
/// boundary; `Ω_n` is its kernel. Built on all paths at once, with no blocks.
fn unblocked_constraints(g: &Digraph, n: usize) -> (Vec<ElementaryPath>, ExactMatrix) {
    let paths = allowed_paths(g, n);
    let mut rows: BTreeMap<ElementaryPath, usize> = BTreeMap::new();
    let mut entries = Vec::new();
    for (c, p) in paths.iter().enumerate() {
        for i in 0..=n {
            let q = p.without(i);
            if n == 0 || !q.is_regular() || q.is_allowed(g) {
                continue;
            }
            let len = rows.len();
            let r = *rows.entry(q).or_insert(len);
            entries.push((r, c, if i % 2 == 0 { 1 } else { -1 }));
        }
    }
    let mut m = ExactMatrix::zeros(rows.len(), paths.len());
    for (r, c, s) in entries {
        let x = m.get(r, c) + Scalar::from_integer(s.into());
        m.set(r, c, x);
    }
    (paths, m)
}

fn omega_dim_oracle(g: &Digraph, n: usize, ring: Ring) -> usize {
    let (paths, m) = unblocked_constraints(g, n);
    paths.len() - if m.n_rows() == 0 { 0 } else { rank(&m, ring) }
}

fn chain_vector(c: &Chain, paths: &[ElementaryPath]) -> Vector {
    Vector::from_entries(paths.len(), c.terms().map(|(p, x)| (paths.binary_search(p).expect("allowed path"), x.clone())))
}

fn low_dimensions() -> CheckResult {
    let mut failures = Vec::new();
    let mut total = 0;
    for (i, g) in random_instances(20, 100).iter().enumerate() {
        for r in all_rings() {
            total += 1;
            let (d0, d1) = (omega_basis(g, 0, r).len(), omega_basis(g, 1, r).len());
            if (d0, d1) != (g.vertex_count(), g.edge_count()) {
                failures.push(format!("instance {i} over {r}: ({d0}, {d1})"));
            }
        }
    }
    tally(1, "dim Omega_0 = |V| and dim Omega_1 = |E| on random digraphs", total, failures)
}

fn trapezohedron() -> CheckResult {
    let mut failures = Vec::new();
    let mut total = 0;
    for t in 2..=5 {
        let g = gen_family(Family::Trapezohedron, t).unwrap();
        for r in all_rings() {
            total += 1;
            let rep = homology_report(&g, Some(4), r).unwrap();
            if rep.omega_dims[3] != 1 || rep.betti[1..=4].iter().any(|&b| b != 0) {
                failures.push(format!("t={t} over {r}: dims {:?}, betti {:?}", rep.omega_dims, rep.betti));
            }
        }
    }
    tally(2, "trapezohedra: rank-one Omega_3 and vanishing H_1..H_4", total, failures)
}

fn multisquare_chain() -> CheckResult {
    let mut failures = Vec::new();
    let mut total = 0;
    for t in 3..=5 {
        let g = gen_family(Family::MultisquareChain, t).unwrap();
        for r in [ring("q"), ring("zp:2")] {
            total += 1;
            let d = omega_basis(&g, t, r).len();
            if d != 2 {
                failures.push(format!("t={t} over {r}: {d}"));
            }
        }
    }
    tally(3, "multisquare chains: dim Omega_t = 2", total, failures)
}

fn multisquare_z3() -> CheckResult {
    let g = multisquare();
    let dims: Vec<usize> = [ring("zp:3"), ring("q")].iter().map(|&r| omega_basis(&g, 2, r).len()).collect();
    CheckResult {
        id: 4,
        title: "multisquare: dim Omega_2 over Z/3 and Q",
        expected: "[2, 2]".into(),
        actual: format!("{dims:?}"),
        passed: dims == [2, 2],
    }
}

fn kernel_characterization() -> CheckResult {
    let mut failures = Vec::new();
    let mut total = 0;
    for (k, g) in random_instances(20, 200).iter().enumerate() {
        let d = quasi_metric(g);
        for r in all_rings() {
            for n in 2..=4 {
                for x in omega_basis(g, n, r).chains() {
                    total += 1;
                    if let Some(i) = (1..n).find(|&i| !magnitude_partial(x, i, &d).is_zero()) {
                        failures.push(format!("instance {k}, n={n}, {r}: partial {i} of {x:?}"));
                    }
                }
            }
        }
    }
    tally(5, "Omega basis chains are killed by each magnitude partial", total, failures)
}

fn extension_membership() -> CheckResult {
    let mut failures = Vec::new();
    let mut total = 0;
    for (k, g) in random_instances(10, 300).iter().enumerate() {
        for r in all_rings() {
            let levels = match inductive_tower(g, 4, r, crate::extensions::Direction::Upper, DEFAULT_MUTATION_CAP) {
                Ok(l) => l,
                Err(e) => {
                    total += 1;
                    failures.push(format!("instance {k} over {r}: {e}"));
                    continue;
                }
            };
            for level in &levels[1..] {
                for e in &level.set.elements {
                    total += 1;
                    let s = &e.structure;
                    let ok = s.is_complete(e.extension_vertex, g).unwrap_or(false)
                        && s.extend_over(e.extension_vertex, g).is_ok_and(|y| in_omega(&y, g) && y == e.chain);
                    if !ok {
                        failures.push(format!("instance {k} over {r}: {:?}", e.chain));
                    }
                }
            }
        }
    }
    tally(6, "extensions over extracted complete structures lie in Omega", total, failures)
}

fn inductive_span_mod_p() -> CheckResult {
    let mut failures = Vec::new();
    let mut total = 0;
    for (k, g) in random_instances(10, 400).iter().enumerate() {
        for r in [ring("zp:2"), ring("zp:3")] {
            let levels = inductive_tower(g, 4, r, crate::extensions::Direction::Upper, DEFAULT_MUTATION_CAP);
            for n in 0..=4 {
                total += 1;
                let expected = omega_dim_oracle(g, n, r);
                let got = match &levels {
                    Ok(l) => {
                        let paths = allowed_paths(g, n);
                        let cols: Vec<Vector> = l[n].set.elements.iter().map(|e| chain_vector(&e.chain, &paths)).collect();
                        if cols.is_empty() { 0 } else { rank(&ExactMatrix::from_columns(paths.len(), &cols), r) }
                    }
                    Err(_) => usize::MAX,
                };
                if got != expected {
                    failures.push(format!("instance {k}, n={n}, {r}: rank {got} vs dim {expected}"));
                }
            }
        }
    }
    tally(7, "inductive generators span Omega_n over Z/2 and Z/3, n <= 4", total, failures)
}

fn inductive_lattice_z() -> CheckResult {
    let mut failures = Vec::new();
    let z = ring("z");
    for (k, g) in random_instances(10, 500).iter().enumerate() {
        let (paths, m) = unblocked_constraints(g, 3);
        let kernel: Vec<Vector> = if m.n_rows() == 0 {
            (0..paths.len()).map(|i| Vector::from_entries(paths.len(), [(i, Scalar::from_integer(1.into()))])).collect()
        } else {
            hermite_kernel(&m)
        };
        let target = lattice_hnf(&kernel, paths.len());
        match inductive_generators(g, 3, z, crate::extensions::Direction::Upper, DEFAULT_MUTATION_CAP) {
            Ok(set) => {
                let gens: Vec<Vector> = set.elements.iter().map(|e| chain_vector(&e.chain, &paths)).collect();
                if lattice_hnf(&gens, paths.len()) != target {
                    failures.push(format!("instance {k}: lattices differ"));
                }
            }
            Err(e) => failures.push(format!("instance {k}: {e}")),
        }
    }
    tally(8, "inductive generators span the lattice Omega_3(G; Z)", 10, failures)
}

fn multiplicity() -> CheckResult {
    let mut failures = Vec::new();
    let z = ring("z");
    for t in [2usize, 3] {
        let g = gen_family(Family::Multiplicity, t).unwrap();
        let dims: Vec<usize> = (4..=6).map(|n| omega_basis(&g, n, z).len()).collect();
        if dims != [1, 0, 0] {
            failures.push(format!("t={t}: dims of Omega_4..6 {dims:?}"));
            continue;
        }
        match inductive_tower(&g, 4, z, crate::extensions::Direction::Upper, DEFAULT_MUTATION_CAP) {
            Ok(levels) => {
                let d4 = boundary_matrix(&g, &levels[4].basis, &levels[3].basis);
                let target = Scalar::from_integer((t as i64).into());
                if !d4.entries().any(|(_, _, x)| x.abs() == target) {
                    failures.push(format!("t={t}: no entry of size {t} in boundary"));
                }
            }
            Err(e) => failures.push(format!("t={t}: {e}")),
        }
    }
    tally(9, "multiplicity digraphs: Omega_4 rank one with a boundary entry of size t", 2, failures)
}

fn euler_separation() -> CheckResult {
    let mut failures = Vec::new();
    let mut total = 0;
    let fields = [ring("q"), ring("zp:2"), ring("zp:3"), ring("zp:5")];
    for t in [2usize, 3, 4, 6] {
        let g = gen_family(Family::Euler, t).unwrap();
        let reports: Vec<_> = fields.iter().map(|&r| homology_report(&g, None, r).unwrap()).collect();
        let chi_q = reports[0].euler.unwrap();
        for (r, rep) in fields.iter().zip(&reports) {
            total += 1;
            let divides = r.characteristic() != 0 && t as u64 % r.characteristic() == 0;
            let want4 = usize::from(divides);
            let want_chi = chi_q + i64::from(divides);
            let d4 = rep.omega_dims.get(4).copied().unwrap_or(0);
            if d4 != want4 || rep.omega_dims[3] != 5 * t - 2 || rep.euler != Some(want_chi) {
                failures.push(format!("t={t} over {r}: dims {:?}, euler {:?}", rep.omega_dims, rep.euler));
            }
        }
    }
    tally(10, "Euler digraphs: Omega_4 detects primes dividing t, chi shifts by one", total, failures)
}

fn dimension_two() -> CheckResult {
    let mut failures = Vec::new();
    let mut total = 0;
    for (k, g) in random_instances(10, 600).iter().enumerate() {
        let paths = allowed_paths(g, 2);
        for r in all_rings() {
            total += 1;
            let shapes: HashSet<Chain> = dimension_two_elements(g, r).into_iter().collect();
            let set = match inductive_generators(g, 2, r, crate::extensions::Direction::Upper, DEFAULT_MUTATION_CAP) {
                Ok(s) => s,
                Err(e) => {
                    failures.push(format!("instance {k} over {r}: {e}"));
                    continue;
                }
            };
            let inside = set.elements.iter().all(|e| shapes.contains(&e.chain.sign_normalized().0));
            let cols = |cs: Vec<&Chain>| -> usize {
                let v: Vec<Vector> = cs.into_iter().map(|c| chain_vector(c, &paths)).collect();
                if v.is_empty() { 0 } else { rank(&ExactMatrix::from_columns(paths.len(), &v), r) }
            };
            let shape_rank = cols(shapes.iter().collect());
            let gen_rank = cols(set.elements.iter().map(|e| &e.chain).collect());
            if !inside || shape_rank != gen_rank {
                failures.push(format!("instance {k} over {r}: inside={inside}, ranks {gen_rank} vs {shape_rank}"));
            }
        }
    }
    tally(11, "dimension-2 generators are double edges, triangles and squares", total, failures)
}

fn euler_boundaries() -> CheckResult {
    let mut failures = Vec::new();
    let mut total = 0;
    let rings = [ring("q"), ring("z"), ring("zp:2"), ring("zp:3"), ring("zp:5")];
    for t in [2usize, 3, 4, 6] {
        let g = gen_family(Family::Euler, t).unwrap();
        let reports: Vec<_> = rings.iter().map(|&r| homology_report(&g, None, r).unwrap()).collect();
        for (r, rep) in rings.iter().zip(&reports) {
            total += 1;
            let zero = (2..rep.boundaries.len())
                .all(|n| rep.boundaries[n - 1].mul(&rep.boundaries[n], *r).is_ok_and(|m| m.is_zero()));
            let agree = rep.omega_dims.iter().enumerate().all(|(i, &d)| i == 4 || d == reports[0].omega_dims[i]);
            if !zero || !agree {
                failures.push(format!("t={t} over {r}: boundary squares to zero {zero}, off-degree-4 dims agree {agree}"));
            }
        }
    }
    tally(12, "Euler digraphs: boundary squares to zero, dims field-independent off degree 4", total, failures)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_matches_blocks() {
        for g in random_instances(6, 7) {
            for n in 0..=3 {
                for r in all_rings() {
                    assert_eq!(omega_dim_oracle(&g, n, r), omega_basis(&g, n, r).len());
                }
            }
        }
    }

    #[test]
    fn cheap_checks_pass() {
        for id in [3, 4] {
            let c = run(id);
            assert!(c.passed, "{c}");
        }
    }
}
