//! Self-checks comparing independent computations over generated graphs.
//! Each check reports how many cases it ran and the first failure.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::error::Result;
use crate::martin::{
    closed_form_circulant, closed_form_k4, closed_form_k5_power, closed_form_prism, martin_invariant,
    martin_polynomial, MartinCache, MartinEngine, MartinOptions, PivotPolicy,
};
use crate::multigraph::{
    apply_transition, families, is_isomorphic, loop_transition_classes, regular_multigraphs, LoopPolicy, Multigraph,
};
use crate::oracle::{count_tree_partitions, diagonal_coefficient, planar_dual, MarkedGraph, Oracle};
use crate::residues::{
    c2, c2_from_martin, c2_from_trees_forests, point_count, permanent_square_residue_with,
    residue_from_martin_value,
};
use crate::structure::{
    cyclic_connectivity_check, decompose_with, edge_connectivity, four_vertex_cuts, nontrivial_cuts,
    side_edges, split_edge_cut, split_three_vertex_cut, three_vertex_cuts, twist,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub cases: usize,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status}\t{}\t{} cases\t{}", self.name, self.cases, self.detail)
    }
}

/// Counts cases and remembers the first failure.
struct Tally {
    name: String,
    cases: usize,
    failure: Option<String>,
    notes: Vec<String>,
}

impl Tally {
    fn new(name: &str) -> Self {
        Tally { name: name.into(), cases: 0, failure: None, notes: Vec::new() }
    }

    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(what());
        }
    }

    fn error(&mut self, context: &str, e: crate::Error) {
        self.expect(false, || format!("{context}: {e}"));
    }

    fn check(self) -> Check {
        let passed = self.failure.is_none() && self.cases > 0;
        let detail = self.failure.unwrap_or_else(|| self.notes.join("; "));
        Check { name: self.name, passed, cases: self.cases, detail }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Identities,
    Oracles,
    Residues,
    ClosedForms,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Identities, Suite::Oracles, Suite::Residues, Suite::ClosedForms];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Identities => "identities",
            Suite::Oracles => "oracles",
            Suite::Residues => "residues",
            Suite::ClosedForms => "closed-forms",
        }
    }
}

/// All 4-regular multigraphs, loops allowed, with `min_n..=max_n` vertices.
pub fn four_regular_graphs(min_n: usize, max_n: usize) -> Vec<Multigraph> {
    (min_n..=max_n).flat_map(|n| regular_multigraphs(n, 4, LoopPolicy::Allow)).collect()
}

/// Connected loopless 4-regular graphs whose only 4-edge cuts are trivial.
pub fn cyclically_six_connected(n: usize) -> Vec<Multigraph> {
    regular_multigraphs(n, 4, LoopPolicy::Forbid)
        .into_iter()
        .filter(|g| g.is_connected() && cyclic_connectivity_check(g, 6).is_ok_and(|c| c.connected))
        .collect()
}

fn factorial(n: u32) -> BigInt {
    (2..=n).fold(BigInt::one(), |a, i| a * i)
}

fn plain_engine() -> MartinEngine {
    MartinEngine::with_cache(
        Arc::new(MartinCache::new()),
        MartinOptions { pivot: PivotPolicy::FewestTransitions, shortcuts: false },
    )
}

/// `k! M(G)` equals the ordered count of partitions of `G \ v` into `k`
/// spanning trees, for every vertex `v`.
pub fn check_tree_partitions(graphs: &[Multigraph]) -> Check {
    let mut t = Tally::new("tree partitions equal k! M(G)");
    for g in graphs.iter().filter(|g| g.vertex_count() >= 2) {
        let Ok(k) = g.half_degree() else { continue };
        let m = match martin_invariant(g) {
            Ok(m) => m,
            Err(e) => {
                t.error(&g.to_string(), e);
                continue;
            }
        };
        let want = m * BigRational::from_integer(factorial(k));
        for v in 0..g.vertex_count() {
            match count_tree_partitions(&g.delete_vertex(v).unwrap(), k, true) {
                Ok(n) => t.expect(BigRational::from_integer(n.into()) == want, || {
                    format!("{g} at {v}: {n} partitions, k! M = {want}")
                }),
                Err(e) => t.error(&g.to_string(), e),
            }
        }
    }
    t.check()
}

/// Transition-system enumeration agrees with the recursion, for the
/// polynomial and for the invariant.
pub fn check_brute_force(graphs: &[Multigraph], oracle: Oracle) -> Check {
    let mut t = Tally::new("brute-force Martin polynomial equals recursion");
    for g in graphs {
        let b = match oracle.martin_brute_force(g) {
            Ok(b) => b,
            Err(crate::Error::BudgetExceeded { .. }) => continue,
            Err(e) => {
                t.error(&g.to_string(), e);
                continue;
            }
        };
        match martin_polynomial(g) {
            Ok(p) => t.expect(p == b.polynomial, || format!("{g}: {} vs {}", b.polynomial, p)),
            Err(e) => t.error(&g.to_string(), e),
        }
        if let (Some(inv), true) = (&b.invariant, g.is_connected()) {
            match martin_invariant(g) {
                Ok(m) => t.expect(&m == inv, || format!("{g}: M {inv} vs {m}")),
                Err(e) => t.error(&g.to_string(), e),
            }
        }
    }
    t.check()
}

/// `diag(G \ v, k, r) (r!)^(k(n-2)) = (kr)! M(G^[r])`.
pub fn check_diagonal(graphs: &[Multigraph], r: u32) -> Check {
    let mut t = Tally::new(&format!("diagonal coefficient gives M(G^[{r}])"));
    for g in graphs.iter().filter(|g| g.vertex_count() >= 2) {
        let Ok(k) = g.half_degree() else { continue };
        let n = g.vertex_count() as u32;
        let m = match martin_invariant(&g.duplicate(r)) {
            Ok(m) => m,
            Err(e) => {
                t.error(&g.to_string(), e);
                continue;
            }
        };
        match diagonal_coefficient(&g.delete_vertex(0).unwrap(), k, r) {
            Ok(d) => {
                let lhs = BigInt::from(d) * num_traits::pow(factorial(r), (k * (n - 2)) as usize);
                let rhs = m * BigRational::from_integer(factorial(k * r));
                t.expect(BigRational::from_integer(lhs.clone()) == rhs, || format!("{g}: {lhs} vs {rhs}"));
            }
            Err(e) => t.error(&g.to_string(), e),
        }
    }
    t.check()
}

/// `M > 0` exactly for `2k`-edge-connected graphs, and
/// `M(G) = k! M(G1) M(G2)` across every nontrivial `2k`-edge cut, with the
/// invariants taken from the plain recursion.
pub fn check_cut_products(graphs: &[Multigraph]) -> Check {
    let mut t = Tally::new("edge-cut product and positivity");
    let engine = plain_engine();
    for g in graphs.iter().filter(|g| g.vertex_count() >= 3) {
        let Ok(k) = g.half_degree() else { continue };
        let m = match engine.invariant(g) {
            Ok(m) => m,
            Err(e) => {
                t.error(&g.to_string(), e);
                continue;
            }
        };
        let lam = edge_connectivity(g).unwrap();
        let connected = lam >= 2 * k;
        t.expect(m.is_positive() == connected, || format!("{g}: M = {m}, edge connectivity {lam}"));
        if !connected {
            continue;
        }
        for cut in nontrivial_cuts(g, 2 * k).unwrap().iter().filter(|c| c.size == 2 * k) {
            let (a, b) = split_edge_cut(g, cut).unwrap();
            let prod = engine.invariant(&a).unwrap()
                * engine.invariant(&b).unwrap()
                * BigRational::from_integer(factorial(k));
            t.expect(prod == m, || format!("{g} cut {:?}: {m} vs {prod}", cut.side));
        }
    }
    t.check()
}

/// Splitting order does not change the multiset of factors, and
/// `M(G) >= (k!)^(n-3)` with equality exactly for totally decomposable
/// graphs.
pub fn check_decompositions(graphs: &[Multigraph]) -> Check {
    let mut t = Tally::new("decomposition uniqueness and lower bound");
    for g in graphs.iter().filter(|g| g.vertex_count() >= 3 && !g.has_loops()) {
        let Ok(k) = g.half_degree() else { continue };
        if edge_connectivity(g).unwrap() < 2 * k {
            continue;
        }
        let first = decompose_with(g, &mut |_| 0).unwrap();
        let last = decompose_with(g, &mut |cuts| cuts.len() - 1).unwrap();
        t.expect(first.keys == last.keys, || format!("{g}: factor multisets differ"));
        let total = first.factors.iter().all(|f| f.vertex_count() == 3);
        let m = martin_invariant(g).unwrap();
        let bound = BigRational::from_integer(num_traits::pow(factorial(k), g.vertex_count() - 3));
        t.expect(m >= bound && ((m == bound) == total), || {
            format!("{g}: M = {m}, bound {bound}, totally decomposable {total}")
        });
    }
    t.check()
}

/// Twists at 4-vertex cuts keep `M`. The detail counts pairs that are not
/// isomorphic.
pub fn check_twists(graphs: &[Multigraph]) -> (Check, usize) {
    let mut t = Tally::new("twist invariance");
    let mut distinct = 0;
    for g in graphs.iter().filter(|g| g.is_connected() && !g.has_loops()) {
        if g.regular_degree() != Some(4) {
            continue;
        }
        let m = martin_invariant(g).unwrap();
        for fc in four_vertex_cuts(g) {
            let side = side_edges(g, &fc.component);
            for sigma in [[1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]] {
                let Ok(h) = twist(g, fc.cut, &side, sigma) else { continue };
                match martin_invariant(&h) {
                    Ok(mh) => t.expect(mh == m, || format!("{g} twisted at {:?}: {m} vs {mh}", fc.cut)),
                    Err(e) => t.error(&g.to_string(), e),
                }
                if !is_isomorphic(g, &h) {
                    distinct += 1;
                }
            }
        }
    }
    t.notes.push(format!("{distinct} non-isomorphic pairs"));
    (t.check(), distinct)
}

/// `M(G) = M(G1) M(G2)` for splits at 3-vertex cuts of `2k`-edge-connected
/// graphs.
pub fn check_three_vertex_cuts(graphs: &[Multigraph]) -> Check {
    let mut t = Tally::new("3-vertex-cut product");
    for g in graphs.iter().filter(|g| g.is_connected() && !g.has_loops()) {
        let n = g.vertex_count();
        if n < 5 || g.regular_degree().is_none() {
            continue;
        }
        if edge_connectivity(g).unwrap() < g.regular_degree().unwrap() {
            continue;
        }
        let m = martin_invariant(g).unwrap();
        for tc in three_vertex_cuts(g) {
            let side = side_edges(g, &tc.component);
            let Ok((x, y)) = split_three_vertex_cut(g, tc.cut, &side) else { continue };
            let prod = martin_invariant(&x).unwrap() * martin_invariant(&y).unwrap();
            t.expect(prod == m, || format!("{g} at {:?}: {m} vs {prod}", tc.cut));
        }
    }
    t.check()
}

/// `(r!)^(k(n-3)) | M(G^[r])` for `r <= r_max`. For 4-regular graphs also
/// `p | M(G^[p-1])` for `p` in 2, 3, 5 (at least four vertices) and
/// `9 | M(G^[2])` (at least five).
pub fn check_divisibility(graphs: &[Multigraph], r_max: u32) -> Check {
    let mut t = Tally::new("divisibility of Martin sequences");
    for g in graphs.iter().filter(|g| g.vertex_count() >= 3) {
        let Ok(k) = g.half_degree() else { continue };
        let n = g.vertex_count();
        let value = |r: u32| -> BigInt { martin_invariant(&g.duplicate(r)).unwrap().to_integer() };
        for r in 1..=r_max {
            let d = num_traits::pow(factorial(r), k as usize * (n - 3));
            let v = value(r);
            t.expect((&v % &d).is_zero(), || format!("{g}: {d} does not divide M(G^[{r}]) = {v}"));
        }
        if k != 2 || n < 4 {
            continue;
        }
        for p in [2u32, 3, 5] {
            let v = value(p - 1);
            t.expect((&v % p).is_zero(), || format!("{g}: {p} does not divide {v}"));
        }
        let v = value(2);
        if n >= 5 {
            t.expect((&v % 9u32).is_zero(), || format!("{g}: 9 does not divide {v}"));
        }
    }
    t.check()
}

/// `M(G) = (-1)^(n-1) Perm(G)^2 mod (k+1)` for `trials` random choices of
/// 0, infinity and orientation per graph.
pub fn check_permanent_congruence(graphs: &[Multigraph], trials: usize, seed: u64) -> Check {
    let mut t = Tally::new("permanent congruence and choice independence");
    let mut rng = StdRng::seed_from_u64(seed);
    for g in graphs.iter().filter(|g| g.vertex_count() >= 3) {
        let Ok(k) = g.half_degree() else { continue };
        let modulus = k as u64 + 1;
        if !crate::oracle::linalg::is_prime(modulus) {
            continue;
        }
        let n = g.vertex_count();
        let m = martin_invariant(g).unwrap().to_integer();
        let sign = if n % 2 == 0 { -1 } else { 1 };
        let mut seen = None;
        let loop_free: Vec<usize> = (0..n).filter(|&v| g.loops(v) == 0).collect();
        if loop_free.is_empty() {
            continue;
        }
        for _ in 0..trials {
            let vinf = loop_free[rng.gen_range(0..loop_free.len())];
            let mut v0 = rng.gen_range(0..n - 1);
            if v0 >= vinf {
                v0 += 1;
            }
            let orientation: Vec<bool> = (0..g.edge_count()).map(|_| rng.gen()).collect();
            match permanent_square_residue_with(g, v0, vinf, &orientation) {
                Ok(rep) => {
                    let want = (BigInt::from(sign) * &m).mod_floor(&BigInt::from(modulus));
                    let want = u64::try_from(want).unwrap();
                    t.expect(rep.residue == want, || {
                        format!("{g} with 0={v0}, inf={vinf}: Perm^2 = {} but M = {m}", rep.residue)
                    });
                    if let Some(s) = seen {
                        t.expect(s == rep.residue, || format!("{g}: residue depends on choices"));
                    }
                    seen = Some(rep.residue);
                }
                Err(e) => t.error(&g.to_string(), e),
            }
        }
    }
    t.check()
}

/// c2 of `G \ 0` by point counting, the Martin bridge (its residue formula
/// for five vertices) and the tree/forest bridge agree.
pub fn check_c2_three_way(graphs: &[Multigraph], primes: &[u64]) -> Check {
    let mut t = Tally::new("c2 point count, Martin bridge and forest bridge agree");
    for g in graphs {
        let w = g.neighbors(0)[0].0;
        for &p in primes {
            let sweep = match c2(&g.delete_vertex(0).unwrap(), p) {
                Ok(r) => r.residue,
                Err(e) => {
                    t.error(&format!("{g} sweep"), e);
                    continue;
                }
            };
            let bridge = if g.vertex_count() >= 6 {
                c2_from_martin(g, p).map(|r| r.residue)
            } else {
                martin_invariant(&g.duplicate(p as u32 - 1))
                    .and_then(|m| residue_from_martin_value(&m.to_integer(), p))
            };
            let forest = c2_from_trees_forests(g, 0, w, p).map(|r| r.residue);
            match (bridge, forest) {
                (Ok(b), Ok(f)) => t.expect(sweep == b && b == f, || {
                    format!("{g} at p={p}: sweep {sweep}, Martin {b}, forests {f}")
                }),
                (Err(e), _) | (_, Err(e)) => t.error(&format!("{g} at p={p}"), e),
            }
        }
    }
    t.check()
}

/// Point counts of all decompletions: divisible by `p^2`, same c2.
pub fn check_completion_invariance(graphs: &[Multigraph], primes: &[u64]) -> Check {
    let mut t = Tally::new("c2 completion invariance and p^2 divisibility");
    for g in graphs {
        for &p in primes {
            let mut residues = Vec::new();
            for v in 0..g.vertex_count() {
                match point_count(&g.delete_vertex(v).unwrap(), p) {
                    Ok(c) => {
                        let p2 = (p * p) as u128;
                        t.expect(c % p2 == 0, || format!("{g} minus {v}: {c} points at p={p}"));
                        residues.push(c / p2 % p as u128);
                    }
                    Err(e) => t.error(&g.to_string(), e),
                }
            }
            t.expect(residues.windows(2).all(|w| w[0] == w[1]), || {
                format!("{g} at p={p}: residues {residues:?}")
            });
        }
    }
    t.check()
}

/// The zigzag graphs on 6 and 7 vertices differ by a double-triangle
/// reduction and share c2 at 2.
pub fn check_double_triangle() -> Check {
    let mut t = Tally::new("double-triangle pair shares c2 at 2");
    let a = families::circulant(6, &[1, 2]).delete_vertex(0).unwrap();
    let b = families::circulant(7, &[1, 2]).delete_vertex(0).unwrap();
    match (c2(&a, 2), c2(&b, 2)) {
        (Ok(x), Ok(y)) => t.expect(x.residue == y.residue, || format!("{} vs {}", x.residue, y.residue)),
        (Err(e), _) | (_, Err(e)) => t.error("zigzag", e),
    }
    t.check()
}

pub fn check_dunce_cap(primes: &[u64]) -> Check {
    let mut t = Tally::new("dunce cap has p^3 points");
    for &p in primes {
        match point_count(&families::dunce_cap(), p) {
            Ok(c) => t.expect(c == (p as u128).pow(3), || format!("p={p}: {c}")),
            Err(e) => t.error("dunce cap", e),
        }
    }
    t.check()
}

pub fn check_closed_forms() -> Vec<Check> {
    let mut out = Vec::new();
    let mut t = Tally::new("zigzag circulants");
    for n in 5..=12u32 {
        let g = families::circulant(n as usize, &[1, 2]);
        match (martin_invariant(&g), closed_form_circulant(n)) {
            (Ok(m), Ok(c)) => t.expect(m == BigRational::from_integer(c.clone()), || format!("n={n}: {m} vs {c}")),
            (Err(e), _) | (_, Err(e)) => t.error(&format!("n={n}"), e),
        }
    }
    out.push(t.check());
    let mut t = Tally::new("doubled prisms");
    for l in 2..=4u32 {
        let g = families::prism(l as usize + 1).duplicate(2);
        match (martin_invariant(&g), closed_form_prism(l)) {
            (Ok(m), Ok(c)) => t.expect(m == BigRational::from_integer(c.clone()), || format!("l={l}: {m} vs {c}")),
            (Err(e), _) | (_, Err(e)) => t.error(&format!("l={l}"), e),
        }
    }
    out.push(t.check());
    let mut t = Tally::new("duplicated K5");
    for r in 1..=3u32 {
        let g = families::complete(5).duplicate(r);
        match (martin_invariant(&g), closed_form_k5_power(r)) {
            (Ok(m), Ok(c)) => t.expect(m == BigRational::from_integer(c.clone()), || format!("r={r}: {m} vs {c}")),
            (Err(e), _) | (_, Err(e)) => t.error(&format!("r={r}"), e),
        }
    }
    out.push(t.check());
    let mut t = Tally::new("K4 with multiplicities a, b, c");
    for a in 0..=4u32 {
        for b in 0..=4u32 {
            for c in 0..=4u32 {
                if (a + b + c) % 2 == 1 || a + b + c == 0 {
                    continue;
                }
                let g = families::k4_abc(a, b, c);
                match martin_invariant(&g) {
                    Ok(m) => {
                        let want = closed_form_k4(a, b, c);
                        t.expect(m == BigRational::from_integer(want.clone()), || format!("({a},{b},{c}): {m} vs {want}"))
                    }
                    Err(e) => t.error(&format!("({a},{b},{c})"), e),
                }
            }
        }
    }
    out.push(t.check());
    out
}

/// `N_{r,r}` satisfies the Martin recurrence at the unmarked vertex of
/// every 4-vertex marked graph `G \ {v, w}`, where `G` is `4r`-regular on
/// six vertices and `w` meets `v` and the marks by `r`-fold edges.
pub fn check_forest_recurrence(r: u32) -> Check {
    let mut t = Tally::new(&format!("tree/forest counts obey the Martin recurrence, r={r}"));
    let oracle = Oracle::default();
    let mut nonzero = 0;
    let marked = |g: &Multigraph, v: usize, w: usize, marks: [usize; 3]| -> Result<u128> {
        let (h, old) = g.remove_vertices(&[v, w])?;
        let at = |x: usize| old.iter().position(|&o| o == x).expect("kept vertex");
        let m = MarkedGraph::new(h, [at(marks[0]), at(marks[1])], at(marks[2]))?;
        oracle.count_tree_forest_partitions(&m, r)
    };
    for g in regular_multigraphs(6, 4 * r, LoopPolicy::Forbid) {
        for w in 0..6 {
            let nb = g.neighbors(w);
            if nb.len() != 4 || nb.iter().any(|&(_, m)| m != r) {
                continue;
            }
            for &(v, _) in &nb {
                let rest: Vec<usize> = nb.iter().map(|&(x, _)| x).filter(|&x| x != v).collect();
                let marks = [rest[0], rest[1], rest[2]];
                let u = (0..6).find(|x| *x != v && *x != w && !marks.contains(x)).unwrap();
                let lhs = match marked(&g, v, w, marks) {
                    Ok(x) => x,
                    Err(e) => {
                        t.error(&g.to_string(), e);
                        continue;
                    }
                };
                let shift = |x: usize| if x > u { x - 1 } else { x };
                let mut rhs = BigInt::zero();
                for (tm, coeff) in loop_transition_classes(&g, u).unwrap() {
                    let vi = tm.neighbors().iter().position(|&x| x == v);
                    if vi.is_some_and(|i| tm.get(i, i) > 0) {
                        continue;
                    }
                    let gt = apply_transition(&g, u, &tm).unwrap();
                    match marked(&gt, shift(v), shift(w), marks.map(shift)) {
                        Ok(x) => rhs += BigInt::from(coeff) * x,
                        Err(e) => t.error(&g.to_string(), e),
                    }
                }
                nonzero += usize::from(lhs > 0);
                t.expect(BigInt::from(lhs) == rhs, || format!("{g} with v={v}, w={w}: {lhs} vs {rhs}"));
            }
        }
    }
    t.notes.push(format!("{nonzero} nonzero"));
    t.check()
}

/// Rotation of a straight-line drawing of a loopless graph with simple
/// edges, counterclockwise.
fn straight_line_rotation(g: &Multigraph, at: &[(f64, f64)]) -> Vec<Vec<usize>> {
    let edges = g.edges();
    (0..g.vertex_count())
        .map(|v| {
            let mut out: Vec<(f64, usize)> = edges
                .iter()
                .enumerate()
                .filter(|(_, &(a, b))| a == v || b == v)
                .map(|(e, &(a, b))| {
                    let x = if a == v { b } else { a };
                    ((at[x].1 - at[v].1).atan2(at[x].0 - at[v].0), e)
                })
                .collect();
            out.sort_by(|a, b| a.0.total_cmp(&b.0));
            out.into_iter().map(|(_, e)| e).collect()
        })
        .collect()
}

/// Plane graphs with `2(n-1)` edges and their duals, as used by the
/// duality check: K4 drawn as a triangle around its centre, and the
/// antiprism on eight vertices minus a vertex.
pub fn dual_pairs() -> Vec<(String, Multigraph, Multigraph)> {
    let mut out = Vec::new();
    let k4 = families::complete(4);
    let at = [(0.0, 0.0), (1.0, 0.0), (-0.5, 0.87), (-0.5, -0.87)];
    out.push(("K4".to_string(), k4.clone(), planar_dual(&k4, &straight_line_rotation(&k4, &at)).unwrap()));
    let c8 = families::circulant(8, &[1, 2]);
    let h = c8.delete_vertex(0).unwrap();
    let at: Vec<(f64, f64)> = (1..8)
        .map(|i| {
            let radius = if i % 2 == 0 { 2.0 } else { 1.0 };
            let angle = (i as f64 * 45.0).to_radians();
            (radius * angle.cos(), radius * angle.sin())
        })
        .collect();
    out.push(("C8_12 minus a vertex".to_string(), h.clone(), planar_dual(&h, &straight_line_rotation(&h, &at)).unwrap()));
    out
}

/// Diagonal coefficients at `k = 2` agree on planar dual pairs.
pub fn check_planar_duality(r_max: u32) -> Check {
    let mut t = Tally::new("diagonal coefficients agree on planar duals");
    for (name, h, d) in dual_pairs() {
        for r in 1..=r_max {
            match (diagonal_coefficient(&h, 2, r), diagonal_coefficient(&d, 2, r)) {
                (Ok(a), Ok(b)) => t.expect(a == b && a > 0, || format!("{name} at r={r}: {a} vs {b}")),
                (Err(e), _) | (_, Err(e)) => t.error(&name, e),
            }
        }
        if !is_isomorphic(&h, &d) {
            t.notes.push(format!("{name} and its dual are not isomorphic"));
        }
    }
    t.check()
}

/// Runs one suite over graphs with at most `max_vertices` vertices.
pub fn run_suite(suite: Suite, max_vertices: usize) -> Vec<Check> {
    let graphs = four_regular_graphs(1, max_vertices);
    match suite {
        Suite::Identities => {
            let mut v = vec![
                check_cut_products(&graphs),
                check_decompositions(&graphs),
                check_twists(&graphs).0,
                check_three_vertex_cuts(&graphs),
                check_divisibility(&four_regular_graphs(3, max_vertices.min(6)), 3),
            ];
            let six: Vec<Multigraph> = (3..=max_vertices.min(5)).flat_map(|n| regular_multigraphs(n, 6, LoopPolicy::Allow)).collect();
            let mut c = check_cut_products(&six);
            c.name.push_str(", 6-regular");
            v.push(c);
            v
        }
        Suite::Oracles => {
            let six: Vec<Multigraph> = (2..=max_vertices.min(6)).flat_map(|n| regular_multigraphs(n, 6, LoopPolicy::Allow)).collect();
            let small = four_regular_graphs(1, max_vertices.min(5));
            let mut six_trees = check_tree_partitions(&six);
            six_trees.name.push_str(", 6-regular");
            vec![
                check_tree_partitions(&graphs),
                six_trees,
                check_brute_force(&small, Oracle::default()),
                check_diagonal(&graphs, 1),
                check_diagonal(&four_regular_graphs(2, max_vertices.min(6)), 2),
                check_forest_recurrence(1),
                check_forest_recurrence(2),
                check_planar_duality(2),
            ]
        }
        Suite::Residues => {
            let five_up: Vec<Multigraph> = graphs.iter().filter(|g| g.vertex_count() >= 5).cloned().collect();
            let mut cyclic = vec![families::complete(5), families::octahedron()];
            if max_vertices >= 7 {
                cyclic.extend(cyclically_six_connected(7));
            }
            vec![
                check_permanent_congruence(&five_up, 10, 1),
                check_dunce_cap(&[2, 3, 5]),
                check_c2_three_way(&cyclic, &[2, 3]),
                check_completion_invariance(&cyclic, &[2, 3]),
                check_double_triangle(),
            ]
        }
        Suite::ClosedForms => check_closed_forms(),
    }
}

/// Convenience for callers that want a single verdict.
pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.passed)
}

pub fn run(suite: Option<Suite>, max_vertices: usize) -> Result<Vec<Check>> {
    let suites: Vec<Suite> = match suite {
        Some(s) => vec![s],
        None => Suite::ALL.to_vec(),
    };
    Ok(suites.into_iter().flat_map(|s| run_suite(s, max_vertices)).collect())
}
