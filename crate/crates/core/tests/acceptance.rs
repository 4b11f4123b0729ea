//! One line per acceptance criterion. Run with `--nocapture` to see them.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;

use martin::census::{parse_graph_file, primitive_graphs};
use martin::martin::{martin_invariant, martin_polynomial, Polynomial};
use martin::multigraph::{families, Multigraph};
use martin::oracle::{count_tree_partitions, diagonal_coefficient, martin_brute_force};
use martin::residues::graph_permanent;
use martin::structure::{split_three_vertex_cut, side_edges};
use martin::verify::{self, four_regular_graphs, Check};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn from_check(c: Check) -> Outcome {
    let line = format!("{} ({} cases{}{})", c.name, c.cases, if c.detail.is_empty() { "" } else { ", " }, c.detail);
    if c.passed {
        Ok(line)
    } else {
        Err(line)
    }
}

fn all(checks: Vec<Check>) -> Outcome {
    let mut lines = Vec::new();
    let mut ok = true;
    for c in checks {
        ok &= c.passed;
        lines.push(match from_check(c) {
            Ok(s) | Err(s) => s,
        });
    }
    let text = lines.join("; ");
    if ok {
        Ok(text)
    } else {
        Err(text)
    }
}

fn int(m: &BigRational) -> BigInt {
    assert!(m.is_integer(), "{m} is not an integer");
    m.to_integer()
}

fn graph(n: usize, edges: &[(usize, usize)]) -> Multigraph {
    Multigraph::from_edges(n, edges).unwrap()
}

/// Triangle with sides 1, 1, 3 and a loop at the vertex between the simple
/// sides.
fn k3_113() -> Multigraph {
    graph(3, &[(0, 1), (0, 1), (0, 1), (0, 2), (1, 2), (2, 2)])
}

/// Two vertices joined by a double edge, each with one loop.
fn flower() -> Multigraph {
    graph(2, &[(0, 0), (0, 1), (0, 1), (1, 1)])
}

/// The 8-regular companion of the doubled octahedron: `w` and `u` meet
/// `v, 1, 2, 3` by double edges and `n12 = n13 = 1`, `n23 = 2`.
fn octahedron_companion() -> Multigraph {
    let (v, w, a, b, c, u) = (0, 1, 2, 3, 4, 5);
    let mut g = Multigraph::new(6);
    for x in [v, a, b, c] {
        g.add_edges(w, x, 2).unwrap();
        g.add_edges(u, x, 2).unwrap();
    }
    for (x, y, m) in [(a, b, 1), (a, c, 1), (b, c, 2), (c, v, 1), (b, v, 1), (a, v, 2)] {
        g.add_edges(x, y, m).unwrap();
    }
    g
}

/// Two copies of K5 glued along a triangle whose edges are then removed.
fn glued_k5s() -> Multigraph {
    let mut edges = vec![(3, 4), (5, 6)];
    for cut in 0..3 {
        for x in 3..7 {
            edges.push((cut, x));
        }
    }
    graph(7, &edges)
}

fn criterion_1() -> Outcome {
    let table: [(&str, Multigraph, &[i64]); 7] = [
        ("2-rose", families::rose(2), &[0, 1]),
        ("K2^[4]", families::dipole(4), &[0, 3]),
        ("flower", flower(), &[0, 0, 1]),
        ("C3^[2]", families::cycle(3).duplicate(2), &[0, 6, 1]),
        ("K3-113", k3_113(), &[0, 0, 3]),
        ("K4-112", families::k4_abc(1, 1, 2), &[0, 12, 5]),
        ("K5", families::complete(5), &[0, 36, 15]),
    ];
    for (name, g, coeffs) in table {
        let want = Polynomial::from_i64(coeffs);
        let got = martin_polynomial(&g).map_err(|e| format!("{name}: {e}"))?;
        let brute = martin_brute_force(&g).map_err(|e| format!("{name}: {e}"))?.polynomial;
        if got != want || brute != want {
            return Err(format!("{name}: recursion {got}, enumeration {brute}, expected {want}"));
        }
    }
    Ok("7 polynomials, recursion and enumeration".into())
}

fn criterion_2() -> Outcome {
    let k9 = BigInt::from(2u64.pow(9) * 3u64.pow(5) * 25 * 7 * 17 * 167);
    let cases: [(&str, Multigraph, BigInt); 6] = [
        ("K5", families::complete(5), 6.into()),
        ("C6_12", families::circulant(6, &[1, 2]), 14.into()),
        ("K5^[2]", families::complete(5).duplicate(2), 2016.into()),
        ("doubled octahedron", families::octahedron().duplicate(2), 84096.into()),
        ("G'", octahedron_companion(), 97920.into()),
        ("K9", families::complete(9), k9),
    ];
    for (name, g, want) in cases {
        let got = int(&martin_invariant(&g).map_err(|e| format!("{name}: {e}"))?);
        if got != want {
            return Err(format!("{name}: {got}, expected {want}"));
        }
    }
    Ok("6 exact values".into())
}

fn criterion_3() -> Outcome {
    all(verify::check_closed_forms())
}

fn criterion_4() -> Outcome {
    let k4 = count_tree_partitions(&families::complete(4), 2, false).map_err(|e| e.to_string())?;
    if k4 != 6 {
        return Err(format!("K4 has {k4} unordered partitions into two trees"));
    }
    from_check(verify::check_tree_partitions(&four_regular_graphs(1, 7))).map(|s| format!("K4: 6; {s}"))
}

fn criterion_5() -> Outcome {
    for k in 1..=4u32 {
        for r in 1..=3u32 {
            let got = diagonal_coefficient(&families::dipole(k), k, r).map_err(|e| e.to_string())?;
            let f = |x: u32| (1..=x as u128).product::<u128>();
            let want = f(k * r) / f(r).pow(k);
            if got != want {
                return Err(format!("dipole k={k}, r={r}: {got}, expected {want}"));
            }
        }
    }
    let graphs = [families::complete(5), families::octahedron()];
    all(vec![verify::check_diagonal(&graphs, 1), verify::check_diagonal(&graphs, 2)])
        .map(|s| format!("12 dipoles; {s}"))
}

fn criterion_6() -> Outcome {
    let g = graph(
        6,
        &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4), (1, 4), (1, 5), (2, 5), (3, 5), (4, 5)],
    );
    let orientation: Vec<bool> =
        g.edges().iter().map(|&e| !matches!(e, (1, 2) | (2, 3) | (3, 4))).collect();
    let perm = graph_permanent(&g, 0, 5, &orientation).map_err(|e| e.to_string())?;
    if perm.magnitude() != &32u32.into() {
        return Err(format!("labelled octahedron has permanent {perm}"));
    }
    from_check(verify::check_permanent_congruence(&four_regular_graphs(5, 7), 10, 7))
        .map(|s| format!("|Perm| = 32; {s}"))
}

fn criterion_7() -> Outcome {
    let mut graphs = vec![families::complete(5), families::octahedron()];
    let seven = verify::cyclically_six_connected(7);
    if seven.is_empty() {
        return Err("no cyclically 6-connected graphs on 7 vertices".into());
    }
    graphs.extend(seven);
    all(vec![
        verify::check_dunce_cap(&[2, 3, 5]),
        verify::check_c2_three_way(&graphs, &[2, 3]),
        verify::check_completion_invariance(&graphs, &[2, 3]),
    ])
}

fn criterion_8() -> Outcome {
    let graphs = four_regular_graphs(1, 7);
    let g = glued_k5s();
    let side = side_edges(&g, &[3, 4]);
    let (a, b) = split_three_vertex_cut(&g, [0, 1, 2], &side).map_err(|e| e.to_string())?;
    let m = int(&martin_invariant(&g).map_err(|e| e.to_string())?);
    let k5 = families::complete(5);
    if m != BigInt::from(36) || !martin::multigraph::is_isomorphic(&a, &k5) || !martin::multigraph::is_isomorphic(&b, &k5) {
        return Err(format!("glued K5s: M = {m}, sides {a} and {b}"));
    }
    let (twists, pairs) = verify::check_twists(&graphs);
    if pairs < 3 {
        return Err(format!("only {pairs} non-isomorphic twist pairs"));
    }
    all(vec![
        verify::check_cut_products(&graphs),
        verify::check_three_vertex_cuts(&graphs),
        twists,
        verify::check_decompositions(&graphs),
    ])
    .map(|s| format!("glued K5s: 36; {s}"))
}

fn criterion_9() -> Outcome {
    from_check(verify::check_divisibility(&four_regular_graphs(3, 6), 3))
}

/// `(loops, index, M, M(G^[2]) / 4^(loops - 1))` for the primitive
/// `P{loops},{index}`, up to eight loops.
const PRIMITIVES: &[(u32, u32, u64, u64)] = &[
    (3, 1, 6, 126), (4, 1, 14, 1314), (5, 1, 34, 14706),
    (6, 1, 78, 147546), (6, 2, 86, 180594), (6, 3, 92, 212436), (6, 4, 108, 296676),
    (7, 1, 178, 1453914), (7, 2, 202, 1891314), (7, 3, 210, 2083770), (7, 4, 220, 2313900),
    (7, 7, 220, 2313900), (7, 6, 226, 2454426), (7, 5, 228, 2577204), (7, 10, 228, 2577204),
    (7, 9, 240, 2929680), (7, 11, 246, 3116286), (7, 8, 256, 3358656),
    (8, 1, 398, 13881906), (8, 2, 470, 19288170), (8, 3, 470, 19560330), (8, 4, 494, 21875634),
    (8, 6, 510, 23224770), (8, 9, 510, 23224770), (8, 5, 516, 24331644), (8, 7, 518, 24330906),
    (8, 8, 518, 24330906), (8, 11, 524, 25080084), (8, 15, 524, 25080084), (8, 14, 534, 26486154),
    (8, 13, 542, 26900226), (8, 21, 542, 26900226), (8, 10, 548, 27340956), (8, 22, 548, 27340956),
    (8, 12, 548, 28399356), (8, 18, 564, 30075084), (8, 25, 564, 30075084), (8, 20, 566, 30153834),
    (8, 19, 572, 31573476), (8, 27, 572, 31573476), (8, 17, 582, 32301306), (8, 23, 582, 32301306),
    (8, 16, 584, 31092984), (8, 29, 584, 33515064), (8, 30, 602, 36055206), (8, 36, 602, 36055206),
    (8, 26, 608, 36570816), (8, 28, 608, 36570816), (8, 33, 618, 38238966), (8, 32, 620, 38026260),
    (8, 34, 620, 38026260), (8, 31, 624, 38998224), (8, 35, 624, 38998224), (8, 37, 638, 41602626),
    (8, 24, 656, 42769584), (8, 38, 656, 44586864), (8, 39, 660, 45058860), (8, 41, 684, 50848884),
    (8, 40, 728, 54288936),
];

/// Per loop order: graphs, distinct `M`, distinct `M(G^[2])`.
const PRIMITIVE_COUNTS: &[(u32, usize, usize, usize)] =
    &[(3, 1, 1, 1), (4, 1, 1, 1), (5, 1, 1, 1), (6, 4, 4, 4), (7, 11, 9, 9)];

fn martin_pair(g: &Multigraph, loops: u32) -> Result<(u64, u64), String> {
    let m = int(&martin_invariant(g).map_err(|e| e.to_string())?);
    let m2 = int(&martin_invariant(&g.duplicate(2)).map_err(|e| e.to_string())?);
    let scale = BigInt::from(4u64.pow(loops - 1));
    if &m2 % &scale != BigInt::from(0) {
        return Err(format!("M(G^[2]) = {m2} is not divisible by {scale}"));
    }
    Ok((u64::try_from(m).unwrap(), u64::try_from(m2 / scale).unwrap()))
}

/// Primitives up to seven loops are generated here and compared with the
/// published counts and values. The larger census, the period fit and the
/// perfection conjecture are not reproduced.
fn criterion_10() -> Outcome {
    let mut lines = Vec::new();
    for &(loops, graphs, distinct_m, distinct_m2) in PRIMITIVE_COUNTS {
        let gs = primitive_graphs(loops as usize + 2);
        let values: Vec<(u64, u64)> = gs.iter().map(|g| martin_pair(g, loops)).collect::<Result<_, _>>()?;
        let ms: BTreeSet<u64> = values.iter().map(|v| v.0).collect();
        let m2s: BTreeSet<u64> = values.iter().map(|v| v.1).collect();
        if (gs.len(), ms.len(), m2s.len()) != (graphs, distinct_m, distinct_m2) {
            return Err(format!(
                "{loops} loops: {} graphs, {} values of M, {} of M^[2]",
                gs.len(),
                ms.len(),
                m2s.len()
            ));
        }
        let mut got = values;
        got.sort();
        let mut want: Vec<(u64, u64)> =
            PRIMITIVES.iter().filter(|v| v.0 == loops).map(|v| (v.2, v.3)).collect();
        want.sort();
        if got != want {
            return Err(format!("{loops} loops: values {got:?}, expected {want:?}"));
        }
        lines.push(format!("{loops}:{graphs}"));
    }
    Ok(format!("primitive counts and values for loops {}", lines.join(" ")))
}

/// With `MARTIN_CENSUS_FILE` naming a file of graphs called `P{loops},{i}`
/// (or `P_{loops,i}`), those with at most eight loops are checked against
/// the table.
fn census_regression(path: &str) -> Outcome {
    let records = parse_graph_file(path).map_err(|e| e.to_string())?;
    let mut checked = 0;
    for rec in records {
        let digits: Vec<u32> = rec
            .name
            .split(|c: char| !c.is_ascii_digit())
            .filter_map(|s| s.parse().ok())
            .collect();
        let [loops, index] = digits[..] else { continue };
        let Some(&(_, _, m, m2)) = PRIMITIVES.iter().find(|v| (v.0, v.1) == (loops, index)) else { continue };
        let g = rec.graph().map_err(|e| e.to_string())?;
        let got = martin_pair(&g, loops)?;
        if got != (m, m2) {
            return Err(format!("{}: {got:?}, expected {:?}", rec.name, (m, m2)));
        }
        checked += 1;
    }
    if checked == 0 {
        return Err("no graph named P{loops},{index} with at most eight loops".into());
    }
    Ok(format!("{checked} census graphs match"))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 10] = [
        ("Martin polynomials of the small table", criterion_1),
        ("exact Martin invariants", criterion_2),
        ("closed forms", criterion_3),
        ("spanning-tree partitions", criterion_4),
        ("diagonal coefficients", criterion_5),
        ("permanent", criterion_6),
        ("c2 invariant", criterion_7),
        ("structural identities", criterion_8),
        ("divisibility", criterion_9),
        ("census at desk scale", criterion_10),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                println!("criterion {}: FAIL  {name}: {detail}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    println!(
        "criterion 10: DECLARED  not reproduced: census statistics beyond seven loops, the period fit, \
         the perfection conjecture"
    );
    match std::env::var("MARTIN_CENSUS_FILE") {
        Ok(path) => match census_regression(&path) {
            Ok(detail) => println!("criterion 10: PASS  census file regression: {detail}"),
            Err(detail) => {
                println!("criterion 10: FAIL  census file regression: {detail}");
                failed.push(10);
            }
        },
        Err(_) => println!("criterion 10: SKIP  census file regression: MARTIN_CENSUS_FILE not set"),
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
