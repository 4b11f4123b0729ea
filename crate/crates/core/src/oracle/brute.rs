//! The Martin polynomial straight from its definition: every transition
//! system is enumerated as a perfect matching of the half-edges at each
//! vertex, and circuits are traced on half-edges.

use num_bigint::BigInt;

use super::{Budget, Oracle};
use crate::error::{Error, Result};
use crate::martin::{invariant_from_polynomial, MartinValue, Polynomial};
use crate::multigraph::Multigraph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BruteForceMartin {
    pub polynomial: Polynomial,
    /// `count[c]` transition systems have `c` circuits.
    pub circuit_counts: Vec<u128>,
    /// Present for regular graphs of degree at least 4.
    pub invariant: Option<MartinValue>,
}

impl BruteForceMartin {
    pub fn systems(&self) -> u128 {
        self.circuit_counts.iter().sum()
    }
}

fn matchings(items: &[usize]) -> Vec<Vec<(usize, usize)>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let first = items[0];
    let mut out = Vec::new();
    for i in 1..items.len() {
        let rest: Vec<usize> = items[1..].iter().enumerate().filter(|&(j, _)| j + 1 != i).map(|(_, &x)| x).collect();
        for mut m in matchings(&rest) {
            m.insert(0, (first, items[i]));
            out.push(m);
        }
    }
    out
}

struct Halves {
    parent: Vec<usize>,
    log: Vec<(usize, usize)>,
    classes: usize,
}

impl Halves {
    fn find(&self, mut v: usize) -> usize {
        while self.parent[v] != v {
            v = self.parent[v];
        }
        v
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[rb] = ra;
            self.classes -= 1;
            self.log.push((rb, 1));
        } else {
            self.log.push((usize::MAX, 0));
        }
    }

    fn undo(&mut self) {
        let (rb, merged) = self.log.pop().expect("undo without union");
        if merged == 1 {
            self.parent[rb] = rb;
            self.classes += 1;
        }
    }
}

impl Oracle {
    pub fn martin_brute_force(&self, g: &Multigraph) -> Result<BruteForceMartin> {
        let n = g.vertex_count();
        if n == 0 {
            return Err(Error::InvalidArgument("empty graph".into()));
        }
        let mut systems = 1u128;
        for v in 0..n {
            let d = g.degree(v);
            if d == 0 {
                return Err(Error::EdgelessComponent);
            }
            if d % 2 == 1 {
                return Err(Error::OddDegree(d));
            }
            systems = (1..d as u128).step_by(2).fold(systems, |a, i| a.saturating_mul(i));
        }
        if systems > self.budget {
            return Err(Error::BudgetExceeded { needed: systems, budget: self.budget });
        }
        let edges = g.edges();
        let mut at = vec![Vec::new(); n];
        for (e, &(u, v)) in edges.iter().enumerate() {
            at[u].push(2 * e);
            at[v].push(2 * e + 1);
        }
        let per_vertex: Vec<Vec<Vec<(usize, usize)>>> = at.iter().map(|h| matchings(h)).collect();
        let halves = 2 * edges.len();
        let mut uf = Halves { parent: (0..halves).collect(), log: Vec::new(), classes: halves };
        for e in 0..edges.len() {
            uf.union(2 * e, 2 * e + 1);
        }
        let mut counts = vec![0u128; edges.len() + 1];
        let mut budget = Budget::new(self.budget.saturating_mul(2));
        fn rec(
            v: usize,
            per_vertex: &[Vec<Vec<(usize, usize)>>],
            uf: &mut Halves,
            counts: &mut [u128],
            budget: &mut Budget,
        ) -> Result<()> {
            budget.tick()?;
            if v == per_vertex.len() {
                counts[uf.classes] += 1;
                return Ok(());
            }
            for m in &per_vertex[v] {
                for &(a, b) in m {
                    uf.union(a, b);
                }
                let r = rec(v + 1, per_vertex, uf, counts, budget);
                for _ in m {
                    uf.undo();
                }
                r?;
            }
            Ok(())
        }
        rec(0, &per_vertex, &mut uf, &mut counts, &mut budget)?;
        let mut polynomial = Polynomial::zero();
        for (c, &k) in counts.iter().enumerate() {
            if k > 0 {
                let term = Polynomial::linear(-2).pow(c as u32 - 1).scale(&BigInt::from(k));
                polynomial = &polynomial + &term;
            }
        }
        while counts.last() == Some(&0) {
            counts.pop();
        }
        let invariant = match g.regular_degree() {
            Some(d) if d >= 4 => Some(invariant_from_polynomial(&polynomial, d / 2)?),
            _ => None,
        };
        Ok(BruteForceMartin { polynomial, circuit_counts: counts, invariant })
    }
}

pub fn martin_brute_force(g: &Multigraph) -> Result<BruteForceMartin> {
    Oracle::default().martin_brute_force(g)
}
