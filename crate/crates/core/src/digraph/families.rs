//! Named example digraphs.

use std::fmt;
use std::str::FromStr;

use super::{Digraph, DigraphError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// 𝕋_t: one rank-one `Ω_3` block between `T` and `H`.
    Trapezohedron,
    /// 𝕄_t: indices modulo `2t`.
    Multiplicity,
    /// 𝔼_t: indices modulo `t`.
    Euler,
    MultisquareChain,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::Trapezohedron, Family::Multiplicity, Family::Euler, Family::MultisquareChain];

    pub fn min_t(self) -> usize {
        match self {
            Family::MultisquareChain => 3,
            _ => 2,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Family::Trapezohedron => "trapezohedron",
            Family::Multiplicity => "multiplicity",
            Family::Euler => "euler",
            Family::MultisquareChain => "multisquare-chain",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Family {
    type Err = DigraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.tag() == s)
            .ok_or_else(|| DigraphError::UnknownFamily(s.to_string()))
    }
}

/// 1-based index `i` reduced modulo `m` into `1..=m`.
fn wrap(i: i64, m: usize) -> usize {
    (i - 1).rem_euclid(m as i64) as usize + 1
}

struct Builder(Digraph);

impl Builder {
    fn new(vertices: impl IntoIterator<Item = String>) -> Self {
        let mut g = Digraph::new();
        for v in vertices {
            g.add_vertex(&v);
        }
        Builder(g)
    }

    fn edge(&mut self, u: &str, v: &str) {
        let a = self.0.vertex(u).expect("declared tail");
        let b = self.0.vertex(v).expect("declared head");
        self.0.add_edge(a, b).expect("family edges join distinct vertices");
    }
}

fn indexed(prefix: &str, m: usize) -> impl Iterator<Item = String> + '_ {
    (1..=m).map(move |i| format!("{prefix}{i}"))
}

pub fn gen_family(family: Family, t: usize) -> Result<Digraph, DigraphError> {
    if t < family.min_t() {
        return Err(DigraphError::Domain { family: family.tag().into(), t, min: family.min_t() });
    }
    Ok(match family {
        Family::Trapezohedron => trapezohedron(t),
        Family::Multiplicity => multiplicity(t),
        Family::Euler => euler(t),
        Family::MultisquareChain => multisquare_chain(t),
    })
}

fn trapezohedron(t: usize) -> Digraph {
    let names = std::iter::once("T".to_string())
        .chain(indexed("u", t))
        .chain(indexed("v", t))
        .chain(std::iter::once("H".to_string()));
    let mut b = Builder::new(names);
    for i in 1..=t {
        let next = wrap(i as i64 + 1, t);
        b.edge("T", &format!("u{i}"));
        b.edge(&format!("u{i}"), &format!("v{i}"));
        b.edge(&format!("u{i}"), &format!("v{next}"));
        b.edge(&format!("v{i}"), "H");
    }
    b.0
}

fn multiplicity(t: usize) -> Digraph {
    let m = 2 * t;
    let names = ["T", "uA1", "uA2", "uB", "vA1", "vA2"]
        .into_iter()
        .map(String::from)
        .chain(indexed("vB", m))
        .chain(std::iter::once("wA".to_string()))
        .chain(indexed("wB", m))
        .chain(std::iter::once("H".to_string()));
    let mut b = Builder::new(names);
    for (u, v) in [("T", "uA1"), ("T", "uA2"), ("T", "uB")] {
        b.edge(u, v);
    }
    for (u, v) in [("uA1", "vA1"), ("uA1", "vA2"), ("uA2", "vA1"), ("uA2", "vA2"), ("vA1", "wA"), ("vA2", "wA"), ("wA", "H")] {
        b.edge(u, v);
    }
    for i in 1..=m as i64 {
        let k = wrap(i, m);
        b.edge("uB", &format!("vB{k}"));
        b.edge("uA1", &format!("vB{}", wrap(2 * i + 1, m)));
        b.edge("uA2", &format!("vB{}", wrap(2 * i, m)));
        b.edge(&format!("vB{k}"), &format!("wB{k}"));
        b.edge(&format!("vB{k}"), &format!("wB{}", wrap(i + 1, m)));
        b.edge("vA1", &format!("wB{}", wrap(2 * i, m)));
        b.edge("vA2", &format!("wB{}", wrap(2 * i + 1, m)));
        b.edge(&format!("wB{k}"), "H");
    }
    b.0
}

fn euler(t: usize) -> Digraph {
    let names = ["T", "uA1", "uA2"]
        .into_iter()
        .map(String::from)
        .chain(indexed("uC", t))
        .chain(std::iter::once("vA".to_string()))
        .chain(indexed("vB1_", t))
        .chain(indexed("vB2_", t))
        .chain(indexed("vC", t))
        .chain(indexed("w", t))
        .chain(std::iter::once("H".to_string()));
    let mut b = Builder::new(names);
    for (u, v) in [("T", "uA1"), ("T", "uA2"), ("uA1", "vA"), ("uA2", "vA")] {
        b.edge(u, v);
    }
    for i in 1..=t as i64 {
        let k = wrap(i, t);
        let next = wrap(i + 1, t);
        b.edge("T", &format!("uC{k}"));
        b.edge("T", &format!("vC{k}"));
        b.edge("uA1", &format!("vB1_{k}"));
        b.edge("uA2", &format!("vB2_{k}"));
        b.edge(&format!("uC{k}"), &format!("vB1_{k}"));
        b.edge(&format!("uC{k}"), &format!("vB2_{k}"));
        b.edge(&format!("uC{k}"), &format!("vC{k}"));
        b.edge("vA", &format!("w{k}"));
        b.edge(&format!("vB1_{k}"), &format!("w{next}"));
        b.edge(&format!("vB2_{k}"), &format!("w{k}"));
        b.edge(&format!("vC{k}"), &format!("w{k}"));
        b.edge(&format!("vC{k}"), &format!("w{next}"));
        b.edge(&format!("vB1_{k}"), "H");
        b.edge(&format!("vB2_{k}"), "H");
        b.edge(&format!("w{k}"), "H");
    }
    b.0
}

fn multisquare_chain(t: usize) -> Digraph {
    let names = ["v0", "v1_1", "v1_2", "v1_3"].into_iter().map(String::from).chain((2..=t).map(|i| format!("v{i}")));
    let mut b = Builder::new(names);
    for j in 1..=3 {
        let mid = format!("v1_{j}");
        b.edge("v0", &mid);
        b.edge(&mid, "v2");
        b.edge(&mid, "v3");
    }
    for i in 2..t {
        b.edge(&format!("v{i}"), &format!("v{}", i + 1));
    }
    for i in 2..t.saturating_sub(1) {
        b.edge(&format!("v{i}"), &format!("v{}", i + 2));
    }
    b.0
}

/// The directed square `u → v1, v2 → w`.
pub fn square() -> Digraph {
    Digraph::from_edges([("u", "v1"), ("u", "v2"), ("v1", "w"), ("v2", "w")]).expect("simple digraph")
}

/// Three length-two routes `u → v_i → w`: the smallest multisquare.
pub fn multisquare() -> Digraph {
    Digraph::from_edges([("u", "v1"), ("u", "v2"), ("u", "v3"), ("v1", "w"), ("v2", "w"), ("v3", "w")])
        .expect("simple digraph")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trapezohedron_counts() {
        for t in 2..=8 {
            let g = gen_family(Family::Trapezohedron, t).unwrap();
            assert_eq!((g.vertex_count(), g.edge_count()), (2 * t + 2, 4 * t));
        }
    }

    #[test]
    fn euler_counts() {
        let g = gen_family(Family::Euler, 3).unwrap();
        assert_eq!(g.vertex_count(), 20);
        for t in 2..=6 {
            let g = gen_family(Family::Euler, t).unwrap();
            assert_eq!(g.vertex_count(), 5 * t + 5);
            // 4 fixed edges plus 15 per index
            assert_eq!(g.edge_count(), 4 + 15 * t);
            assert_eq!(g.longest_path_length(), Some(4));
        }
    }

    #[test]
    fn multiplicity_counts() {
        for t in 2..=4 {
            let g = gen_family(Family::Multiplicity, t).unwrap();
            assert_eq!(g.vertex_count(), 4 * t + 8);
            // u^A_1 and u^A_2 each reach half of the 2t vertices v^B_i
            assert_eq!(g.edge_count(), 10 + 12 * t);
            assert_eq!(g.longest_path_length(), Some(4));
        }
    }

    #[test]
    fn multisquare_chain_contains_multisquare() {
        let g = gen_family(Family::MultisquareChain, 3).unwrap();
        let (v0, v2) = (g.vertex("v0").unwrap(), g.vertex("v2").unwrap());
        assert!(!g.has_edge(v0, v2));
        let routes = g.successors(v0).filter(|&m| g.has_edge(m, v2)).count();
        assert_eq!(routes, 3);
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(gen_family(Family::Multiplicity, 1), Err(DigraphError::Domain { .. })));
        assert!(matches!(gen_family(Family::MultisquareChain, 2), Err(DigraphError::Domain { .. })));
        assert_eq!("euler".parse::<Family>().unwrap(), Family::Euler);
        assert!("cube".parse::<Family>().is_err());
    }
}
