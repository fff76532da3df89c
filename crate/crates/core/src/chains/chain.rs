use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};

use super::ElementaryPath;
use crate::digraph::{Digraph, DigraphError, VertexId};
use crate::linalg::{Ring, Scalar};

/// Finite combination of elementary `n`-paths with coefficients in a ring.
///
/// Terms are kept sorted by path and every stored coefficient is nonzero and
/// in the ring's canonical form, so structural equality is chain equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chain {
    dim: usize,
    ring: Ring,
    terms: BTreeMap<ElementaryPath, Scalar>,
}

impl Chain {
    pub fn zero(dim: usize, ring: Ring) -> Self {
        Chain { dim, ring, terms: BTreeMap::new() }
    }

    pub fn from_terms(dim: usize, ring: Ring, terms: impl IntoIterator<Item = (ElementaryPath, Scalar)>) -> Self {
        let mut c = Chain::zero(dim, ring);
        for (p, x) in terms {
            c.add_term(p, &x);
        }
        c
    }

    /// `e_{v_0,…,v_n}` with coefficient one.
    pub fn path(ring: Ring, vertices: &[VertexId]) -> Self {
        let p = ElementaryPath::new(vertices);
        Chain::from_terms(p.dimension(), ring, [(p, Scalar::one())])
    }

    /// Build from `(coefficient, vertex names)` pairs.
    pub fn from_named(g: &Digraph, ring: Ring, terms: &[(i64, &[&str])]) -> Result<Self, DigraphError> {
        let dim = terms.first().map_or(0, |(_, p)| p.len().saturating_sub(1));
        let mut c = Chain::zero(dim, ring);
        for (k, names) in terms {
            let ids = names.iter().map(|n| g.vertex(n)).collect::<Result<Vec<_>, _>>()?;
            c.add_term(ElementaryPath::new(&ids), &Scalar::from_integer((*k).into()));
        }
        Ok(c)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ElementaryPath, &Scalar)> {
        self.terms.iter()
    }

    pub fn paths(&self) -> impl Iterator<Item = &ElementaryPath> {
        self.terms.keys()
    }

    pub fn coefficient(&self, p: &ElementaryPath) -> Scalar {
        self.terms.get(p).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Add `x · p`.
    pub fn add_term(&mut self, p: ElementaryPath, x: &Scalar) {
        assert_eq!(p.dimension(), self.dim, "path {p:?} has the wrong length for a {}-chain", self.dim);
        let x = self.ring.normalize(x.clone());
        if x.is_zero() {
            return;
        }
        match self.terms.entry(p) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(x);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = self.ring.add(e.get(), &x);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scaled(&self, k: &Scalar) -> Chain {
        Chain::from_terms(self.dim, self.ring, self.terms.iter().map(|(p, x)| (p.clone(), x * k)))
    }

    /// Reinterpret the coefficients in another ring (e.g. `Z → Q` or `Z → Z/p`).
    pub fn change_ring(&self, ring: Ring) -> Chain {
        Chain::from_terms(self.dim, ring, self.terms.iter().map(|(p, x)| (p.clone(), x.clone())))
    }

    /// Send each path through `f`, dropping the terms it maps to `None`.
    pub fn filter_map_paths(&self, dim: usize, mut f: impl FnMut(&ElementaryPath) -> Option<ElementaryPath>) -> Chain {
        let mut out = Chain::zero(dim, self.ring);
        for (p, x) in &self.terms {
            if let Some(q) = f(p) {
                out.add_term(q, x);
            }
        }
        out
    }

    /// Coefficient of the lexicographically smallest path.
    pub fn leading_coefficient(&self) -> Option<&Scalar> {
        self.terms.values().next()
    }

    /// `(c, s)` with `self = s · c` and `c` having a positive leading coefficient.
    pub fn sign_normalized(&self) -> (Chain, i8) {
        match self.leading_coefficient() {
            Some(x) if x.is_negative() => (-self, -1),
            _ => (self.clone(), 1),
        }
    }

    pub fn is_allowed(&self, g: &Digraph) -> bool {
        self.terms.keys().all(|p| p.is_allowed(g))
    }

    pub fn display<'a>(&'a self, g: &'a Digraph) -> impl fmt::Display + 'a {
        ChainDisplay(self, Some(g))
    }

    fn check_compatible(&self, other: &Chain) {
        assert_eq!(self.dim, other.dim, "adding chains of different dimensions");
        assert_eq!(self.ring, other.ring, "adding chains over different rings");
    }
}

impl AddAssign<&Chain> for Chain {
    fn add_assign(&mut self, rhs: &Chain) {
        self.check_compatible(rhs);
        for (p, x) in &rhs.terms {
            self.add_term(p.clone(), x);
        }
    }
}

impl SubAssign<&Chain> for Chain {
    fn sub_assign(&mut self, rhs: &Chain) {
        self.check_compatible(rhs);
        for (p, x) in &rhs.terms {
            self.add_term(p.clone(), &-x);
        }
    }
}

impl Add for &Chain {
    type Output = Chain;

    fn add(self, rhs: &Chain) -> Chain {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &Chain {
    type Output = Chain;

    fn sub(self, rhs: &Chain) -> Chain {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &Chain {
    type Output = Chain;

    fn neg(self) -> Chain {
        Chain::from_terms(self.dim, self.ring, self.terms.iter().map(|(p, x)| (p.clone(), -x)))
    }
}

impl Neg for Chain {
    type Output = Chain;

    fn neg(self) -> Chain {
        -&self
    }
}

impl fmt::Debug for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", ChainDisplay(self, None))
    }
}

struct ChainDisplay<'a>(&'a Chain, Option<&'a Digraph>);

impl fmt::Display for ChainDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_zero() {
            return write!(f, "0");
        }
        for (i, (p, x)) in self.0.terms.iter().enumerate() {
            let (sign, mag) = if x.is_negative() { ("-", -x) } else { ("+", x.clone()) };
            match (i, sign) {
                (0, "+") => {}
                (0, _) => write!(f, "-")?,
                _ => write!(f, " {sign} ")?,
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            match self.1 {
                Some(g) => write!(f, "{}", p.display(g))?,
                None => write!(f, "{p:?}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_and_normal_form() {
        let z3 = Ring::prime_field(3).unwrap();
        let mut c = Chain::path(z3, &[0, 1]);
        c += &Chain::path(z3, &[0, 1]);
        assert_eq!(c.coefficient(&ElementaryPath::new(&[0, 1])), Scalar::from_integer((-1).into()));
        c += &Chain::path(z3, &[0, 1]);
        assert!(c.is_zero());
    }

    #[test]
    fn sign_normalization() {
        let x = &Chain::path(Ring::Integers, &[1, 2]) - &Chain::path(Ring::Integers, &[0, 2]);
        let (n, s) = x.sign_normalized();
        assert_eq!(s, -1);
        assert_eq!(n.leading_coefficient(), Some(&Scalar::one()));
        assert_eq!(&n.scaled(&Scalar::from_integer((-1).into())), &x);
    }

    #[test]
    fn rendering() {
        let g = Digraph::from_edges([("u", "v1"), ("u", "v2"), ("v1", "w"), ("v2", "w")]).unwrap();
        let sq = Chain::from_named(&g, Ring::Rationals, &[(1, &["u", "v1", "w"]), (-1, &["u", "v2", "w"])]).unwrap();
        assert_eq!(sq.display(&g).to_string(), "e(u,v1,w) - e(u,v2,w)");
        assert_eq!(sq.scaled(&Scalar::from_integer(2.into())).display(&g).to_string(), "2*e(u,v1,w) - 2*e(u,v2,w)");
    }
}
