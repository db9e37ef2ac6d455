//! Brute-force twisted-conjugacy oracle over an opaque group.
//!
//! The oracle works with any group presented through multiplication,
//! inversion and automorphism callbacks. It discovers links
//! `h ~ g·h·φ(g⁻¹)` over a finite set of candidate conjugators and merges
//! them with a union-find, which yields ground truth for closed-form
//! classifiers on a finite ball.
//!
//! Semantics are one-sided throughout: a discovered link proves two
//! elements twisted-conjugate, while an exhausted search only means "not
//! found within the given candidates".

use std::collections::HashMap;
use std::hash::Hash;

use thiserror::Error;

/// A group axiom violation detected while registering callbacks.
#[derive(Debug, Error)]
pub enum SpotCheckError {
    #[error("identity law failed on a sample element")]
    Identity,
    #[error("inverse law failed on a sample element")]
    Inverse,
    #[error("associativity failed on a sample triple")]
    Associativity,
    #[error("automorphism is not a homomorphism on a sample pair")]
    Homomorphism,
}

type OpBox<E> = Box<dyn Fn(&E, &E) -> E + Send + Sync>;
type MapBox<E> = Box<dyn Fn(&E) -> E + Send + Sync>;

/// A group with a distinguished automorphism, presented by callbacks.
pub struct GroupInterface<E> {
    mul: OpBox<E>,
    inv: MapBox<E>,
    identity: E,
    phi: MapBox<E>,
}

impl<E: Clone + Eq + Hash> GroupInterface<E> {
    pub fn new(
        mul: impl Fn(&E, &E) -> E + Send + Sync + 'static,
        inv: impl Fn(&E) -> E + Send + Sync + 'static,
        identity: E,
        phi: impl Fn(&E) -> E + Send + Sync + 'static,
    ) -> Self {
        GroupInterface {
            mul: Box::new(mul),
            inv: Box::new(inv),
            identity,
            phi: Box::new(phi),
        }
    }

    /// Like [`GroupInterface::new`], but spot-checks the group axioms and the
    /// homomorphism property of `phi` on the supplied sample elements.
    pub fn verified(
        mul: impl Fn(&E, &E) -> E + Send + Sync + 'static,
        inv: impl Fn(&E) -> E + Send + Sync + 'static,
        identity: E,
        phi: impl Fn(&E) -> E + Send + Sync + 'static,
        samples: &[E],
    ) -> Result<Self, SpotCheckError> {
        let iface = Self::new(mul, inv, identity, phi);
        iface.spot_check(samples)?;
        Ok(iface)
    }

    fn spot_check(&self, samples: &[E]) -> Result<(), SpotCheckError> {
        let e = &self.identity;
        for a in samples {
            if &(self.mul)(a, e) != a || &(self.mul)(e, a) != a {
                return Err(SpotCheckError::Identity);
            }
            let ai = (self.inv)(a);
            if &(self.mul)(a, &ai) != e || &(self.mul)(&ai, a) != e {
                return Err(SpotCheckError::Inverse);
            }
        }
        for (i, a) in samples.iter().enumerate() {
            for b in samples {
                let c = &samples[(i * 7 + 3) % samples.len().max(1)];
                let lhs = (self.mul)(&(self.mul)(a, b), c);
                let rhs = (self.mul)(a, &(self.mul)(b, c));
                if lhs != rhs {
                    return Err(SpotCheckError::Associativity);
                }
                let pm = (self.phi)(&(self.mul)(a, b));
                let mp = (self.mul)(&(self.phi)(a), &(self.phi)(b));
                if pm != mp {
                    return Err(SpotCheckError::Homomorphism);
                }
            }
        }
        Ok(())
    }

    pub fn identity(&self) -> &E {
        &self.identity
    }

    pub fn mul(&self, a: &E, b: &E) -> E {
        (self.mul)(a, b)
    }

    pub fn inv(&self, a: &E) -> E {
        (self.inv)(a)
    }

    pub fn phi(&self, a: &E) -> E {
        (self.phi)(a)
    }

    /// The twisted conjugate `g · h · φ(g⁻¹)`.
    pub fn twisted_conjugate(&self, g: &E, h: &E) -> E {
        let pg = (self.phi)(&(self.inv)(g));
        (self.mul)(&(self.mul)(g, h), &pg)
    }

    /// One-sided check: `true` if some candidate conjugator links `h1` to
    /// `h2`. A `false` result is NOT a proof of inequivalence, only "not
    /// found among the candidates".
    pub fn are_twisted_conjugate<'a, I>(&self, h1: &E, h2: &E, conjugators: I) -> bool
    where
        I: IntoIterator<Item = &'a E>,
        E: 'a,
    {
        if h1 == h2 {
            return true;
        }
        conjugators
            .into_iter()
            .any(|g| &self.twisted_conjugate(g, h1) == h2)
    }

    /// Partitions `ball` under the links `h ~ g·h·φ(g⁻¹)` for every `g` in
    /// `conjugators`, keeping only links whose endpoint lies in the ball.
    ///
    /// The block count is an upper bound on the number of twisted conjugacy
    /// classes meeting the ball; blocks can only merge, never split, as the
    /// conjugator set grows. The result is independent of element order.
    pub fn partition_ball(&self, ball: &[E], conjugators: &[E]) -> ClassPartition<E> {
        let index: HashMap<&E, u32> = ball
            .iter()
            .enumerate()
            .map(|(i, e)| (e, i as u32))
            .collect();
        // Hoisting φ(g⁻¹) out of the ball loop: the twisted conjugation by a
        // fixed g is then two multiplications per element.
        let prepared: Vec<(&E, E)> = conjugators
            .iter()
            .map(|g| (g, (self.phi)(&(self.inv)(g))))
            .collect();
        let mut uf = UnionFind::new(ball.len());
        for (i, h) in ball.iter().enumerate() {
            for (g, pg) in &prepared {
                let x = (self.mul)(&(self.mul)(g, h), pg);
                if let Some(&j) = index.get(&x) {
                    uf.union(i, j as usize);
                }
            }
        }
        ClassPartition::from_union_find(ball, &mut uf)
    }
}

/// A partition of a finite element ball into twisted-conjugacy blocks.
///
/// Each block is represented by its first element in ball order; blocks are
/// listed in ball order of their representatives.
pub struct ClassPartition<E> {
    blocks: Vec<Vec<E>>,
    block_of: HashMap<E, usize>,
}

impl<E: Clone + Eq + Hash> ClassPartition<E> {
    fn from_union_find(ball: &[E], uf: &mut UnionFind) -> Self {
        let mut root_to_block: HashMap<usize, usize> = HashMap::new();
        let mut blocks: Vec<Vec<E>> = vec![];
        let mut block_of = HashMap::with_capacity(ball.len());
        for (i, e) in ball.iter().enumerate() {
            let root = uf.find(i);
            let b = *root_to_block.entry(root).or_insert_with(|| {
                blocks.push(vec![]);
                blocks.len() - 1
            });
            blocks[b].push(e.clone());
            block_of.insert(e.clone(), b);
        }
        ClassPartition { blocks, block_of }
    }

    pub fn class_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Vec<E>] {
        &self.blocks
    }

    /// The block representative (first element in ball order), if present.
    pub fn representative_of(&self, e: &E) -> Option<&E> {
        self.block_of.get(e).map(|&b| &self.blocks[b][0])
    }

    pub fn same_block(&self, a: &E, b: &E) -> Option<bool> {
        Some(self.block_of.get(a)? == self.block_of.get(b)?)
    }

    pub fn block_of(&self, e: &E) -> Option<&[E]> {
        self.block_of.get(e).map(|&b| self.blocks[b].as_slice())
    }
}

/// Union-find with path halving and union by size.
struct UnionFind {
    parent: Vec<u32>,
    size: Vec<u32>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n as u32).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            let gp = self.parent[self.parent[x] as usize];
            self.parent[x] = gp;
            x = gp as usize;
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra as u32;
        self.size[ra] += self.size[rb];
    }
}
