use std::fmt;

use crate::graph::SimpleGraph;

/// A permutation of `0..n`, stored as its image array.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<usize>,
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.cycles().into_iter().filter(|c| c.len() > 1).collect::<Vec<_>>())
    }
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { image: (0..n).collect() }
    }

    /// Returns `None` unless `image` is a bijection of `0..image.len()`.
    pub fn from_images(image: Vec<usize>) -> Option<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &x in &image {
            if x >= n || seen[x] {
                return None;
            }
            seen[x] = true;
        }
        Some(Permutation { image })
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.image
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation { image: other.image.iter().map(|&x| self.image[x]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (x, &y) in self.image.iter().enumerate() {
            inv[y] = x;
        }
        Permutation { image: inv }
    }

    pub fn pow(&self, mut e: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.len());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(x, &y)| x == y)
    }

    /// Disjoint cycles, each starting at its smallest point, including fixed
    /// points.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for s in 0..self.len() {
            if seen[s] {
                continue;
            }
            let mut cycle = vec![s];
            seen[s] = true;
            let mut x = self.image[s];
            while x != s {
                seen[x] = true;
                cycle.push(x);
                x = self.image[x];
            }
            out.push(cycle);
        }
        out
    }

    pub fn order(&self) -> u128 {
        self.cycles().iter().fold(1u128, |acc, c| lcm(acc, c.len() as u128))
    }

    /// All cycles have the same length, i.e. `<self>` acts semiregularly.
    pub fn is_semiregular(&self) -> bool {
        let cycles = self.cycles();
        cycles.iter().all(|c| c.len() == cycles[0].len())
    }

    pub fn is_automorphism(&self, g: &SimpleGraph) -> bool {
        if self.len() != g.num_vertices() {
            return false;
        }
        (0..g.num_vertices()).all(|v| {
            let w = self.image[v];
            g.degree(v) == g.degree(w) && g.neighbours(v).iter().all(|&x| g.has_edge(w, self.image[x]))
        })
    }
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u128, b: u128) -> u128 {
    a / gcd(a, b) * b
}

/// A partition of `0..n` into orbits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitSet {
    blocks: Vec<Vec<usize>>,
    block_of: Vec<usize>,
}

impl OrbitSet {
    /// Orbits of the group generated by `gens` acting on `0..n`.
    pub fn from_generators(n: usize, gens: &[Permutation]) -> Self {
        Self::from_action(n, gens.len(), |g, x| gens[g].apply(x))
    }

    /// Orbits of an arbitrary action given as `act(generator, point)`.
    pub fn from_action(n: usize, num_gens: usize, act: impl Fn(usize, usize) -> usize) -> Self {
        let mut uf = UnionFind::new(n);
        for g in 0..num_gens {
            for x in 0..n {
                uf.union(x, act(g, x));
            }
        }
        Self::from_union_find(&mut uf)
    }

    fn from_union_find(uf: &mut UnionFind) -> Self {
        let n = uf.parent.len();
        let mut root_block = vec![usize::MAX; n];
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut block_of = vec![0; n];
        for x in 0..n {
            let r = uf.find(x);
            if root_block[r] == usize::MAX {
                root_block[r] = blocks.len();
                blocks.push(Vec::new());
            }
            block_of[x] = root_block[r];
            blocks[root_block[r]].push(x);
        }
        OrbitSet { blocks, block_of }
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_of(&self, x: usize) -> usize {
        self.block_of[x]
    }

    pub fn same_orbit(&self, a: usize, b: usize) -> bool {
        self.block_of[a] == self.block_of[b]
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}
