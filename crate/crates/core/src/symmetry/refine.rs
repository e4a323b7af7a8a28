//! Ordered partitions and equitable refinement.
//!
//! Every decision here depends on cell positions and neighbour counts only,
//! never on vertex ids, so refinement commutes with relabelling the graph.
//! The returned trace hash is therefore an isomorphism invariant of the
//! (graph, individualised sequence) pair.

use std::collections::VecDeque;

const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
const FNV_PRIME: u64 = 0x0000_0100_0000_01b3;

#[inline]
fn mix(h: u64, x: u64) -> u64 {
    let h = (h ^ x).wrapping_mul(FNV_PRIME);
    h ^ (h >> 29)
}

#[derive(Debug, Clone)]
pub(crate) struct Partition {
    /// position -> vertex
    pub(crate) lab: Vec<usize>,
    /// vertex -> position
    pos: Vec<usize>,
    /// vertex -> start position of its cell
    cell: Vec<usize>,
    /// cell start -> cell end (exclusive); meaningful at cell starts only
    end: Vec<usize>,
    cells: usize,
}

impl Partition {
    pub(crate) fn unit(n: usize) -> Self {
        Partition { lab: (0..n).collect(), pos: (0..n).collect(), cell: vec![0; n], end: vec![n; n], cells: usize::from(n > 0) }
    }

    #[cfg(test)]
    pub(crate) fn is_discrete(&self) -> bool {
        self.cells == self.lab.len()
    }

    /// First non-singleton cell, as a position range.
    pub(crate) fn target_cell(&self) -> Option<(usize, usize)> {
        let mut s = 0;
        while s < self.lab.len() {
            let e = self.end[s];
            if e - s > 1 {
                return Some((s, e));
            }
            s = e;
        }
        None
    }

    /// Vertices of the cell `[s, e)`, sorted by id.
    pub(crate) fn cell_vertices(&self, (s, e): (usize, usize)) -> Vec<usize> {
        let mut out = self.lab[s..e].to_vec();
        out.sort_unstable();
        out
    }

    pub(crate) fn position(&self, v: usize) -> usize {
        self.pos[v]
    }

    #[inline]
    fn swap(&mut self, i: usize, j: usize) {
        self.lab.swap(i, j);
        self.pos[self.lab[i]] = i;
        self.pos[self.lab[j]] = j;
    }

    /// Splits `v` off its cell into a singleton at the cell's last position.
    fn individualize(&mut self, v: usize) -> usize {
        let s = self.cell[v];
        let e = self.end[s];
        debug_assert!(e - s > 1, "individualising a singleton");
        self.swap(self.pos[v], e - 1);
        self.end[s] = e - 1;
        self.end[e - 1] = e;
        self.cell[v] = e - 1;
        self.cells += 1;
        e - 1
    }
}

/// Scratch space for refinement, reusable across calls on one graph.
pub(crate) struct Refiner<'a> {
    adj: &'a [Vec<usize>],
    count: Vec<u32>,
    touched: Vec<usize>,
    queue: VecDeque<usize>,
    in_queue: Vec<bool>,
    fragments: Vec<(usize, usize, u32)>,
}

impl<'a> Refiner<'a> {
    pub(crate) fn new(adj: &'a [Vec<usize>]) -> Self {
        let n = adj.len();
        Refiner {
            adj,
            count: vec![0; n],
            touched: Vec::new(),
            queue: VecDeque::new(),
            in_queue: vec![false; n],
            fragments: Vec::new(),
        }
    }

    /// Refines the unit partition to the coarsest equitable partition.
    pub(crate) fn root(&mut self) -> (Partition, u64) {
        let mut p = Partition::unit(self.adj.len());
        let trace = if self.adj.is_empty() { FNV_OFFSET } else { self.refine(&mut p, 0) };
        (p, trace)
    }

    /// Individualises `v` and refines; returns the trace of this step.
    pub(crate) fn individualize(&mut self, p: &mut Partition, v: usize) -> u64 {
        let s = p.individualize(v);
        self.refine(p, s)
    }

    fn push(&mut self, s: usize) {
        if !self.in_queue[s] {
            self.in_queue[s] = true;
            self.queue.push_back(s);
        }
    }

    fn refine(&mut self, p: &mut Partition, splitter: usize) -> u64 {
        let mut h = mix(FNV_OFFSET, splitter as u64);
        self.push(splitter);
        while let Some(w) = self.queue.pop_front() {
            self.in_queue[w] = false;
            let we = p.end[w];
            self.touched.clear();
            for i in w..we {
                for &y in &self.adj[p.lab[i]] {
                    if self.count[y] == 0 {
                        self.touched.push(y);
                    }
                    self.count[y] += 1;
                }
            }
            let mut touched = std::mem::take(&mut self.touched);
            touched.sort_unstable_by_key(|&y| (p.cell[y], self.count[y]));
            let mut i = 0;
            while i < touched.len() {
                let s = p.cell[touched[i]];
                let mut j = i;
                while j < touched.len() && p.cell[touched[j]] == s {
                    j += 1;
                }
                h = self.split(p, &touched[i..j], h);
                i = j;
            }
            for &y in &touched {
                self.count[y] = 0;
            }
            self.touched = touched;
        }
        mix(h, p.cells as u64)
    }

    /// Splits the cell containing `group` (its touched vertices, sorted by
    /// count) into fragments of equal count.
    fn split(&mut self, p: &mut Partition, group: &[usize], h: u64) -> u64 {
        let s = p.cell[group[0]];
        let e = p.end[s];
        let t = group.len();
        let uniform = self.count[group[0]] == self.count[group[t - 1]];
        if e - s == 1 || (t == e - s && uniform) {
            return h;
        }
        let tail = e - t;
        for (j, &v) in group.iter().enumerate() {
            let from = p.pos[v];
            p.swap(from, tail + j);
        }
        self.fragments.clear();
        if tail > s {
            self.fragments.push((s, tail, 0));
        }
        let mut a = tail;
        while a < e {
            let c = self.count[p.lab[a]];
            let mut b = a + 1;
            while b < e && self.count[p.lab[b]] == c {
                b += 1;
            }
            self.fragments.push((a, b, c));
            a = b;
        }
        let mut h = mix(h, s as u64);
        for &(a, b, c) in &self.fragments {
            h = mix(h, ((b - a) as u64) << 8 | c as u64);
            p.end[a] = b;
            if a != s {
                for idx in a..b {
                    p.cell[p.lab[idx]] = a;
                }
            }
        }
        p.cells += self.fragments.len() - 1;
        let frags = std::mem::take(&mut self.fragments);
        if self.in_queue[s] {
            for &(a, _, _) in &frags[1..] {
                self.push(a);
            }
        } else {
            let largest = frags.iter().enumerate().max_by_key(|(i, f)| (f.1 - f.0, std::cmp::Reverse(*i))).map(|(i, _)| i).unwrap();
            for (i, &(a, _, _)) in frags.iter().enumerate() {
                if i != largest {
                    self.push(a);
                }
            }
        }
        self.fragments = frags;
        h
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Vec<Vec<usize>> {
        (0..n).map(|i| (0..n).filter(|&j| j + 1 == i || i + 1 == j).collect()).collect()
    }

    #[test]
    fn path_refines_by_distance_to_ends() {
        let adj = path(5);
        let mut r = Refiner::new(&adj);
        let (p, _) = r.root();
        // ends, next-to-ends, middle
        assert_eq!(p.cells, 3);
        let cell_of = |v: usize| p.cell[v];
        assert_eq!(cell_of(0), cell_of(4));
        assert_eq!(cell_of(1), cell_of(3));
        assert_ne!(cell_of(0), cell_of(2));
    }

    #[test]
    fn individualizing_an_end_of_a_path_is_discrete() {
        let adj = path(6);
        let mut r = Refiner::new(&adj);
        let (mut p, _) = r.root();
        r.individualize(&mut p, 0);
        assert!(p.is_discrete());
    }

    #[test]
    fn traces_are_label_invariant() {
        // the 6-cycle under two labellings
        let a: Vec<Vec<usize>> = (0..6).map(|i| vec![(i + 5) % 6, (i + 1) % 6]).collect();
        let relabel = [3, 0, 5, 1, 4, 2];
        let mut b = vec![Vec::new(); 6];
        for (i, list) in a.iter().enumerate() {
            b[relabel[i]] = list.iter().map(|&j| relabel[j]).collect();
        }
        let (mut pa, ta) = Refiner::new(&a).root();
        let (mut pb, tb) = Refiner::new(&b).root();
        assert_eq!(ta, tb);
        let t1 = Refiner::new(&a).individualize(&mut pa, 2);
        let t2 = Refiner::new(&b).individualize(&mut pb, relabel[2]);
        assert_eq!(t1, t2);
        assert_eq!(pa.cells, pb.cells);
    }
}
