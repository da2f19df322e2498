//! Homology of graded `F[U]`-complexes by graded Smith normal form.
//!
//! Every entry of a homogeneous differential is a single power of `U` fixed by
//! the gradings of its endpoints, so the matrix is stored as a bit pattern.
//! The reduction repeatedly picks the nonzero entry of minimal `U`-degree
//! (ties broken by smallest column, then smallest row), clears its row by
//! column operations and splits off the pair as `F[U]/U^c`. Generators left
//! untouched at the end span the free part. Representatives and dual
//! coordinate functionals of the free generators are tracked in the original
//! basis for inducing chain maps on the free part.

use std::collections::BTreeSet;

use super::f2::BitVec;
use super::ucomplex::{GradedUComplex, UMap};

/// A generator of a free summand of homology.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeGenerator {
    /// Original generator that survived the reduction.
    pub index: usize,
    /// Doubled `gr_w` grading.
    pub grading: i64,
    /// Support of a homogeneous cycle representing it, in the original basis.
    pub representative: BitVec,
    /// Support of the dual functional reading off its coefficient.
    pub coordinate: BitVec,
}

/// A torsion summand `F[U]/U^order` generated in the given doubled grading.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct TorsionSummand {
    pub grading: i64,
    pub order: u32,
}

/// `H_*` as a graded `F[U]`-module: free generators plus torsion summands.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedHomology {
    pub free: Vec<FreeGenerator>,
    pub torsion: Vec<TorsionSummand>,
    /// Number of pivots, including order-0 cancellations.
    pub pivots: usize,
}

struct Reducer<'a> {
    gradings: &'a [i64],
    cols: Vec<BTreeSet<usize>>,
    rows: Vec<BTreeSet<usize>>,
    queue: BTreeSet<(u32, usize, usize)>,
}

impl Reducer<'_> {
    fn degree(&self, from: usize, to: usize) -> u32 {
        let c = self.gradings[to] - self.gradings[from] + 2;
        debug_assert!(c >= 0 && c % 4 == 0, "inhomogeneous entry {from}->{to}");
        (c / 4) as u32
    }

    fn toggle(&mut self, from: usize, to: usize) {
        let key = (self.degree(from, to), from, to);
        if self.cols[from].remove(&to) {
            self.rows[to].remove(&from);
            self.queue.remove(&key);
        } else {
            self.cols[from].insert(to);
            self.rows[to].insert(from);
            self.queue.insert(key);
        }
    }

    fn clear_col(&mut self, x: usize) {
        for t in std::mem::take(&mut self.cols[x]) {
            self.rows[t].remove(&x);
            self.queue.remove(&(self.degree(x, t), x, t));
        }
    }

    fn clear_row(&mut self, y: usize) {
        for f in std::mem::take(&mut self.rows[y]) {
            self.cols[f].remove(&y);
            self.queue.remove(&(self.degree(f, y), f, y));
        }
    }
}

/// Computes homology by graded Smith normal form.
pub fn graded_homology(c: &GradedUComplex) -> GradedHomology {
    let n = c.len();
    let mut red = Reducer {
        gradings: &c.gradings,
        cols: vec![BTreeSet::new(); n],
        rows: vec![BTreeSet::new(); n],
        queue: BTreeSet::new(),
    };
    for &(f, t) in c.diff.keys() {
        red.toggle(f, t);
    }
    let mut rep: Vec<BitVec> = (0..n).map(|i| BitVec::unit(n, i)).collect();
    let mut coord: Vec<BitVec> = (0..n).map(|i| BitVec::unit(n, i)).collect();
    let mut alive = vec![true; n];
    let mut torsion = Vec::new();
    let mut pivots = 0;
    while let Some(&(deg, x, y)) = red.queue.first() {
        pivots += 1;
        let col_x: Vec<usize> = red.cols[x].iter().copied().collect();
        let others: Vec<usize> = red.rows[y].iter().copied().filter(|&z| z != x).collect();
        for z in others {
            for &t in &col_x {
                red.toggle(z, t);
            }
            let rx = rep[x].clone();
            rep[z].xor_assign(&rx);
        }
        let cy = coord[y].clone();
        for &t in col_x.iter().filter(|&&t| t != y) {
            coord[t].xor_assign(&cy);
        }
        red.clear_col(x);
        red.clear_row(y);
        red.clear_row(x);
        red.clear_col(y);
        alive[x] = false;
        alive[y] = false;
        if deg > 0 {
            torsion.push(TorsionSummand { grading: c.gradings[y], order: deg });
        }
    }
    torsion.sort();
    let free = (0..n)
        .filter(|&i| alive[i])
        .map(|i| FreeGenerator {
            index: i,
            grading: c.gradings[i],
            representative: rep[i].clone(),
            coordinate: coord[i].clone(),
        })
        .collect();
    GradedHomology { free, torsion, pivots }
}

impl GradedHomology {
    /// Maximal doubled grading of a free generator.
    pub fn top_free_grading(&self) -> Option<i64> {
        self.free.iter().map(|f| f.grading).max()
    }

    /// Dimension over `F` of homology in doubled grading `t`.
    pub fn dim_in_grading(&self, t: i64) -> usize {
        let free = self
            .free
            .iter()
            .filter(|f| f.grading >= t && (f.grading - t) % 4 == 0)
            .count();
        let tors = self
            .torsion
            .iter()
            .filter(|s| {
                s.grading >= t && (s.grading - t) % 4 == 0 && s.grading - t < 4 * s.order as i64
            })
            .count();
        free + tors
    }

    /// Matrix of the map induced on the free part by a chain map of degree -2
    /// (doubled). Entry `[j][i]` is the coefficient of free generator `j` in
    /// the image of free generator `i`.
    pub fn induced_matrix(&self, n: usize, map: &UMap) -> Vec<BitVec> {
        let mut cols: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(f, t) in map.keys() {
            cols[f].push(t);
        }
        let k = self.free.len();
        let mut m = vec![BitVec::zeros(k); k];
        for (i, gen) in self.free.iter().enumerate() {
            let mut image = BitVec::zeros(n);
            for o in gen.representative.ones() {
                for &t in &cols[o] {
                    image.flip(t);
                }
            }
            for (j, target) in self.free.iter().enumerate() {
                if target.coordinate.dot(&image) {
                    m[j].flip(i);
                }
            }
        }
        m
    }
}
