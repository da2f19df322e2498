//! Numerical semigroups of algebraic knots and their counting functions.
//!
//! The counting function of a semigroup `S` is `R(k) = #(S ∩ [0, k))`. Counting
//! functions of connected sums are infimal convolutions of the summands'
//! functions, and the V-invariants of an L-space knot are read off as
//! `V_s = R(g + s) - s`.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::SemigroupError;

/// A numerical semigroup, stored through its minimal generators and gaps.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NumericalSemigroup {
    generators: Vec<i64>,
    gaps: Vec<i64>,
}

impl NumericalSemigroup {
    /// The semigroup `⟨p, q⟩` of the torus knot `T(p, q)`.
    pub fn torus_knot(p: i64, q: i64) -> Result<Self, SemigroupError> {
        for &x in &[p, q] {
            if x < 2 {
                return Err(SemigroupError::OutOfRange { min: 2, got: x });
            }
        }
        if p.gcd(&q) != 1 {
            return Err(SemigroupError::NotCoprime(vec![p, q]));
        }
        Self::from_generators(&[p, q])
    }

    /// The semigroup generated by `gens`, which must be coprime.
    pub fn from_generators(gens: &[i64]) -> Result<Self, SemigroupError> {
        if gens.is_empty() {
            return Err(SemigroupError::Empty);
        }
        if let Some(&bad) = gens.iter().find(|&&g| g < 1) {
            return Err(SemigroupError::OutOfRange { min: 1, got: bad });
        }
        if gens.iter().fold(0i64, |acc, &g| acc.gcd(&g)) != 1 {
            return Err(SemigroupError::NotCoprime(gens.to_vec()));
        }
        let smallest = *gens.iter().min().expect("nonempty") as usize;
        // Sieve until `smallest` consecutive members appear; everything later is a member.
        let mut member = vec![true];
        let mut run = 1usize;
        let mut n = 0usize;
        while run < smallest {
            n += 1;
            let is = gens
                .iter()
                .any(|&g| (g as usize) <= n && member[n - g as usize]);
            member.push(is);
            run = if is { run + 1 } else { 0 };
        }
        let gaps: Vec<i64> = (0..member.len())
            .filter(|&i| !member[i])
            .map(|i| i as i64)
            .collect();
        Ok(Self::from_sorted_gaps_unchecked(gaps))
    }

    /// The semigroup whose complement in the nonnegative integers is `gaps`.
    pub fn from_gaps(gaps: &[i64]) -> Result<Self, SemigroupError> {
        if gaps.first().is_some_and(|&g| g < 1) || gaps.windows(2).any(|w| w[0] >= w[1]) {
            return Err(SemigroupError::MalformedGaps);
        }
        let sg = Self::from_sorted_gaps_unchecked(gaps.to_vec());
        let f = sg.frobenius();
        for a in 1..=f {
            if !sg.contains(a) {
                continue;
            }
            for b in a..=f - a {
                if sg.contains(b) && !sg.contains(a + b) {
                    return Err(SemigroupError::NotClosed { a, b, sum: a + b });
                }
            }
        }
        Ok(sg)
    }

    fn from_sorted_gaps_unchecked(gaps: Vec<i64>) -> Self {
        let mut sg = NumericalSemigroup { generators: Vec::new(), gaps };
        let f = sg.frobenius();
        let smallest = (1..).find(|&n| sg.contains(n)).expect("cofinite");
        let mut generators = Vec::new();
        for n in 1..=f + smallest {
            if sg.contains(n) && !(1..n).any(|a| sg.contains(a) && sg.contains(n - a)) {
                generators.push(n);
            }
        }
        sg.generators = generators;
        sg
    }

    /// Minimal generating set, sorted.
    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    /// Sorted list of positive integers not in the semigroup.
    pub fn gaps(&self) -> &[i64] {
        &self.gaps
    }

    /// Number of gaps, which is the genus of the corresponding knot.
    pub fn genus(&self) -> i64 {
        self.gaps.len() as i64
    }

    /// Largest gap, or -1 if there are none.
    pub fn frobenius(&self) -> i64 {
        self.gaps.last().copied().unwrap_or(-1)
    }

    pub fn contains(&self, n: i64) -> bool {
        n >= 0 && self.gaps.binary_search(&n).is_err()
    }

    /// Semigroup elements in `[0, upto)`.
    pub fn elements_below(&self, upto: i64) -> Vec<i64> {
        (0..upto).filter(|&n| self.contains(n)).collect()
    }

    pub fn counting_function(&self) -> CountingFunction {
        let horizon = self.frobenius() + 2;
        let mut table = Vec::with_capacity(horizon as usize + 1);
        let mut acc = 0;
        for k in 0..=horizon {
            table.push(acc);
            if self.contains(k) {
                acc += 1;
            }
        }
        CountingFunction { table, tail_offset: self.genus() }
    }
}

/// A nondecreasing step function `R: ℤ → ℤ≥0` with `R(k) = 0` for `k ≤ 0`,
/// increments in `{0, 1}` and affine tail `R(k) = k - tail_offset` for
/// `k ≥ threshold`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CountingFunction {
    table: Vec<i64>,
    tail_offset: i64,
}

impl CountingFunction {
    /// Builds a counting function from `R(0..=T)`; `T` is the last index.
    pub fn new(table: Vec<i64>, tail_offset: i64) -> Result<Self, SemigroupError> {
        let bad = |msg: &str| Err(SemigroupError::InvalidCountingFunction(msg.to_string()));
        if table.first() != Some(&0) {
            return bad("R(0) must be 0");
        }
        if table.windows(2).any(|w| !(0..=1).contains(&(w[1] - w[0]))) {
            return bad("increments must be 0 or 1");
        }
        let t = table.len() as i64 - 1;
        if table[t as usize] != t - tail_offset {
            return bad("value at the threshold must equal threshold - tail_offset");
        }
        if tail_offset < 0 {
            return bad("tail offset must be nonnegative");
        }
        Ok(CountingFunction { table, tail_offset })
    }

    /// `R(k) = max(k, 0)`, the counting function of the unknot.
    pub fn unknot() -> Self {
        CountingFunction { table: vec![0], tail_offset: 0 }
    }

    /// The closed form `R_n` of the torus knot `T(2, 2n+1)`.
    pub fn t2(n: i64) -> Self {
        let table = (0..=2 * n + 1).map(|k| r_closed_form_t2(n, k)).collect();
        CountingFunction { table, tail_offset: n }
    }

    pub fn eval(&self, k: i64) -> i64 {
        if k <= 0 {
            0
        } else if k >= self.threshold() {
            k - self.tail_offset
        } else {
            self.table[k as usize]
        }
    }

    /// The constant `c` with `R(k) = k - c` on the tail; the total genus.
    pub fn tail_offset(&self) -> i64 {
        self.tail_offset
    }

    /// Index from which the affine tail holds.
    pub fn threshold(&self) -> i64 {
        self.table.len() as i64 - 1
    }

    /// `(self ⋄ other)(m) = min_{i+j=m} self(i) + other(j)`.
    pub fn convolve(&self, other: &CountingFunction) -> CountingFunction {
        let (t1, t2) = (self.threshold(), other.threshold());
        let horizon = t1 + t2;
        let table = (0..=horizon)
            .map(|m| {
                let lo = 0.max(m - t2);
                let hi = m.min(t1);
                (lo..=hi)
                    .map(|i| self.eval(i) + other.eval(m - i))
                    .min()
                    .expect("window is nonempty for 0 <= m <= t1 + t2")
            })
            .collect();
        CountingFunction { table, tail_offset: self.tail_offset + other.tail_offset }
    }

    /// Convolution of any number of counting functions (the unknot for none).
    pub fn convolve_all<'a>(fns: impl IntoIterator<Item = &'a CountingFunction>) -> CountingFunction {
        fns.into_iter()
            .fold(CountingFunction::unknot(), |acc, r| acc.convolve(r))
    }

    /// `V_s = R(g + s) - s` with `g` the tail offset.
    pub fn v(&self, s: i64) -> i64 {
        v_from_r(self, self.tail_offset, s)
    }
}

/// The semigroup `⟨p, q⟩`.
pub fn torus_knot_semigroup(p: i64, q: i64) -> Result<NumericalSemigroup, SemigroupError> {
    NumericalSemigroup::torus_knot(p, q)
}

/// `R(k) = #(S ∩ [0, k))`.
pub fn counting_function(s: &NumericalSemigroup) -> CountingFunction {
    s.counting_function()
}

/// `R_n(k)`: 0 for `k ≤ 0`, `⌊(k+1)/2⌋` for `0 < k < 2n+1`, `k - n` beyond.
pub fn r_closed_form_t2(n: i64, k: i64) -> i64 {
    if k <= 0 {
        0
    } else if k < 2 * n + 1 {
        (k + 1) / 2
    } else {
        k - n
    }
}

/// Infimal convolution `R1 ⋄ R2`.
pub fn infimal_convolution(r1: &CountingFunction, r2: &CountingFunction) -> CountingFunction {
    r1.convolve(r2)
}

/// `V_s = R(g + s) - (g + s) + g`, where `g` is the tail offset of `r`.
pub fn v_from_r(r: &CountingFunction, g: i64, s: i64) -> i64 {
    debug_assert_eq!(g, r.tail_offset());
    r.eval(g + s) - s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trefoil() {
        let s = torus_knot_semigroup(2, 3).unwrap();
        assert_eq!(s.gaps(), &[1]);
        assert_eq!(s.genus(), 1);
        assert_eq!(s.generators(), &[2, 3]);
        assert_eq!(s.counting_function().eval(0), 0);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(torus_knot_semigroup(4, 6), Err(SemigroupError::NotCoprime(_))));
        assert!(matches!(torus_knot_semigroup(1, 6), Err(SemigroupError::OutOfRange { .. })));
        assert!(matches!(
            NumericalSemigroup::from_gaps(&[2]),
            Err(SemigroupError::NotClosed { .. })
        ));
        assert!(NumericalSemigroup::from_gaps(&[2, 1]).is_err());
    }

    #[test]
    fn gaps_round_trip() {
        let s = NumericalSemigroup::from_generators(&[3, 4, 5]).unwrap();
        assert_eq!(s.gaps(), &[1, 2]);
        let t = NumericalSemigroup::from_gaps(&[1, 2]).unwrap();
        assert_eq!(s, t);
        let trivial = NumericalSemigroup::from_generators(&[1]).unwrap();
        assert_eq!(trivial.frobenius(), -1);
        let r = trivial.counting_function();
        assert!((-3..10).all(|k| r.eval(k) == k.max(0)));
    }

    #[test]
    fn closed_form_branches() {
        assert_eq!(r_closed_form_t2(1, 3), 2);
        assert_eq!(r_closed_form_t2(5, -2), 0);
        assert_eq!(r_closed_form_t2(3, 9), 6);
    }

    #[test]
    fn counting_function_validation() {
        assert!(CountingFunction::new(vec![0, 1, 1, 2], 1).is_ok());
        assert!(CountingFunction::new(vec![0, 2], 0).is_err());
        assert!(CountingFunction::new(vec![1], 0).is_err());
        assert!(CountingFunction::new(vec![0, 1, 1], 0).is_err());
    }
}
