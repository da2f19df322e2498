//! Dense linear algebra over the two-element field.

/// A bit vector of fixed length.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BitVec {
    words: Vec<u64>,
    len: usize,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec { words: vec![0; len.div_ceil(64)], len }
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = BitVec::zeros(len);
        v.flip(i);
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn set(&mut self, i: usize, value: bool) {
        if self.get(i) != value {
            self.flip(i);
        }
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Parity of the number of common set bits.
    pub fn dot(&self, other: &BitVec) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(|&i| self.get(i))
    }

    fn leading(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, w)| k * 64 + w.trailing_zeros() as usize)
    }
}

/// An incrementally maintained row-echelon basis of a subspace.
#[derive(Debug, Clone, Default)]
pub struct EchelonBasis {
    rows: Vec<(usize, BitVec)>,
}

impl EchelonBasis {
    pub fn new() -> Self {
        EchelonBasis::default()
    }

    fn reduce(&self, v: &BitVec) -> BitVec {
        let mut v = v.clone();
        for (pivot, row) in &self.rows {
            if v.get(*pivot) {
                v.xor_assign(row);
            }
        }
        v
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: &BitVec) -> bool {
        let r = self.reduce(v);
        match r.leading() {
            None => false,
            Some(p) => {
                for (_, row) in self.rows.iter_mut() {
                    if row.get(p) {
                        row.xor_assign(&r);
                    }
                }
                self.rows.push((p, r));
                true
            }
        }
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }
}

/// Rank of a list of vectors.
pub fn rank(vectors: &[BitVec]) -> usize {
    let mut basis = EchelonBasis::new();
    vectors.iter().filter(|v| basis.insert(v)).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_membership() {
        let mut a = BitVec::zeros(70);
        a.flip(0);
        a.flip(65);
        let mut b = BitVec::zeros(70);
        b.flip(65);
        let mut c = a.clone();
        c.xor_assign(&b);
        assert_eq!(rank(&[a.clone(), b.clone(), c.clone()]), 2);
        let mut basis = EchelonBasis::new();
        basis.insert(&a);
        assert!(!basis.contains(&b));
        basis.insert(&b);
        assert!(basis.contains(&BitVec::unit(70, 0)));
        assert!(a.dot(&b));
    }
}
