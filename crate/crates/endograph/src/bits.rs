//! Fixed-width bit rows and square bit matrices.
//!
//! Adjacency and reachability are stored as rows of 64-bit words so that
//! transitive closure, row unions, and subset tests are word-parallel.

/// A set over `0..len` backed by 64-bit words.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BitRow {
    words: Vec<u64>,
    len: usize,
}

impl BitRow {
    pub fn new(len: usize) -> Self {
        BitRow {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i >> 6] >> (i & 63) & 1 != 0
    }

    #[inline]
    pub fn set(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i >> 6] |= 1 << (i & 63);
    }

    #[inline]
    pub fn clear(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i >> 6] &= !(1 << (i & 63));
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn union_with(&mut self, other: &BitRow) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= *b;
        }
    }

    pub fn intersect_with(&mut self, other: &BitRow) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= *b;
        }
    }

    pub fn is_subset_of(&self, other: &BitRow) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    /// Subset test ignoring one position of self.
    pub fn is_subset_of_except(&self, other: &BitRow, except: usize) -> bool {
        let (wi, bit) = (except >> 6, 1u64 << (except & 63));
        self.words.iter().zip(&other.words).enumerate().all(|(i, (a, b))| {
            let a = if i == wi { a & !bit } else { *a };
            a & !b == 0
        })
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }
}

/// A square boolean matrix, one `BitRow` per row.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BitMat {
    rows: Vec<BitRow>,
}

impl BitMat {
    pub fn new(n: usize) -> Self {
        BitMat {
            rows: vec![BitRow::new(n); n],
        }
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].get(j)
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize) {
        self.rows[i].set(j);
    }

    pub fn row(&self, i: usize) -> &BitRow {
        &self.rows[i]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut BitRow {
        &mut self.rows[i]
    }

    /// True if `get(i, j) && get(j, k)` always implies `get(i, k)`.
    pub fn is_transitive(&self) -> bool {
        let n = self.n();
        for i in 0..n {
            for j in self.rows[i].iter_ones() {
                if !self.rows[j].is_subset_of(&self.rows[i]) {
                    return false;
                }
            }
        }
        let _ = n;
        true
    }
}
