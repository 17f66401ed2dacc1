use crate::bitset::BitSet;

/// Row space over GF(2) kept in reduced row echelon form, rows packed as bitsets.
#[derive(Clone, Debug)]
pub struct Gf2Space {
    n: usize,
    rows: Vec<BitSet>,
    pivots: Vec<usize>,
}

impl Gf2Space {
    pub fn new(n: usize) -> Gf2Space {
        Gf2Space { n, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn width(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// `v` reduced against the current rows.
    pub fn reduce(&self, v: &BitSet) -> BitSet {
        let mut v = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v.contains(p) {
                v.xor_with(row);
            }
        }
        v
    }

    pub fn contains(&self, v: &BitSet) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: &BitSet) -> bool {
        let v = self.reduce(v);
        let Some(p) = v.first() else { return false };
        for row in &mut self.rows {
            if row.contains(p) {
                row.xor_with(&v);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.rows.insert(at, v);
        self.pivots.insert(at, p);
        true
    }

    /// Basis of {x : r·x = 0 for every row r}, one vector per free column in
    /// increasing order.
    pub fn nullspace(&self) -> Vec<BitSet> {
        let mut is_pivot = vec![false; self.n];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.n)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut x = BitSet::new(self.n);
                x.insert(f);
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    if row.contains(f) {
                        x.insert(p);
                    }
                }
                x
            })
            .collect()
    }
}
