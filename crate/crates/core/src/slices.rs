use crate::error::{Error, Result};
use crate::lattice::Lattice;

const NONE: u32 = u32::MAX;

/// All slices (T,S), S ≤ T, with their conjugacy classes.
///
/// Class ids follow the linear extension (|S|, |T|, S, T) of ⪯, so any mark
/// matrix indexed by class ids is upper triangular.
#[derive(Clone, Debug)]
pub struct SliceTable {
    nsub: usize,
    all: Vec<(usize, usize)>,
    index: Vec<u32>,
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
    section: Vec<bool>,
    normalizer: Vec<usize>,
    mu: Vec<i64>,
}

impl SliceTable {
    pub fn new(lat: &Lattice) -> SliceTable {
        let m = lat.len();
        let n = lat.group().order();
        let mut all = Vec::new();
        let mut index = vec![NONE; m * m];
        for t in 0..m {
            for s in lat.below(t).iter() {
                index[t * m + s] = all.len() as u32;
                all.push((t, s));
            }
        }
        let mut orbit_of = vec![usize::MAX; all.len()];
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        for (k, &(t, s)) in all.iter().enumerate() {
            if orbit_of[k] != usize::MAX {
                continue;
            }
            let mut members: Vec<usize> =
                (0..n).map(|g| index[lat.conj(t, g) * m + lat.conj(s, g)] as usize).collect();
            members.sort_unstable();
            members.dedup();
            for &x in &members {
                orbit_of[x] = orbits.len();
            }
            orbits.push(members);
        }
        // Members are sorted by (t, s), so members[0] is the least representative.
        orbits.sort_by_key(|o| {
            let (t, s) = all[o[0]];
            (lat.order(s), lat.order(t), s, t)
        });
        let mut class_of = vec![0; all.len()];
        for (c, o) in orbits.iter().enumerate() {
            for &x in o {
                class_of[x] = c;
            }
        }
        let section = orbits.iter().map(|o| lat.is_normal_in(all[o[0]].1, all[o[0]].0)).collect();
        let normalizer = orbits
            .iter()
            .map(|o| lat.normalizer_pair(all[o[0]].0, all[o[0]].1).expect("slice"))
            .collect();
        SliceTable { nsub: m, all, index, class_of, classes: orbits, section, normalizer, mu: mobius_table(lat) }
    }

    pub fn len(&self) -> usize {
        self.all.len()
    }

    pub fn is_empty(&self) -> bool {
        self.all.is_empty()
    }

    pub fn slices(&self) -> &[(usize, usize)] {
        &self.all
    }

    pub fn slice(&self, k: usize) -> (usize, usize) {
        self.all[k]
    }

    pub fn index(&self, t: usize, s: usize) -> Option<usize> {
        match self.index[t * self.nsub + s] {
            NONE => None,
            k => Some(k as usize),
        }
    }

    pub fn class_of_slice(&self, k: usize) -> usize {
        self.class_of[k]
    }

    pub fn class_of(&self, t: usize, s: usize) -> Result<usize> {
        self.index(t, s).map(|k| self.class_of[k]).ok_or(Error::NotSlice)
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn class_members(&self, c: usize) -> &[usize] {
        &self.classes[c]
    }

    /// Representative (T,S) of class `c`.
    pub fn rep(&self, c: usize) -> (usize, usize) {
        self.all[self.classes[c][0]]
    }

    pub fn is_section_class(&self, c: usize) -> bool {
        self.section[c]
    }

    pub fn section_classes(&self) -> Vec<usize> {
        (0..self.classes.len()).filter(|&c| self.section[c]).collect()
    }

    /// N_G(T,S) for the representative of class `c`.
    pub fn normalizer(&self, c: usize) -> usize {
        self.normalizer[c]
    }

    /// (T,S) ⪯ (Y,X).
    pub fn preceq(lat: &Lattice, a: (usize, usize), b: (usize, usize)) -> bool {
        lat.leq(a.0, b.0) && lat.leq(a.1, b.1)
    }

    /// Möbius function of the subgroup lattice; zero unless a ≤ b.
    pub fn mu(&self, a: usize, b: usize) -> i64 {
        self.mu[a * self.nsub + b]
    }

    pub fn mobius_subgroups(&self, lat: &Lattice, a: usize, b: usize) -> Result<i64> {
        if !lat.leq(a, b) {
            return Err(Error::Invalid("Möbius value requested for a pair that is not ordered".into()));
        }
        Ok(self.mu(a, b))
    }

    /// μ_Π((V,U),(T,S)) = μ(U,S)μ(V,T) when U ≤ S ≤ V ≤ T, otherwise 0.
    pub fn mobius_pi(&self, lat: &Lattice, a: (usize, usize), b: (usize, usize)) -> Result<i64> {
        let ((v, u), (t, s)) = (a, b);
        if !lat.leq(u, v) || !lat.leq(s, t) || !Self::preceq(lat, a, b) {
            return Err(Error::Invalid("μ_Π needs slices a ⪯ b".into()));
        }
        Ok(if lat.leq(s, v) { checked_mul(self.mu(u, s), self.mu(v, t)) } else { 0 })
    }

    /// μ_Σ((V,U),(T,S)) = μ(V,T) Σ_{U ≤ X ≤ V, X^{⊴T} = S} μ(U,X).
    pub fn mobius_sigma(&self, lat: &Lattice, a: (usize, usize), b: (usize, usize)) -> Result<i64> {
        let ((v, u), (t, s)) = (a, b);
        if !lat.is_normal_in(u, v) || !lat.is_normal_in(s, t) {
            return Err(Error::NotSection);
        }
        if !Self::preceq(lat, a, b) {
            return Err(Error::Invalid("μ_Σ needs sections a ⪯ b".into()));
        }
        let mut sum = 0i64;
        for x in lat.below(v).iter() {
            if lat.leq(u, x) && lat.normal_closure(x, t).expect("x <= t") == s {
                sum = sum.checked_add(self.mu(u, x)).expect("Möbius sum overflow");
            }
        }
        Ok(checked_mul(self.mu(v, t), sum))
    }
}

fn checked_mul(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("Möbius product overflow")
}

fn mobius_table(lat: &Lattice) -> Vec<i64> {
    let m = lat.len();
    let mut mu = vec![0i64; m * m];
    for a in 0..m {
        mu[a * m + a] = 1;
        for b in a + 1..m {
            if !lat.leq(a, b) {
                continue;
            }
            let mut sum = 0i64;
            for c in lat.below(b).iter() {
                if c != b && lat.leq(a, c) {
                    sum = sum.checked_add(mu[a * m + c]).expect("Möbius recursion overflow");
                }
            }
            mu[a * m + b] = -sum;
        }
    }
    mu
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, elementary_abelian, symmetric};

    #[test]
    fn small_tables() {
        let c1 = Lattice::new(cyclic(1, 100).unwrap(), 100).unwrap();
        let t = SliceTable::new(&c1);
        assert_eq!((t.len(), t.num_classes()), (1, 1));
        let c2 = Lattice::new(cyclic(2, 100).unwrap(), 100).unwrap();
        let t = SliceTable::new(&c2);
        assert_eq!((t.len(), t.num_classes(), t.section_classes().len()), (3, 3, 3));
        assert_eq!((0..3).map(|c| t.rep(c)).collect::<Vec<_>>(), vec![(0, 0), (1, 0), (1, 1)]);
    }

    #[test]
    fn s3_classes_and_klein_mobius() {
        let l = Lattice::new(symmetric(3, 100).unwrap(), 100).unwrap();
        let t = SliceTable::new(&l);
        assert_eq!((t.num_classes(), t.section_classes().len()), (9, 8));
        let bad: Vec<_> = (0..9).filter(|&c| !t.is_section_class(c)).map(|c| t.rep(c)).collect();
        assert_eq!(bad.len(), 1);
        assert_eq!((l.order(bad[0].0), l.order(bad[0].1)), (6, 2));

        let v = Lattice::new(elementary_abelian(2, 2, 100).unwrap(), 100).unwrap();
        let tv = SliceTable::new(&v);
        assert_eq!(tv.mu(0, v.whole()), 2);
        assert_eq!(tv.mu(0, 1), -1);
        assert_eq!(tv.num_classes(), 12);
    }
}
