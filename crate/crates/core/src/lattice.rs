use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::group::{is_prime, p_part, Group};
use std::collections::HashMap;

#[derive(Clone, Debug)]
pub struct Subgroup {
    pub members: BitSet,
    pub order: usize,
    /// A generating set, as element indices.
    pub gens: Vec<usize>,
}

/// Every subgroup of a group, sorted by (order, member list), with inclusion,
/// conjugation and conjugacy classes. Id 0 is the trivial subgroup and the
/// last id is the whole group; ids therefore form a linear extension of ≤.
#[derive(Clone, Debug)]
pub struct Lattice {
    group: Group,
    subs: Vec<Subgroup>,
    index: HashMap<BitSet, usize>,
    below: Vec<BitSet>,
    conj: Vec<u32>,
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
    normalizer: Vec<usize>,
}

impl Lattice {
    pub fn new(group: Group, cap: usize) -> Result<Lattice> {
        let n = group.order();
        if n > cap {
            return Err(Error::CapExceeded { order: n, cap });
        }
        let mut found: HashMap<BitSet, Vec<usize>> = HashMap::new();
        let mut work: Vec<BitSet> = Vec::new();
        let mut cyclic: Vec<(BitSet, usize)> = Vec::new();
        for g in 0..n {
            let c = group.generate([g]);
            if !found.contains_key(&c) {
                found.insert(c.clone(), if g == 0 { vec![] } else { vec![g] });
                work.push(c.clone());
                cyclic.push((c, g));
            }
        }
        // Join every subgroup found with every cyclic subgroup until nothing new appears.
        let mut head = 0;
        while head < work.len() {
            let h = work[head].clone();
            let gens = found[&h].clone();
            for (c, g) in &cyclic {
                if c.is_subset(&h) {
                    continue;
                }
                let j = group.generate(gens.iter().copied().chain([*g]));
                if !found.contains_key(&j) {
                    let mut jg = gens.clone();
                    jg.push(*g);
                    found.insert(j.clone(), jg);
                    work.push(j);
                }
            }
            head += 1;
        }
        let mut subs: Vec<Subgroup> = found
            .into_iter()
            .map(|(members, gens)| Subgroup { order: members.len(), members, gens })
            .collect();
        subs.sort_by(|a, b| a.order.cmp(&b.order).then_with(|| a.members.cmp_lex(&b.members)));
        for s in &subs {
            if n % s.order != 0 {
                return Err(Error::Invariant(format!("subgroup of order {} in group of order {n}", s.order)));
            }
        }
        let index: HashMap<BitSet, usize> = subs.iter().enumerate().map(|(i, s)| (s.members.clone(), i)).collect();
        let m = subs.len();
        let below: Vec<BitSet> = (0..m)
            .map(|j| BitSet::from_iter(m, (0..=j).filter(|&i| subs[i].members.is_subset(&subs[j].members))))
            .collect();
        let mut conj = vec![0u32; m * n];
        for (id, s) in subs.iter().enumerate() {
            for g in 0..n {
                let c = BitSet::from_iter(n, s.members.iter().map(|x| group.conj(g, x)));
                conj[id * n + g] = index[&c] as u32;
            }
        }
        let mut class_of = vec![usize::MAX; m];
        let mut classes = Vec::new();
        for id in 0..m {
            if class_of[id] == usize::MAX {
                let mut members: Vec<usize> = (0..n).map(|g| conj[id * n + g] as usize).collect();
                members.sort_unstable();
                members.dedup();
                for &k in &members {
                    class_of[k] = classes.len();
                }
                classes.push(members);
            }
        }
        let normalizer = (0..m)
            .map(|id| {
                let nset = BitSet::from_iter(n, (0..n).filter(|&g| conj[id * n + g] as usize == id));
                index[&nset]
            })
            .collect();
        Ok(Lattice { group, subs, index, below, conj, class_of, classes, normalizer })
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.subs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subs.is_empty()
    }

    pub fn trivial(&self) -> usize {
        0
    }

    pub fn whole(&self) -> usize {
        self.subs.len() - 1
    }

    pub fn subgroup(&self, id: usize) -> &Subgroup {
        &self.subs[id]
    }

    pub fn members(&self, id: usize) -> &BitSet {
        &self.subs[id].members
    }

    pub fn order(&self, id: usize) -> usize {
        self.subs[id].order
    }

    pub fn id_of(&self, members: &BitSet) -> Option<usize> {
        self.index.get(members).copied()
    }

    /// Id of the subgroup generated by `gens`.
    pub fn generated(&self, gens: impl IntoIterator<Item = usize>) -> usize {
        self.index[&self.group.generate(gens)]
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.below[b].contains(a)
    }

    /// Ids of the subgroups of `b`.
    pub fn below(&self, b: usize) -> &BitSet {
        &self.below[b]
    }

    /// `g H g⁻¹`.
    #[inline]
    pub fn conj(&self, id: usize, g: usize) -> usize {
        self.conj[id * self.group.order() + g] as usize
    }

    pub fn class_of(&self, id: usize) -> usize {
        self.class_of[id]
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    /// Least member of the class, which has the least member list.
    pub fn class_rep(&self, class: usize) -> usize {
        self.classes[class][0]
    }

    pub fn normalizer(&self, id: usize) -> usize {
        self.normalizer[id]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        let gens = self.subs[a].gens.iter().chain(&self.subs[b].gens).copied();
        self.generated(gens)
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.index[&self.subs[a].members.intersection(&self.subs[b].members)]
    }

    pub fn is_normal_in(&self, s: usize, t: usize) -> bool {
        self.leq(s, t) && self.members(t).iter().all(|g| self.conj(s, g) == s)
    }

    pub fn is_abelian(&self, h: usize) -> bool {
        let g = &self.group;
        let gens = &self.subs[h].gens;
        gens.iter().all(|&a| gens.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
    }

    /// N_G(T,S): elements normalizing both T and S.
    pub fn normalizer_pair(&self, t: usize, s: usize) -> Result<usize> {
        if !self.leq(s, t) {
            return Err(Error::NotSlice);
        }
        Ok(self.meet(self.normalizer[t], self.normalizer[s]))
    }

    /// Smallest normal subgroup of T containing S.
    pub fn normal_closure(&self, s: usize, t: usize) -> Result<usize> {
        if !self.leq(s, t) {
            return Err(Error::NotSlice);
        }
        let mut gens: Vec<usize> = Vec::new();
        for x in self.members(t).iter() {
            gens.extend(self.subs[self.conj(s, x)].gens.iter().copied());
        }
        gens.sort_unstable();
        gens.dedup();
        Ok(self.generated(gens))
    }

    pub fn derived_subgroup(&self, h: usize) -> usize {
        let g = &self.group;
        let mem = self.members(h).to_vec();
        let mut comms = BitSet::new(g.order());
        for &a in &mem {
            for &b in &mem {
                comms.insert(g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)));
            }
        }
        self.generated(comms.iter())
    }

    /// Last term of the derived series of H.
    pub fn derived_series_limit(&self, h: usize) -> usize {
        let mut cur = h;
        loop {
            let next = self.derived_subgroup(cur);
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    pub fn is_perfect(&self, h: usize) -> bool {
        self.derived_subgroup(h) == h
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series_limit(self.whole()) == 0
    }

    /// O^p(H), generated by the elements of H of order prime to p.
    pub fn o_p_residual(&self, h: usize, p: usize) -> Result<usize> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        let g = &self.group;
        Ok(self.generated(self.members(h).iter().filter(|&x| g.element_order(x) % p != 0)))
    }

    /// Sylow p-subgroup of H with the least member list.
    pub fn sylow(&self, h: usize, p: usize) -> Result<usize> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        let target = p_part(self.order(h), p);
        Ok(self.below(h).iter().find(|&k| self.order(k) == target).expect("Sylow subgroups exist"))
    }

    /// All subgroups of H whose order is a power of p, including the trivial one.
    pub fn p_subgroups(&self, h: usize, p: usize) -> Vec<usize> {
        self.below(h).iter().filter(|&k| p_part(self.order(k), p) == self.order(k)).collect()
    }

    /// Whether H is subnormal in K, via iterated normal closures.
    pub fn is_subnormal(&self, h: usize, k: usize) -> bool {
        if !self.leq(h, k) {
            return false;
        }
        let mut cur = k;
        loop {
            if cur == h {
                return true;
            }
            let next = self.normal_closure(h, cur).expect("h <= cur");
            if next == cur {
                return false;
            }
            cur = next;
        }
    }

    /// Element labels of a subgroup, in index order.
    pub fn labels(&self, id: usize) -> Vec<&str> {
        self.members(id).iter().map(|x| self.group.label(x)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{alternating, cyclic, symmetric};

    fn s3() -> Lattice {
        Lattice::new(symmetric(3, 100).unwrap(), 100).unwrap()
    }

    #[test]
    fn s3_operators() {
        let l = s3();
        assert_eq!((l.len(), l.classes().len()), (6, 4));
        let g = l.whole();
        let c2 = (0..l.len()).find(|&i| l.order(i) == 2).unwrap();
        let a3 = (0..l.len()).find(|&i| l.order(i) == 3).unwrap();
        assert_eq!(l.normalizer_pair(g, c2).unwrap(), c2);
        assert_eq!(l.normal_closure(c2, g).unwrap(), g);
        assert_eq!(l.normal_closure(a3, g).unwrap(), a3);
        assert_eq!(l.derived_series_limit(g), 0);
        assert_eq!(l.o_p_residual(g, 2).unwrap(), a3);
        assert_eq!(l.o_p_residual(g, 3).unwrap(), g);
        assert_eq!(l.sylow(g, 3).unwrap(), a3);
        assert_eq!(l.sylow(a3, 2).unwrap(), 0);
        assert!(l.normalizer_pair(c2, g).is_err());
        assert!(l.o_p_residual(g, 4).is_err());
        assert!(l.is_solvable());
    }

    #[test]
    fn a5_lattice() {
        let l = Lattice::new(alternating(5, 100).unwrap(), 100).unwrap();
        assert_eq!((l.len(), l.classes().len()), (59, 9));
        assert!(l.is_perfect(l.whole()));
        assert!(!l.is_solvable());
    }

    #[test]
    fn cap_is_enforced() {
        let g = cyclic(12, 100).unwrap();
        assert_eq!(Lattice::new(g, 10).unwrap_err(), Error::CapExceeded { order: 12, cap: 10 });
    }
}
