mod families;
mod parse;
mod perm;

pub use families::{alternating, cyclic, dihedral, elementary_abelian, quaternion8, symmetric};
pub use parse::parse_group;
pub use perm::Perm;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use std::collections::HashMap;
use std::collections::VecDeque;

pub const DEFAULT_CAP: usize = 100;

/// Finite group as a multiplication table over `0..order`; element 0 is the identity.
#[derive(Clone, Debug)]
pub struct Group {
    name: String,
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    labels: Vec<String>,
    elem_class: Vec<u32>,
}

impl PartialEq for Group {
    fn eq(&self, other: &Self) -> bool {
        self.mul == other.mul
    }
}

impl Eq for Group {}

impl Group {
    /// Validates `table` (row-major, `table[a*n+b] = ab`) and builds the group.
    pub fn from_table(name: &str, n: usize, table: Vec<u32>, labels: Vec<String>) -> Result<Group> {
        if n == 0 || table.len() != n * n || labels.len() != n {
            return Err(Error::InvalidTable(format!("expected {n}x{n} entries and {n} labels")));
        }
        if let Some(&bad) = table.iter().find(|&&x| x as usize >= n) {
            return Err(Error::InvalidTable(format!("entry {bad} out of range")));
        }
        for a in 0..n {
            if table[a] as usize != a || table[a * n] as usize != a {
                return Err(Error::InvalidTable("element 0 is not a two-sided identity".into()));
            }
        }
        let mut inv = vec![u32::MAX; n];
        for a in 0..n {
            for b in 0..n {
                if table[a * n + b] == 0 && table[b * n + a] == 0 {
                    inv[a] = b as u32;
                    break;
                }
            }
            if inv[a] == u32::MAX {
                return Err(Error::InvalidTable(format!("element {a} has no inverse")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a * n + b] as usize;
                for c in 0..n {
                    let bc = table[b * n + c] as usize;
                    if table[ab * n + c] != table[a * n + bc] {
                        return Err(Error::InvalidTable(format!("not associative at ({a},{b},{c})")));
                    }
                }
            }
        }
        let mut g = Group { name: name.to_string(), order: n, mul: table, inv, labels, elem_class: vec![] };
        g.elem_class = g.compute_element_classes();
        Ok(g)
    }

    /// Closure of permutation generators on `degree` points, breadth first from the identity.
    pub fn from_permutations(name: &str, degree: usize, gens: &[Perm], cap: usize) -> Result<Group> {
        let id = Perm::identity(degree);
        let mut elems = vec![id.clone()];
        let mut index: HashMap<Perm, u32> = HashMap::from([(id, 0)]);
        let mut head = 0;
        while head < elems.len() {
            for s in gens {
                let p = elems[head].compose(s);
                if !index.contains_key(&p) {
                    if elems.len() == cap {
                        return Err(Error::CapExceeded { order: elems.len() + 1, cap });
                    }
                    index.insert(p.clone(), elems.len() as u32);
                    elems.push(p);
                }
            }
            head += 1;
        }
        let n = elems.len();
        let mut table = Vec::with_capacity(n * n);
        for a in &elems {
            for b in &elems {
                table.push(index[&a.compose(b)]);
            }
        }
        let labels = elems.iter().map(|p| p.to_string()).collect();
        Group::from_table(name, n, table, labels)
    }

    pub fn trivial() -> Group {
        Group::from_table("C1", 1, vec![0], vec!["e".into()]).expect("trivial table is valid")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: &str) -> Group {
        self.name = name.to_string();
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// `g x g⁻¹`.
    #[inline]
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn table(&self) -> &[u32] {
        &self.mul
    }

    pub fn element_class(&self, a: usize) -> usize {
        self.elem_class[a] as usize
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let (mut x, mut k) = (a, 1);
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Subgroup generated by `gens`.
    pub fn generate(&self, gens: impl IntoIterator<Item = usize>) -> BitSet {
        let gens: Vec<usize> = gens.into_iter().filter(|&g| g != 0).collect();
        let mut set = BitSet::new(self.order);
        set.insert(0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &s in &gens {
                let y = self.mul(x, s);
                if set.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        set
    }

    pub fn is_subgroup(&self, set: &BitSet) -> bool {
        set.contains(0)
            && set.iter().all(|a| set.iter().all(|b| set.contains(self.mul(a, b))))
    }

    /// Elements `(a, b)` are numbered `a * |other| + b`, so the identity stays at 0.
    pub fn direct_product(&self, other: &Group) -> Group {
        let (n, m) = (self.order, other.order);
        let mut table = Vec::with_capacity(n * m * n * m);
        for a1 in 0..n {
            for b1 in 0..m {
                for a2 in 0..n {
                    for b2 in 0..m {
                        table.push((self.mul(a1, a2) * m + other.mul(b1, b2)) as u32);
                    }
                }
            }
        }
        let mut labels = Vec::with_capacity(n * m);
        for a in 0..n {
            for b in 0..m {
                labels.push(format!("{}|{}", self.labels[a], other.labels[b]));
            }
        }
        let name = format!("{} x {}", self.name, other.name);
        Group::from_table(&name, n * m, table, labels).expect("product of valid tables is valid")
    }

    /// The subgroup `h` as a group in its own right, with elements in increasing
    /// index order; also returns the embedding into `self`.
    pub fn subgroup_group(&self, h: &BitSet, name: &str) -> (Group, Vec<usize>) {
        let embed = h.to_vec();
        let pos: HashMap<usize, usize> = embed.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let k = embed.len();
        let mut table = Vec::with_capacity(k * k);
        for &a in &embed {
            for &b in &embed {
                table.push(pos[&self.mul(a, b)] as u32);
            }
        }
        let labels = embed.iter().map(|&a| self.labels[a].clone()).collect();
        let g = Group::from_table(name, k, table, labels).expect("subgroup table is valid");
        (g, embed)
    }

    /// Quotient by a normal subgroup; cosets are numbered by their least element.
    /// Also returns the projection from `self`.
    pub fn quotient(&self, n: &BitSet, name: &str) -> Result<(Group, Vec<usize>)> {
        if !self.is_subgroup(n) || !self.is_normal(n) {
            return Err(Error::Invalid("quotient by a subgroup that is not normal".into()));
        }
        let mut proj = vec![usize::MAX; self.order];
        let mut reps = Vec::new();
        for g in 0..self.order {
            if proj[g] == usize::MAX {
                for x in n.iter() {
                    proj[self.mul(g, x)] = reps.len();
                }
                reps.push(g);
            }
        }
        let k = reps.len();
        let mut table = Vec::with_capacity(k * k);
        for &a in &reps {
            for &b in &reps {
                table.push(proj[self.mul(a, b)] as u32);
            }
        }
        let labels = reps.iter().map(|&a| format!("{}N", self.labels[a])).collect();
        Ok((Group::from_table(name, k, table, labels)?, proj))
    }

    pub fn is_normal(&self, n: &BitSet) -> bool {
        (0..self.order).all(|g| n.iter().all(|x| n.contains(self.conj(g, x))))
    }

    /// Copy of `self` with element `a` renamed to `perm[a]`; `perm[0]` must be 0.
    /// Returns the copy, whose isomorphism from `self` is `perm`.
    pub fn relabeled(&self, perm: &[usize], name: &str) -> Group {
        assert_eq!(perm[0], 0);
        let n = self.order;
        let mut back = vec![0; n];
        for (a, &p) in perm.iter().enumerate() {
            back[p] = a;
        }
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                table.push(perm[self.mul(back[x], back[y])] as u32);
            }
        }
        let labels = (0..n).map(|x| self.labels[back[x]].clone()).collect();
        Group::from_table(name, n, table, labels).expect("relabeled table is valid")
    }

    fn compute_element_classes(&self) -> Vec<u32> {
        let mut class = vec![u32::MAX; self.order];
        let mut next = 0;
        for a in 0..self.order {
            if class[a] == u32::MAX {
                for g in 0..self.order {
                    class[self.conj(g, a)] = next;
                }
                next += 1;
            }
        }
        class
    }
}

/// Prime divisors of `n`, ascending.
pub fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Largest power of `p` dividing `n`.
pub fn p_part(mut n: usize, p: usize) -> usize {
    let mut q = 1;
    while n % p == 0 {
        n /= p;
        q *= p;
    }
    q
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_associative_table() {
        // A loop of order 5 that is not a group.
        let rows = [
            [0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0],
        ];
        let table = rows.iter().flatten().map(|&x| x as u32).collect();
        let labels = (0..5).map(|i| i.to_string()).collect();
        assert!(matches!(Group::from_table("L", 5, table, labels), Err(Error::InvalidTable(_))));
    }

    #[test]
    fn a5_from_generators() {
        let gens = [Perm::parse_cycles(5, "(1 2 3 4 5)").unwrap(), Perm::parse_cycles(5, "(1 2)(3 4)").unwrap()];
        let g = Group::from_permutations("A5", 5, &gens, 100).unwrap();
        assert_eq!(g.order(), 60);
        assert!(matches!(
            Group::from_permutations("S5", 5, &[gens[0].clone(), Perm::parse_cycles(5, "(1 2)").unwrap()], 100),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn quotient_and_subgroup_groups() {
        let s3 = symmetric(3, 100).unwrap();
        let a3 = s3.generate((0..6).filter(|&a| s3.element_order(a) == 3));
        let (q, proj) = s3.quotient(&a3, "S3/A3").unwrap();
        assert_eq!(q.order(), 2);
        assert!((0..6).all(|a| (0..6).all(|b| proj[s3.mul(a, b)] == q.mul(proj[a], proj[b]))));
        let (h, embed) = s3.subgroup_group(&a3, "A3");
        assert_eq!(h.order(), 3);
        assert!(h.is_abelian());
        assert_eq!(embed[0], 0);
    }
}
