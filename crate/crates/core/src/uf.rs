/// Union-find whose roots are always the least point of their class.
#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> UnionFind {
        UnionFind { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut c = x;
        while self.parent[c] != r {
            let next = self.parent[c];
            self.parent[c] = r;
            c = next;
        }
        r
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.parent[a.max(b)] = a.min(b);
        }
    }

    /// Class index of every point, classes numbered by least point, and the
    /// least point of each class.
    pub(crate) fn classes(&mut self) -> (Vec<usize>, Vec<usize>) {
        let n = self.parent.len();
        let mut class = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for x in 0..n {
            let r = self.find(x);
            if class[r] == usize::MAX {
                class[r] = reps.len();
                reps.push(r);
            }
            class[x] = class[r];
        }
        (class, reps)
    }
}
