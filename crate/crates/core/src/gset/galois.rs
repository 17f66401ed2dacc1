use super::{GSet, Morphism};
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::uf::UnionFind;

fn fibers(f: &Morphism) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new(); f.cod.size()];
    for (x, &y) in f.map.iter().enumerate() {
        out[y].push(x);
    }
    out
}

/// Points in a common fiber have equal stabilizers.
pub fn is_galois(f: &Morphism) -> bool {
    fibers(f).iter().all(|fib| {
        let first = fib.first().map(|&x| f.dom.stabilizer(x));
        fib.iter().all(|&x| Some(f.dom.stabilizer(x)) == first)
    })
}

/// Every fiber over y has a single stabilizer N_y, and N_y ⊴ G_y.
pub fn is_galois_normal_fibers(group: &Group, f: &Morphism) -> bool {
    fibers(f).iter().enumerate().all(|(y, fib)| {
        let Some(&x0) = fib.first() else { return true };
        let n = f.dom.stabilizer(x0);
        let gy = f.cod.stabilizer(y);
        let normal = gy.iter().all(|g| n.iter().all(|k| n.contains(group.conj(g, k))));
        normal && fib.iter().all(|&x| f.dom.fixed_points(&n).contains(&x) && f.dom.stabilizer(x).len() == n.len())
    })
}

/// Quotient of f by x ∼ hx for h in G^f_x = ⟨G_z : f(z) = f(x)⟩. Returns the
/// Galois morphism X^Gal → Y and the quotient map X → X^Gal.
pub fn galois_closure(group: &Group, f: &Morphism) -> (Morphism, Vec<usize>) {
    let n = group.order();
    let mut uf = UnionFind::new(f.dom.size());
    for fib in fibers(f) {
        if fib.is_empty() {
            continue;
        }
        let mut gens = BitSet::new(n);
        for &z in &fib {
            gens.union_with(&f.dom.stabilizer(z));
        }
        let h = group.generate(gens.iter());
        for &x in &fib {
            for g in h.iter() {
                uf.union(x, f.dom.act(g, x));
            }
        }
    }
    let (class, reps) = uf.classes();
    let size = reps.len();
    let mut action = Vec::with_capacity(n * size);
    for g in 0..n {
        for &r in &reps {
            action.push(class[f.dom.act(g, r)] as u32);
        }
    }
    let dom = GSet::new(group, size, action).expect("∼_f is G-stable");
    let map = reps.iter().map(|&r| f.map[r]).collect();
    (Morphism::new(dom, f.cod.clone(), map).expect("f is constant on classes"), class)
}

/// Every equivariant map X → A, each determined by the images of orbit representatives.
pub fn equivariant_maps(x: &GSet, a: &GSet) -> Vec<Vec<usize>> {
    let orbits = x.orbits();
    let choices: Vec<Vec<usize>> = orbits.iter().map(|o| a.fixed_points(&x.stabilizer(o[0]))).collect();
    let mut out = Vec::new();
    let mut pick = vec![0usize; orbits.len()];
    if choices.iter().any(Vec::is_empty) && !orbits.is_empty() {
        return out;
    }
    loop {
        let mut map = vec![usize::MAX; x.size()];
        for (i, o) in orbits.iter().enumerate() {
            let img = choices[i][pick[i]];
            for g in 0..x.group_order() {
                map[x.act(g, o[0])] = a.act(g, img);
            }
        }
        out.push(map);
        let mut i = 0;
        loop {
            if i == orbits.len() {
                return out;
            }
            pick[i] += 1;
            if pick[i] < choices[i].len() {
                break;
            }
            pick[i] = 0;
            i += 1;
        }
    }
}

/// For every commuting square from f into the Galois morphism `a`, counts the
/// legs X^Gal → A through which it factors. Returns the number of squares, or
/// an error naming a square without exactly one factorization.
pub fn check_universal_property(group: &Group, f: &Morphism, a: &Morphism) -> Result<usize> {
    if !is_galois(a) {
        return Err(Error::Invalid("target morphism is not Galois".into()));
    }
    let (fg, gamma) = galois_closure(group, f);
    let alphas = equivariant_maps(&f.dom, &a.dom);
    let betas = equivariant_maps(&f.cod, &a.cod);
    let tildes = equivariant_maps(&fg.dom, &a.dom);
    let mut squares = 0;
    for beta in &betas {
        for alpha in &alphas {
            if (0..f.dom.size()).any(|x| a.map[alpha[x]] != beta[f.map[x]]) {
                continue;
            }
            squares += 1;
            let factorizations = tildes
                .iter()
                .filter(|t| {
                    (0..f.dom.size()).all(|x| t[gamma[x]] == alpha[x])
                        && (0..fg.dom.size()).all(|z| a.map[t[z]] == beta[fg.map[z]])
                })
                .count();
            if factorizations != 1 {
                return Err(Error::Invariant(format!(
                    "square (alpha={alpha:?}, beta={beta:?}) factors {factorizations} times"
                )));
            }
        }
    }
    Ok(squares)
}
