mod galois;
mod random;

pub use galois::{check_universal_property, equivariant_maps, galois_closure, is_galois, is_galois_normal_fibers};
pub use random::{random_galois_morphism, random_gset, random_morphism};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::ring::{Context, RingElement, RingKind};

/// Finite G-set: `act(g, x)` for every group element and point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GSet {
    order: usize,
    size: usize,
    action: Vec<u32>,
}

impl GSet {
    /// `action[g * size + x] = g·x`; checked to be an action of `group`.
    pub fn new(group: &Group, size: usize, action: Vec<u32>) -> Result<GSet> {
        let n = group.order();
        if action.len() != n * size || action.iter().any(|&x| x as usize >= size) {
            return Err(Error::Invalid(format!("action table must have {n} rows of {size} points")));
        }
        let set = GSet { order: n, size, action };
        for x in 0..size {
            if set.act(0, x) != x {
                return Err(Error::Invalid("identity does not act trivially".into()));
            }
            for g in 0..n {
                for h in 0..n {
                    if set.act(group.mul(g, h), x) != set.act(g, set.act(h, x)) {
                        return Err(Error::Invalid(format!("not an action at g={g}, h={h}, x={x}")));
                    }
                }
            }
        }
        Ok(set)
    }

    pub fn empty(group: &Group) -> GSet {
        GSet { order: group.order(), size: 0, action: vec![] }
    }

    pub fn point(group: &Group) -> GSet {
        GSet { order: group.order(), size: 1, action: vec![0; group.order()] }
    }

    /// Left cosets G/H, numbered in order of their least element; returns the
    /// set and the coset index of every group element.
    pub fn cosets(group: &Group, h: &BitSet) -> (GSet, Vec<usize>) {
        let n = group.order();
        let mut coset_of = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for g in 0..n {
            if coset_of[g] == usize::MAX {
                for x in h.iter() {
                    coset_of[group.mul(g, x)] = reps.len();
                }
                reps.push(g);
            }
        }
        let size = reps.len();
        let mut action = Vec::with_capacity(n * size);
        for g in 0..n {
            for &r in &reps {
                action.push(coset_of[group.mul(g, r)] as u32);
            }
        }
        (GSet { order: n, size, action }, coset_of)
    }

    #[inline]
    pub fn act(&self, g: usize, x: usize) -> usize {
        self.action[g * self.size + x] as usize
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn group_order(&self) -> usize {
        self.order
    }

    /// Row `g` of the action table.
    pub fn action_row(&self, g: usize) -> &[u32] {
        &self.action[g * self.size..(g + 1) * self.size]
    }

    pub fn stabilizer(&self, x: usize) -> BitSet {
        BitSet::from_iter(self.order, (0..self.order).filter(|&g| self.act(g, x) == x))
    }

    /// Orbits, each sorted, ordered by least point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.size];
        let mut out = Vec::new();
        for x in 0..self.size {
            if !seen[x] {
                let mut orb: Vec<usize> = (0..self.order).map(|g| self.act(g, x)).collect();
                orb.sort_unstable();
                orb.dedup();
                for &y in &orb {
                    seen[y] = true;
                }
                out.push(orb);
            }
        }
        out
    }

    /// Points fixed by every element of `h`.
    pub fn fixed_points(&self, h: &BitSet) -> Vec<usize> {
        (0..self.size).filter(|&x| h.iter().all(|g| self.act(g, x) == x)).collect()
    }

    /// Disjoint union; points of `other` are shifted by `self.size()`.
    pub fn coproduct(&self, other: &GSet) -> GSet {
        let size = self.size + other.size;
        let mut action = Vec::with_capacity(self.order * size);
        for g in 0..self.order {
            action.extend_from_slice(self.action_row(g));
            action.extend(other.action_row(g).iter().map(|&x| x + self.size as u32));
        }
        GSet { order: self.order, size, action }
    }

    /// Cartesian product with the diagonal action; `(x, y)` is point `x * other.size() + y`.
    pub fn product(&self, other: &GSet) -> GSet {
        let size = self.size * other.size;
        let mut action = Vec::with_capacity(self.order * size);
        for g in 0..self.order {
            for x in 0..self.size {
                for y in 0..other.size {
                    action.push((self.act(g, x) * other.size + other.act(g, y)) as u32);
                }
            }
        }
        GSet { order: self.order, size, action }
    }

    /// The G-subset on `points` (closed under the action), renumbered in increasing order.
    pub fn subset(&self, points: &[usize]) -> Result<(GSet, Vec<usize>)> {
        let mut pts = points.to_vec();
        pts.sort_unstable();
        pts.dedup();
        let mut pos = vec![usize::MAX; self.size];
        for (i, &p) in pts.iter().enumerate() {
            pos[p] = i;
        }
        let mut action = Vec::with_capacity(self.order * pts.len());
        for g in 0..self.order {
            for &p in &pts {
                let q = pos[self.act(g, p)];
                if q == usize::MAX {
                    return Err(Error::Invalid("subset is not closed under the action".into()));
                }
                action.push(q as u32);
            }
        }
        Ok((GSet { order: self.order, size: pts.len(), action }, pts))
    }
}

/// Equivariant map between two G-sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub dom: GSet,
    pub cod: GSet,
    pub map: Vec<usize>,
}

impl Morphism {
    pub fn new(dom: GSet, cod: GSet, map: Vec<usize>) -> Result<Morphism> {
        if map.len() != dom.size || map.iter().any(|&y| y >= cod.size) || dom.order != cod.order {
            return Err(Error::Invalid("map does not fit its domain and codomain".into()));
        }
        for g in 0..dom.order {
            for x in 0..dom.size {
                if map[dom.act(g, x)] != cod.act(g, map[x]) {
                    return Err(Error::Invalid(format!("map is not equivariant at g={g}, x={x}")));
                }
            }
        }
        Ok(Morphism { dom, cod, map })
    }

    pub fn identity(x: &GSet) -> Morphism {
        Morphism { dom: x.clone(), cod: x.clone(), map: (0..x.size).collect() }
    }

    pub fn empty(group: &Group) -> Morphism {
        Morphism::identity(&GSet::empty(group))
    }

    /// The projection G/S → G/T.
    pub fn projection(ctx: &Context, t: usize, s: usize) -> Result<Morphism> {
        let lat = ctx.lattice();
        if !lat.leq(s, t) {
            return Err(Error::NotSlice);
        }
        let g = ctx.group();
        let (dom, dcos) = GSet::cosets(g, lat.members(s));
        let (cod, ccos) = GSet::cosets(g, lat.members(t));
        let mut map = vec![0; dom.size];
        for e in 0..g.order() {
            map[dcos[e]] = ccos[e];
        }
        Ok(Morphism { dom, cod, map })
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &Morphism) -> Result<Morphism> {
        if self.cod != next.dom {
            return Err(Error::Invalid("composable morphisms need matching G-sets".into()));
        }
        Ok(Morphism { dom: self.dom.clone(), cod: next.cod.clone(), map: self.map.iter().map(|&y| next.map[y]).collect() })
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.cod.size];
        self.map.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
    }

    pub fn coproduct(&self, other: &Morphism) -> Morphism {
        let shift = self.cod.size;
        let map = self.map.iter().copied().chain(other.map.iter().map(|&y| y + shift)).collect();
        Morphism { dom: self.dom.coproduct(&other.dom), cod: self.cod.coproduct(&other.cod), map }
    }

    /// Categorical product with the diagonal action.
    pub fn product(&self, other: &Morphism) -> Morphism {
        let mut map = Vec::with_capacity(self.dom.size * other.dom.size);
        for x in 0..self.dom.size {
            for y in 0..other.dom.size {
                map.push(self.map[x] * other.cod.size + other.map[y]);
            }
        }
        Morphism { dom: self.dom.product(&other.dom), cod: self.cod.product(&other.cod), map }
    }

    /// f restricted to a G-subset of its domain, with the same codomain.
    pub fn restrict_domain(&self, points: &[usize]) -> Result<Morphism> {
        let (dom, pts) = self.dom.subset(points)?;
        Ok(Morphism { dom, cod: self.cod.clone(), map: pts.iter().map(|&p| self.map[p]).collect() })
    }

    /// f⁻¹(Y₁) → Y₁ for a G-subset Y₁ of the codomain.
    pub fn restrict_codomain(&self, points: &[usize]) -> Result<Morphism> {
        let (cod, cpts) = self.cod.subset(points)?;
        let mut pos = vec![usize::MAX; self.cod.size];
        for (i, &p) in cpts.iter().enumerate() {
            pos[p] = i;
        }
        let pre: Vec<usize> = (0..self.dom.size).filter(|&x| pos[self.map[x]] != usize::MAX).collect();
        let (dom, dpts) = self.dom.subset(&pre)?;
        Ok(Morphism { dom, cod, map: dpts.iter().map(|&x| pos[self.map[x]]).collect() })
    }

    /// X → f(X).
    pub fn restrict_to_image(&self) -> Morphism {
        let img = self.map.clone();
        self.restrict_codomain(&img).expect("the image is a G-subset")
    }

    /// Pullback of `self: Y → T` along `d: Z → T`, as the projection Z ×_T Y → Z.
    pub fn pullback_along(&self, d: &Morphism) -> Result<Morphism> {
        if self.cod != d.cod {
            return Err(Error::Invalid("pullback needs a common codomain".into()));
        }
        let (z, y) = (&d.dom, &self.dom);
        let pairs: Vec<usize> = (0..z.size)
            .flat_map(|a| (0..y.size).filter(move |&b| d.map[a] == self.map[b]).map(move |b| a * y.size + b))
            .collect();
        let (dom, pts) = z.product(y).subset(&pairs)?;
        Ok(Morphism { dom, cod: z.clone(), map: pts.iter().map(|&p| p / y.size).collect() })
    }
}

/// Id of the stabilizer of `x` in the subgroup lattice.
pub fn stabilizer_id(ctx: &Context, set: &GSet, x: usize) -> usize {
    ctx.lattice().id_of(&set.stabilizer(x)).expect("stabilizers are subgroups")
}

/// π(f) = Σ over orbits of ⟨G_{f(x)}, G_x⟩.
pub fn linearize(ctx: &Context, f: &Morphism) -> RingElement {
    let mut e = ctx.zero(RingKind::Slice);
    for orb in f.dom.orbits() {
        let x = orb[0];
        let c = ctx
            .slices()
            .class_of(stabilizer_id(ctx, &f.cod, f.map[x]), stabilizer_id(ctx, &f.dom, x))
            .expect("G_x ≤ G_f(x)");
        e = e.add(&ctx.basis_class(c, RingKind::Slice).expect("class")).expect("same ring");
    }
    e
}

/// Number of commuting squares from the projection G/S → G/T into `f`,
/// enumerating every pair of equivariant legs.
pub fn hom_count(ctx: &Context, t: usize, s: usize, f: &Morphism) -> Result<usize> {
    let lat = ctx.lattice();
    let g = ctx.group();
    let p = Morphism::projection(ctx, t, s)?;
    let (_, scos) = GSet::cosets(g, lat.members(s));
    let mut reps = vec![usize::MAX; p.dom.size];
    for e in (0..g.order()).rev() {
        reps[scos[e]] = e;
    }
    let (_, tcos) = GSet::cosets(g, lat.members(t));
    let mut count = 0;
    // A leg out of G/S is fixed by the image of the base coset, which must be S-fixed.
    for x0 in f.dom.fixed_points(lat.members(s)) {
        for y0 in f.cod.fixed_points(lat.members(t)) {
            let commutes = (0..p.dom.size).all(|c| {
                let e = reps[c];
                let alpha = f.dom.act(e, x0);
                let beta = f.cod.act(e, y0);
                debug_assert_eq!(tcos[e], p.map[c]);
                f.map[alpha] == beta
            });
            count += commutes as usize;
        }
    }
    Ok(count)
}

/// |f⁻¹(Y^T)^S|.
pub fn fixed_preimage_count(ctx: &Context, t: usize, s: usize, f: &Morphism) -> Result<usize> {
    let lat = ctx.lattice();
    if !lat.leq(s, t) {
        return Err(Error::NotSlice);
    }
    let yt: Vec<bool> = {
        let mut v = vec![false; f.cod.size];
        for y in f.cod.fixed_points(lat.members(t)) {
            v[y] = true;
        }
        v
    };
    Ok(f.dom.fixed_points(lat.members(s)).into_iter().filter(|&x| yt[f.map[x]]).count())
}

/// f restricted to the G-subset `part` of its domain and to the complement.
pub fn split_domain(f: &Morphism, part: &[usize]) -> Result<(Morphism, Morphism)> {
    let mut inside = vec![false; f.dom.size];
    for &p in part {
        inside[p] = true;
    }
    let rest: Vec<usize> = (0..f.dom.size).filter(|&x| !inside[x]).collect();
    Ok((f.restrict_domain(part)?, f.restrict_domain(&rest)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::symmetric;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn marks_match_hom_counts_on_s3() {
        let ctx = Context::new(symmetric(3, 100).unwrap(), 100).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let f = random_morphism(&ctx, &mut rng, 12);
            let x = linearize(&ctx, &f);
            for &(t, s) in ctx.slices().slices() {
                let h = hom_count(&ctx, t, s, &f).unwrap();
                assert_eq!(h, fixed_preimage_count(&ctx, t, s, &f).unwrap());
                assert_eq!(BigInt::from(h), ctx.mark(t, s, &x).unwrap());
            }
        }
    }

    #[test]
    fn projection_linearizes_to_basis_and_closes_normally() {
        let ctx = Context::new(symmetric(3, 100).unwrap(), 100).unwrap();
        let lat = ctx.lattice();
        for &(t, s) in ctx.slices().slices() {
            let p = Morphism::projection(&ctx, t, s).unwrap();
            assert_eq!(linearize(&ctx, &p), ctx.basis(t, s, RingKind::Slice).unwrap());
            assert_eq!(is_galois(&p), lat.is_normal_in(s, t));
            assert_eq!(is_galois(&p), is_galois_normal_fibers(ctx.group(), &p));
            let (cl, _) = galois_closure(ctx.group(), &p);
            let closed = lat.normal_closure(s, t).unwrap();
            assert_eq!(linearize(&ctx, &cl), ctx.basis(t, closed, RingKind::Slice).unwrap());
        }
        assert!(linearize(&ctx, &Morphism::empty(ctx.group())).is_zero());
    }

    use num_bigint::BigInt;
}
