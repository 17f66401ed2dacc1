use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::gset::{linearize, GSet, Morphism};
use crate::ring::{Coeff, Context, Element, RingKind};
use crate::uf::UnionFind;
use std::collections::HashMap;

/// Finite (H,G)-biset: H acts on the left, G on the right, and the actions commute.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Biset {
    h: Group,
    g: Group,
    size: usize,
    left: Vec<u32>,
    right: Vec<u32>,
}

/// The transitive bisets every biset functor is generated by.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Elemental {
    Identity,
    /// Res^G_K as a (K,G)-biset.
    Restriction(BitSet),
    /// Ind^G_K as a (G,K)-biset.
    Induction(BitSet),
    /// Inf^G_{G/N} as a (G,G/N)-biset.
    Inflation(BitSet),
    /// Def^G_{G/N} as a (G/N,G)-biset.
    Deflation(BitSet),
}

/// Right orbit uG of a left-inert biset: its stabilizer G_u and, for every h,
/// some g with h·u = u·g.
#[derive(Clone, Debug)]
struct RightOrbit {
    stab: BitSet,
    twist: Vec<usize>,
}

impl Biset {
    /// `left[h * size + u] = h·u`, `right[g * size + u] = u·g`.
    pub fn new(h: Group, g: Group, size: usize, left: Vec<u32>, right: Vec<u32>) -> Result<Biset> {
        if left.len() != h.order() * size || right.len() != g.order() * size {
            return Err(Error::Invalid("action tables do not match the groups and size".into()));
        }
        if left.iter().chain(&right).any(|&x| x as usize >= size) {
            return Err(Error::Invalid("action table names a missing point".into()));
        }
        let b = Biset { h, g, size, left, right };
        for u in 0..size {
            if b.act_left(0, u) != u || b.act_right(u, 0) != u {
                return Err(Error::Invalid("identity does not act trivially".into()));
            }
            for x in 0..b.h.order() {
                for y in 0..b.h.order() {
                    if b.act_left(b.h.mul(x, y), u) != b.act_left(x, b.act_left(y, u)) {
                        return Err(Error::Invalid(format!("not a left action at {x}, {y}, point {u}")));
                    }
                }
            }
            for x in 0..b.g.order() {
                for y in 0..b.g.order() {
                    if b.act_right(u, b.g.mul(x, y)) != b.act_right(b.act_right(u, x), y) {
                        return Err(Error::Invalid(format!("not a right action at {x}, {y}, point {u}")));
                    }
                }
                for y in 0..b.h.order() {
                    if b.act_left(y, b.act_right(u, x)) != b.act_right(b.act_left(y, u), x) {
                        return Err(Error::Invalid(format!("actions do not commute at h={y}, g={x}, point {u}")));
                    }
                }
            }
        }
        Ok(b)
    }

    fn from_fns(h: &Group, g: &Group, size: usize, left: impl Fn(usize, usize) -> usize, right: impl Fn(usize, usize) -> usize) -> Biset {
        let left = (0..h.order()).flat_map(|a| (0..size).map(move |u| (a, u))).map(|(a, u)| left(a, u) as u32).collect();
        let right = (0..g.order()).flat_map(|a| (0..size).map(move |u| (a, u))).map(|(a, u)| right(u, a) as u32).collect();
        Biset::new(h.clone(), g.clone(), size, left, right).expect("elemental biset is valid")
    }

    pub fn identity(g: &Group) -> Biset {
        Biset::from_fns(g, g, g.order(), |a, u| g.mul(a, u), |u, a| g.mul(u, a))
    }

    /// The elemental biset of `kind` with right or left group `g`; subgroups are
    /// realized by [`Group::subgroup_group`] and quotients by [`Group::quotient`].
    pub fn elemental(g: &Group, kind: &Elemental) -> Result<Biset> {
        let check = |k: &BitSet| {
            if k.len() == 0 || !g.is_subgroup(k) {
                Err(Error::Invalid("argument is not a subgroup".into()))
            } else {
                Ok(())
            }
        };
        Ok(match kind {
            Elemental::Identity => Biset::identity(g),
            Elemental::Restriction(k) => {
                check(k)?;
                let (sub, embed) = g.subgroup_group(k, &format!("{}_{}", g.name(), k.len()));
                Biset::from_fns(&sub, g, g.order(), |a, u| g.mul(embed[a], u), |u, a| g.mul(u, a))
            }
            Elemental::Induction(k) => {
                check(k)?;
                let (sub, embed) = g.subgroup_group(k, &format!("{}_{}", g.name(), k.len()));
                Biset::from_fns(g, &sub, g.order(), |a, u| g.mul(a, u), |u, a| g.mul(u, embed[a]))
            }
            Elemental::Inflation(n) => {
                check(n)?;
                let (q, proj) = g.quotient(n, &format!("{}/{}", g.name(), n.len()))?;
                Biset::from_fns(g, &q, q.order(), |a, x| q.mul(proj[a], x), |x, b| q.mul(x, b))
            }
            Elemental::Deflation(n) => {
                check(n)?;
                let (q, proj) = g.quotient(n, &format!("{}/{}", g.name(), n.len()))?;
                Biset::from_fns(&q, g, q.order(), |b, x| q.mul(b, x), |x, a| q.mul(x, proj[a]))
            }
        })
    }

    /// The (H,G)-biset H twisted by an isomorphism `iso: G → H`: h·u·g = h u iso(g).
    pub fn isomorphism(g: &Group, h: &Group, iso: &[usize]) -> Result<Biset> {
        let n = g.order();
        if h.order() != n || iso.len() != n {
            return Err(Error::Invalid("isomorphism between groups of different orders".into()));
        }
        let mut hit = vec![false; n];
        for &x in iso {
            if x >= n || std::mem::replace(&mut hit[x], true) {
                return Err(Error::Invalid("isomorphism is not a bijection".into()));
            }
        }
        for a in 0..n {
            for b in 0..n {
                if iso[g.mul(a, b)] != h.mul(iso[a], iso[b]) {
                    return Err(Error::Invalid(format!("isomorphism is not a homomorphism at {a}, {b}")));
                }
            }
        }
        Ok(Biset::from_fns(h, g, n, |a, u| h.mul(a, u), |u, a| h.mul(u, iso[a])))
    }

    pub fn left_group(&self) -> &Group {
        &self.h
    }

    pub fn right_group(&self) -> &Group {
        &self.g
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Left action table, row `h` holding h·u for every point.
    pub fn left_table(&self) -> &[u32] {
        &self.left
    }

    /// Right action table, row `g` holding u·g for every point.
    pub fn right_table(&self) -> &[u32] {
        &self.right
    }

    #[inline]
    pub fn act_left(&self, h: usize, u: usize) -> usize {
        self.left[h * self.size + u] as usize
    }

    #[inline]
    pub fn act_right(&self, u: usize, g: usize) -> usize {
        self.right[g * self.size + u] as usize
    }

    /// V ×_H U for V a (K,H)-biset and U = self an (H,G)-biset; classes of
    /// (v,u) are numbered by their least pair `v * |U| + u`.
    pub fn compose_after(&self, v: &Biset) -> Result<Biset> {
        if v.g != self.h {
            return Err(Error::GroupMismatch);
        }
        let m = self.size;
        let mut uf = UnionFind::new(v.size * m);
        for a in 0..v.size {
            for b in 0..m {
                for h in 1..self.h.order() {
                    uf.union(v.act_right(a, h) * m + b, a * m + self.act_left(h, b));
                }
            }
        }
        let (class, reps) = uf.classes();
        let size = reps.len();
        let left = (0..v.h.order())
            .flat_map(|k| reps.iter().map(move |&r| (k, r)))
            .map(|(k, r)| class[v.act_left(k, r / m) * m + r % m] as u32)
            .collect();
        let right = (0..self.g.order())
            .flat_map(|g| reps.iter().map(move |&r| (g, r)))
            .map(|(g, r)| class[(r / m) * m + self.act_right(r % m, g)] as u32)
            .collect();
        Biset::new(v.h.clone(), self.g.clone(), size, left, right)
    }

    /// U ⊔ U'; points of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &Biset) -> Result<Biset> {
        if self.h != other.h || self.g != other.g {
            return Err(Error::GroupMismatch);
        }
        let size = self.size + other.size;
        let shift = self.size as u32;
        let join = |a: &[u32], b: &[u32], rows: usize| -> Vec<u32> {
            (0..rows)
                .flat_map(|r| {
                    a[r * self.size..(r + 1) * self.size]
                        .iter()
                        .copied()
                        .chain(b[r * other.size..(r + 1) * other.size].iter().map(|&x| x + shift))
                })
                .collect()
        };
        let left = join(&self.left, &other.left, self.h.order());
        let right = join(&self.right, &other.right, self.g.order());
        Ok(Biset { h: self.h.clone(), g: self.g.clone(), size, left, right })
    }

    /// U × U' as an (H×H', G×G')-biset; `(u, u')` is point `u * |U'| + u'`.
    pub fn product(&self, other: &Biset) -> Biset {
        let h = self.h.direct_product(&other.h);
        let g = self.g.direct_product(&other.g);
        let (m, hm, gm) = (other.size, other.h.order(), other.g.order());
        Biset::from_fns(
            &h,
            &g,
            self.size * m,
            |a, p| self.act_left(a / hm, p / m) * m + other.act_left(a % hm, p % m),
            |p, a| self.act_right(p / m, a / gm) * m + other.act_right(p % m, a % gm),
        )
    }

    /// Right G-orbits, each sorted, ordered by least point.
    pub fn right_orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.size];
        let mut out = Vec::new();
        for u in 0..self.size {
            if !seen[u] {
                let mut orb: Vec<usize> = (0..self.g.order()).map(|g| self.act_right(u, g)).collect();
                orb.sort_unstable();
                orb.dedup();
                for &v in &orb {
                    seen[v] = true;
                }
                out.push(orb);
            }
        }
        out
    }

    /// H u ⊆ u G for every point u.
    pub fn is_left_inert(&self) -> bool {
        self.orbit_data().is_ok()
    }

    fn orbit_data(&self) -> Result<Vec<RightOrbit>> {
        let mut out = Vec::new();
        for orb in self.right_orbits() {
            let u = orb[0];
            let mut witness = HashMap::new();
            for g in 0..self.g.order() {
                witness.entry(self.act_right(u, g)).or_insert(g);
            }
            let mut twist = Vec::with_capacity(self.h.order());
            for h in 0..self.h.order() {
                twist.push(*witness.get(&self.act_left(h, u)).ok_or(Error::NotLeftInert)?);
            }
            let stab = BitSet::from_iter(self.g.order(), (0..self.g.order()).filter(|&g| self.act_right(u, g) == u));
            out.push(RightOrbit { stab, twist });
        }
        Ok(out)
    }

    fn check_right(&self, ctx: &Context) -> Result<()> {
        if ctx.group() != &self.g {
            return Err(Error::GroupMismatch);
        }
        Ok(())
    }

    fn check_left(&self, ctx: &Context) -> Result<()> {
        if ctx.group() != &self.h {
            return Err(Error::GroupMismatch);
        }
        Ok(())
    }

    /// Representatives of H\U/K, each the least point of its double orbit.
    fn double_orbit_reps(&self, k: &BitSet) -> Vec<usize> {
        let mut seen = vec![false; self.size];
        let mut reps = Vec::new();
        for u in 0..self.size {
            if seen[u] {
                continue;
            }
            reps.push(u);
            for x in k.iter() {
                let ux = self.act_right(u, x);
                for h in 0..self.h.order() {
                    seen[self.act_left(h, ux)] = true;
                }
            }
        }
        reps
    }

    /// ^uK = {h ∈ H : h·u ∈ u·K}.
    fn twisted_subgroup(&self, ctx_h: &Context, u: usize, k: &BitSet) -> Result<usize> {
        let mut uk = vec![false; self.size];
        for x in k.iter() {
            uk[self.act_right(u, x)] = true;
        }
        let set = BitSet::from_iter(self.h.order(), (0..self.h.order()).filter(|&h| uk[self.act_left(h, u)]));
        ctx_h.lattice().id_of(&set).ok_or_else(|| Error::Invariant("twisted stabilizer is not a subgroup".into()))
    }

    /// The map induced by U: ⟨T,S⟩ ↦ Σ_{u ∈ [H\U/S]} ⟨^uT, ^uS⟩ on slices and
    /// sections, [G/S] ↦ Σ [H/^uS] on the Burnside ring.
    pub fn apply<C: Coeff>(&self, ctx_g: &Context, x: &Element<C>, ctx_h: &Context) -> Result<Element<C>> {
        self.check_right(ctx_g)?;
        self.check_left(ctx_h)?;
        if x.context_id() != ctx_g.id() {
            return Err(Error::GroupMismatch);
        }
        let (glat, htab) = (ctx_g.lattice(), ctx_h.slices());
        let mut out = ctx_h.zero(x.kind());
        for (&c, v) in x.coeffs() {
            match x.kind() {
                RingKind::Burnside => {
                    let s = glat.class_rep(c);
                    for u in self.double_orbit_reps(glat.members(s)) {
                        let us = self.twisted_subgroup(ctx_h, u, glat.members(s))?;
                        out.add_term(ctx_h.lattice().class_of(us), v.clone());
                    }
                }
                kind => {
                    let (t, s) = ctx_g.slices().rep(c);
                    for u in self.double_orbit_reps(glat.members(s)) {
                        let ut = self.twisted_subgroup(ctx_h, u, glat.members(t))?;
                        let us = self.twisted_subgroup(ctx_h, u, glat.members(s))?;
                        let class = htab.class_of(ut, us)?;
                        if kind == RingKind::Section && !htab.is_section_class(class) {
                            return Err(Error::Invariant("a biset moved a section off the section ring".into()));
                        }
                        out.add_term(class, v.clone());
                    }
                }
            }
        }
        Ok(out)
    }

    /// U ×_G X as an H-set, with the class of every pair `u * |X| + x`.
    pub fn times_gset(&self, x: &GSet) -> Result<(GSet, Vec<usize>)> {
        if x.group_order() != self.g.order() {
            return Err(Error::GroupMismatch);
        }
        let m = x.size();
        let mut uf = UnionFind::new(self.size * m);
        for u in 0..self.size {
            for p in 0..m {
                for g in 1..self.g.order() {
                    uf.union(self.act_right(u, g) * m + p, u * m + x.act(g, p));
                }
            }
        }
        let (class, reps) = uf.classes();
        let action = (0..self.h.order())
            .flat_map(|h| reps.iter().map(move |&r| (h, r)))
            .map(|(h, r)| class[self.act_left(h, r / m) * m + r % m] as u32)
            .collect();
        Ok((GSet::new(&self.h, reps.len(), action)?, class))
    }

    /// U ×_G f: [u, x] ↦ [u, f(x)].
    pub fn times_morphism(&self, f: &Morphism) -> Result<Morphism> {
        let (dom, dclass) = self.times_gset(&f.dom)?;
        let (cod, cclass) = self.times_gset(&f.cod)?;
        let (m, k) = (f.dom.size(), f.cod.size());
        let mut map = vec![usize::MAX; dom.size()];
        for u in 0..self.size {
            for p in 0..m {
                map[dclass[u * m + p]] = cclass[u * k + f.map[p]];
            }
        }
        Morphism::new(dom, cod, map)
    }

    /// T_{uG}(X) = X^{G_u} with h·x = g·x where h·u = u·g, one factor per orbit.
    fn orbit_factor(&self, orbit: &RightOrbit, x: &GSet) -> (GSet, Vec<usize>) {
        let pts = x.fixed_points(&orbit.stab);
        let mut pos = vec![usize::MAX; x.size()];
        for (i, &p) in pts.iter().enumerate() {
            pos[p] = i;
        }
        let action = (0..self.h.order())
            .flat_map(|h| pts.iter().map(move |&p| (h, p)))
            .map(|(h, p)| pos[x.act(orbit.twist[h], p)] as u32)
            .collect();
        (GSet::new(&self.h, pts.len(), action).expect("twisted action is an action"), pts)
    }

    fn orbit_factor_morphism(&self, orbit: &RightOrbit, f: &Morphism) -> Morphism {
        let (dom, dpts) = self.orbit_factor(orbit, &f.dom);
        let (cod, cpts) = self.orbit_factor(orbit, &f.cod);
        let map = dpts.iter().map(|&p| cpts.binary_search(&f.map[p]).expect("f maps fixed points to fixed points")).collect();
        Morphism::new(dom, cod, map).expect("restriction of f is equivariant")
    }

    /// T_U(f) = Hom_G(U^op, f), built as a product of fixed-point functors over
    /// the right orbits of U. Requires U left inert.
    pub fn tensor_induce_morphism(&self, f: &Morphism) -> Result<Morphism> {
        if f.dom.group_order() != self.g.order() {
            return Err(Error::GroupMismatch);
        }
        let mut out = Morphism::identity(&GSet::point(&self.h));
        let mut first = true;
        for orbit in self.orbit_data()? {
            let factor = self.orbit_factor_morphism(&orbit, f);
            out = if std::mem::take(&mut first) { factor } else { out.product(&factor) };
        }
        Ok(out)
    }

    /// T_U(X) by brute force: every map φ: U → X with φ(u·g) = g⁻¹·φ(u), and
    /// (hφ)(u) = φ(h⁻¹·u). Also returns each φ. Defined for any U; each φ is
    /// tried by its values on right-orbit representatives, and searches over
    /// more than `limit` candidates are refused.
    pub fn hom_op_naive(&self, x: &GSet, limit: usize) -> Result<(GSet, Vec<Vec<usize>>)> {
        if x.group_order() != self.g.order() {
            return Err(Error::GroupMismatch);
        }
        let m = x.size();
        let reps: Vec<usize> = self.right_orbits().iter().map(|o| o[0]).collect();
        let total = reps.iter().try_fold(1usize, |acc, _| acc.checked_mul(m).filter(|&t| t <= limit));
        let Some(total) = total else {
            return Err(Error::Invalid(format!("{m}^{} candidates exceed the search limit {limit}", reps.len())));
        };
        let ginv: Vec<usize> = (0..self.g.order()).map(|g| self.g.inv(g)).collect();
        let mut maps = Vec::new();
        let mut pick = vec![0usize; reps.len()];
        for _ in 0..total {
            // Spread each representative's value over its orbit, then check the
            // whole condition, including points reached twice.
            let mut phi = vec![usize::MAX; self.size];
            for (i, &u) in reps.iter().enumerate() {
                for g in 0..self.g.order() {
                    let v = self.act_right(u, g);
                    if phi[v] == usize::MAX {
                        phi[v] = x.act(ginv[g], pick[i]);
                    }
                }
            }
            let ok = (0..self.size).all(|u| (0..self.g.order()).all(|g| phi[self.act_right(u, g)] == x.act(ginv[g], phi[u])));
            if ok {
                maps.push(phi);
            }
            for slot in pick.iter_mut() {
                *slot += 1;
                if *slot < m {
                    break;
                }
                *slot = 0;
            }
        }
        let index: HashMap<&[usize], usize> = maps.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
        let mut action = Vec::with_capacity(self.h.order() * maps.len());
        for h in 0..self.h.order() {
            let hinv = self.h.inv(h);
            for p in &maps {
                let moved: Vec<usize> = (0..self.size).map(|u| p[self.act_left(hinv, u)]).collect();
                action.push(index[moved.as_slice()] as u32);
            }
        }
        let set = GSet::new(&self.h, maps.len(), action)?;
        Ok((set, maps))
    }

    /// T_U(f) by brute force: φ ↦ f∘φ.
    pub fn tensor_induce_morphism_naive(&self, f: &Morphism, limit: usize) -> Result<Morphism> {
        let (dom, dmaps) = self.hom_op_naive(&f.dom, limit)?;
        let (cod, cmaps) = self.hom_op_naive(&f.cod, limit)?;
        let index: HashMap<&[usize], usize> = cmaps.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
        let map = dmaps
            .iter()
            .map(|p| index[p.iter().map(|&x| f.map[x]).collect::<Vec<_>>().as_slice()])
            .collect();
        Morphism::new(dom, cod, map)
    }

    /// t_U on the slice or section ring: additive on each right orbit, where
    /// ⟨T,S⟩ ↦ π(T_{uG}(G/S → G/T)), and multiplicative across orbits.
    pub fn tensor_induction<C: Coeff>(&self, ctx_g: &Context, x: &Element<C>, ctx_h: &Context) -> Result<Element<C>> {
        self.check_right(ctx_g)?;
        self.check_left(ctx_h)?;
        if x.context_id() != ctx_g.id() {
            return Err(Error::GroupMismatch);
        }
        let kind = x.kind();
        if kind == RingKind::Burnside {
            return Err(Error::RingMismatch("burnside", "slice"));
        }
        let orbits = self.orbit_data()?;
        let mut out = ctx_h.one(kind);
        for orbit in &orbits {
            let mut part = ctx_h.zero(kind);
            for (&c, v) in x.coeffs() {
                let (t, s) = ctx_g.slices().rep(c);
                let f = self.orbit_factor_morphism(orbit, &Morphism::projection(ctx_g, t, s)?);
                let image = linearize(ctx_h, &f);
                let terms = image.coeffs().iter().map(|(&d, k)| {
                    let k = i64::try_from(k).expect("linearization counts fit in i64");
                    (d, C::from_i64(k) * v.clone())
                });
                part = part.add(&ctx_h.element(kind, terms)?)?;
            }
            out = ctx_h.multiply(&out, &part)?;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, symmetric};
    use crate::gset::{is_galois, random_morphism};
    use num_bigint::BigInt;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn s3() -> Context {
        Context::new(symmetric(3, 100).unwrap(), 100).unwrap()
    }

    fn elementals(ctx: &Context) -> Vec<Biset> {
        let lat = ctx.lattice();
        let g = ctx.group();
        let mut out = vec![Biset::identity(g)];
        for k in 0..lat.len() {
            let m = lat.members(k).clone();
            out.push(Biset::elemental(g, &Elemental::Restriction(m.clone())).unwrap());
            out.push(Biset::elemental(g, &Elemental::Induction(m.clone())).unwrap());
            if g.is_normal(&m) {
                out.push(Biset::elemental(g, &Elemental::Inflation(m.clone())).unwrap());
                out.push(Biset::elemental(g, &Elemental::Deflation(m)).unwrap());
            }
        }
        out
    }

    fn context_for(group: &Group) -> Context {
        Context::new(group.clone(), 100).unwrap()
    }

    #[test]
    fn apply_matches_quotient_construction_on_s3() {
        let ctx = s3();
        for u in elementals(&ctx) {
            let (cg, ch) = if u.right_group() == ctx.group() {
                (None, context_for(u.left_group()))
            } else {
                (Some(context_for(u.right_group())), context_for(u.left_group()))
            };
            let cg = cg.as_ref().unwrap_or(&ctx);
            for &(t, s) in cg.slices().slices() {
                let p = Morphism::projection(cg, t, s).unwrap();
                let direct = u.apply(cg, &cg.basis(t, s, RingKind::Slice).unwrap(), &ch).unwrap();
                assert_eq!(direct, linearize(&ch, &u.times_morphism(&p).unwrap()));
            }
        }
    }

    #[test]
    fn left_inertness_of_elementals() {
        let ctx = s3();
        let g = ctx.group();
        let lat = ctx.lattice();
        for k in 0..lat.len() {
            let m = lat.members(k).clone();
            assert!(Biset::elemental(g, &Elemental::Restriction(m.clone())).unwrap().is_left_inert());
            let ind = Biset::elemental(g, &Elemental::Induction(m.clone())).unwrap();
            assert_eq!(ind.is_left_inert(), k == lat.whole());
            if g.is_normal(&m) {
                assert!(Biset::elemental(g, &Elemental::Inflation(m.clone())).unwrap().is_left_inert());
                assert!(Biset::elemental(g, &Elemental::Deflation(m)).unwrap().is_left_inert());
            }
        }
    }

    #[test]
    fn restriction_then_induction_has_expected_size() {
        let ctx = s3();
        let g = ctx.group();
        let k = ctx.lattice().members(1).clone();
        let res = Biset::elemental(g, &Elemental::Restriction(k.clone())).unwrap();
        let ind = Biset::elemental(g, &Elemental::Induction(k.clone())).unwrap();
        let both = res.compose_after(&ind).unwrap();
        assert_eq!(both.size(), g.order() * g.order() / k.len());
    }

    #[test]
    fn tensor_induction_identity_and_naive_agreement() {
        let ctx = s3();
        let id = Biset::identity(ctx.group());
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for c in 0..ctx.slices().num_classes() {
            let x = ctx.basis_class(c, RingKind::Slice).unwrap();
            assert_eq!(id.tensor_induction(&ctx, &x, &ctx).unwrap(), x);
        }
        let c2 = context_for(&cyclic(2, 100).unwrap());
        let res = Biset::elemental(ctx.group(), &Elemental::Restriction(ctx.lattice().members(1).clone())).unwrap();
        assert_eq!(res.left_group(), c2.group());
        for _ in 0..5 {
            let f = random_morphism(&ctx, &mut rng, 4);
            let fast = res.tensor_induce_morphism(&f).unwrap();
            let slow = res.tensor_induce_morphism_naive(&f, 1 << 20).unwrap();
            assert_eq!(linearize(&c2, &fast), linearize(&c2, &slow));
        }
    }

    #[test]
    fn non_left_inert_counterexample() {
        let one = context_for(&Group::trivial());
        let c2 = context_for(&cyclic(2, 100).unwrap());
        let h = c2.group();
        let u = Biset::new(h.clone(), Group::trivial(), 2, (0..2).flat_map(|a| (0..2).map(move |x| h.mul(a, x) as u32)).collect(), vec![0, 1]).unwrap();
        assert!(!u.is_left_inert());
        let two = GSet::new(one.group(), 2, vec![0, 1]).unwrap();
        let pt = GSet::point(one.group());
        let fold = Morphism::new(two.clone(), pt, vec![0, 0]).unwrap();
        let id = Morphism::identity(&two);
        assert_eq!(linearize(&one, &fold), linearize(&one, &id));
        let tf = u.tensor_induce_morphism_naive(&fold, 64).unwrap();
        let tid = u.tensor_induce_morphism_naive(&id, 64).unwrap();
        assert_ne!(linearize(&c2, &tf), linearize(&c2, &tid));
        assert!(!is_galois(&tf));
        assert_eq!(u.tensor_induction(&one, &linearize(&one, &fold), &c2), Err(Error::NotLeftInert));
        let whole = c2.lattice().whole();
        assert_eq!(linearize(&c2, &tf).coeff(c2.slices().class_of(whole, whole).unwrap()), BigInt::from(2));
    }
}
