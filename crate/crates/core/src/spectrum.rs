use crate::error::{Error, Result};
use crate::group::{is_prime, p_part, prime_divisors};
use crate::ring::{Context, QRingElement, RingKind};
use crate::uf::UnionFind;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

/// Which ring of fractions the spectrum is taken over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Localization {
    Integers,
    /// Z localized at the prime p.
    AtPrime(usize),
}

/// Prime ideal I_{T,S,p} (or J_{T,S,p}), p = 0 for the characteristic-zero ideals.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeIdealLabel {
    pub class: usize,
    pub p: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComponentLabel {
    /// The class of the component's closed point in Π_p(G) or Σ_p(G).
    Closed(usize),
    /// A subgroup class of perfect subgroups (section ring over Z).
    Perfect(usize),
    /// Least member class (slice ring over Z).
    Least(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumComponent {
    pub classes: Vec<usize>,
    pub label: ComponentLabel,
    pub idempotent: QRingElement,
}

fn ring_check(kind: RingKind) -> Result<()> {
    match kind {
        RingKind::Burnside => Err(Error::RingMismatch("burnside", "slice")),
        _ => Ok(()),
    }
}

fn prime_check(p: usize) -> Result<()> {
    if is_prime(p as u64) {
        Ok(())
    } else {
        Err(Error::NotPrime(p as u64))
    }
}

impl Context {
    /// (PT, PS) for a p-subgroup P of N_G(T,S); the second term is normally
    /// closed in PT for the section ring.
    pub fn plus_with(&self, t: usize, s: usize, p_sub: usize, kind: RingKind) -> Result<(usize, usize)> {
        ring_check(kind)?;
        let lat = self.lattice();
        if !lat.leq(p_sub, lat.normalizer_pair(t, s)?) {
            return Err(Error::Invalid("P does not normalize the slice".into()));
        }
        let pt = lat.join(p_sub, t);
        let ps = lat.join(p_sub, s);
        Ok(match kind {
            RingKind::Section => (pt, lat.normal_closure(ps, pt)?),
            _ => (pt, ps),
        })
    }

    /// (T,S)^{+p} with P the least Sylow p-subgroup of N_G(T,S).
    pub fn plus_p(&self, t: usize, s: usize, p: usize, kind: RingKind) -> Result<(usize, usize)> {
        prime_check(p)?;
        let sylow = self.lattice().sylow(self.lattice().normalizer_pair(t, s)?, p)?;
        self.plus_with(t, s, sylow, kind)
    }

    /// Iterates `plus_p` from (T,S) to its fixpoint and returns the final pair,
    /// which contains (T,S) termwise.
    pub fn hat_p_pair(&self, t: usize, s: usize, p: usize, kind: RingKind) -> Result<(usize, usize)> {
        let mut cur = (t, s);
        loop {
            let next = self.plus_p(cur.0, cur.1, p, kind)?;
            if next == cur {
                return Ok(cur);
            }
            cur = next;
        }
    }

    /// Class of (T,S)^̂p for the representative of `class`.
    pub fn hat_p(&self, class: usize, p: usize, kind: RingKind) -> Result<usize> {
        self.check_class(class, kind)?;
        let (t, s) = self.slices().rep(class);
        let (v, u) = self.hat_p_pair(t, s, p, kind)?;
        self.slices().class_of(v, u)
    }

    fn check_class(&self, class: usize, kind: RingKind) -> Result<()> {
        ring_check(kind)?;
        if class >= self.slices().num_classes() {
            return Err(Error::Invalid(format!("no slice class {class}")));
        }
        if kind == RingKind::Section && !self.slices().is_section_class(class) {
            return Err(Error::NotSection);
        }
        Ok(())
    }

    /// Membership in Π_p(G): |N_G(T,S)/S| prime to p.
    pub fn in_pi_p(&self, class: usize, p: usize) -> bool {
        self.weyl_order(class) % p != 0
    }

    /// Connected components of the spectrum, with their idempotents. Over Z_(p)
    /// they are the fibers of hat_p; over Z, classes are joined whenever hat_p
    /// agrees for some p. Idempotent integrality in the localization is checked.
    pub fn components(&self, kind: RingKind, loc: Localization) -> Result<Vec<SpectrumComponent>> {
        ring_check(kind)?;
        let classes = self.basis_classes(kind);
        let pos = |c: usize| classes.binary_search(&c).expect("basis class");
        let primes = match loc {
            Localization::Integers => prime_divisors(self.group().order()),
            Localization::AtPrime(p) => {
                prime_check(p)?;
                vec![p]
            }
        };
        let mut uf = UnionFind::new(classes.len());
        let mut hats = vec![vec![0; classes.len()]; primes.len()];
        for (i, &p) in primes.iter().enumerate() {
            for (j, &c) in classes.iter().enumerate() {
                let h = self.hat_p(c, p, kind)?;
                hats[i][j] = h;
                uf.union(j, pos(h));
            }
        }
        let (comp, reps) = uf.classes();
        let idems = self.primitive_idempotents(kind)?;
        let mut out = Vec::with_capacity(reps.len());
        for k in 0..reps.len() {
            let members: Vec<usize> = (0..classes.len()).filter(|&j| comp[j] == k).collect();
            let mut e = self.zero(kind);
            for &j in &members {
                e = e.add(&idems[j])?;
            }
            let den = e.denominator_lcm();
            let ok = match loc {
                Localization::Integers => den.is_one(),
                Localization::AtPrime(p) => !den.is_multiple_of(&BigInt::from(p)),
            };
            if !ok {
                return Err(Error::Invariant(format!("component idempotent has denominator {den}")));
            }
            let label = match loc {
                Localization::AtPrime(_) => {
                    let closed: Vec<usize> = members.iter().map(|&j| hats[0][j]).collect();
                    if closed.iter().any(|&h| h != closed[0]) {
                        return Err(Error::Invariant("a Z_(p) component has two closed points".into()));
                    }
                    ComponentLabel::Closed(closed[0])
                }
                Localization::Integers if kind == RingKind::Section => {
                    ComponentLabel::Perfect(self.perfect_label(classes[members[0]]))
                }
                Localization::Integers => ComponentLabel::Least(classes[members[0]]),
            };
            out.push(SpectrumComponent { classes: members.iter().map(|&j| classes[j]).collect(), label, idempotent: e });
        }
        if kind == RingKind::Section && loc == Localization::Integers {
            self.check_perfect_labels(&out)?;
        }
        Ok(out)
    }

    /// Subgroup class of D^∞(T) for the representative (T,S) of `class`.
    pub fn perfect_label(&self, class: usize) -> usize {
        let lat = self.lattice();
        lat.class_of(lat.derived_series_limit(self.slices().rep(class).0))
    }

    /// Dress's primitive idempotent of B(G) for a perfect subgroup H: the sum of
    /// the rational idempotents e_K over classes of K with D^∞(K) conjugate to H.
    pub fn dress_idempotent(&self, h: usize) -> Result<QRingElement> {
        let lat = self.lattice();
        if !lat.is_perfect(h) {
            return Err(Error::Invalid("Dress idempotents are indexed by perfect subgroups".into()));
        }
        let target = lat.class_of(h);
        let mut e = self.zero(RingKind::Burnside);
        for c in 0..lat.classes().len() {
            let k = lat.class_rep(c);
            if lat.class_of(lat.derived_series_limit(k)) == target {
                e = e.add(&self.burnside_idempotent(k))?;
            }
        }
        Ok(e)
    }

    fn check_perfect_labels(&self, comps: &[SpectrumComponent]) -> Result<()> {
        let lat = self.lattice();
        let perfect: Vec<usize> = (0..lat.classes().len()).filter(|&c| lat.is_perfect(lat.class_rep(c))).collect();
        if perfect.len() != comps.len() {
            return Err(Error::Invariant(format!("{} components but {} perfect classes", comps.len(), perfect.len())));
        }
        for comp in comps {
            let ComponentLabel::Perfect(label) = comp.label else { unreachable!() };
            if comp.classes.iter().any(|&c| self.perfect_label(c) != label) {
                return Err(Error::Invariant("a section component mixes D^∞ classes".into()));
            }
            let dress = self.i_map(&self.dress_idempotent(lat.class_rep(label))?, RingKind::Section)?;
            if dress != comp.idempotent {
                return Err(Error::Invariant("component idempotent differs from the image of Dress's".into()));
            }
        }
        Ok(())
    }

    /// I_b ⊆ I_a (or J_b ⊆ J_a in the section ring).
    pub fn ideal_contains(&self, kind: RingKind, a: PrimeIdealLabel, b: PrimeIdealLabel) -> Result<bool> {
        for l in [a, b] {
            self.check_class(l.class, kind)?;
            if l.p != 0 {
                prime_check(l.p)?;
                if !self.in_pi_p(l.class, l.p) {
                    return Err(Error::Invalid(format!("class {} is not in Π_{}", l.class, l.p)));
                }
            }
        }
        Ok(if a.p == b.p {
            a.class == b.class
        } else {
            b.p == 0 && self.hat_p(b.class, a.p, kind)? == a.class
        })
    }

    /// Whether the class set `family` is stable, in both directions, under
    /// (T,S) ↦ (PT,PS) for every p-subgroup P ≤ N_G(T,S) and p in `primes`.
    pub fn idempotent_support_check(&self, kind: RingKind, family: &[usize], primes: &[usize]) -> Result<bool> {
        for &c in family {
            self.check_class(c, kind)?;
        }
        let lat = self.lattice();
        let mut inside = vec![false; self.slices().num_classes()];
        for &c in family {
            inside[c] = true;
        }
        for &p in primes {
            prime_check(p)?;
            for c in self.basis_classes(kind) {
                let (t, s) = self.slices().rep(c);
                for q in lat.p_subgroups(lat.normalizer_pair(t, s)?, p) {
                    let (v, u) = self.plus_with(t, s, q, kind)?;
                    if inside[c] != inside[self.slices().class_of(v, u)?] {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Σ_{c ∈ family} ξ_c (or γ_c).
    pub fn family_idempotent(&self, kind: RingKind, family: &[usize]) -> Result<QRingElement> {
        let classes = self.basis_classes(kind);
        let idems = self.primitive_idempotents(kind)?;
        let mut e = self.zero(kind);
        for &c in family {
            self.check_class(c, kind)?;
            e = e.add(&idems[classes.binary_search(&c).expect("checked")])?;
        }
        Ok(e)
    }

    /// Whether the family idempotent has denominators prime to every p in `primes`.
    pub fn family_idempotent_is_local(&self, kind: RingKind, family: &[usize], primes: &[usize]) -> Result<bool> {
        let den = self.family_idempotent(kind, family)?.denominator_lcm();
        Ok(primes.iter().all(|&p| !den.is_multiple_of(&BigInt::from(p))))
    }

    /// For hat_p(T,S) = (V,U) reached from (T,S): T ⊴⊴ V, S ⊴⊴ U, |U:S| a
    /// power of p and T·U = V. Returns the first slice where this fails.
    pub fn hat_p_structure_violation(&self, p: usize) -> Result<Option<(usize, usize)>> {
        let lat = self.lattice();
        for &(t, s) in self.slices().slices() {
            let (v, u) = self.hat_p_pair(t, s, p, RingKind::Slice)?;
            let index = lat.order(u) / lat.order(s);
            let tu = lat.order(t) * lat.order(u) / lat.order(lat.meet(t, u));
            let ok = lat.is_subnormal(t, v) && lat.is_subnormal(s, u) && p_part(index, p) == index && tu == lat.order(v) && lat.leq(u, v);
            if !ok {
                return Ok(Some((t, s)));
            }
        }
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{alternating, cyclic, symmetric};

    fn ctx(g: crate::group::Group) -> Context {
        Context::new(g, 100).unwrap()
    }

    #[test]
    fn plus_p_examples() {
        let s3 = ctx(symmetric(3, 100).unwrap());
        let lat = s3.lattice();
        let a3 = (0..lat.len()).find(|&k| lat.order(k) == 3).unwrap();
        let g = lat.whole();
        assert_eq!(s3.plus_p(a3, a3, 2, RingKind::Slice).unwrap(), (g, g));
        assert_eq!(s3.plus_p(g, g, 3, RingKind::Slice).unwrap(), (g, g));
        let c4 = ctx(cyclic(4, 100).unwrap());
        let w = c4.lattice().whole();
        assert_eq!(c4.hat_p_pair(0, 0, 2, RingKind::Slice).unwrap(), (w, w));
    }

    #[test]
    fn solvable_groups_are_connected() {
        for g in [symmetric(3, 100).unwrap(), cyclic(6, 100).unwrap()] {
            let c = ctx(g);
            for kind in [RingKind::Slice, RingKind::Section] {
                let comps = c.components(kind, Localization::Integers).unwrap();
                assert_eq!(comps.len(), 1);
                assert_eq!(comps[0].idempotent, c.one(kind));
            }
        }
    }

    #[test]
    fn local_components_are_indexed_by_pi_p() {
        let c = ctx(symmetric(3, 100).unwrap());
        for p in [2, 3] {
            for kind in [RingKind::Slice, RingKind::Section] {
                let comps = c.components(kind, Localization::AtPrime(p)).unwrap();
                let closed = c.basis_classes(kind).into_iter().filter(|&k| c.in_pi_p(k, p)).count();
                assert_eq!(comps.len(), closed);
                for comp in &comps {
                    assert!(c.idempotent_support_check(kind, &comp.classes, &[p]).unwrap());
                }
            }
        }
        assert_eq!(c.hat_p_structure_violation(2).unwrap(), None);
        assert_eq!(c.hat_p_structure_violation(3).unwrap(), None);
    }

    #[test]
    fn a5_section_components_are_perfect_classes() {
        let c = ctx(alternating(5, 100).unwrap());
        let comps = c.components(RingKind::Section, Localization::Integers).unwrap();
        assert_eq!(comps.len(), 2);
        let lat = c.lattice();
        let labels: Vec<usize> = comps
            .iter()
            .map(|k| match k.label {
                ComponentLabel::Perfect(l) => lat.order(lat.class_rep(l)),
                _ => unreachable!(),
            })
            .collect();
        assert!(labels.contains(&1) && labels.contains(&60));
    }

    #[test]
    fn ideal_inclusion_cases() {
        let c = ctx(symmetric(3, 100).unwrap());
        let k = c.slices().num_classes();
        for a in 0..k {
            let zero = PrimeIdealLabel { class: a, p: 0 };
            assert!(c.ideal_contains(RingKind::Slice, zero, zero).unwrap());
            let h = c.hat_p(a, 2, RingKind::Slice).unwrap();
            assert!(c.ideal_contains(RingKind::Slice, PrimeIdealLabel { class: h, p: 2 }, zero).unwrap());
            for b in 0..k {
                if a != b {
                    assert!(!c.ideal_contains(RingKind::Slice, zero, PrimeIdealLabel { class: b, p: 0 }).unwrap());
                }
            }
        }
    }
}
