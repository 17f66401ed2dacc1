use super::{Context, RingKind};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::Zero;

/// For a slice class with representative (T,S): the cosets gS of S in
/// N_G(T,S), and the classes of (⟨g,T⟩, ⟨g,S⟩) and of its section closure.
#[derive(Clone, Debug)]
pub struct NormalizerOrbit {
    pub class: usize,
    /// Coset representatives, the identity first.
    pub cosets: Vec<usize>,
    coset_of: Vec<u32>,
    pub slice_class: Vec<usize>,
    pub section_class: Vec<usize>,
}

impl NormalizerOrbit {
    /// Index of the coset containing `g`, if `g` normalizes the slice.
    pub fn coset(&self, g: usize) -> Option<usize> {
        match self.coset_of[g] {
            u32::MAX => None,
            k => Some(k as usize),
        }
    }

    pub fn len(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }
}

impl Context {
    fn build_orbit(&self, c: usize) -> Result<NormalizerOrbit> {
        let (lat, g) = (&self.lat, self.group());
        let (t, s) = self.tab.rep(c);
        let nid = self.tab.normalizer(c);
        let mut coset_of = vec![u32::MAX; g.order()];
        let mut cosets = Vec::new();
        for x in lat.members(nid).iter() {
            if coset_of[x] == u32::MAX {
                for y in lat.members(s).iter() {
                    coset_of[g.mul(x, y)] = cosets.len() as u32;
                }
                cosets.push(x);
            }
        }
        let classes_for = |x: usize| -> Result<(usize, usize)> {
            let gt = lat.join(t, lat.generated([x]));
            let gs = lat.join(s, lat.generated([x]));
            let sc = self.tab.class_of(gt, gs)?;
            let closed = lat.normal_closure(gs, gt)?;
            Ok((sc, self.tab.class_of(gt, closed)?))
        };
        let mut slice_class = Vec::with_capacity(cosets.len());
        let mut section_class = Vec::with_capacity(cosets.len());
        for &x in &cosets {
            let (a, b) = classes_for(x)?;
            slice_class.push(a);
            section_class.push(b);
        }
        // Every element of a coset must give the classes of its representative.
        for x in lat.members(nid).iter() {
            let k = coset_of[x] as usize;
            if classes_for(x)? != (slice_class[k], section_class[k]) {
                return Err(Error::Invariant(format!(
                    "generated slice depends on the coset representative (class {c}, element {x})"
                )));
            }
        }
        Ok(NormalizerOrbit { class: c, cosets, coset_of, slice_class, section_class })
    }

    /// One orbit table per slice class, in class order.
    pub fn normalizer_orbits(&self) -> Result<&[NormalizerOrbit]> {
        self.orbits
            .get_or_init(|| (0..self.tab.num_classes()).map(|c| self.build_orbit(c)).collect())
            .as_ref()
            .map(Vec::as_slice)
            .map_err(Clone::clone)
    }

    /// First basis class of `kind` whose ghost-image congruence fails for `m`
    /// (indexed like `basis_classes(kind)`), or `None` if `m` passes.
    pub fn ghost_image_violation(&self, kind: RingKind, m: &[BigInt]) -> Result<Option<usize>> {
        Ok(self.ghost_image_violations(kind, m)?.first().copied())
    }

    /// Every basis class of `kind` whose congruence fails for `m`.
    pub fn ghost_image_violations(&self, kind: RingKind, m: &[BigInt]) -> Result<Vec<usize>> {
        let classes = self.basis_classes(kind);
        if kind == RingKind::Burnside {
            return Err(Error::RingMismatch("burnside", "slice"));
        }
        if m.len() != classes.len() {
            return Err(Error::Invalid(format!("ghost vector has length {}, expected {}", m.len(), classes.len())));
        }
        let mut pos = vec![usize::MAX; self.tab.num_classes()];
        for (i, &c) in classes.iter().enumerate() {
            pos[c] = i;
        }
        let orbits = self.normalizer_orbits()?;
        let mut bad = Vec::new();
        for &c in &classes {
            let orb = &orbits[c];
            let targets = if kind == RingKind::Slice { &orb.slice_class } else { &orb.section_class };
            let sum: BigInt = targets.iter().map(|&d| &m[pos[d]]).sum();
            if !(sum % BigInt::from(orb.len())).is_zero() {
                bad.push(c);
            }
        }
        Ok(bad)
    }

    pub fn ghost_image_check(&self, m: &[BigInt]) -> Result<bool> {
        Ok(self.ghost_image_violation(RingKind::Slice, m)?.is_none())
    }

    pub fn ghost_image_check_sections(&self, m: &[BigInt]) -> Result<bool> {
        Ok(self.ghost_image_violation(RingKind::Section, m)?.is_none())
    }
}
