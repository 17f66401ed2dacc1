use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::gf2::Gf2Space;
use crate::gset::GSet;
use crate::ring::{Context, RingElement, RingKind};
use num_bigint::BigInt;
use num_traits::{One, Signed};
use std::collections::HashSet;

/// The unit group of a ring as a GF(2) space. Sign vectors hold one bit per
/// basis class of the ring, set where the ghost value is −1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitGroupBasis {
    pub kind: RingKind,
    pub dimension: usize,
    /// Number of basis classes of the ring.
    pub width: usize,
    pub basis: Vec<RingElement>,
    pub sign_vectors: Vec<BitSet>,
}

impl Context {
    /// For every basis class (T,S) and cosets g, h of S in N_G(T,S): the class
    /// positions of (T,S), ⟨g,·⟩, ⟨h,·⟩ and ⟨gh,·⟩. Burnside classes use (H,H).
    fn unit_relations(&self, kind: RingKind) -> Result<Gf2Space> {
        let classes = self.basis_classes(kind);
        let n = classes.len();
        let mut space = Gf2Space::new(n);
        let mut seen = HashSet::new();
        let mut add = |space: &mut Gf2Space, idx: [usize; 4]| {
            let mut row = BitSet::new(n);
            for i in idx {
                row.toggle(i);
            }
            if !row.is_empty() && seen.insert(row.clone()) {
                space.insert(&row);
            }
        };
        let g = self.group();
        match kind {
            RingKind::Burnside => {
                let lat = self.lattice();
                for (i, &c) in classes.iter().enumerate() {
                    let h = lat.class_rep(c);
                    let nid = lat.normalizer(h);
                    let (_, coset_of) = GSet::cosets(g, lat.members(h));
                    let mut reps: Vec<usize> = Vec::new();
                    let mut seen_coset = HashSet::new();
                    for x in lat.members(nid).iter() {
                        if seen_coset.insert(coset_of[x]) {
                            reps.push(x);
                        }
                    }
                    let target = |x: usize| lat.class_of(lat.join(h, lat.generated([x])));
                    for &a in &reps {
                        for &b in &reps {
                            add(&mut space, [i, target(a), target(b), target(g.mul(a, b))]);
                        }
                    }
                }
            }
            _ => {
                let mut pos = vec![usize::MAX; self.slices().num_classes()];
                for (i, &c) in classes.iter().enumerate() {
                    pos[c] = i;
                }
                let orbits = self.normalizer_orbits()?;
                for &c in &classes {
                    let orb = &orbits[c];
                    let targets = if kind == RingKind::Slice { &orb.slice_class } else { &orb.section_class };
                    for a in 1..orb.len() {
                        for b in a..orb.len() {
                            let ab = orb.coset(g.mul(orb.cosets[a], orb.cosets[b])).expect("N is a group");
                            add(&mut space, [pos[c], pos[targets[a]], pos[targets[b]], pos[targets[ab]]]);
                        }
                    }
                }
            }
        }
        Ok(space)
    }

    /// Ghost vector with −1 where `bits` is set and 1 elsewhere.
    fn signs_to_ghost(bits: &BitSet, n: usize) -> Vec<BigInt> {
        (0..n).map(|i| if bits.contains(i) { -BigInt::one() } else { BigInt::one() }).collect()
    }

    /// Sign vector of `u` if every ghost value is ±1.
    pub fn sign_vector(&self, u: &RingElement) -> Result<Option<BitSet>> {
        let ghost = self.ghost(u)?;
        let mut bits = BitSet::new(ghost.len());
        for (i, v) in ghost.iter().enumerate() {
            if v.abs() != BigInt::one() {
                return Ok(None);
            }
            if v.is_negative() {
                bits.insert(i);
            }
        }
        Ok(Some(bits))
    }

    /// Ξ(G)^×, Γ(G)^× or B(G)^×: the GF(2) solutions of the four-term
    /// relations λ(gh) + λ(g) + λ(h) + λ(1) = 0, pulled back through the ghost map.
    pub fn unit_group(&self, kind: RingKind) -> Result<UnitGroupBasis> {
        let n = self.rank(kind);
        let null = self.unit_relations(kind)?.nullspace();
        let mut basis = Vec::with_capacity(null.len());
        for bits in &null {
            let m = Self::signs_to_ghost(bits, n);
            let u = self
                .pullback_integral(kind, &m)?
                .ok_or_else(|| Error::Invariant("a solution of the unit relations is not a ghost image".into()))?;
            basis.push(u);
        }
        let out = UnitGroupBasis { kind, dimension: null.len(), width: n, basis, sign_vectors: null };
        if !out.contains_sign(&BitSet::full(n)) {
            return Err(Error::Invariant("−1 is missing from the unit group".into()));
        }
        Ok(out)
    }

    /// Number of ±1 ghost vectors passing the ghost-image congruences, by
    /// exhaustive search; refuses more than 2^`max_bits` candidates.
    pub fn unit_count_brute_force(&self, kind: RingKind, max_bits: usize) -> Result<usize> {
        let n = self.rank(kind);
        if n > max_bits {
            return Err(Error::Invalid(format!("2^{n} sign vectors exceed the search limit")));
        }
        let mut count = 0;
        for mask in 0u64..(1u64 << n) {
            let bits = BitSet::from_iter(n, (0..n).filter(|&i| mask >> i & 1 == 1));
            let m = Self::signs_to_ghost(&bits, n);
            let ok = match kind {
                RingKind::Burnside => self.pullback_integral(kind, &m)?.is_some(),
                _ => self.ghost_image_violation(kind, &m)?.is_none(),
            };
            count += ok as usize;
        }
        Ok(count)
    }

    /// −⟨G,G⟩ together with 1 − ⟨S,S⟩ and 1 − ⟨G,S⟩ for each subgroup S of
    /// index 2, each checked to square to 1.
    pub fn abelian_unit_basis(&self) -> Result<UnitGroupBasis> {
        let lat = self.lattice();
        if !self.group().is_abelian() {
            return Err(Error::NotAbelian);
        }
        let whole = lat.whole();
        let one: RingElement = self.one(RingKind::Slice);
        let mut elems = vec![one.neg()];
        for s in self.index_two_subgroups() {
            elems.push(one.sub(&self.basis(s, s, RingKind::Slice)?)?);
            elems.push(one.sub(&self.basis(whole, s, RingKind::Slice)?)?);
        }
        self.unit_span(RingKind::Slice, elems)
    }

    /// The span of −1 and 1 − ⟨S,S⟩ for |G:S| = 2, which is i_G(B(G)^×) for abelian G.
    pub fn ordinary_unit_subgroup(&self) -> Result<UnitGroupBasis> {
        if !self.group().is_abelian() {
            return Err(Error::NotAbelian);
        }
        let one: RingElement = self.one(RingKind::Slice);
        let mut elems = vec![one.neg()];
        for s in self.index_two_subgroups() {
            elems.push(one.sub(&self.basis(s, s, RingKind::Slice)?)?);
        }
        let out = self.unit_span(RingKind::Slice, elems)?;
        let image = self.unit_group(RingKind::Burnside)?.basis.iter().map(|u| self.i_map(u, RingKind::Slice)).collect::<Result<Vec<_>>>()?;
        let image = self.unit_span(RingKind::Slice, image)?;
        if !same_span(&out.sign_vectors, &image.sign_vectors, self.rank(RingKind::Slice)) {
            return Err(Error::Invariant("index-2 units do not span the image of B(G)^×".into()));
        }
        Ok(out)
    }

    fn index_two_subgroups(&self) -> Vec<usize> {
        let lat = self.lattice();
        (0..lat.len()).filter(|&s| 2 * lat.order(s) == self.group().order()).collect()
    }

    /// Checks each element is a unit and records the GF(2) rank of their span.
    fn unit_span(&self, kind: RingKind, elems: Vec<RingElement>) -> Result<UnitGroupBasis> {
        let mut space = Gf2Space::new(self.rank(kind));
        let mut signs = Vec::with_capacity(elems.len());
        for u in &elems {
            if self.multiply(u, u)? != self.one(kind) {
                return Err(Error::Invariant("a unit candidate does not square to 1".into()));
            }
            let bits = self.sign_vector(u)?.ok_or_else(|| Error::Invariant("unit with ghost value other than ±1".into()))?;
            space.insert(&bits);
            signs.push(bits);
        }
        Ok(UnitGroupBasis { kind, dimension: space.rank(), width: self.rank(kind), basis: elems, sign_vectors: signs })
    }

    /// Whether `u` is a unit. Ghost values in {±1}, u² = 1 and membership in
    /// the solved unit group must agree; disagreement is an error.
    pub fn verify_unit(&self, u: &RingElement) -> Result<bool> {
        let units = self.unit_group(u.kind())?;
        self.verify_unit_with(u, &units)
    }

    /// `verify_unit` against an already solved unit group of the same ring.
    pub fn verify_unit_with(&self, u: &RingElement, units: &UnitGroupBasis) -> Result<bool> {
        let kind = u.kind();
        if units.kind != kind {
            return Err(Error::RingMismatch(units.kind.name(), kind.name()));
        }
        let signs = self.sign_vector(u)?;
        let squares = self.multiply(u, u)? == self.one(kind);
        let member = signs.as_ref().is_some_and(|bits| units.contains_sign(bits));
        if signs.is_some() != squares || squares != member {
            return Err(Error::Invariant(format!(
                "unit tests disagree: ghost ±1 {}, square one {squares}, in solved group {member}",
                signs.is_some()
            )));
        }
        Ok(squares)
    }
}

impl UnitGroupBasis {
    /// Whether the sign vector lies in the span of the basis.
    pub fn contains_sign(&self, bits: &BitSet) -> bool {
        let mut space = Gf2Space::new(self.width);
        for v in &self.sign_vectors {
            space.insert(v);
        }
        space.contains(bits)
    }

    /// Whether every sign vector of `other` lies in this span.
    pub fn spans(&self, other: &UnitGroupBasis) -> bool {
        other.sign_vectors.iter().all(|v| self.contains_sign(v))
    }
}

fn same_span(a: &[BitSet], b: &[BitSet], n: usize) -> bool {
    let (mut sa, mut sb) = (Gf2Space::new(n), Gf2Space::new(n));
    for v in a {
        sa.insert(v);
    }
    for v in b {
        sb.insert(v);
    }
    sa.rank() == sb.rank() && a.iter().all(|v| sb.contains(v))
}
