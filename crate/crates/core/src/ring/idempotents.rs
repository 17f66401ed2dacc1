use super::{Context, QRingElement, RingKind};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use std::collections::BTreeMap;

impl Context {
    fn collapse(&self, kind: RingKind, sums: BTreeMap<usize, BigInt>, denom: usize) -> QRingElement {
        let d = BigInt::from(denom);
        let mut e = self.zero(kind);
        for (c, v) in sums {
            e.add_term(c, BigRational::new(v, d.clone()));
        }
        e
    }

    /// ξ_{T,S} = (1/|N_G(T,S)|) Σ_{U ≤ S ≤ V ≤ T} |U| μ(U,S) μ(V,T) ⟨V,U⟩, summed over all
    /// slices before collapsing to classes.
    pub fn idempotent_xi(&self, t: usize, s: usize) -> Result<QRingElement> {
        let (lat, tab) = (&self.lat, &self.tab);
        let nid = lat.normalizer_pair(t, s)?;
        let mut sums: BTreeMap<usize, BigInt> = BTreeMap::new();
        for v in lat.below(t).iter().filter(|&v| lat.leq(s, v)) {
            let mv = tab.mu(v, t);
            if mv == 0 {
                continue;
            }
            for u in lat.below(s).iter() {
                let mu = tab.mu(u, s);
                if mu == 0 {
                    continue;
                }
                let w = BigInt::from(lat.order(u)) * BigInt::from(mu) * BigInt::from(mv);
                *sums.entry(tab.class_of(v, u)?).or_default() += w;
            }
        }
        Ok(self.collapse(RingKind::Slice, sums, lat.order(nid)))
    }

    /// γ_{T,S} = (1/|N_G(T,S)|) Σ |U| μ(U,X) μ(V,T) ⟨V,U⟩ over U ⊴ V ≤ T and
    /// U ≤ X ≤ V with X^{⊴T} = S.
    pub fn idempotent_gamma(&self, t: usize, s: usize) -> Result<QRingElement> {
        let (lat, tab) = (&self.lat, &self.tab);
        if !lat.is_normal_in(s, t) {
            return Err(if lat.leq(s, t) { Error::NotSection } else { Error::NotSlice });
        }
        let nid = lat.normalizer_pair(t, s)?;
        let closes_to_s: Vec<bool> = (0..lat.len())
            .map(|x| lat.leq(x, t) && lat.normal_closure(x, t).expect("x <= t") == s)
            .collect();
        let mut sums: BTreeMap<usize, BigInt> = BTreeMap::new();
        for v in lat.below(t).iter() {
            let mv = tab.mu(v, t);
            if mv == 0 {
                continue;
            }
            for u in lat.below(v).iter().filter(|&u| lat.is_normal_in(u, v)) {
                let inner: i64 = lat
                    .below(v)
                    .iter()
                    .filter(|&x| closes_to_s[x] && lat.leq(u, x))
                    .map(|x| tab.mu(u, x))
                    .sum();
                if inner != 0 {
                    let w = BigInt::from(lat.order(u)) * BigInt::from(inner) * BigInt::from(mv);
                    *sums.entry(tab.class_of(v, u)?).or_default() += w;
                }
            }
        }
        Ok(self.collapse(RingKind::Section, sums, lat.order(nid)))
    }

    /// Primitive idempotent of B(G) at H: (1/|N_G(H)|) Σ_{K ≤ H} |K| μ(K,H) [G/K].
    pub fn burnside_idempotent(&self, h: usize) -> QRingElement {
        let lat = &self.lat;
        let mut sums: BTreeMap<usize, BigInt> = BTreeMap::new();
        for k in lat.below(h).iter() {
            let m = self.tab.mu(k, h);
            if m != 0 {
                *sums.entry(lat.class_of(k)).or_default() += BigInt::from(lat.order(k)) * BigInt::from(m);
            }
        }
        self.collapse(RingKind::Burnside, sums, lat.order(lat.normalizer(h)))
    }

    /// ξ (slice ring), γ (section ring) or the B(G) idempotent for each basis class, in class order.
    pub fn primitive_idempotents(&self, kind: RingKind) -> Result<Vec<QRingElement>> {
        self.basis_classes(kind)
            .into_iter()
            .map(|c| match kind {
                RingKind::Slice => {
                    let (t, s) = self.tab.rep(c);
                    self.idempotent_xi(t, s)
                }
                RingKind::Section => {
                    let (t, s) = self.tab.rep(c);
                    self.idempotent_gamma(t, s)
                }
                RingKind::Burnside => Ok(self.burnside_idempotent(self.lat.class_rep(c))),
            })
            .collect()
    }
}
