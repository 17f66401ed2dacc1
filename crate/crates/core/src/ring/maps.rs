use super::{Coeff, Context, Element, RingKind};
use crate::bitset::BitSet;
use crate::error::{Error, Result};

impl Context {
    /// Relabels each ⟨T,S⟩ as ⟨T, S^{⊴T}⟩.
    pub fn section_restriction<C: Coeff>(&self, x: &Element<C>) -> Result<Element<C>> {
        self.check_owned(x)?;
        if x.kind == RingKind::Burnside {
            return Err(Error::RingMismatch("burnside", "slice"));
        }
        let mut out = self.zero(RingKind::Section);
        for (&c, v) in &x.coeffs {
            let (t, s) = self.tab.rep(c);
            let closed = self.lat.normal_closure(s, t)?;
            out.add_term(self.tab.class_of(t, closed)?, v.clone());
        }
        Ok(out)
    }

    /// Reinterprets a section-ring element in the slice ring.
    pub fn as_slice<C: Coeff>(&self, x: &Element<C>) -> Result<Element<C>> {
        self.check_owned(x)?;
        match x.kind {
            RingKind::Burnside => Err(Error::RingMismatch("burnside", "slice")),
            _ => Ok(Element { ctx: x.ctx, kind: RingKind::Slice, coeffs: x.coeffs.clone() }),
        }
    }

    /// Reinterprets a slice-ring element supported on sections in the section ring.
    pub fn as_section<C: Coeff>(&self, x: &Element<C>) -> Result<Element<C>> {
        self.check_owned(x)?;
        if x.kind == RingKind::Burnside {
            return Err(Error::RingMismatch("burnside", "section"));
        }
        if x.coeffs.keys().any(|&c| !self.tab.is_section_class(c)) {
            return Err(Error::NotSection);
        }
        Ok(Element { ctx: x.ctx, kind: RingKind::Section, coeffs: x.coeffs.clone() })
    }

    /// s_G: ⟨T,S⟩ ↦ [G/S].
    pub fn s_map<C: Coeff>(&self, x: &Element<C>) -> Result<Element<C>> {
        self.check_owned(x)?;
        if x.kind == RingKind::Burnside {
            return Err(Error::RingMismatch("burnside", "slice"));
        }
        let mut out = self.zero(RingKind::Burnside);
        for (&c, v) in &x.coeffs {
            out.add_term(self.lat.class_of(self.tab.rep(c).1), v.clone());
        }
        Ok(out)
    }

    /// i_G: [G/K] ↦ ⟨K,K⟩, into the slice or section ring.
    pub fn i_map<C: Coeff>(&self, x: &Element<C>, kind: RingKind) -> Result<Element<C>> {
        self.check_owned(x)?;
        if x.kind != RingKind::Burnside {
            return Err(Error::RingMismatch(x.kind.name(), "burnside"));
        }
        if kind == RingKind::Burnside {
            return Ok(x.clone());
        }
        let mut out = self.zero(kind);
        for (&c, v) in &x.coeffs {
            let k = self.lat.class_rep(c);
            out.add_term(self.tab.class_of(k, k)?, v.clone());
        }
        Ok(out)
    }

    fn product_subgroup(&self, a: &Context, ka: usize, b: &Context, kb: usize) -> Result<usize> {
        let m = b.group().order();
        let members = BitSet::from_iter(
            self.group().order(),
            a.lat.members(ka).iter().flat_map(|x| b.lat.members(kb).iter().map(move |y| x * m + y)),
        );
        self.lat.id_of(&members).ok_or_else(|| Error::Invariant("product subgroup missing from lattice".into()))
    }

    /// ⟨T,S⟩ × ⟨T',S'⟩ = ⟨T×T', S×S'⟩ in `self`, which must be the context of `a.group() × b.group()`.
    pub fn external_product<C: Coeff>(&self, a: &Context, x: &Element<C>, b: &Context, y: &Element<C>) -> Result<Element<C>> {
        a.check_owned(x)?;
        b.check_owned(y)?;
        if x.kind != y.kind {
            return Err(Error::RingMismatch(x.kind.name(), y.kind.name()));
        }
        if self.group().table() != a.group().direct_product(b.group()).table() {
            return Err(Error::GroupMismatch);
        }
        let mut out = self.zero(x.kind);
        for (&c, v) in &x.coeffs {
            for (&d, w) in &y.coeffs {
                let class = match x.kind {
                    RingKind::Burnside => {
                        let k = self.product_subgroup(a, a.lat.class_rep(c), b, b.lat.class_rep(d))?;
                        self.lat.class_of(k)
                    }
                    _ => {
                        let ((t, s), (t2, s2)) = (a.tab.rep(c), b.tab.rep(d));
                        let tt = self.product_subgroup(a, t, b, t2)?;
                        let ss = self.product_subgroup(a, s, b, s2)?;
                        self.tab.class_of(tt, ss)?
                    }
                };
                out.add_term(class, v.clone() * w.clone());
            }
        }
        Ok(out)
    }
}
