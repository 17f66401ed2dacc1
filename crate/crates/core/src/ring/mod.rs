mod element;
mod idempotents;
mod image;
mod maps;
mod marks;

pub use element::{Coeff, Element, QRingElement, RingElement, RingKind};
pub use image::NormalizerOrbit;
pub use marks::MarkMatrix;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::group::{parse_group, Group};
use crate::lattice::Lattice;
use crate::slices::SliceTable;
use num_bigint::BigInt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::OnceLock;

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

/// Product of two basis classes, as (class, multiplicity) pairs sorted by class.
type Product = Vec<(usize, i64)>;

/// A group together with every table its rings need. Elements carry the id
/// of the context that made them and are only combined within it.
#[derive(Debug)]
pub struct Context {
    id: u64,
    lat: Lattice,
    tab: SliceTable,
    products: Vec<OnceLock<Product>>,
    burnside_products: Vec<OnceLock<Product>>,
    marks: OnceLock<Vec<i64>>,
    burnside_marks: OnceLock<Vec<i64>>,
    orbits: OnceLock<std::result::Result<Vec<NormalizerOrbit>, Error>>,
}

impl Context {
    pub fn new(group: Group, cap: usize) -> Result<Context> {
        let lat = Lattice::new(group, cap)?;
        let tab = SliceTable::new(&lat);
        let k = tab.num_classes();
        let b = lat.classes().len();
        Ok(Context {
            id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
            lat,
            tab,
            products: (0..k * k).map(|_| OnceLock::new()).collect(),
            burnside_products: (0..b * b).map(|_| OnceLock::new()).collect(),
            marks: OnceLock::new(),
            burnside_marks: OnceLock::new(),
            orbits: OnceLock::new(),
        })
    }

    pub fn from_description(text: &str, cap: usize) -> Result<Context> {
        Context::new(parse_group(text, cap)?, cap)
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn group(&self) -> &Group {
        self.lat.group()
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lat
    }

    pub fn slices(&self) -> &SliceTable {
        &self.tab
    }

    /// Number of basis classes of the ring.
    pub fn rank(&self, kind: RingKind) -> usize {
        self.basis_classes(kind).len()
    }

    /// Basis class ids of the ring, ascending; these also index its ghost coordinates.
    pub fn basis_classes(&self, kind: RingKind) -> Vec<usize> {
        match kind {
            RingKind::Slice => (0..self.tab.num_classes()).collect(),
            RingKind::Section => self.tab.section_classes(),
            RingKind::Burnside => (0..self.lat.classes().len()).collect(),
        }
    }

    /// |N_G(T,S)/S| for the representative of slice class `c`.
    pub fn weyl_order(&self, c: usize) -> usize {
        let (_, s) = self.tab.rep(c);
        self.lat.order(self.tab.normalizer(c)) / self.lat.order(s)
    }

    pub fn zero<C: Coeff>(&self, kind: RingKind) -> Element<C> {
        Element::zero(self.id, kind)
    }

    pub fn one<C: Coeff>(&self, kind: RingKind) -> Element<C> {
        let mut e = self.zero(kind);
        let top = match kind {
            RingKind::Burnside => self.lat.class_of(self.lat.whole()),
            _ => self.tab.num_classes() - 1,
        };
        e.add_term(top, C::one());
        e
    }

    /// ⟨T,S⟩ in the slice or section ring.
    pub fn basis(&self, t: usize, s: usize, kind: RingKind) -> Result<RingElement> {
        let c = self.tab.class_of(t, s)?;
        self.basis_class(c, kind)
    }

    pub fn basis_class(&self, c: usize, kind: RingKind) -> Result<RingElement> {
        match kind {
            RingKind::Burnside => {
                if c >= self.lat.classes().len() {
                    return Err(Error::Invalid(format!("no subgroup class {c}")));
                }
            }
            RingKind::Section if !self.tab.is_section_class(c) => return Err(Error::NotSection),
            _ if c >= self.tab.num_classes() => return Err(Error::Invalid(format!("no slice class {c}"))),
            _ => {}
        }
        let mut e = self.zero(kind);
        e.add_term(c, BigInt::from(1));
        Ok(e)
    }

    /// [G/K] in the ordinary Burnside ring.
    pub fn burnside_basis(&self, k: usize) -> RingElement {
        let mut e = self.zero(RingKind::Burnside);
        e.add_term(self.lat.class_of(k), BigInt::from(1));
        e
    }

    /// Element with the given coefficients; section-ring support is validated.
    pub fn element<C: Coeff>(&self, kind: RingKind, terms: impl IntoIterator<Item = (usize, C)>) -> Result<Element<C>> {
        let valid = self.basis_classes(kind);
        let mut e = self.zero(kind);
        for (c, v) in terms {
            if valid.binary_search(&c).is_err() {
                return Err(match kind {
                    RingKind::Section if c < self.tab.num_classes() => Error::NotSection,
                    _ => Error::Invalid(format!("class {c} is not a basis class of the {} ring", kind.name())),
                });
            }
            e.add_term(c, v);
        }
        Ok(e)
    }

    pub(crate) fn check_owned<C>(&self, x: &Element<C>) -> Result<()> {
        if x.ctx == self.id {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    /// ⟨T,S⟩⟨Y,X⟩ = Σ_{g ∈ [S\G/X]} ⟨T ∩ ^gY, S ∩ ^gX⟩, with double cosets
    /// found in the order given by `sweep`.
    pub fn slice_product_with_sweep(&self, a: usize, b: usize, sweep: &[usize]) -> Product {
        let (t, s) = self.tab.rep(a);
        let (y, x) = self.tab.rep(b);
        let reps = double_coset_reps(self.group(), self.lat.members(s), self.lat.members(x), sweep);
        let mut out: Vec<(usize, i64)> = Vec::new();
        for g in reps {
            let tt = self.lat.meet(t, self.lat.conj(y, g));
            let ss = self.lat.meet(s, self.lat.conj(x, g));
            let c = self.tab.class_of(tt, ss).expect("intersection of slices is a slice");
            out.push((c, 1));
        }
        collect_counts(out)
    }

    pub(crate) fn slice_product(&self, a: usize, b: usize) -> &Product {
        let k = self.tab.num_classes();
        let (a, b) = (a.min(b), a.max(b));
        self.products[a * k + b].get_or_init(|| {
            let sweep: Vec<usize> = (0..self.group().order()).collect();
            self.slice_product_with_sweep(a, b, &sweep)
        })
    }

    pub(crate) fn burnside_product(&self, a: usize, b: usize) -> &Product {
        let m = self.lat.classes().len();
        let (a, b) = (a.min(b), a.max(b));
        self.burnside_products[a * m + b].get_or_init(|| {
            let (k, l) = (self.lat.class_rep(a), self.lat.class_rep(b));
            let sweep: Vec<usize> = (0..self.group().order()).collect();
            let reps = double_coset_reps(self.group(), self.lat.members(k), self.lat.members(l), &sweep);
            let out = reps.into_iter().map(|g| (self.lat.class_of(self.lat.meet(k, self.lat.conj(l, g))), 1)).collect();
            collect_counts(out)
        })
    }

    pub fn multiply<C: Coeff>(&self, x: &Element<C>, y: &Element<C>) -> Result<Element<C>> {
        self.check_owned(x)?;
        x.same_ring(y)?;
        let mut out = self.zero(x.kind);
        for (&a, ca) in &x.coeffs {
            for (&b, cb) in &y.coeffs {
                let prod = ca.clone() * cb.clone();
                let table = match x.kind {
                    RingKind::Burnside => self.burnside_product(a, b),
                    _ => self.slice_product(a, b),
                };
                for &(c, k) in table {
                    out.add_term(c, prod.clone() * C::from_i64(k));
                }
            }
        }
        if x.kind == RingKind::Section {
            if let Some(&c) = out.coeffs.keys().find(|&&c| !self.tab.is_section_class(c)) {
                return Err(Error::Invariant(format!("section product left the section ring at class {c}")));
            }
        }
        Ok(out)
    }
}

/// First-seen representatives of the double cosets A g B, visiting `sweep` in order.
pub fn double_coset_reps(g: &Group, a: &BitSet, b: &BitSet, sweep: &[usize]) -> Vec<usize> {
    let mut seen = BitSet::new(g.order());
    let (av, bv) = (a.to_vec(), b.to_vec());
    let mut reps = Vec::new();
    for &x in sweep {
        if seen.contains(x) {
            continue;
        }
        reps.push(x);
        for &s in &av {
            let sx = g.mul(s, x);
            for &t in &bv {
                seen.insert(g.mul(sx, t));
            }
        }
    }
    reps
}

fn collect_counts(mut v: Vec<(usize, i64)>) -> Vec<(usize, i64)> {
    v.sort_unstable();
    let mut out: Vec<(usize, i64)> = Vec::new();
    for (c, k) in v {
        match out.last_mut() {
            Some((lc, lk)) if *lc == c => *lk += k,
            _ => out.push((c, k)),
        }
    }
    out
}

#[cfg(test)]
mod tests;
