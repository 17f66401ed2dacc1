use super::{Coeff, Context, Element, QRingElement, RingElement, RingKind};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Marks of the basis classes of one ring: `get(i, j)` is the mark indexed by
/// `classes[i]` evaluated on the basis element `classes[j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkMatrix {
    pub kind: RingKind,
    pub classes: Vec<usize>,
    entries: Vec<i64>,
}

impl MarkMatrix {
    pub fn size(&self) -> usize {
        self.classes.len()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.classes.len() + j]
    }

    pub fn row(&self, i: usize) -> &[i64] {
        let n = self.classes.len();
        &self.entries[i * n..(i + 1) * n]
    }

    pub fn is_upper_triangular(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| (0..i).all(|j| self.get(i, j) == 0))
    }

    /// Determinant, as the diagonal product of a triangular matrix.
    pub fn determinant(&self) -> Option<BigInt> {
        self.is_upper_triangular()
            .then(|| (0..self.size()).fold(BigInt::one(), |acc, i| acc * BigInt::from(self.get(i, i))))
    }
}

impl Context {
    /// |{gU ∈ G/U : (T^g, S^g) ⪯ (V,U)}|, i.e. #{g : T ≤ ^gV, S ≤ ^gU} / |U|.
    pub fn mark_of_pair(&self, (t, s): (usize, usize), (v, u): (usize, usize)) -> i64 {
        let lat = &self.lat;
        let n = self.group().order();
        let hits = (0..n).filter(|&g| lat.leq(t, lat.conj(v, g)) && lat.leq(s, lat.conj(u, g))).count();
        (hits / lat.order(u)) as i64
    }

    fn slice_marks(&self) -> &[i64] {
        self.marks.get_or_init(|| {
            let k = self.tab.num_classes();
            let mut m = vec![0i64; k * k];
            for r in 0..k {
                for c in 0..k {
                    m[r * k + c] = self.mark_of_pair(self.tab.rep(r), self.tab.rep(c));
                }
            }
            m
        })
    }

    fn burnside_mark_table(&self) -> &[i64] {
        self.burnside_marks.get_or_init(|| {
            let lat = &self.lat;
            let b = lat.classes().len();
            let n = self.group().order();
            let mut m = vec![0i64; b * b];
            for r in 0..b {
                let h = lat.class_rep(r);
                for c in 0..b {
                    let k = lat.class_rep(c);
                    m[r * b + c] = ((0..n).filter(|&g| lat.leq(h, lat.conj(k, g))).count() / lat.order(k)) as i64;
                }
            }
            m
        })
    }

    /// φ_{T,S}(⟨V,U⟩) between slice classes.
    pub fn slice_mark(&self, row: usize, col: usize) -> i64 {
        self.slice_marks()[row * self.tab.num_classes() + col]
    }

    /// φ_H([G/K]) between subgroup classes.
    pub fn burnside_mark_entry(&self, row: usize, col: usize) -> i64 {
        self.burnside_mark_table()[row * self.lat.classes().len() + col]
    }

    /// φ_{T,S}(x) for a slice- or section-ring element.
    pub fn mark<C: Coeff>(&self, t: usize, s: usize, x: &Element<C>) -> Result<C> {
        self.check_owned(x)?;
        if x.kind == RingKind::Burnside {
            return Err(Error::RingMismatch("burnside", "slice"));
        }
        let r = self.tab.class_of(t, s)?;
        Ok(self.mark_class(r, x))
    }

    pub(crate) fn mark_class<C: Coeff>(&self, r: usize, x: &Element<C>) -> C {
        let mut acc = C::zero();
        for (&c, v) in &x.coeffs {
            let m = self.slice_mark(r, c);
            if m != 0 {
                acc = acc + v.clone() * C::from_i64(m);
            }
        }
        acc
    }

    /// φ_H(x) on the ordinary Burnside ring.
    pub fn burnside_mark<C: Coeff>(&self, h: usize, x: &Element<C>) -> Result<C> {
        self.check_owned(x)?;
        if x.kind != RingKind::Burnside {
            return Err(Error::RingMismatch(x.kind.name(), "burnside"));
        }
        let r = self.lat.class_of(h);
        let mut acc = C::zero();
        for (&c, v) in &x.coeffs {
            acc = acc + v.clone() * C::from_i64(self.burnside_mark_entry(r, c));
        }
        Ok(acc)
    }

    /// Marks of `x` at every basis class of its ring (φ, ψ, or the table of marks).
    pub fn ghost<C: Coeff>(&self, x: &Element<C>) -> Result<Vec<C>> {
        self.check_owned(x)?;
        Ok(match x.kind {
            RingKind::Burnside => (0..self.lat.classes().len())
                .map(|r| {
                    let mut acc = C::zero();
                    for (&c, v) in &x.coeffs {
                        acc = acc + v.clone() * C::from_i64(self.burnside_mark_entry(r, c));
                    }
                    acc
                })
                .collect(),
            kind => self.basis_classes(kind).into_iter().map(|r| self.mark_class(r, x)).collect(),
        })
    }

    pub fn mark_matrix(&self, kind: RingKind) -> MarkMatrix {
        let classes = self.basis_classes(kind);
        let mut entries = Vec::with_capacity(classes.len() * classes.len());
        for &r in &classes {
            for &c in &classes {
                entries.push(match kind {
                    RingKind::Burnside => self.burnside_mark_entry(r, c),
                    _ => self.slice_mark(r, c),
                });
            }
        }
        MarkMatrix { kind, classes, entries }
    }

    /// The unique rational element whose ghost is `m`, by back substitution on
    /// the triangular mark matrix.
    pub fn pullback(&self, kind: RingKind, m: &[BigRational]) -> Result<QRingElement> {
        let mm = self.mark_matrix(kind);
        let n = mm.size();
        if m.len() != n {
            return Err(Error::Invalid(format!("ghost vector has length {}, expected {n}", m.len())));
        }
        if !mm.is_upper_triangular() {
            return Err(Error::Invariant("mark matrix is not triangular".into()));
        }
        let mut x = vec![BigRational::zero(); n];
        for i in (0..n).rev() {
            let mut acc = m[i].clone();
            for (j, xj) in x.iter().enumerate().skip(i + 1) {
                let e = mm.get(i, j);
                if e != 0 && !xj.is_zero() {
                    acc -= xj * BigRational::from_integer(BigInt::from(e));
                }
            }
            x[i] = acc / BigRational::from_integer(BigInt::from(mm.get(i, i)));
        }
        self.element(kind, mm.classes.iter().copied().zip(x))
    }

    /// Integral preimage of `m` under the ghost map, or `None` when the preimage is not integral.
    pub fn pullback_integral(&self, kind: RingKind, m: &[BigInt]) -> Result<Option<RingElement>> {
        let q: Vec<BigRational> = m.iter().map(|v| BigRational::from_integer(v.clone())).collect();
        Ok(self.pullback(kind, &q)?.to_integral())
    }
}
