use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RingKind {
    Slice,
    Section,
    Burnside,
}

impl RingKind {
    pub fn name(self) -> &'static str {
        match self {
            RingKind::Slice => "slice",
            RingKind::Section => "section",
            RingKind::Burnside => "burnside",
        }
    }

    pub fn parse(s: &str) -> Option<RingKind> {
        match s {
            "slice" => Some(RingKind::Slice),
            "section" => Some(RingKind::Section),
            "burnside" | "ordinary_burnside" => Some(RingKind::Burnside),
            _ => None,
        }
    }
}

/// Exact coefficient ring: integers or rationals.
pub trait Coeff:
    Clone
    + Debug
    + Display
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_i64(v: i64) -> Self;
}

impl Coeff for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
}

impl Coeff for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
}

/// Sparse combination of basis classes of one group's ring; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element<C> {
    pub(crate) ctx: u64,
    pub(crate) kind: RingKind,
    pub(crate) coeffs: BTreeMap<usize, C>,
}

pub type RingElement = Element<BigInt>;
pub type QRingElement = Element<BigRational>;

impl<C: Coeff> Element<C> {
    pub(crate) fn zero(ctx: u64, kind: RingKind) -> Self {
        Element { ctx, kind, coeffs: BTreeMap::new() }
    }

    pub fn kind(&self) -> RingKind {
        self.kind
    }

    pub fn context_id(&self) -> u64 {
        self.ctx
    }

    /// Coefficients keyed by slice-class id (subgroup-class id for the Burnside ring).
    pub fn coeffs(&self) -> &BTreeMap<usize, C> {
        &self.coeffs
    }

    pub fn coeff(&self, class: usize) -> C {
        self.coeffs.get(&class).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub(crate) fn add_term(&mut self, class: usize, v: C) {
        if v.is_zero() {
            return;
        }
        let e = self.coeffs.entry(class).or_insert_with(C::zero);
        *e = e.clone() + v;
        if e.is_zero() {
            self.coeffs.remove(&class);
        }
    }

    pub(crate) fn same_ring(&self, other: &Self) -> Result<()> {
        if self.ctx != other.ctx {
            return Err(Error::GroupMismatch);
        }
        if self.kind != other.kind {
            return Err(Error::RingMismatch(self.kind.name(), other.kind.name()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let mut out = self.clone();
        for (&c, v) in &other.coeffs {
            out.add_term(c, v.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-C::one())
    }

    pub fn scale(&self, k: &C) -> Self {
        let mut out = Element::zero(self.ctx, self.kind);
        for (&c, v) in &self.coeffs {
            out.add_term(c, v.clone() * k.clone());
        }
        out
    }
}

impl RingElement {
    pub fn to_rational(&self) -> QRingElement {
        Element {
            ctx: self.ctx,
            kind: self.kind,
            coeffs: self.coeffs.iter().map(|(&c, v)| (c, BigRational::from_integer(v.clone()))).collect(),
        }
    }
}

impl QRingElement {
    /// The integral element with these coefficients, if every denominator is 1.
    pub fn to_integral(&self) -> Option<RingElement> {
        let mut coeffs = BTreeMap::new();
        for (&c, v) in &self.coeffs {
            if !v.is_integer() {
                return None;
            }
            coeffs.insert(c, v.to_integer());
        }
        Some(Element { ctx: self.ctx, kind: self.kind, coeffs })
    }

    /// Least common multiple of the coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        use num_integer::Integer;
        self.coeffs.values().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
    }
}
