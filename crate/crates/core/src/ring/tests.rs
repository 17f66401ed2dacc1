use super::*;
use crate::group::{cyclic, symmetric};
use num_rational::BigRational;
use num_traits::{One, Zero};

fn ctx(g: Group) -> Context {
    Context::new(g, 100).unwrap()
}

fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

#[test]
fn c2_structure_constants() {
    let c = ctx(cyclic(2, 100).unwrap());
    let a = c.basis(1, 0, RingKind::Slice).unwrap();
    let b = c.basis(0, 0, RingKind::Slice).unwrap();
    assert_eq!(c.multiply(&a, &a).unwrap(), a.scale(&int(2)));
    assert_eq!(c.multiply(&b, &b).unwrap(), b.scale(&int(2)));
    assert_eq!(c.multiply(&a, &b).unwrap(), b.scale(&int(2)));
    let one = c.one(RingKind::Slice);
    assert_eq!(c.multiply(&one, &a).unwrap(), a);
}

#[test]
fn marks_are_triangular_with_weyl_diagonal() {
    let c = ctx(symmetric(3, 100).unwrap());
    for kind in [RingKind::Slice, RingKind::Section, RingKind::Burnside] {
        assert!(c.mark_matrix(kind).is_upper_triangular(), "{kind:?}");
    }
    let m = c.mark_matrix(RingKind::Slice);
    for (i, &cl) in m.classes.iter().enumerate() {
        assert_eq!(m.get(i, i), c.weyl_order(cl) as i64);
        // φ_{1,1}(⟨V,U⟩) = |G:U|
        let (_, u) = c.slices().rep(cl);
        assert_eq!(m.get(0, i), (6 / c.lattice().order(u)) as i64);
    }
}

#[test]
fn idempotent_ghosts_are_indicators() {
    for g in [cyclic(2, 100).unwrap(), symmetric(3, 100).unwrap()] {
        let c = ctx(g);
        for kind in [RingKind::Slice, RingKind::Section, RingKind::Burnside] {
            let ids = c.primitive_idempotents(kind).unwrap();
            let mut total = c.zero::<BigRational>(kind);
            for (i, e) in ids.iter().enumerate() {
                let gh = c.ghost(e).unwrap();
                for (j, v) in gh.iter().enumerate() {
                    assert_eq!(v.is_one(), i == j);
                    assert!(v.is_one() || v.is_zero());
                }
                total = total.add(e).unwrap();
            }
            assert_eq!(total, c.one(kind));
        }
    }
}

#[test]
fn s3_section_failing_vector() {
    let c = ctx(symmetric(3, 100).unwrap());
    let classes = c.basis_classes(RingKind::Section);
    let top = c.slices().num_classes() - 1;
    let m: Vec<BigInt> = classes.iter().map(|&k| int((k == top) as i64)).collect();
    let bad = c.ghost_image_violations(RingKind::Section, &m).unwrap();
    let orders: Vec<_> = bad.iter().map(|&k| c.slices().rep(k)).map(|(t, s)| (c.lattice().order(t), c.lattice().order(s))).collect();
    assert!(orders.contains(&(6, 3)), "{orders:?}");
    let s3a3 = bad[orders.iter().position(|&o| o == (6, 3)).unwrap()];
    assert_eq!(c.normalizer_orbits().unwrap()[s3a3].len(), 2);
    assert!(c.pullback_integral(RingKind::Section, &m).unwrap().is_none());
}

#[test]
fn sweep_order_does_not_change_products() {
    let c = ctx(symmetric(3, 100).unwrap());
    let k = c.slices().num_classes();
    let rev: Vec<usize> = (0..6).rev().collect();
    for a in 0..k {
        for b in 0..k {
            assert_eq!(c.slice_product_with_sweep(a, b, &rev), *c.slice_product(a, b));
        }
    }
}

#[test]
fn section_products_stay_in_sections_and_mismatches_error() {
    let c = ctx(symmetric(3, 100).unwrap());
    let d = ctx(cyclic(2, 100).unwrap());
    let x = c.basis(5, 3, RingKind::Section);
    assert!(x.is_ok() || matches!(x, Err(Error::NotSection) | Err(Error::NotSlice)));
    let one_c = c.one::<BigInt>(RingKind::Slice);
    let one_d = d.one::<BigInt>(RingKind::Slice);
    assert_eq!(c.multiply(&one_c, &one_d).unwrap_err(), Error::GroupMismatch);
    let sec = c.one::<BigInt>(RingKind::Section);
    assert!(matches!(c.multiply(&one_c, &sec), Err(Error::RingMismatch(..))));
    let bad = c.slices().section_classes().len();
    assert!(bad < c.slices().num_classes());
}
