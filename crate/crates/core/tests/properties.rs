//! Ring invariants as randomized properties over a handful of small groups.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use sliceburn::verify::{self, corpus_context};
use sliceburn::{Context, RingElement, RingKind};
use std::sync::OnceLock;

const GROUPS: &[&str] = &[
    "family cyclic 2",
    "family cyclic 4",
    "family elementary_abelian 2 2",
    "family symmetric 3",
    "family dihedral 8",
    "family quaternion8",
    "family alternating 4",
];

const KINDS: [RingKind; 3] = [RingKind::Slice, RingKind::Section, RingKind::Burnside];

fn contexts() -> &'static [Context] {
    static CTX: OnceLock<Vec<Context>> = OnceLock::new();
    CTX.get_or_init(|| GROUPS.iter().map(|d| corpus_context(d).unwrap()).collect())
}

fn build(ctx: &Context, kind: RingKind, coeffs: &[i64]) -> RingElement {
    let classes = ctx.basis_classes(kind);
    let terms = classes.iter().zip(coeffs.iter().cycle()).map(|(&c, &v)| (c, BigInt::from(v)));
    ctx.element(kind, terms).unwrap()
}

fn coeffs() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-4i64..=4, 1..40)
}

fn setup() -> impl Strategy<Value = (usize, RingKind)> {
    (0..GROUPS.len(), prop::sample::select(KINDS.to_vec()))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn ring_axioms((g, kind) in setup(), a in coeffs(), b in coeffs(), c in coeffs()) {
        let ctx = &contexts()[g];
        let (x, y, z) = (build(ctx, kind, &a), build(ctx, kind, &b), build(ctx, kind, &c));
        let xy = ctx.multiply(&x, &y).unwrap();
        prop_assert_eq!(&xy, &ctx.multiply(&y, &x).unwrap());
        prop_assert_eq!(ctx.multiply(&xy, &z).unwrap(), ctx.multiply(&x, &ctx.multiply(&y, &z).unwrap()).unwrap());
        let lhs = ctx.multiply(&x, &y.add(&z).unwrap()).unwrap();
        prop_assert_eq!(lhs, xy.add(&ctx.multiply(&x, &z).unwrap()).unwrap());
        prop_assert_eq!(ctx.multiply(&ctx.one(kind), &x).unwrap(), x.clone());
        prop_assert!(ctx.multiply(&ctx.zero(kind), &x).unwrap().is_zero());
    }

    #[test]
    fn ghost_is_a_ring_map((g, kind) in setup(), a in coeffs(), b in coeffs()) {
        let ctx = &contexts()[g];
        let (x, y) = (build(ctx, kind, &a), build(ctx, kind, &b));
        let (gx, gy) = (ctx.ghost(&x).unwrap(), ctx.ghost(&y).unwrap());
        let prod: Vec<BigInt> = gx.iter().zip(&gy).map(|(u, v)| u * v).collect();
        let sum: Vec<BigInt> = gx.iter().zip(&gy).map(|(u, v)| u + v).collect();
        prop_assert_eq!(ctx.ghost(&ctx.multiply(&x, &y).unwrap()).unwrap(), prod);
        prop_assert_eq!(ctx.ghost(&x.add(&y).unwrap()).unwrap(), sum);
        prop_assert!(ctx.ghost(&ctx.one::<BigInt>(kind)).unwrap().iter().all(One::is_one));
    }

    #[test]
    fn ghost_round_trips((g, kind) in setup(), a in coeffs()) {
        let ctx = &contexts()[g];
        let x = build(ctx, kind, &a);
        let gh = ctx.ghost(&x).unwrap();
        if kind != RingKind::Burnside {
            prop_assert!(ctx.ghost_image_violation(kind, &gh).unwrap().is_none());
        }
        prop_assert_eq!(ctx.pullback_integral(kind, &gh).unwrap(), Some(x.clone()));
        let q: Vec<BigRational> = gh.into_iter().map(BigRational::from_integer).collect();
        prop_assert_eq!(ctx.pullback(kind, &q).unwrap(), x.to_rational());
    }

    #[test]
    fn idempotents_split_elements((g, kind) in setup(), a in coeffs()) {
        let ctx = &contexts()[g];
        let x = build(ctx, kind, &a).to_rational();
        let ids = ctx.primitive_idempotents(kind).unwrap();
        prop_assert_eq!(ids.len(), ctx.rank(kind));
        let mut total = ctx.zero::<BigRational>(kind);
        let gx = ctx.ghost(&x).unwrap();
        for (i, e) in ids.iter().enumerate() {
            let ex = ctx.multiply(e, &x).unwrap();
            let ghost = ctx.ghost(&ex).unwrap();
            for (j, v) in ghost.iter().enumerate() {
                prop_assert_eq!(v, &if i == j { gx[j].clone() } else { BigRational::zero() });
            }
            total = total.add(&ex).unwrap();
        }
        prop_assert_eq!(total, x);
    }

    #[test]
    fn comparison_maps_are_ring_maps(g in 0..GROUPS.len(), a in coeffs(), b in coeffs()) {
        let ctx = &contexts()[g];
        let (x, y) = (build(ctx, RingKind::Burnside, &a), build(ctx, RingKind::Burnside, &b));
        let xy = ctx.multiply(&x, &y).unwrap();
        for kind in [RingKind::Slice, RingKind::Section] {
            let ix = ctx.i_map(&x, kind).unwrap();
            let iy = ctx.i_map(&y, kind).unwrap();
            prop_assert_eq!(ctx.i_map(&xy, kind).unwrap(), ctx.multiply(&ix, &iy).unwrap());
        }
        // Γ sits inside Ξ as a subring
        let (u, v) = (build(ctx, RingKind::Section, &a), build(ctx, RingKind::Section, &b));
        let uv = ctx.multiply(&u, &v).unwrap();
        let slice_uv = ctx.multiply(&ctx.as_slice(&u).unwrap(), &ctx.as_slice(&v).unwrap()).unwrap();
        prop_assert_eq!(ctx.as_slice(&uv).unwrap(), slice_uv);
    }

    #[test]
    fn section_restriction_is_a_left_inverse(g in 0..GROUPS.len(), a in coeffs()) {
        let ctx = &contexts()[g];
        let u = build(ctx, RingKind::Section, &a);
        prop_assert_eq!(ctx.section_restriction(&ctx.as_slice(&u).unwrap()).unwrap(), u);
    }

    #[test]
    fn mod_p_congruences_hold(g in 0..GROUPS.len(), kind in prop::sample::select(vec![RingKind::Slice, RingKind::Section]), seed in any::<u64>()) {
        let ctx = &contexts()[g];
        let mut rng = verify::rng_for(seed, ctx, 3);
        prop_assert!(verify::mod_p_congruences(ctx, kind, &mut rng, 5).is_ok());
    }

    #[test]
    fn unit_bases_square_to_one(g in 0..GROUPS.len(), kind in prop::sample::select(KINDS.to_vec()), picks in prop::collection::vec(any::<bool>(), 1..20)) {
        let ctx = &contexts()[g];
        let units = ctx.unit_group(kind).unwrap();
        prop_assert_eq!(units.basis.len(), units.dimension);
        let mut u = ctx.one::<BigInt>(kind);
        for (b, &keep) in units.basis.iter().zip(picks.iter().cycle()) {
            if keep {
                u = ctx.multiply(&u, b).unwrap();
            }
        }
        prop_assert!(ctx.multiply(&u, &u).unwrap() == ctx.one(kind));
        prop_assert!(ctx.ghost(&u).unwrap().iter().all(|v| v.is_one() || (-v).is_one()));
    }

    #[test]
    fn biset_action_is_additive(g in 0..GROUPS.len(), pick in any::<prop::sample::Index>(), a in coeffs(), b in coeffs()) {
        let ctx = &contexts()[g];
        let cases = verify::elemental_bisets(ctx).unwrap();
        let case = &cases[pick.index(cases.len())];
        let x = build(&case.source, RingKind::Slice, &a);
        let y = build(&case.source, RingKind::Slice, &b);
        let f = |z: &RingElement| case.biset.apply(&case.source, z, &case.target).unwrap();
        prop_assert_eq!(f(&x.add(&y).unwrap()), f(&x).add(&f(&y)).unwrap());
    }

    #[test]
    fn tensor_induction_is_multiplicative(g in 0..GROUPS.len(), pick in any::<prop::sample::Index>(), seed in any::<u64>()) {
        let ctx = &contexts()[g];
        let cases: Vec<_> = verify::elemental_bisets(ctx).unwrap().into_iter().filter(|c| c.biset.is_left_inert()).collect();
        let case = &cases[pick.index(cases.len())];
        let mut rng = verify::rng_for(seed, ctx, 9);
        prop_assert!(verify::tensor_multiplicative(case, &mut rng, 3).is_ok());
    }
}
