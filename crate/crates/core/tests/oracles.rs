//! Brute-force oracles for the lattice, Möbius functions, marks and products.
//! Everything here works on raw multiplication tables and never goes through
//! the lattice's conjugation or double coset machinery.

use num_bigint::BigInt;
use num_rational::BigRational;
use sliceburn::bitset::BitSet;
use sliceburn::slices::SliceTable;
use sliceburn::verify::corpus_context;
use sliceburn::{Context, RingKind};
use std::collections::BTreeSet;

const SMALL: &[&str] = &[
    "family cyclic 1",
    "family cyclic 2",
    "family cyclic 4",
    "family cyclic 6",
    "family elementary_abelian 2 2",
    "family symmetric 3",
    "family dihedral 8",
    "family quaternion8",
    "family alternating 4",
    "family dihedral 12",
];

fn contexts(list: &[&str]) -> Vec<Context> {
    list.iter().map(|d| corpus_context(d).unwrap()).collect()
}

fn conj_contains(ctx: &Context, big: usize, small: usize, g: usize) -> bool {
    // small ⊆ g·big·g⁻¹  ⇔  g⁻¹·x·g ∈ big for every x in small
    let grp = ctx.group();
    let lat = ctx.lattice();
    let gi = grp.inv(g);
    lat.members(small).iter().all(|x| lat.members(big).contains(grp.mul(grp.mul(gi, x), g)))
}

#[test]
fn lattice_matches_subset_enumeration() {
    for ctx in contexts(SMALL) {
        let grp = ctx.group();
        let n = grp.order();
        let mut found = BTreeSet::new();
        for mask in 0u32..(1 << (n - 1)) {
            let set: Vec<usize> = std::iter::once(0).chain((1..n).filter(|i| mask >> (i - 1) & 1 == 1)).collect();
            let closed = set.iter().all(|&a| set.iter().all(|&b| set.contains(&grp.mul(a, b))));
            if closed {
                found.insert(set);
            }
        }
        let lat = ctx.lattice();
        let listed: BTreeSet<Vec<usize>> = (0..lat.len()).map(|i| lat.members(i).to_vec()).collect();
        assert_eq!(listed, found, "{}", grp.name());
        for a in 0..lat.len() {
            for b in 0..lat.len() {
                assert_eq!(lat.leq(a, b), lat.members(a).is_subset(lat.members(b)));
                if lat.leq(a, b) {
                    assert!(a <= b, "ids are not a linear extension");
                }
            }
        }
    }
}

/// Inverse of the zeta matrix of `order` on `items`, which must be listed in
/// a linear extension so that zeta is upper unitriangular.
fn invert_zeta<T>(items: &[T], order: impl Fn(&T, &T) -> bool) -> Vec<Vec<i64>> {
    let n = items.len();
    let zeta: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| order(&items[i], &items[j]) as i64).collect()).collect();
    let mut inv = vec![vec![0i64; n]; n];
    // solve zeta · inv = I column by column, bottom row first
    for col in 0..n {
        for row in (0..n).rev() {
            let rhs = (row == col) as i64;
            let acc: i64 = (row + 1..n).map(|k| zeta[row][k] * inv[k][col]).sum();
            assert_eq!(zeta[row][row], 1);
            inv[row][col] = rhs - acc;
        }
    }
    inv
}

#[test]
fn subgroup_mobius_inverts_zeta() {
    for ctx in contexts(&["family symmetric 4", "family dihedral 12", "family elementary_abelian 2 3", "family cyclic 12"]) {
        let lat = ctx.lattice();
        let ids: Vec<usize> = (0..lat.len()).collect();
        let mu = invert_zeta(&ids, |&a, &b| lat.leq(a, b));
        for a in 0..lat.len() {
            for b in 0..lat.len() {
                assert_eq!(ctx.slices().mu(a, b), mu[a][b], "{} μ({a},{b})", ctx.group().name());
                if lat.leq(a, b) {
                    assert_eq!(ctx.slices().mobius_subgroups(lat, a, b).unwrap(), mu[a][b]);
                } else {
                    assert!(ctx.slices().mobius_subgroups(lat, a, b).is_err());
                }
            }
        }
    }
}

fn sorted_pairs(ctx: &Context, keep: impl Fn(usize, usize) -> bool) -> Vec<(usize, usize)> {
    let lat = ctx.lattice();
    let mut v: Vec<(usize, usize)> = ctx.slices().slices().iter().copied().filter(|&(t, s)| keep(t, s)).collect();
    v.sort_by_key(|&(t, s)| (lat.order(t) * lat.order(s), t, s));
    v
}

#[test]
fn slice_and_section_mobius_invert_zeta() {
    for ctx in contexts(&["family symmetric 3", "family dihedral 8", "family quaternion8", "family alternating 4", "family cyclic 6"]) {
        let lat = ctx.lattice();
        let tab = ctx.slices();

        let pi = sorted_pairs(&ctx, |_, _| true);
        let mu = invert_zeta(&pi, |&a, &b| SliceTable::preceq(lat, a, b));
        for (i, &a) in pi.iter().enumerate() {
            for (j, &b) in pi.iter().enumerate() {
                if SliceTable::preceq(lat, a, b) {
                    assert_eq!(tab.mobius_pi(lat, a, b).unwrap(), mu[i][j], "{} μ_Π({a:?},{b:?})", ctx.group().name());
                } else {
                    assert_eq!(mu[i][j], 0);
                }
            }
        }

        let sigma = sorted_pairs(&ctx, |t, s| lat.is_normal_in(s, t));
        let mu = invert_zeta(&sigma, |&a, &b| SliceTable::preceq(lat, a, b));
        for (i, &a) in sigma.iter().enumerate() {
            for (j, &b) in sigma.iter().enumerate() {
                if SliceTable::preceq(lat, a, b) {
                    assert_eq!(tab.mobius_sigma(lat, a, b).unwrap(), mu[i][j], "{} μ_Σ({a:?},{b:?})", ctx.group().name());
                }
            }
        }
    }
}

#[test]
fn slice_marks_match_element_count() {
    for ctx in contexts(&["family symmetric 3", "family dihedral 8", "family quaternion8", "family alternating 4", "family symmetric 4"]) {
        let n = ctx.group().order();
        let lat = ctx.lattice();
        let m = ctx.mark_matrix(RingKind::Slice);
        for (i, &r) in m.classes.iter().enumerate() {
            let (t, s) = ctx.slices().rep(r);
            for (j, &c) in m.classes.iter().enumerate() {
                let (v, u) = ctx.slices().rep(c);
                let hits = (0..n).filter(|&g| conj_contains(&ctx, v, t, g) && conj_contains(&ctx, u, s, g)).count();
                assert_eq!(hits % lat.order(u), 0);
                assert_eq!(m.get(i, j), (hits / lat.order(u)) as i64, "{} φ[{r}][{c}]", ctx.group().name());
            }
        }
    }
}

#[test]
fn burnside_marks_count_fixed_cosets() {
    for ctx in contexts(&["family symmetric 4", "family dihedral 12", "family cyclic 12"]) {
        let grp = ctx.group();
        let lat = ctx.lattice();
        let m = ctx.mark_matrix(RingKind::Burnside);
        for i in 0..m.size() {
            let h = lat.class_rep(i);
            for j in 0..m.size() {
                let k = lat.class_rep(j);
                // distinct cosets gK fixed by every element of H
                let mut fixed = BTreeSet::new();
                for g in 0..grp.order() {
                    if conj_contains(&ctx, k, h, g) {
                        let coset: Vec<usize> = lat.members(k).iter().map(|x| grp.mul(g, x)).collect::<BTreeSet<_>>().into_iter().collect();
                        fixed.insert(coset);
                    }
                }
                assert_eq!(m.get(i, j), fixed.len() as i64, "{} |(G/K)^H|", grp.name());
            }
        }
    }
}

/// ⟨T,S⟩⟨Y,X⟩ summed over all g ∈ G with weight 1/|SgX| instead of over
/// double coset representatives.
fn product_by_summing_group(ctx: &Context, kind: RingKind, a: usize, b: usize) -> sliceburn::QRingElement {
    let grp = ctx.group();
    let lat = ctx.lattice();
    let n = grp.order();
    let ((t, s), (y, x)) = (ctx.slices().rep(a), ctx.slices().rep(b));
    let conj_set = |h: usize, g: usize| -> BitSet {
        BitSet::from_iter(n, lat.members(h).iter().map(|z| grp.mul(grp.mul(g, z), grp.inv(g))))
    };
    let mut out = ctx.zero::<BigRational>(kind);
    for g in 0..n {
        let gy = conj_set(y, g);
        let gx = conj_set(x, g);
        let top = lat.id_of(&lat.members(t).intersection(&gy)).unwrap();
        let bottom = lat.id_of(&lat.members(s).intersection(&gx)).unwrap();
        let weight = BigRational::new(BigInt::from(lat.order(bottom)), BigInt::from(lat.order(s) * lat.order(x)));
        let class = ctx.slices().class_of(top, bottom).unwrap();
        out = out.add(&ctx.element(kind, [(class, weight)]).unwrap()).unwrap();
    }
    out
}

#[test]
fn products_match_group_sum() {
    for ctx in contexts(&["family symmetric 3", "family dihedral 8", "family quaternion8", "family alternating 4", "family cyclic 6"]) {
        for kind in [RingKind::Slice, RingKind::Section] {
            let classes = ctx.basis_classes(kind);
            for &a in &classes {
                for &b in &classes {
                    let want = product_by_summing_group(&ctx, kind, a, b);
                    let x = ctx.basis_class(a, kind).unwrap();
                    let y = ctx.basis_class(b, kind).unwrap();
                    let got = ctx.multiply(&x, &y).unwrap().to_rational();
                    assert_eq!(got, want, "{} {} product of classes {a} and {b}", ctx.group().name(), kind.name());
                }
            }
        }
    }
}

#[test]
fn section_products_reduce_bottoms() {
    // in the section ring the bottom of each product term is already normal in its top
    let ctx = corpus_context("family symmetric 4").unwrap();
    let lat = ctx.lattice();
    let classes = ctx.basis_classes(RingKind::Section);
    for &a in &classes {
        for &b in &classes {
            let p = ctx.multiply(&ctx.basis_class(a, RingKind::Section).unwrap(), &ctx.basis_class(b, RingKind::Section).unwrap()).unwrap();
            for &c in p.coeffs().keys() {
                let (t, s) = ctx.slices().rep(c);
                assert!(lat.is_normal_in(s, t));
            }
        }
    }
}

#[test]
fn verify_oracles_pass_on_small_groups() {
    use sliceburn::verify;
    for ctx in contexts(SMALL) {
        verify::product_oracle(&ctx).unwrap();
        verify::subring_products(&ctx).unwrap();
        verify::marks_vs_hom_count(&ctx, &mut verify::rng_for(7, &ctx, 1), 40, 10).unwrap();
    }
}
