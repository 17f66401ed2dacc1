//! Named property checks shared by the `verify` command and the test suites.
//! Every check returns `Ok(detail)` on success and `Err(detail)` naming the
//! first counterexample otherwise.

use crate::biset::{Biset, Elemental};
use crate::error::Error;
use crate::group::{p_part, prime_divisors, Group};
use crate::gset::{
    check_universal_property, equivariant_maps, galois_closure, hom_count, is_galois, is_galois_normal_fibers,
    linearize, random_galois_morphism, random_gset, random_morphism, stabilizer_id, GSet, Morphism,
};
use crate::ring::{Context, RingElement, RingKind};
use crate::spectrum::{ComponentLabel, Localization};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

pub type Outcome = std::result::Result<String, String>;

fn fail(e: Error) -> String {
    e.to_string()
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    All,
    Ring,
    Galois,
    Biset,
    Spectrum,
    Units,
}

impl Suite {
    pub fn parse(s: &str) -> Option<Suite> {
        Some(match s {
            "all" => Suite::All,
            "ring" => Suite::Ring,
            "galois" => Suite::Galois,
            "biset" => Suite::Biset,
            "spectrum" => Suite::Spectrum,
            "units" => Suite::Units,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Ring => "ring",
            Suite::Galois => "galois",
            Suite::Biset => "biset",
            Suite::Spectrum => "spectrum",
            Suite::Units => "units",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub suite: Suite,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Sample sizes for the randomized checks.
#[derive(Clone, Copy, Debug)]
pub struct Options {
    pub seed: u64,
    pub morphisms: usize,
    pub ghost_vectors: usize,
    pub elements: usize,
    pub tensor_pairs: usize,
    pub galois_samples: usize,
    pub closure_targets: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            seed: 0,
            morphisms: 200,
            ghost_vectors: 200,
            elements: 50,
            tensor_pairs: 50,
            galois_samples: 50,
            closure_targets: 20,
        }
    }
}

/// The named corpus: display name and group description.
pub const CORPUS: &[(&str, &str)] = &[
    ("C1", "family cyclic 1"),
    ("C2", "family cyclic 2"),
    ("C3", "family cyclic 3"),
    ("C4", "family cyclic 4"),
    ("C5", "family cyclic 5"),
    ("C6", "family cyclic 6"),
    ("C7", "family cyclic 7"),
    ("C8", "family cyclic 8"),
    ("C9", "family cyclic 9"),
    ("C10", "family cyclic 10"),
    ("C11", "family cyclic 11"),
    ("C12", "family cyclic 12"),
    ("C2^2", "family elementary_abelian 2 2"),
    ("C2^3", "family elementary_abelian 2 3"),
    ("C2xC4", "a = family cyclic 2; b = family cyclic 4; product a b"),
    ("S3", "family symmetric 3"),
    ("D8", "family dihedral 8"),
    ("Q8", "family quaternion8"),
    ("D12", "family dihedral 12"),
    ("A4", "family alternating 4"),
    ("S4", "family symmetric 4"),
    ("A5", "family alternating 5"),
];

/// Extra odd-order groups used for the unit-group checks.
pub const ODD_EXTRAS: &[(&str, &str)] = &[("C3^2", "family elementary_abelian 3 2"), ("C15", "family cyclic 15")];

pub fn corpus_context(description: &str) -> crate::Result<Context> {
    Context::from_description(description, 100)
}

pub fn rng_for(seed: u64, group: &Context, salt: u64) -> ChaCha8Rng {
    let mut h: u64 = seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15);
    for b in group.group().name().bytes() {
        h = h.wrapping_mul(0x100_0000_01b3) ^ b as u64;
    }
    ChaCha8Rng::seed_from_u64(h ^ group.group().order() as u64)
}

/// Integral element with `terms` random basis terms and coefficients in −3..=3.
pub fn random_element<R: Rng>(ctx: &Context, kind: RingKind, rng: &mut R, terms: usize) -> RingElement {
    let classes = ctx.basis_classes(kind);
    let picks: Vec<(usize, BigInt)> =
        (0..terms).map(|_| (*classes.choose(rng).expect("rings are nonzero"), BigInt::from(rng.gen_range(-3i64..=3)))).collect();
    ctx.element(kind, picks).expect("basis classes")
}

/// Burnside-ring class of a G-set.
pub fn gset_class(ctx: &Context, x: &GSet) -> RingElement {
    let mut e = ctx.zero(RingKind::Burnside);
    for orb in x.orbits() {
        e = e.add(&ctx.burnside_basis(stabilizer_id(ctx, x, orb[0]))).expect("same ring");
    }
    e
}

// ---------------------------------------------------------------- ring

/// For C2 with a = ⟨C,1⟩ and b = ⟨1,1⟩: a² = 2a, b² = ab = ba = 2b.
pub fn c2_structure_constants(ctx: &Context) -> Outcome {
    ensure!(ctx.group().order() == 2, "group has order {}, not 2", ctx.group().order());
    let lat = ctx.lattice();
    let (one, c) = (lat.trivial(), lat.whole());
    let a = ctx.basis(c, one, RingKind::Slice).map_err(fail)?;
    let b = ctx.basis(one, one, RingKind::Slice).map_err(fail)?;
    let two = BigInt::from(2);
    let m = |x: &RingElement, y: &RingElement| ctx.multiply(x, y).map_err(fail);
    ensure!(m(&a, &a)? == a.scale(&two), "a² ≠ 2a");
    ensure!(m(&b, &b)? == b.scale(&two), "b² ≠ 2b");
    ensure!(m(&a, &b)? == b.scale(&two), "ab ≠ 2b");
    ensure!(m(&b, &a)? == b.scale(&two), "ba ≠ 2b");
    Ok("a² = 2a, b² = ab = ba = 2b".into())
}

/// multiply agrees with linearizing the product of the two projections, on
/// every pair of basis classes.
pub fn product_oracle(ctx: &Context) -> Outcome {
    let k = ctx.slices().num_classes();
    let projections: Vec<Morphism> = (0..k)
        .map(|c| {
            let (t, s) = ctx.slices().rep(c);
            Morphism::projection(ctx, t, s)
        })
        .collect::<crate::Result<_>>()
        .map_err(fail)?;
    for a in 0..k {
        for b in a..k {
            let x = ctx.basis_class(a, RingKind::Slice).map_err(fail)?;
            let y = ctx.basis_class(b, RingKind::Slice).map_err(fail)?;
            let fast = ctx.multiply(&x, &y).map_err(fail)?;
            let slow = linearize(ctx, &projections[a].product(&projections[b]));
            ensure!(fast == slow, "classes {a}·{b}: multiply {fast:?} but oracle {slow:?}");
        }
    }
    Ok(format!("{} basis pairs", k * (k + 1) / 2))
}

/// Products of section basis elements computed in Γ(G) agree with Ξ(G), and
/// i_G: B(G) → Ξ(G) is multiplicative on Burnside basis pairs.
pub fn subring_products(ctx: &Context) -> Outcome {
    let sections = ctx.basis_classes(RingKind::Section);
    for (i, &a) in sections.iter().enumerate() {
        for &b in &sections[i..] {
            let x = ctx.basis_class(a, RingKind::Section).map_err(fail)?;
            let y = ctx.basis_class(b, RingKind::Section).map_err(fail)?;
            let in_gamma = ctx.as_slice(&ctx.multiply(&x, &y).map_err(fail)?).map_err(fail)?;
            let in_xi = ctx
                .multiply(&ctx.as_slice(&x).map_err(fail)?, &ctx.as_slice(&y).map_err(fail)?)
                .map_err(fail)?;
            ensure!(in_gamma == in_xi, "section classes {a}·{b} differ between the rings");
        }
    }
    let m = ctx.lattice().classes().len();
    for a in 0..m {
        for b in a..m {
            let (x, y) = (ctx.basis_class(a, RingKind::Burnside).map_err(fail)?, ctx.basis_class(b, RingKind::Burnside).map_err(fail)?);
            let lhs = ctx.i_map(&ctx.multiply(&x, &y).map_err(fail)?, RingKind::Slice).map_err(fail)?;
            let rhs = ctx
                .multiply(&ctx.i_map(&x, RingKind::Slice).map_err(fail)?, &ctx.i_map(&y, RingKind::Slice).map_err(fail)?)
                .map_err(fail)?;
            ensure!(lhs == rhs, "i_G is not multiplicative on subgroup classes {a}, {b}");
        }
    }
    Ok(format!("{} section pairs, {} Burnside pairs", sections.len() * (sections.len() + 1) / 2, m * (m + 1) / 2))
}

/// Double-coset sweeps in random orders give the same products.
pub fn sweep_independence<R: Rng>(ctx: &Context, rng: &mut R, samples: usize) -> Outcome {
    let k = ctx.slices().num_classes();
    let mut sweep: Vec<usize> = (0..ctx.group().order()).collect();
    let natural = sweep.clone();
    for _ in 0..samples {
        let (a, b) = (rng.gen_range(0..k), rng.gen_range(0..k));
        sweep.shuffle(rng);
        let mut x = ctx.slice_product_with_sweep(a, b, &sweep);
        let mut y = ctx.slice_product_with_sweep(a, b, &natural);
        x.sort_unstable();
        y.sort_unstable();
        ensure!(x == y, "classes {a}·{b} depend on the sweep order");
    }
    Ok(format!("{samples} shuffled sweeps"))
}

/// The mark of every slice on the linearization of f equals the number of
/// commuting squares from the projection into f.
pub fn marks_vs_hom_count<R: Rng>(ctx: &Context, rng: &mut R, morphisms: usize, max_points: usize) -> Outcome {
    let mut pairs = 0usize;
    for _ in 0..morphisms {
        let f = random_morphism(ctx, rng, max_points);
        let x = linearize(ctx, &f);
        let ghost = ctx.ghost(&x).map_err(fail)?;
        for (k, &(t, s)) in ctx.slices().slices().iter().enumerate() {
            let h = hom_count(ctx, t, s, &f).map_err(fail)?;
            let m = &ghost[ctx.slices().class_of_slice(k)];
            ensure!(*m == BigInt::from(h), "slice ({t},{s}): mark {m} but {h} squares");
            pairs += 1;
        }
    }
    Ok(format!("{morphisms} morphisms, {pairs} slice/morphism pairs"))
}

/// Mark matrices are upper triangular with diagonal |N_G(T,S)/S| (|N_G(K)/K|
/// for the Burnside ring), and the ghost map is multiplicative.
pub fn mark_matrix_shape<R: Rng>(ctx: &Context, rng: &mut R, samples: usize) -> Outcome {
    for kind in [RingKind::Slice, RingKind::Section, RingKind::Burnside] {
        let m = ctx.mark_matrix(kind);
        ensure!(m.is_upper_triangular(), "{} mark matrix is not upper triangular", kind.name());
        for (i, &c) in m.classes.iter().enumerate() {
            let want = match kind {
                RingKind::Burnside => {
                    let lat = ctx.lattice();
                    let k = lat.class_rep(c);
                    lat.order(lat.normalizer(k)) / lat.order(k)
                }
                _ => ctx.weyl_order(c),
            };
            ensure!(m.get(i, i) == want as i64, "{} diagonal at class {c} is {} not {want}", kind.name(), m.get(i, i));
        }
        if kind == RingKind::Burnside {
            continue;
        }
        for _ in 0..samples {
            let x = random_element(ctx, kind, rng, 3);
            let y = random_element(ctx, kind, rng, 3);
            let xy = ctx.ghost(&ctx.multiply(&x, &y).map_err(fail)?).map_err(fail)?;
            let (gx, gy) = (ctx.ghost(&x).map_err(fail)?, ctx.ghost(&y).map_err(fail)?);
            ensure!(xy.iter().zip(gx.iter().zip(&gy)).all(|(p, (a, b))| *p == a * b), "ghost map is not multiplicative");
        }
    }
    Ok("triangular, diagonal |N/S|, ghost multiplicative".into())
}

/// Σ ξ = 1, ξ² = ξ, ξξ' = 0, and ghost vectors are indicators.
pub fn idempotent_suite(ctx: &Context, kind: RingKind) -> Outcome {
    let idems = ctx.primitive_idempotents(kind).map_err(fail)?;
    let mut sum = ctx.zero(kind);
    for e in &idems {
        sum = sum.add(e).map_err(fail)?;
    }
    ensure!(sum == ctx.one(kind), "idempotents do not sum to 1");
    for (i, e) in idems.iter().enumerate() {
        ensure!(ctx.multiply(e, e).map_err(fail)? == *e, "idempotent {i} is not idempotent");
        for (j, f) in idems.iter().enumerate().skip(i + 1) {
            ensure!(ctx.multiply(e, f).map_err(fail)?.is_zero(), "idempotents {i} and {j} are not orthogonal");
        }
        let ghost = match kind {
            RingKind::Burnside => {
                let lat = ctx.lattice();
                (0..lat.classes().len())
                    .map(|k| ctx.burnside_mark(lat.class_rep(k), e))
                    .collect::<crate::Result<Vec<_>>>()
                    .map_err(fail)?
            }
            _ => ctx.ghost(e).map_err(fail)?,
        };
        for (j, v) in ghost.iter().enumerate() {
            let want = if i == j { One::one() } else { Zero::zero() };
            ensure!(*v == want, "ghost of idempotent {i} is {v} at coordinate {j}");
        }
    }
    Ok(format!("{} primitive idempotents", idems.len()))
}

/// Random vector passing the congruences: classes are filled by decreasing
/// |S|, and the identity coset term fixes the residue of each sum.
pub fn random_passing_vector<R: Rng>(ctx: &Context, kind: RingKind, rng: &mut R) -> crate::Result<Vec<BigInt>> {
    let classes = ctx.basis_classes(kind);
    let mut pos = vec![usize::MAX; ctx.slices().num_classes()];
    for (i, &c) in classes.iter().enumerate() {
        pos[c] = i;
    }
    let orbits = ctx.normalizer_orbits()?;
    let lat = ctx.lattice();
    let mut order: Vec<usize> = classes.clone();
    order.sort_by_key(|&c| std::cmp::Reverse(lat.order(ctx.slices().rep(c).1)));
    let mut m = vec![BigInt::zero(); classes.len()];
    for c in order {
        let orb = &orbits[c];
        let targets = if kind == RingKind::Slice { &orb.slice_class } else { &orb.section_class };
        let w = BigInt::from(orb.len());
        let rest: BigInt = targets.iter().skip(1).map(|&d| &m[pos[d]]).sum();
        let k = BigInt::from(rng.gen_range(-4i64..=4));
        m[pos[c]] = k * &w - rest.mod_floor(&w);
    }
    Ok(m)
}

/// Random elements pass the congruences; random passing vectors pull back
/// integrally; for nonabelian groups a vector failing the test at one class
/// is exhibited and has no integral preimage.
pub fn ghost_round_trip<R: Rng>(ctx: &Context, kind: RingKind, rng: &mut R, samples: usize) -> Outcome {
    for i in 0..samples {
        let x = random_element(ctx, kind, rng, 4);
        let g = ctx.ghost(&x).map_err(fail)?;
        if let Some(c) = ctx.ghost_image_violation(kind, &g).map_err(fail)? {
            return Err(format!("element {i} fails the congruence at class {c}"));
        }
        let back = ctx.pullback_integral(kind, &g).map_err(fail)?;
        ensure!(back.as_ref() == Some(&x), "element {i} does not round-trip");
    }
    for i in 0..samples {
        let m = random_passing_vector(ctx, kind, rng).map_err(fail)?;
        ensure!(ctx.ghost_image_violation(kind, &m).map_err(fail)?.is_none(), "generated vector {i} fails");
        let Some(x) = ctx.pullback_integral(kind, &m).map_err(fail)? else {
            return Err(format!("passing vector {i} has no integral preimage"));
        };
        ensure!(ctx.ghost(&x).map_err(fail)? == m, "pullback of vector {i} has the wrong ghost");
    }
    let mut detail = format!("{samples} elements and {samples} passing vectors");
    if !ctx.group().is_abelian() {
        let (class, m) = failing_vector(ctx, kind, rng).map_err(fail)?;
        ensure!(ctx.pullback_integral(kind, &m).map_err(fail)?.is_none(), "failing vector pulls back integrally");
        let (t, s) = ctx.slices().rep(class);
        detail.push_str(&format!("; failing vector at slice ({t},{s})"));
    }
    Ok(detail)
}

/// A passing vector perturbed by 1 at the first class with nontrivial
/// normalizer quotient, whose congruence then fails. Returns that class.
pub fn failing_vector<R: Rng>(ctx: &Context, kind: RingKind, rng: &mut R) -> crate::Result<(usize, Vec<BigInt>)> {
    let classes = ctx.basis_classes(kind);
    let mut m = random_passing_vector(ctx, kind, rng)?;
    let i = classes
        .iter()
        .position(|&c| ctx.weyl_order(c) > 1)
        .ok_or_else(|| Error::Invariant("every class has trivial normalizer quotient".into()))?;
    m[i] += 1;
    let bad = ctx.ghost_image_violations(kind, &m)?;
    if !bad.contains(&classes[i]) {
        return Err(Error::Invariant("perturbed vector still passes".into()));
    }
    Ok((classes[i], m))
}

/// φ_{T,S}(x) ≡ φ_{PT,PS}(x) mod p for every slice, every p dividing |G| and
/// every p-subgroup P of N_G(T,S); for the section ring the second slice is
/// (PT, (PS)^{⊴PT}).
pub fn mod_p_congruences<R: Rng>(ctx: &Context, kind: RingKind, rng: &mut R, samples: usize) -> Outcome {
    let lat = ctx.lattice();
    let classes = ctx.basis_classes(kind);
    let mut pos = vec![usize::MAX; ctx.slices().num_classes()];
    for (i, &c) in classes.iter().enumerate() {
        pos[c] = i;
    }
    let mut pairs: BTreeSet<(usize, usize, usize)> = BTreeSet::new();
    let mut instances = 0usize;
    for &(t, s) in ctx.slices().slices() {
        if kind == RingKind::Section && !lat.is_normal_in(s, t) {
            continue;
        }
        let c = ctx.slices().class_of(t, s).map_err(fail)?;
        let n = lat.normalizer_pair(t, s).map_err(fail)?;
        for p in prime_divisors(ctx.group().order()) {
            for q in lat.p_subgroups(n, p) {
                let (v, u) = ctx.plus_with(t, s, q, kind).map_err(fail)?;
                let d = ctx.slices().class_of(v, u).map_err(fail)?;
                pairs.insert((p, pos[c], pos[d]));
                instances += 1;
            }
        }
    }
    for i in 0..samples {
        let x = random_element(ctx, kind, rng, 5);
        let g = ctx.ghost(&x).map_err(fail)?;
        for &(p, a, b) in &pairs {
            let diff: BigInt = &g[a] - &g[b];
            ensure!(diff.is_multiple_of(&BigInt::from(p)), "element {i}: marks at {a} and {b} differ mod {p}");
        }
    }
    Ok(format!("{instances} (slice, p, P) triples on {samples} elements"))
}

// ---------------------------------------------------------------- galois

/// Random equivariant map into `target`, from a random G-set or, failing
/// that, from `target` itself.
fn random_map_into<R: Rng>(ctx: &Context, rng: &mut R, target: &GSet) -> Morphism {
    let z = random_gset(ctx, rng, 2, 8);
    let maps = equivariant_maps(&z, target);
    match maps.choose(rng) {
        Some(m) => Morphism::new(z, target.clone(), m.clone()).expect("equivariant"),
        None => Morphism::identity(target),
    }
}

/// Points of a random union of orbits (possibly empty or everything).
fn random_orbit_union<R: Rng>(rng: &mut R, x: &GSet) -> Vec<usize> {
    let mut pts: Vec<usize> = x.orbits().into_iter().filter(|_| rng.gen_bool(0.5)).flatten().collect();
    pts.sort_unstable();
    pts
}

fn any_or_galois<R: Rng>(ctx: &Context, rng: &mut R, max_points: usize) -> Morphism {
    if rng.gen_bool(0.5) {
        random_galois_morphism(ctx, rng, max_points)
    } else {
        random_morphism(ctx, rng, max_points)
    }
}

/// The six closure lemmas for Galois morphisms: composition with an
/// injection, pullback, restriction to a subdomain, decomposition of the
/// codomain, products and coproducts.
pub fn galois_closure_lemmas<R: Rng>(ctx: &Context, rng: &mut R, samples: usize) -> Outcome {
    let g = ctx.group();
    let mut galois_seen = 0;
    for i in 0..samples {
        let f = any_or_galois(ctx, rng, 10);
        let fg = is_galois(&f);
        galois_seen += fg as usize;

        let z = random_gset(ctx, rng, 2, 6);
        let cod = f.cod.coproduct(&z);
        let j = Morphism::new(f.cod.clone(), cod, (0..f.cod.size()).collect()).map_err(fail)?;
        ensure!(is_galois(&f.then(&j).map_err(fail)?) == fg, "sample {i}: injection changed the Galois property");

        let d = random_map_into(ctx, rng, &f.cod);
        let pb = f.pullback_along(&d).map_err(fail)?;
        ensure!(!fg || is_galois(&pb), "sample {i}: pullback of a Galois morphism is not Galois");

        let sub = random_orbit_union(rng, &f.dom);
        let rf = f.restrict_domain(&sub).map_err(fail)?;
        ensure!(!fg || is_galois(&rf), "sample {i}: restriction to a subdomain is not Galois");
        ensure!(!fg || is_galois(&rf.restrict_to_image()), "sample {i}: corestriction to the image is not Galois");

        let y1 = random_orbit_union(rng, &f.cod);
        let y2: Vec<usize> = (0..f.cod.size()).filter(|y| y1.binary_search(y).is_err()).collect();
        let parts = is_galois(&f.restrict_codomain(&y1).map_err(fail)?) && is_galois(&f.restrict_codomain(&y2).map_err(fail)?);
        ensure!(parts == fg, "sample {i}: codomain decomposition disagrees with the whole");

        let f2 = any_or_galois(ctx, rng, 6);
        let prod = f.product(&f2);
        ensure!(!(fg && is_galois(&f2)) || is_galois(&prod), "sample {i}: product of Galois morphisms is not Galois");
        let co = f.coproduct(&f2);
        ensure!(is_galois(&co) == (fg && is_galois(&f2)), "sample {i}: coproduct disagrees with its summands");

        ensure!(is_galois_normal_fibers(g, &f) == fg, "sample {i}: the two Galois criteria disagree");
    }
    Ok(format!("{samples} samples ({galois_seen} Galois)"))
}

/// Every commuting square from f into a Galois morphism factors uniquely
/// through the Galois closure, by exhaustive enumeration. Targets are the
/// closure of f itself and random Galois morphisms.
pub fn galois_universal_property<R: Rng>(ctx: &Context, rng: &mut R, samples: usize, max_points: usize) -> Outcome {
    let g = ctx.group();
    let mut squares = 0;
    for i in 0..samples {
        // Corestricting to the image keeps the leg enumeration over the codomain small.
        let f = random_morphism(ctx, rng, max_points).restrict_to_image();
        ensure!(f.dom.size() <= max_points, "generator exceeded {max_points} points");
        let (closure, _) = galois_closure(g, &f);
        ensure!(is_galois(&closure), "sample {i}: closure is not Galois");
        for a in [closure, random_galois_morphism(ctx, rng, 4)] {
            squares += check_universal_property(g, &f, &a).map_err(|e| format!("sample {i}: {e}"))?;
        }
    }
    Ok(format!("{samples} morphisms, {squares} squares each factoring once"))
}

/// The closure of G/S → G/T is G/S^{⊴T} → G/T, for every slice class.
pub fn projection_closure(ctx: &Context) -> Outcome {
    let lat = ctx.lattice();
    for c in 0..ctx.slices().num_classes() {
        let (t, s) = ctx.slices().rep(c);
        let (closure, _) = galois_closure(ctx.group(), &Morphism::projection(ctx, t, s).map_err(fail)?);
        let n = lat.normal_closure(s, t).map_err(fail)?;
        let want = ctx.basis(t, n, RingKind::Slice).map_err(fail)?;
        ensure!(linearize(ctx, &closure) == want, "closure of ({t},{s}) is not ({t},{n})");
        ensure!(closure.dom.size() == ctx.group().order() / lat.order(n), "closure of ({t},{s}) has the wrong size");
    }
    Ok(format!("{} slice classes", ctx.slices().num_classes()))
}

/// On morphisms with transitive domain, linearizing the closure equals
/// applying S ↦ S^{⊴T} to the linearization.
pub fn closure_linearization<R: Rng>(ctx: &Context, rng: &mut R, samples: usize) -> Outcome {
    for i in 0..samples {
        let f = random_morphism(ctx, rng, 10);
        let orbits = f.dom.orbits();
        let Some(orb) = orbits.choose(rng) else { continue };
        let mut pts = orb.clone();
        pts.sort_unstable();
        let f = f.restrict_domain(&pts).map_err(fail)?;
        let (closure, _) = galois_closure(ctx.group(), &f);
        let lhs = linearize(ctx, &closure);
        let rhs = ctx.as_slice(&ctx.section_restriction(&linearize(ctx, &f)).map_err(fail)?).map_err(fail)?;
        ensure!(lhs == rhs, "sample {i}: closure and section restriction disagree");
    }
    Ok(format!("{samples} transitive morphisms"))
}

// ---------------------------------------------------------------- biset

/// A biset with contexts for its right (source) and left (target) groups.
pub struct BisetCase {
    pub name: String,
    pub biset: Biset,
    pub source: Context,
    pub target: Context,
}

impl BisetCase {
    pub fn new(name: String, biset: Biset) -> crate::Result<BisetCase> {
        let source = Context::new(biset.right_group().clone(), 100)?;
        let target = Context::new(biset.left_group().clone(), 100)?;
        Ok(BisetCase { name, biset, source, target })
    }
}

/// Identity, restriction and induction along every subgroup class,
/// inflation and deflation along every nontrivial normal subgroup, and one
/// conjugation automorphism when G is nonabelian.
pub fn elemental_bisets(ctx: &Context) -> crate::Result<Vec<BisetCase>> {
    let g = ctx.group();
    let lat = ctx.lattice();
    let mut out = vec![BisetCase::new("Id".into(), Biset::identity(g))?];
    for class in 0..lat.classes().len() {
        let k = lat.class_rep(class);
        let members = lat.members(k).clone();
        out.push(BisetCase::new(format!("Res_{k}"), Biset::elemental(g, &Elemental::Restriction(members.clone()))?)?);
        out.push(BisetCase::new(format!("Ind_{k}"), Biset::elemental(g, &Elemental::Induction(members.clone()))?)?);
        if k != lat.trivial() && lat.is_normal_in(k, lat.whole()) {
            out.push(BisetCase::new(format!("Inf_{k}"), Biset::elemental(g, &Elemental::Inflation(members.clone()))?)?);
            out.push(BisetCase::new(format!("Def_{k}"), Biset::elemental(g, &Elemental::Deflation(members))?)?);
        }
    }
    if let Some(x) = (0..g.order()).find(|&x| (0..g.order()).any(|y| g.mul(x, y) != g.mul(y, x))) {
        let iso: Vec<usize> = (0..g.order()).map(|y| g.conj(x, y)).collect();
        out.push(BisetCase::new(format!("Conj_{x}"), Biset::isomorphism(g, g, &iso)?)?);
    }
    Ok(out)
}

/// Whether the elemental kind is expected to be left inert.
fn expect_left_inert(case: &BisetCase) -> bool {
    !case.name.starts_with("Ind_") || case.biset.right_group().order() == case.biset.left_group().order()
}

/// Ξ(U), Γ(U) and B(U) agree with U ×_G − on projections and coset spaces,
/// and U ×_G − keeps Galois morphisms Galois.
pub fn biset_apply_vs_times(case: &BisetCase) -> Outcome {
    let (u, cg, ch) = (&case.biset, &case.source, &case.target);
    let glat = cg.lattice();
    for c in 0..cg.slices().num_classes() {
        let (t, s) = cg.slices().rep(c);
        let f = u.times_morphism(&Morphism::projection(cg, t, s).map_err(fail)?).map_err(fail)?;
        let lhs = u.apply(cg, &cg.basis_class(c, RingKind::Slice).map_err(fail)?, ch).map_err(fail)?;
        ensure!(lhs == linearize(ch, &f), "{}: slice class {c} disagrees", case.name);
        if cg.slices().is_section_class(c) {
            ensure!(is_galois(&f), "{}: image of section class {c} is not Galois", case.name);
            let sec = u.apply(cg, &cg.basis_class(c, RingKind::Section).map_err(fail)?, ch).map_err(fail)?;
            ensure!(ch.as_slice(&sec).map_err(fail)? == lhs, "{}: section class {c} disagrees", case.name);
        }
    }
    for class in 0..glat.classes().len() {
        let k = glat.class_rep(class);
        let (x, _) = GSet::cosets(cg.group(), glat.members(k));
        let (ux, _) = u.times_gset(&x).map_err(fail)?;
        let lhs = u.apply(cg, &cg.burnside_basis(k), ch).map_err(fail)?;
        ensure!(lhs == gset_class(ch, &ux), "{}: Burnside class {class} disagrees", case.name);
    }
    ensure!(u.is_left_inert() == expect_left_inert(case), "{}: left-inertness misclassified", case.name);
    Ok(format!("{}: {} slice classes", case.name, cg.slices().num_classes()))
}

/// Ξ(V ×_H U) = Ξ(V) ∘ Ξ(U) for V = Ind_K and U = Res_K, on every slice class.
pub fn biset_functoriality(ctx: &Context) -> Outcome {
    let lat = ctx.lattice();
    let g = ctx.group();
    let mut checked = 0;
    for class in 0..lat.classes().len() {
        let members = lat.members(lat.class_rep(class)).clone();
        let res = BisetCase::new("Res".into(), Biset::elemental(g, &Elemental::Restriction(members.clone())).map_err(fail)?).map_err(fail)?;
        let ind = Biset::elemental(g, &Elemental::Induction(members)).map_err(fail)?;
        let both = res.biset.compose_after(&ind).map_err(fail)?;
        for c in 0..ctx.slices().num_classes() {
            let x = ctx.basis_class(c, RingKind::Slice).map_err(fail)?;
            let mid = res.biset.apply(ctx, &x, &res.target).map_err(fail)?;
            let two_steps = ind.apply(&res.target, &mid, ctx).map_err(fail)?;
            ensure!(both.apply(ctx, &x, ctx).map_err(fail)? == two_steps, "class {c}: Ind∘Res is not Ind after Res");
            checked += 1;
        }
    }
    Ok(format!("{checked} composites"))
}

/// t_U(xy) = t_U(x) t_U(y) and t_U(1) = 1 on random pairs, in both rings.
pub fn tensor_multiplicative<R: Rng>(case: &BisetCase, rng: &mut R, pairs: usize) -> Outcome {
    let (u, cg, ch) = (&case.biset, &case.source, &case.target);
    for kind in [RingKind::Slice, RingKind::Section] {
        let t = |x: &RingElement| u.tensor_induction(cg, x, ch).map_err(fail);
        ensure!(t(&cg.one(kind))? == ch.one(kind), "{}: t_U(1) ≠ 1 in the {} ring", case.name, kind.name());
        for i in 0..pairs {
            let x = random_element(cg, kind, rng, 3);
            let y = random_element(cg, kind, rng, 3);
            let lhs = t(&cg.multiply(&x, &y).map_err(fail)?)?;
            let rhs = ch.multiply(&t(&x)?, &t(&y)?).map_err(fail)?;
            ensure!(lhs == rhs, "{}: pair {i} is not multiplicative in the {} ring", case.name, kind.name());
        }
    }
    Ok(format!("{}: {pairs} pairs per ring", case.name))
}

/// Tensor induction along the identity biset is the identity.
pub fn tensor_identity<R: Rng>(ctx: &Context, rng: &mut R, samples: usize) -> Outcome {
    let u = Biset::identity(ctx.group());
    for kind in [RingKind::Slice, RingKind::Section] {
        for c in ctx.basis_classes(kind) {
            let x = ctx.basis_class(c, kind).map_err(fail)?;
            ensure!(u.tensor_induction(ctx, &x, ctx).map_err(fail)? == x, "class {c} moved");
        }
        for _ in 0..samples {
            let x = random_element(ctx, kind, rng, 4);
            ensure!(u.tensor_induction(ctx, &x, ctx).map_err(fail)? == x, "random element moved");
        }
    }
    Ok("identity on both rings".into())
}

/// T_U keeps Galois morphisms Galois; the fast and naive constructions agree
/// on linearizations; t over a disjoint union is the product; t along
/// Inf ∘ Def is the composite.
pub fn tensor_structure<R: Rng>(ctx: &Context, rng: &mut R, samples: usize) -> Outcome {
    let g = ctx.group();
    let lat = ctx.lattice();
    let mut checked = 0;
    for case in elemental_bisets(ctx).map_err(fail)? {
        if !case.biset.is_left_inert() {
            continue;
        }
        let (u, cg, ch) = (&case.biset, &case.source, &case.target);
        for i in 0..samples {
            let f = random_galois_morphism(cg, rng, 6);
            ensure!(is_galois(&f), "generator produced a non-Galois morphism");
            let tf = u.tensor_induce_morphism(&f).map_err(fail)?;
            ensure!(is_galois(&tf), "{}: sample {i} image is not Galois", case.name);
            if cg.group().order() <= 12 {
                let slow = u.tensor_induce_morphism_naive(&f, 1 << 16).map_err(fail)?;
                ensure!(linearize(ch, &slow) == linearize(ch, &tf), "{}: sample {i} fast and naive disagree", case.name);
            }
            checked += 1;
        }
        if u.right_group() == u.left_group() {
            let uu = u.disjoint_union(u).map_err(fail)?;
            for _ in 0..samples.min(10) {
                let x = random_element(cg, RingKind::Slice, rng, 3);
                let once = u.tensor_induction(cg, &x, ch).map_err(fail)?;
                let twice = uu.tensor_induction(cg, &x, ch).map_err(fail)?;
                ensure!(twice == ch.multiply(&once, &once).map_err(fail)?, "{}: t over U ⊔ U is not t_U²", case.name);
            }
        }
    }
    for class in 0..lat.classes().len() {
        let k = lat.class_rep(class);
        if k == lat.trivial() || !lat.is_normal_in(k, lat.whole()) {
            continue;
        }
        let def = BisetCase::new("Def".into(), Biset::elemental(g, &Elemental::Deflation(lat.members(k).clone())).map_err(fail)?).map_err(fail)?;
        let inf = Biset::elemental(g, &Elemental::Inflation(lat.members(k).clone())).map_err(fail)?;
        let both = def.biset.compose_after(&inf).map_err(fail)?;
        for _ in 0..samples.min(10) {
            let x = random_element(ctx, RingKind::Slice, rng, 3);
            let mid = def.biset.tensor_induction(ctx, &x, &def.target).map_err(fail)?;
            let two = inf.tensor_induction(&def.target, &mid, ctx).map_err(fail)?;
            ensure!(both.tensor_induction(ctx, &x, ctx).map_err(fail)? == two, "t along Inf∘Def is not the composite");
        }
    }
    Ok(format!("{checked} Galois images"))
}

/// U = C2 as a (C2, 1)-biset is not left inert. Over the trivial group the
/// fold 2 → 1 and the identity of 2 points have the same class in Ξ(1), yet
/// their T_U images linearize differently and the fold's image is not Galois.
pub fn tensor_counterexample() -> Outcome {
    let one = Context::new(Group::trivial(), 100).map_err(fail)?;
    let c2 = Context::new(crate::group::cyclic(2, 100).map_err(fail)?, 100).map_err(fail)?;
    let h = c2.group();
    let left = (0..2).flat_map(|a| (0..2).map(move |x| h.mul(a, x) as u32)).collect();
    let u = Biset::new(h.clone(), Group::trivial(), 2, left, vec![0, 1]).map_err(fail)?;
    ensure!(!u.is_left_inert(), "the biset should not be left inert");
    let two = GSet::new(one.group(), 2, vec![0, 1]).map_err(fail)?;
    let fold = Morphism::new(two.clone(), GSet::point(one.group()), vec![0, 0]).map_err(fail)?;
    let id = Morphism::identity(&two);
    ensure!(linearize(&one, &fold) == linearize(&one, &id), "fold and identity should have equal classes");
    let tf = u.tensor_induce_morphism_naive(&fold, 64).map_err(fail)?;
    let tid = u.tensor_induce_morphism_naive(&id, 64).map_err(fail)?;
    let (a, b) = (linearize(&c2, &tf), linearize(&c2, &tid));
    ensure!(a != b, "the two images have equal classes");
    ensure!(is_galois(&fold) && !is_galois(&tf), "the fold's image should be a non-Galois image of a Galois map");
    ensure!(
        matches!(u.tensor_induction(&one, &linearize(&one, &fold), &c2), Err(Error::NotLeftInert)),
        "tensor induction on the ring should refuse the biset"
    );
    Ok(format!("equal classes, images {} and {} points, fold image not Galois", tf.dom.size(), tid.dom.size()))
}

// ---------------------------------------------------------------- spectrum

/// Over Z: one component in each ring exactly when G is solvable; the Γ
/// components are labelled by the perfect subgroup classes; component
/// idempotents are integral and sum to 1.
pub fn spectrum_components(ctx: &Context) -> Outcome {
    let lat = ctx.lattice();
    let solvable = lat.is_solvable();
    let perfect: BTreeSet<usize> = (0..lat.classes().len()).filter(|&k| lat.is_perfect(lat.class_rep(k))).collect();
    let mut counts = Vec::new();
    for kind in [RingKind::Slice, RingKind::Section] {
        let comps = ctx.components(kind, Localization::Integers).map_err(fail)?;
        let mut sum = ctx.zero(kind);
        for c in &comps {
            ensure!(c.idempotent.denominator_lcm().is_one(), "{} component idempotent is not integral", kind.name());
            sum = sum.add(&c.idempotent).map_err(fail)?;
        }
        ensure!(sum == ctx.one(kind), "{} component idempotents do not sum to 1", kind.name());
        ensure!((comps.len() == 1) == solvable, "{} ring has {} components but solvable = {solvable}", kind.name(), comps.len());
        if kind == RingKind::Section {
            let labels: BTreeSet<usize> = comps
                .iter()
                .map(|c| match c.label {
                    ComponentLabel::Perfect(k) => Ok(k),
                    ref other => Err(format!("section component labelled {other:?}")),
                })
                .collect::<std::result::Result<_, _>>()?;
            ensure!(labels == perfect, "section components are not labelled by the perfect subgroup classes");
        }
        counts.push(comps.len());
    }
    let orders: Vec<usize> = perfect.iter().map(|&k| lat.order(lat.class_rep(k))).collect();
    Ok(format!("{} slice and {} section components; perfect subgroup orders {orders:?}", counts[0], counts[1]))
}

/// Over Z_(p): one component per closed point class, with p-local idempotents.
pub fn local_components(ctx: &Context) -> Outcome {
    let mut total = 0;
    for p in prime_divisors(ctx.group().order()) {
        for kind in [RingKind::Slice, RingKind::Section] {
            let comps = ctx.components(kind, Localization::AtPrime(p)).map_err(fail)?;
            let closed = ctx.basis_classes(kind).into_iter().filter(|&c| ctx.in_pi_p(c, p)).count();
            ensure!(comps.len() == closed, "{} ring at {p}: {} components for {closed} closed classes", kind.name(), comps.len());
            let mut sum = ctx.zero(kind);
            for c in &comps {
                ensure!(!c.idempotent.denominator_lcm().is_multiple_of(&BigInt::from(p)), "idempotent not {p}-local");
                sum = sum.add(&c.idempotent).map_err(fail)?;
            }
            ensure!(sum == ctx.one(kind), "{} ring at {p}: idempotents do not sum to 1", kind.name());
            total += comps.len();
        }
    }
    Ok(format!("{total} local components"))
}

/// hat_p lands in Π_p and is idempotent, every Sylow p-subgroup of the
/// normalizer gives the same step, and the reached slice has the expected
/// subnormal shape.
pub fn hat_p_properties(ctx: &Context) -> Outcome {
    let lat = ctx.lattice();
    for p in prime_divisors(ctx.group().order()) {
        for kind in [RingKind::Slice, RingKind::Section] {
            for c in ctx.basis_classes(kind) {
                let h = ctx.hat_p(c, p, kind).map_err(fail)?;
                ensure!(ctx.in_pi_p(h, p), "hat_{p} of class {c} is outside Π_{p}");
                ensure!(ctx.hat_p(h, p, kind).map_err(fail)? == h, "hat_{p} is not idempotent at class {c}");
                let (t, s) = ctx.slices().rep(c);
                let n = lat.normalizer_pair(t, s).map_err(fail)?;
                let full = p_part(lat.order(n), p);
                let mut seen = BTreeSet::new();
                for q in lat.p_subgroups(n, p).into_iter().filter(|&q| lat.order(q) == full) {
                    let (v, u) = ctx.plus_with(t, s, q, kind).map_err(fail)?;
                    seen.insert(ctx.slices().class_of(v, u).map_err(fail)?);
                }
                ensure!(seen.len() == 1, "class {c}: Sylow {p}-subgroups give {} different classes", seen.len());
            }
        }
        if let Some((t, s)) = ctx.hat_p_structure_violation(p).map_err(fail)? {
            return Err(format!("hat_{p} of ({t},{s}) has the wrong shape"));
        }
    }
    Ok("hat_p idempotent, Sylow-independent, subnormal shape".into())
}

/// I_{T,S,0} ⊆ I_{V,U,p} exactly when (V,U) = hat_p(T,S).
pub fn ideal_inclusions(ctx: &Context, kind: RingKind) -> Outcome {
    use crate::spectrum::PrimeIdealLabel;
    let classes = ctx.basis_classes(kind);
    for p in prime_divisors(ctx.group().order()) {
        for &c in &classes {
            let h = ctx.hat_p(c, p, kind).map_err(fail)?;
            for &d in classes.iter().filter(|&&d| ctx.in_pi_p(d, p)) {
                let inside = ctx
                    .ideal_contains(kind, PrimeIdealLabel { class: d, p }, PrimeIdealLabel { class: c, p: 0 })
                    .map_err(fail)?;
                ensure!(inside == (d == h), "class {c} at {p}: containment in class {d} is {inside}");
            }
        }
    }
    Ok(format!("{} classes", classes.len()))
}

/// The support test for a family of classes agrees with the denominators of
/// its idempotent, on random families and on unions of local components.
pub fn support_vs_denominators<R: Rng>(ctx: &Context, kind: RingKind, rng: &mut R, samples: usize) -> Outcome {
    let all_primes = prime_divisors(ctx.group().order());
    if all_primes.is_empty() {
        return Ok("trivial group".into());
    }
    let classes = ctx.basis_classes(kind);
    let mut local = 0;
    for i in 0..samples {
        let mut primes: Vec<usize> = all_primes.iter().copied().filter(|_| rng.gen_bool(0.5)).collect();
        if primes.is_empty() {
            primes.push(*all_primes.choose(rng).expect("nonempty"));
        }
        let family: Vec<usize> = if i % 2 == 0 {
            let p = *primes.choose(rng).expect("nonempty");
            let comps = ctx.components(kind, Localization::AtPrime(p)).map_err(fail)?;
            let mut f: Vec<usize> = comps.iter().filter(|_| rng.gen_bool(0.5)).flat_map(|c| c.classes.iter().copied()).collect();
            f.sort_unstable();
            f
        } else {
            classes.iter().copied().filter(|_| rng.gen_bool(0.3)).collect()
        };
        let support = ctx.idempotent_support_check(kind, &family, &primes).map_err(fail)?;
        let denominators = ctx.family_idempotent_is_local(kind, &family, &primes).map_err(fail)?;
        ensure!(support == denominators, "family {family:?} at {primes:?}: support {support}, denominators {denominators}");
        local += support as usize;
    }
    Ok(format!("{samples} families, {local} local"))
}

// ---------------------------------------------------------------- units

fn index_two_count(ctx: &Context) -> usize {
    let lat = ctx.lattice();
    (0..lat.len()).filter(|&s| 2 * lat.order(s) == ctx.group().order()).count()
}

/// Solved unit groups contain −1 and consist of square roots of 1; for
/// abelian G, dim Ξ^× = 2r + 1 and the ordinary units have dimension r + 1;
/// for odd |G| every unit group is ±1; small ranks are cross-checked by
/// exhaustive search over sign vectors.
pub fn unit_dimensions(ctx: &Context) -> Outcome {
    let mut dims = Vec::new();
    let mut units = Vec::new();
    for kind in [RingKind::Slice, RingKind::Section, RingKind::Burnside] {
        let u = ctx.unit_group(kind).map_err(fail)?;
        for (i, b) in u.basis.iter().enumerate() {
            ensure!(ctx.verify_unit_with(b, &u).map_err(fail)?, "{} basis unit {i} is not a unit", kind.name());
        }
        if ctx.rank(kind) <= 14 {
            let count = ctx.unit_count_brute_force(kind, 14).map_err(fail)?;
            ensure!(count == 1 << u.dimension, "{} ring: {count} sign vectors pass but dimension is {}", kind.name(), u.dimension);
        }
        dims.push(u.dimension);
        units.push(u);
    }
    for b in &units[2].basis {
        let image = ctx.i_map(b, RingKind::Slice).map_err(fail)?;
        ensure!(ctx.verify_unit_with(&image, &units[0]).map_err(fail)?, "i_G of a Burnside unit is not a unit");
    }
    let mut detail = format!("dim Ξ^× = {}, Γ^× = {}, B^× = {}", dims[0], dims[1], dims[2]);
    if ctx.group().is_abelian() {
        let r = index_two_count(ctx);
        ensure!(dims[0] == 2 * r + 1, "abelian group with r = {r} has dim Ξ^× = {}", dims[0]);
        let ab = ctx.abelian_unit_basis().map_err(fail)?;
        ensure!(ab.dimension == dims[0] && units[0].spans(&ab) && ab.spans(&units[0]), "the index-2 units do not span Ξ^×");
        let ord = ctx.ordinary_unit_subgroup().map_err(fail)?;
        ensure!(ord.dimension == r + 1 && units[0].spans(&ord), "ordinary unit subgroup has dimension {}", ord.dimension);
        detail.push_str(&format!(", r = {r}, ordinary {}", ord.dimension));
    }
    if ctx.group().order() % 2 == 1 {
        ensure!(dims.iter().all(|&d| d == 1), "odd-order group with unit dimensions {dims:?}");
    }
    Ok(detail)
}

/// The three unit tests agree on random products of basis units and on
/// random elements.
pub fn verify_unit_agreement<R: Rng>(ctx: &Context, kind: RingKind, rng: &mut R, samples: usize) -> Outcome {
    let units = ctx.unit_group(kind).map_err(fail)?;
    let mut found = 0;
    for i in 0..samples {
        if i % 2 == 0 {
            let mut u = ctx.one(kind);
            for b in units.basis.iter().filter(|_| rng.gen_bool(0.5)) {
                u = ctx.multiply(&u, b).map_err(fail)?;
            }
            ensure!(ctx.verify_unit_with(&u, &units).map_err(fail)?, "a product of units is not recognised");
            found += 1;
        } else {
            let x = random_element(ctx, kind, rng, 3);
            found += ctx.verify_unit_with(&x, &units).map_err(fail)? as usize;
        }
    }
    Ok(format!("{samples} samples, {found} units"))
}

/// Tensor induction along every left-inert elemental biset sends units to units.
pub fn units_under_tensor_induction(ctx: &Context) -> Outcome {
    let mut mapped = 0;
    for case in elemental_bisets(ctx).map_err(fail)? {
        if !case.biset.is_left_inert() {
            continue;
        }
        for kind in [RingKind::Slice, RingKind::Section] {
            let target_units = case.target.unit_group(kind).map_err(fail)?;
            for u in &case.source.unit_group(kind).map_err(fail)?.basis {
                let image = case.biset.tensor_induction(&case.source, u, &case.target).map_err(fail)?;
                ensure!(
                    case.target.verify_unit_with(&image, &target_units).map_err(fail)?,
                    "{}: image of a {} unit is not a unit",
                    case.name,
                    kind.name()
                );
                mapped += 1;
            }
        }
    }
    Ok(format!("{mapped} unit images"))
}

/// For abelian G and each X of index 2, tensor induction along Def_{G/X}
/// (fixed points under X) kills 1 − ⟨S,S⟩ and 1 − ⟨G,S⟩ for S ≠ X and sends
/// the pair for X to 1 − ⟨1,1⟩ and 1 − ⟨C,1⟩ in Ξ(G/X).
pub fn deflation_of_units(ctx: &Context) -> Outcome {
    if !ctx.group().is_abelian() {
        return Err(Error::NotAbelian.to_string());
    }
    let lat = ctx.lattice();
    let g = ctx.group();
    let whole = lat.whole();
    let index_two: Vec<usize> = (0..lat.len()).filter(|&s| 2 * lat.order(s) == g.order()).collect();
    let one: RingElement = ctx.one(RingKind::Slice);
    for &x in &index_two {
        let case = BisetCase::new(format!("Def_{x}"), Biset::elemental(g, &Elemental::Deflation(lat.members(x).clone())).map_err(fail)?)
            .map_err(fail)?;
        let q = &case.target;
        let (qone, qt, qw) = (q.one::<BigInt>(RingKind::Slice), q.lattice().trivial(), q.lattice().whole());
        let t = |e: &RingElement| case.biset.tensor_induction(ctx, e, q).map_err(fail);
        ensure!(t(&one.neg())? == qone.neg(), "Def_{x}(−1) ≠ −1");
        for &s in &index_two {
            let u = t(&one.sub(&ctx.basis(s, s, RingKind::Slice).map_err(fail)?).map_err(fail)?)?;
            let v = t(&one.sub(&ctx.basis(whole, s, RingKind::Slice).map_err(fail)?).map_err(fail)?)?;
            if s == x {
                ensure!(u == qone.sub(&q.basis(qt, qt, RingKind::Slice).map_err(fail)?).map_err(fail)?, "Def_{x}(1 − ⟨X,X⟩)");
                ensure!(v == qone.sub(&q.basis(qw, qt, RingKind::Slice).map_err(fail)?).map_err(fail)?, "Def_{x}(1 − ⟨G,X⟩)");
            } else {
                ensure!(u == qone && v == qone, "Def_{x} does not kill the units of index-2 subgroup {s}");
            }
        }
    }
    Ok(format!("{} index-2 subgroups", index_two.len()))
}

// ---------------------------------------------------------------- runner

type CheckFn<'a> = Box<dyn FnOnce() -> Outcome + 'a>;

/// Runs the checks of `suite` (every suite for `Suite::All`) in a fixed order.
pub fn run(ctx: &Context, suite: Suite, opts: &Options) -> Vec<Check> {
    let n = ctx.group().order();
    let seed = opts.seed;
    let mut plan: Vec<(Suite, &str, CheckFn)> = Vec::new();
    let rng = |salt: u64| rng_for(seed, ctx, salt);
    if n == 2 {
        plan.push((Suite::Ring, "c2 structure constants", Box::new(|| c2_structure_constants(ctx))));
    }
    plan.push((Suite::Ring, "multiply vs product of projections", Box::new(|| product_oracle(ctx))));
    plan.push((Suite::Ring, "section and Burnside products", Box::new(|| subring_products(ctx))));
    plan.push((Suite::Ring, "sweep independence", Box::new(move || sweep_independence(ctx, &mut rng(1), 20))));
    plan.push((Suite::Ring, "mark matrix shape", Box::new(move || mark_matrix_shape(ctx, &mut rng(2), 10))));
    plan.push((Suite::Ring, "marks vs hom counts", Box::new(move || marks_vs_hom_count(ctx, &mut rng(3), opts.morphisms, 12))));
    for (k, kind) in [RingKind::Slice, RingKind::Section, RingKind::Burnside].into_iter().enumerate() {
        plan.push((Suite::Ring, ["idempotents (slice)", "idempotents (section)", "idempotents (burnside)"][k], Box::new(move || idempotent_suite(ctx, kind))));
    }
    for (k, kind) in [RingKind::Slice, RingKind::Section].into_iter().enumerate() {
        let salt = 10 + k as u64;
        plan.push((Suite::Ring, ["ghost round trip (slice)", "ghost round trip (section)"][k], Box::new(move || ghost_round_trip(ctx, kind, &mut rng(salt), opts.ghost_vectors))));
        plan.push((Suite::Ring, ["mod-p congruences (slice)", "mod-p congruences (section)"][k], Box::new(move || mod_p_congruences(ctx, kind, &mut rng(salt + 10), opts.elements))));
    }
    plan.push((Suite::Galois, "closure lemmas", Box::new(move || galois_closure_lemmas(ctx, &mut rng(30), opts.galois_samples))));
    plan.push((Suite::Galois, "universal property", Box::new(move || galois_universal_property(ctx, &mut rng(31), opts.closure_targets, 12))));
    plan.push((Suite::Galois, "projection closure", Box::new(|| projection_closure(ctx))));
    plan.push((Suite::Galois, "closure vs section restriction", Box::new(move || closure_linearization(ctx, &mut rng(32), opts.galois_samples))));
    plan.push((Suite::Biset, "elemental bisets vs U ×_G −", Box::new(|| {
        let cases = elemental_bisets(ctx).map_err(fail)?;
        for case in &cases {
            biset_apply_vs_times(case)?;
        }
        Ok(format!("{} elemental bisets", cases.len()))
    })));
    plan.push((Suite::Biset, "functoriality", Box::new(|| biset_functoriality(ctx))));
    plan.push((Suite::Biset, "tensor induction multiplicative", Box::new(move || {
        let mut r = rng(40);
        let mut count = 0;
        for case in elemental_bisets(ctx).map_err(fail)?.iter().filter(|c| c.biset.is_left_inert()) {
            tensor_multiplicative(case, &mut r, opts.tensor_pairs)?;
            count += 1;
        }
        Ok(format!("{count} left-inert bisets"))
    })));
    plan.push((Suite::Biset, "tensor induction identity", Box::new(move || tensor_identity(ctx, &mut rng(41), 10))));
    plan.push((Suite::Biset, "tensor induction structure", Box::new(move || tensor_structure(ctx, &mut rng(42), 5))));
    plan.push((Suite::Biset, "non-left-inert counterexample", Box::new(tensor_counterexample)));
    plan.push((Suite::Spectrum, "components over Z", Box::new(|| spectrum_components(ctx))));
    plan.push((Suite::Spectrum, "components over Z_(p)", Box::new(|| local_components(ctx))));
    plan.push((Suite::Spectrum, "hat_p", Box::new(|| hat_p_properties(ctx))));
    for (k, kind) in [RingKind::Slice, RingKind::Section].into_iter().enumerate() {
        plan.push((Suite::Spectrum, ["prime ideal inclusions (slice)", "prime ideal inclusions (section)"][k], Box::new(move || ideal_inclusions(ctx, kind))));
        let salt = 50 + k as u64;
        plan.push((Suite::Spectrum, ["support vs denominators (slice)", "support vs denominators (section)"][k], Box::new(move || support_vs_denominators(ctx, kind, &mut rng(salt), opts.elements))));
    }
    plan.push((Suite::Units, "unit dimensions", Box::new(|| unit_dimensions(ctx))));
    for (k, kind) in [RingKind::Slice, RingKind::Section, RingKind::Burnside].into_iter().enumerate() {
        let salt = 60 + k as u64;
        plan.push((Suite::Units, ["unit tests agree (slice)", "unit tests agree (section)", "unit tests agree (burnside)"][k], Box::new(move || verify_unit_agreement(ctx, kind, &mut rng(salt), opts.elements))));
    }
    plan.push((Suite::Units, "units under tensor induction", Box::new(|| units_under_tensor_induction(ctx))));
    if ctx.group().is_abelian() {
        plan.push((Suite::Units, "deflation of units", Box::new(|| deflation_of_units(ctx))));
    }
    plan.into_iter()
        .filter(|(s, _, _)| suite == Suite::All || *s == suite)
        .map(|(s, name, f)| {
            let (passed, detail) = match f() {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            Check { suite: s, name: name.to_string(), passed, detail }
        })
        .collect()
}
