use super::{GSet, Morphism};
use crate::ring::Context;
use rand::seq::SliceRandom;
use rand::Rng;

/// Transitive G/H with its coset representatives.
fn cosets_with_reps(ctx: &Context, h: usize) -> (GSet, Vec<usize>) {
    let g = ctx.group();
    let (set, coset_of) = GSet::cosets(g, ctx.lattice().members(h));
    let mut reps = vec![usize::MAX; set.size()];
    for e in (0..g.order()).rev() {
        reps[coset_of[e]] = e;
    }
    (set, reps)
}

fn pick_subgroup<R: Rng>(ctx: &Context, rng: &mut R, within: usize, budget: usize) -> Option<usize> {
    let lat = ctx.lattice();
    let n = ctx.group().order();
    let options: Vec<usize> = lat.below(within).iter().filter(|&k| n / lat.order(k) <= budget).collect();
    options.choose(rng).copied()
}

/// Disjoint union of 1..=`max_orbits` transitive G-sets with at most `max_points` points.
pub fn random_gset<R: Rng>(ctx: &Context, rng: &mut R, max_orbits: usize, max_points: usize) -> GSet {
    let mut set = GSet::empty(ctx.group());
    let orbits = rng.gen_range(1..=max_orbits.max(1));
    for _ in 0..orbits {
        let Some(h) = pick_subgroup(ctx, rng, ctx.lattice().whole(), max_points - set.size()) else { break };
        set = set.coproduct(&cosets_with_reps(ctx, h).0);
    }
    set
}

/// Random equivariant map: 1–4 domain orbits G/S, each sent to a random
/// codomain point y with S ≤ G_y.
pub fn random_morphism<R: Rng>(ctx: &Context, rng: &mut R, max_points: usize) -> Morphism {
    let g = ctx.group();
    let cod = random_gset(ctx, rng, 3, max_points);
    let mut f = Morphism::empty(g);
    f.cod = cod.clone();
    let orbits = rng.gen_range(1..=4);
    for _ in 0..orbits {
        let y = rng.gen_range(0..cod.size());
        let gy = super::stabilizer_id(ctx, &cod, y);
        let Some(s) = pick_subgroup(ctx, rng, gy, max_points - f.dom.size()) else { break };
        let (orbit, reps) = cosets_with_reps(ctx, s);
        let piece = Morphism { map: reps.iter().map(|&e| cod.act(e, y)).collect(), dom: orbit, cod: cod.clone() };
        f = Morphism { map: f.map.iter().copied().chain(piece.map).collect(), dom: f.dom.coproduct(&piece.dom), cod: cod.clone() };
    }
    f
}

/// Random Galois morphism: every domain orbit is G/N → G/T through an orbit
/// representative y with stabilizer T and N ⊴ T, and all orbits over the same
/// y share N, so each fiber has a single stabilizer.
pub fn random_galois_morphism<R: Rng>(ctx: &Context, rng: &mut R, max_points: usize) -> Morphism {
    let g = ctx.group();
    let lat = ctx.lattice();
    let cod = random_gset(ctx, rng, 3, max_points);
    let reps: Vec<usize> = cod.orbits().iter().map(|o| o[0]).collect();
    let mut chosen: Vec<Option<usize>> = vec![None; cod.size()];
    let mut f = Morphism::empty(g);
    f.cod = cod.clone();
    let orbits = rng.gen_range(1..=4);
    for _ in 0..orbits {
        let y = *reps.choose(rng).expect("codomain is nonempty");
        let t = super::stabilizer_id(ctx, &cod, y);
        let budget = max_points - f.dom.size();
        let nrm = match chosen[y] {
            Some(n) if g.order() / lat.order(n) <= budget => n,
            Some(_) => break,
            None => {
                let normals: Vec<usize> = lat
                    .below(t)
                    .iter()
                    .filter(|&k| lat.is_normal_in(k, t) && g.order() / lat.order(k) <= budget)
                    .collect();
                let Some(&n) = normals.choose(rng) else { break };
                chosen[y] = Some(n);
                n
            }
        };
        let (orbit, coset_reps) = cosets_with_reps(ctx, nrm);
        let map: Vec<usize> = coset_reps.iter().map(|&e| cod.act(e, y)).collect();
        f = Morphism { map: f.map.iter().copied().chain(map).collect(), dom: f.dom.coproduct(&orbit), cod: cod.clone() };
    }
    f
}
