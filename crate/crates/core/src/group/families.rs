use super::{Group, Perm};
use crate::error::{Error, Result};

fn cycle(degree: usize, points: impl IntoIterator<Item = usize>) -> Perm {
    let pts: Vec<usize> = points.into_iter().collect();
    let mut images: Vec<u16> = (0..degree as u16).collect();
    for (i, &p) in pts.iter().enumerate() {
        images[p] = pts[(i + 1) % pts.len()] as u16;
    }
    Perm::from_images(images).expect("a cycle is a permutation")
}

/// Refuses a family member whose known order is above the cap before building it.
fn fits(order: usize, cap: usize) -> Result<()> {
    if order > cap {
        Err(Error::CapExceeded { order, cap })
    } else {
        Ok(())
    }
}

fn factorial(n: usize) -> usize {
    (1..=n).fold(1usize, |a, k| a.saturating_mul(k))
}

fn need(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Invalid(msg.into()))
    }
}

pub fn cyclic(n: usize, cap: usize) -> Result<Group> {
    need(n >= 1, "cyclic group needs n >= 1")?;
    fits(n, cap)?;
    Group::from_permutations(&format!("C{n}"), n, &[cycle(n, 0..n)], cap)
}

/// Dihedral group of order `n` (so `dihedral 8` is the symmetry group of a square).
pub fn dihedral(n: usize, cap: usize) -> Result<Group> {
    need(n >= 2 && n % 2 == 0, "dihedral group needs an even order n >= 2")?;
    fits(n, cap)?;
    let name = format!("D{n}");
    let m = n / 2;
    match m {
        1 => Group::from_permutations(&name, 2, &[cycle(2, [0, 1])], cap),
        2 => {
            let a = Perm::from_images(vec![1, 0, 3, 2]).expect("perm");
            let b = Perm::from_images(vec![2, 3, 0, 1]).expect("perm");
            Group::from_permutations(&name, 4, &[a, b], cap)
        }
        _ => {
            let refl = Perm::from_images((0..m).map(|x| (m - 1 - x) as u16).collect()).expect("perm");
            Group::from_permutations(&name, m, &[cycle(m, 0..m), refl], cap)
        }
    }
}

pub fn symmetric(n: usize, cap: usize) -> Result<Group> {
    need(n >= 1, "symmetric group needs n >= 1")?;
    fits(factorial(n), cap)?;
    let mut gens = vec![cycle(n, 0..n)];
    if n > 2 {
        gens.push(cycle(n, [0, 1]));
    }
    Group::from_permutations(&format!("S{n}"), n, &gens, cap)
}

pub fn alternating(n: usize, cap: usize) -> Result<Group> {
    need(n >= 1, "alternating group needs n >= 1")?;
    fits(factorial(n).div_ceil(2), cap)?;
    let gens: Vec<Perm> = (2..n).map(|k| cycle(n, [0, 1, k])).collect();
    Group::from_permutations(&format!("A{n}"), n, &gens, cap)
}

pub fn quaternion8(cap: usize) -> Result<Group> {
    if cap < 8 {
        return Err(Error::CapExceeded { order: 8, cap });
    }
    // Elements ±1, ±i, ±j, ±k numbered 1,-1,i,-i,j,-j,k,-k; unit u at 2*u, its negative at 2*u+1.
    let units = ["1", "i", "j", "k"];
    // Products of the units 1,i,j,k as (sign, unit).
    let unit_mul = |a: usize, b: usize| -> (bool, usize) {
        match (a, b) {
            (0, x) | (x, 0) => (false, x),
            (x, y) if x == y => (true, 0),
            (1, 2) => (false, 3),
            (2, 3) => (false, 1),
            (3, 1) => (false, 2),
            (2, 1) => (true, 3),
            (3, 2) => (true, 1),
            (1, 3) => (true, 2),
            _ => unreachable!(),
        }
    };
    let mut table = Vec::with_capacity(64);
    for a in 0..8 {
        for b in 0..8 {
            let (neg, u) = unit_mul(a / 2, b / 2);
            let neg = neg ^ (a % 2 == 1) ^ (b % 2 == 1);
            table.push((2 * u + neg as usize) as u32);
        }
    }
    let labels = (0..8).map(|e| format!("{}{}", if e % 2 == 1 { "-" } else { "" }, units[e / 2])).collect();
    Group::from_table("Q8", 8, table, labels)
}

/// `(C_p)^k`, realised on `p*k` points with one `p`-cycle per factor.
pub fn elementary_abelian(p: usize, k: usize, cap: usize) -> Result<Group> {
    if !super::is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    fits(p.saturating_pow(k.min(64) as u32), cap)?;
    let degree = (p * k).max(1);
    let gens: Vec<Perm> = (0..k).map(|i| cycle(degree, i * p..(i + 1) * p)).collect();
    let name = if k == 1 { format!("C{p}") } else { format!("C{p}^{k}") };
    Group::from_permutations(&name, degree, &gens, cap)
}
