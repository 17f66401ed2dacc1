use std::fmt;

/// Permutation of `0..degree`, stored as the image list.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Perm(Vec<u16>);

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        Perm((0..degree as u16).collect())
    }

    pub fn from_images(images: Vec<u16>) -> Option<Perm> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i as usize >= images.len() || std::mem::replace(&mut seen[i as usize], true) {
                return None;
            }
        }
        Some(Perm(images))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&x| self.0[x as usize]).collect())
    }

    pub fn image(&self, x: usize) -> usize {
        self.0[x] as usize
    }

    /// Parses 1-based disjoint cycles such as `(1 2 3)(4 5)` or `(1,2)`; `()` is the identity.
    pub fn parse_cycles(degree: usize, text: &str) -> Result<Perm, String> {
        let mut images: Vec<u16> = (0..degree as u16).collect();
        let mut used = vec![false; degree];
        let mut rest = text.trim();
        while !rest.is_empty() {
            let open = rest.strip_prefix('(').ok_or_else(|| format!("expected '(' in {text:?}"))?;
            let close = open.find(')').ok_or_else(|| format!("unclosed cycle in {text:?}"))?;
            let mut cycle = Vec::new();
            for tok in open[..close].split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
                let p: usize = tok.parse().map_err(|_| format!("bad point {tok:?}"))?;
                if p == 0 || p > degree {
                    return Err(format!("point {p} outside 1..={degree}"));
                }
                if std::mem::replace(&mut used[p - 1], true) {
                    return Err(format!("point {p} repeated; cycles must be disjoint"));
                }
                cycle.push(p - 1);
            }
            for (i, &p) in cycle.iter().enumerate() {
                images[p] = cycle[(i + 1) % cycle.len()] as u16;
            }
            rest = open[close + 1..].trim_start();
        }
        Ok(Perm(images))
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.0.len()];
        let mut any = false;
        for start in 0..self.0.len() {
            if seen[start] || self.0[start] as usize == start {
                continue;
            }
            any = true;
            write!(f, "(")?;
            let mut x = start;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    write!(f, ",")?;
                }
                write!(f, "{}", x + 1)?;
                first = false;
                x = self.0[x] as usize;
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_round_trip() {
        let p = Perm::parse_cycles(5, " (1 2 3) (4,5)").unwrap();
        assert_eq!(p.to_string(), "(1,2,3)(4,5)");
        assert_eq!(Perm::parse_cycles(3, "()").unwrap(), Perm::identity(3));
        assert!(Perm::parse_cycles(3, "(1 2)(2 3)").is_err());
        assert!(Perm::parse_cycles(3, "(1 4)").is_err());
    }

    #[test]
    fn composition_applies_right_factor_first() {
        let a = Perm::parse_cycles(3, "(1 2)").unwrap();
        let b = Perm::parse_cycles(3, "(2 3)").unwrap();
        // (2 3) first: 1 -> 1 -> 2, 2 -> 3 -> 3, 3 -> 2 -> 1.
        assert_eq!(a.compose(&b).to_string(), "(1,2,3)");
    }
}
