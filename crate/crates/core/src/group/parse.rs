use super::{families, Group, Perm};
use crate::error::{Error, Result};

struct Line<'a> {
    no: usize,
    text: &'a str,
}

fn perr(no: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line: no, msg: msg.into() }
}

fn number(no: usize, tok: Option<&str>, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| perr(no, format!("missing {what}")))?;
    tok.parse().map_err(|_| perr(no, format!("{what} must be a non-negative integer, got {tok:?}")))
}

/// Parses a group description and returns the last group it defines.
///
/// Statements are separated by newlines or `;`, and `#` starts a comment. Any
/// definition may be prefixed by `<name> =`; `product` with no arguments
/// multiplies every group defined so far, otherwise the named (or 1-based
/// numbered) ones.
pub fn parse_group(text: &str, cap: usize) -> Result<Group> {
    let lines: Vec<Line> = text
        .lines()
        .enumerate()
        .flat_map(|(i, l)| {
            let l = l.split('#').next().unwrap_or("");
            l.split(';').map(move |s| Line { no: i + 1, text: s.trim() })
        })
        .filter(|l| !l.text.is_empty())
        .collect();

    let mut defined: Vec<(Option<String>, Group)> = Vec::new();
    let mut i = 0;
    while i < lines.len() {
        let Line { no, text } = lines[i];
        i += 1;
        let (name, body) = match text.split_once('=') {
            Some((n, b)) if !n.trim().is_empty() && !n.trim().contains(char::is_whitespace) => {
                (Some(n.trim().to_string()), b.trim())
            }
            _ => (None, text),
        };
        let mut toks = body.split_whitespace();
        let group = match toks.next() {
            Some("family") => {
                let rest: Vec<String> = toks
                    .flat_map(|t| t.split(|c| c == '(' || c == ')' || c == ','))
                    .filter(|t| !t.is_empty())
                    .map(str::to_string)
                    .collect();
                family(no, &rest, cap)?
            }
            Some("perm") => {
                let degree = number(no, toks.next(), "degree")?;
                let mut gens = Vec::new();
                while i < lines.len() && lines[i].text.starts_with('(') {
                    gens.push(Perm::parse_cycles(degree, lines[i].text).map_err(|m| perr(lines[i].no, m))?);
                    i += 1;
                }
                let label = name.clone().unwrap_or_else(|| format!("perm{}", defined.len() + 1));
                Group::from_permutations(&label, degree, &gens, cap)?
            }
            Some("table") => {
                let n = number(no, toks.next(), "table size")?;
                if n > cap {
                    return Err(Error::CapExceeded { order: n, cap });
                }
                let mut table = Vec::with_capacity(n * n);
                for _ in 0..n {
                    let row = lines.get(i).ok_or_else(|| perr(no, "table ended early"))?;
                    let vals: Vec<u32> = row
                        .text
                        .split(|c: char| c == ',' || c.is_whitespace())
                        .filter(|t| !t.is_empty())
                        .map(|t| t.parse().map_err(|_| perr(row.no, format!("bad table entry {t:?}"))))
                        .collect::<Result<_>>()?;
                    if vals.len() != n {
                        return Err(perr(row.no, format!("expected {n} entries, got {}", vals.len())));
                    }
                    table.extend(vals);
                    i += 1;
                }
                let label = name.clone().unwrap_or_else(|| format!("table{}", defined.len() + 1));
                Group::from_table(&label, n, table, (0..n).map(|k| k.to_string()).collect())?
            }
            Some("product") => {
                let refs: Vec<&str> = toks.collect();
                let factors: Vec<&Group> = if refs.is_empty() {
                    defined.iter().map(|(_, g)| g).collect()
                } else {
                    refs.iter().map(|r| lookup(no, &defined, r)).collect::<Result<_>>()?
                };
                if factors.is_empty() {
                    return Err(perr(no, "product of no groups"));
                }
                let order: usize = factors.iter().map(|g| g.order()).product();
                if order > cap {
                    return Err(Error::CapExceeded { order, cap });
                }
                let mut g = factors[0].clone();
                for f in &factors[1..] {
                    g = g.direct_product(f);
                }
                g
            }
            Some(other) => return Err(perr(no, format!("unknown statement {other:?}"))),
            None => return Err(perr(no, "empty definition")),
        };
        defined.push((name, group));
    }
    defined.pop().map(|(_, g)| g).ok_or_else(|| perr(0, "no group defined"))
}

fn lookup<'a>(no: usize, defined: &'a [(Option<String>, Group)], r: &str) -> Result<&'a Group> {
    if let Some((_, g)) = defined.iter().rev().find(|(n, _)| n.as_deref() == Some(r)) {
        return Ok(g);
    }
    match r.parse::<usize>() {
        Ok(k) if k >= 1 && k <= defined.len() => Ok(&defined[k - 1].1),
        _ => Err(perr(no, format!("unknown group {r:?}"))),
    }
}

fn family(no: usize, args: &[String], cap: usize) -> Result<Group> {
    let name = args.first().map(String::as_str).ok_or_else(|| perr(no, "missing family name"))?;
    let arg = |k: usize, what: &str| number(no, args.get(k).map(String::as_str), what);
    match name {
        "cyclic" => families::cyclic(arg(1, "n")?, cap),
        "dihedral" => families::dihedral(arg(1, "order")?, cap),
        "symmetric" => families::symmetric(arg(1, "n")?, cap),
        "alternating" => families::alternating(arg(1, "n")?, cap),
        "quaternion8" => families::quaternion8(cap),
        "elementary_abelian" => families::elementary_abelian(arg(1, "p")?, arg(2, "k")?, cap),
        other => Err(perr(no, format!("unknown family {other:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inline_and_multiline_forms() {
        assert_eq!(parse_group("family cyclic 2", 100).unwrap().order(), 2);
        assert_eq!(parse_group("family elementary_abelian(2,3)", 100).unwrap().order(), 8);
        let g = parse_group("a = family cyclic 2\nb = family cyclic 4\nproduct a b\n", 100).unwrap();
        assert_eq!((g.order(), g.name()), (8, "C2 x C4"));
        assert_eq!(parse_group("family cyclic 3; family cyclic 3; product", 100).unwrap().order(), 9);
        let a5 = parse_group("perm 5\n  (1 2 3 4 5)\n(1 2)(3 4)\n", 100).unwrap();
        assert_eq!(a5.order(), 60);
        let c3 = parse_group("table 3\n0 1 2\n1 2 0\n2 0 1", 100).unwrap();
        assert!(c3.is_abelian());
    }

    #[test]
    fn errors_are_reported() {
        assert!(matches!(parse_group("family wombat 3", 100), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_group("family symmetric 5", 100), Err(Error::CapExceeded { .. })));
        assert!(matches!(parse_group("table 2\n0 1\n1 1", 100), Err(Error::InvalidTable(_))));
        assert!(matches!(parse_group("product x", 100), Err(Error::Parse { .. })));
        assert!(parse_group("# nothing", 100).is_err());
    }
}
