use crate::biset::Biset;
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::gset::{GSet, Morphism};
use crate::ring::{Coeff, Context, Element, MarkMatrix, QRingElement, RingKind};
use crate::spectrum::{ComponentLabel, Localization, SpectrumComponent};
use crate::units::UnitGroupBasis;
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

fn coeff_json<C: Coeff>(c: &C) -> Value {
    let text = c.to_string();
    match text.parse::<i64>() {
        Ok(v) => json!(v),
        Err(_) => json!(text),
    }
}

fn coeff_parse(v: &Value) -> Result<BigRational> {
    let bad = || Error::Invalid(format!("coefficient {v} is not an integer or a fraction string"));
    match v {
        Value::Number(n) => n.as_i64().map(|i| BigRational::from_integer(BigInt::from(i))).ok_or_else(bad),
        Value::String(s) => s.trim().parse::<BigRational>().map_err(|_| bad()),
        _ => Err(bad()),
    }
}

fn subgroup_json(ctx: &Context, id: usize) -> Value {
    json!(ctx.lattice().members(id).to_vec())
}

fn subgroup_parse(ctx: &Context, v: &Value) -> Result<usize> {
    let n = ctx.group().order();
    let list = v
        .as_array()
        .ok_or_else(|| Error::Invalid("a subgroup must be a list of element indices".into()))?
        .iter()
        .map(|x| x.as_u64().map(|x| x as usize).filter(|&x| x < n))
        .collect::<Option<Vec<usize>>>()
        .ok_or_else(|| Error::Invalid(format!("subgroup {v} names elements outside 0..{n}")))?;
    ctx.lattice()
        .id_of(&BitSet::from_iter(n, list))
        .ok_or_else(|| Error::Invalid(format!("{v} is not a subgroup")))
}

/// {group, ring, coeffs: [{t, s, c}]} with subgroups as sorted element-index
/// lists, or [{k, c}] for the Burnside ring.
pub fn element_to_json<C: Coeff>(ctx: &Context, x: &Element<C>) -> Value {
    let coeffs: Vec<Value> = x
        .coeffs()
        .iter()
        .map(|(&c, v)| match x.kind() {
            RingKind::Burnside => json!({"k": subgroup_json(ctx, ctx.lattice().class_rep(c)), "c": coeff_json(v)}),
            _ => {
                let (t, s) = ctx.slices().rep(c);
                json!({"t": subgroup_json(ctx, t), "s": subgroup_json(ctx, s), "c": coeff_json(v)})
            }
        })
        .collect();
    json!({"group": ctx.group().name(), "ring": x.kind().name(), "coeffs": coeffs})
}

/// Inverse of [`element_to_json`]; any representative of a class is accepted.
pub fn element_from_json(ctx: &Context, v: &Value) -> Result<QRingElement> {
    let kind = v
        .get("ring")
        .and_then(Value::as_str)
        .and_then(RingKind::parse)
        .ok_or_else(|| Error::Invalid("element needs a ring of slice, section or burnside".into()))?;
    let terms = v.get("coeffs").and_then(Value::as_array).ok_or_else(|| Error::Invalid("element needs a coeffs list".into()))?;
    let mut out = Vec::with_capacity(terms.len());
    for term in terms {
        let c = coeff_parse(term.get("c").unwrap_or(&Value::Null))?;
        let class = match kind {
            RingKind::Burnside => {
                ctx.lattice().class_of(subgroup_parse(ctx, term.get("k").unwrap_or(&Value::Null))?)
            }
            _ => {
                let t = subgroup_parse(ctx, term.get("t").unwrap_or(&Value::Null))?;
                let s = subgroup_parse(ctx, term.get("s").unwrap_or(&Value::Null))?;
                ctx.slices().class_of(t, s)?
            }
        };
        out.push((class, c));
    }
    let mut e = ctx.zero(kind);
    for (class, c) in out {
        e = e.add(&ctx.element(kind, [(class, c)])?)?;
    }
    Ok(e)
}

/// Label list of a subgroup, e.g. `{(),(1,2)}`.
pub fn subgroup_label(ctx: &Context, id: usize) -> String {
    format!("{{{}}}", ctx.lattice().labels(id).join(","))
}

/// "T:S" for slice classes, "K" for subgroup classes.
pub fn class_label(ctx: &Context, kind: RingKind, class: usize) -> String {
    match kind {
        RingKind::Burnside => subgroup_label(ctx, ctx.lattice().class_rep(class)),
        _ => {
            let (t, s) = ctx.slices().rep(class);
            format!("{}:{}", subgroup_label(ctx, t), subgroup_label(ctx, s))
        }
    }
}

/// `c·[label] + …` with classes in ascending order; `0` for the zero element.
pub fn element_to_text<C: Coeff>(ctx: &Context, x: &Element<C>) -> String {
    if x.is_zero() {
        return "0".into();
    }
    x.coeffs()
        .iter()
        .map(|(&c, v)| format!("{v}·[{}]", class_label(ctx, x.kind(), c)))
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Mark matrix as CSV: a header of class labels, then one labelled row per class.
pub fn marks_to_csv(ctx: &Context, m: &MarkMatrix) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let labels: Vec<String> = m.classes.iter().map(|&c| class_label(ctx, m.kind, c)).collect();
    let header = std::iter::once(String::new()).chain(labels.iter().cloned());
    w.write_record(header).map_err(|e| Error::Invalid(e.to_string()))?;
    for (i, label) in labels.iter().enumerate() {
        let row = std::iter::once(label.clone()).chain(m.row(i).iter().map(i64::to_string));
        w.write_record(row).map_err(|e| Error::Invalid(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Invalid(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Invalid(e.to_string()))
}

pub fn marks_to_json(ctx: &Context, m: &MarkMatrix) -> Value {
    let rows: Vec<Vec<i64>> = (0..m.size()).map(|i| m.row(i).to_vec()).collect();
    let labels: Vec<String> = m.classes.iter().map(|&c| class_label(ctx, m.kind, c)).collect();
    json!({"group": ctx.group().name(), "ring": m.kind.name(), "classes": labels, "marks": rows})
}

pub fn components_to_json(ctx: &Context, kind: RingKind, loc: Localization, comps: &[SpectrumComponent]) -> Value {
    let loc = match loc {
        Localization::Integers => json!("Z"),
        Localization::AtPrime(p) => json!(format!("Z_({p})")),
    };
    let comps: Vec<Value> = comps
        .iter()
        .map(|c| {
            let label = match c.label {
                ComponentLabel::Closed(k) | ComponentLabel::Least(k) => class_label(ctx, kind, k),
                ComponentLabel::Perfect(k) => subgroup_label(ctx, ctx.lattice().class_rep(k)),
            };
            let classes: Vec<String> = c.classes.iter().map(|&k| class_label(ctx, kind, k)).collect();
            json!({"label": label, "classes": classes, "idempotent": element_to_json(ctx, &c.idempotent)})
        })
        .collect();
    json!({"group": ctx.group().name(), "ring": kind.name(), "localization": loc, "components": comps})
}

pub fn units_to_json(ctx: &Context, u: &UnitGroupBasis) -> Value {
    let basis: Vec<Value> = u.basis.iter().map(|e| element_to_json(ctx, e)).collect();
    json!({"group": ctx.group().name(), "ring": u.kind.name(), "dimension": u.dimension, "basis": basis})
}

/// A G-set as a point count and one action row per group element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GSetFixture {
    pub points: usize,
    pub action: Vec<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismFixture {
    pub domain: GSetFixture,
    pub codomain: GSetFixture,
    pub map: Vec<usize>,
}

/// An (H,G)-biset: `left[h][u] = h·u`, `right[g][u] = u·g`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BisetFixture {
    pub points: usize,
    pub left: Vec<Vec<u32>>,
    pub right: Vec<Vec<u32>>,
}

impl GSetFixture {
    pub fn from_gset(x: &GSet) -> GSetFixture {
        GSetFixture { points: x.size(), action: (0..x.group_order()).map(|g| x.action_row(g).to_vec()).collect() }
    }

    pub fn to_gset(&self, group: &Group) -> Result<GSet> {
        if self.action.len() != group.order() || self.action.iter().any(|r| r.len() != self.points) {
            return Err(Error::Invalid(format!("action must have {} rows of {} points", group.order(), self.points)));
        }
        GSet::new(group, self.points, self.action.concat())
    }
}

impl MorphismFixture {
    pub fn from_morphism(f: &Morphism) -> MorphismFixture {
        MorphismFixture {
            domain: GSetFixture::from_gset(&f.dom),
            codomain: GSetFixture::from_gset(&f.cod),
            map: f.map.clone(),
        }
    }

    pub fn to_morphism(&self, group: &Group) -> Result<Morphism> {
        Morphism::new(self.domain.to_gset(group)?, self.codomain.to_gset(group)?, self.map.clone())
    }
}

impl BisetFixture {
    pub fn from_biset(u: &Biset) -> BisetFixture {
        let rows = |t: &[u32]| -> Vec<Vec<u32>> {
            if u.size() == 0 {
                return Vec::new();
            }
            t.chunks(u.size()).map(<[u32]>::to_vec).collect()
        };
        BisetFixture { points: u.size(), left: rows(u.left_table()), right: rows(u.right_table()) }
    }

    pub fn to_biset(&self, h: &Group, g: &Group) -> Result<Biset> {
        if self.left.len() != h.order() || self.right.len() != g.order() {
            return Err(Error::Invalid("biset needs one row per element of each group".into()));
        }
        Biset::new(h.clone(), g.clone(), self.points, self.left.concat(), self.right.concat())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::symmetric;

    #[test]
    fn element_json_round_trip() {
        let ctx = Context::new(symmetric(3, 100).unwrap(), 100).unwrap();
        for kind in [RingKind::Slice, RingKind::Section, RingKind::Burnside] {
            let e = ctx.primitive_idempotents(kind).unwrap().remove(1);
            let back = element_from_json(&ctx, &element_to_json(&ctx, &e)).unwrap();
            assert_eq!(back, e);
        }
    }

    #[test]
    fn csv_header_names_slices() {
        let ctx = Context::new(symmetric(3, 100).unwrap(), 100).unwrap();
        let csv = marks_to_csv(&ctx, &ctx.mark_matrix(RingKind::Slice)).unwrap();
        let header = csv.lines().next().unwrap();
        assert!(header.starts_with(",{()}:{()}"), "{header}");
        assert_eq!(csv.lines().count(), 1 + ctx.slices().num_classes());
    }

    #[test]
    fn fixtures_round_trip() {
        let ctx = Context::new(symmetric(3, 100).unwrap(), 100).unwrap();
        let f = Morphism::projection(&ctx, ctx.lattice().whole(), 1).unwrap();
        let fx = MorphismFixture::from_morphism(&f);
        let text = serde_json::to_string(&fx).unwrap();
        let back: MorphismFixture = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_morphism(ctx.group()).unwrap(), f);
        let u = Biset::identity(ctx.group());
        assert_eq!(BisetFixture::from_biset(&u).to_biset(ctx.group(), ctx.group()).unwrap(), u);
    }
}
