//! Reports behind the command-line tools: pairwise relations between two
//! sets, rankings of the elements of one set, and evaluation traces.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::document::Document;
use crate::error::{Error, Result};
use crate::hfe::Hfe;
use crate::hfs::Hfs;
use crate::laws::{trace_law, Binding, Law, TraceStep, Verdict};
use crate::relations::{
    element_relation, relation_profile, set_equality, set_relation, set_sot, RelationKind,
    RelationProfile,
};

/// Digits shown after the point for non-terminating rationals.
const APPROX_DIGITS: u32 = 6;

/// `9/20 = 0.45`, `8/15 ≈ 0.533333`, or just `1`.
pub fn show_rational(r: &BigRational) -> String {
    if r.is_integer() {
        return r.numer().to_string();
    }
    let exact = format!("{}/{}", r.numer(), r.denom());
    let mut den = r.denom().clone();
    let mut digits = 0u32;
    for p in [2u32, 5] {
        let p = BigInt::from(p);
        let mut n = 0;
        while (&den % &p).is_zero() {
            den /= &p;
            n += 1;
        }
        digits = digits.max(n);
    }
    if den.is_one() {
        format!("{exact} = {}", decimal(r, digits))
    } else {
        format!("{exact} ≈ {}", decimal(r, APPROX_DIGITS))
    }
}

/// `r` rounded half away from zero to `digits` places.
fn decimal(r: &BigRational, digits: u32) -> String {
    let scale = BigInt::from(10u32).pow(digits);
    let scaled = (r * BigRational::from_integer(scale.clone())).round().to_integer();
    let sign = if scaled.is_negative() { "-" } else { "" };
    let scaled = scaled.abs();
    let (int, frac) = (&scaled / &scale, &scaled % &scale);
    if digits == 0 {
        return format!("{sign}{int}");
    }
    format!("{sign}{int}.{frac:0>width$}", width = digits as usize)
}

/// Cardinality, bounds and mean of one membership.
pub fn describe_hfe(h: &Hfe) -> String {
    format!(
        "{h}  |·|={}  min {}  max {}  mean {}",
        h.len(),
        h.lower(),
        h.upper(),
        show_rational(&h.mean())
    )
}

fn marks(p: &RelationProfile) -> String {
    RelationKind::ALL
        .iter()
        .map(|&k| if p.get(k) { k.letter() } else { '·' })
        .map(String::from)
        .collect::<Vec<_>>()
        .join(" ")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ElementRelations {
    pub element: String,
    pub left: Hfe,
    pub right: Hfe,
    /// `left(x) ⊂ₖ right(x)`.
    pub forward: RelationProfile,
    /// `right(x) ⊂ₖ left(x)`.
    pub backward: RelationProfile,
}

/// A set-level verdict, e.g. `A ⊂ₚ B`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SetVerdict {
    pub relation: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelateReport {
    pub left: String,
    pub right: String,
    pub elements: Vec<ElementRelations>,
    /// `left ⊂ₖ right` for each kind, then `⊂ₛₒₜ`.
    pub forward: Vec<SetVerdict>,
    /// `right ⊂ₖ left` for each kind, then `⊂ₛₒₜ`.
    pub backward: Vec<SetVerdict>,
    /// `left =ₖ right` for every kind with an equality.
    pub equality: Vec<SetVerdict>,
}

fn directional(a: &str, b: &str, x: &Hfs, y: &Hfs) -> Result<Vec<SetVerdict>> {
    let mut out = Vec::new();
    for kind in RelationKind::ALL {
        out.push(SetVerdict {
            relation: format!("{a} {} {b}", kind.subset_symbol()),
            holds: set_relation(kind, x, y)?,
        });
    }
    out.push(SetVerdict {
        relation: format!("{a} ⊂ₛₒₜ {b}"),
        holds: set_sot(x, y)?,
    });
    Ok(out)
}

pub fn relate(doc: &Document, left: &str, right: &str) -> Result<RelateReport> {
    let (a, b) = (doc.set(left)?, doc.set(right)?);
    let elements = doc
        .universe()
        .ids()
        .iter()
        .enumerate()
        .map(|(i, id)| ElementRelations {
            element: id.clone(),
            left: a.at(i).clone(),
            right: b.at(i).clone(),
            forward: relation_profile(a.at(i), b.at(i)),
            backward: relation_profile(b.at(i), a.at(i)),
        })
        .collect();
    let equality = RelationKind::WITH_EQUALITY
        .iter()
        .map(|&k| {
            Ok(SetVerdict {
                relation: format!("{left} {} {right}", k.equality_symbol()),
                holds: set_equality(k, a, b)?,
            })
        })
        .collect::<Result<_>>()?;
    Ok(RelateReport {
        forward: directional(left, right, a, b)?,
        backward: directional(right, left, b, a)?,
        left: left.to_string(),
        right: right.to_string(),
        elements,
        equality,
    })
}

impl RelateReport {
    pub fn render(&self) -> String {
        let (l, r) = (&self.left, &self.right);
        let heads = [
            "x".to_string(),
            format!("{l}(x)"),
            format!("{r}(x)"),
            format!("{l} ⊂ {r}"),
            format!("{r} ⊂ {l}"),
        ];
        let rows: Vec<[String; 5]> = self
            .elements
            .iter()
            .map(|e| {
                [
                    e.element.clone(),
                    e.left.to_string(),
                    e.right.to_string(),
                    marks(&e.forward),
                    marks(&e.backward),
                ]
            })
            .collect();
        let mut out = String::new();
        table(&mut out, &heads, &rows);
        out.push('\n');
        for (f, b) in self.forward.iter().zip(&self.backward) {
            let _ = writeln!(out, "{:<24}{:<5}   {:<24}{}", f.relation, yes(f.holds), b.relation, yes(b.holds));
        }
        for e in &self.equality {
            let _ = writeln!(out, "{:<24}{}", e.relation, yes(e.holds));
        }
        out
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Left-aligned columns separated by two spaces; widths count chars.
fn table<const N: usize>(out: &mut String, heads: &[String; N], rows: &[[String; N]]) {
    let mut widths: [usize; N] = std::array::from_fn(|i| heads[i].chars().count());
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut line = |cells: &[String; N]| {
        let mut text = String::new();
        for (i, (cell, w)) in cells.iter().zip(widths).enumerate() {
            text.push_str(cell);
            if i + 1 < N {
                text.extend(std::iter::repeat_n(' ', w - cell.chars().count() + 2));
            }
        }
        out.push_str(text.trim_end());
        out.push('\n');
    };
    line(heads);
    for row in rows {
        line(row);
    }
}

/// Elements of one set ordered by the strict part of an inclusion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Ranking {
    pub set: String,
    pub kind: RelationKind,
    pub schemes: Vec<String>,
    pub values: Vec<Hfe>,
    /// Exact means, as `p/q` text.
    pub means: Vec<String>,
    /// `matrix[i][j]` is `H(i) ⊂ₖ H(j)`.
    pub matrix: Vec<Vec<bool>>,
    /// Best first; a scheme sits one layer below the lowest layer of the
    /// schemes strictly above it.
    pub layers: Vec<Vec<String>>,
    /// Pairs included both ways.
    pub ties: Vec<(String, String)>,
    /// Pairs included neither way.
    pub incomparable: Vec<(String, String)>,
    /// Covering pairs of the strict order, `(lower, upper)`.
    pub hasse: Vec<(String, String)>,
}

pub fn rank(doc: &Document, set: &str, kind: RelationKind) -> Result<Ranking> {
    if kind == RelationKind::T {
        return Err(Error::NoRankingForTail);
    }
    let h = doc.set(set)?;
    let schemes = doc.universe().ids().to_vec();
    let values = h.memberships().to_vec();
    let n = values.len();
    let matrix: Vec<Vec<bool>> = values
        .iter()
        .map(|a| values.iter().map(|b| element_relation(kind, a, b)).collect())
        .collect();
    let below = |i: usize, j: usize| matrix[i][j] && !matrix[j][i];

    // Depth = longest strict chain above; the strict part of a transitive
    // relation is acyclic, so n rounds of relaxation settle it.
    let mut depth = vec![0usize; n];
    for _ in 0..n {
        let mut changed = false;
        for i in 0..n {
            for j in 0..n {
                if below(i, j) && depth[i] < depth[j] + 1 {
                    depth[i] = depth[j] + 1;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    assert!(
        (0..n).all(|i| (0..n).all(|j| !below(i, j) || depth[i] > depth[j])),
        "strict {kind}-order has a cycle"
    );
    let mut layers = vec![Vec::new(); depth.iter().max().map_or(0, |d| d + 1)];
    for (i, &d) in depth.iter().enumerate() {
        layers[d].push(schemes[i].clone());
    }

    let (mut ties, mut incomparable, mut hasse) = (Vec::new(), Vec::new(), Vec::new());
    for i in 0..n {
        for j in i + 1..n {
            let pair = (schemes[i].clone(), schemes[j].clone());
            match (matrix[i][j], matrix[j][i]) {
                (true, true) => ties.push(pair),
                (false, false) => incomparable.push(pair),
                _ => {}
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            if below(i, j) && !(0..n).any(|k| below(i, k) && below(k, j)) {
                hasse.push((schemes[i].clone(), schemes[j].clone()));
            }
        }
    }
    let means = values
        .iter()
        .map(|v| {
            let m = v.mean();
            format!("{}/{}", m.numer(), m.denom())
        })
        .collect();
    Ok(Ranking {
        set: set.to_string(),
        kind,
        schemes,
        values,
        means,
        matrix,
        layers,
        ties,
        incomparable,
        hasse,
    })
}

impl Ranking {
    fn index(&self, scheme: &str) -> Option<usize> {
        self.schemes.iter().position(|s| s == scheme)
    }

    /// `a` is strictly below `b`.
    pub fn strictly_below(&self, a: &str, b: &str) -> bool {
        match (self.index(a), self.index(b)) {
            (Some(i), Some(j)) => self.matrix[i][j] && !self.matrix[j][i],
            _ => false,
        }
    }

    pub fn render(&self) -> String {
        let sym = self.kind.subset_symbol();
        let mut out = format!("ranking of {} by {sym}, best first\n", self.set);
        for (d, layer) in self.layers.iter().enumerate() {
            for (k, s) in layer.iter().enumerate() {
                let i = self.index(s).expect("layer member is a scheme");
                let mean = self.values[i].mean();
                let label = if k == 0 { format!("{}.", d + 1) } else { String::new() };
                let _ = writeln!(
                    out,
                    "{label:<4}{s:<8}{:<24}mean {}",
                    self.values[i].to_string(),
                    show_rational(&mean)
                );
            }
        }
        let pairs = |out: &mut String, title: &str, rel: &str, list: &[(String, String)]| {
            if !list.is_empty() {
                let _ = writeln!(out, "{title}:");
                for (a, b) in list {
                    let _ = writeln!(out, "  {a} {rel} {b}");
                }
            }
        };
        pairs(&mut out, "ties", &self.kind.equality_symbol(), &self.ties);
        pairs(&mut out, "incomparable", "?", &self.incomparable);
        out
    }

    /// Graphviz rendering of the covering pairs, lower nodes at the bottom.
    pub fn to_dot(&self) -> String {
        let mut out = format!("digraph \"{}\" {{\n  rankdir=BT;\n", escape(&self.set));
        for (i, s) in self.schemes.iter().enumerate() {
            let _ = writeln!(out, "  \"{}\" [label=\"{}\\n{}\"];", escape(s), escape(s), self.values[i]);
        }
        for (a, b) in &self.hasse {
            let _ = writeln!(
                out,
                "  \"{}\" -> \"{}\" [label=\"{}\"];",
                escape(a),
                escape(b),
                self.kind.subset_symbol()
            );
        }
        out.push_str("}\n");
        out
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Evaluation trace of one law on one binding.
pub fn render_trace(law: &Law, label: &str, binding: &Binding) -> Result<(Verdict, String)> {
    let (verdict, guard, claim) = trace_law(law, binding)?;
    let mut out = format!("{label}\n");
    let ids = binding.universe().ids().join(", ");
    let _ = writeln!(out, "  universe {{{ids}}}");
    for (name, set) in binding.sets() {
        let _ = writeln!(out, "  {name} = {set}");
    }
    for (name, family) in binding.families() {
        let members: Vec<&str> = family.members().iter().map(|(m, _)| m.as_str()).collect();
        let _ = writeln!(out, "  {name} = {{{}}}", members.join(", "));
        for (m, set) in family.members() {
            let _ = writeln!(out, "    {m} = {set}");
        }
    }
    section(&mut out, "guard", verdict.guard, &guard);
    section(&mut out, "claim", verdict.claim, &claim);
    Ok((verdict, out))
}

fn section(out: &mut String, name: &str, holds: bool, steps: &[TraceStep]) {
    let _ = writeln!(out, "  {name}: {}", if holds { "holds" } else { "FAILS" });
    for step in steps {
        let mut context: Vec<String> = step.bound.iter().map(|(v, m)| format!("{v} = {m}")).collect();
        if let Some(x) = &step.element {
            context.push(format!("at {x}"));
        }
        let context = if context.is_empty() {
            String::new()
        } else {
            format!("[{}] ", context.join(", "))
        };
        let _ = writeln!(
            out,
            "    {context}{}  {}",
            step.atom,
            if step.verdict { "holds" } else { "FAILS" }
        );
        for (text, value) in &step.operands {
            let _ = writeln!(out, "      {text} = {}", describe_hfe(value));
        }
    }
}

/// Replays every fixture of `law` with full traces.
pub fn explain_law(law: &Law) -> Result<String> {
    let status = format!("{:?}", law.status).to_uppercase();
    let mut out = format!("{}  [{status}]  {}\n", law.id, law.statement());
    if law.fixtures.is_empty() {
        out.push_str("  no fixtures\n");
    }
    for f in &law.fixtures {
        let (_, text) = render_trace(law, &format!("fixture {:?}", f.name), &f.binding)?;
        for line in text.lines() {
            let _ = writeln!(out, "  {line}");
        }
    }
    Ok(out)
}
