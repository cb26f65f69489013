//! Random instances for law checking.
//!
//! Guards of the form `∀x φ(x)` are satisfied element by element: because
//! elements are drawn independently, rejecting per element samples exactly
//! the conditional distribution while needing far fewer attempts than
//! rejecting whole bindings. Proposals mix uniform draws with constructive
//! moves ("shift the degrees of an earlier operand upward") so that narrow
//! guards such as `⊂ₙ` do not starve.

use rand::seq::index;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::formula::{Binding, Formula, Term};
use super::Law;
use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::hfe::Hfe;
use crate::hfs::{Family, Hfs, Universe};
use crate::relations::RelationKind;

/// Inclusive size range.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SizeRange {
    pub min: usize,
    pub max: usize,
}

impl SizeRange {
    pub const fn new(min: usize, max: usize) -> Self {
        SizeRange { min, max }
    }

    fn sample(&self, rng: &mut impl Rng) -> usize {
        rng.gen_range(self.min..=self.max)
    }

    fn validate(&self, what: &str) -> Result<()> {
        if self.min == 0 || self.min > self.max {
            return Err(Error::InvalidConfig(format!(
                "{what} range {}..={} must be non-empty and start at 1 or more",
                self.min, self.max
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorConfig {
    pub seed: u64,
    pub universe_size: SizeRange,
    pub cardinality: SizeRange,
    /// Degrees are drawn from `{0, 1/d, …, d/d}`.
    pub degree_grid: u64,
    pub trials: u64,
    /// Member count of generated families.
    pub family_size: SizeRange,
    /// Proposals per universe element before a trial is abandoned.
    pub attempt_cap: u32,
}

impl Default for GeneratorConfig {
    fn default() -> Self {
        GeneratorConfig {
            seed: 0x5eed_2024,
            universe_size: SizeRange::new(1, 4),
            cardinality: SizeRange::new(1, 6),
            degree_grid: 100,
            trials: 10_000,
            family_size: SizeRange::new(1, 5),
            attempt_cap: 1_000,
        }
    }
}

impl GeneratorConfig {
    pub fn validate(&self) -> Result<()> {
        self.universe_size.validate("universe size")?;
        self.cardinality.validate("cardinality")?;
        self.family_size.validate("family size")?;
        if self.degree_grid == 0 {
            return Err(Error::InvalidConfig("degree grid denominator must be at least 1".into()));
        }
        if self.degree_grid > u32::MAX as u64 {
            return Err(Error::InvalidConfig("degree grid denominator is too large".into()));
        }
        if self.attempt_cap == 0 {
            return Err(Error::InvalidConfig("attempt cap must be at least 1".into()));
        }
        Ok(())
    }
}

/// Deterministic random set for `(config.seed, stream_index)`.
pub fn random_hfs(config: &GeneratorConfig, stream_index: u64) -> Result<Hfs> {
    config.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(stream_index);
    let n = config.universe_size.sample(&mut rng);
    let grid = Grid::new(config);
    let memberships = (0..n).map(|_| grid.to_hfe(grid.random(&mut rng))).collect();
    Hfs::from_hfes(Universe::numbered(n), memberships)
}

/// Which generated operand(s) a hint refers to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Slot {
    Set(String),
    /// Every member of the family.
    Members(String),
    /// The member chosen as witness for an existential guard.
    Witness(String),
}

/// A constructive proposal linking two operands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Hint {
    /// `lo ⊂ₖ hi`.
    Rel { kind: RelationKind, lo: Slot, hi: Slot },
    /// `lo ⊂ₛₒₜ hi`.
    Sot { lo: Slot, hi: Slot },
    /// `a =ₖ b`.
    Equal { kind: RelationKind, a: Slot, b: Slot },
    /// Multiset-equal copies.
    Same { a: Slot, b: Slot },
    /// A constant element (every degree equal).
    Constant(Slot),
}

/// Probability of taking an applicable constructive proposal.
const HINT_PROBABILITY: f64 = 0.75;
/// Whole-binding retries when a non-pointwise guard clause fails.
const GLOBAL_RETRIES: usize = 16;

struct Grid {
    d: u64,
    card: SizeRange,
}

impl Grid {
    fn new(config: &GeneratorConfig) -> Self {
        Grid {
            d: config.degree_grid,
            card: config.cardinality,
        }
    }

    fn to_hfe(&self, ticks: Vec<u64>) -> Hfe {
        let degrees = ticks
            .into_iter()
            .map(|t| Degree::new(t, self.d).expect("tick within grid"))
            .collect();
        Hfe::new(degrees).expect("non-empty proposal")
    }

    fn card(&self, rng: &mut impl Rng) -> usize {
        self.card.sample(rng)
    }

    fn random(&self, rng: &mut impl Rng) -> Vec<u64> {
        let n = self.card(rng);
        (0..n).map(|_| rng.gen_range(0..=self.d)).collect()
    }

    fn within(&self, rng: &mut impl Rng, lo: u64, hi: u64, n: usize) -> Vec<u64> {
        (0..n).map(|_| rng.gen_range(lo..=hi)).collect()
    }

    /// Unchanged a third of the time, otherwise uniform in `[t, d]`.
    fn up(&self, rng: &mut impl Rng, t: u64) -> u64 {
        if rng.gen_bool(1.0 / 3.0) {
            t
        } else {
            rng.gen_range(t..=self.d)
        }
    }

    fn down(&self, rng: &mut impl Rng, t: u64) -> u64 {
        if rng.gen_bool(1.0 / 3.0) {
            t
        } else {
            rng.gen_range(0..=t)
        }
    }

    /// Count in `[lo, hi] ∩ cardinality range`.
    fn card_between(&self, rng: &mut impl Rng, lo: usize, hi: usize) -> Option<usize> {
        let lo = lo.max(self.card.min).max(1);
        let hi = hi.min(self.card.max);
        (lo <= hi).then(|| rng.gen_range(lo..=hi))
    }

    fn sum(t: &[u64]) -> u128 {
        t.iter().map(|&v| v as u128).sum()
    }

    fn mean_le(a: &[u64], b: &[u64]) -> bool {
        Self::sum(a) * b.len() as u128 <= Self::sum(b) * a.len() as u128
    }

    /// Some `b` with `a ⊂ₖ b`; `a` is descending.
    fn above(&self, rng: &mut impl Rng, kind: RelationKind, a: &[u64]) -> Option<Vec<u64>> {
        let (top, bottom) = (a[0], *a.last().unwrap());
        use RelationKind::*;
        match kind {
            P => {
                let mut b = self.random(rng);
                b[0] = self.up(rng, top);
                Some(b)
            }
            A => {
                let n = self.card(rng);
                let mut b = self.within(rng, bottom, self.d, n);
                b[0] = self.up(rng, top);
                Some(b)
            }
            M => {
                if rng.gen_bool(0.5) {
                    let b = self.random(rng);
                    if Self::mean_le(a, &b) {
                        return Some(b);
                    }
                }
                Some(a.iter().map(|&t| self.up(rng, t)).collect())
            }
            S => {
                let n = self.card_between(rng, 1, a.len())?;
                Some(a[..n].iter().map(|&t| self.up(rng, t)).collect())
            }
            T => {
                let n = self.card_between(rng, a.len() + 1, usize::MAX)?;
                let mut b: Vec<u64> = a.iter().map(|&t| self.up(rng, t)).collect();
                b.extend(self.within(rng, 0, self.d, n - a.len()));
                Some(b)
            }
            N => {
                let n = self.card(rng);
                Some(self.within(rng, top, self.d, n))
            }
        }
    }

    /// Some `a` with `a ⊂ₖ b`; `b` is descending.
    fn below(&self, rng: &mut impl Rng, kind: RelationKind, b: &[u64]) -> Option<Vec<u64>> {
        let (top, bottom) = (b[0], *b.last().unwrap());
        use RelationKind::*;
        match kind {
            P => {
                let n = self.card(rng);
                Some(self.within(rng, 0, top, n))
            }
            A => {
                let n = self.card(rng);
                let mut a = self.within(rng, 0, top, n);
                let i = rng.gen_range(0..n);
                a[i] = rng.gen_range(0..=bottom);
                Some(a)
            }
            M => {
                if rng.gen_bool(0.5) {
                    let a = self.random(rng);
                    if Self::mean_le(&a, b) {
                        return Some(a);
                    }
                }
                Some(b.iter().map(|&t| self.down(rng, t)).collect())
            }
            S => {
                let n = self.card_between(rng, b.len(), usize::MAX)?;
                let mut a: Vec<u64> = b.iter().map(|&t| self.down(rng, t)).collect();
                let floor = *a.iter().min().unwrap();
                a.extend(self.within(rng, 0, floor, n - b.len()));
                Some(a)
            }
            T => {
                let n = self.card_between(rng, 1, b.len().checked_sub(1)?)?;
                Some(b[..n].iter().map(|&t| self.down(rng, t)).collect())
            }
            N => {
                let n = self.card(rng);
                Some(self.within(rng, 0, bottom, n))
            }
        }
    }

    /// Some `t` with `s =ₖ t`.
    fn equal(&self, rng: &mut impl Rng, kind: RelationKind, s: &[u64]) -> Option<Vec<u64>> {
        let (top, bottom) = (s[0], *s.last().unwrap());
        use RelationKind::*;
        match kind {
            P => {
                let n = self.card(rng);
                let mut t = self.within(rng, 0, top, n);
                t[0] = top;
                Some(t)
            }
            A => {
                let min = if top == bottom { 1 } else { 2 };
                let n = self.card_between(rng, min, usize::MAX)?;
                let mut t = self.within(rng, bottom, top, n);
                t[0] = top;
                t[n - 1] = bottom;
                Some(t)
            }
            M => {
                let mut t = s.to_vec();
                if t.len() * 2 <= self.card.max && rng.gen_bool(0.5) {
                    t.extend_from_slice(s);
                }
                // Move mass between two positions; the sum is unchanged.
                for _ in 0..rng.gen_range(0..=3) {
                    if t.len() < 2 {
                        break;
                    }
                    let i = rng.gen_range(0..t.len());
                    let j = rng.gen_range(0..t.len());
                    if i == j {
                        continue;
                    }
                    let room = (self.d - t[i]).min(t[j]);
                    let delta = rng.gen_range(0..=room);
                    t[i] += delta;
                    t[j] -= delta;
                }
                Some(t)
            }
            S => Some(s.to_vec()),
            T => None,
            N => {
                if top != bottom {
                    return None;
                }
                Some(vec![top; self.card(rng)])
            }
        }
    }

    fn constant(&self, rng: &mut impl Rng) -> Vec<u64> {
        let v = rng.gen_range(0..=self.d);
        vec![v; self.card(rng)]
    }
}

/// A guard clause checked one element at a time.
enum Pointwise {
    Plain(Formula),
    /// Body with a member variable bound to the family's chosen witness.
    Witness {
        var: String,
        family: usize,
        body: Formula,
    },
}

#[derive(Clone, Copy)]
enum FamilyShape {
    Free,
    /// Members are a subset of another family's members.
    SubsetOf(usize),
}

/// Proposal recipe for one slot.
enum Move {
    Above(RelationKind, usize),
    Below(RelationKind, usize),
    Equal(RelationKind, usize),
    Copy(usize),
    Constant,
}

/// Precomputed sampling plan for a law.
pub(crate) struct Sampler {
    sets: Vec<String>,
    families: Vec<(String, FamilyShape)>,
    pointwise: Vec<Pointwise>,
    hints: Vec<Hint>,
    guard: Formula,
}

/// Slot assignment for one trial.
struct Layout {
    universe: Universe,
    slots: usize,
    members: Vec<Vec<(String, usize)>>,
    witness: Vec<Option<usize>>,
}

impl Layout {
    fn expand(&self, sampler: &Sampler, slot: &Slot) -> Vec<usize> {
        match slot {
            Slot::Set(name) => sampler
                .sets
                .iter()
                .position(|s| s == name)
                .into_iter()
                .collect(),
            Slot::Members(f) => sampler
                .family_index(f)
                .map(|i| self.members[i].iter().map(|(_, s)| *s).collect())
                .unwrap_or_default(),
            Slot::Witness(f) => sampler
                .family_index(f)
                .and_then(|i| self.witness[i])
                .into_iter()
                .collect(),
        }
    }
}

impl Sampler {
    pub(crate) fn new(law: &Law) -> Self {
        let families: Vec<(String, FamilyShape)> = law
            .family_vars()
            .iter()
            .map(|f| (f.clone(), FamilyShape::Free))
            .collect();
        let mut sampler = Sampler {
            sets: law.set_vars().to_vec(),
            families,
            pointwise: Vec::new(),
            hints: Vec::new(),
            guard: law.guard.clone(),
        };
        sampler.classify(&law.guard);
        derive_hints(&law.guard, &mut Vec::new(), &mut sampler.hints);
        sampler.hints.extend(law.hints.iter().cloned());
        sampler
    }

    fn family_index(&self, name: &str) -> Option<usize> {
        self.families.iter().position(|(f, _)| f == name)
    }

    fn classify(&mut self, f: &Formula) {
        match f {
            Formula::True => {}
            Formula::And(parts) => parts.iter().for_each(|p| self.classify(p)),
            Formula::Everywhere(body) => self.pointwise.push(Pointwise::Plain((**body).clone())),
            Formula::ForAllMembers { var, family, body } => {
                if let Formula::Everywhere(inner) = body.as_ref() {
                    self.pointwise.push(Pointwise::Plain(Formula::ForAllMembers {
                        var: var.clone(),
                        family: family.clone(),
                        body: inner.clone(),
                    }));
                }
            }
            Formula::ExistsMember { var, family, body } => {
                if let (Formula::Everywhere(inner), Some(i)) =
                    (body.as_ref(), self.family_index(family))
                {
                    self.pointwise.push(Pointwise::Witness {
                        var: var.clone(),
                        family: i,
                        body: (**inner).clone(),
                    });
                }
            }
            Formula::Subfamily(sub, sup) => {
                if let (Some(i), Some(j)) = (self.family_index(sub), self.family_index(sup)) {
                    if i != j {
                        self.families[i].1 = FamilyShape::SubsetOf(j);
                    }
                }
            }
            // Anything else is only checked on the assembled binding.
            _ => {}
        }
    }

    fn layout(&self, config: &GeneratorConfig, rng: &mut ChaCha8Rng) -> Layout {
        let n = config.universe_size.sample(rng);
        let mut slots = self.sets.len();
        let mut members: Vec<Vec<(String, usize)>> = vec![Vec::new(); self.families.len()];
        for (i, (_, shape)) in self.families.iter().enumerate() {
            if let FamilyShape::Free = shape {
                let m = config.family_size.sample(rng);
                members[i] = (0..m).map(|k| (format!("H{}", k + 1), slots + k)).collect();
                slots += m;
            }
        }
        for (i, (_, shape)) in self.families.iter().enumerate() {
            if let FamilyShape::SubsetOf(j) = *shape {
                let parent = members[j].clone();
                let k = rng.gen_range(1..=parent.len());
                members[i] = index::sample(rng, parent.len(), k)
                    .into_iter()
                    .map(|p| parent[p].clone())
                    .collect();
            }
        }
        let mut witness = vec![None; self.families.len()];
        for p in &self.pointwise {
            if let Pointwise::Witness { family, .. } = p {
                let m = &members[*family];
                witness[*family] = Some(m[rng.gen_range(0..m.len())].1);
            }
        }
        for h in &self.hints {
            for slot in hint_slots(h) {
                if let Slot::Witness(f) = slot {
                    if let Some(i) = self.family_index(f) {
                        if witness[i].is_none() {
                            let m = &members[i];
                            witness[i] = Some(m[rng.gen_range(0..m.len())].1);
                        }
                    }
                }
            }
        }
        Layout {
            universe: Universe::numbered(n),
            slots,
            members,
            witness,
        }
    }

    /// For every slot, the constructive moves available once earlier slots
    /// are drawn.
    fn moves(&self, layout: &Layout) -> Vec<Vec<Move>> {
        let mut moves: Vec<Vec<Move>> = (0..layout.slots).map(|_| Vec::new()).collect();
        let pairs = |a: &Slot, b: &Slot| {
            let (xs, ys) = (layout.expand(self, a), layout.expand(self, b));
            let mut out = Vec::new();
            for &x in &xs {
                for &y in &ys {
                    if x != y {
                        out.push((x, y));
                    }
                }
            }
            out
        };
        for h in &self.hints {
            match h {
                Hint::Rel { kind, lo, hi } => {
                    for (l, u) in pairs(lo, hi) {
                        if l < u {
                            moves[u].push(Move::Above(*kind, l));
                        } else {
                            moves[l].push(Move::Below(*kind, u));
                        }
                    }
                }
                Hint::Sot { lo, hi } => {
                    for (l, u) in pairs(lo, hi) {
                        for kind in [RelationKind::S, RelationKind::T] {
                            if l < u {
                                moves[u].push(Move::Above(kind, l));
                            } else {
                                moves[l].push(Move::Below(kind, u));
                            }
                        }
                    }
                }
                Hint::Equal { kind, a, b } => {
                    for (x, y) in pairs(a, b) {
                        moves[x.max(y)].push(Move::Equal(*kind, x.min(y)));
                    }
                }
                Hint::Same { a, b } => {
                    for (x, y) in pairs(a, b) {
                        moves[x.max(y)].push(Move::Copy(x.min(y)));
                    }
                }
                Hint::Constant(slot) => {
                    for x in layout.expand(self, slot) {
                        moves[x].push(Move::Constant);
                    }
                }
            }
        }
        moves
    }

    fn propose(&self, grid: &Grid, rng: &mut ChaCha8Rng, moves: &[Move], drawn: &[Vec<u64>]) -> Vec<u64> {
        if !moves.is_empty() && rng.gen_bool(HINT_PROBABILITY) {
            let built = match &moves[rng.gen_range(0..moves.len())] {
                Move::Above(k, src) => grid.above(rng, *k, &drawn[*src]),
                Move::Below(k, src) => grid.below(rng, *k, &drawn[*src]),
                Move::Equal(k, src) => grid.equal(rng, *k, &drawn[*src]),
                Move::Copy(src) => Some(drawn[*src].clone()),
                Move::Constant => Some(grid.constant(rng)),
            };
            if let Some(mut t) = built {
                t.sort_unstable_by(|a, b| b.cmp(a));
                return t;
            }
        }
        let mut t = grid.random(rng);
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    fn assemble(&self, layout: &Layout, universe: &Universe, columns: Vec<Vec<Hfe>>) -> Binding {
        let set_of = |slot: usize| {
            Hfs::from_hfes(universe.clone(), columns[slot].clone()).expect("one membership per element")
        };
        let mut binding = Binding::new(universe.clone());
        for (i, name) in self.sets.iter().enumerate() {
            binding.insert_set(name.clone(), set_of(i));
        }
        for (i, (name, _)) in self.families.iter().enumerate() {
            let members = layout.members[i]
                .iter()
                .map(|(m, slot)| (m.clone(), set_of(*slot)))
                .collect();
            binding.insert_family(name.clone(), Family::new(members).expect("valid family"));
        }
        binding
    }

    fn pointwise_ok(&self, layout: &Layout, single: &Universe, column: &[Hfe]) -> bool {
        if self.pointwise.is_empty() {
            return true;
        }
        let columns: Vec<Vec<Hfe>> = column.iter().map(|h| vec![h.clone()]).collect();
        let mut binding = self.assemble(layout, single, columns);
        let witness_sets: Vec<(String, Hfs)> = self
            .pointwise
            .iter()
            .filter_map(|p| match p {
                Pointwise::Witness { var, family, .. } => {
                    let slot = layout.witness[*family].expect("witness chosen");
                    Some((
                        var.clone(),
                        Hfs::from_hfes(single.clone(), vec![column[slot].clone()]).unwrap(),
                    ))
                }
                Pointwise::Plain(_) => None,
            })
            .collect();
        for (var, set) in witness_sets {
            if binding.set(&var).is_none() {
                binding.insert_set(var, set);
            }
        }
        self.pointwise.iter().all(|p| match p {
            Pointwise::Plain(f) => f.eval_at(&binding, 0),
            Pointwise::Witness { body, .. } => body.eval_at(&binding, 0),
        })
    }

    /// A guard-satisfying binding, or `None` when the attempt cap is hit.
    pub(crate) fn sample(&self, config: &GeneratorConfig, rng: &mut ChaCha8Rng) -> Option<Binding> {
        let grid = Grid::new(config);
        let single = Universe::new(["x"]).expect("one id");
        for _ in 0..GLOBAL_RETRIES {
            let layout = self.layout(config, rng);
            let moves = self.moves(&layout);
            let n = layout.universe.len();
            let mut columns: Vec<Vec<Hfe>> = vec![Vec::with_capacity(n); layout.slots];
            for _ in 0..n {
                let mut accepted = None;
                for _ in 0..config.attempt_cap {
                    let mut drawn: Vec<Vec<u64>> = Vec::with_capacity(layout.slots);
                    for slot_moves in &moves {
                        let t = self.propose(&grid, rng, slot_moves, &drawn);
                        drawn.push(t);
                    }
                    let column: Vec<Hfe> = drawn.into_iter().map(|t| grid.to_hfe(t)).collect();
                    if self.pointwise_ok(&layout, &single, &column) {
                        accepted = Some(column);
                        break;
                    }
                }
                let column = accepted?;
                for (slot, h) in column.into_iter().enumerate() {
                    columns[slot].push(h);
                }
            }
            let binding = self.assemble(&layout, &layout.universe, columns);
            if self.guard.eval(&binding) {
                return Some(binding);
            }
        }
        None
    }
}

fn hint_slots(h: &Hint) -> Vec<&Slot> {
    match h {
        Hint::Rel { lo, hi, .. } | Hint::Sot { lo, hi } => vec![lo, hi],
        Hint::Equal { a, b, .. } | Hint::Same { a, b } => vec![a, b],
        Hint::Constant(s) => vec![s],
    }
}

fn derive_hints(f: &Formula, ctx: &mut Vec<(String, Slot)>, out: &mut Vec<Hint>) {
    let resolve = |t: &Term, ctx: &Vec<(String, Slot)>| match t {
        Term::Var(name) => Some(
            ctx.iter()
                .rev()
                .find(|(v, _)| v == name)
                .map(|(_, s)| s.clone())
                .unwrap_or_else(|| Slot::Set(name.clone())),
        ),
        _ => None,
    };
    match f {
        Formula::And(parts) => {
            if let [Formula::Rel(k1, t1, u1), Formula::Rel(k2, t2, u2)] = parts.as_slice() {
                if k1 == k2 && t1 == u2 && u1 == t2 {
                    if let (Some(a), Some(b)) = (resolve(t1, ctx), resolve(u1, ctx)) {
                        out.push(Hint::Equal { kind: *k1, a, b });
                        return;
                    }
                }
            }
            parts.iter().for_each(|p| derive_hints(p, ctx, out));
        }
        Formula::Everywhere(body) => derive_hints(body, ctx, out),
        Formula::ForAllMembers { var, family, body } => {
            ctx.push((var.clone(), Slot::Members(family.clone())));
            derive_hints(body, ctx, out);
            ctx.pop();
        }
        Formula::ExistsMember { var, family, body } => {
            ctx.push((var.clone(), Slot::Witness(family.clone())));
            derive_hints(body, ctx, out);
            ctx.pop();
        }
        Formula::Rel(kind, t, u) => {
            if let (Some(lo), Some(hi)) = (resolve(t, ctx), resolve(u, ctx)) {
                out.push(Hint::Rel { kind: *kind, lo, hi });
            }
        }
        Formula::Sot(t, u) => {
            if let (Some(lo), Some(hi)) = (resolve(t, ctx), resolve(u, ctx)) {
                out.push(Hint::Sot { lo, hi });
            }
        }
        Formula::Same(t, u) => {
            if let (Some(a), Some(b)) = (resolve(t, ctx), resolve(u, ctx)) {
                out.push(Hint::Same { a, b });
            }
        }
        _ => {}
    }
}

/// Per-trial random stream for a law.
pub(crate) fn trial_rng(seed: u64, law_id: &str, trial: u64) -> ChaCha8Rng {
    // FNV-1a keeps law streams apart without depending on std's hasher.
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in law_id.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ h);
    rng.set_stream(trial);
    rng
}

/// Guard-satisfying binding for `law` in the given trial, or `None` when
/// rejection sampling starves.
pub fn sample_binding(law: &Law, config: &GeneratorConfig, trial: u64) -> Result<Option<Binding>> {
    config.validate()?;
    let sampler = Sampler::new(law);
    Ok(sampler.sample(config, &mut trial_rng(config.seed, &law.id, trial)))
}
