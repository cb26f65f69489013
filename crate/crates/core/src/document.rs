//! JSON documents holding a universe, named sets and named families.
//!
//! ```json
//! {
//!   "universe": ["x", "y"],
//!   "sets": { "A": { "x": ["0.4", "0.4"], "y": ["0.25", "0.2"] } },
//!   "families": { "F": ["A"] }
//! }
//! ```
//!
//! Degrees are strings so that values such as `0.1` survive exactly; any
//! text accepted by [`parse_degree`](crate::parse_degree) may be used.

use std::fs;
use std::path::Path;

use indexmap::IndexMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::degree::{parse_degree, Degree};
use crate::error::{Error, Result};
use crate::hfs::{make_named_hfs, Family, Hfs, Universe};
use crate::laws::{Binding, Law};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    universe: Vec<String>,
    #[serde(default)]
    sets: IndexMap<String, IndexMap<String, Vec<String>>>,
    #[serde(default, skip_serializing_if = "IndexMap::is_empty")]
    families: IndexMap<String, Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    universe: Universe,
    sets: IndexMap<String, Hfs>,
    families: IndexMap<String, Vec<String>>,
}

impl Document {
    pub fn new(universe: Universe) -> Self {
        Document {
            universe,
            sets: IndexMap::new(),
            families: IndexMap::new(),
        }
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn sets(&self) -> &IndexMap<String, Hfs> {
        &self.sets
    }

    pub fn families(&self) -> &IndexMap<String, Vec<String>> {
        &self.families
    }

    /// Adds or replaces a set.
    pub fn insert_set(&mut self, name: impl Into<String>, set: Hfs) -> Result<()> {
        if set.universe() != &self.universe {
            return Err(Error::UniverseMismatch);
        }
        self.sets.insert(name.into(), set);
        Ok(())
    }

    /// Adds or replaces a family of existing sets.
    pub fn insert_family(&mut self, name: impl Into<String>, members: Vec<String>) -> Result<()> {
        let name = name.into();
        self.build_family(&name, &members)?;
        self.families.insert(name, members);
        Ok(())
    }

    pub fn set(&self, name: &str) -> Result<&Hfs> {
        self.sets.get(name).ok_or_else(|| Error::UnknownSet(name.to_string()))
    }

    pub fn family(&self, name: &str) -> Result<Family> {
        let members = self
            .families
            .get(name)
            .ok_or_else(|| Error::UnknownFamily(name.to_string()))?;
        self.build_family(name, members)
    }

    fn build_family(&self, name: &str, members: &[String]) -> Result<Family> {
        let resolved = members
            .iter()
            .map(|m| {
                self.sets
                    .get(m)
                    .map(|s| (m.clone(), s.clone()))
                    .ok_or_else(|| Error::UnknownMember {
                        family: name.to_string(),
                        set: m.clone(),
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        Family::new(resolved)
    }

    pub fn from_json(text: &str) -> Result<Document> {
        let raw: RawDocument =
            serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))?;
        Document::from_raw(raw)
    }

    /// Pretty-printed JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(&self.to_raw()).expect("document serialises");
        text.push('\n');
        text
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Document> {
        let path = path.as_ref();
        let text = fs::read_to_string(path)
            .map_err(|e| Error::Document(format!("{}: {e}", path.display())))?;
        Document::from_json(&text)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        fs::write(path, self.to_json())
            .map_err(|e| Error::Document(format!("{}: {e}", path.display())))
    }

    fn from_raw(raw: RawDocument) -> Result<Document> {
        let universe = Universe::new(raw.universe)?;
        let mut doc = Document::new(universe);
        for (name, assignments) in raw.sets {
            let mut parsed: IndexMap<String, Vec<Degree>> = IndexMap::new();
            for (element, texts) in assignments {
                let degrees = texts
                    .iter()
                    .map(|t| parse_degree(t))
                    .collect::<Result<Vec<_>>>()
                    .map_err(|e| Error::BadDegree {
                        set: name.clone(),
                        element: element.clone(),
                        source: Box::new(e),
                    })?;
                parsed.insert(element, degrees);
            }
            let set = make_named_hfs(&name, &doc.universe, &parsed)?;
            doc.sets.insert(name, set);
        }
        for (name, members) in raw.families {
            doc.insert_family(name, members)?;
        }
        Ok(doc)
    }

    fn to_raw(&self) -> RawDocument {
        let sets = self
            .sets
            .iter()
            .map(|(name, set)| {
                let rows = self
                    .universe
                    .ids()
                    .iter()
                    .zip(set.memberships())
                    .map(|(id, h)| (id.clone(), h.degrees().iter().map(|d| d.to_string()).collect()))
                    .collect();
                (name.clone(), rows)
            })
            .collect();
        RawDocument {
            universe: self.universe.ids().to_vec(),
            sets,
            families: self.families.clone(),
        }
    }

    /// Every set and family as a binding.
    pub fn to_binding(&self) -> Result<Binding> {
        let mut binding = Binding::new(self.universe.clone());
        for (name, set) in &self.sets {
            binding.insert_set(name.clone(), set.clone());
        }
        for name in self.families.keys() {
            binding.insert_family(name.clone(), self.family(name)?);
        }
        Ok(binding)
    }

    /// Only the variables `law` uses.
    pub fn binding_for(&self, law: &Law) -> Result<Binding> {
        let mut binding = Binding::new(self.universe.clone());
        for v in law.set_vars() {
            let set = self.sets.get(v).ok_or_else(|| Error::MissingVariable(v.clone()))?;
            binding.insert_set(v.clone(), set.clone());
        }
        for f in law.family_vars() {
            if !self.families.contains_key(f) {
                return Err(Error::MissingVariable(f.clone()));
            }
            binding.insert_family(f.clone(), self.family(f)?);
        }
        Ok(binding)
    }

    /// Stores a binding; family members become sets named after the member,
    /// qualified with the family name if that would clash.
    pub fn from_binding(binding: &Binding) -> Document {
        let mut doc = Document::new(binding.universe().clone());
        for (name, set) in binding.sets() {
            doc.sets.insert(name.clone(), set.clone());
        }
        for (fam, family) in binding.families() {
            let mut names = Vec::new();
            for (member, set) in family.members() {
                let name = match doc.sets.get(member) {
                    Some(existing) if existing != set => format!("{fam}.{member}"),
                    _ => member.clone(),
                };
                doc.sets.insert(name.clone(), set.clone());
                names.push(name);
            }
            doc.families.insert(fam.clone(), names);
        }
        doc
    }
}

impl Serialize for Document {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_raw().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Document {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawDocument::deserialize(d)?;
        Document::from_raw(raw).map_err(serde::de::Error::custom)
    }
}

/// Builds a set from a CSV table of expert scores.
///
/// The table has a header row and the columns `scheme,expert,score`; each
/// row contributes one degree to the scheme's element. Blank scores (an
/// expert who abstained) are skipped. Elements appear in first-seen order.
pub fn ingest_scores(csv_text: &str, set_name: &str) -> Result<Document> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(csv_text.as_bytes());
    let headers = reader
        .headers()
        .map_err(|e| Error::ScoreTable(e.to_string()))?
        .clone();
    let column = |name: &str| {
        headers
            .iter()
            .position(|h| h.eq_ignore_ascii_case(name))
            .ok_or_else(|| Error::ScoreTable(format!("missing column {name:?}")))
    };
    let (scheme_col, score_col) = (column("scheme")?, column("score")?);
    column("expert")?;

    let mut scores: IndexMap<String, Vec<Degree>> = IndexMap::new();
    for (i, record) in reader.records().enumerate() {
        let line = i + 2;
        let record = record.map_err(|e| Error::ScoreTable(format!("line {line}: {e}")))?;
        let scheme = record.get(scheme_col).unwrap_or("");
        if scheme.is_empty() {
            return Err(Error::ScoreTable(format!("line {line}: empty scheme")));
        }
        let entry = scores.entry(scheme.to_string()).or_default();
        let score = record.get(score_col).unwrap_or("");
        if score.is_empty() {
            continue;
        }
        let degree = parse_degree(score)
            .map_err(|e| Error::ScoreTable(format!("line {line}: {e}")))?;
        entry.push(degree);
    }
    if scores.is_empty() {
        return Err(Error::ScoreTable("no rows".into()));
    }
    if let Some((scheme, _)) = scores.iter().find(|(_, d)| d.is_empty()) {
        return Err(Error::ScoreTable(format!("scheme {scheme:?} has no scores")));
    }
    let universe = Universe::new(scores.keys().cloned())?;
    let set = make_named_hfs(set_name, &universe, &scores)?;
    let mut doc = Document::new(universe);
    doc.insert_set(set_name, set)?;
    Ok(doc)
}
