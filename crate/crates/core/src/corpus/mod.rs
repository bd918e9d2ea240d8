//! Group definition files, the bundled catalog, and reference table rows.

mod file;
pub mod tables;

use std::fmt;
use std::path::{Path, PathBuf};

use num_bigint::BigUint;
use thiserror::Error;

use crate::autorbits::AmbientPair;
use crate::bounds::{log2_big, LieFamily, LieFamilySpec};
use crate::permcore::{FiniteGroup, GroupError};
use crate::verifier::SocleShape;

pub use file::{parse_group_file, GroupFile, ParseError, ParseErrorKind, SectionTag};

mod bundled {
    include!(concat!(env!("OUT_DIR"), "/bundled.rs"));
}

/// Environment variable naming a catalog directory to use instead of the
/// bundled one.
pub const CATALOG_ENV: &str = "KCLASS_CATALOG";
pub const MANIFEST_NAME: &str = "manifest.tsv";

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("{file}: {source}")]
    Parse { file: String, source: ParseError },
    #[error("manifest line {line}: {what}")]
    Manifest { line: usize, what: String },
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{0} has no group file (formula-only entry)")]
    FormulaOnly(String),
    #[error("{entry}: {what}")]
    Validation { entry: String, what: String },
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// How the ambient relates to the socle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EntryKind {
    /// The ambient is the full automorphism group of a simple socle.
    Aut,
    /// An almost simple group strictly between T and Aut(T).
    Almost,
    /// A group whose socle is a product of simple groups.
    Product,
}

impl EntryKind {
    pub fn as_str(self) -> &'static str {
        match self {
            EntryKind::Aut => "aut",
            EntryKind::Almost => "almost",
            EntryKind::Product => "product",
        }
    }

    fn parse(s: &str) -> Option<Self> {
        match s {
            "aut" => Some(EntryKind::Aut),
            "almost" => Some(EntryKind::Almost),
            "product" => Some(EntryKind::Product),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Alternating(u32),
    Sporadic(String),
    Lie(LieFamilySpec),
    Product,
}

impl Family {
    fn parse(s: &str) -> Option<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        match parts.as_slice() {
            ["alt", n] => n.parse().ok().filter(|&n| n >= 5).map(Family::Alternating),
            ["spor", name] => Some(Family::Sporadic(name.to_string())),
            ["lie", tag, n, q] => {
                let family = LieFamily::from_tag(tag)?;
                LieFamilySpec::with_q(family, n.parse().ok()?, q.parse().ok()?)
                    .ok()
                    .map(Family::Lie)
            }
            ["product"] => Some(Family::Product),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Alternating(n) => write!(f, "alt:{n}"),
            Family::Sporadic(name) => write!(f, "spor:{name}"),
            Family::Lie(spec) => write!(f, "lie:{}:{}:{}", spec.family.tag(), spec.n, spec.q()),
            Family::Product => f.write_str("product"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KStar {
    Exact(u64),
    /// Only a lower bound is known.
    AtLeast(u64),
}

impl KStar {
    pub fn value(self) -> u64 {
        match self {
            KStar::Exact(k) | KStar::AtLeast(k) => k,
        }
    }

    pub fn exact(self) -> Option<u64> {
        match self {
            KStar::Exact(k) => Some(k),
            KStar::AtLeast(_) => None,
        }
    }
}

impl fmt::Display for KStar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KStar::Exact(k) => write!(f, "{k}"),
            KStar::AtLeast(k) => write!(f, ">={k}"),
        }
    }
}

/// Where an entry's group file lives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FileSource {
    Bundled(&'static str),
    Disk(PathBuf),
}

#[derive(Clone, Debug, PartialEq)]
pub struct CatalogEntry {
    pub name: String,
    /// Relative file path; `None` for formula-only entries.
    pub path: Option<String>,
    pub kind: EntryKind,
    pub family: Family,
    pub socle_order: BigUint,
    /// |A : T|; equals |Out(T)| for `Aut` entries.
    pub out_index: u64,
    pub k_socle: Option<u64>,
    pub k_star: Option<KStar>,
    pub gamma_bound: Option<f64>,
    pub shape: Option<SocleShape>,
    pub source: Option<FileSource>,
}

impl CatalogEntry {
    pub fn is_formula_only(&self) -> bool {
        self.path.is_none()
    }

    /// log₂ of the ambient's order (log₂|Aut(T)| for `Aut` entries).
    pub fn log2_ambient(&self) -> f64 {
        log2_big(&self.socle_order) + (self.out_index as f64).log2()
    }

    pub fn ambient_order(&self) -> BigUint {
        &self.socle_order * self.out_index
    }

    pub fn load(&self) -> Result<GroupFile, CorpusError> {
        let text = match &self.source {
            None => return Err(CorpusError::FormulaOnly(self.name.clone())),
            Some(FileSource::Bundled(text)) => std::borrow::Cow::Borrowed(*text),
            Some(FileSource::Disk(path)) => {
                std::fs::read_to_string(path)
                    .map(std::borrow::Cow::Owned)
                    .map_err(|source| CorpusError::Io {
                        path: path.clone(),
                        source,
                    })?
            }
        };
        parse_group_file(&text).map_err(|source| CorpusError::Parse {
            file: self.path.clone().unwrap_or_default(),
            source,
        })
    }

    fn to_manifest_line(&self) -> String {
        let opt = |v: Option<String>| v.unwrap_or_else(|| "-".into());
        [
            self.name.clone(),
            opt(self.path.clone()),
            self.kind.as_str().into(),
            self.family.to_string(),
            self.socle_order.to_string(),
            self.out_index.to_string(),
            opt(self.k_socle.map(|k| k.to_string())),
            opt(self.k_star.map(|k| k.to_string())),
            opt(self.gamma_bound.map(|g| format!("{g}"))),
            opt(self.shape.as_ref().map(|s| s.to_string())),
        ]
        .join("\t")
    }
}

const COLUMNS: [&str; 10] = [
    "name", "path", "kind", "family", "order_T", "out", "k_T", "k_star", "gamma", "shape",
];

/// Renders entries as a manifest, header line first.
pub fn manifest_text(entries: &[CatalogEntry]) -> String {
    let mut out = format!("# {}\n", COLUMNS.join("\t"));
    for e in entries {
        out.push_str(&e.to_manifest_line());
        out.push('\n');
    }
    out
}

/// Parses a tab-separated manifest; `-` marks an absent field. Sources are
/// left unresolved.
pub fn parse_manifest(text: &str) -> Result<Vec<CatalogEntry>, CorpusError> {
    let mut entries = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let ln = i + 1;
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |what: String| CorpusError::Manifest { line: ln, what };
        let fields: Vec<&str> = line.split('\t').map(str::trim).collect();
        if fields.len() != COLUMNS.len() {
            return Err(bad(format!(
                "expected {} fields, found {}",
                COLUMNS.len(),
                fields.len()
            )));
        }
        let opt = |j: usize| Some(fields[j]).filter(|f| *f != "-");
        let int = |j: usize| -> Result<Option<u64>, CorpusError> {
            opt(j)
                .map(|f| f.parse().map_err(|_| bad(format!("{}: bad integer `{f}`", COLUMNS[j]))))
                .transpose()
        };
        let name = fields[0].to_string();
        let kind = EntryKind::parse(fields[2]).ok_or_else(|| bad(format!("bad kind `{}`", fields[2])))?;
        let family = Family::parse(fields[3]).ok_or_else(|| bad(format!("bad family `{}`", fields[3])))?;
        let socle_order: BigUint = fields[4]
            .parse()
            .map_err(|_| bad(format!("bad order `{}`", fields[4])))?;
        let out_index = int(5)?.ok_or_else(|| bad("out index is required".into()))?;
        let k_star = match opt(7) {
            None => None,
            Some(f) => Some(match f.strip_prefix(">=") {
                Some(v) => KStar::AtLeast(v.parse().map_err(|_| bad(format!("bad k* `{f}`")))?),
                None => KStar::Exact(f.parse().map_err(|_| bad(format!("bad k* `{f}`")))?),
            }),
        };
        if k_star.is_some_and(|k| k.value() < 4) {
            return Err(bad("k* must be at least 4".into()));
        }
        let gamma_bound = opt(8)
            .map(|f| f.parse::<f64>().map_err(|_| bad(format!("bad gamma `{f}`"))))
            .transpose()?;
        let shape = opt(9)
            .map(|f| f.parse::<SocleShape>().map_err(|e| bad(e.to_string())))
            .transpose()?;
        if out_index == 0 {
            return Err(bad("out index must be positive".into()));
        }
        entries.push(CatalogEntry {
            name,
            path: opt(1).map(String::from),
            kind,
            family,
            socle_order,
            out_index,
            k_socle: int(6)?,
            k_star,
            gamma_bound,
            shape,
            source: None,
        });
    }
    Ok(entries)
}

/// A list of entries with resolved file sources.
#[derive(Clone, Debug)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
    origin: String,
}

impl Catalog {
    pub fn bundled() -> Self {
        let mut entries = parse_manifest(bundled::MANIFEST).expect("bundled manifest parses");
        for e in &mut entries {
            if let Some(path) = &e.path {
                let text = bundled::FILES
                    .iter()
                    .find(|(p, _)| p == path)
                    .map(|(_, t)| *t)
                    .expect("bundled manifest names a bundled file");
                e.source = Some(FileSource::Bundled(text));
            }
        }
        Self {
            entries,
            origin: "bundled".into(),
        }
    }

    /// Loads `manifest.tsv` from a directory; file paths are relative to it.
    pub fn from_dir(dir: &Path) -> Result<Self, CorpusError> {
        let manifest = dir.join(MANIFEST_NAME);
        let text = std::fs::read_to_string(&manifest).map_err(|source| CorpusError::Io {
            path: manifest.clone(),
            source,
        })?;
        let mut entries = parse_manifest(&text)?;
        for e in &mut entries {
            e.source = e.path.as_ref().map(|p| FileSource::Disk(dir.join(p)));
        }
        Ok(Self {
            entries,
            origin: dir.display().to_string(),
        })
    }

    /// An explicit directory, else `KCLASS_CATALOG`, else the bundled catalog.
    pub fn resolve(dir: Option<&Path>) -> Result<Self, CorpusError> {
        match dir {
            Some(d) => Self::from_dir(d),
            None => match std::env::var_os(CATALOG_ENV) {
                Some(d) if !d.is_empty() => Self::from_dir(Path::new(&d)),
                _ => Ok(Self::bundled()),
            },
        }
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn get(&self, name: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn origin(&self) -> &str {
        &self.origin
    }
}

pub fn bundled_catalog() -> Vec<CatalogEntry> {
    Catalog::bundled().entries
}

/// Raw text of a bundled file, by relative path.
pub fn bundled_file(path: &str) -> Option<&'static str> {
    bundled::FILES.iter().find(|(p, _)| *p == path).map(|(_, t)| *t)
}

/// Builds the pair from the entry's file and enforces the declared |T| and
/// |A:T|, plus k(T) when declared and |T| fits the cap.
pub fn realize(entry: &CatalogEntry, cap: usize) -> Result<AmbientPair, CorpusError> {
    let file = entry.load()?;
    let invalid = |what: String| CorpusError::Validation {
        entry: entry.name.clone(),
        what,
    };
    let ambient = FiniteGroup::new(file.degree, file.ambient().to_vec())?;
    let pair = AmbientPair::new(ambient, file.socle().to_vec()).map_err(|e| invalid(e.to_string()))?;
    let order_t = BigUint::from(pair.socle().order_exact());
    if order_t != entry.socle_order {
        return Err(invalid(format!("|T| = {order_t}, expected {}", entry.socle_order)));
    }
    let index = pair.out_index();
    if index != entry.out_index as u128 {
        return Err(invalid(format!("|A:T| = {index}, expected {}", entry.out_index)));
    }
    if let Some(k) = entry.k_socle {
        if pair.socle().order_exact() <= cap as u128 {
            let found = pair.socle().classes(cap)?.k();
            if found as u64 != k {
                return Err(invalid(format!("k(T) = {found}, expected {k}")));
            }
        }
    }
    Ok(pair)
}

#[cfg(test)]
mod tests {
    use super::*;

    const MANIFEST: &str = "# header\nA5\ta5.grp\taut\talt:5\t60\t2\t5\t4\t1.727\t1x4\nM23\t-\taut\tspor:M23\t10200960\t1\t-\t17\t0.687\t-\nA20\t-\taut\talt:20\t1216451004088320000\t2\t-\t>=162\t0.395\t-\n";

    #[test]
    fn manifest_round_trip() {
        let entries = parse_manifest(MANIFEST).unwrap();
        assert_eq!(entries.len(), 3);
        assert_eq!(entries[0].family, Family::Alternating(5));
        assert_eq!(entries[2].k_star, Some(KStar::AtLeast(162)));
        assert!(entries[1].is_formula_only());
        let again = parse_manifest(&manifest_text(&entries)).unwrap();
        assert_eq!(entries, again);
    }

    #[test]
    fn manifest_errors() {
        assert!(matches!(
            parse_manifest("A5\ta5.grp\taut\n"),
            Err(CorpusError::Manifest { line: 1, .. })
        ));
        let low_k = "X\t-\taut\talt:5\t60\t2\t-\t3\t-\t-\n";
        assert!(parse_manifest(low_k).is_err());
        let bad_family = "X\t-\taut\tlie:L:2:6\t60\t2\t-\t4\t-\t-\n";
        assert!(parse_manifest(bad_family).is_err());
    }

    #[test]
    fn lie_family_tags() {
        let f = Family::parse("lie:L:2:8").unwrap();
        assert_eq!(f.to_string(), "lie:L:2:8");
        assert!(Family::parse("alt:4").is_none());
    }

    #[test]
    fn formula_only_cannot_load() {
        let entries = parse_manifest(MANIFEST).unwrap();
        assert!(matches!(entries[1].load(), Err(CorpusError::FormulaOnly(_))));
    }

    #[test]
    fn log2_ambient() {
        let e = &parse_manifest(MANIFEST).unwrap()[0];
        assert!((e.log2_ambient() - 120f64.log2()).abs() < 1e-12);
        assert_eq!(e.ambient_order(), BigUint::from(120u32));
    }
}
