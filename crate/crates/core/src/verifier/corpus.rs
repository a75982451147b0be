use std::fs;
use std::path::{Path, PathBuf};

use super::subject::Subject;
use crate::constructions::FamilySpec;
use crate::error::{Error, Result};
use crate::fp::DEFAULT_ENUMERATION_LIMIT;
use crate::group::load_cayley_table;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EntrySource {
    Family(FamilySpec),
    File(PathBuf),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    /// Overrides the group's own name in reports.
    pub name: Option<String>,
    pub source: EntrySource,
}

impl CorpusEntry {
    pub fn family(name: &str, spec: &str) -> Result<Self> {
        Ok(CorpusEntry { name: Some(name.to_string()), source: EntrySource::Family(spec.parse()?) })
    }

    /// Identity of the underlying group, used to build each group once.
    pub fn key(&self) -> String {
        let src = match &self.source {
            EntrySource::Family(f) => f.to_string(),
            EntrySource::File(p) => p.display().to_string(),
        };
        match &self.name {
            Some(n) => format!("{n}={src}"),
            None => src,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairEntry {
    pub check: String,
    pub left: CorpusEntry,
    pub right: CorpusEntry,
}

#[derive(Clone, Debug)]
pub struct Corpus {
    pub name: String,
    pub entries: Vec<CorpusEntry>,
    pub pairs: Vec<PairEntry>,
    /// Cap on enumerated cosets and expanded tables.
    pub size_limit: usize,
    pub validate: bool,
}

const DEFAULT_ENTRIES: &[(&str, &str)] = &[
    ("Q8", "quaternion:8"),
    ("D8", "dihedral:8"),
    ("S3", "dihedral:6"),
    ("D16", "dihedral:16"),
    ("Q16", "quaternion:16"),
    ("SD16", "semidihedral:16"),
    ("D32", "dihedral:32"),
    ("E27^3", "gpns:3:2:1-2"),
    ("E27^9", "extraspecial:3:9"),
    ("example1_p2", "example1:2"),
    ("example1_p3", "example1:3"),
    ("example2_p2", "example2:2"),
    ("example2_p3", "example2:3"),
    ("Gothic_2(2,2)", "gothic:2:2,2"),
    ("Gothic_3(3)", "gothic:3:3"),
    ("Gothic_2(3,2)", "gothic:2:3,2"),
    ("Gothic_3(3,2)", "gothic:3:3,2"),
    ("D18", "dihedral:18"),
    ("GD18", "gdihedral:3x3"),
    ("F14", "frobenius:cyclic:7:2"),
    ("F21", "frobenius:cyclic:7:3"),
    ("F42", "frobenius:cyclic:7:6"),
    ("H42", "frobenius:cyclic:7:2*cyclic:3"),
    ("Heis(2,2)", "heisenberg:2:2"),
    ("Heis(3,2)", "heisenberg:3:2"),
];

const DEFAULT_PAIRS: &[(&str, &str, &str)] = &[
    ("cSizes", "Q8", "D8"),
    ("cSizes", "Q16", "D16"),
    ("cSizes", "D18", "GD18"),
    ("cStarEquiv", "Q8", "D8"),
    ("cStarEquiv", "Q16", "D16"),
    ("cStarEquiv", "D18", "GD18"),
    ("cStarEquiv", "F42", "H42"),
    ("isoclinicStar", "Q8", "Q8xC2=quaternion:8*cyclic:2"),
    ("isoclinicStar", "D8", "D8xC2=dihedral:8*cyclic:2"),
    ("isoclinicStar", "S3", "S3xC3=dihedral:6*cyclic:3"),
    ("isoclinicStar", "E27^9", "E27^9xC3=extraspecial:3:9*cyclic:3"),
    ("isoclinicStar", "D16", "D16xC2=dihedral:16*cyclic:2"),
    ("notIsoclinicRefute", "D18", "GD18"),
    ("notIsoclinicRefute", "F42", "H42"),
    ("notIsoclinicRefute", "F21", "H42"),
    ("notIsoclinicRefute", "F14", "F21"),
];

impl Corpus {
    pub fn new(name: impl Into<String>) -> Self {
        Corpus {
            name: name.into(),
            entries: Vec::new(),
            pairs: Vec::new(),
            size_limit: DEFAULT_ENUMERATION_LIMIT,
            validate: false,
        }
    }

    /// The built-in corpus: small 2-groups, extraspecial groups, the class-2
    /// examples and gothic families, the D₁₈ pair, Frobenius groups and
    /// Heisenberg groups, with the pairs the two-group checks compare.
    pub fn default_corpus() -> Self {
        let mut c = Corpus::new("default");
        for (name, spec) in DEFAULT_ENTRIES {
            c.entries.push(CorpusEntry::family(name, spec).expect("valid default entry"));
        }
        for (check, left, right) in DEFAULT_PAIRS {
            let left = c.lookup(left).expect("valid default pair");
            let right = c.lookup(right).expect("valid default pair");
            c.pairs.push(PairEntry { check: check.to_string(), left, right });
        }
        c
    }

    /// `default`, a directory of `.cayley` files, or a list file.
    pub fn load(what: &str) -> Result<Self> {
        if what == "default" {
            return Ok(Self::default_corpus());
        }
        let path = Path::new(what);
        if path.is_dir() {
            let mut files: Vec<PathBuf> = fs::read_dir(path)
                .map_err(|e| Error::Io(format!("{what}: {e}")))?
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|p| p.extension().is_some_and(|x| x == "cayley"))
                .collect();
            files.sort();
            let mut c = Corpus::new(what);
            c.entries = files.into_iter().map(|p| CorpusEntry { name: None, source: EntrySource::File(p) }).collect();
            return Ok(c);
        }
        let text = fs::read_to_string(path).map_err(|e| Error::Io(format!("{what}: {e}")))?;
        Self::parse(what, &text, path.parent().unwrap_or(Path::new(".")))
    }

    /// One entry per line: `spec`, `name = spec`, or a path to a `.cayley`
    /// file (relative to `base`). `pair <checkId> <left> <right>` adds a
    /// pair, each side an entry name or an entry line. `#` starts a comment.
    pub fn parse(name: &str, text: &str, base: &Path) -> Result<Self> {
        let mut c = Corpus::new(name);
        let mut pending = Vec::new();
        for raw in text.lines() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("pair ") {
                let parts: Vec<&str> = rest.split_whitespace().collect();
                if parts.len() != 3 {
                    return Err(Error::InvalidParameters(format!("pair line `{line}` needs a check and two groups")));
                }
                super::check_info(parts[0])?;
                pending.push((parts[0].to_string(), parts[1].to_string(), parts[2].to_string()));
                continue;
            }
            c.entries.push(parse_entry(line, base)?);
        }
        for (check, l, r) in pending {
            let left = c.lookup_in(&l, base)?;
            let right = c.lookup_in(&r, base)?;
            c.pairs.push(PairEntry { check, left, right });
        }
        Ok(c)
    }

    fn lookup(&self, text: &str) -> Result<CorpusEntry> {
        self.lookup_in(text, Path::new("."))
    }

    fn lookup_in(&self, text: &str, base: &Path) -> Result<CorpusEntry> {
        match self.entries.iter().find(|e| e.name.as_deref() == Some(text)) {
            Some(e) => Ok(e.clone()),
            None => parse_entry(text, base),
        }
    }

    /// Builds the group behind an entry.
    pub fn resolve(&self, e: &CorpusEntry) -> Result<Subject> {
        let mut s = match &e.source {
            EntrySource::Family(f) => Subject::from_built(f.build()?, self.size_limit)?,
            EntrySource::File(p) => {
                let text = fs::read_to_string(p).map_err(|err| Error::Io(format!("{}: {err}", p.display())))?;
                Subject::from_table(load_cayley_table(&text, self.validate)?)?
            }
        };
        if let Some(n) = &e.name {
            s.name = n.clone();
        }
        Ok(s)
    }
}

fn parse_entry(line: &str, base: &Path) -> Result<CorpusEntry> {
    let (name, src) = match line.split_once('=') {
        Some((n, s)) => (Some(n.trim().to_string()), s.trim()),
        None => (None, line),
    };
    let source = if src.ends_with(".cayley") {
        EntrySource::File(base.join(src))
    } else {
        EntrySource::Family(
            src.parse()
                .map_err(|e| Error::UnknownEntry(format!("{src}: {e}")))?,
        )
    };
    Ok(CorpusEntry { name, source })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_corpus_resolves() {
        let c = Corpus::default_corpus();
        assert_eq!(c.entries.len(), DEFAULT_ENTRIES.len());
        assert_eq!(c.pairs.len(), DEFAULT_PAIRS.len());
        assert_eq!(c.pairs[0].left.name.as_deref(), Some("Q8"));
        assert_eq!(c.pairs[7].right.name.as_deref(), Some("Q8xC2"));
    }

    #[test]
    fn parses_lists() {
        let text = "# small\nQ8 = quaternion:8\ndihedral:8\npair cSizes Q8 dihedral:8\n";
        let c = Corpus::parse("t", text, Path::new(".")).unwrap();
        assert_eq!(c.entries.len(), 2);
        assert_eq!(c.pairs[0].right.source, EntrySource::Family("dihedral:8".parse().unwrap()));
        assert!(Corpus::parse("t", "nope:3\n", Path::new(".")).is_err());
        assert!(Corpus::parse("t", "pair bogus Q8 Q8\n", Path::new(".")).is_err());
        let s = c.resolve(&c.entries[0]).unwrap();
        assert_eq!(s.name, "Q8");
    }
}
