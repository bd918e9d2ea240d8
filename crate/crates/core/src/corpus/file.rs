use std::fmt;

use thiserror::Error;

use crate::permcore::{Permutation, MAX_DEGREE};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SectionTag {
    Ambient,
    Socle,
}

impl SectionTag {
    pub fn as_str(self) -> &'static str {
        match self {
            SectionTag::Ambient => "ambient",
            SectionTag::Socle => "socle",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("expected `{0}`")]
    Expected(&'static str),
    #[error("malformed line: {0}")]
    Malformed(String),
    #[error("bad degree {0}")]
    BadDegree(String),
    #[error("expected {expected} images, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("not a bijection")]
    NotABijection,
    #[error("duplicate section `{0}`")]
    DuplicateSection(&'static str),
    #[error("unknown section `{0}`")]
    UnknownSection(String),
    #[error("generator outside any section")]
    GeneratorOutsideSection,
    #[error("a socle section requires an ambient section")]
    SocleWithoutAmbient,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

/// A parsed group definition file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupFile {
    pub name: String,
    pub degree: usize,
    pub sections: Vec<(SectionTag, Vec<Permutation>)>,
}

impl GroupFile {
    pub fn new(name: impl Into<String>, degree: usize) -> Self {
        Self {
            name: name.into(),
            degree,
            sections: Vec::new(),
        }
    }

    pub fn with_section(mut self, tag: SectionTag, gens: Vec<Permutation>) -> Self {
        self.sections.push((tag, gens));
        self
    }

    pub fn section(&self, tag: SectionTag) -> Option<&[Permutation]> {
        self.sections.iter().find(|(t, _)| *t == tag).map(|(_, g)| g.as_slice())
    }

    pub fn ambient(&self) -> &[Permutation] {
        self.section(SectionTag::Ambient).unwrap_or(&[])
    }

    /// The socle generators; a file without a socle section describes a
    /// single group that is its own socle.
    pub fn socle(&self) -> &[Permutation] {
        self.section(SectionTag::Socle).unwrap_or_else(|| self.ambient())
    }

    pub fn has_socle_section(&self) -> bool {
        self.section(SectionTag::Socle).is_some()
    }

    pub fn serialize(&self) -> String {
        let mut out = format!("name {}\ndegree {}\n", self.name, self.degree);
        for (tag, gens) in &self.sections {
            out.push_str("section ");
            out.push_str(tag.as_str());
            out.push('\n');
            for g in gens {
                out.push_str("gen");
                for x in g.images() {
                    out.push(' ');
                    out.push_str(&x.to_string());
                }
                out.push('\n');
            }
        }
        out
    }
}

impl fmt::Display for GroupFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.serialize())
    }
}

fn parse_gen(rest: &str, degree: usize) -> Result<Permutation, ParseErrorKind> {
    let images: Vec<usize> = rest
        .split_whitespace()
        .map(|t| t.parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|_| ParseErrorKind::Malformed(format!("gen {rest}")))?;
    if images.len() != degree {
        return Err(ParseErrorKind::DegreeMismatch {
            expected: degree,
            found: images.len(),
        });
    }
    Permutation::new(images).map_err(|_| ParseErrorKind::NotABijection)
}

/// Parses the group-file grammar: `name`, `degree`, then optional
/// `section ambient|socle` headers each followed by `gen` lines. `#` starts a
/// comment. Without headers, all `gen` lines form one ambient section.
pub fn parse_group_file(text: &str) -> Result<GroupFile, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let err = |line, kind| ParseError { line, kind };

    let (ln, first) = lines.next().ok_or(err(1, ParseErrorKind::Expected("name")))?;
    let name = first
        .strip_prefix("name")
        .filter(|r| r.starts_with(char::is_whitespace))
        .map(str::trim)
        .filter(|r| !r.is_empty())
        .ok_or(err(ln, ParseErrorKind::Expected("name <string>")))?;

    let (ln, second) = lines
        .next()
        .ok_or(err(ln + 1, ParseErrorKind::Expected("degree <n>")))?;
    let degree_text = second
        .strip_prefix("degree")
        .map(str::trim)
        .ok_or(err(ln, ParseErrorKind::Expected("degree <n>")))?;
    let degree: usize = degree_text
        .parse()
        .ok()
        .filter(|&d| (1..=MAX_DEGREE).contains(&d))
        .ok_or(err(ln, ParseErrorKind::BadDegree(degree_text.to_string())))?;

    let mut file = GroupFile::new(name, degree);
    let mut headerless: Vec<Permutation> = Vec::new();
    for (ln, line) in lines {
        let (keyword, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        match keyword {
            "section" => {
                if !headerless.is_empty() {
                    return Err(err(ln, ParseErrorKind::GeneratorOutsideSection));
                }
                let tag = match rest.trim() {
                    "ambient" => SectionTag::Ambient,
                    "socle" => SectionTag::Socle,
                    other => return Err(err(ln, ParseErrorKind::UnknownSection(other.into()))),
                };
                if file.section(tag).is_some() {
                    return Err(err(ln, ParseErrorKind::DuplicateSection(tag.as_str())));
                }
                file.sections.push((tag, Vec::new()));
            }
            "gen" => {
                let g = parse_gen(rest, degree).map_err(|k| err(ln, k))?;
                match file.sections.last_mut() {
                    Some((_, gens)) => gens.push(g),
                    None => headerless.push(g),
                }
            }
            _ => return Err(err(ln, ParseErrorKind::Malformed(line.to_string()))),
        }
    }
    if file.sections.is_empty() {
        file.sections.push((SectionTag::Ambient, headerless));
    }
    if file.section(SectionTag::Ambient).is_none() {
        let ln = text.lines().count();
        return Err(err(ln, ParseErrorKind::SocleWithoutAmbient));
    }
    Ok(file)
}

#[cfg(test)]
mod tests {
    use super::*;

    const A5: &str = "name A5\ndegree 5\ngen 1 2 0 3 4\ngen 1 2 3 4 0\n";

    #[test]
    fn headerless_file() {
        let f = parse_group_file(A5).unwrap();
        assert_eq!(f.name, "A5");
        assert_eq!(f.sections.len(), 1);
        assert_eq!(f.ambient().len(), 2);
        assert_eq!(f.socle(), f.ambient());
        assert!(!f.has_socle_section());
    }

    #[test]
    fn two_sections_and_comments() {
        let text = "# S5 over A5\nname S5/A5   \ndegree 5\nsection ambient\ngen 1 0 2 3 4 # a transposition\ngen 1 2 3 4 0\n\nsection socle\ngen 1 2 0 3 4\ngen 1 2 3 4 0\n";
        let f = parse_group_file(text).unwrap();
        assert_eq!(f.sections.len(), 2);
        assert_eq!(f.name, "S5/A5");
        assert_eq!(f.socle().len(), 2);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = parse_group_file("name X\ndegree 3\ngen 0 0 1\n").unwrap_err();
        assert_eq!(e.line, 3);
        assert_eq!(e.kind, ParseErrorKind::NotABijection);
        assert!(e.to_string().contains("not a bijection"));

        let e = parse_group_file("name X\ndegree 3\ngen 0 1\n").unwrap_err();
        assert!(matches!(
            e.kind,
            ParseErrorKind::DegreeMismatch { expected: 3, found: 2 }
        ));

        let e = parse_group_file("name X\ndegree 3\nsection ambient\nsection ambient\n").unwrap_err();
        assert_eq!((e.line, e.kind), (4, ParseErrorKind::DuplicateSection("ambient")));

        let e = parse_group_file("name X\ndegree 3\nsection socle\ngen 1 2 0\n").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::SocleWithoutAmbient);

        let e = parse_group_file("degree 3\n").unwrap_err();
        assert_eq!(e.line, 1);

        let e = parse_group_file("name X\ndegree 3\ngen 0 1 x\n").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::Malformed(_)));

        let e = parse_group_file("name X\ndegree 0\n").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::BadDegree(_)));

        let e = parse_group_file("name X\ndegree 3\ngen 1 2 0\nsection socle\n").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::GeneratorOutsideSection);
    }

    #[test]
    fn round_trip() {
        let f = parse_group_file(A5).unwrap();
        let again = parse_group_file(&f.serialize()).unwrap();
        assert_eq!(f, again);
    }
}
