//! Textual graph specifications.
//!
//! ```text
//! spec   := family | "file:" PATH | "edges:" pair ("," pair)*
//! family := name (":" int ("," int)*)?
//! pair   := int "-" int
//! ```
//!
//! `cycle:7`, `kmn:2,5`, `petersen`, `file:g.txt` and `edges:0-1,1-2` are
//! all specs. Parsing never panics; every error names the byte column and
//! the token that was expected there.

use std::fmt;
use std::fs::File;
use std::io::BufReader;
use std::path::PathBuf;
use std::str::FromStr;

use rainbow_core::families::MAX_FAMILY_VERTICES;
use rainbow_core::{Error, FamilySpec, Graph, Result};

/// Family names with their parameter counts; `None` means one or more.
pub const FAMILIES: &[(&str, Option<usize>)] = &[
    ("cycle", Some(1)),
    ("wheel", Some(1)),
    ("kmn", Some(2)),
    ("multipartite", None),
    ("petersen", Some(0)),
    ("g7", Some(0)),
    ("gpq", Some(2)),
    ("gpqr", Some(3)),
    ("path", Some(1)),
    ("complete", Some(1)),
    ("star", Some(1)),
    ("comp-sq-cycle", Some(1)),
    ("lemma41", Some(1)),
    ("lemma42", Some(1)),
    ("lemma43", Some(3)),
    ("pair-src", Some(2)),
    ("pair-rcl", Some(2)),
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphSpec {
    Family(FamilySpec),
    File(PathBuf),
    Edges(Vec<(usize, usize)>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input.
    pub pos: usize,
    pub expected: String,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "graph spec column {}: expected {}, found {}", self.pos + 1, self.expected, self.found)
    }
}

impl std::error::Error for ParseError {}

struct Cursor<'a> {
    s: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<char> {
        self.s[self.pos..].chars().next()
    }

    fn at_end(&self) -> bool {
        self.pos == self.s.len()
    }

    fn found(&self) -> String {
        match self.peek() {
            Some(c) => format!("{c:?}"),
            None => "end of input".into(),
        }
    }

    fn fail<T>(&self, expected: impl Into<String>) -> std::result::Result<T, ParseError> {
        Err(ParseError { pos: self.pos, expected: expected.into(), found: self.found() })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> std::result::Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.fail(format!("{c:?}"))
        }
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> &'a str {
        let start = self.pos;
        while let Some(c) = self.peek() {
            if !f(c) {
                break;
            }
            self.pos += c.len_utf8();
        }
        &self.s[start..self.pos]
    }

    fn int(&mut self) -> std::result::Result<usize, ParseError> {
        let start = self.pos;
        let digits = self.take_while(|c| c.is_ascii_digit());
        if digits.is_empty() {
            return self.fail("an integer");
        }
        digits.parse().map_err(|_| ParseError {
            pos: start,
            expected: "an integer that fits in 64 bits".into(),
            found: format!("{digits:?}"),
        })
    }

    fn end(&self) -> std::result::Result<(), ParseError> {
        if self.at_end() {
            Ok(())
        } else {
            self.fail("end of input")
        }
    }
}

fn parse_edges(cur: &mut Cursor) -> std::result::Result<Vec<(usize, usize)>, ParseError> {
    let mut pairs = Vec::new();
    loop {
        let start = cur.pos;
        let u = cur.int()?;
        cur.expect('-')?;
        let v = cur.int()?;
        if u == v {
            return Err(ParseError { pos: start, expected: "two distinct vertices".into(), found: format!("loop {u}-{v}") });
        }
        if u.max(v) >= MAX_FAMILY_VERTICES {
            return Err(ParseError {
                pos: start,
                expected: format!("vertex indices below {MAX_FAMILY_VERTICES}"),
                found: format!("{u}-{v}"),
            });
        }
        pairs.push((u, v));
        if !cur.eat(',') {
            return Ok(pairs);
        }
    }
}

impl FromStr for GraphSpec {
    type Err = ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, ParseError> {
        let mut cur = Cursor { s, pos: 0 };
        let name = cur.take_while(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '-');
        if name.is_empty() {
            return cur.fail("a graph name");
        }
        match name {
            "file" => {
                cur.expect(':')?;
                let path = &s[cur.pos..];
                if path.is_empty() {
                    return cur.fail("a file path");
                }
                return Ok(GraphSpec::File(PathBuf::from(path)));
            }
            "edges" => {
                cur.expect(':')?;
                let pairs = parse_edges(&mut cur)?;
                cur.end()?;
                return Ok(GraphSpec::Edges(pairs));
            }
            _ => {}
        }
        let Some(&(_, arity)) = FAMILIES.iter().find(|(n, _)| *n == name) else {
            let names: Vec<&str> = FAMILIES.iter().map(|(n, _)| *n).collect();
            return Err(ParseError {
                pos: 0,
                expected: format!("file, edges or a family name ({})", names.join(", ")),
                found: format!("{name:?}"),
            });
        };
        let params_at = cur.pos;
        let mut params = Vec::new();
        if cur.eat(':') {
            params.push(cur.int()?);
            while cur.eat(',') {
                params.push(cur.int()?);
            }
        }
        cur.end()?;
        let ok = match arity {
            Some(k) => params.len() == k,
            None => !params.is_empty(),
        };
        if !ok {
            let want = match arity {
                Some(0) => format!("no parameters for {name}"),
                Some(k) => format!("{k} integer parameter(s) for {name}"),
                None => format!("at least one integer parameter for {name}"),
            };
            return Err(ParseError { pos: params_at, expected: want, found: format!("{} parameter(s)", params.len()) });
        }
        let spec = FamilySpec::from_parts(name, &params).map_err(|e| ParseError {
            pos: 0,
            expected: "a known family".into(),
            found: e.to_string(),
        })?;
        Ok(GraphSpec::Family(spec))
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::Family(spec) => write!(f, "{spec}"),
            GraphSpec::File(p) => write!(f, "file:{}", p.display()),
            GraphSpec::Edges(pairs) => {
                let parts: Vec<String> = pairs.iter().map(|(u, v)| format!("{u}-{v}")).collect();
                write!(f, "edges:{}", parts.join(","))
            }
        }
    }
}

impl GraphSpec {
    pub fn build(&self) -> Result<Graph> {
        match self {
            GraphSpec::Family(spec) => spec.build(),
            GraphSpec::File(p) => {
                let file = File::open(p).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?;
                Graph::read_text(BufReader::new(file))
            }
            GraphSpec::Edges(pairs) => {
                let n = pairs.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
                Graph::from_edges(n, pairs)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> std::result::Result<GraphSpec, ParseError> {
        s.parse()
    }

    #[test]
    fn families_and_arity() {
        assert_eq!(parse("cycle:7").unwrap(), GraphSpec::Family(FamilySpec::Cycle(7)));
        assert_eq!(parse("kmn:2,5").unwrap(), GraphSpec::Family(FamilySpec::Kmn(2, 5)));
        assert_eq!(parse("petersen").unwrap(), GraphSpec::Family(FamilySpec::Petersen));
        assert_eq!(
            parse("multipartite:1,2,3").unwrap(),
            GraphSpec::Family(FamilySpec::Multipartite(vec![1, 2, 3]))
        );
        let e = parse("cycle:7,8").unwrap_err();
        assert_eq!(e.pos, 5);
        assert!(e.expected.contains("1 integer parameter"));
        assert!(parse("petersen:3").is_err());
        assert!(parse("multipartite").is_err());
    }

    #[test]
    fn error_positions() {
        let e = parse("cycle:").unwrap_err();
        assert_eq!((e.pos, e.expected.as_str(), e.found.as_str()), (6, "an integer", "end of input"));
        let e = parse("wheel:9x").unwrap_err();
        assert_eq!((e.pos, e.expected.as_str()), (7, "end of input"));
        let e = parse("hexagon:6").unwrap_err();
        assert_eq!(e.pos, 0);
        assert!(e.expected.contains("cycle"));
        let e = parse("edges:0-1,2").unwrap_err();
        assert_eq!((e.pos, e.expected.as_str()), (11, "'-'"));
        let e = parse("edges:0-1,3-3").unwrap_err();
        assert_eq!(e.pos, 10);
        assert!(parse("").is_err());
        assert!(parse("file:").is_err());
        assert!(parse("cycle:99999999999999999999999").unwrap_err().expected.contains("64 bits"));
    }

    #[test]
    fn edges_and_files() {
        let g = parse("edges:0-1,1-2,2-0").unwrap().build().unwrap();
        assert_eq!((g.n(), g.m()), (3, 3));
        assert_eq!(parse("file:some/dir/g.txt").unwrap(), GraphSpec::File("some/dir/g.txt".into()));
        assert!(matches!(parse("file:/nonexistent/graph").unwrap().build(), Err(Error::Io(_))));
    }

    #[test]
    fn display_round_trips() {
        for s in ["cycle:7", "petersen", "multipartite:1,1,5", "edges:0-1,1-2", "lemma43:3,4,5", "file:x.txt"] {
            assert_eq!(parse(s).unwrap().to_string(), s);
        }
    }
}
