//! Plain-text notation for the three object kinds.
//!
//! ```text
//! nakayama := "A:" INT ":[" INT-list "]:[" INT-list "]"
//! quipu    := "Q:[" INT-list "]:[" INT-list "]"
//! marked   := "M:" INT ":[" pair-list "]:[" pair-list "]"
//! pair     := "(" INT "," INT ")"
//! ```
//!
//! Lists are comma separated and may be empty; whitespace is not allowed.
//! For `A:` the two lists are relation starts and relation lengths, for
//! `Q:` they are main-string segments and cord lengths (a path is spelled
//! with a single segment and no cords, `Q:[5]:[]`), for `M:` they are
//! cords as `(position,length)` pairs and relations as `(start,length)`
//! pairs. Rendering produces the canonical spelling, so parsing after
//! rendering is the identity.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::presentations::{
    MarkedError, MarkedQuipuQuiver, NakayamaError, NakayamaPresentation, QuipuShape, Relation,
    ShapeError,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {position}: expected {expected}")]
    Syntax { position: usize, expected: String },
    #[error("invalid presentation: {0}")]
    Nakayama(#[from] NakayamaError),
    #[error("invalid quipu shape: {0}")]
    Shape(#[from] ShapeError),
    #[error("invalid marked quiver: {0}")]
    Marked(#[from] MarkedError),
    #[error("starts list has {starts} entries but lengths list has {lengths}")]
    ListLengthMismatch { starts: usize, lengths: usize },
}

/// Any of the three parseable objects, dispatched on the leading tag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Object {
    Nakayama(NakayamaPresentation),
    Shape(QuipuShape),
    Marked(MarkedQuipuQuiver),
}

pub fn parse_object(text: &str) -> Result<Object, ParseError> {
    match text.as_bytes().first() {
        Some(b'A') => Ok(Object::Nakayama(text.parse()?)),
        Some(b'Q') => Ok(Object::Shape(text.parse()?)),
        Some(b'M') => Ok(Object::Marked(text.parse()?)),
        _ => Err(ParseError::Syntax {
            position: 0,
            expected: "one of the tags 'A:', 'Q:', 'M:'".into(),
        }),
    }
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn fail<T>(&self, expected: &str) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            position: self.pos,
            expected: expected.to_string(),
        })
    }

    fn literal(&mut self, lit: &str) -> Result<(), ParseError> {
        if self.bytes[self.pos..].starts_with(lit.as_bytes()) {
            self.pos += lit.len();
            Ok(())
        } else {
            self.fail(&format!("'{lit}'"))
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn integer(&mut self) -> Result<usize, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return self.fail("an integer");
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| ParseError::Syntax {
                position: start,
                expected: "an integer within range".into(),
            })
    }

    fn int_list(&mut self) -> Result<Vec<usize>, ParseError> {
        self.literal("[")?;
        let mut items = Vec::new();
        if self.peek() != Some(b']') {
            loop {
                items.push(self.integer()?);
                if self.peek() == Some(b',') {
                    self.pos += 1;
                } else {
                    break;
                }
            }
        }
        self.literal("]")?;
        Ok(items)
    }

    fn pair_list(&mut self) -> Result<Vec<(usize, usize)>, ParseError> {
        self.literal("[")?;
        let mut items = Vec::new();
        if self.peek() != Some(b']') {
            loop {
                self.literal("(")?;
                let a = self.integer()?;
                self.literal(",")?;
                let b = self.integer()?;
                self.literal(")")?;
                items.push((a, b));
                if self.peek() == Some(b',') {
                    self.pos += 1;
                } else {
                    break;
                }
            }
        }
        self.literal("]")?;
        Ok(items)
    }

    fn end(&self) -> Result<(), ParseError> {
        if self.pos == self.bytes.len() {
            Ok(())
        } else {
            Err(ParseError::Syntax {
                position: self.pos,
                expected: "end of input".into(),
            })
        }
    }
}

impl FromStr for NakayamaPresentation {
    type Err = ParseError;

    fn from_str(text: &str) -> Result<Self, ParseError> {
        let mut c = Cursor::new(text);
        c.literal("A:")?;
        let vertices = c.integer()?;
        c.literal(":")?;
        let starts = c.int_list()?;
        c.literal(":")?;
        let lengths = c.int_list()?;
        c.end()?;
        if starts.len() != lengths.len() {
            return Err(ParseError::ListLengthMismatch {
                starts: starts.len(),
                lengths: lengths.len(),
            });
        }
        let relations = starts
            .into_iter()
            .zip(lengths)
            .map(|(start, length)| Relation::new(start, length))
            .collect();
        Ok(NakayamaPresentation::new(vertices, relations)?)
    }
}

impl fmt::Display for NakayamaPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A:{}:[", self.vertices())?;
        for (i, rel) in self.relations().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", rel.start)?;
        }
        write!(f, "]:[")?;
        for (i, rel) in self.relations().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", rel.length)?;
        }
        write!(f, "]")
    }
}

impl FromStr for QuipuShape {
    type Err = ParseError;

    fn from_str(text: &str) -> Result<Self, ParseError> {
        let mut c = Cursor::new(text);
        c.literal("Q:")?;
        let segments = c.int_list()?;
        c.literal(":")?;
        let cords = c.int_list()?;
        c.end()?;
        if cords.is_empty() {
            if segments.len() != 1 {
                return Err(ParseError::Shape(ShapeError::ArityMismatch {
                    segments: segments.len(),
                    cords: 0,
                }));
            }
            Ok(QuipuShape::path(segments[0])?)
        } else {
            Ok(QuipuShape::branched(segments, cords)?)
        }
    }
}

impl fmt::Display for QuipuShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (segments, cords): (Vec<usize>, Vec<usize>) = match self {
            QuipuShape::Path { vertices } => (vec![*vertices], Vec::new()),
            QuipuShape::Branched { segments, cords } => (segments.clone(), cords.clone()),
        };
        write!(f, "Q:[")?;
        for (i, k) in segments.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{k}")?;
        }
        write!(f, "]:[")?;
        for (i, m) in cords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for MarkedQuipuQuiver {
    type Err = ParseError;

    fn from_str(text: &str) -> Result<Self, ParseError> {
        let mut c = Cursor::new(text);
        c.literal("M:")?;
        let main = c.integer()?;
        c.literal(":")?;
        let cords = c.pair_list()?;
        c.literal(":")?;
        let relations = c.pair_list()?;
        c.end()?;
        let relations = relations
            .into_iter()
            .map(|(start, length)| Relation::new(start, length))
            .collect();
        Ok(MarkedQuipuQuiver::new(main, cords, relations)?)
    }
}

impl fmt::Display for MarkedQuipuQuiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M:{}:[", self.main_len())?;
        for (i, (position, length)) in self.cords().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "({position},{length})")?;
        }
        write!(f, "]:[")?;
        for (i, rel) in self.relations().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "({},{})", rel.start, rel.length)?;
        }
        write!(f, "]")
    }
}
