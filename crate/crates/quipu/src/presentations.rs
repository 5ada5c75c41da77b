//! Domain types: linear Nakayama presentations, quipu shapes, and marked
//! quipu quivers, together with their validity checks and the embeddings
//! between them.

use std::collections::BTreeMap;

use thiserror::Error;

/// A zero relation along a linearly oriented type-A quiver: the path of
/// `length` arrows starting at vertex `start` is declared zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Relation {
    pub start: usize,
    pub length: usize,
}

impl Relation {
    pub fn new(start: usize, length: usize) -> Self {
        Relation { start, length }
    }

    /// Vertex the relation ends on (`start + length`).
    pub fn end(&self) -> usize {
        self.start + self.length
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NakayamaError {
    #[error("vertex count must be positive")]
    EmptyQuiver,
    #[error("relation {index} has length {length}, minimum is 2")]
    LengthTooShort { index: usize, length: usize },
    #[error("relation {index} starts at vertex 0, vertices are numbered from 1")]
    StartTooSmall { index: usize },
    #[error("relation starts do not strictly increase at index {index}")]
    StartsNotIncreasing { index: usize },
    #[error("relation ends do not strictly increase at index {index}")]
    EndsNotIncreasing { index: usize },
    #[error("relation {index} ends at vertex {end}, past the last vertex {vertices}")]
    RelationOverflow {
        index: usize,
        end: usize,
        vertices: usize,
    },
}

/// A linear Nakayama algebra given by the number of vertices of the
/// underlying type-A quiver and an ordered list of zero relations.
///
/// Construction validates the defining constraints: every relation has
/// length at least 2, starts and ends strictly increase, and the last
/// relation stays inside the quiver. Relations are kept in the order
/// given; out-of-order input is rejected rather than silently sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NakayamaPresentation {
    vertices: usize,
    relations: Vec<Relation>,
}

/// Checks the defining constraints for a relation list on `vertices`.
pub fn validate_relations(vertices: usize, relations: &[Relation]) -> Result<(), NakayamaError> {
    if vertices == 0 {
        return Err(NakayamaError::EmptyQuiver);
    }
    for (index, rel) in relations.iter().enumerate() {
        if rel.length < 2 {
            return Err(NakayamaError::LengthTooShort {
                index,
                length: rel.length,
            });
        }
        if rel.start < 1 {
            return Err(NakayamaError::StartTooSmall { index });
        }
        if rel.end() > vertices {
            return Err(NakayamaError::RelationOverflow {
                index,
                end: rel.end(),
                vertices,
            });
        }
    }
    for (index, pair) in relations.windows(2).enumerate() {
        if pair[1].start <= pair[0].start {
            return Err(NakayamaError::StartsNotIncreasing { index: index + 1 });
        }
        if pair[1].end() <= pair[0].end() {
            return Err(NakayamaError::EndsNotIncreasing { index: index + 1 });
        }
    }
    Ok(())
}

/// Whether consecutive relations overlap in at most one arrow.
pub fn relations_almost_separate(relations: &[Relation]) -> bool {
    relations
        .windows(2)
        .all(|pair| pair[1].start + 1 >= pair[0].end())
}

impl NakayamaPresentation {
    pub fn new(vertices: usize, relations: Vec<Relation>) -> Result<Self, NakayamaError> {
        validate_relations(vertices, &relations)?;
        Ok(NakayamaPresentation {
            vertices,
            relations,
        })
    }

    /// The hereditary presentation with no relations.
    pub fn relation_free(vertices: usize) -> Result<Self, NakayamaError> {
        Self::new(vertices, Vec::new())
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    /// True when any two relations overlap in at most one arrow.
    pub fn is_almost_separate(&self) -> bool {
        relations_almost_separate(&self.relations)
    }
}

// Ordered by vertex count, then the start list, then the length list;
// this is the member order used in classification tables.
impl Ord for NakayamaPresentation {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.vertices
            .cmp(&other.vertices)
            .then_with(|| {
                self.relations
                    .iter()
                    .map(|r| r.start)
                    .cmp(other.relations.iter().map(|r| r.start))
            })
            .then_with(|| {
                self.relations
                    .iter()
                    .map(|r| r.length)
                    .cmp(other.relations.iter().map(|r| r.length))
            })
    }
}

impl PartialOrd for NakayamaPresentation {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShapeError {
    #[error("a path needs at least one vertex")]
    EmptyPath,
    #[error("segment list must be one longer than the cord list (got {segments} and {cords})")]
    ArityMismatch { segments: usize, cords: usize },
}

/// An open quipu: a tree of maximum degree 3 whose degree-3 vertices all
/// lie on one path (the main string).
///
/// `Branched` stores the main-string segment sizes between consecutive
/// branch points (one more entry than there are cords) and the cord
/// lengths. Cords of length 0 are allowed; see
/// [`crate::canonical::normalize`] for removing them. `Path` covers the
/// cordless case.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum QuipuShape {
    Path {
        vertices: usize,
    },
    Branched {
        segments: Vec<usize>,
        cords: Vec<usize>,
    },
}

impl QuipuShape {
    pub fn path(vertices: usize) -> Result<Self, ShapeError> {
        if vertices == 0 {
            return Err(ShapeError::EmptyPath);
        }
        Ok(QuipuShape::Path { vertices })
    }

    pub fn branched(segments: Vec<usize>, cords: Vec<usize>) -> Result<Self, ShapeError> {
        if segments.len() != cords.len() + 1 || cords.is_empty() {
            return Err(ShapeError::ArityMismatch {
                segments: segments.len(),
                cords: cords.len(),
            });
        }
        Ok(QuipuShape::Branched { segments, cords })
    }

    /// Total number of vertices: main string plus all cords.
    pub fn vertex_count(&self) -> usize {
        match self {
            QuipuShape::Path { vertices } => *vertices,
            QuipuShape::Branched { segments, cords } => {
                cords.len() + segments.iter().sum::<usize>() + cords.iter().sum::<usize>()
            }
        }
    }

    /// Number of vertices on the main string (branch points included).
    pub fn main_string_len(&self) -> usize {
        match self {
            QuipuShape::Path { vertices } => *vertices,
            QuipuShape::Branched { segments, cords } => {
                cords.len() + segments.iter().sum::<usize>()
            }
        }
    }

    /// True for paths and for branched shapes whose cords all have
    /// positive length.
    pub fn is_normalized(&self) -> bool {
        match self {
            QuipuShape::Path { .. } => true,
            QuipuShape::Branched { cords, .. } => cords.iter().all(|&m| m >= 1),
        }
    }

    /// Main-string positions of the branch points, in order.
    pub fn branch_positions(&self) -> Vec<usize> {
        match self {
            QuipuShape::Path { .. } => Vec::new(),
            QuipuShape::Branched { segments, cords } => {
                let mut positions = Vec::with_capacity(cords.len());
                let mut pos = 0;
                for seg in segments.iter().take(cords.len()) {
                    pos += seg + 1;
                    positions.push(pos);
                }
                positions
            }
        }
    }
}

// Total order used for canonical forms and report ordering: vertex count
// first, then paths before branched shapes, then fewer branch points,
// then segment and cord lists lexicographically.
impl Ord for QuipuShape {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use QuipuShape::*;
        self.vertex_count()
            .cmp(&other.vertex_count())
            .then_with(|| match (self, other) {
                (Path { .. }, Path { .. }) => std::cmp::Ordering::Equal,
                (Path { .. }, Branched { .. }) => std::cmp::Ordering::Less,
                (Branched { .. }, Path { .. }) => std::cmp::Ordering::Greater,
                (
                    Branched {
                        segments: s1,
                        cords: c1,
                    },
                    Branched {
                        segments: s2,
                        cords: c2,
                    },
                ) => c1
                    .len()
                    .cmp(&c2.len())
                    .then_with(|| s1.cmp(s2))
                    .then_with(|| c1.cmp(c2)),
            })
    }
}

impl PartialOrd for QuipuShape {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MarkedError {
    #[error("main string needs at least one vertex")]
    EmptyMainString,
    #[error("cord at position {position} lies outside the main string")]
    CordOutOfRange { position: usize },
    #[error("cord at position {position} has length 0")]
    CordLengthZero { position: usize },
    #[error("duplicate cord at position {position}")]
    DuplicateCord { position: usize },
    #[error("invalid relation list: {0}")]
    Relation(#[from] NakayamaError),
    #[error("relations {first} and {second} overlap in more than one arrow")]
    RelationOverlap { first: usize, second: usize },
    #[error("cord at position {position} starts inside relation {index}")]
    CordInsideRelation { position: usize, index: usize },
}

/// A quipu quiver with almost separate relations: a left-to-right main
/// string with cords hanging off it, plus zero relations along the main
/// string. Invariants:
///
/// * every relation fits on the main string,
/// * no cord begins at an internal vertex of a relation,
/// * consecutive relations overlap in at most one arrow.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedQuipuQuiver {
    main: usize,
    cords: BTreeMap<usize, usize>,
    relations: Vec<Relation>,
}

impl MarkedQuipuQuiver {
    pub fn new(
        main: usize,
        cords: impl IntoIterator<Item = (usize, usize)>,
        relations: Vec<Relation>,
    ) -> Result<Self, MarkedError> {
        if main == 0 {
            return Err(MarkedError::EmptyMainString);
        }
        let mut cord_map = BTreeMap::new();
        for (position, length) in cords {
            if position < 1 || position > main {
                return Err(MarkedError::CordOutOfRange { position });
            }
            if length == 0 {
                return Err(MarkedError::CordLengthZero { position });
            }
            if cord_map.insert(position, length).is_some() {
                return Err(MarkedError::DuplicateCord { position });
            }
        }
        validate_relations(main, &relations)?;
        for (index, pair) in relations.windows(2).enumerate() {
            if pair[1].start + 1 < pair[0].end() {
                return Err(MarkedError::RelationOverlap {
                    first: index,
                    second: index + 1,
                });
            }
        }
        for (index, rel) in relations.iter().enumerate() {
            for &position in cord_map.keys() {
                if rel.start < position && position < rel.end() {
                    return Err(MarkedError::CordInsideRelation { position, index });
                }
            }
        }
        Ok(MarkedQuipuQuiver {
            main,
            cords: cord_map,
            relations,
        })
    }

    pub fn main_len(&self) -> usize {
        self.main
    }

    pub fn cords(&self) -> &BTreeMap<usize, usize> {
        &self.cords
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    /// Length of the cord at `position`, 0 when there is none.
    pub fn cord_at(&self, position: usize) -> usize {
        self.cords.get(&position).copied().unwrap_or(0)
    }

    /// Main-string vertices plus all cord vertices.
    pub fn total_vertices(&self) -> usize {
        self.main + self.cords.values().sum::<usize>()
    }

    /// The underlying quipu shape, available once no relations remain.
    pub fn to_shape(&self) -> Option<QuipuShape> {
        if !self.relations.is_empty() {
            return None;
        }
        if self.cords.is_empty() {
            return Some(QuipuShape::Path {
                vertices: self.main,
            });
        }
        let mut segments = Vec::with_capacity(self.cords.len() + 1);
        let mut cords = Vec::with_capacity(self.cords.len());
        let mut prev = 0;
        for (&position, &length) in &self.cords {
            segments.push(position - prev - 1);
            cords.push(length);
            prev = position;
        }
        segments.push(self.main - prev);
        Some(QuipuShape::Branched { segments, cords })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbedError {
    #[error("presentation is not almost separate (relations overlap in more than one arrow)")]
    NotAlmostSeparate,
}

/// Views an almost separate presentation as a marked quipu quiver: same
/// main string, same relations, no cords.
pub fn embed_nakayama(p: &NakayamaPresentation) -> Result<MarkedQuipuQuiver, EmbedError> {
    if !p.is_almost_separate() {
        return Err(EmbedError::NotAlmostSeparate);
    }
    Ok(
        MarkedQuipuQuiver::new(p.vertices(), std::iter::empty(), p.relations().to_vec())
            .expect("almost separate presentations embed directly"),
    )
}

/// Expands a quipu shape into an explicit relation-free quipu quiver.
/// Cords of length 0 leave no trace, so a raw shape and its normalized
/// form expand to the same quiver.
pub fn embed_quipu(shape: &QuipuShape) -> MarkedQuipuQuiver {
    match shape {
        QuipuShape::Path { vertices } => {
            MarkedQuipuQuiver::new(*vertices, std::iter::empty(), Vec::new())
                .expect("paths are valid quivers")
        }
        QuipuShape::Branched { segments, cords } => {
            let main = shape.main_string_len();
            let mut cord_list = Vec::new();
            let mut pos = 0;
            for (seg, &cord) in segments.iter().zip(cords) {
                pos += seg + 1;
                if cord >= 1 {
                    cord_list.push((pos, cord));
                }
            }
            MarkedQuipuQuiver::new(main, cord_list, Vec::new())
                .expect("shape layout yields a valid quiver")
        }
    }
}
