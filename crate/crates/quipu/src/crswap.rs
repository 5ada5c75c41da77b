//! The cord/relation swap: a rewrite on marked quipu quivers that trades
//! a relation of length `l` carrying a cord of length `m` at its start
//! vertex for a relation of length `m + 2` one vertex earlier and a cord
//! of length `l - 2` at the far end. The rewrite preserves the derived
//! equivalence class of the bound quiver algebra; the invariants module
//! provides the Coxeter-polynomial check for that claim.
//!
//! Positions are bookkept as follows for a swap at relation `(q, l)`
//! with cord length `m` at `q`: everything strictly left of `q` stays
//! put, the replaced span moves every position at or beyond `q + l - 1`
//! by `m + 2 - l`, the new relation (present when `q >= 2`) runs from
//! `q - 1` to `q + m + 1`, and the new cord of length `l - 2` sits at
//! `q + m + 1`.

use thiserror::Error;

use crate::presentations::{MarkedQuipuQuiver, Relation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SwapError {
    #[error("relation index {index} out of range, quiver has {count} relations")]
    BadIndex { index: usize, count: usize },
    #[error("relation {other} ends inside relation {index}, the swap is not defined there")]
    SharedArrow { index: usize, other: usize },
    #[error("quiver has no relations")]
    NoRelations,
    #[error("quiver does not match the image pattern of a swap: {reason}")]
    PatternMismatch { reason: String },
}

fn mismatch<T>(reason: impl Into<String>) -> Result<T, SwapError> {
    Err(SwapError::PatternMismatch {
        reason: reason.into(),
    })
}

fn shift(value: usize, delta: isize) -> usize {
    usize::try_from(value as isize + delta).expect("positions stay positive")
}

/// Applies the swap to the relation at `rel_index`. No other relation
/// may end strictly inside the swapped span; the only way that can
/// happen in a valid quiver is a relation sharing the first arrow of the
/// swapped one, which is rejected.
pub fn cr_swap(
    quiver: &MarkedQuipuQuiver,
    rel_index: usize,
) -> Result<MarkedQuipuQuiver, SwapError> {
    let relations = quiver.relations();
    let rel = *relations.get(rel_index).ok_or(SwapError::BadIndex {
        index: rel_index,
        count: relations.len(),
    })?;
    let (q, l) = (rel.start, rel.length);
    for (other, r) in relations.iter().enumerate() {
        if other == rel_index {
            continue;
        }
        if r.end() > q && r.end() < q + l {
            return Err(SwapError::SharedArrow {
                index: rel_index,
                other,
            });
        }
    }
    let m = quiver.cord_at(q);
    let delta = m as isize + 2 - l as isize;

    let mut new_relations = Vec::with_capacity(relations.len());
    for (i, r) in relations.iter().enumerate() {
        if i == rel_index {
            if q >= 2 {
                new_relations.push(Relation::new(q - 1, m + 2));
            }
        } else if r.start >= q + l - 1 {
            new_relations.push(Relation::new(shift(r.start, delta), r.length));
        } else {
            new_relations.push(*r);
        }
    }

    let mut new_cords = Vec::new();
    for (&position, &length) in quiver.cords() {
        if position == q {
            continue;
        } else if position >= q + l - 1 {
            new_cords.push((shift(position, delta), length));
        } else {
            new_cords.push((position, length));
        }
    }
    if l >= 3 {
        new_cords.push((q + m + 1, l - 2));
    }

    let result = MarkedQuipuQuiver::new(shift(quiver.main_len(), delta), new_cords, new_relations)
        .expect("the swap preserves all quiver invariants");
    debug_assert_eq!(result.total_vertices(), quiver.total_vertices());
    Ok(result)
}

/// Undoes a swap, addressed by the relation the swap produced. Succeeds
/// exactly when the quiver looks like the image of a swap there, which
/// is checked by replaying the forward swap on the reconstruction.
pub fn cr_swap_inverse(
    quiver: &MarkedQuipuQuiver,
    rel_index: usize,
) -> Result<MarkedQuipuQuiver, SwapError> {
    let relations = quiver.relations();
    let rel = *relations.get(rel_index).ok_or(SwapError::BadIndex {
        index: rel_index,
        count: relations.len(),
    })?;
    let (p, lambda) = (rel.start, rel.length);
    let m = lambda - 2;
    let cord = quiver.cord_at(p + lambda);
    let l = cord + 2;
    let delta = lambda as isize - l as isize;
    if (quiver.main_len() as isize) - delta < 1 {
        return mismatch("main string too short for the undone span");
    }

    let mut old_relations = Vec::with_capacity(relations.len());
    for (i, r) in relations.iter().enumerate() {
        if i == rel_index {
            old_relations.push(Relation::new(p + 1, l));
        } else if r.end() <= p + 1 {
            old_relations.push(*r);
        } else if r.start >= p + lambda {
            old_relations.push(Relation::new(shift(r.start, -delta), r.length));
        } else {
            return mismatch(format!(
                "relation at {} intrudes on the swapped span",
                r.start
            ));
        }
    }

    let mut old_cords = Vec::new();
    for (&position, &length) in quiver.cords() {
        if position == p + lambda {
            continue;
        } else if position <= p {
            old_cords.push((position, length));
        } else if position > p + lambda {
            old_cords.push((shift(position, -delta), length));
        } else {
            return mismatch(format!("cord at {position} intrudes on the swapped span"));
        }
    }
    if m >= 1 {
        old_cords.push((p + 1, m));
    }

    let Ok(candidate) =
        MarkedQuipuQuiver::new(shift(quiver.main_len(), -delta), old_cords, old_relations)
    else {
        return mismatch("reconstruction violates quiver invariants");
    };
    let swapped_index = candidate
        .relations()
        .iter()
        .position(|r| *r == Relation::new(p + 1, l))
        .expect("reconstruction contains the swapped relation");
    if cr_swap(&candidate, swapped_index)? == *quiver {
        Ok(candidate)
    } else {
        mismatch("replaying the swap does not reproduce the quiver")
    }
}

/// Undoes a swap that happened at the very first main-string vertex.
/// Such a swap leaves no relation behind, so it is addressed by the
/// leading cord it produced instead.
pub fn cr_swap_inverse_front(quiver: &MarkedQuipuQuiver) -> Result<MarkedQuipuQuiver, SwapError> {
    let Some((&c_pos, &d)) = quiver.cords().iter().next() else {
        return mismatch("no cord to read the front pattern from");
    };
    if c_pos < 2 {
        return mismatch("front cord sits on the first vertex");
    }
    if let Some(r) = quiver.relations().iter().find(|r| r.start < c_pos) {
        return mismatch(format!(
            "relation at {} starts before the front cord",
            r.start
        ));
    }
    let l = d + 2;
    let m = c_pos - 2;
    let delta = m as isize + 2 - l as isize;

    let mut old_relations = vec![Relation::new(1, l)];
    old_relations.extend(
        quiver
            .relations()
            .iter()
            .map(|r| Relation::new(shift(r.start, -delta), r.length)),
    );
    let mut old_cords = Vec::new();
    if m >= 1 {
        old_cords.push((1, m));
    }
    for (&position, &length) in quiver.cords() {
        if position == c_pos {
            continue;
        }
        old_cords.push((shift(position, -delta), length));
    }

    let Ok(candidate) =
        MarkedQuipuQuiver::new(shift(quiver.main_len(), -delta), old_cords, old_relations)
    else {
        return mismatch("reconstruction violates quiver invariants");
    };
    if cr_swap(&candidate, 0)? == *quiver {
        Ok(candidate)
    } else {
        mismatch("replaying the swap does not reproduce the quiver")
    }
}

/// Closed form for pushing the first relation out into a cord: the
/// relation `(q, l)` disappears, its span contracts to a single arrow
/// through one fresh vertex carrying a cord of length `l - 2`, and
/// everything past the span moves by `2 - l`.
pub fn first_relation_to_cord(quiver: &MarkedQuipuQuiver) -> Result<MarkedQuipuQuiver, SwapError> {
    let rel = *quiver.relations().first().ok_or(SwapError::NoRelations)?;
    let (q, l) = (rel.start, rel.length);
    let delta = 2 - l as isize;

    let new_relations = quiver
        .relations()
        .iter()
        .skip(1)
        .map(|r| Relation::new(shift(r.start, delta), r.length))
        .collect();
    let mut new_cords = Vec::new();
    for (&position, &length) in quiver.cords() {
        if position <= q {
            new_cords.push((position, length));
        } else {
            new_cords.push((shift(position, delta), length));
        }
    }
    if l >= 3 {
        new_cords.push((q + 1, l - 2));
    }

    let result = MarkedQuipuQuiver::new(shift(quiver.main_len(), delta), new_cords, new_relations)
        .expect("the contraction preserves all quiver invariants");
    debug_assert_eq!(result.total_vertices(), quiver.total_vertices());
    Ok(result)
}

/// The same operation performed as repeated swaps of the leading
/// relation; one swap per main-string vertex up to and including the
/// relation start. Returns each intermediate quiver, the last one being
/// the result.
///
/// The final swap happens at vertex 1 and folds any cord found there
/// into the main string. When vertex 1 is cordless (in particular for
/// every embedded presentation) the outcome coincides with
/// [`first_relation_to_cord`] position by position; otherwise the two
/// spell the same quipu rooted differently.
pub fn first_relation_to_cord_steps(
    quiver: &MarkedQuipuQuiver,
) -> Result<Vec<MarkedQuipuQuiver>, SwapError> {
    let rel = *quiver.relations().first().ok_or(SwapError::NoRelations)?;
    let mut steps = Vec::with_capacity(rel.start);
    let mut current = quiver.clone();
    for _ in 0..rel.start {
        current = cr_swap(&current, 0)?;
        steps.push(current.clone());
    }
    Ok(steps)
}

/// Iterated variant of [`first_relation_to_cord`].
pub fn first_relation_to_cord_iterated(
    quiver: &MarkedQuipuQuiver,
) -> Result<MarkedQuipuQuiver, SwapError> {
    Ok(first_relation_to_cord_steps(quiver)?
        .pop()
        .expect("at least one swap happens"))
}

/// Pushes every relation out into a cord, front to back, leaving a
/// relation-free quipu quiver.
pub fn eliminate_relations(quiver: &MarkedQuipuQuiver) -> Result<MarkedQuipuQuiver, SwapError> {
    let mut current = quiver.clone();
    while !current.relations().is_empty() {
        current = first_relation_to_cord(&current)?;
    }
    Ok(current)
}
