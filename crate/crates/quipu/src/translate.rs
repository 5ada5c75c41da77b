//! Closed-form translations between almost separate Nakayama
//! presentations and quipu shapes, and the derived-equivalence decision
//! procedure built on canonical forms.
//!
//! A presentation with relations `(n_i, l_i)` on `n` vertices
//! corresponds to the shape with segments
//! `n_0, n_1 + 1 - n_0 - l_0, ..., n + 1 - n_r - l_r` and cords
//! `l_i - 2`; the translation preserves the derived equivalence class of
//! the algebras on both sides and is bijective once zero-length cords
//! are kept in the raw shape.

use thiserror::Error;

use crate::canonical::{canonical_form, CanonicalQuipu};
use crate::presentations::{NakayamaPresentation, QuipuShape, Relation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TranslateError {
    #[error("presentation is not almost separate (relations overlap in more than one arrow)")]
    NotAlmostSeparate,
    #[error("relation {index} has length 2; the family construction needs lengths of at least 3")]
    ShortRelation { index: usize },
    #[error("shape has no main-string vertex before its first cord, no relation can start there")]
    LeadingSegmentEmpty,
    #[error(
        "shape has no main-string vertex after its last cord, the last relation would overflow"
    )]
    TrailingSegmentEmpty,
}

/// Translates an almost separate presentation to its quipu shape. The
/// raw shape is returned: a length-2 relation becomes a cord of length
/// 0, which normalization would remove. The vertex count is preserved.
pub fn nakayama_to_quipu(p: &NakayamaPresentation) -> Result<QuipuShape, TranslateError> {
    if !p.is_almost_separate() {
        return Err(TranslateError::NotAlmostSeparate);
    }
    let relations = p.relations();
    if relations.is_empty() {
        return Ok(QuipuShape::Path {
            vertices: p.vertices(),
        });
    }
    let mut segments = Vec::with_capacity(relations.len() + 1);
    segments.push(relations[0].start);
    for pair in relations.windows(2) {
        segments.push(pair[1].start + 1 - pair[0].end());
    }
    segments.push(p.vertices() + 1 - relations.last().unwrap().end());
    let cords = relations.iter().map(|r| r.length - 2).collect();
    let shape = QuipuShape::Branched { segments, cords };
    debug_assert_eq!(shape.vertex_count(), p.vertices());
    Ok(shape)
}

/// Translates a quipu shape back to a Nakayama presentation. Cords of
/// length 0 are permitted and become relations of length 2. The first
/// and last segments must be nonempty, otherwise a relation would start
/// at vertex 0 or end past the quiver; spellings violating this can be
/// traded for an orbit member that does not.
pub fn quipu_to_nakayama(shape: &QuipuShape) -> Result<NakayamaPresentation, TranslateError> {
    match shape {
        QuipuShape::Path { vertices } => {
            Ok(NakayamaPresentation::relation_free(*vertices)
                .expect("paths have at least one vertex"))
        }
        QuipuShape::Branched { segments, cords } => {
            if segments[0] == 0 {
                return Err(TranslateError::LeadingSegmentEmpty);
            }
            if *segments.last().unwrap() == 0 {
                return Err(TranslateError::TrailingSegmentEmpty);
            }
            let mut relations = Vec::with_capacity(cords.len());
            let mut start = segments[0];
            for (i, &m) in cords.iter().enumerate() {
                relations.push(Relation::new(start, m + 2));
                start += m + segments[i + 1] + 1;
            }
            let p = NakayamaPresentation::new(shape.vertex_count(), relations)
                .expect("translated relations satisfy the presentation constraints");
            debug_assert!(p.is_almost_separate());
            Ok(p)
        }
    }
}

/// Drops every relation of length 2. The canonical quipu of the
/// presentation is unchanged, since such relations map to cords of
/// length 0.
pub fn strip_length2(p: &NakayamaPresentation) -> Result<NakayamaPresentation, TranslateError> {
    if !p.is_almost_separate() {
        return Err(TranslateError::NotAlmostSeparate);
    }
    let kept: Vec<Relation> = p
        .relations()
        .iter()
        .copied()
        .filter(|r| r.length >= 3)
        .collect();
    Ok(NakayamaPresentation::new(p.vertices(), kept)
        .expect("removing relations keeps the presentation valid"))
}

type FormalSwap = fn(&mut [usize], &mut [usize]);

fn formal_swap_front(segments: &mut [usize], cords: &mut [usize]) {
    std::mem::swap(&mut segments[0], &mut cords[0]);
}

fn formal_swap_back(segments: &mut [usize], cords: &mut [usize]) {
    let s = segments.len() - 1;
    let c = cords.len() - 1;
    std::mem::swap(&mut segments[s], &mut cords[c]);
}

fn formal_reverse(segments: &mut [usize], cords: &mut [usize]) {
    segments.reverse();
    cords.reverse();
}

/// The eight derived equivalent presentations obtained by reading the
/// quipu of `p` in all eight ways: identity, reversal, swapping either
/// end of the main string with its outermost cord, and the compositions.
/// Duplicates are kept; palindromic inputs produce fewer distinct
/// members. Every relation of `p` must have length at least 3, which
/// makes all eight spellings directly translatable.
pub fn equivalence_family(
    p: &NakayamaPresentation,
) -> Result<Vec<NakayamaPresentation>, TranslateError> {
    if let Some(index) = p.relations().iter().position(|r| r.length < 3) {
        return Err(TranslateError::ShortRelation { index });
    }
    let shape = nakayama_to_quipu(p)?;
    let (segments, cords) = match &shape {
        QuipuShape::Path { .. } => {
            return Ok(vec![p.clone(); 8]);
        }
        QuipuShape::Branched { segments, cords } => (segments.clone(), cords.clone()),
    };

    // Rows of the family display: plain, last-cord swap, front-cord
    // swap, both; each paired with its reversal.
    let variants: [&[FormalSwap]; 4] = [
        &[],
        &[formal_swap_back],
        &[formal_swap_front],
        &[formal_swap_front, formal_swap_back],
    ];
    let mut family = Vec::with_capacity(8);
    for ops in variants {
        for reversed in [false, true] {
            let mut s = segments.clone();
            let mut c = cords.clone();
            for op in ops {
                op(&mut s, &mut c);
            }
            if reversed {
                formal_reverse(&mut s, &mut c);
            }
            let member = quipu_to_nakayama(&QuipuShape::Branched {
                segments: s,
                cords: c,
            })
            .expect("spellings of a long-relation presentation translate directly");
            family.push(member);
        }
    }
    Ok(family)
}

/// The canonical quipu deciding the derived equivalence class of an
/// almost separate presentation.
pub fn class_invariant(p: &NakayamaPresentation) -> Result<CanonicalQuipu, TranslateError> {
    let stripped = strip_length2(p)?;
    Ok(canonical_form(&nakayama_to_quipu(&stripped)?))
}

/// Whether two almost separate presentations have derived equivalent
/// algebras: true exactly when their canonical quipus agree.
pub fn derived_equivalent(
    a: &NakayamaPresentation,
    b: &NakayamaPresentation,
) -> Result<bool, TranslateError> {
    Ok(class_invariant(a)? == class_invariant(b)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crswap::eliminate_relations;
    use crate::presentations::{embed_nakayama, embed_quipu};

    fn pres(text: &str) -> NakayamaPresentation {
        text.parse().unwrap()
    }

    fn shape(text: &str) -> QuipuShape {
        text.parse().unwrap()
    }

    #[test]
    fn translates_the_three_relation_example() {
        assert_eq!(
            nakayama_to_quipu(&pres("A:14:[2,7,11]:[4,5,3]")).unwrap(),
            shape("Q:[2,2,0,1]:[2,3,1]")
        );
    }

    #[test]
    fn raw_translation_keeps_zero_cords() {
        let raw = nakayama_to_quipu(&pres("A:9:[1,3,7]:[3,4,2]")).unwrap();
        assert_eq!(raw, shape("Q:[1,0,1,1]:[1,2,0]"));
        assert_eq!(crate::canonical::normalize(&raw), shape("Q:[1,0,3]:[1,2]"));
    }

    #[test]
    fn relation_free_translates_to_a_path() {
        assert_eq!(
            nakayama_to_quipu(&pres("A:7:[]:[]")).unwrap(),
            shape("Q:[7]:[]")
        );
    }

    #[test]
    fn translates_back_from_shapes() {
        assert_eq!(
            quipu_to_nakayama(&shape("Q:[1,2,0,1]:[2,1,3]")).unwrap(),
            pres("A:13:[1,6,8]:[4,3,5]")
        );
        assert_eq!(
            quipu_to_nakayama(&shape("Q:[2,2,0,1]:[2,3,1]")).unwrap(),
            pres("A:14:[2,7,11]:[4,5,3]")
        );
        assert_eq!(
            quipu_to_nakayama(&shape("Q:[6]:[]")).unwrap(),
            pres("A:6:[]:[]")
        );
    }

    #[test]
    fn rejects_untranslatable_end_segments() {
        assert_eq!(
            quipu_to_nakayama(&shape("Q:[0,5]:[2]")).unwrap_err(),
            TranslateError::LeadingSegmentEmpty
        );
        assert_eq!(
            quipu_to_nakayama(&shape("Q:[1,0]:[1]")).unwrap_err(),
            TranslateError::TrailingSegmentEmpty
        );
    }

    #[test]
    fn rejects_wide_overlaps() {
        assert_eq!(
            nakayama_to_quipu(&pres("A:9:[1,3]:[4,4]")).unwrap_err(),
            TranslateError::NotAlmostSeparate
        );
    }

    #[test]
    fn strips_length_two_relations() {
        assert_eq!(
            strip_length2(&pres("A:13:[1,4,5,6,8]:[4,2,2,3,5]")).unwrap(),
            pres("A:13:[1,6,8]:[4,3,5]")
        );
        assert_eq!(
            strip_length2(&pres("A:9:[1,3,7]:[3,4,2]")).unwrap(),
            pres("A:9:[1,3]:[3,4]")
        );
        assert_eq!(
            strip_length2(&pres("A:5:[]:[]")).unwrap(),
            pres("A:5:[]:[]")
        );
    }

    #[test]
    fn stripping_preserves_the_class_invariant() {
        for text in [
            "A:13:[1,4,5,6,8]:[4,2,2,3,5]",
            "A:9:[1,3,7]:[3,4,2]",
            "A:7:[2,5]:[3,2]",
        ] {
            let p = pres(text);
            let stripped = strip_length2(&p).unwrap();
            assert_eq!(class_invariant(&p), class_invariant(&stripped));
        }
    }

    #[test]
    fn family_of_the_intro_presentation() {
        let family = equivalence_family(&pres("A:13:[1,6,8]:[4,3,5]")).unwrap();
        let expected: Vec<NakayamaPresentation> = [
            "A:13:[1,6,8]:[4,3,5]",
            "A:13:[1,5,9]:[5,3,4]",
            "A:13:[1,6,8]:[4,3,3]",
            "A:13:[3,5,9]:[3,3,4]",
            "A:13:[2,6,8]:[3,3,5]",
            "A:13:[1,5,9]:[5,3,3]",
            "A:13:[2,6,8]:[3,3,3]",
            "A:13:[3,5,9]:[3,3,3]",
        ]
        .iter()
        .map(|t| pres(t))
        .collect();
        assert_eq!(family, expected);
    }

    #[test]
    fn family_of_a_single_relation_presentation() {
        let family = equivalence_family(&pres("A:8:[1]:[4]")).unwrap();
        for member in ["A:8:[4]:[4]", "A:8:[1]:[6]", "A:8:[2]:[3]"] {
            assert!(family.contains(&pres(member)), "missing {member}");
        }
        let dedup: std::collections::BTreeSet<_> = family.into_iter().collect();
        assert_eq!(dedup.len(), 6);
    }

    #[test]
    fn palindromic_family_collapses() {
        let family = equivalence_family(&pres("A:8:[3]:[3]")).unwrap();
        assert_eq!(family.len(), 8);
        let dedup: std::collections::BTreeSet<_> = family.iter().cloned().collect();
        assert_eq!(dedup.len(), 3);
        for member in &family {
            assert!(derived_equivalent(member, &family[0]).unwrap());
        }
    }

    #[test]
    fn family_requires_long_relations() {
        assert_eq!(
            equivalence_family(&pres("A:9:[1,3,7]:[3,4,2]")).unwrap_err(),
            TranslateError::ShortRelation { index: 2 }
        );
    }

    #[test]
    fn equivalence_examples() {
        assert!(derived_equivalent(
            &pres("A:13:[1,6,8]:[4,3,5]"),
            &pres("A:13:[1,4,5,6,8]:[4,2,2,3,5]")
        )
        .unwrap());
        assert!(!derived_equivalent(&pres("A:8:[1]:[4]"), &pres("A:8:[1]:[5]")).unwrap());
        let p = pres("A:13:[1,6,8]:[4,3,5]");
        assert!(derived_equivalent(&p, &p).unwrap());
    }

    #[test]
    fn round_trips_are_exact_for_small_sizes() {
        for n in 1..=9 {
            for p in crate::enumerate::enumerate_nakayama(n, 2) {
                let shape = nakayama_to_quipu(&p).unwrap();
                assert_eq!(quipu_to_nakayama(&shape).unwrap(), p, "failed on {p}");
            }
        }
    }

    // Every raw shape (zero cords allowed) with nonempty end segments
    // and at most 10 vertices, by direct composition enumeration.
    fn translatable_shapes(max_vertices: usize) -> Vec<QuipuShape> {
        fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
            if parts == 0 {
                return if total == 0 { vec![Vec::new()] } else { Vec::new() };
            }
            let mut out = Vec::new();
            for head in 0..=total {
                for mut tail in compositions(total - head, parts - 1) {
                    tail.insert(0, head);
                    out.push(tail);
                }
            }
            out
        }
        let mut shapes = Vec::new();
        for n in 1..=max_vertices {
            shapes.push(QuipuShape::Path { vertices: n });
            let mut cords = 1;
            // Two end vertices plus one branch vertex per cord must fit.
            while n >= cords + 2 {
                let budget = n - cords;
                for cord_total in 0..=budget.saturating_sub(2) {
                    for m in compositions(cord_total, cords) {
                        for k in compositions(budget - cord_total, cords + 1) {
                            if k[0] >= 1 && *k.last().unwrap() >= 1 {
                                shapes.push(QuipuShape::Branched {
                                    segments: k,
                                    cords: m.clone(),
                                });
                            }
                        }
                    }
                }
                cords += 1;
            }
        }
        shapes
    }

    #[test]
    fn shape_round_trips_are_exact_for_small_sizes() {
        let shapes = translatable_shapes(10);
        assert!(shapes.len() > 500);
        for shape in shapes {
            let p = quipu_to_nakayama(&shape).unwrap();
            assert_eq!(nakayama_to_quipu(&p).unwrap(), shape, "failed on {shape}");
        }
    }

    #[test]
    fn random_larger_families_stay_coherent() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};

        let mut rng = StdRng::seed_from_u64(0xfa71);
        let mut checked = 0;
        while checked < 300 {
            let n = rng.random_range(11..=16usize);
            let mut relations = Vec::new();
            let mut start = 1 + rng.random_range(0..3usize);
            while start + 3 <= n && relations.len() < 4 {
                let length = rng.random_range(3..=(n - start).min(6));
                relations.push(Relation::new(start, length));
                start = start + length - 1 + rng.random_range(0..3usize);
            }
            if relations.is_empty() {
                continue;
            }
            let p = NakayamaPresentation::new(n, relations).unwrap();
            let family = equivalence_family(&p).unwrap();
            let target = class_invariant(&p).unwrap();
            for member in &family {
                assert_eq!(class_invariant(member).unwrap(), target, "family of {p} split");
            }
            let distinct: std::collections::BTreeSet<_> = family.into_iter().collect();
            assert!(distinct.len() <= 8);
            checked += 1;
        }
    }

    #[test]
    fn swap_elimination_agrees_with_the_closed_translation() {
        for n in 1..=8 {
            for p in crate::enumerate::enumerate_nakayama(n, 2) {
                let by_swaps = eliminate_relations(&embed_nakayama(&p).unwrap()).unwrap();
                let by_formula = embed_quipu(&nakayama_to_quipu(&p).unwrap());
                assert_eq!(by_swaps, by_formula, "failed on {p}");
            }
        }
    }
}
