//! Exhaustive generation of almost separate presentations and quipus of
//! bounded size, grouping into derived equivalence classes, and report
//! emission in several formats.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::canonical::{canonical_form, to_tree, CanonicalQuipu};
use crate::presentations::{NakayamaPresentation, QuipuShape, Relation};
use crate::translate::class_invariant;

/// One derived equivalence class at a fixed algebra length: the
/// canonical quipu and every presentation mapping to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceClass {
    pub n: usize,
    pub canonical: CanonicalQuipu,
    pub members: Vec<NakayamaPresentation>,
}

fn member_key(p: &NakayamaPresentation) -> (Vec<usize>, Vec<usize>) {
    (
        p.relations().iter().map(|r| r.start).collect(),
        p.relations().iter().map(|r| r.length).collect(),
    )
}

/// All valid almost separate presentations on `n` vertices whose
/// relations have length at least `min_length`, ordered by their start
/// list and then their length list. The relation-free presentation is
/// included.
pub fn enumerate_nakayama(n: usize, min_length: usize) -> Vec<NakayamaPresentation> {
    let mut out = Vec::new();
    let mut current: Vec<Relation> = Vec::new();
    fn extend(
        n: usize,
        min_length: usize,
        min_start: usize,
        current: &mut Vec<Relation>,
        out: &mut Vec<NakayamaPresentation>,
    ) {
        out.push(
            NakayamaPresentation::new(n, current.clone()).expect("generated relations are valid"),
        );
        for start in min_start..=n {
            for length in min_length..=n.saturating_sub(start) {
                current.push(Relation::new(start, length));
                // The next relation may share at most the last arrow.
                extend(n, min_length, start + length - 1, current, out);
                current.pop();
            }
        }
    }
    if n >= 1 {
        extend(n, min_length.max(2), 1, &mut current, &mut out);
    }
    out.sort_by_key(member_key);
    out
}

fn compositions(total: usize, parts: usize, min_each: usize) -> Vec<Vec<usize>> {
    fn rec(
        remaining: usize,
        parts: usize,
        min_each: usize,
        acc: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if parts == 0 {
            if remaining == 0 {
                out.push(acc.clone());
            }
            return;
        }
        let reserve = min_each * (parts - 1);
        if remaining < min_each + reserve {
            return;
        }
        for value in min_each..=remaining - reserve {
            acc.push(value);
            rec(remaining - value, parts - 1, min_each, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(total, parts, min_each, &mut Vec::new(), &mut out);
    out
}

/// All quipus with exactly `n` vertices, one canonical representative
/// each, in the shape order.
pub fn enumerate_quipus(n: usize) -> Vec<CanonicalQuipu> {
    assert!(n >= 1);
    let mut set = std::collections::BTreeSet::new();
    set.insert(canonical_form(&QuipuShape::Path { vertices: n }));
    let mut cord_count = 1;
    // Each cord needs a branch vertex and at least one cord vertex.
    while n > 2 * cord_count {
        let budget = n - cord_count;
        for cord_total in cord_count..budget {
            let segment_total = budget - cord_total;
            for cords in compositions(cord_total, cord_count, 1) {
                for segments in compositions(segment_total, cord_count + 1, 0) {
                    let shape = QuipuShape::Branched {
                        segments: segments.clone(),
                        cords: cords.clone(),
                    };
                    set.insert(canonical_form(&shape));
                }
            }
        }
        cord_count += 1;
    }
    set.into_iter().collect()
}

/// Partitions `enumerate_nakayama(n, min_length)` by canonical quipu.
/// Every quipu of order `n` gets a class, with no members when no
/// presentation reaches it.
pub fn classify(n: usize, min_length: usize) -> Vec<EquivalenceClass> {
    let mut groups: BTreeMap<CanonicalQuipu, Vec<NakayamaPresentation>> = BTreeMap::new();
    for p in enumerate_nakayama(n, min_length) {
        let key = class_invariant(&p).expect("enumerated presentations are almost separate");
        groups.entry(key).or_default().push(p);
    }
    let classes: Vec<EquivalenceClass> = enumerate_quipus(n)
        .into_iter()
        .map(|canonical| {
            let mut members = groups.remove(&canonical).unwrap_or_default();
            members.sort_by_key(member_key);
            EquivalenceClass {
                n,
                canonical,
                members,
            }
        })
        .collect();
    debug_assert!(
        groups.is_empty(),
        "every class canonical is an order-n quipu"
    );
    classes
}

/// Display name for a canonical quipu: Dynkin and extended Dynkin names
/// where they apply, bracketed segment/cord lists otherwise.
pub fn label(canonical: &CanonicalQuipu) -> String {
    match canonical.shape() {
        QuipuShape::Path { vertices } => format!("A{vertices}"),
        QuipuShape::Branched { segments, cords } => match (segments.as_slice(), cords.as_slice()) {
            ([1, 1], [m]) => format!("D{}", m + 3),
            ([1, 2], [2]) => "E6".to_string(),
            ([1, 2], [3]) => "E7".to_string(),
            ([1, 2], [4]) => "E8".to_string(),
            ([2, 2], [2]) => "E~6".to_string(),
            ([1, 3], [3]) => "E~7".to_string(),
            ([1, 2], [5]) => "E~8".to_string(),
            ([1, mid, 1], [1, 1]) => format!("D~{}", mid + 5),
            _ => {
                let seg_list = segments
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(",");
                let cord_list = cords
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(",");
                format!("P({seg_list})({cord_list})")
            }
        },
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Csv,
    Json,
    Latex,
    Dot,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown format '{0}', expected text, csv, json, latex, or dot")]
pub struct UnknownFormat(String);

impl FromStr for Format {
    type Err = UnknownFormat;

    fn from_str(text: &str) -> Result<Self, UnknownFormat> {
        match text {
            "text" => Ok(Format::Text),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            "latex" => Ok(Format::Latex),
            "dot" => Ok(Format::Dot),
            other => Err(UnknownFormat(other.to_string())),
        }
    }
}

fn shape_lists(shape: &QuipuShape) -> (Vec<usize>, Vec<usize>) {
    match shape {
        QuipuShape::Path { vertices } => (vec![*vertices], Vec::new()),
        QuipuShape::Branched { segments, cords } => (segments.clone(), cords.clone()),
    }
}

fn bracket_list(values: &[usize]) -> String {
    let inner = values
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",");
    format!("[{inner}]")
}

fn emit_text(classes: &[EquivalenceClass]) -> String {
    let mut out = String::new();
    for class in classes {
        let name = label(&class.canonical);
        if class.members.is_empty() {
            let _ = writeln!(out, "{name} |");
        } else {
            let members = class
                .members
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join("; ");
            let _ = writeln!(out, "{name} | {members}");
        }
    }
    out
}

fn emit_csv(classes: &[EquivalenceClass]) -> String {
    let mut out = String::from("n,canonical_k,canonical_m,member_count,members\n");
    for class in classes {
        let (k, m) = shape_lists(class.canonical.shape());
        let members = class
            .members
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(";");
        let _ = writeln!(
            out,
            "{},\"{}\",\"{}\",{},\"{}\"",
            class.n,
            bracket_list(&k),
            bracket_list(&m),
            class.members.len(),
            members
        );
    }
    out
}

#[derive(Serialize)]
struct JsonShape {
    k: Vec<usize>,
    m: Vec<usize>,
}

#[derive(Serialize)]
struct JsonClass {
    canonical: JsonShape,
    members: Vec<String>,
}

#[derive(Serialize)]
struct JsonDoc {
    n: usize,
    classes: Vec<JsonClass>,
}

fn emit_json(classes: &[EquivalenceClass]) -> String {
    let n = classes.first().map_or(0, |c| c.n);
    let doc = JsonDoc {
        n,
        classes: classes
            .iter()
            .map(|class| {
                let (k, m) = shape_lists(class.canonical.shape());
                JsonClass {
                    canonical: JsonShape { k, m },
                    members: class.members.iter().map(ToString::to_string).collect(),
                }
            })
            .collect(),
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("classes serialize cleanly");
    text.push('\n');
    text
}

fn latex_label(canonical: &CanonicalQuipu) -> String {
    let name = label(canonical);
    if let Some(rest) = name.strip_prefix("A") {
        if rest.chars().all(|c| c.is_ascii_digit()) {
            return format!("$\\mathbb{{A}}_{{{rest}}}$");
        }
    }
    if let Some(rest) = name.strip_prefix("D~") {
        return format!("$\\tilde{{\\mathbb{{D}}}}_{{{rest}}}$");
    }
    if let Some(rest) = name.strip_prefix("E~") {
        return format!("$\\tilde{{\\mathbb{{E}}}}_{{{rest}}}$");
    }
    if let Some(rest) = name.strip_prefix("D") {
        if rest.chars().all(|c| c.is_ascii_digit()) {
            return format!("$\\mathbb{{D}}_{{{rest}}}$");
        }
    }
    if let Some(rest) = name.strip_prefix("E") {
        if rest.chars().all(|c| c.is_ascii_digit()) {
            return format!("$\\mathbb{{E}}_{{{rest}}}$");
        }
    }
    let (k, m) = shape_lists(canonical.shape());
    format!(
        "$P_{{({})}}^{{({})}}$",
        k.iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(","),
        m.iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",")
    )
}

fn latex_member(p: &NakayamaPresentation) -> String {
    if p.relations().is_empty() {
        return format!("$A_{{{}}}$", p.vertices());
    }
    let starts = p
        .relations()
        .iter()
        .map(|r| r.start.to_string())
        .collect::<Vec<_>>()
        .join(",");
    let lengths = p
        .relations()
        .iter()
        .map(|r| r.length.to_string())
        .collect::<Vec<_>>()
        .join(",");
    format!("$A_{{{},({})}}^{{({})}}$", p.vertices(), starts, lengths)
}

fn emit_latex(classes: &[EquivalenceClass]) -> String {
    let mut out = String::from("\\begin{tabular}{|l|l|}\n\\hline\n");
    for class in classes {
        let members = class
            .members
            .iter()
            .map(latex_member)
            .collect::<Vec<_>>()
            .join(", ");
        let _ = writeln!(out, "{} & {} \\\\", latex_label(&class.canonical), members);
        out.push_str("\\hline\n");
    }
    out.push_str("\\end{tabular}\n");
    out
}

fn emit_dot(classes: &[EquivalenceClass]) -> String {
    let mut out = String::new();
    for (index, class) in classes.iter().enumerate() {
        let tree = to_tree(class.canonical.shape());
        let _ = writeln!(out, "graph class{index} {{");
        let _ = writeln!(out, "  label=\"{}\";", label(&class.canonical));
        if tree.len() == 1 {
            let _ = writeln!(out, "  v0;");
        }
        for v in 0..tree.len() {
            for &w in tree.neighbors(v) {
                if v < w {
                    let _ = writeln!(out, "  v{v} -- v{w};");
                }
            }
        }
        let _ = writeln!(out, "}}");
    }
    out
}

/// Renders classes deterministically in the requested format.
pub fn emit(classes: &[EquivalenceClass], format: Format) -> String {
    match format {
        Format::Text => emit_text(classes),
        Format::Csv => emit_csv(classes),
        Format::Json => emit_json(classes),
        Format::Latex => emit_latex(classes),
        Format::Dot => emit_dot(classes),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pres(text: &str) -> NakayamaPresentation {
        text.parse().unwrap()
    }

    #[test]
    fn enumerates_the_two_smallest_cases() {
        let found = enumerate_nakayama(4, 3);
        assert_eq!(found, vec![pres("A:4:[]:[]"), pres("A:4:[1]:[3]")]);
        assert_eq!(enumerate_nakayama(1, 3), vec![pres("A:1:[]:[]")]);
    }

    // Counting-only recursion over (start, length) choices, kept
    // independent of the constructive enumeration.
    fn count_presentations(n: usize, min_length: usize) -> usize {
        fn completions(
            n: usize,
            min_length: usize,
            min_start: usize,
            memo: &mut Vec<Option<usize>>,
        ) -> usize {
            if let Some(hit) = memo[min_start] {
                return hit;
            }
            let mut total = 1;
            for start in min_start..=n {
                for length in min_length..=n.saturating_sub(start) {
                    total += completions(n, min_length, start + length - 1, memo);
                }
            }
            memo[min_start] = Some(total);
            total
        }
        let mut memo = vec![None; n + 2];
        completions(n, min_length, 1, &mut memo)
    }

    #[test]
    fn enumeration_count_matches_independent_counter() {
        for n in 1..=8 {
            for min_length in [2, 3] {
                assert_eq!(
                    enumerate_nakayama(n, min_length).len(),
                    count_presentations(n, min_length),
                    "count mismatch at n={n}, min_length={min_length}"
                );
            }
        }
    }

    #[test]
    fn enumeration_entries_are_valid_unique_and_sorted() {
        let all = enumerate_nakayama(8, 2);
        for p in &all {
            assert!(p.is_almost_separate());
        }
        let mut sorted = all.clone();
        sorted.sort_by_key(member_key);
        sorted.dedup();
        assert_eq!(all, sorted);
    }

    #[test]
    fn quipu_counts_for_small_orders() {
        assert_eq!(enumerate_quipus(1).len(), 1);
        assert_eq!(enumerate_quipus(4).len(), 2);
        assert_eq!(enumerate_quipus(8).len(), 11);
    }

    #[test]
    fn classify_seven_matches_the_known_classes() {
        let classes = classify(7, 3);
        assert_eq!(classes.len(), 6);
        let star_class = classes
            .iter()
            .find(|c| label(&c.canonical) == "P(1,0,1)(1,2)")
            .expect("the two-cord class exists");
        let expected: Vec<NakayamaPresentation> = [
            "A:7:[1,3]:[3,3]",
            "A:7:[1,3]:[3,4]",
            "A:7:[1,4]:[4,3]",
            "A:7:[2,4]:[3,3]",
        ]
        .iter()
        .map(|t| pres(t))
        .collect();
        assert_eq!(star_class.members, expected);
    }

    #[test]
    fn classify_eight_has_eleven_classes() {
        let classes = classify(8, 3);
        assert_eq!(classes.len(), 11);
        let extended = classes
            .iter()
            .find(|c| label(&c.canonical) == "E~7")
            .expect("the extended class exists");
        let expected: Vec<NakayamaPresentation> = ["A:8:[1]:[5]", "A:8:[3]:[3]", "A:8:[3]:[5]"]
            .iter()
            .map(|t| pres(t))
            .collect();
        assert_eq!(extended.members, expected);
    }

    #[test]
    fn classify_two_is_a_single_path_class() {
        let classes = classify(2, 3);
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].members, vec![pres("A:2:[]:[]")]);
    }

    #[test]
    fn classes_partition_the_enumeration() {
        for n in 1..=8 {
            let classes = classify(n, 3);
            let mut collected: Vec<NakayamaPresentation> = classes
                .iter()
                .flat_map(|c| c.members.iter().cloned())
                .collect();
            collected.sort_by_key(member_key);
            assert_eq!(collected, enumerate_nakayama(n, 3));
            assert!(classes.iter().all(|c| !c.members.is_empty()));
            assert!(classes.iter().all(|c| c.members.len() <= 8));
        }
    }

    #[test]
    fn stripping_length_two_relations_reaches_the_same_classes() {
        for n in 1..=8 {
            let with_short = classify(n, 2);
            let long_only = classify(n, 3);
            assert_eq!(with_short.len(), long_only.len());
            for (a, b) in with_short.iter().zip(&long_only) {
                assert_eq!(a.canonical, b.canonical);
                let mut stripped: Vec<NakayamaPresentation> = a
                    .members
                    .iter()
                    .map(|p| crate::translate::strip_length2(p).unwrap())
                    .collect();
                stripped.sort_by_key(member_key);
                stripped.dedup();
                assert_eq!(stripped, b.members);
            }
        }
    }

    #[test]
    fn text_emission_of_the_order_four_table() {
        let text = emit(&classify(4, 3), Format::Text);
        assert_eq!(text, "A4 | A:4:[]:[]\nD4 | A:4:[1]:[3]\n");
    }

    #[test]
    fn csv_of_no_classes_is_the_header() {
        assert_eq!(
            emit(&[], Format::Csv),
            "n,canonical_k,canonical_m,member_count,members\n"
        );
    }

    #[test]
    fn json_round_trips_with_the_expected_schema() {
        let text = emit(&classify(4, 3), Format::Json);
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(value["n"], 4);
        let classes = value["classes"].as_array().unwrap();
        assert_eq!(classes.len(), 2);
        for class in classes {
            assert!(class["canonical"]["k"].is_array());
            assert!(class["canonical"]["m"].is_array());
            for member in class["members"].as_array().unwrap() {
                let text = member.as_str().unwrap();
                assert!(matches!(
                    crate::notation::parse_object(text),
                    Ok(crate::notation::Object::Nakayama(_))
                ));
            }
        }
    }

    #[test]
    fn dot_output_draws_undirected_trees() {
        let dot = emit(&classify(4, 3), Format::Dot);
        assert!(dot.contains("graph class0 {"));
        assert!(dot.contains("v0 -- v1;"));
        assert!(dot.contains("label=\"D4\";"));
    }

    #[test]
    fn latex_output_mirrors_the_two_column_layout() {
        let latex = emit(&classify(4, 3), Format::Latex);
        assert!(latex.starts_with("\\begin{tabular}{|l|l|}"));
        assert!(latex.contains("$\\mathbb{D}_{4}$ & $A_{4,(1)}^{(3)}$ \\\\"));
        assert!(latex.ends_with("\\end{tabular}\n"));
    }

    #[test]
    fn format_parsing() {
        assert_eq!("csv".parse::<Format>().unwrap(), Format::Csv);
        assert!("yaml".parse::<Format>().is_err());
    }

    #[test]
    fn labels_for_known_shapes() {
        let named = [
            ("Q:[8]:[]", "A8"),
            ("Q:[1,1]:[5]", "D8"),
            ("Q:[1,2]:[4]", "E8"),
            ("Q:[1,3]:[3]", "E~7"),
            ("Q:[2,2]:[2]", "E~6"),
            ("Q:[1,2,1]:[1,1]", "D~7"),
            ("Q:[1,0,1]:[1,3]", "P(1,0,1)(1,3)"),
        ];
        for (shape, expected) in named {
            let canonical = canonical_form(&shape.parse().unwrap());
            assert_eq!(
                canonical.shape(),
                &shape.parse::<QuipuShape>().unwrap(),
                "{shape} should already be canonical"
            );
            assert_eq!(label(&canonical), expected);
        }
    }
}
