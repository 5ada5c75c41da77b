//! Acceptance suite: one test per criterion, each ending with a pass
//! line, run with `cargo test -p quipu --test acceptance`.

use std::collections::BTreeSet;
use std::process::Command;

use num_bigint::BigInt;
use num_traits::Signed;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use quipu::canonical::{ahu_isomorphic, canonical_form, canonical_tree_code, normalize, to_tree};
use quipu::crswap::{cr_swap, first_relation_to_cord, first_relation_to_cord_iterated};
use quipu::enumerate::{classify, enumerate_nakayama};
use quipu::invariants::{cartan_nakayama, coxeter_of_marked, coxeter_of_nakayama, kupisch};
use quipu::presentations::{embed_nakayama, embed_quipu, MarkedQuipuQuiver, Relation};
use quipu::translate::{
    class_invariant, equivalence_family, nakayama_to_quipu, quipu_to_nakayama, strip_length2,
};
use quipu::{derived_equivalent, NakayamaPresentation, QuipuShape};

fn pres(text: &str) -> NakayamaPresentation {
    text.parse().unwrap()
}

fn shape(text: &str) -> QuipuShape {
    text.parse().unwrap()
}

#[test]
fn criterion_1_classification_table_reproduction() {
    let expected_class_counts = [1usize, 1, 1, 2, 2, 4, 6, 11];
    for n in 1..=8usize {
        let golden_path = format!(
            "{}/tests/golden/classify_n{}.txt",
            env!("CARGO_MANIFEST_DIR"),
            n
        );
        let golden = std::fs::read_to_string(&golden_path).unwrap();
        let output = Command::new(env!("CARGO_BIN_EXE_quipu"))
            .args(["classify", "--n", &n.to_string(), "--min-length", "3"])
            .output()
            .unwrap();
        assert!(output.status.success(), "classify --n {n} failed");
        let stdout = String::from_utf8(output.stdout).unwrap();
        assert_eq!(stdout, golden, "classification table differs at n = {n}");
        assert_eq!(
            classify(n, 3).len(),
            expected_class_counts[n - 1],
            "class count differs at n = {n}"
        );
    }
    println!("criterion 1 (byte-exact classification tables, n = 1..8): PASS");
}

#[test]
fn criterion_2_intro_example_class() {
    let listed = [
        "A:13:[1,6,8]:[4,3,5]",
        "A:13:[1,6,8]:[4,3,3]",
        "A:13:[2,6,8]:[3,3,5]",
        "A:13:[2,6,8]:[3,3,3]",
        "A:13:[1,5,9]:[5,3,4]",
        "A:13:[1,4,5,6,8]:[4,2,2,3,5]",
    ];
    let target = canonical_form(&shape("Q:[1,2,0,1]:[2,1,3]"));
    for a in listed {
        assert_eq!(
            class_invariant(&pres(a)).unwrap(),
            target,
            "{a} does not land on the common quipu"
        );
        for b in listed {
            assert!(
                derived_equivalent(&pres(a), &pres(b)).unwrap(),
                "{a} and {b} should be equivalent"
            );
        }
    }
    println!("criterion 2 (six listed algebras share one canonical quipu): PASS");
}

#[test]
fn criterion_3_pinned_translation_pairs() {
    assert_eq!(
        nakayama_to_quipu(&pres("A:14:[2,7,11]:[4,5,3]")).unwrap(),
        shape("Q:[2,2,0,1]:[2,3,1]")
    );
    assert_eq!(
        quipu_to_nakayama(&shape("Q:[2,2,0,1]:[2,3,1]")).unwrap(),
        pres("A:14:[2,7,11]:[4,5,3]")
    );
    assert_eq!(
        normalize(&nakayama_to_quipu(&pres("A:9:[1,3,7]:[3,4,2]")).unwrap()),
        shape("Q:[1,0,3]:[1,2]")
    );
    println!("criterion 3 (pinned translation pairs in both directions): PASS");
}

#[test]
fn criterion_4_round_trip_exhaustive() {
    let mut checked = 0usize;
    for n in 1..=12 {
        for p in enumerate_nakayama(n, 2) {
            let there = nakayama_to_quipu(&p).unwrap();
            let back = quipu_to_nakayama(&there).unwrap();
            assert_eq!(back, p, "round trip failed on {p}");
            checked += 1;
        }
    }
    println!("criterion 4 (round trip on {checked} presentations, n <= 12): PASS");
}

#[test]
fn criterion_5_procedure_agrees_with_closed_form() {
    let mut checked = 0usize;
    for n in 1..=10 {
        for p in enumerate_nakayama(n, 2) {
            let embedded = embed_nakayama(&p).unwrap();
            let mut current = embedded.clone();
            while !current.relations().is_empty() {
                let closed = first_relation_to_cord(&current).unwrap();
                let iterated = first_relation_to_cord_iterated(&current).unwrap();
                assert_eq!(iterated, closed, "procedure mismatch inside {p}");
                current = closed;
            }
            let target = embed_quipu(&nakayama_to_quipu(&p).unwrap());
            assert_eq!(current, target, "full iteration mismatch on {p}");
            checked += 1;
        }
    }
    println!("criterion 5 (swap procedure equals closed form, n <= 10, {checked} cases): PASS");
}

fn random_marked_quiver(rng: &mut StdRng) -> MarkedQuipuQuiver {
    loop {
        let main = rng.random_range(4..=20usize);
        let mut relations: Vec<Relation> = Vec::new();
        let mut start = 1 + rng.random_range(0..3usize);
        while start + 2 <= main && relations.len() < 4 {
            let length = rng.random_range(2..=(main - start).min(6));
            relations.push(Relation::new(start, length));
            start = start + length - 1 + rng.random_range(0..3usize);
            if rng.random_bool(0.3) {
                break;
            }
        }
        if relations.is_empty() {
            continue;
        }
        let internal = |p: usize| relations.iter().any(|r| r.start < p && p < r.end());
        let mut cords = Vec::new();
        let mut budget = 6usize;
        for position in 1..=main {
            if budget == 0 {
                break;
            }
            if !internal(position) && rng.random_bool(0.25) {
                let length = rng.random_range(1..=budget.min(3));
                cords.push((position, length));
                budget -= length;
            }
        }
        return MarkedQuipuQuiver::new(main, cords, relations)
            .expect("generator respects the quiver invariants");
    }
}

#[test]
fn criterion_6_invariant_oracle() {
    // (a) The Coxeter polynomial is unchanged by the swap on 1000
    // random valid marked quivers.
    let mut rng = StdRng::seed_from_u64(0x71b0);
    let mut swaps_checked = 0usize;
    let mut attempts = 0usize;
    while swaps_checked < 1000 {
        attempts += 1;
        assert!(attempts < 20_000, "generator starved");
        let quiver = random_marked_quiver(&mut rng);
        let swappable: Vec<usize> = (0..quiver.relations().len())
            .filter(|&i| cr_swap(&quiver, i).is_ok())
            .collect();
        if swappable.is_empty() {
            continue;
        }
        let index = swappable[rng.random_range(0..swappable.len())];
        let swapped = cr_swap(&quiver, index).unwrap();
        assert_eq!(
            coxeter_of_marked(&quiver),
            coxeter_of_marked(&swapped),
            "swap changed the polynomial of {quiver}"
        );
        swaps_checked += 1;
    }
    println!("criterion 6a (Coxeter polynomial invariant under {swaps_checked} swaps): PASS");

    // (b) Within every class of the table, members and the class
    // quipu's path algebra share one polynomial.
    for n in 1..=8 {
        for class in classify(n, 3) {
            let reference = coxeter_of_marked(&embed_quipu(class.canonical.shape()));
            for member in &class.members {
                assert_eq!(
                    coxeter_of_nakayama(member),
                    reference,
                    "member {member} disagrees with its class quipu"
                );
            }
        }
    }
    // Each presentation also agrees with its own raw-shape quipu quiver.
    for n in 1..=10 {
        for p in enumerate_nakayama(n, 2) {
            let raw = embed_quipu(&nakayama_to_quipu(&p).unwrap());
            assert_eq!(
                coxeter_of_nakayama(&p),
                coxeter_of_marked(&raw),
                "translation changed the polynomial of {p}"
            );
        }
    }
    println!("criterion 6b (class members share the quipu polynomial, n <= 8): PASS");

    // (c) Cartan determinants are all +1 or -1.
    for n in 1..=12 {
        for p in enumerate_nakayama(n, 2) {
            assert!(
                cartan_nakayama(&p).determinant().abs() == BigInt::from(1),
                "non-unimodular Cartan matrix for {p}"
            );
        }
    }
    println!("criterion 6c (unimodular Cartan matrices, n <= 12): PASS");

    // (d) The Kupisch series matches a brute-force longest-path scan.
    for n in 1..=10 {
        for p in enumerate_nakayama(n, 2) {
            let brute: Vec<usize> = (1..=n)
                .map(|i| {
                    let mut best = 0;
                    for j in i..=n {
                        let blocked = p.relations().iter().any(|r| i <= r.start && r.end() <= j);
                        if blocked {
                            break;
                        }
                        best = j - i + 1;
                    }
                    best
                })
                .collect();
            assert_eq!(kupisch(&p), brute, "Kupisch mismatch on {p}");
        }
    }
    println!("criterion 6d (Kupisch matches the brute-force oracle, n <= 10): PASS");
}

#[test]
fn criterion_7_family_coherence() {
    let family = equivalence_family(&pres("A:13:[1,6,8]:[4,3,5]")).unwrap();
    for relative in [
        "A:13:[1,6,8]:[4,3,5]",
        "A:13:[1,6,8]:[4,3,3]",
        "A:13:[2,6,8]:[3,3,5]",
        "A:13:[2,6,8]:[3,3,3]",
        "A:13:[1,5,9]:[5,3,4]",
    ] {
        assert!(family.contains(&pres(relative)), "family misses {relative}");
    }
    // The sixth listed algebra carries length-2 relations; stripping
    // them lands exactly on the family representative.
    assert_eq!(
        strip_length2(&pres("A:13:[1,4,5,6,8]:[4,2,2,3,5]")).unwrap(),
        pres("A:13:[1,6,8]:[4,3,5]")
    );

    for n in 1..=10 {
        for p in enumerate_nakayama(n, 3) {
            let family = equivalence_family(&p).unwrap();
            assert_eq!(family.len(), 8);
            let target = class_invariant(&p).unwrap();
            for member in &family {
                assert_eq!(
                    class_invariant(member).unwrap(),
                    target,
                    "family of {p} split at {member}"
                );
            }
            let distinct: BTreeSet<_> = family.into_iter().collect();
            assert!(distinct.len() <= 8);
        }
    }
    println!("criterion 7 (families are coherent and bounded by 8, n <= 10): PASS");
}

fn all_normalized_shapes(n: usize) -> Vec<QuipuShape> {
    fn compositions(total: usize, parts: usize, min_each: usize) -> Vec<Vec<usize>> {
        if parts == 0 {
            return if total == 0 {
                vec![Vec::new()]
            } else {
                Vec::new()
            };
        }
        let mut out = Vec::new();
        let reserve = min_each * (parts - 1);
        if total < min_each + reserve {
            return out;
        }
        for head in min_each..=total - reserve {
            for mut tail in compositions(total - head, parts - 1, min_each) {
                tail.insert(0, head);
                out.push(tail);
            }
        }
        out
    }
    let mut shapes = vec![QuipuShape::Path { vertices: n }];
    let mut cord_count = 1;
    while n >= 2 * cord_count {
        let budget = n - cord_count;
        for cord_total in cord_count..=budget {
            let segment_total = budget - cord_total;
            for cords in compositions(cord_total, cord_count, 1) {
                for segments in compositions(segment_total, cord_count + 1, 0) {
                    shapes.push(QuipuShape::Branched {
                        segments,
                        cords: cords.clone(),
                    });
                }
            }
        }
        cord_count += 1;
    }
    shapes
}

#[test]
fn criterion_8_isomorphism_oracle() {
    let mut pairs = 0usize;
    for n in 1..=9 {
        let shapes = all_normalized_shapes(n);
        let canonicals: Vec<_> = shapes.iter().map(canonical_form).collect();
        let codes: Vec<_> = shapes
            .iter()
            .map(|s| canonical_tree_code(&to_tree(s)))
            .collect();
        for i in 0..shapes.len() {
            for j in 0..shapes.len() {
                let by_orbit = canonicals[i] == canonicals[j];
                let by_tree = codes[i] == codes[j];
                assert_eq!(
                    by_orbit, by_tree,
                    "oracle disagreement between {} and {}",
                    shapes[i], shapes[j]
                );
                pairs += 1;
            }
        }
    }
    // Shapes of different orders never compare equal.
    assert!(!ahu_isomorphic(
        &to_tree(&shape("Q:[5]:[]")),
        &to_tree(&shape("Q:[6]:[]"))
    ));
    println!("criterion 8 (orbit and tree oracles agree on {pairs} pairs, n <= 9): PASS");
}
