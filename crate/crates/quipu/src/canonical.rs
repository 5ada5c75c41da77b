//! Quipu shape arithmetic: trivial-cord removal, the end-swap and
//! reversal symmetries, canonical representatives, and an independent
//! tree-isomorphism oracle.

use std::collections::BTreeSet;

use crate::presentations::{embed_quipu, MarkedQuipuQuiver, QuipuShape};

/// Removes all cords of length 0. Dropping the cord at slot `i` merges
/// the neighbouring segments into one of size `k_i + k_{i+1} + 1`, the
/// extra vertex being the former branch point. A shape whose cords all
/// vanish collapses to a path. Vertex counts are preserved.
pub fn normalize(shape: &QuipuShape) -> QuipuShape {
    match shape {
        QuipuShape::Path { .. } => shape.clone(),
        QuipuShape::Branched { segments, cords } => {
            let mut segments = segments.clone();
            let mut cords = cords.clone();
            while let Some(i) = cords.iter().position(|&m| m == 0) {
                let merged = segments[i] + segments[i + 1] + 1;
                segments[i] = merged;
                segments.remove(i + 1);
                cords.remove(i);
            }
            if cords.is_empty() {
                QuipuShape::Path {
                    vertices: segments[0],
                }
            } else {
                QuipuShape::Branched { segments, cords }
            }
        }
    }
}

fn swap_front(shape: &QuipuShape) -> QuipuShape {
    match shape {
        QuipuShape::Path { .. } => shape.clone(),
        QuipuShape::Branched { segments, cords } => {
            let mut segments = segments.clone();
            let mut cords = cords.clone();
            std::mem::swap(&mut segments[0], &mut cords[0]);
            normalize(&QuipuShape::Branched { segments, cords })
        }
    }
}

fn swap_back(shape: &QuipuShape) -> QuipuShape {
    match shape {
        QuipuShape::Path { .. } => shape.clone(),
        QuipuShape::Branched { segments, cords } => {
            let mut segments = segments.clone();
            let mut cords = cords.clone();
            let last_seg = segments.len() - 1;
            let last_cord = cords.len() - 1;
            std::mem::swap(&mut segments[last_seg], &mut cords[last_cord]);
            normalize(&QuipuShape::Branched { segments, cords })
        }
    }
}

fn reverse(shape: &QuipuShape) -> QuipuShape {
    match shape {
        QuipuShape::Path { .. } => shape.clone(),
        QuipuShape::Branched { segments, cords } => {
            let mut segments = segments.clone();
            let mut cords = cords.clone();
            segments.reverse();
            cords.reverse();
            QuipuShape::Branched { segments, cords }
        }
    }
}

/// Folds away end slots whose segment is empty. Such a slot marks a
/// vertex of degree at most 2, so its cord is really a continuation of
/// the main string; swapping it in and renormalizing drops one slot.
/// The result is a path or a shape whose branch points all have degree 3.
fn fold_degenerate_ends(shape: &QuipuShape) -> QuipuShape {
    let mut current = normalize(shape);
    loop {
        match &current {
            QuipuShape::Path { .. } => return current,
            QuipuShape::Branched { segments, .. } => {
                if segments[0] == 0 {
                    current = swap_front(&current);
                } else if *segments.last().unwrap() == 0 {
                    current = swap_back(&current);
                } else {
                    return current;
                }
            }
        }
    }
}

/// All spellings of the quipu reachable from `shape` by swapping either
/// end of the main string with its outermost cord or reversing the whole
/// shape. At most 8 spellings exist; ends of special shapes make some of
/// them coincide. Paths have singleton orbits.
pub fn symmetry_orbit(shape: &QuipuShape) -> BTreeSet<QuipuShape> {
    let seed = fold_degenerate_ends(shape);
    let mut orbit = BTreeSet::new();
    let mut queue = vec![seed];
    while let Some(current) = queue.pop() {
        if !orbit.insert(current.clone()) {
            continue;
        }
        if matches!(current, QuipuShape::Path { .. }) {
            continue;
        }
        for image in [swap_front(&current), swap_back(&current), reverse(&current)] {
            if !orbit.contains(&image) {
                queue.push(image);
            }
        }
    }
    debug_assert!(orbit.len() <= 8);
    orbit
}

/// A shape that is its own canonical form: normalized and minimal in its
/// symmetry orbit under the shape order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalQuipu(QuipuShape);

impl CanonicalQuipu {
    pub fn shape(&self) -> &QuipuShape {
        &self.0
    }

    pub fn into_shape(self) -> QuipuShape {
        self.0
    }

    pub fn vertex_count(&self) -> usize {
        self.0.vertex_count()
    }
}

impl std::fmt::Display for CanonicalQuipu {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// The least spelling in the symmetry orbit. Two shapes describe the
/// same quipu exactly when their canonical forms agree.
pub fn canonical_form(shape: &QuipuShape) -> CanonicalQuipu {
    let orbit = symmetry_orbit(shape);
    CanonicalQuipu(
        orbit
            .into_iter()
            .next()
            .expect("orbit always contains at least one spelling"),
    )
}

/// Whether two spellings describe the same underlying quipu.
pub fn is_isomorphic(a: &QuipuShape, b: &QuipuShape) -> bool {
    canonical_form(a) == canonical_form(b)
}

/// Undirected tree on `0..len()` vertices, as adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tree {
    adjacency: Vec<Vec<usize>>,
}

impl Tree {
    pub fn len(&self) -> usize {
        self.adjacency.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adjacency.is_empty()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    /// Sorted degree sequence.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degrees: Vec<usize> = self.adjacency.iter().map(Vec::len).collect();
        degrees.sort_unstable();
        degrees
    }
}

/// Forgets the orientation of a marked quiver, keeping the underlying
/// tree. Relations leave no trace.
pub fn tree_of_marked(quiver: &MarkedQuipuQuiver) -> Tree {
    let main = quiver.main_len();
    let total = quiver.total_vertices();
    let mut adjacency = vec![Vec::new(); total];
    let mut add = |a: usize, b: usize| {
        adjacency[a].push(b);
        adjacency[b].push(a);
    };
    for i in 0..main.saturating_sub(1) {
        add(i, i + 1);
    }
    let mut next = main;
    for (&position, &length) in quiver.cords() {
        let mut anchor = position - 1;
        for _ in 0..length {
            add(anchor, next);
            anchor = next;
            next += 1;
        }
    }
    Tree { adjacency }
}

/// Expands a shape into its underlying unrooted tree, laid out main
/// string first and then cords in position order.
pub fn to_tree(shape: &QuipuShape) -> Tree {
    tree_of_marked(&embed_quipu(shape))
}

fn subtree_sizes(tree: &Tree, root: usize) -> Vec<usize> {
    let n = tree.len();
    let mut sizes = vec![1usize; n];
    let mut order = Vec::with_capacity(n);
    let mut parent = vec![usize::MAX; n];
    let mut stack = vec![root];
    let mut seen = vec![false; n];
    seen[root] = true;
    while let Some(v) = stack.pop() {
        order.push(v);
        for &w in tree.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = v;
                stack.push(w);
            }
        }
    }
    for &v in order.iter().rev() {
        if parent[v] != usize::MAX {
            sizes[parent[v]] += sizes[v];
        }
    }
    sizes
}

/// The one or two vertices minimizing the largest component left after
/// their removal.
fn centroids(tree: &Tree) -> Vec<usize> {
    let n = tree.len();
    if n == 1 {
        return vec![0];
    }
    let sizes = subtree_sizes(tree, 0);
    let parent_component = |v: usize, w: usize| {
        // size of the component of w after removing v, for w a neighbor
        if sizes[w] < sizes[v] {
            sizes[w]
        } else {
            n - sizes[v]
        }
    };
    let mut best = n;
    let mut result = Vec::new();
    for v in 0..n {
        let worst = tree
            .neighbors(v)
            .iter()
            .map(|&w| parent_component(v, w))
            .max()
            .unwrap_or(0);
        match worst.cmp(&best) {
            std::cmp::Ordering::Less => {
                best = worst;
                result = vec![v];
            }
            std::cmp::Ordering::Equal => result.push(v),
            std::cmp::Ordering::Greater => {}
        }
    }
    result
}

fn rooted_code(tree: &Tree, v: usize, parent: usize) -> String {
    let mut child_codes: Vec<String> = tree
        .neighbors(v)
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| rooted_code(tree, w, v))
        .collect();
    child_codes.sort_unstable();
    let mut code = String::with_capacity(2 + child_codes.iter().map(String::len).sum::<usize>());
    code.push('(');
    for child in child_codes {
        code.push_str(&child);
    }
    code.push(')');
    code
}

/// A name for the unrooted tree: root at the centroid, or at the sorted
/// pair of codes when there are two centroids.
pub fn canonical_tree_code(tree: &Tree) -> String {
    let cs = centroids(tree);
    match cs.as_slice() {
        [c] => rooted_code(tree, *c, usize::MAX),
        [c1, c2] => {
            let mut halves = [rooted_code(tree, *c1, *c2), rooted_code(tree, *c2, *c1)];
            halves.sort_unstable();
            format!("[{}{}]", halves[0], halves[1])
        }
        _ => unreachable!("a tree has one or two centroids"),
    }
}

/// Unrooted tree isomorphism by canonical rooting at the centroid(s).
pub fn ahu_isomorphic(a: &Tree, b: &Tree) -> bool {
    a.len() == b.len() && canonical_tree_code(a) == canonical_tree_code(b)
}
