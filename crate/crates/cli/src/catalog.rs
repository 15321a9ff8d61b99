//! Named instances, materialized as input documents.

use crate::input::{Document, MatroidDoc};

pub const NAMES: &[&str] =
    &["path3", "example-6.2", "matching-k5", "chessboard-2x3", "star-k13", "single-vertex", "u-<r>-<n>"];

fn strs(items: &[&str]) -> Vec<String> {
    items.iter().map(|s| s.to_string()).collect()
}

fn faces(items: &[&str]) -> Vec<Vec<String>> {
    items.iter().map(|f| f.chars().map(String::from).collect()).collect()
}

pub fn lookup(name: &str) -> Option<Document> {
    Some(match name {
        "path3" => Document::Complex { vertices: strs(&["a", "b", "c", "d"]), facets: faces(&["ab", "bc", "cd"]) },
        "example-6.2" => Document::Complex {
            vertices: strs(&["a", "b", "c", "d", "e"]),
            facets: faces(&["ab", "ac", "ad", "ae", "bc", "bd", "de"]),
        },
        "matching-k5" => matching_k5(),
        "chessboard-2x3" => chessboard(2, 3),
        "star-k13" => Document::FamilyPair {
            k: 2,
            ground: strs(&["1", "2", "3", "4"]),
            members: faces(&["12", "13", "14"]),
            sub_members: vec![],
        },
        "single-vertex" => Document::Complex { vertices: strs(&["a"]), facets: faces(&["a"]) },
        _ => return uniform(name),
    })
}

/// `u-<r>-<n>`, for example `u-1-2`.
fn uniform(name: &str) -> Option<Document> {
    let mut parts = name.strip_prefix("u-")?.split('-');
    let r = parts.next()?.parse().ok()?;
    let n = parts.next()?.parse().ok()?;
    if parts.next().is_some() {
        return None;
    }
    Some(Document::Matroid(MatroidDoc::Uniform { r, n }))
}

/// Vertices are the edges `ij` of `K_5`; facets are the maximal matchings.
fn matching_k5() -> Document {
    let edges: Vec<(usize, usize)> = (1..=5).flat_map(|i| (i + 1..=5).map(move |j| (i, j))).collect();
    let name = |(i, j): (usize, usize)| format!("{i}{j}");
    let mut facets = vec![];
    for (a, &e) in edges.iter().enumerate() {
        for &f in &edges[a + 1..] {
            if e.0 != f.0 && e.0 != f.1 && e.1 != f.0 && e.1 != f.1 {
                facets.push(vec![name(e), name(f)]);
            }
        }
    }
    Document::Complex { vertices: edges.into_iter().map(name).collect(), facets }
}

/// Vertices are the cells `rc`; facets are the maximal non-attacking rook placements.
fn chessboard(rows: usize, cols: usize) -> Document {
    assert!(rows <= cols);
    let cell = |r: usize, c: usize| format!("{r}{c}");
    let vertices = (1..=rows).flat_map(|r| (1..=cols).map(move |c| cell(r, c))).collect();
    let mut facets = vec![];
    let mut chosen = vec![];
    place(1, rows, cols, &mut chosen, &mut |cs: &[usize]| {
        facets.push(cs.iter().enumerate().map(|(r, &c)| cell(r + 1, c)).collect());
    });
    Document::Complex { vertices, facets }
}

fn place(row: usize, rows: usize, cols: usize, chosen: &mut Vec<usize>, emit: &mut dyn FnMut(&[usize])) {
    if row > rows {
        emit(chosen);
        return;
    }
    for c in 1..=cols {
        if !chosen.contains(&c) {
            chosen.push(c);
            place(row + 1, rows, cols, chosen, emit);
            chosen.pop();
        }
    }
}
